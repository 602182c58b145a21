//! Permutations of `{1..n}`, stored 0-based.
//!
//! Products act on the right: `x * y` applies `x` first, then `y`, so that
//! `a^(gh) = (a^g)^h`, conjugation is `a^g = g⁻¹ a g` and the commutator is
//! `[a, b] = a⁻¹ b⁻¹ a b`.

use alloc::boxed::Box;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Perm> {
        let n = images.len();
        let mut seen = alloc::vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm { images: images.into_boxed_slice() })
    }

    /// Builds a permutation from 1-based cycles; fixed points may be omitted.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Perm> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = alloc::vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt > degree {
                    return Err(Error::InvalidCycle(format!("point {pt} out of range 1..={degree}")));
                }
                if used[pt - 1] {
                    return Err(Error::InvalidCycle(format!("point {pt} repeated")));
                }
                used[pt - 1] = true;
            }
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u32;
            }
        }
        Ok(Perm { images: images.into_boxed_slice() })
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm { images: inv.into_boxed_slice() }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        let mut out = alloc::vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Perm { images: out.into_boxed_slice() }
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        let conj = a.conjugate_by(b);
        &a.inverse() * &conj
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| other.images[x as usize] == self.images[other.images[i] as usize])
    }

    /// Nontrivial cycles, 1-based, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = alloc::vec![false; n];
        let mut order = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.image(x);
            }
            order = lcm(order, len);
        }
        order
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl Mul for &Perm {
    type Output = Perm;

    fn mul(self, rhs: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), rhs.degree());
        let images = self.images.iter().map(|&x| rhs.images[x as usize]).collect();
        Perm { images }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, pt) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{pt}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
