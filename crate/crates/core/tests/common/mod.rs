//! Small groups and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use fusion_core::{Group, Perm};

pub fn perm(degree: usize, cycles: &[&[usize]]) -> Perm {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Perm::from_cycles(degree, &cycles).unwrap()
}

pub fn from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Perm {
    Perm::from_images((0..degree).map(|i| f(i) as u32).collect()).unwrap()
}

pub fn group(degree: usize, gens: &[Perm]) -> Group {
    Group::generated(degree, gens).unwrap()
}

pub fn cyclic(n: usize) -> Group {
    group(n, &[from_fn(n, |i| (i + 1) % n)])
}

pub fn symmetric(n: usize) -> Group {
    let all: Vec<usize> = (1..=n).collect();
    group(n, &[perm(n, &[&all]), perm(n, &[&[1, 2]])])
}

pub fn alternating(n: usize) -> Group {
    let gens: Vec<Perm> = (3..=n).map(|k| perm(n, &[&[1, 2, k]])).collect();
    group(n, &gens)
}

pub fn dihedral(n: usize) -> Group {
    group(n, &[from_fn(n, |i| (i + 1) % n), from_fn(n, |i| n - 1 - i)])
}

pub fn elementary_abelian(p: usize, rank: usize) -> Group {
    let degree = p * rank;
    let gens: Vec<Perm> = (0..rank).map(|r| from_fn(degree, |i| if i / p == r { r * p + (i + 1) % p } else { i })).collect();
    group(degree, &gens)
}

/// Extraspecial of order 27 and exponent 3, as affine maps of `F_3²`.
pub fn heisenberg() -> Group {
    let at = |a: usize, b: usize| a % 3 + 3 * (b % 3);
    let x = from_fn(9, |i| at(i % 3 + 1, i / 3));
    let y = from_fn(9, |i| at(i % 3, i / 3 + i % 3));
    group(9, &[x, y])
}

/// Extraspecial of order 27 and exponent 9: `x ↦ x + 1`, `x ↦ 4x` on `Z/9`.
pub fn extraspecial_exp9() -> Group {
    group(9, &[from_fn(9, |i| (i + 1) % 9), from_fn(9, |i| (4 * i) % 9)])
}

pub fn wreath_c3_c3() -> Group {
    group(9, &[perm(9, &[&[1, 2, 3]]), perm(9, &[&[1, 4, 7], &[2, 5, 8], &[3, 6, 9]])])
}

/// `SL(2,3)` on the eight nonzero vectors of `F_3²`.
pub fn sl23() -> Group {
    let vectors: Vec<(usize, usize)> = (0..9).map(|i| (i % 3, i / 3)).filter(|&v| v != (0, 0)).collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).unwrap();
    let act = |m: [[usize; 2]; 2]| {
        from_fn(8, |i| {
            let (a, b) = vectors[i];
            index(((a * m[0][0] + b * m[1][0]) % 3, (a * m[0][1] + b * m[1][1]) % 3))
        })
    };
    group(8, &[act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

/// `C_q ⋊ C_3` with `m` of multiplicative order 3 mod `q`.
pub fn frobenius(q: usize, m: usize) -> Group {
    group(q, &[from_fn(q, |i| (i + 1) % q), from_fn(q, |i| (m * i) % q)])
}

pub fn psl27() -> Group {
    const INF: usize = 7;
    let inv = |x: usize| (1..7).find(|y| x * y % 7 == 1).unwrap();
    let t = from_fn(8, |x| if x == INF { INF } else { (x + 1) % 7 });
    let s = from_fn(8, |x| match x {
        INF => 0,
        0 => INF,
        _ => (7 - inv(x)) % 7,
    });
    group(8, &[t, s])
}

/// Named small groups used across the suites.
pub fn zoo() -> Vec<(&'static str, Group)> {
    vec![
        ("S3", symmetric(3)),
        ("S4", symmetric(4)),
        ("A4", alternating(4)),
        ("A5", alternating(5)),
        ("D10", dihedral(5)),
        ("C6", cyclic(6)),
        ("C9", cyclic(9)),
        ("C3^2", elementary_abelian(3, 2)),
        ("C3^3", elementary_abelian(3, 3)),
        ("3^1+2_exp3", heisenberg()),
        ("3^1+2_exp9", extraspecial_exp9()),
        ("C3wrC3", wreath_c3_c3()),
        ("SL(2,3)", sl23()),
        ("C7:C3", frobenius(7, 2)),
        ("PSL(2,7)", psl27()),
    ]
}

pub fn element_set(g: &Group) -> BTreeSet<Perm> {
    g.elements().iter().cloned().collect()
}

/// Closure of a set of elements by repeated multiplication, independent of
/// the library's closure.
pub fn brute_closure(degree: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut set: BTreeSet<Perm> = BTreeSet::new();
    set.insert(Perm::identity(degree));
    loop {
        let current: Vec<Perm> = set.iter().cloned().collect();
        let mut grew = false;
        for x in &current {
            for g in gens {
                if set.insert(x * g) {
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

pub fn brute_normalizer(g: &Group, h: &Group) -> BTreeSet<Perm> {
    let hs: HashSet<&Perm> = h.elements().iter().collect();
    g.elements()
        .iter()
        .filter(|x| h.elements().iter().all(|y| hs.contains(&y.conjugate_by(x))))
        .cloned()
        .collect()
}

pub fn brute_centralizer(g: &Group, h: &Group) -> BTreeSet<Perm> {
    g.elements().iter().filter(|x| h.elements().iter().all(|y| x.commutes_with(y))).cloned().collect()
}

pub fn brute_derived(g: &Group) -> BTreeSet<Perm> {
    let comms: Vec<Perm> =
        g.elements().iter().flat_map(|a| g.elements().iter().map(move |b| Perm::commutator(a, b))).collect();
    brute_closure(g.degree(), &comms)
}

pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

pub fn is_p_power(mut n: u64, p: u64) -> bool {
    while n > 1 && n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// Every subgroup of a small group, found as closures of pairs of cyclic
/// subgroups iterated to a fixpoint (joins of the current set).
pub fn brute_subgroups(g: &Group) -> Vec<BTreeSet<Perm>> {
    let degree = g.degree();
    let mut found: BTreeSet<BTreeSet<Perm>> = g.elements().iter().map(|x| brute_closure(degree, std::slice::from_ref(x))).collect();
    loop {
        let current: Vec<BTreeSet<Perm>> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let gens: Vec<Perm> = a.iter().chain(b.iter()).cloned().collect();
                if found.insert(brute_closure(degree, &gens)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return found.into_iter().collect();
        }
    }
}
