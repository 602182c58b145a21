//! Sylow theory: Sylow subgroups, the p-core `O_p(G)` and the subgroup
//! generated by the p′-elements.

use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Perm;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// True when `n = p^k` for some `k ≥ 0`.
pub fn is_p_power(n: u64, p: u64) -> bool {
    n > 0 && p_part(n, p) == n
}

/// Exponent `k` with `n = p^k`, if `n` is a power of `p`.
pub fn p_log(n: u64, p: u64) -> Option<u32> {
    if !is_p_power(n, p) {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m > 1 {
        m /= p;
        k += 1;
    }
    Some(k)
}

/// Odd primes dividing `n`, ascending.
pub fn odd_prime_divisors(n: u64) -> Vec<u64> {
    (3..=n).filter(|&q| n.is_multiple_of(q) && is_prime(q)).collect()
}

pub fn is_p_group(g: &Group, p: u64) -> bool {
    is_p_power(g.order() as u64, p)
}

/// A Sylow p-subgroup of `g`, grown from the trivial subgroup by
/// normalizer climbing: while `S` is not Sylow, `N_G(S)/S` has an element of
/// order p, whose preimages `x ∉ S` with `x^p ∈ S` extend `S` to `S⟨x⟩`.
///
/// For `p ∤ |G|` the trivial subgroup is returned.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Group> {
    require_prime(p)?;
    let target = p_part(g.order() as u64, p) as usize;
    let mut s = Group::trivial(g.degree());
    while s.order() < target {
        let n = g.normalizer(&s)?;
        let x = n
            .elements()
            .iter()
            .find(|x| !s.contains(x) && s.contains(&x.pow(p)))
            .ok_or(Error::PropertyFailure("normalizer climbing stalled below the Sylow order"))?
            .clone();
        let mut gens = s.generators().to_vec();
        gens.push(x);
        s = g.subgroup(&gens)?;
    }
    Ok(s)
}

/// The G-conjugacy class of `x`, by orbit under the generators of `g`.
pub fn conjugacy_class(g: &Group, x: &Perm) -> Vec<Perm> {
    let mut seen: HashSet<Perm> = HashSet::new();
    seen.insert(x.clone());
    let mut queue = alloc::vec![x.clone()];
    let mut head = 0;
    while head < queue.len() {
        let y = queue[head].clone();
        head += 1;
        for s in g.generators() {
            let z = y.conjugate_by(s);
            if seen.insert(z.clone()) {
                queue.push(z);
            }
        }
    }
    queue.sort_unstable();
    queue
}

/// Distinct conjugates `H^g`, `g ∈ G`, in discovery order starting from `H`.
pub fn subgroup_conjugates(g: &Group, h: &Group) -> Result<Vec<Group>> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotInAmbient);
    }
    let mut out = alloc::vec![h.clone()];
    let mut head = 0;
    while head < out.len() {
        let k = out[head].clone();
        head += 1;
        for s in g.generators() {
            let c = k.conjugate_unchecked(s);
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// `O_p(G)`: the elements of a Sylow p-subgroup whose whole G-class stays
/// inside it, i.e. the intersection of all Sylow p-subgroups.
pub fn p_core(g: &Group, p: u64) -> Result<Group> {
    let sylow = sylow_subgroup(g, p)?;
    let elements = sylow
        .elements()
        .iter()
        .filter(|x| conjugacy_class(g, x).iter().all(|y| sylow.contains(y)))
        .cloned()
        .collect();
    Ok(Group::from_subgroup_elements(g.degree(), elements))
}

/// `⟨x ∈ G : gcd(ord(x), p) = 1⟩`.
pub fn p_prime_generated(g: &Group, p: u64) -> Result<Group> {
    require_prime(p)?;
    let mut current = Group::trivial(g.degree());
    for x in g.elements() {
        if x.order() % p != 0 && !current.contains(x) {
            let mut gens = current.generators().to_vec();
            gens.push(x.clone());
            current = g.subgroup(&gens)?;
        }
    }
    Ok(current)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(degree: usize, cycles: &[&[usize]]) -> Perm {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Perm::from_cycles(degree, &cycles).unwrap()
    }

    fn s4() -> Group {
        Group::generated(4, &[p(4, &[&[1, 2, 3, 4]]), p(4, &[&[1, 2]])]).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_part(24, 3), 3);
        assert_eq!(p_part(24, 5), 1);
        assert_eq!(p_log(81, 3), Some(4));
        assert_eq!(p_log(12, 3), None);
        assert_eq!(odd_prime_divisors(360), vec![3, 5]);
        assert!(!is_prime(1) && is_prime(13) && !is_prime(15));
    }

    #[test]
    fn sylow_orders_in_s4() {
        let g = s4();
        assert_eq!(sylow_subgroup(&g, 3).unwrap().order(), 3);
        let d8 = sylow_subgroup(&g, 2).unwrap();
        assert_eq!(d8.order(), 8);
        assert!(!d8.is_abelian());
        assert!(sylow_subgroup(&g, 5).unwrap().is_trivial());
        assert_eq!(sylow_subgroup(&g, 4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn p_core_of_s4() {
        let g = s4();
        assert_eq!(p_core(&g, 2).unwrap().order(), 4);
        assert!(p_core(&g, 3).unwrap().is_trivial());
    }

    #[test]
    fn p_prime_generated_of_s4_at_3_is_everything() {
        let g = s4();
        assert_eq!(p_prime_generated(&g, 3).unwrap(), g);
        assert_eq!(subgroup_conjugates(&g, &sylow_subgroup(&g, 3).unwrap()).unwrap().len(), 4);
    }
}
