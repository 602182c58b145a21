//! Built-in corpus of small groups.

use fusion_core::Perm;

use crate::groupfile::GroupFile;

fn perm_from_fn(degree: usize, f: impl Fn(usize) -> usize) -> Perm {
    Perm::from_images((0..degree).map(|i| f(i) as u32).collect()).expect("catalog map is a bijection")
}

fn cycle(degree: usize, points: &[usize]) -> Perm {
    Perm::from_cycles(degree, &[points.to_vec()]).expect("catalog cycle is valid")
}

fn cyclic(n: usize) -> GroupFile {
    let gens = if n == 1 { vec![] } else { vec![perm_from_fn(n, |i| (i + 1) % n)] };
    GroupFile::from_perms(&format!("C{n}"), n, &gens)
}

fn dihedral(n: usize) -> GroupFile {
    let rot = perm_from_fn(n, |i| (i + 1) % n);
    let refl = perm_from_fn(n, |i| n - 1 - i);
    GroupFile::from_perms(&format!("D{}", 2 * n), n, &[rot, refl])
}

fn symmetric(n: usize) -> GroupFile {
    let gens = if n == 2 {
        vec![cycle(2, &[1, 2])]
    } else {
        vec![cycle(n, &(1..=n).collect::<Vec<_>>()), cycle(n, &[1, 2])]
    };
    GroupFile::from_perms(&format!("S{n}"), n, &gens)
}

fn alternating(n: usize) -> GroupFile {
    let gens: Vec<Perm> = (3..=n).map(|k| cycle(n, &[1, 2, k])).collect();
    GroupFile::from_perms(&format!("A{n}"), n, &gens)
}

fn elementary_abelian(p: usize, rank: usize) -> GroupFile {
    let degree = p * rank;
    let gens: Vec<Perm> = (0..rank).map(|r| cycle(degree, &(r * p + 1..=r * p + p).collect::<Vec<_>>())).collect();
    GroupFile::from_perms(&format!("C{p}^{rank}"), degree, &gens)
}

/// Affine maps `(a, b) ↦ (a + s, b + t·a + u)` of `F_3²`; point `(a, b)` is `a + 3b`.
fn heisenberg_generators(degree: usize) -> Vec<Perm> {
    let at = |a: usize, b: usize| a % 3 + 3 * (b % 3);
    let x = perm_from_fn(degree, |i| if i < 9 { at(i % 3 + 1, i / 3) } else { i });
    let y = perm_from_fn(degree, |i| if i < 9 { at(i % 3, i / 3 + i % 3) } else { i });
    vec![x, y]
}

fn extraspecial_exp3() -> GroupFile {
    GroupFile::from_perms("3^1+2_exp3", 9, &heisenberg_generators(9))
}

fn extraspecial_exp9() -> GroupFile {
    let x = perm_from_fn(9, |i| (i + 1) % 9);
    let y = perm_from_fn(9, |i| (4 * i) % 9);
    GroupFile::from_perms("3^1+2_exp9", 9, &[x, y])
}

fn heisenberg_times_c3() -> GroupFile {
    let mut gens = heisenberg_generators(12);
    gens.push(cycle(12, &[10, 11, 12]));
    GroupFile::from_perms("3^1+2_exp3xC3", 12, &gens)
}

fn wreath_c3_c3() -> GroupFile {
    let base = cycle(9, &[1, 2, 3]);
    let top = Perm::from_cycles(9, &[vec![1, 4, 7], vec![2, 5, 8], vec![3, 6, 9]]).expect("valid");
    GroupFile::from_perms("C3wrC3", 9, &[base, top])
}

/// `SL(2,3)` acting on the eight nonzero row vectors of `F_3²`.
fn sl23() -> GroupFile {
    let vectors: Vec<(usize, usize)> = (0..9).map(|i| (i % 3, i / 3)).filter(|&v| v != (0, 0)).collect();
    let index = |v: (usize, usize)| vectors.iter().position(|&w| w == v).expect("nonzero vector");
    let act = |m: [[usize; 2]; 2]| {
        perm_from_fn(8, |i| {
            let (a, b) = vectors[i];
            index(((a * m[0][0] + b * m[1][0]) % 3, (a * m[0][1] + b * m[1][1]) % 3))
        })
    };
    GroupFile::from_perms("SL(2,3)", 8, &[act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

/// `C_q ⋊ C_3` acting on `Z/q` by `x ↦ x + 1` and `x ↦ m·x`, `m` of order 3.
fn frobenius_cq_c3(q: usize, m: usize) -> GroupFile {
    let shift = perm_from_fn(q, |i| (i + 1) % q);
    let mult = perm_from_fn(q, |i| (m * i) % q);
    GroupFile::from_perms(&format!("C{q}:C3"), q, &[shift, mult])
}

/// `PSL(2,7)` on the projective line `{0..6, ∞}` by `x ↦ x + 1` and `x ↦ -1/x`.
fn psl27() -> GroupFile {
    const INF: usize = 7;
    let inv = |x: usize| (1..7).find(|y| x * y % 7 == 1).expect("unit");
    let t = perm_from_fn(8, |x| if x == INF { INF } else { (x + 1) % 7 });
    let s = perm_from_fn(8, |x| match x {
        INF => 0,
        0 => INF,
        _ => (7 - inv(x)) % 7,
    });
    GroupFile::from_perms("PSL(2,7)", 8, &[t, s])
}

/// Cyclic `C_2..C_30`, dihedral `D_6..D_30`, `S_2..S_6`, `A_3..A_6`,
/// elementary abelian `3²,3³,5²,5³`, both extraspecial groups of order 27,
/// `3^{1+2} × C3`, `C3 ≀ C3`, `SL(2,3)`, `C7⋊C3`, `C13⋊C3` and `PSL(2,7)`.
pub fn builtin_catalog() -> Vec<GroupFile> {
    let mut out: Vec<GroupFile> = (2..=30).map(cyclic).collect();
    out.extend((3..=15).map(dihedral));
    out.extend((2..=6).map(symmetric));
    out.extend((3..=6).map(alternating));
    for (p, r) in [(3, 2), (3, 3), (5, 2), (5, 3)] {
        out.push(elementary_abelian(p, r));
    }
    out.push(extraspecial_exp3());
    out.push(extraspecial_exp9());
    out.push(heisenberg_times_c3());
    out.push(wreath_c3_c3());
    out.push(sl23());
    out.push(frobenius_cq_c3(7, 2));
    out.push(frobenius_cq_c3(13, 3));
    out.push(psl27());
    out
}

pub fn lookup(name: &str) -> Option<GroupFile> {
    builtin_catalog().into_iter().find(|g| g.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(name: &str) -> usize {
        lookup(name).unwrap_or_else(|| panic!("{name} missing")).build().unwrap().order()
    }

    #[test]
    fn named_orders() {
        assert_eq!(order("SL(2,3)"), 24);
        assert_eq!(order("C7:C3"), 21);
        assert_eq!(order("C13:C3"), 39);
        assert_eq!(order("PSL(2,7)"), 168);
        assert_eq!(order("3^1+2_exp3"), 27);
        assert_eq!(order("3^1+2_exp9"), 27);
        assert_eq!(order("3^1+2_exp3xC3"), 81);
        assert_eq!(order("C3wrC3"), 81);
        assert_eq!(order("S6"), 720);
        assert_eq!(order("A6"), 360);
        assert_eq!(order("D30"), 30);
        assert_eq!(order("C5^3"), 125);
    }

    #[test]
    fn extraspecial_exponents() {
        let e3 = lookup("3^1+2_exp3").unwrap().build().unwrap();
        assert!(e3.elements().iter().all(|x| x.pow(3).is_identity()));
        assert!(!e3.is_abelian());
        let e9 = lookup("3^1+2_exp9").unwrap().build().unwrap();
        assert!(e9.elements().iter().any(|x| x.order() == 9));
        assert!(!e9.is_abelian());
    }

    #[test]
    fn names_are_unique_and_round_trip() {
        let cat = builtin_catalog();
        for (i, g) in cat.iter().enumerate() {
            assert!(cat[i + 1..].iter().all(|h| h.name != g.name), "duplicate {}", g.name);
            let text = g.serialize();
            let back = GroupFile::parse(&text).unwrap();
            assert_eq!(&back, g);
            assert_eq!(back.serialize(), text);
        }
    }
}
