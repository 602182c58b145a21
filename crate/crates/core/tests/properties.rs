//! Property tests over random permutations, random subgroups of small
//! groups and random abelian families.

mod common;

use common::*;
use fusion_core::{
    p_core, sylow_subgroup, ActionImage, AbelianFamily, Group, LatticeBound, Perm, SubgroupLattice,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn arb_perm(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Perm::from_images(v).unwrap())
}

fn arb_group() -> impl Strategy<Value = Group> {
    (2usize..=6).prop_flat_map(|n| prop::collection::vec(arb_perm(n), 0..3).prop_map(move |gens| group(n, &gens)))
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn small_p_groups() -> Vec<(Group, u64)> {
    vec![
        (heisenberg(), 3),
        (extraspecial_exp9(), 3),
        (wreath_c3_c3(), 3),
        (elementary_abelian(3, 3), 3),
        (dihedral(4), 2),
        (cyclic(25), 5),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn perm_arithmetic(x in arb_perm(7), y in arb_perm(7), z in arb_perm(7)) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert!((&x * &x.inverse()).is_identity());
        prop_assert!((&x.inverse() * &x).is_identity());
        prop_assert!(x.pow(x.order()).is_identity());
        prop_assert_eq!(x.conjugate_by(&y), &(&y.inverse() * &x) * &y);
        let again = Perm::from_cycles(7, &x.cycles()).unwrap();
        prop_assert_eq!(again, x);
    }

    #[test]
    fn closure_is_a_group(g in arb_group(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        prop_assert_eq!(factorial(g.degree()) % g.order(), 0);
        prop_assert!(g.contains(&Perm::identity(g.degree())));
        let x = i.get(g.elements());
        let y = j.get(g.elements());
        prop_assert!(g.contains(&(x * y)));
        prop_assert!(g.contains(&x.inverse()));
    }

    #[test]
    fn subgroup_structure(g in arb_group(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let h = g.cyclic_subgroup(i.get(g.elements())).unwrap();
        let x = j.get(g.elements());
        prop_assert_eq!(g.order() % h.order(), 0);
        prop_assert_eq!(g.conjugate(&h, x).unwrap().order(), h.order());
        let n = g.normalizer(&h).unwrap();
        prop_assert!(h.is_subgroup_of(&n));
        let c = g.centralizer(&h).unwrap();
        prop_assert!(c.is_normal_in(&n));
        prop_assert_eq!(g.center(), g.centralizer(&g).unwrap());
        let a = ActionImage::new(&n, &h).unwrap();
        prop_assert_eq!(a.image().order() * a.kernel().order(), n.order());
        for u in n.generators() {
            for v in n.generators() {
                prop_assert_eq!(a.project(&(u * v)).unwrap(), &a.project(u).unwrap() * &a.project(v).unwrap());
            }
        }
    }

    #[test]
    fn sylow_consistency(g in arb_group()) {
        let order = g.order() as u64;
        for p in [2u64, 3, 5] {
            let s = sylow_subgroup(&g, p).unwrap();
            prop_assert_eq!(s.order() as u64, p_part(order, p));
            let core = p_core(&g, p).unwrap();
            prop_assert!(core.is_normal_in(&g));
            for x in g.elements().iter().step_by(7) {
                let t = g.conjugate(&s, x).unwrap();
                prop_assert_eq!(t.order(), s.order());
                prop_assert!(core.is_subgroup_of(&t));
            }
        }
    }

    #[test]
    fn lattice_invariants(k in 0usize..6) {
        let (g, p) = small_p_groups().swap_remove(k);
        let l = SubgroupLattice::enumerate(&g, p, LatticeBound::DEFAULT).unwrap();
        for i in 0..l.len() {
            prop_assert_eq!(g.order() % l.get(i).order(), 0);
            for j in 0..l.len() {
                prop_assert_eq!(l.is_contained(i, j), l.get(i).is_subgroup_of(l.get(j)));
            }
        }
    }

    #[test]
    fn random_families(k in 0usize..6, picks in subsequence((0usize..64).collect::<Vec<_>>(), 0..6)) {
        let (g, p) = small_p_groups().swap_remove(k);
        let l = SubgroupLattice::enumerate(&g, p, LatticeBound::DEFAULT).unwrap();
        let abelian: Vec<Group> = l.abelian_subgroups().cloned().collect();
        let members: Vec<Group> = picks.iter().map(|&i| abelian[i % abelian.len()].clone()).collect();
        let fam = AbelianFamily::custom(&g, members, "random").unwrap();
        let (i, j) = (fam.meet(), fam.join());
        if !fam.is_empty() {
            prop_assert!(i.is_subgroup_of(&j));
            prop_assert!(i.elements().iter().all(|x| j.elements().iter().all(|y| x.commutes_with(y))));
        } else {
            prop_assert!(i.is_trivial());
        }
        for q in l.subgroups() {
            let r = fam.restrict(q).unwrap();
            prop_assert!(r.members().iter().all(|a| a.is_subgroup_of(q) && fam.contains(a)));
        }
    }
}
