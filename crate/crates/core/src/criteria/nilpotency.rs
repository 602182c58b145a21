//! p-nilpotency, decided two independent ways.

use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::{LatticeBound, SubgroupLattice};
use crate::sylow::{is_p_power, p_part, p_prime_generated, sylow_subgroup};

/// Frobenius: `N_G(Q)/C_G(Q)` is a p-group for every `Q` up to conjugacy in
/// one Sylow p-subgroup.
pub fn frobenius_quotient_test(g: &Group, p: u64, bound: LatticeBound) -> Result<bool> {
    let sylow = sylow_subgroup(g, p)?;
    let lattice = SubgroupLattice::enumerate(&sylow, p, bound)?;
    for i in lattice.class_representatives() {
        let q = lattice.get(i);
        let n = g.normalizer(q)?.order();
        let c = g.centralizer(q)?.order();
        if !is_p_power((n / c) as u64, p) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The p′-elements generate a subgroup of order `|G| / |G|_p`.
pub fn complement_test(g: &Group, p: u64) -> Result<bool> {
    let order = g.order() as u64;
    Ok(p_prime_generated(g, p)?.order() as u64 == order / p_part(order, p))
}

/// `G` has a normal p-complement; both tests must agree.
pub fn is_p_nilpotent(g: &Group, p: u64, bound: LatticeBound) -> Result<bool> {
    let frobenius = frobenius_quotient_test(g, p, bound)?;
    let complement = complement_test(g, p)?;
    if frobenius != complement {
        return Err(Error::MethodDisagreement {
            check: "p-nilpotency",
            detail: alloc::format!("Frobenius test says {frobenius}, complement oracle says {complement}"),
        });
    }
    Ok(frobenius)
}
