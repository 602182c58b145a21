//! p-stability: for every p-subgroup `Q` and `g ∈ N_G(Q)` with
//! `[Q, g, g] = 1`, the image of `g` in `N_G(Q)/C_G(Q)` lies in its p-core.

use crate::action::ActionImage;
use crate::error::Result;
use crate::group::Group;
use crate::lattice::{LatticeBound, SubgroupLattice};
use crate::perm::Perm;
use crate::settings::StabilityMode;
use crate::sylow::{p_core, sylow_subgroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityOutcome {
    pub stable: bool,
    /// Decided by the abelian Sylow 2-subgroup criterion alone.
    pub via_shortcut: bool,
    /// A p-subgroup `Q` and `g ∈ N_G(Q)` with `[Q, g, g] = 1` whose image
    /// escapes the p-core.
    pub witness: Option<(Group, Perm)>,
}

/// `[[q, g], g] = 1` for all `q ∈ Q`.
pub fn double_commutator_trivial(q: &Group, g: &Perm) -> bool {
    q.elements().iter().all(|x| Perm::commutator(&Perm::commutator(x, g), g).is_identity())
}

pub fn is_p_stable(g: &Group, p: u64, mode: StabilityMode, bound: LatticeBound) -> Result<StabilityOutcome> {
    if mode == StabilityMode::Shortcut && p != 2 && sylow_subgroup(g, 2)?.is_abelian() {
        return Ok(StabilityOutcome { stable: true, via_shortcut: true, witness: None });
    }
    let sylow = sylow_subgroup(g, p)?;
    let lattice = SubgroupLattice::enumerate(&sylow, p, bound)?;
    let reps = lattice.class_representatives();
    let subgroups = reps.iter().map(|&i| lattice.get(i));
    Ok(match stability_witness(g, p, subgroups)? {
        Some(w) => StabilityOutcome { stable: false, via_shortcut: false, witness: Some(w) },
        None => StabilityOutcome { stable: true, via_shortcut: false, witness: None },
    })
}

/// First violation of p-stability among the given p-subgroups.
pub fn stability_witness<'a>(
    g: &Group,
    p: u64,
    subgroups: impl IntoIterator<Item = &'a Group>,
) -> Result<Option<(Group, Perm)>> {
    for q in subgroups {
        let n = g.normalizer(q)?;
        let action = ActionImage::new(&n, q)?;
        let core = p_core(action.image(), p)?;
        for x in n.elements() {
            if double_commutator_trivial(q, x) && !core.contains(&action.project(x)?) {
                return Ok(Some((q.clone(), x.clone())));
            }
        }
    }
    Ok(None)
}
