//! Fusion systems of finite permutation groups.
//!
//! The crate builds permutation groups by closure, enumerates subgroup
//! lattices of p-groups, realizes the fusion system `F_P(G)` through
//! conjugation in `G`, and checks p-nilpotency criteria phrased in terms of
//! families of abelian subgroups (`J_𝒜`, `I_𝒜`, `𝒜|Q`), the Thompson
//! subgroup and the replacement construction.
//!
//! Everything here is `no_std` with `alloc`; IO lives in the companion CLI crate.
#![no_std]

extern crate alloc;

pub mod action;
pub mod auto;
pub mod criteria;
pub mod error;
pub mod fusion;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod settings;
pub mod sylow;

pub use action::ActionImage;
pub use error::{Error, Result};
pub use fusion::{FusionContext, FusionMorphism, SubgroupScan};
pub use group::{Group, Subgroup, DEFAULT_ELEMENT_LIMIT};
pub use lattice::{
    is_elementary_abelian, nilpotency_class, normal_class_le2_subgroups, thompson_j, thompson_zj, AbelianFamily,
    FamilyKind, LatticeBound, SubgroupLattice,
};
pub use perm::Perm;
pub use settings::{Fault, Quantifier, Settings, StabilityMode};
pub use sylow::{is_p_group, is_prime, p_core, p_part, p_prime_generated, sylow_subgroup};
