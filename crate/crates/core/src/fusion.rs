//! The fusion system `F_P(G)` of a group at a prime, realized through
//! conjugation witnesses in `G`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use hashbrown::{HashMap, HashSet};

use crate::action::ActionImage;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::lattice::SubgroupLattice;
use crate::perm::Perm;
use crate::settings::{Fault, Settings};
use crate::sylow::{conjugacy_class, is_p_power, p_core, p_part, require_prime, sylow_subgroup};

/// `(G, p, P)` with `P ∈ Syl_p(G)`, plus the subgroup lattice of `P`.
#[derive(Clone, Debug)]
pub struct FusionContext {
    group: Group,
    prime: u64,
    sylow: Group,
    lattice: Arc<SubgroupLattice>,
    settings: Settings,
}

impl FusionContext {
    pub fn new(group: &Group, p: u64, settings: Settings) -> Result<FusionContext> {
        let sylow = sylow_subgroup(group, p)?;
        FusionContext::with_sylow(group, p, &sylow, settings)
    }

    pub fn with_sylow(group: &Group, p: u64, sylow: &Group, settings: Settings) -> Result<FusionContext> {
        require_prime(p)?;
        if !sylow.is_subgroup_of(group) {
            return Err(Error::NotInAmbient);
        }
        if sylow.order() as u64 != p_part(group.order() as u64, p) {
            return Err(Error::PreconditionViolated("P is not a Sylow p-subgroup"));
        }
        let lattice = Arc::new(SubgroupLattice::enumerate(sylow, p, settings.lattice_bound)?);
        Ok(FusionContext { group: group.clone(), prime: p, sylow: sylow.clone(), lattice, settings })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn sylow(&self) -> &Group {
        &self.sylow
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn settings(&self) -> &Settings {
        &self.settings
    }

    fn require_in_p(&self, q: &Group) -> Result<()> {
        if q.is_subgroup_of(&self.sylow) {
            Ok(())
        } else {
            Err(Error::NotInP)
        }
    }

    fn lattice_index(&self, q: &Group) -> Result<usize> {
        self.lattice.index_of(q).ok_or(Error::NotInP)
    }

    /// `Q^F`: all `Q^g ≤ P` for `g ∈ G`.
    pub fn f_conjugates(&self, q: &Group) -> Result<Vec<Group>> {
        self.require_in_p(q)?;
        let mut seen: HashSet<usize> = HashSet::new();
        let mut out = Vec::new();
        for g in self.group.elements() {
            if q.generators().iter().all(|x| self.sylow.contains(&x.conjugate_by(g))) {
                let r = q.conjugate_unchecked(g);
                if seen.insert(self.lattice_index(&r)?) {
                    out.push(r);
                }
            }
        }
        Ok(out)
    }

    fn morphism_key(&self, q: &Group, g: &Perm) -> MorphismKey {
        match self.settings.fault {
            Some(Fault::BrokenDedup) => MorphismKey::Witness(g.clone()),
            _ => MorphismKey::Graph(q.elements().iter().map(|x| x.conjugate_by(g)).collect()),
        }
    }

    /// `Hom_F(Q, R)`: maps induced by `g ∈ G` with `Q^g ≤ R`, one per distinct map.
    pub fn hom(&self, q: &Group, r: &Group) -> Result<Vec<FusionMorphism>> {
        self.require_in_p(q)?;
        self.require_in_p(r)?;
        let mut seen: HashSet<MorphismKey> = HashSet::new();
        let mut out = Vec::new();
        for g in self.group.elements() {
            if !q.generators().iter().all(|x| r.contains(&x.conjugate_by(g))) {
                continue;
            }
            if seen.insert(self.morphism_key(q, g)) {
                out.push(FusionMorphism::induced(q, r, g));
            }
        }
        Ok(out)
    }

    /// `Aut_F(Q) = Hom_F(Q, Q)`.
    pub fn aut(&self, q: &Group) -> Result<Vec<FusionMorphism>> {
        self.hom(q, q)
    }

    fn scan_indices(&self, scan: SubgroupScan) -> Vec<usize> {
        match scan {
            SubgroupScan::ClassRepresentatives => self.lattice.class_representatives(),
            SubgroupScan::All => (0..self.lattice.len()).collect(),
        }
    }

    /// Every morphism `Q → P` of `F` is induced by an element of `P`.
    pub fn nilpotent_by_morphisms(&self, scan: SubgroupScan) -> Result<bool> {
        for i in self.scan_indices(scan) {
            let q = self.lattice.get(i);
            let from_p: HashSet<MorphismKey> =
                self.sylow.elements().iter().map(|x| self.morphism_key(q, x)).collect();
            for g in self.group.elements() {
                if q.generators().iter().all(|x| self.sylow.contains(&x.conjugate_by(g)))
                    && !from_p.contains(&self.morphism_key(q, g))
                {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `N_G(Q)/C_G(Q)` is a p-group for every `Q ≤ P`.
    pub fn nilpotent_by_automizers(&self, scan: SubgroupScan) -> Result<bool> {
        for i in self.scan_indices(scan) {
            let q = self.lattice.get(i);
            let n = self.group.normalizer(q)?;
            let image = ActionImage::new(&n, q)?;
            if !is_p_power(image.image().order() as u64, self.prime) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `F = F_P(P)`, decided by both the morphism scan and the automizer
    /// test; a disagreement is reported as an error.
    pub fn is_nilpotent(&self) -> Result<bool> {
        let by_morphisms = self.nilpotent_by_morphisms(SubgroupScan::ClassRepresentatives)?;
        let by_automizers = self.nilpotent_by_automizers(SubgroupScan::ClassRepresentatives)?;
        if by_morphisms != by_automizers {
            return Err(Error::MethodDisagreement {
                check: "fusion nilpotency",
                detail: alloc::format!("morphism scan says {by_morphisms}, automizer test says {by_automizers}"),
            });
        }
        Ok(by_morphisms)
    }

    /// For each `u ∈ P`, the elements of `P` that are G-conjugate to `u`.
    pub fn element_fusion(&self) -> HashMap<Perm, Vec<Perm>> {
        let mut out: HashMap<Perm, Vec<Perm>> = HashMap::new();
        for u in self.sylow.elements() {
            if out.contains_key(u) {
                continue;
            }
            let class: Vec<Perm> =
                conjugacy_class(&self.group, u).into_iter().filter(|y| self.sylow.contains(y)).collect();
            for y in &class {
                out.insert(y.clone(), class.clone());
            }
        }
        out
    }

    pub fn is_strongly_closed(&self, d: &Group) -> Result<bool> {
        self.require_in_p(d)?;
        Ok(strongly_closed_with(&self.element_fusion(), d))
    }

    /// All strongly closed subgroups of P, in lattice order.
    pub fn strongly_closed_subgroups(&self) -> Vec<Group> {
        let fusion = self.element_fusion();
        self.lattice.subgroups().iter().filter(|d| strongly_closed_with(&fusion, d)).cloned().collect()
    }

    /// `C_P(R) = Z(R)` for every `R ∈ Q^F`.
    pub fn is_f_centric(&self, q: &Group) -> Result<bool> {
        for r in self.f_conjugates(q)? {
            if self.sylow.centralizer(&r)? != r.center() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `Q ⊴ F`: `Q ⊴ P` and every morphism `φ: R → P` has a witness in
    /// `C_G(R)·g ∩ N_G(Q)`, i.e. extends to `RQ` fixing `Q`.
    pub fn is_normal_in_f(&self, q: &Group) -> Result<bool> {
        self.require_in_p(q)?;
        if !q.is_normalized_by_group(&self.sylow) {
            return Ok(false);
        }
        let nq = self.group.normalizer(q)?;
        for r in self.lattice.subgroups() {
            let c = self.group.centralizer(r)?;
            let mut allowed: HashSet<Perm> = HashSet::new();
            for x in c.elements() {
                for y in nq.elements() {
                    allowed.insert(x * y);
                }
            }
            for g in self.group.elements() {
                if r.generators().iter().all(|x| self.sylow.contains(&x.conjugate_by(g))) && !allowed.contains(g) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Some `Q ⊴ F` is F-centric.
    pub fn is_constrained(&self) -> Result<bool> {
        for (i, q) in self.lattice.subgroups().iter().enumerate().rev() {
            if self.lattice.is_normal(i) && self.is_f_centric(q)? && self.is_normal_in_f(q)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// `C_G(O_p(G)) ≤ O_p(G)`.
    pub fn model_condition(&self) -> Result<bool> {
        let core = p_core(&self.group, self.prime)?;
        Ok(self.group.centralizer(&core)?.is_subgroup_of(&core))
    }

    /// `(N_G(Q), p, P)` for `Q ⊴ P`, realizing `N_F(Q)`.
    pub fn normalizer_system(&self, q: &Group) -> Result<FusionContext> {
        self.require_in_p(q)?;
        if !q.is_normalized_by_group(&self.sylow) {
            return Err(Error::NotNormalInP);
        }
        Ok(FusionContext {
            group: self.group.normalizer(q)?,
            prime: self.prime,
            sylow: self.sylow.clone(),
            lattice: Arc::clone(&self.lattice),
            settings: self.settings,
        })
    }

    /// Morphisms of `Hom_F(R, S)` that extend to `RQ → SQ` with `Q` fixed,
    /// filtered straight from the definition of `N_F(Q)`.
    pub fn normalizer_hom_by_extension(&self, q: &Group, r: &Group, s: &Group) -> Result<Vec<FusionMorphism>> {
        let nq = self.group.normalizer(q)?;
        let c = self.group.centralizer(r)?;
        let mut out = Vec::new();
        for phi in self.hom(r, s)? {
            let extends = c.elements().iter().any(|x| nq.contains(&(x * &phi.witness)));
            if extends {
                out.push(phi);
            }
        }
        Ok(out)
    }
}

fn strongly_closed_with(fusion: &HashMap<Perm, Vec<Perm>>, d: &Group) -> bool {
    d.elements().iter().all(|u| fusion.get(u).is_some_and(|class| class.iter().all(|y| d.contains(y))))
}

/// Which subgroups of P a nilpotency scan visits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupScan {
    ClassRepresentatives,
    All,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum MorphismKey {
    Graph(Vec<Perm>),
    Witness(Perm),
}

/// An injective homomorphism `Q → R` induced by conjugation.
#[derive(Clone, Debug)]
pub struct FusionMorphism {
    pub source: Group,
    pub target: Group,
    /// Images of `source.elements()`, in the same order.
    pub images: Vec<Perm>,
    pub witness: Perm,
}

impl FusionMorphism {
    fn induced(q: &Group, r: &Group, g: &Perm) -> FusionMorphism {
        FusionMorphism {
            source: q.clone(),
            target: r.clone(),
            images: q.elements().iter().map(|x| x.conjugate_by(g)).collect(),
            witness: g.clone(),
        }
    }

    pub fn apply(&self, x: &Perm) -> Option<&Perm> {
        self.source.elements().binary_search(x).ok().map(|i| &self.images[i])
    }

    pub fn is_identity(&self) -> bool {
        self.images.as_slice() == self.source.elements()
    }

    /// Same map as `other`, compared by graph.
    pub fn same_map(&self, other: &FusionMorphism) -> bool {
        self.source == other.source && self.images == other.images
    }
}
