use crate::lattice::LatticeBound;

/// Deliberate defects used to prove that the checkers catch broken engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    /// Fusion morphisms are keyed by their witness element instead of the
    /// graph of the induced map, so equal maps no longer collapse.
    BrokenDedup,
    /// After the hypotheses of a normality check are evaluated, the family
    /// is swapped for the first non-normal cyclic subgroup of P.
    CorruptedFamily,
}

/// Reading of the quantifier over `A` in the replacement-closure condition.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Quantifier {
    /// Every offending `A` must have all of its replacements in the family.
    #[default]
    Universal,
    /// Some offending `A` must have all of its replacements in the family.
    Existential,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StabilityMode {
    /// Accept abelian Sylow 2-subgroups as sufficient, else run the full check.
    #[default]
    Shortcut,
    Full,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Settings {
    pub lattice_bound: LatticeBound,
    pub quantifier: Quantifier,
    pub stability: StabilityMode,
    pub fault: Option<Fault>,
}
