//! Constructions on the enveloping algebra and checkers that compare
//! independent characterizations of dominant dimension and related
//! invariants on concrete algebras.

mod canonical;
mod probes;
mod theorem;

use crate::modrep::ModError;

pub use canonical::{
    a_e_dual, canonical_bimodule, hom_k_coregular_regular, iso_check_1, iso_check_2, iso_check_3, CanonicalBimodule, IsoCheck,
};
pub use probes::{
    bimodule_dual_ext_bridge, conjecture_probe, domdim_via_ext_formula, gendo_symmetric_report, hochschild_report,
    minimal_faithful_projective_injective, pd_bimodule_report, BridgeReport, ConjectureProbe, FormulaReport, GendoReport,
    HochschildReport, PdBimoduleReport,
};
pub use theorem::{check_main_theorem, fky_check, FkyReport, SyzygyCondition, TheoremReport, TheoremRow};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LabError {
    #[error(transparent)]
    Module(#[from] ModError),
    #[error("could not certify an isomorphism: {0}")]
    CertificationFailed(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("independent computations disagree: {0}")]
    Disagreement(String),
}

#[cfg(test)]
mod tests;
