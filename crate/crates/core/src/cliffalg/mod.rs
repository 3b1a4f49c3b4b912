//! Canonical Clifford algebras over exact rationals, the twisted group
//! algebra of an arrow group, and the matrix-algebra classification.

mod blade;
mod classify;
mod multivector;
mod twisted;

pub use blade::{blade_product, Blade, Signature, MAX_EXACT_N};
pub use classify::{
    center_analysis, claim_report, classify, CenterAnalysis, ClaimEntry, Descriptor, Ring, Verdict, DIRAC,
    MAX_CLASSIFY_N, PAULI,
};
pub use multivector::{mv_multiply, Multivector};
pub use twisted::{
    iso_check, iso_check_with, tensor_power_check, twisted_basis, IsoOptions, IsoOutcome, IsoWitness,
    TensorPowerOutcome, TwistedBasis, DEFAULT_SAMPLES, EXHAUSTIVE_MAX_N,
};
