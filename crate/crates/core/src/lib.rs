//! Clifford algebras realized by signed-permutation groups, and the
//! geometric checks built on top of them.
//!
//! - [`sigperm`]: signed permutations and their group law.
//! - [`dyadic`]: the index-doubling tree and anticommuting generator families.
//! - [`arrowgroup`]: group closure and relation checking.
//! - [`cliffalg`]: exact Clifford algebras, structure-constant isomorphism
//!   checks, and the matrix-algebra classification.
//! - [`cosmos`]: a 9×9 endomorphism, its invariant coordinate subspaces and
//!   commutant dimensions.
//! - [`unitary`]: realification `U(n) → O(2n)`, sphere orbits and joins.
//! - [`minimal`]: mean curvature of product-sphere hypersurfaces.
//! - [`report`] and [`suite`]: machine-readable verification reports.

pub mod arrowgroup;
pub mod cliffalg;
pub mod config;
pub mod cosmos;
pub mod dyadic;
pub mod error;
pub mod exact;
pub mod minimal;
pub mod report;
pub mod sigperm;
pub mod suite;
pub mod unitary;

pub use arrowgroup::{generate, verify_relations, ArrowGroup, RelationReport};
pub use cliffalg::{classify, iso_check, Blade, Descriptor, Multivector, Signature};
pub use config::Config;
pub use cosmos::{CoordSubspace, EndoF};
pub use dyadic::{pauli_string_family, DyadicTree, GeneratorFamily};
pub use error::{Error, Result};
pub use report::{Check, Status, VerificationReport};
pub use sigperm::{SignTransitionPair, SignedPerm};
