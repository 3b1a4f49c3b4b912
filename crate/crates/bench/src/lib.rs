//! Shared inputs for the criterion benchmarks.

use arrowalg_core::{pauli_string_family, GeneratorFamily};

/// The non-extended family for each `p` benchmarked.
pub fn families() -> Vec<(usize, GeneratorFamily)> {
    (1..=4)
        .map(|p| (p, pauli_string_family(p, false).expect("p in range")))
        .collect()
}
