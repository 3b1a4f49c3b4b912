//! Finite groups generated by signed-permutation families, and exact checks
//! of the anticommutation relations among their generators.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::dyadic::GeneratorFamily;
use crate::error::{Error, Result};
use crate::sigperm::SignedPerm;

pub const DEFAULT_CAP: usize = 1 << 20;

// frontiers smaller than this are expanded sequentially
const PAR_FRONTIER: usize = 4096;

/// The closure `⟨gens⟩`, elements in canonical (sorted) order.
#[derive(Debug, Clone)]
pub struct ArrowGroup {
    elements: Vec<SignedPerm>,
    family: GeneratorFamily,
    cap: usize,
}

impl ArrowGroup {
    pub fn elements(&self) -> &[SignedPerm] {
        &self.elements
    }

    pub fn family(&self) -> &GeneratorFamily {
        &self.family
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &SignedPerm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn identity(&self) -> SignedPerm {
        SignedPerm::identity(self.family.dimension()).unwrap()
    }

    pub fn has_minus_identity(&self) -> bool {
        self.contains(&self.identity().negate())
    }

    /// Elements commuting with every generator.
    pub fn center(&self) -> Vec<SignedPerm> {
        center(self)
    }

    /// Whether every element is `±` a subset product of the generators
    /// (increasing index order) with the map `(sign, subset) ↦ element`
    /// a bijection onto the group.
    pub fn normal_form_is_bijection(&self) -> bool {
        let n = self.family.len();
        if n >= 40 {
            return false;
        }
        let mut seen = HashSet::with_capacity(self.order());
        for subset in 0..1u64 << n {
            let g = self.family.subset_product(subset);
            for h in [g.negate(), g] {
                if !self.contains(&h) || !seen.insert(h) {
                    return false;
                }
            }
        }
        seen.len() == self.order()
    }

    /// `(sign, subset)` with `element = sign · g_subset`, if any.
    pub fn normal_form(&self, element: &SignedPerm) -> Option<(i8, u64)> {
        let n = self.family.len();
        (0..1u64 << n).find_map(|s| {
            let g = self.family.subset_product(s);
            if &g == element {
                Some((1, s))
            } else if g.negate() == *element {
                Some((-1, s))
            } else {
                None
            }
        })
    }
}

/// Breadth-first closure of a family, failing once more than `cap`
/// elements would be produced.
pub fn generate(f: &GeneratorFamily, cap: usize) -> Result<ArrowGroup> {
    if cap < 2 {
        return Err(Error::OutOfRange {
            what: "group cap",
            value: cap as i64,
            min: 2,
            max: i64::MAX,
        });
    }
    let id = SignedPerm::identity(f.dimension())?;
    let mut all: BTreeSet<SignedPerm> = BTreeSet::new();
    all.insert(id.clone());
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let expand = |x: &SignedPerm| -> Vec<SignedPerm> { f.gens().iter().map(|g| g.compose_unchecked(x)).collect() };
        let products: Vec<SignedPerm> = if frontier.len() >= PAR_FRONTIER {
            frontier.par_iter().flat_map_iter(expand).collect()
        } else {
            frontier.iter().flat_map(expand).collect()
        };
        // the set of new elements is independent of expansion order
        let fresh: BTreeSet<SignedPerm> = products.into_iter().filter(|h| !all.contains(h)).collect();
        if all.len() + fresh.len() > cap {
            return Err(Error::Overflow { cap });
        }
        all.extend(fresh.iter().cloned());
        frontier = fresh.into_iter().collect();
    }
    Ok(ArrowGroup {
        elements: all.into_iter().collect(),
        family: f.clone(),
        cap,
    })
}

pub fn center(g: &ArrowGroup) -> Vec<SignedPerm> {
    g.elements
        .iter()
        .filter(|c| {
            g.family
                .gens()
                .iter()
                .all(|x| x.compose_unchecked(c) == c.compose_unchecked(x))
        })
        .cloned()
        .collect()
}

/// Order of the group generated by `n` pairwise-anticommuting generators
/// with central squares, acting faithfully: `2^{n+1}` (`1` for `n = 0`).
pub fn group_order_law(n_generators: usize) -> u128 {
    if n_generators == 0 {
        1
    } else {
        1u128 << (n_generators + 1)
    }
}

/// Counts `{±g_S}` over all generator subsets without running the BFS.
pub fn order_by_normal_form(f: &GeneratorFamily) -> usize {
    let mut set = HashSet::new();
    for s in 0..1u64 << f.len() {
        let g = f.subset_product(s);
        set.insert(g.negate());
        set.insert(g);
    }
    set.len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RelationFailure {
    /// `g²` is neither `+identity` nor `−identity`.
    NonCentralSquare { index: usize, square: String },
    /// `g` is the identity, order 1.
    Degenerate { index: usize },
    /// `g_i g_j ≠ −g_j g_i`.
    NotAnticommuting {
        i: usize,
        j: usize,
        gi_gj: String,
        gj_gi: String,
    },
}

/// Outcome of [`verify_relations`].
///
/// `failures` holds only violations of the Clifford-generator conditions
/// (central squares, non-degenerate generators, pairwise anticommutation).
/// The inverse relation `g_i g_j = (g_j g_i)⁻¹` is recorded separately: for
/// anticommuting generators with central squares it holds exactly when
/// `g_i² = g_j²`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub squares: Vec<Option<i8>>,
    pub pair_count: usize,
    pub anticommuting_pairs: usize,
    pub inverse_relation_pairs: usize,
    pub inverse_relation_failures: Vec<(usize, usize)>,
    /// Whether `(g_i g_j = (g_j g_i)⁻¹) ⇔ (g_i g_j = −g_j g_i)` on every pair.
    pub inverse_matches_anticommutation: bool,
    pub cycle_types: Vec<Vec<(usize, i8)>>,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn is_valid(&self) -> bool {
        !self.squares.is_empty() && self.failures.is_empty()
    }

    pub fn inverse_relation_holds(&self) -> bool {
        self.inverse_relation_failures.is_empty()
    }

    pub fn signature(&self) -> Option<(usize, usize)> {
        let mut pq = (0, 0);
        for s in &self.squares {
            match s {
                Some(1) => pq.0 += 1,
                Some(-1) => pq.1 += 1,
                _ => return None,
            }
        }
        Some(pq)
    }
}

pub fn verify_relations(f: &GeneratorFamily) -> RelationReport {
    let g = f.gens();
    let mut failures = Vec::new();
    let mut squares = Vec::with_capacity(g.len());
    for (index, x) in g.iter().enumerate() {
        if x.is_identity() {
            failures.push(RelationFailure::Degenerate { index });
        }
        let sq = x.compose_unchecked(x);
        if sq.is_identity() {
            squares.push(Some(1));
        } else if sq.is_minus_identity() {
            squares.push(Some(-1));
        } else {
            squares.push(None);
            failures.push(RelationFailure::NonCentralSquare {
                index,
                square: sq.cycle_notation(),
            });
        }
    }
    let mut pair_count = 0;
    let mut anticommuting_pairs = 0;
    let mut inverse_relation_pairs = 0;
    let mut inverse_relation_failures = Vec::new();
    let mut inverse_matches_anticommutation = true;
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            pair_count += 1;
            let ij = g[i].compose_unchecked(&g[j]);
            let ji = g[j].compose_unchecked(&g[i]);
            let anti = ij == ji.negate();
            let inv = ij == ji.inverse();
            if anti {
                anticommuting_pairs += 1;
            } else {
                failures.push(RelationFailure::NotAnticommuting {
                    i,
                    j,
                    gi_gj: ij.cycle_notation(),
                    gj_gi: ji.cycle_notation(),
                });
            }
            if inv {
                inverse_relation_pairs += 1;
            } else {
                inverse_relation_failures.push((i, j));
            }
            inverse_matches_anticommutation &= anti == inv;
        }
    }
    RelationReport {
        squares,
        pair_count,
        anticommuting_pairs,
        inverse_relation_pairs,
        inverse_relation_failures,
        inverse_matches_anticommutation,
        cycle_types: g.iter().map(SignedPerm::cycle_type).collect(),
        failures,
    }
}

/// Maps each element to its index in the canonical order.
pub fn element_index(g: &ArrowGroup) -> HashMap<&SignedPerm, usize> {
    g.elements.iter().enumerate().map(|(i, e)| (e, i)).collect()
}
