//! Twisted group algebra of an arrow group and its comparison with the
//! canonical Clifford algebra by structure constants.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::blade::{blade_product, Blade, Signature};
use crate::arrowgroup::ArrowGroup;
use crate::dyadic::{family_signature, GeneratorFamily};
use crate::error::{Error, Result};
use crate::sigperm::SignedPerm;

/// Largest generator count compared over all basis pairs.
pub const EXHAUSTIVE_MAX_N: usize = 8;
pub const DEFAULT_SAMPLES: usize = 100_000;

/// One representative per `{g, −g}` coset, plus the subset-product index.
#[derive(Debug, Clone)]
pub struct TwistedBasis {
    reps: Vec<SignedPerm>,
    /// `index[S] = (sign, r)` with `g_S = sign · reps[r]`.
    index: Vec<(i8, usize)>,
}

impl TwistedBasis {
    pub fn reps(&self) -> &[SignedPerm] {
        &self.reps
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn subset(&self, subset: usize) -> (i8, usize) {
        self.index[subset]
    }
}

/// Quotient of the group algebra identifying the central group element
/// `−identity` with the scalar `−1`.
pub fn twisted_basis(g: &ArrowGroup) -> Result<TwistedBasis> {
    if !g.has_minus_identity() {
        return Err(Error::MissingCentralMinusOne);
    }
    let mut reps: Vec<SignedPerm> = g.elements().iter().filter(|e| **e <= e.negate()).cloned().collect();
    reps.sort();
    let position: HashMap<&SignedPerm, usize> = reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let f = g.family();
    let mut index = Vec::new();
    if f.len() < 32 && (1usize << f.len()) <= 2 * reps.len() {
        for s in 0..1u64 << f.len() {
            let prod = f.subset_product(s);
            let entry = match position.get(&prod) {
                Some(&r) => (1, r),
                None => (-1, position[&prod.negate()]),
            };
            index.push(entry);
        }
    }
    Ok(TwistedBasis { reps, index })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IsoWitness {
    /// Two subsets map to the same basis element up to sign.
    DuplicateBasis { s: u64, t: u64 },
    /// `g_S g_T = group_sign · g_{S△T}` but `e_S e_T = blade_sign · e_{S△T}`;
    /// `group_sign = 0` means the product is not `±g_{S△T}` at all.
    StructureMismatch {
        s: u64,
        t: u64,
        group_sign: i8,
        blade_sign: i8,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoOutcome {
    pub signature: Signature,
    pub dim: usize,
    pub pairs_checked: u64,
    pub exhaustive: bool,
    /// `generator_order[k]` is the family index mapped to `e_{k+1}`.
    pub generator_order: Vec<usize>,
    pub witness: Option<IsoWitness>,
}

impl IsoOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IsoOptions {
    pub seed: u64,
    pub samples: usize,
}

impl Default for IsoOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: DEFAULT_SAMPLES,
        }
    }
}

pub fn iso_check(f: &GeneratorFamily, s: Signature) -> Result<IsoOutcome> {
    iso_check_with(f, s, IsoOptions::default())
}

/// Compares the structure constants of the twisted algebra spanned by the
/// subset products of `f` with those of `Cl(s)`.
///
/// Generators squaring to `+identity` are mapped to `e_1, …` in family
/// order, followed by those squaring to `−identity`. Up to
/// [`EXHAUSTIVE_MAX_N`] generators every basis pair is compared; beyond
/// that `opts.samples` seeded random pairs are.
pub fn iso_check_with(f: &GeneratorFamily, s: Signature, opts: IsoOptions) -> Result<IsoOutcome> {
    s.check_exact()?;
    if f.len() != s.n() {
        return Err(Error::SignatureMismatch {
            p: s.p,
            q: s.q,
            n: f.len(),
        });
    }
    let (fp, _) = family_signature(f)?;
    let mut order: Vec<usize> = Vec::with_capacity(f.len());
    let squares_positive: Vec<bool> = f.gens().iter().map(|g| g.compose_unchecked(g).is_identity()).collect();
    order.extend((0..f.len()).filter(|&i| squares_positive[i]));
    order.extend((0..f.len()).filter(|&i| !squares_positive[i]));
    debug_assert_eq!(fp, order.iter().filter(|&&i| squares_positive[i]).count());
    let gens: Vec<&SignedPerm> = order.iter().map(|&i| &f.gens()[i]).collect();
    let n = gens.len();
    let id = SignedPerm::identity(f.dimension())?;

    let product = |subset: u64| -> SignedPerm {
        let mut acc = id.clone();
        for (a, g) in gens.iter().enumerate() {
            if subset >> a & 1 == 1 {
                acc = acc.compose_unchecked(g);
            }
        }
        acc
    };
    let compare = |st: (u64, u64), gs: &SignedPerm, gt: &SignedPerm, gst: &SignedPerm| {
        let prod = gs.compose_unchecked(gt);
        let group_sign = if &prod == gst {
            1
        } else if prod == gst.negate() {
            -1
        } else {
            0
        };
        let (blade_sign, _) = blade_product(Blade(st.0 as u32), Blade(st.1 as u32), s);
        (group_sign != blade_sign).then_some(IsoWitness::StructureMismatch {
            s: st.0,
            t: st.1,
            group_sign,
            blade_sign,
        })
    };

    let dim = 1usize << n;
    let mut outcome = IsoOutcome {
        signature: s,
        dim,
        pairs_checked: 0,
        exhaustive: n <= EXHAUSTIVE_MAX_N,
        generator_order: order.clone(),
        witness: None,
    };

    if outcome.exhaustive {
        let mut basis: Vec<SignedPerm> = Vec::with_capacity(dim);
        basis.push(id.clone());
        for subset in 1..dim {
            let top = usize::BITS - 1 - subset.leading_zeros();
            let rest = subset & !(1 << top);
            basis.push(basis[rest].compose_unchecked(gens[top as usize]));
        }
        let mut seen: HashMap<SignedPerm, u64> = HashMap::with_capacity(dim);
        for (subset, g) in basis.iter().enumerate() {
            let key = std::cmp::min(g.clone(), g.negate());
            if let Some(&prev) = seen.get(&key) {
                outcome.witness = Some(IsoWitness::DuplicateBasis {
                    s: prev,
                    t: subset as u64,
                });
                return Ok(outcome);
            }
            seen.insert(key, subset as u64);
        }
        for a in 0..dim {
            for b in 0..dim {
                outcome.pairs_checked += 1;
                if let Some(w) = compare((a as u64, b as u64), &basis[a], &basis[b], &basis[a ^ b]) {
                    outcome.witness = Some(w);
                    return Ok(outcome);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        let mask = (1u64 << n) - 1;
        for _ in 0..opts.samples {
            let a = rng.random::<u64>() & mask;
            let b = rng.random::<u64>() & mask;
            outcome.pairs_checked += 1;
            if let Some(w) = compare((a, b), &product(a), &product(b), &product(a ^ b)) {
                outcome.witness = Some(w);
                return Ok(outcome);
            }
        }
    }
    Ok(outcome)
}

/// Signed basis monomial of `Cl(1,1)^{⊗m}`: factor `a` occupies bits
/// `2a, 2a+1` (`f⁺`, `f⁻`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct TensorMonomial {
    sign: i8,
    bits: u32,
}

fn tensor_mul(x: TensorMonomial, y: TensorMonomial, m: usize) -> TensorMonomial {
    let factor = Signature::new(1, 1);
    let mut sign = x.sign * y.sign;
    // ungraded tensor product: factors multiply independently
    for a in 0..m {
        let xa = Blade(x.bits >> (2 * a) & 0b11);
        let ya = Blade(y.bits >> (2 * a) & 0b11);
        sign *= blade_product(xa, ya, factor).0;
    }
    TensorMonomial {
        sign,
        bits: x.bits ^ y.bits,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorPowerOutcome {
    pub m: usize,
    pub dim: usize,
    pub pairs_checked: u64,
    pub witness: Option<(u64, u64)>,
}

impl TensorPowerOutcome {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

/// Checks `Cl(1,1)^{⊗m} ≅ Cl(m,m)` for the ungraded tensor power.
///
/// Generator `e_a` of `Cl(m,m)` (`a ≤ m`) goes to
/// `ω^{⊗(a−1)} ⊗ f⁺ ⊗ 1 ⊗ …` and `e_{m+a}` to the same with `f⁻`, where
/// `ω = f⁺f⁻` is the volume element of `Cl(1,1)` (it squares to `+1` and
/// anticommutes with `f^±`). The induced map on bases must be a bijection
/// preserving every structure constant.
pub fn tensor_power_check(m: usize) -> Result<TensorPowerOutcome> {
    if !(1..=4).contains(&m) {
        return Err(Error::OutOfRange {
            what: "tensor power m",
            value: m as i64,
            min: 1,
            max: 4,
        });
    }
    let n = 2 * m;
    let image = |k: usize| -> TensorMonomial {
        let (slot, minus) = if k < m { (k, false) } else { (k - m, true) };
        let mut bits = 0u32;
        for a in 0..slot {
            bits |= 0b11 << (2 * a);
        }
        bits |= (if minus { 0b10 } else { 0b01 }) << (2 * slot);
        TensorMonomial { sign: 1, bits }
    };
    let dim = 1usize << n;
    let mut phi = Vec::with_capacity(dim);
    phi.push(TensorMonomial { sign: 1, bits: 0 });
    for subset in 1..dim {
        let top = (usize::BITS - 1 - subset.leading_zeros()) as usize;
        let rest = subset & !(1 << top);
        phi.push(tensor_mul(phi[rest], image(top), m));
    }
    let mut out = TensorPowerOutcome {
        m,
        dim,
        pairs_checked: 0,
        witness: None,
    };
    let mut seen = vec![false; dim];
    for (subset, t) in phi.iter().enumerate() {
        if std::mem::replace(&mut seen[t.bits as usize], true) {
            out.witness = Some((subset as u64, subset as u64));
            return Ok(out);
        }
    }
    let s = Signature::new(m, m);
    for a in 0..dim {
        for b in 0..dim {
            out.pairs_checked += 1;
            let lhs = tensor_mul(phi[a], phi[b], m);
            let (sign, blade) = blade_product(Blade(a as u32), Blade(b as u32), s);
            let rhs = phi[blade.0 as usize];
            if lhs.bits != rhs.bits || lhs.sign != sign * rhs.sign {
                out.witness = Some((a as u64, b as u64));
                return Ok(out);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrowgroup::generate;
    use crate::dyadic::{brick_x, brick_z, pauli_string_family};

    #[test]
    fn twisted_basis_sizes() {
        for (p, dim) in [(1, 4), (2, 16)] {
            let g = generate(&pauli_string_family(p, false).unwrap(), 1 << 12).unwrap();
            let tb = twisted_basis(&g).unwrap();
            assert_eq!(tb.dim(), dim);
            assert_eq!(tb.dim() * 2, g.order());
            for (i, r) in tb.reps().iter().enumerate() {
                assert!(!tb.reps()[i + 1..].contains(&r.negate()));
            }
            let mut hit: Vec<usize> = (0..dim).map(|s| tb.subset(s).1).collect();
            hit.sort();
            hit.dedup();
            assert_eq!(hit.len(), dim);
        }
    }

    #[test]
    fn twisted_basis_needs_minus_one() {
        let g = generate(&GeneratorFamily::empty(2).unwrap(), 10).unwrap();
        assert_eq!(twisted_basis(&g).unwrap_err(), Error::MissingCentralMinusOne);
    }

    #[test]
    fn iso_small() {
        let out = iso_check(&pauli_string_family(1, false).unwrap(), Signature::new(1, 1)).unwrap();
        assert!(out.passed());
        assert_eq!(out.dim, 4);
        assert_eq!(out.pairs_checked, 16);
    }

    #[test]
    fn iso_4_4() {
        let out = iso_check(&pauli_string_family(4, false).unwrap(), Signature::new(4, 4)).unwrap();
        assert!(out.passed());
        assert_eq!(out.dim, 256);
        assert_eq!(out.pairs_checked, 65_536);
        assert!(out.exhaustive);
    }

    #[test]
    fn iso_signature_mismatch_gives_witness() {
        let out = iso_check(&pauli_string_family(2, false).unwrap(), Signature::new(4, 0)).unwrap();
        // generators ordered e1+, e2+, e1-, e2-; the first −1 square is e1- ↦ e3
        assert_eq!(
            out.witness,
            Some(IsoWitness::StructureMismatch {
                s: 0b0100,
                t: 0b0100,
                group_sign: -1,
                blade_sign: 1
            })
        );
    }

    #[test]
    fn iso_wrong_count_is_an_error() {
        let err = iso_check(&pauli_string_family(1, false).unwrap(), Signature::new(2, 1));
        assert!(matches!(err, Err(Error::SignatureMismatch { .. })));
    }

    #[test]
    fn iso_extended_families() {
        for p in 1..=3 {
            let f = pauli_string_family(p, true).unwrap();
            assert!(iso_check(&f, Signature::new(p + 1, p)).unwrap().passed());
        }
    }

    #[test]
    fn literal_extension_is_not_faithful() {
        let f = GeneratorFamily::from_gens(vec![brick_x(), crate::dyadic::brick_j(), brick_z()]).unwrap();
        let out = iso_check(&f, Signature::new(2, 1)).unwrap();
        assert!(matches!(out.witness, Some(IsoWitness::DuplicateBasis { .. })));
    }

    #[test]
    fn sampled_mode_for_large_families() {
        let f = pauli_string_family(5, false).unwrap();
        let out = iso_check_with(&f, Signature::new(5, 5), IsoOptions { seed: 3, samples: 2000 }).unwrap();
        assert!(!out.exhaustive);
        assert_eq!(out.pairs_checked, 2000);
        assert!(out.passed());
    }

    #[test]
    fn tensor_powers() {
        for (m, dim) in [(1, 4), (2, 16), (3, 64)] {
            let out = tensor_power_check(m).unwrap();
            assert!(out.passed(), "m={m}");
            assert_eq!(out.dim, dim);
        }
        assert!(tensor_power_check(0).is_err());
        assert!(tensor_power_check(5).is_err());
    }

    #[test]
    fn naive_map_without_volume_prefix_fails() {
        // factors commute in the ungraded product, so dropping ω breaks m=2
        let m = 2;
        let f1 = TensorMonomial { sign: 1, bits: 0b0001 };
        let f2 = TensorMonomial { sign: 1, bits: 0b0100 };
        let a = tensor_mul(f1, f2, m);
        let b = tensor_mul(f2, f1, m);
        assert_eq!(a, b);
    }
}
