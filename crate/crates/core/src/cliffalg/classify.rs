//! Matrix-algebra classification of real Clifford algebras and an exact
//! center/idempotent analysis used to cross-check it.

use std::fmt;

use num::{Signed, Zero};
use serde::Serialize;

use super::blade::{Blade, Signature};
use super::multivector::{mv_multiply, Multivector};
use crate::error::{Error, Result};
use crate::exact::{QMatrix, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Ring {
    R,
    C,
    H,
}

impl Ring {
    pub fn real_dim(self) -> u64 {
        match self {
            Ring::R => 1,
            Ring::C => 2,
            Ring::H => 4,
        }
    }
}

/// `factors` copies of `Mat_size(ring)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Descriptor {
    pub ring: Ring,
    pub size: u64,
    pub factors: u8,
}

impl Descriptor {
    pub const fn new(ring: Ring, size: u64, factors: u8) -> Self {
        Self { ring, size, factors }
    }

    pub fn real_dim(&self) -> u64 {
        self.factors as u64 * self.size * self.size * self.ring.real_dim()
    }

    /// Real dimension of the center.
    pub fn center_dim(&self) -> u64 {
        self.factors as u64 * if self.ring == Ring::C { 2 } else { 1 }
    }

    /// Tensor product with `Mat_size(ring)`, simplified back to normal form.
    fn tensor(self, ring: Ring, size: u64) -> Self {
        let (r, mult, factors) = match (self.ring, ring) {
            (Ring::R, x) | (x, Ring::R) => (x, 1, self.factors),
            (Ring::C, Ring::C) => (Ring::C, 1, self.factors * 2),
            (Ring::C, Ring::H) | (Ring::H, Ring::C) => (Ring::C, 2, self.factors),
            (Ring::H, Ring::H) => (Ring::R, 4, self.factors),
        };
        Self::new(r, self.size * size * mult, factors)
    }
}

impl fmt::Display for Descriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = match self.ring {
            Ring::R => "R",
            Ring::C => "C",
            Ring::H => "H",
        };
        let one = if self.size == 1 {
            ring.to_string()
        } else {
            format!("Mat{}({})", self.size, ring)
        };
        if self.factors == 2 {
            write!(f, "{one}⊕{one}")
        } else {
            f.write_str(&one)
        }
    }
}

pub const MAX_CLASSIFY_N: usize = 32;

/// Classifies `Cl(p,q)` by reducing to `Cl(0,0)`, `Cl(1,0)`, `Cl(0,1)`:
///
/// - `Cl(p+1,q+1) ≅ Cl(p,q) ⊗ Mat₂(R)`
/// - `Cl(p+2,q)   ≅ Cl(q,p) ⊗ Mat₂(R)`
/// - `Cl(p,q+2)   ≅ Cl(q,p) ⊗ H`
pub fn classify(s: Signature) -> Result<Descriptor> {
    if s.n() > MAX_CLASSIFY_N {
        return Err(Error::OutOfRange {
            what: "generator count p+q",
            value: s.n() as i64,
            min: 0,
            max: MAX_CLASSIFY_N as i64,
        });
    }
    Ok(classify_rec(s.p, s.q))
}

fn classify_rec(p: usize, q: usize) -> Descriptor {
    match (p, q) {
        (0, 0) => Descriptor::new(Ring::R, 1, 1),
        (1, 0) => Descriptor::new(Ring::R, 1, 2),
        (0, 1) => Descriptor::new(Ring::C, 1, 1),
        (p, q) if p >= 1 && q >= 1 => classify_rec(p - 1, q - 1).tensor(Ring::R, 2),
        (p, q) if p >= 2 => classify_rec(q, p - 2).tensor(Ring::R, 2),
        (p, q) => classify_rec(q - 2, p).tensor(Ring::H, 1),
    }
}

/// Center of the exact algebra, found as the common kernel of
/// `x ↦ e_k x − x e_k` over all generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CenterAnalysis {
    pub center_dim: usize,
    /// Minimal nonzero central idempotents; `None` if the center has an
    /// unexpected shape (dimension above 2).
    pub primitive_central_idempotents: Option<usize>,
    /// Center is a copy of `C` (a central element squaring to a negative
    /// scalar after completing the square).
    pub complex_center: Option<bool>,
}

impl CenterAnalysis {
    /// Whether a descriptor is consistent with this analysis.
    pub fn agrees_with(&self, d: &Descriptor) -> bool {
        self.center_dim as u64 == d.center_dim()
            && self.primitive_central_idempotents == Some(d.factors as usize)
            && self.complex_center == Some(d.ring == Ring::C)
    }
}

pub fn center_analysis(s: Signature) -> Result<CenterAnalysis> {
    s.check_exact()?;
    let dim = s.dim();
    let gens: Vec<Multivector> = (1..=s.n()).map(|k| Multivector::blade(Blade::generator(k))).collect();
    let mut system = QMatrix::zeros(0, dim);
    for e in &gens {
        let cols: Vec<Multivector> = (0..dim)
            .map(|b| {
                let x = Multivector::blade(Blade(b as u32));
                mv_multiply(e, &x, s).sub(&mv_multiply(&x, e, s))
            })
            .collect();
        for row in 0..dim {
            let r: Vec<Q> = cols.iter().map(|c| c.coeff(Blade(row as u32))).collect();
            if r.iter().any(|v| !v.is_zero()) {
                system.push_row(r);
            }
        }
    }
    let basis = system.nullspace();
    let center_dim = basis.len();
    let (idem, complex) = match center_dim {
        1 => (Some(1), Some(false)),
        2 => {
            let to_mv = |v: &[Q]| {
                let mut m = Multivector::zero();
                for (b, c) in v.iter().enumerate() {
                    m.add_term(Blade(b as u32), c.clone());
                }
                m
            };
            let one = Multivector::one();
            let z = basis
                .iter()
                .map(|v| to_mv(v))
                .find(|m| m.terms().any(|(b, _)| b.0 != 0))
                .expect("a non-scalar central element");
            // make z traceless: z ← z − <z>_0
            let z = z.sub(&one.scale(&z.coeff(Blade::SCALAR)));
            let z2 = mv_multiply(&z, &z, s);
            // z² lies in span{1, z}: z² = c0 + c1 z
            let (lead, lead_c) = z.terms().next().map(|(b, c)| (*b, c.clone())).expect("nonzero");
            let c1 = z2.coeff(lead) / lead_c;
            let c0 = z2.coeff(Blade::SCALAR);
            let disc = c0 + &c1 * &c1 / Q::from_integer(4.into());
            if disc.is_zero() {
                (None, None)
            } else if disc.is_positive() {
                (Some(2), Some(false))
            } else {
                (Some(1), Some(true))
            }
        }
        _ => (None, None),
    };
    Ok(CenterAnalysis {
        center_dim,
        primitive_central_idempotents: idem,
        complex_center: complex,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    Ambiguous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimEntry {
    /// The identification under test, e.g. `Cl(4) ≅ Pauli algebra`.
    pub claim: String,
    pub signature: Signature,
    pub descriptor: String,
    pub real_dim: u64,
    pub reference: String,
    pub reference_real_dim: u64,
    pub verdict: Verdict,
    pub note: String,
}

/// Pauli algebra `Mat₂(C)`.
pub const PAULI: Descriptor = Descriptor::new(Ring::C, 2, 1);
/// Dirac algebra `Mat₄(C)`.
pub const DIRAC: Descriptor = Descriptor::new(Ring::C, 4, 1);

fn compare(claim: &str, s: Signature, reference: Descriptor, name: &str) -> ClaimEntry {
    let d = classify(s).expect("small signature");
    let (verdict, note) = if d == reference {
        (Verdict::Match, format!("{s} ≅ {reference}: MATCH-candidate"))
    } else if d.real_dim() > reference.real_dim() && d.real_dim().is_multiple_of(reference.real_dim()) {
        (
            Verdict::Ambiguous,
            format!("contains {reference} up to real embedding: checked by dimension divisibility only"),
        )
    } else if d.real_dim() == reference.real_dim() {
        (Verdict::Mismatch, format!("same real dimension, {d} ≇ {reference}"))
    } else {
        (
            Verdict::Mismatch,
            format!(
                "real dimension {} vs {} of the {name} algebra",
                d.real_dim(),
                reference.real_dim()
            ),
        )
    };
    ClaimEntry {
        claim: claim.to_string(),
        signature: s,
        descriptor: d.to_string(),
        real_dim: d.real_dim(),
        reference: reference.to_string(),
        reference_real_dim: reference.real_dim(),
        verdict,
        note,
    }
}

/// Descriptors for every reading of the `Cl(4)` (Pauli) and `Cl(4,4)`
/// (Dirac) identifications, next to the signatures that do realize those
/// algebras. No reading is preferred.
pub fn claim_report() -> Vec<ClaimEntry> {
    vec![
        compare(
            "Cl(4) ≅ Pauli algebra, read as Cl(0,4)",
            Signature::new(0, 4),
            PAULI,
            "Pauli",
        ),
        compare(
            "Cl(4) ≅ Pauli algebra, read as Cl(4,0)",
            Signature::new(4, 0),
            PAULI,
            "Pauli",
        ),
        compare("Pauli algebra candidate Cl(0,3)", Signature::new(0, 3), PAULI, "Pauli"),
        compare("Pauli algebra candidate Cl(3,0)", Signature::new(3, 0), PAULI, "Pauli"),
        compare("Dirac algebra candidate Cl(1,3)", Signature::new(1, 3), DIRAC, "Dirac"),
        compare("Dirac algebra candidate Cl(3,1)", Signature::new(3, 1), DIRAC, "Dirac"),
        compare("Cl(4,4) ≅ Dirac algebra", Signature::new(4, 4), DIRAC, "Dirac"),
    ]
}
