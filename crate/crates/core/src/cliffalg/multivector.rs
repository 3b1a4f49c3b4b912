use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use super::blade::{blade_product, Blade, Signature};
use crate::exact::Q;

/// Exact rational combination of blades. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Multivector {
    coeffs: BTreeMap<Blade, Q>,
}

impl Multivector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn scalar(c: Q) -> Self {
        Self::term(Blade::SCALAR, c)
    }

    pub fn one() -> Self {
        Self::scalar(Q::one())
    }

    pub fn term(b: Blade, c: Q) -> Self {
        let mut m = Self::zero();
        m.add_term(b, c);
        m
    }

    pub fn blade(b: Blade) -> Self {
        Self::term(b, Q::one())
    }

    pub fn add_term(&mut self, b: Blade, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(b).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn coeff(&self, b: Blade) -> Q {
        self.coeffs.get(&b).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Q)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, k: &Q) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|(b, c)| (*b, c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &Self, s: Signature) -> Self {
        mv_multiply(self, other, s)
    }
}

/// Bilinear extension of [`blade_product`].
pub fn mv_multiply(a: &Multivector, b: &Multivector, s: Signature) -> Multivector {
    let mut out = Multivector::zero();
    for (ba, ca) in &a.coeffs {
        for (bb, cb) in &b.coeffs {
            let (sign, blade) = blade_product(*ba, *bb, s);
            let c = ca * cb;
            out.add_term(blade, if sign < 0 { -c } else { c });
        }
    }
    out
}

impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(b, c)| if b.0 == 0 { c.to_string() } else { format!("{c}·{b}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{q, q_frac};

    #[test]
    fn one_plus_e1_times_one_minus_e1() {
        let s = Signature::new(1, 0);
        let e1 = Multivector::blade(Blade::generator(1));
        let a = Multivector::one().add(&e1);
        let b = Multivector::one().sub(&e1);
        assert!(mv_multiply(&a, &b, s).is_zero());
    }

    #[test]
    fn scalar_multiplication() {
        let s = Signature::new(2, 1);
        let x = Multivector::term(Blade(0b011), q(3)).add(&Multivector::term(Blade(0b100), q(-1)));
        let k = Multivector::scalar(q_frac(1, 2));
        assert_eq!(mv_multiply(&k, &x, s), x.scale(&q_frac(1, 2)));
        assert_eq!(mv_multiply(&x, &k, s), x.scale(&q_frac(1, 2)));
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut m = Multivector::term(Blade(1), q(2));
        m.add_term(Blade(1), q(-2));
        assert!(m.is_zero());
        assert_eq!(m.len(), 0);
        assert_eq!(Multivector::term(Blade(3), q(0)), Multivector::zero());
    }

    #[test]
    fn display() {
        let m = Multivector::one().add(&Multivector::term(Blade(0b11), q_frac(-1, 2)));
        assert_eq!(m.to_string(), "1 + -1/2·e1·e2");
    }
}
