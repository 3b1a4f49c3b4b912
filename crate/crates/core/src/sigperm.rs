//! Signed permutations of a finite index set.
//!
//! A [`SignedPerm`] acts on basis vectors by `e_i ↦ signs[i]·e_{perm[i]}`.
//! Every other convention in the crate (composition order, matrix layout,
//! tensor products) follows from this one action.
//!
//! Indices are 0-based here; [`SignedPerm::cycle_notation`] prints them
//! 1-based for human consumption.

use std::cmp::Ordering;
use std::fmt;

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A permutation with a sign attached to each index.
///
/// Ordering is lexicographic on the permutation sequence and then on the
/// sign sequence with `+ < −`; this is the canonical order used by group
/// closure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    perm: Vec<u32>,
    // true = negative sign; false < true gives + < − in the derived order
    neg: Vec<bool>,
}

impl Ord for SignedPerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.perm.cmp(&other.perm).then_with(|| self.neg.cmp(&other.neg))
    }
}

impl PartialOrd for SignedPerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl SignedPerm {
    /// Builds a signed permutation from an image sequence and a sign
    /// sequence with entries in `{+1, −1}`.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if n == 0 {
            return Err(Error::InvalidSignedPerm("empty index set".into()));
        }
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &t in &perm {
            if t >= n || seen[t] {
                return Err(Error::InvalidSignedPerm(format!(
                    "{perm:?} is not a bijection on 0..{n}"
                )));
            }
            seen[t] = true;
        }
        let mut neg = Vec::with_capacity(n);
        for &s in &signs {
            match s {
                1 => neg.push(false),
                -1 => neg.push(true),
                other => return Err(Error::InvalidSignedPerm(format!("sign {other} is not ±1"))),
            }
        }
        Ok(Self {
            perm: perm.into_iter().map(|t| t as u32).collect(),
            neg,
        })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "index count",
                value: 0,
                min: 1,
                max: i64::MAX,
            });
        }
        Ok(Self {
            perm: (0..n as u32).collect(),
            neg: vec![false; n],
        })
    }

    /// `−identity`, the central element identified with the scalar −1.
    pub fn minus_identity(n: usize) -> Result<Self> {
        Ok(Self::identity(n)?.negate())
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn sign(&self, i: usize) -> i8 {
        if self.neg[i] {
            -1
        } else {
            1
        }
    }

    pub fn perm(&self) -> Vec<usize> {
        self.perm.iter().map(|&t| t as usize).collect()
    }

    pub fn signs(&self) -> Vec<i8> {
        (0..self.n()).map(|i| self.sign(i)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &t)| t as usize == i) && !self.neg.iter().any(|&s| s)
    }

    pub fn is_minus_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &t)| t as usize == i) && self.neg.iter().all(|&s| s)
    }

    /// `self · other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let mut perm = Vec::with_capacity(self.n());
        let mut neg = Vec::with_capacity(self.n());
        for i in 0..other.n() {
            let mid = other.perm[i] as usize;
            perm.push(self.perm[mid]);
            neg.push(other.neg[i] ^ self.neg[mid]);
        }
        Self { perm, neg }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut perm = vec![0u32; n];
        let mut neg = vec![false; n];
        for i in 0..n {
            let t = self.perm[i] as usize;
            perm[t] = i as u32;
            neg[t] = self.neg[i];
        }
        Self { perm, neg }
    }

    /// Flips every sign, i.e. multiplies by the central `−identity`.
    pub fn negate(&self) -> Self {
        Self {
            perm: self.perm.clone(),
            neg: self.neg.iter().map(|&s| !s).collect(),
        }
    }

    /// Least `k ≤ cap` with `self^k = identity`, or `None` on overflow.
    pub fn element_order(&self, cap: usize) -> Option<usize> {
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = self.compose_unchecked(&acc);
        }
        None
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self {
            perm: (0..self.n() as u32).collect(),
            neg: vec![false; self.n()],
        };
        for _ in 0..k {
            acc = self.compose_unchecked(&acc);
        }
        acc
    }

    /// Integer matrix with entry `(perm[i], i) = signs[i]`.
    pub fn matrix(&self) -> DMatrix<i64> {
        let n = self.n();
        let mut m = DMatrix::<i64>::zeros(n, n);
        for i in 0..n {
            m[(self.perm[i] as usize, i)] = self.sign(i) as i64;
        }
        m
    }

    /// Reads a signed permutation back from a monomial ±1 matrix.
    pub fn from_matrix(m: &DMatrix<i64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        let n = m.ncols();
        let mut perm = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for col in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&r| m[(r, col)] != 0).collect();
            if nz.len() != 1 || m[(nz[0], col)].abs() != 1 {
                return Err(Error::InvalidSignedPerm(format!(
                    "column {col} is not a signed unit vector"
                )));
            }
            perm.push(nz[0]);
            signs.push(m[(nz[0], col)] as i8);
        }
        Self::new(perm, signs)
    }

    /// Determinant of the matrix: sign of the permutation times the product
    /// of the signs.
    pub fn det(&self) -> i8 {
        let parity = self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2;
        let negs = self.neg.iter().filter(|&&s| s).count() % 2;
        if (parity + negs) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Kronecker product; index `i·other.n + j` carries slot `i` of `self`
    /// and slot `j` of `other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (na, nb) = (self.n(), other.n());
        let mut perm = Vec::with_capacity(na * nb);
        let mut neg = Vec::with_capacity(na * nb);
        for i in 0..na {
            for j in 0..nb {
                perm.push(self.perm[i] * nb as u32 + other.perm[j]);
                neg.push(self.neg[i] ^ other.neg[j]);
            }
        }
        Self { perm, neg }
    }

    /// Disjoint cycles of the underlying permutation, each starting at its
    /// smallest index.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.image(start);
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.image(cur);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths (descending), each paired with the product of signs
    /// around the cycle.
    pub fn cycle_type(&self) -> Vec<(usize, i8)> {
        let mut t: Vec<(usize, i8)> = self
            .cycles()
            .iter()
            .map(|c| (c.len(), c.iter().map(|&i| self.sign(i)).product()))
            .collect();
        t.sort_by(|a, b| b.cmp(a));
        t
    }

    /// 1-based notation: `(1 -> +2 -> -1)` means `e1 ↦ +e2`, `e2 ↦ −e1`.
    /// Fixed points with sign `+` are omitted; the identity prints as `id`.
    pub fn cycle_notation(&self) -> String {
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1 || self.neg[c[0]])
            .map(|c| {
                let mut s = format!("({}", c[0] + 1);
                for &i in &c {
                    let sign = if self.neg[i] { '-' } else { '+' };
                    s.push_str(&format!(" -> {}{}", sign, self.image(i) + 1));
                }
                s.push(')');
                s
            })
            .collect();
        if parts.is_empty() {
            "id".to_string()
        } else {
            parts.join("")
        }
    }

    /// Splits an involutive underlying permutation into sign-transition
    /// pairs and sign reflections (fixed points with sign −1). Returns `None`
    /// when some cycle is longer than 2.
    pub fn transition_pairs(&self) -> Option<(Vec<SignTransitionPair>, Vec<usize>)> {
        let mut pairs = Vec::new();
        let mut reflections = Vec::new();
        for c in self.cycles() {
            match c.as_slice() {
                [i] => {
                    if self.neg[*i] {
                        reflections.push(*i);
                    }
                }
                [i, j] => pairs.push(SignTransitionPair {
                    i: *i,
                    j: *j,
                    eps_ij: self.sign(*i),
                    eps_ji: self.sign(*j),
                }),
                _ => return None,
            }
        }
        Some((pairs, reflections))
    }
}

impl fmt::Display for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// A signed transposition `i ↔ j`: `e_i ↦ eps_ij·e_j`, `e_j ↦ eps_ji·e_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignTransitionPair {
    pub i: usize,
    pub j: usize,
    pub eps_ij: i8,
    pub eps_ji: i8,
}

impl SignTransitionPair {
    pub fn new(i: usize, j: usize, eps_ij: i8, eps_ji: i8) -> Result<Self> {
        if i == j {
            return Err(Error::InvalidSignedPerm(format!("pair ({i},{j}) is degenerate")));
        }
        for e in [eps_ij, eps_ji] {
            if e != 1 && e != -1 {
                return Err(Error::InvalidSignedPerm(format!("sign {e} is not ±1")));
            }
        }
        Ok(Self { i, j, eps_ij, eps_ji })
    }

    /// `+1` if the pair squares to the identity on `{i, j}`, `−1` if it
    /// squares to minus the identity there.
    pub fn square_sign(&self) -> i8 {
        self.eps_ij * self.eps_ji
    }

    /// Embeds the pair into `n` indices, identity elsewhere.
    pub fn to_signed_perm(&self, n: usize) -> Result<SignedPerm> {
        if self.i.max(self.j) >= n {
            return Err(Error::DimensionMismatch {
                expected: self.i.max(self.j) + 1,
                found: n,
            });
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut signs = vec![1i8; n];
        perm[self.i] = self.j;
        perm[self.j] = self.i;
        signs[self.i] = self.eps_ij;
        signs[self.j] = self.eps_ji;
        SignedPerm::new(perm, signs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> SignedPerm {
        SignedPerm::new(vec![1, 0], vec![1, 1]).unwrap()
    }

    fn j() -> SignedPerm {
        SignedPerm::new(vec![1, 0], vec![1, -1]).unwrap()
    }

    fn diag(signs: &[i8]) -> SignedPerm {
        SignedPerm::new((0..signs.len()).collect(), signs.to_vec()).unwrap()
    }

    #[test]
    fn identity_basics() {
        let id = SignedPerm::identity(2).unwrap();
        assert_eq!(id.perm(), vec![0, 1]);
        assert_eq!(id.signs(), vec![1, 1]);
        assert_eq!(
            SignedPerm::identity(3).unwrap().matrix(),
            DMatrix::<i64>::identity(3, 3)
        );
        assert!(matches!(SignedPerm::identity(0), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn rejects_invalid_parts() {
        assert!(SignedPerm::new(vec![0, 0], vec![1, 1]).is_err());
        assert!(SignedPerm::new(vec![0, 1], vec![1, 2]).is_err());
        assert!(SignedPerm::new(vec![0, 1], vec![1]).is_err());
        assert!(SignedPerm::new(vec![0, 2], vec![1, 1]).is_err());
    }

    #[test]
    fn x_and_j_anticommute() {
        // oracle: 2x2 integer matrix products
        let xj = &x().matrix() * &j().matrix();
        let jx = &j().matrix() * &x().matrix();
        assert_eq!(xj, DMatrix::from_row_slice(2, 2, &[1, 0, 0, -1]));
        assert_eq!(jx, DMatrix::from_row_slice(2, 2, &[-1, 0, 0, 1]));

        assert_eq!(x().compose(&j()).unwrap(), diag(&[1, -1]));
        assert_eq!(j().compose(&x()).unwrap(), diag(&[-1, 1]));
        assert_eq!(j().compose(&x()).unwrap(), x().compose(&j()).unwrap().negate());
    }

    #[test]
    fn compose_rejects_mismatch() {
        let err = x().compose(&SignedPerm::identity(3).unwrap()).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn j_matrix_and_inverse() {
        assert_eq!(j().matrix(), DMatrix::from_row_slice(2, 2, &[0, -1, 1, 0]));
        assert_eq!(j().inverse(), j().negate());
        let id = SignedPerm::identity(5).unwrap();
        assert_eq!(id.inverse(), id);
    }

    #[test]
    fn orders() {
        assert_eq!(SignedPerm::identity(3).unwrap().element_order(10), Some(1));
        assert_eq!(j().element_order(10), Some(4));
        assert_eq!(x().element_order(10), Some(2));
        assert_eq!(SignedPerm::minus_identity(2).unwrap().element_order(10), Some(2));
        assert_eq!(j().element_order(3), None);
        assert!(j().pow(2).is_minus_identity());
    }

    #[test]
    fn negate_is_central_at_n3_and_unique() {
        // enumerate the full hyperoctahedral group B_3 (48 elements)
        let mut all = Vec::new();
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        for p in perms {
            for mask in 0..8u8 {
                let signs = (0..3).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect();
                all.push(SignedPerm::new(p.to_vec(), signs).unwrap());
            }
        }
        assert_eq!(all.len(), 48);
        let central: Vec<&SignedPerm> = all
            .iter()
            .filter(|c| all.iter().all(|g| c.compose(g).unwrap() == g.compose(c).unwrap()))
            .collect();
        assert_eq!(central.len(), 2);
        assert!(central.iter().any(|c| c.is_identity()));
        assert!(central.iter().any(|c| c.is_minus_identity()));
    }

    #[test]
    fn det_and_cycles() {
        assert_eq!(x().det(), -1);
        assert_eq!(j().det(), 1);
        let p = SignedPerm::new(vec![1, 2, 0, 3], vec![1, -1, 1, -1]).unwrap();
        assert_eq!(p.cycles(), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(p.cycle_type(), vec![(3, -1), (1, -1)]);
        assert_eq!(p.det(), 1);
        assert_eq!(p.cycle_notation(), "(1 -> +2 -> -3 -> +1)(4 -> -4)");
        assert_eq!(SignedPerm::identity(4).unwrap().to_string(), "id");
    }

    #[test]
    fn kron_matches_matrix_kronecker() {
        let a = j();
        let b = SignedPerm::new(vec![2, 0, 1], vec![-1, 1, -1]).unwrap();
        assert_eq!(a.kron(&b).matrix(), a.matrix().kronecker(&b.matrix()));
    }

    #[test]
    fn transition_pairs_round_trip() {
        let p = SignTransitionPair::new(0, 2, 1, -1).unwrap();
        assert_eq!(p.square_sign(), -1);
        let sp = p.to_signed_perm(4).unwrap();
        assert_eq!(sp.pow(2), diag(&[-1, 1, -1, 1]));
        let (pairs, refl) = sp.transition_pairs().unwrap();
        assert_eq!(pairs, vec![p]);
        assert!(refl.is_empty());
        assert!(SignTransitionPair::new(1, 1, 1, 1).is_err());
        let three_cycle = SignedPerm::new(vec![1, 2, 0], vec![1, 1, 1]).unwrap();
        assert!(three_cycle.transition_pairs().is_none());
    }

    #[test]
    fn from_matrix_round_trip() {
        let p = SignedPerm::new(vec![2, 0, 1], vec![-1, 1, -1]).unwrap();
        assert_eq!(SignedPerm::from_matrix(&p.matrix()).unwrap(), p);
        let bad = DMatrix::from_row_slice(2, 2, &[1, 1, 0, 0]);
        assert!(SignedPerm::from_matrix(&bad).is_err());
    }

    #[test]
    fn canonical_order_plus_before_minus() {
        let plus = diag(&[1, 1]);
        let minus = diag(&[1, -1]);
        assert!(plus < minus);
        assert!(minus < x());
    }
}
