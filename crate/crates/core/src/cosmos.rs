//! A parametric endomorphism of `R⁹`, its invariant coordinate subspaces,
//! and commutant dimensions for it and for diagonal `su(n)` elements.
//!
//! Matrix layout (1-based): `α` on `(i,i)` for `i = 1..5`, `β` on `(j,j)`
//! for `j = 6..8`, `γ₁, γ₂, γ₃` on `(9,6), (9,7), (9,8)`, and `1` on
//! `(9,9)`.

use std::fmt;

use nalgebra::DMatrix;
use num::complex::Complex;
use num::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{q, to_f64, QMatrix, Q};

pub const DIM: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoF {
    pub alpha: Q,
    pub beta: Q,
    pub gamma: [Q; 3],
}

impl EndoF {
    pub fn new(alpha: Q, beta: Q, gamma: [Q; 3]) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: [i64; 3]) -> Self {
        Self::new(q(alpha), q(beta), gamma.map(q))
    }

    /// Smallest integers with `α, β, 1` pairwise distinct and `γ = 0`.
    pub fn generic() -> Self {
        Self::from_ints(2, 3, [0, 0, 0])
    }

    pub fn gamma_is_zero(&self) -> bool {
        self.gamma.iter().all(Zero::is_zero)
    }

    /// Recovers parameters from a matrix with this layout; `None` if any
    /// entry outside the layout is nonzero or a block is not constant.
    pub fn from_matrix(m: &QMatrix) -> Option<Self> {
        if m.nrows() != DIM || m.ncols() != DIM {
            return None;
        }
        let f = Self::new(
            m.get(0, 0).clone(),
            m.get(5, 5).clone(),
            [m.get(8, 5).clone(), m.get(8, 6).clone(), m.get(8, 7).clone()],
        );
        (f.build_matrix() == *m).then_some(f)
    }

    pub fn build_matrix(&self) -> QMatrix {
        let mut m = QMatrix::zeros(DIM, DIM);
        for i in 0..5 {
            m.set(i, i, self.alpha.clone());
        }
        for j in 5..8 {
            m.set(j, j, self.beta.clone());
            m.set(8, j, self.gamma[j - 5].clone());
        }
        m.set(8, 8, Q::one());
        m
    }

    pub fn build_matrix_f64(&self) -> DMatrix<f64> {
        let m = self.build_matrix();
        DMatrix::from_fn(DIM, DIM, |r, c| to_f64(m.get(r, c)))
    }
}

/// `build_matrix(f)`.
pub fn build_matrix(f: &EndoF) -> QMatrix {
    f.build_matrix()
}

/// Span of a set of standard basis vectors of `R⁹`, indices 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoordSubspace(u16);

impl CoordSubspace {
    pub const E5: Self = Self(0b0_0001_1111);
    pub const E3: Self = Self(0b0_1110_0000);
    pub const E1: Self = Self(0b1_0000_0000);
    pub const E9: Self = Self(0b1_1111_1111);

    pub fn new(indices: &[usize]) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidSubspace("empty index set".into()));
        }
        let mut bits = 0u16;
        for &i in indices {
            if !(1..=DIM).contains(&i) {
                return Err(Error::InvalidSubspace(format!("index {i} outside 1..=9")));
            }
            bits |= 1 << (i - 1);
        }
        Ok(Self(bits))
    }

    pub(crate) fn from_bits(bits: u16) -> Self {
        debug_assert!(bits != 0 && bits < 1 << DIM);
        Self(bits)
    }

    pub fn bits(&self) -> u16 {
        self.0
    }

    pub fn indices(&self) -> Vec<usize> {
        (1..=DIM).filter(|&i| self.contains(i)).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        (1..=DIM).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn dim(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(&self, other: &Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn name(&self) -> Option<&'static str> {
        match *self {
            Self::E5 => Some("E5"),
            Self::E3 => Some("E3"),
            Self::E1 => Some("E1"),
            Self::E9 => Some("E9"),
            _ => None,
        }
    }
}

impl fmt::Display for CoordSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices().iter().map(usize::to_string).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

impl Serialize for CoordSubspace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.indices().serialize(s)
    }
}

/// `M·e_i` stays inside `s` for every `i ∈ s`.
pub fn is_invariant(f: &EndoF, s: CoordSubspace) -> bool {
    let m = f.build_matrix();
    s.indices().into_iter().all(|i| {
        (1..=DIM)
            .filter(|r| !s.contains(*r))
            .all(|r| m.get(r - 1, i - 1).is_zero())
    })
}

/// Every invariant nonempty coordinate subspace, ordered by dimension and
/// then lexicographically by index list.
pub fn invariant_lattice(f: &EndoF) -> Vec<CoordSubspace> {
    let mut out: Vec<CoordSubspace> = (1u16..1 << DIM)
        .map(CoordSubspace::from_bits)
        .filter(|s| is_invariant(f, *s))
        .collect();
    out.sort_by_key(|s| (s.dim(), s.indices()));
    out
}

/// `Some(c)` when `M|_s = c·I`, `None` when the restriction is not a
/// similarity.
pub fn restriction_coefficient(f: &EndoF, s: CoordSubspace) -> Result<Option<Q>> {
    if !is_invariant(f, s) {
        return Err(Error::NotInvariant(s.indices()));
    }
    let m = f.build_matrix();
    let idx = s.indices();
    let c = m.get(idx[0] - 1, idx[0] - 1).clone();
    for &r in &idx {
        for &col in &idx {
            let want = if r == col { c.clone() } else { Q::zero() };
            if *m.get(r - 1, col - 1) != want {
                return Ok(None);
            }
        }
    }
    Ok(Some(c))
}

/// Columns of `X ↦ XM − MX` for `X = E_ab`, flattened row-major.
fn commutator_column(m: &QMatrix, a: usize, b: usize) -> Vec<Q> {
    let n = m.nrows();
    let mut col = vec![Q::zero(); n * n];
    for j in 0..n {
        // (E_ab M)_{aj} = M_bj
        col[a * n + j] += m.get(b, j);
    }
    for i in 0..n {
        // (M E_ab)_{ib} = M_ia
        col[i * n + b] -= m.get(i, a);
    }
    col
}

fn transpose(cols: Vec<Vec<Q>>) -> QMatrix {
    let rows = cols.first().map_or(0, Vec::len);
    QMatrix::from_rows((0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CommutantReport {
    pub full_dim: usize,
    pub antisym_dim: usize,
    /// Eigenvalue multiplicities of a diagonal `M` (`γ = 0`), largest first.
    pub blocks: Option<Vec<usize>>,
    pub structure: String,
}

/// Exact commutant of `M` in `gl(9)` and in `so(9)`.
pub fn commutant(f: &EndoF) -> CommutantReport {
    let m = f.build_matrix();
    let n = DIM;
    let full_cols: Vec<Vec<Q>> = (0..n * n).map(|k| commutator_column(&m, k / n, k % n)).collect();
    let anti_cols: Vec<Vec<Q>> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .map(|(a, b)| {
            let ab = &full_cols[a * n + b];
            let ba = &full_cols[b * n + a];
            ab.iter().zip(ba).map(|(x, y)| x - y).collect()
        })
        .collect();
    let full_dim = transpose(full_cols).nullity();
    let antisym_dim = transpose(anti_cols).nullity();

    let blocks = f.gamma_is_zero().then(|| {
        let mut values: Vec<Q> = (0..n).map(|i| m.get(i, i).clone()).collect();
        values.sort();
        let mut mult: Vec<usize> = Vec::new();
        let mut prev: Option<&Q> = None;
        for v in &values {
            if prev == Some(v) {
                *mult.last_mut().unwrap() += 1;
            } else {
                mult.push(1);
            }
            prev = Some(v);
        }
        mult.sort_by(|a, b| b.cmp(a));
        mult
    });
    let structure = match &blocks {
        Some(b) => {
            let gl: Vec<String> = b.iter().map(|k| format!("gl({k})")).collect();
            let so: Vec<String> = b.iter().filter(|&&k| k > 1).map(|k| format!("so({k})")).collect();
            format!(
                "{} / {}",
                gl.join("⊕"),
                if so.is_empty() { "0".to_string() } else { so.join("⊕") }
            )
        }
        None => "non-diagonal: γ couples E3 to E1".to_string(),
    };
    CommutantReport {
        full_dim,
        antisym_dim,
        blocks,
        structure,
    }
}

/// Floating-point commutant dimensions via SVD, counting singular values
/// below `cutoff`.
pub fn commutant_numeric(f: &EndoF, cutoff: f64) -> (usize, usize) {
    let m = f.build_matrix_f64();
    let n = DIM;
    let op = DMatrix::from_fn(n * n, n * n, |row, k| {
        let (a, b) = (k / n, k % n);
        let (i, j) = (row / n, row % n);
        let mut v = 0.0;
        if i == a {
            v += m[(b, j)];
        }
        if j == b {
            v -= m[(i, a)];
        }
        v
    });
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let anti = DMatrix::from_fn(n * n, pairs.len(), |row, k| {
        let (a, b) = pairs[k];
        op[(row, a * n + b)] - op[(row, b * n + a)]
    });
    let nullity = |x: DMatrix<f64>| {
        let cols = x.ncols();
        let sv = x.svd(false, false).singular_values;
        cols - sv.iter().filter(|&&s| s > cutoff).count()
    };
    (nullity(op), nullity(anti))
}

pub type CQ = Complex<Q>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Ambient {
    U,
    Su,
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ambient::U => "u",
            Ambient::Su => "su",
        })
    }
}

/// Square complex-rational matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CqMatrix {
    n: usize,
    data: Vec<CQ>,
}

impl CqMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![CQ::zero(); n * n],
        }
    }

    /// `i·diag(d₁, …, dₙ)`.
    pub fn imaginary_diagonal(d: &[Q]) -> Self {
        let mut m = Self::zeros(d.len());
        for (k, v) in d.iter().enumerate() {
            m.set(k, k, CQ::new(Q::zero(), v.clone()));
        }
        m
    }

    pub fn imaginary_diagonal_ints(d: &[i64]) -> Self {
        Self::imaginary_diagonal(&d.iter().map(|&x| q(x)).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &CQ {
        &self.data[r * self.n + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CQ) {
        self.data[r * self.n + c] = v;
    }

    fn mul(&self, other: &Self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * n + j] = &out.data[i * n + j] + a * b;
                    }
                }
            }
        }
        out
    }

    fn mul_vec(&self, v: &[CQ]) -> Vec<CQ> {
        (0..self.n)
            .map(|i| (0..self.n).fold(CQ::zero(), |acc, k| acc + self.get(i, k) * &v[k]))
            .collect()
    }

    fn validate_vev(&self) -> Result<()> {
        for r in 0..self.n {
            for c in 0..self.n {
                let v = self.get(r, c);
                if r != c && !v.is_zero() {
                    return Err(Error::InvalidVev(format!(
                        "off-diagonal entry at ({},{})",
                        r + 1,
                        c + 1
                    )));
                }
                if r == c && !v.re.is_zero() {
                    return Err(Error::InvalidVev(format!(
                        "diagonal entry {} has a nonzero real part; not anti-Hermitian",
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }
}

pub const MAX_UNITARY_N: usize = 9;

/// Real basis of `u(n)`: `i·E_kk`, then `E_jk − E_kj` and `i(E_jk + E_kj)`
/// for `j < k`.
fn anti_hermitian_basis(n: usize) -> Vec<CqMatrix> {
    let mut out = Vec::with_capacity(n * n);
    let i_unit = CQ::new(Q::zero(), Q::one());
    for k in 0..n {
        let mut m = CqMatrix::zeros(n);
        m.set(k, k, i_unit.clone());
        out.push(m);
    }
    for j in 0..n {
        for k in j + 1..n {
            let mut re = CqMatrix::zeros(n);
            re.set(j, k, CQ::one());
            re.set(k, j, -CQ::one());
            out.push(re);
            let mut im = CqMatrix::zeros(n);
            im.set(j, k, i_unit.clone());
            im.set(k, j, i_unit.clone());
            out.push(im);
        }
    }
    out
}

/// Real dimension of `{X ∈ ambient : [X, V] = 0 for every vev V, X w = 0
/// for every vector w}`.
pub fn stabilizer_dim(vevs: &[CqMatrix], vectors: &[Vec<CQ>], n: usize, ambient: Ambient) -> Result<usize> {
    if !(1..=MAX_UNITARY_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "unitary size n",
            value: n as i64,
            min: 1,
            max: MAX_UNITARY_N as i64,
        });
    }
    for v in vevs {
        if v.n() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: v.n(),
            });
        }
        v.validate_vev()?;
    }
    if let Some(w) = vectors.iter().find(|w| w.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: w.len(),
        });
    }
    let basis = anti_hermitian_basis(n);
    let mut cols: Vec<Vec<Q>> = Vec::with_capacity(basis.len());
    for (idx, x) in basis.iter().enumerate() {
        let mut col = Vec::new();
        for v in vevs {
            let xv = x.mul(v);
            let vx = v.mul(x);
            for (a, b) in xv.data.iter().zip(&vx.data) {
                let d = a - b;
                col.push(d.re);
                col.push(d.im);
            }
        }
        for w in vectors {
            for c in x.mul_vec(w) {
                col.push(c.re);
                col.push(c.im);
            }
        }
        if ambient == Ambient::Su {
            // Im tr X, carried only by the i·E_kk basis elements
            col.push(if idx < n { Q::one() } else { Q::zero() });
        }
        cols.push(col);
    }
    if cols[0].is_empty() {
        return Ok(basis.len());
    }
    Ok(transpose(cols).nullity())
}

/// Real dimension of the commutant of a diagonal anti-Hermitian `vev`
/// inside `u(n)` or `su(n)`.
pub fn unitary_commutant_dim(vev: &CqMatrix, ambient: Ambient) -> Result<usize> {
    stabilizer_dim(std::slice::from_ref(vev), &[], vev.n(), ambient)
}

/// Adjoint vev breaking `su(5)` to the `3 + 2` block algebra.
pub fn gut_vev() -> CqMatrix {
    CqMatrix::imaginary_diagonal_ints(&[2, 2, 2, -3, -3])
}

/// Fundamental-representation vector in the doublet block.
pub fn doublet_vector() -> Vec<CQ> {
    let mut w = vec![CQ::zero(); 5];
    w[4] = CQ::one();
    w
}

/// Dimensions of `su(5)`, the commutant of [`gut_vev`], and the subalgebra of
/// that commutant annihilating [`doublet_vector`].
pub fn breaking_chain() -> Result<[usize; 3]> {
    let zero = CqMatrix::zeros(5);
    let full = unitary_commutant_dim(&zero, Ambient::Su)?;
    let first = unitary_commutant_dim(&gut_vev(), Ambient::Su)?;
    let second = stabilizer_dim(&[gut_vev()], &[doublet_vector()], 5, Ambient::Su)?;
    Ok([full, first, second])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GaugeReport {
    pub alpha: String,
    pub beta: String,
    pub gamma: [String; 3],
    pub e5_invariant: bool,
    pub e3_invariant: bool,
    pub e1_invariant: bool,
    pub decomposition: Option<String>,
    pub lattice_size: usize,
    pub restriction_e5: Option<String>,
    pub restriction_e3: Option<String>,
    pub restriction_e1: Option<String>,
    pub commutant: CommutantReport,
    pub chain: [usize; 3],
    pub chain_labels: [&'static str; 3],
    pub flags: Vec<String>,
}

pub const FULLY_SYMMETRIC: &str = "fully symmetric";
pub const GAMMA_ZERO_VIOLATED: &str = "γ = 0 violated";

fn restriction_string(f: &EndoF, s: CoordSubspace) -> Option<String> {
    match restriction_coefficient(f, s) {
        Ok(Some(c)) => Some(c.to_string()),
        Ok(None) => Some("not a similarity".to_string()),
        Err(_) => None,
    }
}

pub fn gauge_report(f: &EndoF) -> Result<GaugeReport> {
    let e5 = is_invariant(f, CoordSubspace::E5);
    let e3 = is_invariant(f, CoordSubspace::E3);
    let e1 = is_invariant(f, CoordSubspace::E1);
    let commutant = commutant(f);
    let mut flags = Vec::new();
    if commutant.full_dim == DIM * DIM {
        flags.push(FULLY_SYMMETRIC.to_string());
    }
    if !e3 {
        flags.push(GAMMA_ZERO_VIOLATED.to_string());
    }
    Ok(GaugeReport {
        alpha: f.alpha.to_string(),
        beta: f.beta.to_string(),
        gamma: [0, 1, 2].map(|k| f.gamma[k].to_string()),
        e5_invariant: e5,
        e3_invariant: e3,
        e1_invariant: e1,
        decomposition: (e5 && e3 && e1).then(|| "E5⊕E3⊕E1".to_string()),
        lattice_size: invariant_lattice(f).len(),
        restriction_e5: restriction_string(f, CoordSubspace::E5),
        restriction_e3: restriction_string(f, CoordSubspace::E3),
        restriction_e1: restriction_string(f, CoordSubspace::E1),
        commutant,
        chain: breaking_chain()?,
        chain_labels: ["SU(5)", "SU(3)×SU(2)×U(1)", "SU(3)×U(1)"],
        flags,
    })
}
