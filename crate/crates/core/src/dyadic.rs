//! The index-doubling tree on `N = 2^m` indices and the anticommuting
//! generator families built on it from three signed 2×2 bricks.

use crate::error::{Error, Result};
use crate::sigperm::SignedPerm;

pub const MAX_DEPTH: usize = 16;
pub const MAX_FAMILY_SLOTS: usize = 8;

/// Nested binary partition of `{0, …, 2^m − 1}`.
///
/// Level `k` (1-based) has `2^{k−1}` blocks of size `2^{m−k+1}`; index `i`
/// lies in block `i >> (m−k+1)`. The level-`k` pairing flips bit `m−k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyadicTree {
    m: usize,
}

impl DyadicTree {
    pub fn new(m: usize) -> Result<Self> {
        if !(1..=MAX_DEPTH).contains(&m) {
            return Err(Error::OutOfRange {
                what: "tree depth m",
                value: m as i64,
                min: 1,
                max: MAX_DEPTH as i64,
            });
        }
        Ok(Self { m })
    }

    pub fn depth(&self) -> usize {
        self.m
    }

    pub fn size(&self) -> usize {
        1 << self.m
    }

    pub fn block_count(&self, level: usize) -> usize {
        assert!((1..=self.m).contains(&level));
        1 << (level - 1)
    }

    pub fn block_size(&self, level: usize) -> usize {
        assert!((1..=self.m).contains(&level));
        1 << (self.m - level + 1)
    }

    pub fn block_of(&self, level: usize, i: usize) -> usize {
        i >> (self.m - level + 1)
    }

    /// Blocks of one level, each as a sorted index list.
    pub fn blocks(&self, level: usize) -> Vec<Vec<usize>> {
        let size = self.block_size(level);
        (0..self.block_count(level))
            .map(|b| (b * size..(b + 1) * size).collect())
            .collect()
    }

    pub fn partner(&self, level: usize, i: usize) -> usize {
        assert!((1..=self.m).contains(&level));
        i ^ (1 << (self.m - level))
    }

    /// The level-`k` pairing as an unsigned signed-permutation.
    pub fn pairing(&self, level: usize) -> SignedPerm {
        let n = self.size();
        SignedPerm::new((0..n).map(|i| self.partner(level, i)).collect(), vec![1; n]).expect("bit flip is a bijection")
    }

    /// Which level's pairing underlies `g`: `Some(0)` for a pure sign
    /// reflection (diagonal), `Some(k)` when the underlying permutation is
    /// the level-`k` pairing, `None` otherwise.
    pub fn pairing_level(&self, g: &SignedPerm) -> Option<usize> {
        if g.n() != self.size() {
            return None;
        }
        if (0..g.n()).all(|i| g.image(i) == i) {
            return Some(0);
        }
        (1..=self.m).find(|&k| (0..g.n()).all(|i| g.image(i) == self.partner(k, i)))
    }
}

/// `dyadic_partition(m)`.
pub fn dyadic_partition(m: usize) -> Result<DyadicTree> {
    DyadicTree::new(m)
}

/// The pure swap `[[0,1],[1,0]]`.
pub fn brick_x() -> SignedPerm {
    SignedPerm::new(vec![1, 0], vec![1, 1]).unwrap()
}

/// The signed swap `[[0,−1],[1,0]]`, squaring to `−identity`.
pub fn brick_j() -> SignedPerm {
    SignedPerm::new(vec![1, 0], vec![1, -1]).unwrap()
}

/// The reflection `diag(+1, −1)`.
pub fn brick_z() -> SignedPerm {
    SignedPerm::new(vec![0, 1], vec![1, -1]).unwrap()
}

pub fn brick_i() -> SignedPerm {
    SignedPerm::identity(2).unwrap()
}

/// Kronecker product of bricks, slot 1 most significant.
pub fn tensor(bricks: &[SignedPerm]) -> SignedPerm {
    let mut it = bricks.iter();
    let first = it.next().expect("at least one brick").clone();
    it.fold(first, |acc, b| acc.kron(b))
}

/// An ordered list of generators on a common index set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorFamily {
    n: usize,
    gens: Vec<SignedPerm>,
    labels: Vec<String>,
}

impl GeneratorFamily {
    pub fn new(gens: Vec<SignedPerm>, labels: Vec<String>) -> Result<Self> {
        let n = gens
            .first()
            .map(SignedPerm::n)
            .ok_or_else(|| Error::InvalidSignedPerm("use GeneratorFamily::empty for no generators".into()))?;
        Self::with_dimension(n, gens, labels)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::with_dimension(n, Vec::new(), Vec::new())
    }

    pub fn with_dimension(n: usize, gens: Vec<SignedPerm>, labels: Vec<String>) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                what: "index count",
                value: 0,
                min: 1,
                max: i64::MAX,
            });
        }
        if labels.len() != gens.len() {
            return Err(Error::DimensionMismatch {
                expected: gens.len(),
                found: labels.len(),
            });
        }
        if let Some(g) = gens.iter().find(|g| g.n() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.n(),
            });
        }
        Ok(Self { n, gens, labels })
    }

    /// Unlabelled family; generators are tagged `g1, g2, …`.
    pub fn from_gens(gens: Vec<SignedPerm>) -> Result<Self> {
        let labels = (1..=gens.len()).map(|i| format!("g{i}")).collect();
        Self::new(gens, labels)
    }

    pub fn dimension(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[SignedPerm] {
        &self.gens
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    /// Product `g_{s1} g_{s2} …` over the set bits of `subset`, in
    /// increasing generator index.
    pub fn subset_product(&self, subset: u64) -> SignedPerm {
        let mut acc = SignedPerm::identity(self.n).unwrap();
        for (a, g) in self.gens.iter().enumerate() {
            if subset >> a & 1 == 1 {
                acc = acc.compose_unchecked(g);
            }
        }
        acc
    }

    /// `(p, q)`: how many generators square to `+identity` and `−identity`.
    pub fn signature(&self) -> Result<(usize, usize)> {
        family_signature(self)
    }
}

/// Counts generators squaring to `±identity`; any other square is an error
/// naming the first offending generator.
pub fn family_signature(f: &GeneratorFamily) -> Result<(usize, usize)> {
    let (mut p, mut q) = (0, 0);
    for (index, g) in f.gens.iter().enumerate() {
        let sq = g.compose_unchecked(g);
        if sq.is_identity() {
            p += 1;
        } else if sq.is_minus_identity() {
            q += 1;
        } else {
            return Err(Error::NonCentralSquare { index });
        }
    }
    Ok((p, q))
}

/// Pauli-string family on `2^p` indices.
///
/// For slot `a = 1..p`: `e_a⁺ = Z^{⊗(a−1)} ⊗ X ⊗ I^{⊗(p−a)}` and `e_a⁻` the
/// same with `J` in slot `a`; generators are ordered `e_1⁺, e_1⁻, e_2⁺, …`.
/// Signature `(p, p)`.
///
/// With `extended`, a further generator `e_0` squaring to `+identity` is
/// appended. `Z^{⊗p}` alone would equal the product of the other `2p`
/// generators, so the extended family lives on `2^{p+1}` indices: every
/// `e_a^±` gets an identity brick in an extra trailing slot and
/// `e_0 = Z^{⊗p} ⊗ X`. Signature `(p+1, p)`.
pub fn pauli_string_family(p: usize, extended: bool) -> Result<GeneratorFamily> {
    if !(1..=MAX_FAMILY_SLOTS).contains(&p) {
        return Err(Error::OutOfRange {
            what: "family slots p",
            value: p as i64,
            min: 1,
            max: MAX_FAMILY_SLOTS as i64,
        });
    }
    let slots = if extended { p + 1 } else { p };
    let mut gens = Vec::with_capacity(2 * p + 1);
    let mut labels = Vec::with_capacity(2 * p + 1);
    for a in 1..=p {
        for (brick, tag) in [(brick_x(), '+'), (brick_j(), '-')] {
            let bricks: Vec<SignedPerm> = (1..=slots)
                .map(|slot| match slot.cmp(&a) {
                    std::cmp::Ordering::Less => brick_z(),
                    std::cmp::Ordering::Equal => brick.clone(),
                    std::cmp::Ordering::Greater => brick_i(),
                })
                .collect();
            gens.push(tensor(&bricks));
            labels.push(format!("e{a}{tag}"));
        }
    }
    if extended {
        let mut bricks = vec![brick_z(); p];
        bricks.push(brick_x());
        gens.push(tensor(&bricks));
        labels.push("e0".to_string());
    }
    GeneratorFamily::new(gens, labels)
}
