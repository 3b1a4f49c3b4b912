use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_EXACT_N: usize = 16;

/// Metric signature: the first `p` generators square to `+1`, the
/// remaining `q` to `−1`.
///
/// The bare notation `Cl(n)` with `e_i e_j + e_j e_i = −2δ_ij` is
/// `Signature::new(0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Signature {
    pub p: usize,
    pub q: usize,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Self {
        Self { p, q }
    }

    /// All-negative signature, `Cl(n)` in the `−2δ` convention.
    pub fn negative(n: usize) -> Self {
        Self { p: 0, q: n }
    }

    pub fn n(&self) -> usize {
        self.p + self.q
    }

    pub fn dim(&self) -> usize {
        1 << self.n()
    }

    /// Square of generator `k` (0-based).
    pub fn metric(&self, k: usize) -> i8 {
        debug_assert!(k < self.n());
        if k < self.p {
            1
        } else {
            -1
        }
    }

    pub fn check_exact(&self) -> Result<()> {
        if self.n() > MAX_EXACT_N {
            return Err(Error::OutOfRange {
                what: "generator count p+q",
                value: self.n() as i64,
                min: 0,
                max: MAX_EXACT_N as i64,
            });
        }
        Ok(())
    }

    /// Accepts `"p,q"` or the bare `"n"` (read as `(0, n)`).
    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::Parse(s.to_string());
        let t = s.trim().trim_start_matches("Cl(").trim_end_matches(')');
        match t.split_once(',') {
            Some((p, q)) => Ok(Self::new(
                p.trim().parse().map_err(|_| err())?,
                q.trim().parse().map_err(|_| err())?,
            )),
            None => Ok(Self::negative(t.trim().parse().map_err(|_| err())?)),
        }
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}

/// Basis monomial `e_{i1} e_{i2} …` with `i1 < i2 < …`; bit `k` stands for
/// generator `e_{k+1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Blade(pub u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// `e_k` for 1-based `k`.
    pub fn generator(k: usize) -> Self {
        assert!(k >= 1);
        Blade(1 << (k - 1))
    }

    pub fn grade(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn bits(&self) -> u32 {
        self.0
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        let mut first = true;
        for k in 0..32 {
            if self.0 >> k & 1 == 1 {
                if !first {
                    f.write_str("·")?;
                }
                write!(f, "e{}", k + 1)?;
                first = false;
            }
        }
        Ok(())
    }
}

/// Number of transpositions needed to bring `a·b` into increasing order.
fn reorder_parity(a: u32, b: u32) -> u32 {
    let mut x = a >> 1;
    let mut swaps = 0;
    while x != 0 {
        swaps += (x & b).count_ones();
        x >>= 1;
    }
    swaps & 1
}

/// `a·b = sign · (a XOR b)`.
pub fn blade_product(a: Blade, b: Blade, s: Signature) -> (i8, Blade) {
    let mut neg = reorder_parity(a.0, b.0) == 1;
    // generators with index ≥ p square to −1
    let negative_mask = if s.p >= 32 { 0 } else { !((1u32 << s.p) - 1) };
    if (a.0 & b.0 & negative_mask).count_ones() % 2 == 1 {
        neg = !neg;
    }
    (if neg { -1 } else { 1 }, Blade(a.0 ^ b.0))
}
