//! Mean curvature of hypersurfaces of the unit sphere by finite
//! differences of the unit normal, with closed-form oracles.
//!
//! `H = (1/d) Σᵢ ⟨D_{Xᵢ} ν, Xᵢ⟩` over an orthonormal tangent frame `Xᵢ`,
//! so the sign follows the chosen normal.

use std::f64::consts::PI;
use std::io::Write;

use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};
use crate::unitary::random_unit_vector;

pub const MIN_STEP: f64 = 1e-6;
pub const MAX_STEP: f64 = 1e-2;
const RADII_TOL: f64 = 1e-12;
const ON_SURFACE_TOL: f64 = 1e-10;

/// A hypersurface of the unit sphere in `R^{ambient}` with a smooth unit
/// normal field and curves through each point in any tangent direction.
pub trait Hypersurface: Sync {
    fn ambient(&self) -> usize;

    fn dim(&self) -> usize {
        self.ambient() - 2
    }

    /// Distance-like defect of `x` from the hypersurface.
    fn surface_defect(&self, x: &DVector<f64>) -> f64;

    fn normal(&self, x: &DVector<f64>) -> DVector<f64>;

    /// A point `c(t)` on the hypersurface with `c(0) = x`, `c'(0) = dir`.
    fn curve(&self, x: &DVector<f64>, dir: &DVector<f64>, t: f64) -> DVector<f64>;

    fn analytic_mean_curvature(&self) -> f64;
}

/// `S^p(r) × S^q(s) ⊂ S^{p+q+1}` with `r² + s² = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProductSphereEmbedding {
    pub p: usize,
    pub q: usize,
    pub r: f64,
    pub s: f64,
}

impl ProductSphereEmbedding {
    pub fn new(p: usize, q: usize, r: f64, s: f64) -> Result<Self> {
        check_radii(r, s)?;
        if p == 0 || q == 0 {
            return Err(Error::OutOfRange {
                what: "factor dimension",
                value: p.min(q) as i64,
                min: 1,
                max: i64::MAX,
            });
        }
        Ok(Self { p, q, r, s })
    }

    /// Radius `r` with `s = √(1 − r²)`.
    pub fn with_r(p: usize, q: usize, r: f64) -> Result<Self> {
        Self::new(p, q, r, (1.0 - r * r).max(0.0).sqrt())
    }

    /// The minimal member `r² = p/(p+q)`.
    pub fn minimal(p: usize, q: usize) -> Result<Self> {
        Self::with_r(p, q, (p as f64 / (p + q) as f64).sqrt())
    }

    pub fn point(&self, u: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
        debug_assert_eq!(u.len(), self.p + 1);
        debug_assert_eq!(v.len(), self.q + 1);
        DVector::from_iterator(
            self.ambient(),
            u.iter().map(|a| a * self.r).chain(v.iter().map(|b| b * self.s)),
        )
    }

    /// Factor-wise uniform point.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> DVector<f64> {
        let u = random_unit_vector(self.p + 1, rng);
        let v = random_unit_vector(self.q + 1, rng);
        self.point(&u, &v)
    }

    fn split(&self, x: &DVector<f64>) -> (DVector<f64>, DVector<f64>) {
        (
            x.rows(0, self.p + 1).into_owned(),
            x.rows(self.p + 1, self.q + 1).into_owned(),
        )
    }

    /// `Vol(S^p(r))·Vol(S^q(s))`.
    pub fn volume(&self) -> f64 {
        sphere_volume(self.p, self.r) * sphere_volume(self.q, self.s)
    }
}

impl Hypersurface for ProductSphereEmbedding {
    fn ambient(&self) -> usize {
        self.p + self.q + 2
    }

    fn surface_defect(&self, x: &DVector<f64>) -> f64 {
        if x.len() != self.ambient() {
            return f64::INFINITY;
        }
        let (a, b) = self.split(x);
        (a.norm() - self.r).abs().max((b.norm() - self.s).abs())
    }

    /// `ν = (s·u, −r·v)` where `x = (r·u, s·v)`.
    fn normal(&self, x: &DVector<f64>) -> DVector<f64> {
        let (a, b) = self.split(x);
        let u = a.normalize();
        let v = b.normalize();
        DVector::from_iterator(
            self.ambient(),
            u.iter().map(|c| c * self.s).chain(v.iter().map(|c| -c * self.r)),
        )
    }

    fn curve(&self, x: &DVector<f64>, dir: &DVector<f64>, t: f64) -> DVector<f64> {
        let (a, b) = self.split(x);
        let (da, db) = self.split(dir);
        let u = (a / self.r + da * (t / self.r)).normalize();
        let v = (b / self.s + db * (t / self.s)).normalize();
        self.point(&u, &v)
    }

    fn analytic_mean_curvature(&self) -> f64 {
        analytic_mean_curvature(self.p, self.q, self.r, self.s).expect("radii validated at construction")
    }
}

/// The great sphere `S^k = {x ∈ S^{k+1} : x_{k+2} = 0}` with normal `e_{k+2}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GreatSphere {
    pub k: usize,
}

impl GreatSphere {
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> DVector<f64> {
        let u = random_unit_vector(self.k + 1, rng);
        DVector::from_iterator(self.k + 2, u.iter().copied().chain(std::iter::once(0.0)))
    }
}

impl Hypersurface for GreatSphere {
    fn ambient(&self) -> usize {
        self.k + 2
    }

    fn surface_defect(&self, x: &DVector<f64>) -> f64 {
        if x.len() != self.ambient() {
            return f64::INFINITY;
        }
        (x.norm() - 1.0).abs().max(x[self.k + 1].abs())
    }

    fn normal(&self, _x: &DVector<f64>) -> DVector<f64> {
        let mut n = DVector::zeros(self.ambient());
        n[self.k + 1] = 1.0;
        n
    }

    fn curve(&self, x: &DVector<f64>, dir: &DVector<f64>, t: f64) -> DVector<f64> {
        (x + dir * t).normalize()
    }

    fn analytic_mean_curvature(&self) -> f64 {
        0.0
    }
}

fn check_radii(r: f64, s: f64) -> Result<()> {
    if !(r > 0.0 && s > 0.0 && (r * r + s * s - 1.0).abs() <= RADII_TOL) {
        return Err(Error::DegenerateRadii { r, s });
    }
    Ok(())
}

/// `(p·s/r − q·r/s)/(p+q)`: principal curvatures `s/r` (multiplicity `p`)
/// and `−r/s` (multiplicity `q`).
pub fn analytic_mean_curvature(p: usize, q: usize, r: f64, s: f64) -> Result<f64> {
    check_radii(r, s)?;
    let (p, q) = (p as f64, q as f64);
    Ok((p * s / r - q * r / s) / (p + q))
}

/// Orthonormal basis of `span{x, ν}^⊥` from projected coordinate vectors.
pub fn tangent_frame(x: &DVector<f64>, nu: &DVector<f64>, dim: usize) -> Result<Vec<DVector<f64>>> {
    let n = x.len();
    let xn = x.normalize();
    let mut frame: Vec<DVector<f64>> = Vec::with_capacity(dim);
    for k in 0..n {
        if frame.len() == dim {
            break;
        }
        let mut e = DVector::from_fn(n, |i, _| if i == k { 1.0 } else { 0.0 });
        for _ in 0..2 {
            for b in std::iter::once(&xn).chain(std::iter::once(nu)).chain(frame.iter()) {
                let c = b.dot(&e);
                e -= b * c;
            }
        }
        let norm = e.norm();
        if norm > 1e-3 {
            frame.push(e / norm);
        }
    }
    if frame.len() < dim {
        return Err(Error::IllConditionedFrame);
    }
    Ok(frame)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurvatureSample {
    pub point: Vec<f64>,
    pub h_numeric: f64,
    pub h_analytic: f64,
    pub step: f64,
}

impl CurvatureSample {
    pub fn defect(&self) -> f64 {
        (self.h_numeric - self.h_analytic).abs()
    }
}

/// Central differences of `ν` along each frame direction at step `h`.
pub fn numeric_mean_curvature<S: Hypersurface + ?Sized>(e: &S, x: &DVector<f64>, h: f64) -> Result<CurvatureSample> {
    if !(MIN_STEP..=MAX_STEP).contains(&h) {
        return Err(Error::BadStep(h));
    }
    let defect = e.surface_defect(x);
    if defect.is_nan() || defect > ON_SURFACE_TOL {
        return Err(Error::OffSurface { defect });
    }
    let frame = tangent_frame(x, &e.normal(x), e.dim())?;
    let trace: f64 = frame
        .iter()
        .map(|dir| {
            let ahead = e.normal(&e.curve(x, dir, h));
            let behind = e.normal(&e.curve(x, dir, -h));
            (ahead - behind).dot(dir) / (2.0 * h)
        })
        .sum();
    Ok(CurvatureSample {
        point: x.iter().copied().collect(),
        h_numeric: trace / e.dim() as f64,
        h_analytic: e.analytic_mean_curvature(),
        step: h,
    })
}

/// Defects at `h` and `h/2`; a ratio near 4 confirms second order.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Richardson {
    pub defect_h: f64,
    pub defect_half: f64,
    pub ratio: f64,
}

impl Richardson {
    /// Second-order convergence, or both defects already at roundoff level.
    pub fn second_order(&self, floor: f64) -> bool {
        self.defect_h <= floor || (3.5..=4.5).contains(&self.ratio)
    }
}

pub fn richardson<S: Hypersurface + ?Sized>(e: &S, x: &DVector<f64>, h: f64) -> Result<Richardson> {
    let a = numeric_mean_curvature(e, x, h)?.defect();
    let b = numeric_mean_curvature(e, x, h / 2.0)?.defect();
    Ok(Richardson {
        defect_h: a,
        defect_half: b,
        ratio: a / b,
    })
}

/// `count` seeded sample points, evaluated in parallel and returned in
/// draw order. Points with an ill-conditioned frame are redrawn.
pub fn sample_curvatures<S, F>(e: &S, count: usize, h: f64, seed: u64, draw: F) -> Result<Vec<CurvatureSample>>
where
    S: Hypersurface,
    F: Fn(&mut ChaCha8Rng) -> DVector<f64>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let points: Vec<DVector<f64>> = (out.len()..count).map(|_| draw(&mut rng)).collect();
        let results: Vec<Result<CurvatureSample>> =
            points.par_iter().map(|x| numeric_mean_curvature(e, x, h)).collect();
        for r in results {
            match r {
                Ok(s) => out.push(s),
                Err(Error::IllConditionedFrame) => {}
                Err(err) => return Err(err),
            }
        }
    }
    Ok(out)
}

/// `Vol(S^k(ρ)) = 2π^{(k+1)/2} / Γ((k+1)/2) · ρ^k`.
pub fn sphere_volume(k: usize, radius: f64) -> f64 {
    let a = (k as f64 + 1.0) / 2.0;
    2.0 * PI.powf(a) / gamma(a) * radius.powi(k as i32)
}

/// Root of `r ↦ H(r)` on `(0, 1)` by bisection, to width `tol`.
pub fn mean_curvature_root(p: usize, q: usize, tol: f64) -> f64 {
    let h = |r: f64| analytic_mean_curvature(p, q, r, (1.0 - r * r).sqrt()).expect("0 < r < 1");
    let (mut lo, mut hi) = (1e-9, 1.0 - 1e-9);
    // H decreases from +∞ at r → 0 to −∞ at r → 1
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if h(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Sign changes of `H` on a uniform interior grid of `(0, 1)`.
pub fn mean_curvature_sign_changes(p: usize, q: usize, grid: usize) -> usize {
    let values: Vec<f64> = (1..grid)
        .map(|i| {
            let r = i as f64 / grid as f64;
            analytic_mean_curvature(p, q, r, (1.0 - r * r).sqrt()).expect("0 < r < 1")
        })
        .collect();
    values.windows(2).filter(|w| w[0].signum() != w[1].signum()).count()
}

pub const VACUUM_INTERPRETATION: &str =
    "'globally minimal' read as H = 0; 'absolutely minimal' read as smaller volume; neither proves volume-minimality";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VacuumVolumeReport {
    pub product_volume: f64,
    pub product_closed_form: f64,
    pub great_sphere_volume: f64,
    pub great_sphere_closed_form: f64,
    pub great_sphere_smaller: bool,
    pub samples: usize,
    pub step: f64,
    pub product_max_h: f64,
    pub great_sphere_max_h: f64,
    pub interpretation: &'static str,
}

/// Volumes of `S⁴(1/√2)×S⁴(1/√2)` and `S⁸(1)` inside `S⁹`, and their
/// numeric mean curvatures over `samples` seeded points each.
pub fn vacuum_volume_report(samples: usize, h: f64, seed: u64) -> Result<VacuumVolumeReport> {
    let product = ProductSphereEmbedding::minimal(4, 4)?;
    let great = GreatSphere { k: 8 };
    let max_h = |v: Vec<CurvatureSample>| v.iter().map(|s| s.h_numeric.abs()).fold(0.0, f64::max);
    let ph = max_h(sample_curvatures(&product, samples, h, seed, |r| product.sample(r))?);
    let gh = max_h(sample_curvatures(&great, samples, h, seed, |r| great.sample(r))?);
    let pv = product.volume();
    let gv = sphere_volume(8, 1.0);
    Ok(VacuumVolumeReport {
        product_volume: pv,
        product_closed_form: 4.0 * PI.powi(4) / 9.0,
        great_sphere_volume: gv,
        great_sphere_closed_form: 32.0 * PI.powi(4) / 105.0,
        great_sphere_smaller: gv < pv,
        samples,
        step: h,
        product_max_h: ph,
        great_sphere_max_h: gh,
        interpretation: VACUUM_INTERPRETATION,
    })
}

/// CSV rows `x1..xN, H_numeric, H_analytic, h`.
pub fn write_csv<W: Write>(samples: &[CurvatureSample], out: W) -> Result<()> {
    let io = |e: csv::Error| Error::Io(e.to_string());
    let mut w = csv::Writer::from_writer(out);
    let n = samples.first().map_or(0, |s| s.point.len());
    let mut header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    header.extend(["H_numeric", "H_analytic", "h"].map(String::from));
    w.write_record(&header).map_err(io)?;
    for s in samples {
        let mut row: Vec<String> = s.point.iter().map(|x| format!("{x:e}")).collect();
        row.extend([s.h_numeric, s.h_analytic, s.step].map(|x| format!("{x:e}")));
        w.write_record(&row).map_err(io)?;
    }
    w.flush().map_err(|e| Error::Io(e.to_string()))
}
