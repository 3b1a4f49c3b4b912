//! Realification `U(n) → O(2n)`, rotations between points of a sphere, and
//! the `R⁵⊕R³⊕R¹` and join decompositions of `R⁹` and `S⁹`.
//!
//! Realification is interleaved: `z_k = x_k + i·y_k` occupies real
//! coordinates `2k, 2k+1`, so `J` is block-diagonal with blocks `[[0,−1],[1,0]]`.

use nalgebra::{Complex, DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::config::Config;
use crate::cosmos::{CoordSubspace, DIM};
use crate::error::{Error, Result};

pub type C64 = Complex<f64>;
pub type ComplexMatrix = DMatrix<C64>;

/// `max |entry|` of `A − I`.
pub fn identity_defect(a: &DMatrix<f64>) -> f64 {
    let n = a.nrows();
    (a - DMatrix::<f64>::identity(n, n)).amax()
}

pub fn unitarity_defect(u: &ComplexMatrix) -> f64 {
    let n = u.nrows();
    let g = u.adjoint() * u - ComplexMatrix::identity(n, n);
    g.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// The interleaved complex structure on `R^{2n}`; `J² = −I` exactly.
pub fn complex_structure(n: usize) -> DMatrix<i8> {
    let mut j = DMatrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(2 * k, 2 * k + 1)] = -1;
        j[(2 * k + 1, 2 * k)] = 1;
    }
    j
}

/// Block substitution `a + bi ↦ [[a, −b], [b, a]]` with no checks.
pub fn realify_matrix(u: &ComplexMatrix) -> DMatrix<f64> {
    let n = u.nrows();
    let mut r = DMatrix::zeros(2 * n, 2 * n);
    for j in 0..n {
        for k in 0..n {
            let z = u[(j, k)];
            r[(2 * j, 2 * k)] = z.re;
            r[(2 * j, 2 * k + 1)] = -z.im;
            r[(2 * j + 1, 2 * k)] = z.im;
            r[(2 * j + 1, 2 * k + 1)] = z.re;
        }
    }
    r
}

/// `R·J − J·R`, computed by index rearrangement so that no rounding occurs.
pub fn j_commutator_max(r: &DMatrix<f64>) -> f64 {
    let n = r.nrows();
    // (RJ)_{ab} = R_{a,b^} J_{b^,b} and (JR)_{ab} = J_{a,a^} R_{a^,b}, x^ = x xor 1
    let sgn = |x: usize| if x.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let rj = sgn(b) * r[(a, b ^ 1)];
            let jr = -sgn(a) * r[(a ^ 1, b)];
            worst = worst.max((rj - jr).abs());
        }
    }
    worst
}

/// A realified unitary together with its measured defects.
#[derive(Debug, Clone, PartialEq)]
pub struct RealOrthogonal {
    pub r: DMatrix<f64>,
    pub orthogonality_defect: f64,
    pub det: f64,
    pub j_defect: f64,
}

impl RealOrthogonal {
    pub fn is_special_orthogonal(&self, cfg: &Config) -> bool {
        self.orthogonality_defect <= cfg.orthogonality_tol && (self.det - 1.0).abs() <= cfg.determinant_tol
    }
}

pub fn realify(u: &ComplexMatrix, special: bool, cfg: &Config) -> Result<RealOrthogonal> {
    let n = u.nrows();
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "matrix size n",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    if u.ncols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: u.ncols(),
        });
    }
    let defect = unitarity_defect(u);
    if defect.is_nan() || defect > cfg.unitarity_tol {
        return Err(Error::NotUnitary { defect });
    }
    if special {
        let d = (u.determinant() - C64::new(1.0, 0.0)).norm();
        if d.is_nan() || d > cfg.determinant_tol {
            return Err(Error::NotSpecial { defect: d });
        }
    }
    let r = realify_matrix(u);
    Ok(RealOrthogonal {
        orthogonality_defect: identity_defect(&(r.transpose() * &r)),
        det: r.determinant(),
        j_defect: j_commutator_max(&r),
        r,
    })
}

/// Haar-random unitary from Gram–Schmidt of a Gaussian matrix; with
/// `special`, the first column absorbs `det⁻¹`.
pub fn random_unitary<R: Rng + ?Sized>(n: usize, special: bool, rng: &mut R) -> ComplexMatrix {
    let mut cols: Vec<DVector<C64>> = Vec::with_capacity(n);
    while cols.len() < n {
        let mut v = DVector::from_fn(n, |_, _| {
            C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
        });
        // two passes keep the columns orthogonal to machine precision
        for _ in 0..2 {
            for c in &cols {
                let proj = c.dotc(&v);
                v -= c * proj;
            }
        }
        let norm = v.norm();
        if norm > 1e-8 {
            cols.push(v / C64::new(norm, 0.0));
        }
    }
    let mut u = ComplexMatrix::from_columns(&cols);
    if special && n > 0 {
        let d = u.determinant();
        let phase = (d / C64::new(d.norm(), 0.0)).conj();
        let mut c0 = u.column_mut(0);
        c0 *= phase;
    }
    u
}

pub fn random_unit_vector<R: Rng + ?Sized>(m: usize, rng: &mut R) -> DVector<f64> {
    loop {
        let v = DVector::from_fn(m, |_, _| rng.sample::<f64, _>(StandardNormal));
        let norm = v.norm();
        if norm > 1e-8 {
            return v / norm;
        }
    }
}

fn check_unit(x: &DVector<f64>, tol: f64) -> Result<()> {
    let norm = x.norm();
    if norm.is_nan() || (norm - 1.0).abs() > tol {
        return Err(Error::NotUnit { norm });
    }
    Ok(())
}

/// Rotation in the plane `span{u, w}` taking `u` to `c·u + s·w`.
fn plane_rotation(u: &DVector<f64>, w: &DVector<f64>, c: f64, s: f64) -> DMatrix<f64> {
    let m = u.len();
    let mut r = DMatrix::identity(m, m);
    r += (u * u.transpose() + w * w.transpose()) * (c - 1.0);
    r += (w * u.transpose() - u * w.transpose()) * s;
    r
}

/// Component of `v` orthogonal to the unit vector `u`, re-orthogonalized once.
fn orthogonal_part(v: &DVector<f64>, u: &DVector<f64>) -> DVector<f64> {
    let mut w = v - u * u.dot(v);
    w -= u * u.dot(&w);
    w
}

/// A rotation `R ∈ SO(m)` with `R·u = v`, acting as the identity on
/// `span{u, v}^⊥`. Antipodal pairs pass through the first standard basis
/// vector that is well separated from `u`.
pub fn orbit_rotation(u: &DVector<f64>, v: &DVector<f64>, tol: f64) -> Result<DMatrix<f64>> {
    if u.len() != v.len() {
        return Err(Error::DimensionMismatch {
            expected: u.len(),
            found: v.len(),
        });
    }
    if u.is_empty() {
        return Err(Error::OutOfRange {
            what: "ambient dimension m",
            value: 0,
            min: 1,
            max: i64::MAX,
        });
    }
    check_unit(u, tol)?;
    check_unit(v, tol)?;
    let m = u.len();
    let u = u.normalize();
    let v = v.normalize();
    let w = orthogonal_part(&v, &u);
    let wn = w.norm();
    if wn > 1e-12 {
        let w = w / wn;
        return Ok(plane_rotation(&u, &w, u.dot(&v), w.dot(&v)));
    }
    if u.dot(&v) > 0.0 {
        return Ok(DMatrix::identity(m, m));
    }
    if m == 1 {
        return Err(Error::NoRotationInDimensionOne);
    }
    let a = (0..m)
        .map(|k| orthogonal_part(&DVector::from_fn(m, |i, _| if i == k { 1.0 } else { 0.0 }), &u))
        .find(|e| e.norm_squared() >= 0.5)
        .expect("some basis vector has |u_k|² ≤ 1/2 when m ≥ 2")
        .normalize();
    // u → a and a → −u are both quarter turns in the same plane
    let quarter = plane_rotation(&u, &a, 0.0, 1.0);
    Ok(&quarter * &quarter)
}

/// Consecutive coordinate blocks of `R⁹` with the given dimensions.
pub fn coordinate_split(dims: &[usize]) -> Result<Vec<CoordSubspace>> {
    let total: usize = dims.iter().sum();
    if total != DIM || dims.contains(&0) {
        return Err(Error::InvalidSubspace(format!(
            "block sizes {dims:?} must be positive and sum to {DIM}"
        )));
    }
    let mut start = 1;
    dims.iter()
        .map(|&d| {
            let idx: Vec<usize> = (start..start + d).collect();
            start += d;
            CoordSubspace::new(&idx)
        })
        .collect()
}

/// `(u·cos t, v·sin t)`: a point of `S^{p+q+1}` from `u ∈ S^p`, `v ∈ S^q`.
pub fn sphere_join(u: &DVector<f64>, v: &DVector<f64>, t: f64, tol: f64) -> Result<DVector<f64>> {
    check_unit(u, tol)?;
    check_unit(v, tol)?;
    if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&t) {
        return Err(Error::OutOfRange {
            what: "join angle t (milliradians)",
            value: (t * 1e3) as i64,
            min: 0,
            max: (std::f64::consts::FRAC_PI_2 * 1e3) as i64,
        });
    }
    let (s, c) = t.sin_cos();
    Ok(DVector::from_iterator(
        u.len() + v.len(),
        u.iter().map(|x| x * c).chain(v.iter().map(|y| y * s)),
    ))
}

/// Inverse join chart: splits `x ∈ R^{head+tail}` into `(u, v, t)` with
/// `t = atan2(‖tail‖, ‖head‖)`. A vanishing block gets the first basis
/// vector as its (arbitrary) direction.
pub fn join_inverse(x: &DVector<f64>, head: usize) -> Result<(DVector<f64>, DVector<f64>, f64)> {
    if head == 0 || head >= x.len() {
        return Err(Error::DimensionMismatch {
            expected: head + 1,
            found: x.len(),
        });
    }
    let direction = |block: DVector<f64>| {
        let n = block.norm();
        if n > 0.0 {
            (block / n, n)
        } else {
            let mut e = DVector::zeros(block.len());
            e[0] = 1.0;
            (e, 0.0)
        }
    };
    let (u, hn) = direction(x.rows(0, head).into_owned());
    let (v, tn) = direction(x.rows(head, x.len() - head).into_owned());
    Ok((u, v, tn.atan2(hn)))
}

/// `‖join(join_inverse(x)) − x‖`.
pub fn join_residual(x: &DVector<f64>, head: usize) -> Result<f64> {
    let (u, v, t) = join_inverse(x, head)?;
    Ok((sphere_join(&u, &v, t, 1e-12)? - x).norm())
}

/// Places a point of the unit sphere in `span(s)` inside `R⁹`; the other
/// reading of the sphere decomposition, as coordinate subspheres.
pub fn subsphere_embedding(x: &DVector<f64>, s: CoordSubspace, tol: f64) -> Result<DVector<f64>> {
    if x.len() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: x.len(),
        });
    }
    check_unit(x, tol)?;
    let mut out = DVector::zeros(DIM);
    for (k, i) in s.indices().into_iter().enumerate() {
        out[i - 1] = x[k];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cfg() -> Config {
        Config::default()
    }

    #[test]
    fn j_squares_to_minus_identity() {
        for n in 1..=5 {
            let j = complex_structure(n).map(i32::from);
            assert_eq!(&j * &j, -DMatrix::<i32>::identity(2 * n, 2 * n));
        }
    }

    #[test]
    fn realify_examples() {
        let id = realify(&ComplexMatrix::identity(3, 3), true, &cfg()).unwrap();
        assert_eq!(id.r, DMatrix::identity(6, 6));
        let i = ComplexMatrix::from_element(1, 1, C64::new(0.0, 1.0));
        let r = realify(&i, false, &cfg()).unwrap();
        assert_eq!(r.r, DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0]));
        // (i) has det i, so it is unitary but not special
        assert!(matches!(realify(&i, true, &cfg()), Err(Error::NotSpecial { .. })));
    }

    #[test]
    fn realify_rejects_bad_input() {
        let m = ComplexMatrix::from_element(2, 2, C64::new(1.0, 0.0));
        assert!(matches!(realify(&m, false, &cfg()), Err(Error::NotUnitary { .. })));
        assert!(realify(&ComplexMatrix::zeros(0, 0), false, &cfg()).is_err());
    }

    #[test]
    fn realify_matches_float_commutator() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 1..=5 {
            let r = realify(&random_unitary(n, true, &mut rng), true, &cfg()).unwrap();
            let j = complex_structure(n).map(f64::from);
            assert_eq!(&r.r * &j, &j * &r.r);
            assert_eq!(r.j_defect, 0.0);
            assert!(r.is_special_orthogonal(&cfg()));
        }
    }

    #[test]
    fn j_commutator_detects_non_complex_matrices() {
        let mut m = DMatrix::identity(4, 4);
        m[(0, 0)] = 2.0;
        assert!(j_commutator_max(&m) > 0.5);
    }

    #[test]
    fn orbit_rotation_examples() {
        let e = |m: usize, k: usize| DVector::from_fn(m, |i, _| if i == k { 1.0 } else { 0.0 });
        assert_eq!(
            orbit_rotation(&e(4, 2), &e(4, 2), 1e-10).unwrap(),
            DMatrix::identity(4, 4)
        );
        let g = orbit_rotation(&e(2, 0), &e(2, 1), 1e-10).unwrap();
        assert!((g - DMatrix::from_row_slice(2, 2, &[0.0, -1.0, 1.0, 0.0])).amax() < 1e-15);
        let anti = orbit_rotation(&e(3, 0), &(-e(3, 0)), 1e-10).unwrap();
        assert!((&anti * e(3, 0) + e(3, 0)).norm() < 1e-15);
        assert!((anti.determinant() - 1.0).abs() < 1e-12);
        assert_eq!(
            orbit_rotation(&e(1, 0), &(-e(1, 0)), 1e-10),
            Err(Error::NoRotationInDimensionOne)
        );
        assert!(matches!(
            orbit_rotation(&(e(3, 0) * 2.0), &e(3, 1), 1e-10),
            Err(Error::NotUnit { .. })
        ));
    }

    #[test]
    fn orbit_rotation_near_antipodal() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let u = random_unit_vector(6, &mut rng);
        let mut v = -u.clone();
        v[0] += 1e-9;
        let v = v.normalize();
        let r = orbit_rotation(&u, &v, 1e-10).unwrap();
        assert!((&r * &u - &v).norm() < 1e-10);
        assert!(identity_defect(&(r.transpose() * &r)) < 1e-10);
    }

    #[test]
    fn split_examples() {
        let s = coordinate_split(&[5, 3, 1]).unwrap();
        assert_eq!(s, vec![CoordSubspace::E5, CoordSubspace::E3, CoordSubspace::E1]);
        assert_eq!(coordinate_split(&[9]).unwrap(), vec![CoordSubspace::E9]);
        let s = coordinate_split(&[4, 4, 1]).unwrap();
        assert_eq!(s[1].indices(), vec![5, 6, 7, 8]);
        assert!(coordinate_split(&[5, 3]).is_err());
        assert!(coordinate_split(&[9, 0]).is_err());
    }

    #[test]
    fn join_examples() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let u = random_unit_vector(6, &mut rng);
        let v = random_unit_vector(4, &mut rng);
        let x = sphere_join(&u, &v, 0.0, 1e-10).unwrap();
        assert_eq!(x.rows(0, 6).into_owned(), u);
        assert!(x.rows(6, 4).iter().all(|&y| y == 0.0));
        let y = sphere_join(&u, &v, 0.7, 1e-10).unwrap();
        assert!((y.norm_squared() - 1.0).abs() < 1e-14);
        assert!(join_residual(&y, 6).unwrap() < 1e-15);
        assert!(sphere_join(&u, &v, 2.0, 1e-10).is_err());
    }

    #[test]
    fn join_inverse_on_coordinate_subspheres() {
        let mut x = DVector::zeros(10);
        x[7] = 1.0;
        let (_, v, t) = join_inverse(&x, 6).unwrap();
        assert_eq!(t, std::f64::consts::FRAC_PI_2);
        assert_eq!(v[1], 1.0);
        assert!(join_residual(&x, 6).unwrap() < 1e-16);
    }

    #[test]
    fn subsphere_embedding_places_coordinates() {
        let x = DVector::from_vec(vec![0.6, 0.0, 0.8]);
        let y = subsphere_embedding(&x, CoordSubspace::E3, 1e-10).unwrap();
        assert_eq!(y[5], 0.6);
        assert_eq!(y[7], 0.8);
        assert!(subsphere_embedding(&x, CoordSubspace::E5, 1e-10).is_err());
    }
}
