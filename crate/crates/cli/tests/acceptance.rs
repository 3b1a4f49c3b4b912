//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` are expected to fail; the run is green when
//! every other criterion passes and every known-red criterion still fails.
//! A known-red criterion that starts passing fails the run so the list
//! cannot go stale.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};
use std::process::Command;
use std::time::{Duration, Instant};

use arrowalg_core::arrowgroup::generate;
use arrowalg_core::cliffalg::{center_analysis, claim_report, classify, iso_check, tensor_power_check, Signature};
use arrowalg_core::config::Config;
use arrowalg_core::cosmos::{
    breaking_chain, commutant, gut_vev, is_invariant, restriction_coefficient, unitary_commutant_dim, Ambient,
    CoordSubspace, CqMatrix, EndoF,
};
use arrowalg_core::exact::{q, q_frac, Q};
use arrowalg_core::minimal::{
    analytic_mean_curvature, mean_curvature_root, numeric_mean_curvature, sphere_volume, ProductSphereEmbedding,
};
use arrowalg_core::unitary::{
    coordinate_split, identity_defect, join_residual, orbit_rotation, random_unit_vector, random_unitary, realify,
    sphere_join,
};
use arrowalg_core::{pauli_string_family, SignedPerm};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria expected to fail, with the reason printed next to them.
const KNOWN_RED: &[(u32, &str)] = &[(
    1,
    "g_i g_j = (g_j g_i)^-1 needs g_i^2 = g_j^2; the family mixes squares +1 and -1",
)];

const ORTHOGONALITY_TOL: f64 = 1e-10;
const DET_TOL: f64 = 1e-8;
const CURVATURE_TOL: f64 = 1e-4;
const OFF_BALANCE_TOL: f64 = 1e-3;
const ROOT_TOL: f64 = 1e-10;
const JOIN_TOL: f64 = 1e-9;
const STEP: f64 = 1e-3;

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    title: &'static str,
    bound: Option<Duration>,
    run: fn() -> Outcome,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn generator_relations() -> Outcome {
    let (mut pairs, mut inverse_ok, mut first_bad) = (0, 0, None);
    for p in 1..=4 {
        let f = pauli_string_family(p, false).map_err(|e| e.to_string())?;
        let g = f.gens();
        let n = f.dimension();
        let id = SignedPerm::identity(n).unwrap();
        let minus = SignedPerm::minus_identity(n).unwrap();
        for (i, gi) in g.iter().enumerate() {
            let sq = gi.compose(gi).unwrap();
            ensure(sq == id || sq == minus, || format!("p={p}: g{i}^2 is not ±1"))?;
            for (j, gj) in g.iter().enumerate().skip(i + 1) {
                pairs += 1;
                let ab = gi.compose(gj).unwrap();
                let ba = gj.compose(gi).unwrap();
                ensure(ab == ba.negate(), || format!("p={p}: g{i}, g{j} do not anticommute"))?;
                if ab == ba.inverse() {
                    inverse_ok += 1;
                } else if first_bad.is_none() {
                    first_bad = Some((p, i, j));
                }
            }
        }
    }
    let summary = format!(
        "anticommutation and ±1 squares hold on all {pairs} pairs; inverse relation holds on {inverse_ok}/{pairs}"
    );
    match first_bad {
        None => Ok(summary),
        Some((p, i, j)) => Err(format!("{summary}, first failure p={p} pair ({i},{j})")),
    }
}

fn group_order_law() -> Outcome {
    let mut orders = Vec::new();
    for p in 1..=3 {
        let f = pauli_string_family(p, false).map_err(|e| e.to_string())?;
        let g = generate(&f, 1 << 20).map_err(|e| e.to_string())?;
        ensure(g.order() == 1 << (2 * p + 1), || format!("p={p}: order {}", g.order()))?;
        orders.push(g.order().to_string());
    }
    Ok(format!("|G| = {}", orders.join(", ")))
}

fn twisted_isomorphism() -> Outcome {
    let mut out = Vec::new();
    for p in 1..=4 {
        let f = pauli_string_family(p, false).map_err(|e| e.to_string())?;
        let o = iso_check(&f, Signature::new(p, p)).map_err(|e| e.to_string())?;
        let dim = 1u64 << (2 * p);
        ensure(o.passed(), || format!("Cl({p},{p}): witness {:?}", o.witness))?;
        ensure(o.exhaustive && o.pairs_checked == dim * dim, || {
            format!("Cl({p},{p}): {} pairs checked", o.pairs_checked)
        })?;
        out.push(format!("Cl({p},{p}) {} pairs", o.pairs_checked));
    }
    Ok(out.join(", "))
}

fn tensor_power() -> Outcome {
    let mut out = Vec::new();
    for m in 1..=3 {
        let o = tensor_power_check(m).map_err(|e| e.to_string())?;
        ensure(o.passed(), || format!("m={m}: witness {:?}", o.witness))?;
        out.push(format!("m={m} {} pairs", o.pairs_checked));
    }
    Ok(out.join(", "))
}

fn classifier() -> Outcome {
    let mut count = 0;
    for n in 0..=6 {
        for p in 0..=n {
            let s = Signature::new(p, n - p);
            let d = classify(s).map_err(|e| e.to_string())?;
            let a = center_analysis(s).map_err(|e| e.to_string())?;
            ensure(a.agrees_with(&d), || format!("{s}: {d} vs center {a:?}"))?;
            count += 1;
        }
    }
    let d44 = classify(Signature::new(4, 4)).map_err(|e| e.to_string())?;
    ensure(d44.to_string() == "Mat16(R)" && d44.real_dim() == 256, || {
        format!("Cl(4,4) = {d44}")
    })?;
    let claims = claim_report();
    for sig in [Signature::new(0, 4), Signature::new(4, 0), Signature::new(4, 4)] {
        let e = claims.iter().find(|e| e.signature == sig);
        ensure(e.is_some_and(|e| !e.descriptor.is_empty()), || {
            format!("no claim entry for {sig}")
        })?;
    }
    Ok(format!(
        "{count} signatures agree; Cl(4,4) = {d44} (dim 256); Cl(4)/Cl(4,4) claim entries recorded"
    ))
}

fn rational<R: Rng>(rng: &mut R) -> Q {
    q_frac(rng.random_range(-20..=20), rng.random_range(1..=7))
}

fn cosmos_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC05);
    let mut zero = 0;
    for t in 0..100 {
        let alpha = rational(&mut rng);
        let beta = rational(&mut rng);
        let gamma = if t % 2 == 0 {
            zero += 1;
            [q(0), q(0), q(0)]
        } else {
            let k = rng.random_range(0..3);
            let mut g = [q(0), q(0), q(0)];
            g[k] = q(rng.random_range(1..=9));
            g
        };
        let f = EndoF::new(alpha.clone(), beta.clone(), gamma.clone());
        let gz = f.gamma_is_zero();
        ensure(
            is_invariant(&f, CoordSubspace::E5) && is_invariant(&f, CoordSubspace::E1),
            || format!("triple {t}: E5/E1 not invariant"),
        )?;
        ensure(is_invariant(&f, CoordSubspace::E3) == gz, || {
            format!("triple {t}: E3 invariance")
        })?;
        let c = |s| restriction_coefficient(&f, s).map_err(|e| e.to_string());
        ensure(c(CoordSubspace::E5)? == Some(alpha), || {
            format!("triple {t}: E5 coefficient")
        })?;
        ensure(c(CoordSubspace::E1)? == Some(q(1)), || {
            format!("triple {t}: E1 coefficient")
        })?;
        if gz {
            ensure(c(CoordSubspace::E3)? == Some(beta), || {
                format!("triple {t}: E3 coefficient")
            })?;
        }
    }
    Ok(format!(
        "100 triples ({zero} with γ = 0): invariance and coefficients α, β, 1 exact"
    ))
}

fn commutant_dimensions() -> Outcome {
    let g = commutant(&EndoF::from_ints(2, 3, [0, 0, 0]));
    ensure((g.full_dim, g.antisym_dim) == (35, 13), || {
        format!("generic {}/{}", g.full_dim, g.antisym_dim)
    })?;
    let sm = unitary_commutant_dim(&gut_vev(), Ambient::Su).map_err(|e| e.to_string())?;
    let zero = unitary_commutant_dim(&CqMatrix::zeros(5), Ambient::Su).map_err(|e| e.to_string())?;
    let chain = breaking_chain().map_err(|e| e.to_string())?;
    ensure(sm == 12 && zero == 24 && chain == [24, 12, 9], || {
        format!("su(5) dims {zero}, {sm}, chain {chain:?}")
    })?;
    Ok(format!("F commutant 35/13; su(5) {zero} → {sm} → {}", chain[2]))
}

fn realification_and_orbits() -> Outcome {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x50);
    let (mut orth, mut det) = (0.0f64, 0.0f64);
    for i in 0..1000 {
        let n = 1 + i % 5;
        let r = realify(&random_unitary(n, true, &mut rng), true, &cfg).map_err(|e| e.to_string())?;
        ensure(r.j_defect == 0.0, || format!("sample {i}: RJ != JR"))?;
        orth = orth.max(r.orthogonality_defect);
        det = det.max((r.det - 1.0).abs());
    }
    ensure(orth < ORTHOGONALITY_TOL && det < DET_TOL, || {
        format!("orthogonality {orth:e}, det {det:e}")
    })?;
    let mut res = 0.0f64;
    for _ in 0..1000 {
        let u = random_unit_vector(10, &mut rng);
        let v = random_unit_vector(10, &mut rng);
        let r = orbit_rotation(&u, &v, ORTHOGONALITY_TOL).map_err(|e| e.to_string())?;
        ensure(identity_defect(&(r.transpose() * &r)) < ORTHOGONALITY_TOL, || {
            "rotation not orthogonal".into()
        })?;
        res = res.max((&r * &u - &v).norm());
    }
    ensure(res < ORTHOGONALITY_TOL, || format!("orbit residual {res:e}"))?;
    Ok(format!(
        "max ‖RᵀR−I‖ {orth:.1e}, max |det−1| {det:.1e}, RJ = JR exactly; max ‖Ru−v‖ {res:.1e}"
    ))
}

fn sphere_decompositions() -> Outcome {
    let s = coordinate_split(&[5, 3, 1]).map_err(|e| e.to_string())?;
    ensure(s == [CoordSubspace::E5, CoordSubspace::E3, CoordSubspace::E1], || {
        format!("{s:?}")
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5E);
    let (mut res, mut norm) = (0.0f64, 0.0f64);
    for _ in 0..10_000 {
        let x = random_unit_vector(10, &mut rng);
        res = res.max(join_residual(&x, 6).map_err(|e| e.to_string())?);
        let u = random_unit_vector(6, &mut rng);
        let v = random_unit_vector(4, &mut rng);
        let y = sphere_join(&u, &v, rng.random_range(0.0..=FRAC_PI_2), 1e-10).map_err(|e| e.to_string())?;
        norm = norm.max((y.norm_squared() - 1.0).abs());
    }
    ensure(res < JOIN_TOL && norm < 1e-14, || {
        format!("residual {res:e}, norm defect {norm:e}")
    })?;
    Ok(format!(
        "{{1..5}},{{6..8}},{{9}}; S^5 * S^3 = S^9 inversion residual {res:.1e} over 10^4 points (join reading)"
    ))
}

fn minimality() -> Outcome {
    let balanced = ProductSphereEmbedding::minimal(4, 4).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x10);
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let x = balanced.sample(&mut rng);
        let s = numeric_mean_curvature(&balanced, &x, STEP).map_err(|e| e.to_string())?;
        worst = worst.max(s.h_numeric.abs());
    }
    ensure(worst < CURVATURE_TOL, || format!("max |H| {worst:e}"))?;
    let off = ProductSphereEmbedding::with_r(4, 4, 0.6).map_err(|e| e.to_string())?;
    let h_off = numeric_mean_curvature(&off, &off.sample(&mut rng), STEP)
        .map_err(|e| e.to_string())?
        .h_numeric;
    let expected = analytic_mean_curvature(4, 4, 0.6, 0.8).map_err(|e| e.to_string())?;
    ensure((expected - 7.0 / 24.0).abs() < 1e-15, || {
        format!("analytic H(0.6) = {expected}")
    })?;
    ensure((h_off - 7.0 / 24.0).abs() < OFF_BALANCE_TOL, || {
        format!("H(0.6) = {h_off}")
    })?;
    let root = mean_curvature_root(4, 4, 1e-12);
    ensure((root - FRAC_1_SQRT_2).abs() < ROOT_TOL, || format!("root {root}"))?;
    let great = sphere_volume(8, 1.0);
    let product = balanced.volume();
    ensure((great - 29.6866).abs() < 5e-5, || format!("Vol(S^8) = {great}"))?;
    ensure((product - 4.0 * PI.powi(4) / 9.0).abs() < 1e-9, || {
        format!("product volume {product}")
    })?;
    ensure(great < product, || "volume ordering".into())?;
    Ok(format!(
        "max |H| {worst:.1e} at 50 points; H(0.6) = {h_off:.6}; root {root:.12}; Vol(S^8) {great:.4} < {product:.4}"
    ))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_arrowalg");
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for threads in ["1", "4", "1"] {
        let path = dir.path().join(format!("full_{}.json", outputs.len()));
        let status = Command::new(bin)
            .args(["all", "--seed", "7", "--out"])
            .arg(&path)
            .env("RAYON_NUM_THREADS", threads)
            .env_remove("ARROWALG_CONFIG")
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.code() == Some(0), || {
            format!("exit {:?}", status.status.code())
        })?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || "reports differ".into())?;
    Ok(format!(
        "3 runs (1, 4, 1 threads) byte-identical, {} bytes",
        outputs[0].len()
    ))
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            title: "generator relations",
            bound: Some(Duration::from_secs(1)),
            run: generator_relations,
        },
        Criterion {
            id: 2,
            title: "group order law",
            bound: Some(Duration::from_secs(1)),
            run: group_order_law,
        },
        Criterion {
            id: 3,
            title: "twisted algebra ≅ Cl(p,p)",
            bound: Some(Duration::from_secs(30)),
            run: twisted_isomorphism,
        },
        Criterion {
            id: 4,
            title: "tensor-power isomorphism",
            bound: Some(Duration::from_secs(10)),
            run: tensor_power,
        },
        Criterion {
            id: 5,
            title: "classifier vs exact center",
            bound: None,
            run: classifier,
        },
        Criterion {
            id: 6,
            title: "cosmos invariance",
            bound: None,
            run: cosmos_invariance,
        },
        Criterion {
            id: 7,
            title: "commutant dimensions",
            bound: Some(Duration::from_secs(5)),
            run: commutant_dimensions,
        },
        Criterion {
            id: 8,
            title: "realification and orbits",
            bound: None,
            run: realification_and_orbits,
        },
        Criterion {
            id: 9,
            title: "sphere decompositions",
            bound: None,
            run: sphere_decompositions,
        },
        Criterion {
            id: 10,
            title: "minimality",
            bound: Some(Duration::from_secs(10)),
            run: minimality,
        },
        Criterion {
            id: 11,
            title: "determinism",
            bound: None,
            run: determinism,
        },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let mut outcome = (c.run)();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(bound)) = (&outcome, c.bound) {
            if elapsed > bound {
                outcome = Err(format!(
                    "took {} ms, bound {} ms",
                    elapsed.as_millis(),
                    bound.as_millis()
                ));
            }
        }
        let known = KNOWN_RED.iter().find(|(id, _)| *id == c.id).map(|(_, why)| *why);
        let timing = format!("{} ms", elapsed.as_millis());
        match (&outcome, known) {
            (Ok(detail), None) => println!("PASS  {:>2} {}: {detail} ({timing})", c.id, c.title),
            (Err(detail), Some(why)) => {
                println!("FAIL  {:>2} {}: {detail} ({timing}) [known: {why}]", c.id, c.title)
            }
            (Err(detail), None) => {
                println!("FAIL  {:>2} {}: {detail} ({timing})", c.id, c.title);
                unexpected.push(c.id);
            }
            (Ok(detail), Some(_)) => {
                println!(
                    "PASS  {:>2} {}: {detail} ({timing}) [listed as known-red; update KNOWN_RED]",
                    c.id, c.title
                );
                unexpected.push(c.id);
            }
        }
    }
    println!(
        "{} criteria, {} known-red, {} unexpected",
        criteria.len(),
        KNOWN_RED.len(),
        unexpected.len()
    );
    if !unexpected.is_empty() {
        std::process::exit(1);
    }
}
