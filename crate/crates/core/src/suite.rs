//! Every certified statement as a named [`Check`], plus the report builders
//! behind each CLI subcommand.
//!
//! Check functions never panic on module errors; an `Err` becomes a failed
//! check carrying the error text as its witness.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2};

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use crate::arrowgroup::{generate, group_order_law, verify_relations};
use crate::cliffalg::{
    center_analysis, claim_report, classify, iso_check, tensor_power_check, Descriptor, Ring, Signature, Verdict,
};
use crate::config::Config;
use crate::cosmos::{
    breaking_chain, commutant, commutant_numeric, gauge_report, gut_vev, is_invariant, restriction_coefficient,
    unitary_commutant_dim, Ambient, CoordSubspace, CqMatrix, EndoF, FULLY_SYMMETRIC, GAMMA_ZERO_VIOLATED,
};
use crate::dyadic::pauli_string_family;
use crate::error::{Error, Result};
use crate::exact::{q_frac, Q};
use crate::minimal::{
    mean_curvature_root, mean_curvature_sign_changes, richardson, sample_curvatures, vacuum_volume_report,
    CurvatureSample, ProductSphereEmbedding,
};
use crate::report::{Check, Status, VerificationReport};
use crate::unitary::{
    coordinate_split, identity_defect, join_residual, orbit_rotation, random_unit_vector, random_unitary, realify,
    sphere_join,
};

/// A group of related checks; each returns one or more entries.
pub type CheckFn = fn(&Config) -> Vec<Check>;

/// Sample counts used by the aggregate run.
pub const REALIFY_SAMPLES: usize = 1000;
pub const ORBIT_SAMPLES: usize = 1000;
pub const JOIN_SAMPLES: usize = 10_000;
pub const CURVATURE_SAMPLES: usize = 50;
pub const COSMOS_TRIPLES: usize = 100;

/// Per-check seed stream, stable under reordering of the registry.
fn seed_for(cfg: &Config, salt: u64) -> u64 {
    cfg.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(salt)
}

fn or_error(name: &str, claim: &str, r: Result<Check>) -> Check {
    r.unwrap_or_else(|e| Check::errored(name, claim, &e))
}

pub fn registry() -> Vec<(&'static str, CheckFn)> {
    vec![
        ("relations", relations_checks),
        ("group_order", |c| vec![group_order_check(c)]),
        ("iso", iso_checks),
        ("tensor_power", |c| vec![tensor_power_checks(c)]),
        ("classify", classify_checks),
        ("claims", claim_checks),
        ("cosmos_invariance", |c| vec![cosmos_invariance_check(c)]),
        ("cosmos_commutant", cosmos_commutant_checks),
        ("realify", |c| vec![realify_check(c)]),
        ("orbit", |c| vec![orbit_check(c)]),
        ("sphere_decomposition", sphere_decomposition_checks),
        ("minimal", minimal_checks),
    ]
}

/// Runs every registered check group concurrently; output order is by name.
pub fn run_all(cfg: &Config) -> VerificationReport {
    let groups = registry();
    let checks: Vec<Vec<Check>> = groups.par_iter().map(|(_, f)| f(cfg)).collect();
    let mut report = VerificationReport::new("all", cfg.seed);
    for (k, v) in config_params(cfg) {
        report.params.insert(k, v);
    }
    report.checks = checks.into_iter().flatten().collect();
    report.sort_checks();
    report
}

fn config_params(cfg: &Config) -> BTreeMap<String, String> {
    let v = serde_json::to_value(cfg).expect("config serializes");
    v.as_object()
        .expect("config is an object")
        .iter()
        .map(|(k, v)| (k.clone(), v.to_string()))
        .collect()
}

pub fn relations_checks(_cfg: &Config) -> Vec<Check> {
    let anti_claim = "pauli_string_family(p), p = 1..4: g_i g_j = -g_j g_i for i != j and g_i^2 = ±1";
    let inv_claim = "pauli_string_family(p), p = 1..4: g_i g_j = (g_j g_i)^-1 for every pair";
    let mut anti = Check::new("relations.anticommutation", anti_claim);
    let mut inv = Check::new("relations.inverse", inv_claim);
    let mut anti_bad = Vec::new();
    let mut inv_bad = BTreeMap::new();
    for p in 1..=4 {
        let f = match pauli_string_family(p, false) {
            Ok(f) => f,
            Err(e) => {
                return vec![
                    Check::errored(anti.name, anti_claim, &e),
                    Check::errored(inv.name, inv_claim, &e),
                ]
            }
        };
        let r = verify_relations(&f);
        anti = anti
            .number(&format!("p{p}.pairs"), r.pair_count)
            .number(&format!("p{p}.anticommuting_pairs"), r.anticommuting_pairs)
            .number(&format!("p{p}.signature"), r.signature());
        inv = inv
            .number(&format!("p{p}.pairs"), r.pair_count)
            .number(&format!("p{p}.inverse_relation_pairs"), r.inverse_relation_pairs);
        if !r.is_valid() || r.anticommuting_pairs != r.pair_count {
            anti_bad.push(json!({ "p": p, "failures": r.failures }));
        }
        if !r.inverse_relation_holds() {
            inv_bad.insert(
                format!("p{p}"),
                json!({
                    "failing_pairs": r.inverse_relation_failures,
                    "squares": r.squares,
                    "reason": "for anticommuting g_i, g_j the relation holds iff g_i^2 = g_j^2",
                }),
            );
        }
    }
    let anti = anti.require(anti_bad.is_empty(), anti_bad);
    let inv = if inv_bad.is_empty() { inv } else { inv.mismatch(inv_bad) };
    vec![anti, inv]
}

pub fn group_order_check(cfg: &Config) -> Check {
    let name = "group.order";
    let claim = "|<pauli_string_family(p)>| = 2^(2p+1) for p = 1..3";
    let run = || -> Result<Check> {
        let mut c = Check::new(name, claim);
        let mut bad = Vec::new();
        for p in 1..=3 {
            let f = pauli_string_family(p, false)?;
            let g = generate(&f, cfg.group_cap)?;
            let want = group_order_law(f.len());
            c = c.number(&format!("p{p}.order"), g.order());
            if g.order() as u128 != want || want != 1 << (2 * p + 1) || !g.normal_form_is_bijection() {
                bad.push(json!({ "p": p, "order": g.order(), "expected": want as u64 }));
            }
        }
        Ok(c.require(bad.is_empty(), bad))
    };
    or_error(name, claim, run())
}

pub fn iso_checks(_cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    for p in 1..=4 {
        let name = format!("iso.cl{p}{p}");
        let claim = format!("twisted algebra of pauli_string_family({p}) ≅ Cl({p},{p})");
        let run = || -> Result<Check> {
            let f = pauli_string_family(p, false)?;
            let o = iso_check(&f, Signature::new(p, p))?;
            Ok(Check::new(&name, &claim)
                .number("dim", o.dim)
                .number("pairs_checked", o.pairs_checked)
                .number("exhaustive", o.exhaustive)
                .require(
                    o.passed() && o.exhaustive && o.pairs_checked == (o.dim * o.dim) as u64,
                    &o.witness,
                ))
        };
        out.push(or_error(&name, &claim, run()));
    }
    for p in 1..=3 {
        let name = format!("iso.extended.cl{}{p}", p + 1);
        let claim = format!("twisted algebra of the extended family at p = {p} ≅ Cl({},{p})", p + 1);
        let run = || -> Result<Check> {
            let f = pauli_string_family(p, true)?;
            let o = iso_check(&f, Signature::new(p + 1, p))?;
            Ok(Check::new(&name, &claim)
                .number("dim", o.dim)
                .number("pairs_checked", o.pairs_checked)
                .require(o.passed(), &o.witness))
        };
        out.push(or_error(&name, &claim, run()));
    }
    out
}

pub fn tensor_power_checks(_cfg: &Config) -> Check {
    let name = "iso.tensor_power";
    let claim = "Cl(1,1)^{⊗m} ≅ Cl(m,m) for m = 1..3";
    let run = || -> Result<Check> {
        let mut c = Check::new(name, claim);
        let mut bad = Vec::new();
        for m in 1..=3 {
            let o = tensor_power_check(m)?;
            c = c.number(&format!("m{m}.pairs_checked"), o.pairs_checked);
            if !o.passed() {
                bad.push(json!({ "m": m, "pair": o.witness }));
            }
        }
        Ok(c.require(bad.is_empty(), bad))
    };
    or_error(name, claim, run())
}

pub fn classify_checks(_cfg: &Config) -> Vec<Check> {
    let name = "classify.bott_vs_center";
    let claim = "for p+q <= 6 the periodicity descriptor matches the exact center and central idempotents";
    let run = || -> Result<Check> {
        let sigs: Vec<Signature> = (0..=6usize)
            .flat_map(|n| (0..=n).map(move |p| Signature::new(p, n - p)))
            .collect();
        let results: Vec<Result<(Signature, Descriptor, bool)>> = sigs
            .par_iter()
            .map(|&s| {
                let d = classify(s)?;
                let a = center_analysis(s)?;
                Ok((s, d, a.agrees_with(&d)))
            })
            .collect();
        let mut bad = Vec::new();
        for r in results {
            let (s, d, ok) = r?;
            if !ok {
                bad.push(json!({ "signature": s.to_string(), "descriptor": d.to_string() }));
            }
        }
        Ok(Check::new(name, claim)
            .number("signatures", sigs.len())
            .require(bad.is_empty(), bad))
    };
    let cl44 = {
        let name = "classify.cl44";
        let claim = "Cl(4,4) ≅ Mat16(R), real dimension 256";
        or_error(
            name,
            claim,
            classify(Signature::new(4, 4)).map(|d| {
                let want = Descriptor::new(Ring::R, 16, 1);
                Check::new(name, claim)
                    .number("descriptor", d.to_string())
                    .number("real_dim", d.real_dim())
                    .require(d == want && d.real_dim() == 256, d.to_string())
            }),
        )
    };
    vec![or_error(name, claim, run()), cl44]
}

/// One entry per reading of the named-algebra identifications; verdicts are
/// reported, not asserted.
pub fn claim_checks(_cfg: &Config) -> Vec<Check> {
    claim_report()
        .into_iter()
        .map(|e| {
            let c = Check::new(format!("claims.{}", e.signature), &e.claim)
                .number("descriptor", &e.descriptor)
                .number("real_dim", e.real_dim)
                .number("reference", &e.reference)
                .number("reference_real_dim", e.reference_real_dim)
                .number("verdict", e.verdict)
                .number("note", &e.note);
            match e.verdict {
                Verdict::Match => c,
                Verdict::Mismatch => c.mismatch(&e.note),
                Verdict::Ambiguous => c.skipped(&e.note),
            }
        })
        .collect()
}

fn random_rational<R: Rng>(rng: &mut R) -> Q {
    q_frac(rng.random_range(-12..=12), rng.random_range(1..=6))
}

/// Seeded parameter triples, half of them with `γ = 0`.
pub fn cosmos_triples(seed: u64, count: usize) -> Vec<EndoF> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let alpha = random_rational(&mut rng);
            let beta = random_rational(&mut rng);
            let gamma = if rng.random_bool(0.5) {
                [Q::zero(), Q::zero(), Q::zero()]
            } else {
                loop {
                    let g = [0, 1, 2].map(|_| {
                        if rng.random_bool(0.5) {
                            random_rational(&mut rng)
                        } else {
                            Q::zero()
                        }
                    });
                    if g.iter().any(|x| !x.is_zero()) {
                        break g;
                    }
                }
            };
            EndoF::new(alpha, beta, gamma)
        })
        .collect()
}

/// Invariance and restriction facts for one parameter triple; `Err` holds
/// the violated statement.
pub fn cosmos_invariance_facts(f: &EndoF) -> std::result::Result<(), String> {
    if !is_invariant(f, CoordSubspace::E5) || !is_invariant(f, CoordSubspace::E1) {
        return Err("E5 or E1 not invariant".into());
    }
    if is_invariant(f, CoordSubspace::E3) != f.gamma_is_zero() {
        return Err("E3 invariance differs from γ = 0".into());
    }
    let coeff = |s| restriction_coefficient(f, s).map_err(|e| e.to_string());
    if coeff(CoordSubspace::E5)? != Some(f.alpha.clone()) {
        return Err("restriction to E5 is not α".into());
    }
    if coeff(CoordSubspace::E1)? != Some(Q::one()) {
        return Err("restriction to E1 is not 1".into());
    }
    if f.gamma_is_zero() && coeff(CoordSubspace::E3)? != Some(f.beta.clone()) {
        return Err("restriction to E3 is not β".into());
    }
    Ok(())
}

pub fn cosmos_invariance_check(cfg: &Config) -> Check {
    let triples = cosmos_triples(seed_for(cfg, 6), COSMOS_TRIPLES);
    let zero = triples.iter().filter(|f| f.gamma_is_zero()).count();
    let bad: Vec<_> = triples
        .iter()
        .filter_map(|f| {
            cosmos_invariance_facts(f).err().map(|why| {
                json!({
                    "alpha": f.alpha.to_string(),
                    "beta": f.beta.to_string(),
                    "gamma": f.gamma.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                    "violation": why,
                })
            })
        })
        .take(5)
        .collect();
    Check::new(
        "cosmos.invariance",
        "E5 and E1 always invariant, E3 invariant iff γ = 0, restrictions α, β, 1",
    )
    .number("triples", triples.len())
    .number("gamma_zero_triples", zero)
    .require(bad.is_empty(), bad)
}

pub fn cosmos_commutant_checks(cfg: &Config) -> Vec<Check> {
    let generic = commutant(&EndoF::generic());
    let equal = commutant(&EndoF::from_ints(2, 2, [0, 0, 0]));
    let ident = commutant(&EndoF::from_ints(1, 1, [0, 0, 0]));
    let numeric = commutant_numeric(&EndoF::generic(), cfg.nullspace_cutoff);
    let dims = |c: &crate::cosmos::CommutantReport| (c.full_dim, c.antisym_dim);
    let ok = dims(&generic) == (35, 13)
        && numeric == (35, 13)
        && equal.full_dim == 65
        && dims(&ident) == (81, 36)
        && generic.full_dim <= equal.full_dim
        && equal.full_dim <= ident.full_dim;
    let real = Check::new(
        "cosmos.commutant",
        "commutant of diag(α×5, β×3, 1): dims 35/13 generic, 65 at α = β, 81/36 at identity",
    )
    .number("generic.full_dim", generic.full_dim)
    .number("generic.antisym_dim", generic.antisym_dim)
    .number("generic.structure", &generic.structure)
    .number("generic.svd_full_dim", numeric.0)
    .number("generic.svd_antisym_dim", numeric.1)
    .number("alpha_eq_beta.full_dim", equal.full_dim)
    .number("identity.full_dim", ident.full_dim)
    .number("identity.antisym_dim", ident.antisym_dim)
    .require(
        ok,
        json!({ "generic": generic, "svd": numeric, "alpha_eq_beta": equal, "identity": ident }),
    );

    let chain_name = "cosmos.breaking_chain";
    let chain_claim = "su(5) → commutant of i·diag(2,2,2,-3,-3) → its annihilator of e5: dims 24, 12, 9";
    let chain = or_error(
        chain_name,
        chain_claim,
        (|| -> Result<Check> {
            let [full, first, second] = breaking_chain()?;
            let phase = unitary_commutant_dim(&gut_vev(), Ambient::U)? == first + 1
                && unitary_commutant_dim(&CqMatrix::imaginary_diagonal_ints(&[1, 1, 1, 0, -3]), Ambient::Su)? == 10;
            Ok(Check::new(chain_name, chain_claim)
                .number("su5", full)
                .number("su5.label", "SU(5)")
                .number("first_stage", first)
                .number("first_stage.label", "SU(3)×SU(2)×U(1)")
                .number("second_stage", second)
                .number("second_stage.label", "SU(3)×U(1)")
                .number("second_stage.construction", "vector annihilator")
                .require([full, first, second] == [24, 12, 9] && phase, [full, first, second]))
        })(),
    );
    vec![real, chain]
}

pub fn realify_check(cfg: &Config) -> Check {
    let name = "unitary.realify";
    let claim = "realification maps SU(n) into SO(2n) and commutes with J, n = 1..5";
    let run = || -> Result<Check> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(cfg, 8));
        let (mut orth, mut det, mut jd, mut hom) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        let mut worst = None;
        for i in 0..REALIFY_SAMPLES {
            let n = 1 + i % 5;
            let u = random_unitary(n, true, &mut rng);
            let r = realify(&u, true, cfg)?;
            if r.orthogonality_defect > orth {
                worst = Some(json!({ "sample": i, "n": n }));
            }
            orth = orth.max(r.orthogonality_defect);
            det = det.max((r.det - 1.0).abs());
            jd = jd.max(r.j_defect);
            if i % 10 == 0 {
                let v = random_unitary(n, true, &mut rng);
                let lhs = realify(&(&u * &v), true, cfg)?.r;
                let rhs = &r.r * realify(&v, true, cfg)?.r;
                hom = hom.max((lhs - rhs).amax());
            }
        }
        let ok = orth <= cfg.orthogonality_tol && det <= cfg.determinant_tol && jd == 0.0 && hom <= cfg.unitarity_tol;
        Ok(Check::new(name, claim)
            .number("samples", REALIFY_SAMPLES)
            .number("max_orthogonality_defect", orth)
            .number("max_det_defect", det)
            .number("max_j_commutator", jd)
            .number("max_homomorphism_defect", hom)
            .require(
                ok,
                json!({ "worst_sample": worst, "orthogonality_tol": cfg.orthogonality_tol }),
            ))
    };
    or_error(name, claim, run())
}

pub fn orbit_check(cfg: &Config) -> Check {
    let name = "unitary.orbit";
    let claim = "SO(10) acts transitively on S^9: seeded pairs (u, v) admit R with Ru = v";
    let run = || -> Result<Check> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(cfg, 9));
        let (mut res, mut orth, mut det) = (0.0f64, 0.0f64, 0.0f64);
        for i in 0..ORBIT_SAMPLES {
            let u = random_unit_vector(10, &mut rng);
            // every hundredth pair is antipodal
            let v = if i % 100 == 0 {
                -u.clone()
            } else {
                random_unit_vector(10, &mut rng)
            };
            let r = orbit_rotation(&u, &v, cfg.orthogonality_tol)?;
            res = res.max((&r * &u - &v).norm());
            orth = orth.max(identity_defect(&(r.transpose() * &r)));
            det = det.max((r.determinant() - 1.0).abs());
        }
        let ok = res <= cfg.orthogonality_tol && orth <= cfg.orthogonality_tol && det <= cfg.determinant_tol;
        Ok(Check::new(name, claim)
            .number("samples", ORBIT_SAMPLES)
            .number("max_residual", res)
            .number("max_orthogonality_defect", orth)
            .number("max_det_defect", det)
            .require(ok, json!({ "max_residual": res, "max_orthogonality_defect": orth })))
    };
    or_error(name, claim, run())
}

pub fn sphere_decomposition_checks(cfg: &Config) -> Vec<Check> {
    let split_name = "sphere.coordinate_split";
    let split_claim = "R^5 ⊕ R^3 ⊕ R^1 = R^9 as consecutive coordinate blocks";
    let split = or_error(
        split_name,
        split_claim,
        coordinate_split(&[5, 3, 1]).map(|s| {
            let disjoint = s
                .iter()
                .enumerate()
                .all(|(i, a)| s[i + 1..].iter().all(|b| a.is_disjoint(b)));
            let union = s.iter().fold(s[0], |acc, x| acc.union(x));
            let ok = s == [CoordSubspace::E5, CoordSubspace::E3, CoordSubspace::E1]
                && disjoint
                && union == CoordSubspace::E9;
            Check::new(split_name, split_claim)
                .number("blocks", s.iter().map(|b| b.indices()).collect::<Vec<_>>())
                .require(ok, s.iter().map(|b| b.to_string()).collect::<Vec<_>>())
        }),
    );

    let join_name = "sphere.join";
    let join_claim = "S^5 * S^3 = S^9: every point of S^9 lies on the join chart (join reading)";
    let run = || -> Result<Check> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed_for(cfg, 10));
        let (mut norm_defect, mut residual) = (0.0f64, 0.0f64);
        for _ in 0..JOIN_SAMPLES {
            let u = random_unit_vector(6, &mut rng);
            let v = random_unit_vector(4, &mut rng);
            let t = rng.random_range(0.0..=FRAC_PI_2);
            let x = sphere_join(&u, &v, t, cfg.orthogonality_tol)?;
            norm_defect = norm_defect.max((x.norm_squared() - 1.0).abs());
            let y = random_unit_vector(10, &mut rng);
            residual = residual.max(join_residual(&y, 6)?);
        }
        let ok = norm_defect < 1e-14 && residual <= cfg.join_tol;
        Ok(Check::new(join_name, join_claim)
            .number("samples", JOIN_SAMPLES)
            .number("max_norm_defect", norm_defect)
            .number("max_inversion_residual", residual)
            .number(
                "interpretation",
                "join S^p * S^q; coordinate subspheres offered separately",
            )
            .require(
                ok,
                json!({ "max_norm_defect": norm_defect, "max_inversion_residual": residual }),
            ))
    };
    vec![split, or_error(join_name, join_claim, run())]
}

fn max_defect(samples: &[CurvatureSample]) -> (f64, Option<&CurvatureSample>) {
    let worst = samples.iter().max_by(|a, b| a.defect().total_cmp(&b.defect()));
    (worst.map_or(0.0, CurvatureSample::defect), worst)
}

/// Curvature samples for the minimal product `S^p(√(p/(p+q))) × S^q`.
pub fn minimal_samples(cfg: &Config, p: usize, q: usize, r: Option<f64>, count: usize) -> Result<Vec<CurvatureSample>> {
    let e = match r {
        Some(r) => ProductSphereEmbedding::with_r(p, q, r)?,
        None => ProductSphereEmbedding::minimal(p, q)?,
    };
    sample_curvatures(&e, count, cfg.step, seed_for(cfg, 11), |g| e.sample(g))
}

pub fn minimal_checks(cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();

    let name = "minimal.balanced";
    let claim = "S^4(1/√2) × S^4(1/√2) ⊂ S^9 is minimal: H = 0";
    out.push(or_error(
        name,
        claim,
        minimal_samples(cfg, 4, 4, None, CURVATURE_SAMPLES).and_then(|s| {
            let torus = minimal_samples(cfg, 1, 1, None, CURVATURE_SAMPLES)?;
            let (d, worst) = max_defect(&s);
            let (dt, _) = max_defect(&torus);
            Ok(Check::new(name, claim)
                .number("samples", s.len())
                .number("step", cfg.step)
                .number("max_abs_h", d)
                .number("clifford_torus_max_abs_h", dt)
                .require(d <= cfg.curvature_tol && dt <= cfg.curvature_tol, worst))
        }),
    ));

    let name = "minimal.off_balance";
    let claim = "S^4(0.6) × S^4(0.8) has H = (4·0.8/0.6 - 4·0.6/0.8)/8 = 7/24";
    out.push(or_error(
        name,
        claim,
        minimal_samples(cfg, 4, 4, Some(0.6), CURVATURE_SAMPLES).map(|s| {
            let (d, worst) = max_defect(&s);
            let tol = 10.0 * cfg.curvature_tol;
            Check::new(name, claim)
                .number("h_analytic", 7.0 / 24.0)
                .number("max_defect", d)
                .number("tolerance", tol)
                .require(d <= tol, worst)
        }),
    ));

    let name = "minimal.richardson";
    let claim = "central differences converge at second order";
    out.push(or_error(
        name,
        claim,
        (|| -> Result<Check> {
            let e = ProductSphereEmbedding::with_r(4, 4, 0.6)?;
            let x = e.sample(&mut ChaCha8Rng::seed_from_u64(seed_for(cfg, 12)));
            let r = richardson(&e, &x, cfg.step)?;
            Ok(Check::new(name, claim)
                .number("defect_h", r.defect_h)
                .number("defect_half", r.defect_half)
                .number("ratio", r.ratio)
                .require(r.second_order(1e-12), r))
        })(),
    ));

    let root = mean_curvature_root(4, 4, 1e-12);
    let changes = mean_curvature_sign_changes(4, 4, 1000);
    out.push(
        Check::new("minimal.root", "H(r) on S^4(r) × S^4(s) vanishes only at r = √(1/2)")
            .number("root", root)
            .number("error", (root - FRAC_1_SQRT_2).abs())
            .number("sign_changes", changes)
            .require((root - FRAC_1_SQRT_2).abs() <= 1e-10 && changes == 1, root),
    );

    let name = "minimal.volume";
    let claim = "Vol(S^8) < Vol(S^4(1/√2) × S^4(1/√2)), both hypersurfaces of S^9 with H = 0";
    out.push(or_error(
        name,
        claim,
        vacuum_volume_report(CURVATURE_SAMPLES, cfg.step, seed_for(cfg, 13)).map(|v| {
            let ok = v.great_sphere_smaller
                && (v.product_volume - v.product_closed_form).abs() <= 1e-9
                && (v.great_sphere_volume - 29.6866).abs() <= 5e-5
                && v.product_max_h <= cfg.curvature_tol
                && v.great_sphere_max_h <= cfg.curvature_tol;
            Check::new(name, claim)
                .number("product_volume", v.product_volume)
                .number("product_closed_form", v.product_closed_form)
                .number("great_sphere_volume", v.great_sphere_volume)
                .number("great_sphere_closed_form", v.great_sphere_closed_form)
                .number("product_max_abs_h", v.product_max_h)
                .number("great_sphere_max_abs_h", v.great_sphere_max_h)
                .number("interpretation", v.interpretation)
                .require(ok, &v)
        }),
    ));
    out
}

/// Report for one shipped family: relation checks and its signature.
pub fn gens_report(p: usize, extended: bool) -> Result<VerificationReport> {
    let f = pauli_string_family(p, extended)?;
    let r = verify_relations(&f);
    let mut report = VerificationReport::new("gens", 0)
        .param("p", p)
        .param("extended", extended);
    let sig = r.signature();
    report.push(
        Check::new("gens.relations", "generators square to ±1 and pairwise anticommute")
            .number("generators", f.len())
            .number("dimension", f.dimension())
            .number("signature", sig)
            .require(r.is_valid(), &r.failures),
    );
    let inv = Check::new("gens.inverse_relation", "g_i g_j = (g_j g_i)^-1 for every pair")
        .number("pairs", r.pair_count)
        .number("inverse_relation_pairs", r.inverse_relation_pairs);
    report.push(if r.inverse_relation_holds() {
        inv
    } else {
        inv.mismatch(&r.inverse_relation_failures)
    });
    Ok(report)
}

/// The shipped family realizing `Cl(p,q)`: `(r,r)` or `(r+1,r)`.
pub fn family_for(p: usize, q: usize) -> Result<crate::dyadic::GeneratorFamily> {
    match (p, q) {
        (p, q) if p == q && p >= 1 => pauli_string_family(p, false),
        (p, q) if p == q + 1 && q >= 1 => pauli_string_family(q, true),
        _ => Err(Error::SignatureMismatch { p, q, n: p + q }),
    }
}

pub fn iso_report(p: usize, q: usize, cfg: &Config) -> Result<VerificationReport> {
    let f = family_for(p, q)?;
    Signature::new(p, q).check_exact()?;
    if p + q > cfg.max_exact_n {
        return Err(Error::OutOfRange {
            what: "generator count p+q",
            value: (p + q) as i64,
            min: 1,
            max: cfg.max_exact_n as i64,
        });
    }
    let o = crate::cliffalg::iso_check_with(
        &f,
        Signature::new(p, q),
        crate::cliffalg::IsoOptions {
            seed: cfg.seed,
            ..Default::default()
        },
    )?;
    let mut report = VerificationReport::new("iso", cfg.seed).param("p", p).param("q", q);
    report.push(
        Check::new("iso.structure_constants", format!("twisted algebra ≅ Cl({p},{q})"))
            .number("dim", o.dim)
            .number("pairs_checked", o.pairs_checked)
            .number("exhaustive", o.exhaustive)
            .number("generator_order", &o.generator_order)
            .require(o.passed(), &o.witness),
    );
    Ok(report)
}

pub fn cosmos_report(f: &EndoF, cfg: &Config) -> Result<VerificationReport> {
    let g = gauge_report(f)?;
    let mut report = VerificationReport::new("cosmos", cfg.seed)
        .param("alpha", &g.alpha)
        .param("beta", &g.beta)
        .param("gamma", g.gamma.join(","));
    let degenerate = g.flags.iter().any(|x| x == FULLY_SYMMETRIC);
    report.push(Check::new("cosmos.invariant.E5", "E5 = span(e1..e5) is invariant").require(g.e5_invariant, "E5"));
    report.push(Check::new("cosmos.invariant.E1", "E1 = span(e9) is invariant").require(g.e1_invariant, "E1"));
    report.push(
        Check::new(
            "cosmos.invariant.E3",
            "E3 = span(e6,e7,e8) is invariant (requires γ = 0)",
        )
        .number("gamma", g.gamma.to_vec())
        .require(g.e3_invariant, json!({ "flag": GAMMA_ZERO_VIOLATED, "gamma": g.gamma })),
    );
    report.push(
        Check::new("cosmos.restriction", "restrictions to E5, E3, E1 are α, β, 1")
            .number("E5", &g.restriction_e5)
            .number("E3", &g.restriction_e3)
            .number("E1", &g.restriction_e1),
    );
    report.push(
        Check::new("cosmos.lattice", "invariant coordinate subspaces of F")
            .number("count", g.lattice_size)
            .number("decomposition", &g.decomposition),
    );
    let numeric = commutant_numeric(f, cfg.nullspace_cutoff);
    report.push(
        Check::new("cosmos.commutant", "commutant dimensions of F in gl(9) and so(9)")
            .number("full_dim", g.commutant.full_dim)
            .number("antisym_dim", g.commutant.antisym_dim)
            .number("svd_full_dim", numeric.0)
            .number("svd_antisym_dim", numeric.1)
            .number("structure", &g.commutant.structure)
            .number("fully_symmetric", degenerate)
            .require(
                numeric == (g.commutant.full_dim, g.commutant.antisym_dim),
                json!({ "exact": [g.commutant.full_dim, g.commutant.antisym_dim], "svd": numeric }),
            ),
    );
    let labels: Vec<String> = g
        .chain
        .iter()
        .zip(g.chain_labels)
        .map(|(d, l)| format!("{d} ({l})"))
        .collect();
    report.push(
        Check::new("cosmos.breaking_chain", "su(5) breaking chain dimensions 24 → 12 → 9")
            .number("dims", g.chain)
            .number("labels", labels)
            .require(g.chain == [24, 12, 9], g.chain),
    );
    if !g.flags.is_empty() {
        report.params.insert("flags".into(), g.flags.join("; "));
    }
    Ok(report)
}

/// Curvature report and the samples behind it (for CSV export).
pub fn minimal_report(
    cfg: &Config,
    p: usize,
    q: usize,
    r: Option<f64>,
    samples: usize,
) -> Result<(VerificationReport, Vec<CurvatureSample>)> {
    let s = minimal_samples(cfg, p, q, r, samples)?;
    let e = match r {
        Some(r) => ProductSphereEmbedding::with_r(p, q, r)?,
        None => ProductSphereEmbedding::minimal(p, q)?,
    };
    let (d, worst) = max_defect(&s);
    let mut report = VerificationReport::new("minimal", cfg.seed)
        .param("p", p)
        .param("q", q)
        .param("r", e.r)
        .param("samples", samples)
        .param("step", cfg.step);
    report.push(
        Check::new(
            "minimal.curvature",
            "numeric mean curvature matches (p·s/r - q·r/s)/(p+q)",
        )
        .number("h_analytic", crate::minimal::Hypersurface::analytic_mean_curvature(&e))
        .number("max_defect", d)
        .require(d <= cfg.curvature_tol, worst),
    );
    let v = vacuum_volume_report(samples.min(CURVATURE_SAMPLES), cfg.step, seed_for(cfg, 13))?;
    report.push(
        Check::new("minimal.volume", "Vol(S^8) < Vol(S^4(1/√2) × S^4(1/√2))")
            .number("product_volume", v.product_volume)
            .number("great_sphere_volume", v.great_sphere_volume)
            .require(v.great_sphere_smaller, &v),
    );
    Ok((report, s))
}

/// Status of a named check, for tests and summaries.
pub fn status_of(report: &VerificationReport, name: &str) -> Option<Status> {
    report.check(name).map(|c| c.status)
}
