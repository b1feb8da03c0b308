//! Property suites and the acceptance criteria, as library code so the
//! command line and the test targets run exactly the same checks.

use std::time::Instant;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::arith::{exact_power_of, interpolate_univariate, rat_int, rat_pow, Rat};
use crate::catalog;
use crate::degrees::{self, DifferenceOperator, HilbertData};
use crate::discriminant::{
    self, binary_disc_oracle, random_covector, x_discriminant, DiscriminantError, DualCovector,
};
use crate::linalg::QMatrix;
use crate::oracles;
use crate::resultant::{
    self, macaulay_oracle, random_pencil, sylvester_oracle, x_resultant, ResultantError,
    ResultantPencil, TwistSpec,
};
use crate::torsion::{scaling_exponent, BasedComplex, TorsionOptions};

/// Outcome of one named check or criterion.
#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
    /// stated runtime budget, when the check is an acceptance criterion
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_ms: Option<u128>,
}

impl CheckResult {
    fn from_run(name: &str, budget_ms: Option<u128>, run: impl FnOnce() -> Result<String, String>) -> Self {
        let start = Instant::now();
        let outcome = run();
        let elapsed_ms = start.elapsed().as_millis();
        let within_budget = budget_ms.map_or(true, |b| elapsed_ms < b);
        match outcome {
            Ok(detail) => CheckResult {
                name: name.to_string(),
                passed: within_budget,
                detail: if within_budget {
                    detail
                } else {
                    format!("{detail}; exceeded budget {budget_ms:?} ms")
                },
                elapsed_ms,
                budget_ms,
            },
            Err(detail) => CheckResult {
                name: name.to_string(),
                passed: false,
                detail,
                elapsed_ms,
                budget_ms,
            },
        }
    }
}

/// Random exact complex with the given rank profile: conjugate the
/// canonical shifted projections by random invertible matrices.
pub fn random_exact_complex(rng: &mut StdRng, kappas: &[usize]) -> BasedComplex {
    let l = kappas.len() + 1;
    let mut dims = Vec::with_capacity(l);
    for i in 0..l {
        let prev = if i == 0 { 0 } else { kappas[i - 1] };
        let here = if i < kappas.len() { kappas[i] } else { 0 };
        dims.push(prev + here);
    }
    let changes: Vec<QMatrix> = dims
        .iter()
        .map(|&d| loop {
            let p = QMatrix::from_fn(d, d, |_, _| rat_int(rng.gen_range(-3..=3)));
            if !p.det().unwrap().is_zero() {
                break p;
            }
        })
        .collect();
    let mut boundaries = Vec::new();
    for i in 0..kappas.len() {
        let prev = if i == 0 { 0 } else { kappas[i - 1] };
        let base = QMatrix::from_fn(dims[i + 1], dims[i], |r, c| {
            if c >= prev && r == c - prev {
                crate::arith::Rat::from_integer(1.into())
            } else {
                crate::arith::Rat::from_integer(0.into())
            }
        });
        boundaries.push(
            changes[i + 1]
                .mul(&base.mul(&changes[i].inverse().unwrap()).unwrap())
                .unwrap(),
        );
    }
    BasedComplex::from_boundaries(dims, boundaries).unwrap()
}

/// Random profile with 2..=5 terms and dims at most 8.
pub fn random_rank_profile(rng: &mut StdRng) -> Vec<usize> {
    let terms = rng.gen_range(2..=5);
    let mut kappas = Vec::new();
    let mut prev = 0usize;
    for i in 0..terms - 1 {
        let cap = 8 - prev;
        let k = if i == 0 {
            rng.gen_range(1..=cap.min(4))
        } else {
            rng.gen_range(0..=cap.min(4))
        };
        kappas.push(k);
        prev = k;
    }
    kappas
}

/// Criterion 1: torsion scaling law on 50 random exact complexes, 5 random
/// nonzero scalars each. Exact equality.
pub fn criterion_torsion_scaling() -> CheckResult {
    CheckResult::from_run("1 torsion scaling law", Some(10_000), || {
        let mut rng = StdRng::seed_from_u64(0xACC1);
        for idx in 0..50 {
            let kappas = random_rank_profile(&mut rng);
            let c = random_exact_complex(&mut rng, &kappas);
            let base = c.torsion().map_err(|e| e.to_string())?;
            let d = scaling_exponent(&c.dims());
            for _ in 0..5 {
                let mu = loop {
                    let v = crate::arith::rat(rng.gen_range(-9..=9), rng.gen_range(1..=9));
                    if !v.is_zero() {
                        break v;
                    }
                };
                let scaled = c
                    .scale_boundaries(&mu)
                    .torsion()
                    .map_err(|e| format!("complex {idx}: {e}"))?;
                if scaled.value != rat_pow(&mu, d) * &base.value {
                    return Err(format!("complex {idx}: Tor(mu d) != mu^{d} Tor(d)"));
                }
            }
        }
        Ok("50 complexes x 5 scalars, exact".into())
    })
}

/// Criterion 2: twenty alternative valid minor selections per complex give
/// the identical torsion.
pub fn criterion_choice_independence() -> CheckResult {
    CheckResult::from_run("2 choice independence", Some(10_000), || {
        let mut rng = StdRng::seed_from_u64(0xACC2);
        for idx in 0..10 {
            let kappas = random_rank_profile(&mut rng);
            let c = random_exact_complex(&mut rng, &kappas);
            let base = c.torsion().map_err(|e| e.to_string())?.value;
            for s in 0..20u64 {
                let sels = c.random_selections(idx * 1000 + s).map_err(|e| e.to_string())?;
                let alt = c
                    .torsion_with(&TorsionOptions {
                        selections: Some(sels),
                        multimodular: false,
                    })
                    .map_err(|e| e.to_string())?;
                if alt.value != base {
                    return Err(format!("complex {idx}, selection {s}: value changed"));
                }
            }
        }
        Ok("10 complexes x 20 selections, identical".into())
    })
}

/// Criterion 3: conic X-resultant against the Sylvester oracle, 10 random
/// pencil pairs, at both m = 4 and m = 5.
pub fn criterion_conic_resultant_ratio() -> CheckResult {
    CheckResult::from_run("3 conic X-resultant vs Sylvester", Some(30_000), || {
        let v = catalog::conic();
        let mut rng = StdRng::seed_from_u64(0xACC3);
        let mut done = 0;
        while done < 10 {
            let f = random_pencil(&v, &mut rng);
            let g = random_pencil(&v, &mut rng);
            let of = sylvester_oracle(&v, &f).map_err(|e| e.to_string())?;
            let og = sylvester_oracle(&v, &g).map_err(|e| e.to_string())?;
            if of.is_zero() || og.is_zero() {
                continue;
            }
            for m in [4i64, 5] {
                let tf = x_resultant(&v, TwistSpec::trivial(), m, &f).map_err(|e| e.to_string())?;
                let tg = x_resultant(&v, TwistSpec::trivial(), m, &g).map_err(|e| e.to_string())?;
                if &tf.value / &tg.value != &of / &og {
                    return Err(format!("pair {done}, m={m}: ratio mismatch"));
                }
            }
            done += 1;
        }
        Ok("10 pairs at m=4 and m=5, exact ratios".into())
    })
}

fn interpolated_degree(
    values: &[(i64, Rat)],
) -> Result<(usize, Rat), String> {
    let samples: Vec<(Rat, Rat)> = values
        .iter()
        .map(|(mu, v)| (rat_int(*mu), v.clone()))
        .collect();
    let poly = interpolate_univariate(&samples).map_err(|e| e.to_string())?;
    poly.as_monomial()
        .map(|(d, c)| (d, c.clone()))
        .ok_or_else(|| "torsion in mu is not a monomial".to_string())
}

/// Criterion 4: interpolated degree of mu -> Tor(mu f) equals d(n+1) r on
/// the three shipped curves for r in {1, 2}.
pub fn criterion_resultant_degrees() -> CheckResult {
    CheckResult::from_run("4 X-resultant degrees by interpolation", Some(120_000), || {
        let mut rng = StdRng::seed_from_u64(0xACC4);
        let mut details = Vec::new();
        for v in catalog::rational_normal_curves() {
            for r in [1usize, 2] {
                let twist = TwistSpec::rank(r);
                let expected = (v.degree() as i64 * 2 * r as i64) as usize; // d(n+1)r, n=1
                let f = loop {
                    let f = random_pencil(&v, &mut rng);
                    if sylvester_oracle(&v, &f).map_err(|e| e.to_string())?.is_zero() {
                        continue;
                    }
                    break f;
                };
                let m = 4i64;
                let mut values = Vec::new();
                for mu in 1..=(expected as i64 + 2) {
                    let t = x_resultant(&v, twist, m, &f.scale(&rat_int(mu)))
                        .map_err(|e| e.to_string())?;
                    values.push((mu, t.value));
                }
                let (deg, _) = interpolated_degree(&values)?;
                if deg != expected {
                    return Err(format!(
                        "{} r={r}: degree {deg}, expected {expected}",
                        v.name()
                    ));
                }
                details.push(format!("{} r={r}: {deg}", v.name()));
            }
        }
        Ok(details.join("; "))
    })
}

/// Criterion 5: the rank(V) exponent, Tor with O^2 = (Tor with O)^2, five
/// pencils per curve spec.
pub fn criterion_rank_v_exponent() -> CheckResult {
    CheckResult::from_run("5 rank(V) exponent", Some(60_000), || {
        let mut rng = StdRng::seed_from_u64(0xACC5);
        for v in catalog::rational_normal_curves() {
            let mut done = 0;
            while done < 5 {
                let f = random_pencil(&v, &mut rng);
                let t1 = match x_resultant(&v, TwistSpec::trivial(), 4, &f) {
                    Ok(t) => t,
                    Err(ResultantError::PencilMeetsX { .. }) => continue,
                    Err(e) => return Err(e.to_string()),
                };
                let t2 = x_resultant(&v, TwistSpec::rank(2), 4, &f).map_err(|e| e.to_string())?;
                if t2.value != &t1.value * &t1.value {
                    return Err(format!("{}: square identity fails", v.name()));
                }
                done += 1;
            }
        }
        Ok("conic, twisted cubic, rnc4: 5 pencils each, exact squares".into())
    })
}

/// Criterion 6: conic discriminant against b^2 - 4ac, and tangent
/// covectors from the dual conic hit the non-exact branch.
pub fn criterion_conic_discriminant() -> CheckResult {
    CheckResult::from_run("6 conic X-discriminant vs b^2-4ac", Some(30_000), || {
        let v = catalog::conic();
        let mut rng = StdRng::seed_from_u64(0xACC6);
        let mut done = 0;
        while done < 10 {
            let f = random_covector(&v, &mut rng);
            let g = random_covector(&v, &mut rng);
            let of = binary_disc_oracle(&v, &f).map_err(|e| e.to_string())?;
            let og = binary_disc_oracle(&v, &g).map_err(|e| e.to_string())?;
            if of.is_zero() || og.is_zero() {
                continue;
            }
            let tf = x_discriminant(&v, TwistSpec::trivial(), 4, &f).map_err(|e| e.to_string())?;
            let tg = x_discriminant(&v, TwistSpec::trivial(), 4, &g).map_err(|e| e.to_string())?;
            if &tf.value / &tg.value != &of / &og {
                return Err(format!("pair {done}: ratio mismatch"));
            }
            done += 1;
        }
        // points of the dual conic give tangent covectors
        for (p, q) in [(1i64, 1i64), (2, -3), (5, 1)] {
            let f = DualCovector::from_ints(&[p * p, 2 * p * q, q * q]);
            match x_discriminant(&v, TwistSpec::trivial(), 4, &f) {
                Err(DiscriminantError::TangentCovector { .. }) => {}
                other => {
                    return Err(format!(
                        "dual point ({p},{q}): expected tangency, got {other:?}"
                    ))
                }
            }
        }
        Ok("10 ratio pairs exact; 3 dual-conic points non-exact".into())
    })
}

/// Criterion 7: twisted cubic discriminant ratio test and measured degree
/// 4 = 2d - 2.
pub fn criterion_cubic_discriminant() -> CheckResult {
    CheckResult::from_run("7 cubic X-discriminant and dual degree", Some(120_000), || {
        let v = catalog::twisted_cubic();
        let mut rng = StdRng::seed_from_u64(0xACC7);
        let mut done = 0;
        while done < 10 {
            let f = random_covector(&v, &mut rng);
            let g = random_covector(&v, &mut rng);
            let of = binary_disc_oracle(&v, &f).map_err(|e| e.to_string())?;
            let og = binary_disc_oracle(&v, &g).map_err(|e| e.to_string())?;
            if of.is_zero() || og.is_zero() {
                continue;
            }
            let tf = x_discriminant(&v, TwistSpec::trivial(), 4, &f).map_err(|e| e.to_string())?;
            let tg = x_discriminant(&v, TwistSpec::trivial(), 4, &g).map_err(|e| e.to_string())?;
            if &tf.value / &tg.value != &of / &og {
                return Err(format!("pair {done}: ratio mismatch"));
            }
            done += 1;
        }
        // measured degree in f by interpolation
        let f = DualCovector::from_ints(&[1, 2, -1, 3]);
        let mut values = Vec::new();
        for mu in 1..=6i64 {
            let t = x_discriminant(&v, TwistSpec::trivial(), 4, &f.scale(&rat_int(mu)))
                .map_err(|e| e.to_string())?;
            values.push((mu, t.value));
        }
        let (deg, _) = interpolated_degree(&values)?;
        if deg != 4 {
            return Err(format!("measured dual degree {deg}, expected 4"));
        }
        Ok("10 ratio pairs exact; measured dual degree 4".into())
    })
}

/// Criterion 8: the split-h0 identity at every exterior index, two twists,
/// conic and twisted cubic.
pub fn criterion_split_h0() -> CheckResult {
    CheckResult::from_run("8 split h0 identity", Some(60_000), || {
        for v in [catalog::conic(), catalog::twisted_cubic()] {
            for m in [4i64, 5] {
                for i in 0..=v.dim() + 1 {
                    discriminant::split_h0_check(&v, TwistSpec::trivial(), m, i)
                        .map_err(|e| e.to_string())?;
                }
            }
        }
        Ok("conic and twisted cubic, i = 0..=n+1, m in {4, 5}".into())
    })
}

/// Criterion 9: difference-operator table and both symbolic Chern
/// identity families.
pub fn criterion_combinatorics() -> CheckResult {
    CheckResult::from_run("9 difference table and Chern identities", Some(30_000), || {
        let mut rng = StdRng::seed_from_u64(0xACC9);
        for k in 0..=6u32 {
            for l in 0..=6usize {
                let f = crate::arith::UniPoly::monomial(l);
                for _ in 0..5 {
                    let m = rat_int(rng.gen_range(-20..=20));
                    let back = degrees::apply_difference(DifferenceOperator::Backward(k), &f, &m);
                    let fwd = degrees::apply_difference(DifferenceOperator::Forward(k), &f, &m);
                    if (l as u32) < k && (!back.is_zero() || !fwd.is_zero()) {
                        return Err(format!("difference table fails at k={k}, l={l}"));
                    }
                    if l as u32 == k {
                        let fact = Rat::from_integer(crate::arith::factorial(k as u64));
                        let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
                        if back != fact || fwd != &fact * rat_int(sign) {
                            return Err(format!("factorial values fail at k={k}"));
                        }
                    }
                }
            }
        }
        for n in 1..=5 {
            degrees::verify_chern_lemma(n).map_err(|e| e.to_string())?;
        }
        for n in 1..=4 {
            degrees::verify_jet_chern_identity(n).map_err(|e| e.to_string())?;
            degrees::verify_jet_whitney(n).map_err(|e| e.to_string())?;
        }
        Ok("table l,k <= 6; Chern lemma n <= 5; jet identity n <= 4".into())
    })
}

/// Criterion 10: Veronese surface smoke test. The n = 2 resultant complex
/// builds, is exact at a probe pencil, scales with degree 12, and its
/// torsion ratios match the Macaulay resultant of the pullback quadrics on
/// two pencil pairs.
pub fn criterion_veronese() -> CheckResult {
    CheckResult::from_run("10 Veronese n=2 smoke test", Some(600_000), || {
        let v = catalog::veronese_p2();
        let m = 5i64;
        resultant::resultant_degree_check(&v, TwistSpec::trivial(), m).map_err(|e| e.to_string())?;
        let mut rng = StdRng::seed_from_u64(0xACC10);
        let f = random_pencil(&v, &mut rng);
        let t1 = x_resultant(&v, TwistSpec::trivial(), m, &f).map_err(|e| e.to_string())?;
        // measured scaling degree from exact power ratios
        let t2 = x_resultant(&v, TwistSpec::trivial(), m, &f.scale(&rat_int(2)))
            .map_err(|e| e.to_string())?;
        let t3 = x_resultant(&v, TwistSpec::trivial(), m, &f.scale(&rat_int(3)))
            .map_err(|e| e.to_string())?;
        let d2 = exact_power_of(&(&t2.value / &t1.value), &rat_int(2))
            .ok_or("Tor(2f)/Tor(f) is not a power of 2")?;
        let d3 = exact_power_of(&(&t3.value / &t1.value), &rat_int(3))
            .ok_or("Tor(3f)/Tor(f) is not a power of 3")?;
        if d2 != 12 || d3 != 12 {
            return Err(format!("measured degree {d2}/{d3}, expected 12"));
        }
        // two pencil pairs against the Macaulay oracle
        let mut done = 0;
        let mut last = t1;
        let mut last_pencil = f;
        while done < 2 {
            let g = random_pencil(&v, &mut rng);
            let og = macaulay_oracle(&v, &g).map_err(|e| e.to_string())?;
            let of = macaulay_oracle(&v, &last_pencil).map_err(|e| e.to_string())?;
            if og.is_zero() || of.is_zero() {
                continue;
            }
            let tg = x_resultant(&v, TwistSpec::trivial(), m, &g).map_err(|e| e.to_string())?;
            if &last.value / &tg.value != of / og {
                return Err(format!("pair {done}: Macaulay ratio mismatch"));
            }
            last = tg;
            last_pencil = g;
            done += 1;
        }
        Ok("exact at probe; degree 12 by power ratios; 2 Macaulay pairs".into())
    })
}

/// The full acceptance battery, in order.
pub fn run_acceptance() -> Vec<CheckResult> {
    vec![
        criterion_torsion_scaling(),
        criterion_choice_independence(),
        criterion_conic_resultant_ratio(),
        criterion_resultant_degrees(),
        criterion_rank_v_exponent(),
        criterion_conic_discriminant(),
        criterion_cubic_discriminant(),
        criterion_split_h0(),
        criterion_combinatorics(),
        criterion_veronese(),
    ]
}

fn extra_rebase_check() -> CheckResult {
    CheckResult::from_run("torsion rebase transformation law", None, || {
        let mut rng = StdRng::seed_from_u64(0xEB);
        for _ in 0..5 {
            let kappas = random_rank_profile(&mut rng);
            let c = random_exact_complex(&mut rng, &kappas);
            let n = c.dims().len() as i64 - 2;
            let changes: Vec<QMatrix> = c
                .dims()
                .iter()
                .map(|&d| loop {
                    let p = QMatrix::from_fn(d, d, |_, _| rat_int(rng.gen_range(-3..=3)));
                    if !p.det().unwrap().is_zero() {
                        break p;
                    }
                })
                .collect();
            let r = c.rebase(&changes).map_err(|e| e.to_string())?;
            let factor = crate::torsion::rebase_factor(&changes, n).map_err(|e| e.to_string())?;
            let lhs = r.torsion().map_err(|e| e.to_string())?.value;
            let rhs = c.torsion().map_err(|e| e.to_string())?.value * factor;
            if lhs != rhs {
                return Err("rebase law violated".into());
            }
        }
        Ok("5 random rebases, exact".into())
    })
}

fn extra_boundary_linearity() -> CheckResult {
    CheckResult::from_run("resultant boundary linearity in the pencil", None, || {
        let v = catalog::conic();
        let builder = resultant::ResultantComplexBuilder::new(&v, TwistSpec::trivial(), 4);
        let mut rng = StdRng::seed_from_u64(0x11AB);
        let f = random_pencil(&v, &mut rng);
        let g = random_pencil(&v, &mut rng);
        let cf = builder.build(&f).map_err(|e| e.to_string())?;
        let cg = builder.build(&g).map_err(|e| e.to_string())?;
        let cfg = builder.build(&f.add(&g)).map_err(|e| e.to_string())?;
        for i in 0..cf.boundaries().len() {
            let sum = cf.boundaries()[i]
                .add(&cg.boundaries()[i])
                .map_err(|e| e.to_string())?;
            if cfg.boundaries()[i] != sum {
                return Err(format!("boundary {i} is not additive"));
            }
        }
        Ok("additive in the pencil entries".into())
    })
}

fn extra_disc_linearity() -> CheckResult {
    CheckResult::from_run("discriminant boundary linearity in f", None, || {
        let v = catalog::conic();
        let builder = discriminant::DiscriminantComplexBuilder::new(&v, TwistSpec::trivial(), 4);
        let f = DualCovector::from_ints(&[1, -2, 3]);
        let g = DualCovector::from_ints(&[2, 1, -1]);
        let cf = builder.build(&f).map_err(|e| e.to_string())?;
        let cg = builder.build(&g).map_err(|e| e.to_string())?;
        let cfg = builder.build(&f.add(&g)).map_err(|e| e.to_string())?;
        for i in 0..cf.boundaries().len() {
            let sum = cf.boundaries()[i]
                .add(&cg.boundaries()[i])
                .map_err(|e| e.to_string())?;
            if cfg.boundaries()[i] != sum {
                return Err(format!("boundary {i} is not additive"));
            }
        }
        Ok("additive in the covector".into())
    })
}

fn extra_oracle_properties() -> CheckResult {
    CheckResult::from_run("classical oracle properties", None, || {
        use crate::oracles::BinaryForm;
        let mut rng = StdRng::seed_from_u64(0x0AC1E);
        for _ in 0..10 {
            let rand_form = |rng: &mut StdRng, d: usize| loop {
                let f = BinaryForm::new(
                    (0..=d).map(|_| rat_int(rng.gen_range(-4..=4))).collect(),
                );
                if !f.is_zero() {
                    break f;
                }
            };
            let p = rand_form(&mut rng, 2);
            let q = rand_form(&mut rng, 2);
            let r = rand_form(&mut rng, 1);
            let res_pq = oracles::sylvester_resultant(&p, &q).map_err(|e| e.to_string())?;
            let res_qp = oracles::sylvester_resultant(&q, &p).map_err(|e| e.to_string())?;
            if res_pq != res_qp {
                return Err("symmetry sign for even degree product".into());
            }
            let lhs = oracles::sylvester_resultant(&p, &q.mul(&r)).map_err(|e| e.to_string())?;
            let rhs = res_pq * oracles::sylvester_resultant(&p, &r).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err("multiplicativity".into());
            }
        }
        Ok("symmetry and multiplicativity on random forms".into())
    })
}

fn extra_hilbert_prediction() -> CheckResult {
    CheckResult::from_run("Hilbert telescoping matches built dimensions", None, || {
        for (v, r) in [
            (catalog::conic(), 1usize),
            (catalog::twisted_cubic(), 2),
            (catalog::rnc4(), 1),
        ] {
            let twist = TwistSpec::rank(r);
            let predicted =
                degrees::resultant_degree_via_hilbert(&v, twist).map_err(|e| e.to_string())?;
            let built = resultant::resultant_degree_check(&v, twist, v.dim() as i64 + 3)
                .map_err(|e| e.to_string())?;
            if predicted != built {
                return Err(format!("{}: {predicted} != {built}", v.name()));
            }
            let hd = HilbertData::measure(&v, twist, 4, v.dim() + 3).map_err(|e| e.to_string())?;
            for m in 4..=9 {
                if degrees::direct_weighted_sum(&hd, v.dim(), m) != rat_int(predicted) {
                    return Err(format!("{}: weighted sum varies with m", v.name()));
                }
            }
        }
        Ok("telescoped = built on conic, twisted cubic, rnc4".into())
    })
}

/// Named property suites for the command line.
pub fn run_suite(name: &str) -> Option<Vec<CheckResult>> {
    match name {
        "torsion" => Some(vec![
            criterion_torsion_scaling(),
            criterion_choice_independence(),
            extra_rebase_check(),
        ]),
        "resultant" => Some(vec![
            extra_boundary_linearity(),
            criterion_conic_resultant_ratio(),
            criterion_resultant_degrees(),
            criterion_rank_v_exponent(),
        ]),
        "discriminant" => Some(vec![
            extra_disc_linearity(),
            criterion_conic_discriminant(),
            criterion_cubic_discriminant(),
            criterion_split_h0(),
        ]),
        "combinatorics" => Some(vec![
            criterion_combinatorics(),
            extra_oracle_properties(),
            extra_hilbert_prediction(),
        ]),
        "all" => {
            let mut checks = run_acceptance();
            checks.push(extra_rebase_check());
            checks.push(extra_boundary_linearity());
            checks.push(extra_disc_linearity());
            checks.push(extra_oracle_properties());
            checks.push(extra_hilbert_prediction());
            Some(checks)
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_none() {
        assert!(run_suite("nope").is_none());
    }

    #[test]
    fn combinatorics_suite_passes() {
        for check in run_suite("combinatorics").unwrap() {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }
}
