//! The eight acceptance criteria, one PASS/FAIL line each.

mod common;

use std::process::{Command, ExitCode};

use common::{cyclo, mobius, nonzero_cyclo, ratfun};
use galois_cremona::birational::{
    compose_chain, cremona_p, cremona_p_inv, ffmatrix_conjugate, fiber_conjugator, sigma1, sigma1_fiber_matrix,
    sigma3, RationalMapP2,
};
use galois_cremona::covers::{CoverP1, MobiusMap, OracleVerdict};
use galois_cremona::exactnum::{Cyclo, Field, RatFun, Ring};
use galois_cremona::galoispoints::{certify_galois_point, smooth_galois_enumerate, GroupKind};
use galois_cremona::param::{param_a, param_a_prime, param_b, RationalParametrization};
use galois_cremona::plane::{curve_a, curve_a_prime, curve_b, LinearMapP2, PlaneCurve, ProjPoint};
use galois_cremona::polykernel::{P1Point, UniPoly};
use galois_cremona::verifier::{parse_map, parse_poly, Report};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Check = std::result::Result<(), String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn pt(c: [i64; 3]) -> ProjPoint {
    ProjPoint::from_ints(c)
}

fn w() -> Cyclo {
    Cyclo::omega()
}

fn certified(p: &RationalParametrization, c: [i64; 3]) -> Result<(u32, Vec<usize>, usize, GroupKind), String> {
    let out = certify_galois_point(p, &pt(c)).map_err(|e| e.to_string())?;
    let cert = out.certificate().ok_or_else(|| format!("{} not certified", pt(c)))?;
    Ok((cert.cover.degree(), cert.ramification.indices(), cert.deck.len(), cert.group))
}

fn galois_certification() -> Check {
    let cases = [
        (param_a_prime(), [1, 0, 0], 3, GroupKind::Cyclic3),
        (param_b(), [0, 1, 0], 3, GroupKind::Cyclic3),
        (param_b(), [1, 0, 0], 4, GroupKind::Cyclic4),
    ];
    for (p, c, d, kind) in cases {
        let (deg, idx, order, group) = certified(&p, c)?;
        ensure(
            deg == d && idx == vec![d as usize; 2] && order == d as usize && group == kind,
            || format!("{} on {}: degree {deg}, indices {idx:?}, deck order {order}, {group}", pt(c), p.name()),
        )?;
    }
    Ok(())
}

fn delta_counts() -> Check {
    let cases = [
        (param_a(), vec![P1Point::from_int(1), P1Point::finite(Cyclo::frac(-1, 2))], vec![pt([1, 1, 0]), pt([8, -16, 3])]),
        (param_b(), vec![P1Point::from_int(0)], vec![pt([0, 1, 0])]),
    ];
    for (p, params, points) in cases {
        let e = smooth_galois_enumerate(&p).map_err(|x| x.to_string())?;
        let mut got = e.parameters();
        got.sort_by_key(|u| u.to_string());
        let mut want = params.clone();
        want.sort_by_key(|u| u.to_string());
        let found: Vec<ProjPoint> = e.points.iter().map(|(_, c)| c.point.clone()).collect();
        ensure(
            got == want && points.iter().all(|q| found.contains(q)) && e.delta() == points.len() && e.all_decided(),
            || format!("curve {}: parameters {got:?}, undecided residuals: {}", p.name(), !e.all_decided()),
        )?;
    }
    Ok(())
}

fn pull(c: &PlaneCurve, f: &RationalMapP2) -> Result<galois_cremona::polykernel::MultiPoly<Cyclo>, String> {
    c.defining().compose(f.components()).map_err(|e| e.to_string())
}

fn cremona_identities() -> Check {
    let a = curve_a_prime();
    let l = parse_poly("Y^3*((w-1)*X + w*Y)").map_err(|e| e.to_string())?;
    ensure(pull(&a, &sigma1())? == l.mul(a.defining()), || "F_a'∘σ₁ ≠ Y³L·F_a'".into())?;
    let s1 = sigma1();
    ensure(compose_chain(&[&s1, &s1, &s1]).map_err(|e| e.to_string())?.map.is_identity(), || "σ₁³ ≠ id".into())?;
    let b = curve_b();
    ensure(pull(&b, &sigma3())? == b.defining().scale(&w()), || "F_b∘σ₃ ≠ ω·F_b".into())?;
    let s3 = sigma3();
    ensure(compose_chain(&[&s3, &s3, &s3]).map_err(|e| e.to_string())?.map.is_identity(), || "σ₃³ ≠ id".into())
}

fn linearization() -> Check {
    let c = sigma1().conjugate_report(&cremona_p(), &cremona_p_inv()).map_err(|e| e.to_string())?;
    let target = LinearMapP2::diag([w().mul(&w()), Cyclo::one(), Cyclo::one()]);
    let lin = c.map.as_linear().ok_or_else(|| format!("{} is not linear", c.map))?;
    ensure(c.formal_degree == 8 && lin.projectively_eq(&target), || {
        format!("formal degree {}, reduced map {}", c.formal_degree, c.map)
    })?;
    let m = ffmatrix_conjugate(&sigma1_fiber_matrix(), &fiber_conjugator()).map_err(|e| e.to_string())?;
    let y = RatFun::y();
    let diag = MobiusMap::new([[y.clone(), RatFun::zero()], [RatFun::zero(), y.mul(&RatFun::constant(w()))]])
        .map_err(|e| e.to_string())?;
    ensure(m.projectively_eq(&diag), || format!("P⁻¹MP = {m}"))
}

fn discrepancies() -> Check {
    let a = curve_a();
    let f = a.defining();
    let v = f.eval(&[8, 16, 3].map(Cyclo::from_int));
    ensure(v == Cyclo::from_int(8192), || format!("F_a(8,16,3) = {v}"))?;
    let flexes = param_a().flex_parameters().map_err(|e| e.to_string())?;
    let q2 = pt([8, 16, 1]);
    let fl = flexes.flexes.iter().find(|x| x.point == q2).ok_or("(8:16:1) is not a flex")?;
    ensure(fl.order == 1, || format!("order {}", fl.order))?;
    let meet = a.line_multiplicities(&fl.tangent).map_err(|e| e.to_string())?;
    ensure(meet.points == vec![(pt([8, -16, 3]), 1), (q2.clone(), 3)], || format!("tangent meets at {:?}", meet.points))?;
    let printed = parse_map("(16*X - 8*Y : -16*Y : 4*X - Y + 16*Z)").map_err(|e| e.to_string())?;
    let mirror = parse_poly("X^4 - X^3*Y - Y^3*Z").map_err(|e| e.to_string())?;
    ensure(pull(&a, &printed)?.proportional_to(&mirror).is_some(), || "printed A image".into())?;
    ensure(a.fixed_by(&printed.as_linear().unwrap()).is_none(), || "printed A preserves C".into())?;
    let fixed = parse_map("(16*X - 8*Y : -16*Y : 4*X - Y - 16*Z)").map_err(|e| e.to_string())?;
    ensure(pull(&a, &fixed)? == f.scale(&Cyclo::from_int(65536)), || "F_a∘A ≠ 65536·F_a".into())?;
    ensure(fixed.apply(&pt([1, 1, 0])) == Some(pt([8, -16, 3])), || "A·P₁ ≠ P₂".into())
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { failure_persistence: None, ..Config::with_cases(cases) };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(name: &str, strategy: S, test: impl Fn(S::Value) -> bool) -> Check {
    runner(100)
        .run(&strategy, |v| {
            prop_assert!(test(v));
            Ok(())
        })
        .map_err(|e| format!("{name}: {e}"))
}

fn builtin_covers() -> Vec<CoverP1> {
    let mut out = Vec::new();
    for p in [param_a(), param_a_prime(), param_b()] {
        for c in [[1, 0, 0], [0, 1, 0], [1, 1, 0], [8, -16, 3], [1, 1, 1], [1, 2, 3]] {
            out.push(p.pullback_projection(&pt(c)).unwrap().cover);
        }
        for k in [-2, 1, 3] {
            let u = P1Point::from_int(k);
            out.push(p.pullback_projection(&p.eval(&u).unwrap()).unwrap().cover);
        }
    }
    out
}

fn property_suites() -> Check {
    run("field axioms in Q(zeta12)", (cyclo(), cyclo(), nonzero_cyclo()), |(a, b, c)| {
        a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c))
            && a.mul(&b).mul(&c) == a.mul(&b.mul(&c))
            && c.mul(&c.inv().unwrap()).is_one()
    })?;
    run("field axioms in Q(zeta12)(y)", (ratfun(), ratfun(), ratfun()), |(a, b, c)| {
        a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c))
            && (a.is_zero() || a.mul(&a.inv().unwrap()).is_one())
            && a.add(&b).sub(&b) == a
    })?;
    run(
        "gcd and squarefree reassembly",
        (common::nonzero_unipoly(2), common::nonzero_unipoly(2), common::nonzero_unipoly(2)),
        |(f, g, h)| {
            let x = f.mul(&h).mul(&h);
            let d = x.gcd(&g.mul(&h));
            let (unit, parts) = x.squarefree_decomposition();
            let back = parts.iter().fold(UniPoly::constant(unit), |acc, (p, k)| acc.mul(&p.pow(*k as u32)));
            x.rem(&d).is_zero() && d.rem(&h.monic()).is_zero() && back == x
        },
    )?;
    let covers = builtin_covers();
    let cover = prop::sample::select(covers);
    run("Riemann-Hurwitz", (cover.clone(), mobius(), mobius()), |(h, mu, nu)| {
        let g = h.precompose(&mu).postcompose(&nu);
        g.ramification_profile().hurwitz_sum() == 2 * g.degree() as usize - 2
    })?;
    run("restriction functoriality", (0usize..3, 0usize..3, 1i64..=3, 1i64..=3), |(j, k, a, b)| {
        let p = param_b();
        let (a, b) = (Cyclo::from_int(a), Cyclo::from_int(b));
        let c = a.pow(4).div(&b.pow(3)).unwrap();
        let d = RationalMapP2::from_linear(&LinearMapP2::diag([a, b, c]));
        let s = sigma3();
        let f = (0..j).fold(d.clone(), |acc, _| s.compose(&acc).unwrap());
        let g = (0..k).fold(s.clone(), |acc, _| d.compose(&acc).unwrap());
        let lhs = f.compose(&g).unwrap().restrict_to_curve(&p).unwrap().mobius;
        let rhs = f.restrict_to_curve(&p).unwrap().mobius.compose(&g.restrict_to_curve(&p).unwrap().mobius);
        lhs.projectively_eq(&rhs)
    })?;
    let cubic = cover.prop_filter("degree 3", |h| h.degree() == 3);
    run("Möbius invariance of the degree-3 verdict", (cubic, mobius(), mobius()), |(h, mu, nu)| {
        let g = h.precompose(&mu).postcompose(&nu);
        g.is_galois_deg3().unwrap().galois == h.is_galois_deg3().unwrap().galois
    })
}

fn agrees(h: &CoverP1) -> bool {
    let fast = h.is_galois_deg3().unwrap().galois;
    match h.brute_force_deck_deg3() {
        OracleVerdict::Galois(_) => fast,
        OracleVerdict::NotGalois => !fast,
        OracleVerdict::Inconclusive(_) => false,
    }
}

fn oracle_equivalence() -> Check {
    let cubics: Vec<CoverP1> = builtin_covers().into_iter().filter(|h| h.degree() == 3).collect();
    let galois = cubics.iter().filter(|h| h.is_galois_deg3().unwrap().galois).count();
    for h in &cubics {
        ensure(agrees(h), || format!("disagreement on {h}"))?;
    }
    ensure(galois >= 4, || format!("only {galois} Galois triple covers among the builtins"))?;
    run("oracle on Möbius transforms", (prop::sample::select(cubics), mobius()), |(h, mu)| {
        agrees(&h.precompose(&mu))
    })
}

fn full_claim_run() -> Check {
    let once = || -> Result<(i32, String), String> {
        let out = Command::new(env!("CARGO_BIN_EXE_verify"))
            .args(["--claim", "ALL", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        Ok((out.status.code().unwrap_or(-1), String::from_utf8_lossy(&out.stdout).into_owned()))
    };
    let (code1, out1) = once()?;
    let (code2, out2) = once()?;
    ensure(code1 == 0 && code2 == 0, || format!("exit codes {code1}, {code2}"))?;
    ensure(out1 == out2, || "reports differ between runs".into())?;
    let r = Report::from_json(&out1).map_err(|e| e.to_string())?;
    let s = &r.summary;
    ensure(
        s.total == 14 && s.verified == 11 && s.refuted == 2 && s.unsupported == 1 && s.unexpected == 0,
        || format!("summary {s:?}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("Galois certification", galois_certification),
        ("delta counts", delta_counts),
        ("Cremona identities", cremona_identities),
        ("linearization", linearization),
        ("discrepancy detection", discrepancies),
        ("property suites", property_suites),
        ("oracle equivalence", oracle_equivalence),
        ("full claim run", full_claim_run),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {} {name}: PASS", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
