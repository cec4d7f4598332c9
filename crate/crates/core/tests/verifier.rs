mod common;

use std::collections::BTreeMap;

use common::cyclo;
use galois_cremona::birational::RationalMapP2;
use galois_cremona::plane::{xyz_vars, LinearMapP2, ProjPoint};
use galois_cremona::polykernel::MultiPoly;
use galois_cremona::verifier::{
    parse_map, parse_point, parse_poly, run_claims, ClaimResult, Expectation, Report, Status,
};
use proptest::prelude::*;

fn poly_xyz() -> impl Strategy<Value = MultiPoly<galois_cremona::exactnum::Cyclo>> {
    prop::collection::vec((prop::array::uniform3(0u32..=3), cyclo()), 0..=5)
        .prop_map(|terms| MultiPoly::from_terms(xyz_vars(), terms.into_iter().map(|(e, c)| (e.to_vec(), c))))
}

fn status() -> impl Strategy<Value = Status> {
    prop::sample::select(vec![Status::Verified, Status::Refuted, Status::Unsupported])
}

fn expectation() -> impl Strategy<Value = Expectation> {
    prop::sample::select(vec![Expectation::Verify, Expectation::RefuteWithDiscrepancy, Expectation::Unsupported])
}

fn claim_result() -> impl Strategy<Value = ClaimResult> {
    (
        "[A-D][0-9]{1,2}",
        status(),
        expectation(),
        prop::collection::btree_map("[a-z ]{1,12}", "\\PC{0,20}", 0..4),
        "\\PC{0,30}",
    )
        .prop_map(|(id, status, expected, evidence, notes)| ClaimResult { id, status, expected, evidence, notes })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn polynomial_print_parse_round_trip(p in poly_xyz()) {
        let back = parse_poly(&p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn point_print_parse_round_trip(c in prop::array::uniform3(cyclo())) {
        prop_assume!(c.iter().any(|x| !galois_cremona::exactnum::Ring::is_zero(x)));
        let p = ProjPoint::new(c).unwrap();
        prop_assert_eq!(parse_point(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn map_print_parse_round_trip(m in prop::array::uniform3(prop::array::uniform3(-3i64..=3))) {
        let Ok(l) = LinearMapP2::from_ints(m) else { return Ok(()); };
        let f = RationalMapP2::from_linear(&l);
        prop_assert_eq!(parse_map(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn report_json_round_trip(claims in prop::collection::vec(claim_result(), 0..5)) {
        let r = Report::new(claims);
        let s = r.summary.clone();
        prop_assert_eq!(s.verified + s.refuted + s.unsupported, s.total);
        prop_assert_eq!(s.as_expected + s.unexpected, s.total);
        let json = r.to_json().unwrap();
        let back = Report::from_json(&json).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(back.to_json().unwrap(), json);
    }
}

#[test]
fn full_report_round_trips() {
    let r = run_claims("ALL", None).unwrap();
    let json = r.to_json().unwrap();
    assert_eq!(Report::from_json(&json).unwrap().to_json().unwrap(), json);
}

#[test]
fn golden_report() {
    let json = run_claims("ALL", None).unwrap().to_json().unwrap();
    let golden = include_str!("golden/report.json");
    assert_eq!(json, golden);
}

#[test]
fn curve_filter() {
    let ids = |c| -> Vec<String> { run_claims("ALL", Some(c)).unwrap().claims.into_iter().map(|c| c.id).collect() };
    assert_eq!(ids("b"), ["B1", "B2", "B3"]);
    assert_eq!(ids("a-prime"), ["A4", "A7", "A8", "A9", "A10", "D1"]);
    assert_eq!(ids("a"), ["A1", "A2", "A3", "A4", "A5", "A6"]);
}

#[test]
fn requested_examples() {
    let r = run_claims("A9", None).unwrap();
    assert_eq!(r.claims[0].status, Status::Verified);
    assert_eq!(r.claims[0].evidence["P^-1 M P"], "[y, 0 / 0, w*y]");
    let r = run_claims("A2", None).unwrap();
    let a2 = &r.claims[0];
    assert_eq!((a2.status, a2.expected), (Status::Refuted, Expectation::RefuteWithDiscrepancy));
    assert_eq!(a2.evidence["F(8 : 16 : 3)"], "8192");
    assert!(a2.evidence["flexes"].contains("(8 : 16 : 1)"));
    let evidence: BTreeMap<_, _> = run_claims("A6", None).unwrap().claims[0].evidence.clone();
    assert_eq!(evidence["A corrected preserves the curve"], "yes, F∘A = 65536·F");
}
