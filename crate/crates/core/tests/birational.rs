mod common;

use common::p1_point;
use galois_cremona::birational::{compose_chain, sigma1, sigma3, RationalMapP2};
use galois_cremona::exactnum::{Cyclo, Field, Ring};
use galois_cremona::galoispoints::smooth_galois_enumerate;
use galois_cremona::param::{param_a, param_a_prime, param_b, RationalParametrization};
use galois_cremona::plane::{LinearMapP2, ProjPoint};
use galois_cremona::polykernel::P1Point;
use proptest::prelude::*;

fn power(f: &RationalMapP2, k: usize) -> RationalMapP2 {
    (0..k).fold(RationalMapP2::identity(), |acc, _| f.compose(&acc).unwrap())
}

/// diag(a, b, a⁴/b³) preserves X⁴ − Y³Z.
fn diag_b() -> impl Strategy<Value = RationalMapP2> {
    (1i64..=3, 1i64..=3, prop::bool::ANY, 0usize..3).prop_map(|(a, b, neg, k)| {
        let a = Cyclo::from_int(if neg { -a } else { a });
        let b = Cyclo::from_int(b);
        let c = a.pow(4).div(&b.pow(3)).unwrap();
        let d = RationalMapP2::from_linear(&LinearMapP2::diag([a, b, c]));
        d.compose(&power(&sigma3(), k)).unwrap()
    })
}

fn sigma1_power() -> impl Strategy<Value = RationalMapP2> {
    (0usize..3).prop_map(|k| power(&sigma1(), k))
}

fn curve_param() -> impl Strategy<Value = RationalParametrization> {
    prop::sample::select(vec![param_a(), param_a_prime(), param_b()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn restriction_is_functorial_on_b(f in diag_b(), g in diag_b()) {
        let p = param_b();
        let fg = f.compose(&g).unwrap();
        let lhs = fg.restrict_to_curve(&p).unwrap().mobius;
        let rhs = f.restrict_to_curve(&p).unwrap().mobius.compose(&g.restrict_to_curve(&p).unwrap().mobius);
        prop_assert!(lhs.projectively_eq(&rhs));
    }

    #[test]
    fn restriction_is_functorial_on_a_prime(f in sigma1_power(), g in sigma1_power()) {
        let p = param_a_prime();
        let fg = compose_chain(&[&f, &g]).unwrap().map;
        let lhs = fg.restrict_to_curve(&p).unwrap().mobius;
        let rhs = f.restrict_to_curve(&p).unwrap().mobius.compose(&g.restrict_to_curve(&p).unwrap().mobius);
        prop_assert!(lhs.projectively_eq(&rhs));
    }

    #[test]
    fn parameter_of_image_point(p in curve_param(), u in p1_point()) {
        let pt = p.eval(&u).unwrap();
        let back = p.param_of_point(&pt).unwrap();
        // the cusp is the image of a single parameter too
        prop_assert_eq!(back, vec![u]);
    }

    #[test]
    fn projection_degree_is_four_minus_multiplicity(p in curve_param(), c in prop::array::uniform3(-3i64..=3)) {
        prop_assume!(c != [0, 0, 0]);
        let center = ProjPoint::from_ints(c);
        let m = p.curve().multiplicity_at(&center);
        let proj = p.pullback_projection(&center).unwrap();
        prop_assert_eq!(proj.cover.degree(), 4 - m);
    }

    #[test]
    fn projection_from_curve_points(p in curve_param(), u in p1_point()) {
        let center = p.eval(&u).unwrap();
        let m = p.curve().multiplicity_at(&center);
        let proj = p.pullback_projection(&center).unwrap();
        prop_assert_eq!(proj.cover.degree(), 4 - m);
    }
}

fn reparametrize(p: &RationalParametrization, m: [[i64; 2]; 2]) -> RationalParametrization {
    let m = m.map(|r| r.map(Cyclo::from_int));
    let phi = p.components().clone().map(|f| f.substitute_linear(&m));
    RationalParametrization::new(p.name(), p.curve().clone(), phi).unwrap()
}

proptest! {
    // each case runs two full enumerations
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn enumeration_ignores_the_parametrization(
        which in 0usize..2,
        m in prop::array::uniform4(-2i64..=2).prop_filter("invertible", |[a, b, c, d]| a * d != b * c),
    ) {
        let p = if which == 0 { param_a() } else { param_b() };
        let q = reparametrize(&p, [[m[0], m[1]], [m[2], m[3]]]);
        let points = |p: &RationalParametrization| {
            let e = smooth_galois_enumerate(p).unwrap();
            assert!(e.all_decided());
            let mut v: Vec<String> = e.points.iter().map(|(_, c)| c.point.to_string()).collect();
            v.sort();
            v
        };
        prop_assert_eq!(points(&p), points(&q));
    }
}

#[test]
fn infinity_parameter_round_trip() {
    let p = param_a();
    let pt = p.eval(&P1Point::infinity()).unwrap();
    assert_eq!(p.param_of_point(&pt).unwrap(), vec![P1Point::infinity()]);
}
