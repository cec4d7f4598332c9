mod common;

use std::sync::OnceLock;

use common::{int_cyclo, mobius, p1_point};
use galois_cremona::covers::{CoverP1, OracleVerdict};
use galois_cremona::param::{param_a, param_a_prime, param_b};
use galois_cremona::plane::ProjPoint;
use galois_cremona::polykernel::BinaryForm;
use proptest::prelude::*;

/// Projections of the builtin curves from their Galois points and from a
/// few other points, smooth or not.
fn builtin_covers() -> &'static [CoverP1] {
    static COVERS: OnceLock<Vec<CoverP1>> = OnceLock::new();
    COVERS.get_or_init(|| {
        let cases = [
            (param_a_prime(), [1, 0, 0]),
            (param_a(), [1, 1, 0]),
            (param_a(), [8, -16, 3]),
            (param_a(), [0, 1, 0]),
            (param_a(), [1, 2, 3]),
            (param_b(), [0, 1, 0]),
            (param_b(), [1, 0, 0]),
            (param_b(), [1, 1, 1]),
            (param_b(), [1, 2, 0]),
        ];
        cases
            .into_iter()
            .map(|(p, c)| p.pullback_projection(&ProjPoint::from_ints(c)).unwrap().cover)
            .collect()
    })
}

fn builtin() -> impl Strategy<Value = CoverP1> {
    prop::sample::select(builtin_covers().to_vec())
}

fn degree3_builtin() -> impl Strategy<Value = CoverP1> {
    builtin().prop_filter("degree 3", |h| h.degree() == 3)
}

/// Random cubic covers from coprime integer cubics.
fn random_cubic() -> impl Strategy<Value = CoverP1> {
    (prop::array::uniform4(int_cyclo()), prop::array::uniform4(int_cyclo())).prop_filter_map(
        "coprime cubics",
        |(a, b)| {
            let p = BinaryForm::from_coeffs(&a, 3);
            let q = BinaryForm::from_coeffs(&b, 3);
            CoverP1::new(p, q).ok().filter(|h| h.degree() == 3)
        },
    )
}

fn deg3_galois(h: &CoverP1) -> bool {
    h.is_galois_deg3().unwrap().galois
}

fn oracle_agrees(h: &CoverP1) -> bool {
    match h.brute_force_deck_deg3() {
        OracleVerdict::Galois(_) => deg3_galois(h),
        OracleVerdict::NotGalois => !deg3_galois(h),
        OracleVerdict::Inconclusive(_) => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn riemann_hurwitz(h in builtin(), mu in mobius(), nu in mobius()) {
        let g = h.precompose(&mu).postcompose(&nu);
        let d = g.degree() as usize;
        prop_assert_eq!(g.ramification_profile().hurwitz_sum(), 2 * d - 2);
        prop_assert_eq!(g.wronskian().degree() as usize, 2 * d - 2);
    }

    #[test]
    fn wronskian_chain_rule(h in builtin(), mu in mobius(), nu in mobius()) {
        // W(h∘μ) = det μ · W(h)∘μ and W(ν∘h) = det ν · W(h), up to the
        // scaling that makes the first component monic
        let w = h.wronskian();
        let pre = h.precompose(&mu).wronskian();
        prop_assert!(pre.proportional_to(&w.substitute_linear(mu.matrix())).is_some());
        let post = h.postcompose(&nu).wronskian();
        prop_assert!(post.proportional_to(&w).is_some());
    }

    #[test]
    fn deck_group_is_closed(h in builtin(), mu in mobius()) {
        let g = h.precompose(&mu);
        let Ok(deck) = g.deck_group() else { return Ok(()); };
        for a in &deck {
            prop_assert!(g.invariant_under(a));
            for b in &deck {
                let ab = a.compose(b);
                prop_assert!(deck.iter().any(|c| c.projectively_eq(&ab)));
            }
        }
    }

    #[test]
    fn deg3_verdict_is_mobius_invariant(h in prop_oneof![degree3_builtin(), random_cubic()], mu in mobius(), nu in mobius()) {
        let g = h.precompose(&mu).postcompose(&nu);
        prop_assert_eq!(deg3_galois(&g), deg3_galois(&h));
    }

    #[test]
    fn wronskian_test_matches_explicit_deck_search(h in prop_oneof![degree3_builtin(), random_cubic()], mu in mobius()) {
        prop_assert!(oracle_agrees(&h));
        prop_assert!(oracle_agrees(&h.precompose(&mu)));
    }

    #[test]
    fn fibers_have_degree_many_points(h in builtin(), u in p1_point()) {
        let (pts, rest) = h.fiber(&h.apply(&u));
        let total: usize = pts.iter().map(|(_, m)| m).sum::<usize>() + rest;
        prop_assert_eq!(total, h.degree() as usize);
        prop_assert!(pts.iter().any(|(x, _)| x == &u));
    }
}

#[test]
fn builtin_degree3_covers_agree_with_the_oracle() {
    for h in builtin_covers().iter().filter(|h| h.degree() == 3) {
        assert!(oracle_agrees(h), "{h}");
    }
    let galois = builtin_covers().iter().filter(|h| h.degree() == 3 && deg3_galois(h)).count();
    assert_eq!(galois, 4);
}
