mod common;

use common::{int_cyclo, nonzero_unipoly};
use galois_cremona::exactnum::{Cyclo, Ring};
use galois_cremona::polykernel::{resultant, roots_in_field, UniPoly};
use proptest::prelude::*;

/// Product of (x - r) over the given roots.
fn from_roots(roots: &[Cyclo]) -> UniPoly<Cyclo> {
    roots
        .iter()
        .fold(UniPoly::one(), |acc, r| acc.mul(&UniPoly::linear_root(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn gcd_divides_and_is_maximal(f in nonzero_unipoly(3), g in nonzero_unipoly(3), h in nonzero_unipoly(2)) {
        let (fh, gh) = (f.mul(&h), g.mul(&h));
        let d = fh.gcd(&gh);
        prop_assert!(fh.rem(&d).is_zero());
        prop_assert!(gh.rem(&d).is_zero());
        // h divides every common divisor's multiple, so h | gcd
        prop_assert!(d.rem(&h).is_zero());
        let (a, b) = (fh.div_rem(&d).0, gh.div_rem(&d).0);
        prop_assert_eq!(a.gcd(&b), UniPoly::one());
    }

    #[test]
    fn squarefree_reassembles(parts in prop::collection::vec((nonzero_unipoly(2), 1usize..=3), 1..=3)) {
        let f = parts.iter().fold(UniPoly::one(), |acc, (p, k)| acc.mul(&p.pow(*k as u32)));
        let (unit, factors) = f.squarefree_decomposition();
        let back = factors
            .iter()
            .fold(UniPoly::constant(unit), |acc, (p, k)| acc.mul(&p.pow(*k as u32)));
        prop_assert_eq!(&back, &f);
        for (i, (p, _)) in factors.iter().enumerate() {
            prop_assert_eq!(p.gcd(&p.derivative()), UniPoly::one());
            for (q, _) in &factors[i + 1..] {
                prop_assert_eq!(p.gcd(q), UniPoly::one());
            }
        }
    }

    #[test]
    fn resultant_is_multiplicative(f in nonzero_unipoly(2), g in nonzero_unipoly(2), h in nonzero_unipoly(2)) {
        let lhs = resultant(&f.mul(&g), &h);
        let rhs = resultant(&f, &h).mul(&resultant(&g, &h));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_vanishes_on_common_roots(r in int_cyclo(), f in nonzero_unipoly(2), g in nonzero_unipoly(2)) {
        let lin = UniPoly::linear_root(&r);
        prop_assert!(resultant(&f.mul(&lin), &g.mul(&lin)).is_zero());
    }

    #[test]
    fn planted_roots_are_found(roots in prop::collection::vec(int_cyclo(), 1..=4), c in int_cyclo()) {
        prop_assume!(!c.is_zero());
        let f = from_roots(&roots).scale(&c);
        let found = roots_in_field(&f);
        prop_assert_eq!(found.residual_degree(), 0);
        prop_assert_eq!(found.root_count(), roots.len());
        for r in &roots {
            prop_assert!(found.roots.iter().any(|(x, _)| x == r));
        }
    }
}
