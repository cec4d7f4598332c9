#![allow(dead_code)]

use galois_cremona::covers::MobiusMap;
use galois_cremona::exactnum::{q, Cyclo, RatFun, Ring};
use galois_cremona::polykernel::{P1Point, UniPoly};
use proptest::prelude::*;

pub fn cyclo() -> impl Strategy<Value = Cyclo> {
    prop::array::uniform4((-6i64..=6, 1i64..=4)).prop_map(|c| Cyclo::new(c.map(|(n, d)| q(n, d))))
}

pub fn nonzero_cyclo() -> impl Strategy<Value = Cyclo> {
    cyclo().prop_filter("nonzero", |c| !c.is_zero())
}

pub fn int_cyclo() -> impl Strategy<Value = Cyclo> {
    prop::array::uniform4(-3i64..=3).prop_map(Cyclo::from_ints)
}

pub fn unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly<Cyclo>> {
    prop::collection::vec(int_cyclo(), 1..=max_deg + 1).prop_map(UniPoly::new)
}

pub fn nonzero_unipoly(max_deg: usize) -> impl Strategy<Value = UniPoly<Cyclo>> {
    unipoly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfun() -> impl Strategy<Value = RatFun> {
    (unipoly(2), nonzero_unipoly(2)).prop_map(|(n, d)| RatFun::new(n, d).expect("nonzero denominator"))
}

/// Invertible 2×2 matrices with small rational entries.
pub fn mobius() -> impl Strategy<Value = MobiusMap<Cyclo>> {
    prop::array::uniform4(-3i64..=3)
        .prop_filter("invertible", |[a, b, c, d]| a * d - b * c != 0)
        .prop_map(|[a, b, c, d]| {
            MobiusMap::new([[Cyclo::from_int(a), Cyclo::from_int(b)], [Cyclo::from_int(c), Cyclo::from_int(d)]])
                .unwrap()
        })
}

pub fn p1_point() -> impl Strategy<Value = P1Point> {
    prop_oneof![
        1 => Just(P1Point::infinity()),
        6 => (-8i64..=8, 1i64..=5).prop_map(|(n, d)| P1Point::finite(Cyclo::frac(n, d))),
    ]
}
