//! Rational self-maps of ℙ² as gcd-reduced triples of forms, their action
//! on parametrized curves, and 2×2 matrices over ℚ(ζ₁₂)(y).

use std::fmt;

use crate::covers::MobiusMap;
use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Field, RatFun, Ring};
use crate::param::RationalParametrization;
use crate::plane::{xyz, LinearMapP2, PlaneCurve, ProjPoint};
use crate::polykernel::{nullspace, BinaryForm, MultiPoly, P1Point, UniPoly};

/// (f₀ : f₁ : f₂) with coprime homogeneous components of one degree.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMapP2 {
    comps: [MultiPoly<Cyclo>; 3],
    degree: u32,
}

/// An unreduced composite together with what reduction removed.
#[derive(Clone, Debug)]
pub struct Composition {
    pub map: RationalMapP2,
    pub formal_degree: u32,
    /// Common factor divided out of the formal composite (monic).
    pub removed: MultiPoly<Cyclo>,
}

/// f∘φ = (φ∘μ)·g on the parameter line.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub mobius: MobiusMap<Cyclo>,
    pub factor: BinaryForm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    NotInDec,
    InDecNotIne,
    InIne,
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::NotInDec => "not-in-Dec",
            Membership::InDecNotIne => "in-Dec-not-Ine",
            Membership::InIne => "in-Ine",
        })
    }
}

const SAMPLE_PARAMETERS: [i64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

impl RationalMapP2 {
    /// Reduces by the gcd of the components.
    pub fn new(comps: [MultiPoly<Cyclo>; 3]) -> Result<Self> {
        Ok(Self::reduce(comps)?.0)
    }

    fn reduce(comps: [MultiPoly<Cyclo>; 3]) -> Result<(Self, MultiPoly<Cyclo>)> {
        if comps.iter().all(|c| c.is_zero()) {
            return Err(Error::Degenerate("all components vanish".into()));
        }
        let mut degree: Option<u32> = None;
        for c in comps.iter().filter(|c| !c.is_zero()) {
            if !c.is_homogeneous() {
                return Err(Error::NotHomogeneous(c.to_string()));
            }
            let d = c.total_degree().unwrap_or(0);
            if degree.is_some_and(|e| e != d) {
                return Err(Error::Degree { expected: degree.unwrap().to_string(), found: d as usize });
            }
            degree = Some(d);
        }
        let (g, reduced) = MultiPoly::cancel_common(&comps);
        let reduced: [MultiPoly<Cyclo>; 3] = reduced.try_into().expect("three components");
        let degree = degree.unwrap() - g.total_degree().unwrap_or(0);
        let nonzero: Vec<&MultiPoly<Cyclo>> = reduced.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.iter().all(|c| c.proportional_to(nonzero[0]).is_some()) {
            return Err(Error::Degenerate("image is a single point".into()));
        }
        Ok((RationalMapP2 { comps: reduced, degree }, g))
    }

    pub fn identity() -> Self {
        RationalMapP2 { comps: xyz(), degree: 1 }
    }

    pub fn from_linear(t: &LinearMapP2) -> Self {
        RationalMapP2 { comps: t.as_forms(), degree: 1 }
    }

    pub fn components(&self) -> &[MultiPoly<Cyclo>; 3] {
        &self.comps
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn as_linear(&self) -> Option<LinearMapP2> {
        if self.degree != 1 {
            return None;
        }
        let m = self.comps.clone().map(|c| [[1, 0, 0], [0, 1, 0], [0, 0, 1]].map(|e| c.coeff(&e)));
        LinearMapP2::new(m).ok()
    }

    /// Image of a point; `None` on the base locus.
    pub fn apply(&self, p: &ProjPoint) -> Option<ProjPoint> {
        ProjPoint::new(self.comps.clone().map(|c| c.eval(p.coords()))).ok()
    }

    /// self ∘ other, without reduction bookkeeping.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        Ok(self.compose_report(other)?.map)
    }

    pub fn compose_report(&self, other: &Self) -> Result<Composition> {
        compose_chain(&[self, other])
    }

    /// Same map: all cross products f_i g_j − f_j g_i vanish.
    pub fn projectively_eq(&self, other: &Self) -> bool {
        (0..3).all(|i| {
            (i + 1..3).all(|j| {
                self.comps[i].mul(&other.comps[j]).sub(&self.comps[j].mul(&other.comps[i])).is_zero()
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        self.projectively_eq(&Self::identity())
    }

    /// Smallest k ≤ n with selfᵏ the identity.
    pub fn order_up_to(&self, n: u32) -> Option<u32> {
        let mut acc = Self::identity();
        for k in 1..=n {
            acc = self.compose(&acc).ok()?;
            if acc.is_identity() {
                return Some(k);
            }
        }
        None
    }

    /// Cofactor c with F∘f = c·F, if F∘f is divisible by F.
    pub fn preserves_curve(&self, c: &PlaneCurve) -> Option<MultiPoly<Cyclo>> {
        let pulled = c.defining().compose(&self.comps).ok()?;
        if pulled.is_zero() {
            return None;
        }
        pulled.div_exact(c.defining())
    }

    /// f∘φ as binary forms.
    pub fn pull_param(&self, p: &RationalParametrization) -> Result<[BinaryForm; 3]> {
        let mut out = Vec::with_capacity(3);
        for c in &self.comps {
            out.push(p.pull_form(c)?);
        }
        Ok(out.try_into().expect("three components"))
    }

    /// The Möbius map μ with f∘φ = (φ∘μ)·g, fitted through images of the
    /// affine parameters 2, 3, 5, 7, 11, ... and checked as an exact identity.
    pub fn restrict_to_curve(&self, p: &RationalParametrization) -> Result<Restriction> {
        if self.preserves_curve(p.curve()).is_none() {
            return Err(Error::VerificationFailed(format!("{self} does not preserve {}", p.curve())));
        }
        let mut pairs = Vec::new();
        for x in SAMPLE_PARAMETERS {
            if pairs.len() == 5 {
                break;
            }
            let u = P1Point::from_int(x);
            let Some(image) = p.eval(&u).ok().and_then(|pt| self.apply(&pt)) else {
                continue;
            };
            let params = p.param_of_point(&image)?;
            if let [v] = params.as_slice() {
                pairs.push((u, v.clone()));
            }
        }
        if pairs.len() < 5 {
            return Err(Error::Degenerate("too few usable sample parameters".into()));
        }
        // v ~ μ(u): v_t (a u_s + b u_t) − v_s (c u_s + d u_t) = 0
        let rows: Vec<Vec<Cyclo>> = pairs
            .iter()
            .map(|(u, v)| {
                vec![
                    v.t().mul(u.s()),
                    v.t().mul(u.t()),
                    v.s().mul(u.s()).neg(),
                    v.s().mul(u.t()).neg(),
                ]
            })
            .collect();
        let kernel = nullspace(&rows, 4);
        let [k] = kernel.as_slice() else {
            return Err(Error::VerificationFailed("sampled pairs fit no unique Möbius map".into()));
        };
        let mobius = MobiusMap::new([[k[0].clone(), k[1].clone()], [k[2].clone(), k[3].clone()]])?.normalized();
        let lhs = self.pull_param(p)?;
        let rhs = p.components().clone().map(|f| f.substitute_linear(mobius.matrix()));
        let (i, _) = rhs
            .iter()
            .enumerate()
            .find(|(_, f)| !f.is_zero())
            .ok_or_else(|| Error::Degenerate("φ∘μ vanishes".into()))?;
        let factor = lhs[i]
            .div_exact(&rhs[i])
            .ok_or_else(|| Error::VerificationFailed("f∘φ is not a multiple of φ∘μ".into()))?;
        if (0..3).any(|k| lhs[k] != rhs[k].mul(&factor)) {
            return Err(Error::VerificationFailed("f∘φ = (φ∘μ)·g fails".into()));
        }
        Ok(Restriction { mobius, factor })
    }

    pub fn dec_ine_membership(&self, p: &RationalParametrization) -> Result<Membership> {
        if self.preserves_curve(p.curve()).is_none() {
            return Ok(Membership::NotInDec);
        }
        if self.restrict_to_curve(p)?.mobius.is_identity() {
            Ok(Membership::InIne)
        } else {
            Ok(Membership::InDecNotIne)
        }
    }

    /// g⁻¹ ∘ self ∘ g, after checking that g_inv inverts g.
    pub fn conjugate(&self, g: &Self, g_inv: &Self) -> Result<Self> {
        Ok(self.conjugate_report(g, g_inv)?.map)
    }

    pub fn conjugate_report(&self, g: &Self, g_inv: &Self) -> Result<Composition> {
        if !g.compose(g_inv)?.is_identity() || !g_inv.compose(g)?.is_identity() {
            return Err(Error::VerificationFailed(format!("{g_inv} does not invert {g}")));
        }
        compose_chain(&[g_inv, self, g])
    }
}

/// maps[0] ∘ maps[1] ∘ ... formed without intermediate reduction, then
/// reduced once. The result is scaled so that its first nonzero component
/// has leading coefficient one.
pub fn compose_chain(maps: &[&RationalMapP2]) -> Result<Composition> {
    let (last, rest) = maps.split_last().expect("at least one map");
    let mut comps = last.comps.clone();
    let mut formal = last.degree;
    for f in rest.iter().rev() {
        comps = f.comps.clone().map(|c| c.compose(&comps).expect("three images"));
        formal *= f.degree;
    }
    let (mut map, removed) = RationalMapP2::reduce(comps)?;
    let lead = map.comps.iter().find(|c| !c.is_zero()).expect("nonzero component").leading_coeff();
    let inv = lead.inv().expect("nonzero leading coefficient");
    map.comps = map.comps.map(|c| c.scale(&inv));
    Ok(Composition { map, formal_degree: formal, removed })
}

impl fmt::Display for RationalMapP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.comps;
        write!(f, "({a} : {b} : {c})")
    }
}

impl fmt::Debug for RationalMapP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMapP2{self}")
    }
}

/// 2×2 matrix over ℚ(ζ₁₂)(y).
pub type FunctionFieldMatrix = MobiusMap<RatFun>;

/// P⁻¹ · M · P.
pub fn ffmatrix_conjugate(m: &FunctionFieldMatrix, p: &FunctionFieldMatrix) -> Result<FunctionFieldMatrix> {
    m.conjugate_by(p)
}

fn omega_line() -> MultiPoly<Cyclo> {
    let [x, y, _] = xyz();
    let w = Cyclo::omega();
    x.scale(&w.sub(&Cyclo::one())).add(&y.scale(&w))
}

/// (XY : YL : ZL) with L = (ω − 1)X + ωY, acting on (X + Y)³Z − X³Y.
pub fn sigma1() -> RationalMapP2 {
    let [x, y, z] = xyz();
    let l = omega_line();
    RationalMapP2::new([x.mul(&y), y.mul(&l), z.mul(&l)]).unwrap()
}

/// diag(ω, 1, ω), acting on X⁴ − Y³Z.
pub fn sigma3() -> RationalMapP2 {
    let w = Cyclo::omega();
    RationalMapP2::from_linear(&LinearMapP2::diag([w.clone(), Cyclo::one(), w]))
}

/// (−XY : Y(X + Z) : Z(X + Z)).
pub fn cremona_p() -> RationalMapP2 {
    let [x, y, z] = xyz();
    let xz = x.add(&z);
    RationalMapP2::new([x.mul(&y).neg(), y.mul(&xz), z.mul(&xz)]).unwrap()
}

/// (−XZ : Y(X + Y) : Z(X + Y)), the inverse of [`cremona_p`].
pub fn cremona_p_inv() -> RationalMapP2 {
    let [x, y, z] = xyz();
    let xy = x.add(&y);
    RationalMapP2::new([x.mul(&z).neg(), y.mul(&xy), z.mul(&xy)]).unwrap()
}

fn rf(p: UniPoly<Cyclo>) -> RatFun {
    RatFun::from_poly(p)
}

/// [y, 0 / ω − 1, ωy]: the action of σ₁ on the fibers of the projection,
/// in the coordinate x over the base coordinate y.
pub fn sigma1_fiber_matrix() -> FunctionFieldMatrix {
    let w = Cyclo::omega();
    let y = RatFun::y();
    MobiusMap::new([
        [y.clone(), RatFun::zero()],
        [RatFun::constant(w.sub(&Cyclo::one())), y.mul(&RatFun::constant(w))],
    ])
    .unwrap()
}

/// [−y, 0 / 1, 1].
pub fn fiber_conjugator() -> FunctionFieldMatrix {
    MobiusMap::new([
        [rf(UniPoly::x().neg()), RatFun::zero()],
        [RatFun::one(), RatFun::one()],
    ])
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::param::{param_a_prime, param_b};
    use crate::plane::{curve_a_prime, curve_b};

    fn w() -> Cyclo {
        Cyclo::omega()
    }

    #[test]
    fn cremona_identities() {
        let s1 = sigma1();
        assert_eq!(s1.degree(), 2);
        assert_eq!(s1.order_up_to(6), Some(3));
        assert!(compose_chain(&[&s1, &s1, &s1]).unwrap().map.is_identity());
        assert_eq!(sigma3().order_up_to(6), Some(3));
        assert_eq!(cremona_p().order_up_to(6), None);
        assert!(cremona_p().compose(&cremona_p_inv()).unwrap().is_identity());
        let id = RationalMapP2::identity();
        assert_eq!(id.compose(&s1).unwrap(), s1);
    }

    #[test]
    fn curve_cofactors() {
        let [_, y, _] = xyz();
        let cof = sigma1().preserves_curve(&curve_a_prime()).unwrap();
        assert_eq!(cof, y.pow(3).mul(&omega_line()));
        let cof = sigma3().preserves_curve(&curve_b()).unwrap();
        assert_eq!(cof.constant_value(), Some(w()));
        assert!(cremona_p().preserves_curve(&curve_a_prime()).is_none());
    }

    #[test]
    fn linearization() {
        let c = sigma1().conjugate_report(&cremona_p(), &cremona_p_inv()).unwrap();
        assert_eq!(c.formal_degree, 8);
        assert_eq!(c.map.degree(), 1);
        let lin = c.map.as_linear().unwrap();
        assert!(lin.projectively_eq(&LinearMapP2::diag([w().mul(&w()), Cyclo::one(), Cyclo::one()])));
        let s3 = sigma3();
        assert!(s3.conjugate(&RationalMapP2::identity(), &RationalMapP2::identity()).unwrap().projectively_eq(&s3));
        assert!(sigma1().conjugate(&cremona_p(), &cremona_p()).is_err());
    }

    #[test]
    fn restrictions() {
        let r = sigma1().restrict_to_curve(&param_a_prime()).unwrap();
        let expect = MobiusMap::new([[Cyclo::one(), Cyclo::zero()], [w().sub(&Cyclo::one()), w()]]).unwrap();
        assert!(r.mobius.projectively_eq(&expect));
        assert!(r.factor.proportional_to(&BinaryForm::t().mul(&BinaryForm::s().add(&BinaryForm::t()).pow(3))).is_some());
        let r = sigma3().restrict_to_curve(&param_b()).unwrap();
        assert!(r.mobius.projectively_eq(&MobiusMap::diag(w(), Cyclo::one()).unwrap()));
        let r = RationalMapP2::identity().restrict_to_curve(&param_b()).unwrap();
        assert!(r.mobius.is_identity());
    }

    #[test]
    fn membership() {
        let p = param_a_prime();
        assert_eq!(sigma1().dec_ine_membership(&p).unwrap(), Membership::InDecNotIne);
        assert_eq!(RationalMapP2::identity().dec_ine_membership(&p).unwrap(), Membership::InIne);
        assert_eq!(cremona_p().dec_ine_membership(&p).unwrap(), Membership::NotInDec);
    }

    #[test]
    fn fiber_matrices() {
        let c = ffmatrix_conjugate(&sigma1_fiber_matrix(), &fiber_conjugator()).unwrap();
        let y = RatFun::y();
        let expect = MobiusMap::new([[y.clone(), RatFun::zero()], [RatFun::zero(), y.mul(&RatFun::constant(w()))]])
            .unwrap();
        assert!(c.projectively_eq(&expect));
        let id = FunctionFieldMatrix::identity();
        assert!(ffmatrix_conjugate(&sigma1_fiber_matrix(), &id).unwrap().projectively_eq(&sigma1_fiber_matrix()));
    }

    #[test]
    fn degenerate_maps_rejected() {
        let [x, y, _] = xyz();
        assert!(RationalMapP2::new([x.clone(), x.clone(), x.clone()]).is_err());
        assert!(RationalMapP2::new([x.clone(), y.pow(2), x]).is_err());
    }
}
