//! Rational parametrizations ℙ¹ → C ⊂ ℙ² and what they pull back:
//! points, projections from a point, and the Hessian.

use std::fmt;

use crate::covers::CoverP1;
use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Ring};
use crate::plane::{curve_a, curve_a_prime, curve_b, Line, PlaneCurve, ProjPoint};
use crate::polykernel::{BinaryForm, FactoredForm, MultiPoly, P1Point};

pub const BUILTIN_NAMES: [&str; 3] = ["a", "a-prime", "b"];

#[derive(Clone, Debug)]
pub struct RationalParametrization {
    name: String,
    curve: PlaneCurve,
    phi: [BinaryForm; 3],
}

/// Result of [`RationalParametrization::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamCheck {
    pub vanishes: bool,
    pub coprime: bool,
    /// Degrees of the reduced projections used for the injectivity test.
    pub projection_degrees: Vec<u32>,
    pub injective: bool,
}

impl ParamCheck {
    pub fn ok(&self) -> bool {
        self.vanishes && self.coprime && self.injective
    }
}

/// Projection from a point, pulled back along the parametrization.
#[derive(Clone, Debug)]
pub struct Projection {
    pub center: ProjPoint,
    pub lines: [Line; 2],
    pub cover: CoverP1,
    /// Common factor removed from (ℓ₁∘φ, ℓ₂∘φ), monic.
    pub base: BinaryForm,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Flex {
    pub parameter: P1Point,
    pub point: ProjPoint,
    pub tangent: Line,
    /// Contact order with the tangent minus two.
    pub order: u32,
    pub hessian_multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct FlexReport {
    pub hessian_pullback: BinaryForm,
    pub flexes: Vec<Flex>,
    /// Roots of the pulled-back Hessian at parameters of singular points.
    pub singular: Vec<(P1Point, usize)>,
    pub residual: FactoredForm<BinaryForm>,
}

impl FlexReport {
    /// Singular contributions, flex multiplicities and the unsplit part
    /// add up to the degree of the pulled-back Hessian.
    pub fn accounted_degree(&self) -> usize {
        self.singular.iter().map(|(_, m)| m).sum::<usize>()
            + self.flexes.iter().map(|f| f.hessian_multiplicity).sum::<usize>()
            + self.residual.total_degree()
    }
}

impl RationalParametrization {
    pub fn new(name: &str, curve: PlaneCurve, phi: [BinaryForm; 3]) -> Result<Self> {
        let d = phi.iter().map(|f| f.degree()).max().unwrap_or(0);
        if let Some(f) = phi.iter().find(|f| f.degree() != d) {
            return Err(Error::Degree { expected: d.to_string(), found: f.degree() as usize });
        }
        if phi.iter().all(|f| f.is_zero()) {
            return Err(Error::Degenerate("all components vanish".into()));
        }
        Ok(RationalParametrization { name: name.to_string(), curve, phi })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn curve(&self) -> &PlaneCurve {
        &self.curve
    }

    pub fn components(&self) -> &[BinaryForm; 3] {
        &self.phi
    }

    pub fn degree(&self) -> u32 {
        self.phi[0].degree()
    }

    /// G ∘ φ for a form G in X, Y, Z.
    pub fn pull_form(&self, g: &MultiPoly<Cyclo>) -> Result<BinaryForm> {
        let images = self.phi.clone().map(|f| f.poly().clone());
        let d = g.total_degree().unwrap_or(0) * self.degree();
        BinaryForm::new(g.compose(&images)?, d)
    }

    pub fn eval(&self, u: &P1Point) -> Result<ProjPoint> {
        ProjPoint::new(self.phi.clone().map(|f| f.eval_at(u)))
    }

    /// Composition vanishes, components are coprime, and the map onto its
    /// image has degree one: coordinate projections (and, if needed,
    /// projections from a few curve points) pulled back along φ have
    /// degrees whose gcd is 1.
    pub fn verify(&self) -> ParamCheck {
        let vanishes = self.pull_form(self.curve.defining()).is_ok_and(|f| f.is_zero());
        let g = self.phi[0].gcd(&self.phi[1]).gcd(&self.phi[2]);
        let coprime = g.degree() == 0 && !g.is_zero();
        let mut degrees = Vec::new();
        let mut g_all = 0u32;
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if let Ok((c, _)) = CoverP1::reduced(self.phi[i].clone(), self.phi[j].clone()) {
                degrees.push(c.degree());
                g_all = gcd_u32(g_all, c.degree());
            }
        }
        for u in [P1Point::from_int(0), P1Point::from_int(1), P1Point::from_int(2), P1Point::infinity()] {
            if g_all == 1 {
                break;
            }
            let Ok(p) = self.eval(&u) else { continue };
            if let Ok(proj) = self.pullback_projection(&p) {
                degrees.push(proj.cover.degree());
                g_all = gcd_u32(g_all, proj.cover.degree());
            }
        }
        ParamCheck { vanishes, coprime, projection_degrees: degrees, injective: g_all == 1 }
    }

    /// All parameters mapping to `p`: common roots of the forms
    /// p_j φ_i − p_i φ_j.
    pub fn param_of_point(&self, p: &ProjPoint) -> Result<Vec<P1Point>> {
        if !self.curve.contains(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let c = p.coords();
        let mut g = BinaryForm::zero(self.degree());
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let cross = self.phi[i].scale(&c[j]).sub(&self.phi[j].scale(&c[i]));
            g = g.gcd(&cross);
        }
        if g.is_zero() {
            return Err(Error::Degenerate("parametrization is constant".into()));
        }
        let (roots, rest) = g.roots();
        if rest.total_degree() > 0 {
            return Err(Error::ResidualFactor { degree: rest.total_degree() });
        }
        Ok(roots.into_iter().map(|(u, _)| u).collect())
    }

    /// Lines ℓ_ij = p_i x_j − p_j x_i through `center` for the index pairs
    /// (0,1), (0,2), (1,2), each scaled to first coefficient one; the first
    /// two independent ones are pulled back and their common factor removed.
    pub fn pullback_projection(&self, center: &ProjPoint) -> Result<Projection> {
        let lines = projection_lines(center);
        let [l1, l2] = lines.clone();
        let p = self.pull_form(&l1.as_poly())?;
        let q = self.pull_form(&l2.as_poly())?;
        let (cover, base) = CoverP1::reduced(p, q)?;
        Ok(Projection { center: center.clone(), lines, cover, base })
    }

    pub fn flex_parameters(&self) -> Result<FlexReport> {
        let h = self.pull_form(&self.curve.hessian())?;
        if h.is_zero() {
            return Err(Error::Degenerate("Hessian vanishes along the curve".into()));
        }
        let mut singular_params = Vec::new();
        for (p, _) in self.curve.singular_points()? {
            singular_params.extend(self.param_of_point(&p)?);
        }
        let (roots, residual) = h.roots();
        let mut flexes = Vec::new();
        let mut singular = Vec::new();
        for (u, m) in roots {
            if singular_params.contains(&u) {
                singular.push((u, m));
                continue;
            }
            let point = self.eval(&u)?;
            let tangent = self.curve.tangent_line_at(&point)?;
            let contact = self.curve.line_multiplicities(&tangent)?.multiplicity_of(&point);
            if contact < 3 {
                return Err(Error::VerificationFailed(format!("Hessian vanishes at the non-flex {point}")));
            }
            flexes.push(Flex { parameter: u, point, tangent, order: contact as u32 - 2, hessian_multiplicity: m });
        }
        Ok(FlexReport { hessian_pullback: h, flexes, singular, residual })
    }
}

/// The two lines through `center` used for projecting from it.
pub fn projection_lines(center: &ProjPoint) -> [Line; 2] {
    let c = center.coords();
    let z = Cyclo::zero;
    let mut found: Vec<[Cyclo; 3]> = Vec::new();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let mut v = [z(), z(), z()];
        v[j] = c[i].clone();
        v[i] = c[j].neg();
        if v.iter().all(|x| x.is_zero()) {
            continue;
        }
        if let Some(prev) = found.first() {
            if cross(prev, &v).iter().all(|x| x.is_zero()) {
                continue;
            }
        }
        found.push(v);
        if found.len() == 2 {
            break;
        }
    }
    let [a, b]: [[Cyclo; 3]; 2] = found.try_into().expect("a point lies on two independent lines");
    [Line::new(a).unwrap(), Line::new(b).unwrap()]
}

fn cross(a: &[Cyclo; 3], b: &[Cyclo; 3]) -> [Cyclo; 3] {
    let m = |i: usize, j: usize| a[i].mul(&b[j]).sub(&a[j].mul(&b[i]));
    [m(1, 2), m(2, 0), m(0, 1)]
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

fn s() -> BinaryForm {
    BinaryForm::s()
}

fn t() -> BinaryForm {
    BinaryForm::t()
}

/// (st³, t⁴, s³t − s⁴) on X⁴ − X³Y + Y³Z.
pub fn param_a() -> RationalParametrization {
    let phi = [s().mul(&t().pow(3)), t().pow(4), s().pow(3).mul(&t()).sub(&s().pow(4))];
    RationalParametrization::new("a", curve_a(), phi).unwrap()
}

/// (s(s+t)³, t(s+t)³, s³t) on (X + Y)³Z − X³Y.
pub fn param_a_prime() -> RationalParametrization {
    let u = s().add(&t()).pow(3);
    let phi = [s().mul(&u), t().mul(&u), s().pow(3).mul(&t())];
    RationalParametrization::new("a-prime", curve_a_prime(), phi).unwrap()
}

/// (st³, t⁴, s⁴) on X⁴ − Y³Z.
pub fn param_b() -> RationalParametrization {
    let phi = [s().mul(&t().pow(3)), t().pow(4), s().pow(4)];
    RationalParametrization::new("b", curve_b(), phi).unwrap()
}

pub fn builtin(name: &str) -> Option<RationalParametrization> {
    match name {
        "a" => Some(param_a()),
        "a-prime" => Some(param_a_prime()),
        "b" => Some(param_b()),
        _ => None,
    }
}

impl fmt::Display for RationalParametrization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [x, y, z] = &self.phi;
        write!(f, "({x} : {y} : {z})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(c)
    }

    #[test]
    fn builtins_verify() {
        for name in BUILTIN_NAMES {
            let p = builtin(name).unwrap();
            let check = p.verify();
            assert!(check.ok(), "{name}: {check:?}");
            assert_eq!(check.projection_degrees[0], 1);
        }
        let bad = RationalParametrization::new("conic", curve_a(), [s().pow(2), s().mul(&t()), t().pow(2)]).unwrap();
        assert!(!bad.verify().vanishes);
        let doubled =
            RationalParametrization::new("b2", curve_b(), [s().pow(2).mul(&t().pow(6)), t().pow(8), s().pow(8)])
                .unwrap();
        let c = doubled.verify();
        assert!(c.vanishes && c.coprime && !c.injective);
    }

    #[test]
    fn points_and_parameters() {
        let a = param_a();
        assert_eq!(a.eval(&P1Point::from_int(1)).unwrap(), pt([1, 1, 0]));
        assert_eq!(a.eval(&P1Point::from_int(2)).unwrap(), pt([2, 1, -8]));
        assert_eq!(a.eval(&P1Point::finite(Cyclo::frac(1, 2))).unwrap(), pt([8, 16, 1]));
        assert_eq!(a.param_of_point(&pt([1, 1, 0])).unwrap(), vec![P1Point::from_int(1)]);
        assert_eq!(a.param_of_point(&pt([0, 0, 1])).unwrap(), vec![P1Point::infinity()]);
        assert!(matches!(a.param_of_point(&pt([1, 0, 0])), Err(Error::NotOnCurve(_))));
        assert_eq!(param_b().param_of_point(&pt([0, 1, 0])).unwrap(), vec![P1Point::from_int(0)]);
        let ap = param_a_prime();
        assert_eq!(ap.eval(&P1Point::infinity()).unwrap(), pt([1, 0, 0]));
        assert_eq!(ap.param_of_point(&pt([0, 0, 1])).unwrap(), vec![P1Point::from_int(-1)]);
    }

    #[test]
    fn projections() {
        let pr = param_a_prime().pullback_projection(&pt([1, 0, 0])).unwrap();
        assert_eq!(pr.cover.p(), &s().add(&t()).pow(3));
        assert_eq!(pr.cover.q(), &s().pow(3));
        assert_eq!(pr.base, t());

        let pr = param_b().pullback_projection(&pt([0, 1, 0])).unwrap();
        assert_eq!(pr.cover.p(), &t().pow(3));
        assert_eq!(pr.cover.q(), &s().pow(3));
        assert_eq!(pr.base, s());

        let pr = param_b().pullback_projection(&pt([1, 0, 0])).unwrap();
        assert_eq!((pr.cover.p(), pr.cover.q()), (&t().pow(4), &s().pow(4)));
        assert_eq!(pr.base, BinaryForm::one());

        let pr = param_a().pullback_projection(&pt([1, 1, 0])).unwrap();
        assert_eq!((pr.cover.p(), pr.cover.q()), (&t().pow(3), &s().pow(3).neg()));
        assert_eq!(pr.base, s().sub(&t()));

        // from the cusp only a line's worth remains
        let pr = param_a().pullback_projection(&pt([0, 0, 1])).unwrap();
        assert_eq!(pr.cover.degree(), 1);
    }

    #[test]
    fn flexes() {
        let r = param_a().flex_parameters().unwrap();
        let got: Vec<(P1Point, u32)> = r.flexes.iter().map(|f| (f.parameter.clone(), f.order)).collect();
        assert_eq!(got, vec![(P1Point::from_int(0), 1), (P1Point::finite(Cyclo::frac(1, 2)), 1)]);
        assert_eq!(r.flexes[1].point, pt([8, 16, 1]));
        assert_eq!(r.flexes[1].tangent.to_string(), "4*X - Y - 16*Z");
        assert_eq!(r.singular, vec![(P1Point::infinity(), 22)]);
        assert_eq!(r.accounted_degree(), 24);

        let r = param_b().flex_parameters().unwrap();
        assert_eq!(r.flexes.len(), 1);
        assert_eq!((r.flexes[0].point.clone(), r.flexes[0].order), (pt([0, 1, 0]), 2));
        assert_eq!(r.singular, vec![(P1Point::infinity(), 22)]);

        let r = param_a_prime().flex_parameters().unwrap();
        assert_eq!(r.accounted_degree(), 24);
        for f in &r.flexes {
            assert_eq!(f.order as usize, f.hessian_multiplicity);
        }
    }
}
