//! Galois points: certification of a given point, verification of Cremona
//! lifts, and enumeration of all smooth Galois points of a parametrized
//! quartic.

use std::fmt;

use crate::birational::RationalMapP2;
use crate::covers::{CoverP1, Deg4Kind, MobiusMap, RamificationProfile};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Ring};
use crate::param::{projection_lines, RationalParametrization};
use crate::plane::ProjPoint;
use crate::polykernel::{
    resultant_formal, roots_in_field, subresultant_coeff, vars, BinaryForm, FactoredForm, MultiPoly, P1Point,
    UniPoly, Vars,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Smooth,
    Outer,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Cyclic3,
    Cyclic4,
    Klein,
}

impl GroupKind {
    pub fn order(&self) -> usize {
        match self {
            GroupKind::Cyclic3 => 3,
            GroupKind::Cyclic4 | GroupKind::Klein => 4,
        }
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Location::Smooth => "smooth",
            Location::Outer => "outer",
        })
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GroupKind::Cyclic3 => "cyclic-3",
            GroupKind::Cyclic4 => "cyclic-4",
            GroupKind::Klein => "klein",
        })
    }
}

#[derive(Clone, Debug)]
pub struct GaloisCertificate {
    pub point: ProjPoint,
    pub location: Location,
    pub cover: CoverP1,
    pub group: GroupKind,
    /// Whole deck group, identity first.
    pub deck: Vec<MobiusMap<Cyclo>>,
    pub ramification: RamificationProfile,
}

impl GaloisCertificate {
    /// The deck transformation that generates a cyclic group.
    pub fn generator(&self) -> &MobiusMap<Cyclo> {
        &self.deck[1]
    }

    pub fn contains(&self, mu: &MobiusMap<Cyclo>) -> bool {
        self.deck.iter().any(|d| d.projectively_eq(mu))
    }

    /// The group permutes the fiber through `u` without fixed points.
    pub fn acts_freely_on_fiber_of(&self, u: &P1Point) -> bool {
        let (fiber, rest) = self.cover.fiber(&self.cover.apply(u));
        if rest > 0 || fiber.iter().any(|(_, m)| *m > 1) {
            return false;
        }
        let pts: Vec<&P1Point> = fiber.iter().map(|(x, _)| x).collect();
        self.deck.iter().skip(1).all(|mu| {
            pts.iter().all(|x| {
                let y = mu.apply(x);
                y != **x && pts.contains(&&y)
            })
        })
    }
}

/// Evidence that a point is not Galois.
#[derive(Clone, Debug)]
pub struct Refutation {
    pub point: ProjPoint,
    pub cover: CoverP1,
    pub wronskian: FactoredForm<BinaryForm>,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub enum GaloisOutcome {
    Certified(Box<GaloisCertificate>),
    Refuted(Box<Refutation>),
}

impl GaloisOutcome {
    pub fn certificate(&self) -> Option<&GaloisCertificate> {
        match self {
            GaloisOutcome::Certified(c) => Some(c),
            GaloisOutcome::Refuted(_) => None,
        }
    }
}

pub fn certify_galois_point(p: &RationalParametrization, point: &ProjPoint) -> Result<GaloisOutcome> {
    let location = match p.curve().multiplicity_at(point) {
        0 => Location::Outer,
        1 => Location::Smooth,
        _ => return Err(Error::SingularPoint(point.to_string())),
    };
    let cover = p.pullback_projection(point)?.cover;
    let refute = |reason: &str| {
        Ok(GaloisOutcome::Refuted(Box::new(Refutation {
            point: point.clone(),
            cover: cover.clone(),
            wronskian: cover.wronskian().squarefree_decompose(),
            reason: reason.to_string(),
        })))
    };
    let group = match cover.degree() {
        3 => {
            if !cover.is_galois_deg3()?.galois {
                return refute("Wronskian is not a constant times the square of a squarefree quadratic");
            }
            GroupKind::Cyclic3
        }
        4 => match cover.is_galois_deg4()?.kind {
            Deg4Kind::Cyclic => GroupKind::Cyclic4,
            Deg4Kind::Klein => GroupKind::Klein,
            Deg4Kind::NotGalois => return refute("ramification fits neither the cyclic nor the Klein group"),
            Deg4Kind::Undetermined => return Err(Error::Unsupported("degree-4 test undetermined".into())),
        },
        d => return Err(Error::Unsupported(format!("projection of degree {d}"))),
    };
    let deck = cover.deck_group()?;
    Ok(GaloisOutcome::Certified(Box::new(GaloisCertificate {
        point: point.clone(),
        location,
        ramification: cover.ramification_profile(),
        cover,
        group,
        deck,
    })))
}

/// Checks of a Cremona map against a Galois certificate.
#[derive(Clone, Debug)]
pub struct LiftReport {
    pub cofactor: Option<MultiPoly<Cyclo>>,
    pub restriction: Option<MobiusMap<Cyclo>>,
    pub in_deck_group: bool,
    /// cover ∘ restriction = cover.
    pub fiber_preserving: bool,
}

impl LiftReport {
    pub fn holds(&self) -> bool {
        self.cofactor.is_some() && self.in_deck_group && self.fiber_preserving
    }
}

pub fn verify_lift(
    sigma: &RationalMapP2,
    p: &RationalParametrization,
    cert: &GaloisCertificate,
) -> Result<LiftReport> {
    let cofactor = sigma.preserves_curve(p.curve());
    if cofactor.is_none() {
        return Ok(LiftReport { cofactor, restriction: None, in_deck_group: false, fiber_preserving: false });
    }
    let mu = sigma.restrict_to_curve(p)?.mobius;
    Ok(LiftReport {
        cofactor,
        in_deck_group: cert.contains(&mu),
        fiber_preserving: cert.cover.invariant_under(&mu),
        restriction: Some(mu),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ResidualVerdict {
    NotGalois,
    /// Every root gives a Galois point, but the roots lie outside ℚ(ζ₁₂).
    GaloisOutsideField,
    Undecided(String),
}

impl fmt::Display for ResidualVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResidualVerdict::NotGalois => f.write_str("not-galois"),
            ResidualVerdict::GaloisOutsideField => f.write_str("galois-outside-field"),
            ResidualVerdict::Undecided(why) => write!(f, "undecided ({why})"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ResidualDecision {
    pub factor: UniPoly<Cyclo>,
    pub verdict: ResidualVerdict,
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    /// Galois points with their parameters, sorted by parameter.
    pub points: Vec<(P1Point, GaloisCertificate)>,
    /// Candidate parameters that failed, with the reason.
    pub discarded: Vec<(P1Point, String)>,
    pub residual: Vec<ResidualDecision>,
    /// gcd of the discriminant conditions, in x0.
    pub condition: UniPoly<Cyclo>,
    /// Chart used for the conditions: W(x, 1 + k·x).
    pub chart: u32,
}

impl Enumeration {
    pub fn delta(&self) -> usize {
        self.points.len()
    }

    pub fn parameters(&self) -> Vec<P1Point> {
        self.points.iter().map(|(u, _)| u.clone()).collect()
    }

    pub fn all_decided(&self) -> bool {
        self.residual.iter().all(|r| !matches!(r.verdict, ResidualVerdict::Undecided(_)))
    }
}

/// The projection from φ(x0 : 1) with x0 symbolic, in the variables
/// (s, t, x0).
struct SymbolicProjection {
    vars: Vars,
    wronskian: MultiPoly<Cyclo>,
    /// First coordinate of φ(x0 : 1); the two lines used degenerate where
    /// it vanishes.
    minor: UniPoly<Cyclo>,
    /// Res_s(p, q): where the specialized pair acquires a common factor.
    coprimality: UniPoly<Cyclo>,
}

impl SymbolicProjection {
    fn new(p: &RationalParametrization) -> Result<Self> {
        let v = vars(&["s", "t", "x0"]);
        let g = MultiPoly::<Cyclo>::gens(&v);
        let one = MultiPoly::one(v.clone());
        let phi = p.components().clone().map(|f| f.poly().embed(v.clone(), &[0, 1]));
        let at_x0 = phi.clone().map(|f| f.compose(&[g[2].clone(), one.clone(), g[2].clone()]).expect("three images"));
        let l1 = at_x0[0].mul(&phi[1]).sub(&at_x0[1].mul(&phi[0]));
        let l2 = at_x0[0].mul(&phi[2]).sub(&at_x0[2].mul(&phi[0]));
        let base = g[0].sub(&g[2].mul(&g[1]));
        let (pp, qq) = match (l1.div_exact(&base), l2.div_exact(&base)) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::VerificationFailed("lines do not pass through φ(x0 : 1)".into())),
        };
        let wronskian = pp.derivative(0).mul(&qq.derivative(1)).sub(&pp.derivative(1).mul(&qq.derivative(0)));
        let minor = at_x0[0].to_univariate(2).expect("polynomial in x0");
        let d = p.degree() as usize - 1;
        let chart = |f: &MultiPoly<Cyclo>| nested(&f.compose(&[g[0].clone(), one.clone(), g[2].clone()]).unwrap());
        let coprimality = resultant_formal(&chart(&pp), d, &chart(&qq), d);
        Ok(SymbolicProjection { vars: v, wronskian, minor, coprimality })
    }

    /// W(1, k) as a polynomial in x0.
    fn top(&self, k: i64) -> UniPoly<Cyclo> {
        let g = MultiPoly::<Cyclo>::gens(&self.vars);
        let one = MultiPoly::one(self.vars.clone());
        let kk = MultiPoly::constant(self.vars.clone(), Cyclo::from_int(k));
        self.wronskian.compose(&[one, kk, g[2].clone()]).unwrap().to_univariate(2).expect("polynomial in x0")
    }

    /// W(x, 1 + k·x) with x as the outer variable, coefficients in x0.
    fn chart(&self, k: i64) -> UniPoly<UniPoly<Cyclo>> {
        let g = MultiPoly::<Cyclo>::gens(&self.vars);
        let one = MultiPoly::one(self.vars.clone());
        let t = one.add(&g[0].scale(&Cyclo::from_int(k)));
        nested(&self.wronskian.compose(&[g[0].clone(), t, g[2].clone()]).unwrap())
    }
}

/// A polynomial in (s, t, x0) free of t, as a polynomial in s over ℚ(ζ₁₂)[x0].
fn nested(f: &MultiPoly<Cyclo>) -> UniPoly<UniPoly<Cyclo>> {
    UniPoly::new(f.coeffs_in(0).iter().map(|c| c.to_univariate(2).expect("free of t")).collect())
}

/// Splits a squarefree modulus m by whether e vanishes at its roots:
/// (part where e = 0, part where e ≠ 0).
fn split(e: &UniPoly<Cyclo>, m: &UniPoly<Cyclo>) -> (Option<UniPoly<Cyclo>>, Option<UniPoly<Cyclo>>) {
    let g = e.rem(m).gcd(m);
    let nontrivial = |f: UniPoly<Cyclo>| (f.degree().unwrap_or(0) > 0).then_some(f);
    let (rest, _) = m.div_rem(&g);
    (nontrivial(g), nontrivial(rest.monic()))
}

fn inverse_mod(a: &UniPoly<Cyclo>, m: &UniPoly<Cyclo>) -> UniPoly<Cyclo> {
    let (g, u, _) = a.ext_gcd(m);
    debug_assert!(g.degree() == Some(0));
    u.rem(m)
}

const FORMAL_DEGREE: usize = 4;
const MAX_CHART: i64 = 6;

impl SymbolicProjection {
    /// Square test for W at the roots of a residual factor, computing in
    /// ℚ(ζ₁₂)[x0]/(m) and splitting m whenever a test value vanishes at
    /// some roots but not others.
    fn decide(&self, m: UniPoly<Cyclo>) -> Vec<ResidualDecision> {
        let mut out = Vec::new();
        let mut rest = Some(m);
        for (e, why) in [(&self.minor, "projection lines degenerate"), (&self.coprimality, "projection degree drops")] {
            let Some(m) = rest.take() else { break };
            let (zero, nonzero) = split(e, &m);
            if let Some(z) = zero {
                out.push(ResidualDecision { factor: z, verdict: ResidualVerdict::Undecided(why.into()) });
            }
            rest = nonzero;
        }
        if let Some(m) = rest {
            self.decide_in_chart(m, 0, &mut out);
        }
        out
    }

    fn decide_in_chart(&self, m: UniPoly<Cyclo>, k: i64, out: &mut Vec<ResidualDecision>) {
        if k > MAX_CHART {
            out.push(ResidualDecision { factor: m, verdict: ResidualVerdict::Undecided("no usable chart".into()) });
            return;
        }
        let (zero, nonzero) = split(&self.top(k), &m);
        if let Some(z) = zero {
            self.decide_in_chart(z, k + 1, out);
        }
        let Some(m) = nonzero else { return };
        // monic w = x⁴ + c3 x³ + c2 x² + c1 x + c0 is (x² + b x + c)² iff
        // b = c3/2, c = (c2 − b²)/2, c1 = 2bc, c0 = c²
        let w = self.chart(k);
        let inv = inverse_mod(&w.coeff(FORMAL_DEGREE), &m);
        let c: Vec<UniPoly<Cyclo>> = (0..FORMAL_DEGREE).map(|i| w.coeff(i).mul(&inv).rem(&m)).collect();
        let half = Cyclo::frac(1, 2);
        let b = c[3].scale(&half);
        let cc = c[2].sub(&b.mul(&b)).scale(&half).rem(&m);
        let conditions = [
            c[1].sub(&b.mul(&cc).scale(&Cyclo::from_int(2))).rem(&m),
            c[0].sub(&cc.mul(&cc)).rem(&m),
        ];
        let mut pending = vec![m];
        for e in &conditions {
            let mut next = Vec::new();
            for piece in pending {
                let (zero, nonzero) = split(e, &piece);
                if let Some(n) = nonzero {
                    out.push(ResidualDecision { factor: n, verdict: ResidualVerdict::NotGalois });
                }
                next.extend(zero);
            }
            pending = next;
        }
        let disc = b.mul(&b).sub(&cc.scale(&Cyclo::from_int(4)));
        for piece in pending {
            let (zero, nonzero) = split(&disc, &piece);
            if let Some(z) = zero {
                out.push(ResidualDecision { factor: z, verdict: ResidualVerdict::NotGalois });
            }
            if let Some(n) = nonzero {
                out.push(ResidualDecision { factor: n, verdict: ResidualVerdict::GaloisOutsideField });
            }
        }
    }
}

/// All smooth Galois points of a parametrized quartic.
///
/// With x0 symbolic, the projection from φ(x0 : 1) has a Wronskian with
/// coefficients in ℚ(ζ₁₂)[x0]; Galois needs a repeated root of W in the
/// chart, so the resultant and first principal subresultant coefficient of
/// W and W′ both vanish. Roots of their gcd, together with the roots of the
/// exceptional polynomials where the specialization is unreliable, are
/// certified one by one; so is the parameter at infinity. Unsplit factors
/// are decided in the quotient ring.
pub fn smooth_galois_enumerate(p: &RationalParametrization) -> Result<Enumeration> {
    let sym = SymbolicProjection::new(p)?;
    let chart = (0..=MAX_CHART)
        .find(|&k| !sym.top(k).is_zero())
        .ok_or_else(|| Error::Degenerate("Wronskian vanishes identically".into()))?;
    let w = sym.chart(chart);
    let dw = w.derivative();
    let res = resultant_formal(&w, FORMAL_DEGREE, &dw, FORMAL_DEGREE - 1);
    let psc1 = subresultant_coeff(&w, FORMAL_DEGREE, &dw, FORMAL_DEGREE - 1, 1);
    let condition = res.gcd(&psc1);
    if condition.is_zero() {
        return Err(Error::Degenerate("discriminant conditions vanish identically".into()));
    }

    let mut candidates: Vec<P1Point> = vec![P1Point::infinity()];
    let mut residual_modulus = UniPoly::constant(Cyclo::one());
    for f in [&condition, &sym.top(chart), &sym.minor, &sym.coprimality] {
        if f.is_zero() || f.is_constant() {
            continue;
        }
        let r = roots_in_field(f);
        candidates.extend(r.roots.iter().map(|(a, _)| P1Point::finite(a.clone())));
        for factor in r.residual.factors {
            let g = residual_modulus.gcd(&factor.poly);
            residual_modulus = residual_modulus.mul(&factor.poly.div_rem(&g).0).monic();
        }
    }
    candidates.sort();
    candidates.dedup();

    let mut points = Vec::new();
    let mut discarded = Vec::new();
    for u in candidates {
        let point = p.eval(&u)?;
        match certify_galois_point(p, &point) {
            Ok(GaloisOutcome::Certified(c)) if c.location == Location::Smooth => points.push((u, *c)),
            Ok(GaloisOutcome::Certified(_)) => discarded.push((u, "not on the curve".into())),
            Ok(GaloisOutcome::Refuted(r)) => discarded.push((u, r.reason)),
            Err(Error::SingularPoint(_)) => discarded.push((u, "singular point".into())),
            Err(e) => discarded.push((u, e.to_string())),
        }
    }
    let residual = if residual_modulus.is_constant() { Vec::new() } else { sym.decide(residual_modulus) };
    Ok(Enumeration { points, discarded, residual, condition, chart: chart as u32 })
}

/// Lines through `point` used by the projection, for reports.
pub fn projection_description(point: &ProjPoint) -> String {
    let [a, b] = projection_lines(point);
    format!("({a} : {b})")
}

impl fmt::Display for GaloisCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} point, cover {}, group {}, ramification {}",
            self.point, self.location, self.cover, self.group, self.ramification
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birational::{cremona_p, sigma1, sigma3};
    use crate::param::{param_a, param_a_prime, param_b};

    fn pt(c: [i64; 3]) -> ProjPoint {
        ProjPoint::from_ints(c)
    }

    fn cert(p: &RationalParametrization, c: [i64; 3]) -> GaloisCertificate {
        certify_galois_point(p, &pt(c)).unwrap().certificate().expect("certified").clone()
    }

    #[test]
    fn certificates() {
        let c = cert(&param_a_prime(), [1, 0, 0]);
        assert_eq!((c.group, c.location), (GroupKind::Cyclic3, Location::Smooth));
        assert_eq!(c.ramification.indices(), vec![3, 3]);
        let c = cert(&param_b(), [1, 0, 0]);
        assert_eq!((c.group, c.location), (GroupKind::Cyclic4, Location::Outer));
        assert_eq!(c.deck.len(), 4);
        for v in [2, 3, 5] {
            assert!(c.acts_freely_on_fiber_of(&P1Point::from_int(v)));
        }
        let out = certify_galois_point(&param_a_prime(), &pt([0, 1, 0])).unwrap();
        assert!(matches!(out, GaloisOutcome::Refuted(_)));
        assert!(matches!(certify_galois_point(&param_b(), &pt([0, 0, 1])), Err(Error::SingularPoint(_))));
    }

    #[test]
    fn lifts() {
        let p = param_a_prime();
        let c = cert(&p, [1, 0, 0]);
        let r = verify_lift(&sigma1(), &p, &c).unwrap();
        assert!(r.holds());
        assert!(r.restriction.unwrap().projectively_eq(c.generator()));
        assert!(!verify_lift(&cremona_p(), &p, &c).unwrap().holds());
        let b = param_b();
        let c = cert(&b, [0, 1, 0]);
        assert!(verify_lift(&sigma3(), &b, &c).unwrap().holds());
    }

    #[test]
    fn enumeration_curve_a() {
        let e = smooth_galois_enumerate(&param_a()).unwrap();
        assert_eq!(e.parameters(), vec![P1Point::finite(Cyclo::frac(-1, 2)), P1Point::from_int(1)]);
        assert_eq!(e.points[0].1.point, pt([8, -16, 3]));
        assert_eq!(e.points[1].1.point, pt([1, 1, 0]));
        assert!(e.residual.is_empty());
        // x0⁵ (x0 − 1)(2x0 + 1)(x0² + x0 + 1), made monic
        let x = UniPoly::<Cyclo>::x();
        let c = |n: i64| UniPoly::constant(Cyclo::from_int(n));
        let expect = x.pow(5).mul(&x.sub(&c(1))).mul(&x.scale(&Cyclo::from_int(2)).add(&c(1))).mul(&x.mul(&x).add(&x).add(&c(1)));
        assert_eq!(e.condition, expect.monic());
    }

    #[test]
    fn enumeration_curve_b() {
        let e = smooth_galois_enumerate(&param_b()).unwrap();
        assert_eq!(e.parameters(), vec![P1Point::from_int(0)]);
        assert_eq!(e.points[0].1.point, pt([0, 1, 0]));
        assert!(e.all_decided());
        assert_eq!(e.residual.len(), 1);
        assert_eq!(e.residual[0].verdict, ResidualVerdict::NotGalois);
        assert_eq!(e.residual[0].factor.display_in("x0"), "x0^2 + 2*x0 + 3");
    }

    #[test]
    fn enumeration_curve_a_prime() {
        let e = smooth_galois_enumerate(&param_a_prime()).unwrap();
        assert_eq!(e.delta(), 2);
        assert!(e.parameters().contains(&P1Point::infinity()));
        assert!(e.all_decided());
    }
}
