//! Projective plane geometry over ℚ(ζ₁₂): points, lines, linear maps and
//! plane curves with their singular points, tangents and Hessians.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Field, Ring};
use crate::polykernel::{
    determinant, resultant, roots_in_field, vars, BinaryForm, FactoredForm, MultiPoly, P1Point, UniPoly, Vars,
};

pub fn xyz_vars() -> Vars {
    vars(&["X", "Y", "Z"])
}

pub fn xyz() -> [MultiPoly<Cyclo>; 3] {
    let g = MultiPoly::gens(&xyz_vars());
    [g[0].clone(), g[1].clone(), g[2].clone()]
}

/// Scale a coordinate vector to its canonical representative: the first
/// nonzero entry becomes one.
fn normalize3(c: [Cyclo; 3]) -> Option<[Cyclo; 3]> {
    let lead = c.iter().find(|x| !x.is_zero())?.inv()?;
    Some(c.map(|x| x.mul(&lead)))
}

/// Representative used for display: rational vectors become primitive
/// integer vectors with a positive first nonzero entry.
fn display_scaled(c: &[Cyclo; 3]) -> [Cyclo; 3] {
    if !c.iter().all(Cyclo::is_rational) {
        return c.clone();
    }
    let rs: Vec<BigRational> = c.iter().map(|x| x.as_rational().unwrap().clone()).collect();
    let den = rs.iter().fold(BigInt::one(), |a, r| a.lcm(r.denom()));
    let ints: Vec<BigInt> = rs
        .iter()
        .map(|r| (r * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let mut g = ints.iter().fold(BigInt::zero(), |a, v| a.gcd(v));
    if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        g = -g;
    }
    [0, 1, 2].map(|k| Cyclo::from_rational(BigRational::from_integer(&ints[k] / &g)))
}

fn render3(c: &[Cyclo; 3]) -> [String; 3] {
    display_scaled(c).map(|x| {
        let s = x.to_string();
        if s.contains(' ') {
            format!("({s})")
        } else {
            s
        }
    })
}

/// Point of ℙ², stored with its first nonzero coordinate equal to one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [Cyclo; 3],
}

impl ProjPoint {
    pub fn new(coords: [Cyclo; 3]) -> Result<Self> {
        normalize3(coords)
            .map(|coords| ProjPoint { coords })
            .ok_or_else(|| Error::Degenerate("(0 : 0 : 0) is not a point".into()))
    }

    pub fn from_ints(c: [i64; 3]) -> Self {
        Self::new(c.map(Cyclo::from_int)).expect("nonzero coordinates")
    }

    pub fn coords(&self) -> &[Cyclo; 3] {
        &self.coords
    }

    pub fn is_on(&self, f: &MultiPoly<Cyclo>) -> bool {
        f.eval(&self.coords).is_zero()
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = render3(&self.coords);
        write!(f, "({a} : {b} : {c})")
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ProjPoint{self}")
    }
}

/// Line a X + b Y + c Z = 0, normalized like points.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Line {
    coeffs: [Cyclo; 3],
}

impl Line {
    pub fn new(coeffs: [Cyclo; 3]) -> Result<Self> {
        normalize3(coeffs)
            .map(|coeffs| Line { coeffs })
            .ok_or_else(|| Error::Degenerate("zero linear form".into()))
    }

    pub fn coeffs(&self) -> &[Cyclo; 3] {
        &self.coeffs
    }

    pub fn as_poly(&self) -> MultiPoly<Cyclo> {
        let [x, y, z] = xyz();
        x.scale(&self.coeffs[0])
            .add(&y.scale(&self.coeffs[1]))
            .add(&z.scale(&self.coeffs[2]))
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.coeffs
            .iter()
            .zip(p.coords())
            .fold(Cyclo::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            .is_zero()
    }

    /// Two points spanning the line: with c ≠ 0, (c, 0, −a) and (0, c, −b);
    /// otherwise with b ≠ 0, (b, −a, 0) and (0, 0, 1); otherwise Y and Z.
    pub fn spanning_points(&self) -> ([Cyclo; 3], [Cyclo; 3]) {
        let [a, b, c] = &self.coeffs;
        let z = Cyclo::zero();
        if !c.is_zero() {
            ([c.clone(), z.clone(), a.neg()], [z, c.clone(), b.neg()])
        } else if !b.is_zero() {
            ([b.clone(), a.neg(), z.clone()], [z.clone(), z, Cyclo::one()])
        } else {
            ([z.clone(), Cyclo::one(), z.clone()], [z.clone(), z, Cyclo::one()])
        }
    }

    /// The point u·A + v·B for the spanning points A, B.
    pub fn point_at(&self, u: &P1Point) -> ProjPoint {
        let (a, b) = self.spanning_points();
        let c = [0, 1, 2].map(|k| u.s().mul(&a[k]).add(&u.t().mul(&b[k])));
        ProjPoint::new(c).expect("spanning points are independent")
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = display_scaled(&self.coeffs);
        let p = xyz()
            .iter()
            .zip(&c)
            .fold(MultiPoly::zero(xyz_vars()), |acc, (v, c)| acc.add(&v.scale(c)));
        write!(f, "{p}")
    }
}

impl fmt::Debug for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Line({self})")
    }
}

/// Invertible 3×3 matrix acting on column vectors of coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearMapP2 {
    m: [[Cyclo; 3]; 3],
}

impl LinearMapP2 {
    pub fn new(m: [[Cyclo; 3]; 3]) -> Result<Self> {
        let t = LinearMapP2 { m };
        if t.det().is_zero() {
            return Err(Error::Degenerate("singular matrix".into()));
        }
        Ok(t)
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Result<Self> {
        Self::new(m.map(|r| r.map(Cyclo::from_int)))
    }

    pub fn identity() -> Self {
        Self::diag([Cyclo::one(), Cyclo::one(), Cyclo::one()])
    }

    pub fn diag(d: [Cyclo; 3]) -> Self {
        let z = Cyclo::zero();
        let [a, b, c] = d;
        LinearMapP2 { m: [[a, z.clone(), z.clone()], [z.clone(), b, z.clone()], [z.clone(), z, c]] }
    }

    pub fn matrix(&self) -> &[[Cyclo; 3]; 3] {
        &self.m
    }

    pub fn det(&self) -> Cyclo {
        determinant(&self.m.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let c = self.m.clone().map(|row| {
            row.iter()
                .zip(p.coords())
                .fold(Cyclo::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
        });
        ProjPoint::new(c).expect("invertible matrix")
    }

    /// Matrix product self · other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let m = [0, 1, 2].map(|i| {
            [0, 1, 2].map(|j| {
                (0..3).fold(Cyclo::zero(), |acc, k| acc.add(&self.m[i][k].mul(&other.m[k][j])))
            })
        });
        LinearMapP2 { m }
    }

    pub fn inverse(&self) -> Self {
        let d = self.det().inv().expect("invertible");
        let m = &self.m;
        let cof = |i: usize, j: usize| {
            let (r0, r1) = ((i + 1) % 3, (i + 2) % 3);
            let (c0, c1) = ((j + 1) % 3, (j + 2) % 3);
            m[r0][c0].mul(&m[r1][c1]).sub(&m[r0][c1].mul(&m[r1][c0]))
        };
        // inverse = adjugate / det; adj[i][j] = cofactor(j, i)
        let inv = [0, 1, 2].map(|i| [0, 1, 2].map(|j| cof(j, i).mul(&d)));
        LinearMapP2 { m: inv }
    }

    /// The linear forms (row_i · (X, Y, Z)) used to substitute into curves.
    pub fn as_forms(&self) -> [MultiPoly<Cyclo>; 3] {
        let v = xyz();
        self.m.clone().map(|row| {
            row.iter()
                .zip(&v)
                .fold(MultiPoly::zero(xyz_vars()), |acc, (c, x)| acc.add(&x.scale(c)))
        })
    }

    /// Equality up to a nonzero scalar.
    pub fn projectively_eq(&self, other: &Self) -> bool {
        let a: Vec<&Cyclo> = self.m.iter().flatten().collect();
        let b: Vec<&Cyclo> = other.m.iter().flatten().collect();
        let k = a.iter().position(|x| !x.is_zero()).expect("nonzero matrix");
        if b[k].is_zero() {
            return false;
        }
        let c = b[k].div(a[k]).unwrap();
        a.iter().zip(&b).all(|(x, y)| x.mul(&c) == **y)
    }
}

impl fmt::Display for LinearMapP2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// Plane curve given by a nonzero homogeneous polynomial in X, Y, Z.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlaneCurve {
    f: MultiPoly<Cyclo>,
    degree: u32,
}

#[derive(Clone, Debug)]
pub struct LineIntersection {
    pub points: Vec<(ProjPoint, usize)>,
    pub residual: FactoredForm<BinaryForm>,
}

impl LineIntersection {
    pub fn total(&self) -> usize {
        self.points.iter().map(|(_, m)| m).sum::<usize>() + self.residual.total_degree()
    }

    pub fn multiplicity_of(&self, p: &ProjPoint) -> usize {
        self.points.iter().find(|(q, _)| q == p).map(|(_, m)| *m).unwrap_or(0)
    }
}

impl PlaneCurve {
    pub fn new(f: MultiPoly<Cyclo>) -> Result<Self> {
        if f.vars().as_ref() != xyz_vars().as_ref() {
            return Err(Error::VariableMismatch("plane curves use X, Y, Z".into()));
        }
        if f.is_zero() || !f.is_homogeneous() {
            return Err(Error::NotHomogeneous(f.to_string()));
        }
        let degree = f.total_degree().unwrap();
        Ok(PlaneCurve { f, degree })
    }

    pub fn defining(&self) -> &MultiPoly<Cyclo> {
        &self.f
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        p.is_on(&self.f)
    }

    pub fn gradient(&self) -> [MultiPoly<Cyclo>; 3] {
        [0, 1, 2].map(|k| self.f.derivative(k))
    }

    pub fn gradient_at(&self, p: &ProjPoint) -> [Cyclo; 3] {
        self.gradient().map(|g| g.eval(p.coords()))
    }

    /// Lowest degree of the local equation at `p`; zero off the curve.
    pub fn multiplicity_at(&self, p: &ProjPoint) -> u32 {
        if !self.contains(p) {
            return 0;
        }
        let c = p.coords();
        let k = (0..3).rev().find(|&k| !c[k].is_zero()).expect("nonzero point");
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        // columns e_a, e_b, P send (0:0:1) to P
        let v = xyz();
        let images = [0, 1, 2].map(|row| {
            let mut e = MultiPoly::zero(xyz_vars());
            if row == others[0] {
                e = e.add(&v[0]);
            }
            if row == others[1] {
                e = e.add(&v[1]);
            }
            e.add(&v[2].scale(&c[row]))
        });
        let moved = self.f.compose(&images).expect("three images");
        let local = moved.specialize(2, &Cyclo::one());
        local.min_total_degree().unwrap_or(0)
    }

    pub fn tangent_line_at(&self, p: &ProjPoint) -> Result<Line> {
        match self.multiplicity_at(p) {
            0 => Err(Error::NotOnCurve(p.to_string())),
            1 => Line::new(self.gradient_at(p)),
            _ => Err(Error::SingularPoint(p.to_string())),
        }
    }

    /// Restriction of the defining form to a line, as a binary form in the
    /// parameters (u : v) of u·A + v·B.
    pub fn restrict_to_line(&self, line: &Line) -> BinaryForm {
        let (a, b) = line.spanning_points();
        let g = MultiPoly::gens(&vars(&["s", "t"]));
        let images = [0, 1, 2].map(|k| g[0].scale(&a[k]).add(&g[1].scale(&b[k])));
        let r = self.f.compose(&images).expect("three images");
        BinaryForm::new(r, self.degree).expect("homogeneous restriction")
    }

    pub fn line_multiplicities(&self, line: &Line) -> Result<LineIntersection> {
        let r = self.restrict_to_line(line);
        if r.is_zero() {
            return Err(Error::LineComponent);
        }
        let (roots, residual) = r.roots();
        let mut points: Vec<(ProjPoint, usize)> =
            roots.iter().map(|(u, m)| (line.point_at(u), *m)).collect();
        points.sort();
        Ok(LineIntersection { points, residual })
    }

    /// det of the matrix of second partials; degree 3(d − 2).
    pub fn hessian(&self) -> MultiPoly<Cyclo> {
        let g = self.gradient();
        let h: Vec<Vec<MultiPoly<Cyclo>>> =
            (0..3).map(|i| (0..3).map(|j| g[i].derivative(j)).collect()).collect();
        let t = |i: usize, j: usize, k: usize| h[0][i].mul(&h[1][j]).mul(&h[2][k]);
        t(0, 1, 2)
            .add(&t(1, 2, 0))
            .add(&t(2, 0, 1))
            .sub(&t(2, 1, 0))
            .sub(&t(0, 2, 1))
            .sub(&t(1, 0, 2))
    }

    /// F ∘ T: the curve T⁻¹(C).
    pub fn pullback(&self, t: &LinearMapP2) -> PlaneCurve {
        let f = self.f.compose(&t.as_forms()).expect("three images");
        PlaneCurve::new(f).expect("invertible substitution")
    }

    /// The image T(C), defined by F ∘ T⁻¹.
    pub fn transform(&self, t: &LinearMapP2) -> PlaneCurve {
        self.pullback(&t.inverse())
    }

    /// Some(c) when F ∘ T = c·F.
    pub fn fixed_by(&self, t: &LinearMapP2) -> Option<Cyclo> {
        self.pullback(t).f.proportional_to(&self.f)
    }

    /// Whether another curve has the same zero set up to scaling of the
    /// equation.
    pub fn same_curve(&self, other: &PlaneCurve) -> Option<Cyclo> {
        other.f.proportional_to(&self.f)
    }

    /// All singular points, from resultants of the partial derivatives on the
    /// chart Z = 1 plus the line Z = 0.
    pub fn singular_points(&self) -> Result<Vec<(ProjPoint, u32)>> {
        let grad = self.gradient();
        let mut found: Vec<ProjPoint> = Vec::new();

        // affine chart: bivariate polynomials in x, y as UniPoly<UniPoly>
        let to_biv = |p: &MultiPoly<Cyclo>| -> UniPoly<UniPoly<Cyclo>> {
            let a = p.specialize(2, &Cyclo::one());
            let ycoeffs = a.coeffs_in(1);
            UniPoly::new(
                ycoeffs
                    .iter()
                    .map(|c| c.to_univariate(0).expect("only x remains"))
                    .collect(),
            )
        };
        let parts: Vec<UniPoly<UniPoly<Cyclo>>> = grad.iter().map(to_biv).collect();
        let xcond = {
            let nonconst: Vec<&UniPoly<UniPoly<Cyclo>>> =
                parts.iter().filter(|p| p.degree().unwrap_or(0) > 0).collect();
            let free: Vec<UniPoly<Cyclo>> = parts
                .iter()
                .filter(|p| p.degree().unwrap_or(0) == 0)
                .map(|p| p.coeff(0))
                .collect();
            let mut g = UniPoly::<Cyclo>::zero();
            for f in &free {
                g = g.gcd(f);
            }
            for i in 0..nonconst.len() {
                for j in i + 1..nonconst.len() {
                    g = g.gcd(&resultant(nonconst[i], nonconst[j]));
                }
            }
            g
        };
        if xcond.is_zero() {
            return Err(Error::Unsupported("singular locus is not finite on Z = 1".into()));
        }
        if xcond.degree().unwrap_or(0) > 0 {
            let xr = roots_in_field(&xcond);
            if xr.residual_degree() > 0 {
                return Err(Error::ResidualFactor { degree: xr.residual_degree() });
            }
            for (x0, _) in &xr.roots {
                let ys = parts
                    .iter()
                    .map(|p| p.map(|c| c.eval(x0)))
                    .fold(UniPoly::<Cyclo>::zero(), |acc, p| acc.gcd(&p));
                if ys.is_zero() {
                    return Err(Error::Unsupported("singular line component".into()));
                }
                if ys.degree().unwrap_or(0) == 0 {
                    continue;
                }
                let yr = roots_in_field(&ys);
                if yr.residual_degree() > 0 {
                    return Err(Error::ResidualFactor { degree: yr.residual_degree() });
                }
                for (y0, _) in yr.roots {
                    found.push(ProjPoint::new([x0.clone(), y0, Cyclo::one()])?);
                }
            }
        }
        // line Z = 0
        let at_infinity: Vec<BinaryForm> = grad
            .iter()
            .map(|g| {
                let r = g.specialize(2, &Cyclo::zero());
                let d = r.total_degree().unwrap_or(0);
                BinaryForm::new(r.embed(vars(&["s", "t"]), &[0, 1, 1]), d)
                    .expect("homogeneous")
            })
            .collect();
        let common = at_infinity
            .iter()
            .fold(BinaryForm::zero(0), |acc, f| if acc.is_zero() { f.clone() } else { acc.gcd(f) });
        if common.is_zero() {
            return Err(Error::Unsupported("singular along Z = 0".into()));
        }
        if common.degree() > 0 {
            let (roots, rest) = common.roots();
            if !rest.factors.is_empty() {
                return Err(Error::ResidualFactor { degree: rest.total_degree() });
            }
            for (u, _) in roots {
                found.push(ProjPoint::new([u.s().clone(), u.t().clone(), Cyclo::zero()])?);
            }
        }
        found.sort();
        found.dedup();
        Ok(found
            .into_iter()
            .filter(|p| self.contains(p))
            .map(|p| {
                let m = self.multiplicity_at(&p);
                (p, m)
            })
            .collect())
    }
}

impl fmt::Display for PlaneCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.f)
    }
}

/// X⁴ − X³Y + Y³Z.
pub fn curve_a() -> PlaneCurve {
    let [x, y, z] = xyz();
    PlaneCurve::new(x.pow(4).sub(&x.pow(3).mul(&y)).add(&y.pow(3).mul(&z))).unwrap()
}

/// (X + Y)³Z − X³Y.
pub fn curve_a_prime() -> PlaneCurve {
    let [x, y, z] = xyz();
    PlaneCurve::new(x.add(&y).pow(3).mul(&z).sub(&x.pow(3).mul(&y))).unwrap()
}

/// X⁴ − Y³Z.
pub fn curve_b() -> PlaneCurve {
    let [x, y, z] = xyz();
    PlaneCurve::new(x.pow(4).sub(&y.pow(3).mul(&z))).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }

    #[test]
    fn multiplicities_on_curve_a() {
        let c = curve_a();
        assert_eq!(c.multiplicity_at(&ProjPoint::from_ints([0, 0, 1])), 3);
        assert_eq!(c.multiplicity_at(&ProjPoint::from_ints([1, 1, 0])), 1);
        assert_eq!(c.multiplicity_at(&ProjPoint::from_ints([1, 0, 0])), 0);
    }

    #[test]
    fn tangent_lines() {
        let a = curve_a();
        let z = Line::new([ci(0), ci(0), ci(1)]).unwrap();
        assert_eq!(a.tangent_line_at(&ProjPoint::from_ints([0, 1, 0])).unwrap(), z);
        assert_eq!(curve_b().tangent_line_at(&ProjPoint::from_ints([0, 1, 0])).unwrap(), z);
        let t = a.tangent_line_at(&ProjPoint::from_ints([8, 16, 1])).unwrap();
        assert_eq!(t, Line::new([ci(-4), ci(1), ci(16)]).unwrap());
        assert_eq!(t.to_string(), "4*X - Y - 16*Z");
        assert!(a.tangent_line_at(&ProjPoint::from_ints([0, 0, 1])).is_err());
        assert!(a.tangent_line_at(&ProjPoint::from_ints([1, 0, 0])).is_err());
    }

    #[test]
    fn line_intersections() {
        let z = Line::new([ci(0), ci(0), ci(1)]).unwrap();
        let b = curve_b().line_multiplicities(&z).unwrap();
        assert_eq!(b.points, vec![(ProjPoint::from_ints([0, 1, 0]), 4)]);

        let a = curve_a().line_multiplicities(&z).unwrap();
        assert_eq!(a.multiplicity_of(&ProjPoint::from_ints([0, 1, 0])), 3);
        assert_eq!(a.multiplicity_of(&ProjPoint::from_ints([1, 1, 0])), 1);

        let t = Line::new([ci(-4), ci(1), ci(16)]).unwrap();
        let r = curve_a().line_multiplicities(&t).unwrap();
        assert_eq!(r.multiplicity_of(&ProjPoint::from_ints([8, 16, 1])), 3);
        assert_eq!(r.multiplicity_of(&ProjPoint::from_ints([8, -16, 3])), 1);
        assert_eq!(r.total(), 4);
    }

    #[test]
    fn hessian_degrees() {
        let [x, y, z] = xyz();
        let conic = PlaneCurve::new(x.mul(&z).sub(&y.pow(2))).unwrap();
        assert!(conic.hessian().is_constant());
        let h = curve_a().hessian();
        assert_eq!(h.total_degree(), Some(6));
        // frozen: −54·X·Y⁴·(2X − Y)
        let expect = x.mul(&y.pow(4)).mul(&x.scale(&ci(2)).sub(&y)).scale(&ci(-54));
        assert_eq!(h, expect);
        let hb = curve_b().hessian();
        assert_eq!(hb, x.pow(2).mul(&y.pow(4)).scale(&ci(-108)));
        assert!(ProjPoint::from_ints([0, 1, 0]).is_on(&hb));
    }

    #[test]
    fn fixed_curves() {
        let w = Cyclo::omega();
        let s3 = LinearMapP2::diag([w.clone(), ci(1), w.clone()]);
        assert_eq!(curve_b().fixed_by(&s3), Some(w));
        assert_eq!(curve_a().fixed_by(&LinearMapP2::identity()), Some(ci(1)));
        let a_corr = LinearMapP2::from_ints([[16, -8, 0], [0, -16, 0], [4, -1, -16]]).unwrap();
        assert_eq!(curve_a().fixed_by(&a_corr), Some(ci(65536)));
        let a_printed = LinearMapP2::from_ints([[16, -8, 0], [0, -16, 0], [4, -1, 16]]).unwrap();
        assert_eq!(curve_a().fixed_by(&a_printed), None);
    }

    #[test]
    fn singular_locus_is_the_cusp() {
        for c in [curve_a(), curve_b(), curve_a_prime()] {
            assert_eq!(c.singular_points().unwrap(), vec![(ProjPoint::from_ints([0, 0, 1]), 3)]);
        }
    }

    #[test]
    fn point_display_is_primitive() {
        let p = ProjPoint::new([ci(8), ci(-16), ci(3)]).unwrap();
        assert_eq!(p.to_string(), "(8 : -16 : 3)");
        let q = ProjPoint::new([ci(0), ci(0), ci(-1)]).unwrap();
        assert_eq!(q.to_string(), "(0 : 0 : 1)");
        let r = ProjPoint::new([ci(1), Cyclo::omega(), ci(0)]).unwrap();
        assert_eq!(r.to_string(), "(1 : w : 0)");
    }

    #[test]
    fn inverse_and_transform() {
        let a = LinearMapP2::from_ints([[16, -8, 0], [0, -16, 0], [4, -1, -16]]).unwrap();
        assert!(a.compose(&a.inverse()).projectively_eq(&LinearMapP2::identity()));
        assert_eq!(a.apply(&ProjPoint::from_ints([1, 1, 0])), ProjPoint::from_ints([8, -16, 3]));
        let c = curve_a();
        assert!(c.transform(&a).same_curve(&c).is_some());
    }
}
