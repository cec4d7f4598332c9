use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Field, Ring};

use super::{roots_in_field, vars, Factor, FactoredForm, MultiPoly, UniPoly, Vars};

pub(crate) fn st_vars() -> Vars {
    vars(&["s", "t"])
}

/// A point (s : t) of ℙ¹, normalized to (x : 1) or (1 : 0).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct P1Point {
    s: Cyclo,
    t: Cyclo,
}

impl P1Point {
    pub fn new(s: Cyclo, t: Cyclo) -> Result<Self> {
        if t.is_zero() {
            if s.is_zero() {
                return Err(Error::Degenerate("(0 : 0) is not a point".into()));
            }
            return Ok(Self::infinity());
        }
        Ok(P1Point { s: s.div(&t).expect("t nonzero"), t: Cyclo::one() })
    }

    pub fn finite(x: Cyclo) -> Self {
        P1Point { s: x, t: Cyclo::one() }
    }

    pub fn from_int(x: i64) -> Self {
        Self::finite(Cyclo::from_int(x))
    }

    pub fn infinity() -> Self {
        P1Point { s: Cyclo::one(), t: Cyclo::zero() }
    }

    pub fn s(&self) -> &Cyclo {
        &self.s
    }

    pub fn t(&self) -> &Cyclo {
        &self.t
    }

    pub fn is_infinity(&self) -> bool {
        self.t.is_zero()
    }

    /// The affine coordinate s/t, if finite.
    pub fn affine(&self) -> Option<&Cyclo> {
        (!self.is_infinity()).then_some(&self.s)
    }

    /// The linear form vanishing here: t0 s − s0 t.
    pub fn linear_form(&self) -> BinaryForm {
        let g = MultiPoly::gens(&st_vars());
        BinaryForm::from_poly_unchecked(g[0].scale(&self.t).sub(&g[1].scale(&self.s)), 1)
    }
}

impl Ord for P1Point {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => self.s.cmp(&other.s),
        }
    }
}

impl PartialOrd for P1Point {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.s, self.t)
    }
}

impl fmt::Debug for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P1{self}")
    }
}

/// Homogeneous form in (s, t) of a recorded degree. The zero form keeps its
/// recorded degree so that covers and Wronskians have well-defined degrees.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryForm {
    poly: MultiPoly<Cyclo>,
    degree: u32,
}

impl BinaryForm {
    pub fn new(poly: MultiPoly<Cyclo>, degree: u32) -> Result<Self> {
        if poly.nvars() != 2 {
            return Err(Error::VariableMismatch(format!(
                "binary form needs two variables, got {}",
                poly.nvars()
            )));
        }
        if !poly.is_homogeneous() || poly.total_degree().is_some_and(|d| d != degree) {
            return Err(Error::NotHomogeneous(poly.to_string()));
        }
        let poly = if poly.vars().as_ref() == st_vars().as_ref() {
            poly
        } else {
            poly.embed(st_vars(), &[0, 1])
        };
        Ok(BinaryForm { poly, degree })
    }

    /// Degree read off the polynomial (zero gets degree 0).
    pub fn from_poly(poly: MultiPoly<Cyclo>) -> Result<Self> {
        let d = poly.total_degree().unwrap_or(0);
        Self::new(poly, d)
    }

    pub(crate) fn from_poly_unchecked(poly: MultiPoly<Cyclo>, degree: u32) -> Self {
        debug_assert!(poly.is_homogeneous());
        BinaryForm { poly, degree }
    }

    pub fn zero(degree: u32) -> Self {
        BinaryForm { poly: MultiPoly::zero(st_vars()), degree }
    }

    pub fn constant(c: Cyclo) -> Self {
        BinaryForm { poly: MultiPoly::constant(st_vars(), c), degree: 0 }
    }

    pub fn one() -> Self {
        Self::constant(Cyclo::one())
    }

    pub fn s() -> Self {
        BinaryForm { poly: MultiPoly::var(st_vars(), 0), degree: 1 }
    }

    pub fn t() -> Self {
        BinaryForm { poly: MultiPoly::var(st_vars(), 1), degree: 1 }
    }

    /// Σ c_k s^k t^{d−k}.
    pub fn from_coeffs(coeffs: &[Cyclo], degree: u32) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| (vec![k as u32, degree - k as u32], c.clone()));
        BinaryForm { poly: MultiPoly::from_terms(st_vars(), terms), degree }
    }

    pub fn poly(&self) -> &MultiPoly<Cyclo> {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Coefficient of s^k t^{d−k}.
    pub fn coeff(&self, k: u32) -> Cyclo {
        if k > self.degree {
            return Cyclo::zero();
        }
        self.poly.coeff(&[k, self.degree - k])
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_degree(other);
        BinaryForm { poly: self.poly.add(&other.poly), degree: self.degree }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_degree(other);
        BinaryForm { poly: self.poly.sub(&other.poly), degree: self.degree }
    }

    fn same_degree(&self, other: &Self) {
        assert!(
            self.degree == other.degree || self.is_zero() || other.is_zero(),
            "adding forms of degrees {} and {}",
            self.degree,
            other.degree
        );
    }

    pub fn neg(&self) -> Self {
        BinaryForm { poly: self.poly.neg(), degree: self.degree }
    }

    pub fn mul(&self, other: &Self) -> Self {
        BinaryForm { poly: self.poly.mul(&other.poly), degree: self.degree + other.degree }
    }

    pub fn scale(&self, c: &Cyclo) -> Self {
        BinaryForm { poly: self.poly.scale(c), degree: self.degree }
    }

    pub fn pow(&self, e: u32) -> Self {
        BinaryForm { poly: self.poly.pow(e), degree: self.degree * e }
    }

    pub fn ds(&self) -> Self {
        BinaryForm { poly: self.poly.derivative(0), degree: self.degree.saturating_sub(1) }
    }

    pub fn dt(&self) -> Self {
        BinaryForm { poly: self.poly.derivative(1), degree: self.degree.saturating_sub(1) }
    }

    pub fn eval(&self, s: &Cyclo, t: &Cyclo) -> Cyclo {
        self.poly.eval(&[s.clone(), t.clone()])
    }

    pub fn eval_at(&self, p: &P1Point) -> Cyclo {
        self.eval(p.s(), p.t())
    }

    /// f(x, 1) as a polynomial in x.
    pub fn dehomogenize(&self) -> UniPoly<Cyclo> {
        UniPoly::new((0..=self.degree).map(|k| self.coeff(k)).collect())
    }

    /// t^d u(s/t).
    pub fn homogenize(u: &UniPoly<Cyclo>, degree: u32) -> Self {
        assert!(u.degree().unwrap_or(0) as u32 <= degree);
        Self::from_coeffs(u.coeffs(), degree)
    }

    /// Multiplicity of the root (1 : 0).
    pub fn multiplicity_at_infinity(&self) -> u32 {
        match self.dehomogenize().degree() {
            None => self.degree,
            Some(k) => self.degree - k as u32,
        }
    }

    /// f(a s + b t, c s + d t) for the matrix rows [a, b / c, d].
    pub fn substitute_linear(&self, m: &[[Cyclo; 2]; 2]) -> Self {
        let g = MultiPoly::gens(&st_vars());
        let img = [
            g[0].scale(&m[0][0]).add(&g[1].scale(&m[0][1])),
            g[0].scale(&m[1][0]).add(&g[1].scale(&m[1][1])),
        ];
        BinaryForm { poly: self.poly.compose(&img).expect("two images"), degree: self.degree }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let g = self.poly.gcd(&other.poly);
        let d = g.total_degree().unwrap_or(0);
        BinaryForm { poly: g, degree: d }
    }

    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let q = self.poly.div_exact(&other.poly)?;
        Some(BinaryForm { poly: q, degree: self.degree.checked_sub(other.degree)? })
    }

    /// Some(c) when self = c·other.
    pub fn proportional_to(&self, other: &Self) -> Option<Cyclo> {
        self.poly.proportional_to(&other.poly)
    }

    /// Scale so the coefficient of highest power of s is one.
    pub fn monic(&self) -> Self {
        BinaryForm { poly: self.poly.monic(), degree: self.degree }
    }

    /// Roots in ℙ¹ over ℚ(ζ₁₂) with multiplicities, sorted, and the factored
    /// unsplit remainder (homogenized).
    pub fn roots(&self) -> (Vec<(P1Point, usize)>, FactoredForm<BinaryForm>) {
        assert!(!self.is_zero(), "roots of the zero form");
        let u = self.dehomogenize();
        let fr = roots_in_field(&u);
        let mut out: Vec<(P1Point, usize)> = fr
            .roots
            .iter()
            .map(|(r, m)| (P1Point::finite(r.clone()), *m))
            .collect();
        let inf = self.multiplicity_at_infinity();
        if inf > 0 {
            out.push((P1Point::infinity(), inf as usize));
        }
        let residual = FactoredForm {
            unit: fr.residual.unit.clone(),
            factors: fr
                .residual
                .factors
                .iter()
                .map(|f| Factor {
                    poly: Self::homogenize(&f.poly, f.poly.degree().unwrap_or(0) as u32),
                    multiplicity: f.multiplicity,
                    linear: false,
                })
                .collect(),
        };
        (out, residual)
    }

    /// Squarefree decomposition `unit * ∏ f_i^i` with monic, pairwise
    /// coprime, squarefree f_i. A factor is marked linear when it splits
    /// completely into linear forms over ℚ(ζ₁₂).
    pub fn squarefree_decompose(&self) -> FactoredForm<BinaryForm> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let u = self.dehomogenize();
        let (unit, parts) = u.squarefree_decomposition();
        let mut factors: Vec<Factor<BinaryForm>> = parts
            .into_iter()
            .map(|(f, m)| Factor {
                poly: Self::homogenize(&f, f.degree().unwrap_or(0) as u32),
                multiplicity: m,
                linear: false,
            })
            .collect();
        let k = self.multiplicity_at_infinity() as usize;
        if k > 0 {
            match factors.iter_mut().find(|f| f.multiplicity == k) {
                Some(f) => f.poly = f.poly.mul(&Self::t()),
                None => {
                    factors.push(Factor { poly: Self::t(), multiplicity: k, linear: true });
                    factors.sort_by_key(|f| f.multiplicity);
                }
            }
        }
        for f in &mut factors {
            let (roots, rest) = f.poly.roots();
            f.linear = rest.factors.is_empty() && roots.iter().all(|(_, m)| *m == 1);
        }
        FactoredForm { unit, factors }
    }
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryForm[{}]({})", self.degree, self.poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ci(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }

    #[test]
    fn wronskian_squares_decompose() {
        let s = BinaryForm::s();
        let t = BinaryForm::t();
        let w = s.pow(2).mul(&t.pow(2)).scale(&ci(9));
        let d = w.squarefree_decompose();
        assert_eq!(d.unit, ci(9));
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].poly, s.mul(&t));
        assert_eq!(d.factors[0].multiplicity, 2);
        assert_eq!(d.expand(), w);

        let w = s.pow(3).mul(&t.pow(3)).scale(&ci(-16));
        let d = w.squarefree_decompose();
        assert_eq!((d.unit.clone(), d.factors[0].multiplicity), (ci(-16), 3));
        assert_eq!(d.to_string(), "-16*(s*t)^3");
    }

    #[test]
    fn squarefree_input_is_kept() {
        let s = BinaryForm::s();
        let t = BinaryForm::t();
        let f = s.mul(&s.add(&t));
        let d = f.squarefree_decompose();
        assert_eq!(d.factors.len(), 1);
        assert_eq!(d.factors[0].multiplicity, 1);
        assert_eq!(d.expand(), f);
    }

    #[test]
    fn roots_include_infinity() {
        let s = BinaryForm::s();
        let t = BinaryForm::t();
        let f = s.pow(2).mul(&t).mul(&s.sub(&t.scale(&ci(2))));
        let (roots, rest) = f.roots();
        assert!(rest.factors.is_empty());
        assert_eq!(
            roots,
            vec![(P1Point::from_int(0), 2), (P1Point::from_int(2), 1), (P1Point::infinity(), 1)]
        );
    }

    #[test]
    fn p1_normalization() {
        let p = P1Point::new(ci(2), ci(4)).unwrap();
        assert_eq!(p, P1Point::finite(Cyclo::frac(1, 2)));
        assert_eq!(P1Point::new(ci(3), ci(0)).unwrap(), P1Point::infinity());
        assert!(P1Point::new(ci(0), ci(0)).is_err());
        assert_eq!(P1Point::infinity().to_string(), "(1 : 0)");
    }
}
