use std::fmt;

use crate::error::{Error, Result};
use crate::polykernel::UniPoly;

use super::{Cyclo, Field, Ring};

/// Element of ℚ(ζ₁₂)(y): a reduced fraction with monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: UniPoly<Cyclo>,
    den: UniPoly<Cyclo>,
}

impl RatFun {
    /// Normal form of `num / den`: common factors removed, denominator monic.
    pub fn new(num: UniPoly<Cyclo>, den: UniPoly<Cyclo>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_rem(&g).0;
        let den = den.div_rem(&g).0;
        let lc = den.lc().inv().expect("nonzero leading coefficient");
        Ok(RatFun { num: num.scale(&lc), den: den.scale(&lc) })
    }

    pub fn from_poly(p: UniPoly<Cyclo>) -> Self {
        RatFun { num: p, den: UniPoly::one() }
    }

    pub fn constant(c: Cyclo) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    /// The generator y.
    pub fn y() -> Self {
        Self::from_poly(UniPoly::x())
    }

    pub fn numer(&self) -> &UniPoly<Cyclo> {
        &self.num
    }

    pub fn denom(&self) -> &UniPoly<Cyclo> {
        &self.den
    }

    pub fn as_constant(&self) -> Option<Cyclo> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }
}

impl Ring for RatFun {
    fn zero() -> Self {
        Self::from_poly(UniPoly::zero())
    }
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
    fn from_int(n: i64) -> Self {
        Self::constant(Cyclo::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone()).expect("nonzero");
        }
        Self::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
        .expect("nonzero")
    }
    fn neg(&self) -> Self {
        RatFun { num: self.num.neg(), den: self.den.clone() }
    }
    fn mul(&self, other: &Self) -> Self {
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).expect("nonzero")
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        Field::div(self, other)
    }
}

impl Field for RatFun {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(self.den.clone(), self.num.clone()).ok()
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.num.display_in("y");
        if self.den.is_one() {
            return f.write_str(&n);
        }
        let wrap = |s: String, always: bool| {
            if always || s.contains(' ') || s.contains('/') {
                format!("({s})")
            } else {
                s
            }
        };
        let d = self.den.display_in("y");
        let d_compound = d.contains(' ') || d.contains('*') || d.contains('^');
        write!(f, "{}/{}", wrap(n, false), wrap(d, d_compound))
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun({self})")
    }
}

impl From<Cyclo> for RatFun {
    fn from(c: Cyclo) -> Self {
        Self::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[Cyclo]) -> UniPoly<Cyclo> {
        UniPoly::new(c.to_vec())
    }

    fn ci(n: i64) -> Cyclo {
        Cyclo::from_int(n)
    }

    #[test]
    fn normalization_examples() {
        let y = UniPoly::<Cyclo>::x();
        let r = RatFun::new(y.mul(&y), y.clone()).unwrap();
        assert_eq!(r, RatFun::y());

        let w = Cyclo::omega();
        let r = RatFun::new(y.scale(&w), y.mul(&y)).unwrap();
        assert_eq!(r.numer(), &UniPoly::constant(w.clone()));
        assert_eq!(r.denom(), &y);
        assert_eq!(r.to_string(), "w/y");

        let r = RatFun::new(poly(&[ci(-1), ci(0), ci(1)]), poly(&[ci(-1), ci(1)])).unwrap();
        assert_eq!(r, RatFun::from_poly(poly(&[ci(1), ci(1)])));

        assert!(matches!(
            RatFun::new(y.clone(), UniPoly::zero()),
            Err(Error::ZeroDenominator)
        ));
    }

    #[test]
    fn denominator_is_monic() {
        let y = UniPoly::<Cyclo>::x();
        let r = RatFun::new(UniPoly::one(), y.scale(&ci(3))).unwrap();
        assert!(r.denom().lc().is_one());
        assert_eq!(r.to_string(), "(1/3)/y");
        assert_eq!(r.mul(&RatFun::y()), RatFun::constant(Cyclo::frac(1, 3)));
    }
}
