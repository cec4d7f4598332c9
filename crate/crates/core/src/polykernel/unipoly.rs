use std::fmt;

use crate::exactnum::{Field, Ring};

/// Dense univariate polynomial, coefficients stored from degree 0 upward.
/// The coefficient vector never ends in a zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> UniPoly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The monomial c * x^k.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// x - r
    pub fn linear_root(r: &R) -> Self {
        Self::new(vec![r.neg(), R::one()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn lc(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> UniPoly<S> {
        UniPoly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc.mul(x).add(c))
    }

    /// Evaluate at a point of an extension ring, given the coefficient embedding.
    pub fn eval_with<S: Ring>(&self, x: &S, embed: impl Fn(&R) -> S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc.mul(x).add(&embed(c)))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_int(k as i64))
                .collect(),
        )
    }

    /// self(other(x))
    pub fn compose(&self, other: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc.mul(other).add(&Self::constant(c.clone())))
    }

    /// Multiplicity of 0 as a root (0 for the zero polynomial).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Shift down by x^k; the caller guarantees divisibility.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// x^n p(1/x) where n = deg p.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed without division.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero");
        let lb = b.lc();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lc();
            let shifted = b.mul_monomial(&lr, dr - db);
            r = r.scale(&lb).sub(&shifted);
        }
        r
    }

    fn mul_monomial(&self, c: &R, k: usize) -> Self {
        let mut v = vec![R::zero(); k];
        v.extend(self.coeffs.iter().map(|a| a.mul(c)));
        Self::new(v)
    }
}

impl<F: Field> UniPoly<F> {
    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division; panics on division by zero.
    pub fn div_rem(&self, b: &Self) -> (Self, Self) {
        let db = b.degree().expect("division by zero polynomial");
        let inv_lb = b.lc().inv().expect("nonzero leading coefficient");
        let mut r = self.clone();
        let mut q = vec![F::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.lc().mul(&inv_lb);
            r = r.sub(&b.mul_monomial(&c, dr - db));
            q[dr - db] = c;
        }
        (Self::new(q), r)
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.div_rem(b).1
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.monic(), other.monic());
        while !b.is_zero() {
            let r = a.rem(&b).monic();
            a = b;
            b = r;
        }
        a
    }

    /// (g, u, v) with u*self + v*other = g, g monic.
    pub fn ext_gcd(&self, other: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = r0.lc().inv().expect("nonzero");
        (r0.scale(&c), s0.scale(&c), t0.scale(&c))
    }

    /// Yun's algorithm. Returns the unit (leading coefficient) and monic
    /// pairwise coprime squarefree factors f_i with multiplicity i, skipping
    /// trivial factors.
    pub fn squarefree_decomposition(&self) -> (F, Vec<(Self, usize)>) {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        let unit = self.lc();
        let f = self.monic();
        let mut out = Vec::new();
        if f.degree() == Some(0) {
            return (unit, out);
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            if b.degree() == Some(0) {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        (unit, out)
    }

    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl<R: Ring> Ring for UniPoly<R> {
    fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_int(n: i64) -> Self {
        Self::constant(R::from_int(n))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&other.coeff(k))).collect())
    }
    fn neg(&self) -> Self {
        UniPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&other.coeff(k))).collect())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                v[i + j] = v[i + j].add(&a.mul(b));
            }
        }
        Self::new(v)
    }
    /// Exact long division over the coefficient ring.
    fn div_exact(&self, other: &Self) -> Option<Self> {
        let db = other.degree()?;
        let lb = other.lc();
        let mut r = self.clone();
        let mut q = vec![R::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lc().div_exact(&lb)?;
            r = r.sub(&other.mul_monomial(&c, dr - db));
            q[dr - db] = c;
        }
        Some(Self::new(q))
    }
}

impl<R: Ring> UniPoly<R> {
    /// Render with the given variable name.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            super::multipoly::push_term(&mut out, c, &mono);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("x"))
    }
}

impl<R: Ring> fmt::Debug for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::q;
    use num_rational::BigRational;

    fn p(c: &[i64]) -> UniPoly<BigRational> {
        UniPoly::new(c.iter().map(|&v| BigRational::from_int(v)).collect())
    }

    #[test]
    fn euclid_and_gcd() {
        // (x^2 - 1) / (x - 1) = x + 1
        let (qt, r) = p(&[-1, 0, 1]).div_rem(&p(&[-1, 1]));
        assert_eq!(qt, p(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(p(&[-1, 0, 1]).gcd(&p(&[1, 2, 1])), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 3]).gcd(&UniPoly::zero()), p(&[0, 0, 1]));
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = p(&[1, 0, 1]);
        let b = p(&[-1, 1, 2]);
        let (g, u, v) = a.ext_gcd(&b);
        assert_eq!(u.mul(&a).add(&v.mul(&b)), g);
        assert_eq!(g, UniPoly::one());
    }

    #[test]
    fn yun_reassembles() {
        // 5 (x-1)^3 (x+2)^2 x
        let f = p(&[-1, 1]).pow(3).mul(&p(&[2, 1]).pow(2)).mul(&p(&[0, 5]));
        let (u, fs) = f.squarefree_decomposition();
        assert_eq!(u, q(5, 1));
        let mults: Vec<usize> = fs.iter().map(|(_, m)| *m).collect();
        assert_eq!(mults, vec![1, 2, 3]);
        let back = fs
            .iter()
            .fold(UniPoly::constant(u), |acc, (g, m)| acc.mul(&g.pow(*m as u32)));
        assert_eq!(back, f);
    }

    #[test]
    fn pseudo_remainder_matches_scaled_remainder() {
        let a = p(&[1, 2, 3, 4]);
        let b = p(&[1, 0, 2]);
        let pr = a.pseudo_rem(&b);
        let scaled = a.scale(&BigRational::from_int(4)).rem(&b);
        assert_eq!(pr, scaled);
    }

    #[test]
    fn ring_exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(Ring::div_exact(&a, &p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(Ring::div_exact(&a, &p(&[2, 1])), None);
    }
}
