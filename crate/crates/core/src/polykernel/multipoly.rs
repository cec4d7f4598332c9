use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Ring};

use super::UniPoly;

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then lexicographic with the first variable most significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub type Vars = Arc<[String]>;

pub fn vars(names: &[&str]) -> Vars {
    names.iter().map(|s| s.to_string()).collect::<Vec<_>>().into()
}

/// Sparse polynomial over a coefficient ring, in an ordered list of named
/// variables. Zero coefficients are never stored, so two polynomials are
/// equal exactly when their term maps are equal.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly<R> {
    vars: Vars,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(vars: Vars) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: Vars, c: R) -> Self {
        let mut p = Self::zero(vars);
        let one = Monomial::one(p.vars.len());
        p.insert(one, c);
        p
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, R::one())
    }

    pub fn var(vars: Vars, idx: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero(vars);
        p.insert(Monomial(e), R::one());
        p
    }

    /// All variables of `vars`, in order.
    pub fn gens(vars: &Vars) -> Vec<Self> {
        (0..vars.len()).map(|k| Self::var(vars.clone(), k)).collect()
    }

    pub fn term(vars: Vars, c: R, exps: &[u32]) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        p.insert(Monomial(exps.to_vec()), c);
        p
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = (Vec<u32>, R)>) -> Self {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            assert_eq!(e.len(), p.vars.len());
            p.add_term(Monomial(e), c);
        }
        p
    }

    fn insert(&mut self, m: Monomial, c: R) {
        if !c.is_zero() {
            self.terms.insert(m, c);
        }
    }

    fn add_term(&mut self, m: Monomial, c: R) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.add(&c);
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    pub fn constant_value(&self) -> Option<R> {
        if self.is_zero() {
            return Some(R::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> R {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(R::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> R {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(R::zero)
    }

    /// Total degree; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn min_total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn degree_in(&self, idx: usize) -> u32 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_vars(&self, other: &Self) {
        assert!(
            self.vars == other.vars,
            "variable mismatch: {:?} vs {:?}",
            self.vars,
            other.vars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.neg());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_vars(other);
        let mut out = Self::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1.mul(c2));
            }
        }
        out
    }

    pub fn scale(&self, c: &R) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone());
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v.mul(c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &R) -> Self {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.mul(c)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars.clone());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Substitute `images[k]` for the k-th variable. All images must share
    /// one variable list, which becomes the variable list of the result.
    pub fn compose(&self, images: &[MultiPoly<R>]) -> Result<MultiPoly<R>> {
        if images.len() != self.nvars() {
            return Err(Error::ArityMismatch { expected: self.nvars(), found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => self.vars.clone(),
        };
        if images.iter().any(|p| p.vars != target) {
            return Err(Error::ArityMismatch { expected: target.len(), found: 0 });
        }
        // cache powers per variable
        let mut powers: Vec<Vec<MultiPoly<R>>> = vec![vec![Self::one(target.clone())]; images.len()];
        let mut out = Self::zero(target.clone());
        for (m, c) in &self.terms {
            let mut t = Self::constant(target.clone(), c.clone());
            for (k, &e) in m.0.iter().enumerate() {
                while powers[k].len() <= e as usize {
                    let next = powers[k].last().unwrap().mul(&images[k]);
                    powers[k].push(next);
                }
                if e > 0 {
                    t = t.mul(&powers[k][e as usize]);
                }
            }
            out = out.add(&t);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[R]) -> R {
        assert_eq!(point.len(), self.nvars());
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&x.pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Partial derivative in the variable with index `idx`.
    pub fn derivative(&self, idx: usize) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let e = m.0[idx];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[idx] -= 1;
            out.add_term(m2, c.scale_int(e as i64));
        }
        out
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        self.check_vars(other);
        let (lm, lc) = other.leading_term()?;
        let (lm, lc) = (lm.clone(), lc.clone());
        let mut r = self.clone();
        let mut q = Self::zero(self.vars.clone());
        while let Some((m, c)) = r.leading_term() {
            if !lm.divides(m) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = c.div_exact(&lc)?;
            r = r.sub(&other.mul_term(&tm, &tc));
            q.add_term(tm, tc);
        }
        Some(q)
    }

    /// Coefficient of `var^k` as a polynomial in the same variable list.
    pub fn coeff_in(&self, idx: usize, k: u32) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            if m.0[idx] == k {
                let mut m2 = m.clone();
                m2.0[idx] = 0;
                out.add_term(m2, c.clone());
            }
        }
        out
    }

    /// Coefficients with respect to one variable, lowest power first.
    pub fn coeffs_in(&self, idx: usize) -> Vec<Self> {
        (0..=self.degree_in(idx)).map(|k| self.coeff_in(idx, k)).collect()
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> MultiPoly<S> {
        let mut out = MultiPoly::zero(self.vars.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Re-express in a different variable list; `mapping[k]` is the index in
    /// `new_vars` of this polynomial's k-th variable.
    pub fn embed(&self, new_vars: Vars, mapping: &[usize]) -> Self {
        let mut out = Self::zero(new_vars.clone());
        for (m, c) in &self.terms {
            let mut e = vec![0; new_vars.len()];
            for (k, &x) in m.0.iter().enumerate() {
                e[mapping[k]] += x;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Univariate view in variable `idx`, for polynomials in which only that
    /// variable occurs.
    pub fn to_univariate(&self, idx: usize) -> Option<UniPoly<R>> {
        let mut v = vec![R::zero(); self.degree_in(idx) as usize + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(k, &e)| k != idx && e > 0) {
                return None;
            }
            v[m.0[idx] as usize] = c.clone();
        }
        Some(UniPoly::new(v))
    }

    pub fn from_univariate(vars: Vars, idx: usize, u: &UniPoly<R>) -> Self {
        let n = vars.len();
        let mut out = Self::zero(vars);
        for (k, c) in u.coeffs().iter().enumerate() {
            let mut e = vec![0; n];
            e[idx] = k as u32;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Set variable `idx` to the constant `value`, keeping the variable list.
    pub fn specialize(&self, idx: usize, value: &R) -> Self {
        let mut out = Self::zero(self.vars.clone());
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = std::mem::replace(&mut m2.0[idx], 0);
            out.add_term(m2, c.mul(&value.pow(e)));
        }
        out
    }
}

impl<F: Field> MultiPoly<F> {
    /// Scale so the leading coefficient (graded-lex) is one.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero")),
        }
    }

    /// Divide by a nonzero constant.
    pub fn div_scalar(&self, c: &F) -> Option<Self> {
        c.inv().map(|i| self.scale(&i))
    }

    /// `Some(c)` when `self = c * other` for a scalar c.
    pub fn proportional_to(&self, other: &Self) -> Option<F> {
        match (self.leading_term(), other.leading_term()) {
            (None, None) => Some(F::one()),
            (Some(_), None) | (None, Some(_)) => None,
            (Some((m1, c1)), Some((m2, c2))) => {
                if m1 != m2 {
                    return None;
                }
                let c = c1.div(c2)?;
                (other.scale(&c) == *self).then_some(c)
            }
        }
    }
}

/// Append `c * mono` to a sum being rendered, choosing the sign and
/// parenthesizing compound coefficients.
pub(crate) fn push_term<R: Ring>(out: &mut String, c: &R, mono: &str) {
    let s = c.to_string();
    let compound = s
        .strip_prefix('-')
        .unwrap_or(&s)
        .contains([' ', '*']);
    let (neg, body) = if compound {
        (false, format!("({s})"))
    } else if let Some(rest) = s.strip_prefix('-') {
        (true, rest.to_string())
    } else {
        (false, s)
    };
    if out.is_empty() {
        if neg {
            out.push('-');
        }
    } else {
        out.push_str(if neg { " - " } else { " + " });
    }
    if mono.is_empty() {
        out.push_str(&body);
    } else if body == "1" {
        out.push_str(mono);
    } else {
        out.push_str(&body);
        out.push('*');
        out.push_str(mono);
    }
}

pub(crate) fn render_monomial(vars: &[String], m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in vars.iter().zip(&m.0) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl<R: Ring> fmt::Display for MultiPoly<R> {
    /// Canonical text: terms in descending graded-lex order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (m, c) in self.terms() {
            push_term(&mut out, c, &render_monomial(&self.vars, m));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl<R: Ring> fmt::Debug for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.vars.join(","), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Cyclo;

    fn xyz() -> (MultiPoly<Cyclo>, MultiPoly<Cyclo>, MultiPoly<Cyclo>) {
        let v = vars(&["X", "Y", "Z"]);
        let g = MultiPoly::gens(&v);
        (g[0].clone(), g[1].clone(), g[2].clone())
    }

    #[test]
    fn grlex_order_and_display() {
        let (x, y, z) = xyz();
        let f = x.pow(4).sub(&x.pow(3).mul(&y)).add(&y.pow(3).mul(&z));
        assert_eq!(f.to_string(), "X^4 - X^3*Y + Y^3*Z");
        let g = z.scale(&Cyclo::omega()).add(&x.scale(&Cyclo::frac(-3, 2)));
        assert_eq!(g.to_string(), "-3/2*X + w*Z");
        let h = x.scale(&(Cyclo::omega() * Cyclo::omega()));
        assert_eq!(h.to_string(), "(-1 - w)*X");
    }

    #[test]
    fn exact_division() {
        let (x, y, _) = xyz();
        let f = x.add(&y).pow(3);
        let q = f.div_exact(&x.add(&y)).unwrap();
        assert_eq!(q, x.add(&y).pow(2));
        assert!(f.div_exact(&x).is_none());
    }

    #[test]
    fn compose_degree_multiplies() {
        let (x, y, z) = xyz();
        let f = x.pow(2).sub(&y.mul(&z));
        let img = [x.mul(&y), y.pow(2), z.mul(&x)];
        let g = f.compose(&img).unwrap();
        assert!(g.is_homogeneous());
        assert_eq!(g.total_degree(), Some(4));
        assert!(f.compose(&img[..2]).is_err());
    }

    #[test]
    fn derivative_and_specialize() {
        let (x, y, _) = xyz();
        let f = x.pow(3).mul(&y);
        assert_eq!(f.derivative(0), x.pow(2).mul(&y).scale(&Cyclo::from_int(3)));
        assert_eq!(f.specialize(0, &Cyclo::from_int(2)), y.scale(&Cyclo::from_int(8)));
    }
}
