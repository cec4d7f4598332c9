//! Multivariate gcd by recursive content / primitive-part Euclid.

use crate::exactnum::Field;

use super::MultiPoly;

impl<F: Field> MultiPoly<F> {
    /// Greatest common divisor, normalized to leading coefficient one.
    /// `gcd(f, 0)` is `f` made monic; `gcd(0, 0)` is zero.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one(self.vars().clone());
        }
        let n = self.nvars();
        let v = (0..n)
            .find(|&k| self.degree_in(k) > 0 || other.degree_in(k) > 0)
            .expect("nonconstant polynomial has a variable");
        if self.degree_in(v) == 0 {
            return self.gcd(&other.content_in(v));
        }
        if other.degree_in(v) == 0 {
            return other.gcd(&self.content_in(v));
        }
        let cf = self.content_in(v);
        let cg = other.content_in(v);
        let c = cf.gcd(&cg);
        let mut a = self.div_exact(&cf).expect("content divides");
        let mut b = other.div_exact(&cg).expect("content divides");
        if a.degree_in(v) < b.degree_in(v) {
            std::mem::swap(&mut a, &mut b);
        }
        let h = loop {
            let r = a.pseudo_rem_in(&b, v);
            if r.is_zero() {
                break b;
            }
            if r.degree_in(v) == 0 {
                break Self::one(self.vars().clone());
            }
            a = b;
            b = r.primitive_part_in(v);
        };
        c.mul(&h.primitive_part_in(v)).monic()
    }

    /// gcd of the coefficients with respect to variable `v`.
    pub fn content_in(&self, v: usize) -> Self {
        let mut g = Self::zero(self.vars().clone());
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(&c);
            if g.is_constant() {
                break;
            }
        }
        g
    }

    pub fn primitive_part_in(&self, v: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.div_exact(&self.content_in(v)).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `b` viewed as polynomials in `v`.
    pub fn pseudo_rem_in(&self, b: &Self, v: usize) -> Self {
        let db = b.degree_in(v);
        let lb = b.coeff_in(v, db);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lr = r.coeff_in(v, dr);
            let mut e = vec![0; self.nvars()];
            e[v] = dr - db;
            let shift = MultiPoly::term(self.vars().clone(), F::one(), &e);
            r = r.mul(&lb).sub(&lr.mul(&shift).mul(b));
        }
        r
    }

    /// Remove the gcd of the given polynomials from each of them.
    pub fn cancel_common(polys: &[Self]) -> (Self, Vec<Self>) {
        let vars = polys[0].vars().clone();
        let g = polys
            .iter()
            .fold(Self::zero(vars.clone()), |acc, p| acc.gcd(p));
        if g.is_zero() {
            return (g, polys.to_vec());
        }
        let reduced = polys
            .iter()
            .map(|p| p.div_exact(&g).expect("gcd divides"))
            .collect();
        (g, reduced)
    }
}

#[cfg(test)]
mod tests {
    use crate::exactnum::{Cyclo, Ring};
    use crate::polykernel::{vars, MultiPoly};

    fn st() -> (MultiPoly<Cyclo>, MultiPoly<Cyclo>) {
        let g = MultiPoly::gens(&vars(&["s", "t"]));
        (g[0].clone(), g[1].clone())
    }

    #[test]
    fn monomial_gcd() {
        let (s, t) = st();
        assert_eq!(s.pow(2).mul(&t).gcd(&s.mul(&t.pow(2))), s.mul(&t));
    }

    #[test]
    fn projection_base_factor() {
        let (s, t) = st();
        let a = t.mul(&s.add(&t).pow(3));
        let b = s.pow(3).mul(&t);
        assert_eq!(a.gcd(&b), t);
    }

    #[test]
    fn gcd_with_zero_is_normalized() {
        let (s, t) = st();
        let f = s.scale(&Cyclo::from_int(3)).add(&t);
        let z = MultiPoly::zero(f.vars().clone());
        assert_eq!(f.gcd(&z), f.scale(&Cyclo::frac(1, 3)));
    }

    #[test]
    fn three_variable_gcd() {
        let g = MultiPoly::<Cyclo>::gens(&vars(&["X", "Y", "Z"]));
        let (x, y, z) = (&g[0], &g[1], &g[2]);
        let common = x.mul(y).add(&z.pow(2).scale(&Cyclo::omega()));
        let f = common.mul(&x.add(z));
        let h = common.mul(&y.sub(z)).mul(x);
        assert_eq!(f.gcd(&h), common.monic());
    }
}
