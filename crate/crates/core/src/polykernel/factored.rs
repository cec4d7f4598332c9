use std::fmt;

use crate::exactnum::{Cyclo, Ring};

use super::{BinaryForm, UniPoly};

#[derive(Clone, Debug, PartialEq)]
pub struct Factor<P> {
    pub poly: P,
    pub multiplicity: usize,
    /// Linear over ℚ(ζ₁₂); otherwise an unsplit residual.
    pub linear: bool,
}

/// `unit * ∏ poly^multiplicity`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredForm<P> {
    pub unit: Cyclo,
    pub factors: Vec<Factor<P>>,
}

pub trait Degree {
    fn deg(&self) -> usize;
}

impl Degree for UniPoly<Cyclo> {
    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }
}

impl Degree for BinaryForm {
    fn deg(&self) -> usize {
        self.degree() as usize
    }
}

impl<P: Degree> FactoredForm<P> {
    /// Degree counted with multiplicity.
    pub fn total_degree(&self) -> usize {
        self.factors.iter().map(|f| f.poly.deg() * f.multiplicity).sum()
    }

    /// Degree of the unsplit part, counted with multiplicity.
    pub fn residual_degree(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| !f.linear)
            .map(|f| f.poly.deg() * f.multiplicity)
            .sum()
    }

    pub fn residual_factors(&self) -> impl Iterator<Item = &Factor<P>> {
        self.factors.iter().filter(|f| !f.linear)
    }
}

impl FactoredForm<UniPoly<Cyclo>> {
    pub fn expand(&self) -> UniPoly<Cyclo> {
        self.factors.iter().fold(UniPoly::constant(self.unit.clone()), |acc, f| {
            acc.mul(&f.poly.pow(f.multiplicity as u32))
        })
    }
}

impl FactoredForm<BinaryForm> {
    pub fn expand(&self) -> BinaryForm {
        self.factors.iter().fold(BinaryForm::constant(self.unit.clone()), |acc, f| {
            acc.mul(&f.poly.pow(f.multiplicity as u32))
        })
    }
}

impl<P: fmt::Display> fmt::Display for FactoredForm<P> {
    /// `unit * (f1)^m1 * (f2)^m2 ...`, with a unit of one omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            let u = self.unit.to_string();
            parts.push(if u.contains(' ') { format!("({u})") } else { u });
        }
        for fac in &self.factors {
            let s = fac.poly.to_string();
            let base = if s.contains([' ', '*', '^']) || s.starts_with('-') {
                format!("({s})")
            } else {
                s
            };
            if fac.multiplicity == 1 {
                parts.push(base);
            } else {
                parts.push(format!("{base}^{}", fac.multiplicity));
            }
        }
        f.write_str(&parts.join("*"))
    }
}
