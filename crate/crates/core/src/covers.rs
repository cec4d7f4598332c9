//! Maps ℙ¹ → ℙ¹ given by coprime pairs of binary forms: Wronskians,
//! ramification, Galois tests in degrees 3 and 4, and deck groups.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{Cyclo, Field, Ring};
use crate::polykernel::{resultant_formal, BinaryForm, FactoredForm, P1Point, UniPoly};

/// 2×2 invertible matrix acting on column vectors (s, t), up to scalar.
#[derive(Clone, PartialEq, Eq)]
pub struct MobiusMap<F> {
    m: [[F; 2]; 2],
}

impl<F: Field> MobiusMap<F> {
    pub fn new(m: [[F; 2]; 2]) -> Result<Self> {
        let r = MobiusMap { m };
        if r.det().is_zero() {
            return Err(Error::Degenerate("singular 2×2 matrix".into()));
        }
        Ok(r)
    }

    pub fn identity() -> Self {
        MobiusMap { m: [[F::one(), F::zero()], [F::zero(), F::one()]] }
    }

    pub fn diag(a: F, d: F) -> Result<Self> {
        Self::new([[a, F::zero()], [F::zero(), d]])
    }

    pub fn matrix(&self) -> &[[F; 2]; 2] {
        &self.m
    }

    pub fn det(&self) -> F {
        self.m[0][0].mul(&self.m[1][1]).sub(&self.m[0][1].mul(&self.m[1][0]))
    }

    /// Matrix product self · other (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let a = &self.m;
        let b = &other.m;
        let e = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
        MobiusMap { m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]] }
    }

    pub fn inverse(&self) -> Self {
        let d = self.det().inv().expect("invertible");
        let [[a, b], [c, e]] = &self.m;
        MobiusMap {
            m: [[e.mul(&d), b.neg().mul(&d)], [c.neg().mul(&d), a.mul(&d)]],
        }
    }

    /// Representative whose first nonzero entry (row-major) is one.
    pub fn normalized(&self) -> Self {
        let lead = self
            .m
            .iter()
            .flatten()
            .find(|x| !x.is_zero())
            .expect("nonzero matrix")
            .inv()
            .unwrap();
        MobiusMap { m: self.m.clone().map(|r| r.map(|x| x.mul(&lead))) }
    }

    pub fn projectively_eq(&self, other: &Self) -> bool {
        self.normalized() == other.normalized()
    }

    pub fn is_identity(&self) -> bool {
        self.projectively_eq(&Self::identity())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(), |acc, _| acc.compose(self))
    }

    /// Smallest k in 1..=n with selfᵏ the identity.
    pub fn order_up_to(&self, n: u32) -> Option<u32> {
        let mut acc = Self::identity();
        for k in 1..=n {
            acc = acc.compose(self);
            if acc.is_identity() {
                return Some(k);
            }
        }
        None
    }

    /// P⁻¹ · self · P.
    pub fn conjugate_by(&self, p: &Self) -> Result<Self> {
        if p.det().is_zero() {
            return Err(Error::Degenerate("singular conjugating matrix".into()));
        }
        Ok(p.inverse().compose(self).compose(p))
    }
}

impl MobiusMap<Cyclo> {
    pub fn apply(&self, p: &P1Point) -> P1Point {
        let [[a, b], [c, d]] = &self.m;
        P1Point::new(
            a.mul(p.s()).add(&b.mul(p.t())),
            c.mul(p.s()).add(&d.mul(p.t())),
        )
        .expect("invertible")
    }

    /// The Möbius map sending `zero` to (0 : 1) and `inf` to (1 : 0).
    pub fn sending_to_zero_and_infinity(zero: &P1Point, inf: &P1Point) -> Result<Self> {
        // the inverse has columns inf, zero
        let inv = Self::new([[inf.s().clone(), zero.s().clone()], [inf.t().clone(), zero.t().clone()]])?;
        Ok(inv.inverse())
    }
}

impl<F: Field> fmt::Display for MobiusMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.normalized();
        let [[a, b], [c, d]] = &n.m;
        write!(f, "[{a}, {b} / {c}, {d}]")
    }
}

impl<F: Field> fmt::Debug for MobiusMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mobius{self}")
    }
}

/// A map ℙ¹ → ℙ¹, (s : t) ↦ (p(s,t) : q(s,t)), with p, q coprime forms of
/// equal degree d ≥ 1, scaled so that p has leading coefficient one.
#[derive(Clone, PartialEq, Eq)]
pub struct CoverP1 {
    p: BinaryForm,
    q: BinaryForm,
}

/// One ramification point: parameter and ramification index.
#[derive(Clone, Debug, PartialEq)]
pub struct RamEntry {
    pub point: P1Point,
    pub index: usize,
    pub value: P1Point,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RamificationProfile {
    pub degree: u32,
    pub entries: Vec<RamEntry>,
    /// Unsplit factors of the Wronskian: (form, multiplicity m) stands for
    /// deg(form) points each of index m + 1.
    pub residual: Vec<(BinaryForm, usize)>,
}

impl RamificationProfile {
    /// Σ (e − 1) over all ramification points, residual ones included.
    pub fn hurwitz_sum(&self) -> usize {
        self.entries.iter().map(|e| e.index - 1).sum::<usize>()
            + self
                .residual
                .iter()
                .map(|(f, m)| f.degree() as usize * m)
                .sum::<usize>()
    }

    pub fn indices(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.index).collect()
    }

    pub fn totally_ramified(&self) -> Vec<&P1Point> {
        self.entries
            .iter()
            .filter(|e| e.index == self.degree as usize)
            .map(|e| &e.point)
            .collect()
    }
}

impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("{} e={}", e.point, e.index))
            .collect();
        parts.extend(
            self.residual
                .iter()
                .map(|(g, m)| format!("[{g}] e={} (degree {})", m + 1, g.degree())),
        );
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Debug)]
pub struct Deg3Verdict {
    pub galois: bool,
    pub wronskian: BinaryForm,
    /// W = unit · g² when galois.
    pub unit: Option<Cyclo>,
    pub g: Option<BinaryForm>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Deg4Kind {
    Cyclic,
    Klein,
    NotGalois,
    Undetermined,
}

impl fmt::Display for Deg4Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Deg4Kind::Cyclic => "cyclic",
            Deg4Kind::Klein => "klein",
            Deg4Kind::NotGalois => "not-galois",
            Deg4Kind::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Deg4Verdict {
    pub kind: Deg4Kind,
    pub wronskian: BinaryForm,
    pub factored: FactoredForm<BinaryForm>,
    /// Cyclic: the quadratic whose cube divides W. Klein: the cubic whose
    /// square is the critical-value resultant.
    pub witness: Option<BinaryForm>,
    pub note: String,
}

/// Outcome of the explicit deck-transformation search in degree 3.
#[derive(Clone, Debug)]
pub enum OracleVerdict {
    Galois(Vec<MobiusMap<Cyclo>>),
    NotGalois,
    Inconclusive(String),
}

impl CoverP1 {
    pub fn new(p: BinaryForm, q: BinaryForm) -> Result<Self> {
        if p.degree() != q.degree() {
            return Err(Error::Degree { expected: format!("{}", p.degree()), found: q.degree() as usize });
        }
        if p.degree() == 0 {
            return Err(Error::Degenerate("constant map".into()));
        }
        if !p.gcd(&q).poly().is_constant() {
            return Err(Error::Degenerate(format!("({p} : {q}) has a common factor")));
        }
        let lead = p
            .poly()
            .leading_term()
            .map(|(_, c)| c.clone())
            .or_else(|| q.poly().leading_term().map(|(_, c)| c.clone()))
            .expect("nonzero map");
        let inv = lead.inv().unwrap();
        Ok(CoverP1 { p: p.scale(&inv), q: q.scale(&inv) })
    }

    /// Remove the gcd first; returns the cover and the removed factor.
    pub fn reduced(p: BinaryForm, q: BinaryForm) -> Result<(Self, BinaryForm)> {
        let g = p.gcd(&q);
        if g.is_zero() {
            return Err(Error::Degenerate("both components vanish".into()));
        }
        let p2 = p.div_exact(&g).expect("gcd divides");
        let q2 = q.div_exact(&g).expect("gcd divides");
        Ok((Self::new(p2, q2)?, g.monic()))
    }

    pub fn p(&self) -> &BinaryForm {
        &self.p
    }

    pub fn q(&self) -> &BinaryForm {
        &self.q
    }

    pub fn degree(&self) -> u32 {
        self.p.degree()
    }

    pub fn apply(&self, x: &P1Point) -> P1Point {
        P1Point::new(self.p.eval_at(x), self.q.eval_at(x)).expect("coprime forms")
    }

    /// h ∘ μ.
    pub fn precompose(&self, mu: &MobiusMap<Cyclo>) -> CoverP1 {
        let p = self.p.substitute_linear(mu.matrix());
        let q = self.q.substitute_linear(mu.matrix());
        CoverP1::new(p, q).expect("Möbius substitution keeps coprimality")
    }

    /// ν ∘ h.
    pub fn postcompose(&self, nu: &MobiusMap<Cyclo>) -> CoverP1 {
        let [[a, b], [c, d]] = nu.matrix();
        let p = self.p.scale(a).add(&self.q.scale(b));
        let q = self.p.scale(c).add(&self.q.scale(d));
        CoverP1::new(p, q).expect("Möbius image keeps coprimality")
    }

    /// Same map ℙ¹ → ℙ¹ (components proportional).
    pub fn same_map(&self, other: &CoverP1) -> bool {
        self.p.mul(&other.q).sub(&self.q.mul(&other.p)).is_zero()
    }

    /// h ∘ μ = h as maps.
    pub fn invariant_under(&self, mu: &MobiusMap<Cyclo>) -> bool {
        let p = self.p.substitute_linear(mu.matrix());
        let q = self.q.substitute_linear(mu.matrix());
        p.mul(&self.q).sub(&q.mul(&self.p)).is_zero()
    }

    /// ∂p/∂s · ∂q/∂t − ∂p/∂t · ∂q/∂s, of degree 2d − 2.
    pub fn wronskian(&self) -> BinaryForm {
        self.p.ds().mul(&self.q.dt()).sub(&self.p.dt().mul(&self.q.ds()))
    }

    pub fn ramification_profile(&self) -> RamificationProfile {
        let w = self.wronskian();
        let (roots, residual) = w.roots();
        let entries = roots
            .into_iter()
            .map(|(x, m)| RamEntry { value: self.apply(&x), point: x, index: m + 1 })
            .collect();
        let residual = residual
            .factors
            .into_iter()
            .map(|f| (f.poly, f.multiplicity))
            .collect();
        RamificationProfile { degree: self.degree(), entries, residual }
    }

    /// Degree-3 Galois test: W = c·g² with g a squarefree quadratic,
    /// decided by gcd(∂W/∂s, ∂W/∂t), which is the product of the multiple
    /// factors of W each to one power less.
    pub fn is_galois_deg3(&self) -> Result<Deg3Verdict> {
        if self.degree() != 3 {
            return Err(Error::Degree { expected: "3".into(), found: self.degree() as usize });
        }
        let w = self.wronskian();
        let g = w.ds().gcd(&w.dt());
        let no = Deg3Verdict { galois: false, wronskian: w.clone(), unit: None, g: None };
        if g.degree() != 2 {
            return Ok(no);
        }
        // squarefree quadratic: no common root with its own partials
        if g.ds().gcd(&g.dt()).degree() != 0 {
            return Ok(no);
        }
        let Some(c) = w.proportional_to(&g.pow(2)) else {
            return Ok(no);
        };
        Ok(Deg3Verdict { galois: true, wronskian: w, unit: Some(c), g: Some(g) })
    }

    /// Res_{s,t}(μ·p − λ·q, W) as a binary form in (λ : μ), written in the
    /// variables (s, t). Its roots are the critical values, each repeated
    /// once per ramification point above it (W squarefree).
    pub fn critical_value_form(&self) -> BinaryForm {
        let w = self.wronskian();
        let d = self.degree() as usize;
        let dw = w.degree() as usize;
        // coefficients as polynomials in λ with μ = 1
        let lam = UniPoly::<Cyclo>::x();
        let a: UniPoly<UniPoly<Cyclo>> = UniPoly::new(
            (0..=d)
                .map(|k| {
                    UniPoly::constant(self.p.coeff(k as u32)).sub(&lam.scale(&self.q.coeff(k as u32)))
                })
                .collect(),
        );
        let wu: UniPoly<UniPoly<Cyclo>> =
            UniPoly::new((0..=dw).map(|k| UniPoly::constant(w.coeff(k as u32))).collect());
        let r = resultant_formal(&a, d, &wu, dw);
        BinaryForm::homogenize(&r, dw as u32)
    }

    pub fn is_galois_deg4(&self) -> Result<Deg4Verdict> {
        if self.degree() != 4 {
            return Err(Error::Degree { expected: "4".into(), found: self.degree() as usize });
        }
        let w = self.wronskian();
        let fw = w.squarefree_decompose();
        let verdict = |kind, witness, note: &str| Deg4Verdict {
            kind,
            wronskian: w.clone(),
            factored: fw.clone(),
            witness,
            note: note.to_string(),
        };
        let shape: Vec<(u32, usize)> = fw.factors.iter().map(|f| (f.poly.degree(), f.multiplicity)).collect();
        if shape == [(2, 3)] {
            return Ok(verdict(
                Deg4Kind::Cyclic,
                Some(fw.factors[0].poly.clone()),
                "two totally ramified points",
            ));
        }
        if shape != [(6, 1)] {
            return Ok(verdict(Deg4Kind::NotGalois, None, "ramification pattern fits neither group"));
        }
        let r = self.critical_value_form();
        if r.is_zero() {
            return Ok(verdict(Deg4Kind::Undetermined, None, "critical-value resultant vanished"));
        }
        let fr = r.squarefree_decompose();
        let rshape: Vec<(u32, usize)> = fr.factors.iter().map(|f| (f.poly.degree(), f.multiplicity)).collect();
        if rshape == [(3, 2)] {
            Ok(verdict(
                Deg4Kind::Klein,
                Some(fr.factors[0].poly.clone()),
                "three critical values, each with two double points",
            ))
        } else {
            Ok(verdict(Deg4Kind::NotGalois, None, "some critical value has a single ramification point"))
        }
    }

    /// Deck transformations of a cyclic cover with both totally ramified
    /// points in ℚ(ζ₁₂), identity first, then the powers of the generator.
    /// Klein covers get the identity and their three involutions.
    pub fn deck_group(&self) -> Result<Vec<MobiusMap<Cyclo>>> {
        let d = self.degree();
        let prof = self.ramification_profile();
        let group = match d {
            3 => {
                if !self.is_galois_deg3()?.galois {
                    return Err(Error::Unsupported("cover is not certified Galois".into()));
                }
                self.cyclic_deck(&prof)?
            }
            4 => match self.is_galois_deg4()?.kind {
                Deg4Kind::Cyclic => self.cyclic_deck(&prof)?,
                Deg4Kind::Klein => self.klein_deck(&prof)?,
                _ => return Err(Error::Unsupported("cover is not certified Galois".into())),
            },
            _ => return Err(Error::Unsupported(format!("deck groups in degree {d}"))),
        };
        for mu in &group {
            if !self.invariant_under(mu) {
                return Err(Error::VerificationFailed(format!("{mu} does not preserve the cover")));
            }
        }
        Ok(group)
    }

    fn cyclic_deck(&self, prof: &RamificationProfile) -> Result<Vec<MobiusMap<Cyclo>>> {
        let d = self.degree();
        if !prof.residual.is_empty() {
            return Err(Error::Unsupported("ramification points outside ℚ(ζ₁₂)".into()));
        }
        let total = prof.totally_ramified();
        if total.len() != 2 {
            return Err(Error::Unsupported("expected two totally ramified points".into()));
        }
        let gen = rotation(total[0], total[1], &root_of_unity(d)?)?;
        Ok((0..d).map(|k| gen.pow(k).normalized()).collect())
    }

    fn klein_deck(&self, prof: &RamificationProfile) -> Result<Vec<MobiusMap<Cyclo>>> {
        if !prof.residual.is_empty() || prof.entries.len() != 6 {
            return Err(Error::Unsupported("ramification points outside ℚ(ζ₁₂)".into()));
        }
        let mut group = vec![MobiusMap::identity()];
        let mut used = [false; 6];
        for i in 0..6 {
            if used[i] {
                continue;
            }
            let j = (i + 1..6)
                .find(|&j| !used[j] && prof.entries[j].value == prof.entries[i].value)
                .ok_or_else(|| Error::VerificationFailed("unpaired critical value".into()))?;
            used[i] = true;
            used[j] = true;
            let inv = rotation(&prof.entries[i].point, &prof.entries[j].point, &Cyclo::from_int(-1))?;
            group.push(inv.normalized());
        }
        Ok(group)
    }

    /// Explicit search for deck transformations of a degree-3 cover: the
    /// ramification points are located, and every rotation about two of
    /// them by a cube root of unity is tested against h ∘ μ = h.
    pub fn brute_force_deck_deg3(&self) -> OracleVerdict {
        if self.degree() != 3 {
            return OracleVerdict::Inconclusive("degree is not 3".into());
        }
        let distinct: usize = self
            .wronskian()
            .squarefree_decompose()
            .factors
            .iter()
            .map(|f| f.poly.degree() as usize)
            .sum();
        // a Galois triple cover ramifies only with index 3, so exactly twice
        if distinct != 2 {
            return OracleVerdict::NotGalois;
        }
        let prof = self.ramification_profile();
        if !prof.residual.is_empty() || prof.entries.len() != 2 {
            return OracleVerdict::Inconclusive("ramification points outside ℚ(ζ₁₂)".into());
        }
        let (a, b) = (&prof.entries[0].point, &prof.entries[1].point);
        let mut found = vec![MobiusMap::identity()];
        let w1 = Cyclo::omega();
        for z in [w1.clone(), w1.mul(&w1)] {
            let Ok(mu) = rotation(a, b, &z) else {
                return OracleVerdict::Inconclusive("degenerate rotation".into());
            };
            if self.invariant_under(&mu) {
                found.push(mu.normalized());
            }
        }
        if found.len() == 3 {
            OracleVerdict::Galois(found)
        } else {
            OracleVerdict::NotGalois
        }
    }

    /// Points of the fiber over `value`, and the unsplit remainder degree.
    pub fn fiber(&self, value: &P1Point) -> (Vec<(P1Point, usize)>, usize) {
        let f = self.p.scale(value.t()).sub(&self.q.scale(value.s()));
        let (roots, rest) = f.roots();
        (roots, rest.total_degree())
    }
}

/// N⁻¹ · diag(z, 1) · N where N sends `fixed` to (0 : 1) and `scaled` to
/// (1 : 0): fixes both points and multiplies the tangent direction at
/// `scaled` by z.
pub fn rotation(fixed: &P1Point, scaled: &P1Point, z: &Cyclo) -> Result<MobiusMap<Cyclo>> {
    let n = MobiusMap::sending_to_zero_and_infinity(fixed, scaled)?;
    let d = MobiusMap::diag(z.clone(), Cyclo::one())?;
    Ok(n.inverse().compose(&d).compose(&n))
}

/// ω for d = 3 and i for d = 4.
pub fn root_of_unity(d: u32) -> Result<Cyclo> {
    match d {
        1 => Ok(Cyclo::one()),
        2 => Ok(Cyclo::from_int(-1)),
        3 => Ok(Cyclo::omega()),
        4 => Ok(Cyclo::i()),
        6 => Ok(Cyclo::omega().neg().mul(&Cyclo::omega())),
        12 => Ok(Cyclo::zeta()),
        _ => Err(Error::Unsupported(format!("primitive {d}-th roots of unity"))),
    }
}

impl fmt::Display for CoverP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} : {})", self.p, self.q)
    }
}

impl fmt::Debug for CoverP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoverP1{self}")
    }
}
