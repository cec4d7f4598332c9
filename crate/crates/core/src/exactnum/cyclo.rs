//! The cyclotomic field Q(zeta_12) in the power basis {1, z, z^2, z^3},
//! reduced modulo z^4 - z^2 + 1.
//!
//! omega = z^4 = z^2 - 1 is a primitive cube root of unity and i = z^3.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use super::field::{Field, Ring};
use crate::polykernel::UniPoly;

/// Exponents k with gcd(k, 12) = 1; z -> z^k are the field automorphisms.
pub const EMBEDDING_EXPONENTS: [u32; 4] = [1, 5, 7, 11];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Cyclo {
    coeffs: [BigRational; 4],
}

fn rz() -> BigRational {
    <BigRational as Ring>::zero()
}

impl Cyclo {
    pub fn new(coeffs: [BigRational; 4]) -> Self {
        Cyclo { coeffs }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Cyclo { coeffs: [r, rz(), rz(), rz()] }
    }

    pub fn from_ints(c: [i64; 4]) -> Self {
        Cyclo { coeffs: c.map(BigRational::from_int) }
    }

    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(super::field::q(num, den))
    }

    /// Primitive 12th root of unity.
    pub fn zeta() -> Self {
        Self::from_ints([0, 1, 0, 0])
    }

    /// omega = zeta^4 = zeta^2 - 1.
    pub fn omega() -> Self {
        Self::from_ints([-1, 0, 1, 0])
    }

    /// i = zeta^3.
    pub fn i() -> Self {
        Self::from_ints([0, 0, 0, 1])
    }

    /// Coordinates in the power basis {1, z, z^2, z^3}.
    pub fn coeffs(&self) -> &[BigRational; 4] {
        &self.coeffs
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Ring::is_zero)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.is_rational().then(|| &self.coeffs[0])
    }

    /// Coordinates in the basis {1, w, i, w*i} where w = omega.
    pub fn omega_i_coords(&self) -> [BigRational; 4] {
        let [a, b, c, d] = &self.coeffs;
        [a + c, c.clone(), d.clone(), -b]
    }

    pub fn from_omega_i_coords(u: [BigRational; 4]) -> Self {
        // u0 + u1 (z^2 - 1) + u2 z^3 - u3 z
        let [u0, u1, u2, u3] = u;
        Cyclo { coeffs: [&u0 - &u1, -u3, u1, u2] }
    }

    /// Reduce a coefficient vector of arbitrary length modulo z^4 - z^2 + 1.
    fn reduce(mut v: Vec<BigRational>) -> Self {
        // z^k = z^(k-2) - z^(k-4) for k >= 4
        for k in (4..v.len()).rev() {
            let top = std::mem::replace(&mut v[k], rz());
            if Ring::is_zero(&top) {
                continue;
            }
            v[k - 2] = &v[k - 2] + &top;
            v[k - 4] = &v[k - 4] - &top;
        }
        v.resize(4, rz());
        Cyclo { coeffs: [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()] }
    }

    /// The automorphism z -> z^k (k coprime to 12).
    pub fn conjugate(&self, k: u32) -> Self {
        let mut v = vec![rz(); 3 * k as usize + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            v[m * k as usize] = c.clone();
        }
        Self::reduce(reduce_exponents_mod_12(v))
    }

    /// Norm down to Q: the product of the four conjugates.
    pub fn norm(&self) -> BigRational {
        let prod = EMBEDDING_EXPONENTS
            .iter()
            .fold(Cyclo::one(), |acc, &k| Ring::mul(&acc, &self.conjugate(k)));
        debug_assert!(prod.is_rational());
        prod.coeffs[0].clone()
    }

    pub fn as_unipoly(&self) -> UniPoly<BigRational> {
        UniPoly::new(self.coeffs.to_vec())
    }

    /// The polynomial z^4 - z^2 + 1.
    pub fn modulus() -> UniPoly<BigRational> {
        UniPoly::new([1, 0, -1, 0, 1].map(BigRational::from_int).to_vec())
    }

    /// Common denominator of the four coordinates.
    pub fn denominator(&self) -> BigInt {
        super::field::common_denominator(self.coeffs.iter())
    }

    /// Rendering in the power basis, e.g. `1/2 - z + 3*z^3`.
    pub fn power_basis_string(&self) -> String {
        render_linear(
            &self.coeffs,
            &["", "z", "z^2", "z^3"],
        )
    }

    pub fn max_height_bits(&self) -> u64 {
        self.coeffs
            .iter()
            .map(|c| c.numer().bits().max(c.denom().bits()))
            .max()
            .unwrap_or(0)
    }
}

// z^12 = 1, so exponents may be reduced mod 12 before the quartic reduction.
fn reduce_exponents_mod_12(v: Vec<BigRational>) -> Vec<BigRational> {
    let mut out = vec![rz(); 12];
    for (e, c) in v.into_iter().enumerate() {
        out[e % 12] = &out[e % 12] + &c;
    }
    out
}

fn render_linear(coords: &[BigRational], basis: &[&str]) -> String {
    let mut out = String::new();
    for (c, b) in coords.iter().zip(basis) {
        if Ring::is_zero(c) {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if b.is_empty() {
            out.push_str(&abs.to_string());
        } else if <BigRational as Ring>::is_one(&abs) {
            out.push_str(b);
        } else {
            out.push_str(&format!("{abs}*{b}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Ring for Cyclo {
    fn zero() -> Self {
        Cyclo { coeffs: [rz(), rz(), rz(), rz()] }
    }
    fn one() -> Self {
        Self::from_ints([1, 0, 0, 0])
    }
    fn from_int(n: i64) -> Self {
        Self::from_ints([n, 0, 0, 0])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }
    fn add(&self, other: &Self) -> Self {
        Cyclo {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] + &other.coeffs[k]),
        }
    }
    fn neg(&self) -> Self {
        Cyclo { coeffs: std::array::from_fn(|k| -&self.coeffs[k]) }
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclo {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] - &other.coeffs[k]),
        }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_rational() {
            let r = &self.coeffs[0];
            return Cyclo { coeffs: std::array::from_fn(|k| r * &other.coeffs[k]) };
        }
        if other.is_rational() {
            let r = &other.coeffs[0];
            return Cyclo { coeffs: std::array::from_fn(|k| &self.coeffs[k] * r) };
        }
        let mut v = vec![rz(); 7];
        for (a, x) in self.coeffs.iter().enumerate() {
            if Ring::is_zero(x) {
                continue;
            }
            for (b, y) in other.coeffs.iter().enumerate() {
                if Ring::is_zero(y) {
                    continue;
                }
                v[a + b] = &v[a + b] + &(x * y);
            }
        }
        Self::reduce(v)
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        Field::div(self, other)
    }
}

impl Field for Cyclo {
    /// Inverse by the extended Euclidean algorithm against z^4 - z^2 + 1.
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        if let Some(r) = self.as_rational() {
            return Some(Self::from_rational(r.recip()));
        }
        let (g, u, _) = self.as_unipoly().ext_gcd(&Self::modulus());
        // the modulus is irreducible, so g is a nonzero constant
        debug_assert_eq!(g.degree(), Some(0));
        let c = g.coeff(0).recip();
        let u = u.scale(&c);
        let mut v = u.coeffs().to_vec();
        v.resize(4, rz());
        Some(Self::reduce(v))
    }
}

impl PartialOrd for Cyclo {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order on power-basis coordinates. This is a total order on
/// representations used for deterministic sorting; it is not a field order.
impl Ord for Cyclo {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs.cmp(&other.coeffs)
    }
}

impl fmt::Display for Cyclo {
    /// Renders in the basis {1, w, i, w*i}; the output is accepted by the
    /// expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let u = self.omega_i_coords();
        f.write_str(&render_linear(&u, &["", "w", "i", "w*i"]))
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({})", self)
    }
}

impl From<i64> for Cyclo {
    fn from(n: i64) -> Self {
        Cyclo::from_int(n)
    }
}

impl From<BigRational> for Cyclo {
    fn from(r: BigRational) -> Self {
        Cyclo::from_rational(r)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $ring:ident) => {
        impl $tr<&Cyclo> for &Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: &Cyclo) -> Cyclo {
                Ring::$ring(self, rhs)
            }
        }
        impl $tr<Cyclo> for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                Ring::$ring(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Ring::neg(&self)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Ring::neg(self)
    }
}
