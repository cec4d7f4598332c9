//! Roots of univariate polynomials that lie in ℚ(ζ₁₂).
//!
//! Rational roots come from the norm polynomial, found modulo a small prime,
//! Hensel-lifted and recovered by rational reconstruction. Non-rational roots
//! of small residual factors are found the same way one embedding at a time:
//! the four images of a root are matched across embeddings and the power
//! basis coordinates recovered by solving a Vandermonde system modulo a
//! prime power. Every candidate is confirmed by exact evaluation; anything
//! not found stays in the residual.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactnum::{common_denominator, Cyclo, Ring, EMBEDDING_EXPONENTS};

use super::{Factor, FactoredForm, UniPoly};

/// Largest residual degree for which non-rational roots are searched.
pub const CYCLO_SEARCH_MAX_DEGREE: usize = 8;

#[derive(Clone, Debug)]
pub struct FieldRoots {
    /// Distinct roots with multiplicities, sorted.
    pub roots: Vec<(Cyclo, usize)>,
    /// Leading coefficient and the unsplit cofactors (no root found).
    pub residual: FactoredForm<UniPoly<Cyclo>>,
}

impl FieldRoots {
    pub fn residual_degree(&self) -> usize {
        self.residual.total_degree()
    }

    pub fn root_count(&self) -> usize {
        self.roots.iter().map(|(_, m)| m).sum()
    }
}

pub fn roots_in_field(f: &UniPoly<Cyclo>) -> FieldRoots {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let (unit, parts) = f.squarefree_decomposition();
    let mut roots = Vec::new();
    let mut residual = Vec::new();
    for (g, m) in parts {
        let (rs, rest) = squarefree_roots(&g);
        roots.extend(rs.into_iter().map(|r| (r, m)));
        if rest.degree().unwrap_or(0) > 0 {
            residual.push(Factor { poly: rest, multiplicity: m, linear: false });
        }
    }
    roots.sort();
    FieldRoots { roots, residual: FactoredForm { unit, factors: residual } }
}

/// Roots of a monic squarefree polynomial, plus the monic cofactor.
fn squarefree_roots(g: &UniPoly<Cyclo>) -> (Vec<Cyclo>, UniPoly<Cyclo>) {
    let mut g = g.clone();
    let mut roots = Vec::new();
    let mut take = |g: &mut UniPoly<Cyclo>, r: Cyclo| {
        *g = g.div_rem(&UniPoly::linear_root(&r)).0;
        roots.push(r);
    };
    if g.degree().unwrap_or(0) > 0 && g.coeff(0).is_zero() {
        take(&mut g, Cyclo::zero());
    }
    if g.degree().unwrap_or(0) > 0 {
        for r in rational_roots(&g) {
            take(&mut g, Cyclo::from_rational(r));
        }
    }
    let d = g.degree().unwrap_or(0);
    if d > 0 && d <= CYCLO_SEARCH_MAX_DEGREE {
        for r in cyclotomic_roots(&g) {
            take(&mut g, r);
        }
    }
    (roots, g)
}

// ---------------------------------------------------------------------------
// arithmetic modulo a small prime

fn fp_trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn fp_eval(c: &[u64], x: u64, p: u64) -> u64 {
    c.iter()
        .rev()
        .fold(0u64, |acc, &a| ((acc as u128 * x as u128 + a as u128) % p as u128) as u64)
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn fp_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let inv = fp_pow(b[db], p - 2, p);
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let c = ((r[k] as u128 * inv as u128) % p as u128) as u64;
        for (i, &bi) in b.iter().enumerate() {
            let idx = k - db + i;
            let sub = ((c as u128 * bi as u128) % p as u128) as u64;
            r[idx] = (r[idx] + p - sub) % p;
        }
        r = fp_trim(r);
    }
    r
}

fn fp_is_squarefree(c: &[u64], p: u64) -> bool {
    let d: Vec<u64> = fp_trim(
        c.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &a)| ((a as u128 * k as u128) % p as u128) as u64)
            .collect(),
    );
    if d.is_empty() {
        return c.len() <= 1;
    }
    let (mut a, mut b) = (c.to_vec(), d);
    while !b.is_empty() {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a.len() == 1
}

fn fp_roots(c: &[u64], p: u64) -> Vec<u64> {
    (0..p).filter(|&x| fp_eval(c, x, p) == 0).collect()
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

fn primes_from(start: u64) -> impl Iterator<Item = u64> {
    (start..).filter(|&n| is_prime(n))
}

fn reduce(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

fn to_fp(c: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    fp_trim(c.iter().map(|a| reduce(a, &pb).to_u64().unwrap()).collect())
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = reduce(a, m).extended_gcd(m);
    e.gcd.is_one().then(|| reduce(&e.x, m))
}

fn int_eval(c: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| reduce(&(acc * x + a), m))
}

fn int_derivative(c: &[BigInt]) -> Vec<BigInt> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(k, a)| a * BigInt::from(k))
        .collect()
}

/// Lift a simple root modulo p of `c` to a root modulo p^k >= `target`.
fn hensel_lift(c: &[BigInt], root: u64, p: u64, target: &BigInt) -> (BigInt, BigInt) {
    let dc = int_derivative(c);
    let pb = BigInt::from(p);
    let mut m = pb.clone();
    let mut r = BigInt::from(root);
    while &m <= target {
        m = &m * &m;
        let fr = int_eval(c, &r, &m);
        let dr = int_eval(&dc, &r, &m);
        let inv = mod_inverse(&dr, &m).expect("simple root lifts");
        r = reduce(&(r - fr * inv), &m);
    }
    (r, m)
}

/// a/b with |a| <= a_max, 0 < b <= b_max and a = b u mod m, if it exists.
fn rational_reconstruct(u: &BigInt, m: &BigInt, a_max: &BigInt, b_max: &BigInt) -> Option<BigRational> {
    let (mut r0, mut r1) = (m.clone(), reduce(u, m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while &r1 > a_max {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || &t1.abs() > b_max {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

fn symmetric(a: &BigInt, m: &BigInt) -> BigInt {
    let r = reduce(a, m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

/// Primitive integer polynomial proportional to `f`.
fn integer_primitive(f: &UniPoly<BigRational>) -> Vec<BigInt> {
    let den = common_denominator(f.coeffs());
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(den.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    ints.into_iter().map(|v| v / &g).collect()
}

/// ∏ over the four embeddings of the coefficientwise conjugates of `g`.
pub fn norm_polynomial(g: &UniPoly<Cyclo>) -> UniPoly<BigRational> {
    let n = EMBEDDING_EXPONENTS
        .iter()
        .map(|&k| g.map(|c| c.conjugate(k)))
        .fold(UniPoly::one(), |acc: UniPoly<Cyclo>, h| acc.mul(&h));
    n.map(|c| c.as_rational().expect("norm is rational").clone())
}

/// Distinct rational roots of `g` (g(0) != 0).
fn rational_roots(g: &UniPoly<Cyclo>) -> Vec<BigRational> {
    let n = if g.coeffs().iter().all(Cyclo::is_rational) {
        g.map(|c| c.as_rational().unwrap().clone())
    } else {
        norm_polynomial(g)
    };
    let h = integer_primitive(&n.squarefree_part());
    let deg = h.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    let a_max = h[0].abs();
    let b_max = h[deg].abs();
    let target = &a_max * &b_max * 2;
    let p = primes_from(deg as u64 + 3)
        .find(|&p| {
            let hp = to_fp(&h, p);
            hp.len() == deg + 1 && fp_is_squarefree(&hp, p)
        })
        .expect("a squarefree reduction exists");
    let mut out = Vec::new();
    for r in fp_roots(&to_fp(&h, p), p) {
        let (lift, m) = hensel_lift(&h, r, p, &target);
        if let Some(cand) = rational_reconstruct(&lift, &m, &a_max, &b_max) {
            let c = Cyclo::from_rational(cand.clone());
            if g.eval(&c).is_zero() && !out.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out.sort();
    out
}

// ---------------------------------------------------------------------------
// non-rational roots

fn cyclo_int_coords(c: &Cyclo, den: &BigInt) -> [BigInt; 4] {
    let d = BigRational::from_integer(den.clone());
    c.coeffs().clone().map(|a| (a * &d).to_integer())
}

#[derive(Clone, Copy)]
struct C64(f64, f64);

impl C64 {
    fn add(self, o: C64) -> C64 {
        C64(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: C64) -> C64 {
        C64(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: C64) -> C64 {
        C64(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn div(self, o: C64) -> C64 {
        let n = o.0 * o.0 + o.1 * o.1;
        C64((self.0 * o.0 + self.1 * o.1) / n, (self.1 * o.0 - self.0 * o.1) / n)
    }
    fn abs(self) -> f64 {
        self.0.hypot(self.1)
    }
    fn root_of_unity(k: u32) -> C64 {
        let a = std::f64::consts::TAU * k as f64 / 12.0;
        C64(a.cos(), a.sin())
    }
}

fn embed_f64(c: &Cyclo, k: u32) -> C64 {
    let z = C64::root_of_unity(k);
    let mut acc = C64(0.0, 0.0);
    let mut pw = C64(1.0, 0.0);
    for a in c.coeffs() {
        let v = a.to_f64().unwrap_or(f64::INFINITY);
        acc = acc.add(pw.mul(C64(v, 0.0)));
        pw = pw.mul(z);
    }
    acc
}

/// Row sums of |V⁻¹| for the complex Vandermonde matrix of the embeddings,
/// so |coordinate m| <= rowsum[m] * max_j |embedding j|.
fn inverse_vandermonde_rowsums() -> [f64; 4] {
    let mut a = [[C64(0.0, 0.0); 8]; 4];
    for (j, &k) in EMBEDDING_EXPONENTS.iter().enumerate() {
        let z = C64::root_of_unity(k);
        let mut pw = C64(1.0, 0.0);
        for m in 0..4 {
            a[j][m] = pw;
            pw = pw.mul(z);
        }
        a[j][4 + j] = C64(1.0, 0.0);
    }
    for col in 0..4 {
        let piv = (col..4)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        a.swap(col, piv);
        let pv = a[col][col];
        for c in 0..8 {
            a[col][c] = a[col][c].div(pv);
        }
        for r in 0..4 {
            if r != col {
                let f = a[r][col];
                for c in 0..8 {
                    a[r][c] = a[r][c].sub(f.mul(a[col][c]));
                }
            }
        }
    }
    let mut sums = [0.0; 4];
    for (m, s) in sums.iter_mut().enumerate() {
        *s = (0..4).map(|j| a[m][4 + j].abs()).sum();
    }
    sums
}

/// Solve `v x = b` modulo `m` where `v` is invertible modulo the prime `p`.
fn solve_mod(v: &[Vec<BigInt>], m: &BigInt, p: u64) -> Option<Vec<Vec<BigInt>>> {
    let n = v.len();
    let pb = BigInt::from(p);
    let mut a: Vec<Vec<BigInt>> = v
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !reduce(&a[r][col], &pb).is_zero())?;
        a.swap(col, piv);
        let inv = mod_inverse(&a[col][col], m)?;
        for c in 0..2 * n {
            a[col][c] = reduce(&(&a[col][c] * &inv), m);
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col].clone();
                if f.is_zero() {
                    continue;
                }
                for c in 0..2 * n {
                    let v = &a[r][c] - &f * &a[col][c];
                    a[r][c] = reduce(&v, m);
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Roots of a monic squarefree `g` found by matching embeddings modulo a
/// prime power p^k with p ≡ 1 (mod 12).
fn cyclotomic_roots(g: &UniPoly<Cyclo>) -> Vec<Cyclo> {
    let deg = g.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    // D g has coefficients in Z[ζ], and since g is monic every root r has
    // D r integral, hence in Z[ζ].
    let den = g
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denominator()));
    let gi: Vec<[BigInt; 4]> = g.coeffs().iter().map(|c| cyclo_int_coords(c, &den)).collect();

    // coefficient bound for D r in the power basis
    let den_f = den.to_f64().unwrap_or(f64::INFINITY);
    let mut emb_bound: f64 = 0.0;
    for &k in &EMBEDDING_EXPONENTS {
        let cauchy = 1.0
            + g.coeffs()[..deg]
                .iter()
                .map(|c| embed_f64(c, k).abs())
                .fold(0.0, f64::max);
        emb_bound = emb_bound.max(den_f * cauchy);
    }
    let rowsum = inverse_vandermonde_rowsums()
        .into_iter()
        .fold(0.0, f64::max);
    let bound = emb_bound * rowsum * 1.01 + 2.0;
    if !bound.is_finite() {
        return Vec::new();
    }
    let bound = BigInt::from(bound.ceil() as u128);
    let target = &bound * 2 + 1;

    let phi12 = [1i64, 0, -1, 0, 1].map(BigInt::from).to_vec();
    let embedded = |zk: &BigInt, m: &BigInt| -> Vec<BigInt> {
        gi.iter()
            .map(|c| {
                let mut acc = BigInt::zero();
                let mut pw = BigInt::one();
                for a in c {
                    acc += a * &pw;
                    pw = reduce(&(pw * zk), m);
                }
                reduce(&acc, m)
            })
            .collect()
    };

    let chosen = primes_from(deg as u64 + 13)
        .filter(|p| p % 12 == 1)
        .take(200)
        .find_map(|p| {
            let pb = BigInt::from(p);
            if reduce(&den, &pb).is_zero() {
                return None;
            }
            let z = fp_roots(&to_fp(&phi12, p), p).into_iter().next()?;
            let zb = BigInt::from(z);
            let polys: Vec<Vec<u64>> = EMBEDDING_EXPONENTS
                .iter()
                .map(|&k| to_fp(&embedded(&zb.modpow(&BigInt::from(k), &pb), &pb), p))
                .collect();
            polys
                .iter()
                .all(|h| h.len() == deg + 1 && fp_is_squarefree(h, p))
                .then_some((p, z))
        });
    let Some((p, z)) = chosen else {
        return Vec::new();
    };

    let (z_lift, m) = hensel_lift(&phi12, z, p, &target);
    let zs: Vec<BigInt> = EMBEDDING_EXPONENTS
        .iter()
        .map(|&k| z_lift.modpow(&BigInt::from(k), &m))
        .collect();
    let mut images: Vec<Vec<BigInt>> = Vec::new();
    for zk in &zs {
        let h = embedded(zk, &m);
        let rs: Vec<BigInt> = fp_roots(&to_fp(&h, p), p)
            .into_iter()
            .map(|r| hensel_lift(&h, r, p, &(&m - 1)).0)
            .map(|r| reduce(&(r * &den), &m))
            .collect();
        if rs.is_empty() {
            return Vec::new();
        }
        images.push(rs);
    }
    let vander: Vec<Vec<BigInt>> = zs
        .iter()
        .map(|zk| {
            let mut pw = BigInt::one();
            (0..4)
                .map(|_| {
                    let v = pw.clone();
                    pw = reduce(&(&pw * zk), &m);
                    v
                })
                .collect()
        })
        .collect();
    let Some(vinv) = solve_mod(&vander, &m, p) else {
        return Vec::new();
    };

    let den_q = BigRational::from_integer(den.clone());
    let mut found: Vec<Cyclo> = Vec::new();
    for e0 in &images[0] {
        for e1 in &images[1] {
            for e2 in &images[2] {
                for e3 in &images[3] {
                    let e = [e0, e1, e2, e3];
                    let coords: Vec<BigInt> = (0..4)
                        .map(|r| {
                            let s: BigInt = (0..4).map(|j| &vinv[r][j] * e[j]).sum();
                            symmetric(&s, &m)
                        })
                        .collect();
                    if coords.iter().any(|c| c.abs() > bound) {
                        continue;
                    }
                    let c = Cyclo::new(
                        [0, 1, 2, 3].map(|k| BigRational::from_integer(coords[k].clone()) / &den_q),
                    );
                    if !found.contains(&c) && g.eval(&c).is_zero() {
                        found.push(c);
                    }
                }
            }
        }
    }
    found.sort();
    found
}
