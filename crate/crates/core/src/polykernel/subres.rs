//! Determinants, Sylvester resultants and the subresultant sequence, over
//! any ring with exact division (so polynomial coefficients work too).

use crate::exactnum::Ring;

use super::UniPoly;

/// Fraction-free (Bareiss) determinant.
pub fn determinant<R: Ring>(rows: &[Vec<R>]) -> R {
    let n = rows.len();
    if n == 0 {
        return R::one();
    }
    let mut m: Vec<Vec<R>> = rows.to_vec();
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign_flip {
        d.neg()
    } else {
        d
    }
}

/// Rows `x^{k} f` for k = count-1 .. 0 as coefficient vectors of length
/// `width`, highest power first; `f` is read with formal degree `deg`.
fn shifted_rows<R: Ring>(f: &UniPoly<R>, deg: usize, count: usize, width: usize) -> Vec<Vec<R>> {
    (0..count)
        .map(|r| {
            let shift = count - 1 - r;
            let mut row = vec![R::zero(); width];
            for k in 0..=deg {
                // coefficient of x^{k+shift} sits at column width-1-(k+shift)
                let pos = k + shift;
                if pos < width {
                    row[width - 1 - pos] = f.coeff(k);
                }
            }
            row
        })
        .collect()
}

/// j-th subresultant polynomial of `f`, `g` read with formal degrees
/// `m >= n`, for `j < n`.
fn subresultant_formal<R: Ring>(f: &UniPoly<R>, m: usize, g: &UniPoly<R>, n: usize, j: usize) -> UniPoly<R> {
    debug_assert!(j < n || (n == 0 && j == 0));
    let size = m + n - 2 * j;
    // columns for x^{m+n-j-1} .. x^{j}; the last one is replaced per k
    let width = m + n - j;
    let mut rows = shifted_rows(f, m, n - j, width);
    rows.extend(shifted_rows(g, n, m - j, width));
    let mut coeffs = Vec::with_capacity(j + 1);
    for k in 0..=j {
        let mat: Vec<Vec<R>> = rows
            .iter()
            .map(|row| {
                let mut r: Vec<R> = row[..size - 1].to_vec();
                // the entry multiplying x^k in this row's polynomial
                r.push(row[width - 1 - k].clone());
                r
            })
            .collect();
        coeffs.push(determinant(&mat));
    }
    UniPoly::new(coeffs)
}

/// Principal subresultant coefficient psc_j of `f`, `g` with formal degrees
/// `m >= n`; psc_0 is the resultant.
pub fn subresultant_coeff<R: Ring>(f: &UniPoly<R>, m: usize, g: &UniPoly<R>, n: usize, j: usize) -> R {
    assert!(m >= n, "formal degrees must satisfy m >= n");
    if j == n {
        return if m == n && n > 0 { g.coeff(n) } else { g.coeff(n).pow((m - n) as u32) };
    }
    let size = m + n - 2 * j;
    let width = m + n - 2 * j;
    // columns x^{m+n-j-1} .. x^{j}: shift every row down by j
    let mut rows = shifted_rows_top(f, m, n - j, width, j);
    rows.extend(shifted_rows_top(g, n, m - j, width, j));
    debug_assert_eq!(rows.len(), size);
    determinant(&rows)
}

fn shifted_rows_top<R: Ring>(f: &UniPoly<R>, deg: usize, count: usize, width: usize, low: usize) -> Vec<Vec<R>> {
    (0..count)
        .map(|r| {
            let shift = count - 1 - r;
            let mut row = vec![R::zero(); width];
            for k in 0..=deg {
                let pos = k + shift;
                if pos >= low && pos - low < width {
                    row[width - 1 - (pos - low)] = f.coeff(k);
                }
            }
            row
        })
        .collect()
}

/// Sylvester resultant with formal degrees `m`, `n`.
pub fn resultant_formal<R: Ring>(f: &UniPoly<R>, m: usize, g: &UniPoly<R>, n: usize) -> R {
    if m >= n {
        subresultant_coeff(f, m, g, n, 0)
    } else {
        let r = subresultant_coeff(g, n, f, m, 0);
        if (m * n) % 2 == 1 {
            r.neg()
        } else {
            r
        }
    }
}

/// Resultant of two nonzero polynomials at their actual degrees.
pub fn resultant<R: Ring>(f: &UniPoly<R>, g: &UniPoly<R>) -> R {
    match (f.degree(), g.degree()) {
        (Some(m), Some(n)) => resultant_formal(f, m, g, n),
        _ => R::zero(),
    }
}

/// The subresultant polynomials S_0, ..., S_n of `f` and `g`
/// (deg f = m >= deg g = n), with the convention S_n = lc(g)^{m-n-1} g when
/// m > n and S_n = g when m = n.
#[derive(Clone, Debug)]
pub struct Subresultants<R: Ring> {
    polys: Vec<UniPoly<R>>,
}

impl<R: Ring> Subresultants<R> {
    pub fn get(&self, j: usize) -> &UniPoly<R> {
        &self.polys[j]
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn resultant(&self) -> R {
        self.polys[0].coeff(0)
    }

    /// The nonzero subresultant of lowest index; it is proportional to
    /// gcd(f, g), and its index is the gcd degree.
    pub fn gcd_candidate(&self) -> (usize, &UniPoly<R>) {
        let j = self
            .polys
            .iter()
            .position(|p| !p.is_zero())
            .expect("S_n is nonzero");
        (j, &self.polys[j])
    }

    /// Sequence in descending index order, S_n first.
    pub fn descending(&self) -> impl Iterator<Item = &UniPoly<R>> {
        self.polys.iter().rev()
    }
}

pub fn subresultant_chain<R: Ring>(f: &UniPoly<R>, g: &UniPoly<R>) -> Subresultants<R> {
    let m = f.degree().expect("f must be nonzero");
    let n = g.degree().expect("g must be nonzero");
    assert!(m >= n, "subresultant chain needs deg f >= deg g");
    let mut polys: Vec<UniPoly<R>> = (0..n).map(|j| subresultant_formal(f, m, g, n, j)).collect();
    let top = if m > n { g.scale(&g.lc().pow((m - n - 1) as u32)) } else { g.clone() };
    polys.push(top);
    Subresultants { polys }
}
