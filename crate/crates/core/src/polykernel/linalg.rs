//! Dense linear algebra over a field.

use crate::exactnum::Field;

/// Basis of { x : rows · x = 0 }, each vector with a one in its free
/// coordinate.
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inv().expect("pivot is nonzero");
        m[r] = m[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = m[i].iter().zip(&m[r]).map(|(a, b)| a.sub(&f.mul(b))).collect();
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    (0..ncols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![F::zero(); ncols];
            v[free] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = m[row][free].neg();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{q, BigRational};

    #[test]
    fn one_dimensional_kernel() {
        let rows = vec![vec![q(1, 1), q(2, 1), q(3, 1)], vec![q(0, 1), q(1, 1), q(1, 1)]];
        let k = nullspace(&rows, 3);
        assert_eq!(k, vec![vec![q(-1, 1), q(-1, 1), q(1, 1)]]);
        let none: Vec<Vec<BigRational>> = nullspace(&[vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(1, 1)]], 2);
        assert!(none.is_empty());
    }
}
