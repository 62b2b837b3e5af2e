//! Exact linear algebra over a coefficient field: fraction-free elimination
//! for kernel bases and an incremental row reducer for span/rank queries.
//!
//! This module is deliberately independent of the Groebner engine; it is the
//! other side of every dual-route check in the test suite.

use num_traits::{One, Zero};

use crate::field::Field;

/// Dense matrix, row major.
#[derive(Clone, Debug)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix { rows: r, cols: c, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for j in 0..self.cols {
                    let e = self.get(i, j);
                    if !e.is_zero() && !v[j].is_zero() {
                        acc = acc + e.clone() * v[j].clone();
                    }
                }
                acc
            })
            .collect()
    }
}

/// Basis of the right kernel `{ v : M v = 0 }`, computed by fraction-free
/// (Bareiss) forward elimination followed by exact back substitution.
/// Deterministic: pivots are chosen in column order, first nonzero row.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let mut a = m.clone();
    let rows = a.rows;
    let cols = a.cols;
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut prev_pivot = F::one();
    let mut r = 0usize;
    for c in 0..cols {
        // Find pivot row at or below r.
        let mut pr = None;
        for i in r..rows {
            if !a.get(i, c).is_zero() {
                pr = Some(i);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        if pr != r {
            for j in 0..cols {
                let x = a.get(pr, j).clone();
                let y = a.get(r, j).clone();
                a.set(pr, j, y);
                a.set(r, j, x);
            }
        }
        let pivot = a.get(r, c).clone();
        // Bareiss step: row_i <- (pivot*row_i - a[i][c]*row_r) / prev_pivot.
        for i in (r + 1)..rows {
            let factor = a.get(i, c).clone();
            if factor.is_zero() && pivot.is_one() {
                // fast path: row already has pivot-compatible scaling
            }
            for j in 0..cols {
                let val = pivot.clone() * a.get(i, j).clone() - factor.clone() * a.get(r, j).clone();
                a.set(i, j, val.div_exact(&prev_pivot));
            }
        }
        prev_pivot = pivot;
        pivot_cols.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let rank = pivot_cols.len();
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut basis = Vec::with_capacity(free_cols.len());
    for &fc in &free_cols {
        let mut v = vec![F::zero(); cols];
        v[fc] = F::one();
        // Back substitution over the echelon rows.
        for i in (0..rank).rev() {
            let pc = pivot_cols[i];
            let mut acc = F::zero();
            for j in (pc + 1)..cols {
                let e = a.get(i, j);
                if !e.is_zero() && !v[j].is_zero() {
                    acc = acc + e.clone() * v[j].clone();
                }
            }
            if !acc.is_zero() {
                v[pc] = -acc.div_exact(a.get(i, pc));
            }
        }
        basis.push(v);
    }
    basis
}

pub fn rank<F: Field>(m: &Matrix<F>) -> usize {
    m.cols - kernel_basis(m).len()
}

/// Incremental reduced row space: supports residue computation and rank
/// queries while rows arrive. Pivot entries are normalized to one.
pub struct RowSpace<F: Field> {
    cols: usize,
    rows: Vec<(usize, Vec<F>)>, // (pivot column, normalized row)
}

impl<F: Field> RowSpace<F> {
    pub fn new(cols: usize) -> Self {
        RowSpace { cols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current space.
    pub fn residue(&self, mut v: Vec<F>) -> Vec<F> {
        assert_eq!(v.len(), self.cols);
        for (pc, row) in &self.rows {
            let c = v[*pc].clone();
            if c.is_zero() {
                continue;
            }
            for j in *pc..self.cols {
                if !row[j].is_zero() {
                    v[j] = v[j].clone() - c.clone() * row[j].clone();
                }
            }
        }
        v
    }

    /// Insert `v` if independent; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let mut r = self.residue(v);
        let Some(pc) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pc].inv();
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        // Keep rows sorted by pivot column for stable reduction.
        let at = self
            .rows
            .iter()
            .position(|(p, _)| *p > pc)
            .unwrap_or(self.rows.len());
        self.rows.insert(at, (pc, r));
        true
    }

    pub fn contains(&self, v: Vec<F>) -> bool {
        self.residue(v).iter().all(|x| x.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigRational;
    use num::BigInt;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn kernel_of_simple_matrix() {
        // x + y + z = 0, y - z = 0 -> kernel spanned by (-2, 1, 1).
        let m = Matrix::from_rows(vec![
            vec![q(1), q(1), q(1)],
            vec![q(0), q(1), q(-1)],
        ]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 1);
        assert!(m.mul_vec(&k[0]).iter().all(|x| x == &q(0)));
        let ratio = k[0][0].clone() / k[0][1].clone();
        assert_eq!(ratio, q(-2));
    }

    #[test]
    fn kernel_spans_and_rank() {
        let m = Matrix::from_rows(vec![
            vec![q(2), q(4), q(6)],
            vec![q(1), q(2), q(3)],
            vec![q(0), q(0), q(0)],
        ]);
        assert_eq!(rank(&m), 1);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|x| x == &q(0)));
        }
    }

    #[test]
    fn rowspace_insert_and_contains() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(vec![q(1), q(2), q(0)]));
        assert!(s.insert(vec![q(0), q(1), q(1)]));
        assert!(!s.insert(vec![q(1), q(3), q(1)]));
        assert!(s.contains(vec![q(2), q(5), q(1)]));
        assert!(!s.contains(vec![q(0), q(0), q(1)]));
        assert_eq!(s.rank(), 2);
    }

    #[test]
    fn kernel_matches_rowspace_rank_on_random_like_data() {
        // A few fixed matrices double-checked through both routes.
        let mats = [
            vec![vec![q(1), q(0), q(2), q(1)], vec![q(3), q(1), q(0), q(0)]],
            vec![vec![q(0), q(0)], vec![q(0), q(0)]],
            vec![vec![q(5)]],
        ];
        for rows in mats {
            let m = Matrix::from_rows(rows.clone());
            let mut rs = RowSpace::new(m.cols);
            for r in &rows {
                rs.insert(r.clone());
            }
            assert_eq!(rs.rank() + kernel_basis(&m).len(), m.cols);
        }
    }
}
