//! Dense exact linear algebra over a [`Field`](crate::field::Field).
//!
//! Everything here is plain Gaussian elimination with deterministic pivot
//! choice (first nonzero entry in column order), which keeps every derived
//! basis canonical: resolutions, homology representatives and quotient
//! complements come out identical from run to run.

use crate::field::Field;

/// A dense row-major matrix.
#[derive(Debug, Clone)]
pub struct Mat<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<F::Elem>,
}

impl<F: Field> Mat<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Mat { rows, cols, a: vec![field.zero(); rows * cols] }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F::Elem {
        &self.a[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F::Elem) {
        self.a[r * self.cols + c] = v;
    }

    /// Reduces `self` to reduced row echelon form in place; returns the pivot
    /// columns in order.
    pub fn rref(&mut self, field: &F) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let mut sel = None;
            for r in row..self.rows {
                if !field.is_zero(self.get(r, col)) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != row {
                for c in 0..self.cols {
                    self.a.swap(row * self.cols + c, sel * self.cols + c);
                }
            }
            let inv = field.inv(self.get(row, col)).expect("pivot nonzero");
            for c in col..self.cols {
                let v = field.mul(self.get(row, c), &inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r != row && !field.is_zero(self.get(r, col)) {
                    let factor = field.neg(self.get(r, col));
                    for c in col..self.cols {
                        let t = field.mul(&factor, self.get(row, c));
                        let v = field.add(self.get(r, c), &t);
                        self.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, field: &F) -> usize {
        let mut m = self.clone();
        m.rref(field).len()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self, field: &F) -> Option<Mat<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zero(field, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, field.one());
        }
        let pivots = aug.rref(field);
        if pivots.len() != n || pivots.iter().enumerate().any(|(k, &p)| p != k) {
            return None;
        }
        let mut inv = Mat::zero(field, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, aug.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// A basis of the right kernel `{x : A x = 0}`, one vector per free column.
    pub fn kernel(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let mut m = self.clone();
        let pivots = m.rref(field);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = field.neg(m.get(r, free));
            }
            basis.push(v);
        }
        basis
    }
}

/// An incremental row-echelon span with membership reduction.
///
/// Rows are kept normalized (pivot entry 1) and fully reduced against each
/// other, so `reduce` is a canonical projection modulo the span.
#[derive(Debug, Clone)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    /// Sorted by pivot column: (pivot, row).
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Echelon { field: field.clone(), dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduces `v` modulo the span in place; afterwards `v` is zero iff it was
    /// in the span.
    pub fn reduce(&self, v: &mut [F::Elem]) {
        let f = &self.field;
        for (p, row) in &self.rows {
            if !f.is_zero(&v[*p]) {
                let factor = f.neg(&v[*p]);
                for c in *p..self.dim {
                    if !f.is_zero(&row[c]) {
                        let t = f.mul(&factor, &row[c]);
                        v[c] = f.add(&v[c], &t);
                    }
                }
            }
        }
    }

    /// Reduces and, if a nonzero remainder survives, adds it as a new row.
    /// Returns the pivot column of the new row, or `None` if `v` was already
    /// in the span.
    pub fn insert(&mut self, mut v: Vec<F::Elem>) -> Option<usize> {
        self.reduce(&mut v);
        let f = self.field.clone();
        let pivot = (0..self.dim).find(|&c| !f.is_zero(&v[c]))?;
        let inv = f.inv(&v[pivot]).expect("nonzero pivot");
        for c in pivot..self.dim {
            v[c] = f.mul(&v[c], &inv);
        }
        // Back-substitute into existing rows to keep the span fully reduced.
        for (_, row) in self.rows.iter_mut() {
            if !f.is_zero(&row[pivot]) {
                let factor = f.neg(&row[pivot]);
                for c in pivot..self.dim {
                    if !f.is_zero(&v[c]) {
                        let t = f.mul(&factor, &v[c]);
                        row[c] = f.add(&row[c], &t);
                    }
                }
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(pos, (pivot, v));
        Some(pivot)
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|x| self.field.is_zero(x))
    }

    /// The pivot columns currently used by the span.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|(p, _)| *p).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Rat};

    #[test]
    fn rref_and_rank_fp() {
        let f = Fp::new(10007).unwrap();
        let mut m = Mat::zero(&f, 2, 3);
        // rows (1 2 3), (2 4 6): rank 1
        for (c, v) in [1u64, 2, 3].iter().enumerate() {
            m.set(0, c, *v);
        }
        for (c, v) in [2u64, 4, 6].iter().enumerate() {
            m.set(1, c, *v);
        }
        assert_eq!(m.rank(&f), 1);
        let ker = m.kernel(&f);
        assert_eq!(ker.len(), 2);
    }

    #[test]
    fn kernel_is_annihilated() {
        let f = Rat;
        let mut m = Mat::zero(&f, 2, 4);
        let entries = [[1i64, 0, 2, -1], [0, 1, 1, 1]];
        for r in 0..2 {
            for c in 0..4 {
                m.set(r, c, f.from_i64(entries[r][c]));
            }
        }
        for v in m.kernel(&f) {
            for r in 0..2 {
                let mut acc = f.zero();
                for c in 0..4 {
                    acc = f.add(&acc, &f.mul(m.get(r, c), &v[c]));
                }
                assert!(f.is_zero(&acc));
            }
        }
        assert_eq!(m.kernel(&f).len(), 2);
    }

    #[test]
    fn echelon_membership() {
        let f = Fp::new(10007).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.insert(vec![1, 2, 3]).is_some());
        assert!(e.insert(vec![2, 4, 6]).is_none());
        assert!(e.insert(vec![0, 1, 1]).is_some());
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&[1, 3, 4]));
        assert!(!e.contains(&[0, 0, 1]));
    }
}
