//! Dense exact linear algebra over a finite field.
//!
//! Vectors are plain `Vec<Fe>`; the field is passed alongside. Matrices are
//! row-major.

use crate::error::{Error, Result};
use crate::field::{Fe, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Fe::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>, cols: usize) -> Matrix {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols);
            data.extend(row);
        }
        Matrix { rows: r, cols, data }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Fe>], rows: usize) -> Matrix {
        let mut m = Matrix::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for i in 0..rows {
                m.data[i * cols.len() + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Fe) {
        self.data[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[Fe] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn col(&self, j: usize) -> Vec<Fe> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, f: &Field, o: &Matrix) -> Matrix {
        assert_eq!(self.cols, o.rows);
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * o.cols..(i + 1) * o.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if !a.is_zero() {
                    f.axpy(dst, a, &o.data[k * o.cols..(k + 1) * o.cols]);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, f: &Field, v: &[Fe]) -> Vec<Fe> {
        (0..self.rows).map(|i| f.dot(self.row(i), v)).collect()
    }

    pub fn add(&self, f: &Field, o: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, f: &Field, o: &Matrix) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scaled(&self, f: &Field, c: Fe) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| f.mul(a, c)).collect() }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        let cols = self.cols;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]).unwrap();
            f.scale(&mut self.data[r * cols..(r + 1) * cols], inv);
            let pivot_row: Vec<Fe> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let a = self.data[i * cols + c];
                if !a.is_zero() {
                    let na = f.neg(a);
                    f.axpy(&mut self.data[i * cols + c..(i + 1) * cols], na, &pivot_row);
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(r * cols);
        self.rows = r;
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        let mut echelon = Echelon::new(self.cols);
        for i in 0..self.rows {
            echelon.insert(f, self.row(i).to_vec());
            if echelon.rank() == self.cols {
                break;
            }
        }
        echelon.rank()
    }

    /// Basis of the right kernel `{v : M v = 0}` as a subspace of `F^cols`.
    pub fn kernel(&self, f: &Field) -> Subspace {
        let mut echelon = Echelon::new(self.cols);
        for i in 0..self.rows {
            echelon.insert(f, self.row(i).to_vec());
            if echelon.rank() == self.cols {
                break;
            }
        }
        echelon.kernel(f)
    }

    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::ShapeMismatch("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            aug.data[i * 2 * n..i * 2 * n + n].copy_from_slice(self.row(i));
            aug.data[i * 2 * n + n + i] = Fe::ONE;
        }
        let piv = aug.rref(f);
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            out.data[i * n..(i + 1) * n].copy_from_slice(&aug.data[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Ok(out)
    }

    /// Some solution `x` of `M x = b`, if one exists.
    pub fn solve(&self, f: &Field, b: &[Fe]) -> Option<Vec<Fe>> {
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            aug.data[i * (n + 1)..i * (n + 1) + n].copy_from_slice(self.row(i));
            aug.data[i * (n + 1) + n] = b[i];
        }
        let piv = aug.rref(f);
        if piv.last() == Some(&n) {
            return None;
        }
        let mut x = vec![Fe::ZERO; n];
        for (r, &c) in piv.iter().enumerate() {
            x[c] = aug.data[r * (n + 1) + n];
        }
        Some(x)
    }

    pub fn pow(&self, f: &Field, mut e: u64) -> Matrix {
        let mut r = Matrix::identity(self.rows);
        let mut b = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(f, &b);
            }
            e >>= 1;
            if e > 0 {
                b = b.mul(f, &b);
            }
        }
        r
    }
}

/// Incrementally maintained reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Echelon {
        Echelon { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows; returns the remainder.
    pub fn reduce(&self, f: &Field, mut v: Vec<Fe>) -> Vec<Fe> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                f.axpy(&mut v[p..], f.neg(c), &row[p..]);
            }
        }
        v
    }

    /// Insert `v`; returns true if it was independent.
    pub fn insert(&mut self, f: &Field, v: Vec<Fe>) -> bool {
        debug_assert_eq!(v.len(), self.dim);
        let mut v = self.reduce(f, v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(v[p]).unwrap();
        f.scale(&mut v, inv);
        for row in self.rows.iter_mut() {
            let c = row[p];
            if !c.is_zero() {
                f.axpy(&mut row[p..], f.neg(c), &v[p..]);
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace { ambient: self.dim, rows: self.rows, pivots: self.pivots }
    }

    /// Null space of the row space, i.e. `{x : row . x = 0 for all rows}`.
    pub fn kernel(&self, f: &Field) -> Subspace {
        let n = self.dim;
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Fe::ZERO; n];
            v[free] = Fe::ONE;
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = f.neg(row[free]);
            }
            basis.push(v);
        }
        Subspace::span(f, n, basis)
    }
}

/// A subspace of `F^n` stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| {
                let mut v = vec![Fe::ZERO; ambient];
                v[i] = Fe::ONE;
                v
            })
            .collect();
        Subspace { ambient, rows, pivots: (0..ambient).collect() }
    }

    pub fn span<I: IntoIterator<Item = Vec<Fe>>>(f: &Field, ambient: usize, vectors: I) -> Subspace {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(f, v);
            if e.rank() == ambient {
                break;
            }
        }
        e.into_subspace()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
    pub fn ambient(&self) -> usize {
        self.ambient
    }
    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.rows
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn contains(&self, f: &Field, v: &[Fe]) -> bool {
        self.coords(f, v).is_some()
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, f: &Field, v: &[Fe]) -> Option<Vec<Fe>> {
        let c: Vec<Fe> = self.pivots.iter().map(|&p| v[p]).collect();
        let mut r = v.to_vec();
        for (row, &ci) in self.rows.iter().zip(&c) {
            if !ci.is_zero() {
                f.axpy(&mut r, f.neg(ci), row);
            }
        }
        r.iter().all(|x| x.is_zero()).then_some(c)
    }

    /// Remainder of `v` modulo the subspace, on the standard complement
    /// spanned by the non-pivot unit vectors.
    pub fn reduce(&self, f: &Field, v: &[Fe]) -> Vec<Fe> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p];
            if !c.is_zero() {
                f.axpy(&mut r, f.neg(c), row);
            }
        }
        r
    }

    /// Indices of the standard basis vectors completing this subspace.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&i| !is_pivot[i]).collect()
    }

    pub fn sum(&self, f: &Field, o: &Subspace) -> Subspace {
        Subspace::span(f, self.ambient, self.rows.iter().chain(&o.rows).cloned())
    }

    pub fn intersect(&self, f: &Field, o: &Subspace) -> Subspace {
        // x = sum a_i u_i = sum b_j w_j  <=> [U^T | -W^T] (a,b) = 0
        let n = self.ambient;
        let (du, dw) = (self.dim(), o.dim());
        let mut m = Matrix::zeros(n, du + dw);
        for (i, u) in self.rows.iter().enumerate() {
            for r in 0..n {
                m.set(r, i, u[r]);
            }
        }
        for (j, w) in o.rows.iter().enumerate() {
            for r in 0..n {
                m.set(r, du + j, f.neg(w[r]));
            }
        }
        let k = m.kernel(f);
        Subspace::span(
            f,
            n,
            k.basis().iter().map(|c| {
                let mut v = vec![Fe::ZERO; n];
                for (i, u) in self.rows.iter().enumerate() {
                    f.axpy(&mut v, c[i], u);
                }
                v
            }),
        )
    }

    pub fn is_subspace_of(&self, f: &Field, o: &Subspace) -> bool {
        self.rows.iter().all(|v| o.contains(f, v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_kernel() {
        let f = Field::prime(3).unwrap();
        let m = Matrix::from_rows(
            vec![vec![Fe(1), Fe(2), Fe(0)], vec![Fe(2), Fe(1), Fe(0)], vec![Fe(0), Fe(0), Fe(1)]],
            3,
        );
        // row 2 = 2 * row 1
        assert_eq!(m.rank(&f), 2);
        let k = m.kernel(&f);
        assert_eq!(k.dim(), 1);
        assert!(m.mul_vec(&f, &k.basis()[0]).iter().all(|x| x.is_zero()));
        assert_eq!(Matrix::identity(4).rank(&f), 4);
        assert_eq!(Matrix::zeros(4, 4).rank(&f), 0);
    }

    #[test]
    fn inverse_roundtrip() {
        let f = Field::new(3, 2).unwrap();
        let m = Matrix::from_rows(vec![vec![Fe(1), Fe(3)], vec![Fe(4), Fe(2)]], 2);
        let inv = m.inverse(&f).unwrap();
        assert_eq!(m.mul(&f, &inv), Matrix::identity(2));
    }

    #[test]
    fn intersection_dims() {
        let f = Field::prime(5).unwrap();
        let e = |i: usize| {
            let mut v = vec![Fe::ZERO; 4];
            v[i] = Fe::ONE;
            v
        };
        let a = Subspace::span(&f, 4, vec![e(0), e(1), e(2)]);
        let b = Subspace::span(&f, 4, vec![e(1), e(2), e(3)]);
        assert_eq!(a.intersect(&f, &b).dim(), 2);
        assert_eq!(a.sum(&f, &b).dim(), 4);
    }
}
