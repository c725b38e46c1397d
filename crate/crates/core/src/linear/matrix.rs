//! Dense matrices over a [`Field`] with exact Gaussian elimination.
//!
//! Matrices act on column vectors: a map `k^cols -> k^rows`.

use std::fmt;

use super::scalar::{Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with the pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: &[Vec<Scalar>], cols: usize) -> Self {
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|r| r.iter().map(|v| field.from_i64(*v)).collect())
            .collect();
        Self::from_rows(field, &rows, cols)
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(field: Field, rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &(a * b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; with both factors' bases ordered, the result uses
    /// the row-major pair ordering `(i, j) -> i * n + j`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, c).is_zero() {
                    let factor = m.get(i, c).clone();
                    m.sub_row_multiple(i, r, &factor);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { matrix: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c) * s;
            self.set(r, c, v);
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let s = self.get(source, c);
            if s.is_zero() {
                continue;
            }
            let v = self.get(target, c) - &(s * factor);
            self.set(target, c, v);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots } = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of = vec![None; self.cols];
        for (row, &c) in pivots.iter().enumerate() {
            pivot_of[c] = Some(row);
        }
        for free in (0..self.cols).filter(|c| pivot_of[*c].is_none()) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = -matrix.get(row, free);
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the column space, as the pivot columns of the matrix.
    pub fn image_basis(&self) -> Vec<Vec<Scalar>> {
        self.rref().pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// Solves `self * X = rhs` for a matrix `X`; `None` when some column is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            for c in 0..rhs.cols {
                aug.set(r, self.cols + c, rhs.get(r, c).clone());
            }
        }
        let Rref { matrix, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (row, &c) in pivots.iter().enumerate() {
            for k in 0..rhs.cols {
                x.set(c, k, matrix.get(row, self.cols + k).clone());
            }
        }
        Some(x)
    }

    /// A left inverse of a matrix with full column rank.
    pub fn left_inverse(&self) -> Option<Matrix> {
        let t = self.transpose();
        let x = t.solve(&Matrix::identity(self.field, self.cols))?;
        Some(x.transpose())
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape());
        let mut out = self.clone();
        for (o, v) in out.data.iter_mut().zip(&other.data) {
            *o += v;
        }
        out
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_plus_nullity() {
        let f = Field::prime(3).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 2, 0, 1], &[2, 1, 0, 2], &[0, 0, 0, 0]]);
        assert_eq!(m.rank() + m.kernel().len(), m.cols());
        for v in m.kernel() {
            assert!(m.apply(&v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, &[&[1, 1], &[2, 2]]);
        let b = Matrix::from_i64(q, &[&[1], &[3]]);
        assert!(a.solve(&b).is_none());
        let b = Matrix::from_i64(q, &[&[1], &[2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn left_inverse_of_injection() {
        let q = Field::Rational;
        let a = Matrix::from_i64(q, &[&[1, 0], &[1, 1], &[0, 3]]);
        let l = a.left_inverse().unwrap();
        assert_eq!(l.mul(&a), Matrix::identity(q, 2));
    }
}
