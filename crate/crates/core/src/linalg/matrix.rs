use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::{rat, Rational};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![rat(0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Convenience constructor from integer literals, mostly for tests.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&n| rat(n)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<Rational> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn trace(&self) -> Rational {
        assert!(self.is_square(), "trace of a non-square matrix");
        let mut t = rat(0);
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    /// `self * v` with `v` a column vector.
    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| super::dot(self.row(i), v))
            .collect()
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Append `col` as an extra column.
    pub fn with_column(&self, col: &[Rational]) -> Matrix {
        assert_eq!(self.rows, col.len(), "with_column length mismatch");
        Matrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                col[i].clone()
            }
        })
    }

    pub fn rank(&self) -> usize {
        rref_with_transform(self).2.len()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "add shape");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "sub shape");
        Matrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "mul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if !b.is_zero() {
                        let cur = out.at(i, j) + &(a * b);
                        out.set(i, j, cur);
                    }
                }
            }
        }
        out
    }
}

/// Unique reduced row-echelon form of `m`; the row space is preserved.
pub fn rref(m: &Matrix) -> Matrix {
    rref_with_transform(m).0
}

/// Reduced row-echelon form together with the transform `t` such that
/// `t * m = rref(m)`, and the list of pivot columns.
pub(crate) fn rref_with_transform(m: &Matrix) -> (Matrix, Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut t = Matrix::identity(m.rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..a.cols {
        if r == a.rows {
            break;
        }
        let Some(p) = (r..a.rows).find(|&i| !a.at(i, c).is_zero()) else {
            continue;
        };
        swap_rows(&mut a, r, p);
        swap_rows(&mut t, r, p);
        let inv = Rational::one() / a.at(r, c).clone();
        scale_row(&mut a, r, &inv);
        scale_row(&mut t, r, &inv);
        for i in 0..a.rows {
            if i != r && !a.at(i, c).is_zero() {
                let factor = a.at(i, c).clone();
                sub_scaled_row(&mut a, i, r, &factor);
                sub_scaled_row(&mut t, i, r, &factor);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, t, pivots)
}

fn swap_rows(m: &mut Matrix, i: usize, j: usize) {
    if i == j {
        return;
    }
    for c in 0..m.cols {
        let tmp = m.at(i, c).clone();
        let other = m.at(j, c).clone();
        m.set(i, c, other);
        m.set(j, c, tmp);
    }
}

fn scale_row(m: &mut Matrix, i: usize, factor: &Rational) {
    for c in 0..m.cols {
        let v = m.at(i, c) * factor;
        m.set(i, c, v);
    }
}

/// row_i -= factor * row_j
fn sub_scaled_row(m: &mut Matrix, i: usize, j: usize, factor: &Rational) {
    for c in 0..m.cols {
        let v = m.at(i, c) - &(m.at(j, c) * factor);
        m.set(i, c, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        let expect = Matrix::from_i64(&[&[1, 2], &[0, 0]]);
        assert_eq!(rref(&m), expect);
    }

    #[test]
    fn rref_identity_fixed() {
        let m = Matrix::identity(3);
        assert_eq!(rref(&m), m);
    }

    #[test]
    fn rref_permutation_rows() {
        let m = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(rref(&m), Matrix::identity(2));
    }

    #[test]
    fn rref_transform_reproduces() {
        let m = Matrix::from_i64(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]]);
        let (r, t, pivots) = rref_with_transform(&m);
        assert_eq!(&t * &m, r);
        assert_eq!(pivots, vec![0, 1, 2]);
    }

    #[test]
    fn pow_and_trace() {
        let m = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(m.pow(3), Matrix::from_i64(&[&[8, 0], &[0, 27]]));
        assert_eq!(m.trace(), rat(5));
        assert_eq!(m.pow(0), Matrix::identity(2));
    }
}
