use super::{height, Rational, SparseVec};
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Index, IndexMut};

/// Dense row-major matrix over the rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Row-major constructor that keeps the shape even when a side is zero.
    pub fn from_flat(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Matrix { rows, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| super::int(x)).collect()).collect())
    }

    pub fn from_cols(rows: usize, cols: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m[(i, j)] = c[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn col_sparse(&self, j: usize) -> SparseVec {
        (0..self.rows)
            .filter(|&i| !self[(i, j)].is_zero())
            .map(|i| (i, self[(i, j)].clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// First nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data.iter().position(|x| !x.is_zero()).map(|k| (k / self.cols, k % self.cols))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let brow = other.row(k);
                for (j, b) in brow.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul_sparse(&self, v: &SparseVec) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.rows];
        for (j, c) in v {
            for (i, o) in out.iter_mut().enumerate() {
                let a = &self[(i, *j)];
                if !a.is_zero() {
                    *o += a * c;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn neg(&self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }

    /// Matrix commutator `AB - BA`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self[(r0 + i, c0 + j)] = b[(i, j)].clone();
            }
        }
    }

    pub fn add_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                if !b[(i, j)].is_zero() {
                    self[(r0 + i, c0 + j)] += &b[(i, j)];
                }
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        let mut b = Matrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                b[(i, j)] = self[(r0 + i, c0 + j)].clone();
            }
        }
        b
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols);
        m.set_block(0, 0, self);
        m.set_block(self.rows, 0, other);
        m
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = &other[(k, l)];
                        if !b.is_zero() {
                            m[(i * other.rows + k, j * other.cols + l)] = a * b;
                        }
                    }
                }
            }
        }
        m
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // smallest-height nonzero pivot limits coefficient growth
            let mut best: Option<(usize, u64)> = None;
            for i in r..m.rows {
                let x = &m[(i, c)];
                if !x.is_zero() {
                    let h = height(x);
                    if best.is_none_or(|(_, bh)| h < bh) {
                        best = Some((i, h));
                    }
                }
            }
            let Some((p, _)) = best else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                if !m[(r, j)].is_zero() {
                    let v = &m[(r, j)] * &inv;
                    m[(r, j)] = v;
                }
            }
            let prow: Vec<(usize, Rational)> = (c..m.cols)
                .filter(|&j| !m[(r, j)].is_zero())
                .map(|j| (j, m[(r, j)].clone()))
                .collect();
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for (j, v) in &prow {
                    let d = &f * v;
                    m[(i, *j)] -= d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().1.len()
    }

    /// Rank together with a basis of the right kernel.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Rational>>) {
        let (e, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -e[(r, free)].clone();
            }
            basis.push(v);
        }
        (pivots.len(), basis)
    }

    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        self.rank_and_kernel().1
    }

    /// Solves `self * x = b`; `None` when `b` is outside the column space.
    pub fn solve_linear(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side has wrong length");
        let aug = self.hstack(&Matrix::from_cols(self.rows, &[b.to_vec()]));
        let (e, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = e[(r, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let (e, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(e.block(0, n, n, n))
    }

    /// Basis of the column space, taken from the pivot columns.
    pub fn column_basis(&self) -> Vec<Vec<Rational>> {
        let (_, pivots) = self.rref();
        pivots.iter().map(|&j| self.col(j)).collect()
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(super::to_f64).collect()).collect()
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(i).iter().map(super::format_rational).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, int};
    use super::*;

    #[test]
    fn identity_has_full_rank() {
        let (r, k) = Matrix::identity(3).rank_and_kernel();
        assert_eq!(r, 3);
        assert!(k.is_empty());
    }

    #[test]
    fn zero_matrix_kernel() {
        let (r, k) = Matrix::zeros(2, 2).rank_and_kernel();
        assert_eq!(r, 0);
        assert_eq!(k.len(), 2);
    }

    #[test]
    fn rank_one_kernel() {
        let m = Matrix::from_i64(&[&[1, 2], &[2, 4]]);
        let (r, k) = m.rank_and_kernel();
        assert_eq!(r, 1);
        assert_eq!(k, vec![vec![int(-2), int(1)]]);
    }

    #[test]
    fn solve_examples() {
        let id = Matrix::identity(2);
        assert_eq!(id.solve_linear(&[int(1), int(2)]), Some(vec![int(1), int(2)]));
        assert_eq!(Matrix::zeros(2, 2).solve_linear(&[int(1), int(0)]), None);
        let d = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(d.solve_linear(&[int(1), int(1)]), Some(vec![frac(1, 2), frac(1, 3)]));
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Matrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Matrix::identity(2));
        assert!(Matrix::from_i64(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}
