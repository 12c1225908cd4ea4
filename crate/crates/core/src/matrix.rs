//! Dense matrices over an arbitrary [`Ring`].
//!
//! Dimensions in this crate stay small (at most 70 x 56 for the
//! cohomology of an 8-dimensional algebra), so storage is a flat
//! row-major `Vec`.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Field, FromRational, Rational, Ring};

#[derive(Clone, PartialEq)]
pub struct Matrix<R> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: fmt::Debug> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<R> Index<(usize, usize)> for Matrix<R> {
    type Output = R;
    fn index(&self, (r, c): (usize, usize)) -> &R {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl<R> IndexMut<(usize, usize)> for Matrix<R> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut R {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

impl<R> Matrix<R> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn row(&self, r: usize) -> &[R] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn map<S>(&self, f: impl FnMut(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(n, x)| (n / cols, n % cols, x))
    }
}

impl<R: Clone> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != m) {
            return Err(Error::Input("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn column(&self, c: usize) -> Vec<R> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self[(rows[r], cols[c])].clone())
    }

    /// Block `[r0, r0+h) x [c0, c0+w)`.
    pub fn block(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        Matrix::from_fn(h, w, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        let (h, w) = (a.rows, a.cols);
        Matrix::from_fn(h + c.rows, w + b.cols, |r, col| match (r < h, col < w) {
            (true, true) => a[(r, col)].clone(),
            (true, false) => b[(r, col - w)].clone(),
            (false, true) => c[(r - h, col)].clone(),
            (false, false) => d[(r - h, col - w)].clone(),
        })
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { R::one() } else { R::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (r..self.cols).all(|c| self[(r, c)] == -self[(c, r)].clone())
            })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r..self.cols).all(|c| self[(r, c)] == self[(c, r)]))
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in mul_vec");
        (0..self.rows)
            .map(|r| {
                let mut acc = R::zero();
                for (c, x) in v.iter().enumerate() {
                    if !x.is_zero() && !self[(r, c)].is_zero() {
                        acc = acc + self[(r, c)].clone() * x.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn trace(&self) -> R {
        (0..self.rows.min(self.cols)).fold(R::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Pfaffian by recursive expansion along the first row.
    ///
    /// Only the strictly upper triangle is read, so the caller is responsible
    /// for skew-symmetry; see [`Matrix::pfaffian_checked`].
    pub fn pfaffian(&self) -> R {
        let idx: Vec<usize> = (0..self.rows).collect();
        pfaffian_rec(self, &idx)
    }

    pub fn pfaffian_checked(&self) -> Result<R> {
        if !self.is_square() || self.rows % 2 == 1 {
            return Err(Error::pre(format!(
                "pfaffian needs an even-order square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        if !self.is_skew() {
            return Err(Error::pre("pfaffian needs a skew-symmetric matrix"));
        }
        Ok(self.pfaffian())
    }

    /// Determinant by cofactor expansion; only for small orders or rings
    /// without division.
    pub fn determinant_expansion(&self) -> R {
        assert!(self.is_square());
        let idx: Vec<usize> = (0..self.rows).collect();
        det_rec(self, 0, &idx)
    }
}

fn pfaffian_rec<R: Ring>(m: &Matrix<R>, idx: &[usize]) -> R {
    match idx.len() {
        0 => R::one(),
        1 => R::zero(),
        2 => m[(idx[0], idx[1])].clone(),
        _ => {
            let first = idx[0];
            let mut acc = R::zero();
            for (pos, &j) in idx.iter().enumerate().skip(1) {
                let a = &m[(first, j)];
                if a.is_zero() {
                    continue;
                }
                let rest: Vec<usize> = idx
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != 0 && p != pos)
                    .map(|(_, &x)| x)
                    .collect();
                let term = a.clone() * pfaffian_rec(m, &rest);
                // sign (-1)^(pos+1) with pos counted from 1
                acc = if pos % 2 == 1 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

fn det_rec<R: Ring>(m: &Matrix<R>, row: usize, cols: &[usize]) -> R {
    if cols.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let a = &m[(row, c)];
        if a.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = a.clone() * det_rec(m, row + 1, &rest);
        acc = if pos % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Result of a reduction to reduced row echelon form.
#[derive(Debug, Clone)]
pub struct Rref<F> {
    pub rank: usize,
    pub rref: Matrix<F>,
    pub pivots: Vec<usize>,
    pub kernel: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    /// Exact Gauss-Jordan elimination.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for k in 0..m.cols {
                    m.data.swap(p * m.cols + k, r * m.cols + k);
                }
            }
            let inv = F::one() / m[(r, c)].clone();
            for k in c..m.cols {
                let v = m[(r, k)].clone();
                if !v.is_zero() {
                    m[(r, k)] = v * inv.clone();
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for k in c..m.cols {
                    if m[(r, k)].is_zero() {
                        continue;
                    }
                    let v = m[(i, k)].clone() - f.clone() * m[(r, k)].clone();
                    m[(i, k)] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        let kernel = kernel_from_rref(&m, &pivots);
        Rref {
            rank: pivots.len(),
            rref: m,
            pivots,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    pub fn kernel(&self) -> Vec<Vec<F>> {
        self.rref().kernel
    }

    pub fn determinant(&self) -> F {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return F::zero();
            };
            if p != c {
                for k in 0..n {
                    m.data.swap(p * n + k, c * n + k);
                }
                det = -det;
            }
            let piv = m[(c, c)].clone();
            det = det * piv.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() / piv.clone();
                for k in c..n {
                    let v = m[(i, k)].clone() - f.clone() * m[(c, k)].clone();
                    m[(i, k)] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let red = aug.rref();
        if red.pivots.len() < n || red.pivots[n - 1] != n - 1 {
            return None;
        }
        Some(red.rref.block(0, n, n, n))
    }

    /// Leading principal minors, in increasing order.
    pub fn leading_principal_minors(&self) -> Vec<F> {
        (1..=self.rows)
            .map(|k| self.block(0, 0, k, k).determinant())
            .collect()
    }
}

fn kernel_from_rref<F: Field>(m: &Matrix<F>, pivots: &[usize]) -> Vec<Vec<F>> {
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); m.cols];
            v[f] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, f)].clone();
            }
            v
        })
        .collect()
}

impl Matrix<Rational> {
    pub fn lift<S: FromRational>(&self) -> Matrix<S> {
        self.map(S::from_rational)
    }
}

impl<R: Ring> Add for &Matrix<R> {
    type Output = Matrix<R>;
    fn add(self, o: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<R: Ring> Sub for &Matrix<R> {
    type Output = Matrix<R>;
    fn sub(self, o: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<R: Ring> Neg for &Matrix<R> {
    type Output = Matrix<R>;
    fn neg(self) -> Matrix<R> {
        self.map(|x| -x.clone())
    }
}

impl<R: Ring> Mul for &Matrix<R> {
    type Output = Matrix<R>;
    fn mul(self, o: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, o.rows, "dimension mismatch in matrix product");
        let mut out: Matrix<R> = Matrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let b = &o[(k, c)];
                    if b.is_zero() {
                        continue;
                    }
                    let v = out[(r, c)].clone() + a.clone() * b.clone();
                    out[(r, c)] = v;
                }
            }
        }
        out
    }
}
