//! Dense matrices and fraction-free (Bareiss) elimination.

use std::fmt;

use num_traits::{One, Zero};

use crate::scalar::Scalar;
use crate::{Error, Integer, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::size("ragged rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
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

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::size(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let prod = a.clone() * o[(k, j)].clone();
                    let cell = &mut out[(i, j)];
                    *cell = cell.clone() + prod;
                }
            }
        }
        Ok(out)
    }

    /// Fraction-free row echelon form in place; returns the rank, the number
    /// of row swaps, and the last pivot.
    fn bareiss_echelon(&mut self) -> (usize, usize, T) {
        let (n, m) = (self.rows, self.cols);
        let mut prev = T::one();
        let mut r = 0;
        let mut swaps = 0;
        for c in 0..m {
            if r == n {
                break;
            }
            let Some(piv) = (r..n).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            if piv != r {
                self.swap_rows(piv, r);
                swaps += 1;
            }
            let pr = self[(r, c)].clone();
            for i in r + 1..n {
                let f = self[(i, c)].clone();
                for j in c + 1..m {
                    let v = (pr.clone() * self[(i, j)].clone() - f.clone() * self[(r, j)].clone())
                        / prev.clone();
                    self[(i, j)] = v;
                }
                self[(i, c)] = T::zero();
            }
            prev = pr;
            r += 1;
        }
        (r, swaps, prev)
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
        self.clone().bareiss_echelon().0
    }

    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::size("determinant of a non-square matrix"));
        }
        if self.rows == 0 {
            return Ok(T::one());
        }
        let (r, swaps, last) = self.clone().bareiss_echelon();
        if r < self.rows {
            return Ok(T::zero());
        }
        Ok(if swaps % 2 == 1 {
            T::zero() - last
        } else {
            last
        })
    }

    /// `(adj(A), det(A))` by fraction-free Gauss-Jordan on `[A | I]`.
    /// Fails on singular input.
    pub fn adjugate_det(&self) -> Result<(Self, T)> {
        if !self.is_square() {
            return Err(Error::size("inverse of a non-square matrix"));
        }
        let n = self.rows;
        let mut a = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                T::one()
            } else {
                T::zero()
            }
        });
        let mut prev = T::one();
        for k in 0..n {
            let Some(piv) = (k..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Err(Error::Singular { kernel: vec![] });
            };
            a.swap_rows(piv, k);
            let pk = a[(k, k)].clone();
            for i in 0..n {
                if i == k {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..2 * n {
                    if j == k {
                        continue;
                    }
                    let v = (pk.clone() * a[(i, j)].clone() - f.clone() * a[(k, j)].clone())
                        / prev.clone();
                    a[(i, j)] = v;
                }
                a[(i, k)] = T::zero();
            }
            prev = pk;
        }
        // every diagonal entry now equals ±det; the right half is the
        // adjugate scaled by the same sign
        let d = a[(0, 0)].clone();
        let adj = Self::from_fn(n, n, |i, j| a[(i, n + j)].clone());
        Ok((adj, d))
    }

    /// Leading principal minors `det(A[..i, ..i])` for `i = 1..=n`.
    pub fn leading_minors(&self) -> Result<Vec<T>> {
        (1..=self.rows.min(self.cols))
            .map(|i| Self::from_fn(i, i, |a, b| self[(a, b)].clone()).det())
            .collect()
    }
}

impl Matrix<Rational> {
    pub fn inverse(&self) -> Result<Self> {
        match self.adjugate_det() {
            Ok((adj, d)) => Ok(adj.map(|x| x / d.clone())),
            Err(Error::Singular { .. }) => Err(Error::Singular {
                kernel: self.kernel_vector().unwrap_or_default(),
            }),
            Err(e) => Err(e),
        }
    }

    /// A nonzero vector `v` with `A v = 0`, if one exists.
    pub fn kernel_vector(&self) -> Option<Vec<Rational>> {
        let (n, m) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m {
            let Some(piv) = (r..n).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(piv, r);
            let inv = Rational::one() / a[(r, c)].clone();
            for j in 0..m {
                a[(r, j)] = a[(r, j)].clone() * inv.clone();
            }
            for i in 0..n {
                if i != r && !a[(i, c)].is_zero() {
                    let f = a[(i, c)].clone();
                    for j in 0..m {
                        let v = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                        a[(i, j)] = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == n {
                break;
            }
        }
        let free = (0..m).find(|c| !pivots.contains(c))?;
        let mut v = vec![Rational::zero(); m];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[(row, free)].clone();
        }
        Some(v)
    }
}

impl Matrix<Integer> {
    pub fn to_rational(&self) -> Matrix<Rational> {
        self.map(|x| Rational::from_integer(x.clone()))
    }

    /// Exact inverse over the rationals through the integer adjugate.
    pub fn inverse_rational(&self) -> Result<Matrix<Rational>> {
        match self.adjugate_det() {
            Ok((adj, d)) => Ok(adj.map(|x| Rational::new(x.clone(), d.clone()))),
            Err(Error::Singular { .. }) => Err(Error::Singular {
                kernel: self.to_rational().kernel_vector().unwrap_or_default(),
            }),
            Err(e) => Err(e),
        }
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
