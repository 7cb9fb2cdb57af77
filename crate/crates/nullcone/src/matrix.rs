//! Small dense exact matrices.
//!
//! Everything here targets dimensions ≤ 16 (the largest bundled example is
//! 12-dimensional), so plain dense algorithms are both exact and fast.
//! Rank uses fraction-free (Bareiss) elimination on the
//! denominator-cleared integer matrix to keep intermediate entries small;
//! kernel/solve use ordinary rational reduction.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        DenseMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Integer entries, row-major.
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        DenseMatrix {
            rows,
            cols,
            data: entries.iter().map(|&v| scalar::int(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
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

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + &(a * b);
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn pow(&self, e: usize) -> Self {
        assert_eq!(self.rows, self.cols);
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t += self.get(i, i);
        }
        t
    }

    /// Exact rank over the rationals via fraction-free (Bareiss)
    /// elimination on the denominator-cleared integer matrix.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| {
                let mut lcm = BigInt::one();
                for c in 0..self.cols {
                    lcm = lcm.lcm(self.get(r, c).denom());
                }
                (0..self.cols)
                    .map(|c| {
                        let x = self.get(r, c);
                        x.numer() * (&lcm / x.denom())
                    })
                    .collect()
            })
            .collect();

        let mut rank = 0;
        let mut prev = BigInt::one();
        for col in 0..self.cols {
            let Some(pivot_row) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot_row);
            for r in rank + 1..self.rows {
                for c in col + 1..self.cols {
                    let v = (&m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c]) / &prev;
                    m[r][c] = v;
                }
                m[r][col] = BigInt::zero();
            }
            prev = m[rank][col].clone();
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            for c in 0..m.cols {
                let tmp = m.get(p, c).clone();
                m.set(p, c, m.get(row, c).clone());
                m.set(row, c, tmp);
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let f = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c) - &(&f * m.get(row, c));
                        m.set(r, c, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel {v : Mv = 0}.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.cols];
            v[free] = Scalar::one();
            for (prow, &pcol) in pivots.iter().enumerate() {
                v[pcol] = -r.get(prow, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of Mx = rhs, if any.
    pub fn solve(&self, rhs: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, rhs[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (prow, &pcol) in pivots.iter().enumerate() {
            x[pcol] = red.get(prow, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Result<Self, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, n + r, Scalar::one());
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut inv = Self::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, red.get(r, n + c).clone());
            }
        }
        Ok(inv)
    }

    pub fn det(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let cp = self.char_poly();
        let c0 = cp[0].clone();
        if self.rows % 2 == 0 {
            c0
        } else {
            -c0
        }
    }

    /// Characteristic polynomial det(λI − M) by Faddeev–LeVerrier.
    /// Returns coefficients c₀..cₙ of Σ cᵢ λ^i (monic, cₙ = 1).
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Self::zeros(n, n);
        for k in 1..=n {
            m = self.mul(&m);
            for i in 0..n {
                let v = m.get(i, i) + &coeffs[n - k + 1];
                m.set(i, i, v);
            }
            let prod = self.mul(&m);
            coeffs[n - k] = -(prod.trace() / scalar::int(k as i64));
        }
        coeffs
    }

    /// Least m ≥ 1 with M^m = 0, or None when M^n ≠ 0.
    pub fn nilpotency_index(&self) -> Option<usize> {
        assert_eq!(self.rows, self.cols);
        let mut p = Self::identity(self.rows);
        for m in 1..=self.rows {
            p = p.mul(self);
            if p.is_zero() {
                return Some(m);
            }
        }
        None
    }

    /// Jordan block sizes of a nilpotent matrix, descending, size-1 blocks
    /// included. The number of blocks of size ≥ j is rank(M^(j−1)) − rank(M^j).
    pub fn jordan_partition_nilpotent(&self) -> Result<Vec<usize>, Error> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let idx = self.nilpotency_index().ok_or(Error::NotNilpotent)?;
        let mut ranks = Vec::with_capacity(idx + 1);
        let mut p = Self::identity(n);
        ranks.push(n);
        for _ in 0..idx {
            p = p.mul(self);
            ranks.push(p.rank());
        }
        // blocks_ge[j] = number of blocks of size ≥ j, 1-based
        let blocks_ge: Vec<usize> = (1..=idx).map(|j| ranks[j - 1] - ranks[j]).collect();
        let mut partition = Vec::new();
        for j in (1..=idx).rev() {
            let count = blocks_ge[j - 1] - if j < idx { blocks_ge[j] } else { 0 };
            for _ in 0..count {
                partition.push(j);
            }
        }
        partition.sort_unstable_by(|a, b| b.cmp(a));
        Ok(partition)
    }

    /// Nonzero Jordan blocks only (size ≥ 2): the "Jordan type".
    pub fn jordan_type(&self) -> Result<Vec<usize>, Error> {
        Ok(self
            .jordan_partition_nilpotent()?
            .into_iter()
            .filter(|&s| s >= 2)
            .collect())
    }

    /// Matrix of the restriction to the span of `basis` (must be invariant).
    pub fn restrict(&self, basis: &[Vec<Scalar>]) -> Option<Self> {
        let d = basis.len();
        if d == 0 {
            return Some(Self::zeros(0, 0));
        }
        // columns of S are the basis vectors
        let s = Self::from_rows(basis.to_vec()).transpose();
        let mut out = Self::zeros(d, d);
        for (j, v) in basis.iter().enumerate() {
            let img = self.mul_vec(v);
            let coords = s.solve(&img)?;
            for i in 0..d {
                out.set(i, j, coords[i].clone());
            }
        }
        Some(out)
    }
}

/// Single nilpotent Jordan block of the given size (ones on the superdiagonal).
pub fn jordan_block_nilpotent(size: usize) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(size, size);
    for i in 0..size.saturating_sub(1) {
        m.set(i, i + 1, Scalar::one());
    }
    m
}
