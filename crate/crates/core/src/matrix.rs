//! Exact arithmetic on integer upper unitriangular matrices.
//!
//! A matrix of size `n` is stored as the dense vector of its strictly-upper
//! entries in row-major order, so the derived `Ord` is the canonical order.

use std::fmt;
use std::ops::Mul;

use crate::error::MatrixError;

/// An `n x n` upper unitriangular matrix with integer entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnipotentMatrix {
    n: usize,
    entries: Vec<i64>,
}

/// Offset of position `(i, j)` (1-based, `i < j`) in the row-major entry vector.
#[inline]
pub fn offset(n: usize, i: usize, j: usize) -> usize {
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

#[inline]
fn sub(a: i64, b: i64) -> i64 {
    a.checked_sub(b).expect("matrix entry overflow")
}

#[inline]
fn mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("matrix entry overflow")
}

/// Number of strictly-upper positions of an `n x n` matrix.
#[inline]
pub fn upper_len(n: usize) -> usize {
    n * (n - 1) / 2
}

impl UnipotentMatrix {
    /// The identity matrix.
    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "matrix size must be at least 2");
        UnipotentMatrix { n, entries: vec![0; upper_len(n)] }
    }

    /// Builds a matrix from its strictly-upper entries in row-major order.
    pub fn from_upper(n: usize, entries: Vec<i64>) -> Result<Self, MatrixError> {
        if n < 2 {
            return Err(MatrixError::BadSize(n));
        }
        if entries.len() != upper_len(n) {
            return Err(MatrixError::BadLength { n, len: entries.len() });
        }
        Ok(UnipotentMatrix { n, entries })
    }

    /// Builds a matrix from `(i, j, value)` triples; unlisted positions are zero.
    pub fn from_triples(n: usize, triples: &[(usize, usize, i64)]) -> Result<Self, MatrixError> {
        if n < 2 {
            return Err(MatrixError::BadSize(n));
        }
        let mut m = Self::identity(n);
        for &(i, j, v) in triples {
            if i < 1 || i >= j || j > n {
                return Err(MatrixError::BadPosition { n, i, j });
            }
            m.entries[offset(n, i, j)] = v;
        }
        Ok(m)
    }

    /// A first-row matrix `(1, a_2, ..., a_n)`, the vector form of `P(n)`.
    pub fn from_first_row(values: &[i64]) -> Self {
        let n = values.len() + 1;
        let mut m = Self::identity(n);
        for (k, &v) in values.iter().enumerate() {
            m.entries[offset(n, 1, k + 2)] = v;
        }
        m
    }

    /// The elementary matrix `E_{i,j}(n)`.
    pub fn elementary(n: usize, i: usize, j: usize) -> Result<Self, MatrixError> {
        Self::from_triples(n, &[(i, j, 1)])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Strictly-upper entries in row-major order.
    pub fn upper(&self) -> &[i64] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[offset(self.n, i, j)]
    }

    /// Nonzero entries as `(i, j, value)` in position order.
    pub fn triples(&self) -> Vec<(usize, usize, i64)> {
        let mut out = Vec::new();
        for i in 1..self.n {
            for j in i + 1..=self.n {
                let v = self.get(i, j);
                if v != 0 {
                    out.push((i, j, v));
                }
            }
        }
        out
    }

    /// First-row entries `(a_12, ..., a_1n)`.
    pub fn first_row(&self) -> Vec<i64> {
        (2..=self.n).map(|j| self.get(1, j)).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|&v| v >= 0)
    }

    /// Largest strictly-upper entry; `NegativeEntry` if any entry is negative.
    pub fn max_entry(&self) -> Result<i64, MatrixError> {
        if !self.is_nonnegative() {
            return Err(MatrixError::NegativeEntry);
        }
        Ok(self.entries.iter().copied().max().unwrap_or(0))
    }

    /// Largest strictly-upper entry, for matrices known to be nonnegative.
    #[inline]
    pub fn max_nonneg(&self) -> i64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Sum of the strictly-upper entries.
    pub fn entry_sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// Entrywise comparison `self <= other`.
    pub fn leq_entrywise(&self, other: &Self) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    /// Exact product with overflow and size checks.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::SizeMismatch(self.n, other.n));
        }
        let n = self.n;
        let mut out = vec![0i64; upper_len(n)];
        for i in 1..n {
            for j in i + 1..=n {
                let mut acc = self.get(i, j).checked_add(other.get(i, j)).ok_or(MatrixError::Overflow)?;
                for k in i + 1..j {
                    let t = self.get(i, k).checked_mul(other.get(k, j)).ok_or(MatrixError::Overflow)?;
                    acc = acc.checked_add(t).ok_or(MatrixError::Overflow)?;
                }
                out[offset(n, i, j)] = acc;
            }
        }
        Ok(UnipotentMatrix { n, entries: out })
    }

    /// Exact inverse by back-substitution.
    pub fn checked_inverse(&self) -> Result<Self, MatrixError> {
        let n = self.n;
        let mut x = vec![0i64; upper_len(n)];
        // A X = I gives X_ij = -(A_ij + sum_{i<k<j} A_ik X_kj), filled by increasing j - i.
        for d in 1..n {
            for i in 1..=n - d {
                let j = i + d;
                let mut acc = self.get(i, j);
                for k in i + 1..j {
                    let t = self.get(i, k).checked_mul(x[offset(n, k, j)]).ok_or(MatrixError::Overflow)?;
                    acc = acc.checked_add(t).ok_or(MatrixError::Overflow)?;
                }
                x[offset(n, i, j)] = acc.checked_neg().ok_or(MatrixError::Overflow)?;
            }
        }
        Ok(UnipotentMatrix { n, entries: x })
    }

    /// Exact inverse. Panics on overflow.
    pub fn inverse(&self) -> Self {
        self.checked_inverse().expect("matrix inverse overflowed")
    }

    /// `self^{-1} * other`, solved directly.
    pub fn ldiv(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix size mismatch");
        let n = self.n;
        let mut x = vec![0i64; upper_len(n)];
        // A X = B: X_ij = B_ij - A_ij - sum_{i<k<j} A_ik X_kj.
        for d in 1..n {
            for i in 1..=n - d {
                let j = i + d;
                let mut acc = sub(other.get(i, j), self.get(i, j));
                for k in i + 1..j {
                    acc = sub(acc, mul(self.get(i, k), x[offset(n, k, j)]));
                }
                x[offset(n, i, j)] = acc;
            }
        }
        UnipotentMatrix { n, entries: x }
    }

    /// `self * a^{-1}`, solved directly.
    pub fn rdiv(&self, a: &Self) -> Self {
        assert_eq!(self.n, a.n, "matrix size mismatch");
        let n = self.n;
        let mut x = vec![0i64; upper_len(n)];
        // X A = B: X_ij = B_ij - A_ij - sum_{i<k<j} X_ik A_kj.
        for d in 1..n {
            for i in 1..=n - d {
                let j = i + d;
                let mut acc = sub(self.get(i, j), a.get(i, j));
                for k in i + 1..j {
                    acc = sub(acc, mul(x[offset(n, i, k)], a.get(k, j)));
                }
                x[offset(n, i, j)] = acc;
            }
        }
        UnipotentMatrix { n, entries: x }
    }

    /// `self^k`.
    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::identity(self.n);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl Mul for &UnipotentMatrix {
    type Output = UnipotentMatrix;

    /// Panics on size mismatch or overflow; use `checked_mul` to handle them.
    fn mul(self, rhs: &UnipotentMatrix) -> UnipotentMatrix {
        self.checked_mul(rhs).expect("matrix product failed")
    }
}

impl Mul for UnipotentMatrix {
    type Output = UnipotentMatrix;

    fn mul(self, rhs: UnipotentMatrix) -> UnipotentMatrix {
        &self * &rhs
    }
}

impl fmt::Debug for UnipotentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for UnipotentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Free-function form of [`UnipotentMatrix::checked_mul`].
pub fn multiply(a: &UnipotentMatrix, b: &UnipotentMatrix) -> Result<UnipotentMatrix, MatrixError> {
    a.checked_mul(b)
}

/// Free-function form of [`UnipotentMatrix::inverse`].
pub fn inverse(a: &UnipotentMatrix) -> UnipotentMatrix {
    a.inverse()
}

/// Free-function form of [`UnipotentMatrix::leq_entrywise`].
pub fn leq_entrywise(a: &UnipotentMatrix, b: &UnipotentMatrix) -> bool {
    a.leq_entrywise(b)
}

/// Free-function form of [`UnipotentMatrix::elementary`].
pub fn elementary(n: usize, i: usize, j: usize) -> Result<UnipotentMatrix, MatrixError> {
    UnipotentMatrix::elementary(n, i, j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u3(a: i64, b: i64, c: i64) -> UnipotentMatrix {
        UnipotentMatrix::from_upper(3, vec![a, b, c]).unwrap()
    }

    #[test]
    fn test_offsets_are_row_major() {
        assert_eq!(offset(4, 1, 2), 0);
        assert_eq!(offset(4, 1, 4), 2);
        assert_eq!(offset(4, 2, 3), 3);
        assert_eq!(offset(4, 3, 4), 5);
    }

    #[test]
    fn test_product_u3() {
        let e12 = elementary(3, 1, 2).unwrap();
        let e23 = elementary(3, 2, 3).unwrap();
        assert_eq!(&e12 * &e23, u3(1, 1, 1));
        assert_eq!(&e23 * &e12, u3(1, 0, 1));
        assert_eq!(&UnipotentMatrix::identity(3) * &u3(4, 5, 6), u3(4, 5, 6));
    }

    #[test]
    fn test_first_row_is_addition() {
        let a = UnipotentMatrix::from_first_row(&[2, 0]);
        let b = UnipotentMatrix::from_first_row(&[0, 3]);
        assert_eq!(&a * &b, UnipotentMatrix::from_first_row(&[2, 3]));
        assert_eq!(a.inverse(), UnipotentMatrix::from_first_row(&[-2, 0]));
    }

    #[test]
    fn test_inverse_u3() {
        assert_eq!(u3(1, 1, 1).inverse(), u3(-1, 0, -1));
        let a = u3(3, -2, 5);
        assert!((&a * &a.inverse()).is_identity());
        assert!((&a.inverse() * &a).is_identity());
    }

    #[test]
    fn test_divisions_match_inverse() {
        let a = UnipotentMatrix::from_upper(4, vec![1, 2, 0, 3, 1, 2]).unwrap();
        let b = UnipotentMatrix::from_upper(4, vec![4, 0, 7, 1, 5, 2]).unwrap();
        assert_eq!(a.ldiv(&b), &a.inverse() * &b);
        assert_eq!(b.rdiv(&a), &b * &a.inverse());
    }

    #[test]
    fn test_max_entry() {
        assert_eq!(UnipotentMatrix::identity(3).max_entry().unwrap(), 0);
        assert_eq!(u3(1, 2, 2).max_entry().unwrap(), 2);
        assert_eq!(u3(1, -2, 2).max_entry(), Err(MatrixError::NegativeEntry));
    }

    #[test]
    fn test_entrywise() {
        assert!(UnipotentMatrix::from_first_row(&[1, 0]).leq_entrywise(&UnipotentMatrix::from_first_row(&[3, 0])));
        assert!(!u3(1, 0, 2).leq_entrywise(&u3(0, 2, 2)));
    }

    #[test]
    fn test_elementary_positions() {
        assert_eq!(elementary(3, 1, 2).unwrap(), u3(1, 0, 0));
        assert_eq!(elementary(3, 1, 3).unwrap(), u3(0, 1, 0));
        assert_eq!(elementary(2, 1, 2).unwrap().upper(), &[1]);
        assert!(elementary(3, 2, 2).is_err());
        assert!(elementary(3, 0, 2).is_err());
    }

    #[test]
    fn test_size_mismatch() {
        let a = UnipotentMatrix::identity(2);
        let b = UnipotentMatrix::identity(3);
        assert_eq!(a.checked_mul(&b), Err(MatrixError::SizeMismatch(2, 3)));
    }

    #[test]
    fn test_overflow_is_reported() {
        let a = u3(i64::MAX, 0, 0);
        let b = u3(1, 0, 0);
        assert_eq!(a.checked_mul(&b), Err(MatrixError::Overflow));
    }
}
