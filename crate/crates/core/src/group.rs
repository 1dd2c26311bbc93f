//! Pattern subgroups of the unipotent group.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::matrix::{offset, upper_len, UnipotentMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternKind {
    Full,
    FirstRow,
    Custom,
}

/// A subgroup given by a composition-closed set of strictly-upper positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PatternGroup {
    n: usize,
    kind: PatternKind,
    positions: Vec<(usize, usize)>,
    mask: Vec<bool>,
}

impl PatternGroup {
    /// The full group `U(n)`.
    pub fn full(n: usize) -> Self {
        let positions = (1..n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
        Self::build(n, PatternKind::Full, positions)
    }

    /// The first-row group `P(n)`, isomorphic to `N^{n-1}` on nonnegative points.
    pub fn first_row(n: usize) -> Self {
        let positions = (2..=n).map(|j| (1, j)).collect();
        Self::build(n, PatternKind::FirstRow, positions)
    }

    /// A custom pattern; rejected unless composition-closed.
    pub fn custom(n: usize, positions: &[(usize, usize)]) -> Result<Self, Error> {
        if n < 2 {
            return Err(crate::error::MatrixError::BadSize(n).into());
        }
        let set: BTreeSet<(usize, usize)> = positions.iter().copied().collect();
        for &(i, j) in &set {
            if i < 1 || i >= j || j > n {
                return Err(crate::error::MatrixError::BadPosition { n, i, j }.into());
            }
        }
        for &(i, k) in &set {
            for &(k2, j) in &set {
                if k == k2 && !set.contains(&(i, j)) {
                    return Err(Error::PatternNotClosed(i, k, j));
                }
            }
        }
        Ok(Self::build(n, PatternKind::Custom, set.into_iter().collect()))
    }

    fn build(n: usize, kind: PatternKind, positions: Vec<(usize, usize)>) -> Self {
        assert!(n >= 2, "matrix size must be at least 2");
        let mut mask = vec![false; upper_len(n)];
        for &(i, j) in &positions {
            mask[offset(n, i, j)] = true;
        }
        // A custom pattern equal to a builtin one is stored as the builtin.
        let kind = if kind == PatternKind::Custom && positions == Self::full(n).positions {
            PatternKind::Full
        } else if kind == PatternKind::Custom && positions == (2..=n).map(|j| (1, j)).collect::<Vec<_>>() {
            PatternKind::FirstRow
        } else {
            kind
        };
        PatternGroup { n, kind, positions, mask }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> PatternKind {
        self.kind
    }

    /// Positions in row-major order.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.positions
    }

    /// The dimension `d_G`.
    pub fn dimension(&self) -> usize {
        self.positions.len()
    }

    /// Whether every nonzero entry of `a` sits on a pattern position.
    pub fn in_group(&self, a: &UnipotentMatrix) -> bool {
        a.n() == self.n && a.upper().iter().zip(&self.mask).all(|(&v, &m)| m || v == 0)
    }

    pub fn identity(&self) -> UnipotentMatrix {
        UnipotentMatrix::identity(self.n)
    }

    /// Elementary matrices at the pattern positions.
    pub fn elementaries(&self) -> Vec<UnipotentMatrix> {
        let mut out: Vec<_> = self
            .positions
            .iter()
            .map(|&(i, j)| UnipotentMatrix::elementary(self.n, i, j).expect("pattern position"))
            .collect();
        out.sort();
        out
    }

    /// Elements of `G(N)` with every entry below `bound`, in canonical order.
    pub fn enumerate_box(&self, bound: i64) -> Vec<UnipotentMatrix> {
        let caps = vec![bound - 1; self.positions.len()];
        self.enumerate_below_caps(&caps)
    }

    /// The entrywise largest element of the box `max_entry < bound`.
    pub fn box_top(&self, bound: i64) -> UnipotentMatrix {
        let mut entries = vec![0i64; upper_len(self.n)];
        for &(i, j) in &self.positions {
            entries[offset(self.n, i, j)] = bound - 1;
        }
        UnipotentMatrix::from_upper(self.n, entries).expect("valid length")
    }

    /// Elements of `G(N)` entrywise below `top`, in canonical order.
    pub fn enumerate_below(&self, top: &UnipotentMatrix) -> Vec<UnipotentMatrix> {
        let caps: Vec<i64> = self.positions.iter().map(|&(i, j)| top.get(i, j)).collect();
        self.enumerate_below_caps(&caps)
    }

    /// Elements `x` with `low <= x <= high` entrywise, in canonical order.
    pub fn enumerate_between(&self, low: &UnipotentMatrix, high: &UnipotentMatrix) -> Vec<UnipotentMatrix> {
        let lo: Vec<i64> = self.positions.iter().map(|&(i, j)| low.get(i, j)).collect();
        let hi: Vec<i64> = self.positions.iter().map(|&(i, j)| high.get(i, j)).collect();
        self.enumerate_range(&lo, &hi)
    }

    fn enumerate_below_caps(&self, caps: &[i64]) -> Vec<UnipotentMatrix> {
        self.enumerate_range(&vec![0; caps.len()], caps)
    }

    // Odometer over pattern positions with the last position fastest, which is
    // ascending lexicographic order on the dense entry vector.
    fn enumerate_range(&self, lo: &[i64], hi: &[i64]) -> Vec<UnipotentMatrix> {
        if lo.iter().zip(hi).any(|(a, b)| a > b) {
            return Vec::new();
        }
        let d = self.positions.len();
        let offs: Vec<usize> = self.positions.iter().map(|&(i, j)| offset(self.n, i, j)).collect();
        let total: usize = lo.iter().zip(hi).map(|(a, b)| (b - a + 1) as usize).product();
        let mut out = Vec::with_capacity(total);
        let mut cur = lo.to_vec();
        loop {
            let mut entries = vec![0i64; upper_len(self.n)];
            for k in 0..d {
                entries[offs[k]] = cur[k];
            }
            out.push(UnipotentMatrix::from_upper(self.n, entries).expect("valid length"));
            let mut k = d;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if cur[k] < hi[k] {
                    cur[k] += 1;
                    break;
                }
                cur[k] = lo[k];
            }
        }
    }
}

/// Free-function form of [`PatternGroup::in_group`].
pub fn in_group(p: &PatternGroup, a: &UnipotentMatrix) -> bool {
    p.in_group(a)
}

/// Free-function form of [`PatternGroup::enumerate_box`].
pub fn enumerate_box(p: &PatternGroup, bound: i64) -> Vec<UnipotentMatrix> {
    p.enumerate_box(bound)
}
