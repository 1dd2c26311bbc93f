use thiserror::Error;

use crate::matrix::UnipotentMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix size {0} is below 2")]
    BadSize(usize),
    #[error("size {n} needs {} upper entries, got {len}", .n * (.n - 1) / 2)]
    BadLength { n: usize, len: usize },
    #[error("({i},{j}) is not a strictly-upper position of a {n}x{n} matrix")]
    BadPosition { n: usize, i: usize, j: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("negative entry")]
    NegativeEntry,
    #[error("integer overflow")]
    Overflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("pattern is not composition-closed: ({0},{1}) and ({1},{2}) present but ({0},{2}) missing")]
    PatternNotClosed(usize, usize, usize),
    #[error("not closed: {0} * {1} is a gap")]
    NotClosed(UnipotentMatrix, UnipotentMatrix),
    #[error("the identity cannot be a gap")]
    IdentityGap,
    #[error("{0} is not supported on the pattern")]
    OutOfPattern(UnipotentMatrix),
    #[error("{0} has a negative entry")]
    NegativeElement(UnipotentMatrix),
    #[error("generator {0} is not supported on the pattern")]
    GeneratorOutOfPattern(UnipotentMatrix),
    #[error("the identity cannot be a generator")]
    IdentityGenerator,
    #[error("search bound must be at least {min}, got {got}")]
    BadBound { min: i64, got: i64 },
    #[error("monoids live in different groups")]
    GroupMismatch,
    #[error("{0} is not a gap")]
    NotAGap(UnipotentMatrix),
    #[error("the monoid has no gaps")]
    EmptyGaps,
    #[error("pivot {0} is not a non-identity member of the monoid")]
    PivotNotInMonoid(UnipotentMatrix),
    #[error("{0} is not a member of the monoid")]
    NotAMember(UnipotentMatrix),
    #[error("factorization through the Apery set needs a one-sided order")]
    TwoSidedFactorization,
    #[error("empty generator set")]
    EmptyGeneratorSet,
    #[error("ideal is not in cofinite form and no box was given")]
    NotCofinite,
    #[error("ideal has an empty complement")]
    EmptyComplement,
    #[error("ideals have different bases or sides")]
    Mismatch,
    #[error("not stable: {0} * {1} falls in the complement")]
    NotStable(UnipotentMatrix, UnipotentMatrix),
    #[error("search exceeded {0} nodes")]
    Infeasible(usize),
}
