//! Apery sets of a monoid with respect to a pivot.
//!
//! Apery sets are infinite once `d_G >= 2`, so they are kept as a finite core
//! together with an exact membership test.

use crate::error::Error;
use crate::matrix::UnipotentMatrix;
use crate::monoid::Monoid;
use crate::orders::{Extremum, Order, Side};
use crate::par;

#[derive(Clone, Debug)]
pub struct AperySet<'a> {
    base: &'a Monoid,
    pivot: UnipotentMatrix,
    side: Side,
    core: Vec<UnipotentMatrix>,
}

impl<'a> AperySet<'a> {
    pub fn new(s: &'a Monoid, pivot: &UnipotentMatrix, side: Side) -> Result<Self, Error> {
        if !s.contains_star(pivot) {
            return Err(Error::PivotNotInMonoid(pivot.clone()));
        }
        let translate = |left: bool| -> Vec<UnipotentMatrix> {
            let mut out: Vec<UnipotentMatrix> = s
                .gaps()
                .iter()
                .map(|g| if left { pivot * g } else { g * pivot })
                .filter(|b| s.contains(b))
                .collect();
            out.sort();
            out
        };
        let core = match side {
            Side::Left => translate(true),
            Side::Right => translate(false),
            Side::TwoSided => {
                let r = translate(false);
                translate(true).into_iter().filter(|b| r.binary_search(b).is_ok()).collect()
            }
        };
        Ok(AperySet { base: s, pivot: pivot.clone(), side, core })
    }

    pub fn base(&self) -> &Monoid {
        self.base
    }

    pub fn pivot(&self) -> &UnipotentMatrix {
        &self.pivot
    }

    pub fn side(&self) -> Side {
        self.side
    }

    /// Members whose quotient by the pivot is a gap, in canonical order.
    pub fn core(&self) -> &[UnipotentMatrix] {
        &self.core
    }

    pub fn contains(&self, b: &UnipotentMatrix) -> bool {
        let s = self.base;
        if !s.contains(b) {
            return false;
        }
        let left = || !s.contains(&self.pivot.ldiv(b));
        let right = || !s.contains(&b.rdiv(&self.pivot));
        match self.side {
            Side::Left => left(),
            Side::Right => right(),
            Side::TwoSided => left() && right(),
        }
    }

    /// Members with max entry below `bound`, in canonical order.
    pub fn in_box(&self, bound: i64) -> Vec<UnipotentMatrix> {
        let boxed = self.base.group().enumerate_box(bound);
        par::filter(&boxed, |b| self.contains(b))
    }
}

/// Free-function form of [`AperySet::new`].
pub fn apery<'a>(s: &'a Monoid, pivot: &UnipotentMatrix, side: Side) -> Result<AperySet<'a>, Error> {
    AperySet::new(s, pivot, side)
}

/// Maximal elements of the Apery set under the order of the same side. An
/// element above a core element `AC` in the left order is `ACx` with `Cx`
/// still a gap, so it lies in the core too and the maxima of the core are
/// exact (likewise on the right and two-sided). In a commutative group these
/// are the translates of the pseudo-Frobenius set by the pivot.
pub fn apery_maximal(s: &Monoid, pivot: &UnipotentMatrix, side: Side) -> Result<Vec<UnipotentMatrix>, Error> {
    if s.genus() == 0 {
        return Err(Error::EmptyGaps);
    }
    let ap = AperySet::new(s, pivot, side)?;
    Ok(Order::new(side.order_kind(), s).extremal(ap.core(), Extremum::Max))
}

/// Writes `B = A^k W` (left) or `B = W A^k` (right) with `k` least such that
/// `W` lies in the Apery set.
pub fn factor_via_apery(
    s: &Monoid,
    pivot: &UnipotentMatrix,
    side: Side,
    b: &UnipotentMatrix,
) -> Result<(u32, UnipotentMatrix), Error> {
    if side == Side::TwoSided {
        return Err(Error::TwoSidedFactorization);
    }
    if !s.contains(b) {
        return Err(Error::NotAMember(b.clone()));
    }
    let ap = AperySet::new(s, pivot, side)?;
    let mut w = b.clone();
    let mut k = 0;
    while !ap.contains(&w) {
        w = if side == Side::Left { pivot.ldiv(&w) } else { w.rdiv(pivot) };
        k += 1;
    }
    Ok((k, w))
}
