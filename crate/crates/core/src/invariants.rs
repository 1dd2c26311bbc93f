//! Frobenius sets, pseudo-Frobenius sets, special gaps and type numbers.
//!
//! All sets range over the gaps of the monoid; the identity is never included.

use crate::error::Error;
use crate::ideals::RelativeIdeal;
use crate::matrix::UnipotentMatrix;
use crate::monoid::Monoid;
use crate::orders::{Extremum, Order, Side};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusData {
    pub f_l: Vec<UnipotentMatrix>,
    pub f_r: Vec<UnipotentMatrix>,
    pub f_t: Vec<UnipotentMatrix>,
    pub pf_l: Vec<UnipotentMatrix>,
    pub pf_r: Vec<UnipotentMatrix>,
    pub pf_t: Vec<UnipotentMatrix>,
    pub sg: Vec<UnipotentMatrix>,
}

impl FrobeniusData {
    pub fn compute(s: &Monoid) -> Result<Self, Error> {
        let f_l = frobenius(s, Side::Left)?;
        let f_r = frobenius(s, Side::Right)?;
        let f_t = intersect_sorted(&f_l, &f_r);
        let pf_l = pseudo_frobenius(s, Side::Left)?;
        let pf_r = pseudo_frobenius(s, Side::Right)?;
        let pf_t = intersect_sorted(&pf_l, &pf_r);
        let sg = pf_t.iter().filter(|a| s.contains(&(*a * *a))).cloned().collect();
        Ok(FrobeniusData { f_l, f_r, f_t, pf_l, pf_r, pf_t, sg })
    }

    pub fn frobenius(&self, side: Side) -> &[UnipotentMatrix] {
        match side {
            Side::Left => &self.f_l,
            Side::Right => &self.f_r,
            Side::TwoSided => &self.f_t,
        }
    }

    pub fn pseudo_frobenius(&self, side: Side) -> &[UnipotentMatrix] {
        match side {
            Side::Left => &self.pf_l,
            Side::Right => &self.pf_r,
            Side::TwoSided => &self.pf_t,
        }
    }

    /// `(|PF_l|, |PF_r|, |PF_t|)`.
    pub fn type_numbers(&self) -> (usize, usize, usize) {
        (self.pf_l.len(), self.pf_r.len(), self.pf_t.len())
    }
}

pub(crate) fn intersect_sorted(a: &[UnipotentMatrix], b: &[UnipotentMatrix]) -> Vec<UnipotentMatrix> {
    a.iter().filter(|x| b.binary_search(x).is_ok()).cloned().collect()
}

fn nonempty(s: &Monoid) -> Result<Vec<UnipotentMatrix>, Error> {
    if s.genus() == 0 {
        return Err(Error::EmptyGaps);
    }
    Ok(s.gap_list())
}

/// Non-identity elements entrywise below some gap. Any multiplier that sends
/// a gap to a gap lies in this set.
pub fn multiplier_candidates(s: &Monoid) -> Vec<UnipotentMatrix> {
    let mut out: Vec<UnipotentMatrix> = s
        .gaps()
        .iter()
        .flat_map(|g| s.group().enumerate_below(g))
        .filter(|x| !x.is_identity())
        .collect();
    out.sort();
    out.dedup();
    out
}

fn translates_into(s: &Monoid, g: &UnipotentMatrix, x: &UnipotentMatrix, side: Side) -> bool {
    match side {
        Side::Left => s.contains(&(g * x)),
        Side::Right => s.contains(&(x * g)),
        Side::TwoSided => s.contains(&(g * x)) && s.contains(&(x * g)),
    }
}

/// Gaps `g` with `gX` (left), `Xg` (right) or both in `S` for every `X` in `G(N)*`.
pub fn frobenius(s: &Monoid, side: Side) -> Result<Vec<UnipotentMatrix>, Error> {
    let gaps = nonempty(s)?;
    let xs = multiplier_candidates(s);
    Ok(par::filter(&gaps, |g| xs.iter().all(|x| translates_into(s, g, x, side))))
}

/// Maximal gaps under the S-order of the given side; the two-sided set is the
/// intersection of the one-sided ones.
pub fn pseudo_frobenius(s: &Monoid, side: Side) -> Result<Vec<UnipotentMatrix>, Error> {
    let gaps = nonempty(s)?;
    let max_of = |side: Side| Order::new(side.order_kind(), s).extremal(&gaps, Extremum::Max);
    Ok(match side {
        Side::TwoSided => intersect_sorted(&max_of(Side::Left), &max_of(Side::Right)),
        one => max_of(one),
    })
}

/// Gaps `g` with `g S* ⊆ S` (left), `S* g ⊆ S` (right) or both.
pub fn pseudo_frobenius_by_definition(s: &Monoid, side: Side) -> Result<Vec<UnipotentMatrix>, Error> {
    let gaps = nonempty(s)?;
    let xs: Vec<UnipotentMatrix> = multiplier_candidates(s).into_iter().filter(|x| s.contains(x)).collect();
    Ok(par::filter(&gaps, |g| xs.iter().all(|x| translates_into(s, g, x, side))))
}

/// Two-sided pseudo-Frobenius gaps whose square is a member.
pub fn special_gaps(s: &Monoid) -> Result<Vec<UnipotentMatrix>, Error> {
    let pf_t = pseudo_frobenius(s, Side::TwoSided)?;
    Ok(pf_t.into_iter().filter(|a| s.contains(&(a * a))).collect())
}

/// `(|PF_l|, |PF_r|, |PF_t|)`.
pub fn type_numbers(s: &Monoid) -> Result<(usize, usize, usize), Error> {
    let l = pseudo_frobenius(s, Side::Left)?;
    let r = pseudo_frobenius(s, Side::Right)?;
    let t = intersect_sorted(&l, &r).len();
    Ok((l.len(), r.len(), t))
}

/// Maximal non-identity elements of the complement of a cofinite ideal.
pub fn pf_of_cofinite_ideal(ideal: &RelativeIdeal, side: Side) -> Result<Vec<UnipotentMatrix>, Error> {
    let complement: Vec<UnipotentMatrix> = ideal
        .complement()
        .ok_or(Error::NotCofinite)?
        .iter()
        .filter(|x| !x.is_identity())
        .cloned()
        .collect();
    if complement.is_empty() {
        return Err(Error::EmptyComplement);
    }
    let base = ideal.base();
    let max_of = |side: Side| Order::new(side.order_kind(), base).extremal(&complement, Extremum::Max);
    Ok(match side {
        Side::TwoSided => intersect_sorted(&max_of(Side::Left), &max_of(Side::Right)),
        one => max_of(one),
    })
}
