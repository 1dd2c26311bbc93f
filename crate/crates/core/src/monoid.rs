//! Unipotent numerical monoids, stored by their finite gap sets.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, HashSet};

use crate::error::Error;
use crate::group::PatternGroup;
use crate::matrix::UnipotentMatrix;
use crate::par;

/// A cofinite submonoid of `G(N)`, given by its gap set.
#[derive(Clone, Debug)]
pub struct Monoid {
    group: PatternGroup,
    gaps: BTreeSet<UnipotentMatrix>,
    lookup: HashSet<UnipotentMatrix>,
    r: i64,
}

/// Numeric invariants of a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub r: i64,
    pub conductor: u128,
    pub genus: usize,
    pub sporadicity: usize,
    pub sporadic_set: Vec<UnipotentMatrix>,
}

/// Outcome of [`Monoid::from_generators`].
#[derive(Clone, Debug)]
pub enum Generated {
    Verified(Monoid),
    Undecided(i64),
}

impl Monoid {
    /// Validates a gap set and builds the monoid.
    pub fn from_gaps(group: &PatternGroup, gaps: impl IntoIterator<Item = UnipotentMatrix>) -> Result<Self, Error> {
        let m = Self::from_gaps_unchecked(group, gaps)?;
        if let Some((a, b)) = m.closure_witness() {
            return Err(Error::NotClosed(a, b));
        }
        Ok(m)
    }

    /// Builds the monoid after checking the elements but not closure.
    pub(crate) fn from_gaps_unchecked(
        group: &PatternGroup,
        gaps: impl IntoIterator<Item = UnipotentMatrix>,
    ) -> Result<Self, Error> {
        let gaps: BTreeSet<UnipotentMatrix> = gaps.into_iter().collect();
        for g in &gaps {
            if g.n() != group.n() {
                return Err(crate::error::MatrixError::SizeMismatch(g.n(), group.n()).into());
            }
            if !g.is_nonnegative() {
                return Err(Error::NegativeElement(g.clone()));
            }
            if !group.in_group(g) {
                return Err(Error::OutOfPattern(g.clone()));
            }
            if g.is_identity() {
                return Err(Error::IdentityGap);
            }
        }
        let r = gaps.iter().map(|g| g.max_nonneg()).max().map_or(1, |m| m + 1);
        let lookup = gaps.iter().cloned().collect();
        Ok(Monoid { group: group.clone(), gaps, lookup, r })
    }

    /// `G(N)` itself.
    pub fn whole(group: &PatternGroup) -> Self {
        Self::from_gaps_unchecked(group, []).expect("empty gap set")
    }

    /// The fundamental monoid: identity plus everything with max entry at least `k`.
    pub fn fundamental(group: &PatternGroup, k: i64) -> Self {
        let gaps = group.enumerate_box(k.max(1)).into_iter().filter(|x| !x.is_identity());
        Self::from_gaps_unchecked(group, gaps).expect("boxed elements are valid")
    }

    /// First pair `(A, B)` of members with `AB` a gap, scanning gaps and then
    /// right factors in canonical order.
    fn closure_witness(&self) -> Option<(UnipotentMatrix, UnipotentMatrix)> {
        let gaps: Vec<&UnipotentMatrix> = self.gaps.iter().collect();
        par::find_map_first(&gaps, |g| {
            self.group.enumerate_below(g).into_iter().find_map(|b| {
                if b.is_identity() || !self.contains(&b) {
                    return None;
                }
                let a = g.rdiv(&b);
                (a.is_nonnegative() && !a.is_identity() && self.contains(&a)).then_some((a, b))
            })
        })
    }

    /// Closes `gens` inside the box `max_entry < search_bound` and certifies
    /// cofiniteness through a fully covered window `k <= max_entry < 2k`.
    pub fn from_generators(
        group: &PatternGroup,
        gens: &[UnipotentMatrix],
        search_bound: i64,
    ) -> Result<Generated, Error> {
        if search_bound < 2 {
            return Err(Error::BadBound { min: 2, got: search_bound });
        }
        for g in gens {
            if g.n() != group.n() || !g.is_nonnegative() || !group.in_group(g) {
                return Err(Error::GeneratorOutOfPattern(g.clone()));
            }
            if g.is_identity() {
                return Err(Error::IdentityGenerator);
            }
        }
        let boxed = group.enumerate_box(search_bound);
        let mut order: Vec<usize> = (0..boxed.len()).collect();
        order.sort_by_key(|&i| boxed[i].entry_sum());
        let index: HashMap<&UnipotentMatrix, usize> = boxed.iter().enumerate().map(|(i, x)| (x, i)).collect();
        let mut member = vec![false; boxed.len()];
        for &i in &order {
            let x = &boxed[i];
            member[i] = x.is_identity()
                || gens.iter().any(|g| {
                    if !g.leq_entrywise(x) {
                        return false;
                    }
                    let w = g.ldiv(x);
                    w.is_nonnegative() && index.get(&w).is_some_and(|&j| member[j])
                });
        }
        for k in 1..=search_bound / 2 {
            let window_full = boxed.iter().zip(&member).all(|(x, &m)| {
                let mx = x.max_nonneg();
                m || mx < k || mx >= 2 * k
            });
            if window_full {
                let gaps = boxed
                    .iter()
                    .zip(&member)
                    .filter(|(x, &m)| !m && x.max_nonneg() < k)
                    .map(|(x, _)| x.clone());
                return Ok(Generated::Verified(Self::from_gaps(group, gaps)?));
            }
        }
        Ok(Generated::Undecided(search_bound))
    }

    pub fn group(&self) -> &PatternGroup {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn identity(&self) -> UnipotentMatrix {
        self.group.identity()
    }

    /// Gap set in canonical order.
    pub fn gaps(&self) -> &BTreeSet<UnipotentMatrix> {
        &self.gaps
    }

    pub fn gap_list(&self) -> Vec<UnipotentMatrix> {
        self.gaps.iter().cloned().collect()
    }

    pub fn is_gap(&self, a: &UnipotentMatrix) -> bool {
        self.lookup.contains(a)
    }

    /// Membership; false for negative or out-of-pattern matrices.
    pub fn contains(&self, a: &UnipotentMatrix) -> bool {
        if !a.is_nonnegative() || !self.group.in_group(a) {
            return false;
        }
        a.max_nonneg() >= self.r || !self.lookup.contains(a)
    }

    /// Membership in `S* = S \ {1}`.
    pub fn contains_star(&self, a: &UnipotentMatrix) -> bool {
        !a.is_identity() && self.contains(a)
    }

    /// Generating number: every element with max entry at least `r` is a member.
    pub fn r(&self) -> i64 {
        self.r
    }

    pub fn max_gap_entry(&self) -> i64 {
        self.r - 1
    }

    pub fn genus(&self) -> usize {
        self.gaps.len()
    }

    /// `r^{d_G}`.
    pub fn conductor(&self) -> u128 {
        (self.r as u128).checked_pow(self.group.dimension() as u32).expect("conductor overflow")
    }

    /// Members with max entry below `r`, identity included.
    pub fn sporadic_set(&self) -> Vec<UnipotentMatrix> {
        self.members_in_box(self.r)
    }

    pub fn sporadicity(&self) -> usize {
        self.sporadic_set().len()
    }

    pub fn invariants(&self) -> Invariants {
        let sporadic_set = self.sporadic_set();
        Invariants {
            r: self.r,
            conductor: self.conductor(),
            genus: self.genus(),
            sporadicity: sporadic_set.len(),
            sporadic_set,
        }
    }

    /// Members with max entry below `bound`, in canonical order.
    pub fn members_in_box(&self, bound: i64) -> Vec<UnipotentMatrix> {
        self.group.enumerate_box(bound).into_iter().filter(|x| self.contains(x)).collect()
    }

    /// Elements of `S*` that are not products of two elements of `S*`.
    pub fn minimal_generators(&self) -> Vec<UnipotentMatrix> {
        let candidates: Vec<UnipotentMatrix> =
            self.members_in_box(2 * self.r).into_iter().filter(|x| !x.is_identity()).collect();
        par::filter(&candidates, |a| !self.is_decomposable(a))
    }

    /// Whether `a = BC` for some `B, C` in `S*`.
    pub fn is_decomposable(&self, a: &UnipotentMatrix) -> bool {
        self.group.enumerate_below(a).iter().any(|b| {
            if b.is_identity() || b == a || !self.contains(b) {
                return false;
            }
            let c = b.ldiv(a);
            c.is_nonnegative() && self.contains_star(&c)
        })
    }

    /// `S ∩ T`, whose gap set is the union of the two gap sets.
    pub fn intersect(&self, other: &Monoid) -> Result<Monoid, Error> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        Self::from_gaps(&self.group, self.gaps.union(&other.gaps).cloned())
    }

    /// `S ∪ {A}` for a gap `A`; fails with a witness unless it is a monoid.
    pub fn adjoin(&self, a: &UnipotentMatrix) -> Result<Monoid, Error> {
        if !self.is_gap(a) {
            return Err(Error::NotAGap(a.clone()));
        }
        Self::from_gaps(&self.group, self.gaps.iter().filter(|g| *g != a).cloned())
    }

    /// The smallest monoid containing `S` and `extra`, found by deciding each
    /// gap in order of entry sum through a divisor search.
    pub fn closure_with(&self, extra: &[UnipotentMatrix]) -> Monoid {
        let mut sorted: Vec<&UnipotentMatrix> = self.gaps.iter().collect();
        sorted.sort_by_key(|g| (g.entry_sum(), (*g).clone()));
        let mut inside: HashSet<UnipotentMatrix> = extra.iter().filter(|x| self.is_gap(x)).cloned().collect();
        for g in sorted {
            if inside.contains(g) {
                continue;
            }
            let member = |x: &UnipotentMatrix| !x.is_identity() && (self.contains(x) || inside.contains(x));
            let hit = self.group.enumerate_below(g).iter().any(|b| {
                if !member(b) {
                    return false;
                }
                let c = b.ldiv(g);
                c.is_nonnegative() && member(&c)
            });
            if hit {
                inside.insert(g.clone());
            }
        }
        let gaps = self.gaps.iter().filter(|g| !inside.contains(*g)).cloned();
        Self::from_gaps_unchecked(&self.group, gaps).expect("subset of valid gaps")
    }
}

impl PartialEq for Monoid {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group && self.gaps == other.gaps
    }
}

impl Eq for Monoid {}

impl std::hash::Hash for Monoid {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.group.hash(state);
        self.gaps.hash(state);
    }
}

impl PartialOrd for Monoid {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monoid {
    /// Gap sets compared as canonical sequences, then by pattern.
    fn cmp(&self, other: &Self) -> Ordering {
        self.gaps
            .iter()
            .cmp(other.gaps.iter())
            .then_with(|| self.group.positions().cmp(other.group.positions()))
            .then_with(|| self.group.n().cmp(&other.group.n()))
    }
}

/// Free-function form of [`Monoid::from_gaps`].
pub fn from_gaps(group: &PatternGroup, gaps: impl IntoIterator<Item = UnipotentMatrix>) -> Result<Monoid, Error> {
    Monoid::from_gaps(group, gaps)
}

/// Free-function form of [`Monoid::fundamental`].
pub fn fundamental_monoid(group: &PatternGroup, k: i64) -> Monoid {
    Monoid::fundamental(group, k)
}
