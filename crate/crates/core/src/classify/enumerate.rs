//! Genus-bounded enumeration over a canonical-parent tree.
//!
//! The parent of a monoid of positive genus is obtained by adjoining its
//! largest gap in the graded order (entry sum, then canonical). Children of
//! `S` are therefore `S \ {m}` for the minimal generators `m` lying above
//! every gap of `S` in that order, and each monoid is reached exactly once.

use super::{is_irreducible, Method};
use crate::error::Error;
use crate::group::PatternGroup;
use crate::matrix::UnipotentMatrix;
use crate::monoid::Monoid;
use crate::par;

fn graded_key(a: &UnipotentMatrix) -> (i64, &UnipotentMatrix) {
    (a.entry_sum(), a)
}

fn children(s: &Monoid) -> Vec<Monoid> {
    let top = s.gaps().iter().max_by(|a, b| graded_key(a).cmp(&graded_key(b)));
    s.minimal_generators()
        .into_iter()
        .filter(|m| top.is_none_or(|t| graded_key(m) > graded_key(t)))
        .map(|m| {
            let gaps = s.gaps().iter().cloned().chain(std::iter::once(m));
            Monoid::from_gaps_unchecked(s.group(), gaps).expect("gap set of a child")
        })
        .collect()
}

/// All monoids of genus `0..=genus`, level by level.
pub fn enumerate_up_to(group: &PatternGroup, genus: usize, max_nodes: usize) -> Result<Vec<Vec<Monoid>>, Error> {
    let mut levels = vec![vec![Monoid::whole(group)]];
    let mut total = 1;
    for _ in 0..genus {
        let mut next = par::flat_map(levels.last().unwrap(), children);
        next.sort();
        total += next.len();
        if total > max_nodes {
            return Err(Error::Infeasible(max_nodes));
        }
        levels.push(next);
    }
    Ok(levels)
}

/// All monoids of the given genus, in canonical order.
pub fn enumerate_monoids(group: &PatternGroup, genus: usize, max_nodes: usize) -> Result<Vec<Monoid>, Error> {
    Ok(enumerate_up_to(group, genus, max_nodes)?.pop().unwrap_or_default())
}

/// The irreducible monoids of the given genus. Genus 0 yields nothing.
pub fn enumerate_irreducible(group: &PatternGroup, genus: usize, max_nodes: usize) -> Result<Vec<Monoid>, Error> {
    if genus == 0 {
        return Ok(Vec::new());
    }
    let all = enumerate_monoids(group, genus, max_nodes)?;
    let keep = par::map(&all, |s| is_irreducible(s, Method::Torsion).map(|(irr, _)| irr));
    let mut out = Vec::new();
    for (s, k) in all.into_iter().zip(keep) {
        if k? {
            out.push(s);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn test_small_counts() {
        let g = PatternGroup::first_row(3);
        let counts: Vec<usize> = enumerate_up_to(&g, 3, 1000).unwrap().iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 2, 7, 23]);
        assert_eq!(enumerate_monoids(&PatternGroup::full(3), 1, 1000).unwrap().len(), 3);
    }

    #[test]
    fn test_node_cap() {
        let g = PatternGroup::first_row(3);
        assert_eq!(enumerate_monoids(&g, 4, 10), Err(Error::Infeasible(10)));
    }
}
