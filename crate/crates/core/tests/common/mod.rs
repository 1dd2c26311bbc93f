//! Shared helpers for the integration tests: fixture loading, random
//! monoids and brute-force oracles that only use matrix arithmetic and gap
//! membership.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use unimon::json::{ideal_from_json, monoid_from_json};
use unimon::{Monoid, PatternGroup, RelativeIdeal, UnipotentMatrix};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn fixture(name: &str) -> Monoid {
    monoid_from_json(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

pub fn ideal_fixture(name: &str) -> RelativeIdeal {
    ideal_from_json(&fixture_text(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every fixture that describes a valid monoid with at least one gap.
pub const MONOID_FIXTURES: &[&str] = &[
    "n_2_3.json",
    "p3_fund2.json",
    "p3_parity.json",
    "p3_pseudo_symmetric.json",
    "p3_symmetric.json",
    "p3_two_frobenius.json",
    "p3_two_frobenius_over_a.json",
    "p3_two_frobenius_over_b.json",
    "u3_fund2.json",
    "u3_irreducible_genus4.json",
    "u3_left_right_frobenius.json",
    "u3_reducible_genus32.json",
];

pub fn p(a: i64, b: i64) -> UnipotentMatrix {
    UnipotentMatrix::from_first_row(&[a, b])
}

pub fn u(a12: i64, a13: i64, a23: i64) -> UnipotentMatrix {
    UnipotentMatrix::from_upper(3, vec![a12, a13, a23]).unwrap()
}

pub fn set(xs: &[UnipotentMatrix]) -> BTreeSet<UnipotentMatrix> {
    xs.iter().cloned().collect()
}

/// Schoolbook product of full matrices, used as an arithmetic oracle.
pub fn dense_mul(a: &UnipotentMatrix, b: &UnipotentMatrix) -> UnipotentMatrix {
    let n = a.n();
    let full = |m: &UnipotentMatrix, i: usize, j: usize| -> i64 {
        if i == j {
            1
        } else if i < j {
            m.get(i, j)
        } else {
            0
        }
    };
    let mut trip = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let v: i64 = (1..=n).map(|k| full(a, i, k) * full(b, k, j)).sum();
            trip.push((i, j, v));
        }
    }
    UnipotentMatrix::from_triples(n, &trip).unwrap()
}

/// Members of the box `max_entry < bound` reachable from `gens` by products,
/// decided by entry sum through divisor search.
pub fn box_closure(g: &PatternGroup, gens: &[UnipotentMatrix], bound: i64) -> BTreeSet<UnipotentMatrix> {
    let mut boxed = g.enumerate_box(bound);
    boxed.sort_by_key(|x| x.entry_sum());
    let mut inside: BTreeSet<UnipotentMatrix> = BTreeSet::new();
    inside.insert(g.identity());
    for x in boxed {
        if x.is_identity() {
            continue;
        }
        let hit = gens.contains(&x)
            || g.enumerate_below(&x).iter().any(|b| {
                !b.is_identity() && *b != x && inside.contains(b) && inside.contains(&b.ldiv(&x))
            });
        if hit {
            inside.insert(x);
        }
    }
    inside
}

/// Whether removing `gaps` from `G(N)` leaves a monoid, by checking every
/// product of two non-identity members that could land on a gap.
pub fn brute_is_monoid(g: &PatternGroup, gaps: &BTreeSet<UnipotentMatrix>) -> bool {
    let bound = gaps.iter().map(|x| x.upper().iter().copied().max().unwrap()).max().unwrap_or(0) + 1;
    let members: Vec<UnipotentMatrix> =
        g.enumerate_box(bound).into_iter().filter(|x| !x.is_identity() && !gaps.contains(x)).collect();
    for a in &members {
        for b in &members {
            if gaps.contains(&dense_mul(a, b)) {
                return false;
            }
        }
    }
    true
}

/// Every oversemigroup of `S` by trying each subset of its gaps.
pub fn brute_oversemigroups(s: &Monoid) -> Vec<BTreeSet<UnipotentMatrix>> {
    let gaps = s.gap_list();
    assert!(gaps.len() <= 16, "too many gaps for brute force");
    let mut out = Vec::new();
    for mask in 0u32..(1 << gaps.len()) {
        let kept: BTreeSet<UnipotentMatrix> =
            gaps.iter().enumerate().filter(|(i, _)| mask & (1 << i) == 0).map(|(_, x)| x.clone()).collect();
        if brute_is_monoid_by_factors(s.group(), &kept) {
            out.push(kept);
        }
    }
    out
}

/// Irreducibility straight from the definition.
pub fn brute_irreducible(s: &Monoid) -> bool {
    let own: BTreeSet<UnipotentMatrix> = s.gaps().clone();
    let proper: Vec<BTreeSet<UnipotentMatrix>> = brute_oversemigroups(s).into_iter().filter(|t| *t != own).collect();
    !proper.iter().enumerate().any(|(i, a)| proper[i + 1..].iter().any(|b| a.union(b).cloned().collect::<BTreeSet<_>>() == own))
}

/// Non-identity elements of `G(N)` with max entry below `bound`.
pub fn nonidentity_box(g: &PatternGroup, bound: i64) -> Vec<UnipotentMatrix> {
    g.enumerate_box(bound).into_iter().filter(|x| !x.is_identity()).collect()
}

/// Frobenius sets from the definition, with multipliers in the box
/// `max_entry <= r` (larger multipliers give products above the gaps).
pub fn brute_frobenius(s: &Monoid) -> (Vec<UnipotentMatrix>, Vec<UnipotentMatrix>) {
    let xs = nonidentity_box(s.group(), s.r() + 1);
    let left = s.gap_list().into_iter().filter(|g| xs.iter().all(|x| s.contains(&dense_mul(g, x)))).collect();
    let right = s.gap_list().into_iter().filter(|g| xs.iter().all(|x| s.contains(&dense_mul(x, g)))).collect();
    (left, right)
}

/// Pseudo-Frobenius sets from the definition over members in the same box.
pub fn brute_pseudo_frobenius(s: &Monoid) -> (Vec<UnipotentMatrix>, Vec<UnipotentMatrix>) {
    let xs: Vec<UnipotentMatrix> = nonidentity_box(s.group(), s.r() + 1).into_iter().filter(|x| s.contains(x)).collect();
    let left = s.gap_list().into_iter().filter(|g| xs.iter().all(|x| s.contains(&dense_mul(g, x)))).collect();
    let right = s.gap_list().into_iter().filter(|g| xs.iter().all(|x| s.contains(&dense_mul(x, g)))).collect();
    (left, right)
}

/// Subsets of the gaps closed under multiplication by members on both sides.
pub fn brute_torsion(s: &Monoid) -> Vec<BTreeSet<UnipotentMatrix>> {
    let gaps = s.gap_list();
    assert!(gaps.len() <= 16, "too many gaps for brute force");
    let xs: Vec<UnipotentMatrix> = nonidentity_box(s.group(), s.r() + 1).into_iter().filter(|x| s.contains(x)).collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << gaps.len()) {
        let part: BTreeSet<UnipotentMatrix> =
            gaps.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, x)| x.clone()).collect();
        let closed = part.iter().all(|a| {
            xs.iter().all(|x| {
                let l = dense_mul(a, x);
                let r = dense_mul(x, a);
                (!s.is_gap(&l) || part.contains(&l)) && (!s.is_gap(&r) || part.contains(&r))
            })
        });
        if closed {
            out.push(part);
        }
    }
    out
}

/// A random valid monoid: a fundamental monoid enlarged by the closure of a
/// few random gaps.
pub fn random_monoid(g: &PatternGroup, rng: &mut StdRng) -> Monoid {
    loop {
        let k = rng.gen_range(2..=4);
        let base = Monoid::fundamental(g, k);
        let gaps = base.gap_list();
        let picks: Vec<UnipotentMatrix> =
            (0..rng.gen_range(0..=3)).map(|_| gaps[rng.gen_range(0..gaps.len())].clone()).collect();
        let s = base.closure_with(&picks);
        if s.genus() > 0 && s.genus() <= 14 {
            return s;
        }
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_monoids(g: &PatternGroup, count: usize, seed: u64) -> Vec<Monoid> {
    let mut r = rng(seed);
    (0..count).map(|_| random_monoid(g, &mut r)).collect()
}

/// Inverse by back-substitution on the full matrix.
#[allow(clippy::needless_range_loop)]
pub fn dense_inverse(a: &UnipotentMatrix) -> UnipotentMatrix {
    let n = a.n();
    let mut b = vec![vec![0i64; n + 1]; n + 1];
    for j in 1..=n {
        b[j][j] = 1;
        for i in (1..j).rev() {
            b[i][j] = -(i + 1..=j).map(|k| a.get(i, k) * b[k][j]).sum::<i64>();
        }
    }
    let trip: Vec<(usize, usize, i64)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).map(|(i, j)| (i, j, b[i][j])).collect();
    UnipotentMatrix::from_triples(n, &trip).unwrap()
}

/// Whether some gap splits as a product of two non-identity members. Any
/// factor of `x` is entrywise below it, so the scan is exhaustive.
pub fn brute_is_monoid_by_factors(g: &PatternGroup, gaps: &BTreeSet<UnipotentMatrix>) -> bool {
    gaps.iter().all(|x| {
        g.enumerate_below(x).iter().all(|a| {
            if a.is_identity() || a == x || gaps.contains(a) {
                return true;
            }
            let b = dense_mul(&dense_inverse(a), x);
            !b.is_nonnegative() || gaps.contains(&b)
        })
    })
}
