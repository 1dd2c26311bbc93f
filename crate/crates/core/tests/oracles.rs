//! Library results against brute-force oracles on fixtures and random monoids.

mod common;

use std::collections::BTreeSet;

use common::*;
use unimon::apery::apery_maximal;
use unimon::classify::pf_from_apery;
use unimon::ideals::{oversemigroup_parts, torsion_idempotents, torsion_monoid};
use unimon::*;

/// Fixtures and random monoids small enough for subset enumeration.
fn small_monoids() -> Vec<Monoid> {
    let mut out: Vec<Monoid> = MONOID_FIXTURES.iter().map(|f| fixture(f)).filter(|s| s.genus() <= 12).collect();
    for (g, seed) in [(PatternGroup::first_row(3), 7), (PatternGroup::full(3), 8), (PatternGroup::first_row(4), 9)] {
        out.extend(random_monoids(&g, 12, seed).into_iter().filter(|s| s.genus() <= 10));
    }
    out
}

fn all_monoids() -> Vec<Monoid> {
    let mut out: Vec<Monoid> = MONOID_FIXTURES.iter().map(|f| fixture(f)).collect();
    for (g, seed) in [(PatternGroup::first_row(3), 17), (PatternGroup::full(3), 18)] {
        out.extend(random_monoids(&g, 15, seed));
    }
    out
}

#[test]
fn fixtures_are_monoids() {
    for name in MONOID_FIXTURES {
        let s = fixture(name);
        assert!(brute_is_monoid(s.group(), s.gaps()), "{name}");
        assert!(brute_is_monoid_by_factors(s.group(), s.gaps()), "{name}");
    }
}

#[test]
fn frobenius_sets_match_definition() {
    for s in all_monoids() {
        let d = FrobeniusData::compute(&s).unwrap();
        let (fl, fr) = brute_frobenius(&s);
        assert_eq!((d.f_l.clone(), d.f_r.clone()), (fl, fr), "{:?}", s.gap_list());
        let (pl, pr) = brute_pseudo_frobenius(&s);
        assert_eq!((d.pf_l.clone(), d.pf_r.clone()), (pl, pr), "{:?}", s.gap_list());
        let t: Vec<UnipotentMatrix> = d.pf_l.iter().filter(|x| d.pf_r.contains(x)).cloned().collect();
        assert_eq!(d.pf_t, t);
    }
}

#[test]
fn special_gaps_are_the_adjoinable_gaps() {
    for s in all_monoids() {
        let d = FrobeniusData::compute(&s).unwrap();
        let adjoinable: Vec<UnipotentMatrix> = s
            .gap_list()
            .into_iter()
            .filter(|x| {
                let mut rest = s.gaps().clone();
                rest.remove(x);
                brute_is_monoid_by_factors(s.group(), &rest)
            })
            .collect();
        assert_eq!(d.sg, adjoinable, "{:?}", s.gap_list());
        for x in s.gap_list() {
            assert_eq!(s.adjoin(&x).is_ok(), adjoinable.contains(&x));
        }
    }
}

#[test]
fn irreducibility_matches_definition() {
    for s in small_monoids() {
        let want = brute_irreducible(&s);
        let (oracle, witness) = is_irreducible(&s, Method::Oracle).unwrap();
        let (torsion, _) = is_irreducible(&s, Method::Torsion).unwrap();
        assert_eq!((oracle, torsion), (want, want), "{:?}", s.gap_list());
        if let Some((t1, t2)) = witness {
            assert!(t1 != s && t2 != s);
            assert_eq!(t1.intersect(&t2).unwrap(), s);
        }
    }
}

#[test]
fn torsion_monoid_matches_definition() {
    for s in small_monoids() {
        let ours: BTreeSet<BTreeSet<UnipotentMatrix>> = torsion_monoid(&s, DEFAULT_MAX_NODES)
            .unwrap()
            .iter()
            .map(|t| t.gap_part().iter().cloned().collect())
            .collect();
        let brute: BTreeSet<BTreeSet<UnipotentMatrix>> = brute_torsion(&s).into_iter().collect();
        assert_eq!(ours, brute, "{:?}", s.gap_list());
    }
}

#[test]
fn oversemigroups_match_definition() {
    for s in small_monoids() {
        let ours: BTreeSet<BTreeSet<UnipotentMatrix>> =
            oversemigroups(&s, DEFAULT_MAX_NODES).unwrap().iter().map(|t| t.gaps().clone()).collect();
        let brute: BTreeSet<BTreeSet<UnipotentMatrix>> = brute_oversemigroups(&s).into_iter().collect();
        assert_eq!(ours, brute, "{:?}", s.gap_list());
    }
}

#[test]
fn idempotents_are_the_oversemigroups() {
    for s in small_monoids() {
        let torsion = torsion_monoid(&s, DEFAULT_MAX_NODES).unwrap();
        let idem: Vec<_> = torsion.iter().filter(|t| t.is_idempotent(&s)).cloned().collect();
        for t in &torsion {
            assert_eq!(t.is_idempotent(&s), t.as_monoid(&s).is_ok(), "{:?}", t.gap_part());
        }
        assert_eq!(idem, oversemigroup_parts(&s, DEFAULT_MAX_NODES).unwrap());
        let lattice = torsion_idempotents(&s, DEFAULT_MAX_NODES).unwrap();
        assert_eq!(lattice.nodes, idem);
        assert!(lattice.nodes[0].is_empty());
        assert_eq!(lattice.nodes.last().unwrap().len(), s.genus());
        for a in &lattice.nodes {
            for b in &lattice.nodes {
                let meet: Vec<UnipotentMatrix> = a.gap_part().iter().filter(|x| b.contains_gap(x)).cloned().collect();
                assert!(lattice.nodes.iter().any(|c| c.gap_part() == meet.as_slice()));
            }
        }
    }
}

/// Members of the box `max_entry < 2r` that are not a product of two
/// non-identity members.
fn brute_minimal_generators(s: &Monoid) -> Vec<UnipotentMatrix> {
    let members: Vec<UnipotentMatrix> =
        nonidentity_box(s.group(), 2 * s.r()).into_iter().filter(|x| s.contains(x)).collect();
    members
        .iter()
        .filter(|x| {
            !s.group().enumerate_below(x).iter().any(|a| {
                !a.is_identity() && a != *x && s.contains(a) && {
                    let b = dense_mul(&dense_inverse(a), x);
                    b.is_nonnegative() && s.contains(&b)
                }
            })
        })
        .cloned()
        .collect()
}

#[test]
fn minimal_generators_match_definition() {
    for s in all_monoids() {
        let gens = s.minimal_generators();
        assert_eq!(gens, brute_minimal_generators(&s), "{:?}", s.gap_list());
        match Monoid::from_generators(s.group(), &gens, 2 * s.r() + 2).unwrap() {
            Generated::Verified(t) => assert_eq!(t, s),
            Generated::Undecided(b) => panic!("undecided at {b}"),
        }
    }
}

#[test]
fn invariants_match_counts() {
    for s in all_monoids() {
        let inv = s.invariants();
        let r = s.r();
        assert_eq!(r, 1 + s.gap_list().iter().map(|x| x.max_nonneg()).max().unwrap_or(0));
        let below = s.group().enumerate_box(r);
        assert_eq!(inv.genus + inv.sporadicity, below.len());
        assert_eq!(inv.sporadic_set, below.iter().filter(|x| s.contains(x)).cloned().collect::<Vec<_>>());
        assert_eq!(inv.conductor, (r as u128).pow(s.group().dimension() as u32));
        for x in s.group().enumerate_box(2 * r) {
            if x.max_nonneg() >= r {
                assert!(s.contains(&x));
            }
        }
    }
}

fn quotient(side: Side, inv: &UnipotentMatrix, b: &UnipotentMatrix) -> UnipotentMatrix {
    if side == Side::Left {
        dense_mul(inv, b)
    } else {
        dense_mul(b, inv)
    }
}

fn member(s: &Monoid, x: &UnipotentMatrix) -> bool {
    x.is_nonnegative() && s.contains(x)
}

#[test]
fn apery_core_matches_definition() {
    for s in all_monoids() {
        for a in s.minimal_generators().iter().take(3) {
            let inv = dense_inverse(a);
            for side in [Side::Left, Side::Right] {
                let ap = AperySet::new(&s, a, side).unwrap();
                let bound = 1 + s
                    .gaps()
                    .iter()
                    .map(|c| dense_mul(a, c).max_nonneg().max(dense_mul(c, a).max_nonneg()))
                    .max()
                    .unwrap();
                let want: Vec<UnipotentMatrix> = s
                    .group()
                    .enumerate_box(bound)
                    .into_iter()
                    .filter(|b| s.contains(b) && !member(&s, &quotient(side, &inv, b)))
                    .collect();
                assert_eq!(ap.in_box(bound), want);
                let core: Vec<UnipotentMatrix> =
                    want.into_iter().filter(|b| quotient(side, &inv, b).is_nonnegative()).collect();
                assert_eq!(ap.core(), core.as_slice());
            }
        }
    }
}

/// Maxima of the core under the side's order, comparing by direct products.
fn brute_apery_maxima(s: &Monoid, a: &UnipotentMatrix, side: Side) -> BTreeSet<UnipotentMatrix> {
    let core: Vec<UnipotentMatrix> = s
        .gaps()
        .iter()
        .map(|c| if side == Side::Left { dense_mul(a, c) } else { dense_mul(c, a) })
        .filter(|b| s.contains(b))
        .collect();
    let below = |x: &UnipotentMatrix, y: &UnipotentMatrix| {
        let inv = dense_inverse(x);
        x != y && member(s, &quotient(side, &inv, y))
    };
    core.iter().filter(|x| !core.iter().any(|y| below(x, y))).cloned().collect()
}

#[test]
fn apery_maxima_match_definition() {
    for s in all_monoids() {
        let d = FrobeniusData::compute(&s).unwrap();
        let commutative = s.group().kind() == PatternKind::FirstRow;
        for a in s.minimal_generators().iter().take(3) {
            for side in [Side::Left, Side::Right] {
                let got = apery_maximal(&s, a, side).unwrap();
                assert_eq!(set(&got), brute_apery_maxima(&s, a, side), "{:?} pivot {a}", s.gap_list());
                if commutative {
                    let shifted: BTreeSet<_> = d.pseudo_frobenius(side).iter().map(|c| dense_mul(a, c)).collect();
                    assert_eq!(set(&got), shifted);
                }
            }
            assert_eq!(pf_from_apery(&s, a).unwrap(), d.pf_t);
        }
    }
}
