mod common;

use common::dense_mul;
use proptest::prelude::*;
use unimon::matrix::upper_len;
use unimon::{PatternGroup, UnipotentMatrix};

fn matrix(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = UnipotentMatrix> {
    prop::collection::vec(lo..hi, upper_len(n)).prop_map(move |v| UnipotentMatrix::from_upper(n, v).unwrap())
}

fn triple(lo: i64, hi: i64) -> impl Strategy<Value = (UnipotentMatrix, UnipotentMatrix, UnipotentMatrix)> {
    (2usize..=5).prop_flat_map(move |n| (matrix(n, lo, hi), matrix(n, lo, hi), matrix(n, lo, hi)))
}

/// Projects a matrix onto a pattern by zeroing the other positions.
fn restrict(g: &PatternGroup, a: &UnipotentMatrix) -> UnipotentMatrix {
    let trip: Vec<(usize, usize, i64)> =
        g.positions().iter().map(|&(i, j)| (i, j, a.get(i, j))).collect();
    UnipotentMatrix::from_triples(a.n(), &trip).unwrap()
}

proptest! {
    #[test]
    fn product_matches_schoolbook((a, b, _) in triple(-30, 30)) {
        prop_assert_eq!(&a * &b, dense_mul(&a, &b));
    }

    #[test]
    fn associativity((a, b, c) in triple(-30, 30)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverse_both_sides((a, _, _) in triple(-30, 30)) {
        let id = UnipotentMatrix::identity(a.n());
        let inv = a.inverse();
        prop_assert_eq!(dense_mul(&a, &inv), id.clone());
        prop_assert_eq!(dense_mul(&inv, &a), id);
    }

    #[test]
    fn cancellativity((a, b, c) in triple(-5, 5)) {
        let ab = &a * &b;
        prop_assert_eq!(a.ldiv(&ab), b.clone());
        prop_assert_eq!(ab.rdiv(&b), a.clone());
        if ab == &a * &c {
            prop_assert_eq!(b, c);
        }
    }

    #[test]
    fn superadditive_and_growing((a, b, _) in triple(0, 40)) {
        let ab = &a * &b;
        for (k, v) in ab.upper().iter().enumerate() {
            prop_assert!(*v >= a.upper()[k] + b.upper()[k]);
        }
        prop_assert!(ab.max_nonneg() >= a.max_nonneg().max(b.max_nonneg()));
        prop_assert!(a.leq_entrywise(&ab) && b.leq_entrywise(&ab));
    }

    #[test]
    fn pattern_closure((a, b, _) in triple(-10, 10)) {
        let n = a.n();
        for g in [PatternGroup::full(n), PatternGroup::first_row(n)] {
            let (x, y) = (restrict(&g, &a), restrict(&g, &b));
            prop_assert!(g.in_group(&x) && g.in_group(&y));
            prop_assert!(g.in_group(&(&x * &y)));
            prop_assert!(g.in_group(&x.inverse()));
        }
    }

    #[test]
    fn first_row_is_additive(v in prop::collection::vec(0i64..50, 1..5), w in prop::collection::vec(0i64..50, 1..5)) {
        let k = v.len().min(w.len());
        let (a, b) = (UnipotentMatrix::from_first_row(&v[..k]), UnipotentMatrix::from_first_row(&w[..k]));
        let sum: Vec<i64> = v[..k].iter().zip(&w[..k]).map(|(x, y)| x + y).collect();
        prop_assert_eq!(&a * &b, UnipotentMatrix::from_first_row(&sum));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn canonical_order_is_lexicographic((a, b, _) in triple(-3, 3)) {
        prop_assert_eq!(a.cmp(&b), a.upper().cmp(b.upper()));
    }

    #[test]
    fn power_matches_repeated_product((a, _, _) in triple(0, 6), k in 0u32..5) {
        let mut want = UnipotentMatrix::identity(a.n());
        for _ in 0..k {
            want = dense_mul(&want, &a);
        }
        prop_assert_eq!(a.pow(k), want);
    }
}

#[test]
fn overflow_is_reported() {
    let big = UnipotentMatrix::from_upper(3, vec![i64::MAX, 0, i64::MAX]).unwrap();
    assert!(big.checked_mul(&big).is_err());
}

#[test]
fn small_products() {
    let e12 = UnipotentMatrix::elementary(3, 1, 2).unwrap();
    let e23 = UnipotentMatrix::elementary(3, 2, 3).unwrap();
    assert_eq!((&e12 * &e23).upper(), &[1, 1, 1]);
    assert_eq!((&e23 * &e12).upper(), &[1, 0, 1]);
    let a = UnipotentMatrix::from_upper(3, vec![1, 1, 1]).unwrap();
    assert_eq!(a.inverse().upper(), &[-1, 0, -1]);
    let v = UnipotentMatrix::from_first_row(&[2, 5, 1]);
    assert_eq!(v.inverse(), UnipotentMatrix::from_first_row(&[-2, -5, -1]));
    assert_eq!(UnipotentMatrix::elementary(3, 1, 3).unwrap().upper(), &[0, 1, 0]);
    assert_eq!(UnipotentMatrix::elementary(2, 1, 2).unwrap().upper(), &[1]);
}

#[test]
fn max_entry_and_entrywise_order() {
    let u = |v: [i64; 3]| UnipotentMatrix::from_upper(3, v.to_vec()).unwrap();
    assert_eq!(u([1, 2, 2]).max_entry().unwrap(), 2);
    assert_eq!(UnipotentMatrix::identity(4).max_entry().unwrap(), 0);
    assert_eq!(UnipotentMatrix::from_first_row(&[3, 3]).max_entry().unwrap(), 3);
    assert!(!u([1, 0, 2]).leq_entrywise(&u([0, 2, 2])));
    assert!(!u([0, 2, 2]).leq_entrywise(&u([1, 0, 2])));
    assert!(UnipotentMatrix::from_first_row(&[1, 0]).leq_entrywise(&UnipotentMatrix::from_first_row(&[3, 0])));
}

#[test]
fn boxes() {
    let p3 = PatternGroup::first_row(3);
    let u3 = PatternGroup::full(3);
    assert_eq!(p3.enumerate_box(2).len(), 4);
    assert_eq!(u3.enumerate_box(4).len(), 64);
    assert_eq!(u3.enumerate_box(1), vec![UnipotentMatrix::identity(3)]);
    let b = u3.enumerate_box(3);
    assert!(b.windows(2).all(|w| w[0] < w[1]));
    assert!(p3.in_group(&UnipotentMatrix::from_upper(3, vec![1, 1, 0]).unwrap()));
    assert!(!p3.in_group(&UnipotentMatrix::from_upper(3, vec![1, 1, 1]).unwrap()));
}
