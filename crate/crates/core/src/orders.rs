//! The S-orders and the entrywise order on `G(N)`.

use crate::matrix::UnipotentMatrix;
use crate::monoid::Monoid;
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    /// `A <= B` iff `A^{-1} B` is in S.
    Left,
    /// `A <= B` iff `B A^{-1}` is in S.
    Right,
    /// Both of the above.
    TwoSided,
    /// Entrywise comparison; the monoid is ignored.
    Entrywise,
}

/// Side of an Apery set, Frobenius set or relative ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::Left, Side::Right, Side::TwoSided];

    /// The S-order with the same handedness.
    pub fn order_kind(self) -> OrderKind {
        match self {
            Side::Left => OrderKind::Left,
            Side::Right => OrderKind::Right,
            Side::TwoSided => OrderKind::TwoSided,
        }
    }

    pub fn short(self) -> &'static str {
        match self {
            Side::Left => "l",
            Side::Right => "r",
            Side::TwoSided => "t",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extremum {
    Max,
    Min,
}

/// An order on `G(N)` relative to a monoid.
#[derive(Clone, Copy, Debug)]
pub struct Order<'a> {
    pub kind: OrderKind,
    pub monoid: &'a Monoid,
}

impl<'a> Order<'a> {
    pub fn new(kind: OrderKind, monoid: &'a Monoid) -> Self {
        Order { kind, monoid }
    }

    pub fn leq(&self, a: &UnipotentMatrix, b: &UnipotentMatrix) -> bool {
        let s = self.monoid;
        match self.kind {
            OrderKind::Left => s.contains(&a.ldiv(b)),
            OrderKind::Right => s.contains(&b.rdiv(a)),
            OrderKind::TwoSided => s.contains(&a.ldiv(b)) && s.contains(&b.rdiv(a)),
            OrderKind::Entrywise => a.leq_entrywise(b),
        }
    }

    pub fn lt(&self, a: &UnipotentMatrix, b: &UnipotentMatrix) -> bool {
        a != b && self.leq(a, b)
    }

    /// All `C` with `A <= C <= B`, in canonical order.
    pub fn interval(&self, a: &UnipotentMatrix, b: &UnipotentMatrix) -> Vec<UnipotentMatrix> {
        if !a.leq_entrywise(b) {
            return Vec::new();
        }
        let boxed = self.monoid.group().enumerate_between(a, b);
        par::filter(&boxed, |c| self.leq(a, c) && self.leq(c, b))
    }

    /// Maximal or minimal elements of a finite set, in canonical order.
    pub fn extremal(&self, xs: &[UnipotentMatrix], which: Extremum) -> Vec<UnipotentMatrix> {
        let mut out = par::filter(xs, |x| {
            !xs.iter().any(|y| match which {
                Extremum::Max => self.lt(x, y),
                Extremum::Min => self.lt(y, x),
            })
        });
        out.sort();
        out.dedup();
        out
    }

    /// `(|{B in S : 1 <= B <= C}|, |{B in Gaps(S) : 1 <= B <= C}|)` where `<=`
    /// is this order and `S` may differ from the order's own monoid.
    pub fn count_n_g(&self, s: &Monoid, c: &UnipotentMatrix) -> (usize, usize) {
        let below = self.interval(&s.identity(), c);
        let n = below.iter().filter(|b| s.contains(b)).count();
        (n, below.len() - n)
    }

    /// Whether `S \ I` is a lower set of `(S, <=)` on the box `max_entry < bound`.
    pub fn is_lower_order_ideal_boxed(
        &self,
        in_ideal: &(dyn Fn(&UnipotentMatrix) -> bool + Sync),
        bound: i64,
    ) -> bool {
        let s = self.monoid;
        let outside: Vec<UnipotentMatrix> =
            s.members_in_box(bound).into_iter().filter(|y| !in_ideal(y)).collect();
        par::all(&outside, |y| {
            s.group()
                .enumerate_below(y)
                .iter()
                .all(|x| !(s.contains(x) && self.leq(x, y)) || !in_ideal(x))
        })
    }
}

/// `A ⪯ B`: the two-sided order of `G(N)`, i.e. both quotients nonnegative.
pub fn preceq(a: &UnipotentMatrix, b: &UnipotentMatrix) -> bool {
    a.ldiv(b).is_nonnegative() && b.rdiv(a).is_nonnegative()
}

/// Free-function form of [`Order::count_n_g`].
pub fn count_n_g(s: &Monoid, c: &UnipotentMatrix, order: &Order<'_>) -> (usize, usize) {
    order.count_n_g(s, c)
}

/// Free-function form of [`Order::leq`].
pub fn s_leq(kind: OrderKind, s: &Monoid, a: &UnipotentMatrix, b: &UnipotentMatrix) -> bool {
    Order::new(kind, s).leq(a, b)
}
