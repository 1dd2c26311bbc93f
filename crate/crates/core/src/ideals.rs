//! Relative ideals, the torsion monoid of two-sided ideals containing `S`,
//! oversemigroups and the lattice of idempotents.

use std::collections::{BTreeSet, HashMap};

use crate::error::Error;
use crate::matrix::UnipotentMatrix;
use crate::monoid::Monoid;
use crate::orders::Side;
use crate::par;

/// Default cap on search nodes for torsion and oversemigroup enumeration.
pub const DEFAULT_MAX_NODES: usize = 2_000_000;

/// Expression tree for a relative ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealExpr {
    /// `ES`, `SE` or `SES` depending on the side.
    Generators(Vec<UnipotentMatrix>),
    /// Everything in `G(N)` except a finite complement.
    Cofinite(BTreeSet<UnipotentMatrix>),
    Product(Box<IdealExpr>, Box<IdealExpr>),
    Union(Box<IdealExpr>, Box<IdealExpr>),
    Intersection(Box<IdealExpr>, Box<IdealExpr>),
}

/// A left, right or two-sided relative ideal of a monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeIdeal {
    base: Monoid,
    side: Side,
    expr: IdealExpr,
}

fn check_element(s: &Monoid, a: &UnipotentMatrix) -> Result<(), Error> {
    if a.n() != s.n() {
        return Err(crate::error::MatrixError::SizeMismatch(a.n(), s.n()).into());
    }
    if !a.is_nonnegative() {
        return Err(Error::NegativeElement(a.clone()));
    }
    if !s.group().in_group(a) {
        return Err(Error::OutOfPattern(a.clone()));
    }
    Ok(())
}

impl RelativeIdeal {
    /// The ideal generated by `gens` on the given side.
    pub fn from_generators(s: &Monoid, side: Side, gens: &[UnipotentMatrix]) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        for g in gens {
            check_element(s, g)?;
        }
        let mut gens = gens.to_vec();
        gens.sort();
        gens.dedup();
        Ok(RelativeIdeal { base: s.clone(), side, expr: IdealExpr::Generators(gens) })
    }

    /// The cofinite ideal with the given complement; rejected unless stable.
    pub fn cofinite(s: &Monoid, side: Side, complement: impl IntoIterator<Item = UnipotentMatrix>) -> Result<Self, Error> {
        let complement: BTreeSet<UnipotentMatrix> = complement.into_iter().collect();
        for c in &complement {
            check_element(s, c)?;
        }
        for c in &complement {
            for x in s.group().enumerate_below(c) {
                if complement.contains(&x) {
                    continue;
                }
                if side != Side::Left {
                    let t = x.ldiv(c);
                    if t.is_nonnegative() && s.contains(&t) {
                        return Err(Error::NotStable(x, t));
                    }
                }
                if side != Side::Right {
                    let t = c.rdiv(&x);
                    if t.is_nonnegative() && s.contains(&t) {
                        return Err(Error::NotStable(t, x));
                    }
                }
            }
        }
        Ok(RelativeIdeal { base: s.clone(), side, expr: IdealExpr::Cofinite(complement) })
    }

    /// Builds an ideal from an expression without checks.
    pub(crate) fn from_expr(s: &Monoid, side: Side, expr: IdealExpr) -> Self {
        RelativeIdeal { base: s.clone(), side, expr }
    }

    pub fn base(&self) -> &Monoid {
        &self.base
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn expr(&self) -> &IdealExpr {
        &self.expr
    }

    /// The complement when the ideal is in cofinite form.
    pub fn complement(&self) -> Option<&BTreeSet<UnipotentMatrix>> {
        match &self.expr {
            IdealExpr::Cofinite(c) => Some(c),
            _ => None,
        }
    }

    /// Gaps of the base that lie in the ideal, when it is cofinite and contains `S`.
    pub fn gap_part(&self) -> Option<Vec<UnipotentMatrix>> {
        let c = self.complement()?;
        if !c.iter().all(|x| self.base.is_gap(x)) {
            return None;
        }
        Some(self.base.gaps().iter().filter(|g| !c.contains(*g)).cloned().collect())
    }

    pub fn contains(&self, a: &UnipotentMatrix) -> bool {
        if !a.is_nonnegative() || !self.base.group().in_group(a) {
            return false;
        }
        expr_contains(&self.base, self.side, &self.expr, a)
    }

    /// Whether every product of an element in the ideal with an element of `S`
    /// on the ideal's side stays inside, checked on the box `max_entry < bound`.
    pub fn is_stable_boxed(&self, bound: i64) -> bool {
        let s = &self.base;
        let members: Vec<UnipotentMatrix> =
            s.group().enumerate_box(bound).into_iter().filter(|x| self.contains(x)).collect();
        let monoid_box = s.members_in_box(bound);
        par::all(&members, |x| {
            monoid_box.iter().all(|t| {
                (self.side == Side::Left || self.contains(&(x * t)))
                    && (self.side == Side::Right || self.contains(&(t * x)))
            })
        })
    }

    /// Minimal elements under divisibility on the ideal's side: `y = x s`
    /// for right ideals, `y = s x` for left ones and `y = u x v` for two-sided.
    /// Equivalently the elements of `I` outside `I S*` (resp. `S* I`, `S* I ∪ I S*`).
    pub fn min_generators(&self, bound: Option<i64>) -> Result<Vec<UnipotentMatrix>, Error> {
        let bound = match (self.complement(), bound) {
            (_, Some(b)) => b,
            (Some(c), None) => {
                let k = c.iter().map(|x| x.max_nonneg() + 1).max().unwrap_or(1).max(self.base.r());
                2 * k
            }
            (None, None) => return Err(Error::NotCofinite),
        };
        let members: Vec<UnipotentMatrix> = self
            .base
            .group()
            .enumerate_box(bound)
            .into_iter()
            .filter(|x| self.contains(x))
            .collect();
        Ok(par::filter(&members, |y| !self.is_proper_multiple(y)))
    }

    /// Whether `y` is in `I S*` (right), `S* I` (left) or either (two-sided).
    fn is_proper_multiple(&self, y: &UnipotentMatrix) -> bool {
        let s = &self.base;
        s.group().enumerate_below(y).iter().any(|x| {
            if x == y || !self.contains(x) {
                return false;
            }
            let right = || {
                let t = x.ldiv(y);
                t.is_nonnegative() && s.contains(&t)
            };
            let left = || {
                let t = y.rdiv(x);
                t.is_nonnegative() && s.contains(&t)
            };
            match self.side {
                Side::Right => right(),
                Side::Left => left(),
                Side::TwoSided => right() || left(),
            }
        })
    }
}

fn expr_contains(s: &Monoid, side: Side, expr: &IdealExpr, a: &UnipotentMatrix) -> bool {
    match expr {
        IdealExpr::Cofinite(c) => !c.contains(a),
        IdealExpr::Generators(gens) => gens.iter().any(|e| generated_by(s, side, e, a)),
        IdealExpr::Union(i, j) => expr_contains(s, side, i, a) || expr_contains(s, side, j, a),
        IdealExpr::Intersection(i, j) => expr_contains(s, side, i, a) && expr_contains(s, side, j, a),
        IdealExpr::Product(i, j) => s.group().enumerate_below(a).iter().any(|x| {
            if !expr_contains(s, side, i, x) {
                return false;
            }
            let y = x.ldiv(a);
            y.is_nonnegative() && expr_contains(s, side, j, &y)
        }),
    }
}

/// Whether `a` is in `eS`, `Se` or `SeS`.
fn generated_by(s: &Monoid, side: Side, e: &UnipotentMatrix, a: &UnipotentMatrix) -> bool {
    match side {
        Side::Right => s.contains(&e.ldiv(a)),
        Side::Left => s.contains(&a.rdiv(e)),
        Side::TwoSided => s.group().enumerate_below(a).iter().any(|u| {
            if !s.contains(u) {
                return false;
            }
            let rest = u.ldiv(a);
            rest.is_nonnegative() && s.contains(&e.ldiv(&rest))
        }),
    }
}

fn same_frame(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<(), Error> {
    if i.base != j.base || i.side != j.side {
        return Err(Error::Mismatch);
    }
    Ok(())
}

/// `IJ`. Exact and cofinite when both operands are cofinite and contain `S`.
pub fn ideal_product(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<RelativeIdeal, Error> {
    same_frame(i, j)?;
    if let (Some(a), Some(b)) = (i.gap_part(), j.gap_part()) {
        let part = torsion_product(&i.base, &a, &b);
        let complement = i.base.gaps().iter().filter(|g| part.binary_search(g).is_err()).cloned();
        return Ok(RelativeIdeal::from_expr(&i.base, i.side, IdealExpr::Cofinite(complement.collect())));
    }
    let expr = IdealExpr::Product(Box::new(i.expr.clone()), Box::new(j.expr.clone()));
    Ok(RelativeIdeal::from_expr(&i.base, i.side, expr))
}

/// `I ∪ J`.
pub fn ideal_union(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<RelativeIdeal, Error> {
    same_frame(i, j)?;
    let expr = match (i.complement(), j.complement()) {
        (Some(a), Some(b)) => IdealExpr::Cofinite(a.intersection(b).cloned().collect()),
        _ => IdealExpr::Union(Box::new(i.expr.clone()), Box::new(j.expr.clone())),
    };
    Ok(RelativeIdeal::from_expr(&i.base, i.side, expr))
}

/// `I ∩ J`.
pub fn ideal_intersection(i: &RelativeIdeal, j: &RelativeIdeal) -> Result<RelativeIdeal, Error> {
    same_frame(i, j)?;
    let expr = match (i.complement(), j.complement()) {
        (Some(a), Some(b)) => IdealExpr::Cofinite(a.union(b).cloned().collect()),
        _ => IdealExpr::Intersection(Box::new(i.expr.clone()), Box::new(j.expr.clone())),
    };
    Ok(RelativeIdeal::from_expr(&i.base, i.side, expr))
}

/// Free-function form of [`RelativeIdeal::from_generators`].
pub fn ideal_from_generators(s: &Monoid, side: Side, gens: &[UnipotentMatrix]) -> Result<RelativeIdeal, Error> {
    RelativeIdeal::from_generators(s, side, gens)
}

/// Free-function form of [`RelativeIdeal::contains`].
pub fn ideal_contains(i: &RelativeIdeal, a: &UnipotentMatrix) -> bool {
    i.contains(a)
}

/// Free-function form of [`RelativeIdeal::min_generators`] with the default box.
pub fn ideal_min_generators(i: &RelativeIdeal) -> Result<Vec<UnipotentMatrix>, Error> {
    i.min_generators(None)
}

// ---------------------------------------------------------------------------
// Torsion monoid

/// A two-sided cofinite ideal containing `S`, stored by the gaps it contains.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorsionElement {
    gap_part: Vec<UnipotentMatrix>,
}

impl TorsionElement {
    pub fn new(mut gap_part: Vec<UnipotentMatrix>) -> Self {
        gap_part.sort();
        gap_part.dedup();
        TorsionElement { gap_part }
    }

    /// Gaps of the base that belong to the ideal, in canonical order.
    pub fn gap_part(&self) -> &[UnipotentMatrix] {
        &self.gap_part
    }

    pub fn len(&self) -> usize {
        self.gap_part.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gap_part.is_empty()
    }

    pub fn contains_gap(&self, g: &UnipotentMatrix) -> bool {
        self.gap_part.binary_search(g).is_ok()
    }

    pub fn is_subset(&self, other: &TorsionElement) -> bool {
        self.gap_part.iter().all(|g| other.contains_gap(g))
    }

    pub fn to_ideal(&self, s: &Monoid) -> RelativeIdeal {
        let complement = s.gaps().iter().filter(|g| !self.contains_gap(g)).cloned().collect();
        RelativeIdeal::from_expr(s, Side::TwoSided, IdealExpr::Cofinite(complement))
    }

    /// The monoid `S ∪ gap_part`, if it is one.
    pub fn as_monoid(&self, s: &Monoid) -> Result<Monoid, Error> {
        Monoid::from_gaps(s.group(), s.gaps().iter().filter(|g| !self.contains_gap(g)).cloned())
    }

    pub fn product(&self, s: &Monoid, other: &TorsionElement) -> TorsionElement {
        TorsionElement { gap_part: torsion_product(s, &self.gap_part, &other.gap_part) }
    }

    pub fn is_idempotent(&self, s: &Monoid) -> bool {
        self.product(s, self) == *self
    }
}

/// Gap part of `(S ∪ A)(S ∪ B)`: gaps in `AS ∪ SB ∪ AB`.
fn torsion_product(s: &Monoid, a: &[UnipotentMatrix], b: &[UnipotentMatrix]) -> Vec<UnipotentMatrix> {
    let gaps = s.gap_list();
    let in_b = |x: &UnipotentMatrix| b.binary_search(x).is_ok();
    par::filter(&gaps, |h| {
        a.iter().any(|x| {
            if !x.leq_entrywise(h) {
                return false;
            }
            let q = x.ldiv(h);
            q.is_nonnegative() && (s.contains(&q) || in_b(&q))
        }) || b.iter().any(|y| {
            if !y.leq_entrywise(h) {
                return false;
            }
            let q = h.rdiv(y);
            q.is_nonnegative() && s.contains(&q)
        })
    })
}

/// Gaps with successor lists for the translation relation `a -> as, sa`
/// (`s` in `S*`), ordered by decreasing entry sum so successors come first.
struct GapGraph {
    gaps: Vec<UnipotentMatrix>,
    succ: Vec<Vec<usize>>,
}

impl GapGraph {
    fn new(s: &Monoid) -> Self {
        let mut gaps = s.gap_list();
        gaps.sort_by(|x, y| y.entry_sum().cmp(&x.entry_sum()).then_with(|| x.cmp(y)));
        let index: HashMap<&UnipotentMatrix, usize> = gaps.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let succ = par::map(&gaps, |a| {
            let mut out: Vec<usize> = index
                .iter()
                .filter(|(h, _)| a.leq_entrywise(h) && a != **h)
                .filter(|(h, _)| {
                    let l = a.ldiv(h);
                    let r = h.rdiv(a);
                    (l.is_nonnegative() && s.contains(&l)) || (r.is_nonnegative() && s.contains(&r))
                })
                .map(|(_, &j)| j)
                .collect();
            out.sort_unstable();
            out
        });
        GapGraph { gaps, succ }
    }
}

/// Every two-sided cofinite ideal containing `S`, in order of size and then
/// gap part.
pub fn torsion_monoid(s: &Monoid, max_nodes: usize) -> Result<Vec<TorsionElement>, Error> {
    let graph = GapGraph::new(s);
    let g = graph.gaps.len();
    let mut chosen = vec![false; g];
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut nodes = 0usize;
    // Deciding gaps in order means every successor is already fixed; a gap may
    // join only when all its successors have.
    fn walk(
        k: usize,
        graph: &GapGraph,
        chosen: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        nodes: &mut usize,
        cap: usize,
    ) -> Result<(), Error> {
        *nodes += 1;
        if *nodes > cap {
            return Err(Error::Infeasible(cap));
        }
        if k == graph.gaps.len() {
            out.push((0..k).filter(|&i| chosen[i]).collect());
            return Ok(());
        }
        walk(k + 1, graph, chosen, out, nodes, cap)?;
        if graph.succ[k].iter().all(|&j| chosen[j]) {
            chosen[k] = true;
            walk(k + 1, graph, chosen, out, nodes, cap)?;
            chosen[k] = false;
        }
        Ok(())
    }
    walk(0, &graph, &mut chosen, &mut out, &mut nodes, max_nodes)?;
    Ok(sorted_elements(&graph.gaps, out))
}

fn sorted_elements(gaps: &[UnipotentMatrix], sets: Vec<Vec<usize>>) -> Vec<TorsionElement> {
    let mut out: Vec<TorsionElement> = sets
        .into_iter()
        .map(|ix| TorsionElement::new(ix.into_iter().map(|i| gaps[i].clone()).collect()))
        .collect();
    out.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    out
}

/// Every monoid `T` with `S ⊆ T ⊆ G(N)`, as torsion elements (the gaps of `S`
/// that `T` contains), in order of size and then gap part.
pub fn oversemigroup_parts(s: &Monoid, max_nodes: usize) -> Result<Vec<TorsionElement>, Error> {
    let graph = GapGraph::new(s);
    let g = graph.gaps.len();
    let index: HashMap<&UnipotentMatrix, usize> = graph.gaps.iter().enumerate().map(|(i, x)| (x, i)).collect();
    // prod[a][b] = index of the gap a*b, if it is a gap.
    let prod: Vec<Vec<Option<usize>>> =
        par::map(&graph.gaps, |a| graph.gaps.iter().map(|b| index.get(&(a * b)).copied()).collect());
    let mut chosen = vec![false; g];
    let mut picked: Vec<usize> = Vec::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut nodes = 0usize;

    struct Ctx<'a> {
        graph: &'a GapGraph,
        prod: &'a [Vec<Option<usize>>],
        cap: usize,
    }

    fn can_join(ctx: &Ctx, k: usize, chosen: &[bool], picked: &[usize]) -> bool {
        let ok = |x: Option<usize>| x.is_none_or(|j| chosen[j]);
        ctx.graph.succ[k].iter().all(|&j| chosen[j])
            && ok(ctx.prod[k][k])
            && picked.iter().all(|&b| ok(ctx.prod[k][b]) && ok(ctx.prod[b][k]))
    }

    fn walk(
        k: usize,
        ctx: &Ctx,
        chosen: &mut Vec<bool>,
        picked: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        nodes: &mut usize,
    ) -> Result<(), Error> {
        *nodes += 1;
        if *nodes > ctx.cap {
            return Err(Error::Infeasible(ctx.cap));
        }
        if k == ctx.graph.gaps.len() {
            let mut set = picked.clone();
            set.sort_unstable();
            out.push(set);
            return Ok(());
        }
        walk(k + 1, ctx, chosen, picked, out, nodes)?;
        if can_join(ctx, k, chosen, picked) {
            chosen[k] = true;
            picked.push(k);
            walk(k + 1, ctx, chosen, picked, out, nodes)?;
            picked.pop();
            chosen[k] = false;
        }
        Ok(())
    }

    let ctx = Ctx { graph: &graph, prod: &prod, cap: max_nodes };
    walk(0, &ctx, &mut chosen, &mut picked, &mut out, &mut nodes)?;
    Ok(sorted_elements(&graph.gaps, out))
}

/// Every monoid containing `S`, smallest first.
pub fn oversemigroups(s: &Monoid, max_nodes: usize) -> Result<Vec<Monoid>, Error> {
    Ok(oversemigroup_parts(s, max_nodes)?
        .iter()
        .map(|t| t.as_monoid(s).expect("enumerated parts are closed"))
        .collect())
}

/// The smallest monoid containing `S` and the gap `a`, grown forward from `a`
/// along translations and products.
pub fn principal_part(s: &Monoid, a: &UnipotentMatrix) -> TorsionElement {
    let gaps = s.gap_list();
    let mut inside: BTreeSet<UnipotentMatrix> = BTreeSet::new();
    let mut queue = vec![a.clone()];
    inside.insert(a.clone());
    while let Some(x) = queue.pop() {
        for h in &gaps {
            if inside.contains(h) || !x.leq_entrywise(h) {
                continue;
            }
            let usable = |y: &UnipotentMatrix| y.is_nonnegative() && !y.is_identity() && (s.contains(y) || inside.contains(y));
            if usable(&x.ldiv(h)) || usable(&h.rdiv(&x)) {
                inside.insert(h.clone());
                queue.push(h.clone());
            }
        }
    }
    TorsionElement::new(inside.into_iter().collect())
}

/// Minimal nontrivial idempotents, found as the minimal principal
/// oversemigroups: every nontrivial oversemigroup contains one.
pub fn minimal_nontrivial_parts(s: &Monoid) -> Vec<TorsionElement> {
    let gaps = s.gap_list();
    let mut parts = par::map(&gaps, |a| principal_part(s, a));
    parts.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    parts.dedup();
    parts
        .iter()
        .filter(|p| !parts.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

/// The idempotents of the torsion monoid ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentLattice {
    /// Nodes by size and then gap part; node 0 is `S` itself.
    pub nodes: Vec<TorsionElement>,
    /// Covering pairs `(lower, upper)`, sorted.
    pub hasse_edges: Vec<(usize, usize)>,
    /// Indices of the atoms.
    pub minimal_nontrivial: Vec<usize>,
}

impl IdempotentLattice {
    pub fn from_nodes(nodes: Vec<TorsionElement>) -> Self {
        let covers = par::map(&(0..nodes.len()).collect::<Vec<_>>(), |&i| {
            let above: Vec<usize> =
                (0..nodes.len()).filter(|&j| j != i && nodes[i].is_subset(&nodes[j])).collect();
            above
                .iter()
                .copied()
                .filter(|&j| !above.iter().any(|&k| k != j && nodes[k].is_subset(&nodes[j])))
                .map(|j| (i, j))
                .collect::<Vec<_>>()
        });
        let mut hasse_edges: Vec<(usize, usize)> = covers.into_iter().flatten().collect();
        hasse_edges.sort_unstable();
        let minimal_nontrivial = hasse_edges.iter().filter(|e| e.0 == 0).map(|e| e.1).collect();
        IdempotentLattice { nodes, hasse_edges, minimal_nontrivial }
    }
}

/// The lattice of idempotents, built from the oversemigroups of `S`.
pub fn torsion_idempotents(s: &Monoid, max_nodes: usize) -> Result<IdempotentLattice, Error> {
    Ok(IdempotentLattice::from_nodes(oversemigroup_parts(s, max_nodes)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PatternGroup;

    fn p(a: i64, b: i64) -> UnipotentMatrix {
        UnipotentMatrix::from_first_row(&[a, b])
    }

    fn fund2() -> Monoid {
        Monoid::fundamental(&PatternGroup::first_row(3), 2)
    }

    fn part(xs: &[(i64, i64)]) -> TorsionElement {
        TorsionElement::new(xs.iter().map(|&(a, b)| p(a, b)).collect())
    }

    #[test]
    fn test_fund2_torsion_counts() {
        let s = fund2();
        assert_eq!(torsion_monoid(&s, 1000).unwrap().len(), 8);
        let lattice = torsion_idempotents(&s, 1000).unwrap();
        assert_eq!(lattice.nodes.len(), 7);
        assert_eq!(lattice.hasse_edges.len(), 9);
        assert_eq!(lattice.minimal_nontrivial.len(), 3);
    }

    #[test]
    fn test_torsion_products() {
        let s = fund2();
        let t1 = part(&[(1, 0)]);
        let t3 = part(&[(0, 1)]);
        assert_eq!(t1.product(&s, &t3), part(&[(0, 1), (1, 0), (1, 1)]));
        let t2 = part(&[(1, 1)]);
        assert!(t2.is_idempotent(&s));
        let t13 = part(&[(0, 1), (1, 0)]);
        assert!(!t13.is_idempotent(&s));
    }

    #[test]
    fn test_generated_ideal_membership() {
        let s = fund2();
        let left = RelativeIdeal::from_generators(&s, Side::Left, &[p(1, 1)]).unwrap();
        assert!(left.contains(&p(1, 1)));
        assert!(left.contains(&p(1, 3)));
        assert!(!left.contains(&p(2, 2)));
        let right = RelativeIdeal::from_generators(&s, Side::Right, &[p(1, 1)]).unwrap();
        assert!(!right.contains(&p(2, 2)));
        assert!(!right.contains(&p(0, 1)));
        assert!(matches!(RelativeIdeal::from_generators(&s, Side::Left, &[]), Err(Error::EmptyGeneratorSet)));
    }

    #[test]
    fn test_cofinite_stability() {
        let s = fund2();
        assert!(RelativeIdeal::cofinite(&s, Side::TwoSided, [p(0, 1), p(1, 0)]).is_ok());
        assert!(RelativeIdeal::cofinite(&s, Side::TwoSided, [p(1, 1)]).is_ok());
        assert!(matches!(RelativeIdeal::cofinite(&s, Side::Right, [p(2, 2)]), Err(Error::NotStable(_, _))));
    }

    #[test]
    fn test_union_intersection() {
        let s = fund2();
        let t4 = part(&[(1, 0), (1, 1)]).to_ideal(&s);
        let t5 = part(&[(0, 1), (1, 1)]).to_ideal(&s);
        let meet = ideal_intersection(&t4, &t5).unwrap();
        assert_eq!(meet.gap_part().unwrap(), vec![p(1, 1)]);
        let join = ideal_union(&t4, &t4).unwrap();
        assert_eq!(join, t4);
    }

    #[test]
    fn test_principal_parts() {
        let s = Monoid::from_gaps(&PatternGroup::first_row(3), [p(0, 1), p(0, 3), p(3, 0), p(1, 0)]).unwrap();
        assert_eq!(principal_part(&s, &p(1, 0)), part(&[(1, 0), (3, 0)]));
        assert_eq!(minimal_nontrivial_parts(&s), vec![part(&[(0, 3)]), part(&[(3, 0)])]);
    }
}
