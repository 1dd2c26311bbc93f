//! Irreducibility, symmetry and the classification report.

mod enumerate;
mod verify;

pub use enumerate::{enumerate_irreducible, enumerate_monoids, enumerate_up_to};
pub use verify::{default_pivots, pf_from_apery, verify_theorems, CheckStatus, TheoremCheck};

use crate::error::Error;
use crate::ideals::minimal_nontrivial_parts;
use crate::invariants::FrobeniusData;
use crate::matrix::UnipotentMatrix;
use crate::monoid::Monoid;
use crate::orders::{Order, OrderKind, Side};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Search principal oversemigroups for a pair meeting in `S`.
    Oracle,
    /// Unique minimal nontrivial idempotent and `F_t = SG`.
    Torsion,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Symmetric,
    PseudoSymmetric,
    None,
}

impl Symmetry {
    pub fn as_str(self) -> &'static str {
        match self {
            Symmetry::Symmetric => "symmetric",
            Symmetry::PseudoSymmetric => "pseudo_symmetric",
            Symmetry::None => "none",
        }
    }
}

/// Outcome of one of the one-sided sufficient conditions for irreducibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub side: Side,
    pub single_frobenius: bool,
    pub holds: bool,
    /// First gap (canonical order) that reaches no Frobenius element.
    pub failing_gap: Option<UnipotentMatrix>,
}

/// Counting identities around the unique two-sided Frobenius element `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountIdentities {
    pub frobenius: UnipotentMatrix,
    /// Members and gaps in `[1, C]` for the two-sided order of `G(N)`.
    pub n_count: usize,
    pub g_count: usize,
    /// Lattice points entrywise below `C`, and the members among them.
    pub box_total: u128,
    pub box_members: usize,
    /// `prod (c_j + 1)` over the first row of `C`, for first-row patterns.
    pub cube_product: Option<u128>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub monoid: Monoid,
    pub r: i64,
    pub conductor: u128,
    pub genus: usize,
    pub sporadicity: usize,
    pub frobenius: FrobeniusData,
    pub irreducible: bool,
    /// The torsion criterion; agrees with `irreducible` unless something is wrong.
    pub torsion_irreducible: bool,
    pub reducibility_witness: Option<(Monoid, Monoid)>,
    pub symmetry: Symmetry,
    pub strong: bool,
    pub pseudo_witness: Option<UnipotentMatrix>,
    pub one_sided: Vec<ConditionOutcome>,
    pub counts: Option<CountIdentities>,
}

/// Irreducibility by the chosen method, with a witness pair when reducible
/// (oracle method only).
pub fn is_irreducible(s: &Monoid, method: Method) -> Result<(bool, Option<(Monoid, Monoid)>), Error> {
    if s.genus() == 0 {
        return Err(Error::EmptyGaps);
    }
    match method {
        Method::Oracle => {
            let w = reducibility_witness(s);
            Ok((w.is_none(), w))
        }
        Method::Torsion => {
            let data = FrobeniusData::compute(s)?;
            Ok((torsion_criterion(s, &data), None))
        }
    }
}

/// Two proper oversemigroups meeting in `S`, searched among the principal
/// ones `<S, a>`: any witness pair contains such a pair.
pub fn reducibility_witness(s: &Monoid) -> Option<(Monoid, Monoid)> {
    let gaps = s.gap_list();
    let closures = par::map(&gaps, |a| s.closure_with(std::slice::from_ref(a)));
    let idx: Vec<usize> = (0..closures.len()).collect();
    par::find_map_first(&idx, |&i| {
        (i + 1..closures.len()).find_map(|j| {
            let (t1, t2) = (&closures[i], &closures[j]);
            let meet_genus = t1.gaps().union(t2.gaps()).count();
            (meet_genus == s.genus()).then(|| (t1.clone(), t2.clone()))
        })
    })
}

pub(crate) fn torsion_criterion(s: &Monoid, data: &FrobeniusData) -> bool {
    minimal_nontrivial_parts(s).len() == 1 && data.f_t == data.sg
}

/// `(C ∈ AS, C ∈ SA)`.
fn reaches(s: &Monoid, c: &UnipotentMatrix, a: &UnipotentMatrix) -> (bool, bool) {
    (s.contains(&a.ldiv(c)), s.contains(&c.rdiv(a)))
}

fn all_reach(s: &Monoid, f: &[UnipotentMatrix], gaps: &[UnipotentMatrix], skip: Option<&UnipotentMatrix>, strong: bool) -> bool {
    gaps.iter().filter(|a| Some(*a) != skip).all(|a| {
        f.iter().any(|c| {
            let (l, r) = reaches(s, c, a);
            if strong {
                l && r
            } else {
                l || r
            }
        })
    })
}

/// Symmetry class of an irreducible monoid; `(None, false, None)` otherwise.
pub fn symmetry(s: &Monoid, data: &FrobeniusData, irreducible: bool) -> (Symmetry, bool, Option<UnipotentMatrix>) {
    if !irreducible {
        return (Symmetry::None, false, None);
    }
    let gaps = s.gap_list();
    let f = &data.f_t;
    if all_reach(s, f, &gaps, None, false) {
        return (Symmetry::Symmetric, all_reach(s, f, &gaps, None, true), None);
    }
    let roots: Vec<&UnipotentMatrix> = gaps.iter().filter(|b| f.binary_search(&(*b * *b)).is_ok()).collect();
    for b in &roots {
        if all_reach(s, f, &gaps, Some(b), false) {
            let strong = roots.iter().any(|b2| all_reach(s, f, &gaps, Some(b2), true));
            return (Symmetry::PseudoSymmetric, strong, Some((*b).clone()));
        }
    }
    (Symmetry::None, false, None)
}

/// The one-sided sufficient condition for irreducibility on the given side:
/// a single Frobenius element reached from every gap by a one-sided translate.
pub fn one_sided_condition(s: &Monoid, data: &FrobeniusData, side: Side) -> ConditionOutcome {
    let f = data.frobenius(side);
    let single = f.len() == 1;
    let failing_gap = if single {
        s.gaps()
            .iter()
            .find(|a| {
                let (l, r) = reaches(s, &f[0], a);
                !(l || r)
            })
            .cloned()
    } else {
        None
    };
    ConditionOutcome { side, single_frobenius: single, holds: single && failing_gap.is_none(), failing_gap }
}

/// Counts around the unique two-sided Frobenius element, when there is one.
pub fn count_identities(s: &Monoid, data: &FrobeniusData) -> Option<CountIdentities> {
    let [c] = data.f_t.as_slice() else {
        return None;
    };
    let whole = Monoid::whole(s.group());
    let (n_count, g_count) = Order::new(OrderKind::TwoSided, &whole).count_n_g(s, c);
    let below = s.group().enumerate_below(c);
    let box_members = below.iter().filter(|b| s.contains(b)).count();
    let cube_product = (s.group().kind() == crate::group::PatternKind::FirstRow)
        .then(|| c.first_row().iter().map(|&v| v as u128 + 1).product());
    Some(CountIdentities {
        frobenius: c.clone(),
        n_count,
        g_count,
        box_total: below.len() as u128,
        box_members,
        cube_product,
    })
}

/// Full classification. Irreducibility comes from the oracle; the torsion
/// criterion is recorded alongside it.
pub fn classify(s: &Monoid) -> Result<ClassificationReport, Error> {
    if s.genus() == 0 {
        return Err(Error::EmptyGaps);
    }
    let frobenius = FrobeniusData::compute(s)?;
    let witness = reducibility_witness(s);
    let oracle = witness.is_none();
    let torsion = torsion_criterion(s, &frobenius);
    let (symmetry, strong, pseudo_witness) = symmetry(s, &frobenius, oracle);
    let one_sided = Side::ALL.iter().map(|&side| one_sided_condition(s, &frobenius, side)).collect();
    let counts = count_identities(s, &frobenius);
    Ok(ClassificationReport {
        monoid: s.clone(),
        r: s.r(),
        conductor: s.conductor(),
        genus: s.genus(),
        sporadicity: s.sporadicity(),
        frobenius,
        irreducible: oracle,
        torsion_irreducible: torsion,
        reducibility_witness: witness,
        symmetry,
        strong,
        pseudo_witness,
        one_sided,
        counts,
    })
}

/// Classifies many monoids in parallel, keeping input order.
pub fn classify_all(monoids: &[Monoid]) -> Vec<Result<ClassificationReport, Error>> {
    par::map(monoids, classify)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PatternGroup;

    fn p(a: i64, b: i64) -> UnipotentMatrix {
        UnipotentMatrix::from_first_row(&[a, b])
    }

    #[test]
    fn test_reducible_pair() {
        let g = PatternGroup::first_row(3);
        let s = Monoid::from_gaps(&g, [p(0, 1), p(0, 3), p(3, 0), p(1, 0)]).unwrap();
        let (irr, w) = is_irreducible(&s, Method::Oracle).unwrap();
        assert!(!irr);
        let (t1, t2) = w.unwrap();
        assert_eq!(t1.intersect(&t2).unwrap(), s);
        assert!(!is_irreducible(&s, Method::Torsion).unwrap().0);
    }

    #[test]
    fn test_single_gap_is_irreducible() {
        let g = PatternGroup::full(3);
        for e in g.elementaries() {
            let s = Monoid::from_gaps(&g, [e]).unwrap();
            assert!(is_irreducible(&s, Method::Oracle).unwrap().0);
            assert!(is_irreducible(&s, Method::Torsion).unwrap().0);
        }
    }

    #[test]
    fn test_whole_group_rejected() {
        let s = Monoid::whole(&PatternGroup::first_row(3));
        assert_eq!(is_irreducible(&s, Method::Oracle), Err(Error::EmptyGaps));
        assert!(matches!(classify(&s), Err(Error::EmptyGaps)));
    }
}
