//! Named consistency checks run against a single monoid.

use super::{classify, ClassificationReport, Symmetry};
use crate::apery::{apery_maximal, AperySet};
use crate::error::Error;
use crate::invariants::{intersect_sorted, pseudo_frobenius_by_definition};
use crate::matrix::UnipotentMatrix;
use crate::monoid::Monoid;
use crate::orders::Side;
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremCheck {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> TheoremCheck {
    let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    TheoremCheck { name, status, detail: detail.into() }
}

fn skip(name: &'static str, detail: impl Into<String>) -> TheoremCheck {
    TheoremCheck { name, status: CheckStatus::NotApplicable, detail: detail.into() }
}

fn fmt_set(xs: &[UnipotentMatrix]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Up to three pivots: the first minimal generators in canonical order.
pub fn default_pivots(s: &Monoid) -> Vec<UnipotentMatrix> {
    s.minimal_generators().into_iter().take(3).collect()
}

/// `PF_t` rebuilt from the maximal elements of the left and right Apery sets.
pub fn pf_from_apery(s: &Monoid, pivot: &UnipotentMatrix) -> Result<Vec<UnipotentMatrix>, Error> {
    let mut left: Vec<UnipotentMatrix> =
        apery_maximal(s, pivot, Side::Left)?.iter().map(|w| pivot.ldiv(w)).collect();
    let mut right: Vec<UnipotentMatrix> =
        apery_maximal(s, pivot, Side::Right)?.iter().map(|w| w.rdiv(pivot)).collect();
    left.sort();
    right.sort();
    Ok(intersect_sorted(&left, &right))
}

fn apery_generates(s: &Monoid, pivots: &[UnipotentMatrix]) -> TheoremCheck {
    const NAME: &str = "apery_generates";
    let gens = s.minimal_generators();
    for a in pivots {
        for side in [Side::Left, Side::Right] {
            let ap = match AperySet::new(s, a, side) {
                Ok(ap) => ap,
                Err(e) => return check(NAME, false, e.to_string()),
            };
            if let Some(m) = gens.iter().find(|m| *m != a && !ap.contains(m)) {
                return check(NAME, false, format!("minimal generator {m} missing for pivot {a}"));
            }
        }
    }
    check(NAME, true, format!("{} pivots, both sides", pivots.len()))
}

/// Runs every check. Checks whose hypotheses fail are reported as n/a.
pub fn verify_theorems(s: &Monoid) -> Vec<TheoremCheck> {
    if s.genus() == 0 {
        return vec![skip("all", "the monoid has no gaps")];
    }
    let report = match classify(s) {
        Ok(r) => r,
        Err(e) => return vec![check("classify", false, e.to_string())],
    };
    let pivots = default_pivots(s);
    let mut out = vec![apery_generates(s, &pivots)];
    out.push(pf_maxima_definition(s, &report));
    out.push(pf_apery(s, &report, &pivots));
    out.push(frobenius_within_pf(&report));
    out.extend(irreducibility_checks(s, &report));
    out
}

fn pf_maxima_definition(s: &Monoid, report: &ClassificationReport) -> TheoremCheck {
    const NAME: &str = "pf_maxima_equals_definition";
    for side in Side::ALL {
        let by_def = match pseudo_frobenius_by_definition(s, side) {
            Ok(v) => v,
            Err(e) => return check(NAME, false, e.to_string()),
        };
        let by_max = report.frobenius.pseudo_frobenius(side);
        if by_def != by_max {
            return check(
                NAME,
                false,
                format!("side {}: maxima {} vs definition {}", side.short(), fmt_set(by_max), fmt_set(&by_def)),
            );
        }
    }
    check(NAME, true, "all sides")
}

fn pf_apery(s: &Monoid, report: &ClassificationReport, pivots: &[UnipotentMatrix]) -> TheoremCheck {
    const NAME: &str = "pf_from_apery_maxima";
    for a in pivots {
        match pf_from_apery(s, a) {
            Ok(pf) if pf == report.frobenius.pf_t => {}
            Ok(pf) => return check(NAME, false, format!("pivot {a}: {} vs PF_t {}", fmt_set(&pf), fmt_set(&report.frobenius.pf_t))),
            Err(e) => return check(NAME, false, e.to_string()),
        }
    }
    check(NAME, true, format!("{} pivots", pivots.len()))
}

fn frobenius_within_pf(report: &ClassificationReport) -> TheoremCheck {
    const NAME: &str = "frobenius_within_pf";
    let d = &report.frobenius;
    for side in Side::ALL {
        let f = d.frobenius(side);
        let pf = d.pseudo_frobenius(side);
        if let Some(x) = f.iter().find(|x| pf.binary_search(x).is_err()) {
            return check(NAME, false, format!("side {}: {x} not pseudo-Frobenius", side.short()));
        }
    }
    check(NAME, true, "all sides")
}

fn is_strong_either(report: &ClassificationReport) -> bool {
    report.strong && report.symmetry != Symmetry::None
}

fn irreducibility_checks(s: &Monoid, report: &ClassificationReport) -> Vec<TheoremCheck> {
    let d = &report.frobenius;
    let irr = report.irreducible;
    let mut out = Vec::new();

    out.push(check(
        "torsion_criterion_agrees",
        irr == report.torsion_irreducible,
        format!("oracle {irr}, torsion {}", report.torsion_irreducible),
    ));

    let single = d.f_t.len() == 1 && d.f_t == d.sg;
    out.push(if irr {
        check("irreducible_single_frobenius", single, format!("F_t {} SG {}", fmt_set(&d.f_t), fmt_set(&d.sg)))
    } else if d.f_t.len() > 1 {
        check("irreducible_single_frobenius", true, format!("|F_t| = {} and reducible", d.f_t.len()))
    } else {
        skip("irreducible_single_frobenius", "reducible")
    });

    out.push(if irr {
        check("irreducible_symmetric_or_pseudo", report.symmetry != Symmetry::None, report.symmetry.as_str())
    } else {
        skip("irreducible_symmetric_or_pseudo", "reducible")
    });

    out.push(if irr {
        check(
            "irreducible_strongly_symmetric_or_pseudo",
            is_strong_either(report),
            format!("{} strong={}", report.symmetry.as_str(), report.strong),
        )
    } else {
        skip("irreducible_strongly_symmetric_or_pseudo", "reducible")
    });

    out.push(if report.symmetry == Symmetry::Symmetric {
        check("symmetric_single_pf", d.pf_t.len() == 1 && d.f_t.len() == 1, format!("PF_t {}", fmt_set(&d.pf_t)))
    } else {
        skip("symmetric_single_pf", "not symmetric")
    });

    out.push(match (&report.counts, report.symmetry, report.strong) {
        (Some(c), Symmetry::Symmetric, true) => check(
            "frobenius_interval_counts",
            c.n_count == report.genus && c.g_count == report.genus,
            format!("n={} g={} genus={}", c.n_count, c.g_count, report.genus),
        ),
        _ => skip("frobenius_interval_counts", "needs strongly symmetric with |F_t| = 1"),
    });

    out.push(match (&report.counts, report.symmetry, report.strong) {
        (Some(c), Symmetry::Symmetric, true) => check(
            "box_count_identity",
            c.box_total as usize == report.genus + c.box_members,
            format!("box {} = genus {} + members {}", c.box_total, report.genus, c.box_members),
        ),
        _ => skip("box_count_identity", "needs strongly symmetric with |F_t| = 1"),
    });

    out.push(cube_check(report));

    for cond in &report.one_sided {
        let name = match cond.side {
            Side::Left => "one_sided_condition_left",
            Side::Right => "one_sided_condition_right",
            Side::TwoSided => "one_sided_condition_twosided",
        };
        out.push(if cond.holds {
            check(name, irr, "condition holds")
        } else {
            skip(name, match &cond.failing_gap {
                Some(a) => format!("condition fails at {a}"),
                None => "no single Frobenius element".to_string(),
            })
        });
    }

    out.push(maximality_check(s, report));

    out.push(check(
        "symmetry_exclusive",
        !(report.symmetry == Symmetry::Symmetric && report.pseudo_witness.is_some()),
        report.symmetry.as_str(),
    ));
    out
}

fn cube_check(report: &ClassificationReport) -> TheoremCheck {
    const NAME: &str = "cube_product";
    let Some(c) = &report.counts else {
        return skip(NAME, "|F_t| != 1");
    };
    let Some(prod) = c.cube_product else {
        return skip(NAME, "first-row patterns only");
    };
    let g = report.genus as u128;
    match (report.symmetry, report.strong) {
        (Symmetry::Symmetric, true) => check(NAME, prod == 2 * g, format!("{prod} vs 2g = {}", 2 * g)),
        (Symmetry::PseudoSymmetric, true) => check(NAME, prod + 1 == 2 * g, format!("{prod} vs 2g-1 = {}", 2 * g - 1)),
        _ => skip(NAME, "needs a strong symmetry class"),
    }
}

/// With a single Frobenius element on some side, irreducibility matches
/// maximality among monoids avoiding it. Every proper oversemigroup contains
/// a principal one, so the principal closures decide maximality.
fn maximality_check(s: &Monoid, report: &ClassificationReport) -> TheoremCheck {
    const NAME: &str = "irreducible_iff_maximal_avoiding_frobenius";
    let gaps = s.gap_list();
    let closures = par::map(&gaps, |a| s.closure_with(std::slice::from_ref(a)));
    let mut tested = Vec::new();
    for side in Side::ALL {
        let f = report.frobenius.frobenius(side);
        if f.len() != 1 {
            continue;
        }
        let maximal = closures.iter().all(|t| t.contains(&f[0]));
        if maximal != report.irreducible {
            return check(NAME, false, format!("side {}: maximal={maximal} irreducible={}", side.short(), report.irreducible));
        }
        tested.push(side.short());
    }
    if tested.is_empty() {
        skip(NAME, "no side has a single Frobenius element")
    } else {
        check(NAME, true, format!("sides {}", tested.join(",")))
    }
}
