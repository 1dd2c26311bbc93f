//! JSON documents for matrices, groups, monoids, ideals, reports and lattices.
//!
//! Matrices are `{"n": n, "entries": [[i, j, v], ...]}` with the nonzero
//! strictly-upper entries, or `{"vector": [a_12, ..., a_1n]}` for first-row
//! patterns. Serialization is canonical, so parse followed by serialize
//! reproduces a canonical document byte for byte.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{
    CheckStatus, ClassificationReport, ConditionOutcome, CountIdentities, Symmetry, TheoremCheck,
};
use crate::error::Error;
use crate::group::{PatternGroup, PatternKind};
use crate::ideals::{IdealExpr, IdempotentLattice, RelativeIdeal, TorsionElement};
use crate::invariants::FrobeniusData;
use crate::matrix::UnipotentMatrix;
use crate::monoid::{Generated, Monoid};
use crate::orders::Side;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("malformed document: {0}")]
    Shape(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

fn shape(msg: impl Into<String>) -> JsonError {
    JsonError::Shape(msg.into())
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum MatrixJson {
    Vector { vector: Vec<i64> },
    Entries { n: usize, entries: Vec<(usize, usize, i64)> },
}

impl MatrixJson {
    /// Vector form for first-row patterns, entry form otherwise.
    pub fn from_matrix(m: &UnipotentMatrix, vector_form: bool) -> Self {
        if vector_form {
            MatrixJson::Vector { vector: m.first_row() }
        } else {
            MatrixJson::Entries { n: m.n(), entries: m.triples() }
        }
    }

    /// Parses against an expected size, when one is known.
    pub fn to_matrix(&self, n: Option<usize>) -> Result<UnipotentMatrix, JsonError> {
        let m = match self {
            MatrixJson::Vector { vector } => {
                if vector.is_empty() {
                    return Err(shape("empty vector"));
                }
                UnipotentMatrix::from_first_row(vector)
            }
            MatrixJson::Entries { n, entries } => {
                UnipotentMatrix::from_triples(*n, entries).map_err(Error::from)?
            }
        };
        match n {
            Some(n) if n != m.n() => Err(Error::from(crate::error::MatrixError::SizeMismatch(m.n(), n)).into()),
            _ => Ok(m),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(untagged)]
pub enum PatternJson {
    Named(String),
    Positions(Vec<(usize, usize)>),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct GroupJson {
    pub n: usize,
    pub pattern: PatternJson,
}

impl GroupJson {
    pub fn from_group(g: &PatternGroup) -> Self {
        let pattern = match g.kind() {
            PatternKind::Full => PatternJson::Named("full".into()),
            PatternKind::FirstRow => PatternJson::Named("first_row".into()),
            PatternKind::Custom => PatternJson::Positions(g.positions().to_vec()),
        };
        GroupJson { n: g.n(), pattern }
    }

    pub fn to_group(&self) -> Result<PatternGroup, JsonError> {
        if self.n < 2 {
            return Err(Error::from(crate::error::MatrixError::BadSize(self.n)).into());
        }
        match &self.pattern {
            PatternJson::Named(s) => parse_pattern(s, self.n),
            PatternJson::Positions(p) => Ok(PatternGroup::custom(self.n, p)?),
        }
    }
}

/// `full` or `first_row` (also `U` and `P`).
pub fn parse_pattern(name: &str, n: usize) -> Result<PatternGroup, JsonError> {
    if n < 2 {
        return Err(Error::from(crate::error::MatrixError::BadSize(n)).into());
    }
    match name {
        "full" | "U" => Ok(PatternGroup::full(n)),
        "first_row" | "P" => Ok(PatternGroup::first_row(n)),
        other => Err(shape(format!("unknown pattern {other:?}"))),
    }
}

fn vector_form(g: &PatternGroup) -> bool {
    g.kind() == PatternKind::FirstRow
}

fn matrices_json(g: &PatternGroup, xs: &[UnipotentMatrix]) -> Vec<MatrixJson> {
    xs.iter().map(|x| MatrixJson::from_matrix(x, vector_form(g))).collect()
}

fn matrices_from(g: &PatternGroup, xs: &[MatrixJson]) -> Result<Vec<UnipotentMatrix>, JsonError> {
    xs.iter().map(|x| x.to_matrix(Some(g.n()))).collect()
}

/// A monoid by gaps, or by generators closed in a search box.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct MonoidJson {
    pub group: GroupJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gaps: Option<Vec<MatrixJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<MatrixJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub search_bound: Option<i64>,
}

/// Result of reading a monoid document.
#[derive(Clone, Debug)]
pub enum ParsedMonoid {
    Valid(Monoid),
    /// Generators whose closure could not be certified cofinite in the box.
    Undecided(i64),
}

impl MonoidJson {
    pub fn from_monoid(s: &Monoid) -> Self {
        MonoidJson {
            group: GroupJson::from_group(s.group()),
            gaps: Some(matrices_json(s.group(), &s.gap_list())),
            generators: None,
            search_bound: None,
        }
    }

    pub fn to_monoid(&self) -> Result<ParsedMonoid, JsonError> {
        let g = self.group.to_group()?;
        match (&self.gaps, &self.generators) {
            (Some(gaps), None) => Ok(ParsedMonoid::Valid(Monoid::from_gaps(&g, matrices_from(&g, gaps)?)?)),
            (None, Some(gens)) => {
                let gens = matrices_from(&g, gens)?;
                if gens.is_empty() {
                    return Err(Error::EmptyGeneratorSet.into());
                }
                let bound = self.search_bound.unwrap_or_else(|| 4 * gens.iter().map(|x| x.max_nonneg()).max().unwrap_or(1).max(1) + 2);
                Ok(match Monoid::from_generators(&g, &gens, bound)? {
                    Generated::Verified(m) => ParsedMonoid::Valid(m),
                    Generated::Undecided(b) => ParsedMonoid::Undecided(b),
                })
            }
            _ => Err(shape("a monoid needs exactly one of \"gaps\" or \"generators\"")),
        }
    }
}

pub fn monoid_to_json(s: &Monoid) -> String {
    serde_json::to_string(&MonoidJson::from_monoid(s)).expect("serializable")
}

/// Parses a monoid given by gaps; generator documents must certify.
pub fn monoid_from_json(text: &str) -> Result<Monoid, JsonError> {
    let doc: MonoidJson = serde_json::from_str(text)?;
    match doc.to_monoid()? {
        ParsedMonoid::Valid(m) => Ok(m),
        ParsedMonoid::Undecided(b) => Err(shape(format!("generators undecided within box {b}"))),
    }
}

pub fn matrix_to_json(m: &UnipotentMatrix, vector: bool) -> String {
    serde_json::to_string(&MatrixJson::from_matrix(m, vector)).expect("serializable")
}

pub fn matrix_from_json(text: &str, n: Option<usize>) -> Result<UnipotentMatrix, JsonError> {
    let doc: MatrixJson = serde_json::from_str(text)?;
    doc.to_matrix(n)
}

pub fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
        Side::TwoSided => "twosided",
    }
}

/// `left`, `right`, `twosided` or the short forms `l`, `r`, `t`.
pub fn parse_side(s: &str) -> Option<Side> {
    match s {
        "left" | "l" => Some(Side::Left),
        "right" | "r" => Some(Side::Right),
        "twosided" | "t" | "two-sided" => Some(Side::TwoSided),
        _ => None,
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ExprJson {
    Generators(Vec<MatrixJson>),
    Complement(Vec<MatrixJson>),
    Product(Box<ExprJson>, Box<ExprJson>),
    Union(Box<ExprJson>, Box<ExprJson>),
    Intersection(Box<ExprJson>, Box<ExprJson>),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct IdealJson {
    pub base: MonoidJson,
    pub side: String,
    pub ideal: ExprJson,
}

fn expr_json(g: &PatternGroup, e: &IdealExpr) -> ExprJson {
    match e {
        IdealExpr::Generators(xs) => ExprJson::Generators(matrices_json(g, xs)),
        IdealExpr::Cofinite(c) => ExprJson::Complement(matrices_json(g, &c.iter().cloned().collect::<Vec<_>>())),
        IdealExpr::Product(a, b) => ExprJson::Product(Box::new(expr_json(g, a)), Box::new(expr_json(g, b))),
        IdealExpr::Union(a, b) => ExprJson::Union(Box::new(expr_json(g, a)), Box::new(expr_json(g, b))),
        IdealExpr::Intersection(a, b) => {
            ExprJson::Intersection(Box::new(expr_json(g, a)), Box::new(expr_json(g, b)))
        }
    }
}

fn expr_ideal(s: &Monoid, side: Side, e: &ExprJson) -> Result<RelativeIdeal, JsonError> {
    let g = s.group();
    let pair = |a: &ExprJson, b: &ExprJson| -> Result<(RelativeIdeal, RelativeIdeal), JsonError> {
        Ok((expr_ideal(s, side, a)?, expr_ideal(s, side, b)?))
    };
    Ok(match e {
        ExprJson::Generators(xs) => RelativeIdeal::from_generators(s, side, &matrices_from(g, xs)?)?,
        ExprJson::Complement(xs) => RelativeIdeal::cofinite(s, side, matrices_from(g, xs)?)?,
        ExprJson::Product(a, b) => {
            let (i, j) = pair(a, b)?;
            crate::ideals::ideal_product(&i, &j)?
        }
        ExprJson::Union(a, b) => {
            let (i, j) = pair(a, b)?;
            crate::ideals::ideal_union(&i, &j)?
        }
        ExprJson::Intersection(a, b) => {
            let (i, j) = pair(a, b)?;
            crate::ideals::ideal_intersection(&i, &j)?
        }
    })
}

impl IdealJson {
    pub fn from_ideal(i: &RelativeIdeal) -> Self {
        IdealJson {
            base: MonoidJson::from_monoid(i.base()),
            side: side_name(i.side()).into(),
            ideal: expr_json(i.base().group(), i.expr()),
        }
    }

    pub fn to_ideal(&self) -> Result<RelativeIdeal, JsonError> {
        let s = match self.base.to_monoid()? {
            ParsedMonoid::Valid(m) => m,
            ParsedMonoid::Undecided(b) => return Err(shape(format!("base undecided within box {b}"))),
        };
        let side = parse_side(&self.side).ok_or_else(|| shape(format!("unknown side {:?}", self.side)))?;
        expr_ideal(&s, side, &self.ideal)
    }
}

pub fn ideal_to_json(i: &RelativeIdeal) -> String {
    serde_json::to_string(&IdealJson::from_ideal(i)).expect("serializable")
}

pub fn ideal_from_json(text: &str) -> Result<RelativeIdeal, JsonError> {
    let doc: IdealJson = serde_json::from_str(text)?;
    doc.to_ideal()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusJson {
    pub f_l: Vec<MatrixJson>,
    pub f_r: Vec<MatrixJson>,
    pub f_t: Vec<MatrixJson>,
    pub pf_l: Vec<MatrixJson>,
    pub pf_r: Vec<MatrixJson>,
    pub pf_t: Vec<MatrixJson>,
    pub sg: Vec<MatrixJson>,
    pub type_numbers: (usize, usize, usize),
}

impl FrobeniusJson {
    pub fn from_data(g: &PatternGroup, d: &FrobeniusData) -> Self {
        FrobeniusJson {
            f_l: matrices_json(g, &d.f_l),
            f_r: matrices_json(g, &d.f_r),
            f_t: matrices_json(g, &d.f_t),
            pf_l: matrices_json(g, &d.pf_l),
            pf_r: matrices_json(g, &d.pf_r),
            pf_t: matrices_json(g, &d.pf_t),
            sg: matrices_json(g, &d.sg),
            type_numbers: d.type_numbers(),
        }
    }

    pub fn to_data(&self, g: &PatternGroup) -> Result<FrobeniusData, JsonError> {
        Ok(FrobeniusData {
            f_l: matrices_from(g, &self.f_l)?,
            f_r: matrices_from(g, &self.f_r)?,
            f_t: matrices_from(g, &self.f_t)?,
            pf_l: matrices_from(g, &self.pf_l)?,
            pf_r: matrices_from(g, &self.pf_r)?,
            pf_t: matrices_from(g, &self.pf_t)?,
            sg: matrices_from(g, &self.sg)?,
        })
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ConditionJson {
    pub side: String,
    pub single_frobenius: bool,
    pub holds: bool,
    pub failing_gap: Option<MatrixJson>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CountsJson {
    pub frobenius: MatrixJson,
    pub n_count: usize,
    pub g_count: usize,
    pub box_total: u128,
    pub box_members: usize,
    pub cube_product: Option<u128>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ReportJson {
    pub monoid: MonoidJson,
    pub r: i64,
    pub conductor: u128,
    pub genus: usize,
    pub sporadicity: usize,
    pub frobenius: FrobeniusJson,
    pub irreducible: bool,
    pub torsion_irreducible: bool,
    pub reducibility_witness: Option<(MonoidJson, MonoidJson)>,
    pub symmetry: String,
    pub strong: bool,
    pub pseudo_witness: Option<MatrixJson>,
    pub one_sided: Vec<ConditionJson>,
    pub counts: Option<CountsJson>,
}

fn parse_symmetry(s: &str) -> Result<Symmetry, JsonError> {
    match s {
        "symmetric" => Ok(Symmetry::Symmetric),
        "pseudo_symmetric" => Ok(Symmetry::PseudoSymmetric),
        "none" => Ok(Symmetry::None),
        other => Err(shape(format!("unknown symmetry {other:?}"))),
    }
}

fn valid(m: &MonoidJson) -> Result<Monoid, JsonError> {
    match m.to_monoid()? {
        ParsedMonoid::Valid(m) => Ok(m),
        ParsedMonoid::Undecided(b) => Err(shape(format!("undecided within box {b}"))),
    }
}

impl ReportJson {
    pub fn from_report(r: &ClassificationReport) -> Self {
        let g = r.monoid.group();
        let mj = |m: &UnipotentMatrix| MatrixJson::from_matrix(m, vector_form(g));
        ReportJson {
            monoid: MonoidJson::from_monoid(&r.monoid),
            r: r.r,
            conductor: r.conductor,
            genus: r.genus,
            sporadicity: r.sporadicity,
            frobenius: FrobeniusJson::from_data(g, &r.frobenius),
            irreducible: r.irreducible,
            torsion_irreducible: r.torsion_irreducible,
            reducibility_witness: r
                .reducibility_witness
                .as_ref()
                .map(|(a, b)| (MonoidJson::from_monoid(a), MonoidJson::from_monoid(b))),
            symmetry: r.symmetry.as_str().into(),
            strong: r.strong,
            pseudo_witness: r.pseudo_witness.as_ref().map(mj),
            one_sided: r
                .one_sided
                .iter()
                .map(|c| ConditionJson {
                    side: side_name(c.side).into(),
                    single_frobenius: c.single_frobenius,
                    holds: c.holds,
                    failing_gap: c.failing_gap.as_ref().map(mj),
                })
                .collect(),
            counts: r.counts.as_ref().map(|c| CountsJson {
                frobenius: mj(&c.frobenius),
                n_count: c.n_count,
                g_count: c.g_count,
                box_total: c.box_total,
                box_members: c.box_members,
                cube_product: c.cube_product,
            }),
        }
    }

    pub fn to_report(&self) -> Result<ClassificationReport, JsonError> {
        let monoid = valid(&self.monoid)?;
        let g = monoid.group().clone();
        let n = Some(g.n());
        let one_sided = self
            .one_sided
            .iter()
            .map(|c| {
                Ok(ConditionOutcome {
                    side: parse_side(&c.side).ok_or_else(|| shape("bad side"))?,
                    single_frobenius: c.single_frobenius,
                    holds: c.holds,
                    failing_gap: c.failing_gap.as_ref().map(|x| x.to_matrix(n)).transpose()?,
                })
            })
            .collect::<Result<Vec<_>, JsonError>>()?;
        let counts = match &self.counts {
            Some(c) => Some(CountIdentities {
                frobenius: c.frobenius.to_matrix(n)?,
                n_count: c.n_count,
                g_count: c.g_count,
                box_total: c.box_total,
                box_members: c.box_members,
                cube_product: c.cube_product,
            }),
            None => None,
        };
        let reducibility_witness = match &self.reducibility_witness {
            Some((a, b)) => Some((valid(a)?, valid(b)?)),
            None => None,
        };
        Ok(ClassificationReport {
            frobenius: self.frobenius.to_data(&g)?,
            monoid,
            r: self.r,
            conductor: self.conductor,
            genus: self.genus,
            sporadicity: self.sporadicity,
            irreducible: self.irreducible,
            torsion_irreducible: self.torsion_irreducible,
            reducibility_witness,
            symmetry: parse_symmetry(&self.symmetry)?,
            strong: self.strong,
            pseudo_witness: self.pseudo_witness.as_ref().map(|x| x.to_matrix(n)).transpose()?,
            one_sided,
            counts,
        })
    }
}

pub fn report_to_json(r: &ClassificationReport) -> String {
    serde_json::to_string(&ReportJson::from_report(r)).expect("serializable")
}

pub fn report_from_json(text: &str) -> Result<ClassificationReport, JsonError> {
    let doc: ReportJson = serde_json::from_str(text)?;
    doc.to_report()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CheckJson {
    pub name: String,
    pub status: String,
    pub detail: String,
}

pub fn checks_json(checks: &[TheoremCheck]) -> Vec<CheckJson> {
    checks
        .iter()
        .map(|c| CheckJson { name: c.name.into(), status: c.status.as_str().into(), detail: c.detail.clone() })
        .collect()
}

pub fn count_status(checks: &[TheoremCheck], status: CheckStatus) -> usize {
    checks.iter().filter(|c| c.status == status).count()
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct LatticeJson {
    pub nodes: Vec<Vec<MatrixJson>>,
    pub hasse_edges: Vec<(usize, usize)>,
    pub minimal_nontrivial: Vec<usize>,
}

impl LatticeJson {
    pub fn from_lattice(g: &PatternGroup, l: &IdempotentLattice) -> Self {
        LatticeJson {
            nodes: l.nodes.iter().map(|t| matrices_json(g, t.gap_part())).collect(),
            hasse_edges: l.hasse_edges.clone(),
            minimal_nontrivial: l.minimal_nontrivial.clone(),
        }
    }

    pub fn to_lattice(&self, g: &PatternGroup) -> Result<IdempotentLattice, JsonError> {
        let nodes = self
            .nodes
            .iter()
            .map(|xs| Ok(TorsionElement::new(matrices_from(g, xs)?)))
            .collect::<Result<Vec<_>, JsonError>>()?;
        Ok(IdempotentLattice {
            nodes,
            hasse_edges: self.hasse_edges.clone(),
            minimal_nontrivial: self.minimal_nontrivial.clone(),
        })
    }
}

/// Sorted matrices as JSON values in the group's preferred form.
pub fn matrix_list(g: &PatternGroup, xs: &[UnipotentMatrix]) -> Vec<MatrixJson> {
    matrices_json(g, xs)
}
