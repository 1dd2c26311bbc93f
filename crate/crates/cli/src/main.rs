//! `unimon`: command-line front end for the unimon library.
//!
//! Inputs are a path to a JSON document or the document itself inline.
//! Exit codes: 0 success, 1 malformed input, 2 validation error, 3 undecided
//! or resource bound exceeded.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use unimon::classify::classify_all;
use unimon::dot::export_dot;
use unimon::ideals::{torsion_idempotents, torsion_monoid, IdealExpr};
use unimon::invariants::{pf_of_cofinite_ideal, special_gaps};
use unimon::json::{
    checks_json, ideal_from_json, matrix_list, parse_pattern, parse_side, side_name, JsonError, LatticeJson,
    MatrixJson, MonoidJson, ParsedMonoid, ReportJson,
};
use unimon::matrix::upper_len;
use unimon::{
    apery_maximal, classify, enumerate_irreducible, enumerate_monoids, frobenius, oversemigroups, pseudo_frobenius,
    verify_theorems, AperySet, ClassificationReport, Error, Monoid, Order, OrderKind, PatternGroup, PatternKind, Side,
    UnipotentMatrix, DEFAULT_MAX_NODES,
};

#[derive(Parser)]
#[command(name = "unimon", version, about = "Unipotent numerical monoids: gaps, Apery sets, Frobenius invariants, ideals and irreducibility")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Left,
    Right,
    Twosided,
    Entrywise,
}

#[derive(Args)]
struct Input {
    /// Path to a JSON document, or the document itself.
    input: String,
}

#[derive(Args)]
struct SideInput {
    #[command(flatten)]
    input: Input,
    /// l, r or t.
    #[arg(long, value_parser = side_arg, default_value = "t")]
    side: Side,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a gap set (or generator set) defines a monoid.
    Validate(Input),
    /// List the gaps.
    Gaps(Input),
    /// Generating number, conductor, genus and sporadicity.
    Invariants(Input),
    /// Minimal generating set.
    Mingens(Input),
    /// Apery set with respect to a pivot.
    Apery {
        #[command(flatten)]
        input: Input,
        /// Pivot: a JSON matrix or comma-separated entries.
        #[arg(long)]
        pivot: String,
        #[arg(long, value_parser = side_arg, default_value = "l")]
        side: Side,
        /// Also list members with max entry below this bound.
        #[arg(long = "box")]
        bound: Option<i64>,
    },
    /// Frobenius set.
    Frobenius(SideInput),
    /// Pseudo-Frobenius set.
    Pf(SideInput),
    /// Special gaps.
    SpecialGaps(Input),
    /// Compare two elements and list the interval between them.
    Order {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value_t = KindArg::Left)]
        kind: KindArg,
        a: String,
        b: String,
    },
    /// Describe a relative ideal document.
    Ideal {
        #[command(flatten)]
        input: Input,
        /// Box for minimal generators of non-cofinite expressions.
        #[arg(long = "box")]
        bound: Option<i64>,
        /// Elements to test for membership.
        #[arg(long)]
        member: Vec<String>,
    },
    /// Torsion monoid, or its lattice of idempotents.
    Torsion {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        idempotents: bool,
        /// Write the Hasse diagram as DOT to this file (implies --idempotents).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// All monoids containing the input.
    Oversemigroups(Input),
    /// Irreducibility, symmetry and counting identities.
    Classify(Input),
    /// Run the consistency checks.
    Verify(Input),
    /// All monoids of a given genus, as JSON lines.
    Enumerate {
        #[arg(long, default_value = "first_row")]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        irreducible_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn side_arg(s: &str) -> Result<Side, String> {
    parse_side(s).ok_or_else(|| format!("unknown side {s:?}; use l, r or t"))
}

enum Failure {
    Malformed(String),
    Invalid(String),
    Undecided(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Malformed(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Undecided(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Malformed(m) | Failure::Invalid(m) | Failure::Undecided(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::Matrix(_) | Error::BadBound { .. } | Error::TwoSidedFactorization => Failure::Malformed(msg),
            Error::Infeasible(_) => Failure::Undecided(msg),
            _ => Failure::Invalid(msg),
        }
    }
}

impl From<JsonError> for Failure {
    fn from(e: JsonError) -> Self {
        match e {
            JsonError::Invalid(e) => e.into(),
            other => Failure::Malformed(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        return Ok(arg.to_string());
    }
    std::fs::read_to_string(arg).map_err(|e| Failure::Malformed(format!("{arg}: {e}")))
}

fn load_monoid(arg: &str) -> Result<Monoid, Failure> {
    let doc: MonoidJson = serde_json::from_str(&read_input(arg)?).map_err(JsonError::from)?;
    match doc.to_monoid()? {
        ParsedMonoid::Valid(m) => Ok(m),
        ParsedMonoid::Undecided(b) => Err(Failure::Undecided(format!("generators undecided within box {b}"))),
    }
}

/// A JSON matrix, or comma-separated entries: the first row for first-row
/// patterns, otherwise the strictly-upper entries in row-major order.
fn parse_matrix(g: &PatternGroup, arg: &str) -> Result<UnipotentMatrix, Failure> {
    if arg.trim_start().starts_with('{') {
        let m: MatrixJson = serde_json::from_str(arg).map_err(JsonError::from)?;
        return Ok(m.to_matrix(Some(g.n()))?);
    }
    let vals = arg
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| Failure::Malformed(format!("{arg:?}: {e}")))?;
    let m = if g.kind() == PatternKind::FirstRow && vals.len() == g.n() - 1 {
        UnipotentMatrix::from_first_row(&vals)
    } else if vals.len() == upper_len(g.n()) {
        UnipotentMatrix::from_upper(g.n(), vals).map_err(Error::from)?
    } else {
        return Err(Failure::Malformed(format!("{arg:?}: wrong number of entries")));
    };
    if !g.in_group(&m) {
        return Err(Error::OutOfPattern(m).into());
    }
    Ok(m)
}

fn max_nodes() -> Result<usize, Failure> {
    match std::env::var("UNIMON_MAX_NODES") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Malformed(format!("UNIMON_MAX_NODES={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_MAX_NODES),
    }
}

fn show(g: &PatternGroup, m: &UnipotentMatrix) -> String {
    if g.kind() == PatternKind::FirstRow {
        let parts: Vec<String> = m.first_row().iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(","))
    } else {
        m.to_string()
    }
}

fn show_set(g: &PatternGroup, xs: &[UnipotentMatrix]) -> String {
    let parts: Vec<String> = xs.iter().map(|x| show(g, x)).collect();
    format!("{{{}}}", parts.join(","))
}

fn list(g: &PatternGroup, xs: &[UnipotentMatrix]) -> Value {
    serde_json::to_value(matrix_list(g, xs)).expect("serializable")
}

fn one(g: &PatternGroup, x: &UnipotentMatrix) -> Value {
    list(g, std::slice::from_ref(x)).as_array().expect("array")[0].clone()
}

struct Printer {
    format: Format,
}

impl Printer {
    fn emit(&self, value: Value, table: impl FnOnce() -> String) {
        match self.format {
            Format::Json => println!("{value}"),
            Format::Table => print!("{}", table()),
        }
    }
}

fn lines(rows: &[(&str, String)]) -> String {
    let mut out = String::new();
    for (k, v) in rows {
        let _ = writeln!(out, "{k}: {v}");
    }
    out
}

fn validate(out: &Printer, arg: &str) -> Outcome {
    let text = read_input(arg)?;
    let doc: MonoidJson = serde_json::from_str(&text).map_err(JsonError::from)?;
    match doc.to_monoid() {
        Ok(ParsedMonoid::Valid(s)) => {
            out.emit(json!({"valid": true, "genus": s.genus(), "r": s.r()}), || {
                format!("valid: genus {}, r {}\n", s.genus(), s.r())
            });
            Ok(())
        }
        Ok(ParsedMonoid::Undecided(b)) => Err(Failure::Undecided(format!("generators undecided within box {b}"))),
        Err(JsonError::Invalid(Error::NotClosed(a, b))) => {
            let g = doc.group.to_group()?;
            let c = &a * &b;
            out.emit(json!({"valid": false, "reason": "not_closed", "witness": [one(&g, &a), one(&g, &b)], "product": one(&g, &c)}), || {
                format!("invalid: {} * {} = {} is a gap\n", show(&g, &a), show(&g, &b), show(&g, &c))
            });
            Err(Failure::Invalid(format!("not closed: {} * {} is a gap", show(&g, &a), show(&g, &b))))
        }
        Err(JsonError::Invalid(e)) => {
            let msg = e.to_string();
            out.emit(json!({"valid": false, "reason": msg}), || format!("invalid: {msg}\n"));
            Err(e.into())
        }
        Err(e) => Err(e.into()),
    }
}

fn nonempty(s: &Monoid) -> Outcome {
    if s.genus() == 0 {
        return Err(Error::EmptyGaps.into());
    }
    Ok(())
}

fn report_table(r: &ClassificationReport) -> String {
    let g = r.monoid.group();
    let d = &r.frobenius;
    let mut rows = vec![
        ("genus", r.genus.to_string()),
        ("r", r.r.to_string()),
        ("conductor", r.conductor.to_string()),
        ("sporadicity", r.sporadicity.to_string()),
        ("F_l", show_set(g, &d.f_l)),
        ("F_r", show_set(g, &d.f_r)),
        ("F_t", show_set(g, &d.f_t)),
        ("PF_l", show_set(g, &d.pf_l)),
        ("PF_r", show_set(g, &d.pf_r)),
        ("PF_t", show_set(g, &d.pf_t)),
        ("SG", show_set(g, &d.sg)),
        ("type", format!("{:?}", d.type_numbers())),
        ("irreducible", r.irreducible.to_string()),
        ("torsion_irreducible", r.torsion_irreducible.to_string()),
        ("symmetry", r.symmetry.as_str().to_string()),
        ("strong", r.strong.to_string()),
    ];
    if let Some(b) = &r.pseudo_witness {
        rows.push(("pseudo_witness", show(g, b)));
    }
    if let Some((a, b)) = &r.reducibility_witness {
        rows.push(("witness", format!("{} {}", show_set(g, &a.gap_list()), show_set(g, &b.gap_list()))));
    }
    for c in &r.one_sided {
        let v = match (&c.failing_gap, c.holds) {
            (_, true) => "holds".to_string(),
            (Some(a), false) => format!("fails at {}", show(g, a)),
            (None, false) => "no single Frobenius element".to_string(),
        };
        rows.push((
            match c.side {
                Side::Left => "condition_l",
                Side::Right => "condition_r",
                Side::TwoSided => "condition_t",
            },
            v,
        ));
    }
    if let Some(c) = &r.counts {
        rows.push(("n,g", format!("{},{}", c.n_count, c.g_count)));
        rows.push(("box", format!("{} points, {} members", c.box_total, c.box_members)));
        if let Some(p) = c.cube_product {
            rows.push(("cube_product", p.to_string()));
        }
    }
    lines(&rows)
}

fn ideal_command(out: &Printer, arg: &str, bound: Option<i64>, members: &[String]) -> Outcome {
    let i = ideal_from_json(&read_input(arg)?)?;
    let s = i.base();
    let g = s.group();
    let bound = match (i.expr(), bound) {
        (_, Some(b)) => Some(b),
        (IdealExpr::Generators(e), None) => Some(e.iter().map(|x| x.max_nonneg()).max().unwrap_or(0) + 1),
        _ => None,
    };
    let gens = i.min_generators(bound)?;
    let tests = members.iter().map(|m| parse_matrix(g, m)).collect::<Result<Vec<_>, _>>()?;
    let contained: Vec<bool> = tests.iter().map(|x| i.contains(x)).collect();
    let mut value = json!({"side": side_name(i.side()), "min_generators": list(g, &gens)});
    let mut rows = vec![("side", side_name(i.side()).to_string()), ("min_generators", show_set(g, &gens))];
    if let Some(c) = i.complement() {
        let c: Vec<UnipotentMatrix> = c.iter().cloned().collect();
        value["complement"] = list(g, &c);
        rows.push(("complement", show_set(g, &c)));
        if let Ok(pf) = pf_of_cofinite_ideal(&i, i.side()) {
            value["pf"] = list(g, &pf);
            rows.push(("pf", show_set(g, &pf)));
        }
    }
    // An ideal through the identity contains S; its gap part decides whether
    // it is an oversemigroup.
    if i.contains(&UnipotentMatrix::identity(g.n())) {
        let part: Vec<UnipotentMatrix> = s.gaps().iter().filter(|x| i.contains(x)).cloned().collect();
        let closed = Monoid::from_gaps(g, s.gaps().iter().filter(|x| !part.contains(x)).cloned()).is_ok();
        value["gap_part"] = list(g, &part);
        value["is_monoid"] = json!(closed);
        rows.push(("gap_part", show_set(g, &part)));
        rows.push(("is_monoid", closed.to_string()));
    }
    if !tests.is_empty() {
        value["members"] = Value::Array(
            tests.iter().zip(&contained).map(|(x, c)| json!({"element": one(g, x), "member": c})).collect(),
        );
        for (x, c) in tests.iter().zip(&contained) {
            rows.push(("member", format!("{} {}", show(g, x), c)));
        }
    }
    out.emit(value, || lines(&rows));
    Ok(())
}

fn torsion_command(out: &Printer, arg: &str, idempotents: bool, dot: Option<&PathBuf>) -> Outcome {
    let s = load_monoid(arg)?;
    let g = s.group();
    let cap = max_nodes()?;
    if !idempotents && dot.is_none() {
        let t = torsion_monoid(&s, cap)?;
        let parts: Vec<Value> = t.iter().map(|x| list(g, x.gap_part())).collect();
        out.emit(json!({"count": t.len(), "elements": parts}), || {
            let mut text = format!("{} elements\n", t.len());
            for x in &t {
                let _ = writeln!(text, "{}", show_set(g, x.gap_part()));
            }
            text
        });
        return Ok(());
    }
    let l = torsion_idempotents(&s, cap)?;
    if let Some(path) = dot {
        std::fs::write(path, export_dot(&l)).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?;
    }
    let value = serde_json::to_value(LatticeJson::from_lattice(g, &l)).expect("serializable");
    out.emit(value, || {
        let mut text = String::new();
        for (i, x) in l.nodes.iter().enumerate() {
            let _ = writeln!(text, "T{i}: {}", show_set(g, x.gap_part()));
        }
        for (a, b) in &l.hasse_edges {
            let _ = writeln!(text, "T{a} -> T{b}");
        }
        let atoms: Vec<String> = l.minimal_nontrivial.iter().map(|i| format!("T{i}")).collect();
        let _ = writeln!(text, "minimal nontrivial: {}", atoms.join(" "));
        text
    });
    Ok(())
}

fn enumerate_command(
    out: &Printer,
    pattern: &str,
    n: usize,
    genus: usize,
    irreducible_only: bool,
    path: Option<&PathBuf>,
) -> Outcome {
    let g = parse_pattern(pattern, n)?;
    let cap = max_nodes()?;
    let monoids = if irreducible_only {
        enumerate_irreducible(&g, genus, cap)?
    } else {
        enumerate_monoids(&g, genus, cap)?
    };
    let reports = classify_all(&monoids);
    let mut text = String::new();
    for (s, r) in monoids.iter().zip(reports) {
        let report = match r {
            Ok(r) => serde_json::to_value(ReportJson::from_report(&r)).expect("serializable"),
            Err(Error::EmptyGaps) => Value::Null,
            Err(e) => return Err(e.into()),
        };
        let monoid = serde_json::to_value(MonoidJson::from_monoid(s)).expect("serializable");
        let _ = writeln!(text, "{}", json!({"monoid": monoid, "report": report}));
    }
    match path {
        Some(p) => {
            std::fs::write(p, &text).map_err(|e| Failure::Malformed(format!("{}: {e}", p.display())))?;
            out.emit(json!({"count": monoids.len(), "out": p.display().to_string()}), || {
                format!("{} monoids written to {}\n", monoids.len(), p.display())
            });
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Malformed(e.to_string()))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    let out = Printer { format: cli.format };
    match cli.command {
        Command::Validate(i) => validate(&out, &i.input)?,
        Command::Gaps(i) => {
            let s = load_monoid(&i.input)?;
            let g = s.group();
            out.emit(json!({"gaps": list(g, &s.gap_list())}), || format!("{}\n", show_set(g, &s.gap_list())));
        }
        Command::Invariants(i) => {
            let s = load_monoid(&i.input)?;
            let g = s.group();
            let inv = s.invariants();
            out.emit(
                json!({
                    "r": inv.r, "conductor": inv.conductor, "genus": inv.genus,
                    "sporadicity": inv.sporadicity, "sporadic_set": list(g, &inv.sporadic_set),
                }),
                || {
                    lines(&[
                        ("r", inv.r.to_string()),
                        ("conductor", inv.conductor.to_string()),
                        ("genus", inv.genus.to_string()),
                        ("sporadicity", inv.sporadicity.to_string()),
                        ("sporadic_set", show_set(g, &inv.sporadic_set)),
                    ])
                },
            );
        }
        Command::Mingens(i) => {
            let s = load_monoid(&i.input)?;
            let g = s.group();
            let gens = s.minimal_generators();
            out.emit(json!({"minimal_generators": list(g, &gens)}), || format!("{}\n", show_set(g, &gens)));
        }
        Command::Apery { input, pivot, side, bound } => {
            let s = load_monoid(&input.input)?;
            let g = s.group();
            let a = parse_matrix(g, &pivot)?;
            let ap = AperySet::new(&s, &a, side)?;
            let mut value = json!({"side": side_name(side), "pivot": one(g, &a), "core": list(g, ap.core())});
            let mut rows = vec![("core", show_set(g, ap.core()))];
            if s.genus() > 0 {
                let max = apery_maximal(&s, &a, side)?;
                value["maximal"] = list(g, &max);
                rows.push(("maximal", show_set(g, &max)));
            }
            if let Some(b) = bound {
                let boxed = ap.in_box(b);
                value["box"] = list(g, &boxed);
                rows.push(("box", show_set(g, &boxed)));
            }
            out.emit(value, || lines(&rows));
        }
        Command::Frobenius(SideInput { input, side }) => {
            let s = load_monoid(&input.input)?;
            let f = frobenius(&s, side)?;
            let g = s.group();
            out.emit(json!({"side": side_name(side), "frobenius": list(g, &f)}), || format!("{}\n", show_set(g, &f)));
        }
        Command::Pf(SideInput { input, side }) => {
            let s = load_monoid(&input.input)?;
            let f = pseudo_frobenius(&s, side)?;
            let g = s.group();
            out.emit(json!({"side": side_name(side), "pseudo_frobenius": list(g, &f)}), || format!("{}\n", show_set(g, &f)));
        }
        Command::SpecialGaps(i) => {
            let s = load_monoid(&i.input)?;
            let sg = special_gaps(&s)?;
            let g = s.group();
            out.emit(json!({"special_gaps": list(g, &sg)}), || format!("{}\n", show_set(g, &sg)));
        }
        Command::Order { input, kind, a, b } => {
            let s = load_monoid(&input.input)?;
            let g = s.group();
            let (a, b) = (parse_matrix(g, &a)?, parse_matrix(g, &b)?);
            let kind = match kind {
                KindArg::Left => OrderKind::Left,
                KindArg::Right => OrderKind::Right,
                KindArg::Twosided => OrderKind::TwoSided,
                KindArg::Entrywise => OrderKind::Entrywise,
            };
            let o = Order::new(kind, &s);
            let leq = o.leq(&a, &b);
            let iv = o.interval(&a, &b);
            out.emit(json!({"leq": leq, "interval": list(g, &iv)}), || {
                lines(&[("leq", leq.to_string()), ("interval", show_set(g, &iv))])
            });
        }
        Command::Ideal { input, bound, member } => ideal_command(&out, &input.input, bound, &member)?,
        Command::Torsion { input, idempotents, dot } => torsion_command(&out, &input.input, idempotents, dot.as_ref())?,
        Command::Oversemigroups(i) => {
            let s = load_monoid(&i.input)?;
            let g = s.group();
            let over = oversemigroups(&s, max_nodes()?)?;
            let docs: Vec<Value> =
                over.iter().map(|t| serde_json::to_value(MonoidJson::from_monoid(t)).expect("serializable")).collect();
            out.emit(json!({"count": over.len(), "oversemigroups": docs}), || {
                let mut text = format!("{} oversemigroups\n", over.len());
                for t in &over {
                    let _ = writeln!(text, "{}", show_set(g, &t.gap_list()));
                }
                text
            });
        }
        Command::Classify(i) => {
            let s = load_monoid(&i.input)?;
            nonempty(&s)?;
            let r = classify(&s)?;
            out.emit(serde_json::to_value(ReportJson::from_report(&r)).expect("serializable"), || report_table(&r));
        }
        Command::Verify(i) => {
            let s = load_monoid(&i.input)?;
            nonempty(&s)?;
            let checks = verify_theorems(&s);
            out.emit(serde_json::to_value(checks_json(&checks)).expect("serializable"), || {
                let mut text = String::new();
                for c in &checks {
                    let _ = writeln!(text, "{:<4} {:<44} {}", c.status.as_str(), c.name, c.detail);
                }
                text
            });
        }
        Command::Enumerate { pattern, n, genus, irreducible_only, out: path } => {
            enumerate_command(&out, &pattern, n, genus, irreducible_only, path.as_ref())?
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // Usage errors count as malformed input.
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
