//! Command-line definition and dispatch.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use resgraph_core::blowup::{blow_up, Center};
use resgraph_core::classify::{self, SingularityClass};
use resgraph_core::elliptic;
use resgraph_core::lattice::{self, SupportSet};
use resgraph_core::reduction::{self, ReductionNumber};
use resgraph_core::{catalog, linalg, DualGraph, Error};

use crate::args::{parse_cycle, parse_support};
use crate::document::{self, AnalyticHints, GraphDocument};
use crate::error::{CliError, CliResult};
use crate::report::{Field, Report};

/// Exact computations on dual resolution graphs of normal surface singularities.
///
/// GRAPH is a JSON file (a bare graph or a schema_version "1" document),
/// `catalog:NAME` for a built-in graph, or `-` for standard input.
#[derive(Debug, Parser)]
#[command(name = "resgraph", version)]
pub struct Cli {
    /// Emit the versioned JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the graph and test negative definiteness.
    Check { graph: String },
    /// Fundamental cycle by Laufer's algorithm.
    FundamentalCycle {
        graph: String,
        /// Comma-separated vertex ids of a connected support; default all.
        #[arg(long)]
        support: Option<String>,
    },
    /// Canonical cycle Z_K and numerical Gorenstein-ness.
    CanonicalCycle { graph: String },
    /// Rational / elliptic classification with the supporting cycles.
    Classify { graph: String },
    /// Elliptic sequence of an elliptic graph.
    EllipticSequence {
        graph: String,
        #[arg(long)]
        support: Option<String>,
    },
    /// Compare anti-nef cycles with chi = 0 against the elliptic partial sums.
    TomariVerify {
        graph: String,
        /// Search box is bound * Z_E.
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// Degree -Z_E^2.
    Degree { graph: String },
    /// Degree-one chain shape of a numerically Gorenstein elliptic graph.
    MaxellCheck { graph: String },
    /// Normal reduction number where the graph determines it.
    Reduction {
        graph: String,
        /// Geometric genus; defaults to the document's analytic hint.
        #[arg(long)]
        pg: Option<u64>,
    },
    /// Colength of I_Z from chi(Z), p_g and q.
    Kato {
        graph: String,
        /// Cycle as `id=value,...`.
        #[arg(long)]
        cycle: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        pg: Option<u64>,
    },
    /// Numerical p_g-ideal test for a maximal ideal cycle candidate.
    PgMaxIdeal {
        graph: String,
        #[arg(long)]
        cycle: String,
    },
    /// Blow up a free point (`id`) or an intersection point (`id,id`).
    ///
    /// The new graph goes to --out if given, else to standard output with the
    /// report on standard error.
    Blowup {
        graph: String,
        #[arg(long)]
        center: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pull a cycle back along a point blow-up.
    Pullback {
        graph: String,
        #[arg(long)]
        center: String,
        #[arg(long)]
        cycle: String,
    },
    /// Run the brute-force cross-checks.
    Oracle {
        graph: String,
        #[arg(long, default_value_t = 2)]
        bound: u32,
    },
    /// List the built-in graphs, or print one as a document.
    Catalog { name: Option<String> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn stdout(s: String) -> Self {
        Output {
            stdout: s,
            ..Output::default()
        }
    }
}

/// Supports tried per graph by `oracle`; larger graphs are checked on the full support only.
const ORACLE_SUBSET_LIMIT: usize = 10;

pub fn run(cli: &Cli) -> CliResult<Output> {
    let json = cli.json;
    match &cli.command {
        Command::Catalog { name } => catalog_command(name.as_deref(), json),
        Command::Blowup { graph, center, out } => {
            let doc = document::load(graph)?;
            blowup_command(graph, &doc, center, out.as_ref(), json)
        }
        Command::Oracle { graph, bound } => {
            let doc = document::load(graph)?;
            oracle_command(graph, &doc, *bound, json)
        }
        other => {
            let source = other.graph_source();
            let doc = document::load(source)?;
            let report = single_report(other, source, &doc)?;
            Ok(Output::stdout(report.render(json)))
        }
    }
}

impl Command {
    fn graph_source(&self) -> &str {
        match self {
            Command::Check { graph }
            | Command::FundamentalCycle { graph, .. }
            | Command::CanonicalCycle { graph }
            | Command::Classify { graph }
            | Command::EllipticSequence { graph, .. }
            | Command::TomariVerify { graph, .. }
            | Command::Degree { graph }
            | Command::MaxellCheck { graph }
            | Command::Reduction { graph, .. }
            | Command::Kato { graph, .. }
            | Command::PgMaxIdeal { graph, .. }
            | Command::Blowup { graph, .. }
            | Command::Pullback { graph, .. }
            | Command::Oracle { graph, .. } => graph,
            Command::Catalog { .. } => "",
        }
    }
}

fn single_report(cmd: &Command, source: &str, doc: &GraphDocument) -> CliResult<Report> {
    let g = &doc.graph;
    let hints = &doc.analytic_hints;
    let report = match cmd {
        Command::Check { .. } => check(source, g)?,
        Command::FundamentalCycle { support, .. } => {
            fundamental_cycle(source, g, support.as_deref())?
        }
        Command::CanonicalCycle { .. } => canonical_cycle(source, g)?,
        Command::Classify { .. } => classify_command(source, g, hints)?,
        Command::EllipticSequence { support, .. } => {
            elliptic_sequence(source, g, support.as_deref(), hints)?
        }
        Command::TomariVerify { bound, .. } => tomari_verify(source, g, *bound)?,
        Command::Degree { .. } => degree(source, g)?,
        Command::MaxellCheck { .. } => maxell_check(source, g, hints)?,
        Command::Reduction { pg, .. } => reduction_command(source, g, pg.or(hints.pg), hints)?,
        Command::Kato { cycle, q, pg, .. } => {
            let pg = pg.or(hints.pg).ok_or_else(|| {
                CliError::parse("--pg is required when the document has no p_g hint")
            })?;
            kato(source, g, cycle, *q, pg, hints)?
        }
        Command::PgMaxIdeal { cycle, .. } => pg_max_ideal(source, g, cycle, hints)?,
        Command::Pullback { center, cycle, .. } => pullback(source, g, center, cycle)?,
        Command::Blowup { .. } | Command::Oracle { .. } | Command::Catalog { .. } => {
            unreachable!("dispatched in run")
        }
    };
    Ok(report)
}

fn per_vertex(g: &DualGraph, values: &[i64]) -> Field {
    Field::Map(
        g.ids()
            .zip(values)
            .map(|(id, &v)| (id.to_string(), Field::Int(v)))
            .collect(),
    )
}

fn support_arg(g: &DualGraph, support: Option<&str>) -> CliResult<SupportSet> {
    match support {
        Some(s) => parse_support(g, s),
        None => Ok(SupportSet::full(g)),
    }
}

fn check(source: &str, g: &DualGraph) -> CliResult<Report> {
    g.ensure_negative_definite()?;
    let minors = linalg::leading_principal_minors(g.matrix());
    let mut r = Report::new("check", Some(source));
    r.fact("vertices", g.len())
        .fact("edges", g.edges().len())
        .fact("connected", true)
        .fact("negative_definite", true)
        .fact(
            "leading_principal_minors",
            Field::List(minors.iter().map(|m| Field::str(m.to_string())).collect()),
        )
        .fact("minimal_resolution_graph", g.is_minimal_resolution())
        .fact(
            "canonical_intersections",
            per_vertex(g, &g.canonical_intersections()),
        );
    Ok(r)
}

fn fundamental_cycle(source: &str, g: &DualGraph, support: Option<&str>) -> CliResult<Report> {
    let s = support_arg(g, support)?;
    let run = lattice::laufer_sequence(g, &s)?;
    let z = &run.cycle;
    let mut r = Report::new("fundamental-cycle", Some(source));
    r.fact("support", Field::ids(g, s.indices()))
        .fact("fundamental_cycle", Field::cycle(g, z))
        .fact("laufer_steps", run.steps)
        .fact("self_intersection", g.self_intersection(z)?)
        .fact("canonical_degree", g.canonical_degree(z)?)
        .fact("chi", g.euler_chi(z)?)
        .fact("arithmetic_genus", g.arithmetic_genus(z)?);
    Ok(r)
}

fn canonical_cycle(source: &str, g: &DualGraph) -> CliResult<Report> {
    let zk = g.canonical_cycle()?;
    let mut r = Report::new("canonical-cycle", Some(source));
    r.fact("canonical_cycle", Field::qcycle(g, &zk))
        .fact("numerically_gorenstein", zk.is_integral())
        .fact(
            "self_intersection",
            Field::rational(&g.intersect_rational(&zk, &zk)?),
        )
        .fact(
            "canonical_intersections",
            per_vertex(g, &g.canonical_intersections()),
        );
    Ok(r)
}

fn classify_command(source: &str, g: &DualGraph, hints: &AnalyticHints) -> CliResult<Report> {
    let c = classify::classify(g)?;
    let mut r = Report::new("classify", Some(source));
    r.fact("class", c.class.as_str())
        .fact("is_rational", c.is_rational())
        .fact("is_elliptic", c.is_elliptic())
        .fact("fundamental_cycle", Field::cycle(g, &c.fundamental_cycle))
        .fact("chi_fundamental", c.chi_fundamental)
        .fact("degree", c.degree)
        .fact(
            "E_min",
            Field::opt(c.minimally_elliptic_cycle.as_ref(), |e| Field::cycle(g, e)),
        )
        .fact(
            "is_minimally_elliptic",
            Field::opt(c.is_minimally_elliptic, Field::from),
        )
        .fact("numerically_gorenstein", c.is_numerically_gorenstein)
        .fact("canonical_cycle", Field::qcycle(g, &c.canonical_cycle))
        .fact("minimal_resolution_graph", c.is_minimal_resolution_graph);
    r.hints(hints);
    if let Some(pg) = hints.pg {
        let consistent = match c.class {
            SingularityClass::Rational => pg == 0,
            SingularityClass::Elliptic | SingularityClass::Neither => pg > 0,
        };
        r.conditional("pg_consistent_with_class", consistent)
            .conditional(
                "basis",
                "rational iff p_g = 0 (Artin); chi(Z_E) <= 0 forces p_g >= 1",
            );
    }
    Ok(r)
}

fn sequence_fields(r: &mut Report, g: &DualGraph, seq: &elliptic::EllipticSequence) {
    r.fact("m", seq.m())
        .fact(
            "supports",
            Field::List(
                seq.supports
                    .iter()
                    .map(|s| Field::ids(g, s.indices()))
                    .collect(),
            ),
        )
        .fact(
            "cycles",
            Field::List(seq.cycles.iter().map(|c| Field::cycle(g, c)).collect()),
        )
        .fact(
            "partial_sums",
            Field::List(
                seq.partial_sums
                    .iter()
                    .map(|c| Field::cycle(g, c))
                    .collect(),
            ),
        );
}

fn elliptic_sequence(
    source: &str,
    g: &DualGraph,
    support: Option<&str>,
    hints: &AnalyticHints,
) -> CliResult<Report> {
    let s = support_arg(g, support)?;
    let full = s.len() == g.len();
    let seq = elliptic::elliptic_sequence(g, &s)?;
    let e_min = classify::minimally_elliptic_cycle(g)?;
    let mut r = Report::new("elliptic-sequence", Some(source));
    r.fact("support", Field::ids(g, s.indices()))
        .fact("E_min", Field::cycle(g, &e_min));
    sequence_fields(&mut r, g, &seq);
    let bound = if full && g.is_numerically_gorenstein()? {
        Some(elliptic::pg_upper_bound(g)?)
    } else {
        None
    };
    r.fact("pg_upper_bound", Field::opt(bound, Field::from));
    r.hints(hints);
    if let (Some(pg), Some(bound)) = (hints.pg, bound) {
        r.conditional("pg_within_bound", pg <= bound)
            .conditional("maximally_elliptic", pg == bound)
            .conditional(
                "basis",
                "p_g <= m + 1 for numerically Gorenstein elliptic singularities; equality is maximal ellipticity",
            );
    }
    Ok(r)
}

fn tomari_verify(source: &str, g: &DualGraph, bound: u32) -> CliResult<Report> {
    let check = elliptic::verify_tomari(g, &SupportSet::full(g), bound)?;
    let mut r = Report::new("tomari-verify", Some(source));
    r.fact("holds", check.holds)
        .fact("bound", u64::from(check.multiplier))
        .fact(
            "anti_nef_chi_zero_cycles",
            Field::List(check.found.iter().map(|c| Field::cycle(g, c)).collect()),
        )
        .fact(
            "partial_sums",
            Field::List(check.expected.iter().map(|c| Field::cycle(g, c)).collect()),
        );
    Ok(r)
}

fn degree(source: &str, g: &DualGraph) -> CliResult<Report> {
    let z = lattice::fundamental_cycle_full(g)?;
    let mut r = Report::new("degree", Some(source));
    r.fact("degree", -g.self_intersection(&z)?)
        .fact("fundamental_cycle", Field::cycle(g, &z));
    Ok(r)
}

fn maxell_check(source: &str, g: &DualGraph, hints: &AnalyticHints) -> CliResult<Report> {
    let rep = reduction::check_final_theorem_shape(g)?;
    let shape = rep.shape.as_ref().map(|s| {
        Field::Map(vec![
            ("holds".into(), s.holds.into()),
            ("m".into(), s.m.into()),
            ("chain".into(), Field::ids(g, &s.chain)),
            ("diagnostic".into(), Field::str(s.diagnostic.clone())),
        ])
    });
    let mut r = Report::new("maxell-check", Some(source));
    r.fact("holds", rep.holds)
        .fact("is_elliptic", rep.is_elliptic)
        .fact("numerically_gorenstein", rep.is_numerically_gorenstein)
        .fact("degree", rep.degree)
        .fact("shape", shape.unwrap_or(Field::Null));
    r.hints(hints);
    r.conditional("statement", rep.statement);
    if let (Some(pg), Some(shape)) = (hints.pg, rep.shape.as_ref()) {
        let maximally_elliptic = pg == shape.m as u64 + 1;
        r.conditional("maximally_elliptic", maximally_elliptic);
        if maximally_elliptic {
            r.conditional("gorenstein", true)
                .conditional("maximal_ideal_is_pg_ideal", true);
        }
    }
    Ok(r)
}

fn reduction_command(
    source: &str,
    g: &DualGraph,
    pg: Option<u64>,
    hints: &AnalyticHints,
) -> CliResult<Report> {
    let rep = reduction::normal_reduction_number(g)?;
    let value = match rep.value {
        ReductionNumber::Exact(n) => Field::Int(i64::from(n)),
        ReductionNumber::Unknown => Field::str("unknown"),
    };
    let mut r = Report::new("reduction", Some(source));
    r.fact("class", rep.class.as_str())
        .fact("normal_reduction_number", value)
        .fact("basis", rep.basis);
    r.hints(hints);
    if let Some(pg) = pg {
        r.conditional("pg", pg);
        match rep.class {
            SingularityClass::Rational if pg != 0 => {
                return Err(Error::InconsistentInput(format!(
                    "p_g = {pg}, but the graph is rational"
                ))
                .into());
            }
            SingularityClass::Elliptic => {
                let range = reduction::q_range_if_elliptic(g, pg)?;
                r.conditional(
                    "q_values",
                    Field::List(range.range.map(Field::from).collect()),
                )
                .conditional("pg_bound", Field::opt(range.pg_bound, Field::from))
                .conditional(
                    "q_basis",
                    "q(I) takes every value 0, ..., p_g on integrally closed m-primary ideals of an elliptic singularity",
                );
            }
            _ => {}
        }
    }
    Ok(r)
}

fn kato(
    source: &str,
    g: &DualGraph,
    cycle: &str,
    q: u64,
    pg: u64,
    hints: &AnalyticHints,
) -> CliResult<Report> {
    let z = parse_cycle(g, cycle)?;
    let colength = reduction::kato_colength(g, &z, q, pg)?;
    let mut r = Report::new("kato", Some(source));
    r.fact("cycle", Field::cycle(g, &z))
        .fact("self_intersection", g.self_intersection(&z)?)
        .fact("canonical_degree", g.canonical_degree(&z)?)
        .fact("chi", g.euler_chi(&z)?);
    r.hints(hints);
    r.conditional("q", q)
        .conditional("pg", pg)
        .conditional("colength", colength)
        .conditional(
            "basis",
            "l(A/I_Z) = chi(Z) + p_g - q(I_Z) (Kato's Riemann-Roch)",
        );
    Ok(r)
}

fn pg_max_ideal(
    source: &str,
    g: &DualGraph,
    cycle: &str,
    hints: &AnalyticHints,
) -> CliResult<Report> {
    let m = parse_cycle(g, cycle)?;
    let verdict = reduction::is_pg_maximal_ideal_cycle(g, &m)?;
    let mpg = reduction::tomari_mpg_numeric_conditions(g, &m, hints.gorenstein)?;
    let mut r = Report::new("pg-max-ideal", Some(source));
    r.fact("cycle", Field::cycle(g, &m))
        .fact("arithmetic_genus", verdict.arithmetic_genus)
        .fact("self_intersection", verdict.self_intersection)
        .fact("canonical_degree", verdict.canonical_degree);
    r.hints(hints);
    r.conditional("maximal_ideal_is_pg_ideal", verdict.holds)
        .conditional(
            "basis",
            "if the cycle is the maximal ideal cycle, m is a p_g-ideal iff p_a(M) = 0",
        )
        .conditional("multiplicity_if_generated", mpg.minus_self_intersection)
        .conditional(
            "gorenstein_multiplicity_consistent",
            Field::opt(mpg.gorenstein_multiplicity_consistent, Field::from),
        );
    Ok(r)
}

fn parse_center(s: &str) -> CliResult<Center> {
    s.parse::<Center>()
        .map_err(|e| CliError::parse(e.to_string()))
}

fn pullback(source: &str, g: &DualGraph, center: &str, cycle: &str) -> CliResult<Report> {
    let rec = blow_up(g, &parse_center(center)?)?;
    let d = parse_cycle(g, cycle)?;
    let pd = rec.pullback(&d)?;
    let new = &rec.graph;
    let mut r = Report::new("pullback", Some(source));
    r.fact("center", Field::str(rec.center.to_string()))
        .fact("exceptional_curve", rec.new_id())
        .fact("cycle", Field::cycle(g, &d))
        .fact("pullback", Field::cycle(new, &pd))
        .fact("self_intersection", g.self_intersection(&d)?)
        .fact("pullback_self_intersection", new.self_intersection(&pd)?)
        .fact(
            "pullback_dot_exceptional",
            new.intersect(&pd, &rec.exceptional_cycle())?,
        )
        .fact("canonical_degree", g.canonical_degree(&d)?)
        .fact("pullback_canonical_degree", new.canonical_degree(&pd)?);
    Ok(r)
}

fn blowup_command(
    source: &str,
    doc: &GraphDocument,
    center: &str,
    out: Option<&PathBuf>,
    json: bool,
) -> CliResult<Output> {
    let g = &doc.graph;
    let rec = blow_up(g, &parse_center(center)?)?;
    let new = &rec.graph;
    let table = Field::Map(
        g.ids()
            .enumerate()
            .map(|(i, id)| {
                Ok((
                    id.to_string(),
                    Field::cycle(new, &rec.pullback(&g.basis(i))?),
                ))
            })
            .collect::<CliResult<_>>()?,
    );
    let z = lattice::fundamental_cycle_full(g)?;
    let mut r = Report::new("blowup", Some(source));
    r.fact("center", Field::str(rec.center.to_string()))
        .fact("exceptional_curve", rec.new_id())
        .fact("vertices", new.len())
        .fact("pullback_table", table)
        .fact(
            "fundamental_cycle_pullback",
            Field::cycle(new, &rec.pullback(&z)?),
        )
        .fact(
            "new_fundamental_cycle",
            Field::cycle(new, &lattice::fundamental_cycle_full(new)?),
        )
        .fact("canonical_pullback_check", rec.canonical_pullback_check()?);
    let mut graph_json = new.to_json_string();
    graph_json.push('\n');
    match out {
        Some(path) => {
            std::fs::write(path, &graph_json)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            r.fact("written_to", Field::str(path.display().to_string()));
            Ok(Output::stdout(r.render(json)))
        }
        None => Ok(Output {
            stdout: graph_json,
            stderr: r.render(json),
            code: 0,
        }),
    }
}

fn oracle_command(source: &str, doc: &GraphDocument, bound: u32, json: bool) -> CliResult<Output> {
    let g = &doc.graph;
    g.ensure_negative_definite()?;
    let mut checks = Vec::new();
    let mut all_agree = true;
    let mut record = |name: &str, agree: bool, detail: String| {
        all_agree &= agree;
        checks.push(Field::Map(vec![
            ("check".into(), name.into()),
            ("agree".into(), agree.into()),
            ("detail".into(), Field::str(detail)),
        ]));
    };

    let supports: Vec<SupportSet> = if g.len() <= ORACLE_SUBSET_LIMIT {
        (1u32..(1 << g.len()))
            .filter_map(|mask| {
                SupportSet::new(g, (0..g.len()).filter(|i| mask & (1 << i) != 0)).ok()
            })
            .collect()
    } else {
        vec![SupportSet::full(g)]
    };
    let mut mismatches = Vec::new();
    for s in &supports {
        let fast = lattice::fundamental_cycle(g, s)?;
        let slow = lattice::oracle_minimal_anti_nef(g, s, bound)?;
        if fast != slow {
            mismatches.push(format!(
                "{}: {} vs {}",
                g.format_cycle(&s.reduced_cycle(g)),
                g.format_cycle(&fast),
                g.format_cycle(&slow)
            ));
        }
    }
    record(
        "fundamental_cycle",
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{} connected supports", supports.len())
        } else {
            mismatches.join("; ")
        },
    );

    let class = classify::singularity_class(g)?;
    let min = classify::oracle_chi_nonnegative(g, bound)?;
    let expected = match class {
        SingularityClass::Rational => min.chi == 1,
        SingularityClass::Elliptic => min.chi == 0,
        SingularityClass::Neither => min.chi < 0,
    };
    record(
        "chi_minimum",
        expected,
        format!(
            "minimum chi {} at {}; graph is {}",
            min.chi,
            g.format_cycle(&min.cycle),
            class.as_str()
        ),
    );

    if class == SingularityClass::Elliptic {
        let tomari = elliptic::verify_tomari(g, &SupportSet::full(g), bound)?;
        record(
            "elliptic_partial_sums",
            tomari.holds,
            format!("{} anti-nef cycles with chi = 0", tomari.found.len()),
        );
        let e_min = classify::minimally_elliptic_cycle(g)?;
        let least = min.chi == 0 && e_min <= min.cycle;
        record(
            "minimally_elliptic_cycle",
            least,
            format!("E_min = {}", g.format_cycle(&e_min)),
        );
    }

    let mut r = Report::new("oracle", Some(source));
    r.fact("bound", u64::from(bound))
        .fact("all_agree", all_agree)
        .fact("checks", Field::List(checks));
    Ok(Output {
        stdout: r.render(json),
        stderr: String::new(),
        code: if all_agree { 0 } else { 2 },
    })
}

fn catalog_command(name: Option<&str>, json: bool) -> CliResult<Output> {
    if let Some(name) = name {
        let mut s = document::catalog_document(name)?.to_json_string();
        s.push('\n');
        return Ok(Output::stdout(s));
    }
    let mut entries = Vec::new();
    for e in catalog::ENTRIES {
        let g = e.graph();
        let class = if g.is_negative_definite() {
            Field::str(classify::singularity_class(&g)?.as_str())
        } else {
            Field::Null
        };
        entries.push(Field::Map(vec![
            ("name".into(), e.name.into()),
            ("summary".into(), e.summary.into()),
            ("vertices".into(), g.len().into()),
            ("negative_definite".into(), g.is_negative_definite().into()),
            ("class".into(), class),
        ]));
    }
    let mut r = Report::new("catalog", None);
    r.fact("graphs", Field::List(entries));
    Ok(Output::stdout(r.render(json)))
}
