//! Command-line front end. [`run`] takes explicit streams so it can be
//! driven from tests; `main` wires it to the process.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::time::Duration;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use kpsat_core::closure::{self, CertError, Preset};
use kpsat_core::constructions as build;
use kpsat_core::cyclic;
use kpsat_core::search::{Outcome, SearchProblem, DEFAULT_MAX_NODES, DEFAULT_MAX_ORDER};
use kpsat_core::{bounds, verify, Graph, Hypergraph, VertexSet};
use serde_json::json;

use crate::driver::{run_search, Limits};
use crate::report::{digest, mode_from_name, CertificateJson, NamedValue, SearchJson, VerifyJson};
use crate::{graph6, hypertext};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_LIMIT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kpsat", version, about = "Construct, verify, certify and search K_p-saturated graphs")]
pub struct Cli {
    /// Worker threads for search levels and batch verification (0 = one per core).
    #[arg(long, global = true, env = "KPSAT_THREADS", default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a named construction.
    Construct(ConstructArgs),
    /// Check graph6 graphs (or one hypergraph) read from a file or stdin.
    Verify(VerifyArgs),
    /// Run the closure engine and print a certificate per input graph.
    Certify(CertifyArgs),
    /// Exact minimum edge count by exhaustive search.
    Search(SearchArgs),
    /// Print a hypergraph construction in the text format.
    Hyper(HyperArgs),
    /// Evaluate every bound formula at the given parameters.
    Bounds(BoundsArgs),
    /// Render search results (JSON lines) as a grid.
    Table(TableArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Construction {
    Ehm,
    Bipartite,
    CliqueJoin,
    DuffusHanson,
    Petersen,
    #[value(alias = "theorem2")]
    HubFamily,
    #[value(alias = "f-graph")]
    Circulant,
    SemiSat,
    /// r-uniform, needs --r.
    #[value(alias = "theorem4")]
    Cyclic,
    /// r-uniform, needs --r.
    Bollobas,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Json,
    Both,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub name: Construction,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// Defaults to graph6, or both for constructions with a layout.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub t: Option<usize>,
    /// Require semi-saturation instead of saturation.
    #[arg(long)]
    pub semi: bool,
    /// Read one hypergraph in the text format instead of graph6 lines.
    #[arg(long)]
    pub hyper: bool,
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PresetArg {
    /// `{0}`
    Single,
    /// `{0, ..., t}`
    FirstTPlusOne,
}

#[derive(Args, Debug)]
pub struct CertifyArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub t: usize,
    /// Explicit initial set; overrides --preset.
    #[arg(long, num_args = 1.., value_delimiter = ',')]
    pub r0: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = PresetArg::Single)]
    pub preset: PresetArg,
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModeArg {
    /// Saturated, minimum degree at least t.
    Sat,
    /// Saturated, minimum degree exactly t.
    SatExact,
    /// Semi-saturated, minimum degree at least t.
    Semi,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub t: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Sat)]
    pub mode: ModeArg,
    /// List every optimal graph up to isomorphism.
    #[arg(long)]
    pub enumerate: bool,
    /// Search labelled graphs without isomorph rejection.
    #[arg(long)]
    pub no_iso: bool,
    #[arg(long, env = "KPSAT_MAX_NODES", default_value_t = DEFAULT_MAX_NODES)]
    pub max_nodes: u64,
    /// Seconds; 0 disables the deadline.
    #[arg(long, env = "KPSAT_TIME_LIMIT", default_value_t = 600)]
    pub time_limit: u64,
    #[arg(long, env = "KPSAT_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// A qualifying graph (graph6) known in advance; its size is accepted as
    /// optimal once every smaller size is ruled out.
    #[arg(long)]
    pub upper: Option<String>,
    /// Include wall-clock time in the output (makes it run-dependent).
    #[arg(long)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum HyperKind {
    /// Cyclic base (codegree t, free of K_{r+1}).
    Base,
    /// Base greedily completed to K_{r+1}-saturation.
    Complete,
    /// Completed base plus universal vertices, K_p-saturated.
    #[value(alias = "theorem4")]
    Cyclic,
    Bollobas,
}

#[derive(Args, Debug)]
pub struct HyperArgs {
    pub kind: HyperKind,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub n: usize,
    /// Write the class layout as JSON to this file.
    #[arg(long)]
    pub layout: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
}

/// A failed command: exit code plus a one-line reason.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: &'static str,
    pub message: String,
}

fn fail<T>(code: i32, kind: &'static str, message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure {
        code,
        kind,
        message: message.into(),
    })
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        kind: "usage",
        message: e.to_string(),
    }
}

/// Parameters the library rejects.
fn domain(e: kpsat_core::Error) -> Failure {
    let message = match e {
        kpsat_core::Error::Domain(m) => m,
        other => other.to_string(),
    };
    Failure {
        code: EXIT_USAGE,
        kind: "domain",
        message,
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "io",
            message: e.to_string(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure {
            code: EXIT_USAGE,
            kind: "io",
            message: format!("{e:#}"),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, path: &Option<PathBuf>) -> Result<String, Failure> {
        match path {
            Some(p) => Ok(std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?),
            None => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s)?;
                Ok(s)
            }
        }
    }

    fn line(&mut self, s: &str) -> Result<(), Failure> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn note(&mut self, kind: &str, msg: &str) -> Result<(), Failure> {
        writeln!(self.err, "kpsat: {kind}: {msg}")?;
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let reason: Vec<&str> = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect();
            let _ = writeln!(err, "kpsat: usage: {}", reason.join(" ").trim_start_matches("error: "));
            return EXIT_USAGE;
        }
    };
    let mut io = Io { stdin, out, err };
    match dispatch(&cli, &mut io) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(io.err, "kpsat: {}: {}", f.kind, f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io) -> Result<i32, Failure> {
    match &cli.command {
        Command::Construct(a) => construct(a, io),
        Command::Verify(a) => verify_cmd(a, cli.threads, io),
        Command::Certify(a) => certify(a, io),
        Command::Search(a) => search(a, cli.threads, io),
        Command::Hyper(a) => hyper(a, io),
        Command::Bounds(a) => bounds_cmd(a, io),
        Command::Table(a) => table(a, io),
    }
}

fn need(v: Option<usize>, flag: &str, what: Construction) -> Result<usize, Failure> {
    v.ok_or_else(|| usage(format!("{what:?} needs --{flag}")))
}

fn construct(a: &ConstructArgs, io: &mut Io) -> Result<i32, Failure> {
    use Construction::*;
    let name = a.name;
    let (n, p, t) = (|| need(a.n, "n", name), || need(a.p, "p", name), || need(a.t, "t", name));
    if matches!(name, Cyclic | Bollobas) {
        let args = HyperArgs {
            kind: if name == Cyclic { HyperKind::Cyclic } else { HyperKind::Bollobas },
            r: need(a.r, "r", name)?,
            p: a.p,
            t: a.t,
            n: n()?,
            layout: None,
        };
        return hyper(&args, io);
    }
    let mut layout = None;
    let g = match name {
        Ehm => build::ehm_extremal(n()?, p()?),
        Bipartite => build::complete_bipartite(t()?, n()?),
        CliqueJoin => build::clique_join_bipartite(n()?, p()?, t()?),
        DuffusHanson => build::duffus_hanson_t2(n()?),
        Petersen => Ok(build::petersen()),
        HubFamily => build::hub_family(t()?, n()?).map(|(g, l)| {
            layout = Some(json!({
                "hubs": [l.hubs.start, l.hubs.end],
                "v_sets": l.v_sets.iter().map(|r| [r.start, r.end]).collect::<Vec<_>>(),
                "w_sets": l.w_sets.iter().map(|r| [r.start, r.end]).collect::<Vec<_>>(),
                "common": [l.common.start, l.common.end],
                "hub_sets": l.hub_sets,
                "co_hub_sets": l.co_hub_sets,
            }));
            g
        }),
        Circulant => build::min_degree_circulant(n()?, t()?),
        SemiSat => build::semi_sat(n()?, p()?, t()?),
        Cyclic | Bollobas => unreachable!("handled above"),
    }
    .map_err(domain)?;
    let code = graph6::encode(&g);
    let format = a.format.unwrap_or(if layout.is_some() { Format::Both } else { Format::Graph6 });
    if matches!(format, Format::Graph6 | Format::Both) {
        io.line(&code)?;
    }
    if matches!(format, Format::Json | Format::Both) {
        let mut doc = json!({
            "construction": name.to_possible_value().expect("named").get_name(),
            "n": g.order(),
            "p": a.p,
            "t": a.t,
            "edges": g.edge_count(),
            "min_degree": g.min_degree().ok(),
            "graph6": code,
        });
        if let Some(l) = layout {
            doc["layout"] = l;
        }
        io.line(&doc.to_string())?;
    }
    Ok(EXIT_OK)
}

fn graph_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l)).filter(|(_, l)| !l.trim().is_empty())
}

/// graph6 lines with their line numbers. JSON lines (descriptors printed by
/// `construct`) are skipped.
fn parse_graphs(text: &str) -> Result<Vec<(usize, String, Graph)>, Failure> {
    graph_lines(text)
        .filter(|(_, l)| !l.starts_with('{'))
        .map(|(i, l)| {
            let l = l.trim_end();
            graph6::decode(l)
                .map(|g| (i, l.to_string(), g))
                .map_err(|e| Failure {
                    code: EXIT_USAGE,
                    kind: "input",
                    message: format!("line {i}: {e}"),
                })
        })
        .collect()
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool")
}

fn verify_cmd(a: &VerifyArgs, threads: usize, io: &mut Io) -> Result<i32, Failure> {
    use rayon::prelude::*;
    let text = io.read_input(&a.input)?;
    let mut code = EXIT_OK;
    if a.hyper {
        let h = hypertext::read(&text).map_err(|e| Failure {
            code: EXIT_USAGE,
            kind: "input",
            message: e.to_string(),
        })?;
        let report = verify::check_hyper_bounds(&h, a.p, a.t).map_err(domain)?;
        let json = VerifyJson::new(digest(&hypertext::write(&h)), &report);
        io.line(&serde_json::to_string(&json).expect("serialisable"))?;
        return judge(&json, a.semi, 1, io);
    }
    let graphs = parse_graphs(&text)?;
    let check = |(_, s, g): &(usize, String, Graph)| verify::check_bounds(g, a.p, a.t).map(|r| VerifyJson::new(s.clone(), &r));
    let reports: Vec<_> = pool(threads).install(|| graphs.par_iter().map(check).collect());
    for ((line, _, _), report) in graphs.iter().zip(reports) {
        let json = report.map_err(domain)?;
        io.line(&serde_json::to_string(&json).expect("serialisable"))?;
        code = code.max(judge(&json, a.semi, *line, io)?);
    }
    Ok(code)
}

/// Exit status for one report, with a reason on the error stream when negative.
fn judge(json: &VerifyJson, semi: bool, line: usize, io: &mut Io) -> Result<i32, Failure> {
    if !json.fatal.is_empty() {
        io.note("fatal", &format!("line {line}: proven bound violated: {}", json.fatal.join(",")))?;
        return Ok(EXIT_NEGATIVE);
    }
    let (ok, what) = if semi {
        (json.semi_saturated, "not semi-saturated")
    } else {
        (json.saturated, "not saturated")
    };
    if !ok {
        io.note("negative", &format!("line {line}: {what}"))?;
        return Ok(EXIT_NEGATIVE);
    }
    if let (Some(t), Some(d)) = (json.t, json.min_degree) {
        if d < t {
            io.note("negative", &format!("line {line}: minimum degree {d} below {t}"))?;
            return Ok(EXIT_NEGATIVE);
        }
    }
    Ok(EXIT_OK)
}

fn certify(a: &CertifyArgs, io: &mut Io) -> Result<i32, Failure> {
    let text = io.read_input(&a.input)?;
    let r0: VertexSet = match &a.r0 {
        Some(v) => v.iter().copied().collect(),
        None => closure::preset(
            match a.preset {
                PresetArg::Single => Preset::Single,
                PresetArg::FirstTPlusOne => Preset::FirstTPlusOne,
            },
            a.t,
        ),
    };
    let mut code = EXIT_OK;
    for (line, s, g) in parse_graphs(&text)? {
        let outcome = closure::run(&g, a.p, a.t, &r0).and_then(|cert| closure::replay(&g, &cert).map(|()| cert));
        match outcome {
            Ok(cert) => io.line(&serde_json::to_string(&CertificateJson::new(s, &cert)).expect("serialisable"))?,
            Err(CertError::Precondition(msg)) => {
                io.note("negative", &format!("line {line}: {msg}"))?;
                code = code.max(EXIT_NEGATIVE);
            }
            Err(CertError::Domain(e)) => return Err(domain(e)),
            Err(e) => {
                io.note("fatal", &format!("line {line}: {e}"))?;
                code = code.max(EXIT_NEGATIVE);
            }
        }
    }
    Ok(code)
}

fn search(a: &SearchArgs, threads: usize, io: &mut Io) -> Result<i32, Failure> {
    let mode = match a.mode {
        ModeArg::Sat => kpsat_core::search::Mode::AtLeast,
        ModeArg::SatExact => kpsat_core::search::Mode::Exactly,
        ModeArg::Semi => kpsat_core::search::Mode::Semi,
    };
    let mut problem = SearchProblem::new(a.n, a.p, a.t, mode).with_max_nodes(a.max_nodes);
    problem.iso_rejection = !a.no_iso;
    problem.max_order = a.max_order;
    if let Some(code) = &a.upper {
        let g = graph6::decode(code).map_err(|e| usage(format!("--upper: {e}")))?;
        problem = problem.with_upper(g).map_err(domain)?;
    }
    if a.enumerate && a.n > 9 {
        return Err(usage("enumeration is limited to n <= 9"));
    }
    let limits = Limits {
        time_limit: (a.time_limit > 0).then(|| Duration::from_secs(a.time_limit)),
        threads,
    };
    let (result, wall) = run_search(&problem, a.enumerate, &limits).map_err(domain)?;
    let wall_ms = a.timing.then_some(wall.as_millis() as u64);
    io.line(&serde_json::to_string(&SearchJson::new(&problem, &result, wall_ms)).expect("serialisable"))?;
    Ok(match result.outcome {
        Outcome::Optimal(_) => EXIT_OK,
        Outcome::Infeasible => {
            io.note("negative", "no graph meets the requirements")?;
            EXIT_NEGATIVE
        }
        Outcome::ResourceLimit { m } => {
            io.note("resource-limit", &format!("budget exhausted while deciding {m} edges"))?;
            EXIT_LIMIT
        }
    })
}

fn hyper(a: &HyperArgs, io: &mut Io) -> Result<i32, Failure> {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| usage(format!("{:?} needs --{flag}", a.kind)));
    let (h, layout): (Hypergraph, serde_json::Value) = match a.kind {
        HyperKind::Base | HyperKind::Complete => {
            let t = need(a.t, "t")?;
            let (base, part) = cyclic::cyclic_base(a.r, t, a.n).map_err(domain)?;
            let h = if a.kind == HyperKind::Complete {
                cyclic::greedy_complete(&base, a.r + 1).map_err(domain)?
            } else {
                base
            };
            (h, partition_json(&part, None))
        }
        HyperKind::Cyclic => {
            let (p, t) = (need(a.p, "p")?, need(a.t, "t")?);
            let (h, l) = cyclic::cyclic_saturated(a.r, p, t, a.n).map_err(domain)?;
            (h, partition_json(&l.partition, Some(l.universal)))
        }
        HyperKind::Bollobas => {
            let p = need(a.p, "p")?;
            let h = cyclic::bollobas_extremal(a.n, a.r, p).map_err(domain)?;
            (h, json!({ "core": [0, p - a.r] }))
        }
    };
    write!(io.out, "{}", hypertext::write(&h))?;
    if let Some(path) = &a.layout {
        std::fs::write(path, format!("{layout}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(EXIT_OK)
}

fn partition_json(part: &cyclic::CyclicPartition, universal: Option<std::ops::Range<usize>>) -> serde_json::Value {
    let classes: Vec<[usize; 2]> = (0..part.r).map(|i| part.class(i)).map(|c| [c.start, c.end]).collect();
    let mut v = json!({ "r": part.r, "t": part.t, "n": part.n, "classes": classes });
    if let Some(u) = universal {
        v["universal"] = json!([u.start, u.end]);
    }
    v
}

fn bounds_cmd(a: &BoundsArgs, io: &mut Io) -> Result<i32, Failure> {
    let (n, p) = (a.n, a.p);
    let mut values = Vec::new();
    if let Some(r) = a.r {
        let b = bounds::bollobas_bound(n, r, p).map_err(domain)?;
        values.push(NamedValue::integer("bollobas", &b));
    } else {
        if let Ok(b) = bounds::ehm_bound(n, p) {
            values.push(NamedValue::integer("ehm", &b));
        }
        if let Some(t) = a.t {
            if let Ok(b) = bounds::dh_semi_bound(n, t, p) {
                values.push(NamedValue::rational("duffus_hanson_semi", &b));
            }
            if let Ok(b) = bounds::dh_mixed_bound(n, p, t) {
                values.push(NamedValue::rational("duffus_hanson", &b));
            }
            if let Ok(b) = bounds::closure_tower_bound(n, p, t) {
                values.push(NamedValue::tower("closure_tower", &b));
            }
            if let Ok(b) = bounds::semi_sat_lower(n, p, t) {
                values.push(NamedValue::rational("semi_sat_lower", &b));
            }
            if let Ok(b) = bounds::semi_sat_upper(n, p, t) {
                values.push(NamedValue::integer("semi_sat_upper", &b));
            }
            if p == 3 {
                if let Ok(b) = bounds::bipartite_upper(n, t) {
                    values.push(NamedValue::integer("bipartite_upper", &b));
                }
                if let Ok(b) = bounds::hub_family_edges(n, t) {
                    values.push(NamedValue::rational("hub_family_edges", &b));
                }
            }
            if let Ok(b) = bounds::clique_join_upper(n, p, t) {
                values.push(NamedValue::integer("clique_join_upper", &b));
            }
        }
    }
    let doc = json!({ "n": n, "p": p, "t": a.t, "r": a.r, "bounds": values });
    io.line(&doc.to_string())?;
    Ok(EXIT_OK)
}

fn table(a: &TableArgs, io: &mut Io) -> Result<i32, Failure> {
    let text = io.read_input(&a.input)?;
    let mut rows: BTreeMap<(String, usize, usize), BTreeMap<usize, String>> = BTreeMap::new();
    for (i, line) in graph_lines(&text) {
        let r: SearchJson = serde_json::from_str(line).map_err(|e| Failure {
            code: EXIT_USAGE,
            kind: "input",
            message: format!("line {i}: {e}"),
        })?;
        if mode_from_name(&r.problem.mode).is_none() {
            return fail(EXIT_USAGE, "input", format!("line {i}: unknown mode {}", r.problem.mode));
        }
        let cell = match &r.value {
            serde_json::Value::Number(v) => v.to_string(),
            serde_json::Value::String(s) if s == "infeasible" => "-".into(),
            _ => "?".into(),
        };
        rows.entry((r.problem.mode.clone(), r.problem.p, r.problem.t))
            .or_default()
            .insert(r.problem.n, cell);
    }
    let ns: std::collections::BTreeSet<usize> = rows.values().flat_map(|r| r.keys().copied()).collect();
    let mut header = format!("{:<10} {:>2} {:>2} |", "mode", "p", "t");
    for n in &ns {
        header.push_str(&format!(" {:>5}", format!("n={n}")));
    }
    io.line(&header)?;
    for ((mode, p, t), cells) in &rows {
        let mut row = format!("{mode:<10} {p:>2} {t:>2} |");
        for n in &ns {
            row.push_str(&format!(" {:>5}", cells.get(n).map_or("", String::as_str)));
        }
        io.line(&row)?;
    }
    Ok(EXIT_OK)
}
