//! Command implementations behind the `grundy` binary.
//!
//! Each command returns a [`RunReport`]: ordered `key=value` fields plus an
//! optional human-readable table. Every witness in a report has been
//! re-verified with [`crate::sequence`] before the report is built.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use crate::chain::{self, ChainStructure};
use crate::error::Error;
use crate::exact::{self, Limits, DEFAULT_VERTEX_CAP};
use crate::generate::{self, ChainProfile};
use crate::graph::{Graph, Vertex};
use crate::hypergraph::Hypergraph;
use crate::reduction;
use crate::sequence::{self, format_sequence};
use crate::sweep::{self, SweepKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_SIZE_CAP: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;
/// The instance is outside the class the requested method handles.
pub const EXIT_NOT_IN_CLASS: i32 = 5;
/// A sweep found a counterexample.
pub const EXIT_SWEEP_FAILED: i32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SizeCap { .. } | Error::BudgetExceeded(_) => EXIT_SIZE_CAP,
            Error::Verification(_) => EXIT_VERIFICATION,
            Error::NotChain(..) | Error::NotBipartite => EXIT_NOT_IN_CLASS,
            _ => EXIT_INPUT,
        };
        Self::new(code, e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunReport {
    pub fields: Vec<(String, String)>,
    /// Extra human-readable output, omitted in machine mode.
    pub table: Option<String>,
}

impl RunReport {
    fn push(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn render(&self, machine: bool) -> String {
        let mut out = String::new();
        for (k, v) in &self.fields {
            writeln!(out, "{k}={v}").unwrap();
        }
        if let (false, Some(table)) = (machine, &self.table) {
            out.push_str(table);
        }
        out
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::new(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::new(EXIT_INPUT, format!("cannot write {}: {e}", path.display())))
}

fn parse_graph(path: &Path) -> CliResult<Graph> {
    Graph::parse(&read(path)?)
        .map_err(|e| CliError::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn parse_hypergraph(path: &Path) -> CliResult<Hypergraph> {
    Hypergraph::parse(&read(path)?)
        .map_err(|e| CliError::new(EXIT_INPUT, format!("{}: {e}", path.display())))
}

fn elapsed_ms(start: Instant) -> String {
    format!("{:.3}", start.elapsed().as_secs_f64() * 1e3)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Auto,
    Exact,
    Chain,
    Cochain,
}

impl std::str::FromStr for Method {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "auto" => Ok(Method::Auto),
            "exact" => Ok(Method::Exact),
            "chain" => Ok(Method::Chain),
            "cochain" => Ok(Method::Cochain),
            _ => Err(CliError::new(EXIT_INPUT, format!("unknown method `{s}`"))),
        }
    }
}

/// Re-checks a witness against the graph; a failure here means a solver bug.
fn reverify(g: &Graph, order: &[Vertex], claimed: usize) -> CliResult<()> {
    match sequence::is_dominating_sequence(g, order) {
        Ok(true) if order.len() == claimed => Ok(()),
        Ok(_) => Err(CliError::new(
            EXIT_VERIFICATION,
            "witness does not dominate or has the wrong length",
        )),
        Err(e) => Err(CliError::new(
            EXIT_VERIFICATION,
            format!("witness is illegal: {e}"),
        )),
    }
}

fn chain_fields(report: &mut RunReport, g: &Graph, cs: &ChainStructure) -> CliResult<()> {
    let seq = chain::grundy_chain(g, cs)?;
    reverify(g, seq.order(), seq.len())?;
    let join = |v: Vec<usize>| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    report.push("method", "chain");
    report.push("gamma_gr", seq.len());
    report.push("witness", format_sequence(seq.order()));
    report.push("k", cs.k());
    report.push("x_sizes", join(cs.x_sizes()));
    report.push("y_sizes", join(cs.y_sizes()));
    report.push("alpha", chain::independence_number_chain(cs));
    report.table = Some(format!(
        "k={} |X_i|={} |Y_i|={}\n",
        cs.k(),
        join(cs.x_sizes()),
        join(cs.y_sizes())
    ));
    Ok(())
}

fn cochain_fields(report: &mut RunReport, g: &Graph) -> CliResult<()> {
    let sol = chain::grundy_cochain(g)?;
    reverify(g, sol.sequence.order(), sol.gamma_gr)?;
    report.push("method", "cochain");
    report.push("gamma_gr", sol.gamma_gr);
    report.push("witness", format_sequence(sol.sequence.order()));
    report.push("k", sol.k);
    Ok(())
}

fn exact_fields(report: &mut RunReport, g: &Graph, budget: Option<u64>) -> CliResult<()> {
    let r = exact::grundy_domination_exact_with(
        g,
        &Limits {
            vertex_cap: DEFAULT_VERTEX_CAP,
            node_budget: budget,
        },
    )?;
    reverify(g, r.best_sequence.order(), r.best_length)?;
    report.push("method", "exact");
    report.push("gamma_gr", r.best_length);
    report.push("witness", format_sequence(r.best_sequence.order()));
    report.push("nodes", r.nodes_explored);
    Ok(())
}

/// `solve`: γ_gr with a witness. `auto` tries chain, then co-chain, then the
/// exact search under its size cap.
pub fn cmd_solve(path: &Path, method: Method, budget: Option<u64>) -> CliResult<RunReport> {
    let g = parse_graph(path)?;
    solve_graph(&g, method, budget)
}

pub fn solve_graph(g: &Graph, method: Method, budget: Option<u64>) -> CliResult<RunReport> {
    let start = Instant::now();
    let mut report = RunReport::default();
    report.push("command", "solve");
    report.push("n", g.n());
    report.push("m", g.edge_count());

    let chain_structure = || {
        chain::recognize_chain(g).map_err(|e| match e {
            Error::IsolatedVertex(v) => CliError::new(
                EXIT_NOT_IN_CLASS,
                format!("vertex {v} is isolated; the chain method needs none (try --method exact)"),
            ),
            other => CliError::from(other),
        })
    };
    match method {
        Method::Chain => {
            let cs = chain_structure()?;
            report.push("class", "chain");
            chain_fields(&mut report, g, &cs)?;
        }
        Method::Cochain => {
            report.push("class", "cochain");
            cochain_fields(&mut report, g)?;
        }
        Method::Exact => {
            report.push("class", "general");
            exact_fields(&mut report, g, budget)?;
        }
        Method::Auto => {
            if let Ok(cs) = chain::recognize_chain(g) {
                report.push("class", "chain");
                chain_fields(&mut report, g, &cs)?;
            } else if chain::recognize_chain(&g.complement()).is_ok() {
                report.push("class", "cochain");
                cochain_fields(&mut report, g)?;
            } else if g.n() <= DEFAULT_VERTEX_CAP {
                report.push("class", "general");
                exact_fields(&mut report, g, budget)?;
            } else {
                return Err(CliError::new(
                    EXIT_SIZE_CAP,
                    format!(
                        "graph has {} vertices and is neither a chain nor a co-chain graph; \
                         the exact search is capped at {DEFAULT_VERTEX_CAP} vertices",
                        g.n()
                    ),
                ));
            }
        }
    }
    report.push("time_ms", elapsed_ms(start));
    Ok(report)
}

/// `solve --hypergraph`: ρ_gr and τ_gr with witnesses.
pub fn cmd_solve_hypergraph(path: &Path) -> CliResult<RunReport> {
    let h = parse_hypergraph(path)?;
    let start = Instant::now();
    let cover = exact::grundy_cover_exact(&h)?;
    let transversal = exact::grundy_transversal_exact(&h)?;
    let mut report = RunReport::default();
    report.push("command", "solve");
    report.push("n", h.n());
    report.push("m", h.m());
    report.push("class", "hypergraph");
    report.push("method", "exact");
    report.push("rho_gr", cover.best_length);
    report.push("edge_witness", format_sequence(&cover.best_sequence));
    report.push("tau_gr", transversal.best_length);
    report.push(
        "vertex_witness",
        format_sequence(&transversal.best_sequence),
    );
    report.push("time_ms", elapsed_ms(start));
    Ok(report)
}

/// `verify`: legality, domination and the footprint table of a sequence.
pub fn cmd_verify(graph_path: &Path, sequence_path: &Path) -> CliResult<RunReport> {
    let g = parse_graph(graph_path)?;
    let order = sequence::parse_sequence(&read(sequence_path)?)
        .map_err(|e| CliError::new(EXIT_INPUT, format!("{}: {e}", sequence_path.display())))?;
    verify_sequence(&g, &order)
}

pub fn verify_sequence(g: &Graph, order: &[Vertex]) -> CliResult<RunReport> {
    let mut report = RunReport::default();
    report.push("command", "verify");
    report.push("n", g.n());
    report.push("m", g.edge_count());
    report.push("length", order.len());
    match sequence::check_closed_neighborhood_sequence(g, order) {
        Ok(seq) => {
            report.push("legal", true);
            report.push("dominating", seq.dominated_count() == g.n());
            let mut table = String::from("position vertex footprint\n");
            for (i, (v, fp)) in seq.order().iter().zip(seq.footprints()).enumerate() {
                writeln!(table, "{i} {v} {}", format_sequence(fp)).unwrap();
            }
            report.table = Some(table);
        }
        Err(Error::IllegalStep { position, vertex }) => {
            report.push("legal", false);
            report.push("dominating", false);
            report.push("illegal_position", position);
            report.push("illegal_vertex", vertex);
        }
        Err(e) => return Err(e.into()),
    }
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReduceTarget {
    Bipartite,
    Cobipartite,
}

/// `reduce`: writes the gadget graph to `out` and its provenance to
/// `provenance`.
pub fn cmd_reduce(
    input: &Path,
    target: ReduceTarget,
    out: &Path,
    provenance: &Path,
) -> CliResult<RunReport> {
    let map = match target {
        ReduceTarget::Bipartite => reduction::hypergraph_to_bipartite(&parse_hypergraph(input)?)?,
        ReduceTarget::Cobipartite => reduction::graph_to_cobipartite(&parse_graph(input)?)?,
    };
    write(out, &map.target.to_text())?;
    write(provenance, &map.provenance())?;
    let mut report = RunReport::default();
    report.push("command", "reduce");
    report.push(
        "target",
        match target {
            ReduceTarget::Bipartite => "bipartite",
            ReduceTarget::Cobipartite => "cobipartite",
        },
    );
    report.push("n", map.target.n());
    report.push("m", map.target.edge_count());
    report.push("graph", out.display());
    report.push("provenance", provenance.display());
    Ok(report)
}

pub enum GenSpec {
    Chain(ChainProfile),
    Graph { n: usize, p: f64, seed: u64 },
    Hypergraph { n: usize, m: usize, seed: u64 },
}

/// `gen`: the instance text, written to `out` or returned for stdout.
pub fn cmd_gen(spec: &GenSpec) -> CliResult<String> {
    Ok(match spec {
        GenSpec::Chain(p) => generate::chain_from_profile(p).to_text(),
        GenSpec::Graph { n, p, seed } => {
            if !(0.0..=1.0).contains(p) {
                return Err(CliError::new(
                    EXIT_INPUT,
                    "edge probability must lie in [0, 1]",
                ));
            }
            generate::random_graph(*n, *p, *seed).to_text()
        }
        GenSpec::Hypergraph { n, m, seed } => {
            if *n < 2 || *m < 2 {
                return Err(CliError::new(
                    EXIT_INPUT,
                    "random hypergraphs need n >= 2 and m >= 2",
                ));
            }
            generate::random_hypergraph(*n, *m, *seed).to_text()
        }
    })
}

/// A chain profile shape whose `s` entries scale with the target size.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileShape {
    x: Vec<Option<usize>>,
    y: Vec<Option<usize>>,
}

impl std::str::FromStr for ProfileShape {
    type Err = CliError;

    /// Like a profile, but entries may be `s`: `"s,1,1,1x1,1,1,s"`.
    fn from_str(s: &str) -> CliResult<Self> {
        let bad = || CliError::new(EXIT_INPUT, format!("bad profile shape `{s}`"));
        let (xs, ys) = s.split_once('x').ok_or_else(bad)?;
        let list = |part: &str| -> CliResult<Vec<Option<usize>>> {
            part.split(',')
                .map(|t| match t.trim() {
                    "s" => Ok(None),
                    t => t.parse().ok().filter(|&v| v > 0).map(Some).ok_or_else(bad),
                })
                .collect()
        };
        let shape = Self {
            x: list(xs)?,
            y: list(ys)?,
        };
        let scaled = shape
            .x
            .iter()
            .chain(&shape.y)
            .filter(|e| e.is_none())
            .count();
        if shape.x.len() != shape.y.len() || scaled == 0 {
            return Err(bad());
        }
        Ok(shape)
    }
}

impl ProfileShape {
    /// The profile whose vertex count is closest to `n` from below, each `s`
    /// taking the same size.
    pub fn instantiate(&self, n: usize) -> CliResult<ChainProfile> {
        let fixed: usize = self.x.iter().chain(&self.y).flatten().sum();
        let scaled = self.x.iter().chain(&self.y).filter(|e| e.is_none()).count();
        let s = n.saturating_sub(fixed) / scaled;
        if s == 0 {
            return Err(CliError::new(
                EXIT_INPUT,
                format!("size {n} is too small for the shape"),
            ));
        }
        let fill = |v: &[Option<usize>]| v.iter().map(|e| e.unwrap_or(s)).collect();
        Ok(ChainProfile::new(fill(&self.x), fill(&self.y))?)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub edges: usize,
    pub median_ms: f64,
}

/// Median wall time of chain recognition plus the verified chain algorithm.
pub fn bench_chain(
    shape: &ProfileShape,
    sizes: &[usize],
    repeats: usize,
) -> CliResult<Vec<BenchRow>> {
    let repeats = repeats.max(1);
    let mut rows = Vec::with_capacity(sizes.len());
    for &target in sizes {
        let profile = shape.instantiate(target)?;
        let g = generate::chain_from_profile(&profile);
        let mut times = Vec::with_capacity(repeats);
        // one untimed warm-up run
        for round in 0..=repeats {
            let start = Instant::now();
            let cs = chain::recognize_chain(&g)?;
            let seq = chain::grundy_chain(&g, &cs)?;
            if round > 0 {
                times.push(start.elapsed().as_secs_f64() * 1e3);
            }
            std::hint::black_box(&seq);
        }
        times.sort_by(f64::total_cmp);
        rows.push(BenchRow {
            n: g.n(),
            edges: g.edge_count(),
            median_ms: times[times.len() / 2],
        });
    }
    Ok(rows)
}

pub fn cmd_bench(shape: &str, min_exp: u32, max_exp: u32, repeats: usize) -> CliResult<RunReport> {
    let shape: ProfileShape = shape.parse()?;
    let sizes: Vec<usize> = (min_exp..=max_exp).map(|e| 1usize << e).collect();
    let rows = bench_chain(&shape, &sizes, repeats)?;
    let mut report = RunReport::default();
    report.push("command", "bench");
    report.push("repeats", repeats.max(1));
    let mut table = String::from("n,time_ms\n");
    for r in &rows {
        writeln!(table, "{},{:.3}", r.n, r.median_ms).unwrap();
    }
    let ratios: Vec<String> = rows
        .windows(2)
        .map(|w| format!("{:.2}", w[1].median_ms / w[0].median_ms))
        .collect();
    report.push("rows", rows.len());
    report.push("doubling_ratios", ratios.join(","));
    report.fields.extend(
        rows.iter()
            .map(|r| ("row".to_string(), format!("{},{:.3}", r.n, r.median_ms))),
    );
    report.table = Some(table);
    Ok(report)
}

/// `sweep`: runs property sweeps; any counterexample is an error.
pub fn cmd_sweep(kinds: &[SweepKind], random: Option<usize>, seed: u64) -> CliResult<RunReport> {
    let mut report = RunReport::default();
    report.push("command", "sweep");
    let mut failed = Vec::new();
    let mut table = String::new();
    for &kind in kinds {
        let outcome = sweep::run(kind, random.unwrap_or(kind.default_random()), seed);
        let status = if outcome.passed() { "pass" } else { "FAIL" };
        report.push(
            kind.name(),
            format!(
                "{status} instances={} failures={}",
                outcome.instances, outcome.failure_count
            ),
        );
        writeln!(
            table,
            "{kind}: {status} ({} instances, {:.0} ms)",
            outcome.instances, outcome.elapsed_ms
        )
        .unwrap();
        for f in &outcome.failures {
            writeln!(table, "  {f}").unwrap();
        }
        if !outcome.passed() {
            failed.push(kind.name());
        }
    }
    report.table = Some(table);
    if failed.is_empty() {
        Ok(report)
    } else {
        Err(CliError::new(
            EXIT_SWEEP_FAILED,
            format!(
                "{}sweeps failed: {}",
                report.render(false),
                failed.join(", ")
            ),
        ))
    }
}
