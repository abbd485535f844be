//! Argument parsing and dispatch for the `assoc` binary.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use assoc_core::arcs::{self, Arc, ArcFamily, Classification};
use assoc_core::cluster::{self, ExchangeGraph, LazySeedAInfty, Seed, SeedRecord, DEFAULT_BUDGET};
use assoc_core::flipgraph::{self, ExportFormat, ExportGraph, FlipGraph};
use assoc_core::repcc::{self, IntervalModule, Orientation};
use assoc_core::verify;
use assoc_core::{Diagonal, DihedralElement, Error, Partition, Triangulation};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub const SCHEMA: &str = "assoc.v1";

/// Every verb, in dispatch order.
pub const VERBS: &[&str] = &[
    "bijection",
    "flip",
    "neighbors",
    "dihedral",
    "graph",
    "faces",
    "mutate",
    "exchange-graph",
    "verify",
    "cc",
    "arcs",
];

#[derive(Parser, Debug)]
#[command(name = "assoc", version, about = "Young diagrams, triangulations, flip graphs and type-A cluster algebras")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Structured,
    EdgeList,
    DotLike,
    AdjacencyJson,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Convert between triangulations and diagrams.
    Bijection(BijectionArgs),
    /// Flip one row of a diagram or one diagonal of a triangulation.
    Flip(FlipArgs),
    /// All flip neighbours.
    Neighbors(NeighborsArgs),
    /// Apply a dihedral word such as "a b^2".
    Dihedral(DihedralArgs),
    /// Flip graph of Y_n.
    Graph(GraphArgs),
    /// Face numbers of the associahedron.
    Faces(FacesArgs),
    /// Mutate a seed along a sequence of vertices.
    Mutate(MutateArgs),
    /// Mutation closure of a finite-type seed.
    ExchangeGraph(ExchangeArgs),
    /// Run named invariant suites.
    Verify(VerifyArgs),
    /// Caldero-Chapoton characters of interval modules.
    Cc(CcArgs),
    /// Arc collections on the integers.
    Arcs {
        #[command(subcommand)]
        action: ArcsCommand,
    },
}

#[derive(Args, Debug)]
pub struct BijectionArgs {
    /// Triangulation "N; (a,b),..." to map to its diagram.
    #[arg(long, conflicts_with = "to_triangulation", required_unless_present = "to_triangulation")]
    to_partition: Option<String>,
    /// Diagram "[p1,p2,...]" to map to its triangulation.
    #[arg(long)]
    to_triangulation: Option<String>,
    /// Polygon size for --to-triangulation (default: smallest that fits).
    #[arg(long, requires = "to_triangulation")]
    ngon: Option<usize>,
}

#[derive(Args, Debug)]
pub struct FlipArgs {
    #[arg(long, conflicts_with = "triangulation", required_unless_present = "triangulation")]
    partition: Option<String>,
    /// Row to flip, counted from 1.
    #[arg(long, requires = "partition")]
    row: Option<usize>,
    /// Ambient n; the diagram must fit Y_n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, requires = "diagonal")]
    triangulation: Option<String>,
    /// Diagonal "(a,b)" to flip.
    #[arg(long)]
    diagonal: Option<String>,
}

#[derive(Args, Debug)]
pub struct NeighborsArgs {
    #[arg(long, conflicts_with = "triangulation", required_unless_present = "triangulation", requires = "n")]
    partition: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    triangulation: Option<String>,
}

#[derive(Args, Debug)]
pub struct DihedralArgs {
    #[arg(long, conflicts_with = "triangulation", required_unless_present = "triangulation", requires = "n")]
    partition: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    triangulation: Option<String>,
    /// Word in a (reflection) and b (rotation); the rightmost letter acts first.
    #[arg(long)]
    word: String,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[arg(long)]
    n: usize,
    /// Report structural checks instead of the graph.
    #[arg(long)]
    check: bool,
    /// List flip edges whose transposes are not flip edges.
    #[arg(long, conflicts_with = "check")]
    transpose_defect: bool,
    /// Read an adjacency-json export instead of building Y_n.
    #[arg(long, conflicts_with_all = ["check", "transpose_defect"])]
    input: Option<String>,
}

#[derive(Args, Debug)]
pub struct FacesArgs {
    #[arg(long)]
    n: usize,
    /// Only the number of k-dimensional faces.
    #[arg(long)]
    k: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedType {
    #[value(name = "A")]
    A,
    #[value(name = "A-ice")]
    AIce,
    #[value(name = "A-alt")]
    AAlt,
    #[value(name = "A-inf")]
    AInf,
    #[value(name = "D-inf")]
    DInf,
}

#[derive(Args, Debug)]
pub struct MutateArgs {
    #[arg(long = "type", value_enum, default_value_t = SeedType::A)]
    kind: SeedType,
    /// Rank, or window size for D-inf.
    #[arg(long, default_value_t = 0)]
    n: usize,
    /// Comma separated vertices, applied left to right.
    #[arg(long, default_value = "")]
    sequence: String,
    /// Start from the ice quiver of this triangulation.
    #[arg(long, conflicts_with = "seed_file")]
    triangulation: Option<String>,
    /// Start from a seed record in JSON.
    #[arg(long)]
    seed_file: Option<String>,
    /// A-inf only: keep frozen coefficients.
    #[arg(long)]
    coefficients: bool,
}

#[derive(Args, Debug)]
pub struct ExchangeArgs {
    #[arg(long = "type", value_enum, default_value_t = SeedType::A)]
    kind: SeedType,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite names, or "all".
    #[arg(required = true)]
    suites: Vec<String>,
    #[arg(long, default_value_t = 4)]
    n: usize,
}

#[derive(Args, Debug)]
pub struct CcArgs {
    /// Orientation such as ">><" (default: linear of rank --n).
    #[arg(long, required_unless_present = "n")]
    orientation: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    /// A single module "M[i,j]@>>".
    #[arg(long, conflicts_with_all = ["check", "extend"])]
    module: Option<String>,
    /// Compare every character with the mutation closure.
    #[arg(long)]
    check: bool,
    /// Compare characters with those of the zero padding to A_N.
    #[arg(long, conflicts_with = "check")]
    extend: Option<usize>,
}

#[derive(Args, Debug)]
pub struct Window {
    #[arg(long, allow_negative_numbers = true)]
    lo: i64,
    #[arg(long, allow_negative_numbers = true)]
    hi: i64,
}

#[derive(Subcommand, Debug)]
pub enum ArcsCommand {
    /// Arcs of a family inside a window, with its classification.
    Family {
        /// fountain:C, fountain-spaced:C, leapfrog, leapfrog-shifted or explicit:(a,b),...
        #[arg(long)]
        family: String,
        #[command(flatten)]
        window: Window,
    },
    /// Flip one arc of a windowed collection.
    Flip {
        #[arg(long)]
        arcs: String,
        #[arg(long)]
        arc: String,
        #[command(flatten)]
        window: Window,
        /// Refuse flips that need the frozen hull.
        #[arg(long)]
        localized: bool,
    },
    /// Polygon triangulation of a maximal windowed collection.
    Triangulation {
        #[arg(long)]
        arcs: String,
        #[command(flatten)]
        window: Window,
    },
    /// Bounded flip search from a fountain.
    Reach {
        #[arg(long)]
        family: String,
        #[command(flatten)]
        window: Window,
        #[arg(long, default_value_t = 4)]
        budget: usize,
    },
}

/// What a verb produced: human text, a JSON payload and maybe a graph.
struct Output {
    human: String,
    data: Value,
    graph: Option<ExportGraph>,
}

impl Output {
    fn new(human: impl Into<String>, data: Value) -> Self {
        Output {
            human: human.into(),
            data,
            graph: None,
        }
    }
}

/// Exit status and streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> RunResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                RunResult { code: 1, stdout: String::new(), stderr: text }
            } else {
                RunResult { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let verb = verb_name(&cli.command);
    match dispatch(cli.command).and_then(|out| render(verb, out, cli.format)) {
        Ok(stdout) => RunResult { code: 0, stdout, stderr: String::new() },
        Err(Failure::Domain(e)) => RunResult {
            code: 2,
            stdout: String::new(),
            stderr: format!("error[{}]: {e}\n", e.name()),
        },
        Err(Failure::Usage(msg)) => RunResult {
            code: 1,
            stdout: String::new(),
            stderr: format!("usage error: {msg}\n"),
        },
    }
}

enum Failure {
    Domain(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn verb_name(c: &Command) -> &'static str {
    match c {
        Command::Bijection(_) => "bijection",
        Command::Flip(_) => "flip",
        Command::Neighbors(_) => "neighbors",
        Command::Dihedral(_) => "dihedral",
        Command::Graph(_) => "graph",
        Command::Faces(_) => "faces",
        Command::Mutate(_) => "mutate",
        Command::ExchangeGraph(_) => "exchange-graph",
        Command::Verify(_) => "verify",
        Command::Cc(_) => "cc",
        Command::Arcs { .. } => "arcs",
    }
}

fn render(verb: &str, out: Output, format: Format) -> Res<String> {
    let export = match format {
        Format::Human => {
            let mut s = out.human;
            if !s.ends_with('\n') {
                s.push('\n');
            }
            return Ok(s);
        }
        Format::Structured => {
            let mut obj = serde_json::Map::new();
            obj.insert("schema".into(), json!(SCHEMA));
            obj.insert("command".into(), json!(verb));
            obj.insert("result".into(), out.data);
            let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json");
            s.push('\n');
            return Ok(s);
        }
        Format::EdgeList => ExportFormat::EdgeList,
        Format::DotLike => ExportFormat::DotLike,
        Format::AdjacencyJson => ExportFormat::AdjacencyJson,
    };
    match out.graph {
        Some(g) => Ok(g.render(export)),
        None => Err(Failure::Usage(format!("{verb} does not produce a graph; use human or structured"))),
    }
}

fn partition_for(text: &str, n: Option<usize>) -> Res<Partition> {
    let p: Partition = text.parse()?;
    if let Some(n) = n {
        if !p.fits_in(n) {
            return Err(Error::DoesNotFit { partition: p.to_string(), n }.into());
        }
    }
    Ok(p)
}

/// Smallest `n` with `p` in `Y_n`.
fn smallest_n(p: &Partition) -> usize {
    p.rows().iter().enumerate().map(|(i, r)| r + i + 1).max().unwrap_or(0)
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> (String, Vec<String>) {
    let v: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    (v.join("\n"), v)
}

fn dispatch(cmd: Command) -> Res<Output> {
    match cmd {
        Command::Bijection(a) => bijection(a),
        Command::Flip(a) => flip(a),
        Command::Neighbors(a) => neighbors(a),
        Command::Dihedral(a) => dihedral(a),
        Command::Graph(a) => graph(a),
        Command::Faces(a) => faces(a),
        Command::Mutate(a) => mutate(a),
        Command::ExchangeGraph(a) => exchange(a),
        Command::Verify(a) => run_verify(a),
        Command::Cc(a) => cc(a),
        Command::Arcs { action } => arcs_cmd(action),
    }
}

fn bijection(a: BijectionArgs) -> Res<Output> {
    if let Some(t) = a.to_partition {
        let t: Triangulation = t.parse()?;
        let p = t.lambda_map()?;
        return Ok(Output::new(
            p.to_string(),
            json!({"triangulation": t.to_string(), "partition": p.to_string()}),
        ));
    }
    let p: Partition = a.to_triangulation.expect("clap").parse()?;
    let ngon = a.ngon.unwrap_or(smallest_n(&p) + 2);
    let t = Triangulation::lambda_inverse(&p, ngon)?;
    Ok(Output::new(
        t.to_string(),
        json!({"triangulation": t.to_string(), "partition": p.to_string()}),
    ))
}

fn flip(a: FlipArgs) -> Res<Output> {
    if let Some(p) = a.partition {
        let p = partition_for(&p, a.n)?;
        let k = a.row.ok_or_else(|| Failure::Usage("--partition needs --row".into()))?;
        if k == 0 {
            return Err(Error::Parse("rows are counted from 1".into()).into());
        }
        let q = p.flip_row(k);
        if let Some(n) = a.n {
            if k > n.saturating_sub(1) {
                return Err(Error::Parse(format!("Y_{n} has rows 1..={}", n.saturating_sub(1))).into());
            }
        }
        return Ok(Output::new(
            q.to_string(),
            json!({"partition": p.to_string(), "row": k, "result": q.to_string()}),
        ));
    }
    let t: Triangulation = a.triangulation.expect("clap").parse()?;
    let d: Diagonal = a.diagonal.expect("clap").parse()?;
    let r = t.flip_diagonal(&d)?;
    let new = t.flipped_diagonal(&d)?;
    Ok(Output::new(
        r.to_string(),
        json!({"triangulation": t.to_string(), "diagonal": d.to_string(), "new_diagonal": new.to_string(), "result": r.to_string()}),
    ))
}

fn neighbors(a: NeighborsArgs) -> Res<Output> {
    if let Some(p) = a.partition {
        let n = a.n.expect("clap");
        let p = partition_for(&p, Some(n))?;
        let (human, v) = lines(p.flip_neighbors(n)?);
        return Ok(Output::new(human, json!({"partition": p.to_string(), "n": n, "neighbors": v})));
    }
    let t: Triangulation = a.triangulation.expect("clap").parse()?;
    let mut rows = Vec::new();
    for d in t.diag_order() {
        rows.push((d.to_string(), t.flip_diagonal(&d)?.to_string()));
    }
    let human = rows.iter().map(|(d, r)| format!("{d} -> {r}")).collect::<Vec<_>>().join("\n");
    let data: Vec<Value> = rows.iter().map(|(d, r)| json!({"diagonal": d, "result": r})).collect();
    Ok(Output::new(human, json!({"triangulation": t.to_string(), "neighbors": data})))
}

fn dihedral(a: DihedralArgs) -> Res<Output> {
    if let Some(p) = a.partition {
        let n = a.n.expect("clap");
        let p = partition_for(&p, Some(n))?;
        let g = DihedralElement::parse_word(&a.word, n + 2)?;
        let q = p.act(&g, n)?;
        return Ok(Output::new(
            q.to_string(),
            json!({"partition": p.to_string(), "element": g.to_string(), "result": q.to_string()}),
        ));
    }
    let t: Triangulation = a.triangulation.expect("clap").parse()?;
    let g = DihedralElement::parse_word(&a.word, t.ngon())?;
    let r = t.act(&g);
    Ok(Output::new(
        r.to_string(),
        json!({"triangulation": t.to_string(), "element": g.to_string(), "result": r.to_string()}),
    ))
}

fn graph(a: GraphArgs) -> Res<Output> {
    if let Some(path) = a.input {
        let text = std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
        let g = FlipGraph::from_adjacency_json(&text)?;
        return Ok(graph_output(&g));
    }
    if a.n == 0 || a.n > flipgraph::GRAPH_LIMIT {
        return Err(Error::BudgetExceeded(format!("flip graphs supported for 1 <= n <= {}", flipgraph::GRAPH_LIMIT)).into());
    }
    if a.check {
        let g = FlipGraph::build(a.n)?;
        let regular = g.is_regular(a.n - 1);
        let connected = g.is_connected();
        let embedding = if a.n < flipgraph::GRAPH_LIMIT { Some(flipgraph::embedding_check(a.n)?) } else { None };
        let mut human = format!(
            "Y_{}: vertices={} edges={} regular={regular} connected={connected}",
            a.n,
            g.vertices.len(),
            g.edges.len()
        );
        if let Some(e) = embedding {
            write!(human, " embeds-in-Y_{}={e}", a.n + 1).unwrap();
        }
        return Ok(Output::new(
            human,
            json!({"n": a.n, "vertices": g.vertices.len(), "edges": g.edges.len(), "regular": regular, "connected": connected, "embedding": embedding}),
        ));
    }
    if a.transpose_defect {
        let d = flipgraph::transpose_edge_defect(a.n)?;
        let (body, v) = lines(d.iter().map(|(p, q)| format!("{p} -- {q}")));
        let human = format!("# transpose defect Y_{} edges={}\n{body}", a.n, d.len());
        return Ok(Output::new(human.trim_end(), json!({"n": a.n, "defect": v})));
    }
    Ok(graph_output(&FlipGraph::build(a.n)?))
}

fn graph_output(g: &FlipGraph) -> Output {
    let export = g.to_export();
    let human = export.render(ExportFormat::EdgeList);
    let data = serde_json::from_str(&export.render(ExportFormat::AdjacencyJson)).expect("json");
    Output {
        human,
        data,
        graph: Some(export),
    }
}

fn faces(a: FacesArgs) -> Res<Output> {
    if let Some(k) = a.k {
        let f = flipgraph::count_faces(a.n, k)?;
        return Ok(Output::new(f.to_string(), json!({"n": a.n, "k": k, "faces": f})));
    }
    let fv = flipgraph::face_vector(a.n)?;
    let human = fv.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    Ok(Output::new(human, json!({"n": a.n, "f": fv})))
}

fn parse_sequence(s: &str) -> Res<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad vertex {t:?} in sequence")).into()))
        .collect()
}

fn finite_seed(kind: SeedType, n: usize) -> Res<Seed> {
    if n == 0 {
        return Err(Failure::Usage("--n must be at least 1".into()));
    }
    Ok(match kind {
        SeedType::A => cluster::initial_seed_an(n),
        SeedType::AIce => cluster::initial_seed_an_ice(n),
        SeedType::AAlt => Seed::initial(cluster::Quiver::alternating(n)),
        SeedType::DInf => cluster::initial_seed_dinfty_window(n)?,
        SeedType::AInf => return Err(Failure::Usage("A-inf has no finite seed; use mutate".into())),
    })
}

fn seed_output(seed: &Seed, history: &[usize]) -> Output {
    let mut human = format!("quiver {}\n", seed.quiver);
    for (i, v) in seed.vars.iter().enumerate() {
        writeln!(human, "{}: {}", i + 1, v.to_fraction_string()).unwrap();
    }
    let record: SeedRecord = seed.to_record();
    Output::new(
        human,
        json!({"history": history, "seed": serde_json::to_value(record).expect("json")}),
    )
}

fn mutate(a: MutateArgs) -> Res<Output> {
    let seq = parse_sequence(&a.sequence)?;
    if a.kind == SeedType::AInf && a.triangulation.is_none() && a.seed_file.is_none() {
        let s = LazySeedAInfty::replay(a.coefficients, a.n.max(2), &seq)?;
        let mut out = seed_output(s.seed(), &seq);
        out.human = format!("window 1..{}\n{}", s.window(), out.human);
        return Ok(out);
    }
    let start = if let Some(t) = a.triangulation {
        cluster::triangulation_to_ice_quiver(&t.parse()?)?
    } else if let Some(path) = a.seed_file {
        let text = std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
        let record: SeedRecord = serde_json::from_str(&text).map_err(|e| Error::Parse(format!("seed record: {e}")))?;
        Seed::from_record(&record)?
    } else {
        finite_seed(a.kind, a.n)?
    };
    Ok(seed_output(&start.mutate_sequence(&seq)?, &seq))
}

fn exchange(a: ExchangeArgs) -> Res<Output> {
    let seed = finite_seed(a.kind, a.n)?;
    let g = ExchangeGraph::build(&seed, a.budget)?;
    let name = match a.kind {
        SeedType::A => format!("A_{}", a.n),
        SeedType::AIce => format!("A_{}-ice", a.n),
        SeedType::AAlt => format!("A_{}-alt", a.n),
        SeedType::DInf => format!("D_{}", a.n),
        SeedType::AInf => unreachable!(),
    };
    let export = g.to_export(&name);
    let vars = g.cluster_variables();
    let mut human = format!("# exchange graph {name} seeds={} edges={} variables={}\n", g.seeds.len(), g.edges.len(), vars.len());
    for v in &export.vertices {
        writeln!(human, "{v}").unwrap();
    }
    let data = json!({
        "name": name,
        "seeds": export.vertices,
        "edges": export.edges.iter().map(|&(i, j)| json!([export.vertices[i], export.vertices[j]])).collect::<Vec<_>>(),
        "variables": vars.iter().map(|v| v.to_fraction_string()).collect::<Vec<_>>(),
    });
    Ok(Output {
        human,
        data,
        graph: Some(export),
    })
}

fn run_verify(a: VerifyArgs) -> Res<Output> {
    let names: Vec<String> = if a.suites.iter().any(|s| s == "all") {
        verify::SUITES.iter().map(|s| s.to_string()).collect()
    } else {
        a.suites
    };
    let mut human = String::new();
    let mut reports = Vec::new();
    for name in &names {
        let r = verify::run_suite(name, a.n)?;
        writeln!(human, "{} n={}: {}", r.suite, r.n, if r.passed() { "PASS" } else { "FAIL" }).unwrap();
        for p in &r.properties {
            let detail = if p.detail.is_empty() { String::new() } else { format!(" ({})", p.detail) };
            writeln!(human, "  [{}] {}{detail}", if p.passed { "PASS" } else { "FAIL" }, p.property).unwrap();
        }
        reports.push(r);
    }
    let passed = reports.iter().all(|r| r.passed());
    Ok(Output::new(human, json!({"passed": passed, "suites": reports})))
}

fn cc(a: CcArgs) -> Res<Output> {
    let o: Orientation = match (&a.orientation, a.n) {
        (Some(s), _) => s.parse()?,
        (None, Some(n)) => Orientation::linear(n),
        (None, None) => unreachable!("clap"),
    };
    if o.n() == 0 {
        return Err(Error::Parse("empty orientation".into()).into());
    }
    if let Some(m) = a.module {
        let full = if m.contains('@') { m } else { format!("{m}@{o}") };
        let v: IntervalModule = full.parse()?;
        let x = repcc::cc_map(&v)?;
        return Ok(Output::new(
            format!("{v} -> {}", x.to_fraction_string()),
            json!({"module": v.to_string(), "dimension_vector": v.dimension_vector(), "cc": x.to_fraction_string()}),
        ));
    }
    if let Some(big) = a.extend {
        if !o.arrows().iter().all(|&(i, j)| j == i + 1) {
            return Err(Error::Parse("extension compares linear orientations only".into()).into());
        }
        let report = repcc::infinite_extension_report(o.n(), big)?;
        let mut human = String::new();
        for r in &report {
            writeln!(human, "{} {} | {} -> {}", if r.identical { "same" } else { "diff" }, r.module, r.cc_small, r.cc_padded).unwrap();
        }
        let all = report.iter().all(|r| r.identical);
        writeln!(human, "padding to A_{big} keeps every character: {all}").unwrap();
        return Ok(Output::new(human, json!({"n": o.n(), "big_n": big, "identical": all, "records": report})));
    }
    if a.check {
        let r = repcc::verify_cc_theorem_for(&o)?;
        let mut human = String::new();
        for rec in &r.records {
            writeln!(human, "{}", serde_json::to_string(rec).expect("json")).unwrap();
        }
        writeln!(human, "CC matches the cluster variables over {o}: {}", r.holds).unwrap();
        return Ok(Output::new(human, serde_json::to_value(&r).expect("json")));
    }
    let mut human = String::new();
    let mut rows = Vec::new();
    for v in IntervalModule::all(&o) {
        let x = repcc::cc_map(&v)?;
        writeln!(human, "{v} -> {}", x.to_fraction_string()).unwrap();
        rows.push(json!({"module": v.to_string(), "dimension_vector": v.dimension_vector(), "cc": x.to_fraction_string()}));
    }
    Ok(Output::new(human, json!({"orientation": o.to_string(), "modules": rows})))
}

fn classification(f: &ArcFamily) -> Option<Classification> {
    f.classify().ok()
}

fn arcs_cmd(cmd: ArcsCommand) -> Res<Output> {
    match cmd {
        ArcsCommand::Family { family, window } => {
            let f: ArcFamily = family.parse()?;
            let col = f.materialize(window.lo, window.hi)?;
            let class = classification(&f);
            let class_text = class.map_or("unclassified".to_string(), |c| c.to_string());
            Ok(Output::new(
                format!("{f} [{},{}]: {}\n{class_text}", window.lo, window.hi, arcs::format_arcs(&col)),
                json!({"family": f.to_string(), "window": [window.lo, window.hi], "arcs": arcs::format_arcs(&col), "classification": class_text}),
            ))
        }
        ArcsCommand::Flip { arcs: text, arc, window, localized } => {
            let col = arcs::parse_arcs(&text)?;
            let a: Arc = arc.parse()?;
            let r = if localized {
                arcs::flip_arc_localized(&col, a, window.lo, window.hi)?
            } else {
                arcs::flip_arc(&col, a, window.lo, window.hi)?
            };
            let added: BTreeSet<Arc> = r.difference(&col).copied().collect();
            Ok(Output::new(
                arcs::format_arcs(&r),
                json!({"arcs": arcs::format_arcs(&col), "flipped": a.to_string(), "added": arcs::format_arcs(&added), "result": arcs::format_arcs(&r)}),
            ))
        }
        ArcsCommand::Triangulation { arcs: text, window } => {
            let col = arcs::parse_arcs(&text)?;
            let t = arcs::arcs_to_triangulation(&col, window.lo, window.hi)?;
            let p = t.lambda_map()?;
            Ok(Output::new(
                format!("{t}\n{p}"),
                json!({"arcs": arcs::format_arcs(&col), "triangulation": t.to_string(), "partition": p.to_string()}),
            ))
        }
        ArcsCommand::Reach { family, window, budget } => {
            let f: ArcFamily = family.parse()?;
            let r = arcs::reachability_window_check(&f, window.lo, window.hi, budget)?;
            let show = |v: &[Arc]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
            let human = format!(
                "center {} window [{},{}] budget {}: {} collections\nsign condition: {}\nreached: {}\nnot reached: {}",
                r.center,
                r.window.0,
                r.window.1,
                r.budget,
                r.collections_visited,
                r.sign_condition,
                show(&r.reached),
                show(&r.not_reached)
            );
            Ok(Output::new(human, serde_json::to_value(&r).expect("json")))
        }
    }
}
