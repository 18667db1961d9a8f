//! `rscolour`: command-line front end for the rscolour library.
//!
//! Every command prints `RESULT: <token>` as its first line. Exit status
//! is 0 for yes/valid, 1 for no/invalid, 2 for usage or input errors and
//! 3 when a search budget runs out.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rscolour::chordal::{test_3rs_chordal, ChordalReason, ChordalVerdict};
use rscolour::colouring::{
    bicoloured_p4, improper_edge, is_distance_two, is_ordered, is_proper, rs_violation, RsViolation,
};
use rscolour::constructions::{
    colouring_lift, edge_blowup, g_plus, sat_to_graph, split_independence_number, star_to_ordered_cobipartite,
    CoBipartitePartition, GadgetVariant, SplitPartition,
};
use rscolour::generate::{random_cubic_cnf, random_planted_cnf, random_symmetric_matrix, rng};
use rscolour::hessian::{compress, recover, GreedyOrder};
use rscolour::solver::{decide, max_independent_set, optimal_colouring};
use rscolour::tree3rs::{path_3rs_feasible, test_3rs_rooted, test_3rs_tree, Verdict};
use rscolour::{io, Colouring, Error, Graph, Outcome, SeedGrouping, SolveBudget, SolverOptions, Variant};

#[derive(Parser)]
#[command(name = "rscolour", version, about = "Restricted star colouring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a colouring against a graph.
    Verify(VerifyArgs),
    /// Decide k-colourability, or find the chromatic number when -k is absent.
    Solve(SolveArgs),
    /// Linear-time 3-rs test for trees.
    Tree3rs(Tree3rsArgs),
    /// 3-rs test for chordal graphs.
    Chordal3rs(Chordal3rsArgs),
    /// Whether a path on n vertices has a 3-rs colouring with end colours i and j.
    PathFeasible(PathArgs),
    /// Gadget graph of a positive 3-CNF formula.
    GenSat(GenSatArgs),
    /// Replace every edge uv by K_{2,Δ+1}.
    GenBlowup(GenBlowupArgs),
    /// Pad every vertex with pendants up to degree Δ+1.
    Gplus(GplusArgs),
    /// rs chromatic number of a split graph.
    SplitChi(SplitArgs),
    /// Turn a star colouring of a co-bipartite graph into an ordered one.
    CobipConvert(CobipArgs),
    /// Compress a sparse symmetric matrix with a greedy rs grouping.
    HessCompress(HessCompressArgs),
    /// Recover a matrix from its compressed form.
    HessRecover(HessRecoverArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Proper,
    Rs,
    Star,
    Ordered,
    DistanceTwo,
}

#[derive(Clone, Copy, ValueEnum)]
enum SolveKind {
    Proper,
    Rs,
    Star,
    Ordered,
}

impl From<SolveKind> for Variant {
    fn from(k: SolveKind) -> Variant {
        match k {
            SolveKind::Proper => Variant::Proper,
            SolveKind::Rs => Variant::Rs,
            SolveKind::Star => Variant::Star,
            SolveKind::Ordered => Variant::Ordered,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetKind {
    Basic,
    Girth,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Natural,
    Ldf,
}

impl From<Order> for GreedyOrder {
    fn from(o: Order) -> GreedyOrder {
        match o {
            Order::Natural => GreedyOrder::Natural,
            Order::Ldf => GreedyOrder::LargestDegreeFirst,
        }
    }
}

#[derive(Args)]
struct Budget {
    #[arg(long, default_value_t = 10_000_000)]
    budget_nodes: u64,
    #[arg(long, default_value_t = 120.0)]
    budget_secs: f64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
}

impl Budget {
    fn options(&self) -> SolverOptions {
        SolverOptions {
            budget: SolveBudget::new(self.budget_nodes, Duration::from_secs_f64(self.budget_secs)),
            threads: self.threads.max(1),
            ..Default::default()
        }
    }
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "rs")]
    kind: Kind,
    #[arg(short)]
    g: PathBuf,
    #[arg(short)]
    c: PathBuf,
    /// Palette size; defaults to one more than the largest colour.
    #[arg(short)]
    k: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long, value_enum, default_value = "rs")]
    kind: SolveKind,
    #[arg(short)]
    g: PathBuf,
    #[arg(short)]
    k: Option<usize>,
    /// Partial colouring to extend (needs -k).
    #[arg(long)]
    pre: Option<PathBuf>,
    /// Report a maximum independent set instead of colouring.
    #[arg(long, conflicts_with_all = ["k", "pre"])]
    mis: bool,
    /// Write the witness here instead of stdout.
    #[arg(short)]
    o: Option<PathBuf>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct Tree3rsArgs {
    #[arg(short)]
    g: PathBuf,
    /// Root the traversal at this 3-plus vertex (1-based).
    #[arg(long)]
    root: Option<usize>,
}

#[derive(Args)]
struct Chordal3rsArgs {
    #[arg(short)]
    g: PathBuf,
    /// Write the reduced tree of every component here.
    #[arg(long)]
    dump_tree: Option<PathBuf>,
}

#[derive(Args)]
struct PathArgs {
    #[arg(short)]
    n: usize,
    #[arg(short)]
    i: u8,
    #[arg(short)]
    j: u8,
}

#[derive(Args)]
struct GenSatArgs {
    /// Formula file; a random one is drawn when absent.
    #[arg(short)]
    f: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "basic")]
    variant: GadgetKind,
    #[arg(long, default_value_t = 2)]
    s: usize,
    /// Variables of the random formula.
    #[arg(long, default_value_t = 6)]
    vars: usize,
    /// Clauses of the random formula; a cubic formula when absent.
    #[arg(long)]
    clauses: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short)]
    o: Option<PathBuf>,
    /// Vertex name sidecar.
    #[arg(long)]
    names: Option<PathBuf>,
    /// Write the generated formula here.
    #[arg(long)]
    cnf_out: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct GenBlowupArgs {
    #[arg(short)]
    g: PathBuf,
    /// Proper colouring of the input to lift to the blow-up.
    #[arg(short)]
    c: Option<PathBuf>,
    /// Where the lifted colouring goes.
    #[arg(long)]
    lift_out: Option<PathBuf>,
    #[arg(short)]
    o: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct GplusArgs {
    #[arg(short)]
    g: PathBuf,
    #[arg(short)]
    o: Option<PathBuf>,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(Args)]
struct SplitArgs {
    #[arg(short)]
    g: PathBuf,
    /// `<vertex> <side>` lines, side 0 for the clique and 1 for the
    /// independent set. Derived from the degree sequence when absent.
    #[arg(long)]
    part: Option<PathBuf>,
}

#[derive(Args)]
struct CobipArgs {
    #[arg(short)]
    g: PathBuf,
    /// Star colouring; an optimal one is computed when absent.
    #[arg(short)]
    c: Option<PathBuf>,
    /// `<vertex> <side>` lines with sides 0 and 1. Derived from the
    /// complement when absent.
    #[arg(long)]
    part: Option<PathBuf>,
    #[arg(short)]
    o: Option<PathBuf>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct HessCompressArgs {
    /// Matrix Market file. Pattern-only files get random values.
    #[arg(short)]
    m: PathBuf,
    #[arg(long, value_enum, default_value = "natural")]
    order: Order,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Compressed matrix as CSV.
    #[arg(short)]
    o: Option<PathBuf>,
    /// Grouping in colouring format.
    #[arg(long)]
    grouping_out: Option<PathBuf>,
    /// The matrix that was compressed, useful when values were drawn.
    #[arg(long)]
    matrix_out: Option<PathBuf>,
}

#[derive(Args)]
struct HessRecoverArgs {
    /// Matrix Market file giving the pattern. If it has values, the
    /// recovered matrix is compared against them.
    #[arg(short)]
    m: PathBuf,
    /// Compressed matrix as CSV.
    #[arg(short)]
    b: PathBuf,
    /// Grouping in colouring format.
    #[arg(short)]
    c: PathBuf,
    #[arg(short)]
    o: Option<PathBuf>,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

/// What a command prints and how it exits.
struct Report {
    token: String,
    code: u8,
    body: String,
}

impl Report {
    fn new(token: impl Into<String>, code: u8) -> Self {
        Report {
            token: token.into(),
            code,
            body: String::new(),
        }
    }

    fn yes_no(yes: bool, t: &str, f: &str) -> Self {
        if yes {
            Report::new(t, 0)
        } else {
            Report::new(f, 1)
        }
    }

    fn line(mut self, s: impl AsRef<str>) -> Self {
        self.body.push_str(s.as_ref());
        if !self.body.ends_with('\n') {
            self.body.push('\n');
        }
        self
    }
}

type Res<T> = Result<T, Error>;

fn source(p: &Path) -> String {
    p.display().to_string()
}

fn load_graph(p: &Path) -> Res<Graph> {
    io::parse_graph(&io::read_text(p)?, &source(p))
}

fn load_colouring(p: &Path, n: usize, k: Option<usize>) -> Res<Colouring> {
    io::parse_colouring(&io::read_text(p)?, n, k, &source(p))
}

/// Writes `text` to `path`, or appends it to the report when no path is given.
fn emit(report: Report, path: Option<&Path>, text: &str) -> Res<Report> {
    match path {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            Ok(report)
        }
        None => Ok(report.line(text)),
    }
}

fn write_file(path: Option<&Path>, text: &str) -> Res<()> {
    if let Some(p) = path {
        std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
    }
    Ok(())
}

fn verify(a: &VerifyArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let c = load_colouring(&a.c, g.n(), a.k)?;
    let why: Option<String> = match a.kind {
        Kind::Proper => improper_edge(&g, &c)?.map(|(u, v)| format!("edge {} {} is monochromatic", u + 1, v + 1)),
        Kind::Rs => rs_violation(&g, &c)?.map(|v| match v {
            RsViolation::Monochromatic(u, v) => format!("edge {} {} is monochromatic", u + 1, v + 1),
            RsViolation::Path([x, y, z]) => format!("path {} {} {} has a higher middle", x + 1, y + 1, z + 1),
        }),
        Kind::Star => bicoloured_p4(&g, &c)?.map(|p| {
            if p[0] == p[2] {
                format!("edge {} {} is monochromatic", p[0] + 1, p[1] + 1)
            } else {
                format!("path {} {} {} {} is bicoloured", p[0] + 1, p[1] + 1, p[2] + 1, p[3] + 1)
            }
        }),
        Kind::Ordered => (!is_ordered(&g, &c)?).then(|| "not an ordered colouring".to_string()),
        Kind::DistanceTwo => {
            (!is_distance_two(&g, &c)?).then(|| "two vertices within distance two share a colour".to_string())
        }
    };
    Ok(match why {
        None => Report::new("VALID", 0).line(format!("colours: {}", c.k())),
        Some(w) => Report::new("INVALID", 1).line(w),
    })
}

fn solve(a: &SolveArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let opts = a.budget.options();
    if a.mis {
        let set = match max_independent_set(&g, opts.budget) {
            Err(Error::BudgetExceeded) => return Ok(Report::new("BUDGET_EXCEEDED", 3)),
            r => r?,
        };
        let list: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
        return Ok(Report::new(set.len().to_string(), 0).line(list.join(" ")));
    }
    let variant = Variant::from(a.kind);
    let Some(k) = a.k else {
        if a.pre.is_some() {
            return Err(Error::InvalidInput("--pre needs -k".into()));
        }
        let c = match optimal_colouring(&g, variant, &opts) {
            Err(Error::BudgetExceeded) => return Ok(Report::new("BUDGET_EXCEEDED", 3)),
            r => r?,
        };
        return emit(
            Report::new(c.k().to_string(), 0),
            a.o.as_deref(),
            &io::write_colouring(&c),
        );
    };
    let pre = match &a.pre {
        Some(p) => Some(io::parse_partial_colouring(&io::read_text(p)?, g.n(), k, &source(p))?),
        None => None,
    };
    match decide(&g, variant, k, pre.as_ref(), &opts)? {
        Outcome::Yes(c) => emit(Report::new("YES", 0), a.o.as_deref(), &io::write_colouring(&c)),
        Outcome::No => Ok(Report::new("NO", 1)),
        Outcome::BudgetExceeded => Ok(Report::new("BUDGET_EXCEEDED", 3)),
    }
}

fn tree3rs(a: &Tree3rsArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let verdict = match a.root {
        Some(0) => return Err(Error::InvalidInput("vertices are numbered from 1".into())),
        Some(r) => test_3rs_rooted(&g, r - 1)?.verdict,
        None => test_3rs_tree(&g)?,
    };
    Ok(match verdict {
        Verdict::Colourable => Report::new("YES", 0).line("3RS: YES"),
        Verdict::NotColourable(reason) => Report::new("NO", 1).line("3RS: NO").line(reason.to_string()),
    })
}

fn chordal3rs(a: &Chordal3rsArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let report = test_3rs_chordal(&g)?;
    if let Some(p) = &a.dump_tree {
        let mut text = String::new();
        for (i, t) in report.trees.iter().enumerate() {
            let _ = writeln!(text, "c component {}", i + 1);
            for (v, o) in t.origin.iter().enumerate() {
                match o {
                    Some(o) => writeln!(text, "c vertex {} is {}", v + 1, o + 1),
                    None => writeln!(text, "c vertex {} is a new pendant", v + 1),
                }
                .unwrap();
            }
            text.push_str(&io::write_graph(&t.tree));
        }
        write_file(Some(p), &text)?;
    }
    let out = match report.verdict {
        ChordalVerdict::Colourable => Report::new("YES", 0).line("3RS: YES"),
        ChordalVerdict::NotColourable { component, reason } => {
            let why = match reason {
                ChordalReason::TypeITriangle([a, b, c]) => {
                    format!(
                        "triangle {} {} {} has three vertices of degree at least three",
                        a + 1,
                        b + 1,
                        c + 1
                    )
                }
                ChordalReason::Tree(r) => format!("reduced tree of component {}: {r}", component + 1),
            };
            Report::new("NO", 1).line("3RS: NO").line(why)
        }
    };
    Ok(out.line(format!("eliminations: {}", report.eliminations)))
}

fn path_feasible(a: &PathArgs) -> Res<Report> {
    Ok(Report::yes_no(path_3rs_feasible(a.n, a.i, a.j)?, "YES", "NO"))
}

fn gen_sat(a: &GenSatArgs) -> Res<Report> {
    let (f, planted) = match &a.f {
        Some(p) => (io::parse_cnf(&io::read_text(p)?, &source(p))?, None),
        None => {
            let mut r = rng(a.seed);
            match a.clauses {
                Some(m) => {
                    let (f, t) = random_planted_cnf(a.vars, m, &mut r);
                    (f, Some(t))
                }
                None => (random_cubic_cnf(a.vars, &mut r), None),
            }
        }
    };
    let variant = match a.variant {
        GadgetKind::Basic => GadgetVariant::Basic,
        GadgetKind::Girth => GadgetVariant::Girth(a.s),
    };
    let gg = sat_to_graph(&f, variant)?;
    write_file(a.names.as_deref(), &io::write_names(&gg.names()))?;
    write_file(a.cnf_out.as_deref(), &io::write_cnf(&f))?;
    write_file(a.dot.as_deref(), &gg.graph.to_dot())?;
    let mut report = Report::new("OK", 0).line(format!(
        "c {} variables, {} clauses, {} vertices, {} edges",
        f.num_vars(),
        f.num_clauses(),
        gg.graph.n(),
        gg.graph.m()
    ));
    if !f.is_cubic() {
        report = report.line("c formula is not cubic; colourings need not decode to assignments");
    }
    if let Some(t) = planted {
        let ones: Vec<String> = t
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| (i + 1).to_string())
            .collect();
        report = report.line(format!("c planted true variables: {}", ones.join(" ")));
    }
    emit(report, a.o.as_deref(), &io::write_graph(&gg.graph))
}

fn gen_blowup(a: &GenBlowupArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let bu = edge_blowup(&g)?;
    if let Some(c) = &a.c {
        let pc = load_colouring(c, g.n(), None)?;
        if !is_proper(&g, &pc)? {
            return Err(Error::Precondition("colouring to lift is not proper".into()));
        }
        let lifted = colouring_lift(&g, &bu, &pc)?;
        let text = io::write_colouring(&lifted);
        match &a.lift_out {
            Some(p) => write_file(Some(p), &text)?,
            None => return Err(Error::InvalidInput("-c needs --lift-out".into())),
        }
    }
    write_file(a.dot.as_deref(), &bu.graph.to_dot())?;
    let report = Report::new("OK", 0).line(format!(
        "c {} vertices, {} edges, max degree {}",
        bu.graph.n(),
        bu.graph.m(),
        bu.delta
    ));
    emit(report, a.o.as_deref(), &io::write_graph(&bu.graph))
}

fn gplus(a: &GplusArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let h = g_plus(&g);
    write_file(a.dot.as_deref(), &h.to_dot())?;
    emit(Report::new("OK", 0), a.o.as_deref(), &io::write_graph(&h))
}

/// Reads a two-sided partition in colouring format.
fn load_sides(p: &Path, n: usize) -> Res<(Vec<usize>, Vec<usize>)> {
    let c = load_colouring(p, n, Some(2))?;
    let side = |s| (0..n).filter(|&v| c.colour(v) == s).collect();
    Ok((side(0), side(1)))
}

/// Clique and independent set from the degree sequence: the largest `m`
/// with `d_m >= m - 1` over degrees sorted in decreasing order.
fn split_partition(g: &Graph) -> SplitPartition {
    let mut vs: Vec<usize> = g.vertices().collect();
    vs.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let m = vs.iter().enumerate().filter(|&(i, &v)| g.degree(v) >= i).count();
    let mut clique = vs[..m].to_vec();
    let mut independent = vs[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    SplitPartition { clique, independent }
}

fn split_chi(a: &SplitArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let part = match &a.part {
        Some(p) => {
            let (clique, independent) = load_sides(p, g.n())?;
            SplitPartition { clique, independent }
        }
        None => split_partition(&g),
    };
    if let Err(e) = part.validate(&g) {
        return Err(Error::Precondition(format!("not a split partition: {e}")));
    }
    let alpha = split_independence_number(&g, &part)?;
    Ok(Report::new((g.n() - alpha + 1).to_string(), 0).line(format!("alpha: {alpha}")))
}

/// The two sides of the complement's bipartition.
fn cobip_partition(g: &Graph) -> Res<CoBipartitePartition> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let side = Graph::from_edge_list(n, &edges)?
        .bipartition()
        .ok_or_else(|| Error::Precondition("graph is not co-bipartite".into()))?;
    Ok(CoBipartitePartition {
        a: (0..n).filter(|&v| !side[v]).collect(),
        b: (0..n).filter(|&v| side[v]).collect(),
    })
}

fn cobip_convert(a: &CobipArgs) -> Res<Report> {
    let g = load_graph(&a.g)?;
    let part = match &a.part {
        Some(p) => {
            let (a, b) = load_sides(p, g.n())?;
            CoBipartitePartition { a, b }
        }
        None => cobip_partition(&g)?,
    };
    let sc = match &a.c {
        Some(c) => load_colouring(c, g.n(), None)?,
        None => match optimal_colouring(&g, Variant::Star, &a.budget.options()) {
            Err(Error::BudgetExceeded) => return Ok(Report::new("BUDGET_EXCEEDED", 3)),
            r => r?,
        },
    };
    let oc = star_to_ordered_cobipartite(&g, &part, &sc)?;
    if !is_ordered(&g, &oc)? {
        return Ok(Report::new("INVALID", 1).line("relabelled colouring is not ordered"));
    }
    emit(
        Report::new("VALID", 0).line(format!("c colours: {}", oc.k())),
        a.o.as_deref(),
        &io::write_colouring(&oc),
    )
}

fn hess_compress(a: &HessCompressArgs) -> Res<Report> {
    let (p, h) = io::parse_matrix_market(&io::read_text(&a.m)?, &source(&a.m))?;
    let h = h.unwrap_or_else(|| random_symmetric_matrix(&p, &mut rng(a.seed)));
    let s = SeedGrouping::greedy(&p, a.order.into());
    let b = compress(&h, &p, &s)?;
    write_file(a.grouping_out.as_deref(), &io::write_colouring(s.colouring()))?;
    write_file(a.matrix_out.as_deref(), &io::write_matrix_market(&p, &h))?;
    let report = Report::new("OK", 0).line(format!("c {} rows, {} groups", p.n(), s.k()));
    emit(report, a.o.as_deref(), &io::write_csv(&b)?)
}

fn hess_recover(a: &HessRecoverArgs) -> Res<Report> {
    let (p, original) = io::parse_matrix_market(&io::read_text(&a.m)?, &source(&a.m))?;
    let b = io::parse_csv(&io::read_text(&a.b)?, &source(&a.b))?;
    let col = load_colouring(&a.c, p.n(), Some(b.cols()))?;
    let s = SeedGrouping::new(&p, col)?;
    let h = recover(&b, &p, &s)?;
    let text = io::write_csv(&h)?;
    let report = match original {
        Some(o) => {
            let err = h.max_abs_diff(&o);
            Report::yes_no(err <= a.tol, "VALID", "INVALID").line(format!("c max abs error {err:e}"))
        }
        None => Report::new("OK", 0),
    };
    emit(report, a.o.as_deref(), &text)
}

fn run(cmd: &Command) -> Res<Report> {
    match cmd {
        Command::Verify(a) => verify(a),
        Command::Solve(a) => solve(a),
        Command::Tree3rs(a) => tree3rs(a),
        Command::Chordal3rs(a) => chordal3rs(a),
        Command::PathFeasible(a) => path_feasible(a),
        Command::GenSat(a) => gen_sat(a),
        Command::GenBlowup(a) => gen_blowup(a),
        Command::Gplus(a) => gplus(a),
        Command::SplitChi(a) => split_chi(a),
        Command::CobipConvert(a) => cobip_convert(a),
        Command::HessCompress(a) => hess_compress(a),
        Command::HessRecover(a) => hess_recover(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            println!("RESULT: ERROR");
            let _ = e.print();
            return ExitCode::from(2);
        }
    };
    match run(&cli.command) {
        Ok(r) => {
            print!("RESULT: {}\n{}", r.token, r.body);
            ExitCode::from(r.code)
        }
        Err(Error::BudgetExceeded) => {
            println!("RESULT: BUDGET_EXCEEDED");
            ExitCode::from(3)
        }
        Err(e) => {
            println!("RESULT: ERROR");
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
