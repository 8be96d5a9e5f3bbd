//! `dissrho`: command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage or
//! input errors.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dissrho::dissociation::{diss_exact, diss_tree_dp, MAX_EXACT_ORDER};
use dissrho::graph::{
    build_family, decode_graph6, encode_graph6, predicted_extremal, to_dot, FamilySpec, Graph,
};
use dissrho::reduced::{perron_residual, reduced_perron};
use dissrho::search::{
    canonical_form, family_search, min_rho_search, FreeTrees, LabeledConnected, SearchError,
    SearchOptions, MAX_TREE_ORDER, WORKERS_ENV,
};
use dissrho::spectral::spectral_radius;
use dissrho::verify::{self, Report};

const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Parser)]
#[command(
    name = "dissrho",
    version,
    about = "Dissociation number and spectral radius toolkit"
)]
struct Cli {
    /// Residual tolerance for spectral radii and absolute tolerance for the
    /// star check.
    #[arg(long, global = true, default_value_t = 1e-10, value_parser = positive_f64)]
    tolerance: f64,
    /// Worker threads for searches (defaults to the number of cores).
    #[arg(long, global = true, env = WORKERS_ENV, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Also write JSON results (and search checkpoints) here.
    #[arg(long, global = true)]
    output_dir: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("expected a positive number, got {s:?}")),
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Spectral radius and Perron vector of a graph6 string or family spec
    /// such as `G(1,0,0;6,5,6)`.
    Rho { input: Option<String> },
    /// Dissociation number and a maximum dissociation set.
    Diss { input: Option<String> },
    /// Build a family graph from its parameters.
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Spectral radius of a family graph from the 3x3 reduced model.
    #[command(subcommand)]
    Reduced(ReducedCommand),
    /// Verification suites with PASS/FAIL reports.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Minimum spectral radius searches at a fixed dissociation number.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Predicted minimizer for order `n`, optionally confirmed by search.
    #[command(alias = "theorem1")]
    Extremal {
        #[arg(long)]
        n: usize,
        /// Run a tree search (n <= 22) or a family search (n >= 23).
        #[arg(long)]
        confirm: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyType {
    G,
    H,
}

#[derive(Debug, Clone, Subcommand)]
enum FamilyCommand {
    /// Realize a family graph as graph6 and DOT.
    Build {
        #[arg(long = "type", value_enum)]
        family: FamilyType,
        #[arg(long, default_value_t = 0)]
        a: usize,
        #[arg(long, default_value_t = 0)]
        b: usize,
        #[arg(long, default_value_t = 0)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        p: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
        #[arg(long, default_value_t = 0)]
        r: usize,
    },
}

#[derive(Debug, Clone, Subcommand)]
enum ReducedCommand {
    /// Radius from the 3x3 fixed-point model, compared with the direct value.
    Solve {
        #[arg(long)]
        spec: FamilySpec,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyCommand {
    /// Star radii sqrt(t) for t = 1..12.
    Star,
    /// Exact classification of graphs with radius at most 2.
    Smith {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
    },
    /// Reduced model against direct radii on random family specs.
    #[command(alias = "lemma14")]
    FixedPoint {
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        h_count: usize,
    },
    /// rho(G_m,l)^2 < m + 3.
    #[command(alias = "cor15")]
    RhoBound {
        #[arg(long, default_value_t = 2)]
        m_from: usize,
        #[arg(long, default_value_t = 12)]
        m_to: usize,
    },
    /// The 33-entry case polynomial table.
    Casepolys {
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Pointwise ordering of the case 1 polynomials.
    Chains,
    /// Minimizers for n = 5, 6, 7 by full enumeration.
    #[command(alias = "remark")]
    SmallCases,
    /// Randomized spectral radius property suites.
    Monotonicity {
        #[arg(long, default_value_t = 50)]
        instances: usize,
    },
    /// Dissociation solvers against each other and brute force.
    Dissociation {
        #[arg(long, default_value_t = 500)]
        trees: usize,
        #[arg(long, default_value_t = 200)]
        graphs: usize,
    },
    /// Structure of generated hypergraphs over all small trees.
    Hypergraphs {
        #[arg(long, default_value_t = 12)]
        max_n: usize,
    },
    /// Tree searches against the predicted minimizers.
    TreePattern {
        #[arg(long, default_value_t = 12)]
        from: usize,
        #[arg(long, default_value_t = 20)]
        to: usize,
    },
    /// Family searches against the predicted minimizers.
    Family {
        #[arg(long, default_value_t = 39)]
        from: usize,
        #[arg(long, default_value_t = 120)]
        to: usize,
    },
    /// Best trees against sampled non-trees for n = 8, 9.
    TreeRestriction {
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Every suite with default parameters.
    All,
}

#[derive(Debug, Clone, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    /// Dissociation number to search for (default n - 3).
    #[arg(long)]
    psi: Option<usize>,
    /// Stop after this many work chunks, leaving a checkpoint to resume from.
    #[arg(long)]
    max_chunks: Option<usize>,
}

#[derive(Debug, Clone, Subcommand)]
enum SearchCommand {
    /// All free trees of order n.
    Trees(SearchArgs),
    /// All labeled connected graphs of order n (n <= 7).
    Graphs {
        #[command(flatten)]
        args: SearchArgs,
        #[arg(long)]
        max_edges: Option<usize>,
    },
    /// Balanced family specs of order n (n >= 14).
    Family {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Io(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError::Input(e.to_string())
    }
}

type CliResult<T> = Result<T, CliError>;

struct Ctx {
    format: Format,
    output_dir: Option<PathBuf>,
    options: SearchOptions,
}

impl Ctx {
    /// Prints `value` (JSON) or `text`, and stores JSON under `output_dir`.
    fn emit<T: Serialize>(&self, name: &str, value: &T, text: &str) -> CliResult<()> {
        let json = serde_json::to_string_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
        if let Some(dir) = &self.output_dir {
            std::fs::create_dir_all(dir)
                .map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))?;
            let path = dir.join(format!("{name}.json"));
            std::fs::write(&path, &json)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        }
        let body = match self.format {
            Format::Json => json + "\n",
            Format::Text => text.to_string(),
        };
        let mut out = std::io::stdout().lock();
        match out.write_all(body.as_bytes()).and_then(|_| out.flush()) {
            Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                Err(CliError::Io(e.to_string()))
            }
            _ => Ok(()),
        }
    }
}

fn read_input(input: Option<String>) -> CliResult<String> {
    match input {
        Some(s) if s != "-" => Ok(s.trim().to_string()),
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io(e.to_string()))?;
            buf.lines()
                .map(str::trim)
                .find(|l| !l.is_empty())
                .map(str::to_string)
                .ok_or_else(|| CliError::Input("no graph on standard input".into()))
        }
    }
}

/// A family spec like `G(...)`/`H(...)`, or graph6.
fn parse_graph(text: &str) -> CliResult<(Graph, Option<FamilySpec>)> {
    if text.len() > 1 && text[1..].trim_start().starts_with('(') {
        let spec: FamilySpec = text.parse()?;
        return Ok((build_family(&spec)?.graph, Some(spec)));
    }
    Ok((decode_graph6(text)?, None))
}

#[derive(Serialize)]
struct RhoOut {
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    spec: Option<String>,
    n: usize,
    rho: f64,
    perron: Vec<f64>,
    residual: f64,
    iterations: usize,
}

#[derive(Serialize)]
struct DissOut {
    graph6: String,
    n: usize,
    diss: usize,
    witness: Option<Vec<usize>>,
    method: &'static str,
}

#[derive(Serialize)]
struct FamilyOut {
    spec: String,
    n: usize,
    graph6: String,
    anchors: [usize; 3],
    dot: String,
}

#[derive(Serialize)]
struct ReducedOut {
    spec: String,
    n: usize,
    rho_reduced: f64,
    rho_direct: f64,
    abs_diff: f64,
    perron_residual: f64,
}

#[derive(Serialize)]
struct ReportOut<'a> {
    #[serde(flatten)]
    report: &'a Report,
    passed: bool,
}

#[derive(Serialize)]
struct VerifyAllOut<'a> {
    reports: Vec<ReportOut<'a>>,
    passed: bool,
}

#[derive(Serialize)]
struct ExtremalOut {
    n: usize,
    m: usize,
    l: usize,
    spec: String,
    graph6: String,
    /// `not-searched`, `confirmed` or `refuted`.
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    winner_graph6: Option<String>,
}

fn cmd_rho(ctx: &Ctx, tol: f64, input: Option<String>) -> CliResult<ExitCode> {
    let (g, spec) = parse_graph(&read_input(input)?)?;
    let s = spectral_radius(&g, tol)?;
    let out = RhoOut {
        graph6: encode_graph6(&g),
        spec: spec.map(|s| s.to_string()),
        n: g.order(),
        rho: s.rho,
        perron: s.perron,
        residual: s.residual,
        iterations: s.iterations,
    };
    let mut text = format!(
        "rho = {:.15}\nresidual = {:.3e}\nperron =",
        out.rho, out.residual
    );
    for x in &out.perron {
        let _ = write!(text, " {x:.12}");
    }
    text.push('\n');
    ctx.emit("rho", &out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_diss(ctx: &Ctx, input: Option<String>) -> CliResult<ExitCode> {
    let (g, _) = parse_graph(&read_input(input)?)?;
    let out = if g.order() <= MAX_EXACT_ORDER {
        let (diss, cert) = diss_exact(&g)?;
        DissOut {
            graph6: encode_graph6(&g),
            n: g.order(),
            diss,
            witness: Some(cert.set),
            method: "branch-and-bound",
        }
    } else {
        DissOut {
            graph6: encode_graph6(&g),
            n: g.order(),
            diss: diss_tree_dp(&g)?,
            witness: None,
            method: "tree-dp",
        }
    };
    let witness = out
        .witness
        .as_ref()
        .map_or("(not computed)".to_string(), |w| format!("{w:?}"));
    ctx.emit(
        "diss",
        &out,
        &format!("diss = {}\nwitness = {witness}\n", out.diss),
    )?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_family(ctx: &Ctx, cmd: FamilyCommand) -> CliResult<ExitCode> {
    let FamilyCommand::Build {
        family,
        a,
        b,
        c,
        p,
        q,
        r,
    } = cmd;
    let spec = match family {
        FamilyType::G => FamilySpec::g(a, b, c, p, q, r),
        FamilyType::H => FamilySpec::h(a, b, c, p, q, r),
    };
    let fg = build_family(&spec)?;
    let out = FamilyOut {
        spec: spec.to_string(),
        n: fg.graph.order(),
        graph6: encode_graph6(&fg.graph),
        anchors: fg.anchors,
        dot: to_dot(&fg.graph),
    };
    ctx.emit("family", &out, &format!("{}\n{}", out.graph6, out.dot))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_reduced(ctx: &Ctx, tol: f64, cmd: ReducedCommand) -> CliResult<ExitCode> {
    let ReducedCommand::Solve { spec } = cmd;
    let g = build_family(&spec)?.graph;
    let (rho, vector) = reduced_perron(&spec)?;
    let direct = spectral_radius(&g, tol)?.rho;
    let out = ReducedOut {
        spec: spec.to_string(),
        n: g.order(),
        rho_reduced: rho,
        rho_direct: direct,
        abs_diff: (rho - direct).abs(),
        perron_residual: perron_residual(&g, rho, &vector),
    };
    let text = format!(
        "{} (n = {})\nreduced rho = {:.15}\ndirect rho  = {:.15}\n|diff| = {:.3e}, Perron residual = {:.3e}\n",
        out.spec, out.n, out.rho_reduced, out.rho_direct, out.abs_diff, out.perron_residual
    );
    ctx.emit("reduced", &out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(cli: &Cli, ctx: &Ctx, cmd: &VerifyCommand) -> CliResult<Vec<(String, Report)>> {
    let seed = cli.seed;
    let workers = ctx.options.workers;
    let one = |name: &str,
               r: Result<Report, verify::VerifyError>|
     -> CliResult<Vec<(String, Report)>> { Ok(vec![(name.to_string(), r?)]) };
    match *cmd {
        VerifyCommand::Star => one("star", verify::star_law(12, cli.tolerance)),
        VerifyCommand::Smith { max_n } => one("smith", verify::smith_sweep(max_n, workers)),
        VerifyCommand::FixedPoint { count, h_count } => {
            one("fixed-point", verify::fixed_point(seed, count, h_count))
        }
        VerifyCommand::RhoBound { m_from, m_to } => {
            one("rho-bound", verify::rho_bound(m_from, m_to))
        }
        VerifyCommand::Casepolys { samples } => one("casepolys", verify::case_polys(samples)),
        VerifyCommand::Chains => one("chains", verify::ordering_chains(200, 101)),
        VerifyCommand::SmallCases => one("small-cases", verify::small_cases(&ctx.options)),
        VerifyCommand::Monotonicity { instances } => {
            one("monotonicity", verify::property_suites(seed, instances))
        }
        VerifyCommand::Dissociation { trees, graphs } => {
            one("dissociation", verify::diss_oracles(seed, trees, graphs))
        }
        VerifyCommand::Hypergraphs { max_n } => {
            one("hypergraphs", verify::hypergraph_structure(max_n))
        }
        VerifyCommand::TreePattern { from, to } => {
            one("tree-pattern", verify::tree_pattern(from, to, &ctx.options))
        }
        VerifyCommand::Family { from, to } => one("family", verify::family_consistency(from, to)),
        VerifyCommand::TreeRestriction { samples } => {
            one("tree-restriction", verify::tree_restriction(seed, samples))
        }
        VerifyCommand::All => {
            let all = [
                VerifyCommand::Star,
                VerifyCommand::Smith { max_n: 7 },
                VerifyCommand::FixedPoint {
                    count: 100,
                    h_count: 0,
                },
                VerifyCommand::RhoBound {
                    m_from: 2,
                    m_to: 12,
                },
                VerifyCommand::Casepolys { samples: 1000 },
                VerifyCommand::Chains,
                VerifyCommand::SmallCases,
                VerifyCommand::TreePattern { from: 12, to: 20 },
                VerifyCommand::Family { from: 39, to: 120 },
                VerifyCommand::Monotonicity { instances: 50 },
                VerifyCommand::Dissociation {
                    trees: 500,
                    graphs: 200,
                },
                VerifyCommand::Hypergraphs { max_n: 12 },
                VerifyCommand::TreeRestriction { samples: 200 },
            ];
            let mut out = Vec::new();
            for c in &all {
                out.extend(run_verify(cli, ctx, c)?);
            }
            Ok(out)
        }
    }
}

fn cmd_verify(cli: &Cli, ctx: &Ctx, cmd: &VerifyCommand) -> CliResult<ExitCode> {
    let reports = run_verify(cli, ctx, cmd)?;
    let passed = reports.iter().all(|(_, r)| r.passed());
    let text: String = reports.iter().map(|(_, r)| r.to_text()).collect();
    if let [(name, report)] = reports.as_slice() {
        ctx.emit(
            &format!("verify-{name}"),
            &ReportOut { report, passed },
            &text,
        )?;
    } else {
        let all = VerifyAllOut {
            reports: reports
                .iter()
                .map(|(_, r)| ReportOut {
                    report: r,
                    passed: r.passed(),
                })
                .collect(),
            passed,
        };
        ctx.emit("verify-all", &all, &text)?;
    }
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn checkpoint_dir(out: &Option<PathBuf>, kind: &str, n: usize, psi: usize) -> Option<PathBuf> {
    out.as_ref()
        .map(|d| d.join("checkpoints").join(format!("{kind}-n{n}-psi{psi}")))
}

fn cmd_search(ctx: &Ctx, cmd: SearchCommand) -> CliResult<ExitCode> {
    let (kind, args, max_edges) = match cmd {
        SearchCommand::Family { n } => {
            let res = family_search(n)?;
            let mut text = format!(
                "n = {n}, psi = {}\nwinner {} rho = {:.15}\n",
                res.psi, res.winner, res.winner_rho
            );
            let _ = writeln!(text, "graph6 {}", res.winner_g6);
            let _ = writeln!(
                text,
                "{} candidates, {} exact comparisons",
                res.candidates_examined, res.exact_comparisons
            );
            for t in &res.ties {
                let _ = writeln!(text, "tie {t}");
            }
            if let Some(h) = &res.best_h {
                let _ = writeln!(text, "best H {} rho = {:.15}", h.spec, h.rho);
            }
            ctx.emit(&format!("search-family-n{n}"), &res, &text)?;
            return Ok(ExitCode::SUCCESS);
        }
        SearchCommand::Trees(args) => ("trees", args, None),
        SearchCommand::Graphs { args, max_edges } => ("graphs", args, max_edges),
    };
    let n = args.n;
    let psi = match args.psi {
        Some(p) => p,
        None => n
            .checked_sub(3)
            .ok_or_else(|| CliError::Input(format!("n = {n} is too small for psi = n - 3")))?,
    };
    let options = SearchOptions {
        checkpoint_dir: checkpoint_dir(&ctx.output_dir, kind, n, psi),
        stop_after_chunks: args.max_chunks,
        ..ctx.options.clone()
    };
    let result = match kind {
        "trees" => {
            if n > MAX_TREE_ORDER {
                return Err(CliError::Input(format!(
                    "tree search is limited to n <= {MAX_TREE_ORDER}"
                )));
            }
            min_rho_search(&FreeTrees::new(n)?, psi, &options)
        }
        _ => {
            let source = match max_edges {
                Some(m) => LabeledConnected::with_max_edges(n, m)?,
                None => LabeledConnected::new(n)?,
            };
            min_rho_search(&source, psi, &options)
        }
    };
    let res = match result {
        Ok(r) => r,
        Err(SearchError::Interrupted { next_chunk }) => {
            eprintln!(
                "stopped before chunk {next_chunk}; rerun with the same --output-dir to resume"
            );
            return Ok(ExitCode::SUCCESS);
        }
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("{}: n = {n}, psi = {psi}\n", res.source);
    let _ = writeln!(
        text,
        "winner {} rho = {:.15}",
        res.winner.g6, res.winner.rho
    );
    let _ = writeln!(
        text,
        "{} graphs, {} with diss = psi, {} exact comparisons, {:.2}s",
        res.graphs_examined, res.candidates_examined, res.exact_comparisons, res.wall_time_secs
    );
    for t in &res.ties {
        let _ = writeln!(text, "tie {} rho = {:.15}", t.g6, t.rho);
    }
    ctx.emit(&format!("search-{kind}-n{n}-psi{psi}"), &res, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_extremal(ctx: &Ctx, n: usize, confirm: bool) -> CliResult<ExitCode> {
    let spec = predicted_extremal(n)?;
    let g = build_family(&spec)?.graph;
    let mut out = ExtremalOut {
        n,
        m: n / 6,
        l: n % 6,
        spec: spec.to_string(),
        graph6: encode_graph6(&g),
        status: "not-searched",
        method: None,
        winner_graph6: None,
    };
    if confirm {
        let want = canonical_form(&g)?;
        let (method, winner_canon, winner_g6) = if n <= 22 {
            let res = min_rho_search(&FreeTrees::new(n)?, n - 3, &ctx.options)?;
            let ok_unique = res.ties.is_empty();
            let canon = if ok_unique {
                res.winner.canon.clone()
            } else {
                String::new()
            };
            ("tree-search", canon, res.winner.g6)
        } else {
            let res = family_search(n)?;
            let winner = build_family(&res.winner)?.graph;
            let canon = if res.ties.is_empty() {
                canonical_form(&winner)?
            } else {
                String::new()
            };
            ("family-search", canon, res.winner_g6)
        };
        out.method = Some(method);
        out.status = if winner_canon == want {
            "confirmed"
        } else {
            "refuted"
        };
        out.winner_graph6 = Some(winner_g6);
    }
    let mut text = format!(
        "n = {n} = 6*{} + {}: {} ({})\n",
        out.m, out.l, out.spec, out.graph6
    );
    let _ = writeln!(text, "status: {}", out.status);
    if let (Some(m), Some(w)) = (out.method, &out.winner_graph6) {
        let _ = writeln!(text, "{m} winner {w}");
    }
    if n >= 39 {
        let _ = writeln!(text, "note: {}", verify::SCALE_NOTE);
    }
    let refuted = out.status == "refuted";
    ctx.emit(&format!("extremal-n{n}"), &out, &text)?;
    Ok(if refuted {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let ctx = Ctx {
        format: cli.format,
        output_dir: cli.output_dir.clone(),
        options: SearchOptions {
            workers: cli.workers.map(|w| w as usize),
            ..Default::default()
        },
    };
    match &cli.command {
        Command::Rho { input } => cmd_rho(&ctx, cli.tolerance, input.clone()),
        Command::Diss { input } => cmd_diss(&ctx, input.clone()),
        Command::Family(c) => cmd_family(&ctx, c.clone()),
        Command::Reduced(c) => cmd_reduced(&ctx, cli.tolerance, c.clone()),
        Command::Verify(c) => cmd_verify(&cli, &ctx, c),
        Command::Search(c) => cmd_search(&ctx, c.clone()),
        Command::Extremal { n, confirm } => cmd_extremal(&ctx, *n, *confirm),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(CliError::Input(msg)) | Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
