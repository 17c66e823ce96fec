//! Command-line front end.
//!
//! Each verb maps onto one library operation. Machine-readable results go to
//! the `--out` file when one is given (and to standard output otherwise);
//! human-readable summaries go to standard output. Exit codes: 0 on success,
//! 1 when an operation fails on its input, 2 on a usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::Ratio;
use serde_json::json;

use crate::coupling::extract_cubic;
use crate::error::{Error, Result};
use crate::experiments::{
    coupling_uniformity_test, cubic_expansion_survey, run_sparse_scaling, summarize, width_bracket_small, write_csv,
    ExperimentConfig, ExperimentKind, TrialRecord,
};
use crate::graph::{
    bisection_width_exact, cheeger_exact, read_graph, read_multigraph, write_graph, write_multigraph, BRUTE_FORCE_CAP,
};
use crate::random::{sample_configuration, sample_gnp, Configuration, DegreeSequence, Seed};
use crate::structure::{
    grow_bounded_degree_tree, kernel_multigraph, two_core, two_core_multigraph, GrowthOutcome, TreeGrowthParams,
};
use crate::width::{rankwidth_exact, treewidth_exact};

#[derive(Debug, Parser)]
#[command(name = "widthlab", version, about = "Exact widths, cores, kernels and cubic extraction for random graphs")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Sample G(n, p) and write its edge list.
    Gnp {
        /// Number of vertices.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        prob: Probability,
        /// 64-bit seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 2-core of a graph, relabelled 0..k-1 in increasing order.
    Core {
        /// Input edge list.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Kernel multigraph of a graph; with --out, the bare paths go to OUT.paths.
    Kernel {
        /// Input edge list.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cubic configuration extracted from the 2-core of a multigraph.
    ///
    /// Without --seed the core's own configuration is used; with --seed a
    /// configuration with the core's degree sequence is sampled. With --out,
    /// the audit trace goes to OUT.trace.
    Extract {
        /// Input edge list.
        #[arg(long = "in")]
        input: PathBuf,
        /// Sample a configuration with the core's degree sequence from this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact tree-width and rank-width with witness decompositions.
    ///
    /// Witnesses are written to OUT.td and OUT.rd, where OUT defaults to the
    /// input path.
    Width {
        /// Input edge list.
        #[arg(long = "in")]
        input: PathBuf,
        /// Use the exact solvers (required; there is no other mode).
        #[arg(long)]
        exact: bool,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Cheeger constant and bisection width.
    Cheeger {
        /// Input edge list.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Grow a bounded-degree tree, in a given graph or a fresh G(n, p).
    TreeGrow {
        /// Input edge list.
        #[arg(long = "in", conflicts_with = "n")]
        input: Option<PathBuf>,
        /// Sample G(n, p) with this many vertices instead.
        #[arg(long, requires = "prob")]
        n: Option<usize>,
        #[command(flatten)]
        prob: OptionalProbability,
        /// Target size delta n / 8; also sets the default child cap.
        #[arg(long)]
        delta: f64,
        /// Children per vertex, default ceil(4 ln(1/delta)).
        #[arg(long = "k-cap")]
        k_cap: Option<usize>,
        /// 64-bit seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an experiment described by a JSON config.
    Experiment {
        /// Input edge list.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Override the config's master seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Override the config's trial count.
        #[arg(long)]
        trials: Option<usize>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Probability {
    /// Edge probability.
    #[arg(long)]
    p: Option<f64>,
    /// Sets p = (1 + epsilon) / n.
    #[arg(long)]
    epsilon: Option<f64>,
}

#[derive(Debug, Args)]
#[group(id = "prob", required = false, multiple = false)]
struct OptionalProbability {
    /// Edge probability.
    #[arg(long)]
    p: Option<f64>,
    /// Sets p = (1 + epsilon) / n.
    #[arg(long)]
    epsilon: Option<f64>,
}

fn probability(n: usize, p: Option<f64>, epsilon: Option<f64>) -> Result<f64> {
    match (p, epsilon) {
        (Some(p), None) => Ok(p),
        (None, Some(e)) => {
            if n == 0 {
                return Err(Error::argument("--epsilon needs n >= 1"));
            }
            Ok((1.0 + e) / n as f64)
        }
        _ => Err(Error::argument("give exactly one of --p and --epsilon")),
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn with_suffix(path: &Path, suffix: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

/// Writes an artifact to `out`, or to standard output when there is none.
fn emit(out: Option<&Path>, text: &str, stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Parses `argv` (program name first), runs the verb and returns the exit
/// code, printing to the process's standard streams.
pub fn parse_and_dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

/// [`parse_and_dispatch`] with explicit output streams.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().ansi().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(text.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(e.render().to_string().as_bytes());
                    2
                }
            };
        }
    };
    match dispatch(cli.verb, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "widthlab: {e}");
            match e {
                Error::Argument(_) => 2,
                _ => 1,
            }
        }
    }
}

fn dispatch(verb: Verb, stdout: &mut dyn Write) -> Result<()> {
    match verb {
        Verb::Gnp { n, prob, seed, out } => {
            let p = probability(n, prob.p, prob.epsilon)?;
            let g = sample_gnp(n, p, seed)?;
            emit(out.as_deref(), &write_graph(&g), stdout)?;
            if out.is_some() {
                writeln!(stdout, "G({n}, {p}): {} edges", g.edge_count())?;
            }
        }
        Verb::Core { input, out } => {
            let g = read_graph(&read_text(&input)?)?;
            let core = two_core(&g).graph;
            emit(out.as_deref(), &write_graph(&core), stdout)?;
            if out.is_some() {
                writeln!(stdout, "2-core: {} vertices, {} edges", core.n(), core.edge_count())?;
            }
        }
        Verb::Kernel { input, out } => {
            let g = read_multigraph(&read_text(&input)?)?;
            let (k, map) = kernel_multigraph(&g);
            emit(out.as_deref(), &write_multigraph(&k), stdout)?;
            if let Some(out) = &out {
                std::fs::write(with_suffix(out, ".paths"), map.to_text())?;
                writeln!(stdout, "kernel: {} vertices, {} edges", k.n(), k.edge_count())?;
            }
        }
        Verb::Extract { input, seed, out } => {
            let g = read_multigraph(&read_text(&input)?)?;
            let core = two_core_multigraph(&g).graph;
            let d = DegreeSequence((0..core.n()).map(|v| core.degree(v)).collect());
            let c = match seed {
                Some(s) => sample_configuration(&d, Seed(s))?,
                None => Configuration::from_multigraph(&core),
            };
            let x = extract_cubic(&c, &d)?;
            emit(out.as_deref(), &write_multigraph(&x.cubic.multigraph()), stdout)?;
            if let Some(out) = &out {
                std::fs::write(with_suffix(out, ".trace"), x.trace.to_text())?;
                writeln!(
                    stdout,
                    "m={} from a core of {} vertices (D3={}, heavy weight {})",
                    x.m,
                    core.n(),
                    d.count(3),
                    crate::coupling::heavy_weight(&d)
                )?;
            }
        }
        Verb::Width { input, exact, out } => {
            if !exact {
                return Err(Error::argument("only exact widths are implemented; pass --exact"));
            }
            let g = read_graph(&read_text(&input)?)?;
            let (tw, td) = treewidth_exact(&g)?;
            let (rw, rd) = rankwidth_exact(&g)?;
            let base = out.unwrap_or(input);
            std::fs::write(with_suffix(&base, ".td"), td.to_text())?;
            std::fs::write(with_suffix(&base, ".rd"), rd.to_text())?;
            writeln!(stdout, "tw={tw} rw={rw}")?;
        }
        Verb::Cheeger { input, out } => {
            let g = read_graph(&read_text(&input)?)?;
            let c = cheeger_exact(&g)?;
            let b = bisection_width_exact(&g)?;
            writeln!(stdout, "phi={} bisection={}", c.value, b.width)?;
            if let Some(out) = out {
                let side: Vec<String> = c.argmin.iter().map(|v| v.to_string()).collect();
                std::fs::write(out, side.join(" ") + "\n")?;
            }
        }
        Verb::TreeGrow { input, n, prob, delta, k_cap, seed, out } => {
            let seed = Seed(seed);
            let g = match (input, n) {
                (Some(path), None) => read_graph(&read_text(&path)?)?,
                (None, Some(n)) => sample_gnp(n, probability(n, prob.p, prob.epsilon)?, seed.child(0))?,
                _ => return Err(Error::argument("give --in or --n with --p/--epsilon")),
            };
            let mut params = TreeGrowthParams::new(delta, g.n())?;
            if let Some(k) = k_cap {
                params = params.with_k_cap(k);
            }
            match grow_bounded_degree_tree(&g, &params, seed.child(1))? {
                GrowthOutcome::Grown(t) => {
                    emit(out.as_deref(), &t.to_text(), stdout)?;
                    if out.is_some() {
                        writeln!(
                            stdout,
                            "tree: {} vertices (target {}), max degree {}, {} attempts",
                            t.len(),
                            params.target(g.n()),
                            t.max_degree(),
                            t.attempts_used
                        )?;
                    }
                }
                GrowthOutcome::Failure { attempts } => {
                    writeln!(stdout, "no initial tree after {attempts} attempts")?;
                }
            }
        }
        Verb::Experiment { input, out, seed, trials } => {
            let mut config = ExperimentConfig::from_json(&read_text(&input)?)?;
            if let Some(s) = seed {
                config.seed = s;
            }
            if let Some(t) = trials {
                config.trials = t;
            }
            if let Some(o) = out {
                config.output = Some(o);
            }
            config.validate()?;
            run_experiment(&config, stdout)?;
        }
    }
    Ok(())
}

fn write_records(config: &ExperimentConfig, records: &[TrialRecord], stdout: &mut dyn Write) -> Result<()> {
    match &config.output {
        Some(path) => write_csv(records, std::fs::File::create(path)?)?,
        None => write_csv(records, &mut *stdout)?,
    }
    Ok(())
}

fn run_experiment(config: &ExperimentConfig, stdout: &mut dyn Write) -> Result<()> {
    let to_file = config.output.is_some();
    match config.experiment {
        ExperimentKind::SparseScaling => {
            let records = run_sparse_scaling(config)?;
            write_records(config, &records, stdout)?;
            if to_file {
                for c in summarize(&records) {
                    writeln!(
                        stdout,
                        "n={} eps={}: D3/(eps^3 n)={:.3} D2/(eps^2 n)={:.3} excess/(eps^3 n)={:.3} giant {}/{}",
                        c.n, c.epsilon, c.d3_scaled, c.d2_scaled, c.excess_scaled, c.giant_ok, c.trials
                    )?;
                }
            }
        }
        ExperimentKind::WidthBracket => {
            let report = width_bracket_small(config)?;
            write_records(config, &report.records, stdout)?;
            if to_file {
                let held = report.cubic.iter().filter(|c| c.holds).count();
                writeln!(stdout, "cubic lower bound held in {held}/{}", report.cubic.len())?;
                writeln!(stdout, "upper-bound violations: {}", report.violations.len())?;
            }
            for v in &report.violations {
                writeln!(stdout, "violation: {v}")?;
            }
        }
        ExperimentKind::ExpansionSurvey => {
            let threshold = Ratio::new(2u64, 11);
            let mut surveys = Vec::new();
            for &m in &config.cubic_m {
                if m > BRUTE_FORCE_CAP {
                    return Err(Error::Capacity { what: "Cheeger constant", n: m, cap: BRUTE_FORCE_CAP });
                }
                let s = cubic_expansion_survey(m, config.trials, Seed(config.seed).child(m as u64))?;
                if to_file {
                    writeln!(
                        stdout,
                        "m={m}: {}/{} samples with phi >= 2/11",
                        s.count_at_least(threshold),
                        s.phis.len()
                    )?;
                }
                let hist: Vec<_> = s
                    .histogram()
                    .into_iter()
                    .map(|(phi, count)| json!({"phi": phi.to_string(), "count": count}))
                    .collect();
                surveys.push(json!({
                    "m": m,
                    "samples": s.phis.len(),
                    "rejected": s.rejected,
                    "disconnected": s.disconnected,
                    "at_least_2_11": s.count_at_least(threshold),
                    "histogram": hist,
                }));
            }
            let text = serde_json::to_string_pretty(&json!({ "surveys": surveys }))? + "\n";
            emit(config.output.as_deref(), &text, stdout)?;
        }
        ExperimentKind::CouplingUniformity => {
            let d = DegreeSequence(config.degrees.clone().unwrap_or_else(|| vec![3, 3, 3, 3, 2, 2]));
            let r = coupling_uniformity_test(&d, config.trials, config.seed, config.min_expected)?;
            let by_m: Vec<_> = r
                .by_m
                .iter()
                .map(|t| {
                    json!({
                        "m": t.m,
                        "samples": t.samples,
                        "statistic": t.test.map(|c| c.statistic),
                        "dof": t.test.map(|c| c.dof),
                        "p_value": t.test.map(|c| c.p_value),
                    })
                })
                .collect();
            let text = serde_json::to_string_pretty(&json!({
                "degrees": d.0,
                "samples": r.samples,
                "identity": r.identity,
                "by_m": by_m,
            }))? + "\n";
            emit(config.output.as_deref(), &text, stdout)?;
            if to_file {
                match r.min_p_value() {
                    Some(p) => writeln!(stdout, "smallest p-value {p:.4}")?,
                    None => writeln!(stdout, "no testable group")?,
                }
            }
        }
    }
    Ok(())
}
