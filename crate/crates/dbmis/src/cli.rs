//! Command-line surface: `gen`, `solve`, `reduce`, `oracle`, and `bench`
//! subcommands over the `v1` file formats.
//!
//! Everything is deterministic: a fixed command line (including its seed)
//! produces identical bytes on every run. Canonical output goes to the
//! supplied writer (stdout in the binary); diagnostics go to stderr. Exit
//! codes: 0 success, 1 runtime failure, 2 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{render_report, run_ratio_suite, Suite};
use crate::bmatching::{
    reduce_bmatching_to_hierarchical, solve_bmatching_exact_capped,
    solve_hierarchical_exact_capped,
};
use crate::branching::{
    reduce_colored_branching_to_dbmis, solve_branching_exact_capped, ColorMode,
};
use crate::gen::{gen_bmatching, gen_dbmis, gen_digraph, gen_ecgraph, BoundMode, DbmisGenParams};
use crate::io::{
    parse_instance, render_instance, render_mapping, render_solution, InstanceFile, Mapping,
};
use crate::parity::{reduce_dbmis_to_parity, solve_parity_exact_capped, solve_parity_local};
use crate::pcforest::{
    bundled_local_search, reduce_gpf_to_dbmis, small_color_forest, solve_bundled_exact_capped,
    solve_gpf_exact_capped,
};
use crate::solvers::{solve_exact_capped, solve_greedy, solve_p_exchange, solve_via_parity};
use crate::{Error, Result, Weight};

#[derive(Parser)]
#[command(
    name = "dbmis",
    version,
    about = "Degree-bounded matroid independent sets: generators, solvers, reductions, and ratio experiments"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a random instance file.
    Gen(GenArgs),
    /// Run an approximation algorithm on an instance file.
    Solve(SolveArgs),
    /// Rewrite an instance into another kind, with a solution mapping.
    Reduce(ReduceArgs),
    /// Solve an instance exactly by pruned enumeration.
    Oracle(OracleArgs),
    /// Run a ratio suite against the exact oracle and print the report.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Ecgraph,
    Dbmis,
    Digraph,
    Bmatching,
    Parity,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BoundsArg {
    Unit,
    Varied,
}

impl From<BoundsArg> for BoundMode {
    fn from(b: BoundsArg) -> BoundMode {
        match b {
            BoundsArg::Unit => BoundMode::Unit,
            BoundsArg::Varied => BoundMode::Varied,
        }
    }
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    #[arg(long)]
    seed: u64,
    /// Vertices (graph kinds) or ground elements (dbmis/parity).
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Edges or arcs.
    #[arg(long, default_value_t = 6)]
    m: usize,
    /// Colors.
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Percent chance that an edge lands on an already-used vertex pair.
    #[arg(long, default_value_t = 25)]
    parallel_pct: u64,
    #[arg(long, value_enum, default_value_t = BoundsArg::Unit)]
    bounds: BoundsArg,
    /// Weights are uniform in 1..=weight-max.
    #[arg(long, default_value_t = 1)]
    weight_max: u64,
    /// Hyperedges to attempt (dbmis/parity).
    #[arg(long, default_value_t = 4)]
    hyperedges: usize,
    /// Cap on hyperedges per element (dbmis/parity).
    #[arg(long, default_value_t = 2)]
    max_degree: usize,
    /// Write here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgArg {
    Greedy,
    Exchange,
    ViaParity,
    BundleSearch,
    ColorMatchings,
    ParityLocal,
}

#[derive(Args)]
struct SolveArgs {
    /// Instance file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    alg: AlgArg,
    /// Exchange width for --alg exchange.
    #[arg(long, default_value_t = 1)]
    p: usize,
    /// Exchange width for --alg via-parity and --alg parity-local.
    #[arg(long, default_value_t = 1)]
    t: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FromArg {
    /// Properly colored forest instance (ecgraph) to dbmis.
    Gpf,
    /// Dbmis to matroid parity.
    Dbmis,
    /// Colored branching instance (digraph) to dbmis.
    Branching,
    /// Properly colored b-matching to hierarchical b-matching.
    Bmatch,
}

#[derive(Args)]
struct ReduceArgs {
    #[arg(long, value_enum)]
    from: FromArg,
    /// Instance file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Reduced instance destination; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Mapping destination; appended to stdout when omitted.
    #[arg(long)]
    mapping: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Colored,
    OutColored,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ObjectiveArg {
    /// Largest properly colored forest with bundles (cardinality).
    Bundled,
    /// Maximum-weight properly colored forest without parallel edges.
    Forest,
}

#[derive(Args)]
struct OracleArgs {
    /// Instance file; stdin when omitted.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Enumeration size cap.
    #[arg(long, default_value_t = 20)]
    cap: usize,
    /// Color-bound mode for digraph instances.
    #[arg(long, value_enum, default_value_t = ModeArg::Colored)]
    mode: ModeArg,
    /// Objective for ecgraph instances.
    #[arg(long, value_enum, default_value_t = ObjectiveArg::Bundled)]
    objective: ObjectiveArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Bundled,
    Colors2,
    Colors3,
    Exchange,
    Greedy,
    Pipeline,
    Branching,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Bundled => Suite::Bundled,
            SuiteArg::Colors2 => Suite::Colors2,
            SuiteArg::Colors3 => Suite::Colors3,
            SuiteArg::Exchange => Suite::Exchange,
            SuiteArg::Greedy => Suite::Greedy,
            SuiteArg::Pipeline => Suite::Pipeline,
            SuiteArg::Branching => Suite::Branching,
        }
    }
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    suite: SuiteArg,
    #[arg(long, default_value_t = 50)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

/// Parses and executes a command line. The binary calls this with its
/// process arguments and stdout; tests call it in-process.
pub fn run_from<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    eprintln!("{e}");
                    2
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String> {
    match path {
        Some(p) => Ok(std::fs::read_to_string(p)?),
        None => Ok(std::io::read_to_string(std::io::stdin())?),
    }
}

fn emit(out: &mut dyn Write, path: &Option<PathBuf>, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<()> {
    match cli.cmd {
        Cmd::Gen(a) => {
            let file = generate(&a)?;
            emit(out, &a.out, &render_instance(&file))
        }
        Cmd::Solve(a) => {
            let file = parse_instance(&read_input(&a.input)?)?;
            let (ids, weight) = dispatch_solver(&file, a.alg, a.p, a.t)?;
            emit(out, &a.out, &render_solution(&ids, weight))
        }
        Cmd::Reduce(a) => {
            let file = parse_instance(&read_input(&a.input)?)?;
            let (reduced, mapping) = dispatch_reduction(&file, a.from)?;
            emit(out, &a.out, &render_instance(&reduced))?;
            emit(out, &a.mapping, &render_mapping(&mapping))
        }
        Cmd::Oracle(a) => {
            let file = parse_instance(&read_input(&a.input)?)?;
            let (ids, weight) = dispatch_oracle(&file, a.cap, a.mode, a.objective)?;
            emit(out, &a.out, &render_solution(&ids, weight))
        }
        Cmd::Bench(a) => {
            let report = run_ratio_suite(a.suite.into(), a.trials, a.seed)?;
            out.write_all(render_report(&report).as_bytes())?;
            report.assert_no_violations()
        }
    }
}

fn generate(a: &GenArgs) -> Result<InstanceFile> {
    Ok(match a.kind {
        KindArg::Ecgraph => InstanceFile::Ecgraph(gen_ecgraph(
            a.seed,
            a.n,
            a.m,
            a.k,
            a.parallel_pct,
            a.bounds.into(),
            a.weight_max,
        )?),
        KindArg::Digraph => InstanceFile::Digraph(gen_digraph(
            a.seed,
            a.n,
            a.m,
            a.k,
            a.bounds.into(),
            a.weight_max,
        )?),
        KindArg::Bmatching => {
            let (graph, b) = gen_bmatching(
                a.seed,
                a.n,
                a.m,
                a.k,
                a.parallel_pct,
                a.bounds.into(),
                a.weight_max,
            )?;
            InstanceFile::Bmatching { graph, b }
        }
        KindArg::Dbmis | KindArg::Parity => {
            let params = DbmisGenParams {
                n: a.n,
                hyperedges: a.hyperedges,
                max_degree: a.max_degree,
                unit_bounds: a.bounds == BoundsArg::Unit,
                weight_max: a.weight_max,
            };
            let inst = gen_dbmis(a.seed, &params)?;
            if a.kind == KindArg::Dbmis {
                InstanceFile::Dbmis(inst)
            } else {
                InstanceFile::Parity(reduce_dbmis_to_parity(&inst)?.target)
            }
        }
    })
}

fn unsupported(alg: &str, kind: &str) -> Error {
    Error::InvalidArgument(format!("solver `{alg}` does not apply to `{kind}` instances"))
}

fn dispatch_solver(
    file: &InstanceFile,
    alg: AlgArg,
    p: usize,
    t: usize,
) -> Result<(Vec<usize>, Weight)> {
    let kind = file.kind();
    match file {
        InstanceFile::Dbmis(inst) => {
            let ids = match alg {
                AlgArg::Greedy => solve_greedy(inst),
                AlgArg::Exchange => solve_p_exchange(inst, p)?,
                AlgArg::ViaParity => solve_via_parity(inst, t)?,
                _ => return Err(unsupported(alg_name(alg), kind)),
            };
            let weight = inst.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Ecgraph(g) => {
            let forest = match alg {
                AlgArg::BundleSearch => bundled_local_search(g)?,
                AlgArg::ColorMatchings => small_color_forest(g)?,
                _ => return Err(unsupported(alg_name(alg), kind)),
            };
            let ids = forest.edge_ids();
            let weight = g.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Digraph(d) => {
            // Solved through the bounded-matroid reduction; arc ids carry
            // over unchanged.
            let inst = reduce_colored_branching_to_dbmis(d)?;
            let ids = match alg {
                AlgArg::Greedy => solve_greedy(&inst),
                AlgArg::Exchange => solve_p_exchange(&inst, p)?,
                AlgArg::ViaParity => solve_via_parity(&inst, t)?,
                _ => return Err(unsupported(alg_name(alg), kind)),
            };
            let weight = d.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Parity(inst) => {
            let mut ids = match alg {
                AlgArg::ParityLocal => solve_parity_local(inst, t)?,
                _ => return Err(unsupported(alg_name(alg), kind)),
            };
            ids.sort_unstable();
            let weight = inst.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Bmatching { .. } | InstanceFile::Hier(_) => {
            Err(unsupported(alg_name(alg), kind))
        }
    }
}

fn alg_name(alg: AlgArg) -> &'static str {
    match alg {
        AlgArg::Greedy => "greedy",
        AlgArg::Exchange => "exchange",
        AlgArg::ViaParity => "via-parity",
        AlgArg::BundleSearch => "bundle-search",
        AlgArg::ColorMatchings => "color-matchings",
        AlgArg::ParityLocal => "parity-local",
    }
}

fn dispatch_reduction(file: &InstanceFile, from: FromArg) -> Result<(InstanceFile, Mapping)> {
    match (from, file) {
        (FromArg::Gpf, InstanceFile::Ecgraph(g)) => {
            let inst = reduce_gpf_to_dbmis(g)?;
            let rows = (0..g.m()).map(|e| (e, e)).collect();
            Ok((
                InstanceFile::Dbmis(inst),
                Mapping {
                    from: "gpf".into(),
                    to: "dbmis".into(),
                    rows,
                },
            ))
        }
        (FromArg::Dbmis, InstanceFile::Dbmis(inst)) => {
            let cert = reduce_dbmis_to_parity(inst)?;
            let rows = cert
                .element_of_set
                .iter()
                .enumerate()
                .map(|(set, &el)| (set, el))
                .collect();
            Ok((
                InstanceFile::Parity(cert.target),
                Mapping {
                    from: "dbmis".into(),
                    to: "parity".into(),
                    rows,
                },
            ))
        }
        (FromArg::Branching, InstanceFile::Digraph(d)) => {
            let inst = reduce_colored_branching_to_dbmis(d)?;
            let rows = (0..d.m()).map(|a| (a, a)).collect();
            Ok((
                InstanceFile::Dbmis(inst),
                Mapping {
                    from: "branching".into(),
                    to: "dbmis".into(),
                    rows,
                },
            ))
        }
        (FromArg::Bmatch, InstanceFile::Bmatching { graph, b }) => {
            let hier = reduce_bmatching_to_hierarchical(graph, b)?;
            let rows = (0..graph.m()).map(|e| (e, e)).collect();
            Ok((
                InstanceFile::Hier(hier),
                Mapping {
                    from: "bmatch".into(),
                    to: "hier".into(),
                    rows,
                },
            ))
        }
        (from, file) => Err(Error::InvalidArgument(format!(
            "reduction `{}` expects a different instance kind than `{}`",
            match from {
                FromArg::Gpf => "gpf",
                FromArg::Dbmis => "dbmis",
                FromArg::Branching => "branching",
                FromArg::Bmatch => "bmatch",
            },
            file.kind()
        ))),
    }
}

fn dispatch_oracle(
    file: &InstanceFile,
    cap: usize,
    mode: ModeArg,
    objective: ObjectiveArg,
) -> Result<(Vec<usize>, Weight)> {
    match file {
        InstanceFile::Dbmis(inst) => {
            let ids = solve_exact_capped(inst, cap)?;
            let weight = inst.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Ecgraph(g) => {
            let ids = match objective {
                ObjectiveArg::Bundled => solve_bundled_exact_capped(g, cap)?.edge_ids(),
                ObjectiveArg::Forest => solve_gpf_exact_capped(g, cap)?,
            };
            let weight = g.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Digraph(d) => {
            let mode = match mode {
                ModeArg::Colored => ColorMode::Colored,
                ModeArg::OutColored => ColorMode::OutColored,
            };
            let ids = solve_branching_exact_capped(d, mode, cap)?;
            let weight = d.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Bmatching { graph, b } => {
            let ids = solve_bmatching_exact_capped(graph, b, cap)?;
            let weight = graph.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Parity(inst) => {
            let ids = solve_parity_exact_capped(inst, cap)?;
            let weight = inst.weight_of(&ids);
            Ok((ids, weight))
        }
        InstanceFile::Hier(h) => {
            let ids = solve_hierarchical_exact_capped(h, cap)?;
            let weight = h.weight_of(&ids);
            Ok((ids, weight))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = run_from(args.iter().copied(), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn help_exits_zero() {
        let (code, text) = run(&["dbmis", "--help"]);
        assert_eq!(code, 0);
        assert!(text.contains("gen"));
        assert!(text.contains("bench"));
    }

    #[test]
    fn unknown_flag_is_a_usage_error() {
        let (code, _) = run(&["dbmis", "gen", "--bogus"]);
        assert_eq!(code, 2);
        let (code, _) = run(&["dbmis", "frobnicate"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn gen_is_byte_deterministic() {
        let args = [
            "dbmis", "gen", "--kind", "ecgraph", "--seed", "1", "--n", "3", "--m", "3", "--k",
            "1",
        ];
        let (code, a) = run(&args);
        assert_eq!(code, 0);
        let (_, b) = run(&args);
        assert_eq!(a, b);
        assert!(a.starts_with("v1 ecgraph\n3 1 3 0\n"));
    }

    #[test]
    fn solve_rejects_mismatched_algorithms() {
        let dir = std::env::temp_dir().join("dbmis-cli-mismatch");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("g.ecgraph");
        let (code, text) = run(&[
            "dbmis", "gen", "--kind", "ecgraph", "--seed", "3", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code, 0);
        assert!(text.is_empty());
        let (code, _) = run(&["dbmis", "solve", "--alg", "greedy", "--input", path.to_str().unwrap()]);
        assert_eq!(code, 1);
    }

    #[test]
    fn bench_prints_a_report() {
        let (code, text) = run(&[
            "dbmis", "bench", "--suite", "greedy", "--trials", "3", "--seed", "5",
        ]);
        assert_eq!(code, 0);
        assert!(text.contains("violations 0"));
        assert!(text.contains("mean_ratio"));
    }
}
