//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code with everything destined for stdout and stderr, so the binary is
//! a thin wrapper and the behaviour is testable in-process.
//!
//! Exit codes: 0 for YES / VALID, 1 for NO / INVALID, 2 for usage, parse or
//! budget errors. File arguments accept `-` for stdin.

use crate::acyclic::{kernelize_forest, KernelVerdict};
use crate::dense::{kernel_dual_clique, kernel_dual_cluster, kernel_dual_hereditary, solve_clique_k};
use crate::error::Error;
use crate::graph::{Graph, Instance, ParamMode};
use crate::io::{format_graph, format_witness, parse_graph, parse_target_graph, parse_witness, TARGET_MARKER};
use crate::oracle::{oracle_identify_to, oracle_min_witness, OracleBudget};
use crate::recognize::{recognize, GraphClass};
use crate::reductions::{
    bin_packing_brute, gen_chordal_target_from_clique, gen_clique_from_set_cover, gen_linear_forest_from_bin_packing,
    gen_split_from_clique, gen_tree_from_independent_set, max_independent_set, set_cover_brute, BinPackingInstance,
    SetCoverInstance,
};
use crate::search::identify_exact;
use crate::solve::{solve, Certificate, Parameter, SolveResult};
use crate::target::identify_to_forest;
use crate::witness::verify_witness;
use clap::{Args, Parser, Subcommand};
use std::collections::BTreeSet;
use std::fmt::Write;
use std::io::Read;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "identikit", version, about = "Decide whether vertex identifications turn a graph into a target class")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Budget {
    /// At most K identifications.
    #[arg(long)]
    k: Option<usize>,
    /// At least P vertices must remain.
    #[arg(long = "dual-p")]
    dual_p: Option<usize>,
}

impl Budget {
    fn parameter(&self) -> Parameter {
        match (self.k, self.dual_p) {
            (Some(k), _) => Parameter::K(k),
            (None, Some(p)) => Parameter::Dual(p),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Decide the instance with the class solver.
    Solve {
        #[arg(long)]
        class: GraphClass,
        #[command(flatten)]
        budget: Budget,
        /// Print the reached graph and the bags.
        #[arg(long)]
        witness: bool,
        /// Use the exhaustive oracle instead of the class solver.
        #[arg(long)]
        oracle: bool,
        /// Accepted for compatibility; every algorithm is deterministic.
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads; the solvers currently run on one.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        jobs: u32,
        graph: PathBuf,
    },
    /// Decide whether GRAPH identifies to exactly TARGET.
    Identify {
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        oracle: bool,
        graph: PathBuf,
        target: PathBuf,
    },
    /// Run a kernel: the forest kernel for --k, the dense dual kernels for --dual-p.
    Kernelize {
        #[arg(long)]
        class: GraphClass,
        #[command(flatten)]
        budget: Budget,
        graph: PathBuf,
    },
    /// Check a witness. TARGET may be solver output with an embedded graph;
    /// without WITNESS the bags are read from TARGET.
    Verify { graph: PathBuf, target: PathBuf, witness: Option<PathBuf> },
    /// Emit a reduction instance with an "# expected:" line.
    Generate {
        #[command(subcommand)]
        kind: Generator,
    },
    /// Fewest identifications into the class, by exhaustive enumeration.
    Oracle {
        #[arg(long)]
        class: GraphClass,
        #[arg(long)]
        witness: bool,
        graph: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum Generator {
    /// Star/tree/forest instance from an independent-set instance.
    IndependentSet {
        #[arg(long)]
        p: usize,
        graph: PathBuf,
    },
    /// Linear forest pair from bin packing; the target goes to --target-out.
    BinPacking {
        /// Comma separated item sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long)]
        bins: usize,
        #[arg(long)]
        capacity: usize,
        #[arg(long)]
        target_out: Option<PathBuf>,
    },
    /// Clique instance from set cover.
    SetCover {
        #[arg(long)]
        universe: usize,
        /// Sets separated by ';', elements by ','. An empty set is written as
        /// an empty field.
        #[arg(long)]
        sets: String,
        #[arg(long)]
        budget: usize,
    },
    /// Split instance from a clique instance.
    SplitFromClique {
        #[arg(long)]
        k: usize,
        graph: PathBuf,
    },
    /// Pair (G', H) from a clique instance; H goes to --target-out.
    ChordalFromClique {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        target_out: Option<PathBuf>,
        graph: PathBuf,
    },
}

/// Outcome of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl RunOutput {
    fn usage(msg: impl Into<String>) -> Self {
        RunOutput { code: 2, stdout: String::new(), stderr: msg.into() }
    }
}

struct Fail(String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(format!("error: {e}"))
    }
}

type Res<T> = std::result::Result<T, Fail>;

fn read_text(path: &PathBuf) -> Res<String> {
    let mut s = String::new();
    let r = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    r.map_err(|e| Fail(format!("error: cannot read {}: {e}", path.display())))?;
    Ok(s)
}

fn read_graph(path: &PathBuf) -> Res<Graph> {
    parse_graph(&read_text(path)?).map_err(|e| Fail(format!("error: {}: {e}", path.display())))
}

fn write_file(path: &PathBuf, text: &str) -> Res<()> {
    std::fs::write(path, text).map_err(|e| Fail(format!("error: cannot write {}: {e}", path.display())))
}

fn verdict(yes: bool) -> (i32, &'static str) {
    if yes {
        (0, "YES")
    } else {
        (1, "NO")
    }
}

fn certificate_block(cert: &Certificate) -> String {
    format!("{TARGET_MARKER}\n{}{}", format_graph(&cert.target), format_witness(&cert.witness))
}

fn oracle_solve(g: &Graph, class: GraphClass, param: Parameter) -> Res<SolveResult> {
    let k = match param {
        Parameter::K(k) => k,
        Parameter::Dual(p) if p > g.n() => return Ok(SolveResult::No),
        Parameter::Dual(p) => g.n() - p,
    };
    Ok(match oracle_min_witness(g, class, &OracleBudget::from_env())? {
        Some((cost, w)) if cost <= k => SolveResult::Yes(Certificate::from_witness(g, &w)),
        _ => SolveResult::No,
    })
}

fn cmd_solve(class: GraphClass, param: Parameter, witness: bool, oracle: bool, path: &PathBuf) -> Res<RunOutput> {
    let g = read_graph(path)?;
    let res = if oracle { oracle_solve(&g, class, param)? } else { solve(&g, class, param)? };
    let (code, word) = verdict(res.is_yes());
    let mut stdout = format!("{word}\n");
    if let (true, Some(cert)) = (witness, res.certificate()) {
        stdout.push_str(&certificate_block(cert));
    }
    Ok(RunOutput { code, stdout, stderr: String::new() })
}

fn cmd_identify(witness: bool, oracle: bool, gp: &PathBuf, hp: &PathBuf) -> Res<RunOutput> {
    let (g, h) = (read_graph(gp)?, read_graph(hp)?);
    let w = if oracle {
        oracle_identify_to(&g, &h, &OracleBudget::from_env())?
    } else if recognize(&h, GraphClass::Forest) {
        identify_to_forest(&g, &h)?
    } else {
        identify_exact(&g, &h)?
    };
    let (code, word) = verdict(w.is_some());
    let mut stdout = format!("{word}\n");
    if let (true, Some(w)) = (witness, &w) {
        stdout.push_str(&format_witness(w));
    }
    Ok(RunOutput { code, stdout, stderr: String::new() })
}

fn cmd_kernelize(class: GraphClass, param: Parameter, path: &PathBuf) -> Res<RunOutput> {
    let g = read_graph(path)?;
    let verdict = match (param, class) {
        (Parameter::K(k), GraphClass::Forest) => kernelize_forest(&g, k).verdict,
        (Parameter::Dual(p), GraphClass::Clique) => kernel_dual_clique(&g, p),
        (Parameter::Dual(p), GraphClass::Cluster) => kernel_dual_cluster(&g, p),
        (Parameter::Dual(p), c @ (GraphClass::Split | GraphClass::Interval | GraphClass::Chordal)) => {
            kernel_dual_hereditary(&g, p, c)
        }
        (Parameter::K(_), c) => return Err(Fail(format!("error: no --k kernel for class {c}; use forest"))),
        (Parameter::Dual(_), c) => return Err(Fail(format!("error: no --dual-p kernel for class {c}"))),
    };
    let out = match verdict {
        KernelVerdict::TrivialYes => RunOutput { code: 0, stdout: "YES\n".into(), stderr: String::new() },
        KernelVerdict::TrivialNo => RunOutput { code: 1, stdout: "NO\n".into(), stderr: String::new() },
        KernelVerdict::Reduced(inst) => {
            let mut s = String::from("REDUCED\n");
            let _ = match inst.mode {
                ParamMode::ByK => writeln!(s, "# k: {}", inst.budget),
                ParamMode::ByDual => writeln!(s, "# dual-p: {}", inst.dual()),
            };
            s.push_str(&format_graph(&inst.graph));
            RunOutput { code: 0, stdout: s, stderr: String::new() }
        }
    };
    Ok(out)
}

fn cmd_verify(gp: &PathBuf, hp: &PathBuf, wp: Option<&PathBuf>) -> Res<RunOutput> {
    let g = read_graph(gp)?;
    let htext = read_text(hp)?;
    let h = parse_target_graph(&htext).map_err(|e| Fail(format!("error: {}: {e}", hp.display())))?;
    let wtext = match wp {
        Some(p) => read_text(p)?,
        None => htext,
    };
    let w = parse_witness(&wtext)?;
    let ok = verify_witness(&g, &h, &w).unwrap_or(false);
    let (code, word) = if ok { (0, "VALID") } else { (1, "INVALID") };
    Ok(RunOutput { code, stdout: format!("{word}\n"), stderr: String::new() })
}

fn expected(answer: Option<bool>) -> &'static str {
    match answer {
        Some(true) => "yes",
        Some(false) => "no",
        None => "unknown",
    }
}

/// Instances past this size get "unknown" instead of a brute-force answer.
const BRUTE_LIMIT: usize = 40;

fn parse_sets(text: &str) -> Res<Vec<BTreeSet<usize>>> {
    text.split(';')
        .map(|part| {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| Fail(format!("error: bad set element {t:?}"))))
                .collect()
        })
        .collect()
}

fn instance_text(inst: &Instance, answer: Option<bool>) -> String {
    format!("# expected: {}\n# k: {}\n{}", expected(answer), inst.budget, format_graph(&inst.graph))
}

fn cmd_generate(kind: &Generator) -> Res<RunOutput> {
    let stdout = match kind {
        Generator::IndependentSet { p, graph } => {
            let g = read_graph(graph)?;
            let inst = gen_tree_from_independent_set(&g, *p)?;
            let answer = (g.n() <= BRUTE_LIMIT).then(|| max_independent_set(&g) >= *p);
            instance_text(&inst, answer)
        }
        Generator::BinPacking { sizes, bins, capacity, target_out } => {
            let bp = BinPackingInstance { sizes: sizes.clone(), bins: *bins, capacity: *capacity };
            let (g, l) = gen_linear_forest_from_bin_packing(&bp)?;
            if let Some(p) = target_out {
                write_file(p, &format_graph(&l))?;
            }
            let answer = (bp.sizes.len() <= BRUTE_LIMIT).then(|| bin_packing_brute(&bp));
            format!("# expected: {}\n{}", expected(answer), format_graph(&g))
        }
        Generator::SetCover { universe, sets, budget } => {
            let sc = SetCoverInstance { universe_size: *universe, sets: parse_sets(sets)?, budget: *budget };
            let inst = gen_clique_from_set_cover(&sc)?;
            let answer = (sc.sets.len() < 20).then(|| set_cover_brute(&sc));
            instance_text(&inst, answer)
        }
        Generator::SplitFromClique { k, graph } => {
            let src = Instance::by_k(read_graph(graph)?, *k);
            let inst = gen_split_from_clique(&src)?;
            let answer = solve_clique_k(&src.graph, *k).ok().map(|r| r.is_yes());
            instance_text(&inst, answer)
        }
        Generator::ChordalFromClique { k, target_out, graph } => {
            let src = Instance::by_k(read_graph(graph)?, *k);
            let (gp, h) = gen_chordal_target_from_clique(&src)?;
            if let Some(p) = target_out {
                write_file(p, &format_graph(&h))?;
            }
            let answer = solve_clique_k(&src.graph, *k).ok().map(|r| r.is_yes());
            format!("# expected: {}\n# k: {k}\n{}", expected(answer), format_graph(&gp))
        }
    };
    Ok(RunOutput { code: 0, stdout, stderr: String::new() })
}

fn cmd_oracle(class: GraphClass, witness: bool, path: &PathBuf) -> Res<RunOutput> {
    let g = read_graph(path)?;
    let best = oracle_min_witness(&g, class, &OracleBudget::from_env())?;
    let mut stdout = String::new();
    match best {
        None => stdout.push_str("unreachable\n"),
        Some((cost, w)) => {
            let _ = writeln!(stdout, "min {cost}");
            if witness {
                stdout.push_str(&certificate_block(&Certificate::from_witness(&g, &w)));
            }
        }
    }
    Ok(RunOutput { code: 0, stdout, stderr: String::new() })
}

/// Parses `argv` (including the program name) and executes the command.
pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() { RunOutput::usage(text) } else { RunOutput { code: 0, stdout: text, stderr: String::new() } };
        }
    };
    let res = match &cli.verb {
        Verb::Solve { class, budget, witness, oracle, graph, .. } => {
            cmd_solve(*class, budget.parameter(), *witness, *oracle, graph)
        }
        Verb::Identify { witness, oracle, graph, target } => cmd_identify(*witness, *oracle, graph, target),
        Verb::Kernelize { class, budget, graph } => cmd_kernelize(*class, budget.parameter(), graph),
        Verb::Verify { graph, target, witness } => cmd_verify(graph, target, witness.as_ref()),
        Verb::Generate { kind } => cmd_generate(kind),
        Verb::Oracle { class, witness, graph } => cmd_oracle(*class, *witness, graph),
    };
    res.unwrap_or_else(|Fail(msg)| RunOutput::usage(msg + "\n"))
}
