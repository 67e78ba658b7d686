//! Command-line surface. `run` takes explicit streams so it can be tested
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 an inequality violation, classification failure
//! or engine mismatch, 2 bad input or usage.

use std::fs;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::acceptance;
use crate::flats;
use crate::format;
use crate::graph::{self, graphic};
use crate::matroid::Matroid;
use crate::mw::{self, rank2_census, MwError};
use crate::trace::{to_dot, TraceError, TraceOptions, Tracer};
use crate::tutte::{tutte_subset_sum, TutteConfig, TutteEngine};

#[derive(Parser, Debug)]
#[command(name = "splitmw", version, about = "Exact matroid toolkit for the Merino-Welsh inequalities")]
struct Cli {
    /// Worker threads for parallel work (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Memo budget of the deletion-contraction engine, in bytes.
    #[arg(long, global = true)]
    memo_cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a matroid as matroid-bases-v1.
    Construct(ConstructArgs),
    /// Tutte polynomial as tutte-v1.
    Tutte {
        file: String,
        #[arg(long, value_enum, default_value_t = Engine::Dc)]
        engine: Engine,
    },
    /// Evaluate T(2,0), T(0,2), T(1,1) and the three inequalities.
    CheckMw { file: String },
    /// Cyclic flats and split/paving classification.
    CyclicFlats { file: String },
    /// Print whether the matroid is split.
    IsSplit { file: String },
    /// Stream rank-2 censuses for every n up to the bound.
    EnumerateRank2 {
        #[arg(long)]
        max_n: usize,
    },
    /// Checked proof trace for a split matroid.
    Trace {
        file: String,
        /// Emit a Graphviz description instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Brute-force spanning tree and orientation counts of a multigraph.
    Oracle { file: String },
    /// Run the acceptance suite.
    Selftest,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ConstructArgs {
    /// U_{k,n}, given as k,n.
    #[arg(long, value_parser = parse_list)]
    uniform: Option<List>,
    /// The minimal matroid T_{k,n}, given as k,n.
    #[arg(long, value_parser = parse_list)]
    minimal: Option<List>,
    /// Cycle matroid of a multigraph-v1 file.
    #[arg(long)]
    graphic: Option<String>,
    /// Rank-2 matroid from parallel class sizes a1,a2,...
    #[arg(long, value_parser = parse_list)]
    rank2: Option<List>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Engine {
    Subset,
    Dc,
    Both,
}

/// Comma-separated nonnegative integers.
#[derive(Clone, Debug)]
struct List(Vec<usize>);

fn parse_list(s: &str) -> Result<List, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|e| format!("bad integer {part:?}: {e}"))
        })
        .collect::<Result<_, _>>()
        .map(List)
}

enum Failure {
    /// Exit 1 with a message.
    Finding(String),
    /// Exit 2 with a message.
    Input(String),
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Input(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

struct Ctx<'a> {
    stdin: &'a mut (dyn Read + Send),
    out: &'a mut (dyn Write + Send),
    tutte: TutteConfig,
}

impl Ctx<'_> {
    fn read_input(&mut self, path: &str) -> Result<String, Failure> {
        if path == "-" {
            let mut s = String::new();
            self.stdin.read_to_string(&mut s)?;
            Ok(s)
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Input(format!("{path}: {e}")))
        }
    }

    fn read_matroid(&mut self, path: &str) -> Result<Matroid, Failure> {
        let text = self.read_input(path)?;
        Ok(format::matroid_from_json(&text)?)
    }

    fn line(&mut self, s: &str) -> Result<(), Failure> {
        writeln!(self.out, "{s}")?;
        Ok(())
    }

    fn engine(&self) -> TutteEngine {
        TutteEngine::new(self.tutte.clone())
    }
}

/// Runs one invocation and returns the process exit code.
pub fn run<I, S>(args: I, stdin: &mut (dyn Read + Send), stdout: &mut (dyn Write + Send), stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { stdout } else { stderr };
            let _ = write!(target, "{}", e.render());
            return if code == 0 { 0 } else { 2 };
        }
    };
    let mut tutte = TutteConfig::default();
    if let Some(cap) = cli.memo_cap {
        tutte.memo_cap_bytes = cap;
    }
    let mut ctx = Ctx {
        stdin,
        out: stdout,
        tutte,
    };
    let result = match cli.threads {
        Some(0) => Err(Failure::Input("--threads must be positive".into())),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&mut ctx, cli.command)),
            Err(e) => Err(e.into()),
        },
        None => dispatch(&mut ctx, cli.command),
    };
    let _ = ctx.out.flush();
    match result {
        Ok(code) => code,
        Err(Failure::Finding(msg)) => {
            let _ = writeln!(stderr, "{msg}");
            1
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>, command: Command) -> Outcome {
    match command {
        Command::Construct(a) => construct(ctx, a),
        Command::Tutte { file, engine } => tutte_cmd(ctx, &file, engine),
        Command::CheckMw { file } => check_mw(ctx, &file),
        Command::CyclicFlats { file } => {
            let m = ctx.read_matroid(&file)?;
            let r = flats::cyclic_flats(&m)?;
            ctx.line(&format::cyclic_flats_to_json(&r))?;
            Ok(0)
        }
        Command::IsSplit { file } => {
            let m = ctx.read_matroid(&file)?;
            let split = flats::is_split(&m)?;
            ctx.line(&split.to_string())?;
            Ok(0)
        }
        Command::EnumerateRank2 { max_n } => enumerate_rank2(ctx, max_n),
        Command::Trace { file, dot } => trace_cmd(ctx, &file, dot),
        Command::Oracle { file } => oracle(ctx, &file),
        Command::Selftest => {
            let mut all = true;
            for o in acceptance::run_all() {
                all &= o.passed;
                ctx.line(&o.line())?;
            }
            Ok(if all { 0 } else { 1 })
        }
    }
}

fn pair(v: &[usize], flag: &str) -> Result<(usize, usize), Failure> {
    match v {
        [k, n] => Ok((*k, *n)),
        _ => Err(Failure::Input(format!("--{flag} expects k,n"))),
    }
}

fn construct(ctx: &mut Ctx<'_>, a: ConstructArgs) -> Outcome {
    let m = if let Some(v) = a.uniform {
        let (k, n) = pair(&v.0, "uniform")?;
        Matroid::uniform(k, n)?
    } else if let Some(v) = a.minimal {
        let (k, n) = pair(&v.0, "minimal")?;
        Matroid::minimal(k, n)?
    } else if let Some(path) = a.graphic {
        let text = ctx.read_input(&path)?;
        graphic(&format::graph_from_json(&text)?)?
    } else if let Some(sizes) = a.rank2 {
        Matroid::rank2_from_partition(&sizes.0)?
    } else {
        unreachable!("clap enforces exactly one construction")
    };
    ctx.line(&format::matroid_to_json(&m))?;
    Ok(0)
}

fn tutte_cmd(ctx: &mut Ctx<'_>, file: &str, engine: Engine) -> Outcome {
    let m = ctx.read_matroid(file)?;
    let t = match engine {
        Engine::Subset => tutte_subset_sum(&m)?,
        Engine::Dc => ctx.engine().tutte(&m)?,
        Engine::Both => {
            let a = ctx.engine().tutte(&m)?;
            let b = tutte_subset_sum(&m)?;
            if a != b {
                return Err(Failure::Finding(format!(
                    "engine mismatch: deletion-contraction {a} vs subset sum {b}"
                )));
            }
            a
        }
    };
    ctx.line(&format::tutte_to_json(&t))?;
    Ok(0)
}

fn check_mw(ctx: &mut Ctx<'_>, file: &str) -> Outcome {
    let m = ctx.read_matroid(file)?;
    let r = match mw::check_mw_with(&mut ctx.engine(), &m) {
        Ok(r) => r,
        Err(e @ (MwError::LoopsPresent(_) | MwError::ColoopsPresent(_))) => {
            return Err(Failure::Input(format!("{e:?}: {e}")))
        }
        Err(e) => return Err(e.into()),
    };
    ctx.line(&format::mw_to_json(&r))?;
    Ok(if r.is_counterexample() { 1 } else { 0 })
}

fn enumerate_rank2(ctx: &mut Ctx<'_>, max_n: usize) -> Outcome {
    if max_n > 20 {
        return Err(Failure::Input(format!("--max-n {max_n} exceeds 20")));
    }
    let mut all = true;
    for n in 2..=max_n {
        let census = rank2_census(n)?;
        for (p, r) in census.class_size_multisets.iter().zip(&census.reports) {
            let mut v = format::mw_value(r);
            v["partition"] = json!(p);
            ctx.line(&v.to_string())?;
        }
        ctx.line(&format::census_summary_json(&census))?;
        ctx.out.flush()?;
        all &= census.all_pass;
    }
    Ok(if all { 0 } else { 1 })
}

fn trace_cmd(ctx: &mut Ctx<'_>, file: &str, dot: bool) -> Outcome {
    let m = ctx.read_matroid(file)?;
    let options = TraceOptions {
        tutte: ctx.tutte.clone(),
        ..TraceOptions::default()
    };
    let t = match Tracer::new(options).trace(&m) {
        Ok(t) => t,
        Err(e @ TraceError::ClassificationFailure(_)) => {
            return Err(Failure::Finding(format!(
                "classification failure: {e}\n{}",
                match &e {
                    TraceError::ClassificationFailure(m) => format::matroid_to_json(m),
                    _ => unreachable!(),
                }
            )))
        }
        Err(e) => return Err(e.into()),
    };
    if dot {
        write!(ctx.out, "{}", to_dot(&t))?;
    } else {
        ctx.line(&format::trace_to_json(&t))?;
    }
    Ok(if t.verified { 0 } else { 1 })
}

fn oracle(ctx: &mut Ctx<'_>, file: &str) -> Outcome {
    let g = format::graph_from_json(&ctx.read_input(file)?)?;
    let tau = graph::count_spanning_trees(&g)?;
    let alpha = graph::count_acyclic_orientations(&g)?;
    let alpha_star = graph::count_totally_cyclic_orientations(&g)?;
    let t = ctx.engine().tutte(&graphic(&g)?)?;
    let (t11, t20, t02) = (t.evaluate_unsigned(1, 1), t.evaluate_unsigned(2, 0), t.evaluate_unsigned(0, 2));
    let agree = t11 == tau.into() && t20 == alpha.into() && t02 == alpha_star.into();
    ctx.line(
        &json!({
            "format": format::ORACLE_FORMAT,
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "tau": tau.to_string(),
            "alpha": alpha.to_string(),
            "alpha_star": alpha_star.to_string(),
            "t11": t11.to_string(),
            "t20": t20.to_string(),
            "t02": t02.to_string(),
            "agree": agree,
        })
        .to_string(),
    )?;
    Ok(if agree { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("splitmw").chain(args.iter().copied());
        let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn construct_then_check() {
        let (code, m, _) = call(&["construct", "--minimal", "4,7"], "");
        assert_eq!(code, 0);
        let (code, out, _) = call(&["check-mw", "-"], &m);
        assert_eq!(code, 0);
        let r = format::mw_from_json(out.trim()).unwrap();
        assert!(r.mult_ok);
    }

    #[test]
    fn coloop_input_is_a_usage_error() {
        let (_, m, _) = call(&["construct", "--uniform", "1,1"], "");
        let (code, _, err) = call(&["check-mw", "-"], &m);
        assert_eq!(code, 2);
        assert!(err.contains("ColoopsPresent"), "{err}");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(call(&["construct"], "").0, 2);
        assert_eq!(call(&["construct", "--uniform", "1,2", "--minimal", "1,2"], "").0, 2);
        assert_eq!(call(&["construct", "--uniform", "1"], "").0, 2);
        assert_eq!(call(&["construct", "--uniform", "3,2"], "").0, 2);
        assert_eq!(call(&["tutte", "-"], "{not json").0, 2);
        assert_eq!(call(&["frobnicate"], "").0, 2);
        assert_eq!(call(&["--help"], "").0, 0);
    }

    #[test]
    fn engines_and_threads() {
        let (_, m, _) = call(&["construct", "--uniform", "2,5"], "");
        let (code, both, _) = call(&["--threads", "2", "tutte", "-", "--engine", "both"], &m);
        assert_eq!(code, 0);
        let (_, dc, _) = call(&["--memo-cap", "1024", "tutte", "-"], &m);
        assert_eq!(both, dc);
    }

    #[test]
    fn trace_outputs() {
        let (_, m, _) = call(&["construct", "--minimal", "4,7"], "");
        let (code, out, _) = call(&["trace", "-"], &m);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["rule"], "BaseMinimal(4,7)");
        assert_eq!(v["verified"], true);
        let (code, dot, _) = call(&["trace", "--dot", "-"], &m);
        assert_eq!(code, 0);
        assert!(dot.starts_with("digraph"));
        let (_, u, _) = call(&["construct", "--uniform", "1,1"], "");
        assert_eq!(call(&["trace", "-"], &u).0, 2);
    }
}
