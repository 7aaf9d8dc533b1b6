//! Subcommand dispatch. JSON goes to stdout; diagnostics go to stderr.
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use coxjsj_core::jsj::{self, decompose, decompose_fast, jsj_orbit_with_budget};
use coxjsj_core::separators::{
    complete_relative_minimal_separators, relative_minimal_separators, Separation,
};
use coxjsj_core::twist::{apply_twist, twist_orbit, ElementaryTwist, DEFAULT_TWIST_BUDGET};
use coxjsj_core::{chordal, CoxeterSystem, GeneratorId, GeneratorSubset};
use serde_json::{json, Value};

use crate::random::{LabelWeights, DEFAULT_EDGE_PROB};
use crate::{dot, format, random, verify};

#[derive(Parser)]
#[command(
    name = "coxjsj",
    version,
    about = "Decompositions and twists of Coxeter presentation diagrams"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the decomposition tree of a system
    Decompose {
        file: PathBuf,
        /// Use the clique-separator algorithm instead of the definition
        #[arg(long)]
        fast: bool,
        /// Print every tree reachable by slide moves
        #[arg(long, conflicts_with = "dot")]
        orbit: bool,
        /// Emit DOT instead of JSON
        #[arg(long)]
        dot: bool,
        /// Orbit node budget (flag beats COXJSJ_BUDGET beats the default)
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Print the relative minimal separators and the complete ones
    Separators { file: PathBuf },
    /// Decide chordality; print a chordless cycle when not
    Chordal { file: PathBuf },
    /// Elementary twists
    Twist {
        #[command(subcommand)]
        cmd: TwistCmd,
    },
    /// Run every applicable oracle comparison on a system
    Verify {
        file: PathBuf,
        /// Rank bound for the exhaustive comparisons
        #[arg(long, default_value_t = verify::DEFAULT_RANK_BOUND)]
        bound: usize,
    },
    /// Print a reproducible random system
    Random {
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = DEFAULT_EDGE_PROB)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Five comma-separated weights for labels 2,3,4,5,inf
        #[arg(long)]
        weights: Option<String>,
        /// Emit the JSON mirror instead of .cox text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum TwistCmd {
    /// Twist across a separation by the longest element of its cut
    Apply(ApplyArgs),
    /// Print the closure of a system under elementary twists
    Orbit {
        file: PathBuf,
        /// Orbit diagram budget (flag beats COXJSJ_BUDGET beats the default)
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Args)]
struct ApplyArgs {
    file: PathBuf,
    /// Comma-separated generators of the side that stays put
    #[arg(long)]
    s1: String,
    /// Comma-separated generators of the cut
    #[arg(long)]
    s0: String,
    /// Emit the twisted diagram as DOT instead of JSON
    #[arg(long)]
    dot: bool,
}

/// Anything that should reach stderr and exit 2.
struct Failure(String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<coxjsj_core::Error> for Failure {
    fn from(e: coxjsj_core::Error) -> Failure {
        Failure(e.to_string())
    }
}

impl From<format::ParseError> for Failure {
    fn from(e: format::ParseError) -> Failure {
        Failure(e.to_string())
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}

fn load(path: &Path) -> Result<CoxeterSystem, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {}", path.display(), e)))?;
    let json = path.extension().is_some_and(|e| e == "json");
    format::parse_auto(&text, json).map_err(|e| Failure(format!("{}: {}", path.display(), e)))
}

fn resolve_budget(flag: Option<usize>, default: usize) -> Result<usize, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("COXJSJ_BUDGET") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure(format!("COXJSJ_BUDGET is not a count: {:?}", v))),
        Err(_) => Ok(default),
    }
}

fn names(subset: &GeneratorSubset) -> Vec<Value> {
    subset.iter().map(|g| json!(g.as_str())).collect()
}

fn tree_value(gog: &jsj::GraphOfGroups) -> Value {
    let vertices: Vec<Value> = gog
        .vertex_labels()
        .iter()
        .map(|l| json!(names(l)))
        .collect();
    let edges: Vec<Value> = gog
        .edges()
        .iter()
        .map(|(i, j, l)| json!([i, j, names(l)]))
        .collect();
    json!({ "vertices": vertices, "edges": edges })
}

/// Write to stdout, treating a reader that hung up as a normal end of output.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {}", e);
        std::process::exit(2);
    }
}

fn print_value(value: &Value) {
    let mut text = serde_json::to_string_pretty(value).expect("value serializes");
    text.push('\n');
    emit(&text);
}

fn parse_subset(sys: &CoxeterSystem, list: &str) -> Result<GeneratorSubset, Failure> {
    let mut out = Vec::new();
    for name in list.split(',').filter(|s| !s.is_empty()) {
        let g = GeneratorId::new(name)?;
        if !sys.contains(&g) {
            return Err(Failure(format!("unknown generator {}", g)));
        }
        out.push(g);
    }
    Ok(GeneratorSubset::new(out))
}

fn parse_weights(text: &str) -> Result<LabelWeights, Failure> {
    let parts: Vec<u32> = text
        .split(',')
        .map(|p| p.trim().parse())
        .collect::<Result<_, _>>()
        .map_err(|_| {
            Failure(format!(
                "weights are five comma-separated counts: {:?}",
                text
            ))
        })?;
    let [w2, w3, w4, w5, winf] = parts.as_slice() else {
        return Err(Failure(format!(
            "expected five weights, got {}",
            parts.len()
        )));
    };
    if w2 + w3 + w4 + w5 + winf == 0 {
        return Err(Failure("weights must not all be zero".into()));
    }
    Ok(LabelWeights {
        w2: *w2,
        w3: *w3,
        w4: *w4,
        w5: *w5,
        winf: *winf,
    })
}

fn dispatch(cmd: Cmd) -> Result<i32, Failure> {
    match cmd {
        Cmd::Decompose {
            file,
            fast,
            orbit,
            dot,
            budget,
        } => {
            let sys = load(&file)?;
            if orbit {
                let budget = resolve_budget(budget, jsj::DEFAULT_TREE_BUDGET)?;
                let trees = jsj_orbit_with_budget(&sys, budget)?;
                let values: Vec<Value> = trees.iter().map(tree_value).collect();
                print_value(&json!({ "count": values.len(), "trees": values }));
                return Ok(0);
            }
            let gog = if fast {
                decompose_fast(&sys)?
            } else {
                decompose(&sys)?
            };
            if dot {
                emit(&dot::tree_dot(&gog));
            } else {
                print_value(&tree_value(&gog));
            }
            Ok(0)
        }
        Cmd::Separators { file } => {
            let sys = load(&file)?;
            let all: Vec<Value> = relative_minimal_separators(&sys)
                .iter()
                .map(|s| json!(names(s)))
                .collect();
            let complete: Vec<Value> = complete_relative_minimal_separators(&sys)
                .iter()
                .map(|s| json!(names(s)))
                .collect();
            print_value(&json!({
                "complete_relative_minimal": complete,
                "relative_minimal": all,
            }));
            Ok(0)
        }
        Cmd::Chordal { file } => {
            let sys = load(&file)?;
            match chordal::chordless_cycle(&sys) {
                None => print_value(&json!({ "chordal": true })),
                Some(cycle) => {
                    let witness: Vec<Value> = cycle.iter().map(|g| json!(g.as_str())).collect();
                    print_value(&json!({ "chordal": false, "witness": witness }));
                }
            }
            Ok(0)
        }
        Cmd::Twist { cmd } => twist_dispatch(cmd),
        Cmd::Verify { file, bound } => {
            let sys = load(&file)?;
            let report = verify::verify_system(&sys, bound, verify::DEFAULT_ORDER_BOUND)?;
            print_value(&verify::report_value(&report));
            Ok(if report.overall() { 0 } else { 1 })
        }
        Cmd::Random {
            rank,
            edge_prob,
            seed,
            weights,
            json,
        } => {
            if rank < 1 {
                return Err(Failure("rank must be at least 1".into()));
            }
            if !(0.0..=1.0).contains(&edge_prob) {
                return Err(Failure("edge probability must lie in [0, 1]".into()));
            }
            let weights = match weights {
                Some(text) => parse_weights(&text)?,
                None => LabelWeights::default(),
            };
            let sys = random::random_system(rank, edge_prob, weights, seed);
            if json {
                emit(&format::serialize_json(&sys));
            } else {
                emit(&format::serialize_cox(&sys));
            }
            Ok(0)
        }
    }
}

fn twist_dispatch(cmd: TwistCmd) -> Result<i32, Failure> {
    match cmd {
        TwistCmd::Apply(args) => {
            let sys = load(&args.file)?;
            let s1 = parse_subset(&sys, &args.s1)?;
            let s0 = parse_subset(&sys, &args.s0)?;
            let s2 = sys.full_set().difference(&s1).union(&s0);
            let sep = Separation::new(&sys, s1, s0, s2)?;
            let tw = ElementaryTwist::by_longest_element(&sys, sep)?;
            let twisted = apply_twist(&sys, &tw)?;
            if args.dot {
                emit(&dot::system_dot(twisted.system()));
                return Ok(0);
            }
            let renames: Value = twisted
                .renames()
                .iter()
                .map(|(old, new)| (old.as_str().to_string(), json!(new.as_str())))
                .collect::<serde_json::Map<_, _>>()
                .into();
            let sigma: Value = tw
                .sigma()
                .iter()
                .map(|(s, t)| (s.as_str().to_string(), json!(t.as_str())))
                .collect::<serde_json::Map<_, _>>()
                .into();
            print_value(&json!({
                "system": format::system_value(twisted.system()),
                "renames": renames,
                "sigma": sigma,
            }));
            Ok(0)
        }
        TwistCmd::Orbit { file, budget } => {
            let sys = load(&file)?;
            let budget = resolve_budget(budget, DEFAULT_TWIST_BUDGET)?;
            let orbit = twist_orbit(&sys, budget)?;
            let report = verify::orbit_invariants(&sys, &orbit)?;
            let members: Vec<Value> = orbit.members.iter().map(format::system_value).collect();
            print_value(&json!({
                "members": members,
                "truncated": orbit.truncated,
                "invariants": verify::report_value(&report),
            }));
            Ok(if report.overall() { 0 } else { 1 })
        }
    }
}
