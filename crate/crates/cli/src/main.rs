//! `covalg`: vertex cover algebras and symbolic powers from the command line.
//!
//! Exit codes: 0 success, 1 usage error, 2 invalid input, 3 degree cap,
//! truncation or search budget hit, 4 a `repro` check failed.

mod input;
mod output;
mod repro;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use covalg::algebra::{self, compare_powers, is_gorenstein, DegreeBound, FsDeterminantBound, PowerComparison};
use covalg::complex::{squarefree_symbolic_power, skeleton_generators, ComplexFile, CoverPoint};
use covalg::graphalg::{self, bipartition, Bipartition, Decomposition, DEFAULT_BUDGET};
use covalg::{WeightedComplex, WeightedGraph};
use serde_json::json;

use output::{one_based, print_json};

/// Environment variable holding the default `decompose` budget.
const BUDGET_ENV: &str = "COVALG_BUDGET";

#[derive(Parser, Debug)]
#[command(name = "covalg", version, about = "Vertex cover algebras of weighted simplicial complexes")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Worker threads for the Hilbert basis computation (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Source {
    /// Complex file (JSON); `-` reads standard input.
    #[arg(required_unless_present = "family", conflicts_with = "family")]
    file: Option<PathBuf>,

    /// Use the family instance with parameters M and K instead of a file.
    #[arg(long, num_args = 2, value_names = ["M", "K"])]
    family: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal generators of positive degree.
    Basis {
        #[command(flatten)]
        source: Source,
        /// Drop generators above this degree and exit with code 3.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Symbolic power of an ideal: squarefree by default, `I^k : J^∞` with `--wrt`.
    Symbolic {
        ideal: PathBuf,
        #[arg(short = 'n', value_name = "K")]
        k: u64,
        /// Saturate with respect to this ideal.
        #[arg(long, value_name = "FILE")]
        wrt: Option<PathBuf>,
    },
    /// Ordinary power of an ideal.
    Power {
        ideal: PathBuf,
        #[arg(short = 'n', value_name = "K")]
        k: u64,
    },
    /// Compare `I^k` with `I^(k)` for a squarefree ideal.
    Compare {
        ideal: PathBuf,
        #[arg(short = 'n', value_name = "K")]
        k: u64,
    },
    /// Structural checks on a complex.
    Check {
        file: PathBuf,
        #[arg(value_enum)]
        what: CheckKind,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Search for a splitting of a cover into two covers of smaller order.
    Decompose {
        #[command(flatten)]
        source: Source,
        /// Cover as "a1,...,an;k"; defaults to the distinguished cover with `--family`.
        #[arg(long)]
        cover: Option<String>,
        /// Maximal search space; defaults to $COVALG_BUDGET or 10^8.
        #[arg(long)]
        budget: Option<u128>,
    },
    /// Split a cover of a graph: order-1 chain when bipartite, else off an order-2 cover.
    Split {
        file: PathBuf,
        #[arg(long)]
        cover: String,
    },
    /// Closed-form generators for the j-skeleton of the simplex on n vertices.
    Skeleton { n: usize, j: usize },
    /// Print the family instance with parameters m and k.
    Family { m: usize, k: usize },
    /// Degree and determinant bounds for n vertices.
    Bound { n: usize },
    /// Re-run the worked examples and print a pass/fail table.
    Repro,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CheckKind {
    Bipartite,
    Standard,
    Gorenstein,
    Bound,
}

#[derive(Debug)]
pub enum Failure {
    Input(String),
    Limit(String),
    Repro(usize),
}

impl From<covalg::Error> for Failure {
    fn from(e: covalg::Error) -> Self {
        match e {
            covalg::Error::BudgetExceeded { .. } | covalg::Error::Truncated { .. } => {
                Failure::Limit(e.to_string())
            }
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("covalg: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("covalg: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Limit(msg)) => {
            eprintln!("covalg: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Repro(n)) => {
            eprintln!("covalg: {n} check(s) failed");
            ExitCode::from(4)
        }
    }
}

fn load(source: &Source) -> Result<(WeightedComplex, Option<CoverPoint>), Failure> {
    match (&source.file, &source.family) {
        (_, Some(mk)) => {
            let f = graphalg::counterexample_family(mk[0], mk[1])?;
            Ok((f.complex, Some(f.cover)))
        }
        (Some(path), None) => Ok((input::complex(path)?, None)),
        (None, None) => unreachable!("clap requires a file or --family"),
    }
}

fn budget(flag: Option<u128>) -> Result<u128, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{BUDGET_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Basis { source, cap } => {
            let (c, _) = load(source)?;
            let p = algebra::generators(&c, *cap)?;
            if cli.json {
                print_json(&output::basis_json(&p));
            } else {
                output::print_points(p.generators());
            }
            if p.truncated() {
                return Err(Failure::Limit(format!(
                    "generators above degree {} were dropped",
                    cap.unwrap_or_else(|| algebra::default_cap(c.n()))
                )));
            }
        }
        Command::Symbolic { ideal, k, wrt } => {
            let i = input::ideal(ideal)?;
            let result = match wrt {
                Some(j) => i.symbolic_power_wrt(&input::ideal(j)?, *k)?,
                None => squarefree_symbolic_power(&i, *k).map_err(|e| match e {
                    covalg::Error::NotSquarefree(g) => Failure::Input(format!(
                        "generator {g} is not squarefree; pass --wrt J to compute I^k : J^inf instead"
                    )),
                    e => e.into(),
                })?,
            };
            emit_ideal(cli, &result);
        }
        Command::Power { ideal, k } => {
            let i = input::ideal(ideal)?;
            emit_ideal(cli, &i.power(*k)?);
        }
        Command::Compare { ideal, k } => {
            let i = input::ideal(ideal)?;
            match compare_powers(&i, *k)? {
                PowerComparison::Equal => {
                    if cli.json {
                        print_json(&json!({"k": k, "equal": true}));
                    } else {
                        println!("equal");
                    }
                }
                PowerComparison::Proper { witness } => {
                    if cli.json {
                        print_json(&json!({"k": k, "equal": false, "witness": witness}));
                    } else {
                        println!("proper");
                        println!("witness: {witness}");
                    }
                }
            }
        }
        Command::Check { file, what, cap } => check(cli, &input::complex(file)?, *what, *cap)?,
        Command::Decompose {
            source,
            cover,
            budget: flag,
        } => {
            let (c, distinguished) = load(source)?;
            let target = match (cover, distinguished) {
                (Some(s), _) => input::cover(s, c.n())?,
                (None, Some(d)) => d,
                (None, None) => return Err(Failure::Input("--cover is required with a complex file".into())),
            };
            let budget = budget(*flag)?;
            let result = graphalg::decompose(&c, &target.a, target.k, budget)?;
            match result {
                Decomposition::Indecomposable => {
                    if cli.json {
                        print_json(&json!({
                            "cover": target,
                            "n": c.n(),
                            "indecomposable": true,
                            "budget": budget.to_string(),
                        }));
                    } else {
                        println!("{target}: indecomposable (exhaustive, budget={budget})");
                    }
                }
                Decomposition::Split { b, c: rest } => {
                    if cli.json {
                        print_json(&json!({
                            "cover": target,
                            "n": c.n(),
                            "indecomposable": false,
                            "b": b,
                            "c": rest,
                            "budget": budget.to_string(),
                        }));
                    } else {
                        println!("{target} = {b} + {rest}");
                    }
                }
            }
        }
        Command::Split { file, cover } => {
            let c = input::complex(file)?;
            let g = WeightedGraph::from_complex(&c)?;
            let target = input::cover(cover, c.n())?;
            let (method, parts) = match bipartition(&g) {
                Bipartition::Parts { .. } => ("bipartite", graphalg::bipartite_chain(&g, &target.a, target.k)?),
                Bipartition::OddCycle(_) => {
                    let (e, rest) = graphalg::split_order2(&g, &target.a, target.k)?;
                    ("order2", vec![e, rest])
                }
            };
            if cli.json {
                print_json(&json!({"cover": target, "method": method, "parts": parts}));
            } else {
                output::print_points(&parts);
            }
        }
        Command::Skeleton { n, j } => {
            let p = skeleton_generators(*n, *j)?;
            if cli.json {
                print_json(&json!({"n": n, "j": j, "basis": output::points_json(p.generators())}));
            } else {
                output::print_points(p.generators());
            }
        }
        Command::Family { m, k } => {
            let f = graphalg::counterexample_family(*m, *k)?;
            let file = ComplexFile::from(&f.complex);
            if cli.json {
                let edges: Vec<[usize; 2]> = f.graph.edges().iter().map(|&(i, j)| [i + 1, j + 1]).collect();
                print_json(&json!({
                    "m": m,
                    "k": k,
                    "complex": file,
                    "graph_edges": edges,
                    "cover": f.cover,
                }));
            } else {
                println!("{}", serde_json::to_string(&file).expect("complex files serialize"));
            }
        }
        Command::Bound { n } => {
            if *n == 0 {
                return Err(Failure::Input("n must be positive".into()));
            }
            let d = DegreeBound::new(*n).max_allowed();
            let v = FsDeterminantBound::new(*n).max_allowed();
            if cli.json {
                print_json(&json!({"n": n, "max_degree": d, "max_binary_det": v.to_string()}));
            } else {
                println!("generator degree <= {d}");
                println!("|det| of a 0/1 matrix <= {v}");
            }
        }
        Command::Repro => {
            let failed = repro::run(cli.json);
            if failed > 0 {
                return Err(Failure::Repro(failed));
            }
        }
    }
    Ok(())
}

fn emit_ideal(cli: &Cli, i: &covalg::MonomialIdeal) {
    if cli.json {
        print_json(&output::ideal_json(i));
    } else {
        output::print_ideal(i);
    }
}

fn check(cli: &Cli, c: &WeightedComplex, what: CheckKind, cap: Option<u64>) -> Result<(), Failure> {
    match what {
        CheckKind::Bipartite => {
            let g = WeightedGraph::from_complex(c)?;
            match bipartition(&g) {
                Bipartition::Parts { u, v } => {
                    if cli.json {
                        print_json(&json!({"bipartite": true, "u": one_based(&u), "v": one_based(&v)}));
                    } else {
                        println!("bipartite: true");
                        println!("u: {:?}", one_based(&u));
                        println!("v: {:?}", one_based(&v));
                    }
                }
                Bipartition::OddCycle(cycle) => {
                    if cli.json {
                        print_json(&json!({"bipartite": false, "odd_cycle": one_based(&cycle)}));
                    } else {
                        println!("bipartite: false");
                        println!("odd cycle: {:?}", one_based(&cycle));
                    }
                }
            }
        }
        CheckKind::Standard => {
            let p = algebra::generators(c, cap)?;
            let d = p.max_degree()?;
            let witness = p.nonstandard_witness().cloned();
            let odd_cycle = if c.is_graph() {
                match bipartition(&WeightedGraph::from_complex(c)?) {
                    Bipartition::OddCycle(cycle) => Some(one_based(&cycle)),
                    Bipartition::Parts { .. } => None,
                }
            } else {
                None
            };
            if cli.json {
                print_json(&json!({
                    "standard_graded": d <= 1,
                    "max_degree": d,
                    "witness": witness,
                    "odd_cycle": odd_cycle,
                }));
            } else {
                println!("standard graded: {}", d <= 1);
                if let Some(w) = witness {
                    println!("witness: {w}");
                }
                if let Some(cycle) = odd_cycle {
                    println!("odd cycle: {cycle:?}");
                }
            }
        }
        CheckKind::Gorenstein => {
            let v = is_gorenstein(c)?;
            let stripped: Vec<_> = v
                .stripped
                .iter()
                .map(|&(i, w)| json!({"vertex": i + 1, "weight": w}))
                .collect();
            let offending: Vec<Vec<usize>> = v.offending.iter().map(|f| one_based(f)).collect();
            if cli.json {
                print_json(&json!({
                    "gorenstein": v.gorenstein,
                    "stripped": stripped,
                    "offending": offending,
                }));
            } else {
                println!("gorenstein: {}", v.gorenstein);
                for &(i, w) in &v.stripped {
                    println!("stripped: {{{}}} weight {w}", i + 1);
                }
                for f in offending {
                    println!("offending facet: {f:?}");
                }
            }
        }
        CheckKind::Bound => {
            let p = algebra::generators(c, cap)?;
            let d = p.max_degree()?;
            let bound = DegreeBound::new(c.n().max(1));
            if cli.json {
                print_json(&json!({
                    "n": c.n(),
                    "max_degree": d,
                    "max_allowed": bound.max_allowed(),
                    "holds": bound.holds(d),
                }));
            } else {
                println!("max degree: {d}");
                println!("allowed: <= {}", bound.max_allowed());
                println!("holds: {}", bound.holds(d));
            }
        }
    }
    Ok(())
}
