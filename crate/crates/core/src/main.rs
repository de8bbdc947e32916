//! Command-line interface: exact solvers, brute-force oracles, instance
//! generators, verification suites and a small benchmark harness.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use floodgraph::error::Error;
use floodgraph::generate::{self, ColourChoice, Subdivisions};
use floodgraph::oracle::{self, OracleBudget};
use floodgraph::record::ResultRecord;
use floodgraph::verify::{self, VerifyOptions};
use floodgraph::{
    instance, solve_fixed, solve_free, solve_linking_with_limit, ColouredGraph, Target, VertexSet,
    DEFAULT_K_LIMIT,
};

const BUDGET_ENV: &str = "FLOOD_ORACLE_BUDGET";

#[derive(Parser)]
#[command(name = "floodgraph", version, about = "Exact solvers for flood-filling games on coloured graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance exactly with the dynamic-programming solvers.
    Solve {
        #[command(subcommand)]
        variant: SolveVariant,
    },
    /// Solve an instance with the brute-force reference oracles.
    Oracle {
        #[command(subcommand)]
        variant: OracleVariant,
    },
    /// Generate an instance file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run a verification suite end to end.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Time a solver across an instance family.
    Bench {
        #[command(subcommand)]
        variant: BenchVariant,
    },
}

#[derive(Subcommand)]
enum SolveVariant {
    /// Free play: moves anywhere.
    Free {
        file: PathBuf,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        machine: bool,
    },
    /// All moves at a fixed root vertex.
    Fixed {
        file: PathBuf,
        #[arg(long)]
        root: usize,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        machine: bool,
    },
    /// Link a terminal set into one monochromatic component.
    Link {
        file: PathBuf,
        /// Comma-separated vertex ids.
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_K_LIMIT)]
        k_limit: usize,
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Subcommand)]
enum OracleVariant {
    Free {
        file: PathBuf,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        machine: bool,
        /// Visited-state cap (overrides FLOOD_ORACLE_BUDGET).
        #[arg(long)]
        budget: Option<usize>,
    },
    Fixed {
        file: PathBuf,
        #[arg(long)]
        root: usize,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        machine: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
    Link {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        terminals: Vec<usize>,
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        machine: bool,
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Args)]
struct ColourArgs {
    /// Number of colours for a uniform random colouring [default: 3, or
    /// inferred from --colour-list].
    #[arg(long)]
    colours: Option<usize>,
    /// Explicit comma-separated colour list, one id per vertex.
    #[arg(long, value_delimiter = ',')]
    colour_list: Option<Vec<usize>>,
}

impl ColourArgs {
    fn choice(&self) -> ColourChoice {
        match &self.colour_list {
            Some(list) => {
                let inferred = list.iter().max().map_or(1, |&m| m + 1);
                ColourChoice::Explicit {
                    colour_count: inferred.max(self.colours.unwrap_or(0)),
                    colours: list.clone(),
                }
            }
            None => ColourChoice::random(self.colours.unwrap_or(3)),
        }
    }
}

#[derive(Subcommand)]
enum GenKind {
    Path {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        colours: ColourArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Cycle {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        colours: ColourArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Complete {
        #[arg(long)]
        n: usize,
        /// Give every vertex its own colour.
        #[arg(long)]
        distinct: bool,
        #[command(flatten)]
        colours: ColourArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[command(flatten)]
        colours: ColourArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Subdivide every edge of a complete base graph.
    Subdivision {
        #[arg(long, default_value_t = 4)]
        base_n: usize,
        /// Comma-separated per-edge subdivision counts (base edge order).
        #[arg(long, value_delimiter = ',')]
        per_edge: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        min_sub: usize,
        #[arg(long, default_value_t = 3)]
        max_sub: usize,
        #[command(flatten)]
        colours: ColourArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Connected G(n, p).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        edge_prob: f64,
        #[command(flatten)]
        colours: ColourArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 3)]
    colours: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random sampled configurations on top of the exhaustive corpus.
    #[arg(long, default_value_t = 200)]
    samples: usize,
}

impl SuiteArgs {
    fn options(&self) -> VerifyOptions {
        VerifyOptions {
            max_n: self.max_n,
            colours: self.colours,
            seed: self.seed,
            samples: self.samples,
        }
    }
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Flood number equals the minimum over spanning trees.
    SpanningTree(SuiteArgs),
    /// Decomposition corollaries on random configurations.
    Corollaries(SuiteArgs),
    /// Free-play solver against the oracle.
    SolverFree(SuiteArgs),
    /// Fixed-root solver against the oracle, all roots.
    SolverFixed(SuiteArgs),
    /// Linking solver against the oracle.
    SolverLink(SuiteArgs),
}

#[derive(Subcommand)]
enum BenchVariant {
    Free {
        #[arg(long)]
        family: BenchFamily,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        colours: usize,
        #[arg(long)]
        machine: bool,
    },
    Fixed {
        #[arg(long)]
        family: BenchFamily,
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 4)]
        colours: usize,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum BenchFamily {
    Cycle,
    Grid,
    Subdivision,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> floodgraph::Result<()> {
    match cli.command {
        Command::Solve { variant } => run_solve(variant),
        Command::Oracle { variant } => run_oracle(variant),
        Command::Gen { kind } => run_gen(kind),
        Command::Verify { suite } => run_verify(suite),
        Command::Bench { variant } => run_bench(variant),
    }
}

fn load(file: &PathBuf) -> floodgraph::Result<ColouredGraph> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Error::invalid(format!("cannot read {}: {e}", file.display())))?;
    instance::parse_instance(&text)
}

fn target_of(colour: Option<usize>) -> Target {
    colour.map_or(Target::Any, Target::Colour)
}

fn budget_from(flag: Option<usize>) -> OracleBudget {
    let states = flag
        .or_else(|| std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(oracle::DEFAULT_MAX_STATES);
    OracleBudget::with_states(states)
}

fn emit(record: &ResultRecord, machine: bool, human: impl FnOnce()) {
    if machine {
        println!("{}", record.to_json_line());
    } else {
        human();
    }
}

fn run_solve(variant: SolveVariant) -> floodgraph::Result<()> {
    match variant {
        SolveVariant::Free { file, target, machine } => {
            let g = load(&file)?;
            let target = target_of(target);
            let started = Instant::now();
            let res = solve_free(&g)?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let overall = match target {
                Target::Any => res.overall,
                Target::Colour(d) => *res
                    .per_colour
                    .get(d)
                    .ok_or_else(|| Error::invalid(format!("target colour {d} out of range")))?,
            };
            let mut rec = ResultRecord::new(file.display().to_string(), "free", "solver", target);
            rec.per_colour = Some(res.per_colour.iter().map(|&v| Some(v)).collect());
            rec.overall = overall;
            rec.subgraph_count = Some(res.subgraph_count);
            rec.wall_ms = wall_ms;
            emit(&rec, machine, || {
                println!("instance: {}", file.display());
                println!("variant: free (solver), {} connected subgraphs", res.subgraph_count);
                for (d, v) in res.per_colour.iter().enumerate() {
                    println!("  colour {d}: {v} moves");
                }
                println!("overall: {overall} moves ({:.3} ms)", wall_ms);
            });
        }
        SolveVariant::Fixed { file, root, target, machine } => {
            let g = load(&file)?;
            let target = target_of(target);
            let started = Instant::now();
            let res = solve_fixed(&g, root)?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let overall = match target {
                Target::Any => res.overall,
                Target::Colour(d) => res
                    .per_colour
                    .get(d)
                    .copied()
                    .flatten()
                    .ok_or_else(|| Error::invalid(format!("target colour {d} out of range")))?,
            };
            let mut rec = ResultRecord::new(file.display().to_string(), "fixed", "solver", target);
            rec.root = Some(root);
            rec.per_colour = Some(res.per_colour.clone());
            rec.overall = overall;
            rec.witness_colours = Some(res.witness.clone());
            rec.state_count = Some(res.state_count);
            rec.wall_ms = wall_ms;
            emit(&rec, machine, || {
                println!("instance: {}", file.display());
                println!("variant: fixed at root {root} (solver), {} states", res.state_count);
                for (d, v) in res.per_colour.iter().enumerate() {
                    match v {
                        Some(v) => println!("  colour {d}: {v} moves"),
                        None => println!("  colour {d}: unreachable"),
                    }
                }
                let witness: Vec<String> = res.witness.iter().map(|d| d.to_string()).collect();
                println!("overall: {overall} moves, play [{}] ({:.3} ms)", witness.join(", "), wall_ms);
            });
        }
        SolveVariant::Link { file, terminals, target, k_limit, machine } => {
            let g = load(&file)?;
            let target = target_of(target);
            let set: VertexSet = terminals.iter().copied().collect();
            let started = Instant::now();
            let moves = solve_linking_with_limit(&g, &set, target, k_limit)?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let mut rec = ResultRecord::new(file.display().to_string(), "link", "solver", target);
            rec.terminals = Some(terminals.clone());
            rec.overall = moves;
            rec.wall_ms = wall_ms;
            emit(&rec, machine, || {
                println!("instance: {}", file.display());
                let ts: Vec<String> = terminals.iter().map(|t| t.to_string()).collect();
                println!("variant: link {{{}}} (solver)", ts.join(", "));
                println!("overall: {moves} moves ({:.3} ms)", wall_ms);
            });
        }
    }
    Ok(())
}

fn run_oracle(variant: OracleVariant) -> floodgraph::Result<()> {
    match variant {
        OracleVariant::Free { file, target, machine, budget } => {
            let g = load(&file)?;
            let target = target_of(target);
            let started = Instant::now();
            let out = oracle::oracle_free_with(&g, target, &budget_from(budget))?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let mut rec = ResultRecord::new(file.display().to_string(), "free", "oracle", target);
            rec.overall = out.moves;
            rec.witness_moves = Some(ResultRecord::moves_field(&out.witness));
            rec.wall_ms = wall_ms;
            emit(&rec, machine, || {
                println!("instance: {}", file.display());
                println!("variant: free (oracle)");
                let moves: Vec<String> = out
                    .witness
                    .iter()
                    .map(|m| format!("({},{})", m.vertex, m.colour))
                    .collect();
                println!("overall: {} moves, play [{}] ({:.3} ms)", out.moves, moves.join(", "), wall_ms);
            });
        }
        OracleVariant::Fixed { file, root, target, machine, budget } => {
            let g = load(&file)?;
            let target = target_of(target);
            let started = Instant::now();
            let out = oracle::oracle_fixed_with(&g, root, target, &budget_from(budget))?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let mut rec = ResultRecord::new(file.display().to_string(), "fixed", "oracle", target);
            rec.root = Some(root);
            rec.overall = out.moves;
            rec.witness_colours = Some(out.witness.clone());
            rec.wall_ms = wall_ms;
            emit(&rec, machine, || {
                println!("instance: {}", file.display());
                println!("variant: fixed at root {root} (oracle)");
                let witness: Vec<String> = out.witness.iter().map(|d| d.to_string()).collect();
                println!("overall: {} moves, play [{}] ({:.3} ms)", out.moves, witness.join(", "), wall_ms);
            });
        }
        OracleVariant::Link { file, terminals, target, machine, budget } => {
            let g = load(&file)?;
            let target = target_of(target);
            let set: VertexSet = terminals.iter().copied().collect();
            let started = Instant::now();
            let moves = oracle::oracle_link_with(&g, &set, target, &budget_from(budget))?;
            let wall_ms = started.elapsed().as_secs_f64() * 1e3;
            let mut rec = ResultRecord::new(file.display().to_string(), "link", "oracle", target);
            rec.terminals = Some(terminals.clone());
            rec.overall = moves;
            rec.wall_ms = wall_ms;
            emit(&rec, machine, || {
                println!("instance: {}", file.display());
                let ts: Vec<String> = terminals.iter().map(|t| t.to_string()).collect();
                println!("variant: link {{{}}} (oracle)", ts.join(", "));
                println!("overall: {moves} moves ({:.3} ms)", wall_ms);
            });
        }
    }
    Ok(())
}

fn run_gen(kind: GenKind) -> floodgraph::Result<()> {
    let (g, output) = match kind {
        GenKind::Path { n, colours, seed, output } => (generate::path(n, colours.choice(), seed)?, output),
        GenKind::Cycle { n, colours, seed, output } => (generate::cycle(n, colours.choice(), seed)?, output),
        GenKind::Complete { n, distinct, colours, seed, output } => {
            let choice = if distinct {
                ColourChoice::explicit((0..n).collect())
            } else {
                colours.choice()
            };
            (generate::complete(n, choice, seed)?, output)
        }
        GenKind::Grid { rows, cols, colours, seed, output } => {
            (generate::grid(rows, cols, colours.choice(), seed)?, output)
        }
        GenKind::Subdivision { base_n, per_edge, min_sub, max_sub, colours, seed, output } => {
            let counts = match per_edge {
                Some(list) => Subdivisions::Explicit(list),
                None => Subdivisions::Random { min: min_sub, max: max_sub },
            };
            (generate::subdivision(base_n, counts, colours.choice(), seed)?, output)
        }
        GenKind::Random { n, edge_prob, colours, seed, output } => {
            (generate::random_connected(n, edge_prob, colours.choice(), seed)?, output)
        }
    };
    let text = instance::write_instance(&g);
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| Error::invalid(format!("cannot write {}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run_verify(suite: VerifySuite) -> floodgraph::Result<()> {
    let (report, args) = match &suite {
        VerifySuite::SpanningTree(a) => (verify::spanning_tree_suite(&a.options())?, a),
        VerifySuite::Corollaries(a) => (verify::corollary_suite(&a.options())?, a),
        VerifySuite::SolverFree(a) => (verify::solver_free_suite(&a.options())?, a),
        VerifySuite::SolverFixed(a) => (verify::solver_fixed_suite(&a.options())?, a),
        VerifySuite::SolverLink(a) => (verify::solver_link_suite(&a.options())?, a),
    };
    println!(
        "suite {} (max-n {}, colours {}, seed {}, samples {}): {} checks",
        report.suite, args.max_n, args.colours, args.seed, args.samples, report.checks
    );
    if report.is_ok() {
        println!("all checks passed");
        Ok(())
    } else {
        for failure in report.failures.iter().take(20) {
            eprintln!("FAIL {failure}");
        }
        Err(Error::invalid(format!("{} check(s) failed", report.failures.len())))
    }
}

fn bench_instance(family: BenchFamily, size: usize, colours: usize, seed: u64) -> floodgraph::Result<(String, ColouredGraph)> {
    let choice = ColourChoice::random(colours);
    match family {
        BenchFamily::Cycle => Ok((
            format!("gen:cycle:n={size}:c={colours}:seed={seed}"),
            generate::cycle(size, choice, seed)?,
        )),
        BenchFamily::Grid => Ok((
            format!("gen:grid:{size}x{size}:c={colours}:seed={seed}"),
            generate::grid(size, size, choice, seed)?,
        )),
        BenchFamily::Subdivision => Ok((
            format!("gen:subdivision:base=4:sub={size}:c={colours}:seed={seed}"),
            generate::subdivision(4, Subdivisions::Explicit(vec![size; 6]), choice, seed)?,
        )),
    }
}

fn run_bench(variant: BenchVariant) -> floodgraph::Result<()> {
    match variant {
        BenchVariant::Free { family, sizes, seed, colours, machine } => {
            if !machine {
                println!("{:<40} {:>6} {:>12} {:>10}", "instance", "n", "subgraphs", "wall_ms");
            }
            for size in sizes {
                let (name, g) = bench_instance(family, size, colours, seed)?;
                let started = Instant::now();
                let res = solve_free(&g)?;
                let wall_ms = started.elapsed().as_secs_f64() * 1e3;
                if machine {
                    let mut rec = ResultRecord::new(name, "free", "solver", Target::Any);
                    rec.per_colour = Some(res.per_colour.iter().map(|&v| Some(v)).collect());
                    rec.overall = res.overall;
                    rec.subgraph_count = Some(res.subgraph_count);
                    rec.wall_ms = wall_ms;
                    println!("{}", rec.to_json_line());
                } else {
                    println!(
                        "{:<40} {:>6} {:>12} {:>10.3}",
                        name,
                        g.vertex_count(),
                        res.subgraph_count,
                        wall_ms
                    );
                }
            }
        }
        BenchVariant::Fixed { family, sizes, seed, colours, root, machine } => {
            if !machine {
                println!("{:<40} {:>6} {:>12} {:>10}", "instance", "n", "states", "wall_ms");
            }
            for size in sizes {
                let (name, g) = bench_instance(family, size, colours, seed)?;
                let started = Instant::now();
                let res = solve_fixed(&g, root)?;
                let wall_ms = started.elapsed().as_secs_f64() * 1e3;
                if machine {
                    let mut rec = ResultRecord::new(name, "fixed", "solver", Target::Any);
                    rec.root = Some(root);
                    rec.per_colour = Some(res.per_colour.clone());
                    rec.overall = res.overall;
                    rec.state_count = Some(res.state_count);
                    rec.wall_ms = wall_ms;
                    println!("{}", rec.to_json_line());
                } else {
                    println!(
                        "{:<40} {:>6} {:>12} {:>10.3}",
                        name,
                        g.vertex_count(),
                        res.state_count,
                        wall_ms
                    );
                }
            }
        }
    }
    Ok(())
}
