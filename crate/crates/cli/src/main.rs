use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use glw_core::eval::eval_by_game;
use glw_core::exec::Execution;
use glw_core::glg::{check_glg, compile_formula, compile_game, equiv, extract_formula, extract_game, EquivOptions, Side};
use glw_core::graph::{accepts, export_dot, read_graph, read_graph_unchecked, validate_graph, write_graph, SyntaxGraph};
use glw_core::nbhd::{eval_standard, random_model, read_model, write_model, GameModel, DEFAULT_DENSITY};
use glw_core::parity::{read_arena, solve, verify_strategy, Player};
use glw_core::syntax::{parse_formula, parse_game, to_dnnf, to_dnnf_game, Formula, Term};

#[derive(Parser)]
#[command(name = "glw", version, about = "Game logic workbench")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, env = "GLW_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TermArg {
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    game: Option<String>,
}

impl TermArg {
    fn parse(&self) -> Result<Term> {
        Ok(match (&self.formula, &self.game) {
            (Some(f), _) => Term::Formula(parse_formula(f)?),
            (_, Some(g)) => Term::Game(parse_game(g)?),
            _ => unreachable!("clap requires one"),
        })
    }
}

#[derive(Args)]
struct Sampling {
    /// Largest sampled model.
    #[arg(long, default_value_t = 4)]
    states: usize,
    #[arg(long, default_value_t = 100)]
    samples: usize,
    /// Worker threads; sequential when absent.
    #[arg(long)]
    jobs: Option<usize>,
}

impl Sampling {
    fn options(&self, seed: u64) -> EquivOptions {
        let execution = match self.jobs {
            Some(n) if n > 1 => Execution::Parallel,
            _ => Execution::Sequential,
        };
        EquivOptions { n_states: self.states, samples: self.samples, seed, density: DEFAULT_DENSITY, execution }
    }

    fn run<T: Send>(&self, seed: u64, f: impl FnOnce(&EquivOptions) -> T + Send) -> T {
        let options = self.options(seed);
        options.execution.with_jobs(self.jobs, || f(&options))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Standard,
    Game,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and print in canonical form.
    Parse(TermArg),
    /// Dual and negation normal form.
    Dnnf(TermArg),
    /// States of a model satisfying a formula.
    Eval {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        formula: String,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Formula or game to a game logic graph.
    Compile {
        #[command(flatten)]
        term: TermArg,
        /// Exit letter for games.
        #[arg(long, default_value = "e")]
        exit: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Game logic graph back to a game (graphs with exit) or formula.
    Extract {
        #[arg(long)]
        graph: PathBuf,
        /// Treat the graph as having no exit.
        #[arg(long)]
        as_formula: bool,
    },
    /// Structural checks of a syntax graph.
    Validate {
        #[arg(long)]
        graph: PathBuf,
    },
    /// The game logic graph conditions.
    GlgCheck {
        #[arg(long)]
        graph: PathBuf,
        /// Skip the exit condition even if the graph has an exit.
        #[arg(long)]
        ignore_exit: bool,
    },
    /// States of a model accepted by a graph.
    Accept {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        model: PathBuf,
    },
    /// Sampled equivalence of two formulas or graphs.
    Equiv {
        #[arg(long, conflicts_with = "left_graph", required_unless_present = "left_graph")]
        left: Option<String>,
        #[arg(long)]
        left_graph: Option<PathBuf>,
        #[arg(long, conflicts_with = "right_graph", required_unless_present = "right_graph")]
        right: Option<String>,
        #[arg(long)]
        right_graph: Option<PathBuf>,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// Compile, extract and compare with the original.
    Roundtrip {
        #[arg(long)]
        formula: String,
        #[command(flatten)]
        sampling: Sampling,
    },
    /// A seeded random model.
    RandomModel {
        #[arg(long, default_value_t = 3)]
        states: usize,
        #[arg(long, value_delimiter = ',', default_value = "p,q")]
        atoms: Vec<String>,
        #[arg(long, value_delimiter = ',', default_value = "g,h")]
        games: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_DENSITY)]
        density: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve a parity arena.
    Solve {
        #[arg(long)]
        arena: PathBuf,
    },
}

fn read(path: &Path) -> Result<Vec<u8>> {
    fs::read(path).with_context(|| format!("reading {}", path.display()))
}

fn write_or_print(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{}", String::from_utf8_lossy(bytes));
            Ok(())
        }
    }
}

fn load_model(path: &Path) -> Result<GameModel> {
    let read = read_model(&read(path)?)?;
    for w in &read.warnings {
        eprintln!("warning: {w}");
    }
    Ok(read.model)
}

fn load_graph(path: &Path) -> Result<SyntaxGraph> {
    Ok(read_graph(&read(path)?)?)
}

fn sat(model: &GameModel, set: glw_core::nbhd::StateSet) -> Value {
    json!({"sat": model.set_names(set)})
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let seed = cli.seed;
    match cli.command {
        Command::Parse(t) => println!("{}", t.parse()?),
        Command::Dnnf(t) => match t.parse()? {
            Term::Formula(f) => println!("{}", to_dnnf(&f)),
            Term::Game(g) => println!("{}", to_dnnf_game(&g)),
        },
        Command::Eval { model, formula, method } => {
            let m = load_model(&model)?;
            let f = parse_formula(&formula)?;
            if let Err(e) = m.check_alphabet(&Term::Formula(f.clone())) {
                eprintln!("warning: {e}; treating it as empty");
            }
            let standard = (method != Method::Game).then(|| eval_standard(&m, &f));
            let game = (method != Method::Standard).then(|| eval_by_game(&m, &f));
            if let (Some(s), Some(g)) = (standard, game) {
                if s != g {
                    println!("{}", json!({"standard": m.set_names(s), "game": m.set_names(g)}));
                    eprintln!("semantics disagree");
                    return Ok(ExitCode::from(1));
                }
            }
            println!("{}", sat(&m, standard.or(game).expect("some method")));
        }
        Command::Compile { term, exit, out, dot } => {
            let g = match term.parse()? {
                Term::Formula(f) => compile_formula(&to_dnnf(&f))?,
                Term::Game(a) => compile_game(&to_dnnf_game(&a), &exit)?,
            };
            write_or_print(out.as_deref(), &write_graph(&g))?;
            if let Some(p) = dot {
                fs::write(&p, export_dot(&g)).with_context(|| format!("writing {}", p.display()))?;
            }
        }
        Command::Extract { graph, as_formula } => {
            let mut g = load_graph(&graph)?;
            if as_formula {
                g.exit = None;
            }
            if g.exit.is_some() {
                println!("{}", extract_game(&g)?);
            } else {
                println!("{}", extract_formula(&g)?);
            }
        }
        Command::Validate { graph } => {
            let g = read_graph_unchecked(&read(&graph)?)?;
            let report = validate_graph(&g);
            println!("{}", pretty(&json!({"valid": report.is_valid(), "report": report})));
            if !report.is_valid() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::GlgCheck { graph, ignore_exit } => {
            let g = load_graph(&graph)?;
            let report = check_glg(&g, g.exit.is_some() && !ignore_exit);
            println!("{}", pretty(&json!({"passes": report.passes(), "report": report})));
            if !report.passes() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Accept { graph, model } => {
            let g = load_graph(&graph)?;
            let m = load_model(&model)?;
            println!("{}", sat(&m, accepts(&g, &m)));
        }
        Command::Equiv { left, left_graph, right, right_graph, sampling } => {
            let side = |text: Option<String>, graph: Option<PathBuf>| -> Result<Either> {
                match (text, graph) {
                    (Some(t), _) => Ok(Either::Formula(parse_formula(&t)?)),
                    (_, Some(p)) => Ok(Either::Graph(load_graph(&p)?)),
                    _ => bail!("missing side"),
                }
            };
            let (a, b) = (side(left, left_graph)?, side(right, right_graph)?);
            let v = sampling.run(seed, |o| equiv(a.side(), b.side(), o))?;
            println!("{}", pretty(&v.to_json()));
            if !v.is_equivalent() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Roundtrip { formula, sampling } => {
            let f = parse_formula(&formula)?;
            let g = compile_formula(&to_dnnf(&f))?;
            let report = check_glg(&g, false);
            if !validate_graph(&g).is_valid() || !report.passes() {
                println!("{}", pretty(&json!({"compiled": false, "report": report})));
                return Ok(ExitCode::from(1));
            }
            let back: Formula = extract_formula(&g)?;
            let v = sampling.run(seed, |o| equiv(Side::Formula(&back), Side::Formula(&f), o))?;
            println!("{}", pretty(&json!({"vertices": g.len(), "extracted": back.to_string(), "verdict": v.to_json()})));
            if !v.is_equivalent() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::RandomModel { states, atoms, games, density, out } => {
            let m = random_model(states, &atoms, &games, density, seed)?;
            write_or_print(out.as_deref(), &write_model(&m))?;
        }
        Command::Solve { arena } => {
            let (arena, ids) = read_arena(&read(&arena)?)?;
            let r = solve(&arena);
            let region = |p| r.winning_region(p).into_iter().map(|v| ids[v]).collect::<Vec<_>>();
            let strategy: serde_json::Map<String, Value> = (0..arena.len())
                .filter_map(|v| r.strategy(v).map(|t| (ids[v].to_string(), json!(ids[t]))))
                .collect();
            let verified = verify_strategy(&arena, &r).map_err(|e| anyhow!(e))?;
            println!(
                "{}",
                pretty(&json!({
                    "eloise": region(Player::Eloise),
                    "abelard": region(Player::Abelard),
                    "strategy": strategy,
                    "verified": verified,
                }))
            );
            return Ok(if verified { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

enum Either {
    Formula(Formula),
    Graph(SyntaxGraph),
}

impl Either {
    fn side(&self) -> Side<'_> {
        match self {
            Either::Formula(f) => Side::Formula(f),
            Either::Graph(g) => Side::Graph(g),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
