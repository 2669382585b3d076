use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use pats::analysis::color_lower_bounds;
use pats::io::{
    parse_dimacs, read_palette, read_pattern, read_seed, read_tileset, render_ppm, write_palette, write_pattern,
    write_seed, write_tileset, Palette,
};
use pats::model::Pattern;
use pats::reduction::{all_assignments, reduce, verify_assignments};
use pats::sim::{directedness_witness, prune_unreachable, run, unique_pattern, OrderPolicy, Rtas, SimError};
use pats::solver::{solve_decision_with, solve_min_with, Decision, PatsInstance, SolverConfig};

#[derive(Parser)]
#[command(name = "pats", version, about = "Rectilinear tile self-assembly toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Grow a tile set from a seed and print the colored pattern.
    Simulate {
        #[arg(long)]
        tiles: PathBuf,
        #[arg(long)]
        seed: PathBuf,
        /// Write the pattern here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the attachment order, one `x y tile` line per step.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Also render the pattern as PPM.
        #[arg(long)]
        ppm: Option<PathBuf>,
        #[arg(long)]
        palette: Option<PathBuf>,
        /// Random attachment order from this seed instead of row-major.
        #[arg(long)]
        random_order: Option<u64>,
    },
    /// Exit 0 iff no two reachable tile types share west and south glues.
    CheckDirected {
        #[arg(long)]
        tiles: PathBuf,
        /// Restrict the check to types reachable from this seed.
        #[arg(long)]
        seed: Option<PathBuf>,
    },
    /// Per-color lower bounds on tile types.
    Bounds {
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Find a smallest tile set for a pattern, or decide a budget.
    Solve {
        #[arg(long)]
        pattern: PathBuf,
        /// Decide whether this many tile types suffice.
        #[arg(long)]
        max_types: Option<usize>,
        /// Largest interior (cells) the solver accepts.
        #[arg(long)]
        limit: Option<usize>,
        /// Write the witness seed here.
        #[arg(long)]
        seed_out: Option<PathBuf>,
    },
    /// Build the pattern, seed, tile set and manifest for a 3CNF formula.
    Reduce {
        #[arg(long)]
        cnf: PathBuf,
        #[arg(long)]
        out_dir: PathBuf,
        /// File stem for the outputs; defaults to the formula's file stem.
        #[arg(long)]
        name: Option<String>,
    },
    /// Check the evaluator's LEDs against the formula's truth table.
    Verify {
        #[arg(long)]
        cnf: PathBuf,
        /// One assignment as a bit string, variable 1 first.
        #[arg(long, conflicts_with = "all")]
        assignment: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Render a pattern as plain PPM.
    Render {
        #[arg(long)]
        pattern: PathBuf,
        #[arg(long, conflicts_with = "preset")]
        palette: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Preset::Generic)]
        preset: Preset,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print one of the built-in palettes.
    Palette {
        #[arg(value_enum)]
        preset: Preset,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    Generic,
    Counter,
    Reduction,
}

enum Fail {
    /// Bad input or arguments: exit 2.
    Usage(String),
    /// A negative answer: exit 1.
    No(String),
}

type Res = Result<(), Fail>;

fn usage(e: impl std::fmt::Display) -> Fail {
    Fail::Usage(e.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Res {
    fs::write(path, text).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Res {
    match out {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn palette_for(path: Option<&Path>, preset: Preset, p: &Pattern) -> Result<Palette, Fail> {
    if let Some(path) = path {
        return read_palette(&read(path)?).map_err(usage);
    }
    Ok(match preset {
        Preset::Generic => {
            let n = p.color_set().last().map_or(1, |&c| c as usize + 1);
            Palette::generic(n)
        }
        Preset::Counter => Palette::counter(),
        Preset::Reduction => Palette::reduction(),
    })
}

fn sim_fail(e: SimError) -> Fail {
    Fail::No(e.to_string())
}

fn exec(cmd: Cmd) -> Res {
    match cmd {
        Cmd::Simulate { tiles, seed, out, trace, ppm, palette, random_order } => {
            let file = read_tileset(&read(&tiles)?).map_err(usage)?;
            let s = Rtas::new(file.tiles, read_seed(&read(&seed)?).map_err(usage)?);
            if let Some(t) = s.tiles().types().iter().find(|t| file.coloring.get(&t.id).is_none()) {
                return Err(Fail::Usage(format!("tile {} has no color", t.id)));
            }
            let policy = random_order.map_or(OrderPolicy::Lexicographic, OrderPolicy::Random);
            if let Some(path) = &trace {
                write(path, &run(&s, policy).trace_log())?;
            }
            let p = unique_pattern(&s, &file.coloring).map_err(sim_fail)?;
            if let Some(path) = &ppm {
                let pal = palette_for(palette.as_deref(), Preset::Generic, &p)?;
                write(path, &render_ppm(&p, &pal).map_err(usage)?)?;
            }
            emit(out.as_deref(), &write_pattern(&p))
        }
        Cmd::CheckDirected { tiles, seed } => {
            let mut set = read_tileset(&read(&tiles)?).map_err(usage)?.tiles;
            if let Some(seed) = seed {
                let s = Rtas::new(set, read_seed(&read(&seed)?).map_err(usage)?);
                set = prune_unreachable(&s).tiles().clone();
            }
            match directedness_witness(&set) {
                None => {
                    println!("directed");
                    Ok(())
                }
                Some((a, b)) => Err(Fail::No(format!("not directed: {a} and {b} share west and south glues"))),
            }
        }
        Cmd::Bounds { pattern } => {
            let p = read_pattern(&read(&pattern)?).map_err(usage)?;
            print!("{}", color_lower_bounds(&p).report());
            Ok(())
        }
        Cmd::Solve { pattern, max_types, limit, seed_out } => {
            let p = read_pattern(&read(&pattern)?).map_err(usage)?;
            let mut config = SolverConfig::from_env();
            if let Some(l) = limit {
                config.max_interior = l;
            }
            let solution = match max_types {
                Some(n) => match solve_decision_with(&PatsInstance { pattern: p, budget: n }, &config).map_err(usage)? {
                    Decision::Yes(s) => {
                        println!("YES");
                        *s
                    }
                    Decision::No => {
                        println!("NO");
                        return Err(Fail::No(format!("no directed tile set with at most {n} types")));
                    }
                },
                None => {
                    let r = solve_min_with(&p, &config).map_err(usage)?;
                    println!("min={}", r.min);
                    r.solution
                }
            };
            print!("{}", write_tileset(solution.rtas.tiles(), Some(&solution.coloring), None));
            if let Some(path) = seed_out {
                write(&path, &write_seed(solution.rtas.seed()))?;
            }
            Ok(())
        }
        Cmd::Reduce { cnf, out_dir, name } => {
            let phi = parse_dimacs(&read(&cnf)?).map_err(usage)?;
            let r = reduce(&phi).map_err(usage)?;
            let stem = name.unwrap_or_else(|| cnf.file_stem().map_or("reduction".into(), |s| s.to_string_lossy().into()));
            fs::create_dir_all(&out_dir).map_err(usage)?;
            let seed = r.seed_for(&r.assignment).map_err(usage)?;
            let path = |ext: &str| out_dir.join(format!("{stem}.{ext}"));
            write(&path("pat"), &write_pattern(&r.pattern))?;
            write(&path("seed"), &write_seed(&seed))?;
            write(&path("tts"), &write_tileset(&r.tiles, Some(&r.coloring), None))?;
            write(&path("palette"), &write_palette(&Palette::reduction()))?;
            let manifest = r.manifest();
            write(&path("manifest"), &manifest)?;
            print!("{manifest}");
            if r.budget() != r.colors() + 24 {
                return Err(Fail::No(format!("inventory mismatch: budget {} vs {} colors", r.budget(), r.colors())));
            }
            Ok(())
        }
        Cmd::Verify { cnf, assignment, all } => {
            let phi = parse_dimacs(&read(&cnf)?).map_err(usage)?;
            let assignments: Vec<Vec<bool>> = match (assignment, all) {
                (Some(bits), _) => {
                    let b: Vec<bool> = bits
                        .chars()
                        .map(|c| match c {
                            '0' => Ok(false),
                            '1' => Ok(true),
                            _ => Err(Fail::Usage(format!("assignment must be a bit string, got {bits:?}"))),
                        })
                        .collect::<Result<_, _>>()?;
                    vec![b]
                }
                (None, true) => all_assignments(phi.vars()).collect(),
                (None, false) => return Err(Fail::Usage("give --assignment <bits> or --all".into())),
            };
            let r = verify_assignments(&phi, assignments).map_err(usage)?;
            println!("matches {}/{}", r.matches(), r.assignments);
            for (b, k) in &r.led_mismatches {
                let bits: String = b.iter().map(|&v| if v { '1' } else { '0' }).collect();
                println!("mismatch assignment {bits} clause {}", k + 1);
            }
            println!("cover-up {}", if r.leaked_cells.is_empty() { "ok" } else { "leaked" });
            println!("crossing-parity {}", if r.odd_crossings { "odd" } else { "even" });
            println!("pairs {}", if r.split_pairs { "split" } else { "adjacent" });
            println!("directed {}", r.directed);
            println!("order-independent {}", r.order_independent);
            if r.ok() {
                Ok(())
            } else {
                Err(Fail::No("evaluator disagrees with the truth table".into()))
            }
        }
        Cmd::Render { pattern, palette, preset, out } => {
            let p = read_pattern(&read(&pattern)?).map_err(usage)?;
            let pal = palette_for(palette.as_deref(), preset, &p)?;
            emit(out.as_deref(), &render_ppm(&p, &pal).map_err(usage)?)
        }
        Cmd::Palette { preset } => {
            let pal = palette_for(None, preset, &Pattern::uniform(1, 1, 0))?;
            print!("{}", write_palette(&pal));
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match exec(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::No(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
