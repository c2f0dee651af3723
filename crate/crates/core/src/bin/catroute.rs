// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! `catroute` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 search caps exhausted. Errors are written to stderr as one JSON object.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use catroute::bounds::{bounds_report, detect_star, exact_min_memdim};
use catroute::constructions::{
    clique_wand_system, cycle_system, general_system, grid_system, hypercube_system, long_star_system, path_system,
    star_antichain_system, star_binary_system, torus_system, tree_system,
};
use catroute::io::{bounds_csv, read_graph, read_system, routing_csv, to_dot, to_json};
use catroute::routing::{route_pairs, Sample};
use catroute::{generate, is_good, route_all_pairs, CategorySystem, Error, Family, Graph, GraphSpec, Tree};

#[derive(Parser)]
#[command(name = "catroute", version, about = "Category systems for greedy routing")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyName,
        #[command(flatten)]
        params: Params,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a category system for a graph.
    Build {
        #[arg(short, long, value_enum)]
        construction: Construction,
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        params: Params,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check goodness; exit 1 when the system is not good.
    Verify {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        system: PathBuf,
    },
    /// Route pairs greedily and write CSV.
    Route {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        system: PathBuf,
        #[arg(long, conflicts_with_all = ["from", "sample"])]
        all: bool,
        #[arg(long, requires = "to")]
        from: Option<usize>,
        #[arg(long, requires = "from")]
        to: Option<usize>,
        #[arg(long, conflicts_with = "from")]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Evaluate lower bounds, optionally against a system.
    Bounds {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        system: Option<PathBuf>,
        #[arg(long)]
        csv: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive minimum-memdim search for tiny graphs.
    Search {
        #[arg(short, long)]
        graph: PathBuf,
        #[command(flatten)]
        caps: Caps,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write every artifact for a graph and system into a directory.
    Report {
        #[arg(short, long)]
        graph: PathBuf,
        #[arg(short, long)]
        system: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        highlight_category: Option<usize>,
        /// Also run the exhaustive search.
        #[arg(long)]
        search: bool,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Args, Clone, Copy)]
struct Caps {
    #[arg(long, env = "CATROUTE_MEMDIM_CAP", default_value_t = 6)]
    memdim_cap: usize,
    #[arg(long = "cat-cap", env = "CATROUTE_CAT_CAP", default_value_t = 64)]
    category_cap: usize,
}

#[derive(Args, Clone, Copy, Default)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    delta: Option<usize>,
    #[arg(long)]
    diam: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum FamilyName {
    Path,
    Cycle,
    Grid,
    Torus,
    Hypercube,
    Star,
    CliqueWand,
    RandomTree,
    RandomConnected,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum Construction {
    Path,
    Cycle,
    Grid,
    Torus,
    Hypercube,
    StarBinary,
    StarAntichain,
    LongStar,
    CliqueWand,
    Tree,
    General,
}

enum Failure {
    Verification(serde_json::Value),
    Input(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Input(err)
    }
}

type CliResult = std::result::Result<(), Failure>;

fn error_kind(err: &Error) -> &'static str {
    match err {
        Error::InvalidVertex { .. } => "invalid_vertex",
        Error::Disconnected => "disconnected",
        Error::EmptyGraph => "empty_graph",
        Error::SelfLoop(_) => "self_loop",
        Error::DuplicateEdge(..) => "duplicate_edge",
        Error::NotATree { .. } => "not_a_tree",
        Error::Overflow(..) => "overflow",
        Error::InvalidParameter { .. } => "invalid_parameter",
        Error::EmptyCategory(_) => "empty_category",
        Error::Domain(_) => "domain",
        Error::CapExhausted { .. } => "cap_exhausted",
        Error::GraphTooLarge { .. } => "graph_too_large",
        Error::Parse(_) => "parse",
        Error::Io(_) => "io",
    }
}

fn need(value: Option<usize>, flag: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn family(name: FamilyName, p: &Params) -> std::result::Result<Family, Failure> {
    Ok(match name {
        FamilyName::Path => Family::Path { n: need(p.n, "n")? },
        FamilyName::Cycle => Family::Cycle { k: need(p.k, "k")? },
        FamilyName::Grid => Family::Grid {
            a: need(p.a, "a")?,
            b: need(p.b, "b")?,
        },
        FamilyName::Torus => Family::Torus {
            k: need(p.k, "k")?,
            l: need(p.l, "l")?,
        },
        FamilyName::Hypercube => Family::Hypercube { d: need(p.d, "d")? },
        FamilyName::Star => Family::Star {
            l: need(p.l, "l")?,
            d: need(p.d, "d")?,
        },
        FamilyName::CliqueWand => Family::CliqueWand {
            n: need(p.n, "n")?,
            delta: need(p.delta, "delta")?,
            diam: need(p.diam, "diam")?,
        },
        FamilyName::RandomTree => Family::RandomTree { n: need(p.n, "n")? },
        FamilyName::RandomConnected => Family::RandomConnected {
            n: need(p.n, "n")?,
            m: need(p.m, "m")?,
        },
    })
}

fn emit(output: Option<&Path>, text: &str) -> CliResult {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Error::from(e).into()),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(|e| Error::from(e).into())
        }
    }
}

/// Builds the named construction, checking that the graph is the family
/// instance the construction expects. Missing parameters are read off the
/// graph where that is unambiguous.
fn build(construction: Construction, g: &Graph, p: &Params) -> std::result::Result<CategorySystem, Failure> {
    let star_shape = || {
        detect_star(g)
            .map(|(l, d)| (p.l.unwrap_or(l), p.d.unwrap_or(d)))
            .or_else(|| p.l.zip(p.d))
            .ok_or_else(|| Failure::Usage("graph is not a star; pass --l and --d".into()))
    };
    let (spec, sys) = match construction {
        Construction::Tree => return Ok(tree_system(&Tree::new(g.clone())?)),
        Construction::General => return Ok(general_system(g)),
        Construction::Path => {
            let n = p.n.unwrap_or(g.n());
            (Family::Path { n }, path_system(n)?)
        }
        Construction::Cycle => {
            let k = p.k.unwrap_or(g.n());
            (Family::Cycle { k }, cycle_system(k)?)
        }
        Construction::Grid => {
            let (a, b) = (need(p.a, "a")?, need(p.b, "b")?);
            (Family::Grid { a, b }, grid_system(a, b)?)
        }
        Construction::Torus => {
            let (k, l) = (need(p.k, "k")?, need(p.l, "l")?);
            (Family::Torus { k, l }, torus_system(k, l)?)
        }
        Construction::Hypercube => {
            let d = p.d.unwrap_or(g.n().trailing_zeros() as usize);
            (Family::Hypercube { d }, hypercube_system(d)?)
        }
        Construction::StarBinary | Construction::StarAntichain => {
            let (l, d) = star_shape()?;
            if d != 1 {
                return Err(Failure::Usage(format!(
                    "construction needs a star with d = 1, got d = {d}"
                )));
            }
            let sys = match construction {
                Construction::StarBinary => star_binary_system(l)?,
                _ => star_antichain_system(l)?,
            };
            (Family::Star { l, d }, sys)
        }
        Construction::LongStar => {
            let (l, d) = star_shape()?;
            (Family::Star { l, d }, long_star_system(l, d)?)
        }
        Construction::CliqueWand => {
            let (n, delta, diam) = (need(p.n, "n")?, need(p.delta, "delta")?, need(p.diam, "diam")?);
            (
                Family::CliqueWand { n, delta, diam },
                clique_wand_system(n, delta, diam)?,
            )
        }
    };
    let expected = generate(&GraphSpec::new(spec))?;
    if &expected != g {
        return Err(Failure::Usage(format!(
            "graph does not match the {} generator for these parameters",
            spec.name()
        )));
    }
    Ok(sys)
}

fn load(graph: &Path, system: &Path) -> std::result::Result<(Graph, CategorySystem), Failure> {
    let g = read_graph(graph)?;
    let sys = read_system(system, g.n())?;
    Ok((g, sys))
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Gen {
            family: name,
            params,
            output,
        } => {
            let spec = GraphSpec::with_seed(family(name, &params)?, params.seed);
            emit(output.as_deref(), &to_json(&generate(&spec)?)?)
        }
        Command::Build {
            construction,
            graph,
            params,
            output,
        } => {
            let g = read_graph(&graph)?;
            let sys = build(construction, &g, &params)?;
            emit(output.as_deref(), &to_json(&sys)?)
        }
        Command::Verify { graph, system } => {
            let (g, sys) = load(&graph, &system)?;
            let report = is_good(&sys, &g)?;
            let text = to_json(&report)?;
            emit(None, &text)?;
            if report.good {
                Ok(())
            } else {
                Err(Failure::Verification(
                    serde_json::to_value(&report).map_err(Error::from)?,
                ))
            }
        }
        Command::Route {
            graph,
            system,
            all: _,
            from,
            to,
            sample,
            seed,
            output,
        } => {
            let (g, sys) = load(&graph, &system)?;
            let report = match (from, to, sample) {
                (Some(s), Some(t), _) => route_pairs(&sys, &g, &[(s, t)])?,
                (_, _, Some(budget)) => route_all_pairs(&sys, &g, Some(Sample { budget, seed }))?,
                _ => route_all_pairs(&sys, &g, None)?,
            };
            emit(output.as_deref(), &routing_csv(&report)?)?;
            if report.failures.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verification(json!({ "failures": report.failures })))
            }
        }
        Command::Bounds {
            graph,
            system,
            csv,
            output,
        } => {
            let g = read_graph(&graph)?;
            let sys = system.map(|s| read_system(&s, g.n())).transpose()?;
            let report = bounds_report(&g, sys.as_ref())?;
            let text = if csv { bounds_csv(&report)? } else { to_json(&report)? };
            emit(output.as_deref(), &text)?;
            if report.is_sound() {
                Ok(())
            } else {
                Err(Failure::Verification(
                    serde_json::to_value(&report).map_err(Error::from)?,
                ))
            }
        }
        Command::Search { graph, caps, output } => {
            let g = read_graph(&graph)?;
            let result = exact_min_memdim(&g, caps.memdim_cap, caps.category_cap)?;
            emit(output.as_deref(), &to_json(&result)?)
        }
        Command::Report {
            graph,
            system,
            output,
            highlight_category,
            search,
            caps,
        } => {
            let (g, sys) = load(&graph, &system)?;
            fs::create_dir_all(&output).map_err(Error::from)?;
            let write = |name: &str, text: String| -> CliResult { emit(Some(&output.join(name)), &text) };
            let goodness = is_good(&sys, &g)?;
            let routing = route_all_pairs(&sys, &g, None)?;
            let bounds = bounds_report(&g, Some(&sys))?;
            write("graph.json", to_json(&g)?)?;
            write("system.json", to_json(&sys)?)?;
            write("goodness.json", to_json(&goodness)?)?;
            write("routing.json", to_json(&routing)?)?;
            write("routing.csv", routing_csv(&routing)?)?;
            write("bounds.json", to_json(&bounds)?)?;
            write("bounds.csv", bounds_csv(&bounds)?)?;
            write("graph.dot", to_dot(&g, Some(&sys), highlight_category)?)?;
            if search {
                write(
                    "search.json",
                    to_json(&exact_min_memdim(&g, caps.memdim_cap, caps.category_cap)?)?,
                )?;
            }
            if goodness.good {
                Ok(())
            } else {
                Err(Failure::Verification(
                    serde_json::to_value(&goodness).map_err(Error::from)?,
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) if !err.use_stderr() => {
            let _ = err.print();
            return ExitCode::SUCCESS;
        }
        Err(err) => {
            let payload = json!({ "error": "usage", "message": err.to_string().trim_end(), "exit_code": 2 });
            eprintln!("{payload}");
            return ExitCode::from(2);
        }
    };
    let (code, payload) = match run(cli) {
        Ok(()) => return ExitCode::SUCCESS,
        Err(Failure::Verification(detail)) => (1, json!({ "error": "verification_failed", "detail": detail })),
        Err(Failure::Usage(message)) => (2, json!({ "error": "usage", "message": message })),
        Err(Failure::Input(err)) => {
            let code = if matches!(err, Error::CapExhausted { .. }) {
                3
            } else {
                2
            };
            (code, json!({ "error": error_kind(&err), "message": err.to_string() }))
        }
    };
    let mut payload = payload;
    payload["exit_code"] = json!(code);
    eprintln!("{payload}");
    ExitCode::from(code)
}
