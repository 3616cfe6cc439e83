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

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tokswap_cli::commands::{
    approx_instance, generate, load_instance, load_solution, solve_instance, verify_solution,
    Algorithm, CliError, CliResult, GenFamily, GenParams, Method,
};
use tokswap_cli::experiment::{
    happy_leaf_search, ratio_table, search_tree, write_csv, RatioFamily,
};
use tokswap_cli::io::InstanceFile;

#[derive(Parser)]
#[command(name = "tokswap", version, about = "Token swapping on trees")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve an instance exactly.
    Solve {
        file: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
        algorithm: Algorithm,
        /// Vertices no swap may touch (oracle only).
        #[arg(long, value_delimiter = ',')]
        forbid: Vec<usize>,
    },
    /// Run an approximation algorithm.
    Approx {
        file: String,
        #[arg(long, value_enum)]
        method: Method,
    },
    /// Generate an instance, plus its companion sequence where one exists.
    Gen(GenArgs),
    /// Replay a solution against an instance.
    Verify { instance: String, solution: String },
    #[command(subcommand)]
    Experiment(Experiment),
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: GenFamily,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    /// Graph file for `vc`: {"n": .., "edges": [[x, y], ..]}.
    #[arg(long)]
    graph: Option<String>,
    #[arg(long)]
    q: Option<usize>,
    /// Override L_r for `vc`; any value below n^7 voids the hardness argument.
    #[arg(long)]
    lr: Option<u64>,
    /// Vertex cover for the `vc` companion schedule.
    #[arg(long, value_delimiter = ',')]
    cover: Option<Vec<usize>>,
    /// Vertex count for `random`.
    #[arg(long)]
    n: Option<usize>,
    /// Write the instance here instead of stdout.
    #[arg(long)]
    out: Option<String>,
    /// Write the companion solution here.
    #[arg(long)]
    companion: Option<String>,
}

#[derive(Subcommand)]
enum Experiment {
    /// Search small trees for placements where happy leaves must move.
    HappyLeafSearch {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Search only the tree of this instance file.
        #[arg(long)]
        tree: Option<String>,
        /// Counterexamples to print; the total is always reported.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Companion cost against each approximation on the hard families, as CSV.
    Ratio {
        #[arg(long, value_enum)]
        family: RatioArg,
        #[arg(long, value_delimiter = ',', required = true)]
        k: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        b: Vec<usize>,
        /// Skip the approximation algorithms.
        #[arg(long)]
        no_approx: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RatioArg {
    Tk,
    Tkb,
}

fn emit<T: Serialize>(value: &T, path: Option<&str>) -> CliResult<()> {
    let text = serde_json::to_string_pretty(value).expect("documents serialize");
    match path {
        None => {
            // a closed pipe (`| head`) is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            Ok(())
        }
        Some(p) => std::fs::write(p, text + "\n").map_err(|source| CliError::Write {
            path: p.into(),
            source,
        }),
    }
}

#[derive(Serialize)]
struct SearchSummary {
    max_n: Option<usize>,
    trees_checked: usize,
    placements_checked: u64,
    counterexample_count: usize,
    counterexamples: Vec<tokswap_cli::experiment::Counterexample>,
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    match cli.command {
        Command::Solve {
            file,
            algorithm,
            forbid,
        } => {
            let inst = load_instance(&file)?;
            emit(&solve_instance(&inst, algorithm, &forbid)?, None)?;
        }
        Command::Approx { file, method } => {
            let inst = load_instance(&file)?;
            emit(&approx_instance(&inst, method)?, None)?;
        }
        Command::Gen(g) => {
            let params = GenParams {
                k: g.k,
                b: g.b,
                graph: g.graph,
                q: g.q,
                lr: g.lr,
                cover: g.cover,
                n: g.n,
                seed: cli.seed,
            };
            let (inst, companion) = generate(g.family, &params)?;
            emit(&InstanceFile::from_instance(&inst), g.out.as_deref())?;
            match (companion, g.companion) {
                (Some(sol), Some(path)) => emit(&sol, Some(&path))?,
                (None, Some(_)) => {
                    return Err(CliError::Usage(
                        "this family has no companion sequence".into(),
                    ))
                }
                _ => {}
            }
        }
        Command::Verify { instance, solution } => {
            let inst = load_instance(&instance)?;
            let sol = load_solution(&solution)?;
            let report = verify_solution(&inst, &sol)?;
            emit(&report, None)?;
            if !report.goal_reached {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Experiment(Experiment::HappyLeafSearch { max_n, tree, limit }) => {
            let summary = match tree {
                Some(path) => {
                    let inst = load_instance(&path)?;
                    let (count, found) = search_tree(inst.tree())?;
                    SearchSummary {
                        max_n: None,
                        trees_checked: 1,
                        placements_checked: count,
                        counterexample_count: found.len(),
                        counterexamples: found.into_iter().take(limit).collect(),
                    }
                }
                None => {
                    let report = happy_leaf_search(max_n)?;
                    SearchSummary {
                        max_n: Some(max_n),
                        trees_checked: report.trees_checked,
                        placements_checked: report.placements_checked,
                        counterexample_count: report.counterexamples.len(),
                        counterexamples: report.counterexamples.into_iter().take(limit).collect(),
                    }
                }
            };
            emit(&summary, None)?;
        }
        Command::Experiment(Experiment::Ratio {
            family,
            k,
            b,
            no_approx,
        }) => {
            let family = match family {
                RatioArg::Tk => RatioFamily::Tk,
                RatioArg::Tkb => RatioFamily::Tkb,
            };
            if family == RatioFamily::Tkb && b.is_empty() {
                return Err(CliError::Usage("--b is required for tkb".into()));
            }
            let rows = ratio_table(family, &k, &b, !no_approx)?;
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            write_csv(&rows, &mut lock).map_err(|e| CliError::Write {
                path: "stdout".into(),
                source: std::io::Error::other(e),
            })?;
            lock.flush().ok();
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
