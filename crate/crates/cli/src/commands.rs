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

//! Subcommand bodies. Each returns the JSON document to print, or a
//! [`CliError`] that knows its exit code.

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::json;
use tokswap::approx::{cycle_algorithm, happy_swap_algorithm, vaughan_algorithm};
use tokswap::constructions::{
    build_vc_reduction, gen_happy_leaf_counterexample, gen_tk, gen_tkb, vc_to_sequence,
    VertexCoverInput,
};
use tokswap::enumerate::tree_from_prufer;
use tokswap::exact::{
    solve_broom, solve_coloured_star, solve_path, solve_star, solve_weighted_coloured_path,
    solve_weighted_coloured_star, solve_weighted_star, BroomTrace, StarWeightSummary,
};
use tokswap::{
    apply_sequence, optimal, Configuration, Family, Instance, SearchOptions, SwapSequence, Tree,
};

use crate::io::{InstanceFile, IoError, Meta, SolutionFile};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Io(#[from] IoError),
    #[error(transparent)]
    Core(#[from] tokswap::Error),
    #[error("{0}")]
    Mismatch(String),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 unsorted or over budget, 2 unreadable input, 3 solver or family
    /// mismatch and non-edge swaps, 4 instance too large.
    pub fn exit_code(&self) -> i32 {
        use tokswap::Error as E;
        match self {
            CliError::Io(_) | CliError::Usage(_) => 2,
            CliError::Mismatch(_) => 3,
            CliError::Write { .. } => 1,
            CliError::Core(e) => match e {
                E::NotATree(..)
                | E::InvalidConfiguration(_)
                | E::InvalidInstance(_)
                | E::ColourCountMismatch { .. }
                | E::InvalidGraph(_) => 2,
                E::TooLarge { .. } => 4,
                E::NonEdgeSwap(..)
                | E::ColouredInstance
                | E::NotAPath
                | E::NotAStar
                | E::NotABroom
                | E::OddK(_)
                | E::EvenB(_)
                | E::NotACover(..) => 3,
                _ => 1,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Auto,
    Path,
    Star,
    WeightedStar,
    ColouredStar,
    WeightedColouredStar,
    Broom,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    HappySwap,
    Cycle,
    Vaughan,
}

/// The most specific exact solver for the instance.
pub fn pick_algorithm(inst: &Instance) -> Algorithm {
    let distinct = inst.has_distinct_colours();
    let weighted = inst.is_weighted();
    match inst.tree().family() {
        Family::Path => Algorithm::Path,
        Family::Star => match (weighted, distinct) {
            (false, true) => Algorithm::Star,
            (true, true) => Algorithm::WeightedStar,
            (false, false) => Algorithm::ColouredStar,
            (true, false) => Algorithm::WeightedColouredStar,
        },
        Family::Broom if distinct && !weighted => Algorithm::Broom,
        _ => Algorithm::Oracle,
    }
}

fn name(a: Algorithm) -> String {
    a.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn broom_trace(t: &BroomTrace) -> serde_json::Value {
    let tokens: Vec<_> = t
        .path_tokens
        .iter()
        .map(|p| json!({"home": p.home, "d": p.d, "r": p.r}))
        .collect();
    json!({
        "path_tokens": tokens,
        "star_unhomed": t.star_unhomed,
        "lucky": t.lucky,
        "phase_one": t.phase_one,
        "star_cycle_tokens": t.star_cycle_tokens,
        "star_cycles": t.star_cycles,
        "phase_two": t.phase_two,
    })
}

fn star_summary(s: &StarWeightSummary) -> serde_json::Value {
    json!({
        "d_w": s.d_w,
        "w_x": s.w_x,
        "w_a": s.w_a,
        "w_h": s.w_h,
        "ell": s.ell,
        "strategy": s.strategy,
        "cost": s.cost,
    })
}

fn check_family(inst: &Instance, wanted: Family) -> CliResult<()> {
    let got = inst.tree().family();
    let ok = match wanted {
        Family::Path => got == Family::Path,
        Family::Star => got == Family::Star,
        Family::Broom => matches!(got, Family::Path | Family::Star | Family::Broom),
        Family::General => true,
    };
    if ok {
        Ok(())
    } else {
        Err(CliError::Mismatch(format!(
            "solver needs a {wanted} but the tree is a {got}"
        )))
    }
}

/// Runs one exact solver. `forbid` is only honoured by the oracle.
pub fn solve_instance(
    inst: &Instance,
    algorithm: Algorithm,
    forbid: &[usize],
) -> CliResult<SolutionFile> {
    let algorithm = match algorithm {
        Algorithm::Auto if !forbid.is_empty() => Algorithm::Oracle,
        Algorithm::Auto => pick_algorithm(inst),
        a => a,
    };
    if !forbid.is_empty() && algorithm != Algorithm::Oracle {
        return Err(CliError::Mismatch(
            "--forbid is only supported by the oracle".into(),
        ));
    }
    let mut meta = Meta {
        algorithm: name(algorithm),
        ..Meta::default()
    };
    let seq: SwapSequence = match algorithm {
        Algorithm::Auto => unreachable!("resolved above"),
        Algorithm::Path => {
            check_family(inst, Family::Path)?;
            if inst.is_weighted() || !inst.has_distinct_colours() {
                solve_weighted_coloured_path(inst)?
            } else {
                solve_path(inst)?
            }
        }
        Algorithm::Star => {
            check_family(inst, Family::Star)?;
            solve_star(inst)?
        }
        Algorithm::WeightedStar => {
            check_family(inst, Family::Star)?;
            let (seq, summary) = solve_weighted_star(inst)?;
            meta.trace = Some(star_summary(&summary));
            seq
        }
        Algorithm::ColouredStar => {
            check_family(inst, Family::Star)?;
            let (_, seq, graph) = solve_coloured_star(inst)?;
            meta.trace = Some(json!({"leaf_loops": graph.leaf_loops, "kappa": graph.kappa}));
            seq
        }
        Algorithm::WeightedColouredStar => {
            check_family(inst, Family::Star)?;
            let (seq, summary) = solve_weighted_coloured_star(inst)?;
            meta.trace = Some(star_summary(&summary));
            seq
        }
        Algorithm::Broom => {
            check_family(inst, Family::Broom)?;
            let (seq, trace) = solve_broom(inst)?;
            meta.trace = Some(broom_trace(&trace));
            seq
        }
        Algorithm::Oracle => {
            let res = optimal(inst, &SearchOptions::forbid(forbid.to_vec()))?;
            meta.states_expanded = Some(res.states_expanded as u64);
            res.sequence
        }
    };
    let cost = apply_sequence(inst, &seq)?.cost;
    Ok(SolutionFile::new(cost, &seq, meta))
}

pub fn approx_instance(inst: &Instance, method: Method) -> CliResult<SolutionFile> {
    let seq = match method {
        Method::HappySwap => happy_swap_algorithm(inst)?,
        Method::Cycle => cycle_algorithm(inst)?,
        Method::Vaughan => vaughan_algorithm(inst)?,
    };
    let cost = apply_sequence(inst, &seq)?.cost;
    let algorithm = method
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Ok(SolutionFile::new(
        cost,
        &seq,
        Meta {
            algorithm,
            ..Meta::default()
        },
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub goal_reached: bool,
    pub length: usize,
    pub cost: u64,
    pub final_tokens: Vec<usize>,
    /// Whether the recorded cost and length agree with the replay.
    pub matches_claim: bool,
}

/// Replays a solution. A swap across a non-edge is an error; an unsorted
/// result is reported with `goal_reached: false`.
pub fn verify_solution(inst: &Instance, sol: &SolutionFile) -> CliResult<VerifyReport> {
    let out = apply_sequence(inst, &sol.sequence())?;
    Ok(VerifyReport {
        goal_reached: inst.is_goal(&out.config),
        length: out.length,
        cost: out.cost,
        matches_claim: out.length == sol.length && out.cost == sol.cost,
        final_tokens: out.config.into_vec(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GenFamily {
    HappyLeaf,
    Tk,
    Tkb,
    Vc,
    Random,
}

#[derive(Debug, Clone, Default)]
pub struct GenParams {
    pub k: Option<usize>,
    pub b: Option<usize>,
    pub graph: Option<String>,
    pub q: Option<usize>,
    pub lr: Option<u64>,
    pub cover: Option<Vec<usize>>,
    pub n: Option<usize>,
    pub seed: u64,
}

/// Graph file for `gen --family vc`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| CliError::Usage(format!("{flag} is required for this family")))
}

/// A uniformly random labelled tree with a uniformly random placement.
pub fn random_instance(n: usize, seed: u64) -> CliResult<Instance> {
    if n == 0 {
        return Err(CliError::Usage("--n must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = if n <= 2 {
        Tree::path(n)
    } else {
        let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        tree_from_prufer(&prufer)
    };
    let mut placement: Vec<usize> = (0..n).collect();
    placement.shuffle(&mut rng);
    Ok(Instance::uncoloured(tree, Configuration::new(placement)?)?)
}

/// Builds an instance of the requested family and, where one exists, its
/// companion sequence.
pub fn generate(family: GenFamily, p: &GenParams) -> CliResult<(Instance, Option<SolutionFile>)> {
    let companion = |inst: &Instance, seq: &SwapSequence, algorithm: &str, trace| {
        let cost = apply_sequence(inst, seq)?.cost;
        Ok::<_, CliError>(SolutionFile::new(
            cost,
            seq,
            Meta {
                algorithm: algorithm.into(),
                states_expanded: None,
                trace,
            },
        ))
    };
    match family {
        GenFamily::HappyLeaf => {
            let (inst, seq) = gen_happy_leaf_counterexample();
            let sol = companion(&inst, &seq, "companion", None)?;
            Ok((inst, Some(sol)))
        }
        GenFamily::Tk => {
            let (inst, seq, reversal) = gen_tk(need(p.k, "--k")?)?;
            let sol = companion(
                &inst,
                &seq,
                "companion",
                Some(json!({"reversal_cost": reversal})),
            )?;
            Ok((inst, Some(sol)))
        }
        GenFamily::Tkb => {
            let (inst, seq) = gen_tkb(need(p.k, "--k")?, need(p.b, "--b")?)?;
            let sol = companion(&inst, &seq, "companion", None)?;
            Ok((inst, Some(sol)))
        }
        GenFamily::Vc => {
            let path = p
                .graph
                .as_deref()
                .ok_or_else(|| CliError::Usage("--graph is required for vc".into()))?;
            let text = std::fs::read_to_string(path).map_err(|source| IoError::Read {
                path: path.into(),
                source,
            })?;
            let graph: GraphFile = serde_json::from_str(&text).map_err(|e| IoError::Syntax {
                path: path.into(),
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            })?;
            let vc = VertexCoverInput::new(
                graph.n,
                graph.edges.iter().map(|&[a, b]| (a, b)).collect(),
                need(p.q, "--q")?,
            )?;
            let red = build_vc_reduction(&vc, p.lr)?;
            let sol = match &p.cover {
                None => None,
                Some(cover) => {
                    let seq = vc_to_sequence(&red, cover)?;
                    let trace = json!({
                        "l_r": red.l_r,
                        "beta": red.beta.to_string(),
                        "beta_prime": red.beta_prime.to_string(),
                        "budget": red.budget.to_string(),
                        "schedule_budget": red.schedule_budget,
                    });
                    Some(companion(&red.instance, &seq, "vc-schedule", Some(trace))?)
                }
            };
            Ok((red.instance, sol))
        }
        GenFamily::Random => {
            let inst = random_instance(need(p.n, "--n")?, p.seed)?;
            Ok((inst, None))
        }
    }
}

pub fn load_instance(path: &str) -> CliResult<Instance> {
    Ok(InstanceFile::load(path)?)
}

pub fn load_solution(path: &str) -> CliResult<SolutionFile> {
    Ok(SolutionFile::load(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn auto_picks_star() {
        let inst = Instance::uncoloured(
            Tree::star(5),
            Configuration::new(vec![1, 0, 3, 4, 2]).unwrap(),
        )
        .unwrap();
        assert_eq!(pick_algorithm(&inst), Algorithm::Star);
        let sol = solve_instance(&inst, Algorithm::Auto, &[]).unwrap();
        let best = solve_instance(&inst, Algorithm::Oracle, &[]).unwrap();
        assert_eq!(sol.length, best.length);
        assert_eq!(sol.meta.algorithm, "star");
    }

    #[test]
    fn family_mismatch_exits_3() {
        let inst = random_instance(7, 1).unwrap();
        if inst.tree().family() != Family::Star {
            let err = solve_instance(&inst, Algorithm::Star, &[]).unwrap_err();
            assert_eq!(err.exit_code(), 3);
        }
    }

    #[test]
    fn random_is_reproducible() {
        let a = random_instance(8, 42).unwrap();
        let b = random_instance(8, 42).unwrap();
        assert_eq!(a.start(), b.start());
        assert_eq!(a.tree().edges(), b.tree().edges());
    }
}
