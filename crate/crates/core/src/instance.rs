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

//! Token placements, colourings, weights, and the bookkeeping shared by
//! every solver: replaying swap sequences, cycle structure and distance sums.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::tree::Tree;
use crate::Vertex;

pub type Colour = u32;
pub type Weight = u64;

/// A placement of tokens: `placement[v]` is the token on vertex `v`.
///
/// Token `t` is home on vertex `t` in an uncoloured instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration(Vec<usize>);

impl Configuration {
    pub fn new(placement: Vec<usize>) -> Result<Configuration> {
        let n = placement.len();
        let mut seen = vec![false; n];
        for &t in &placement {
            if t >= n || std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidConfiguration(format!(
                    "{placement:?} is not a permutation of 0..{n}"
                )));
            }
        }
        Ok(Configuration(placement))
    }

    pub fn identity(n: usize) -> Configuration {
        Configuration((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn token_at(&self, v: Vertex) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// `positions()[t]` is the vertex holding token `t`.
    pub fn positions(&self) -> Vec<Vertex> {
        let mut pos = vec![0; self.0.len()];
        for (v, &t) in self.0.iter().enumerate() {
            pos[t] = v;
        }
        pos
    }

    pub fn swap(&mut self, u: Vertex, v: Vertex) {
        self.0.swap(u, v);
    }

    pub fn is_sorted(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &t)| v == t)
    }
}

/// Vertex colours and start-token colours. `token_colour[v]` is the colour
/// of the token that starts on vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    pub vertex_colour: Vec<Colour>,
    pub token_colour: Vec<Colour>,
}

impl Colouring {
    /// Every vertex and its start token get a private colour equal to the
    /// token's target vertex; the uncoloured problem in coloured form.
    pub fn distinct(start: &Configuration) -> Colouring {
        Colouring {
            vertex_colour: (0..start.len() as Colour).collect(),
            token_colour: start.as_slice().iter().map(|&t| t as Colour).collect(),
        }
    }

    pub fn colours(&self) -> Vec<Colour> {
        let mut cs = self.vertex_colour.clone();
        cs.sort_unstable();
        cs.dedup();
        cs
    }
}

/// Colour weights; swapping tokens of colours `c` and `d` costs
/// `w(c) + w(d)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightTable(BTreeMap<Colour, Weight>);

impl WeightTable {
    pub fn new(weights: BTreeMap<Colour, Weight>) -> WeightTable {
        WeightTable(weights)
    }

    pub fn uniform(colours: impl IntoIterator<Item = Colour>, w: Weight) -> WeightTable {
        WeightTable(colours.into_iter().map(|c| (c, w)).collect())
    }

    pub fn get(&self, c: Colour) -> Option<Weight> {
        self.0.get(&c).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Colour, Weight)> + '_ {
        self.0.iter().map(|(&c, &w)| (c, w))
    }
}

impl FromIterator<(Colour, Weight)> for WeightTable {
    fn from_iter<I: IntoIterator<Item = (Colour, Weight)>>(iter: I) -> Self {
        WeightTable(iter.into_iter().collect())
    }
}

/// A token swapping problem: tree, start placement, and optionally colours
/// and colour weights.
///
/// Without a colouring every token is distinct and must reach the vertex
/// with its own index. Without weights every swap costs 1, so cost and
/// length coincide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    tree: Tree,
    start: Configuration,
    colouring: Option<Colouring>,
    weights: Option<WeightTable>,
    // colour of each token, indexed by token label
    label_colour: Option<Vec<Colour>>,
}

impl Instance {
    pub fn new(
        tree: Tree,
        start: Configuration,
        colouring: Option<Colouring>,
        weights: Option<WeightTable>,
    ) -> Result<Instance> {
        let n = tree.n();
        if start.len() != n {
            return Err(Error::InvalidInstance(format!(
                "placement has {} entries for {} vertices",
                start.len(),
                n
            )));
        }
        let label_colour = match &colouring {
            None => None,
            Some(col) => {
                if col.vertex_colour.len() != n || col.token_colour.len() != n {
                    return Err(Error::InvalidInstance(format!(
                        "colour arrays must have length {n}"
                    )));
                }
                let mut balance: BTreeMap<Colour, (usize, usize)> = BTreeMap::new();
                for &c in &col.vertex_colour {
                    balance.entry(c).or_default().0 += 1;
                }
                for &c in &col.token_colour {
                    balance.entry(c).or_default().1 += 1;
                }
                if let Some((&colour, &(vertices, tokens))) =
                    balance.iter().find(|(_, (v, t))| v != t)
                {
                    return Err(Error::ColourCountMismatch {
                        colour,
                        vertices,
                        tokens,
                    });
                }
                let mut by_label = vec![0; n];
                for v in 0..n {
                    by_label[start.token_at(v)] = col.token_colour[v];
                }
                Some(by_label)
            }
        };
        if let Some(table) = &weights {
            let Some(col) = &colouring else {
                return Err(Error::InvalidInstance(
                    "weights need a colouring to attach to".into(),
                ));
            };
            if let Some(c) = col.vertex_colour.iter().find(|&&c| table.get(c).is_none()) {
                return Err(Error::InvalidInstance(format!("colour {c} has no weight")));
            }
        }
        Ok(Instance {
            tree,
            start,
            colouring,
            weights,
            label_colour,
        })
    }

    /// Standard token swapping: distinct tokens, unit cost.
    pub fn uncoloured(tree: Tree, start: Configuration) -> Result<Instance> {
        Instance::new(tree, start, None, None)
    }

    /// Distinct tokens with per-token weights, `weights[t]` for token `t`.
    pub fn weighted(tree: Tree, start: Configuration, weights: &[Weight]) -> Result<Instance> {
        let colouring = Colouring::distinct(&start);
        let table = weights
            .iter()
            .enumerate()
            .map(|(t, &w)| (t as Colour, w))
            .collect();
        Instance::new(tree, start, Some(colouring), Some(table))
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn start(&self) -> &Configuration {
        &self.start
    }

    pub fn colouring(&self) -> Option<&Colouring> {
        self.colouring.as_ref()
    }

    pub fn weights(&self) -> Option<&WeightTable> {
        self.weights.as_ref()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Same problem, different start placement.
    pub fn with_start(&self, start: Configuration) -> Result<Instance> {
        Instance::new(
            self.tree.clone(),
            start,
            self.colouring.clone(),
            self.weights.clone(),
        )
    }

    pub fn token_colour(&self, token: usize) -> Option<Colour> {
        self.label_colour.as_ref().map(|c| c[token])
    }

    /// Weight of a token; 1 when the instance carries no weight table.
    pub fn token_weight(&self, token: usize) -> Weight {
        match (&self.weights, &self.label_colour) {
            (Some(table), Some(colour)) => table.get(colour[token]).unwrap_or(1),
            _ => 1,
        }
    }

    /// Cost of swapping two tokens.
    pub fn swap_cost(&self, a: usize, b: usize) -> Weight {
        if self.weights.is_some() {
            self.token_weight(a) + self.token_weight(b)
        } else {
            1
        }
    }

    /// True when every token can only go to one vertex.
    pub fn has_distinct_colours(&self) -> bool {
        match &self.colouring {
            None => true,
            Some(col) => {
                let mut cs = col.vertex_colour.clone();
                cs.sort_unstable();
                cs.windows(2).all(|w| w[0] != w[1])
            }
        }
    }

    pub fn is_goal(&self, config: &Configuration) -> bool {
        match (&self.colouring, &self.label_colour) {
            (Some(col), Some(lc)) => config
                .as_slice()
                .iter()
                .zip(&col.vertex_colour)
                .all(|(&t, &c)| lc[t] == c),
            _ => config.is_sorted(),
        }
    }

    /// `targets()[t]` is the unique destination of token `t`.
    pub fn targets(&self) -> Result<Vec<Vertex>> {
        match (&self.colouring, &self.label_colour) {
            (Some(col), Some(lc)) => {
                if !self.has_distinct_colours() {
                    return Err(Error::ColouredInstance);
                }
                let by_colour: BTreeMap<Colour, Vertex> = col
                    .vertex_colour
                    .iter()
                    .enumerate()
                    .map(|(v, &c)| (c, v))
                    .collect();
                Ok(lc.iter().map(|c| by_colour[c]).collect())
            }
            _ => Ok((0..self.n()).collect()),
        }
    }

    /// For each vertex, the destination of its start token. Every solver
    /// for distinct tokens works on this array: the goal is the identity.
    pub fn permutation(&self) -> Result<Vec<Vertex>> {
        let targets = self.targets()?;
        Ok(self.start.as_slice().iter().map(|&t| targets[t]).collect())
    }

    /// `weights_by_target()[v]` is the weight of the token destined for `v`.
    pub fn weights_by_target(&self) -> Result<Vec<Weight>> {
        let targets = self.targets()?;
        let mut out = vec![1; self.n()];
        for (t, &v) in targets.iter().enumerate() {
            out[v] = self.token_weight(t);
        }
        Ok(out)
    }
}

/// An ordered list of edge swaps.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SwapSequence(Vec<(Vertex, Vertex)>);

impl SwapSequence {
    pub fn new() -> SwapSequence {
        SwapSequence(Vec::new())
    }

    pub fn push(&mut self, u: Vertex, v: Vertex) {
        self.0.push((u, v));
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[(Vertex, Vertex)] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = &(Vertex, Vertex)> {
        self.0.iter()
    }

    pub fn extend(&mut self, other: &SwapSequence) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn reversed(&self) -> SwapSequence {
        SwapSequence(self.0.iter().rev().copied().collect())
    }

    pub fn into_vec(self) -> Vec<(Vertex, Vertex)> {
        self.0
    }
}

impl From<Vec<(Vertex, Vertex)>> for SwapSequence {
    fn from(swaps: Vec<(Vertex, Vertex)>) -> Self {
        SwapSequence(swaps)
    }
}

impl FromIterator<(Vertex, Vertex)> for SwapSequence {
    fn from_iter<I: IntoIterator<Item = (Vertex, Vertex)>>(iter: I) -> Self {
        SwapSequence(iter.into_iter().collect())
    }
}

/// Result of replaying a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Applied {
    pub config: Configuration,
    pub length: usize,
    pub cost: Weight,
}

/// Replays `seq` from the start placement of `inst`.
pub fn apply_sequence(inst: &Instance, seq: &SwapSequence) -> Result<Applied> {
    let mut config = inst.start.clone();
    let mut cost = 0;
    for &(u, v) in seq.iter() {
        if !inst.tree.has_edge(u, v) {
            return Err(Error::NonEdgeSwap(u, v));
        }
        cost += inst.swap_cost(config.token_at(u), config.token_at(v));
        config.swap(u, v);
    }
    Ok(Applied {
        config,
        length: seq.len(),
        cost,
    })
}

/// Cycle classes of a star placement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarCycles {
    pub center: Vertex,
    /// Tokens of the cycle through the center token.
    pub unlocked: Vec<usize>,
    /// Every other cycle, trivial ones included.
    pub locked: Vec<Vec<usize>>,
    /// Number of locked cycles of length at least two.
    pub locked_nontrivial: usize,
    pub unhappy_leaves: usize,
    pub happy_leaves: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    /// Each cycle lists tokens `t1, t2, ...` where `t(i+1)` sits on the
    /// destination of `t(i)`; cycles start at their smallest token and are
    /// ordered by it.
    pub cycles: Vec<Vec<usize>>,
    pub count: usize,
    pub nontrivial: usize,
    pub star: Option<StarCycles>,
}

pub fn cycle_decomposition(inst: &Instance) -> Result<CycleDecomposition> {
    let targets = inst.targets()?;
    let n = inst.n();
    let start = inst.start();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    // tokens in label order, so each cycle starts at its smallest token
    for first in 0..n {
        if seen[first] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut t = first;
        while !seen[t] {
            seen[t] = true;
            cycle.push(t);
            t = start.token_at(targets[t]);
        }
        cycles.push(cycle);
    }
    let nontrivial = cycles.iter().filter(|c| c.len() > 1).count();
    let star = inst.tree().star_center().map(|center| {
        let center_token = start.token_at(center);
        let mut unlocked = Vec::new();
        let mut locked = Vec::new();
        for c in &cycles {
            if c.contains(&center_token) {
                unlocked = c.clone();
            } else {
                locked.push(c.clone());
            }
        }
        let unhappy_leaves = (0..n)
            .filter(|&v| v != center && targets[start.token_at(v)] != v)
            .count();
        StarCycles {
            center,
            locked_nontrivial: locked.iter().filter(|c| c.len() > 1).count(),
            unlocked,
            locked,
            unhappy_leaves,
            happy_leaves: n - 1 - unhappy_leaves,
        }
    });
    Ok(CycleDecomposition {
        count: cycles.len(),
        nontrivial,
        cycles,
        star,
    })
}

/// Total and weighted distance of the tokens from their destinations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistanceMetrics {
    /// Sum over tokens of the tree distance to the destination.
    pub total: u64,
    /// Same sum weighted by token weight (unit weight without a table).
    pub weighted: u64,
}

/// Needs distinct destinations; fails with `ColouredInstance` otherwise.
pub fn distance_metrics(inst: &Instance) -> Result<DistanceMetrics> {
    let targets = inst.targets()?;
    let index = inst.tree().index();
    let mut total = 0;
    let mut weighted = 0;
    for v in 0..inst.n() {
        let t = inst.start().token_at(v);
        let d = index.dist(v, targets[t]) as u64;
        total += d;
        weighted += d * inst.token_weight(t);
    }
    Ok(DistanceMetrics { total, weighted })
}

/// The weighted distance of a star placement summed over unhappy leaves:
/// each contributes the weight of its start token plus the weight of the
/// token destined for it.
pub fn star_weighted_distance_by_leaves(inst: &Instance) -> Result<u64> {
    let center = inst.tree().star_center().ok_or(Error::NotAStar)?;
    let targets = inst.targets()?;
    let mut incoming = vec![0; inst.n()];
    for (t, &v) in targets.iter().enumerate() {
        incoming[v] = t;
    }
    Ok((0..inst.n())
        .filter(|&v| v != center)
        .filter(|&v| targets[inst.start().token_at(v)] != v)
        .map(|v| inst.token_weight(inst.start().token_at(v)) + inst.token_weight(incoming[v]))
        .sum())
}
