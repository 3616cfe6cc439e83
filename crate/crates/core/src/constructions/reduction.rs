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

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exact::Board;
use crate::instance::{Colour, Colouring, Configuration, Instance, SwapSequence, WeightTable};
use crate::tree::Tree;
use crate::Vertex;

const RED: Colour = 0;
const BLUE: Colour = 1;
const DARKGRAY: Colour = 2;
const FIRST_EDGE_COLOUR: Colour = 3;

/// Largest path the builder will allocate.
pub const MAX_PATH: usize = 50_000_000;

/// A simple graph together with a cover size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCoverInput {
    pub n: usize,
    /// Edges as `(x, y)` with `x < y`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub q: usize,
}

impl VertexCoverInput {
    /// Normalises and sorts the edge list; rejects loops, repeats and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: Vec<(usize, usize)>, q: usize) -> Result<VertexCoverInput> {
        let mut norm = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at {a}")));
            }
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort_unstable();
        if let Some(w) = norm.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        Ok(VertexCoverInput { n, edges: norm, q })
    }

    /// First uncovered edge, if any.
    pub fn check_cover(&self, cover: &[usize]) -> Result<()> {
        let set: BTreeSet<usize> = cover.iter().copied().collect();
        match self
            .edges
            .iter()
            .find(|(x, y)| !set.contains(x) && !set.contains(y))
        {
            Some(&(x, y)) => Err(Error::NotACover(x, y)),
            None => Ok(()),
        }
    }
}

/// Where the gadget sits inside the reduction tree.
///
/// Path position `p` (1-based, left to right) is vertex `p - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionLayout {
    pub path_len: usize,
    pub root: Vertex,
    pub v_vertices: Vec<Vertex>,
    /// For edge `i = (x, y)`: the E-vertex under `x`, then the one under `y`.
    pub e_vertices: Vec<[Vertex; 2]>,
}

#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub graph: VertexCoverInput,
    pub instance: Instance,
    pub layout: ReductionLayout,
    pub l_r: u64,
    pub darkgray_weight: u64,
    /// `L_r (2|E| + L_r - 1)`, the number of swaps that carry a red token.
    pub beta: i128,
    /// `|E|^2 + 3|E| - 2n`.
    pub beta_prime: i128,
    /// `beta + 2 beta_prime + 2q(1 + n^5)`.
    pub budget: i128,
    /// Cost of the canonical schedule for a cover of size `q` in which
    /// every cover vertex carries an edge:
    /// `2 beta + 2(|E|^2 + 3|E| - 2q) + 2q(1 + n^5)`.
    ///
    /// Every swap costs at least 2, so no schedule reaches `budget`.
    pub schedule_budget: u64,
}

/// Builds the weighted coloured instance for a vertex cover question.
///
/// The tree is a path of `2 L_r + 2|E| - 1` vertices with a gadget hanging
/// off position `L_r + |E|`: one V-vertex per graph vertex and, below each,
/// one E-vertex per incident edge. `l_r` defaults to `n^7`; smaller values
/// keep tests fast but void the hardness argument.
pub fn build_vc_reduction(vc: &VertexCoverInput, l_r: Option<u64>) -> Result<ReductionOutput> {
    let n = vc.n;
    let m = vc.edges.len();
    if n < 2 {
        return Err(Error::InvalidGraph("need at least two vertices".into()));
    }
    if m == 0 {
        return Err(Error::InvalidGraph("need at least one edge".into()));
    }
    let l_r = l_r.unwrap_or_else(|| (n as u64).saturating_pow(7));
    if l_r == 0 {
        return Err(Error::InvalidGraph("L_r must be positive".into()));
    }
    let path_len = (l_r as u128) * 2 + 2 * m as u128 - 1;
    if path_len > MAX_PATH as u128 {
        return Err(Error::TooLarge {
            n: usize::try_from(path_len).unwrap_or(usize::MAX),
            cap: MAX_PATH,
        });
    }
    let path_len = path_len as usize;
    let lr = l_r as usize;
    let root = lr + m - 1;
    let v_vertices: Vec<Vertex> = (0..n).map(|x| path_len + x).collect();
    let e_vertices: Vec<[Vertex; 2]> = (0..m)
        .map(|i| [path_len + n + 2 * i, path_len + n + 2 * i + 1])
        .collect();
    let total = path_len + n + 2 * m;

    let mut edges: Vec<(Vertex, Vertex)> = (1..path_len).map(|p| (p - 1, p)).collect();
    edges.extend(v_vertices.iter().map(|&v| (root, v)));
    for (i, &(x, y)) in vc.edges.iter().enumerate() {
        edges.push((v_vertices[x], e_vertices[i][0]));
        edges.push((v_vertices[y], e_vertices[i][1]));
    }
    let tree = Tree::new(total, edges)?;

    let edge_colour = |i: usize| FIRST_EDGE_COLOUR + i as Colour;
    let mut token_colour = vec![BLUE; total];
    let mut vertex_colour = vec![BLUE; total];
    token_colour[..lr].fill(RED);
    // the right block holds the edge colours in reverse order, so the
    // restoring phase can empty it nearest-first
    for j in 0..m {
        token_colour[path_len - m + j] = edge_colour(m - 1 - j);
        vertex_colour[j] = edge_colour(j);
    }
    vertex_colour[path_len - lr..path_len].fill(RED);
    for &v in &v_vertices {
        token_colour[v] = DARKGRAY;
        vertex_colour[v] = DARKGRAY;
    }
    for (i, pair) in e_vertices.iter().enumerate() {
        for &e in pair {
            token_colour[e] = edge_colour(i);
            vertex_colour[e] = edge_colour(i);
        }
    }

    let n5 = (n as u64).pow(5);
    let weights: WeightTable = (0..FIRST_EDGE_COLOUR + m as Colour)
        .map(|c| (c, if c == DARKGRAY { n5 } else { 1 }))
        .collect();
    let instance = Instance::new(
        tree,
        Configuration::identity(total),
        Some(Colouring {
            vertex_colour,
            token_colour,
        }),
        Some(weights),
    )?;

    let (lr_i, m_i, n_i, q_i, n5_i) = (l_r as i128, m as i128, n as i128, vc.q as i128, n5 as i128);
    let beta = lr_i * (2 * m_i + lr_i - 1);
    let beta_prime = m_i * m_i + 3 * m_i - 2 * n_i;
    let budget = beta + 2 * beta_prime + 2 * q_i * (1 + n5_i);
    let schedule = 2 * beta + 2 * (m_i * m_i + 3 * m_i - 2 * q_i) + 2 * q_i * (1 + n5_i);
    Ok(ReductionOutput {
        graph: vc.clone(),
        instance,
        layout: ReductionLayout {
            path_len,
            root,
            v_vertices,
            e_vertices,
        },
        l_r,
        darkgray_weight: n5,
        beta,
        beta_prime,
        budget,
        schedule_budget: u64::try_from(schedule.max(0)).unwrap_or(u64::MAX),
    })
}

fn walk(board: &mut Board, route: &[Vertex]) {
    for w in route.windows(2) {
        board.swap(w[0], w[1]);
    }
}

/// Turns a vertex cover into a sorting schedule.
///
/// Each edge is charged to a cover endpoint. A cover vertex that carries
/// edges parks its darkgray token on the E-vertex of its lowest charged
/// edge, the charged edge tokens are routed onto the path left of the root,
/// every red token slides to the right end (dragging those edge tokens to
/// the left end), the right-hand edge tokens are routed back into the
/// vacated E-vertices, and the darkgray tokens return. Cover vertices left
/// without a charged edge are not touched.
pub fn vc_to_sequence(red: &ReductionOutput, cover: &[usize]) -> Result<SwapSequence> {
    let g = &red.graph;
    if let Some(&x) = cover.iter().find(|&&x| x >= g.n) {
        return Err(Error::InvalidGraph(format!(
            "cover vertex {x} out of range"
        )));
    }
    g.check_cover(cover)?;
    let in_cover: BTreeSet<usize> = cover.iter().copied().collect();
    if in_cover.len() > g.q {
        return Err(Error::InvalidInstance(format!(
            "cover has {} vertices, budget allows {}",
            in_cover.len(),
            g.q
        )));
    }

    // forced charges first, then shared edges go to the less loaded end
    let m = g.edges.len();
    let mut owner = vec![usize::MAX; m];
    let mut load = vec![0usize; g.n];
    for (i, &(x, y)) in g.edges.iter().enumerate() {
        match (in_cover.contains(&x), in_cover.contains(&y)) {
            (true, false) => owner[i] = x,
            (false, true) => owner[i] = y,
            _ => continue,
        }
        load[owner[i]] += 1;
    }
    for (i, &(x, y)) in g.edges.iter().enumerate() {
        if owner[i] == usize::MAX {
            owner[i] = if load[y] < load[x] { y } else { x };
            load[owner[i]] += 1;
        }
    }
    let side = |i: usize| usize::from(owner[i] != g.edges[i].0);
    let mut first = vec![usize::MAX; g.n];
    for i in (0..m).rev() {
        first[owner[i]] = i;
    }

    let lay = &red.layout;
    let lr = red.l_r as usize;
    let mut board = Board::new((0..red.instance.n()).collect());
    for (x, &i) in first.iter().enumerate() {
        if i != usize::MAX {
            board.swap(lay.v_vertices[x], lay.e_vertices[i][side(i)]);
        }
    }

    // edge i lands on path position L_r + 1 + i, furthest first
    for i in 0..m {
        let v = lay.v_vertices[owner[i]];
        let mut route = Vec::new();
        if first[owner[i]] != i {
            route.push(lay.e_vertices[i][side(i)]);
        }
        route.push(v);
        route.extend((lr + i..=lay.root).rev());
        walk(&mut board, &route);
    }

    let end = lay.path_len;
    for j in (0..lr).rev() {
        let route: Vec<Vertex> = (j..=end - lr + j).collect();
        walk(&mut board, &route);
    }

    // position root + j now holds edge m - 1 - j
    for j in 0..m {
        let i = m - 1 - j;
        let mut route: Vec<Vertex> = (lay.root..=lay.root + j).rev().collect();
        route.push(lay.v_vertices[owner[i]]);
        if first[owner[i]] != i {
            route.push(lay.e_vertices[i][side(i)]);
        }
        walk(&mut board, &route);
    }

    for (x, &i) in first.iter().enumerate() {
        if i != usize::MAX {
            board.swap(lay.v_vertices[x], lay.e_vertices[i][side(i)]);
        }
    }
    Ok(board.seq)
}

/// Reads a cover off a schedule: the graph vertices whose darkgray token
/// ever moved.
pub fn sequence_to_cover(red: &ReductionOutput, seq: &SwapSequence) -> Result<Vec<usize>> {
    let inst = &red.instance;
    let lay = &red.layout;
    let mut config = inst.start().clone();
    let mut cost: u64 = 0;
    let mut moved = vec![false; red.graph.n];
    let darkgray_of = |t: usize| t.checked_sub(lay.path_len).filter(|&x| x < red.graph.n);
    for &(u, v) in seq.iter() {
        if !inst.tree().has_edge(u, v) {
            return Err(Error::NonEdgeSwap(u, v));
        }
        let (a, b) = (config.token_at(u), config.token_at(v));
        cost = cost.saturating_add(inst.swap_cost(a, b));
        for t in [a, b] {
            if let Some(x) = darkgray_of(t) {
                moved[x] = true;
            }
        }
        config.swap(u, v);
    }
    if cost > red.schedule_budget {
        return Err(Error::OverBudget {
            cost,
            budget: red.schedule_budget,
        });
    }
    if !inst.is_goal(&config) {
        return Err(Error::NotSorted);
    }
    Ok((0..red.graph.n).filter(|&x| moved[x]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::apply_sequence;

    fn triangle(q: usize) -> VertexCoverInput {
        VertexCoverInput::new(3, vec![(0, 1), (1, 2), (0, 2)], q).unwrap()
    }

    #[test]
    fn triangle_figures() {
        let red = build_vc_reduction(&triangle(2), None).unwrap();
        assert_eq!(red.l_r, 2187);
        assert_eq!(red.beta, 4_793_904);
        assert_eq!(red.beta_prime, 12);
        assert_eq!(red.budget, 4_794_904);
        assert_eq!(red.darkgray_weight, 243);
        assert_eq!(red.layout.path_len, 2 * 2187 + 5);
        assert_eq!(red.schedule_budget, 2 * 4_793_904 + 2 * 14 + 4 * 244);
    }

    #[test]
    fn small_round_trip() {
        for lr in [1, 2, 5] {
            let red = build_vc_reduction(&triangle(2), Some(lr)).unwrap();
            let seq = vc_to_sequence(&red, &[0, 1]).unwrap();
            let out = apply_sequence(&red.instance, &seq).unwrap();
            assert!(red.instance.is_goal(&out.config));
            assert_eq!(out.cost, red.schedule_budget);
            assert_eq!(sequence_to_cover(&red, &seq).unwrap(), vec![0, 1]);
        }
    }

    #[test]
    fn original_gadget_starts_happy() {
        let red = build_vc_reduction(&triangle(2), Some(3)).unwrap();
        let col = red.instance.colouring().unwrap();
        let lay = &red.layout;
        let gadget = lay
            .v_vertices
            .iter()
            .chain(lay.e_vertices.iter().flatten())
            .chain([&lay.root]);
        for &v in gadget {
            assert_eq!(col.vertex_colour[v], col.token_colour[v]);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let red = build_vc_reduction(&triangle(2), Some(2)).unwrap();
        assert!(matches!(
            vc_to_sequence(&red, &[0]),
            Err(Error::NotACover(1, 2))
        ));
        let empty = VertexCoverInput::new(3, vec![], 0).unwrap();
        assert!(build_vc_reduction(&empty, None).is_err());
        assert!(VertexCoverInput::new(3, vec![(0, 0)], 1).is_err());
        assert!(VertexCoverInput::new(3, vec![(0, 1), (1, 0)], 1).is_err());
    }

    #[test]
    fn padded_schedule_is_over_budget() {
        let red = build_vc_reduction(&triangle(2), Some(2)).unwrap();
        let mut seq = vc_to_sequence(&red, &[0, 2]).unwrap();
        seq.push(0, 1);
        seq.push(0, 1);
        assert!(matches!(
            sequence_to_cover(&red, &seq),
            Err(Error::OverBudget { .. })
        ));
    }
}
