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

use crate::error::{Error, Result};
use crate::exact::star::{star_phase, weighted_star_plan};
use crate::exact::{Board, StarWeightSummary};
use crate::instance::{Colour, Colouring, Instance, SwapSequence};
use crate::Vertex;

/// Which vertex each start token is sent to. `target[v]` is the
/// destination of the token that starts on `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenVertexAssignment {
    pub target: Vec<Vertex>,
}

impl TokenVertexAssignment {
    /// True when every token goes to a vertex of its own colour and no
    /// vertex is used twice.
    pub fn respects(&self, col: &Colouring) -> bool {
        let mut used = vec![false; self.target.len()];
        self.target.iter().enumerate().all(|(v, &t)| {
            t < used.len()
                && !std::mem::replace(&mut used[t], true)
                && col.vertex_colour[t] == col.token_colour[v]
        })
    }
}

/// One node per colour and one directed edge per star vertex, from the
/// vertex colour to the colour of its start token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColourMultigraph {
    pub colours: Vec<Colour>,
    /// `edges[v]` = (node of vertex colour, node of token colour).
    pub edges: Vec<(usize, usize)>,
    pub center: Vertex,
    /// Loops at leaves.
    pub leaf_loops: usize,
    /// Components with two or more nodes, other than the one holding the
    /// center's edge.
    pub kappa: usize,
}

impl ColourMultigraph {
    pub fn new(col: &Colouring, center: Vertex) -> ColourMultigraph {
        let mut colours: Vec<Colour> = col
            .vertex_colour
            .iter()
            .chain(&col.token_colour)
            .copied()
            .collect();
        colours.sort_unstable();
        colours.dedup();
        let node = |c: Colour| colours.binary_search(&c).expect("colour is listed");
        let edges: Vec<(usize, usize)> = (0..col.vertex_colour.len())
            .map(|v| (node(col.vertex_colour[v]), node(col.token_colour[v])))
            .collect();
        let leaf_loops = edges
            .iter()
            .enumerate()
            .filter(|&(v, &(a, b))| v != center && a == b)
            .count();

        let mut dsu = Dsu::new(colours.len());
        for &(a, b) in &edges {
            dsu.union(a, b);
        }
        let mut size = vec![0; colours.len()];
        for c in 0..colours.len() {
            size[dsu.find(c)] += 1;
        }
        let center_root = dsu.find(edges[center].0);
        let kappa = (0..colours.len())
            .filter(|&c| dsu.find(c) == c && c != center_root && size[c] > 1)
            .count();
        ColourMultigraph {
            colours,
            edges,
            center,
            leaf_loops,
            kappa,
        }
    }

    /// In-degree equals out-degree at every node.
    pub fn is_eulerian(&self) -> bool {
        let mut bal = vec![0i64; self.colours.len()];
        for &(a, b) in &self.edges {
            bal[a] += 1;
            bal[b] -= 1;
        }
        bal.iter().all(|&x| x == 0)
    }

    /// Leaf loops become happy leaves; every component of what remains is
    /// walked by an Euler tour `v1, v2, ..., vb` (edges named by star
    /// vertex) and the token on `vi` is sent to `v(i+1)`.
    pub fn assignment(&self) -> TokenVertexAssignment {
        let n = self.edges.len();
        let mut target = vec![usize::MAX; n];
        let mut out: Vec<Vec<Vertex>> = vec![Vec::new(); self.colours.len()];
        for (v, &(a, b)) in self.edges.iter().enumerate() {
            if v != self.center && a == b {
                target[v] = v;
            } else {
                out[a].push(v);
            }
        }
        let mut next = vec![0; self.colours.len()];
        for start in 0..self.colours.len() {
            if next[start] == out[start].len() {
                continue;
            }
            let tour = euler_tour(start, &out, &self.edges, &mut next);
            for (i, &v) in tour.iter().enumerate() {
                target[v] = tour[(i + 1) % tour.len()];
            }
        }
        debug_assert!(target.iter().all(|&t| t != usize::MAX));
        TokenVertexAssignment { target }
    }
}

// Hierholzer's algorithm; returns edge ids in tour order.
fn euler_tour(
    start: usize,
    out: &[Vec<Vertex>],
    edges: &[(usize, usize)],
    next: &mut [usize],
) -> Vec<Vertex> {
    let mut stack: Vec<(usize, Option<Vertex>)> = vec![(start, None)];
    let mut tour = Vec::new();
    while let Some(&(node, via)) = stack.last() {
        if next[node] < out[node].len() {
            let e = out[node][next[node]];
            next[node] += 1;
            stack.push((edges[e].1, Some(e)));
        } else {
            stack.pop();
            tour.extend(via);
        }
    }
    tour.reverse();
    tour
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Dsu {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

fn colouring_of(inst: &Instance) -> Colouring {
    match inst.colouring() {
        Some(col) => col.clone(),
        None => Colouring::distinct(inst.start()),
    }
}

/// Optimal coloured sort of a star in `(n - 1 - lambda) + kappa` swaps.
pub fn solve_coloured_star(
    inst: &Instance,
) -> Result<(TokenVertexAssignment, SwapSequence, ColourMultigraph)> {
    let center = inst.tree().star_center().ok_or(Error::NotAStar)?;
    let graph = ColourMultigraph::new(&colouring_of(inst), center);
    let assignment = graph.assignment();
    let mut board = Board::new(assignment.target.clone());
    let leaves: Vec<Vertex> = (0..inst.n()).filter(|&v| v != center).collect();
    star_phase(&mut board, center, &leaves);
    Ok((assignment, board.seq, graph))
}

/// Minimum-cost coloured sort of a star: the unweighted assignment, then
/// the weighted star strategy on it.
pub fn solve_weighted_coloured_star(inst: &Instance) -> Result<(SwapSequence, StarWeightSummary)> {
    let center = inst.tree().star_center().ok_or(Error::NotAStar)?;
    let graph = ColourMultigraph::new(&colouring_of(inst), center);
    let assignment = graph.assignment();
    let mut w = vec![0; inst.n()];
    for (v, &t) in assignment.target.iter().enumerate() {
        w[t] = inst.token_weight(inst.start().token_at(v));
    }
    Ok(weighted_star_plan(center, assignment.target, &w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply_sequence, Configuration, WeightTable};
    use crate::oracle::{optimal, SearchOptions};
    use crate::tree::Tree;

    fn coloured(vertex_colour: Vec<Colour>, token_colour: Vec<Colour>) -> Instance {
        let n = vertex_colour.len();
        let col = Colouring {
            vertex_colour,
            token_colour,
        };
        Instance::new(Tree::star(n), Configuration::identity(n), Some(col), None).unwrap()
    }

    #[test]
    fn two_loops_one_locked_component() {
        let (red, blue, green) = (0, 1, 2);
        let inst = coloured(
            vec![red, red, blue, blue, green],
            vec![blue, red, red, blue, green],
        );
        let (assignment, seq, graph) = solve_coloured_star(&inst).unwrap();
        assert_eq!((graph.leaf_loops, graph.kappa), (2, 1));
        assert!(graph.is_eulerian());
        assert!(assignment.respects(inst.colouring().unwrap()));
        assert_eq!(seq.len(), 3);
        let out = apply_sequence(&inst, &seq).unwrap();
        assert!(inst.is_goal(&out.config));
        assert_eq!(optimal(&inst, &SearchOptions::default()).unwrap().cost, 3);
    }

    #[test]
    fn monochrome() {
        let inst = coloured(vec![4; 5], vec![4; 5]);
        assert!(solve_coloured_star(&inst).unwrap().1.is_empty());
    }

    #[test]
    fn distinct_colours_match_plain_star() {
        let start = Configuration::new(vec![1, 0, 3, 2, 4]).unwrap();
        let plain = Instance::uncoloured(Tree::star(5), start.clone()).unwrap();
        let (_, seq, graph) = solve_coloured_star(&plain).unwrap();
        assert_eq!(seq.len(), 6);
        assert_eq!((graph.leaf_loops, graph.kappa), (0, 2));
    }

    #[test]
    fn weighted_coloured_against_oracle() {
        let col = Colouring {
            vertex_colour: vec![0, 0, 1, 1, 2],
            token_colour: vec![1, 1, 0, 0, 2],
        };
        let w = WeightTable::new([(0, 1), (1, 5), (2, 2)].into());
        let inst = Instance::new(
            Tree::star(5),
            Configuration::identity(5),
            Some(col),
            Some(w),
        )
        .unwrap();
        let (seq, summary) = solve_weighted_coloured_star(&inst).unwrap();
        let out = apply_sequence(&inst, &seq).unwrap();
        assert!(inst.is_goal(&out.config));
        assert_eq!(out.cost, summary.cost);
        assert_eq!(
            out.cost,
            optimal(&inst, &SearchOptions::default()).unwrap().cost
        );
    }
}
