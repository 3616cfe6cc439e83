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

//! Exhaustive search over placements.
//!
//! States are placements ranked by Lehmer code. Unit-cost problems use
//! breadth-first search with byte distances; weighted ones use Dijkstra.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::{Error, Result};
use crate::instance::{Configuration, Instance, SwapSequence, Weight};
use crate::perm::{factorial, rank, unrank};
use crate::tree::Tree;
use crate::Vertex;

pub const DEFAULT_CAP: usize = 10;
pub const DEFAULT_WEIGHTED_CAP: usize = 8;

const UNSEEN: u8 = u8::MAX;

#[derive(Debug, Clone, Default)]
pub struct SearchOptions {
    /// Largest `n` accepted; `None` picks the default for the instance kind.
    pub cap: Option<usize>,
    /// No swap may touch these vertices.
    pub forbidden: Vec<Vertex>,
}

impl SearchOptions {
    pub fn forbid(forbidden: Vec<Vertex>) -> SearchOptions {
        SearchOptions {
            cap: None,
            forbidden,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchResult {
    /// Swap count, or weighted cost when the instance has weights.
    pub cost: Weight,
    pub sequence: SwapSequence,
    pub states_expanded: usize,
}

/// Optimal swap sequence for a small instance.
pub fn optimal(inst: &Instance, opts: &SearchOptions) -> Result<SearchResult> {
    let n = inst.n();
    let plain = inst.colouring().is_none();
    let cap = opts.cap.unwrap_or(if plain {
        DEFAULT_CAP
    } else {
        DEFAULT_WEIGHTED_CAP
    });
    if n > cap || n > 12 {
        return Err(Error::TooLarge {
            n,
            cap: cap.min(12),
        });
    }
    let edges: Vec<(Vertex, Vertex)> = inst
        .tree()
        .edges()
        .iter()
        .copied()
        .filter(|(u, v)| !opts.forbidden.contains(u) && !opts.forbidden.contains(v))
        .collect();
    if inst.is_weighted() {
        dijkstra(inst, &edges)
    } else {
        bfs(inst, &edges)
    }
}

fn bfs(inst: &Instance, edges: &[(Vertex, Vertex)]) -> Result<SearchResult> {
    let n = inst.n();
    let start = inst.start().as_slice();
    if inst.is_goal(inst.start()) {
        return Ok(SearchResult {
            cost: 0,
            sequence: SwapSequence::new(),
            states_expanded: 0,
        });
    }
    let mut dist = vec![UNSEEN; factorial(n)];
    let mut queue = VecDeque::new();
    dist[rank(start)] = 0;
    queue.push_back(rank(start) as u32);
    let mut cur = vec![0; n];
    let mut expanded = 0;
    while let Some(r) = queue.pop_front() {
        expanded += 1;
        unrank(r as usize, &mut cur);
        let d = dist[r as usize];
        for &(u, v) in edges {
            cur.swap(u, v);
            let s = rank(&cur);
            if dist[s] == UNSEEN {
                dist[s] = d + 1;
                if goal(inst, &cur) {
                    let sequence = walk_back(&dist, edges, &mut cur);
                    return Ok(SearchResult {
                        cost: d as Weight + 1,
                        sequence,
                        states_expanded: expanded,
                    });
                }
                queue.push_back(s as u32);
            }
            cur.swap(u, v);
        }
    }
    Err(Error::Unreachable)
}

// Walks from `cur` back to the distance-0 state through strictly decreasing
// distances; the swaps, reversed, lead from the start to `cur`.
fn walk_back(dist: &[u8], edges: &[(Vertex, Vertex)], cur: &mut [usize]) -> SwapSequence {
    let mut d = dist[rank(cur)];
    let mut back = Vec::with_capacity(d as usize);
    while d > 0 {
        let &(u, v) = edges
            .iter()
            .find(|&&(u, v)| {
                cur.swap(u, v);
                let ok = dist[rank(cur)] == d - 1;
                cur.swap(u, v);
                ok
            })
            .expect("breadth-first layers are contiguous");
        cur.swap(u, v);
        back.push((u, v));
        d -= 1;
    }
    back.reverse();
    back.into()
}

fn goal(inst: &Instance, placement: &[usize]) -> bool {
    match inst.colouring() {
        None => placement.iter().enumerate().all(|(v, &t)| v == t),
        Some(col) => placement
            .iter()
            .zip(&col.vertex_colour)
            .all(|(&t, &c)| inst.token_colour(t) == Some(c)),
    }
}

fn dijkstra(inst: &Instance, edges: &[(Vertex, Vertex)]) -> Result<SearchResult> {
    let n = inst.n();
    let size = factorial(n);
    let mut cost = vec![Weight::MAX; size];
    let mut parent = vec![u8::MAX; size];
    let mut heap = BinaryHeap::new();
    let s0 = rank(inst.start().as_slice());
    cost[s0] = 0;
    heap.push(Reverse((0, s0)));
    let mut cur = vec![0; n];
    let mut expanded = 0;
    while let Some(Reverse((c, r))) = heap.pop() {
        if c > cost[r] {
            continue;
        }
        expanded += 1;
        unrank(r, &mut cur);
        if goal(inst, &cur) {
            let mut back = Vec::new();
            let mut at = r;
            while at != s0 {
                let (u, v) = edges[parent[at] as usize];
                back.push((u, v));
                cur.swap(u, v);
                at = rank(&cur);
            }
            back.reverse();
            return Ok(SearchResult {
                cost: c,
                sequence: back.into(),
                states_expanded: expanded,
            });
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            let step = inst.swap_cost(cur[u], cur[v]);
            cur.swap(u, v);
            let s = rank(&cur);
            if c + step < cost[s] {
                cost[s] = c + step;
                parent[s] = i as u8;
                heap.push(Reverse((c + step, s)));
            }
            cur.swap(u, v);
        }
    }
    Err(Error::Unreachable)
}

/// Distance from the identity of every placement on a tree.
///
/// Swaps are involutions, so this is also the optimum for sorting any
/// placement.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    n: usize,
    dist: Vec<u8>,
}

impl DistanceTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }

    /// Optimal swap count for `placement` (token on each vertex).
    pub fn distance(&self, placement: &[usize]) -> u32 {
        self.dist[rank(placement)] as u32
    }

    pub fn distance_of(&self, config: &Configuration) -> u32 {
        self.distance(config.as_slice())
    }

    /// Distance indexed by placement rank.
    pub fn by_rank(&self, r: usize) -> u32 {
        self.dist[r] as u32
    }

    pub fn max(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0) as u32
    }
}

pub fn all_distances(tree: &Tree) -> Result<DistanceTable> {
    let n = tree.n();
    if n > DEFAULT_CAP {
        return Err(Error::TooLarge {
            n,
            cap: DEFAULT_CAP,
        });
    }
    let mut dist = vec![UNSEEN; factorial(n)];
    let mut queue = VecDeque::with_capacity(dist.len());
    let id: Vec<usize> = (0..n).collect();
    dist[rank(&id)] = 0;
    queue.push_back(rank(&id) as u32);
    let mut cur = vec![0; n];
    while let Some(r) = queue.pop_front() {
        unrank(r as usize, &mut cur);
        let d = dist[r as usize];
        for &(u, v) in tree.edges() {
            cur.swap(u, v);
            let s = rank(&cur);
            if dist[s] == UNSEEN {
                dist[s] = d + 1;
                queue.push_back(s as u32);
            }
            cur.swap(u, v);
        }
    }
    Ok(DistanceTable { n, dist })
}

/// Worst-case optimum over all placements.
pub fn diameter(tree: &Tree) -> Result<u32> {
    Ok(all_distances(tree)?.max())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply_sequence, distance_metrics};
    use crate::perm::next_permutation;

    fn uncoloured(tree: &Tree, p: &[usize]) -> Instance {
        Instance::uncoloured(tree.clone(), Configuration::new(p.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn sorted_start_costs_nothing() {
        let inst = uncoloured(&Tree::path(4), &[0, 1, 2, 3]);
        let r = optimal(&inst, &SearchOptions::default()).unwrap();
        assert_eq!(r.cost, 0);
        assert!(r.sequence.is_empty());
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&Tree::path(2)).unwrap(), 1);
        assert_eq!(diameter(&Tree::path(3)).unwrap(), 3);
        assert_eq!(diameter(&Tree::path(4)).unwrap(), 6);
        assert_eq!(diameter(&Tree::star(4)).unwrap(), 4);
        assert_eq!(diameter(&Tree::path(1)).unwrap(), 0);
    }

    #[test]
    fn optimal_agrees_with_table() {
        let trees = [Tree::path(5), Tree::star(5), Tree::broom(2, 6)];
        for tree in &trees {
            let table = all_distances(tree).unwrap();
            let mut p: Vec<usize> = (0..tree.n()).collect();
            loop {
                let inst = uncoloured(tree, &p);
                let r = optimal(&inst, &SearchOptions::default()).unwrap();
                assert_eq!(r.cost as u32, table.distance(&p));
                let out = apply_sequence(&inst, &r.sequence).unwrap();
                assert!(out.config.is_sorted());
                assert_eq!(out.length as u64, r.cost);
                let d = distance_metrics(&inst).unwrap().total;
                assert!(d <= 2 * r.cost);
                if !next_permutation(&mut p) {
                    break;
                }
            }
        }
    }

    #[test]
    fn uniform_weights_double() {
        let tree = Tree::star(5);
        let p = vec![1, 2, 0, 4, 3];
        let plain = optimal(&uncoloured(&tree, &p), &SearchOptions::default()).unwrap();
        let inst = Instance::weighted(tree, Configuration::new(p).unwrap(), &[3; 5]).unwrap();
        let weighted = optimal(&inst, &SearchOptions::default()).unwrap();
        assert_eq!(weighted.cost, 6 * plain.cost);
        assert_eq!(
            apply_sequence(&inst, &weighted.sequence).unwrap().cost,
            weighted.cost
        );
    }

    #[test]
    fn forbidding_can_disconnect() {
        let inst = uncoloured(&Tree::path(3), &[2, 1, 0]);
        let r = optimal(&inst, &SearchOptions::forbid(vec![1]));
        assert_eq!(r, Err(Error::Unreachable));
        let free = optimal(&inst, &SearchOptions::default()).unwrap();
        let fixed_end = optimal(
            &uncoloured(&Tree::path(3), &[1, 0, 2]),
            &SearchOptions::forbid(vec![2]),
        )
        .unwrap();
        assert_eq!((free.cost, fixed_end.cost), (3, 1));
    }

    #[test]
    fn cap_is_enforced() {
        let inst = uncoloured(&Tree::path(11), &(0..11).rev().collect::<Vec<_>>());
        assert!(matches!(
            optimal(&inst, &SearchOptions::default()),
            Err(Error::TooLarge { .. })
        ));
    }
}
