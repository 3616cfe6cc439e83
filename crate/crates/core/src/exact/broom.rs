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
use crate::exact::star::star_phase;
use crate::exact::Board;
use crate::instance::{cycle_decomposition, Instance, SwapSequence};
use crate::tree::BroomLayout;
use crate::Vertex;

/// Start-placement figures for one path token.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathTokenRecord {
    /// Destination vertex of the token.
    pub home: Vertex,
    /// Distance from a star leaf to `home`.
    pub d: u64,
    /// Smaller tokens initially to its right.
    pub r: u64,
}

/// Counters gathered while solving a broom.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BroomTrace {
    pub path_tokens: Vec<PathTokenRecord>,
    /// Unhomed star tokens outside leaf-only cycles.
    pub star_unhomed: u64,
    /// Times a centered star chain delivered the largest path token.
    pub lucky: u64,
    /// Swaps spent homing path tokens.
    pub phase_one: u64,
    /// Tokens and count of non-trivial cycles lying wholly on star leaves.
    pub star_cycle_tokens: u64,
    pub star_cycles: u64,
    /// Swaps spent on the final star.
    pub phase_two: u64,
}

impl BroomTrace {
    pub fn total(&self) -> u64 {
        self.phase_one + self.phase_two
    }
}

struct Geometry {
    layout: BroomLayout,
    // spine index of each spine vertex, None on leaves
    spine_index: Vec<Option<usize>>,
}

impl Geometry {
    fn new(layout: BroomLayout, n: usize) -> Geometry {
        let mut spine_index = vec![None; n];
        for (i, &v) in layout.spine.iter().enumerate() {
            spine_index[v] = Some(i);
        }
        Geometry {
            layout,
            spine_index,
        }
    }

    fn center(&self) -> Vertex {
        self.layout.center()
    }

    fn is_leaf(&self, v: Vertex) -> bool {
        self.spine_index[v].is_none()
    }

    // leaves sit in column 0, spine vertex i in column i + 1; star tokens
    // rank below every path token, path tokens by the column of their home
    fn column(&self, v: Vertex) -> u64 {
        self.spine_index[v].map_or(0, |i| i as u64 + 1)
    }

    fn start_figures(&self, perm: &[Vertex]) -> (Vec<PathTokenRecord>, u64, u64, u64) {
        let n = perm.len();
        let mut records = Vec::new();
        for &home in &self.layout.spine {
            let at = (0..n)
                .find(|&v| perm[v] == home)
                .expect("perm is a bijection");
            let key = self.column(home);
            let r = (0..n)
                .filter(|&u| self.column(u) > self.column(at) && self.column(perm[u]) < key)
                .count() as u64;
            records.push(PathTokenRecord { home, d: key, r });
        }
        let mut seen = vec![false; n];
        let (mut cycle_tokens, mut cycles) = (0, 0);
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut members = Vec::new();
            let mut v = s;
            while !seen[v] {
                seen[v] = true;
                members.push(v);
                v = perm[v];
            }
            if members.len() > 1 && members.iter().all(|&v| self.is_leaf(v)) {
                cycle_tokens += members.len() as u64;
                cycles += 1;
            }
        }
        let unhomed_star = self
            .layout
            .leaves
            .iter()
            .filter(|&&leaf| perm[leaf] != leaf)
            .count() as u64;
        (records, unhomed_star - cycle_tokens, cycle_tokens, cycles)
    }
}

/// Optimal sort of a broom: home the path tokens from the far end inward,
/// using centered star chains when they deliver the next one, then solve
/// the star that is left.
///
/// A broom without a handle is solved as a plain star; a path is a broom
/// with no star leaves.
pub fn solve_broom(inst: &Instance) -> Result<(SwapSequence, BroomTrace)> {
    let layout = inst.tree().broom_layout().ok_or(Error::NotABroom)?;
    let perm = inst.permutation()?;
    let mut leaves = layout.leaves.clone();
    leaves.sort_unstable();
    let geo = Geometry::new(layout, inst.n());
    let center = geo.center();
    let mut board = Board::new(perm.clone());

    if geo.layout.is_star() {
        star_phase(&mut board, center, &leaves);
        let star = cycle_decomposition(inst)?
            .star
            .expect("a star has a center");
        let trace = BroomTrace {
            star_cycle_tokens: star.unhappy_leaves as u64,
            star_cycles: star.locked_nontrivial as u64,
            phase_two: board.seq.len() as u64,
            ..BroomTrace::default()
        };
        return Ok((board.seq, trace));
    }

    let (path_tokens, star_unhomed, star_cycle_tokens, star_cycles) = geo.start_figures(&perm);
    let spine = &geo.layout.spine;
    let mut pos = vec![0; perm.len()];
    for (v, &t) in perm.iter().enumerate() {
        pos[t] = v;
    }
    let swap = |board: &mut Board, pos: &mut [Vertex], u: Vertex, v: Vertex| {
        board.swap(u, v);
        pos[board.perm[u]] = u;
        pos[board.perm[v]] = v;
    };

    let mut lucky = 0;
    let mut i = spine.len();
    loop {
        // everything past the pointer is home for good
        while i > 0 && board.home(spine[i - 1]) {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        let p = spine[i - 1];
        if geo.is_leaf(pos[p]) {
            let mut chain = Vec::new();
            let mut t = board.perm[center];
            let found = loop {
                if !geo.is_leaf(t) {
                    break false;
                }
                chain.push(t);
                let next = board.perm[t];
                if next == p {
                    break true;
                }
                t = next;
            };
            if found {
                for &leaf in &chain {
                    swap(&mut board, &mut pos, center, leaf);
                }
                lucky += 1;
            }
        }
        while pos[p] != p {
            let at = pos[p];
            let step = match geo.spine_index[at] {
                None => center,
                Some(j) => spine[j + 1],
            };
            swap(&mut board, &mut pos, at, step);
        }
    }
    let phase_one = board.seq.len() as u64;
    star_phase(&mut board, center, &leaves);
    debug_assert!(board.is_sorted());
    let trace = BroomTrace {
        path_tokens,
        star_unhomed,
        lucky,
        phase_one,
        star_cycle_tokens,
        star_cycles,
        phase_two: board.seq.len() as u64 - phase_one,
    };
    Ok((board.seq, trace))
}

/// Recomputes the phase-one swap count `sum min(d, r) + S_U - L` from the
/// start placement and the traced `L`, and checks it and the star-phase
/// count `n_S + l_S` against the trace. Returns the phase-one count.
pub fn broom_count_formula(trace: &BroomTrace, inst: &Instance) -> Result<u64> {
    let layout = inst.tree().broom_layout().ok_or(Error::NotABroom)?;
    let perm = inst.permutation()?;
    let check = |formula: u64, measured: u64| {
        if formula == measured {
            Ok(())
        } else {
            Err(Error::TraceMismatch { formula, measured })
        }
    };
    if layout.is_star() {
        let star = cycle_decomposition(inst)?
            .star
            .expect("a star has a center");
        check(0, trace.phase_one)?;
        check(
            (star.unhappy_leaves + star.locked_nontrivial) as u64,
            trace.phase_two,
        )?;
        return Ok(0);
    }
    let geo = Geometry::new(layout, inst.n());
    let (records, star_unhomed, cycle_tokens, cycles) = geo.start_figures(&perm);
    let w = records.iter().map(|p| p.d.min(p.r)).sum::<u64>() as i64 + star_unhomed as i64
        - trace.lucky as i64;
    let w = u64::try_from(w).map_err(|_| Error::TraceMismatch {
        formula: 0,
        measured: trace.phase_one,
    })?;
    check(w, trace.phase_one)?;
    check(cycle_tokens + cycles, trace.phase_two)?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{inversions, solve_star};
    use crate::instance::{apply_sequence, Configuration};
    use crate::oracle::all_distances;
    use crate::perm::next_permutation;
    use crate::tree::Tree;

    fn sweep(tree: &Tree) {
        let table = all_distances(tree).unwrap();
        let mut p: Vec<usize> = (0..tree.n()).collect();
        loop {
            let inst =
                Instance::uncoloured(tree.clone(), Configuration::new(p.clone()).unwrap()).unwrap();
            let (seq, trace) = solve_broom(&inst).unwrap();
            assert_eq!(seq.len() as u32, table.distance(&p), "{p:?}");
            assert_eq!(trace.total(), seq.len() as u64);
            assert!(apply_sequence(&inst, &seq).unwrap().config.is_sorted());
            broom_count_formula(&trace, &inst).unwrap();
            if !next_permutation(&mut p) {
                break;
            }
        }
    }

    #[test]
    fn small_brooms_are_optimal() {
        sweep(&Tree::broom(3, 6));
        sweep(&Tree::broom(3, 7));
        sweep(&Tree::broom(4, 7));
    }

    #[test]
    fn path_is_inversions() {
        let p = vec![4, 2, 5, 0, 1, 3];
        let inst =
            Instance::uncoloured(Tree::path(6), Configuration::new(p.clone()).unwrap()).unwrap();
        let (seq, trace) = solve_broom(&inst).unwrap();
        assert_eq!(seq.len() as u64, inversions(&p));
        assert_eq!((trace.star_unhomed, trace.lucky), (0, 0));
        let w: u64 = trace.path_tokens.iter().map(|r| r.d.min(r.r)).sum();
        assert_eq!(broom_count_formula(&trace, &inst).unwrap(), w);
    }

    #[test]
    fn star_broom_matches_star() {
        let inst = Instance::uncoloured(
            Tree::star(5),
            Configuration::new(vec![1, 0, 3, 2, 4]).unwrap(),
        )
        .unwrap();
        let (seq, trace) = solve_broom(&inst).unwrap();
        assert_eq!(seq, solve_star(&inst).unwrap());
        assert_eq!(broom_count_formula(&trace, &inst).unwrap(), 0);
    }

    #[test]
    fn never_moves_happy_leaves() {
        // leaves 0..3, center 3, handle 4, 5; leaf 1 happy
        let tree = Tree::broom(3, 6);
        let inst = Instance::uncoloured(tree, Configuration::new(vec![5, 1, 4, 0, 3, 2]).unwrap())
            .unwrap();
        let (seq, _) = solve_broom(&inst).unwrap();
        assert!(seq.iter().all(|&(u, v)| u != 1 && v != 1));
    }

    #[test]
    fn general_tree_rejected() {
        let tree = Tree::new(7, vec![(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)]).unwrap();
        let inst = Instance::uncoloured(tree, Configuration::identity(7)).unwrap();
        assert!(matches!(solve_broom(&inst), Err(Error::NotABroom)));
    }
}
