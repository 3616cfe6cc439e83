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

use crate::error::Result;
use crate::exact::Board;
use crate::instance::{Instance, SwapSequence};
use crate::Vertex;

/// Sorts the permutation one cycle at a time.
///
/// For a cycle `t1 .. tq`, where `t(i+1)` starts on the destination of
/// `ti`, each `ti` walks toward the vertex currently holding `t(i+1)` and
/// stops one short; `tq` then walks home. Cycles go in order of their
/// smallest token, each starting at that token.
pub fn cycle_algorithm(inst: &Instance) -> Result<SwapSequence> {
    let perm = inst.permutation()?;
    let n = perm.len();
    let index = inst.tree().index();
    // tokens are named by their destination
    let mut seen = vec![false; n];
    let mut cycles: Vec<Vec<Vertex>> = Vec::new();
    for first in 0..n {
        if seen[first] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut t = first;
        while !seen[t] {
            seen[t] = true;
            cycle.push(t);
            t = perm[t];
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
    }

    let mut board = Board::new(perm);
    let mut pos = vec![0; n];
    for (v, &t) in board.perm.iter().enumerate() {
        pos[t] = v;
    }
    let walk =
        |board: &mut Board, pos: &mut Vec<Vertex>, token: Vertex, to: Vertex, stop_short: bool| {
            let route = index.path(pos[token], to);
            let steps = route.len() - 1 - stop_short as usize;
            for w in route.windows(2).take(steps) {
                board.swap(w[0], w[1]);
                pos[board.perm[w[0]]] = w[0];
                pos[board.perm[w[1]]] = w[1];
            }
        };
    for cycle in &cycles {
        for pair in cycle.windows(2) {
            let to = pos[pair[1]];
            walk(&mut board, &mut pos, pair[0], to, true);
        }
        let last = *cycle.last().expect("non-trivial cycle");
        walk(&mut board, &mut pos, last, last, false);
    }
    debug_assert!(board.is_sorted());
    Ok(board.seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply_sequence, distance_metrics, Configuration};
    use crate::tree::Tree;

    #[test]
    fn adjacent_two_cycle() {
        let inst = Instance::uncoloured(Tree::path(3), Configuration::new(vec![1, 0, 2]).unwrap())
            .unwrap();
        assert_eq!(cycle_algorithm(&inst).unwrap().len(), 1);
    }

    #[test]
    fn within_distance_sum() {
        let tree = Tree::new(7, vec![(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (5, 6)]).unwrap();
        let inst =
            Instance::uncoloured(tree, Configuration::new(vec![6, 4, 0, 5, 2, 1, 3]).unwrap())
                .unwrap();
        let seq = cycle_algorithm(&inst).unwrap();
        assert!(apply_sequence(&inst, &seq).unwrap().config.is_sorted());
        assert!(seq.len() as u64 <= distance_metrics(&inst).unwrap().total);
    }
}
