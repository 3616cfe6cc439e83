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
use crate::exact::{Board, TokenVertexAssignment};
use crate::instance::{Instance, SwapSequence, Weight};
use crate::Vertex;

/// Number of pairs `i < j` with `a[i] > a[j]`.
pub fn inversions(a: &[usize]) -> u64 {
    let mut count = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            count += (a[i] > a[j]) as u64;
        }
    }
    count
}

/// Sum of `w[i] + w[j]` over inversions `i < j`, `a[i] > a[j]`.
pub fn weighted_inversions(a: &[usize], w: &[Weight]) -> u64 {
    let mut total = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                total += w[i] + w[j];
            }
        }
    }
    total
}

/// Optimal sort of a path: one adjacent swap per inversion.
pub fn solve_path(inst: &Instance) -> Result<SwapSequence> {
    let order = inst.tree().path_order().ok_or(Error::NotAPath)?;
    let mut board = Board::new(inst.permutation()?);
    sort_along(&mut board, &order);
    Ok(board.seq)
}

/// Colours on a path keep their relative order: the i-th token of a colour
/// goes to the i-th vertex of that colour. Each inversion of the resulting
/// permutation is paid once, at the weight of both tokens.
pub fn solve_weighted_coloured_path(inst: &Instance) -> Result<SwapSequence> {
    let order = inst.tree().path_order().ok_or(Error::NotAPath)?;
    let assignment = path_assignment(inst, &order)?;
    let mut board = Board::new(assignment.target);
    sort_along(&mut board, &order);
    Ok(board.seq)
}

pub(crate) fn path_assignment(inst: &Instance, order: &[Vertex]) -> Result<TokenVertexAssignment> {
    let Some(col) = inst.colouring() else {
        return Ok(TokenVertexAssignment {
            target: inst.permutation()?,
        });
    };
    let mut slots: std::collections::BTreeMap<_, std::collections::VecDeque<Vertex>> =
        Default::default();
    for &v in order {
        slots.entry(col.vertex_colour[v]).or_default().push_back(v);
    }
    let mut target = vec![0; inst.n()];
    for &v in order {
        let c = col.token_colour[v];
        target[v] = slots
            .get_mut(&c)
            .and_then(|q| q.pop_front())
            .ok_or_else(|| Error::InvalidInstance(format!("no vertex left for colour {c}")))?;
    }
    Ok(TokenVertexAssignment { target })
}

// Bubble sort along the path: every swap removes exactly one inversion.
pub(crate) fn sort_along(board: &mut Board, order: &[Vertex]) {
    let n = order.len();
    let mut rank = vec![0; board.perm.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    for end in (1..n).rev() {
        let mut swapped = false;
        for i in 0..end {
            let (u, v) = (order[i], order[i + 1]);
            if rank[board.perm[u]] > rank[board.perm[v]] {
                board.swap(u, v);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply_sequence, Colouring, Configuration, WeightTable};
    use crate::tree::Tree;

    #[test]
    fn reversal() {
        let inst =
            Instance::uncoloured(Tree::path(4), Configuration::new(vec![3, 2, 1, 0]).unwrap())
                .unwrap();
        let seq = solve_path(&inst).unwrap();
        assert_eq!(seq.len(), 6);
        assert!(apply_sequence(&inst, &seq).unwrap().config.is_sorted());
    }

    #[test]
    fn path_with_shuffled_labels() {
        // path 2 - 0 - 3 - 1
        let tree = Tree::new(4, vec![(2, 0), (0, 3), (3, 1)]).unwrap();
        let inst =
            Instance::uncoloured(tree, Configuration::new(vec![1, 3, 0, 2]).unwrap()).unwrap();
        let seq = solve_path(&inst).unwrap();
        assert!(apply_sequence(&inst, &seq).unwrap().config.is_sorted());
    }

    #[test]
    fn alternating_colours() {
        let (r, b) = (0, 1);
        let col = Colouring {
            vertex_colour: vec![r, b, r, b],
            token_colour: vec![b, r, b, r],
        };
        let weights = WeightTable::new([(r, 2), (b, 1)].into());
        let inst = Instance::new(
            Tree::path(4),
            Configuration::identity(4),
            Some(col),
            Some(weights),
        )
        .unwrap();
        let seq = solve_weighted_coloured_path(&inst).unwrap();
        let out = apply_sequence(&inst, &seq).unwrap();
        assert!(inst.is_goal(&out.config));
        assert_eq!((out.length, out.cost), (2, 6));
    }

    #[test]
    fn monochrome_needs_nothing() {
        let col = Colouring {
            vertex_colour: vec![7; 5],
            token_colour: vec![7; 5],
        };
        let inst = Instance::new(
            Tree::path(5),
            Configuration::new(vec![4, 3, 2, 1, 0]).unwrap(),
            Some(col),
            None,
        )
        .unwrap();
        assert!(solve_weighted_coloured_path(&inst).unwrap().is_empty());
    }

    #[test]
    fn not_a_path() {
        let inst = Instance::uncoloured(Tree::star(4), Configuration::identity(4)).unwrap();
        assert_eq!(solve_path(&inst), Err(Error::NotAPath));
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(inversions(&[0, 1, 2]), 0);
        assert_eq!(inversions(&[3, 2, 1, 0]), 6);
        assert_eq!(weighted_inversions(&[1, 0], &[2, 5]), 7);
    }
}
