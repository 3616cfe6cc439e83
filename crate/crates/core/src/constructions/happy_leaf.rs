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

use crate::constructions::home_token;
use crate::exact::Board;
use crate::instance::{Configuration, Instance, SwapSequence};
use crate::tree::Tree;

/// A ten-vertex tree where every optimal sort moves a happy leaf.
///
/// Path `0..=8` with an extra leaf `9` on vertex 2; tokens `8, 7, .., 0`
/// along the path and token 9 already home on the leaf. Fixing the leaf
/// forces a full path reversal of 36 swaps; the companion sequence uses 34:
/// bring token 9 to vertex 0, home tokens 8 down to 3, then home 9 and 0.
pub fn gen_happy_leaf_counterexample() -> (Instance, SwapSequence) {
    let mut edges: Vec<(usize, usize)> = (0..8).map(|i| (i, i + 1)).collect();
    edges.push((2, 9));
    let tree = Tree::new(10, edges).expect("fixed tree");
    let mut placement: Vec<usize> = (0..9).rev().collect();
    placement.push(9);
    let inst = Instance::uncoloured(
        tree,
        Configuration::new(placement.clone()).expect("bijection"),
    )
    .expect("valid instance");

    let index = inst.tree().index();
    let mut board = Board::new(placement);
    for (u, v) in [(9, 2), (2, 1), (1, 0)] {
        board.swap(u, v);
    }
    for t in (3..=8).rev() {
        home_token(&mut board, &index, t);
    }
    home_token(&mut board, &index, 9);
    home_token(&mut board, &index, 0);
    debug_assert!(board.is_sorted());
    (inst, board.seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::apply_sequence;
    use crate::tree::Family;

    #[test]
    fn companion_is_34() {
        let (inst, seq) = gen_happy_leaf_counterexample();
        assert_eq!(inst.tree().family(), Family::General);
        let out = apply_sequence(&inst, &seq).unwrap();
        assert!(out.config.is_sorted());
        assert_eq!(out.length, 34);
        assert!(seq.iter().any(|&(u, v)| u == 9 || v == 9));
    }
}
