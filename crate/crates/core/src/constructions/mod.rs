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

//! Hard instance families with certified companion sequences.

mod happy_leaf;
mod lower_bounds;
mod reduction;

pub use happy_leaf::gen_happy_leaf_counterexample;
pub use lower_bounds::{
    gen_tk, gen_tkb, gen_tkb_any_parity, tk_companion_length, tkb_companion_length,
};
pub use reduction::{
    build_vc_reduction, sequence_to_cover, vc_to_sequence, ReductionLayout, ReductionOutput,
    VertexCoverInput,
};

use crate::exact::Board;
use crate::tree::TreeIndex;
use crate::Vertex;

// Walks the token bound for `dest` home along its tree path.
fn home_token(board: &mut Board, index: &TreeIndex, dest: Vertex) {
    let at = board
        .perm
        .iter()
        .position(|&t| t == dest)
        .expect("every destination is held");
    let route = index.path(at, dest);
    for w in route.windows(2) {
        board.swap(w[0], w[1]);
    }
}
