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

//! Polynomial-time optimal solvers for paths, stars and brooms.

mod broom;
mod coloured;
mod path;
mod star;

pub use broom::{broom_count_formula, solve_broom, BroomTrace, PathTokenRecord};
pub use coloured::{
    solve_coloured_star, solve_weighted_coloured_star, ColourMultigraph, TokenVertexAssignment,
};
pub use path::{inversions, solve_path, solve_weighted_coloured_path, weighted_inversions};
pub(crate) use star::star_phase;
pub use star::{min_weight_star_formula, solve_star, solve_weighted_star, StarWeightSummary};

use crate::instance::SwapSequence;
use crate::Vertex;

/// Working state for the constructive solvers: `perm[v]` is the
/// destination of the token on `v`, so the goal is the identity.
#[derive(Debug, Clone)]
pub(crate) struct Board {
    pub perm: Vec<Vertex>,
    pub seq: SwapSequence,
}

impl Board {
    pub fn new(perm: Vec<Vertex>) -> Board {
        Board {
            perm,
            seq: SwapSequence::new(),
        }
    }

    pub fn swap(&mut self, u: Vertex, v: Vertex) {
        self.perm.swap(u, v);
        self.seq.push(u, v);
    }

    pub fn home(&self, v: Vertex) -> bool {
        self.perm[v] == v
    }

    pub fn is_sorted(&self) -> bool {
        self.perm.iter().enumerate().all(|(v, &t)| v == t)
    }
}
