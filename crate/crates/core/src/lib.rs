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

//! Token swapping on trees.
//!
//! Exact solvers for paths, stars (plain, weighted, coloured, weighted
//! coloured) and brooms, an exhaustive search oracle for small trees, the
//! happy-swap, cycle and Vaughan approximation algorithms, and generators
//! for several hard instance families.

pub mod approx;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod exact;
pub mod instance;
pub mod oracle;
pub mod perm;
pub mod tree;

pub type Vertex = usize;

pub use error::{Error, Result};
pub use instance::{
    apply_sequence, cycle_decomposition, distance_metrics, star_weighted_distance_by_leaves,
    Applied, Colour, Colouring, Configuration, CycleDecomposition, DistanceMetrics, Instance,
    StarCycles, SwapSequence, Weight, WeightTable,
};
pub use oracle::{all_distances, diameter, optimal, DistanceTable, SearchOptions, SearchResult};
pub use tree::{validate_tree, BroomLayout, Family, Tree, TreeIndex};
