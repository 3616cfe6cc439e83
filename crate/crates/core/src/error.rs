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

use thiserror::Error;

use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("colour {colour} has {vertices} vertices but {tokens} tokens")]
    ColourCountMismatch {
        colour: u32,
        vertices: usize,
        tokens: usize,
    },
    #[error("({0}, {1}) is not an edge of the tree")]
    NonEdgeSwap(Vertex, Vertex),
    #[error("token permutation is undefined: some colour is shared by several tokens")]
    ColouredInstance,
    #[error("instance has {n} vertices, above the search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("goal configuration is unreachable under the given restrictions")]
    Unreachable,
    #[error("tree is not a path")]
    NotAPath,
    #[error("tree is not a star")]
    NotAStar,
    #[error("tree is not a broom")]
    NotABroom,
    #[error("swap-count formula gives {formula} but the solver performed {measured} swaps")]
    TraceMismatch { formula: u64, measured: u64 },
    #[error("k must be even and at least 2, got {0}")]
    OddK(usize),
    #[error("b must be odd and at least 3, got {0}")]
    EvenB(usize),
    #[error("invalid vertex cover input: {0}")]
    InvalidGraph(String),
    #[error("edge ({0}, {1}) is not covered")]
    NotACover(usize, usize),
    #[error("sequence cost {cost} exceeds budget {budget}")]
    OverBudget { cost: u64, budget: u64 },
    #[error("sequence does not reach a goal configuration")]
    NotSorted,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
