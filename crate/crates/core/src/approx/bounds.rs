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
use crate::instance::{cycle_decomposition, distance_metrics, Instance};
use crate::tree::Tree;

/// Distance sum `d`, cycle count `c` and `m = d - (n - c)`, an upper bound
/// on the optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub d: u64,
    pub c: u64,
    pub m: u64,
    pub gamma: Option<u64>,
}

pub fn akers_bound(inst: &Instance) -> Result<BoundReport> {
    let d = distance_metrics(inst)?.total;
    let c = cycle_decomposition(inst)?.count as u64;
    Ok(BoundReport {
        d,
        c,
        m: d - (inst.n() as u64 - c),
        gamma: None,
    })
}

/// Recursive upper bound on the worst-case optimum over all placements:
/// a star contributes its diameter `floor(3(n - 1) / 2)`; otherwise take
/// the vertex with the largest distance sum (a leaf, lowest index on ties),
/// add its eccentricity, delete it and recurse.
pub fn chitturi_bound(tree: &Tree) -> u64 {
    let mut tree = tree.clone();
    let mut gamma = 0;
    loop {
        if tree.star_center().is_some() {
            return gamma + 3 * (tree.n() as u64 - 1) / 2;
        }
        let (v, ecc) = (0..tree.n())
            .map(|v| {
                let dist = tree.distances_from(v);
                let sum: usize = dist.iter().sum();
                (sum, v, *dist.iter().max().expect("non-empty"))
            })
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v, ecc)| (v, ecc as u64))
            .expect("non-empty tree");
        gamma += ecc;
        tree = tree
            .remove_vertices(&[v])
            .expect("a vertex of largest distance sum is a leaf")
            .0;
    }
}
