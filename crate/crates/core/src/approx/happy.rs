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

use crate::approx::tracker::Tracker;
use crate::error::Result;
use crate::instance::{Instance, SwapSequence};

/// Happy swaps while any exist, otherwise a shove; lowest edge index first.
///
/// Each operation lowers `D - (n - c)` by at least one.
pub fn happy_swap_algorithm(inst: &Instance) -> Result<SwapSequence> {
    let mut tr = Tracker::new(inst.tree(), inst.permutation()?);
    let mut seq = SwapSequence::new();
    while let Some(&e) = tr.happy.first().or_else(|| tr.shove.first()) {
        let (u, v) = tr.edge(e);
        tr.swap(u, v);
        seq.push(u, v);
    }
    debug_assert!(tr.is_sorted());
    Ok(seq)
}
