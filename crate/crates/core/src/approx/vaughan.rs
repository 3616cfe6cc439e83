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

/// Builds the sequence from both ends with three operations, each lowering
/// the distance sum by two:
///
/// * A, a happy swap, is applied at the front.
/// * B, two tokens whose last steps cross the same edge in opposite
///   directions: their destinations are exchanged and the swap is
///   appended at the back.
/// * C, the token on `u` heads through `v`, the token on `v` is home, and
///   the token bound for `u` arrives through `v`: swap at the front,
///   exchange the destinations of the tokens bound for `u` and `v`, and
///   append the same swap at the back.
///
/// A is tried first, then B, then C, each at the lowest edge index.
pub fn vaughan_algorithm(inst: &Instance) -> Result<SwapSequence> {
    let mut tr = Tracker::new(inst.tree(), inst.permutation()?);
    let mut front = SwapSequence::new();
    let mut back = Vec::new();
    loop {
        if let Some(&e) = tr.happy.first() {
            let (u, v) = tr.edge(e);
            tr.swap(u, v);
            front.push(u, v);
        } else if let Some(&e) = tr.last_steps.first() {
            let (u, v) = tr.edge(e);
            tr.exchange_targets(u, v);
            back.push((u, v));
        } else if let Some(&e) = tr.pass_through.first() {
            let (a, b) = tr.edge(e);
            let (u, v) = if tr.passes(a, b) { (a, b) } else { (b, a) };
            tr.swap(u, v);
            front.push(u, v);
            tr.exchange_targets(u, v);
            back.push((u, v));
        } else {
            break;
        }
    }
    debug_assert!(tr.is_sorted());
    for &(u, v) in back.iter().rev() {
        front.push(u, v);
    }
    Ok(front)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply_sequence, Configuration};
    use crate::tree::Tree;

    #[test]
    fn reversed_three_path() {
        let inst = Instance::uncoloured(Tree::path(3), Configuration::new(vec![2, 1, 0]).unwrap())
            .unwrap();
        let seq = vaughan_algorithm(&inst).unwrap();
        assert!((2..=4).contains(&seq.len()));
        assert!(apply_sequence(&inst, &seq).unwrap().config.is_sorted());
    }

    #[test]
    fn star_with_locked_cycle() {
        let inst =
            Instance::uncoloured(Tree::star(4), Configuration::new(vec![1, 0, 2, 3]).unwrap())
                .unwrap();
        let seq = vaughan_algorithm(&inst).unwrap();
        assert!(apply_sequence(&inst, &seq).unwrap().config.is_sorted());
        assert!(seq.iter().all(|&(u, v)| u != 2 && v != 2));
    }
}
