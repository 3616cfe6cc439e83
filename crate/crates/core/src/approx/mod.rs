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

//! Approximation algorithms for arbitrary trees and upper bounds on the
//! optimum.

mod bounds;
mod cycle;
mod happy;
mod tracker;
mod vaughan;

pub use bounds::{akers_bound, chitturi_bound, BoundReport};
pub use cycle::cycle_algorithm;
pub use happy::happy_swap_algorithm;
pub use vaughan::vaughan_algorithm;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::tree_from_prufer;
    use crate::instance::{
        apply_sequence, distance_metrics, Configuration, Instance, SwapSequence,
    };
    use crate::oracle::{optimal, SearchOptions};
    use proptest::prelude::*;

    fn instance() -> impl Strategy<Value = Instance> {
        (2usize..=8)
            .prop_flat_map(|n| {
                (
                    proptest::collection::vec(0..n, n - 2),
                    Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
                )
            })
            .prop_map(|(code, p)| {
                Instance::uncoloured(tree_from_prufer(&code), Configuration::new(p).unwrap())
                    .unwrap()
            })
    }

    fn happy_leaves(inst: &Instance) -> Vec<usize> {
        let tree = inst.tree();
        (0..inst.n())
            .filter(|&v| tree.is_leaf(v) && inst.start().token_at(v) == v)
            .collect()
    }

    fn check(inst: &Instance, seq: &SwapSequence) -> u64 {
        let out = apply_sequence(inst, seq).unwrap();
        assert!(out.config.is_sorted());
        let happy = happy_leaves(inst);
        assert!(seq
            .iter()
            .all(|(u, v)| !happy.contains(u) && !happy.contains(v)));
        out.length as u64
    }

    // largest distance of a token from its own start-to-home path during
    // the replay
    fn stray(inst: &Instance, seq: &SwapSequence) -> usize {
        let index = inst.tree().index();
        let start = inst.start().positions();
        let mut config = inst.start().clone();
        let mut worst = 0;
        for &(u, v) in seq.iter() {
            config.swap(u, v);
            for w in [u, v] {
                let t = config.token_at(w);
                let off =
                    (index.dist(start[t], w) + index.dist(w, t) - index.dist(start[t], t)) / 2;
                worst = worst.max(off);
            }
        }
        worst
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn envelopes(inst in instance()) {
            let best = optimal(&inst, &SearchOptions::default()).unwrap().cost;
            let bound = akers_bound(&inst).unwrap();
            let d = distance_metrics(&inst).unwrap().total;
            prop_assert!(best <= bound.m && bound.m <= d);

            let happy = check(&inst, &happy_swap_algorithm(&inst).unwrap());
            prop_assert!(happy <= bound.m);
            prop_assert!(happy <= 2 * best);

            let seq = cycle_algorithm(&inst).unwrap();
            let cyc = check(&inst, &seq);
            prop_assert!(cyc <= d && cyc <= 2 * best);
            prop_assert!(stray(&inst, &seq) <= 1);

            let vau = check(&inst, &vaughan_algorithm(&inst).unwrap());
            prop_assert!(d <= 2 * vau && vau <= d);
        }
    }
}
