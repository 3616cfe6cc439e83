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

use proptest::prelude::*;
use tokswap::exact::{
    broom_count_formula, min_weight_star_formula, solve_broom, solve_coloured_star,
    solve_weighted_coloured_path, solve_weighted_star,
};
use tokswap::{
    apply_sequence, optimal, Colouring, Configuration, Instance, SearchOptions, Tree, WeightTable,
};

fn shuffled(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn broom_matches_oracle(
        (k, pl) in (3usize..=8).prop_flat_map(|n| (1..n, shuffled(n)))
    ) {
        let n = pl.len();
        let k = k.max(1).min(n - 1);
        let inst = Instance::uncoloured(Tree::broom(k, n), Configuration::new(pl).unwrap()).unwrap();
        let (seq, trace) = solve_broom(&inst).unwrap();
        let out = apply_sequence(&inst, &seq).unwrap();
        prop_assert!(out.config.is_sorted());
        let best = optimal(&inst, &SearchOptions::default()).unwrap().cost;
        prop_assert_eq!(seq.len() as u64, best);
        prop_assert_eq!(broom_count_formula(&trace, &inst).unwrap(), trace.phase_one);
        prop_assert_eq!(trace.total(), best);
    }

    #[test]
    fn weighted_star_matches_oracle(
        pl in (2usize..=7).prop_flat_map(shuffled),
        weights in proptest::collection::vec(1u64..12, 7),
    ) {
        let n = pl.len();
        let inst = Instance::weighted(Tree::star(n), Configuration::new(pl).unwrap(), &weights[..n]).unwrap();
        let (seq, summary) = solve_weighted_star(&inst).unwrap();
        let out = apply_sequence(&inst, &seq).unwrap();
        prop_assert!(inst.is_goal(&out.config));
        let best = optimal(&inst, &SearchOptions::default()).unwrap().cost;
        prop_assert_eq!(out.cost, best);
        prop_assert_eq!(min_weight_star_formula(&summary), best as i128);
    }

    #[test]
    fn coloured_star_matches_oracle(
        pl in (2usize..=8).prop_flat_map(shuffled),
        colours in proptest::collection::vec(0u32..3, 8),
    ) {
        let n = pl.len();
        let vertex_colour: Vec<u32> = colours[..n].to_vec();
        let token_colour: Vec<u32> = pl.iter().map(|&t| vertex_colour[t]).collect();
        let col = Colouring { vertex_colour, token_colour };
        let inst = Instance::new(Tree::star(n), Configuration::identity(n), Some(col), None).unwrap();
        let (assignment, seq, graph) = solve_coloured_star(&inst).unwrap();
        prop_assert!(assignment.respects(inst.colouring().unwrap()));
        prop_assert!(graph.is_eulerian());
        let out = apply_sequence(&inst, &seq).unwrap();
        prop_assert!(inst.is_goal(&out.config));
        let best = optimal(&inst, &SearchOptions::default()).unwrap().cost;
        prop_assert_eq!(seq.len() as u64, best);
    }

    #[test]
    fn coloured_path_matches_oracle(
        pl in (2usize..=7).prop_flat_map(shuffled),
        colours in proptest::collection::vec(0u32..3, 7),
        cw in proptest::collection::vec(1u64..6, 3),
    ) {
        let n = pl.len();
        let vertex_colour: Vec<u32> = colours[..n].to_vec();
        let token_colour: Vec<u32> = pl.iter().map(|&t| vertex_colour[t]).collect();
        let col = Colouring { vertex_colour, token_colour };
        let table: WeightTable = (0..3u32).map(|c| (c, cw[c as usize])).collect();
        let inst = Instance::new(Tree::path(n), Configuration::identity(n), Some(col), Some(table)).unwrap();
        let seq = solve_weighted_coloured_path(&inst).unwrap();
        let out = apply_sequence(&inst, &seq).unwrap();
        prop_assert!(inst.is_goal(&out.config));
        let best = optimal(&inst, &SearchOptions::default()).unwrap().cost;
        prop_assert_eq!(out.cost, best);
    }
}
