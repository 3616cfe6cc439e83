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

use crate::error::{Error, Result};
use crate::exact::Board;
use crate::instance::{Instance, SwapSequence, Weight};
use crate::Vertex;

/// Optimal sort of a star in `n_U + l` swaps, where `l` counts the
/// non-trivial cycles avoiding the center.
pub fn solve_star(inst: &Instance) -> Result<SwapSequence> {
    let center = inst.tree().star_center().ok_or(Error::NotAStar)?;
    let mut board = Board::new(inst.permutation()?);
    let leaves: Vec<Vertex> = (0..inst.n()).filter(|&v| v != center).collect();
    star_phase(&mut board, center, &leaves);
    Ok(board.seq)
}

/// Homes the center token while it is unhomed; otherwise shoves the
/// lowest unhappy leaf into the center. `leaves` must be sorted and must
/// hold every destination of a token still away from home.
pub(crate) fn star_phase(board: &mut Board, center: Vertex, leaves: &[Vertex]) {
    // homed leaves are never touched again, so one forward scan suffices
    let mut next = 0;
    loop {
        let t = board.perm[center];
        if t != center {
            board.swap(center, t);
            continue;
        }
        while next < leaves.len() && board.home(leaves[next]) {
            next += 1;
        }
        match leaves.get(next) {
            Some(&v) => board.swap(center, v),
            None => break,
        }
    }
}

/// Parameters of the weighted star optimum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StarWeightSummary {
    pub d_w: u64,
    /// Lightest token of the cycle through the center.
    pub w_x: Weight,
    /// Lightest token not on a happy leaf.
    pub w_a: Weight,
    /// Lightest token on a happy leaf.
    pub w_h: Option<Weight>,
    /// Non-trivial cycles avoiding the center.
    pub ell: usize,
    /// 1: unlock everything with x. 2: unlock one cycle with x, the rest
    /// with a. 3: fetch h and unlock everything with it.
    pub strategy: u8,
    pub cost: u64,
}

/// `D_w + 2w(x) + 2 min{w(a)(l-1), w(h)(l+1)}`.
pub fn min_weight_star_formula(s: &StarWeightSummary) -> i128 {
    let ell = s.ell as i128;
    let via_a = s.w_a as i128 * (ell - 1);
    let term = match s.w_h {
        Some(h) => via_a.min(h as i128 * (ell + 1)),
        None => via_a,
    };
    s.d_w as i128 + 2 * s.w_x as i128 + 2 * term
}

/// Minimum-cost sort of a star where swapping tokens `s` and `t` costs
/// `w(s) + w(t)`; the cheapest of three unlocking strategies.
pub fn solve_weighted_star(inst: &Instance) -> Result<(SwapSequence, StarWeightSummary)> {
    let center = inst.tree().star_center().ok_or(Error::NotAStar)?;
    let perm = inst.permutation()?;
    let weights = inst.weights_by_target()?;
    Ok(weighted_star_plan(center, perm, &weights))
}

/// `perm[v]` is the destination of the token on `v`; `w[t]` the weight of
/// the token destined for `t`.
pub(crate) fn weighted_star_plan(
    center: Vertex,
    perm: Vec<Vertex>,
    w: &[Weight],
) -> (SwapSequence, StarWeightSummary) {
    let n = perm.len();
    let happy = |v: Vertex| v != center && perm[v] == v;

    let mut on_cycle = vec![usize::MAX; n];
    let mut cycles: Vec<Vec<Vertex>> = Vec::new();
    for s in 0..n {
        if on_cycle[s] != usize::MAX {
            continue;
        }
        let mut cyc = Vec::new();
        let mut v = s;
        while on_cycle[v] == usize::MAX {
            on_cycle[v] = cycles.len();
            cyc.push(v);
            v = perm[v];
        }
        cycles.push(cyc);
    }
    let unlocked = on_cycle[center];
    let locked: Vec<usize> = (0..cycles.len())
        .filter(|&i| i != unlocked && cycles[i].len() > 1)
        .collect();
    let ell = locked.len();

    // a cycle's vertex set equals its token set, tokens named by destination
    let lightest = |it: &mut dyn Iterator<Item = Vertex>| it.min_by_key(|&t| (w[t], t));
    let x = lightest(&mut cycles[unlocked].iter().copied()).expect("cycle is non-empty");
    let a = lightest(&mut (0..n).filter(|&v| !happy(v)).map(|v| perm[v])).expect("center");
    let h = lightest(&mut (0..n).filter(|&v| happy(v)));

    let d_w: u64 = (0..n)
        .map(|v| {
            let d = match (v == perm[v], v == center || perm[v] == center) {
                (true, _) => 0,
                (false, true) => 1,
                (false, false) => 2,
            };
            d * w[perm[v]]
        })
        .sum();

    let (wx, wa, ell_i) = (w[x] as i128, w[a] as i128, ell as i128);
    let base = d_w as i128;
    let mut options = vec![(base + 2 * wx * ell_i, 1u8)];
    if wa < wx {
        options.push((base + 2 * wx + 2 * wa * (ell_i - 1), 2));
    }
    if let Some(h) = h {
        options.push((base + 2 * wx + 2 * w[h] as i128 * (ell_i + 1), 3));
    }
    let &(cost, strategy) = options.iter().min().expect("strategy 1 always applies");

    let mut board = Board::new(perm);
    let home_center_until = |board: &mut Board, stop: Vertex| {
        while board.perm[center] != stop {
            let t = board.perm[center];
            board.swap(center, t);
        }
    };
    // carrier sits on the center; rotate a locked cycle through it and back
    let unlock = |board: &mut Board, cycle: &[Vertex], carrier: Vertex| {
        let leaf = cycle[0];
        board.swap(center, leaf);
        home_center_until(board, carrier);
    };

    home_center_until(&mut board, x);
    match strategy {
        1 => {
            for &c in &locked {
                unlock(&mut board, &cycles[c], x);
            }
        }
        2 => {
            let va = (0..n).find(|&v| board.perm[v] == a).expect("a is placed");
            let own = on_cycle[va];
            board.swap(center, va);
            for &c in locked.iter().filter(|&&c| c != own) {
                unlock(&mut board, &cycles[c], a);
            }
            home_center_until(&mut board, x);
        }
        _ => {
            let h = h.expect("strategy 3 needs a happy leaf");
            board.swap(center, h);
            for &c in &locked {
                unlock(&mut board, &cycles[c], h);
            }
            board.swap(center, h);
        }
    }
    home_center_until(&mut board, center);
    debug_assert!(board.is_sorted());

    let summary = StarWeightSummary {
        d_w,
        w_x: w[x],
        w_a: w[a],
        w_h: h.map(|h| w[h]),
        ell,
        strategy,
        cost: cost as u64,
    };
    (board.seq, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{apply_sequence, cycle_decomposition, Configuration};
    use crate::oracle::{optimal, SearchOptions};
    use crate::tree::Tree;

    fn star(p: Vec<usize>) -> Instance {
        Instance::uncoloured(Tree::star(p.len()), Configuration::new(p).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(solve_star(&star(vec![1, 0, 2, 3])).unwrap().len(), 3);
        assert_eq!(solve_star(&star(vec![3, 1, 2, 0])).unwrap().len(), 1);
        assert_eq!(solve_star(&star(vec![0, 1, 2, 3])).unwrap().len(), 0);
        assert_eq!(solve_star(&star(vec![0])).unwrap().len(), 0);
        assert_eq!(solve_star(&star(vec![1, 0])).unwrap().len(), 1);
    }

    #[test]
    fn length_is_unhappy_plus_locked() {
        let inst = star(vec![1, 0, 3, 2, 5, 4, 6]);
        let seq = solve_star(&inst).unwrap();
        let s = cycle_decomposition(&inst).unwrap().star.unwrap();
        assert_eq!(seq.len(), s.unhappy_leaves + s.locked_nontrivial);
        assert!(apply_sequence(&inst, &seq).unwrap().config.is_sorted());
    }

    #[test]
    fn not_a_star() {
        let inst = Instance::uncoloured(Tree::path(4), Configuration::identity(4)).unwrap();
        assert_eq!(solve_star(&inst), Err(Error::NotAStar));
    }

    fn weighted(p: Vec<usize>, w: &[Weight]) -> Instance {
        Instance::weighted(Tree::star(p.len()), Configuration::new(p).unwrap(), w).unwrap()
    }

    fn check_weighted(inst: &Instance) -> StarWeightSummary {
        let (seq, s) = solve_weighted_star(inst).unwrap();
        let out = apply_sequence(inst, &seq).unwrap();
        assert!(out.config.is_sorted());
        assert_eq!(out.cost, s.cost);
        assert_eq!(min_weight_star_formula(&s), s.cost as i128);
        let best = optimal(inst, &SearchOptions::default()).unwrap();
        assert_eq!(best.cost, s.cost, "{inst:?}");
        s
    }

    #[test]
    fn each_strategy_wins_somewhere() {
        // two locked 2-cycles, light center token
        let s = check_weighted(&weighted(vec![1, 0, 3, 2, 4], &[5, 5, 5, 5, 1]));
        assert_eq!(s.strategy, 1);
        // a light token in one locked cycle
        let s = check_weighted(&weighted(vec![1, 0, 3, 2, 5, 4, 6], &[1, 9, 9, 9, 9, 9, 9]));
        assert_eq!(s.strategy, 2);
        // a very light happy leaf
        let s = check_weighted(&weighted(vec![1, 0, 3, 2, 4, 5], &[9, 9, 9, 9, 1, 9]));
        assert_eq!(s.strategy, 3);
    }

    #[test]
    fn no_locked_cycles_costs_distance() {
        let s = check_weighted(&weighted(vec![3, 0, 1, 2], &[2, 3, 4, 5]));
        assert_eq!(s.ell, 0);
        assert_eq!(s.cost, s.d_w);
    }
}
