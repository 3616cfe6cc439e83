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
use crate::exact::{star_phase, Board};
use crate::instance::{Configuration, Instance, SwapSequence};
use crate::tree::Tree;
use crate::Vertex;

/// Companion length on `T_k` for even `k`.
pub fn tk_companion_length(k: u64) -> u64 {
    3 * k * k / 2 + 9 * k
}

/// Companion length on `T_{k,b}`.
pub fn tkb_companion_length(k: u64, b: u64) -> u64 {
    (b + 1) * (k * (k + 1) / 2 + 2 * k)
}

/// Swaps the leaf tokens into `side` and the side tokens onto the leaves in
/// reverse, using `C(k+1, 2) + 2k` swaps.
///
/// The center token walks out to the far end of the side path, each leaf
/// token in turn is pulled through the center to its slot, and the center
/// token walks back. Afterwards the token from `leaves[i]` sits on
/// `side[i]` and the token from `side[i]` sits on `leaves[k - 1 - i]`.
fn exchange(board: &mut Board, center: Vertex, side: &[Vertex], leaves: &[Vertex]) {
    let k = side.len();
    let mut prev = center;
    for &s in side {
        board.swap(prev, s);
        prev = s;
    }
    for i in (0..k).rev() {
        board.swap(leaves[i], center);
        let mut prev = center;
        for &s in &side[..i] {
            board.swap(prev, s);
            prev = s;
        }
    }
    for j in (0..k).rev() {
        let inner = if j == 0 { center } else { side[j - 1] };
        board.swap(inner, side[j]);
    }
}

/// The tree `T_k`: a path of `2k + 1` vertices with `k` leaves on its
/// middle vertex, and the placement that reverses the path.
///
/// Vertex 0 is the middle, `1..=k` is one half (1 next to the middle),
/// `k+1..=2k` the other half and `2k+1..=3k` the leaves. Returns the
/// instance, the four-step companion sequence and the cost of reversing the
/// path without touching the leaves.
pub fn gen_tk(k: usize) -> Result<(Instance, SwapSequence, u64)> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(Error::OddK(k));
    }
    let n = 3 * k + 1;
    let p: Vec<Vertex> = (1..=k).collect();
    let q: Vec<Vertex> = (k + 1..=2 * k).collect();
    let leaves: Vec<Vertex> = (2 * k + 1..=3 * k).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for side in [&p, &q] {
        edges.push((0, side[0]));
        edges.extend(side.windows(2).map(|w| (w[0], w[1])));
    }
    edges.extend(leaves.iter().map(|&l| (0, l)));
    let tree = Tree::new(n, edges)?;

    let mut placement: Vec<Vertex> = (0..n).collect();
    for i in 0..k {
        placement[p[i]] = q[i];
        placement[q[i]] = p[i];
    }
    let inst = Instance::uncoloured(tree, Configuration::new(placement.clone())?)?;

    let mut board = Board::new(placement);
    let reversed: Vec<Vertex> = leaves.iter().rev().copied().collect();
    exchange(&mut board, 0, &p, &leaves);
    exchange(&mut board, 0, &q, &reversed);
    exchange(&mut board, 0, &p, &leaves);
    star_phase(&mut board, 0, &leaves);
    debug_assert!(board.is_sorted());
    let reversal = (2 * k * k + k) as u64;
    Ok((inst, board.seq, reversal))
}

/// The tree `T_{k,b}`: `b` paths of `k` vertices joined to a center, plus
/// `k` leaves on the center. The tokens of each path are bound for the same
/// depth on the next path.
///
/// Vertex 0 is the center, path `j` (0-based) occupies `1 + jk ..= (j+1)k`
/// ordered outward, and the leaves are `1 + bk ..= (b+1)k`. The companion
/// rotates the tokens through the leaves in `b + 1` exchanges, which leaves
/// the leaf tokens in order only for odd `b`.
pub fn gen_tkb(k: usize, b: usize) -> Result<(Instance, SwapSequence)> {
    if b.is_multiple_of(2) || b < 3 {
        return Err(Error::EvenB(b));
    }
    let (inst, mut board) = rotate_tkb(k, b)?;
    debug_assert!(board.is_sorted());
    Ok((inst, std::mem::take(&mut board.seq)))
}

/// `T_{k,b}` for any `b >= 2`. For even `b` the rotation returns the leaf
/// tokens reversed and a star phase on the leaves puts them back, adding
/// `3 floor(k/2)` swaps.
pub fn gen_tkb_any_parity(k: usize, b: usize) -> Result<(Instance, SwapSequence)> {
    if b < 2 {
        return Err(Error::InvalidInstance("T_{k,b} needs b >= 2".into()));
    }
    let (inst, mut board) = rotate_tkb(k, b)?;
    let leaves: Vec<Vertex> = (1 + b * k..inst.n()).collect();
    star_phase(&mut board, 0, &leaves);
    debug_assert!(board.is_sorted());
    Ok((inst, std::mem::take(&mut board.seq)))
}

fn rotate_tkb(k: usize, b: usize) -> Result<(Instance, Board)> {
    if k == 0 {
        return Err(Error::InvalidInstance("T_{k,b} needs k >= 1".into()));
    }
    let n = b * k + k + 1;
    let paths: Vec<Vec<Vertex>> = (0..b)
        .map(|j| (1 + j * k..1 + (j + 1) * k).collect())
        .collect();
    let leaves: Vec<Vertex> = (1 + b * k..n).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for side in &paths {
        edges.push((0, side[0]));
        edges.extend(side.windows(2).map(|w| (w[0], w[1])));
    }
    edges.extend(leaves.iter().map(|&l| (0, l)));
    let tree = Tree::new(n, edges)?;

    let mut placement: Vec<Vertex> = (0..n).collect();
    for j in 0..b {
        for i in 0..k {
            placement[paths[j][i]] = paths[(j + 1) % b][i];
        }
    }
    let inst = Instance::uncoloured(tree, Configuration::new(placement.clone())?)?;

    let mut board = Board::new(placement);
    let reversed: Vec<Vertex> = leaves.iter().rev().copied().collect();
    for s in 0..=b {
        let side = &paths[s % b];
        let order = if s % 2 == 0 { &leaves } else { &reversed };
        exchange(&mut board, 0, side, order);
    }
    Ok((inst, board))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::cycle_algorithm;
    use crate::instance::apply_sequence;

    #[test]
    fn exchange_moves_leaves_onto_side() {
        let (inst, _, _) = gen_tk(2).unwrap();
        let mut board = Board::new(inst.start().as_slice().to_vec());
        exchange(&mut board, 0, &[1, 2], &[5, 6]);
        assert_eq!(board.seq.len(), 7);
        assert_eq!(&board.perm[1..3], &[5, 6]);
        assert_eq!(board.perm[6], 3);
        assert_eq!(board.perm[5], 4);
        assert_eq!(board.perm[0], 0);
    }

    #[test]
    fn tk_companions_sort() {
        for k in [2, 4, 10] {
            let (inst, seq, reversal) = gen_tk(k).unwrap();
            let out = apply_sequence(&inst, &seq).unwrap();
            assert!(out.config.is_sorted(), "k={k}");
            assert_eq!(out.length as u64, tk_companion_length(k as u64), "k={k}");
            assert_eq!(reversal, (2 * k * k + k) as u64);
        }
        assert_eq!(gen_tk(2).unwrap().2, 10);
        assert!(matches!(gen_tk(3), Err(Error::OddK(3))));
    }

    #[test]
    fn tkb_companions_sort() {
        for (k, b) in [(2, 3), (3, 5), (1, 3)] {
            let (inst, seq) = gen_tkb(k, b).unwrap();
            assert_eq!(inst.n(), b * k + k + 1);
            let out = apply_sequence(&inst, &seq).unwrap();
            assert!(out.config.is_sorted(), "k={k} b={b}");
            assert_eq!(out.length as u64, tkb_companion_length(k as u64, b as u64));
        }
        assert_eq!(gen_tkb(2, 3).unwrap().1.len(), 28);
        assert!(matches!(gen_tkb(2, 4), Err(Error::EvenB(4))));
    }

    #[test]
    fn even_b_needs_a_leaf_fix() {
        for (k, b) in [(2, 2), (3, 4), (4, 4), (1, 2)] {
            let (inst, seq) = gen_tkb_any_parity(k, b).unwrap();
            let out = apply_sequence(&inst, &seq).unwrap();
            assert!(out.config.is_sorted(), "k={k} b={b}");
            let extra = 3 * (k as u64 / 2);
            assert_eq!(
                out.length as u64,
                tkb_companion_length(k as u64, b as u64) + extra
            );
        }
        let odd = gen_tkb_any_parity(3, 5).unwrap().1;
        assert_eq!(odd, gen_tkb(3, 5).unwrap().1);
    }

    #[test]
    fn tkb_cycle_algorithm_count() {
        let (inst, _) = gen_tkb(2, 3).unwrap();
        assert_eq!(cycle_algorithm(&inst).unwrap().len(), 14);
    }
}
