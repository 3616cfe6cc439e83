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

//! Incremental bookkeeping of which local operations apply on which edges.

use std::collections::BTreeSet;

use crate::tree::{Tree, TreeIndex};
use crate::Vertex;

/// Tracks, for a placement `perm` (vertex to destination), the edges on
/// which each local operation currently applies.
///
/// Per vertex `x` it keeps the first step of the token on `x` and the last
/// step of the token destined for `x`. Operations are indexed by edge and
/// the lowest edge index is served first.
pub(crate) struct Tracker<'t> {
    tree: &'t Tree,
    index: TreeIndex,
    incident: Vec<Vec<usize>>,
    pub perm: Vec<Vertex>,
    pos: Vec<Vertex>,
    // next vertex on the way from x to the destination of its token
    want: Vec<Option<Vertex>>,
    // neighbour of x through which the token destined for x arrives
    arrive: Vec<Option<Vertex>>,
    pub happy: BTreeSet<usize>,
    pub shove: BTreeSet<usize>,
    pub last_steps: BTreeSet<usize>,
    pub pass_through: BTreeSet<usize>,
}

impl<'t> Tracker<'t> {
    pub fn new(tree: &'t Tree, perm: Vec<Vertex>) -> Tracker<'t> {
        let n = tree.n();
        let mut incident = vec![Vec::new(); n];
        for (e, &(u, v)) in tree.edges().iter().enumerate() {
            incident[u].push(e);
            incident[v].push(e);
        }
        let mut pos = vec![0; n];
        for (v, &t) in perm.iter().enumerate() {
            pos[t] = v;
        }
        let mut tr = Tracker {
            tree,
            index: tree.index(),
            incident,
            perm,
            pos,
            want: vec![None; n],
            arrive: vec![None; n],
            happy: BTreeSet::new(),
            shove: BTreeSet::new(),
            last_steps: BTreeSet::new(),
            pass_through: BTreeSet::new(),
        };
        let all: Vec<Vertex> = (0..n).collect();
        tr.refresh(&all);
        tr
    }

    pub fn edge(&self, e: usize) -> (Vertex, Vertex) {
        self.tree.edges()[e]
    }

    pub fn is_sorted(&self) -> bool {
        self.perm.iter().enumerate().all(|(v, &t)| v == t)
    }

    /// Exchanges the tokens on `u` and `v`.
    pub fn swap(&mut self, u: Vertex, v: Vertex) {
        self.perm.swap(u, v);
        let (a, b) = (self.perm[u], self.perm[v]);
        self.pos[a] = u;
        self.pos[b] = v;
        self.refresh(&[u, v, a, b]);
    }

    /// Exchanges the destinations of the tokens bound for `x` and `y`.
    pub fn exchange_targets(&mut self, x: Vertex, y: Vertex) {
        let (px, py) = (self.pos[x], self.pos[y]);
        self.perm[px] = y;
        self.perm[py] = x;
        self.pos[x] = py;
        self.pos[y] = px;
        self.refresh(&[px, py, x, y]);
    }

    pub fn wants(&self, x: Vertex, y: Vertex) -> bool {
        self.want[x] == Some(y)
    }

    pub fn arrives(&self, x: Vertex, y: Vertex) -> bool {
        self.arrive[x] == Some(y)
    }

    pub fn home(&self, x: Vertex) -> bool {
        self.perm[x] == x
    }

    fn refresh(&mut self, changed: &[Vertex]) {
        for &x in changed {
            self.want[x] = self.index.next_hop(x, self.perm[x]);
            self.arrive[x] = self.index.next_hop(x, self.pos[x]);
        }
        for &x in changed {
            for i in 0..self.incident[x].len() {
                let e = self.incident[x][i];
                self.classify(e);
            }
        }
    }

    // shove in direction u -> v: the token on u wants v, whose token is home
    pub fn shoves(&self, u: Vertex, v: Vertex) -> bool {
        self.wants(u, v) && self.home(v)
    }

    // pass-through in direction u -> v: the token on u heads through v, the
    // token on v is home, and the token bound for u arrives from v
    pub fn passes(&self, u: Vertex, v: Vertex) -> bool {
        self.wants(u, v) && self.home(v) && self.arrives(u, v)
    }

    fn classify(&mut self, e: usize) {
        let (u, v) = self.edge(e);
        let flags = [
            self.wants(u, v) && self.wants(v, u),
            self.shoves(u, v) || self.shoves(v, u),
            self.arrives(u, v) && self.arrives(v, u),
            self.passes(u, v) || self.passes(v, u),
        ];
        let sets = [
            &mut self.happy,
            &mut self.shove,
            &mut self.last_steps,
            &mut self.pass_through,
        ];
        for (set, on) in sets.into_iter().zip(flags) {
            if on {
                set.insert(e);
            } else {
                set.remove(&e);
            }
        }
    }
}
