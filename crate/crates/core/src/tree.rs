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

//! Host trees, their classification into the tractable families, and the
//! path queries (next hop, distance) every solver needs.

use std::collections::{HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::Vertex;

/// The most specific family a tree belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Star,
    Broom,
    General,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Family::Path => "path",
            Family::Star => "star",
            Family::Broom => "broom",
            Family::General => "general-tree",
        };
        f.write_str(name)
    }
}

/// An undirected tree on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    // parent in the BFS tree rooted at 0; used for O(1) adjacency tests
    parent: Vec<Vertex>,
}

/// Star leaves, center, and the path hanging off the center.
///
/// `spine[0]` is the center; the remaining spine vertices run away from the
/// star. A path has no star leaves and its spine is the whole path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BroomLayout {
    pub leaves: Vec<Vertex>,
    pub spine: Vec<Vertex>,
}

impl BroomLayout {
    pub fn center(&self) -> Vertex {
        self.spine[0]
    }

    /// True when the broom has no path beyond its center.
    pub fn is_star(&self) -> bool {
        self.spine.len() == 1 && !self.leaves.is_empty()
    }
}

/// Classifies `edges` on `n` vertices, rejecting anything that is not a tree.
pub fn validate_tree(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Family> {
    Tree::new(n, edges.to_vec()).map(|t| t.family())
}

const NO_PARENT: Vertex = usize::MAX;

impl Tree {
    pub fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> Result<Tree> {
        if n == 0 {
            return Err(Error::NotATree("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} vertices need {} edges, got {}",
                n,
                n - 1,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= n || v >= n {
                return Err(Error::NotATree(format!(
                    "edge ({u}, {v}) has a vertex >= {n}"
                )));
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::NotATree(format!("duplicate edge ({u}, {v})")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut parent = vec![NO_PARENT; n];
        let mut visited = vec![false; n];
        let mut queue = VecDeque::from([0]);
        visited[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !visited[v] {
                    visited[v] = true;
                    parent[v] = u;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        if count != n {
            return Err(Error::NotATree(format!(
                "disconnected: only {count} of {n} vertices reachable from 0"
            )));
        }
        Ok(Tree {
            n,
            edges,
            adj,
            parent,
        })
    }

    /// The path `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Tree {
        Tree::new(n, (1..n).map(|v| (v - 1, v)).collect()).expect("path is a tree")
    }

    /// The star with leaves `0..n-1` and center `n-1`.
    pub fn star(n: usize) -> Tree {
        Tree::new(n, (0..n.saturating_sub(1)).map(|v| (v, n - 1)).collect())
            .expect("star is a tree")
    }

    /// A broom in canonical labelling: star leaves `0..k`, center `k`, and
    /// the path `k, k+1, ..., n-1`.
    pub fn broom(k: usize, n: usize) -> Tree {
        assert!(k < n, "broom needs its center");
        let mut edges: Vec<_> = (0..k).map(|v| (v, k)).collect();
        edges.extend((k + 1..n).map(|v| (v - 1, v)));
        Tree::new(n, edges).expect("broom is a tree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && u != v && (self.parent[u] == v || self.parent[v] == u)
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.adj[v].len() == 1
    }

    pub fn leaves(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn family(&self) -> Family {
        if self.is_path() {
            Family::Path
        } else if self.star_center().is_some() {
            Family::Star
        } else if self.broom_layout().is_some() {
            Family::Broom
        } else {
            Family::General
        }
    }

    pub fn is_path(&self) -> bool {
        self.adj.iter().all(|a| a.len() <= 2)
    }

    /// Vertices of a path tree in order, starting from the lower-indexed end.
    pub fn path_order(&self) -> Option<Vec<Vertex>> {
        if !self.is_path() {
            return None;
        }
        let start = (0..self.n).find(|&v| self.adj[v].len() <= 1)?;
        let mut order = Vec::with_capacity(self.n);
        let mut prev = NO_PARENT;
        let mut cur = start;
        loop {
            order.push(cur);
            match self.adj[cur].iter().find(|&&w| w != prev) {
                Some(&next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
        Some(order)
    }

    /// The center of a star: the unique vertex of degree above one, or
    /// vertex 0 when `n <= 2`.
    pub fn star_center(&self) -> Option<Vertex> {
        if self.n <= 2 {
            return Some(0);
        }
        let mut inner = (0..self.n).filter(|&v| self.adj[v].len() > 1);
        let c = inner.next()?;
        inner.next().is_none().then_some(c)
    }

    /// Star leaves and spine of a broom; `None` when the tree is not a broom.
    ///
    /// Paths come back with no star leaves, stars with a one-vertex spine.
    pub fn broom_layout(&self) -> Option<BroomLayout> {
        if let Some(spine) = self.path_order() {
            return Some(BroomLayout {
                leaves: Vec::new(),
                spine,
            });
        }
        if let Some(c) = self.star_center() {
            return Some(BroomLayout {
                leaves: self.adj[c].clone(),
                spine: vec![c],
            });
        }
        let mut hubs = (0..self.n).filter(|&v| self.adj[v].len() >= 3);
        let c = hubs.next()?;
        if hubs.next().is_some() {
            return None;
        }
        let (leaves, handle): (Vec<Vertex>, Vec<Vertex>) =
            self.adj[c].iter().partition(|&&v| self.is_leaf(v));
        if handle.len() != 1 {
            return None;
        }
        let mut spine = vec![c];
        let mut prev = c;
        let mut cur = handle[0];
        loop {
            spine.push(cur);
            match self.adj[cur].iter().find(|&&w| w != prev) {
                Some(&next) => {
                    prev = cur;
                    cur = next;
                }
                None => break,
            }
        }
        Some(BroomLayout { leaves, spine })
    }

    /// Breadth-first distances from `source`.
    pub fn distances_from(&self, source: Vertex) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Deletes `removed` (which must leave a connected remainder) and
    /// relabels the survivors `0..` in increasing order of their old index.
    ///
    /// Returns the new tree and the old-to-new map.
    pub fn remove_vertices(&self, removed: &[Vertex]) -> Result<(Tree, Vec<Option<Vertex>>)> {
        let mut map = vec![None; self.n];
        let mut next = 0;
        for (v, slot) in map.iter_mut().enumerate() {
            if !removed.contains(&v) {
                *slot = Some(next);
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        Ok((Tree::new(next, edges)?, map))
    }

    /// Applies the vertex relabelling `sigma` (old vertex `v` becomes
    /// `sigma[v]`).
    pub fn relabel(&self, sigma: &[Vertex]) -> Tree {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (sigma[u], sigma[v]))
            .collect();
        Tree::new(self.n, edges).expect("relabelling preserves tree structure")
    }

    pub fn index(&self) -> TreeIndex {
        TreeIndex::new(self)
    }
}

/// Rooted view of a tree answering next-hop and distance queries in
/// logarithmic time.
#[derive(Debug, Clone)]
pub struct TreeIndex {
    parent: Vec<Vertex>,
    depth: Vec<usize>,
    tin: Vec<usize>,
    tout: Vec<usize>,
    // children in DFS order, so their `tin` values are increasing
    children: Vec<Vec<Vertex>>,
    // up[j][v] is the 2^j-th ancestor of v (the root maps to itself)
    up: Vec<Vec<Vertex>>,
}

impl TreeIndex {
    pub fn new(tree: &Tree) -> TreeIndex {
        let n = tree.n();
        let mut parent = vec![0; n];
        let mut depth = vec![0; n];
        let mut tin = vec![0; n];
        let mut tout = vec![0; n];
        let mut children = vec![Vec::new(); n];
        let mut clock = 0;
        // iterative DFS: (vertex, next neighbour position)
        let mut stack = vec![(0usize, 0usize)];
        tin[0] = clock;
        clock += 1;
        while let Some(&mut (u, ref mut i)) = stack.last_mut() {
            if let Some(&v) = tree.adj[u].get(*i) {
                *i += 1;
                if u != 0 && v == parent[u] {
                    continue;
                }
                parent[v] = u;
                depth[v] = depth[u] + 1;
                children[u].push(v);
                tin[v] = clock;
                clock += 1;
                stack.push((v, 0));
            } else {
                tout[u] = clock;
                stack.pop();
            }
        }
        let levels = (usize::BITS - n.leading_zeros()).max(1) as usize;
        let mut up = vec![parent.clone()];
        for j in 1..levels {
            let prev = &up[j - 1];
            let next: Vec<Vertex> = (0..n).map(|v| prev[prev[v]]).collect();
            up.push(next);
        }
        TreeIndex {
            parent,
            depth,
            tin,
            tout,
            children,
            up,
        }
    }

    fn is_ancestor(&self, a: Vertex, b: Vertex) -> bool {
        self.tin[a] <= self.tin[b] && self.tout[b] <= self.tout[a]
    }

    pub fn lca(&self, u: Vertex, v: Vertex) -> Vertex {
        if self.is_ancestor(u, v) {
            return u;
        }
        if self.is_ancestor(v, u) {
            return v;
        }
        let mut a = u;
        for level in self.up.iter().rev() {
            if !self.is_ancestor(level[a], v) {
                a = level[a];
            }
        }
        self.parent[a]
    }

    pub fn dist(&self, u: Vertex, v: Vertex) -> usize {
        self.depth[u] + self.depth[v] - 2 * self.depth[self.lca(u, v)]
    }

    /// The neighbour of `from` on the path towards `to`, or `None` when
    /// they coincide.
    pub fn next_hop(&self, from: Vertex, to: Vertex) -> Option<Vertex> {
        if from == to {
            return None;
        }
        if self.is_ancestor(from, to) {
            let kids = &self.children[from];
            let i = kids.partition_point(|&c| self.tin[c] <= self.tin[to]);
            Some(kids[i - 1])
        } else {
            Some(self.parent[from])
        }
    }

    /// Vertices on the path from `from` to `to`, both ends included.
    pub fn path(&self, from: Vertex, to: Vertex) -> Vec<Vertex> {
        let mut out = vec![from];
        let mut cur = from;
        while let Some(next) = self.next_hop(cur, to) {
            out.push(next);
            cur = next;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classifies_small_examples() {
        assert_eq!(validate_tree(2, &[(0, 1)]).unwrap(), Family::Path);
        assert_eq!(validate_tree(1, &[]).unwrap(), Family::Path);
        assert_eq!(
            validate_tree(4, &[(0, 3), (1, 3), (2, 3)]).unwrap(),
            Family::Star
        );
        // path v1..v9 with an extra leaf v10 on v3
        let mut edges: Vec<_> = (1..9).map(|v| (v - 1, v)).collect();
        edges.push((2, 9));
        assert_eq!(validate_tree(10, &edges).unwrap(), Family::General);
        assert_eq!(Tree::broom(3, 6).family(), Family::Broom);
    }

    #[test]
    fn rejects_non_trees() {
        assert!(matches!(
            validate_tree(3, &[(0, 1)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            validate_tree(4, &[(0, 1), (1, 0), (2, 3)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            validate_tree(4, &[(0, 1), (1, 2), (2, 0)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            validate_tree(3, &[(0, 0), (1, 2)]),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(validate_tree(0, &[]), Err(Error::NotATree(_))));
    }

    #[test]
    fn broom_layouts() {
        let t = Tree::broom(3, 6);
        let layout = t.broom_layout().unwrap();
        assert_eq!(layout.leaves, vec![0, 1, 2]);
        assert_eq!(layout.spine, vec![3, 4, 5]);

        let p = Tree::path(4).broom_layout().unwrap();
        assert!(p.leaves.is_empty());
        assert_eq!(p.spine, vec![0, 1, 2, 3]);

        let s = Tree::star(5).broom_layout().unwrap();
        assert!(s.is_star());
        assert_eq!(s.center(), 4);

        // two hubs
        let t = Tree::new(
            8,
            vec![(0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (6, 7)],
        )
        .unwrap();
        assert!(t.broom_layout().is_none());
        // hub with two long arms is a spider, not a broom
        let t = Tree::new(6, vec![(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]).unwrap();
        assert_eq!(t.family(), Family::General);
    }

    #[test]
    fn index_agrees_with_bfs() {
        let mut edges: Vec<_> = (1..9).map(|v| (v - 1, v)).collect();
        edges.push((2, 9));
        edges.push((5, 10));
        edges.push((10, 11));
        let t = Tree::new(12, edges).unwrap();
        let idx = t.index();
        for u in 0..t.n() {
            let d = t.distances_from(u);
            for (v, &dv) in d.iter().enumerate() {
                assert_eq!(idx.dist(u, v), dv);
                let path = idx.path(u, v);
                assert_eq!(path.len(), dv + 1);
                assert!(path.windows(2).all(|w| t.has_edge(w[0], w[1])));
            }
        }
    }
}
