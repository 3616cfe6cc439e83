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

//! Unlabelled tree enumeration and Prüfer decoding.

use std::collections::{BTreeSet, HashSet};

use crate::tree::Tree;
use crate::Vertex;

/// One representative of every tree on `n` vertices up to isomorphism.
///
/// Trees on `n` vertices are grown from those on `n - 1` by attaching a
/// leaf anywhere and keeping the first copy of each canonical form.
pub fn free_trees(n: usize) -> Vec<Tree> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Tree::path(1)];
    for m in 2..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..m - 1 {
                let mut edges = t.edges().to_vec();
                edges.push((v, m - 1));
                let grown = Tree::new(m, edges).expect("adding a leaf keeps a tree");
                if seen.insert(canonical_form(&grown)) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    level
}

/// A string that two trees share exactly when they are isomorphic.
pub fn canonical_form(tree: &Tree) -> Vec<u8> {
    centers(tree)
        .into_iter()
        .map(|c| rooted_code(tree, c, usize::MAX))
        .min()
        .expect("a tree has a center")
}

fn rooted_code(tree: &Tree, v: Vertex, parent: Vertex) -> Vec<u8> {
    let mut kids: Vec<Vec<u8>> = tree
        .neighbours(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(tree, w, v))
        .collect();
    kids.sort();
    let mut code = vec![b'('];
    for k in kids {
        code.extend(k);
    }
    code.push(b')');
    code
}

fn centers(tree: &Tree) -> Vec<Vertex> {
    let n = tree.n();
    let mut degree: Vec<usize> = (0..n).map(|v| tree.degree(v)).collect();
    let mut alive: BTreeSet<Vertex> = (0..n).collect();
    let mut layer: Vec<Vertex> = (0..n).filter(|&v| degree[v] <= 1).collect();
    while alive.len() > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            alive.remove(&v);
            for &w in tree.neighbours(v) {
                if alive.contains(&w) {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    alive.into_iter().collect()
}

/// Decodes a Prüfer sequence over `0..seq.len() + 2`.
pub fn tree_from_prufer(seq: &[usize]) -> Tree {
    let n = seq.len() + 2;
    let mut degree = vec![1; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, x));
        degree[x] -= 1;
        if degree[x] == 1 {
            leaves.insert(x);
        }
    }
    let mut last = leaves.into_iter();
    edges.push((
        last.next().expect("two left"),
        last.next().expect("two left"),
    ));
    Tree::new(n, edges).expect("Prüfer sequences decode to trees")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=10).map(|n| free_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Tree::new(4, vec![(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Tree::new(4, vec![(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&Tree::star(4)));
    }

    #[test]
    fn prufer_decoding() {
        let t = tree_from_prufer(&[3, 3, 3]);
        assert_eq!(t.star_center(), Some(3));
        assert!(tree_from_prufer(&[]).has_edge(0, 1));
    }
}
