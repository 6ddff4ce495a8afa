//! Isomorphism-class enumeration by vertex augmentation.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::canon::{canonical_form, CanonicalForm};
use super::Graph;

fn dedup(candidates: Vec<Graph>) -> Vec<Graph> {
    let forms: Vec<CanonicalForm> = candidates.par_iter().map(canonical_form).collect();
    let mut classes: BTreeMap<(usize, CanonicalForm), ()> = BTreeMap::new();
    for (g, cf) in candidates.iter().zip(forms) {
        classes.entry((g.edge_count(), cf)).or_insert(());
    }
    classes.into_keys().map(|(_, cf)| cf.graph()).collect()
}

/// One representative per isomorphism class of simple graphs on `n` vertices,
/// ordered by edge count then canonical form.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0).expect("empty graph")];
    for k in 1..=n {
        let mut candidates = Vec::new();
        for g in &level {
            for subset in 0u64..(1u64 << (k - 1)) {
                let mut adj = g.masks().to_vec();
                adj.push(subset);
                for (v, row) in adj.iter_mut().enumerate().take(k - 1) {
                    if subset >> v & 1 == 1 {
                        *row |= 1 << (k - 1);
                    }
                }
                candidates.push(Graph::from_masks(adj).expect("augmented graph is symmetric"));
            }
        }
        level = dedup(candidates);
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn all_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::empty(1).expect("single vertex")];
    for k in 2..=n {
        let mut candidates = Vec::new();
        for t in &level {
            for v in 0..k - 1 {
                let mut adj = t.masks().to_vec();
                adj.push(1 << v);
                adj[v] |= 1 << (k - 1);
                candidates.push(Graph::from_masks(adj).expect("tree extension is symmetric"));
            }
        }
        level = dedup(candidates);
    }
    level
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_class_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }

    #[test]
    fn tree_class_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| all_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23]);
        assert!(all_trees(7).iter().all(Graph::is_tree));
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }
}
