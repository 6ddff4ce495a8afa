//! Canonical labelling by colour refinement and individualisation.
//!
//! Leaves of the search tree are compared by their relabelled adjacency; the
//! smallest one is the certificate. Twin vertices inside a target cell are
//! interchangeable, so only one of each twin class is individualised.

use num_bigint::BigUint;

use super::Graph;

/// Isomorphism-invariant encoding: equal iff the graphs are isomorphic
/// (loops and weights included).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
    weights: Vec<u32>,
    colors: Vec<u32>,
}

fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).expect("key present") as u32).collect()
}

fn initial_colors(g: &Graph) -> Vec<u32> {
    let keys: Vec<(bool, u32)> = (0..g.n()).map(|v| (g.has_loop(v), g.weight(v))).collect();
    rank(&keys)
}

/// Refines until stable; the result uses colours `0..k` ordered consistently.
fn refine(g: &Graph, colors: &[u32]) -> Vec<u32> {
    let mut colors = rank(colors);
    let mut classes = colors.iter().max().map_or(0, |&m| m + 1);
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..g.n())
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&keys);
        let next_classes = next.iter().max().map_or(0, |&m| m + 1);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let cv = colors[v];
    colors
        .iter()
        .enumerate()
        .map(|(u, &c)| if u == v { 2 * c } else if c == cv { 2 * c + 1 } else { 2 * c })
        .collect()
}

fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let k = colors.iter().max().map_or(0, |&m| m as usize + 1);
    let mut cells = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        cells[c as usize].push(v);
    }
    cells.into_iter().find(|c| c.len() > 1)
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mask = !((1u64 << u) | (1u64 << v));
    g.row(u) & mask == g.row(v) & mask
        && g.has_loop(u) == g.has_loop(v)
        && g.weight(u) == g.weight(v)
}

fn leaf(g: &Graph, colors: &[u32], root_colors: &[u32]) -> CanonicalForm {
    let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
    let h = g.permuted(&perm);
    let mut new_colors = vec![0; g.n()];
    for v in 0..g.n() {
        new_colors[perm[v]] = root_colors[v];
    }
    CanonicalForm { n: g.n(), rows: h.masks().to_vec(), weights: h.weights(), colors: new_colors }
}

fn search(g: &Graph, colors: Vec<u32>, root_colors: &[u32], best: &mut Option<CanonicalForm>) {
    let colors = refine(g, &colors);
    let Some(cell) = target_cell(&colors) else {
        let cand = leaf(g, &colors, root_colors);
        if best.as_ref().is_none_or(|b| cand < *b) {
            *best = Some(cand);
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        search(g, individualize(&colors, v), root_colors, best);
    }
}

fn canonical_colored(g: &Graph, colors: &[u32]) -> CanonicalForm {
    let root = rank(colors);
    let mut best = None;
    search(g, root.clone(), &root, &mut best);
    best.unwrap_or(CanonicalForm { n: 0, rows: vec![], weights: vec![], colors: vec![] })
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonical_colored(g, &initial_colors(g))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && canonical_form(g) == canonical_form(h)
}

/// Whether some automorphism maps `u` to `v`.
pub fn same_orbit(g: &Graph, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let base = initial_colors(g);
    canonical_colored(g, &individualize(&base, u)) == canonical_colored(g, &individualize(&base, v))
}

/// Whether all vertices lie in one automorphism orbit.
pub fn is_vertex_transitive(g: &Graph) -> bool {
    (1..g.n()).all(|v| same_orbit(g, 0, v))
}

/// |Aut(G)| by orbit–stabiliser down the individualisation chain.
pub fn automorphism_count(g: &Graph) -> BigUint {
    let mut total = BigUint::from(1u32);
    let mut colors = refine(g, &initial_colors(g));
    while let Some(cell) = target_cell(&colors) {
        let v = cell[0];
        let fixed = individualize(&colors, v);
        let reference = canonical_colored(g, &fixed);
        let mut orbit = 1u32;
        for &u in &cell[1..] {
            if twins(g, u, v) || canonical_colored(g, &individualize(&colors, u)) == reference {
                orbit += 1;
            }
        }
        total *= orbit;
        colors = refine(g, &fixed);
    }
    total
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rebuilds the canonically labelled representative.
    pub fn graph(&self) -> Graph {
        let g = Graph::from_masks(self.rows.clone()).expect("certificate rows are symmetric");
        g.with_weights(self.weights.clone()).expect("certificate weights are positive")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::build_family;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    #[test]
    fn relabelled_path_is_isomorphic() {
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let q = g(3, &[(0, 2), (2, 1)]);
        assert!(is_isomorphic(&p3, &q));
        assert!(!is_isomorphic(&p3, &g(3, &[(1, 2)])));
        assert!(!is_isomorphic(&build_family("K:2,3").unwrap(), &build_family("C:5").unwrap()));
    }

    #[test]
    fn loops_and_weights_matter() {
        let a = g(2, &[(0, 1), (0, 0)]);
        let b = g(2, &[(0, 1), (1, 1)]);
        let c = g(2, &[(0, 1)]);
        assert!(is_isomorphic(&a, &b));
        assert!(!is_isomorphic(&a, &c));
        let w1 = c.clone().with_weights(vec![2, 1]).unwrap();
        let w2 = c.clone().with_weights(vec![1, 2]).unwrap();
        assert!(is_isomorphic(&w1, &w2));
        assert!(!is_isomorphic(&w1, &c));
    }

    #[test]
    fn automorphism_counts() {
        let bowtie = g(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert_eq!(automorphism_count(&bowtie), BigUint::from(8u32));
        let right = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 1), (2, 4)]);
        assert_eq!(automorphism_count(&right), BigUint::from(2u32));
        assert_eq!(automorphism_count(&build_family("Kn:3").unwrap()), BigUint::from(6u32));
        assert_eq!(automorphism_count(&build_family("C:6").unwrap()), BigUint::from(12u32));
        assert_eq!(automorphism_count(&build_family("E:7").unwrap()), BigUint::from(5040u32));
        assert_eq!(automorphism_count(&build_family("K:2,3").unwrap()), BigUint::from(12u32));
    }
}
