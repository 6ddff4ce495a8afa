//! Span and rank analysis of H-CSF families in degree `n`.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{bareiss_rank, convert, partitions_of, Basis, Partition, RowSpace, SymFunc};
use crate::error::{Error, Result};
use crate::graph::{all_graphs, is_vertex_transitive, Family, Graph};
use crate::hom::hcsf;

/// Largest `n` for which all `n`-vertex graphs are enumerated as rows.
pub const MAX_ALL_GRAPHS_N: usize = 7;
/// Largest `n` accepted by [`p_h`].
pub const MAX_PH_N: usize = 6;

/// Rows of `m`-coefficients over the partitions of `degree` in canonical order.
#[derive(Debug, Clone)]
pub struct SpanMatrix {
    degree: usize,
    index: Vec<Partition>,
    labels: Vec<String>,
    rows: Vec<Vec<BigRational>>,
}

impl SpanMatrix {
    pub fn new(degree: usize) -> Self {
        SpanMatrix { degree, index: partitions_of(degree, None), labels: Vec::new(), rows: Vec::new() }
    }

    /// Appends `f` (any basis) under `label`.
    pub fn push(&mut self, label: impl Into<String>, f: &SymFunc) -> Result<()> {
        if f.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: f.degree() });
        }
        let m = convert(f, Basis::M)?;
        self.labels.push(label.into());
        self.rows.push(m.vector(&self.index));
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    pub fn rank(&self) -> usize {
        bareiss_rank(&self.rows)
    }

    pub fn is_basis(&self) -> bool {
        self.rows.len() == self.index.len() && self.rank() == self.index.len()
    }

    fn column(&self, lambda: &Partition) -> usize {
        self.index.iter().position(|p| p == lambda).expect("partition of the matrix degree")
    }

    /// Row `i` has a nonzero entry at `pivots[i]` and zeros at every later pivot.
    pub fn is_lower_triangular(&self, pivots: &[Partition]) -> bool {
        if pivots.len() != self.rows.len() {
            return false;
        }
        let cols: Vec<usize> = pivots.iter().map(|p| self.column(p)).collect();
        self.rows.iter().enumerate().all(|(i, row)| {
            !row[cols[i]].is_zero() && cols[i + 1..].iter().all(|&c| row[c].is_zero())
        })
    }

    /// Tab-separated dump: a header of partitions, then one labelled row per line.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("row");
        for p in &self.index {
            out.push('\t');
            out.push_str(&p.to_string());
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(&self.rows) {
            out.push_str(label);
            for x in row {
                out.push('\t');
                out.push_str(&x.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Rank of homogeneous degree-`n` symmetric functions, over the rationals.
pub fn span_rank(rows: &[SymFunc], n: usize) -> Result<usize> {
    let mut m = SpanMatrix::new(n);
    for (i, f) in rows.iter().enumerate() {
        m.push(format!("r{i}"), f)?;
    }
    Ok(m.rank())
}

/// A family `X_{G_λ}^{H_λ}` indexed by the partitions of `n`, with its pivots.
#[derive(Debug, Clone)]
pub struct Construction {
    pub lambdas: Vec<Partition>,
    pub pivots: Vec<Partition>,
    pub pairs: Vec<(Graph, Graph)>,
    pub matrix: SpanMatrix,
}

impl Construction {
    fn build(n: usize, items: Vec<(Partition, Partition, Graph, Graph)>) -> Result<Self> {
        let values: Vec<SymFunc> = items.par_iter().map(|(_, _, g, h)| hcsf(g, h)).collect();
        let mut matrix = SpanMatrix::new(n);
        for ((lambda, ..), v) in items.iter().zip(&values) {
            matrix.push(lambda.to_string(), v)?;
        }
        let mut c = Construction { lambdas: vec![], pivots: vec![], pairs: vec![], matrix };
        for (lambda, pivot, g, h) in items {
            c.lambdas.push(lambda);
            c.pivots.push(pivot);
            c.pairs.push((g, h));
        }
        Ok(c)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_basis(&self) -> bool {
        self.matrix.is_basis()
    }

    /// The ordering used by the construction gives a lower-triangular matrix
    /// against its pivots with nonzero diagonal.
    pub fn is_triangular(&self) -> bool {
        self.matrix.is_lower_triangular(&self.pivots)
    }
}

fn to_usize(p: &Partition) -> Vec<usize> {
    p.parts().iter().map(|&x| x as usize).collect()
}

fn multipartite(p: &Partition) -> Result<Graph> {
    Family::Multipartite(to_usize(p)).build()
}

/// Partitions of `n` sorted by decreasing length, reverse-lex within a length.
fn by_decreasing_length(n: usize) -> Vec<Partition> {
    let mut ps = partitions_of(n, None);
    ps.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    ps
}

/// `X_{K_λ}^{K_λ}` for `λ ⊢ n`, ordered by decreasing length; the pivot of `λ` is `λ`.
pub fn multipartite_self_basis(n: usize) -> Result<Construction> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let items = by_decreasing_length(n)
        .into_iter()
        .map(|l| {
            let g = multipartite(&l)?;
            Ok((l.clone(), l, g.clone(), g))
        })
        .collect::<Result<Vec<_>>>()?;
    Construction::build(n, items)
}

/// Whether `h` has `k` pairwise adjacent distinct vertices (loops ignored).
pub fn has_clique(h: &Graph, k: usize) -> bool {
    fn grow(adj: &[u64], candidates: u64, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if (candidates.count_ones() as usize) < need {
            return false;
        }
        let mut rest = candidates;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if grow(adj, rest & adj[v], need - 1) {
                return true;
            }
        }
        false
    }
    let adj: Vec<u64> = (0..h.n()).map(|v| h.row(v) & !(1u64 << v)).collect();
    let all = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    grow(&adj, all, k)
}

/// `X_{K_λ}^H` for `λ ⊢ n`, where `H` contains an `n`-clique.
pub fn clique_basis(h: &Graph, n: usize) -> Result<Construction> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if !has_clique(h, n) {
        return Err(Error::HypothesisViolated(format!("H has no {n}-vertex clique")));
    }
    let items = by_decreasing_length(n)
        .into_iter()
        .map(|l| Ok((l.clone(), l.clone(), multipartite(&l)?, h.clone())))
        .collect::<Result<Vec<_>>>()?;
    Construction::build(n, items)
}

/// Clique sizes of `h` in decreasing order, if `h` is a loopless union of cliques.
pub fn clique_sizes(h: &Graph) -> Option<Vec<usize>> {
    if h.has_loops() {
        return None;
    }
    let mut sizes = Vec::new();
    for comp in h.components() {
        let k = comp.len();
        if comp.iter().any(|&v| h.degree(v) != k - 1) {
            return None;
        }
        sizes.push(k);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Some(sizes)
}

/// The graph `G_λ` assigned to `λ` when `H` is a union of cliques of the given sizes.
pub fn union_cliques_graph(lambda: &Partition, sizes: &[usize]) -> Result<Graph> {
    let parts = to_usize(lambda);
    if parts.len() == 1 {
        return Graph::empty(parts[0]);
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut used = 0;
    for &h in sizes {
        if used == parts.len() {
            break;
        }
        let take = h.min(parts.len() - used);
        groups.push(parts[used..used + take].to_vec());
        used += take;
    }
    if used < parts.len() {
        return Err(Error::HypothesisViolated(format!(
            "{lambda} has more parts than H has vertices"
        )));
    }
    let last = groups.len() - 1;
    if last > 0 && groups[last].len() == 1 && groups[last][0] > 1 {
        let moved = groups[0].remove(0);
        groups[last].insert(0, moved);
    }
    let mut g = Graph::empty(0)?;
    for group in groups {
        g = g.disjoint_union(&Family::Multipartite(group).build()?)?;
    }
    Ok(g)
}

/// Basis for `Λ^n`, `n = |V(H)|`, from a union of cliques `H` with some clique of
/// size at least 3 and at most `⌈n/2⌉` singletons.
///
/// Rows are grouped into length blocks `(h_1+…+h_{k−1}, h_1+…+h_k]`, decreasing
/// length inside a block (reverse-lex on ties), with `λ = (n)` last.
pub fn union_cliques_basis(h: &Graph) -> Result<Construction> {
    let n = h.n();
    let sizes = clique_sizes(h).ok_or_else(|| Error::HypothesisViolated("H is not a union of cliques".into()))?;
    if sizes.first().copied().unwrap_or(0) < 3 {
        return Err(Error::HypothesisViolated("H needs a clique of size at least 3".into()));
    }
    let singletons = sizes.iter().filter(|&&s| s == 1).count();
    if singletons > n.div_ceil(2) {
        return Err(Error::HypothesisViolated(format!("{singletons} singleton cliques exceed ⌈{n}/2⌉")));
    }
    let mut bounds = Vec::new();
    let mut acc = 0;
    for &s in &sizes {
        acc += s;
        bounds.push(acc);
    }
    let block = |len: usize| bounds.iter().position(|&b| len <= b).unwrap_or(bounds.len());
    let mut order: Vec<Partition> = partitions_of(n, None).into_iter().filter(|p| p.len() > 1).collect();
    order.sort_by(|a, b| {
        block(a.len()).cmp(&block(b.len())).then(b.len().cmp(&a.len())).then(a.cmp(b))
    });
    order.push(Partition::new(vec![n as u32])?);
    let items = order
        .into_iter()
        .map(|l| Ok((l.clone(), l.clone(), union_cliques_graph(&l, &sizes)?, h.clone())))
        .collect::<Result<Vec<_>>>()?;
    Construction::build(n, items)
}

/// Loop-graph targets with explicit bases.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopKind {
    /// `H` = `n` isolated looped vertices, `G_λ` = disjoint paths of sizes `λ_i`.
    EdgelessLoops,
    /// `H` = `P_n` with a loop at one end, `G_λ` = disjoint copies of such paths.
    PathLoop,
}

impl FromStr for LoopKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgeless" | "edgeless-loops" => Ok(LoopKind::EdgelessLoops),
            "path" | "path-loop" => Ok(LoopKind::PathLoop),
            _ => Err(Error::Parse(format!("unknown loop basis kind {s:?}"))),
        }
    }
}

impl fmt::Display for LoopKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LoopKind::EdgelessLoops => "edgeless-loops",
            LoopKind::PathLoop => "path-loop",
        })
    }
}

fn union_of(parts: &[usize], piece: impl Fn(usize) -> Family) -> Result<Graph> {
    Family::Union(parts.iter().map(|&k| piece(k)).collect()).build()
}

/// Loop-graph bases.
///
/// Edgeless loops: increasing length, pivot `λ` (the longest monomial).
/// Path loop: increasing lexicographic order, pivot `λ^t`.
pub fn loop_bases(kind: LoopKind, n: usize) -> Result<Construction> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let mut ps = partitions_of(n, None);
    let items = match kind {
        LoopKind::EdgelessLoops => {
            let h = Family::EdgelessLoops(n).build()?;
            ps.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
            ps.into_iter()
                .map(|l| Ok((l.clone(), l.clone(), union_of(&to_usize(&l), Family::Path)?, h.clone())))
                .collect::<Result<Vec<_>>>()?
        }
        LoopKind::PathLoop => {
            let h = Family::PathLoop(n).build()?;
            ps.sort_by(|a, b| a.lex_cmp(b));
            ps.into_iter()
                .map(|l| Ok((l.clone(), l.conjugate(), union_of(&to_usize(&l), Family::PathLoop)?, h.clone())))
                .collect::<Result<Vec<_>>>()?
        }
    };
    Construction::build(n, items)
}

fn check_all_graphs_n(n: usize) -> Result<()> {
    if n > MAX_ALL_GRAPHS_N {
        return Err(Error::NTooLarge { n, max: MAX_ALL_GRAPHS_N });
    }
    Ok(())
}

/// `m`-coefficient rows of `X_G^H` for every `n`-vertex `G` up to isomorphism.
pub fn all_graphs_rows(h: &Graph, n: usize) -> Result<Vec<Vec<BigRational>>> {
    check_all_graphs_n(n)?;
    let index = partitions_of(n, None);
    all_graphs(n)
        .par_iter()
        .map(|g| Ok(convert(&hcsf(g, h), Basis::M)?.vector(&index)))
        .collect()
}

/// Rank of `{X_G^H : |V(G)| = |V(H)|}`; stops as soon as the span is full.
pub fn all_graphs_span_rank(h: &Graph) -> Result<usize> {
    let n = h.n();
    check_all_graphs_n(n)?;
    let index = partitions_of(n, None);
    let mut space = RowSpace::new(index.len());
    for chunk in all_graphs(n).chunks(32) {
        let rows: Vec<Vec<BigRational>> = chunk
            .par_iter()
            .map(|g| Ok(convert(&hcsf(g, h), Basis::M)?.vector(&index)))
            .collect::<Result<_>>()?;
        for row in &rows {
            space.insert(row);
            if space.is_full() {
                return Ok(space.rank());
            }
        }
    }
    Ok(space.rank())
}

/// Counts behind `p_H(n)`: how many `n`-vertex `H` admit a spanning family.
#[derive(Debug, Clone)]
pub struct PhReport {
    pub n: usize,
    pub good: Vec<Graph>,
    pub bad: Vec<(Graph, usize)>,
}

impl PhReport {
    pub fn total(&self) -> usize {
        self.good.len() + self.bad.len()
    }

    pub fn ratio(&self) -> BigRational {
        BigRational::new(self.good.len().into(), self.total().into())
    }
}

impl fmt::Display for PhReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.good.len(), self.total())
    }
}

pub fn p_h(n: usize) -> Result<PhReport> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    if n > MAX_PH_N {
        return Err(Error::NTooLarge { n, max: MAX_PH_N });
    }
    let full = partitions_of(n, None).len();
    let mut report = PhReport { n, good: vec![], bad: vec![] };
    for h in all_graphs(n) {
        let r = all_graphs_span_rank(&h)?;
        if r == full {
            report.good.push(h);
        } else {
            report.bad.push((h, r));
        }
    }
    Ok(report)
}

/// Observed versus predicted outcome of a non-spanning statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeficiencyReport {
    pub name: String,
    pub observed: usize,
    pub expected: usize,
    pub holds: bool,
    pub detail: String,
}

impl fmt::Display for DeficiencyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: observed {} expected {} ({}) {}",
            self.name,
            self.observed,
            self.expected,
            self.detail,
            if self.holds { "ok" } else { "VIOLATED" }
        )
    }
}

/// `H = K_n` minus `k` disjoint edges spans a space of dimension `#{λ ⊢ n : ℓ(λ) ≤ n−k}`.
pub fn k_clones_check(n: usize, k: usize) -> Result<DeficiencyReport> {
    if k == 0 || 2 * k > n {
        return Err(Error::HypothesisViolated(format!("need 1 ≤ k ≤ ⌊n/2⌋, got n={n} k={k}")));
    }
    let h = Family::CompleteMinusMatching(n, k).build()?;
    let observed = all_graphs_span_rank(&h)?;
    let expected = partitions_of(n, Some(n - k)).len();
    Ok(DeficiencyReport {
        name: format!("Kminus:{n},{k}"),
        observed,
        expected,
        holds: observed == expected,
        detail: format!("p({n}) = {}", partitions_of(n, None).len()),
    })
}

/// `H = K_n − e` spans a subspace of codimension 1.
pub fn complete_minus_edge_check(n: usize) -> Result<DeficiencyReport> {
    if n < 2 {
        return Err(Error::HypothesisViolated("K_n − e needs n ≥ 2".into()));
    }
    let mut r = k_clones_check(n, 1)?;
    r.name = format!("K{n}-e");
    Ok(r)
}

/// First pair `u < v` of nonadjacent vertices with equal neighbourhoods.
pub fn find_clones(h: &Graph) -> Option<(usize, usize)> {
    (0..h.n()).find_map(|u| {
        (u + 1..h.n()).find(|&v| !h.has_edge(u, v) && h.row(u) == h.row(v)).map(|v| (u, v))
    })
}

/// Clone pair `u, v` with `H − u` vertex-transitive: the span of the `X_G^H` has
/// the dimension of the span of the `X_G^{H−u}` and sits inside the `K_n − e` span.
pub fn clone_check(h: &Graph) -> Result<DeficiencyReport> {
    let n = h.n();
    let (u, v) = find_clones(h).ok_or_else(|| Error::HypothesisViolated("H has no clone pair".into()))?;
    let rest: Vec<usize> = (0..n).filter(|&w| w != u).collect();
    let reduced = h.induced(&rest);
    if !is_vertex_transitive(&reduced) {
        return Err(Error::HypothesisViolated(format!("H − {u} is not vertex-transitive")));
    }
    let width = partitions_of(n, None).len();
    let mut span_h = RowSpace::new(width);
    for row in all_graphs_rows(h, n)? {
        span_h.insert(&row);
    }
    let mut span_reduced = RowSpace::new(width);
    for row in all_graphs_rows(&reduced, n)? {
        span_reduced.insert(&row);
    }
    let kminus = Family::CompleteMinusMatching(n, 1).build()?;
    let kminus_rows = all_graphs_rows(&kminus, n)?;
    let mut span_k = RowSpace::new(width);
    for row in &kminus_rows {
        span_k.insert(row);
    }
    let inside = all_graphs_rows(h, n)?.iter().all(|row| span_k.contains(row));
    let observed = span_h.rank();
    let expected = span_reduced.rank();
    Ok(DeficiencyReport {
        name: format!("clones {u},{v}"),
        observed,
        expected,
        holds: observed == expected && inside && span_k.rank() + 1 == width,
        detail: format!("inside K{n}-e span: {inside}"),
    })
}

/// Random bipartite graph on `n` vertices: random sides, each crossing pair kept with probability 1/2.
pub fn random_bipartite(n: usize, rng: &mut impl Rng) -> Result<Graph> {
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(0.5) {
                g.add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// `H` = `k` disjoint edges plus isolated vertices: on sampled bipartite `G`, every
/// `p_λ` in `X_G^H` has at most `2k` parts above 1.
pub fn matching_check(n: usize, k: usize, samples: usize, seed: u64) -> Result<DeficiencyReport> {
    if k == 0 || 4 * (k + 1) > n {
        return Err(Error::HypothesisViolated(format!("need 1 ≤ k ≤ ⌊n/4⌋ − 1, got n={n} k={k}")));
    }
    let h = Family::Matching(n, k).build()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = (0..samples).map(|_| random_bipartite(n, &mut rng)).collect::<Result<Vec<_>>>()?;
    let worst = graphs
        .par_iter()
        .map(|g| {
            let p = convert(&hcsf(g, &h), Basis::P)?;
            Ok(p.terms().map(|(l, _)| l.parts_above_one()).max().unwrap_or(0))
        })
        .collect::<Result<Vec<usize>>>()?
        .into_iter()
        .max()
        .unwrap_or(0);
    Ok(DeficiencyReport {
        name: format!("M:{n},{k}"),
        observed: worst,
        expected: 2 * k,
        holds: worst <= 2 * k,
        detail: format!("max parts above 1 over {samples} samples, seed {seed}"),
    })
}

/// The six two-vertex graphs built from loops and the edge, up to isomorphism.
pub fn two_vertex_loop_graphs() -> Vec<Graph> {
    let sets: [&[(usize, usize)]; 6] =
        [&[], &[(0, 0)], &[(0, 1)], &[(0, 0), (0, 1)], &[(0, 0), (1, 1)], &[(0, 0), (1, 1), (0, 1)]];
    sets.iter().map(|e| Graph::from_edges(2, e).expect("valid two-vertex graph")).collect()
}

/// Dimension of the length-2 projections of `X_G^{H_i}` over the six two-vertex loop graphs.
pub fn length2_projection_dimension(g: &Graph) -> Result<usize> {
    let n = g.n();
    let index: Vec<Partition> = partitions_of(n, Some(2)).into_iter().filter(|p| p.len() == 2).collect();
    let rows = two_vertex_loop_graphs()
        .par_iter()
        .map(|h| Ok(convert(&hcsf(g, h), Basis::M)?.vector(&index)))
        .collect::<Result<Vec<_>>>()?;
    Ok(bareiss_rank(&rows))
}

/// Rank of `{X_G^{H_i}}` for a fixed `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedGReport {
    pub rank: usize,
    pub target: usize,
}

impl FixedGReport {
    pub fn is_basis(&self) -> bool {
        self.rank == self.target
    }
}

pub fn verify_fixed_g_basis(g: &Graph, hs: &[Graph]) -> Result<FixedGReport> {
    let n = g.n();
    let values: Vec<SymFunc> = hs.par_iter().map(|h| hcsf(g, h)).collect();
    let mut m = SpanMatrix::new(n);
    for (i, v) in values.iter().enumerate() {
        m.push(format!("H{}", i + 1), v)?;
    }
    Ok(FixedGReport { rank: m.rank(), target: partitions_of(n, None).len() })
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges)
}

/// Fixed-`G` families with looped targets, for `n = 4..=7`.
///
/// The `n = 7` list is transcribed as drawn and contains the same target twice.
pub fn fixed_g_fixture(n: usize) -> Result<(Graph, Vec<Graph>)> {
    let lp = graph(1, &[(0, 0)])?;
    let lp_k1 = graph(2, &[(0, 0)])?;
    let k2 = graph(2, &[(0, 1)])?;
    let lp_b = graph(2, &[(0, 0), (0, 1)])?;
    let k2_k1 = graph(3, &[(0, 1)])?;
    let lp_b_c = graph(3, &[(0, 0), (0, 1)])?;
    let p3_k1 = graph(4, &[(0, 1), (1, 2)])?;
    let c4_k1 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 0)])?;
    let k23 = Family::Multipartite(vec![2, 3]).build()?;
    let k23_k1 = k23.disjoint_union(&Graph::empty(1)?)?;
    let k33_k1 = Family::Multipartite(vec![3, 3]).build()?.disjoint_union(&Graph::empty(1)?)?;
    match n {
        4 => Ok((p3_k1.clone(), vec![lp, lp_k1, k2, lp_b_c, p3_k1])),
        5 => Ok((c4_k1.clone(), vec![lp, lp_k1, k2, k2_k1, lp_b_c, p3_k1, c4_k1])),
        6 => {
            let all_loops_p3 = graph(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])?;
            let middle_loop = graph(4, &[(0, 1), (1, 1), (1, 2)])?;
            Ok((
                k23_k1.clone(),
                vec![lp, lp_k1, k2, lp_b, k2_k1, lp_b_c, all_loops_p3, middle_loop, c4_k1, k23, k23_k1],
            ))
        }
        7 => {
            let tri = graph(3, &[(0, 1), (1, 2), (0, 2), (0, 0), (1, 1)])?;
            let p4 = Family::Path(4).build()?;
            let c4 = Family::Cycle(4).build()?;
            let claw = Family::Star(4).build()?;
            let p3_k2 = graph(5, &[(0, 1), (1, 2), (3, 4)])?;
            Ok((
                k33_k1.clone(),
                vec![lp, lp_k1, k2, lp_b, k2_k1, lp_b_c, tri, p4, c4, claw, p3_k2, k23, k23_k1, k33_k1.clone(), k33_k1],
            ))
        }
        _ => Err(Error::InvalidParameter(format!("no fixed-G fixture for n = {n}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    #[test]
    fn monomials_of_degree_four() {
        let rows: Vec<SymFunc> =
            partitions_of(4, None).into_iter().map(|l| SymFunc::basis_element(Basis::M, l)).collect();
        assert_eq!(span_rank(&rows, 4).unwrap(), 5);
        let mut doubled = rows.clone();
        doubled.extend(rows.iter().cloned());
        assert_eq!(span_rank(&doubled, 4).unwrap(), 5);
    }

    #[test]
    fn degree_mismatch() {
        let f = SymFunc::basis_element(Basis::M, Partition::ones(3));
        assert!(matches!(span_rank(&[f], 4), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn clique_detection() {
        assert!(has_clique(&build_family("Kn:4").unwrap(), 4));
        assert!(!has_clique(&build_family("C:5").unwrap(), 3));
        assert!(has_clique(&build_family("Kn1:3").unwrap(), 3));
    }

    #[test]
    fn union_cliques_patch_keeps_last_component_connected() {
        let lambda: Partition = "[2,2,2,2]".parse().unwrap();
        let g = union_cliques_graph(&lambda, &[3, 3, 2]).unwrap();
        assert_eq!(g.component_count(), 2);
        assert_eq!(g.edge_count(), 8);
        let plain = union_cliques_graph(&"[2,1,1,1]".parse().unwrap(), &[3, 2]).unwrap();
        assert_eq!(plain.component_count(), 2);
        assert_eq!(plain.edge_count(), 5);
    }

    #[test]
    fn two_vertex_targets_are_distinct() {
        let hs = two_vertex_loop_graphs();
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                assert!(!crate::graph::is_isomorphic(&hs[i], &hs[j]));
            }
        }
    }
}
