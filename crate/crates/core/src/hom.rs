//! Homomorphism enumeration and type counting.
//!
//! A homomorphism sends every edge of `G` (loops included) to an edge of `H`.
//! Its type is the partition formed by the nonzero fibre sizes.

use std::collections::{BTreeMap, HashMap};
use std::hash::{BuildHasherDefault, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{set_partitions_of_type, Basis, Partition, SymFunc};
use crate::error::{Error, Result};
use crate::graph::{automorphism_count, bits, canonical_form, ContractMode, Graph, Spider};

/// `λ ↦ d_λ`, the number of homomorphisms of each type.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TypeCounts {
    counts: BTreeMap<Partition, BigInt>,
}

impl TypeCounts {
    pub fn get(&self, lambda: &Partition) -> BigInt {
        self.counts.get(lambda).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.counts.iter()
    }

    pub fn total(&self) -> BigInt {
        self.counts.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Counts by type length, index `L - 1` for `L = 1..=max_len`.
    pub fn length_profile(&self, max_len: usize) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); max_len];
        for (l, c) in &self.counts {
            out[l.len() - 1] += c;
        }
        out
    }
}

/// Multiply-xorshift hasher for the `u128` histogram keys.
#[derive(Default)]
struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }
    fn write(&mut self, bytes: &[u8]) {
        for &b in bytes {
            self.0 = (self.0 ^ b as u64).wrapping_mul(0x100_0000_01b3);
        }
    }
    fn write_u128(&mut self, k: u128) {
        let x = (k as u64) ^ ((k >> 64) as u64).rotate_left(29);
        let x = x.wrapping_mul(0x9e37_79b9_7f4a_7c15);
        self.0 = x ^ (x >> 31);
    }
}

type KeyMap = HashMap<u128, u64, BuildHasherDefault<KeyHasher>>;

/// Placement order and adjacency constraints for the backtracking search.
struct Plan {
    order: Vec<usize>,
    /// For each position, earlier positions joined to it by an edge.
    back: Vec<Vec<usize>>,
    need_loop: Vec<bool>,
    h_adj: Vec<u64>,
    h_all: u64,
    h_loops: u64,
}

/// Components one after another; inside each, the vertex with the most placed
/// neighbours goes next, ties broken by degree then index.
fn placement_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.n());
    for comp in g.components() {
        let mut placed = 0u64;
        let start = *comp.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))).expect("nonempty");
        order.push(start);
        placed |= 1 << start;
        for _ in 1..comp.len() {
            let next = *comp
                .iter()
                .filter(|&&v| placed >> v & 1 == 0)
                .max_by_key(|&&v| ((g.row(v) & placed).count_ones(), g.degree(v), std::cmp::Reverse(v)))
                .expect("unplaced vertex");
            order.push(next);
            placed |= 1 << next;
        }
    }
    order
}

impl Plan {
    fn new(g: &Graph, h: &Graph) -> Plan {
        let order = placement_order(g);
        let mut pos = vec![0; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| g.neighbors(v).map(|u| pos[u]).filter(|&p| p < i).collect())
            .collect();
        let need_loop = order.iter().map(|&v| g.has_loop(v)).collect();
        let h_all = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
        Plan { order, back, need_loop, h_adj: h.masks().to_vec(), h_all, h_loops: h.loop_mask() }
    }

    #[inline]
    fn candidates(&self, pos: usize, img: &[usize]) -> u64 {
        let mut m = if self.need_loop[pos] { self.h_loops } else { self.h_all };
        for &q in &self.back[pos] {
            m &= self.h_adj[img[q]];
        }
        m
    }
}

/// Histogram of fibre sizes packed in base `n_G + 1`: digit `k - 1` counts
/// target vertices with exactly `k` preimages.
struct Tally<'a> {
    plan: &'a Plan,
    img: Vec<usize>,
    count: Vec<usize>,
    delta: Vec<u128>,
    map: KeyMap,
}

impl Tally<'_> {
    fn dfs(&mut self, pos: usize, key: u128) {
        let cand = self.plan.candidates(pos, &self.img);
        if pos + 1 == self.plan.order.len() {
            for c in bits(cand) {
                *self.map.entry(key + self.delta[self.count[c]]).or_insert(0) += 1;
            }
            return;
        }
        for c in bits(cand) {
            self.img[pos] = c;
            let k = key + self.delta[self.count[c]];
            self.count[c] += 1;
            self.dfs(pos + 1, k);
            self.count[c] -= 1;
        }
    }
}

/// Largest `|V(G)|` whose fibre histogram fits the packed key.
const PACKED_LIMIT: usize = 26;

fn decode(key: u128, base: u128, n: usize) -> Partition {
    let mut parts = Vec::new();
    let mut k = key;
    for size in 1..=n {
        let digit = (k % base) as usize;
        k /= base;
        parts.extend(std::iter::repeat(size as u32).take(digit));
    }
    Partition::from_unsorted(parts)
}

/// Counts homomorphisms `G → H` by type.
///
/// Isolated loopless vertices of `G` are not enumerated: each one moves a
/// target vertex from fibre size `k` to `k + 1`, applied to the packed histograms.
pub fn hom_type_counts(g: &Graph, h: &Graph) -> TypeCounts {
    let n = g.n();
    if n == 0 {
        return TypeCounts { counts: BTreeMap::from([(Partition::empty(), BigInt::one())]) };
    }
    if h.n() == 0 {
        return TypeCounts::default();
    }
    if n > PACKED_LIMIT {
        return slow_type_counts(g, h);
    }
    let base = n as u128 + 1;
    let pw: Vec<u128> = (0..=n).map(|k| base.pow(k as u32)).collect();
    // Raising a fibre from c to c + 1 moves one unit from digit c - 1 to digit c.
    let delta: Vec<u128> = (0..=n).map(|c| if c == 0 { 1 } else { pw[c] - pw[c - 1] }).collect();
    let (isolated, rest): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| g.row(v) == 0);
    let mut map = if rest.is_empty() {
        WideMap::from_iter([(0u128, 1u128)])
    } else {
        enumerate_packed(&g.induced(&rest), h, &delta)
    };
    for _ in &isolated {
        map = spread(&map, base, n, h.n(), &delta);
    }
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (key, c) in map {
        *counts.entry(decode(key, base, n)).or_insert_with(BigInt::zero) += c;
    }
    TypeCounts { counts }
}

type WideMap = HashMap<u128, u128, BuildHasherDefault<KeyHasher>>;

/// Adds one isolated vertex to every histogram.
fn spread(map: &WideMap, base: u128, n: usize, targets: usize, delta: &[u128]) -> WideMap {
    let mut out = WideMap::default();
    for (&key, &c) in map {
        let mut k = key;
        let mut used = 0u128;
        for size in 1..=n {
            let digit = k % base;
            k /= base;
            used += digit;
            if digit > 0 {
                *out.entry(key + delta[size]).or_insert(0) += c * digit;
            }
        }
        let empty = targets as u128 - used;
        if empty > 0 {
            *out.entry(key + delta[0]).or_insert(0) += c * empty;
        }
    }
    out
}

fn enumerate_packed(g: &Graph, h: &Graph, delta: &[u128]) -> WideMap {
    let n = g.n();
    let plan = Plan::new(g, h);
    let first = plan.candidates(0, &[]);
    let make = || Tally {
        plan: &plan,
        img: vec![0; n],
        count: vec![0; h.n()],
        delta: delta.to_vec(),
        map: KeyMap::default(),
    };
    let maps: Vec<KeyMap> = if n == 1 {
        let mut t = make();
        t.dfs(0, 0);
        vec![t.map]
    } else {
        bits(first)
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|c| {
                let mut t = make();
                t.img[0] = c;
                t.count[c] = 1;
                t.dfs(1, 1);
                t.map
            })
            .collect()
    };
    let mut out = WideMap::default();
    for m in maps {
        for (key, c) in m {
            *out.entry(key).or_insert(0) += c as u128;
        }
    }
    out
}

fn slow_type_counts(g: &Graph, h: &Graph) -> TypeCounts {
    let mut counts: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for_each_hom(g, h, |img| {
        let mut fib = vec![0u32; h.n()];
        for &c in img {
            fib[c] += 1;
        }
        *counts.entry(Partition::from_unsorted(fib)).or_insert_with(BigInt::zero) += 1;
    });
    TypeCounts { counts }
}

/// Calls `visit` with each homomorphism as an image array indexed by `G`'s vertices.
pub fn for_each_hom(g: &Graph, h: &Graph, mut visit: impl FnMut(&[usize])) {
    if g.n() == 0 {
        visit(&[]);
        return;
    }
    let plan = Plan::new(g, h);
    let mut img = vec![0; g.n()];
    let mut out = vec![0; g.n()];
    fn go(plan: &Plan, pos: usize, img: &mut [usize], out: &mut [usize], visit: &mut dyn FnMut(&[usize])) {
        if pos == plan.order.len() {
            for (p, &v) in plan.order.iter().enumerate() {
                out[v] = img[p];
            }
            visit(out);
            return;
        }
        for c in bits(plan.candidates(pos, img)) {
            img[pos] = c;
            go(plan, pos + 1, img, out, visit);
        }
    }
    go(&plan, 0, &mut img, &mut out, &mut visit);
}

/// All homomorphisms, sorted lexicographically by image array.
pub fn homomorphisms(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    for_each_hom(g, h, |img| all.push(img.to_vec()));
    all.sort();
    all
}

/// `X_G^H = Σ d_λ m^{|V(H)|}_λ`.
pub fn hcsf(g: &Graph, h: &Graph) -> SymFunc {
    let counts = hom_type_counts(g, h);
    SymFunc::from_terms(Basis::MN(h.n()), g.n(), counts.counts.into_iter().map(|(l, c)| (l, c.into())))
        .expect("type lengths never exceed |V(H)|")
}

/// `X̃_G^H`: the type counts placed on the augmented monomials.
pub fn hcsf_tilde(g: &Graph, h: &Graph) -> SymFunc {
    hcsf(g, h).relabel(Basis::MTilde).expect("relabel keeps degree")
}

pub fn self_csf(g: &Graph) -> SymFunc {
    hcsf(g, g)
}

pub fn hom_count(g: &Graph, h: &Graph) -> BigInt {
    hom_type_counts(g, h).total()
}

pub fn endomorphism_count(g: &Graph) -> BigInt {
    hom_count(g, g)
}

pub fn is_rigid(g: &Graph) -> bool {
    endomorphism_count(g).is_one()
}

/// Injective homomorphisms `F → H`, i.e. `S(F, H) · |Aut(F)|`.
pub fn injective_hom_count(f: &Graph, h: &Graph) -> BigInt {
    if f.n() > h.n() {
        return BigInt::zero();
    }
    if f.n() == 0 {
        return BigInt::one();
    }
    let plan = Plan::new(f, h);
    fn go(plan: &Plan, pos: usize, img: &mut [usize], used: u64) -> u64 {
        let cand = plan.candidates(pos, img) & !used;
        if pos + 1 == plan.order.len() {
            return cand.count_ones() as u64;
        }
        let mut total = 0;
        for c in bits(cand) {
            img[pos] = c;
            total += go(plan, pos + 1, img, used | 1 << c);
        }
        total
    }
    BigInt::from(go(&plan, 0, &mut vec![0; f.n()], 0))
}

/// Number of subgraphs of `H` isomorphic to `F` (not necessarily induced).
pub fn subgraph_count(f: &Graph, h: &Graph) -> BigInt {
    injective_hom_count(f, h) / BigInt::from(automorphism_count(f))
}

/// `[m^N_λ] X_G^H` as a sum over set partitions of type `λ` of `S(G/π, H) · |Aut(G/π)|`.
///
/// Blocks containing an edge become looped quotient vertices, which only looped
/// target vertices can receive.
pub fn coefficient_via_quotients(g: &Graph, h: &Graph, lambda: &Partition) -> Result<BigInt> {
    if lambda.size() != g.n() {
        return Err(Error::SizeMismatch { expected: g.n(), found: lambda.size() });
    }
    let ground: Vec<usize> = (0..g.n()).collect();
    let plain = g.without_weights();
    let mut memo: HashMap<crate::graph::CanonicalForm, BigInt> = HashMap::new();
    let mut total = BigInt::zero();
    for blocks in set_partitions_of_type(&ground, lambda)? {
        let q = plain.contract(&blocks, ContractMode::Merge)?.without_weights();
        if q.has_loops() && h.loop_mask() == 0 {
            continue;
        }
        let key = canonical_form(&q);
        let term = memo
            .entry(key)
            .or_insert_with(|| subgraph_count(&q, h) * BigInt::from(automorphism_count(&q)))
            .clone();
        total += term;
    }
    Ok(total)
}

/// Proper-colouring symmetric function of a vertex-weighted graph, in the `m̃` basis:
/// one `m̃` term per partition of `V(G)` into independent blocks, indexed by block weight sums.
pub fn weighted_csf(g: &Graph) -> SymFunc {
    let degree = g.total_weight() as usize;
    let mut f = SymFunc::zero(Basis::MTilde, degree);
    if g.has_loops() {
        return f;
    }
    let mut tally: BTreeMap<Partition, BigInt> = BTreeMap::new();
    fn go(g: &Graph, v: usize, blocks: &mut Vec<(u64, u32)>, tally: &mut BTreeMap<Partition, BigInt>) {
        if v == g.n() {
            let lambda = Partition::from_unsorted(blocks.iter().map(|b| b.1));
            *tally.entry(lambda).or_insert_with(BigInt::zero) += 1;
            return;
        }
        for i in 0..blocks.len() {
            if blocks[i].0 & g.row(v) == 0 {
                blocks[i].0 |= 1 << v;
                blocks[i].1 += g.weight(v);
                go(g, v + 1, blocks, tally);
                blocks[i].0 &= !(1u64 << v);
                blocks[i].1 -= g.weight(v);
            }
        }
        blocks.push((1 << v, g.weight(v)));
        go(g, v + 1, blocks, tally);
        blocks.pop();
    }
    go(g, 0, &mut Vec::new(), &mut tally);
    for (l, c) in tally {
        f.add_term(l, c.into()).expect("degree is the total weight");
    }
    f
}

/// `|End(T_λ)| = Σ_u ∏_i (A^{λ_i} 1)_u`.
pub fn spider_endomorphism_count(legs: &[usize]) -> Result<BigInt> {
    let spider = Spider::new(legs)?;
    let g = spider.graph()?;
    let n = g.n();
    let longest = spider.legs()[0];
    let mut walks: Vec<Vec<BigInt>> = vec![vec![BigInt::one(); n]];
    for k in 1..=longest {
        let prev = &walks[k - 1];
        let next = (0..n).map(|u| g.neighbors(u).map(|v| &prev[v]).sum()).collect();
        walks.push(next);
    }
    Ok((0..n).map(|u| spider.legs().iter().map(|&l| walks[l][u].clone()).product::<BigInt>()).sum())
}
