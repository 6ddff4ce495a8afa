//! Invariants recoverable from a self-CSF `X_G^G`.
//!
//! Every reader works in the scaled basis `m^n` where `n` is the degree, so a
//! coefficient is the number of endomorphisms of that type.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::{binomial, convert, factorial, stirling2, Basis, Partition, SymFunc};
use crate::error::{Error, Result};
use crate::graph::{all_trees, Caterpillar, ContractMode, Graph, Spider};
use crate::hom::{hom_type_counts, injective_hom_count, self_csf};

/// Re-expresses `x` in `m^n`, `n` its degree.
fn scaled(x: &SymFunc) -> Result<SymFunc> {
    convert(x, Basis::MN(x.degree()))
}

fn as_int(c: &BigRational, what: &str) -> Result<BigInt> {
    if c.is_integer() {
        Ok(c.to_integer())
    } else {
        Err(Error::InconsistentCoefficients(format!("{what} = {c} is not an integer")))
    }
}

fn exact_div(a: &BigInt, b: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::InconsistentCoefficients(format!("{what}: {a} is not divisible by {b}")))
    }
}

fn part(v: Vec<u32>) -> Partition {
    Partition::from_unsorted(v)
}

/// Nonzero length-2 coefficients keyed by `(a, b)`, `a ≥ b`.
fn length_two_terms(x: &SymFunc) -> Result<BTreeMap<(u32, u32), BigInt>> {
    x.terms()
        .filter(|(l, _)| l.len() == 2)
        .map(|(l, c)| Ok(((l.parts()[0], l.parts()[1]), as_int(c, &format!("[{l}]"))?)))
        .collect()
}

/// Induced-star counts and degree power sums of a connected bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSums {
    /// Size of the smaller side of the bipartition.
    pub k: usize,
    /// `Σ_v C(deg v, ℓ)` at index `ℓ - 1`, for `ℓ = 1..=k`.
    pub stars: Vec<BigInt>,
    /// `Σ_v deg(v)^ℓ` at index `ℓ - 1`.
    pub power_sums: Vec<BigInt>,
}

/// Reads `Σ_v C(deg v, ℓ)` for `ℓ = 1..=k` from a self-CSF.
///
/// Only valid for connected bipartite graphs; `assume_connected` must be set by
/// the caller to acknowledge this.
pub fn star_sums_from_self_csf(x: &SymFunc, assume_connected: bool) -> Result<StarSums> {
    if !assume_connected {
        return Err(Error::HypothesisViolated("star sums need a connected graph".into()));
    }
    let x = scaled(x)?;
    let two = length_two_terms(&x)?;
    let (big, k) = match two.len() {
        0 => return Err(Error::NotBipartite),
        1 => {
            let &(a, b) = two.keys().next().expect("one term");
            (a as usize, b as usize)
        }
        m => return Err(Error::Ambiguous(format!("{m} length-2 terms for a connected graph"))),
    };
    let balanced = big == k;
    let mut stars = Vec::with_capacity(k);
    for l in 1..=k {
        let (lambda, mut denom) = if l == k {
            let mut v = vec![big as u32];
            v.extend(std::iter::repeat(1).take(k));
            (part(v), factorial(k))
        } else {
            let mut v = vec![big as u32, (k - l + 1) as u32];
            v.extend(std::iter::repeat(1).take(l - 1));
            (part(v), factorial(l) * binomial(k, l - 1))
        };
        if balanced && l >= 2 {
            denom *= 2;
        }
        let c = as_int(&x.coefficient(&lambda), &format!("[{lambda}]"))?;
        stars.push(exact_div(&c, &denom, &format!("star sum {l}"))?);
    }
    let power_sums = (1..=k)
        .map(|l| (1..=l).map(|j| stirling2(l, j) * factorial(j) * &stars[j - 1]).sum())
        .collect();
    Ok(StarSums { k, stars, power_sums })
}

/// Part-size differences `|k1 - k2|` of the components of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffMultiset {
    /// Nonzero differences, ascending, with repetition.
    pub diffs: Vec<usize>,
    /// `|E(G)| · 2^{e+1}` with `e` the number of balanced components; zero for edgeless input.
    pub base: BigInt,
}

/// Recovers the nonzero component differences by peeling factors `1 + x^d`
/// off the length-2 coefficient generating function.
pub fn diff_multiset_from_self_csf(x: &SymFunc) -> Result<DiffMultiset> {
    let x = scaled(x)?;
    let n = x.degree();
    if !x.coefficient(&part(vec![n as u32])).is_zero() {
        return Ok(DiffMultiset { diffs: vec![1; n], base: BigInt::zero() });
    }
    let two = length_two_terms(&x)?;
    if two.is_empty() {
        return Err(Error::NotBipartite);
    }
    let by_diff: BTreeMap<usize, BigInt> = two.iter().map(|(&(a, b), c)| ((a - b) as usize, c.clone())).collect();
    let s = *by_diff.keys().next_back().expect("nonempty");
    let base = if s == 0 { &by_diff[&0] * 2 } else { by_diff[&s].clone() };
    // q[t] is the number of subsets of components whose differences sum to t.
    let mut q = vec![BigInt::zero(); s + 1];
    for (&d, c) in &by_diff {
        let t = (s + d) / 2;
        if (s + d) % 2 != 0 {
            return Err(Error::InconsistentCoefficients(format!("difference {d} has the wrong parity")));
        }
        let val = if d == 0 { c * 2 } else { c.clone() };
        q[t] = exact_div(&val, &base, &format!("difference {d}"))?;
        q[s - t] = q[t].clone();
    }
    let mut diffs = Vec::new();
    while let Some(d) = (1..q.len()).find(|&t| !q[t].is_zero()) {
        let mult = q[d].to_usize().filter(|&m| m > 0).ok_or_else(|| {
            Error::InconsistentCoefficients(format!("coefficient {} at {d} is not a positive count", q[d]))
        })?;
        for _ in 0..mult {
            q = divide_one_plus(&q, d)?;
            diffs.push(d);
        }
    }
    if q != [BigInt::one()] {
        return Err(Error::InconsistentCoefficients("peeling did not end at 1".into()));
    }
    Ok(DiffMultiset { diffs, base })
}

/// Exact quotient of `q` by `1 + x^d` with nonnegative coefficients.
fn divide_one_plus(q: &[BigInt], d: usize) -> Result<Vec<BigInt>> {
    if q.len() <= d {
        return Err(Error::InconsistentCoefficients(format!("cannot divide by 1 + x^{d}")));
    }
    let mut rest = q.to_vec();
    let mut out = vec![BigInt::zero(); q.len() - d];
    for i in 0..out.len() {
        out[i] = rest[i].clone();
        rest[i + d] -= &out[i];
        rest[i] = BigInt::zero();
        if out[i].is_negative() {
            return Err(Error::InconsistentCoefficients("negative count while peeling".into()));
        }
    }
    if rest.iter().any(|c| !c.is_zero()) {
        return Err(Error::InconsistentCoefficients(format!("1 + x^{d} does not divide")));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeVerdict {
    Tree,
    NonTree,
    /// The self-CSF shared by `P3` and `K1 ⊔ K2`.
    Exceptional,
}

impl std::fmt::Display for TreeVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TreeVerdict::Tree => "tree",
            TreeVerdict::NonTree => "non-tree",
            TreeVerdict::Exceptional => "exceptional",
        })
    }
}

/// Decides from a self-CSF whether the graph is a tree.
pub fn tree_verdict(x: &SymFunc) -> TreeVerdict {
    let Ok(x) = scaled(x) else {
        return TreeVerdict::NonTree;
    };
    let n = x.degree();
    if n == 1 {
        return TreeVerdict::Tree;
    }
    if !x.coefficient(&part(vec![n as u32])).is_zero() {
        return TreeVerdict::NonTree;
    }
    let two: Vec<_> = x.terms().filter(|(l, _)| l.len() == 2).collect();
    if two.len() != 1 || *two[0].1 != BigRational::from_integer(BigInt::from(2 * (n - 1))) {
        return TreeVerdict::NonTree;
    }
    if n == 3 {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).expect("P3");
        if x == self_csf(&p3) {
            return TreeVerdict::Exceptional;
        }
    }
    TreeVerdict::Tree
}

/// `[m^n_{2,1^{n-2}}] X_T^T` computed four ways.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M21Values {
    /// Sum over vertex pairs at distance two.
    pub lemma: BigInt,
    /// The same sum restricted to the admissible degree triples.
    pub prop: BigInt,
    /// Leaf form with the double-count correction.
    pub cor: BigInt,
    /// Direct hom-engine count.
    pub engine: BigInt,
}

impl M21Values {
    pub fn agree(&self) -> bool {
        self.lemma == self.engine && self.prop == self.engine && self.cor == self.engine
    }
}

/// `(u, v, w)` with `v` the common neighbour of `u < w`.
fn distance_two_pairs(t: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for u in 0..t.n() {
        for v in t.neighbors(u) {
            for w in t.neighbors(v) {
                if w > u {
                    out.push((u, v, w));
                }
            }
        }
    }
    out
}

fn merged(t: &Graph, u: usize, w: usize) -> Result<Graph> {
    let mut blocks = vec![vec![u, w]];
    blocks.extend((0..t.n()).filter(|&x| x != u && x != w).map(|x| vec![x]));
    t.contract(&blocks, ContractMode::Quotient)
}

fn without_vertex(t: &Graph, v: usize) -> Graph {
    let keep: Vec<usize> = (0..t.n()).filter(|&x| x != v).collect();
    t.induced(&keep)
}

fn in_j(du: usize, dv: usize, dw: usize) -> bool {
    (du >= 2 && dw == 2 && dv == du + 1) || (du == 2 && dw >= 2 && dv == dw + 1)
}

pub fn tree_m21_coefficient(t: &Graph) -> Result<M21Values> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let mut lambda = vec![2u32];
    lambda.extend(std::iter::repeat(1).take(n.saturating_sub(2)));
    let engine = if n >= 2 { hom_type_counts(t, t).get(&part(lambda)) } else { BigInt::zero() };

    let deg: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let pairs = distance_two_pairs(t);
    let mut lemma = BigInt::zero();
    let mut prop = BigInt::zero();
    let mut j_term = BigInt::zero();
    for &(u, v, w) in &pairs {
        let term = injective_hom_count(&merged(t, u, w)?, t);
        let (du, dv, dw) = (deg[u], deg[v], deg[w]);
        let leafy = du == 1 || dw == 1;
        let j = in_j(du, dv, dw);
        if leafy || j {
            prop += &term;
        }
        if j {
            j_term += &term;
        }
        lemma += term;
    }

    let leaves: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
    let mut cor = j_term;
    let mut deleted: BTreeMap<usize, BigInt> = BTreeMap::new();
    for &l in &leaves {
        let c = injective_hom_count(&without_vertex(t, l), t);
        let nei = t.neighbors(l).next().expect("leaf has a neighbour");
        cor += &c * BigInt::from(deg[nei] - 1);
        deleted.insert(l, c);
    }
    for &(u, _, w) in &pairs {
        if deg[u] == 1 && deg[w] == 1 {
            cor -= &deleted[&u];
        }
    }
    Ok(M21Values { lemma, prop, cor, engine })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LegCount {
    pub legs: usize,
    /// Set when the input was recognised as a star.
    pub star: bool,
}

/// Number of legs of a spider from its self-CSF.
///
/// The result is meaningless when `x` is not the self-CSF of a spider.
pub fn spider_leg_count_from_self_csf(x: &SymFunc) -> Result<LegCount> {
    let y = scaled(x)?;
    let n = y.degree();
    if n >= 2 && !y.coefficient(&part(vec![n as u32 - 1, 1])).is_zero() {
        return Ok(LegCount { legs: n - 1, star: true });
    }
    let sums = star_sums_from_self_csf(&y, true)?;
    if sums.k < 2 {
        return Err(Error::NotASpider("too few vertices on the small side".into()));
    }
    let p2 = &sums.power_sums[1];
    let disc = BigInt::from(9) - BigInt::from(4) * (BigInt::from(4 * (n - 1)) - p2);
    let root: BigInt = disc.sqrt();
    if disc.is_negative() || &root * &root != disc || (BigInt::from(3) + &root).is_odd() {
        return Err(Error::NotASpider(format!("discriminant {disc} is not an odd square")));
    }
    let legs: BigInt = (BigInt::from(3) + root) / BigInt::from(2);
    let legs = legs.to_usize().expect("small");
    Ok(LegCount { legs, star: false })
}

/// `∏_i r_i!` over leg-length multiplicities.
pub fn spider_aut_count(legs: &[usize]) -> Result<BigInt> {
    let s = Spider::new(legs)?;
    Ok(part(s.legs().iter().map(|&l| l as u32).collect()).multiplicity_factorial())
}

/// `[m^n_{2,1^{n-2}}] / [m^n_{1^n}]` for a spider with at least four legs.
pub fn spider_m21_ratio(legs: &[usize]) -> Result<BigRational> {
    let s = Spider::new(legs)?;
    let l = s.legs().len();
    if l < 4 {
        return Err(Error::LegsBelow4(l));
    }
    let lambda = part(s.legs().iter().map(|&x| x as u32).collect());
    let r = |j: u32| BigInt::from(lambda.multiplicity(j));
    let (r1, ll) = (r(1), BigInt::from(l));
    let adjacent: BigInt = (2..=lambda.parts()[0]).map(|j| r(j - 1) * r(j)).sum();
    let twice = BigInt::from(2) * (&r1 * &ll + &ll) - BigInt::from(3) * &r1 - &r1 * &r1 + BigInt::from(2) * adjacent;
    Ok(BigRational::new(twice, BigInt::from(2)))
}

/// Leading eigen-term estimate of `|End(T_λ)|`.
pub fn spider_endo_approximation(legs: &[usize]) -> Result<f64> {
    let s = Spider::new(legs)?;
    let g = s.graph()?;
    let n = g.n();
    let a = DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 });
    let eig = a.clone().symmetric_eigen();
    let (idx, &rho) = eig
        .eigenvalues
        .iter()
        .enumerate()
        .max_by(|x: &(usize, &f64), y| x.1.total_cmp(y.1))
        .ok_or_else(|| Error::EigenConvergenceFailure("no eigenvalues".into()))?;
    let mut x: DVector<f64> = eig.eigenvectors.column(idx).into_owned();
    if x.sum() < 0.0 {
        x = -x;
    }
    let residual = (&a * &x - &x * rho).norm();
    if !(residual <= 1e-9 * a.norm()) {
        return Err(Error::EigenConvergenceFailure(format!("residual {residual:e}")));
    }
    let parts = g.bipartition().ok_or(Error::NotBipartite)?;
    let side0: Vec<usize> = {
        let c = &parts.components[0];
        if c.first.contains(&0) { c.first.clone() } else { c.second.clone() }
    };
    let in0: Vec<bool> = (0..n).map(|v| side0.contains(&v)).collect();
    let norm2 = |flag: bool| (0..n).filter(|&v| in0[v] == flag).map(|v| x[v] * x[v]).sum::<f64>().sqrt();
    let half = std::f64::consts::FRAC_1_SQRT_2;
    let (n0, n1) = (norm2(true), norm2(false));
    if (n0 - half).abs() > 1e-9 || (n1 - half).abs() > 1e-9 {
        return Err(Error::EigenConvergenceFailure(format!("side norms {n0} and {n1} differ from 2^-1/2")));
    }
    let l = s.legs().len() as i32;
    let even = s.legs().iter().filter(|&&k| k % 2 == 0).count() as i32;
    let odd = l - even;
    let sum0: f64 = (0..n).filter(|&v| in0[v]).map(|v| x[v]).sum();
    let sum1: f64 = (0..n).filter(|&v| !in0[v]).map(|v| x[v]).sum();
    let pow0: f64 = (0..n).filter(|&v| in0[v]).map(|v| x[v].powi(l)).sum();
    let pow1: f64 = (0..n).filter(|&v| !in0[v]).map(|v| x[v].powi(l)).sum();
    let lead = 2f64.powi(l) * rho.powi(n as i32 - 1);
    Ok(lead * (pow0 * sum0.powi(even) * sum1.powi(odd) + pow1 * sum0.powi(odd) * sum1.powi(even)))
}

/// `(1 + [rev f = f]) ∏ f_i!`.
pub fn caterpillar_aut_count(c: &Caterpillar) -> BigInt {
    let f = c.leaves();
    let palindrome = f.iter().eq(f.iter().rev());
    let prod: BigInt = f.iter().map(|&k| factorial(k)).product();
    if palindrome { prod * 2 } else { prod }
}

/// Multiset of spine degrees of a caterpillar with spine length `s`, ascending.
pub fn caterpillar_spine_degrees(x: &SymFunc, s: usize) -> Result<Vec<usize>> {
    let n = x.degree();
    if s == 0 || n < s + 3 {
        return Err(Error::InvalidParameter(format!("spine length {s} does not fit {n} vertices")));
    }
    let sums = star_sums_from_self_csf(x, true)?;
    let spine = s + 1;
    let leaves = BigInt::from(n - spine);
    let unknown = sums.k.min(spine);
    let forced = spine - unknown;
    let power: Vec<BigInt> = (1..=unknown)
        .map(|j| &sums.power_sums[j - 1] - &leaves - BigInt::from(forced) * (BigInt::one() << j))
        .collect();
    let mut roots = integer_roots(&elementary_from_power(&power)?, n)?;
    roots.extend(std::iter::repeat(2).take(forced));
    roots.sort_unstable();
    Ok(roots)
}

/// Newton's identities: `e_1..e_r` from `p_1..p_r`, `e_0 = 1` first.
fn elementary_from_power(p: &[BigInt]) -> Result<Vec<BigInt>> {
    let mut e = vec![BigInt::one()];
    for m in 1..=p.len() {
        let mut acc = BigInt::zero();
        for i in 1..=m {
            let term = &e[m - i] * &p[i - 1];
            if i % 2 == 1 { acc += term } else { acc -= term }
        }
        let (q, r) = acc.div_rem(&BigInt::from(m));
        if !r.is_zero() {
            return Err(Error::RootExtractionFailure(format!("e_{m} is not an integer")));
        }
        e.push(q);
    }
    Ok(e)
}

/// Roots in `1..=max` of `∏ (x - d) = Σ_m (-1)^m e_m x^{r-m}`, with multiplicity.
fn integer_roots(e: &[BigInt], max: usize) -> Result<Vec<usize>> {
    let r = e.len() - 1;
    let mut poly: Vec<BigInt> = e.iter().enumerate().map(|(m, c)| if m % 2 == 0 { c.clone() } else { -c }).collect();
    let mut roots = Vec::with_capacity(r);
    let mut d = 1;
    while poly.len() > 1 && d <= max {
        let dd = BigInt::from(d);
        let mut quotient = Vec::with_capacity(poly.len() - 1);
        let mut acc = BigInt::zero();
        for c in &poly {
            acc = acc * &dd + c;
            quotient.push(acc.clone());
        }
        if acc.is_zero() {
            quotient.pop();
            poly = quotient;
            roots.push(d);
        } else {
            d += 1;
        }
    }
    if roots.len() != r {
        return Err(Error::RootExtractionFailure(format!("found {} of {r} integer roots", roots.len())));
    }
    Ok(roots)
}

/// `(1 + [rev f = f]) f_0 f_s`, read from the self-CSF of the caterpillar with leaf counts `f`.
pub fn caterpillar_f0fs(x: &SymFunc, f: &[usize]) -> Result<BigInt> {
    let c = Caterpillar::new(f)?;
    let degrees = caterpillar_spine_degrees(x, c.s())?;
    let y = scaled(x)?;
    let aut = as_int(&y.coefficient(&Partition::ones(y.degree())), "automorphism count")?;
    let denom: BigInt = degrees.iter().map(|&d| factorial(d - 2)).product();
    exact_div(&aut, &denom, "automorphisms over spine factorials")
}

/// Two forests with the same self-CSF.
#[derive(Debug, Clone)]
pub struct ForestCollision {
    pub first: Graph,
    pub second: Graph,
    pub components: (usize, usize),
}

#[derive(Debug, Clone)]
pub struct ForestReport {
    pub n: usize,
    pub forests: usize,
    /// Colliding pairs whose component counts differ.
    pub violations: Vec<ForestCollision>,
}

/// Every forest on `n` vertices, one per isomorphism class.
pub fn all_forests(n: usize) -> Vec<Graph> {
    let trees: Vec<Vec<Graph>> = (0..=n).map(all_trees).collect();
    let mut out = Vec::new();
    // Components are chosen in non-increasing (size, index) order.
    fn go(rest: usize, cap: (usize, usize), trees: &[Vec<Graph>], acc: &Graph, out: &mut Vec<Graph>) {
        if rest == 0 {
            out.push(acc.clone());
            return;
        }
        for size in (1..=rest.min(cap.0)).rev() {
            let top = if size == cap.0 { cap.1 + 1 } else { trees[size].len() };
            for i in 0..top {
                let next = acc.disjoint_union(&trees[size][i]).expect("within vertex limit");
                go(rest - size, (size, i), trees, &next, out);
            }
        }
    }
    if n > 0 {
        let start = (n, trees[n].len().saturating_sub(1));
        go(n, start, &trees, &Graph::empty(0).expect("empty"), &mut out);
    }
    out
}

pub fn forest_component_theorem_check(n: usize) -> ForestReport {
    let forests = all_forests(n);
    let keys: Vec<String> = forests.par_iter().map(|f| self_csf(f).to_machine()).collect();
    let mut groups: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
    for (i, k) in keys.iter().enumerate() {
        groups.entry(k).or_default().push(i);
    }
    let mut violations = Vec::new();
    for members in groups.values() {
        for (a, &i) in members.iter().enumerate() {
            for &j in &members[a + 1..] {
                let (ki, kj) = (forests[i].component_count(), forests[j].component_count());
                if ki != kj {
                    violations.push(ForestCollision {
                        first: forests[i].clone(),
                        second: forests[j].clone(),
                        components: (ki, kj),
                    });
                }
            }
        }
    }
    ForestReport { n, forests: forests.len(), violations }
}

/// Everything read off a single self-CSF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelfCsfReport {
    pub n: usize,
    pub automorphisms: BigInt,
    pub bipartite: bool,
    pub star_sums: Option<StarSums>,
    pub differences: Option<DiffMultiset>,
    pub tree: TreeVerdict,
}

pub fn self_csf_report(x: &SymFunc, assume_connected: bool) -> Result<SelfCsfReport> {
    let y = scaled(x)?;
    let n = y.degree();
    let automorphisms = as_int(&y.coefficient(&Partition::ones(n)), "automorphism count")?;
    let bipartite = y.terms().any(|(l, _)| l.len() == 2) || !y.coefficient(&part(vec![n as u32])).is_zero();
    let star_sums = if assume_connected && bipartite { star_sums_from_self_csf(&y, true).ok() } else { None };
    let differences = if bipartite { diff_multiset_from_self_csf(&y).ok() } else { None };
    Ok(SelfCsfReport { n, automorphisms, bipartite, star_sums, differences, tree: tree_verdict(&y) })
}
