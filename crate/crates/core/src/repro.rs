//! Reproduction runs for the acceptance criteria, one function per criterion.

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{convert, omega, partitions_of, Basis, Partition, SignProfile, SymFunc};
use crate::basis::{
    clique_basis, complete_minus_edge_check, fixed_g_fixture, k_clones_check, length2_projection_dimension, loop_bases,
    multipartite_self_basis, p_h, union_cliques_basis, verify_fixed_g_basis, LoopKind,
};
use crate::chrom::{
    c4_tree_polynomial, chromatic_polynomial, find_sn1_collision, h_chromatic_polynomial,
    h_chromatic_polynomial_by_evaluation, independent_set_profile, sn1_polynomial_from_profile,
};
use crate::error::{Error, Result};
use crate::graph::{all_graphs, all_trees, build_family, is_isomorphic, Graph, Spider};
use crate::hom::{hcsf, hcsf_tilde, hom_count, hom_type_counts, is_rigid, self_csf, spider_endomorphism_count, weighted_csf};
use crate::pexp::{k2n_p_expansion, kmn_oracle, kmn_property_check, p_monotone_verdict, star_p_expansion, star_predicted_sign};
use crate::recursion::{hcsf_disjoint_h, kn1_csf};
use crate::self_analysis::{spider_aut_count, spider_endo_approximation, spider_m21_ratio};

/// `(number, CLI id, title, time budget in seconds)`.
pub const CRITERIA: [(u8, &str, &str, Option<u64>); 14] = [
    (1, "p3-self", "self-CSF of P3 equals self-CSF of K1+K2", Some(1)),
    (2, "stanley-pair", "equal CSFs, different self-CSFs", Some(1)),
    (3, "tree-distinct", "trees up to 9 vertices have distinct self-CSFs", Some(300)),
    (4, "phn", "proportion of spanning targets p_H(n)", Some(600)),
    (5, "spider-endo", "spider endomorphism counts and approximation", Some(10)),
    (6, "spider-m21", "m21 ratios of the two 12-vertex spiders", Some(120)),
    (7, "star-pexp", "star p-expansion and omega-monotonicity", Some(300)),
    (8, "k2n-pexp", "K(2,n) p-expansion and K(m,n) properties", None),
    (9, "basis-ranks", "basis constructions have full rank", Some(300)),
    (10, "deficiency", "rank deficiencies of near-complete targets", None),
    (11, "omega-mixed", "omega of X_P4^C7 is sign-mixed in p", Some(1)),
    (12, "recursion", "disjoint-target and K_n^1 recursions", None),
    (13, "chromatic", "H-chromatic polynomial machinery", None),
    (14, "property-suites", "bounded property suites", None),
];

/// One sub-check with its observed and expected values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub observed: String,
    pub expected: String,
    pub pass: bool,
}

impl Check {
    fn new(name: impl Into<String>, observed: impl fmt::Display, expected: impl fmt::Display) -> Self {
        let (observed, expected) = (observed.to_string(), expected.to_string());
        Check { name: name.into(), pass: observed == expected, observed, expected }
    }

    fn with_pass(name: impl Into<String>, observed: impl fmt::Display, expected: impl fmt::Display, pass: bool) -> Self {
        Check { name: name.into(), observed: observed.to_string(), expected: expected.to_string(), pass }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub number: u8,
    pub id: &'static str,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl CriterionResult {
    pub fn within_budget(&self) -> bool {
        self.budget.map_or(true, |b| self.elapsed <= b)
    }

    pub fn pass(&self) -> bool {
        self.within_budget() && self.checks.iter().all(|c| c.pass)
    }

    /// Wall time against budget, kept out of `Display` so that output is reproducible.
    pub fn timing(&self) -> String {
        match self.budget {
            Some(b) => format!("{:.2}s (budget {}s)", self.elapsed.as_secs_f64(), b.as_secs()),
            None => format!("{:.2}s", self.elapsed.as_secs_f64()),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

impl fmt::Display for CriterionResult {
    /// Summary line, then one indented line per sub-check.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} criterion {:>2} {}: {}", self.number, self.id, self.title)?;
        for c in &self.checks {
            let tag = if c.pass { "ok  " } else { "FAIL" };
            write!(f, "\n  {tag} {}: observed {} expected {}", c.name, c.observed, c.expected)?;
        }
        Ok(())
    }
}

/// Looks up a criterion by CLI id or number.
pub fn lookup(key: &str) -> Result<u8> {
    CRITERIA
        .iter()
        .find(|(n, id, ..)| *id == key || n.to_string() == key)
        .map(|c| c.0)
        .ok_or_else(|| Error::InvalidParameter(format!("unknown criterion {key:?}")))
}

pub fn run(number: u8) -> Result<CriterionResult> {
    let &(_, id, title, budget) = CRITERIA
        .iter()
        .find(|c| c.0 == number)
        .ok_or_else(|| Error::InvalidParameter(format!("no criterion {number}")))?;
    let start = Instant::now();
    let checks = match number {
        1 => p3_self()?,
        2 => stanley_pair()?,
        3 => tree_distinct()?,
        4 => phn()?,
        5 => spider_endo()?,
        6 => spider_m21()?,
        7 => star_pexp()?,
        8 => k2n_pexp()?,
        9 => basis_ranks()?,
        10 => deficiency()?,
        11 => omega_mixed()?,
        12 => recursion()?,
        13 => chromatic()?,
        _ => property_suites()?,
    };
    Ok(CriterionResult {
        number,
        id,
        title,
        checks,
        elapsed: start.elapsed(),
        budget: budget.map(Duration::from_secs),
    })
}

pub fn run_all() -> Result<Vec<CriterionResult>> {
    CRITERIA.iter().map(|c| run(c.0)).collect()
}

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).collect()
}

fn bipartite_up_to(n: usize) -> Vec<Graph> {
    graphs_up_to(n).into_iter().filter(Graph::is_bipartite).collect()
}

/// `"k/total"` counter for exhaustive sweeps.
fn tally(name: &str, results: impl IntoIterator<Item = bool>) -> Check {
    let (mut ok, mut total) = (0usize, 0usize);
    for r in results {
        total += 1;
        ok += usize::from(r);
    }
    Check::new(name, format!("{ok}/{total}"), format!("{total}/{total}"))
}

fn p3_self() -> Result<Vec<Check>> {
    let a = self_csf(&build_family("P:3")?);
    let b = self_csf(&build_family("E:1+P:2")?);
    Ok(vec![Check::with_pass("X_P3^P3 vs X_(K1+K2)^(K1+K2)", &a, &b, a == b)])
}

fn stanley_pair() -> Result<Vec<Check>> {
    let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])?;
    let other = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (2, 4)])?;
    let k5 = build_family("Kn:5")?;
    let via_k5 = |g: &Graph| convert(&hcsf(g, &k5), Basis::M);
    let (a, b) = (via_k5(&bowtie)?, via_k5(&other)?);
    let (wa, wb) = (weighted_csf(&bowtie), weighted_csf(&other));
    let ones = Partition::ones(5);
    let ca = self_csf(&bowtie).coefficient(&ones);
    let cb = self_csf(&other).coefficient(&ones);
    Ok(vec![
        Check::with_pass("CSF via K5 target", if a == b { "equal" } else { "different" }, "equal", a == b),
        Check::with_pass("CSF via weighted oracle", if wa == wb { "equal" } else { "different" }, "equal", wa == wb),
        Check::new("[m^5_(1^5)] self-coefficients", format!("{ca} / {cb}"), "8 / 2"),
    ])
}

fn tree_distinct_up_to(max_n: usize) -> (Vec<usize>, bool) {
    let mut counts = Vec::new();
    let mut distinct = true;
    for n in 1..=max_n {
        let trees = all_trees(n);
        let mut keys: Vec<String> = trees.iter().map(|t| self_csf(t).to_machine()).collect();
        keys.sort_unstable();
        keys.dedup();
        distinct &= keys.len() == trees.len();
        counts.push(trees.len());
    }
    (counts, distinct)
}

fn join<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn tree_distinct() -> Result<Vec<Check>> {
    let (counts, distinct) = tree_distinct_up_to(9);
    Ok(vec![
        Check::new("tree counts n = 1..9", join(&counts), "1,1,1,2,3,6,11,23,47"),
        Check::with_pass("pairwise distinct self-CSFs", distinct, true, distinct),
    ])
}

fn phn() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (n, want) in [(2, "1/2"), (3, "2/4"), (4, "7/11"), (5, "27/34"), (6, "138/156")] {
        checks.push(Check::new(format!("p_H({n})"), p_h(n)?, want));
    }
    let r = p_h(4)?;
    let named: Vec<Graph> = ["E:4", "S:4", "C:4", "Kminus:4,1"].iter().map(|d| build_family(d)).collect::<Result<_>>()?;
    let exact = r.bad.len() == named.len() && named.iter().all(|h| r.bad.iter().any(|(b, _)| is_isomorphic(b, h)));
    checks.push(Check::with_pass(
        "n = 4 non-spanning targets",
        format!("{} graphs, named set matched: {exact}", r.bad.len()),
        "{edgeless, claw, C4, K4-e}",
        exact,
    ));
    Ok(checks)
}

/// Absolute tolerance for the spider eigen-approximation.
pub const SPIDER_APPROX_TOLERANCE: f64 = 0.01e6;

fn spider_endo() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (legs, exact, approx) in [([6, 4, 4, 1], 2633524u64, 3.38e6), ([9, 2, 2, 2], 2628414, 3.13e6)] {
        let got = spider_endomorphism_count(&legs)?;
        checks.push(Check::new(format!("|End(T_{})|", join(&legs)), got, exact));
        let a = spider_endo_approximation(&legs)?;
        checks.push(Check::with_pass(
            format!("approximation T_{}", join(&legs)),
            format!("{a:.0}"),
            format!("{approx:.0} ± {SPIDER_APPROX_TOLERANCE:.0}"),
            (a - approx).abs() <= SPIDER_APPROX_TOLERANCE,
        ));
    }
    Ok(checks)
}

fn spider_m21() -> Result<Vec<Check>> {
    let t1 = [3, 2, 1, 1, 1, 1, 1, 1];
    let t2 = [2, 2, 2, 1, 1, 1, 1, 1];
    let mut checks = Vec::new();
    for (legs, want) in [(&t1[..], 36), (&t2[..], 43)] {
        let name = format!("T_({})", join(legs));
        checks.push(Check::new(format!("{name} closed form"), spider_m21_ratio(legs)?, want));
        let g = Spider::new(legs)?.graph()?;
        let n = g.n();
        let mut l = vec![2u32];
        l.extend(std::iter::repeat(1).take(n - 2));
        let m21 = hom_type_counts(&g, &g).get(&Partition::new(l)?);
        let ratio = BigRational::new(m21, spider_aut_count(legs)?);
        checks.push(Check::new(format!("{name} hom engine"), ratio, want));
    }
    Ok(checks)
}

fn star_pexp() -> Result<Vec<Check>> {
    let mut closed = Vec::new();
    for g in bipartite_up_to(5) {
        let need = g.bipartition().map_or(0, |b| b.sum_k1());
        for n in need..=need + 2 {
            closed.push(star_p_expansion(&g, n)? == kmn_oracle(&g, 1, n)?);
        }
    }
    let mut monotone = Vec::new();
    for g in bipartite_up_to(6) {
        let f = kmn_oracle(&g, 1, 7)?;
        let verdict = p_monotone_verdict(&f)?;
        monotone.push(verdict != SignProfile::Mixed && verdict == star_predicted_sign(&g)?);
    }
    Ok(vec![
        tally("closed form = oracle, bipartite G ≤ 5", closed),
        tally("omega-monotone with predicted sign, G ≤ 6, n = 7", monotone),
    ])
}

fn k2n_pexp() -> Result<Vec<Check>> {
    let (mut closed, mut corollary, mut kmn) = (Vec::new(), Vec::new(), Vec::new());
    for g in bipartite_up_to(5) {
        let need = g.bipartition().map_or(0, |b| b.sum_k1());
        for n in need.max(2)..=need + 2 {
            closed.push(k2n_p_expansion(&g, n)? == kmn_oracle(&g, 2, n)?);
            corollary.push(kmn_property_check(&g, 2, n)?.holds());
        }
        for m in [2, 3] {
            kmn.push(kmn_property_check(&g, m, 6)?.holds());
        }
    }
    Ok(vec![
        tally("closed form = oracle, bipartite G ≤ 5", closed),
        tally("≤ 2 parts above 1, uniform omega-sign", corollary),
        tally("K(m,6) properties, m = 2, 3", kmn),
    ])
}

fn basis_ranks() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for n in 1..=5 {
        let p = partitions_of(n, None).len();
        for (name, c) in [
            ("multipartite", multipartite_self_basis(n)?),
            ("path-loop", loop_bases(LoopKind::PathLoop, n)?),
            ("edgeless-loops", loop_bases(LoopKind::EdgelessLoops, n)?),
        ] {
            checks.push(Check::with_pass(
                format!("{name} n = {n}"),
                format!("rank {}, triangular {}", c.rank(), c.is_triangular()),
                format!("rank {p}, triangular true"),
                c.rank() == p && c.is_triangular(),
            ));
        }
    }
    let u = union_cliques_basis(&build_family("Kn:3+Kn:2")?)?;
    checks.push(Check::new("union of cliques K3+K2", u.rank(), 7));
    let k4_pendant = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)])?;
    checks.push(Check::new("clique basis K4 with pendant, n = 4", clique_basis(&k4_pendant, 4)?.rank(), 5));
    for n in [4, 5] {
        let (g, hs) = fixed_g_fixture(n)?;
        let r = verify_fixed_g_basis(&g, &hs)?;
        checks.push(Check::new(format!("fixed-G fixture n = {n}"), r.is_basis(), true));
    }
    Ok(checks)
}

fn deficiency() -> Result<Vec<Check>> {
    let mut checks = Vec::new();
    for (name, r) in [
        ("K4 - e", complete_minus_edge_check(4)?),
        ("K5 - e", complete_minus_edge_check(5)?),
        ("K5 minus 2 disjoint edges", k_clones_check(5, 2)?),
    ] {
        checks.push(Check::new(name, r.observed, r.expected));
    }
    let expected = [4, 6, 5];
    for (c, e) in checks.iter_mut().zip(expected) {
        c.pass &= c.expected == e.to_string();
    }
    checks.push(Check::new("length2_projection_dimension(P12)", length2_projection_dimension(&build_family("P:12")?)?, 5));
    Ok(checks)
}

fn omega_mixed() -> Result<Vec<Check>> {
    let x = hcsf(&build_family("P:4")?, &build_family("C:7")?);
    let w = omega(&convert(&x, Basis::P)?)?;
    Ok(vec![Check::new("sign profile of omega(X_P4^C7) in p", w.sign_profile(), SignProfile::Mixed)])
}

fn recursion() -> Result<Vec<Check>> {
    let mut pieces = graphs_up_to(3);
    for d in ["Eloop:1", "Ploop:2", "Ploop:3", "Eloop:2", "Sn1:3", "Kn1:3"] {
        pieces.push(build_family(d)?);
    }
    let mut disjoint = Vec::new();
    for g in graphs_up_to(5) {
        for a in &pieces {
            for b in &pieces {
                let whole = a.disjoint_union(b)?;
                disjoint.push(hcsf_disjoint_h(&g, &[a.clone(), b.clone()])? == hcsf_tilde(&g, &whole));
            }
        }
    }
    let target = build_family("Kn1:5")?;
    let mut kn1 = Vec::new();
    for g in graphs_up_to(5) {
        kn1.push(kn1_csf(&g, 5)? == convert(&hcsf(&g, &target), Basis::MTilde)?);
    }
    let k2 = convert(&kn1_csf(&build_family("P:2")?, 2)?, Basis::M)?;
    let hand: SymFunc = "m; 4*[1,1]; 1*[2]".parse()?;
    Ok(vec![
        tally("disjoint pieces = engine, G ≤ 5, pieces ≤ 3", disjoint),
        tally("K_5^1 formula = engine, G ≤ 5", kn1),
        Check::with_pass("X_K2^(K_2^1)", &k2, &hand, k2 == hand),
    ])
}

fn chromatic() -> Result<Vec<Check>> {
    let mut targets = graphs_up_to(5);
    for d in ["Eloop:1", "Ploop:3", "Sn1:4", "Kn1:3", "Eloop:2"] {
        targets.push(build_family(d)?);
    }
    let mut paths = Vec::new();
    for g in graphs_up_to(5) {
        for h in &targets {
            let a = h_chromatic_polynomial(&g, h);
            let b = h_chromatic_polynomial_by_evaluation(&g, h)?;
            paths.push(a == b && (0..=8).all(|k| a.eval_int(k) == b.eval_int(k)));
        }
    }
    let c4 = build_family("C:4")?;
    let mut trees = Vec::new();
    for n in 2..=7 {
        for t in all_trees(n) {
            let side = t.bipartition().map_or(0, |b| b.components[0].k1());
            trees.push(h_chromatic_polynomial(&t, &c4) == c4_tree_polynomial(side, n - side)?);
        }
    }
    let sn1 = build_family("Sn1:5")?;
    let mut star = Vec::new();
    for g in graphs_up_to(5).into_iter().filter(|g| !g.is_edgeless()) {
        star.push(sn1_polynomial_from_profile(&independent_set_profile(&g), 5)? == h_chromatic_polynomial(&g, &sn1));
    }
    let mut colourings = Vec::new();
    for g in graphs_up_to(6) {
        let p = chromatic_polynomial(&g)?;
        for n in 1..=6 {
            let k = build_family(&format!("Kn:{n}"))?;
            colourings.push(p.eval_int(n as i64) == BigRational::from_integer(hom_count(&g, &k)));
        }
    }
    Ok(vec![
        tally("formula = evaluation, pairs ≤ 5, k = 0..8", paths),
        tally("C4 closed form on trees, a + b ≤ 7", trees),
        tally("S_5^1 profile formula, non-edgeless G ≤ 5", star),
        tally("|Hom(G,K_n)| = chromatic polynomial, G ≤ 6, n ≤ 6", colourings),
    ])
}

/// Seed for the random rigidity sample.
pub const RIGIDITY_SEED: u64 = 2024;

/// `count` random graphs on `n` vertices with independent edges at probability 1/2.
pub fn random_graphs(n: usize, count: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let edges: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
            Graph::from_edges(n, &edges)
        })
        .collect()
}

fn property_suites() -> Result<Vec<Check>> {
    let (_, distinct) = tree_distinct_up_to(9);
    let sample = random_graphs(10, 20, RIGIDITY_SEED)?;
    let rigid = sample.iter().filter(|g| is_rigid(g)).count();
    let collision = find_sn1_collision(3, 7)?;
    let found = collision.as_ref().map_or("none".to_string(), |c| format!("{} vs {} vertices", c.first.n(), c.second.n()));
    let h = build_family("Sn1:3")?;
    let validated = collision.is_some_and(|c| {
        h_chromatic_polynomial(&c.first, &h) == h_chromatic_polynomial(&c.second, &h) && hcsf(&c.first, &h) != hcsf(&c.second, &h)
    });
    Ok(vec![
        Check::with_pass("tree self-CSFs distinct, n ≤ 9", distinct, true, distinct),
        Check::with_pass(
            "rigid among 20 random G(10, 1/2)",
            format!("{rigid}/20 ({:.0}%)", 100.0 * rigid as f64 / 20.0),
            "reported only",
            true,
        ),
        Check::with_pass("S_3^1 collision, ≤ 7 vertices, post-validated", found, "validated witness", validated),
    ])
}
