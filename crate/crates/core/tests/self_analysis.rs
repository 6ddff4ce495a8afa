use std::collections::HashSet;

use hcsf_core::algebra::{binomial, Partition};
use hcsf_core::graph::{all_graphs, all_trees, automorphism_count, build_family, Caterpillar, Graph, Spider};
use hcsf_core::hom::{hom_type_counts, self_csf};
use hcsf_core::self_analysis::*;
use num_bigint::BigInt;
use num_rational::BigRational;

fn direct_star_sums(g: &Graph, k: usize) -> Vec<BigInt> {
    (1..=k).map(|l| (0..g.n()).map(|v| binomial(g.degree(v), l)).sum()).collect()
}

#[test]
fn star_sums_match_degrees_on_connected_bipartite_graphs() {
    for n in 2..=7 {
        for g in all_graphs(n) {
            if !g.is_connected() || !g.is_bipartite() {
                continue;
            }
            let got = star_sums_from_self_csf(&self_csf(&g), true).unwrap();
            let b = g.bipartition().unwrap();
            assert_eq!(got.k, b.sum_k1().min(b.sum_k2()));
            assert_eq!(got.stars, direct_star_sums(&g, got.k), "{g:?}");
            let p: Vec<BigInt> = (1..=got.k as u32)
                .map(|l| (0..n).map(|v| BigInt::from(g.degree(v)).pow(l)).sum())
                .collect();
            assert_eq!(got.power_sums, p);
        }
    }
}

#[test]
fn differences_match_bipartitions() {
    for n in 1..=7 {
        for g in all_graphs(n) {
            let x = self_csf(&g);
            match g.bipartition() {
                None => assert!(diff_multiset_from_self_csf(&x).is_err()),
                Some(b) => {
                    let mut want: Vec<usize> =
                        b.profile().iter().map(|&(a, c)| a.abs_diff(c)).filter(|&d| d > 0).collect();
                    want.sort_unstable();
                    assert_eq!(diff_multiset_from_self_csf(&x).unwrap().diffs, want, "{g:?}");
                }
            }
        }
    }
}

#[test]
fn tree_verdict_is_exact_up_to_seven_vertices() {
    let p3 = self_csf(&build_family("P:3").unwrap());
    for n in 1..=7 {
        for g in all_graphs(n) {
            let x = self_csf(&g);
            let want = if x == p3 {
                TreeVerdict::Exceptional
            } else if g.is_tree() {
                TreeVerdict::Tree
            } else {
                TreeVerdict::NonTree
            };
            assert_eq!(tree_verdict(&x), want, "{g:?}");
        }
    }
}

#[test]
fn trees_up_to_nine_vertices_have_distinct_self_csfs() {
    for n in 1..=9 {
        let trees = all_trees(n);
        let keys: HashSet<String> = trees.iter().map(|t| self_csf(t).to_machine()).collect();
        assert_eq!(keys.len(), trees.len(), "n = {n}");
    }
}

#[test]
fn m21_formulas_agree_on_all_trees_up_to_eight_vertices() {
    for n in 3..=8 {
        for t in all_trees(n) {
            let v = tree_m21_coefficient(&t).unwrap();
            assert!(v.agree(), "{t:?}: {v:?}");
        }
    }
}

fn spiders_up_to(max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for total in 3..max_n {
        for p in hcsf_core::algebra::partitions_of(total, None) {
            if p.len() >= 3 {
                out.push(p.parts().iter().map(|&x| x as usize).collect());
            }
        }
    }
    out
}

#[test]
fn spider_closed_forms_match_engine() {
    for legs in spiders_up_to(10) {
        let g = Spider::new(&legs).unwrap().graph().unwrap();
        let aut = BigInt::from(automorphism_count(&g));
        assert_eq!(spider_aut_count(&legs).unwrap(), aut);
        let x = self_csf(&g);
        let lc = spider_leg_count_from_self_csf(&x).unwrap();
        assert_eq!(lc.legs, legs.len(), "{legs:?}");
        if legs.len() >= 4 {
            let n = g.n();
            let mut l = vec![2u32];
            l.extend(std::iter::repeat(1).take(n - 2));
            let m21 = hom_type_counts(&g, &g).get(&Partition::new(l).unwrap());
            assert_eq!(spider_m21_ratio(&legs).unwrap(), BigRational::new(m21, aut), "{legs:?}");
        }
    }
}

#[test]
fn spider_approximation_is_within_factor_two() {
    for total in 9..=15 {
        for p in hcsf_core::algebra::partitions_of(total, None) {
            if p.len() < 3 {
                continue;
            }
            let legs: Vec<usize> = p.parts().iter().map(|&x| x as usize).collect();
            let exact = hcsf_core::hom::spider_endomorphism_count(&legs).unwrap();
            let approx = spider_endo_approximation(&legs).unwrap();
            let ratio = approx / exact.to_string().parse::<f64>().unwrap();
            assert!(ratio > 0.5 && ratio < 2.0, "{legs:?}: {ratio}");
        }
    }
}

fn caterpillars_up_to(max_n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(f: &mut Vec<usize>, budget: usize, out: &mut Vec<Vec<usize>>) {
        if f.len() >= 2 && f[0] >= 1 && *f.last().unwrap() >= 1 {
            out.push(f.clone());
        }
        for k in 0..=budget {
            if k + 1 > budget {
                break;
            }
            f.push(k);
            go(f, budget - k - 1, out);
            f.pop();
        }
    }
    go(&mut Vec::new(), max_n, &mut out);
    out
}

#[test]
fn caterpillar_formulas_match_engine() {
    for f in caterpillars_up_to(9) {
        let c = Caterpillar::new(&f).unwrap();
        let g = c.graph().unwrap();
        assert_eq!(caterpillar_aut_count(&c), BigInt::from(automorphism_count(&g)), "{f:?}");
        let x = self_csf(&g);
        let mut want = c.spine_degrees();
        want.sort_unstable();
        assert_eq!(caterpillar_spine_degrees(&x, c.s()).unwrap(), want, "{f:?}");
        let pal = if f.iter().eq(f.iter().rev()) { 2 } else { 1 };
        let f0fs = BigInt::from(pal * f[0] * f[f.len() - 1]);
        assert_eq!(caterpillar_f0fs(&x, &f).unwrap(), f0fs, "{f:?}");
    }
}

#[test]
fn forest_component_counts() {
    let r3 = forest_component_theorem_check(3);
    assert_eq!(r3.violations.len(), 1);
    let v = &r3.violations[0];
    let mut kappas = [v.components.0, v.components.1];
    kappas.sort();
    assert_eq!(kappas, [1, 2]);
    for n in [4, 5, 6, 7] {
        assert!(forest_component_theorem_check(n).violations.is_empty(), "n = {n}");
    }
}

#[test]
fn report_fields() {
    let x = self_csf(&build_family("P:4").unwrap());
    let r = self_csf_report(&x, true).unwrap();
    assert_eq!(r.automorphisms, BigInt::from(2));
    assert!(r.bipartite);
    assert_eq!(r.tree, TreeVerdict::Tree);
    assert_eq!(r.star_sums.unwrap().stars[0], BigInt::from(6));
    let unconnected = self_csf_report(&x, false).unwrap();
    assert!(unconnected.star_sums.is_none());
}
