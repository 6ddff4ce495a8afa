use hcsf_core::algebra::{convert, Basis, SymFunc};
use hcsf_core::graph::{all_graphs, build_family, Graph};
use hcsf_core::hom::{hcsf, hcsf_tilde};
use hcsf_core::recursion::*;
use num_rational::BigRational;

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).collect()
}

/// Small targets with and without loops.
fn pieces_up_to(n: usize) -> Vec<Graph> {
    let mut out = graphs_up_to(n);
    for d in ["Eloop:1", "Ploop:2", "Ploop:3", "Eloop:2", "Sn1:3", "Kn1:3"] {
        out.push(build_family(d).unwrap());
    }
    out
}

#[test]
fn disjoint_pieces_match_engine() {
    let pieces = pieces_up_to(3);
    for g in graphs_up_to(5) {
        for a in &pieces {
            for b in &pieces {
                let whole = a.disjoint_union(b).unwrap();
                let expect = hcsf_tilde(&g, &whole);
                let got = hcsf_disjoint_h(&g, &[a.clone(), b.clone()]).unwrap();
                assert_eq!(got, expect, "G = {:?}, H = {:?} + {:?}", g.edges(), a.edges(), b.edges());
            }
        }
    }
}

#[test]
fn three_pieces() {
    let k1 = build_family("E:1").unwrap();
    let k2 = build_family("P:2").unwrap();
    let lp = build_family("Eloop:1").unwrap();
    for g in graphs_up_to(4) {
        let whole = k1.disjoint_union(&k2).unwrap().disjoint_union(&lp).unwrap();
        let got = hcsf_disjoint_h(&g, &[k1.clone(), k2.clone(), lp.clone()]).unwrap();
        assert_eq!(got, hcsf_tilde(&g, &whole));
    }
}

#[test]
fn disjoint_examples() {
    let k1 = build_family("E:1").unwrap();
    let f = hcsf_disjoint_h(&k1, &[k1.clone(), k1.clone()]).unwrap();
    let two = SymFunc::from_terms(Basis::MTilde, 1, [("[1]".parse().unwrap(), BigRational::from_integer(2.into()))]).unwrap();
    assert_eq!(f, two);
    let odd = build_family("C:5").unwrap();
    let f = hcsf_disjoint_h(&odd, &[build_family("P:3").unwrap(), build_family("C:4").unwrap()]).unwrap();
    assert!(f.is_zero());
}

#[test]
fn subset_pruning_matches_brute_force() {
    for g in graphs_up_to(6) {
        let n = g.n();
        let brute: Vec<u64> = (1u64..1 << n)
            .filter(|&w| (0..n).filter(|&u| w >> u & 1 == 1).all(|u| (0..n).any(|v| v != u && w >> v & 1 == 1 && g.has_edge(u, v))))
            .collect();
        assert_eq!(self_dominated_subsets(&g), brute);
    }
}

#[test]
fn kn1_matches_engine() {
    for n in 1..=5 {
        let target = build_family(&format!("Kn1:{n}")).unwrap();
        for g in graphs_up_to(n) {
            let expect = convert(&hcsf(&g, &target), Basis::MTilde).unwrap();
            assert_eq!(kn1_csf(&g, n).unwrap(), expect, "n = {n}, G = {:?}", g.edges());
        }
    }
}
