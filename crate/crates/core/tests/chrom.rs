use hcsf_core::chrom::*;
use hcsf_core::graph::{all_graphs, all_trees, build_family, Graph};
use hcsf_core::hom::hom_count;
use num_bigint::BigInt;
use num_rational::BigRational;

fn graphs_up_to(n: usize) -> Vec<Graph> {
    (1..=n).flat_map(all_graphs).collect()
}

fn targets_up_to(n: usize) -> Vec<Graph> {
    let mut out = graphs_up_to(n);
    for d in ["Eloop:1", "Ploop:3", "Sn1:4", "Kn1:3", "Eloop:2"] {
        out.push(build_family(d).unwrap());
    }
    out
}

#[test]
fn formula_path_equals_evaluation_path() {
    let hs = targets_up_to(5);
    for g in graphs_up_to(5) {
        for h in &hs {
            let a = h_chromatic_polynomial(&g, h);
            let b = h_chromatic_polynomial_by_evaluation(&g, h).unwrap();
            assert_eq!(a, b);
            for k in 0..=8 {
                assert_eq!(a.eval_int(k), b.eval_int(k));
            }
            let total: BigInt = length_profile(&g, h).iter().sum();
            assert_eq!(total, hom_count(&g, h));
        }
    }
}

#[test]
fn evaluation_counts_labelled_maps() {
    // At k = |V(H)| every vertex labelling is a bijection, so χ(N) = N!·|Hom(G,H)|.
    for g in graphs_up_to(4) {
        for h in graphs_up_to(4) {
            let n = h.n();
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            let expect = BigRational::from_integer(fact * hom_count(&g, &h));
            assert_eq!(h_chromatic_polynomial(&g, &h).eval_int(n as i64), expect);
        }
    }
}

#[test]
fn four_cycle_closed_form_on_trees() {
    let c4 = build_family("C:4").unwrap();
    for n in 2..=7 {
        for t in all_trees(n) {
            let side = t.bipartition().unwrap().components[0].k1();
            let (a, b) = (side, n - side);
            let direct = h_chromatic_polynomial(&t, &c4);
            assert_eq!(direct, c4_tree_polynomial(a, b).unwrap(), "tree {:?}", t.edges());
            assert_eq!(direct, c4_tree_polynomial(b, a).unwrap());
            let profile = length_profile(&t, &c4);
            let mut cumulative = Vec::new();
            let mut acc = BigInt::from(0);
            for l in 0..4 {
                acc += profile.get(l).cloned().unwrap_or_default();
                cumulative.push(acc.clone());
            }
            assert_eq!(cumulative, c4_tree_counts(a, b).unwrap().to_vec());
        }
    }
}

#[test]
fn star_loop_profile_formula() {
    for n in 1..=5 {
        let h = build_family(&format!("Sn1:{n}")).unwrap();
        for g in graphs_up_to(5).into_iter().filter(|g| !g.is_edgeless()) {
            let via_profile = sn1_polynomial_from_profile(&independent_set_profile(&g), n).unwrap();
            assert_eq!(via_profile, h_chromatic_polynomial(&g, &h), "n = {n}, G = {:?}", g.edges());
        }
    }
}

#[test]
fn homs_into_complete_graphs_are_colourings() {
    for g in graphs_up_to(6) {
        let p = chromatic_polynomial(&g).unwrap();
        for n in 1..=6 {
            let k = build_family(&format!("Kn:{n}")).unwrap();
            assert_eq!(p.eval_int(n as i64), BigRational::from_integer(hom_count(&g, &k)));
        }
    }
}

#[test]
fn star_loop_collisions() {
    assert!(find_sn1_collision(3, 6).unwrap().is_none());
    let c = find_sn1_collision(3, 7).unwrap().expect("witness with at most 7 vertices");
    let h = build_family("Sn1:3").unwrap();
    assert_eq!(h_chromatic_polynomial(&c.first, &h), h_chromatic_polynomial(&c.second, &h));
    assert_ne!(independent_set_profile(&c.first), independent_set_profile(&c.second));
    assert_eq!((c.first.n(), c.second.n()), (5, 7));
    let c = find_sn1_collision(2, 4).unwrap().unwrap();
    assert_eq!(c.first.n(), c.second.n());
}
