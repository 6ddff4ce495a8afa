use hcsf_core::algebra::{bareiss_rank, partitions_of, Basis, Partition, RowSpace, SymFunc};
use hcsf_core::basis::*;
use hcsf_core::graph::{all_graphs, build_family, is_isomorphic, Graph};
use hcsf_core::Error;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

/// Plain Gauss–Jordan over the rationals.
fn gauss_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m = rows.to_vec();
    let width = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        let pivot: Vec<BigRational> = m[r].iter().map(|x| x * &inv).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

fn matrix() -> impl Strategy<Value = Vec<Vec<BigRational>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(h, w)| {
        proptest::collection::vec(proptest::collection::vec((-3i64..4, 1i64..4), w), h)
            .prop_map(|rows| rows.into_iter().map(|r| r.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect()).collect())
    })
}

proptest! {
    #[test]
    fn bareiss_matches_gauss(m in matrix()) {
        prop_assert_eq!(bareiss_rank(&m), gauss_rank(&m));
        let mut space = RowSpace::new(m[0].len());
        for row in &m {
            space.insert(row);
        }
        prop_assert_eq!(space.rank(), gauss_rank(&m));
    }

    #[test]
    fn rank_invariant_under_scaling_and_permutation(m in matrix(), scale in prop::collection::vec(1i64..7, 6), seed in 0usize..720) {
        let scaled: Vec<Vec<BigRational>> = m
            .iter()
            .zip(&scale)
            .map(|(row, &s)| row.iter().map(|x| x * q(if s % 2 == 0 { -s } else { s })).collect())
            .collect();
        let mut permuted = scaled.clone();
        let len = permuted.len();
        permuted.rotate_left(seed % len);
        if len > 1 {
            permuted.swap(0, seed % (len - 1) + 1);
        }
        prop_assert_eq!(bareiss_rank(&m), bareiss_rank(&permuted));
    }

    #[test]
    fn span_rank_of_monomials_with_duplicates(n in 1usize..8, dup in 0usize..3) {
        let mut rows: Vec<SymFunc> = partitions_of(n, None).into_iter().map(|l| SymFunc::basis_element(Basis::M, l)).collect();
        let extra: Vec<SymFunc> = rows.iter().take(dup).cloned().collect();
        rows.extend(extra);
        prop_assert_eq!(span_rank(&rows, n).unwrap(), partitions_of(n, None).len());
    }
}

fn g(d: &str) -> Graph {
    build_family(d).unwrap()
}

#[test]
fn constructions_are_triangular_bases() {
    for n in 1..=6 {
        let p = partitions_of(n, None).len();
        for c in [
            multipartite_self_basis(n).unwrap(),
            loop_bases(LoopKind::PathLoop, n).unwrap(),
            loop_bases(LoopKind::EdgelessLoops, n).unwrap(),
        ] {
            assert_eq!(c.rank(), p, "n = {n}");
            assert!(c.is_triangular(), "n = {n}");
        }
    }
    let k4_pendant = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
    let c = clique_basis(&k4_pendant, 4).unwrap();
    assert_eq!(c.rank(), 5);
    assert!(c.is_triangular());
}

#[test]
fn union_of_cliques() {
    let c = union_cliques_basis(&g("Kn:3+Kn:2")).unwrap();
    assert_eq!(c.rank(), 7);
    assert!(c.is_triangular());
    assert_eq!(c.lambdas.last().unwrap(), &Partition::new(vec![5]).unwrap());
    for d in ["Kn:3+E:2", "Kn:3+Kn:3", "Kn:4+Kn:2+E:1", "Kn:3+Kn:2+Kn:2"] {
        let c = union_cliques_basis(&g(d)).unwrap();
        assert!(c.is_basis() && c.is_triangular(), "{d}");
    }
}

#[test]
fn construction_hypotheses() {
    assert!(matches!(union_cliques_basis(&g("Kn:2+Kn:2")), Err(Error::HypothesisViolated(_))));
    assert!(matches!(union_cliques_basis(&g("Kn:3+E:5")), Err(Error::HypothesisViolated(_))));
    assert!(matches!(union_cliques_basis(&g("P:4")), Err(Error::HypothesisViolated(_))));
    assert!(matches!(clique_basis(&g("C:5"), 3), Err(Error::HypothesisViolated(_))));
}

#[test]
fn tsv_dump_shape() {
    let c = multipartite_self_basis(3).unwrap();
    let tsv = c.matrix.to_tsv();
    let lines: Vec<&str> = tsv.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "row\t[3]\t[2,1]\t[1,1,1]");
    assert!(lines.iter().all(|l| l.split('\t').count() == 4));
}

#[test]
fn p_h_small_table() {
    let expect = [(2, 1, 2), (3, 2, 4), (4, 7, 11), (5, 27, 34)];
    for (n, good, total) in expect {
        let r = p_h(n).unwrap();
        assert_eq!((r.good.len(), r.total()), (good, total), "n = {n}");
    }
    assert!(matches!(p_h(7), Err(Error::NTooLarge { .. })));
}

#[test]
fn order_four_bad_targets() {
    let r = p_h(4).unwrap();
    let named = [g("E:4"), g("S:4"), g("C:4"), g("Kminus:4,1")];
    assert_eq!(r.bad.len(), 4);
    for h in &named {
        assert!(r.bad.iter().any(|(b, rank)| is_isomorphic(b, h) && *rank < 5));
    }
    for h in all_graphs(4) {
        let good = all_graphs_span_rank(&h).unwrap() == 5;
        assert_eq!(good, !named.iter().any(|b| is_isomorphic(b, &h)));
    }
}

#[test]
fn deficiencies() {
    let r = complete_minus_edge_check(4).unwrap();
    assert_eq!((r.observed, r.expected), (4, 4));
    let r = complete_minus_edge_check(5).unwrap();
    assert_eq!((r.observed, r.expected), (6, 6));
    let r = k_clones_check(5, 2).unwrap();
    assert_eq!((r.observed, r.expected), (5, 5));
    assert!(k_clones_check(6, 3).unwrap().holds);
    let r = matching_check(8, 1, 50, 7).unwrap();
    assert!(r.holds, "{r}");
    assert!(matches!(matching_check(7, 1, 5, 0), Err(Error::HypothesisViolated(_))));
}

#[test]
fn clone_pair_in_five_cycle() {
    let h = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 1), (5, 4)]).unwrap();
    assert_eq!(find_clones(&h), Some((0, 5)));
    let r = clone_check(&h).unwrap();
    assert!(r.holds, "{r}");
    assert!(r.observed < 11);
    assert!(matches!(clone_check(&g("P:4")), Err(Error::HypothesisViolated(_))));
}

#[test]
fn length_two_projection() {
    assert_eq!(length2_projection_dimension(&g("P:12")).unwrap(), 3);
    assert_eq!(length2_projection_dimension(&g("C:12")).unwrap(), 3);
    assert_eq!(length2_projection_dimension(&g("E:12")).unwrap(), 1);
    assert_eq!(length2_projection_dimension(&g("P:11+E:1")).unwrap(), 4);
    let five = Graph::from_edges(12, &[(1, 5), (2, 10), (3, 9), (3, 10), (4, 7), (4, 8), (6, 8), (8, 9), (8, 11)]).unwrap();
    assert_eq!(length2_projection_dimension(&five).unwrap(), 5);
}

#[test]
fn fixed_g_fixtures() {
    for (n, rank) in [(4, 5), (5, 7), (6, 11), (7, 13)] {
        let (graph, hs) = fixed_g_fixture(n).unwrap();
        assert_eq!(hs.len(), partitions_of(n, None).len());
        let r = verify_fixed_g_basis(&graph, &hs).unwrap();
        assert_eq!(r.rank, rank, "n = {n}");
        assert_eq!(r.is_basis(), n < 7);
    }
}

#[test]
fn edgeless_g_with_simple_targets_fails() {
    let hs: Vec<Graph> = (1..=4).flat_map(all_graphs).collect();
    let r = verify_fixed_g_basis(&g("E:4"), &hs).unwrap();
    assert!(!r.is_basis());
    assert_eq!(r.rank, 4);
}
