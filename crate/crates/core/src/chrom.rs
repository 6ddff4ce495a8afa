//! H-chromatic polynomials `χ_G^H(k) = X_G^H(1^k)`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{binomial, convert, evaluate_ones_poly, factorial, stirling2, Basis, Polynomial};
use crate::basis::MAX_ALL_GRAPHS_N;
use crate::error::{Error, Result};
use crate::graph::{all_graphs, ContractMode, Family, Graph};
use crate::hom::{hcsf, hom_type_counts};

fn ratio(a: BigInt, b: BigInt) -> BigRational {
    BigRational::new(a, b)
}

/// `#{f ∈ Hom(G,H) : ℓ(type f) = L}` for `L = 1..=min(|V(G)|, |V(H)|)`.
pub fn length_profile(g: &Graph, h: &Graph) -> Vec<BigInt> {
    let max = g.n().min(h.n());
    hom_type_counts(g, h).length_profile(max)
}

/// `|V(H)|! Σ_L C(k,L) / C(|V(H)|,L) · c_L` for a length profile `c`.
pub fn chi_from_length_profile(profile: &[BigInt], h_vertices: usize) -> Polynomial {
    let nf = factorial(h_vertices);
    profile.iter().enumerate().fold(Polynomial::zero(), |acc, (i, c)| {
        let l = i + 1;
        if c.is_zero() || l > h_vertices {
            return acc;
        }
        acc + Polynomial::binomial(l).scale(&ratio(&nf * c, binomial(h_vertices, l)))
    })
}

/// `χ_G^H` from the length profile of `Hom(G, H)`.
pub fn h_chromatic_polynomial(g: &Graph, h: &Graph) -> Polynomial {
    chi_from_length_profile(&length_profile(g, h), h.n())
}

/// `χ_G^H` by evaluating the monomial expansion of `X_G^H` at `1^k`.
pub fn h_chromatic_polynomial_by_evaluation(g: &Graph, h: &Graph) -> Result<Polynomial> {
    Ok(evaluate_ones_poly(&convert(&hcsf(g, h), Basis::M)?))
}

/// Classical chromatic polynomial by deletion–contraction (zero if `G` has a loop).
pub fn chromatic_polynomial(g: &Graph) -> Result<Polynomial> {
    if g.has_loops() {
        return Ok(Polynomial::zero());
    }
    let g = g.without_weights();
    let Some(&(u, v)) = g.edges().first() else {
        let mut p = Polynomial::constant(BigRational::one());
        for _ in 0..g.n() {
            p = p * Polynomial::x();
        }
        return Ok(p);
    };
    let mut deleted = g.masks().to_vec();
    deleted[u] &= !(1u64 << v);
    deleted[v] &= !(1u64 << u);
    let deleted = Graph::from_masks(deleted)?;
    let mut blocks: Vec<Vec<usize>> = vec![vec![u, v]];
    blocks.extend((0..g.n()).filter(|&w| w != u && w != v).map(|w| vec![w]));
    let contracted = deleted.contract(&blocks, ContractMode::Quotient)?.without_weights();
    Ok(chromatic_polynomial(&deleted)? - chromatic_polynomial(&contracted)?)
}

/// Cumulative counts `#{f : ℓ(type f) ≤ L}` for `L = 1..4`, for a tree with parts `a`, `b` into `C_4`.
pub fn c4_tree_counts(a: usize, b: usize) -> Result<[BigInt; 4]> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("tree parts must be positive".into()));
    }
    let two = |e: usize| BigInt::one() << e;
    Ok([BigInt::zero(), BigInt::from(8), two(a + 2) + two(b + 2) - 8, two(a + b + 1)])
}

/// `χ_T^{C_4}` for any tree `T` with bipartition sizes `a`, `b`.
pub fn c4_tree_polynomial(a: usize, b: usize) -> Result<Polynomial> {
    c4_tree_counts(a, b)?;
    let two = |e: usize| BigInt::one() << e;
    let c2 = BigInt::from(16);
    let c3 = two(a + 2) + two(b + 2) - 16;
    let c4 = two(a + b + 1) - two(a + 2) - two(b + 2) + 8;
    let q = |x: BigInt| BigRational::from_integer(x);
    Ok(Polynomial::falling(2).scale(&q(c2)) + Polynomial::falling(3).scale(&q(c3)) + Polynomial::falling(4).scale(&q(c4)))
}

/// `i_j` = number of independent sets of size `j`, from `j = 0` (`i_0 = 1`).
///
/// Looped vertices never belong to an independent set.
pub fn independent_set_profile(g: &Graph) -> Vec<BigInt> {
    fn go(g: &Graph, v: usize, chosen: u64, size: usize, out: &mut Vec<BigInt>) {
        if v == g.n() {
            if out.len() <= size {
                out.resize(size + 1, BigInt::zero());
            }
            out[size] += 1;
            return;
        }
        go(g, v + 1, chosen, size, out);
        if !g.has_loop(v) && g.row(v) & chosen == 0 {
            go(g, v + 1, chosen | 1 << v, size + 1, out);
        }
    }
    let mut out = Vec::new();
    go(g, 0, 0, 0, &mut out);
    out
}

/// Length profile of `Hom(G, S_n^1)` for non-edgeless `G`, from its independent-set profile.
pub fn sn1_length_profile(independent: &[BigInt], n: usize) -> Vec<BigInt> {
    (1..=n)
        .map(|l| {
            let s: BigInt = independent
                .iter()
                .enumerate()
                .filter(|(j, _)| *j + 1 >= l)
                .map(|(j, i)| i * factorial(l - 1) * stirling2(j, l - 1))
                .sum();
            binomial(n - 1, l - 1) * s
        })
        .collect()
}

/// `χ_G^{S_n^1}` for non-edgeless `G`, from its independent-set profile.
pub fn sn1_polynomial_from_profile(independent: &[BigInt], n: usize) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::InvalidParameter("S_n^1 needs n ≥ 1".into()));
    }
    Ok(chi_from_length_profile(&sn1_length_profile(independent, n), n))
}

/// Two graphs with equal `S_n^1`-chromatic polynomials and different `S_n^1`-CSFs.
#[derive(Debug, Clone)]
pub struct Sn1Collision {
    pub first: Graph,
    pub second: Graph,
    pub polynomial: Polynomial,
}

/// Smallest-first search over non-edgeless graphs with at most `max_vertices` vertices,
/// bucketed by the `S_n^1` length profile.
pub fn find_sn1_collision(n: usize, max_vertices: usize) -> Result<Option<Sn1Collision>> {
    if n == 0 {
        return Err(Error::InvalidParameter("S_n^1 needs n ≥ 1".into()));
    }
    if max_vertices > MAX_ALL_GRAPHS_N {
        return Err(Error::NTooLarge { n: max_vertices, max: MAX_ALL_GRAPHS_N });
    }
    let mut buckets: BTreeMap<Vec<BigInt>, Vec<(Vec<BigInt>, Graph)>> = BTreeMap::new();
    for v in 2..=max_vertices {
        let candidates: Vec<(Vec<BigInt>, Vec<BigInt>, Graph)> = all_graphs(v)
            .into_par_iter()
            .filter(|g| !g.is_edgeless())
            .map(|g| {
                let ind = independent_set_profile(&g);
                (sn1_length_profile(&ind, n), ind, g)
            })
            .collect();
        for (key, ind, g) in candidates {
            let bucket = buckets.entry(key).or_default();
            if let Some((_, other)) = bucket.iter().find(|(p, _)| *p != ind) {
                return validate(n, other.clone(), g).map(Some);
            }
            bucket.push((ind, g));
        }
    }
    Ok(None)
}

fn validate(n: usize, first: Graph, second: Graph) -> Result<Sn1Collision> {
    let h = Family::StarLoop(n).build()?;
    let p1 = h_chromatic_polynomial(&first, &h);
    let p2 = h_chromatic_polynomial(&second, &h);
    let x1 = convert(&hcsf(&first, &h), Basis::M)?;
    let x2 = convert(&hcsf(&second, &h), Basis::M)?;
    if p1 != p2 || x1 == x2 {
        return Err(Error::InconsistentCoefficients("S_n^1 collision failed post-validation".into()));
    }
    Ok(Sn1Collision { first, second, polynomial: p1 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    fn g(d: &str) -> Graph {
        build_family(d).unwrap()
    }

    #[test]
    fn edge_into_four_cycle() {
        let p = h_chromatic_polynomial(&g("P:2"), &g("C:4"));
        assert_eq!(p, Polynomial::falling(2).scale(&BigRational::from_integer(16.into())));
        assert_eq!(p, c4_tree_polynomial(1, 1).unwrap());
    }

    #[test]
    fn single_vertex_target() {
        let k1 = g("E:1");
        assert_eq!(h_chromatic_polynomial(&g("E:3"), &k1), Polynomial::x());
        assert!(h_chromatic_polynomial(&g("P:2"), &k1).is_zero());
    }

    #[test]
    fn classical_chromatic() {
        let p = chromatic_polynomial(&g("Kn:3")).unwrap();
        assert_eq!(p, Polynomial::falling(3));
        let t = chromatic_polynomial(&g("P:4")).unwrap();
        assert_eq!(t.eval_int(3), BigRational::from_integer(24.into()));
    }

    #[test]
    fn independent_sets() {
        let p = independent_set_profile(&g("P:3"));
        assert_eq!(p, vec![BigInt::from(1), BigInt::from(3), BigInt::from(1)]);
        assert_eq!(independent_set_profile(&g("Kn:3")).len(), 2);
    }

    #[test]
    fn collision_search_degenerate_bound() {
        assert!(find_sn1_collision(3, 1).unwrap().is_none());
    }
}
