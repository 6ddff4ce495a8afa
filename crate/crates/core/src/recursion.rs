//! Recursive identities: splitting `H` into disjoint pieces, and the `K_n^1`
//! formula in terms of weighted chromatic symmetric functions.

use num_rational::BigRational;
use rayon::prelude::*;

use crate::algebra::{factorial, odot, odot_unit, Basis, SymFunc};
use crate::error::{Error, Result};
use crate::graph::{ContractMode, Graph};
use crate::hom::{hcsf_tilde, weighted_csf};

fn scalar(x: num_bigint::BigInt) -> BigRational {
    BigRational::from_integer(x)
}

/// `X̃_G^H` for `H = H_1 ⊔ … ⊔ H_ℓ`, summing `X̃_{G_1}^{H_1} ⊙ … ⊙ X̃_{G_ℓ}^{H_ℓ}` over
/// all distributions of the components of `G` among the pieces.
pub fn hcsf_disjoint_h(g: &Graph, pieces: &[Graph]) -> Result<SymFunc> {
    let comps = g.components();
    let ell = pieces.len();
    let mut total = SymFunc::zero(Basis::MTilde, g.n());
    if ell == 0 {
        return Ok(total);
    }
    // Every (subset of components, piece) factor is reused across assignments.
    let c = comps.len();
    let factors: Vec<Vec<SymFunc>> = (0..1usize << c)
        .into_par_iter()
        .map(|mask| {
            let verts: Vec<usize> = (0..c).filter(|i| mask >> i & 1 == 1).flat_map(|i| comps[i].clone()).collect();
            if verts.is_empty() {
                return vec![odot_unit(); ell];
            }
            let sub = g.induced(&verts);
            pieces.iter().map(|h| hcsf_tilde(&sub, h)).collect()
        })
        .collect();
    let mut assignment = vec![0usize; c];
    loop {
        let mut masks = vec![0usize; ell];
        for (i, &piece) in assignment.iter().enumerate() {
            masks[piece] |= 1 << i;
        }
        let mut term = odot_unit();
        for (piece, &mask) in masks.iter().enumerate() {
            term = odot(&term, &factors[mask][piece])?;
            if term.is_zero() {
                break;
            }
        }
        if !term.is_zero() {
            total = total.add(&term)?;
        }
        let Some(pos) = assignment.iter().position(|&a| a + 1 < ell) else {
            break;
        };
        for a in &mut assignment[..pos] {
            *a = 0;
        }
        assignment[pos] += 1;
    }
    Ok(total)
}

/// Nonempty `W ⊆ V(G)` in which every vertex has a neighbour inside `W`.
pub fn self_dominated_subsets(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    // Prune when a chosen vertex has no chosen neighbour and no undecided one.
    while let Some((v, w)) = stack.pop() {
        if v == n {
            if w != 0 && (0..n).filter(|&u| w >> u & 1 == 1).all(|u| g.row(u) & w & !(1u64 << u) != 0) {
                out.push(w);
            }
            continue;
        }
        let decided = if v == 64 { u64::MAX } else { (1u64 << v) - 1 };
        let stranded = (0..v).any(|u| {
            w >> u & 1 == 1 && g.row(u) & w & !(1u64 << u) == 0 && g.row(u) & !decided & !(1u64 << u) == 0
        });
        if stranded {
            continue;
        }
        stack.push((v + 1, w | 1 << v));
        stack.push((v + 1, w));
    }
    out.sort_unstable();
    out
}

/// `G/W` with the contracted vertex carrying the total weight of `W` and no loop.
pub fn contract_subset(g: &Graph, w: u64) -> Result<Graph> {
    let inside: Vec<usize> = (0..g.n()).filter(|&v| w >> v & 1 == 1).collect();
    let mut blocks = vec![inside];
    blocks.extend((0..g.n()).filter(|&v| w >> v & 1 == 0).map(|v| vec![v]));
    Ok(g.contract(&blocks, ContractMode::Merge)?.without_loops())
}

/// `X_G^{K_n^1} = n!·X_G + (n−1)!·Σ_W X_{G/W}` in the `m̃` basis.
pub fn kn1_csf(g: &Graph, n: usize) -> Result<SymFunc> {
    if g.has_loops() {
        return Err(Error::GHasLoop);
    }
    if g.n() > n {
        return Err(Error::GTooLarge { found: g.n(), max: n });
    }
    if n == 0 {
        return Ok(SymFunc::zero(Basis::MTilde, 0));
    }
    let base = weighted_csf(g).scale(&scalar(factorial(n)));
    let contracted = self_dominated_subsets(g)
        .into_par_iter()
        .map(|w| Ok(weighted_csf(&contract_subset(g, w)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut sum = SymFunc::zero(Basis::MTilde, g.n());
    for x in &contracted {
        sum = sum.add(x)?;
    }
    base.add(&sum.scale(&scalar(factorial(n - 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    #[test]
    fn subsets_of_a_path() {
        let p3 = build_family("P:3").unwrap();
        assert_eq!(self_dominated_subsets(&p3), vec![0b011, 0b110, 0b111]);
        assert!(self_dominated_subsets(&build_family("E:4").unwrap()).is_empty());
    }

    #[test]
    fn kn1_of_an_edge() {
        let f = kn1_csf(&build_family("K:1,1").unwrap(), 2).unwrap();
        let m = crate::algebra::convert(&f, Basis::M).unwrap();
        assert_eq!(m.to_machine(), crate::algebra::SymFunc::from_terms(Basis::M, 2, [
            ("[1,1]".parse().unwrap(), BigRational::from_integer(4.into())),
            ("[2]".parse().unwrap(), BigRational::from_integer(1.into())),
        ]).unwrap().to_machine());
    }

    #[test]
    fn kn1_errors() {
        assert!(matches!(kn1_csf(&build_family("Eloop:1").unwrap(), 2), Err(Error::GHasLoop)));
        assert!(matches!(kn1_csf(&build_family("P:4").unwrap(), 3), Err(Error::GTooLarge { found: 4, max: 3 })));
    }
}
