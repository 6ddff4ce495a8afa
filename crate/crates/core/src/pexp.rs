//! Power-sum expansions of `X_G^H` for complete bipartite targets `H = K_{m,n}`.
//!
//! In the `N = m + n` variables of `H`, every homomorphism sends one side of
//! each component of `G` into the `m`-side `S` and the other into its
//! complement, so
//!
//! ```text
//! X = m! n! Σ_b Σ_{|S| = m} e_S^a (p_1 - e_S)^{|V(G)| - a},   e_S = Σ_{i ∈ S} x_i,
//! ```
//!
//! with `a` the number of vertices sent to `S`. Expanding the binomial and
//! writing `Σ_{|S|=m} e_S^c` through power sums (with `p_0 = N`) gives terms of
//! length at most `Σk_1 + m`, which is at most `N` once `n ≥ Σk_1`; below that
//! the finite-variable expansion no longer lifts, so those inputs are refused.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{all_set_partitions, binomial, convert, factorial, omega, Basis, Partition, SignProfile, SymFunc};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::hom::hcsf;

/// `(k_1, k_2)` per component with `k_1 ≥ k_2`; isolated vertices are `(1, 0)`.
pub fn bipartite_profile(g: &Graph) -> Result<Vec<(usize, usize)>> {
    Ok(g.bipartition().ok_or(Error::NotBipartite)?.profile())
}

/// Monomial in the `p_i` with a rational coefficient, keyed by partition.
type PTerms = BTreeMap<Partition, BigRational>;

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `Σ_{|S|=m} e_S^c · m!` over `N` variables, in power sums.
fn subset_power(c: usize, m: usize, big_n: usize) -> PTerms {
    let mut out = PTerms::new();
    let blocks = all_set_partitions(m);
    let mut q = vec![0usize; m];
    // Compositions q of c into m nonnegative parts.
    fn each(i: usize, rest: usize, q: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if i + 1 == q.len() {
            q[i] = rest;
            visit(q);
            return;
        }
        for k in 0..=rest {
            q[i] = k;
            each(i + 1, rest - k, q, visit);
        }
    }
    each(0, c, &mut q, &mut |q| {
        let multinomial = q.iter().fold(factorial(c), |acc, &k| acc / factorial(k));
        // Σ over distinct index tuples by Möbius inversion on set partitions of [m].
        for pi in &blocks {
            let mut coeff = int(multinomial.clone());
            let mut parts = Vec::new();
            for b in pi {
                if b.len() > 1 {
                    coeff *= int(factorial(b.len() - 1));
                    if b.len() % 2 == 0 {
                        coeff = -coeff;
                    }
                }
                let s: usize = b.iter().map(|&k| q[k]).sum();
                if s == 0 {
                    coeff *= int(big_n);
                } else {
                    parts.push(s as u32);
                }
            }
            *out.entry(Partition::from_unsorted(parts)).or_insert_with(BigRational::zero) += coeff;
        }
    });
    out.retain(|_, c| !c.is_zero());
    out
}

/// Closed-form `p`-expansion of `X_G^{K_{m,n}}`.
pub fn complete_bipartite_p_expansion(g: &Graph, m: usize, n: usize) -> Result<SymFunc> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidParameter("both sides of K_{m,n} must be nonempty".into()));
    }
    let profile = bipartite_profile(g)?;
    let need: usize = profile.iter().map(|p| p.0).sum();
    if n < need {
        return Err(Error::NTooSmall { n, min: need });
    }
    let v = g.n();
    let big_n = m + n;
    // Number of side choices b sending exactly a vertices to the m-side.
    let mut sides: BTreeMap<usize, BigInt> = BTreeMap::from([(0, BigInt::one())]);
    for &(k1, k2) in &profile {
        let mut next = BTreeMap::new();
        for (a, c) in &sides {
            for k in [k1, k2] {
                *next.entry(a + k).or_insert_with(BigInt::zero) += c;
            }
        }
        sides = next;
    }
    let scale = int(factorial(n));
    let mut cache: BTreeMap<usize, PTerms> = BTreeMap::new();
    let mut out = SymFunc::zero(Basis::P, v);
    for (&a, count) in &sides {
        let r = v - a;
        for t in 0..=r {
            let mut coeff = int(count * binomial(r, t)) * &scale;
            if t % 2 == 1 {
                coeff = -coeff;
            }
            let inner = cache.entry(a + t).or_insert_with(|| subset_power(a + t, m, big_n));
            for (lambda, c) in inner.iter() {
                let full = lambda.union(&Partition::ones(r - t));
                out.add_term(full, c * &coeff)?;
            }
        }
    }
    Ok(out)
}

/// `p`-expansion of `X_G^{S_{n+1}}`, valid for `n ≥ Σk_1`.
pub fn star_p_expansion(g: &Graph, n: usize) -> Result<SymFunc> {
    complete_bipartite_p_expansion(g, 1, n)
}

/// `p`-expansion of `X_G^{K_{2,n}}`, valid for `n ≥ Σk_1`.
pub fn k2n_p_expansion(g: &Graph, n: usize) -> Result<SymFunc> {
    complete_bipartite_p_expansion(g, 2, n)
}

/// Sign pattern of `ω(f)`.
pub fn p_monotone_verdict(f: &SymFunc) -> Result<SignProfile> {
    Ok(omega(f)?.sign_profile())
}

/// `(-1)^{m + Σk_2}` as a sign profile.
///
/// Edgeless `G` is the exception: every map is a homomorphism, `X = N! p_1^{|V(G)|}`,
/// and the sign is positive whatever `m` is.
pub fn predicted_sign(g: &Graph, m: usize) -> Result<SignProfile> {
    if g.is_edgeless() {
        return Ok(SignProfile::NonNegative);
    }
    let k2: usize = bipartite_profile(g)?.iter().map(|p| p.1).sum();
    Ok(if (m + k2) % 2 == 0 { SignProfile::NonNegative } else { SignProfile::NonPositive })
}

/// Sign predicted for `ω(X_G^{S_{n+1}})`.
pub fn star_predicted_sign(g: &Graph) -> Result<SignProfile> {
    predicted_sign(g, 1)
}

/// `X_G^{K_{m,n}}` through the hom engine, converted to power sums.
pub fn kmn_oracle(g: &Graph, m: usize, n: usize) -> Result<SymFunc> {
    let h = Family::Multipartite(vec![m, n]).build()?;
    convert(&hcsf(g, &h), Basis::P)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KmnReport {
    pub expansion: SymFunc,
    /// The expansion vanished (non-bipartite `G`).
    pub zero: bool,
    /// Terms with more than `m` parts above one.
    pub too_many_parts: Vec<Partition>,
    /// Terms whose largest `m` parts sum below `Σk_2`.
    pub small_top: Vec<Partition>,
    /// Terms with exactly `m` parts above one whose `ω`-sign disagrees with the prediction.
    pub wrong_sign: Vec<Partition>,
    pub expected_sign: Option<SignProfile>,
}

impl KmnReport {
    pub fn holds(&self) -> bool {
        self.too_many_parts.is_empty() && self.small_top.is_empty() && self.wrong_sign.is_empty()
    }
}

/// Checks the part-count, top-sum and sign properties of `X_G^{K_{m,n}}` on the oracle expansion.
pub fn kmn_property_check(g: &Graph, m: usize, n: usize) -> Result<KmnReport> {
    if m == 0 || n < m {
        return Err(Error::InvalidParameter(format!("need 1 ≤ m ≤ n, got m = {m}, n = {n}")));
    }
    let expansion = kmn_oracle(g, m, n)?;
    let Some(b) = g.bipartition() else {
        return Ok(KmnReport {
            zero: expansion.is_zero(),
            expansion,
            too_many_parts: Vec::new(),
            small_top: Vec::new(),
            wrong_sign: Vec::new(),
            expected_sign: None,
        });
    };
    let need = b.sum_k1();
    if n < need {
        return Err(Error::NTooSmall { n, min: need });
    }
    let k2 = b.sum_k2();
    let expected = predicted_sign(g, m)?;
    let w = omega(&expansion)?;
    let mut report = KmnReport {
        zero: expansion.is_zero(),
        expansion: expansion.clone(),
        too_many_parts: Vec::new(),
        small_top: Vec::new(),
        wrong_sign: Vec::new(),
        expected_sign: Some(expected),
    };
    for (lambda, c) in w.terms() {
        let big = lambda.parts_above_one();
        if big > m {
            report.too_many_parts.push(lambda.clone());
        }
        let top: usize = lambda.parts().iter().take(m).map(|&p| p as usize).sum();
        if top < k2 {
            report.small_top.push(lambda.clone());
        }
        if big == m {
            let ok = match expected {
                SignProfile::NonNegative => c.is_positive(),
                _ => c.is_negative(),
            };
            if !ok {
                report.wrong_sign.push(lambda.clone());
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_family;

    fn fam(s: &str) -> Graph {
        build_family(s).unwrap()
    }

    #[test]
    fn k2_into_star() {
        for n in 1..=4 {
            let got = star_p_expansion(&fam("Kn:2"), n).unwrap();
            let c = int(factorial(n) * 2);
            let want = SymFunc::from_terms(
                Basis::P,
                2,
                [(Partition::ones(2), c.clone()), (Partition::new(vec![2]).unwrap(), -c)],
            )
            .unwrap();
            assert_eq!(got, want);
            assert_eq!(got, kmn_oracle(&fam("Kn:2"), 1, n).unwrap());
        }
    }

    #[test]
    fn refusals() {
        assert_eq!(star_p_expansion(&fam("C:5"), 3), Err(Error::NotBipartite));
        assert_eq!(star_p_expansion(&fam("P:5"), 2), Err(Error::NTooSmall { n: 2, min: 3 }));
    }

    #[test]
    fn small_cases_match_oracle() {
        assert_eq!(star_p_expansion(&fam("P:3"), 3).unwrap(), kmn_oracle(&fam("P:3"), 1, 3).unwrap());
        assert_eq!(k2n_p_expansion(&fam("Kn:2"), 2).unwrap(), kmn_oracle(&fam("Kn:2"), 2, 2).unwrap());
        assert_eq!(k2n_p_expansion(&fam("P:4"), 3).unwrap(), kmn_oracle(&fam("P:4"), 2, 3).unwrap());
        assert_eq!(k2n_p_expansion(&fam("E:1"), 1).unwrap(), kmn_oracle(&fam("E:1"), 2, 1).unwrap());
    }

    #[test]
    fn verdicts() {
        let f = star_p_expansion(&fam("Kn:2"), 3).unwrap();
        assert_eq!(p_monotone_verdict(&f).unwrap(), SignProfile::NonNegative);
        assert_eq!(star_predicted_sign(&fam("Kn:2")).unwrap(), SignProfile::NonNegative);
        assert_eq!(star_predicted_sign(&fam("P:4")).unwrap(), SignProfile::NonPositive);
        assert_eq!(star_predicted_sign(&fam("E:3")).unwrap(), SignProfile::NonNegative);
        let csf = convert(&hcsf(&fam("P:4"), &fam("Kn:4")), Basis::P).unwrap();
        assert_eq!(p_monotone_verdict(&csf).unwrap(), SignProfile::NonNegative);
        let p4c7 = convert(&hcsf(&fam("P:4"), &fam("C:7")), Basis::P).unwrap();
        assert_eq!(p_monotone_verdict(&p4c7).unwrap(), SignProfile::Mixed);
        assert!(p_monotone_verdict(&hcsf(&fam("P:4"), &fam("C:7"))).is_err());
    }

    #[test]
    fn kmn_reports() {
        assert!(kmn_property_check(&fam("P:4"), 2, 3).unwrap().holds());
        assert!(kmn_property_check(&fam("Kn:2+Kn:2"), 3, 4).unwrap().holds());
        let c5 = kmn_property_check(&fam("C:5"), 2, 3).unwrap();
        assert!(c5.zero && c5.holds());
    }
}
