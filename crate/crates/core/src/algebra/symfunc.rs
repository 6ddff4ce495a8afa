//! Homogeneous symmetric functions with exact rational coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::combinat::{binomial, factorial};
use super::partition::Partition;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Basis tag of a [`SymFunc`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Monomial `m_λ`.
    M,
    /// Augmented monomial `m̃_λ = ∏ r_i! · m_λ`.
    MTilde,
    /// Scaled monomial `m^N_λ = ∏ r_i! · (N - ℓ)! · m_λ` for an `N`-vertex target.
    MN(usize),
    /// Power sum `p_λ`.
    P,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::M => write!(f, "m"),
            Basis::MTilde => write!(f, "mt"),
            Basis::MN(n) => write!(f, "m^{n}"),
            Basis::P => write!(f, "p"),
        }
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "m" => Ok(Basis::M),
            "mt" => Ok(Basis::MTilde),
            "p" => Ok(Basis::P),
            other => other
                .strip_prefix("m^")
                .and_then(|n| n.parse().ok())
                .map(Basis::MN)
                .ok_or_else(|| Error::Parse(format!("unknown basis {other:?}"))),
        }
    }
}

/// Sparse homogeneous symmetric function. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    terms: BTreeMap<Partition, BigRational>,
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc { basis, degree, terms: BTreeMap::new() }
    }

    /// The single basis element indexed by `lambda`.
    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        let mut f = SymFunc::zero(basis, lambda.size());
        f.terms.insert(lambda, BigRational::one());
        f
    }

    /// Builds from `(λ, c)` pairs, summing repeats.
    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigRational)>,
    {
        let mut f = SymFunc::zero(basis, degree);
        for (lambda, c) in terms {
            f.add_term(lambda, c)?;
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigRational {
        self.terms.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigRational) -> Result<()> {
        if lambda.size() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: lambda.size() });
        }
        if let Basis::MN(n) = self.basis {
            if lambda.len() > n {
                return Err(Error::LengthExceedsN(lambda.to_string(), n));
            }
        }
        if c.is_zero() {
            return Ok(());
        }
        let slot = self.terms.entry(lambda).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    fn check_same(&self, other: &SymFunc) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::WrongBasis { expected: self.basis.to_string(), found: other.basis.to_string() });
        }
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::DegreeMismatch { expected: self.degree, found: other.degree });
        }
        Ok(())
    }

    pub fn add(&self, other: &SymFunc) -> Result<SymFunc> {
        self.check_same(other)?;
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (l, c) in &other.terms {
                out.add_term(l.clone(), c.clone())?;
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFunc) -> Result<SymFunc> {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, c: &BigRational) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero(self.basis, self.degree);
        }
        SymFunc {
            basis: self.basis,
            degree: self.degree,
            terms: self.terms.iter().map(|(l, v)| (l.clone(), v * c)).collect(),
        }
    }

    /// Reinterprets the coefficients in another basis without converting.
    pub fn relabel(&self, basis: Basis) -> Result<SymFunc> {
        SymFunc::from_terms(basis, self.degree, self.terms.clone())
    }

    /// Coefficient vector over `index`, missing partitions read as zero.
    pub fn vector(&self, index: &[Partition]) -> Vec<BigRational> {
        index.iter().map(|l| self.coefficient(l)).collect()
    }
}

/// `∏ r_i! · (N − ℓ)!`, the factor turning `m_λ` into `m^N_λ`.
fn mn_scale(lambda: &Partition, n: usize) -> BigInt {
    lambda.multiplicity_factorial() * factorial(n - lambda.len())
}

/// `p_r · f` for `f` in the monomial basis.
fn mul_p_r(r: u32, f: &BTreeMap<Partition, BigInt>) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (mu, c) in f {
        let parts = mu.parts();
        let mut seen = Vec::new();
        for (i, &a) in parts.iter().enumerate() {
            if seen.contains(&a) {
                continue;
            }
            seen.push(a);
            let mut new_parts = parts.to_vec();
            new_parts[i] = a + r;
            let nu = Partition::from_unsorted(new_parts);
            let mult = nu.multiplicity(a + r);
            *out.entry(nu).or_insert_with(BigInt::zero) += c * mult;
        }
        let nu = mu.union(&Partition::from_unsorted([r]));
        let mult = nu.multiplicity(r);
        *out.entry(nu).or_insert_with(BigInt::zero) += c * mult;
    }
    out
}

type Expansion = Arc<BTreeMap<Partition, BigInt>>;

fn p_cache() -> &'static Mutex<HashMap<Partition, Expansion>> {
    static CACHE: OnceLock<Mutex<HashMap<Partition, Expansion>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Monomial expansion of `p_λ`, built by repeated multiplication by `p_r`.
pub fn p_to_m(lambda: &Partition) -> Expansion {
    if let Some(hit) = p_cache().lock().expect("cache lock").get(lambda) {
        return hit.clone();
    }
    let mut f = BTreeMap::from([(Partition::empty(), BigInt::one())]);
    for &r in lambda.parts() {
        f = mul_p_r(r, &f);
    }
    f.retain(|_, c| !c.is_zero());
    let f = Arc::new(f);
    p_cache().lock().expect("cache lock").insert(lambda.clone(), f.clone());
    f
}

fn to_m(f: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero(Basis::M, f.degree);
    match f.basis {
        Basis::M => return f.clone(),
        Basis::MTilde => {
            for (l, c) in &f.terms {
                out.terms.insert(l.clone(), c * int(l.multiplicity_factorial()));
            }
        }
        Basis::MN(n) => {
            for (l, c) in &f.terms {
                out.terms.insert(l.clone(), c * int(mn_scale(l, n)));
            }
        }
        Basis::P => {
            for (l, c) in &f.terms {
                for (mu, d) in p_to_m(l).iter() {
                    out.add_term(mu.clone(), c * int(d.clone())).expect("same degree");
                }
            }
        }
    }
    out
}

fn m_to_p(f: &SymFunc) -> SymFunc {
    let mut rest = f.terms.clone();
    let mut out = SymFunc::zero(Basis::P, f.degree);
    while let Some(lambda) = rest.keys().max_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a))).cloned() {
        let c = rest.remove(&lambda).expect("key present");
        let exp = p_to_m(&lambda);
        let lead = int(exp[&lambda].clone());
        let k = c / lead;
        for (mu, d) in exp.iter() {
            if *mu == lambda {
                continue;
            }
            let slot = rest.entry(mu.clone()).or_insert_with(BigRational::zero);
            *slot -= &k * int(d.clone());
            if slot.is_zero() {
                rest.remove(mu);
            }
        }
        out.add_term(lambda, k).expect("same degree");
    }
    out
}

/// Exact change of basis.
pub fn convert(f: &SymFunc, target: Basis) -> Result<SymFunc> {
    if f.basis == target {
        return Ok(f.clone());
    }
    let m = to_m(f);
    match target {
        Basis::M => Ok(m),
        Basis::MTilde => Ok(SymFunc {
            basis: Basis::MTilde,
            degree: m.degree,
            terms: m
                .terms
                .into_iter()
                .map(|(l, c)| {
                    let s = int(l.multiplicity_factorial());
                    (l, c / s)
                })
                .collect(),
        }),
        Basis::MN(n) => {
            let mut out = SymFunc::zero(Basis::MN(n), m.degree);
            for (l, c) in m.terms {
                let s = int(mn_scale_checked(&l, n)?);
                out.terms.insert(l, c / s);
            }
            Ok(out)
        }
        Basis::P => Ok(m_to_p(&m)),
    }
}

fn mn_scale_checked(l: &Partition, n: usize) -> Result<BigInt> {
    if l.len() > n {
        return Err(Error::LengthExceedsN(l.to_string(), n));
    }
    Ok(mn_scale(l, n))
}

/// `ω(p_λ) = (−1)^{|λ|−ℓ(λ)} p_λ`.
pub fn omega(f: &SymFunc) -> Result<SymFunc> {
    if f.basis != Basis::P {
        return Err(Error::WrongBasis { expected: "p".into(), found: f.basis.to_string() });
    }
    let mut out = f.clone();
    for (l, c) in out.terms.iter_mut() {
        if (l.size() - l.len()) % 2 == 1 {
            *c = -c.clone();
        }
    }
    Ok(out)
}

/// Bilinear product with `m̃_λ ⊙ m̃_μ = m̃_{λ⊔μ}`.
pub fn odot(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    for h in [f, g] {
        if h.basis != Basis::MTilde {
            return Err(Error::WrongBasis { expected: "mt".into(), found: h.basis.to_string() });
        }
    }
    let mut out = SymFunc::zero(Basis::MTilde, f.degree + g.degree);
    for (a, x) in &f.terms {
        for (b, y) in &g.terms {
            out.add_term(a.union(b), x * y)?;
        }
    }
    Ok(out)
}

/// The ⊙ identity: coefficient one on the empty partition.
pub fn odot_unit() -> SymFunc {
    SymFunc::basis_element(Basis::MTilde, Partition::empty())
}

/// `f(1^k)`: `m_λ(1^k) = C(k, ℓ) · ℓ! / ∏ r_i!`.
pub fn evaluate_ones(f: &SymFunc, k: usize) -> BigRational {
    to_m(f)
        .terms
        .iter()
        .map(|(l, c)| c * int(binomial(k, l.len()) * factorial(l.len())) / int(l.multiplicity_factorial()))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// `k ↦ f(1^k)` as a polynomial.
pub fn evaluate_ones_poly(f: &SymFunc) -> Polynomial {
    to_m(f).terms.iter().fold(Polynomial::zero(), |acc, (l, c)| {
        acc + Polynomial::falling(l.len()).scale(&(c / int(l.multiplicity_factorial())))
    })
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn parse_coeff(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad coefficient {s:?}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a.trim().parse().map_err(|_| bad())?, d))
        }
        None => Ok(int(s.parse::<BigInt>().map_err(|_| bad())?)),
    }
}

impl fmt::Display for SymFunc {
    /// `m^4; 2*[2,1,1]; -1*[4]`; the zero function prints as `m^4; 0@3` (degree after `@`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.basis)?;
        if self.terms.is_empty() {
            return write!(f, "; 0@{}", self.degree);
        }
        for (l, c) in &self.terms {
            write!(f, "; {}*{}", fmt_coeff(c), l)?;
        }
        Ok(())
    }
}

impl FromStr for SymFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut fields = s.split(';');
        let basis: Basis = fields.next().unwrap_or("").parse()?;
        let mut terms = Vec::new();
        let mut degree = None;
        for field in fields {
            let field = field.trim();
            if let Some(d) = field.strip_prefix("0@") {
                degree = Some(d.parse().map_err(|_| Error::Parse(format!("bad degree {d:?}")))?);
                continue;
            }
            let (c, l) = field.split_once('*').ok_or_else(|| Error::Parse(format!("bad term {field:?}")))?;
            let lambda: Partition = l.parse()?;
            terms.push((lambda, parse_coeff(c)?));
        }
        let degree = degree.or_else(|| terms.first().map(|(l, _)| l.size())).unwrap_or(0);
        SymFunc::from_terms(basis, degree, terms)
    }
}

impl SymFunc {
    /// One `basis λ numerator denominator` line per term; `λ` comma-separated, `-` if empty.
    pub fn to_machine(&self) -> String {
        let mut out = String::new();
        for (l, c) in &self.terms {
            let parts: Vec<String> = l.parts().iter().map(ToString::to_string).collect();
            let lam = if parts.is_empty() { "-".to_string() } else { parts.join(",") };
            out.push_str(&format!("{} {} {} {}\n", self.basis, lam, c.numer(), c.denom()));
        }
        out
    }

    /// Sign pattern of the nonzero coefficients.
    pub fn sign_profile(&self) -> SignProfile {
        let pos = self.terms.values().any(Signed::is_positive);
        let neg = self.terms.values().any(Signed::is_negative);
        match (pos, neg) {
            (false, false) => SignProfile::Zero,
            (true, false) => SignProfile::NonNegative,
            (false, true) => SignProfile::NonPositive,
            (true, true) => SignProfile::Mixed,
        }
    }
}

/// Sign pattern of a coefficient vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignProfile {
    NonNegative,
    NonPositive,
    Zero,
    Mixed,
}

impl fmt::Display for SignProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SignProfile::NonNegative => "all-nonnegative",
            SignProfile::NonPositive => "all-nonpositive",
            SignProfile::Zero => "zero",
            SignProfile::Mixed => "mixed",
        };
        write!(f, "{s}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn q(n: i64) -> BigRational {
        int(n)
    }

    #[test]
    fn mtilde_to_m() {
        let f = SymFunc::basis_element(Basis::MTilde, p(&[2, 1]));
        let m = convert(&f, Basis::M).unwrap();
        assert_eq!(m.coefficient(&p(&[2, 1])), q(1));
    }

    #[test]
    fn mn_to_m() {
        let f = SymFunc::basis_element(Basis::MN(2), p(&[1, 1]));
        assert_eq!(convert(&f, Basis::M).unwrap().coefficient(&p(&[1, 1])), q(2));
        let long = SymFunc::basis_element(Basis::M, p(&[1, 1, 1]));
        assert!(matches!(convert(&long, Basis::MN(2)), Err(Error::LengthExceedsN(..))));
    }

    #[test]
    fn p11_in_monomials() {
        let f = SymFunc::basis_element(Basis::P, p(&[1, 1]));
        let m = convert(&f, Basis::M).unwrap();
        assert_eq!(m.coefficient(&p(&[2])), q(1));
        assert_eq!(m.coefficient(&p(&[1, 1])), q(2));
        assert_eq!(convert(&m, Basis::P).unwrap(), f);
    }

    #[test]
    fn omega_signs() {
        let f = SymFunc::basis_element(Basis::P, p(&[2, 1]));
        assert_eq!(omega(&f).unwrap().coefficient(&p(&[2, 1])), q(-1));
        let g = SymFunc::basis_element(Basis::P, p(&[1, 1, 1]));
        assert_eq!(omega(&g).unwrap(), g);
        assert!(omega(&SymFunc::basis_element(Basis::M, p(&[1]))).is_err());
    }

    #[test]
    fn odot_examples() {
        let a = SymFunc::basis_element(Basis::MTilde, p(&[5, 4, 2, 2]));
        let b = SymFunc::basis_element(Basis::MTilde, p(&[3, 2, 1]));
        assert_eq!(odot(&a, &b).unwrap(), SymFunc::basis_element(Basis::MTilde, p(&[5, 4, 3, 2, 2, 2, 1])));
        let two = SymFunc::basis_element(Basis::MTilde, p(&[2])).scale(&q(2));
        let three = SymFunc::basis_element(Basis::MTilde, p(&[1])).scale(&q(3));
        assert_eq!(odot(&two, &three).unwrap(), SymFunc::basis_element(Basis::MTilde, p(&[2, 1])).scale(&q(6)));
        assert_eq!(odot(&a, &odot_unit()).unwrap(), a);
    }

    #[test]
    fn evaluation_at_ones() {
        let m1 = SymFunc::basis_element(Basis::M, p(&[1]));
        assert_eq!(evaluate_ones(&m1, 7), q(7));
        assert_eq!(evaluate_ones(&SymFunc::basis_element(Basis::M, p(&[2, 1])), 3), q(6));
        assert_eq!(evaluate_ones(&SymFunc::basis_element(Basis::M, p(&[1, 1, 1, 1])), 3), q(0));
    }

    #[test]
    fn text_round_trip() {
        let s = "m^4; 2*[2,1,1]; -1*[4]";
        let f: SymFunc = s.parse().unwrap();
        assert_eq!(f.degree(), 4);
        let again: SymFunc = f.to_string().parse().unwrap();
        assert_eq!(again, f);
        let z = SymFunc::zero(Basis::P, 3);
        assert_eq!(z.to_string().parse::<SymFunc>().unwrap(), z);
        let frac: SymFunc = "p; 3/2*[1,1]; -1/3*[2]".parse().unwrap();
        assert_eq!(frac.to_string().parse::<SymFunc>().unwrap(), frac);
    }

    #[test]
    fn machine_lines() {
        let f: SymFunc = "m^4; 2*[2,1,1]".parse().unwrap();
        assert_eq!(f.to_machine(), "m^4 2,1,1 2 1\n");
    }
}
