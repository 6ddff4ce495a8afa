//! Exact univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Coefficients by ascending degree, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    /// The polynomial `k`.
    pub fn x() -> Self {
        Polynomial::new(vec![BigRational::zero(), BigRational::one()])
    }

    /// `k (k-1) ... (k-l+1)`.
    pub fn falling(l: usize) -> Self {
        (0..l).fold(Polynomial::constant(BigRational::one()), |acc, i| {
            acc * Polynomial::new(vec![-BigRational::from_integer(BigInt::from(i)), BigRational::one()])
        })
    }

    /// `C(k, l)` as a polynomial in `k`.
    pub fn binomial(l: usize) -> Self {
        let fact = super::combinat::factorial(l);
        Polynomial::falling(l).scale(&BigRational::new(BigInt::one(), fact))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, k: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_int(&self, k: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(k)))
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |v: &Vec<BigRational>, i: usize| v.get(i).cloned().unwrap_or_else(BigRational::zero);
        Polynomial::new((0..n).map(|i| get(&self.coeffs, i) + get(&rhs.coeffs, i)).collect())
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        self + rhs.scale(&-BigRational::one())
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl fmt::Display for Polynomial {
    /// Space-separated coefficients, constant term first; `0` for the zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(" "))
    }
}
