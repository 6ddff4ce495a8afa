//! Exact rank computations over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Scales a rational row to a primitive integer row with the same span.
pub fn integer_row(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut out: Vec<BigInt> = row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x = &*x / &g;
        }
    }
}

/// Rank by fraction-free Bareiss elimination.
///
/// Pivots are the first nonzero entry of each column scanning rows top-down, so
/// the elimination is fully deterministic.
pub fn bareiss_rank(rows: &[Vec<BigRational>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| integer_row(r)).collect();
    let height = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..width {
        if r == height {
            break;
        }
        let Some(p) = (r..height).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[col].clone();
            for j in col + 1..width {
                let v = &pivot_row[col] * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[col] = BigInt::zero();
        }
        prev = pivot_row[col].clone();
        r += 1;
    }
    r
}

/// Incrementally maintained row space in echelon form.
///
/// Each stored row is primitive and has a distinct leading column; inserting a
/// row reports whether it enlarged the span.
#[derive(Debug, Clone)]
pub struct RowSpace {
    width: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace { width, rows: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.width
    }

    fn reduce(&self, mut row: Vec<BigInt>) -> Vec<BigInt> {
        for (lead, basis) in &self.rows {
            if row[*lead].is_zero() {
                continue;
            }
            let a = basis[*lead].clone();
            let b = row[*lead].clone();
            for (x, y) in row.iter_mut().zip(basis) {
                *x = &*x * &a - &b * y;
            }
            make_primitive(&mut row);
        }
        row
    }

    /// Whether `row` already lies in the span.
    pub fn contains(&self, row: &[BigRational]) -> bool {
        self.reduce(integer_row(row)).iter().all(Zero::is_zero)
    }

    /// Adds `row`; returns `true` if the rank grew.
    pub fn insert(&mut self, row: &[BigRational]) -> bool {
        assert_eq!(row.len(), self.width, "row width");
        let mut reduced = self.reduce(integer_row(row));
        let Some(lead) = reduced.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        if reduced[lead].is_negative() {
            for x in reduced.iter_mut() {
                *x = -&*x;
            }
        }
        let pos = self.rows.partition_point(|(l, _)| *l < lead);
        self.rows.insert(pos, (lead, reduced));
        true
    }
}
