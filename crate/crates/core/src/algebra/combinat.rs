//! Factorials, binomials, Stirling numbers and set partitions.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Stirling number of the second kind `S(j, t)`.
pub fn stirling2(j: usize, t: usize) -> BigInt {
    let mut row = vec![BigInt::zero(); t + 1];
    row[0] = BigInt::one();
    for _ in 0..j {
        for i in (1..=t).rev() {
            row[i] = &row[i] * i + &row[i - 1];
        }
        row[0] = BigInt::zero();
    }
    row[t].clone()
}

/// Set partitions of `ground` whose block sizes form `shape`.
///
/// Blocks are listed by decreasing size; equal-size blocks appear in order of
/// their smallest element, so each set partition is produced exactly once.
pub fn set_partitions_of_type(ground: &[usize], shape: &Partition) -> Result<Vec<Vec<Vec<usize>>>> {
    if ground.len() != shape.size() {
        return Err(Error::SizeMismatch { expected: shape.size(), found: ground.len() });
    }
    let sizes: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    fill(ground, &sizes, &mut blocks, &mut out);
    Ok(out)
}

fn fill(rest: &[usize], sizes: &[usize], blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    let i = blocks.len();
    if i == sizes.len() {
        out.push(blocks.clone());
        return;
    }
    let size = sizes[i];
    // Among equal-size blocks the minimum element must increase.
    let floor = if i > 0 && sizes[i - 1] == size { blocks[i - 1][0] } else { 0 };
    let candidates: Vec<usize> = rest.to_vec();
    let mut chosen = Vec::with_capacity(size);
    choose(&candidates, 0, size, floor, i > 0 && sizes[i - 1] == size, &mut chosen, &mut |block| {
        let remaining: Vec<usize> = rest.iter().copied().filter(|v| !block.contains(v)).collect();
        blocks.push(block.to_vec());
        fill(&remaining, sizes, blocks, out);
        blocks.pop();
    });
}

fn choose(
    items: &[usize],
    start: usize,
    k: usize,
    floor: usize,
    ordered: bool,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    for i in start..items.len() {
        if chosen.is_empty() && ordered && items[i] <= floor {
            continue;
        }
        if items.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(items[i]);
        choose(items, i + 1, k, floor, ordered, chosen, visit);
        chosen.pop();
    }
}

/// Every set partition of `0..n`, blocks in order of first element.
pub fn all_set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(v: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if v == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(v);
            go(v + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![v]);
        go(v + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn stirling_values() {
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(0, 0), BigInt::from(1));
        assert_eq!(stirling2(5, 0), BigInt::from(0));
        for j in 1..8 {
            assert_eq!(stirling2(j, 1), BigInt::from(1));
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
    }

    #[test]
    fn set_partition_counts() {
        let g3: Vec<usize> = (0..3).collect();
        assert_eq!(set_partitions_of_type(&g3, &p(&[2, 1])).unwrap().len(), 3);
        let g4: Vec<usize> = (0..4).collect();
        assert_eq!(set_partitions_of_type(&g4, &p(&[2, 2])).unwrap().len(), 3);
        assert_eq!(set_partitions_of_type(&g4, &p(&[1, 1, 1, 1])).unwrap().len(), 1);
        assert!(set_partitions_of_type(&g4, &p(&[2, 1])).is_err());
    }

    #[test]
    fn set_partition_count_formula() {
        for n in 1..=7 {
            let ground: Vec<usize> = (0..n).collect();
            let mut total = 0;
            for shape in super::super::partition::partitions_of(n, None) {
                let got = set_partitions_of_type(&ground, &shape).unwrap();
                let denom: BigInt = shape.parts().iter().map(|&q| factorial(q as usize)).product::<BigInt>()
                    * shape.multiplicity_factorial();
                assert_eq!(BigInt::from(got.len()), factorial(n) / denom, "{shape}");
                total += got.len();
            }
            assert_eq!(total, all_set_partitions(n).len());
        }
    }
}
