//! Enumeration of the solution matrices behind the identities: all
//! non-negative integer solutions (N_0, N_1, ..., N_k) of
//!
//! `n = sum_{i >= 0} base^i * N_i`
//!
//! A solution is exactly a partition of n into powers of `base` (N_i copies
//! of base^i), so the row count is the base-b partition function; for base 2
//! it is the classical binary partition function. [`gamma_support`] reduces
//! the companion equation `n = (alpha+1) * sum 2^i N_i` to the base-2 case:
//! it is solvable precisely when (alpha+1) divides n.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SolutionError {
    #[error("base must be >= 2, got {0}")]
    BaseTooSmall(usize),
}

/// All solutions of one instance, in canonical order.
///
/// Rows are trimmed of trailing zeros (absent positions are zero) and sorted
/// ascending lexicographically on (N_0, N_1, ...). For n = 0 there is a
/// single empty row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionMatrix {
    n: usize,
    base: usize,
    rows: Vec<Vec<usize>>,
}

impl SolutionMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }
}

/// Complete, duplicate-free enumeration by recursion over the highest power:
/// for each i with base^i <= n choose N_i from 0 to floor(rem / base^i) and
/// recurse on the remainder with the powers below.
pub fn enumerate_solutions(n: usize, base: usize) -> Result<SolutionMatrix, SolutionError> {
    if base < 2 {
        return Err(SolutionError::BaseTooSmall(base));
    }
    if n == 0 {
        return Ok(SolutionMatrix {
            n,
            base,
            rows: vec![Vec::new()],
        });
    }
    let mut powers = vec![1usize];
    while let Some(next) = powers.last().unwrap().checked_mul(base) {
        if next > n {
            break;
        }
        powers.push(next);
    }
    let mut rows = Vec::new();
    let mut digits = vec![0usize; powers.len()];
    collect(&powers, powers.len() - 1, n, &mut digits, &mut rows);
    rows.sort_unstable();
    Ok(SolutionMatrix { n, base, rows })
}

fn collect(
    powers: &[usize],
    idx: usize,
    rem: usize,
    digits: &mut Vec<usize>,
    rows: &mut Vec<Vec<usize>>,
) {
    if idx == 0 {
        // Only N_0 = rem closes the equation at power 1.
        digits[0] = rem;
        let mut row = digits.clone();
        while row.last() == Some(&0) {
            row.pop();
        }
        rows.push(row);
        return;
    }
    let p = powers[idx];
    for k in 0..=rem / p {
        digits[idx] = k;
        collect(powers, idx - 1, rem - k * p, digits, rows);
    }
    digits[idx] = 0;
}

/// Row count by DP (partitions of n into powers of `base`), for cross-checks
/// at sizes where the full enumeration would be wasteful.
pub fn count_solutions(n: usize, base: usize) -> Result<BigInt, SolutionError> {
    if base < 2 {
        return Err(SolutionError::BaseTooSmall(base));
    }
    let mut dp = vec![BigInt::zero(); n + 1];
    dp[0] = BigInt::one();
    let mut power = 1usize;
    loop {
        for m in power..=n {
            let prev = dp[m - power].clone();
            dp[m] += prev;
        }
        match power.checked_mul(base) {
            Some(next) if next <= n => power = next,
            _ => break,
        }
    }
    Ok(dp.pop().expect("dp has n + 1 entries"))
}

/// Solutions of `n = (alpha+1) * sum 2^i N_i`, or `None` when there are none.
///
/// Every non-negative integer is a sum of powers of two, so solvability is
/// exactly divisibility by alpha+1; in that case the rows are those of
/// `enumerate_solutions(n / (alpha+1), 2)`.
pub fn gamma_support(n: usize, alpha: u32) -> Option<SolutionMatrix> {
    assert!(alpha >= 1, "multiplicity cap must be >= 1");
    let modulus = alpha as usize + 1;
    if !n.is_multiple_of(modulus) {
        return None;
    }
    Some(enumerate_solutions(n / modulus, 2).expect("base 2 is valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows_of(n: usize, base: usize) -> Vec<Vec<usize>> {
        enumerate_solutions(n, base).unwrap().rows().to_vec()
    }

    #[test]
    fn base_two_five() {
        assert_eq!(
            rows_of(5, 2),
            vec![vec![1, 0, 1], vec![1, 2], vec![3, 1], vec![5]]
        );
    }

    #[test]
    fn base_two_ten_is_the_fourteen_row_matrix() {
        assert_eq!(
            rows_of(10, 2),
            vec![
                vec![0, 1, 0, 1],
                vec![0, 1, 2],
                vec![0, 3, 1],
                vec![0, 5],
                vec![2, 0, 0, 1],
                vec![2, 0, 2],
                vec![2, 2, 1],
                vec![2, 4],
                vec![4, 1, 1],
                vec![4, 3],
                vec![6, 0, 1],
                vec![6, 2],
                vec![8, 1],
                vec![10],
            ]
        );
        assert_eq!(count_solutions(10, 2).unwrap(), BigInt::from(14));
    }

    #[test]
    fn zero_has_the_empty_solution() {
        assert_eq!(rows_of(0, 3), vec![Vec::<usize>::new()]);
        assert_eq!(count_solutions(0, 2).unwrap(), BigInt::one());
    }

    #[test]
    fn base_three_seven() {
        assert_eq!(rows_of(7, 3), vec![vec![1, 2], vec![4, 1], vec![7]]);
    }

    #[test]
    fn four_solutions_at_four() {
        assert_eq!(count_solutions(4, 2).unwrap(), BigInt::from(4));
        assert_eq!(
            rows_of(4, 2),
            vec![vec![0, 0, 1], vec![0, 2], vec![2, 1], vec![4]]
        );
    }

    #[test]
    fn small_base_is_rejected() {
        assert_eq!(
            enumerate_solutions(4, 1).unwrap_err(),
            SolutionError::BaseTooSmall(1)
        );
        assert_eq!(
            count_solutions(4, 0).unwrap_err(),
            SolutionError::BaseTooSmall(0)
        );
    }

    #[test]
    fn rows_satisfy_the_equation_and_are_distinct() {
        for base in 2..=5 {
            for n in 0..=25 {
                let matrix = enumerate_solutions(n, base).unwrap();
                for row in matrix.rows() {
                    let total: usize = row
                        .iter()
                        .enumerate()
                        .map(|(i, &coeff)| coeff * base.pow(i as u32))
                        .sum();
                    assert_eq!(total, n, "base {base}, row {row:?}");
                    assert_ne!(row.last(), Some(&0), "trailing zero in {row:?}");
                }
                let mut deduped = matrix.rows().to_vec();
                deduped.dedup();
                assert_eq!(deduped.len(), matrix.row_count());
                assert_eq!(
                    BigInt::from(matrix.row_count()),
                    count_solutions(n, base).unwrap()
                );
            }
        }
    }

    #[test]
    fn binary_partition_recurrence() {
        let b: Vec<BigInt> = (0..=60).map(|n| count_solutions(n, 2).unwrap()).collect();
        let prefix: Vec<BigInt> = [1, 1, 2, 2, 4, 4, 6, 6, 10, 10, 14, 14, 20]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(&b[..=12], prefix.as_slice());
        for m in 1..=30 {
            assert_eq!(
                b[2 * m],
                &b[2 * m - 1] + &b[m],
                "b(2m) = b(2m-1) + b(m) at m = {m}"
            );
            if 2 * m < 60 {
                assert_eq!(b[2 * m + 1], b[2 * m], "b(2m+1) = b(2m) at m = {m}");
            }
        }
    }

    #[test]
    fn gamma_support_divisibility() {
        assert!(gamma_support(3, 1).is_none());
        assert!(gamma_support(10, 2).is_none());
        for alpha in 1..=4u32 {
            for n in 0..=40 {
                let support = gamma_support(n, alpha);
                assert_eq!(support.is_none(), n % (alpha as usize + 1) != 0);
            }
        }
    }

    #[test]
    fn gamma_support_rows() {
        let support = gamma_support(8, 1).unwrap();
        assert_eq!(
            support.rows(),
            &[vec![0, 0, 1], vec![0, 2], vec![2, 1], vec![4]]
        );
        let zero = gamma_support(0, 3).unwrap();
        assert_eq!(zero.rows(), &[Vec::<usize>::new()]);
    }
}
