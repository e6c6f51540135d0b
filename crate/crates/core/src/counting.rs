//! Dynamic-programming computation of the partition statistics, independent
//! of the series engine so the two routes can cross-check each other.
//!
//! For a part set A and bound N the table holds, per statistic:
//! - `Unrestricted`: p(n), partitions of n into elements of A
//! - `Bounded(alpha)`: p_alpha(n), each part repeated at most alpha times
//! - `Signed` / `SignedBounded(alpha)`: the same counts weighted by
//!   (-1)^(number of parts, counted with multiplicity)
//! - `EvenParts` / `OddParts`: partitions whose number of parts (with
//!   multiplicity) is even resp. odd, optionally capped
//! - `Gamma(alpha)`: the inverse-identity kernel; tables of this statistic
//!   are produced by the identities module, never by [`count`]
//!
//! Parity here always means parity of the number of parts counted with
//! multiplicity: 4+1+1 has three parts and is odd. That reading is the one
//! under which signed[n] = even[n] - odd[n] matches the alternating product
//! `prod 1/(1+q^a)`, and it reproduces every worked table downstream.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partset::PartSet;
use crate::Cap;

#[derive(Debug, Error, PartialEq)]
pub enum CountError {
    #[error("multiplicity cap alpha = 0 admits only the empty partition; use alpha >= 1")]
    ZeroAlpha,
    #[error("gamma tables come from the identities module, not from direct counting")]
    GammaNotCountable,
}

/// Which numbers a [`CountTable`] holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Statistic {
    Unrestricted,
    Bounded(u32),
    Signed,
    SignedBounded(u32),
    EvenParts(Cap),
    OddParts(Cap),
    Gamma(u32),
}

impl fmt::Display for Statistic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statistic::Unrestricted => write!(f, "p"),
            Statistic::Bounded(a) => write!(f, "p_{a}"),
            Statistic::Signed => write!(f, "pbar"),
            Statistic::SignedBounded(a) => write!(f, "pbar_{a}"),
            Statistic::EvenParts(Cap::Unbounded) => write!(f, "even"),
            Statistic::EvenParts(Cap::AtMost(a)) => write!(f, "even_{a}"),
            Statistic::OddParts(Cap::Unbounded) => write!(f, "odd"),
            Statistic::OddParts(Cap::AtMost(a)) => write!(f, "odd_{a}"),
            Statistic::Gamma(a) => write!(f, "gamma_{a}"),
        }
    }
}

/// Exact values of one statistic for n = 0..=max_n over one part set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    statistic: Statistic,
    set_label: String,
    values: Vec<BigInt>,
}

impl CountTable {
    pub(crate) fn new(statistic: Statistic, set_label: String, values: Vec<BigInt>) -> Self {
        debug_assert!(!values.is_empty());
        CountTable {
            statistic,
            set_label,
            values,
        }
    }

    pub fn statistic(&self) -> Statistic {
        self.statistic
    }

    pub fn set_label(&self) -> &str {
        &self.set_label
    }

    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, n: usize) -> &BigInt {
        &self.values[n]
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }
}

/// Computes the table for n = 0..=max_n by folding one part at a time into a
/// knapsack-style DP, with weight (-1)^k on multiplicity k for the signed
/// statistics and a two-lane DP for the parity statistics.
pub fn count(statistic: Statistic, set: &PartSet, max_n: usize) -> Result<CountTable, CountError> {
    let parts = set.parts_up_to(max_n);
    let values = match statistic {
        Statistic::Unrestricted => unbounded(&parts, max_n, false),
        Statistic::Signed => unbounded(&parts, max_n, true),
        Statistic::Bounded(alpha) => {
            require_positive(alpha)?;
            bounded(&parts, max_n, alpha, false)
        }
        Statistic::SignedBounded(alpha) => {
            require_positive(alpha)?;
            bounded(&parts, max_n, alpha, true)
        }
        Statistic::EvenParts(cap) => {
            require_usable(cap)?;
            parity_lanes(&parts, max_n, cap).0
        }
        Statistic::OddParts(cap) => {
            require_usable(cap)?;
            parity_lanes(&parts, max_n, cap).1
        }
        Statistic::Gamma(_) => return Err(CountError::GammaNotCountable),
    };
    Ok(CountTable::new(statistic, set.label(), values))
}

fn require_positive(alpha: u32) -> Result<(), CountError> {
    if alpha == 0 {
        return Err(CountError::ZeroAlpha);
    }
    Ok(())
}

fn require_usable(cap: Cap) -> Result<(), CountError> {
    match cap {
        Cap::AtMost(0) => Err(CountError::ZeroAlpha),
        _ => Ok(()),
    }
}

/// Unbounded multiplicities, folding in one geometric factor per part.
/// Unsigned: dp[n] += dp[n-a] ascending (factor 1/(1-q^a)).
/// Signed: dp[n] -= dp[n-a] ascending, against the updated prefix, which is
/// exactly division by (1+q^a).
fn unbounded(parts: &[usize], max_n: usize, signed: bool) -> Vec<BigInt> {
    let mut dp = vec![BigInt::zero(); max_n + 1];
    dp[0] = BigInt::one();
    for &a in parts {
        for n in a..=max_n {
            let prev = dp[n - a].clone();
            if signed {
                dp[n] -= prev;
            } else {
                dp[n] += prev;
            }
        }
    }
    dp
}

/// At most alpha copies of each part; the factor per part is the polynomial
/// sum_{k=0}^{alpha} (+-1)^k q^(k a), convolved in via a fresh array.
fn bounded(parts: &[usize], max_n: usize, alpha: u32, signed: bool) -> Vec<BigInt> {
    let mut dp = vec![BigInt::zero(); max_n + 1];
    dp[0] = BigInt::one();
    for &a in parts {
        let mut next = dp.clone();
        for k in 1..=Cap::AtMost(alpha).limit(max_n / a) {
            let shift = k * a;
            let negate = signed && k % 2 == 1;
            for n in shift..=max_n {
                if negate {
                    next[n] -= &dp[n - shift];
                } else {
                    next[n] += &dp[n - shift];
                }
            }
        }
        dp = next;
    }
    dp
}

/// Two lanes tracking the parity of the total number of parts. Adding k
/// copies of a part flips the lane when k is odd.
fn parity_lanes(parts: &[usize], max_n: usize, cap: Cap) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut even = vec![BigInt::zero(); max_n + 1];
    let mut odd = vec![BigInt::zero(); max_n + 1];
    even[0] = BigInt::one();
    for &a in parts {
        let mut next_even = even.clone();
        let mut next_odd = odd.clone();
        for k in 1..=cap.limit(max_n / a) {
            let shift = k * a;
            for n in shift..=max_n {
                if k % 2 == 0 {
                    next_even[n] += &even[n - shift];
                    next_odd[n] += &odd[n - shift];
                } else {
                    next_even[n] += &odd[n - shift];
                    next_odd[n] += &even[n - shift];
                }
            }
        }
        even = next_even;
        odd = next_odd;
    }
    (even, odd)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn unrestricted_small_tables() {
        let naturals = count(Statistic::Unrestricted, &PartSet::naturals(), 5).unwrap();
        assert_eq!(naturals.values(), ints(&[1, 1, 2, 3, 5, 7]).as_slice());

        let primes = count(Statistic::Unrestricted, &PartSet::primes(), 10).unwrap();
        assert_eq!(
            primes.values(),
            ints(&[1, 0, 1, 1, 1, 2, 2, 3, 3, 4, 5]).as_slice()
        );

        let odds = count(Statistic::Unrestricted, &PartSet::odds(), 10).unwrap();
        assert_eq!(odds.value(10), &BigInt::from(10));
    }

    #[test]
    fn distinct_part_counts() {
        let d = count(Statistic::Bounded(1), &PartSet::naturals(), 5).unwrap();
        assert_eq!(d.values(), ints(&[1, 1, 1, 2, 2, 3]).as_slice());

        let primes = count(Statistic::Bounded(1), &PartSet::primes(), 5).unwrap();
        assert_eq!(primes.values(), ints(&[1, 0, 1, 1, 0, 2]).as_slice());

        let odds = count(Statistic::Bounded(1), &PartSet::odds(), 10).unwrap();
        assert_eq!(
            odds.values(),
            ints(&[1, 1, 0, 1, 1, 1, 1, 1, 2, 2, 2]).as_slice()
        );
    }

    #[test]
    fn signed_small_tables() {
        let primes = count(Statistic::Signed, &PartSet::primes(), 5).unwrap();
        assert_eq!(primes.values(), ints(&[1, 0, -1, -1, 1, 0]).as_slice());

        let squares = count(Statistic::Signed, &PartSet::squares(), 10).unwrap();
        assert_eq!(
            squares.values(),
            ints(&[1, -1, 1, -1, 0, 0, 0, 0, 1, -2, 2]).as_slice()
        );

        let naturals = count(Statistic::SignedBounded(1), &PartSet::naturals(), 5).unwrap();
        assert_eq!(naturals.values(), ints(&[1, -1, -1, 0, 0, 1]).as_slice());
    }

    #[test]
    fn parity_lanes_reconcile_with_signed() {
        for set in PartSet::builtins() {
            for cap in [
                Cap::Unbounded,
                Cap::AtMost(1),
                Cap::AtMost(2),
                Cap::AtMost(3),
            ] {
                let even = count(Statistic::EvenParts(cap), &set, 30).unwrap();
                let odd = count(Statistic::OddParts(cap), &set, 30).unwrap();
                let signed = match cap {
                    Cap::Unbounded => count(Statistic::Signed, &set, 30).unwrap(),
                    Cap::AtMost(a) => count(Statistic::SignedBounded(a), &set, 30).unwrap(),
                };
                let unsigned = match cap {
                    Cap::Unbounded => count(Statistic::Unrestricted, &set, 30).unwrap(),
                    Cap::AtMost(a) => count(Statistic::Bounded(a), &set, 30).unwrap(),
                };
                for n in 0..=30 {
                    assert_eq!(&(even.value(n) - odd.value(n)), signed.value(n), "n = {n}");
                    assert_eq!(
                        &(even.value(n) + odd.value(n)),
                        unsigned.value(n),
                        "n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn empty_sum_conventions() {
        let even = count(Statistic::EvenParts(Cap::Unbounded), &PartSet::primes(), 3).unwrap();
        let odd = count(Statistic::OddParts(Cap::Unbounded), &PartSet::primes(), 3).unwrap();
        assert_eq!(even.value(0), &BigInt::one());
        assert_eq!(odd.value(0), &BigInt::zero());
        for statistic in [
            Statistic::Unrestricted,
            Statistic::Bounded(2),
            Statistic::Signed,
            Statistic::SignedBounded(2),
        ] {
            let table = count(statistic, &PartSet::squares(), 0).unwrap();
            assert_eq!(table.value(0), &BigInt::one(), "{statistic}");
        }
    }

    #[test]
    fn euler_distinct_equals_odd_parts() {
        let distinct = count(Statistic::Bounded(1), &PartSet::naturals(), 50).unwrap();
        let odds = count(Statistic::Unrestricted, &PartSet::odds(), 50).unwrap();
        assert_eq!(distinct.values(), odds.values());
    }

    #[test]
    fn agrees_with_generating_functions() {
        use crate::series::{build_gf, GfStatistic};
        let pairs = [
            (Statistic::Unrestricted, GfStatistic::Unrestricted),
            (Statistic::Bounded(2), GfStatistic::Bounded(2)),
            (Statistic::Signed, GfStatistic::Signed),
            (Statistic::SignedBounded(3), GfStatistic::SignedBounded(3)),
        ];
        for set in PartSet::builtins() {
            for (stat, gf_stat) in &pairs {
                let table = count(*stat, &set, 60).unwrap();
                let series = build_gf(*gf_stat, &set, 60);
                assert_eq!(
                    table.values(),
                    series.coeffs(),
                    "set {set}, statistic {stat}"
                );
            }
        }
    }

    #[test]
    fn large_value_is_exact() {
        let table = count(Statistic::Unrestricted, &PartSet::naturals(), 200).unwrap();
        assert_eq!(table.value(200), &BigInt::from(3_972_999_029_388u64));
    }

    #[test]
    fn zero_alpha_is_rejected() {
        let set = PartSet::naturals();
        assert_eq!(
            count(Statistic::Bounded(0), &set, 4),
            Err(CountError::ZeroAlpha)
        );
        assert_eq!(
            count(Statistic::SignedBounded(0), &set, 4),
            Err(CountError::ZeroAlpha)
        );
        assert_eq!(
            count(Statistic::EvenParts(Cap::AtMost(0)), &set, 4),
            Err(CountError::ZeroAlpha)
        );
        assert_eq!(
            count(Statistic::OddParts(Cap::AtMost(0)), &set, 4),
            Err(CountError::ZeroAlpha)
        );
        assert_eq!(
            count(Statistic::Gamma(1), &set, 4),
            Err(CountError::GammaNotCountable)
        );
    }

    #[test]
    fn statistic_labels() {
        assert_eq!(Statistic::Unrestricted.to_string(), "p");
        assert_eq!(Statistic::Bounded(2).to_string(), "p_2");
        assert_eq!(Statistic::Signed.to_string(), "pbar");
        assert_eq!(Statistic::SignedBounded(1).to_string(), "pbar_1");
        assert_eq!(Statistic::EvenParts(Cap::Unbounded).to_string(), "even");
        assert_eq!(Statistic::OddParts(Cap::AtMost(3)).to_string(), "odd_3");
        assert_eq!(Statistic::Gamma(2).to_string(), "gamma_2");
    }
}
