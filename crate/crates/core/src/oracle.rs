//! Brute-force reference enumeration of partitions.
//!
//! Everything here is deliberately naive: partitions are generated one by
//! one by descending-part recursion and the statistics are read off each
//! partition directly. No table, series, or matrix code is shared with the
//! fast paths, so agreement between this module and the others is evidence,
//! not tautology. The cost is exponential, hence the cap.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::counting::Statistic;
use crate::partset::PartSet;
use crate::Cap;

/// Largest n accepted by [`brute_force`]: p(40) = 37338 partitions is
/// milliseconds of work, and restricted sets have far fewer.
pub const DEFAULT_ORACLE_CAP: usize = 40;

#[derive(Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("n = {n} exceeds the oracle cap {cap}; brute force is exponential by design")]
    CapExceeded { n: usize, cap: usize },
    #[error("multiplicity cap alpha = 0 admits only the empty partition; use alpha >= 1")]
    ZeroAlpha,
    #[error("statistic {0} counts no partitions directly, so there is nothing to enumerate")]
    Unsupported(Statistic),
}

/// One partition, stored as (part, multiplicity) pairs with parts ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    multiplicities: Vec<(usize, u32)>,
}

impl Partition {
    /// Pairs must have positive parts in strictly increasing order and
    /// multiplicities >= 1.
    pub fn new(multiplicities: Vec<(usize, u32)>) -> Self {
        for window in multiplicities.windows(2) {
            assert!(
                window[0].0 < window[1].0,
                "parts must be strictly increasing"
            );
        }
        for &(part, mult) in &multiplicities {
            assert!(
                part >= 1 && mult >= 1,
                "parts and multiplicities are positive"
            );
        }
        Partition { multiplicities }
    }

    pub fn multiplicities(&self) -> &[(usize, u32)] {
        &self.multiplicities
    }

    /// The partitioned number: sum of part * multiplicity.
    pub fn total(&self) -> usize {
        self.multiplicities
            .iter()
            .map(|&(part, mult)| part * mult as usize)
            .sum()
    }

    /// Number of parts counted with multiplicity.
    pub fn num_parts(&self) -> usize {
        self.multiplicities
            .iter()
            .map(|&(_, mult)| mult as usize)
            .sum()
    }
}

/// All partitions of n into elements of the set, each part used at most
/// `cap` times. Output order is deterministic.
pub fn enumerate_partitions(set: &PartSet, n: usize, cap: Cap) -> Vec<Partition> {
    let parts = set.parts_up_to(n);
    let mut out = Vec::new();
    let mut stack: Vec<(usize, u32)> = Vec::new();
    descend(&parts, parts.len(), n, cap, &mut stack, &mut |stack| {
        let mut pairs = stack.to_vec();
        pairs.reverse();
        out.push(Partition::new(pairs));
    });
    out
}

fn descend(
    parts: &[usize],
    idx: usize,
    rem: usize,
    cap: Cap,
    stack: &mut Vec<(usize, u32)>,
    emit: &mut impl FnMut(&[(usize, u32)]),
) {
    if rem == 0 {
        emit(stack);
        return;
    }
    if idx == 0 {
        return;
    }
    let part = parts[idx - 1];
    descend(parts, idx - 1, rem, cap, stack, emit);
    for k in 1..=cap.limit(rem / part) {
        stack.push((part, k as u32));
        descend(parts, idx - 1, rem - k * part, cap, stack, emit);
        stack.pop();
    }
}

/// Evaluates a statistic by direct enumeration, with the default cap.
pub fn brute_force(statistic: Statistic, set: &PartSet, n: usize) -> Result<BigInt, OracleError> {
    brute_force_capped(statistic, set, n, DEFAULT_ORACLE_CAP)
}

/// Evaluates a statistic by direct enumeration under an explicit cap.
pub fn brute_force_capped(
    statistic: Statistic,
    set: &PartSet,
    n: usize,
    cap: usize,
) -> Result<BigInt, OracleError> {
    if n > cap {
        return Err(OracleError::CapExceeded { n, cap });
    }
    let (mult_cap, weight) = decode(statistic)?;
    let parts = set.parts_up_to(n);
    let mut acc = BigInt::zero();
    let mut stack: Vec<(usize, u32)> = Vec::new();
    descend(&parts, parts.len(), n, mult_cap, &mut stack, &mut |stack| {
        let num_parts: usize = stack.iter().map(|&(_, mult)| mult as usize).sum();
        acc += weight(num_parts);
    });
    Ok(acc)
}

type Weight = fn(usize) -> i8;

fn decode(statistic: Statistic) -> Result<(Cap, Weight), OracleError> {
    let plain: Weight = |_| 1;
    let alternating: Weight = |k| if k % 2 == 0 { 1 } else { -1 };
    let keep_even: Weight = |k| if k % 2 == 0 { 1 } else { 0 };
    let keep_odd: Weight = |k| if k % 2 == 1 { 1 } else { 0 };
    match statistic {
        Statistic::Unrestricted => Ok((Cap::Unbounded, plain)),
        Statistic::Signed => Ok((Cap::Unbounded, alternating)),
        Statistic::Bounded(alpha) => Ok((checked(alpha)?, plain)),
        Statistic::SignedBounded(alpha) => Ok((checked(alpha)?, alternating)),
        Statistic::EvenParts(cap) => Ok((usable(cap)?, keep_even)),
        Statistic::OddParts(cap) => Ok((usable(cap)?, keep_odd)),
        Statistic::Gamma(_) => Err(OracleError::Unsupported(statistic)),
    }
}

fn checked(alpha: u32) -> Result<Cap, OracleError> {
    if alpha == 0 {
        return Err(OracleError::ZeroAlpha);
    }
    Ok(Cap::AtMost(alpha))
}

fn usable(cap: Cap) -> Result<Cap, OracleError> {
    match cap {
        Cap::AtMost(0) => Err(OracleError::ZeroAlpha),
        _ => Ok(cap),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn prime_partitions_of_ten() {
        let found = enumerate_partitions(&PartSet::primes(), 10, Cap::Unbounded);
        let expected: HashSet<Partition> = [
            Partition::new(vec![(5, 2)]),
            Partition::new(vec![(2, 1), (3, 1), (5, 1)]),
            Partition::new(vec![(2, 2), (3, 2)]),
            Partition::new(vec![(3, 1), (7, 1)]),
            Partition::new(vec![(2, 5)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(found.len(), 5);
        assert_eq!(found.into_iter().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn square_partitions_of_ten() {
        let found = enumerate_partitions(&PartSet::squares(), 10, Cap::Unbounded);
        assert_eq!(found.len(), 4);
        for partition in &found {
            assert_eq!(partition.total(), 10);
        }
    }

    #[test]
    fn zero_has_one_empty_partition() {
        for set in PartSet::builtins() {
            let found = enumerate_partitions(&set, 0, Cap::AtMost(1));
            assert_eq!(found, vec![Partition::new(Vec::new())]);
            assert_eq!(found[0].num_parts(), 0);
        }
    }

    #[test]
    fn worked_statistics() {
        let signed_squares = brute_force(Statistic::Signed, &PartSet::squares(), 4).unwrap();
        assert_eq!(signed_squares, BigInt::zero());

        let distinct_odds = brute_force(Statistic::Bounded(1), &PartSet::odds(), 10).unwrap();
        assert_eq!(distinct_odds, BigInt::from(2));
    }

    #[test]
    fn cap_is_enforced() {
        let err = brute_force(Statistic::Unrestricted, &PartSet::naturals(), 41).unwrap_err();
        assert_eq!(err, OracleError::CapExceeded { n: 41, cap: 40 });
        assert!(brute_force_capped(Statistic::Unrestricted, &PartSet::naturals(), 41, 50).is_ok());
    }

    #[test]
    fn invalid_statistics_are_rejected() {
        let set = PartSet::naturals();
        assert_eq!(
            brute_force(Statistic::Bounded(0), &set, 3).unwrap_err(),
            OracleError::ZeroAlpha
        );
        assert_eq!(
            brute_force(Statistic::EvenParts(Cap::AtMost(0)), &set, 3).unwrap_err(),
            OracleError::ZeroAlpha
        );
        assert!(matches!(
            brute_force(Statistic::Gamma(1), &set, 3).unwrap_err(),
            OracleError::Unsupported(_)
        ));
    }

    #[test]
    fn agrees_with_the_dp_tables() {
        let statistics = [
            Statistic::Unrestricted,
            Statistic::Bounded(1),
            Statistic::Bounded(3),
            Statistic::Signed,
            Statistic::SignedBounded(2),
            Statistic::EvenParts(Cap::Unbounded),
            Statistic::OddParts(Cap::AtMost(2)),
        ];
        for set in PartSet::builtins() {
            for statistic in statistics {
                let table = crate::counting::count(statistic, &set, 18).unwrap();
                for n in 0..=18 {
                    assert_eq!(
                        &brute_force(statistic, &set, n).unwrap(),
                        table.value(n),
                        "set {set}, statistic {statistic}, n = {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn parity_counts_split_the_signed_count() {
        let set = PartSet::parse("list:1,2,3,5,8,13").unwrap();
        for n in 0..=20 {
            for cap in [Cap::Unbounded, Cap::AtMost(2)] {
                let even = brute_force(Statistic::EvenParts(cap), &set, n).unwrap();
                let odd = brute_force(Statistic::OddParts(cap), &set, n).unwrap();
                let signed = match cap {
                    Cap::Unbounded => brute_force(Statistic::Signed, &set, n).unwrap(),
                    Cap::AtMost(a) => brute_force(Statistic::SignedBounded(a), &set, n).unwrap(),
                };
                assert_eq!(even - odd, signed, "n = {n}");
            }
        }
    }

    #[test]
    fn enumeration_respects_caps_and_membership() {
        let set = PartSet::primes();
        for partition in enumerate_partitions(&set, 15, Cap::AtMost(2)) {
            assert_eq!(partition.total(), 15);
            for &(part, mult) in partition.multiplicities() {
                assert!(mult <= 2);
                assert!(set.parts_up_to(15).contains(&part));
            }
        }
    }
}
