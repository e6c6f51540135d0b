//! Truncated formal power series over Z with exact arbitrary-precision
//! coefficients.
//!
//! A [`SeriesZ`] of order N stores the coefficients of q^0..q^N; every
//! operation truncates at the common order. The infinite products behind the
//! partition generating functions collapse, at order N, to finite products
//! over parts a <= N and scales b^i <= N, so exact truncated arithmetic is
//! all that is ever needed:
//!
//! - `sum_n p(n) q^n        = prod_{a in A} 1/(1 - q^a)`
//! - `sum_n p_alpha(n) q^n  = prod_{a in A} (1 + q^a + ... + q^(alpha a))`
//! - `sum_n pbar(n) q^n     = prod_{a in A} 1/(1 + q^a)`
//! - `sum_n pbar_alpha q^n  = prod_{a in A} (1 - q^a + ... +- q^(alpha a))`
//!
//! [`build_gf`] assembles these products; [`product_over_scales`] forms the
//! telescoping products `prod_{i >= 0} S(q^(b^i))` that the identity
//! verifier compares against.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::partset::PartSet;
use crate::Cap;

/// Truncation order used by the verification sweeps when none is given.
pub const DEFAULT_ORDER: usize = 128;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("series orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error(
        "cannot invert a series with constant term {0}; an exact integer inverse needs +1 or -1"
    )]
    NonUnitConstant(BigInt),
    #[error("single-part factors require a part value >= 1")]
    ZeroPart,
    #[error("multiplicity cap 0 admits only the empty partition; use a cap >= 1")]
    ZeroCap,
}

/// Dense truncated power series with BigInt coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesZ {
    coeffs: Vec<BigInt>,
}

impl SeriesZ {
    /// The constant series 1 at the given order.
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); order + 1];
        coeffs[0] = BigInt::one();
        SeriesZ { coeffs }
    }

    /// The zero series at the given order.
    pub fn zero(order: usize) -> Self {
        SeriesZ {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    /// Wraps an explicit coefficient vector; its length fixes the order.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series stores at least the constant term"
        );
        SeriesZ { coeffs }
    }

    /// Convenience constructor for tests and small examples.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &BigInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &SeriesZ) -> Result<SeriesZ, SeriesError> {
        self.check_order(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(SeriesZ { coeffs })
    }

    /// Truncated Cauchy product: result[n] = sum_{i=0}^{n} a[i] b[n-i].
    pub fn mul(&self, rhs: &SeriesZ) -> Result<SeriesZ, SeriesError> {
        self.check_order(rhs)?;
        let order = self.order();
        // Partition factors are mostly zeros; iterating the sparser operand
        // on the outside skips those rows entirely.
        let (outer, inner) = if nonzero_count(&self.coeffs) <= nonzero_count(&rhs.coeffs) {
            (&self.coeffs, &rhs.coeffs)
        } else {
            (&rhs.coeffs, &self.coeffs)
        };
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (i, a) in outer.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in inner[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(SeriesZ { coeffs })
    }

    /// Multiplicative inverse up to the truncation order, via
    /// b[0] = a[0], b[n] = -a[0] * sum_{i=1}^{n} a[i] b[n-i]
    /// (a[0] is +-1, so it equals its own inverse).
    pub fn invert(&self) -> Result<SeriesZ, SeriesError> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && *c0 != BigInt::from(-1) {
            return Err(SeriesError::NonUnitConstant(c0.clone()));
        }
        let order = self.order();
        let mut inv = vec![BigInt::zero(); order + 1];
        inv[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for i in 1..=n {
                if !self.coeffs[i].is_zero() {
                    acc += &self.coeffs[i] * &inv[n - i];
                }
            }
            inv[n] = -c0 * acc;
        }
        Ok(SeriesZ { coeffs: inv })
    }

    /// Substitution q -> q^k as coefficient spreading: coefficient c at q^m
    /// moves to q^(k m); everything beyond the order falls away. k >= 1.
    pub fn substitute_power(&self, k: usize) -> SeriesZ {
        assert!(k >= 1, "substitution exponent must be >= 1");
        let order = self.order();
        let mut coeffs = vec![BigInt::zero(); order + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            match m.checked_mul(k) {
                Some(t) if t <= order => coeffs[t] = c.clone(),
                _ => break,
            }
        }
        SeriesZ { coeffs }
    }

    fn check_order(&self, rhs: &SeriesZ) -> Result<(), SeriesError> {
        if self.order() != rhs.order() {
            return Err(SeriesError::OrderMismatch(self.order(), rhs.order()));
        }
        Ok(())
    }
}

fn nonzero_count(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

/// Sign of the alternation in a single-part factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn to_bigint(self, k: u64) -> BigInt {
        match self {
            Sign::Plus => BigInt::one(),
            Sign::Minus => {
                if k.is_multiple_of(2) {
                    BigInt::one()
                } else {
                    BigInt::from(-1)
                }
            }
        }
    }
}

/// The factor contributed by one part value `a`:
/// `sum_{k=0}^{cap} sign^k q^(k a)`, with the unbounded cap yielding the
/// geometric series `invert(1 - sign * q^a)`.
pub fn factor(a: usize, cap: Cap, sign: Sign, order: usize) -> Result<SeriesZ, SeriesError> {
    if a == 0 {
        return Err(SeriesError::ZeroPart);
    }
    match cap {
        Cap::AtMost(0) => Err(SeriesError::ZeroCap),
        Cap::AtMost(alpha) => {
            let mut coeffs = vec![BigInt::zero(); order + 1];
            let mut k = 0u64;
            while k <= u64::from(alpha) {
                let exp = (k as usize).checked_mul(a).filter(|&e| e <= order);
                match exp {
                    Some(e) => coeffs[e] = sign.to_bigint(k),
                    None => break,
                }
                k += 1;
            }
            Ok(SeriesZ { coeffs })
        }
        Cap::Unbounded => {
            let mut base = vec![BigInt::zero(); order + 1];
            base[0] = BigInt::one();
            if a <= order {
                base[a] = match sign {
                    Sign::Plus => BigInt::from(-1),
                    Sign::Minus => BigInt::one(),
                };
            }
            SeriesZ { coeffs: base }.invert()
        }
    }
}

/// Which generating function to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GfStatistic {
    Unrestricted,
    Bounded(u32),
    Signed,
    SignedBounded(u32),
}

impl GfStatistic {
    fn cap_and_sign(self) -> (Cap, Sign) {
        match self {
            GfStatistic::Unrestricted => (Cap::Unbounded, Sign::Plus),
            GfStatistic::Bounded(alpha) => {
                assert!(alpha >= 1, "multiplicity cap must be >= 1");
                (Cap::AtMost(alpha), Sign::Plus)
            }
            GfStatistic::Signed => (Cap::Unbounded, Sign::Minus),
            GfStatistic::SignedBounded(alpha) => {
                assert!(alpha >= 1, "multiplicity cap must be >= 1");
                (Cap::AtMost(alpha), Sign::Minus)
            }
        }
    }
}

/// Product over all parts a <= order of the single-part factor for the
/// statistic. Coefficients equal the corresponding count-table values; the
/// two are computed by disjoint code and cross-checked in tests.
pub fn build_gf(statistic: GfStatistic, set: &PartSet, order: usize) -> SeriesZ {
    let (cap, sign) = statistic.cap_and_sign();
    let mut acc = SeriesZ::one(order);
    for a in set.parts_up_to(order) {
        let f = factor(a, cap, sign, order).expect("parts are >= 1 and cap was validated");
        acc = acc.mul(&f).expect("factors share the accumulator's order");
    }
    acc
}

/// `prod_{i : b^i <= order} S(q^(b^i))` where S = build_gf(statistic, set).
/// Scales with b^i > order contribute only their constant term 1, so the
/// truncated product is exact.
pub fn product_over_scales(
    statistic: GfStatistic,
    set: &PartSet,
    base: usize,
    order: usize,
) -> SeriesZ {
    assert!(base >= 2, "scale base must be >= 2");
    let s = build_gf(statistic, set, order);
    let mut acc = SeriesZ::one(order);
    let mut scale = 1usize;
    loop {
        acc = acc.mul(&s.substitute_power(scale)).expect("same order");
        match scale.checked_mul(base) {
            Some(next) if next <= order => scale = next,
            _ => break,
        }
    }
    acc
}
