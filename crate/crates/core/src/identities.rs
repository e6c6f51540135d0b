//! Both sides of the four identities relating the partition statistics, each
//! right-hand side evaluated by two independent routes, plus the machinery
//! that sweeps a range of n and reports every comparison.
//!
//! With A the part set, b = alpha + 1, and (N_0, N_1, ...) ranging over the
//! rows of the solution matrices from [`crate::solutions`]:
//!
//! - forward:        p(n)          = sum_rows prod_j p_alpha(N_j)    (rows of n = sum b^i N_i)
//! - inverse:        p_alpha(n)    = sum_{i=0}^{n} p(n-i) Gamma_alpha(i)
//! - signed binary:  pbar_1(n)     = sum_rows prod_j pbar(N_j)       (base 2)
//! - signed general: pbar(n)       = sum_rows prod_j pbar_alpha(N_j) (even alpha only)
//!
//! Gamma_alpha(n) is zero unless (alpha+1) | n, in which case it is the
//! analogous sum of products of pbar over n = (alpha+1) sum 2^i N_i; see
//! [`gamma_table`]. Equivalently it is the coefficient series of
//! `prod_{i>=0} gf(pbar)(q^(2^i (alpha+1)))`, which [`gamma_series`]
//! computes; the two characterizations are cross-checked in tests.
//!
//! The two right-hand-side routes are the *enumerative* evaluator (explicit
//! solution matrices, faithful to the definitions but exponential, capped at
//! [`DEFAULT_ENUMERATION_CAP`]) and the *convolution* evaluator (truncated
//! series products, scalable). [`verify`] can run either or both; whenever
//! both run they must agree exactly, and a disagreement is reported as an
//! internal error rather than a mere inequality.
//!
//! The signed general identity genuinely requires even alpha. Odd alpha can
//! still be evaluated behind [`VerifyOptions::allow_odd_alpha`] to watch it
//! fail; such runs are marked as explorations and their inequalities are
//! expected, not defects.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};
use thiserror::Error;

use crate::counting::{self, CountTable, Statistic};
use crate::partset::PartSet;
use crate::series::{self, GfStatistic, SeriesZ};
use crate::solutions::{self, SolutionMatrix};

/// Largest n the enumerative evaluator will expand by default; row counts
/// grow superpolynomially, so beyond this the convolution route takes over.
pub const DEFAULT_ENUMERATION_CAP: usize = 60;

#[derive(Debug, Error, PartialEq)]
pub enum IdentityError {
    #[error("count table stops at n = {have} but n = {needed} is required")]
    TableTooShort { needed: usize, have: usize },
    #[error("wrong table: expected a {expected} table, got {got}")]
    WrongStatistic { expected: String, got: String },
    #[error("multiplicity cap alpha = 0 admits only the empty partition; use alpha >= 1")]
    ZeroAlpha,
    #[error("identity {identity} is the alpha = 1 case; got alpha = {alpha}")]
    AlphaMustBeOne { identity: IdentityId, alpha: u32 },
    #[error("the signed general identity holds for even alpha; odd alpha = {0} runs only as an exploration (allow_odd_alpha)")]
    OddAlphaNeedsOptIn(u32),
    #[error("identity {0} has no signed right-hand side")]
    NotSigned(IdentityId),
    #[error("enumerative evaluation requested up to n = {requested}, beyond the cap {cap}; use the convolution evaluator there")]
    EnumerationCapExceeded { requested: usize, cap: usize },
    #[error(
        "evaluator disagreement at n = {n}: enumerative {enumerative} != convolution {convolution}"
    )]
    EvaluatorDisagreement {
        n: usize,
        enumerative: BigInt,
        convolution: BigInt,
    },
    #[error(transparent)]
    Count(#[from] counting::CountError),
}

/// The four identities; the binary forms are the alpha = 1 specializations
/// and are verified as such.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    ForwardBinary,
    ForwardGeneral,
    Inverse,
    SignedBinary,
    SignedGeneral,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [
        IdentityId::ForwardBinary,
        IdentityId::ForwardGeneral,
        IdentityId::Inverse,
        IdentityId::SignedBinary,
        IdentityId::SignedGeneral,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::ForwardBinary => "forward-binary",
            IdentityId::ForwardGeneral => "forward-general",
            IdentityId::Inverse => "inverse",
            IdentityId::SignedBinary => "signed-binary",
            IdentityId::SignedGeneral => "signed-general",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which right-hand-side evaluators to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMode {
    Enumerative,
    Convolution,
    Both,
}

impl EvalMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EvalMode::Enumerative => "enumerative",
            EvalMode::Convolution => "convolution",
            EvalMode::Both => "both",
        }
    }
}

impl fmt::Display for EvalMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub mode: EvalMode,
    /// The enumerative evaluator stops at this n; in `Both` mode larger n
    /// simply omit the enumerative value instead of failing.
    pub enumeration_cap: usize,
    /// Opts in to odd-alpha signed-general runs (expected to fail).
    pub allow_odd_alpha: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            mode: EvalMode::Both,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
            allow_odd_alpha: false,
        }
    }
}

/// One compared value of n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationRecord {
    pub n: usize,
    pub lhs: BigInt,
    pub rhs_enumerative: Option<BigInt>,
    pub rhs_convolution: Option<BigInt>,
    pub equal: bool,
}

impl VerificationRecord {
    /// The right-hand side to display: the convolution value when computed,
    /// otherwise the enumerative one. At least one evaluator always runs.
    pub fn rhs(&self) -> &BigInt {
        self.rhs_convolution
            .as_ref()
            .or(self.rhs_enumerative.as_ref())
            .expect("at least one evaluator ran")
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub set_label: String,
    pub alpha: u32,
    pub max_n: usize,
    pub mode: EvalMode,
    /// True for odd-alpha signed-general runs, whose inequalities are
    /// expected rather than defects.
    pub exploration: bool,
    pub records: Vec<VerificationRecord>,
    pub all_equal: bool,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn first_inequality(&self) -> Option<&VerificationRecord> {
        self.records.iter().find(|record| !record.equal)
    }

    /// Big integers are serialized as decimal strings so consumers never
    /// round them through floating point.
    pub fn to_json(&self) -> Value {
        let records: Vec<Value> = self
            .records
            .iter()
            .map(|record| {
                json!({
                    "n": record.n,
                    "lhs": record.lhs.to_string(),
                    "rhs": record.rhs().to_string(),
                    "equal": record.equal,
                })
            })
            .collect();
        let mut report = json!({
            "identity": self.identity.as_str(),
            "set": self.set_label,
            "alpha": self.alpha,
            "N": self.max_n,
            "all_equal": self.all_equal,
            "records": records,
        });
        if self.exploration {
            report["exploration"] = Value::Bool(true);
        }
        report
    }
}

fn expect_statistic(table: &CountTable, expected: Statistic) -> Result<(), IdentityError> {
    if table.statistic() != expected {
        return Err(IdentityError::WrongStatistic {
            expected: expected.to_string(),
            got: table.statistic().to_string(),
        });
    }
    Ok(())
}

/// Sum over rows of the product of table values at the row's entries.
/// Trimmed trailing positions are value 0, whose factor is table[0] = 1, so
/// they need no special handling.
fn solution_sum(matrix: &SolutionMatrix, table: &CountTable) -> Result<BigInt, IdentityError> {
    let mut total = BigInt::zero();
    for row in matrix.rows() {
        let mut product = BigInt::one();
        for &entry in row {
            if entry > table.max_n() {
                return Err(IdentityError::TableTooShort {
                    needed: entry,
                    have: table.max_n(),
                });
            }
            let value = table.value(entry);
            if value.is_zero() {
                product.set_zero();
                break;
            }
            product *= value;
        }
        total += product;
    }
    Ok(total)
}

/// Right-hand side of the forward identity: sum over the solution rows of
/// n = sum (alpha+1)^i N_i of the products of p_alpha over the entries.
pub fn rhs_forward(
    n: usize,
    alpha: u32,
    bounded_counts: &CountTable,
) -> Result<BigInt, IdentityError> {
    if alpha == 0 {
        return Err(IdentityError::ZeroAlpha);
    }
    expect_statistic(bounded_counts, Statistic::Bounded(alpha))?;
    let matrix = solutions::enumerate_solutions(n, alpha as usize + 1).expect("base >= 2");
    solution_sum(&matrix, bounded_counts)
}

/// The inverse identity's kernel as a table: Gamma_alpha(0) = 1,
/// Gamma_alpha(n) = 0 unless (alpha+1) | n, else the sum over rows of
/// n = (alpha+1) sum 2^i N_i of the products of pbar over the entries.
pub fn gamma_table(
    alpha: u32,
    signed_counts: &CountTable,
    max_n: usize,
) -> Result<CountTable, IdentityError> {
    if alpha == 0 {
        return Err(IdentityError::ZeroAlpha);
    }
    expect_statistic(signed_counts, Statistic::Signed)?;
    let mut values = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let value = match solutions::gamma_support(n, alpha) {
            None => BigInt::zero(),
            Some(matrix) => solution_sum(&matrix, signed_counts)?,
        };
        values.push(value);
    }
    Ok(CountTable::new(
        Statistic::Gamma(alpha),
        signed_counts.set_label().to_owned(),
        values,
    ))
}

/// The same kernel as a series: `prod_{i : 2^i (alpha+1) <= order}
/// gf(pbar)(q^(2^i (alpha+1)))`. Coefficients match [`gamma_table`] values;
/// the two routes share no code and are compared in tests.
pub fn gamma_series(alpha: u32, set: &PartSet, order: usize) -> SeriesZ {
    assert!(alpha >= 1, "multiplicity cap must be >= 1");
    let signed = series::build_gf(GfStatistic::Signed, set, order);
    let mut acc = SeriesZ::one(order);
    let mut scale = alpha as usize + 1;
    while scale <= order {
        acc = acc
            .mul(&signed.substitute_power(scale))
            .expect("same order");
        match scale.checked_mul(2) {
            Some(next) => scale = next,
            None => break,
        }
    }
    acc
}

/// Right-hand side of the inverse identity:
/// sum_{i=0}^{n} p(n-i) Gamma_alpha(i).
pub fn rhs_inverse(
    n: usize,
    alpha: u32,
    unrestricted_counts: &CountTable,
    gamma: &CountTable,
) -> Result<BigInt, IdentityError> {
    if alpha == 0 {
        return Err(IdentityError::ZeroAlpha);
    }
    expect_statistic(unrestricted_counts, Statistic::Unrestricted)?;
    expect_statistic(gamma, Statistic::Gamma(alpha))?;
    for table in [unrestricted_counts, gamma] {
        if table.max_n() < n {
            return Err(IdentityError::TableTooShort {
                needed: n,
                have: table.max_n(),
            });
        }
    }
    let mut acc = BigInt::zero();
    for i in 0..=n {
        let g = gamma.value(i);
        if !g.is_zero() {
            acc += unrestricted_counts.value(n - i) * g;
        }
    }
    Ok(acc)
}

/// Right-hand side of the signed identities: sum of products of the signed
/// table over solution rows, base 2 for signed-binary and base alpha+1 for
/// signed-general. Odd alpha in the general form is rejected unless
/// explicitly allowed as an exploration.
pub fn rhs_signed(
    identity: IdentityId,
    n: usize,
    alpha: u32,
    table: &CountTable,
    allow_odd_alpha: bool,
) -> Result<BigInt, IdentityError> {
    let base = match identity {
        IdentityId::SignedBinary => {
            if alpha != 1 {
                return Err(IdentityError::AlphaMustBeOne { identity, alpha });
            }
            expect_statistic(table, Statistic::Signed)?;
            2
        }
        IdentityId::SignedGeneral => {
            if alpha == 0 {
                return Err(IdentityError::ZeroAlpha);
            }
            if alpha % 2 == 1 && !allow_odd_alpha {
                return Err(IdentityError::OddAlphaNeedsOptIn(alpha));
            }
            expect_statistic(table, Statistic::SignedBounded(alpha))?;
            alpha as usize + 1
        }
        other => return Err(IdentityError::NotSigned(other)),
    };
    let matrix = solutions::enumerate_solutions(n, base).expect("base >= 2");
    solution_sum(&matrix, table)
}

enum Enumerator {
    Forward {
        bounded: CountTable,
    },
    Inverse {
        unrestricted: CountTable,
        gamma: CountTable,
    },
    Signed {
        table: CountTable,
    },
}

impl Enumerator {
    fn evaluate(
        &self,
        identity: IdentityId,
        n: usize,
        alpha: u32,
        allow_odd_alpha: bool,
    ) -> Result<BigInt, IdentityError> {
        match self {
            Enumerator::Forward { bounded } => rhs_forward(n, alpha, bounded),
            Enumerator::Inverse {
                unrestricted,
                gamma,
            } => rhs_inverse(n, alpha, unrestricted, gamma),
            Enumerator::Signed { table } => rhs_signed(identity, n, alpha, table, allow_odd_alpha),
        }
    }
}

/// Sweeps n = 0..=max_n, computing the identity's left-hand side from the
/// counting module and its right-hand side per the requested mode, and
/// records every comparison. The report's `all_equal` is false exactly when
/// some record disagrees; evaluator-vs-evaluator disagreement is an error,
/// not a record.
pub fn verify(
    identity: IdentityId,
    set: &PartSet,
    alpha: u32,
    max_n: usize,
    options: &VerifyOptions,
) -> Result<VerificationReport, IdentityError> {
    let started = Instant::now();
    if alpha == 0 {
        return Err(IdentityError::ZeroAlpha);
    }
    if matches!(
        identity,
        IdentityId::ForwardBinary | IdentityId::SignedBinary
    ) && alpha != 1
    {
        return Err(IdentityError::AlphaMustBeOne { identity, alpha });
    }
    let exploration = identity == IdentityId::SignedGeneral && alpha % 2 == 1;
    if exploration && !options.allow_odd_alpha {
        return Err(IdentityError::OddAlphaNeedsOptIn(alpha));
    }
    if options.mode == EvalMode::Enumerative && max_n > options.enumeration_cap {
        return Err(IdentityError::EnumerationCapExceeded {
            requested: max_n,
            cap: options.enumeration_cap,
        });
    }
    let enum_limit = max_n.min(options.enumeration_cap);

    let lhs_statistic = match identity {
        IdentityId::ForwardBinary | IdentityId::ForwardGeneral => Statistic::Unrestricted,
        IdentityId::Inverse => Statistic::Bounded(alpha),
        IdentityId::SignedBinary => Statistic::SignedBounded(1),
        IdentityId::SignedGeneral => Statistic::Signed,
    };
    let lhs_table = counting::count(lhs_statistic, set, max_n)?;

    let enumerator = if options.mode != EvalMode::Convolution {
        Some(match identity {
            IdentityId::ForwardBinary | IdentityId::ForwardGeneral => Enumerator::Forward {
                bounded: counting::count(Statistic::Bounded(alpha), set, enum_limit)?,
            },
            IdentityId::Inverse => {
                let signed = counting::count(Statistic::Signed, set, enum_limit)?;
                Enumerator::Inverse {
                    unrestricted: counting::count(Statistic::Unrestricted, set, enum_limit)?,
                    gamma: gamma_table(alpha, &signed, enum_limit)?,
                }
            }
            IdentityId::SignedBinary => Enumerator::Signed {
                table: counting::count(Statistic::Signed, set, enum_limit)?,
            },
            IdentityId::SignedGeneral => Enumerator::Signed {
                table: counting::count(Statistic::SignedBounded(alpha), set, enum_limit)?,
            },
        })
    } else {
        None
    };

    let convolution = if options.mode != EvalMode::Enumerative {
        let base = alpha as usize + 1;
        Some(match identity {
            IdentityId::ForwardBinary | IdentityId::ForwardGeneral => {
                series::product_over_scales(GfStatistic::Bounded(alpha), set, base, max_n)
            }
            IdentityId::Inverse => {
                let p = series::build_gf(GfStatistic::Unrestricted, set, max_n);
                p.mul(&gamma_series(alpha, set, max_n)).expect("same order")
            }
            IdentityId::SignedBinary => {
                series::product_over_scales(GfStatistic::Signed, set, 2, max_n)
            }
            IdentityId::SignedGeneral => {
                series::product_over_scales(GfStatistic::SignedBounded(alpha), set, base, max_n)
            }
        })
    } else {
        None
    };

    let mut records = Vec::with_capacity(max_n + 1);
    let mut all_equal = true;
    for n in 0..=max_n {
        let lhs = lhs_table.value(n).clone();
        let rhs_enumerative = match &enumerator {
            Some(enumerator) if n <= enum_limit => {
                Some(enumerator.evaluate(identity, n, alpha, options.allow_odd_alpha)?)
            }
            _ => None,
        };
        let rhs_convolution = convolution.as_ref().map(|series| series.coeff(n).clone());
        if let (Some(e), Some(c)) = (&rhs_enumerative, &rhs_convolution) {
            if e != c {
                return Err(IdentityError::EvaluatorDisagreement {
                    n,
                    enumerative: e.clone(),
                    convolution: c.clone(),
                });
            }
        }
        let mut equal = true;
        if let Some(value) = &rhs_enumerative {
            equal &= *value == lhs;
        }
        if let Some(value) = &rhs_convolution {
            equal &= *value == lhs;
        }
        all_equal &= equal;
        records.push(VerificationRecord {
            n,
            lhs,
            rhs_enumerative,
            rhs_convolution,
            equal,
        });
    }

    Ok(VerificationReport {
        identity,
        set_label: set.label(),
        alpha,
        max_n,
        mode: options.mode,
        exploration,
        records,
        all_equal,
        elapsed: started.elapsed(),
    })
}
