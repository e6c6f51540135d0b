//! `partitions`: count partition statistics, enumerate solution matrices,
//! and verify the identities connecting them.
//!
//! Exit codes: 0 success (including exploration runs and all-equal
//! verifications), 1 a verification or agreement check found an inequality,
//! 2 usage error, 3 internal invariant breach.

use std::fs;
use std::path::PathBuf;
use std::process;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use partitions_core::{
    brute_force_capped, build_gf, count, enumerate_solutions, gamma_series, gamma_table, verify,
    Cap, CountError, CountTable, EvalMode, GfStatistic, IdentityError, IdentityId, OracleError,
    PartSet, PartSetError, SeriesZ, SolutionError, Statistic, VerifyOptions,
    DEFAULT_ENUMERATION_CAP, DEFAULT_ORACLE_CAP,
};

#[derive(Parser)]
#[command(
    name = "partitions",
    version,
    about = "Exact partition counting over arbitrary part sets, with verification of the identities built on base-(alpha+1) solution matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for every subcommand.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write output to a file instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Table of one partition statistic over a part set
    Count {
        /// Part set: naturals | primes | squares | odds | list:c1,c2,... | file:path
        #[arg(long)]
        set: String,
        #[arg(long, value_enum)]
        stat: StatArg,
        /// Multiplicity cap; required for p_alpha and pbar_alpha, optional
        /// for even/odd (unbounded when omitted)
        #[arg(long)]
        alpha: Option<u32>,
        #[arg(long)]
        max_n: usize,
    },
    /// All solutions of n = sum base^i N_i, one row per line
    Solutions {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        base: usize,
        /// Refuse enumerations beyond this n (row counts grow fast)
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Table of the inverse-identity kernel Gamma_alpha
    Gamma {
        #[arg(long)]
        set: String,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        max_n: usize,
    },
    /// Check one identity for n = 0..=max-n; exits 1 on any inequality
    /// (exploration runs always exit 0)
    Verify {
        #[arg(long, value_enum)]
        identity: IdentityArg,
        #[arg(long)]
        set: String,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Both)]
        mode: ModeArg,
        /// Run odd-alpha signed-general as an exploration (expected to fail)
        #[arg(long)]
        allow_odd_alpha: bool,
        /// Largest n expanded by the enumerative evaluator
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        enumeration_cap: usize,
    },
    /// Telescoping-product and kernel-convolution equalities at one order
    SeriesCheck {
        #[arg(long)]
        set: String,
        #[arg(long)]
        alpha: u32,
        #[arg(long, default_value_t = 128)]
        order: usize,
    },
    /// Brute force vs DP vs series for every statistic over the builtin sets
    OracleCheck {
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    P,
    #[value(name = "p_alpha")]
    PAlpha,
    Pbar,
    #[value(name = "pbar_alpha")]
    PbarAlpha,
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    Forward,
    Inverse,
    SignedBinary,
    SignedGeneral,
}

impl IdentityArg {
    fn to_id(self) -> IdentityId {
        match self {
            IdentityArg::Forward => IdentityId::ForwardGeneral,
            IdentityArg::Inverse => IdentityId::Inverse,
            IdentityArg::SignedBinary => IdentityId::SignedBinary,
            IdentityArg::SignedGeneral => IdentityId::SignedGeneral,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Both,
    Enumerative,
    Convolution,
}

impl ModeArg {
    fn to_mode(self) -> EvalMode {
        match self {
            ModeArg::Both => EvalMode::Both,
            ModeArg::Enumerative => EvalMode::Enumerative,
            ModeArg::Convolution => EvalMode::Convolution,
        }
    }
}

enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(message) | CliError::Internal(message) => message,
        }
    }
}

impl From<PartSetError> for CliError {
    fn from(err: PartSetError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<CountError> for CliError {
    fn from(err: CountError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<SolutionError> for CliError {
    fn from(err: SolutionError) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(err: OracleError) -> Self {
        match err {
            OracleError::Unsupported(_) => CliError::Internal(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<IdentityError> for CliError {
    fn from(err: IdentityError) -> Self {
        match err {
            IdentityError::ZeroAlpha
            | IdentityError::AlphaMustBeOne { .. }
            | IdentityError::OddAlphaNeedsOptIn(_)
            | IdentityError::EnumerationCapExceeded { .. }
            | IdentityError::NotSigned(_)
            | IdentityError::Count(_) => CliError::Usage(err.to_string()),
            IdentityError::TableTooShort { .. }
            | IdentityError::WrongStatistic { .. }
            | IdentityError::EvaluatorDisagreement { .. } => CliError::Internal(err.to_string()),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message());
            err.exit_code()
        }
    };
    process::exit(code);
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let (content, code) = match cli.command {
        Command::Count {
            ref set,
            stat,
            alpha,
            max_n,
        } => {
            let set = PartSet::parse(set)?;
            let statistic = statistic_from(stat, alpha)?;
            let table = count(statistic, &set, max_n)?;
            (render_table("count", &table, cli.format), 0)
        }
        Command::Solutions { n, base, cap } => {
            if n > cap {
                return Err(CliError::Usage(format!(
                    "n = {n} exceeds the enumeration cap {cap}; pass --cap to raise it"
                )));
            }
            let matrix = enumerate_solutions(n, base)?;
            (render_solutions(&matrix, cli.format), 0)
        }
        Command::Gamma {
            ref set,
            alpha,
            max_n,
        } => {
            let set = PartSet::parse(set)?;
            let signed = count(Statistic::Signed, &set, max_n)?;
            let table = gamma_table(alpha, &signed, max_n)?;
            (render_table("gamma", &table, cli.format), 0)
        }
        Command::Verify {
            identity,
            ref set,
            alpha,
            max_n,
            mode,
            allow_odd_alpha,
            enumeration_cap,
        } => {
            let set = PartSet::parse(set)?;
            let options = VerifyOptions {
                mode: mode.to_mode(),
                enumeration_cap,
                allow_odd_alpha,
            };
            let report = verify(identity.to_id(), &set, alpha, max_n, &options)?;
            let code = if report.all_equal || report.exploration {
                0
            } else {
                1
            };
            (render_report(&report, cli.format), code)
        }
        Command::SeriesCheck {
            ref set,
            alpha,
            order,
        } => {
            let set = PartSet::parse(set)?;
            if alpha == 0 {
                return Err(CliError::Usage(
                    "multiplicity cap alpha = 0 admits only the empty partition; use alpha >= 1"
                        .to_owned(),
                ));
            }
            let checks = series_checks(&set, alpha, order);
            let all_pass = checks.iter().all(|check| check.pass);
            (
                render_series_checks(&set, alpha, order, &checks, cli.format),
                i32::from(!all_pass),
            )
        }
        Command::OracleCheck { cap } => {
            let checks = oracle_checks(cap)?;
            let all_agree = checks.iter().all(|check| check.detail.is_none());
            (
                render_oracle_checks(cap, &checks, cli.format),
                i32::from(!all_agree),
            )
        }
    };

    match cli.output {
        Some(path) => fs::write(&path, content)
            .map_err(|err| CliError::Usage(format!("cannot write `{}`: {err}", path.display())))?,
        None => print!("{content}"),
    }
    Ok(code)
}

fn statistic_from(stat: StatArg, alpha: Option<u32>) -> Result<Statistic, CliError> {
    let required = |stat: &str| CliError::Usage(format!("--stat {stat} requires --alpha"));
    let rejected = |stat: &str| CliError::Usage(format!("--stat {stat} takes no --alpha"));
    match (stat, alpha) {
        (StatArg::P, None) => Ok(Statistic::Unrestricted),
        (StatArg::P, Some(_)) => Err(rejected("p")),
        (StatArg::PAlpha, Some(alpha)) => Ok(Statistic::Bounded(alpha)),
        (StatArg::PAlpha, None) => Err(required("p_alpha")),
        (StatArg::Pbar, None) => Ok(Statistic::Signed),
        (StatArg::Pbar, Some(_)) => Err(rejected("pbar")),
        (StatArg::PbarAlpha, Some(alpha)) => Ok(Statistic::SignedBounded(alpha)),
        (StatArg::PbarAlpha, None) => Err(required("pbar_alpha")),
        (StatArg::Even, Some(alpha)) => Ok(Statistic::EvenParts(Cap::AtMost(alpha))),
        (StatArg::Even, None) => Ok(Statistic::EvenParts(Cap::Unbounded)),
        (StatArg::Odd, Some(alpha)) => Ok(Statistic::OddParts(Cap::AtMost(alpha))),
        (StatArg::Odd, None) => Ok(Statistic::OddParts(Cap::Unbounded)),
    }
}

fn render_table(command: &str, table: &CountTable, format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = format!(
                "# {command} statistic={} set={} max_n={}\n",
                table.statistic(),
                table.set_label(),
                table.max_n()
            );
            for (n, value) in table.values().iter().enumerate() {
                out.push_str(&format!("{n} {value}\n"));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, value) in table.values().iter().enumerate() {
                out.push_str(&format!("{n},{value}\n"));
            }
            out
        }
        Format::Json => {
            let values: Vec<String> = table.values().iter().map(|v| v.to_string()).collect();
            let value = json!({
                "command": command,
                "statistic": table.statistic().to_string(),
                "set": table.set_label(),
                "max_n": table.max_n(),
                "values": values,
            });
            format!("{value}\n")
        }
    }
}

fn render_solutions(matrix: &partitions_core::SolutionMatrix, format: Format) -> String {
    let row_line = |row: &[usize]| {
        row.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    match format {
        Format::Plain => {
            let mut out = format!(
                "# solutions n={} base={} rows={}\n",
                matrix.n(),
                matrix.base(),
                matrix.row_count()
            );
            for row in matrix.rows() {
                out.push_str(&row_line(row));
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::new();
            for row in matrix.rows() {
                out.push_str(&row_line(row));
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let value = json!({
                "n": matrix.n(),
                "base": matrix.base(),
                "rows": matrix.rows(),
            });
            format!("{value}\n")
        }
    }
}

fn render_report(report: &partitions_core::VerificationReport, format: Format) -> String {
    match format {
        Format::Plain => {
            let mut out = format!(
                "# verify identity={} set={} alpha={} max_n={} mode={}\n",
                report.identity, report.set_label, report.alpha, report.max_n, report.mode
            );
            if report.exploration {
                out.push_str("# exploration run (odd alpha): inequalities are expected\n");
            }
            out.push_str("n lhs rhs equal\n");
            for record in &report.records {
                out.push_str(&format!(
                    "{} {} {} {}\n",
                    record.n,
                    record.lhs,
                    record.rhs(),
                    record.equal
                ));
            }
            out.push_str(&format!("all_equal {}\n", report.all_equal));
            out
        }
        Format::Csv => {
            let mut out = String::from("n,lhs,rhs,equal\n");
            for record in &report.records {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    record.n,
                    record.lhs,
                    record.rhs(),
                    record.equal
                ));
            }
            out
        }
        Format::Json => format!("{}\n", report.to_json()),
    }
}

struct SeriesCheck {
    name: &'static str,
    pass: bool,
}

fn series_checks(set: &PartSet, alpha: u32, order: usize) -> Vec<SeriesCheck> {
    let base = alpha as usize + 1;
    let unrestricted = build_gf(GfStatistic::Unrestricted, set, order);
    let signed = build_gf(GfStatistic::Signed, set, order);
    let mut checks = vec![
        SeriesCheck {
            name: "forward-telescoping",
            pass: partitions_core::product_over_scales(
                GfStatistic::Bounded(alpha),
                set,
                base,
                order,
            ) == unrestricted,
        },
        SeriesCheck {
            name: "signed-binary-telescoping",
            pass: partitions_core::product_over_scales(GfStatistic::Signed, set, 2, order)
                == build_gf(GfStatistic::SignedBounded(1), set, order),
        },
    ];
    if alpha.is_multiple_of(2) {
        checks.push(SeriesCheck {
            name: "signed-general-telescoping",
            pass: partitions_core::product_over_scales(
                GfStatistic::SignedBounded(alpha),
                set,
                base,
                order,
            ) == signed,
        });
    }
    checks.push(SeriesCheck {
        name: "gamma-convolution",
        pass: unrestricted
            .mul(&gamma_series(alpha, set, order))
            .expect("same order")
            == build_gf(GfStatistic::Bounded(alpha), set, order),
    });
    checks
}

fn render_series_checks(
    set: &PartSet,
    alpha: u32,
    order: usize,
    checks: &[SeriesCheck],
    format: Format,
) -> String {
    let all_pass = checks.iter().all(|check| check.pass);
    match format {
        Format::Plain => {
            let mut out = format!("# series-check set={set} alpha={alpha} order={order}\n");
            for check in checks {
                out.push_str(&format!(
                    "{} {}\n",
                    check.name,
                    if check.pass { "pass" } else { "FAIL" }
                ));
            }
            out.push_str(&format!("all_equal {all_pass}\n"));
            out
        }
        Format::Csv => {
            let mut out = String::from("check,pass\n");
            for check in checks {
                out.push_str(&format!("{},{}\n", check.name, check.pass));
            }
            out
        }
        Format::Json => {
            let entries: Vec<Value> = checks
                .iter()
                .map(|check| json!({"name": check.name, "pass": check.pass}))
                .collect();
            let value = json!({
                "command": "series-check",
                "set": set.label(),
                "alpha": alpha,
                "order": order,
                "all_equal": all_pass,
                "checks": entries,
            });
            format!("{value}\n")
        }
    }
}

struct OracleCheck {
    set: String,
    statistic: Statistic,
    /// None when all three routes agree; otherwise a human-readable account
    /// of the first mismatch.
    detail: Option<String>,
}

/// The full agreement suite: for every builtin set and statistic, brute
/// force, the DP table, and the series coefficients must coincide for all
/// n <= cap. Parity statistics have no direct product form; their series
/// values are the half-sum/difference of the unsigned and signed ones.
fn oracle_checks(cap: usize) -> Result<Vec<OracleCheck>, CliError> {
    let mut checks = Vec::new();
    for set in PartSet::builtins() {
        let mut suite: Vec<Statistic> = vec![Statistic::Unrestricted, Statistic::Signed];
        for alpha in 1..=4 {
            suite.push(Statistic::Bounded(alpha));
            suite.push(Statistic::SignedBounded(alpha));
        }
        for cap_arg in [
            Cap::AtMost(1),
            Cap::AtMost(2),
            Cap::AtMost(3),
            Cap::AtMost(4),
            Cap::Unbounded,
        ] {
            suite.push(Statistic::EvenParts(cap_arg));
            suite.push(Statistic::OddParts(cap_arg));
        }
        for statistic in suite {
            let table = count(statistic, &set, cap)?;
            let series = series_values(statistic, &set, cap);
            let mut detail = None;
            for (n, series_value) in series.iter().enumerate() {
                let reference = brute_force_capped(statistic, &set, n, cap)?;
                let table_value = table.value(n);
                if table_value != &reference || series_value != &reference {
                    detail = Some(format!(
                        "n={n} oracle={reference} table={table_value} series={series_value}"
                    ));
                    break;
                }
            }
            checks.push(OracleCheck {
                set: set.label(),
                statistic,
                detail,
            });
        }
    }
    Ok(checks)
}

fn series_values(statistic: Statistic, set: &PartSet, order: usize) -> Vec<num_bigint::BigInt> {
    let direct = |gf: GfStatistic| build_gf(gf, set, order).coeffs().to_vec();
    let halved = |cap: Cap, keep_even: bool| {
        let (unsigned, signed): (SeriesZ, SeriesZ) = match cap {
            Cap::Unbounded => (
                build_gf(GfStatistic::Unrestricted, set, order),
                build_gf(GfStatistic::Signed, set, order),
            ),
            Cap::AtMost(alpha) => (
                build_gf(GfStatistic::Bounded(alpha), set, order),
                build_gf(GfStatistic::SignedBounded(alpha), set, order),
            ),
        };
        (0..=order)
            .map(|n| {
                if keep_even {
                    (unsigned.coeff(n) + signed.coeff(n)) / 2
                } else {
                    (unsigned.coeff(n) - signed.coeff(n)) / 2
                }
            })
            .collect()
    };
    match statistic {
        Statistic::Unrestricted => direct(GfStatistic::Unrestricted),
        Statistic::Bounded(alpha) => direct(GfStatistic::Bounded(alpha)),
        Statistic::Signed => direct(GfStatistic::Signed),
        Statistic::SignedBounded(alpha) => direct(GfStatistic::SignedBounded(alpha)),
        Statistic::EvenParts(cap) => halved(cap, true),
        Statistic::OddParts(cap) => halved(cap, false),
        Statistic::Gamma(_) => unreachable!("gamma is not part of the oracle suite"),
    }
}

fn render_oracle_checks(cap: usize, checks: &[OracleCheck], format: Format) -> String {
    let all_agree = checks.iter().all(|check| check.detail.is_none());
    match format {
        Format::Plain => {
            let mut out = format!("# oracle-check cap={cap}\n");
            for check in checks {
                match &check.detail {
                    None => out.push_str(&format!("ok {} {}\n", check.set, check.statistic)),
                    Some(detail) => out.push_str(&format!(
                        "MISMATCH {} {} {detail}\n",
                        check.set, check.statistic
                    )),
                }
            }
            out.push_str(&format!("all_agree {all_agree}\n"));
            out
        }
        Format::Csv => {
            let mut out = String::from("set,statistic,agree\n");
            for check in checks {
                out.push_str(&format!(
                    "{},{},{}\n",
                    check.set,
                    check.statistic,
                    check.detail.is_none()
                ));
            }
            out
        }
        Format::Json => {
            let entries: Vec<Value> = checks
                .iter()
                .map(|check| {
                    let mut entry = json!({
                        "set": check.set,
                        "statistic": check.statistic.to_string(),
                        "agree": check.detail.is_none(),
                    });
                    if let Some(detail) = &check.detail {
                        entry["detail"] = Value::String(detail.clone());
                    }
                    entry
                })
                .collect();
            let value = json!({
                "command": "oracle-check",
                "cap": cap,
                "all_agree": all_agree,
                "checks": entries,
            });
            format!("{value}\n")
        }
    }
}
