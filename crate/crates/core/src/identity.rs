//! Machine checks of the hook character identity and its special cases.
//!
//! Every check produces one [`ReportRow`] per μ ⊢ n. A row passes when its two sides are
//! equal and, if an independent third value was computed, that value agrees too.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::CharacterStore;
use crate::character::CharacterTable;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{hook_partitions_with, HookParams, Partition};
use crate::tableau::{count_ssyt, count_super_ssyt};
use crate::tensor::{rhs_product, trace_super_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Σ_{λ∈H(k,l;n)} s_{k,l}(λ) χ^λ(μ) = Π_j (k + (−1)^(μ_j+1) l)
    MainIdentity,
    /// Σ_i χ^(n−i,1^i)(μ) is 0 or 2^(ℓ(μ)−1)
    HookSum,
    /// Σ_{λ∈H'(2,1;n)} (λ₁−λ₂+1) χ^λ(μ) = (Π_j (2 + (−1)^(μ_j+1)) − (2n+1)) / 4
    Corollary21,
    /// Σ_{λ∈H(k,0;n)} s_k(λ) χ^λ(μ) = k^ℓ(μ)
    Classical,
}

impl CheckKind {
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::MainIdentity => "main-identity",
            CheckKind::HookSum => "hook-sum",
            CheckKind::Corollary21 => "corollary-21",
            CheckKind::Classical => "classical",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleStatus {
    Checked,
    /// Requested, but the word space is above the ceiling.
    Skipped,
    #[default]
    NotRequested,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OracleMode {
    /// Attach the tensor trace whenever (k+l)^n is within the ceiling.
    #[default]
    Auto,
    Off,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub mu: Partition,
    #[serde(with = "crate::bigint_serde")]
    pub lhs: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub rhs: BigInt,
    #[serde(with = "crate::bigint_serde::option")]
    pub oracle: Option<BigInt>,
    pub oracle_status: OracleStatus,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ReportRow {
    fn new(
        mu: Partition,
        lhs: BigInt,
        rhs: BigInt,
        oracle: Option<BigInt>,
        status: OracleStatus,
    ) -> Self {
        let pass = lhs == rhs && oracle.as_ref().is_none_or(|o| *o == lhs);
        ReportRow {
            mu,
            lhs,
            rhs,
            oracle,
            oracle_status: status,
            pass,
            note: None,
        }
    }

    fn fail_with(mut self, note: String) -> Self {
        self.pass = false;
        self.note = Some(note);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: CheckKind,
    pub n: usize,
    pub k: usize,
    pub l: usize,
    pub rows: Vec<ReportRow>,
    pub all_pass: bool,
    /// Wall-clock time. Left out of the serialized form so that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerificationReport {
    fn new(
        check: CheckKind,
        n: usize,
        k: usize,
        l: usize,
        rows: Vec<ReportRow>,
        started: Instant,
    ) -> Self {
        let all_pass = rows.iter().all(|r| r.pass);
        VerificationReport {
            check,
            n,
            k,
            l,
            rows,
            all_pass,
            elapsed: started.elapsed(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub const CSV_HEADER: &'static str = "check,n,k,l,mu,lhs,rhs,oracle,oracle_status,pass";

    /// CSV rows without the header, see [`VerificationReport::CSV_HEADER`].
    pub fn to_csv_rows(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            let _ = writeln!(
                out,
                "{},{},{},{},\"{}\",{},{},{},{},{}",
                self.check.name(),
                self.n,
                self.k,
                self.l,
                row.mu,
                row.lhs,
                row.rhs,
                row.oracle
                    .as_ref()
                    .map(ToString::to_string)
                    .unwrap_or_default(),
                status_name(row.oracle_status),
                row.pass
            );
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!(
            "% {} n={} k={} l={}\n\\begin{{tabular}}{{lrrrc}}\n$\\mu$ & LHS & RHS & oracle & pass \\\\\n\\hline\n",
            self.check.name(),
            self.n,
            self.k,
            self.l
        );
        for row in &self.rows {
            let oracle = match (&row.oracle, row.oracle_status) {
                (Some(v), _) => v.to_string(),
                (None, OracleStatus::Skipped) => "skipped".into(),
                (None, _) => "--".into(),
            };
            let _ = writeln!(
                out,
                "${}$ & {} & {} & {} & {} \\\\",
                row.mu,
                row.lhs,
                row.rhs,
                oracle,
                if row.pass { "\\checkmark" } else { "FAIL" }
            );
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    pub fn to_plain(&self) -> String {
        let mut out = format!(
            "{} n={} k={} l={}: {} ({} rows, {:.1} ms)\n",
            self.check.name(),
            self.n,
            self.k,
            self.l,
            if self.all_pass { "PASS" } else { "FAIL" },
            self.rows.len(),
            self.elapsed.as_secs_f64() * 1e3
        );
        for row in &self.rows {
            let oracle = match (&row.oracle, row.oracle_status) {
                (Some(v), _) => format!(" oracle={v}"),
                (None, OracleStatus::Skipped) => " oracle=skipped".into(),
                (None, _) => String::new(),
            };
            let _ = writeln!(
                out,
                "  {} mu={} lhs={} rhs={}{}{}",
                if row.pass { "ok  " } else { "FAIL" },
                row.mu,
                row.lhs,
                row.rhs,
                oracle,
                row.note
                    .as_deref()
                    .map(|n| format!(" ({n})"))
                    .unwrap_or_default()
            );
        }
        out
    }
}

fn status_name(status: OracleStatus) -> &'static str {
    match status {
        OracleStatus::Checked => "checked",
        OracleStatus::Skipped => "skipped",
        OracleStatus::NotRequested => "not-requested",
    }
}

/// Runs the checks against a shared [`CharacterStore`].
#[derive(Debug, Default)]
pub struct Verifier {
    pub limits: Limits,
    pub oracle: OracleMode,
    store: CharacterStore,
}

impl Verifier {
    pub fn new(limits: Limits, oracle: OracleMode) -> Self {
        Self::with_store(limits, oracle, CharacterStore::new())
    }

    pub fn with_store(limits: Limits, oracle: OracleMode, store: CharacterStore) -> Self {
        Verifier {
            limits,
            oracle,
            store,
        }
    }

    pub fn store(&self) -> &CharacterStore {
        &self.store
    }

    pub fn table(&self, n: usize) -> Result<std::sync::Arc<CharacterTable>> {
        self.store.table(n, &self.limits)
    }

    /// Σ_λ weight(λ) χ^λ(μ).
    fn weighted_sum(
        table: &CharacterTable,
        weights: &[(Partition, BigInt)],
        mu: &Partition,
    ) -> Result<BigInt> {
        let mut total = BigInt::zero();
        for (lambda, w) in weights {
            if !w.is_zero() {
                total += w * table.value(lambda, mu)?;
            }
        }
        Ok(total)
    }

    /// (λ, s_{k,l}(λ)) for every λ ∈ H(k,l;n).
    fn super_counts(&self, n: usize, k: usize, l: usize) -> Result<Vec<(Partition, BigInt)>> {
        let hook = hook_partitions_with(HookParams::new(k, l), n, &self.limits)?;
        Ok(hook
            .into_par_iter()
            .map(|lambda| {
                let c = count_super_ssyt(&lambda, k, l);
                (lambda, BigInt::from(c))
            })
            .collect())
    }

    fn oracle_value(
        &self,
        mu: &Partition,
        k: usize,
        l: usize,
    ) -> Result<(Option<BigInt>, OracleStatus)> {
        match self.oracle {
            OracleMode::Off => Ok((None, OracleStatus::NotRequested)),
            OracleMode::Auto if self.limits.oracle_feasible(k + l, mu.size()) => Ok((
                Some(trace_super_with(mu, k, l, &self.limits)?),
                OracleStatus::Checked,
            )),
            OracleMode::Auto => Ok((None, OracleStatus::Skipped)),
        }
    }

    pub fn verify_main_identity(&self, n: usize, k: usize, l: usize) -> Result<VerificationReport> {
        let started = Instant::now();
        let table = self.table(n)?;
        let weights = self.super_counts(n, k, l)?;
        let rows = table
            .partitions()
            .par_iter()
            .map(|mu| {
                let lhs = Self::weighted_sum(&table, &weights, mu)?;
                let rhs = rhs_product(mu, k, l);
                let (oracle, status) = self.oracle_value(mu, k, l)?;
                Ok(ReportRow::new(mu.clone(), lhs, rhs, oracle, status))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::new(
            CheckKind::MainIdentity,
            n,
            k,
            l,
            rows,
            started,
        ))
    }

    /// The sum of the hook characters χ^(n−i,1^i), i < n. The third column is the (1,1)
    /// instance of the main identity, halved.
    pub fn verify_hook_sum(&self, n: usize) -> Result<VerificationReport> {
        if n == 0 {
            return Err(Error::InvalidArgument("the hook sum needs n >= 1".into()));
        }
        let started = Instant::now();
        let table = self.table(n)?;
        let hooks = (0..n)
            .map(|i| Ok((Partition::hook(n, i)?, BigInt::from(1))))
            .collect::<Result<Vec<_>>>()?;
        let weights = self.super_counts(n, 1, 1)?;
        let rows = table
            .partitions()
            .par_iter()
            .map(|mu| {
                let lhs = Self::weighted_sum(&table, &hooks, mu)?;
                let rhs = if mu.has_even_part() {
                    BigInt::zero()
                } else {
                    BigInt::from(2).pow(mu.num_parts() as u32 - 1)
                };
                let doubled = Self::weighted_sum(&table, &weights, mu)?;
                let (half, rem) = doubled.div_rem(&BigInt::from(2));
                let row = ReportRow::new(mu.clone(), lhs, rhs, Some(half), OracleStatus::Checked);
                Ok(if rem.is_zero() {
                    row
                } else {
                    row.fail_with(format!("(1,1) identity sum {doubled} is odd"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::new(
            CheckKind::HookSum,
            n,
            1,
            1,
            rows,
            started,
        ))
    }

    /// The (2,1) corollary. Both the closed-form right side and the third column (derived
    /// from enumerated s_{2,1} counts) are divided by 4 only after checking divisibility.
    pub fn verify_21_corollary(&self, n: usize) -> Result<VerificationReport> {
        if n < 2 {
            return Err(Error::InvalidArgument(
                "the (2,1) corollary needs n >= 2".into(),
            ));
        }
        let started = Instant::now();
        let table = self.table(n)?;
        let strict: Vec<(Partition, BigInt)> =
            hook_partitions_with(HookParams::new(2, 1), n, &self.limits)?
                .into_iter()
                .filter(|lambda| lambda.in_strict_hook(HookParams::new(2, 1)))
                .map(|lambda| {
                    let w = BigInt::from(lambda.part(1) - lambda.part(2) + 1);
                    (lambda, w)
                })
                .collect();
        let counts = self.super_counts(n, 2, 1)?;
        let row_term = BigInt::from(2 * n + 1);
        let four = BigInt::from(4);
        let rows = table
            .partitions()
            .par_iter()
            .map(|mu| {
                let lhs = Self::weighted_sum(&table, &strict, mu)?;
                let numerator = rhs_product(mu, 2, 1) - &row_term;
                let (rhs, rem) = numerator.div_rem(&four);
                let from_counts = Self::weighted_sum(&table, &counts, mu)? - &row_term;
                let (oracle, oracle_rem) = from_counts.div_rem(&four);
                let mut row =
                    ReportRow::new(mu.clone(), lhs, rhs, Some(oracle), OracleStatus::Checked);
                if !rem.is_zero() {
                    row = row.fail_with(format!(
                        "closed-form numerator {numerator} is not divisible by 4"
                    ));
                } else if !oracle_rem.is_zero() {
                    row = row.fail_with(format!(
                        "enumerated numerator {from_counts} is not divisible by 4"
                    ));
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::new(
            CheckKind::Corollary21,
            n,
            2,
            1,
            rows,
            started,
        ))
    }

    /// The l = 0 case, with s_k(λ) cross-checked against the hook-content formula.
    pub fn verify_classical(&self, n: usize, k: usize) -> Result<VerificationReport> {
        let started = Instant::now();
        let table = self.table(n)?;
        let weights = hook_partitions_with(HookParams::new(k, 0), n, &self.limits)?
            .into_par_iter()
            .map(|lambda| {
                let c = count_ssyt(&lambda, k)?;
                Ok((lambda, BigInt::from(c)))
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = table
            .partitions()
            .par_iter()
            .map(|mu| {
                let lhs = Self::weighted_sum(&table, &weights, mu)?;
                let rhs = BigInt::from(k).pow(mu.num_parts() as u32);
                let (oracle, status) = self.oracle_value(mu, k, 0)?;
                Ok(ReportRow::new(mu.clone(), lhs, rhs, oracle, status))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VerificationReport::new(
            CheckKind::Classical,
            n,
            k,
            0,
            rows,
            started,
        ))
    }
}

pub fn verify_main_identity(n: usize, k: usize, l: usize) -> Result<VerificationReport> {
    Verifier::default().verify_main_identity(n, k, l)
}

pub fn verify_hook_sum(n: usize) -> Result<VerificationReport> {
    Verifier::default().verify_hook_sum(n)
}

pub fn verify_21_corollary(n: usize) -> Result<VerificationReport> {
    Verifier::default().verify_21_corollary(n)
}

pub fn verify_classical(n: usize, k: usize) -> Result<VerificationReport> {
    Verifier::default().verify_classical(n, k)
}
