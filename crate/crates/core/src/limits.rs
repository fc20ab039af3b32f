//! Resource ceilings shared by every module.
//!
//! Each ceiling can be overridden from the environment, see [`Limits::from_env`].

use crate::error::{Error, Result};

pub const ENV_MAX_PARTITION_N: &str = "HOOKCHAR_MAX_PARTITION_N";
pub const ENV_MAX_TABLE_N: &str = "HOOKCHAR_MAX_TABLE_N";
pub const ENV_MAX_ORACLE_WORDS: &str = "HOOKCHAR_MAX_ORACLE_WORDS";
pub const ENV_MAX_LISTING: &str = "HOOKCHAR_MAX_LISTING";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest n for which partitions of n are generated.
    pub max_partition_n: usize,
    /// Largest n for which a full character table is built.
    pub max_table_n: usize,
    /// Largest size (k+l)^n of the word space scanned by the trace oracle.
    pub max_oracle_words: u128,
    /// Largest number of tableaux materialized by a listing.
    pub max_listing: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_partition_n: 30,
            max_table_n: 14,
            max_oracle_words: 3_000_000,
            max_listing: 1_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with any `HOOKCHAR_MAX_*` variable that parses as an integer applied on top.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Some(v) = read_env(ENV_MAX_PARTITION_N)? {
            limits.max_partition_n = v as usize;
        }
        if let Some(v) = read_env(ENV_MAX_TABLE_N)? {
            limits.max_table_n = v as usize;
        }
        if let Some(v) = read_env(ENV_MAX_ORACLE_WORDS)? {
            limits.max_oracle_words = v;
        }
        if let Some(v) = read_env(ENV_MAX_LISTING)? {
            limits.max_listing = v;
        }
        Ok(limits)
    }

    pub(crate) fn check_partition_n(&self, n: usize) -> Result<()> {
        check("partition size n", n as u128, self.max_partition_n as u128)
    }

    pub(crate) fn check_table_n(&self, n: usize) -> Result<()> {
        check(
            "character table size n",
            n as u128,
            self.max_table_n as u128,
        )
    }

    /// Returns (k+l)^n if it is within the oracle ceiling.
    pub(crate) fn check_oracle_words(&self, alphabet: usize, n: usize) -> Result<u128> {
        let words = word_count(alphabet, n);
        check("oracle word count (k+l)^n", words, self.max_oracle_words)?;
        Ok(words)
    }

    pub fn oracle_feasible(&self, alphabet: usize, n: usize) -> bool {
        word_count(alphabet, n) <= self.max_oracle_words
    }
}

/// (k+l)^n, saturating at `u128::MAX`.
pub fn word_count(alphabet: usize, n: usize) -> u128 {
    (alphabet as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX)
}

fn check(what: &'static str, value: u128, limit: u128) -> Result<()> {
    if value > limit {
        Err(Error::ResourceLimit { what, value, limit })
    } else {
        Ok(())
    }
}

fn read_env(name: &str) -> Result<Option<u128>> {
    match std::env::var(name) {
        Ok(raw) => raw
            .trim()
            .parse::<u128>()
            .map(Some)
            .map_err(|_| Error::Config(format!("{name}={raw:?} is not a non-negative integer"))),
        Err(_) => Ok(None),
    }
}
