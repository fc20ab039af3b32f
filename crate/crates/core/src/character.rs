//! Irreducible characters of S_n by the Murnaghan–Nakayama rule.
//!
//! Border strips are removed on the beta-set (abacus) of λ: with r = ℓ(λ) the beta numbers
//! are β_i = λ_i + r - i. Removing a border strip of size m whose top cell lies in row i
//! moves bead β_i to β_i - m, which must be a free position. The strip height equals the
//! number of beads strictly between the two positions.

use std::collections::HashMap;

use dashmap::DashMap;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::{partitions_of_with, Partition};

/// Exact character value χ^λ(μ).
pub type CharacterValue = BigInt;

type MemoKey = (Vec<usize>, Vec<usize>);

/// Memoizing Murnaghan–Nakayama evaluator. Safe to share between threads; concurrent
/// inserts of the same key write the same value.
#[derive(Debug, Default)]
pub struct CharacterEngine {
    memo: DashMap<MemoKey, BigInt>,
}

impl CharacterEngine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn character(&self, lambda: &Partition, mu: &Partition) -> Result<CharacterValue> {
        check_sizes(lambda, mu)?;
        Ok(self.eval(lambda.parts(), mu.parts()))
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn eval(&self, lambda: &[usize], mu: &[usize]) -> BigInt {
        let Some((&strip, rest)) = mu.split_first() else {
            return BigInt::one();
        };
        if rest.is_empty() {
            return single_strip(lambda, strip);
        }
        let key = (lambda.to_vec(), mu.to_vec());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let mut total = BigInt::zero();
        for_each_strip(lambda, strip, |smaller, odd_height| {
            let v = self.eval(&smaller, rest);
            if odd_height {
                total -= v;
            } else {
                total += v;
            }
        });
        self.memo.insert(key, total.clone());
        total
    }
}

/// χ^λ(μ) with a fresh memo table.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<CharacterValue> {
    CharacterEngine::new().character(lambda, mu)
}

/// χ^λ(μ) by plain recursion, with no memoization at all.
pub fn character_uncached(lambda: &Partition, mu: &Partition) -> Result<CharacterValue> {
    fn go(lambda: &[usize], mu: &[usize]) -> BigInt {
        let Some((&strip, rest)) = mu.split_first() else {
            return BigInt::one();
        };
        let mut total = BigInt::zero();
        for_each_strip(lambda, strip, |smaller, odd_height| {
            let v = go(&smaller, rest);
            if odd_height {
                total -= v;
            } else {
                total += v;
            }
        });
        total
    }
    check_sizes(lambda, mu)?;
    Ok(go(lambda.parts(), mu.parts()))
}

fn check_sizes(lambda: &Partition, mu: &Partition) -> Result<()> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            expected: lambda.size(),
            actual: mu.size(),
        });
    }
    Ok(())
}

/// When λ must be removed as one strip: ±1 if λ itself is a border strip of the given size.
fn single_strip(lambda: &[usize], strip: usize) -> BigInt {
    let mut total = BigInt::zero();
    for_each_strip(lambda, strip, |smaller, odd_height| {
        if smaller.is_empty() {
            total += if odd_height { -1 } else { 1 };
        }
    });
    total
}

/// Calls `visit(λ minus strip, height is odd)` for every removable border strip of the
/// given size, ordered by the row of the strip's top cell, top to bottom.
fn for_each_strip(lambda: &[usize], size: usize, mut visit: impl FnMut(Vec<usize>, bool)) {
    let r = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + r - 1 - i)
        .collect();
    for i in 0..r {
        let Some(target) = beta[i].checked_sub(size) else {
            continue;
        };
        // beta is strictly decreasing, so the beads between target and beta[i] sit below row i.
        let mut between = 0;
        let mut occupied = false;
        for &b in &beta[i + 1..] {
            if b > target {
                between += 1;
            } else {
                occupied = b == target;
                break;
            }
        }
        if occupied {
            continue;
        }
        let mut moved = beta.clone();
        moved.remove(i);
        let pos = i + between;
        moved.insert(pos, target);
        let smaller: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &b)| b - (r - 1 - j))
            .take_while(|&p| p > 0)
            .collect();
        visit(smaller, between % 2 == 1);
    }
}

/// Size of the conjugacy class C_μ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassSize {
    pub mu: Partition,
    pub size: BigUint,
}

/// z_μ = Π_i i^{m_i} m_i!, the order of the centralizer of a permutation of cycle type μ.
pub fn centralizer_order(mu: &Partition) -> BigUint {
    mu.multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (part, mult)| {
            acc * BigUint::from(part).pow(mult as u32) * factorial(mult)
        })
}

pub fn class_size(mu: &Partition) -> ClassSize {
    ClassSize {
        mu: mu.clone(),
        size: factorial(mu.size()) / centralizer_order(mu),
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// χ^λ(1^n) by the hook-length formula n!/Π hooks.
pub fn dimension(lambda: &Partition) -> CharacterValue {
    let hooks = lambda.cells().fold(BigUint::one(), |acc, (r, c)| {
        acc * BigUint::from(lambda.hook_length(r, c))
    });
    BigInt::from(factorial(lambda.size()) / hooks)
}

/// The full character table of S_n. Rows (λ) and columns (μ) follow the order of
/// [`crate::partition::partitions_of`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "TableRepr", into = "TableRepr")]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<BigInt>>,
    index: HashMap<Partition, usize>,
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    n: usize,
    lambdas: Vec<Partition>,
    mus: Vec<Partition>,
    #[serde(with = "crate::bigint_serde::matrix")]
    values: Vec<Vec<BigInt>>,
}

impl From<CharacterTable> for TableRepr {
    fn from(t: CharacterTable) -> Self {
        TableRepr {
            n: t.n,
            lambdas: t.partitions.clone(),
            mus: t.partitions,
            values: t.values,
        }
    }
}

impl TryFrom<TableRepr> for CharacterTable {
    type Error = Error;

    fn try_from(repr: TableRepr) -> Result<Self> {
        CharacterTable::from_parts(repr.n, repr.lambdas, repr.mus, repr.values)
    }
}

impl CharacterTable {
    /// Computes every cell, in parallel over cells, sharing one memo table.
    pub fn compute(n: usize, limits: &Limits, engine: &CharacterEngine) -> Result<Self> {
        limits.check_table_n(n)?;
        let partitions = partitions_of_with(n, limits)?;
        let values = partitions
            .par_iter()
            .map(|lambda| {
                partitions
                    .iter()
                    .map(|mu| engine.character(lambda, mu))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::assemble(n, partitions, values))
    }

    /// Rebuilds a table from stored parts, checking that the labels are exactly the
    /// partitions of n in canonical order.
    pub fn from_parts(
        n: usize,
        lambdas: Vec<Partition>,
        mus: Vec<Partition>,
        values: Vec<Vec<BigInt>>,
    ) -> Result<Self> {
        let canonical = partitions_of_with(n, &Limits::default())?;
        if lambdas != canonical || mus != canonical {
            return Err(Error::Cache(format!(
                "table for n={n} is not labelled by the partitions of {n} in canonical order"
            )));
        }
        let width = canonical.len();
        if values.len() != width || values.iter().any(|row| row.len() != width) {
            return Err(Error::Cache(format!(
                "table for n={n} is not {width}x{width}"
            )));
        }
        Ok(Self::assemble(n, canonical, values))
    }

    fn assemble(n: usize, partitions: Vec<Partition>, values: Vec<Vec<BigInt>>) -> Self {
        let index = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        CharacterTable {
            n,
            partitions,
            values,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels, in canonical order.
    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.values
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<&BigInt> {
        let i = *self.index.get(lambda)?;
        let j = *self.index.get(mu)?;
        Some(&self.values[i][j])
    }

    /// Like [`CharacterTable::get`] but with the size check as an error.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> Result<&BigInt> {
        for p in [lambda, mu] {
            if p.size() != self.n {
                return Err(Error::SizeMismatch {
                    expected: self.n,
                    actual: p.size(),
                });
            }
        }
        Ok(self
            .get(lambda, mu)
            .expect("every partition of n is a label"))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    /// CSV with a header row of μ labels and one row per λ.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lambda\\mu");
        for mu in &self.partitions {
            out.push(',');
            out.push_str(&csv_label(mu));
        }
        out.push('\n');
        for (lambda, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&csv_label(lambda));
            for v in row {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_latex(&self) -> String {
        let mut out = format!(
            "\\begin{{tabular}}{{l|{}}}\n",
            "r".repeat(self.partitions.len())
        );
        out.push_str("$\\lambda \\backslash \\mu$");
        for mu in &self.partitions {
            out.push_str(&format!(" & ${mu}$"));
        }
        out.push_str(" \\\\\n\\hline\n");
        for (lambda, row) in self.partitions.iter().zip(&self.values) {
            out.push_str(&format!("${lambda}$"));
            for v in row {
                out.push_str(&format!(" & {v}"));
            }
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{tabular}\n");
        out
    }

    /// Aligned text columns.
    pub fn to_plain(&self) -> String {
        let labels: Vec<String> = self.partitions.iter().map(|p| p.to_string()).collect();
        let cells: Vec<Vec<String>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect();
        let first = labels.iter().map(String::len).max().unwrap_or(0).max(3);
        let widths: Vec<usize> = (0..labels.len())
            .map(|j| {
                cells
                    .iter()
                    .map(|r| r[j].len())
                    .max()
                    .unwrap_or(0)
                    .max(labels[j].len())
            })
            .collect();
        let mut out = format!("{:first$}", "");
        for (label, w) in labels.iter().zip(&widths) {
            out.push_str(&format!("  {label:>w$}"));
        }
        out.push('\n');
        for (label, row) in labels.iter().zip(&cells) {
            out.push_str(&format!("{label:first$}"));
            for (cell, w) in row.iter().zip(&widths) {
                out.push_str(&format!("  {cell:>w$}"));
            }
            out.push('\n');
        }
        out
    }
}

fn csv_label(p: &Partition) -> String {
    if p.num_parts() > 1 {
        format!("\"{p}\"")
    } else {
        p.to_string()
    }
}

/// The character table of S_n under default limits.
pub fn character_table(n: usize) -> Result<CharacterTable> {
    CharacterTable::compute(n, &Limits::default(), &CharacterEngine::new())
}
