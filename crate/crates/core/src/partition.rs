//! Integer partitions, hook membership and conjugation.
//!
//! A [`Partition`] is stored in canonical form: weakly decreasing, with no zero parts.
//! The empty partition is the unique partition of 0. The same type doubles as the
//! cycle type of a permutation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing",
            });
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Builds a partition from arbitrary parts: zeros are dropped and the rest sorted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition (n).
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The one-column partition (1^n).
    pub fn column(n: usize) -> Self {
        Partition::from_unsorted(vec![1; n])
    }

    /// The hook (n-i, 1^i) for 0 <= i < n.
    pub fn hook(n: usize, leg: usize) -> Result<Self> {
        if n == 0 || leg >= n {
            return Err(Error::InvalidPartition {
                parts: vec![n.saturating_sub(leg)],
                reason: "a hook (n-i,1^i) needs 0 <= i < n",
            });
        }
        let mut parts = vec![n - leg];
        parts.extend(std::iter::repeat_n(1, leg));
        Ok(Partition { parts, n })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The i-th part, 1-based, with λ_i = 0 past the last part (and for i = 0).
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts, n: self.n }
    }

    /// Cells (row, col), 0-based, in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    /// Hook length of cell (row, col): arm + leg + 1.
    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] - col - 1;
        let leg = self.parts[row + 1..]
            .iter()
            .take_while(|&&p| p > col)
            .count();
        arm + leg + 1
    }

    /// Multiplicity of each part size i, as (i, m_i) for m_i > 0, ascending in i.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.parts.iter().rev() {
            match out.last_mut() {
                Some((size, count)) if *size == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn has_even_part(&self) -> bool {
        self.parts.iter().any(|p| p % 2 == 0)
    }

    /// λ ∈ H(k,l;n), i.e. λ_{k+1} <= l.
    pub fn in_hook(&self, hook: HookParams) -> bool {
        self.part(hook.k + 1) <= hook.l
    }

    /// λ ∈ H'(k,l;n): in the hook and containing the k×l rectangle (λ_k >= l).
    pub fn in_strict_hook(&self, hook: HookParams) -> bool {
        let rect = hook.k == 0 || self.part(hook.k) >= hook.l;
        self.in_hook(hook) && rect
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Parses comma-separated parts such as `3,1,1`. The empty string (or `()`) is the
/// empty partition. Non-canonical input is rejected rather than sorted.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        if trimmed.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition {
                        parts: vec![],
                        reason: "parts must be non-negative integers separated by commas",
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The (k,l) hook: k rows of unbounded length plus l columns of unbounded height.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HookParams {
    pub k: usize,
    pub l: usize,
}

impl HookParams {
    pub fn new(k: usize, l: usize) -> Self {
        HookParams { k, l }
    }

    pub fn swapped(self) -> Self {
        HookParams {
            k: self.l,
            l: self.k,
        }
    }
}

/// Every partition of n, in reverse-lexicographic order: (n) first, (1^n) last.
pub fn partitions_of(n: usize) -> Result<Vec<Partition>> {
    partitions_of_with(n, &Limits::default())
}

pub fn partitions_of_with(n: usize, limits: &Limits) -> Result<Vec<Partition>> {
    limits.check_partition_n(n)?;
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    generate(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn generate(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: prefix.clone(),
            n: prefix.iter().sum(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

/// H(k,l;n), as a subsequence of [`partitions_of`].
pub fn hook_partitions(k: usize, l: usize, n: usize) -> Result<Vec<Partition>> {
    hook_partitions_with(HookParams::new(k, l), n, &Limits::default())
}

pub fn hook_partitions_with(hook: HookParams, n: usize, limits: &Limits) -> Result<Vec<Partition>> {
    Ok(partitions_of_with(n, limits)?
        .into_iter()
        .filter(|p| p.in_hook(hook))
        .collect())
}

pub fn in_strict_hook(lambda: &Partition, k: usize, l: usize) -> bool {
    lambda.in_strict_hook(HookParams::new(k, l))
}

pub fn conjugate(lambda: &Partition) -> Partition {
    lambda.conjugate()
}
