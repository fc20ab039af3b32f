//! k-semistandard and (k,l)-semistandard tableaux.
//!
//! The graded alphabet has k even letters t1 < … < tk followed by l odd letters
//! u1 < … < ul. A (k,l)-semistandard tableau is weakly increasing along rows and down
//! columns, with even letters strictly increasing down columns and odd letters strictly
//! increasing along rows. With l = 0 this is the ordinary semistandard rule over k letters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::Partition;

/// A letter of the graded alphabet. Indices are 1-based; every even letter precedes
/// every odd letter, which is what the derived `Ord` gives.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Even(usize),
    Odd(usize),
}

impl Letter {
    pub fn is_odd(self) -> bool {
        matches!(self, Letter::Odd(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Even(i) => write!(f, "t{i}"),
            Letter::Odd(i) => write!(f, "u{i}"),
        }
    }
}

impl FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::LetterOutOfRange {
            letter: s.to_string(),
            k: 0,
            l: 0,
        };
        let (kind, idx) = s.split_at_checked(1).ok_or_else(bad)?;
        let idx: usize = idx.parse().map_err(|_| bad())?;
        if idx == 0 {
            return Err(bad());
        }
        match kind {
            "t" => Ok(Letter::Even(idx)),
            "u" => Ok(Letter::Odd(idx)),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedAlphabet {
    pub k: usize,
    pub l: usize,
}

impl GradedAlphabet {
    pub fn new(k: usize, l: usize) -> Self {
        GradedAlphabet { k, l }
    }

    pub fn len(&self) -> usize {
        self.k + self.l
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Letters in increasing order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        (1..=self.k)
            .map(Letter::Even)
            .chain((1..=self.l).map(Letter::Odd))
    }

    pub fn contains(&self, letter: Letter) -> bool {
        match letter {
            Letter::Even(i) => (1..=self.k).contains(&i),
            Letter::Odd(i) => (1..=self.l).contains(&i),
        }
    }

    pub fn check(&self, letter: Letter) -> Result<()> {
        if self.contains(letter) {
            Ok(())
        } else {
            Err(Error::LetterOutOfRange {
                letter: letter.to_string(),
                k: self.k,
                l: self.l,
            })
        }
    }

    pub(crate) fn letter(&self, code: u8) -> Letter {
        let c = code as usize;
        if c < self.k {
            Letter::Even(c + 1)
        } else {
            Letter::Odd(c - self.k + 1)
        }
    }
}

/// A filled Young diagram. Serializes as an array of rows of letters, e.g. `[["t1","u1"],["u1"]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    /// Checks that the rows form a partition shape; no ordering rule is imposed.
    pub fn new(rows: Vec<Vec<Letter>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        Ok(Tableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Letter> {
        self.rows.get(row)?.get(col).copied()
    }

    /// The (k,l)-semistandard rule, checked cell by cell against left and upper neighbors.
    pub fn is_semistandard(&self, alphabet: GradedAlphabet) -> bool {
        self.shape.cells().all(|(r, c)| {
            let x = self.rows[r][c];
            if !alphabet.contains(x) {
                return false;
            }
            let left_ok = match c.checked_sub(1).map(|cc| self.rows[r][cc]) {
                None => true,
                Some(left) if left.is_odd() => left < x,
                Some(left) => left <= x,
            };
            let up_ok = match r.checked_sub(1).map(|rr| self.rows[rr][c]) {
                None => true,
                Some(up) if up.is_odd() => up <= x,
                Some(up) => up < x,
            };
            left_ok && up_ok
        })
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Letter::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tableau {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let rows = Vec::<Vec<Letter>>::deserialize(deserializer)?;
        Tableau::new(rows).map_err(serde::de::Error::custom)
    }
}

/// Row-major backtracking over the cells of a shape. Letters are codes 0..k+l; codes
/// below k are even.
struct Filler {
    /// For each cell in row-major order: index of the left neighbor and of the upper neighbor.
    neighbors: Vec<(Option<usize>, Option<usize>)>,
    k: u8,
    alphabet: u8,
    filling: Vec<u8>,
}

impl Filler {
    fn new(shape: &Partition, alphabet: GradedAlphabet) -> Self {
        let mut offsets = Vec::with_capacity(shape.num_parts());
        let mut acc = 0;
        for &len in shape.parts() {
            offsets.push(acc);
            acc += len;
        }
        let neighbors = shape
            .cells()
            .map(|(r, c)| {
                let left = c.checked_sub(1).map(|cc| offsets[r] + cc);
                let up = r.checked_sub(1).map(|rr| offsets[rr] + c);
                (left, up)
            })
            .collect();
        Filler {
            neighbors,
            k: alphabet.k as u8,
            alphabet: alphabet.len() as u8,
            filling: vec![0; shape.size()],
        }
    }

    /// Smallest letter allowed at `cell` given its already filled neighbors.
    #[inline]
    fn lower_bound(&self, cell: usize) -> u8 {
        let (left, up) = self.neighbors[cell];
        let mut lo = 0;
        if let Some(i) = left {
            let x = self.filling[i];
            lo = lo.max(if x >= self.k { x + 1 } else { x });
        }
        if let Some(i) = up {
            let x = self.filling[i];
            lo = lo.max(if x >= self.k { x } else { x + 1 });
        }
        lo
    }

    fn count(&mut self, cell: usize) -> u64 {
        let lo = self.lower_bound(cell);
        if lo >= self.alphabet {
            return 0;
        }
        if cell + 1 == self.filling.len() {
            return u64::from(self.alphabet - lo);
        }
        let mut total = 0;
        for x in lo..self.alphabet {
            self.filling[cell] = x;
            total += self.count(cell + 1);
        }
        total
    }

    /// Visits each complete filling; stops early when `visit` returns false.
    fn walk(&mut self, cell: usize, visit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        if cell == self.filling.len() {
            return visit(&self.filling);
        }
        for x in self.lower_bound(cell)..self.alphabet {
            self.filling[cell] = x;
            if !self.walk(cell + 1, visit) {
                return false;
            }
        }
        true
    }
}

/// s_{k,l}(λ): the number of (k,l)-semistandard tableaux of shape λ, by backtracking.
pub fn count_super_ssyt(lambda: &Partition, k: usize, l: usize) -> u64 {
    if lambda.is_empty() {
        return 1;
    }
    let alphabet = GradedAlphabet::new(k, l);
    assert!(alphabet.len() <= u8::MAX as usize, "alphabet too large");
    Filler::new(lambda, alphabet).count(0)
}

/// Every (k,l)-semistandard tableau of shape λ, in row-major backtracking order
/// (lexicographic in the row-major reading word).
pub fn enumerate_super_ssyt(lambda: &Partition, k: usize, l: usize) -> Result<Vec<Tableau>> {
    enumerate_super_ssyt_with(lambda, k, l, &Limits::default())
}

pub fn enumerate_super_ssyt_with(
    lambda: &Partition,
    k: usize,
    l: usize,
    limits: &Limits,
) -> Result<Vec<Tableau>> {
    let alphabet = GradedAlphabet::new(k, l);
    if lambda.is_empty() {
        return Ok(vec![Tableau {
            shape: Partition::empty(),
            rows: vec![],
        }]);
    }
    let mut out = Vec::new();
    let mut overflow = false;
    let mut filler = Filler::new(lambda, alphabet);
    filler.walk(0, &mut |word| {
        if out.len() as u128 >= limits.max_listing {
            overflow = true;
            return false;
        }
        let mut letters = word.iter().map(|&c| alphabet.letter(c));
        let rows = lambda
            .parts()
            .iter()
            .map(|&len| letters.by_ref().take(len).collect())
            .collect();
        out.push(Tableau {
            shape: lambda.clone(),
            rows,
        });
        true
    });
    if overflow {
        return Err(Error::ResourceLimit {
            what: "tableau listing length",
            value: u128::from(count_super_ssyt(lambda, k, l)),
            limit: limits.max_listing,
        });
    }
    Ok(out)
}

/// s_k(λ) by the hook-content formula Π (k + c)/h over the cells of λ, c = col - row.
pub fn hook_content_count(lambda: &Partition, k: usize) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (r, c) in lambda.cells() {
        // A zero factor always shows up (row-major) before any negative one.
        match (k + c).checked_sub(r) {
            Some(0) | None => return BigUint::ZERO,
            Some(factor) => num *= BigUint::from(factor),
        }
        den *= BigUint::from(lambda.hook_length(r, c));
    }
    num / den
}

/// s_k(λ), by enumeration cross-checked against the hook-content formula.
pub fn count_ssyt(lambda: &Partition, k: usize) -> Result<u64> {
    let enumerated = count_super_ssyt(lambda, k, 0);
    let closed = hook_content_count(lambda, k);
    if closed.to_u64() != Some(enumerated) {
        return Err(Error::CrossCheck(format!(
            "s_{k}({lambda}): enumeration gives {enumerated}, hook-content formula gives {closed}"
        )));
    }
    Ok(enumerated)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{partitions_of, HookParams};
    use std::collections::HashSet;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Oracle: try every one of the (k+l)^|λ| fillings and keep the valid ones.
    fn brute_count(lambda: &Partition, k: usize, l: usize) -> u64 {
        let alphabet = GradedAlphabet::new(k, l);
        let letters: Vec<Letter> = alphabet.letters().collect();
        let cells = lambda.size();
        if cells == 0 {
            return 1;
        }
        if letters.is_empty() {
            return 0;
        }
        let mut digits = vec![0usize; cells];
        let mut count = 0;
        loop {
            let mut it = digits.iter().map(|&d| letters[d]);
            let rows = lambda
                .parts()
                .iter()
                .map(|&len| it.by_ref().take(len).collect())
                .collect();
            if Tableau::new(rows).unwrap().is_semistandard(alphabet) {
                count += 1;
            }
            let mut i = 0;
            while i < cells && digits[i] + 1 == letters.len() {
                digits[i] = 0;
                i += 1;
            }
            if i == cells {
                return count;
            }
            digits[i] += 1;
        }
    }

    #[test]
    fn classical_examples() {
        for k in 0..5 {
            assert_eq!(count_ssyt(&p(&[1]), k).unwrap(), k as u64);
        }
        assert_eq!(count_ssyt(&Partition::row(7), 1).unwrap(), 1);
        assert_eq!(count_ssyt(&p(&[2, 1]), 2).unwrap(), 2);
        assert_eq!(count_ssyt(&p(&[1, 1, 1]), 2).unwrap(), 0);
        assert_eq!(count_ssyt(&Partition::empty(), 0).unwrap(), 1);
    }

    #[test]
    fn super_examples() {
        for n in 1..=8 {
            for i in 0..n {
                let hook = Partition::hook(n, i).unwrap();
                assert_eq!(count_super_ssyt(&hook, 1, 1), 2, "{hook}");
            }
            assert_eq!(count_super_ssyt(&Partition::row(n), 2, 1), 2 * n as u64 + 1);
        }
        assert_eq!(count_super_ssyt(&p(&[1, 1]), 0, 1), 1);
        assert_eq!(count_super_ssyt(&p(&[2]), 0, 1), 0);
        assert_eq!(count_super_ssyt(&p(&[1, 1]), 2, 1), 4);
    }

    #[test]
    fn backtracking_matches_brute_force() {
        for n in 0..=5 {
            for lambda in partitions_of(n).unwrap() {
                for k in 0..=2 {
                    for l in 0..=2 {
                        assert_eq!(
                            count_super_ssyt(&lambda, k, l),
                            brute_count(&lambda, k, l),
                            "{lambda} k={k} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let one = enumerate_super_ssyt(&p(&[1, 1]), 0, 1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(
            serde_json::to_string(&one[0]).unwrap(),
            r#"[["u1"],["u1"]]"#
        );
        assert!(enumerate_super_ssyt(&p(&[2]), 0, 1).unwrap().is_empty());
        let two = enumerate_super_ssyt(&p(&[2, 1]), 1, 1).unwrap();
        assert_eq!(
            serde_json::to_string(&two).unwrap(),
            r#"[[["t1","t1"],["u1"]],[["t1","u1"],["u1"]]]"#
        );
        let empty = enumerate_super_ssyt(&Partition::empty(), 2, 2).unwrap();
        assert_eq!(empty.len(), 1);
    }

    #[test]
    fn enumeration_is_valid_distinct_and_complete() {
        for n in 0..=6 {
            for lambda in partitions_of(n).unwrap() {
                for (k, l) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 0), (0, 3)] {
                    let alphabet = GradedAlphabet::new(k, l);
                    let all = enumerate_super_ssyt(&lambda, k, l).unwrap();
                    assert_eq!(all.len() as u64, count_super_ssyt(&lambda, k, l));
                    assert!(all
                        .iter()
                        .all(|t| t.is_semistandard(alphabet) && t.shape() == &lambda));
                    let distinct: HashSet<_> = all.iter().collect();
                    assert_eq!(distinct.len(), all.len());
                }
            }
        }
    }

    #[test]
    fn listing_ceiling() {
        let limits = Limits {
            max_listing: 5,
            ..Limits::default()
        };
        let err = enumerate_super_ssyt_with(&Partition::row(3), 2, 1, &limits).unwrap_err();
        assert!(err.is_resource_limit());
        assert_eq!(
            enumerate_super_ssyt_with(&Partition::row(2), 2, 1, &limits)
                .unwrap()
                .len(),
            5
        );
    }

    #[test]
    fn vanishes_exactly_outside_the_hook() {
        for n in 0..=8 {
            for lambda in partitions_of(n).unwrap() {
                for k in 0..=3 {
                    for l in 0..=3 {
                        let inside = lambda.in_hook(HookParams::new(k, l));
                        assert_eq!(
                            count_super_ssyt(&lambda, k, l) > 0,
                            inside,
                            "{lambda} k={k} l={l}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn letters_parse_and_order() {
        assert_eq!("t2".parse::<Letter>().unwrap(), Letter::Even(2));
        assert_eq!("u10".parse::<Letter>().unwrap(), Letter::Odd(10));
        assert!("v1".parse::<Letter>().is_err());
        assert!("t0".parse::<Letter>().is_err());
        assert!("".parse::<Letter>().is_err());
        assert!(Letter::Even(9) < Letter::Odd(1));
        let a = GradedAlphabet::new(2, 2);
        let all: Vec<_> = a.letters().collect();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (code, x) in all.into_iter().enumerate() {
            assert_eq!(a.letter(code as u8), x);
        }
        assert!(a.check(Letter::Odd(3)).is_err());
    }
}
