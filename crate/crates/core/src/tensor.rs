//! Brute-force trace oracle for the signed place-permutation action on (V₀ ⊕ V₁)^⊗n.
//!
//! A basis word w = v_{i1} ⊗ … ⊗ v_{in} is sent by σ to the word whose i-th letter is
//! w[σ⁻¹(i)], times −1 for every pair of odd letters whose relative order σ reverses.
//! Only the diagonal of the action matrix is ever looked at.

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partition::Partition;
use crate::tableau::{GradedAlphabet, Letter};

/// A permutation of 0..n, stored as its list of images: `image[i] = σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &j in &image {
            if j >= image.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidPermutation(image));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from 0-based cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut image: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= n || std::mem::replace(&mut touched[a], true) {
                    return Err(Error::InvalidPermutation(cycle.clone()));
                }
                image[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::new(image)
    }

    /// The canonical element of cycle type μ: (0 1 … μ₁−1)(μ₁ … μ₁+μ₂−1)⋯.
    pub fn canonical(mu: &Partition) -> Self {
        let mut image = Vec::with_capacity(mu.size());
        let mut start = 0;
        for &len in mu.parts() {
            for i in 0..len {
                image.push(start + (i + 1) % len);
            }
            start += len;
        }
        Permutation { image }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.image
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &j) in self.image.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { image: inv }
    }

    /// σ∘τ: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::SizeMismatch {
                expected: self.len(),
                actual: other.len(),
            });
        }
        Ok(Permutation {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        })
    }

    /// τσ τ⁻¹
    pub fn conjugate_by(&self, tau: &Permutation) -> Result<Self> {
        tau.compose(self)?.compose(&tau.inverse())
    }

    /// Cycles as 0-based point lists, each starting from its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.image[i];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }
}

/// A basis element of (V₀ ⊕ V₁)^⊗n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasisWord {
    letters: Vec<Letter>,
}

impl BasisWord {
    pub fn new(letters: Vec<Letter>, alphabet: GradedAlphabet) -> Result<Self> {
        for &x in &letters {
            alphabet.check(x)?;
        }
        Ok(BasisWord { letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedWord {
    /// +1 or −1.
    pub sign: i8,
    pub word: BasisWord,
}

/// The signed action of σ on a basis word.
pub fn apply_permutation(sigma: &Permutation, w: &BasisWord) -> Result<SignedWord> {
    if sigma.len() != w.len() {
        return Err(Error::SizeMismatch {
            expected: sigma.len(),
            actual: w.len(),
        });
    }
    let mut letters = w.letters.clone();
    for (j, &x) in w.letters.iter().enumerate() {
        letters[sigma.apply(j)] = x;
    }
    let odd: Vec<bool> = w.letters.iter().map(|x| x.is_odd()).collect();
    Ok(SignedWord {
        sign: koszul_sign(sigma.images(), &odd),
        word: BasisWord { letters },
    })
}

/// (−1)^(number of odd pairs a < b with σ(a) > σ(b)).
fn koszul_sign(image: &[usize], odd: &[bool]) -> i8 {
    let mut inversions = 0usize;
    for a in 0..image.len() {
        if !odd[a] {
            continue;
        }
        for b in a + 1..image.len() {
            if odd[b] && image[a] > image[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of σ on a word it fixes, computed cycle by cycle: a fixed word is constant on each
/// cycle, and a cycle of length m carrying an odd letter contributes (−1)^(m+1).
/// Returns `None` when σ does not fix the word.
pub fn fixed_word_sign_by_cycles(sigma: &Permutation, w: &BasisWord) -> Option<i8> {
    let mut sign = 1i8;
    for cycle in sigma.cycles() {
        let first = w.letters[cycle[0]];
        if cycle.iter().any(|&i| w.letters[i] != first) {
            return None;
        }
        if first.is_odd() && cycle.len() % 2 == 0 {
            sign = -sign;
        }
    }
    Some(sign)
}

/// The trace of σ_μ acting on (V₀ ⊕ V₁)^⊗n, by scanning all (k+l)^n basis words.
pub fn trace_super(mu: &Partition, k: usize, l: usize) -> Result<BigInt> {
    trace_super_with(mu, k, l, &Limits::default())
}

pub fn trace_super_with(mu: &Partition, k: usize, l: usize, limits: &Limits) -> Result<BigInt> {
    let n = mu.size();
    let alphabet = k + l;
    limits.check_oracle_words(alphabet, n)?;
    Ok(BigInt::from(trace_of(&Permutation::canonical(mu), k, l)))
}

/// Trace of an arbitrary permutation, under the same ceiling as [`trace_super_with`].
pub fn trace_of_permutation(
    sigma: &Permutation,
    k: usize,
    l: usize,
    limits: &Limits,
) -> Result<BigInt> {
    limits.check_oracle_words(k + l, sigma.len())?;
    Ok(BigInt::from(trace_of(sigma, k, l)))
}

fn trace_of(sigma: &Permutation, k: usize, l: usize) -> i64 {
    let n = sigma.len();
    let alphabet = k + l;
    if n == 0 {
        return 1;
    }
    if alphabet == 0 {
        return 0;
    }
    let inv = sigma.inverse();
    // Split the scan on the first letter so the parts can run in parallel.
    (0..alphabet)
        .into_par_iter()
        .map(|first| {
            let mut word = vec![0u8; n];
            word[0] = first as u8;
            let mut odd = vec![false; n];
            let mut total = 0i64;
            loop {
                let fixed = (0..n).all(|i| word[inv.image[i]] == word[i]);
                if fixed {
                    for (flag, &c) in odd.iter_mut().zip(&word) {
                        *flag = c as usize >= k;
                    }
                    total += i64::from(koszul_sign(&sigma.image, &odd));
                }
                // Odometer over positions 1..n, last position fastest.
                let mut pos = n;
                loop {
                    pos -= 1;
                    if pos == 0 {
                        return total;
                    }
                    if (word[pos] as usize) + 1 < alphabet {
                        word[pos] += 1;
                        break;
                    }
                    word[pos] = 0;
                }
            }
        })
        .sum()
}

/// Oracle trace next to the closed form for one cycle type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCheck {
    pub mu: Partition,
    pub k: usize,
    pub l: usize,
    #[serde(with = "crate::bigint_serde")]
    pub trace: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub rhs: BigInt,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn check_trace(mu: &Partition, k: usize, l: usize, limits: &Limits) -> Result<TraceCheck> {
    let trace = trace_super_with(mu, k, l, limits)?;
    let rhs = rhs_product(mu, k, l);
    Ok(TraceCheck {
        mu: mu.clone(),
        k,
        l,
        matches: trace == rhs,
        trace,
        rhs,
    })
}

/// Π_j (k + (−1)^(μ_j+1) l): k + l for odd parts, k − l for even parts.
pub fn rhs_product(mu: &Partition, k: usize, l: usize) -> BigInt {
    let odd = BigInt::from(k) + BigInt::from(l);
    let even = BigInt::from(k) - BigInt::from(l);
    mu.parts().iter().fold(BigInt::one(), |acc, &part| {
        acc * if part % 2 == 1 { &odd } else { &even }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn word(s: &[&str], k: usize, l: usize) -> BasisWord {
        let letters = s.iter().map(|x| x.parse().unwrap()).collect();
        BasisWord::new(letters, GradedAlphabet::new(k, l)).unwrap()
    }

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Every word over the alphabet, in lexicographic order.
    fn all_words(n: usize, k: usize, l: usize) -> Vec<BasisWord> {
        let letters: Vec<Letter> = GradedAlphabet::new(k, l).letters().collect();
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w: Vec<Letter>| {
                    letters.iter().map(move |&x| {
                        let mut v = w.clone();
                        v.push(x);
                        v
                    })
                })
                .collect();
        }
        out.into_iter()
            .map(|letters| BasisWord { letters })
            .collect()
    }

    #[test]
    fn action_examples() {
        let w = word(&["t1", "u2", "u1"], 2, 2);
        let id = Permutation::identity(3);
        assert_eq!(
            apply_permutation(&id, &w).unwrap(),
            SignedWord { sign: 1, word: w }
        );

        let swap = Permutation::from_cycles(2, &[vec![0, 1]]).unwrap();
        let uu = word(&["u1", "u1"], 1, 1);
        assert_eq!(
            apply_permutation(&swap, &uu).unwrap(),
            SignedWord { sign: -1, word: uu }
        );
        let tu = word(&["t1", "u1"], 1, 1);
        assert_eq!(
            apply_permutation(&swap, &tu).unwrap(),
            SignedWord {
                sign: 1,
                word: word(&["u1", "t1"], 1, 1)
            }
        );
    }

    #[test]
    fn letter_lands_at_image_position() {
        // σ = (0 1 2): the letter at position 0 moves to position 1.
        let sigma = Permutation::from_cycles(3, &[vec![0, 1, 2]]).unwrap();
        let w = word(&["t1", "t2", "t3"], 3, 0);
        let out = apply_permutation(&sigma, &w).unwrap();
        assert_eq!(out.word, word(&["t3", "t1", "t2"], 3, 0));
    }

    #[test]
    fn errors() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
        let w = word(&["t1"], 1, 0);
        assert!(matches!(
            apply_permutation(&Permutation::identity(2), &w),
            Err(Error::SizeMismatch { .. })
        ));
        assert!(BasisWord::new(vec![Letter::Odd(2)], GradedAlphabet::new(1, 1)).is_err());
    }

    #[test]
    fn canonical_permutation_has_the_right_cycles() {
        let sigma = Permutation::canonical(&p(&[3, 2, 1]));
        assert_eq!(sigma.images(), &[1, 2, 0, 4, 3, 5]);
        assert_eq!(sigma.cycles(), vec![vec![0, 1, 2], vec![3, 4], vec![5]]);
        for n in 0..=7 {
            for mu in partitions_of(n).unwrap() {
                assert_eq!(Permutation::canonical(&mu).cycle_type(), mu);
            }
        }
    }

    #[test]
    fn trace_examples() {
        for n in 0..=5 {
            assert_eq!(
                trace_super(&Partition::column(n), 2, 1).unwrap(),
                BigInt::from(3i64.pow(n as u32))
            );
        }
        assert_eq!(trace_super(&p(&[2]), 1, 1).unwrap(), BigInt::from(0));
        assert_eq!(trace_super(&p(&[3, 1]), 2, 1).unwrap(), BigInt::from(9));
        assert_eq!(
            trace_super(&Partition::empty(), 0, 0).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(trace_super(&p(&[1]), 0, 0).unwrap(), BigInt::from(0));
    }

    #[test]
    fn trace_check_json() {
        let check = check_trace(&p(&[3, 1]), 2, 1, &Limits::default()).unwrap();
        assert_eq!(
            serde_json::to_string(&check).unwrap(),
            r#"{"mu":[3,1],"k":2,"l":1,"trace":9,"rhs":9,"match":true}"#
        );
    }

    #[test]
    fn trace_ceiling() {
        let err = trace_super(&Partition::column(14), 2, 1).unwrap_err();
        assert!(err.is_resource_limit());
    }

    #[test]
    fn rhs_examples() {
        for mu in partitions_of(6).unwrap() {
            assert_eq!(
                rhs_product(&mu, 3, 0),
                BigInt::from(3i64.pow(mu.num_parts() as u32))
            );
            if mu.has_even_part() {
                assert_eq!(rhs_product(&mu, 2, 2), BigInt::from(0));
            }
        }
        assert_eq!(rhs_product(&p(&[3, 1]), 2, 1), BigInt::from(9));
        assert_eq!(rhs_product(&p(&[2, 2]), 1, 3), BigInt::from(4));
        assert_eq!(rhs_product(&p(&[2]), 1, 3), BigInt::from(-2));
    }

    #[test]
    fn trace_matches_word_by_word_application() {
        for n in 0..=4 {
            for mu in partitions_of(n).unwrap() {
                let sigma = Permutation::canonical(&mu);
                for (k, l) in [(1, 1), (2, 1), (0, 2), (1, 2)] {
                    let mut direct = 0i64;
                    let mut by_cycles = 0i64;
                    for w in all_words(n, k, l) {
                        let out = apply_permutation(&sigma, &w).unwrap();
                        if out.word == w {
                            direct += i64::from(out.sign);
                        }
                        if let Some(s) = fixed_word_sign_by_cycles(&sigma, &w) {
                            assert_eq!(out.word, w);
                            assert_eq!(s, out.sign);
                            by_cycles += i64::from(s);
                        }
                    }
                    let fast = trace_super(&mu, k, l).unwrap();
                    assert_eq!(fast, BigInt::from(direct), "{mu} k={k} l={l}");
                    assert_eq!(fast, BigInt::from(by_cycles));
                }
            }
        }
    }

    #[test]
    fn oracle_equals_closed_form() {
        for n in 0..=7 {
            for mu in partitions_of(n).unwrap() {
                for k in 0..=3 {
                    for l in 0..=(3 - k) {
                        assert_eq!(
                            trace_super(&mu, k, l).unwrap(),
                            rhs_product(&mu, k, l),
                            "{mu} k={k} l={l}"
                        );
                    }
                }
            }
        }
    }
}
