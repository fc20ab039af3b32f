//! Acceptance suite. Each test prints one PASS/FAIL line; run with `-- --nocapture` to see them.
//!
//! Every check here is exact integer equality.

use std::time::Instant;

use hookchar_core::character::{class_size, factorial};
use hookchar_core::identity::{OracleMode, OracleStatus, Verifier};
use hookchar_core::tableau::{count_ssyt, count_super_ssyt, hook_content_count};
use hookchar_core::{
    dimension, hook_partitions, in_strict_hook, partitions_of, rhs_product, trace_super,
    CharacterEngine, Limits, Partition,
};
use num_bigint::{BigInt, BigUint};

/// Largest word space (k+l)^n scanned by the trace oracle.
const ORACLE_CEILING: u128 = 3_000_000;

fn verdict(id: &str, title: &str, failures: &[String], detail: String) {
    let status = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("[{status}] {id} {title}: {detail}");
    for f in failures.iter().take(10) {
        println!("       {f}");
    }
    assert!(
        failures.is_empty(),
        "{id} failed with {} mismatches",
        failures.len()
    );
}

fn hook_pairs() -> impl Iterator<Item = (usize, usize)> {
    (0..=3)
        .flat_map(|k| (0..=3).map(move |l| (k, l)))
        .filter(|&(k, l)| k + l >= 1)
}

#[test]
fn ac1_main_identity() {
    let started = Instant::now();
    let v = Verifier::new(Limits::default(), OracleMode::Off);
    let mut failures = Vec::new();
    let mut rows = 0;
    for n in 0..=10 {
        for (k, l) in hook_pairs() {
            let report = v.verify_main_identity(n, k, l).unwrap();
            rows += report.rows.len();
            for r in report.failures() {
                failures.push(format!(
                    "n={n} k={k} l={l} μ={} lhs={} rhs={}",
                    r.mu, r.lhs, r.rhs
                ));
            }
        }
    }
    let secs = started.elapsed().as_secs_f64();
    if secs > 300.0 {
        failures.push(format!("took {secs:.1}s, budget is 300s"));
    }
    verdict(
        "AC1",
        "Σ s_{k,l}(λ)χ^λ(μ) = Π(k+(−1)^(μ_j+1) l), n≤10, k,l≤3",
        &failures,
        format!("{rows} rows exact in {secs:.1}s"),
    );
}

#[test]
fn ac2_three_way_oracle_agreement() {
    let limits = Limits {
        max_oracle_words: ORACLE_CEILING,
        ..Limits::default()
    };
    let v = Verifier::new(limits, OracleMode::Auto);
    let mut failures = Vec::new();
    let mut rows = 0;
    for (k, l) in hook_pairs() {
        for n in 0..=12 {
            if !limits.oracle_feasible(k + l, n) {
                continue;
            }
            let report = v.verify_main_identity(n, k, l).unwrap();
            for r in &report.rows {
                rows += 1;
                let oracle = r.oracle.clone();
                if r.oracle_status != OracleStatus::Checked
                    || oracle.as_ref() != Some(&r.rhs)
                    || r.lhs != r.rhs
                    || rhs_product(&r.mu, k, l) != r.rhs
                {
                    failures.push(format!(
                        "n={n} k={k} l={l} μ={} trace={oracle:?} rhs={} lhs={}",
                        r.mu, r.rhs, r.lhs
                    ));
                }
            }
        }
    }
    // The ranges named for this criterion must really be covered.
    for (alphabet, n) in [(3, 7), (2, 12)] {
        if !limits.oracle_feasible(alphabet, n) {
            failures.push(format!("(k+l)={alphabet}, n={n} not covered"));
        }
    }
    verdict(
        "AC2",
        "trace_super = rhs_product = character-sum LHS where (k+l)^n ≤ 3e6",
        &failures,
        format!("{rows} rows, three-way exact"),
    );
}

#[test]
fn ac3_hook_character_sum() {
    let v = Verifier::default();
    let mut failures = Vec::new();
    let mut rows = 0;
    for n in 1..=12 {
        let report = v.verify_hook_sum(n).unwrap();
        for r in &report.rows {
            rows += 1;
            let expected = if r.mu.has_even_part() {
                BigInt::from(0)
            } else {
                BigInt::from(2).pow(r.mu.num_parts() as u32 - 1)
            };
            if !r.pass || r.lhs != expected {
                failures.push(format!(
                    "n={n} μ={} sum={} expected {expected}",
                    r.mu, r.lhs
                ));
            }
        }
    }
    verdict(
        "AC3",
        "Σ_i χ^(n−i,1^i)(μ) ∈ {0, 2^(ℓ(μ)−1)}, n≤12",
        &failures,
        format!("{rows} classes exact, cross-derived from the (1,1) identity"),
    );
}

#[test]
fn ac4_tableau_fixtures() {
    let mut failures = Vec::new();
    let mut shapes = 0;
    for n in 1..=12 {
        for lambda in hook_partitions(1, 1, n).unwrap() {
            shapes += 1;
            let c = count_super_ssyt(&lambda, 1, 1);
            if c != 2 {
                failures.push(format!("s_(1,1)({lambda}) = {c}, expected 2"));
            }
        }
        let row = Partition::row(n);
        let c = count_super_ssyt(&row, 2, 1);
        if c != 2 * n as u64 + 1 {
            failures.push(format!("s_(2,1)({row}) = {c}, expected {}", 2 * n + 1));
        }
        for lambda in hook_partitions(2, 1, n).unwrap() {
            if !in_strict_hook(&lambda, 2, 1) {
                if lambda != row {
                    failures.push(format!(
                        "{lambda} is in H(2,1) but not H'(2,1) and is not (n)"
                    ));
                }
                continue;
            }
            shapes += 1;
            let expected = 4 * (lambda.part(1) - lambda.part(2) + 1) as u64;
            let c = count_super_ssyt(&lambda, 2, 1);
            if c != expected {
                failures.push(format!("s_(2,1)({lambda}) = {c}, expected {expected}"));
            }
        }
    }
    verdict(
        "AC4",
        "s_(1,1)=2 on H(1,1), s_(2,1)((n))=2n+1, s_(2,1)=4(λ₁−λ₂+1) on H'(2,1), n≤12",
        &failures,
        format!("{shapes} shapes enumerated"),
    );
}

#[test]
fn ac5_corollary_21() {
    let v = Verifier::default();
    let mut failures = Vec::new();
    let mut rows = 0;
    for n in 2..=10 {
        let report = v.verify_21_corollary(n).unwrap();
        for r in &report.rows {
            rows += 1;
            let numerator = rhs_product(&r.mu, 2, 1) - BigInt::from(2 * n + 1);
            if numerator.clone() % 4 != BigInt::from(0) {
                failures.push(format!("n={n} μ={}: {numerator} not divisible by 4", r.mu));
            }
            if !r.pass {
                failures.push(format!(
                    "n={n} μ={} lhs={} rhs={} note={:?}",
                    r.mu, r.lhs, r.rhs, r.note
                ));
            }
        }
    }
    verdict(
        "AC5",
        "Σ_{H'(2,1)} (λ₁−λ₂+1)χ^λ(μ) = (Π(2+(−1)^(μ_j+1)) − (2n+1))/4, n≤10",
        &failures,
        format!("{rows} rows exact, all numerators divisible by 4"),
    );
}

#[test]
fn ac6_classical_specialization() {
    let v = Verifier::default();
    let mut failures = Vec::new();
    let mut rows = 0;
    for n in 0..=8 {
        for k in 0..=3 {
            let report = v.verify_classical(n, k).unwrap();
            for r in &report.rows {
                rows += 1;
                let expected = BigInt::from(k).pow(r.mu.num_parts() as u32);
                if !r.pass || r.lhs != expected {
                    failures.push(format!(
                        "n={n} k={k} μ={} lhs={} expected {expected}",
                        r.mu, r.lhs
                    ));
                }
                if r.oracle_status == OracleStatus::Checked
                    && trace_super(&r.mu, k, 0).unwrap() != expected
                {
                    failures.push(format!("n={n} k={k} μ={} trace disagrees", r.mu));
                }
            }
        }
    }
    let mut shapes = 0;
    for n in 0..=8 {
        for lambda in partitions_of(n).unwrap() {
            for k in 0..=4 {
                shapes += 1;
                let closed = hook_content_count(&lambda, k);
                match count_ssyt(&lambda, k) {
                    Ok(c) if BigUint::from(c) == closed => {}
                    other => failures.push(format!(
                        "s_{k}({lambda}): {other:?} vs hook-content {closed}"
                    )),
                }
            }
        }
    }
    verdict(
        "AC6",
        "Σ s_k(λ)χ^λ(μ) = k^ℓ(μ) (n≤8, k≤3); enumeration = hook-content (n≤8, k≤4)",
        &failures,
        format!("{rows} rows, {shapes} (λ,k) counts"),
    );
}

#[test]
fn ac7_character_engine_soundness() {
    let engine = CharacterEngine::new();
    let mut failures = Vec::new();
    let mut pairs = 0;
    for n in 0..=9 {
        let parts = partitions_of(n).unwrap();
        let values: Vec<Vec<BigInt>> = parts
            .iter()
            .map(|lambda| {
                parts
                    .iter()
                    .map(|mu| engine.character(lambda, mu).unwrap())
                    .collect()
            })
            .collect();
        let sizes: Vec<BigInt> = parts
            .iter()
            .map(|mu| BigInt::from(class_size(mu).size))
            .collect();
        let n_fact = BigInt::from(factorial(n));
        for (i, row_i) in values.iter().enumerate() {
            for (j, row_j) in values.iter().enumerate() {
                pairs += 1;
                let inner: BigInt = sizes
                    .iter()
                    .zip(row_i.iter().zip(row_j))
                    .map(|(z, (a, b))| z * a * b)
                    .sum();
                let expected = if i == j {
                    n_fact.clone()
                } else {
                    BigInt::from(0)
                };
                if inner != expected {
                    failures.push(format!("n={n} ⟨χ^{}, χ^{}⟩ = {inner}", parts[i], parts[j]));
                }
            }
        }
        let identity = Partition::column(n);
        let degree_sum: BigInt = parts.iter().map(|l| dimension(l).pow(2)).sum();
        if degree_sum != n_fact {
            failures.push(format!("n={n} Σ dim² = {degree_sum}"));
        }
        let mn_sum: BigInt = parts
            .iter()
            .map(|l| engine.character(l, &identity).unwrap().pow(2))
            .sum();
        if mn_sum != n_fact {
            failures.push(format!("n={n} Σ χ^λ(1^n)² = {mn_sum}"));
        }
    }
    for n in 0..=10 {
        let identity = Partition::column(n);
        for lambda in partitions_of(n).unwrap() {
            let mn = engine.character(&lambda, &identity).unwrap();
            if mn != dimension(&lambda) {
                failures.push(format!(
                    "χ^{lambda}(1^{n}) = {mn}, hook length gives {}",
                    dimension(&lambda)
                ));
            }
        }
    }
    verdict(
        "AC7",
        "row orthogonality and Σ dim² = n! (n≤9); MN at 1^n = hook-length (n≤10)",
        &failures,
        format!("{pairs} inner products exact"),
    );
}
