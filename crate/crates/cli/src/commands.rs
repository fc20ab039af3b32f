use std::path::Path;

use hookchar_core::identity::{OracleMode, VerificationReport, Verifier};
use hookchar_core::partition::{hook_partitions_with, partitions_of_with};
use hookchar_core::tableau::{count_ssyt, count_super_ssyt, enumerate_super_ssyt_with};
use hookchar_core::{check_trace, CharacterStore, Error, HookParams, Limits, Partition, Result};

use crate::range::IntRange;
use crate::{Format, Outcome};

fn open_store(cache: Option<&Path>) -> Result<CharacterStore> {
    match cache {
        Some(path) => CharacterStore::load(path),
        None => Ok(CharacterStore::new()),
    }
}

fn persist(store: &CharacterStore, cache: Option<&Path>) -> Result<()> {
    match cache {
        Some(path) if store.is_dirty() => store.save(path),
        _ => Ok(()),
    }
}

pub fn table(n: usize, format: Format, cache: Option<&Path>, limits: &Limits) -> Result<Outcome> {
    let store = open_store(cache)?;
    let table = store.table(n, limits)?;
    match format {
        Format::Plain => print!("{}", table.to_plain()),
        Format::Csv => print!("{}", table.to_csv()),
        Format::Json => println!("{}", table.to_json()?),
        Format::Latex => print!("{}", table.to_latex()),
    }
    persist(&store, cache)?;
    Ok(Outcome::Pass)
}

pub fn verify(
    ns: IntRange,
    ks: IntRange,
    ls: IntRange,
    format: Format,
    with_oracle: bool,
    cache: Option<&Path>,
    limits: &Limits,
) -> Result<Outcome> {
    // Fail fast on the table ceiling before any work is done.
    if ns.end > limits.max_table_n {
        return Err(Error::ResourceLimit {
            what: "character table size n",
            value: ns.end as u128,
            limit: limits.max_table_n as u128,
        });
    }
    let oracle = if with_oracle {
        OracleMode::Auto
    } else {
        OracleMode::Off
    };
    let verifier = Verifier::with_store(*limits, oracle, open_store(cache)?);
    let mut reports = Vec::new();
    for n in ns.iter() {
        for k in ks.iter() {
            for l in ls.iter() {
                reports.push(verifier.verify_main_identity(n, k, l)?);
                if l == 0 {
                    reports.push(verifier.verify_classical(n, k)?);
                }
                if (k, l) == (1, 1) && n >= 1 {
                    reports.push(verifier.verify_hook_sum(n)?);
                }
                if (k, l) == (2, 1) && n >= 2 {
                    reports.push(verifier.verify_21_corollary(n)?);
                }
            }
        }
    }
    persist(verifier.store(), cache)?;
    let all_pass = reports.iter().all(|r| r.all_pass);
    render_reports(&reports, all_pass, format)?;
    Ok(if all_pass {
        Outcome::Pass
    } else {
        Outcome::Fail
    })
}

fn render_reports(reports: &[VerificationReport], all_pass: bool, format: Format) -> Result<()> {
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "all_pass": all_pass, "reports": reports });
            println!("{}", serde_json::to_string(&doc)?);
        }
        Format::Csv => {
            println!("{}", VerificationReport::CSV_HEADER);
            for r in reports {
                print!("{}", r.to_csv_rows());
            }
        }
        Format::Latex => {
            for r in reports {
                print!("{}", r.to_latex());
            }
        }
        Format::Plain => {
            for r in reports {
                print!("{}", r.to_plain());
            }
            let rows: usize = reports.iter().map(|r| r.rows.len()).sum();
            let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
            println!(
                "{}: {} reports, {rows} rows, {failed} failing",
                if all_pass { "ALL PASS" } else { "FAILURES" },
                reports.len()
            );
        }
    }
    Ok(())
}

pub fn count(
    shape: &Partition,
    k: usize,
    l: usize,
    list: bool,
    format: Format,
    limits: &Limits,
) -> Result<Outcome> {
    if list {
        let tableaux = enumerate_super_ssyt_with(shape, k, l, limits)?;
        match format {
            Format::Json => println!("{}", serde_json::to_string(&tableaux)?),
            _ => {
                for t in &tableaux {
                    println!("{t}\n");
                }
                println!("{} tableaux", tableaux.len());
            }
        }
        return Ok(Outcome::Pass);
    }
    let total = if l == 0 {
        count_ssyt(shape, k)?
    } else {
        count_super_ssyt(shape, k, l)
    };
    match format {
        Format::Json => {
            let doc = serde_json::json!({ "shape": shape, "k": k, "l": l, "count": total });
            println!("{doc}");
        }
        _ => println!("{total}"),
    }
    Ok(Outcome::Pass)
}

pub fn trace(
    mu: Option<Partition>,
    n: Option<usize>,
    k: usize,
    l: usize,
    limits: &Limits,
) -> Result<Outcome> {
    let mus = match (mu, n) {
        (Some(mu), _) => vec![mu],
        (None, Some(n)) => partitions_of_with(n, limits)?,
        (None, None) => return Err(Error::InvalidArgument("give --mu or --n".into())),
    };
    let checks = mus
        .iter()
        .map(|mu| check_trace(mu, k, l, limits))
        .collect::<Result<Vec<_>>>()?;
    let ok = checks.iter().all(|c| c.matches);
    if let [single] = checks.as_slice() {
        println!("{}", serde_json::to_string(single)?);
    } else {
        println!("{}", serde_json::to_string(&checks)?);
    }
    Ok(if ok { Outcome::Pass } else { Outcome::Fail })
}

pub fn partitions(
    n: usize,
    hook: Option<(usize, usize)>,
    format: Format,
    limits: &Limits,
) -> Result<Outcome> {
    let parts = match hook {
        Some((k, l)) => hook_partitions_with(HookParams::new(k, l), n, limits)?,
        None => partitions_of_with(n, limits)?,
    };
    match format {
        Format::Json => println!("{}", serde_json::to_string(&parts)?),
        _ => {
            for p in &parts {
                println!("{p}");
            }
        }
    }
    Ok(Outcome::Pass)
}

pub fn cache_info(path: &Path) -> Result<Outcome> {
    let store = CharacterStore::load(path)?;
    let sizes = store.cached_sizes();
    if sizes.is_empty() {
        println!("{}: no tables", path.display());
    } else {
        let list: Vec<String> = sizes.iter().map(ToString::to_string).collect();
        println!("{}: tables for n = {}", path.display(), list.join(", "));
    }
    Ok(Outcome::Pass)
}

pub fn cache_warm(path: &Path, ns: IntRange, limits: &Limits) -> Result<Outcome> {
    let store = CharacterStore::load(path)?;
    for n in ns.iter() {
        store.table(n, limits)?;
    }
    store.save(path)?;
    cache_info(path)
}

/// Overwrites the file with an empty cache, even when the old contents do not load.
pub fn cache_clear(path: &Path) -> Result<Outcome> {
    CharacterStore::new().save(path)?;
    cache_info(path)
}
