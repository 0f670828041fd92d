//! Implementations behind the CLI subcommands other than `verify`.

use std::collections::BTreeMap;
use std::path::Path;

use nsg_core::enumerate::{
    count_by_frobenius, count_by_max_primitive, enumerate_by_frobenius, enumerate_by_genus,
    enumerate_by_max_primitive, ClassBy,
};
use nsg_core::wilf::{
    construct_family9, left_primitive_fraction, multiplicity_distribution, wilf_probability,
    wilf_scan,
};
use nsg_core::{NumericalSemigroup, SearchContext};

use crate::error::{CliError, Result};
use crate::output::OutputRecord;
use crate::sig6;
use crate::table::{SequenceTable, TableRow};
use crate::{cache, table};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ListFormat {
    Gens,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
}

pub fn count(by: ClassBy, n: u32, ctx: &SearchContext<'_>) -> Result<()> {
    let count = match by {
        ClassBy::Frobenius => count_by_frobenius(n, ctx)?,
        ClassBy::MaxPrimitive => count_by_max_primitive(n, ctx)?,
        ClassBy::Genus => enumerate_by_genus(n, ctx, |_| {})?,
    };
    println!("{count}");
    Ok(())
}

fn enumerate_class<V>(by: ClassBy, n: u32, ctx: &SearchContext<'_>, visit: V) -> nsg_core::Result<u64>
where
    V: FnMut(&NumericalSemigroup),
{
    match by {
        ClassBy::Frobenius => enumerate_by_frobenius(n, ctx, visit),
        ClassBy::MaxPrimitive => enumerate_by_max_primitive(n, ctx, visit),
        ClassBy::Genus => enumerate_by_genus(n, ctx, visit),
    }
}

pub fn list(by: ClassBy, n: u32, format: ListFormat, cap: u64, ctx: &SearchContext<'_>) -> Result<()> {
    let size = match by {
        ClassBy::Frobenius => count_by_frobenius(n, ctx)?,
        ClassBy::MaxPrimitive => count_by_max_primitive(n, ctx)?,
        ClassBy::Genus => enumerate_by_genus(n, ctx, |_| {})?,
    };
    if size > cap {
        return Err(CliError::Usage(format!(
            "class has {size} members, more than the list cap {cap}; raise --list-cap to list it"
        )));
    }
    if format == ListFormat::Csv {
        println!("{}", OutputRecord::csv_header());
    }
    enumerate_class(by, n, ctx, |s| {
        let rec = OutputRecord::from_semigroup(s);
        match format {
            ListFormat::Gens => println!("{}", rec.to_gens_line()),
            ListFormat::Csv => println!("{}", rec.to_csv_row()),
            ListFormat::Json => {
                println!("{}", serde_json::to_string(&rec).expect("record serialization"))
            }
        }
    })?;
    Ok(())
}

pub fn emit_table(
    max: u32,
    format: TableFormat,
    cache_path: Option<&Path>,
    strict_cache: bool,
    ctx: &SearchContext<'_>,
) -> Result<()> {
    let loaded: Option<SequenceTable> = match cache_path {
        Some(path) if path.exists() => match cache::load(path).and_then(|t| {
            t.validate()?;
            Ok(t)
        }) {
            Ok(t) => Some(t),
            Err(e @ CliError::CacheCorrupt(_)) if strict_cache => return Err(e),
            Err(CliError::CacheCorrupt(msg)) | Err(CliError::Verification(msg)) => {
                if strict_cache {
                    return Err(CliError::CacheCorrupt(msg));
                }
                eprintln!("warning: {msg}; ignoring cache and re-enumerating");
                None
            }
            Err(e) => return Err(e),
        },
        _ => None,
    };
    let seed = loaded.clone().unwrap_or_default();
    let built = table::build(max, seed, ctx)?;
    if let Some(path) = cache_path {
        // keep rows beyond max that the cache already had; never rewrite a
        // row that round-tripped from disk, so warm reruns are byte-identical
        let mut merged: BTreeMap<u32, TableRow> = loaded
            .into_iter()
            .flat_map(|t| t.rows)
            .map(|r| (r.n, r))
            .collect();
        for row in &built.rows {
            merged.entry(row.n).or_insert_with(|| row.clone());
        }
        let full = SequenceTable {
            format_version: built.format_version,
            rows: merged.into_values().collect(),
        };
        cache::store(path, &full)?;
    }
    match format {
        TableFormat::Csv => print!("{}", built.to_csv()),
        TableFormat::Json => println!("{}", built.to_json()),
    }
    Ok(())
}

pub fn wilf_scan_cmd(by: ClassBy, max: u32, ctx: &SearchContext<'_>) -> Result<()> {
    let start = if by == ClassBy::Genus { 0 } else { 1 };
    match wilf_scan(by, start..=max, ctx)? {
        None => {
            println!("no violation");
            Ok(())
        }
        Some(report) => {
            println!(
                "violation: key {} with e = {}, |L| = {}, F+1 = {}",
                report.key, report.embedding_dim, report.left_count, report.frobenius_plus_one
            );
            Err(CliError::Verification(format!(
                "Wilf inequality fails at key {}",
                report.key
            )))
        }
    }
}

pub fn wilf_stats_cmd(n: u32, half_width: Option<u32>, ctx: &SearchContext<'_>) -> Result<()> {
    let prob = wilf_probability(n, ctx)?;
    let failing = left_primitive_fraction(n, ctx)?;
    let class_size = count_by_max_primitive(n, ctx)?;
    println!("wilf stats n={n}: A_n = {class_size}");
    println!("wilf probability = {prob} (≈ {})", sig6(prob.to_f64()));
    println!(
        "criterion-failing fraction = {failing} (≈ {})",
        sig6(failing.to_f64())
    );
    if let Some(w) = half_width {
        let d = multiplicity_distribution(n, w, ctx)?;
        println!(
            "multiplicity window n={} half_width={}: inside = {}, outside = {}, fraction_outside = {} (≈ {})",
            d.n,
            d.half_width,
            d.inside_count,
            d.outside_count,
            d.fraction_outside,
            sig6(d.fraction_outside.to_f64())
        );
    }
    Ok(())
}

pub fn construct_family9_cmd(m: u32, b: Option<Vec<u32>>, _ctx: &SearchContext<'_>) -> Result<()> {
    let witness = construct_family9(m, b.as_deref())?;
    let s = &witness.semigroup;
    let gens: Vec<String> = witness.b.iter().map(|x| x.to_string()).collect();
    println!("family9 m={m}: B = {}", gens.join(" "));
    println!(
        "S = {s} with F = {}, e = {}, |L| = {}, depth {}",
        s.frobenius(),
        witness.report.embedding_dim,
        witness.report.left_count,
        witness.report.depth
    );
    let window = s.count_in_open(u64::from(m), 2 * u64::from(m));
    let checks = [
        (
            "criterion-sqrt3m",
            witness.criterion_holds,
            format!("|S∩(m,2m)| = {window}, {} vs 3m = {}", window * window, 3 * u64::from(m)),
        ),
        (
            "frobenius-exceeds-3m",
            witness.frobenius_exceeds_3m,
            format!("F = {} vs 3m = {}", s.frobenius(), 3 * u64::from(m)),
        ),
        (
            "embedding-dim-below-m/3",
            witness.small_embedding_dim,
            format!("3e = {} vs m = {m}", 3 * witness.report.embedding_dim),
        ),
        (
            "wilf",
            witness.report.wilf_holds,
            format!(
                "e·|L| = {} vs F+1 = {}",
                witness.report.embedding_dim * witness.report.left_count,
                witness.report.frobenius_plus_one
            ),
        ),
        (
            "interval-frobenius-formula",
            witness.interval_frobenius == witness.interval_formula_value
                && witness.interval_formula_value == 4 * i64::from(m) - 1,
            format!(
                "computed F(<A>) = {}, formula = {}, 4m-1 = {}",
                witness.interval_frobenius,
                witness.interval_formula_value,
                4 * i64::from(m) - 1
            ),
        ),
    ];
    let mut failures = 0;
    for (name, pass, detail) in &checks {
        println!("check {name}: {} ({detail})", if *pass { "PASS" } else { "FAIL" });
        if !pass {
            failures += 1;
        }
    }
    if failures == 0 {
        println!("family9 m={m}: PASS");
        Ok(())
    } else {
        println!("family9 m={m}: FAIL ({failures} check(s) failed)");
        Err(CliError::Verification(format!(
            "family9 witness at m = {m} failed {failures} verification check(s)"
        )))
    }
}
