//! Rayon drivers over disjoint search prefixes. Counts merge associatively,
//! so results are identical for any split width; visitors are fed in prefix
//! order, so streams reproduce the sequential canonical order exactly.

use std::collections::BTreeMap;

use rayon::prelude::*;

use nsg_core::enumerate::{
    count_candidate_partitioned, enumerate_candidate, split_for_parallel,
};
use nsg_core::{NumericalSemigroup, Result, SearchContext};

/// How many prefixes to split into: a few per thread keeps the work balanced
/// without oversplitting shallow searches.
pub fn default_chunks() -> usize {
    rayon::current_num_threads() * 4
}

/// Parallel version of the per-divisor class counts for Frobenius number `f`.
pub fn count_by_frobenius_partitioned(
    f: u32,
    chunks: usize,
    ctx: &SearchContext<'_>,
) -> Result<BTreeMap<u32, u64>> {
    let prefixes = split_for_parallel(f, chunks, ctx)?;
    let maps = prefixes
        .par_iter()
        .map(|c| count_candidate_partitioned(c, ctx))
        .collect::<Result<Vec<_>>>()?;
    let mut merged: BTreeMap<u32, u64> = BTreeMap::new();
    for m in maps {
        for (d, count) in m {
            *merged.entry(d).or_insert(0) += count;
        }
    }
    Ok(merged)
}

/// `(A_f, N_f)` in one parallel pass: the total class size and its unit-gcd
/// part, which is exactly the max-primitive count at `f`.
pub fn count_pair(f: u32, chunks: usize, ctx: &SearchContext<'_>) -> Result<(u64, u64)> {
    let by_d = count_by_frobenius_partitioned(f, chunks, ctx)?;
    let total: u64 = by_d.values().sum();
    let unit = by_d.get(&1).copied().unwrap_or(0);
    Ok((unit, total))
}

/// Enumerate the Frobenius-`f` class in parallel, invoking the visitor as a
/// single ordered stream (canonical order, same as the sequential route).
pub fn enumerate_by_frobenius_ordered<V>(
    f: u32,
    chunks: usize,
    ctx: &SearchContext<'_>,
    mut visit: V,
) -> Result<u64>
where
    V: FnMut(&NumericalSemigroup),
{
    let prefixes = split_for_parallel(f, chunks, ctx)?;
    let batches = prefixes
        .par_iter()
        .map(|c| {
            let mut batch = Vec::new();
            enumerate_candidate(c, ctx, |s| batch.push(s.clone()))?;
            Ok(batch)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut count = 0u64;
    for batch in batches {
        for s in batch {
            count += 1;
            visit(&s);
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use nsg_core::enumerate;

    #[test]
    fn split_widths_agree() {
        let ctx = SearchContext::unlimited();
        let sequential = enumerate::count_by_frobenius_partitioned(20, &ctx).unwrap();
        for chunks in [1usize, 2, 8, 64] {
            let par = count_by_frobenius_partitioned(20, chunks, &ctx).unwrap();
            assert_eq!(par, sequential, "chunks = {chunks}");
        }
        assert_eq!(sequential.values().sum::<u64>(), 900);
    }

    #[test]
    fn ordered_stream_matches_sequential() {
        let ctx = SearchContext::unlimited();
        let mut seq = Vec::new();
        enumerate::enumerate_by_frobenius(13, &ctx, |s| seq.push(s.canonical_key())).unwrap();
        let mut par = Vec::new();
        let n = enumerate_by_frobenius_ordered(13, 8, &ctx, |s| par.push(s.canonical_key())).unwrap();
        assert_eq!(n as usize, par.len());
        assert_eq!(par, seq);
    }

    #[test]
    fn count_pair_reads_table_columns() {
        let ctx = SearchContext::unlimited();
        assert_eq!(count_pair(12, 4, &ctx).unwrap(), (35, 40));
        assert_eq!(count_pair(23, 8, &ctx).unwrap(), (4095, 4096));
    }
}
