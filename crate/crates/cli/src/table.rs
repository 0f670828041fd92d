//! The two-sequence table `(n, A_n, N_n)` with per-value provenance, its
//! CSV/JSON serializations, and the parallel builder.
//!
//! Provenance keeps enumeration results distinguishable from values derived
//! through the divisor-sum identities: the identities are themselves a test
//! target, so letting derived values fill the table silently would make the
//! checks circular.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use nsg_core::SearchContext;

use crate::error::{CliError, Result};
use crate::parallel;

pub const FORMAT_VERSION: u32 = 1;

/// How a table value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Enumerated,
    IdentityDerived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Enumerated => "enumerated",
            Provenance::IdentityDerived => "identity-derived",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "enumerated" => Some(Provenance::Enumerated),
            "identity-derived" => Some(Provenance::IdentityDerived),
            _ => None,
        }
    }
}

/// One table value with its provenance; `from_cache` marks values read back
/// from disk (displayed as "cached" without losing the underlying
/// provenance, so cache rewrites are byte-identical).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub value: u64,
    pub provenance: Provenance,
    pub from_cache: bool,
}

impl TableEntry {
    pub fn enumerated(value: u64) -> Self {
        TableEntry { value, provenance: Provenance::Enumerated, from_cache: false }
    }

    pub fn display_provenance(&self) -> &'static str {
        if self.from_cache {
            "cached"
        } else {
            self.provenance.as_str()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub n: u32,
    pub a: Option<TableEntry>,
    pub nf: Option<TableEntry>,
}

/// Rows sorted by `n`, one per class index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceTable {
    pub format_version: u32,
    pub rows: Vec<TableRow>,
}

impl SequenceTable {
    pub fn new() -> Self {
        SequenceTable { format_version: FORMAT_VERSION, rows: Vec::new() }
    }

    pub fn row(&self, n: u32) -> Option<&TableRow> {
        self.rows.binary_search_by_key(&n, |r| r.n).ok().map(|i| &self.rows[i])
    }

    pub fn a_map(&self) -> BTreeMap<u32, u64> {
        self.rows.iter().filter_map(|r| r.a.map(|e| (r.n, e.value))).collect()
    }

    pub fn n_map(&self) -> BTreeMap<u32, u64> {
        self.rows.iter().filter_map(|r| r.nf.map(|e| (r.n, e.value))).collect()
    }

    /// Structural invariants: sorted unique rows, and `A_n < N_n` whenever
    /// both values are present. The inequality is strict only from `n = 2`
    /// on: at `n = 1` the two classes are bijective and both counts are 1.
    pub fn validate(&self) -> Result<()> {
        for pair in self.rows.windows(2) {
            if pair[0].n >= pair[1].n {
                return Err(CliError::Verification(format!(
                    "table rows out of order at n = {}",
                    pair[1].n
                )));
            }
        }
        for row in &self.rows {
            if let (Some(a), Some(nf)) = (row.a, row.nf) {
                let ok = if row.n == 1 { a.value <= nf.value } else { a.value < nf.value };
                if !ok {
                    return Err(CliError::Verification(format!(
                        "row n = {}: A = {} is not below N = {}",
                        row.n, a.value, nf.value
                    )));
                }
            }
        }
        Ok(())
    }

    /// CSV with the version as a leading comment line:
    /// `n,A_n,N_n,provenance_A,provenance_N`, empty fields for absent values.
    pub fn to_csv(&self) -> String {
        let mut out = format!("# format_version={}\n", self.format_version);
        out.push_str("n,A_n,N_n,provenance_A,provenance_N\n");
        for row in &self.rows {
            let (a, pa) = match row.a {
                Some(e) => (e.value.to_string(), e.display_provenance().to_string()),
                None => (String::new(), String::new()),
            };
            let (nf, pn) = match row.nf {
                Some(e) => (e.value.to_string(), e.display_provenance().to_string()),
                None => (String::new(), String::new()),
            };
            out.push_str(&format!("{},{},{},{},{}\n", row.n, a, nf, pa, pn));
        }
        out
    }

    /// JSON object with the version first and an array of row objects using
    /// the same keys as the CSV header.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct JsonRow<'a> {
            n: u32,
            #[serde(rename = "A_n")]
            a_n: Option<u64>,
            #[serde(rename = "N_n")]
            n_n: Option<u64>,
            #[serde(rename = "provenance_A")]
            provenance_a: Option<&'a str>,
            #[serde(rename = "provenance_N")]
            provenance_n: Option<&'a str>,
        }
        #[derive(Serialize)]
        struct JsonTable<'a> {
            format_version: u32,
            rows: Vec<JsonRow<'a>>,
        }
        let t = JsonTable {
            format_version: self.format_version,
            rows: self
                .rows
                .iter()
                .map(|r| JsonRow {
                    n: r.n,
                    a_n: r.a.map(|e| e.value),
                    n_n: r.nf.map(|e| e.value),
                    provenance_a: r.a.map(|e| e.display_provenance()),
                    provenance_n: r.nf.map(|e| e.display_provenance()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&t).expect("table serialization cannot fail")
    }
}

impl Default for SequenceTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Fill rows `1..=max_n` by parallel enumeration, reusing any rows already
/// present (from a cache) that carry both values.
pub fn build(max_n: u32, mut seed: SequenceTable, ctx: &SearchContext<'_>) -> Result<SequenceTable> {
    let chunks = parallel::default_chunks();
    let have: BTreeMap<u32, TableRow> = seed
        .rows
        .drain(..)
        .filter(|r| r.n <= max_n && r.a.is_some() && r.nf.is_some())
        .map(|r| (r.n, r))
        .collect();
    let missing: Vec<u32> = (1..=max_n).filter(|n| !have.contains_key(n)).collect();
    // Enumerate the large classes first so the thread pool drains evenly.
    let mut order = missing.clone();
    order.sort_unstable_by(|a, b| b.cmp(a));
    let computed: Vec<(u32, (u64, u64))> = {
        use rayon::prelude::*;
        order
            .par_iter()
            .map(|&n| parallel::count_pair(n, chunks, ctx).map(|pair| (n, pair)))
            .collect::<nsg_core::Result<Vec<_>>>()?
    };
    let mut rows: BTreeMap<u32, TableRow> = have;
    for (n, (a, nf)) in computed {
        rows.insert(
            n,
            TableRow { n, a: Some(TableEntry::enumerated(a)), nf: Some(TableEntry::enumerated(nf)) },
        );
    }
    let table = SequenceTable {
        format_version: FORMAT_VERSION,
        rows: rows.into_values().collect(),
    };
    table.validate()?;
    Ok(table)
}
