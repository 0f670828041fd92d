//! Persistent sequence cache: line-oriented text, human-diffable and
//! corruption-evident.
//!
//! Each line is `n <tab> A_n <tab> N_n <tab> provenance <tab> crc32`, where
//! the checksum covers the first four fields (tab-joined). Unknown or
//! damaged lines reject the whole file. Writes go through a temp file and an
//! atomic rename.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{CliError, Result};
use crate::table::{Provenance, SequenceTable, TableEntry, TableRow, FORMAT_VERSION};

fn line_crc(payload: &str) -> u32 {
    crc32fast::hash(payload.as_bytes())
}

/// Read a cache file into table rows. Values come back flagged `from_cache`,
/// keeping their stored provenance for byte-identical rewrites.
pub fn load(path: &Path) -> Result<SequenceTable> {
    let text = fs::read_to_string(path)?;
    let mut rows: Vec<TableRow> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let corrupt = |reason: &str| {
            CliError::CacheCorrupt(format!("{}:{}: {}", path.display(), lineno, reason))
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != 5 {
            return Err(corrupt("expected 5 tab-separated fields"));
        }
        let payload_len = line.len() - fields[4].len() - 1;
        let payload = &line[..payload_len];
        let stored_crc = u32::from_str_radix(fields[4], 16)
            .map_err(|_| corrupt("checksum is not hexadecimal"))?;
        if line_crc(payload) != stored_crc {
            return Err(corrupt("checksum mismatch"));
        }
        let n: u32 = fields[0].parse().map_err(|_| corrupt("bad index"))?;
        let a: u64 = fields[1].parse().map_err(|_| corrupt("bad A value"))?;
        let nf: u64 = fields[2].parse().map_err(|_| corrupt("bad N value"))?;
        let provenance =
            Provenance::parse(fields[3]).ok_or_else(|| corrupt("unknown provenance"))?;
        if rows.iter().any(|r| r.n == n) {
            return Err(corrupt("duplicate index"));
        }
        rows.push(TableRow {
            n,
            a: Some(TableEntry { value: a, provenance, from_cache: true }),
            nf: Some(TableEntry { value: nf, provenance, from_cache: true }),
        });
    }
    rows.sort_by_key(|r| r.n);
    Ok(SequenceTable { format_version: FORMAT_VERSION, rows })
}

/// Write rows with both values present; temp file plus rename keeps readers
/// from ever seeing a half-written cache.
pub fn store(path: &Path, table: &SequenceTable) -> Result<()> {
    let mut text = String::new();
    for row in &table.rows {
        let (Some(a), Some(nf)) = (row.a, row.nf) else {
            continue;
        };
        // A row that mixes provenance cannot be represented; keep the cache
        // strictly for enumerated pairs.
        let prov = a.provenance;
        if nf.provenance != prov {
            continue;
        }
        let payload = format!("{}\t{}\t{}\t{}", row.n, a.value, nf.value, prov.as_str());
        text.push_str(&format!("{}\t{:08x}\n", payload, line_crc(&payload)));
    }
    let tmp = path.with_extension("tmp");
    {
        let mut file = fs::File::create(&tmp)?;
        file.write_all(text.as_bytes())?;
        file.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table;
    use nsg_core::SearchContext;

    #[test]
    fn round_trip_preserves_table() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.cache");
        let ctx = SearchContext::unlimited();
        let t = table::build(10, SequenceTable::new(), &ctx).unwrap();
        store(&path, &t).unwrap();
        let back = load(&path).unwrap();
        assert_eq!(back.a_map(), t.a_map());
        assert_eq!(back.n_map(), t.n_map());
        assert!(back.rows.iter().all(|r| r.a.unwrap().from_cache));
        // rewrite of loaded rows is byte-identical
        let before = fs::read(&path).unwrap();
        store(&path, &back).unwrap();
        assert_eq!(fs::read(&path).unwrap(), before);
    }

    #[test]
    fn corruption_is_detected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.cache");
        let ctx = SearchContext::unlimited();
        let t = table::build(5, SequenceTable::new(), &ctx).unwrap();
        store(&path, &t).unwrap();
        let mut text = fs::read_to_string(&path).unwrap();
        text = text.replacen("\t1\t1\t", "\t2\t1\t", 1); // flip a digit, keep the crc
        fs::write(&path, text).unwrap();
        assert!(matches!(load(&path), Err(CliError::CacheCorrupt(_))));
    }

    #[test]
    fn unknown_lines_are_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("seq.cache");
        fs::write(&path, "# a comment\n").unwrap();
        assert!(matches!(load(&path), Err(CliError::CacheCorrupt(_))));
    }
}
