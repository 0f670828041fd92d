//! Per-semigroup output records for the list command: one schema across the
//! JSON and CSV encodings.

use serde::{Deserialize, Serialize};

use nsg_core::wilf::wilf_check;
use nsg_core::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    /// Minimal generators, ascending.
    pub generators: Vec<u32>,
    pub frobenius: i64,
    pub genus: u64,
    pub multiplicity: u32,
    pub embedding_dim: u64,
    /// `ceil((F+1)/m)`; 0 for the full semigroup.
    pub depth: u32,
    pub pdepth: u32,
    pub left_count: u64,
    pub wilf_holds: bool,
    pub max_embedding_dim: bool,
    pub sqrt3m_criterion: bool,
}

impl OutputRecord {
    pub fn from_semigroup(s: &NumericalSemigroup) -> Self {
        let w = wilf_check(s);
        OutputRecord {
            generators: s.minimal_generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            multiplicity: s.multiplicity(),
            embedding_dim: s.embedding_dim(),
            depth: w.depth,
            pdepth: s.primitive_depth(),
            left_count: w.left_count,
            wilf_holds: w.wilf_holds,
            max_embedding_dim: w.max_embedding_dim,
            sqrt3m_criterion: w.sqrt3m_criterion,
        }
    }

    pub fn csv_header() -> &'static str {
        "generators,frobenius,genus,multiplicity,embedding_dim,depth,pdepth,left_count,\
         wilf_holds,max_embedding_dim,sqrt3m_criterion"
    }

    /// Generators are space-separated inside their single CSV field.
    pub fn to_csv_row(&self) -> String {
        let gens = self
            .generators
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            gens,
            self.frobenius,
            self.genus,
            self.multiplicity,
            self.embedding_dim,
            self.depth,
            self.pdepth,
            self.left_count,
            self.wilf_holds,
            self.max_embedding_dim,
            self.sqrt3m_criterion
        )
    }

    pub fn to_gens_line(&self) -> String {
        self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nsg_core::{EnumerationBudget, GeneratorSet};

    fn sg(gens: &[u32]) -> NumericalSemigroup {
        let g = GeneratorSet::new(gens.iter().copied()).unwrap();
        NumericalSemigroup::from_generators(&g, &EnumerationBudget::unlimited()).unwrap()
    }

    #[test]
    fn record_fields() {
        let r = OutputRecord::from_semigroup(&sg(&[6, 7, 8]));
        assert_eq!(r.generators, vec![6, 7, 8]);
        assert_eq!(r.frobenius, 17);
        assert_eq!(r.genus, 9);
        assert_eq!((r.depth, r.pdepth), (3, 2));
        assert_eq!(r.left_count, 9);
        assert!(r.wilf_holds);
        assert_eq!(r.to_gens_line(), "6 7 8");
    }

    #[test]
    fn naturals_record() {
        let r = OutputRecord::from_semigroup(&NumericalSemigroup::naturals());
        assert_eq!(r.generators, vec![1]);
        assert_eq!(r.frobenius, -1);
        assert_eq!((r.depth, r.pdepth), (0, 1));
    }

    #[test]
    fn json_round_trip() {
        let r = OutputRecord::from_semigroup(&sg(&[3, 5, 7]));
        let json = serde_json::to_string(&r).unwrap();
        let back: OutputRecord = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn csv_row_column_count() {
        let r = OutputRecord::from_semigroup(&sg(&[3, 5, 7]));
        assert_eq!(r.to_csv_row().split(',').count(), OutputRecord::csv_header().split(',').count());
    }
}
