//! The occurrence matrix: entities in rows, publications in columns.
//!
//! Cell `a_ik` holds how often entity `i` occurs in publication `k`.
//! The matrix is stored by column as sparse `(row, count)` pairs, since
//! a publication touches few of the entities in a large corpus. Columns
//! of publications that yielded no entity are kept (empty), so column
//! `k` is always the record with sequence id `k`.

use std::collections::HashMap;

use crate::entity::{extract_entities, AggregationLevel};
use crate::wos::PublicationRecord;

/// Entity labels in order of first appearance, with a reverse index.
#[derive(Debug, Clone, Default)]
pub struct EntityCatalog {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl EntityCatalog {
    pub fn new() -> Self {
        Self::default()
    }

    /// Ordinal of `label`, assigning the next free one if unseen.
    pub fn intern(&mut self, label: &str) -> usize {
        if let Some(&ordinal) = self.index.get(label) {
            return ordinal;
        }
        let ordinal = self.labels.len();
        self.labels.push(label.to_string());
        self.index.insert(label.to_string(), ordinal);
        ordinal
    }

    pub fn get(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn label(&self, ordinal: usize) -> &str {
        &self.labels[ordinal]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Sparse entity × publication count matrix.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OccurrenceMatrix {
    /// Per publication: `(entity ordinal, count)` pairs, ordinal-sorted.
    columns: Vec<Vec<(usize, u32)>>,
    /// Column sums `n_k`, the number of occurrences in publication `k`.
    column_sizes: Vec<u32>,
    num_entities: usize,
}

impl OccurrenceMatrix {
    pub fn num_entities(&self) -> usize {
        self.num_entities
    }

    pub fn num_publications(&self) -> usize {
        self.columns.len()
    }

    /// Entries of column `k`, sorted by entity ordinal.
    pub fn column(&self, k: usize) -> &[(usize, u32)] {
        &self.columns[k]
    }

    /// Column sum `n_k`.
    pub fn column_size(&self, k: usize) -> u32 {
        self.column_sizes[k]
    }

    pub fn entry(&self, i: usize, k: usize) -> u32 {
        self.columns[k]
            .binary_search_by_key(&i, |&(row, _)| row)
            .map(|pos| self.columns[k][pos].1)
            .unwrap_or(0)
    }

    /// True when every stored cell equals one.
    pub fn is_binary(&self) -> bool {
        self.columns.iter().flatten().all(|&(_, count)| count == 1)
    }

    /// Publications that contributed no occurrence at all.
    pub fn empty_column_count(&self) -> usize {
        self.column_sizes.iter().filter(|&&n| n == 0).count()
    }

    pub fn nonempty_column_count(&self) -> usize {
        self.num_publications() - self.empty_column_count()
    }

    /// Publications with at least two distinct entities — the only ones
    /// that can generate co-occurrence.
    pub fn multi_entity_column_count(&self) -> usize {
        self.columns.iter().filter(|col| col.len() >= 2).count()
    }

    /// Grand total of the matrix, `Σ_k n_k`.
    pub fn total_units(&self) -> u64 {
        self.column_sizes.iter().map(|&n| u64::from(n)).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<u32>> {
        let mut dense = vec![vec![0; self.num_publications()]; self.num_entities];
        for (k, column) in self.columns.iter().enumerate() {
            for &(i, count) in column {
                dense[i][k] = count;
            }
        }
        dense
    }

    /// Build from a dense row-major matrix (entities × publications).
    /// Rows must all have the same length.
    pub fn from_dense(dense: &[Vec<u32>]) -> Self {
        let num_publications = dense.first().map_or(0, Vec::len);
        assert!(
            dense.iter().all(|row| row.len() == num_publications),
            "rows must have equal length"
        );
        let mut columns = vec![Vec::new(); num_publications];
        let mut column_sizes = vec![0u32; num_publications];
        for (i, row) in dense.iter().enumerate() {
            for (k, &count) in row.iter().enumerate() {
                if count > 0 {
                    columns[k].push((i, count));
                    column_sizes[k] += count;
                }
            }
        }
        OccurrenceMatrix {
            columns,
            column_sizes,
            num_entities: dense.len(),
        }
    }
}

/// Occurrence matrix plus the label catalog it is indexed by.
#[derive(Debug, Clone, Default)]
pub struct OccurrenceBuild {
    pub catalog: EntityCatalog,
    pub matrix: OccurrenceMatrix,
    /// Addresses across all records that yielded no entity.
    pub skipped_addresses: usize,
}

/// Build the occurrence matrix over `records` at the given level.
/// Column `k` corresponds to `records[k]`.
pub fn build_occurrence(records: &[PublicationRecord], level: AggregationLevel) -> OccurrenceBuild {
    let mut catalog = EntityCatalog::new();
    let mut columns = Vec::with_capacity(records.len());
    let mut column_sizes = Vec::with_capacity(records.len());
    let mut skipped = 0usize;

    for record in records {
        let extracted = extract_entities(record, level);
        skipped += extracted.skipped_addresses;
        let mut column: Vec<(usize, u32)> = extracted
            .entities
            .iter()
            .map(|(label, count)| (catalog.intern(label), *count))
            .collect();
        column.sort_unstable_by_key(|&(ordinal, _)| ordinal);
        column_sizes.push(column.iter().map(|&(_, count)| count).sum());
        columns.push(column);
    }

    let num_entities = catalog.len();
    OccurrenceBuild {
        catalog,
        matrix: OccurrenceMatrix {
            columns,
            column_sizes,
            num_entities,
        },
        skipped_addresses: skipped,
    }
}

/// Column-normalized occurrence matrix: `f_ik = a_ik / n_k`.
///
/// Each publication distributes one unit of credit over its
/// occurrences, so every nonempty column sums to one and the grand
/// total equals the number of nonempty columns.
#[derive(Debug, Clone, Default)]
pub struct FractionatedOccurrence {
    columns: Vec<Vec<(usize, f64)>>,
    num_entities: usize,
}

impl FractionatedOccurrence {
    pub fn num_entities(&self) -> usize {
        self.num_entities
    }

    pub fn num_publications(&self) -> usize {
        self.columns.len()
    }

    pub fn entry(&self, i: usize, k: usize) -> f64 {
        self.columns[k]
            .binary_search_by_key(&i, |&(row, _)| row)
            .map(|pos| self.columns[k][pos].1)
            .unwrap_or(0.0)
    }

    /// Per-column totals; one for every nonempty column.
    pub fn column_sums(&self) -> Vec<f64> {
        self.columns
            .iter()
            .map(|col| col.iter().map(|&(_, f)| f).sum())
            .collect()
    }

    /// Per-entity totals — each entity's share of the corpus.
    pub fn row_totals(&self) -> Vec<f64> {
        let mut totals = vec![0.0; self.num_entities];
        for column in &self.columns {
            for &(i, f) in column {
                totals[i] += f;
            }
        }
        totals
    }
}

pub fn fractionated_occurrence(matrix: &OccurrenceMatrix) -> FractionatedOccurrence {
    let columns = (0..matrix.num_publications())
        .map(|k| {
            let n_k = matrix.column_size(k);
            if n_k == 0 {
                return Vec::new();
            }
            matrix
                .column(k)
                .iter()
                .map(|&(i, count)| (i, f64::from(count) / f64::from(n_k)))
                .collect()
        })
        .collect();
    FractionatedOccurrence {
        columns,
        num_entities: matrix.num_entities(),
    }
}
