//! Build one-mode co-occurrence networks from Web of Science plain-text exports.
//!
//! `fracnet` turns a tagged WoS export into a weighted network of authors,
//! institutions, or countries. The two-mode occurrence matrix `A`
//! (entities × publications) is projected onto a one-mode matrix `U` under
//! four counting schemes:
//!
//! - **full** — `U = A·Aᵀ`; every co-occurrence counts 1.
//! - **eq1** — each paper's links are divided by `n_k − 1`, where `n_k` is
//!   the paper's column size. The shrunken denominator corrects for the
//!   self-link.
//! - **eq2** — division by `n_k²`. With the diagonal kept, the grand total
//!   of the network equals the number of publications (the scheme is
//!   *consistent*).
//! - **eq3** — division by `n_k(n_k − 1)/2`, the number of unordered pairs;
//!   each multi-entity paper then distributes exactly one unit of edge mass
//!   over its pairs.
//!
//! Results are written as Pajek `.net` edge lists plus a JSON run report.
//! All outputs are byte-deterministic for a given input and configuration.
//!
//! ```no_run
//! use fracnet::{AggregationLevel, build_occurrence, fractional_eq2, parse_wos_export};
//!
//! let file = std::io::BufReader::new(std::fs::File::open("savedrecs.txt")?);
//! let records = parse_wos_export(file)?;
//! let build = build_occurrence(&records, AggregationLevel::Author);
//! let network = fractional_eq2(&build.matrix);
//! assert!((network.grand_total(true) - build.matrix.nonempty_column_count() as f64).abs() < 1e-9);
//! # Ok::<(), fracnet::Error>(())
//! ```

use std::path::PathBuf;

use thiserror::Error;

pub mod cli;
pub mod counting;
pub mod entity;
pub mod occurrence;
pub mod oracle;
pub mod pajek;
pub mod wos;

pub use counting::{
    consistency_report, fractional_eq1, fractional_eq2, fractional_eq3, full_count,
    CoOccurrenceMatrix, ConsistencyReport, CountingScheme, DiagonalPolicy, CONSISTENCY_TOLERANCE,
};
pub use entity::{
    extract_country, extract_entities, extract_institution, AggregationLevel, CountMode,
    ExtractedEntities,
};
pub use occurrence::{
    build_occurrence, fractionated_occurrence, EntityCatalog, FractionatedOccurrence,
    OccurrenceBuild, OccurrenceMatrix,
};
pub use pajek::{write_matrix_csv, write_pajek, PajekWriteOptions};
pub use wos::{parse_wos_export, parse_wos_str, serialize_records, PublicationRecord};

/// A specialized `Result` for fracnet operations.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced while parsing inputs or writing outputs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("cannot read input {}: {source}", path.display())]
    Input {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("cannot write output {}: {source}", path.display())]
    Output {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("input is not valid UTF-8 text at line {line}")]
    Decode { line: usize },

    #[error("malformed record starting at line {line}: missing ER terminator")]
    UnterminatedRecord { line: usize },

    #[error("{}: {source}", path.display())]
    InFile {
        path: PathBuf,
        #[source]
        source: Box<Error>,
    },

    #[error("entity catalog holds {catalog} labels but the matrix covers {matrix} entities")]
    CatalogMismatch { catalog: usize, matrix: usize },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error(transparent)]
    Usage(#[from] clap::Error),
}
