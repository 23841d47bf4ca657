//! Writers for the computed networks: Pajek `.net` edge lists and a
//! dense CSV matrix view.
//!
//! The Pajek layout is the plain arc/edge list dialect: a `*Vertices E`
//! header, one `ordinal "label"` line per entity (1-based), then
//! `*Edges` followed by `i j weight` triples for the upper triangle.
//! Weights are written in fixed-point notation so files are identical
//! across runs and platforms.

use crate::counting::CoOccurrenceMatrix;
use crate::occurrence::EntityCatalog;
use crate::{Error, Result};

/// Rendering knobs for [`write_pajek`].
#[derive(Debug, Clone)]
pub struct PajekWriteOptions {
    /// Fixed-point digits after the decimal separator (1 through 12).
    pub weight_decimals: usize,
    /// Also write diagonal cells, as self-loop edges after the proper
    /// edges. Only meaningful for networks that kept their diagonal.
    pub emit_loops: bool,
}

impl Default for PajekWriteOptions {
    fn default() -> Self {
        PajekWriteOptions {
            weight_decimals: 6,
            emit_loops: false,
        }
    }
}

const MAX_WEIGHT_DECIMALS: usize = 12;

/// Render a co-occurrence network as a Pajek edge list.
pub fn write_pajek(
    catalog: &EntityCatalog,
    u: &CoOccurrenceMatrix,
    options: &PajekWriteOptions,
) -> Result<String> {
    let decimals = options.weight_decimals;
    if decimals == 0 || decimals > MAX_WEIGHT_DECIMALS {
        return Err(Error::InvalidConfig(format!(
            "weight decimals must be between 1 and {MAX_WEIGHT_DECIMALS}, got {decimals}"
        )));
    }
    if catalog.len() != u.num_entities() {
        return Err(Error::CatalogMismatch {
            catalog: catalog.len(),
            matrix: u.num_entities(),
        });
    }

    let mut out = String::new();
    out.push_str(&format!("*Vertices {}\n", catalog.len()));
    for (ordinal, label) in catalog.labels().iter().enumerate() {
        out.push_str(&format!("{} \"{}\"\n", ordinal + 1, quote_label(label)));
    }
    out.push_str("*Edges\n");
    for ((i, j), weight) in u.iter().filter(|&((i, j), _)| i != j) {
        out.push_str(&format!("{} {} {weight:.decimals$}\n", i + 1, j + 1));
    }
    if options.emit_loops {
        for ((i, _), weight) in u.iter().filter(|&((i, j), _)| i == j) {
            out.push_str(&format!("{0} {0} {weight:.decimals$}\n", i + 1));
        }
    }
    Ok(out)
}

/// Render the full symmetric matrix as CSV with labeled rows and
/// columns. Diagonal cells are zeroed unless `include_diagonal`.
pub fn write_matrix_csv(
    catalog: &EntityCatalog,
    u: &CoOccurrenceMatrix,
    include_diagonal: bool,
) -> Result<String> {
    if catalog.len() != u.num_entities() {
        return Err(Error::CatalogMismatch {
            catalog: catalog.len(),
            matrix: u.num_entities(),
        });
    }

    let mut out = String::new();
    for label in catalog.labels() {
        out.push(',');
        out.push_str(&csv_field(label));
    }
    out.push('\n');
    for i in 0..catalog.len() {
        out.push_str(&csv_field(catalog.label(i)));
        for j in 0..catalog.len() {
            let value = if i == j && !include_diagonal {
                0.0
            } else {
                u.get(i, j)
            };
            out.push_str(&format!(",{value:.6}"));
        }
        out.push('\n');
    }
    Ok(out)
}

/// Pajek labels are delimited by double quotes with no escape syntax;
/// embedded quotes are replaced by apostrophes.
fn quote_label(label: &str) -> String {
    label.replace('"', "'")
}

fn csv_field(value: &str) -> String {
    if value.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}
