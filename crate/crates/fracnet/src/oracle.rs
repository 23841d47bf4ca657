//! Dense reference implementation of the counting schemes.
//!
//! This is the naive formula transcription: a triple loop over entity
//! pairs and publications, recomputing column sums on every step. It is
//! slow on purpose — auditable at a glance and structurally unrelated
//! to the sparse implementation in [`crate::counting`], which the tests
//! and the differential fuzz target compare against it.

// Index loops are the point here: the code should read like the
// formula, not like idiomatic matrix code.
#![allow(clippy::needless_range_loop)]

use crate::counting::{CountingScheme, DiagonalPolicy};

/// Compute the co-occurrence matrix of a dense occurrence matrix
/// (entities × publications) under the given scheme.
///
/// The diagonal policy is only honoured where the scheme leaves a
/// choice: the pair-normalized scheme (`Eq1`) never produces
/// self-links and the square-normalized scheme (`Eq2`) always keeps
/// them, because its unit-per-paper accounting needs the diagonal.
pub fn dense_cooccurrence(
    a: &[Vec<u32>],
    scheme: CountingScheme,
    policy: DiagonalPolicy,
) -> Vec<Vec<f64>> {
    let entities = a.len();
    let publications = a.first().map_or(0, Vec::len);
    let skip_diagonal = match scheme {
        CountingScheme::Eq1 => true,
        CountingScheme::Eq2 => false,
        CountingScheme::Full | CountingScheme::Eq3 => policy == DiagonalPolicy::Exclude,
    };

    let mut u = vec![vec![0.0; entities]; entities];
    for i in 0..entities {
        for j in 0..entities {
            if i == j && skip_diagonal {
                continue;
            }
            for k in 0..publications {
                let n_k: f64 = (0..entities).map(|r| f64::from(a[r][k])).sum();
                let weight = match scheme {
                    CountingScheme::Full => 1.0,
                    CountingScheme::Eq1 => {
                        if n_k < 2.0 {
                            continue;
                        }
                        1.0 / (n_k - 1.0)
                    }
                    CountingScheme::Eq2 => {
                        if n_k == 0.0 {
                            continue;
                        }
                        1.0 / (n_k * n_k)
                    }
                    CountingScheme::Eq3 => {
                        if n_k < 2.0 {
                            continue;
                        }
                        2.0 / (n_k * (n_k - 1.0))
                    }
                };
                u[i][j] += weight * f64::from(a[i][k]) * f64::from(a[j][k]);
            }
        }
    }
    u
}

/// Sum of all cells, optionally leaving out the diagonal.
pub fn dense_total(u: &[Vec<f64>], include_diagonal: bool) -> f64 {
    let mut total = 0.0;
    for (i, row) in u.iter().enumerate() {
        for (j, &value) in row.iter().enumerate() {
            if include_diagonal || i != j {
                total += value;
            }
        }
    }
    total
}
