//! Projection of the occurrence matrix into one-mode co-occurrence
//! networks under full and fractional counting.
//!
//! All schemes compute `u_ij = Σ_k w(n_k) · a_ik · a_jk`, where `n_k`
//! is the column sum of publication `k`; they differ only in the column
//! weight:
//!
//! * `full` — `w = 1`; a pair gains one per shared paper.
//! * `eq1`  — `w = 1/(n_k − 1)`; row totals of a binary matrix then
//!   reproduce each entity's number of co-authored papers. Self-links
//!   would make the denominator count the entity itself, so the
//!   diagonal is always dropped.
//! * `eq2`  — `w = 1/n_k²`; every paper distributes exactly one unit
//!   over the full block including the diagonal, so the grand total
//!   equals the number of contributing papers. The diagonal is part of
//!   that accounting and is always kept.
//! * `eq3`  — `w = 2/(n_k (n_k − 1))`; every multi-entity paper
//!   distributes one unit over its unordered off-diagonal pairs.
//!
//! Columns where the weight is undefined (`n_k < 2` for `eq1`/`eq3`,
//! empty ones for `eq2`) are skipped.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::occurrence::OccurrenceMatrix;

/// Absolute tolerance used when checking a grand total against its
/// analytic expectation.
pub const CONSISTENCY_TOLERANCE: f64 = 1e-9;

/// The four ways of weighting a shared publication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CountingScheme {
    Full,
    Eq1,
    Eq2,
    Eq3,
}

impl CountingScheme {
    pub fn name(self) -> &'static str {
        match self {
            CountingScheme::Full => "full",
            CountingScheme::Eq1 => "eq1",
            CountingScheme::Eq2 => "eq2",
            CountingScheme::Eq3 => "eq3",
        }
    }

    /// Conventional output file name for this scheme's network.
    pub fn output_filename(self) -> &'static str {
        match self {
            CountingScheme::Full => "mtrx.net",
            CountingScheme::Eq1 => "fmtrx1.net",
            CountingScheme::Eq2 => "fmtrx2.net",
            CountingScheme::Eq3 => "fmtrx3.net",
        }
    }

    /// Whether the scheme lets the caller choose the diagonal policy.
    pub fn diagonal_is_free(self) -> bool {
        matches!(self, CountingScheme::Full | CountingScheme::Eq3)
    }
}

impl std::fmt::Display for CountingScheme {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether self-links (diagonal cells) are materialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalPolicy {
    Include,
    Exclude,
}

/// Symmetric co-occurrence matrix, stored as its upper triangle.
///
/// Only nonzero cells are kept, keyed by `(i, j)` with `i ≤ j`.
#[derive(Debug, Clone)]
pub struct CoOccurrenceMatrix {
    weights: BTreeMap<(usize, usize), f64>,
    scheme: CountingScheme,
    diagonal_policy: DiagonalPolicy,
    num_entities: usize,
}

impl CoOccurrenceMatrix {
    pub fn scheme(&self) -> CountingScheme {
        self.scheme
    }

    pub fn diagonal_policy(&self) -> DiagonalPolicy {
        self.diagonal_policy
    }

    pub fn num_entities(&self) -> usize {
        self.num_entities
    }

    /// Cell value, symmetric in its arguments.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.weights.get(&key).copied().unwrap_or(0.0)
    }

    /// Stored (nonzero, upper-triangle) cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), f64)> + '_ {
        self.weights.iter().map(|(&key, &weight)| (key, weight))
    }

    /// Number of stored cells.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Sum over the full symmetric matrix: off-diagonal cells count
    /// twice, diagonal cells once (when requested).
    pub fn grand_total(&self, include_diagonal: bool) -> f64 {
        let mut total = 0.0;
        for (&(i, j), &weight) in &self.weights {
            if i == j {
                if include_diagonal {
                    total += weight;
                }
            } else {
                total += 2.0 * weight;
            }
        }
        total
    }

    /// Row sums of the full symmetric matrix.
    pub fn row_totals(&self, include_diagonal: bool) -> Vec<f64> {
        let mut totals = vec![0.0; self.num_entities];
        for (&(i, j), &weight) in &self.weights {
            if i == j {
                if include_diagonal {
                    totals[i] += weight;
                }
            } else {
                totals[i] += weight;
                totals[j] += weight;
            }
        }
        totals
    }
}

/// Shared projection kernel. `column_weight` maps a column sum to the
/// scheme's weight, or `None` to skip the column; enumeration order
/// (columns ascending, ordered pairs within each column) is fixed so
/// repeated runs accumulate identically.
fn project<F>(
    a: &OccurrenceMatrix,
    scheme: CountingScheme,
    policy: DiagonalPolicy,
    column_weight: F,
) -> CoOccurrenceMatrix
where
    F: Fn(u32) -> Option<f64>,
{
    let mut weights: BTreeMap<(usize, usize), f64> = BTreeMap::new();
    for k in 0..a.num_publications() {
        let Some(weight) = column_weight(a.column_size(k)) else {
            continue;
        };
        let column = a.column(k);
        for (p, &(i, count_i)) in column.iter().enumerate() {
            for &(j, count_j) in &column[p..] {
                if i == j && policy == DiagonalPolicy::Exclude {
                    continue;
                }
                *weights.entry((i, j)).or_insert(0.0) +=
                    weight * f64::from(count_i) * f64::from(count_j);
            }
        }
    }
    CoOccurrenceMatrix {
        weights,
        scheme,
        diagonal_policy: policy,
        num_entities: a.num_entities(),
    }
}

/// Full counting: `u_ij = Σ_k a_ik a_jk`, the product of the matrix
/// with its own transpose.
pub fn full_count(a: &OccurrenceMatrix, policy: DiagonalPolicy) -> CoOccurrenceMatrix {
    project(a, CountingScheme::Full, policy, |_| Some(1.0))
}

/// Fractional counting with weight `1/(n_k − 1)`.
///
/// The diagonal is dropped unconditionally: with self-links the
/// denominator would have to exclude the entity itself to keep the row
/// totals meaningful, so the scheme is defined without them.
pub fn fractional_eq1(a: &OccurrenceMatrix) -> CoOccurrenceMatrix {
    project(a, CountingScheme::Eq1, DiagonalPolicy::Exclude, |n| {
        (n >= 2).then(|| 1.0 / f64::from(n - 1))
    })
}

/// Fractional counting with weight `1/n_k²`.
///
/// Each publication's block sums to exactly one, which requires the
/// diagonal; it is therefore always included.
pub fn fractional_eq2(a: &OccurrenceMatrix) -> CoOccurrenceMatrix {
    project(a, CountingScheme::Eq2, DiagonalPolicy::Include, |n| {
        (n >= 1).then(|| 1.0 / (f64::from(n) * f64::from(n)))
    })
}

/// Fractional counting with weight `2/(n_k (n_k − 1))`: one unit per
/// publication spread over its unordered pairs.
pub fn fractional_eq3(a: &OccurrenceMatrix, policy: DiagonalPolicy) -> CoOccurrenceMatrix {
    project(a, CountingScheme::Eq3, policy, |n| {
        (n >= 2).then(|| 2.0 / (f64::from(n) * f64::from(n - 1)))
    })
}

/// Totals of one network next to the closed-form value its scheme
/// should reach, where one exists.
#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub scheme: CountingScheme,
    pub grand_total_with_diagonal: f64,
    pub grand_total_off_diagonal: f64,
    /// Row sums (diagonal included only when the network keeps it).
    pub row_totals: Vec<f64>,
    /// The analytically expected total, when the scheme admits one.
    pub analytic_expectation: Option<f64>,
    /// True when no expectation applies or the observed total is
    /// within [`CONSISTENCY_TOLERANCE`] of it.
    pub matches: bool,
}

/// Check a network's totals against its scheme's closed form.
///
/// * `eq2`: the grand total with diagonal must equal the number of
///   nonempty columns — every paper hands out exactly one unit. This
///   holds for valued and binary matrices alike.
/// * `eq1`, binary matrices only: the off-diagonal total must equal
///   the number of occurrences in multi-entity columns, `Σ n_k` over
///   columns with `n_k ≥ 2`.
/// * `eq3`, binary matrices only: the off-diagonal total must equal
///   twice the number of multi-entity columns.
/// * `full` (and valued `eq1`/`eq3`): no closed form; the report only
///   records the totals.
pub fn consistency_report(a: &OccurrenceMatrix, u: &CoOccurrenceMatrix) -> ConsistencyReport {
    let grand_total_with_diagonal = u.grand_total(true);
    let grand_total_off_diagonal = u.grand_total(false);
    let row_totals = u.row_totals(u.diagonal_policy() == DiagonalPolicy::Include);

    let expectation = match u.scheme() {
        CountingScheme::Eq2 => Some((a.nonempty_column_count() as f64, grand_total_with_diagonal)),
        CountingScheme::Eq1 if a.is_binary() => {
            let units: f64 = (0..a.num_publications())
                .map(|k| a.column_size(k))
                .filter(|&n| n >= 2)
                .map(f64::from)
                .sum();
            Some((units, grand_total_off_diagonal))
        }
        CountingScheme::Eq3 if a.is_binary() => Some((
            2.0 * a.multi_entity_column_count() as f64,
            grand_total_off_diagonal,
        )),
        _ => None,
    };

    let (analytic_expectation, matches) = match expectation {
        Some((expected, observed)) => (
            Some(expected),
            (observed - expected).abs() <= CONSISTENCY_TOLERANCE,
        ),
        None => (None, true),
    };

    ConsistencyReport {
        scheme: u.scheme(),
        grand_total_with_diagonal,
        grand_total_off_diagonal,
        row_totals,
        analytic_expectation,
        matches,
    }
}
