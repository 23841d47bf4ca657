//! Differential check: the sparse projection must agree with the dense
//! reference implementation on arbitrary small matrices, for every
//! scheme and diagonal policy.

#![no_main]

use fracnet::counting::{
    fractional_eq1, fractional_eq2, fractional_eq3, full_count, CountingScheme, DiagonalPolicy,
};
use fracnet::occurrence::OccurrenceMatrix;
use fracnet::oracle::dense_cooccurrence;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let [header_e, header_n, header_p, cells @ ..] = data else {
        return;
    };
    let entities = usize::from(header_e % 6) + 1;
    let publications = usize::from(header_n % 5) + 1;
    let policy = if header_p & 1 == 0 {
        DiagonalPolicy::Include
    } else {
        DiagonalPolicy::Exclude
    };
    if cells.len() < entities * publications {
        return;
    }
    let dense: Vec<Vec<u32>> = (0..entities)
        .map(|i| {
            (0..publications)
                .map(|k| u32::from(cells[i * publications + k] & 3))
                .collect()
        })
        .collect();

    let a = OccurrenceMatrix::from_dense(&dense);
    for scheme in [
        CountingScheme::Full,
        CountingScheme::Eq1,
        CountingScheme::Eq2,
        CountingScheme::Eq3,
    ] {
        let u = match scheme {
            CountingScheme::Full => full_count(&a, policy),
            CountingScheme::Eq1 => fractional_eq1(&a),
            CountingScheme::Eq2 => fractional_eq2(&a),
            CountingScheme::Eq3 => fractional_eq3(&a, policy),
        };
        let reference = dense_cooccurrence(&dense, scheme, policy);
        for (i, row) in reference.iter().enumerate() {
            for (j, &expected) in row.iter().enumerate() {
                assert!(
                    (u.get(i, j) - expected).abs() <= 1e-12,
                    "{scheme} cell ({i}, {j}): sparse {} vs dense {expected}",
                    u.get(i, j)
                );
            }
        }
    }
});
