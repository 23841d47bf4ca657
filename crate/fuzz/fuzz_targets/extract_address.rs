//! Address decoding must not panic and must uphold its label
//! invariants: labels are non-empty, uppercase, comma-free, and a
//! trailing-USA segment always collapses to exactly "USA".

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(address) = std::str::from_utf8(data) else {
        return;
    };
    if let Some(country) = fracnet::extract_country(address) {
        assert!(!country.is_empty());
        assert!(!country.contains(','));
        assert_eq!(country, country.to_uppercase());
        assert!(
            country == "USA" || country.split_whitespace().next_back() != Some("USA"),
            "trailing USA token not collapsed in {country:?}"
        );
    }
    if let Some(institution) = fracnet::extract_institution(address) {
        assert!(!institution.is_empty());
        assert!(!institution.contains(','));
        assert_eq!(institution, institution.to_uppercase());
    }
});
