//! Extraction of network entities (authors, institutions, countries)
//! from parsed records.
//!
//! Institutions are the first comma-separated segment of an address,
//! countries the last. Author occurrence is always binary — a person
//! either wrote the paper or did not — while address-derived entities
//! can occur once per address, so institution and country extraction
//! carry a [`CountMode`] choosing between valued and binary cells.

use std::collections::BTreeMap;

use crate::wos::PublicationRecord;

/// How often an entity may be counted within one publication.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// Every qualifying address contributes one unit.
    Valued,
    /// Presence only: cell values are capped at 1.
    Binary,
}

/// Which kind of entity the network is built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AggregationLevel {
    Author,
    Institution(CountMode),
    Country(CountMode),
}

impl AggregationLevel {
    /// Short lowercase name used in reports and file headers.
    pub fn name(self) -> &'static str {
        match self {
            AggregationLevel::Author => "author",
            AggregationLevel::Institution(_) => "institution",
            AggregationLevel::Country(_) => "country",
        }
    }

    pub fn count_mode(self) -> CountMode {
        match self {
            AggregationLevel::Author => CountMode::Binary,
            AggregationLevel::Institution(mode) | AggregationLevel::Country(mode) => mode,
        }
    }
}

/// Entities found in one record, with per-record occurrence counts.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExtractedEntities {
    /// Sorted, deduplicated `(label, count)` pairs; counts are ≥ 1.
    pub entities: Vec<(String, u32)>,
    /// Addresses that yielded no entity at the requested level.
    pub skipped_addresses: usize,
}

/// Pull the entities of one record at the given aggregation level.
pub fn extract_entities(record: &PublicationRecord, level: AggregationLevel) -> ExtractedEntities {
    let mut counts: BTreeMap<String, u32> = BTreeMap::new();
    let mut skipped = 0usize;

    match level {
        AggregationLevel::Author => {
            for author in &record.authors {
                counts.insert(author.clone(), 1);
            }
        }
        AggregationLevel::Institution(_) => {
            for address in &record.addresses {
                match extract_institution(address) {
                    Some(label) => *counts.entry(label).or_insert(0) += 1,
                    None => skipped += 1,
                }
            }
        }
        AggregationLevel::Country(_) => {
            for address in &record.addresses {
                match extract_country(address) {
                    Some(label) => *counts.entry(label).or_insert(0) += 1,
                    None => skipped += 1,
                }
            }
        }
    }

    if level.count_mode() == CountMode::Binary {
        for count in counts.values_mut() {
            *count = 1;
        }
    }

    ExtractedEntities {
        entities: counts.into_iter().collect(),
        skipped_addresses: skipped,
    }
}

/// Institution label of an address: the first comma-separated segment,
/// uppercased. `None` when the segment is empty.
pub fn extract_institution(address: &str) -> Option<String> {
    let head = address.split(',').next().unwrap_or("").trim();
    if head.is_empty() {
        return None;
    }
    Some(head.to_uppercase())
}

/// Country label of an address: the last comma-separated segment with
/// the trailing period removed, uppercased. US addresses end in a state
/// and zip code before "USA" rather than a bare country name, so a last
/// segment whose final word is "USA" maps to "USA".
pub fn extract_country(address: &str) -> Option<String> {
    let tail = address.rsplit(',').next().unwrap_or("").trim();
    let tail = tail.strip_suffix('.').unwrap_or(tail).trim_end();
    if tail.is_empty() {
        return None;
    }
    let upper = tail.to_uppercase();
    if upper.split_whitespace().next_back() == Some("USA") {
        return Some("USA".to_string());
    }
    Some(upper)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(authors: &[&str], addresses: &[&str]) -> PublicationRecord {
        PublicationRecord {
            seq_id: 0,
            authors: authors.iter().map(|s| s.to_string()).collect(),
            addresses: addresses.iter().map(|s| s.to_string()).collect(),
            year: None,
            accession: None,
        }
    }

    #[test]
    fn country_extraction_cases() {
        let cases: [(&str, Option<&str>); 12] = [
            (
                "Univ Amsterdam, Amsterdam, Netherlands",
                Some("NETHERLANDS"),
            ),
            (
                "Univ Amsterdam, Amsterdam, Netherlands.",
                Some("NETHERLANDS"),
            ),
            (
                "Leiden Univ, NL-2300 Leiden, netherlands",
                Some("NETHERLANDS"),
            ),
            ("Yonsei Univ, Seoul, South Korea", Some("SOUTH KOREA")),
            ("Inst Sci Informat, Philadelphia, PA 19104 USA", Some("USA")),
            ("NIH, Bethesda, MD USA.", Some("USA")),
            ("Some Inst, Busan USA City, France", Some("FRANCE")),
            ("Single Segment", Some("SINGLE SEGMENT")),
            ("USA", Some("USA")),
            ("Univ X, City,", None),
            ("Univ X, City, .", None),
            ("", None),
        ];
        for (address, expected) in cases {
            assert_eq!(
                extract_country(address).as_deref(),
                expected,
                "address: {address:?}"
            );
        }
    }

    #[test]
    fn institution_extraction_cases() {
        assert_eq!(
            extract_institution("Univ Amsterdam, Amsterdam, Netherlands").as_deref(),
            Some("UNIV AMSTERDAM")
        );
        assert_eq!(
            extract_institution("  leiden univ , Leiden, Netherlands").as_deref(),
            Some("LEIDEN UNIV")
        );
        assert_eq!(
            extract_institution("Acad. Sci., Moscow, Russia").as_deref(),
            Some("ACAD. SCI.")
        );
        assert_eq!(extract_institution(", City, Country"), None);
        assert_eq!(extract_institution(""), None);
    }

    #[test]
    fn author_level_is_binary_and_sorted() {
        let rec = record(&["ZETA, A", "ALPHA, B", "ZETA, A"], &[]);
        let out = extract_entities(&rec, AggregationLevel::Author);
        assert_eq!(
            out.entities,
            vec![("ALPHA, B".to_string(), 1), ("ZETA, A".to_string(), 1)]
        );
        assert_eq!(out.skipped_addresses, 0);
    }

    #[test]
    fn valued_institution_counts_addresses() {
        let rec = record(
            &[],
            &[
                "Univ X, City, Country",
                "Univ X, Other City, Country",
                "Univ Y, Town, Nation",
            ],
        );
        let out = extract_entities(&rec, AggregationLevel::Institution(CountMode::Valued));
        assert_eq!(
            out.entities,
            vec![("UNIV X".to_string(), 2), ("UNIV Y".to_string(), 1)]
        );
    }

    #[test]
    fn binary_institution_caps_counts_at_one() {
        let rec = record(&[], &["Univ X, A, C", "Univ X, B, C"]);
        let out = extract_entities(&rec, AggregationLevel::Institution(CountMode::Binary));
        assert_eq!(out.entities, vec![("UNIV X".to_string(), 1)]);
    }

    #[test]
    fn valued_country_counts_addresses() {
        let rec = record(
            &[],
            &[
                "Univ X, Amsterdam, Netherlands",
                "Univ Y, Leiden, Netherlands",
                "Univ Z, Paris, France",
            ],
        );
        let out = extract_entities(&rec, AggregationLevel::Country(CountMode::Valued));
        assert_eq!(
            out.entities,
            vec![("FRANCE".to_string(), 1), ("NETHERLANDS".to_string(), 2)]
        );
    }

    #[test]
    fn unusable_addresses_are_counted_not_dropped_silently() {
        let rec = record(&[], &["Univ X, City,", "Univ Y, Town, Nation"]);
        let out = extract_entities(&rec, AggregationLevel::Country(CountMode::Valued));
        assert_eq!(out.entities, vec![("NATION".to_string(), 1)]);
        assert_eq!(out.skipped_addresses, 1);
    }

    #[test]
    fn empty_record_yields_no_entities() {
        let rec = record(&[], &[]);
        for level in [
            AggregationLevel::Author,
            AggregationLevel::Institution(CountMode::Valued),
            AggregationLevel::Country(CountMode::Binary),
        ] {
            let out = extract_entities(&rec, level);
            assert!(out.entities.is_empty());
            assert_eq!(out.skipped_addresses, 0);
        }
    }

    #[test]
    fn level_names_and_modes() {
        assert_eq!(AggregationLevel::Author.name(), "author");
        assert_eq!(
            AggregationLevel::Institution(CountMode::Valued).name(),
            "institution"
        );
        assert_eq!(
            AggregationLevel::Country(CountMode::Binary).name(),
            "country"
        );
        assert_eq!(AggregationLevel::Author.count_mode(), CountMode::Binary);
        assert_eq!(
            AggregationLevel::Country(CountMode::Valued).count_mode(),
            CountMode::Valued
        );
    }
}
