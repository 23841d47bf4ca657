//! Parsing is idempotent on the retained fields: whatever records come
//! out of a successful parse, serializing and re-parsing them must
//! yield the same records.

#![no_main]

use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(records) = fracnet::parse_wos_str(text) else {
        return;
    };
    let serialized = fracnet::serialize_records(&records);
    let reparsed = fracnet::parse_wos_str(&serialized).expect("serialized records must parse");
    assert_eq!(
        records, reparsed,
        "parse -> serialize -> parse changed the records"
    );
});
