//! Streaming parser for Web of Science tagged plain-text exports.
//!
//! The format is line-oriented: a two-character field tag in columns 1–2,
//! a space separator, then the value. Continuation lines start with three
//! spaces and extend the preceding tag. `ER` terminates a record, `EF`
//! terminates the file. Only the tags needed for network construction are
//! kept (`AU`, `C1`, `RP`, `PY`, `UT`); everything else is skipped.

use std::io::BufRead;

use crate::{Error, Result};

/// One parsed bibliographic record.
///
/// `seq_id` is the zero-based ordinal of the record within the ingestion
/// run; it later becomes the publication's column index in the occurrence
/// matrix. Author labels are normalized (uppercase, single internal
/// spaces, no trailing periods). Addresses are kept as raw strings, one
/// per `C1`/`RP` line, with any leading bracketed author list removed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PublicationRecord {
    pub seq_id: usize,
    pub authors: Vec<String>,
    pub addresses: Vec<String>,
    pub year: Option<i32>,
    pub accession: Option<String>,
}

/// Placeholder author label that WoS assigns to anonymous works. It is
/// dropped so it never becomes a collaborating entity.
const ANONYMOUS: &str = "[ANONYMOUS]";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FieldTag {
    Author,
    Address,
    Reprint,
    Year,
    Accession,
    Other,
}

impl FieldTag {
    fn recognized(self) -> bool {
        !matches!(self, FieldTag::Other)
    }
}

/// Parse a WoS plain-text export from a buffered reader.
///
/// Parsing is single-pass; memory use is bounded by the largest record
/// plus the output list. A leading UTF-8 byte-order mark and CRLF line
/// endings are tolerated. Content after the `EF` marker is ignored.
pub fn parse_wos_export<R: BufRead>(mut input: R) -> Result<Vec<PublicationRecord>> {
    let mut records = Vec::new();
    let mut current = PublicationRecord::default();
    // Line at which the open record's first recognized field appeared;
    // None while no parsed data would be lost by truncation.
    let mut open_at: Option<usize> = None;
    let mut current_tag: Option<FieldTag> = None;
    let mut line_no = 0usize;
    let mut buf = Vec::new();

    loop {
        buf.clear();
        let read = input.read_until(b'\n', &mut buf)?;
        if read == 0 {
            break;
        }
        line_no += 1;

        let mut line = std::str::from_utf8(&buf)
            .map_err(|_| Error::Decode { line: line_no })?
            .trim_end_matches(['\n', '\r']);
        if line_no == 1 {
            line = line.strip_prefix('\u{feff}').unwrap_or(line);
        }

        if line.trim().is_empty() {
            // Blank lines are tolerated anywhere; they only close the
            // continuation context.
            current_tag = None;
            continue;
        }

        if line.starts_with(char::is_whitespace) {
            // Continuation of the previous tag. Continuations with no
            // active tag (or an unrecognized one) are skipped.
            let value = line.strip_prefix("   ").unwrap_or(line).trim();
            if let Some(tag) = current_tag {
                if tag.recognized() {
                    open_at.get_or_insert(line_no);
                    apply_field(&mut current, tag, value);
                }
            }
            continue;
        }

        let (tag_text, value) = match split_tag_line(line) {
            Some(parts) => parts,
            None => {
                // Does not follow the tag grammar; skip it and anything
                // continuing it.
                current_tag = Some(FieldTag::Other);
                continue;
            }
        };

        match tag_text {
            "ER" => {
                // Every ER closes a record, even one without recognized
                // fields; downstream decides what to do with empty ones.
                current.seq_id = records.len();
                records.push(std::mem::take(&mut current));
                open_at = None;
                current_tag = None;
            }
            "EF" => {
                if let Some(line) = open_at {
                    return Err(Error::UnterminatedRecord { line });
                }
                return Ok(records);
            }
            _ => {
                let tag = match tag_text {
                    "AU" => FieldTag::Author,
                    "C1" => FieldTag::Address,
                    "RP" => FieldTag::Reprint,
                    "PY" => FieldTag::Year,
                    "UT" => FieldTag::Accession,
                    _ => FieldTag::Other,
                };
                current_tag = Some(tag);
                if tag.recognized() {
                    open_at.get_or_insert(line_no);
                    apply_field(&mut current, tag, value);
                }
            }
        }
    }

    if let Some(line) = open_at {
        return Err(Error::UnterminatedRecord { line });
    }
    Ok(records)
}

/// Parse a WoS export held in memory. See [`parse_wos_export`].
pub fn parse_wos_str(input: &str) -> Result<Vec<PublicationRecord>> {
    parse_wos_export(input.as_bytes())
}

/// Render records back into the tagged format (retained fields only).
///
/// Useful for building fixtures; parsing the output reproduces the input
/// records because author normalization and bracket stripping are
/// idempotent.
pub fn serialize_records(records: &[PublicationRecord]) -> String {
    let mut out = String::new();
    for record in records {
        for (i, author) in record.authors.iter().enumerate() {
            if i == 0 {
                out.push_str("AU ");
            } else {
                out.push_str("   ");
            }
            out.push_str(author);
            out.push('\n');
        }
        for (i, address) in record.addresses.iter().enumerate() {
            if i == 0 {
                out.push_str("C1 ");
            } else {
                out.push_str("   ");
            }
            out.push_str(address);
            out.push('\n');
        }
        if let Some(year) = record.year {
            out.push_str(&format!("PY {year}\n"));
        }
        if let Some(accession) = &record.accession {
            out.push_str(&format!("UT {accession}\n"));
        }
        out.push_str("ER\n");
    }
    out.push_str("EF\n");
    out
}

/// Split a non-continuation line into its two-character tag and value.
/// Returns `None` when the line does not follow the `XX value` grammar.
fn split_tag_line(line: &str) -> Option<(&str, &str)> {
    let mut indices = line.char_indices();
    indices.next()?;
    indices.next()?;
    match indices.next() {
        None => Some((line, "")),
        Some((pos, ' ')) => Some((&line[..pos], line[pos..].trim())),
        Some(_) => None,
    }
}

fn apply_field(record: &mut PublicationRecord, tag: FieldTag, value: &str) {
    match tag {
        FieldTag::Author => {
            let author = normalize_author(value);
            if !author.is_empty() && author != ANONYMOUS {
                record.authors.push(author);
            }
        }
        FieldTag::Address | FieldTag::Reprint => {
            let address = strip_author_brackets(value);
            if !address.is_empty() {
                record.addresses.push(address.to_string());
            }
        }
        FieldTag::Year => {
            if record.year.is_none() {
                record.year = value.parse().ok();
            }
        }
        FieldTag::Accession => {
            if record.accession.is_none() && !value.is_empty() {
                record.accession = Some(value.to_string());
            }
        }
        FieldTag::Other => {}
    }
}

/// Normalize an author label: collapse whitespace runs to one space,
/// uppercase, and drop trailing periods.
fn normalize_author(raw: &str) -> String {
    let collapsed = raw.split_whitespace().collect::<Vec<_>>().join(" ");
    let mut upper = collapsed.to_uppercase();
    loop {
        let stripped = upper.trim_end().trim_end_matches('.');
        if stripped.len() == upper.len() {
            break;
        }
        upper.truncate(stripped.len());
    }
    upper
}

/// Remove leading `[Name; Name]` author lists from a `C1` address value.
/// Unbalanced brackets leave the value untouched.
fn strip_author_brackets(value: &str) -> &str {
    let mut rest = value.trim();
    while let Some(after) = rest.strip_prefix('[') {
        match after.find(']') {
            Some(pos) => rest = after[pos + 1..].trim_start(),
            None => break,
        }
    }
    rest
}
