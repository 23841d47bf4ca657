//! Command-line front end: argument parsing, the interactive level
//! prompt, and the end-to-end pipeline from export files to `.net`
//! files plus a JSON run report.

use std::fs;
use std::io::{BufRead, BufReader, IsTerminal, Write};
use std::path::PathBuf;

use clap::Parser;
use serde::Serialize;

use crate::counting::{
    consistency_report, fractional_eq1, fractional_eq2, fractional_eq3, full_count,
    CoOccurrenceMatrix, CountingScheme, DiagonalPolicy,
};
use crate::entity::{AggregationLevel, CountMode};
use crate::occurrence::{build_occurrence, OccurrenceBuild};
use crate::pajek::{write_pajek, PajekWriteOptions};
use crate::wos::{parse_wos_export, PublicationRecord};
use crate::{Error, Result};

/// Question asked when no `--level` is given and stdin is a terminal.
pub const LEVEL_PROMPT: &str = "(a)author, (i)nstitution or (c)ountry";

/// Environment variable naming the default output directory.
pub const OUTDIR_ENV: &str = "FRACNET_OUTDIR";

/// Build co-occurrence networks from Web of Science plain-text exports.
///
/// The full-counting network is always written to `mtrx.net`; the
/// fractional variants selected with `--schemes` go to `fmtrx1.net`,
/// `fmtrx2.net` and `fmtrx3.net`. A run report lands in `report.json`.
#[derive(Debug, Parser)]
#[command(name = "fracnet", version)]
pub struct CliArgs {
    /// Export file to read; repeat for multiple files.
    #[arg(long = "input", value_name = "FILE")]
    pub inputs: Vec<PathBuf>,

    /// Entity type of the network. Asked interactively when omitted.
    #[arg(long, value_enum)]
    pub level: Option<LevelArg>,

    /// Count each institution or country at most once per paper
    /// instead of once per address.
    #[arg(long)]
    pub binary: bool,

    /// Fractional schemes to write next to the full network.
    #[arg(
        long,
        alias = "scheme",
        value_enum,
        value_delimiter = ',',
        default_values_t = [CountingScheme::Eq1, CountingScheme::Eq2, CountingScheme::Eq3]
    )]
    pub schemes: Vec<CountingScheme>,

    /// Output directory (falls back to $FRACNET_OUTDIR, then `.`).
    #[arg(long, value_name = "DIR")]
    pub outdir: Option<PathBuf>,

    /// Write self-loop edges for networks that keep their diagonal.
    #[arg(long)]
    pub loops: bool,

    /// Drop diagonal cells where the scheme leaves the choice
    /// (full and eq3).
    #[arg(long)]
    pub no_diagonal: bool,

    /// Digits after the decimal point for edge weights.
    #[arg(long, value_name = "N", default_value_t = 6,
          value_parser = clap::value_parser!(u8).range(1..=12))]
    pub decimals: u8,

    /// Suppress the stdout summary.
    #[arg(long)]
    pub quiet: bool,
}

/// Aggregation level as spelled on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum LevelArg {
    #[value(alias = "a")]
    Author,
    #[value(alias = "i")]
    Institution,
    #[value(alias = "c")]
    Country,
}

impl LevelArg {
    fn resolve(self, binary: bool) -> AggregationLevel {
        let mode = if binary {
            CountMode::Binary
        } else {
            CountMode::Valued
        };
        match self {
            LevelArg::Author => AggregationLevel::Author,
            LevelArg::Institution => AggregationLevel::Institution(mode),
            LevelArg::Country => AggregationLevel::Country(mode),
        }
    }
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub inputs: Vec<PathBuf>,
    pub level: Option<LevelArg>,
    pub binary: bool,
    /// Requested fractional schemes, deduplicated, in eq1/eq2/eq3
    /// order. `full` tokens are dropped — that network always runs.
    pub fractional_schemes: Vec<CountingScheme>,
    pub outdir: PathBuf,
    pub emit_loops: bool,
    pub include_diagonal: bool,
    pub weight_decimals: usize,
    pub quiet: bool,
}

/// Parse command-line arguments into a [`RunConfig`].
///
/// `env_outdir` is the value of [`OUTDIR_ENV`], passed in explicitly so
/// callers control the environment.
pub fn load_config<I, T>(args: I, env_outdir: Option<std::ffi::OsString>) -> Result<RunConfig>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = CliArgs::try_parse_from(args)?;

    let outdir = args
        .outdir
        .or_else(|| env_outdir.map(PathBuf::from))
        .unwrap_or_else(|| PathBuf::from("."));

    let fractional_schemes = [
        CountingScheme::Eq1,
        CountingScheme::Eq2,
        CountingScheme::Eq3,
    ]
    .into_iter()
    .filter(|scheme| args.schemes.contains(scheme))
    .collect();

    Ok(RunConfig {
        inputs: args.inputs,
        level: args.level,
        binary: args.binary,
        fractional_schemes,
        outdir,
        emit_loops: args.loops,
        include_diagonal: !args.no_diagonal,
        weight_decimals: usize::from(args.decimals),
        quiet: args.quiet,
    })
}

/// Per-scheme slice of the run report.
#[derive(Debug, Clone, Serialize)]
pub struct SchemeSummary {
    pub scheme: CountingScheme,
    pub file: String,
    /// Off-diagonal cells written to the edge list.
    pub edges: usize,
    pub grand_total_with_diagonal: f64,
    pub grand_total_off_diagonal: f64,
    pub analytic_expectation: Option<f64>,
    pub matches: bool,
}

/// What a run produced; serialized to `report.json`.
#[derive(Debug, Clone, Serialize)]
pub struct RunSummary {
    pub records_parsed: usize,
    pub zero_entity_records: usize,
    pub skipped_addresses: usize,
    pub level: String,
    pub mode: String,
    pub entities: usize,
    pub publications: usize,
    pub schemes: Vec<SchemeSummary>,
}

/// Execute a run: parse, project under every requested scheme, write
/// the `.net` files and the report.
pub fn run(config: &RunConfig) -> Result<RunSummary> {
    let level = resolve_level(config)?;
    if config.inputs.is_empty() {
        return Err(Error::InvalidConfig(
            "no input files; pass --input FILE at least once".to_string(),
        ));
    }

    let records = parse_inputs(&config.inputs)?;
    if records.is_empty() {
        eprintln!("warning: no records found in the input");
    }

    let OccurrenceBuild {
        catalog,
        matrix,
        skipped_addresses,
    } = build_occurrence(&records, level);

    let policy = if config.include_diagonal {
        DiagonalPolicy::Include
    } else {
        DiagonalPolicy::Exclude
    };
    let options = PajekWriteOptions {
        weight_decimals: config.weight_decimals,
        emit_loops: config.emit_loops,
    };

    fs::create_dir_all(&config.outdir).map_err(|source| Error::Output {
        path: config.outdir.clone(),
        source,
    })?;

    let mut schemes = Vec::new();
    let mut networks: Vec<CoOccurrenceMatrix> = Vec::new();
    networks.push(full_count(&matrix, policy));
    for &scheme in &config.fractional_schemes {
        networks.push(match scheme {
            CountingScheme::Eq1 => fractional_eq1(&matrix),
            CountingScheme::Eq2 => fractional_eq2(&matrix),
            CountingScheme::Eq3 => fractional_eq3(&matrix, policy),
            CountingScheme::Full => unreachable!("full is not a fractional scheme"),
        });
    }

    for network in &networks {
        let file = network.scheme().output_filename();
        let text = write_pajek(&catalog, network, &options)?;
        let path = config.outdir.join(file);
        fs::write(&path, text).map_err(|source| Error::Output { path, source })?;

        let report = consistency_report(&matrix, network);
        schemes.push(SchemeSummary {
            scheme: network.scheme(),
            file: file.to_string(),
            edges: network.iter().filter(|&((i, j), _)| i != j).count(),
            grand_total_with_diagonal: report.grand_total_with_diagonal,
            grand_total_off_diagonal: report.grand_total_off_diagonal,
            analytic_expectation: report.analytic_expectation,
            matches: report.matches,
        });
    }

    let summary = RunSummary {
        records_parsed: records.len(),
        zero_entity_records: matrix.empty_column_count(),
        skipped_addresses,
        level: level.name().to_string(),
        mode: match level.count_mode() {
            CountMode::Binary => "binary",
            CountMode::Valued => "valued",
        }
        .to_string(),
        entities: matrix.num_entities(),
        publications: matrix.num_publications(),
        schemes,
    };

    let mut report_json = serde_json::to_string_pretty(&summary).expect("summary serializes");
    report_json.push('\n');
    let report_path = config.outdir.join("report.json");
    fs::write(&report_path, report_json).map_err(|source| Error::Output {
        path: report_path,
        source,
    })?;

    if !config.quiet {
        print_summary(&summary);
    }
    Ok(summary)
}

fn resolve_level(config: &RunConfig) -> Result<AggregationLevel> {
    if let Some(level) = config.level {
        return Ok(level.resolve(config.binary));
    }
    if !std::io::stdin().is_terminal() {
        return Err(Error::InvalidConfig(
            "no aggregation level; pass --level author|institution|country".to_string(),
        ));
    }
    let mut stdout = std::io::stdout();
    writeln!(stdout, "{LEVEL_PROMPT}")?;
    stdout.flush()?;
    let mut answer = String::new();
    std::io::stdin().lock().read_line(&mut answer)?;
    match parse_level_answer(&answer) {
        Some(level) => Ok(level.resolve(config.binary)),
        None => Err(Error::InvalidConfig(format!(
            "unrecognized level {:?}; answer a, i or c",
            answer.trim()
        ))),
    }
}

/// Interpret an interactive answer to [`LEVEL_PROMPT`].
pub fn parse_level_answer(answer: &str) -> Option<LevelArg> {
    match answer.trim().to_lowercase().as_str() {
        "a" | "author" => Some(LevelArg::Author),
        "i" | "institution" => Some(LevelArg::Institution),
        "c" | "country" => Some(LevelArg::Country),
        _ => None,
    }
}

fn parse_inputs(paths: &[PathBuf]) -> Result<Vec<PublicationRecord>> {
    let mut records = Vec::new();
    for path in paths {
        let file = fs::File::open(path).map_err(|source| Error::Input {
            path: path.clone(),
            source,
        })?;
        let parsed = parse_wos_export(BufReader::new(file)).map_err(|source| Error::InFile {
            path: path.clone(),
            source: Box::new(source),
        })?;
        records.extend(parsed);
    }
    // Records keep their position across files: column k of the
    // occurrence matrix is the k-th record of the whole run.
    for (seq_id, record) in records.iter_mut().enumerate() {
        record.seq_id = seq_id;
    }
    Ok(records)
}

fn print_summary(summary: &RunSummary) {
    println!(
        "parsed {} records ({} without entities, {} addresses skipped)",
        summary.records_parsed, summary.zero_entity_records, summary.skipped_addresses
    );
    println!(
        "{} network over {} entities, {} publications ({} counting)",
        summary.level, summary.entities, summary.publications, summary.mode
    );
    for scheme in &summary.schemes {
        let check = match scheme.analytic_expectation {
            Some(expected) => format!(
                ", expected {expected:.6}: {}",
                if scheme.matches { "ok" } else { "MISMATCH" }
            ),
            None => String::new(),
        };
        println!(
            "wrote {}: {} edges, totals {:.6} with diagonal / {:.6} without{check}",
            scheme.file,
            scheme.edges,
            scheme.grand_total_with_diagonal,
            scheme.grand_total_off_diagonal
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(args: &[&str]) -> RunConfig {
        load_config(std::iter::once("fracnet").chain(args.iter().copied()), None).unwrap()
    }

    #[test]
    fn defaults() {
        let config = config(&["--input", "a.txt"]);
        assert_eq!(config.inputs, vec![PathBuf::from("a.txt")]);
        assert_eq!(config.level, None);
        assert!(!config.binary);
        assert_eq!(
            config.fractional_schemes,
            vec![
                CountingScheme::Eq1,
                CountingScheme::Eq2,
                CountingScheme::Eq3
            ]
        );
        assert_eq!(config.outdir, PathBuf::from("."));
        assert!(!config.emit_loops);
        assert!(config.include_diagonal);
        assert_eq!(config.weight_decimals, 6);
        assert!(!config.quiet);
    }

    #[test]
    fn level_accepts_single_letter_aliases() {
        assert_eq!(config(&["--level", "a"]).level, Some(LevelArg::Author));
        assert_eq!(config(&["--level", "i"]).level, Some(LevelArg::Institution));
        assert_eq!(
            config(&["--level", "country"]).level,
            Some(LevelArg::Country)
        );
    }

    #[test]
    fn schemes_are_deduplicated_and_ordered() {
        let config = config(&["--schemes", "eq3,eq1,eq3"]);
        assert_eq!(
            config.fractional_schemes,
            vec![CountingScheme::Eq1, CountingScheme::Eq3]
        );
    }

    #[test]
    fn full_in_schemes_is_redundant_but_harmless() {
        let config = config(&["--schemes", "full,eq2"]);
        assert_eq!(config.fractional_schemes, vec![CountingScheme::Eq2]);
    }

    #[test]
    fn scheme_is_accepted_as_an_alias() {
        let config = config(&["--scheme", "eq2"]);
        assert_eq!(config.fractional_schemes, vec![CountingScheme::Eq2]);
    }

    #[test]
    fn outdir_precedence_flag_env_default() {
        let flag = load_config(
            ["fracnet", "--outdir", "flagdir"],
            Some(std::ffi::OsString::from("envdir")),
        )
        .unwrap();
        assert_eq!(flag.outdir, PathBuf::from("flagdir"));

        let env = load_config(["fracnet"], Some(std::ffi::OsString::from("envdir"))).unwrap();
        assert_eq!(env.outdir, PathBuf::from("envdir"));

        let fallback = load_config(["fracnet"], None).unwrap();
        assert_eq!(fallback.outdir, PathBuf::from("."));
    }

    #[test]
    fn decimals_range_is_enforced() {
        for bad in ["0", "13"] {
            let err = load_config(["fracnet", "--decimals", bad], None).unwrap_err();
            assert!(matches!(err, Error::Usage(_)));
        }
        assert_eq!(config(&["--decimals", "12"]).weight_decimals, 12);
    }

    #[test]
    fn unknown_scheme_is_a_usage_error() {
        let err = load_config(["fracnet", "--schemes", "eq4"], None).unwrap_err();
        assert!(matches!(err, Error::Usage(_)));
    }

    #[test]
    fn level_answers() {
        assert_eq!(parse_level_answer(" A \n"), Some(LevelArg::Author));
        assert_eq!(
            parse_level_answer("institution"),
            Some(LevelArg::Institution)
        );
        assert_eq!(parse_level_answer("c"), Some(LevelArg::Country));
        assert_eq!(parse_level_answer("x"), None);
        assert_eq!(parse_level_answer(""), None);
    }

    #[test]
    fn run_without_level_fails_when_not_interactive() {
        // Under the test harness stdin is not a terminal, so the
        // missing level must fail instead of prompting.
        let config = config(&["--input", "a.txt"]);
        let err = run(&config).unwrap_err();
        assert!(matches!(err, Error::InvalidConfig(_)));
    }

    #[test]
    fn run_without_inputs_fails() {
        let config = config(&["--level", "author"]);
        let err = run(&config).unwrap_err();
        assert!(matches!(err, Error::InvalidConfig(_)));
    }

    #[test]
    fn missing_input_file_is_reported_with_its_path() {
        let config = config(&["--level", "a", "--input", "/nonexistent/f.txt"]);
        let err = run(&config).unwrap_err();
        match err {
            Error::Input { path, .. } => {
                assert_eq!(path, PathBuf::from("/nonexistent/f.txt"));
            }
            other => panic!("unexpected error: {other:?}"),
        }
    }
}
