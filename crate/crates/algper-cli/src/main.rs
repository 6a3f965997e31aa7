//! Command-line driver: conversions between spectra and coefficient
//! sequences, per-genus catalogs and censuses, minimal-genus queries,
//! periodic-point bounds, and integer symplectic realizations.
//!
//! Exit codes are a stable contract: 0 success; 1 semantic failure (input
//! not realizable where realizability is required, or a verification
//! horizon past the cap); 2 usage and parse errors; 3 I/O failures.
//! Data goes to standard output (or `--output`); diagnostics, including
//! the per-genus summary line of `catalog`, go to standard error.

mod parse;
mod render;

use std::fmt::Display;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

use algper::catalog::{self, CatalogRecord, ExportFormat};
use algper::genus;
use algper::symplectic::{self, SymplecticForm};
use algper::Error;

use render::Conversion;

#[derive(Parser)]
#[command(
    name = "algper",
    version,
    about = "Exact arithmetic for root-of-unity spectra, Dold coefficients, genus catalogs, and symplectic realizations"
)]
struct Cli {
    /// Output format for data (diagnostics stay plain text on stderr)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for enumeration (default: one per CPU)
    #[arg(long, global = true, env = "ALGPER_JOBS", value_name = "N",
          value_parser = clap::value_parser!(u64).range(1..=4096))]
    jobs: Option<u64>,

    /// Largest admissible verification horizon (the lcm of spectrum orders)
    #[arg(long, global = true, default_value_t = 10_000, value_name = "N",
          value_parser = clap::value_parser!(u64).range(1..))]
    horizon_cap: u64,

    /// Write data to this file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayoutChoice {
    Paired,
    Split,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between a root-of-unity spectrum and its coefficient sequence
    #[command(group(ArgGroup::new("input").required(true).multiple(false)))]
    Convert {
        /// Spectrum literal, e.g. "{3,4}" or "3:1,4:1"
        #[arg(long, group = "input", value_name = "SPECTRUM")]
        spectrum: Option<String>,
        /// Coefficient-sequence literal, e.g. "(3,1,-1,-1)" or "15:-2"
        #[arg(long, group = "input", value_name = "DOLD")]
        dold: Option<String>,
        /// Exit with status 1 when the input is not realizable
        #[arg(long)]
        require_realizable: bool,
    },
    /// List every realizable spectrum of one genus
    Catalog {
        /// Genus, at least 1
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        genus: u64,
    },
    /// Smallest genus realizing a set of algebraic periods
    MinGenus {
        /// Period-set literal, e.g. "{1,2}" or "1,2"
        set: String,
        /// Match the odd periods exactly and leave even ones unconstrained
        #[arg(long)]
        odd: bool,
    },
    /// Integer symplectic matrix realizing a spectrum
    #[command(group(ArgGroup::new("input").required(true).multiple(false)))]
    Realize {
        /// Spectrum literal, e.g. "{3,4}" or "3:1,4:1"
        #[arg(long, group = "input", value_name = "SPECTRUM")]
        spectrum: Option<String>,
        /// Coefficient-sequence literal, e.g. "(3,1,-1,-1)" or "15:-2"
        #[arg(long, group = "input", value_name = "DOLD")]
        dold: Option<String>,
        /// Layout of the symplectic form the output preserves
        #[arg(long, value_enum, default_value_t = LayoutChoice::Paired)]
        layout: LayoutChoice,
    },
    /// Periodic-point lower bounds read off a coefficient sequence
    Bounds {
        /// Coefficient-sequence literal; "" yields an empty table
        dold: String,
    },
    /// Per-genus census: spectra count and distinct period-set counts
    Summary {
        /// First genus, at least 1
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        genus_from: u64,
        /// Last genus, inclusive
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        genus_to: u64,
    },
}

/// A failure that has already been shaped for the user: message + exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(err: impl Display) -> Failure {
    Failure {
        code: 2,
        message: err.to_string(),
    }
}

fn io_failure(err: impl Display) -> Failure {
    Failure {
        code: 3,
        message: format!("write failed: {err}"),
    }
}

/// Library errors keep their messages; the exit code classifies them.
fn lib_failure(err: Error) -> Failure {
    let code = match err {
        Error::EmptyPeriodSet | Error::EvenPeriod(_) => 2,
        Error::Io { .. } => 3,
        Error::NotRealizable(_)
        | Error::HorizonExceeded { .. }
        | Error::NotSkewSymmetric
        | Error::NotUnimodular(_) => 1,
    };
    Failure {
        code,
        message: err.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(err) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
        {
            eprintln!("error: {err}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut sink = open_sink(&cli.output)?;
    let result = dispatch(cli, sink.as_mut());
    let flushed = sink.flush().map_err(io_failure);
    result.and(flushed)
}

fn open_sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    match path {
        Some(path) => {
            let file = File::create(path).map_err(|err| Failure {
                code: 3,
                message: format!("cannot open {}: {err}", path.display()),
            })?;
            Ok(Box::new(io::BufWriter::new(file)))
        }
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
    }
}

fn dispatch(cli: &Cli, sink: &mut dyn Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Convert {
            spectrum,
            dold,
            require_realizable,
        } => cmd_convert(cli, spectrum, dold, *require_realizable, sink),
        Command::Catalog { genus } => cmd_catalog(cli, *genus, sink),
        Command::MinGenus { set, odd } => cmd_min_genus(cli, set, *odd, sink),
        Command::Realize {
            spectrum,
            dold,
            layout,
        } => cmd_realize(cli, spectrum, dold, *layout, sink),
        Command::Bounds { dold } => cmd_bounds(cli, dold, sink),
        Command::Summary {
            genus_from,
            genus_to,
        } => cmd_summary(cli, *genus_from, *genus_to, sink),
    }
}

/// Parses whichever literal was given and pairs it with its image under the
/// bijection.
fn parse_either(
    spectrum: &Option<String>,
    dold: &Option<String>,
) -> Result<(algper::dold::RootSpectrum, algper::dold::DoldSequence), Failure> {
    match (spectrum, dold) {
        (Some(literal), None) => {
            let spectrum = parse::parse_spectrum(literal).map_err(usage)?;
            let dold = spectrum.to_dold();
            Ok((spectrum, dold))
        }
        (None, Some(literal)) => {
            let dold = parse::parse_dold(literal).map_err(usage)?;
            let spectrum = dold.to_spectrum();
            Ok((spectrum, dold))
        }
        _ => unreachable!("the argument group admits exactly one input"),
    }
}

fn cmd_convert(
    cli: &Cli,
    spectrum: &Option<String>,
    dold: &Option<String>,
    require_realizable: bool,
    sink: &mut dyn Write,
) -> Result<(), Failure> {
    let (spectrum, dold) = parse_either(spectrum, dold)?;
    let conversion = Conversion {
        violations: spectrum.violations(),
        ap: dold.algebraic_periods(false),
        mper: dold.algebraic_periods(true),
        spectrum,
        dold,
    };
    let rendered = match cli.format {
        Format::Text => render::convert_text(&conversion),
        Format::Json => render::convert_json(&conversion),
        Format::Csv => render::convert_csv(&conversion),
    };
    sink.write_all(rendered.as_bytes()).map_err(io_failure)?;
    if require_realizable && !conversion.violations.is_empty() {
        let details: Vec<String> = conversion
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect();
        return Err(Failure {
            code: 1,
            message: format!("not realizable: {}", details.join("; ")),
        });
    }
    Ok(())
}

fn cmd_catalog(cli: &Cli, genus: u64, sink: &mut dyn Write) -> Result<(), Failure> {
    match cli.format {
        Format::Csv => export_catalog(genus, ExportFormat::Csv, sink)?,
        Format::Json => export_catalog(genus, ExportFormat::Jsonl, sink)?,
        Format::Text => {
            sink.write_all(render::CATALOG_TEXT_HEADER.as_bytes())
                .map_err(io_failure)?;
            for record in catalog::records(genus) {
                sink.write_all(render::catalog_text_row(&record).as_bytes())
                    .map_err(io_failure)?;
            }
        }
    }
    let summary = catalog::summarize(genus);
    eprintln!(
        "genus {}: {} spectra, {} distinct ap sets, {} distinct odd-ap sets",
        summary.genus, summary.spectra, summary.distinct_ap, summary.distinct_mper
    );
    Ok(())
}

fn export_catalog(genus: u64, format: ExportFormat, sink: &mut dyn Write) -> Result<(), Failure> {
    let result = if rayon::current_num_threads() > 1 {
        catalog::export_parallel(genus, format, sink)
    } else {
        catalog::export(genus, format, sink)
    };
    result.map_err(lib_failure)?;
    Ok(())
}

fn cmd_min_genus(cli: &Cli, set: &str, odd: bool, sink: &mut dyn Write) -> Result<(), Failure> {
    let periods = parse::parse_period_set(set).map_err(usage)?;
    let witness = if odd {
        genus::minimal_odd(&periods)
    } else {
        genus::minimal_exact(&periods)
    }
    .map_err(lib_failure)?;
    let rendered = match cli.format {
        Format::Text => {
            let ap = witness.dold.algebraic_periods(false);
            let mper = witness.dold.algebraic_periods(true);
            render::witness_text(&witness, &ap, &mper)
        }
        Format::Json => {
            let record = CatalogRecord::from_spectrum(witness.genus, witness.spectrum);
            format!("{}\n", record.jsonl_line())
        }
        Format::Csv => {
            let record = CatalogRecord::from_spectrum(witness.genus, witness.spectrum);
            format!("genus,spectrum,dold,ap,mper\n{}\n", record.csv_row())
        }
    };
    sink.write_all(rendered.as_bytes()).map_err(io_failure)
}

fn cmd_realize(
    cli: &Cli,
    spectrum: &Option<String>,
    dold: &Option<String>,
    layout: LayoutChoice,
    sink: &mut dyn Write,
) -> Result<(), Failure> {
    if cli.format == Format::Csv {
        return Err(usage("csv output is not defined for realize"));
    }
    let (spectrum, _) = parse_either(spectrum, dold)?;
    let (matrix, form) = symplectic::realize_spectrum(&spectrum).map_err(lib_failure)?;
    let (matrix, form) = match layout {
        LayoutChoice::Paired => (matrix, form),
        LayoutChoice::Split => {
            let split = SymplecticForm::split(form.genus());
            (split.from_paired_layout(&matrix), split)
        }
    };
    let report = symplectic::verify_realization(&matrix, &form, &spectrum, cli.horizon_cap)
        .map_err(lib_failure)?;
    let rendered = match cli.format {
        Format::Text => render::realize_text(&spectrum, &matrix, &form, &report),
        Format::Json => render::realize_json(&spectrum, &matrix, &form, &report),
        Format::Csv => unreachable!("rejected above"),
    };
    sink.write_all(rendered.as_bytes()).map_err(io_failure)?;
    if !report.all_pass() {
        return Err(Failure {
            code: 1,
            message: "verification failed for the constructed matrix".into(),
        });
    }
    Ok(())
}

fn cmd_bounds(cli: &Cli, dold: &str, sink: &mut dyn Write) -> Result<(), Failure> {
    if cli.format == Format::Csv {
        return Err(usage("csv output is not defined for bounds"));
    }
    let dold = parse::parse_dold(dold).map_err(usage)?;
    let report = dold.periodic_point_bounds();
    let rendered = match cli.format {
        Format::Text => render::bounds_text(&report),
        Format::Json => render::bounds_json(&report),
        Format::Csv => unreachable!("rejected above"),
    };
    sink.write_all(rendered.as_bytes()).map_err(io_failure)
}

fn cmd_summary(
    cli: &Cli,
    genus_from: u64,
    genus_to: u64,
    sink: &mut dyn Write,
) -> Result<(), Failure> {
    if genus_from > genus_to {
        return Err(usage(format!(
            "empty genus range: {genus_from} > {genus_to}"
        )));
    }
    match cli.format {
        Format::Text => sink
            .write_all(render::SUMMARY_TEXT_HEADER.as_bytes())
            .map_err(io_failure)?,
        Format::Csv => sink
            .write_all(render::SUMMARY_CSV_HEADER.as_bytes())
            .map_err(io_failure)?,
        Format::Json => {}
    }
    for genus in genus_from..=genus_to {
        let summary = catalog::summarize(genus);
        let row = match cli.format {
            Format::Text => render::summary_text_row(&summary),
            Format::Csv => render::summary_csv_row(&summary),
            Format::Json => render::summary_json_line(&summary),
        };
        sink.write_all(row.as_bytes()).map_err(io_failure)?;
    }
    Ok(())
}
