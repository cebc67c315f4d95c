//! Command-line driver: analyze algebra files, construct corpus members,
//! and cross-check the structural results against the brute-force oracle.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use axial_core::constructions::{inflated_form_example, matsuo_algebra, named_algebra, TranspositionGroup};
use axial_core::fileio;
use axial_core::report::{analyze, oracle_compare, FormPolicy};
use axial_core::scalar::Field;
use axial_core::Error;

#[derive(Parser)]
#[command(name = "axial", about = "Exact analysis of primitive axial algebras", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on an algebra file and emit the JSON report.
    Analyze {
        file: PathBuf,
        /// Frobenius form selection: solve, given, or zero.
        #[arg(long, default_value = "solve")]
        form_policy: String,
        /// Write the report here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Directory for DOT renderings of the axis graphs.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Build a named algebra, a Matsuo algebra, or the inflated example.
    Construct {
        /// 1A, 2B, 3C, matsuo, or inflated.
        name: String,
        /// Law parameter as a scalar in the chosen field.
        #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
        eta: String,
        /// Transposition group for matsuo: s3 or s4.
        #[arg(long, default_value = "s3")]
        group: String,
        /// Ground field: Q or a prime.
        #[arg(long, default_value = "Q")]
        field: String,
        /// Write the algebra file here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Enumerate the ideal lattice by brute force and diff it against the
    /// structural computations.
    Oracle {
        file: PathBuf,
        /// Refuse enumerations beyond this many vectors or subspaces.
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
}

fn parse_field(text: &str) -> Result<Field, Error> {
    match text {
        "Q" | "q" => Ok(Field::Rational),
        other => match other.parse::<u64>() {
            Ok(p) => Field::prime(p),
            Err(_) => Err(Error::InvalidParameter(format!(
                "unknown field '{other}'; expected Q or a prime"
            ))),
        },
    }
}

fn write_text(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Analyze {
            file,
            form_policy,
            report,
            dot,
        } => {
            let policy = FormPolicy::parse(&form_policy)?;
            let loaded = fileio::load(&file)?;
            let label = file.display().to_string();
            let outcome = analyze(&loaded.algebra, loaded.form.as_ref(), policy, &label)?;
            let mut text =
                serde_json::to_string_pretty(&outcome.report).expect("the report serializes");
            text.push('\n');
            match report {
                Some(path) => write_text(&path, &text)?,
                None => print!("{text}"),
            }
            if let Some(dir) = dot {
                std::fs::create_dir_all(&dir).map_err(|source| Error::Io {
                    path: dir.display().to_string(),
                    source,
                })?;
                let stem = file
                    .file_stem()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_else(|| "algebra".into());
                write_text(
                    &dir.join(format!("{stem}-projection.dot")),
                    &outcome.projection_dot,
                )?;
                write_text(
                    &dir.join(format!("{stem}-non-annihilation.dot")),
                    &outcome.non_annihilation_dot,
                )?;
            }
            Ok(if outcome.failures > 0 {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            })
        }
        Command::Construct {
            name,
            eta,
            group,
            field,
            out,
        } => {
            let field = parse_field(&field)?;
            let (algebra, form) = match name.as_str() {
                "matsuo" => {
                    let group = match group.as_str() {
                        "s3" => TranspositionGroup::symmetric(3)?,
                        "s4" => TranspositionGroup::symmetric(4)?,
                        other => {
                            return Err(Error::InvalidParameter(format!(
                                "unknown group '{other}'; expected s3 or s4"
                            )))
                        }
                    };
                    (matsuo_algebra(&group, &field.parse(&eta)?)?, None)
                }
                "inflated" => {
                    let (x, f) = inflated_form_example(field)?;
                    (x, Some(f))
                }
                named => (named_algebra(named, &field.parse(&eta)?)?, None),
            };
            let file = fileio::to_file(&algebra, form.as_ref());
            match out {
                Some(path) => fileio::save(&path, &file)?,
                None => {
                    let mut text =
                        serde_json::to_string_pretty(&file).expect("the schema serializes");
                    text.push('\n');
                    print!("{text}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { file, bound } => {
            let loaded = fileio::load(&file)?;
            let label = file.display().to_string();
            let report = oracle_compare(&loaded.algebra, bound, &label)?;
            let mut text = serde_json::to_string_pretty(&report).expect("the report serializes");
            text.push('\n');
            print!("{text}");
            Ok(if report.agreement {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
