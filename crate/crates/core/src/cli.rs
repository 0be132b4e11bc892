//! `oilu` command line.
//!
//! Every invocation writes one JSON document to standard output. Exit codes:
//! 0 on success, 1 for usage and file errors, 2 for domain errors (invalid
//! digits, unknown pairs, unreadable markers). Errors are reported as
//! `{"status":"error","error":{"code":..,"message":..,"position":..}}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::markers::{
    canonical_id, decode_marker, layout_marker, rasterize, read_pgm, scene_to_svg, write_pgm,
    MarkerError, MarkerId,
};
use crate::numbers::{sevenseg_energy, OiluNumber, ParseError};
use crate::series::{generate, NavRule, SeriesConfig, Stop, DEFAULT_MAX_LENGTH};
use crate::sevenseg::{merge_number, split_pairs, split_table, Base, SplitError, SplitStrategy};

#[derive(Debug, Parser)]
#[command(name = "oilu", version, about = "OILU numeral system toolkit")]
struct Cli {
    /// Print facets and series as one digit string per line instead of JSON.
    #[arg(long, global = true)]
    plain: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Related numbers of a digit string under the four quarter turns.
    Facets { digits: String },
    /// Facet reached after k counter-clockwise quarter turns.
    Rotate {
        digits: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        k: u8,
    },
    /// Strokes (OILU) versus segments (seven-segment) to display a number.
    Energy { digits: String },
    /// Split Dec/Hex digits into OILU pairs.
    Split {
        digits: String,
        #[arg(long)]
        strategy: SplitStrategy,
        #[arg(long, default_value = "dec")]
        base: Base,
    },
    /// Join OILU pairs back into Dec/Hex digits.
    Join {
        digits: String,
        #[arg(long)]
        strategy: SplitStrategy,
        #[arg(long, default_value = "dec")]
        base: Base,
    },
    /// Full split table of a strategy.
    Table {
        #[arg(long)]
        strategy: SplitStrategy,
        #[arg(long, default_value = "dec")]
        base: Base,
    },
    /// Generate a number series from a seed and a navigation rule.
    Series {
        #[arg(long)]
        seed: String,
        /// Comma-separated steps: split:a|b|c, merge:a|b|c, facet:0..3.
        #[arg(long)]
        rule: NavRule,
        #[arg(long)]
        steps: usize,
        #[arg(long, default_value = "dec")]
        base: Base,
        #[arg(long, default_value_t = DEFAULT_MAX_LENGTH)]
        max_length: usize,
    },
    /// Render or decode concentric markers.
    #[command(subcommand)]
    Marker(MarkerCommand),
}

#[derive(Debug, Subcommand)]
enum MarkerCommand {
    /// Render a marker to SVG or PGM, chosen by the output extension.
    Render {
        digits: String,
        #[arg(long, default_value_t = 256)]
        size: u32,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decode a PGM marker image with a known number of levels.
    Decode {
        path: PathBuf,
        #[arg(long)]
        levels: usize,
    },
}

/// A failed command: error code, message, optional character position.
#[derive(Debug)]
struct Failure {
    exit: u8,
    code: &'static str,
    message: String,
    position: Option<usize>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            exit: 1,
            code: "usage",
            message: message.into(),
            position: None,
        }
    }

    fn io(message: impl Into<String>) -> Failure {
        Failure {
            exit: 1,
            code: "io",
            message: message.into(),
            position: None,
        }
    }

    fn domain(code: &'static str, message: impl Into<String>, position: Option<usize>) -> Failure {
        Failure {
            exit: 2,
            code,
            message: message.into(),
            position,
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Failure {
        Failure::domain("invalid_digits", e.to_string(), e.position())
    }
}

impl From<SplitError> for Failure {
    fn from(e: SplitError) -> Failure {
        let code = match e {
            SplitError::EmptyInput | SplitError::InvalidDigit { .. } => "invalid_digits",
            SplitError::OddLength => "odd_length",
            SplitError::UnknownPair { .. } => "unknown_pair",
        };
        Failure::domain(code, e.to_string(), e.position())
    }
}

impl From<MarkerError> for Failure {
    fn from(e: MarkerError) -> Failure {
        match e {
            MarkerError::Digits(p) => p.into(),
            MarkerError::IdLength(_) => Failure::domain("invalid_id", e.to_string(), None),
            MarkerError::Levels(_) | MarkerError::SizeTooSmall(_) => Failure::usage(e.to_string()),
            MarkerError::BadImage(_) => Failure::domain("bad_image", e.to_string(), None),
            MarkerError::UnreadableLevel(level) => {
                Failure::domain("unreadable_level", e.to_string(), Some(level))
            }
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    position: Option<usize>,
}

#[derive(Serialize)]
struct ErrorDoc<'a> {
    status: &'static str,
    error: ErrorBody<'a>,
}

/// Command output: a JSON payload, or plain lines under `--plain`.
enum Output {
    Json(String),
    Lines(Vec<String>),
}

fn json<T: Serialize>(payload: T) -> Output {
    Output::Json(serde_json::to_string(&payload).expect("payload serializes"))
}

#[derive(Serialize)]
struct FacetsDoc {
    input: String,
    facets: Vec<String>,
    canonical: String,
}

#[derive(Serialize)]
struct RotateDoc {
    input: String,
    k: u8,
    output: String,
}

#[derive(Serialize)]
struct EnergyDoc {
    input: String,
    oilu: u32,
    sevenseg: u32,
}

#[derive(Serialize)]
struct PairDoc {
    digit: String,
    upper: u8,
    lower: u8,
    replaced: bool,
}

#[derive(Serialize)]
struct SplitDoc {
    input: String,
    pairs: Vec<PairDoc>,
    oilu: String,
}

#[derive(Serialize)]
struct JoinDoc {
    input: String,
    output: String,
}

#[derive(Serialize)]
struct TableDoc {
    strategy: SplitStrategy,
    base: Base,
    pairs: Vec<PairDoc>,
}

#[derive(Serialize)]
struct SeriesDoc {
    seed: String,
    base: Base,
    rule: String,
    series: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    stopped: Option<String>,
}

#[derive(Serialize)]
struct RenderDoc {
    id: String,
    levels: usize,
    size: u32,
    format: &'static str,
    out: String,
    canonical: String,
    k: u8,
}

#[derive(Serialize)]
struct DecodeDoc {
    id: String,
    levels: usize,
    canonical: String,
    k: u8,
}

fn pair_doc(digit: char, upper: u8, lower: u8, replaced: bool) -> PairDoc {
    PairDoc {
        digit: digit.to_string(),
        upper,
        lower,
        replaced,
    }
}

fn execute(cli: Cli) -> Result<Output, Failure> {
    let plain = cli.plain;
    match cli.command {
        Command::Facets { digits } => {
            let n: OiluNumber = digits.parse()?;
            let facets = n.related_set().to_strings();
            if plain {
                return Ok(Output::Lines(facets));
            }
            Ok(json(FacetsDoc {
                input: digits,
                facets,
                canonical: n.canonical().0.to_string(),
            }))
        }
        Command::Rotate { digits, k } => {
            let n: OiluNumber = digits.parse()?;
            Ok(json(RotateDoc {
                input: digits,
                k,
                output: n.facet(k as i64).to_string(),
            }))
        }
        Command::Energy { digits } => {
            let n: OiluNumber = digits.parse()?;
            Ok(json(EnergyDoc {
                oilu: n.display_energy(),
                sevenseg: sevenseg_energy(&digits)?,
                input: digits,
            }))
        }
        Command::Split {
            digits,
            strategy,
            base,
        } => {
            let pairs = split_pairs(&digits, strategy, base)?;
            let oilu = pairs
                .iter()
                .flat_map(|(_, p)| [p.upper.to_char(), p.lower.to_char()])
                .collect();
            Ok(json(SplitDoc {
                input: digits.to_ascii_uppercase(),
                pairs: pairs
                    .iter()
                    .map(|(d, p)| {
                        pair_doc(d.to_char(), p.upper.value(), p.lower.value(), p.replaced)
                    })
                    .collect(),
                oilu,
            }))
        }
        Command::Join {
            digits,
            strategy,
            base,
        } => {
            let n: OiluNumber = digits.parse()?;
            Ok(json(JoinDoc {
                output: merge_number(&n, strategy, base)?,
                input: digits,
            }))
        }
        Command::Table { strategy, base } => {
            let pairs = split_table(strategy, base)
                .iter()
                .enumerate()
                .map(|(d, p)| {
                    let c = char::from_digit(d as u32, 16).expect("digit < 16");
                    pair_doc(
                        c.to_ascii_uppercase(),
                        p.upper.value(),
                        p.lower.value(),
                        p.replaced,
                    )
                })
                .collect();
            Ok(json(TableDoc {
                strategy,
                base,
                pairs,
            }))
        }
        Command::Series {
            seed,
            rule,
            steps,
            base,
            max_length,
        } => {
            let cfg = SeriesConfig::with_max_length(seed, base, rule, steps, max_length)
                .map_err(|e| Failure::usage(e.to_string()))?;
            let series = generate(&cfg);
            let stopped = match series.stop {
                None => None,
                Some(stop @ Stop::MaxLength { .. }) => Some(stop.to_string()),
                Some(Stop::StepFailed { iteration, error }) => {
                    return Err(Failure::domain(
                        "step_domain",
                        format!("iteration {iteration}: {error}"),
                        error.position(),
                    ))
                }
            };
            if plain {
                return Ok(Output::Lines(series.members));
            }
            Ok(json(SeriesDoc {
                seed: cfg.seed().to_string(),
                base,
                rule: cfg.rule().to_string(),
                series: series.members,
                stopped,
            }))
        }
        Command::Marker(MarkerCommand::Render { digits, size, out }) => render(&digits, size, &out),
        Command::Marker(MarkerCommand::Decode { path, levels }) => {
            let bytes = std::fs::read(&path)
                .map_err(|e| Failure::io(format!("cannot read {}: {e}", path.display())))?;
            let img =
                read_pgm(&bytes).map_err(|e| Failure::domain("bad_image", e.to_string(), None))?;
            let id = decode_marker(&img, levels)?;
            let (canonical, k) = canonical_id(&id);
            Ok(json(DecodeDoc {
                id: id.to_string(),
                levels,
                canonical: canonical.to_string(),
                k,
            }))
        }
    }
}

fn render(digits: &str, size: u32, out: &Path) -> Result<Output, Failure> {
    let ext = out
        .extension()
        .and_then(|e| e.to_str())
        .map(str::to_ascii_lowercase);
    let format = match ext.as_deref() {
        Some("svg") => "svg",
        Some("pgm") => "pgm",
        _ => {
            return Err(Failure::usage(format!(
                "cannot infer output format from {}, use .svg or .pgm",
                out.display()
            )))
        }
    };
    let id: MarkerId = digits.parse()?;
    let scene = layout_marker(&id);
    let bytes = match format {
        "svg" => scene_to_svg(&scene, size)?.into_bytes(),
        _ => write_pgm(&rasterize(&scene, size)?),
    };
    std::fs::write(out, bytes)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", out.display())))?;
    let (canonical, k) = canonical_id(&id);
    Ok(json(RenderDoc {
        id: id.to_string(),
        levels: id.levels(),
        size,
        format,
        out: out.display().to_string(),
        canonical: canonical.to_string(),
        k,
    }))
}

fn emit_failure(out: &mut dyn Write, f: &Failure) {
    let doc = ErrorDoc {
        status: "error",
        error: ErrorBody {
            code: f.code,
            message: &f.message,
            position: f.position,
        },
    };
    let _ = writeln!(
        out,
        "{}",
        serde_json::to_string(&doc).expect("error serializes")
    );
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            let message = e.to_string();
            let first = message.lines().next().unwrap_or("usage error");
            emit_failure(out, &Failure::usage(first.trim_start_matches("error: ")));
            return 1;
        }
    };
    match execute(cli) {
        Ok(Output::Json(doc)) => {
            let _ = writeln!(out, "{doc}");
            0
        }
        Ok(Output::Lines(lines)) => {
            for line in lines {
                let _ = writeln!(out, "{line}");
            }
            0
        }
        Err(f) => {
            let _ = writeln!(err, "oilu: {}", f.message);
            emit_failure(out, &f);
            f.exit as i32
        }
    }
}
