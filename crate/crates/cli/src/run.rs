//! Command dispatch and exit-code mapping.
//!
//! Exit codes: 0 success, 1 usage error, 2 I/O or format error, 3 invariant
//! violation detected during a paired analyze.

use std::ffi::OsString;
use std::fs;
use std::num::NonZeroU64;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use pixshuffle_core::{
    build_report, decrypt, derive_key, encrypt, ChannelMode, CipherConfig, ImageMatrix,
};
use thiserror::Error;

use crate::codec::png_adapter::{self, PngError};
use crate::codec::ppm::{self, PpmError};
use crate::report::{export_report, ReportFormat};

#[derive(Debug, Error)]
enum AppError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Ppm { path: PathBuf, source: PpmError },
    #[error("{path}: {source}")]
    Png { path: PathBuf, source: PngError },
    #[error("{path}: unsupported image extension, use .ppm or .png")]
    UnsupportedExtension { path: PathBuf },
}

#[derive(Parser)]
#[command(
    name = "pixshuffle",
    version,
    about = "Pixel-shuffling image cipher with an image-derived key"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Encrypt an image file; prints the key material used.
    Encrypt {
        input: PathBuf,
        output: PathBuf,
        /// Channel handling per round: "rotate" relabels (R,G,B) -> (G,B,R),
        /// "none" leaves labels alone.
        #[arg(long, default_value = "rotate", value_parser = parse_mode)]
        mode: ChannelMode,
        /// Fixed iteration count instead of the image-derived one.
        #[arg(long)]
        key: Option<NonZeroU64>,
    },
    /// Decrypt an image file; the key is re-derived from the ciphered image.
    Decrypt {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, default_value = "rotate", value_parser = parse_mode)]
        mode: ChannelMode,
        #[arg(long)]
        key: Option<NonZeroU64>,
    },
    /// Print the key material an image derives: c, p, He, mean, Sk.
    Key { input: PathBuf },
    /// Measure an image, optionally against its ciphered counterpart.
    Analyze {
        input: PathBuf,
        /// Second image to pair with, enabling invariant verdicts.
        #[arg(long)]
        against: Option<PathBuf>,
        /// Series length: the first n pixel values per channel are reported.
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value = "structured", value_parser = parse_format)]
        format: ReportFormat,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_mode(s: &str) -> Result<ChannelMode, String> {
    match s {
        "none" => Ok(ChannelMode::None),
        "rotate" => Ok(ChannelMode::Rotate),
        other => Err(format!("unknown mode '{other}', expected none or rotate")),
    }
}

fn parse_format(s: &str) -> Result<ReportFormat, String> {
    match s {
        "structured" => Ok(ReportFormat::Structured),
        "csv" => Ok(ReportFormat::Csv),
        other => Err(format!(
            "unknown format '{other}', expected structured or csv"
        )),
    }
}

/// Parses and executes `argv`, returning the process exit code.
pub fn run<I, T>(argv: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            2
        }
    }
}

fn execute(command: Command) -> Result<u8, AppError> {
    match command {
        Command::Encrypt {
            input,
            output,
            mode,
            key,
        } => {
            let img = read_image(&input)?;
            let cfg = CipherConfig {
                channel_mode: mode,
                key_override: key,
            };
            let (ciphered, used) = encrypt(&img, &cfg);
            write_image(&output, &ciphered)?;
            println!("{used}");
            Ok(0)
        }
        Command::Decrypt {
            input,
            output,
            mode,
            key,
        } => {
            let img = read_image(&input)?;
            let cfg = CipherConfig {
                channel_mode: mode,
                key_override: key,
            };
            let (restored, used) = decrypt(&img, &cfg);
            write_image(&output, &restored)?;
            println!("{used}");
            Ok(0)
        }
        Command::Key { input } => {
            println!("{}", derive_key(&read_image(&input)?));
            Ok(0)
        }
        Command::Analyze {
            input,
            against,
            n,
            format,
            out,
        } => {
            let plain = read_image(&input)?;
            let other = against.map(|path| read_image(&path)).transpose()?;
            let report = match build_report(&plain, other.as_ref(), n) {
                Ok(report) => report,
                Err(err) => {
                    // The only report-level failure is a plain/ciphered
                    // shape mismatch, which is itself a failed invariant.
                    eprintln!("invariant violation: {err}");
                    return Ok(3);
                }
            };
            let text = export_report(&report, format);
            match out {
                Some(path) => fs::write(&path, text).map_err(|source| AppError::Io {
                    path: path.clone(),
                    source,
                })?,
                None => print!("{text}"),
            }
            if let Some(verdicts) = &report.verdicts {
                eprintln!("invariants: {verdicts}");
                if !verdicts.all_pass() {
                    return Ok(3);
                }
            }
            Ok(0)
        }
    }
}

enum Format {
    Ppm,
    Png,
}

fn format_of(path: &Path) -> Result<Format, AppError> {
    match path
        .extension()
        .and_then(|e| e.to_str())
        .map(|e| e.to_ascii_lowercase())
        .as_deref()
    {
        Some("ppm") => Ok(Format::Ppm),
        Some("png") => Ok(Format::Png),
        _ => Err(AppError::UnsupportedExtension { path: path.into() }),
    }
}

fn read_image(path: &Path) -> Result<ImageMatrix, AppError> {
    let format = format_of(path)?;
    let bytes = fs::read(path).map_err(|source| AppError::Io {
        path: path.into(),
        source,
    })?;
    match format {
        Format::Ppm => ppm::read_ppm(&bytes).map_err(|source| AppError::Ppm {
            path: path.into(),
            source,
        }),
        Format::Png => png_adapter::read_png(&bytes).map_err(|source| AppError::Png {
            path: path.into(),
            source,
        }),
    }
}

fn write_image(path: &Path, img: &ImageMatrix) -> Result<(), AppError> {
    let bytes = match format_of(path)? {
        Format::Ppm => ppm::write_ppm(img),
        Format::Png => png_adapter::write_png(img).map_err(|source| AppError::Png {
            path: path.into(),
            source,
        })?,
    };
    fs::write(path, bytes).map_err(|source| AppError::Io {
        path: path.into(),
        source,
    })
}
