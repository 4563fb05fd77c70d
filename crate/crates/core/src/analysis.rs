//! Cipher-quality measurements: histograms, RGB sample series,
//! adjacent-pixel correlation, and paired plain/ciphered invariant checks.
//!
//! Series are taken over pixels in row-major order. Correlation reduction is
//! reported, never asserted: a permutation cipher lowers the correlation of
//! natural images but not of every input.

use alloc::vec::Vec;
use core::fmt;

use crate::image::{ChannelLabel, ImageMatrix};
use crate::keying::{derive_key, pooled_histogram, KeyMaterial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnalysisError {
    /// Paired images must share dimensions.
    DimensionMismatch {
        plain: (usize, usize),
        ciphered: (usize, usize),
    },
    /// The direction yields fewer than two adjacent pairs.
    NotEnoughPairs { direction: Direction, pairs: usize },
    /// A marginal variance is zero, e.g. on a constant channel.
    UndefinedCorrelation {
        direction: Direction,
        channel: ChannelLabel,
    },
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::DimensionMismatch { plain, ciphered } => write!(
                f,
                "paired images differ in size: {}x{} vs {}x{}",
                plain.0, plain.1, ciphered.0, ciphered.1
            ),
            AnalysisError::NotEnoughPairs { direction, pairs } => {
                write!(f, "{direction:?} direction yields {pairs} pairs, need at least 2")
            }
            AnalysisError::UndefinedCorrelation { direction, channel } => write!(
                f,
                "correlation undefined for channel {channel} in {direction:?} direction: zero variance"
            ),
        }
    }
}

impl core::error::Error for AnalysisError {}

/// Neighbor direction for adjacent-pixel correlation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Horizontal,
    Vertical,
    Diagonal,
}

impl Direction {
    fn offsets(self) -> (usize, usize) {
        match self {
            Direction::Horizontal => (0, 1),
            Direction::Vertical => (1, 0),
            Direction::Diagonal => (1, 1),
        }
    }
}

/// The first `min(n, rows·cols)` pixel values per channel, row-major.
pub fn rgb_series(img: &ImageMatrix, n: usize) -> (Vec<u8>, Vec<u8>, Vec<u8>) {
    let take = n.min(img.pixel_count());
    let mut red = Vec::with_capacity(take);
    let mut green = Vec::with_capacity(take);
    let mut blue = Vec::with_capacity(take);
    for px in img.samples().chunks_exact(3).take(take) {
        red.push(px[0]);
        green.push(px[1]);
        blue.push(px[2]);
    }
    (red, green, blue)
}

/// Pearson correlation over every in-bounds adjacent sample pair of one
/// channel in one direction.
///
/// Sums are accumulated in exact integer arithmetic; only the final
/// combination runs in floating point, so the result is symmetric in pair
/// order and identical across platforms.
pub fn adjacent_correlation(
    img: &ImageMatrix,
    direction: Direction,
    channel: ChannelLabel,
) -> Result<f64, AnalysisError> {
    let (dr, dc) = direction.offsets();
    let rows = img.rows();
    let cols = img.cols();
    let pair_rows = rows - dr;
    let pair_cols = cols - dc;
    let pairs = pair_rows * pair_cols;
    if pairs < 2 {
        return Err(AnalysisError::NotEnoughPairs { direction, pairs });
    }

    let samples = img.samples();
    let offset = channel.index();
    let at = |row: usize, col: usize| samples[(row * cols + col) * 3 + offset] as u64;

    let (mut sx, mut sy, mut sxx, mut syy, mut sxy) = (0u64, 0u64, 0u64, 0u64, 0u64);
    for row in 0..pair_rows {
        for col in 0..pair_cols {
            let x = at(row, col);
            let y = at(row + dr, col + dc);
            sx += x;
            sy += y;
            sxx += x * x;
            syy += y * y;
            sxy += x * y;
        }
    }

    let n = pairs as i128;
    let num = n * sxy as i128 - sx as i128 * sy as i128;
    let var_x = n * sxx as i128 - (sx as i128) * (sx as i128);
    let var_y = n * syy as i128 - (sy as i128) * (sy as i128);
    if var_x == 0 || var_y == 0 {
        return Err(AnalysisError::UndefinedCorrelation { direction, channel });
    }
    let r = num as f64 / (libm::sqrt(var_x as f64) * libm::sqrt(var_y as f64));
    // |num| <= sqrt(var_x·var_y) holds exactly in the integers; clamp the
    // floating-point residue back into range.
    Ok(r.clamp(-1.0, 1.0))
}

/// Correlation coefficients of one channel; `None` marks an undefined value.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CorrelationSet {
    pub horizontal: Option<f64>,
    pub vertical: Option<f64>,
    pub diagonal: Option<f64>,
}

/// Per-channel measurements.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ChannelStats {
    /// 256-bin occurrence counts; sums to `rows·cols`.
    pub histogram: Vec<u64>,
    /// First `min(n, rows·cols)` values, row-major.
    pub series: Vec<u8>,
    pub correlation: CorrelationSet,
}

/// Everything measured on a single image.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ImageStats {
    pub key: KeyMaterial,
    /// 256-bin counts over all three channels; sums to `rows·cols·3`.
    pub pooled_histogram: Vec<u64>,
    pub red: ChannelStats,
    pub green: ChannelStats,
    pub blue: ChannelStats,
}

/// Invariant checks for a (plain, ciphered) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PairVerdicts {
    pub equal_dimensions: bool,
    pub equal_pooled_histograms: bool,
    pub equal_entropy: bool,
    pub equal_mean: bool,
    pub equal_iterations: bool,
}

impl PairVerdicts {
    pub fn all_pass(&self) -> bool {
        self.equal_dimensions
            && self.equal_pooled_histograms
            && self.equal_entropy
            && self.equal_mean
            && self.equal_iterations
    }
}

impl fmt::Display for PairVerdicts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "pass" } else { "FAIL" };
        write!(
            f,
            "dimensions: {} / pooled histograms: {} / entropy: {} / mean: {} / key: {}",
            mark(self.equal_dimensions),
            mark(self.equal_pooled_histograms),
            mark(self.equal_entropy),
            mark(self.equal_mean),
            mark(self.equal_iterations)
        )
    }
}

/// A one- or two-image measurement report.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AnalysisReport {
    /// Requested series length (the kept length is capped per image).
    pub series_len: usize,
    pub plain: ImageStats,
    pub ciphered: Option<ImageStats>,
    pub verdicts: Option<PairVerdicts>,
}

fn channel_stats(img: &ImageMatrix, channel: ChannelLabel, series: Vec<u8>) -> ChannelStats {
    let mut histogram = alloc::vec![0u64; 256];
    for px in img.samples().chunks_exact(3) {
        histogram[px[channel.index()] as usize] += 1;
    }
    let correlation = CorrelationSet {
        horizontal: adjacent_correlation(img, Direction::Horizontal, channel).ok(),
        vertical: adjacent_correlation(img, Direction::Vertical, channel).ok(),
        diagonal: adjacent_correlation(img, Direction::Diagonal, channel).ok(),
    };
    ChannelStats {
        histogram,
        series,
        correlation,
    }
}

fn image_stats(img: &ImageMatrix, n: usize) -> ImageStats {
    let (red_series, green_series, blue_series) = rgb_series(img, n);
    ImageStats {
        key: derive_key(img),
        pooled_histogram: pooled_histogram(img).bins().to_vec(),
        red: channel_stats(img, ChannelLabel::Red, red_series),
        green: channel_stats(img, ChannelLabel::Green, green_series),
        blue: channel_stats(img, ChannelLabel::Blue, blue_series),
    }
}

/// Measures one image, or a plain/ciphered pair with invariant verdicts.
pub fn build_report(
    plain: &ImageMatrix,
    ciphered: Option<&ImageMatrix>,
    n: usize,
) -> Result<AnalysisReport, AnalysisError> {
    let plain_stats = image_stats(plain, n);
    let (ciphered_stats, verdicts) = match ciphered {
        None => (None, None),
        Some(other) => {
            if (other.rows(), other.cols()) != (plain.rows(), plain.cols()) {
                return Err(AnalysisError::DimensionMismatch {
                    plain: (plain.rows(), plain.cols()),
                    ciphered: (other.rows(), other.cols()),
                });
            }
            let stats = image_stats(other, n);
            let verdicts = PairVerdicts {
                equal_dimensions: true,
                equal_pooled_histograms: stats.pooled_histogram == plain_stats.pooled_histogram,
                equal_entropy: stats.key.entropy == plain_stats.key.entropy,
                equal_mean: stats.key.mean == plain_stats.key.mean,
                equal_iterations: stats.key.iterations == plain_stats.key.iterations,
            };
            (Some(stats), Some(verdicts))
        }
    };
    Ok(AnalysisReport {
        series_len: n,
        plain: plain_stats,
        ciphered: ciphered_stats,
        verdicts,
    })
}
