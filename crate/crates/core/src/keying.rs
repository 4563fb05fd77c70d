//! Image statistics and the image-derived iteration key.
//!
//! The key `Sk` is an iteration count computed from the image itself:
//!
//! ```text
//! Sk = floor(rows·cols + He·10³ + mean) mod cols      (0 maps to cols)
//! ```
//!
//! where `He` is the Shannon entropy and `mean` the arithmetic mean of the
//! pooled samples of all three channels, both quantized to four decimal
//! places before entering the equation. Every input is a function of the
//! image's dimensions and sample multiset only, so the identical key is
//! recoverable from the ciphered image.

use core::fmt;

use crate::image::ImageMatrix;

/// A non-negative value frozen at four decimal places, stored as `value·10⁴`.
///
/// Entropy and mean are quantized to this reporting precision before keying,
/// which keeps the derived key bit-stable across floating-point
/// environments. Equality, ordering and display are exact.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Quantized4(i64);

impl Quantized4 {
    /// Rounds to four decimal places, halves away from zero.
    pub fn from_f64(value: f64) -> Self {
        Self(libm::round(value * 10_000.0) as i64)
    }

    /// Exact `num/den` rounded to four decimal places (half away from zero).
    pub fn from_int_ratio(num: u64, den: u64) -> Self {
        assert!(den > 0, "ratio denominator must be positive");
        let scaled = (num as u128) * 20_000 + den as u128;
        Self((scaled / (2 * den as u128)) as i64)
    }

    /// The underlying `value·10⁴` integer.
    pub fn raw(self) -> i64 {
        self.0
    }

    pub fn value(self) -> f64 {
        self.0 as f64 / 10_000.0
    }
}

impl fmt::Display for Quantized4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let mag = self.0.unsigned_abs();
        write!(f, "{sign}{}.{:04}", mag / 10_000, mag % 10_000)
    }
}

#[cfg(feature = "serde")]
impl serde::Serialize for Quantized4 {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.value())
    }
}

#[cfg(feature = "serde")]
impl<'de> serde::Deserialize<'de> for Quantized4 {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        f64::deserialize(deserializer).map(Quantized4::from_f64)
    }
}

/// Occurrence counts over the samples of all three channels combined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PooledHistogram {
    bins: [u64; 256],
    total: u64,
}

impl PooledHistogram {
    pub fn bins(&self) -> &[u64; 256] {
        &self.bins
    }

    /// Total sample count, `rows · cols · 3`.
    pub fn total(&self) -> u64 {
        self.total
    }
}

/// Counts every sample of every channel into one 256-bin histogram.
pub fn pooled_histogram(img: &ImageMatrix) -> PooledHistogram {
    let mut bins = [0u64; 256];
    for &sample in img.samples() {
        bins[sample as usize] += 1;
    }
    PooledHistogram {
        bins,
        total: img.samples().len() as u64,
    }
}

/// Shannon entropy of the pooled distribution, in bits, quantized to four
/// decimal places.
///
/// `He = −Σ (bin/total)·log₂(bin/total)` over the occupied bins, summed in
/// double precision with Kahan compensation; only the final value is
/// quantized.
pub fn shannon_entropy(hist: &PooledHistogram) -> Quantized4 {
    assert!(hist.total > 0, "entropy of an empty histogram");
    let total = hist.total as f64;
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    for &bin in hist.bins.iter().filter(|&&bin| bin > 0) {
        let p = bin as f64 / total;
        let term = p * libm::log2(p);
        let y = term - carry;
        let t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
    Quantized4::from_f64(-sum)
}

/// Exact integer sum of every sample in the image.
pub fn sample_sum(img: &ImageMatrix) -> u64 {
    img.samples().iter().map(|&s| s as u64).sum()
}

/// Arithmetic mean over all `rows · cols · 3` samples, quantized to four
/// decimal places. Computed from the exact integer sum.
pub fn sample_mean(img: &ImageMatrix) -> Quantized4 {
    Quantized4::from_int_ratio(sample_sum(img), img.samples().len() as u64)
}

/// The shared secret recovered from an image: dimensions, pooled entropy,
/// pooled mean, and the iteration count they produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct KeyMaterial {
    /// Pixel rows (`c`).
    pub rows: usize,
    /// Pixel columns (`p`).
    pub cols: usize,
    /// Pooled Shannon entropy `He`, bits.
    pub entropy: Quantized4,
    /// Pooled sample mean.
    pub mean: Quantized4,
    /// Iteration count `Sk`, always in `1..=cols`.
    pub iterations: u64,
}

impl fmt::Display for KeyMaterial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "c={} p={} He={} mean={} Sk={}",
            self.rows, self.cols, self.entropy, self.mean, self.iterations
        )
    }
}

/// Derives the key from an image.
///
/// The whole sum `rows·cols + He·10³ + mean` is floored and reduced mod
/// `cols`; a zero residue maps to `cols` so the cipher never degenerates to
/// zero iterations. The quantized entropy and mean make the sum a multiple
/// of 10⁻⁴, so it is evaluated in scaled-integer arithmetic; the floor and
/// residue are exact on every platform.
pub fn derive_key(img: &ImageMatrix) -> KeyMaterial {
    let entropy = shannon_entropy(&pooled_histogram(img));
    let mean = sample_mean(img);
    let rows = img.rows();
    let cols = img.cols();
    // raw·10⁴ = rows·cols·10⁴ + He₄·10³ + mean₄, all integers.
    let raw_e4 =
        (rows as i128 * cols as i128) * 10_000 + entropy.raw() as i128 * 1_000 + mean.raw() as i128;
    let floored = raw_e4 / 10_000;
    let residue = (floored % cols as i128) as u64;
    let iterations = if residue == 0 { cols as u64 } else { residue };
    KeyMaterial {
        rows,
        cols,
        entropy,
        mean,
        iterations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use alloc::vec::Vec;

    fn image(rows: usize, cols: usize, samples: Vec<u8>) -> ImageMatrix {
        ImageMatrix::new(rows, cols, samples).unwrap()
    }

    /// Independent counting oracle: one pass per bin value.
    fn brute_force_bins(samples: &[u8]) -> [u64; 256] {
        let mut bins = [0u64; 256];
        for v in 0..=255u8 {
            bins[v as usize] = samples.iter().filter(|&&s| s == v).count() as u64;
        }
        bins
    }

    #[test]
    fn histogram_constant_image() {
        let img = image(2, 3, vec![100; 18]);
        let hist = pooled_histogram(&img);
        assert_eq!(hist.bins()[100], 18);
        assert_eq!(hist.total(), 18);
        assert_eq!(hist.bins().iter().sum::<u64>(), 18);
    }

    #[test]
    fn histogram_counts_directly() {
        let img = image(1, 1, vec![0, 0, 255]);
        let hist = pooled_histogram(&img);
        assert_eq!(hist.bins()[0], 2);
        assert_eq!(hist.bins()[255], 1);
        assert_eq!(hist.total(), 3);
    }

    #[test]
    fn histogram_matches_brute_force() {
        let samples: Vec<u8> = (0..48u32).map(|i| (i * 97 % 256) as u8).collect();
        let img = image(4, 4, samples.clone());
        let hist = pooled_histogram(&img);
        assert_eq!(hist.bins(), &brute_force_bins(&samples));
    }

    #[test]
    fn entropy_fixtures() {
        let constant = pooled_histogram(&image(2, 3, vec![100; 18]));
        assert_eq!(shannon_entropy(&constant), Quantized4::from_f64(0.0));

        let mut half = vec![0u8; 6];
        half.extend([255u8; 6]);
        let binary = pooled_histogram(&image(2, 2, half));
        assert_eq!(shannon_entropy(&binary), Quantized4::from_f64(1.0));

        // Every value 0..=255 exactly three times: uniform over 256 symbols.
        let uniform: Vec<u8> = (0..=255u8).flat_map(|v| [v, v, v]).collect();
        let hist = pooled_histogram(&image(16, 16, uniform));
        assert_eq!(shannon_entropy(&hist), Quantized4::from_f64(8.0));
    }

    #[test]
    fn mean_fixtures() {
        assert_eq!(sample_mean(&image(2, 3, vec![100; 18])).value(), 100.0);
        let mut half = vec![0u8; 6];
        half.extend([255u8; 6]);
        assert_eq!(sample_mean(&image(2, 2, half)).value(), 127.5);
        assert_eq!(sample_mean(&image(1, 1, vec![1, 2, 3])).value(), 2.0);
    }

    #[test]
    fn mean_uses_exact_integer_sum() {
        let samples: Vec<u8> = (0..60u32).map(|i| (i * 41 % 256) as u8).collect();
        let img = image(4, 5, samples.clone());
        let expected: u64 = samples.iter().map(|&s| s as u64).sum();
        assert_eq!(sample_sum(&img), expected);
        assert_eq!(sample_mean(&img), Quantized4::from_int_ratio(expected, 60));
    }

    #[test]
    fn quantized_display_is_exact() {
        assert_eq!(Quantized4::from_f64(0.0).to_string(), "0.0000");
        assert_eq!(Quantized4::from_f64(7.6035).to_string(), "7.6035");
        assert_eq!(Quantized4::from_f64(143.5284).to_string(), "143.5284");
        assert_eq!(Quantized4::from_int_ratio(255, 2).to_string(), "127.5000");
    }

    #[test]
    fn quantization_rounds_half_away_from_zero() {
        assert_eq!(Quantized4::from_f64(0.00005).raw(), 1);
        assert_eq!(Quantized4::from_int_ratio(1, 20_000).raw(), 1);
        assert_eq!(Quantized4::from_int_ratio(1, 30_000).raw(), 0);
    }

    #[test]
    fn key_constant_image() {
        // He=0, mean=100, raw = 6 + 0 + 100 = 106; 106 mod 3 = 1.
        let key = derive_key(&image(2, 3, vec![100; 18]));
        assert_eq!(key.rows, 2);
        assert_eq!(key.cols, 3);
        assert_eq!(key.entropy, Quantized4::from_f64(0.0));
        assert_eq!(key.mean.value(), 100.0);
        assert_eq!(key.iterations, 1);
    }

    #[test]
    fn key_balanced_binary_image() {
        // He=1, mean=127.5, raw = 4 + 1000 + 127.5; floor = 1131; mod 2 = 1.
        let mut samples = vec![0u8; 6];
        samples.extend([255u8; 6]);
        let key = derive_key(&image(2, 2, samples));
        assert_eq!(key.entropy, Quantized4::from_f64(1.0));
        assert_eq!(key.mean.value(), 127.5);
        assert_eq!(key.iterations, 1);
    }

    #[test]
    fn zero_residue_maps_to_cols() {
        // 1x1 pixel (10,20,30): raw = 1 + 1585.0 + 20 → floor mod 1 = 0 → Sk = 1.
        let key = derive_key(&image(1, 1, vec![10, 20, 30]));
        assert_eq!(key.iterations, 1);
    }

    #[test]
    fn key_line_format() {
        let key = derive_key(&image(2, 3, vec![100; 18]));
        assert_eq!(key.to_string(), "c=2 p=3 He=0.0000 mean=100.0000 Sk=1");
    }
}
