//! Pixel-shuffling image cipher with an image-derived key.
//!
//! The cipher displaces every sample of an RGB image without changing any
//! sample value. Each round transposes each color channel and reshapes the
//! transpose back to the original dimensions in column-major order, a fixed
//! spatial permutation, and then (optionally) rotates the channel labels
//! `(R,G,B) → (G,B,R)`. The round count `Sk` is derived from the image
//! itself: its dimensions, its pooled Shannon entropy, and its pooled sample
//! mean. All three statistics are invariant under the shuffle, so the
//! receiver recomputes the same key from the ciphered image and inverts the
//! rounds; no key ever travels with the image.
//!
//! Iterating the shuffle `Sk` times is collapsed into a single application
//! of the permutation's `Sk`-th power, computed in O(N) from the cycle
//! decomposition and bit-identical to the literal loop.
//!
//! This crate is `no_std` (with `alloc`); file formats and the command-line
//! front end live in the companion `pixshuffle-cli` crate.
//!
//! # Security
//!
//! This is a permutation cipher, not a modern cryptosystem. Histograms are
//! preserved by construction, and the effective key space is bounded by
//! `cols × order(P) × 3`, tiny by cryptographic standards. Treat it as an
//! obfuscation and analysis vehicle, not as protection against a motivated
//! adversary.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod analysis;
pub mod cipher;
pub mod image;
pub mod keying;
pub mod permute;

pub use analysis::{
    adjacent_correlation, build_report, rgb_series, AnalysisError, AnalysisReport, ChannelStats,
    CorrelationSet, Direction, ImageStats, PairVerdicts,
};
pub use cipher::{decrypt, encrypt, ChannelMode, CipherConfig};
pub use image::{
    merge_channels, split_channels, Channel, ChannelLabel, ChannelOrder, ImageError, ImageMatrix,
};
pub use keying::{
    derive_key, pooled_histogram, sample_mean, sample_sum, shannon_entropy, KeyMaterial,
    PooledHistogram, Quantized4,
};
pub use permute::{naive_iterate, Permutation, PermutationError};
