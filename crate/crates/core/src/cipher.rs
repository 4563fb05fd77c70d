//! Encryption and decryption pipelines.
//!
//! Encryption derives the iteration count `Sk` from the plain image, then
//! runs `Sk` rounds: shuffle every channel with the transpose-reshape
//! permutation, then (in [`ChannelMode::Rotate`]) relabel the channels
//! `(R,G,B) → (G,B,R)`. The rounds collapse into one pass (the
//! permutation's `Sk`-th power per channel plus a rotation by `Sk mod 3`)
//! that is bit-identical to the literal loop.
//!
//! Decryption recomputes `Sk` from the *ciphered* image (valid because every
//! key input is permutation-invariant) and applies the inverse rotation and
//! inverse permutation power.

use core::num::NonZeroU64;

use crate::image::{merge_channels, split_channels, ChannelOrder, ImageMatrix};
use crate::keying::{derive_key, KeyMaterial};
use crate::permute::Permutation;

/// What happens to the channel labels after each round's spatial shuffle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum ChannelMode {
    /// Channels are concatenated back unchanged.
    None,
    /// Channels are relabeled `(R,G,B) → (G,B,R)` once per round.
    #[default]
    Rotate,
}

/// Cipher options.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CipherConfig {
    pub channel_mode: ChannelMode,
    /// Replaces the derived iteration count when present.
    pub key_override: Option<NonZeroU64>,
}

impl CipherConfig {
    pub fn new(channel_mode: ChannelMode) -> Self {
        Self {
            channel_mode,
            key_override: None,
        }
    }
}

fn effective_key(img: &ImageMatrix, cfg: &CipherConfig) -> KeyMaterial {
    let mut key = derive_key(img);
    if let Some(fixed) = cfg.key_override {
        key.iterations = fixed.get();
    }
    key
}

/// Encrypts an image, returning the ciphered image and the key material used.
///
/// Output dimensions equal input dimensions and the sample multiset is
/// preserved, so the receiver can re-derive the key from the output. A
/// constant image is a fixed point of every spatial shuffle and, under
/// [`ChannelMode::None`], encrypts to itself; that is inherent to a pure
/// permutation cipher, not an error.
pub fn encrypt(img: &ImageMatrix, cfg: &CipherConfig) -> (ImageMatrix, KeyMaterial) {
    let key = effective_key(img, cfg);
    let shuffle = Permutation::transpose_reshape(img.rows(), img.cols()).pow(key.iterations);
    let (r, g, b) = split_channels(img);
    let r = shuffle.apply(&r).expect("permutation sized for the image");
    let g = shuffle.apply(&g).expect("permutation sized for the image");
    let b = shuffle.apply(&b).expect("permutation sized for the image");
    let order = match cfg.channel_mode {
        ChannelMode::None => ChannelOrder::identity(),
        ChannelMode::Rotate => ChannelOrder::identity().rotated((key.iterations % 3) as usize),
    };
    let out = merge_channels(&r, &g, &b, order).expect("channels share the image shape");
    (out, key)
}

/// Decrypts an image ciphered under the same configuration.
///
/// The key is recomputed from the ciphered image itself unless overridden;
/// `decrypt(encrypt(img, cfg).0, cfg) == img` bit-exactly.
pub fn decrypt(img: &ImageMatrix, cfg: &CipherConfig) -> (ImageMatrix, KeyMaterial) {
    let key = effective_key(img, cfg);
    let unshuffle = Permutation::transpose_reshape(img.rows(), img.cols())
        .pow(key.iterations)
        .inverted();
    let (s0, s1, s2) = split_channels(img);
    let mut planes = [s0, s1, s2];
    if cfg.channel_mode == ChannelMode::Rotate {
        // Encryption placed channel j in slot (j - Sk) mod 3; rotating the
        // slots right by Sk mod 3 puts every plane back under its own label.
        planes.rotate_right((key.iterations % 3) as usize);
    }
    let [r, g, b] = planes;
    let r = unshuffle
        .apply(&r)
        .expect("permutation sized for the image");
    let g = unshuffle
        .apply(&g)
        .expect("permutation sized for the image");
    let b = unshuffle
        .apply(&b)
        .expect("permutation sized for the image");
    let out = merge_channels(&r, &g, &b, ChannelOrder::identity())
        .expect("channels share the image shape");
    (out, key)
}
