//! File formats, report export, and the command-line front end for the
//! pixshuffle image cipher.
//!
//! Binary PPM (`P6`, maxval 255) is the interchange format: it is lossless,
//! uncompressed, and its payload byte order matches the in-memory sample
//! layout. PNG is supported as an adapter for 8-bit RGB images only:
//! anything that would require a conversion (alpha, grayscale, 16-bit
//! channels) is rejected rather than silently rewritten, because changing a
//! single sample changes the image-derived key.

pub mod codec;
pub mod report;
pub mod run;

pub use codec::{png_adapter, ppm};
pub use run::run;
