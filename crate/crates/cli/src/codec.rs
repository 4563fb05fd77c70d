//! Lossless raster codecs. Round trips are bit-exact by contract.

pub mod png_adapter;
pub mod ppm;
