//! PNG adapter, restricted to 8-bit RGB.
//!
//! Palette images expand losslessly to RGB on decode. Anything else that
//! is not already 8-bit RGB (grayscale, alpha including palette
//! transparency, 16-bit channels) is rejected: a silent conversion would
//! alter samples and with them the image-derived key.

use pixshuffle_core::ImageMatrix;
use png::{BitDepth, ColorType};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PngError {
    #[error("png decode failed: {0}")]
    Decode(#[from] png::DecodingError),
    #[error("png encode failed: {0}")]
    Encode(#[from] png::EncodingError),
    #[error("unsupported png content: {color:?}/{bit_depth:?}, only 8-bit RGB is accepted")]
    UnsupportedContent {
        color: ColorType,
        bit_depth: BitDepth,
    },
}

/// Decodes a PNG, accepting only content that maps to 8-bit RGB without
/// value changes.
pub fn read_png(bytes: &[u8]) -> Result<ImageMatrix, PngError> {
    let mut decoder = png::Decoder::new(std::io::Cursor::new(bytes));
    decoder.set_transformations(png::Transformations::EXPAND);
    let mut reader = decoder.read_info()?;
    let mut buf = vec![0u8; reader.output_buffer_size().expect("image fits in memory")];
    let info = reader.next_frame(&mut buf)?;
    if info.color_type != ColorType::Rgb || info.bit_depth != BitDepth::Eight {
        return Err(PngError::UnsupportedContent {
            color: info.color_type,
            bit_depth: info.bit_depth,
        });
    }
    buf.truncate(info.buffer_size());
    let img = ImageMatrix::new(info.height as usize, info.width as usize, buf)
        .expect("frame buffer sized by the decoder");
    Ok(img)
}

/// Encodes an image as an 8-bit RGB PNG.
pub fn write_png(img: &ImageMatrix) -> Result<Vec<u8>, PngError> {
    let mut out = Vec::new();
    {
        let mut encoder = png::Encoder::new(&mut out, img.cols() as u32, img.rows() as u32);
        encoder.set_color(ColorType::Rgb);
        encoder.set_depth(BitDepth::Eight);
        let mut writer = encoder.write_header()?;
        writer.write_image_data(img.samples())?;
    }
    Ok(out)
}
