//! Binary portable pixmap (`P6`) reader and writer.
//!
//! The reader accepts any whitespace between header tokens and `#` comments
//! through end-of-line; the writer always emits the canonical form
//! `P6\n<width> <height>\n255\n` so a given image serializes to the same
//! bytes on every run.

use pixshuffle_core::ImageMatrix;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PpmError {
    #[error("malformed header: {field}: {detail}")]
    MalformedHeader { field: &'static str, detail: String },
    #[error("unsupported maxval {maxval}, only 255 is supported")]
    UnsupportedMaxval { maxval: u64 },
    #[error("truncated payload: header promises {expected} bytes, found {actual}")]
    TruncatedPayload { expected: usize, actual: usize },
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_whitespace_and_comments(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&b) = self.bytes.get(self.pos) {
                    self.pos += 1;
                    if b == b'\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn parse_uint(&mut self, field: &'static str) -> Result<u64, PpmError> {
        self.skip_whitespace_and_comments();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or(PpmError::MalformedHeader {
                    field,
                    detail: "value does not fit in 64 bits".into(),
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(PpmError::MalformedHeader {
                field,
                detail: match self.bytes.get(self.pos) {
                    Some(&b) => format!("expected digits, found byte 0x{b:02x}"),
                    None => "unexpected end of header".into(),
                },
            });
        }
        Ok(value)
    }
}

/// Decodes a binary PPM into an image.
pub fn read_ppm(bytes: &[u8]) -> Result<ImageMatrix, PpmError> {
    if bytes.len() < 2 || &bytes[..2] != b"P6" {
        return Err(PpmError::MalformedHeader {
            field: "magic",
            detail: "file does not start with P6".into(),
        });
    }
    let mut cursor = Cursor { bytes, pos: 2 };

    let width = cursor.parse_uint("width")?;
    let height = cursor.parse_uint("height")?;
    for (field, value) in [("width", width), ("height", height)] {
        if value == 0 {
            return Err(PpmError::MalformedHeader {
                field,
                detail: "must be at least 1".into(),
            });
        }
    }
    let maxval = cursor.parse_uint("maxval")?;
    if maxval != 255 {
        return Err(PpmError::UnsupportedMaxval { maxval });
    }

    // Exactly one whitespace byte separates the header from the payload.
    match bytes.get(cursor.pos) {
        Some(b) if b.is_ascii_whitespace() => cursor.pos += 1,
        other => {
            return Err(PpmError::MalformedHeader {
                field: "maxval",
                detail: match other {
                    Some(&b) => format!("expected whitespace after maxval, found byte 0x{b:02x}"),
                    None => "unexpected end of header".into(),
                },
            })
        }
    }

    let expected = (width as usize)
        .checked_mul(height as usize)
        .and_then(|n| n.checked_mul(3))
        .ok_or(PpmError::MalformedHeader {
            field: "width",
            detail: "dimensions overflow the payload size".into(),
        })?;
    let payload = &bytes[cursor.pos..];
    if payload.len() < expected {
        return Err(PpmError::TruncatedPayload {
            expected,
            actual: payload.len(),
        });
    }
    // Bytes past the raster are ignored.
    let img = ImageMatrix::new(
        height as usize,
        width as usize,
        payload[..expected].to_vec(),
    )
    .expect("dimensions validated above");
    Ok(img)
}

/// Encodes an image as canonical binary PPM bytes.
pub fn write_ppm(img: &ImageMatrix) -> Vec<u8> {
    let header = format!("P6\n{} {}\n255\n", img.cols(), img.rows());
    let mut out = Vec::with_capacity(header.len() + img.samples().len());
    out.extend_from_slice(header.as_bytes());
    out.extend_from_slice(img.samples());
    out
}
