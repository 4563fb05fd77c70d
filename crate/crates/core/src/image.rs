//! In-memory RGB raster, channel extraction/merging, and channel ordering.

use alloc::vec::Vec;
use core::fmt;

/// Errors from image and channel construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImageError {
    /// Zero rows or columns are not representable.
    EmptyDimensions { rows: usize, cols: usize },
    /// `rows · cols · 3` overflows the address space.
    DimensionsTooLarge { rows: usize, cols: usize },
    /// Sample buffer length does not match the declared dimensions.
    SampleCountMismatch { expected: usize, actual: usize },
    /// Channels passed to `merge_channels` differ in shape.
    ChannelShapeMismatch {
        red: (usize, usize),
        green: (usize, usize),
        blue: (usize, usize),
    },
    /// A channel order must name each of R, G, B exactly once.
    InvalidChannelOrder,
}

impl fmt::Display for ImageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ImageError::EmptyDimensions { rows, cols } => {
                write!(f, "image dimensions {rows}x{cols} must both be at least 1")
            }
            ImageError::DimensionsTooLarge { rows, cols } => {
                write!(
                    f,
                    "image dimensions {rows}x{cols} overflow the sample count"
                )
            }
            ImageError::SampleCountMismatch { expected, actual } => {
                write!(f, "expected {expected} samples, got {actual}")
            }
            ImageError::ChannelShapeMismatch { red, green, blue } => write!(
                f,
                "channel shapes differ: red {}x{}, green {}x{}, blue {}x{}",
                red.0, red.1, green.0, green.1, blue.0, blue.1
            ),
            ImageError::InvalidChannelOrder => {
                write!(f, "channel order must contain R, G and B exactly once")
            }
        }
    }
}

impl core::error::Error for ImageError {}

/// An RGB image of `rows × cols` pixels with 8 bits per sample.
///
/// Samples are stored row-major by pixel with interleaved R,G,B, matching
/// the byte order of a binary PPM payload so file I/O is a straight copy.
/// Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImageMatrix {
    rows: usize,
    cols: usize,
    samples: Vec<u8>,
}

impl ImageMatrix {
    /// Builds an image, validating that `samples.len() == rows · cols · 3`.
    pub fn new(rows: usize, cols: usize, samples: Vec<u8>) -> Result<Self, ImageError> {
        if rows == 0 || cols == 0 {
            return Err(ImageError::EmptyDimensions { rows, cols });
        }
        let expected = rows
            .checked_mul(cols)
            .and_then(|n| n.checked_mul(3))
            .ok_or(ImageError::DimensionsTooLarge { rows, cols })?;
        if samples.len() != expected {
            return Err(ImageError::SampleCountMismatch {
                expected,
                actual: samples.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            samples,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn pixel_count(&self) -> usize {
        self.rows * self.cols
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<u8> {
        self.samples
    }

    /// The `[r, g, b]` triple at `(row, col)`. Panics out of bounds.
    pub fn pixel(&self, row: usize, col: usize) -> [u8; 3] {
        assert!(row < self.rows && col < self.cols, "pixel out of bounds");
        let base = (row * self.cols + col) * 3;
        [
            self.samples[base],
            self.samples[base + 1],
            self.samples[base + 2],
        ]
    }
}

/// One color plane: `rows × cols` 8-bit samples, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Channel {
    rows: usize,
    cols: usize,
    samples: Vec<u8>,
}

impl Channel {
    pub fn new(rows: usize, cols: usize, samples: Vec<u8>) -> Result<Self, ImageError> {
        let expected = rows
            .checked_mul(cols)
            .ok_or(ImageError::DimensionsTooLarge { rows, cols })?;
        if samples.len() != expected {
            return Err(ImageError::SampleCountMismatch {
                expected,
                actual: samples.len(),
            });
        }
        Ok(Self {
            rows,
            cols,
            samples,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn samples(&self) -> &[u8] {
        &self.samples
    }

    pub fn into_samples(self) -> Vec<u8> {
        self.samples
    }

    /// The sample at `(row, col)`. Panics out of bounds.
    pub fn get(&self, row: usize, col: usize) -> u8 {
        assert!(row < self.rows && col < self.cols, "sample out of bounds");
        self.samples[row * self.cols + col]
    }
}

/// Name of one color plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChannelLabel {
    Red,
    Green,
    Blue,
}

impl ChannelLabel {
    /// Position of the label within an interleaved pixel.
    pub fn index(self) -> usize {
        match self {
            ChannelLabel::Red => 0,
            ChannelLabel::Green => 1,
            ChannelLabel::Blue => 2,
        }
    }
}

impl fmt::Display for ChannelLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChannelLabel::Red => "R",
            ChannelLabel::Green => "G",
            ChannelLabel::Blue => "B",
        })
    }
}

/// Which source channel fills each output slot when merging.
///
/// `order.labels()[i]` names the channel written to component `i` of every
/// output pixel. The identity order `(R,G,B)` reproduces the input layout;
/// rotations realize the per-round channel interchange.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChannelOrder([ChannelLabel; 3]);

impl ChannelOrder {
    pub fn identity() -> Self {
        Self([ChannelLabel::Red, ChannelLabel::Green, ChannelLabel::Blue])
    }

    /// Builds an order from explicit labels, rejecting duplicates.
    pub fn new(labels: [ChannelLabel; 3]) -> Result<Self, ImageError> {
        let mut seen = [false; 3];
        for label in labels {
            if seen[label.index()] {
                return Err(ImageError::InvalidChannelOrder);
            }
            seen[label.index()] = true;
        }
        Ok(Self(labels))
    }

    /// Cyclic rotation by `steps` positions; rotating by 3 is the identity.
    ///
    /// One step turns `(R,G,B)` into `(G,B,R)`.
    pub fn rotated(self, steps: usize) -> Self {
        let s = steps % 3;
        Self([self.0[s], self.0[(1 + s) % 3], self.0[(2 + s) % 3]])
    }

    pub fn labels(self) -> [ChannelLabel; 3] {
        self.0
    }
}

impl Default for ChannelOrder {
    fn default() -> Self {
        Self::identity()
    }
}

/// De-interleaves an image into its (red, green, blue) planes.
///
/// `merge_channels(r, g, b, identity)` reconstructs the image bit-exactly.
pub fn split_channels(img: &ImageMatrix) -> (Channel, Channel, Channel) {
    let n = img.pixel_count();
    let mut red = Vec::with_capacity(n);
    let mut green = Vec::with_capacity(n);
    let mut blue = Vec::with_capacity(n);
    for px in img.samples().chunks_exact(3) {
        red.push(px[0]);
        green.push(px[1]);
        blue.push(px[2]);
    }
    let rows = img.rows();
    let cols = img.cols();
    (
        Channel::new(rows, cols, red).expect("plane sized from image"),
        Channel::new(rows, cols, green).expect("plane sized from image"),
        Channel::new(rows, cols, blue).expect("plane sized from image"),
    )
}

/// Interleaves three equally-shaped planes into an image, placing the
/// channel named by `order.labels()[i]` into component `i` of each pixel.
pub fn merge_channels(
    red: &Channel,
    green: &Channel,
    blue: &Channel,
    order: ChannelOrder,
) -> Result<ImageMatrix, ImageError> {
    let shape = (red.rows(), red.cols());
    if (green.rows(), green.cols()) != shape || (blue.rows(), blue.cols()) != shape {
        return Err(ImageError::ChannelShapeMismatch {
            red: shape,
            green: (green.rows(), green.cols()),
            blue: (blue.rows(), blue.cols()),
        });
    }
    let pick = |label: ChannelLabel| -> &[u8] {
        match label {
            ChannelLabel::Red => red.samples(),
            ChannelLabel::Green => green.samples(),
            ChannelLabel::Blue => blue.samples(),
        }
    };
    let [first, second, third] = order.labels();
    let (first, second, third) = (pick(first), pick(second), pick(third));
    let mut samples = Vec::with_capacity(first.len() * 3);
    for i in 0..first.len() {
        samples.push(first[i]);
        samples.push(second[i]);
        samples.push(third[i]);
    }
    ImageMatrix::new(shape.0, shape.1, samples)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(rows: usize, cols: usize, samples: &[u8]) -> ImageMatrix {
        ImageMatrix::new(rows, cols, samples.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_construction() {
        assert!(matches!(
            ImageMatrix::new(0, 4, Vec::new()),
            Err(ImageError::EmptyDimensions { .. })
        ));
        assert!(matches!(
            ImageMatrix::new(1, 1, alloc::vec![0; 4]),
            Err(ImageError::SampleCountMismatch {
                expected: 3,
                actual: 4
            })
        ));
        assert!(matches!(
            Channel::new(2, 2, alloc::vec![0; 3]),
            Err(ImageError::SampleCountMismatch { .. })
        ));
    }

    #[test]
    fn split_single_pixel() {
        let img = image(1, 1, &[10, 20, 30]);
        let (r, g, b) = split_channels(&img);
        assert_eq!(r.samples(), &[10]);
        assert_eq!(g.samples(), &[20]);
        assert_eq!(b.samples(), &[30]);
    }

    #[test]
    fn split_deinterleaves_column() {
        let img = image(2, 1, &[1, 2, 3, 4, 5, 6]);
        let (r, g, b) = split_channels(&img);
        assert_eq!(r.samples(), &[1, 4]);
        assert_eq!(g.samples(), &[2, 5]);
        assert_eq!(b.samples(), &[3, 6]);
    }

    #[test]
    fn merge_identity_order() {
        let r = Channel::new(1, 1, alloc::vec![10]).unwrap();
        let g = Channel::new(1, 1, alloc::vec![20]).unwrap();
        let b = Channel::new(1, 1, alloc::vec![30]).unwrap();
        let img = merge_channels(&r, &g, &b, ChannelOrder::identity()).unwrap();
        assert_eq!(img.samples(), &[10, 20, 30]);
    }

    #[test]
    fn merge_rotated_order() {
        let r = Channel::new(1, 1, alloc::vec![10]).unwrap();
        let g = Channel::new(1, 1, alloc::vec![20]).unwrap();
        let b = Channel::new(1, 1, alloc::vec![30]).unwrap();
        let order = ChannelOrder::identity().rotated(1);
        assert_eq!(
            order.labels(),
            [ChannelLabel::Green, ChannelLabel::Blue, ChannelLabel::Red]
        );
        let img = merge_channels(&r, &g, &b, order).unwrap();
        assert_eq!(img.samples(), &[20, 30, 10]);
    }

    #[test]
    fn merge_rejects_shape_mismatch() {
        let a = Channel::new(2, 3, alloc::vec![0; 6]).unwrap();
        let b = Channel::new(3, 2, alloc::vec![0; 6]).unwrap();
        let c = Channel::new(2, 3, alloc::vec![0; 6]).unwrap();
        assert!(matches!(
            merge_channels(&a, &b, &c, ChannelOrder::identity()),
            Err(ImageError::ChannelShapeMismatch { .. })
        ));
    }

    #[test]
    fn rotation_steps() {
        let id = ChannelOrder::identity();
        assert_eq!(id.rotated(0), id);
        assert_eq!(id.rotated(3), id);
        assert_eq!(id.rotated(1).rotated(2), id);
        assert_eq!(id.rotated(4), id.rotated(1));
    }

    #[test]
    fn order_rejects_duplicates() {
        assert!(matches!(
            ChannelOrder::new([ChannelLabel::Red, ChannelLabel::Red, ChannelLabel::Blue]),
            Err(ImageError::InvalidChannelOrder)
        ));
    }

    #[test]
    fn split_merge_round_trip() {
        // Fixed pseudo-random 4x5 image; round trip must be bit-exact.
        let samples: Vec<u8> = (0..60u32).map(|i| (i * 37 % 251) as u8).collect();
        let img = image(4, 5, &samples);
        let (r, g, b) = split_channels(&img);
        let back = merge_channels(&r, &g, &b, ChannelOrder::identity()).unwrap();
        assert_eq!(back, img);
    }
}
