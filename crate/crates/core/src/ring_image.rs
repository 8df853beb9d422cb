//! Gray images as elements of the ring `G(Z_n)` of `k x m` images with
//! pixelwise addition and multiplication modulo `n`.
//!
//! Every binary operation requires both operands to share width, height and
//! modulus. Mixing moduli is an error: the operands must live in the same ring
//! for the closure properties to hold.
//!
//! Scalar images (all pixels equal) form the normal subgroup `N` of the
//! additive group. Two images are *strongly equivalent* when their difference
//! is scalar; [`GrayImage::canonical_representative`] picks the member of each
//! class whose first pixel is zero.

use crate::error::{Error, Result};

/// Default number of gray levels (8-bit images).
pub const DEFAULT_MODULUS: u32 = 256;

/// A `width x height` image whose pixels are elements of `Z_modulus`,
/// stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GrayImage {
    width: usize,
    height: usize,
    modulus: u32,
    pixels: Vec<u32>,
}

/// An image with every pixel equal to `value`, kept as a single value plus
/// its shape. Expand with [`ScalarImage::expand`] when a full grid is needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScalarImage {
    value: u32,
    width: usize,
    height: usize,
    modulus: u32,
}

fn check_shape(width: usize, height: usize, modulus: u32) -> Result<()> {
    if modulus < 2 {
        return Err(Error::InvalidModulus(modulus));
    }
    if width == 0 || height == 0 {
        return Err(Error::InvalidDimensions { width, height });
    }
    Ok(())
}

impl GrayImage {
    pub fn new(width: usize, height: usize, modulus: u32, pixels: Vec<u32>) -> Result<Self> {
        check_shape(width, height, modulus)?;
        let expected = width * height;
        if pixels.len() != expected {
            return Err(Error::PixelCount {
                expected,
                actual: pixels.len(),
            });
        }
        if let Some((index, &value)) = pixels.iter().enumerate().find(|(_, &v)| v >= modulus) {
            return Err(Error::PixelOutOfRange {
                index,
                value,
                modulus,
            });
        }
        Ok(Self {
            width,
            height,
            modulus,
            pixels,
        })
    }

    /// Image with all pixels set to `value`.
    pub fn filled(width: usize, height: usize, modulus: u32, value: u32) -> Result<Self> {
        ScalarImage::new(value, width, height, modulus).map(|s| s.expand())
    }

    /// The additive neutral `O`.
    pub fn zeros(width: usize, height: usize, modulus: u32) -> Result<Self> {
        Self::filled(width, height, modulus, 0)
    }

    /// The multiplicative neutral `I`.
    pub fn ones(width: usize, height: usize, modulus: u32) -> Result<Self> {
        Self::filled(width, height, modulus, 1)
    }

    /// Builds an image from `f(row, col)`; values are reduced modulo `modulus`.
    pub fn from_fn(
        width: usize,
        height: usize,
        modulus: u32,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Result<Self> {
        check_shape(width, height, modulus)?;
        let mut pixels = Vec::with_capacity(width * height);
        for row in 0..height {
            for col in 0..width {
                pixels.push(f(row, col) % modulus);
            }
        }
        Ok(Self {
            width,
            height,
            modulus,
            pixels,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.pixels.len()
    }

    /// Always false: images have at least one pixel.
    pub fn is_empty(&self) -> bool {
        self.pixels.is_empty()
    }

    pub fn pixels(&self) -> &[u32] {
        &self.pixels
    }

    pub fn into_pixels(self) -> Vec<u32> {
        self.pixels
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.pixels[row * self.width + col]
    }

    pub fn row(&self, row: usize) -> &[u32] {
        &self.pixels[row * self.width..(row + 1) * self.width]
    }

    /// Reinterprets the pixels in a different ring. Fails if a pixel does not
    /// fit in `Z_modulus`.
    pub fn with_modulus(self, modulus: u32) -> Result<Self> {
        Self::new(self.width, self.height, modulus, self.pixels)
    }

    /// The scalar image with this image's shape and ring.
    pub fn scalar(&self, value: u32) -> Result<ScalarImage> {
        ScalarImage::new(value, self.width, self.height, self.modulus)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.check_compatible_shape(other.width, other.height, other.modulus)
    }

    fn check_compatible_shape(&self, width: usize, height: usize, modulus: u32) -> Result<()> {
        if self.width != width || self.height != height {
            return Err(Error::ShapeMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: width,
                right_height: height,
            });
        }
        if self.modulus != modulus {
            return Err(Error::IncompatibleRing {
                left: self.modulus,
                right: modulus,
            });
        }
        Ok(())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u64, u64, u64) -> u64) -> Result<Self> {
        self.check_compatible(other)?;
        let n = u64::from(self.modulus);
        let pixels = self
            .pixels
            .iter()
            .zip(&other.pixels)
            .map(|(&a, &b)| op(u64::from(a), u64::from(b), n) as u32)
            .collect();
        Ok(self.with_pixels(pixels))
    }

    fn map(&self, op: impl Fn(u64, u64) -> u64) -> Self {
        let n = u64::from(self.modulus);
        let pixels = self
            .pixels
            .iter()
            .map(|&a| op(u64::from(a), n) as u32)
            .collect();
        self.with_pixels(pixels)
    }

    fn with_pixels(&self, pixels: Vec<u32>) -> Self {
        Self {
            width: self.width,
            height: self.height,
            modulus: self.modulus,
            pixels,
        }
    }

    /// Pixelwise `(a + b) mod n`.
    pub fn ring_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b, n| (a + b) % n)
    }

    /// Pixelwise additive inverse `(n - v) mod n`.
    pub fn ring_neg(&self) -> Self {
        self.map(|a, n| (n - a) % n)
    }

    /// `self + (-other)`.
    pub fn ring_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b, n| (a + (n - b)) % n)
    }

    /// Pixelwise `(a * b) mod n`. Elementwise, not a matrix product.
    pub fn ring_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b, n| (a * b) % n)
    }

    /// Adds a scalar image without materializing it.
    pub fn add_scalar(&self, s: &ScalarImage) -> Result<Self> {
        self.check_compatible_shape(s.width, s.height, s.modulus)?;
        let v = u64::from(s.value);
        Ok(self.map(|a, n| (a + v) % n))
    }

    /// Classical addition clamped at `n - 1`.
    pub fn saturating_add(&self, s: &ScalarImage) -> Result<Self> {
        self.check_compatible_shape(s.width, s.height, s.modulus)?;
        let v = u64::from(s.value);
        Ok(self.map(|a, n| (a + v).min(n - 1)))
    }

    /// Classical subtraction clamped at 0.
    pub fn saturating_sub(&self, s: &ScalarImage) -> Result<Self> {
        self.check_compatible_shape(s.width, s.height, s.modulus)?;
        let v = u64::from(s.value);
        Ok(self.map(|a, _| a.saturating_sub(v)))
    }

    /// True iff all pixels are equal, i.e. the image belongs to `N`.
    pub fn is_scalar(&self) -> bool {
        let first = self.pixels[0];
        self.pixels.iter().all(|&v| v == first)
    }

    /// True iff `self - other` is a scalar image.
    pub fn is_strong_equivalent(&self, other: &Self) -> Result<bool> {
        self.check_compatible(other)?;
        let n = u64::from(self.modulus);
        let diff = |a: u32, b: u32| (u64::from(a) + n - u64::from(b)) % n;
        let first = diff(self.pixels[0], other.pixels[0]);
        Ok(self
            .pixels
            .iter()
            .zip(&other.pixels)
            .all(|(&a, &b)| diff(a, b) == first))
    }

    /// Member of the strong-equivalence class whose pixel (0, 0) is zero.
    pub fn canonical_representative(&self) -> Self {
        let first = u64::from(self.pixels[0]);
        self.map(|a, n| (a + n - first) % n)
    }
}

impl ScalarImage {
    pub fn new(value: u32, width: usize, height: usize, modulus: u32) -> Result<Self> {
        check_shape(width, height, modulus)?;
        if value >= modulus {
            return Err(Error::ScalarOutOfRange { value, modulus });
        }
        Ok(Self {
            value,
            width,
            height,
            modulus,
        })
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn expand(&self) -> GrayImage {
        GrayImage {
            width: self.width,
            height: self.height,
            modulus: self.modulus,
            pixels: vec![self.value; self.width * self.height],
        }
    }

    /// Sum within `N`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if (self.width, self.height) != (other.width, other.height) {
            return Err(Error::ShapeMismatch {
                left_width: self.width,
                left_height: self.height,
                right_width: other.width,
                right_height: other.height,
            });
        }
        if self.modulus != other.modulus {
            return Err(Error::IncompatibleRing {
                left: self.modulus,
                right: other.modulus,
            });
        }
        let n = u64::from(self.modulus);
        let value = ((u64::from(self.value) + u64::from(other.value)) % n) as u32;
        Ok(Self { value, ..*self })
    }

    /// Additive inverse within `N`.
    pub fn neg(&self) -> Self {
        let value = (self.modulus - self.value) % self.modulus;
        Self { value, ..*self }
    }
}

impl From<ScalarImage> for GrayImage {
    fn from(s: ScalarImage) -> Self {
        s.expand()
    }
}
