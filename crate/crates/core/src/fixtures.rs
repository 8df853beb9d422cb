//! Deterministic test images.
//!
//! Every random fixture is drawn from a ChaCha8 stream seeded by the caller,
//! so a given `(shape, seed)` always yields the same pixels on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ring_image::GrayImage;

/// Seed of the committed two-region segmentation fixture.
pub const TWO_REGION_SEED: u64 = 0x5eed_0064;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniformly random pixels over `Z_modulus`.
pub fn seeded_random(width: usize, height: usize, modulus: u32, seed: u64) -> GrayImage {
    let mut rng = rng(seed);
    GrayImage::from_fn(width, height, modulus, |_, _| rng.gen_range(0..modulus))
        .expect("fixture shape is valid")
}

/// Square cells of side `cell`, alternating `low` / `high`.
pub fn checkerboard(
    width: usize,
    height: usize,
    cell: usize,
    low: u32,
    high: u32,
    modulus: u32,
) -> GrayImage {
    GrayImage::from_fn(width, height, modulus, |r, c| {
        if (r / cell + c / cell).is_multiple_of(2) {
            low
        } else {
            high
        }
    })
    .expect("fixture shape is valid")
}

/// Vertical stripes of width `stripe`, alternating `low` / `high`.
pub fn stripes(
    width: usize,
    height: usize,
    stripe: usize,
    low: u32,
    high: u32,
    modulus: u32,
) -> GrayImage {
    GrayImage::from_fn(width, height, modulus, |_, c| {
        if (c / stripe).is_multiple_of(2) {
            low
        } else {
            high
        }
    })
    .expect("fixture shape is valid")
}

/// Left half `left`, right half `right` (the split is at `width / 2`).
pub fn two_region(width: usize, height: usize, left: u32, right: u32, modulus: u32) -> GrayImage {
    GrayImage::from_fn(width, height, modulus, |_, c| {
        if c < width / 2 {
            left
        } else {
            right
        }
    })
    .expect("fixture shape is valid")
}

/// [`two_region`] plus integer noise drawn uniformly from
/// `[-amplitude, amplitude]`, clamped to the ring.
pub fn two_region_noisy(
    width: usize,
    height: usize,
    left: u32,
    right: u32,
    amplitude: u32,
    modulus: u32,
    seed: u64,
) -> GrayImage {
    let mut rng = rng(seed);
    let amp = i64::from(amplitude);
    let max = i64::from(modulus) - 1;
    GrayImage::from_fn(width, height, modulus, |_, c| {
        let base = if c < width / 2 { left } else { right };
        let v = i64::from(base) + rng.gen_range(-amp..=amp);
        v.clamp(0, max) as u32
    })
    .expect("fixture shape is valid")
}

/// The 64x64 segmentation fixture: gray levels 70 and 170 with +-3 noise.
pub fn noisy_two_region_64() -> GrayImage {
    two_region_noisy(64, 64, 70, 170, 3, 256, TWO_REGION_SEED)
}

/// Image with `levels` gray values (`0, step, 2*step, ...`) each covering
/// the same number of pixels.
pub fn equiprobable_levels(width: usize, height: usize, levels: u32, modulus: u32) -> GrayImage {
    let step = (modulus / levels).max(1);
    GrayImage::from_fn(width, height, modulus, |r, c| {
        ((r * width + c) as u32 % levels) * step
    })
    .expect("fixture shape is valid")
}

/// Named fixtures used by the round-trip checks.
pub fn catalog() -> Vec<(&'static str, GrayImage)> {
    vec![
        ("random_32x32_z256", seeded_random(32, 32, 256, 11)),
        ("random_17x5_z65536", seeded_random(17, 5, 65536, 12)),
        ("random_7x9_z8", seeded_random(7, 9, 8, 13)),
        ("checkerboard_64", checkerboard(64, 64, 8, 0, 255, 256)),
        ("stripes_64", stripes(64, 64, 8, 0, 255, 256)),
        ("two_region_64", two_region(64, 64, 0, 200, 256)),
        ("noisy_two_region_64", noisy_two_region_64()),
        ("constant_10", GrayImage::filled(10, 10, 256, 7).unwrap()),
    ]
}
