//! Gray-level histograms and Shannon entropy.
//!
//! `E(A) = -sum p_x log2 p_x` over all levels `x` in `[0, n-1]`, with the
//! convention `0 log2 0 = 0`. For `n = 2^B` this is the usual sum over
//! `[0, 2^B - 1]`.

use std::fmt;

use crate::ring_image::GrayImage;

/// Per-level occurrence counts of an image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    counts: Vec<u64>,
    total: u64,
}

impl Histogram {
    pub fn of(image: &GrayImage) -> Self {
        let mut counts = vec![0u64; image.modulus() as usize];
        for &v in image.pixels() {
            counts[v as usize] += 1;
        }
        Self {
            counts,
            total: image.len() as u64,
        }
    }

    pub fn modulus(&self) -> u32 {
        self.counts.len() as u32
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, level: u32) -> u64 {
        self.counts[level as usize]
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of levels with a nonzero count.
    pub fn distinct_levels(&self) -> usize {
        self.counts.iter().filter(|&&c| c > 0).count()
    }

    /// `(level, count)` for every level with a nonzero count, ascending by level.
    pub fn nonzero(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(level, &c)| (level as u32, c))
    }
}

/// Entropy in bits.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default)]
pub struct Entropy(f64);

impl Entropy {
    pub fn bits(self) -> f64 {
        self.0
    }
}

impl From<Entropy> for f64 {
    fn from(e: Entropy) -> f64 {
        e.0
    }
}

impl fmt::Display for Entropy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub fn histogram(image: &GrayImage) -> Histogram {
    Histogram::of(image)
}

pub fn entropy(image: &GrayImage) -> Entropy {
    entropy_of_histogram(&Histogram::of(image))
}

pub fn entropy_of_histogram(hist: &Histogram) -> Entropy {
    // Summing smallest terms first limits rounding drift. Each term is
    // written as p * log2(total / count) so a single level gives +0.0.
    let mut counts: Vec<u64> = hist.counts.iter().copied().filter(|&c| c > 0).collect();
    counts.sort_unstable();
    let total = hist.total as f64;
    let bits = counts
        .into_iter()
        .map(|c| {
            let c = c as f64;
            (c / total) * (total / c).log2()
        })
        .sum();
    Entropy(bits)
}
