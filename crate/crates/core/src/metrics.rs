//! Entropy-based similarity indices between two images of the same ring.
//!
//! * [`we_index`]: `|E(A) - E(B)|`, blind to where the gray levels sit.
//! * [`ned`]: the natural entropy distance `E(A + (-B))`, the entropy of the
//!   ring difference. It is zero exactly when `A - B` is a scalar image, is
//!   symmetric because `E(X) = E(-X)`, and is constant on strong-equivalence
//!   classes. It is not claimed to satisfy the triangle inequality.

use std::fmt;

use crate::entropy::entropy;
use crate::error::Result;
use crate::ring_image::GrayImage;

/// Tolerance under which two entropies are considered equal.
pub const WEAK_EQUIVALENCE_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimilarityKind {
    WeakEntropy,
    Ned,
}

impl fmt::Display for SimilarityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SimilarityKind::WeakEntropy => "we",
            SimilarityKind::Ned => "ned",
        })
    }
}

/// A similarity index value in bits, tagged with the index that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Similarity {
    pub value: f64,
    pub kind: SimilarityKind,
}

pub fn we_index(a: &GrayImage, b: &GrayImage) -> Result<Similarity> {
    // Validates the pair even though the index itself only needs histograms.
    a.is_strong_equivalent(b)?;
    Ok(Similarity {
        value: (entropy(a).bits() - entropy(b).bits()).abs(),
        kind: SimilarityKind::WeakEntropy,
    })
}

pub fn ned(a: &GrayImage, b: &GrayImage) -> Result<Similarity> {
    let diff = a.ring_sub(b)?;
    Ok(Similarity {
        value: entropy(&diff).bits(),
        kind: SimilarityKind::Ned,
    })
}

/// Dispatches to [`we_index`] or [`ned`].
pub fn similarity(kind: SimilarityKind, a: &GrayImage, b: &GrayImage) -> Result<Similarity> {
    match kind {
        SimilarityKind::WeakEntropy => we_index(a, b),
        SimilarityKind::Ned => ned(a, b),
    }
}

pub fn is_weak_equivalent(a: &GrayImage, b: &GrayImage) -> Result<bool> {
    Ok(we_index(a, b)?.value <= WEAK_EQUIVALENCE_TOLERANCE)
}
