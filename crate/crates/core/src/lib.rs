//! Gray-image segmentation by iterated mean-shift filtering, stopped by an
//! entropy distance computed in the residue ring `Z_n`.
//!
//! Images are elements of the ring of `k x m` grids over `Z_n` with pixelwise
//! `+` and `*` ([`ring_image`]). The natural entropy distance between two
//! images is the Shannon entropy ([`entropy`]) of their ring difference
//! ([`metrics::ned`]); it vanishes exactly when the images differ by a
//! constant. [`mshi::run`] repeats the joint spatial-range mean-shift filter
//! ([`mean_shift`]) until the distance between consecutive results drops to
//! the threshold.
//!
//! ```
//! use ringseg::{fixtures, mshi};
//!
//! let noisy = fixtures::noisy_two_region_64();
//! let out = mshi::run(&noisy, &mshi::MshiConfig::default()).unwrap();
//! assert!(!out.hit_cap);
//! assert!(out.trace.last().unwrap().criterion_value <= 0.9);
//! ```

pub mod entropy;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod mean_shift;
pub mod metrics;
pub mod mshi;
pub mod ring_image;

pub use entropy::{entropy, entropy_of_histogram, histogram, Entropy, Histogram};
pub use error::{Error, Result};
pub use mean_shift::{filter_pass, FilterConfig, Profile};
pub use metrics::{is_weak_equivalent, ned, we_index, Similarity, SimilarityKind};
pub use mshi::{ConvergenceTrace, MshiConfig, MshiOutcome, StoppingCriterion};
pub use ring_image::{GrayImage, ScalarImage, DEFAULT_MODULUS};
