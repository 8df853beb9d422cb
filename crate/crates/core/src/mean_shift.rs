//! Joint spatial-range mean-shift filtering of gray images.
//!
//! Each pixel is a point `(row, col, gray)` in a three-dimensional feature
//! space. Starting from a pixel, the procedure repeatedly moves to the
//! weighted mean of the samples inside the window
//!
//! ```text
//! (r - row)^2 + (c - col)^2 <= h_s^2   and   |g - value| <= h_r
//! ```
//!
//! until the move is shorter than `inner_tolerance`. The window is the
//! product of a spatial disc and a range interval; pixels outside the image
//! are simply absent. With the uniform profile every sample in the window has
//! weight one, so a step is the sample mean shift of the window. With the
//! Epanechnikov profile a sample at joint squared normalized distance
//! `t = d_s^2 / h_s^2 + d_r^2 / h_r^2` is weighted by `1 - t` (zero for
//! `t >= 1`). Range distance is linear on the integers, not cyclic.
//!
//! Filtering replaces each pixel by the range coordinate of its mode,
//! rounded half away from zero and clamped into the ring. Range coordinates
//! are tracked relative to the seed's gray level, which makes the filter
//! exactly equivariant under adding a constant gray level (away from the
//! ring's ends).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ring_image::GrayImage;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Profile {
    #[default]
    Uniform,
    Epanechnikov,
}

impl Profile {
    #[inline]
    fn weight(self, t: f64) -> f64 {
        match self {
            Profile::Uniform => 1.0,
            Profile::Epanechnikov => {
                if t < 1.0 {
                    1.0 - t
                } else {
                    0.0
                }
            }
        }
    }
}

/// Bandwidths and inner-loop controls of the filter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilterConfig {
    /// Spatial window radius `h_s`, in pixels.
    pub spatial_bandwidth: f64,
    /// Range window radius `h_r`, in gray levels.
    pub range_bandwidth: f64,
    pub profile: Profile,
    /// A mode seek stops once a step moves less than this in joint space.
    pub inner_tolerance: f64,
    pub inner_max_iters: usize,
}

impl Default for FilterConfig {
    fn default() -> Self {
        Self {
            spatial_bandwidth: 15.0,
            range_bandwidth: 12.0,
            profile: Profile::Uniform,
            inner_tolerance: 0.5,
            inner_max_iters: 100,
        }
    }
}

impl FilterConfig {
    pub fn new(spatial_bandwidth: f64, range_bandwidth: f64) -> Result<Self> {
        let cfg = Self {
            spatial_bandwidth,
            range_bandwidth,
            ..Self::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_profile(mut self, profile: Profile) -> Self {
        self.profile = profile;
        self
    }

    pub fn validate(&self) -> Result<()> {
        // Written as negated comparisons so NaN is rejected too.
        if !(self.spatial_bandwidth >= 1.0) {
            return Err(Error::Config(format!(
                "spatial bandwidth must be >= 1, got {}",
                self.spatial_bandwidth
            )));
        }
        if !(self.range_bandwidth >= 1.0) {
            return Err(Error::Config(format!(
                "range bandwidth must be >= 1, got {}",
                self.range_bandwidth
            )));
        }
        if !(self.inner_tolerance > 0.0) {
            return Err(Error::Config(format!(
                "inner tolerance must be > 0, got {}",
                self.inner_tolerance
            )));
        }
        if self.inner_max_iters == 0 {
            return Err(Error::Config("inner iteration cap must be >= 1".into()));
        }
        Ok(())
    }
}

/// Position of a mode seek in the joint domain.
///
/// The range coordinate is kept as an integer `origin` (the seed's gray
/// level) plus a real `offset`. All range arithmetic happens on offsets, so
/// adding a constant to every pixel changes `origin` and nothing else.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeSeekState {
    pub row: f64,
    pub col: f64,
    pub origin: u32,
    pub offset: f64,
    pub iterations: usize,
    pub converged: bool,
}

impl ModeSeekState {
    /// Initial state at pixel `(row, col)` with that pixel's gray level.
    pub fn at_pixel(image: &GrayImage, row: usize, col: usize) -> Self {
        Self {
            row: row as f64,
            col: col as f64,
            origin: image.get(row, col),
            offset: 0.0,
            iterations: 0,
            converged: false,
        }
    }

    /// Range coordinate in gray levels.
    pub fn value(&self) -> f64 {
        f64::from(self.origin) + self.offset
    }

    /// The range coordinate rounded half away from zero and clamped into
    /// `[0, modulus - 1]`.
    pub fn quantized(&self, modulus: u32) -> u32 {
        let v = i64::from(self.origin) + self.offset.round() as i64;
        v.clamp(0, i64::from(modulus) - 1) as u32
    }

    fn distance_to(&self, other: &Self) -> f64 {
        let dr = other.row - self.row;
        let dc = other.col - self.col;
        let dv = other.offset - self.offset;
        (dr * dr + dc * dc + dv * dv).sqrt()
    }
}

/// Epanechnikov profile `k(t) = 1 - t` for `t < 1`, else 0, where `t` is a
/// squared normalized distance. The kernel's constant factor is dropped:
/// it cancels in every weighted mean.
pub fn epanechnikov_profile(t: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!(
            "profile argument must be a non-negative squared distance, got {t}"
        )));
    }
    Ok(Profile::Epanechnikov.weight(t))
}

/// One mean-shift step: moves `state` to the weighted mean of the samples in
/// its window. A window with zero total weight leaves the state in place and
/// marks it converged.
pub fn mean_shift_step(
    image: &GrayImage,
    state: &ModeSeekState,
    cfg: &FilterConfig,
) -> ModeSeekState {
    let hs = cfg.spatial_bandwidth;
    let hs2 = hs * hs;
    let hr = cfg.range_bandwidth;
    let hr2 = hr * hr;
    let last_row = image.height() as f64 - 1.0;
    let last_col = image.width() as f64 - 1.0;
    let origin = f64::from(state.origin);

    let (mut sw, mut sr, mut sc, mut sg) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);

    // Bounding box of the disc, widened by one so that rounding in the
    // per-row extent can never drop a sample; the exact test runs per pixel.
    let r_lo = (state.row - hs).floor().max(0.0) as usize;
    let r_hi = (state.row + hs).ceil().min(last_row).max(0.0) as usize;
    for r in r_lo..=r_hi {
        let dr = r as f64 - state.row;
        let dr2 = dr * dr;
        if dr2 > hs2 {
            continue;
        }
        let half = (hs2 - dr2).sqrt();
        let c_lo = (state.col - half - 1.0).floor().max(0.0) as usize;
        let c_hi = (state.col + half + 1.0).ceil().min(last_col).max(0.0) as usize;
        let row = image.row(r);
        for c in c_lo..=c_hi {
            let dc = c as f64 - state.col;
            let ds2 = dr2 + dc * dc;
            if ds2 > hs2 {
                continue;
            }
            // Exact: both are integers.
            let g = f64::from(row[c]) - origin;
            let dg = g - state.offset;
            if dg.abs() > hr {
                continue;
            }
            let w = cfg.profile.weight(ds2 / hs2 + dg * dg / hr2);
            sw += w;
            sr += w * r as f64;
            sc += w * c as f64;
            sg += w * g;
        }
    }

    if sw <= 0.0 {
        return ModeSeekState {
            iterations: state.iterations + 1,
            converged: true,
            ..*state
        };
    }

    let mut next = ModeSeekState {
        row: sr / sw,
        col: sc / sw,
        origin: state.origin,
        offset: sg / sw,
        iterations: state.iterations + 1,
        converged: false,
    };
    next.converged = state.distance_to(&next) < cfg.inner_tolerance;
    next
}

/// Follows mean-shift steps from pixel `(row, col)` until a step is shorter
/// than the tolerance or the inner iteration cap is reached.
pub fn mode_seek(image: &GrayImage, row: usize, col: usize, cfg: &FilterConfig) -> ModeSeekState {
    let mut state = ModeSeekState::at_pixel(image, row, col);
    while !state.converged && state.iterations < cfg.inner_max_iters {
        state = mean_shift_step(image, &state, cfg);
    }
    state
}

/// One filtering pass: every pixel is replaced by the quantized range value
/// of its mode. Pixels are processed in parallel; the result does not depend
/// on the thread count.
pub fn filter_pass(image: &GrayImage, cfg: &FilterConfig) -> GrayImage {
    let width = image.width();
    let pixels: Vec<u32> = (0..image.len())
        .into_par_iter()
        .map(|i| mode_seek(image, i / width, i % width, cfg).quantized(image.modulus()))
        .collect();
    GrayImage::new(width, image.height(), image.modulus(), pixels)
        .expect("quantized values stay in the ring")
}
