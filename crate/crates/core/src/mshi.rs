//! Mean-shift iterative segmentation.
//!
//! Starting from `B1 = A`, each outer iteration filters the current image,
//! `B2 = filter_pass(B1)`, measures `errabs = criterion(B1, B2)` and sets
//! `B1 = B2`. The loop continues while `errabs > epsilon` and the outer cap
//! has not been reached. The segmented image is the final `B1`.

use crate::entropy::entropy;
use crate::error::{Error, Result};
use crate::mean_shift::{filter_pass, FilterConfig};
use crate::metrics::{similarity, SimilarityKind};
use crate::ring_image::GrayImage;

pub const DEFAULT_NED_EPSILON: f64 = 0.9;
pub const DEFAULT_WE_EPSILON: f64 = 0.01;
pub const DEFAULT_MAX_OUTER_ITERS: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StoppingCriterion {
    kind: SimilarityKind,
    epsilon: f64,
}

impl StoppingCriterion {
    pub fn new(kind: SimilarityKind, epsilon: f64) -> Result<Self> {
        if !(epsilon > 0.0) {
            return Err(Error::Config(format!(
                "stopping threshold must be > 0, got {epsilon}"
            )));
        }
        Ok(Self { kind, epsilon })
    }

    /// Natural entropy distance with its default threshold.
    pub fn ned() -> Self {
        Self::with_default_epsilon(SimilarityKind::Ned)
    }

    /// Entropy-difference criterion with its default threshold.
    pub fn weak_entropy() -> Self {
        Self::with_default_epsilon(SimilarityKind::WeakEntropy)
    }

    pub fn with_default_epsilon(kind: SimilarityKind) -> Self {
        let epsilon = match kind {
            SimilarityKind::Ned => DEFAULT_NED_EPSILON,
            SimilarityKind::WeakEntropy => DEFAULT_WE_EPSILON,
        };
        Self { kind, epsilon }
    }

    pub fn kind(&self) -> SimilarityKind {
        self.kind
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MshiConfig {
    pub filter: FilterConfig,
    pub stop: StoppingCriterion,
    pub max_outer_iters: usize,
}

impl Default for MshiConfig {
    fn default() -> Self {
        Self {
            filter: FilterConfig::default(),
            stop: StoppingCriterion::ned(),
            max_outer_iters: DEFAULT_MAX_OUTER_ITERS,
        }
    }
}

impl MshiConfig {
    pub fn validate(&self) -> Result<()> {
        self.filter.validate()?;
        if self.max_outer_iters == 0 {
            return Err(Error::Config("outer iteration cap must be >= 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRecord {
    /// 1-based outer iteration.
    pub iteration: usize,
    pub criterion_value: f64,
    /// Entropy of the image produced by this iteration.
    pub entropy: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ConvergenceTrace {
    pub records: Vec<TraceRecord>,
}

impl ConvergenceTrace {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn last(&self) -> Option<&TraceRecord> {
        self.records.last()
    }

    pub fn criterion_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.records.iter().map(|r| r.criterion_value)
    }

    /// Sum of absolute differences between consecutive criterion values.
    pub fn total_variation(&self) -> Result<f64> {
        trace_total_variation(self)
    }
}

pub fn trace_total_variation(trace: &ConvergenceTrace) -> Result<f64> {
    if trace.len() < 2 {
        return Err(Error::Domain(format!(
            "total variation needs at least 2 trace records, got {}",
            trace.len()
        )));
    }
    Ok(trace
        .records
        .windows(2)
        .map(|w| (w[1].criterion_value - w[0].criterion_value).abs())
        .sum())
}

pub fn criterion_value(stop: &StoppingCriterion, prev: &GrayImage, cur: &GrayImage) -> Result<f64> {
    Ok(similarity(stop.kind, prev, cur)?.value)
}

/// One outer iteration: the image before and after filtering.
#[derive(Debug, Clone)]
pub struct OuterStep {
    pub iteration: usize,
    pub previous: GrayImage,
    pub current: GrayImage,
    pub criterion_value: f64,
}

impl OuterStep {
    pub fn record(&self) -> TraceRecord {
        TraceRecord {
            iteration: self.iteration,
            criterion_value: self.criterion_value,
            entropy: entropy(&self.current).bits(),
        }
    }
}

/// Endless sequence of outer iterations, each filtering the previous output.
/// Stopping is up to the caller; [`run`] applies the threshold and cap.
pub struct OuterIterations<'a> {
    filter: &'a FilterConfig,
    kind: SimilarityKind,
    current: GrayImage,
    iteration: usize,
}

impl<'a> OuterIterations<'a> {
    pub fn new(image: &GrayImage, filter: &'a FilterConfig, kind: SimilarityKind) -> Self {
        Self {
            filter,
            kind,
            current: image.clone(),
            iteration: 0,
        }
    }
}

impl Iterator for OuterIterations<'_> {
    type Item = OuterStep;

    fn next(&mut self) -> Option<OuterStep> {
        let filtered = filter_pass(&self.current, self.filter);
        let value = similarity(self.kind, &self.current, &filtered)
            .expect("filtering preserves shape and ring")
            .value;
        self.iteration += 1;
        let previous = std::mem::replace(&mut self.current, filtered);
        Some(OuterStep {
            iteration: self.iteration,
            previous,
            current: self.current.clone(),
            criterion_value: value,
        })
    }
}

#[derive(Debug, Clone)]
pub struct MshiOutcome {
    pub segmented: GrayImage,
    pub trace: ConvergenceTrace,
    /// True when the outer cap stopped the loop with the criterion still above
    /// its threshold.
    pub hit_cap: bool,
}

pub fn run(image: &GrayImage, cfg: &MshiConfig) -> Result<MshiOutcome> {
    cfg.validate()?;
    let mut trace = ConvergenceTrace::default();
    let mut segmented = image.clone();
    let mut hit_cap = false;
    for step in OuterIterations::new(image, &cfg.filter, cfg.stop.kind) {
        trace.records.push(step.record());
        segmented = step.current;
        if step.criterion_value <= cfg.stop.epsilon {
            break;
        }
        if step.iteration >= cfg.max_outer_iters {
            hit_cap = true;
            break;
        }
    }
    Ok(MshiOutcome {
        segmented,
        trace,
        hit_cap,
    })
}

/// Runs exactly `iterations` outer iterations regardless of any threshold.
pub fn run_fixed(
    image: &GrayImage,
    filter: &FilterConfig,
    kind: SimilarityKind,
    iterations: usize,
) -> Result<(GrayImage, ConvergenceTrace)> {
    filter.validate()?;
    let mut trace = ConvergenceTrace::default();
    let mut last = image.clone();
    for step in OuterIterations::new(image, filter, kind).take(iterations) {
        trace.records.push(step.record());
        last = step.current;
    }
    Ok((last, trace))
}
