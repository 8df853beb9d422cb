//! Intensity profiles along an image row.

use crate::error::{Error, Result};
use crate::ring_image::GrayImage;

/// Gray levels of one row, in column order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileLine {
    pub row: usize,
    pub values: Vec<u32>,
}

impl ProfileLine {
    /// Number of positions where the level changes from one column to the next.
    pub fn transitions(&self) -> usize {
        self.values.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Maximal runs of equal values, as `(value, length)`.
    pub fn plateaus(&self) -> Vec<(u32, usize)> {
        let mut runs: Vec<(u32, usize)> = Vec::new();
        for &v in &self.values {
            match runs.last_mut() {
                Some((last, len)) if *last == v => *len += 1,
                _ => runs.push((v, 1)),
            }
        }
        runs
    }

    pub fn distinct_values(&self) -> usize {
        let mut v = self.values.clone();
        v.sort_unstable();
        v.dedup();
        v.len()
    }
}

pub fn extract_profile(image: &GrayImage, row: usize) -> Result<ProfileLine> {
    if row >= image.height() {
        return Err(Error::RowOutOfRange {
            row,
            height: image.height(),
        });
    }
    Ok(ProfileLine {
        row,
        values: image.row(row).to_vec(),
    })
}
