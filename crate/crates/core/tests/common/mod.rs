//! Reference implementations used as oracles by the integration tests.
//!
//! These deliberately avoid the library's code paths: the mean-shift oracle
//! scans every pixel of the image on every step, the tally uses a hash map,
//! and the entropy reference uses compensated summation in level order.

#![allow(dead_code)]

use std::collections::HashMap;

use ringseg::{GrayImage, Profile};

/// Full-scan mean shift. Range coordinates are offsets from the seed's gray
/// level, the same frame the library uses, so results agree bit for bit.
#[allow(clippy::too_many_arguments)]
pub fn naive_mode(
    img: &GrayImage,
    row: usize,
    col: usize,
    hs: f64,
    hr: f64,
    profile: Profile,
    tol: f64,
    max_iters: usize,
) -> (f64, f64, f64, usize) {
    let origin = img.get(row, col);
    let (mut y, mut x, mut v) = (row as f64, col as f64, 0.0f64);
    let mut iters = 0;
    while iters < max_iters {
        iters += 1;
        let (mut sw, mut sy, mut sx, mut sv) = (0.0, 0.0, 0.0, 0.0);
        for r in 0..img.height() {
            for c in 0..img.width() {
                let dr = r as f64 - y;
                let dc = c as f64 - x;
                let ds2 = dr * dr + dc * dc;
                let g = f64::from(img.get(r, c)) - f64::from(origin);
                let dg = g - v;
                if ds2 > hs * hs || dg.abs() > hr {
                    continue;
                }
                let w = match profile {
                    Profile::Uniform => 1.0,
                    Profile::Epanechnikov => {
                        let t = ds2 / (hs * hs) + dg * dg / (hr * hr);
                        if t < 1.0 {
                            1.0 - t
                        } else {
                            0.0
                        }
                    }
                };
                sw += w;
                sy += w * r as f64;
                sx += w * c as f64;
                sv += w * g;
            }
        }
        if sw <= 0.0 {
            break;
        }
        let (ny, nx, nv) = (sy / sw, sx / sw, sv / sw);
        let d = ((ny - y) * (ny - y) + (nx - x) * (nx - x) + (nv - v) * (nv - v)).sqrt();
        y = ny;
        x = nx;
        v = nv;
        if d < tol {
            break;
        }
    }
    (y, x, f64::from(origin) + v, iters)
}

pub fn naive_filter(img: &GrayImage, hs: f64, hr: f64, profile: Profile) -> GrayImage {
    let n = img.modulus();
    GrayImage::from_fn(img.width(), img.height(), n, |r, c| {
        let origin = img.get(r, c);
        let (_, _, v, _) = naive_mode(img, r, c, hs, hr, profile, 0.5, 100);
        let offset = (v - f64::from(origin)).round() as i64;
        (i64::from(origin) + offset).clamp(0, i64::from(n) - 1) as u32
    })
    .unwrap()
}

pub fn tally(img: &GrayImage) -> HashMap<u32, u64> {
    let mut m = HashMap::new();
    for r in 0..img.height() {
        for c in 0..img.width() {
            *m.entry(img.get(r, c)).or_insert(0) += 1;
        }
    }
    m
}

/// Neumaier-compensated `-sum p log2 p` over levels in ascending level order.
pub fn reference_entropy(img: &GrayImage) -> f64 {
    let counts = tally(img);
    let total = img.len() as f64;
    let mut levels: Vec<_> = counts.into_iter().collect();
    levels.sort_unstable();
    let (mut sum, mut comp) = (0.0f64, 0.0f64);
    for (_, c) in levels {
        let p = c as f64 / total;
        let term = -p * p.log2();
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
    }
    sum + comp
}
