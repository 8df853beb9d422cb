//! Portable graymap reading (P2 and P5) and writing (P5).
//!
//! The ring modulus of a decoded image is `maxval + 1`. Samples wider than a
//! byte (maxval > 255) are big-endian in P5.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::ring_image::GrayImage;

const MAX_MAXVAL: u32 = 65535;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Encoding {
    Ascii,
    Binary,
}

struct Cursor<'a> {
    data: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            offset: self.pos,
            message: message.into(),
        }
    }

    /// Skips whitespace and `#` comments running to end of line.
    fn skip_separators(&mut self) {
        while let Some(&b) = self.data.get(self.pos) {
            if b == b'#' {
                while let Some(&b) = self.data.get(self.pos) {
                    self.pos += 1;
                    if b == b'\n' || b == b'\r' {
                        break;
                    }
                }
            } else if b.is_ascii_whitespace() {
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn number(&mut self, what: &str) -> Result<u32> {
        self.skip_separators();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.data.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value * 10 + u64::from(b - b'0');
            if value > u64::from(u32::MAX) {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("{what} is too large"),
                });
            }
            self.pos += 1;
        }
        if self.pos == start {
            return Err(match self.data.get(self.pos) {
                Some(_) => self.error(format!("expected {what}")),
                None => self.error(format!("unexpected end of file while reading {what}")),
            });
        }
        Ok(value as u32)
    }
}

pub fn decode_pgm(data: &[u8]) -> Result<GrayImage> {
    let mut cur = Cursor { data, pos: 0 };
    let encoding = match data.get(..2) {
        Some(b"P2") => Encoding::Ascii,
        Some(b"P5") => Encoding::Binary,
        _ => return Err(cur.error("expected magic number P2 or P5")),
    };
    cur.pos = 2;
    if !matches!(data.get(2), Some(b) if b.is_ascii_whitespace() || *b == b'#') {
        return Err(cur.error("expected whitespace after magic number"));
    }

    cur.skip_separators();
    let width_at = cur.pos;
    let width = cur.number("width")? as usize;
    let height = cur.number("height")? as usize;
    if width == 0 || height == 0 {
        return Err(Error::Parse {
            offset: width_at,
            message: format!("image dimensions {width}x{height} must be positive"),
        });
    }
    cur.skip_separators();
    let maxval_at = cur.pos;
    let maxval = cur.number("maxval")?;
    if maxval == 0 || maxval > MAX_MAXVAL {
        return Err(Error::Parse {
            offset: maxval_at,
            message: format!("maxval {maxval} must be in 1..=65535"),
        });
    }

    let count = width
        .checked_mul(height)
        .ok_or_else(|| cur.error("image dimensions overflow"))?;
    let pixels = match encoding {
        Encoding::Binary => {
            // Exactly one whitespace byte separates the header from the raster.
            match data.get(cur.pos) {
                Some(b) if b.is_ascii_whitespace() => cur.pos += 1,
                Some(_) => return Err(cur.error("expected whitespace after maxval")),
                None => {
                    return Err(Error::Truncated {
                        expected: count,
                        actual: 0,
                    })
                }
            }
            decode_binary(&data[cur.pos..], cur.pos, count, maxval)?
        }
        Encoding::Ascii => {
            let mut pixels = Vec::with_capacity(count);
            for _ in 0..count {
                cur.skip_separators();
                if cur.pos >= data.len() {
                    return Err(Error::Truncated {
                        expected: count,
                        actual: pixels.len(),
                    });
                }
                let at = cur.pos;
                let v = cur.number("sample")?;
                if v > maxval {
                    return Err(Error::SampleRange {
                        offset: at,
                        value: v,
                        maxval,
                    });
                }
                pixels.push(v);
            }
            pixels
        }
    };

    GrayImage::new(width, height, maxval + 1, pixels)
}

fn decode_binary(raster: &[u8], base: usize, count: usize, maxval: u32) -> Result<Vec<u32>> {
    let bytes_per_sample = if maxval > 255 { 2 } else { 1 };
    let expected = count * bytes_per_sample;
    if raster.len() < expected {
        return Err(Error::Truncated {
            expected,
            actual: raster.len(),
        });
    }
    let samples: Vec<u32> = if bytes_per_sample == 1 {
        raster[..expected].iter().map(|&b| u32::from(b)).collect()
    } else {
        raster[..expected]
            .chunks_exact(2)
            .map(|p| u32::from(u16::from_be_bytes([p[0], p[1]])))
            .collect()
    };
    if let Some((i, &v)) = samples.iter().enumerate().find(|(_, &v)| v > maxval) {
        return Err(Error::SampleRange {
            offset: base + i * bytes_per_sample,
            value: v,
            maxval,
        });
    }
    Ok(samples)
}

/// Encodes as binary P5 with header `P5\n<w> <h>\n<maxval>\n`, where
/// `maxval = modulus - 1`.
pub fn encode_pgm(image: &GrayImage) -> Result<Vec<u8>> {
    let maxval = image.modulus() - 1;
    if maxval > MAX_MAXVAL {
        return Err(Error::Domain(format!(
            "modulus {} does not fit a graymap (maxval <= 65535)",
            image.modulus()
        )));
    }
    let header = format!("P5\n{} {}\n{}\n", image.width(), image.height(), maxval);
    let wide = maxval > 255;
    let mut out = Vec::with_capacity(header.len() + image.len() * if wide { 2 } else { 1 });
    out.extend_from_slice(header.as_bytes());
    if wide {
        for &v in image.pixels() {
            out.extend_from_slice(&(v as u16).to_be_bytes());
        }
    } else {
        out.extend(image.pixels().iter().map(|&v| v as u8));
    }
    Ok(out)
}

pub fn read_pgm(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|e| Error::file(path, e))?;
    decode_pgm(&data)
}

pub fn write_pgm(image: &GrayImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes = encode_pgm(image)?;
    fs::write(path, bytes).map_err(|e| Error::file(path, e))
}
