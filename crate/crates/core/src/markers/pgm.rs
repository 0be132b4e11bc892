//! Binary PGM (`P5`) with 8-bit samples.

use thiserror::Error;

use super::RasterImage;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PgmError {
    #[error("not a binary PGM file (expected P5 magic)")]
    BadMagic,
    #[error("malformed PGM header")]
    BadHeader,
    #[error("maxval {0} is not supported, expected 1..=255")]
    BadMaxval(u32),
    #[error("pixel data truncated: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
}

pub fn write_pgm(img: &RasterImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend_from_slice(img.pixels());
    out
}

/// Skips whitespace and `#` comments, then reads one unsigned decimal field.
fn header_field(bytes: &[u8], pos: &mut usize) -> Result<u32, PgmError> {
    loop {
        match bytes.get(*pos) {
            Some(b) if b.is_ascii_whitespace() => *pos += 1,
            Some(b'#') => {
                while bytes.get(*pos).is_some_and(|&b| b != b'\n' && b != b'\r') {
                    *pos += 1;
                }
            }
            Some(_) => break,
            None => return Err(PgmError::BadHeader),
        }
    }
    let start = *pos;
    while bytes.get(*pos).is_some_and(u8::is_ascii_digit) {
        *pos += 1;
    }
    std::str::from_utf8(&bytes[start..*pos])
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or(PgmError::BadHeader)
}

/// Reads a `P5` file. Samples are rescaled to 0..=255 when maxval is smaller.
pub fn read_pgm(bytes: &[u8]) -> Result<RasterImage, PgmError> {
    if !bytes.starts_with(b"P5") {
        return Err(PgmError::BadMagic);
    }
    let mut pos = 2;
    let width = header_field(bytes, &mut pos)?;
    let height = header_field(bytes, &mut pos)?;
    let maxval = header_field(bytes, &mut pos)?;
    if maxval == 0 || maxval > 255 {
        return Err(PgmError::BadMaxval(maxval));
    }
    // exactly one whitespace byte separates the header from the raster
    if !bytes.get(pos).is_some_and(u8::is_ascii_whitespace) {
        return Err(PgmError::BadHeader);
    }
    pos += 1;
    let expected = width as usize * height as usize;
    let data = &bytes[pos..];
    if data.len() < expected {
        return Err(PgmError::Truncated {
            expected,
            found: data.len(),
        });
    }
    let pixels = data[..expected]
        .iter()
        .map(|&v| {
            if maxval == 255 {
                v
            } else {
                ((v.min(maxval as u8) as u32 * 255 + maxval / 2) / maxval) as u8
            }
        })
        .collect();
    Ok(RasterImage::new(width, height, pixels).expect("length checked"))
}
