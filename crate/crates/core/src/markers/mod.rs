//! Concentric OILU markers.
//!
//! A marker nests one glyph per level inside square rings of decreasing size,
//! level 0 outermost, and is read from the outside in. Turning a printed
//! marker by a quarter turn turns every glyph, so the decoded id moves to
//! another facet of the same related set; [`canonical_id`] gives a
//! rotation-invariant identifier.
//!
//! Pipeline: [`layout_marker`] → [`MarkerScene`] → [`scene_to_svg`] or
//! [`rasterize`] → [`RasterImage`] → [`decode_marker`].

mod decode;
mod layout;
mod pgm;
mod raster;
mod svg;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numbers::{OiluNumber, ParseError};

pub use decode::{decode_marker, sample_level};
pub use layout::{layout_marker, MarkerLayout, MarkerScene, Rect, Stroke};
pub use pgm::{read_pgm, write_pgm, PgmError};
pub use raster::{rasterize, RasterImage};
pub use svg::scene_to_svg;

pub const MAX_LEVELS: usize = 8;
/// Smallest accepted image side, in pixels.
pub const MIN_SIZE: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MarkerError {
    #[error("marker ids have 1 to {MAX_LEVELS} digits, got {0}")]
    IdLength(usize),
    #[error(transparent)]
    Digits(#[from] ParseError),
    #[error("level count {0} outside 1..={MAX_LEVELS}")]
    Levels(usize),
    #[error("image size {0} is below the {MIN_SIZE} pixel minimum")]
    SizeTooSmall(u32),
    #[error("bad image: {0}")]
    BadImage(String),
    #[error("level {0} does not read as an OILU glyph")]
    UnreadableLevel(usize),
}

/// Digits of a marker, outermost glyph first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MarkerId(OiluNumber);

impl MarkerId {
    pub fn new(number: OiluNumber) -> Result<MarkerId, MarkerError> {
        if number.len() > MAX_LEVELS {
            return Err(MarkerError::IdLength(number.len()));
        }
        Ok(MarkerId(number))
    }

    pub fn number(&self) -> &OiluNumber {
        &self.0
    }

    pub fn levels(&self) -> usize {
        self.0.len()
    }
}

impl FromStr for MarkerId {
    type Err = MarkerError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MarkerId::new(s.parse()?)
    }
}

impl fmt::Display for MarkerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Smallest facet of the id and the quarter turns that reach it.
pub fn canonical_id(id: &MarkerId) -> (MarkerId, u8) {
    let (n, k) = id.0.canonical();
    (MarkerId(n), k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_examples() {
        let c = |s: &str| {
            let (id, k) = canonical_id(&s.parse().unwrap());
            (id.to_string(), k)
        };
        assert_eq!(c("9158"), ("3172".to_string(), 1));
        assert_eq!(c("0"), ("0".to_string(), 0));
        assert_eq!(c("2"), ("2".to_string(), 0));
        assert_eq!(c("8"), ("2".to_string(), 1));
    }

    #[test]
    fn id_bounds() {
        assert!("12345678".parse::<MarkerId>().is_ok());
        assert_eq!(
            "123456789".parse::<MarkerId>(),
            Err(MarkerError::IdLength(9))
        );
        assert!(matches!(
            "".parse::<MarkerId>(),
            Err(MarkerError::Digits(_))
        ));
    }
}
