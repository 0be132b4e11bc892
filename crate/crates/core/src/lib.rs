//! OILU numeral system toolkit.
//!
//! OILU writes the ten decimal digits with line glyphs (a bar, a square and
//! the four quarter turns of an `L` and a `U`) that can be stacked
//! concentrically and read from the outside in. This crate provides:
//!
//! - [`symbolic`]: glyphs, digit assignment, quarter-turn rotation and shape
//!   classification;
//! - [`numbers`]: digit stacks with facets, related sets and canonical forms;
//! - [`sevenseg`]: seven-segment digits split into OILU pairs under three
//!   strategies, and joined back;
//! - [`series`]: number series driven by split/merge/facet navigation rules;
//! - [`markers`]: concentric marker layout, SVG and raster rendering, PGM I/O
//!   and decoding of clean rasters;
//! - [`cli`]: the `oilu` command-line front end.
//!
//! ```
//! use oilu::numbers::OiluNumber;
//!
//! let n: OiluNumber = "3172".parse().unwrap();
//! assert_eq!(n.facet(1).to_string(), "5194");
//! assert_eq!(n.related_set().len(), 4);
//! ```

pub mod cli;
pub mod markers;
pub mod numbers;
pub mod series;
pub mod sevenseg;
pub mod symbolic;

pub use markers::{MarkerId, RasterImage};
pub use numbers::OiluNumber;
pub use sevenseg::{Base, SegDigit, SplitPair, SplitStrategy};
pub use symbolic::{Glyph, OiluDigit, SideSet};
