//! OILU numbers: stacks of glyphs read from the outermost symbol inwards.
//!
//! A number is a digit sequence, not an integer, so leading zeros are kept
//! (`"007"` and `"7"` are different stacks). Rotating the whole stack by a
//! quarter turn rotates every glyph and yields another *facet*; the four
//! facets form the related set of the number.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sevenseg::SegDigit;
use crate::symbolic::OiluDigit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty digit string")]
    EmptyInput,
    #[error("invalid character at position {0}")]
    InvalidCharacter(usize),
}

impl ParseError {
    pub fn position(&self) -> Option<usize> {
        match self {
            ParseError::EmptyInput => None,
            ParseError::InvalidCharacter(p) => Some(*p),
        }
    }
}

/// Nonempty digit sequence, index 0 is the outermost symbol.
///
/// Ordering is lexicographic over digits, which for equal lengths is the
/// numeric order of the textual form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct OiluNumber(Vec<OiluDigit>);

impl OiluNumber {
    pub fn from_digits(digits: Vec<OiluDigit>) -> Result<OiluNumber, ParseError> {
        if digits.is_empty() {
            return Err(ParseError::EmptyInput);
        }
        Ok(OiluNumber(digits))
    }

    pub fn digits(&self) -> &[OiluDigit] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The number read after `k` counter-clockwise quarter turns of the stack.
    pub fn facet(&self, k: i64) -> OiluNumber {
        OiluNumber(self.0.iter().map(|d| d.rotate(k)).collect())
    }

    pub fn related_set(&self) -> FacetSet {
        FacetSet {
            base: self.clone(),
            members: (0..4).map(|k| self.facet(k)).collect(),
        }
    }

    /// Smallest facet, together with the smallest quarter-turn count that
    /// produces it from `self`.
    pub fn canonical(&self) -> (OiluNumber, u8) {
        (0u8..4)
            .map(|k| (self.facet(k as i64), k))
            .min()
            .expect("four facets")
    }

    /// Total glyph strokes needed to draw the number.
    pub fn display_energy(&self) -> u32 {
        self.0.iter().map(|d| d.glyph().stroke_count()).sum()
    }
}

pub fn parse_number(text: &str) -> Result<OiluNumber, ParseError> {
    text.parse()
}

pub fn format_number(n: &OiluNumber) -> String {
    n.to_string()
}

/// Seven-segment segments needed to display a decimal digit string.
pub fn sevenseg_energy(text: &str) -> Result<u32, ParseError> {
    let n: OiluNumber = text.parse()?;
    Ok(n.digits()
        .iter()
        .map(|d| {
            SegDigit::new(d.value())
                .expect("decimal digit")
                .segment_count()
        })
        .sum())
}

impl FromStr for OiluNumber {
    type Err = ParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        if text.is_empty() {
            return Err(ParseError::EmptyInput);
        }
        text.chars()
            .enumerate()
            .map(|(i, c)| OiluDigit::from_char(c).ok_or(ParseError::InvalidCharacter(i)))
            .collect::<Result<Vec<_>, _>>()
            .map(OiluNumber)
    }
}

impl fmt::Display for OiluNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl TryFrom<String> for OiluNumber {
    type Error = ParseError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<OiluNumber> for String {
    fn from(n: OiluNumber) -> String {
        n.to_string()
    }
}

/// Orbit of a number under the four quarter turns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetSet {
    pub base: OiluNumber,
    pub members: BTreeSet<OiluNumber>,
}

impl FacetSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, n: &OiluNumber) -> bool {
        self.members.contains(n)
    }

    /// Members as digit strings, in ascending order.
    pub fn to_strings(&self) -> Vec<String> {
        self.members.iter().map(|n| n.to_string()).collect()
    }
}
