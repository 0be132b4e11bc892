//! Seven-segment digits and their splitting into pairs of OILU symbols.
//!
//! Cutting a seven-segment digit horizontally leaves an upper and a lower
//! half, each a set of square sides. The middle segment `g` is the bottom of
//! the upper half and the top of the lower half; a [`SplitStrategy`] decides
//! which half owns it. A half that is not one of the ten OILU glyphs, or a
//! pair that another digit of the same base also produces, is replaced by the
//! strategy-A pair so that every table stays invertible.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numbers::OiluNumber;
use crate::symbolic::{OiluDigit, Side, SideSet};

/// a: top, b: upper right, c: lower right, d: bottom, e: lower left,
/// f: upper left, g: middle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Segment {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Segment {
    pub const ALL: [Segment; 7] = [
        Segment::A,
        Segment::B,
        Segment::C,
        Segment::D,
        Segment::E,
        Segment::F,
        Segment::G,
    ];

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

/// Bit set of lit segments, bit `i` for `Segment::ALL[i]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SegmentSet(u8);

impl SegmentSet {
    pub fn contains(self, s: Segment) -> bool {
        self.0 & s.bit() != 0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn without(self, s: Segment) -> SegmentSet {
        SegmentSet(self.0 & !s.bit())
    }

    pub fn iter(self) -> impl Iterator<Item = Segment> {
        Segment::ALL.into_iter().filter(move |&s| self.contains(s))
    }
}

impl FromIterator<Segment> for SegmentSet {
    fn from_iter<I: IntoIterator<Item = Segment>>(iter: I) -> Self {
        SegmentSet(iter.into_iter().fold(0, |m, s| m | s.bit()))
    }
}

const fn mask(letters: &[u8]) -> u8 {
    let mut m = 0;
    let mut i = 0;
    while i < letters.len() {
        m |= 1 << (letters[i] - b'a');
        i += 1;
    }
    m
}

/// Standard segment patterns for 0-9 and A b C d E F. The 6 has its top bar
/// and the 9 its bottom bar, which gives 49 segments over 0-9.
const ENCODING: [u8; 16] = [
    mask(b"abcdef"),
    mask(b"bc"),
    mask(b"abged"),
    mask(b"abgcd"),
    mask(b"fgbc"),
    mask(b"afgcd"),
    mask(b"afgecd"),
    mask(b"abc"),
    mask(b"abcdefg"),
    mask(b"abcdfg"),
    mask(b"abcefg"),
    mask(b"cdefg"),
    mask(b"adef"),
    mask(b"bcdeg"),
    mask(b"adefg"),
    mask(b"aefg"),
];

/// Numeral base of a Dec/Hex digit string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Dec,
    Hex,
}

impl Base {
    pub fn radix(self) -> u8 {
        match self {
            Base::Dec => 10,
            Base::Hex => 16,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Base::Dec => "dec",
            Base::Hex => "hex",
        })
    }
}

impl FromStr for Base {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "dec" | "10" => Ok(Base::Dec),
            "hex" | "16" => Ok(Base::Hex),
            other => Err(format!("unknown base '{other}', expected dec or hex")),
        }
    }
}

/// A base-16 digit shown on a seven-segment display.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SegDigit(u8);

impl SegDigit {
    pub fn new(value: u8) -> Option<SegDigit> {
        (value < 16).then_some(SegDigit(value))
    }

    /// Parses one digit of `base`; hex letters are case-insensitive.
    pub fn from_char(c: char, base: Base) -> Option<SegDigit> {
        c.to_digit(base.radix() as u32).map(|v| SegDigit(v as u8))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// Uppercase digit character.
    pub fn to_char(self) -> char {
        char::from_digit(self.0 as u32, 16)
            .expect("value < 16")
            .to_ascii_uppercase()
    }

    pub fn segments(self) -> SegmentSet {
        SegmentSet(ENCODING[self.0 as usize])
    }

    pub fn segment_count(self) -> u32 {
        self.segments().len()
    }

    pub fn all(base: Base) -> impl Iterator<Item = SegDigit> {
        (0..base.radix()).map(SegDigit)
    }
}

/// Owner of the middle segment when a digit is cut in two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SplitStrategy {
    /// Middle segment shared by both halves.
    A,
    /// Middle segment belongs to the upper half.
    B,
    /// Middle segment belongs to the lower half.
    C,
}

impl SplitStrategy {
    pub const ALL: [SplitStrategy; 3] = [SplitStrategy::A, SplitStrategy::B, SplitStrategy::C];

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SplitStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitStrategy::A => "a",
            SplitStrategy::B => "b",
            SplitStrategy::C => "c",
        })
    }
}

impl FromStr for SplitStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "a" => Ok(SplitStrategy::A),
            "b" => Ok(SplitStrategy::B),
            "c" => Ok(SplitStrategy::C),
            other => Err(format!("unknown strategy '{other}', expected a, b or c")),
        }
    }
}

/// Upper and lower OILU digits of a split seven-segment digit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SplitPair {
    pub upper: OiluDigit,
    pub lower: OiluDigit,
    /// The raw halves were replaced by the strategy-A pair.
    pub replaced: bool,
}

impl SplitPair {
    pub fn digits(&self) -> (OiluDigit, OiluDigit) {
        (self.upper, self.lower)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("empty digit string")]
    EmptyInput,
    #[error("invalid {base} digit at position {position}")]
    InvalidDigit { position: usize, base: Base },
    #[error("odd-length number cannot be merged into digit pairs")]
    OddLength,
    #[error("pair ({upper},{lower}) at position {position} is not produced by any digit")]
    UnknownPair {
        position: usize,
        upper: OiluDigit,
        lower: OiluDigit,
    },
}

impl SplitError {
    pub fn position(&self) -> Option<usize> {
        match self {
            SplitError::InvalidDigit { position, .. }
            | SplitError::UnknownPair { position, .. } => Some(*position),
            SplitError::EmptyInput | SplitError::OddLength => None,
        }
    }
}

/// Upper and lower halves of `d` as square sides, before classification.
pub fn raw_halves(d: SegDigit, s: SplitStrategy) -> (SideSet, SideSet) {
    let segs = d.segments();
    let (up_segs, lo_segs) = match s {
        SplitStrategy::A => (segs, segs),
        SplitStrategy::B => (segs, segs.without(Segment::G)),
        SplitStrategy::C => (segs.without(Segment::G), segs),
    };
    let mut upper = SideSet::empty();
    let mut lower = SideSet::empty();
    for seg in up_segs.iter() {
        match seg {
            Segment::A => upper.set(Side::Top, true),
            Segment::F => upper.set(Side::Left, true),
            Segment::B => upper.set(Side::Right, true),
            Segment::G => upper.set(Side::Bottom, true),
            _ => {}
        }
    }
    for seg in lo_segs.iter() {
        match seg {
            Segment::G => lower.set(Side::Top, true),
            Segment::E => lower.set(Side::Left, true),
            Segment::C => lower.set(Side::Right, true),
            Segment::D => lower.set(Side::Bottom, true),
            _ => {}
        }
    }
    (upper, lower)
}

/// Classified halves, or `None` if either half is an extra symbol.
fn raw_pair(d: SegDigit, s: SplitStrategy) -> Option<(OiluDigit, OiluDigit)> {
    let (up, lo) = raw_halves(d, s);
    Some((up.classify()?.digit(), lo.classify()?.digit()))
}

fn build_table(s: SplitStrategy, base: Base) -> Vec<SplitPair> {
    let raws: Vec<_> = SegDigit::all(base).map(|d| raw_pair(d, s)).collect();
    SegDigit::all(base)
        .map(|d| {
            let raw = raws[d.value() as usize];
            let collides = raw.is_some()
                && raws
                    .iter()
                    .enumerate()
                    .any(|(other, r)| other != d.value() as usize && *r == raw);
            match raw {
                Some((upper, lower)) if !collides => SplitPair {
                    upper,
                    lower,
                    replaced: false,
                },
                _ => {
                    let (upper, lower) = raw_pair(d, SplitStrategy::A)
                        .expect("strategy A never yields extra halves");
                    SplitPair {
                        upper,
                        lower,
                        replaced: true,
                    }
                }
            }
        })
        .collect()
}

fn tables() -> &'static [[Vec<SplitPair>; 2]; 3] {
    static TABLES: OnceLock<[[Vec<SplitPair>; 2]; 3]> = OnceLock::new();
    TABLES.get_or_init(|| {
        SplitStrategy::ALL.map(|s| [build_table(s, Base::Dec), build_table(s, Base::Hex)])
    })
}

/// Split table over the digits `0..base` in digit order.
pub fn split_table(s: SplitStrategy, base: Base) -> &'static [SplitPair] {
    let b = match base {
        Base::Dec => 0,
        Base::Hex => 1,
    };
    &tables()[s.index()][b]
}

/// Splits one digit of `base`. Returns `None` when `d` is not a digit of
/// `base` (a hex letter in decimal).
pub fn split_digit(d: SegDigit, s: SplitStrategy, base: Base) -> Option<SplitPair> {
    split_table(s, base).get(d.value() as usize).copied()
}

/// Digit whose split under `(s, base)` is `(upper, lower)`.
pub fn join_pair(
    upper: OiluDigit,
    lower: OiluDigit,
    s: SplitStrategy,
    base: Base,
) -> Option<SegDigit> {
    split_table(s, base)
        .iter()
        .position(|p| p.upper == upper && p.lower == lower)
        .map(|i| SegDigit(i as u8))
}

/// Parses a Dec/Hex digit string, case-insensitive for hex letters.
pub fn parse_digits(text: &str, base: Base) -> Result<Vec<SegDigit>, SplitError> {
    if text.is_empty() {
        return Err(SplitError::EmptyInput);
    }
    text.chars()
        .enumerate()
        .map(|(position, c)| {
            SegDigit::from_char(c, base).ok_or(SplitError::InvalidDigit { position, base })
        })
        .collect()
}

/// Splits every digit of `text`, keeping the per-digit pairs.
pub fn split_pairs(
    text: &str,
    s: SplitStrategy,
    base: Base,
) -> Result<Vec<(SegDigit, SplitPair)>, SplitError> {
    let table = split_table(s, base);
    Ok(parse_digits(text, base)?
        .into_iter()
        .map(|d| (d, table[d.value() as usize]))
        .collect())
}

/// Concatenates the (upper, lower) pairs of every digit; the result is twice
/// as long as `text`.
pub fn split_number(text: &str, s: SplitStrategy, base: Base) -> Result<OiluNumber, SplitError> {
    let digits = split_pairs(text, s, base)?
        .into_iter()
        .flat_map(|(_, p)| [p.upper, p.lower])
        .collect();
    Ok(OiluNumber::from_digits(digits).expect("nonempty input"))
}

/// Inverse of [`split_number`]: reads consecutive digit pairs and joins them.
/// Hex digits are emitted uppercase.
pub fn merge_number(n: &OiluNumber, s: SplitStrategy, base: Base) -> Result<String, SplitError> {
    let digits = n.digits();
    if !digits.len().is_multiple_of(2) {
        return Err(SplitError::OddLength);
    }
    digits
        .chunks_exact(2)
        .enumerate()
        .map(|(i, pair)| {
            join_pair(pair[0], pair[1], s, base)
                .map(SegDigit::to_char)
                .ok_or(SplitError::UnknownPair {
                    position: 2 * i,
                    upper: pair[0],
                    lower: pair[1],
                })
        })
        .collect()
}
