//! The ten OILU glyphs and their quarter-turn rotation group.
//!
//! Four base symbols carry the digits one, two, three and zero: the bar `|`,
//! the corner `L`, the cup `U` and the square. The remaining six digits are
//! the counter-clockwise quarter turns of the corner (even digits) and the
//! cup (odd digits). Bar and square are fixed by rotation.
//!
//! | digit | glyph               |
//! |-------|---------------------|
//! | 0     | square              |
//! | 1     | bar                 |
//! | 2 4 6 8 | corner at BL, BR, TR, TL |
//! | 3 5 7 9 | cup opening up, left, down, right |

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Position of the right angle of a corner glyph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Corner {
    BottomLeft,
    BottomRight,
    TopRight,
    TopLeft,
}

/// Direction of the open side of a cup glyph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Opening {
    Up,
    Left,
    Down,
    Right,
}

impl Corner {
    /// Counter-clockwise order; one step per quarter turn.
    const CYCLE: [Corner; 4] = [
        Corner::BottomLeft,
        Corner::BottomRight,
        Corner::TopRight,
        Corner::TopLeft,
    ];

    fn index(self) -> usize {
        self as usize
    }
}

impl Opening {
    const CYCLE: [Opening; 4] = [Opening::Up, Opening::Left, Opening::Down, Opening::Right];

    fn index(self) -> usize {
        self as usize
    }
}

/// One of the ten OILU symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Glyph {
    /// Vertical stroke `|`.
    Bar,
    Square,
    Corner(Corner),
    Cup(Opening),
}

/// Reduces an arbitrary quarter-turn count to `0..4`.
pub(crate) fn quarter_turns(k: i64) -> usize {
    k.rem_euclid(4) as usize
}

impl Glyph {
    /// All glyphs in digit order: `ALL[d]` carries digit `d`.
    pub const ALL: [Glyph; 10] = [
        Glyph::Square,
        Glyph::Bar,
        Glyph::Corner(Corner::BottomLeft),
        Glyph::Cup(Opening::Up),
        Glyph::Corner(Corner::BottomRight),
        Glyph::Cup(Opening::Left),
        Glyph::Corner(Corner::TopRight),
        Glyph::Cup(Opening::Down),
        Glyph::Corner(Corner::TopLeft),
        Glyph::Cup(Opening::Right),
    ];

    pub fn from_digit(d: OiluDigit) -> Glyph {
        Glyph::ALL[d.value() as usize]
    }

    pub fn digit(self) -> OiluDigit {
        let value = match self {
            Glyph::Square => 0,
            Glyph::Bar => 1,
            Glyph::Corner(c) => 2 + 2 * c.index() as u8,
            Glyph::Cup(o) => 3 + 2 * o.index() as u8,
        };
        OiluDigit(value)
    }

    /// Rotates by `k` counter-clockwise quarter turns (`k` taken mod 4).
    pub fn rotate(self, k: i64) -> Glyph {
        let k = quarter_turns(k);
        match self {
            Glyph::Bar | Glyph::Square => self,
            Glyph::Corner(c) => Glyph::Corner(Corner::CYCLE[(c.index() + k) % 4]),
            Glyph::Cup(o) => Glyph::Cup(Opening::CYCLE[(o.index() + k) % 4]),
        }
    }

    /// Number of line strokes needed to draw the glyph.
    pub fn stroke_count(self) -> u32 {
        match self {
            Glyph::Bar => 1,
            Glyph::Corner(_) => 2,
            Glyph::Cup(_) => 3,
            Glyph::Square => 4,
        }
    }

    /// The square sides drawn by this glyph. The bar has none; it is drawn on
    /// the centre column instead.
    pub fn sides(self) -> SideSet {
        match self {
            Glyph::Bar => SideSet::center_bar(),
            Glyph::Square => SideSet::from_sides(&Side::ALL),
            Glyph::Corner(c) => SideSet::from_sides(&match c {
                Corner::BottomLeft => [Side::Bottom, Side::Left],
                Corner::BottomRight => [Side::Bottom, Side::Right],
                Corner::TopRight => [Side::Top, Side::Right],
                Corner::TopLeft => [Side::Top, Side::Left],
            }),
            Glyph::Cup(o) => {
                let missing = match o {
                    Opening::Up => Side::Top,
                    Opening::Left => Side::Left,
                    Opening::Down => Side::Bottom,
                    Opening::Right => Side::Right,
                };
                let mut s = SideSet::from_sides(&Side::ALL);
                s.set(missing, false);
                s
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("digit value {0} is outside 0..=9")]
pub struct DigitOutOfRange(pub u32);

/// A decimal digit carried by an OILU glyph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct OiluDigit(u8);

impl OiluDigit {
    pub fn new(value: u8) -> Result<OiluDigit, DigitOutOfRange> {
        if value <= 9 {
            Ok(OiluDigit(value))
        } else {
            Err(DigitOutOfRange(value as u32))
        }
    }

    pub fn from_char(c: char) -> Option<OiluDigit> {
        c.to_digit(10).map(|v| OiluDigit(v as u8))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn to_char(self) -> char {
        (b'0' + self.0) as char
    }

    pub fn glyph(self) -> Glyph {
        Glyph::from_digit(self)
    }

    /// Digit read after `k` counter-clockwise quarter turns: 0 and 1 are
    /// fixed, evens cycle 2→4→6→8, odds cycle 3→5→7→9.
    pub fn rotate(self, k: i64) -> OiluDigit {
        let k = quarter_turns(k) as u8;
        match self.0 {
            0 | 1 => self,
            v => {
                let base = 2 + (v & 1);
                let step = (v - base) / 2;
                OiluDigit(base + 2 * ((step + k) % 4))
            }
        }
    }

    pub fn all() -> impl Iterator<Item = OiluDigit> {
        (0..=9).map(OiluDigit)
    }
}

impl TryFrom<u8> for OiluDigit {
    type Error = DigitOutOfRange;

    fn try_from(value: u8) -> Result<Self, Self::Error> {
        OiluDigit::new(value)
    }
}

impl From<OiluDigit> for u8 {
    fn from(d: OiluDigit) -> u8 {
        d.0
    }
}

impl fmt::Display for OiluDigit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A side of the square cell a glyph is drawn in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Top,
    Bottom,
    Left,
    Right,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Bottom, Side::Left, Side::Right];

    /// The side this one moves to after a counter-clockwise quarter turn.
    pub fn rotate_ccw(self) -> Side {
        match self {
            Side::Top => Side::Left,
            Side::Left => Side::Bottom,
            Side::Bottom => Side::Right,
            Side::Right => Side::Top,
        }
    }
}

/// Strokes present in a square cell: any of the four sides plus an optional
/// vertical bar through the centre.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SideSet {
    pub top: bool,
    pub bottom: bool,
    pub left: bool,
    pub right: bool,
    pub center_bar: bool,
}

impl SideSet {
    pub fn empty() -> SideSet {
        SideSet::default()
    }

    pub fn center_bar() -> SideSet {
        SideSet {
            center_bar: true,
            ..SideSet::default()
        }
    }

    pub fn from_sides(sides: &[Side]) -> SideSet {
        let mut s = SideSet::default();
        for &side in sides {
            s.set(side, true);
        }
        s
    }

    pub fn has(&self, side: Side) -> bool {
        match side {
            Side::Top => self.top,
            Side::Bottom => self.bottom,
            Side::Left => self.left,
            Side::Right => self.right,
        }
    }

    pub fn set(&mut self, side: Side, on: bool) {
        match side {
            Side::Top => self.top = on,
            Side::Bottom => self.bottom = on,
            Side::Left => self.left = on,
            Side::Right => self.right = on,
        }
    }

    pub fn side_count(&self) -> usize {
        Side::ALL.iter().filter(|&&s| self.has(s)).count()
    }

    /// Rotates the side strokes by `k` counter-clockwise quarter turns. The
    /// centre bar is a vertical line and is kept as is.
    pub fn rotate(&self, k: i64) -> SideSet {
        let mut out = SideSet {
            center_bar: self.center_bar,
            ..SideSet::default()
        };
        for side in Side::ALL {
            if self.has(side) {
                let mut to = side;
                for _ in 0..quarter_turns(k) {
                    to = to.rotate_ccw();
                }
                out.set(to, true);
            }
        }
        out
    }

    /// Classifies the stroke set as one of the ten glyphs, or `None` for an
    /// extra symbol (empty, lone horizontal, two parallel sides, or a centre
    /// bar combined with sides).
    pub fn classify(&self) -> Option<Glyph> {
        if self.center_bar {
            return (self.side_count() == 0).then_some(Glyph::Bar);
        }
        let (t, b, l, r) = (self.top, self.bottom, self.left, self.right);
        match self.side_count() {
            4 => Some(Glyph::Square),
            3 => Some(Glyph::Cup(if !t {
                Opening::Up
            } else if !l {
                Opening::Left
            } else if !b {
                Opening::Down
            } else {
                Opening::Right
            })),
            2 => match (t, b, l, r) {
                (false, true, true, false) => Some(Glyph::Corner(Corner::BottomLeft)),
                (false, true, false, true) => Some(Glyph::Corner(Corner::BottomRight)),
                (true, false, false, true) => Some(Glyph::Corner(Corner::TopRight)),
                (true, false, true, false) => Some(Glyph::Corner(Corner::TopLeft)),
                _ => None,
            },
            1 if l || r => Some(Glyph::Bar),
            _ => None,
        }
    }
}

impl fmt::Display for SideSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        let mut first = true;
        for (on, name) in [
            (self.top, "T"),
            (self.bottom, "B"),
            (self.left, "L"),
            (self.right, "R"),
            (self.center_bar, "bar"),
        ] {
            if on {
                if !first {
                    f.write_str(",")?;
                }
                f.write_str(name)?;
                first = false;
            }
        }
        f.write_str("}")
    }
}
