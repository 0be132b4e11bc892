use crate::symbolic::{Glyph, Side};

use super::{MarkerError, MarkerId, MAX_LEVELS};

/// Geometry of a marker with `levels` nested glyphs, in unit-square
/// coordinates with the origin at the top-left and y pointing down.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarkerLayout {
    levels: usize,
}

impl MarkerLayout {
    /// Half-size of the outermost ring.
    pub const OUTER_HALF_SIZE: f64 = 0.45;

    pub fn new(levels: usize) -> Result<MarkerLayout, MarkerError> {
        if levels == 0 || levels > MAX_LEVELS {
            return Err(MarkerError::Levels(levels));
        }
        Ok(MarkerLayout { levels })
    }

    pub fn levels(&self) -> usize {
        self.levels
    }

    /// Distance between consecutive rings.
    pub fn gap(&self) -> f64 {
        Self::OUTER_HALF_SIZE / self.levels as f64
    }

    pub fn stroke_width(&self) -> f64 {
        0.4 * self.gap()
    }

    pub fn tick_length(&self) -> f64 {
        0.8 * self.gap()
    }

    /// Half-size of the ring of level `i`.
    pub fn radius(&self, level: usize) -> f64 {
        Self::OUTER_HALF_SIZE * (self.levels - level) as f64 / self.levels as f64
    }
}

/// Axis-aligned rectangle, by centre and size.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub cx: f64,
    pub cy: f64,
    pub width: f64,
    pub height: f64,
}

impl Rect {
    fn from_bounds(x0: f64, y0: f64, x1: f64, y1: f64) -> Rect {
        Rect {
            cx: (x0 + x1) / 2.0,
            cy: (y0 + y1) / 2.0,
            width: x1 - x0,
            height: y1 - y0,
        }
    }

    pub fn x0(&self) -> f64 {
        self.cx - self.width / 2.0
    }

    pub fn x1(&self) -> f64 {
        self.cx + self.width / 2.0
    }

    pub fn y0(&self) -> f64 {
        self.cy - self.height / 2.0
    }

    pub fn y1(&self) -> f64 {
        self.cy + self.height / 2.0
    }

    /// Closed-interval containment.
    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x0() && x <= self.x1() && y >= self.y0() && y <= self.y1()
    }

    fn clip_to_unit(self) -> Rect {
        Rect::from_bounds(
            self.x0().max(0.0),
            self.y0().max(0.0),
            self.x1().min(1.0),
            self.y1().min(1.0),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Stroke {
    pub level: usize,
    pub rect: Rect,
}

/// Ink rectangles of a marker, in drawing order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MarkerScene {
    pub strokes: Vec<Stroke>,
}

impl MarkerScene {
    pub fn level_strokes(&self, level: usize) -> impl Iterator<Item = &Stroke> {
        self.strokes.iter().filter(move |s| s.level == level)
    }
}

/// Lays out `id` level by level: sides of a square ring for square, cup and
/// corner glyphs, and two short ticks on the centre column for the bar so
/// that inner levels stay visible.
pub fn layout_marker(id: &MarkerId) -> MarkerScene {
    let layout = MarkerLayout::new(id.levels()).expect("MarkerId length is bounded");
    let w = layout.stroke_width();
    let tick = layout.tick_length();
    let mut strokes = Vec::new();
    for (level, digit) in id.number().digits().iter().enumerate() {
        let r = layout.radius(level);
        let mut push = |rect: Rect| {
            strokes.push(Stroke {
                level,
                rect: rect.clip_to_unit(),
            })
        };
        let glyph = digit.glyph();
        if glyph == Glyph::Bar {
            // Ticks reach out by w/2 so they end flush with the ring's outer edge.
            let (c, hw) = (0.5, w / 2.0);
            push(Rect::from_bounds(c - hw, c - r - hw, c + hw, c - r + tick));
            push(Rect::from_bounds(c - hw, c + r - tick, c + hw, c + r + hw));
            continue;
        }
        let sides = glyph.sides();
        let long = 2.0 * r + w;
        for side in Side::ALL.into_iter().filter(|&s| sides.has(s)) {
            push(match side {
                Side::Top => Rect {
                    cx: 0.5,
                    cy: 0.5 - r,
                    width: long,
                    height: w,
                },
                Side::Bottom => Rect {
                    cx: 0.5,
                    cy: 0.5 + r,
                    width: long,
                    height: w,
                },
                Side::Left => Rect {
                    cx: 0.5 - r,
                    cy: 0.5,
                    width: w,
                    height: long,
                },
                Side::Right => Rect {
                    cx: 0.5 + r,
                    cy: 0.5,
                    width: w,
                    height: long,
                },
            });
        }
    }
    MarkerScene { strokes }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scene(id: &str) -> MarkerScene {
        layout_marker(&id.parse().unwrap())
    }

    #[test]
    fn single_square_is_one_ring() {
        let s = scene("0");
        assert_eq!(s.strokes.len(), 4);
    }

    #[test]
    fn bar_is_two_centre_ticks() {
        let s = scene("1");
        assert_eq!(s.strokes.len(), 2);
        for st in &s.strokes {
            assert!((st.rect.cx - 0.5).abs() < 1e-12);
            assert!(st.rect.height > st.rect.width);
        }
    }

    #[test]
    fn nested_stroke_counts() {
        let s = scene("3172");
        let counts: Vec<usize> = (0..4).map(|l| s.level_strokes(l).count()).collect();
        assert_eq!(counts, [3, 2, 3, 2]);
    }

    #[test]
    fn radii_decrease_and_rings_do_not_touch() {
        for k in 1..=MAX_LEVELS {
            let l = MarkerLayout::new(k).unwrap();
            for i in 1..k {
                assert!(l.radius(i - 1) > l.radius(i));
            }
            assert!(l.radius(k - 1) > 0.0);
            assert!(l.stroke_width() < l.gap());
        }
        assert!(MarkerLayout::new(0).is_err());
        assert!(MarkerLayout::new(9).is_err());
    }

    #[test]
    fn strokes_stay_in_unit_square() {
        for id in ["0", "1", "00", "88888888", "10101010"] {
            for st in scene(id).strokes {
                let r = st.rect;
                assert!(r.x0() >= 0.0 && r.y0() >= 0.0 && r.x1() <= 1.0 && r.y1() <= 1.0);
            }
        }
    }
}
