use crate::numbers::OiluNumber;
use crate::symbolic::{Side, SideSet};

use super::{MarkerError, MarkerId, MarkerLayout, RasterImage, MIN_SIZE};

/// Bytes below this are ink.
const THRESHOLD: u8 = 128;

/// Offset of the two side samples from the side's midpoint, relative to the
/// ring radius.
const SIDE_SAMPLE_OFFSET: f64 = 0.4;

fn is_ink(img: &RasterImage, x: f64, y: f64) -> bool {
    let size = img.width();
    let px = ((x * size as f64).floor() as i64).clamp(0, size as i64 - 1) as u32;
    let py = ((y * size as f64).floor() as i64).clamp(0, size as i64 - 1) as u32;
    img.get(px, py) < THRESHOLD
}

/// Reads the strokes of one ring by point sampling. A side counts when both
/// of its samples are ink; the bar counts when both of its ticks are ink,
/// in either orientation.
pub fn sample_level(img: &RasterImage, layout: &MarkerLayout, level: usize) -> SideSet {
    let r = layout.radius(level);
    let o = SIDE_SAMPLE_OFFSET * r;
    let both = |a: (f64, f64), b: (f64, f64)| is_ink(img, a.0, a.1) && is_ink(img, b.0, b.1);
    let mut set = SideSet::empty();
    for side in Side::ALL {
        let present = match side {
            Side::Top => both((0.5 - o, 0.5 - r), (0.5 + o, 0.5 - r)),
            Side::Bottom => both((0.5 - o, 0.5 + r), (0.5 + o, 0.5 + r)),
            Side::Left => both((0.5 - r, 0.5 - o), (0.5 - r, 0.5 + o)),
            Side::Right => both((0.5 + r, 0.5 - o), (0.5 + r, 0.5 + o)),
        };
        set.set(side, present);
    }
    // The bar is drawn as two ticks on the centre column; after a quarter
    // turn they lie on the centre row.
    let vertical = !set.top && !set.bottom && both((0.5, 0.5 - r), (0.5, 0.5 + r));
    let horizontal = !set.left && !set.right && both((0.5 - r, 0.5), (0.5 + r, 0.5));
    set.center_bar = vertical || horizontal;
    set
}

/// Reads a clean, axis-aligned marker with a known number of levels. A
/// picture turned by `k` quarter turns counter-clockwise decodes to
/// `facet(id, k)`.
pub fn decode_marker(img: &RasterImage, levels: usize) -> Result<MarkerId, MarkerError> {
    if img.width() != img.height() {
        return Err(MarkerError::BadImage(format!(
            "marker images are square, got {}x{}",
            img.width(),
            img.height()
        )));
    }
    if img.width() < MIN_SIZE {
        return Err(MarkerError::BadImage(format!(
            "{} pixels is below the {MIN_SIZE} pixel minimum",
            img.width()
        )));
    }
    let layout = MarkerLayout::new(levels)?;
    let digits = (0..levels)
        .map(|level| {
            sample_level(img, &layout, level)
                .classify()
                .map(|g| g.digit())
                .ok_or(MarkerError::UnreadableLevel(level))
        })
        .collect::<Result<Vec<_>, _>>()?;
    MarkerId::new(OiluNumber::from_digits(digits).expect("levels >= 1"))
}

#[cfg(test)]
mod tests {
    use super::super::{layout_marker, rasterize};
    use super::*;

    fn render(id: &str) -> RasterImage {
        rasterize(&layout_marker(&id.parse().unwrap()), 256).unwrap()
    }

    #[test]
    fn round_trip_example() {
        assert_eq!(
            decode_marker(&render("3172"), 4).unwrap().to_string(),
            "3172"
        );
    }

    #[test]
    fn quarter_turn_reads_next_facet() {
        let img = render("3172").rotate_ccw(1);
        assert_eq!(decode_marker(&img, 4).unwrap().to_string(), "5194");
        let img = render("3172").rotate_ccw(3);
        assert_eq!(decode_marker(&img, 4).unwrap().to_string(), "9158");
    }

    #[test]
    fn blank_image_is_unreadable() {
        let img = RasterImage::filled(256, 256, 255);
        assert_eq!(decode_marker(&img, 1), Err(MarkerError::UnreadableLevel(0)));
    }

    #[test]
    fn rejects_bad_images() {
        let img = RasterImage::filled(128, 64, 255);
        assert!(matches!(
            decode_marker(&img, 1),
            Err(MarkerError::BadImage(_))
        ));
        let img = RasterImage::filled(32, 32, 255);
        assert!(matches!(
            decode_marker(&img, 1),
            Err(MarkerError::BadImage(_))
        ));
        let img = RasterImage::filled(64, 64, 255);
        assert_eq!(decode_marker(&img, 0), Err(MarkerError::Levels(0)));
        assert_eq!(decode_marker(&img, 9), Err(MarkerError::Levels(9)));
    }

    #[test]
    fn every_digit_at_every_depth_of_eight() {
        for d in 0..10u8 {
            for level in 0..8 {
                let mut id = *b"01234567";
                id[level] = b'0' + d;
                let id = std::str::from_utf8(&id).unwrap();
                assert_eq!(decode_marker(&render(id), 8).unwrap().to_string(), id);
            }
        }
    }
}
