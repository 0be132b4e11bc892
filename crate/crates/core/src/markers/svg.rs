use std::fmt::Write;

use super::{MarkerError, MarkerScene, Rect, MIN_SIZE};

fn rect_element(out: &mut String, r: &Rect, size: f64, fill: &str) {
    let _ = writeln!(
        out,
        r#"<rect x="{:.2}" y="{:.2}" width="{:.2}" height="{:.2}" fill="{fill}"/>"#,
        r.x0() * size,
        r.y0() * size,
        r.width * size,
        r.height * size,
    );
}

/// SVG 1.1 document: white background, then one black rectangle per stroke
/// in scene order. Coordinates are pixels with two decimals.
pub fn scene_to_svg(scene: &MarkerScene, size: u32) -> Result<String, MarkerError> {
    if size < MIN_SIZE {
        return Err(MarkerError::SizeTooSmall(size));
    }
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    let background = Rect {
        cx: 0.5,
        cy: 0.5,
        width: 1.0,
        height: 1.0,
    };
    let n = size as f64;
    rect_element(&mut out, &background, n, "#ffffff");
    for stroke in &scene.strokes {
        rect_element(&mut out, &stroke.rect, n, "#000000");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::layout_marker;
    use super::*;

    #[test]
    fn empty_scene_has_background_only() {
        let svg = scene_to_svg(&MarkerScene::default(), 256).unwrap();
        assert_eq!(svg.matches("<rect").count(), 1);
        assert!(svg.contains(
            r##"<rect x="0.00" y="0.00" width="256.00" height="256.00" fill="#ffffff"/>"##
        ));
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn square_has_four_strokes_plus_background() {
        let scene = layout_marker(&"0".parse().unwrap());
        let svg = scene_to_svg(&scene, 256).unwrap();
        assert_eq!(svg.matches("<rect").count(), 5);
        assert_eq!(svg.matches("#000000").count(), 4);
    }

    #[test]
    fn too_small() {
        assert_eq!(
            scene_to_svg(&MarkerScene::default(), 32),
            Err(MarkerError::SizeTooSmall(32))
        );
    }
}
