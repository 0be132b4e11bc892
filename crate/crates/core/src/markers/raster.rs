use super::{MarkerError, MarkerScene, MIN_SIZE};

pub const INK: u8 = 0;
pub const GROUND: u8 = 255;

/// Grayscale image, row-major with the top row first. 0 is ink, 255 ground.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RasterImage {
    width: u32,
    height: u32,
    pixels: Vec<u8>,
}

impl RasterImage {
    pub fn new(width: u32, height: u32, pixels: Vec<u8>) -> Result<RasterImage, MarkerError> {
        if pixels.len() != width as usize * height as usize {
            return Err(MarkerError::BadImage(format!(
                "{} bytes for a {width}x{height} image",
                pixels.len()
            )));
        }
        Ok(RasterImage {
            width,
            height,
            pixels,
        })
    }

    pub fn filled(width: u32, height: u32, value: u8) -> RasterImage {
        RasterImage {
            width,
            height,
            pixels: vec![value; width as usize * height as usize],
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    pub fn get(&self, x: u32, y: u32) -> u8 {
        self.pixels[y as usize * self.width as usize + x as usize]
    }

    fn set(&mut self, x: u32, y: u32, value: u8) {
        self.pixels[y as usize * self.width as usize + x as usize] = value;
    }

    /// Turns the picture `k` quarter turns counter-clockwise as seen on
    /// screen: the top row becomes the left column.
    pub fn rotate_ccw(&self, k: i64) -> RasterImage {
        let (w, h) = (self.width as usize, self.height as usize);
        let k = k.rem_euclid(4);
        let (out_w, out_h) = if k % 2 == 0 { (w, h) } else { (h, w) };
        let mut pixels = vec![GROUND; w * h];
        for (y, row) in self.pixels.chunks_exact(w).enumerate() {
            for (x, &v) in row.iter().enumerate() {
                let (nx, ny) = match k {
                    0 => (x, y),
                    1 => (y, w - 1 - x),
                    2 => (w - 1 - x, h - 1 - y),
                    _ => (h - 1 - y, x),
                };
                pixels[ny * out_w + nx] = v;
            }
        }
        RasterImage {
            width: out_w as u32,
            height: out_h as u32,
            pixels,
        }
    }
}

/// Pixel `(px, py)` is ink iff its centre lies inside any stroke.
pub fn rasterize(scene: &MarkerScene, size: u32) -> Result<RasterImage, MarkerError> {
    if size < MIN_SIZE {
        return Err(MarkerError::SizeTooSmall(size));
    }
    let mut img = RasterImage::filled(size, size, GROUND);
    let n = size as f64;
    let center = |p: u32| (p as f64 + 0.5) / n;
    // Candidate pixel span for [lo, hi], widened by one; the exact test below
    // decides.
    let span = |lo: f64, hi: f64| {
        let first = ((lo * n - 0.5).floor() as i64 - 1).max(0) as u32;
        let last = ((hi * n - 0.5).ceil() as i64 + 1).clamp(0, size as i64 - 1) as u32;
        first..=last
    };
    for stroke in &scene.strokes {
        let r = stroke.rect;
        for py in span(r.y0(), r.y1()) {
            for px in span(r.x0(), r.x1()) {
                if r.contains(center(px), center(py)) {
                    img.set(px, py, INK);
                }
            }
        }
    }
    Ok(img)
}
