//! Rasters of a region of convergence.

use std::fmt::Write as _;
use std::thread;

use appellf2::selector::check_point;
use appellf2::{roc_contains, SeriesId};

/// Pixel values: outside, inside, on a singular line.
pub const OUTSIDE: u8 = 0;
pub const INSIDE: u8 = 1;
pub const SINGULAR: u8 = 2;

/// A grid × grid raster over [lo, hi]², row 0 at the top (largest y).
#[derive(Debug, Clone, PartialEq)]
pub struct Raster {
    pub id: SeriesId,
    pub grid: usize,
    pub lo: f64,
    pub hi: f64,
    pub pixels: Vec<u8>,
}

impl Raster {
    pub fn inside_count(&self) -> usize {
        self.pixels.iter().filter(|&&p| p == INSIDE).count()
    }

    /// Plain PGM (P2) with maxval 2.
    pub fn pgm(&self) -> String {
        let mut out = format!(
            "P2\n# {} on [{}, {}]^2, 1 = inside, 2 = singular line\n{} {}\n2\n",
            self.id, self.lo, self.hi, self.grid, self.grid
        );
        for row in self.pixels.chunks(self.grid) {
            let line: Vec<String> = row.iter().map(|p| p.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// SVG with the region filled, singular lines drawn and the query point marked.
    pub fn svg(&self, point: Option<(f64, f64)>) -> String {
        let n = self.grid;
        let size = 600.0;
        let px = size / n as f64;
        let map = |x: f64, y: f64| {
            let u = (x - self.lo) / (self.hi - self.lo) * size;
            let v = (self.hi - y) / (self.hi - self.lo) * size;
            (u, v)
        };
        let mut out = String::new();
        let _ = writeln!(
            out,
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
        );
        let _ = writeln!(out, "<title>{} region of convergence</title>", self.id);
        let _ = writeln!(out, "<rect width=\"{size}\" height=\"{size}\" fill=\"white\"/>");
        for (r, row) in self.pixels.chunks(n).enumerate() {
            let mut c = 0;
            while c < n {
                if row[c] != INSIDE {
                    c += 1;
                    continue;
                }
                let start = c;
                while c < n && row[c] == INSIDE {
                    c += 1;
                }
                let _ = writeln!(
                    out,
                    "<rect x=\"{:.3}\" y=\"{:.3}\" width=\"{:.3}\" height=\"{:.3}\" fill=\"#9ecae1\"/>",
                    start as f64 * px,
                    r as f64 * px,
                    (c - start) as f64 * px,
                    px
                );
            }
        }
        let (lo, hi) = (self.lo, self.hi);
        let lines = [
            ((0.0, lo), (0.0, hi)),
            ((1.0, lo), (1.0, hi)),
            ((lo, 0.0), (hi, 0.0)),
            ((lo, 1.0), (hi, 1.0)),
            ((lo, 1.0 - lo), (hi, 1.0 - hi)),
        ];
        for ((x1, y1), (x2, y2)) in lines {
            let (a, b) = map(x1, y1);
            let (c, d) = map(x2, y2);
            let _ = writeln!(
                out,
                "<line x1=\"{a:.3}\" y1=\"{b:.3}\" x2=\"{c:.3}\" y2=\"{d:.3}\" stroke=\"black\" stroke-width=\"1\"/>"
            );
        }
        if let Some((x, y)) = point {
            let (u, v) = map(x, y);
            let _ = writeln!(out, "<circle cx=\"{u:.3}\" cy=\"{v:.3}\" r=\"4\" fill=\"red\"/>");
        }
        out.push_str("</svg>\n");
        out
    }
}

/// Centre of pixel (row, col); row 0 is the top.
fn centre(lo: f64, step: f64, grid: usize, row: usize, col: usize) -> (f64, f64) {
    let x = lo + (col as f64 + 0.5) * step;
    let y = lo + ((grid - 1 - row) as f64 + 0.5) * step;
    (x, y)
}

fn classify(id: SeriesId, x: f64, y: f64, half: f64) -> u8 {
    if check_point(x, y, half).is_err() {
        SINGULAR
    } else if roc_contains(id, x, y) {
        INSIDE
    } else {
        OUTSIDE
    }
}

/// Evaluates the region predicate at every pixel centre. Pixels crossed by
/// a singular line are marked instead.
pub fn rasterize(id: SeriesId, grid: usize, lo: f64, hi: f64) -> Raster {
    let step = (hi - lo) / grid as f64;
    let half = 0.5 * step;
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(grid.max(1));
    let rows_per = grid.div_ceil(workers.max(1)).max(1);
    let mut pixels = vec![OUTSIDE; grid * grid];
    thread::scope(|s| {
        for (chunk_index, chunk) in pixels.chunks_mut(rows_per * grid).enumerate() {
            s.spawn(move || {
                for (i, p) in chunk.iter_mut().enumerate() {
                    let row = chunk_index * rows_per + i / grid;
                    let col = i % grid;
                    let (x, y) = centre(lo, step, grid, row, col);
                    *p = classify(id, x, y, half);
                }
            });
        }
    });
    Raster { id, grid, lo, hi, pixels }
}
