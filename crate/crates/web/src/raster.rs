//! Spy-plot rasterization into RGBA pixel buffers.

use lrcm::{CutVector, SparseSymMatrix};

pub type Rgba = [u8; 4];

pub const BACKGROUND: Rgba = [255, 255, 255, 255];
pub const DIAGONAL: Rgba = [120, 144, 200, 255];
pub const OFF_DIAGONAL: Rgba = [24, 24, 24, 255];
pub const BLOCK_FILL: Rgba = [236, 242, 255, 255];
pub const CUT_LINE: Rgba = [214, 48, 49, 255];

/// Maps matrix index `i` of an `n`-wide matrix to a pixel in `0..px`.
pub fn cell(i: usize, n: usize, px: usize) -> usize {
    (i as u128 * px as u128 / n as u128) as usize
}

/// Pixel span covered by index `i`; at least one pixel wide.
fn span(i: usize, n: usize, px: usize) -> (usize, usize) {
    let lo = cell(i, n, px);
    (lo, cell(i + 1, n, px).max(lo + 1).min(px))
}

struct Canvas {
    px: usize,
    data: Vec<u8>,
}

impl Canvas {
    fn new(px: usize) -> Self {
        let mut data = Vec::with_capacity(px * px * 4);
        for _ in 0..px * px {
            data.extend_from_slice(&BACKGROUND);
        }
        Canvas { px, data }
    }

    fn rect(&mut self, x0: usize, x1: usize, y0: usize, y1: usize, c: Rgba) {
        for y in y0..y1 {
            for x in x0..x1 {
                let at = (y * self.px + x) * 4;
                self.data[at..at + 4].copy_from_slice(&c);
            }
        }
    }
}

/// Renders the nonzero pattern of `m` into a `px` by `px` RGBA image.
///
/// With `cuts`, each diagonal block is shaded and its lower-right boundary
/// drawn as a horizontal and vertical line, so an entry outside the shaded
/// squares would stand out. Off-diagonal entries are painted last so they
/// are never hidden by a line.
pub fn spy(m: &SparseSymMatrix, px: usize, cuts: Option<&CutVector>) -> Vec<u8> {
    let mut canvas = Canvas::new(px);
    let n = m.n();
    if n == 0 || px == 0 {
        return canvas.data;
    }
    if let Some(cuts) = cuts {
        for block in cuts.blocks() {
            let lo = cell(block.start, n, px);
            let hi = cell(block.end - 1, n, px) + 1;
            canvas.rect(lo, hi, lo, hi, BLOCK_FILL);
        }
        for &c in &cuts.0[..cuts.0.len().saturating_sub(1)] {
            let line = cell(c, n, px).min(px - 1);
            canvas.rect(line, line + 1, 0, px, CUT_LINE);
            canvas.rect(0, px, line, line + 1, CUT_LINE);
        }
    }
    for pass_diagonal in [true, false] {
        for (i, j, v) in m.entries() {
            if v != 0 && (i == j) == pass_diagonal {
                let ((x0, x1), (y0, y1)) = (span(j, n, px), span(i, n, px));
                let colour = if pass_diagonal {
                    DIAGONAL
                } else {
                    OFF_DIAGONAL
                };
                canvas.rect(x0, x1, y0, y1, colour);
            }
        }
    }
    canvas.data
}
