use std::collections::{BTreeMap, BTreeSet};

use super::ModelError;

pub type Color = u32;

/// A colored rectangle over `{0..=w} x {0..=h}`. Row 0 and column 0 are the
/// seed cells. Cells are stored row-major from `y = 0` upward; all access goes
/// through `get(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    width: usize,
    height: usize,
    cells: Vec<Color>,
}

impl Pattern {
    pub fn new(width: usize, height: usize, cells: Vec<Color>) -> Result<Self, ModelError> {
        let expected = (width + 1) * (height + 1);
        if cells.len() != expected {
            return Err(ModelError::PatternSize { expected, got: cells.len() });
        }
        Ok(Pattern { width, height, cells })
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> Color) -> Self {
        let mut cells = Vec::with_capacity((width + 1) * (height + 1));
        for y in 0..=height {
            for x in 0..=width {
                cells.push(f(x, y));
            }
        }
        Pattern { width, height, cells }
    }

    pub fn uniform(width: usize, height: usize, color: Color) -> Self {
        Self::from_fn(width, height, |_, _| color)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn index(&self, x: usize, y: usize) -> usize {
        assert!(x <= self.width && y <= self.height, "({x}, {y}) outside pattern");
        y * (self.width + 1) + x
    }

    pub fn get(&self, x: usize, y: usize) -> Color {
        self.cells[self.index(x, y)]
    }

    /// Like `get`, but `None` outside the domain (handy for neighbor scans).
    pub fn at(&self, x: i64, y: i64) -> Option<Color> {
        if x < 0 || y < 0 || x as usize > self.width || y as usize > self.height {
            None
        } else {
            Some(self.get(x as usize, y as usize))
        }
    }

    pub fn set(&mut self, x: usize, y: usize, color: Color) {
        let i = self.index(x, y);
        self.cells[i] = color;
    }

    pub fn color_set(&self) -> BTreeSet<Color> {
        self.cells.iter().copied().collect()
    }

    /// Colors of the cells with `x >= 1` and `y >= 1`.
    pub fn interior_colors(&self) -> BTreeSet<Color> {
        self.interior_positions().map(|(x, y)| self.get(x, y)).collect()
    }

    pub fn is_k_colored(&self, k: usize) -> bool {
        self.color_set().len() <= k
    }

    pub fn interior_positions(&self) -> impl Iterator<Item = (usize, usize)> {
        let (w, h) = (self.width, self.height);
        (1..=h).flat_map(move |y| (1..=w).map(move |x| (x, y)))
    }

    pub fn interior_len(&self) -> usize {
        self.width * self.height
    }

    /// Rows from north (`y = h`) to south (`y = 0`).
    pub fn rows_north_first(&self) -> impl Iterator<Item = &[Color]> {
        self.cells.chunks(self.width + 1).rev()
    }

    /// Duplicate every interior column `factor` times; the seed column stays single.
    pub fn stretch_columns(&self, factor: usize) -> Pattern {
        assert!(factor >= 1);
        let w = self.width * factor;
        Pattern::from_fn(w, self.height, |x, y| {
            if x == 0 {
                self.get(0, y)
            } else {
                self.get((x - 1) / factor + 1, y)
            }
        })
    }

    /// Sub-rectangle whose seed corner sits at `(x0, y0)`.
    pub fn crop(&self, x0: usize, y0: usize, width: usize, height: usize) -> Pattern {
        assert!(x0 + width <= self.width && y0 + height <= self.height);
        Pattern::from_fn(width, height, |x, y| self.get(x0 + x, y0 + y))
    }

    pub fn recolor(&self, map: &BTreeMap<Color, Color>) -> Pattern {
        Pattern {
            width: self.width,
            height: self.height,
            cells: self.cells.iter().map(|c| *map.get(c).unwrap_or(c)).collect(),
        }
    }

    /// Positions where `self` and `other` differ (same dimensions required).
    pub fn diff(&self, other: &Pattern) -> Vec<(usize, usize)> {
        assert_eq!((self.width, self.height), (other.width, other.height));
        let mut out = Vec::new();
        for y in 0..=self.height {
            for x in 0..=self.width {
                if self.get(x, y) != other.get(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn color_set_is_exact_image() {
        let p = Pattern::from_fn(2, 1, |x, _| x as Color * 2);
        assert_eq!(p.color_set(), [0, 2, 4].into_iter().collect());
        assert!(p.is_k_colored(3));
        assert!(!p.is_k_colored(2));
    }

    #[test]
    fn stretch_keeps_colors_and_multiplies_width() {
        let p = Pattern::from_fn(2, 2, |x, y| (x + 3 * y) as Color);
        let s = p.stretch_columns(3);
        assert_eq!(s.width(), 6);
        assert_eq!(s.color_set(), p.color_set());
        assert_eq!(s.get(4, 1), p.get(2, 1));
        assert_eq!(s.get(0, 2), p.get(0, 2));
    }

    #[test]
    fn wrong_cell_count_is_rejected() {
        assert!(Pattern::new(1, 1, vec![0; 3]).is_err());
    }

    #[test]
    fn rows_north_first_starts_at_top() {
        let p = Pattern::from_fn(1, 1, |_, y| y as Color);
        let rows: Vec<_> = p.rows_north_first().collect();
        assert_eq!(rows, vec![&[1, 1][..], &[0, 0][..]]);
    }
}
