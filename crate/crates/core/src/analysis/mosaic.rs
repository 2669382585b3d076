//! The parameterized mosaic: two stacked copies of one block that differ only
//! in their north-east cell (`A` in the lower copy, `B` in the upper one).
//!
//! A block is `k + 1` columns wide. Its top row is the carrier
//! `L1 L2 .. Lk` followed by the `A`/`B` cell; below it lie `k + 1` rows of
//! diagonal stripes cycling through `k + 1` stripe colors. Telling `A` from
//! `B` needs one bit to travel from the seed to that cell. Through the carrier
//! it costs one extra tile type per carrier color (`k` in total); through the
//! stripes any path meets all `k + 1` stripe colors. The cheapest tile set
//! therefore spends two types on each carrier color.

use thiserror::Error;

use crate::model::{Color, Pattern};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MosaicError {
    #[error("mosaic parameter k must be at least 1")]
    ZeroK,
    #[error("stretch factor must be at least 1")]
    ZeroStretch,
}

/// Color ids used by `mosaic_pattern(k, _)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MosaicColors {
    /// `k + 1` stripe colors (white, blue, orange for `k = 2`).
    pub stripes: Vec<Color>,
    /// `k` carrier colors (lined black, lined white for `k = 2`).
    pub carriers: Vec<Color>,
    pub a: Color,
    pub b: Color,
}

impl MosaicColors {
    pub fn new(k: usize) -> Self {
        let k = k as Color;
        MosaicColors {
            stripes: (0..=k).collect(),
            carriers: (k + 1..=2 * k).collect(),
            a: 2 * k + 1,
            b: 2 * k + 2,
        }
    }

    pub fn count(&self) -> usize {
        self.stripes.len() + self.carriers.len() + 2
    }

    /// Tile types of the intended minimum set: one per stripe color, two per
    /// carrier color, and one each for `A` and `B`.
    pub fn intended_types(&self) -> usize {
        self.stripes.len() + 2 * self.carriers.len() + 2
    }
}

/// The mosaic for `k` carrier colors, every interior column duplicated
/// `stretch` times. Seed cells continue the stripes.
pub fn mosaic_pattern(k: usize, stretch: usize) -> Result<Pattern, MosaicError> {
    if k == 0 {
        return Err(MosaicError::ZeroK);
    }
    if stretch == 0 {
        return Err(MosaicError::ZeroStretch);
    }
    let colors = MosaicColors::new(k);
    let block = k + 2;
    let base = Pattern::from_fn(k + 1, 2 * block, |x, y| {
        if y == 0 {
            return colors.stripes[x % (k + 1)];
        }
        // Both copies restart the stripe phase so they agree everywhere
        // except at the A/B cell.
        let (copy, row) = ((y - 1) / block, (y - 1) % block + 1);
        let stripe = colors.stripes[(x + row) % (k + 1)];
        if x == 0 || row < block {
            stripe
        } else if x <= k {
            colors.carriers[x - 1]
        } else if copy == 0 {
            colors.a
        } else {
            colors.b
        }
    });
    Ok(base.stretch_columns(stretch))
}
