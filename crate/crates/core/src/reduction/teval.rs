//! The evaluator tile set: 51 tile types over 27 colors.
//!
//! Glues, as they travel:
//! * rows (eastward): `bg` background, `v` variable wire, `0`/`1` assignment
//!   bit (`0'`/`1'` between the two columns of a background pair), `e`/`a1`
//!   clause accumulator (`e'`/`a1'` inside background pairs), `se`/`de` the
//!   two states of the diagonal snake;
//! * columns (northward): `bg`, `l` literal wire (`u` above the snake), `0`/`1`
//!   literal value, `c0`/`c1` checked literal, `e` evaluation column, `top`.
//!
//! A literal wire of thickness `2j` meets a variable wire of thickness `2i`.
//! The snake starts at the wire's south-west corner and climbs one row per
//! column, so it reaches the polarity column in row `2j`: below that row the
//! polarity crosses unseen, in row `2j` it is checked, and when `i == j` the
//! checked value meets the assignment bit in the row above, where an XNOR tile
//! substitutes it. When `i > j` the checked value is released and crosses the
//! rest of the thicker wire visibly (`P`/`N`).

use std::collections::BTreeMap;

use crate::model::{Color, Coloring, TileSet, TileType};

pub mod color {
    use crate::model::Color;

    pub const BG: Color = 0;
    pub const V_WIRE: Color = 1;
    pub const L_WIRE: Color = 2;
    pub const POSITIVE: Color = 3;
    pub const NEGATIVE: Color = 4;
    pub const RED: Color = 5;
    pub const GREEN: Color = 6;
    pub const ONE: Color = 7;
    pub const ZERO: Color = 8;
    /// First and second column of a background pair crossed by a bit; these
    /// always occur side by side.
    pub const BIT_PAIR_A: Color = 9;
    pub const BIT_PAIR_B: Color = 10;
    pub const ACC_PAIR_A: Color = 11;
    pub const ACC_PAIR_B: Color = 12;
    pub const BIT_E: Color = 13;
    pub const BIT_L: Color = 14;
    pub const BIT_U: Color = 15;
    pub const ACC_L: Color = 16;
    pub const LIT_BG: Color = 17;
    pub const LIT_UNDER: Color = 18;
    pub const CHECK: Color = 19;
    pub const UNCHECK: Color = 20;
    pub const SNAKE_HEAD: Color = 21;
    pub const E_WIRE: Color = 22;
    pub const SNAKE_BODY: Color = 23;
    pub const CROSS: Color = 24;
    pub const XNOR: Color = 25;
    pub const OR: Color = 26;

    pub const COUNT: Color = 27;
}

/// Human-readable color names, indexed by color id.
pub const COLOR_NAMES: [&str; 27] = [
    "bg",
    "v-wire",
    "l-wire",
    "positive",
    "negative",
    "red",
    "green",
    "one",
    "zero",
    "bit-pair-a",
    "bit-pair-b",
    "acc-pair-a",
    "acc-pair-b",
    "bit-e",
    "bit-l",
    "bit-u",
    "acc-l",
    "lit-bg",
    "lit-under",
    "check",
    "uncheck",
    "snake-head",
    "e-wire",
    "snake-body",
    "cross",
    "xnor",
    "or",
];

#[derive(Debug, Clone)]
pub struct EvaluatorTileSet {
    pub tiles: TileSet,
    pub coloring: Coloring,
}

impl EvaluatorTileSet {
    /// Number of tile types per color.
    pub fn profile(&self) -> BTreeMap<Color, usize> {
        let mut out = BTreeMap::new();
        for (_, c) in self.coloring.iter() {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    /// Multiplicity -> number of colors with that many tile types.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut out = BTreeMap::new();
        for k in self.profile().into_values() {
            *out.entry(k).or_insert(0) += 1;
        }
        out
    }

    pub fn color_of(&self, id: &str) -> Option<Color> {
        self.coloring.get(id)
    }
}

pub(crate) struct Builder {
    tiles: Vec<TileType>,
    coloring: Coloring,
}

impl Builder {
    pub(crate) fn new() -> Self {
        Builder { tiles: Vec::new(), coloring: Coloring::new() }
    }

    /// Add a tile given as `(W, S) -> (N, E)`.
    pub(crate) fn add(&mut self, id: &str, w: &str, s: &str, n: &str, e: &str, c: Color) {
        self.tiles.push(TileType::from_strs(id, n, w, s, e));
        self.coloring.set(id, c);
    }

    pub(crate) fn finish(self) -> (Vec<TileType>, Coloring) {
        (self.tiles, self.coloring)
    }
}

pub(crate) fn add_evaluator_tiles(b: &mut Builder) {
    use color::*;
    let bits = ["0", "1"];

    // Background columns pass every row signal; bits and accumulators are
    // primed in the first column of a pair and restored in the second.
    b.add("bg", "bg", "bg", "bg", "bg", BG);
    b.add("bg_v", "v", "bg", "bg", "v", V_WIRE);
    for x in bits {
        b.add(&format!("bg_{x}"), x, "bg", "bg", &format!("{x}'"), BIT_PAIR_A);
        b.add(&format!("bg_{x}p"), &format!("{x}'"), "bg", "bg", x, BIT_PAIR_B);
    }
    for a in ["e", "a1"] {
        b.add(&format!("bg_{a}"), a, "bg", "top", &format!("{a}'"), ACC_PAIR_A);
        b.add(&format!("bg_{a}p"), &format!("{a}'"), "bg", "top", a, ACC_PAIR_B);
    }

    // Evaluation column: passes rows, shows the clause value in the LED row
    // and resets the accumulator for the next clause.
    b.add("e_bg", "bg", "e", "e", "bg", E_WIRE);
    b.add("e_v", "v", "e", "e", "v", E_WIRE);
    for x in bits {
        b.add(&format!("e_{x}"), x, "e", "e", x, BIT_E);
    }
    b.add("led_red", "e", "e", "top", "e", RED);
    b.add("led_green", "a1", "e", "top", "e", GREEN);

    // Literal wire columns and the snake.
    b.add("l_bg", "bg", "l", "l", "bg", L_WIRE);
    b.add("snake_start", "v", "l", "u", "se", SNAKE_HEAD);
    b.add("snake_turn", "se", "l", "l", "de", SNAKE_HEAD);
    b.add("snake_down", "de", "l", "l", "de", SNAKE_BODY);
    b.add("snake_up", "v", "u", "u", "v", SNAKE_BODY);
    for x in bits {
        b.add(&format!("l_{x}"), x, "l", "l", x, BIT_L);
        b.add(&format!("lu_{x}"), x, "u", "l", x, BIT_U);
    }
    for a in ["e", "a1"] {
        b.add(&format!("l_{a}"), a, "l", "top", a, ACC_L);
    }

    // Polarity column.
    for x in bits {
        let c = format!("c{x}");
        b.add(&format!("p_bg{x}"), "bg", x, x, "bg", LIT_BG);
        b.add(&format!("p_under{x}"), "de", x, x, "v", LIT_UNDER);
        b.add(&format!("check{x}"), "se", x, &c, "v", CHECK);
        b.add(&format!("uncheck{x}"), "v", &c, x, "v", UNCHECK);
    }
    b.add("lit_pos", "v", "1", "1", "v", POSITIVE);
    b.add("lit_neg", "v", "0", "0", "v", NEGATIVE);
    for bit in bits {
        for x in bits {
            b.add(&format!("cross{bit}{x}"), bit, x, x, bit, CROSS);
        }
    }
    for bit in 0..2u8 {
        for p in 0..2u8 {
            let out = u8::from(bit == p);
            b.add(&format!("xnor{bit}{p}"), &bit.to_string(), &format!("c{p}"), &out.to_string(), &bit.to_string(), XNOR);
        }
    }
    for (acc, aname) in [("e", "e"), ("a1", "a")] {
        for s in bits {
            let out = if acc == "e" && s == "0" { "e" } else { "a1" };
            b.add(&format!("or_{aname}{s}"), acc, s, "top", out, OR);
        }
    }

    // Top row: alternating one/zero under a uniform cap.
    b.add("top_zero", "0", "top", "cap", "1", ZERO);
    b.add("top_one", "1", "top", "cap", "0", ONE);
}

pub fn build_t_eval() -> EvaluatorTileSet {
    let mut b = Builder::new();
    add_evaluator_tiles(&mut b);
    let (tiles, coloring) = b.finish();
    EvaluatorTileSet { tiles: TileSet::new(tiles).expect("distinct ids"), coloring }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::directedness_witness;

    #[test]
    fn profile_is_51_over_27() {
        let t = build_t_eval();
        assert_eq!(t.tiles.len(), 51);
        assert_eq!(t.profile().len(), 27);
        let m = t.multiplicities();
        assert_eq!(m, [(1, 9), (2, 15), (4, 3)].into_iter().collect());
        assert_eq!(directedness_witness(&t.tiles), None);
    }

    #[test]
    fn xnor_and_or_truth_tables() {
        let t = build_t_eval();
        for bit in 0..2 {
            for p in 0..2 {
                let tile = t.tiles.get(&format!("xnor{bit}{p}")).unwrap();
                let expect = if bit == p { "1" } else { "0" };
                assert_eq!(tile.north().as_str(), expect);
                assert_eq!(tile.east().as_str(), bit.to_string());
            }
        }
        let truth = |g: &str| g == "a1";
        for id in ["or_e0", "or_e1", "or_a0", "or_a1"] {
            let tile = t.tiles.get(id).unwrap();
            let a = truth(tile.west().as_str());
            let s = tile.south().as_str() == "1";
            assert_eq!(truth(tile.east().as_str()), a || s, "{id}");
        }
    }

    #[test]
    fn glue_identities() {
        let t = build_t_eval();
        let one = t.tiles.get("top_one").unwrap();
        let zero = t.tiles.get("top_zero").unwrap();
        assert_eq!(one.south(), zero.south());
        assert_ne!(one.west(), zero.west());
        assert_eq!(zero.east(), one.west());
        assert_eq!(one.east(), zero.west());
        let p = t.tiles.get("lit_pos").unwrap();
        let n = t.tiles.get("lit_neg").unwrap();
        assert_eq!(p.west(), n.west());
        assert_eq!(p.north(), p.south());
        assert_eq!(n.north(), n.south());
        assert_ne!(p.north(), n.north());
    }
}
