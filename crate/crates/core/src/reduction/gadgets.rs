//! Gadget patterns built from auxiliary single-type colors.
//!
//! Each gadget is a stack of full-width rows above the evaluator. Stripe rows
//! cycle through a family of auxiliary colors along diagonals, as in the
//! mosaic; carrier rows move one bit across background pairs. Every stripe
//! tile reads `bg` from the south and shows `bg` to the north, so gadgets
//! stack freely on one another and on the border row, which caps the
//! evaluator's top row.

use crate::model::{Color, Glue, Pattern};

use super::teval::{color, Builder};

/// A cyclic family of auxiliary colors.
struct Family {
    prefix: &'static str,
    first: Color,
    len: usize,
}

const FAMILIES: [Family; 5] = [
    Family { prefix: "a", first: 27, len: 8 },
    Family { prefix: "s", first: 35, len: 3 },
    Family { prefix: "ab", first: 38, len: 3 },
    Family { prefix: "b", first: 41, len: 10 },
    Family { prefix: "d", first: 51, len: 7 },
];

const FAM_A: usize = 0;
const FAM_SEAL: usize = 1;
const FAM_AB: usize = 2;
const FAM_B: usize = 3;
const FAM_D: usize = 4;

pub const BORDER: Color = 58;
pub const AUX_COLORS: usize = 32;

impl Family {
    fn glue(&self, c: usize) -> String {
        format!("g{}{}", self.prefix, c % self.len)
    }

    fn tile_id(&self, c: usize) -> String {
        format!("aux_{}{}", self.prefix, c + 1)
    }
}

/// Names of auxiliary colors, indexed from color 27.
pub fn aux_color_names() -> Vec<String> {
    let mut out = Vec::new();
    for (f, name) in FAMILIES.iter().zip(["A", "A", "AB", "B", "D"]) {
        let offset = if f.prefix == "s" { 8 } else { 0 };
        for c in 0..f.len {
            out.push(format!("{name}{}", c + 1 + offset));
        }
    }
    out.push("C-bg".to_string());
    out
}

pub(crate) fn add_aux_tiles(b: &mut Builder) {
    b.add("aux_border", "cb", "cap", "bg", "cb", BORDER);
    for f in &FAMILIES {
        for c in 0..f.len {
            b.add(&f.tile_id(c), &f.glue(c + f.len - 1), "bg", "bg", &f.glue(c), f.first + c as Color);
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Row {
    Border,
    Stripe(usize, usize),
    Carrier(bool),
}

impl Row {
    fn glue(self) -> Glue {
        match self {
            Row::Border => Glue::lit("cb"),
            Row::Stripe(f, phase) => Glue::lit(&FAMILIES[f].glue(phase)),
            Row::Carrier(bit) => Glue::lit(if bit { "1" } else { "0" }),
        }
    }

    fn color(self, x: usize) -> Color {
        match self {
            Row::Border => BORDER,
            Row::Stripe(f, phase) => {
                let fam = &FAMILIES[f];
                fam.first + ((x + phase) % fam.len) as Color
            }
            Row::Carrier(_) if x % 2 == 1 => color::BIT_PAIR_A,
            Row::Carrier(_) => color::BIT_PAIR_B,
        }
    }
}

fn stripes(f: usize) -> impl Iterator<Item = Row> {
    (0..FAMILIES[f].len).map(move |r| Row::Stripe(f, r))
}

fn gadget_d() -> Vec<Row> {
    let mut rows = vec![Row::Border];
    rows.extend(stripes(FAM_D));
    rows.push(Row::Carrier(false));
    rows
}

fn gadget_b() -> Vec<Row> {
    let mut rows: Vec<Row> = stripes(FAM_B).collect();
    rows.push(Row::Carrier(true));
    rows
}

fn gadget_a() -> Vec<Row> {
    let mut rows: Vec<Row> = stripes(FAM_A).collect();
    rows.push(Row::Carrier(false));
    rows.push(Row::Stripe(FAM_SEAL, 0));
    rows.push(Row::Stripe(FAM_AB, 0));
    rows
}

fn band_rows() -> Vec<Row> {
    let mut rows = gadget_d();
    rows.extend(gadget_b());
    rows.extend(gadget_a());
    rows
}

pub const BAND_HEIGHT: usize = 31;

/// West-arm glues of the band, bottom row first.
pub(crate) fn band_glues() -> Vec<Glue> {
    band_rows().into_iter().map(Row::glue).collect()
}

/// Colors of band row `r` (0 = bottom) at interior column `x`.
pub(crate) fn band_color(r: usize, x: usize) -> Color {
    band_rows()[r].color(x)
}

fn render(rows: &[Row], width: usize) -> Pattern {
    Pattern::from_fn(width, rows.len(), |x, y| if x == 0 || y == 0 { color::BG } else { rows[y - 1].color(x) })
}

/// The three gadget patterns at a given width, each with a `bg` seed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gadgets {
    pub a: Pattern,
    pub b: Pattern,
    pub d: Pattern,
}

pub fn build_gadgets(width: usize) -> Gadgets {
    assert!(width >= 10, "gadgets need at least one full stripe cycle");
    Gadgets { a: render(&gadget_a(), width), b: render(&gadget_b(), width), d: render(&gadget_d(), width) }
}
