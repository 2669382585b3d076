//! Pattern-side lower bounds on the number of tile types per color.
//!
//! Every detector only looks at interior cells (`x >= 1`, `y >= 1`): seed
//! tiles are free to present any glue, so a forcing argument must not rely on
//! a seed cell being drawn by a tile type of the counted set.

mod mosaic;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::model::{Color, Dir, Pattern};

pub use mosaic::{mosaic_pattern, MosaicColors, MosaicError};

pub type Cell = (usize, usize);

/// Two cells whose west and south neighbors all carry `color` while the cells
/// themselves differ in color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lemma1Witness {
    pub color: Color,
    pub first: Cell,
    pub second: Cell,
}

/// A cell whose two west and two south cells carry `color` while the cell
/// itself does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lemma3Witness {
    pub color: Color,
    pub pos: Cell,
}

fn interior_color(p: &Pattern, x: usize, y: usize) -> Option<Color> {
    (x >= 1 && y >= 1 && x <= p.width() && y <= p.height()).then(|| p.get(x, y))
}

/// The common color of the west and south neighbors of `(x, y)`, if both are
/// interior and agree.
fn cooperating_color(p: &Pattern, x: usize, y: usize) -> Option<Color> {
    let w = interior_color(p, x.checked_sub(1)?, y)?;
    let s = interior_color(p, x, y.checked_sub(1)?)?;
    (w == s).then_some(w)
}

/// Interior cells grouped by (input color, own color).
fn input_groups(p: &Pattern) -> BTreeMap<Color, BTreeMap<Color, Vec<Cell>>> {
    let mut groups: BTreeMap<Color, BTreeMap<Color, Vec<Cell>>> = BTreeMap::new();
    for (x, y) in p.interior_positions() {
        if let Some(i) = cooperating_color(p, x, y) {
            groups.entry(i).or_default().entry(p.get(x, y)).or_default().push((x, y));
        }
    }
    groups
}

/// All pairs of cells witnessing that `color` needs two tile types. Each pair
/// is listed once with `first < second` in (y, x) order.
pub fn detect_lemma1(p: &Pattern) -> Vec<Lemma1Witness> {
    let mut out = Vec::new();
    for (color, by_target) in input_groups(p) {
        let cells: Vec<(Cell, Color)> =
            by_target.iter().flat_map(|(&t, cs)| cs.iter().map(move |&c| (c, t))).collect();
        for (a, &(c1, t1)) in cells.iter().enumerate() {
            for &(c2, t2) in &cells[a + 1..] {
                if t1 != t2 {
                    let (first, second) = if (c1.1, c1.0) < (c2.1, c2.0) { (c1, c2) } else { (c2, c1) };
                    out.push(Lemma1Witness { color, first, second });
                }
            }
        }
    }
    out.sort();
    out
}

pub fn detect_lemma3(p: &Pattern) -> Vec<Lemma3Witness> {
    let mut out = Vec::new();
    for (x, y) in p.interior_positions() {
        if x < 3 || y < 3 {
            continue;
        }
        let i = p.get(x - 1, y);
        let run = [p.get(x - 2, y), p.get(x, y - 1), p.get(x, y - 2)];
        if run.iter().all(|&c| c == i) && p.get(x, y) != i {
            out.push(Lemma3Witness { color: i, pos: (x, y) });
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundWitness {
    Lemma1(Cell, Cell),
    Lemma3(Cell),
}

impl fmt::Display for BoundWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundWitness::Lemma1(a, b) => write!(f, "lemma1 ({},{}) ({},{})", a.0, a.1, b.0, b.1),
            BoundWitness::Lemma3(a) => write!(f, "lemma3 ({},{})", a.0, a.1),
        }
    }
}

/// Per-color lower bounds, each above 1 backed by a witness.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColorBound {
    bounds: BTreeMap<Color, usize>,
    witnesses: BTreeMap<Color, BoundWitness>,
}

impl ColorBound {
    pub fn get(&self, color: Color) -> usize {
        self.bounds.get(&color).copied().unwrap_or(0)
    }

    pub fn witness(&self, color: Color) -> Option<&BoundWitness> {
        self.witnesses.get(&color)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Color, usize)> + '_ {
        self.bounds.iter().map(|(&c, &k)| (c, k))
    }

    /// Sum of the bounds over the given colors: a lower bound on the whole set.
    pub fn total_over(&self, colors: &BTreeSet<Color>) -> usize {
        colors.iter().map(|&c| self.get(c).max(1)).sum()
    }

    /// One line per color: `color <id> min <k> witness <lemma> <positions>`.
    pub fn report(&self) -> String {
        let mut s = String::new();
        for (c, k) in self.iter() {
            match self.witness(c) {
                Some(w) => s.push_str(&format!("color {c} min {k} witness {w}\n")),
                None => s.push_str(&format!("color {c} min {k} witness none\n")),
            }
        }
        s
    }
}

/// Bounds for every color of the pattern. Interior colors start at 1; colors
/// that only occur on the seed get 0 since no tile type has to draw them.
pub fn color_lower_bounds(p: &Pattern) -> ColorBound {
    let mut cb = ColorBound::default();
    let interior = p.interior_colors();
    for c in p.color_set() {
        cb.bounds.insert(c, usize::from(interior.contains(&c)));
    }
    for (color, by_target) in input_groups(p) {
        if by_target.len() >= 2 {
            let mut heads = by_target.values().map(|cs| cs[0]);
            let (a, b) = (heads.next().unwrap(), heads.next().unwrap());
            cb.bounds.insert(color, 2);
            cb.witnesses.insert(color, BoundWitness::Lemma1(a, b));
        }
    }
    for w in detect_lemma3(p) {
        if cb.get(w.color) < 2 {
            cb.bounds.insert(w.color, 2);
            cb.witnesses.insert(w.color, BoundWitness::Lemma3(w.pos));
        }
    }
    cb
}

/// A glue of the (assumed unique) tile type of a color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GlueRef {
    pub color: Color,
    pub dir: Dir,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GlueRelation {
    Equal(GlueRef, GlueRef),
    Distinct(GlueRef, GlueRef),
}

/// Consequences of two 2x2 squares sharing a west color whose east columns
/// are two distinct colors stacked in tandem. They hold whenever each of the
/// three colors is drawn by exactly one tile type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TandemConstraint {
    pub gray: Color,
    pub blue: Color,
    pub orange: Color,
    /// South-west corners of the two squares.
    pub squares: (Cell, Cell),
    pub relations: Vec<GlueRelation>,
}

pub fn tandem_glue_constraints(p: &Pattern) -> Vec<TandemConstraint> {
    // West color -> east color -> first square found.
    let mut squares: BTreeMap<Color, BTreeMap<Color, Cell>> = BTreeMap::new();
    for (x, y) in p.interior_positions() {
        if x >= p.width() || y >= p.height() {
            continue;
        }
        let g = p.get(x, y);
        let c = p.get(x + 1, y);
        if p.get(x, y + 1) == g && p.get(x + 1, y + 1) == c {
            squares.entry(g).or_default().entry(c).or_insert((x, y));
        }
    }
    let mut out = Vec::new();
    for (&gray, east) in &squares {
        let east: Vec<(Color, Cell)> = east.iter().map(|(&c, &s)| (c, s)).collect();
        for (a, &(blue, sb)) in east.iter().enumerate() {
            for &(orange, so) in &east[a + 1..] {
                let r = |color, dir| GlueRef { color, dir };
                out.push(TandemConstraint {
                    gray,
                    blue,
                    orange,
                    squares: (sb, so),
                    relations: vec![
                        GlueRelation::Equal(r(gray, Dir::E), r(blue, Dir::W)),
                        GlueRelation::Equal(r(blue, Dir::W), r(orange, Dir::W)),
                        GlueRelation::Distinct(r(blue, Dir::S), r(orange, Dir::S)),
                        GlueRelation::Equal(r(blue, Dir::N), r(blue, Dir::S)),
                        GlueRelation::Equal(r(orange, Dir::N), r(orange, Dir::S)),
                    ],
                });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::systems::{binary_counter, BLUE, ORANGE};
    use crate::sim::unique_pattern;

    const B: Color = 0;
    const O: Color = 1;
    const G: Color = 2;

    /// Rows listed north first; the south row and west column are seed cells.
    pub(crate) fn pattern(rows: &[&[Color]]) -> Pattern {
        let h = rows.len() - 1;
        let w = rows[0].len() - 1;
        Pattern::from_fn(w, h, |x, y| rows[h - y][x])
    }

    /// Two blue L-contexts with differing targets, and two orange ones.
    fn lemma2_pattern() -> Pattern {
        pattern(&[
            &[G, B, O, B, O],
            &[G, B, B, O, O],
            &[G, B, B, O, O],
            &[G, G, G, G, G],
        ])
    }

    #[test]
    fn lemma1_on_blue_orange_subpattern() {
        let p = lemma2_pattern();
        let colors: BTreeSet<Color> = detect_lemma1(&p).iter().map(|w| w.color).collect();
        assert_eq!(colors, [B, O].into_iter().collect());
        let cb = color_lower_bounds(&p);
        assert_eq!((cb.get(B), cb.get(O)), (2, 2));
    }

    #[test]
    fn lemma1_on_trivial_patterns() {
        assert!(detect_lemma1(&Pattern::uniform(4, 4, 3)).is_empty());
        let checker = Pattern::from_fn(5, 5, |x, y| ((x + y) % 2) as Color);
        assert!(detect_lemma1(&checker).is_empty());
    }

    #[test]
    fn lemma1_ignores_seed_neighbors() {
        // The only differing contexts use seed cells as inputs.
        let p = pattern(&[&[B, O], &[B, B]]);
        assert!(detect_lemma1(&p).is_empty());
    }

    #[test]
    fn lemma3_on_blue_l() {
        let p = pattern(&[
            &[G, B, B, O],
            &[G, G, G, B],
            &[G, G, G, B],
            &[G, G, G, G],
        ]);
        assert_eq!(detect_lemma3(&p), vec![Lemma3Witness { color: B, pos: (3, 3) }]);
        assert_eq!(color_lower_bounds(&p).get(B), 2);
        // Same-colored target: nothing to report.
        let q = pattern(&[
            &[G, B, B, B],
            &[G, G, G, B],
            &[G, G, G, B],
            &[G, G, G, G],
        ]);
        assert!(detect_lemma3(&q).is_empty());
        assert!(detect_lemma3(&Pattern::uniform(5, 5, 1)).is_empty());
    }

    #[test]
    fn counter_prefix_needs_two_blue_types() {
        let (s, f) = binary_counter(6, 6);
        let p = unique_pattern(&s, &f).unwrap();
        let cb = color_lower_bounds(&p);
        assert_eq!(cb.get(BLUE), 2);
        assert!(cb.get(ORANGE) >= 1);
        assert!(detect_lemma1(&p).iter().any(|w| w.color == BLUE));
    }

    #[test]
    fn uniform_bounds_are_one() {
        let cb = color_lower_bounds(&Pattern::uniform(3, 3, 4));
        assert_eq!(cb.iter().collect::<Vec<_>>(), vec![(4, 1)]);
        assert_eq!(cb.report(), "color 4 min 1 witness none\n");
    }

    #[test]
    fn report_lines() {
        let p = pattern(&[
            &[G, B, B, O],
            &[G, G, G, B],
            &[G, G, G, B],
            &[G, G, G, G],
        ]);
        let r = color_lower_bounds(&p).report();
        assert!(r.contains("color 0 min 2 witness lemma3 (3,3)\n"), "{r}");
    }

    fn tandem_pattern(blue: Color, orange: Color) -> Pattern {
        pattern(&[
            &[G, G, blue, G, orange],
            &[G, G, blue, G, orange],
            &[G, G, G, G, G],
        ])
    }

    #[test]
    fn tandem_squares() {
        let cs = tandem_glue_constraints(&tandem_pattern(B, O));
        let pair: Vec<_> = cs.iter().filter(|c| c.gray == G).map(|c| (c.blue, c.orange)).collect();
        assert_eq!(pair, vec![(B, O)]);
        let c = cs.iter().find(|c| c.gray == G).unwrap();
        let r = |color, dir| GlueRef { color, dir };
        assert!(c.relations.contains(&GlueRelation::Distinct(r(B, Dir::S), r(O, Dir::S))));
        assert!(c.relations.contains(&GlueRelation::Equal(r(G, Dir::E), r(B, Dir::W))));
        assert!(c.relations.contains(&GlueRelation::Equal(r(B, Dir::N), r(B, Dir::S))));
    }

    #[test]
    fn tandem_needs_distinct_colors() {
        assert!(tandem_glue_constraints(&tandem_pattern(B, B)).iter().all(|c| c.gray != G));
        assert!(tandem_glue_constraints(&Pattern::uniform(4, 4, 0)).is_empty());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_pattern() -> impl Strategy<Value = Pattern> {
            (1usize..5, 1usize..5).prop_flat_map(|(w, h)| {
                proptest::collection::vec(0u32..3, (w + 1) * (h + 1))
                    .prop_map(move |cells| Pattern::new(w, h, cells).unwrap())
            })
        }

        proptest! {
            #[test]
            fn detectors_commute_with_renaming(p in small_pattern(), shift in 1u32..5) {
                let map: BTreeMap<Color, Color> = (0..3).map(|c| (c, (c + shift) % 3 + 10)).collect();
                let q = p.recolor(&map);
                let mut l1: Vec<_> = detect_lemma1(&p)
                    .into_iter()
                    .map(|w| Lemma1Witness { color: map[&w.color], ..w })
                    .collect();
                l1.sort();
                prop_assert_eq!(l1, detect_lemma1(&q));
                let l3: Vec<_> = detect_lemma3(&p)
                    .into_iter()
                    .map(|w| Lemma3Witness { color: map[&w.color], ..w })
                    .collect();
                prop_assert_eq!(l3, detect_lemma3(&q));
            }
        }
    }
}
