//! The reduction from 3SAT: a formula becomes a pattern and a tile budget.
//!
//! The pattern is the evaluator of a completed formula with every LED green,
//! with the gadget band on top. Completion pads the formula to at least two
//! variables and appends two catalog clauses. The first, `v1 or not v1 or
//! d`, makes both visible crossings and the release of a checked literal
//! appear. The second uses only `d`, a literal over a variable one past the
//! last; no wire substitutes it, so its LED is always red. Together they
//! make every color of the tile set occur whatever the input formula is.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::model::{Color, Coloring, Pattern, SeedSpec, TileSet};
use crate::sim::Rtas;

use super::gadgets::{add_aux_tiles, band_color, band_glues, BAND_HEIGHT};
use super::teval::{add_evaluator_tiles, color, Builder};
use super::{build_p_eval, clause_width, evaluator_seed, CnfFormula, EvalLayout, Literal, ReductionError};

/// The evaluator tiles plus one tile per auxiliary color.
pub fn build_t_3sat() -> (TileSet, Coloring) {
    let mut b = Builder::new();
    add_evaluator_tiles(&mut b);
    add_aux_tiles(&mut b);
    let (tiles, coloring) = b.finish();
    (TileSet::new(tiles).expect("distinct ids"), coloring)
}

fn complete(phi: &CnfFormula) -> CnfFormula {
    let m = phi.vars().max(2);
    let d = Literal::neg(m + 1);
    let mut clauses = phi.clauses().to_vec();
    clauses.push([Literal::pos(1), Literal::neg(1), d]);
    clauses.push([d; 3]);
    CnfFormula::unchecked(m, clauses)
}

#[derive(Debug, Clone)]
pub struct Reduction {
    pub formula: CnfFormula,
    /// The formula actually laid out, catalog clauses included.
    pub completed: CnfFormula,
    pub tiles: TileSet,
    pub coloring: Coloring,
    pub pattern: Pattern,
    /// A satisfying assignment of `formula` padded to `completed`, or all
    /// zeros when there is none.
    pub assignment: Vec<bool>,
    pub eval_height: usize,
}

impl Reduction {
    /// Tile budget: the size of the intended tile set.
    pub fn budget(&self) -> usize {
        self.tiles.len()
    }

    pub fn colors(&self) -> usize {
        self.pattern.color_set().len()
    }

    /// Seed for the whole pattern with the assignment `b` (over the padded
    /// variables) on the west arm.
    pub fn seed_for(&self, b: &[bool]) -> Result<SeedSpec, ReductionError> {
        let s = evaluator_seed(&self.completed, b, true)?;
        let mut east = s.east_glues().to_vec();
        east.extend(band_glues());
        Ok(SeedSpec::new(s.width(), east.len(), east, s.north_glues().to_vec())?)
    }

    pub fn system(&self) -> Result<Rtas, ReductionError> {
        Ok(Rtas::new(self.tiles.clone(), self.seed_for(&self.assignment)?))
    }

    pub fn types_per_color(&self) -> BTreeMap<Color, usize> {
        let mut out = BTreeMap::new();
        for (_, c) in self.coloring.iter() {
            *out.entry(c).or_insert(0) += 1;
        }
        out
    }

    /// Plain-text description of the instance.
    pub fn manifest(&self) -> String {
        let mut mult: BTreeMap<usize, usize> = BTreeMap::new();
        for k in self.types_per_color().into_values() {
            *mult.entry(k).or_insert(0) += 1;
        }
        let nc = self.colors();
        let n = self.budget();
        let widths: Vec<String> = self.completed.clauses().iter().map(|c| clause_width(c).to_string()).collect();
        let m = self.completed.vars();
        let mut s = String::new();
        let _ = writeln!(s, "PATS-REDUCTION 1");
        let _ = writeln!(s, "variables {} clauses {}", self.formula.vars(), self.formula.clauses().len());
        let _ = writeln!(s, "padded-variables {m} catalog-clauses 2");
        let _ = writeln!(s, "width {} height {}", self.pattern.width(), self.pattern.height());
        let _ = writeln!(s, "width-formula sum(12 + 2*(i+j+k)) = {} = {}", widths.join(" + "), self.pattern.width());
        let _ = writeln!(
            s,
            "height-formula 4 + m(m+1) + 4m + {BAND_HEIGHT} = 4 + {} + {} + {BAND_HEIGHT} = {}",
            m * (m + 1),
            4 * m,
            self.pattern.height()
        );
        let _ = writeln!(s, "colors {nc}");
        let _ = writeln!(s, "budget {n}");
        let _ = writeln!(s, "budget-identity {n} = {nc} + {}", n as i64 - nc as i64);
        let profile: Vec<String> = mult.iter().rev().map(|(k, c)| format!("{k}x{c}")).collect();
        let _ = writeln!(s, "types-per-color {}", profile.join(" "));
        s
    }
}

pub fn reduce(phi: &CnfFormula) -> Result<Reduction, ReductionError> {
    let completed = complete(phi);
    let mut assignment = phi.satisfying_assignment().unwrap_or_else(|| vec![false; phi.vars()]);
    assignment.resize(completed.vars(), false);
    let mut eval = build_p_eval(&completed, &assignment)?;
    let layout = EvalLayout::new(&completed, true);
    for &cell in layout.led_cells().iter().take(phi.clauses().len()) {
        eval.set(cell.0, cell.1, color::GREEN);
    }
    let h = eval.height();
    let pattern = Pattern::from_fn(eval.width(), h + BAND_HEIGHT, |x, y| {
        if y <= h {
            eval.get(x, y)
        } else if x == 0 {
            color::BG
        } else {
            band_color(y - h - 1, x)
        }
    });
    let (tiles, coloring) = build_t_3sat();
    Ok(Reduction { formula: phi.clone(), completed, tiles, coloring, pattern, assignment, eval_height: h })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduction::all_assignments;
    use crate::sim::{directedness_witness, unique_pattern};

    fn clause(lits: [i64; 3]) -> [Literal; 3] {
        lits.map(|l| if l > 0 { Literal::pos(l as usize) } else { Literal::neg((-l) as usize) })
    }

    #[test]
    fn tile_set_profile() {
        let (tiles, coloring) = build_t_3sat();
        assert_eq!(tiles.len(), 83);
        assert_eq!(coloring.range().len(), 59);
        assert_eq!(directedness_witness(&tiles), None);
    }

    #[test]
    fn budget_identity() {
        let phi = CnfFormula::new(1, vec![clause([1, 1, 1])]).unwrap();
        let r = reduce(&phi).unwrap();
        assert_eq!(r.colors(), 59);
        assert_eq!(r.budget(), r.colors() + 24);
        assert!(r.manifest().contains("budget-identity 83 = 59 + 24"));
    }

    #[test]
    fn satisfiable_formula_assembles_its_pattern() {
        let phi = CnfFormula::new(2, vec![clause([1, -2, 2]), clause([-1, -1, 2])]).unwrap();
        let r = reduce(&phi).unwrap();
        let s = r.system().unwrap();
        assert_eq!(unique_pattern(&s, &r.coloring).unwrap(), r.pattern);
    }

    #[test]
    fn unsatisfiable_formula_never_matches() {
        let phi = CnfFormula::new(1, vec![clause([1, 1, 1]), clause([-1, -1, -1])]).unwrap();
        let r = reduce(&phi).unwrap();
        for b in all_assignments(r.completed.vars()) {
            let s = Rtas::new(r.tiles.clone(), r.seed_for(&b).unwrap());
            assert_ne!(unique_pattern(&s, &r.coloring).unwrap(), r.pattern);
        }
    }
}
