//! Seed encodings and the evaluator for 3SAT formulas, and the reduction that
//! turns a formula into a pattern plus tile budget.
//!
//! The west arm of the seed carries an assignment: one horizontal variable
//! wire per variable, `2i` rows thick for variable `i`, topped by a row
//! holding the bit. The south arm carries the formula: per clause three
//! literal wires, `2j` columns thick for a literal over variable `j`, each
//! followed by a polarity column, and a final evaluation column. The clause
//! values show up in the LED row just below the top row.

mod formula;
mod gadgets;
mod reduce;
pub mod teval;

use thiserror::Error;

pub use formula::{all_assignments, Clause, CnfFormula, Literal};
pub use gadgets::{aux_color_names, build_gadgets, Gadgets, AUX_COLORS, BAND_HEIGHT};
pub use reduce::{build_t_3sat, reduce, Reduction};
pub use teval::{build_t_eval, EvaluatorTileSet};

use crate::model::{Color, Glue, ModelError, Pattern, SeedSpec};
use crate::sim::{run, unique_pattern, OrderPolicy, Rtas, SimError};
use teval::color;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("formula has no variables")]
    NoVariables,
    #[error("formula has no clauses")]
    NoClauses,
    #[error("literal names variable {var} but the formula has {vars}")]
    VariableOutOfRange { var: usize, vars: usize },
    #[error("assignment has {got} bits, formula has {expected} variables")]
    AssignmentLength { expected: usize, got: usize },
    #[error(transparent)]
    Sim(#[from] SimError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

fn glues<'a>(tokens: &'a [&'a str]) -> impl Iterator<Item = Glue> + 'a {
    tokens.iter().map(|t| Glue::lit(t))
}

/// West-arm glues for assignment `b`, listed from the top row down. With
/// `amended`, every variable wire gets an extra `0` row below it so that
/// each vertical signal meets an even number of crossings.
pub fn encode_assignment(b: &[bool], amended: bool) -> Vec<Glue> {
    let mut out: Vec<Glue> = glues(&["0", "e", "bg", "bg"]).collect();
    for (k, &bit) in b.iter().enumerate() {
        let i = k + 1;
        out.push(Glue::lit(if bit { "1" } else { "0" }));
        out.extend(std::iter::repeat(Glue::lit("v")).take(2 * i));
        if amended {
            out.push(Glue::lit("0"));
        }
        out.extend(glues(&["bg", "bg"]));
    }
    out
}

/// South-arm glues for one clause, west to east.
pub fn encode_clause(c: &Clause) -> Vec<Glue> {
    let mut out = Vec::new();
    for lit in c {
        out.extend(glues(&["bg", "bg"]));
        out.extend(std::iter::repeat(Glue::lit("l")).take(2 * lit.var));
        out.push(Glue::lit(if lit.positive { "1" } else { "0" }));
    }
    out.extend(glues(&["bg", "bg", "e"]));
    out
}

pub fn clause_width(c: &Clause) -> usize {
    12 + 2 * c.iter().map(|l| l.var).sum::<usize>()
}

/// Height of the evaluator for `m` variables.
pub fn evaluator_height(m: usize, amended: bool) -> usize {
    4 + m * (m + 1) + (3 + usize::from(amended)) * m
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseLayout {
    /// Polarity columns of the three literals.
    pub literal_columns: [usize; 3],
    pub e_column: usize,
}

/// Geometry of the evaluator pattern for one formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalLayout {
    pub width: usize,
    pub height: usize,
    pub clauses: Vec<ClauseLayout>,
}

impl EvalLayout {
    pub fn new(phi: &CnfFormula, amended: bool) -> Self {
        let mut x = 0;
        let mut clauses = Vec::new();
        for c in phi.clauses() {
            let mut cols = [0; 3];
            for (k, lit) in c.iter().enumerate() {
                x += 2 + 2 * lit.var + 1;
                cols[k] = x;
            }
            x += 3;
            clauses.push(ClauseLayout { literal_columns: cols, e_column: x });
        }
        EvalLayout { width: x, height: evaluator_height(phi.vars(), amended), clauses }
    }

    pub fn led_row(&self) -> usize {
        self.height - 1
    }

    pub fn led_cells(&self) -> Vec<(usize, usize)> {
        self.clauses.iter().map(|c| (c.e_column, self.led_row())).collect()
    }
}

/// The seed of the evaluator for `phi` under `b`. Every seed cell is `bg`.
pub fn evaluator_seed(phi: &CnfFormula, b: &[bool], amended: bool) -> Result<SeedSpec, ReductionError> {
    phi.check_assignment(b)?;
    let mut east = encode_assignment(b, amended);
    east.reverse();
    let north: Vec<Glue> = phi.clauses().iter().flat_map(encode_clause).collect();
    Ok(SeedSpec::new(north.len(), east.len(), east, north)?)
}

/// The pattern the evaluator assembles for `phi` under `b`.
pub fn build_p_eval_with(phi: &CnfFormula, b: &[bool], amended: bool) -> Result<Pattern, ReductionError> {
    let t = build_t_eval();
    let s = Rtas::new(t.tiles, evaluator_seed(phi, b, amended)?);
    Ok(unique_pattern(&s, &t.coloring)?)
}

pub fn build_p_eval(phi: &CnfFormula, b: &[bool]) -> Result<Pattern, ReductionError> {
    build_p_eval_with(phi, b, true)
}

/// The evaluator pattern with every LED green. Only LED cells depend on the
/// assignment, so any assignment yields the same target.
pub fn build_p_eval_target(phi: &CnfFormula) -> Result<Pattern, ReductionError> {
    let mut p = build_p_eval(phi, &vec![false; phi.vars()])?;
    for (x, y) in EvalLayout::new(phi, true).led_cells() {
        p.set(x, y, color::GREEN);
    }
    Ok(p)
}

/// LED readings: `Some(true)` green, `Some(false)` red, `None` otherwise.
pub fn led_values(p: &Pattern, layout: &EvalLayout) -> Vec<Option<bool>> {
    layout
        .led_cells()
        .into_iter()
        .map(|(x, y)| match p.get(x, y) {
            color::GREEN => Some(true),
            color::RED => Some(false),
            _ => None,
        })
        .collect()
}

/// Per literal column, how many cells belong to a signal crossing.
pub fn crossing_counts(p: &Pattern, layout: &EvalLayout) -> Vec<usize> {
    let is_crossing = |c: Color| c == color::CROSS || c == color::XNOR;
    layout
        .clauses
        .iter()
        .flat_map(|c| c.literal_columns)
        .map(|x| (1..=p.height()).filter(|&y| is_crossing(p.get(x, y))).count())
        .collect()
}

/// True iff the two colors of a background pair only occur side by side.
pub fn pairs_are_adjacent(p: &Pattern) -> bool {
    p.interior_positions().all(|(x, y)| match p.get(x, y) {
        color::BIT_PAIR_A | color::ACC_PAIR_A => {
            x < p.width() && p.get(x + 1, y) == p.get(x, y) + 1
        }
        color::BIT_PAIR_B | color::ACC_PAIR_B => x > 1 && p.get(x - 1, y) + 1 == p.get(x, y),
        _ => true,
    })
}

/// Outcome of checking the evaluator against the truth-table oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub assignments: usize,
    /// `(assignment, clause index)` for every LED that disagrees with the
    /// oracle.
    pub led_mismatches: Vec<(Vec<bool>, usize)>,
    /// Cells outside the LED row that changed with the assignment.
    pub leaked_cells: Vec<(usize, usize)>,
    pub odd_crossings: bool,
    pub split_pairs: bool,
    pub directed: bool,
    /// Random attachment orders reproduced the lexicographic run.
    pub order_independent: bool,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.led_mismatches.is_empty()
            && self.leaked_cells.is_empty()
            && !self.odd_crossings
            && !self.split_pairs
            && self.directed
            && self.order_independent
    }

    /// Assignments on which every LED matched.
    pub fn matches(&self) -> usize {
        let mut bad: Vec<&Vec<bool>> = self.led_mismatches.iter().map(|(b, _)| b).collect();
        bad.dedup();
        self.assignments - bad.len()
    }
}

const ORDER_SAMPLES: u64 = 3;

/// Check the evaluator on the given assignments.
pub fn verify_assignments(
    phi: &CnfFormula,
    assignments: impl IntoIterator<Item = Vec<bool>>,
) -> Result<VerifyReport, ReductionError> {
    let t = build_t_eval();
    let layout = EvalLayout::new(phi, true);
    let leds = layout.led_cells();
    let mut report = VerifyReport {
        assignments: 0,
        led_mismatches: Vec::new(),
        leaked_cells: Vec::new(),
        odd_crossings: false,
        split_pairs: false,
        directed: crate::sim::directedness_witness(&build_t_3sat().0).is_none(),
        order_independent: true,
    };
    let mut first: Option<Pattern> = None;
    for b in assignments {
        let s = Rtas::new(t.tiles.clone(), evaluator_seed(phi, &b, true)?);
        let p = unique_pattern(&s, &t.coloring)?;
        if report.assignments == 0 {
            let reference = run(&s, OrderPolicy::Lexicographic).terminal;
            report.order_independent =
                (0..ORDER_SAMPLES).all(|k| run(&s, OrderPolicy::Random(k)).terminal == reference);
        }
        report.assignments += 1;
        for (k, (got, want)) in led_values(&p, &layout).into_iter().zip(phi.clause_values(&b)).enumerate() {
            if got != Some(want) {
                report.led_mismatches.push((b.clone(), k));
            }
        }
        report.odd_crossings |= crossing_counts(&p, &layout).iter().any(|n| n % 2 == 1);
        report.split_pairs |= !pairs_are_adjacent(&p);
        match &first {
            None => first = Some(p),
            Some(f) => {
                for cell in f.diff(&p) {
                    if !leds.contains(&cell) && !report.leaked_cells.contains(&cell) {
                        report.leaked_cells.push(cell);
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Check the evaluator on all `2^m` assignments.
pub fn verify_reduction(phi: &CnfFormula) -> Result<VerifyReport, ReductionError> {
    verify_assignments(phi, all_assignments(phi.vars()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(g: &[Glue]) -> Vec<&str> {
        g.iter().map(|g| g.as_str()).collect()
    }

    fn clause(lits: [i64; 3]) -> Clause {
        lits.map(|l| if l > 0 { Literal::pos(l as usize) } else { Literal::neg((-l) as usize) })
    }

    #[test]
    fn assignment_encoding() {
        assert_eq!(
            toks(&encode_assignment(&[true], true)),
            ["0", "e", "bg", "bg", "1", "v", "v", "0", "bg", "bg"]
        );
        assert_eq!(toks(&encode_assignment(&[false], false)), ["0", "e", "bg", "bg", "0", "v", "v", "bg", "bg"]);
        for m in 1..5 {
            let b = vec![true; m];
            assert_eq!(encode_assignment(&b, true).len(), evaluator_height(m, true));
            assert_eq!(encode_assignment(&b, false).len(), evaluator_height(m, false));
        }
    }

    #[test]
    fn clause_encoding() {
        let c = clause([1, -2, 1]);
        let g = encode_clause(&c);
        assert_eq!(g.len(), clause_width(&c));
        assert_eq!(
            toks(&g),
            [
                "bg", "bg", "l", "l", "1", "bg", "bg", "l", "l", "l", "l", "0", "bg", "bg", "l", "l", "1", "bg",
                "bg", "e"
            ]
        );
    }

    #[test]
    fn layout_matches_encoding() {
        let phi = CnfFormula::new(3, vec![clause([1, -2, 3]), clause([-3, 2, 2])]).unwrap();
        let l = EvalLayout::new(&phi, true);
        let north: Vec<Glue> = phi.clauses().iter().flat_map(encode_clause).collect();
        assert_eq!(l.width, north.len());
        for c in &l.clauses {
            assert_eq!(north[c.e_column - 1].as_str(), "e");
            for x in c.literal_columns {
                assert!(matches!(north[x - 1].as_str(), "0" | "1"));
            }
        }
    }

    #[test]
    fn single_clause_leds() {
        let phi = CnfFormula::new(3, vec![clause([1, -2, 3])]).unwrap();
        let l = EvalLayout::new(&phi, true);
        for b in all_assignments(3) {
            let p = build_p_eval(&phi, &b).unwrap();
            assert_eq!(led_values(&p, &l), vec![Some(phi.eval(&b))], "{b:?}");
        }
    }

    #[test]
    fn unamended_crossings_are_odd_for_odd_m() {
        let phi = CnfFormula::new(1, vec![clause([1, 1, -1])]).unwrap();
        let l = EvalLayout::new(&phi, false);
        let p = build_p_eval_with(&phi, &[true], false).unwrap();
        assert!(crossing_counts(&p, &l).iter().all(|n| n % 2 == 1));
        let p = build_p_eval(&phi, &[true]).unwrap();
        let l = EvalLayout::new(&phi, true);
        assert!(crossing_counts(&p, &l).iter().all(|n| n % 2 == 0));
    }

    #[test]
    fn target_is_all_green() {
        let phi = CnfFormula::new(2, vec![clause([1, 1, 1]), clause([-1, -1, 2])]).unwrap();
        let t = build_p_eval_target(&phi).unwrap();
        let l = EvalLayout::new(&phi, true);
        assert_eq!(led_values(&t, &l), vec![Some(true); 2]);
        assert_eq!(build_p_eval(&phi, &[true, true]).unwrap(), t);
        assert_ne!(build_p_eval(&phi, &[true, false]).unwrap(), t);
    }

    #[test]
    fn verify_small_formula() {
        let phi = CnfFormula::new(3, vec![clause([1, -2, 3]), clause([-1, 2, -3]), clause([2, 3, 3])]).unwrap();
        let r = verify_reduction(&phi).unwrap();
        assert_eq!(r.assignments, 8);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.matches(), 8);
    }

    #[test]
    fn circuit_example_green_then_red() {
        let phi = CnfFormula::new(4, vec![clause([4, 3, 2]), clause([4, -3, 1])]).unwrap();
        let b = [false, true, true, false];
        let p = build_p_eval(&phi, &b).unwrap();
        assert_eq!(led_values(&p, &EvalLayout::new(&phi, true)), vec![Some(true), Some(false)]);
        let r = verify_assignments(&phi, [b.to_vec()]).unwrap();
        assert!(r.ok(), "{r:?}");
    }
}
