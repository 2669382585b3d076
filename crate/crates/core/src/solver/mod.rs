//! Exact c-PATS solving by branch and bound over partitions of the interior
//! positions into tile-type classes.
//!
//! Positions are placed in rectilinear order (the west and south neighbors
//! are always placed first), most constrained position first. A position is
//! either forced into the class whose (west, south) glues match its inputs,
//! or branches over the compatible classes of its color plus a fresh class.
//! Per-color lower bounds from [`crate::analysis`] prune the budget.

mod state;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::analysis::{color_lower_bounds, tandem_glue_constraints, ColorBound, GlueRelation, TandemConstraint};
use crate::model::{Color, Coloring, Dir, Glue, Pattern, Pos, SeedSpec, TileSet, TileType};
use crate::sim::{unique_pattern, Rtas};

pub use state::{Checkpoint, Contradiction, PartitionState, Side};

pub const DEFAULT_MAX_INTERIOR: usize = 25;
pub const LIMIT_ENV: &str = "PATS_SOLVER_LIMIT";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("pattern interior has {cells} cells, above the solver limit of {limit}")]
    SizeLimitExceeded { cells: usize, limit: usize },
    #[error("witness failed verification: {0}")]
    Verification(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    pub max_interior: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { max_interior: DEFAULT_MAX_INTERIOR }
    }
}

impl SolverConfig {
    /// Default limits, overridden by `PATS_SOLVER_LIMIT` when it parses.
    pub fn from_env() -> Self {
        let max_interior = std::env::var(LIMIT_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MAX_INTERIOR);
        SolverConfig { max_interior }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatsInstance {
    pub pattern: Pattern,
    pub budget: usize,
}

/// A tile set found by the search, already checked by simulation.
#[derive(Debug, Clone)]
pub struct Solution {
    pub rtas: Rtas,
    pub coloring: Coloring,
    /// Class index of every interior cell, row-major from (1, 1).
    pub partition: Vec<usize>,
}

impl Solution {
    pub fn tile_count(&self) -> usize {
        self.rtas.tiles().len()
    }

    pub fn types_per_color(&self) -> BTreeMap<Color, usize> {
        let mut out = BTreeMap::new();
        for t in self.rtas.tiles().types() {
            *out.entry(self.coloring.get(&t.id).expect("colored tile")).or_insert(0) += 1;
        }
        out
    }
}

#[derive(Debug, Clone)]
pub enum Decision {
    Yes(Box<Solution>),
    No,
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes(_))
    }
}

#[derive(Debug, Clone)]
pub struct MinResult {
    pub min: usize,
    pub solution: Solution,
}

/// Sum of the per-color bounds over the colors that tile types must draw.
pub fn global_lower_bound(p: &Pattern, bounds: &ColorBound) -> usize {
    bounds.total_over(&p.interior_colors())
}

struct Search<'a> {
    pattern: &'a Pattern,
    budget: usize,
    bounds: &'a ColorBound,
    tandem: &'a [TandemConstraint],
    colors: Vec<Color>,
    limit: usize,
    found: Vec<Vec<usize>>,
    witness: Option<PartitionState>,
}

/// Propagate forced placements to a fixpoint and check the budget and the
/// tandem constraints. The caller rolls back on contradiction.
pub fn propagate(
    state: &mut PartitionState,
    budget: usize,
    bounds: &ColorBound,
    tandem: &[TandemConstraint],
) -> Result<(), Contradiction> {
    let colors: Vec<Color> = (0..state.cells()).map(|c| state.color(c)).collect::<BTreeSet<_>>().into_iter().collect();
    loop {
        if needed(state, &colors, bounds) > budget {
            return Err(Contradiction);
        }
        apply_tandem(state, budget, &colors, bounds, tandem)?;
        let mut progressed = false;
        for cell in state.frontier() {
            if let Some(c) = state.forced_class(cell) {
                state.place(cell, Some(c))?;
                progressed = true;
            }
        }
        if !progressed {
            return Ok(());
        }
    }
}

/// Lower bound on the final class count given the classes opened so far.
fn needed(state: &PartitionState, colors: &[Color], bounds: &ColorBound) -> usize {
    colors.iter().map(|&c| state.classes_of_color(c).max(bounds.get(c)).max(1)).sum()
}

fn apply_tandem(
    state: &mut PartitionState,
    budget: usize,
    colors: &[Color],
    bounds: &ColorBound,
    tandem: &[TandemConstraint],
) -> Result<(), Contradiction> {
    if tandem.is_empty() {
        return Ok(());
    }
    let slack = budget - needed(state, colors, bounds);
    // A color is pinned to one class when it has one and no slack remains to
    // open another.
    let pinned = |s: &PartitionState, c: Color| -> Option<usize> {
        (s.classes_of_color(c) == 1 && slack == 0)
            .then(|| (0..s.class_count()).find(|&k| s.class_color(k) == c))
            .flatten()
    };
    for t in tandem {
        let (Some(_), Some(_), Some(_)) = (pinned(state, t.gray), pinned(state, t.blue), pinned(state, t.orange))
        else {
            continue;
        };
        let var = |s: &PartitionState, g: &crate::analysis::GlueRef| {
            let class = pinned(s, g.color).expect("pinned color");
            s.class_var(class, side(g.dir))
        };
        for rel in &t.relations {
            match rel {
                GlueRelation::Equal(a, b) => {
                    let (va, vb) = (var(state, a), var(state, b));
                    state.union(va, vb);
                }
                GlueRelation::Distinct(a, b) => {
                    if state.root(var(state, a)) == state.root(var(state, b)) {
                        return Err(Contradiction);
                    }
                }
            }
        }
        if state.has_collision() {
            return Err(Contradiction);
        }
    }
    Ok(())
}

fn side(d: Dir) -> Side {
    match d {
        Dir::N => Side::N,
        Dir::W => Side::W,
        Dir::S => Side::S,
        Dir::E => Side::E,
    }
}

impl<'a> Search<'a> {
    fn candidates(&self, state: &mut PartitionState, cell: usize) -> Vec<Option<usize>> {
        let color = state.color(cell);
        let mut out = Vec::new();
        for c in 0..state.class_count() {
            if state.class_color(c) != color {
                continue;
            }
            let cp = state.checkpoint();
            if state.place(cell, Some(c)).is_ok() {
                out.push(Some(c));
                state.rollback(cp);
            }
        }
        let opened = state.classes_of_color(color) + 1;
        let grows = opened > self.bounds.get(color).max(1);
        if state.class_count() < self.budget && (!grows || needed(state, &self.colors, self.bounds) < self.budget) {
            out.push(None);
        }
        out
    }

    fn dfs(&mut self, state: &mut PartitionState) {
        if self.found.len() >= self.limit {
            return;
        }
        let cp = state.checkpoint();
        if propagate(state, self.budget, self.bounds, self.tandem).is_err() {
            state.rollback(cp);
            return;
        }
        if state.is_complete() {
            if self.witness.is_none() {
                self.witness = Some(state.clone());
            }
            self.found.push(state.partition());
            state.rollback(cp);
            return;
        }
        let mut best: Option<(usize, Vec<Option<usize>>)> = None;
        for cell in state.frontier() {
            let cands = self.candidates(state, cell);
            let better = match &best {
                None => true,
                Some((_, b)) => cands.len() < b.len(),
            };
            if better {
                let empty = cands.is_empty();
                best = Some((cell, cands));
                if empty {
                    break;
                }
            }
        }
        // Frontier cells come in (y, x) order, so ties keep the least one.
        let (cell, cands) = best.expect("incomplete state has a frontier");
        for c in cands {
            let inner = state.checkpoint();
            if state.place(cell, c).is_ok() {
                self.dfs(state);
                state.rollback(inner);
            }
            if self.found.len() >= self.limit {
                break;
            }
        }
        state.rollback(cp);
    }
}

fn check_size(p: &Pattern, config: &SolverConfig) -> Result<(), SolveError> {
    if p.interior_len() > config.max_interior {
        return Err(SolveError::SizeLimitExceeded { cells: p.interior_len(), limit: config.max_interior });
    }
    Ok(())
}

/// Run the search with the given budget, stopping after `limit` solutions.
fn search(p: &Pattern, budget: usize, limit: usize) -> (Vec<Vec<usize>>, Option<PartitionState>) {
    let bounds = color_lower_bounds(p);
    let tandem = tandem_glue_constraints(p);
    let colors: Vec<Color> = p.interior_colors().into_iter().collect();
    let mut s = Search { pattern: p, budget, bounds: &bounds, tandem: &tandem, colors, limit, found: Vec::new(), witness: None };
    let mut state = PartitionState::new(p);
    if global_lower_bound(p, &bounds) <= budget {
        s.dfs(&mut state);
    }
    debug_assert!(s.pattern.interior_len() == state.cells());
    (s.found, s.witness)
}

/// Build the tile set of a complete state: glue tokens name union-find roots,
/// tile ids name classes, seed colors copy the pattern's row 0 and column 0.
pub fn witness_system(p: &Pattern, state: &PartitionState) -> (Rtas, Coloring) {
    let glue = |root: usize| Glue::lit(&format!("g{root}"));
    let mut tiles = Vec::new();
    let mut coloring = Coloring::new();
    for c in 0..state.class_count() {
        let id = format!("t{c}");
        tiles.push(TileType::new(
            id.clone(),
            glue(state.class_glue(c, Side::N)),
            glue(state.class_glue(c, Side::W)),
            glue(state.class_glue(c, Side::S)),
            glue(state.class_glue(c, Side::E)),
        ));
        coloring.set(id, state.class_color(c));
    }
    let (w, h) = (p.width(), p.height());
    let east = (1..=h).map(|y| glue(state.seed_east_glue(y))).collect();
    let north = (1..=w).map(|x| glue(state.seed_north_glue(x))).collect();
    let colors: BTreeMap<Pos, Color> = (0..=w)
        .map(|x| ((x as i64, 0), p.get(x, 0)))
        .chain((1..=h).map(|y| ((0, y as i64), p.get(0, y))))
        .collect();
    let seed = SeedSpec::new(w, h, east, north).expect("pattern dimensions").with_colors(colors);
    (Rtas::new(TileSet::new(tiles).expect("distinct class ids"), seed), coloring)
}

fn verified(p: &Pattern, state: &PartitionState) -> Result<Solution, SolveError> {
    let (rtas, coloring) = witness_system(p, state);
    match unique_pattern(&rtas, &coloring) {
        Ok(q) if &q == p => Ok(Solution { rtas, coloring, partition: state.partition() }),
        Ok(q) => Err(SolveError::Verification(format!("pattern differs at {:?}", p.diff(&q)))),
        Err(e) => Err(SolveError::Verification(e.to_string())),
    }
}

pub fn solve_decision_with(inst: &PatsInstance, config: &SolverConfig) -> Result<Decision, SolveError> {
    check_size(&inst.pattern, config)?;
    let (_, witness) = search(&inst.pattern, inst.budget, 1);
    match witness {
        Some(state) => Ok(Decision::Yes(Box::new(verified(&inst.pattern, &state)?))),
        None => Ok(Decision::No),
    }
}

pub fn solve_decision(inst: &PatsInstance) -> Result<Decision, SolveError> {
    solve_decision_with(inst, &SolverConfig::from_env())
}

pub fn solve_min_with(p: &Pattern, config: &SolverConfig) -> Result<MinResult, SolveError> {
    check_size(p, config)?;
    let start = global_lower_bound(p, &color_lower_bounds(p)).max(1);
    // A class per cell always works, so the loop terminates.
    for n in start..=p.interior_len().max(1) {
        if let (_, Some(state)) = search(p, n, 1) {
            return Ok(MinResult { min: n, solution: verified(p, &state)? });
        }
    }
    unreachable!("one class per cell is always realizable")
}

pub fn solve_min(p: &Pattern) -> Result<MinResult, SolveError> {
    solve_min_with(p, &SolverConfig::from_env())
}

/// Every partition realizable with at most `budget` classes, up to `limit`
/// of them. At the minimum budget this lists the minimum tile sets up to glue
/// renaming.
pub fn enumerate_partitions(
    p: &Pattern,
    budget: usize,
    limit: usize,
    config: &SolverConfig,
) -> Result<Vec<Vec<usize>>, SolveError> {
    check_size(p, config)?;
    Ok(search(p, budget, limit).0)
}
