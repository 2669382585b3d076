//! Small windows of the reduction pattern. Each window is regrown by the
//! intended tile set from the glues crossing its seed border, and the
//! solver never needs more types than the window actually uses.

use std::collections::BTreeSet;

use pats::model::{Pattern, SeedSpec, TileType};
use pats::reduction::{reduce, CnfFormula, Literal, Reduction};
use pats::sim::{run, unique_pattern, OrderPolicy, Rtas};
use pats::solver::{solve_min_with, SolverConfig};

fn circuit() -> Reduction {
    let phi = CnfFormula::new(
        4,
        vec![
            [Literal::pos(4), Literal::pos(3), Literal::pos(2)],
            [Literal::pos(4), Literal::neg(3), Literal::pos(1)],
        ],
    )
    .unwrap();
    reduce(&phi).unwrap()
}

fn check_window(r: &Reduction, x0: usize, y0: usize, size: usize) {
    let s = r.system().unwrap();
    let grown = run(&s, OrderPolicy::Lexicographic).terminal;
    let tile = |x: usize, y: usize| grown.get((x as i64, y as i64)).unwrap().clone();
    let window: Pattern = r.pattern.crop(x0, y0, size, size);

    let mut used: Vec<TileType> = Vec::new();
    let mut ids = BTreeSet::new();
    for y in 1..=size {
        for x in 1..=size {
            let t = tile(x0 + x, y0 + y);
            if ids.insert(t.id.clone()) {
                used.push(t);
            }
        }
    }
    let east = (1..=size).map(|y| tile(x0, y0 + y).east().clone()).collect();
    let north = (1..=size).map(|x| tile(x0 + x, y0).north().clone()).collect();
    let mut seed = SeedSpec::new(size, size, east, north).unwrap();
    let positions: Vec<_> = seed.positions().collect();
    for (x, y) in positions {
        seed.set_color((x, y), window.get(x as usize, y as usize));
    }
    let tiles = r.tiles.retain(|t| ids.contains(&t.id));
    let regrown = unique_pattern(&Rtas::new(tiles, seed), &r.coloring).unwrap();
    assert_eq!(regrown, window, "window at ({x0}, {y0})");

    let min = solve_min_with(&window, &SolverConfig::default()).unwrap().min;
    assert!(min <= used.len(), "window at ({x0}, {y0}): solver {min} > {} intended", used.len());
    assert!(min >= window.interior_colors().len());
}

#[test]
fn gadget_band_windows() {
    let r = circuit();
    let h = r.eval_height;
    for (x0, y0) in [(0, h), (3, h + 2), (10, h + 9), (20, h + 18), (1, h + 25), (40, r.pattern.height() - 4)] {
        check_window(&r, x0, y0, 4);
    }
}

#[test]
fn evaluator_windows() {
    let r = circuit();
    for (x0, y0) in [(0, 0), (5, 3), (12, 10), (30, 20), (2, r.eval_height - 4)] {
        check_window(&r, x0, y0, 4);
    }
}
