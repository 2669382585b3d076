//! Small example systems: the half-adder binary counter and the OR gate.

use crate::model::{Coloring, Glue, Pos, SeedSpec, TileSet, TileType};

use super::Rtas;

pub const BLUE: u32 = 0;
pub const ORANGE: u32 = 1;
pub const GRAY: u32 = 2;

/// The four half-adder tile types: west and south inputs, sum to the north,
/// carry to the east. Ids are `ha<W><S>`.
pub fn half_adder_tiles() -> TileSet {
    let mut types = Vec::new();
    for a in 0..2u8 {
        for b in 0..2u8 {
            let sum = a ^ b;
            let carry = a & b;
            types.push(TileType::from_strs(
                &format!("ha{a}{b}"),
                &sum.to_string(),
                &a.to_string(),
                &b.to_string(),
                &carry.to_string(),
            ));
        }
    }
    TileSet::new(types).expect("distinct ids")
}

/// Four tile types computing `A ∨ B` from the west and south inputs; the
/// result leaves both north and east. Ids are `or<W><S>`.
pub fn or_gate_tiles() -> TileSet {
    let mut types = Vec::new();
    for a in 0..2u8 {
        for b in 0..2u8 {
            let out = (a | b).to_string();
            types.push(TileType::from_strs(&format!("or{a}{b}"), &out, &a.to_string(), &b.to_string(), &out));
        }
    }
    TileSet::new(types).expect("distinct ids")
}

/// Blue for tile types whose north glue is 0, orange for 1.
pub fn output_coloring(tiles: &TileSet) -> Coloring {
    let mut f = Coloring::new();
    for t in tiles.types() {
        f.set(t.id.clone(), if t.north().as_str() == "1" { ORANGE } else { BLUE });
    }
    f
}

/// The counter seed: the west arm presents 1 eastward on every row (the
/// increment), the south arm presents 0 northward (the initial value). Seed
/// cells are gray.
pub fn counter_seed(width: usize, height: usize) -> SeedSpec {
    let mut seed =
        SeedSpec::new(width, height, vec![Glue::lit("1"); height], vec![Glue::lit("0"); width])
            .expect("valid dimensions");
    let positions: Vec<Pos> = seed.positions().collect();
    for p in positions {
        seed.set_color(p, GRAY);
    }
    seed
}

/// The binary counter over a `width x height` prefix with its blue/orange coloring.
pub fn binary_counter(width: usize, height: usize) -> (Rtas, Coloring) {
    let tiles = half_adder_tiles();
    let f = output_coloring(&tiles);
    (Rtas::new(tiles, counter_seed(width, height)), f)
}
