//! Writes the sample inputs used by the README and the CLI tests.
//!
//! Usage: `cargo run --example samples -- <dir>`

use std::fs;
use std::path::PathBuf;

use pats::analysis::mosaic_pattern;
use pats::io::{write_dimacs, write_pattern, write_seed, write_tileset};
use pats::reduction::{CnfFormula, Literal};
use pats::sim::systems::{binary_counter, or_gate_tiles, output_coloring};
use pats::sim::unique_pattern;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data".into()));
    fs::create_dir_all(&dir)?;
    let put = |name: &str, text: String| fs::write(dir.join(name), text);

    let (counter, f) = binary_counter(8, 8);
    put("half_adder.tts", write_tileset(counter.tiles(), Some(&f), None))?;
    put("counter_8x8.seed", write_seed(counter.seed()))?;
    put("counter_8x8.pat", write_pattern(&unique_pattern(&counter, &f)?))?;
    let or = or_gate_tiles();
    put("or_gate.tts", write_tileset(&or, Some(&output_coloring(&or)), None))?;
    put("mosaic_k2.pat", write_pattern(&mosaic_pattern(2, 1)?))?;

    let one = CnfFormula::new(3, vec![[Literal::pos(1), Literal::neg(2), Literal::pos(3)]])?;
    put("one_clause.cnf", write_dimacs(&one))?;
    let circuit = CnfFormula::new(
        4,
        vec![
            [Literal::pos(4), Literal::pos(3), Literal::pos(2)],
            [Literal::pos(4), Literal::neg(3), Literal::pos(1)],
        ],
    )?;
    put("circuit.cnf", write_dimacs(&circuit))?;
    let unsat = CnfFormula::new(1, vec![[Literal::pos(1); 3], [Literal::neg(1); 3]])?;
    put("unsat.cnf", write_dimacs(&unsat))?;
    Ok(())
}
