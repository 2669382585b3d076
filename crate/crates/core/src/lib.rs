//! Rectilinear tile self-assembly toolkit.
//!
//! * [`model`]: tiles, glues, assemblies, seeds and patterns.
//! * [`sim`]: rectilinear assembly runs, directedness and pruning.
//! * [`analysis`]: pattern-side lower bounds on tile types per color.
//! * [`solver`]: exact minimum-tile-set search for small patterns.
//! * [`reduction`]: 3SAT evaluator tile set, seed encodings and gadget patterns.
//! * [`io`]: file formats, DIMACS input and PPM rendering.

pub mod model;
pub mod sim;
pub mod analysis;
pub mod solver;
pub mod reduction;
pub mod io;
