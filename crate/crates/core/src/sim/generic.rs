//! A small generic seeded TAS engine that explores every assembly sequence.
//! It knows nothing about rectilinearity and serves as the reference oracle
//! for directedness at desk scale.

use std::collections::{BTreeMap, HashSet};

use thiserror::Error;

use crate::model::{Assembly, Dir, Pos, StrengthFunction, TileType};

use super::Rtas;

pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("exploration exceeded the budget of {0} assemblies")]
pub struct BudgetExceeded(pub usize);

#[derive(Debug, Clone)]
pub struct Tas {
    pub tiles: Vec<TileType>,
    pub seed: Assembly,
    pub strengths: StrengthFunction,
    pub temperature: u32,
}

#[derive(Debug, Clone)]
pub struct Exploration {
    /// Number of distinct producible assemblies visited (seed included).
    pub producible: usize,
    pub terminals: Vec<Assembly>,
}

type State = BTreeMap<Pos, usize>;

impl Tas {
    pub fn from_rtas(s: &Rtas) -> Tas {
        Tas {
            tiles: s.tiles().types().to_vec(),
            seed: s.seed().assembly(),
            strengths: s.strengths(),
            temperature: s.temperature(),
        }
    }

    fn tile_at<'a>(&'a self, state: &State, p: Pos) -> Option<&'a TileType> {
        match state.get(&p) {
            Some(&k) => Some(&self.tiles[k]),
            None => self.seed.get(p),
        }
    }

    fn successors(&self, state: &State) -> Vec<State> {
        let mut empty: Vec<Pos> = Vec::new();
        let occupied = self.seed.positions().chain(state.keys().copied());
        for (x, y) in occupied {
            for d in Dir::ALL {
                let (dx, dy) = d.offset();
                let q = (x + dx, y + dy);
                if self.tile_at(state, q).is_none() {
                    empty.push(q);
                }
            }
        }
        empty.sort_unstable();
        empty.dedup();
        let mut out = Vec::new();
        for p in empty {
            for (k, t) in self.tiles.iter().enumerate() {
                let strength: u32 = Dir::ALL
                    .iter()
                    .filter_map(|&d| {
                        let (dx, dy) = d.offset();
                        self.tile_at(state, (p.0 + dx, p.1 + dy))
                            .map(|n| self.strengths.bond(t, d, n))
                    })
                    .sum();
                if strength >= self.temperature {
                    let mut next = state.clone();
                    next.insert(p, k);
                    out.push(next);
                }
            }
        }
        out
    }

    /// Visit every producible assembly, collecting the terminal ones.
    pub fn explore(&self, budget: usize) -> Result<Exploration, BudgetExceeded> {
        let mut seen: HashSet<State> = HashSet::new();
        let mut stack = vec![State::new()];
        seen.insert(State::new());
        let mut terminals = Vec::new();
        while let Some(state) = stack.pop() {
            let next = self.successors(&state);
            if next.is_empty() {
                let mut a = self.seed.clone();
                for (p, k) in &state {
                    a.place(*p, self.tiles[*k].clone());
                }
                terminals.push(a);
            }
            for s in next {
                if seen.insert(s.clone()) {
                    if seen.len() > budget {
                        return Err(BudgetExceeded(budget));
                    }
                    stack.push(s);
                }
            }
        }
        Ok(Exploration { producible: seen.len(), terminals })
    }
}
