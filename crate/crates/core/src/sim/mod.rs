//! Rectilinear assembly dynamics.
//!
//! In an RTAS every glue has strength 1 at temperature 2, so a tile attaches
//! at `(x, y)` exactly when its west glue matches the east glue of the tile at
//! `(x-1, y)` and its south glue matches the north glue of `(x, y-1)`. Growth
//! therefore sweeps the rectangle from the seed corner toward the north-east.

pub mod generic;
pub mod systems;

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::{
    Assembly, Coloring, Glue, ModelError, Pattern, Pos, SeedSpec, StrengthFunction, TileSet,
    TileType,
};

pub const TEMPERATURE: u32 = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimError {
    #[error("system is not directed: {0}")]
    NotDirected(Witness),
    #[error("assembly is incomplete; stuck at {0:?}")]
    Incomplete(Vec<Pos>),
    #[error(transparent)]
    Model(#[from] ModelError),
}

/// Two tile types that can both be placed at one position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub pos: Pos,
    pub first: String,
    pub second: String,
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}) admits {} and {}", self.pos.0, self.pos.1, self.first, self.second)
    }
}

/// A rectilinear TAS: tile set, L-shaped seed, all glue strengths 1, temperature 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rtas {
    tiles: TileSet,
    seed: SeedSpec,
}

impl Rtas {
    pub fn new(tiles: TileSet, seed: SeedSpec) -> Self {
        Rtas { tiles, seed }
    }

    pub fn tiles(&self) -> &TileSet {
        &self.tiles
    }

    pub fn seed(&self) -> &SeedSpec {
        &self.seed
    }

    pub fn width(&self) -> usize {
        self.seed.width()
    }

    pub fn height(&self) -> usize {
        self.seed.height()
    }

    pub fn temperature(&self) -> u32 {
        TEMPERATURE
    }

    /// Unit strength on every tile glue; the seed's internal link binds at 2.
    pub fn strengths(&self) -> StrengthFunction {
        self.seed.strengths()
    }

    pub fn with_seed(&self, seed: SeedSpec) -> Rtas {
        Rtas { tiles: self.tiles.clone(), seed }
    }

    fn index(&self) -> HashMap<(&Glue, &Glue), Vec<usize>> {
        let mut idx: HashMap<(&Glue, &Glue), Vec<usize>> = HashMap::new();
        for (i, t) in self.tiles.types().iter().enumerate() {
            idx.entry((t.west(), t.south())).or_default().push(i);
        }
        idx
    }
}

/// Positions ready for attachment, each with every tile type that fits.
pub type Frontier = Vec<(Pos, TileType)>;

/// Every `(p, t)` such that `t` can attach at the empty interior position `p`.
pub fn attachable(a: &Assembly, s: &Rtas) -> Frontier {
    let mut out = Vec::new();
    for y in 1..=s.height() as i64 {
        for x in 1..=s.width() as i64 {
            if a.contains((x, y)) {
                continue;
            }
            let (Some(w), Some(south)) = (a.get((x - 1, y)), a.get((x, y - 1))) else {
                continue;
            };
            for t in s.tiles.types() {
                if t.west() == w.east() && t.south() == south.north() {
                    out.push(((x, y), t.clone()));
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderPolicy {
    /// Always attach at the frontier position with the least `(y, x)`.
    #[default]
    Lexicographic,
    /// Pick a uniformly random frontier position, from a seeded stream.
    Random(u64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunReport {
    /// Seed plus every attached tile.
    pub terminal: Assembly,
    pub complete: bool,
    /// Empty positions whose west and south neighbors are placed but no tile fits.
    pub stuck_positions: Vec<Pos>,
    pub nondeterministic_witness: Option<Witness>,
    /// Attachments in order.
    pub trace: Vec<(Pos, String)>,
}

impl RunReport {
    /// One `x y tile_id` line per attachment.
    pub fn trace_log(&self) -> String {
        let mut s = String::new();
        for ((x, y), id) in &self.trace {
            writeln!(s, "{x} {y} {id}").unwrap();
        }
        s
    }
}

/// Grow from the seed until no position accepts a tile. When a position
/// admits several tile types the first (in tile-set order) is used and the
/// conflict is recorded as a witness.
pub fn run(s: &Rtas, policy: OrderPolicy) -> RunReport {
    let (w, h) = (s.width(), s.height());
    let stride = w + 1;
    let idx = s.index();
    let types = s.tiles.types();
    // East/north glue presented by each placed cell of the rectangle.
    let mut east: Vec<Option<&Glue>> = vec![None; stride * (h + 1)];
    let mut north: Vec<Option<&Glue>> = vec![None; stride * (h + 1)];
    for y in 1..=h {
        east[y * stride] = s.seed.east_glue(y);
    }
    for x in 1..=w {
        north[x] = s.seed.north_glue(x);
    }
    let mut placed: Vec<Option<usize>> = vec![None; stride * (h + 1)];
    let mut rng = match policy {
        OrderPolicy::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        OrderPolicy::Lexicographic => None,
    };
    let mut ordered: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut pool: Vec<(usize, usize)> = Vec::new();
    ordered.insert((1, 1));
    pool.push((1, 1));

    let mut report_trace = Vec::new();
    let mut stuck = Vec::new();
    let mut witness = None;
    loop {
        let next = match rng.as_mut() {
            None => ordered.pop_first(),
            Some(r) => {
                if pool.is_empty() {
                    None
                } else {
                    let i = r.gen_range(0..pool.len());
                    Some(pool.swap_remove(i))
                }
            }
        };
        let Some((y, x)) = next else { break };
        let i = y * stride + x;
        let (wg, sg) = (east[i - 1].unwrap(), north[i - stride].unwrap());
        let candidates = idx.get(&(wg, sg)).map(Vec::as_slice).unwrap_or(&[]);
        let Some(&chosen) = candidates.first() else {
            stuck.push((x as i64, y as i64));
            continue;
        };
        if candidates.len() > 1 && witness.is_none() {
            witness = Some(Witness {
                pos: (x as i64, y as i64),
                first: types[candidates[0]].id.clone(),
                second: types[candidates[1]].id.clone(),
            });
        }
        let t = &types[chosen];
        placed[i] = Some(chosen);
        east[i] = Some(t.east());
        north[i] = Some(t.north());
        report_trace.push(((x as i64, y as i64), t.id.clone()));
        // A neighbor becomes ready once both of its inputs exist.
        if x < w && north[i + 1 - stride].is_some() && placed[i + 1].is_none() {
            ordered.insert((y, x + 1));
            pool.push((y, x + 1));
        }
        if y < h && east[i + stride - 1].is_some() && placed[i + stride].is_none() {
            ordered.insert((y + 1, x));
            pool.push((y + 1, x));
        }
    }

    let mut terminal = s.seed.assembly();
    for y in 1..=h {
        for x in 1..=w {
            if let Some(k) = placed[y * stride + x] {
                terminal.place((x as i64, y as i64), types[k].clone());
            }
        }
    }
    stuck.sort_by_key(|&(x, y)| (y, x));
    RunReport {
        complete: report_trace.len() == w * h,
        terminal,
        stuck_positions: stuck,
        nondeterministic_witness: witness,
        trace: report_trace,
    }
}

/// Two distinct tile types sharing west and south glues, if any.
pub fn directedness_witness(tiles: &TileSet) -> Option<(String, String)> {
    let mut seen: HashMap<(&Glue, &Glue), &str> = HashMap::new();
    for t in tiles.types() {
        if let Some(prev) = seen.insert((t.west(), t.south()), &t.id) {
            return Some((prev.to_string(), t.id.clone()));
        }
    }
    None
}

/// Directedness by the west/south characterization. Only meaningful when
/// every tile type is reachable; see [`prune_unreachable`].
pub fn is_directed(s: &Rtas) -> bool {
    directedness_witness(&s.tiles).is_none()
}

/// Restrict to tile types that can appear in the rectangle, computed by a
/// sweep over the per-position sets of incoming west/south glues. The sweep
/// is exact whenever the first conflicting position (if any) is genuinely
/// reachable, which is all that directedness checking needs.
pub fn prune_unreachable(s: &Rtas) -> Rtas {
    let (w, h) = (s.width(), s.height());
    let stride = w + 1;
    let types = s.tiles.types();
    let mut east: Vec<BTreeSet<&Glue>> = vec![BTreeSet::new(); stride * (h + 1)];
    let mut north: Vec<BTreeSet<&Glue>> = vec![BTreeSet::new(); stride * (h + 1)];
    for y in 1..=h {
        east[y * stride].extend(s.seed.east_glue(y));
    }
    for x in 1..=w {
        north[x].extend(s.seed.north_glue(x));
    }
    let mut used = vec![false; types.len()];
    for y in 1..=h {
        for x in 1..=w {
            let i = y * stride + x;
            let (mut e, mut n) = (BTreeSet::new(), BTreeSet::new());
            for (k, t) in types.iter().enumerate() {
                if east[i - 1].contains(t.west()) && north[i - stride].contains(t.south()) {
                    used[k] = true;
                    e.insert(t.east());
                    n.insert(t.north());
                }
            }
            east[i] = e;
            north[i] = n;
        }
    }
    let mut k = 0;
    let tiles = s.tiles.retain(|_| {
        k += 1;
        used[k - 1]
    });
    Rtas { tiles, seed: s.seed.clone() }
}

/// The pattern uniquely assembled by `s` under `f` (seed colors come from
/// the seed spec).
pub fn unique_pattern(s: &Rtas, f: &Coloring) -> Result<Pattern, SimError> {
    if let Some((a, b)) = directedness_witness(prune_unreachable(s).tiles()) {
        let report = run(s, OrderPolicy::Lexicographic);
        let pos = report.nondeterministic_witness.map(|w| w.pos).unwrap_or((0, 0));
        return Err(SimError::NotDirected(Witness { pos, first: a, second: b }));
    }
    let report = run(s, OrderPolicy::Lexicographic);
    if let Some(w) = report.nondeterministic_witness {
        return Err(SimError::NotDirected(w));
    }
    if !report.complete {
        return Err(SimError::Incomplete(report.stuck_positions));
    }
    let coloring = f.clone().merged(&s.seed.coloring());
    Ok(coloring.apply(&report.terminal, s.width(), s.height())?)
}
