//! Domain types shared by every other module: glues, tile types, tile sets,
//! strength functions, assemblies, L-shaped seeds, patterns and colorings.

mod pattern;
mod stability;

pub use pattern::{Color, Pattern};
pub use stability::{binding_graph, is_tau_stable, min_cut_weight, BindingGraph};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("invalid glue token {0:?}")]
    InvalidGlue(String),
    #[error("duplicate tile id {0:?}")]
    DuplicateTile(String),
    #[error("empty assembly")]
    EmptyAssembly,
    #[error("seed arm length mismatch: expected {expected}, got {got}")]
    SeedLength { expected: usize, got: usize },
    #[error("seed dimensions must be at least 1x1")]
    SeedTooSmall,
    #[error("pattern has {got} cells, expected {expected}")]
    PatternSize { expected: usize, got: usize },
    #[error("no color for tile {0:?}")]
    Uncolored(String),
    #[error("assembly does not cover the pattern rectangle at ({0}, {1})")]
    NotRectangle(i64, i64),
}

/// A glue label. The token `-` is the null glue: it never binds.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Glue(String);

impl Glue {
    pub const NULL_TOKEN: &'static str = "-";

    pub fn new(token: impl Into<String>) -> Result<Self, ModelError> {
        let token = token.into();
        if token.is_empty() || token.chars().any(|c| c.is_whitespace() || c.is_control()) {
            return Err(ModelError::InvalidGlue(token));
        }
        Ok(Glue(token))
    }

    /// Panicking constructor for literals known to be valid.
    pub fn lit(token: &str) -> Self {
        Self::new(token).expect("valid glue literal")
    }

    pub fn null() -> Self {
        Glue(Self::NULL_TOKEN.to_string())
    }

    pub fn is_null(&self) -> bool {
        self.0 == Self::NULL_TOKEN
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Glue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Glue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    N,
    W,
    S,
    E,
}

impl Dir {
    /// Counter-clockwise from north.
    pub const ALL: [Dir; 4] = [Dir::N, Dir::W, Dir::S, Dir::E];

    pub fn offset(self) -> (i64, i64) {
        match self {
            Dir::N => (0, 1),
            Dir::W => (-1, 0),
            Dir::S => (0, -1),
            Dir::E => (1, 0),
        }
    }

    pub fn opposite(self) -> Dir {
        match self {
            Dir::N => Dir::S,
            Dir::W => Dir::E,
            Dir::S => Dir::N,
            Dir::E => Dir::W,
        }
    }

    fn index(self) -> usize {
        match self {
            Dir::N => 0,
            Dir::W => 1,
            Dir::S => 2,
            Dir::E => 3,
        }
    }
}

/// A unit square tile type with glues listed N, W, S, E.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TileType {
    pub id: String,
    glues: [Glue; 4],
}

impl TileType {
    pub fn new(id: impl Into<String>, north: Glue, west: Glue, south: Glue, east: Glue) -> Self {
        TileType { id: id.into(), glues: [north, west, south, east] }
    }

    /// Shorthand used heavily by tests and the bundled systems.
    pub fn from_strs(id: &str, n: &str, w: &str, s: &str, e: &str) -> Self {
        TileType::new(id, Glue::lit(n), Glue::lit(w), Glue::lit(s), Glue::lit(e))
    }

    pub fn glue(&self, d: Dir) -> &Glue {
        &self.glues[d.index()]
    }

    pub fn north(&self) -> &Glue {
        self.glue(Dir::N)
    }
    pub fn west(&self) -> &Glue {
        self.glue(Dir::W)
    }
    pub fn south(&self) -> &Glue {
        self.glue(Dir::S)
    }
    pub fn east(&self) -> &Glue {
        self.glue(Dir::E)
    }

    pub fn glues(&self) -> impl Iterator<Item = &Glue> {
        self.glues.iter()
    }
}

/// A finite set of tile types with unique ids. Insertion order is kept so
/// that every derived computation is deterministic.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TileSet {
    types: Vec<TileType>,
}

impl TileSet {
    pub fn new(types: Vec<TileType>) -> Result<Self, ModelError> {
        let mut seen = BTreeSet::new();
        for t in &types {
            if !seen.insert(t.id.as_str()) {
                return Err(ModelError::DuplicateTile(t.id.clone()));
            }
        }
        Ok(TileSet { types })
    }

    pub fn types(&self) -> &[TileType] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&TileType> {
        self.types.iter().find(|t| t.id == id)
    }

    /// The set of all glues on tile types of this set (null excluded).
    pub fn glues(&self) -> BTreeSet<Glue> {
        self.types.iter().flat_map(|t| t.glues().cloned()).filter(|g| !g.is_null()).collect()
    }

    /// Keep only the tile types accepted by `keep`, preserving order.
    pub fn retain(&self, mut keep: impl FnMut(&TileType) -> bool) -> TileSet {
        TileSet { types: self.types.iter().filter(|t| keep(t)).cloned().collect() }
    }
}

/// Glue strengths. Unlisted non-null glues get `default`; null is always 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrengthFunction {
    default: u32,
    overrides: BTreeMap<Glue, u32>,
}

impl StrengthFunction {
    pub fn uniform(default: u32) -> Self {
        StrengthFunction { default, overrides: BTreeMap::new() }
    }

    pub fn with(mut self, glue: Glue, strength: u32) -> Self {
        self.set(glue, strength);
        self
    }

    pub fn set(&mut self, glue: Glue, strength: u32) {
        if !glue.is_null() {
            self.overrides.insert(glue, strength);
        }
    }

    pub fn strength(&self, glue: &Glue) -> u32 {
        if glue.is_null() {
            return 0;
        }
        self.overrides.get(glue).copied().unwrap_or(self.default)
    }

    pub fn default_strength(&self) -> u32 {
        self.default
    }

    pub fn overrides(&self) -> impl Iterator<Item = (&Glue, u32)> {
        self.overrides.iter().map(|(g, s)| (g, *s))
    }

    /// Strength contributed by two tiles abutting along `dir` (from `a` to `b`).
    pub fn bond(&self, a: &TileType, dir: Dir, b: &TileType) -> u32 {
        let ga = a.glue(dir);
        if ga == b.glue(dir.opposite()) {
            self.strength(ga)
        } else {
            0
        }
    }
}

pub type Pos = (i64, i64);

/// A finite partial map from lattice positions to tile types.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Assembly {
    placements: BTreeMap<Pos, TileType>,
}

impl Assembly {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn place(&mut self, pos: Pos, tile: TileType) -> Option<TileType> {
        self.placements.insert(pos, tile)
    }

    pub fn get(&self, pos: Pos) -> Option<&TileType> {
        self.placements.get(&pos)
    }

    pub fn contains(&self, pos: Pos) -> bool {
        self.placements.contains_key(&pos)
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Pos, &TileType)> {
        self.placements.iter().map(|(p, t)| (*p, t))
    }

    pub fn positions(&self) -> impl Iterator<Item = Pos> + '_ {
        self.placements.keys().copied()
    }

    /// `self ⊑ other`: every placement of `self` appears identically in `other`.
    pub fn is_sub_assembly_of(&self, other: &Assembly) -> bool {
        self.placements.iter().all(|(p, t)| other.placements.get(p) == Some(t))
    }
}

impl FromIterator<(Pos, TileType)> for Assembly {
    fn from_iter<I: IntoIterator<Item = (Pos, TileType)>>(iter: I) -> Self {
        Assembly { placements: iter.into_iter().collect() }
    }
}

/// Reserved glue binding the seed tiles to each other (strength 2).
pub const SEED_LINK: &str = "$seed";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeedKind {
    Corner,
    /// West arm tile at (0, y), presenting a glue to the east.
    WestArm,
    /// South arm tile at (x, 0), presenting a glue to the north.
    SouthArm,
}

/// An L-shaped seed over `{(x,0) | 0<=x<=w} ∪ {(0,y) | 0<=y<=h}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeedSpec {
    width: usize,
    height: usize,
    /// Glues presented east by (0,1)..(0,h).
    east_glues: Vec<Glue>,
    /// Glues presented north by (1,0)..(w,0).
    north_glues: Vec<Glue>,
    seed_colors: BTreeMap<Pos, Color>,
}

impl SeedSpec {
    pub fn new(
        width: usize,
        height: usize,
        east_glues: Vec<Glue>,
        north_glues: Vec<Glue>,
    ) -> Result<Self, ModelError> {
        if width == 0 || height == 0 {
            return Err(ModelError::SeedTooSmall);
        }
        if east_glues.len() != height {
            return Err(ModelError::SeedLength { expected: height, got: east_glues.len() });
        }
        if north_glues.len() != width {
            return Err(ModelError::SeedLength { expected: width, got: north_glues.len() });
        }
        Ok(SeedSpec { width, height, east_glues, north_glues, seed_colors: BTreeMap::new() })
    }

    /// Colors of seed positions; positions not listed default to color 0.
    pub fn with_colors(mut self, colors: BTreeMap<Pos, Color>) -> Self {
        self.seed_colors = colors;
        self
    }

    pub fn set_color(&mut self, pos: Pos, color: Color) {
        self.seed_colors.insert(pos, color);
    }

    pub fn width(&self) -> usize {
        self.width
    }
    pub fn height(&self) -> usize {
        self.height
    }
    pub fn east_glues(&self) -> &[Glue] {
        &self.east_glues
    }
    pub fn north_glues(&self) -> &[Glue] {
        &self.north_glues
    }
    pub fn seed_colors(&self) -> &BTreeMap<Pos, Color> {
        &self.seed_colors
    }

    pub fn color_at(&self, pos: Pos) -> Color {
        self.seed_colors.get(&pos).copied().unwrap_or(0)
    }

    /// Glue presented by the seed to the interior position `(1, y)` (west
    /// side) or `(x, 1)` (south side); `None` for other positions.
    pub fn east_glue(&self, y: usize) -> Option<&Glue> {
        y.checked_sub(1).and_then(|i| self.east_glues.get(i))
    }

    pub fn north_glue(&self, x: usize) -> Option<&Glue> {
        x.checked_sub(1).and_then(|i| self.north_glues.get(i))
    }

    pub fn positions(&self) -> impl Iterator<Item = Pos> + '_ {
        let w = self.width as i64;
        let h = self.height as i64;
        (0..=w).map(|x| (x, 0)).chain((1..=h).map(|y| (0, y)))
    }

    pub fn kind_at(pos: Pos) -> SeedKind {
        match pos {
            (0, 0) => SeedKind::Corner,
            (0, _) => SeedKind::WestArm,
            _ => SeedKind::SouthArm,
        }
    }

    /// The synthesized seed tile at `pos`: one type per distinct
    /// (kind, presented glue, color) triple.
    pub fn seed_tile(&self, pos: Pos) -> TileType {
        let color = self.color_at(pos);
        let link = Glue::lit(SEED_LINK);
        let null = Glue::null();
        match Self::kind_at(pos) {
            SeedKind::Corner => {
                TileType::new(format!("$corner#{color}"), link.clone(), null.clone(), null, link)
            }
            SeedKind::WestArm => {
                let g = self.east_glues[(pos.1 - 1) as usize].clone();
                TileType::new(format!("$west:{g}#{color}"), link.clone(), null, link, g)
            }
            SeedKind::SouthArm => {
                let g = self.north_glues[(pos.0 - 1) as usize].clone();
                TileType::new(format!("$south:{g}#{color}"), g, link.clone(), null, link)
            }
        }
    }

    pub fn assembly(&self) -> Assembly {
        self.positions().map(|p| (p, self.seed_tile(p))).collect()
    }

    /// Coloring entries for every synthesized seed tile type.
    pub fn coloring(&self) -> Coloring {
        let mut c = Coloring::new();
        for p in self.positions() {
            c.set(self.seed_tile(p).id, self.color_at(p));
        }
        c
    }

    /// Strength function for seed glues: the internal link binds at 2.
    pub fn strengths(&self) -> StrengthFunction {
        StrengthFunction::uniform(1).with(Glue::lit(SEED_LINK), 2)
    }
}

/// Map from tile type id to color.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Coloring {
    colors: BTreeMap<String, Color>,
}

impl Coloring {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, id: impl Into<String>, color: Color) {
        self.colors.insert(id.into(), color);
    }

    pub fn get(&self, id: &str) -> Option<Color> {
        self.colors.get(id).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Color)> {
        self.colors.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn range(&self) -> BTreeSet<Color> {
        self.colors.values().copied().collect()
    }

    pub fn merged(mut self, other: &Coloring) -> Coloring {
        for (k, v) in other.iter() {
            self.colors.insert(k.to_string(), v);
        }
        self
    }

    /// Color the rectangle `{0..=w} x {0..=h}` of `assembly`.
    pub fn apply(&self, assembly: &Assembly, width: usize, height: usize) -> Result<Pattern, ModelError> {
        let mut cells = Vec::with_capacity((width + 1) * (height + 1));
        for y in 0..=height as i64 {
            for x in 0..=width as i64 {
                let t = assembly.get((x, y)).ok_or(ModelError::NotRectangle(x, y))?;
                cells.push(self.get(&t.id).ok_or_else(|| ModelError::Uncolored(t.id.clone()))?);
            }
        }
        Pattern::new(width, height, cells)
    }
}
