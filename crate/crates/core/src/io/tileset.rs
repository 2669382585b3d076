use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::model::{Coloring, Glue, StrengthFunction, TileSet, TileType};

use super::{content_lines, parse_num, syntax, IoError};

/// Contents of a `.tts` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TileFile {
    pub tiles: TileSet,
    /// Colors of the tiles that carry a `color=` field.
    pub coloring: Coloring,
    pub strengths: StrengthFunction,
}

pub fn read_tileset(text: &str) -> Result<TileFile, IoError> {
    let mut tiles = Vec::new();
    let mut ids = BTreeSet::new();
    let mut coloring = Coloring::new();
    let mut strengths = StrengthFunction::uniform(1);
    for (n, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks[0] {
            "tile" => {
                let id = *toks.get(1).ok_or_else(|| syntax(n, "missing tile id"))?;
                let mut sides: [Option<Glue>; 4] = Default::default();
                let mut color = None;
                for t in &toks[2..] {
                    let (key, val) = t.split_once('=').ok_or_else(|| syntax(n, format!("malformed field {t:?}")))?;
                    let slot = match key {
                        "N" => 0,
                        "W" => 1,
                        "S" => 2,
                        "E" => 3,
                        "color" if color.is_none() => {
                            color = Some(parse_num(val, n, "color id")?);
                            continue;
                        }
                        _ => return Err(syntax(n, format!("unexpected field {t:?}"))),
                    };
                    if sides[slot].is_some() {
                        return Err(syntax(n, format!("repeated field {key}")));
                    }
                    sides[slot] = Some(Glue::new(val).map_err(|e| syntax(n, e.to_string()))?);
                }
                let [Some(no), Some(w), Some(s), Some(e)] = sides else {
                    return Err(syntax(n, "tile needs N=, W=, S= and E="));
                };
                if !ids.insert(id.to_string()) {
                    return Err(IoError::DuplicateTile { line: n, id: id.to_string() });
                }
                if let Some(c) = color {
                    coloring.set(id, c);
                }
                tiles.push(TileType::new(id, no, w, s, e));
            }
            "strength" => {
                let [_, g, v] = toks[..] else {
                    return Err(syntax(n, "expected `strength <glue> <n>`"));
                };
                let g = Glue::new(g).map_err(|e| syntax(n, e.to_string()))?;
                strengths.set(g, parse_num(v, n, "strength")?);
            }
            d => return Err(syntax(n, format!("unknown directive {d:?}"))),
        }
    }
    Ok(TileFile { tiles: TileSet::new(tiles)?, coloring, strengths })
}

pub fn write_tileset(tiles: &TileSet, coloring: Option<&Coloring>, strengths: Option<&StrengthFunction>) -> String {
    let mut s = String::new();
    for t in tiles.types() {
        let _ = write!(s, "tile {} N={} W={} S={} E={}", t.id, t.north(), t.west(), t.south(), t.east());
        if let Some(c) = coloring.and_then(|c| c.get(&t.id)) {
            let _ = write!(s, " color={c}");
        }
        s.push('\n');
    }
    if let Some(f) = strengths {
        for (g, v) in f.overrides() {
            let _ = writeln!(s, "strength {g} {v}");
        }
    }
    s
}
