//! Line-oriented text formats.
//!
//! * `.pat`: `PATS-PATTERN 1`, `width W height H`, then `H + 1` rows of
//!   `W + 1` color ids, north row first and the seed row last.
//! * `.tts`: one `tile ID N=g W=g S=g E=g [color=c]` line per tile type and
//!   optional `strength g n` lines.
//! * `.seed`: `PATS-SEED 1`, `width W height H`, `east` followed by the `H`
//!   glues of the west arm (bottom first), `north` followed by the `W` glues
//!   of the south arm, and optional `color X Y C` lines for seed cells.
//!
//! Blank lines and lines starting with `#` are ignored by every reader
//! except inside the `.pat` grid. Writers emit single spaces and LF endings.

mod dimacs;
mod render;
mod tileset;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use render::{read_palette, render_ppm, write_palette, Palette, Rgb};
pub use tileset::{read_tileset, write_tileset, TileFile};

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::model::{Color, Glue, ModelError, Pattern, SeedSpec};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: not a 3SAT instance (clause has {len} literals)")]
    NotThreeSat { line: usize, len: usize },
    #[error("line {line}: duplicate tile id {id:?}")]
    DuplicateTile { line: usize, id: String },
    #[error("no palette entry for color {0}")]
    MissingPalette(Color),
    #[error(transparent)]
    Model(#[from] ModelError),
}

pub(crate) fn syntax(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Syntax { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T, IoError> {
    tok.parse().map_err(|_| syntax(line, format!("expected {what}, found {tok:?}")))
}

/// Parse `width W height H`.
fn parse_dims(line: Option<(usize, &str)>) -> Result<(usize, usize), IoError> {
    let (n, l) = line.ok_or_else(|| syntax(0, "missing width/height line"))?;
    match l.split_whitespace().collect::<Vec<_>>()[..] {
        ["width", w, "height", h] => Ok((parse_num(w, n, "width")?, parse_num(h, n, "height")?)),
        _ => Err(syntax(n, "expected `width <w> height <h>`")),
    }
}

fn expect_header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, header: &str) -> Result<(), IoError> {
    match lines.next() {
        Some((_, l)) if l == header => Ok(()),
        Some((n, l)) => Err(syntax(n, format!("expected {header:?}, found {l:?}"))),
        None => Err(syntax(0, format!("missing {header:?} header"))),
    }
}

pub const PATTERN_HEADER: &str = "PATS-PATTERN 1";
pub const SEED_HEADER: &str = "PATS-SEED 1";

pub fn write_pattern(p: &Pattern) -> String {
    let mut s = format!("{PATTERN_HEADER}\nwidth {} height {}\n", p.width(), p.height());
    for row in p.rows_north_first() {
        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

pub fn read_pattern(text: &str) -> Result<Pattern, IoError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, PATTERN_HEADER)?;
    let (w, h) = parse_dims(lines.next())?;
    let mut rows = Vec::new();
    for (n, l) in lines {
        let row: Vec<Color> = l.split_whitespace().map(|t| parse_num(t, n, "color id")).collect::<Result<_, _>>()?;
        if row.len() != w + 1 {
            return Err(syntax(n, format!("row has {} cells, expected {}", row.len(), w + 1)));
        }
        rows.push(row);
    }
    if rows.len() != h + 1 {
        return Err(syntax(0, format!("found {} rows, expected {}", rows.len(), h + 1)));
    }
    rows.reverse();
    Ok(Pattern::new(w, h, rows.concat())?)
}

pub fn write_seed(s: &SeedSpec) -> String {
    let join = |g: &[Glue]| g.iter().map(|g| g.as_str()).collect::<Vec<_>>().join(" ");
    let mut out = format!("{SEED_HEADER}\nwidth {} height {}\n", s.width(), s.height());
    let _ = writeln!(out, "east {}", join(s.east_glues()));
    let _ = writeln!(out, "north {}", join(s.north_glues()));
    for (&(x, y), c) in s.seed_colors() {
        let _ = writeln!(out, "color {x} {y} {c}");
    }
    out
}

pub fn read_seed(text: &str) -> Result<SeedSpec, IoError> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, SEED_HEADER)?;
    let (w, h) = parse_dims(lines.next())?;
    let (mut east, mut north) = (None, None);
    let mut colors = BTreeMap::new();
    for (n, l) in lines {
        let mut toks = l.split_whitespace();
        let glue_list = |toks: std::str::SplitWhitespace| {
            toks.map(|t| Glue::new(t).map_err(|e| syntax(n, e.to_string()))).collect::<Result<Vec<_>, _>>()
        };
        match toks.next() {
            Some("east") if east.is_none() => east = Some(glue_list(toks)?),
            Some("north") if north.is_none() => north = Some(glue_list(toks)?),
            Some("color") => {
                let v: Vec<&str> = toks.collect();
                let [x, y, c] = v[..] else {
                    return Err(syntax(n, "expected `color <x> <y> <c>`"));
                };
                let pos: (i64, i64) = (parse_num(x, n, "x")?, parse_num(y, n, "y")?);
                let on_seed = (pos.1 == 0 && (0..=w as i64).contains(&pos.0))
                    || (pos.0 == 0 && (0..=h as i64).contains(&pos.1));
                if !on_seed {
                    return Err(syntax(n, format!("({x}, {y}) is not a seed position")));
                }
                colors.insert(pos, parse_num(c, n, "color id")?);
            }
            Some(d) => return Err(syntax(n, format!("unexpected directive {d:?}"))),
            None => unreachable!("content lines are non-empty"),
        }
    }
    let east = east.ok_or_else(|| syntax(0, "missing east line"))?;
    let north = north.ok_or_else(|| syntax(0, "missing north line"))?;
    Ok(SeedSpec::new(w, h, east, north)?.with_colors(colors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_by_one_pattern_body() {
        let p = Pattern::uniform(1, 1, 7);
        assert_eq!(write_pattern(&p), "PATS-PATTERN 1\nwidth 1 height 1\n7 7\n7 7\n");
        assert_eq!(read_pattern(&write_pattern(&p)).unwrap(), p);
    }

    #[test]
    fn north_row_comes_first() {
        let p = Pattern::from_fn(1, 1, |x, y| (10 * y + x) as Color);
        assert_eq!(write_pattern(&p), "PATS-PATTERN 1\nwidth 1 height 1\n10 11\n0 1\n");
    }

    #[test]
    fn pattern_errors() {
        assert!(read_pattern("PATS-PATTERN 1\n0 0\n0 0\n").is_err());
        assert!(read_pattern("PATS-PATTERN 1\nwidth 1 height 1\n0 0\n").is_err());
        assert!(read_pattern("PATS-PATTERN 1\nwidth 1 height 1\n0 x\n0 0\n").is_err());
        assert!(read_pattern("PATS-PATTERN 1\nwidth 1 height 1\n0 0 0\n0 0\n").is_err());
        assert!(read_pattern("width 1 height 1\n0 0\n0 0\n").is_err());
    }

    #[test]
    fn seed_round_trip() {
        let g = |v: &[&str]| v.iter().map(|t| Glue::lit(t)).collect::<Vec<_>>();
        let mut s = SeedSpec::new(3, 2, g(&["1", "a"]), g(&["0", "0", "b"])).unwrap();
        s.set_color((0, 2), 4);
        s.set_color((3, 0), 1);
        let text = write_seed(&s);
        assert_eq!(text, "PATS-SEED 1\nwidth 3 height 2\neast 1 a\nnorth 0 0 b\ncolor 0 2 4\ncolor 3 0 1\n");
        assert_eq!(read_seed(&text).unwrap(), s);
    }

    #[test]
    fn seed_errors() {
        assert!(read_seed("PATS-SEED 1\nwidth 2 height 1\neast a\nnorth a\n").is_err());
        assert!(read_seed("PATS-SEED 1\nwidth 1 height 1\neast a\n").is_err());
        assert!(read_seed("PATS-SEED 1\nwidth 1 height 1\neast a\nnorth a\ncolor 1 1 3\n").is_err());
        assert!(read_seed("PATS-SEED 1\nwidth 1 height 1\neast a\nnorth a\nfoo\n").is_err());
    }

    proptest! {
        #[test]
        fn pattern_round_trip(cells in proptest::collection::vec(0u32..20, 36)) {
            let p = Pattern::new(5, 5, cells).unwrap();
            let text = write_pattern(&p);
            let q = read_pattern(&text).unwrap();
            prop_assert_eq!(&q, &p);
            prop_assert_eq!(write_pattern(&q), text);
        }
    }
}
