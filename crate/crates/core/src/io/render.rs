use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::model::{Color, Pattern};
use crate::reduction::{aux_color_names, teval};
use crate::sim::systems::{BLUE, GRAY, ORANGE};

use super::{content_lines, parse_num, syntax, IoError};

pub type Rgb = [u8; 3];

/// Color id -> (name, RGB). Palette files hold `color <id> <name> <r> <g> <b>`
/// lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Palette {
    entries: BTreeMap<Color, (String, Rgb)>,
}

impl Palette {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, id: Color, name: impl Into<String>, rgb: Rgb) {
        self.entries.insert(id, (name.into(), rgb));
    }

    pub fn get(&self, id: Color) -> Option<(&str, Rgb)> {
        self.entries.get(&id).map(|(n, c)| (n.as_str(), *c))
    }

    pub fn id_of(&self, name: &str) -> Option<Color> {
        self.entries.iter().find(|(_, (n, _))| n == name).map(|(&id, _)| id)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Evenly spread hues for colors `0..n`, named `c<id>`.
    pub fn generic(n: usize) -> Self {
        let mut p = Palette::new();
        for id in 0..n {
            p.insert(id as Color, format!("c{id}"), hue(id, n));
        }
        p
    }

    /// Blue, orange and gray as used by the bundled counter and gates.
    pub fn counter() -> Self {
        let mut p = Palette::new();
        p.insert(BLUE, "blue", [40, 90, 200]);
        p.insert(ORANGE, "orange", [240, 140, 20]);
        p.insert(GRAY, "gray", [150, 150, 150]);
        p
    }

    /// All 59 colors of the reduction, with fixed green and red LEDs.
    pub fn reduction() -> Self {
        use teval::color::*;
        let mut p = Palette::new();
        let fixed: [(Color, Rgb); 9] = [
            (BG, [235, 235, 235]),
            (V_WIRE, [70, 110, 220]),
            (L_WIRE, [150, 90, 200]),
            (POSITIVE, [250, 250, 120]),
            (NEGATIVE, [60, 60, 60]),
            (RED, [220, 30, 30]),
            (GREEN, [30, 190, 60]),
            (ONE, [255, 255, 255]),
            (ZERO, [0, 0, 0]),
        ];
        let names = teval::COLOR_NAMES.iter().map(|s| s.to_string()).chain(aux_color_names());
        let total = COUNT as usize + crate::reduction::AUX_COLORS;
        for (id, name) in names.enumerate() {
            let id = id as Color;
            let rgb = fixed.iter().find(|(c, _)| *c == id).map(|(_, rgb)| *rgb).unwrap_or(hue(id as usize, total));
            p.insert(id, name, rgb);
        }
        p
    }
}

/// A fully saturated hue, lightened every other step for contrast.
fn hue(i: usize, n: usize) -> Rgb {
    let h = (i * 360 / n.max(1)) as f64;
    let (s, v) = (0.65, if i % 2 == 0 { 0.95 } else { 0.7 });
    let c = v * s;
    let x = c * (1.0 - ((h / 60.0) % 2.0 - 1.0).abs());
    let (r, g, b) = match (h / 60.0) as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = v - c;
    let to = |f: f64| ((f + m) * 255.0).round() as u8;
    [to(r), to(g), to(b)]
}

pub fn write_palette(p: &Palette) -> String {
    let mut s = String::new();
    for (id, (name, [r, g, b])) in &p.entries {
        let _ = writeln!(s, "color {id} {name} {r} {g} {b}");
    }
    s
}

pub fn read_palette(text: &str) -> Result<Palette, IoError> {
    let mut p = Palette::new();
    for (n, l) in content_lines(text) {
        let toks: Vec<&str> = l.split_whitespace().collect();
        let ["color", id, name, r, g, b] = toks[..] else {
            return Err(syntax(n, "expected `color <id> <name> <r> <g> <b>`"));
        };
        let id: Color = parse_num(id, n, "color id")?;
        if p.entries.contains_key(&id) {
            return Err(syntax(n, format!("duplicate color id {id}")));
        }
        let rgb = [parse_num(r, n, "red")?, parse_num(g, n, "green")?, parse_num(b, n, "blue")?];
        p.insert(id, name, rgb);
    }
    Ok(p)
}

/// Plain PPM, one image row per line, north row first.
pub fn render_ppm(p: &Pattern, palette: &Palette) -> Result<String, IoError> {
    let mut s = format!("P3\n{} {}\n255\n", p.width() + 1, p.height() + 1);
    for row in p.rows_north_first() {
        let px: Vec<String> = row
            .iter()
            .map(|&c| {
                let (_, [r, g, b]) = palette.get(c).ok_or(IoError::MissingPalette(c))?;
                Ok(format!("{r} {g} {b}"))
            })
            .collect::<Result<_, IoError>>()?;
        s.push_str(&px.join(" "));
        s.push('\n');
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sim::{systems::binary_counter, unique_pattern};

    #[test]
    fn single_color_image() {
        let mut pal = Palette::new();
        pal.insert(3, "x", [1, 2, 3]);
        let out = render_ppm(&Pattern::uniform(1, 1, 3), &pal).unwrap();
        assert_eq!(out, "P3\n2 2\n255\n1 2 3 1 2 3\n1 2 3 1 2 3\n");
        assert_eq!(render_ppm(&Pattern::uniform(1, 1, 4), &pal), Err(IoError::MissingPalette(4)));
    }

    #[test]
    fn counter_image_follows_pattern() {
        let (s, f) = binary_counter(4, 4);
        let p = unique_pattern(&s, &f).unwrap();
        let pal = Palette::counter();
        let img = render_ppm(&p, &pal).unwrap();
        let rows: Vec<&str> = img.lines().skip(3).collect();
        assert_eq!(rows.len(), 5);
        for (r, line) in rows.iter().enumerate() {
            let y = 4 - r;
            let nums: Vec<u8> = line.split(' ').map(|t| t.parse().unwrap()).collect();
            for x in 0..=4 {
                let (_, rgb) = pal.get(p.get(x, y)).unwrap();
                assert_eq!(&nums[3 * x..3 * x + 3], &rgb);
            }
        }
    }

    #[test]
    fn reduction_palette() {
        let p = Palette::reduction();
        assert_eq!(p.len(), 59);
        assert_eq!(p.id_of("green"), Some(teval::color::GREEN));
        assert_eq!(p.id_of("red"), Some(teval::color::RED));
        assert_eq!(p.id_of("C-bg"), Some(58));
        assert_eq!(read_palette(&write_palette(&p)).unwrap(), p);
        assert!(read_palette("color 1 a 0 0 0\ncolor 1 b 0 0 0\n").is_err());
        assert!(read_palette("color 1 a 0 0 300\n").is_err());
    }
}
