//! Partial partitions of interior positions into tile-type classes.
//!
//! Every class owns four glue variables (N, W, S, E) and every seed position
//! owns one. Placing a position into a class unifies the class's west and
//! south variables with the east/north variables of the neighbors. The
//! finest such unification is realizable iff no two classes end up with the
//! same (west, south) pair, which is checked after every union.

use std::collections::HashMap;

use crate::model::{Color, Pattern};

/// Union-find without path compression so that unions can be undone.
#[derive(Debug, Clone)]
struct Uf {
    parent: Vec<usize>,
    rank: Vec<u8>,
    log: Vec<(usize, usize, bool)>,
}

impl Uf {
    fn new(n: usize) -> Self {
        Uf { parent: (0..n).collect(), rank: vec![0; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        if self.rank[a] < self.rank[b] {
            std::mem::swap(&mut a, &mut b);
        }
        let bumped = self.rank[a] == self.rank[b];
        self.parent[b] = a;
        if bumped {
            self.rank[a] += 1;
        }
        self.log.push((a, b, bumped));
    }

    fn rollback(&mut self, to: usize) {
        while self.log.len() > to {
            let (a, b, bumped) = self.log.pop().expect("non-empty log");
            self.parent[b] = b;
            if bumped {
                self.rank[a] -= 1;
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Contradiction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    N = 0,
    W = 1,
    S = 2,
    E = 3,
}

#[derive(Debug, Clone, Copy)]
pub struct Checkpoint {
    trail: usize,
    uf: usize,
}

#[derive(Debug, Clone)]
pub struct PartitionState {
    width: usize,
    height: usize,
    /// Interior colors indexed by cell, row-major from (1, 1).
    colors: Vec<Color>,
    class_of: Vec<Option<usize>>,
    class_color: Vec<Color>,
    class_size: Vec<usize>,
    per_color: HashMap<Color, usize>,
    uf: Uf,
    /// Cells in assignment order; a cell that opened a new class is flagged.
    trail: Vec<(usize, bool)>,
}

impl PartitionState {
    pub fn new(p: &Pattern) -> Self {
        let (w, h) = (p.width(), p.height());
        let colors: Vec<Color> = p.interior_positions().map(|(x, y)| p.get(x, y)).collect();
        let n = colors.len();
        PartitionState {
            width: w,
            height: h,
            colors,
            class_of: vec![None; n],
            class_color: Vec::new(),
            class_size: Vec::new(),
            per_color: HashMap::new(),
            uf: Uf::new(w + h + 4 * n),
            trail: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn cell(&self, x: usize, y: usize) -> usize {
        (y - 1) * self.width + (x - 1)
    }

    pub fn pos(&self, cell: usize) -> (usize, usize) {
        (cell % self.width + 1, cell / self.width + 1)
    }

    pub fn color(&self, cell: usize) -> Color {
        self.colors[cell]
    }

    pub fn cells(&self) -> usize {
        self.colors.len()
    }

    pub fn class_of(&self, cell: usize) -> Option<usize> {
        self.class_of[cell]
    }

    pub fn class_count(&self) -> usize {
        self.class_color.len()
    }

    pub fn class_color(&self, class: usize) -> Color {
        self.class_color[class]
    }

    pub fn classes_of_color(&self, color: Color) -> usize {
        self.per_color.get(&color).copied().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        self.trail.len() == self.colors.len()
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint { trail: self.trail.len(), uf: self.uf.log.len() }
    }

    pub fn rollback(&mut self, cp: Checkpoint) {
        while self.trail.len() > cp.trail {
            let (cell, opened) = self.trail.pop().expect("non-empty trail");
            let class = self.class_of[cell].take().expect("assigned cell");
            self.class_size[class] -= 1;
            if opened {
                self.class_color.pop();
                self.class_size.pop();
                *self.per_color.get_mut(&self.colors[cell]).expect("counted color") -= 1;
            }
        }
        self.uf.rollback(cp.uf);
    }

    /// Index of the glue variable presented east by the west arm at row `y`.
    fn seed_east(&self, y: usize) -> usize {
        y - 1
    }

    fn seed_north(&self, x: usize) -> usize {
        self.height + x - 1
    }

    pub fn class_var(&self, class: usize, side: Side) -> usize {
        self.width + self.height + 4 * class + side as usize
    }

    /// Root of a glue variable; equal roots mean equal glues.
    pub fn root(&self, var: usize) -> usize {
        self.uf.find(var)
    }

    pub fn union(&mut self, a: usize, b: usize) {
        self.uf.union(a, b);
    }

    /// The variable for the glue presented east by `(x, y)`, which may be a
    /// seed cell. `None` if the position is still empty.
    fn east_of(&self, x: usize, y: usize) -> Option<usize> {
        if x == 0 {
            Some(self.seed_east(y))
        } else {
            self.class_of[self.cell(x, y)].map(|c| self.class_var(c, Side::E))
        }
    }

    fn north_of(&self, x: usize, y: usize) -> Option<usize> {
        if y == 0 {
            Some(self.seed_north(x))
        } else {
            self.class_of[self.cell(x, y)].map(|c| self.class_var(c, Side::N))
        }
    }

    /// The (west, south) input variables of an empty cell whose neighbors are
    /// both placed.
    pub fn inputs(&self, cell: usize) -> Option<(usize, usize)> {
        let (x, y) = self.pos(cell);
        Some((self.east_of(x - 1, y)?, self.north_of(x, y - 1)?))
    }

    /// Empty cells whose west and south neighbors are placed.
    pub fn frontier(&self) -> Vec<usize> {
        (0..self.cells())
            .filter(|&c| self.class_of[c].is_none() && self.inputs(c).is_some())
            .collect()
    }

    /// The class whose (west, south) roots equal the inputs of `cell`, if any.
    pub fn forced_class(&self, cell: usize) -> Option<usize> {
        let (w, s) = self.inputs(cell)?;
        let key = (self.root(w), self.root(s));
        (0..self.class_count()).find(|&c| {
            (self.root(self.class_var(c, Side::W)), self.root(self.class_var(c, Side::S))) == key
        })
    }

    /// True iff two distinct classes share their (west, south) roots.
    pub fn has_collision(&self) -> bool {
        let mut seen = HashMap::with_capacity(self.class_count());
        (0..self.class_count()).any(|c| {
            let key = (self.root(self.class_var(c, Side::W)), self.root(self.class_var(c, Side::S)));
            seen.insert(key, c).is_some()
        })
    }

    /// Place `cell` into `class` (`None` opens a new class). On contradiction
    /// the state is left as it was.
    pub fn place(&mut self, cell: usize, class: Option<usize>) -> Result<(), Contradiction> {
        let (w, s) = self.inputs(cell).expect("cell on the frontier");
        let color = self.colors[cell];
        let cp = self.checkpoint();
        let class = match class {
            Some(c) => {
                if self.class_color[c] != color {
                    return Err(Contradiction);
                }
                c
            }
            None => {
                self.class_color.push(color);
                self.class_size.push(0);
                *self.per_color.entry(color).or_insert(0) += 1;
                self.class_color.len() - 1
            }
        };
        self.class_of[cell] = Some(class);
        self.class_size[class] += 1;
        self.trail.push((cell, class == self.class_count() - 1 && self.class_size[class] == 1));
        let (cw, cs) = (self.class_var(class, Side::W), self.class_var(class, Side::S));
        self.uf.union(cw, w);
        self.uf.union(cs, s);
        if self.has_collision() {
            self.rollback(cp);
            return Err(Contradiction);
        }
        Ok(())
    }

    /// Root-derived glue token for a class side.
    pub fn class_glue(&self, class: usize, side: Side) -> usize {
        self.root(self.class_var(class, side))
    }

    pub fn seed_east_glue(&self, y: usize) -> usize {
        self.root(self.seed_east(y))
    }

    pub fn seed_north_glue(&self, x: usize) -> usize {
        self.root(self.seed_north(x))
    }

    /// Class of every cell, row-major from (1, 1); panics if incomplete.
    pub fn partition(&self) -> Vec<usize> {
        self.class_of.iter().map(|c| c.expect("complete state")).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rollback_restores_everything() {
        let p = Pattern::uniform(2, 2, 0);
        let mut s = PartitionState::new(&p);
        let cp = s.checkpoint();
        s.place(s.cell(1, 1), None).unwrap();
        s.place(s.cell(2, 1), Some(0)).unwrap();
        assert_eq!(s.class_count(), 1);
        s.rollback(cp);
        assert_eq!(s.class_count(), 0);
        assert_eq!(s.frontier(), vec![0]);
        assert_eq!(s.classes_of_color(0), 0);
    }

    #[test]
    fn one_class_fills_uniform_square() {
        let p = Pattern::uniform(3, 3, 5);
        let mut s = PartitionState::new(&p);
        s.place(0, None).unwrap();
        while let Some(&c) = s.frontier().first() {
            s.place(c, Some(0)).unwrap();
        }
        assert!(s.is_complete());
        // The single class must have W = E and S = N.
        assert_eq!(s.class_glue(0, Side::W), s.class_glue(0, Side::E));
        assert_eq!(s.class_glue(0, Side::S), s.class_glue(0, Side::N));
    }

    #[test]
    fn colliding_classes_are_rejected() {
        // Both cells of the top row see (E of class 0, N of class 0) once
        // everything is one class, so a second class there is impossible.
        let p = Pattern::from_fn(2, 2, |x, y| if (x, y) == (2, 2) { 1 } else { 0 });
        let mut s = PartitionState::new(&p);
        for (x, y) in [(1, 1), (2, 1), (1, 2)] {
            let c = if s.class_count() == 0 { None } else { Some(0) };
            s.place(s.cell(x, y), c).unwrap();
        }
        let top = s.cell(2, 2);
        assert_eq!(s.forced_class(top), Some(0));
        assert_eq!(s.place(top, None), Err(Contradiction));
        assert_eq!(s.place(top, Some(0)), Err(Contradiction));
    }
}
