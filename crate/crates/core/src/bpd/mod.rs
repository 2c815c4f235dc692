//! Bumpless pipe dreams.
//!
//! Tiles are stored row by row, row 1 at the top. Pipe `c` enters the bottom
//! of column `c`, travels up and right, and leaves through the right edge;
//! the pipe leaving row `r` is `w(r)`.

mod gamma;
pub(crate) mod layout;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Cell, Permutation};

pub use gamma::{gamma, gamma_inverse, gamma_inverse_by_lookup, reconstruct_from_blanks};
pub(crate) use layout::{Corner, Layout};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Blank,
    Vertical,
    Horizontal,
    /// Joins the bottom and right edges.
    R,
    /// Joins the left and top edges.
    J,
    Cross,
    /// An `R` and a `J` sharing a cell; only in almost bumpless pipe dreams.
    Bump,
}

impl Tile {
    pub fn to_char(self) -> char {
        match self {
            Tile::Blank => '.',
            Tile::Vertical => '|',
            Tile::Horizontal => '-',
            Tile::R => 'r',
            Tile::J => 'j',
            Tile::Cross => '+',
            Tile::Bump => 'b',
        }
    }

    pub fn from_char(ch: char) -> Option<Tile> {
        Some(match ch {
            '.' => Tile::Blank,
            '|' => Tile::Vertical,
            '-' => Tile::Horizontal,
            'r' => Tile::R,
            'j' => Tile::J,
            '+' => Tile::Cross,
            'b' => Tile::Bump,
            _ => return None,
        })
    }

    pub fn is_elbow(self) -> bool {
        matches!(self, Tile::R | Tile::J | Tile::Bump)
    }
}

/// A square grid of tiles whose pipes route correctly, with no two pipes
/// crossing twice and at most one bump tile. Without bump tiles this is a
/// bumpless pipe dream.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BpdRepr", into = "BpdRepr")]
pub struct AlmostBpd {
    grid: Vec<Vec<Tile>>,
}

/// A bumpless pipe dream.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "BpdRepr", into = "BpdRepr")]
pub struct Bpd {
    grid: Vec<Vec<Tile>>,
}

#[derive(Serialize, Deserialize)]
struct BpdRepr {
    n: usize,
    grid: Vec<String>,
}

fn parse_rows(n: usize, rows: &[String]) -> Result<Vec<Vec<Tile>>> {
    if rows.len() != n {
        return Err(Error::InvalidBpd(format!("{} rows for n = {n}", rows.len())));
    }
    rows.iter()
        .map(|row| {
            let tiles: Vec<Tile> = row
                .chars()
                .map(|ch| Tile::from_char(ch).ok_or_else(|| Error::InvalidBpd(format!("unknown tile '{ch}'"))))
                .collect::<Result<_>>()?;
            if tiles.len() != n {
                return Err(Error::InvalidBpd(format!("row {row:?} is not {n} tiles wide")));
            }
            Ok(tiles)
        })
        .collect()
}

fn render_rows(grid: &[Vec<Tile>]) -> Vec<String> {
    grid.iter().map(|row| row.iter().map(|t| t.to_char()).collect()).collect()
}

impl TryFrom<BpdRepr> for Bpd {
    type Error = Error;

    fn try_from(repr: BpdRepr) -> Result<Self> {
        Bpd::new(parse_rows(repr.n, &repr.grid)?)
    }
}

impl From<Bpd> for BpdRepr {
    fn from(b: Bpd) -> Self {
        BpdRepr { n: b.n(), grid: render_rows(&b.grid) }
    }
}

impl TryFrom<BpdRepr> for AlmostBpd {
    type Error = Error;

    fn try_from(repr: BpdRepr) -> Result<Self> {
        AlmostBpd::new(parse_rows(repr.n, &repr.grid)?)
    }
}

impl From<AlmostBpd> for BpdRepr {
    fn from(b: AlmostBpd) -> Self {
        BpdRepr { n: b.n(), grid: render_rows(&b.grid) }
    }
}

/// Checks routing, single crossings and the number of bump tiles.
fn check_grid(grid: &[Vec<Tile>], max_bumps: usize) -> Result<Layout> {
    let n = grid.len();
    if grid.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidBpd("grid is not square".into()));
    }
    let bumps = grid.iter().flatten().filter(|&&t| t == Tile::Bump).count();
    if bumps > max_bumps {
        return Err(Error::InvalidBpd(format!("{bumps} bump tiles")));
    }
    let layout = Layout::trace(grid)?;
    let mut pairs = HashSet::new();
    for (a, b, cell) in layout.crossings() {
        if !pairs.insert((a, b)) {
            return Err(Error::InvalidBpd(format!("pipes {a} and {b} cross twice, again at {cell:?}")));
        }
    }
    Ok(layout)
}

macro_rules! shared_grid_api {
    ($ty:ident) => {
        impl $ty {
            pub fn n(&self) -> usize {
                self.grid.len()
            }

            pub fn tile(&self, (r, c): Cell) -> Tile {
                self.grid[r - 1][c - 1]
            }

            pub fn grid(&self) -> &[Vec<Tile>] {
                &self.grid
            }

            /// Row strings over the tile alphabet, top row first.
            pub fn rows(&self) -> Vec<String> {
                render_rows(&self.grid)
            }

            pub fn permutation(&self) -> Permutation {
                let exits = self.layout().exits();
                let mut window = vec![0; self.n()];
                for (k, &row) in exits.iter().enumerate() {
                    window[row - 1] = k + 1;
                }
                Permutation::new(window).expect("pipes exit in distinct rows")
            }

            pub fn blanks(&self) -> Vec<Cell> {
                self.cells_with(Tile::Blank)
            }

            pub fn cells_with(&self, tile: Tile) -> Vec<Cell> {
                let n = self.n();
                (1..=n).flat_map(|r| (1..=n).map(move |c| (r, c))).filter(|&cell| self.tile(cell) == tile).collect()
            }

            pub(crate) fn layout(&self) -> Layout {
                Layout::trace(&self.grid).expect("validated at construction")
            }

            /// The pipes meeting at a crossing.
            pub fn pipes_at(&self, cell: Cell) -> Vec<usize> {
                let mut pipes = self.layout().occupancy()[cell.0 - 1][cell.1 - 1].clone();
                pipes.sort_unstable();
                pipes
            }

            /// Cell where pipes `a` and `b` cross, if they do.
            pub fn crossing_of(&self, a: usize, b: usize) -> Option<Cell> {
                let (a, b) = (a.min(b), a.max(b));
                self.layout().crossings().into_iter().find(|&(x, y, _)| (x, y) == (a, b)).map(|(_, _, cell)| cell)
            }
        }

        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for row in self.rows() {
                    writeln!(f, "{row}")?;
                }
                Ok(())
            }
        }
    };
}

shared_grid_api!(Bpd);
shared_grid_api!(AlmostBpd);

impl Bpd {
    pub fn new(grid: Vec<Vec<Tile>>) -> Result<Self> {
        check_grid(&grid, 0)?;
        Ok(Bpd { grid })
    }

    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows: Vec<String> = rows.iter().map(|s| s.as_ref().to_string()).collect();
        Bpd::new(parse_rows(rows.len(), &rows)?)
    }

    pub(crate) fn from_layout(layout: &Layout) -> Result<Self> {
        Bpd::new(layout.rasterize()?)
    }

    pub fn into_almost(self) -> AlmostBpd {
        AlmostBpd { grid: self.grid }
    }

    /// Number of blank tiles in each row, as a monomial exponent vector.
    pub fn weight(&self) -> Vec<usize> {
        let mut exp: Vec<usize> =
            self.grid.iter().map(|row| row.iter().filter(|&&t| t == Tile::Blank).count()).collect();
        while exp.last() == Some(&0) {
            exp.pop();
        }
        exp
    }
}

impl AlmostBpd {
    pub fn new(grid: Vec<Vec<Tile>>) -> Result<Self> {
        check_grid(&grid, 1)?;
        Ok(AlmostBpd { grid })
    }

    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let rows: Vec<String> = rows.iter().map(|s| s.as_ref().to_string()).collect();
        AlmostBpd::new(parse_rows(rows.len(), &rows)?)
    }

    pub(crate) fn from_layout(layout: &Layout) -> Result<Self> {
        AlmostBpd::new(layout.rasterize()?)
    }

    pub(crate) fn set_tile(&mut self, (r, c): Cell, tile: Tile) -> Result<()> {
        let mut grid = self.grid.clone();
        grid[r - 1][c - 1] = tile;
        *self = AlmostBpd::new(grid)?;
        Ok(())
    }

    pub fn bump_cell(&self) -> Option<Cell> {
        self.cells_with(Tile::Bump).into_iter().next()
    }

    /// The bumpless pipe dream, if there is no bump tile.
    pub fn to_bpd(&self) -> Result<Bpd> {
        Bpd::new(self.grid.clone())
    }
}

impl From<Bpd> for AlmostBpd {
    fn from(b: Bpd) -> Self {
        b.into_almost()
    }
}

pub fn validate_bpd(grid: &[Vec<Tile>]) -> Result<()> {
    check_grid(grid, 0).map(|_| ())
}

pub fn bpd_permutation(b: &Bpd) -> Permutation {
    b.permutation()
}

/// The bumpless pipe dream of `w` in which every pipe makes a single turn;
/// its blank tiles are exactly the Rothe diagram.
pub fn rothe_bpd(w: &Permutation) -> Bpd {
    rothe_bpd_of_size(w, w.size().max(1))
}

pub fn rothe_bpd_of_size(w: &Permutation, n: usize) -> Bpd {
    let n = n.max(w.size()).max(1);
    let inv = w.inverse();
    let mut grid = vec![vec![Tile::Blank; n]; n];
    for r in 1..=n {
        for c in 1..=n {
            let below_turn = r > inv.apply(c);
            let right_of_turn = c > w.apply(r);
            grid[r - 1][c - 1] = if r == inv.apply(c) {
                Tile::R
            } else {
                match (below_turn, right_of_turn) {
                    (true, true) => Tile::Cross,
                    (true, false) => Tile::Vertical,
                    (false, true) => Tile::Horizontal,
                    (false, false) => Tile::Blank,
                }
            };
        }
    }
    Bpd::new(grid).expect("the Rothe layout is a bumpless pipe dream")
}

fn rectangle(from: Cell, to: Cell) -> impl Iterator<Item = Cell> {
    (from.0..=to.0).flat_map(move |r| (from.1..=to.1).map(move |c| (r, c)))
}

/// An `R` tile at `from`, a blank at `to` strictly south-east of it, and no
/// other elbow in the rectangle they span.
pub fn droop_available(b: &Bpd, from: Cell, to: Cell) -> bool {
    let n = b.n();
    from.0 < to.0
        && from.1 < to.1
        && to.0 <= n
        && to.1 <= n
        && b.tile(from) == Tile::R
        && b.tile(to) == Tile::Blank
        && rectangle(from, to).all(|cell| cell == from || !b.tile(cell).is_elbow())
}

pub fn droop(b: &Bpd, from: Cell, to: Cell) -> Result<Bpd> {
    if !droop_available(b, from, to) {
        return Err(Error::DroopUnavailable { from, to });
    }
    let mut layout = b.layout();
    let label = layout.pipe_with_corner(Corner::r(from)).ok_or(Error::DroopUnavailable { from, to })?;
    layout.droop(label, from, to)?;
    Bpd::from_layout(&layout)
}

/// A `J` tile at `from` and a blank at `to` strictly north-west of it, where
/// the pipe through `from` turns right at the other two corners of the
/// rectangle they span and nothing else in the rectangle is an elbow.
pub fn undroop_available(b: &Bpd, from: Cell, to: Cell) -> bool {
    let (low_left, high_right) = ((from.0, to.1), (to.0, from.1));
    let shape_ok = to.0 < from.0
        && to.1 < from.1
        && from.0 <= b.n()
        && from.1 <= b.n()
        && b.tile(from) == Tile::J
        && b.tile(to) == Tile::Blank
        && b.tile(low_left) == Tile::R
        && b.tile(high_right) == Tile::R
        && rectangle(to, from).all(|cell| [from, low_left, high_right].contains(&cell) || !b.tile(cell).is_elbow());
    if !shape_ok {
        return false;
    }
    let layout = b.layout();
    let label = layout.pipe_with_corner(Corner::j(from));
    label.is_some()
        && label == layout.pipe_with_corner(Corner::r(low_left))
        && label == layout.pipe_with_corner(Corner::r(high_right))
}

/// Undroop from the `J` tile at `from` into the blank at `to`; the inverse of
/// the droop from `to` into `from`.
pub fn undroop(b: &Bpd, from: Cell, to: Cell) -> Result<Bpd> {
    if !undroop_available(b, from, to) {
        return Err(Error::DroopUnavailable { from, to });
    }
    let mut layout = b.layout();
    let label = layout.pipe_with_corner(Corner::j(from)).ok_or(Error::DroopUnavailable { from, to })?;
    layout.undroop(label, from, to)?;
    Bpd::from_layout(&layout)
}

/// Every available droop as `(from, to)`, in lexicographic order.
pub fn available_droops(b: &Bpd) -> Vec<(Cell, Cell)> {
    let n = b.n();
    let mut out = Vec::new();
    for from in b.cells_with(Tile::R) {
        for k in from.0 + 1..=n {
            for l in from.1 + 1..=n {
                if droop_available(b, from, (k, l)) {
                    out.push((from, (k, l)));
                }
            }
        }
    }
    out
}

/// Every available undroop as `(from, to)`, in lexicographic order.
pub fn available_undroops(b: &Bpd) -> Vec<(Cell, Cell)> {
    let mut out = Vec::new();
    for from in b.cells_with(Tile::J) {
        for k in 1..from.0 {
            for l in 1..from.1 {
                if undroop_available(b, from, (k, l)) {
                    out.push((from, (k, l)));
                }
            }
        }
    }
    out
}

/// `BPD(w)` on the `n(w) × n(w)` grid, sorted by row strings.
pub fn enumerate_bpd(w: &Permutation) -> Vec<Bpd> {
    enumerate_bpd_of_size(w, w.size().max(1))
}

/// Closure of the Rothe bumpless pipe dream under droops.
pub fn enumerate_bpd_of_size(w: &Permutation, n: usize) -> Vec<Bpd> {
    let start = rothe_bpd_of_size(w, n);
    let mut seen: BTreeSet<Vec<String>> = BTreeSet::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::from([start]);
    seen.insert(queue[0].rows());
    while let Some(b) = queue.pop_front() {
        for (from, to) in available_droops(&b) {
            let next = droop(&b, from, to).expect("available droops apply");
            if seen.insert(next.rows()) {
                queue.push_back(next);
            }
        }
        out.push(b);
    }
    out.sort_by_key(|b| b.rows());
    out
}

/// `m × m` grid with `b` in the top-left block and pipes `n+1..=m` turning
/// once on the diagonal.
pub fn embed(b: &Bpd, m: usize) -> Result<Bpd> {
    let n = b.n();
    if m < n {
        return Err(Error::GridTooSmall(m));
    }
    let mut grid = vec![vec![Tile::Blank; m]; m];
    for r in 1..=m {
        for c in 1..=m {
            grid[r - 1][c - 1] = if r <= n && c <= n {
                b.tile((r, c))
            } else if r <= n {
                Tile::Horizontal
            } else if c <= n || c < r {
                Tile::Vertical
            } else if c == r {
                Tile::R
            } else {
                Tile::Horizontal
            };
        }
    }
    Bpd::new(grid)
}

/// Drops trailing rows and columns that only carry fixed points turning on
/// the diagonal, undoing [`embed`].
pub fn trim(b: &Bpd) -> Bpd {
    let mut b = b.clone();
    loop {
        let n = b.n();
        if n <= 1 {
            return b;
        }
        let smaller = Bpd { grid: b.grid[..n - 1].iter().map(|row| row[..n - 1].to_vec()).collect() };
        match Bpd::new(smaller.grid.clone()) {
            Ok(s) if embed(&s, n).ok().as_ref() == Some(&b) => b = s,
            _ => return b,
        }
    }
}
