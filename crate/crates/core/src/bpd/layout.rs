//! Pipes of a (possibly almost) bumpless pipe dream as lists of turns.
//!
//! Pipe `c` starts at the bottom of column `c` heading up. Its route is the
//! list of turns `R, J, R, .., R`: at an `R` it turns from up to right, at a
//! `J` from right to up. The last `R` sends it off the right edge. Moves are
//! edits of these lists followed by a re-rasterisation, which is where any
//! illegal overlap is caught.

use crate::error::{Error, Result};
use crate::perm::Cell;

use super::Tile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) enum Turn {
    R,
    J,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub(crate) struct Corner {
    pub turn: Turn,
    pub cell: Cell,
}

impl Corner {
    pub fn r(cell: Cell) -> Self {
        Corner { turn: Turn::R, cell }
    }

    pub fn j(cell: Cell) -> Self {
        Corner { turn: Turn::J, cell }
    }
}

const V: u8 = 1;
const H: u8 = 2;
const RT: u8 = 4;
const JT: u8 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Layout {
    pub n: usize,
    /// `pipes[c - 1]` is the route of pipe `c`.
    pub pipes: Vec<Vec<Corner>>,
}

impl Layout {
    /// Follows every pipe from the bottom edge through the tiles.
    pub fn trace(grid: &[Vec<Tile>]) -> Result<Layout> {
        let n = grid.len();
        let bad = |msg: String| Error::InvalidBpd(msg);
        let mut pipes = Vec::with_capacity(n);
        for start in 1..=n {
            let mut route = Vec::new();
            let (mut r, mut c, mut up) = (n, start, true);
            let mut steps = 0;
            loop {
                steps += 1;
                if steps > 4 * n * n {
                    return Err(bad(format!("pipe {start} loops")));
                }
                if c > n {
                    break;
                }
                if r == 0 {
                    return Err(bad(format!("pipe {start} leaves through the top of column {c}")));
                }
                let tile = grid[r - 1][c - 1];
                match (up, tile) {
                    (true, Tile::Vertical | Tile::Cross) => r -= 1,
                    (true, Tile::R | Tile::Bump) => {
                        route.push(Corner::r((r, c)));
                        up = false;
                        c += 1;
                    }
                    (false, Tile::Horizontal | Tile::Cross) => c += 1,
                    (false, Tile::J | Tile::Bump) => {
                        route.push(Corner::j((r, c)));
                        up = true;
                        r -= 1;
                    }
                    _ => {
                        let side = if up { "bottom" } else { "left" };
                        return Err(bad(format!(
                            "pipe {start} enters ({r},{c}) from the {side} but the tile is '{}'",
                            tile.to_char()
                        )));
                    }
                }
            }
            pipes.push(route);
        }
        let layout = Layout { n, pipes };
        if layout.rasterize()? != grid {
            return Err(bad("tiles carry pipe segments that no pipe uses".into()));
        }
        Ok(layout)
    }

    /// Cells visited by pipe `label` with the piece it contributes there.
    fn pieces(&self, label: usize) -> Vec<(Cell, u8)> {
        let n = self.n;
        let route = &self.pipes[label - 1];
        let mut out = Vec::new();
        let mut from = (n + 1, label);
        for (k, corner) in route.iter().enumerate() {
            let (r, c) = corner.cell;
            match corner.turn {
                Turn::R => {
                    // vertical run from the previous turn (or the bottom edge)
                    for rr in (r + 1..from.0).rev() {
                        out.push(((rr, c), V));
                    }
                    out.push(((r, c), RT));
                }
                Turn::J => {
                    for cc in from.1 + 1..c {
                        out.push(((r, cc), H));
                    }
                    out.push(((r, c), JT));
                }
            }
            from = (r, c);
            if k + 1 == route.len() {
                for cc in c + 1..=n {
                    out.push(((r, cc), H));
                }
            }
        }
        out
    }

    /// Exit row of every pipe.
    pub fn exits(&self) -> Vec<usize> {
        self.pipes.iter().map(|route| route.last().map_or(0, |c| c.cell.0)).collect()
    }

    pub fn check_routes(&self) -> Result<()> {
        for label in 1..=self.n {
            check_route(self.n, label, &self.pipes[label - 1])?;
        }
        Ok(())
    }

    pub fn rasterize(&self) -> Result<Vec<Vec<Tile>>> {
        self.check_routes()?;
        let n = self.n;
        let mut mask = vec![vec![0u8; n]; n];
        for label in 1..=n {
            for ((r, c), piece) in self.pieces(label) {
                let slot = &mut mask[r - 1][c - 1];
                if *slot & piece != 0 {
                    return Err(Error::InvalidBpd(format!("two pipes share a segment at ({r},{c})")));
                }
                *slot |= piece;
            }
        }
        let mut grid = vec![vec![Tile::Blank; n]; n];
        for r in 0..n {
            for c in 0..n {
                grid[r][c] = match mask[r][c] {
                    0 => Tile::Blank,
                    V => Tile::Vertical,
                    H => Tile::Horizontal,
                    RT => Tile::R,
                    JT => Tile::J,
                    m if m == V | H => Tile::Cross,
                    m if m == RT | JT => Tile::Bump,
                    _ => {
                        return Err(Error::InvalidBpd(format!(
                            "incompatible pipe pieces meet at ({},{})",
                            r + 1,
                            c + 1
                        )))
                    }
                };
            }
        }
        let mut exits = self.exits();
        exits.sort_unstable();
        if exits != (1..=n).collect::<Vec<_>>() {
            return Err(Error::InvalidBpd("two pipes leave through the same row".into()));
        }
        Ok(grid)
    }

    /// Labels of the pipes passing through each cell, per cell.
    pub fn occupancy(&self) -> Vec<Vec<Vec<usize>>> {
        let n = self.n;
        let mut occ = vec![vec![Vec::new(); n]; n];
        for label in 1..=n {
            for ((r, c), _) in self.pieces(label) {
                occ[r - 1][c - 1].push(label);
            }
        }
        occ
    }

    /// Pairs `(a, b)`, `a < b`, meeting at each crossing, with the cell.
    pub fn crossings(&self) -> Vec<(usize, usize, Cell)> {
        let n = self.n;
        let mut seen: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n * n];
        for label in 1..=n {
            for ((r, c), piece) in self.pieces(label) {
                if piece == V || piece == H {
                    seen[(r - 1) * n + c - 1].push((label, piece));
                }
            }
        }
        let mut out = Vec::new();
        for (idx, list) in seen.iter().enumerate() {
            if list.len() == 2 {
                let (a, b) = (list[0].0.min(list[1].0), list[0].0.max(list[1].0));
                out.push((a, b, (idx / n + 1, idx % n + 1)));
            }
        }
        out
    }

    pub fn pipe_with_corner(&self, corner: Corner) -> Option<usize> {
        (1..=self.n).find(|&l| self.pipes[l - 1].contains(&corner))
    }

    /// Replaces the `R` turn of `label` at `from` by a detour turning right in
    /// row `to.0`, up in column `to.1` and right again in row `from.0`.
    pub fn droop(&mut self, label: usize, from: Cell, to: Cell) -> Result<()> {
        let route = &mut self.pipes[label - 1];
        let k = route.iter().position(|&c| c == Corner::r(from)).ok_or(Error::DroopUnavailable { from, to })?;
        route.splice(k..=k, [Corner::r((to.0, from.1)), Corner::j(to), Corner::r((from.0, to.1))]);
        normalize(route);
        check_route(self.n, label, route).map_err(|_| Error::DroopUnavailable { from, to })
    }

    /// Inverse of [`Layout::droop`]: the `J` turn of `label` at `from` is
    /// pulled up and left so the pipe turns at `to`.
    pub fn undroop(&mut self, label: usize, from: Cell, to: Cell) -> Result<()> {
        let route = &mut self.pipes[label - 1];
        let k = route.iter().position(|&c| c == Corner::j(from)).ok_or(Error::DroopUnavailable { from, to })?;
        route.splice(k..=k, [Corner::j((from.0, to.1)), Corner::r(to), Corner::j((to.0, from.1))]);
        normalize(route);
        check_route(self.n, label, route).map_err(|_| Error::DroopUnavailable { from, to })
    }
}

/// Removes back-to-back turns in one cell, which amount to going straight.
fn normalize(route: &mut Vec<Corner>) {
    let mut k = 0;
    while k + 1 < route.len() {
        if route[k].cell == route[k + 1].cell && route[k].turn != route[k + 1].turn {
            route.drain(k..k + 2);
            k = k.saturating_sub(1);
        } else {
            k += 1;
        }
    }
}

fn check_route(n: usize, label: usize, route: &[Corner]) -> Result<()> {
    let bad = || Error::InvalidBpd(format!("pipe {label} does not travel up and right"));
    let first = route.first().ok_or_else(bad)?;
    if first.turn != Turn::R || first.cell.1 != label || route.last().map(|c| c.turn) != Some(Turn::R) {
        return Err(bad());
    }
    for corner in route {
        let (r, c) = corner.cell;
        if r == 0 || r > n || c == 0 || c > n {
            return Err(bad());
        }
    }
    for pair in route.windows(2) {
        let ((r0, c0), (r1, c1)) = (pair[0].cell, pair[1].cell);
        let ok = match (pair[0].turn, pair[1].turn) {
            (Turn::R, Turn::J) => r0 == r1 && c1 > c0,
            (Turn::J, Turn::R) => c0 == c1 && r1 < r0,
            _ => false,
        };
        if !ok {
            return Err(bad());
        }
    }
    Ok(())
}

/// Converts the crossing at `cell` into a bump: the pipe arriving from the
/// left turns up and the pipe arriving from below turns right.
pub(crate) fn cross_to_bump(grid: &mut [Vec<Tile>], cell: Cell) -> Result<()> {
    let tile = &mut grid[cell.0 - 1][cell.1 - 1];
    if *tile != Tile::Cross {
        return Err(Error::InvalidBpd(format!("no crossing at {cell:?}")));
    }
    *tile = Tile::Bump;
    Ok(())
}
