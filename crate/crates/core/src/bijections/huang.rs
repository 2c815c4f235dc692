//! Huang bumps on bumpless pipe dreams, built from the two Monk moves.

use crate::bpd::{embed, AlmostBpd, Bpd, Corner, Tile};
use crate::error::{Error, Result};
use crate::perm::Cell;

use super::little::check_bump_pair;
use super::trace::{BumpStep, BumpTrace};

/// Droops the pipe turning right at `cell` into the nearest cell to the
/// south-east whose row and column neighbours along the way are not
/// crossings. Returns the new diagram and the south-east corner.
pub fn min_droop(b: &AlmostBpd, cell: Cell) -> Result<(AlmostBpd, Cell)> {
    let (x, y) = cell;
    let n = b.n();
    let mut layout = b.layout();
    let pipe = layout
        .pipe_with_corner(Corner::r(cell))
        .ok_or_else(|| Error::InvalidBpd(format!("no pipe turns right at {cell:?}")))?;
    let down = (x + 1..=n).find(|&r| b.tile((r, y)) != Tile::Cross).ok_or(Error::GridTooSmall(n))?;
    let right = (y + 1..=n).find(|&c| b.tile((x, c)) != Tile::Cross).ok_or(Error::GridTooSmall(n))?;
    let to = (down, right);
    layout.droop(pipe, cell, to)?;
    Ok((AlmostBpd::from_layout(&layout)?, to))
}

/// Moves the bump at `cell` to the crossing of its two pipes, which
/// becomes the new bump. Returns the new diagram and the new bump cell.
pub fn cross_bump_swap(b: &AlmostBpd, cell: Cell) -> Result<(AlmostBpd, Cell)> {
    if b.tile(cell) != Tile::Bump {
        return Err(Error::InvalidBpd(format!("no bump at {cell:?}")));
    }
    let layout = b.layout();
    let p = layout.pipe_with_corner(Corner::j(cell)).expect("bump has a left pipe");
    let q = layout.pipe_with_corner(Corner::r(cell)).expect("bump has a lower pipe");
    let cross = b.crossing_of(p, q).ok_or(Error::PipesDoNotCross(p.min(q), p.max(q)))?;
    let mut grid = b.grid().to_vec();
    grid[cell.0 - 1][cell.1 - 1] = Tile::Cross;
    grid[cross.0 - 1][cross.1 - 1] = Tile::Bump;
    Ok((AlmostBpd::new(grid)?, cross))
}

pub fn huang_bump(b: &Bpd, i: usize, j: usize) -> Result<Bpd> {
    huang_bump_traced(b, i, j).map(|(out, _)| out)
}

/// `H_ij`, enlarging the grid by one or two when a droop runs off the edge.
pub fn huang_bump_traced(b: &Bpd, i: usize, j: usize) -> Result<(Bpd, BumpTrace)> {
    huang_run(b, i, j).map(|run| (run.output, run.trace))
}

/// Every almost bumpless pipe dream passed through by `H_ij`, in order.
pub fn huang_states(b: &Bpd, i: usize, j: usize) -> Result<Vec<AlmostBpd>> {
    huang_run(b, i, j).map(|run| run.states)
}

struct HuangRun {
    output: Bpd,
    trace: BumpTrace,
    states: Vec<AlmostBpd>,
}

fn huang_run(b: &Bpd, i: usize, j: usize) -> Result<HuangRun> {
    check_bump_pair(&b.permutation(), i, j)?;
    let n = b.n();
    let mut last = Error::GridTooSmall(n);
    for m in n..=n + 2 {
        let grid = if m == n { b.clone() } else { embed(b, m)? };
        match huang_on_grid(&grid, i, j) {
            Ok(mut run) => {
                if m > n {
                    run.trace.steps.insert(0, BumpStep::Embed { n: m });
                }
                return Ok(run);
            }
            Err(Error::GridTooSmall(_)) => last = Error::GridTooSmall(m),
            Err(e) => return Err(e),
        }
    }
    Err(last)
}

fn huang_on_grid(b: &Bpd, i: usize, j: usize) -> Result<HuangRun> {
    let n = b.n();
    let mut trace = BumpTrace::new((i, j));
    let start = b.crossing_of(i, j).ok_or(Error::PipesDoNotCross(i, j))?;
    let mut current = b.clone().into_almost();
    current.set_tile(start, Tile::Bump)?;
    trace.steps.push(BumpStep::Open { cell: start });
    let mut states = vec![current.clone()];
    let mut at = start;
    let cap = (b.permutation().length() + 1) * n * n;
    for _ in 0..cap {
        let pipe = current.layout().pipe_with_corner(Corner::r(at)).expect("min-droop starts at a right turn");
        let (next, to) = min_droop(&current, at)?;
        trace.steps.push(BumpStep::MinDroop { from: at, to });
        states.push(next.clone());
        current = next;
        match current.tile(to) {
            Tile::J => {
                let route = &current.layout().pipes[pipe - 1];
                let k = route.iter().position(|&c| c == Corner::j(to)).expect("droop ends in a left turn");
                at = route[k - 1].cell;
            }
            Tile::Bump => {
                let layout = current.layout();
                let lower = layout.pipe_with_corner(Corner::r(to)).expect("bump has a lower pipe");
                if current.crossing_of(pipe, lower).is_some() {
                    let (next, cross) = cross_bump_swap(&current, to)?;
                    trace.steps.push(BumpStep::CrossBumpSwap { bump: to, cross });
                    states.push(next.clone());
                    current = next;
                    at = cross;
                } else {
                    current.set_tile(to, Tile::Cross)?;
                    trace.steps.push(BumpStep::Close { cell: to });
                    let output = current.to_bpd()?;
                    return Ok(HuangRun { output, trace, states });
                }
            }
            other => {
                return Err(Error::InvalidBpd(format!("min-droop ended on '{}' at {to:?}", other.to_char())));
            }
        }
    }
    Err(Error::IterationCap { what: "huang bump", cap })
}
