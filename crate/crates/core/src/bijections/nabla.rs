//! Peeling a bumpless pipe dream one blank at a time, and the resulting
//! bijection `φ` onto reduced compatible sequences.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bpd::layout::cross_to_bump;
use crate::bpd::{enumerate_bpd, Bpd, Corner, Layout};
use crate::error::{Error, Result};
use crate::perm::{Cell, Permutation};
use crate::pipedream::{CompatibleSequence, PipeDream};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PopResult {
    pub row: usize,
    pub letter: usize,
    pub next: Bpd,
}

/// Droops every pipe other than `ignore` that turns up and then right in
/// column `j` strictly between rows `top` and `bottom`, so that it makes the
/// same climb one column further right.
fn shift_climbs_right(layout: &mut Layout, top: usize, bottom: usize, j: usize, ignore: usize) -> Result<()> {
    for label in 1..=layout.n {
        if label == ignore {
            continue;
        }
        let climb = layout.pipes[label - 1].windows(2).find_map(|pair| {
            let (k_low, c_low) = pair[0].cell;
            let (k, c) = pair[1].cell;
            let is_climb = pair[0] == Corner::j((k_low, c_low)) && pair[1] == Corner::r((k, c));
            (is_climb && c == j && c_low == j && top < k && k < k_low && k_low < bottom).then_some((k, k_low))
        });
        if let Some((k, k_low)) = climb {
            layout.droop(label, (k, j), (k_low, j + 1))?;
        }
    }
    Ok(())
}

fn pipe_through(layout: &Layout, cell: Cell) -> Result<usize> {
    match layout.occupancy()[cell.0 - 1][cell.1 - 1][..] {
        [p] => Ok(p),
        _ => Err(Error::InvalidBpd(format!("expected a single pipe at {cell:?}"))),
    }
}

/// One step of the peeling: returns `pop(B) = (r; a)` and `∇B`.
pub fn pop_nabla(b: &Bpd) -> Result<PopResult> {
    let n = b.n();
    let first = b.blanks().into_iter().next().ok_or(Error::NoBlankTiles)?;
    let row = first.0;
    let start = *b.blanks().iter().rev().find(|cell| cell.0 == row).expect("row has a blank");
    let mut layout = b.layout();
    let mut mark = start;
    for _ in 0..=n * n {
        let occupancy = layout.occupancy();
        let (i, mut j) = mark;
        while j < n && occupancy[i - 1][j].is_empty() {
            j += 1;
        }
        if j == n {
            return Err(Error::InvalidBpd(format!("row {i} ends in a blank tile")));
        }
        let p = pipe_through(&layout, (i, j + 1))?;
        if p != j + 1 {
            let i_low = layout.pipes[p - 1]
                .iter()
                .find(|c| *c == &Corner::j((c.cell.0, j + 1)) && c.cell.0 > i)
                .map(|c| c.cell.0)
                .ok_or_else(|| {
                    Error::InvalidBpd(format!("pipe {p} does not enter column {} from below row {i}", j + 1))
                })?;
            shift_climbs_right(&mut layout, i, i_low, j, p)?;
            layout.undroop(p, (i_low, j + 1), (i, j))?;
            mark = (i_low, j + 1);
            continue;
        }
        let cross = layout
            .crossings()
            .into_iter()
            .find(|&(a, c, cell)| (a, c) == (j, j + 1) && cell.1 == j + 1 && cell.0 > i)
            .map(|(_, _, cell)| cell)
            .ok_or(Error::PipesDoNotCross(j, j + 1))?;
        let mut grid = layout.rasterize()?;
        cross_to_bump(&mut grid, cross)?;
        layout = Layout::trace(&grid)?;
        shift_climbs_right(&mut layout, i, cross.0, j, j)?;
        layout.undroop(j, cross, (i, j))?;
        let next = Bpd::from_layout(&layout)?;
        return Ok(PopResult { row, letter: j, next });
    }
    Err(Error::IterationCap { what: "pop", cap: n * n + 1 })
}

/// Repeated pops, recorded as a biword.
pub fn phi(b: &Bpd) -> Result<CompatibleSequence> {
    let mut rows = Vec::new();
    let mut letters = Vec::new();
    let mut current = b.clone();
    while !current.blanks().is_empty() {
        let step = pop_nabla(&current)?;
        rows.push(step.row);
        letters.push(step.letter);
        current = step.next;
    }
    Ok(CompatibleSequence::new_unchecked(rows, letters))
}

/// The bumpless pipe dream whose `φ` is `c`, found by search.
pub fn phi_inverse(c: &CompatibleSequence) -> Result<Bpd> {
    c.validate(None).map_err(Error::NotCompatible)?;
    PhiInverse::new(&c.permutation())?.get(c)
}

pub fn phi_inverse_pd(p: &PipeDream) -> Result<Bpd> {
    phi_inverse(&p.to_biword())
}

/// `φ` tabulated over one `BPD(w)`, for repeated inversion.
#[derive(Debug, Clone)]
pub struct PhiInverse {
    table: HashMap<CompatibleSequence, Bpd>,
}

impl PhiInverse {
    pub fn new(w: &Permutation) -> Result<Self> {
        let mut table = HashMap::new();
        for b in enumerate_bpd(w) {
            table.insert(phi(&b)?, b);
        }
        Ok(PhiInverse { table })
    }

    pub fn get(&self, c: &CompatibleSequence) -> Result<Bpd> {
        self.table.get(c).cloned().ok_or_else(|| Error::NoPreimage(format!("no bumpless pipe dream maps to {c}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bpd::{gamma, rothe_bpd};
    use crate::pipedream::enumerate_pd;
    use crate::tableau::{jdt, Tableau};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn bpd(rows: &[&str]) -> Bpd {
        Bpd::from_rows(rows).unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn pops(b: &Bpd, count: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut cur = b.clone();
        for _ in 0..count {
            let step = pop_nabla(&cur).unwrap();
            out.push((step.row, step.letter));
            cur = step.next;
        }
        out
    }

    #[test]
    fn pop_chain_of_21543() {
        let b = bpd(&["..r--", ".r+--", "rj|.r", "|rjr+", "||r++"]);
        assert_eq!(b.permutation(), p("21543"));
        assert_eq!(pops(&b, 4), vec![(1, 3), (1, 1), (2, 4), (3, 3)]);
        assert_eq!(phi(&b).unwrap(), CompatibleSequence::new(vec![1, 1, 2, 3], vec![3, 1, 4, 3]).unwrap());
    }

    #[test]
    fn phi_of_12587634() {
        let b = bpd(&["..r-----", "r-j.r---", "|...|.r-", "|r--jrjr", "||..rjr+", "||..|r++", "||r-++++", "|||r++++"]);
        let w = p("12587634");
        let rows = vec![1, 1, 2, 3, 3, 3, 3, 5, 5, 6, 6];
        let expected = CompatibleSequence::new(rows.clone(), vec![6, 4, 3, 7, 6, 5, 4, 6, 5, 7, 6]).unwrap();
        assert_eq!(phi(&b).unwrap(), expected);
        assert_eq!(expected.validate(Some(&w)), Ok(()));
        assert_eq!(phi_inverse(&expected).unwrap(), b);
        // The drawn pipe dream has its first cross one column too far left;
        // that biword belongs to a different permutation.
        let drawn = CompatibleSequence::new(rows, vec![5, 4, 3, 7, 6, 5, 4, 6, 5, 7, 6]).unwrap();
        assert_eq!(drawn.permutation(), p("12685734"));
        let tableau = Tableau::new(vec![vec![1, 1, 2, 3], vec![3, 3, 3], vec![5, 5], vec![6, 6]]).unwrap();
        assert_eq!(crate::insertion::q_tableau(&expected).unwrap(), tableau);
        assert_eq!(gamma(&b, &w).unwrap(), tableau);
    }

    #[test]
    fn jdt_of_gamma_follows_pops() {
        let b = bpd(&["..r----", ".rj.r--", ".|..|r-", ".|.rj|r", "r+-+-++", "||r+-++", "||||r++"]);
        let v = b.permutation();
        assert!(v.is_grassmannian());
        let first = pop_nabla(&b).unwrap();
        let second = pop_nabla(&first.next).unwrap();
        assert_eq!((first.row, first.letter, second.row, second.letter), (1, 5, 1, 1));
        let g0 = gamma(&b, &v).unwrap();
        let g1 = gamma(&first.next, &first.next.permutation()).unwrap();
        let g2 = gamma(&second.next, &second.next.permutation()).unwrap();
        assert_eq!(g0, t(&[&[1, 1, 2], &[2, 3, 3], &[3, 4], &[4]]));
        assert_eq!(g1, t(&[&[1, 2, 3], &[2, 3], &[3, 4], &[4]]));
        assert_eq!(g2, t(&[&[2, 2, 3], &[3, 3], &[4, 4]]));
        assert_eq!(jdt(&g0).unwrap(), g1);
        assert_eq!(jdt(&g1).unwrap(), g2);
    }

    #[test]
    fn single_inversion() {
        for w in Permutation::all_of_size(5).into_iter().filter(|w| w.length() == 1) {
            let b = rothe_bpd(&w);
            let (r, a) = w.rothe_diagram()[0];
            let step = pop_nabla(&b).unwrap();
            assert_eq!((step.row, step.letter), (r, a));
            assert!(step.next.permutation().is_identity());
        }
        let id = rothe_bpd(&Permutation::identity());
        assert_eq!(pop_nabla(&id), Err(Error::NoBlankTiles));
        assert!(phi(&id).unwrap().is_empty());
        assert_eq!(phi_inverse(&CompatibleSequence::empty()).unwrap(), id);
    }

    #[test]
    fn pop_lowers_length_and_tail_is_phi_of_nabla() {
        for w in Permutation::all_of_size(5) {
            for b in enumerate_bpd(&w) {
                if w.is_identity() {
                    continue;
                }
                let step = pop_nabla(&b).unwrap();
                let shorter = w.swap_values(step.letter, step.letter + 1).unwrap();
                assert_eq!(shorter.length_delta, -1, "{w}\n{b}");
                assert_eq!(step.next.permutation(), shorter.perm);
                assert_eq!(phi(&b).unwrap().tail(), phi(&step.next).unwrap());
            }
        }
    }

    #[test]
    fn phi_is_a_bijection_onto_pipe_dreams() {
        for w in Permutation::all_of_size(5) {
            let mut images: Vec<CompatibleSequence> = enumerate_bpd(&w).iter().map(|b| phi(b).unwrap()).collect();
            for c in &images {
                assert_eq!(c.validate(Some(&w)), Ok(()), "{w}: {c}");
            }
            images.sort();
            let mut expected: Vec<CompatibleSequence> = enumerate_pd(&w).iter().map(PipeDream::to_biword).collect();
            expected.sort();
            assert_eq!(images, expected, "{w}");
        }
    }

    #[test]
    fn inverse_round_trip() {
        for w in Permutation::all_of_size(4) {
            let inverse = PhiInverse::new(&w).unwrap();
            for b in enumerate_bpd(&w) {
                assert_eq!(inverse.get(&phi(&b).unwrap()).unwrap(), b);
            }
        }
    }
}
