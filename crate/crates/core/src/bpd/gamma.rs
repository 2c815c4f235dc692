//! Weigandt's map from bumpless pipe dreams of a vexillary permutation to
//! flagged tableaux, and its inverse.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::perm::{Cell, Permutation};
use crate::tableau::Tableau;

use super::{enumerate_bpd, Bpd, Tile};

fn check_member(b: &Bpd, v: &Permutation) -> Result<()> {
    if !v.is_vexillary() {
        return Err(Error::NotVexillary(v.to_string()));
    }
    let found = b.permutation();
    if found != *v {
        return Err(Error::InvalidBpd(format!("pipe dream is for {found}, not {v}")));
    }
    Ok(())
}

/// Fills each blank tile with the number of distinct pipes passing through
/// the cells above it, slides the blanks north-west along their diagonals
/// into `λ(v)`, then adds the row index.
pub fn gamma(b: &Bpd, v: &Permutation) -> Result<Tableau> {
    check_member(b, v)?;
    let occupancy = b.layout().occupancy();
    let mut by_diagonal: BTreeMap<isize, Vec<usize>> = BTreeMap::new();
    for (r, c) in b.blanks() {
        let above: BTreeSet<usize> = (1..r).flat_map(|rr| occupancy[rr - 1][c - 1].iter().copied()).collect();
        by_diagonal.entry(c as isize - r as isize).or_default().push(above.len());
    }
    let shape = v.shape();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
    let mut placed: BTreeMap<isize, usize> = BTreeMap::new();
    for (i, j) in shape.cells() {
        let d = j as isize - i as isize;
        let k = placed.entry(d).or_insert(0);
        let count = by_diagonal
            .get(&d)
            .and_then(|list| list.get(*k))
            .ok_or_else(|| Error::ShapeMismatch(format!("too few blank tiles on diagonal {d}")))?;
        rows[i - 1][j - 1] = count + i;
        *k += 1;
    }
    if placed.iter().any(|(d, &k)| by_diagonal[d].len() != k) || by_diagonal.len() != placed.len() {
        return Err(Error::ShapeMismatch(format!("blank tiles do not slide into {shape}")));
    }
    Tableau::new(rows)
}

/// Inverts [`gamma`]. Each entry of `T` names the row of its blank tile on
/// the entry's diagonal; the pipes are then rebuilt around those blanks.
pub fn gamma_inverse(t: &Tableau, v: &Permutation) -> Result<Bpd> {
    if !v.is_vexillary() {
        return Err(Error::NotVexillary(v.to_string()));
    }
    let flag = v.flag()?;
    if t.shape() != v.shape() || !t.is_flagged(&flag) {
        return Err(Error::NoPreimage(format!("{t} is not a flagged tableau for {v}")));
    }
    let n = v.size().max(1);
    let mut blanks = BTreeSet::new();
    for (i, row) in t.rows().iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            let col = (j + 1 + x).checked_sub(i + 1).filter(|&c| c >= 1 && c <= n);
            match col {
                Some(c) if x <= n => {
                    blanks.insert((x, c));
                }
                _ => return Err(Error::NoPreimage(format!("entry {x} at ({},{}) leaves the grid", i + 1, j + 1))),
            }
        }
    }
    reconstruct_from_blanks(n, &blanks)
        .into_iter()
        .find(|b| b.permutation() == *v && gamma(b, v).as_ref() == Ok(t))
        .ok_or_else(|| Error::NoPreimage(format!("no pipe dream of {v} has gamma {t}")))
}

/// Searches `BPD(v)` for the preimage; a cross-check for [`gamma_inverse`].
pub fn gamma_inverse_by_lookup(t: &Tableau, v: &Permutation) -> Result<Bpd> {
    if !v.is_vexillary() {
        return Err(Error::NotVexillary(v.to_string()));
    }
    enumerate_bpd(v)
        .into_iter()
        .find(|b| gamma(b, v).as_ref() == Ok(t))
        .ok_or_else(|| Error::NoPreimage(format!("no pipe dream of {v} has gamma {t}")))
}

/// Every bumpless pipe dream on the `n × n` grid whose blank tiles are
/// exactly `blanks`.
pub fn reconstruct_from_blanks(n: usize, blanks: &BTreeSet<Cell>) -> Vec<Bpd> {
    let mut out = Vec::new();
    let mut grid = vec![vec![Tile::Blank; n]; n];
    let mut up = vec![true; n];
    fill(n, 0, &mut up, false, &mut grid, blanks, &mut out);
    out
}

fn fill(
    n: usize,
    idx: usize,
    up: &mut Vec<bool>,
    left: bool,
    grid: &mut Vec<Vec<Tile>>,
    blanks: &BTreeSet<Cell>,
    out: &mut Vec<Bpd>,
) {
    if idx == n * n {
        if up.iter().all(|&x| !x) {
            if let Ok(b) = Bpd::new(grid.clone()) {
                out.push(b);
            }
        }
        return;
    }
    // bottom row first, left to right
    let r = n - idx / n;
    let c = idx % n + 1;
    let left = c > 1 && left;
    let blank = blanks.contains(&(r, c));
    let choices: &[(Tile, bool, bool)] = match (up[c - 1], left, blank) {
        (false, false, _) => &[(Tile::Blank, false, false)],
        (_, _, true) => return,
        (true, false, false) => &[(Tile::Vertical, true, false), (Tile::R, false, true)],
        (false, true, false) => &[(Tile::Horizontal, false, true), (Tile::J, true, false)],
        (true, true, false) => &[(Tile::Cross, true, true)],
    };
    for &(tile, top, right) in choices {
        if tile == Tile::Blank && !blank {
            return;
        }
        if c == n && !right {
            continue;
        }
        let saved = up[c - 1];
        up[c - 1] = top;
        grid[r - 1][c - 1] = tile;
        fill(n, idx + 1, up, right, grid, blanks, out);
        up[c - 1] = saved;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bpd::rothe_bpd;
    use crate::tableau::enumerate_flagged;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn bpd_12587634() -> Bpd {
        Bpd::from_rows(&[
            "..r-----", "r-j.r---", "|...|.r-", "|r--jrjr", "||..rjr+", "||..|r++", "||r-++++", "|||r++++",
        ])
        .unwrap()
    }

    #[test]
    fn worked_example_12587634() {
        let b = bpd_12587634();
        let v = p("12587634");
        assert_eq!(b.permutation(), v);
        let expected = t(&[&[1, 1, 2, 3], &[3, 3, 3], &[5, 5], &[6, 6]]);
        assert_eq!(gamma(&b, &v).unwrap(), expected);
        assert_eq!(gamma_inverse(&expected, &v).unwrap(), b);
    }

    #[test]
    fn identity_gives_empty_tableau() {
        let id = Permutation::identity();
        assert_eq!(gamma(&rothe_bpd(&id), &id).unwrap(), Tableau::empty());
        assert_eq!(gamma_inverse(&Tableau::empty(), &id).unwrap(), rothe_bpd(&id));
    }

    #[test]
    fn non_vexillary_rejected() {
        let w = p("2143");
        assert!(matches!(gamma(&rothe_bpd(&w), &w), Err(Error::NotVexillary(_))));
    }

    #[test]
    fn dominant_rothe_gives_row_indices() {
        for w in Permutation::all_of_size(5) {
            let d = w.rothe_diagram();
            let shape = w.shape();
            if d != shape.cells() {
                continue;
            }
            let tab = gamma(&rothe_bpd(&w), &w).unwrap();
            for (i, row) in tab.rows().iter().enumerate() {
                assert!(row.iter().all(|&x| x == i + 1), "{w}");
            }
        }
    }

    #[test]
    fn gamma_bijects_onto_flagged_tableaux() {
        for w in Permutation::all_of_size(5).into_iter().filter(Permutation::is_vexillary) {
            let flag = w.flag().unwrap();
            let mut images = Vec::new();
            for b in enumerate_bpd(&w) {
                let tab = gamma(&b, &w).unwrap();
                assert!(tab.is_flagged(&flag), "{w}: {tab}");
                assert_eq!(gamma_inverse(&tab, &w).unwrap(), b);
                images.push(tab);
            }
            images.sort();
            assert_eq!(images, enumerate_flagged(&w.shape(), &flag).unwrap(), "{w}");
        }
    }

    #[test]
    fn no_crossings_inside_rho() {
        for w in Permutation::all_of_size(5).into_iter().filter(Permutation::is_vexillary) {
            let rho = w.rothe_hull();
            for b in enumerate_bpd(&w) {
                assert!(b.cells_with(Tile::Cross).iter().all(|&cell| !rho.contains(cell)), "{w}\n{b}");
            }
        }
    }

    #[test]
    fn lookup_agrees() {
        let v = p("1432");
        for tab in enumerate_flagged(&v.shape(), &v.flag().unwrap()).unwrap() {
            assert_eq!(gamma_inverse(&tab, &v).unwrap(), gamma_inverse_by_lookup(&tab, &v).unwrap());
        }
        let outside = t(&[&[3, 3], &[3]]);
        assert!(matches!(gamma_inverse(&outside, &v), Err(Error::NoPreimage(_))));
    }
}
