//! Partitions, straight and skew tableaux, flagged enumeration and jeu de
//! taquin.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{Cell, Flag};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Trailing zeros are dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_r`, zero past the last part.
    pub fn part(&self, r: usize) -> usize {
        if r >= 1 && r <= self.0.len() {
            self.0[r - 1]
        } else {
            0
        }
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && c <= self.part(r)
    }

    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|r| other.part(r) <= self.part(r))
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (i, &p) in self.0.iter().enumerate() {
            out.extend((1..=p).map(|c| (i + 1, c)));
        }
        out
    }

    /// Cells whose removal leaves a partition, top to bottom.
    pub fn corners(&self) -> Vec<Cell> {
        (1..=self.len()).filter(|&r| self.part(r + 1) < self.part(r)).map(|r| (r, self.part(r))).collect()
    }

    pub fn remove_corner(&self, cell: Cell) -> Result<Partition> {
        if !self.corners().contains(&cell) {
            return Err(Error::NotInnerCorner(cell));
        }
        let mut parts = self.0.clone();
        parts[cell.0 - 1] -= 1;
        Partition::new(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(1);
        Partition((1..=width).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filling of a straight shape. Rows must have weakly decreasing, positive
/// lengths; no ordering of entries is implied until [`Tableau::is_semistandard`]
/// is consulted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "TableauRepr", into = "TableauRepr")]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct TableauRepr {
    rows: Vec<Vec<usize>>,
}

impl TryFrom<TableauRepr> for Tableau {
    type Error = Error;

    fn try_from(repr: TableauRepr) -> Result<Self> {
        Tableau::new(repr.rows)
    }
}

impl From<Tableau> for TableauRepr {
    fn from(t: Tableau) -> Self {
        TableauRepr { rows: t.rows }
    }
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let lengths: Vec<usize> = rows.iter().map(Vec::len).collect();
        if Partition::new(lengths.clone()).map(|p| p.len()) != Ok(rows.len()) {
            return Err(Error::ShapeMismatch(format!("row lengths {lengths:?}")));
        }
        Ok(Tableau { rows })
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<usize>> {
        self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn get(&self, (r, c): Cell) -> Option<usize> {
        self.rows.get(r.checked_sub(1)?)?.get(c.checked_sub(1)?).copied()
    }

    pub fn is_semistandard(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]))
            && self.rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above))
    }

    /// Rows and columns both strictly increase.
    pub fn is_increasing(&self) -> bool {
        self.rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]))
            && self.rows.windows(2).all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above))
    }

    /// Semistandard, positive, and the last entry of row `i` is at most `φ_i`.
    pub fn is_flagged(&self, flag: &Flag) -> bool {
        flag.len() == self.rows.len()
            && self.is_semistandard()
            && self.rows.iter().flatten().all(|&x| x >= 1)
            && self.rows.iter().zip(flag.bounds()).all(|(row, &bound)| row.last().is_some_and(|&x| x <= bound))
    }

    /// Monomial exponent vector `x^T`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut exp = vec![0; max];
        for &x in self.rows.iter().flatten() {
            exp[x - 1] += 1;
        }
        exp
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|row| {
                let items: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

/// A filling of `λ/μ`. Row `i` of `rows` lists the entries in columns
/// `μ_i + 1 ..= λ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SkewRepr", into = "SkewRepr")]
pub struct SkewTableau {
    outer: Partition,
    inner: Partition,
    rows: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct SkewRepr {
    inner: Vec<usize>,
    rows: Vec<Vec<usize>>,
}

impl TryFrom<SkewRepr> for SkewTableau {
    type Error = Error;

    fn try_from(repr: SkewRepr) -> Result<Self> {
        let inner = Partition::new(repr.inner)?;
        let outer: Vec<usize> = repr.rows.iter().enumerate().map(|(i, row)| inner.part(i + 1) + row.len()).collect();
        SkewTableau::new(Partition::new(outer)?, inner, repr.rows)
    }
}

impl From<SkewTableau> for SkewRepr {
    fn from(t: SkewTableau) -> Self {
        SkewRepr { inner: t.inner.0, rows: t.rows }
    }
}

impl SkewTableau {
    pub fn new(outer: Partition, inner: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if !outer.contains_partition(&inner) {
            return Err(Error::ShapeMismatch(format!("{inner} is not inside {outer}")));
        }
        let mut rows = rows;
        rows.resize(outer.len(), Vec::new());
        if rows.len() != outer.len() {
            return Err(Error::ShapeMismatch(format!("{} rows for outer shape {outer}", rows.len())));
        }
        for (i, row) in rows.iter().enumerate() {
            let want = outer.part(i + 1) - inner.part(i + 1);
            if row.len() != want {
                return Err(Error::ShapeMismatch(format!("row {} has {} entries, expected {want}", i + 1, row.len())));
            }
        }
        Ok(SkewTableau { outer, inner, rows })
    }

    pub fn from_straight(t: &Tableau) -> Self {
        SkewTableau { outer: t.shape(), inner: Partition::empty(), rows: t.rows.clone() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn get(&self, (r, c): Cell) -> Option<usize> {
        if !self.outer.contains((r, c)) || self.inner.contains((r, c)) {
            return None;
        }
        Some(self.rows[r - 1][c - 1 - self.inner.part(r)])
    }

    pub fn is_semistandard(&self) -> bool {
        for r in 1..=self.outer.len() {
            for c in self.inner.part(r) + 1..=self.outer.part(r) {
                let x = self.get((r, c)).expect("cell of the skew shape");
                if let Some(right) = self.get((r, c + 1)) {
                    if right < x {
                        return false;
                    }
                }
                if let Some(below) = self.get((r + 1, c)) {
                    if below <= x {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Straight tableau if the inner shape is empty.
    pub fn to_straight(&self) -> Option<Tableau> {
        if self.inner.is_empty() {
            Some(Tableau { rows: self.rows.iter().filter(|r| !r.is_empty()).cloned().collect() })
        } else {
            None
        }
    }

    fn to_grid(&self) -> Vec<Vec<Option<usize>>> {
        (1..=self.outer.len()).map(|r| (1..=self.outer.part(r)).map(|c| self.get((r, c))).collect()).collect()
    }

    fn from_grid(outer: Partition, inner: Partition, grid: &[Vec<Option<usize>>]) -> Self {
        let rows = (1..=outer.len())
            .map(|r| {
                (inner.part(r) + 1..=outer.part(r)).map(|c| grid[r - 1][c - 1].expect("filled skew cell")).collect()
            })
            .collect();
        SkewTableau { outer, inner, rows }
    }
}

/// One forward slide into the inner corner `cell`. The hole swaps with the
/// smaller of its right and lower neighbours, moving down on ties; missing
/// neighbours count as infinite. The final hole leaves the outer shape.
pub fn jdt_slide(t: &SkewTableau, cell: Cell) -> Result<SkewTableau> {
    jdt_slide_path(t, cell).map(|(slid, _)| slid)
}

/// [`jdt_slide`] together with the cells visited by the hole, in order.
pub fn jdt_slide_path(t: &SkewTableau, cell: Cell) -> Result<(SkewTableau, Vec<Cell>)> {
    let inner = t.inner.remove_corner(cell)?;
    let mut path = vec![cell];
    let mut grid = t.to_grid();
    let (mut r, mut c) = cell;
    loop {
        let right = grid[r - 1].get(c).copied().flatten();
        let below = grid.get(r).and_then(|row| row.get(c - 1)).copied().flatten();
        let next = match (right, below) {
            (None, None) => break,
            (Some(_), None) => (r, c + 1),
            (None, Some(_)) => (r + 1, c),
            (Some(x), Some(y)) => {
                if y <= x {
                    (r + 1, c)
                } else {
                    (r, c + 1)
                }
            }
        };
        grid[r - 1][c - 1] = grid[next.0 - 1][next.1 - 1].take();
        (r, c) = next;
        path.push(next);
    }
    let outer = t
        .outer
        .remove_corner((r, c))
        .map_err(|_| Error::ShapeMismatch(format!("slide ended at ({r},{c}), not an outer corner")))?;
    grid[r - 1].pop();
    Ok((SkewTableau::from_grid(outer, inner, &grid), path))
}

/// Rectification, sliding into the bottom-most inner corner each time.
pub fn rect(t: &SkewTableau) -> Result<Tableau> {
    let mut t = t.clone();
    while let Some(&corner) = t.inner.corners().last() {
        t = jdt_slide(&t, corner)?;
    }
    Ok(t.to_straight().expect("inner shape exhausted"))
}

/// Deletes the `(1,1)` entry and rectifies what remains.
pub fn jdt(t: &Tableau) -> Result<Tableau> {
    if t.is_empty() {
        return Err(Error::ShapeMismatch("jeu de taquin of the empty tableau".into()));
    }
    let mut rows = t.rows.clone();
    rows[0].remove(0);
    let skew = SkewTableau::new(t.shape(), Partition(vec![1]), rows)?;
    rect(&skew)
}

/// Recovers `T` from `jdt(T)`, the shape of `T` and the deleted entry.
pub fn jdt_inverse(t: &Tableau, original_shape: &Partition, corner_value: usize) -> Result<Tableau> {
    let shape = t.shape();
    if original_shape.size() != shape.size() + 1 || !original_shape.contains_partition(&shape) {
        return Err(Error::NoPreimage(format!("{original_shape} is not {shape} plus one cell")));
    }
    let added = original_shape
        .corners()
        .into_iter()
        .find(|&(r, c)| !shape.contains((r, c)))
        .expect("a single added cell is a corner");
    let mut grid: Vec<Vec<Option<usize>>> =
        (1..=original_shape.len()).map(|r| (1..=original_shape.part(r)).map(|c| t.get((r, c))).collect()).collect();
    let (mut r, mut c) = added;
    while (r, c) != (1, 1) {
        let above = if r > 1 { grid[r - 2][c - 1] } else { None };
        let left = if c > 1 { grid[r - 1][c - 2] } else { None };
        let prev = match (above, left) {
            (Some(_), None) => (r - 1, c),
            (None, Some(_)) => (r, c - 1),
            (Some(x), Some(y)) => {
                if x >= y {
                    (r - 1, c)
                } else {
                    (r, c - 1)
                }
            }
            (None, None) => unreachable!("a straight shape has a neighbour above or left"),
        };
        grid[r - 1][c - 1] = grid[prev.0 - 1][prev.1 - 1].take();
        (r, c) = prev;
    }
    grid[0][0] = Some(corner_value);
    let rows = grid.into_iter().map(|row| row.into_iter().map(|x| x.expect("filled")).collect()).collect();
    let candidate = Tableau::new(rows)?;
    if !candidate.is_semistandard() {
        return Err(Error::NoPreimage(format!("reverse slide gives non-semistandard {candidate}")));
    }
    if jdt(&candidate)? != *t {
        return Err(Error::NoPreimage(format!("{candidate} does not slide back to {t}")));
    }
    Ok(candidate)
}

/// `SSYT_φ(λ)` in lexicographic order of row lists.
pub fn enumerate_flagged(shape: &Partition, flag: &Flag) -> Result<Vec<Tableau>> {
    if flag.len() != shape.len() {
        return Err(Error::FlagLengthMismatch { flag: flag.len(), parts: shape.len() });
    }
    let cells = shape.cells();
    let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();
    fill_flagged(&cells, 0, flag.bounds(), &mut rows, &mut out);
    Ok(out)
}

fn fill_flagged(cells: &[Cell], idx: usize, bounds: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
    if idx == cells.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[idx];
    let mut low = 1;
    if c > 1 {
        low = low.max(rows[r - 1][c - 2]);
    }
    if r > 1 {
        low = low.max(rows[r - 2][c - 1] + 1);
    }
    for x in low..=bounds[r - 1] {
        rows[r - 1].push(x);
        fill_flagged(cells, idx + 1, bounds, rows, out);
        rows[r - 1].pop();
    }
}
