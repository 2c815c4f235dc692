//! Reduced pipe dreams in the staircase and reduced compatible sequences.
//!
//! Pipe `c` enters the top of column `c` and travels down and left; the pipe
//! leaving row `r` on the left is `w(r)`. A cross at `(i, j)` is the letter
//! `i + j - 1` of a reduced word, read right to left along each row and rows
//! top to bottom.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

use crate::error::{Error, Result};
use crate::perm::{is_reduced_word, Cell, Permutation};

/// The first condition of a compatible sequence that fails.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Violation {
    #[error("{rows} rows but {letters} letters")]
    LengthMismatch { rows: usize, letters: usize },
    #[error("entry {index} is zero")]
    ZeroEntry { index: usize },
    #[error("condition (i): letters do not form a reduced word")]
    NotReduced,
    #[error("condition (i): letters multiply to {found}, expected {expected}")]
    WrongPermutation { expected: String, found: String },
    #[error("condition (ii): rows decrease after position {index}")]
    RowsDecrease { index: usize },
    #[error("condition (iii): row exceeds letter at position {index}")]
    RowExceedsLetter { index: usize },
    #[error("condition (iv): letters ascend after position {index} but rows do not")]
    AscentWithoutRowIncrease { index: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct CompatibleSequence {
    pub rows: Vec<usize>,
    pub letters: Vec<usize>,
}

impl CompatibleSequence {
    /// Builds and checks conditions (i)-(iv).
    pub fn new(rows: Vec<usize>, letters: Vec<usize>) -> Result<Self> {
        let c = CompatibleSequence { rows, letters };
        c.validate(None).map_err(Error::NotCompatible)?;
        Ok(c)
    }

    /// No checks; for intermediate states and tests of the validator.
    pub fn new_unchecked(rows: Vec<usize>, letters: Vec<usize>) -> Self {
        CompatibleSequence { rows, letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().copied().zip(self.letters.iter().copied())
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_word(&self.letters)
    }

    /// Drops the first column of the biword.
    pub fn tail(&self) -> Self {
        CompatibleSequence {
            rows: self.rows.get(1..).unwrap_or_default().to_vec(),
            letters: self.letters.get(1..).unwrap_or_default().to_vec(),
        }
    }

    /// Exponent vector of `x_{r_1} .. x_{r_ℓ}`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().copied().max().unwrap_or(0);
        let mut exp = vec![0; max];
        for &r in &self.rows {
            exp[r - 1] += 1;
        }
        exp
    }

    pub fn validate(&self, w: Option<&Permutation>) -> std::result::Result<(), Violation> {
        let (r, a) = (&self.rows, &self.letters);
        if r.len() != a.len() {
            return Err(Violation::LengthMismatch { rows: r.len(), letters: a.len() });
        }
        if let Some(index) = (0..r.len()).find(|&i| r[i] == 0 || a[i] == 0) {
            return Err(Violation::ZeroEntry { index: index + 1 });
        }
        if !is_reduced_word(a) {
            return Err(Violation::NotReduced);
        }
        if let Some(w) = w {
            let found = self.permutation();
            if found != *w {
                return Err(Violation::WrongPermutation { expected: w.to_string(), found: found.to_string() });
            }
        }
        for i in 0..r.len() {
            if i + 1 < r.len() && r[i] > r[i + 1] {
                return Err(Violation::RowsDecrease { index: i + 1 });
            }
            if r[i] > a[i] {
                return Err(Violation::RowExceedsLetter { index: i + 1 });
            }
            if i + 1 < r.len() && a[i] < a[i + 1] && r[i] >= r[i + 1] {
                return Err(Violation::AscentWithoutRowIncrease { index: i + 1 });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self, w: Option<&Permutation>) -> bool {
        self.validate(w).is_ok()
    }
}

impl fmt::Display for CompatibleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.rows), join(&self.letters))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PipeDreamRepr", into = "PipeDreamRepr")]
pub struct PipeDream {
    n: usize,
    crosses: BTreeSet<Cell>,
}

#[derive(Serialize, Deserialize)]
struct PipeDreamRepr {
    n: usize,
    crosses: Vec<[usize; 2]>,
}

impl TryFrom<PipeDreamRepr> for PipeDream {
    type Error = Error;

    fn try_from(repr: PipeDreamRepr) -> Result<Self> {
        PipeDream::new(repr.n, repr.crosses.into_iter().map(|[i, j]| (i, j)))
    }
}

impl From<PipeDream> for PipeDreamRepr {
    fn from(p: PipeDream) -> Self {
        PipeDreamRepr { n: p.n, crosses: p.crosses.into_iter().map(|(i, j)| [i, j]).collect() }
    }
}

impl PipeDream {
    /// Crosses must lie in `δ_n`, i.e. `i + j ≤ n`. Reducedness is not checked.
    pub fn new(n: usize, crosses: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let crosses: BTreeSet<Cell> = crosses.into_iter().collect();
        if let Some(&(i, j)) = crosses.iter().find(|&&(i, j)| i == 0 || j == 0 || i + j > n) {
            return Err(Error::InvalidPipeDream(format!("cross ({i},{j}) outside the staircase of size {n}")));
        }
        Ok(PipeDream { n: n.max(1), crosses })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn crosses(&self) -> &BTreeSet<Cell> {
        &self.crosses
    }

    pub fn is_cross(&self, cell: Cell) -> bool {
        self.crosses.contains(&cell)
    }

    /// Same crosses in the staircase of size `m ≥ n`.
    pub fn resize(&self, m: usize) -> Result<Self> {
        PipeDream::new(m, self.crosses.iter().copied())
    }

    /// Traces every pipe. Returns the exit permutation and, for each cross in
    /// row-major order, the pipes `(from top, from right)` meeting there.
    fn trace(&self) -> (Vec<usize>, Vec<(usize, usize)>) {
        let n = self.n;
        // down[j] carries the pipe leaving the bottom of column j in the row above
        let mut down: Vec<usize> = (0..=n).collect();
        let mut exits = vec![0; n];
        let mut meetings = Vec::new();
        for i in 1..=n {
            let corner = n + 1 - i;
            let mut from_right = down[corner];
            for j in (1..corner).rev() {
                let from_top = down[j];
                if self.crosses.contains(&(i, j)) {
                    meetings.push((from_top, from_right));
                } else {
                    down[j] = from_right;
                    from_right = from_top;
                }
            }
            exits[i - 1] = from_right;
        }
        (exits, meetings)
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::new(self.trace().0).expect("pipes exit in distinct rows")
    }

    /// No two pipes cross twice.
    pub fn is_reduced(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.trace().1.into_iter().all(|(a, b)| seen.insert((a.min(b), a.max(b))))
    }

    pub fn to_biword(&self) -> CompatibleSequence {
        let mut rows = Vec::with_capacity(self.crosses.len());
        let mut letters = Vec::with_capacity(self.crosses.len());
        let mut cells: Vec<Cell> = self.crosses.iter().copied().collect();
        cells.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        for (i, j) in cells {
            rows.push(i);
            letters.push(j + i - 1);
        }
        CompatibleSequence { rows, letters }
    }

    /// Places crosses at `(r_k, a_k - r_k + 1)` in the smallest staircase
    /// holding both the crosses and the permutation.
    pub fn from_biword(c: &CompatibleSequence) -> Result<Self> {
        c.validate(None).map_err(Error::NotCompatible)?;
        let n = c.letters.iter().map(|&a| a + 1).max().unwrap_or(1).max(c.permutation().size());
        PipeDream::new(n, c.pairs().map(|(r, a)| (r, a + 1 - r)))
    }
}

pub fn pd_permutation(p: &PipeDream) -> Permutation {
    p.permutation()
}

pub fn pd_to_biword(p: &PipeDream) -> CompatibleSequence {
    p.to_biword()
}

pub fn biword_to_pd(c: &CompatibleSequence) -> Result<PipeDream> {
    PipeDream::from_biword(c)
}

pub fn validate_compatible(c: &CompatibleSequence, w: Option<&Permutation>) -> std::result::Result<(), Violation> {
    c.validate(w)
}

/// `PD(w)` in the staircase of size `max(n(w), 1)`, sorted.
///
/// Cells are visited in reading order; a cross is placed only when the
/// product so far stays a length-additive prefix of `w`.
pub fn enumerate_pd(w: &Permutation) -> Vec<PipeDream> {
    let n = w.size().max(1);
    let target = w.window_of(n);
    let mut cells = Vec::new();
    for i in 1..n {
        for j in (1..=n - i).rev() {
            cells.push((i, j));
        }
    }
    let mut out = Vec::new();
    let mut u: Vec<usize> = (1..=n).collect();
    let mut chosen = Vec::new();
    let state = PdSearch { cells: &cells, target: &target, length: w.length() };
    state.walk(0, &mut u, 0, &mut chosen, &mut out);
    let mut out: Vec<PipeDream> =
        out.into_iter().map(|crosses| PipeDream { n, crosses: crosses.into_iter().collect() }).collect();
    out.sort();
    out
}

struct PdSearch<'a> {
    cells: &'a [Cell],
    target: &'a [usize],
    length: usize,
}

impl PdSearch<'_> {
    fn walk(&self, idx: usize, u: &mut Vec<usize>, len: usize, chosen: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
        if len == self.length {
            if u.as_slice() == self.target {
                out.push(chosen.clone());
            }
            return;
        }
        if idx == self.cells.len() || self.cells.len() - idx < self.length - len {
            return;
        }
        let (i, j) = self.cells[idx];
        let a = i + j - 1;
        if u[a - 1] < u[a] {
            u.swap(a - 1, a);
            if is_prefix_of(u, len + 1, self.target, self.length) {
                chosen.push((i, j));
                self.walk(idx + 1, u, len + 1, chosen, out);
                chosen.pop();
            }
            u.swap(a - 1, a);
        }
        self.walk(idx + 1, u, len, chosen, out);
    }
}

/// `ℓ(u⁻¹ w) = ℓ(w) - ℓ(u)`, where `u` and `w` are windows of equal size.
fn is_prefix_of(u: &[usize], len_u: usize, w: &[usize], len_w: usize) -> bool {
    let n = u.len();
    let mut u_inv = vec![0; n + 1];
    for (i, &v) in u.iter().enumerate() {
        u_inv[v] = i + 1;
    }
    let x: Vec<usize> = w.iter().map(|&v| u_inv[v]).collect();
    let mut inv = 0;
    for a in 0..n {
        for b in a + 1..n {
            if x[a] > x[b] {
                inv += 1;
            }
        }
    }
    inv + len_u == len_w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn cs(rows: &[usize], letters: &[usize]) -> CompatibleSequence {
        CompatibleSequence::new_unchecked(rows.to_vec(), letters.to_vec())
    }

    /// Every subset of `δ_n`, traced and filtered.
    fn subset_oracle(w: &Permutation, n: usize) -> Vec<PipeDream> {
        let cells: Vec<Cell> = (1..n).flat_map(|i| (1..=n - i).map(move |j| (i, j))).collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << cells.len()) {
            let chosen = cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c);
            let pd = PipeDream::new(n, chosen).unwrap();
            if pd.is_reduced() && pd.permutation() == *w {
                out.push(pd);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn row_labelled_example_reads_21453() {
        let pd = PipeDream::new(5, [(1, 1), (1, 3), (3, 2)]).unwrap();
        assert_eq!(pd.permutation(), p("21453"));
        assert!(pd.is_reduced());
        assert_eq!(pd.to_biword(), cs(&[1, 1, 3], &[3, 1, 4]));
    }

    #[test]
    fn non_example_crosses_twice() {
        let pd = PipeDream::new(5, [(1, 3), (2, 3), (3, 2)]).unwrap();
        assert!(!pd.is_reduced());
        assert!(PipeDream::new(3, []).unwrap().is_reduced());
    }

    #[test]
    fn empty_is_identity() {
        for n in 1..5 {
            assert!(PipeDream::new(n, []).unwrap().permutation().is_identity());
        }
    }

    #[test]
    fn pd_1432_panels() {
        let biwords = [
            cs(&[2, 2, 3], &[3, 2, 3]),
            cs(&[1, 2, 3], &[3, 2, 3]),
            cs(&[1, 2, 2], &[2, 3, 2]),
            cs(&[1, 1, 3], &[3, 2, 3]),
            cs(&[1, 1, 2], &[3, 2, 3]),
        ];
        let all = enumerate_pd(&p("1432"));
        assert_eq!(all.len(), 5);
        for b in &biwords {
            assert_eq!(b.validate(Some(&p("1432"))), Ok(()));
            let pd = PipeDream::from_biword(b).unwrap();
            assert_eq!(pd.permutation(), p("1432"));
            assert_eq!(&pd.to_biword(), b);
            assert!(all.contains(&pd));
        }
    }

    #[test]
    fn validation_reasons() {
        assert_eq!(cs(&[1, 1, 2, 2], &[4, 2, 3, 2]).validate(None), Ok(()));
        assert_eq!(cs(&[2, 1], &[2, 1]).validate(None), Err(Violation::RowsDecrease { index: 1 }));
        assert_eq!(cs(&[1, 1], &[2, 3]).validate(None), Err(Violation::AscentWithoutRowIncrease { index: 1 }));
        assert_eq!(cs(&[2], &[1]).validate(None), Err(Violation::RowExceedsLetter { index: 1 }));
        assert_eq!(cs(&[1, 1], &[1, 1]).validate(None), Err(Violation::NotReduced));
        assert_eq!(cs(&[1], &[]).validate(None), Err(Violation::LengthMismatch { rows: 1, letters: 0 }));
        assert!(matches!(cs(&[1], &[1]).validate(Some(&p("132"))), Err(Violation::WrongPermutation { .. })));
        assert!(matches!(
            PipeDream::from_biword(&cs(&[2, 1], &[2, 1])),
            Err(Error::NotCompatible(Violation::RowsDecrease { index: 1 }))
        ));
    }

    #[test]
    fn enumerate_small_cases() {
        assert_eq!(enumerate_pd(&Permutation::identity()), vec![PipeDream::new(1, []).unwrap()]);
        // δ_3 has exactly three cells and 321 needs all of them
        assert_eq!(enumerate_pd(&p("321")), vec![PipeDream::new(3, [(1, 1), (1, 2), (2, 1)]).unwrap()]);
    }

    #[test]
    fn enumerate_matches_subset_oracle() {
        for n in 1..=4 {
            for w in Permutation::all_of_size(n) {
                let size = w.size().max(1);
                assert_eq!(enumerate_pd(&w), subset_oracle(&w, size), "{w}");
            }
        }
    }

    #[test]
    fn biword_round_trip_and_invariants() {
        for w in Permutation::all_of_size(5) {
            for pd in enumerate_pd(&w) {
                assert_eq!(pd.crosses().len(), w.length());
                let c = pd.to_biword();
                assert_eq!(c.validate(Some(&w)), Ok(()));
                assert_eq!(c.permutation(), pd.permutation());
                assert_eq!(PipeDream::from_biword(&c).unwrap(), pd);
            }
        }
    }

    #[test]
    fn random_subsets_agree_with_pairwise_trace() {
        use rand::{Rng, SeedableRng};
        // follow one pipe at a time and record every other pipe it crosses
        fn pair_oracle(pd: &PipeDream) -> bool {
            let n = pd.n();
            let mut crossed: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n + 1];
            let mut owner = std::collections::BTreeMap::new();
            for start in 1..=n {
                let (mut i, mut j, mut from_top) = (1, start, true);
                while j > 0 {
                    if i + j <= n && pd.is_cross((i, j)) {
                        owner.entry((i, j)).or_insert_with(Vec::new).push(start);
                        if from_top {
                            i += 1
                        } else {
                            j -= 1
                        }
                    } else if from_top {
                        from_top = false;
                        j -= 1;
                    } else {
                        from_top = true;
                        i += 1;
                    }
                }
            }
            for pipes in owner.values() {
                let (a, b) = (pipes[0], pipes[1]);
                if !crossed[a].insert(b) {
                    return false;
                }
                crossed[b].insert(a);
            }
            true
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let cells: Vec<Cell> = (1..4).flat_map(|i| (1..=4 - i).map(move |j| (i, j))).collect();
        for _ in 0..500 {
            let chosen = cells.iter().copied().filter(|_| rng.gen_bool(0.5));
            let pd = PipeDream::new(4, chosen).unwrap();
            assert_eq!(pd.is_reduced(), pair_oracle(&pd), "{pd:?}");
        }
    }

    #[test]
    fn serde_form() {
        let pd = PipeDream::new(4, [(1, 2), (2, 1)]).unwrap();
        let json = serde_json::to_string(&pd).unwrap();
        assert_eq!(json, r#"{"n":4,"crosses":[[1,2],[2,1]]}"#);
        assert_eq!(serde_json::from_str::<PipeDream>(&json).unwrap(), pd);
        assert!(serde_json::from_str::<PipeDream>(r#"{"n":2,"crosses":[[2,1]]}"#).is_err());
        let c = cs(&[1, 1], &[3, 2]);
        assert_eq!(serde_json::to_string(&c).unwrap(), r#"{"rows":[1,1],"letters":[3,2]}"#);
    }
}
