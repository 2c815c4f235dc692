//! Finitely supported permutations of the positive integers.
//!
//! A [`Permutation`] stores its one-line window `w(1) .. w(n)` with trailing
//! fixed points trimmed, so two windows that differ only by appended fixed
//! points compare equal. All indices and values are 1-based.
//!
//! Products of simple transpositions follow the right-action convention:
//! the word `(a_1, .., a_p)` is evaluated by starting from the identity window
//! and swapping positions `a_1`, then `a_2`, and so on. Under this convention
//! the pipe labels read down the side of a pipe dream or bumpless pipe dream
//! are exactly the one-line window of its permutation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableau::Partition;

/// A `(row, column)` position, 1-based, rows growing downwards.
pub type Cell = (usize, usize);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PermutationRepr", into = "PermutationRepr")]
pub struct Permutation {
    window: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct PermutationRepr {
    one_line: Vec<usize>,
}

impl TryFrom<PermutationRepr> for Permutation {
    type Error = Error;

    fn try_from(repr: PermutationRepr) -> Result<Self> {
        Permutation::new(repr.one_line)
    }
}

impl From<Permutation> for PermutationRepr {
    fn from(p: Permutation) -> Self {
        PermutationRepr { one_line: p.window }
    }
}

impl Permutation {
    pub fn new(window: Vec<usize>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(window));
            }
            seen[v] = true;
        }
        let mut p = Permutation { window };
        p.trim();
        Ok(p)
    }

    pub fn identity() -> Self {
        Permutation { window: Vec::new() }
    }

    /// The simple transposition `s_a`.
    pub fn simple(a: usize) -> Self {
        Self::from_word(&[a])
    }

    /// Evaluates `s_{a_1} s_{a_2} .. s_{a_p}`; the word need not be reduced.
    pub fn from_word(word: &[usize]) -> Self {
        let n = word.iter().map(|&a| a + 1).max().unwrap_or(0);
        let mut window: Vec<usize> = (1..=n).collect();
        for &a in word {
            window.swap(a - 1, a);
        }
        let mut p = Permutation { window };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while let Some(&last) = self.window.last() {
            if last == self.window.len() {
                self.window.pop();
            } else {
                break;
            }
        }
    }

    /// Trimmed one-line window (empty for the identity).
    pub fn window(&self) -> &[usize] {
        &self.window
    }

    /// Number of entries in the trimmed window.
    pub fn size(&self) -> usize {
        self.window.len()
    }

    /// One-line window padded with fixed points to length `n`.
    pub fn window_of(&self, n: usize) -> Vec<usize> {
        let mut w = self.window.clone();
        w.extend(self.window.len() + 1..=n.max(self.window.len()));
        w
    }

    /// `w(i)` for any positive `i`.
    pub fn apply(&self, i: usize) -> usize {
        if i >= 1 && i <= self.window.len() {
            self.window[i - 1]
        } else {
            i
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { window: inv }
    }

    /// Function composition `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let n = self.size().max(other.size());
        let mut window: Vec<usize> = (1..=n).map(|x| self.apply(other.apply(x))).collect();
        window.truncate(n);
        let mut p = Permutation { window };
        p.trim();
        p
    }

    pub fn is_identity(&self) -> bool {
        self.window.is_empty()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        (1..=self.size()).filter(|&k| self.apply(k) != k).collect()
    }

    /// Number of inversions, which is the length of any reduced word.
    pub fn length(&self) -> usize {
        let w = &self.window;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Lehmer code `c_i = #{j > i : w(i) > w(j)}` over the trimmed window.
    pub fn code(&self) -> Vec<usize> {
        let w = &self.window;
        (0..w.len()).map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count()).collect()
    }

    pub fn shape(&self) -> Partition {
        let mut parts: Vec<usize> = self.code().into_iter().filter(|&c| c > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("sorted positive code entries form a partition")
    }

    pub fn descents(&self) -> Vec<usize> {
        let w = &self.window;
        (1..w.len()).filter(|&k| w[k - 1] > w[k]).collect()
    }

    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() <= 1
    }

    /// True when `w` avoids 2143. Plain quadruple scan.
    pub fn is_vexillary(&self) -> bool {
        let w = &self.window;
        let n = w.len();
        for i in 0..n {
            for j in i + 1..n {
                if w[j] >= w[i] {
                    continue;
                }
                for k in j + 1..n {
                    for l in k + 1..n {
                        if w[i] < w[l] && w[l] < w[k] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// `D_w = {(i, w(j)) : i < j, w(i) > w(j)}` in row-major order.
    pub fn rothe_diagram(&self) -> Vec<Cell> {
        let w = &self.window;
        let mut cells = Vec::new();
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    cells.push((i + 1, w[j]));
                }
            }
        }
        cells.sort_unstable();
        cells
    }

    /// The flag of a vexillary permutation: for each row `i` of the shape, the
    /// row of the south-easternmost Rothe cell on the diagonal through
    /// `(i, λ_i)`.
    pub fn flag(&self) -> Result<Flag> {
        if !self.is_vexillary() {
            return Err(Error::NotVexillary(self.to_string()));
        }
        let diagram = self.rothe_diagram();
        let shape = self.shape();
        let mut bounds = Vec::with_capacity(shape.len());
        for (idx, &part) in shape.parts().iter().enumerate() {
            let row = idx + 1;
            let diag = part as isize - row as isize;
            let lowest = diagram
                .iter()
                .filter(|&&(r, c)| c as isize - r as isize == diag)
                .map(|&(r, _)| r)
                .max()
                .ok_or_else(|| Error::NotVexillary(self.to_string()))?;
            bounds.push(lowest);
        }
        Ok(Flag::new(bounds))
    }

    /// Smallest partition whose diagram contains the Rothe diagram.
    pub fn rothe_hull(&self) -> Partition {
        let diagram = self.rothe_diagram();
        let rows = diagram.iter().map(|&(r, _)| r).max().unwrap_or(0);
        let mut parts = vec![0; rows];
        for &(r, c) in &diagram {
            for p in parts.iter_mut().take(r) {
                *p = (*p).max(c);
            }
        }
        Partition::new(parts).expect("row maxima of a down-closed hull decrease")
    }

    /// `w · t_{ij}`: swaps the entries in positions `i` and `j`.
    pub fn apply_transposition(&self, i: usize, j: usize) -> Result<Transposed> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::InvalidTransposition(i, j));
        }
        let n = self.size().max(i).max(j);
        let mut window = self.window_of(n);
        window.swap(i - 1, j - 1);
        let perm = Permutation::new(window)?;
        let length_delta = perm.length() as isize - self.length() as isize;
        Ok(Transposed { perm, length_delta })
    }

    /// `t_{ij} · w`: swaps the values `i` and `j`, i.e. exchanges which pipes
    /// exit where.
    pub fn swap_values(&self, i: usize, j: usize) -> Result<Transposed> {
        if i == j || i == 0 || j == 0 {
            return Err(Error::InvalidTransposition(i, j));
        }
        let n = self.size().max(i).max(j);
        let window: Vec<usize> = self
            .window_of(n)
            .into_iter()
            .map(|v| {
                if v == i {
                    j
                } else if v == j {
                    i
                } else {
                    v
                }
            })
            .collect();
        let perm = Permutation::new(window)?;
        let length_delta = perm.length() as isize - self.length() as isize;
        Ok(Transposed { perm, length_delta })
    }

    /// All reduced words, in lexicographic order.
    pub fn reduced_words(&self) -> Vec<ReducedWord> {
        let mut out = BTreeSet::new();
        let mut suffix = Vec::new();
        collect_reduced_words(self.window.clone(), &mut suffix, &mut out);
        out.into_iter().map(ReducedWord).collect()
    }

    /// Every permutation of `1..=n` in lexicographic order of windows.
    pub fn all_of_size(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation::new(current.clone()).expect("rearrangement"));
            if !next_lex_permutation(&mut current) {
                break;
            }
        }
        out
    }
}

fn collect_reduced_words(w: Vec<usize>, suffix: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    let descents: Vec<usize> = (1..w.len()).filter(|&k| w[k - 1] > w[k]).collect();
    if descents.is_empty() {
        out.insert(suffix.iter().rev().copied().collect());
        return;
    }
    for a in descents {
        let mut u = w.clone();
        u.swap(a - 1, a);
        suffix.push(a);
        collect_reduced_words(u, suffix, out);
        suffix.pop();
    }
}

fn next_lex_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Result of multiplying by a transposition, with the change in length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transposed {
    pub perm: Permutation,
    pub length_delta: isize,
}

impl Transposed {
    /// The guard `ℓ(w t) = ℓ(w) - 1` used by both bump families.
    pub fn drops_length_by_one(&self) -> bool {
        self.length_delta == -1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.window.is_empty() {
            return write!(f, "1");
        }
        if self.window.len() <= 9 {
            for v in &self.window {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"35142"` (single digits) or `"3,5,1,4,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = || Error::Parse { what: "permutation", input: s.to_string() };
        let window: Vec<usize> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse::<usize>().map_err(|_| parse_err())).collect::<Result<_>>()?
        } else {
            s.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(parse_err)).collect::<Result<_>>()?
        };
        if window.is_empty() {
            return Err(parse_err());
        }
        Permutation::new(window)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReducedWord(pub Vec<usize>);

impl ReducedWord {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn permutation(&self) -> Permutation {
        Permutation::from_word(&self.0)
    }
}

/// True when the word has as many letters as the length of its product.
pub fn is_reduced_word(word: &[usize]) -> bool {
    word.iter().all(|&a| a >= 1) && Permutation::from_word(word).length() == word.len()
}

/// Upper bounds `φ_1, .., φ_ℓ` on the rows of a flagged tableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Flag(Vec<usize>);

impl Flag {
    pub fn new(bounds: Vec<usize>) -> Self {
        Flag(bounds)
    }

    pub fn constant(value: usize, len: usize) -> Self {
        Flag(vec![value; len])
    }

    pub fn bounds(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
