//! Little bumps on reduced compatible sequences.

use crate::error::{Error, Result};
use crate::perm::{is_reduced_word, Permutation};
use crate::pipedream::CompatibleSequence;

use super::trace::{BumpStep, BumpTrace};

/// For each letter, the pair of values (wires) it swaps.
pub fn wire_pairs(letters: &[usize]) -> Vec<(usize, usize)> {
    let size = letters.iter().max().map_or(1, |&m| m + 1);
    let mut window: Vec<usize> = (1..=size).collect();
    letters
        .iter()
        .map(|&a| {
            let (x, y) = (window[a - 1], window[a]);
            window.swap(a - 1, a);
            (x.min(y), x.max(y))
        })
        .collect()
}

/// Checks that `(i, j)` labels a crossing whose removal drops the length by
/// exactly one.
pub(crate) fn check_bump_pair(w: &Permutation, i: usize, j: usize) -> Result<()> {
    if i == 0 || i >= j {
        return Err(Error::InvalidTransposition(i, j));
    }
    let inv = w.inverse();
    if inv.apply(i) < inv.apply(j) {
        return Err(Error::PipesDoNotCross(i, j));
    }
    if !w.swap_values(i, j)?.drops_length_by_one() {
        return Err(Error::BumpGuard(i, j));
    }
    Ok(())
}

pub fn little_bump(c: &CompatibleSequence, i: usize, j: usize) -> Result<CompatibleSequence> {
    little_bump_traced(c, i, j).map(|(out, _)| out)
}

/// `L_ij`: push the crossing of wires `i` and `j` up by one, then keep
/// pushing whichever crossing the push made redundant.
pub fn little_bump_traced(c: &CompatibleSequence, i: usize, j: usize) -> Result<(CompatibleSequence, BumpTrace)> {
    c.validate(None).map_err(Error::NotCompatible)?;
    let w = c.permutation();
    check_bump_pair(&w, i, j)?;
    let mut letters = c.letters.clone();
    let mut m = wire_pairs(&letters).iter().position(|&pair| pair == (i, j)).ok_or(Error::PipesDoNotCross(i, j))?;
    let n = w.size().max(2);
    let cap = (letters.len() + 1) * n * n;
    let mut trace = BumpTrace::new((i, j));
    for _ in 0..cap {
        letters[m] += 1;
        trace.steps.push(BumpStep::Push { index: m + 1, letter: letters[m] });
        if is_reduced_word(&letters) {
            return Ok((CompatibleSequence::new_unchecked(c.rows.clone(), letters), trace));
        }
        let pairs = wire_pairs(&letters);
        let pushed = pairs[m];
        m = (0..letters.len())
            .find(|&k| k != m && pairs[k] == pushed)
            .ok_or_else(|| Error::InvalidPipeDream(format!("no repeated crossing of wires {pushed:?}")))?;
    }
    Err(Error::IterationCap { what: "little bump", cap })
}

/// Upward Little bumps until the permutation is Grassmannian, with the
/// transpositions used. Each step takes the first descent `d` and the
/// leftmost `s ≤ d` with `w(s) > w(d + 1)`, and bumps that inversion.
pub fn grassmannianize(c: &CompatibleSequence) -> Result<(CompatibleSequence, Vec<(usize, usize)>)> {
    let mut current = c.clone();
    let mut used = Vec::new();
    let n = c.permutation().size().max(2);
    let cap = (c.len() + 1) * n * n;
    for _ in 0..cap {
        let w = current.permutation();
        if w.is_grassmannian() {
            return Ok((current, used));
        }
        let (i, j) = grassmannian_step(&w);
        current = little_bump(&current, i, j)?;
        used.push((i, j));
    }
    Err(Error::IterationCap { what: "grassmannianize", cap })
}

/// The value pair bumped next on the way to a Grassmannian permutation.
pub(crate) fn grassmannian_step(w: &Permutation) -> (usize, usize) {
    let d = w.descents()[0];
    let low = w.apply(d + 1);
    let s = (1..=d).find(|&s| w.apply(s) > low).expect("d is a descent");
    (low, w.apply(s))
}
