//! Recording tableaux of bumpless pipe dreams via Huang bumps.

use serde::{Deserialize, Serialize};

use crate::bpd::{gamma, Bpd};
use crate::error::Result;
use crate::perm::Permutation;
use crate::tableau::Tableau;

use super::huang::huang_bump;
use super::little::grassmannianize;
use super::nabla::phi;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LsRecord {
    /// Transpositions applied, in order.
    pub bumps: Vec<(usize, usize)>,
    /// Permutations visited, starting from the input's.
    pub chain: Vec<Permutation>,
    pub grassmannian: Bpd,
    pub tableau: Tableau,
}

/// Bumps `b` up to a Grassmannian permutation along the same transpositions
/// that take `φ(b)` there, then applies `γ`.
pub fn ls_recording(b: &Bpd) -> Result<LsRecord> {
    let (_, bumps) = grassmannianize(&phi(b)?)?;
    let mut current = b.clone();
    let mut chain = vec![current.permutation()];
    for &(i, j) in &bumps {
        current = huang_bump(&current, i, j)?;
        chain.push(current.permutation());
    }
    let v = current.permutation();
    let tableau = gamma(&current, &v)?;
    Ok(LsRecord { bumps, chain, grassmannian: current, tableau })
}

/// Same bump sequence, stopped at the first vexillary permutation.
pub fn ls_recording_vexillary(b: &Bpd) -> Result<Tableau> {
    let (_, bumps) = grassmannianize(&phi(b)?)?;
    let mut current = b.clone();
    for &(i, j) in &bumps {
        if current.permutation().is_vexillary() {
            break;
        }
        current = huang_bump(&current, i, j)?;
    }
    gamma(&current, &current.permutation())
}
