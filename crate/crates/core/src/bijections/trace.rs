use serde::{Deserialize, Serialize};

use crate::perm::Cell;

/// One move made by a Little or Huang bump.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum BumpStep {
    /// The letter at 1-based `index` became `letter`.
    Push {
        index: usize,
        letter: usize,
    },
    /// A crossing was replaced by a bump.
    Open {
        cell: Cell,
    },
    MinDroop {
        from: Cell,
        to: Cell,
    },
    CrossBumpSwap {
        bump: Cell,
        cross: Cell,
    },
    /// The final bump was replaced by a crossing.
    Close {
        cell: Cell,
    },
    /// The grid was enlarged before retrying.
    Embed {
        n: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BumpTrace {
    pub transposition: (usize, usize),
    pub steps: Vec<BumpStep>,
}

impl BumpTrace {
    pub fn new(transposition: (usize, usize)) -> Self {
        BumpTrace { transposition, steps: Vec::new() }
    }
}
