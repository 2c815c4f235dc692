//! Pipe dreams, bumpless pipe dreams and the bijections relating them to
//! reduced compatible sequences and flagged tableaux.
//!
//! ```
//! use pipedream_core::{bijections::phi, bpd::enumerate_bpd, insertion::q_tableau, Permutation};
//!
//! let w: Permutation = "1432".parse().unwrap();
//! let bpds = enumerate_bpd(&w);
//! assert_eq!(bpds.len(), 5);
//! let c = phi(&bpds[0]).unwrap();
//! assert_eq!(c.permutation(), w);
//! assert!(q_tableau(&c).unwrap().is_semistandard());
//! ```

pub mod bijections;
pub mod bpd;
pub mod error;
pub mod insertion;
pub mod perm;
pub mod pipedream;
pub mod render;
pub mod schubert;
pub mod tableau;
pub mod verify;

pub use bijections::{BumpStep, BumpTrace, LsRecord, PopResult};
pub use bpd::{AlmostBpd, Bpd, Tile};
pub use error::{Error, Result};
pub use insertion::InsertionPair;
pub use perm::{Cell, Flag, Permutation, ReducedWord};
pub use pipedream::{CompatibleSequence, PipeDream, Violation};
pub use schubert::SparsePolynomial;
pub use tableau::{Partition, SkewTableau, Tableau};
pub use verify::{Theorem, VerifyReport};
