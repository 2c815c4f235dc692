//! The bijections between pipe dreams, bumpless pipe dreams and tableaux,
//! and the bumping moves that intertwine them.

mod huang;
pub(crate) mod little;
mod nabla;
mod recording;
mod trace;

pub use huang::{cross_bump_swap, huang_bump, huang_bump_traced, huang_states, min_droop};
pub use little::{grassmannianize, little_bump, little_bump_traced, wire_pairs};
pub use nabla::{phi, phi_inverse, phi_inverse_pd, pop_nabla, PhiInverse, PopResult};
pub use recording::{ls_recording, ls_recording_vexillary, LsRecord};
pub use trace::{BumpStep, BumpTrace};
