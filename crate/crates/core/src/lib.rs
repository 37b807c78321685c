//! Hadamard walk on a cycle of `N` sites.
//!
//! The crate simulates the discrete-time walk directly, carries the
//! closed-form spectral decomposition of its one-step unitary, and computes
//! the temporal fluctuation statistics of the site probabilities along three
//! independent routes (finite-horizon simulation, a closed-form expression
//! for odd cycles, and resonance enumeration over eigenvalue phases), plus a
//! classical random-walk baseline for contrast.

pub mod classical;
pub mod error;
pub mod spectral;
pub mod stats;
pub mod walk;

pub use error::{Error, Result};
pub use walk::{build_unitary, SiteDistribution, WalkConfig, WaveState, MIN_SITES};
