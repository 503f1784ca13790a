//! Ancilla-free comparison phase oracles and the tooling around them.
//!
//! * [`oracle`] builds less-than oracles directly from the binary expansion
//!   of the threshold, and composes them into greater-equal and range
//!   oracles.
//! * [`amplification`] wraps an oracle in Grover iterations.
//! * [`sim`] simulates circuits exactly and samples shot histograms.
//! * [`baseline`] synthesizes the same diagonals generically, for comparison.
//! * [`decompose`] lowers circuits to `{CX, RZ, SX, X}` and sweeps depths.
//!
//! Inner loops (gate application, sweeps) run on rayon when the `parallel`
//! feature is enabled, and sequentially otherwise.
//!
//! ```
//! use ltoracle::{oracle::build_less_than, sim};
//!
//! let oracle = build_less_than(4, 11).unwrap();
//! let mut state = sim::StateVector::uniform(4).unwrap();
//! state.apply_circuit(&oracle).unwrap();
//! assert!(state.amplitudes()[10].re < 0.0);
//! assert!(state.amplitudes()[11].re > 0.0);
//! ```

pub mod amplification;
pub mod baseline;
pub mod circuit;
pub mod decompose;
pub mod error;
pub mod oracle;
pub mod par;
pub mod sim;

pub use circuit::{concat, depth, peephole_cancel_x, Circuit, DepthMetrics, Gate};
pub use error::{Error, Result};
pub use oracle::{build_greater_equal, build_less_than, build_range, Comparison, OracleSpec};
