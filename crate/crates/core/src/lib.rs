//! Simulation of the measurement-induced cat gate: a coherent state coupled
//! to a Fock-state ancilla by a `C_Z` interaction, followed by a homodyne
//! measurement of the ancilla.
//!
//! The crate provides the exact and semiclassical output wavefunctions,
//! fidelities against ideal cat states, outcome probabilities, Wigner
//! functions (series and quadrature engines) and the geometric phase-space
//! mapping.

pub mod error;
pub mod gate;
pub mod metrics;
pub mod numerics;
pub mod phase_map;
pub mod states;
pub mod wigner;

pub use error::{Error, Result};
pub use gate::GateParams;
pub use numerics::Grid1D;
pub use states::{CatSuperposition, CoherentParams, WaveFunctionGrid};
pub use num_complex::Complex64;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/numerics.md")]
    mod numerics {}
    #[doc = include_str!("../../../book/src/states.md")]
    mod states {}
    #[doc = include_str!("../../../book/src/gate.md")]
    mod gate {}
    #[doc = include_str!("../../../book/src/fidelity.md")]
    mod fidelity {}
    #[doc = include_str!("../../../book/src/wigner.md")]
    mod wigner {}
    #[doc = include_str!("../../../book/src/phase-map.md")]
    mod phase_map {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
