//! Single-error correction on the generalized diamond network N_s.
//!
//! The source S sends a codeword of length s+2. Coordinate 0 travels through
//! V_1 straight to the terminal; coordinates 1..=s+1 enter V_2, which forwards
//! s_out symbols. An adversary may change one source edge.

pub mod codefile;
pub mod bounds;
pub mod cover;
pub mod error;
pub mod fixtures;
pub mod lp;
pub mod model;
pub mod netcode;
pub mod search;
pub mod symmetry;
pub mod tau;

pub use error::{Error, Result};
pub use model::{Code, Distance, NetworkParams, Word};
