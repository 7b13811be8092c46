//! Krawtchouk polynomials, an exact rational simplex and the Delsarte LP.

mod delsarte;
mod krawtchouk;
mod simplex;

pub use delsarte::{
    delsarte_lp_max, dual_distribution, min_b2, sigma_lp_bound, DelsarteBound, LpBound,
    LpBoundOptions, LpSolution,
};
pub use krawtchouk::{krawtchouk, KrawtchoukContext};
pub use simplex::{Constraint, LinearProgram, LpOutcome, LpStatus, Relation, Sense};
