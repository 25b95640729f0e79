//! Exact Kauffman brackets and conductances of virtual rational tangles.
//!
//! The bracket of a four-ended diagram is computed by brute-force state sum
//! as a triple `(f, g, h)` over the vertical, horizontal and virtual-crossing
//! tangles. The conductance `C(T) = i (f+h)/(g+h)` at `A = sqrt(i)` is then
//! compared against the recursion, the generalized continued fraction and the
//! closed forms for short vectors.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod bracket;
pub mod conductance;
pub mod diagram;
pub mod verify;

pub use arith::{ArithError, Cyc8, ExtGauss, Gauss, LaurentPoly};
pub use bracket::{bracket, BracketTriple, Pairing, StateCounts, StateResolution};
pub use conductance::{ConductanceError, ConductanceValue, Provenance};
pub use diagram::{build_basic, Axis, Endpoint, Entry, TangleDiagram, TangleVector};
