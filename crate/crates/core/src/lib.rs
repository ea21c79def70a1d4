//! Exact-arithmetic analysis of the Euclidean distance function on complex
//! plane curves: ED degree, the decomposition of the ED discriminant into
//! focal, iflex, atypical and singular components, Morse numbers at every
//! attractor, and a floating-point path-tracking oracle for cross-validation.
//!
//! The exact layer works over the Gaussian rationals Q(i); every analyzer
//! either produces exact data or degrades explicitly to flagged numeric
//! results. See the `discriminants` module for the report assembly.

pub mod branches;
pub mod discriminants;
pub mod edcore;
pub mod numkernel;
pub mod oracle;
pub mod polyalg;

pub use numkernel::{ApproxComplex, GaussianRational, Rational};
