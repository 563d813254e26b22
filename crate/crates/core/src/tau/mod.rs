//! The quadratic transformation on equations `F = x^d / (u + x^k v F)`.
//!
//! Each step maps an equation to another whose series has Hankel
//! determinants related to the original by a shift, a sign and possibly a
//! geometric factor. Chaining steps reduces determinant questions about one
//! series to small determinants of another.

mod equation;
pub mod fixtures;
mod periodicity;
mod step;
mod trace;

pub use equation::CanonicalEquation;
pub use periodicity::{
    detect_periodicity, fit_polynomial, FamilyFit, IntegralForm, ParametricForm, Periodicity,
};
pub use step::{decompose_u, tau_step, DetRelation, TauCase};
pub use trace::{direct_dets, iterate_tau, replay_trace, TauTrace, TraceStep};
