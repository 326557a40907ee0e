//! Exact symbolic and numeric verification engine for the quantum twistor
//! bundle `CP^1_q -> CP^3_q(mu) -> S^4_q`.
//!
//! The engine normal-orders elements of the quantum 7-sphere *-algebra,
//! verifies its defining relations and the instanton-sphere relations, builds
//! the recursive families of polynomial projections, computes graph-algebra
//! K-theory through exact Smith normal forms, constructs freeness witnesses
//! for the twistor circle action, and evaluates Fredholm index pairings in
//! closed form over Q(q) — everything in exact arithmetic wherever possible,
//! with a truncated weighted-shift representation as the numerical oracle.

pub mod fockrep;
pub mod graphck;
pub mod instanton;
pub mod ncalg;
pub mod projections;
pub mod scalar;

pub use ncalg::{AlgMatrix, Element};
pub use scalar::{QLaurent, QRational, Rational};
