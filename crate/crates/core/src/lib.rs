//! Exact-arithmetic toolkit for Delsarte linear-programming bounds on
//! spherical codes, built around a complete machine verification that the
//! kissing number in dimension 3 is 12.
//!
//! The crate has two halves that meet in the middle:
//!
//! * a *verifier* ([`proofcheck`]) that certifies, in exact rational
//!   arithmetic, every inequality used by the LP proof of `kissing(3) = 12` —
//!   sign conditions via Sturm sequences, maxima of polynomial-plus-radical
//!   expressions via certified branch-and-bound — and emits a reproducible
//!   certificate;
//! * a *solver* ([`lpbound`]) that re-derives certificate polynomials from
//!   scratch with an exact rational simplex over discretized constraint
//!   families, then closes the discretization gap with a
//!   certify/cut/repair loop so that every reported bound is itself certified.
//!
//! Supporting layers: [`rational`] (interval arithmetic with outward-correct
//! rational square-root enclosures), [`polynomial`] (exact univariate
//! polynomials, Sturm theory, sign certification), [`radical`] (the ring
//! `P(t) + Q(t)·sqrt(R(t))` needed to compose polynomials with the proof's
//! angle-addition maps), [`gegenbauer`] (the ultraspherical basis and its
//! positive-definiteness), and [`spheregeom`] (exact and floating sphere
//! geometry for the proof's covering argument and for randomized
//! falsification tests).
//!
//! Everything user-facing is deterministic: no wall-clock values, no hash
//! randomization, no threads; identical inputs produce byte-identical
//! certificates.

pub mod gegenbauer;
pub mod lpbound;
pub mod polynomial;
pub mod proofcheck;
pub mod radical;
pub mod rational;
pub mod spheregeom;

mod simplex;

pub use rational::{Rational, RationalInterval};
