//! Kolchin dimension polynomials for differential systems.
//!
//! The crate computes dimension polynomials of subsets of `N^m`, assembles
//! Kolchin polynomials from leader profiles, evaluates the Ackermann-based
//! regularity and domination bounds, and, for linear constant-coefficient
//! systems, recovers the Kolchin polynomial in two independent ways: from the
//! leaders of a module Groebner basis, and from ranks of prolongation matrices
//! sampled at `m + 1` consecutive levels.

pub mod bounds;
pub mod cli;
pub mod diffrank;
pub mod error;
pub mod expsets;
pub mod limits;
pub mod lindiff;
pub mod numpoly;

pub use bounds::{ackermann, order_bound, s0, s1, BoundInputs, BoundReport};
pub use diffrank::{
    compare_rank, kolchin_from_leaders, leader, DifferentialMonomial, LeaderProfile, RankKey,
};
pub use error::{Error, Result};
pub use expsets::{ExponentSet, ExponentVector};
pub use limits::Limits;
pub use lindiff::{LinearDiffSystem, LinearEquation};
pub use numpoly::{MonomialForm, NumericalPolynomial};
