//! Analysis of the degree of regularity of linear homogeneous equations
//! `a_1 x_1 + ... + a_n x_n = 0` over the positive integers.
//!
//! The crate provides:
//!
//! - exact equation arithmetic, Rado's regularity condition, and forbidden
//!   ratios ([`algebra`]);
//! - linkage matrices over forbidden ratios, which certify lower bounds on
//!   the degree of regularity, and the pigeonhole walk that extracts a
//!   monochromatic solution from any coloring with too few colors
//!   ([`linkage`]);
//! - finite colorings of `[1, N]`, verification, backtracking search for
//!   solution-free colorings, and the least interval length that forces a
//!   monochromatic solution ([`coloring`]);
//! - monochromatic solutions that additionally satisfy finite sets of
//!   linear inequalities, via monochromatic progression families
//!   ([`strong`]).

pub mod algebra;
pub mod coloring;
pub mod linkage;
pub mod strong;

pub use algebra::{Equation, Rational, SolutionTuple};
