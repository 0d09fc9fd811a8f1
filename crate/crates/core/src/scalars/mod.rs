//! Exact scalars: big rationals, polynomials and rational functions in ω,
//! and one-variable polynomials over an arbitrary coefficient ring.

pub mod intpoly;
pub mod poly;
pub mod ratfunc;
pub mod rational;
pub mod unipoly;

pub use intpoly::IntPoly;
pub use poly::{poly_gcd, OmegaPoly};
pub use ratfunc::OmegaRatFunc;
pub use rational::{format_rational, int, parse_rational, rat, BigRational};
pub use unipoly::{Coefficient, RingCoefficient, UniPoly};
