//! Exact computation of the peripheral ideal, the noncommutative A-ideal and
//! the colored Kauffman brackets of the figure-eight knot.
//!
//! Everything is exact arithmetic over Q(t). The layers, bottom up:
//!
//! - [`coeff`]: Laurent polynomials and rational functions in `t`.
//! - [`chebyshev`]: the polynomials `T_n` and `S_n`.
//! - [`torus`]: the skein algebra of the torus, basis `(p,q)_T`.
//! - [`qplane`]: the noncommutative torus `lm = t^2 ml` and the quantum plane.
//! - [`skein`]: the skein module of the knot complement and the action on it.
//! - [`peripheral`]: peripheral ideal generators, transcribed and re-derived.
//! - [`aideal`]: the noncommutative A-ideal generators.
//! - [`kappa`]: the recursion for the colored Kauffman brackets.
//! - [`diagram`]: an independent state-sum bracket on planar diagrams.
//! - [`report`], [`suite`]: the verification suite.
//! - [`cli`]: the `fig8` command line.

macro_rules! forward_owned {
    ($tr:ident, $m:ident, $ty:ty) => {
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&$ty> for $ty {
            type Output = $ty;
            fn $m(self, rhs: &$ty) -> $ty {
                (&self).$m(rhs)
            }
        }
    };
}

pub mod aideal;
pub mod chebyshev;
pub mod cli;
pub mod coeff;
pub mod diagram;
pub mod expr;
pub mod kappa;
pub mod linalg;
pub mod peripheral;
pub mod qplane;
pub mod report;
pub mod skein;
pub mod suite;
pub mod torus;

pub use coeff::{LaurentPoly, RatFunc};
pub use qplane::QPlaneElement;
pub use skein::{engine, Channel, SkeinElement, XPoly};
pub use torus::{Pair, TorusElement};
