//! Exact algebra behind SL2 character varieties of knot groups.
//!
//! The crate is `no_std` (it needs `alloc`) and has no IO. It provides
//!
//! * [`exactpoly`]: sparse multivariate Laurent polynomials over the
//!   rationals, gcds, resultants, square-free tests, Newton polygons, rational
//!   functions and 2x2 matrices over them;
//! * [`sl2trace`]: Fricke trace polynomials of words in a rank-2 free group;
//! * [`twobridge`]: the defining polynomial of the non-abelian character
//!   variety of a two-bridge knot and its structural certificates;
//! * [`pretzel`]: the two defining polynomials for the (-2,3,2n+1)-pretzel
//!   knots with their resultant, radicality and representation witnesses;
//! * [`qtorus`]: the quantum torus, its involution, the `t = -1`
//!   specialization and recurrence checks for the unknot.
//!
//! Checks that tie a computation to a published identity return a
//! [`VerificationReport`].

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod exactpoly;
pub mod pretzel;
pub mod qtorus;
pub mod report;
pub mod sl2trace;
pub mod twobridge;

pub use exactpoly::{ArithOp, Matrix2, MultiPoly, NewtonPolygon, PolyError, Rational, RationalFunction};
pub use report::{Detail, Status, VerificationReport};
pub use sl2trace::{FreeWord, Generator};
