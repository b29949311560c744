//! The `(−2, 3, 2n+1)` pretzel knots.
//!
//! The character variety is cut out of `(x, y, z)`-space by `P` and `Q_n`,
//! both built here twice: from closed Chebyshev forms and from traces of the
//! relator words. On top of that sit the resultant `Res_z(P, Q_n)`, the
//! `x = 0` slice with its Seidenberg certificates, and explicit matrix
//! witnesses for the three special cases `x = 0`, `y = 2`, `y = −2`.

mod polys;
mod resultant;
mod slice;
mod witness;

use alloc::string::String;

use crate::exactpoly::PolyError;

pub use polys::{
    a_n, b_n, p_closed, p_trace, q_closed, q_trace, q_trace_bounded, s, word_e, word_f, DEFAULT_TRACE_BOUND, XYZ,
};
pub use resultant::{e_n, predicted_y_degree, resultant, resultant_report};
pub use slice::{a_roots, seidenberg_check, u_n, u_roots, x0_slice, x0_slice_report, X0SliceData};
pub use witness::{witness_case1, witness_case2, witness_case3, witness_reports};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PretzelError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
