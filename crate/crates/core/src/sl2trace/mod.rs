//! Trace polynomials of words in a free group of rank two.
//!
//! For a word `ω` in generators `a, b` there is a unique polynomial
//! `P_ω(x, y, z)` with `tr ρ(ω) = P_ω(tr ρa, tr ρb, tr ρ(ab))` for every
//! representation `ρ` into `SL2(C)`. It is computed by writing `ω` in the
//! basis `{1, A, B, AB}` of the algebra generated by two unimodular 2x2
//! matrices, one letter at a time. The multiplication table comes from
//! Cayley–Hamilton (`UV + VU = tr V·U + tr U·V + (tr UV − tr U tr V)·1`)
//! and is double-checked against random matrices in [`oracle`].

mod chebyshev;
mod fold;
pub mod oracle;
mod word;

pub use chebyshev::{cheb_s, cheb_t, chebyshev, chebyshev_at, ChebyshevKind};
pub use fold::{fold_word, trace_poly, trace_poly_in, QuadBasisElem, TraceCoords};
pub use oracle::{check_trace_numerically, numeric_trace_oracle, random_word, trace_oracle_report};
pub use word::{FreeWord, Generator, WordParseError};
