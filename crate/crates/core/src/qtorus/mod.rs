//! The quantum torus `Q[t^±1]⟨L^±1, M^±1⟩ / (LM − t² ML)`.
//!
//! Elements are kept as `Σ a_j(t, M) L^j`. Coefficients come either from
//! Laurent polynomials in `t, M` or from their localization at `1 + t`
//! (needed for heights and the weak division step). The torus acts on
//! sequences `Z → Q[t^±1]` by `(Lf)(n) = f(n+1)`, `(Mf)(n) = t^{2n} f(n)`,
//! which is how the unknot's recurrence is checked.

mod action;
mod checks;
mod coeff;
mod division;
mod elem;
mod symmetry;

use alloc::string::String;

pub use action::{act, alpha_unknot, annihilation_check, apply, jones_unknot, jones_unknot_seq, t_poly, DiscreteSeq};
pub use checks::{algebra_reports, random_element, unknot_demo, UnknotDemo};
pub use coeff::{height_of, is_m_only, tm, to_tm, Height, LocalizedScalar, TorusCoeff, TM};
pub use division::weak_divide;
pub use elem::{upsilon, QTElem, ML};
pub use symmetry::{sigma_symmetry_factor, SigmaFactor, SigmaOrdering};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QTorusError {
    #[error("weak division precondition failed: {0}")]
    Division(String),
}
