use alloc::format;
use alloc::vec::Vec;

use crate::exactpoly::{rat, MultiPoly, NewtonPolygon};
use crate::report::VerificationReport;
use crate::sl2trace::{cheb_s, trace_poly_in, FreeWord, TraceCoords};

use super::knot::{epsilon_sequence, word_letters, TwoBridgeKnot};
use super::TwoBridgeError;

/// Traces `|w^{(j)}|`, `j = 0, …, d − 1`, in `(x, z)` with both generators
/// of trace `x`. `|w^{(j)}|` is also `|w_{j+1}|` in the leading-term
/// recursion, so both computations share this table.
pub fn trimmed_traces(k: &TwoBridgeKnot) -> Vec<MultiPoly> {
    let coords = TraceCoords::meridional();
    let letters = word_letters(k);
    let n = letters.len();
    (0..k.d() as usize).map(|j| trace_poly_in(&FreeWord::new(letters[j..n - j].iter().copied()), &coords)).collect()
}

fn alternating_sum(k: &TwoBridgeKnot, traces: &[MultiPoly]) -> MultiPoly {
    let xz = ["x", "z"];
    let sign = if k.d().is_multiple_of(2) { 1 } else { -1 };
    let mut acc = MultiPoly::from_int(&xz, sign);
    for (j, t) in traces.iter().enumerate() {
        acc = if j % 2 == 0 { &acc + t } else { &acc - t };
    }
    acc
}

/// `Φ_(p,m)(x, z) = |w| − |w'| + ⋯ + (−1)^{d−1}|w^{(d−1)}| + (−1)^d`.
///
/// The result is checked to involve only even powers of `x` and to have
/// `z`-leading term exactly `z^d`.
pub fn phi(k: &TwoBridgeKnot) -> Result<MultiPoly, TwoBridgeError> {
    phi_from_traces(k, &trimmed_traces(k))
}

pub fn phi_from_traces(k: &TwoBridgeKnot, traces: &[MultiPoly]) -> Result<MultiPoly, TwoBridgeError> {
    let f = alternating_sum(k, traces);
    if f.terms().any(|(e, _)| e[0] % 2 != 0) {
        return Err(TwoBridgeError::Inconsistent(format!("{k}: odd power of x in Phi")));
    }
    let d = k.d() as i32;
    let lead = f.coeff_of("z", d)?;
    if f.degree_in("z")? != Some(d) || !lead.is_one() {
        return Err(TwoBridgeError::Inconsistent(format!("{k}: z-leading term of Phi is not z^{d}")));
    }
    Ok(f)
}

/// Rewrites a polynomial in `(x, z)` with only even `x`-powers into `(X, z)`,
/// `X = x²`.
pub fn to_big_x(f: &MultiPoly) -> Result<MultiPoly, TwoBridgeError> {
    let g =
        f.substitute_power("x", 2, "X").map_err(|_| TwoBridgeError::Inconsistent(format!("odd power of x in {f}")))?;
    Ok(g.aligned_str(&["X", "z"])?)
}

/// `z^a (z − X)^b` in `(X, z)`.
fn lead_form(a: u32, b: u32) -> MultiPoly {
    let v = ["X", "z"];
    let z = MultiPoly::var(&v, "z");
    let zx = &z - &MultiPoly::var(&v, "X");
    &z.pow(a) * &zx.pow(b)
}

/// `Γ_(p,m)(X, z) = Φ_(p,m)(x, z)` with `X = x²`; its top homogeneous part
/// is checked to be `z^{d−c}(z − X)^c`.
pub fn gamma(k: &TwoBridgeKnot) -> Result<MultiPoly, TwoBridgeError> {
    gamma_from_phi(k, &phi(k)?)
}

pub fn gamma_from_phi(k: &TwoBridgeKnot, phi: &MultiPoly) -> Result<MultiPoly, TwoBridgeError> {
    let g = to_big_x(phi)?;
    if g.top_degree_part() != lead_form(k.d() - k.c(), k.c()) {
        return Err(TwoBridgeError::Inconsistent(format!("{k}: top-degree part of Gamma is {}", g.top_degree_part())));
    }
    Ok(g)
}

/// `Φ_d(z) = S_d(z) − S_{d−1}(z)` over the variable list `(x, z)`.
pub fn phi_torus(d: u32) -> MultiPoly {
    let z = MultiPoly::var(&["x", "z"], "z");
    &cheb_s(d.into(), &z) - &cheb_s(i64::from(d) - 1, &z)
}

/// `Φ_(p,m)(0, z) = Φ_d(z)`.
pub fn check_x_zero(k: &TwoBridgeKnot, phi: &MultiPoly) -> VerificationReport {
    let mut r = VerificationReport::new("XZeroSpecialization", k.label());
    match phi.eval_at("x", &rat(0)) {
        Ok(slice) => {
            r.check("equals_S_d_minus_S_d_minus_1", slice == phi_torus(k.d()));
        }
        Err(e) => r.fail("error", format!("{e}")),
    }
    r
}

/// The two lattice points `(0, d)` and `(c, (p − m)/2)` must be vertices of
/// the Newton polygon of `Γ` (coordinates: `X`-exponent, `z`-exponent).
pub fn check_newton_vertices(k: &TwoBridgeKnot) -> VerificationReport {
    match gamma(k) {
        Ok(g) => newton_report(k, &g),
        Err(e) => {
            let mut r = VerificationReport::new("NewtonVertices", k.label());
            r.fail("error", format!("{e}"));
            r
        }
    }
}

pub fn newton_report(k: &TwoBridgeKnot, gamma: &MultiPoly) -> VerificationReport {
    let mut r = VerificationReport::new("NewtonVertices", k.label());
    let poly = match NewtonPolygon::of(gamma) {
        Ok(p) => p,
        Err(e) => {
            r.fail("error", format!("{e}"));
            return r;
        }
    };
    let first = (0, i64::from(k.d()));
    let second = (i64::from(k.c()), i64::from((k.p() - k.m()) / 2));
    r.check("vertex_0_d", poly.is_vertex(first));
    r.check("vertex_c_(p-m)/2", poly.is_vertex(second));
    let verts: Vec<_> = poly.vertices().iter().map(|(a, b)| format!("({a},{b})")).collect();
    r.detail("vertices", verts);
    r
}

/// Leading terms of the traces `|w_j|`, `j = 1, …, d`:
/// total degree `d + 1 − j` in `(X, z)` and top part
/// `z^{d+1−j−c_j}(z − X)^{c_j}`, where `c_j` counts the sign changes
/// `ν_k ν_{k+1} = −1` for `k ≥ j`, with `ν = ε`.
pub fn check_prop_lot(k: &TwoBridgeKnot) -> VerificationReport {
    prop_lot_report(k, &trimmed_traces(k))
}

pub fn prop_lot_report(k: &TwoBridgeKnot, traces: &[MultiPoly]) -> VerificationReport {
    let mut r = VerificationReport::new("LeadingTerms", k.label());
    let d = k.d() as usize;
    let nu = epsilon_sequence(k);
    let mu: Vec<i32> = (0..d).map(|j| nu[j] * nu[j + 1]).collect();
    let mut per_j = Vec::with_capacity(d);
    let mut cs = Vec::with_capacity(d);
    for j in 1..=d {
        let c_j = mu[j - 1..].iter().filter(|m| **m == -1).count() as u32;
        cs.push(c_j as i64);
        let ok = match to_big_x(&traces[j - 1]) {
            Ok(t) => {
                let deg = (d + 1 - j) as u32;
                t.total_degree() == Some(deg as i32) && t.top_degree_part() == lead_form(deg - c_j, c_j)
            }
            Err(_) => false,
        };
        per_j.push(ok);
    }
    r.check("all_j", per_j.iter().all(|b| *b));
    r.detail("per_j", per_j);
    r.detail("c_j", cs);
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(p: u32, m: u32) -> TwoBridgeKnot {
        TwoBridgeKnot::new(p, m).unwrap()
    }

    fn xz(s: &str) -> MultiPoly {
        MultiPoly::parse(&["x", "z"], s).unwrap()
    }

    #[test]
    fn small_phis() {
        assert_eq!(phi(&k(3, 1)).unwrap(), xz("z - 1"));
        assert_eq!(phi(&k(5, 1)).unwrap(), xz("z^2 - z - 1"));
        let f = phi(&k(5, 3)).unwrap();
        assert_eq!(f.eval_at("x", &rat(0)).unwrap(), xz("z^2 - z - 1"));
    }

    #[test]
    fn gamma_top_parts() {
        let v = ["X", "z"];
        let g = gamma(&k(5, 3)).unwrap();
        assert_eq!(g.top_degree_part(), MultiPoly::parse(&v, "z^2 - X*z").unwrap());
        let g = gamma(&k(7, 3)).unwrap();
        assert_eq!(g.top_degree_part(), MultiPoly::parse(&v, "z^3 - X*z^2").unwrap());
        assert_eq!(gamma(&k(3, 1)).unwrap(), MultiPoly::parse(&v, "z - 1").unwrap());
    }

    #[test]
    fn newton_vertices() {
        for (p, m) in [(7, 3), (3, 1), (25, 3)] {
            assert!(check_newton_vertices(&k(p, m)).passed(), "b({p},{m})");
        }
    }

    #[test]
    fn leading_terms() {
        let r = check_prop_lot(&k(5, 3));
        assert!(r.passed());
        assert_eq!(r.get("c_j"), Some(&alloc::vec![1i64, 0].into()));
        assert!(check_prop_lot(&k(7, 1)).passed());
    }
}
