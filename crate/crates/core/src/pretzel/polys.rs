use alloc::format;

use crate::exactpoly::MultiPoly;
use crate::sl2trace::{cheb_s, trace_poly, FreeWord, Generator};

use super::PretzelError;

pub const XYZ: [&str; 3] = ["x", "y", "z"];

/// Largest `|n|` for which `w^n` is spelled out letter by letter.
pub const DEFAULT_TRACE_BOUND: i64 = 8;

fn var(name: &str) -> MultiPoly {
    MultiPoly::var(&XYZ, name)
}

/// `S_k(y)` over `(x, y, z)`.
pub fn s(k: i64) -> MultiPoly {
    cheb_s(k, &var("y"))
}

/// `P = x − xy + (−3 + x² + y²)z − xyz² + z³`.
pub fn p_closed() -> MultiPoly {
    let (x, y, z) = (var("x"), var("y"), var("z"));
    let three = MultiPoly::from_int(&XYZ, 3);
    let xy = &x * &y;
    &(&(&(&x - &xy) + &(&(&(&x * &x) + &(&y * &y)) - &three) * &z) - &(&xy * &(&z * &z))) + &z.pow(3)
}

/// `a_n = S_{n−2} + S_{n−3} − S_{n−4} − S_{n−5}`, the `x = z = 0` part of `Q_n`.
pub fn a_n(n: i64) -> MultiPoly {
    &(&(&s(n - 2) + &s(n - 3)) - &s(n - 4)) - &s(n - 5)
}

/// `b_n = −S_{n−2} − S_{n−3}`, the `z²` coefficient of `Q_n`.
pub fn b_n(n: i64) -> MultiPoly {
    -&(&s(n - 2) + &s(n - 3))
}

/// `Q_n = a_n − S_{n−2}x² + (S_{n−1} + S_{n−3} + S_{n−4})xz + b_n z²`.
pub fn q_closed(n: i64) -> MultiPoly {
    let (x, z) = (var("x"), var("z"));
    let xz_coeff = &(&s(n - 1) + &s(n - 3)) + &s(n - 4);
    &(&(&a_n(n) - &(&s(n - 2) * &(&x * &x))) + &(&xz_coeff * &(&x * &z))) + &(&b_n(n) * &(&z * &z))
}

fn a() -> FreeWord {
    FreeWord::letter(Generator::First, 1)
}

fn w() -> FreeWord {
    FreeWord::letter(Generator::Second, 1)
}

/// `E = a w a⁻¹ w⁻¹ a⁻¹`.
pub fn word_e() -> FreeWord {
    FreeWord::new([
        (Generator::First, 1),
        (Generator::Second, 1),
        (Generator::First, -1),
        (Generator::Second, -1),
        (Generator::First, -1),
    ])
}

/// `F = a⁻¹ w⁻¹ a w a w⁻¹`.
pub fn word_f() -> FreeWord {
    FreeWord::new([
        (Generator::First, -1),
        (Generator::Second, -1),
        (Generator::First, 1),
        (Generator::Second, 1),
        (Generator::First, 1),
        (Generator::Second, -1),
    ])
}

/// `P = P_E − P_F` from the trace engine (`x = tr a`, `y = tr w`,
/// `z = tr aw`).
pub fn p_trace() -> MultiPoly {
    &trace_poly(&word_e()) - &trace_poly(&word_f())
}

/// `Q_n = P_{w^n E a} − P_{F w^n a}` from the trace engine.
pub fn q_trace(n: i64) -> Result<MultiPoly, PretzelError> {
    q_trace_bounded(n, DEFAULT_TRACE_BOUND)
}

pub fn q_trace_bounded(n: i64, bound: i64) -> Result<MultiPoly, PretzelError> {
    if n.abs() > bound {
        return Err(PretzelError::OutOfRange(format!("|n| = {} exceeds bound {bound}", n.abs())));
    }
    let wn = w().pow(n);
    let left = &(&wn * &word_e()) * &a();
    let right = &(&word_f() * &wn) * &a();
    Ok(&trace_poly(&left) - &trace_poly(&right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(&XYZ, s).unwrap()
    }

    #[test]
    fn p_closed_basics() {
        let pc = p_closed();
        assert_eq!(pc.coefficient(&[0, 0, 3]), rat(1));
        assert_eq!(pc.eval_at("x", &rat(0)).unwrap(), p("-3*z + y^2*z + z^3"));
        assert!(pc.eval_rational(&[("x", rat(0)), ("y", rat(0)), ("z", rat(0))]).unwrap() == rat(0));
    }

    #[test]
    fn q_closed_small_n() {
        assert_eq!(q_closed(1), p("y^2 + y - 2 - x*y*z + z^2"));
        assert_eq!(q_closed(0).coeff_of("z", 2).unwrap(), p("1 + y"));
    }

    #[test]
    fn trace_forms_match_closed_forms() {
        assert_eq!(p_trace(), p_closed());
        for n in -3..=3 {
            assert_eq!(q_trace(n).unwrap(), q_closed(n), "n={n}");
        }
        assert!(q_trace(9).is_err());
    }
}
