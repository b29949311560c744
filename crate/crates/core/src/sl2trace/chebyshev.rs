use crate::exactpoly::MultiPoly;

/// Which Chebyshev family: `S` starts `(1, y)`, `T` starts `(2, y)`; both
/// obey `f(k+1) = y·f(k) − f(k−1)` for every integer `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChebyshevKind {
    S,
    T,
}

/// `S_k` or `T_k` evaluated at the polynomial `y`, for any integer `k`.
pub fn chebyshev_at(kind: ChebyshevKind, k: i64, y: &MultiPoly) -> MultiPoly {
    let f0 = match kind {
        ChebyshevKind::S => y.one_like(),
        ChebyshevKind::T => y.constant_like(crate::exactpoly::rat(2)),
    };
    let f1 = y.clone();
    if k == 0 {
        return f0;
    }
    if k > 0 {
        let (mut prev, mut cur) = (f0, f1);
        for _ in 1..k {
            let next = &(y * &cur) - &prev;
            prev = cur;
            cur = next;
        }
        cur
    } else {
        // Run the recursion backwards: f(k−1) = y·f(k) − f(k+1).
        let (mut next, mut cur) = (f1, f0);
        for _ in 0..-k {
            let prev = &(y * &cur) - &next;
            next = cur;
            cur = prev;
        }
        cur
    }
}

/// `S_k(y)` as a polynomial in the single variable `y`.
pub fn chebyshev(kind: ChebyshevKind, k: i64) -> MultiPoly {
    chebyshev_at(kind, k, &MultiPoly::var(&["y"], "y"))
}

pub fn cheb_s(k: i64, y: &MultiPoly) -> MultiPoly {
    chebyshev_at(ChebyshevKind::S, k, y)
}

pub fn cheb_t(k: i64, y: &MultiPoly) -> MultiPoly {
    chebyshev_at(ChebyshevKind::T, k, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;

    fn y(s: &str) -> MultiPoly {
        MultiPoly::parse(&["y"], s).unwrap()
    }

    #[test]
    fn small_indices() {
        assert_eq!(chebyshev(ChebyshevKind::S, 2), y("y^2 - 1"));
        assert_eq!(chebyshev(ChebyshevKind::S, -1), y("0"));
        assert_eq!(chebyshev(ChebyshevKind::S, -2), y("-1"));
        assert_eq!(chebyshev(ChebyshevKind::T, 4), y("y^4 - 4*y^2 + 2"));
        assert_eq!(chebyshev(ChebyshevKind::T, -3), chebyshev(ChebyshevKind::T, 3));
    }

    #[test]
    fn values_at_minus_one_cycle_with_period_three() {
        for k in -12..=12i64 {
            let v = chebyshev(ChebyshevKind::S, k).eval_at("y", &rat(-1)).unwrap();
            let expect = match k.rem_euclid(3) {
                0 => 1,
                1 => -1,
                _ => 0,
            };
            assert_eq!(v.as_constant().unwrap(), rat(expect), "k={k}");
        }
    }

    #[test]
    fn values_at_two_are_k_plus_one() {
        for k in -8..=8i64 {
            let s2 = chebyshev(ChebyshevKind::S, k).eval_at("y", &rat(2)).unwrap();
            assert_eq!(s2.as_constant().unwrap(), rat(k + 1));
            let sm2 = chebyshev(ChebyshevKind::S, k).eval_at("y", &rat(-2)).unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(sm2.as_constant().unwrap(), rat(sign * (k + 1)));
        }
    }

    #[test]
    fn t_is_difference_of_s() {
        let v = MultiPoly::var(&["y"], "y");
        for k in -7..=7 {
            assert_eq!(cheb_t(k, &v), &cheb_s(k, &v) - &cheb_s(k - 2, &v));
        }
    }
}
