use charvar_core::exactpoly::{rat, MultiPoly, NewtonPolygon};
use charvar_core::qtorus::random_element;
use charvar_core::sl2trace::trace_poly;
use charvar_core::{FreeWord, Generator};
use num_rational::BigRational;
use proptest::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;

const XYZ: [&str; 3] = ["x", "y", "z"];

fn poly3(max_terms: usize, max_deg: i32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0..=max_deg, 0..=max_deg, 0..=max_deg), -4i64..=4), 0..=max_terms).prop_map(|terms| {
        MultiPoly::from_terms(&XYZ, &[], terms.into_iter().map(|((a, b, c), k)| (vec![a, b, c], rat(k)))).unwrap()
    })
}

/// Monic of `z`-degree 3: the random part stays below degree 3.
fn nonconstant_in_z() -> impl Strategy<Value = MultiPoly> {
    poly3(3, 2).prop_map(|p| &p + &MultiPoly::var(&XYZ, "z").pow(3))
}

fn poly2(max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((0..=4i32, 0..=4i32), 1i64..=5), 1..=max_terms).prop_map(|terms| {
        MultiPoly::from_terms(&["u", "v"], &[], terms.into_iter().map(|((a, b), k)| (vec![a, b], rat(k)))).unwrap()
    })
}

fn word(max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((any::<bool>(), -3i32..=3), 0..=max_len).prop_map(|s| {
        FreeWord::new(
            s.into_iter()
                .filter(|(_, e)| *e != 0)
                .map(|(g, e)| (if g { Generator::First } else { Generator::Second }, e)),
        )
    })
}

fn point() -> impl Strategy<Value = [BigRational; 3]> {
    (-5i64..=5, -5i64..=5, 1i64..=4).prop_map(|(a, b, d)| [rat(a), rat(b), BigRational::new(d.into(), 3.into())])
}

fn eval(p: &MultiPoly, pt: &[BigRational; 3]) -> BigRational {
    p.eval_rational(&[("x", pt[0].clone()), ("y", pt[1].clone()), ("z", pt[2].clone())]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in poly3(5, 3), b in poly3(5, 3), c in poly3(5, 3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly3(5, 3), b in poly3(5, 3), pt in point()) {
        prop_assert_eq!(eval(&(&a * &b), &pt), eval(&a, &pt) * eval(&b, &pt));
        prop_assert_eq!(eval(&(&a - &b), &pt), eval(&a, &pt) - eval(&b, &pt));
    }

    #[test]
    fn text_round_trip(a in poly3(6, 4)) {
        prop_assert_eq!(MultiPoly::parse(&XYZ, &a.to_string()).unwrap(), a);
    }

    #[test]
    fn gcd_finds_a_planted_factor(a in poly3(3, 2), b in poly3(3, 2), c in nonconstant_in_z()) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert!(g.is_divisible_by(&c), "gcd {} misses {}", g, c);
        if !a.is_zero() {
            prop_assert!((&a * &c).is_divisible_by(&g));
        }
    }

    #[test]
    fn resultant_vanishes_on_a_common_factor(f in poly3(3, 2), h in nonconstant_in_z(), g in nonconstant_in_z()) {
        prop_assume!(!f.is_zero());
        prop_assert!((&f * &h).resultant_in(&h, "z").unwrap().is_zero());
        let r = g.resultant_in(&h, "z").unwrap();
        prop_assert!(!r.has_var("z") || r.is_constant_in("z").unwrap());
    }

    #[test]
    fn newton_polygon_of_a_product_is_the_sum(f in poly2(5), g in poly2(5)) {
        // Positive coefficients: no cancellation, so the product's polygon
        // is exactly the Minkowski sum.
        let pf = NewtonPolygon::of(&f).unwrap();
        let pg = NewtonPolygon::of(&g).unwrap();
        let sums: Vec<(i64, i64)> = pf
            .vertices()
            .iter()
            .flat_map(|a| pg.vertices().iter().map(move |b| (a.0 + b.0, a.1 + b.1)))
            .collect();
        prop_assert_eq!(NewtonPolygon::of(&(&f * &g)).unwrap(), NewtonPolygon::from_points(sums));
    }

    #[test]
    fn trace_is_a_class_function(w in word(6), k in 0usize..8) {
        let t = trace_poly(&w);
        if !w.is_empty() {
            prop_assert_eq!(&trace_poly(&w.rotate(k % w.len())), &t);
        }
        prop_assert_eq!(&trace_poly(&w.inverse()), &t);
    }

    #[test]
    fn fricke_product_rule(u in word(4), v in word(4)) {
        // tr(UV) + tr(UV⁻¹) = tr(U) tr(V)
        let lhs = &trace_poly(&(&u * &v)) + &trace_poly(&(&u * &v.inverse()));
        prop_assert_eq!(lhs, &trace_poly(&u) * &trace_poly(&v));
    }

    #[test]
    fn word_text_round_trip(w in word(8)) {
        prop_assert_eq!(FreeWord::parse(&w.to_text(["a", "b"]), ["a", "b"]).unwrap(), w);
    }

    #[test]
    fn quantum_torus_laws(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (random_element(&mut rng), random_element(&mut rng), random_element(&mut rng));
        prop_assert_eq!(a.qt_mul(&b).qt_mul(&c), a.qt_mul(&b.qt_mul(&c)));
        prop_assert_eq!(a.qt_mul(&b).sigma(), a.sigma().qt_mul(&b.sigma()));
        prop_assert_eq!(a.sigma().sigma(), a.clone());
        prop_assert_eq!(a.qt_mul(&b).epsilon(), &a.epsilon() * &b.epsilon());
    }
}
