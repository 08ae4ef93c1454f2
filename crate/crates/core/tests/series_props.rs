use carlitz_core::series::Mono;
use carlitz_core::{MultiSeries, Rational, Truncation, UniSeries, Var};
use proptest::prelude::*;

fn ring() -> Truncation {
    Truncation::half_perimeter(4, &[Var::T, Var::Y, Var::Q]).unwrap()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Small series with constant term `(a/b)^2`; odd powers of `t` are folded
/// to even ones when `even_t` is set.
fn series(even_t: bool) -> impl Strategy<Value = MultiSeries> {
    let term = (0u32..=6, 0u32..=3, 0u32..=3, -3i64..=3);
    (1i64..=3, 1i64..=3, prop::collection::vec(term, 0..10)).prop_map(move |(a, b, terms)| {
        let c0 = Rational::new((a * a).into(), (b * b).into());
        let rest = terms
            .into_iter()
            .map(|(t, y, q, c)| (if even_t { t & !1 } else { t }, y, q, c))
            .filter(|&(t, y, _, _)| t + y > 0)
            .map(|(t, y, q, c)| (Mono::new([t, y, 0, q, 0]), int(c)));
        MultiSeries::from_terms(&ring(), std::iter::once((Mono::ONE, c0)).chain(rest))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn sqrt_squares_back(s in series(false)) {
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }

    #[test]
    fn inverse_is_two_sided(s in series(false)) {
        let one = MultiSeries::one(s.truncation());
        let inv = s.invert().unwrap();
        prop_assert_eq!(&s * &inv, one.clone());
        prop_assert_eq!(&inv * &s, one);
    }

    #[test]
    fn ring_axioms(a in series(false), b in series(false), c in series(false)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn product_rule(a in series(false), b in series(false)) {
        for v in [Var::T, Var::Y, Var::Q] {
            let lhs = (&a * &b).derive(v).unwrap();
            let ring = lhs.truncation().clone();
            let rhs = &(&a.derive(v).unwrap() * &b.restrict(&ring).unwrap())
                + &(&a.restrict(&ring).unwrap() * &b.derive(v).unwrap());
            prop_assert!(lhs.eq_truncated(&rhs).unwrap());
        }
    }

    #[test]
    fn even_in_t_stays_even(a in series(true), b in series(true)) {
        prop_assert!(a.is_even_in(Var::T));
        let built = &(&a * &b.invert().unwrap()) + &(&a.sqrt().unwrap() * &b.pow(2));
        prop_assert!(built.is_even_in(Var::T));
    }

    #[test]
    fn dense_inverse_and_root(c in prop::collection::vec(-4i64..=4, 1..30)) {
        let mut coeffs = c.clone();
        coeffs[0] = 1;
        let s = UniSeries::from_ints(40, &coeffs);
        prop_assert_eq!(&s * &s.inv().unwrap(), UniSeries::one(40));
        let r = s.sqrt().unwrap();
        prop_assert_eq!(&r * &r, s);
    }
}

#[test]
fn sqrt_rejects_non_square_constant() {
    let s = MultiSeries::integer(&ring(), 2);
    assert!(s.sqrt().is_err());
    assert!(MultiSeries::zero(&ring()).invert().is_err());
}
