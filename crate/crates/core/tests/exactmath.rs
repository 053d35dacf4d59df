use proptest::prelude::*;
use twisted_doubles::exactmath::{nth_root_solutions, Cyclotomic, Rational, RootOfUnity};

fn r(k: i64, n: u64) -> RootOfUnity {
    RootOfUnity::zeta(n, k)
}

#[test]
fn root_products() {
    assert_eq!(r(1, 2) * r(1, 2), RootOfUnity::ONE);
    assert_eq!(r(1, 4) * r(1, 4), r(1, 2));
    assert_eq!(r(1, 3) * r(1, 6), r(1, 2));
}

#[test]
fn roots_are_reduced() {
    let q = r(6, 8);
    assert_eq!((q.num(), q.den()), (3, 4));
    assert_eq!(r(-1, 4), r(3, 4));
    assert_eq!(r(4, 4), RootOfUnity::ONE);
}

#[test]
fn display_and_parse() {
    assert_eq!(r(3, 4).to_string(), "zeta(4)^3");
    assert_eq!("zeta(4)^3".parse::<RootOfUnity>().unwrap(), r(3, 4));
    assert_eq!("2/4".parse::<RootOfUnity>().unwrap(), r(1, 2));
    assert!("zeta(0)^1".parse::<RootOfUnity>().is_err());
    assert!("half".parse::<RootOfUnity>().is_err());
}

fn sorted(mut v: Vec<RootOfUnity>) -> Vec<RootOfUnity> {
    v.sort_by_key(|q| (q.num() * 1000 / q.den(), q.den()));
    v
}

#[test]
fn square_and_cube_roots() {
    assert_eq!(sorted(nth_root_solutions(2, RootOfUnity::ONE).unwrap()), vec![RootOfUnity::ONE, r(1, 2)]);
    assert_eq!(sorted(nth_root_solutions(2, r(1, 2)).unwrap()), vec![r(1, 4), r(3, 4)]);
    assert_eq!(sorted(nth_root_solutions(3, r(1, 3)).unwrap()), vec![r(1, 9), r(4, 9), r(7, 9)]);
    assert!(nth_root_solutions(0, RootOfUnity::ONE).is_err());
}

fn poly(coeffs: &[i64], n: u64) -> Cyclotomic {
    coeffs.iter().enumerate().fold(Cyclotomic::zero(n), |acc, (i, &c)| {
        acc + Cyclotomic::root(r(i as i64, n)).scale(Rational::from_integer(c))
    })
}

#[test]
fn reduction_examples() {
    assert!(poly(&[1, 0, 1], 4).is_zero());
    assert_eq!(poly(&[0, 1], 2), Cyclotomic::from_int(-1, 2));
    assert_eq!(poly(&[0, 1], 2).as_rational(), Some(Rational::from_integer(-1)));
    assert!(poly(&[1, 1, 1], 3).is_zero());
}

#[test]
fn roots_inside_cyclotomic_fields() {
    let i = Cyclotomic::root(r(1, 4));
    assert_eq!(&i * &i, Cyclotomic::from_int(-1, 4));
    assert_eq!(i.as_root(), Some(r(1, 4)));
    assert_eq!((&i + &Cyclotomic::one(4)).as_root(), None);
    assert_eq!(i.inverse().unwrap(), Cyclotomic::root(r(3, 4)));
    assert!(Cyclotomic::zero(4).inverse().is_err());
    assert!(Cyclotomic::from_root(r(1, 3), 4).is_err());
}

#[test]
fn mixed_orders_lift_to_lcm() {
    let s = Cyclotomic::root(r(1, 4)) + Cyclotomic::root(r(1, 3));
    assert_eq!(s.order(), 12);
    let back = s - Cyclotomic::root(r(1, 3));
    assert_eq!(back.as_root(), Some(r(1, 4)));
}

fn root_strategy() -> impl Strategy<Value = RootOfUnity> {
    (1u64..=24).prop_flat_map(|n| (0..n as i64).prop_map(move |k| RootOfUnity::zeta(n, k)))
}

/// Product of integer polynomials in `x`, then evaluated at `ζ_n` term by term.
fn naive_product(p: &[i64], q: &[i64], n: u64) -> Cyclotomic {
    let mut prod = vec![0i64; p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            prod[i + j] += a * b;
        }
    }
    poly(&prod, n)
}

proptest! {
    #[test]
    fn root_group_laws(a in root_strategy(), b in root_strategy(), c in root_strategy()) {
        prop_assert_eq!((a * b) * c, a * (b * c));
        prop_assert_eq!(a * b, b * a);
        prop_assert_eq!(a * RootOfUnity::ONE, a);
        prop_assert_eq!(a * a.inv(), RootOfUnity::ONE);
    }

    #[test]
    fn nth_roots_solve(n in 1u64..=12, order in 1u64..=12, k in 0i64..12) {
        let target = RootOfUnity::zeta(order, k);
        let sols = nth_root_solutions(n, target).unwrap();
        prop_assert_eq!(sols.len() as u64, n);
        let mut distinct = sols.clone();
        distinct.sort_by_key(|q| (q.num(), q.den()));
        distinct.dedup();
        prop_assert_eq!(distinct.len() as u64, n);
        for s in sols {
            prop_assert_eq!(s.pow(n as i64), target);
        }
    }

    #[test]
    fn reduction_is_multiplicative(
        n in 1u64..=12,
        p in prop::collection::vec(-5i64..=5, 1..=4),
        q in prop::collection::vec(-5i64..=5, 1..=4),
    ) {
        prop_assert_eq!(&poly(&p, n) * &poly(&q, n), naive_product(&p, &q, n));
    }

    #[test]
    fn nonzero_elements_invert(n in 1u64..=12, p in prop::collection::vec(-4i64..=4, 1..=4)) {
        let x = poly(&p, n);
        prop_assume!(!x.is_zero());
        prop_assert_eq!(&x * &x.inverse().unwrap(), Cyclotomic::one(n));
    }
}
