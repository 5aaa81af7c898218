use lff_core::{EulerFactor, Monomial, Q};
use proptest::prelude::*;

fn q_strategy(den: i64, span: i64) -> impl Strategy<Value = Q> {
    (-span..=span).prop_map(move |n| Q::new(n, den))
}

fn monomial() -> impl Strategy<Value = Monomial> {
    (
        (0i64..12, 1i64..7),
        q_strategy(4, 8),
        prop::collection::vec((1u32..4, q_strategy(2, 4)), 0..3),
    )
        .prop_map(|((j, n), qe, syms)| {
            let mut m = Monomial::zeta(j, n) * Monomial::q_pow(qe);
            for (id, e) in syms {
                m = m * Monomial::symbol_pow(id, e);
            }
            m
        })
}

fn factor() -> impl Strategy<Value = EulerFactor> {
    prop::collection::vec((monomial(), 1u32..3), 0..4).prop_map(|rs| {
        let mut e = EulerFactor::one();
        for (u, m) in rs {
            e.insert(u, m);
        }
        e
    })
}

fn cfg() -> ProptestConfig {
    ProptestConfig::with_cases(10_000)
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn monomial_group(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &Monomial::one(), a.clone());
        prop_assert!((&a * &a.inv()).is_one());
        prop_assert_eq!(&(&a / &b) * &b, a.clone());
    }

    #[test]
    fn monomial_sqrt_and_real_part(a in monomial(), b in monomial()) {
        let r = a.sqrt();
        prop_assert_eq!(&r * &r, a.clone());
        prop_assert_eq!((&a * &b).real_part(), a.real_part() + b.real_part());
        prop_assert_eq!(a.pow(3).real_part(), a.real_part() * 3);
    }

    #[test]
    fn monomial_round_trip(a in monomial()) {
        let s = a.to_string();
        prop_assert_eq!(s.parse::<Monomial>().unwrap(), a);
    }

    #[test]
    fn lcm_lattice(a in factor(), b in factor(), c in factor()) {
        prop_assert_eq!(a.lcm(&b).lcm(&c), a.lcm(&b.lcm(&c)));
        prop_assert_eq!(a.lcm(&b), b.lcm(&a));
        prop_assert_eq!(a.lcm(&a), a.clone());
        prop_assert!(a.divides(&a.lcm(&b)));
        prop_assert!(a.gcd(&b).divides(&a));
        prop_assert_eq!(a.gcd(&b).mul(&a.lcm(&b)), a.mul(&b));
        prop_assert_eq!(a.mul(&b).div_exact(&b).unwrap(), a.clone());
        if a.divides(&b) && b.divides(&a) {
            prop_assert_eq!(&a, &b);
        }
    }

    #[test]
    fn shift_and_dilate_are_homomorphisms(a in factor(), b in factor(), c in q_strategy(2, 4)) {
        prop_assert_eq!(a.mul(&b).shift(c), a.shift(c).mul(&b.shift(c)));
        prop_assert_eq!(a.mul(&b).dilate2(), a.dilate2().mul(&b.dilate2()));
        prop_assert_eq!(a.lcm(&b).shift(c), a.shift(c).lcm(&b.shift(c)));
        prop_assert_eq!(a.lcm(&b).dilate2(), a.dilate2().lcm(&b.dilate2()));
        prop_assert_eq!(a.shift(c).shift(-c), a.clone());
    }

    #[test]
    fn dilate2_pairs_roots(a in factor()) {
        let d = a.dilate2();
        prop_assert_eq!(d.negate_variable(), d.clone());
        prop_assert_eq!(d.degree(), 2 * a.degree());
        for (u, m) in a.roots() {
            let r = u.sqrt();
            prop_assert_eq!(d.multiplicity(&r), m);
            prop_assert_eq!(d.multiplicity(&(Monomial::minus_one() * &r)), m);
        }
    }

    #[test]
    fn euler_round_trip(a in factor()) {
        prop_assert_eq!(a.to_string().parse::<EulerFactor>().unwrap(), a);
    }
}
