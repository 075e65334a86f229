use bertini_core::ring::{Domain, Monomial, Polynomial, Scalar, Variable, MERSENNE_61};
use proptest::prelude::*;

const VARS: [Variable; 6] = [Variable::A1, Variable::B2p, Variable::C2, Variable::Y1, Variable::Y3, Variable::U2];

fn poly_in(domain: Domain) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec((0..VARS.len(), 0u32..4), 0..4), -9i64..10, 1i64..4);
    prop::collection::vec(term, 0..6).prop_map(move |terms| {
        let terms = terms.into_iter().map(|(pairs, n, d)| {
            let m = Monomial::from_pairs(pairs.into_iter().map(|(i, e)| (VARS[i], e))).unwrap();
            let c = match domain {
                Domain::Rational => Scalar::ratio(n, d).unwrap(),
                Domain::Prime(p) => Scalar::from_i64(n * d, Domain::Prime(p)),
            };
            (m, c)
        });
        Polynomial::from_terms(domain, terms).unwrap()
    })
}

fn integer_poly() -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec((0..VARS.len(), 0u32..4), 0..4), -1000i64..1000);
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let terms = terms.into_iter().map(|(pairs, n)| {
            let m = Monomial::from_pairs(pairs.into_iter().map(|(i, e)| (VARS[i], e))).unwrap();
            (m, Scalar::from_i64(n, Domain::Rational))
        });
        Polynomial::from_terms(Domain::Rational, terms).unwrap()
    })
}

fn domains() -> impl Strategy<Value = Domain> {
    prop_oneof![Just(Domain::Rational), Just(Domain::Prime(101)), Just(Domain::Prime(MERSENNE_61))]
}

fn triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial)> {
    domains().prop_flat_map(|d| (poly_in(d), poly_in(d), poly_in(d)))
}

fn assignment(domain: Domain, values: &[i64]) -> Vec<(Variable, Scalar)> {
    VARS.iter().zip(values).map(|(v, x)| (*v, Scalar::from_i64(*x, domain))).collect()
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(a.domain()), a.clone());
    }

    #[test]
    fn exact_division_inverts_multiplication((q, d, _) in triple()) {
        prop_assume!(!d.is_zero());
        prop_assert_eq!((&q * &d).exact_div(&d).unwrap(), q);
    }

    #[test]
    fn evaluation_is_a_homomorphism((a, b, _) in triple(), values in prop::collection::vec(-50i64..50, VARS.len())) {
        let x = assignment(a.domain(), &values);
        let ea = a.evaluate(&x).unwrap();
        let eb = b.evaluate(&x).unwrap();
        prop_assert_eq!((&a * &b).evaluate(&x).unwrap(), &ea * &eb);
        prop_assert_eq!((&a + &b).evaluate(&x).unwrap(), &ea + &eb);
    }

    #[test]
    fn text_roundtrip((a, _, _) in triple()) {
        let text = a.canonical_text();
        prop_assert_eq!(Polynomial::parse_text_in(&text, a.domain()).unwrap(), a);
    }

    #[test]
    fn swap_is_an_involutive_automorphism((a, b, _) in triple()) {
        prop_assert_eq!(a.swap_primes().swap_primes(), a.clone());
        prop_assert_eq!((&a * &b).swap_primes(), a.swap_primes() * b.swap_primes());
        prop_assert_eq!((&a + &b).swap_primes(), a.swap_primes() + b.swap_primes());
    }

    #[test]
    fn reduction_commutes_with_arithmetic(a in integer_poly(), b in integer_poly()) {
        for p in [101u64, MERSENNE_61] {
            let (ra, rb) = (a.reduce_mod(p).unwrap(), b.reduce_mod(p).unwrap());
            prop_assert_eq!((&a * &b).reduce_mod(p).unwrap(), &ra * &rb);
            prop_assert_eq!((&a + &b).reduce_mod(p).unwrap(), &ra + &rb);
        }
    }

    #[test]
    fn substitution_matches_evaluation((a, b, _) in triple(), values in prop::collection::vec(-50i64..50, VARS.len())) {
        // composing then evaluating equals evaluating the substituted value
        let composed = a.substitute(&[(Variable::Y1, &b)]).unwrap();
        let x = assignment(a.domain(), &values);
        let bv = b.evaluate(&x).unwrap();
        let mut x2 = x.clone();
        x2[3] = (Variable::Y1, bv);
        prop_assert_eq!(composed.evaluate(&x).unwrap(), a.evaluate(&x2).unwrap());
    }
}

#[test]
fn spec_examples() {
    let q = Domain::Rational;
    let y = |v| Polynomial::var(v, q);
    let (y1, y2, y3) = (y(Variable::Y1), y(Variable::Y2), y(Variable::Y3));
    assert_eq!(&(&y1 + &y2) + &(-&y1), y2.clone());
    assert_eq!(&(&y1 + &y2) * &(&y1 - &y2), y1.pow(2).unwrap() - y2.pow(2).unwrap());
    assert_eq!((&y2 * &(&y1 + &y3)).exact_div(&y2).unwrap(), &y1 + &y3);
    assert!(matches!((&y1 + &y2).exact_div(&y3), Err(bertini_core::RingError::NotDivisible)));
    let kappa = Polynomial::parse_text("a1*b1p - a1p*b1").unwrap();
    let x = [
        (Variable::A1, Scalar::from_i64(1, q)),
        (Variable::B1p, Scalar::from_i64(2, q)),
        (Variable::A1p, Scalar::from_i64(3, q)),
        (Variable::B1, Scalar::from_i64(4, q)),
    ];
    assert_eq!(kappa.evaluate(&x).unwrap(), Scalar::from_i64(-10, q));
    assert!(matches!(kappa.evaluate(&x[..2]), Err(bertini_core::RingError::MissingBinding(_))));
    assert_eq!(Polynomial::zero(q).evaluate(&[]).unwrap(), Scalar::zero(q));
    let a1c2p = Polynomial::parse_text("a1*c2p").unwrap();
    assert_eq!(a1c2p.swap_primes().canonical_text(), "1*c2*a1p");
    let s2 = Polynomial::parse_text("t1^2 + t2").unwrap();
    let w = Polynomial::parse_text("y1*y3^2 + y2").unwrap();
    let composed = s2.substitute(&[(Variable::T1, &w), (Variable::T2, &y1)]).unwrap();
    assert_eq!(composed, &w * &w + &y1);
    let mixed = Polynomial::one(Domain::Prime(101));
    assert!(y1.try_add(&mixed).is_err());
}
