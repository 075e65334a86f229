use bertini_core::brace::brace;
use bertini_core::ring::{Domain, Monomial, Polynomial, Scalar, Variable};
use bertini_core::Error;
use proptest::prelude::*;

/// Forms of degree `deg` in the seven unprimed coefficients.
fn form(deg: u32) -> impl Strategy<Value = Polynomial> {
    let term = (prop::collection::vec(0..7usize, deg as usize), -20i64..20);
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let terms = terms.into_iter().map(|(vars, c)| {
            let m = Monomial::from_pairs(vars.into_iter().map(|i| (Variable::UNPRIMED[i], 1))).unwrap();
            (m, Scalar::from_i64(c, Domain::Rational))
        });
        Polynomial::from_terms(Domain::Rational, terms).unwrap()
    })
}

fn unprime(p: &Polynomial) -> Polynomial {
    let pairs: Vec<_> = Variable::UNPRIMED.iter().map(|v| (v.swap_prime(), *v)).collect();
    p.rename(&pairs)
}

proptest! {
    #[test]
    fn sum_rule(f in form(3)) {
        // identifying primed with unprimed, the n+1 priming levels add up to 2^n copies
        let total = (0..=3).map(|m| unprime(&brace(&f, m).unwrap())).fold(Polynomial::zero(Domain::Rational), |a, b| a + b);
        prop_assert_eq!(total, f.scale_int(8));
    }

    #[test]
    fn level_m_is_scaled_by_binomial(f in form(4), m in 0u32..5) {
        let n_choose_m = [1, 4, 6, 4, 1][m as usize];
        prop_assert_eq!(unprime(&brace(&f, m).unwrap()), f.scale_int(n_choose_m));
    }

    #[test]
    fn linear(f in form(2), g in form(2), m in 0u32..3) {
        let lhs = brace(&(f.scale_int(3) - &g), m).unwrap();
        prop_assert_eq!(lhs, brace(&f, m).unwrap().scale_int(3) - brace(&g, m).unwrap());
    }

    #[test]
    fn extremes(f in form(3)) {
        prop_assert_eq!(brace(&f, 0).unwrap(), f.clone());
        prop_assert_eq!(brace(&f, 3).unwrap(), f.swap_primes());
        prop_assert!(brace(&f, 4).unwrap().is_zero());
    }

    #[test]
    fn leibniz(f in form(2), g in form(1), m in 0u32..4) {
        let mut rhs = Polynomial::zero(Domain::Rational);
        for i in 0..=m {
            rhs = rhs + brace(&f, i).unwrap() * brace(&g, m - i).unwrap();
        }
        prop_assert_eq!(brace(&(&f * &g), m).unwrap(), rhs);
    }
}

#[test]
fn rejects_foreign_variables() {
    let primed = Polynomial::var(Variable::A1p, Domain::Rational);
    assert_eq!(brace(&primed, 0).unwrap_err(), Error::PrimedInput(Variable::A1p));
    let y = Polynomial::var(Variable::Y1, Domain::Rational);
    assert_eq!(brace(&y, 0).unwrap_err(), Error::NonCoefficientInput(Variable::Y1));
    let u = Polynomial::parse_text("u2*a1").unwrap();
    assert_eq!(brace(&u, 1).unwrap(), Polynomial::parse_text("u2*a1p").unwrap());
}
