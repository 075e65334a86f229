//! Partial priming `{e}_m` of monomials in the unprimed pencil coefficients.

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Scalar, Variable};

/// Sum over all ways to prime `m` of the `n` unprimed coefficient factors of each monomial.
///
/// `u2`, `u3` are inert: never primed and not counted in `n`. Monomials with
/// `n < m` contribute nothing.
pub fn brace(p: &Polynomial, m: u32) -> Result<Polynomial> {
    let domain = p.domain();
    let mut out = Vec::new();
    for (mono, c) in p.terms() {
        for (v, _) in mono.iter() {
            if v.is_primed_coefficient() {
                return Err(Error::PrimedInput(v));
            }
            if !v.is_coefficient() && !matches!(v, Variable::U2 | Variable::U3) {
                return Err(Error::NonCoefficientInput(v));
            }
        }
        let exps: Vec<u32> = Variable::UNPRIMED.iter().map(|v| mono.exponent(*v)).collect();
        let mut ks = vec![0u32; 7];
        expand(&mono, &exps, &mut ks, 0, m, 1, &c, &mut out)?;
    }
    Ok(Polynomial::from_terms(domain, out)?)
}

#[allow(clippy::too_many_arguments)]
fn expand(
    mono: &Monomial,
    exps: &[u32],
    ks: &mut [u32],
    i: usize,
    left: u32,
    mult: u64,
    c: &Scalar,
    out: &mut Vec<(Monomial, Scalar)>,
) -> Result<()> {
    if i == exps.len() {
        if left == 0 {
            let mut m = *mono;
            for (j, v) in Variable::UNPRIMED.iter().enumerate() {
                if ks[j] > 0 {
                    let primed = v.swap_prime();
                    m = m.with_exponent(*v, (exps[j] - ks[j]) as u8)?;
                    m = m.with_exponent(primed, ks[j] as u8)?;
                }
            }
            let k = Scalar::from_i64(mult as i64, c.domain());
            out.push((m, c * &k));
        }
        return Ok(());
    }
    let tail: u32 = exps[i + 1..].iter().sum();
    for k in 0..=exps[i].min(left) {
        if left - k > tail {
            continue;
        }
        ks[i] = k;
        expand(mono, exps, ks, i + 1, left - k, mult * binomial(exps[i], k), c, out)?;
    }
    ks[i] = 0;
    Ok(())
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Polynomial {
        Polynomial::parse_text(text).unwrap()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(brace(&p("a1*c2"), 1).unwrap(), p("a1*c2p + a1p*c2"));
        assert_eq!(brace(&p("b2^2"), 1).unwrap(), p("2*b2*b2p"));
        assert_eq!(
            brace(&p("a1*b1*c1"), 2).unwrap(),
            p("a1*b1p*c1p + a1p*b1*c1p + a1p*b1p*c1")
        );
        let q = p("a2*b3*u2*u3 + a2^2*u3^2");
        assert_eq!(brace(&q, 0).unwrap(), q);
        assert_eq!(brace(&q, 1).unwrap(), p("a2p*b3*u2*u3 + a2*b3p*u2*u3 + 2*a2*a2p*u3^2"));
        assert!(brace(&p("a1*c2"), 3).unwrap().is_zero());
    }

    #[test]
    fn rejects_primed_and_point_variables() {
        assert_eq!(brace(&p("a1*c2p"), 1), Err(Error::PrimedInput(Variable::C2p)));
        assert_eq!(brace(&p("a1*y1"), 1), Err(Error::NonCoefficientInput(Variable::Y1)));
    }
}
