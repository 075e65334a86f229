use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::sparse::{self, QQ};
use crate::ring::{Monomial, Polynomial, Rat};

/// The square root with positive leading coefficient of a polynomial over ℚ.
///
/// Terms are produced from the top: after the leading term `g0`, each new term is
/// the leading term of the remainder divided by `2·g0`. Fails with
/// `NotAPerfectSquare` as soon as a division is impossible or the remainder
/// cannot be cleared.
pub fn exact_sqrt(f: &Polynomial) -> Result<Polynomial> {
    let a = f.as_q().ok_or(Error::NotAPerfectSquare)?;
    let Some((lm, lc)) = a.leading() else {
        return Ok(f.clone());
    };
    let mut half = Monomial::ONE;
    for (v, e) in lm.iter() {
        if e % 2 == 1 {
            return Err(Error::NotAPerfectSquare);
        }
        half = half.checked_mul(&Monomial::var_pow(v, (e / 2) as u8)).map_err(Error::from)?;
    }
    let c0 = lc.sqrt().ok_or(Error::NotAPerfectSquare)?;
    let two_c0_inv = c0.mul(&Rat::Int(2)).inv().expect("nonzero");

    let mut root: Vec<(Monomial, Rat)> = vec![(half, c0.clone())];
    let mut rem: BTreeMap<Monomial, Rat> = a.terms.iter().cloned().collect();
    subtract(&mut rem, lm, &c0.mul(&c0));
    while let Some((m, c)) = rem.last_key_value().map(|(m, c)| (*m, c.clone())) {
        let q = half.quotient_of(&m).ok_or(Error::NotAPerfectSquare)?;
        if q >= root.last().expect("nonempty").0 {
            return Err(Error::NotAPerfectSquare);
        }
        let t = c.mul(&two_c0_inv);
        // remainder −= 2·(current root)·t + t²
        for (rm, rc) in &root {
            let prod = rm.checked_mul(&q).map_err(Error::from)?;
            subtract(&mut rem, &prod, &rc.mul(&t).mul(&Rat::Int(2)));
        }
        let sq = q.checked_mul(&q).map_err(Error::from)?;
        subtract(&mut rem, &sq, &t.mul(&t));
        root.push((q, t));
    }
    Ok(Polynomial::from_q(sparse::from_terms(QQ, root)))
}

fn subtract(rem: &mut BTreeMap<Monomial, Rat>, m: &Monomial, c: &Rat) {
    let entry = rem.entry(*m).or_insert(Rat::ZERO);
    *entry = entry.sub(c);
    if entry.is_zero() {
        rem.remove(m);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(t: &str) -> Polynomial {
        Polynomial::parse_text(t).unwrap()
    }

    #[test]
    fn recovers_roots() {
        let g = p("3*a1*t1^2 - 1/2*b2p*t2 + c1*c2");
        let root = exact_sqrt(&(&g * &g)).unwrap();
        assert!(root == g || root == -&g);
        assert_eq!(exact_sqrt(&p("4")).unwrap(), p("2"));
        assert!(exact_sqrt(&p("0")).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_squares() {
        assert_eq!(exact_sqrt(&p("2*y1^2")), Err(Error::NotAPerfectSquare));
        assert_eq!(exact_sqrt(&p("y1^2 + y2^2")), Err(Error::NotAPerfectSquare));
        assert_eq!(exact_sqrt(&p("y1^3")), Err(Error::NotAPerfectSquare));
        assert_eq!(exact_sqrt(&p("y1^2 + 1")), Err(Error::NotAPerfectSquare));
    }
}
