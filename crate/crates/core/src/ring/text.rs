//! Canonical text form: `coef*var^e*…` terms in ascending graded order.

use std::fmt::Write;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::monomial::Monomial;
use super::poly::{Polynomial, Repr};
use super::scalar::{parse_rational, Scalar};
use super::variable::Variable;
use super::{Domain, RingError};

fn write_monomial(out: &mut String, m: &Monomial) {
    for (v, e) in m.iter() {
        out.push('*');
        out.push_str(v.name());
        if e > 1 {
            write!(out, "^{e}").expect("writing to a String");
        }
    }
}

impl Polynomial {
    /// The canonical text: `"-1*y1 + 1*y2^2"`, `"0"` for zero.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, negative: bool, magnitude: &str, m: &Monomial| {
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(magnitude);
            write_monomial(out, m);
        };
        match &self.repr {
            Repr::Q(a) => {
                for (m, c) in &a.terms {
                    let s = c.to_string();
                    match s.strip_prefix('-') {
                        Some(mag) => push(&mut out, true, mag, m),
                        None => push(&mut out, false, &s, m),
                    }
                }
            }
            Repr::P(_, a) => {
                for (m, c) in &a.terms {
                    push(&mut out, false, &c.to_string(), m);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// Parses text over ℚ.
    pub fn parse_text(text: &str) -> Result<Polynomial, RingError> {
        Polynomial::parse_text_in(text, Domain::Rational)
    }

    /// Parses text, reducing rational coefficients into `domain`.
    ///
    /// Accepts the canonical form, terms in any order, and omitted unit coefficients.
    pub fn parse_text_in(text: &str, domain: Domain) -> Result<Polynomial, RingError> {
        let terms = Parser { s: text.as_bytes(), pos: 0 }.polynomial()?;
        let mut out = Vec::with_capacity(terms.len());
        for (m, q) in terms {
            let c = Scalar::Rational(q);
            let c = match domain {
                Domain::Rational => c,
                Domain::Prime(p) => c.reduce_mod(p)?,
            };
            out.push((m, c));
        }
        Polynomial::from_terms(domain, out)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err<T>(&self, msg: &str) -> Result<T, RingError> {
        Err(RingError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn polynomial(mut self) -> Result<Vec<(Monomial, BigRational)>, RingError> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.peek().is_none() {
            return self.err("empty input");
        }
        let mut negative = false;
        if self.peek() == Some(b'-') {
            negative = true;
            self.pos += 1;
        }
        loop {
            self.skip_ws();
            let (m, c) = self.term()?;
            terms.push((m, if negative { -c } else { c }));
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(_) => return self.err("expected '+' or '-'"),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits")
    }

    fn term(&mut self) -> Result<(Monomial, BigRational), RingError> {
        let mut coef = BigRational::from_integer(1.into());
        let mut m = Monomial::ONE;
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_digit() && first => {
                    let start = self.pos;
                    let n = self.digits().to_string();
                    let mut lit = n;
                    if self.peek() == Some(b'/') {
                        self.pos += 1;
                        let d = self.digits();
                        if d.is_empty() {
                            return self.err("missing denominator");
                        }
                        lit = format!("{lit}/{d}");
                    }
                    coef = parse_rational(&lit).map_err(|_| RingError::Parse { pos: start, msg: "bad coefficient".into() })?;
                    if coef.is_negative() || coef.is_zero() && lit.contains('/') {
                        return self.err("bad coefficient");
                    }
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let start = self.pos;
                    while self.peek().is_some_and(|b| b.is_ascii_alphanumeric()) {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
                    let v = Variable::from_name(name)
                        .ok_or_else(|| RingError::Parse { pos: start, msg: format!("unknown variable {name:?}") })?;
                    let mut e: u32 = 1;
                    self.skip_ws();
                    if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.skip_ws();
                        let d = self.digits();
                        e = match d.parse() {
                            Ok(e) => e,
                            Err(_) => return self.err("bad exponent"),
                        };
                    }
                    m = m.checked_mul(&Monomial::from_pairs([(v, e)])?)?;
                }
                _ => return self.err("expected coefficient or variable"),
            }
            first = false;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                return Ok((m, coef));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Variable::*;

    #[test]
    fn canonical_examples() {
        let p = Polynomial::var(Y2, Domain::Rational).pow(2).unwrap() - Polynomial::var(Y1, Domain::Rational);
        assert_eq!(p.canonical_text(), "-1*y1 + 1*y2^2");
        assert_eq!(Polynomial::zero(Domain::Rational).canonical_text(), "0");
        assert_eq!(Polynomial::integer(-3, Domain::Rational).canonical_text(), "-3");
        let m = p.reduce_mod(7).unwrap();
        assert_eq!(m.canonical_text(), "6*y1 + 1*y2^2");
    }

    #[test]
    fn parses_loose_forms() {
        let p = Polynomial::parse_text("y2^2 - y1").unwrap();
        assert_eq!(p.canonical_text(), "-1*y1 + 1*y2^2");
        let q = Polynomial::parse_text("-1/2*a1*c2p + 3/2*a1*c2p").unwrap();
        assert_eq!(q.canonical_text(), "1*a1*c2p");
        assert_eq!(Polynomial::parse_text("0").unwrap(), Polynomial::zero(Domain::Rational));
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "1*", "y1 +", "x1", "1/0*y1", "y1^", "2 y1", "y1 ++ y2"] {
            assert!(Polynomial::parse_text(bad).is_err(), "{bad:?} should fail");
        }
    }
}
