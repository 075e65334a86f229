use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::modp;
use super::rat::Rat;
use super::{Domain, RingError};

/// An exact field element: a reduced rational or a residue modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Modular { value: u64, prime: u64 },
}

impl Scalar {
    pub fn zero(domain: Domain) -> Scalar {
        Scalar::from_i64(0, domain)
    }

    pub fn one(domain: Domain) -> Scalar {
        Scalar::from_i64(1, domain)
    }

    pub fn from_i64(v: i64, domain: Domain) -> Scalar {
        match domain {
            Domain::Rational => Scalar::Rational(BigRational::from_integer(v.into())),
            Domain::Prime(p) => Scalar::Modular { value: modp::from_i64(v, p), prime: p },
        }
    }

    /// `n/d` over ℚ; `None` when `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Option<Scalar> {
        (d != 0).then(|| Scalar::Rational(BigRational::new(n.into(), d.into())))
    }

    /// The residue of `v` modulo `prime`.
    pub fn modular(v: u64, prime: u64) -> Scalar {
        Scalar::Modular { value: v % prime, prime }
    }

    pub fn domain(&self) -> Domain {
        match self {
            Scalar::Rational(_) => Domain::Rational,
            Scalar::Modular { prime, .. } => Domain::Prime(*prime),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Modular { value, .. } => *value == 1,
        }
    }

    fn check(&self, o: &Scalar) -> Result<(), RingError> {
        if self.domain() == o.domain() {
            Ok(())
        } else {
            Err(RingError::DomainMismatch(self.domain(), o.domain()))
        }
    }

    pub fn try_add(&self, o: &Scalar) -> Result<Scalar, RingError> {
        self.check(o)?;
        Ok(match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Modular { value: a, prime }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: modp::add(*a, *b, *prime), prime: *prime }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, o: &Scalar) -> Result<Scalar, RingError> {
        self.try_add(&o.neg_ref())
    }

    pub fn try_mul(&self, o: &Scalar) -> Result<Scalar, RingError> {
        self.check(o)?;
        Ok(match (self, o) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Modular { value: a, prime }, Scalar::Modular { value: b, .. }) => {
                Scalar::Modular { value: modp::mul(*a, *b, *prime), prime: *prime }
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, o: &Scalar) -> Result<Scalar, RingError> {
        self.try_mul(&o.inv()?)
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Modular { value, prime } => Scalar::Modular { value: modp::neg(*value, *prime), prime: *prime },
        }
    }

    pub fn inv(&self) -> Result<Scalar, RingError> {
        if self.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Modular { value, prime } => Scalar::Modular {
                value: modp::inv(*value, *prime).expect("nonzero residue"),
                prime: *prime,
            },
        })
    }

    pub fn pow(&self, e: u32) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(num_traits::pow(a.clone(), e as usize)),
            Scalar::Modular { value, prime } => Scalar::Modular { value: modp::pow(*value, e as u64, *prime), prime: *prime },
        }
    }

    /// Image of a rational in `GF(p)`.
    pub fn reduce_mod(&self, p: u64) -> Result<Scalar, RingError> {
        match self {
            Scalar::Rational(_) => {
                let v = self.to_rat().mod_p(p).ok_or(RingError::NonInvertibleDenominator(p))?;
                Ok(Scalar::Modular { value: v, prime: p })
            }
            Scalar::Modular { value, prime } if *prime == p => Ok(Scalar::Modular { value: *value, prime: p }),
            Scalar::Modular { .. } => Err(RingError::DomainMismatch(self.domain(), Domain::Prime(p))),
        }
    }

    /// Parses `n`, `-n` or `n/d`; over a prime field the rational is reduced.
    pub fn parse_in(text: &str, domain: Domain) -> Result<Scalar, RingError> {
        let q = parse_rational(text.trim())?;
        let s = Scalar::Rational(q);
        match domain {
            Domain::Rational => Ok(s),
            Domain::Prime(p) => s.reduce_mod(p),
        }
    }

    pub(crate) fn to_rat(&self) -> Rat {
        match self {
            Scalar::Rational(r) => Rat::from_big(r.clone()),
            Scalar::Modular { value, .. } => Rat::Int(*value as i64),
        }
    }

    pub(crate) fn from_rat(r: &Rat) -> Scalar {
        Scalar::Rational(r.to_big())
    }

    /// The residue, for prime-field scalars.
    pub fn residue(&self) -> Option<u64> {
        match self {
            Scalar::Modular { value, .. } => Some(*value),
            Scalar::Rational(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Modular { .. } => None,
        }
    }
}

pub(crate) fn parse_rational(text: &str) -> Result<BigRational, RingError> {
    let err = |msg: &str| RingError::Parse { pos: 0, msg: format!("{msg}: {text:?}") };
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits_ok = |s: &str, signed: bool| {
        let s = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits_ok(n, true) || d.is_some_and(|d| !digits_ok(d, false)) {
        return Err(err("malformed rational"));
    }
    let n = BigInt::from_str(n).map_err(|_| err("malformed integer"))?;
    let d = match d {
        Some(d) => BigInt::from_str(d).map_err(|_| err("malformed integer"))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! panicking_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics when the domains differ.
            fn $method(self, o: &Scalar) -> Scalar {
                self.$try(o).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

panicking_op!(Add, add, try_add);
panicking_op!(Sub, sub, try_sub);
panicking_op!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
