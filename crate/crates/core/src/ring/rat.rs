//! Compact exact rationals: machine integers until they stop fitting.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational number.
///
/// `Int` is used for every integer fitting an `i64`; everything else is `Big`.
/// The representation is canonical, so derived equality is value equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Rat {
    Int(i64),
    Big(Box<BigRational>),
}

impl Rat {
    pub const ZERO: Rat = Rat::Int(0);
    pub const ONE: Rat = Rat::Int(1);

    pub fn from_big(r: BigRational) -> Rat {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Rat::Int(v);
            }
        }
        Rat::Big(Box::new(r))
    }

    pub fn from_bigint(n: BigInt) -> Rat {
        match n.to_i64() {
            Some(v) => Rat::Int(v),
            None => Rat::Big(Box::new(BigRational::from_integer(n))),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::Int(v) => BigRational::from_integer(BigInt::from(*v)),
            Rat::Big(b) => (**b).clone(),
        }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Rat::Int(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Rat::Int(1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Rat::Int(_) => true,
            Rat::Big(b) => b.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Rat::Int(v) => *v < 0,
            Rat::Big(b) => b.is_negative(),
        }
    }

    #[inline]
    pub fn add(&self, o: &Rat) -> Rat {
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if let Some(s) = a.checked_add(*b) {
                return Rat::Int(s);
            }
        }
        Rat::from_big(self.to_big() + o.to_big())
    }

    #[inline]
    pub fn sub(&self, o: &Rat) -> Rat {
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if let Some(s) = a.checked_sub(*b) {
                return Rat::Int(s);
            }
        }
        Rat::from_big(self.to_big() - o.to_big())
    }

    #[inline]
    pub fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if let Some(s) = a.checked_mul(*b) {
                return Rat::Int(s);
            }
        }
        Rat::from_big(self.to_big() * o.to_big())
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::Int(a) => match a.checked_neg() {
                Some(v) => Rat::Int(v),
                None => Rat::from_big(-self.to_big()),
            },
            Rat::Big(b) => Rat::from_big(-(**b).clone()),
        }
    }

    pub fn inv(&self) -> Option<Rat> {
        if self.is_zero() {
            return None;
        }
        match self {
            Rat::Int(1) => Some(Rat::ONE),
            Rat::Int(-1) => Some(Rat::Int(-1)),
            _ => Some(Rat::from_big(self.to_big().recip())),
        }
    }

    pub fn div(&self, o: &Rat) -> Option<Rat> {
        if o.is_zero() {
            return None;
        }
        if let (Rat::Int(a), Rat::Int(b)) = (self, o) {
            if *b != 0 && a % b == 0 {
                if let Some(q) = a.checked_div(*b) {
                    return Some(Rat::Int(q));
                }
            }
        }
        Some(Rat::from_big(self.to_big() / o.to_big()))
    }

    /// Exact square root when the value is the square of a rational.
    pub fn sqrt(&self) -> Option<Rat> {
        let r = self.to_big();
        if r.is_negative() {
            return None;
        }
        let n = r.numer().sqrt();
        let d = r.denom().sqrt();
        if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
            Some(Rat::from_big(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Image in `Z/pZ`; `None` when `p` divides the denominator.
    pub fn mod_p(&self, p: u64) -> Option<u64> {
        match self {
            Rat::Int(v) => Some(v.rem_euclid(p as i64) as u64),
            Rat::Big(b) => {
                let pb = BigInt::from(p);
                let num = b.numer().mod_floor_pos(&pb);
                let den = b.denom().mod_floor_pos(&pb);
                if den.is_zero() {
                    return None;
                }
                let inv = super::modp::inv(den, p)?;
                Some(super::modp::mul(num, inv, p))
            }
        }
    }

    pub fn one() -> Rat {
        Rat::ONE
    }
}

trait ModFloorPos {
    fn mod_floor_pos(&self, m: &BigInt) -> u64;
}

impl ModFloorPos for BigInt {
    fn mod_floor_pos(&self, m: &BigInt) -> u64 {
        let r = ((self % m) + m) % m;
        r.to_u64().expect("residue fits u64")
    }
}

impl std::fmt::Display for Rat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Rat::Int(v) => write!(f, "{v}"),
            Rat::Big(b) => {
                if b.denom().is_one() {
                    write!(f, "{}", b.numer())
                } else {
                    write!(f, "{}/{}", b.numer(), b.denom())
                }
            }
        }
    }
}
