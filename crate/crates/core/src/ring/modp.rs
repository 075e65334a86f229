//! Word-sized arithmetic modulo an odd prime below 2^63.

/// 2^61 - 1, the default verification prime.
pub const MERSENNE_61: u64 = (1u64 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn neg(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

#[inline]
pub fn mul(a: u64, b: u64, p: u64) -> u64 {
    if p == MERSENNE_61 {
        let t = a as u128 * b as u128;
        let lo = (t as u64) & MERSENNE_61;
        let hi = (t >> 61) as u64;
        let s = lo + hi;
        if s >= MERSENNE_61 {
            s - MERSENNE_61
        } else {
            s
        }
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

pub fn pow(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, base, p);
        }
        base = mul(base, base, p);
        e >>= 1;
    }
    acc
}

/// Inverse by Fermat; `None` for zero.
pub fn inv(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (a != 0).then(|| pow(a, p - 2, p))
}

pub fn from_i64(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Signed representative in `(-p/2, p/2]`.
pub fn centered(a: u64, p: u64) -> i128 {
    if a > p / 2 {
        a as i128 - p as i128
    } else {
        a as i128
    }
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Recovers `n/d` with `|n|, d <= sqrt(p/2)` from its residue, if such a fraction exists.
pub fn rational_reconstruction(a: u64, p: u64) -> Option<(i128, i128)> {
    let bound = ((p / 2) as f64).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some((n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mersenne_reduction_matches_generic() {
        let p = MERSENNE_61;
        let pairs = [(p - 1, p - 1), (123456789, 987654321987), (1 << 60, (1 << 60) + 17)];
        for (a, b) in pairs {
            assert_eq!(mul(a, b, p), ((a as u128 * b as u128) % p as u128) as u64);
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(MERSENNE_61));
        assert!(is_prime(101));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
        assert!(!is_prime((1u64 << 61) + 1));
    }

    #[test]
    fn reconstruction() {
        let p = MERSENNE_61;
        let a = mul(from_i64(-7, p), inv(3, p).unwrap(), p);
        assert_eq!(rational_reconstruction(a, p), Some((-7, 3)));
        assert_eq!(rational_reconstruction(12, p), Some((12, 1)));
    }
}
