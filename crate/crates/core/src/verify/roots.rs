//! Roots in `GF(p)` of dense univariate polynomials.
//!
//! Coefficient vectors are little-endian and kept without trailing zeros.

use crate::ring::modp;
use crate::rng::Stream;

type Poly = Vec<u64>;

fn trim(mut f: Poly) -> Poly {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

fn monic(f: &Poly, p: u64) -> Poly {
    let lc = *f.last().expect("nonzero polynomial");
    let inv = modp::inv(lc, p).expect("nonzero");
    f.iter().map(|c| modp::mul(*c, inv, p)).collect()
}

fn rem(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = modp::inv(*b.last().expect("nonzero divisor"), p).expect("nonzero");
    while r.len() > db {
        let c = modp::mul(*r.last().expect("nonempty"), inv, p);
        let shift = r.len() - 1 - db;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = modp::sub(r[shift + i], modp::mul(c, *bc, p), p);
        }
        r = trim(r);
    }
    r
}

fn div(a: &Poly, b: &Poly, p: u64) -> Poly {
    let mut r = a.clone();
    let db = b.len() - 1;
    let inv = modp::inv(*b.last().expect("nonzero divisor"), p).expect("nonzero");
    let mut q = vec![0; a.len().saturating_sub(db)];
    while r.len() > db {
        let c = modp::mul(*r.last().expect("nonempty"), inv, p);
        let shift = r.len() - 1 - db;
        q[shift] = c;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = modp::sub(r[shift + i], modp::mul(c, *bc, p), p);
        }
        r.pop();
        r = trim(r);
    }
    q
}

fn mulmod(a: &Poly, b: &Poly, m: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = modp::add(out[i + j], modp::mul(*x, *y, p), p);
        }
    }
    rem(&trim(out), m, p)
}

fn powmod(base: &Poly, mut e: u64, m: &Poly, p: u64) -> Poly {
    let mut acc = rem(&vec![1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(&acc, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        monic(&a, p)
    }
}

fn sub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| modp::sub(a.get(i).copied().unwrap_or(0), b.get(i).copied().unwrap_or(0), p))
        .collect();
    trim(out)
}

/// The distinct roots of `f` in `GF(p)` for an odd prime `p`, sorted.
pub fn roots(f: &[u64], p: u64, rng: &mut Stream) -> Vec<u64> {
    let f = trim(f.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    let f = monic(&f, p);
    // g = gcd(f, s^p − s) is the product of the distinct linear factors
    let sp = powmod(&vec![0, 1], p, &f, p);
    let g = gcd(&f, &sub(&sp, &vec![0, 1], p), p);
    let mut out = Vec::new();
    split(g, p, rng, &mut out);
    out.sort_unstable();
    out
}

fn split(g: Poly, p: u64, rng: &mut Stream, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => out.push(modp::neg(g[0], p)),
        _ => loop {
            let a = rng.below(p);
            let h = powmod(&vec![a, 1], (p - 1) / 2, &g, p);
            let d = gcd(&g, &sub(&h, &vec![1], p), p);
            if d.len() > 1 && d.len() < g.len() {
                let rest = div(&g, &d, p);
                split(d, p, rng, out);
                split(monic(&rest, p), p, rng, out);
                return;
            }
        },
    }
}
