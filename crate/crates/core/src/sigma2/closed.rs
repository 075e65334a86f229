use crate::brace::brace;
use crate::error::Result;
use crate::pencil::PencilSpec;
use crate::ring::{Domain, Monomial, Polynomial, Scalar, Variable};

/// Coefficients of the forms `S2, P2, Q4, R3` with `F(t1, t2) = Σ f_i t1^i t2^(deg − i)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RamData {
    pub s: [Polynomial; 3],
    pub p: [Polynomial; 3],
    pub q: [Polynomial; 5],
    pub r: [Polynomial; 4],
}

fn poly(text: &str) -> Polynomial {
    Polynomial::parse_text(text).expect("valid literal")
}

pub(crate) fn s0_text() -> &'static str {
    "a2*c1 - a1*c2"
}

/// Entry 0 of each family: `(s0, p0, q0, r0)`, with `q0` expanded.
pub fn free_terms() -> (Polynomial, Polynomial, Polynomial, Polynomial) {
    let s0 = poly(s0_text());
    let r0 = poly("-a1*b2*c2 + a1*b3*c1 + a2*b1*c2");
    let q0 = poly("4*a1*c2 - 4*b1*b3") * &s0 + poly("2*b2") * &r0;
    let p0 = poly("b2^2 - 4*a2*c1 - 4*b1*b3 + 8*a1*c2");
    (s0, p0, q0, r0)
}

/// `f_i = (−1)^i {f_0}_i` for `i = 0..N`.
pub(crate) fn sign_rule<const N: usize>(f0: &Polynomial) -> Result<[Polynomial; N]> {
    let mut out = Vec::with_capacity(N);
    for i in 0..N {
        let b = brace(f0, i as u32)?;
        out.push(if i % 2 == 1 { -b } else { b });
    }
    Ok(out.try_into().expect("length N"))
}

/// The closed forms over ℚ with generic coefficients.
pub fn ram_closed_form() -> RamData {
    let (s0, p0, q0, r0) = free_terms();
    RamData {
        s: sign_rule(&s0).expect("closed forms are unprimed"),
        p: sign_rule(&p0).expect("closed forms are unprimed"),
        q: sign_rule(&q0).expect("closed forms are unprimed"),
        r: sign_rule(&r0).expect("closed forms are unprimed"),
    }
}

/// `Σ c_i t1^i t2^(n−1−i)` for coefficient list `c` of length `n`.
pub fn binary_form(c: &[Polynomial]) -> Polynomial {
    let domain = c[0].domain();
    let deg = c.len() as u32 - 1;
    let mut out = Polynomial::zero(domain);
    for (i, ci) in c.iter().enumerate() {
        let m = Monomial::from_pairs([(Variable::T1, i as u32), (Variable::T2, deg - i as u32)]).expect("small");
        out = out + ci * &Polynomial::term(m, &Scalar::one(domain));
    }
    out
}

/// `F(t1, t2)` composed with `t1 ↦ x, t2 ↦ x'`.
pub fn compose_form(c: &[Polynomial], x: &Polynomial, xp: &Polynomial) -> Result<Polynomial> {
    // Horner in t1 with powers of t2 precomputed keeps intermediate sizes small
    let n = c.len();
    let mut xp_pows = vec![Polynomial::one(x.domain())];
    for _ in 1..n {
        let next = xp_pows.last().expect("nonempty").try_mul(xp)?;
        xp_pows.push(next);
    }
    let mut acc = Polynomial::zero(x.domain());
    for i in (0..n).rev() {
        acc = acc.try_mul(x)?.try_add(&c[i].try_mul(&xp_pows[n - 1 - i])?)?;
    }
    Ok(acc)
}

impl RamData {
    /// Substitutes the spec's entries for the coefficient variables of every entry.
    pub fn specialize_to(&self, spec: &PencilSpec) -> Result<RamData> {
        let bindings: Vec<(Variable, &Polynomial)> =
            Variable::COEFFICIENTS.iter().map(|v| (*v, spec.entry(*v))).collect();
        let sub = |ps: &[Polynomial]| -> Result<Vec<Polynomial>> {
            ps.iter()
                .map(|p| {
                    let p = match spec.domain() {
                        Domain::Rational => p.clone(),
                        Domain::Prime(m) => p.reduce_mod(m)?,
                    };
                    Ok(p.substitute(&bindings)?)
                })
                .collect()
        };
        Ok(RamData {
            s: sub(&self.s)?.try_into().expect("3"),
            p: sub(&self.p)?.try_into().expect("3"),
            q: sub(&self.q)?.try_into().expect("5"),
            r: sub(&self.r)?.try_into().expect("4"),
        })
    }

    pub fn entries(&self) -> impl Iterator<Item = (&'static str, usize, &Polynomial)> {
        self.s
            .iter()
            .enumerate()
            .map(|(i, p)| ("s", i, p))
            .chain(self.p.iter().enumerate().map(|(i, p)| ("p", i, p)))
            .chain(self.q.iter().enumerate().map(|(i, p)| ("q", i, p)))
            .chain(self.r.iter().enumerate().map(|(i, p)| ("r", i, p)))
    }
}
