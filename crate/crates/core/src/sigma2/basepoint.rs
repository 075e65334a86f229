use super::closed::{compose_form, s0_text, sign_rule};
use crate::bertini::{contracted_sextics, sextics_of, w3_coefficients, y, Corruption};
use crate::error::{Error, Result};
use crate::pencil::{PencilSpec, ProjPoint, CUBIC_SHAPES};
use crate::ring::{Domain, Monomial, Polynomial, Scalar, Variable};

use Variable::{U2, U3, Y1, Y2, Y3};

/// The section of `Σ2` attached to a basepoint `(1, u2, u3)` other than `(0:0:1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BasepointSection {
    pub u2: Scalar,
    pub u3: Scalar,
    /// `s^u_0, s^u_1, s^u_2` in the pencil's coefficients.
    pub su: [Polynomial; 3],
    /// `φ6 + S^u_2(w, w')`.
    pub psi6u: Polynomial,
}

/// `s^u_i` over ℚ with `u2, u3` as variables; the brace leaves them untouched.
pub fn su_closed_form() -> [Polynomial; 3] {
    let s0u = Polynomial::parse_text(&format!(
        "{} + a2*c2*u2 + a2*b2*u3 - a1*b3*u3 + a2*b3*u2*u3 + a2^2*u3^2",
        s0_text()
    ))
    .expect("valid literal");
    sign_rule(&s0u).expect("unprimed")
}

fn substitute_spec(p: &Polynomial, spec: &PencilSpec) -> Result<Polynomial> {
    let p = match spec.domain() {
        Domain::Rational => p.clone(),
        Domain::Prime(m) => p.reduce_mod(m)?,
    };
    let bindings: Vec<(Variable, &Polynomial)> = Variable::COEFFICIENTS.iter().map(|v| (*v, spec.entry(*v))).collect();
    Ok(p.substitute(&bindings)?)
}

/// `S^u_2` for symbolic `u`: coefficients with the spec's entries substituted.
fn su_for(spec: &PencilSpec) -> Result<[Polynomial; 3]> {
    let su = su_closed_form().map(|s| substitute_spec(&s, spec));
    let [a, b, c] = su;
    Ok([a?, b?, c?])
}

/// Builds the section for the basepoint `(1, u2, u3)`.
pub fn basepoint_section(spec: &PencilSpec, u2: &Scalar, u3: &Scalar) -> Result<BasepointSection> {
    let d = spec.domain();
    if u2.domain() != d || u3.domain() != d {
        return Err(Error::MixedSpec);
    }
    let at = [(Y1, Scalar::one(d)), (Y2, u2.clone()), (Y3, u3.clone())];
    for f in [spec.w(), spec.wp()] {
        if !f.specialize(&at)?.is_zero() {
            return Err(Error::NotABasepoint);
        }
    }
    let uvals = [(U2, u2.clone()), (U3, u3.clone())];
    let su: Vec<Polynomial> = su_for(spec)?.iter().map(|s| s.specialize(&uvals)).collect::<std::result::Result<_, _>>()?;
    let [_, phi6, _] = sextics_of(spec)?;
    let psi6u = phi6.try_add(&compose_form(&su, &spec.w(), &spec.wp())?)?;
    Ok(BasepointSection { u2: u2.clone(), u3: u3.clone(), su: su.try_into().expect("3"), psi6u })
}

/// The generic pencil restricted to pencils through `(1, u2, u3)`, polynomially parametrized.
///
/// `w(1, u2, u3) = 0` is solved by `c1 ↦ u3·c1 − u2·c2` followed by
/// `b1 ↦ −u3·(a1 + a2·u2) − b2·u2 − b3·u2² − u2·c1`, and likewise for the primed
/// coefficients. The image of this map is dense in the locus.
pub fn basepoint_locus() -> PencilSpec {
    let q = Domain::Rational;
    let mut reps = Vec::new();
    for primed in [false, true] {
        let v = |x: Variable| if primed { x.swap_prime() } else { x };
        let var = |x: Variable| Polynomial::var(v(x), q);
        let (u2, u3) = (Polynomial::var(U2, q), Polynomial::var(U3, q));
        let c1 = &u3 * var(Variable::C1) - &u2 * var(Variable::C2);
        let b1 = -(&u3 * (var(Variable::A1) + var(Variable::A2) * &u2))
            - var(Variable::B2) * &u2
            - var(Variable::B3) * &u2 * &u2
            - &u2 * var(Variable::C1);
        reps.push((v(Variable::C1), c1));
        reps.push((v(Variable::B1), b1));
    }
    PencilSpec::generic().with(&reps).expect("rational entries")
}

/// `ψ6` of the pencil after moving `(1, u2, u3)` to `(1:0:0)`, pulled back to the
/// original coordinates. Requires a pencil through that point.
///
/// The substitution `y2 ↦ y2 + u2·y1, y3 ↦ y3 + u3·y1` fixes `(0:1:0)` and
/// `(0:0:1)`, so the moved pencil has the same shape; its `ψ6` is the sextic
/// contracted to the chosen basepoint.
pub fn moved_psi6(spec: &PencilSpec, u2: &Polynomial, u3: &Polynomial) -> Result<Polynomial> {
    let d = spec.domain();
    let (y1, y2, y3) = (y(Y1, d), y(Y2, d), y(Y3, d));
    let fwd_y2 = &y2 + u2 * &y1;
    let fwd_y3 = &y3 + u3 * &y1;
    let forward = [(Y2, &fwd_y2), (Y3, &fwd_y3)];
    let mut entries = Vec::with_capacity(14);
    for f in [spec.w(), spec.wp()] {
        let moved = f.substitute(&forward)?;
        let coeffs = moved.collect_in(&Variable::POINT);
        let mut shaped = vec![Polynomial::zero(d); 7];
        for (m, c) in coeffs {
            let slot = CUBIC_SHAPES
                .iter()
                .position(|shape| Monomial::from_pairs(shape.iter().copied()).expect("small") == m)
                .ok_or(Error::NotABasepoint)?;
            shaped[slot] = c;
        }
        entries.extend(shaped);
    }
    let reps: Vec<(Variable, Polynomial)> = Variable::COEFFICIENTS.iter().copied().zip(entries).collect();
    let moved_spec = PencilSpec::generic_in(d).with(&reps)?;
    let c = w3_coefficients(&moved_spec, &moved_spec.w(), &moved_spec.wp());
    let [_, _, psi6] = contracted_sextics(&moved_spec, [&c[0], &c[1], &c[2], &c[4], &c[5], &c[6]], Corruption::None)?;
    let back_y2 = &y2 - u2 * &y1;
    let back_y3 = &y3 - u3 * &y1;
    Ok(psi6.substitute(&[(Y2, &back_y2), (Y3, &back_y3)])?)
}

/// Order of vanishing of a form at a point of the plane.
pub fn vanishing_order(f: &Polynomial, pt: &ProjPoint) -> Result<Option<u32>> {
    let d = f.domain();
    let lead = pt.coords().iter().position(|c| !c.is_zero()).expect("normalized point");
    let shifted: Vec<Polynomial> = Variable::POINT
        .iter()
        .zip(pt.coords())
        .enumerate()
        .map(|(i, (v, c))| {
            let c = Polynomial::constant(c);
            if i == lead {
                c
            } else {
                c + Polynomial::var(*v, d)
            }
        })
        .collect();
    let bind: Vec<(Variable, &Polynomial)> = Variable::POINT.iter().copied().zip(shifted.iter()).collect();
    let local = f.substitute(&bind)?;
    Ok(local.monomials().iter().map(|m| m.degree_in(&Variable::POINT)).min())
}

/// `ψ6` moved to `(1, u2, u3)` minus `φ6 + S^u_2(w, w')`; zero when the displayed
/// `s^u_0` is right and the pencil passes through the point.
pub fn basepoint_residual_at(spec: &PencilSpec, u2: &Polynomial, u3: &Polynomial) -> Result<Polynomial> {
    let moved = moved_psi6(spec, u2, u3)?;
    let [_, phi6, _] = sextics_of(spec)?;
    let bind = [(U2, u2), (U3, u3)];
    let su: Vec<Polynomial> = su_for(spec)?.iter().map(|s| s.substitute(&bind)).collect::<std::result::Result<_, _>>()?;
    Ok(moved.try_sub(&phi6)?.try_sub(&compose_form(&su, &spec.w(), &spec.wp())?)?)
}

/// [`basepoint_residual_at`] on [`basepoint_locus`] with symbolic `u2, u3`.
pub fn basepoint_residual() -> Result<Polynomial> {
    let q = Domain::Rational;
    basepoint_residual_at(&basepoint_locus(), &Polynomial::var(U2, q), &Polynomial::var(U3, q))
}
