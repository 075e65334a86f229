//! The Geiser involution: the pencils with `a1 = a2 = 0`, whose singular member is `w`.

use crate::bertini::{image, w3_coefficients, y};
use crate::error::{Error, Result};
use crate::pencil::{PencilSpec, ProjPoint};
use crate::ring::{Domain, Polynomial, Scalar, Variable};
use crate::sigma2::{binary_form, compose_form, free_terms, ram_closed_form, sign_rule, su_closed_form, RamData};

use Variable::{U2, U3, Y1, Y2, Y3};

/// The reduced polynomials of the Geiser involution.
#[derive(Clone, Debug)]
pub struct GeiserBundle {
    pub spec: PencilSpec,
    pub domain: Domain,
    pub w: Polynomial,
    pub wp: Polynomial,
    pub gamma1: Polynomial,
    /// `r̃'1`.
    pub rt_p1: Polynomial,
    /// `r̃'3`.
    pub rt_p3: Polynomial,
    pub rt: [Polynomial; 3],
    /// `C̃`.
    pub ct: Polynomial,
    pub phi3: Polynomial,
    pub psi3: Polynomial,
    pub z: [Polynomial; 3],
    /// `K̃`.
    pub kt: Polynomial,
}

/// Names accepted by [`GeiserBundle::get`].
pub const GEISER_NAMES: [&str; 14] =
    ["w", "wp", "gamma1", "rt_p1", "rt_p3", "rt1", "rt2", "rt3", "Ct", "phi3", "psi3", "z1", "z2", "z3"];

fn check_geiser(spec: &PencilSpec) -> Result<()> {
    for v in [Variable::A1, Variable::A2] {
        if !spec.entry(v).is_zero() {
            return Err(Error::SpecNotGeiser(v));
        }
    }
    Ok(())
}

pub fn build_geiser(spec: &PencilSpec) -> Result<GeiserBundle> {
    check_geiser(spec)?;
    let d = spec.domain();
    let (y1, y2, y3) = (y(Y1, d), y(Y2, d), y(Y3, d));
    let w = spec.w();
    let wp = spec.wp();
    let c = w3_coefficients(spec, &w, &wp);
    let (b1, b2, b3, c1, c2) = (&c[2], &c[3], &c[4], &c[5], &c[6]);
    let a1p = spec.entry(Variable::A1p);
    let a2p = spec.entry(Variable::A2p);
    let sb1 = spec.entry(Variable::B1);

    let gamma1 = -(a1p * &y1 + a2p * &y2);
    let rt_p1 = a2p * a2p * b1 - a1p * a2p * b2 + a1p * a1p * b3;
    let rt_p3 = a1p * c2 - a2p * c1;
    let rt = [-(a2p * &rt_p1), a1p * &rt_p1, a1p * a2p * &rt_p3];

    let ct = -(a2p * (b1 - a1p * sb1 * &y1 * &y3 * &y3).exact_div(&y2)?)
        + a1p * (a2p * &y3 * (&w - sb1 * &y1 * &y1 * &y3) - b3 * &y2).exact_div(&(&y1 * &y2))?;
    let phi3 = -(a1p * c2) + &y3 * &ct;
    let psi3 = -(a2p * c1) + &y3 * &ct;

    let z = [
        &phi3 * (a2p * a2p * &w * &phi3 + b3 * &rt_p1).exact_div(&y1)?,
        &psi3 * (a1p * a1p * &w * &psi3 + b1 * &rt_p1).exact_div(&y2)?,
        &psi3 * &phi3 * &ct,
    ];
    let kt = &psi3 * (-(a1p * &w * &y3) + b1 * &y1).exact_div(&y2)?
        - &phi3 * (-(a2p * &w * &y3) + b3 * &y2).exact_div(&y1)?;

    Ok(GeiserBundle { spec: spec.clone(), domain: d, w, wp, gamma1, rt_p1, rt_p3, rt, ct, phi3, psi3, z, kt })
}

impl GeiserBundle {
    /// Looks up a polynomial by its name in [`GEISER_NAMES`]; `Kt` is also accepted.
    pub fn get(&self, name: &str) -> Option<Polynomial> {
        Some(match name {
            "w" => self.w.clone(),
            "wp" => self.wp.clone(),
            "gamma1" => self.gamma1.clone(),
            "rt_p1" => self.rt_p1.clone(),
            "rt_p3" => self.rt_p3.clone(),
            "rt1" => self.rt[0].clone(),
            "rt2" => self.rt[1].clone(),
            "rt3" => self.rt[2].clone(),
            "Ct" => self.ct.clone(),
            "phi3" => self.phi3.clone(),
            "psi3" => self.psi3.clone(),
            "z1" => self.z[0].clone(),
            "z2" => self.z[1].clone(),
            "z3" => self.z[2].clone(),
            "Kt" => self.kt.clone(),
            _ => return None,
        })
    }

    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        image(&self.z, p)
    }
}

/// The Geiser involution of a concrete pencil at `y`.
pub fn geiser_apply(spec: &PencilSpec, y: &ProjPoint) -> Result<ProjPoint> {
    if !spec.is_concrete() {
        return Err(Error::NeedsConcrete);
    }
    build_geiser(spec)?.apply(y)
}

/// Ramification data with the vanishing free terms split off.
#[derive(Clone, Debug, PartialEq)]
pub struct GeiserRamData {
    /// `S̃1 = (s1, s2)`.
    pub st: [Polynomial; 2],
    /// `Q̃3 = (q1, …, q4)`.
    pub qt: [Polynomial; 4],
    /// `R̃2 = (r1, r2, r3)`.
    pub rt: [Polynomial; 3],
    pub p: [Polynomial; 3],
}

/// Shifts the coefficients by one after checking that `s0 = q0 = r0 = 0`.
pub fn geiser_ram(ram: &RamData) -> Result<GeiserRamData> {
    for (name, f) in [("s0", &ram.s[0]), ("q0", &ram.q[0]), ("r0", &ram.r[0])] {
        if !f.is_zero() {
            return Err(Error::NonzeroFreeTerm(name));
        }
    }
    let tail = |c: &[Polynomial]| c[1..].to_vec();
    Ok(GeiserRamData {
        st: tail(&ram.s).try_into().expect("2"),
        qt: tail(&ram.q).try_into().expect("4"),
        rt: tail(&ram.r).try_into().expect("3"),
        p: ram.p.clone(),
    })
}

impl GeiserRamData {
    /// The closed forms, braced generically and then specialized to `spec`.
    pub fn for_spec(spec: &PencilSpec) -> Result<GeiserRamData> {
        check_geiser(spec)?;
        geiser_ram(&ram_closed_form().specialize_to(spec)?)
    }
}

/// The closed forms with the brace applied after specializing the free terms to `spec`.
///
/// Only meaningful for specs whose entries are unprimed-or-primed variables or
/// zero. Under `a1 = a2 = 0` it loses every term of `s_i, q_i, r_i` that the
/// specialization of the free term killed, so it disagrees with
/// [`GeiserRamData::for_spec`].
pub fn ram_braced_after(spec: &PencilSpec) -> Result<RamData> {
    let bindings: Vec<(Variable, &Polynomial)> = Variable::COEFFICIENTS.iter().map(|v| (*v, spec.entry(*v))).collect();
    let (s0, p0, q0, r0) = free_terms();
    let sub = |f: Polynomial| f.substitute(&bindings);
    Ok(RamData {
        s: sign_rule(&sub(s0)?)?,
        p: sign_rule(&sub(p0)?)?,
        q: sign_rule(&sub(q0)?)?,
        r: sign_rule(&sub(r0)?)?,
    })
}

/// `(φ3(y) : w(y) : w'(y))`, the anticanonical double cover of the plane.
pub fn anticanonical_map(spec: &PencilSpec, y: &ProjPoint) -> Result<ProjPoint> {
    if !spec.is_concrete() {
        return Err(Error::NeedsConcrete);
    }
    let bundle = build_geiser(spec)?;
    image(&[bundle.phi3, bundle.w, bundle.wp], y)
}

fn form_at(c: &[Polynomial], t: &Scalar, tp: &Scalar) -> Result<Scalar> {
    Ok(binary_form(c).evaluate(&[(Variable::T1, t.clone()), (Variable::T2, tp.clone())])?)
}

/// `4z0³z1 − z0²P2(z1, z2) − z0·Q̃3(z1, z2) − R̃2(z1, z2)²` for concrete data.
pub fn quartic_residual(gram: &GeiserRamData, zbar: &ProjPoint) -> Result<Scalar> {
    let [z0, z1, z2] = zbar.coords() else {
        return Err(Error::ZeroPoint);
    };
    let p = form_at(&gram.p, z1, z2)?;
    let q = form_at(&gram.qt, z1, z2)?;
    let r = form_at(&gram.rt, z1, z2)?;
    let four = Scalar::from_i64(4, z0.domain());
    let lhs = &(&four * &z0.pow(3)) * z1;
    Ok(&(&(&lhs - &(&z0.pow(2) * &p)) - &(z0 * &q)) - &(&r * &r))
}

/// `S̃1^u` and `ψ3^u = φ3 + S̃1^u(w, w')` for a basepoint `(1, u2, u3)` of a Geiser pencil.
#[derive(Clone, Debug, PartialEq)]
pub struct GeiserSection {
    pub u2: Scalar,
    pub u3: Scalar,
    pub st: [Polynomial; 2],
    pub psi3u: Polynomial,
}

pub fn basepoint_section_geiser(spec: &PencilSpec, u2: &Scalar, u3: &Scalar) -> Result<GeiserSection> {
    check_geiser(spec)?;
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
    let bindings: Vec<(Variable, &Polynomial)> = Variable::COEFFICIENTS.iter().map(|v| (*v, spec.entry(*v))).collect();
    let uvals = [(U2, u2.clone()), (U3, u3.clone())];
    let mut su = Vec::with_capacity(3);
    for s in su_closed_form() {
        let s = match d {
            Domain::Rational => s,
            Domain::Prime(m) => s.reduce_mod(m)?,
        };
        su.push(s.substitute(&bindings)?.specialize(&uvals)?);
    }
    if !su[0].is_zero() {
        return Err(Error::NonzeroFreeTerm("s^u_0"));
    }
    let st: [Polynomial; 2] = su[1..].to_vec().try_into().expect("2");
    let phi3 = build_geiser(spec)?.phi3;
    let psi3u = phi3.try_add(&compose_form(&st, &spec.w(), &spec.wp())?)?;
    Ok(GeiserSection { u2: u2.clone(), u3: u3.clone(), st, psi3u })
}
