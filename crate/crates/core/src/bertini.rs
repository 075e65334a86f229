//! The polynomials of the Bertini involution and its action on points.

use crate::error::{Error, Result};
use crate::pencil::{PencilSpec, ProjPoint};
use crate::ring::{Domain, Polynomial, Scalar, Variable};

use Variable::{Y1, Y2, Y3};

/// Deliberate single-sign corruptions, used as negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Corruption {
    #[default]
    None,
    /// Flips the sign of the last summand of `C5`.
    C5,
    /// Adds the two summands of `K` instead of subtracting.
    K,
    /// Flips the sign of the middle summand of `r'1`.
    Rp1,
}

/// Every named polynomial of the involution, built once from a pencil.
#[derive(Clone, Debug)]
pub struct BertiniBundle {
    pub spec: PencilSpec,
    pub domain: Domain,
    pub w: Polynomial,
    pub wp: Polynomial,
    /// `A1, A2`.
    pub a: [Polynomial; 2],
    /// `B1, B2, B3`.
    pub b: [Polynomial; 3],
    /// `C1, C2`.
    pub c: [Polynomial; 2],
    pub kappa: Polynomial,
    pub gamma4: Polynomial,
    pub rp1: Polynomial,
    pub rp3: Polynomial,
    pub r: [Polynomial; 3],
    pub c5: Polynomial,
    pub phi6: Polynomial,
    pub psi6: Polynomial,
    pub z: [Polynomial; 3],
    pub k: Polynomial,
}

/// Names accepted by [`BertiniBundle::get`].
pub const BUNDLE_NAMES: [&str; 27] = [
    "w", "wp", "A1", "A2", "B1", "B2", "B3", "C1", "C2", "kappa", "gamma4", "rp1", "rp3", "r1", "r2", "r3", "C5",
    "phi6", "psi6", "z1", "z2", "z3", "K", "y1", "y2", "y3", "one",
];

pub(crate) fn y(v: Variable, d: Domain) -> Polynomial {
    Polynomial::var(v, d)
}

/// `A_i = a_i·w' − a_i'·w` for every coefficient pair, in the order A1, A2, B1, B2, B3, C1, C2.
pub(crate) fn w3_coefficients(spec: &PencilSpec, w: &Polynomial, wp: &Polynomial) -> Vec<Polynomial> {
    Variable::UNPRIMED
        .iter()
        .map(|v| spec.entry(*v) * wp - spec.entry(v.swap_prime()) * w)
        .collect()
}

/// `(r'1, r'3, r)` as polynomials in the seven `W3` coefficients `A1, A2, B1, B2, B3, C1, C2`.
pub(crate) fn tangent_residual(c: [&Polynomial; 7], corruption: Corruption) -> (Polynomial, Polynomial, [Polynomial; 3]) {
    let [a1, a2, b1, b2, b3, c1, c2] = c;
    let mid = b2 * a1 * a2;
    let rest = b1 * a2 * a2 + b3 * a1 * a1;
    let rp1 = if corruption == Corruption::Rp1 { rest + mid } else { rest - mid };
    let rp3 = a2 * c1 - a1 * c2;
    let r = [a2 * &rp1, -(a1 * &rp1), a1 * a2 * &rp3];
    (rp1, rp3, r)
}

fn kappa(spec: &PencilSpec) -> Polynomial {
    spec.entry(Variable::A1) * spec.entry(Variable::B1p) - spec.entry(Variable::A1p) * spec.entry(Variable::B1)
}

/// `[C5, φ6, ψ6]` from the `W3` coefficients `A1, A2, B1, B3, C1, C2`.
pub(crate) fn contracted_sextics(
    spec: &PencilSpec,
    c: [&Polynomial; 6],
    corruption: Corruption,
) -> Result<[Polynomial; 3]> {
    let [a1, a2, b1, b3, c1, c2] = c;
    let d = spec.domain();
    let (y1, y2, y3) = (y(Y1, d), y(Y2, d), y(Y3, d));
    let kappa = kappa(spec);
    let last = &kappa * b3 * &y1 * &y3;
    let c5_head = a2 * (b1 + &kappa * &y1 * &y3 * &y3).exact_div(&y2)?
        + (a1 - &kappa * &y1 * &y1 * &y3).exact_div(&y2)? * (a2 * &y3 + b3 * &y2).exact_div(&y1)?;
    let c5 = if corruption == Corruption::C5 { c5_head - last } else { c5_head + last };
    let phi6 = a1 * c2 + &y3 * &c5;
    let psi6 = a2 * c1 + &y3 * &c5;
    Ok([c5, phi6, psi6])
}

/// `[C5, φ6, ψ6]` of a pencil, without the rest of the bundle.
pub(crate) fn sextics_of(spec: &PencilSpec) -> Result<[Polynomial; 3]> {
    let c = w3_coefficients(spec, &spec.w(), &spec.wp());
    contracted_sextics(spec, [&c[0], &c[1], &c[2], &c[4], &c[5], &c[6]], Corruption::None)
}

pub fn build_bundle(spec: &PencilSpec) -> Result<BertiniBundle> {
    build_bundle_with(spec, Corruption::None)
}

pub fn build_bundle_with(spec: &PencilSpec, corruption: Corruption) -> Result<BertiniBundle> {
    let d = spec.domain();
    let (y1, y2, y3) = (y(Y1, d), y(Y2, d), y(Y3, d));
    let w = spec.w();
    let wp = spec.wp();
    let coeffs = w3_coefficients(spec, &w, &wp);
    let [a1, a2, b1, b2, b3, c1, c2]: [Polynomial; 7] = coeffs.try_into().expect("seven coefficients");
    let kappa = kappa(spec);
    let gamma4 = &y1 * &a1 + &y2 * &a2;

    let (rp1, rp3, r) = tangent_residual([&a1, &a2, &b1, &b2, &b3, &c1, &c2], corruption);

    let [c5, phi6, psi6] = contracted_sextics(spec, [&a1, &a2, &b1, &b3, &c1, &c2], corruption)?;

    let z = [
        &phi6 * (&a2 * &a2 * &phi6 + &b3 * &rp1).exact_div(&y1)?,
        &psi6 * (&a1 * &a1 * &psi6 + &b1 * &rp1).exact_div(&y2)?,
        &psi6 * &phi6 * &c5,
    ];
    let k_left = &psi6 * (&a1 * &y3 + &b1 * &y1).exact_div(&y2)?;
    let k_right = &phi6 * (&a2 * &y3 + &b3 * &y2).exact_div(&y1)?;
    let k = if corruption == Corruption::K { k_left + k_right } else { k_left - k_right };

    Ok(BertiniBundle {
        spec: spec.clone(),
        domain: d,
        w,
        wp,
        a: [a1, a2],
        b: [b1, b2, b3],
        c: [c1, c2],
        kappa,
        gamma4,
        rp1,
        rp3,
        r,
        c5,
        phi6,
        psi6,
        z,
        k,
    })
}

impl BertiniBundle {
    /// Looks up a polynomial by its name in [`BUNDLE_NAMES`].
    pub fn get(&self, name: &str) -> Option<Polynomial> {
        let d = self.domain;
        Some(match name {
            "w" => self.w.clone(),
            "wp" => self.wp.clone(),
            "A1" => self.a[0].clone(),
            "A2" => self.a[1].clone(),
            "B1" => self.b[0].clone(),
            "B2" => self.b[1].clone(),
            "B3" => self.b[2].clone(),
            "C1" => self.c[0].clone(),
            "C2" => self.c[1].clone(),
            "kappa" => self.kappa.clone(),
            "gamma4" => self.gamma4.clone(),
            "rp1" => self.rp1.clone(),
            "rp3" => self.rp3.clone(),
            "r1" => self.r[0].clone(),
            "r2" => self.r[1].clone(),
            "r3" => self.r[2].clone(),
            "C5" => self.c5.clone(),
            "phi6" => self.phi6.clone(),
            "psi6" => self.psi6.clone(),
            "z1" => self.z[0].clone(),
            "z2" => self.z[1].clone(),
            "z3" => self.z[2].clone(),
            "K" => self.k.clone(),
            "y1" => y(Y1, d),
            "y2" => y(Y2, d),
            "y3" => y(Y3, d),
            "one" => Polynomial::one(d),
            _ => return None,
        })
    }

    /// Applies the involution at a point; `DegeneratePoint` when every component vanishes.
    pub fn apply(&self, p: &ProjPoint) -> Result<ProjPoint> {
        image(&self.z, p)
    }
}

/// `w(v)·w'(y) − w'(v)·w(y)`.
pub fn w3_of(bundle: &BertiniBundle, v: &[Polynomial; 3]) -> Result<Polynomial> {
    w3_of_cubics(&bundle.w, &bundle.wp, v)
}

pub(crate) fn w3_of_cubics(w: &Polynomial, wp: &Polynomial, v: &[Polynomial; 3]) -> Result<Polynomial> {
    let bind = [(Y1, &v[0]), (Y2, &v[1]), (Y3, &v[2])];
    let wv = w.substitute(&bind)?;
    let wpv = wp.substitute(&bind)?;
    Ok(wv.try_mul(wp)?.try_sub(&wpv.try_mul(w)?)?)
}

/// Evaluates a triple of forms at `p` and normalizes.
pub(crate) fn image(forms: &[Polynomial], p: &ProjPoint) -> Result<ProjPoint> {
    let at = p.as_assignment();
    let values = forms.iter().map(|f| f.evaluate(&at)).collect::<std::result::Result<Vec<Scalar>, _>>()?;
    match ProjPoint::new(&values) {
        Err(Error::ZeroPoint) => Err(Error::DegeneratePoint),
        other => other,
    }
}

/// The Bertini involution of a concrete pencil at `y`.
pub fn apply_bertini(spec: &PencilSpec, y: &ProjPoint) -> Result<ProjPoint> {
    if !spec.is_concrete() {
        return Err(Error::NeedsConcrete);
    }
    build_bundle(spec)?.apply(y)
}
