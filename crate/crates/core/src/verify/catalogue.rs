//! The fixed list of checks run by the verification suites.

use super::{product_bytes, Ctx, Suite};
use crate::bertini::{tangent_residual, w3_of};
use crate::error::Result;
use crate::geiser::{geiser_ram, ram_braced_after, GeiserRamData};
use crate::pencil::{PencilSpec, CUBIC_SHAPES};
use crate::ring::{Domain, Polynomial, Scalar, Variable};
use crate::sigma2::{
    basepoint_locus, basepoint_residual_at, basepoint_section, binary_form, compose_form, ram_closed_form,
    ram_oracle_seeded, RamData,
};

use Variable::*;

/// The family of pencils a check quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Generic,
    /// `a1 = a2 = 0`.
    Geiser,
    /// Pencils through `(1, u2, u3)`.
    Locus,
    /// Geiser pencils through `(1, u2, u3)`.
    GeiserLocus,
}

impl Base {
    pub fn spec(self) -> PencilSpec {
        match self {
            Base::Generic => PencilSpec::generic(),
            Base::Geiser => PencilSpec::generic_geiser(),
            Base::Locus => basepoint_locus(),
            Base::GeiserLocus => {
                let zero = Scalar::zero(Domain::Rational);
                basepoint_locus().specialize(&[(A1, zero.clone()), (A2, zero)]).expect("rational")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expect {
    /// Every returned polynomial vanishes.
    Zero,
    /// At least one returned polynomial is nonzero.
    Differ,
}

type Diffs = fn(&Ctx) -> Result<Vec<Polynomial>>;

pub struct Check {
    pub name: &'static str,
    pub suite: Suite,
    pub base: Base,
    pub expect: Expect,
    pub(crate) symbolic: Option<Diffs>,
    pub(crate) modular: Option<Diffs>,
    /// Bytes the symbolic computation needs at its largest product.
    pub(crate) estimate: Option<fn(&Ctx) -> Result<u64>>,
}

impl Check {
    fn both(name: &'static str, suite: Suite, base: Base, f: Diffs) -> Check {
        Check { name, suite, base, expect: Expect::Zero, symbolic: Some(f), modular: Some(f), estimate: None }
    }

    fn symbolic_only(name: &'static str, suite: Suite, base: Base, f: Diffs) -> Check {
        Check { name, suite, base, expect: Expect::Zero, symbolic: Some(f), modular: None, estimate: None }
    }

    fn modular_only(name: &'static str, suite: Suite, base: Base, f: Diffs) -> Check {
        Check { name, suite, base, expect: Expect::Zero, symbolic: None, modular: Some(f), estimate: None }
    }

    fn with_estimate(mut self, est: fn(&Ctx) -> Result<u64>) -> Check {
        self.estimate = Some(est);
        self
    }

    fn expecting(mut self, expect: Expect) -> Check {
        self.expect = expect;
        self
    }

    pub fn runs_symbolically(&self) -> bool {
        self.symbolic.is_some()
    }
}

pub fn catalogue() -> Vec<Check> {
    use Base::*;
    use Suite::{Bertini, Geiser as G, Sigma2};
    vec![
        Check::both("bertini_id_y3r1_y1r3", Bertini, Generic, id_y3r1_y1r3),
        Check::both("bertini_id_y2r3_y3r2", Bertini, Generic, id_y2r3_y3r2),
        Check::both("bertini_id_y1r2_y2r1", Bertini, Generic, id_y1r2_y2r1),
        Check::both("bertini_id_y3z1_y1z3", Bertini, Generic, id_y3z1_y1z3),
        Check::both("bertini_id_y2z3_y3z2", Bertini, Generic, id_y2z3_y3z2),
        Check::both("tangency", Bertini, Generic, tangency),
        Check { modular: Some(w3_of_r_direct), ..Check::symbolic_only("w3_of_r", Bertini, Generic, w3_of_r_lifted) },
        Check::both("w3_of_z", Bertini, Generic, w3_of_z).with_estimate(w3_of_z_cost),
        Check::both("double_vanishing", Bertini, Generic, double_vanishing),
        Check::both("psi_relation", Sigma2, Generic, psi_relation),
        Check::both("k2_relation", Sigma2, Generic, k2_relation).with_estimate(k2_cost),
        Check::both("prime_swap_symmetry", Sigma2, Generic, prime_swap_symmetry),
        Check::symbolic_only("oracle_agreement", Sigma2, Generic, oracle_agreement),
        Check::both("basepoint_section", Sigma2, Locus, basepoint_identity),
        Check::modular_only("basepoint_singular", Sigma2, Locus, basepoint_singular),
        Check::both("geiser_splittings", G, Geiser, geiser_splittings),
        Check::both("geiser_w3_reduction", G, Geiser, geiser_w3_reduction),
        Check::both("geiser_id_y3r1_y1r3", G, Geiser, geiser_id_y3r1_y1r3),
        Check::both("geiser_id_y2r3_y3r2", G, Geiser, geiser_id_y2r3_y3r2),
        Check::both("geiser_id_y1r2_y2r1", G, Geiser, geiser_id_y1r2_y2r1),
        Check::both("geiser_id_y3z1_y1z3", G, Geiser, geiser_id_y3z1_y1z3),
        Check::both("geiser_id_y2z3_y3z2", G, Geiser, geiser_id_y2z3_y3z2),
        Check::both("geiser_psi3_relation", G, Geiser, geiser_psi3_relation),
        Check::both("geiser_kt2_relation", G, Geiser, geiser_kt2_relation),
        Check::both("q0r0s0_vanish", G, Geiser, q0r0s0_vanish),
        Check::symbolic_only("brace_order_guard", G, Geiser, brace_order_guard).expecting(Expect::Differ),
        Check::modular_only("geiser_basepoint_singular", G, GeiserLocus, geiser_basepoint_singular),
    ]
}

fn id_y3r1_y1r3(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![c.y(Y3) * &b.r[0] - c.y(Y1) * &b.r[2] - &b.a[1] * &b.gamma4 * &b.phi6])
}

fn id_y2r3_y3r2(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![c.y(Y2) * &b.r[2] - c.y(Y3) * &b.r[1] - &b.a[0] * &b.gamma4 * &b.psi6])
}

fn id_y1r2_y2r1(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![c.y(Y1) * &b.r[1] - c.y(Y2) * &b.r[0] + &b.rp1 * &b.gamma4])
}

fn id_y3z1_y1z3(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![c.y(Y3) * &b.z[0] - c.y(Y1) * &b.z[2] + &b.phi6 * &b.k * &b.a[1]])
}

fn id_y2z3_y3z2(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![c.y(Y2) * &b.z[2] - c.y(Y3) * &b.z[1] + &b.psi6 * &b.k * &b.a[0]])
}

fn tangency(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![&b.a[0] * &b.r[0] + &b.a[1] * &b.r[1]])
}

/// Cubic shape monomial `m(x)` for the stand-in coordinates `x`.
fn shape_at(i: usize, x: &[Polynomial; 3]) -> Polynomial {
    let mut out = Polynomial::one(x[0].domain());
    for (v, e) in CUBIC_SHAPES[i] {
        let j = v.index() - Y1.index();
        out = out * x[j].pow(*e).expect("small exponent");
    }
    out
}

/// `W3(r) = 0` without expanding `r`'s cubes.
///
/// `W3(x) = w(x)w'(y) − w'(x)w(y) = Σ_m A_m(y)·m(x)`, and `r` is a fixed polynomial
/// in the seven `A_m`. So it suffices that (1) the decomposition holds for
/// symbolic `x`, (2) `Σ α_m·m(r(α)) = 0` for free symbols `α_m`, and (3) the
/// bundle's `r` is `r(α)` at `α = A(y)`.
fn w3_of_r_lifted(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    let d = c.domain();
    let coeffs = [&b.a[0], &b.a[1], &b.b[0], &b.b[1], &b.b[2], &b.c[0], &b.c[1]];

    // (1) with t1, t2, u2 standing in for x
    let x = [T1, T2, U2].map(|v| Polynomial::var(v, d));
    let bind = [(Y1, &x[0]), (Y2, &x[1]), (Y3, &x[2])];
    let w3 = b.w.substitute(&bind)? * &b.wp - b.wp.substitute(&bind)? * &b.w;
    let decomposed = (0..7).fold(Polynomial::zero(d), |acc, i| acc + coeffs[i] * &shape_at(i, &x));
    let mut diffs = vec![w3 - decomposed];

    // (2) the unprimed coefficient variables stand in for α
    let alpha: Vec<Polynomial> = Variable::UNPRIMED.iter().map(|v| Polynomial::var(*v, d)).collect();
    let alpha_refs: [&Polynomial; 7] = std::array::from_fn(|i| &alpha[i]);
    let (_, _, free_r) = tangent_residual(alpha_refs, Default::default());
    diffs.push((0..7).fold(Polynomial::zero(d), |acc, i| acc + &alpha[i] * &shape_at(i, &free_r)));

    // (3)
    let subst: Vec<(Variable, &Polynomial)> = Variable::UNPRIMED.iter().copied().zip(coeffs).collect();
    for (free, r) in free_r.iter().zip(&b.r) {
        diffs.push(free.substitute(&subst)? - r);
    }
    Ok(diffs)
}

fn w3_of_r_direct(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![w3_of(b, &b.r)?])
}

fn w3_of_z(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    Ok(vec![w3_of(b, &b.z)?])
}

fn w3_of_z_cost(c: &Ctx) -> Result<u64> {
    let b = c.bundle()?;
    let n = b.z.iter().map(Polynomial::num_terms).max().unwrap_or(0);
    Ok(product_bytes(n, n))
}

/// `f` and its first partials at a point of the plane.
fn order_two_conditions(f: &Polynomial, pt: &[Scalar; 3]) -> Result<Vec<Polynomial>> {
    let at: Vec<(Variable, Scalar)> = Variable::POINT.iter().copied().zip(pt.iter().cloned()).collect();
    let mut out = vec![f.specialize(&at)?];
    for v in Variable::POINT {
        out.push(f.derivative(v).specialize(&at)?);
    }
    Ok(out)
}

fn double_vanishing(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    let d = c.domain();
    let (zero, one) = (Scalar::zero(d), Scalar::one(d));
    let vertices = [[one.clone(), zero.clone(), zero.clone()], [zero.clone(), one, zero]];
    let mut out = Vec::new();
    for f in [&b.phi6, &b.psi6] {
        for v in &vertices {
            out.extend(order_two_conditions(f, v)?);
        }
    }
    Ok(out)
}

fn psi_relation(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    let ram = c.ram()?;
    Ok(vec![&b.psi6 - &b.phi6 - compose_form(&ram.s, &b.w, &b.wp)?])
}

fn k2_relation(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    let ram = c.ram()?;
    let (w, wp, phi) = (&b.w, &b.wp, &b.phi6);
    let r = compose_form(&ram.r, w, wp)?;
    let rhs = -phi.pow(3)?.scale_int(4)
        + phi * phi * compose_form(&ram.p, w, wp)?
        + phi * compose_form(&ram.q, w, wp)?
        + &r * &r;
    Ok(vec![&b.k * &b.k - rhs])
}

fn k2_cost(c: &Ctx) -> Result<u64> {
    let b = c.bundle()?;
    Ok(product_bytes(b.k.num_terms(), b.k.num_terms()))
}

fn prime_swap_symmetry(c: &Ctx) -> Result<Vec<Polynomial>> {
    let ram = c.ram()?;
    let swapped = ram_closed_form().specialize_to(&c.spec.swapped())?;
    let sigma = |f: &[Polynomial]| binary_form(f).rename(&[(T1, T2), (T2, T1)]);
    let pairs: [(&[Polynomial], &[Polynomial]); 4] =
        [(&ram.s, &swapped.s), (&ram.p, &swapped.p), (&ram.q, &swapped.q), (&ram.r, &swapped.r)];
    let mut out = Vec::new();
    for (i, (orig, sw)) in pairs.into_iter().enumerate() {
        let f = binary_form(orig);
        // R3 changes sign, the other three forms are invariant
        out.push(if i == 3 { sigma(sw) + f } else { sigma(sw) - f });
    }
    Ok(out)
}

fn entry_diffs(a: &RamData, b: &RamData) -> Vec<Polynomial> {
    a.entries().zip(b.entries()).map(|((_, _, x), (_, _, y))| x - y).collect()
}

fn oracle_agreement(c: &Ctx) -> Result<Vec<Polynomial>> {
    let out = ram_oracle_seeded(c.bundle()?, c.seed)?;
    Ok(entry_diffs(&out.ram, c.ram()?))
}

fn basepoint_identity(c: &Ctx) -> Result<Vec<Polynomial>> {
    Ok(vec![basepoint_residual_at(&c.spec, &c.u[0], &c.u[1])?])
}

fn basepoint_point(c: &Ctx) -> Result<[Scalar; 3]> {
    let d = c.domain();
    let u = |i: usize| c.u[i].as_constant().ok_or(crate::error::Error::NeedsConcrete);
    Ok([Scalar::one(d), u(0)?, u(1)?])
}

fn basepoint_singular(c: &Ctx) -> Result<Vec<Polynomial>> {
    let [_, u2, u3] = basepoint_point(c)?;
    let section = basepoint_section(&c.spec, &u2, &u3)?;
    order_two_conditions(&section.psi6u, &basepoint_point(c)?)
}

fn geiser_basepoint_singular(c: &Ctx) -> Result<Vec<Polynomial>> {
    let [_, u2, u3] = basepoint_point(c)?;
    let section = crate::geiser::basepoint_section_geiser(&c.spec, &u2, &u3)?;
    order_two_conditions(&section.psi3u, &basepoint_point(c)?)
}

fn geiser_splittings(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    let g = c.geiser()?;
    let w = &g.w;
    let w2 = w * w;
    let w3 = &w2 * w;
    let mut out = vec![
        &b.a[0] + c.entry(A1p) * w,
        &b.a[1] + c.entry(A2p) * w,
        &b.gamma4 - w * &g.gamma1,
        &b.rp1 - &w2 * &g.rt_p1,
        &b.rp3 - w * &g.rt_p3,
        &b.phi6 - w * &g.phi3,
        &b.psi6 - w * &g.psi3,
        &b.c5 - w * &g.ct,
        &b.k - w * &g.kt,
    ];
    for i in 0..3 {
        out.push(&b.r[i] - &w3 * &g.rt[i]);
    }
    Ok(out)
}

fn geiser_w3_reduction(c: &Ctx) -> Result<Vec<Polynomial>> {
    let b = c.bundle()?;
    let g = c.geiser()?;
    let w3 = g.w.pow(3)?;
    Ok((0..3).map(|i| &b.z[i] - &w3 * &g.z[i]).collect())
}

// The signs of the first two follow from the generic identities through A_i = −a_i'·w and γ4 = w·γ1.
fn geiser_id_y3r1_y1r3(c: &Ctx) -> Result<Vec<Polynomial>> {
    let g = c.geiser()?;
    Ok(vec![c.y(Y3) * &g.rt[0] - c.y(Y1) * &g.rt[2] + c.entry(A2p) * &g.gamma1 * &g.phi3])
}

fn geiser_id_y2r3_y3r2(c: &Ctx) -> Result<Vec<Polynomial>> {
    let g = c.geiser()?;
    Ok(vec![c.y(Y2) * &g.rt[2] - c.y(Y3) * &g.rt[1] + c.entry(A1p) * &g.gamma1 * &g.psi3])
}

fn geiser_id_y1r2_y2r1(c: &Ctx) -> Result<Vec<Polynomial>> {
    let g = c.geiser()?;
    Ok(vec![c.y(Y1) * &g.rt[1] - c.y(Y2) * &g.rt[0] + &g.rt_p1 * &g.gamma1])
}

fn geiser_id_y3z1_y1z3(c: &Ctx) -> Result<Vec<Polynomial>> {
    let g = c.geiser()?;
    Ok(vec![c.y(Y3) * &g.z[0] - c.y(Y1) * &g.z[2] - c.entry(A2p) * &g.phi3 * &g.kt])
}

fn geiser_id_y2z3_y3z2(c: &Ctx) -> Result<Vec<Polynomial>> {
    let g = c.geiser()?;
    Ok(vec![c.y(Y2) * &g.z[2] - c.y(Y3) * &g.z[1] - c.entry(A1p) * &g.psi3 * &g.kt])
}

fn geiser_data(c: &Ctx) -> Result<GeiserRamData> {
    geiser_ram(c.ram()?)
}

fn geiser_psi3_relation(c: &Ctx) -> Result<Vec<Polynomial>> {
    let g = c.geiser()?;
    let gram = geiser_data(c)?;
    Ok(vec![&g.psi3 - &g.phi3 - compose_form(&gram.st, &g.w, &g.wp)?])
}

fn geiser_kt2_relation(c: &Ctx) -> Result<Vec<Polynomial>> {
    let g = c.geiser()?;
    let gram = geiser_data(c)?;
    let (w, wp, phi) = (&g.w, &g.wp, &g.phi3);
    let r = compose_form(&gram.rt, w, wp)?;
    let rhs = -(phi.pow(3)?.scale_int(4) * w)
        + phi * phi * compose_form(&gram.p, w, wp)?
        + phi * compose_form(&gram.qt, w, wp)?
        + &r * &r;
    Ok(vec![&g.kt * &g.kt - rhs])
}

fn q0r0s0_vanish(c: &Ctx) -> Result<Vec<Polynomial>> {
    let ram = c.ram()?;
    Ok(vec![ram.q[0].clone(), ram.r[0].clone(), ram.s[0].clone()])
}

fn brace_order_guard(c: &Ctx) -> Result<Vec<Polynomial>> {
    Ok(entry_diffs(&ram_braced_after(&c.spec)?, c.ram()?))
}

