use super::closed::{binary_form, RamData};
use crate::bertini::sextics_of;
use crate::error::{Error, Result};
use crate::pencil::{PencilSpec, ProjPoint};
use crate::ring::{Polynomial, Scalar, Variable};

/// A point `(z0 : z1 : z2 : z3)` of the quadric cone `z1·z3 = z2²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePoint {
    pub z: [Scalar; 4],
}

impl ConePoint {
    pub fn on_cone(&self) -> bool {
        &self.z[1] * &self.z[3] == &self.z[2] * &self.z[2]
    }
}

/// A point of the affine chart of `Σ2`: fiber coordinate `x = (w : w')` and `y = φ6/w'²`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma2Point {
    /// Normalized projective pair; `(1 : 0)` is the fiber at infinity.
    pub x: [Scalar; 2],
    pub y: Scalar,
}

impl Sigma2Point {
    /// Affine value of `x`, if the fiber is finite.
    pub fn x_affine(&self) -> Option<Scalar> {
        self.x[0].try_div(&self.x[1]).ok()
    }
}

struct Values {
    w: Scalar,
    wp: Scalar,
    phi6: Scalar,
}

fn values(spec: &PencilSpec, y: &ProjPoint) -> Result<Values> {
    if !spec.is_concrete() {
        return Err(Error::NeedsConcrete);
    }
    if y.domain() != spec.domain() {
        return Err(Error::MixedSpec);
    }
    let at = y.as_assignment();
    let [_, phi6, _] = sextics_of(spec)?;
    Ok(Values { w: spec.w().evaluate(&at)?, wp: spec.wp().evaluate(&at)?, phi6: phi6.evaluate(&at)? })
}

/// `(φ6(y) : w(y)² : w(y)w'(y) : w'(y)²)`.
pub fn cone_map(spec: &PencilSpec, y: &ProjPoint) -> Result<ConePoint> {
    let v = values(spec, y)?;
    let raw = [v.phi6, &v.w * &v.w, &v.w * &v.wp, &v.wp * &v.wp];
    let p = match ProjPoint::new(&raw) {
        Err(Error::ZeroPoint) => return Err(Error::DegeneratePoint),
        other => other?,
    };
    Ok(ConePoint { z: p.coords().to_vec().try_into().expect("four coordinates") })
}

/// `x = (w(y) : w'(y))`, `y = φ6(y)/w'(y)²`; `ChartUndefined` when `w'(y) = 0`.
pub fn sigma2_chart(spec: &PencilSpec, y: &ProjPoint) -> Result<Sigma2Point> {
    let v = values(spec, y)?;
    if v.w.is_zero() && v.wp.is_zero() {
        return Err(Error::DegeneratePoint);
    }
    if v.wp.is_zero() {
        return Err(Error::ChartUndefined);
    }
    let wp2 = &v.wp * &v.wp;
    let x = ProjPoint::new(&[v.w, v.wp])?;
    Ok(Sigma2Point { x: x.coords().to_vec().try_into().expect("pair"), y: v.phi6.try_div(&wp2)? })
}

fn at_x(c: &[Polynomial], x: &Scalar) -> Result<Scalar> {
    let one = Scalar::one(x.domain());
    Ok(binary_form(c).evaluate(&[(Variable::T1, x.clone()), (Variable::T2, one)])?)
}

/// `−4y³ + y²P2(x) + yQ4(x) + R3(x)²` for concrete ramification data.
pub fn trigonal_residual(ram: &RamData, pt: &Sigma2Point) -> Result<Scalar> {
    let x = pt.x_affine().ok_or(Error::ChartUndefined)?;
    let y = &pt.y;
    let p = at_x(&ram.p, &x)?;
    let q = at_x(&ram.q, &x)?;
    let r = at_x(&ram.r, &x)?;
    let four = Scalar::from_i64(4, x.domain());
    let terms = [-&(&four * &y.pow(3)), &y.pow(2) * &p, y * &q, &r * &r];
    Ok(terms.iter().fold(Scalar::zero(x.domain()), |acc, t| &acc + t))
}
