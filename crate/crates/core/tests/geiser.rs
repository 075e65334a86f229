use bertini_core::geiser::*;
use bertini_core::rng::Stream;
use bertini_core::sigma2::{basepoint_locus, compose_form, ram_closed_form, vanishing_order};
use bertini_core::{build_bundle, Domain, Error, PencilSpec, Polynomial, ProjPoint, Scalar, Variable};

const P: u64 = 1_000_000_007;

fn var(v: Variable) -> Polynomial {
    Polynomial::var(v, Domain::Rational)
}

fn random_point(rng: &mut Stream) -> ProjPoint {
    let c: Vec<Scalar> = (0..3).map(|_| Scalar::modular(rng.nonzero_below(P), P)).collect();
    ProjPoint::new(&c).unwrap()
}

#[test]
fn rejects_non_geiser_specs() {
    assert_eq!(build_geiser(&PencilSpec::generic()).unwrap_err(), Error::SpecNotGeiser(Variable::A1));
    let spec = PencilSpec::generic().with(&[(Variable::A1, Polynomial::zero(Domain::Rational))]).unwrap();
    assert_eq!(build_geiser(&spec).unwrap_err(), Error::SpecNotGeiser(Variable::A2));
}

#[test]
fn splittings_of_the_bertini_bundle() {
    let spec = PencilSpec::generic_geiser();
    let b = build_bundle(&spec).unwrap();
    let g = build_geiser(&spec).unwrap();
    let w = &g.w;
    assert_eq!(b.a[0], -(var(Variable::A1p) * w));
    assert_eq!(b.a[1], -(var(Variable::A2p) * w));
    assert_eq!(b.gamma4, w * &g.gamma1);
    assert_eq!(b.rp1, w * w * &g.rt_p1);
    assert_eq!(b.rp3, w * &g.rt_p3);
    let w3 = w * w * w;
    for i in 0..3 {
        assert_eq!(b.r[i], &w3 * &g.rt[i]);
    }
    assert_eq!(b.phi6, w * &g.phi3);
    assert_eq!(b.psi6, w * &g.psi3);
    assert_eq!(b.c5, w * &g.ct);
    assert_eq!(b.k, w * &g.kt);
    for i in 0..3 {
        assert_eq!(b.z[i], &w3 * &g.z[i], "z{}", i + 1);
    }
}

#[test]
fn degrees_in_y() {
    let g = build_geiser(&PencilSpec::generic_geiser()).unwrap();
    let deg = |f: &Polynomial| f.homogeneous_degree_in(&Variable::POINT);
    assert_eq!(deg(&g.gamma1), Some(1));
    assert_eq!(deg(&g.ct), Some(2));
    assert_eq!(deg(&g.phi3), Some(3));
    assert_eq!(deg(&g.psi3), Some(3));
    assert_eq!(deg(&g.kt), Some(6));
    for z in &g.z {
        assert_eq!(deg(z), Some(8));
    }
}

#[test]
fn reduced_identities() {
    let g = build_geiser(&PencilSpec::generic_geiser()).unwrap();
    let [y1, y2, y3] = [var(Variable::Y1), var(Variable::Y2), var(Variable::Y3)];
    let (a1p, a2p) = (var(Variable::A1p), var(Variable::A2p));
    let [r1, r2, r3] = &g.rt;
    // the signs follow from the generic identities through A_i = −a_i'·w and γ4 = w·γ1
    assert_eq!(&y3 * r1 - &y1 * r3, -(&a2p * &g.gamma1 * &g.phi3));
    assert_eq!(&y2 * r3 - &y3 * r2, -(&a1p * &g.gamma1 * &g.psi3));
    assert_eq!(&y1 * r2 - &y2 * r1, -(&g.rt_p1 * &g.gamma1));
    let [z1, z2, z3] = &g.z;
    assert_eq!(&y3 * z1 - &y1 * z3, &a2p * &g.phi3 * &g.kt);
    assert_eq!(&y2 * z3 - &y3 * z2, &a1p * &g.psi3 * &g.kt);
}

#[test]
fn ramification_identities() {
    let spec = PencilSpec::generic_geiser();
    let g = build_geiser(&spec).unwrap();
    let gram = GeiserRamData::for_spec(&spec).unwrap();
    let (w, wp) = (&g.w, &g.wp);
    assert_eq!(g.psi3, &g.phi3 + compose_form(&gram.st, w, wp).unwrap());
    let r = compose_form(&gram.rt, w, wp).unwrap();
    let rhs = -(g.phi3.pow(3).unwrap().scale_int(4) * w)
        + &g.phi3 * &g.phi3 * compose_form(&gram.p, w, wp).unwrap()
        + &g.phi3 * compose_form(&gram.qt, w, wp).unwrap()
        + &r * &r;
    assert_eq!(&g.kt * &g.kt, rhs);
}

#[test]
fn free_terms_vanish_only_with_brace_first() {
    assert_eq!(geiser_ram(&ram_closed_form()).unwrap_err(), Error::NonzeroFreeTerm("s0"));
    let spec = PencilSpec::generic_geiser();
    let correct = ram_closed_form().specialize_to(&spec).unwrap();
    let late = ram_braced_after(&spec).unwrap();
    assert!(late.s.iter().all(Polynomial::is_zero));
    assert!(!correct.s[1].is_zero());
    assert_ne!(late, correct);
    let gram = geiser_ram(&correct).unwrap();
    assert_eq!(gram.st[0], -(var(Variable::A2p) * var(Variable::C1)) + var(Variable::A1p) * var(Variable::C2));
}

#[test]
fn involution_is_the_deck_transformation() {
    let mut rng = Stream::new(23, 0);
    for _ in 0..10 {
        let spec = PencilSpec::generic_geiser().sample(P, &mut rng).unwrap();
        let y = random_point(&mut rng);
        let image = geiser_apply(&spec, &y).unwrap();
        assert_ne!(image, y);
        assert_eq!(geiser_apply(&spec, &image).unwrap(), y);
        assert_eq!(anticanonical_map(&spec, &image).unwrap(), anticanonical_map(&spec, &y).unwrap());
    }
}

#[test]
fn quartic_residual_is_minus_kt_squared() {
    let mut rng = Stream::new(29, 0);
    for _ in 0..5 {
        let spec = PencilSpec::generic_geiser().sample(P, &mut rng).unwrap();
        let g = build_geiser(&spec).unwrap();
        let gram = GeiserRamData::for_spec(&spec).unwrap();
        let y = random_point(&mut rng);
        let at = y.as_assignment();
        let lead = g.phi3.evaluate(&at).unwrap();
        let kt = g.kt.evaluate(&at).unwrap();
        let zbar = anticanonical_map(&spec, &y).unwrap();
        let residual = quartic_residual(&gram, &zbar).unwrap();
        assert_eq!(residual, (-&(&kt * &kt)).try_div(&lead.pow(4)).unwrap());
    }
}

#[test]
fn quartic_residual_on_the_line_z0() {
    let q = Domain::Rational;
    let c = |v: i64| Polynomial::integer(v, q);
    let gram = GeiserRamData {
        st: [c(0), c(0)],
        qt: [c(1), c(1), c(1), c(1)],
        rt: [c(1), c(0), c(-1)],
        p: [c(3), c(0), c(0)],
    };
    let s = |v: i64| Scalar::from_i64(v, q);
    assert!(quartic_residual(&gram, &ProjPoint::new(&[s(0), s(1), s(1)]).unwrap()).unwrap().is_zero());
    assert!(!quartic_residual(&gram, &ProjPoint::new(&[s(1), s(1), s(2)]).unwrap()).unwrap().is_zero());
}

#[test]
fn vertex_section_recovers_psi3() {
    let mut rng = Stream::new(31, 0);
    let spec = PencilSpec::generic_geiser().sample(P, &mut rng).unwrap();
    let zero = Scalar::zero(Domain::Prime(P));
    let section = basepoint_section_geiser(&spec, &zero, &zero).unwrap();
    assert_eq!(section.psi3u, build_geiser(&spec).unwrap().psi3);
}

#[test]
fn section_cubic_is_singular_at_its_basepoint() {
    let mut rng = Stream::new(37, 0);
    let q = Domain::Rational;
    let locus = basepoint_locus().specialize(&[(Variable::A1, Scalar::zero(q)), (Variable::A2, Scalar::zero(q))]).unwrap();
    for _ in 0..3 {
        let (u2, u3) = (Scalar::modular(rng.nonzero_below(P), P), Scalar::modular(rng.nonzero_below(P), P));
        let spec = locus
            .reduce_mod(P)
            .unwrap()
            .specialize(&[(Variable::U2, u2.clone()), (Variable::U3, u3.clone())])
            .unwrap()
            .sample(P, &mut rng)
            .unwrap();
        let section = basepoint_section_geiser(&spec, &u2, &u3).unwrap();
        let bp = ProjPoint::new(&[Scalar::one(Domain::Prime(P)), u2, u3]).unwrap();
        assert_eq!(vanishing_order(&section.psi3u, &bp).unwrap(), Some(2));
    }
}
