use std::collections::BTreeSet;

use lie2coh::ext::{
    coboundary_matrix, coboundary_of, coboundary_solve, cocycle_basis, cocycle_from_extension, degree_two_lattice,
    extension_from_cocycle, extension_isomorphism, h2_class_count, trivial_coeff_extension, trivial_cocycle_defects,
    trivial_extension_iso, xmod_morphism_defects, ExtError, TwoCocycle,
};
use lie2coh::lie2::{xmod_from_quadruple, CrossedModuleAlg, TwoVectorSpace};
use lie2coh::liealg::LieAlgebra;
use lie2coh::numeric::{int, zero, Matrix, Rational};
use lie2coh::random::{self, TestRng};
use lie2coh::tworep::{adjoint_rep, semidirect_2alg, TwoRep};
use rand::Rng;

fn h_plane() -> TwoRep {
    let x = CrossedModuleAlg::new(LieAlgebra::abelian(0), LieAlgebra::abelian(2), Matrix::zeros(2, 0), vec![Matrix::zeros(0, 0); 2]);
    TwoRep::trivial(x, TwoVectorSpace::zero(0, 1))
}

fn aff1_context() -> TwoRep {
    let mut rng = random::rng(3);
    let h = LieAlgebra::aff1();
    let rho = random::abelian_rep(&mut rng, &h, 1, &[0, 1]);
    adjoint_rep(&xmod_from_quadruple(&h, &[0, 1], 1, &rho).unwrap())
}

fn random_cocycle(rng: &mut TestRng, rep: &TwoRep) -> TwoCocycle {
    let n = TwoCocycle::coordinate_count(rep);
    let mut c = vec![zero(); n];
    for b in cocycle_basis(rep) {
        let s = random::small(rng);
        for (ci, bi) in c.iter_mut().zip(b.to_vec()) {
            *ci += &s * bi;
        }
    }
    TwoCocycle::from_vec(rep.clone(), &c).unwrap()
}

fn random_lambdas(rng: &mut TestRng, rep: &TwoRep) -> (Matrix, Matrix) {
    let x = &rep.source;
    (random::matrix(rng, rep.dim_v(), x.dim_h()), random::matrix(rng, rep.dim_w(), x.dim_g()))
}

fn plus(c: &TwoCocycle, d: &TwoCocycle) -> TwoCocycle {
    let v: Vec<Rational> = c.to_vec().iter().zip(d.to_vec()).map(|(a, b)| a + b).collect();
    TwoCocycle::from_vec(c.rep.clone(), &v).unwrap()
}

fn contexts(seed: u64, n: usize) -> Vec<TwoRep> {
    let mut rng = random::rng(seed);
    let mut out = vec![aff1_context(), h_plane()];
    while out.len() < n {
        out.push(random::context(&mut rng, 2));
    }
    out
}

#[test]
fn zero_cocycle_gives_semidirect_sum() {
    for rep in contexts(1, 12) {
        let e = extension_from_cocycle(&TwoCocycle::zero(rep.clone())).unwrap();
        assert_eq!(e.total, semidirect_2alg(&rep.source, &rep).unwrap());
        assert!(e.validate().is_empty());
    }
}

#[test]
fn volume_form_gives_heisenberg() {
    let rep = h_plane();
    let c = TwoCocycle::new(rep, vec![int(1)], vec![], Matrix::zeros(1, 0)).unwrap();
    assert!(c.validate().is_empty());
    let e = extension_from_cocycle(&c).unwrap();
    assert!(e.validate().is_empty());
    let h = &e.total.h;
    assert!(!h.is_abelian());
    // [e₀, e₁] is central and spans the derived algebra
    let z = h.bracket_basis(0, 1).to_vec();
    assert_eq!(z, vec![zero(), zero(), int(-1)]);
    for i in 0..3 {
        assert!(h.bracket(&z, &(0..3).map(|k| int((k == i) as i64)).collect::<Vec<_>>()).iter().all(|c| *c == zero()));
    }
}

#[test]
fn broken_alpha_is_rejected_with_eq_v() {
    let rep = aff1_context();
    let n = TwoCocycle::coordinate_count(&rep);
    let (n0, na) = (rep.dim_v(), rep.source.dim_h() * rep.source.dim_g() * rep.dim_w());
    let mut hit = false;
    for k in n0..n0 + na {
        let mut v = vec![zero(); n];
        v[k] = int(1);
        let c = TwoCocycle::from_vec(rep.clone(), &v).unwrap();
        if c.equations().iter().any(|d| d.axiom == "eq v") {
            match extension_from_cocycle(&c) {
                Err(ExtError::NotCocycle(d)) => assert!(d.iter().any(|v| v.axiom == "eq v")),
                other => panic!("expected rejection, got {other:?}"),
            }
            hit = true;
        }
    }
    assert!(hit);
}

#[test]
fn round_trip_recovers_cocycle() {
    let mut rng = random::rng(11);
    let reps = contexts(12, 50);
    for rep in &reps {
        let c = random_cocycle(&mut rng, rep);
        assert!(c.validate().is_empty());
        let e = extension_from_cocycle(&c).unwrap();
        assert!(e.validate().is_empty(), "{:?}", e.validate());
        let (s1, s0) = e.canonical_splitting();
        let (r, back) = cocycle_from_extension(&e, &s1, &s0).unwrap();
        assert_eq!(&r, rep);
        assert_eq!(back, c);
        assert_eq!(e.omega1, c.omega1());
    }
}

#[test]
fn zero_round_trip() {
    for rep in contexts(2, 8) {
        let e = extension_from_cocycle(&TwoCocycle::zero(rep.clone())).unwrap();
        let (s1, s0) = e.canonical_splitting();
        let (_, back) = cocycle_from_extension(&e, &s1, &s0).unwrap();
        assert_eq!(back, TwoCocycle::zero(rep));
    }
}

#[test]
fn perturbed_splitting_is_cohomologous() {
    let mut rng = random::rng(13);
    for rep in contexts(14, 30) {
        let c = random_cocycle(&mut rng, &rep);
        let e = extension_from_cocycle(&c).unwrap();
        let (s1, s0) = e.canonical_splitting();
        let (l0, l1) = random_lambdas(&mut rng, &rep);
        let s1p = s1.add(&e.include1.mul(&l1));
        let s0p = s0.add(&e.include0.mul(&l0));
        let (r, c2) = cocycle_from_extension(&e, &s1p, &s0p).unwrap();
        assert_eq!(r, rep);
        assert!(c2.validate().is_empty());
        let (m0, m1) = coboundary_solve(&c, &c2).unwrap().expect("cohomologous");
        assert_eq!(plus(&c, &coboundary_of(&rep, &m0, &m1)), c2);
    }
}

#[test]
fn non_section_is_rejected() {
    let e = extension_from_cocycle(&TwoCocycle::zero(aff1_context())).unwrap();
    let (s1, s0) = e.canonical_splitting();
    assert!(matches!(cocycle_from_extension(&e, &s1.scale(&int(2)), &s0), Err(ExtError::NotSection)));
}

#[test]
fn coboundary_solve_examples() {
    let mut rng = random::rng(17);
    for rep in contexts(18, 20) {
        let c = random_cocycle(&mut rng, &rep);
        let (l0, l1) = coboundary_solve(&c, &c).unwrap().unwrap();
        assert!(l0.is_zero() && l1.is_zero());

        let (l0, l1) = random_lambdas(&mut rng, &rep);
        let db = coboundary_of(&rep, &l0, &l1);
        assert!(db.validate().is_empty());
        let c2 = plus(&c, &db);
        let (m0, m1) = coboundary_solve(&c, &c2).unwrap().unwrap();
        assert_eq!(coboundary_of(&rep, &m0, &m1), db);
    }

    let rep = h_plane();
    let a = TwoCocycle::zero(rep.clone());
    let b = TwoCocycle::new(rep, vec![int(1)], vec![], Matrix::zeros(1, 0)).unwrap();
    assert!(coboundary_solve(&a, &b).unwrap().is_none());
    assert!(matches!(coboundary_solve(&a, &TwoCocycle::zero(aff1_context())), Err(ExtError::ContextMismatch)));
}

#[test]
fn cohomologous_extensions_are_isomorphic() {
    let mut rng = random::rng(19);
    for rep in contexts(20, 25) {
        let c = random_cocycle(&mut rng, &rep);
        let (l0, l1) = random_lambdas(&mut rng, &rep);
        let c2 = plus(&c, &coboundary_of(&rep, &l0, &l1));
        let e = extension_from_cocycle(&c).unwrap();
        let e2 = extension_from_cocycle(&c2).unwrap();
        let (p1, p0) = extension_isomorphism(&l0, &l1);
        assert!(xmod_morphism_defects(&e.total, &e2.total, &p1, &p0).is_empty());
        assert!(!xmod_morphism_defects(&e2.total, &e.total, &p1, &p0).is_empty() || (l0.is_zero() && l1.is_zero()) || c == c2);
        assert_eq!(p1.mul(&e.include1), e2.include1);
        assert_eq!(p0.mul(&e.include0), e2.include0);
        assert_eq!(e2.project1.mul(&p1), e.project1);
        assert_eq!(e2.project0.mul(&p0), e.project0);
    }
}

#[test]
fn explicit_equations_match_nabla() {
    let mut rng = random::rng(23);
    for rep in contexts(24, 25) {
        let lat = degree_two_lattice(&rep).unwrap();
        let c = random_cocycle(&mut rng, &rep);
        assert!(c.nabla_check(&lat).unwrap().is_empty());
        for _ in 0..4 {
            let n = TwoCocycle::coordinate_count(&rep);
            let v: Vec<Rational> =
                (0..n).map(|_| if rng.gen_bool(0.3) { random::small(&mut rng) } else { zero() }).collect();
            let c = TwoCocycle::from_vec(rep.clone(), &v).unwrap();
            let explicit: BTreeSet<_> = c.equations().iter().map(|d| d.axiom).collect();
            let nabla: BTreeSet<_> = c.nabla_check(&lat).unwrap().iter().map(|d| d.axiom).collect();
            assert_eq!(explicit, nabla);
            let ext_ok = extension_from_cocycle(&c).is_ok();
            assert_eq!(ext_ok, explicit.is_empty());
        }
    }
}

#[test]
fn nabla_cocycles_are_explicit_cocycles() {
    for rep in contexts(25, 12) {
        let lat = degree_two_lattice(&rep).unwrap();
        let (_, reps) = lat.total_cohomology(2).unwrap();
        for z in reps {
            let c = TwoCocycle::from_total_cochain(&lat, &z);
            let pure = lat.blocks(2).iter().all(|(i, off, dim)| {
                !(i.q == 0 && i.p > 0) || z[*off..off + dim].iter().all(|x| *x == zero())
            });
            if pure {
                assert!(c.validate().is_empty());
            }
        }
    }
}

#[test]
fn class_count_matches_total_cohomology() {
    for rep in contexts(26, 25) {
        let lat = degree_two_lattice(&rep).unwrap();
        let (h2, _) = lat.total_cohomology(2).unwrap();
        let (z, b, classes) = h2_class_count(&rep);
        assert!(b <= z);
        assert_eq!(classes, h2, "Z={z} B={b}");
        assert_eq!(coboundary_matrix(&rep).rows(), TwoCocycle::coordinate_count(&rep));
    }
}

#[test]
fn trivial_coefficient_extensions() {
    // ω = 0, φ = 0 → h ⊕ R
    let x = xmod_from_quadruple(&LieAlgebra::aff1(), &[0, 1], 0, &[Matrix::zeros(0, 0), Matrix::zeros(0, 0)]).unwrap();
    let (dg, dh) = (x.dim_g(), x.dim_h());
    let y = trivial_coeff_extension(&x, &[zero()], &vec![zero(); dg + dh]).unwrap();
    assert!(y.validate().is_empty());
    assert_eq!(y.h, x.h.direct_sum(&LieAlgebra::abelian(1)));

    // g = 0, h = Q², volume form → Heisenberg
    let plane = h_plane().source;
    let y = trivial_coeff_extension(&plane, &[int(1)], &[zero(), zero()]).unwrap();
    assert!(y.validate().is_empty());
    assert!(lie2coh::liealg::validate_lie_algebra(&y.h).is_empty());
    assert_eq!(y.h.bracket_basis(0, 1), &[zero(), zero(), int(-1)][..]);

    // a φ that depends on h fails ∂φ = 0
    let d = trivial_cocycle_defects(&plane, &[int(1)], &[int(1), zero()]);
    assert!(d.iter().any(|v| v.axiom == "2) ∂φ = 0"));
    assert!(matches!(trivial_coeff_extension(&plane, &[int(1)], &[int(1), zero()]), Err(ExtError::NotCocycle(_))));
}

#[test]
fn trivial_coefficient_quotient_recovers_base() {
    let mut rng = random::rng(29);
    for _ in 0..20 {
        let x = random::xmod(&mut rng, 3);
        let (dg, dh) = (x.dim_g(), x.dim_h());
        let d2 = lie2coh::lattice::trivial_total_complex(&x, 2);
        for z in d2.kernel().into_iter().take(3) {
            let (om, ph) = z.split_at(z.len() - dg - dh);
            let y = trivial_coeff_extension(&x, om, ph).unwrap();
            assert!(y.validate().is_empty());
            let proj = Matrix::identity(dh).hstack(&Matrix::zeros(dh, 1));
            assert!(xmod_morphism_defects(&y, &x, &Matrix::identity(dg), &proj).is_empty());
        }
    }
}

#[test]
fn cohomologous_trivial_inputs_give_isomorphic_extensions() {
    let mut rng = random::rng(31);
    for _ in 0..20 {
        let x = random::xmod(&mut rng, 3);
        let (dg, dh) = (x.dim_g(), x.dim_h());
        let d1 = lie2coh::lattice::trivial_total_complex(&x, 1);
        let d2 = lie2coh::lattice::trivial_total_complex(&x, 2);
        let Some(z) = d2.kernel().into_iter().next() else { continue };
        let psi: Vec<Rational> = (0..dh).map(|_| random::small(&mut rng)).collect();
        let dpsi = d1.mul_vec(&psi);
        let z2: Vec<Rational> = z.iter().zip(&dpsi).map(|(a, b)| a + b).collect();
        let split = |v: &[Rational]| (v[..v.len() - dg - dh].to_vec(), v[v.len() - dg - dh..].to_vec());
        let ((o1, p1), (o2, p2)) = (split(&z), split(&z2));
        let y1 = trivial_coeff_extension(&x, &o1, &p1).unwrap();
        let y2 = trivial_coeff_extension(&x, &o2, &p2).unwrap();
        let iso = trivial_extension_iso(&psi);
        assert!(xmod_morphism_defects(&y2, &y1, &Matrix::identity(dg), &iso).is_empty());
    }
}
