use lie2coh::lattice::{
    h0_invariants, h1_der_inn, trivial_cohomology, trivial_total_complex, Component, Lattice, LatticeIndex, SignTable,
};
use lie2coh::lie2::{xmod_from_quadruple, CrossedModuleAlg, TwoVectorSpace};
use lie2coh::liealg::LieAlgebra;
use lie2coh::numeric::{int, Matrix};
use lie2coh::random;
use lie2coh::tworep::{adjoint_rep, TwoRep};

fn line_xmod(mu: i64) -> CrossedModuleAlg {
    CrossedModuleAlg::new(LieAlgebra::abelian(1), LieAlgebra::abelian(1), Matrix::from_i64(&[&[mu]]), vec![Matrix::zeros(1, 1)])
}

/// All dimensions one, μ = 0, action zero, with the given φ and ρ₁.
fn ones(phi: i64, rho1: i64) -> TwoRep {
    let mut r = TwoRep::trivial(line_xmod(0), TwoVectorSpace::new(Matrix::from_i64(&[&[phi]])));
    r.rho1 = vec![Matrix::from_i64(&[&[rho1]])];
    r
}

fn h_only(h: LieAlgebra, v: usize, rho0v: Vec<Matrix>) -> TwoRep {
    let dh = h.dim();
    let x = CrossedModuleAlg::new(LieAlgebra::abelian(0), h, Matrix::zeros(dh, 0), vec![Matrix::zeros(0, 0); dh]);
    let mut r = TwoRep::trivial(x, TwoVectorSpace::zero(0, v));
    r.rho0v = rho0v;
    r
}

fn rich_contexts() -> Vec<TwoRep> {
    let mut rng = random::rng(3);
    let h = LieAlgebra::aff1();
    let rho = random::abelian_rep(&mut rng, &h, 1, &[0, 1]);
    let x = xmod_from_quadruple(&h, &[0, 1], 1, &rho).unwrap();
    let mut out = vec![adjoint_rep(&x)];
    for _ in 0..3 {
        out.push(random::two_rep(&mut rng, &x, 2));
    }
    out
}

#[test]
fn cochain_dims() {
    let lat = Lattice::new(ones(0, 0), 3).unwrap();
    assert_eq!(lat.cochain_dim(LatticeIndex::new(1, 1, 0)), 2);
    assert_eq!(lat.cochain_dim(LatticeIndex::new(0, 2, 0)), 0);
    assert_eq!(lat.cochain_dim(LatticeIndex::new(0, 0, 0)), 1);
    assert_eq!(lat.cochain_dim(LatticeIndex::new(0, 0, 2)), 0);
}

#[test]
fn component_examples() {
    let lat = Lattice::new(ones(0, 5), 3).unwrap();
    let d1 = lat.component(Component::Delta1, LatticeIndex::new(0, 0, 0)).unwrap();
    assert_eq!(d1, Matrix::from_i64(&[&[5]]));

    let lat = Lattice::new(ones(3, 0), 3).unwrap();
    let dk = lat.component(Component::DeltaK(1), LatticeIndex::new(0, 0, 1)).unwrap();
    // g₁ basis is (x⁰, y): only the x⁰ slot sees φ
    assert_eq!(dk, Matrix::from_i64(&[&[3], &[0]]));
    let dk = lat.component(Component::DeltaK(1), LatticeIndex::new(1, 0, 1)).unwrap();
    assert_eq!(dk, Matrix::from_i64(&[&[3], &[0], &[0]]));

    let x = CrossedModuleAlg::new(LieAlgebra::abelian(0), LieAlgebra::abelian(2), Matrix::zeros(2, 0), vec![Matrix::zeros(0, 0); 2]);
    let lat = Lattice::new(TwoRep::trivial(x, TwoVectorSpace::zero(0, 1)), 3).unwrap();
    for q in 0..3 {
        assert!(lat.component(Component::Partial, LatticeIndex::new(0, q, 0)).unwrap().is_zero());
    }
}

#[test]
fn delta_order_is_checked() {
    let lat = Lattice::new(ones(1, 0), 3).unwrap();
    assert!(lat.component(Component::DeltaK(2), LatticeIndex::new(0, 0, 1)).is_err());
    assert!(lat.component(Component::DeltaK(1), LatticeIndex::new(0, 0, 0)).is_err());
}

#[test]
fn invalid_context_is_rejected() {
    let mut r = ones(1, 0);
    r.rho1 = vec![Matrix::from_i64(&[&[1]])];
    assert!(Lattice::new(r, 2).is_err());
}

#[test]
fn nabla_in_degree_zero() {
    for rep in rich_contexts() {
        let lat = Lattice::new(rep.clone(), 3).unwrap();
        let n0 = lat.nabla(0).unwrap();
        for &(i, off, d) in &lat.blocks(1) {
            let block = n0.block(off, 0, d, rep.dim_v());
            match (i.p, i.q, i.r) {
                (0, 1, 0) => assert_eq!(block, lat.component(Component::DeltaR, LatticeIndex::new(0, 0, 0)).unwrap()),
                (0, 0, 1) => assert_eq!(block, lat.component(Component::Delta1, LatticeIndex::new(0, 0, 0)).unwrap()),
                (1, 0, 0) => assert!(block.is_zero()),
                _ => unreachable!(),
            }
        }
    }
}

#[test]
fn nabla_vanishes_for_trivial_abelian() {
    let rep = h_only(LieAlgebra::abelian(2), 2, vec![Matrix::zeros(2, 2); 2]);
    let lat = Lattice::new(rep, 5).unwrap();
    assert!(lat.nabla(0).unwrap().is_zero());
    // only ∂ survives: Σ(−1)^k id over p+2 equal faces
    for n in 0..4 {
        for i in LatticeIndex::of_degree(n) {
            assert!(lat.component(Component::DeltaR, i).unwrap().is_zero());
            assert!(lat.component(Component::Delta1, i).unwrap().is_zero());
            let d = lat.component(Component::Partial, i).unwrap();
            if i.p % 2 == 0 {
                assert!(d.is_zero());
            } else {
                assert_eq!(d, Matrix::identity(lat.cochain_dim(i)));
            }
        }
    }
    let dims: Vec<usize> = (0..4).map(|n| lat.total_cohomology(n).unwrap().0).collect();
    assert_eq!(dims, vec![2, 4, 2, 0]);
}

#[test]
fn nabla_one_matches_lambda_listing() {
    // ∇(λ₀, λ₁, v): entries at (0,2,0), (1,1,0), (0,1,1), (2,0,0), (1,0,1), (0,0,2)
    for rep in rich_contexts() {
        let lat = Lattice::new(rep, 4).unwrap();
        let c = |k, p, q, r| lat.component(k, LatticeIndex::new(p, q, r)).unwrap();
        let n1 = lat.nabla(1).unwrap();
        let src: Vec<_> = lat.blocks(1);
        let dst: Vec<_> = lat.blocks(2);
        let at = |t: (usize, usize, usize), s: (usize, usize, usize)| {
            let (_, r0, rd) = *dst.iter().find(|b| (b.0.p, b.0.q, b.0.r) == t).unwrap();
            let (_, c0, cd) = *src.iter().find(|b| (b.0.p, b.0.q, b.0.r) == s).unwrap();
            n1.block(r0, c0, rd, cd)
        };
        let (l0, l1, v) = ((0, 1, 0), (0, 0, 1), (1, 0, 0));
        assert_eq!(at((0, 2, 0), l0), c(Component::DeltaR, 0, 1, 0));
        assert_eq!(at((1, 1, 0), l0), c(Component::Partial, 0, 1, 0).neg());
        assert_eq!(at((1, 1, 0), v), c(Component::DeltaR, 1, 0, 0));
        assert_eq!(at((1, 1, 0), l1), c(Component::DeltaK(1), 0, 0, 1).neg());
        assert_eq!(at((0, 1, 1), l0), c(Component::Delta1, 0, 1, 0).neg());
        assert_eq!(at((0, 1, 1), l1), c(Component::DeltaR, 0, 0, 1));
        assert_eq!(at((2, 0, 0), v), Matrix::identity(lat.cochain_dim(LatticeIndex::new(1, 0, 0))));
        assert_eq!(at((1, 0, 1), v), c(Component::Delta1, 1, 0, 0));
        assert!(at((1, 0, 1), l1).is_zero());
        assert_eq!(at((0, 0, 2), l1), c(Component::Delta1, 0, 0, 1));
    }
}

#[test]
fn nabla_squares_to_zero_on_random_contexts() {
    let mut rng = random::rng(2024);
    for trial in 0..200 {
        let rep = random::context(&mut rng, 2);
        let lat = Lattice::for_degree(rep, 3).unwrap();
        for n in 0..=3 {
            let d = lat.nabla_square_defects(n).unwrap();
            assert!(d.is_empty(), "trial {trial}, degree {n}: {d:?}");
        }
    }
}

#[test]
fn nabla_squares_to_zero_on_rich_contexts() {
    for rep in rich_contexts() {
        let lat = Lattice::for_degree(rep, 3).unwrap();
        for n in 0..=3 {
            assert!(lat.nabla_square_defects(n).unwrap().is_empty());
        }
    }
}

#[test]
fn corrupted_sign_table_breaks_nabla_square() {
    let rep = rich_contexts().remove(0);
    for (c, q, r) in [(Component::Delta1, 0, 0), (Component::Partial, 1, 0), (Component::DeltaK(1), 0, 1), (Component::DeltaK(2), 0, 0)] {
        let lat = Lattice::new(rep.clone(), 5).unwrap().with_signs(SignTable::default().corrupted(c, q, r));
        let broken = (0..=2).any(|n| !lat.nabla_square_defects(n).unwrap().is_empty());
        assert!(broken, "flipping {} at parity ({q},{r}) went unnoticed", c.name());
    }
}

#[test]
fn difference_maps_compose_to_zero() {
    // Σ_{i=0}^k Δ_{k−i}Δ_i = 0 with Δ₀ = ∂
    let d = |lat: &Lattice, k: usize, i: LatticeIndex| -> Matrix {
        let kind = if k == 0 { Component::Partial } else { Component::DeltaK(k) };
        lat.component(kind, i).unwrap()
    };
    for rep in rich_contexts() {
        let lat = Lattice::new(rep, 5).unwrap();
        for k in 1..=2 {
            for p in 0..2 {
                for q in 0..2 {
                    for r in k..=2 {
                        let i = LatticeIndex::new(p, q, r);
                        let mut acc: Option<Matrix> = None;
                        for j in 0..=k {
                            let first = d(&lat, j, i);
                            let mid = if j == 0 { Component::Partial } else { Component::DeltaK(j) }.target(i).unwrap();
                            let term = d(&lat, k - j, mid).mul(&first);
                            acc = Some(match acc {
                                None => term,
                                Some(a) => a.add(&term),
                            });
                        }
                        assert!(acc.unwrap().is_zero(), "k={k} at {i:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn star_top_relation() {
    // δ^{(r)}∂ − ∂δ^{(r)} = δ_(1)Δ + Δδ_(1) on C^{p,q}_2
    for rep in rich_contexts() {
        let lat = Lattice::new(rep, 5).unwrap();
        for p in 0..2 {
            for q in 0..2 {
                let i = LatticeIndex::new(p, q, 2);
                let c = |k, i| lat.component(k, i).unwrap();
                let lhs = c(Component::DeltaR, LatticeIndex::new(p + 1, q, 2))
                    .mul(&c(Component::Partial, i))
                    .sub(&c(Component::Partial, LatticeIndex::new(p, q + 1, 2)).mul(&c(Component::DeltaR, i)));
                let rhs = c(Component::Delta1, LatticeIndex::new(p + 1, q + 1, 1))
                    .mul(&c(Component::DeltaK(1), i))
                    .add(&c(Component::DeltaK(1), LatticeIndex::new(p, q, 3)).mul(&c(Component::Delta1, i)));
                assert_eq!(lhs, rhs, "at {i:?}");
            }
        }
    }
}

#[test]
fn low_degree_cohomology_examples() {
    let rep = h_only(LieAlgebra::abelian(1), 2, vec![Matrix::zeros(2, 2)]);
    let lat = Lattice::new(rep.clone(), 3).unwrap();
    assert_eq!(lat.total_cohomology(0).unwrap().0, 2);
    assert_eq!(h0_invariants(&rep), 2);

    let rep = h_only(LieAlgebra::abelian(1), 1, vec![Matrix::from_i64(&[&[1]])]);
    let lat = Lattice::new(rep.clone(), 3).unwrap();
    assert_eq!(lat.total_cohomology(0).unwrap().0, 0);
    assert_eq!(h0_invariants(&rep), 0);

    let rep = h_only(LieAlgebra::abelian(1), 1, vec![Matrix::zeros(1, 1)]);
    let lat = Lattice::new(rep.clone(), 3).unwrap();
    assert_eq!(lat.total_cohomology(1).unwrap().0, 1);
    assert_eq!(h1_der_inn(&rep), (1, 0, 1));

    let rep = TwoRep::trivial(line_xmod(1), TwoVectorSpace::zero(0, 0));
    assert_eq!(h1_der_inn(&rep), (0, 0, 0));
}

#[test]
fn low_degree_interpretations_agree() {
    let mut rng = random::rng(99);
    let mut reps = rich_contexts();
    for _ in 0..40 {
        reps.push(random::context(&mut rng, 2));
    }
    for rep in reps {
        let lat = Lattice::new(rep.clone(), 3).unwrap();
        assert_eq!(lat.total_cohomology(0).unwrap().0, h0_invariants(&rep));
        assert_eq!(lat.total_cohomology(1).unwrap().0, h1_der_inn(&rep).2);
    }
}

#[test]
fn cohomology_representatives_are_cocycles() {
    for rep in rich_contexts() {
        let lat = Lattice::new(rep, 4).unwrap();
        let (dim, reps) = lat.total_cohomology(2).unwrap();
        assert_eq!(dim, reps.len());
        let d = lat.nabla(2).unwrap();
        for v in &reps {
            assert!(d.mul_vec(v).iter().all(|c| *c == int(0)));
        }
        let fc = lat.total_complex(3).unwrap();
        assert_eq!(fc.cohomology_dim(2), dim);
    }
}

#[test]
fn trivial_complex() {
    let h_abelian = |n: usize| {
        CrossedModuleAlg::new(LieAlgebra::abelian(0), LieAlgebra::abelian(n), Matrix::zeros(n, 0), vec![Matrix::zeros(0, 0); n])
    };
    assert_eq!(trivial_cohomology(&h_abelian(2), 2), 1);
    assert_eq!(trivial_cohomology(&h_abelian(1), 2), 0);
    assert_eq!(trivial_cohomology(&h_abelian(3), 2), 3);

    let mut rng = random::rng(5);
    for _ in 0..30 {
        let x = random::xmod(&mut rng, 2);
        for n in 1..4 {
            let d = trivial_total_complex(&x, n).mul(&trivial_total_complex(&x, n - 1));
            assert!(d.is_zero());
        }
    }
}

#[test]
fn zero_g_reduces_to_lie_algebra_cohomology() {
    use lie2coh::liealg::{ce_differential, Representation};
    let mut rng = random::rng(41);
    for _ in 0..10 {
        let dh = 2 + rng_bit(&mut rng);
        let h = random::lie_algebra(&mut rng, dh);
        let v = 1 + rng_bit(&mut rng);
        let action = random::representation(&mut rng, &h, v);
        let rep = h_only(h.clone(), v, action.clone());
        let lat = Lattice::new(rep, 5).unwrap();
        let ce = Representation::new(h.clone(), v, action);
        let rank = |q: usize| ce_differential(&ce, q).rank();
        for n in 0..4 {
            let dim = lie2coh::liealg::ce_dim(h.dim(), n, v);
            let expected = dim - rank(n) - if n == 0 { 0 } else { rank(n - 1) };
            assert_eq!(lat.total_cohomology(n).unwrap().0, expected, "degree {n}");
        }
    }
}

fn rng_bit(rng: &mut random::TestRng) -> usize {
    use rand::Rng;
    rng.gen_range(0..2)
}
