use super::{diff_norm, Elem, GroupCochain, GroupTwoRep, NerveElem};
use crate::numeric::{Jet, JetMat};

/// `(ω₀, ω₁, α, φ̂)` with `ω₀ ∈ C(H², V)` as a `(0,2,0)` cochain,
/// `ω₁ ∈ C(G², W)` as `(0,0,2)`, `α ∈ C(H × G, W)` as `(0,1,1)` and
/// `φ̂ ∈ C(G, V)` as a `(0,0,1)` cochain with target `V`.
#[derive(Clone, Debug)]
pub struct Gp2Cochains {
    pub omega0: GroupCochain,
    pub omega1: GroupCochain,
    pub alpha: GroupCochain,
    pub phihat: GroupCochain,
}

fn n0(h: &Elem) -> NerveElem {
    NerveElem { gs: Vec::new(), h: h.clone() }
}

impl Gp2Cochains {
    /// The semidirect data: all four maps vanish.
    pub fn zero(rep: &GroupTwoRep) -> Gp2Cochains {
        use super::Target;
        let (w, v) = (rep.dim_w, rep.dim_v);
        let zero = move |n: usize| {
            move |pt: &super::GroupPoint| {
                let like = super::cochain::point_like_plain(pt);
                JetMat::zeros(n, 1, &like)
            }
        };
        Gp2Cochains {
            omega0: GroupCochain::new(0, 2, 0, Target::V, zero(v)),
            omega1: GroupCochain::new(0, 0, 2, Target::W, zero(w)),
            alpha: GroupCochain::new(0, 1, 1, Target::W, zero(w)),
            phihat: GroupCochain::new(0, 0, 1, Target::V, zero(v)),
        }
    }

    fn w0(&self, a: &Elem, b: &Elem) -> JetMat {
        self.omega0.at(vec![n0(a), n0(b)], vec![])
    }
    fn w1(&self, a: &Elem, b: &Elem) -> JetMat {
        self.omega1.at(vec![], vec![a.clone(), b.clone()])
    }
    fn al(&self, h: &Elem, g: &Elem) -> JetMat {
        self.alpha.at(vec![n0(h)], vec![g.clone()])
    }
    fn ph(&self, g: &Elem) -> JetMat {
        self.phihat.at(vec![], vec![g.clone()])
    }
}

pub const GP2_EQUATIONS: [&str; 7] = ["i", "ii", "iii", "iv", "v", "vi", "vii"];

/// Largest residual of each of the seven extension equations over random
/// samples, in the order `i, …, vii`.
pub fn gp2cocycle_residuals(rep: &GroupTwoRep, c: &Gp2Cochains, samples: usize, seed: u64) -> Vec<(&'static str, f64)> {
    let x = &rep.xmod;
    let mut rng = crate::random::rng(seed);
    let mut worst = [0.0f64; 7];
    let like = Jet::scalar(0.0);
    let phi = rep.phi_mat(&like);
    for _ in 0..samples {
        let (h0, h1, h2) = (x.sample_h(&mut rng, 1.0), x.sample_h(&mut rng, 1.0), x.sample_h(&mut rng, 1.0));
        let (g0, g1, g2) = (x.sample_g(&mut rng, 1.0), x.sample_g(&mut rng, 1.0), x.sample_g(&mut rng, 1.0));
        let (ig1, ig2) = (x.incl(&g1), x.incl(&g2));
        let w0inv = |h: &Elem| rep.r0w(h).inverse();
        let eq1 = rep
            .r0v(&h0)
            .mul(&c.w0(&h1, &h2))
            .sub(&c.w0(&x.hmul(&h0, &h1), &h2))
            .add(&c.w0(&h0, &x.hmul(&h1, &h2)))
            .sub(&c.w0(&h0, &h1));
        let eq2 = rep
            .r0w(&x.incl(&g0))
            .mul(&c.w1(&g1, &g2))
            .sub(&c.w1(&x.gmul(&g0, &g1), &g2))
            .add(&c.w1(&g0, &x.gmul(&g1, &g2)))
            .sub(&c.w1(&g0, &g1));
        let eq3 = phi
            .mul(&c.w1(&g1, &g2))
            .sub(&c.w0(&ig1, &ig2))
            .sub(&rep.r0v(&ig1).mul(&c.ph(&g2)).sub(&c.ph(&x.gmul(&g1, &g2))).add(&c.ph(&g1)));
        let h12 = x.hmul(&h1, &h2);
        let eq4 = w0inv(&h12).mul(&rep.r1(&g0)).mul(&c.w0(&h1, &h2)).sub(
            &w0inv(&h2).mul(&c.al(&h1, &g0)).sub(&c.al(&h12, &g0)).add(&c.al(&h2, &x.right(&g0, &h1))),
        );
        let hinv = x.hinv(&h0);
        let rv_hinv = rep.r0v(&hinv);
        let eq5 = c
            .ph(&x.right(&g0, &h0))
            .sub(&rv_hinv.mul(&c.ph(&g0)))
            .add(&phi.mul(&c.al(&h0, &g0)))
            .sub(
                &rv_hinv
                    .mul(&c.w0(&x.incl(&g0), &h0))
                    .add(&c.w0(&hinv, &x.hmul(&x.incl(&g0), &h0)))
                    .sub(&c.w0(&hinv, &h0)),
            );
        let ri2 = w0inv(&ig2);
        let g2inv = x.ginv(&g2);
        let eq6 = ri2.mul(&rep.r1(&g1)).mul(&c.ph(&g2)).add(&c.al(&ig2, &g1)).sub(
            &ri2.mul(&c.w1(&g1, &g2)).add(&c.w1(&g2inv, &x.gmul(&g1, &g2))).sub(&c.w1(&g2inv, &g2)),
        );
        let g1h = x.right(&g1, &h0);
        let eq7 = w0inv(&h0).mul(&c.w1(&g1, &g2)).sub(&c.w1(&g1h, &x.right(&g2, &h0))).sub(
            &rep.r0w(&x.incl(&g1h)).mul(&c.al(&h0, &g2)).sub(&c.al(&h0, &x.gmul(&g1, &g2))).add(&c.al(&h0, &g1)),
        );
        for (k, e) in [eq1, eq2, eq3, eq4, eq5, eq6, eq7].iter().enumerate() {
            worst[k] = worst[k].max(e.max_abs_value());
        }
    }
    GP2_EQUATIONS.iter().copied().zip(worst).collect()
}

/// An arrow `(g, h; w, v)` of the semidirect VB-groupoid over `G ⋉ H ⇒ H`:
/// source `(h, v)`, target `(h·i(g), v + ρ₀⁰(h)φw)`.
#[derive(Clone, Debug)]
struct VbArrow {
    g: Elem,
    h: Elem,
    w: JetMat,
    v: JetMat,
}

/// Largest norm of the curvature `Ω_{(g₁,g₂,h)}(h, v)` of the canonical
/// representation up to homotopy, over random samples, including any
/// composability defect met along the way.
pub fn omega_curvature(rep: &GroupTwoRep, samples: usize, seed: u64) -> f64 {
    let x = &rep.xmod;
    let mut rng = crate::random::rng(seed);
    let like = Jet::scalar(0.0);
    let phi = rep.phi_mat(&like);
    let target = |a: &VbArrow| (x.hmul(&a.h, &x.incl(&a.g)), a.v.add(&rep.r0v(&a.h).mul(&phi).mul(&a.w)));
    let mut defect = 0.0f64;
    let mut compose = |b: &VbArrow, a: &VbArrow| -> VbArrow {
        // b after a
        let (th, tv) = target(a);
        defect = defect.max(diff_norm(&th, &b.h)).max(diff_norm(&tv, &b.v));
        VbArrow { g: x.gmul(&a.g, &b.g), h: a.h.clone(), w: a.w.add(&rep.r0w(&x.incl(&a.g)).mul(&b.w)), v: a.v.clone() }
    };
    let split = |g: &Elem, h: &Elem, v: &JetMat| VbArrow {
        g: g.clone(),
        h: h.clone(),
        w: JetMat::zeros(rep.dim_w, 1, &like),
        v: v.clone(),
    };
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let (g1, g2, h) = (x.sample_g(&mut rng, 1.0), x.sample_g(&mut rng, 1.0), x.sample_h(&mut rng, 1.0));
        let v = JetMat::from_f64(rep.dim_v, 1, &(0..rep.dim_v).map(|k| 0.3 + k as f64).collect::<Vec<_>>(), &like);
        let g21 = x.gmul(&g2, &g1);
        let hg2 = x.hmul(&h, &x.incl(&g2));
        let direct = split(&g21, &h, &v);
        let via = compose(&split(&g1, &hg2, &v), &split(&g2, &h, &v));
        let mut gap = diff_norm(&direct.g, &via.g);
        let diff = VbArrow { g: g21.clone(), h: h.clone(), w: direct.w.sub(&via.w), v: direct.v.sub(&via.v) };
        let zero_inv = VbArrow {
            g: x.ginv(&g21),
            h: x.hmul(&h, &x.incl(&g21)),
            w: JetMat::zeros(rep.dim_w, 1, &like),
            v: JetMat::zeros(rep.dim_v, 1, &like),
        };
        let omega = compose(&diff, &zero_inv);
        gap = gap.max(diff_norm(&omega.g, &(x.g_one)(&like)));
        gap = gap.max(omega.w.max_abs_value()).max(omega.v.max_abs_value());
        worst = worst.max(gap);
    }
    worst.max(defect)
}

/// `GL(φ)` with `φ = 0` on `W = V = R`, the zero cochains except
/// `α(diag(F, f); g) = (F − 1)² g`. This α is additive in `g`, vanishes on
/// `i(G)` and is killed by `φ`, but is not a cocycle in `h`.
pub fn perturbed_alpha_data() -> (GroupTwoRep, Gp2Cochains) {
    use super::Target;
    let rep = GroupTwoRep::tautological(&crate::lie2::TwoVectorSpace::zero(1, 1));
    let mut c = Gp2Cochains::zero(&rep);
    c.alpha = GroupCochain::new(0, 1, 1, Target::W, |pt| {
        let f = pt.gammas[0].h.get(0, 0);
        let d = f - &f.lift(1.0);
        let mut out = JetMat::zeros(1, 1, &f.zero_like());
        out.set(0, 0, &(&d * &d) * pt.fs[0].get(0, 0));
        out
    });
    (rep, c)
}
