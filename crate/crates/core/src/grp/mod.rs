//! Matrix Lie 2-groups: the GL(φ) crossed module, sampled axiom checks,
//! pointwise group cochain operators and van Est maps. Everything is
//! evaluated on jets so derivatives are exact to rounding.

mod cochain;
mod cocycle;
mod relations;
mod vanest;

pub use cochain::{
    apply, group_cochain_diff, polynomial_cochain, DiffKind, GroupCochain, GroupPoint, NerveElem,
    Target,
};
pub use cocycle::{gp2cocycle_residuals, omega_curvature, perturbed_alpha_data, Gp2Cochains, GP2_EQUATIONS};
pub use relations::{cochain_gap, cochain_size, relation_residuals, SAMPLE_SCALE};
pub use vanest::{heisenberg_data, van_est_phi, van_est_r, Direction};

use crate::lie2::{gl_phi, CrossedModuleAlg, GlPhi, TwoVectorSpace};
use crate::liealg::LieAlgebra;
use crate::numeric::{from_f64, to_f64, Jet, JetMat, Matrix, Rational};
use rand::Rng;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub type Elem = JetMat;

type Un = Arc<dyn Fn(&Elem) -> Elem + Send + Sync>;
type Bin = Arc<dyn Fn(&Elem, &Elem) -> Elem + Send + Sync>;
type Unit = Arc<dyn Fn(&Jet) -> Elem + Send + Sync>;
type Exp = Arc<dyn Fn(&[Jet], &Jet) -> Elem + Send + Sync>;
type Chart = Arc<dyn Fn(&Elem) -> Vec<Jet> + Send + Sync>;

#[derive(Debug, Error, PartialEq)]
pub enum GrpError {
    #[error("arity mismatch: expected {expected}, got {got}")]
    Arity { expected: String, got: String },
    #[error("operator needs a nonempty {0} slot")]
    ArityUnderflow(&'static str),
    #[error("{0} derivatives exceed the jet order bound")]
    DegreeBound(usize),
    #[error("operator {0} is not defined on this signature")]
    Signature(&'static str),
}

/// A crossed module of matrix Lie groups `i: G → H` with right action
/// `(g, h) ↦ g^h`. Elements are jet matrices, so every structure map can be
/// differentiated. `g_exp`/`h_exp` take coordinates in fixed bases of the Lie
/// algebras; the charts are linear, vanish at the unit and invert the
/// exponential to first order.
#[derive(Clone)]
pub struct GroupXMod {
    pub name: String,
    pub dim_g: usize,
    pub dim_h: usize,
    pub g_one: Unit,
    pub g_mul: Bin,
    pub g_inv: Un,
    pub h_one: Unit,
    pub h_mul: Bin,
    pub h_inv: Un,
    pub i: Un,
    pub act: Bin,
    pub g_exp: Exp,
    pub h_exp: Exp,
    pub g_chart: Chart,
    pub h_chart: Chart,
}

impl fmt::Debug for GroupXMod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupXMod({}, dim g = {}, dim h = {})", self.name, self.dim_g, self.dim_h)
    }
}

impl GroupXMod {
    pub fn gmul(&self, a: &Elem, b: &Elem) -> Elem {
        (self.g_mul)(a, b)
    }
    pub fn ginv(&self, a: &Elem) -> Elem {
        (self.g_inv)(a)
    }
    pub fn hmul(&self, a: &Elem, b: &Elem) -> Elem {
        (self.h_mul)(a, b)
    }
    pub fn hinv(&self, a: &Elem) -> Elem {
        (self.h_inv)(a)
    }
    pub fn incl(&self, g: &Elem) -> Elem {
        (self.i)(g)
    }
    /// `g^h`.
    pub fn right(&self, g: &Elem, h: &Elem) -> Elem {
        (self.act)(g, h)
    }
    pub fn hprod(&self, hs: &[Elem], like: &Jet) -> Elem {
        hs.iter().fold((self.h_one)(like), |acc, h| self.hmul(&acc, h))
    }

    pub fn sample_g<R: Rng>(&self, rng: &mut R, scale: f64) -> Elem {
        let like = Jet::scalar(0.0);
        let c: Vec<Jet> = (0..self.dim_g).map(|_| like.lift(rng.gen_range(-scale..scale))).collect();
        (self.g_exp)(&c, &like)
    }

    /// `exp(y)·i(g)` for random `y`, `g`, which need not lie on a one-parameter subgroup.
    pub fn sample_h<R: Rng>(&self, rng: &mut R, scale: f64) -> Elem {
        let like = Jet::scalar(0.0);
        let c: Vec<Jet> = (0..self.dim_h).map(|_| like.lift(rng.gen_range(-scale..scale))).collect();
        let g = self.sample_g(rng, scale);
        self.hmul(&(self.h_exp)(&c, &like), &self.incl(&g))
    }

    /// The same data with the action replaced by `g^h := g`.
    pub fn with_trivial_action(&self) -> GroupXMod {
        let mut x = self.clone();
        x.name = format!("{} (trivial action)", self.name);
        x.act = Arc::new(|g, _| g.clone());
        x
    }
}

/// A 2-representation of a group crossed module on `φ: W → V`.
#[derive(Clone)]
pub struct GroupTwoRep {
    pub xmod: GroupXMod,
    pub dim_w: usize,
    pub dim_v: usize,
    /// `dim V × dim W`, row-major.
    pub phi: Vec<f64>,
    pub rho0w: Un,
    pub rho0v: Un,
    pub rho1: Un,
}

impl fmt::Debug for GroupTwoRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTwoRep({:?}, W = {}, V = {})", self.xmod, self.dim_w, self.dim_v)
    }
}

impl GroupTwoRep {
    pub fn phi_mat(&self, like: &Jet) -> JetMat {
        JetMat::from_f64(self.dim_v, self.dim_w, &self.phi, like)
    }
    pub fn r0w(&self, h: &Elem) -> JetMat {
        (self.rho0w)(h)
    }
    pub fn r0v(&self, h: &Elem) -> JetMat {
        (self.rho0v)(h)
    }
    pub fn r1(&self, g: &Elem) -> JetMat {
        (self.rho1)(g)
    }
    pub fn dim(&self, t: Target) -> usize {
        match t {
            Target::W => self.dim_w,
            Target::V => self.dim_v,
        }
    }

    /// The tautological representation of `GL(φ)` on `W → V`.
    pub fn tautological(space: &TwoVectorSpace) -> GroupTwoRep {
        let (w, v) = (space.dim_w, space.dim_v);
        GroupTwoRep {
            xmod: glphi_group(space),
            dim_w: w,
            dim_v: v,
            phi: phi_f64(space),
            rho0w: Arc::new(move |h| sub_block(h, 0, 0, w, w)),
            rho0v: Arc::new(move |h| sub_block(h, w, w, v, v)),
            rho1: Arc::new(|g| g.clone()),
        }
    }

    /// Trivial representation `(ρ₁, ρ₀) = (0, I)` with `φ = 0`.
    pub fn trivial(xmod: GroupXMod, dim_w: usize, dim_v: usize) -> GroupTwoRep {
        GroupTwoRep {
            xmod,
            dim_w,
            dim_v,
            phi: vec![0.0; dim_v * dim_w],
            rho0w: Arc::new(move |h| JetMat::identity(dim_w, &h.like())),
            rho0v: Arc::new(move |h| JetMat::identity(dim_v, &h.like())),
            rho1: Arc::new(move |g| JetMat::zeros(dim_w, dim_v, &g.like())),
        }
    }
}

fn phi_f64(space: &TwoVectorSpace) -> Vec<f64> {
    (0..space.dim_v).flat_map(|i| (0..space.dim_w).map(move |j| (i, j))).map(|(i, j)| to_f64(&space.phi[(i, j)])).collect()
}

pub fn sub_block(m: &JetMat, r0: usize, c0: usize, rows: usize, cols: usize) -> JetMat {
    let like = m.like();
    let mut out = JetMat::zeros(rows, cols, &like);
    for i in 0..rows {
        for j in 0..cols {
            out.set(i, j, m.get(r0 + i, c0 + j).clone());
        }
    }
    out
}

pub fn block_diag(a: &JetMat, b: &JetMat) -> JetMat {
    let like = if a.data.is_empty() { b.like() } else { a.like() };
    let n = a.rows + b.rows;
    let mut out = JetMat::zeros(n, n, &like);
    for i in 0..a.rows {
        for j in 0..a.cols {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows {
        for j in 0..b.cols {
            out.set(a.rows + i, a.rows + j, b.get(i, j).clone());
        }
    }
    out
}

/// Entrywise lift of a rational matrix to constant jets.
pub fn lift_matrix(m: &Matrix, like: &Jet) -> JetMat {
    let vals: Vec<f64> = (0..m.rows()).flat_map(|i| m.row(i).iter().map(to_f64).collect::<Vec<_>>()).collect();
    JetMat::from_f64(m.rows(), m.cols(), &vals, like)
}

/// `exp_{GL(φ)₁}(A) = A Σ_{n<N} (φA)^n/(n+1)!`.
pub fn glphi1_exp(a: &JetMat, phi: &JetMat, terms: usize) -> JetMat {
    assert!(terms >= 1, "at least one term");
    let pa = phi.mul(a);
    let mut pw = JetMat::identity(pa.rows, &a.like());
    let mut acc = pw.clone();
    for n in 1..terms {
        pw = pw.mul(&pa).scale(1.0 / (n + 1) as f64);
        acc = acc.add(&pw);
    }
    a.mul(&acc)
}

/// `ΔA = (I + Aφ, I + φA)`.
pub fn glphi_delta(a: &JetMat, phi: &JetMat) -> (JetMat, JetMat) {
    let like = a.like();
    (JetMat::identity(a.rows, &like).add(&a.mul(phi)), JetMat::identity(a.cols, &like).add(&phi.mul(a)))
}

/// `GL(φ)₁ → GL(φ)₀` with `GL(φ)₁ = Hom(V, W)` under `A₁ ⊙ A₂ = A₁ + A₂ + A₁φA₂`
/// and `GL(φ)₀` realized as block-diagonal matrices `diag(F, f)`.
/// Lie algebra coordinates are those of `gl_phi`.
pub fn glphi_group(space: &TwoVectorSpace) -> GroupXMod {
    let gl = gl_phi(space);
    let (w, v) = (space.dim_w, space.dim_v);
    let phi = phi_f64(space);
    let basis0 = basis0_f64(&gl);
    let chart0 = chart0_f64(&gl);
    let d0 = basis0.len();
    let pm = move |like: &Jet| JetMat::from_f64(v, w, &phi, like);
    let (pm1, pm2, pm3, pm4) = (pm.clone(), pm.clone(), pm.clone(), pm.clone());
    let b0 = basis0.clone();
    GroupXMod {
        name: format!("GL(φ), dim W = {w}, dim V = {v}"),
        dim_g: w * v,
        dim_h: d0,
        g_one: Arc::new(move |like| JetMat::zeros(w, v, like)),
        g_mul: Arc::new(move |a, b| {
            let p = pm1(&a.like());
            a.add(b).add(&a.mul(&p).mul(b))
        }),
        g_inv: Arc::new(move |a| {
            let like = a.like();
            let p = pm2(&like);
            a.mul(&JetMat::identity(v, &like).add(&p.mul(a)).inverse()).neg()
        }),
        h_one: Arc::new(move |like| JetMat::identity(w + v, like)),
        h_mul: Arc::new(|a, b| a.mul(b)),
        h_inv: Arc::new(|a| a.inverse()),
        i: Arc::new(move |a| {
            let (f_w, f_v) = glphi_delta(a, &pm3(&a.like()));
            block_diag(&f_w, &f_v)
        }),
        act: Arc::new(move |a, h| {
            let f_w = sub_block(h, 0, 0, w, w);
            let f_v = sub_block(h, w, w, v, v);
            f_w.inverse().mul(a).mul(&f_v)
        }),
        g_exp: Arc::new(move |c, like| {
            let mut a = JetMat::zeros(w, v, like);
            a.data = c.to_vec();
            glphi1_exp(&a, &pm4(like), 30)
        }),
        h_exp: Arc::new(move |c, like| {
            let mut m = JetMat::zeros(w + v, w + v, like);
            for (k, b) in b0.iter().enumerate() {
                m = m.add(&JetMat::from_f64(w + v, w + v, b, like).scale_jet(&c[k]));
            }
            m.exp(30)
        }),
        g_chart: Arc::new(|a| a.data.clone()),
        h_chart: Arc::new(move |m| {
            let like = m.like();
            let n = (w + v) * (w + v);
            let mut flat = m.data.clone();
            for k in 0..(w + v) {
                flat[k * (w + v) + k] = &flat[k * (w + v) + k] - &like.lift(1.0);
            }
            (0..d0)
                .map(|r| {
                    (0..n).fold(like.zero_like(), |acc, k| {
                        let c = chart0[r * n + k];
                        if c == 0.0 {
                            acc
                        } else {
                            &acc + &flat[k].scale(c)
                        }
                    })
                })
                .collect()
        }),
    }
}

/// Basis of `gl(φ)₀` as flattened block-diagonal matrices.
fn basis0_f64(gl: &GlPhi) -> Vec<Vec<f64>> {
    let (w, v) = (gl.space.dim_w, gl.space.dim_v);
    let n = w + v;
    gl.basis0
        .iter()
        .map(|(fw, fv)| {
            let mut m = vec![0.0; n * n];
            for i in 0..w {
                for j in 0..w {
                    m[i * n + j] = to_f64(&fw[(i, j)]);
                }
            }
            for i in 0..v {
                for j in 0..v {
                    m[(w + i) * n + w + j] = to_f64(&fv[(i, j)]);
                }
            }
            m
        })
        .collect()
}

/// Left inverse `(BᵀB)⁻¹Bᵀ` of the basis matrix, computed exactly.
fn chart0_f64(gl: &GlPhi) -> Vec<f64> {
    let basis = basis0_f64(gl);
    let d0 = basis.len();
    let n = (gl.space.dim_w + gl.space.dim_v).pow(2);
    if d0 == 0 {
        return Vec::new();
    }
    let cols: Vec<Vec<Rational>> = basis.iter().map(|b| b.iter().map(|&x| from_f64(x)).collect()).collect();
    let b = Matrix::from_cols(n, &cols);
    let bt = b.transpose();
    let left = bt.mul(&b).inverse().expect("basis of gl(φ)₀ is independent").mul(&bt);
    (0..d0).flat_map(|r| left.row(r).iter().map(to_f64).collect::<Vec<_>>()).collect()
}

/// Abelian crossed module `i = μ: R^{dg} → R^{dh}` with trivial action.
/// `mu` is `dh × dg`. When `dg = 0` the group `G` is the trivial group,
/// stored as the single matrix `[0]`.
pub fn abelian_group_xmod(dg: usize, dh: usize, mu: Vec<f64>) -> GroupXMod {
    assert_eq!(mu.len(), dg * dh);
    let gdim = dg.max(1);
    let zero_g = move |like: &Jet| JetMat::zeros(gdim, 1, like);
    let (z1, z2) = (zero_g, zero_g);
    GroupXMod {
        name: format!("abelian R^{dg} → R^{dh}"),
        dim_g: dg,
        dim_h: dh,
        g_one: Arc::new(zero_g),
        g_mul: Arc::new(|a, b| a.add(b)),
        g_inv: Arc::new(|a| a.neg()),
        h_one: Arc::new(move |like| JetMat::zeros(dh, 1, like)),
        h_mul: Arc::new(|a, b| a.add(b)),
        h_inv: Arc::new(|a| a.neg()),
        i: Arc::new(move |g| {
            let like = g.like();
            if dg == 0 {
                JetMat::zeros(dh, 1, &like)
            } else {
                JetMat::from_f64(dh, dg, &mu, &like).mul(g)
            }
        }),
        act: Arc::new(|g, _| g.clone()),
        g_exp: Arc::new(move |c, like| {
            if dg == 0 {
                z1(like)
            } else {
                let mut m = z2(like);
                m.data = c.to_vec();
                m
            }
        }),
        h_exp: Arc::new(move |c, like| {
            let mut m = JetMat::zeros(dh, 1, like);
            m.data = c.to_vec();
            m
        }),
        g_chart: Arc::new(move |g| if dg == 0 { Vec::new() } else { g.data.clone() }),
        h_chart: Arc::new(|h| h.data.clone()),
    }
}

/// Maximal residuals of the crossed-module axioms over random samples.
#[derive(Clone, Debug)]
pub struct SampledReport {
    pub checks: Vec<(String, f64)>,
    pub tolerance: f64,
}

impl SampledReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(|(_, r)| *r <= self.tolerance)
    }
    pub fn residual(&self, name: &str) -> Option<f64> {
        self.checks.iter().find(|(n, _)| n == name).map(|(_, r)| *r)
    }
    pub fn failing(&self) -> Vec<&str> {
        self.checks.iter().filter(|(_, r)| *r > self.tolerance).map(|(n, _)| n.as_str()).collect()
    }
}

pub(crate) fn diff_norm(a: &JetMat, b: &JetMat) -> f64 {
    a.sub(b).max_abs_value()
}

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

pub fn group_xmod_validate_sampled(gx: &GroupXMod, samples: usize, seed: u64) -> SampledReport {
    let mut rng = crate::random::rng(seed);
    let names = [
        "g associativity",
        "g inverse",
        "h associativity",
        "h inverse",
        "i homomorphism",
        "action homomorphism",
        "right action",
        "equivariance",
        "peiffer",
    ];
    let mut worst = vec![0.0f64; names.len()];
    let like = Jet::scalar(0.0);
    for _ in 0..samples {
        let (g1, g2, g3) = (gx.sample_g(&mut rng, 1.0), gx.sample_g(&mut rng, 1.0), gx.sample_g(&mut rng, 1.0));
        let (h1, h2, h3) = (gx.sample_h(&mut rng, 1.0), gx.sample_h(&mut rng, 1.0), gx.sample_h(&mut rng, 1.0));
        let res = [
            diff_norm(&gx.gmul(&gx.gmul(&g1, &g2), &g3), &gx.gmul(&g1, &gx.gmul(&g2, &g3))),
            diff_norm(&gx.gmul(&g1, &gx.ginv(&g1)), &(gx.g_one)(&like)),
            diff_norm(&gx.hmul(&gx.hmul(&h1, &h2), &h3), &gx.hmul(&h1, &gx.hmul(&h2, &h3))),
            diff_norm(&gx.hmul(&h1, &gx.hinv(&h1)), &(gx.h_one)(&like)),
            diff_norm(&gx.incl(&gx.gmul(&g1, &g2)), &gx.hmul(&gx.incl(&g1), &gx.incl(&g2))),
            diff_norm(&gx.right(&gx.gmul(&g1, &g2), &h1), &gx.gmul(&gx.right(&g1, &h1), &gx.right(&g2, &h1))),
            diff_norm(&gx.right(&g1, &gx.hmul(&h1, &h2)), &gx.right(&gx.right(&g1, &h1), &h2)),
            diff_norm(&gx.incl(&gx.right(&g1, &h1)), &gx.hprod(&[gx.hinv(&h1), gx.incl(&g1), h1.clone()], &like)),
            diff_norm(&gx.right(&g1, &gx.incl(&g2)), &gx.gmul(&gx.gmul(&gx.ginv(&g2), &g1), &g2)),
        ];
        for (w, r) in worst.iter_mut().zip(res) {
            *w = w.max(r);
        }
    }
    SampledReport {
        checks: names.iter().map(|s| s.to_string()).zip(worst).collect(),
        tolerance: DEFAULT_TOLERANCE,
    }
}

/// Structure constants of the Lie 2-algebra of a group crossed module,
/// read off from Taylor coefficients of commutators and conjugations.
#[derive(Clone, Debug)]
pub struct ExtractedXMod {
    pub dim_g: usize,
    pub dim_h: usize,
    /// `bracket_g[i][j]` is `[e_i, e_j]` in coordinates.
    pub bracket_g: Vec<Vec<Vec<f64>>>,
    pub bracket_h: Vec<Vec<Vec<f64>>>,
    /// `mu[k]` is `μ(e_k)`.
    pub mu: Vec<Vec<f64>>,
    /// `action[i][k]` is `L_{e_i} e_k`.
    pub action: Vec<Vec<Vec<f64>>>,
}

fn unit_coords(n: usize, k: usize, t: &Jet) -> Vec<Jet> {
    (0..n).map(|i| if i == k { t.clone() } else { t.zero_like() }).collect()
}

fn st_coeff(v: &[Jet]) -> Vec<f64> {
    v.iter().map(|j| j.coeff(&[1, 1])).collect()
}

/// Nearest rational with denominator at most 1000, if within `1e-9`.
pub fn rationalize(x: f64) -> Rational {
    for d in 1..=1000i64 {
        let n = (x * d as f64).round();
        if (n / d as f64 - x).abs() < 1e-9 {
            return crate::numeric::frac(n as i64, d);
        }
    }
    from_f64(x)
}

pub fn lie_functor_extract(gx: &GroupXMod) -> ExtractedXMod {
    let s = Jet::variable(0, 0.0, 2, 2);
    let t = Jet::variable(1, 0.0, 2, 2);
    let (dg, dh) = (gx.dim_g, gx.dim_h);
    let gexp = |k: usize, v: &Jet| (gx.g_exp)(&unit_coords(dg, k, v), v);
    let hexp = |k: usize, v: &Jet| (gx.h_exp)(&unit_coords(dh, k, v), v);
    let bracket_g = (0..dg)
        .map(|i| {
            (0..dg)
                .map(|j| {
                    let (a, b) = (gexp(i, &s), gexp(j, &t));
                    let c = gx.gmul(&gx.gmul(&a, &b), &gx.gmul(&gx.ginv(&a), &gx.ginv(&b)));
                    st_coeff(&(gx.g_chart)(&c))
                })
                .collect()
        })
        .collect();
    let bracket_h = (0..dh)
        .map(|i| {
            (0..dh)
                .map(|j| {
                    let (a, b) = (hexp(i, &s), hexp(j, &t));
                    let c = gx.hmul(&gx.hmul(&a, &b), &gx.hmul(&gx.hinv(&a), &gx.hinv(&b)));
                    st_coeff(&(gx.h_chart)(&c))
                })
                .collect()
        })
        .collect();
    let mu = (0..dg)
        .map(|k| (gx.h_chart)(&gx.incl(&gexp(k, &t))).iter().map(|j| j.coeff(&[0, 1])).collect())
        .collect();
    // right action: L_y x = −∂_s∂_t exp(tx)^{exp(sy)}
    let action = (0..dh)
        .map(|i| {
            (0..dg)
                .map(|k| {
                    let c = gx.right(&gexp(k, &t), &hexp(i, &s));
                    st_coeff(&(gx.g_chart)(&c)).iter().map(|x| -x).collect()
                })
                .collect()
        })
        .collect();
    ExtractedXMod { dim_g: dg, dim_h: dh, bracket_g, bracket_h, mu, action }
}

impl ExtractedXMod {
    /// Exact crossed module after rounding every constant to a nearby rational.
    pub fn to_xmod(&self) -> CrossedModuleAlg {
        let rat = |v: &Vec<f64>| v.iter().map(|&x| rationalize(x)).collect::<Vec<_>>();
        let g = LieAlgebra::from_fn(self.dim_g, |i, j| rat(&self.bracket_g[i][j]));
        let h = LieAlgebra::from_fn(self.dim_h, |i, j| rat(&self.bracket_h[i][j]));
        let mu_cols: Vec<Vec<Rational>> = self.mu.iter().map(rat).collect();
        let mu = Matrix::from_cols(self.dim_h, &mu_cols);
        let action = self
            .action
            .iter()
            .map(|cols| Matrix::from_cols(self.dim_g, &cols.iter().map(rat).collect::<Vec<_>>()))
            .collect();
        CrossedModuleAlg::new(g, h, mu, action)
    }

    /// Largest entrywise distance to the structure constants of `x`.
    pub fn deviation(&self, x: &CrossedModuleAlg) -> f64 {
        if x.dim_g() != self.dim_g || x.dim_h() != self.dim_h {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        let mut upd = |a: f64, b: &Rational| worst = worst.max((a - to_f64(b)).abs());
        for i in 0..self.dim_g {
            for j in 0..self.dim_g {
                for (a, b) in self.bracket_g[i][j].iter().zip(x.g.bracket_basis(i, j)) {
                    upd(*a, b);
                }
            }
        }
        for i in 0..self.dim_h {
            for j in 0..self.dim_h {
                for (a, b) in self.bracket_h[i][j].iter().zip(x.h.bracket_basis(i, j)) {
                    upd(*a, b);
                }
            }
        }
        for k in 0..self.dim_g {
            for r in 0..self.dim_h {
                upd(self.mu[k][r], &x.mu[(r, k)]);
            }
        }
        for i in 0..self.dim_h {
            for k in 0..self.dim_g {
                for r in 0..self.dim_g {
                    upd(self.action[i][k][r], &x.action[i][(r, k)]);
                }
            }
        }
        worst
    }
}
