//! Extensions of crossed modules by 2-vector spaces and their 2-cocycles.
//!
//! A cocycle is a triple `(ω₀, α, φ)` with `ω₀ ∈ Λ²h* ⊗ V`, `α ∈ h* ⊗ g* ⊗ W`
//! and `φ ∈ g* ⊗ V`. Extensions use the bases `(g, W)` of `e₁` and `(h, V)`
//! of `e₀`.

use crate::diag::{Diagnostics, Violation};
use crate::lattice::{trivial_blocks, trivial_total_complex, Lattice, LatticeError, LatticeIndex};
use crate::lie2::{CrossedModuleAlg, TwoVectorSpace};
use crate::liealg::LieAlgebra;
use crate::numeric::{binom, subset_rank, subsets, zero, Matrix, Rational};
use crate::tworep::TwoRep;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExtError {
    #[error("invalid 2-representation: {0:?}")]
    InvalidRep(Diagnostics),
    #[error("cocycle equations fail: {0:?}")]
    NotCocycle(Diagnostics),
    #[error("cochain has the wrong shape: {0}")]
    Shape(String),
    #[error("σ is not a section of the projection")]
    NotSection,
    #[error("cocycles live over different 2-representations")]
    ContextMismatch,
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

fn add(a: &mut [Rational], b: &[Rational]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

fn sub(a: &mut [Rational], b: &[Rational]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
}

fn scaled(a: &[Rational], c: &Rational) -> Vec<Rational> {
    a.iter().map(|x| x * c).collect()
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    crate::lie2::unit_vec(n, i)
}

/// A triple `(ω₀, α, φ)` over a fixed 2-representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCocycle {
    pub rep: TwoRep,
    /// Coordinates `rank({a<b}) * dim V + v` of `ω₀(e_a, e_b)`.
    pub omega0: Vec<Rational>,
    /// Coordinates `(y * dim g + x) * dim W + w` of `α(e_y; e_x)`.
    pub alpha: Vec<Rational>,
    /// `φ: g → V` as a `dim V × dim g` matrix.
    pub phi: Matrix,
}

impl TwoCocycle {
    pub fn new(rep: TwoRep, omega0: Vec<Rational>, alpha: Vec<Rational>, phi: Matrix) -> Result<Self, ExtError> {
        let (dg, dh, w, v) = (rep.source.dim_g(), rep.source.dim_h(), rep.dim_w(), rep.dim_v());
        if omega0.len() != binom(dh, 2) * v {
            return Err(ExtError::Shape(format!("ω₀ needs {} coordinates", binom(dh, 2) * v)));
        }
        if alpha.len() != dh * dg * w {
            return Err(ExtError::Shape(format!("α needs {} coordinates", dh * dg * w)));
        }
        if (phi.rows(), phi.cols()) != (v, dg) {
            return Err(ExtError::Shape(format!("φ must be {v} × {dg}")));
        }
        Ok(TwoCocycle { rep, omega0, alpha, phi })
    }

    pub fn zero(rep: TwoRep) -> Self {
        let (dg, dh, w, v) = (rep.source.dim_g(), rep.source.dim_h(), rep.dim_w(), rep.dim_v());
        TwoCocycle { omega0: vec![zero(); binom(dh, 2) * v], alpha: vec![zero(); dh * dg * w], phi: Matrix::zeros(v, dg), rep }
    }

    /// Number of free coordinates `(ω₀, α, φ)`.
    pub fn coordinate_count(rep: &TwoRep) -> usize {
        let (dg, dh, w, v) = (rep.source.dim_g(), rep.source.dim_h(), rep.dim_w(), rep.dim_v());
        binom(dh, 2) * v + dh * dg * w + v * dg
    }

    /// Flat coordinates in the order `ω₀, α, φ` (row-major).
    pub fn to_vec(&self) -> Vec<Rational> {
        let mut out = self.omega0.clone();
        out.extend_from_slice(&self.alpha);
        for i in 0..self.phi.rows() {
            out.extend_from_slice(self.phi.row(i));
        }
        out
    }

    pub fn from_vec(rep: TwoRep, c: &[Rational]) -> Result<Self, ExtError> {
        if c.len() != Self::coordinate_count(&rep) {
            return Err(ExtError::Shape(format!("expected {} coordinates", Self::coordinate_count(&rep))));
        }
        let (dg, dh, w, v) = (rep.source.dim_g(), rep.source.dim_h(), rep.dim_w(), rep.dim_v());
        let n0 = binom(dh, 2) * v;
        let na = dh * dg * w;
        let phi = Matrix::from_flat(v, dg, c[n0 + na..].to_vec());
        TwoCocycle::new(rep, c[..n0].to_vec(), c[n0..n0 + na].to_vec(), phi)
    }

    fn dims(&self) -> (usize, usize, usize, usize) {
        (self.rep.source.dim_g(), self.rep.source.dim_h(), self.rep.dim_w(), self.rep.dim_v())
    }

    /// `ω₀(e_a, e_b)`.
    pub fn omega0_basis(&self, a: usize, b: usize) -> Vec<Rational> {
        let (_, dh, _, v) = self.dims();
        if a == b {
            return vec![zero(); v];
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let k = subset_rank(dh, &[lo, hi]);
        let out = self.omega0[k * v..(k + 1) * v].to_vec();
        if a < b {
            out
        } else {
            out.iter().map(|c| -c).collect()
        }
    }

    pub fn omega0_at(&self, y0: &[Rational], y1: &[Rational]) -> Vec<Rational> {
        let (_, dh, _, v) = self.dims();
        let mut out = vec![zero(); v];
        for a in 0..dh {
            if y0[a].is_zero() {
                continue;
            }
            for b in 0..dh {
                let c = &y0[a] * &y1[b];
                if !c.is_zero() {
                    add(&mut out, &scaled(&self.omega0_basis(a, b), &c));
                }
            }
        }
        out
    }

    pub fn alpha_at(&self, y: &[Rational], x: &[Rational]) -> Vec<Rational> {
        let (dg, dh, w, _) = self.dims();
        let mut out = vec![zero(); w];
        for a in 0..dh {
            if y[a].is_zero() {
                continue;
            }
            for b in 0..dg {
                let c = &y[a] * &x[b];
                if !c.is_zero() {
                    let k = (a * dg + b) * w;
                    add(&mut out, &scaled(&self.alpha[k..k + w], &c));
                }
            }
        }
        out
    }

    pub fn phi_at(&self, x: &[Rational]) -> Vec<Rational> {
        self.phi.mul_vec(x)
    }

    /// `ω₁(x₀, x₁) = ρ₁(x₁)φ(x₀) + α(μx₀; x₁)` as a bilinear map.
    pub fn omega1_at(&self, x0: &[Rational], x1: &[Rational]) -> Vec<Rational> {
        let x = &self.rep.source;
        let mut out = self.rep.rho1_at(x1).mul_vec(&self.phi_at(x0));
        add(&mut out, &self.alpha_at(&x.mu_apply(x0), x1));
        out
    }

    /// Alternating extension of `ω₁` from increasing pairs; equals `omega1_at`
    /// once `ω₁` is skew.
    pub fn omega1_alt_at(&self, x0: &[Rational], x1: &[Rational]) -> Vec<Rational> {
        let (dg, _, w, _) = self.dims();
        let mut out = vec![zero(); w];
        for a in 0..dg {
            for b in a + 1..dg {
                let c = &x0[a] * &x1[b] - &x0[b] * &x1[a];
                if !c.is_zero() {
                    add(&mut out, &scaled(&self.omega1_at(&unit(dg, a), &unit(dg, b)), &c));
                }
            }
        }
        out
    }

    /// `ω₁` on increasing pairs, `rank({a<b}) * dim W + w`.
    pub fn omega1(&self) -> Vec<Rational> {
        let (dg, _, w, _) = self.dims();
        let mut out = Vec::with_capacity(binom(dg, 2) * w);
        for pair in subsets(dg, 2) {
            out.extend(self.omega1_at(&unit(dg, pair[0]), &unit(dg, pair[1])));
        }
        out
    }

    /// Residuals of the six cocycle equations, each tagged with its basis witness.
    pub fn residuals(&self) -> Vec<(&'static str, Vec<usize>, Vec<Rational>)> {
        let x = &self.rep.source;
        let r = &self.rep;
        let (dg, dh, _, _) = self.dims();
        let e_h = |i| unit(dh, i);
        let e_g = |i| unit(dg, i);
        let mut out = Vec::new();
        // i) δω₀ = 0 for ρ₀⁰
        for t in subsets(dh, 3) {
            let mut res = vec![zero(); r.dim_v()];
            for k in 0..3 {
                let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
                add(&mut res, &r.rho0v[a].mul_vec(&self.omega0_basis(b, c)));
                sub(&mut res, &self.omega0_at(x.h.bracket_basis(a, b), &e_h(c)));
            }
            out.push(("eq i", t, res));
        }
        // ii) ω₁ skew
        for a in 0..dg {
            for b in a..dg {
                let mut res = self.omega1_at(&e_g(a), &e_g(b));
                add(&mut res, &self.omega1_at(&e_g(b), &e_g(a)));
                out.push(("eq ii", vec![a, b], res));
            }
        }
        // iii) δω₁ = 0 for ρ₀¹∘μ
        for t in subsets(dg, 3) {
            let mut res = vec![zero(); r.dim_w()];
            for k in 0..3 {
                let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
                add(&mut res, &r.rho0w_at(&x.mu.col(a)).mul_vec(&self.omega1_alt_at(&e_g(b), &e_g(c))));
                sub(&mut res, &self.omega1_alt_at(x.g.bracket_basis(a, b), &e_g(c)));
            }
            out.push(("eq iii", t, res));
        }
        // iv) ω₀(y, μx) = φα(y;x) + ρ₀⁰(y)φ(x) − φ(L_y x)
        for y in 0..dh {
            for i in 0..dg {
                let mut res = self.omega0_at(&e_h(y), &x.mu.col(i));
                sub(&mut res, &r.phi().mul_vec(&self.alpha_at(&e_h(y), &e_g(i))));
                sub(&mut res, &r.rho0v[y].mul_vec(&self.phi.col(i)));
                add(&mut res, &self.phi_at(&x.action[y].col(i)));
                out.push(("eq iv", vec![y, i], res));
            }
        }
        // v) α([y₀,y₁];x) − ρ₁(x)ω₀(y₀,y₁)
        //      = ρ₀¹(y₀)α(y₁;x) − ρ₀¹(y₁)α(y₀;x) − α(y₁;L_{y₀}x) + α(y₀;L_{y₁}x)
        for pair in subsets(dh, 2) {
            let (a, b) = (pair[0], pair[1]);
            for i in 0..dg {
                let xi = e_g(i);
                let mut res = self.alpha_at(x.h.bracket_basis(a, b), &xi);
                sub(&mut res, &r.rho1[i].mul_vec(&self.omega0_basis(a, b)));
                sub(&mut res, &r.rho0w[a].mul_vec(&self.alpha_at(&e_h(b), &xi)));
                add(&mut res, &r.rho0w[b].mul_vec(&self.alpha_at(&e_h(a), &xi)));
                add(&mut res, &self.alpha_at(&e_h(b), &x.action[a].col(i)));
                sub(&mut res, &self.alpha_at(&e_h(a), &x.action[b].col(i)));
                out.push(("eq v", vec![a, b, i], res));
            }
        }
        // vi) δa_y(x₀,x₁) = ρ₀¹(y)ω₁(x₀,x₁) − ω₁(L_y x₀,x₁) − ω₁(x₀,L_y x₁)
        for y in 0..dh {
            let ey = e_h(y);
            for pair in subsets(dg, 2) {
                let (a, b) = (pair[0], pair[1]);
                let (xa, xb) = (e_g(a), e_g(b));
                let mut res = r.rho0w_at(&x.mu.col(a)).mul_vec(&self.alpha_at(&ey, &xb));
                sub(&mut res, &r.rho0w_at(&x.mu.col(b)).mul_vec(&self.alpha_at(&ey, &xa)));
                sub(&mut res, &self.alpha_at(&ey, x.g.bracket_basis(a, b)));
                sub(&mut res, &r.rho0w[y].mul_vec(&self.omega1_alt_at(&xa, &xb)));
                add(&mut res, &self.omega1_alt_at(&x.action[y].col(a), &xb));
                add(&mut res, &self.omega1_alt_at(&xa, &x.action[y].col(b)));
                out.push(("eq vi", vec![y, a, b], res));
            }
        }
        out
    }

    /// Violated cocycle equations, from the explicit formulas.
    pub fn equations(&self) -> Diagnostics {
        self.residuals()
            .into_iter()
            .filter(|(_, _, res)| res.iter().any(|c| !c.is_zero()))
            .map(|(name, wit, res)| Violation::new(name, wit, format!("residual [{}]", res.iter().map(crate::numeric::format_rational).collect::<Vec<_>>().join(", "))))
            .collect()
    }

    /// Context validity plus the explicit equations.
    pub fn validate(&self) -> Diagnostics {
        let mut d = self.rep.source.validate();
        d.extend(self.rep.validate());
        if d.is_empty() {
            d.extend(self.equations());
        }
        d
    }

    /// The degree-2 total cochain `(ω₀, φ, α, ω₁, λ = 0, v = 0)`.
    pub fn to_total_cochain(&self, lat: &Lattice) -> Vec<Rational> {
        let (dg, dh, w, v) = self.dims();
        let mut out = vec![zero(); lat.total_dim(2)];
        for (i, off, _) in lat.blocks(2) {
            match (i.p, i.q, i.r) {
                (0, 2, 0) => out[off..off + self.omega0.len()].clone_from_slice(&self.omega0),
                (1, 1, 0) => {
                    for a in 0..dg {
                        for k in 0..v {
                            out[off + lat.coord(i, &[a], &[], k)] = self.phi[(k, a)].clone();
                        }
                    }
                }
                (0, 1, 1) => {
                    for y in 0..dh {
                        for a in 0..dg {
                            for k in 0..w {
                                out[off + lat.coord(i, &[y], &[a], k)] = self.alpha[(y * dg + a) * w + k].clone();
                            }
                        }
                    }
                }
                (0, 0, 2) => {
                    let om = self.omega1();
                    out[off..off + om.len()].clone_from_slice(&om);
                }
                _ => {}
            }
        }
        out
    }

    /// Reads `(ω₀, α, φ)` from a degree-2 total cochain; `φ` is taken on `x⁰`.
    pub fn from_total_cochain(lat: &Lattice, c: &[Rational]) -> Self {
        let rep = lat.rep().clone();
        let mut out = TwoCocycle::zero(rep);
        let (dg, dh, w, v) = out.dims();
        for (i, off, _) in lat.blocks(2) {
            match (i.p, i.q, i.r) {
                (0, 2, 0) => out.omega0 = c[off..off + out.omega0.len()].to_vec(),
                (1, 1, 0) => {
                    for a in 0..dg {
                        for k in 0..v {
                            out.phi[(k, a)] = c[off + lat.coord(i, &[a], &[], k)].clone();
                        }
                    }
                }
                (0, 1, 1) => {
                    for y in 0..dh {
                        for a in 0..dg {
                            for k in 0..w {
                                out.alpha[(y * dg + a) * w + k] = c[off + lat.coord(i, &[y], &[a], k)].clone();
                            }
                        }
                    }
                }
                _ => {}
            }
        }
        out
    }

    /// Blocks of `∇` of the embedded cochain that fail to vanish, labelled by
    /// the equation each block encodes.
    pub fn nabla_check(&self, lat: &Lattice) -> Result<Diagnostics, ExtError> {
        let c = self.to_total_cochain(lat);
        let img = lat.nabla(2)?.mul_vec(&c);
        let mut d = Diagnostics::new();
        for (i, off, dim) in lat.blocks(3) {
            if img[off..off + dim].iter().any(|x| !x.is_zero()) {
                d.push(Violation::new(nabla_label(i), vec![i.p, i.q, i.r], "∇ block nonzero"));
            }
        }
        Ok(d)
    }
}

fn nabla_label(i: LatticeIndex) -> &'static str {
    match (i.p, i.q, i.r) {
        (0, 3, 0) => "eq i",
        (1, 1, 1) => "eq ii",
        (0, 0, 3) => "eq iii",
        (1, 2, 0) => "eq iv",
        (0, 2, 1) => "eq v",
        (0, 1, 2) => "eq vi",
        _ => "∇ closure",
    }
}

/// Lattice deep enough for degree-2 checks.
pub fn degree_two_lattice(rep: &TwoRep) -> Result<Lattice, ExtError> {
    Ok(Lattice::new(rep.clone(), 3)?)
}

/// Residual map `(ω₀, α, φ) ↦ all equation residuals` as a matrix.
fn residual_matrix(rep: &TwoRep) -> Matrix {
    let n = TwoCocycle::coordinate_count(rep);
    let cols: Vec<Vec<Rational>> = (0..n)
        .map(|k| {
            let c = TwoCocycle::from_vec(rep.clone(), &unit(n, k)).expect("shape");
            c.residuals().into_iter().flat_map(|(_, _, r)| r).collect()
        })
        .collect();
    let rows = cols.first().map_or(0, |c| c.len());
    Matrix::from_cols(rows, &cols)
}

/// `(λ₀, λ₁) ↦ ∇(λ₀, λ₁)` in cocycle coordinates; columns are `λ₀` (row-major
/// `dim V × dim h`) then `λ₁` (row-major `dim W × dim g`).
pub fn coboundary_matrix(rep: &TwoRep) -> Matrix {
    let x = &rep.source;
    let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), rep.dim_w(), rep.dim_v());
    let n = TwoCocycle::coordinate_count(rep);
    let mut cols = Vec::new();
    for k in 0..v * dh + w * dg {
        let (l0, l1) = if k < v * dh {
            (Matrix::from_flat(v, dh, unit(v * dh, k)), Matrix::zeros(w, dg))
        } else {
            (Matrix::zeros(v, dh), Matrix::from_flat(w, dg, unit(w * dg, k - v * dh)))
        };
        cols.push(coboundary_of(rep, &l0, &l1).to_vec());
    }
    Matrix::from_cols(n, &cols)
}

/// The cocycle `(δλ₀, ρ₀¹(y)λ₁(x) − λ₁(L_y x) − ρ₁(x)λ₀(y), λ₀μ − φλ₁)`.
pub fn coboundary_of(rep: &TwoRep, l0: &Matrix, l1: &Matrix) -> TwoCocycle {
    let x = &rep.source;
    let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), rep.dim_w(), rep.dim_v());
    let mut c = TwoCocycle::zero(rep.clone());
    for (k, pair) in subsets(dh, 2).iter().enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let mut val = rep.rho0v[a].mul_vec(&l0.col(b));
        sub(&mut val, &rep.rho0v[b].mul_vec(&l0.col(a)));
        sub(&mut val, &l0.mul_vec(x.h.bracket_basis(a, b)));
        c.omega0[k * v..(k + 1) * v].clone_from_slice(&val);
    }
    for y in 0..dh {
        for i in 0..dg {
            let mut val = rep.rho0w[y].mul_vec(&l1.col(i));
            sub(&mut val, &l1.mul_vec(&x.action[y].col(i)));
            sub(&mut val, &rep.rho1[i].mul_vec(&l0.col(y)));
            let k = (y * dg + i) * w;
            c.alpha[k..k + w].clone_from_slice(&val);
        }
    }
    c.phi = l0.mul(&x.mu).sub(&rep.phi().mul(l1));
    c
}

/// `(dim Z, dim B, dim Z − dim B)` for cocycles modulo coboundaries.
pub fn h2_class_count(rep: &TwoRep) -> (usize, usize, usize) {
    let n = TwoCocycle::coordinate_count(rep);
    let res = residual_matrix(rep);
    let z = if res.rows() == 0 { n } else { n - res.rank() };
    let b = coboundary_matrix(rep).rank();
    (z, b, z - b)
}

/// Basis of the cocycle space.
pub fn cocycle_basis(rep: &TwoRep) -> Vec<TwoCocycle> {
    let n = TwoCocycle::coordinate_count(rep);
    let res = residual_matrix(rep);
    let ker = if res.rows() == 0 { (0..n).map(|k| unit(n, k)).collect() } else { res.kernel() };
    ker.iter().map(|k| TwoCocycle::from_vec(rep.clone(), k).expect("shape")).collect()
}

/// Finds `(λ₀, λ₁)` with `c₂ − c₁ = ∇(λ₀, λ₁)`, or `None` when no such pair exists.
pub fn coboundary_solve(c1: &TwoCocycle, c2: &TwoCocycle) -> Result<Option<(Matrix, Matrix)>, ExtError> {
    if c1.rep != c2.rep {
        return Err(ExtError::ContextMismatch);
    }
    let rep = &c1.rep;
    let x = &rep.source;
    let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), rep.dim_w(), rep.dim_v());
    let mut diff = c2.to_vec();
    sub(&mut diff, &c1.to_vec());
    let m = coboundary_matrix(rep);
    let sol = if m.cols() == 0 {
        if diff.iter().all(|c| c.is_zero()) {
            Some(Vec::new())
        } else {
            None
        }
    } else {
        m.solve_linear(&diff)
    };
    Ok(sol.map(|s| (Matrix::from_flat(v, dh, s[..v * dh].to_vec()), Matrix::from_flat(w, dg, s[v * dh..].to_vec()))))
}

/// A crossed module extension of `base` by `kernel`, with the maps of both rows.
#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub base: CrossedModuleAlg,
    pub kernel: TwoVectorSpace,
    pub total: CrossedModuleAlg,
    /// `W → e₁`
    pub include1: Matrix,
    /// `V → e₀`
    pub include0: Matrix,
    /// `e₁ → g`
    pub project1: Matrix,
    /// `e₀ → h`
    pub project0: Matrix,
    /// `ω₁` on increasing pairs of `g`, with values in `W`.
    pub omega1: Vec<Rational>,
}

impl ExtensionResult {
    /// Block splittings `z ↦ (z, 0)`.
    pub fn canonical_splitting(&self) -> (Matrix, Matrix) {
        let (dg, dh) = (self.base.dim_g(), self.base.dim_h());
        let s1 = Matrix::identity(dg).vstack(&Matrix::zeros(self.kernel.dim_w, dg));
        let s0 = Matrix::identity(dh).vstack(&Matrix::zeros(self.kernel.dim_v, dh));
        (s1, s0)
    }

    /// Exactness of both rows and the crossed module property of every square.
    pub fn validate(&self) -> Diagnostics {
        let mut d = self.total.validate();
        for (name, j, p, n) in [
            ("row 1 exact", &self.include1, &self.project1, self.total.dim_g()),
            ("row 0 exact", &self.include0, &self.project0, self.total.dim_h()),
        ] {
            let ok = j.rank() == j.cols() && p.rank() == p.rows() && p.mul(j).is_zero() && j.cols() + p.rows() == n;
            if !ok {
                d.push(Violation::new(name, vec![], "include/project do not form a short exact sequence"));
            }
        }
        let kernel = abelian_xmod(&self.kernel);
        d.extend(xmod_morphism_defects(&kernel, &self.total, &self.include1, &self.include0));
        d.extend(xmod_morphism_defects(&self.total, &self.base, &self.project1, &self.project0));
        d
    }
}

/// `W → V` as an abelian crossed module with zero action.
pub fn abelian_xmod(k: &TwoVectorSpace) -> CrossedModuleAlg {
    CrossedModuleAlg::new(LieAlgebra::abelian(k.dim_w), LieAlgebra::abelian(k.dim_v), k.phi.clone(), vec![Matrix::zeros(k.dim_w, k.dim_w); k.dim_v])
}

/// Failures of `(f₁, f₀)` to be a morphism of crossed modules.
pub fn xmod_morphism_defects(src: &CrossedModuleAlg, dst: &CrossedModuleAlg, f1: &Matrix, f0: &Matrix) -> Diagnostics {
    let mut d = Diagnostics::new();
    let (dg, dh) = (src.dim_g(), src.dim_h());
    if (f1.rows(), f1.cols()) != (dst.dim_g(), dg) || (f0.rows(), f0.cols()) != (dst.dim_h(), dh) {
        d.push(Violation::new("morphism shape", vec![], ""));
        return d;
    }
    for a in 0..dg {
        for b in a + 1..dg {
            if f1.mul_vec(src.g.bracket_basis(a, b)) != dst.g.bracket(&f1.col(a), &f1.col(b)) {
                d.push(Violation::new("f₁ bracket", vec![a, b], ""));
            }
        }
    }
    for a in 0..dh {
        for b in a + 1..dh {
            if f0.mul_vec(src.h.bracket_basis(a, b)) != dst.h.bracket(&f0.col(a), &f0.col(b)) {
                d.push(Violation::new("f₀ bracket", vec![a, b], ""));
            }
        }
    }
    if f0.mul(&src.mu) != dst.mu.mul(f1) {
        d.push(Violation::new("f₀μ = μ'f₁", vec![], ""));
    }
    for y in 0..dh {
        let ly = dst.l(&f0.col(y));
        for a in 0..dg {
            if f1.mul_vec(&src.action[y].col(a)) != ly.mul_vec(&f1.col(a)) {
                d.push(Violation::new("f₁(L_y x) = L_{f₀y} f₁x", vec![y, a], ""));
            }
        }
    }
    d
}

/// Builds `g ⊕^{ω₁} W → h ⊕^{ω₀} V` from a cocycle.
pub fn extension_from_cocycle(c: &TwoCocycle) -> Result<ExtensionResult, ExtError> {
    let mut d = c.rep.source.validate();
    d.extend(c.rep.validate());
    if !d.is_empty() {
        return Err(ExtError::InvalidRep(d));
    }
    let d = c.equations();
    if !d.is_empty() {
        return Err(ExtError::NotCocycle(d));
    }
    let rep = &c.rep;
    let x = &rep.source;
    let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), rep.dim_w(), rep.dim_v());
    // [(x₀,w₀),(x₁,w₁)] = ([x₀,x₁], ρ₀¹(μx₀)w₁ − ρ₀¹(μx₁)w₀ − ω₁(x₀,x₁))
    let e1 = LieAlgebra::from_fn(dg + w, |a, b| {
        let mut out = vec![zero(); dg + w];
        if b < dg {
            out[..dg].clone_from_slice(x.g.bracket_basis(a, b));
            let om = c.omega1_at(&unit(dg, a), &unit(dg, b));
            for k in 0..w {
                out[dg + k] = -&om[k];
            }
        } else if a < dg {
            out[dg..].clone_from_slice(&rep.rho0w_at(&x.mu.col(a)).col(b - dg));
        }
        out
    });
    let e0 = LieAlgebra::from_fn(dh + v, |a, b| {
        let mut out = vec![zero(); dh + v];
        if b < dh {
            out[..dh].clone_from_slice(x.h.bracket_basis(a, b));
            let om = c.omega0_basis(a, b);
            for k in 0..v {
                out[dh + k] = -&om[k];
            }
        } else if a < dh {
            out[dh..].clone_from_slice(&rep.rho0v[a].col(b - dh));
        }
        out
    });
    // ε(x, w) = (μx, φw + φ(x))
    let mut mu = Matrix::zeros(dh + v, dg + w);
    mu.set_block(0, 0, &x.mu);
    mu.set_block(dh, 0, &c.phi);
    mu.set_block(dh, dg, rep.phi());
    // L_{(y,v)}(x, w) = (L_y x, ρ₀¹(y)w − ρ₁(x)v − α(y;x))
    let mut action = Vec::with_capacity(dh + v);
    for y in 0..dh {
        let mut m = Matrix::zeros(dg + w, dg + w);
        m.set_block(0, 0, &x.action[y]);
        m.set_block(dg, dg, &rep.rho0w[y]);
        for i in 0..dg {
            let a = c.alpha_at(&unit(dh, y), &unit(dg, i));
            for k in 0..w {
                m[(dg + k, i)] = -&a[k];
            }
        }
        action.push(m);
    }
    for k in 0..v {
        let mut m = Matrix::zeros(dg + w, dg + w);
        for i in 0..dg {
            let col = rep.rho1[i].col(k);
            for t in 0..w {
                m[(dg + t, i)] = -&col[t];
            }
        }
        action.push(m);
    }
    let total = CrossedModuleAlg::new(e1, e0, mu, action);
    Ok(ExtensionResult {
        base: x.clone(),
        kernel: rep.target.clone(),
        total,
        include1: Matrix::zeros(dg, w).vstack(&Matrix::identity(w)),
        include0: Matrix::zeros(dh, v).vstack(&Matrix::identity(v)),
        project1: Matrix::identity(dg).hstack(&Matrix::zeros(dg, w)),
        project0: Matrix::identity(dh).hstack(&Matrix::zeros(dh, v)),
        omega1: c.omega1(),
    })
}

/// Induced 2-representation and cocycle of an extension with splittings
/// `σ₁: g → e₁`, `σ₀: h → e₀`.
pub fn cocycle_from_extension(e: &ExtensionResult, sigma1: &Matrix, sigma0: &Matrix) -> Result<(TwoRep, TwoCocycle), ExtError> {
    let x = &e.base;
    let t = &e.total;
    let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), e.kernel.dim_w, e.kernel.dim_v);
    if e.project1.mul(sigma1) != Matrix::identity(dg) || e.project0.mul(sigma0) != Matrix::identity(dh) {
        return Err(ExtError::NotSection);
    }
    // coordinates (kernel part; base part) with respect to [j | σ]
    let inv1 = e.include1.hstack(sigma1).inverse().ok_or(ExtError::NotSection)?;
    let inv0 = e.include0.hstack(sigma0).inverse().ok_or(ExtError::NotSection)?;
    let w_part = |u: &[Rational]| inv1.mul_vec(u)[..w].to_vec();
    let v_part = |u: &[Rational]| inv0.mul_vec(u)[..v].to_vec();
    let l_eps = |a: &[Rational], b: &[Rational]| t.l(a).mul_vec(b);
    let cols_to = |n: usize, cols: Vec<Vec<Rational>>| Matrix::from_cols(n, &cols);

    let phi = cols_to(v, (0..w).map(|k| v_part(&t.mu.mul_vec(&e.include1.col(k)))).collect());
    let mut rho0v = Vec::with_capacity(dh);
    let mut rho0w = Vec::with_capacity(dh);
    for y in 0..dh {
        let s = sigma0.col(y);
        rho0v.push(cols_to(v, (0..v).map(|k| v_part(&t.h.bracket(&s, &e.include0.col(k)))).collect()));
        rho0w.push(cols_to(w, (0..w).map(|k| w_part(&l_eps(&s, &e.include1.col(k)))).collect()));
    }
    let rho1: Vec<Matrix> = (0..dg)
        .map(|i| {
            let s = sigma1.col(i);
            cols_to(w, (0..v).map(|k| scaled(&w_part(&l_eps(&e.include0.col(k), &s)), &-crate::numeric::one())).collect())
        })
        .collect();
    let rep = TwoRep::new(x.clone(), TwoVectorSpace::new(phi), rho1, rho0w, rho0v);
    let d = rep.validate();
    if !d.is_empty() {
        return Err(ExtError::InvalidRep(d));
    }
    let mut c = TwoCocycle::zero(rep.clone());
    // ω₀(y₀,y₁) = σ₀([y₀,y₁]) − [σ₀y₀, σ₀y₁]
    for (k, pair) in subsets(dh, 2).iter().enumerate() {
        let (a, b) = (pair[0], pair[1]);
        let mut u = sigma0.mul_vec(x.h.bracket_basis(a, b));
        sub(&mut u, &t.h.bracket(&sigma0.col(a), &sigma0.col(b)));
        c.omega0[k * v..(k + 1) * v].clone_from_slice(&v_part(&u));
    }
    // α(y;x) = σ₁(L_y x) − L^ε_{σ₀y} σ₁(x)
    for y in 0..dh {
        for i in 0..dg {
            let mut u = sigma1.mul_vec(&x.action[y].col(i));
            sub(&mut u, &l_eps(&sigma0.col(y), &sigma1.col(i)));
            let k = (y * dg + i) * w;
            c.alpha[k..k + w].clone_from_slice(&w_part(&u));
        }
    }
    // φ(x) = ε(σ₁x) − σ₀(μx)
    let mut cols = Vec::with_capacity(dg);
    for i in 0..dg {
        let mut u = t.mu.mul_vec(&sigma1.col(i));
        sub(&mut u, &sigma0.mul_vec(&x.mu.col(i)));
        cols.push(v_part(&u));
    }
    c.phi = cols_to(v, cols);
    Ok((rep, c))
}

/// `ψ_k(z, a) = (z, a + λ_k(z))` on `e₁ = g ⊕ W` and `e₀ = h ⊕ V`, from the
/// extension of `c` to the extension of `c + ∇(λ₀, λ₁)`.
pub fn extension_isomorphism(l0: &Matrix, l1: &Matrix) -> (Matrix, Matrix) {
    let block = |l: &Matrix| {
        let (n, k) = (l.cols(), l.rows());
        let top = Matrix::identity(n).hstack(&Matrix::zeros(n, k));
        let bottom = l.hstack(&Matrix::identity(k));
        top.vstack(&bottom)
    };
    (block(l1), block(l0))
}

/// `h ⊕^ω R` receiving `μ_φ: x ↦ (μx, φ(x, 0))`, for a degree-2 cocycle of
/// the trivial-coefficient complex given by `ω ∈ Λ²h*` (increasing pairs) and
/// `φ ∈ g₁*` (the `x⁰` coordinates first, then `y`).
pub fn trivial_coeff_extension(x: &CrossedModuleAlg, omega: &[Rational], phi: &[Rational]) -> Result<CrossedModuleAlg, ExtError> {
    let (dg, dh) = (x.dim_g(), x.dim_h());
    if omega.len() != binom(dh, 2) || phi.len() != dg + dh {
        return Err(ExtError::Shape(format!("ω needs {} and φ needs {} coordinates", binom(dh, 2), dg + dh)));
    }
    let d = trivial_cocycle_defects(x, omega, phi);
    if !d.is_empty() {
        return Err(ExtError::NotCocycle(d));
    }
    let h = LieAlgebra::from_fn(dh + 1, |a, b| {
        let mut out = vec![zero(); dh + 1];
        if b < dh {
            out[..dh].clone_from_slice(x.h.bracket_basis(a, b));
            out[dh] = -&omega[subset_rank(dh, &[a, b])];
        }
        out
    });
    let mut mu = Matrix::zeros(dh + 1, dg);
    mu.set_block(0, 0, &x.mu);
    for i in 0..dg {
        mu[(dh, i)] = phi[i].clone();
    }
    let mut action = x.action.clone();
    action.push(Matrix::zeros(dg, dg));
    Ok(CrossedModuleAlg::new(x.g.clone(), h, mu, action))
}

/// The three conditions `δω = 0`, `∂φ = 0`, `∂ω + δφ = 0`.
pub fn trivial_cocycle_defects(x: &CrossedModuleAlg, omega: &[Rational], phi: &[Rational]) -> Diagnostics {
    let d = trivial_total_complex(x, 2);
    let mut c = omega.to_vec();
    c.extend_from_slice(phi);
    let img = d.mul_vec(&c);
    let dims = |i: LatticeIndex| binom(i.p * x.dim_g() + x.dim_h(), i.q);
    let mut out = Diagnostics::new();
    let mut off = 0;
    for i in trivial_blocks(3) {
        let n = dims(i);
        if img[off..off + n].iter().any(|c| !c.is_zero()) {
            let name = match (i.p, i.q) {
                (0, 3) => "1) δω = 0",
                (1, 2) => "3) ∂ω + δφ = 0",
                _ => "2) ∂φ = 0",
            };
            out.push(Violation::new(name, vec![i.p, i.q], ""));
        }
        off += n;
    }
    out
}

/// `[[I, 0], [−ψ, 1]]` on `h ⊕ R`, from the extension of `(ω, φ) + dψ` to that of `(ω, φ)`.
pub fn trivial_extension_iso(psi: &[Rational]) -> Matrix {
    let n = psi.len();
    let mut m = Matrix::identity(n + 1);
    for (i, p) in psi.iter().enumerate() {
        m[(n, i)] = -p;
    }
    m
}
