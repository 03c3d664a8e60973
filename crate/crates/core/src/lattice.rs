//! The triple lattice `C^{p,q}_r`, its component differentials and the total
//! differential `∇`.
//!
//! A cochain at `(p, q, r)` has coordinates `(rank(I) * nJ + rank(J)) * dim U + u`
//! where `I` is an increasing `q`-tuple of basis indices of `g_p`, `J` an
//! increasing `r`-tuple of basis indices of `g`, `nJ = binom(dim g, r)` and `U`
//! is `W` for `r > 0` and `V` for `r = 0`.

use crate::diag::Diagnostics;
use crate::homalg::FinComplex;
use crate::lie2::{nerve_algebra, simplicial_maps, CrossedModuleAlg, NerveAlgebra, TwoVectorSpace};
use crate::liealg::{ce_differential, Representation};
use crate::numeric::{alt_expand, binom, one, sort_sign, subset_rank, subsets, zero, Matrix, Rational, SparseVec};
use crate::tworep::TwoRep;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("invalid context: {0:?}")]
    InvalidContext(Diagnostics),
    #[error("Δ_{k} needs k ≤ r (r = {r})")]
    DeltaOrder { k: usize, r: usize },
    #[error("nerve level {0} exceeds the configured bound {1}")]
    TooDeep(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeIndex {
    pub p: usize,
    pub q: usize,
    pub r: usize,
}

impl LatticeIndex {
    pub fn new(p: usize, q: usize, r: usize) -> Self {
        LatticeIndex { p, q, r }
    }

    pub fn total(&self) -> usize {
        self.p + self.q + self.r
    }

    /// All indices of total degree `n`, in lexicographic order.
    pub fn of_degree(n: usize) -> Vec<LatticeIndex> {
        let mut out = Vec::new();
        for p in 0..=n {
            for q in 0..=n - p {
                out.push(LatticeIndex::new(p, q, n - p - q));
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Component {
    /// CE differential of `g_p` with coefficients `ρ^{(r)} ∘ t̂_p`.
    DeltaR,
    /// CE differential of `g` with coefficients `ρ₀¹ ∘ μ`, seeded by `ρ₁` at `r = 0`.
    Delta1,
    /// Alternating sum of face pullbacks on the `g_p` slot.
    Partial,
    /// Difference map `Δ_k`.
    DeltaK(usize),
}

impl Component {
    pub fn target(&self, i: LatticeIndex) -> Option<LatticeIndex> {
        match *self {
            Component::DeltaR => Some(LatticeIndex::new(i.p, i.q + 1, i.r)),
            Component::Delta1 => Some(LatticeIndex::new(i.p, i.q, i.r + 1)),
            Component::Partial => Some(LatticeIndex::new(i.p + 1, i.q, i.r)),
            Component::DeltaK(k) if k >= 1 && k <= i.r => Some(LatticeIndex::new(i.p + 1, i.q + k, i.r - k)),
            Component::DeltaK(_) => None,
        }
    }

    fn slot(&self) -> usize {
        match self {
            Component::DeltaR => 0,
            Component::Delta1 => 1,
            Component::Partial => 2,
            Component::DeltaK(_) => 3,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Component::DeltaR => "δ^(r)".into(),
            Component::Delta1 => "δ_(1)".into(),
            Component::Partial => "∂".into(),
            Component::DeltaK(k) => format!("Δ_{k}"),
        }
    }
}

/// Sign attached to each term of `∇` as a function of the parities of the
/// source `(q, r)`; for `Δ_k` also of `k mod 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignTable {
    base: [[[i8; 2]; 2]; 3],
    diff: [[[i8; 2]; 2]; 4],
}

impl Default for SignTable {
    /// `∇ = δ^{(r)} + (−1)^q δ_{(1)} + (−1)^{q+r} ∂ + (−1)^r Σ ε_{k,q} Δ_k`
    /// with `ε_{k,q} = (−1)^{(k−1)q + k(k−1)/2}`.
    fn default() -> Self {
        let mut base = [[[1i8; 2]; 2]; 3];
        let mut diff = [[[1i8; 2]; 2]; 4];
        let sgn = |odd: bool| if odd { -1 } else { 1 };
        for q in 0..2 {
            for r in 0..2 {
                base[1][q][r] = sgn(q == 1);
                base[2][q][r] = sgn((q + r) % 2 == 1);
                for k in 0..4 {
                    diff[k][q][r] = sgn(r == 1) * sgn((k + 1) % 2 * q == 1) * [1, 1, -1, -1][k];
                }
            }
        }
        SignTable { base, diff }
    }
}

impl SignTable {
    fn entry(&mut self, c: Component, q: usize, r: usize) -> &mut i8 {
        match c {
            Component::DeltaK(k) => &mut self.diff[k % 4][q % 2][r % 2],
            _ => &mut self.base[c.slot()][q % 2][r % 2],
        }
    }

    pub fn sign(&self, c: Component, q: usize, r: usize) -> i8 {
        match c {
            Component::DeltaK(k) => self.diff[k % 4][q % 2][r % 2],
            _ => self.base[c.slot()][q % 2][r % 2],
        }
    }

    /// Copy with one entry negated; used as a negative control.
    pub fn corrupted(&self, c: Component, q: usize, r: usize) -> SignTable {
        let mut s = self.clone();
        *s.entry(c, q, r) *= -1;
        s
    }
}

/// Precomputed nerve data for a valid context.
pub struct Lattice {
    rep: TwoRep,
    nerves: Vec<NerveAlgebra>,
    faces: Vec<Vec<Matrix>>,
    targets: Vec<Matrix>,
    signs: SignTable,
    nabla_cache: Mutex<HashMap<usize, Arc<Matrix>>>,
}

impl Lattice {
    /// Validates the context and builds nerve algebras up to level `max_p`.
    pub fn new(rep: TwoRep, max_p: usize) -> Result<Self, LatticeError> {
        let mut d = rep.source.validate();
        d.extend(rep.validate());
        if !d.is_empty() {
            return Err(LatticeError::InvalidContext(d));
        }
        Ok(Lattice::build(rep, max_p, SignTable::default()))
    }

    /// Bound on `p` sufficient for `∇_n` with `n ≤ max_degree + 1`.
    pub fn for_degree(rep: TwoRep, max_degree: usize) -> Result<Self, LatticeError> {
        Lattice::new(rep, max_degree + 3)
    }

    pub fn with_signs(mut self, signs: SignTable) -> Self {
        self.signs = signs;
        self.nabla_cache.lock().unwrap().clear();
        self
    }

    fn build(rep: TwoRep, max_p: usize, signs: SignTable) -> Self {
        let x = &rep.source;
        let nerves = (0..=max_p).map(|p| nerve_algebra(x, p)).collect();
        let mut faces = Vec::new();
        let mut targets = Vec::new();
        for p in 0..=max_p {
            let (f, t) = simplicial_maps(x, p);
            faces.push(f);
            targets.push(t);
        }
        Lattice { rep, nerves, faces, targets, signs, nabla_cache: Mutex::new(HashMap::new()) }
    }

    pub fn rep(&self) -> &TwoRep {
        &self.rep
    }

    pub fn xmod(&self) -> &CrossedModuleAlg {
        &self.rep.source
    }

    pub fn signs(&self) -> &SignTable {
        &self.signs
    }

    pub fn max_p(&self) -> usize {
        self.nerves.len() - 1
    }

    fn check_p(&self, p: usize) -> Result<(), LatticeError> {
        if p > self.max_p() {
            Err(LatticeError::TooDeep(p, self.max_p()))
        } else {
            Ok(())
        }
    }

    pub fn nerve(&self, p: usize) -> &NerveAlgebra {
        &self.nerves[p]
    }

    /// Face maps `g_{p+1} → g_p`.
    pub fn faces(&self, p: usize) -> &[Matrix] {
        &self.faces[p]
    }

    pub fn final_target(&self, p: usize) -> &Matrix {
        &self.targets[p]
    }

    fn dim_gp(&self, p: usize) -> usize {
        p * self.xmod().dim_g() + self.xmod().dim_h()
    }

    fn coeff_dim(&self, r: usize) -> usize {
        if r == 0 {
            self.rep.dim_v()
        } else {
            self.rep.dim_w()
        }
    }

    /// `dim Λ^r g* ⊗ U`.
    fn inner_dim(&self, r: usize) -> usize {
        binom(self.xmod().dim_g(), r) * self.coeff_dim(r)
    }

    pub fn cochain_dim(&self, i: LatticeIndex) -> usize {
        binom(self.dim_gp(i.p), i.q) * self.inner_dim(i.r)
    }

    /// Coordinate of the basis cochain `e_I* ⊗ e_J* ⊗ e_u`.
    pub fn coord(&self, i: LatticeIndex, big_i: &[usize], j: &[usize], u: usize) -> usize {
        let nj = binom(self.xmod().dim_g(), i.r);
        let cu = self.coeff_dim(i.r);
        (subset_rank(self.dim_gp(i.p), big_i) * nj + subset_rank(self.xmod().dim_g(), j)) * cu + u
    }

    /// `ρ^{(r)}(e_y)` on `Λ^r g* ⊗ U`.
    fn rho_r(&self, r: usize, y: usize) -> Matrix {
        let rep = &self.rep;
        if r == 0 {
            return rep.rho0v[y].clone();
        }
        let x = self.xmod();
        let dg = x.dim_g();
        let w = rep.dim_w();
        let n = self.inner_dim(r);
        let mut m = Matrix::zeros(n, n);
        let ly = &x.action[y];
        for (jr, jset) in subsets(dg, r).iter().enumerate() {
            for a in 0..w {
                for b in 0..w {
                    let c = &rep.rho0w[y][(a, b)];
                    if !c.is_zero() {
                        m[(jr * w + a, jr * w + b)] += c;
                    }
                }
            }
            for k in 0..r {
                for mm in 0..dg {
                    let c = &ly[(mm, jset[k])];
                    if c.is_zero() {
                        continue;
                    }
                    let mut t = jset.clone();
                    t[k] = mm;
                    let Some(neg) = sort_sign(&mut t) else { continue };
                    let col = subset_rank(dg, &t);
                    for a in 0..w {
                        if neg {
                            m[(jr * w + a, col * w + a)] += c;
                        } else {
                            m[(jr * w + a, col * w + a)] -= c;
                        }
                    }
                }
            }
        }
        m
    }

    /// Matrix of one component from `C^{p,q}_r` to its target index.
    pub fn component(&self, kind: Component, i: LatticeIndex) -> Result<Matrix, LatticeError> {
        let Some(t) = kind.target(i) else {
            let Component::DeltaK(k) = kind else { unreachable!() };
            return Err(LatticeError::DeltaOrder { k, r: i.r });
        };
        self.check_p(t.p)?;
        let rows = self.cochain_dim(t);
        let cols = self.cochain_dim(i);
        if rows == 0 || cols == 0 {
            return Ok(Matrix::zeros(rows, cols));
        }
        Ok(match kind {
            Component::DeltaR => self.delta_r(i),
            Component::Delta1 => self.delta1(i),
            Component::Partial => self.partial(i),
            Component::DeltaK(k) => self.delta_k(k, i),
        })
    }

    fn delta_r(&self, i: LatticeIndex) -> Matrix {
        let dh = self.xmod().dim_h();
        let rhos: Vec<Matrix> = (0..dh).map(|y| self.rho_r(i.r, y)).collect();
        let t = &self.targets[i.p];
        let n = self.inner_dim(i.r);
        let action = (0..self.dim_gp(i.p))
            .map(|xi| crate::liealg::combine(&rhos, &t.col(xi), n, n))
            .collect();
        let rep = Representation::new(self.nerves[i.p].algebra.clone(), n, action);
        ce_differential(&rep, i.q)
    }

    fn delta1_inner(&self, r: usize) -> Matrix {
        let x = self.xmod();
        let rep = &self.rep;
        if r == 0 {
            let (w, v) = (rep.dim_w(), rep.dim_v());
            let mut s = Matrix::zeros(x.dim_g() * w, v);
            for j in 0..x.dim_g() {
                s.set_block(j * w, 0, &rep.rho1[j]);
            }
            return s;
        }
        let action = (0..x.dim_g()).map(|j| rep.rho0w_at(&x.mu.col(j))).collect();
        ce_differential(&Representation::new(x.g.clone(), rep.dim_w(), action), r)
    }

    fn delta1(&self, i: LatticeIndex) -> Matrix {
        Matrix::identity(binom(self.dim_gp(i.p), i.q)).kron(&self.delta1_inner(i.r))
    }

    /// `Λ^q` pullback along a linear map `f: g_{p+1} → g_p` (columns are images).
    fn pullback(&self, f: &Matrix, q: usize, src: usize, dst: usize) -> Matrix {
        let cols: Vec<SparseVec> = (0..f.cols()).map(|c| f.col_sparse(c)).collect();
        let out = subsets(dst, q);
        let mut m = Matrix::zeros(out.len(), binom(src, q));
        for (row, tuple) in out.iter().enumerate() {
            let args: Vec<&SparseVec> = tuple.iter().map(|&c| &cols[c]).collect();
            for (col, c) in alt_expand(src, &args) {
                m[(row, col)] += c;
            }
        }
        m
    }

    fn partial(&self, i: LatticeIndex) -> Matrix {
        let (src, dst) = (self.dim_gp(i.p), self.dim_gp(i.p + 1));
        let mut acc = Matrix::zeros(binom(dst, i.q), binom(src, i.q));
        for (k, f) in self.faces[i.p].iter().enumerate() {
            let pb = self.pullback(f, i.q, src, dst);
            acc = if k % 2 == 0 { acc.add(&pb) } else { acc.sub(&pb) };
        }
        acc.kron(&Matrix::identity(self.inner_dim(i.r)))
    }

    fn delta_k(&self, k: usize, i: LatticeIndex) -> Matrix {
        let x = self.xmod();
        let dg = x.dim_g();
        let src_gp = self.dim_gp(i.p);
        let dst_gp = self.dim_gp(i.p + 1);
        let t = LatticeIndex::new(i.p + 1, i.q + k, i.r - k);
        let boundary = t.r == 0;
        let (cu_in, cu_out) = (self.coeff_dim(i.r), self.coeff_dim(t.r));
        let nj_in = binom(dg, i.r);
        let nj_out = binom(dg, t.r);
        let d0 = &self.faces[i.p][0];
        let d0_cols: Vec<SparseVec> = (0..dst_gp).map(|c| d0.col_sparse(c)).collect();
        let phi = self.rep.phi();
        let mut m = Matrix::zeros(self.cochain_dim(t), self.cochain_dim(i));
        let positions = subsets(i.q + k, k);
        for (ir, iset) in subsets(dst_gp, t.q).iter().enumerate() {
            for (jr, jset) in subsets(dg, t.r).iter().enumerate() {
                for a in &positions {
                    // x⁰ components of the selected arguments
                    if a.iter().any(|&pos| iset[pos] >= dg) {
                        continue;
                    }
                    let mut gidx: Vec<usize> = a.iter().map(|&pos| iset[pos]).collect();
                    gidx.extend_from_slice(jset);
                    let Some(neg) = sort_sign(&mut gidx) else { continue };
                    let jin = subset_rank(dg, &gidx);
                    let rest: Vec<&SparseVec> = (0..t.q).filter(|pos| !a.contains(pos)).map(|pos| &d0_cols[iset[pos]]).collect();
                    let parity = a.iter().sum::<usize>() % 2 == 1;
                    let flip = parity ^ neg;
                    for (iin, c) in alt_expand(src_gp, &rest) {
                        let c = if flip { -c } else { c };
                        let row0 = (ir * nj_out + jr) * cu_out;
                        let col0 = (iin * nj_in + jin) * cu_in;
                        if boundary {
                            for u in 0..cu_out {
                                for w in 0..cu_in {
                                    let f = &phi[(u, w)];
                                    if !f.is_zero() {
                                        m[(row0 + u, col0 + w)] += &c * f;
                                    }
                                }
                            }
                        } else {
                            for u in 0..cu_out {
                                m[(row0 + u, col0 + u)] += &c;
                            }
                        }
                    }
                }
            }
        }
        m
    }

    /// Terms of `∇` leaving `i`, with their signs applied.
    pub fn nabla_terms(&self, i: LatticeIndex) -> Result<Vec<(Component, LatticeIndex, Matrix)>, LatticeError> {
        let mut kinds = vec![Component::DeltaR, Component::Delta1, Component::Partial];
        kinds.extend((1..=i.r).map(Component::DeltaK));
        let mut out = Vec::with_capacity(kinds.len());
        for kind in kinds {
            let t = kind.target(i).expect("k ≤ r");
            let m = self.component(kind, i)?;
            let s = self.signs.sign(kind, i.q, i.r);
            out.push((kind, t, if s < 0 { m.neg() } else { m }));
        }
        Ok(out)
    }

    /// Block offsets of `C^n_tot` in lexicographic `(p, q, r)` order.
    pub fn blocks(&self, n: usize) -> Vec<(LatticeIndex, usize, usize)> {
        let mut off = 0;
        LatticeIndex::of_degree(n)
            .into_iter()
            .map(|i| {
                let d = self.cochain_dim(i);
                let b = (i, off, d);
                off += d;
                b
            })
            .collect()
    }

    pub fn total_dim(&self, n: usize) -> usize {
        LatticeIndex::of_degree(n).into_iter().map(|i| self.cochain_dim(i)).sum()
    }

    /// `∇_n: C^n_tot → C^{n+1}_tot`.
    pub fn nabla(&self, n: usize) -> Result<Arc<Matrix>, LatticeError> {
        if let Some(m) = self.nabla_cache.lock().unwrap().get(&n) {
            return Ok(m.clone());
        }
        let src = self.blocks(n);
        let dst = self.blocks(n + 1);
        let offset: HashMap<LatticeIndex, usize> = dst.iter().map(|&(i, o, _)| (i, o)).collect();
        let mut m = Matrix::zeros(self.total_dim(n + 1), self.total_dim(n));
        for &(i, col, d) in &src {
            if d == 0 {
                continue;
            }
            for (_, t, block) in self.nabla_terms(i)? {
                if block.rows() > 0 {
                    m.add_block(offset[&t], col, &block);
                }
            }
        }
        let m = Arc::new(m);
        self.nabla_cache.lock().unwrap().insert(n, m.clone());
        Ok(m)
    }

    /// Blocks of `∇_{n+1} ∇_n` that are nonzero, as `(source, target)` pairs.
    pub fn nabla_square_defects(&self, n: usize) -> Result<Vec<(LatticeIndex, LatticeIndex)>, LatticeError> {
        let prod = self.nabla(n + 1)?.mul(&*self.nabla(n)?);
        let mut out = Vec::new();
        for &(s, c0, cd) in &self.blocks(n) {
            for &(t, r0, rd) in &self.blocks(n + 2) {
                if cd > 0 && rd > 0 && !prod.block(r0, c0, rd, cd).is_zero() {
                    out.push((s, t));
                }
            }
        }
        Ok(out)
    }

    /// `dim H^n_∇` and representatives completing the image of `∇_{n-1}`.
    pub fn total_cohomology(&self, n: usize) -> Result<(usize, Vec<Vec<Rational>>), LatticeError> {
        let dn = self.nabla(n)?;
        let rows = self.total_dim(n);
        let image = if n == 0 { Matrix::zeros(rows, 0) } else { (*self.nabla(n - 1)?).clone() };
        let (_, ker) = dn.rank_and_kernel();
        let mut span = Matrix::from_cols(rows, &image.column_basis());
        let mut reps = Vec::new();
        for k in ker {
            let cand = span.hstack(&Matrix::from_cols(rows, std::slice::from_ref(&k)));
            if cand.rank() > span.cols() {
                span = cand;
                reps.push(k);
            }
        }
        Ok((reps.len(), reps))
    }

    /// The total complex in degrees `0..=max`, truncated after `max`.
    pub fn total_complex(&self, max: usize) -> Result<FinComplex, LatticeError> {
        let dims: Vec<usize> = (0..=max).map(|n| self.total_dim(n)).collect();
        let diffs = (0..max).map(|n| self.nabla(n).map(|m| (*m).clone())).collect::<Result<Vec<_>, _>>()?;
        Ok(FinComplex::new(0, dims, diffs).expect("∇ squares to zero"))
    }
}

/// `dim {v : ρ₀⁰(y)v = 0, ρ₁(x)v = 0}` as a joint kernel.
pub fn h0_invariants(rep: &TwoRep) -> usize {
    let v = rep.dim_v();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for m in rep.rho0v.iter().chain(rep.rho1.iter()) {
        for i in 0..m.rows() {
            rows.push(m.row(i).to_vec());
        }
    }
    if rows.is_empty() {
        return v;
    }
    v - Matrix::from_rows(rows).rank()
}

/// `(dim Der, dim Inn, dim Out)` from derivations of `g ⊕_L h` into `ρ̄`
/// that are maps of 2-vector spaces.
pub fn h1_der_inn(rep: &TwoRep) -> (usize, usize, usize) {
    let x = &rep.source;
    let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), rep.dim_w(), rep.dim_v());
    let n = dg + dh;
    let s = w + v;
    // unknown λ̄ as an s × n matrix, block diagonal: λ₁ (w × dg), λ₀ (v × dh)
    let nunk = w * dg + v * dh;
    let var = |row: usize, col: usize| -> Option<usize> {
        if row < w && col < dg {
            Some(row * dg + col)
        } else if row >= w && col >= dg {
            Some(w * dg + (row - w) * dh + (col - dg))
        } else {
            None
        }
    };
    let bar = match crate::tworep::bar_rho(rep) {
        Ok(b) => b,
        Err(_) => return (0, 0, 0),
    };
    let mut eqs: Vec<Vec<Rational>> = Vec::new();
    // λ̄([a,b]) − ρ̄(a)λ̄(b) + ρ̄(b)λ̄(a) = 0
    for a in 0..n {
        for b in a + 1..n {
            let br = bar.algebra.bracket_basis(a, b);
            for row in 0..s {
                let mut e = vec![zero(); nunk];
                for (c, coef) in br.iter().enumerate() {
                    if let Some(k) = var(row, c) {
                        e[k] += coef;
                    }
                }
                for t in 0..s {
                    if let Some(k) = var(t, b) {
                        e[k] -= &bar.action[a][(row, t)];
                    }
                    if let Some(k) = var(t, a) {
                        e[k] += &bar.action[b][(row, t)];
                    }
                }
                eqs.push(e);
            }
        }
    }
    // φλ₁(x) = λ₀(μx)
    for c in 0..dg {
        for row in 0..v {
            let mut e = vec![zero(); nunk];
            for t in 0..w {
                e[var(t, c).unwrap()] += &rep.phi()[(row, t)];
            }
            for y in 0..dh {
                e[var(w + row, dg + y).unwrap()] -= &x.mu[(y, c)];
            }
            eqs.push(e);
        }
    }
    let der = if nunk == 0 {
        0
    } else if eqs.is_empty() {
        nunk
    } else {
        nunk - Matrix::from_rows(eqs).rank()
    };
    // v ↦ (ρ₁(·)v, ρ₀⁰(·)v)
    let mut inner = Matrix::zeros(nunk, v);
    for k in 0..v {
        for c in 0..dg {
            for t in 0..w {
                inner[(var(t, c).unwrap(), k)] = rep.rho1[c][(t, k)].clone();
            }
        }
        for y in 0..dh {
            for t in 0..v {
                inner[(var(w + t, dg + y).unwrap(), k)] = rep.rho0v[y][(t, k)].clone();
            }
        }
    }
    let inn = inner.rank();
    (der, inn, der - inn)
}

/// Context `(W, V) = (0, Q)` with trivial action, whose lattice rows at
/// `r = 0` are the trivial-coefficient double complex.
fn trivial_context(x: &CrossedModuleAlg) -> TwoRep {
    TwoRep::trivial(x.clone(), TwoVectorSpace::zero(0, 1))
}

/// Indices with `q ≥ 1` and `r = 0` in total degree `n`.
pub fn trivial_blocks(n: usize) -> Vec<LatticeIndex> {
    (0..n).map(|p| LatticeIndex::new(p, n - p, 0)).collect()
}

/// Differential of `Ω^n_tot = ⊕_{p+q=n, q≥1} Λ^q g_p*` with `d = δ + (−1)^q ∂`.
pub fn trivial_total_complex(x: &CrossedModuleAlg, n: usize) -> Matrix {
    let lat = Lattice::build(trivial_context(x), n + 2, SignTable::default());
    trivial_differential(&lat, n)
}

fn trivial_differential(lat: &Lattice, n: usize) -> Matrix {
    let src = trivial_blocks(n);
    let dst = trivial_blocks(n + 1);
    let off = |blocks: &[LatticeIndex], i: LatticeIndex| -> usize {
        blocks.iter().take_while(|&&b| b != i).map(|&b| lat.cochain_dim(b)).sum()
    };
    let total = |blocks: &[LatticeIndex]| -> usize { blocks.iter().map(|&b| lat.cochain_dim(b)).sum() };
    let mut m = Matrix::zeros(total(&dst), total(&src));
    for &i in &src {
        if lat.cochain_dim(i) == 0 {
            continue;
        }
        let d = lat.component(Component::DeltaR, i).expect("within bound");
        let t = LatticeIndex::new(i.p, i.q + 1, 0);
        if d.rows() > 0 {
            m.add_block(off(&dst, t), off(&src, i), &d);
        }
        let mut pd = lat.component(Component::Partial, i).expect("within bound");
        if i.q % 2 == 1 {
            pd = pd.neg();
        }
        let t = LatticeIndex::new(i.p + 1, i.q, 0);
        if pd.rows() > 0 {
            m.add_block(off(&dst, t), off(&src, i), &pd);
        }
    }
    m
}

/// `dim H^n` of the trivial-coefficient total complex.
pub fn trivial_cohomology(x: &CrossedModuleAlg, n: usize) -> usize {
    let lat = Lattice::build(trivial_context(x), n + 2, SignTable::default());
    let dn = trivial_differential(&lat, n);
    let dim: usize = trivial_blocks(n).iter().map(|&b| lat.cochain_dim(b)).sum();
    let prev = if n == 0 { 0 } else { trivial_differential(&lat, n - 1).rank() };
    dim - dn.rank() - prev
}

/// Sparse helper for tests and callers assembling cochains by hand.
pub fn basis_cochain(lat: &Lattice, i: LatticeIndex, big_i: &[usize], j: &[usize], u: usize) -> Vec<Rational> {
    let mut v = vec![zero(); lat.cochain_dim(i)];
    v[lat.coord(i, big_i, j, u)] = one();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;

    #[test]
    fn nabla_squares_to_zero_degree_four() {
        let mut rng = random::rng(11);
        let h = crate::liealg::LieAlgebra::aff1();
        let rho = random::abelian_rep(&mut rng, &h, 2, &[0, 1]);
        let x = crate::lie2::xmod_from_quadruple(&h, &[0, 1], 2, &rho).unwrap();
        let rep = crate::tworep::adjoint_rep(&x);
        let lat = Lattice::new(rep, 6).unwrap();
        let i = LatticeIndex::new(0, 0, 4);
        assert!(!lat.component(Component::DeltaK(4), i).unwrap().is_zero());
        for n in 0..5 {
            let d = lat.nabla_square_defects(n).unwrap();
            assert!(d.is_empty(), "degree {n}: {d:?}");
        }
    }

    #[test]
    fn nabla_squares_to_zero_random() {
        let mut rng = random::rng(7);
        for trial in 0..12 {
            let rep = random::context(&mut rng, 2);
            let lat = Lattice::for_degree(rep, 3).unwrap();
            for n in 0..3 {
                let d = lat.nabla_square_defects(n).unwrap();
                assert!(d.is_empty(), "trial {trial} degree {n}: {d:?}");
            }
        }
    }
}
