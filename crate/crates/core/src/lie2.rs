//! Crossed modules of Lie algebras, nerve algebras, 2-vector spaces and gl(φ).

use crate::diag::{Diagnostics, Violation};
use crate::liealg::{combine, LieAlgebra, Representation};
use crate::numeric::{one, zero, Matrix, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Lie2Error {
    #[error("span of the given basis vectors is not an ideal: [e{0}, e{1}] leaves it")]
    NotIdeal(usize, usize),
    #[error("representation does not vanish on the ideal at e{0}")]
    NotDescending(usize),
    #[error("invalid representation: {0:?}")]
    BadRepresentation(Diagnostics),
    #[error("invalid crossed module: {0:?}")]
    Invalid(Diagnostics),
}

/// Crossed module `μ: g → h` with an action of `h` on `g` by derivations.
/// `mu` is `dim h × dim g`; `action[i]` is `L_{e_i}` on `g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModuleAlg {
    pub g: LieAlgebra,
    pub h: LieAlgebra,
    pub mu: Matrix,
    pub action: Vec<Matrix>,
}

impl CrossedModuleAlg {
    pub fn new(g: LieAlgebra, h: LieAlgebra, mu: Matrix, action: Vec<Matrix>) -> Self {
        assert_eq!((mu.rows(), mu.cols()), (h.dim(), g.dim()), "μ has the wrong shape");
        assert_eq!(action.len(), h.dim(), "one action matrix per basis vector of h");
        for a in &action {
            assert_eq!((a.rows(), a.cols()), (g.dim(), g.dim()));
        }
        CrossedModuleAlg { g, h, mu, action }
    }

    /// The crossed module `0 → h` of a Lie algebra.
    pub fn from_lie_algebra(h: LieAlgebra) -> Self {
        let n = h.dim();
        CrossedModuleAlg { g: LieAlgebra::abelian(0), h, mu: Matrix::zeros(n, 0), action: vec![Matrix::zeros(0, 0); n] }
    }

    pub fn dim_g(&self) -> usize {
        self.g.dim()
    }

    pub fn dim_h(&self) -> usize {
        self.h.dim()
    }

    /// `L_y` as a matrix on `g`.
    pub fn l(&self, y: &[Rational]) -> Matrix {
        combine(&self.action, y, self.dim_g(), self.dim_g())
    }

    pub fn l_apply(&self, y: &[Rational], x: &[Rational]) -> Vec<Rational> {
        self.l(y).mul_vec(x)
    }

    pub fn mu_apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.mu.mul_vec(x)
    }

    pub fn action_rep(&self) -> Representation {
        Representation::new(self.h.clone(), self.dim_g(), self.action.clone())
    }

    pub fn validate(&self) -> Diagnostics {
        let mut out = Vec::new();
        for v in self.g.validate() {
            out.push(Violation::new("jacobi(g)", v.witness, v.detail));
        }
        for v in self.h.validate() {
            out.push(Violation::new("jacobi(h)", v.witness, v.detail));
        }
        for v in self.action_rep().validate() {
            out.push(Violation::new("action homomorphism", v.witness, v.detail));
        }
        let (dg, dh) = (self.dim_g(), self.dim_h());
        let ug = |i: usize| unit_vec(dg, i);
        for y in 0..dh {
            let ly = &self.action[y];
            for a in 0..dg {
                for b in a + 1..dg {
                    let lhs = ly.mul_vec(self.g.bracket_basis(a, b));
                    let r1 = self.g.bracket(&ly.col(a), &ug(b));
                    let r2 = self.g.bracket(&ug(a), &ly.col(b));
                    if lhs.iter().zip(r1.iter().zip(&r2)).any(|(l, (p, q))| *l != p + q) {
                        out.push(Violation::new("derivation", vec![y, a, b], "L_y[x0,x1] ≠ [L_y x0,x1]+[x0,L_y x1]"));
                    }
                }
            }
            for a in 0..dg {
                let lhs = self.mu.mul_vec(&self.action[y].col(a));
                let rhs = self.h.bracket(&unit_vec(dh, y), &self.mu.col(a));
                if lhs != rhs {
                    out.push(Violation::new("equivariance", vec![y, a], "μ(L_y x) ≠ [y, μx]"));
                }
            }
        }
        for a in 0..dg {
            let la = self.l(&self.mu.col(a));
            for b in 0..dg {
                if la.col(b) != self.g.bracket_basis(a, b) {
                    out.push(Violation::new("peiffer", vec![a, b], "L_{μx0} x1 ≠ [x0, x1]"));
                }
            }
        }
        out
    }
}

pub fn validate_crossed_module(x: &CrossedModuleAlg) -> Diagnostics {
    x.validate()
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![zero(); n];
    v[i] = one();
    v
}

/// Semidirect sum `g ⊕_L h` on the basis `(g-block, h-block)`.
pub fn lie2_arrows(x: &CrossedModuleAlg) -> Result<LieAlgebra, Lie2Error> {
    let d = x.validate();
    if !d.is_empty() {
        return Err(Lie2Error::Invalid(d));
    }
    Ok(arrows_unchecked(x))
}

fn arrows_unchecked(x: &CrossedModuleAlg) -> LieAlgebra {
    nerve_bracket_algebra(x, 1)
}

/// Crossed module `V ⊕ I → h` from an ideal spanned by basis vectors and a
/// representation of `h` vanishing on `I`. The basis of `g` is `V` followed
/// by the ideal vectors in increasing order.
pub fn xmod_from_quadruple(
    h: &LieAlgebra,
    ideal_basis: &[usize],
    vdim: usize,
    rho: &[Matrix],
) -> Result<CrossedModuleAlg, Lie2Error> {
    let mut ideal = ideal_basis.to_vec();
    ideal.sort_unstable();
    ideal.dedup();
    let dh = h.dim();
    let in_ideal = |i: usize| ideal.binary_search(&i).is_ok();
    for &i in &ideal {
        for j in 0..dh {
            if h.bracket_basis(j, i).iter().enumerate().any(|(k, c)| !c.is_zero() && !in_ideal(k)) {
                return Err(Lie2Error::NotIdeal(j, i));
            }
        }
    }
    let rep = Representation::new(h.clone(), vdim, rho.to_vec());
    let diag = rep.validate();
    if !diag.is_empty() {
        return Err(Lie2Error::BadRepresentation(diag));
    }
    for &i in &ideal {
        if !rho[i].is_zero() {
            return Err(Lie2Error::NotDescending(i));
        }
    }
    let ni = ideal.len();
    let dg = vdim + ni;
    let restrict = |v: &[Rational]| -> Vec<Rational> { ideal.iter().map(|&k| v[k].clone()).collect() };
    let g = LieAlgebra::from_fn(dg, |a, b| {
        let mut out = vec![zero(); dg];
        if a >= vdim {
            let br = h.bracket_basis(ideal[a - vdim], ideal[b - vdim]);
            out[vdim..].clone_from_slice(&restrict(br));
        }
        out
    });
    let mut mu = Matrix::zeros(dh, dg);
    for (k, &i) in ideal.iter().enumerate() {
        mu[(i, vdim + k)] = one();
    }
    let action = (0..dh)
        .map(|y| {
            let mut m = Matrix::zeros(dg, dg);
            m.set_block(0, 0, &rho[y]);
            for (k, &i) in ideal.iter().enumerate() {
                let br = restrict(h.bracket_basis(y, i));
                for (r, c) in br.into_iter().enumerate() {
                    m[(vdim + r, vdim + k)] = c;
                }
            }
            m
        })
        .collect();
    Ok(CrossedModuleAlg::new(g, h.clone(), mu, action))
}

/// Orbit ideal, isotropy and the induced representation on `ker μ`.
#[derive(Clone, Debug)]
pub struct StructureReport {
    pub orbit_basis: Vec<Vec<Rational>>,
    pub orbit_is_ideal: bool,
    pub kernel_basis: Vec<Vec<Rational>>,
    pub kernel_abelian: bool,
    pub kernel_central: bool,
    /// `L_{e_i}` restricted to `ker μ`, in kernel-basis coordinates.
    pub induced_rep: Vec<Matrix>,
    pub induced_preserves_kernel: bool,
    pub induced_descends: bool,
}

impl StructureReport {
    pub fn ok(&self) -> bool {
        self.orbit_is_ideal
            && self.kernel_abelian
            && self.kernel_central
            && self.induced_preserves_kernel
            && self.induced_descends
    }
}

pub fn structure_report(x: &CrossedModuleAlg) -> StructureReport {
    let (dg, dh) = (x.dim_g(), x.dim_h());
    let orbit_basis = x.mu.column_basis();
    let orbit = Matrix::from_cols(dh, &orbit_basis);
    let orank = orbit.rank();
    let orbit_is_ideal = (0..dh).all(|y| {
        orbit_basis.iter().all(|o| {
            let b = x.h.bracket(&unit_vec(dh, y), o);
            orbit.hstack(&Matrix::from_cols(dh, &[b])).rank() == orank
        })
    });
    let kernel_basis = x.mu.kernel();
    let kernel_abelian = kernel_basis
        .iter()
        .all(|a| kernel_basis.iter().all(|b| x.g.bracket(a, b).iter().all(Zero::is_zero)));
    let kernel_central =
        kernel_basis.iter().all(|a| (0..dg).all(|i| x.g.bracket(a, &unit_vec(dg, i)).iter().all(Zero::is_zero)));
    let kmat = Matrix::from_cols(dg, &kernel_basis);
    let mut preserves = true;
    let induced_rep: Vec<Matrix> = (0..dh)
        .map(|y| {
            let cols: Vec<Vec<Rational>> = kernel_basis
                .iter()
                .map(|k| match kmat.solve_linear(&x.action[y].mul_vec(k)) {
                    Some(c) => c,
                    None => {
                        preserves = false;
                        vec![zero(); kernel_basis.len()]
                    }
                })
                .collect();
            Matrix::from_cols(kernel_basis.len(), &cols)
        })
        .collect();
    let induced_descends = orbit_basis.iter().all(|o| combine(&induced_rep, o, kernel_basis.len(), kernel_basis.len()).is_zero());
    StructureReport {
        orbit_basis,
        orbit_is_ideal,
        kernel_basis,
        kernel_abelian,
        kernel_central,
        induced_rep,
        induced_preserves_kernel: preserves,
        induced_descends,
    }
}

/// Lie algebra of composable `p`-tuples, on `g^p ⊕ h` with blocks ordered
/// `x⁰, …, x^{p-1}, y`.
#[derive(Clone, Debug)]
pub struct NerveAlgebra {
    pub p: usize,
    pub algebra: LieAlgebra,
    pub dim_g: usize,
    pub dim_h: usize,
}

impl NerveAlgebra {
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Index of the `y` block.
    pub fn y_offset(&self) -> usize {
        self.p * self.dim_g
    }
}

/// Bracket of two elements of `g_p` through the embedding into `g_1^p`.
pub fn nerve_bracket(x: &CrossedModuleAlg, p: usize, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (dg, dh) = (x.dim_g(), x.dim_h());
    let yo = p * dg;
    let mut out = vec![zero(); yo + dh];
    // Y_j = y + Σ_{k>j} μ x^k, accumulated from the top
    let mut ya = a[yo..].to_vec();
    let mut yb = b[yo..].to_vec();
    for j in (0..p).rev() {
        let xa = &a[j * dg..(j + 1) * dg];
        let xb = &b[j * dg..(j + 1) * dg];
        let br = x.g.bracket(xa, xb);
        let la = x.l_apply(&ya, xb);
        let lb = x.l_apply(&yb, xa);
        for k in 0..dg {
            out[j * dg + k] = &br[k] + &la[k] - &lb[k];
        }
        for (t, m) in ya.iter_mut().zip(x.mu_apply(xa)) {
            *t += m;
        }
        for (t, m) in yb.iter_mut().zip(x.mu_apply(xb)) {
            *t += m;
        }
    }
    let yy = x.h.bracket(&a[yo..], &b[yo..]);
    out[yo..].clone_from_slice(&yy);
    out
}

fn nerve_bracket_algebra(x: &CrossedModuleAlg, p: usize) -> LieAlgebra {
    let n = p * x.dim_g() + x.dim_h();
    LieAlgebra::from_fn(n, |i, j| nerve_bracket(x, p, &unit_vec(n, i), &unit_vec(n, j)))
}

pub fn nerve_algebra(x: &CrossedModuleAlg, p: usize) -> NerveAlgebra {
    NerveAlgebra { p, algebra: nerve_bracket_algebra(x, p), dim_g: x.dim_g(), dim_h: x.dim_h() }
}

/// Face maps `g_{p+1} → g_p` (indices `0..=p+1`) and the final target `g_p → h`.
pub fn simplicial_maps(x: &CrossedModuleAlg, p: usize) -> (Vec<Matrix>, Matrix) {
    let (dg, dh) = (x.dim_g(), x.dim_h());
    let src = (p + 1) * dg + dh;
    let dst = p * dg + dh;
    let mut faces = Vec::with_capacity(p + 2);
    for k in 0..=p + 1 {
        let mut m = Matrix::zeros(dst, src);
        for j in 0..p {
            // output block j collects input blocks
            let inputs: Vec<usize> = if k == 0 {
                vec![j + 1]
            } else if j + 1 < k {
                vec![j]
            } else if j + 1 == k && k <= p {
                vec![j, j + 1]
            } else {
                vec![j + 1]
            };
            for &b in &inputs {
                for t in 0..dg {
                    m[(j * dg + t, b * dg + t)] = one();
                }
            }
        }
        for t in 0..dh {
            m[(p * dg + t, (p + 1) * dg + t)] = one();
        }
        if k == p + 1 {
            m.set_block(p * dg, p * dg, &x.mu);
        }
        faces.push(m);
    }
    let mut t = Matrix::zeros(dh, dst);
    for j in 0..p {
        t.set_block(0, j * dg, &x.mu);
    }
    t.set_block(0, p * dg, &Matrix::identity(dh));
    (faces, t)
}

/// `φ: W → V`, stored as a `dim V × dim W` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoVectorSpace {
    pub dim_w: usize,
    pub dim_v: usize,
    pub phi: Matrix,
}

impl TwoVectorSpace {
    pub fn new(phi: Matrix) -> Self {
        TwoVectorSpace { dim_w: phi.cols(), dim_v: phi.rows(), phi }
    }

    pub fn zero(dim_w: usize, dim_v: usize) -> Self {
        TwoVectorSpace::new(Matrix::zeros(dim_v, dim_w))
    }
}

/// `gl(φ)` with the chosen basis of `gl(φ)_0` kept for coordinate changes.
/// `gl(φ)_1 = Hom(V, W)` uses the row-major matrix-unit basis.
#[derive(Clone, Debug)]
pub struct GlPhi {
    pub space: TwoVectorSpace,
    pub xmod: CrossedModuleAlg,
    pub basis0: Vec<(Matrix, Matrix)>,
    kernel: Matrix,
}

impl GlPhi {
    pub fn pair_to_vec(&self, f_w: &Matrix, f_v: &Matrix) -> Vec<Rational> {
        let mut v: Vec<Rational> = Vec::with_capacity(self.kernel.rows());
        for i in 0..f_w.rows() {
            v.extend_from_slice(f_w.row(i));
        }
        for i in 0..f_v.rows() {
            v.extend_from_slice(f_v.row(i));
        }
        v
    }

    /// Coordinates of `(F, f)` in `basis0`, `None` if `φF ≠ fφ`.
    pub fn coords0(&self, f_w: &Matrix, f_v: &Matrix) -> Option<Vec<Rational>> {
        self.kernel.solve_linear(&self.pair_to_vec(f_w, f_v))
    }

    pub fn element0(&self, c: &[Rational]) -> (Matrix, Matrix) {
        let (w, v) = (self.space.dim_w, self.space.dim_v);
        let mut a = Matrix::zeros(w, w);
        let mut b = Matrix::zeros(v, v);
        for (k, (fw, fv)) in self.basis0.iter().enumerate() {
            if !c[k].is_zero() {
                a = a.add(&fw.scale(&c[k]));
                b = b.add(&fv.scale(&c[k]));
            }
        }
        (a, b)
    }

    pub fn coords1(&self, a: &Matrix) -> Vec<Rational> {
        (0..a.rows()).flat_map(|i| a.row(i).to_vec()).collect()
    }

    pub fn element1(&self, c: &[Rational]) -> Matrix {
        let (w, v) = (self.space.dim_w, self.space.dim_v);
        Matrix::from_flat(w, v, c.to_vec())
    }
}

pub fn gl_phi(space: &TwoVectorSpace) -> GlPhi {
    let (w, v) = (space.dim_w, space.dim_v);
    let phi = &space.phi;
    // (F, f) ↦ φF − fφ on unknowns (F row-major, f row-major)
    let mut cons = Matrix::zeros(v * w, w * w + v * v);
    for i in 0..v {
        for j in 0..w {
            let row = i * w + j;
            for k in 0..w {
                cons[(row, k * w + j)] += &phi[(i, k)];
            }
            for k in 0..v {
                cons[(row, w * w + i * v + k)] -= &phi[(k, j)];
            }
        }
    }
    let kernel_vecs = cons.kernel();
    let kernel = Matrix::from_cols(w * w + v * v, &kernel_vecs);
    let split = |c: &[Rational]| -> (Matrix, Matrix) {
        let fw = Matrix::from_flat(w, w, c[..w * w].to_vec());
        let fv = Matrix::from_flat(v, v, c[w * w..].to_vec());
        (fw, fv)
    };
    let basis0: Vec<(Matrix, Matrix)> = kernel_vecs.iter().map(|c| split(c)).collect();
    let d0 = basis0.len();
    let d1 = w * v;
    let mut gl = GlPhi {
        space: space.clone(),
        xmod: CrossedModuleAlg::from_lie_algebra(LieAlgebra::abelian(0)),
        basis0: basis0.clone(),
        kernel,
    };
    let coords0 = |fw: &Matrix, fv: &Matrix, gl: &GlPhi| gl.coords0(fw, fv).expect("gl(φ)_0 is closed");
    let h = LieAlgebra::from_fn(d0, |i, j| {
        let (a, b) = (&basis0[i], &basis0[j]);
        coords0(&a.0.commutator(&b.0), &a.1.commutator(&b.1), &gl)
    });
    let unit1 = |k: usize| gl.element1(&unit_vec(d1, k));
    let g = LieAlgebra::from_fn(d1, |i, j| {
        let (a, b) = (unit1(i), unit1(j));
        gl.coords1(&a.mul(phi).mul(&b).sub(&b.mul(phi).mul(&a)))
    });
    let mu_cols: Vec<Vec<Rational>> = (0..d1)
        .map(|k| {
            let a = unit1(k);
            coords0(&a.mul(phi), &phi.mul(&a), &gl)
        })
        .collect();
    let mu = Matrix::from_cols(d0, &mu_cols);
    let action = basis0
        .iter()
        .map(|(fw, fv)| {
            let cols: Vec<Vec<Rational>> =
                (0..d1).map(|k| gl.coords1(&fw.mul(&unit1(k)).sub(&unit1(k).mul(fv)))).collect();
            Matrix::from_cols(d1, &cols)
        })
        .collect();
    gl.xmod = CrossedModuleAlg::new(g, h, mu, action);
    gl
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::int;

    fn line_action() -> CrossedModuleAlg {
        // g = h = Q, μ = 0, L_y x = yx
        CrossedModuleAlg::new(
            LieAlgebra::abelian(1),
            LieAlgebra::abelian(1),
            Matrix::zeros(1, 1),
            vec![Matrix::identity(1)],
        )
    }

    fn ideal_inclusion() -> CrossedModuleAlg {
        xmod_from_quadruple(&LieAlgebra::aff1(), &[1], 0, &[Matrix::zeros(0, 0), Matrix::zeros(0, 0)]).unwrap()
    }

    #[test]
    fn basic_crossed_modules_validate() {
        assert!(CrossedModuleAlg::from_lie_algebra(LieAlgebra::sl2()).validate().is_empty());
        assert!(ideal_inclusion().validate().is_empty());
        let id = CrossedModuleAlg::new(
            LieAlgebra::abelian(1),
            LieAlgebra::abelian(1),
            Matrix::identity(1),
            vec![Matrix::zeros(1, 1)],
        );
        assert!(id.validate().is_empty());
        assert!(line_action().validate().is_empty());
    }

    #[test]
    fn peiffer_violation_is_named() {
        let x = CrossedModuleAlg::new(
            LieAlgebra::abelian(1),
            LieAlgebra::abelian(1),
            Matrix::identity(1),
            vec![Matrix::identity(1)],
        );
        let d = x.validate();
        assert!(d.iter().any(|v| v.axiom == "peiffer"));
    }

    #[test]
    fn arrows_of_line_action() {
        let a = lie2_arrows(&line_action()).unwrap();
        // [(x0,y0),(x1,y1)] = (y0 x1 − y1 x0, 0); [e_x, e_y] = (−1, 0)
        assert_eq!(a.bracket_basis(0, 1), &[int(-1), int(0)]);
        let inc = lie2_arrows(&ideal_inclusion()).unwrap();
        assert_eq!(inc.dim(), 3);
        assert!(inc.validate().is_empty());
        let h = lie2_arrows(&CrossedModuleAlg::from_lie_algebra(LieAlgebra::aff1())).unwrap();
        assert_eq!(h, LieAlgebra::aff1());
    }

    #[test]
    fn quadruple_examples() {
        let h = LieAlgebra::aff1();
        let rho = vec![Matrix::identity(1), Matrix::zeros(1, 1)];
        let x = xmod_from_quadruple(&h, &[1], 1, &rho).unwrap();
        assert_eq!(x.dim_g(), 2);
        assert!(x.validate().is_empty());
        let rep = structure_report(&x);
        assert!(rep.ok());
        assert_eq!(rep.kernel_basis, vec![vec![int(1), int(0)]]);
        assert_eq!(rep.induced_rep, vec![Matrix::identity(1), Matrix::zeros(1, 1)]);
        assert_eq!(xmod_from_quadruple(&h, &[0], 0, &[Matrix::zeros(0, 0), Matrix::zeros(0, 0)]), Err(Lie2Error::NotIdeal(1, 0)));
        let bad = vec![Matrix::zeros(1, 1), Matrix::identity(1)];
        assert!(xmod_from_quadruple(&h, &[1], 1, &bad).is_err());
    }

    #[test]
    fn nerve_and_faces() {
        let x = ideal_inclusion();
        for p in 0..4 {
            assert!(nerve_algebra(&x, p).algebra.validate().is_empty());
        }
        assert_eq!(nerve_algebra(&x, 1).algebra, lie2_arrows(&x).unwrap());
        let (faces, t) = simplicial_maps(&x, 0);
        assert_eq!(faces[0], Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(faces[1], Matrix::from_i64(&[&[0, 1, 0], &[1, 0, 1]]));
        assert_eq!(t, Matrix::identity(2));
        let (f1, _) = simplicial_maps(&line_action(), 1);
        assert_eq!(f1[1], Matrix::from_i64(&[&[1, 1, 0], &[0, 0, 1]]));
    }

    #[test]
    fn faces_are_homomorphisms_and_simplicial() {
        let x = ideal_inclusion();
        for p in 0..3 {
            let src = nerve_algebra(&x, p + 1).algebra;
            let dst = nerve_algebra(&x, p).algebra;
            let (faces, _) = simplicial_maps(&x, p);
            for f in &faces {
                for i in 0..src.dim() {
                    for j in 0..src.dim() {
                        let lhs = f.mul_vec(src.bracket_basis(i, j));
                        let rhs = dst.bracket(&f.col(i), &f.col(j));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
            if p >= 1 {
                let (lower, _) = simplicial_maps(&x, p - 1);
                for k in 0..=p {
                    for j in k..=p {
                        assert_eq!(lower[j].mul(&faces[k]), lower[k].mul(&faces[j + 1]));
                    }
                }
            }
        }
    }

    #[test]
    fn gl_phi_examples() {
        let one = gl_phi(&TwoVectorSpace::new(Matrix::identity(1)));
        assert_eq!((one.xmod.dim_h(), one.xmod.dim_g()), (1, 1));
        assert!(one.xmod.g.is_abelian());
        assert!(one.xmod.validate().is_empty());
        let row = gl_phi(&TwoVectorSpace::new(Matrix::from_i64(&[&[1, 0]])));
        assert_eq!((row.xmod.dim_h(), row.xmod.dim_g()), (3, 2));
        assert!(row.xmod.validate().is_empty());
        // [A, B]_φ = (0, a₂b₁ − a₁b₂) with A = (a₁, a₂)ᵀ
        assert_eq!(row.xmod.g.bracket_basis(0, 1), &[int(0), int(-1)]);
        let z = gl_phi(&TwoVectorSpace::zero(2, 1));
        assert_eq!(z.xmod.dim_h(), 5);
        assert!(z.xmod.g.is_abelian() && z.xmod.mu.is_zero());
        assert!(z.xmod.validate().is_empty());
    }
}
