//! 2-representations of Lie 2-algebras on 2-vector spaces.

use crate::diag::{Diagnostics, Violation};
use crate::lie2::{lie2_arrows, unit_vec, CrossedModuleAlg, TwoVectorSpace};
use crate::liealg::{combine, LieAlgebra, Representation};
use crate::numeric::{zero, Matrix, Rational};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TwoRepError {
    #[error("invalid 2-representation: {0:?}")]
    Invalid(Diagnostics),
}

/// `ρ₁(e_i): V → W` per basis vector of `g`, and the two representations
/// `ρ₀¹` on `W` and `ρ₀⁰` on `V` of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoRep {
    pub source: CrossedModuleAlg,
    pub target: TwoVectorSpace,
    pub rho1: Vec<Matrix>,
    pub rho0w: Vec<Matrix>,
    pub rho0v: Vec<Matrix>,
}

impl TwoRep {
    pub fn new(
        source: CrossedModuleAlg,
        target: TwoVectorSpace,
        rho1: Vec<Matrix>,
        rho0w: Vec<Matrix>,
        rho0v: Vec<Matrix>,
    ) -> Self {
        let (w, v) = (target.dim_w, target.dim_v);
        assert_eq!(rho1.len(), source.dim_g());
        assert_eq!(rho0w.len(), source.dim_h());
        assert_eq!(rho0v.len(), source.dim_h());
        assert!(rho1.iter().all(|m| (m.rows(), m.cols()) == (w, v)), "ρ₁ must map V to W");
        assert!(rho0w.iter().all(|m| (m.rows(), m.cols()) == (w, w)));
        assert!(rho0v.iter().all(|m| (m.rows(), m.cols()) == (v, v)));
        TwoRep { source, target, rho1, rho0w, rho0v }
    }

    /// The representation with all components zero.
    pub fn trivial(source: CrossedModuleAlg, target: TwoVectorSpace) -> Self {
        let (w, v) = (target.dim_w, target.dim_v);
        let (dg, dh) = (source.dim_g(), source.dim_h());
        TwoRep {
            rho1: vec![Matrix::zeros(w, v); dg],
            rho0w: vec![Matrix::zeros(w, w); dh],
            rho0v: vec![Matrix::zeros(v, v); dh],
            source,
            target,
        }
    }

    pub fn dim_w(&self) -> usize {
        self.target.dim_w
    }

    pub fn dim_v(&self) -> usize {
        self.target.dim_v
    }

    pub fn phi(&self) -> &Matrix {
        &self.target.phi
    }

    pub fn rho1_at(&self, x: &[Rational]) -> Matrix {
        combine(&self.rho1, x, self.dim_w(), self.dim_v())
    }

    pub fn rho0w_at(&self, y: &[Rational]) -> Matrix {
        combine(&self.rho0w, y, self.dim_w(), self.dim_w())
    }

    pub fn rho0v_at(&self, y: &[Rational]) -> Matrix {
        combine(&self.rho0v, y, self.dim_v(), self.dim_v())
    }

    pub fn rep_w(&self) -> Representation {
        Representation::new(self.source.h.clone(), self.dim_w(), self.rho0w.clone())
    }

    pub fn rep_v(&self) -> Representation {
        Representation::new(self.source.h.clone(), self.dim_v(), self.rho0v.clone())
    }

    pub fn validate(&self) -> Diagnostics {
        let x = &self.source;
        let phi = self.phi();
        let mut out = Vec::new();
        for v in self.rep_w().validate() {
            out.push(Violation::new("ρ₀¹ representation", v.witness, v.detail));
        }
        for v in self.rep_v().validate() {
            out.push(Violation::new("ρ₀⁰ representation", v.witness, v.detail));
        }
        for y in 0..x.dim_h() {
            if phi.mul(&self.rho0w[y]) != self.rho0v[y].mul(phi) {
                out.push(Violation::new("object compatibility", vec![y], "φρ₀¹(y) ≠ ρ₀⁰(y)φ"));
            }
        }
        for i in 0..x.dim_g() {
            let mx = x.mu.col(i);
            if self.rho0v_at(&mx) != phi.mul(&self.rho1[i]) {
                out.push(Violation::new("ρ₀⁰(μx) = φρ₁(x)", vec![i], ""));
            }
            if self.rho0w_at(&mx) != self.rho1[i].mul(phi) {
                out.push(Violation::new("ρ₀¹(μx) = ρ₁(x)φ", vec![i], ""));
            }
        }
        for i in 0..x.dim_g() {
            for j in i + 1..x.dim_g() {
                let lhs = self.rho1_at(x.g.bracket_basis(i, j));
                let a = self.rho1[i].mul(phi).mul(&self.rho1[j]);
                let b = self.rho1[j].mul(phi).mul(&self.rho1[i]);
                if lhs != a.sub(&b) {
                    out.push(Violation::new("ρ₁ homomorphism", vec![i, j], ""));
                }
            }
        }
        for y in 0..x.dim_h() {
            for i in 0..x.dim_g() {
                let lhs = self.rho1_at(&x.action[y].col(i));
                let rhs = self.rho0w[y].mul(&self.rho1[i]).sub(&self.rho1[i].mul(&self.rho0v[y]));
                if lhs != rhs {
                    out.push(Violation::new("action compatibility", vec![y, i], "ρ₁(L_y x) ≠ ρ₀¹(y)ρ₁(x) − ρ₁(x)ρ₀⁰(y)"));
                }
            }
        }
        out
    }

    fn checked(&self) -> Result<(), TwoRepError> {
        let mut d = self.source.validate();
        d.extend(self.validate());
        if d.is_empty() {
            Ok(())
        } else {
            Err(TwoRepError::Invalid(d))
        }
    }
}

pub fn validate_two_rep(r: &TwoRep) -> Diagnostics {
    r.validate()
}

/// Adjoint 2-representation on `μ: g → h`.
pub fn adjoint_rep(x: &CrossedModuleAlg) -> TwoRep {
    let (dg, dh) = (x.dim_g(), x.dim_h());
    let rho1 = (0..dg)
        .map(|i| {
            let cols: Vec<Vec<Rational>> = (0..dh).map(|k| x.action[k].col(i).iter().map(|c| -c).collect()).collect();
            Matrix::from_cols(dg, &cols)
        })
        .collect();
    let rho0v = (0..dh).map(|y| x.h.ad(y)).collect();
    TwoRep::new(x.clone(), TwoVectorSpace::new(x.mu.clone()), rho1, x.action.clone(), rho0v)
}

/// Honest representation of `g ⊕_L h` on `W ⊕ V`.
pub fn bar_rho(r: &TwoRep) -> Result<Representation, TwoRepError> {
    r.checked()?;
    let x = &r.source;
    let (w, v) = (r.dim_w(), r.dim_v());
    let mut action = Vec::with_capacity(x.dim_g() + x.dim_h());
    for i in 0..x.dim_g() {
        let mut m = Matrix::zeros(w + v, w + v);
        m.set_block(0, 0, &r.rho0w_at(&x.mu.col(i)));
        m.set_block(0, w, &r.rho1[i]);
        action.push(m);
    }
    for y in 0..x.dim_h() {
        let mut m = Matrix::zeros(w + v, w + v);
        m.set_block(0, 0, &r.rho0w[y]);
        m.set_block(w, w, &r.rho0v[y]);
        action.push(m);
    }
    let arrows = lie2_arrows(x).expect("source validated above");
    Ok(Representation::new(arrows, w + v, action))
}

/// `g ⊕ W → h ⊕ V` with `μ × φ`; bases are `(g, W)` and `(h, V)`.
pub fn semidirect_2alg(x: &CrossedModuleAlg, r: &TwoRep) -> Result<CrossedModuleAlg, TwoRepError> {
    r.checked()?;
    let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), r.dim_w(), r.dim_v());
    let g = LieAlgebra::from_fn(dg + w, |a, b| {
        let mut out = vec![zero(); dg + w];
        if b < dg {
            out[..dg].clone_from_slice(x.g.bracket_basis(a, b));
        } else if a < dg {
            // [(x,0),(0,w)] = (0, ρ₀¹(μx)w)
            let col = r.rho0w_at(&x.mu.col(a)).col(b - dg);
            out[dg..].clone_from_slice(&col);
        }
        out
    });
    let h = LieAlgebra::from_fn(dh + v, |a, b| {
        let mut out = vec![zero(); dh + v];
        if b < dh {
            out[..dh].clone_from_slice(x.h.bracket_basis(a, b));
        } else if a < dh {
            out[dh..].clone_from_slice(&r.rho0v[a].col(b - dh));
        }
        out
    });
    let mut mu = Matrix::zeros(dh + v, dg + w);
    mu.set_block(0, 0, &x.mu);
    mu.set_block(dh, dg, r.phi());
    let mut action = Vec::with_capacity(dh + v);
    for y in 0..dh {
        let mut m = Matrix::zeros(dg + w, dg + w);
        m.set_block(0, 0, &x.action[y]);
        m.set_block(dg, dg, &r.rho0w[y]);
        action.push(m);
    }
    for k in 0..v {
        let mut m = Matrix::zeros(dg + w, dg + w);
        let ev = unit_vec(v, k);
        for i in 0..dg {
            let col = r.rho1[i].mul_vec(&ev);
            for (t, c) in col.into_iter().enumerate() {
                m[(dg + t, i)] = -c;
            }
        }
        action.push(m);
    }
    Ok(CrossedModuleAlg::new(g, h, mu, action))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie2::xmod_from_quadruple;

    fn line_action() -> CrossedModuleAlg {
        CrossedModuleAlg::new(LieAlgebra::abelian(1), LieAlgebra::abelian(1), Matrix::zeros(1, 1), vec![Matrix::identity(1)])
    }

    fn ideal_inclusion() -> CrossedModuleAlg {
        xmod_from_quadruple(&LieAlgebra::aff1(), &[1], 0, &[Matrix::zeros(0, 0), Matrix::zeros(0, 0)]).unwrap()
    }

    #[test]
    fn trivial_and_unit_reps() {
        let x = ideal_inclusion();
        let t = TwoRep::trivial(x.clone(), TwoVectorSpace::new(Matrix::identity(2)));
        assert!(t.validate().is_empty());
        // W = 0: a representation of h vanishing on μ(g)
        let v = TwoRep::new(
            x.clone(),
            TwoVectorSpace::zero(0, 1),
            vec![Matrix::zeros(0, 1)],
            vec![Matrix::zeros(0, 0); 2],
            vec![Matrix::identity(1), Matrix::zeros(1, 1)],
        );
        assert!(v.validate().is_empty());
        let mut bad = t.clone();
        bad.rho0v[0] = Matrix::from_i64(&[&[1, 0], &[0, 0]]);
        assert!(bad.validate().iter().any(|d| d.axiom == "object compatibility"));
    }

    #[test]
    fn adjoint_of_line_action() {
        let r = adjoint_rep(&line_action());
        assert!(r.validate().is_empty());
        assert_eq!(r.rho1[0], Matrix::from_i64(&[&[-1]]));
        assert_eq!(r.rho0w[0], Matrix::identity(1));
        assert!(r.rho0v[0].is_zero());
        let b = bar_rho(&r).unwrap();
        assert!(b.validate().is_empty());
        assert!(adjoint_rep(&ideal_inclusion()).validate().is_empty());
    }

    #[test]
    fn semidirect_examples() {
        let x = ideal_inclusion();
        let empty = TwoRep::trivial(x.clone(), TwoVectorSpace::zero(0, 0));
        assert_eq!(semidirect_2alg(&x, &empty).unwrap(), x);
        let t = TwoRep::trivial(x.clone(), TwoVectorSpace::zero(1, 1));
        let s = semidirect_2alg(&x, &t).unwrap();
        assert!(s.validate().is_empty());
        assert_eq!((s.dim_g(), s.dim_h()), (2, 3));
        let ad = adjoint_rep(&x);
        assert!(semidirect_2alg(&x, &ad).unwrap().validate().is_empty());
        let ad = adjoint_rep(&line_action());
        assert!(semidirect_2alg(&line_action(), &ad).unwrap().validate().is_empty());
    }

    #[test]
    fn bar_rho_trivial_is_zero() {
        let x = ideal_inclusion();
        let t = TwoRep::trivial(x, TwoVectorSpace::new(Matrix::identity(2)));
        assert!(bar_rho(&t).unwrap().action.iter().all(Matrix::is_zero));
    }
}
