//! Lie algebras by structure constants, representations and the
//! Chevalley-Eilenberg differential.

use crate::diag::{Diagnostics, Violation};
use crate::numeric::{binom, int, sort_sign, subset_rank, subsets, zero, Matrix, Rational};
use num_traits::Zero;

/// Finite-dimensional Lie algebra. `table[i * dim + j]` holds `[e_i, e_j]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    table: Vec<Vec<Rational>>,
}

impl LieAlgebra {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, table: vec![vec![zero(); dim]; dim * dim] }
    }

    /// Builds the algebra from `f(i, j) = [e_i, e_j]`, queried for `i < j` only.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vec<Rational>) -> Self {
        let mut g = LieAlgebra::abelian(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "bracket vector has wrong length");
                g.table[j * dim + i] = v.iter().map(|c| -c).collect();
                g.table[i * dim + j] = v;
            }
        }
        g
    }

    /// Sparse constructor: each entry `(i, j, v)` with `i < j` sets `[e_i, e_j] = v`.
    pub fn from_brackets(dim: usize, entries: &[(usize, usize, Vec<Rational>)]) -> Self {
        let mut g = LieAlgebra::abelian(dim);
        for (i, j, v) in entries {
            assert!(i < j && *j < dim, "bracket indices must satisfy i < j < dim");
            assert_eq!(v.len(), dim);
            g.table[j * dim + i] = v.iter().map(|c| -c).collect();
            g.table[i * dim + j] = v.clone();
        }
        g
    }

    /// `[e0, e1] = e1`.
    pub fn aff1() -> Self {
        LieAlgebra::from_brackets(2, &[(0, 1, vec![int(0), int(1)])])
    }

    /// `[e0, e1] = e2`.
    pub fn heisenberg() -> Self {
        LieAlgebra::from_brackets(3, &[(0, 1, vec![int(0), int(0), int(1)])])
    }

    /// `[h, e] = 2e, [h, f] = -2f, [e, f] = h` on the basis `(h, e, f)`.
    pub fn sl2() -> Self {
        LieAlgebra::from_brackets(
            3,
            &[
                (0, 1, vec![int(0), int(2), int(0)]),
                (0, 2, vec![int(0), int(0), int(-2)]),
                (1, 2, vec![int(1), int(0), int(0)]),
            ],
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.table[i * self.dim + j]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad_{e_i}`.
    pub fn ad(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|k| self.bracket_basis(i, k).to_vec()).collect();
        Matrix::from_cols(self.dim, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|v| v.iter().all(Zero::is_zero))
    }

    /// Direct sum `self ⊕ other` with `other` placed after `self`.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let (a, b) = (self.dim, other.dim);
        LieAlgebra::from_fn(a + b, |i, j| {
            let mut v = vec![zero(); a + b];
            if j < a {
                v[..a].clone_from_slice(self.bracket_basis(i, j));
            } else if i >= a {
                v[a..].clone_from_slice(other.bracket_basis(i - a, j - a));
            }
            v
        })
    }

    /// Jacobi identity on every basis triple.
    pub fn validate(&self) -> Diagnostics {
        let n = self.dim;
        let mut out = Vec::new();
        let unit = |i: usize| {
            let mut v = vec![zero(); n];
            v[i] = int(1);
            v
        };
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&unit(i), self.bracket_basis(j, k));
                    let b = self.bracket(&unit(j), self.bracket_basis(k, i));
                    let c = self.bracket(&unit(k), self.bracket_basis(i, j));
                    if a.iter().zip(&b).zip(&c).any(|((x, y), z)| !(x + y + z).is_zero()) {
                        out.push(Violation::new("jacobi", vec![i, j, k], ""));
                    }
                }
            }
        }
        out
    }
}

pub fn validate_lie_algebra(g: &LieAlgebra) -> Diagnostics {
    g.validate()
}

/// Representation of a Lie algebra, one matrix per basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub algebra: LieAlgebra,
    pub space_dim: usize,
    pub action: Vec<Matrix>,
}

impl Representation {
    pub fn new(algebra: LieAlgebra, space_dim: usize, action: Vec<Matrix>) -> Self {
        assert_eq!(action.len(), algebra.dim(), "one matrix per basis vector required");
        for m in &action {
            assert_eq!((m.rows(), m.cols()), (space_dim, space_dim), "action matrix has wrong shape");
        }
        Representation { algebra, space_dim, action }
    }

    pub fn trivial(algebra: LieAlgebra, space_dim: usize) -> Self {
        let action = vec![Matrix::zeros(space_dim, space_dim); algebra.dim()];
        Representation { algebra, space_dim, action }
    }

    pub fn adjoint(algebra: LieAlgebra) -> Self {
        let action = (0..algebra.dim()).map(|i| algebra.ad(i)).collect();
        Representation { space_dim: algebra.dim(), algebra, action }
    }

    /// `ρ(x)` for an arbitrary coordinate vector `x`.
    pub fn act(&self, x: &[Rational]) -> Matrix {
        combine(&self.action, x, self.space_dim, self.space_dim)
    }

    pub fn validate(&self) -> Diagnostics {
        let mut out = Vec::new();
        let n = self.algebra.dim();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(self.algebra.bracket_basis(i, j));
                let rhs = self.action[i].commutator(&self.action[j]);
                if lhs != rhs {
                    out.push(Violation::new("representation", vec![i, j], "ρ[x,y] ≠ [ρx,ρy]"));
                }
            }
        }
        out
    }
}

pub fn validate_representation(r: &Representation) -> Diagnostics {
    r.validate()
}

/// `Σ x_i m_i`, a zero `rows × cols` matrix when `x` vanishes.
pub fn combine(ms: &[Matrix], x: &[Rational], rows: usize, cols: usize) -> Matrix {
    let mut acc = Matrix::zeros(rows, cols);
    for (m, c) in ms.iter().zip(x) {
        if !c.is_zero() {
            acc = acc.add(&m.scale(c));
        }
    }
    acc
}

pub fn ce_dim(dim: usize, q: usize, vdim: usize) -> usize {
    binom(dim, q) * vdim
}

/// Matrix of the Chevalley-Eilenberg differential
/// `Λ^q g* ⊗ V → Λ^{q+1} g* ⊗ V`. Coordinates are ordered as
/// `rank(I) * dim V + v` with `I` running over increasing tuples.
pub fn ce_differential(r: &Representation, q: usize) -> Matrix {
    let n = r.algebra.dim();
    let vd = r.space_dim;
    let mut d = Matrix::zeros(ce_dim(n, q + 1, vd), ce_dim(n, q, vd));
    if d.rows() == 0 || d.cols() == 0 {
        return d;
    }
    for (row_rank, a) in subsets(n, q + 1).into_iter().enumerate() {
        // Σ_j (-1)^j ρ(a_j) ω(a(j))
        for j in 0..=q {
            let mut rest = a.clone();
            rest.remove(j);
            let col = subset_rank(n, &rest);
            let rho = &r.action[a[j]];
            for u in 0..vd {
                for v in 0..vd {
                    let c = &rho[(u, v)];
                    if c.is_zero() {
                        continue;
                    }
                    if j % 2 == 0 {
                        d[(row_rank * vd + u, col * vd + v)] += c;
                    } else {
                        d[(row_rank * vd + u, col * vd + v)] -= c;
                    }
                }
            }
        }
        // Σ_{m<n} (-1)^{m+n} ω([a_m, a_n], a(m, n))
        for m in 0..=q {
            for k in m + 1..=q {
                let br = r.algebra.bracket_basis(a[m], a[k]);
                let mut rest = a.clone();
                rest.remove(k);
                rest.remove(m);
                for (e, c) in br.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut idx = Vec::with_capacity(q);
                    idx.push(e);
                    idx.extend_from_slice(&rest);
                    let Some(neg) = sort_sign(&mut idx) else { continue };
                    let col = subset_rank(n, &idx);
                    let flip = neg ^ ((m + k) % 2 == 1);
                    for u in 0..vd {
                        if flip {
                            d[(row_rank * vd + u, col * vd + u)] -= c;
                        } else {
                            d[(row_rank * vd + u, col * vd + u)] += c;
                        }
                    }
                }
            }
        }
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::frac;

    #[test]
    fn standard_algebras_are_valid() {
        for g in [LieAlgebra::abelian(3), LieAlgebra::aff1(), LieAlgebra::heisenberg(), LieAlgebra::sl2()] {
            assert!(g.validate().is_empty());
        }
    }

    #[test]
    fn broken_jacobi_is_flagged() {
        let g = LieAlgebra::from_brackets(
            3,
            &[(0, 1, vec![int(0), int(0), int(1)]), (0, 2, vec![int(1), int(0), int(0)])],
        );
        let d = g.validate();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].witness, vec![0, 1, 2]);
    }

    #[test]
    fn aff1_representation_on_plane() {
        let r = Representation::new(
            LieAlgebra::aff1(),
            2,
            vec![Matrix::from_i64(&[&[1, 0], &[0, 0]]), Matrix::from_i64(&[&[0, 1], &[0, 0]])],
        );
        assert!(r.validate().is_empty());
        // diag(0, 1) commutes to minus the second generator
        let flipped = Representation::new(
            LieAlgebra::aff1(),
            2,
            vec![Matrix::from_i64(&[&[0, 0], &[0, 1]]), Matrix::from_i64(&[&[0, 1], &[0, 0]])],
        );
        assert_eq!(flipped.validate().len(), 1);
        let bad = Representation::new(
            LieAlgebra::aff1(),
            2,
            vec![Matrix::zeros(2, 2), Matrix::from_i64(&[&[0, 1], &[0, 0]])],
        );
        assert_eq!(bad.validate().len(), 1);
    }

    #[test]
    fn ce_examples() {
        let d = ce_differential(&Representation::trivial(LieAlgebra::aff1(), 1), 1);
        assert_eq!(d, Matrix::from_i64(&[&[0, -1]]));
        let r = Representation::new(LieAlgebra::abelian(1), 1, vec![Matrix::from_i64(&[&[1]])]);
        assert_eq!(ce_differential(&r, 0), Matrix::from_i64(&[&[1]]));
        let t = Representation::trivial(LieAlgebra::abelian(3), 2);
        for q in 0..4 {
            assert!(ce_differential(&t, q).is_zero());
        }
    }

    #[test]
    fn ce_squares_to_zero_for_adjoint_sl2() {
        let r = Representation::adjoint(LieAlgebra::sl2());
        for q in 0..3 {
            let dd = ce_differential(&r, q + 1).mul(&ce_differential(&r, q));
            assert!(dd.is_zero(), "q = {q}");
        }
    }

    #[test]
    fn bracket_is_bilinear() {
        let g = LieAlgebra::heisenberg();
        let x = vec![frac(1, 2), int(3), int(0)];
        let y = vec![int(2), frac(-1, 3), int(5)];
        assert_eq!(g.bracket(&x, &y), vec![int(0), int(0), frac(-1, 6) - int(6)]);
    }
}
