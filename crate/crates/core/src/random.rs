//! Seeded generators of small random structures for property tests.

use crate::homalg::{ChainMap, FinComplex};
use crate::lie2::{xmod_from_quadruple, CrossedModuleAlg, TwoVectorSpace};
use crate::liealg::{LieAlgebra, Representation};
use crate::numeric::{int, zero, Matrix, Rational};
use crate::tworep::{adjoint_rep, TwoRep};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer in `-2..=2`, zero with probability about one half.
pub fn small<R: Rng>(rng: &mut R) -> Rational {
    if rng.gen_bool(0.5) {
        zero()
    } else {
        int(*[-2, -1, 1, 2].choose(rng).unwrap())
    }
}

pub fn matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_flat(rows, cols, (0..rows * cols).map(|_| small(rng)).collect())
}

pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> (Matrix, Matrix) {
    loop {
        let mut p = matrix(rng, n, n);
        for i in 0..n {
            if rng.gen_bool(0.5) {
                p[(i, i)] += int(1);
            }
        }
        if let Some(q) = p.inverse() {
            return (p, q);
        }
    }
}

/// Same algebra written in the basis given by the columns of `p`.
pub fn change_basis(g: &LieAlgebra, p: &Matrix, pinv: &Matrix) -> LieAlgebra {
    LieAlgebra::from_fn(g.dim(), |i, j| pinv.mul_vec(&g.bracket(&p.col(i), &p.col(j))))
}

/// Lie algebra of dimension `n ≤ 3` in a random basis.
pub fn lie_algebra<R: Rng>(rng: &mut R, n: usize) -> LieAlgebra {
    let base = match n {
        2 if rng.gen_bool(0.6) => LieAlgebra::aff1(),
        3 => match rng.gen_range(0..4) {
            0 => LieAlgebra::abelian(3),
            1 => LieAlgebra::heisenberg(),
            2 => LieAlgebra::sl2(),
            _ => LieAlgebra::aff1().direct_sum(&LieAlgebra::abelian(1)),
        },
        _ => LieAlgebra::abelian(n),
    };
    let (p, q) = invertible(rng, n);
    change_basis(&base, &p, &q)
}

/// Linear functionals vanishing on `[h, h]` and on the given basis vectors.
fn characters(h: &LieAlgebra, killed: &[usize]) -> Vec<Vec<Rational>> {
    let n = h.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            rows.push(h.bracket_basis(i, j).to_vec());
        }
    }
    for &k in killed {
        let mut e = vec![zero(); n];
        e[k] = int(1);
        rows.push(e);
    }
    if rows.is_empty() {
        return Matrix::identity(n).kernel();
    }
    Matrix::from_rows(rows).kernel()
}

/// Commuting representation `y ↦ λ₁(y)M + λ₂(y)M²` built from characters
/// that vanish on `killed`, conjugated by a random change of basis.
pub fn abelian_rep<R: Rng>(rng: &mut R, h: &LieAlgebra, n: usize, killed: &[usize]) -> Vec<Matrix> {
    let chars = characters(h, killed);
    let m = matrix(rng, n, n);
    let m2 = m.mul(&m);
    let mut pick = || -> Vec<Rational> {
        let mut l = vec![zero(); h.dim()];
        for c in &chars {
            let s = small(rng);
            for (t, v) in l.iter_mut().zip(c) {
                *t += &s * v;
            }
        }
        l
    };
    let (l1, l2) = (pick(), pick());
    (0..h.dim()).map(|y| m.scale(&l1[y]).add(&m2.scale(&l2[y]))).collect()
}

/// Representation of `h` on a space of dimension `n`.
pub fn representation<R: Rng>(rng: &mut R, h: &LieAlgebra, n: usize) -> Vec<Matrix> {
    let base = if n == h.dim() && n > 0 && !h.is_abelian() && rng.gen_bool(0.4) {
        Representation::adjoint(h.clone()).action
    } else if n == 0 {
        vec![Matrix::zeros(0, 0); h.dim()]
    } else {
        abelian_rep(rng, h, n, &[])
    };
    if n == 0 {
        return base;
    }
    let (p, q) = invertible(rng, n);
    base.iter().map(|m| p.mul(m).mul(&q)).collect()
}

/// Crossed module from a random quadruple `(h, I, V, ρ)` with `dim h = dh`
/// and ideals spanned by basis vectors.
pub fn quadruple_xmod<R: Rng>(rng: &mut R, dh: usize, max_v: usize) -> CrossedModuleAlg {
    let (h, ideals): (LieAlgebra, Vec<Vec<usize>>) = match dh {
        0 => (LieAlgebra::abelian(0), vec![vec![]]),
        1 => (LieAlgebra::abelian(1), vec![vec![], vec![0]]),
        2 => {
            if rng.gen_bool(0.5) {
                (LieAlgebra::aff1(), vec![vec![], vec![1], vec![0, 1]])
            } else {
                (LieAlgebra::abelian(2), vec![vec![], vec![0], vec![1], vec![0, 1]])
            }
        }
        _ => match rng.gen_range(0..4) {
            0 => (LieAlgebra::abelian(3), vec![vec![], vec![0], vec![1, 2], vec![0, 1, 2]]),
            1 => (LieAlgebra::heisenberg(), vec![vec![], vec![2], vec![1, 2], vec![0, 2], vec![0, 1, 2]]),
            2 => (LieAlgebra::sl2(), vec![vec![], vec![0, 1, 2]]),
            _ => (
                LieAlgebra::aff1().direct_sum(&LieAlgebra::abelian(1)),
                vec![vec![], vec![1], vec![2], vec![1, 2], vec![0, 1, 2]],
            ),
        },
    };
    let ideal = ideals.choose(rng).unwrap().clone();
    let vdim = rng.gen_range(0..=max_v);
    let rho = abelian_rep(rng, &h, vdim, &ideal);
    xmod_from_quadruple(&h, &ideal, vdim, &rho).expect("generated quadruple is valid")
}

/// Crossed module with `dim g, dim h ≤ max`.
pub fn xmod<R: Rng>(rng: &mut R, max: usize) -> CrossedModuleAlg {
    let dh = rng.gen_range(0..=max);
    if rng.gen_bool(0.2) {
        // g = h, μ = id, adjoint action
        let h = lie_algebra(rng, dh);
        let ad = Representation::adjoint(h.clone()).action;
        return CrossedModuleAlg::new(h.clone(), h, Matrix::identity(dh), ad);
    }
    if rng.gen_bool(0.5) {
        // μ = 0 with abelian g and any h-action
        let h = lie_algebra(rng, dh);
        let dg = rng.gen_range(0..=max);
        let action = representation(rng, &h, dg);
        CrossedModuleAlg::new(LieAlgebra::abelian(dg), h, Matrix::zeros(dh, dg), action)
    } else {
        loop {
            let x = quadruple_xmod(rng, dh, max);
            if x.dim_g() <= max {
                return x;
            }
        }
    }
}

/// Solves the linear constraints on `ρ₁` for fixed `ρ₀` and `φ`, picking a
/// random solution. `None` when the affine system is infeasible.
pub fn solve_rho1<R: Rng>(
    rng: &mut R,
    x: &CrossedModuleAlg,
    phi: &Matrix,
    rho0w: &[Matrix],
    rho0v: &[Matrix],
) -> Option<Vec<Matrix>> {
    let (dg, dh) = (x.dim_g(), x.dim_h());
    let (w, v) = (phi.cols(), phi.rows());
    let nunk = dg * w * v;
    let var = |i: usize, a: usize, b: usize| i * w * v + a * v + b;
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    let comb = |ms: &[Matrix], c: &[Rational], n: usize| crate::liealg::combine(ms, c, n, n);
    for i in 0..dg {
        let mx = x.mu.col(i);
        // ρ₁(x)φ = ρ₀¹(μx)
        let target = comb(rho0w, &mx, w);
        for a in 0..w {
            for b in 0..w {
                let mut r = vec![zero(); nunk];
                for k in 0..v {
                    r[var(i, a, k)] += &phi[(k, b)];
                }
                rows.push(r);
                rhs.push(target[(a, b)].clone());
            }
        }
        // φρ₁(x) = ρ₀⁰(μx)
        let target = comb(rho0v, &mx, v);
        for a in 0..v {
            for b in 0..v {
                let mut r = vec![zero(); nunk];
                for k in 0..w {
                    r[var(i, k, b)] += &phi[(a, k)];
                }
                rows.push(r);
                rhs.push(target[(a, b)].clone());
            }
        }
        // ρ₁(L_y x) − ρ₀¹(y)ρ₁(x) + ρ₁(x)ρ₀⁰(y) = 0
        for y in 0..dh {
            let lx = x.action[y].col(i);
            for a in 0..w {
                for b in 0..v {
                    let mut r = vec![zero(); nunk];
                    for (j, c) in lx.iter().enumerate() {
                        if !c.is_zero() {
                            r[var(j, a, b)] += c;
                        }
                    }
                    for k in 0..w {
                        r[var(i, k, b)] -= &rho0w[y][(a, k)];
                    }
                    for k in 0..v {
                        r[var(i, a, k)] += &rho0v[y][(k, b)];
                    }
                    rows.push(r);
                    rhs.push(zero());
                }
            }
        }
    }
    let sol = if rows.is_empty() {
        vec![zero(); nunk]
    } else {
        let m = Matrix::from_rows(rows);
        let mut s = m.solve_linear(&rhs)?;
        for k in m.kernel() {
            let c = small(rng);
            for (t, kv) in s.iter_mut().zip(&k) {
                *t += &c * kv;
            }
        }
        s
    };
    Some(
        (0..dg)
            .map(|i| Matrix::from_flat(w, v, sol[i * w * v..(i + 1) * w * v].to_vec()))
            .collect(),
    )
}

/// Random valid 2-representation of `x` with `dim W, dim V ≤ max`.
pub fn two_rep<R: Rng>(rng: &mut R, x: &CrossedModuleAlg, max: usize) -> TwoRep {
    if x.dim_g() <= max && x.dim_h() <= max && rng.gen_bool(0.2) {
        return adjoint_rep(x);
    }
    for _ in 0..20 {
        let w = rng.gen_range(0..=max);
        let v = rng.gen_range(0..=max);
        let rho0w = representation(rng, &x.h, w);
        let rho0v = representation(rng, &x.h, v);
        // intertwiners φ with φρ₀¹(y) = ρ₀⁰(y)φ
        let mut cons: Vec<Vec<Rational>> = Vec::new();
        for y in 0..x.dim_h() {
            for i in 0..v {
                for j in 0..w {
                    let mut r = vec![zero(); v * w];
                    for k in 0..w {
                        r[i * w + k] += &rho0w[y][(k, j)];
                    }
                    for k in 0..v {
                        r[k * w + j] -= &rho0v[y][(i, k)];
                    }
                    cons.push(r);
                }
            }
        }
        let basis = if cons.is_empty() { Matrix::identity(v * w).kernel() } else { Matrix::from_rows(cons).kernel() };
        let mut flat = vec![zero(); v * w];
        for b in &basis {
            let c = small(rng);
            for (t, bv) in flat.iter_mut().zip(b) {
                *t += &c * bv;
            }
        }
        let phi = Matrix::from_flat(v, w, flat);
        if let Some(rho1) = solve_rho1(rng, x, &phi, &rho0w, &rho0v) {
            let r = TwoRep::new(x.clone(), TwoVectorSpace::new(phi), rho1, rho0w, rho0v);
            let flat = r.rho1.iter().all(|m| m.is_zero());
            if flat && x.dim_g() > 0 && rng.gen_bool(0.7) {
                continue;
            }
            if r.validate().is_empty() {
                return r;
            }
        }
    }
    let w = rng.gen_range(0..=max);
    let v = rng.gen_range(0..=max);
    TwoRep::trivial(x.clone(), TwoVectorSpace::new(matrix(rng, v, w)))
}

/// Random valid context with every dimension at most `max`.
pub fn context<R: Rng>(rng: &mut R, max: usize) -> TwoRep {
    let x = xmod(rng, max);
    two_rep(rng, &x, max)
}

/// Complex in degrees `0..len` assembled from spheres `Q[n]` and disks
/// `Q[n] → Q[n+1]`, written in a random basis of each degree.
pub fn complex<R: Rng>(rng: &mut R, len: usize, max_dim: usize) -> FinComplex {
    let mut dims = vec![0usize; len];
    // (degree, is disk, basis index in degree n, basis index in degree n + 1)
    let mut pieces = Vec::new();
    for n in 0..len {
        for _ in 0..rng.gen_range(0..=max_dim.min(2)) {
            let disk = n + 1 < len && rng.gen_bool(0.5);
            if dims[n] >= max_dim || (disk && dims[n + 1] >= max_dim) {
                continue;
            }
            pieces.push((n, disk, dims[n], if disk { dims[n + 1] } else { 0 }));
            dims[n] += 1;
            if disk {
                dims[n + 1] += 1;
            }
        }
    }
    let mut diffs: Vec<Matrix> = (0..len.saturating_sub(1)).map(|n| Matrix::zeros(dims[n + 1], dims[n])).collect();
    for &(n, disk, a, b) in &pieces {
        if disk {
            diffs[n][(b, a)] = int(1);
        }
    }
    let bases: Vec<(Matrix, Matrix)> = dims.iter().map(|&d| invertible(rng, d)).collect();
    let diffs = diffs.iter().enumerate().map(|(n, d)| bases[n + 1].0.mul(d).mul(&bases[n].1)).collect();
    FinComplex::new(0, dims, diffs).expect("spheres and disks form a complex")
}

/// A random element of the space of chain maps `a → b`.
pub fn chain_map_between<R: Rng>(rng: &mut R, a: &FinComplex, b: &FinComplex) -> ChainMap {
    let (lo, hi) = (a.range().0.min(b.range().0), a.range().1.max(b.range().1));
    let degrees: Vec<i64> = (lo..=hi).collect();
    let offs: Vec<usize> = degrees
        .iter()
        .scan(0, |acc, &n| {
            let o = *acc;
            *acc += b.dim(n) * a.dim(n);
            Some(o)
        })
        .collect();
    let unknowns: usize = degrees.iter().map(|&n| b.dim(n) * a.dim(n)).sum();
    // d_B f_n − f_{n+1} d_A = 0, one block of rows per degree
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (k, &n) in degrees.iter().enumerate().take(degrees.len() - 1) {
        let (da, db) = (a.d(n), b.d(n));
        for i in 0..b.dim(n + 1) {
            for j in 0..a.dim(n) {
                let mut row = vec![zero(); unknowns];
                for m in 0..b.dim(n) {
                    row[offs[k] + m * a.dim(n) + j] += &db[(i, m)];
                }
                for m in 0..a.dim(n + 1) {
                    row[offs[k + 1] + i * a.dim(n + 1) + m] -= &da[(m, j)];
                }
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        (0..unknowns).map(|u| (0..unknowns).map(|v| if u == v { int(1) } else { zero() }).collect()).collect()
    } else {
        Matrix::from_rows(rows).kernel()
    };
    let mut x = vec![zero(); unknowns];
    for k in &kernel {
        let c = small(rng);
        for (xi, ki) in x.iter_mut().zip(k) {
            *xi += &c * ki;
        }
    }
    let comps = degrees
        .iter()
        .enumerate()
        .map(|(k, &n)| Matrix::from_flat(b.dim(n), a.dim(n), x[offs[k]..offs[k] + b.dim(n) * a.dim(n)].to_vec()))
        .collect();
    ChainMap::new(a.clone(), b.clone(), comps).expect("kernel elements are chain maps")
}

/// Random chain map between small complexes in degrees `0..3`. Half of the
/// time the target is the source plus acyclic disks and the map includes
/// the source, so quasi-isomorphisms occur often.
pub fn chain_map<R: Rng>(rng: &mut R, max_dim: usize) -> ChainMap {
    let a = complex(rng, 3, max_dim);
    if rng.gen_bool(0.5) {
        let b = complex(rng, 3, max_dim);
        return chain_map_between(rng, &a, &b);
    }
    // b = a ⊕ (disk), in a random basis
    let n = rng.gen_range(0..2usize);
    let dims: Vec<usize> = (0..3).map(|k| a.dim(k as i64) + usize::from(k == n || k == n + 1)).collect();
    let mut incl = Vec::new();
    let mut diffs = Vec::new();
    let bases: Vec<(Matrix, Matrix)> = dims.iter().map(|&d| invertible(rng, d)).collect();
    for k in 0..3i64 {
        let ku = k as usize;
        let i = Matrix::identity(a.dim(k)).vstack(&Matrix::zeros(dims[ku] - a.dim(k), a.dim(k)));
        incl.push(bases[ku].0.mul(&i));
        if k < 2 {
            let mut d = Matrix::zeros(dims[ku + 1], dims[ku]);
            d.set_block(0, 0, &a.d(k));
            if ku == n {
                d[(dims[ku + 1] - 1, dims[ku] - 1)] = int(1);
            }
            diffs.push(bases[ku + 1].0.mul(&d).mul(&bases[ku].1));
        }
    }
    let b = FinComplex::new(0, dims, diffs).expect("sum of complexes");
    ChainMap::new(a, b, incl).expect("inclusion of a summand")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_structures_are_valid() {
        let mut r = rng(7);
        let mut nontrivial = 0;
        for _ in 0..60 {
            let c = context(&mut r, 2);
            assert!(c.source.validate().is_empty());
            assert!(c.validate().is_empty());
            if c.rho1.iter().any(|m| !m.is_zero()) {
                nontrivial += 1;
            }
        }
        assert!(nontrivial > 5, "only {nontrivial} contexts with ρ₁ ≠ 0");
        for _ in 0..30 {
            let x = quadruple_xmod(&mut r, 3, 2);
            assert!(x.validate().is_empty());
        }
        for _ in 0..30 {
            let f = chain_map(&mut r, 2);
            assert!(f.source().range().1 <= 2 && f.target().range().1 <= 2);
        }
    }
}
