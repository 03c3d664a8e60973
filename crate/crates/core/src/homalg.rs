//! Bounded cochain complexes over the rationals, chain maps and mapping cones.

use crate::numeric::{Matrix, Rational};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomalgError {
    #[error("differential in degree {0} has shape {1}x{2}, expected {3}x{4}")]
    Shape(i64, usize, usize, usize, usize),
    #[error("d∘d ≠ 0 starting in degree {0}")]
    NotComplex(i64),
    #[error("chain map component in degree {0} has the wrong shape")]
    MapShape(i64),
    #[error("chain map does not commute with the differentials in degree {0}")]
    NotChainMap(i64),
}

/// Cochain complex `C^start → … → C^{start+len-1}`, zero outside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinComplex {
    start: i64,
    dims: Vec<usize>,
    diffs: Vec<Matrix>,
}

impl FinComplex {
    /// `diffs[k]` maps degree `start + k` to `start + k + 1`; there is one
    /// fewer differential than degrees.
    pub fn new(start: i64, dims: Vec<usize>, diffs: Vec<Matrix>) -> Result<Self, HomalgError> {
        assert_eq!(diffs.len() + 1, dims.len().max(1), "need one differential between consecutive degrees");
        for (k, d) in diffs.iter().enumerate() {
            let n = start + k as i64;
            if d.rows() != dims[k + 1] || d.cols() != dims[k] {
                return Err(HomalgError::Shape(n, d.rows(), d.cols(), dims[k + 1], dims[k]));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].mul(&diffs[k - 1]).is_zero() {
                return Err(HomalgError::NotComplex(start + k as i64 - 1));
            }
        }
        Ok(FinComplex { start, dims, diffs })
    }

    /// First and last degree that may be nonzero.
    pub fn range(&self) -> (i64, i64) {
        (self.start, self.start + self.dims.len() as i64 - 1)
    }

    pub fn dim(&self, n: i64) -> usize {
        let k = n - self.start;
        if k < 0 || k as usize >= self.dims.len() {
            0
        } else {
            self.dims[k as usize]
        }
    }

    /// `d_n: C^n → C^{n+1}`, a zero matrix outside the stored range.
    pub fn d(&self, n: i64) -> Matrix {
        let k = n - self.start;
        if k >= 0 && (k as usize) < self.diffs.len() {
            self.diffs[k as usize].clone()
        } else {
            Matrix::zeros(self.dim(n + 1), self.dim(n))
        }
    }

    pub fn cohomology_dim(&self, n: i64) -> usize {
        let dn = self.d(n);
        self.dim(n) - dn.rank() - self.d(n - 1).rank()
    }

    pub fn cohomology_dims(&self) -> Vec<(i64, usize)> {
        let (a, b) = self.range();
        (a..=b).map(|n| (n, self.cohomology_dim(n))).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cohomology_dims().iter().map(|&(n, h)| if n.rem_euclid(2) == 0 { h as i64 } else { -(h as i64) }).sum()
    }
}

pub fn cohomology_dims(c: &FinComplex) -> Vec<(i64, usize)> {
    c.cohomology_dims()
}

#[derive(Clone, Debug)]
pub struct ChainMap {
    source: FinComplex,
    target: FinComplex,
    components: Vec<Matrix>,
}

impl ChainMap {
    /// `components[k]` maps degree `source.start + k`.
    pub fn new(source: FinComplex, target: FinComplex, components: Vec<Matrix>) -> Result<Self, HomalgError> {
        assert_eq!(components.len(), source.dims.len());
        for (k, f) in components.iter().enumerate() {
            let n = source.start + k as i64;
            if f.rows() != target.dim(n) || f.cols() != source.dim(n) {
                return Err(HomalgError::MapShape(n));
            }
        }
        let m = ChainMap { source, target, components };
        let (a, b) = m.source.range();
        for n in a - 1..=b {
            let lhs = m.target.d(n).mul(&m.component(n));
            let rhs = m.component(n + 1).mul(&m.source.d(n));
            if lhs != rhs {
                return Err(HomalgError::NotChainMap(n));
            }
        }
        Ok(m)
    }

    pub fn identity(c: &FinComplex) -> Self {
        let comps = c.dims.iter().map(|&n| Matrix::identity(n)).collect();
        ChainMap { source: c.clone(), target: c.clone(), components: comps }
    }

    pub fn zero(source: &FinComplex, target: &FinComplex) -> Self {
        let (a, _) = source.range();
        let comps = source
            .dims
            .iter()
            .enumerate()
            .map(|(k, &n)| Matrix::zeros(target.dim(a + k as i64), n))
            .collect();
        ChainMap { source: source.clone(), target: target.clone(), components: comps }
    }

    pub fn source(&self) -> &FinComplex {
        &self.source
    }

    pub fn target(&self) -> &FinComplex {
        &self.target
    }

    pub fn component(&self, n: i64) -> Matrix {
        let k = n - self.source.start;
        if k >= 0 && (k as usize) < self.components.len() {
            self.components[k as usize].clone()
        } else {
            Matrix::zeros(self.target.dim(n), self.source.dim(n))
        }
    }

    /// Rank of the induced map `H^n(A) → H^n(B)`.
    pub fn induced_rank(&self, n: i64) -> usize {
        let za = self.source.d(n).kernel();
        let imb = self.target.d(n - 1);
        let rows = self.target.dim(n);
        let images: Vec<Vec<Rational>> = za.iter().map(|z| self.component(n).mul_vec(z)).collect();
        let img = Matrix::from_cols(rows, &images);
        img.hstack(&imb).rank() - imb.rank()
    }
}

/// Cone with `C^n = A^{n+1} ⊕ B^n` and `d = [[-d_A, 0], [Φ, d_B]]`.
pub fn mapping_cone(f: &ChainMap) -> FinComplex {
    let (a0, a1) = f.source.range();
    let (b0, b1) = f.target.range();
    let lo = (a0 - 1).min(b0);
    let hi = (a1 - 1).max(b1);
    let dim = |n: i64| f.source.dim(n + 1) + f.target.dim(n);
    let dims: Vec<usize> = (lo..=hi).map(dim).collect();
    let diffs = (lo..hi)
        .map(|n| {
            let an1 = f.source.dim(n + 1);
            let mut d = Matrix::zeros(dim(n + 1), dim(n));
            d.set_block(0, 0, &f.source.d(n + 1).neg());
            d.set_block(f.source.dim(n + 2), 0, &f.component(n + 1));
            d.set_block(f.source.dim(n + 2), an1, &f.target.d(n));
            d
        })
        .collect();
    FinComplex::new(lo, dims, diffs).expect("cone differential squares to zero")
}

/// Both sides of the cone criterion: `lhs` says `H^n(cone) = 0` for all
/// `n ≤ k`; `rhs` says the induced map is an isomorphism up to degree `k`
/// and injective in degree `k + 1`.
pub fn cone_vanishing_equiv(f: &ChainMap, k: i64) -> (bool, bool) {
    let cone = mapping_cone(f);
    let (lo, _) = cone.range();
    let lhs = (lo.min(k)..=k).all(|n| cone.cohomology_dim(n) == 0);
    let (a0, _) = f.source.range();
    let (b0, _) = f.target.range();
    let start = a0.min(b0);
    let rhs = (start..=k).all(|n| {
        let r = f.induced_rank(n);
        r == f.source.cohomology_dim(n) && r == f.target.cohomology_dim(n)
    }) && f.induced_rank(k + 1) == f.source.cohomology_dim(k + 1);
    (lhs, rhs)
}

/// Alternating sums `(χ(cone), χ(A[1]) + χ(B))` from the long exact sequence.
pub fn euler_check(f: &ChainMap) -> (i64, i64) {
    (mapping_cone(f).euler_characteristic(), -f.source.euler_characteristic() + f.target.euler_characteristic())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> FinComplex {
        FinComplex::new(0, vec![1], vec![]).unwrap()
    }

    #[test]
    fn small_complexes() {
        let c = FinComplex::new(0, vec![1, 1], vec![Matrix::identity(1)]).unwrap();
        assert_eq!(c.cohomology_dims(), vec![(0, 0), (1, 0)]);
        assert_eq!(point().cohomology_dims(), vec![(0, 1)]);
        let m = FinComplex::new(0, vec![2, 2], vec![Matrix::from_i64(&[&[0, 0], &[0, 1]])]).unwrap();
        assert_eq!(m.cohomology_dims(), vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn rejects_non_complex() {
        let r = FinComplex::new(0, vec![1, 1, 1], vec![Matrix::identity(1), Matrix::identity(1)]);
        assert_eq!(r, Err(HomalgError::NotComplex(0)));
    }

    #[test]
    fn cones_of_point() {
        let id = ChainMap::identity(&point());
        assert!(mapping_cone(&id).cohomology_dims().iter().all(|&(_, h)| h == 0));
        let z = ChainMap::zero(&point(), &point());
        let cone = mapping_cone(&z);
        assert_eq!(cone.cohomology_dims(), vec![(-1, 1), (0, 1)]);
        assert_eq!(cone_vanishing_equiv(&z, 0), (false, false));
        assert_eq!(cone_vanishing_equiv(&id, 3), (true, true));
    }

    #[test]
    fn zero_map_between_acyclic() {
        let c = FinComplex::new(0, vec![1, 1], vec![Matrix::identity(1)]).unwrap();
        let z = ChainMap::zero(&c, &c);
        for k in -1..3 {
            assert_eq!(cone_vanishing_equiv(&z, k), (true, true));
        }
    }

    #[test]
    fn rejects_non_chain_map() {
        let c = FinComplex::new(0, vec![1, 1], vec![Matrix::identity(1)]).unwrap();
        let r = ChainMap::new(c.clone(), c, vec![Matrix::identity(1), Matrix::zeros(1, 1)]);
        assert!(matches!(r, Err(HomalgError::NotChainMap(0))));
    }
}
