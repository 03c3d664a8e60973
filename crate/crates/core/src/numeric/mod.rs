//! Exact rationals, dense rational matrices and truncated Taylor jets.

mod jet;
mod matrix;

pub use jet::{Jet, JetMat, MAX_ORDER, MAX_VARS};
pub use matrix::Matrix;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rational = BigRational;

/// Sparse vector as (index, coefficient) pairs with nonzero coefficients.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"p/q"`, `"p"` or a decimal-free integer string.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_else(zero)
}

/// Pivot weight used by elimination: bit size of numerator times denominator.
pub(crate) fn height(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}

pub fn dense(v: &SparseVec, n: usize) -> Vec<Rational> {
    let mut out = vec![zero(); n];
    for (i, c) in v {
        out[*i] += c;
    }
    out
}

pub fn sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// Binomial coefficient, zero when k > n.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// All strictly increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(binom(n, k));
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - k + i {
                cur[i] += 1;
                for j in i + 1..k {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Lexicographic rank of a strictly increasing subset of `0..n`.
pub fn subset_rank(n: usize, s: &[usize]) -> usize {
    let k = s.len();
    let mut rank = 0;
    let mut prev = 0;
    for (i, &si) in s.iter().enumerate() {
        for v in prev..si {
            rank += binom(n - v - 1, k - i - 1);
        }
        prev = si + 1;
    }
    rank
}

/// Sorts `idx` in place and returns the sign of the sorting permutation, or
/// `None` when an index repeats.
pub fn sort_sign(idx: &mut [usize]) -> Option<bool> {
    let mut neg = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(neg)
    }
}

/// Expands an alternating form on `args` (vectors in a space of dimension
/// `n`) into coefficients on the increasing basis of the exterior power.
pub fn alt_expand(n: usize, args: &[&SparseVec]) -> Vec<(usize, Rational)> {
    let mut acc: Vec<(usize, Rational)> = Vec::new();
    if args.is_empty() {
        return vec![(0, one())];
    }
    if args.len() > n || args.iter().any(|a| a.is_empty()) {
        return acc;
    }
    let mut pos = vec![0usize; args.len()];
    let mut idx = vec![0usize; args.len()];
    'outer: loop {
        let mut coef = one();
        for (k, a) in args.iter().enumerate() {
            idx[k] = a[pos[k]].0;
            coef *= &a[pos[k]].1;
        }
        if let Some(neg) = sort_sign(&mut idx) {
            if neg {
                coef = -coef;
            }
            acc.push((subset_rank(n, &idx), coef));
        }
        let mut k = args.len();
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < args[k].len() {
                break;
            }
            pos[k] = 0;
        }
    }
    merge(acc)
}

/// Sums duplicate indices and drops zeros.
pub fn merge(mut v: Vec<(usize, Rational)>) -> Vec<(usize, Rational)> {
    v.sort_by_key(|(i, _)| *i);
    let mut out: Vec<(usize, Rational)> = Vec::with_capacity(v.len());
    for (i, c) in v {
        match out.last_mut() {
            Some((j, d)) if *j == i => *d += c,
            _ => out.push((i, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

pub fn unit(i: usize) -> SparseVec {
    vec![(i, one())]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_and_ranks_agree() {
        for n in 0..6 {
            for k in 0..=n + 1 {
                let s = subsets(n, k);
                assert_eq!(s.len(), binom(n, k));
                for (r, t) in s.iter().enumerate() {
                    assert_eq!(subset_rank(n, t), r);
                }
            }
        }
    }

    #[test]
    fn sort_sign_detects_parity_and_repeats() {
        let mut a = [2, 0, 1];
        assert_eq!(sort_sign(&mut a), Some(false));
        let mut b = [1, 0, 2];
        assert_eq!(sort_sign(&mut b), Some(true));
        let mut c = [1, 0, 1];
        assert_eq!(sort_sign(&mut c), None);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("-3/6"), Some(frac(-1, 2)));
        assert_eq!(parse_rational("7"), Some(int(7)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(format_rational(&frac(4, -6)), "-2/3");
    }

    #[test]
    fn alt_expand_two_vectors() {
        // (e0 + e1) ^ e1 = e0 ^ e1
        let a = vec![(0, one()), (1, one())];
        let b = unit(1);
        assert_eq!(alt_expand(2, &[&a, &b]), vec![(0, one())]);
        assert_eq!(alt_expand(2, &[&b, &a]), vec![(0, -one())]);
    }
}
