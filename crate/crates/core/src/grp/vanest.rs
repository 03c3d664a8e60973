use super::cochain::point_like;
use super::{Elem, GroupCochain, GroupPoint, GroupTwoRep, GrpError, NerveElem};
use crate::numeric::{Jet, JetMat, MAX_ORDER};
use std::sync::Arc;

/// A tangent vector at the unit: of `G` for the group slots, or of the nerve
/// group `G_p` (coordinates `(x_0, …, x_{p-1}; y)`) for the nerve slots.
#[derive(Clone, Debug, PartialEq)]
pub enum Direction {
    G(Vec<f64>),
    Nerve { gs: Vec<Vec<f64>>, h: Vec<f64> },
}

/// A base cochain with pending derivatives. Directions are listed in the
/// order the `R` operators were applied.
pub(crate) struct Derived {
    base: GroupCochain,
    dirs: Vec<Direction>,
}

fn curve(rep: &GroupTwoRep, dir: &Direction, t: &Jet) -> Result<Curve, GrpError> {
    let x = &rep.xmod;
    let scaled = |v: &[f64]| v.iter().map(|&c| t.scale(c)).collect::<Vec<_>>();
    let gexp = |v: &[f64]| -> Result<Elem, GrpError> {
        if v.len() != x.dim_g {
            return Err(GrpError::Arity { expected: format!("{} coordinates on g", x.dim_g), got: v.len().to_string() });
        }
        Ok((x.g_exp)(&scaled(v), t))
    };
    match dir {
        Direction::G(v) => Ok(Curve::G(gexp(v)?)),
        Direction::Nerve { gs, h } => {
            if h.len() != x.dim_h {
                return Err(GrpError::Arity { expected: format!("{} coordinates on h", x.dim_h), got: h.len().to_string() });
            }
            let gs = gs.iter().map(|v| gexp(v)).collect::<Result<Vec<_>, _>>()?;
            Ok(Curve::Nerve(NerveElem { gs, h: (x.h_exp)(&scaled(h), t) }))
        }
    }
}

enum Curve {
    G(Elem),
    Nerve(NerveElem),
}

fn lift(m: &Elem, like: &Jet) -> Elem {
    JetMat::from_f64(m.rows, m.cols, &m.values(), like)
}

impl Derived {
    fn eval(&self, rep: &GroupTwoRep, pt: &GroupPoint) -> JetMat {
        let n = self.dirs.len();
        let mut gam = Vec::new();
        let mut fs = Vec::new();
        for (k, d) in self.dirs.iter().enumerate() {
            let t = Jet::variable(k, 0.0, n, n);
            match curve(rep, d, &t).expect("directions are checked when R is applied") {
                Curve::G(g) => fs.push(g),
                Curve::Nerve(g) => gam.push(g),
            }
        }
        let like = Jet::constant(0.0, n, n);
        for g in &pt.gammas {
            gam.push(NerveElem { gs: g.gs.iter().map(|e| lift(e, &like)).collect(), h: lift(&g.h, &like) });
        }
        fs.extend(pt.fs.iter().map(|e| lift(e, &like)));
        let val = self.base.at(gam, fs);
        let mono = vec![1u8; n];
        let out_like = point_like(rep, pt);
        let vals: Vec<f64> = val.data.iter().map(|j| j.coeff(&mono)).collect();
        JetMat::from_f64(val.rows, val.cols, &vals, &out_like)
    }
}

/// `R_x c`: the derivative along `x` in the first group slot (for
/// `Direction::G`) or in the first nerve slot (for `Direction::Nerve`).
/// The resulting cochain reads its arguments at their values.
pub fn van_est_r(rep: &Arc<GroupTwoRep>, dir: &Direction, c: &GroupCochain) -> Result<GroupCochain, GrpError> {
    let (p, mut q, mut r) = (c.p, c.q, c.r);
    match dir {
        Direction::G(_) if r == 0 => return Err(GrpError::ArityUnderflow("group")),
        Direction::G(_) => r -= 1,
        Direction::Nerve { .. } if q == 0 => return Err(GrpError::ArityUnderflow("nerve")),
        Direction::Nerve { gs, .. } => {
            if gs.len() != p {
                return Err(GrpError::Arity { expected: format!("a tangent vector of G_{p}"), got: format!("G_{}", gs.len()) });
            }
            q -= 1;
        }
    }
    curve(rep, dir, &Jet::variable(0, 0.0, 1, 1))?;
    let (base, mut dirs) = match &c.derived {
        Some(d) => (d.base.clone(), d.dirs.clone()),
        None => (c.clone(), Vec::new()),
    };
    dirs.push(dir.clone());
    if dirs.len() > MAX_ORDER {
        return Err(GrpError::DegreeBound(dirs.len()));
    }
    let derived = Arc::new(Derived { base, dirs });
    let (d, rep) = (derived.clone(), rep.clone());
    let mut out = GroupCochain::new(p, q, r, c.target, move |pt| d.eval(&rep, pt));
    out.derived = Some(derived);
    Ok(out)
}

fn permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    if n == 0 {
        return vec![(Vec::new(), 1.0)];
    }
    let mut out = Vec::new();
    for (perm, sign) in permutations(n - 1) {
        // inserting n-1 at position k adds n-1-k inversions
        for k in 0..n {
            let mut p = perm.clone();
            p.insert(k, n - 1);
            let s = if (n - 1 - k).is_multiple_of(2) { sign } else { -sign };
            out.push((p, s));
        }
    }
    out
}

/// `Φc(ξ_1, …, ξ_q; x_1, …, x_r)`: the doubly alternated iterated derivative,
/// group slots first.
pub fn van_est_phi(
    rep: &Arc<GroupTwoRep>,
    c: &GroupCochain,
    xis: &[Direction],
    xs: &[Vec<f64>],
) -> Result<Vec<f64>, GrpError> {
    if xis.len() != c.q || xs.len() != c.r {
        return Err(GrpError::Arity {
            expected: format!("{} nerve and {} group arguments", c.q, c.r),
            got: format!("{} and {}", xis.len(), xs.len()),
        });
    }
    if c.q + c.r > MAX_ORDER {
        return Err(GrpError::DegreeBound(c.q + c.r));
    }
    let mut total = vec![0.0; rep.dim(c.target)];
    let empty = GroupPoint { gammas: Vec::new(), fs: Vec::new() };
    for (sigma, s1) in permutations(c.q) {
        for (varrho, s2) in permutations(c.r) {
            let mut cur = c.clone();
            for &k in &varrho {
                cur = van_est_r(rep, &Direction::G(xs[k].clone()), &cur)?;
            }
            for &k in &sigma {
                cur = van_est_r(rep, &xis[k], &cur)?;
            }
            let v = cur.eval(&empty)?;
            for (t, j) in total.iter_mut().zip(&v.data) {
                *t += s1 * s2 * j.value();
            }
        }
    }
    Ok(total)
}

/// `H = R²`, `G = 1`, trivial coefficients in `R`, and the group 2-cocycle
/// `F(u, v) = u₁v₂` of the Heisenberg central extension, as a `(0,2,0)` cochain.
pub fn heisenberg_data() -> (Arc<GroupTwoRep>, GroupCochain) {
    let rep = GroupTwoRep::trivial(super::abelian_group_xmod(0, 2, Vec::new()), 1, 1);
    let f = GroupCochain::new(0, 2, 0, super::Target::V, |pt| {
        let (u, v) = (&pt.gammas[0].h, &pt.gammas[1].h);
        let mut out = JetMat::zeros(1, 1, &u.like());
        out.set(0, 0, u.get(0, 0) * v.get(1, 0));
        out
    });
    (Arc::new(rep), f)
}

#[cfg(test)]
mod tests {
    use super::permutations;

    #[test]
    fn permutation_signs() {
        let ps = permutations(3);
        assert_eq!(ps.len(), 6);
        for (p, s) in ps {
            let inv = (0..3).flat_map(|i| (i + 1..3).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            assert_eq!(s, if inv % 2 == 0 { 1.0 } else { -1.0 });
        }
    }
}
