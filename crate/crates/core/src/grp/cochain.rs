use super::{Elem, GroupTwoRep, GrpError};
use crate::numeric::{Jet, JetMat};
use rand::Rng;
use std::fmt;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    W,
    V,
}

/// An element of the nerve `G_p ≅ G^p × H`, written `(g_0, …, g_{p-1}; h)`.
/// As a composable string of arrows of `G ⋉ H ⇒ H`, `g_{p-1}` acts first at
/// the source `h` and the target is `h·i(g_{p-1}⋯g_0)`.
#[derive(Clone, Debug)]
pub struct NerveElem {
    pub gs: Vec<Elem>,
    pub h: Elem,
}

impl NerveElem {
    pub fn p(&self) -> usize {
        self.gs.len()
    }
}

#[derive(Clone, Debug)]
pub struct GroupPoint {
    pub gammas: Vec<NerveElem>,
    pub fs: Vec<Elem>,
}

type Eval = Arc<dyn Fn(&GroupPoint) -> JetMat + Send + Sync>;

/// `ω ∈ C(G_p^q × G^r, U)` with `U = W` or `V`, given by an evaluator.
#[derive(Clone)]
pub struct GroupCochain {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub target: Target,
    pub(crate) eval: Eval,
    pub(crate) derived: Option<Arc<super::vanest::Derived>>,
}

impl fmt::Debug for GroupCochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupCochain(p={}, q={}, r={}, {:?})", self.p, self.q, self.r, self.target)
    }
}

impl GroupCochain {
    pub fn new(
        p: usize,
        q: usize,
        r: usize,
        target: Target,
        eval: impl Fn(&GroupPoint) -> JetMat + Send + Sync + 'static,
    ) -> Self {
        GroupCochain { p, q, r, target, eval: Arc::new(eval), derived: None }
    }

    pub fn check(&self, pt: &GroupPoint) -> Result<(), GrpError> {
        let ok = pt.gammas.len() == self.q && pt.fs.len() == self.r && pt.gammas.iter().all(|g| g.p() == self.p);
        if ok {
            Ok(())
        } else {
            Err(GrpError::Arity {
                expected: format!("(p,q,r) = ({},{},{})", self.p, self.q, self.r),
                got: format!(
                    "{} nerve elements of degrees {:?} and {} group elements",
                    pt.gammas.len(),
                    pt.gammas.iter().map(NerveElem::p).collect::<Vec<_>>(),
                    pt.fs.len()
                ),
            })
        }
    }

    pub fn eval(&self, pt: &GroupPoint) -> Result<JetMat, GrpError> {
        self.check(pt)?;
        Ok((self.eval)(pt))
    }

    pub(crate) fn at(&self, gammas: Vec<NerveElem>, fs: Vec<Elem>) -> JetMat {
        (self.eval)(&GroupPoint { gammas, fs })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiffKind {
    /// Differential along the `q` direction: the group differential for
    /// `r = 0`, the transformation-groupoid differential for `r ≥ 1`.
    Delta,
    /// Same operator, restricted to `r ≥ 1`.
    DeltaPrime,
    /// Alternating face sum along the nerve, twisted on the `∂_0` term.
    Partial,
    /// Differential along the `r` direction; `∂'` when `r = 0`.
    Delta1,
    /// First difference map `C^{p,q}_r → C^{p+1,q+1}_{r-1}`.
    DiffMap,
    /// `Δ_2^q : C^{p,q}_2 → C^{p+2,q+1}_0`.
    Delta2q,
    /// `Δ_2^p : C^{p,q}_2 → C^{p+1,q+2}_0`.
    Delta2p,
}

impl DiffKind {
    pub fn name(self) -> &'static str {
        match self {
            DiffKind::Delta => "delta",
            DiffKind::DeltaPrime => "deltaPrime",
            DiffKind::Partial => "partial",
            DiffKind::Delta1 => "delta1",
            DiffKind::DiffMap => "Delta",
            DiffKind::Delta2q => "Delta2q",
            DiffKind::Delta2p => "Delta2p",
        }
    }
}

// Nerve combinatorics.

impl GroupTwoRep {
    /// The `h` entry of column `a`: `h·i(g_{p-1})⋯i(g_{a+1})`.
    pub fn column_h(&self, gam: &NerveElem, a: usize) -> Elem {
        let x = &self.xmod;
        let mut h = gam.h.clone();
        for b in (a + 1..gam.p()).rev() {
            h = x.hmul(&h, &x.incl(&gam.gs[b]));
        }
        h
    }

    pub fn entry(&self, gam: &NerveElem, a: usize) -> (Elem, Elem) {
        (gam.gs[a].clone(), self.column_h(gam, a))
    }

    /// Target `t_p`.
    pub fn t(&self, gam: &NerveElem) -> Elem {
        if gam.p() == 0 {
            gam.h.clone()
        } else {
            self.xmod.hmul(&self.column_h(gam, 0), &self.xmod.incl(&gam.gs[0]))
        }
    }

    pub fn face(&self, gam: &NerveElem, k: usize) -> NerveElem {
        let p = gam.p();
        assert!(p >= 1 && k <= p);
        let x = &self.xmod;
        if k == p {
            let mut gs = gam.gs.clone();
            let last = gs.pop().expect("p ≥ 1");
            return NerveElem { gs, h: x.hmul(&gam.h, &x.incl(&last)) };
        }
        if k == 0 {
            return NerveElem { gs: gam.gs[1..].to_vec(), h: gam.h.clone() };
        }
        let mut gs = gam.gs[..k - 1].to_vec();
        gs.push(x.gmul(&gam.gs[k], &gam.gs[k - 1]));
        gs.extend_from_slice(&gam.gs[k + 1..]);
        NerveElem { gs, h: gam.h.clone() }
    }

    /// Product in the group `G_p`, entrywise in `G ⋊ H`.
    pub fn nerve_mul(&self, a: &NerveElem, b: &NerveElem) -> NerveElem {
        let x = &self.xmod;
        let gs = (0..a.p()).map(|k| x.gmul(&x.right(&a.gs[k], &self.column_h(b, k)), &b.gs[k])).collect();
        NerveElem { gs, h: x.hmul(&a.h, &b.h) }
    }

    /// `(g, h) ⊳ (g', h') = (g^{h'} g', h h')`.
    pub fn vjoin(&self, a: &(Elem, Elem), b: &(Elem, Elem)) -> (Elem, Elem) {
        let x = &self.xmod;
        (x.gmul(&x.right(&a.0, &b.1), &b.0), x.hmul(&a.1, &b.1))
    }

    fn t_prod(&self, gams: &[NerveElem], like: &Jet) -> Elem {
        let ts: Vec<Elem> = gams.iter().map(|g| self.t(g)).collect();
        self.xmod.hprod(&ts, like)
    }

    /// `ρ₀¹(i(pr_G(γ_{0,b} ⊳ ⋯)))⁻¹` over the bottom entries of the given elements.
    fn bottom_twist(&self, gams: &[NerveElem], like: &Jet) -> JetMat {
        let x = &self.xmod;
        if gams.is_empty() {
            return JetMat::identity(self.dim_w, like);
        }
        let mut acc = self.entry(&gams[0], 0);
        for g in &gams[1..] {
            acc = self.vjoin(&acc, &self.entry(g, 0));
        }
        self.r0w(&x.incl(&acc.0)).inverse()
    }

    pub fn sample_nerve<R: Rng>(&self, rng: &mut R, p: usize, scale: f64) -> NerveElem {
        NerveElem { gs: (0..p).map(|_| self.xmod.sample_g(rng, scale)).collect(), h: self.xmod.sample_h(rng, scale) }
    }

    pub fn sample_point<R: Rng>(&self, rng: &mut R, p: usize, q: usize, r: usize, scale: f64) -> GroupPoint {
        GroupPoint {
            gammas: (0..q).map(|_| self.sample_nerve(rng, p, scale)).collect(),
            fs: (0..r).map(|_| self.xmod.sample_g(rng, scale)).collect(),
        }
    }
}

fn sgn(k: usize) -> f64 {
    if k.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

pub(crate) fn point_like(_rep: &GroupTwoRep, pt: &GroupPoint) -> Jet {
    point_like_plain(pt)
}

pub(crate) fn point_like_plain(pt: &GroupPoint) -> Jet {
    match (pt.gammas.first(), pt.fs.first()) {
        (Some(g), _) => g.h.like(),
        (None, Some(f)) => f.like(),
        (None, None) => Jet::scalar(0.0),
    }
}

/// The operator `kind` applied to `c`, as a new cochain.
pub fn apply(kind: DiffKind, rep: &Arc<GroupTwoRep>, c: &GroupCochain) -> Result<GroupCochain, GrpError> {
    let (p, q, r) = (c.p, c.q, c.r);
    let (rep, c) = (rep.clone(), c.clone());
    let w_target = |t: Target, r: usize| -> Result<(), GrpError> {
        let want = if r == 0 { Target::V } else { Target::W };
        if t == want {
            Ok(())
        } else {
            Err(GrpError::Signature("cochain target does not match r"))
        }
    };
    w_target(c.target, r)?;
    let out = match kind {
        DiffKind::DeltaPrime if r == 0 => return Err(GrpError::Signature("deltaPrime")),
        DiffKind::Delta | DiffKind::DeltaPrime => GroupCochain::new(p, q + 1, r, c.target, move |pt| {
            let x = &rep.xmod;
            let gam = &pt.gammas;
            let t0 = rep.t(&gam[0]);
            let mut acc = if r == 0 {
                rep.r0v(&t0).mul(&c.at(gam[1..].to_vec(), vec![]))
            } else {
                let fs = pt.fs.iter().map(|f| x.right(f, &t0)).collect();
                c.at(gam[1..].to_vec(), fs)
            };
            for j in 1..=q {
                let mut g2 = gam[..j - 1].to_vec();
                g2.push(rep.nerve_mul(&gam[j - 1], &gam[j]));
                g2.extend_from_slice(&gam[j + 1..]);
                acc = acc.add(&c.at(g2, pt.fs.clone()).scale(sgn(j)));
            }
            let mut last = c.at(gam[..q].to_vec(), pt.fs.clone());
            if r > 0 {
                last = rep.r0w(&rep.t(&gam[q])).inverse().mul(&last);
            }
            acc.add(&last.scale(sgn(q + 1)))
        }),
        DiffKind::Partial => GroupCochain::new(p + 1, q, r, c.target, move |pt| {
            let like = point_like(&rep, pt);
            let gam = &pt.gammas;
            let faces = |k: usize| gam.iter().map(|g| rep.face(g, k)).collect::<Vec<_>>();
            let mut acc = c.at(faces(0), pt.fs.clone());
            if r > 0 {
                acc = rep.bottom_twist(gam, &like).mul(&acc);
            }
            for k in 1..=p + 1 {
                acc = acc.add(&c.at(faces(k), pt.fs.clone()).scale(sgn(k)));
            }
            acc
        }),
        DiffKind::Delta1 => GroupCochain::new(p, q, r + 1, Target::W, move |pt| {
            let x = &rep.xmod;
            let like = point_like(&rep, pt);
            let tt = rep.t_prod(&pt.gammas, &like);
            let f = &pt.fs;
            if r == 0 {
                let v = c.at(pt.gammas.clone(), vec![]);
                return rep.r0w(&tt).inverse().mul(&rep.r1(&f[0])).mul(&v);
            }
            let tw = rep.r0w(&x.incl(&x.right(&f[0], &tt)));
            let mut acc = tw.mul(&c.at(pt.gammas.clone(), f[1..].to_vec()));
            for k in 1..=r {
                let mut f2 = f[..k - 1].to_vec();
                f2.push(x.gmul(&f[k - 1], &f[k]));
                f2.extend_from_slice(&f[k + 1..]);
                acc = acc.add(&c.at(pt.gammas.clone(), f2).scale(sgn(k)));
            }
            acc.add(&c.at(pt.gammas.clone(), f[..r].to_vec()).scale(sgn(r + 1)))
        }),
        DiffKind::DiffMap => {
            if r == 0 {
                return Err(GrpError::Signature("Delta"));
            }
            let target = if r == 1 { Target::V } else { Target::W };
            GroupCochain::new(p + 1, q + 1, r - 1, target, move |pt| {
                let x = &rep.xmod;
                let like = point_like(&rep, pt);
                let gam = &pt.gammas;
                let rest: Vec<NerveElem> = gam[1..].iter().map(|g| rep.face(g, 0)).collect();
                let (g00, h00) = rep.entry(&gam[0], 0);
                if r == 1 {
                    let all: Vec<NerveElem> = gam.iter().map(|g| rep.face(g, 0)).collect();
                    let coef = rep.r0v(&rep.t_prod(&all, &like)).mul(&rep.phi_mat(&like));
                    return coef.mul(&c.at(rest, vec![g00]));
                }
                let f = &pt.fs;
                let rr = r - 1;
                let hoff = rep.t_prod(&rest, &like);
                let outer = rep.bottom_twist(&gam[1..], &like);
                let mut args: Vec<Elem> = f.iter().map(|y| x.right(y, &h00)).collect();
                args.push(g00.clone());
                let mut acc =
                    rep.r0w(&x.incl(&x.right(&g00, &hoff))).inverse().mul(&c.at(rest.clone(), args));
                let hig = x.hmul(&h00, &x.incl(&g00));
                let ginv = x.ginv(&g00);
                let last = x.gmul(&x.right(&f[rr - 1], &h00), &g00);
                for n in 1..=rr {
                    let mut d: Vec<Elem> = f[..n - 1].iter().map(|y| x.right(y, &hig)).collect();
                    d.push(ginv.clone());
                    d.extend(f[n - 1..rr - 1].iter().map(|y| x.right(y, &h00)));
                    let mut a1 = d.clone();
                    a1.push(last.clone());
                    let mut a2 = d;
                    a2.push(g00.clone());
                    let term = c.at(rest.clone(), a1).sub(&c.at(rest.clone(), a2));
                    acc = acc.add(&term.scale(sgn(rr - n)));
                }
                outer.mul(&acc)
            })
        }
        DiffKind::Delta2q | DiffKind::Delta2p if r != 2 => return Err(GrpError::Signature(kind.name())),
        DiffKind::Delta2q => GroupCochain::new(p + 2, q + 1, 0, Target::V, move |pt| {
            let like = point_like(&rep, pt);
            let gam = &pt.gammas;
            let dd = |g: &NerveElem| rep.face(&rep.face(g, 0), 0);
            let all: Vec<NerveElem> = gam.iter().map(dd).collect();
            let rest = all[1..].to_vec();
            let coef = rep.r0v(&rep.t_prod(&all, &like)).mul(&rep.phi_mat(&like));
            coef.mul(&c.at(rest, vec![gam[0].gs[1].clone(), gam[0].gs[0].clone()]))
        }),
        DiffKind::Delta2p => GroupCochain::new(p + 1, q + 2, 0, Target::V, move |pt| {
            let x = &rep.xmod;
            let like = point_like(&rep, pt);
            let gam = &pt.gammas;
            let all: Vec<NerveElem> = gam.iter().map(|g| rep.face(g, 0)).collect();
            let rest = all[2..].to_vec();
            let (g00, _) = rep.entry(&gam[0], 0);
            let (g01, h01) = rep.entry(&gam[1], 0);
            let coef = rep.r0v(&rep.t_prod(&all, &like)).mul(&rep.phi_mat(&like));
            coef.mul(&c.at(rest, vec![x.right(&g00, &h01), g01]))
        }),
    };
    Ok(out)
}

/// Value of `kind(c)` at `point`.
pub fn group_cochain_diff(
    kind: DiffKind,
    rep: &Arc<GroupTwoRep>,
    c: &GroupCochain,
    point: &GroupPoint,
) -> Result<JetMat, GrpError> {
    apply(kind, rep, c)?.eval(point)
}

/// A random cochain, quadratic in the entries of its arguments and
/// multiplied by one linear form in the chart of each group slot, so that it
/// vanishes whenever a group argument is the unit.
pub fn polynomial_cochain<R: Rng>(
    rng: &mut R,
    rep: &GroupTwoRep,
    p: usize,
    q: usize,
    r: usize,
) -> GroupCochain {
    let target = if r == 0 { Target::V } else { Target::W };
    let out = rep.dim(target);
    let like = Jet::scalar(0.0);
    let mut probe = rep.sample_point(rng, p, q, r, 0.1);
    for g in probe.gammas.iter_mut() {
        g.h = (rep.xmod.h_one)(&like);
    }
    let n = flatten(&probe).len();
    let lin: Vec<f64> = (0..out * n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let quad: Vec<(usize, usize, usize, f64)> =
        (0..2 * out * n.max(1)).map(|_| (rng.gen_range(0..out), rng.gen_range(0..n.max(1)), rng.gen_range(0..n.max(1)), rng.gen_range(-1.0..1.0))).collect();
    let cst: Vec<f64> = (0..out).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let forms: Vec<Vec<f64>> = (0..r).map(|_| (0..rep.xmod.dim_g).map(|_| rng.gen_range(-1.0..1.0)).collect()).collect();
    let chart = rep.xmod.g_chart.clone();
    GroupCochain::new(p, q, r, target, move |pt| {
        let z = flatten(pt);
        let like = match z.first() {
            Some(j) => j.zero_like(),
            None => Jet::scalar(0.0),
        };
        let mut v = JetMat::zeros(out, 1, &like);
        for o in 0..out {
            let mut acc = like.lift(cst[o]);
            for (k, zk) in z.iter().enumerate() {
                acc = &acc + &zk.scale(lin[o * n + k]);
            }
            for &(oo, a, b, w) in &quad {
                if oo == o && a < z.len() && b < z.len() {
                    acc = &acc + &(&z[a] * &z[b]).scale(w);
                }
            }
            v.set(o, 0, acc);
        }
        for (f, form) in pt.fs.iter().zip(&forms) {
            let lin = chart(f).iter().zip(form).fold(like.zero_like(), |a, (c, w)| &a + &c.scale(*w));
            v = v.scale_jet(&lin);
        }
        v
    })
}

fn flatten(pt: &GroupPoint) -> Vec<Jet> {
    let mut z = Vec::new();
    for g in &pt.gammas {
        for e in &g.gs {
            z.extend(e.data.iter().cloned());
        }
        z.extend(g.h.data.iter().cloned());
    }
    for f in &pt.fs {
        z.extend(f.data.iter().cloned());
    }
    z
}
