use super::{apply, polynomial_cochain, DiffKind, GroupCochain, GroupTwoRep, GrpError};
use std::sync::Arc;

/// Coordinate range of the sampled group elements.
pub const SAMPLE_SCALE: f64 = 0.5;

/// Largest pointwise difference of two cochains of the same signature,
/// relative to the size of their values, over random points.
pub fn cochain_gap(rep: &GroupTwoRep, a: &GroupCochain, b: &GroupCochain, samples: usize, seed: u64) -> Result<f64, GrpError> {
    if (a.p, a.q, a.r) != (b.p, b.q, b.r) {
        return Err(GrpError::Signature("cochains of different bidegrees"));
    }
    let mut rng = crate::random::rng(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let pt = rep.sample_point(&mut rng, a.p, a.q, a.r, SAMPLE_SCALE);
        let (x, y) = (a.eval(&pt)?, b.eval(&pt)?);
        let size = 1f64.max(x.max_abs_value()).max(y.max_abs_value());
        worst = worst.max(x.sub(&y).max_abs_value() / size);
    }
    Ok(worst)
}

/// Largest value of `c` over random points.
pub fn cochain_size(rep: &GroupTwoRep, c: &GroupCochain, samples: usize, seed: u64) -> Result<f64, GrpError> {
    let mut rng = crate::random::rng(seed);
    let mut worst = 0.0f64;
    for _ in 0..samples {
        let pt = rep.sample_point(&mut rng, c.p, c.q, c.r, SAMPLE_SCALE);
        worst = worst.max(c.eval(&pt)?.max_abs_value());
    }
    Ok(worst)
}

fn lin(terms: &[(f64, &GroupCochain)]) -> GroupCochain {
    let c0 = terms[0].1;
    let terms: Vec<(f64, GroupCochain)> = terms.iter().map(|(s, c)| (*s, (*c).clone())).collect();
    GroupCochain::new(c0.p, c0.q, c0.r, c0.target, move |pt| {
        let mut acc = terms[0].1.at(pt.gammas.clone(), pt.fs.clone()).scale(terms[0].0);
        for (s, c) in &terms[1..] {
            acc = acc.add(&c.at(pt.gammas.clone(), pt.fs.clone()).scale(*s));
        }
        acc
    })
}

/// Residuals of the identities among the group operators on random
/// normalized polynomial cochains: `δ² = ∂² = δ_(1)² = 0`, the commutation
/// `(−1)^r(δ∂ − ∂δ) = Δδ_(1) − δ_(1)Δ`, and the two second-difference
/// relations `∂Δ + Δ∂ = Δ_2^q δ_(1)`, `δΔ + Δδ = Δ_2^p δ_(1)`.
pub fn relation_residuals(rep: &Arc<GroupTwoRep>, samples: usize, seed: u64) -> Vec<(&'static str, f64)> {
    let mut rng = crate::random::rng(seed);
    let op = |k: DiffKind, c: &GroupCochain| apply(k, rep, c).expect("signatures match by construction");
    let gap = |a: &GroupCochain, b: &GroupCochain, s: u64| cochain_gap(rep, a, b, samples, s).expect("same bidegree");
    let (d, dp, d1, dm) = (DiffKind::Delta, DiffKind::Partial, DiffKind::Delta1, DiffKind::DiffMap);
    let mut worst = [0.0f64; 6];
    for (p, q, r) in [(0, 0, 1), (0, 0, 2), (0, 1, 1), (1, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 1), (0, 1, 0)] {
        let c = polynomial_cochain(&mut rng, rep, p, q, r);
        for (k, kind) in [d, dp, d1].into_iter().enumerate() {
            // measured against the size of the intermediate cochain
            let once = op(kind, &c);
            let dd = op(kind, &once);
            let size = cochain_size(rep, &once, samples, seed).expect("valid cochain").max(1.0);
            worst[k] = worst[k].max(gap(&dd, &lin(&[(0.0, &dd)]), seed) / size);
        }
        if r == 0 {
            continue;
        }
        let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
        let lhs = lin(&[(sign, &op(d, &op(dp, &c))), (-sign, &op(dp, &op(d, &c)))]);
        let rhs = lin(&[(1.0, &op(dm, &op(d1, &c))), (-1.0, &op(d1, &op(dm, &c)))]);
        worst[3] = worst[3].max(gap(&lhs, &rhs, seed + 1));
        if r == 1 {
            let e1 = op(d1, &c);
            let a = lin(&[(1.0, &op(dp, &op(dm, &c))), (1.0, &op(dm, &op(dp, &c)))]);
            worst[4] = worst[4].max(gap(&a, &op(DiffKind::Delta2q, &e1), seed + 2));
            let b = lin(&[(1.0, &op(d, &op(dm, &c))), (1.0, &op(dm, &op(d, &c)))]);
            worst[5] = worst[5].max(gap(&b, &op(DiffKind::Delta2p, &e1), seed + 3));
        }
    }
    ["delta squared", "partial squared", "delta1 squared", "star-top", "second difference q", "second difference p"]
        .into_iter()
        .zip(worst)
        .collect()
}
