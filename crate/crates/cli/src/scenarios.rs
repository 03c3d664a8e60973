//! Built-in numerical scenarios for the matrix Lie 2-group side.

use crate::report::Report;
use clap::ValueEnum;
use lie2coh::grp::{
    glphi1_exp, glphi_delta, glphi_group, gp2cocycle_residuals, group_xmod_validate_sampled,
    heisenberg_data, lie_functor_extract, lift_matrix, omega_curvature, perturbed_alpha_data, relation_residuals,
    van_est_phi, Direction, Gp2Cochains, GroupTwoRep,
};
use lie2coh::lie2::{gl_phi, TwoVectorSpace};
use lie2coh::numeric::{Jet, JetMat};
use lie2coh::random;
use std::sync::Arc;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scenario {
    Glphi,
    Exp,
    LieFunctor,
    StarTop,
    VanestHeisenberg,
    Gp2cocycleSemidirect,
}

pub struct Params {
    pub dims: (usize, usize),
    pub trials: usize,
    pub seed: u64,
    pub tolerance: Option<f64>,
}

// φ: W → V with small integer entries; the first trial uses all ones.
fn spaces(p: &Params) -> Vec<TwoVectorSpace> {
    let (w, v) = p.dims;
    let mut rng = random::rng(p.seed);
    (0..p.trials.max(1))
        .map(|t| {
            if t == 0 {
                TwoVectorSpace::new(lie2coh::numeric::Matrix::from_flat(v, w, vec![lie2coh::numeric::one(); v * w]))
            } else {
                TwoVectorSpace::new(random::matrix(&mut rng, v, w))
            }
        })
        .collect()
}

fn fmt_matrix(rows: &[Vec<f64>]) -> String {
    let row = |r: &Vec<f64>| format!("[{}]", r.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(", "));
    format!("[{}]", rows.iter().map(row).collect::<Vec<_>>().join(", "))
}

pub fn run(s: Scenario, p: &Params) -> Report {
    let mut r = Report::new();
    let tol = p.tolerance.unwrap_or(match s {
        Scenario::LieFunctor => 1e-6,
        Scenario::VanestHeisenberg => 1e-12,
        _ => lie2coh::grp::DEFAULT_TOLERANCE,
    });
    let name = s.to_possible_value().expect("no skipped variants");
    r.line(format!("scenario {}, dims {} {}, trials {}, seed {}", name.get_name(), p.dims.0, p.dims.1, p.trials, p.seed));
    match s {
        Scenario::Glphi => {
            let mut worst: Vec<(String, f64)> = Vec::new();
            for (t, space) in spaces(p).iter().enumerate() {
                let report = group_xmod_validate_sampled(&glphi_group(space), 20, p.seed + t as u64);
                for (name, res) in report.checks {
                    match worst.iter_mut().find(|(n, _)| *n == name) {
                        Some(e) => e.1 = e.1.max(res),
                        None => worst.push((name, res)),
                    }
                }
            }
            for (name, res) in worst {
                r.residual(&name, res, tol);
            }
        }
        Scenario::Exp => {
            let like = Jet::scalar(0.0);
            let one = JetMat::from_f64(1, 1, &[1.0], &like);
            let scalar = (-4..=4)
                .map(|k| {
                    let a = k as f64 / 4.0;
                    let e = glphi1_exp(&JetMat::from_f64(1, 1, &[a], &like), &one, 30).get(0, 0).value();
                    (e - (a.exp() - 1.0)).abs()
                })
                .fold(0.0, f64::max);
            r.residual("scalar series against e^a - 1", scalar, tol.min(1e-12));
            let mut rng = random::rng(p.seed);
            let mut worst = 0.0f64;
            for space in spaces(p) {
                let phi = lift_matrix(&space.phi, &like);
                let a = lift_matrix(&random::matrix(&mut rng, space.dim_w, space.dim_v), &like).scale(0.5);
                let (fw, fv) = glphi_delta(&glphi1_exp(&a, &phi, 30), &phi);
                let ew = a.mul(&phi).exp(40);
                let ev = phi.mul(&a).exp(40);
                worst = worst.max(fw.sub(&ew).max_abs_value()).max(fv.sub(&ev).max_abs_value());
            }
            r.residual("delta of exp against exp(A phi), exp(phi A)", worst, tol);
        }
        Scenario::LieFunctor => {
            let mut dev = 0.0f64;
            let mut exact = true;
            for space in spaces(p) {
                let ex = lie_functor_extract(&glphi_group(&space));
                let target = gl_phi(&space).xmod;
                dev = dev.max(ex.deviation(&target));
                exact &= ex.to_xmod() == target;
            }
            r.residual("deviation from gl(phi)", dev, tol);
            r.check("rationalized structure equals gl(phi)", exact, "");
        }
        Scenario::StarTop => {
            let mut worst: Vec<(&str, f64)> = Vec::new();
            for (t, space) in spaces(p).iter().enumerate() {
                let rep = Arc::new(GroupTwoRep::tautological(space));
                for (k, (name, res)) in relation_residuals(&rep, 20, p.seed + t as u64).into_iter().enumerate() {
                    if t == 0 {
                        worst.push((name, res));
                    } else {
                        worst[k].1 = worst[k].1.max(res);
                    }
                }
            }
            for (name, res) in worst {
                r.residual(name, res, tol);
            }
        }
        Scenario::VanestHeisenberg => {
            let (rep, f) = heisenberg_data();
            let nerve = |h: &[f64]| Direction::Nerve { gs: Vec::new(), h: h.to_vec() };
            let basis = [[1.0, 0.0], [0.0, 1.0]];
            let m: Vec<Vec<f64>> = basis
                .iter()
                .map(|a| basis.iter().map(|b| van_est_phi(&rep, &f, &[nerve(a), nerve(b)], &[]).unwrap()[0]).collect())
                .collect();
            r.line(format!("PhiF = {}", fmt_matrix(&m)));
            let mut rng = random::rng(p.seed);
            let (mut res, mut alt) = (0.0f64, 0.0f64);
            for _ in 0..p.trials.max(1) {
                let v: Vec<f64> = random::matrix(&mut rng, 4, 1).to_f64().into_iter().map(|r| r[0] / 2.0).collect();
                let (x, y) = (&v[..2], &v[2..]);
                let xy = van_est_phi(&rep, &f, &[nerve(x), nerve(y)], &[]).unwrap()[0];
                let yx = van_est_phi(&rep, &f, &[nerve(y), nerve(x)], &[]).unwrap()[0];
                res = res.max((xy - (x[0] * y[1] - x[1] * y[0])).abs());
                alt = alt.max((xy + yx).abs());
            }
            r.residual("PhiF(x, y) = x1 y2 - x2 y1", res, tol);
            r.residual("alternation", alt, 0.0);
        }
        Scenario::Gp2cocycleSemidirect => {
            let mut worst = [0.0f64; 7];
            let mut omega = 0.0f64;
            for (t, space) in spaces(p).iter().enumerate() {
                let rep = GroupTwoRep::tautological(space);
                let res = gp2cocycle_residuals(&rep, &Gp2Cochains::zero(&rep), 20, p.seed + t as u64);
                for (k, (_, v)) in res.into_iter().enumerate() {
                    worst[k] = worst[k].max(v);
                }
                omega = omega.max(omega_curvature(&rep, 20, p.seed + t as u64));
            }
            for (name, v) in lie2coh::grp::GP2_EQUATIONS.iter().zip(worst) {
                r.residual(&format!("semidirect equation {name}"), v, tol);
            }
            r.residual("curvature of the split representation", omega, tol);
            let (rep, c) = perturbed_alpha_data();
            let tripped: Vec<&str> =
                gp2cocycle_residuals(&rep, &c, 20, p.seed).into_iter().filter(|(_, v)| *v > tol).map(|(n, _)| n).collect();
            r.check("perturbed alpha trips exactly iv", tripped == ["iv"], format!("tripped {tripped:?}"));
        }
    }
    r
}
