//! File-driven commands: validate, cohomology, nabla-check, extend, split, compare.

use crate::problem::{InputError, ProblemFile};
use crate::report::{self, Report};
use lie2coh::ext::{coboundary_solve, cocycle_from_extension, extension_from_cocycle, TwoCocycle};
use lie2coh::lattice::{h0_invariants, h1_der_inn, trivial_cohomology, Component, Lattice, SignTable};
use lie2coh::lie2::CrossedModuleAlg;
use lie2coh::liealg::LieAlgebra;
use lie2coh::random;
use lie2coh::tworep::TwoRep;

pub type Outcome = Result<Report, InputError>;

pub fn validate(file: &ProblemFile) -> Outcome {
    let mut r = Report::new();
    let x = file.xmod()?;
    let rep = file.rep()?;
    if x.is_none() && file.two_vector.is_none() {
        return Err(InputError("nothing to validate: no lie2algebra or two_vector section".into()));
    }
    if let Some(x) = &x {
        r.diagnostics("crossed module", &x.validate());
    }
    if let Some(s) = file.space()? {
        r.line(format!("2-vector space: dim W = {}, dim V = {}", s.dim_w, s.dim_v));
    }
    if let Some(rep) = &rep {
        r.diagnostics("2-representation", &rep.validate());
    }
    if !file.cochains.is_empty() {
        let Some(rep) = &rep else { return Err(InputError("cochains need a two_rep section".into())) };
        for name in file.cochains.keys() {
            let c = file.cochain(rep, name)?;
            r.diagnostics(&format!("cocycle {name}"), &c.equations());
        }
    }
    Ok(r)
}

fn context_check(r: &mut Report, rep: &TwoRep) -> bool {
    let mut d = rep.source.validate();
    d.extend(rep.validate());
    r.diagnostics("context", &d);
    d.is_empty()
}

pub fn cohomology(file: &ProblemFile, degree: usize, trivial: bool) -> Outcome {
    let mut r = Report::new();
    if trivial {
        let Some(x) = file.xmod()? else { return Err(InputError("missing lie2algebra section".into())) };
        let d = x.validate();
        r.diagnostics("crossed module", &d);
        if d.is_empty() {
            r.line(format!("H^{degree}_tot = {}", trivial_cohomology(&x, degree)));
        }
        return Ok(r);
    }
    let rep = file.require_rep()?;
    if !context_check(&mut r, &rep) {
        return Ok(r);
    }
    let lat = Lattice::for_degree(rep.clone(), degree).expect("context was validated");
    let defects: Vec<_> = (0..=degree).flat_map(|n| lat.nabla_square_defects(n).expect("within bound")).collect();
    r.check(&format!("nabla squared through degree {degree}"), defects.is_empty(), blocks(&defects));
    let (h, _) = lat.total_cohomology(degree).expect("within bound");
    r.line(format!("H^{degree} = {h}"));
    match degree {
        0 => {
            let inv = h0_invariants(&rep);
            r.check("invariants", inv == h, format!("H^0 = {h}, invariants = {inv}"));
        }
        1 => {
            let (der, inn, out) = h1_der_inn(&rep);
            r.check("outer derivations", out == h, format!("Der = {der}, Inn = {inn}, Out = {out}, H^1 = {h}"));
        }
        _ => {}
    }
    Ok(r)
}

fn blocks(defects: &[(lie2coh::lattice::LatticeIndex, lie2coh::lattice::LatticeIndex)]) -> String {
    defects
        .iter()
        .map(|(s, t)| format!("({},{},{}) -> ({},{},{})", s.p, s.q, s.r, t.p, t.q, t.r))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Parses `component:q:r` with component `deltar` (δ^(r)), `delta1` (δ_(1)),
/// `partial` or `diffK` for the difference map `Δ_K`.
pub fn parse_corruption(s: &str) -> Result<(Component, usize, usize), InputError> {
    let err = || InputError(format!("bad sign corruption {s:?}; expected component:q:r"));
    let parts: Vec<&str> = s.split(':').collect();
    let [c, q, rr] = parts[..] else { return Err(err()) };
    let comp = match c {
        "deltar" => Component::DeltaR,
        "delta1" => Component::Delta1,
        "partial" => Component::Partial,
        _ => match c.strip_prefix("diff").and_then(|k| k.parse::<usize>().ok()) {
            Some(k) if k >= 1 => Component::DeltaK(k),
            _ => return Err(err()),
        },
    };
    Ok((comp, q.parse().map_err(|_| err())?, rr.parse().map_err(|_| err())?))
}

pub fn nabla_check(
    file: Option<&ProblemFile>,
    max_degree: usize,
    trials: usize,
    seed: u64,
    corrupt: Option<(Component, usize, usize)>,
) -> Outcome {
    let mut r = Report::new();
    let signs = match corrupt {
        Some((c, q, rr)) => SignTable::default().corrupted(c, q, rr),
        None => SignTable::default(),
    };
    let run = |r: &mut Report, label: &str, rep: TwoRep| {
        let lat = Lattice::for_degree(rep, max_degree).expect("context was validated").with_signs(signs.clone());
        for n in 0..=max_degree {
            let d = lat.nabla_square_defects(n).expect("within bound");
            r.check(&format!("{label} nabla^2 degree {n}"), d.is_empty(), blocks(&d));
        }
    };
    if let Some(file) = file {
        let rep = file.require_rep()?;
        if context_check(&mut r, &rep) {
            run(&mut r, "fixture", rep);
        }
    }
    let mut rng = random::rng(seed);
    for t in 0..trials {
        run(&mut r, &format!("random context {t}"), random::context(&mut rng, 2));
    }
    Ok(r)
}

fn algebra_lines(r: &mut Report, name: &str, a: &LieAlgebra) {
    r.line(format!("{name}: dim {}", a.dim()));
    let zero = vec![lie2coh::numeric::zero(); a.dim()];
    for i in 0..a.dim() {
        for j in i + 1..a.dim() {
            let b = a.bracket_basis(i, j);
            if b != zero.as_slice() {
                r.line(format!("  [e{i}, e{j}] = {}", report::vector(b)));
            }
        }
    }
}

fn xmod_lines(r: &mut Report, x: &CrossedModuleAlg) {
    algebra_lines(r, "e1", &x.g);
    algebra_lines(r, "e0", &x.h);
    r.line(format!("mu = {}", report::matrix(&x.mu)));
    for (k, l) in x.action.iter().enumerate() {
        r.line(format!("L(e{k}) = {}", report::matrix(l)));
    }
}

fn cocycle_or_report(r: &mut Report, name: &str, c: &TwoCocycle) -> bool {
    let mut d = c.rep.source.validate();
    d.extend(c.rep.validate());
    if !d.is_empty() {
        r.diagnostics("context", &d);
        return false;
    }
    let d = c.equations();
    r.diagnostics(&format!("cocycle {name}"), &d);
    d.is_empty()
}

pub fn extend(file: &ProblemFile, name: &str) -> Outcome {
    let mut r = Report::new();
    let rep = file.require_rep()?;
    let c = file.cochain(&rep, name)?;
    if !cocycle_or_report(&mut r, name, &c) {
        return Ok(r);
    }
    let e = extension_from_cocycle(&c).expect("cocycle was validated");
    xmod_lines(&mut r, &e.total);
    r.diagnostics("extension", &e.validate());
    Ok(r)
}

pub fn split(file: &ProblemFile, name: &str, shift: Option<&str>) -> Outcome {
    let mut r = Report::new();
    let rep = file.require_rep()?;
    let c = file.cochain(&rep, name)?;
    if !cocycle_or_report(&mut r, name, &c) {
        return Ok(r);
    }
    let e = extension_from_cocycle(&c).expect("cocycle was validated");
    let (mut s1, mut s0) = e.canonical_splitting();
    if let Some(shift) = shift {
        let (l0, l1) = file.shift(&rep, shift)?;
        s1 = s1.add(&e.include1.mul(&l1));
        s0 = s0.add(&e.include0.mul(&l0));
    }
    let (rep2, c2) = cocycle_from_extension(&e, &s1, &s0).expect("block splittings are sections");
    r.check("induced 2-representation", rep2 == rep, "");
    r.line(format!("split cocycle: {}", report::vector(&c2.to_vec())));
    if rep2 == rep {
        compare_lines(&mut r, &c2, &c);
    }
    Ok(r)
}

fn compare_lines(r: &mut Report, a: &TwoCocycle, b: &TwoCocycle) {
    match coboundary_solve(a, b).expect("same context") {
        Some((l0, l1)) => {
            r.line("cohomologous: yes");
            r.line(format!("lambda0 = {}", report::matrix(&l0)));
            r.line(format!("lambda1 = {}", report::matrix(&l1)));
        }
        None => r.line("cohomologous: no"),
    }
}

pub fn compare(file: &ProblemFile, a: &str, b: &str) -> Outcome {
    let mut r = Report::new();
    let rep = file.require_rep()?;
    let (ca, cb) = (file.cochain(&rep, a)?, file.cochain(&rep, b)?);
    let ok_a = cocycle_or_report(&mut r, a, &ca);
    let ok_b = ok_a && cocycle_or_report(&mut r, b, &cb);
    if ok_b {
        compare_lines(&mut r, &ca, &cb);
    }
    Ok(r)
}
