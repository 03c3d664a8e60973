//! The JSON problem file and its conversion into library values.

use lie2coh::ext::TwoCocycle;
use lie2coh::lie2::{CrossedModuleAlg, TwoVectorSpace};
use lie2coh::liealg::LieAlgebra;
use lie2coh::numeric::{parse_rational, Matrix, Rational};
use lie2coh::tworep::{adjoint_rep, TwoRep};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

/// Input error; reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn bad<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

/// A rational entry: a JSON integer or a string `"p"` / `"p/q"`.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Int(i64),
    Str(String),
}

impl Num {
    fn value(&self, at: &str) -> Result<Rational, InputError> {
        match self {
            Num::Int(n) => Ok(Rational::from_integer((*n).into())),
            Num::Str(s) => match parse_rational(s) {
                Some(r) => Ok(r),
                None => bad(format!("{at}: cannot parse {s:?} as a rational")),
            },
        }
    }
}

type RawMatrix = Vec<Vec<Num>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    #[serde(default)]
    pub named: Option<String>,
    #[serde(default)]
    pub dim: Option<usize>,
    /// `[i, j, [c_0, …]]` sets `[e_i, e_j]` for `i < j`.
    #[serde(default)]
    pub brackets: Vec<(usize, usize, Vec<Num>)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Lie2Spec {
    pub g: AlgebraSpec,
    pub h: AlgebraSpec,
    #[serde(default)]
    pub mu: Option<RawMatrix>,
    /// `L_{e_k}` on `g`, one matrix per basis vector of `h`.
    #[serde(default)]
    pub action: Option<Vec<RawMatrix>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoVectorSpec {
    #[serde(rename = "W")]
    pub w: usize,
    #[serde(rename = "V")]
    pub v: usize,
    #[serde(default)]
    pub phi: Option<RawMatrix>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoRepSpec {
    #[serde(default)]
    pub adjoint: bool,
    #[serde(default)]
    pub rho1: Option<Vec<RawMatrix>>,
    #[serde(default, rename = "rho0_W")]
    pub rho0_w: Option<Vec<RawMatrix>>,
    #[serde(default, rename = "rho0_V")]
    pub rho0_v: Option<Vec<RawMatrix>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub max_degree: Option<usize>,
    pub tolerance: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub lie2algebra: Option<Lie2Spec>,
    #[serde(default)]
    pub two_vector: Option<TwoVectorSpec>,
    #[serde(default)]
    pub two_rep: Option<TwoRepSpec>,
    /// Flat coordinates `(ω₀, α, φ)` of 2-cochains, by name.
    #[serde(default)]
    pub cochains: BTreeMap<String, Vec<Num>>,
    #[serde(default)]
    pub options: Options,
}

impl ProblemFile {
    pub fn load(path: &Path) -> Result<ProblemFile, InputError> {
        let text = std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| InputError(format!("{}: {}", path.display(), e.0)))
    }

    pub fn parse(text: &str) -> Result<ProblemFile, InputError> {
        serde_json::from_str(text)
            .map_err(|e| InputError(format!("parse error at line {}, column {}: {e}", e.line(), e.column())))
    }

    pub fn xmod(&self) -> Result<Option<CrossedModuleAlg>, InputError> {
        let Some(spec) = &self.lie2algebra else { return Ok(None) };
        let g = algebra(&spec.g, "lie2algebra.g")?;
        let h = algebra(&spec.h, "lie2algebra.h")?;
        let (dg, dh) = (g.dim(), h.dim());
        let mu = match &spec.mu {
            Some(m) => matrix(m, dh, dg, "lie2algebra.mu")?,
            None => Matrix::zeros(dh, dg),
        };
        let action = match &spec.action {
            Some(a) => matrices(a, dh, dg, dg, "lie2algebra.action")?,
            None => vec![Matrix::zeros(dg, dg); dh],
        };
        Ok(Some(CrossedModuleAlg::new(g, h, mu, action)))
    }

    pub fn space(&self) -> Result<Option<TwoVectorSpace>, InputError> {
        let Some(spec) = &self.two_vector else { return Ok(None) };
        let phi = match &spec.phi {
            Some(m) => matrix(m, spec.v, spec.w, "two_vector.phi")?,
            None => Matrix::zeros(spec.v, spec.w),
        };
        Ok(Some(TwoVectorSpace::new(phi)))
    }

    pub fn rep(&self) -> Result<Option<TwoRep>, InputError> {
        let Some(spec) = &self.two_rep else { return Ok(None) };
        let Some(x) = self.xmod()? else { return bad("two_rep needs a lie2algebra section") };
        if spec.adjoint {
            if spec.rho1.is_some() || spec.rho0_w.is_some() || spec.rho0_v.is_some() {
                return bad("two_rep: adjoint excludes explicit matrices");
            }
            let rep = adjoint_rep(&x);
            if let Some(s) = self.space()? {
                if s != rep.target {
                    return bad("two_vector does not match the adjoint 2-vector space μ: g → h");
                }
            }
            return Ok(Some(rep));
        }
        let Some(space) = self.space()? else { return bad("two_rep needs a two_vector section") };
        let (dg, dh, w, v) = (x.dim_g(), x.dim_h(), space.dim_w, space.dim_v);
        let or_zero = |m: &Option<Vec<RawMatrix>>, n, rows, cols, at| match m {
            Some(m) => matrices(m, n, rows, cols, at),
            None => Ok(vec![Matrix::zeros(rows, cols); n]),
        };
        let rho1 = or_zero(&spec.rho1, dg, w, v, "two_rep.rho1")?;
        let rho0w = or_zero(&spec.rho0_w, dh, w, w, "two_rep.rho0_W")?;
        let rho0v = or_zero(&spec.rho0_v, dh, v, v, "two_rep.rho0_V")?;
        Ok(Some(TwoRep::new(x, space, rho1, rho0w, rho0v)))
    }

    pub fn require_rep(&self) -> Result<TwoRep, InputError> {
        self.rep()?.ok_or_else(|| InputError("missing two_rep section".into()))
    }

    pub fn cochain(&self, rep: &TwoRep, name: &str) -> Result<TwoCocycle, InputError> {
        let Some(raw) = self.cochains.get(name) else { return bad(format!("no cochain named {name:?}")) };
        let at = format!("cochains.{name}");
        let vals = raw.iter().map(|n| n.value(&at)).collect::<Result<Vec<_>, _>>()?;
        TwoCocycle::from_vec(rep.clone(), &vals).map_err(|e| InputError(format!("{at}: {e}")))
    }

    /// A splitting shift `(λ₀, λ₁)` stored as a flat list: `λ₀` (`V × dim h`)
    /// then `λ₁` (`W × dim g`), both row-major.
    pub fn shift(&self, rep: &TwoRep, name: &str) -> Result<(Matrix, Matrix), InputError> {
        let Some(raw) = self.cochains.get(name) else { return bad(format!("no cochain named {name:?}")) };
        let at = format!("cochains.{name}");
        let (dg, dh, w, v) = (rep.source.dim_g(), rep.source.dim_h(), rep.dim_w(), rep.dim_v());
        if raw.len() != v * dh + w * dg {
            return bad(format!("{at}: a splitting shift needs {} entries", v * dh + w * dg));
        }
        let vals = raw.iter().map(|n| n.value(&at)).collect::<Result<Vec<_>, _>>()?;
        Ok((Matrix::from_flat(v, dh, vals[..v * dh].to_vec()), Matrix::from_flat(w, dg, vals[v * dh..].to_vec())))
    }
}

fn algebra(spec: &AlgebraSpec, at: &str) -> Result<LieAlgebra, InputError> {
    if let Some(name) = &spec.named {
        if spec.dim.is_some() || !spec.brackets.is_empty() {
            return bad(format!("{at}: give either a name or dim/brackets"));
        }
        return match name.as_str() {
            "aff1" => Ok(LieAlgebra::aff1()),
            "heisenberg" => Ok(LieAlgebra::heisenberg()),
            "sl2" => Ok(LieAlgebra::sl2()),
            _ => bad(format!("{at}: unknown algebra {name:?} (known: aff1, heisenberg, sl2)")),
        };
    }
    let Some(n) = spec.dim else { return bad(format!("{at}: missing dim")) };
    let mut entries = Vec::with_capacity(spec.brackets.len());
    for (k, (i, j, v)) in spec.brackets.iter().enumerate() {
        let here = format!("{at}.brackets[{k}]");
        if !(i < j && *j < n) {
            return bad(format!("{here}: need i < j < {n}"));
        }
        if v.len() != n {
            return bad(format!("{here}: value needs {n} coordinates"));
        }
        entries.push((*i, *j, v.iter().map(|c| c.value(&here)).collect::<Result<Vec<_>, _>>()?));
    }
    Ok(LieAlgebra::from_brackets(n, &entries))
}

fn matrix(raw: &RawMatrix, rows: usize, cols: usize, at: &str) -> Result<Matrix, InputError> {
    // an empty list stands for any matrix with no entries
    if raw.is_empty() && rows * cols == 0 {
        return Ok(Matrix::zeros(rows, cols));
    }
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return bad(format!("{at}: expected a {rows} × {cols} matrix"));
    }
    let data = raw.iter().flatten().map(|c| c.value(at)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_flat(rows, cols, data))
}

fn matrices(raw: &[RawMatrix], n: usize, rows: usize, cols: usize, at: &str) -> Result<Vec<Matrix>, InputError> {
    if raw.len() != n {
        return bad(format!("{at}: expected {n} matrices"));
    }
    raw.iter().enumerate().map(|(k, m)| matrix(m, rows, cols, &format!("{at}[{k}]"))).collect()
}
