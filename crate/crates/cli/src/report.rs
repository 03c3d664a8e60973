use lie2coh::diag::Diagnostics;
use lie2coh::numeric::{format_rational, Matrix, Rational};
use std::process::ExitCode;

/// Collected report lines and the overall verdict.
#[derive(Debug, Default)]
pub struct Report {
    lines: Vec<String>,
    failed: bool,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.lines.push(s.into());
    }

    pub fn check(&mut self, name: &str, ok: bool, detail: impl AsRef<str>) {
        let detail = detail.as_ref();
        let verdict = if ok { "PASS" } else { "FAIL" };
        self.failed |= !ok;
        if detail.is_empty() {
            self.lines.push(format!("CHECK {name}: {verdict}"));
        } else {
            self.lines.push(format!("CHECK {name}: {verdict} {detail}"));
        }
    }

    /// A check passing iff `d` is empty, listing every violation.
    pub fn diagnostics(&mut self, name: &str, d: &Diagnostics) {
        if d.is_empty() {
            self.check(name, true, "");
        } else {
            self.check(name, false, format!("{} violation(s)", d.len()));
            for v in d {
                self.lines.push(format!("  {v}"));
            }
        }
    }

    /// `residual ≤ tolerance`. Residuals below `1e-12` print as such so
    /// that reports do not depend on rounding noise.
    pub fn residual(&mut self, name: &str, residual: f64, tolerance: f64) {
        let shown = if residual == 0.0 {
            "0".to_string()
        } else if residual < 1e-12 {
            "< 1e-12".to_string()
        } else {
            format!("{residual:.1e}")
        };
        let bound = if tolerance == 0.0 { "exact".to_string() } else { format!("tolerance {tolerance:.0e}") };
        self.check(name, residual <= tolerance, format!("residual {shown} ({bound})"));
    }

    pub fn finish(self) -> ExitCode {
        for l in &self.lines {
            println!("{l}");
        }
        if self.failed {
            println!("RESULT: FAIL");
            ExitCode::from(1)
        } else {
            println!("RESULT: PASS");
            ExitCode::SUCCESS
        }
    }
}

pub fn vector(v: &[Rational]) -> String {
    format!("[{}]", v.iter().map(format_rational).collect::<Vec<_>>().join(", "))
}

pub fn matrix(m: &Matrix) -> String {
    format!("[{}]", (0..m.rows()).map(|i| vector(m.row(i))).collect::<Vec<_>>().join(", "))
}
