use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

pub const MAX_VARS: usize = 4;
pub const MAX_ORDER: usize = 3;

/// Monomial table shared by all jets with the same variable count and order.
#[derive(Debug)]
struct Shape {
    nvars: usize,
    order: usize,
    monos: Vec<Vec<u8>>,
    lookup: HashMap<Vec<u8>, usize>,
    products: Vec<(usize, usize, usize)>,
}

impl Shape {
    fn build(nvars: usize, order: usize) -> Shape {
        let mut monos: Vec<Vec<u8>> = vec![vec![0; nvars]];
        for deg in 1..=order {
            let mut layer = Vec::new();
            gen(nvars, deg, &mut vec![0u8; nvars], 0, &mut layer);
            monos.extend(layer);
        }
        let lookup: HashMap<Vec<u8>, usize> =
            monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut products = Vec::new();
        for (i, a) in monos.iter().enumerate() {
            for (j, b) in monos.iter().enumerate() {
                let s: Vec<u8> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(&k) = lookup.get(&s) {
                    products.push((i, j, k));
                }
            }
        }
        Shape { nvars, order, monos, lookup, products }
    }

    fn get(nvars: usize, order: usize) -> Arc<Shape> {
        assert!(nvars <= MAX_VARS && order <= MAX_ORDER, "jet shape out of range");
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<Shape>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = cache.lock().expect("jet shape cache poisoned");
        guard.entry((nvars, order)).or_insert_with(|| Arc::new(Shape::build(nvars, order))).clone()
    }
}

fn gen(nvars: usize, deg: usize, cur: &mut Vec<u8>, pos: usize, out: &mut Vec<Vec<u8>>) {
    if pos + 1 == nvars {
        cur[pos] = deg as u8;
        out.push(cur.clone());
        cur[pos] = 0;
        return;
    }
    if nvars == 0 {
        return;
    }
    for d in (0..=deg).rev() {
        cur[pos] = d as u8;
        gen(nvars, deg - d, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

/// Truncated multivariate Taylor polynomial with double coefficients.
#[derive(Clone, Debug)]
pub struct Jet {
    shape: Arc<Shape>,
    coeffs: Vec<f64>,
}

impl Jet {
    pub fn constant(c: f64, nvars: usize, order: usize) -> Jet {
        let shape = Shape::get(nvars, order);
        let mut coeffs = vec![0.0; shape.monos.len()];
        coeffs[0] = c;
        Jet { shape, coeffs }
    }

    /// The jet `c + t_var`.
    pub fn variable(var: usize, c: f64, nvars: usize, order: usize) -> Jet {
        assert!(var < nvars);
        let mut j = Jet::constant(c, nvars, order);
        if order >= 1 {
            let mut m = vec![0u8; nvars];
            m[var] = 1;
            let k = j.shape.lookup[&m];
            j.coeffs[k] = 1.0;
        }
        j
    }

    pub fn scalar(c: f64) -> Jet {
        Jet::constant(c, 0, 0)
    }

    /// A constant with the same shape as `self`.
    pub fn lift(&self, c: f64) -> Jet {
        let mut coeffs = vec![0.0; self.coeffs.len()];
        coeffs[0] = c;
        Jet { shape: self.shape.clone(), coeffs }
    }

    pub fn zero_like(&self) -> Jet {
        self.lift(0.0)
    }

    pub fn nvars(&self) -> usize {
        self.shape.nvars
    }

    pub fn order(&self) -> usize {
        self.shape.order
    }

    pub fn value(&self) -> f64 {
        self.coeffs[0]
    }

    /// Taylor coefficient of the monomial with exponent vector `exps`.
    pub fn coeff(&self, exps: &[u8]) -> f64 {
        self.shape.lookup.get(exps).map_or(0.0, |&k| self.coeffs[k])
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    fn same(&self, other: &Jet) {
        assert!(Arc::ptr_eq(&self.shape, &other.shape), "jets with different shapes");
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet { shape: self.shape.clone(), coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    fn nilpotent(&self) -> Jet {
        let mut n = self.clone();
        n.coeffs[0] = 0.0;
        n
    }

    fn series(&self, weights: &[f64]) -> Jet {
        // sum_k weights[k] * n^k with n the nilpotent part
        let n = self.nilpotent();
        let mut acc = self.lift(weights[0]);
        let mut pw = self.lift(1.0);
        for w in weights.iter().skip(1).take(self.order()) {
            pw = &pw * &n;
            acc = &acc + &pw.scale(*w);
        }
        acc
    }

    pub fn recip(&self) -> Jet {
        let c = self.value();
        let ws: Vec<f64> =
            (0..=self.order()).map(|k| (-1f64).powi(k as i32) / c.powi(k as i32 + 1)).collect();
        self.series(&ws)
    }

    pub fn exp(&self) -> Jet {
        let e = self.value().exp();
        let mut ws = Vec::with_capacity(self.order() + 1);
        let mut fact = 1.0;
        for k in 0..=self.order() {
            if k > 0 {
                fact *= k as f64;
            }
            ws.push(e / fact);
        }
        self.series(&ws)
    }

    /// Partial derivative in `var` evaluated at `t_var = 0`, as a jet in the
    /// remaining variables (same shape, top degree lost).
    pub fn derivative_at_zero(&self, var: usize) -> Jet {
        let mut out = self.zero_like();
        for (k, m) in self.shape.monos.iter().enumerate() {
            if m[var] != 0 {
                continue;
            }
            let mut up = m.clone();
            up[var] = 1;
            if let Some(&src) = self.shape.lookup.get(&up) {
                out.coeffs[k] = self.coeffs[src];
            }
        }
        out
    }
}

impl Add for &Jet {
    type Output = Jet;
    fn add(self, o: &Jet) -> Jet {
        self.same(o);
        Jet {
            shape: self.shape.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Jet {
    type Output = Jet;
    fn sub(self, o: &Jet) -> Jet {
        self.same(o);
        Jet {
            shape: self.shape.clone(),
            coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Jet {
    type Output = Jet;
    fn mul(self, o: &Jet) -> Jet {
        self.same(o);
        let mut coeffs = vec![0.0; self.coeffs.len()];
        for &(i, j, k) in &self.shape.products {
            coeffs[k] += self.coeffs[i] * o.coeffs[j];
        }
        Jet { shape: self.shape.clone(), coeffs }
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        self.scale(-1.0)
    }
}

/// Dense matrix of jets sharing one shape.
#[derive(Clone, Debug)]
pub struct JetMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Jet>,
}

impl JetMat {
    pub fn zeros(rows: usize, cols: usize, like: &Jet) -> JetMat {
        JetMat { rows, cols, data: vec![like.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, like: &Jet) -> JetMat {
        let mut m = JetMat::zeros(n, n, like);
        for i in 0..n {
            m.data[i * n + i] = like.lift(1.0);
        }
        m
    }

    pub fn from_f64(rows: usize, cols: usize, vals: &[f64], like: &Jet) -> JetMat {
        assert_eq!(vals.len(), rows * cols);
        JetMat { rows, cols, data: vals.iter().map(|&v| like.lift(v)).collect() }
    }

    pub fn get(&self, i: usize, j: usize) -> &Jet {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Jet) {
        self.data[i * self.cols + j] = v;
    }

    pub fn like(&self) -> Jet {
        match self.data.first() {
            Some(j) => j.zero_like(),
            None => Jet::scalar(0.0),
        }
    }

    pub fn values(&self) -> Vec<f64> {
        self.data.iter().map(Jet::value).collect()
    }

    pub fn mul(&self, o: &JetMat) -> JetMat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in jet product");
        let like = if self.data.is_empty() { o.like() } else { self.like() };
        let mut out = JetMat::zeros(self.rows, o.cols, &like);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * o.get(k, j));
                }
            }
        }
        out
    }

    pub fn add(&self, o: &JetMat) -> JetMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        JetMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &JetMat) -> JetMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        JetMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> JetMat {
        JetMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a.scale(s)).collect() }
    }

    pub fn scale_jet(&self, s: &Jet) -> JetMat {
        JetMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn neg(&self) -> JetMat {
        self.scale(-1.0)
    }

    pub fn transpose(&self) -> JetMat {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        JetMat { rows: self.cols, cols: self.rows, data }
    }

    /// Inverse by Gauss-Jordan elimination with partial pivoting on the
    /// constant terms. Panics on a singular constant part.
    pub fn inverse(&self) -> JetMat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let like = self.like();
        let mut a = self.clone();
        let mut inv = JetMat::identity(n, &like);
        for c in 0..n {
            let p = (c..n)
                .max_by(|&x, &y| {
                    a.get(x, c).value().abs().partial_cmp(&a.get(y, c).value().abs()).unwrap()
                })
                .unwrap();
            assert!(a.get(p, c).value().abs() > 1e-300, "singular jet matrix");
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let r = a.get(c, c).recip();
            for j in 0..n {
                a.data[c * n + j] = &a.data[c * n + j] * &r;
                inv.data[c * n + j] = &inv.data[c * n + j] * &r;
            }
            for i in 0..n {
                if i == c {
                    continue;
                }
                let f = a.get(i, c).clone();
                for j in 0..n {
                    let da = &f * a.get(c, j);
                    let di = &f * inv.get(c, j);
                    a.data[i * n + j] = &a.data[i * n + j] - &da;
                    inv.data[i * n + j] = &inv.data[i * n + j] - &di;
                }
            }
        }
        inv
    }

    /// Matrix exponential by its power series truncated after `terms` terms.
    pub fn exp(&self, terms: usize) -> JetMat {
        assert_eq!(self.rows, self.cols);
        let like = self.like();
        let mut acc = JetMat::identity(self.rows, &like);
        let mut pw = JetMat::identity(self.rows, &like);
        for n in 1..terms {
            pw = pw.mul(self).scale(1.0 / n as f64);
            acc = acc.add(&pw);
        }
        acc
    }

    pub fn max_abs_value(&self) -> f64 {
        self.data.iter().fold(0.0, |m, j| m.max(j.value().abs()))
    }

    pub fn map(&self, f: impl Fn(&Jet) -> Jet) -> JetMat {
        JetMat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_of_constant() {
        let j = Jet::constant(0.5, 1, 2).exp();
        assert!((j.value() - 0.5f64.exp()).abs() < 1e-15);
        assert_eq!(j.coeff(&[1]), 0.0);
    }

    #[test]
    fn exp_of_variable() {
        let j = Jet::variable(0, 0.0, 1, 2).exp();
        assert!((j.coeff(&[0]) - 1.0).abs() < 1e-15);
        assert!((j.coeff(&[1]) - 1.0).abs() < 1e-15);
        assert!((j.coeff(&[2]) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn exp_chain_rule() {
        let a = 0.3;
        let j = Jet::variable(0, a, 1, 1).exp();
        assert!((j.coeff(&[0]) - a.exp()).abs() < 1e-15);
        assert!((j.coeff(&[1]) - a.exp()).abs() < 1e-15);
    }

    #[test]
    fn reciprocal_inverts() {
        let x = Jet::variable(0, 2.0, 2, 3);
        let y = Jet::variable(1, 0.5, 2, 3);
        let j = &(&x * &y) + &x;
        let p = &j * &j.recip();
        assert!((p.value() - 1.0).abs() < 1e-14);
        assert!(p.nilpotent().max_abs() < 1e-13);
    }

    #[test]
    fn mixed_partial() {
        // d/ds d/dt (s*t + t) at 0 = 1
        let s = Jet::variable(0, 0.0, 2, 2);
        let t = Jet::variable(1, 0.0, 2, 2);
        let f = &(&s * &t) + &t;
        let d = f.derivative_at_zero(1).derivative_at_zero(0);
        assert_eq!(d.value(), 1.0);
    }

    #[test]
    fn matrix_inverse() {
        let t = Jet::variable(0, 0.0, 1, 2);
        let mut m = JetMat::from_f64(2, 2, &[2.0, 1.0, 1.0, 1.0], &t);
        m.set(0, 1, &m.get(0, 1).clone() + &t);
        let p = m.mul(&m.inverse());
        for i in 0..2 {
            for j in 0..2 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((p.get(i, j).value() - e).abs() < 1e-14);
                assert!(p.get(i, j).nilpotent().max_abs() < 1e-13);
            }
        }
    }
}
