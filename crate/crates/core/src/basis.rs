//! Generating families `φ_n` and an executable check of the conditions that
//! make the operators positive and convergent.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::qcalc::{jackson_derivative, jackson_derivative_iter, q_integer, QParam};

/// A sequence of functions `φ_n` whose alternating q-derivatives supply the
/// operator weights, together with the index map `m(n)` and correction terms
/// `α_{k,n}(x)` linking consecutive derivative orders:
///
/// `D_q^k φ_n(x) = -[n]_q D_q^{k-1} φ_{m(n)}(x) (1 + α_{k,n}(x))`.
///
/// Families are parameterised by `q` at call time so that one family value
/// serves a whole `q_n` schedule.
pub trait GeneratingFamily: Send + Sync + fmt::Debug {
    fn name(&self) -> &str;

    fn phi(&self, n: u32, x: f64, qp: &QParam) -> f64;

    /// `D_q^k φ_n(x)`. Defaults to the nested Jackson derivative of `phi`.
    fn dq_phi(&self, n: u32, k: u32, x: f64, qp: &QParam) -> Result<f64> {
        Ok(jackson_derivative_iter(&|t: f64| self.phi(n, t, qp), x, k, qp)?.value)
    }

    fn m_of_n(&self, n: u32) -> u32;

    fn alpha_kn(&self, k: u32, n: u32, x: f64, qp: &QParam) -> f64;

    /// The operator weights `w_k(x) = q^{k(k-1)/2} D_q^k φ_n(x) (-x)^k / [k]_q!`
    /// for `k = 0, 1, 2, ...`.
    fn weights<'a>(&'a self, n: u32, x: f64, qp: &'a QParam) -> Box<dyn Iterator<Item = Result<f64>> + 'a> {
        let mut factorial = 1.0;
        let mut x_pow = 1.0;
        Box::new((0u32..).map(move |k| {
            if k > 0 {
                factorial *= q_integer(k, qp);
                x_pow *= -x;
            }
            let tri = qp.pow(k as i64 * (k as i64 - 1) / 2);
            let d = self.dq_phi(n, k, x, qp)?;
            let w = tri * d * x_pow / factorial;
            Ok(if w.is_nan() { 0.0 } else { w })
        }))
    }
}

/// The q-Baskakov family `φ_n(x) = ∏_{j<n} (1 + q^j x)^{-1}`, which reduces to
/// `(1 + x)^{-n}` at `q = 1`. Here `m(n) = n + 1`, every `α_{k,n}` vanishes and
/// `D_q^k φ_n = (-1)^k [n]_q [n+1]_q ... [n+k-1]_q φ_{n+k}`.
#[derive(Debug, Clone, Copy, Default)]
pub struct QBaskakov;

/// The built-in q-Baskakov family.
pub fn q_baskakov_family() -> Arc<dyn GeneratingFamily> {
    Arc::new(QBaskakov)
}

impl QBaskakov {
    fn ln_phi(n: u32, x: f64, qp: &QParam) -> f64 {
        let mut acc = 0.0;
        let mut qj = 1.0;
        for _ in 0..n {
            acc -= (qj * x).ln_1p();
            qj *= qp.q();
        }
        acc
    }
}

impl GeneratingFamily for QBaskakov {
    fn name(&self) -> &str {
        "q-baskakov"
    }

    fn phi(&self, n: u32, x: f64, qp: &QParam) -> f64 {
        let mut acc = 1.0;
        let mut qj = 1.0;
        for _ in 0..n {
            acc /= 1.0 + qj * x;
            qj *= qp.q();
        }
        acc
    }

    fn dq_phi(&self, n: u32, k: u32, x: f64, qp: &QParam) -> Result<f64> {
        let mut coeff = 1.0;
        for i in 0..k {
            coeff *= q_integer(n + i, qp);
        }
        if k % 2 == 1 {
            coeff = -coeff;
        }
        Ok(coeff * self.phi(n + k, x, qp))
    }

    fn m_of_n(&self, n: u32) -> u32 {
        n + 1
    }

    fn alpha_kn(&self, _k: u32, _n: u32, _x: f64, _qp: &QParam) -> f64 {
        0.0
    }

    fn weights<'a>(&'a self, n: u32, x: f64, qp: &'a QParam) -> Box<dyn Iterator<Item = Result<f64>> + 'a> {
        Box::new(QBaskakovWeights::new(n, x, qp))
    }
}

// exp() of anything below this underflows to a subnormal or zero
const LN_UNDERFLOW: f64 = -700.0;

/// Weights of the q-Baskakov operator by the ratio recurrence
/// `w_{k+1}/w_k = q^k [n+k]_q / [k+1]_q · x / (1 + q^{n+k} x)`,
/// carried in log space until they are representable.
struct QBaskakovWeights<'a> {
    n: u32,
    x: f64,
    qp: &'a QParam,
    k: u32,
    w: f64,
    ln_w: Option<f64>,
}

impl<'a> QBaskakovWeights<'a> {
    fn new(n: u32, x: f64, qp: &'a QParam) -> Self {
        let ln0 = QBaskakov::ln_phi(n, x, qp);
        let (w, ln_w) = if ln0 > LN_UNDERFLOW { (ln0.exp(), None) } else { (0.0, Some(ln0)) };
        Self { n, x, qp, k: 0, w, ln_w }
    }

    fn ratio(&self) -> f64 {
        let k = self.k;
        let qp = self.qp;
        qp.pow(k as i64) * q_integer(self.n + k, qp) / q_integer(k + 1, qp) * self.x
            / (1.0 + qp.pow((self.n + k) as i64) * self.x)
    }
}

impl Iterator for QBaskakovWeights<'_> {
    type Item = Result<f64>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = match self.ln_w {
            Some(lw) => lw.exp(),
            None => self.w,
        };
        if self.x > 0.0 {
            let r = self.ratio();
            match self.ln_w {
                Some(lw) => {
                    let next = lw + r.ln();
                    if next > LN_UNDERFLOW {
                        self.ln_w = None;
                        self.w = next.exp();
                    } else {
                        self.ln_w = Some(next);
                    }
                }
                None => self.w *= r,
            }
        } else {
            self.w = 0.0;
            self.ln_w = None;
        }
        self.k += 1;
        Some(Ok(current))
    }
}

/// Outcome of [`verify_conditions`]; one record per family and `q`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub family: String,
    pub q: f64,
    pub n_tested: Vec<u32>,
    pub grid: Vec<f64>,
    pub k_max: u32,
    pub tol: f64,
    /// Grid points where some `D_q^k φ_n`, `k <= k_max`, failed to evaluate finitely.
    pub cond1_violations: usize,
    /// `max_n |φ_n(0) - 1|`.
    pub cond2_max_residual: f64,
    /// Sign violations of `(-1)^k D_q^k φ_n(x) >= 0`.
    pub cond3_violations: usize,
    /// Largest relative residual of the derivative recurrence using the family's `dq_phi`.
    pub cond4_max_residual: f64,
    /// Same recurrence with the left side replaced by a numerical Jackson
    /// derivative of order `k-1`, at grid points `x > 0`.
    pub cond4_numeric_max_residual: f64,
    /// Per `n`: `max |α_{k,n}(x)|` over the grid and `k <= k_max`.
    pub alpha_max_trace: Vec<f64>,
    /// Per `n`: `[n]_q / [m(n)]_q`.
    pub cond5_ratio_trace: Vec<f64>,
    /// Grid points where `φ_n(x)(1 + α_{0,n}(x)) > 1`.
    pub cond6_violations: usize,
    pub passed: bool,
}

fn relative_residual(lhs: f64, rhs: f64) -> f64 {
    let scale = lhs.abs().max(rhs.abs());
    if scale == 0.0 {
        0.0
    } else {
        (lhs - rhs).abs() / scale
    }
}

/// Checks the family conditions on a grid and reports every residual; it
/// never stops at the first violation.
///
/// Condition (i) is read as "every `D_q^k φ_n` with `k <= k_max` evaluates
/// finitely on the grid". The uniform decay of `α_{k,n}` is reported per `n`
/// in `alpha_max_trace`, not asserted.
pub fn verify_conditions(
    fam: &dyn GeneratingFamily,
    n_set: &[u32],
    x_grid: &[f64],
    k_max: u32,
    qp: &QParam,
    tol: f64,
) -> Result<ConditionReport> {
    if k_max < 1 {
        return Err(Error::invalid("k_max must be at least 1"));
    }
    if n_set.contains(&0) {
        return Err(Error::invalid("n must be positive"));
    }
    if x_grid.iter().any(|&x| !(x >= 0.0 && x.is_finite())) {
        return Err(Error::invalid("grid points must be finite and non-negative"));
    }

    let mut cond1 = 0;
    let mut cond2: f64 = 0.0;
    let mut cond3 = 0;
    let mut cond4: f64 = 0.0;
    let mut cond4_num: f64 = 0.0;
    let mut cond6 = 0;
    let mut alpha_trace = Vec::with_capacity(n_set.len());
    let mut ratio_trace = Vec::with_capacity(n_set.len());

    for &n in n_set {
        let m = fam.m_of_n(n);
        let qn = q_integer(n, qp);
        cond2 = cond2.max((fam.phi(n, 0.0, qp) - 1.0).abs());
        ratio_trace.push(qn / q_integer(m, qp));
        let mut alpha_max: f64 = 0.0;

        for &x in x_grid {
            let phi = fam.phi(n, x, qp);
            if phi.is_infinite() {
                return Err(Error::Overflow(format!("phi({n}, {x}) overflowed")));
            }
            if phi * (1.0 + fam.alpha_kn(0, n, x, qp)) > 1.0 + tol {
                cond6 += 1;
            }

            let mut finite = true;
            for k in 0..=k_max {
                let alpha = fam.alpha_kn(k, n, x, qp);
                alpha_max = alpha_max.max(alpha.abs());
                let d = match fam.dq_phi(n, k, x, qp) {
                    Ok(v) if v.is_finite() => v,
                    _ => {
                        finite = false;
                        continue;
                    }
                };
                let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
                if sign * d < 0.0 {
                    cond3 += 1;
                }
                if k == 0 {
                    continue;
                }
                let prev_m = match fam.dq_phi(m, k - 1, x, qp) {
                    Ok(v) if v.is_finite() => v,
                    _ => {
                        finite = false;
                        continue;
                    }
                };
                let rhs = -qn * prev_m * (1.0 + alpha);
                cond4 = cond4.max(relative_residual(d, rhs));

                if x > 0.0 {
                    let lower = |t: f64| fam.dq_phi(n, k - 1, t, qp).unwrap_or(f64::NAN);
                    match jackson_derivative(&lower, x, qp) {
                        Ok(num) => cond4_num = cond4_num.max(relative_residual(num.value, rhs)),
                        Err(_) => finite = false,
                    }
                }
            }
            if !finite {
                cond1 += 1;
            }
        }
        alpha_trace.push(alpha_max);
    }

    let passed = cond1 == 0
        && cond2 < tol
        && cond3 == 0
        && cond4 < tol
        && cond4_num < tol
        && cond6 == 0;

    Ok(ConditionReport {
        family: fam.name().to_string(),
        q: qp.q(),
        n_tested: n_set.to_vec(),
        grid: x_grid.to_vec(),
        k_max,
        tol,
        cond1_violations: cond1,
        cond2_max_residual: cond2,
        cond3_violations: cond3,
        cond4_max_residual: cond4,
        cond4_numeric_max_residual: cond4_num,
        alpha_max_trace: alpha_trace,
        cond5_ratio_trace: ratio_trace,
        cond6_violations: cond6,
        passed,
    })
}

/// `max(0, sup_x max{α_{1,n}(x), α_{1,m(n)}(x), α_{2,n}(x)})` over `grid`.
pub fn eta_n(fam: &dyn GeneratingFamily, n: u32, grid: &[f64], qp: &QParam) -> f64 {
    let m = fam.m_of_n(n);
    grid.iter()
        .map(|&x| {
            fam.alpha_kn(1, n, x, qp)
                .max(fam.alpha_kn(1, m, x, qp))
                .max(fam.alpha_kn(2, n, x, qp))
        })
        .fold(0.0, f64::max)
}
