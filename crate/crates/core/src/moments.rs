//! Closed-form moments of both operators, cell integrals of `1, t, t²`, the
//! second central moment and the growth constants for higher moments.

use serde::Serialize;

use crate::analysis::rho;
use crate::error::{Error, Result};
use crate::operators::{KantorovichEvaluator, OperatorParams};
use crate::qcalc::{q_integer, QParam};

/// `∫ t^i d_q t` over cell `k` for `i = 0, 1, 2`, in closed form.
pub fn cell_integrals(k: u32, p: &OperatorParams) -> (f64, f64, f64) {
    let qp = p.qp();
    let a = p.alpha();
    let d = p.denominator();
    let k_q = q_integer(k, qp);
    let two = q_integer(2, qp);
    let three = q_integer(3, qp);
    let qk = qp.pow(k as i64);
    let i0 = 1.0 / d;
    let i1 = (two * k_q + qk * (1.0 + 2.0 * a)) / (two * d * d);
    let i2 = (three * k_q * k_q + qk * k_q * ((1.0 + 3.0 * a) * two + 1.0) + (1.0 + 3.0 * a + 3.0 * a * a) * qk * qk)
        / (three * d * d * d);
    (i0, i1, i2)
}

/// `L_n^{α,β}(e_i; q, x)` for `i = 0, 1, 2`, using the family's `m(n)` and `α_{k,n}`.
pub fn moments_point_operator(x: f64, p: &OperatorParams) -> (f64, f64, f64) {
    let qp = p.qp();
    let fam = p.family();
    let n = p.n();
    let a = p.alpha();
    let d = p.denominator();
    let nq = q_integer(n, qp);
    let mq = q_integer(fam.m_of_n(n), qp);
    let a1n = fam.alpha_kn(1, n, x, qp);
    let a1m = fam.alpha_kn(1, fam.m_of_n(n), x, qp);
    let a2n = fam.alpha_kn(2, n, x, qp);
    let e1 = nq / d * x * (1.0 + a1n) + a / d;
    let e2 = nq * mq / (qp.q() * d * d) * x * x * (1.0 + a1m) * (1.0 + a2n)
        + nq * (2.0 * a + 1.0) / (d * d) * x * (1.0 + a1n)
        + a * a / (d * d);
    (1.0, e1, e2)
}

/// `L_n^{*(α,β)}(e_i; q, x)` for `i = 0, 1, 2`, using the family's `m(n)` and `α_{k,n}`.
pub fn moments_kantorovich(x: f64, p: &OperatorParams) -> (f64, f64, f64) {
    let qp = p.qp();
    let q = qp.q();
    let fam = p.family();
    let n = p.n();
    let a = p.alpha();
    let d = p.denominator();
    let nq = q_integer(n, qp);
    let mq = q_integer(fam.m_of_n(n), qp);
    let two = q_integer(2, qp);
    let three = q_integer(3, qp);
    let a1n = fam.alpha_kn(1, n, x, qp);
    let a1m = fam.alpha_kn(1, fam.m_of_n(n), x, qp);
    let a2n = fam.alpha_kn(2, n, x, qp);
    let e1 = nq / d * x * (1.0 + a1n) + q * (1.0 + 2.0 * a) / (two * d);
    let e2 = nq * mq / (q * d * d) * (1.0 + a1m) * (1.0 + a2n) * x * x
        + nq * (three + q * ((1.0 + 3.0 * a) * two + 1.0)) / (three * d * d) * (1.0 + a1n) * x
        + q * q * (1.0 + 3.0 * a + 3.0 * a * a) / (three * d * d);
    (1.0, e1, e2)
}

/// Kantorovich moments `e_1, e_2` rebuilt from the point-operator moments and
/// the cell integrals, term by term.
pub fn kantorovich_from_point_moments(x: f64, p: &OperatorParams) -> (f64, f64) {
    let qp = p.qp();
    let q = qp.q();
    let a = p.alpha();
    let d = p.denominator();
    let two = q_integer(2, qp);
    let three = q_integer(3, qp);
    let (l0, l1, l2) = moments_point_operator(x, p);
    let c = (1.0 + 3.0 * a) * two + 1.0;
    let e1 = l1 - a / d * l0 + q * (1.0 + 2.0 * a) / (two * d) * l0;
    let e2 = l2 - 2.0 * a / d * l1 + a * a / (d * d) * l0 + q * c / (three * d) * l1 - q * a * c / (three * d * d) * l0
        + q * q * (1.0 + 3.0 * a + 3.0 * a * a) / (three * d * d) * l0;
    (e1, e2)
}

/// `L_n^{*(α,β)}((t - x)²; q, x)` from the closed forms.
pub fn second_central_moment(x: f64, p: &OperatorParams) -> f64 {
    let (_, e1, e2) = moments_kantorovich(x, p);
    e2 - 2.0 * x * e1 + x * x
}

/// The upper bound `9(1+β)² ρ_0(x) ([n]_q η + 1) / (q([n]_q + β))` on the
/// second central moment.
pub fn second_central_bound(x: f64, p: &OperatorParams, eta: f64) -> f64 {
    let qp = p.qp();
    let b = 1.0 + p.beta();
    9.0 * b * b * rho(x, 0) * (q_integer(p.n(), qp) * eta + 1.0) / (qp.q() * p.denominator())
}

fn finite(v: f64, what: &str) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(what.to_string()))
    }
}

/// `B_{m,q} = 2m (2/q)^{m(m-1)/2} (1 + α^m q^{m(m-1)/2})`.
pub fn bound_constant_b(m: u32, qp: &QParam, alpha: f64) -> Result<f64> {
    if m < 1 {
        return Err(Error::invalid("m must be at least 1"));
    }
    let e = (m * (m - 1) / 2) as i32;
    let q = qp.q();
    let v = 2.0 * m as f64 * (2.0 / q).powi(e) * (1.0 + alpha.powi(m as i32) * q.powi(e));
    finite(v, &format!("B constant for m = {m}, q = {q}"))
}

/// `A_{m,q} = (m+1)(1+α)^m q^m / [m+1]_q + 2^m (m+1) B_{m,q} / [m+1]_q`.
pub fn bound_constant_a(m: u32, qp: &QParam, alpha: f64) -> Result<f64> {
    let b = bound_constant_b(m, qp, alpha)?;
    let m1 = (m + 1) as f64;
    let qm1 = q_integer(m + 1, qp);
    let v = m1 * (1.0 + alpha).powi(m as i32) * qp.q().powi(m as i32) / qm1 + 2f64.powi(m as i32) * m1 * b / qm1;
    finite(v, &format!("A constant for m = {m}, q = {}", qp.q()))
}

/// Closed against numerically summed moments of the Kantorovich operator at one `x`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentReport {
    pub n: u32,
    pub q: f64,
    pub alpha: f64,
    pub beta: f64,
    pub x: f64,
    pub closed_e0: f64,
    pub closed_e1: f64,
    pub closed_e2: f64,
    pub numeric_e0: f64,
    pub numeric_e1: f64,
    pub numeric_e2: f64,
    pub central2_closed: f64,
    pub central2_numeric: f64,
    pub max_rel_residual: f64,
}

/// Relative difference, zero when both sides vanish.
pub fn relative_residual(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// One [`MomentReport`] per grid point.
pub fn moment_reports(xs: &[f64], p: &OperatorParams) -> Result<Vec<MomentReport>> {
    let mut ev0 = KantorovichEvaluator::new(&|_: f64| 1.0, p.clone());
    let mut ev1 = KantorovichEvaluator::new(&|t: f64| t, p.clone());
    let mut ev2 = KantorovichEvaluator::new(&|t: f64| t * t, p.clone());
    xs.iter()
        .map(|&x| {
            let (c0, c1, c2) = moments_kantorovich(x, p);
            let n0 = ev0.evaluate(x)?.0;
            let n1 = ev1.evaluate(x)?.0;
            let n2 = ev2.evaluate(x)?.0;
            let max_rel_residual = relative_residual(c0, n0)
                .max(relative_residual(c1, n1))
                .max(relative_residual(c2, n2));
            Ok(MomentReport {
                n: p.n(),
                q: p.q(),
                alpha: p.alpha(),
                beta: p.beta(),
                x,
                closed_e0: c0,
                closed_e1: c1,
                closed_e2: c2,
                numeric_e0: n0,
                numeric_e1: n1,
                numeric_e2: n2,
                central2_closed: c2 - 2.0 * x * c1 + x * x,
                central2_numeric: n2 - 2.0 * x * n1 + x * x,
                max_rel_residual,
            })
        })
        .collect()
}
