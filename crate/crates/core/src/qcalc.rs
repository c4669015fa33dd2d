//! q-arithmetic and Jackson calculus.
//!
//! Every routine works in binary64. For `q = 1` the q-integers reduce to the
//! ordinary integers; the Jackson derivative and integral degenerate there and
//! fall back to classical finite differences and adaptive Simpson quadrature.
//! Results that took a fallback path carry `fallback = true` in their
//! [`QEval`].

use crate::error::{Error, Result};
use crate::quad::adaptive_simpson;

/// Default absolute truncation tolerance for infinite q-series.
pub const DEFAULT_SERIES_TOL: f64 = 1e-14;
/// Default hard cap on the length of any truncated series.
pub const DEFAULT_MAX_TERMS: usize = 10_000;

/// Below this distance from 1 the q-integer is summed term by term.
const NEAR_ONE: f64 = 1e-8;

/// The deformation parameter `q ∈ (0, 1]` together with the tolerances used
/// whenever an infinite q-series is truncated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QParam {
    q: f64,
    series_tol: f64,
    max_terms: usize,
}

impl QParam {
    pub fn new(q: f64) -> Result<Self> {
        Self::with_tolerances(q, DEFAULT_SERIES_TOL, DEFAULT_MAX_TERMS)
    }

    pub fn with_tolerances(q: f64, series_tol: f64, max_terms: usize) -> Result<Self> {
        if !(q > 0.0 && q <= 1.0) {
            return Err(Error::invalid(format!("q = {q} is outside (0, 1]")));
        }
        if !(series_tol > 0.0 && series_tol.is_finite()) {
            return Err(Error::invalid(format!("series_tol = {series_tol} must be positive")));
        }
        if max_terms < 1 {
            return Err(Error::invalid("max_terms must be at least 1"));
        }
        Ok(Self { q, series_tol, max_terms })
    }

    /// Same tolerances, different `q`.
    pub fn with_q(&self, q: f64) -> Result<Self> {
        Self::with_tolerances(q, self.series_tol, self.max_terms)
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn series_tol(&self) -> f64 {
        self.series_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    /// `true` when `q = 1`, where all q-objects reduce to their classical forms.
    pub fn is_classical(&self) -> bool {
        self.q == 1.0
    }

    /// `q^k` for a possibly negative exponent.
    pub fn pow(&self, k: i64) -> f64 {
        if self.is_classical() {
            1.0
        } else {
            (k as f64 * self.ln_q()).exp()
        }
    }

    fn ln_q(&self) -> f64 {
        if self.q >= 0.5 {
            // 1 - q is exact here (Sterbenz), so ln_1p keeps full precision.
            (-(1.0 - self.q)).ln_1p()
        } else {
            self.q.ln()
        }
    }
}

/// A closed interval `[lower, upper]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !(lower <= upper) {
            return Err(Error::invalid(format!("interval [{lower}, {upper}] is reversed")));
        }
        Ok(Self { lower, upper })
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// A value produced by a Jackson-calculus routine with its diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QEval {
    pub value: f64,
    /// Series terms (or function evaluations, on a fallback path) consumed.
    pub terms: usize,
    /// Set when the q-definition degenerated and a classical method was used.
    pub fallback: bool,
}

/// The q-integer `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_integer(n: u32, qp: &QParam) -> f64 {
    let q = qp.q;
    if n == 0 {
        return 0.0;
    }
    if qp.is_classical() {
        return n as f64;
    }
    if 1.0 - q < NEAR_ONE {
        // the ratio form cancels catastrophically this close to 1
        let mut sum = 0.0;
        let mut pow = 1.0;
        for _ in 0..n {
            sum += pow;
            pow *= q;
        }
        return sum;
    }
    -(n as f64 * qp.ln_q()).exp_m1() / (1.0 - q)
}

/// The q-factorial `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32, qp: &QParam) -> Result<f64> {
    let mut acc = 1.0;
    for i in 1..=n {
        acc *= q_integer(i, qp);
        if !acc.is_finite() {
            return Err(Error::Overflow(format!("[{n}]_q! exceeds the f64 range")));
        }
    }
    Ok(acc)
}

/// The Gaussian binomial coefficient, evaluated as a telescoping product of
/// q-integer ratios so that no factorial is ever formed.
pub fn q_binomial(n: u32, k: u32, qp: &QParam) -> Result<f64> {
    if k > n {
        return Err(Error::domain(format!("q-binomial with k = {k} > n = {n}")));
    }
    let k = k.min(n - k);
    let mut acc = 1.0;
    for i in 1..=k {
        acc *= q_integer(n - k + i, qp) / q_integer(i, qp);
    }
    if !acc.is_finite() {
        return Err(Error::Overflow(format!("q-binomial ({n} choose {k}) exceeds the f64 range")));
    }
    Ok(acc)
}

/// The q-shifted power `(x - c)_q^k = ∏_{i<k} (x - c q^i)`.
pub fn q_shifted_power(x: f64, c: f64, k: u32, qp: &QParam) -> f64 {
    let mut acc = 1.0;
    let mut cq = c;
    for _ in 0..k {
        acc *= x - cq;
        cq *= qp.q;
    }
    acc
}

fn fd_step(x: f64, order: u32) -> f64 {
    f64::EPSILON.powf(1.0 / (order as f64 + 2.0)) * x.abs().max(1.0)
}

/// Classical central-difference approximation of `f^(k)(x)`.
fn central_difference<F>(f: &F, x: f64, k: u32) -> f64
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let h = fd_step(x, k);
    // Δ^k with nodes x + (i - k/2) h
    let mut acc = 0.0;
    let mut binom = 1.0;
    for i in 0..=k {
        let sign = if (k - i).is_multiple_of(2) { 1.0 } else { -1.0 };
        acc += sign * binom * f(x + (i as f64 - k as f64 / 2.0) * h);
        binom = binom * (k - i) as f64 / (i + 1) as f64;
    }
    acc / h.powi(k as i32)
}

/// The Jackson derivative `(f(qx) - f(x)) / (qx - x)`.
///
/// At `x = 0` or `q = 1` the quotient is undefined and the ordinary derivative
/// is returned instead, estimated by a central difference with step
/// `cbrt(ε)·max(1, |x|)`.
pub fn jackson_derivative<F>(f: &F, x: f64, qp: &QParam) -> Result<QEval>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if x == 0.0 || qp.is_classical() {
        let h = f64::EPSILON.cbrt() * x.abs().max(1.0);
        let value = (f(x + h) - f(x - h)) / (2.0 * h);
        if !value.is_finite() {
            return Err(Error::domain(format!("finite-difference fallback for D_q f({x}) is not finite")));
        }
        return Ok(QEval { value, terms: 2, fallback: true });
    }
    let qx = qp.q * x;
    let value = (f(qx) - f(x)) / (qx - x);
    if !value.is_finite() {
        return Err(Error::domain(format!("D_q f({x}) is not finite")));
    }
    Ok(QEval { value, terms: 2, fallback: false })
}

/// The k-th iterated Jackson derivative `D_q^k f(x)`.
///
/// Computed as the nested application of [`jackson_derivative`] on the
/// lattice `x, qx, ..., q^k x`. When the lattice degenerates (`x = 0` or
/// `q = 1`) the classical k-th derivative is estimated by central differences
/// and rescaled by `[k]_q!/k!`, which is the limit of `D_q^k f` at the origin
/// for analytic `f`.
pub fn jackson_derivative_iter<F>(f: &F, x: f64, k: u32, qp: &QParam) -> Result<QEval>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if k == 0 {
        return Ok(QEval { value: f(x), terms: 1, fallback: false });
    }
    if x == 0.0 || qp.is_classical() {
        let mut value = central_difference(f, x, k);
        if !qp.is_classical() {
            let classical = QParam { q: 1.0, ..*qp };
            value *= q_factorial(k, qp)? / q_factorial(k, &classical)?;
        }
        if !value.is_finite() {
            return Err(Error::domain(format!("finite-difference fallback for D_q^{k} f({x}) is not finite")));
        }
        return Ok(QEval { value, terms: k as usize + 1, fallback: true });
    }
    let q = qp.q;
    let mut nodes = Vec::with_capacity(k as usize + 1);
    let mut y = x;
    for _ in 0..=k {
        nodes.push(y);
        y *= q;
    }
    let mut level: Vec<f64> = nodes.iter().map(|&t| f(t)).collect();
    for _ in 0..k {
        // D_q g(y) = (g(qy) - g(y)) / ((q - 1) y), with g known on the lattice
        for i in 0..level.len() - 1 {
            level[i] = (level[i + 1] - level[i]) / (nodes[i + 1] - nodes[i]);
        }
        level.pop();
    }
    let value = level[0];
    if !value.is_finite() {
        return Err(Error::domain(format!("D_q^{k} f({x}) is not finite")));
    }
    Ok(QEval { value, terms: k as usize + 1, fallback: false })
}

/// The Jackson integral `∫_0^a f(t) d_q t = (1 - q) a Σ_j q^j f(q^j a)`.
///
/// The series stops once, for two consecutive terms with `a q^j <= 1`, the tail
/// estimate `(1 - q) a q^j · max(|f(a q^j)|, |f(0)|) · q/(1 - q)` falls below
/// `series_tol`. A single small term may just be a sign change of `f`, and a
/// decaying `f` is tiny at the first nodes when `a` is large. At `q = 1` the integral is the ordinary one and is
/// computed by adaptive Simpson.
pub fn jackson_integral_zero<F>(f: &F, a: f64, qp: &QParam) -> Result<QEval>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if !(a >= 0.0) || !a.is_finite() {
        return Err(Error::domain(format!("Jackson integral upper limit a = {a} must be finite and >= 0")));
    }
    if a == 0.0 {
        return Ok(QEval { value: 0.0, terms: 0, fallback: false });
    }
    if qp.is_classical() {
        let (value, evals) = adaptive_simpson(f, 0.0, a, qp.series_tol)?;
        return Ok(QEval { value, terms: evals, fallback: true });
    }
    let q = qp.q;
    let scale = (1.0 - q) * a;
    let mut sum = 0.0;
    let mut comp = 0.0;
    let mut point = a;
    let mut weight = scale;
    let tail_factor = q / (1.0 - q);
    let f0 = f(0.0).abs();
    let mut small = 0;
    for j in 0..qp.max_terms {
        let fx = f(point);
        let term = weight * fx;
        if !term.is_finite() {
            return Err(Error::domain(format!("integrand not finite at t = {point}")));
        }
        // Kahan summation; the series can be long when q is close to 1
        let y = term - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if point <= 1.0 && weight * fx.abs().max(f0) * tail_factor < qp.series_tol {
            small += 1;
            if small == 2 {
                return Ok(QEval { value: sum, terms: j + 1, fallback: false });
            }
        } else {
            small = 0;
        }
        point *= q;
        weight *= q;
    }
    Err(Error::NonConvergence {
        what: format!("Jackson integral over [0, {a}] at q = {q}"),
        terms: qp.max_terms,
    })
}

/// `∫_a^b f(t) d_q t = ∫_0^b - ∫_0^a` for `0 <= a <= b`.
///
/// At `q = 1` the interval is integrated directly rather than by differencing
/// two integrals from the origin.
pub fn jackson_integral<F>(f: &F, a: f64, b: f64, qp: &QParam) -> Result<QEval>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if !(0.0 <= a && a <= b) {
        return Err(Error::domain(format!("Jackson integral needs 0 <= a <= b, got [{a}, {b}]")));
    }
    if a == b {
        return Ok(QEval { value: 0.0, terms: 0, fallback: false });
    }
    if qp.is_classical() {
        let (value, evals) = adaptive_simpson(f, a, b, qp.series_tol)?;
        return Ok(QEval { value, terms: evals, fallback: true });
    }
    let upper = jackson_integral_zero(f, b, qp)?;
    let lower = jackson_integral_zero(f, a, qp)?;
    Ok(QEval {
        value: upper.value - lower.value,
        terms: upper.terms + lower.terms,
        fallback: false,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(q: f64) -> QParam {
        QParam::new(q).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn qparam_rejects_out_of_range() {
        assert!(QParam::new(0.0).is_err());
        assert!(QParam::new(1.5).is_err());
        assert!(QParam::new(f64::NAN).is_err());
        assert!(QParam::with_tolerances(0.5, 0.0, 10).is_err());
        assert!(QParam::with_tolerances(0.5, 1e-12, 0).is_err());
        assert!(QParam::new(1.0).unwrap().is_classical());
    }

    #[test]
    fn interval_rejects_reversed() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert_eq!(Interval::new(0.25, 1.0).unwrap().width(), 0.75);
    }

    #[test]
    fn q_integer_examples() {
        assert_eq!(q_integer(5, &qp(1.0)), 5.0);
        assert_eq!(q_integer(0, &qp(0.5)), 0.0);
        // 1 + 0.5 + 0.25
        assert!(close(q_integer(3, &qp(0.5)), 1.75, 1e-15));
    }

    #[test]
    fn q_integer_near_one_uses_sum() {
        let q: f64 = 1.0 - 1e-10;
        let direct: f64 = (0..40).map(|j| q.powi(j)).sum();
        assert!(close(q_integer(40, &qp(q)), direct, 1e-14));
    }

    #[test]
    fn q_factorial_examples() {
        assert_eq!(q_factorial(0, &qp(0.3)).unwrap(), 1.0);
        // 1 * 1.5 * 1.75
        assert!(close(q_factorial(3, &qp(0.5)).unwrap(), 2.625, 1e-15));
        assert_eq!(q_factorial(4, &qp(1.0)).unwrap(), 24.0);
    }

    #[test]
    fn q_factorial_overflow_is_reported() {
        assert!(matches!(q_factorial(400, &qp(1.0)), Err(Error::Overflow(_))));
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(7, 0, &qp(0.4)).unwrap(), 1.0);
        assert!(close(q_binomial(4, 2, &qp(1.0)).unwrap(), 6.0, 1e-15));
        // [4][3] / ([2][1]) = 1.875 * 1.75 / 1.5
        assert!(close(q_binomial(4, 2, &qp(0.5)).unwrap(), 2.1875, 1e-15));
        assert!(matches!(q_binomial(2, 3, &qp(0.5)), Err(Error::Domain(_))));
    }

    #[test]
    fn q_binomial_matches_factorial_ratio() {
        let p = qp(0.7);
        for n in 0..15 {
            for k in 0..=n {
                let ratio = q_factorial(n, &p).unwrap()
                    / (q_factorial(k, &p).unwrap() * q_factorial(n - k, &p).unwrap());
                assert!(close(q_binomial(n, k, &p).unwrap(), ratio, 1e-13), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn shifted_power_examples() {
        assert_eq!(q_shifted_power(2.0, 3.0, 0, &qp(0.5)), 1.0);
        assert_eq!(q_shifted_power(1.0, 1.0, 2, &qp(0.5)), 0.0);
        // (2 - 1)(2 - 0.5)(2 - 0.25)
        assert!(close(q_shifted_power(2.0, 1.0, 3, &qp(0.5)), 2.625, 1e-15));
        assert_eq!(q_shifted_power(3.0, 1.0, 3, &qp(1.0)), 8.0);
    }

    #[test]
    fn jackson_derivative_examples() {
        let sq = |t: f64| t * t;
        // (f(1) - f(2)) / (1 - 2) = 3 = [2]_{0.5} * 2
        let d = jackson_derivative(&sq, 2.0, &qp(0.5)).unwrap();
        assert!(close(d.value, 3.0, 1e-15));
        assert!(!d.fallback);
        assert_eq!(jackson_derivative(&|_t: f64| 7.0, 1.3, &qp(0.7)).unwrap().value, 0.0);
        assert!(close(jackson_derivative(&|t: f64| t, 0.8, &qp(0.5)).unwrap().value, 1.0, 1e-15));
    }

    #[test]
    fn jackson_derivative_fallback_at_origin() {
        let d = jackson_derivative(&|t: f64| t.exp(), 0.0, &qp(0.5)).unwrap();
        assert!(d.fallback);
        assert!((d.value - 1.0).abs() < 1e-9);
        let d1 = jackson_derivative(&|t: f64| t * t, 1.5, &qp(1.0)).unwrap();
        assert!(d1.fallback);
        assert!((d1.value - 3.0).abs() < 1e-9);
    }

    #[test]
    fn jackson_derivative_of_monomials() {
        for &q in &[0.3, 0.5, 0.9] {
            let p = qp(q);
            for m in 0..=10u32 {
                for &x in &[0.3, 1.0, 1.7] {
                    let d = jackson_derivative(&|t: f64| t.powi(m as i32), x, &p).unwrap().value;
                    let expected = q_integer(m, &p) * if m == 0 { 0.0 } else { x.powi(m as i32 - 1) };
                    assert!((d - expected).abs() <= 1e-12 * expected.abs().max(1e-12), "q={q} m={m} x={x}");
                }
            }
        }
    }

    #[test]
    fn iterated_derivative_examples() {
        let p = qp(0.5);
        let cube = |t: f64| t * t * t;
        assert_eq!(jackson_derivative_iter(&cube, 1.0, 0, &p).unwrap().value, 1.0);
        // nested: D_q t^2 = [2] t, D_q([2] t) = [2][1]
        let d2 = jackson_derivative_iter(&|t: f64| t * t, 1.0, 2, &p).unwrap().value;
        assert!(close(d2, 1.5, 1e-14));
        let d2lin = jackson_derivative_iter(&|t: f64| t, 1.0, 2, &p).unwrap().value;
        assert!(d2lin.abs() < 1e-14);
    }

    /// Explicit lattice expansion of D_q^k, checked against the nested scheme:
    /// D_q^k f(x) = q^{-k(k-1)/2} ((q-1)x)^{-k} Σ_i (-1)^i q^{i(i-1)/2} [k choose i]_q f(q^{k-i} x)
    #[test]
    fn iterated_derivative_matches_explicit_expansion() {
        let f = |t: f64| (0.3 * t).exp() / (1.0 + t);
        for &q in &[0.4, 0.7] {
            let p = qp(q);
            for k in 0..=4u32 {
                let x = 1.3;
                let mut acc = 0.0;
                for i in 0..=k {
                    let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
                    acc += sign
                        * q.powi((i * i.saturating_sub(1) / 2) as i32)
                        * q_binomial(k, i, &p).unwrap()
                        * f(q.powi((k - i) as i32) * x);
                }
                let explicit = acc / (q.powi((k * k.saturating_sub(1) / 2) as i32) * ((q - 1.0) * x).powi(k as i32));
                let nested = jackson_derivative_iter(&f, x, k, &p).unwrap().value;
                assert!((nested - explicit).abs() <= 1e-9 * explicit.abs().max(1.0), "q={q} k={k}");
            }
        }
    }

    #[test]
    fn iterated_derivative_at_origin_is_the_q_limit() {
        // D_q^k t^k = [k]_q! everywhere, including the limit at 0
        let p = qp(0.5);
        let d = jackson_derivative_iter(&|t: f64| t * t, 0.0, 2, &p).unwrap();
        assert!(d.fallback);
        assert!((d.value - 1.5).abs() < 1e-5);
    }

    #[test]
    fn jackson_integral_zero_examples() {
        let p = qp(0.5);
        assert!(close(jackson_integral_zero(&|_t: f64| 1.0, 1.0, &p).unwrap().value, 1.0, 1e-13));
        // (1 - q) Σ q^{2j} = 1/(1 + q)
        assert!(close(jackson_integral_zero(&|t: f64| t, 1.0, &p).unwrap().value, 2.0 / 3.0, 1e-13));
        assert!(close(
            jackson_integral_zero(&|t: f64| t * t, 2.0, &p).unwrap().value,
            8.0 / 1.75,
            1e-13
        ));
    }

    #[test]
    fn jackson_integral_of_polynomial_matches_closed_form() {
        let coeffs = [0.5, -1.0, 2.0, 0.25];
        let poly = |t: f64| coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c);
        for &q in &[0.3, 0.6, 0.9, 0.99] {
            let p = qp(q);
            for &a in &[0.2f64, 1.0, 3.5] {
                let closed: f64 = coeffs
                    .iter()
                    .enumerate()
                    .map(|(m, c)| c * a.powi(m as i32 + 1) / q_integer(m as u32 + 1, &p))
                    .sum();
                let v = jackson_integral_zero(&poly, a, &p).unwrap().value;
                assert!(close(v, closed, 1e-12), "q={q} a={a}: {v} vs {closed}");
            }
        }
    }

    #[test]
    fn jackson_integral_interval_examples() {
        let p = qp(0.5);
        assert_eq!(jackson_integral(&|t: f64| t.sin(), 1.0, 1.0, &p).unwrap().value, 0.0);
        assert!(close(jackson_integral(&|_t: f64| 1.0, 0.25, 1.0, &p).unwrap().value, 0.75, 1e-13));
        // (b^2 - a^2)/[2]
        assert!(close(jackson_integral(&|t: f64| t, 0.5, 1.0, &p).unwrap().value, 0.5, 1e-13));
        assert!(jackson_integral(&|t: f64| t, 1.0, 0.5, &p).is_err());
    }

    #[test]
    fn jackson_integral_classical_fallback() {
        let e = jackson_integral(&|t: f64| t * t, 0.0, 3.0, &qp(1.0)).unwrap();
        assert!(e.fallback);
        assert!(close(e.value, 9.0, 1e-13));
    }

    #[test]
    fn jackson_integral_reports_non_convergence() {
        let p = QParam::with_tolerances(0.999, 1e-14, 100).unwrap();
        let err = jackson_integral_zero(&|_t: f64| 1.0, 1.0, &p).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { terms: 100, .. }));
    }

    #[test]
    fn q_integer_recurrence_and_ratio_bound() {
        for &q in &[0.1, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99] {
            let p = qp(q);
            for n in 1..=200u32 {
                let lhs = q_integer(n, &p);
                let rhs = q_integer(n - 1, &p) + q.powi(n as i32 - 1);
                assert!((lhs - rhs).abs() <= 1e-15 * lhs, "q={q} n={n}: {lhs} vs {rhs}");
                let next = q_integer(n + 1, &p);
                assert!(1.0 <= next && next <= 2.0 * lhs, "q={q} k={n}");
            }
        }
    }

    #[test]
    fn q_integer_tends_to_n_as_q_to_one() {
        for n in 1..=50u32 {
            let mut prev = 0.0;
            for k in 1..=6 {
                let v = q_integer(n, &qp(1.0 - 10f64.powi(-k)));
                assert!(v >= prev);
                prev = v;
            }
            // n - [n]_q = Σ_j (1 - q^j) <= (1 - q) n(n-1)/2
            let deficit = n as f64 - prev;
            assert!(deficit >= 0.0 && deficit <= 1e-6 * (n * (n - 1)) as f64 / 2.0 + 1e-12, "n={n}");
            if n <= 4 {
                assert!(deficit < 1e-5);
            }
        }
    }

    #[test]
    fn jackson_zero_decaying_integrand_far_out() {
        // e^{-t} is ~0 at the first nodes; the sum must not stop there
        let qp = QParam::new(0.2).unwrap();
        let a = 3000.0;
        let direct: f64 = (0..400).map(|j| 0.8 * a * 0.2f64.powi(j) * (-a * 0.2f64.powi(j)).exp()).sum();
        let got = jackson_integral_zero(&|t: f64| (-t).exp(), a, &qp).unwrap().value;
        assert!((got - direct).abs() < 1e-14, "{got} vs {direct}");
    }
}
