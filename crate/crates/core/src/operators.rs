//! The Stancu-type q-Baskakov operator and its Kantorovich variant, evaluated
//! by truncated series summation.

use std::sync::Arc;

use crate::analysis::rho;
use crate::basis::{q_baskakov_family, GeneratingFamily};
use crate::error::{Error, Result};
use crate::qcalc::{jackson_integral, jackson_integral_zero, q_integer, Interval, QParam};

/// Default evaluation horizon for `x`.
pub const DEFAULT_X_MAX: f64 = 10.0;

/// How the inner q-integral of the Kantorovich operator is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InnerRoute {
    /// `q^{k-1} ∫ f(t) d_q t` over the rescaled cell, one telescoping
    /// difference of integrals from zero per cell.
    #[default]
    Transformed,
    /// `∫ f(q^{1-k} t) d_q t` over the original cell.
    Direct,
}

/// Operator order, q, Stancu shift and scale, and the generating family.
#[derive(Debug, Clone)]
pub struct OperatorParams {
    n: u32,
    qp: QParam,
    alpha: f64,
    beta: f64,
    family: Arc<dyn GeneratingFamily>,
    tail_gamma: u32,
    x_max: f64,
    inner_route: InnerRoute,
}

impl OperatorParams {
    pub fn new(n: u32, qp: QParam, alpha: f64, beta: f64, family: Arc<dyn GeneratingFamily>) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("n must be at least 1"));
        }
        if !(alpha >= 0.0 && alpha.is_finite() && beta.is_finite()) {
            return Err(Error::invalid(format!("need finite alpha >= 0, got alpha = {alpha}, beta = {beta}")));
        }
        if alpha > beta {
            return Err(Error::invalid(format!("alpha exceeds beta ({alpha} > {beta})")));
        }
        Ok(Self {
            n,
            qp,
            alpha,
            beta,
            family,
            tail_gamma: 0,
            x_max: DEFAULT_X_MAX,
            inner_route: InnerRoute::default(),
        })
    }

    /// Parameters for the q-Baskakov family.
    pub fn q_baskakov(n: u32, qp: QParam, alpha: f64, beta: f64) -> Result<Self> {
        Self::new(n, qp, alpha, beta, q_baskakov_family())
    }

    /// Same shift, scale and family with a different order and q.
    pub fn with_order(&self, n: u32, qp: QParam) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid("n must be at least 1"));
        }
        Ok(Self { n, qp, ..self.clone() })
    }

    /// Growth index of the functions the operator will be applied to, used by
    /// the truncation guard: `|f(t)| <= M (1 + t^{γ+2})`.
    pub fn with_tail_gamma(mut self, gamma: u32) -> Self {
        self.tail_gamma = gamma;
        self
    }

    pub fn with_x_max(mut self, x_max: f64) -> Result<Self> {
        if !(x_max > 0.0 && x_max.is_finite()) {
            return Err(Error::invalid(format!("x_max must be positive, got {x_max}")));
        }
        self.x_max = x_max;
        Ok(self)
    }

    pub fn with_inner_route(mut self, route: InnerRoute) -> Self {
        self.inner_route = route;
        self
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn qp(&self) -> &QParam {
        &self.qp
    }

    pub fn q(&self) -> f64 {
        self.qp.q()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn family(&self) -> &dyn GeneratingFamily {
        self.family.as_ref()
    }

    pub fn tail_gamma(&self) -> u32 {
        self.tail_gamma
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn inner_route(&self) -> InnerRoute {
        self.inner_route
    }

    /// `[n]_q + β`.
    pub fn denominator(&self) -> f64 {
        q_integer(self.n, &self.qp) + self.beta
    }

    fn check_x(&self, x: f64) -> Result<()> {
        if !(0.0..=self.x_max).contains(&x) {
            return Err(Error::domain(format!("x = {x} outside [0, {}]", self.x_max)));
        }
        Ok(())
    }
}

/// Bookkeeping from a truncated operator series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesDiagnostics {
    pub terms_used: usize,
    pub weight_sum: f64,
    /// `max(1 - weight_sum, w_K ρ_γ(node_K))` at the stopping index `K`.
    pub tail_bound: f64,
    /// False when every weight past the last one used is exactly zero (`x = 0`).
    pub truncated: bool,
}

/// The weight `w_k(x) = q^{k(k-1)/2} D_q^k φ_n(x) (-x)^k / [k]_q!`.
pub fn weight(k: u32, x: f64, p: &OperatorParams) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::domain(format!("x = {x} must be >= 0")));
    }
    p.family
        .weights(p.n, x, &p.qp)
        .nth(k as usize)
        .expect("weight sequence is unbounded")
}

/// The node `([k]_q + q^{k-1} α) / (q^{k-1} ([n]_q + β))`.
pub fn sample_point(k: u32, p: &OperatorParams) -> f64 {
    let qk1 = p.qp.pow(k as i64 - 1);
    (q_integer(k, &p.qp) + qk1 * p.alpha) / (qk1 * p.denominator())
}

/// The integration cell `[q([k]_q + q^{k-1}α), [k+1]_q + q^k α] / ([n]_q + β)`.
pub fn kantorovich_cell(k: u32, p: &OperatorParams) -> Interval {
    let qp = &p.qp;
    let d = p.denominator();
    let lower = qp.q() * (q_integer(k, qp) + qp.pow(k as i64 - 1) * p.alpha) / d;
    let upper = (q_integer(k + 1, qp) + qp.pow(k as i64) * p.alpha) / d;
    Interval { lower, upper }
}

/// Cell `k` rescaled by `q^{1-k}`; consecutive cells share endpoints.
fn transformed_lower(k: u32, p: &OperatorParams) -> f64 {
    let qp = &p.qp;
    (q_integer(k, qp) + qp.pow(k as i64 - 1) * p.alpha) / (qp.pow(k as i64 - 2) * p.denominator())
}

/// Compensated (Neumaier) running sum.
#[derive(Default)]
struct Sum {
    sum: f64,
    comp: f64,
}

impl Sum {
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Sums `Σ w_k(x) g(k)` with the truncation rule: stop once the weights
/// account for all mass up to `series_tol` and `w_k ρ_γ(node_k)` has been
/// below `series_tol` for two consecutive `k`.
fn sum_series<G>(x: f64, p: &OperatorParams, mut g: G) -> Result<(f64, SeriesDiagnostics)>
where
    G: FnMut(u32) -> Result<(f64, f64)>,
{
    let tol = p.qp.series_tol();
    let max_terms = p.qp.max_terms();
    let mut acc = Sum::default();
    let mut mass = Sum::default();
    let mut small = 0;
    for (k, w) in p.family.weights(p.n, x, &p.qp).take(max_terms).enumerate() {
        let w = w?;
        let guard = if w > 0.0 {
            let (value, node) = g(k as u32)?;
            acc.add(w * value);
            mass.add(w);
            w * rho(node, p.tail_gamma)
        } else {
            0.0
        };
        small = if guard < tol { small + 1 } else { 0 };
        let weight_sum = mass.value();
        let slack = 16.0 * (k + 1) as f64 * f64::EPSILON;
        if small >= 2 && weight_sum >= 1.0 - tol - slack {
            return Ok((
                acc.value(),
                SeriesDiagnostics {
                    terms_used: k + 1,
                    weight_sum,
                    tail_bound: (1.0 - weight_sum).max(guard),
                    truncated: x > 0.0,
                },
            ));
        }
    }
    Err(Error::NonConvergence { what: format!("operator series at x = {x}"), terms: max_terms })
}

/// `L_n^{α,β}(f; q, x) = Σ_k w_k(x) f(node_k)`.
pub fn apply_baskakov_stancu<F>(f: &F, x: f64, p: &OperatorParams) -> Result<(f64, SeriesDiagnostics)>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    p.check_x(x)?;
    sum_series(x, p, |k| {
        let node = sample_point(k, p);
        Ok((f(node), node))
    })
}

/// `L_n^{*(α,β)}(f; q, x) = ([n]_q+β) Σ_k w_k(x) ∫_{cell_k} f(q^{1-k} t) d_q t`.
pub fn apply_kantorovich<F>(f: &F, x: f64, p: &OperatorParams) -> Result<(f64, SeriesDiagnostics)>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    KantorovichEvaluator::new(f, p.clone()).evaluate(x)
}

/// Evaluates the Kantorovich operator for one `f` at many `x`. The cell
/// integrals do not depend on `x` and are computed once, on demand.
pub struct KantorovichEvaluator<'f, F: ?Sized> {
    f: &'f F,
    params: OperatorParams,
    /// Integrals from zero to the rescaled cell endpoints.
    from_zero: Vec<f64>,
    cells: Vec<f64>,
}

impl<'f, F> KantorovichEvaluator<'f, F>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    pub fn new(f: &'f F, params: OperatorParams) -> Self {
        Self { f, params, from_zero: Vec::new(), cells: Vec::new() }
    }

    pub fn params(&self) -> &OperatorParams {
        &self.params
    }

    /// `∫_{cell_k} f(q^{1-k} t) d_q t`.
    pub fn cell_integral(&mut self, k: u32) -> Result<f64> {
        while self.cells.len() <= k as usize {
            let next = self.compute_cell(self.cells.len() as u32)?;
            self.cells.push(next);
        }
        Ok(self.cells[k as usize])
    }

    fn compute_cell(&mut self, k: u32) -> Result<f64> {
        let p = &self.params;
        let f = self.f;
        let qp = &p.qp;
        if p.inner_route == InnerRoute::Direct {
            let cell = kantorovich_cell(k, p);
            let scale = qp.pow(1 - k as i64);
            return Ok(jackson_integral(&|t: f64| f(scale * t), cell.lower, cell.upper, qp)?.value);
        }
        if qp.is_classical() {
            let lo = transformed_lower(k, p);
            let hi = transformed_lower(k + 1, p);
            return Ok(jackson_integral(f, lo, hi, qp)?.value);
        }
        while self.from_zero.len() <= k as usize + 1 {
            let a = transformed_lower(self.from_zero.len() as u32, p);
            self.from_zero.push(jackson_integral_zero(f, a, qp)?.value);
        }
        let k = k as usize;
        Ok(qp.pow(k as i64 - 1) * (self.from_zero[k + 1] - self.from_zero[k]))
    }

    pub fn evaluate(&mut self, x: f64) -> Result<(f64, SeriesDiagnostics)> {
        self.params.check_x(x)?;
        let params = self.params.clone();
        let d = params.denominator();
        let (sum, diag) = sum_series(x, &params, |k| {
            let integral = self.cell_integral(k)?;
            Ok((d * integral, transformed_lower(k + 1, &params)))
        })?;
        Ok((sum, diag))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcalc::q_binomial;

    fn params(n: u32, q: f64, alpha: f64, beta: f64) -> OperatorParams {
        OperatorParams::q_baskakov(n, QParam::new(q).unwrap(), alpha, beta).unwrap()
    }

    #[test]
    fn rejects_bad_parameters() {
        let qp = QParam::new(0.5).unwrap();
        assert!(OperatorParams::q_baskakov(0, qp, 0.0, 0.0).is_err());
        assert!(OperatorParams::q_baskakov(3, qp, 2.0, 1.0).is_err());
        assert!(OperatorParams::q_baskakov(3, qp, -0.1, 1.0).is_err());
        assert!(OperatorParams::q_baskakov(3, qp, 0.0, 0.0).is_ok());
        assert!(OperatorParams::q_baskakov(3, qp, 0.0, 1.0).is_ok());
        let p = params(3, 0.5, 0.0, 0.0);
        assert!(apply_baskakov_stancu(&|t: f64| t, 10.5, &p).is_err());
        assert!(apply_baskakov_stancu(&|t: f64| t, -1.0, &p).is_err());
    }

    #[test]
    fn weight_examples() {
        let p = params(2, 0.5, 0.0, 0.0);
        assert_eq!(weight(0, 0.0, &p).unwrap(), 1.0);
        assert_eq!(weight(3, 0.0, &p).unwrap(), 0.0);
        assert!((weight(1, 1.0, &p).unwrap() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn weight_matches_binomial_form() {
        let p = params(6, 0.7, 0.0, 0.0);
        let qp = p.qp();
        let x = 1.3;
        for k in 0..25u32 {
            let phi = p.family().phi(6 + k, x, qp);
            let expected =
                qp.pow((k * k.saturating_sub(1) / 2) as i64) * q_binomial(6 + k - 1, k, qp).unwrap() * x.powi(k as i32) * phi;
            let w = weight(k, x, &p).unwrap();
            assert!((w - expected).abs() <= 1e-13 * expected, "k={k}");
        }
    }

    #[test]
    fn sample_point_examples() {
        assert_eq!(sample_point(0, &params(4, 0.5, 0.0, 0.0)), 0.0);
        let p = params(4, 0.3, 0.5, 1.0);
        assert!((sample_point(1, &p) - 1.5 / p.denominator()).abs() < 1e-15);
        let p = params(5, 0.5, 1.0, 2.0);
        assert!((sample_point(3, &p) - 2.0 / 0.984375).abs() < 1e-13);
    }

    #[test]
    fn cell_examples() {
        let p = params(4, 0.5, 0.0, 0.0);
        let c = kantorovich_cell(0, &p);
        assert_eq!(c.lower, 0.0);
        assert!((c.upper - 1.0 / p.denominator()).abs() < 1e-16);

        let p = params(3, 0.5, 1.0, 1.0);
        let c = kantorovich_cell(2, &p);
        assert!((c.lower - 1.0 / 2.75).abs() < 1e-15);
        assert!((c.upper - 2.0 / 2.75).abs() < 1e-15);
        assert!((c.width() - 1.0 / 2.75).abs() < 1e-15);
    }

    #[test]
    fn zero_point_only_first_node() {
        let p = params(5, 0.6, 0.5, 1.0);
        let f = |t: f64| (3.0 * t).sin() + 2.0;
        let (v, d) = apply_baskakov_stancu(&f, 0.0, &p).unwrap();
        assert_eq!(v, f(0.5 / p.denominator()));
        assert!(!d.truncated);
        assert_eq!(d.weight_sum, 1.0);
    }

    #[test]
    fn point_operator_reproduces_first_moment() {
        for &(q, alpha, beta) in &[(0.5, 0.0, 0.0), (0.9, 0.5, 1.0), (1.0, 1.0, 2.0)] {
            let p = params(10, q, alpha, beta);
            let d = p.denominator();
            let nq = q_integer(10, p.qp());
            for i in 0..=20 {
                let x = i as f64 * 0.1;
                let (e0, diag) = apply_baskakov_stancu(&|_| 1.0, x, &p).unwrap();
                assert!((e0 - 1.0).abs() < 1e-13);
                assert!(diag.weight_sum <= 1.0 + 1e-9);
                let (e1, _) = apply_baskakov_stancu(&|t: f64| t, x, &p).unwrap();
                let expected = nq * x / d + alpha / d;
                assert!((e1 - expected).abs() <= 1e-10 * expected.max(1e-300), "q={q} x={x}");
            }
        }
    }

    #[test]
    fn kantorovich_first_moment() {
        for &(q, alpha, beta) in &[(0.5, 0.0, 0.0), (0.9, 0.5, 1.0), (0.99, 1.0, 2.0)] {
            let p = params(10, q, alpha, beta);
            let d = p.denominator();
            let qp = p.qp();
            let nq = q_integer(10, qp);
            let mut e0 = KantorovichEvaluator::new(&|_: f64| 1.0, p.clone());
            let mut e1 = KantorovichEvaluator::new(&|t: f64| t, p.clone());
            for i in 0..=20 {
                let x = i as f64 * 0.1;
                assert!((e0.evaluate(x).unwrap().0 - 1.0).abs() < 1e-12);
                let expected = nq * x / d + q * (1.0 + 2.0 * alpha) / (q_integer(2, qp) * d);
                let got = e1.evaluate(x).unwrap().0;
                assert!((got - expected).abs() <= 1e-10 * expected, "q={q} x={x}");
            }
        }
    }

    #[test]
    fn classical_first_moment() {
        let p = params(8, 1.0, 0.0, 0.0);
        for i in 0..=10 {
            let x = i as f64 * 0.2;
            let (v, _) = apply_kantorovich(&|t: f64| t, x, &p).unwrap();
            assert!((v - (x + 1.0 / 16.0)).abs() < 1e-11, "x={x}");
        }
    }

    #[test]
    fn routes_agree() {
        let p = params(6, 0.7, 0.5, 1.0);
        let direct = p.clone().with_inner_route(InnerRoute::Direct);
        let f = |t: f64| t * t;
        let mut a = KantorovichEvaluator::new(&f, p);
        let mut b = KantorovichEvaluator::new(&f, direct);
        for k in 0..=10 {
            let u = a.cell_integral(k).unwrap();
            let v = b.cell_integral(k).unwrap();
            assert!((u - v).abs() <= 1e-10 * u.abs(), "k={k}");
        }
    }

    #[test]
    fn large_order_near_one() {
        let n = 512;
        let qp = QParam::with_tolerances(1.0 - 1.0 / n as f64, 1e-14, 100_000).unwrap();
        let p = OperatorParams::q_baskakov(n, qp, 0.0, 0.0).unwrap();
        let (v, d) = apply_kantorovich(&|_| 1.0, 10.0, &p).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
        assert!(d.truncated);
    }
}
