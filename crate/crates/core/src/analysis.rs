//! Weighted spaces, the weighted modulus of smoothness, pointwise and uniform
//! error bounds, and convergence experiments along a `q_n` schedule.

use serde::Serialize;

use crate::basis::eta_n;
use crate::error::{Error, Result};
use crate::moments::{bound_constant_a, second_central_moment};
use crate::operators::{KantorovichEvaluator, OperatorParams};
use crate::qcalc::{q_integer, QParam};

/// The weight `ρ_γ(x) = 1 + x^{γ+2}`.
pub fn rho(x: f64, gamma: u32) -> f64 {
    1.0 + x.powi(gamma as i32 + 2)
}

/// Finest and coarsest `h` of the master lattice, as powers of two.
const H_MIN_EXP: i32 = -20;
const H_MAX_EXP: i32 = 8;

/// Growth index and estimation grids. All suprema over `x >= 0` are taken on
/// `[0, x_max]`; the modulus uses the master lattice `h = 2^{j / h_steps}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WeightedSpaceParams {
    pub gamma: u32,
    pub x_max: f64,
    /// Number of intervals of the `[0, x_max]` grid.
    pub x_steps: usize,
    /// Lattice points per octave of `h`.
    pub h_steps: usize,
    /// Right end of the interval for uniform convergence.
    pub b: f64,
    pub b_steps: usize,
    /// Number of intervals of the `[0, x_max]` grid for the pointwise bound.
    pub pointwise_steps: usize,
}

impl Default for WeightedSpaceParams {
    fn default() -> Self {
        Self { gamma: 0, x_max: 10.0, x_steps: 2000, h_steps: 200, b: 2.0, b_steps: 200, pointwise_steps: 20 }
    }
}

impl WeightedSpaceParams {
    pub fn with_gamma(gamma: u32) -> Self {
        Self { gamma, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.x_max > 0.0 && self.x_max.is_finite()) {
            return Err(Error::invalid(format!("x_max must be positive, got {}", self.x_max)));
        }
        if !(self.b > 0.0 && self.b <= self.x_max) {
            return Err(Error::invalid(format!("b must lie in (0, x_max], got {}", self.b)));
        }
        if self.x_steps == 0 || self.h_steps == 0 || self.b_steps == 0 || self.pointwise_steps == 0 {
            return Err(Error::invalid("grid step counts must be positive"));
        }
        Ok(())
    }

    /// Same parameters with the horizon doubled, for sensitivity checks.
    pub fn doubled(&self) -> Self {
        Self { x_max: 2.0 * self.x_max, x_steps: 2 * self.x_steps, ..*self }
    }

    pub fn x_grid(&self) -> Vec<f64> {
        linspace(self.x_max, self.x_steps)
    }

    pub fn b_grid(&self) -> Vec<f64> {
        linspace(self.b, self.b_steps)
    }

    pub fn pointwise_grid(&self) -> Vec<f64> {
        linspace(self.x_max, self.pointwise_steps)
    }

    /// Lattice values `h <= delta`, ascending.
    pub fn h_lattice(&self, delta: f64) -> Vec<f64> {
        let steps = self.h_steps as i32;
        (H_MIN_EXP * steps..=H_MAX_EXP * steps)
            .map(|j| (j as f64 / steps as f64).exp2())
            .take_while(|&h| h <= delta)
            .collect()
    }
}

/// `steps + 1` equally spaced points from 0 to `upper`.
pub fn linspace(upper: f64, steps: usize) -> Vec<f64> {
    (0..=steps).map(|i| upper * i as f64 / steps as f64).collect()
}

/// Grid estimate of `sup |f(x)| / ρ_γ(x)`; a lower bound of the true norm.
pub fn weighted_norm<F>(f: &F, sp: &WeightedSpaceParams) -> f64
where
    F: Fn(f64) -> f64 + ?Sized,
{
    sp.x_grid().into_iter().map(|x| f(x).abs() / rho(x, sp.gamma)).fold(0.0, f64::max)
}

/// Grid estimate of `Ω_{ρ_γ}(f; δ) = sup_{x, 0<h<=δ} |f(x+h) - f(x)| / (1 + (x+h)^{2+γ})`.
/// Nondecreasing in `δ` because every `δ` sees a prefix of the same lattice;
/// `δ` below the finest lattice value gives 0.
pub fn weighted_modulus<F>(f: &F, delta: f64, sp: &WeightedSpaceParams) -> f64
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let hs = sp.h_lattice(delta);
    let mut best: f64 = 0.0;
    for x in sp.x_grid() {
        let fx = f(x);
        for &h in &hs {
            let v = (f(x + h) - fx).abs() / rho(x + h, sp.gamma);
            best = best.max(v);
        }
    }
    best
}

/// Allowance for comparing modulus estimates at different `δ`: twice the
/// coarser of the `x` spacing and the lattice gap below `δ`, times a local
/// Lipschitz estimate of `f` on `[0, x_max + δ]`.
pub fn modulus_grid_slack<F>(f: &F, delta: f64, sp: &WeightedSpaceParams) -> f64
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let dx = sp.x_max / sp.x_steps as f64;
    let gap = delta * (1.0 - (-1.0 / sp.h_steps as f64).exp2());
    let probe = linspace(sp.x_max + delta, 4 * sp.x_steps);
    let lip = probe
        .windows(2)
        .map(|w| (f(w[1]) - f(w[0])).abs() / (w[1] - w[0]))
        .fold(0.0, f64::max);
    2.0 * dx.max(gap) * lip
}

/// `μ_{x,γ}(t)² = (1 + (x + |t - x|)^{2+γ})²`.
pub fn mu_squared(x: f64, t: f64, gamma: u32) -> f64 {
    let v = rho(x + (t - x).abs(), gamma);
    v * v
}

/// `L*(μ²_{x,γ}; q, x)`, summed numerically.
pub fn mu_squared_moment(x: f64, p: &OperatorParams, gamma: u32) -> Result<f64> {
    let params = p.clone().with_tail_gamma(2 + 2 * gamma);
    let g = |t: f64| mu_squared(x, t, gamma);
    Ok(KantorovichEvaluator::new(&g, params).evaluate(x)?.0)
}

/// The `f`-independent factor `sqrt(L*(μ²)) (1 + sqrt(L*(ψ²)) / δ)` of the
/// pointwise bound.
pub fn pointwise_factor(x: f64, delta: f64, p: &OperatorParams, gamma: u32) -> Result<f64> {
    if !(delta > 0.0) {
        return Err(Error::invalid(format!("delta must be positive, got {delta}")));
    }
    let mu = mu_squared_moment(x, p, gamma)?;
    let psi = second_central_moment(x, p).max(0.0);
    Ok(mu.sqrt() * (1.0 + psi.sqrt() / delta))
}

/// Right side of `|L*f(x) - f(x)| <= sqrt(L*(μ²)) (1 + sqrt(L*(ψ²))/δ) Ω(f; δ)`.
pub fn pointwise_bound<F>(f: &F, x: f64, delta: f64, p: &OperatorParams, sp: &WeightedSpaceParams) -> Result<f64>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    Ok(pointwise_factor(x, delta, p, sp.gamma)? * weighted_modulus(f, delta, sp))
}

/// `δ_n = sqrt(([n]_q η + 1) / (q ([n]_q + β)))`.
pub fn delta_n(n: u32, q_n: f64, beta: f64, eta: f64) -> Result<f64> {
    if !(eta >= 0.0) {
        return Err(Error::invalid(format!("eta must be >= 0, got {eta}")));
    }
    let qp = QParam::new(q_n)?;
    let nq = q_integer(n, &qp);
    Ok(((nq * eta + 1.0) / (q_n * (nq + beta))).sqrt())
}

/// `λ²_{γ,q} = 2^{5+2γ} (2^{4+2γ} + A_{4+2γ,q})`.
pub fn lambda_sq(gamma: u32, qp: &QParam, alpha: f64) -> Result<f64> {
    let m = 4 + 2 * gamma;
    Ok(2f64.powi(5 + 2 * gamma as i32) * (2f64.powi(m as i32) + bound_constant_a(m, qp, alpha)?))
}

/// `K_{γ,q_0} = 24 (1 + β) λ_{γ,q_0}`.
pub fn k_constant(gamma: u32, q0: &QParam, alpha: f64, beta: f64) -> Result<f64> {
    Ok(24.0 * (1.0 + beta) * lambda_sq(gamma, q0, alpha)?.sqrt())
}

/// A sequence `q_n` tending to 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QSchedule {
    Fixed(f64),
    OneMinusInvN,
    NOverNPlus1,
}

impl QSchedule {
    pub fn q_for(&self, n: u32) -> f64 {
        match *self {
            QSchedule::Fixed(q) => q,
            QSchedule::OneMinusInvN => 1.0 - 1.0 / n as f64,
            QSchedule::NOverNPlus1 => n as f64 / (n as f64 + 1.0),
        }
    }

    pub fn pairs(&self, ns: &[u32]) -> Vec<(u32, f64)> {
        ns.iter().map(|&n| (n, self.q_for(n))).collect()
    }
}

/// One order of a convergence experiment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateRow {
    pub n: u32,
    pub q_n: f64,
    /// `sup_{[0,b]} |L*f - f|`.
    pub sup_error_0b: f64,
    /// `sup |L*f - f| / ρ_{γ+1}` on `[0, x_max]`.
    pub weighted_error: f64,
    pub delta_n: f64,
    pub modulus_at_delta: f64,
    /// `K_{γ,q_0} Ω(f; δ_n)`.
    pub bound_rhs: f64,
    /// `sup_x` of the pointwise bound at `δ_n` divided by `ρ_{γ+1}(x)`.
    pub pointwise_rhs_max: f64,
    /// The pointwise bound held at every point of its grid.
    pub pointwise_ok: bool,
    /// `weighted_error <= bound_rhs`.
    pub bound_ok: bool,
}

/// Rows for one function along a schedule.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateTable {
    pub gamma: u32,
    pub q0: f64,
    pub k_constant: f64,
    pub rows: Vec<RateRow>,
}

impl RateTable {
    pub fn all_bounds_hold(&self) -> bool {
        self.rows.iter().all(|r| r.bound_ok && r.pointwise_ok)
    }
}

/// Runs the schedule for several functions at once; the pointwise-bound
/// factor and the weights depend only on the parameters and are shared.
pub fn rate_check_many(
    fs: &[&dyn Fn(f64) -> f64],
    schedule: &[(u32, f64)],
    template: &OperatorParams,
    sp: &WeightedSpaceParams,
) -> Result<Vec<RateTable>> {
    sp.validate()?;
    if schedule.is_empty() {
        return Err(Error::invalid("schedule must not be empty"));
    }
    let q0 = schedule.iter().map(|&(_, q)| q).fold(f64::INFINITY, f64::min);
    let q0p = template.qp().with_q(q0)?;
    let k = k_constant(sp.gamma, &q0p, template.alpha(), template.beta())?;
    let gamma = sp.gamma;
    let x_grid = sp.x_grid();
    let b_grid = sp.b_grid();
    let pointwise_grid = sp.pointwise_grid();

    let mut rows: Vec<Vec<RateRow>> = vec![Vec::with_capacity(schedule.len()); fs.len()];
    for &(n, q) in schedule {
        let qp = template.qp().with_q(q)?;
        let p = template.with_order(n, qp)?.with_x_max(sp.x_max)?.with_tail_gamma(gamma);
        let eta = eta_n(p.family(), n, &x_grid, &qp);
        let dn = delta_n(n, q, p.beta(), eta)?;
        let factors = pointwise_grid
            .iter()
            .map(|&x| pointwise_factor(x, dn, &p, gamma))
            .collect::<Result<Vec<f64>>>()?;

        for (i, f) in fs.iter().enumerate() {
            let mut ev = KantorovichEvaluator::new(*f, p.clone());
            let mut err_at = |x: f64| -> Result<f64> { Ok((ev.evaluate(x)?.0 - f(x)).abs()) };
            let mut sup_error_0b: f64 = 0.0;
            for &x in &b_grid {
                sup_error_0b = sup_error_0b.max(err_at(x)?);
            }
            let mut weighted_error: f64 = 0.0;
            for &x in &x_grid {
                weighted_error = weighted_error.max(err_at(x)? / rho(x, gamma + 1));
            }
            let omega = weighted_modulus(*f, dn, sp);
            // summation noise on L*f, proportional to the size of f
            let noise = 100.0 * p.qp().series_tol() * weighted_norm(*f, sp).max(1.0);
            let mut pointwise_rhs_max: f64 = 0.0;
            let mut pointwise_ok = true;
            for (&x, &factor) in pointwise_grid.iter().zip(&factors) {
                let rhs = factor * omega;
                pointwise_ok &= err_at(x)? <= rhs + noise * rho(x, gamma);
                pointwise_rhs_max = pointwise_rhs_max.max(rhs / rho(x, gamma + 1));
            }
            let bound_rhs = k * omega;
            rows[i].push(RateRow {
                n,
                q_n: q,
                sup_error_0b,
                weighted_error,
                delta_n: dn,
                modulus_at_delta: omega,
                bound_rhs,
                pointwise_rhs_max,
                pointwise_ok,
                bound_ok: weighted_error <= bound_rhs + noise,
            });
        }
    }
    Ok(rows
        .into_iter()
        .map(|rows| RateTable { gamma, q0, k_constant: k, rows })
        .collect())
}

/// [`rate_check_many`] for a single function.
pub fn rate_check<F>(
    f: &F,
    schedule: &[(u32, f64)],
    template: &OperatorParams,
    sp: &WeightedSpaceParams,
) -> Result<RateTable>
where
    F: Fn(f64) -> f64,
{
    let g = |t: f64| f(t);
    Ok(rate_check_many(&[&g], schedule, template, sp)?.remove(0))
}

/// Uniform error on `[0, b]` along the schedule; the returned table carries
/// the bound columns as well.
pub fn convergence_experiment<F>(
    f: &F,
    b: f64,
    schedule: &[(u32, f64)],
    template: &OperatorParams,
    sp: &WeightedSpaceParams,
) -> Result<RateTable>
where
    F: Fn(f64) -> f64,
{
    let sp = WeightedSpaceParams { b, ..*sp };
    rate_check(f, schedule, template, &sp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_space(gamma: u32) -> WeightedSpaceParams {
        WeightedSpaceParams { gamma, x_steps: 200, h_steps: 20, pointwise_steps: 4, ..Default::default() }
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(0.0, 3), 1.0);
        assert_eq!(rho(2.0, 0), 5.0);
        assert_eq!(rho(3.0, 1), 28.0);
    }

    #[test]
    fn norm_examples() {
        let sp = WeightedSpaceParams::default();
        assert!((weighted_norm(&|x: f64| rho(x, 0), &sp) - 1.0).abs() < 1e-15);
        assert_eq!(weighted_norm(&|_: f64| 0.0, &sp), 0.0);
        assert!((weighted_norm(&|x: f64| x, &sp) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn modulus_examples() {
        let sp = small_space(0);
        assert_eq!(weighted_modulus(&|_: f64| 3.0, 0.5, &sp), 0.0);
        // δ on the lattice: the sup sits at x = 0, h = δ
        let delta = 0.125;
        let got = weighted_modulus(&|x: f64| x, delta, &sp);
        assert!((got - delta / (1.0 + delta * delta)).abs() < 1e-15);
        let f = |x: f64| (-x).exp();
        let norm = weighted_norm(&f, &sp);
        assert!(weighted_modulus(&f, 4.0, &sp) <= 2.0 * norm);
    }

    #[test]
    fn modulus_monotone_in_delta() {
        let sp = small_space(1);
        let f = |x: f64| x.sin() * x;
        let mut prev = 0.0;
        for i in 1..40 {
            let v = weighted_modulus(&f, i as f64 * 0.05, &sp);
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn delta_examples() {
        let d = delta_n(100, 0.99, 0.0, 0.0).unwrap();
        let nq = (1.0 - 0.99f64.powi(100)) / 0.01;
        assert!((d - 1.0 / (0.99 * nq).sqrt()).abs() < 1e-14);
        assert!((d - 0.1262).abs() < 1e-4);
        let mut prev = f64::INFINITY;
        for n in [8, 16, 32, 64, 128, 256, 512] {
            let d = delta_n(n, QSchedule::OneMinusInvN.q_for(n), 0.0, 0.0).unwrap();
            assert!(d < prev);
            prev = d;
        }
    }

    #[test]
    fn k_constant_example() {
        let q0 = QParam::new(0.875).unwrap();
        let a4 = bound_constant_a(4, &q0, 0.0).unwrap();
        let expected = 24.0 * (32.0 * (16.0 + a4)).sqrt();
        assert!((k_constant(0, &q0, 0.0, 0.0).unwrap() - expected).abs() < 1e-9 * expected);
    }

    #[test]
    fn schedules() {
        assert_eq!(QSchedule::Fixed(0.3).q_for(9), 0.3);
        assert_eq!(QSchedule::OneMinusInvN.q_for(8), 0.875);
        assert_eq!(QSchedule::NOverNPlus1.q_for(3), 0.75);
    }

    #[test]
    fn pointwise_bound_holds_at_a_point() {
        let qp = QParam::new(0.9).unwrap();
        let p = OperatorParams::q_baskakov(20, qp, 0.0, 0.0).unwrap();
        let sp = small_space(0);
        let rhs = pointwise_bound(&|t: f64| t, 1.0, 0.1, &p, &sp).unwrap();
        let (lhs, _) = crate::operators::apply_kantorovich(&|t: f64| t, 1.0, &p).unwrap();
        assert!((lhs - 1.0).abs() <= rhs);
        assert_eq!(pointwise_bound(&|_: f64| 2.0, 1.0, 0.1, &p, &sp).unwrap(), 0.0);
    }

    #[test]
    fn constant_function_has_zero_rows() {
        let qp = QParam::new(0.5).unwrap();
        let p = OperatorParams::q_baskakov(4, qp, 0.0, 0.0).unwrap();
        let table = rate_check(&|_: f64| 1.5, &[(4, 0.5), (8, 0.6)], &p, &small_space(0)).unwrap();
        for r in &table.rows {
            assert!(r.weighted_error < 1e-13, "{r:?}");
            assert_eq!(r.modulus_at_delta, 0.0);
            assert!(r.bound_ok && r.pointwise_ok);
        }
    }

    #[test]
    fn small_schedule_converges() {
        let qp = QParam::new(0.5).unwrap();
        let p = OperatorParams::q_baskakov(4, qp, 0.0, 0.0).unwrap();
        let sched = QSchedule::OneMinusInvN.pairs(&[8, 16, 32]);
        let table = convergence_experiment(&|t: f64| t, 2.0, &sched, &p, &small_space(0)).unwrap();
        assert_eq!(table.q0, 0.875);
        assert!(table.all_bounds_hold());
        assert!(table.rows[2].sup_error_0b < table.rows[0].sup_error_0b);
    }
}
