//! Adaptive Simpson quadrature, used where the q-lattice degenerates (q = 1).

use crate::error::{Error, Result};

const MAX_DEPTH: u32 = 48;

/// Integrates `f` over `[a, b]` to an absolute tolerance `tol` using adaptive
/// Simpson with Richardson correction. Returns the estimate and the number of
/// function evaluations.
pub fn adaptive_simpson<F>(f: &F, a: f64, b: f64, tol: f64) -> Result<(f64, usize)>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain(format!("non-finite quadrature bounds [{a}, {b}]")));
    }
    if a == b {
        return Ok((0.0, 0));
    }
    let (lo, hi, sign) = if a < b { (a, b, 1.0) } else { (b, a, -1.0) };
    let fa = f(lo);
    let fb = f(hi);
    let m = 0.5 * (lo + hi);
    let fm = f(m);
    let whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    let mut evals = 3;
    let v = recurse(f, lo, hi, fa, fm, fb, whole, tol.max(f64::MIN_POSITIVE), MAX_DEPTH, &mut evals)?;
    Ok((sign * v, evals))
}

#[allow(clippy::too_many_arguments)]
fn recurse<F>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    evals: &mut usize,
) -> Result<f64>
where
    F: Fn(f64) -> f64 + ?Sized,
{
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    *evals += 2;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if !delta.is_finite() {
        return Err(Error::domain(format!("integrand not finite on [{a}, {b}]")));
    }
    // the halved tolerance eventually drops below the rounding noise of the panel sums
    let tol = tol.max(64.0 * f64::EPSILON * (left.abs() + right.abs()));
    if depth == 0 || delta.abs() <= 15.0 * tol || m <= a || b <= m {
        if depth == 0 && delta.abs() > 15.0 * tol {
            return Err(Error::NonConvergence {
                what: format!("adaptive Simpson on [{a}, {b}]"),
                terms: *evals,
            });
        }
        return Ok(left + right + delta / 15.0);
    }
    Ok(recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, evals)?
        + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, evals)?)
}
