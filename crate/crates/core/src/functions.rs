//! Built-in test functions, addressed by identifier.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
enum Kind {
    Monomial(u32),
    ExpNeg,
    Rational,
    OneMinusExp,
    /// Coefficients in ascending powers.
    Poly(Vec<f64>),
}

/// A function on `[0, ∞)` from the corpus: `e0`..`e4`, `exp-neg`, `rational`
/// (`t/(1+t)`), `one-minus-exp` (`1 - e^{-t}`) or `poly:c0,c1,...`.
#[derive(Debug, Clone, PartialEq)]
pub struct TestFunction {
    kind: Kind,
}

pub const CORPUS: [&str; 8] = ["e0", "e1", "e2", "e3", "e4", "exp-neg", "rational", "one-minus-exp"];

impl TestFunction {
    pub fn eval(&self, t: f64) -> f64 {
        match &self.kind {
            Kind::Monomial(i) => t.powi(*i as i32),
            Kind::ExpNeg => (-t).exp(),
            Kind::Rational => t / (1.0 + t),
            Kind::OneMinusExp => -(-t).exp_m1(),
            Kind::Poly(c) => c.iter().rev().fold(0.0, |acc, &a| acc * t + a),
        }
    }

    /// True when the function is known to be non-decreasing on `[0, ∞)`.
    /// Polynomials qualify when no coefficient beyond the constant is negative.
    pub fn is_non_decreasing(&self) -> bool {
        match &self.kind {
            Kind::Monomial(_) | Kind::Rational | Kind::OneMinusExp => true,
            Kind::ExpNeg => false,
            Kind::Poly(c) => c.iter().skip(1).all(|&a| a >= 0.0),
        }
    }

    /// Smallest `γ` with `|f(t)| <= M (1 + t^{γ+2})`.
    pub fn growth_gamma(&self) -> u32 {
        let degree = match &self.kind {
            Kind::Monomial(i) => *i as usize,
            Kind::Poly(c) => c.iter().rposition(|&a| a != 0.0).unwrap_or(0),
            _ => 0,
        };
        degree.saturating_sub(2) as u32
    }
}

impl FromStr for TestFunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let kind = match s {
            "e0" => Kind::Monomial(0),
            "e1" => Kind::Monomial(1),
            "e2" => Kind::Monomial(2),
            "e3" => Kind::Monomial(3),
            "e4" => Kind::Monomial(4),
            "exp-neg" => Kind::ExpNeg,
            "rational" => Kind::Rational,
            "one-minus-exp" => Kind::OneMinusExp,
            _ => {
                let Some(coeffs) = s.strip_prefix("poly:") else {
                    return Err(Error::invalid(format!("unknown function '{s}'")));
                };
                let c = coeffs
                    .split(',')
                    .map(|c| c.trim().parse::<f64>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|e| Error::invalid(format!("bad polynomial coefficients '{coeffs}': {e}")))?;
                if c.iter().any(|a| !a.is_finite()) {
                    return Err(Error::invalid(format!("polynomial coefficients must be finite: '{coeffs}'")));
                }
                Kind::Poly(c)
            }
        };
        Ok(Self { kind })
    }
}

impl fmt::Display for TestFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Monomial(i) => write!(f, "e{i}"),
            Kind::ExpNeg => f.write_str("exp-neg"),
            Kind::Rational => f.write_str("rational"),
            Kind::OneMinusExp => f.write_str("one-minus-exp"),
            Kind::Poly(c) => {
                let parts: Vec<String> = c.iter().map(|a| a.to_string()).collect();
                write!(f, "poly:{}", parts.join(","))
            }
        }
    }
}
