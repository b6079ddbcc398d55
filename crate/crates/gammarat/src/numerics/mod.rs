//! Arbitrary-precision real arithmetic and the special functions needed by
//! the verification and analysis layers: Γ, ψ, γ (Euler–Mascheroni), the
//! incomplete gamma pair, and the elementary functions ln, exp, sin, sqrt, π.
//!
//! Values are fixed-point: an arbitrary-precision integer mantissa scaled by
//! `2^-frac_bits`, with `frac_bits` chosen from a [`PrecisionContext`]. The
//! context promises absolute error below `10^(guard - working)` relative to
//! the result's magnitude; internally every routine computes with extra guard
//! bits and carries an explicit truncation bound:
//!
//! * Γ and ψ — argument shift until the Stirling/asymptotic series with
//!   Bernoulli-number coefficients has its first omitted term (a rigorous
//!   remainder bound on the real axis) below target accuracy;
//! * γ — Bessel-series acceleration (the `I_0`/`S_0` quotient), independent
//!   of the approximant sequences this crate studies;
//! * lower incomplete γ(s, x) — regularized power series; upper Γ(s, x) —
//!   Lentz continued fraction; routed by the classical `x < s + 1` switch
//!   with the complement identity available as a cross-check;
//! * ln — atanh series after power-of-two normalization; exp — ln 2 range
//!   reduction plus squaring; sin — quadrant reduction plus Taylor series;
//!   π — Machin's arctangent formula.

mod bernoulli;
mod bigfloat;
mod elementary;
mod special;

pub use bigfloat::BigFloat;
pub use elementary::{cos, exp, ln, ln2, ln_rational, log_factorial, pi, pow_rational, sin, sqrt};
pub use special::{
    digamma, euler_gamma, gamma, ln_gamma, lower_incomplete_gamma, lower_incomplete_series,
    upper_incomplete_cf, upper_incomplete_gamma,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumericsError {
    #[error("gamma/digamma pole at nonpositive integer {0}")]
    Pole(num_rational::BigRational),
    #[error("argument outside domain: {0}")]
    Domain(String),
    #[error("{what} did not converge within {iterations} iterations at the requested precision")]
    NonConvergence { what: &'static str, iterations: usize },
}

/// Precision request: results carry `working_digits` reliable decimal digits;
/// `guard_digits` extra digits absorb rounding inside compound expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrecisionContext {
    pub working_digits: u32,
    pub guard_digits: u32,
}

pub const LOG2_10: f64 = 3.321928094887362;

impl PrecisionContext {
    pub fn new(working_digits: u32) -> Self {
        Self { working_digits, guard_digits: 10 }
    }

    pub fn with_guard(working_digits: u32, guard_digits: u32) -> Self {
        Self { working_digits, guard_digits }
    }

    /// Fixed-point fraction bits carried by values under this context.
    pub fn frac_bits(&self) -> u32 {
        ((self.working_digits + self.guard_digits) as f64 * LOG2_10).ceil() as u32 + 32
    }

    /// `10^-working_digits` as a value threshold for comparisons.
    pub fn tolerance(&self) -> BigFloat {
        BigFloat::from_rational(
            &num_rational::BigRational::new(
                num_bigint::BigInt::from(1),
                num_bigint::BigInt::from(10u32).pow(self.working_digits),
            ),
            self.frac_bits(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn context_bits_monotone_in_digits() {
        assert!(PrecisionContext::new(60).frac_bits() > PrecisionContext::new(30).frac_bits());
        let ctx = PrecisionContext::new(30);
        assert_eq!(ctx.guard_digits, 10);
        assert!(ctx.frac_bits() >= (40.0 * LOG2_10) as u32);
    }

    #[test]
    fn tolerance_value() {
        let ctx = PrecisionContext::new(10);
        let t = ctx.tolerance();
        let one = BigFloat::from_rational(&int(1), ctx.frac_bits());
        assert!(t < one);
        let tiny = BigFloat::from_rational(&rat(1, 100_000_000_000i64), ctx.frac_bits());
        assert!(tiny < t);
    }
}
