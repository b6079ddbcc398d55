//! Γ, ln Γ, ψ, the Euler–Mascheroni constant and the incomplete gamma pair.
//!
//! Γ and ψ shift the argument until the Stirling / asymptotic series applies;
//! on the positive real axis the truncation error of either series is bounded
//! in magnitude by the first omitted term, so summing until that term drops
//! below the working ulp enforces the precision contract. Negative
//! non-integer arguments go through the reflection formulas.
//!
//! γ is computed by Bessel-series acceleration — the quotient of
//! `Σ H_k (m^k/k!)^2` and `Σ (m^k/k!)^2` minus `ln m`, whose error decays
//! like `e^{-4m}` — an algorithm with no connection to the approximant
//! sequences this crate verifies.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

use super::bernoulli::bernoulli;
use super::bigfloat::{div_round, BigFloat};
use super::elementary::{exp, ln, ln2, pi, sin};
use super::{NumericsError, PrecisionContext};
use crate::exact::pochhammer;

const GUARD_BITS: u32 = 64;

/// Smallest shifted argument for which the Stirling tail reaches `2^-fb`:
/// the series' minimal term is of order `e^{-2πz}`.
fn stirling_shift_target(fb: u32) -> f64 {
    (fb as f64 + 16.0) * std::f64::consts::LN_2 / (2.0 * std::f64::consts::PI) + 2.0
}

fn rational_to_f64(x: &BigRational) -> f64 {
    x.numer().to_f64().unwrap_or(f64::NAN) / x.denom().to_f64().unwrap_or(f64::NAN)
}

fn check_pole(x: &BigRational) -> Result<(), NumericsError> {
    if x.is_integer() && !x.is_positive() {
        return Err(NumericsError::Pole(x.clone()));
    }
    Ok(())
}

/// `ln Γ(z)` by the Stirling series, valid once `z` clears the shift target.
fn ln_gamma_stirling(z: &BigRational, fb: u32) -> Result<BigFloat, NumericsError> {
    let zf = BigFloat::from_rational(z, fb);
    let ln_z = ln(&zf)?;
    let half = BigFloat::from_rational(&BigRational::new(BigInt::one(), BigInt::from(2)), fb);
    let ln_two_pi = &ln2(fb) + &ln(&pi(fb))?;
    let mut acc = &(&(&zf - &half) * &ln_z) - &zf;
    acc = &acc + &ln_two_pi.scale_pow2(-1);

    let inv_z = &BigFloat::one(fb) / &zf;
    let inv_z2 = &inv_z * &inv_z;
    let mut zpow = inv_z; // z^{-(2j-1)}
    let eps = BigFloat::from_raw(BigInt::one(), fb); // one ulp
    let mut prev_magnitude: Option<BigFloat> = None;
    for j in 1..=4096usize {
        let b = bernoulli(2 * j);
        let coeff = b / BigRational::from_integer(BigInt::from(2 * j * (2 * j - 1)));
        let term = &BigFloat::from_rational(&coeff, fb) * &zpow;
        acc = &acc + &term;
        if term.abs() < eps {
            return Ok(acc);
        }
        // the asymptotic series must shrink until it converges; growth means
        // the shift target was miscomputed
        if let Some(prev) = &prev_magnitude {
            if term.abs() > *prev {
                break;
            }
        }
        prev_magnitude = Some(term.abs());
        zpow = &zpow * &inv_z2;
    }
    Err(NumericsError::NonConvergence { what: "stirling series", iterations: 4096 })
}

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: &BigRational, ctx: PrecisionContext) -> Result<BigFloat, NumericsError> {
    if !x.is_positive() {
        return Err(NumericsError::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    let frac_bits = ctx.frac_bits();
    let fb = frac_bits + GUARD_BITS;
    let target = stirling_shift_target(fb);
    let shift = (target - rational_to_f64(x)).ceil().max(0.0) as u64;
    let z = x + BigRational::from_integer(BigInt::from(shift));
    let lg = ln_gamma_stirling(&z, fb)?;
    // Γ(x) = Γ(x+N) / (x)_N
    let poch = pochhammer(x, shift);
    let result = &lg - &ln(&BigFloat::from_rational(&poch, fb))?;
    Ok(result.with_frac_bits(frac_bits))
}

/// `Γ(x)` for rational `x`, poles at nonpositive integers.
pub fn gamma(x: &BigRational, ctx: PrecisionContext) -> Result<BigFloat, NumericsError> {
    check_pole(x)?;
    let frac_bits = ctx.frac_bits();
    let fb = frac_bits + GUARD_BITS;
    if x.is_positive() {
        let lg = ln_gamma(x, ctx)?.with_frac_bits(fb);
        return Ok(exp(&lg).with_frac_bits(frac_bits));
    }
    // reflection: Γ(x) = π / (sin(πx) · Γ(1-x))
    let one_minus = BigRational::one() - x;
    let g = gamma(&one_minus, ctx)?.with_frac_bits(fb);
    let pix = &pi(fb) * &BigFloat::from_rational(x, fb);
    let s = sin(&pix);
    if s.is_zero() {
        return Err(NumericsError::Pole(x.clone()));
    }
    Ok((&pi(fb) / &(&s * &g)).with_frac_bits(frac_bits))
}

/// `ψ(x) = Γ'(x)/Γ(x)` for rational `x`, poles at nonpositive integers.
pub fn digamma(x: &BigRational, ctx: PrecisionContext) -> Result<BigFloat, NumericsError> {
    check_pole(x)?;
    let frac_bits = ctx.frac_bits();
    let fb = frac_bits + GUARD_BITS;
    if !x.is_positive() {
        // ψ(x) = ψ(1-x) - π cot(πx)
        let reflected = digamma(&(BigRational::one() - x), ctx)?.with_frac_bits(fb);
        let pix = &pi(fb) * &BigFloat::from_rational(x, fb);
        let s = sin(&pix);
        let c = super::elementary::cos(&pix);
        if s.is_zero() {
            return Err(NumericsError::Pole(x.clone()));
        }
        let cot = &c / &s;
        return Ok((&reflected - &(&pi(fb) * &cot)).with_frac_bits(frac_bits));
    }

    let target = stirling_shift_target(fb);
    let shift = (target - rational_to_f64(x)).ceil().max(0.0) as u64;
    let z = x + BigRational::from_integer(BigInt::from(shift));

    // ψ(z) = ln z - 1/(2z) - Σ B_{2j} / (2j z^{2j})
    let zf = BigFloat::from_rational(&z, fb);
    let ln_z = ln(&zf)?;
    let inv_z = &BigFloat::one(fb) / &zf;
    let inv_z2 = &inv_z * &inv_z;
    let mut acc = &ln_z - &inv_z.scale_pow2(-1);
    let mut zpow = inv_z2.clone(); // z^{-2j}
    let eps = BigFloat::from_raw(BigInt::one(), fb);
    let mut converged = false;
    for j in 1..=4096usize {
        let coeff = bernoulli(2 * j) / BigRational::from_integer(BigInt::from(2 * j));
        let term = &BigFloat::from_rational(&coeff, fb) * &zpow;
        acc = &acc - &term;
        if term.abs() < eps {
            converged = true;
            break;
        }
        zpow = &zpow * &inv_z2;
    }
    if !converged {
        return Err(NumericsError::NonConvergence { what: "digamma series", iterations: 4096 });
    }
    // ψ(x) = ψ(x+N) - Σ_{k=0}^{N-1} 1/(x+k), the sum taken exactly
    let mut correction = BigRational::zero();
    for k in 0..shift {
        correction += (x + BigRational::from_integer(BigInt::from(k))).recip();
    }
    let result = &acc - &BigFloat::from_rational(&correction, fb);
    Ok(result.with_frac_bits(frac_bits))
}

static EULER_CACHE: Lazy<Mutex<HashMap<u32, BigInt>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The Euler–Mascheroni constant γ to context precision.
pub fn euler_gamma(ctx: PrecisionContext) -> BigFloat {
    let frac_bits = ctx.frac_bits();
    let mut cache = EULER_CACHE.lock().expect("euler cache poisoned");
    let mant = cache
        .entry(frac_bits)
        .or_insert_with(|| euler_gamma_bessel(frac_bits).mant().clone())
        .clone();
    BigFloat::from_raw(mant, frac_bits)
}

fn euler_gamma_bessel(frac_bits: u32) -> BigFloat {
    let fb = frac_bits + GUARD_BITS;
    // error of the Bessel quotient is O(e^{-4m}); margin of e^{-12} on top of 2^{-fb}
    let m = ((fb as f64) * std::f64::consts::LN_2 / 4.0).ceil() as u64 + 3;
    let m2 = BigInt::from(m) * BigInt::from(m);
    let one = BigFloat::one(fb);

    let mut term = one.clone();
    let mut weighted = BigFloat::zero(fb); // Σ t_k · H_k
    let mut plain = one.clone(); // Σ t_k
    let mut h = BigFloat::zero(fb);
    let mut k = 1u64;
    loop {
        // t_k = t_{k-1} · m² / k²
        let k2 = BigInt::from(k) * BigInt::from(k);
        term = BigFloat::from_raw(div_round(&(term.mant() * &m2), &k2), fb);
        h = &h + &BigFloat::from_raw(div_round(one.mant(), &BigInt::from(k)), fb);
        weighted = &weighted + &(&term * &h);
        plain = &plain + &term;
        // past the peak (k > m) the term ratio m²/(k+1)² < 1; stop when the
        // geometric tail bound drops below the quotient's ulp scale
        if k > 2 * m {
            let tail_num = term.mant() << 2; // bound: t · r/(1-r) with r <= 1/4 → ≤ t/3 < 4t
            if BigFloat::from_raw(tail_num, fb) < plain.scale_pow2(-((fb as i64) - 8)) {
                break;
            }
        }
        k += 1;
        assert!(k < 10_000_000, "euler gamma series runaway");
    }
    let quotient = &weighted / &plain;
    let ln_m = ln(&BigFloat::from_i64(m as i64, fb)).expect("m > 0");
    (&quotient - &ln_m).with_frac_bits(frac_bits)
}

/// Classical routing threshold between the series and the continued fraction.
fn series_region(s: &BigRational, x: &BigRational) -> bool {
    x < &(s + BigRational::one())
}

fn validate_incomplete(s: &BigRational, x: &BigRational) -> Result<(), NumericsError> {
    if !s.is_positive() {
        return Err(NumericsError::Domain(format!("incomplete gamma requires s > 0, got {s}")));
    }
    if !x.is_positive() {
        return Err(NumericsError::Domain(format!("incomplete gamma requires x > 0, got {x}")));
    }
    Ok(())
}

/// `x^s e^{-x}` — the shared prefactor of both incomplete-gamma routes.
fn incomplete_prefactor(s: &BigRational, x: &BigRational, fb: u32) -> Result<BigFloat, NumericsError> {
    let ln_x = super::elementary::ln_rational(x, fb)?;
    let s_f = BigFloat::from_rational(s, fb);
    let x_f = BigFloat::from_rational(x, fb);
    Ok(exp(&(&(&s_f * &ln_x) - &x_f)))
}

/// Lower incomplete `γ(s, x)` by the regularized power series
/// `x^s e^{-x} Σ_k x^k / (s (s+1) ⋯ (s+k))`; converges for every `x > 0`.
pub fn lower_incomplete_series(
    s: &BigRational,
    x: &BigRational,
    ctx: PrecisionContext,
) -> Result<BigFloat, NumericsError> {
    validate_incomplete(s, x)?;
    let frac_bits = ctx.frac_bits();
    let fb = frac_bits + GUARD_BITS;
    let prefactor = incomplete_prefactor(s, x, fb)?;
    let x_f = BigFloat::from_rational(x, fb);

    let mut term = &BigFloat::one(fb) / &BigFloat::from_rational(s, fb);
    let mut sum = term.clone();
    let mut k = 0u64;
    loop {
        let denom = BigFloat::from_rational(
            &(s + BigRational::from_integer(BigInt::from(k + 1))),
            fb,
        );
        term = &(&term * &x_f) / &denom;
        sum = &sum + &term;
        k += 1;
        // once the ratio is below 1/2, the tail is under twice the last term
        let ratio_small = x < &((s + BigRational::from_integer(BigInt::from(k + 1)))
            / BigRational::from_integer(BigInt::from(2)));
        if ratio_small && term.abs() < sum.abs().scale_pow2(-((fb as i64) - 8)) {
            break;
        }
        if k > 200_000 {
            return Err(NumericsError::NonConvergence {
                what: "lower incomplete gamma series",
                iterations: 200_000,
            });
        }
    }
    Ok((&prefactor * &sum).with_frac_bits(frac_bits))
}

/// Upper incomplete `Γ(s, x)` by the Lentz continued fraction
/// `x^s e^{-x} / (x+1-s - 1(1-s)/(x+3-s - 2(2-s)/(⋯)))`.
pub fn upper_incomplete_cf(
    s: &BigRational,
    x: &BigRational,
    ctx: PrecisionContext,
) -> Result<BigFloat, NumericsError> {
    validate_incomplete(s, x)?;
    let frac_bits = ctx.frac_bits();
    let fb = frac_bits + GUARD_BITS;
    let prefactor = incomplete_prefactor(s, x, fb)?;

    let tiny = BigFloat::from_raw(BigInt::one(), fb);
    let guard_zero = |v: BigFloat| if v.is_zero() { tiny.clone() } else { v };
    let one = BigFloat::one(fb);

    let mut b = BigFloat::from_rational(&(x - s + BigRational::one()), fb);
    b = guard_zero(b);
    let mut c = BigFloat::from_raw(BigInt::one() << (2 * fb), fb); // effectively 1/FPMIN
    let mut d = &one / &b;
    let mut h = d.clone();
    let two = BigFloat::from_i64(2, fb);
    // accept |Δ-1| < 2^{8-fb}: a mantissa threshold of 2^8
    let delta_eps = BigFloat::from_raw(BigInt::one() << 8, fb);

    for i in 1..=500_000u64 {
        // a_i = -i (i - s) = i (s - i)
        let a = BigFloat::from_rational(
            &(BigRational::from_integer(BigInt::from(i))
                * (s - BigRational::from_integer(BigInt::from(i)))),
            fb,
        );
        b = &b + &two;
        d = guard_zero(&(&a * &d) + &b);
        c = guard_zero(&b + &(&a / &c));
        d = &one / &d;
        let delta = &d * &c;
        h = &h * &delta;
        if i > 4 && (&delta - &one).abs() < delta_eps {
            return Ok((&prefactor * &h).with_frac_bits(frac_bits));
        }
    }
    Err(NumericsError::NonConvergence {
        what: "upper incomplete gamma continued fraction",
        iterations: 500_000,
    })
}

/// `γ(s, x)`: series in the `x < s+1` region, complement of the continued
/// fraction otherwise (each route is used where it is numerically benign).
pub fn lower_incomplete_gamma(
    s: &BigRational,
    x: &BigRational,
    ctx: PrecisionContext,
) -> Result<BigFloat, NumericsError> {
    validate_incomplete(s, x)?;
    if series_region(s, x) {
        lower_incomplete_series(s, x, ctx)
    } else {
        let whole = gamma(s, ctx)?;
        let upper = upper_incomplete_cf(s, x, ctx)?;
        Ok(&whole - &upper)
    }
}

/// `Γ(s, x)`: continued fraction in the `x >= s+1` region, complement of the
/// series otherwise.
pub fn upper_incomplete_gamma(
    s: &BigRational,
    x: &BigRational,
    ctx: PrecisionContext,
) -> Result<BigFloat, NumericsError> {
    validate_incomplete(s, x)?;
    if series_region(s, x) {
        let whole = gamma(s, ctx)?;
        let lower = lower_incomplete_series(s, x, ctx)?;
        Ok(&whole - &lower)
    } else {
        upper_incomplete_cf(s, x, ctx)
    }
}
