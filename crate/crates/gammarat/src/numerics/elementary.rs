//! Elementary functions on fixed-point reals: π, ln 2, ln, exp, sin, cos,
//! sqrt, rational powers and `ln n!`.
//!
//! Every routine computes with `GUARD_BITS` extra fraction bits and rounds
//! down to the caller's grid at the end. Series truncation is monitored
//! against the working ulp with a rigorous tail bound in each case:
//! alternating series stop below one ulp, geometric tails are bounded by the
//! first omitted term over `1 - ratio`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

use super::bigfloat::{div_round, shr_round, BigFloat};
use super::{NumericsError, PrecisionContext};
use crate::exact::factorial;

const GUARD_BITS: u32 = 48;

static PI_CACHE: Lazy<Mutex<HashMap<u32, BigInt>>> = Lazy::new(|| Mutex::new(HashMap::new()));
static LN2_CACHE: Lazy<Mutex<HashMap<u32, BigInt>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// `atan(1/m)` as a mantissa at `frac_bits`, by the alternating Gregory
/// series; the truncation error is below the first omitted term.
fn atan_inv(m: u64, frac_bits: u32) -> BigInt {
    let m2 = BigInt::from(m) * BigInt::from(m);
    let mut power = div_round(&(BigInt::one() << frac_bits), &BigInt::from(m)); // 1/m^{2k+1}
    let mut acc = BigInt::zero();
    let mut k = 0u64;
    loop {
        let term = div_round(&power, &BigInt::from(2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
        power = div_round(&power, &m2);
        k += 1;
    }
    acc
}

/// π at the requested grid (Machin: `π = 16 atan(1/5) - 4 atan(1/239)`).
pub fn pi(frac_bits: u32) -> BigFloat {
    let mut cache = PI_CACHE.lock().expect("pi cache poisoned");
    let mant = cache
        .entry(frac_bits)
        .or_insert_with(|| {
            let fb = frac_bits + GUARD_BITS;
            let value = (atan_inv(5, fb) << 4) - (atan_inv(239, fb) << 2);
            shr_round(&value, GUARD_BITS)
        })
        .clone();
    BigFloat::from_raw(mant, frac_bits)
}

/// `ln 2` at the requested grid (`2 atanh(1/3)`).
pub fn ln2(frac_bits: u32) -> BigFloat {
    let mut cache = LN2_CACHE.lock().expect("ln2 cache poisoned");
    let mant = cache
        .entry(frac_bits)
        .or_insert_with(|| {
            let fb = frac_bits + GUARD_BITS;
            let nine = BigInt::from(9);
            let mut power = div_round(&(BigInt::one() << fb), &BigInt::from(3));
            let mut acc = BigInt::zero();
            let mut k = 0u64;
            loop {
                let term = div_round(&power, &BigInt::from(2 * k + 1));
                if term.is_zero() {
                    break;
                }
                acc += &term;
                power = div_round(&power, &nine);
                k += 1;
            }
            shr_round(&(acc << 1), GUARD_BITS)
        })
        .clone();
    BigFloat::from_raw(mant, frac_bits)
}

/// Natural logarithm for `x > 0`.
///
/// Normalizes `x = m · 2^k` with `m ∈ [1, 2)`, then
/// `ln m = 2 atanh((m-1)/(m+1))` with `t <= 1/3`, so the series ratio is at
/// most `1/9` and the geometric tail bound applies.
pub fn ln(x: &BigFloat) -> Result<BigFloat, NumericsError> {
    if x.is_zero() || x.is_negative() {
        return Err(NumericsError::Domain(format!("ln of non-positive value {x}")));
    }
    let frac_bits = x.frac_bits();
    let fb = frac_bits + GUARD_BITS;
    let mant_bits = x.mant().bits() as i64;
    let k = mant_bits - 1 - frac_bits as i64; // x = m·2^k, m ∈ [1,2)
    let m = x.with_frac_bits(fb).scale_pow2(-k);

    let one = BigFloat::one(fb);
    let t = &(&m - &one) / &(&m + &one);
    let t2 = &t * &t;
    let mut power = t.clone();
    let mut acc = BigFloat::zero(fb);
    let mut j = 0u64;
    loop {
        let term = BigFloat::from_raw(div_round(power.mant(), &BigInt::from(2 * j + 1)), fb);
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
        power = &power * &t2;
        if power.is_zero() {
            break;
        }
        j += 1;
    }
    let ln_m = acc.scale_pow2(1);
    let result = &ln_m + &(&ln2(fb) * &BigFloat::from_i64(k, fb));
    Ok(result.with_frac_bits(frac_bits))
}

/// Natural logarithm of an exact positive rational.
pub fn ln_rational(r: &BigRational, frac_bits: u32) -> Result<BigFloat, NumericsError> {
    if !r.is_positive() {
        return Err(NumericsError::Domain(format!("ln of non-positive rational {r}")));
    }
    // ln(num) - ln(den) on the wide grid keeps cancellation harmless
    let fb = frac_bits + GUARD_BITS;
    let num = ln(&BigFloat::from_bigint(r.numer(), fb))?;
    let den = ln(&BigFloat::from_bigint(r.denom(), fb))?;
    Ok((&num - &den).with_frac_bits(frac_bits))
}

/// `ln(n!)` from the exact factorial.
pub fn log_factorial(n: u64, ctx: PrecisionContext) -> BigFloat {
    let f = BigInt::from(factorial(n));
    ln(&BigFloat::from_bigint(&f, ctx.frac_bits())).expect("factorial is positive")
}

/// Exponential function. Range-reduces by `ln 2` and by eight halvings, so
/// the Taylor tail is geometric with ratio below `2^-8`.
pub fn exp(x: &BigFloat) -> BigFloat {
    let frac_bits = x.frac_bits();
    let fb = frac_bits + GUARD_BITS + 16;
    let x_wide = x.with_frac_bits(fb);
    let l2 = ln2(fb);
    let k_float = &x_wide / &l2;
    let k = k_float.round_to_bigint();
    let k_i64 = k.to_i64().expect("exp argument within fixed-point range");
    let r = &x_wide - &(&l2 * &BigFloat::from_bigint(&k, fb));

    const HALVINGS: i64 = 8;
    let r_small = r.scale_pow2(-HALVINGS);
    let mut term = BigFloat::one(fb);
    let mut acc = BigFloat::one(fb);
    let mut j = 1u64;
    loop {
        term = &term * &r_small;
        term = BigFloat::from_raw(div_round(term.mant(), &BigInt::from(j)), fb);
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
        j += 1;
    }
    let mut squared = acc;
    for _ in 0..HALVINGS {
        squared = &squared * &squared;
    }
    squared.scale_pow2(k_i64).with_frac_bits(frac_bits)
}

/// Sine. Reduces modulo `2π` into `[-π/4 … π/2]` territory via quadrant
/// folding, then sums the alternating Taylor series.
pub fn sin(x: &BigFloat) -> BigFloat {
    let frac_bits = x.frac_bits();
    let fb = frac_bits + GUARD_BITS;
    let x_wide = x.with_frac_bits(fb);
    let pi_wide = pi(fb);
    let two_pi = pi_wide.scale_pow2(1);
    let q = (&x_wide / &two_pi).round_to_bigint();
    let mut y = &x_wide - &(&two_pi * &BigFloat::from_bigint(&q, fb));
    // fold |y| <= π into |y| <= π/2
    let half_pi = pi_wide.scale_pow2(-1);
    if y > half_pi {
        y = &pi_wide - &y;
    } else if (-&y) > half_pi {
        y = &(-&pi_wide) - &y;
    }

    let y2 = &y * &y;
    let mut term = y.clone();
    let mut acc = y.clone();
    let mut j = 0u64;
    loop {
        term = &term * &y2;
        let denom = BigInt::from((2 * j + 2) * (2 * j + 3));
        term = BigFloat::from_raw(div_round(term.mant(), &denom), fb);
        if term.is_zero() {
            break;
        }
        if j % 2 == 0 {
            acc = &acc - &term;
        } else {
            acc = &acc + &term;
        }
        j += 1;
    }
    acc.with_frac_bits(frac_bits)
}

/// Cosine via the complement identity.
pub fn cos(x: &BigFloat) -> BigFloat {
    let fb = x.frac_bits() + GUARD_BITS;
    let shifted = &pi(fb).scale_pow2(-1) - &x.with_frac_bits(fb);
    sin(&shifted).with_frac_bits(x.frac_bits())
}

/// Square root with a domain check.
pub fn sqrt(x: &BigFloat) -> Result<BigFloat, NumericsError> {
    x.sqrt()
        .ok_or_else(|| NumericsError::Domain(format!("sqrt of negative value {x}")))
}

/// `base^e` for rational exponent: exact powering for integer `e`, otherwise
/// `exp(e · ln base)` (requires `base > 0`).
pub fn pow_rational(base: &BigFloat, e: &BigRational) -> Result<BigFloat, NumericsError> {
    let frac_bits = base.frac_bits();
    if e.is_zero() {
        return Ok(BigFloat::one(frac_bits));
    }
    if e.is_integer() {
        let n = e
            .to_integer()
            .to_i64()
            .ok_or_else(|| NumericsError::Domain("integer exponent too large".into()))?;
        let fb = frac_bits + GUARD_BITS;
        let mut acc = BigFloat::one(fb);
        let b = base.with_frac_bits(fb);
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &b;
        }
        if n < 0 {
            acc = &BigFloat::one(fb) / &acc;
        }
        return Ok(acc.with_frac_bits(frac_bits));
    }
    let fb = frac_bits + GUARD_BITS;
    let l = ln(&base.with_frac_bits(fb))?;
    let e_f = BigFloat::from_rational(e, fb);
    Ok(exp(&(&l * &e_f)).with_frac_bits(frac_bits))
}
