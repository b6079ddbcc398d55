//! Fixed-point arbitrary-precision reals: `value = mantissa / 2^frac_bits`.
//!
//! All binary operations require both operands to carry the same `frac_bits`
//! (they always do under a single `PrecisionContext`); multiplication and
//! division round to nearest, ties away from zero. The representation has no
//! hidden normalization: huge magnitudes simply grow the mantissa, which is
//! what the exact-sequence analysis needs when it converts factorial-sized
//! rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    frac_bits: u32,
}

/// `x / 2^k`, rounded to nearest (ties away from zero).
pub(crate) fn shr_round(x: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return x.clone();
    }
    let a = x.abs();
    let q = &a >> k;
    let half_bit = (&a >> (k - 1)) & BigInt::one();
    let rounded = if half_bit.is_zero() { q } else { q + 1 };
    if x.is_negative() {
        -rounded
    } else {
        rounded
    }
}

/// Nearest integer to `n / d` (ties away from zero); `d` must be nonzero.
pub(crate) fn div_round(n: &BigInt, d: &BigInt) -> BigInt {
    let na = n.abs();
    let da = d.abs();
    let (q, r) = na.div_rem(&da);
    let q = if &r + &r >= da { q + 1 } else { q };
    if n.is_negative() ^ d.is_negative() {
        -q
    } else {
        q
    }
}

impl BigFloat {
    pub fn zero(frac_bits: u32) -> Self {
        Self { mant: BigInt::zero(), frac_bits }
    }

    pub fn one(frac_bits: u32) -> Self {
        Self { mant: BigInt::one() << frac_bits, frac_bits }
    }

    pub fn from_bigint(v: &BigInt, frac_bits: u32) -> Self {
        Self { mant: v << frac_bits, frac_bits }
    }

    pub fn from_i64(v: i64, frac_bits: u32) -> Self {
        Self::from_bigint(&BigInt::from(v), frac_bits)
    }

    /// Rounds an exact rational into the fixed-point grid.
    pub fn from_rational(r: &BigRational, frac_bits: u32) -> Self {
        let scaled = r.numer() << frac_bits;
        Self { mant: div_round(&scaled, r.denom()), frac_bits }
    }

    pub(crate) fn from_raw(mant: BigInt, frac_bits: u32) -> Self {
        Self { mant, frac_bits }
    }

    pub(crate) fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn frac_bits(&self) -> u32 {
        self.frac_bits
    }

    /// Exact rational value of this fixed-point number.
    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.mant.clone(), BigInt::one() << self.frac_bits)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn abs(&self) -> Self {
        Self { mant: self.mant.abs(), frac_bits: self.frac_bits }
    }

    /// Multiplication by `2^k` (exact for `k >= 0`, rounded otherwise).
    pub fn scale_pow2(&self, k: i64) -> Self {
        let mant = if k >= 0 {
            &self.mant << (k as u32)
        } else {
            shr_round(&self.mant, (-k) as u32)
        };
        Self { mant, frac_bits: self.frac_bits }
    }

    /// Re-rounds into a different fixed-point grid.
    pub fn with_frac_bits(&self, frac_bits: u32) -> Self {
        match frac_bits.cmp(&self.frac_bits) {
            Ordering::Equal => self.clone(),
            Ordering::Greater => Self {
                mant: &self.mant << (frac_bits - self.frac_bits),
                frac_bits,
            },
            Ordering::Less => Self {
                mant: shr_round(&self.mant, self.frac_bits - frac_bits),
                frac_bits,
            },
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(
            self.frac_bits, other.frac_bits,
            "BigFloat operands must share frac_bits"
        );
    }

    /// Floor square root on the fixed-point grid; error below one ulp.
    pub fn sqrt(&self) -> Option<Self> {
        if self.mant.is_negative() {
            return None;
        }
        let wide = &self.mant << self.frac_bits;
        Some(Self { mant: wide.sqrt(), frac_bits: self.frac_bits })
    }

    /// Approximate f64 value; used only for precision/step heuristics.
    pub fn to_f64(&self) -> f64 {
        let bits = self.mant.bits();
        if bits <= 900 {
            return self.mant.to_f64().unwrap_or(f64::NAN)
                * 2f64.powi(-(self.frac_bits as i32));
        }
        let shift = bits - 64;
        let top = (&self.mant >> shift).to_f64().unwrap_or(f64::NAN);
        let exponent = shift as i64 - self.frac_bits as i64;
        if exponent > 1020 {
            return if self.mant.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        top * 2f64.powi(exponent as i32)
    }

    /// Nearest integer (ties away from zero).
    pub fn round_to_bigint(&self) -> BigInt {
        shr_round(&self.mant, self.frac_bits)
    }

    /// Decimal rendering in scientific notation with `sig_digits` significant
    /// digits, deterministic for a given mantissa.
    pub fn to_decimal_sci(&self, sig_digits: u32) -> String {
        assert!(sig_digits >= 1);
        if self.mant.is_zero() {
            return format!("0.{}e0", "0".repeat(sig_digits.saturating_sub(1) as usize));
        }
        let neg = self.mant.is_negative();
        let mant = self.mant.abs();
        let bit_value = mant.bits() as i64 - 1 - self.frac_bits as i64;
        let mut e10 = (bit_value as f64 * std::f64::consts::LN_2 / std::f64::consts::LN_10)
            .floor() as i64;
        loop {
            let k = sig_digits as i64 - 1 - e10;
            let scaled = if k >= 0 {
                div_round(
                    &(&mant * BigInt::from(10u32).pow(k as u32)),
                    &(BigInt::one() << self.frac_bits),
                )
            } else {
                div_round(
                    &mant,
                    &(BigInt::from(10u32).pow((-k) as u32) << self.frac_bits),
                )
            };
            let s = scaled.to_string();
            let want = sig_digits as usize;
            if s.len() > want {
                e10 += 1;
                continue;
            }
            if s.len() < want {
                e10 -= 1;
                continue;
            }
            let sign = if neg { "-" } else { "" };
            let (head, tail) = s.split_at(1);
            return if tail.is_empty() {
                format!("{sign}{head}e{e10}")
            } else {
                format!("{sign}{head}.{tail}e{e10}")
            };
        }
    }

    fn fmt_default(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.frac_bits.saturating_sub(34)) as f64 / super::LOG2_10)
            .floor()
            .max(6.0) as u32;
        write!(f, "{}", self.to_decimal_sci(digits.min(50)))
    }
}

impl fmt::Debug for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_default(f)
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_default(f)
    }
}

impl PartialOrd for BigFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for BigFloat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.assert_compatible(other);
        self.mant.cmp(&other.mant)
    }
}

impl Add for &BigFloat {
    type Output = BigFloat;
    fn add(self, rhs: &BigFloat) -> BigFloat {
        self.assert_compatible(rhs);
        BigFloat { mant: &self.mant + &rhs.mant, frac_bits: self.frac_bits }
    }
}

impl Sub for &BigFloat {
    type Output = BigFloat;
    fn sub(self, rhs: &BigFloat) -> BigFloat {
        self.assert_compatible(rhs);
        BigFloat { mant: &self.mant - &rhs.mant, frac_bits: self.frac_bits }
    }
}

impl Neg for &BigFloat {
    type Output = BigFloat;
    fn neg(self) -> BigFloat {
        BigFloat { mant: -&self.mant, frac_bits: self.frac_bits }
    }
}

impl Mul for &BigFloat {
    type Output = BigFloat;
    fn mul(self, rhs: &BigFloat) -> BigFloat {
        self.assert_compatible(rhs);
        BigFloat {
            mant: shr_round(&(&self.mant * &rhs.mant), self.frac_bits),
            frac_bits: self.frac_bits,
        }
    }
}

impl Div for &BigFloat {
    type Output = BigFloat;
    fn div(self, rhs: &BigFloat) -> BigFloat {
        self.assert_compatible(rhs);
        assert!(!rhs.mant.is_zero(), "division by zero BigFloat");
        BigFloat {
            mant: div_round(&(&self.mant << self.frac_bits), &rhs.mant),
            frac_bits: self.frac_bits,
        }
    }
}
