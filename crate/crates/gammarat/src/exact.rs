//! Exact integer and rational building blocks.
//!
//! Everything in this module is pure and exact: Pochhammer symbols,
//! generalized binomial coefficients with rational upper index, shifted
//! harmonic numbers, factorials, `lcm(1..=n)`, trial-division factorization
//! and the denominator-clearing factor
//!
//! ```text
//! μ_a^n = (den a)^n · Π_{p | den a} p^{⌊n/(p-1)⌋},
//! ```
//!
//! which makes `μ_a^n · (a)_n / n!` an integer for every rational `a`.
//!
//! All rationals are [`BigRational`]: numerator and denominator are reduced
//! and the denominator is kept positive by every constructor and arithmetic
//! operation, so equality is plain structural equality.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExactError {
    /// `harmonic(n, a)` hit a zero term denominator: `k + a = 0` for some `1 <= k <= n`.
    #[error("pole in harmonic sum: {k} + ({a}) = 0")]
    HarmonicPole { k: u64, a: BigRational },
}

/// Shorthand for a small rational constant.
pub fn rat(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer as a rational.
pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// Rising factorial `(a)_n = a (a+1) ⋯ (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &BigRational, n: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut factor = a.clone();
    for _ in 0..n {
        acc *= &factor;
        factor += BigRational::one();
    }
    acc
}

/// Generalized binomial coefficient `C(r, k) = (r-k+1)_k / k!` for rational `r`.
///
/// No guard is placed on integer-like `r`; the Pochhammer-quotient definition
/// covers every case (including negative and non-integer upper index).
pub fn gen_binomial(r: &BigRational, k: u64) -> BigRational {
    let start = r - BigRational::from_integer(BigInt::from(k)) + BigRational::one();
    pochhammer(&start, k) / BigRational::from_integer(BigInt::from(factorial(k)))
}

/// Shifted harmonic number `H_n(a) = Σ_{k=1}^{n} 1/(k+a)`, with `H_0(a) = 0`.
pub fn harmonic(n: u64, a: &BigRational) -> Result<BigRational, ExactError> {
    let mut acc = BigRational::zero();
    for k in 1..=n {
        let term = a + BigRational::from_integer(BigInt::from(k));
        if term.is_zero() {
            return Err(ExactError::HarmonicPole { k, a: a.clone() });
        }
        acc += term.recip();
    }
    Ok(acc)
}

/// Ordinary harmonic number `H_n = Σ_{k=1}^{n} 1/k`.
pub fn harmonic0(n: u64) -> BigRational {
    harmonic(n, &BigRational::zero()).expect("zero shift has no pole")
}

/// `D_n = lcm(1, 2, …, n)` for `n >= 1`.
pub fn lcm_upto(n: u64) -> BigUint {
    assert!(n >= 1, "lcm_upto requires n >= 1");
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc = num_integer::lcm(acc, BigUint::from(k));
    }
    acc
}

/// Prime factorization with strictly increasing primes and positive exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeFactorization {
    pub factors: Vec<(BigUint, u32)>,
}

impl PrimeFactorization {
    /// Reconstructs the factored integer.
    pub fn product(&self) -> BigUint {
        let mut acc = BigUint::one();
        for (p, e) in &self.factors {
            acc *= p.pow(*e);
        }
        acc
    }
}

/// Complete factorization of `m >= 1` by trial division.
///
/// Inputs here are denominators of small rationals, so trial division is
/// entirely adequate.
pub fn factorize(m: &BigUint) -> PrimeFactorization {
    assert!(!m.is_zero(), "factorize requires m >= 1");
    let mut rest = m.clone();
    let mut factors = Vec::new();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += BigUint::one();
    }
    if rest > BigUint::one() {
        factors.push((rest, 1));
    }
    PrimeFactorization { factors }
}

/// Reduced denominator of `a` as an unsigned integer.
pub fn denominator_of(a: &BigRational) -> BigUint {
    a.denom().abs().to_biguint().expect("denominator is positive")
}

/// Denominator-clearing factor `μ_a^n = (den a)^n · Π_{p | den a} p^{⌊n/(p-1)⌋}`.
///
/// For integer `a` this is 1 (empty product over the primes of 1).
pub fn mu(a: &BigRational, n: u64) -> BigUint {
    let den = denominator_of(a);
    let mut acc = den.pow(u32::try_from(n).expect("n fits in u32"));
    for (p, _) in factorize(&den).factors {
        let p_u64 = u64::try_from(&p).expect("prime factor of a small denominator");
        let e = n / (p_u64 - 1);
        acc *= p.pow(u32::try_from(e).expect("exponent fits in u32"));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_basics() {
        // (1)_n = n!
        assert_eq!(pochhammer(&int(1), 3), int(6));
        // direct product (1/3)(4/3)
        assert_eq!(pochhammer(&rat(1, 3), 2), rat(4, 9));
        // (a)_0 = 1 for any a
        assert_eq!(pochhammer(&rat(-7, 5), 0), int(1));
        assert_eq!(pochhammer(&int(0), 0), int(1));
    }

    #[test]
    fn gen_binomial_basics() {
        assert_eq!(gen_binomial(&int(4), 2), int(6));
        assert_eq!(gen_binomial(&rat(7, 6), 1), rat(7, 6));
        // (1/2)(-1/2)/2
        assert_eq!(gen_binomial(&rat(1, 2), 2), rat(-1, 8));
        assert_eq!(gen_binomial(&rat(-3, 4), 0), int(1));
    }

    #[test]
    fn harmonic_basics() {
        assert_eq!(harmonic(0, &rat(9, 7)).unwrap(), int(0));
        // 1 + 1/2 + 1/3
        assert_eq!(harmonic(3, &int(0)).unwrap(), rat(11, 6));
        // 2/3 + 2/5
        assert_eq!(harmonic(2, &rat(1, 2)).unwrap(), rat(16, 15));
    }

    #[test]
    fn harmonic_pole_detected() {
        let err = harmonic(4, &int(-3)).unwrap_err();
        assert_eq!(err, ExactError::HarmonicPole { k: 3, a: int(-3) });
    }

    #[test]
    fn lcm_upto_values() {
        assert_eq!(lcm_upto(1), BigUint::from(1u32));
        assert_eq!(lcm_upto(4), BigUint::from(12u32));
        assert_eq!(lcm_upto(10), BigUint::from(2520u32));
    }

    #[test]
    fn factorize_values() {
        assert_eq!(factorize(&BigUint::from(1u32)).factors, vec![]);
        assert_eq!(
            factorize(&BigUint::from(12u32)).factors,
            vec![(BigUint::from(2u32), 2), (BigUint::from(3u32), 1)]
        );
        assert_eq!(
            factorize(&BigUint::from(97u32)).factors,
            vec![(BigUint::from(97u32), 1)]
        );
    }

    #[test]
    fn mu_values() {
        // integer a: den = 1, empty product
        assert_eq!(mu(&int(7), 5), BigUint::one());
        // 2^3 · 2^{⌊3/1⌋} = 64
        assert_eq!(mu(&rat(1, 2), 3), BigUint::from(64u32));
        // 6 · 2^{⌊1/1⌋} · 3^{⌊1/2⌋} = 12
        assert_eq!(mu(&rat(1, 6), 1), BigUint::from(12u32));
        assert_eq!(mu(&rat(-1, 2), 2), BigUint::from(16u32));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
    }

    fn small_rational() -> impl Strategy<Value = BigRational> {
        (-40i64..40, 1i64..9).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn pochhammer_recurrence(a in small_rational(), n in 1u64..25) {
            let lhs = pochhammer(&a, n);
            let rhs = pochhammer(&a, n - 1)
                * (&a + BigRational::from_integer(BigInt::from(n - 1)));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn binomial_pascal_identity(r in small_rational(), k in 1u64..20) {
            // C(r, k) = C(r-1, k-1) + C(r-1, k) extends to rational upper index.
            let rm1 = &r - BigRational::one();
            prop_assert_eq!(
                gen_binomial(&r, k),
                gen_binomial(&rm1, k - 1) + gen_binomial(&rm1, k)
            );
        }

        #[test]
        fn harmonic_difference(a in (-40i64..40, 1i64..9).prop_map(|(n, d)| rat(n, d)), n in 1u64..30) {
            let shift = &a + BigRational::from_integer(BigInt::from(n));
            prop_assume!(!shift.is_zero());
            let hn = harmonic(n, &a);
            let hm = harmonic(n - 1, &a);
            if let (Ok(hn), Ok(hm)) = (hn, hm) {
                prop_assert_eq!(hn - hm, shift.recip());
            }
        }

        #[test]
        fn mu_clears_pochhammer_denominators(
            num in -12i64..12,
            den in 1i64..9,
            n in 0u64..40,
        ) {
            // μ_a^n (a)_k / k! ∈ ℤ for all 0 <= k <= n.
            let a = rat(num, den);
            let m = BigInt::from(mu(&a, n));
            for k in 0..=n {
                let v = pochhammer(&a, k)
                    / BigRational::from_integer(BigInt::from(factorial(k)));
                let scaled = v * BigRational::from_integer(m.clone());
                prop_assert!(scaled.is_integer(), "k = {}", k);
            }
        }

        #[test]
        fn mu_divides_mu_of_larger_n(
            num in -12i64..12,
            den in 1i64..9,
            n in 0u64..30,
            extra in 0u64..10,
        ) {
            let a = rat(num, den);
            let small = mu(&a, n);
            let large = mu(&a, n + extra);
            prop_assert!((large % small).is_zero());
        }
    }

    #[test]
    fn prime_factorization_reconstructs() {
        for m in 1u32..500 {
            let f = factorize(&BigUint::from(m));
            assert_eq!(f.product(), BigUint::from(m));
            // strictly increasing primes
            for w in f.factors.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
            assert!(f.factors.iter().all(|(_, e)| *e >= 1));
        }
    }

    #[test]
    fn mu_u64_sanity() {
        // spot-check against the definition evaluated by hand
        let v = mu(&rat(5, 12), 6);
        // 12^6 · 2^{⌊6/1⌋} · 3^{⌊6/2⌋} = 12^6 · 64 · 27
        let expect = BigUint::from(12u32).pow(6) * BigUint::from(64u32) * BigUint::from(27u32);
        assert_eq!(v, expect);
        assert!(v.to_u128().is_some());
    }
}
