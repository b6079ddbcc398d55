//! Closed-form construction of the approximation sequences, plus exact
//! integrality and divisibility certification.
//!
//! The central object is
//!
//! ```text
//! q_n(a1, a2, b) = Σ_{k=0}^{n} C(n+a1-a2, k) · C(n+a2-a1, n-k) · (a2+1)_{n+k} · b^{n-k}.
//! ```
//!
//! Specializations:
//!
//! * `q_psi(a, b, n) = q_gamma(a, a, b, n)` — denominators of the ψ-approximants;
//! * `p_psi(a, b, n)` — their numerators (two independent formulas, a compact
//!   single sum and a triple sum, kept side by side as mutual oracles);
//! * `euler_q(n)`, `euler_p(n)` — the integer Euler-constant approximants
//!   (`a = 0`, `b = 1`);
//! * the named presets `cor1`, `cor2`, `cor3` used throughout the CLI.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{factorial, gen_binomial, harmonic, lcm_upto, mu, pochhammer};
use crate::poly::RationalPolynomial;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("parameter {name} = {value} violates {name} > -1")]
    NotAboveMinusOne { name: &'static str, value: BigRational },
    #[error("parameter b = {value} violates b > 0")]
    NonPositiveB { value: BigRational },
    #[error("preset cor3 requires parameter a")]
    MissingA,
    #[error("parameter a = {value} must not be an integer")]
    IntegerA { value: BigRational },
}

/// Validated parameter triple `(a1, a2, b)` with `a1, a2 > -1` and `b > 0`.
///
/// The difference `a1 - a2` being an integer is legal for sequence
/// construction (the ψ and Euler families live exactly there) but rules out
/// the Γ-quotient asymptotics; the flag records it for consumers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxParams {
    pub a1: BigRational,
    pub a2: BigRational,
    pub b: BigRational,
    pub integer_difference: bool,
}

impl ApproxParams {
    pub fn new(a1: BigRational, a2: BigRational, b: BigRational) -> Result<Self, ParamError> {
        let minus_one = -BigRational::one();
        if a1 <= minus_one {
            return Err(ParamError::NotAboveMinusOne { name: "a1", value: a1 });
        }
        if a2 <= minus_one {
            return Err(ParamError::NotAboveMinusOne { name: "a2", value: a2 });
        }
        if !b.is_positive() {
            return Err(ParamError::NonPositiveB { value: b });
        }
        let integer_difference = (&a1 - &a2).is_integer();
        Ok(Self { a1, a2, b, integer_difference })
    }
}

/// The Γ-quotient denominator sequence `q_n(a1, a2, b)` evaluated exactly.
///
/// Every binomial and Pochhammer symbol is updated incrementally across `k`,
/// left to right, so the evaluation is deterministic and `O(n)` big-rational
/// products.
pub fn q_gamma(a1: &BigRational, a2: &BigRational, b: &BigRational, n: u64) -> BigRational {
    let d = a1 - a2;
    let nr = BigRational::from_integer(BigInt::from(n));

    // C(n-d, j) for j = 0..=n, ascending
    let mut rev_binom = Vec::with_capacity(n as usize + 1);
    let mut c2 = BigRational::one();
    for j in 0..=n {
        rev_binom.push(c2.clone());
        if j < n {
            c2 = c2 * (&nr - &d - BigRational::from_integer(BigInt::from(j)))
                / BigRational::from_integer(BigInt::from(j + 1));
        }
    }

    let mut sum = BigRational::zero();
    let mut c1 = BigRational::one(); // C(n+d, k)
    let mut poch = pochhammer(&(a2 + BigRational::one()), n); // (a2+1)_{n+k}
    let mut bpow = b.pow(n as i32); // b^{n-k}
    for k in 0..=n {
        sum += &c1 * &rev_binom[(n - k) as usize] * &poch * &bpow;
        if k < n {
            c1 = c1 * (&nr + &d - BigRational::from_integer(BigInt::from(k)))
                / BigRational::from_integer(BigInt::from(k + 1));
            poch *= a2 + BigRational::one() + BigRational::from_integer(BigInt::from(n + k));
            bpow /= b;
        }
    }
    sum
}

/// `q_n(a1, a2, ·)` as a polynomial in `b`: the coefficient of `b^{n-k}` is
/// `C(n+a1-a2, k) · C(n+a2-a1, n-k) · (a2+1)_{n+k}`.
pub fn q_gamma_poly(a1: &BigRational, a2: &BigRational, n: u64) -> RationalPolynomial {
    let d = a1 - a2;
    let nr = BigRational::from_integer(BigInt::from(n));
    let mut coeffs = vec![BigRational::zero(); n as usize + 1];
    let mut c1 = BigRational::one();
    let mut poch = pochhammer(&(a2 + BigRational::one()), n);
    // C(n-d, n-k) via the ascending table
    let mut rev_binom = Vec::with_capacity(n as usize + 1);
    let mut c2 = BigRational::one();
    for j in 0..=n {
        rev_binom.push(c2.clone());
        if j < n {
            c2 = c2 * (&nr - &d - BigRational::from_integer(BigInt::from(j)))
                / BigRational::from_integer(BigInt::from(j + 1));
        }
    }
    for k in 0..=n {
        coeffs[(n - k) as usize] = &c1 * &rev_binom[(n - k) as usize] * &poch;
        if k < n {
            c1 = c1 * (&nr + &d - BigRational::from_integer(BigInt::from(k)))
                / BigRational::from_integer(BigInt::from(k + 1));
            poch *= a2 + BigRational::one() + BigRational::from_integer(BigInt::from(n + k));
        }
    }
    RationalPolynomial::new(coeffs)
}

/// Certificate that `μ_{a2-a1}^n · μ_{a2}^{2n} · q_n(a1, a2, ·) ∈ n! ℤ[b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegralityReport {
    pub n: u64,
    /// The clearing factor `μ_{a2-a1}^n · μ_{a2}^{2n}`.
    pub scale: BigUint,
    /// Scaled coefficients divided by `n!`, ascending in the power of `b`.
    pub quotients: Vec<BigRational>,
    /// True iff every quotient is an integer.
    pub verdict: bool,
}

/// Checks the μ-scaled integrality of `q_n(a1, a2, ·)` coefficient by
/// coefficient.
pub fn check_integrality(a1: &BigRational, a2: &BigRational, n: u64) -> IntegralityReport {
    let scale = mu(&(a2 - a1), n) * mu(a2, 2 * n);
    let scale_rat = BigRational::from_integer(BigInt::from(scale.clone()));
    let nfact = BigRational::from_integer(BigInt::from(factorial(n)));
    let poly = q_gamma_poly(a1, a2, n);
    let mut verdict = true;
    let mut quotients = Vec::with_capacity(n as usize + 1);
    for k in 0..=n as usize {
        let q = poly.coeff(k) * &scale_rat / &nfact;
        verdict &= q.is_integer();
        quotients.push(q);
    }
    IntegralityReport { n, scale, quotients, verdict }
}

/// Numerator `p_n(a, b)` of the ψ-approximants, compact single-sum form:
///
/// ```text
/// p_n(a, b) = Σ_{k=0}^{n} C(n,k)^2 (a+1)_{n+k} b^{n-k} (H_{n+k}(a) + 2 H_{n-k} - 2 H_k).
/// ```
pub fn p_psi(a: &BigRational, b: &BigRational, n: u64) -> BigRational {
    // plain harmonic numbers H_0 .. H_n
    let mut h0 = Vec::with_capacity(n as usize + 1);
    let mut acc = BigRational::zero();
    h0.push(acc.clone());
    for j in 1..=n {
        acc += BigRational::from_integer(BigInt::from(j)).recip();
        h0.push(acc.clone());
    }

    let nr = BigRational::from_integer(BigInt::from(n));
    let mut sum = BigRational::zero();
    let mut binom = BigRational::one(); // C(n, k)
    let mut poch = pochhammer(&(a + BigRational::one()), n); // (a+1)_{n+k}
    let mut h_shift = harmonic(n, a).expect("a > -1 has no pole"); // H_{n+k}(a)
    let mut bpow = b.pow(n as i32);
    for k in 0..=n {
        let weight = &h_shift + BigRational::from_integer(BigInt::from(2))
            * (&h0[(n - k) as usize] - &h0[k as usize]);
        sum += &binom * &binom * &poch * &bpow * weight;
        if k < n {
            binom = binom * (&nr - BigRational::from_integer(BigInt::from(k)))
                / BigRational::from_integer(BigInt::from(k + 1));
            let next = a + BigRational::one() + BigRational::from_integer(BigInt::from(n + k));
            poch *= &next;
            h_shift += (a + BigRational::from_integer(BigInt::from(n + k + 1))).recip();
            bpow /= b;
        }
    }
    sum
}

/// Numerator `p_n(a, b)` via the original single-sum-minus-triple-sum form;
/// the independent oracle for [`p_psi`]:
///
/// ```text
/// Σ_k C(n,k)^2 (a+1)_{n+k} b^{n-k} H_{n+k}(a)
///   - 2 Σ_{k=1}^{n} Σ_{m=0}^{k} Σ_{l=0}^{n-k} (-1)^{m+k}/k ·
///       C(n, k+l) C(k, m) C(n-k, l) (a+1)_{m+n+l} b^{n-m-l}.
/// ```
pub fn p_psi_triple(a: &BigRational, b: &BigRational, n: u64) -> BigRational {
    let nr = BigRational::from_integer(BigInt::from(n));

    // (a+1)_j for j = 0..=2n, and harmonic table on the fly
    let mut poch_table = Vec::with_capacity(2 * n as usize + 1);
    let mut p = BigRational::one();
    poch_table.push(p.clone());
    for j in 0..2 * n {
        p *= a + BigRational::one() + BigRational::from_integer(BigInt::from(j));
        poch_table.push(p.clone());
    }

    let mut first = BigRational::zero();
    let mut binom = BigRational::one();
    let mut h_shift = harmonic(n, a).expect("a > -1 has no pole");
    let mut bpow = b.pow(n as i32);
    for k in 0..=n {
        first += &binom * &binom * &poch_table[(n + k) as usize] * &bpow * &h_shift;
        if k < n {
            binom = binom * (&nr - BigRational::from_integer(BigInt::from(k)))
                / BigRational::from_integer(BigInt::from(k + 1));
            h_shift += (a + BigRational::from_integer(BigInt::from(n + k + 1))).recip();
            bpow /= b;
        }
    }

    let mut triple = BigRational::zero();
    for k in 1..=n {
        for m in 0..=k {
            for l in 0..=(n - k) {
                let sign = if (m + k) % 2 == 0 { 1 } else { -1 };
                let coef = BigRational::new(BigInt::from(sign), BigInt::from(k));
                let term = coef
                    * gen_binomial(&nr, k + l)
                    * gen_binomial(&BigRational::from_integer(BigInt::from(k)), m)
                    * gen_binomial(&BigRational::from_integer(BigInt::from(n - k)), l)
                    * &poch_table[(m + n + l) as usize]
                    * b.pow((n - m - l) as i32);
                triple += term;
            }
        }
    }
    first - triple * BigRational::from_integer(BigInt::from(2))
}

/// Denominator `q_n(a, b) = Σ_k C(n,k)^2 (a+1)_{n+k} b^{n-k}`.
///
/// Coincides with `q_gamma(a, a, b, n)`; computed directly for speed.
pub fn q_psi(a: &BigRational, b: &BigRational, n: u64) -> BigRational {
    let nr = BigRational::from_integer(BigInt::from(n));
    let mut sum = BigRational::zero();
    let mut binom = BigRational::one();
    let mut poch = pochhammer(&(a + BigRational::one()), n);
    let mut bpow = b.pow(n as i32);
    for k in 0..=n {
        sum += &binom * &binom * &poch * &bpow;
        if k < n {
            binom = binom * (&nr - BigRational::from_integer(BigInt::from(k)))
                / BigRational::from_integer(BigInt::from(k + 1));
            poch *= a + BigRational::one() + BigRational::from_integer(BigInt::from(n + k));
            bpow /= b;
        }
    }
    sum
}

/// Integer denominators of the Euler-constant approximants:
/// `q_n = Σ_k C(n,k)^2 (n+k)!`.
pub fn euler_q(n: u64) -> BigUint {
    let v = q_psi(&BigRational::zero(), &BigRational::one(), n);
    debug_assert!(v.is_integer());
    v.to_integer().to_biguint().expect("positive integer")
}

/// Integer numerators of the Euler-constant approximants:
/// `p_n = Σ_k C(n,k)^2 (n+k)! (H_{n+k} + 2H_{n-k} - 2H_k)`.
///
/// The harmonic combination is rational term by term and only integral in
/// aggregate, so the sum is evaluated in rational arithmetic and the result
/// asserted to have denominator one.
pub fn euler_p(n: u64) -> BigInt {
    let v = p_psi(&BigRational::zero(), &BigRational::one(), n);
    assert!(v.is_integer(), "euler_p({n}) must be an integer");
    v.to_integer()
}

/// Divisibility certificate for the Euler approximants: `n! | q_n` and
/// `(n!/D_n) | p_n`, where `D_n = lcm(1..=n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerDivisibility {
    pub n: u64,
    pub q_quotient: BigInt,
    pub p_quotient: BigInt,
    pub verdict: bool,
}

pub fn check_euler_divisibility(n: u64) -> EulerDivisibility {
    assert!(n >= 1);
    let nfact = BigInt::from(factorial(n));
    let dn = BigInt::from(lcm_upto(n));
    // D_n | n! always; asserted rather than assumed.
    assert!((&nfact % &dn).is_zero(), "D_n must divide n!");
    let small = &nfact / &dn;

    let q = BigInt::from(euler_q(n));
    let p = euler_p(n);
    let q_ok = (&q % &nfact).is_zero();
    let p_ok = (&p % &small).is_zero();
    EulerDivisibility {
        n,
        q_quotient: &q / &nfact,
        p_quotient: &p / &small,
        verdict: q_ok && p_ok,
    }
}

/// Named parameter presets for the specialized sequence pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    /// `(a1, a2, b) = (-2/3, -1/2, 1)`: approximates `Γ(1/2)/Γ(1/3)`.
    Cor1,
    /// `(a1, a2, b) = (-3/4, -1/2, 1)`: approximates `Γ(1/2)/Γ(1/4)`.
    Cor2,
    /// `(a1, a2, b) = (0, a, 1)`: approximates `Γ(a+1)`.
    Cor3,
}

/// The `(p_n, q_n)` pair of a preset: `p` is the role-swapped companion
/// `q_gamma(a2, a1, b, n)` and `q` is `q_gamma(a1, a2, b, n)`.
pub fn preset_sequences(
    which: Preset,
    a: Option<&BigRational>,
    n: u64,
) -> Result<(BigRational, BigRational), ParamError> {
    let one = BigRational::one();
    match which {
        Preset::Cor1 => {
            let (a1, a2) = (crate::exact::rat(-2, 3), crate::exact::rat(-1, 2));
            Ok((q_gamma(&a2, &a1, &one, n), q_gamma(&a1, &a2, &one, n)))
        }
        Preset::Cor2 => {
            let (a1, a2) = (crate::exact::rat(-3, 4), crate::exact::rat(-1, 2));
            Ok((q_gamma(&a2, &a1, &one, n), q_gamma(&a1, &a2, &one, n)))
        }
        Preset::Cor3 => {
            let a = a.ok_or(ParamError::MissingA)?;
            if a.is_integer() {
                return Err(ParamError::IntegerA { value: a.clone() });
            }
            if a <= &-BigRational::one() {
                return Err(ParamError::NotAboveMinusOne { name: "a", value: a.clone() });
            }
            let zero = BigRational::zero();
            Ok((q_gamma(a, &zero, &one, n), q_gamma(&zero, a, &one, n)))
        }
    }
}
