//! Symbolic construction of the multiple Jacobi-Laguerre polynomial
//! `Q_n^{(a1,a2,b)}(x)` and exact verification of its integral identities.
//!
//! The polynomial is built by the Rodrigues recipe
//!
//! ```text
//! Q_n = (1/n!²) · [w1⁻¹ dⁿ/dxⁿ w1 xⁿ] [w2⁻¹ dⁿ/dxⁿ w2 xⁿ] (1-x)^{2n},
//! w_j = x^{a_j} (1-x) e^{-bx},
//! ```
//!
//! carried in a formal algebra of finite sums `Σ c_i x^{α+i} e^{-bx}`
//! ([`ExpMonomialSum`]), which is closed under differentiation. Dividing by a
//! weight strips the exponent offset exactly and performs synthetic division
//! by `(1-x)` with a zero-remainder assertion; theory guarantees
//! divisibility, the assertion catches transcription bugs.
//!
//! Integral identities are verified exactly in a formal Γ-symbol algebra
//! ([`GammaCombo`]): every moment `∫ x^{a+k} e^{-bx}` is a rational multiple
//! of `Γ(a+1)/b^a`, and the logarithmic moments `∫ x^k e^{-x} ln x` are
//! rational combinations of `1` and γ. Only the split-interval orthogonality
//! conditions need numerics (incomplete gamma values at rational shifts do
//! not collapse to finitely many symbols); those are checked to a residual
//! tied to the requested precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Sub};
use thiserror::Error;

use crate::exact::{factorial, harmonic0, pochhammer};
use crate::numerics::{
    lower_incomplete_gamma, pow_rational, upper_incomplete_gamma, BigFloat, NumericsError,
    PrecisionContext,
};
use crate::poly::RationalPolynomial;
use crate::sequences::{euler_p, euler_q, q_gamma};

#[derive(Debug, Error)]
pub enum RodriguesError {
    #[error("weight division expects exponent offset {expected}, found {found}")]
    OffsetMismatch { expected: BigRational, found: BigRational },
    #[error("negative power x^(offset{index:+}) survived weight division")]
    NegativePower { index: i64 },
    #[error("division by (1-x) left remainder {remainder}")]
    NonzeroRemainder { remainder: BigRational },
    #[error("polynomial degree {got} differs from expected {expected}")]
    WrongDegree { expected: usize, got: usize },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Finite formal sum `Σ_i c_i x^{α+i} e^{-bx}` with rational offset `α`;
/// stored coefficients are nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpMonomialSum {
    pub alpha: BigRational,
    pub b: BigRational,
    coeffs: BTreeMap<i64, BigRational>,
}

impl ExpMonomialSum {
    pub fn from_polynomial(alpha: BigRational, b: BigRational, poly: &RationalPolynomial) -> Self {
        let mut coeffs = BTreeMap::new();
        for (i, c) in poly.coeffs().iter().enumerate() {
            if !c.is_zero() {
                coeffs.insert(i as i64, c.clone());
            }
        }
        Self { alpha, b, coeffs }
    }

    pub fn coeff(&self, index: i64) -> BigRational {
        self.coeffs.get(&index).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.len()
    }

    /// d/dx: the term `c x^{α+i} e^{-bx}` maps to
    /// `c (α+i) x^{α+i-1} e^{-bx} - c b x^{α+i} e^{-bx}`.
    pub fn derivative(&self) -> Self {
        let mut coeffs: BTreeMap<i64, BigRational> = BTreeMap::new();
        let mut add = |index: i64, value: BigRational| {
            if value.is_zero() {
                return;
            }
            let entry = coeffs.entry(index).or_insert_with(BigRational::zero);
            *entry += value;
            if entry.is_zero() {
                coeffs.remove(&index);
            }
        };
        for (&i, c) in &self.coeffs {
            let exponent = &self.alpha + BigRational::from_integer(BigInt::from(i));
            add(i - 1, c * exponent);
            add(i, -(c * &self.b));
        }
        Self { alpha: self.alpha.clone(), b: self.b.clone(), coeffs }
    }

    /// Divides by the weight `x^a (1-x) e^{-bx}`, returning a plain
    /// polynomial. Fails if the offset does not match `a` exactly, if any
    /// negative power survives, or if `(1-x)` does not divide evenly.
    pub fn divide_by_weight(&self, a: &BigRational) -> Result<RationalPolynomial, RodriguesError> {
        if &self.alpha != a {
            return Err(RodriguesError::OffsetMismatch {
                expected: a.clone(),
                found: self.alpha.clone(),
            });
        }
        if let Some((&lowest, _)) = self.coeffs.iter().next() {
            if lowest < 0 {
                return Err(RodriguesError::NegativePower { index: lowest });
            }
        }
        let degree = self.coeffs.keys().next_back().copied().unwrap_or(0);
        let mut dense = vec![BigRational::zero(); degree as usize + 1];
        for (&i, c) in &self.coeffs {
            dense[i as usize] = c.clone();
        }
        RationalPolynomial::new(dense)
            .div_exact_one_minus_x()
            .map_err(|remainder| RodriguesError::NonzeroRemainder { remainder })
    }
}

/// One application of `w⁻¹ dⁿ/dxⁿ w xⁿ` to a polynomial, with weight
/// exponent `a`.
fn rodrigues_operator(
    poly: &RationalPolynomial,
    a: &BigRational,
    b: &BigRational,
    n: u64,
) -> Result<RationalPolynomial, RodriguesError> {
    // w xⁿ P = x^{n+a} (1-x) P e^{-bx}
    let carrier = &RationalPolynomial::one_minus_x_pow(1) * poly;
    let mut sum = ExpMonomialSum::from_polynomial(a.clone(), b.clone(), &carrier.shift_up(n as usize));
    for _ in 0..n {
        sum = sum.derivative();
    }
    sum.divide_by_weight(a)
}

/// `Q_n^{(a1,a2,b)}(x)`, a polynomial of degree `4n` with rational
/// coefficients; inner operator uses the `a2` weight, outer the `a1` weight.
pub fn rodrigues_polynomial(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n: u64,
) -> Result<RationalPolynomial, RodriguesError> {
    let start = RationalPolynomial::one_minus_x_pow(2 * n);
    let inner = rodrigues_operator(&start, a2, b, n)?;
    let outer = rodrigues_operator(&inner, a1, b, n)?;
    let nfact = BigRational::from_integer(BigInt::from(factorial(n)));
    let result = outer.scale(&(&nfact * &nfact).recip());
    let got = result.degree().unwrap_or(0);
    if got != (4 * n) as usize {
        return Err(RodriguesError::WrongDegree { expected: (4 * n) as usize, got });
    }
    Ok(result)
}

/// Formal linear combination `plain + gamma1·Γ(a1+1)/b^{a1} +
/// gamma2·Γ(a2+1)/b^{a2} + euler·γ` with exact rational weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaCombo {
    pub plain: BigRational,
    pub gamma1: BigRational,
    pub gamma2: BigRational,
    pub euler: BigRational,
}

impl GammaCombo {
    pub fn zero() -> Self {
        Self {
            plain: BigRational::zero(),
            gamma1: BigRational::zero(),
            gamma2: BigRational::zero(),
            euler: BigRational::zero(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self {
            plain: &self.plain * c,
            gamma1: &self.gamma1 * c,
            gamma2: &self.gamma2 * c,
            euler: &self.euler * c,
        }
    }
}

impl Add for &GammaCombo {
    type Output = GammaCombo;
    fn add(self, rhs: &GammaCombo) -> GammaCombo {
        GammaCombo {
            plain: &self.plain + &rhs.plain,
            gamma1: &self.gamma1 + &rhs.gamma1,
            gamma2: &self.gamma2 + &rhs.gamma2,
            euler: &self.euler + &rhs.euler,
        }
    }
}

impl Sub for &GammaCombo {
    type Output = GammaCombo;
    fn sub(self, rhs: &GammaCombo) -> GammaCombo {
        GammaCombo {
            plain: &self.plain - &rhs.plain,
            gamma1: &self.gamma1 - &rhs.gamma1,
            gamma2: &self.gamma2 - &rhs.gamma2,
            euler: &self.euler - &rhs.euler,
        }
    }
}

/// `∫₀^∞ x^{a+k} e^{-bx} dx = [(a+1)_k / b^{k+1}] · Γ(a+1)/b^a`; returns the
/// rational multiplier of the Γ-symbol for `a`.
pub fn laguerre_moment(k: u64, a: &BigRational, b: &BigRational) -> BigRational {
    pochhammer(&(a + BigRational::one()), k)
        / num_traits::pow::pow(b.clone(), k as usize + 1)
}

/// `∫₀^∞ x^k e^{-x} ln x dx = k!(H_k - γ)` as a Γ-symbol combination.
pub fn log_moment(k: u64) -> GammaCombo {
    let kfact = BigRational::from_integer(BigInt::from(factorial(k)));
    GammaCombo {
        plain: &kfact * harmonic0(k),
        gamma1: BigRational::zero(),
        gamma2: BigRational::zero(),
        euler: -kfact,
    }
}

/// `Σ_m q_m (a+1)_m / b^{m+1}` — the rational multiplier of `Γ(a+1)/b^a` in
/// `∫₀^∞ x^a Q(x) e^{-bx} dx`.
fn weighted_moment_sum(q: &RationalPolynomial, a: &BigRational, b: &BigRational) -> BigRational {
    let mut total = BigRational::zero();
    let mut poch = BigRational::one(); // (a+1)_m
    let mut bpow = b.recip(); // 1/b^{m+1}
    for (m, c) in q.coeffs().iter().enumerate() {
        if !c.is_zero() {
            total += c * &poch * &bpow;
        }
        poch *= a + BigRational::one() + BigRational::from_integer(BigInt::from(m));
        bpow /= b;
    }
    total
}

/// The Γ-symbol expansion of `R_n = b^{2n+1} ∫₀^∞ (x^{a2} - x^{a1}) Q_n e^{-bx} dx`,
/// computed from the Rodrigues polynomial and the Laguerre moments.
pub fn gamma_linear_form(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n: u64,
) -> Result<GammaCombo, RodriguesError> {
    let q = rodrigues_polynomial(a1, a2, b, n)?;
    let scale = num_traits::pow::pow(b.clone(), 2 * n as usize + 1);
    Ok(GammaCombo {
        plain: BigRational::zero(),
        gamma1: -(weighted_moment_sum(&q, a1, b) * &scale),
        gamma2: weighted_moment_sum(&q, a2, b) * &scale,
        euler: BigRational::zero(),
    })
}

/// Checks the Γ-symbol expansion of the linear form against the closed-form
/// sequences: `R_n = q_n(a1,a2,b)·Γ(a2+1)/b^{a2} - q_n(a2,a1,b)·Γ(a1+1)/b^{a1}`.
/// The two sides come from independent code paths (symbolic differentiation
/// plus moments vs. the hypergeometric sum).
pub fn verify_gamma_linear_form(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n: u64,
) -> Result<bool, RodriguesError> {
    let lhs = gamma_linear_form(a1, a2, b, n)?;
    let rhs = GammaCombo {
        plain: BigRational::zero(),
        gamma1: -q_gamma(a2, a1, b, n),
        gamma2: q_gamma(a1, a2, b, n),
        euler: BigRational::zero(),
    };
    Ok(lhs == rhs)
}

/// Checks the single-weight moment identity
/// `b^{2n+a2+1}/Γ(a2+1) · ∫₀^∞ x^{a2} Q_n e^{-bx} dx = q_n(a1,a2,b)`,
/// i.e. `b^{2n+1} Σ_m q_m (a2+1)_m / b^{m+1} = q_n(a1,a2,b)` exactly.
pub fn verify_q_moment_identity(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n: u64,
) -> Result<bool, RodriguesError> {
    let q = rodrigues_polynomial(a1, a2, b, n)?;
    let lhs = weighted_moment_sum(&q, a2, b)
        * num_traits::pow::pow(b.clone(), 2 * n as usize + 1);
    Ok(lhs == q_gamma(a1, a2, b, n))
}

/// Checks `∫₀^∞ Q_n^{(0,0,1)} e^{-x} ln x dx = p_n - γ q_n` by expanding the
/// integral through the logarithmic moments and comparing both Γ-combo slots
/// against the integer Euler sequences.
pub fn verify_euler_remainder(n: u64) -> Result<bool, RodriguesError> {
    let zero = BigRational::zero();
    let one = BigRational::one();
    let q = rodrigues_polynomial(&zero, &zero, &one, n)?;
    let mut combo = GammaCombo::zero();
    for (m, c) in q.coeffs().iter().enumerate() {
        if !c.is_zero() {
            combo = &combo + &log_moment(m as u64).scale(c);
        }
    }
    let expect_plain = BigRational::from_integer(euler_p(n));
    let expect_euler = -BigRational::from_integer(BigInt::from(euler_q(n)));
    Ok(combo.plain == expect_plain
        && combo.euler == expect_euler
        && combo.gamma1.is_zero()
        && combo.gamma2.is_zero())
}

/// Integration interval of the orthogonality conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Interval {
    /// `[0, 1]`
    Unit,
    /// `[1, ∞)`
    Tail,
}

/// Which of the two weights `x^{a_k}(1-x)e^{-bx}` multiplies the integrand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightIndex {
    First,
    Second,
}

/// Numerical residual of the orthogonality condition
/// `∫_Δ x^ν Q_n(x) w_k(x) dx`, expected ≈ 0 for `ν <= n-1`.
///
/// The integrand expands into powers `x^{a_k+m}`, so the integral is a sum of
/// lower/upper incomplete-gamma values `γ(a_k+m+1, b)/b^{a_k+m+1}` over the
/// unit interval and `Γ(a_k+m+1, b)/b^{a_k+m+1}` over the tail.
pub fn orthogonality_residual(
    a1: &BigRational,
    a2: &BigRational,
    b: &BigRational,
    n: u64,
    interval: Interval,
    weight: WeightIndex,
    nu: u64,
    ctx: PrecisionContext,
) -> Result<BigFloat, RodriguesError> {
    let q = rodrigues_polynomial(a1, a2, b, n)?;
    let a = match weight {
        WeightIndex::First => a1,
        WeightIndex::Second => a2,
    };
    // x^ν (1-x) Q_n
    let integrand = &RationalPolynomial::one_minus_x_pow(1) * &q.shift_up(nu as usize);

    let fb = ctx.frac_bits();
    let b_float = BigFloat::from_rational(b, fb);
    let mut total = BigFloat::zero(fb);
    for (m, c) in integrand.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let s = a + BigRational::one() + BigRational::from_integer(BigInt::from(m));
        let value = match interval {
            Interval::Unit => lower_incomplete_gamma(&s, b, ctx)?,
            Interval::Tail => upper_incomplete_gamma(&s, b, ctx)?,
        };
        let scale = pow_rational(&b_float, &s)?;
        total = &total + &(&(&BigFloat::from_rational(c, fb) * &value) / &scale);
    }
    Ok(total)
}

/// Residual threshold tied to the requested precision: `10^(5 - digits)`.
pub fn orthogonality_tolerance(ctx: PrecisionContext) -> BigFloat {
    let exponent = 5 - ctx.working_digits as i64;
    let power = if exponent >= 0 {
        BigRational::from_integer(num_traits::pow::pow(BigInt::from(10u32), exponent as usize))
    } else {
        BigRational::new(
            BigInt::one(),
            num_traits::pow::pow(BigInt::from(10u32), (-exponent) as usize),
        )
    };
    BigFloat::from_rational(&power, ctx.frac_bits())
}

/// `n` beyond which symbolic verification is not attempted by default;
/// coefficient sizes grow combinatorially with the `4n` degree.
pub const DEFAULT_SYMBOLIC_CAP: u64 = 6;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::numerics;

    #[test]
    fn derivative_rule_on_simple_sum() {
        // d/dx [x^{1/2} e^{-2x}] = (1/2) x^{-1/2} e^{-2x} - 2 x^{1/2} e^{-2x}
        let sum = ExpMonomialSum::from_polynomial(
            rat(1, 2),
            int(2),
            &RationalPolynomial::from_ints(&[1]),
        );
        let d = sum.derivative();
        assert_eq!(d.coeff(-1), rat(1, 2));
        assert_eq!(d.coeff(0), int(-2));
        assert_eq!(d.term_count(), 2);
    }

    #[test]
    fn derivative_drops_vanishing_terms() {
        // alpha = 0: the constant term's power-law part differentiates away
        let sum = ExpMonomialSum::from_polynomial(
            int(0),
            int(0),
            &RationalPolynomial::from_ints(&[5]),
        );
        // with b = 0 the derivative is exactly zero
        let d = sum.derivative();
        assert_eq!(d.term_count(), 0);
    }

    #[test]
    fn rodrigues_unit_case_oracle() {
        // frozen by hand-differentiating x(1-x)^3 e^{-x} and the outer pass
        let q = rodrigues_polynomial(&int(0), &int(0), &int(1), 1).unwrap();
        assert_eq!(q, RationalPolynomial::from_ints(&[1, -14, 29, -11, 1]));
    }

    #[test]
    fn rodrigues_degenerate_case() {
        let q = rodrigues_polynomial(&int(0), &int(0), &int(1), 0).unwrap();
        assert_eq!(q, RationalPolynomial::one());
    }

    #[test]
    fn rodrigues_n2_external_oracle() {
        // frozen from an independent computer-algebra evaluation
        let q = rodrigues_polynomial(&int(0), &int(0), &int(1), 2).unwrap();
        let expect = RationalPolynomial::new(vec![
            int(1),
            int(-52),
            rat(905, 2),
            int(-1283),
            rat(5669, 4),
            int(-610),
            int(113),
            int(-9),
            rat(1, 4),
        ]);
        assert_eq!(q, expect);
    }

    #[test]
    fn rodrigues_rational_parameters_external_oracle() {
        // Q_1^{(1/2,-1/3,1)} from an independent symbolic computation
        let q = rodrigues_polynomial(&rat(1, 2), &rat(-1, 3), &int(1), 1).unwrap();
        let expect = RationalPolynomial::new(vec![
            int(1),
            rat(-44, 3),
            rat(179, 6),
            rat(-67, 6),
            int(1),
        ]);
        assert_eq!(q, expect);
        // Q_1^{(1/4,-1/4,2)}
        let q = rodrigues_polynomial(&rat(1, 4), &rat(-1, 4), &int(2), 1).unwrap();
        let expect = RationalPolynomial::new(vec![
            rat(15, 16),
            rat(-135, 8),
            rat(703, 16),
            int(-26),
            int(4),
        ]);
        assert_eq!(q, expect);
    }

    #[test]
    fn rodrigues_symmetry_in_parameters() {
        for (a1, a2) in [(rat(1, 2), rat(-1, 3)), (rat(1, 4), rat(-1, 4)), (rat(-2, 3), rat(-1, 2))] {
            for b in [int(1), int(2)] {
                for n in 0..=3u64 {
                    let lhs = rodrigues_polynomial(&a1, &a2, &b, n).unwrap();
                    let rhs = rodrigues_polynomial(&a2, &a1, &b, n).unwrap();
                    assert_eq!(lhs, rhs, "a1={a1} a2={a2} b={b} n={n}");
                }
            }
        }
    }

    #[test]
    fn laguerre_moment_examples() {
        assert_eq!(laguerre_moment(0, &int(0), &int(1)), int(1));
        assert_eq!(laguerre_moment(2, &int(0), &int(1)), int(2));
        assert_eq!(laguerre_moment(1, &rat(1, 2), &int(1)), rat(3, 2));
        // b scaling: ∫ x e^{-2x} = 1/4 relative to Γ(1)/b^0
        assert_eq!(laguerre_moment(1, &int(0), &int(2)), rat(1, 4));
    }

    #[test]
    fn log_moment_examples() {
        let m0 = log_moment(0);
        assert_eq!(m0.plain, int(0));
        assert_eq!(m0.euler, int(-1));
        let m1 = log_moment(1);
        assert_eq!(m1.plain, int(1));
        assert_eq!(m1.euler, int(-1));
        let m4 = log_moment(4);
        assert_eq!(m4.plain, int(50));
        assert_eq!(m4.euler, int(-24));
    }

    #[test]
    fn linear_form_expansion_verified() {
        assert!(verify_gamma_linear_form(&rat(1, 2), &rat(-1, 3), &int(1), 1).unwrap());
        assert!(verify_gamma_linear_form(&rat(1, 4), &rat(-1, 4), &int(2), 2).unwrap());
    }

    #[test]
    fn linear_form_detects_perturbation() {
        // sensitivity control: a deliberately wrong right-hand side fails
        let lhs = gamma_linear_form(&rat(1, 2), &rat(-1, 3), &int(1), 1).unwrap();
        let mut rhs = GammaCombo {
            plain: BigRational::zero(),
            gamma1: -q_gamma(&rat(-1, 3), &rat(1, 2), &int(1), 1),
            gamma2: q_gamma(&rat(1, 2), &rat(-1, 3), &int(1), 1),
            euler: BigRational::zero(),
        };
        assert_eq!(lhs, rhs);
        rhs.gamma2 += BigRational::one();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn linear_form_antisymmetry() {
        // R_n(a1,a2,b) = -R_n(a2,a1,b): swapping parameters swaps and negates
        // the Γ-slots
        let fwd = gamma_linear_form(&rat(1, 2), &rat(-1, 3), &int(1), 2).unwrap();
        let rev = gamma_linear_form(&rat(-1, 3), &rat(1, 2), &int(1), 2).unwrap();
        assert_eq!(fwd.gamma1, -rev.gamma2.clone());
        assert_eq!(fwd.gamma2, -rev.gamma1.clone());
    }

    #[test]
    fn q_moment_identity_examples() {
        // ∫ Q_1^{(0,0,1)} e^{-x} = 3 = q_1
        assert!(verify_q_moment_identity(&int(0), &int(0), &int(1), 1).unwrap());
        assert!(verify_q_moment_identity(&int(0), &int(0), &int(1), 2).unwrap());
        // role swap: q_n(-1/2, -2/3, 1) is the cor1 numerator
        assert!(verify_q_moment_identity(&rat(-1, 2), &rat(-2, 3), &int(1), 1).unwrap());
    }

    #[test]
    fn euler_remainder_small_n() {
        for n in 0..=3 {
            assert!(verify_euler_remainder(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn orthogonality_residuals_vanish_in_range() {
        let ctx = PrecisionContext::new(30);
        let tol = orthogonality_tolerance(ctx);
        for nu in 0..2u64 {
            for interval in [Interval::Unit, Interval::Tail] {
                for weight in [WeightIndex::First, WeightIndex::Second] {
                    let r = orthogonality_residual(
                        &int(0), &int(0), &int(1), 2, interval, weight, nu, ctx,
                    )
                    .unwrap();
                    assert!(r.abs() < tol, "nu={nu} {interval:?} {weight:?} -> {r}");
                }
            }
        }
    }

    #[test]
    fn orthogonality_control_is_nonzero() {
        // ν = n sits outside the orthogonality range; the residual must be
        // a clearly nonzero number
        let ctx = PrecisionContext::new(30);
        let r = orthogonality_residual(
            &int(0), &int(0), &int(1), 1, Interval::Unit, WeightIndex::First, 1, ctx,
        )
        .unwrap();
        let floor = BigFloat::from_rational(&rat(1, 1_000_000_000), ctx.frac_bits());
        assert!(r.abs() > floor, "control residual unexpectedly small: {r}");
    }

    #[test]
    fn orthogonality_with_log_weight_limit_case() {
        // the (0,0,1) limit also satisfies orthogonality against the
        // ln-weight: ∫ x^ν Q_n (1-x) ln(x) e^{-x} over [0,∞) expands into
        // logarithmic moments, exactly zero in the Γ-combo algebra
        for n in 1..=3u64 {
            let q = rodrigues_polynomial(&int(0), &int(0), &int(1), n).unwrap();
            for nu in 0..n {
                let integrand =
                    &RationalPolynomial::one_minus_x_pow(1) * &q.shift_up(nu as usize);
                let mut combo = GammaCombo::zero();
                for (m, c) in integrand.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        combo = &combo + &log_moment(m as u64).scale(c);
                    }
                }
                assert!(combo.plain.is_zero() && combo.euler.is_zero(), "n={n} nu={nu}");
            }
        }
    }

    #[test]
    fn weight_division_error_paths() {
        let sum = ExpMonomialSum::from_polynomial(
            rat(1, 2),
            int(1),
            &RationalPolynomial::from_ints(&[0, 3]),
        );
        assert!(matches!(
            sum.divide_by_weight(&int(0)),
            Err(RodriguesError::OffsetMismatch { .. })
        ));
        // x·e^{-x} alone is not divisible by (1-x)
        let sum = ExpMonomialSum::from_polynomial(
            int(0),
            int(1),
            &RationalPolynomial::from_ints(&[0, 1]),
        );
        assert!(matches!(
            sum.divide_by_weight(&int(0)),
            Err(RodriguesError::NonzeroRemainder { .. })
        ));
        // negative index after differentiation of x^{1/2}: offset intact but
        // index went to -1
        let sum = ExpMonomialSum::from_polynomial(
            rat(1, 2),
            int(1),
            &RationalPolynomial::from_ints(&[1]),
        );
        let d = sum.derivative();
        assert!(matches!(
            d.divide_by_weight(&rat(1, 2)),
            Err(RodriguesError::NegativePower { index: -1 })
        ));
    }

    #[test]
    fn orthogonality_tolerance_scale() {
        let ctx = PrecisionContext::new(30);
        let tol = orthogonality_tolerance(ctx);
        let expect = BigFloat::from_rational(
            &BigRational::new(BigInt::one(), BigInt::from(10u64).pow(25)),
            ctx.frac_bits(),
        );
        assert_eq!(tol, expect);
        let _ = numerics::pi(64); // keep the numerics import exercised
    }
}
