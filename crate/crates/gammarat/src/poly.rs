//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending order of the power of the formal
//! variable; the highest stored coefficient is nonzero unless the polynomial
//! is zero (empty coefficient list).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c · x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Convenience constructor from small integer coefficients (ascending).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the stored range).
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigRational {
        self.eval(&BigRational::from_integer(BigInt::from(x)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Exact division by `(1 - x)`; errors if the remainder `P(1)` is nonzero.
    ///
    /// With `P(x) = (1 - x) Q(x)`, the quotient coefficients are the prefix
    /// sums `q_j = p_0 + … + p_j` and the remainder is the full sum `P(1)`.
    pub fn div_exact_one_minus_x(&self) -> Result<Self, BigRational> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut prefix = BigRational::zero();
        let mut q = Vec::with_capacity(self.coeffs.len() - 1);
        for (j, c) in self.coeffs.iter().enumerate() {
            prefix += c;
            if j + 1 < self.coeffs.len() {
                q.push(prefix.clone());
            }
        }
        if prefix.is_zero() {
            Ok(Self::new(q))
        } else {
            Err(prefix)
        }
    }

    /// `(1 - x)^m` expanded into ascending coefficients.
    pub fn one_minus_x_pow(m: u64) -> Self {
        // binomial expansion with alternating signs, integer arithmetic
        let mut coeffs = Vec::with_capacity(m as usize + 1);
        let mut c = BigInt::one();
        for k in 0..=m {
            let signed = if k % 2 == 0 { c.clone() } else { -c.clone() };
            coeffs.push(BigRational::from_integer(signed));
            if k < m {
                c = c * BigInt::from(m - k) / BigInt::from(k + 1);
            }
        }
        Self::new(coeffs)
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }
}

impl fmt::Debug for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("({c})·x"),
                _ => format!("({c})·x^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        RationalPolynomial::new(coeffs)
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        RationalPolynomial::new(coeffs)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::new(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn normalization_trims_zeros() {
        let p = RationalPolynomial::new(vec![int(1), int(0), int(0)]);
        assert_eq!(p.degree(), Some(0));
        assert!(RationalPolynomial::new(vec![int(0)]).is_zero());
        assert_eq!(RationalPolynomial::zero().degree(), None);
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = RationalPolynomial::from_ints(&[2, 1]); // 2 + x
        let q = RationalPolynomial::from_ints(&[-2, 1]); // -2 + x
        let prod = &p * &q; // x^2 - 4
        assert_eq!(prod, RationalPolynomial::from_ints(&[-4, 0, 1]));
        assert_eq!(prod.eval(&int(3)), int(5));
        assert_eq!((&p + &q), RationalPolynomial::from_ints(&[0, 2]));
        assert_eq!((&p - &q), RationalPolynomial::from_ints(&[4]));
        assert_eq!(prod.eval(&rat(1, 2)), rat(-15, 4));
    }

    #[test]
    fn one_minus_x_pow_expansion() {
        assert_eq!(
            RationalPolynomial::one_minus_x_pow(3),
            RationalPolynomial::from_ints(&[1, -3, 3, -1])
        );
        assert_eq!(RationalPolynomial::one_minus_x_pow(0), RationalPolynomial::one());
    }

    #[test]
    fn division_by_one_minus_x() {
        // (1-x)^3 / (1-x) = (1-x)^2
        let p = RationalPolynomial::one_minus_x_pow(3);
        assert_eq!(
            p.div_exact_one_minus_x().unwrap(),
            RationalPolynomial::one_minus_x_pow(2)
        );
        // x^2 has remainder 1 at x = 1
        let bad = RationalPolynomial::from_ints(&[0, 0, 1]);
        assert_eq!(bad.div_exact_one_minus_x().unwrap_err(), int(1));
    }

    #[test]
    fn shift_up_multiplies_by_x_pow() {
        let p = RationalPolynomial::from_ints(&[1, 1]);
        assert_eq!(p.shift_up(2), RationalPolynomial::from_ints(&[0, 0, 1, 1]));
    }
}
