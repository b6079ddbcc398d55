//! Exact-arithmetic construction and verification of rational approximations to
//! quotients of Gamma values, to `ln(b) - ψ(a+1)`, and to Euler's constant γ.
//!
//! The library is organized around one family of rational sequences,
//!
//! ```text
//! q_n(a1, a2, b) = Σ_{k=0}^{n} C(n+a1-a2, k) · C(n+a2-a1, n-k) · (a2+1)_{n+k} · b^{n-k},
//! ```
//!
//! whose specializations and role-swapped companions provide numerators and
//! denominators of sub-exponentially convergent approximations
//!
//! ```text
//! q_n(a2, a1, b) / q_n(a1, a2, b)  →  [Γ(a2+1)/b^{a2}] / [Γ(a1+1)/b^{a1}],
//! p_n(a, b) / q_n(a, b)           →  ln(b) - ψ(a+1),
//! p_n / q_n                       →  γ            (the a = 0, b = 1 case).
//! ```
//!
//! Modules:
//!
//! * [`exact`] — Pochhammer symbols, generalized binomials, harmonic numbers,
//!   factorials, lcm and the denominator-clearing factor μ, all in exact
//!   arbitrary-precision rational arithmetic.
//! * [`poly`] — dense univariate polynomials over the rationals.
//! * [`sequences`] — closed forms for every sequence family, plus exact
//!   integrality and divisibility certification.
//! * [`recurrences`] — the four built-in third-order recurrences, a generic
//!   exact runner and a residual checker.
//! * [`rodrigues`] — symbolic construction of the multiple Jacobi-Laguerre
//!   polynomial `Q_n` and exact verification of its integral identities in a
//!   formal Γ-symbol algebra.
//! * [`numerics`] — arbitrary-precision floating point, elementary functions,
//!   Γ, ψ, γ and incomplete gamma with explicit precision contracts.
//! * [`analysis`] — numerical measurement of the sub-exponential convergence
//!   rates and of the asymptotic constants.

pub mod analysis;
pub mod exact;
pub mod numerics;
pub mod poly;
pub mod recurrences;
pub mod rodrigues;
pub mod sequences;

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;
