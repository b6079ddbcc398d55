//! Bernoulli numbers as exact rationals, cached process-wide.
//!
//! Computed with the defining recurrence `Σ_{k=0}^{m} C(m+1, k) B_k = 0`,
//! `B_0 = 1`. Only the even-index values feed the Stirling and digamma
//! asymptotic series, but the whole table is kept since the recurrence
//! produces it anyway.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use std::sync::Mutex;

static TABLE: Lazy<Mutex<Vec<BigRational>>> =
    Lazy::new(|| Mutex::new(vec![BigRational::one()]));

/// `B_m` with the `B_1 = -1/2` convention.
pub fn bernoulli(m: usize) -> BigRational {
    let mut table = TABLE.lock().expect("bernoulli cache poisoned");
    while table.len() <= m {
        let next = table.len();
        // B_next = -1/(next+1) Σ_{k<next} C(next+1, k) B_k
        let mut acc = BigRational::zero();
        let mut binom = BigInt::one(); // C(next+1, k)
        for (k, b) in table.iter().enumerate() {
            acc += BigRational::from_integer(binom.clone()) * b;
            binom = binom * BigInt::from(next + 1 - k) / BigInt::from(k + 1);
        }
        let value = -acc / BigRational::from_integer(BigInt::from(next + 1));
        table.push(value);
    }
    table[m].clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    #[test]
    fn known_values() {
        assert_eq!(bernoulli(0), int(1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), int(0));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(6), rat(1, 42));
        assert_eq!(bernoulli(8), rat(-1, 30));
        assert_eq!(bernoulli(10), rat(5, 66));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for m in (3..30).step_by(2) {
            assert_eq!(bernoulli(m), int(0), "B_{m}");
        }
    }
}
