//! Chebyshev polynomials of the second kind,
//! `S_{n+2}(x) = x S_{n+1}(x) - S_n(x)` with `S_0 = 1`, `S_1 = x`.
//!
//! These expand a color into a linear combination of blackboard cablings.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Exact coefficients of `S_n(x)`; `coeffs[m]` is the coefficient of `x^m`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChebyshevExpansion {
    coeffs: Vec<BigInt>,
}

impl ChebyshevExpansion {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }
}

/// Compute `S_n`.
pub fn chebyshev(n: usize) -> ChebyshevExpansion {
    let mut prev = vec![BigInt::one()]; // S_0
    if n == 0 {
        return ChebyshevExpansion { coeffs: prev };
    }
    let mut cur = vec![BigInt::zero(), BigInt::one()]; // S_1
    for _ in 1..n {
        // x * cur - prev
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (m, c) in cur.iter().enumerate() {
            next[m + 1] += c;
        }
        for (m, c) in prev.iter().enumerate() {
            next[m] -= c;
        }
        prev = cur;
        cur = next;
    }
    debug_assert!(cur.last().unwrap().is_one());
    ChebyshevExpansion { coeffs: cur }
}
