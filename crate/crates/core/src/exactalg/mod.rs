//! Exact linear algebra and monomial bookkeeping over `Q[x, y, z]`.
//!
//! Everything the oracle needs to evaluate Hilbert functions lives here:
//! graded monomial bases, expansion of powers of linear forms, homogeneous
//! integer polynomials, and exact rank/kernel computations. Ranks of integer
//! matrices are computed with fraction-free (Bareiss) elimination; a word-size
//! modular rank is provided as a cheap lower bound for callers that can certify
//! the result independently.

mod matrix;
pub mod modular;
mod monomial;
mod poly;

pub use matrix::{DenseMatrix, IntMatrix};
pub use monomial::{binom2, MonoBasis};
pub use poly::{expand_power, HomPoly, LinearForm};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational scalar; always kept in lowest terms with a positive denominator.
pub type ExactScalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactAlgError {
    #[error("power of a linear form must be positive")]
    ZeroPower,
    #[error("linear form must be nonzero")]
    ZeroForm,
    #[error("matrix shape mismatch: expected {expected} entries, got {got}")]
    Shape { expected: usize, got: usize },
}

/// Scales a rational vector by the lcm of its denominators and removes the
/// content, giving the primitive integer vector spanning the same line.
pub fn primitive_integer_vector(v: &[ExactScalar]) -> Vec<BigInt> {
    use num_integer::Integer;
    use num_traits::{One, Signed, Zero};

    let lcm = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
    let content = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if content.is_zero() {
        return scaled;
    }
    let mut out: Vec<BigInt> = scaled.into_iter().map(|x| x / &content).collect();
    // Normalize sign: first nonzero coordinate positive.
    if let Some(first) = out.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in out.iter_mut() {
                *x = -&*x;
            }
        }
    }
    out
}
