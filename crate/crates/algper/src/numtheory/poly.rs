//! Dense univariate polynomials over the integers, just enough for
//! cyclotomic arithmetic and characteristic polynomials: exact division,
//! multiplication, evaluation, derivative.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// coeffs[i] is the coefficient of x^i; the vector never ends in a zero, so
/// the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    /// x^k − 1.
    pub fn x_pow_minus_one(k: u64) -> Self {
        let k = k as usize;
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[k] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = BigInt>) -> Self {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficients, no trailing zeros.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    /// Coefficient vector reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn mul(&self, other: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || other.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u64) -> IntPolynomial {
        let mut acc = IntPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Long division by a monic divisor, panicking unless the remainder is
    /// zero. Only called where exactness is an invariant (cyclotomic towers),
    /// so failure means an arithmetic bug.
    pub fn exact_div(&self, divisor: &IntPolynomial) -> IntPolynomial {
        assert!(!divisor.is_zero(), "exact_div by zero polynomial");
        assert!(divisor.is_monic(), "exact_div requires a monic divisor");
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let dd = divisor.coeffs.len() - 1;
        let nd = self.coeffs.len() - 1;
        assert!(nd >= dd, "exact_div: divisor degree exceeds dividend");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for i in (dd..=nd).rev() {
            let q = std::mem::replace(&mut rem[i], BigInt::zero());
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate().take(dd) {
                rem[i - dd + j] -= &q * c;
            }
            quot[i - dd] = q;
        }
        assert!(
            rem.iter().all(|c| c.is_zero()),
            "exact_div left a nonzero remainder"
        );
        IntPolynomial::from_coeffs(quot)
    }

    pub fn derivative(&self) -> IntPolynomial {
        IntPolynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i)),
        )
    }

    pub fn neg(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)))
    }

    #[test]
    fn construction_trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn multiplication() {
        // (x + 1)(x − 1) = x² − 1
        assert_eq!(p(&[1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 1]));
        assert_eq!(
            p(&[2, 3]).mul(&IntPolynomial::zero()),
            IntPolynomial::zero()
        );
        assert_eq!(p(&[1, 1, 1]).mul(&p(&[-1, 1])), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn exact_division_inverts_multiplication() {
        let a = p(&[3, -2, 0, 1, 7]);
        let b = p(&[1, 4, 1]); // monic
        assert_eq!(a.mul(&b).exact_div(&b), a);
        assert_eq!(IntPolynomial::zero().exact_div(&b), IntPolynomial::zero());
    }

    #[test]
    #[should_panic(expected = "nonzero remainder")]
    fn exact_division_rejects_inexact() {
        p(&[1, 0, 1]).exact_div(&p(&[1, 1]));
    }

    #[test]
    fn derivative_and_display() {
        assert_eq!(p(&[5, 3, 0, 2]).derivative(), p(&[3, 0, 6]));
        assert_eq!(p(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(p(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(p(&[0, 2]).to_string(), "2x");
        assert_eq!(p(&[-7]).to_string(), "-7");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let b = p(&[1, 1]);
        assert_eq!(b.pow(0), IntPolynomial::one());
        assert_eq!(b.pow(3), p(&[1, 3, 3, 1]));
    }
}
