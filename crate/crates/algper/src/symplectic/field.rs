//! Arithmetic in the cyclotomic field ℚ(ξ), ξ a fixed primitive k-th root
//! of unity, with elements written in the power basis 1, ξ, …, ξ^(φ(k)−1).
//! Products are reduced modulo the (monic, integer) k-th cyclotomic
//! polynomial, so everything stays exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::numtheory::{cyclotomic, euler_phi, IntPolynomial};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclotomicElement {
    order: u64,
    /// Length φ(order); coeffs[i] multiplies ξ^i.
    coeffs: Vec<BigRational>,
}

impl CyclotomicElement {
    pub fn zero(order: u64) -> Self {
        assert!(order >= 1, "root orders start at 1");
        CyclotomicElement {
            order,
            coeffs: vec![BigRational::zero(); euler_phi(order) as usize],
        }
    }

    pub fn one(order: u64) -> Self {
        let mut e = Self::zero(order);
        e.coeffs[0] = BigRational::one();
        e
    }

    /// ξ^e, exponent taken modulo the order.
    pub fn xi_pow(order: u64, e: u64) -> Self {
        let e = (e % order) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::from_raw(order, raw)
    }

    pub fn xi(order: u64) -> Self {
        Self::xi_pow(order, 1)
    }

    /// Evaluates an integer polynomial at ξ.
    pub fn from_int_poly(order: u64, p: &IntPolynomial) -> Self {
        Self::from_raw(
            order,
            p.coeffs()
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        )
    }

    /// Builds from raw power-basis coordinates of any length, reducing
    /// modulo the cyclotomic polynomial.
    pub fn from_raw(order: u64, coeffs: Vec<BigRational>) -> Self {
        assert!(order >= 1, "root orders start at 1");
        CyclotomicElement {
            order,
            coeffs: reduce(order, coeffs),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Power-basis coordinates, length φ(order).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        CyclotomicElement {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        CyclotomicElement {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "mixed cyclotomic orders");
        let mut raw = vec![BigRational::zero(); 2 * self.coeffs.len().max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                raw[i + j] += prod;
            }
        }
        Self::from_raw(self.order, raw)
    }

    /// Integer coordinates if all denominators are 1.
    pub fn to_integer_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.coeffs.iter().all(BigRational::is_integer) {
            Some(self.coeffs.iter().map(BigRational::to_integer).collect())
        } else {
            None
        }
    }
}

/// Remainder of a raw coefficient vector modulo the monic cyclotomic
/// polynomial of the given order, padded to length φ(order).
fn reduce(order: u64, mut coeffs: Vec<BigRational>) -> Vec<BigRational> {
    let modulus = cyclotomic(order);
    let d = modulus
        .degree()
        .expect("cyclotomic polynomials are nonzero");
    let modulus: Vec<BigRational> = modulus
        .coeffs()
        .iter()
        .map(|c| BigRational::from(c.clone()))
        .collect();
    for i in (d..coeffs.len()).rev() {
        if coeffs[i].is_zero() {
            continue;
        }
        let lead = std::mem::replace(&mut coeffs[i], BigRational::zero());
        for (j, m) in modulus.iter().enumerate().take(d) {
            let sub = &lead * m;
            coeffs[i - d + j] -= sub;
        }
    }
    coeffs.resize(d, BigRational::zero());
    coeffs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> BigRational {
        BigRational::from(BigInt::from(v))
    }

    #[test]
    fn powers_wrap_at_the_order() {
        for k in [3u64, 4, 5, 6, 8, 12] {
            assert_eq!(CyclotomicElement::xi_pow(k, k), CyclotomicElement::one(k));
            let xi = CyclotomicElement::xi(k);
            let mut acc = CyclotomicElement::one(k);
            for e in 0..2 * k {
                assert_eq!(acc, CyclotomicElement::xi_pow(k, e), "k = {k}, e = {e}");
                acc = acc.mul(&xi);
            }
        }
    }

    #[test]
    fn minimal_polynomial_vanishes() {
        for k in 1..=40u64 {
            let at_xi = CyclotomicElement::from_int_poly(k, &cyclotomic(k));
            assert!(at_xi.is_zero(), "Φ_{k}(ξ) ≠ 0");
        }
    }

    #[test]
    fn cube_root_relations() {
        // k = 3: ξ² = −1 − ξ, so 1 + ξ + ξ² = 0.
        let sum = CyclotomicElement::one(3)
            .add(&CyclotomicElement::xi(3))
            .add(&CyclotomicElement::xi_pow(3, 2));
        assert!(sum.is_zero());

        // (1 + ξ)(1 + ξ²) = 1 + ξ + ξ² + 1 = 1.
        let a = CyclotomicElement::one(3).add(&CyclotomicElement::xi(3));
        let b = CyclotomicElement::one(3).add(&CyclotomicElement::xi_pow(3, 2));
        assert_eq!(a.mul(&b), CyclotomicElement::one(3));
    }

    #[test]
    fn inverse_powers_multiply_to_one() {
        for k in [3u64, 5, 8, 12] {
            for e in 1..k {
                let prod =
                    CyclotomicElement::xi_pow(k, e).mul(&CyclotomicElement::xi_pow(k, k - e));
                assert_eq!(prod, CyclotomicElement::one(k), "k = {k}, e = {e}");
            }
        }
    }

    #[test]
    fn scaling_and_integrality() {
        let e = CyclotomicElement::xi(3).scale(&BigRational::new(1.into(), 2.into()));
        assert!(e.to_integer_coeffs().is_none());
        let doubled = e.scale(&int(2));
        assert_eq!(
            doubled.to_integer_coeffs().unwrap(),
            vec![BigInt::from(0), BigInt::from(1)]
        );
    }
}
