//! Integer symplectic realizations of root-of-unity spectra.
//!
//! For every order k ≥ 3 the trace-dual lattice of ℤ[ξ] (ξ a primitive k-th
//! root of unity) carries a skew-symmetric unimodular pairing invariant
//! under multiplication by ξ. Writing that multiplication in a Darboux basis
//! produces an integer matrix of size φ(k) that preserves the standard
//! symplectic form and has the k-th cyclotomic polynomial as characteristic
//! polynomial. Orders 1 and 2 are realized by ±identity blocks of size 2,
//! and block sums of these primitives realize every realizable spectrum on
//! a surface of the spectrum's genus.
//!
//! Every constructor here re-checks its own output: the pairing is asserted
//! skew, unimodular and multiplication-invariant, Darboux factors are
//! asserted to reproduce their input, and the final block matrices are
//! asserted symplectic with the expected characteristic polynomial.

mod darboux;
mod field;
mod matrix;

pub use darboux::darboux_factor;
pub use field::CyclotomicElement;
pub use matrix::{block_diag, int_matrix, IntMatrix, Mat, RatMatrix};

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::dold::{LefschetzView, RootSpectrum};
use crate::numtheory::{cyclotomic, euler_phi, IntPolynomial};
use crate::Error;

/// How the standard form lays out its symplectic pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormLayout {
    /// Block diagonal ⊕ [[0,1],[−1,0]]: basis vectors 2t and 2t+1 pair up.
    Paired,
    /// [[0,I],[−I,0]]: basis vector t pairs with g+t.
    Split,
}

/// The standard symplectic form on ℤ^{2g} in one of the two layouts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    genus: usize,
    layout: FormLayout,
}

impl SymplecticForm {
    pub fn paired(genus: usize) -> Self {
        SymplecticForm {
            genus,
            layout: FormLayout::Paired,
        }
    }

    pub fn split(genus: usize) -> Self {
        SymplecticForm {
            genus,
            layout: FormLayout::Split,
        }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn layout(&self) -> FormLayout {
        self.layout
    }

    pub fn size(&self) -> usize {
        2 * self.genus
    }

    /// The Gram matrix of the form.
    pub fn matrix(&self) -> IntMatrix {
        let g = self.genus;
        match self.layout {
            FormLayout::Paired => darboux::standard_form(2 * g),
            FormLayout::Split => {
                let mut omega = IntMatrix::zeros(2 * g, 2 * g);
                for t in 0..g {
                    omega.set(t, g + t, BigInt::one());
                    omega.set(g + t, t, BigInt::from(-1));
                }
                omega
            }
        }
    }

    /// Permutation P with Pᵀ·Ω_split·P = Ω_paired; it sends paired index 2t
    /// to split index t and 2t+1 to g+t.
    pub fn layout_permutation(genus: usize) -> IntMatrix {
        let mut p = IntMatrix::zeros(2 * genus, 2 * genus);
        for t in 0..genus {
            p.set(t, 2 * t, BigInt::one());
            p.set(genus + t, 2 * t + 1, BigInt::one());
        }
        p
    }

    /// Re-index a matrix written in the paired layout into this layout.
    /// Conjugating by the layout permutation preserves symplecticity with
    /// respect to the correspondingly re-laid-out form.
    pub fn from_paired_layout(&self, a: &IntMatrix) -> IntMatrix {
        match self.layout {
            FormLayout::Paired => a.clone(),
            FormLayout::Split => {
                let p = Self::layout_permutation(self.genus);
                p.mul(a).mul(&p.transpose())
            }
        }
    }
}

/// Gram matrix of the trace pairing (x, y) ↦ Tr(xy) on ℤ[ξ] in the power
/// basis 1, ξ, …, ξ^{φ(k)−1}; its entries are the Ramanujan sums c_k(i+j).
pub fn trace_form_matrix(k: u64) -> IntMatrix {
    assert!(
        k >= 3,
        "orders 1 and 2 are realized by ±identity blocks, not cyclotomic lattices"
    );
    let d = euler_phi(k) as usize;
    let rows = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| BigInt::from(crate::numtheory::ramanujan_sum(k, (i + j) as u64)))
                .collect()
        })
        .collect();
    IntMatrix::from_rows(rows)
}

/// Matrix with row i the power-basis coordinates of ξ^{i+1}. Read by
/// columns it is the action of multiplication by ξ on the trace-dual basis
/// β′ of the powers: column j lists the dual-basis coordinates of ξ·β′_j,
/// both being Tr(β′_j·ξ^{i+1}).
fn multiplication_matrix(k: u64) -> IntMatrix {
    let d = euler_phi(k) as usize;
    let rows = (0..d)
        .map(|i| {
            CyclotomicElement::xi_pow(k, i as u64 + 1)
                .to_integer_coeffs()
                .expect("powers of ξ lie in ℤ[ξ]")
        })
        .collect();
    IntMatrix::from_rows(rows)
}

/// Gram matrix of the skew pairing (x, y) ↦ Tr(Δ·x·ȳ) on the trace-dual
/// lattice of ℤ[ξ], written in the dual basis β′ of the powers of ξ; here
/// Δ = ξ^{1−φ(k)/2}·Φ′_k(ξ) and the bar is the conjugation ξ ↦ ξ^{−1}.
///
/// Computed as a change of basis: row j holds the coordinates of Δ·β′_j
/// (an element of ℤ[ξ], since Δ clears the dual denominators) in the basis
/// 1, ξ^{−1}, …, ξ^{−(φ(k)−1)}, and those coordinates are exactly
/// Tr(Δ·β′_j·β̄′_i).
pub fn skew_gram_matrix(k: u64) -> IntMatrix {
    let d = euler_phi(k) as usize;
    assert!(d.is_multiple_of(2), "φ(k) is even for k ≥ 3");
    let g = (d / 2) as i64;

    let trace_inverse = trace_form_matrix(k)
        .to_rational()
        .inverse()
        .expect("the trace pairing is nondegenerate");
    let shift = (1 - g).rem_euclid(k as i64) as u64;
    let delta = CyclotomicElement::from_int_poly(k, &cyclotomic(k).derivative())
        .mul(&CyclotomicElement::xi_pow(k, shift));

    // Column j of the inverse trace Gram matrix is the power-basis
    // coordinate vector of the dual basis vector β′_j; Δ·β′_j is integral.
    let scaled_dual_rows = (0..d)
        .map(|j| {
            let dual = CyclotomicElement::from_raw(
                k,
                (0..d).map(|i| trace_inverse.get(i, j).clone()).collect(),
            );
            delta
                .mul(&dual)
                .to_integer_coeffs()
                .expect("Δ clears the denominators of the trace duals")
        })
        .collect();
    let scaled_duals = IntMatrix::from_rows(scaled_dual_rows);

    let inverse_power_rows = (0..d)
        .map(|i| {
            CyclotomicElement::xi_pow(k, (k - (i as u64) % k) % k)
                .to_integer_coeffs()
                .expect("powers of ξ lie in ℤ[ξ]")
        })
        .collect();
    let inverse_powers = IntMatrix::from_rows(inverse_power_rows);
    let change = inverse_powers
        .to_rational()
        .inverse()
        .expect("inverse powers of ξ form a basis");

    let gram = scaled_duals
        .to_rational()
        .mul(&change)
        .to_integer()
        .expect("the pairing is integral on ℤ[ξ]");
    assert!(gram.is_skew_symmetric(), "the pairing is alternating");
    assert!(
        gram.determinant().is_one(),
        "the pairing is unimodular on ℤ[ξ]"
    );
    gram
}

fn symplectic_cache() -> &'static Mutex<HashMap<u64, IntMatrix>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntMatrix>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer symplectic matrix of size φ(k) whose characteristic polynomial is
/// the k-th cyclotomic polynomial, for k ≥ 3: multiplication by ξ on ℤ[ξ]
/// written in a Darboux basis of the skew pairing. Results are memoized.
pub fn cyclotomic_symplectic(k: u64) -> IntMatrix {
    if let Some(hit) = symplectic_cache().lock().unwrap().get(&k) {
        return hit.clone();
    }

    let gram = skew_gram_matrix(k);
    let mult = multiplication_matrix(k);
    // Column j of `mult` holds the dual-basis coordinates of ξ·β′_j, so
    // invariance of the pairing under multiplication by ξ reads
    // multᵀ·gram·mult = gram.
    assert_eq!(
        mult.transpose().mul(&gram).mul(&mult),
        gram,
        "multiplication by ξ preserves the pairing"
    );

    let q = darboux_factor(&gram).expect("the pairing is skew and unimodular");
    // gram = Qᵀ·Ω·Q means the columns of Q⁻¹ hold the dual-basis
    // coordinates of a lattice basis whose Gram matrix is exactly Ω;
    // conjugating expresses multiplication by ξ in that basis.
    let q_inverse = q
        .to_rational()
        .inverse()
        .expect("Darboux factors are unimodular");
    let a = q
        .mul(&mult)
        .to_rational()
        .mul(&q_inverse)
        .to_integer()
        .expect("multiplication by ξ is integral in any basis of the lattice");

    assert_eq!(
        a.char_poly(),
        cyclotomic(k),
        "the realized block has cyclotomic characteristic polynomial"
    );
    let form = SymplecticForm::paired(euler_phi(k) as usize / 2);
    assert!(
        is_symplectic(&a, &form),
        "the realized block preserves the standard form"
    );

    symplectic_cache().lock().unwrap().insert(k, a.clone());
    a
}

/// Whether aᵀ·Ω·a = Ω for the given form. The matrix must already have the
/// form's size; mixing sizes is a caller bug, not a mathematical "no".
pub fn is_symplectic(a: &IntMatrix, form: &SymplecticForm) -> bool {
    assert!(
        a.is_square() && a.rows() == form.size(),
        "matrix size {}×{} does not match a genus-{} form",
        a.rows(),
        a.cols(),
        form.genus()
    );
    let omega = form.matrix();
    a.transpose().mul(&omega).mul(a) == omega
}

/// Block-diagonal integer symplectic matrix realizing the spectrum on a
/// surface of its genus: r₁/2 blocks of I₂, r₂/2 blocks of −I₂, and r_k
/// cyclotomic blocks for each k ≥ 3, in increasing order of k. The form is
/// the paired standard form of the spectrum's genus.
pub fn realize_spectrum(spectrum: &RootSpectrum) -> Result<(IntMatrix, SymplecticForm), Error> {
    let violations = spectrum.violations();
    if !violations.is_empty() {
        return Err(Error::NotRealizable(violations));
    }
    let mut blocks = Vec::new();
    for (k, r) in spectrum.iter() {
        let copies = u64::try_from(r).expect("realizable multiplicities are nonnegative");
        match k {
            1 => blocks.extend((0..copies / 2).map(|_| IntMatrix::identity(2))),
            2 => blocks.extend((0..copies / 2).map(|_| IntMatrix::identity(2).neg())),
            _ => {
                let block = cyclotomic_symplectic(k);
                blocks.extend((0..copies).map(|_| block.clone()));
            }
        }
    }
    let a = block_diag(&blocks);
    let form = SymplecticForm::paired(spectrum.genus() as usize);
    assert_eq!(
        a.rows(),
        form.size(),
        "block sizes add up to twice the genus"
    );
    debug_assert!(is_symplectic(&a, &form));
    Ok((a, form))
}

/// Outcome of checking a claimed realization against its spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    /// aᵀ·Ω·a = Ω held.
    pub symplectic: bool,
    /// char(a) = ∏_k Φ_k^{r_k} held.
    pub char_poly_matches: bool,
    /// 2 − tr(aⁿ) matched the spectrum's Lefschetz numbers for every n up
    /// to the horizon.
    pub lefschetz_matches: bool,
    /// lcm of the spectrum's orders: trace checks ran for n = 1, …, horizon,
    /// one full period of the Lefschetz sequence.
    pub horizon: u64,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.symplectic && self.char_poly_matches && self.lefschetz_matches
    }
}

/// Independently re-check that `a` realizes `spectrum`: symplecticity,
/// characteristic polynomial, and trace-derived Lefschetz numbers over one
/// full period (capped at `horizon_cap`; exceeding it is an error, not a
/// silent truncation).
pub fn verify_realization(
    a: &IntMatrix,
    form: &SymplecticForm,
    spectrum: &RootSpectrum,
    horizon_cap: u64,
) -> Result<VerificationReport, Error> {
    let violations = spectrum.violations();
    if !violations.is_empty() {
        return Err(Error::NotRealizable(violations));
    }
    let view = LefschetzView::new(spectrum.clone(), horizon_cap)?;
    let horizon = view.period();

    let symplectic = is_symplectic(a, form);

    let mut expected = IntPolynomial::one();
    for (k, r) in spectrum.iter() {
        let copies = u64::try_from(r).expect("realizable multiplicities are nonnegative");
        expected = expected.mul(&cyclotomic(k).pow(copies));
    }
    let char_poly_matches = a.char_poly() == expected;

    let mut lefschetz_matches = true;
    let mut power = IntMatrix::identity(a.rows());
    for n in 1..=horizon {
        power = power.mul(a);
        if BigInt::from(2) - power.trace() != view.evaluate(n) {
            lefschetz_matches = false;
            break;
        }
    }

    Ok(VerificationReport {
        symplectic,
        char_poly_matches,
        lefschetz_matches,
        horizon,
    })
}
