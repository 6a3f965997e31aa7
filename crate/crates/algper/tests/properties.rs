//! Randomized properties of the coefficient/spectrum bijection and a full
//! sweep of the cyclotomic symplectic blocks through order 30.
//!
//! The deterministic data fixtures live in the acceptance suite; here the
//! same identities are exercised on arbitrary inputs: round trips, the
//! divisor-weighted sum identity, the genus formula, integrality of
//! recovered coefficients, support pruning, and the non-positive family
//! that is always realizable.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use algper::dold::{check_dold_congruences, DoldSequence, RootSpectrum};
use algper::numtheory::{cyclotomic, divisors, euler_phi, lcm_capped};
use algper::symplectic::{cyclotomic_symplectic, is_symplectic, IntMatrix, SymplecticForm};

/// Sparse integer sequences with support in [1,30] and entries in [−5,5].
fn sparse_entries() -> impl Strategy<Value = BTreeMap<u64, i64>> {
    prop::collection::btree_map(
        1..=30u64,
        (-5..=5i64).prop_filter("support entries are nonzero", |v| *v != 0),
        0..=8,
    )
}

fn dold_from(entries: &BTreeMap<u64, i64>) -> DoldSequence {
    DoldSequence::from_pairs(entries.iter().map(|(&n, &a)| (n, BigInt::from(a))))
}

fn spectrum_from(entries: &BTreeMap<u64, i64>) -> RootSpectrum {
    RootSpectrum::from_pairs(entries.iter().map(|(&k, &r)| (k, BigInt::from(r))))
}

/// Realizable spectra whose support divides 360, keeping the Lefschetz
/// period small enough to scan completely.
fn realizable_spectra() -> impl Strategy<Value = RootSpectrum> {
    const SMOOTH_ORDERS: [u64; 13] = [3, 4, 5, 6, 8, 9, 10, 12, 15, 18, 20, 24, 30];
    (
        0..=2u64,
        0..=2u64,
        prop::collection::btree_map(prop::sample::select(&SMOOTH_ORDERS[..]), 1..=2u64, 0..=3),
    )
        .prop_map(|(half_r1, half_r2, rest)| {
            let mut pairs = vec![
                (1u64, BigInt::from(2 * half_r1)),
                (2, BigInt::from(2 * half_r2)),
            ];
            pairs.extend(rest.into_iter().map(|(k, r)| (k, BigInt::from(r))));
            RootSpectrum::from_pairs(pairs)
        })
}

/// Sequences with no positive entry whose total sum and even-indexed sum
/// are both even.
fn nonpositive_even_sequences() -> impl Strategy<Value = DoldSequence> {
    prop::collection::btree_map(1..=30u64, -5..=0i64, 0..=8).prop_map(|mut entries| {
        let even_sum: i64 = entries
            .iter()
            .filter(|(n, _)| *n % 2 == 0)
            .map(|(_, a)| a)
            .sum();
        if even_sum % 2 != 0 {
            *entries.entry(2).or_insert(0) -= 1;
        }
        let total: i64 = entries.values().sum();
        if total % 2 != 0 {
            *entries.entry(1).or_insert(0) -= 1;
        }
        DoldSequence::from_pairs(entries.into_iter().map(|(n, a)| (n, BigInt::from(a))))
    })
}

proptest! {
    #[test]
    fn sequence_round_trip(entries in sparse_entries()) {
        let a = dold_from(&entries);
        prop_assert_eq!(a.to_spectrum().to_dold(), a);
    }

    #[test]
    fn spectrum_round_trip(entries in sparse_entries()) {
        let r = spectrum_from(&entries);
        prop_assert_eq!(r.to_dold().to_spectrum(), r);
    }

    /// Σ_k r_k φ(k) = 2 − Σ_n n·a_n holds for arbitrary integer spectra,
    /// realizable or not.
    #[test]
    fn weight_identity(entries in sparse_entries()) {
        let r = spectrum_from(&entries);
        let weight: BigInt = r.iter().map(|(k, m)| m * BigInt::from(euler_phi(k))).sum();
        let moment: BigInt = r.to_dold().iter().map(|(n, a)| a * BigInt::from(n)).sum();
        prop_assert_eq!(weight, BigInt::from(2) - moment);
    }

    /// The genus accessor agrees with the coefficient moment on realizable
    /// spectra.
    #[test]
    fn genus_matches_moment(r in realizable_spectra()) {
        let moment: BigInt = r.to_dold().iter().map(|(n, a)| a * BigInt::from(n)).sum();
        prop_assert_eq!(BigInt::from(2 * r.genus()), BigInt::from(2) - moment);
    }

    /// Σ_{d|n} d·a_d equals the evaluation 2 − Σ_k r_k c_k(n) at every n up
    /// to the period.
    #[test]
    fn divisor_sums_recover_evaluations(r in realizable_spectra()) {
        let a = r.to_dold();
        let period = lcm_capped(r.support(), 10_000).expect("orders divide 360");
        for n in 1..=period {
            let lhs: BigInt = divisors(n).into_iter().map(|d| a.get(d) * BigInt::from(d)).sum();
            prop_assert_eq!(lhs, r.lefschetz(n), "n = {}", n);
        }
    }

    /// Every generated evaluation sequence has integral coefficients over
    /// two full periods.
    #[test]
    fn evaluations_pass_congruences(r in realizable_spectra()) {
        let period = lcm_capped(r.support(), 10_000).expect("orders divide 360");
        let values: Vec<BigInt> = (1..=2 * period).map(|n| r.lefschetz(n)).collect();
        prop_assert!(check_dold_congruences(&values));
    }

    /// At the largest support element K ≥ 2 the coefficient is forced:
    /// a_K = −r_K.
    #[test]
    fn top_coefficient_is_negated_multiplicity(r in realizable_spectra()) {
        if let Some(top) = r.max_order() {
            prop_assume!(top >= 2);
            prop_assert_eq!(r.to_dold().get(top), -r.get(top));
        }
    }

    /// The spectrum of a sequence vanishes at every index that divides no
    /// support element (the pruning that keeps exact searches finite).
    #[test]
    fn spectrum_support_divides_sequence_support(entries in sparse_entries()) {
        let a = dold_from(&entries);
        let support: Vec<u64> = a.support().collect();
        let spectrum = a.to_spectrum();
        for (k, r) in spectrum.iter() {
            if !r.is_zero() && k != 1 {
                prop_assert!(
                    support.iter().any(|&m| m % k == 0),
                    "r_{} = {} but {} divides no support element",
                    k, r, k
                );
            }
        }
    }

    /// No positive entries plus even total and even-indexed sums make a
    /// sequence realizable outright.
    #[test]
    fn nonpositive_even_sequences_are_realizable(a in nonpositive_even_sequences()) {
        prop_assert!(a.is_realizable(), "{} should be realizable", a.sparse_string());
    }
}

/// Every order k ≤ 30 whose primitive-root count fits a genus-8 block (all
/// but 23, 25, 27, 29) yields an integer block preserving the pairing, with
/// the k-th cyclotomic polynomial as characteristic polynomial and
/// multiplicative order exactly k.
#[test]
fn cyclotomic_blocks_through_order_thirty() {
    for k in 3..=30u64 {
        let degree = euler_phi(k);
        if degree > 16 {
            continue;
        }
        let a = cyclotomic_symplectic(k);
        let form = SymplecticForm::paired(degree as usize / 2);
        assert!(is_symplectic(&a, &form), "k = {k}");
        assert_eq!(a.char_poly(), cyclotomic(k), "k = {k}");

        let identity = IntMatrix::identity(degree as usize);
        let mut power = a.clone();
        for n in 1..k {
            assert_ne!(power, identity, "block for k = {k} has order {n} < {k}");
            power = power.mul(&a);
        }
        assert_eq!(power, identity, "block for k = {k} has order {k}");
    }
}
