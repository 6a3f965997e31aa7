//! Dold coefficient sequences, root-of-unity spectra, and the exact
//! bijection between them.
//!
//! A [`DoldSequence`] is a finitely supported integer sequence `(a_n)`; its
//! periodic expansion `ψ(n) = Σ_{d|n} d·a_d` is the associated sequence of
//! Lefschetz numbers of iterates. A [`RootSpectrum`] records, for each k ≥ 1,
//! how many eigenvalues of the induced map on first homology are primitive
//! k-th roots of unity. The two determine each other:
//!
//! - spectrum → sequence: `a_1 = 2 − Σ_k μ(k) r_k`, `a_n = −Σ_{n|k} μ(k/n) r_k`;
//! - sequence → spectrum: `r_1 = 2 − Σ_n a_n`, `r_k = −Σ_{k|m} a_m` for k ≥ 2.
//!
//! Both maps are Möbius inversions of each other and are mutually inverse on
//! all finitely supported integer data, including formal (negative) values.
//! A sequence arises from an orientation-preserving homeomorphism of a
//! closed orientable surface exactly when its spectrum is non-negative with
//! `r_1` and `r_2` even, and then the genus is `Σ_k r_k φ(k) / 2`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::numtheory::{divisors, euler_phi, lcm_capped, mobius, ramanujan_sum};
use crate::Error;

/// Finitely supported integer sequence indexed from 1, stored sparsely.
/// Stored values are never zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DoldSequence {
    entries: BTreeMap<u64, BigInt>,
}

/// Multiplicity function k ↦ r_k of primitive k-th roots of unity, stored
/// sparsely. Stored values are never zero; negative values are allowed so
/// formal spectra can be inspected for realizability.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RootSpectrum {
    multiplicities: BTreeMap<u64, BigInt>,
}

/// A finite set of periods (support of a sequence, or a query set).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct APSet {
    elements: BTreeSet<u64>,
}

/// One way a spectrum can fail to come from a surface homeomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizabilityViolation {
    /// Multiplicities count eigenvalues, so they must be non-negative.
    NegativeMultiplicity { degree: u64, multiplicity: BigInt },
    /// Eigenvalues ±1 pair up under the symplectic form, so r_1 and r_2
    /// must be even.
    OddRealMultiplicity { degree: u64, multiplicity: BigInt },
}

impl std::fmt::Display for RealizabilityViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RealizabilityViolation::NegativeMultiplicity {
                degree,
                multiplicity,
            } => {
                write!(f, "r_{degree} = {multiplicity} is negative")
            }
            RealizabilityViolation::OddRealMultiplicity {
                degree,
                multiplicity,
            } => {
                write!(f, "r_{degree} = {multiplicity} must be even")
            }
        }
    }
}

impl DoldSequence {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from (index, value) pairs; duplicate indices accumulate and
    /// zero totals are dropped. Indices must be ≥ 1.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, BigInt)>) -> Self {
        let mut entries: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (n, v) in pairs {
            assert!(n >= 1, "sequence indices start at 1");
            *entries.entry(n).or_insert_with(BigInt::zero) += v;
        }
        entries.retain(|_, v| !v.is_zero());
        DoldSequence { entries }
    }

    /// Builds from a dense prefix (a_1, a_2, …).
    pub fn from_dense<T: Into<BigInt>>(values: impl IntoIterator<Item = T>) -> Self {
        Self::from_pairs(
            values
                .into_iter()
                .enumerate()
                .map(|(i, v)| (i as u64 + 1, v.into())),
        )
    }

    pub fn get(&self, n: u64) -> BigInt {
        self.entries.get(&n).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.entries.iter().map(|(&n, v)| (n, v))
    }

    /// Support indices, ascending.
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.entries.keys().copied()
    }

    pub fn max_support(&self) -> Option<u64> {
        self.entries.keys().next_back().copied()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Periodic expansion ψ(n) = Σ_{d|n} d·a_d — the Lefschetz number of the
    /// n-th iterate for the realized map.
    pub fn evaluate(&self, n: u64) -> BigInt {
        assert!(n >= 1, "evaluation index starts at 1");
        let mut acc = BigInt::zero();
        for d in divisors(n) {
            if let Some(a) = self.entries.get(&d) {
                acc += a * BigInt::from(d);
            }
        }
        acc
    }

    /// The spectrum whose coefficient sequence this is: r_1 = 2 − Σ a_m and
    /// r_k = −Σ_{k|m} a_m. Inverse of [`RootSpectrum::to_dold`].
    pub fn to_spectrum(&self) -> RootSpectrum {
        let mut mult: BTreeMap<u64, BigInt> = BTreeMap::new();
        mult.insert(1, BigInt::from(2));
        for (&m, a) in &self.entries {
            for k in divisors(m) {
                *mult.entry(k).or_insert_with(BigInt::zero) -= a;
            }
        }
        mult.retain(|_, v| !v.is_zero());
        RootSpectrum {
            multiplicities: mult,
        }
    }

    /// Realizability violations of the associated spectrum; empty means some
    /// orientation-preserving surface homeomorphism has exactly these
    /// coefficients.
    pub fn violations(&self) -> Vec<RealizabilityViolation> {
        self.to_spectrum().violations()
    }

    pub fn is_realizable(&self) -> bool {
        self.violations().is_empty()
    }

    /// The support, optionally restricted to odd indices. Odd support
    /// elements are genuine minimal periods of every transversal map in the
    /// homotopy class; even ones only force period n or n/2.
    pub fn algebraic_periods(&self, odd_only: bool) -> APSet {
        APSet {
            elements: self
                .entries
                .keys()
                .copied()
                .filter(|n| !odd_only || n % 2 == 1)
                .collect(),
        }
    }

    /// Per-period lower bounds on periodic point counts: |P_n| ≥ |a_n| for
    /// odd n, |P_n ∪ P_{n/2}| ≥ |a_n| for even n.
    pub fn periodic_point_bounds(&self) -> PeriodBoundReport {
        PeriodBoundReport {
            bounds: self
                .entries
                .iter()
                .map(|(&n, a)| PeriodBound {
                    period: n,
                    kind: if n % 2 == 1 {
                        PeriodBoundKind::OddExact
                    } else {
                        PeriodBoundKind::EvenPair
                    },
                    bound: a.abs(),
                })
                .collect(),
        }
    }
}

impl RootSpectrum {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from (degree, multiplicity) pairs; duplicate degrees accumulate
    /// and zero totals are dropped. Degrees must be ≥ 1.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, BigInt)>) -> Self {
        let mut mult: BTreeMap<u64, BigInt> = BTreeMap::new();
        for (k, r) in pairs {
            assert!(k >= 1, "root orders start at 1");
            *mult.entry(k).or_insert_with(BigInt::zero) += r;
        }
        mult.retain(|_, v| !v.is_zero());
        RootSpectrum {
            multiplicities: mult,
        }
    }

    /// Builds from a multiset of orders, e.g. `[1, 1, 6]` for r_1 = 2, r_6 = 1.
    pub fn from_multiset(orders: &[u64]) -> Self {
        Self::from_pairs(orders.iter().map(|&k| (k, BigInt::from(1))))
    }

    pub fn get(&self, k: u64) -> BigInt {
        self.multiplicities
            .get(&k)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.multiplicities.iter().map(|(&k, r)| (k, r))
    }

    /// Orders with nonzero multiplicity, ascending.
    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.multiplicities.keys().copied()
    }

    pub fn max_order(&self) -> Option<u64> {
        self.multiplicities.keys().next_back().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    /// The coefficient sequence of this spectrum: a_1 = 2 − Σ_k μ(k) r_k and
    /// a_n = −Σ_{n|k} μ(k/n) r_k. Inverse of [`DoldSequence::to_spectrum`].
    pub fn to_dold(&self) -> DoldSequence {
        let mut entries: BTreeMap<u64, BigInt> = BTreeMap::new();
        entries.insert(1, BigInt::from(2));
        for (&k, r) in &self.multiplicities {
            for n in divisors(k) {
                let mu = mobius(k / n);
                if mu != 0 {
                    *entries.entry(n).or_insert_with(BigInt::zero) -= BigInt::from(mu) * r;
                }
            }
        }
        entries.retain(|_, v| !v.is_zero());
        DoldSequence { entries }
    }

    /// Violations of the realizability criterion: every r_k ≥ 0 and r_1, r_2
    /// even. Reported in ascending order of degree.
    pub fn violations(&self) -> Vec<RealizabilityViolation> {
        let mut out = Vec::new();
        for (&k, r) in &self.multiplicities {
            if r.is_negative() {
                out.push(RealizabilityViolation::NegativeMultiplicity {
                    degree: k,
                    multiplicity: r.clone(),
                });
            } else if k <= 2 && r.is_odd() {
                out.push(RealizabilityViolation::OddRealMultiplicity {
                    degree: k,
                    multiplicity: r.clone(),
                });
            }
        }
        out
    }

    pub fn is_realizable(&self) -> bool {
        self.violations().is_empty()
    }

    /// Total eigenvalue count Σ_k r_k φ(k) = rank of first homology = 2g.
    /// Defined for formal spectra too, so it can go negative.
    pub fn total_weight(&self) -> BigInt {
        self.multiplicities
            .iter()
            .map(|(&k, r)| r * BigInt::from(euler_phi(k)))
            .sum()
    }

    /// Genus of the carrying surface, total_weight / 2. Panics unless the
    /// multiplicities are non-negative with even total — the domain where a
    /// carrying surface exists.
    pub fn genus(&self) -> u64 {
        assert!(
            self.multiplicities.values().all(|r| !r.is_negative()),
            "genus of a spectrum with negative multiplicities"
        );
        let total = self.total_weight();
        assert!(total.is_even(), "genus of a spectrum with odd total weight");
        u64::try_from(total / 2).expect("genus exceeds u64")
    }

    /// Lefschetz number of the n-th iterate: 2 − Σ_k r_k c_k(n), with c_k
    /// the Ramanujan sum. Agrees with the periodic expansion of
    /// [`Self::to_dold`].
    pub fn lefschetz(&self, n: u64) -> BigInt {
        assert!(n >= 1, "iterate index starts at 1");
        let mut acc = BigInt::from(2);
        for (&k, r) in &self.multiplicities {
            acc -= r * BigInt::from(ramanujan_sum(k, n));
        }
        acc
    }
}

impl APSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, n: u64) -> bool {
        self.elements.contains(&n)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.elements.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min(&self) -> Option<u64> {
        self.elements.first().copied()
    }

    pub fn max(&self) -> Option<u64> {
        self.elements.last().copied()
    }

    pub fn all_odd(&self) -> bool {
        self.elements.iter().all(|n| n % 2 == 1)
    }
}

impl FromIterator<u64> for APSet {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let elements: BTreeSet<u64> = iter.into_iter().collect();
        assert!(
            !elements.contains(&0),
            "period sets contain positive integers"
        );
        APSet { elements }
    }
}

/// A spectrum together with the period of its Lefschetz sequence
/// (the lcm of the support). Evaluation satisfies
/// `evaluate(n) = evaluate(n + period())` for all n ≥ 1.
#[derive(Clone)]
pub struct LefschetzView {
    spectrum: RootSpectrum,
    period: u64,
}

impl LefschetzView {
    /// Fails with [`Error::HorizonExceeded`] if the support lcm exceeds `cap`.
    pub fn new(spectrum: RootSpectrum, cap: u64) -> Result<Self, Error> {
        let period = lcm_capped(spectrum.support(), cap).ok_or(Error::HorizonExceeded { cap })?;
        Ok(LefschetzView { spectrum, period })
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn spectrum(&self) -> &RootSpectrum {
        &self.spectrum
    }

    pub fn evaluate(&self, n: u64) -> BigInt {
        self.spectrum.lefschetz(n)
    }

    /// One full period of values, ψ(1) … ψ(period).
    pub fn values(&self) -> Vec<BigInt> {
        (1..=self.period).map(|n| self.evaluate(n)).collect()
    }
}

/// Which flavor of lower bound a support element contributes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PeriodBoundKind {
    /// Odd period: at least `bound` points of minimal period exactly n.
    OddExact,
    /// Even period: at least `bound` points of minimal period n or n/2.
    EvenPair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodBound {
    pub period: u64,
    pub kind: PeriodBoundKind,
    pub bound: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PeriodBoundReport {
    bounds: Vec<PeriodBound>,
}

impl PeriodBoundReport {
    /// Records in ascending period order.
    pub fn iter(&self) -> impl Iterator<Item = &PeriodBound> {
        self.bounds.iter()
    }

    pub fn len(&self) -> usize {
        self.bounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_empty()
    }
}

/// Recovers rational coefficients from a value prefix ψ(1), …, ψ(N):
/// a_n = (1/n) Σ_{d|n} μ(n/d) ψ(d). Integrality of all entries is exactly
/// the Dold congruence system for the prefix.
pub fn dold_coefficients(values: &[BigInt]) -> Vec<BigRational> {
    (1..=values.len() as u64)
        .map(|n| {
            let mut acc = BigInt::zero();
            for d in divisors(n) {
                let mu = mobius(n / d);
                if mu != 0 {
                    acc += BigInt::from(mu) * &values[(d - 1) as usize];
                }
            }
            BigRational::new(acc, BigInt::from(n))
        })
        .collect()
}

/// Whether the prefix satisfies every Dold congruence
/// Σ_{d|n} μ(n/d) ψ(d) ≡ 0 (mod n), n ≤ len.
pub fn check_dold_congruences(values: &[BigInt]) -> bool {
    dold_coefficients(values).iter().all(|a| a.is_integer())
}

impl std::fmt::Display for APSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

impl std::fmt::Debug for APSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "APSet{self}")
    }
}

impl DoldSequence {
    /// Dense rendering `(a_1,…,a_K)` up to the last support point.
    pub fn dense_string(&self) -> String {
        let k = self.max_support().unwrap_or(0);
        let mut out = String::from("(");
        for n in 1..=k {
            if n > 1 {
                out.push(',');
            }
            out.push_str(&self.get(n).to_string());
        }
        out.push(')');
        out
    }

    /// Sparse rendering `n:a_n` comma-joined, ascending.
    pub fn sparse_string(&self) -> String {
        self.entries
            .iter()
            .map(|(n, a)| format!("{n}:{a}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for DoldSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        // Dense is the readable form for the sizes humans look at; fall back
        // to sparse once density would bury the signal.
        if self.max_support().unwrap_or(0) <= 128 {
            write!(f, "{}", self.dense_string())
        } else {
            write!(f, "{}", self.sparse_string())
        }
    }
}

impl std::fmt::Debug for DoldSequence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "DoldSequence[{}]", self.sparse_string())
    }
}

impl RootSpectrum {
    /// Multiset rendering `{1,1,6}` (order k repeated r_k times), available
    /// when all multiplicities are non-negative and the element count stays
    /// printable.
    pub fn multiset_string(&self) -> Option<String> {
        let mut total: u64 = 0;
        for r in self.multiplicities.values() {
            if r.is_negative() {
                return None;
            }
            total += u64::try_from(r).ok()?;
            if total > 10_000 {
                return None;
            }
        }
        let mut out = String::from("{");
        let mut first = true;
        for (&k, r) in &self.multiplicities {
            let copies = u64::try_from(r).ok()?;
            for _ in 0..copies {
                if !first {
                    out.push(',');
                }
                out.push_str(&k.to_string());
                first = false;
            }
        }
        out.push('}');
        Some(out)
    }

    /// Sparse rendering `k:r_k` comma-joined, ascending.
    pub fn pairs_string(&self) -> String {
        self.multiplicities
            .iter()
            .map(|(k, r)| format!("{k}:{r}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl std::fmt::Display for RootSpectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.multiset_string() {
            Some(s) => write!(f, "{s}"),
            None => write!(f, "{}", self.pairs_string()),
        }
    }
}

impl std::fmt::Debug for RootSpectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RootSpectrum[{}]", self.pairs_string())
    }
}

// BigInt lacks is_even/is_odd inherent methods with the traits we import
// elsewhere; a tiny extension keeps call sites readable.
trait ParityExt {
    fn is_even(&self) -> bool;
    fn is_odd(&self) -> bool {
        !self.is_even()
    }
}

impl ParityExt for BigInt {
    fn is_even(&self) -> bool {
        use num_integer::Integer;
        Integer::is_even(self)
    }
}
