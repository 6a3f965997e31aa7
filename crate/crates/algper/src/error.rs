use num_bigint::BigInt;

use crate::dold::RealizabilityViolation;

/// Semantic failures surfaced to callers. Domain violations that can only be
/// produced by a bug (index 0, non-exact internal division, a construction
/// assertion) panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The spectrum fails the realizability criterion; every violated
    /// condition is listed.
    #[error("spectrum is not realizable: {}", format_violations(.0))]
    NotRealizable(Vec<RealizabilityViolation>),

    /// lcm of the support exceeds the configured verification horizon.
    #[error("support lcm exceeds the horizon cap {cap}")]
    HorizonExceeded { cap: u64 },

    /// Genus queries need at least one prescribed period.
    #[error("period set must be nonempty")]
    EmptyPeriodSet,

    /// Odd-period genus queries only accept odd periods.
    #[error("odd-period query given even period {0}")]
    EvenPeriod(u64),

    /// Darboux reduction requires a skew-symmetric input.
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    /// Darboux reduction over the integers requires determinant ±1.
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(BigInt),

    /// A sink failed mid-export; `records_written` records were already out.
    #[error("write failed after {records_written} records: {source}")]
    Io {
        records_written: u64,
        #[source]
        source: std::io::Error,
    },
}

fn format_violations(violations: &[RealizabilityViolation]) -> String {
    violations
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
