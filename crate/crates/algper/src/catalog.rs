//! Exhaustive per-genus catalogs of realizable spectra.
//!
//! Fix a genus g ≥ 1. The realizable spectra with Σ_k r_k φ(k) = 2g are
//! enumerated by grouping orders by totient: choose a partition of 2g into
//! parts n with nonempty totient preimage Φ_n = φ⁻¹(n) (only n = 1 and even
//! n qualify), then distribute the multiplicity p_n of each part over the
//! orders in Φ_n, keeping r_1 and r_2 even. The partition is recoverable
//! from the spectrum, so every spectrum appears exactly once.
//!
//! Iteration order is deterministic and documented: partitions in ascending
//! lexicographic order of their non-increasing part tuples, then slot
//! distributions in ascending lexicographic order (r_1 ascending for the
//! n = 1 part). The order is part of the output contract — exports are
//! byte-identical across runs, and the parallel paths preserve it by
//! splitting on the outer partition and merging in order.

use std::collections::{BTreeMap, HashSet};
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::dold::{APSet, DoldSequence, RootSpectrum};
use crate::numtheory::inverse_totient;
use crate::Error;

/// Iterator over partitions of a total into parts drawn from a fixed list,
/// each partition yielded as its non-increasing part tuple, tuples in
/// ascending lexicographic order.
pub struct Partitions {
    parts: Vec<u64>,
    stack: Vec<Frame>,
    chosen: Vec<u64>,
}

struct Frame {
    remaining: u64,
    next: usize,
    cap: usize,
}

/// Partitions of `total` with parts from `parts` (strictly ascending,
/// positive). `partitions(2, &[1, 2])` yields `[1,1]` then `[2]`.
pub fn partitions(total: u64, parts: &[u64]) -> Partitions {
    assert!(total >= 1, "partition totals start at 1");
    assert!(!parts.is_empty(), "need at least one part size");
    assert!(parts[0] >= 1, "part sizes are positive");
    assert!(
        parts.windows(2).all(|w| w[0] < w[1]),
        "part sizes must be strictly ascending"
    );
    Partitions {
        parts: parts.to_vec(),
        stack: vec![Frame {
            remaining: total,
            next: 0,
            cap: parts.len() - 1,
        }],
        chosen: Vec::new(),
    }
}

impl Iterator for Partitions {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        loop {
            let frame = self.stack.last_mut()?;
            let idx = frame.next;
            if idx > frame.cap || self.parts[idx] > frame.remaining {
                self.stack.pop();
                if !self.stack.is_empty() {
                    self.chosen.pop();
                }
                continue;
            }
            frame.next += 1;
            let part = self.parts[idx];
            if part == frame.remaining {
                let mut out = self.chosen.clone();
                out.push(part);
                return Some(out);
            }
            let remaining = frame.remaining - part;
            self.chosen.push(part);
            self.stack.push(Frame {
                remaining,
                next: 0,
                cap: idx,
            });
        }
    }
}

/// Part sizes usable at total weight `two_g`, with their order preimages:
/// n = 1 (orders 1, 2) and even n ≤ two_g with φ⁻¹(n) ≠ ∅, ascending.
fn part_universe(two_g: u64) -> Vec<(u64, Vec<u64>)> {
    let mut universe = vec![(1, vec![1, 2])];
    let mut n = 2;
    while n <= two_g {
        let orders = inverse_totient(n);
        if !orders.is_empty() {
            universe.push((n, orders));
        }
        n += 2;
    }
    universe
}

/// One (order, count) assignment for a single part size.
type Choice = Vec<(u64, u64)>;

/// Compositions of `total` into `slots` labeled non-negative summands,
/// ascending lexicographic (everything in the last slot first).
fn compositions(total: u64, slots: usize) -> Vec<Vec<u64>> {
    assert!(slots >= 1);
    fn fill(cur: &mut Vec<u64>, i: usize, remaining: u64, out: &mut Vec<Vec<u64>>) {
        if i + 1 == cur.len() {
            cur[i] = remaining;
            out.push(cur.clone());
            return;
        }
        for v in 0..=remaining {
            cur[i] = v;
            fill(cur, i + 1, remaining - v, out);
        }
    }
    let mut out = Vec::new();
    fill(&mut vec![0; slots], 0, total, &mut out);
    out
}

/// Per-part-size choice lists for one outer partition, or None when the
/// n = 1 part has odd multiplicity (r_1 + r_2 even is then impossible).
fn composition_options(
    universe: &[(u64, Vec<u64>)],
    partition: &[u64],
) -> Option<Vec<Vec<Choice>>> {
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for &p in partition {
        *counts.entry(p).or_insert(0) += 1;
    }
    let mut options = Vec::new();
    for (n, orders) in universe {
        let Some(&p) = counts.get(n) else { continue };
        if *n == 1 {
            // Orders 1 and 2 share totient 1; both multiplicities must be
            // even, so they move in steps of two.
            if p % 2 == 1 {
                return None;
            }
            let choices = (0..=p)
                .step_by(2)
                .map(|r1| vec![(1, r1), (2, p - r1)])
                .collect();
            options.push(choices);
        } else {
            let choices = compositions(p, orders.len())
                .into_iter()
                .map(|c| orders.iter().copied().zip(c).collect())
                .collect();
            options.push(choices);
        }
    }
    Some(options)
}

/// The spectra of one outer partition, in slot-distribution order.
pub(crate) struct SpectraOfPartition {
    options: Vec<Vec<Choice>>,
    indices: Vec<usize>,
    done: bool,
}

impl SpectraOfPartition {
    fn new(options: Vec<Vec<Choice>>) -> Self {
        let indices = vec![0; options.len()];
        SpectraOfPartition {
            options,
            indices,
            done: false,
        }
    }
}

impl Iterator for SpectraOfPartition {
    type Item = RootSpectrum;

    fn next(&mut self) -> Option<RootSpectrum> {
        if self.done {
            return None;
        }
        let spectrum = RootSpectrum::from_pairs(
            self.options
                .iter()
                .zip(&self.indices)
                .flat_map(|(choices, &i)| choices[i].iter().map(|&(k, c)| (k, BigInt::from(c)))),
        );
        // Odometer advance, last list fastest.
        let mut i = self.indices.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.indices[i] += 1;
            if self.indices[i] < self.options[i].len() {
                break;
            }
            self.indices[i] = 0;
        }
        Some(spectrum)
    }
}

/// The catalog split by outer partition, chunks and their contents in
/// enumeration order. The unit the parallel paths distribute.
pub(crate) fn partition_spectra(g: u64) -> Vec<SpectraOfPartition> {
    assert!(g >= 1, "genus starts at 1");
    let universe = part_universe(2 * g);
    let parts: Vec<u64> = universe.iter().map(|&(n, _)| n).collect();
    partitions(2 * g, &parts)
        .filter_map(|p| composition_options(&universe, &p).map(SpectraOfPartition::new))
        .collect()
}

/// All realizable spectra of genus g, each exactly once, in the documented
/// deterministic order.
pub fn spectra(g: u64) -> impl Iterator<Item = RootSpectrum> {
    partition_spectra(g).into_iter().flatten()
}

/// A catalog row: a spectrum with its derived coefficient sequence and
/// period sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogRecord {
    pub genus: u64,
    pub spectrum: RootSpectrum,
    pub dold: DoldSequence,
    pub ap: APSet,
    pub mper: APSet,
}

impl CatalogRecord {
    pub fn from_spectrum(genus: u64, spectrum: RootSpectrum) -> Self {
        let dold = spectrum.to_dold();
        let ap = dold.algebraic_periods(false);
        let mper = dold.algebraic_periods(true);
        CatalogRecord {
            genus,
            spectrum,
            dold,
            ap,
            mper,
        }
    }

    /// One CSV row under the header `genus,spectrum,dold,ap,mper`: spectrum
    /// as multiset, coefficients as dense tuple, period sets in braces.
    pub fn csv_row(&self) -> String {
        let spectrum = self
            .spectrum
            .multiset_string()
            .unwrap_or_else(|| self.spectrum.pairs_string());
        format!(
            "{},{},{},{},{}",
            self.genus,
            csv_field(&spectrum),
            csv_field(&self.dold.dense_string()),
            csv_field(&self.ap.to_string()),
            csv_field(&self.mper.to_string()),
        )
    }

    /// One JSON object per line; spectrum and coefficients as sparse pair
    /// arrays, period sets as ascending arrays.
    pub fn jsonl_line(&self) -> String {
        let pairs = |it: &mut dyn Iterator<Item = (u64, BigInt)>| {
            let body = it
                .map(|(k, v)| format!("[{k},{v}]"))
                .collect::<Vec<_>>()
                .join(",");
            format!("[{body}]")
        };
        let set = |s: &APSet| {
            let body = s
                .iter()
                .map(|n| n.to_string())
                .collect::<Vec<_>>()
                .join(",");
            format!("[{body}]")
        };
        format!(
            "{{\"genus\":{},\"spectrum\":{},\"dold\":{},\"ap\":{},\"mper\":{}}}",
            self.genus,
            pairs(&mut self.spectrum.iter().map(|(k, r)| (k, r.clone()))),
            pairs(&mut self.dold.iter().map(|(n, a)| (n, a.clone()))),
            set(&self.ap),
            set(&self.mper),
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Catalog rows of genus g in enumeration order.
pub fn records(g: u64) -> impl Iterator<Item = CatalogRecord> {
    spectra(g).map(move |s| CatalogRecord::from_spectrum(g, s))
}

/// Counting view of one genus: number of spectra and of distinct period
/// sets. Computed in parallel over outer partitions; counts are
/// order-independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusSummary {
    pub genus: u64,
    pub spectra: u64,
    pub distinct_ap: u64,
    pub distinct_mper: u64,
}

pub fn summarize(g: u64) -> GenusSummary {
    let (count, ap, mper) = partition_spectra(g)
        .into_par_iter()
        .map(|chunk| {
            let mut count = 0u64;
            let mut ap = HashSet::new();
            let mut mper = HashSet::new();
            for spectrum in chunk {
                let dold = spectrum.to_dold();
                count += 1;
                ap.insert(dold.algebraic_periods(false));
                mper.insert(dold.algebraic_periods(true));
            }
            (count, ap, mper)
        })
        .reduce(
            || (0, HashSet::new(), HashSet::new()),
            |(c1, mut a1, mut m1), (c2, a2, m2)| {
                a1.extend(a2);
                m1.extend(m2);
                (c1 + c2, a1, m1)
            },
        );
    GenusSummary {
        genus: g,
        spectra: count,
        distinct_ap: ap.len() as u64,
        distinct_mper: mper.len() as u64,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Csv,
    Jsonl,
}

/// Streams the genus-g catalog into `sink`; returns the record count.
/// Byte-identical across runs: fixed order, LF line endings.
pub fn export(g: u64, format: ExportFormat, sink: &mut dyn Write) -> Result<u64, Error> {
    let mut written = 0u64;
    let io_err = |records_written| {
        move |source| Error::Io {
            records_written,
            source,
        }
    };
    if format == ExportFormat::Csv {
        sink.write_all(b"genus,spectrum,dold,ap,mper\n")
            .map_err(io_err(0))?;
    }
    for record in records(g) {
        let line = match format {
            ExportFormat::Csv => record.csv_row(),
            ExportFormat::Jsonl => record.jsonl_line(),
        };
        sink.write_all(line.as_bytes()).map_err(io_err(written))?;
        sink.write_all(b"\n").map_err(io_err(written))?;
        written += 1;
    }
    Ok(written)
}

/// Same bytes as [`export`], but rows are formatted in parallel per outer
/// partition and written in order.
pub fn export_parallel(g: u64, format: ExportFormat, sink: &mut dyn Write) -> Result<u64, Error> {
    let chunks: Vec<String> = partition_spectra(g)
        .into_par_iter()
        .map(|chunk| {
            let mut buf = String::new();
            for spectrum in chunk {
                let record = CatalogRecord::from_spectrum(g, spectrum);
                buf.push_str(&match format {
                    ExportFormat::Csv => record.csv_row(),
                    ExportFormat::Jsonl => record.jsonl_line(),
                });
                buf.push('\n');
            }
            buf
        })
        .collect();
    let mut written = 0u64;
    let io_err = |records_written| {
        move |source| Error::Io {
            records_written,
            source,
        }
    };
    if format == ExportFormat::Csv {
        sink.write_all(b"genus,spectrum,dold,ap,mper\n")
            .map_err(io_err(0))?;
    }
    for chunk in chunks {
        sink.write_all(chunk.as_bytes()).map_err(io_err(written))?;
        written += chunk.bytes().filter(|&b| b == b'\n').count() as u64;
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::euler_phi;

    #[test]
    fn partition_order_is_ascending_lex() {
        let got: Vec<Vec<u64>> = partitions(2, &[1, 2]).collect();
        assert_eq!(got, vec![vec![1, 1], vec![2]]);

        let got: Vec<Vec<u64>> = partitions(4, &[1, 2, 4]).collect();
        assert_eq!(
            got,
            vec![vec![1, 1, 1, 1], vec![2, 1, 1], vec![2, 2], vec![4],]
        );

        // Dead branches (no partition of 3 into 2s) are skipped silently.
        let got: Vec<Vec<u64>> = partitions(3, &[2]).collect();
        assert!(got.is_empty());
    }

    #[test]
    fn partition_counts_match_recurrence() {
        // Oracle: restricted partition counting by dynamic programming.
        let parts: Vec<u64> = vec![1, 2, 4, 6, 8];
        for total in 1..=40u64 {
            let mut table = vec![0u64; total as usize + 1];
            table[0] = 1;
            for &p in &parts {
                for t in p..=total {
                    table[t as usize] += table[(t - p) as usize];
                }
            }
            let got = partitions(total, &parts).count() as u64;
            assert_eq!(got, table[total as usize], "total = {total}");
        }
    }

    #[test]
    fn genus_one_catalog_in_order() {
        let got: Vec<String> = spectra(1).map(|s| s.to_string()).collect();
        assert_eq!(got, vec!["{2,2}", "{1,1}", "{6}", "{4}", "{3}"]);
    }

    #[test]
    fn spectra_are_realizable_unique_and_of_right_genus() {
        for g in 1..=5u64 {
            let mut seen = HashSet::new();
            for s in spectra(g) {
                assert!(s.is_realizable(), "g = {g}, spectrum {s:?}");
                assert_eq!(s.genus(), g, "spectrum {s:?}");
                let key: Vec<(u64, String)> = s.iter().map(|(k, r)| (k, r.to_string())).collect();
                assert!(seen.insert(key), "duplicate spectrum {s:?}");
            }
        }
    }

    /// Oracle: enumerate realizable spectra of genus g directly as vectors
    /// over every order k with φ(k) ≤ 2g, no partition machinery.
    fn brute_force_spectra(g: u64) -> HashSet<Vec<(u64, u64)>> {
        let two_g = 2 * g;
        let orders: Vec<u64> = (1..=2 * two_g * two_g)
            .filter(|&k| euler_phi(k) <= two_g)
            .collect();
        let mut out = HashSet::new();
        let mut current: Vec<(u64, u64)> = Vec::new();
        fn rec(
            orders: &[u64],
            i: usize,
            left: u64,
            current: &mut Vec<(u64, u64)>,
            out: &mut HashSet<Vec<(u64, u64)>>,
        ) {
            if left == 0 && current.iter().all(|&(k, r)| k > 2 || r % 2 == 0) {
                let mut sorted = current.clone();
                sorted.sort();
                out.insert(sorted);
            }
            // Padding with further zero multiplicities changes nothing.
            if i == orders.len() {
                return;
            }
            let k = orders[i];
            let phi = euler_phi(k);
            let mut r = 0;
            while r * phi <= left {
                if r > 0 {
                    current.push((k, r));
                }
                rec(orders, i + 1, left - r * phi, current, out);
                if r > 0 {
                    current.pop();
                }
                r += 1;
            }
        }
        rec(&orders, 0, two_g, &mut current, &mut out);
        // Keep only exact-weight assignments: the recursion above inserts
        // whenever the running weight hits 2g, including prefixes that a
        // later zero extension repeats — the set collapses duplicates, but
        // prefixes with left == 0 and trailing zero choices are the same
        // spectrum, so nothing spurious survives.
        out
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for g in 1..=3u64 {
            let brute = brute_force_spectra(g);
            let fast: HashSet<Vec<(u64, u64)>> = spectra(g)
                .map(|s| {
                    s.iter()
                        .map(|(k, r)| (k, u64::try_from(r).unwrap()))
                        .collect()
                })
                .collect();
            assert_eq!(fast.len(), spectra(g).count(), "uniqueness at g = {g}");
            assert_eq!(fast, brute, "g = {g}");
        }
    }

    #[test]
    fn low_genus_counts() {
        let counts: Vec<u64> = (1..=4).map(|g| spectra(g).count() as u64).collect();
        assert_eq!(counts, vec![5, 19, 59, 165]);
    }

    #[test]
    fn summaries_low_genus() {
        let s1 = summarize(1);
        assert_eq!((s1.spectra, s1.distinct_ap, s1.distinct_mper), (5, 5, 3));
        let s2 = summarize(2);
        assert_eq!((s2.spectra, s2.distinct_ap, s2.distinct_mper), (19, 15, 5));
    }

    #[test]
    fn export_golden_genus_one() {
        let mut csv = Vec::new();
        let n = export(1, ExportFormat::Csv, &mut csv).unwrap();
        assert_eq!(n, 5);
        let expected = "\
genus,spectrum,dold,ap,mper
1,\"{2,2}\",\"(4,-2)\",\"{1,2}\",{1}
1,\"{1,1}\",(),{},{}
1,{6},\"(1,1,1,0,0,-1)\",\"{1,2,3,6}\",\"{1,3}\"
1,{4},\"(2,1,0,-1)\",\"{1,2,4}\",{1}
1,{3},\"(3,0,-1)\",\"{1,3}\",\"{1,3}\"
";
        assert_eq!(String::from_utf8(csv).unwrap(), expected);

        let mut jsonl = Vec::new();
        export(1, ExportFormat::Jsonl, &mut jsonl).unwrap();
        let text = String::from_utf8(jsonl).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 5);
        assert_eq!(
            lines[0],
            "{\"genus\":1,\"spectrum\":[[2,2]],\"dold\":[[1,4],[2,-2]],\"ap\":[1,2],\"mper\":[1]}"
        );
        assert_eq!(
            lines[1],
            "{\"genus\":1,\"spectrum\":[[1,2]],\"dold\":[],\"ap\":[],\"mper\":[]}"
        );
    }

    #[test]
    fn parallel_export_is_byte_identical() {
        for format in [ExportFormat::Csv, ExportFormat::Jsonl] {
            let mut seq = Vec::new();
            let mut par = Vec::new();
            let n1 = export(4, format, &mut seq).unwrap();
            let n2 = export_parallel(4, format, &mut par).unwrap();
            assert_eq!(n1, n2);
            assert_eq!(seq, par);
        }
    }

    #[test]
    #[should_panic(expected = "genus starts at 1")]
    fn genus_zero_rejected() {
        let _ = spectra(0);
    }
}
