//! Build-and-verify harness. Structures for groups up to [`EXHAUSTIVE_MAX`]
//! elements are checked on every pair; larger ones on a fixed number of
//! seeded random pairs. Each query's lookup count feeds a histogram.

use group_ds::build::SpaceReport;
use group_ds::{build_auto, CayleyGroup, GroupDS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

pub const EXHAUSTIVE_MAX: usize = 1024;
pub const SAMPLED_PAIRS: u64 = 1_000_000;
const MAX_WITNESSES: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct OracleOutcome {
    pub mode: String,
    pub pairs: u64,
    pub mismatches: u64,
    /// (a, b, structure result, table result), 1-based ids.
    pub witnesses: Vec<(u64, u64, u64, u64)>,
}

#[derive(Serialize)]
pub struct BenchReport {
    #[serde(flatten)]
    pub space: SpaceReport,
    pub oracle: OracleOutcome,
    /// (lookups per query, number of queries) pairs, ascending.
    pub lookup_histogram: Vec<(u64, u64)>,
    pub pass: bool,
}

/// Compares the structure against the table and histograms the instrumented
/// lookup counts.
pub fn oracle_check(
    g: &CayleyGroup,
    ds: &GroupDS,
    seed: u64,
) -> (OracleOutcome, Vec<(u64, u64)>) {
    let n = g.order();
    let mut hist: BTreeMap<u64, u64> = BTreeMap::new();
    let mut mismatches = 0u64;
    let mut witnesses = Vec::new();
    let mut pairs = 0u64;

    let mut check = |a: usize, b: usize| {
        let mut lookups = 0u64;
        let got = ds.multiply_counted(a, b, &mut lookups);
        *hist.entry(lookups).or_insert(0) += 1;
        let want = g.mul(a, b);
        if got != want {
            mismatches += 1;
            if witnesses.len() < MAX_WITNESSES {
                witnesses.push((a as u64 + 1, b as u64 + 1, got as u64 + 1, want as u64 + 1));
            }
        }
    };

    let mode = if n <= EXHAUSTIVE_MAX {
        for a in 0..n {
            for b in 0..n {
                check(a, b);
                pairs += 1;
            }
        }
        "exhaustive"
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..SAMPLED_PAIRS {
            check(rng.gen_range(0..n), rng.gen_range(0..n));
            pairs += 1;
        }
        "sampled"
    };

    (
        OracleOutcome {
            mode: mode.to_string(),
            pairs,
            mismatches,
            witnesses,
        },
        hist.into_iter().collect(),
    )
}

/// Builds via the automatic case split and runs the oracle.
pub fn run_bench(g: &CayleyGroup, seed: u64) -> group_ds::Result<(GroupDS, BenchReport)> {
    let (ds, space) = build_auto(g)?;
    let (oracle, lookup_histogram) = oracle_check(g, &ds, seed);
    let max_lookups = lookup_histogram.last().map(|&(l, _)| l).unwrap_or(0);
    let pass = oracle.mismatches == 0 && max_lookups <= 183 && max_lookups <= space.lookup_bound;
    let report = BenchReport {
        space,
        oracle,
        lookup_histogram,
        pass,
    };
    Ok((ds, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use group_ds::gen;

    #[test]
    fn z2_passes_trivially() {
        let g = gen::cyclic(2).unwrap();
        let (_, report) = run_bench(&g, 0).unwrap();
        assert!(report.pass);
        assert_eq!(report.oracle.mode, "exhaustive");
        assert_eq!(report.oracle.pairs, 4);
    }

    #[test]
    fn histogram_is_bounded_by_lookup_count() {
        let g = gen::symmetric(4).unwrap();
        let (ds, report) = run_bench(&g, 0).unwrap();
        let max = report.lookup_histogram.last().unwrap().0;
        assert_eq!(max, ds.lookup_count());
    }

    #[test]
    fn sampled_mode_above_threshold() {
        let g = gen::direct_product(&gen::cyclic(40).unwrap(), &gen::cyclic(40).unwrap()).unwrap();
        let (_, report) = run_bench(&g, 7).unwrap();
        assert_eq!(report.oracle.mode, "sampled");
        assert!(report.pass);
    }
}
