//! Bounded search for a subgroup chain H2 <= H1 <= H in a nonabelian simple
//! group with |H2|^2 <= |H|, [H:H1] <= b1*sqrt|H|, [H1:H2] <= b2*sqrt|H|.
//!
//! Candidates come from two routes: Sylow subgroups with their normalizers,
//! and randomly generated subgroups kept when maximal by inclusion. Every
//! (H2, H1) containment pair from the combined pool is tested against the
//! bounds.

use crate::cayley::CayleyGroup;
use crate::error::{Error, Result};
use crate::series::is_simple;
use crate::subgroup::{closure, normalizer, Subgroup};
use crate::sylow::{descend_p_subgroup, prime_factors, sylow_subgroup};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Random-generation attempts for the sampling route.
pub const SAMPLE_ATTEMPTS: usize = 512;
const SAMPLE_MAX_GENS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MethodTag {
    /// H2 descended from a Sylow subgroup, H1 its normalizer.
    Method1,
    /// H1 sampled maximal-by-inclusion, H2 a Sylow subgroup of it.
    Method2,
    /// A cross pair from the combined candidate pool.
    Search,
}

#[derive(Clone)]
pub struct ChainCandidate {
    pub h2: Subgroup,
    pub h1: Subgroup,
    /// ([H:H1], [H1:H2])
    pub indices: (usize, usize),
    pub method: MethodTag,
}

/// Squared-form bound checks shared with the order-formula audit:
/// |H2|^2 <= n, [H:H1]^2 <= b1^2 n, [H1:H2]^2 <= b2^2 n.
pub fn chain_bounds_hold(n: usize, h2: usize, h1: usize, b1: f64, b2: f64) -> bool {
    if h1 == 0 || h2 == 0 || h1 % h2 != 0 || n % h1 != 0 {
        return false;
    }
    let idx1 = n / h1;
    let idx2 = h1 / h2;
    let nf = n as f64;
    (h2 as f64) * (h2 as f64) <= nf
        && (idx1 as f64) * (idx1 as f64) <= b1 * b1 * nf
        && (idx2 as f64) * (idx2 as f64) <= b2 * b2 * nf
}

pub fn find_chain(h: &CayleyGroup, b1: f64, b2: f64, seed: u64) -> Result<ChainCandidate> {
    let n = h.order();
    if h.is_abelian() {
        return Err(Error::NotNonabelianSimple {
            order: n,
            why: "abelian".into(),
        });
    }
    if !is_simple(h) {
        return Err(Error::NotNonabelianSimple {
            order: n,
            why: "not simple".into(),
        });
    }

    let mut h2_pool: Vec<Subgroup> = vec![Subgroup::trivial(h)];
    let mut h1_pool: Vec<Subgroup> = vec![Subgroup::whole(h)];

    // Sylow route: P descended under sqrt(n), paired with N(P).
    let mut method1: Vec<(Subgroup, Subgroup)> = Vec::new();
    for p in prime_factors(n) {
        let sylow = sylow_subgroup(h, p)?;
        let norm = normalizer(h, &sylow);
        let descended = descend_p_subgroup(h, &sylow, p, n);
        method1.push((descended.clone(), norm.clone()));
        h2_pool.push(descended);
        h2_pool.push(sylow);
        h1_pool.push(norm);
    }
    if let Some(found) = best_pair(n, method1.iter().cloned(), b1, b2, MethodTag::Method1) {
        return Ok(found);
    }

    // Sampling route: subgroups generated by up to three random elements,
    // maximal-by-inclusion samples kept as H1 candidates.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for _ in 0..SAMPLE_ATTEMPTS {
        let k = rng.gen_range(1..=SAMPLE_MAX_GENS);
        let gens: Vec<usize> = (0..k).map(|_| rng.gen_range(0..n)).collect();
        let s = closure(h, &gens);
        if s.order() == n || s.order() == 1 {
            continue;
        }
        if seen.insert(s.elements().to_vec()) {
            samples.push(s);
        }
    }
    let maximal: Vec<Subgroup> = samples
        .iter()
        .filter(|s| {
            !samples
                .iter()
                .any(|t| t.order() > s.order() && s.is_subset_of(t))
        })
        .cloned()
        .collect();
    let mut method2: Vec<(Subgroup, Subgroup)> = Vec::new();
    for h1 in &maximal {
        let (h1_grp, map) = crate::subgroup::subgroup_as_group(h, h1);
        for p in prime_factors(h1.order()) {
            if let Ok(sy) = sylow_subgroup(&h1_grp, p) {
                let parent: Vec<usize> = sy.elements().iter().map(|&l| map[l]).collect();
                let sy = Subgroup::from_closed(h, parent);
                let descended = descend_p_subgroup(h, &sy, p, n);
                method2.push((descended.clone(), h1.clone()));
                method2.push((sy.clone(), h1.clone()));
                h2_pool.push(descended);
                h2_pool.push(sy);
            }
        }
        h1_pool.push(h1.clone());
    }
    if let Some(found) = best_pair(n, method2.iter().cloned(), b1, b2, MethodTag::Method2) {
        return Ok(found);
    }

    // Combined pool: every containment pair.
    let cross = h2_pool
        .iter()
        .flat_map(|h2| h1_pool.iter().map(move |h1| (h2.clone(), h1.clone())))
        .filter(|(h2, h1)| h2.is_subset_of(h1));
    if let Some(found) = best_pair(n, cross, b1, b2, MethodTag::Search) {
        return Ok(found);
    }

    // Diagnostics: the closest the pool got on each bound.
    let best_h2 = h2_pool
        .iter()
        .map(|s| s.order())
        .filter(|&o| o * o <= n)
        .max()
        .unwrap_or(1);
    let best_idx1 = h1_pool.iter().map(|s| n / s.order()).min().unwrap_or(n);
    let best_idx2 = h2_pool
        .iter()
        .flat_map(|h2| {
            h1_pool
                .iter()
                .filter(move |h1| h2.is_subset_of(h1))
                .map(move |h1| h1.order() / h2.order())
        })
        .min()
        .unwrap_or(n);
    Err(Error::ChainNotFound {
        order: n,
        best_h2,
        best_idx1,
        best_idx2,
    })
}

/// Picks the qualifying pair with the smallest [H:H1], then smallest [H1:H2],
/// then lexicographic element lists, so results are deterministic.
fn best_pair(
    n: usize,
    pairs: impl Iterator<Item = (Subgroup, Subgroup)>,
    b1: f64,
    b2: f64,
    method: MethodTag,
) -> Option<ChainCandidate> {
    let mut best: Option<ChainCandidate> = None;
    for (h2, h1) in pairs {
        if !h2.is_subset_of(&h1) || !chain_bounds_hold(n, h2.order(), h1.order(), b1, b2) {
            continue;
        }
        let cand = ChainCandidate {
            indices: (n / h1.order(), h1.order() / h2.order()),
            h2,
            h1,
            method,
        };
        let better = match &best {
            None => true,
            Some(b) => {
                let key_new = (
                    cand.indices.0,
                    cand.indices.1,
                    cand.h1.elements().to_vec(),
                    cand.h2.elements().to_vec(),
                );
                let key_old = (
                    b.indices.0,
                    b.indices.1,
                    b.h1.elements().to_vec(),
                    b.h2.elements().to_vec(),
                );
                key_new < key_old
            }
        };
        if better {
            best = Some(cand);
        }
    }
    best
}
