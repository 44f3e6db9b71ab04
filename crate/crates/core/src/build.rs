//! Top-level construction: pick a composition-series pivot near sqrt(n),
//! then stack extension nodes over a small base table.
//!
//! Three shapes come out of the case analysis:
//! - `Case1`: some series member has order in [sqrt(n)/2, sqrt(n)]; its
//!   Cayley table plus one coset node covers the whole group.
//! - `Case2Cyclic`: the factor above the pivot is cyclic of prime order;
//!   base + one cyclic node + one coset node.
//! - `Case2Simple`: the factor is nonabelian simple; a subgroup chain found
//!   in the quotient is lifted through the canonical map, giving base + four
//!   coset nodes, every index within max(b1, b2, 1) * sqrt(n).
//!
//! All sqrt comparisons are exact: |H|^2 against n, never floating point.

use crate::cayley::CayleyGroup;
use crate::chain::{find_chain, MethodTag};
use crate::ds::{build_base, build_coset_node, build_cyclic_node, GroupDS};
use crate::error::{Error, Result};
use crate::quotient::{lift, quotient};
use crate::series::{composition_series, CompositionSeries};
use crate::subgroup::{subgroup_as_group, Subgroup};
use serde::Serialize;
use std::time::Instant;

pub const DEFAULT_B1: f64 = 5.0;
pub const DEFAULT_B2: f64 = 5.0;
/// Fresh-seed retries when a found chain violates the layer bounds.
const CHAIN_RESTARTS: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseTag {
    Case1,
    Case2Cyclic,
    Case2Simple,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LayerKind {
    Coset,
    Cyclic,
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerPlan {
    pub kind: LayerKind,
    pub group_order: usize,
    pub sub_order: usize,
    pub index: usize,
}

pub struct BuildPlan {
    pub case: CaseTag,
    /// Index of the pivot subgroup in the series chain.
    pub pivot: usize,
    pub series: CompositionSeries,
    /// Nested subgroups of G from the base set up to G itself.
    pub sets: Vec<Subgroup>,
    /// Extension kind for each step sets[j] -> sets[j+1].
    pub kinds: Vec<LayerKind>,
    pub layers: Vec<LayerPlan>,
    /// Orders of the two inserted subgroups in the simple case.
    pub inserted: Option<(usize, usize)>,
    /// Which chain method produced the inserted subgroups.
    pub chain_method: Option<MethodTag>,
    pub find_chain_calls: u32,
    pub b1: f64,
    pub b2: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LayerReport {
    pub kind: String,
    pub group_order: usize,
    pub sub_order: usize,
    pub index: usize,
    pub words: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaceReport {
    pub n: usize,
    pub case: CaseTag,
    pub total_words: u64,
    pub words_per_n: f64,
    pub lookup_bound: u64,
    /// Root-first layer breakdown, base last.
    pub layers: Vec<LayerReport>,
    pub build_ms: f64,
    pub find_chain_calls: u32,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && crate::series::smallest_prime_factor(n) == n
}

/// True when every composition factor is cyclic of prime order.
pub fn is_solvable(series: &CompositionSeries) -> bool {
    series.factor_orders.iter().all(|&f| is_prime(f))
}

pub fn plan(g: &CayleyGroup, b1: f64, b2: f64, seed: u64) -> Result<BuildPlan> {
    let n = g.order();
    let series = composition_series(g);
    let orders: Vec<usize> = series.chain.iter().map(|s| s.order()).collect();

    // First (largest) order at or below sqrt(n); exists since the chain ends
    // at 1.
    let i_star = orders
        .iter()
        .position(|&o| o * o <= n)
        .expect("chain ends at the trivial subgroup");

    if 4 * orders[i_star] * orders[i_star] >= n {
        // Case 1: that member sits in [sqrt(n)/2, sqrt(n)].
        let sets = vec![series.chain[i_star].clone(), Subgroup::whole(g)];
        let kinds = vec![LayerKind::Coset];
        let layers = layer_plans(&sets, &kinds);
        return Ok(BuildPlan {
            case: CaseTag::Case1,
            pivot: i_star,
            series,
            sets,
            kinds,
            layers,
            inserted: None,
            chain_method: None,
            find_chain_calls: 0,
            b1,
            b2,
        });
    }

    // Case 2: pivot is the largest index with |G_i| > sqrt(n).
    let i = i_star - 1;
    debug_assert!(orders[i] * orders[i] > n);
    debug_assert!(4 * orders[i + 1] * orders[i + 1] < n);
    let factor = orders[i] / orders[i + 1];

    if is_prime(factor) {
        let sets = vec![
            series.chain[i + 1].clone(),
            series.chain[i].clone(),
            Subgroup::whole(g),
        ];
        let kinds = vec![LayerKind::Cyclic, LayerKind::Coset];
        let layers = layer_plans(&sets, &kinds);
        return Ok(BuildPlan {
            case: CaseTag::Case2Cyclic,
            pivot: i,
            series,
            sets,
            kinds,
            layers,
            inserted: None,
            chain_method: None,
            find_chain_calls: 0,
            b1,
            b2,
        });
    }

    // Case 2, nonabelian simple factor: find a chain in G_i/G_{i+1} and lift
    // both subgroups back through the canonical map.
    let (gi_grp, gi_map) = subgroup_as_group(g, &series.chain[i]);
    let local: Vec<usize> = series.chain[i + 1]
        .elements()
        .iter()
        .map(|&e| gi_map.binary_search(&e).expect("series is nested"))
        .collect();
    let n_local = Subgroup::from_closed(&gi_grp, local);
    let q = quotient(&gi_grp, &n_local)?;

    let max_b = b1.max(b2).max(1.0);
    let mut find_chain_calls = 0;
    let mut chosen = None;
    let mut last_err = None;
    for attempt in 0..CHAIN_RESTARTS {
        find_chain_calls += 1;
        match find_chain(&q.base, b1, b2, seed.wrapping_add(attempt as u64)) {
            Err(e) => last_err = Some(e),
            Ok(cand) => {
                let g_i2 = to_parent(g, &gi_map, &lift(&gi_grp, &q, &cand.h2));
                let g_i1 = to_parent(g, &gi_map, &lift(&gi_grp, &q, &cand.h1));
                let sets = vec![
                    series.chain[i + 1].clone(),
                    g_i2,
                    g_i1,
                    series.chain[i].clone(),
                    Subgroup::whole(g),
                ];
                let ok = sets.windows(2).all(|w| {
                    let idx = w[1].order() / w[0].order();
                    (idx * idx) as f64 <= max_b * max_b * n as f64
                });
                if ok {
                    chosen = Some((sets, cand));
                    break;
                }
            }
        }
    }
    let (sets, cand) = chosen.ok_or_else(|| {
        last_err.unwrap_or(Error::ChainNotFound {
            order: q.base.order(),
            best_h2: 0,
            best_idx1: 0,
            best_idx2: 0,
        })
    })?;
    let kinds = vec![LayerKind::Coset; 4];
    let layers = layer_plans(&sets, &kinds);
    Ok(BuildPlan {
        case: CaseTag::Case2Simple,
        pivot: i,
        series,
        inserted: Some((sets[1].order(), sets[2].order())),
        chain_method: Some(cand.method),
        sets,
        kinds,
        layers,
        find_chain_calls,
        b1,
        b2,
    })
}

fn to_parent(g: &CayleyGroup, map: &[usize], s: &Subgroup) -> Subgroup {
    let elems: Vec<usize> = s.elements().iter().map(|&l| map[l]).collect();
    Subgroup::from_closed(g, elems)
}

fn layer_plans(sets: &[Subgroup], kinds: &[LayerKind]) -> Vec<LayerPlan> {
    kinds
        .iter()
        .enumerate()
        .map(|(j, &kind)| LayerPlan {
            kind,
            group_order: sets[j + 1].order(),
            sub_order: sets[j].order(),
            index: sets[j + 1].order() / sets[j].order(),
        })
        .collect()
}

/// Positions of `s`'s elements inside the extraction `map` of its superset.
fn localize(kg: &CayleyGroup, map: &[usize], s: &Subgroup) -> Subgroup {
    let local: Vec<usize> = s
        .elements()
        .iter()
        .map(|&e| map.binary_search(&e).expect("plan sets are nested"))
        .collect();
    Subgroup::from_closed(kg, local)
}

pub fn build(g: &CayleyGroup, plan: &BuildPlan) -> Result<(GroupDS, SpaceReport)> {
    let start = Instant::now();
    let n = g.order();
    debug_assert!(plan.sets.len() >= 2);

    let identity_map: Vec<usize> = (0..n).collect();
    let max_b = plan.b1.max(plan.b2).max(1.0);

    // The base table's input space is the first extension layer's group.
    let mut ds: Option<GroupDS> = None;
    for j in 1..plan.sets.len() {
        let set = &plan.sets[j];
        let owned;
        let (kg, map): (&CayleyGroup, &[usize]) = if set.order() == n {
            (g, &identity_map)
        } else {
            owned = subgroup_as_group(g, set);
            (&owned.0, &owned.1)
        };

        let h = localize(kg, map, &plan.sets[j - 1]);
        if plan.case == CaseTag::Case2Simple {
            let idx = kg.order() / h.order();
            if (idx * idx) as f64 > max_b * max_b * n as f64 {
                return Err(Error::ChainNotFound {
                    order: n,
                    best_h2: h.order(),
                    best_idx1: idx,
                    best_idx2: idx,
                });
            }
        }
        let child = match ds.take() {
            None => build_base(kg, &h),
            Some(c) => c,
        };
        // When the child is the base we just built, it already multiplies H;
        // otherwise the previous layer produced a structure over H.
        let node = match plan.kinds[j - 1] {
            LayerKind::Coset => build_coset_node(kg, &h, child)?,
            LayerKind::Cyclic => build_cyclic_node(kg, &h, child)?,
        };
        ds = Some(node);
    }
    let ds = ds.expect("at least one layer");

    debug_assert_eq!(ds.word_count(), ds.census());
    let total_words = ds.word_count();
    let layers = ds
        .layer_summary()
        .into_iter()
        .map(|(kind, group_order, sub_order, index, words)| LayerReport {
            kind: kind.to_string(),
            group_order,
            sub_order,
            index,
            words,
        })
        .collect();
    let report = SpaceReport {
        n,
        case: plan.case,
        total_words,
        words_per_n: total_words as f64 / n as f64,
        lookup_bound: ds.lookup_count(),
        layers,
        build_ms: start.elapsed().as_secs_f64() * 1e3,
        find_chain_calls: plan.find_chain_calls,
    };
    Ok((ds, report))
}

/// Plan plus build with the default bounds. Solvable groups never touch the
/// chain search.
pub fn build_auto(g: &CayleyGroup) -> Result<(GroupDS, SpaceReport)> {
    let plan = plan(g, DEFAULT_B1, DEFAULT_B2, 0)?;
    build(g, &plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;

    fn oracle_check(g: &CayleyGroup, ds: &GroupDS) {
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(ds.multiply_dense(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn z16_plans_case1() {
        let g = gen::cyclic(16).unwrap();
        let p = plan(&g, 5.0, 5.0, 0).unwrap();
        assert_eq!(p.case, CaseTag::Case1);
        // the chosen subgroup order lies in [2, 4]
        let picked = p.sets[0].order();
        assert!(picked * picked <= 16 && 4 * picked * picked >= 16);
        assert_eq!(picked, 4);
    }

    #[test]
    fn s4_plans_case1_with_v4() {
        let g = gen::symmetric(4).unwrap();
        let p = plan(&g, 5.0, 5.0, 0).unwrap();
        assert_eq!(p.case, CaseTag::Case1);
        assert_eq!(p.sets[0].order(), 4);
        let (ds, report) = build(&g, &p).unwrap();
        oracle_check(&g, &ds);
        assert_eq!(report.lookup_bound, 15);
    }

    #[test]
    fn a5_plans_case2_simple() {
        let g = gen::alternating(5).unwrap();
        let p = plan(&g, 5.0, 5.0, 0).unwrap();
        assert_eq!(p.case, CaseTag::Case2Simple);
        assert_eq!(p.inserted, Some((4, 12)));
        let (ds, report) = build(&g, &p).unwrap();
        oracle_check(&g, &ds);
        assert!(report.lookup_bound <= 183);
        assert_eq!(report.find_chain_calls, 1);
    }

    #[test]
    fn z6_small_build_all_pairs() {
        let g = gen::cyclic(6).unwrap();
        let (ds, _) = build_auto(&g).unwrap();
        oracle_check(&g, &ds);
    }

    #[test]
    fn dihedral_8_solvable_path_only() {
        let g = gen::dihedral(8).unwrap(); // order 16
        let p = plan(&g, 5.0, 5.0, 0).unwrap();
        assert!(is_solvable(&p.series));
        assert_ne!(p.case, CaseTag::Case2Simple);
        assert_eq!(p.find_chain_calls, 0);
        let (ds, _) = build(&g, &p).unwrap();
        oracle_check(&g, &ds);
    }

    #[test]
    fn psl27_case2_simple_path() {
        let g = gen::from_perm_gens_text(gen::PSL_2_7_GENS).unwrap();
        let p = plan(&g, 5.0, 5.0, 0).unwrap();
        assert_eq!(p.case, CaseTag::Case2Simple);
        let (ds, report) = build(&g, &p).unwrap();
        oracle_check(&g, &ds);
        assert!(report.lookup_bound <= 183);
        // every layer index within 5 sqrt(n)
        for l in &report.layers[..report.layers.len() - 1] {
            assert!((l.index * l.index) as f64 <= 25.0 * 168.0);
        }
    }

    #[test]
    fn case2_cyclic_exercised() {
        // AGL(1,5), order 20: series orders 20,10,5,1 leave the band
        // [sqrt(20)/2, sqrt(20)] empty, and the factor above the pivot is 5.
        let f20 = gen::from_perm_gens_text("(2 3 5 4)\n(1 2 3 4 5)\n").unwrap();
        assert_eq!(f20.order(), 20);
        let p = plan(&f20, 5.0, 5.0, 0).unwrap();
        assert_eq!(p.case, CaseTag::Case2Cyclic);
        let (ds, _) = build(&f20, &p).unwrap();
        oracle_check(&f20, &ds);
        assert_eq!(ds.lookup_count(), 39);
    }

    #[test]
    fn trivial_and_tiny_groups() {
        for n in [1usize, 2, 3, 4] {
            let g = gen::cyclic(n).unwrap();
            let (ds, report) = build_auto(&g).unwrap();
            oracle_check(&g, &ds);
            assert_eq!(report.n, n);
        }
    }

    #[test]
    fn space_report_words_match_structure() {
        let g = gen::dihedral(16).unwrap();
        let (ds, report) = build_auto(&g).unwrap();
        assert_eq!(report.total_words, ds.word_count());
        assert_eq!(ds.word_count(), ds.census());
        let layer_sum: u64 = report.layers.iter().map(|l| l.words).sum();
        assert_eq!(layer_sum, report.total_words);
    }
}
