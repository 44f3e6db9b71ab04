//! Composition series by repeatedly splitting off a maximal proper normal
//! subgroup, plus simplicity testing and a brute-force subgroup enumerator
//! for small groups.

use crate::cayley::CayleyGroup;
use crate::error::Result;
use crate::quotient::quotient;
use crate::subgroup::{closure, subgroup_as_group, Subgroup};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// G = chain[0] > chain[1] > ... > chain[k] = {e}, every link normal in its
/// predecessor and every factor simple. All entries are subgroups of G.
pub struct CompositionSeries {
    pub chain: Vec<Subgroup>,
    pub factor_orders: Vec<usize>,
}

/// Deterministic series: candidate scan in id order, ties broken by the
/// lexicographically smallest element list.
pub fn composition_series(g: &CayleyGroup) -> CompositionSeries {
    series_impl(g, None)
}

/// Same construction with seeded tie-breaking and scan order. Any choice of
/// maximal normal subgroup yields the same factor multiset.
pub fn composition_series_seeded(g: &CayleyGroup, seed: u64) -> CompositionSeries {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    series_impl(g, Some(&mut rng))
}

fn series_impl(g: &CayleyGroup, mut rng: Option<&mut ChaCha8Rng>) -> CompositionSeries {
    let mut chain = vec![Subgroup::whole(g)];
    let mut factor_orders = Vec::new();
    let mut cur = g.clone();
    let mut embed: Vec<usize> = (0..g.order()).collect();
    while cur.order() > 1 {
        let m = maximal_proper_normal(&cur, rng.as_deref_mut());
        let q = quotient(&cur, &m).expect("maximal normal subgroup is normal");
        assert!(
            is_simple(&q.base),
            "factor of order {} is not simple",
            q.base.order()
        );
        factor_orders.push(cur.order() / m.order());
        let g_elems: Vec<usize> = m.elements().iter().map(|&l| embed[l]).collect();
        chain.push(Subgroup::from_closed(g, g_elems));
        let (next, map) = subgroup_as_group(&cur, &m);
        embed = map.into_iter().map(|l| embed[l]).collect();
        cur = next;
    }
    CompositionSeries {
        chain,
        factor_orders,
    }
}

/// True iff the normal closure of every non-identity element is the whole
/// group. Closures only depend on conjugacy classes, so one representative
/// per class is checked.
pub fn is_simple(g: &CayleyGroup) -> bool {
    let n = g.order();
    if n < 2 {
        return false;
    }
    g.conjugacy_class_reps()
        .into_iter()
        .filter(|&x| x != g.identity())
        .all(|x| closure(g, &g.conjugacy_class(x)).order() == n)
}

pub fn smallest_prime_factor(n: usize) -> usize {
    if n % 2 == 0 {
        return 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return d;
        }
        d += 2;
    }
    n
}

/// A maximal proper normal subgroup of `g` (the trivial subgroup when `g` is
/// simple or of prime order). Candidates are normal closures of single
/// conjugacy classes, closed under pairwise joins until fixpoint; the
/// maximum-order proper result wins. The fixpoint stops early once a
/// candidate reaches n / (smallest prime factor), the largest order any
/// proper subgroup can have.
fn maximal_proper_normal(g: &CayleyGroup, mut rng: Option<&mut ChaCha8Rng>) -> Subgroup {
    let n = g.order();
    debug_assert!(n > 1);
    let limit = n / smallest_prime_factor(n);

    let mut reps: Vec<usize> = g
        .conjugacy_class_reps()
        .into_iter()
        .filter(|&x| x != g.identity())
        .collect();
    if let Some(r) = rng.as_deref_mut() {
        reps.shuffle(r);
    }

    let mut pool: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    for &x in &reps {
        let s = closure(g, &g.conjugacy_class(x));
        if s.order() == n {
            continue;
        }
        if s.order() == limit {
            return s;
        }
        if seen.insert(s.elements().to_vec()) {
            pool.push((s, vec![x]));
        }
    }
    if pool.is_empty() {
        return Subgroup::trivial(g);
    }

    let mut i = 1;
    while i < pool.len() {
        for j in 0..i {
            if pool[i].0.is_subset_of(&pool[j].0) || pool[j].0.is_subset_of(&pool[i].0) {
                continue;
            }
            let mut gens = pool[i].1.clone();
            gens.extend_from_slice(&pool[j].1);
            let mut class_gens = Vec::new();
            for &x in &gens {
                class_gens.extend(g.conjugacy_class(x));
            }
            let s = closure(g, &class_gens);
            if s.order() == n || !seen.insert(s.elements().to_vec()) {
                continue;
            }
            if s.order() == limit {
                return s;
            }
            pool.push((s, gens));
        }
        i += 1;
    }

    let max = pool.iter().map(|(s, _)| s.order()).max().unwrap();
    let mut best: Vec<Subgroup> = pool
        .into_iter()
        .map(|(s, _)| s)
        .filter(|s| s.order() == max)
        .collect();
    best.sort_by(|a, b| a.elements().cmp(b.elements()));
    match rng {
        Some(r) => best.choose(r).unwrap().clone(),
        None => best.swap_remove(0),
    }
}

/// Every subgroup, by breadth-first closure growth. Exponential in general;
/// meant for the small groups the brute-force oracles use.
pub fn all_subgroups(g: &CayleyGroup) -> Vec<Subgroup> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut out: Vec<(Subgroup, Vec<usize>)> = Vec::new();
    let triv = Subgroup::trivial(g);
    seen.insert(triv.elements().to_vec());
    out.push((triv, Vec::new()));
    let mut head = 0;
    while head < out.len() {
        let (sub, gens) = out[head].clone();
        head += 1;
        for x in 0..g.order() {
            if sub.contains(x) {
                continue;
            }
            let mut new_gens = gens.clone();
            new_gens.push(x);
            let grown = closure(g, &new_gens);
            if seen.insert(grown.elements().to_vec()) {
                out.push((grown, new_gens));
            }
        }
    }
    out.into_iter().map(|(s, _)| s).collect()
}

/// Composition series checks used by tests and the builder: every link
/// normal, factors simple, orders multiply back to n.
pub fn verify_series(g: &CayleyGroup, series: &CompositionSeries) -> Result<()> {
    use crate::error::Error;
    let ok = series.chain.first().map(|s| s.order()) == Some(g.order())
        && series.chain.last().map(|s| s.order()) == Some(1);
    if !ok {
        return Err(Error::Axiom("series endpoints wrong".into()));
    }
    let mut product = 1;
    for w in series.chain.windows(2) {
        let (sup, sub) = (&w[0], &w[1]);
        if !sub.is_subset_of(sup) {
            return Err(Error::Axiom("series not nested".into()));
        }
        let (sup_g, map) = subgroup_as_group(g, sup);
        let local: Vec<usize> = sub
            .elements()
            .iter()
            .map(|&e| map.binary_search(&e).expect("nested"))
            .collect();
        let sub_local = Subgroup::certified(&sup_g, local)?;
        let q = quotient(&sup_g, &sub_local)?;
        if !is_simple(&q.base) {
            return Err(Error::Axiom("factor not simple".into()));
        }
        product *= q.base.order();
    }
    if product != g.order() {
        return Err(Error::Axiom("factor orders do not multiply to n".into()));
    }
    Ok(())
}
