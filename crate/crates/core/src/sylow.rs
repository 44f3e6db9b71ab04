//! Sylow p-subgroups via normalizer climbing, and index-p descent inside
//! p-groups.

use crate::cayley::CayleyGroup;
use crate::error::{Error, Result};
use crate::quotient::quotient;
use crate::subgroup::{closure, normalizer, subgroup_as_group, Subgroup};

/// Largest power of p dividing n.
pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut part = 1;
    while n % p == 0 {
        part *= p;
        n /= p;
    }
    part
}

pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// A subgroup whose order is the full p-part of |G|. Starts from a cyclic
/// p-subgroup and repeatedly extends inside the normalizer: while P is not
/// Sylow, N(P)/P has an element of order p whose lift grows P by a factor p.
pub fn sylow_subgroup(g: &CayleyGroup, p: usize) -> Result<Subgroup> {
    let n = g.order();
    if p < 2 || n % p != 0 {
        return Err(Error::PrimeDoesNotDivide { p, order: n });
    }
    let target = p_part(n, p);

    // smallest-id element of order exactly p (a power of any element whose
    // order is divisible by p)
    let seed = (0..n)
        .map(|x| (x, g.elem_order(x)))
        .find(|&(_, o)| o % p == 0)
        .map(|(x, o)| g.power(x, o / p))
        .expect("Cauchy: an element of order p exists");
    let mut sylow = closure(g, &[seed]);

    while sylow.order() < target {
        let norm = normalizer(g, &sylow);
        debug_assert!(norm.order() > sylow.order());
        let (norm_g, norm_map) = subgroup_as_group(g, &norm);
        let local: Vec<usize> = sylow
            .elements()
            .iter()
            .map(|&e| norm_map.binary_search(&e).expect("P inside N(P)"))
            .collect();
        let p_local = Subgroup::from_closed(&norm_g, local);
        let q = quotient(&norm_g, &p_local).expect("P is normal in its normalizer");

        // element of order p in N(P)/P, lifted through the section
        let w = (0..q.base.order())
            .map(|x| (x, q.base.elem_order(x)))
            .find(|&(_, o)| o % p == 0)
            .map(|(x, o)| q.base.power(x, o / p))
            .expect("p divides [N(P):P] while P is not Sylow");
        let lift_local = q.section[w];
        let lift = norm_map[lift_local];

        let mut gens = sylow.elements().to_vec();
        gens.push(lift);
        let grown = closure(g, &gens);
        debug_assert_eq!(grown.order(), sylow.order() * p);
        sylow = grown;
    }
    Ok(sylow)
}

/// The Frattini subgroup of a p-group: closure of p-th powers and
/// commutators. The quotient by it is elementary abelian.
fn frattini(p_grp: &CayleyGroup, p: usize) -> Subgroup {
    let n = p_grp.order();
    let mut gens = Vec::new();
    for x in 0..n {
        gens.push(p_grp.power(x, p));
    }
    for a in 0..n {
        for b in 0..n {
            // [a,b] = a b a^-1 b^-1
            let c = p_grp.mul(
                p_grp.mul(a, b),
                p_grp.mul(p_grp.inverse(a), p_grp.inverse(b)),
            );
            gens.push(c);
        }
    }
    gens.sort_unstable();
    gens.dedup();
    closure(p_grp, &gens)
}

/// Some index-p subgroup of a p-group of order > 1 (always normal). Drops
/// one minimal generator modulo the Frattini subgroup.
pub fn index_p_subgroup(p_grp: &CayleyGroup, p: usize) -> Subgroup {
    let n = p_grp.order();
    debug_assert!(n > 1 && n % p == 0);
    let phi = frattini(p_grp, p);
    // greedy minimal generators over phi
    let mut gens: Vec<usize> = Vec::new();
    let mut span = phi.clone();
    for x in 0..n {
        if span.order() == n {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            let mut all = phi.elements().to_vec();
            all.extend_from_slice(&gens);
            span = closure(p_grp, &all);
        }
    }
    debug_assert!(!gens.is_empty());
    gens.pop();
    let mut all = phi.elements().to_vec();
    all.extend_from_slice(&gens);
    let m = closure(p_grp, &all);
    debug_assert_eq!(m.order() * p, n);
    m
}

/// Shrinks a p-subgroup one index-p step at a time until
/// |result|^2 <= bound_sq. Each step stays inside the previous group.
pub fn descend_p_subgroup(
    g: &CayleyGroup,
    p_sub: &Subgroup,
    p: usize,
    bound_sq: usize,
) -> Subgroup {
    let mut cur = p_sub.clone();
    while cur.order() * cur.order() > bound_sq {
        let (pg, map) = subgroup_as_group(g, &cur);
        let m = index_p_subgroup(&pg, p);
        let parent_elems: Vec<usize> = m.elements().iter().map(|&l| map[l]).collect();
        cur = Subgroup::from_closed(g, parent_elems);
    }
    cur
}
