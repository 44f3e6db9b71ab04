//! Quotient groups over coset indices and the subgroup correspondence.

use crate::cayley::CayleyGroup;
use crate::error::{Error, Result};
use crate::subgroup::{transversal, normality_witness, Side, Subgroup};

/// G/N as a group over coset indices. `canonical_map` sends each parent
/// element to its coset index; `section` picks one parent representative per
/// coset (the transversal rep, identity coset first).
pub struct QuotientGroup {
    pub base: CayleyGroup,
    pub canonical_map: Vec<u32>,
    pub section: Vec<usize>,
}

/// Builds G/N, failing with a witness when N is not normal.
pub fn quotient(g: &CayleyGroup, n: &Subgroup) -> Result<QuotientGroup> {
    if let Some(w) = normality_witness(g, n) {
        return Err(Error::NotNormal {
            sub: n.order(),
            witness: w as u64 + 1,
        });
    }
    let t = transversal(g, n, Side::Right);
    let k = t.reps.len();
    let mut table = Vec::with_capacity(k * k);
    for &a in &t.reps {
        for &b in &t.reps {
            table.push(t.coset_of[g.mul(a, b)]);
        }
    }
    let base =
        CayleyGroup::from_table_trusted(k, table).expect("coset multiplication forms a group");
    Ok(QuotientGroup {
        base,
        canonical_map: t.coset_of,
        section: t.reps,
    })
}

/// Pulls a subgroup of the quotient back through the canonical map:
/// the preimage contains N and has order |S| * |N|.
pub fn lift(g: &CayleyGroup, q: &QuotientGroup, s: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..g.order())
        .filter(|&e| s.contains(q.canonical_map[e] as usize))
        .collect();
    Subgroup::from_closed(g, members)
}
