//! Subgroups as element subsets with a membership bitmap, plus the coset
//! machinery built on them.

use crate::cayley::CayleyGroup;
use crate::error::{Error, Result};

/// An element subset of a parent group, kept sorted, with O(1) membership.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
    bitmap: Vec<u64>,
}

impl Subgroup {
    /// Builds from an element list and checks the closure certificate:
    /// identity present, closed under products, and Lagrange.
    pub fn certified(g: &CayleyGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let sub = Self::raw(g.order(), elements);
        sub.check_certificate(g)?;
        Ok(sub)
    }

    /// For sets that are closed by construction (closures, normalizers,
    /// preimages). The full certificate still runs under debug assertions.
    pub(crate) fn from_closed(g: &CayleyGroup, mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let sub = Self::raw(g.order(), elements);
        debug_assert!(sub.check_certificate(g).is_ok());
        sub
    }

    fn raw(parent_order: usize, elements: Vec<usize>) -> Self {
        let mut bitmap = vec![0u64; parent_order.div_ceil(64)];
        for &e in &elements {
            bitmap[e / 64] |= 1 << (e % 64);
        }
        Subgroup {
            parent_order,
            elements,
            bitmap,
        }
    }

    fn check_certificate(&self, g: &CayleyGroup) -> Result<()> {
        if self.parent_order != g.order() {
            return Err(Error::Axiom("subgroup parent order mismatch".into()));
        }
        if !self.contains(g.identity()) {
            return Err(Error::Axiom("subgroup misses the identity".into()));
        }
        for &a in &self.elements {
            if !self.contains(g.inverse(a)) {
                return Err(Error::Axiom(format!(
                    "subgroup not closed under inverse of {}",
                    a + 1
                )));
            }
            for &b in &self.elements {
                if !self.contains(g.mul(a, b)) {
                    return Err(Error::Axiom(format!(
                        "subgroup not closed: {} * {}",
                        a + 1,
                        b + 1
                    )));
                }
            }
        }
        if g.order() % self.order() != 0 {
            return Err(Error::Axiom(format!(
                "subgroup order {} does not divide {}",
                self.order(),
                g.order()
            )));
        }
        Ok(())
    }

    pub fn trivial(g: &CayleyGroup) -> Self {
        Self::raw(g.order(), vec![g.identity()])
    }

    pub fn whole(g: &CayleyGroup) -> Self {
        Self::raw(g.order(), (0..g.order()).collect())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        self.bitmap[e / 64] >> (e % 64) & 1 == 1
    }

    /// Position of `e` in the sorted element list.
    pub fn position_of(&self, e: usize) -> Option<usize> {
        self.elements.binary_search(&e).ok()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.bitmap
            .iter()
            .zip(&other.bitmap)
            .all(|(a, b)| a & !b == 0)
    }
}

/// Smallest subgroup containing `gens`: breadth-first closure over the
/// generator set. Empty `gens` yields the trivial subgroup.
pub fn closure(g: &CayleyGroup, gens: &[usize]) -> Subgroup {
    let mut member = vec![false; g.order()];
    member[g.identity()] = true;
    let mut queue = vec![g.identity()];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !member[y] {
                member[y] = true;
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    Subgroup::from_closed(g, queue)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One representative per coset, identity first, the rest chosen by a greedy
/// scan over ascending element ids so output is deterministic.
#[derive(Clone, Debug)]
pub struct Transversal {
    pub side: Side,
    pub reps: Vec<usize>,
    pub coset_of: Vec<u32>,
}

pub fn transversal(g: &CayleyGroup, h: &Subgroup, side: Side) -> Transversal {
    let n = g.order();
    let index = n / h.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut reps = Vec::with_capacity(index);

    let cover = |rep: usize, idx: u32, coset_of: &mut Vec<u32>| {
        for &x in h.elements() {
            let member = match side {
                // right coset H*rep
                Side::Right => g.mul(x, rep),
                // left coset rep*H
                Side::Left => g.mul(rep, x),
            };
            debug_assert_eq!(coset_of[member], u32::MAX);
            coset_of[member] = idx;
        }
    };

    reps.push(g.identity());
    cover(g.identity(), 0, &mut coset_of);
    for e in 0..n {
        if coset_of[e] == u32::MAX {
            let idx = reps.len() as u32;
            reps.push(e);
            cover(e, idx, &mut coset_of);
        }
    }
    debug_assert_eq!(reps.len(), index);
    Transversal {
        side,
        reps,
        coset_of,
    }
}

/// gHg⁻¹ = H for all g.
pub fn is_normal(g: &CayleyGroup, h: &Subgroup) -> bool {
    normality_witness(g, h).is_none()
}

/// Some g with gHg⁻¹ != H, if one exists.
pub fn normality_witness(g: &CayleyGroup, h: &Subgroup) -> Option<usize> {
    (0..g.order()).find(|&c| !fixes_under_conjugation(g, h, c))
}

fn fixes_under_conjugation(g: &CayleyGroup, h: &Subgroup, c: usize) -> bool {
    // gHg⁻¹ ⊆ H suffices: conjugation is injective and H is finite.
    h.elements().iter().all(|&x| h.contains(g.conjugate(c, x)))
}

/// Largest subgroup of G in which H is normal.
pub fn normalizer(g: &CayleyGroup, h: &Subgroup) -> Subgroup {
    let members: Vec<usize> = (0..g.order())
        .filter(|&c| fixes_under_conjugation(g, h, c))
        .collect();
    Subgroup::from_closed(g, members)
}

/// Extracts a subgroup as a standalone group. Local dense ids follow the
/// sorted element list; the returned vec maps local -> parent dense ids.
pub fn subgroup_as_group(g: &CayleyGroup, h: &Subgroup) -> (CayleyGroup, Vec<usize>) {
    let elems = h.elements().to_vec();
    let m = elems.len();
    let mut local_of = vec![u32::MAX; g.order()];
    for (i, &e) in elems.iter().enumerate() {
        local_of[e] = i as u32;
    }
    let mut table = Vec::with_capacity(m * m);
    for &a in &elems {
        for &b in &elems {
            let p = local_of[g.mul(a, b)];
            debug_assert_ne!(p, u32::MAX);
            table.push(p);
        }
    }
    let sub = CayleyGroup::from_table_trusted(m, table).expect("closed subgroup forms a group");
    (sub, elems)
}
