//! The recursive constant-lookup multiplication structure.
//!
//! A structure over a group K answers products of K's elements using pure
//! array lookups plus at most two child queries. Three node kinds:
//!
//! - `Base`: the subgroup's own multiplication table. Inputs arrive in the
//!   enclosing layer's id space and pass through `to_local`; 3 lookups.
//! - `Coset`: K decomposed along an arbitrary subgroup H with left/right
//!   transversals; 9 lookups + 2 child queries.
//! - `Cyclic`: K decomposed along a normal subgroup N with cyclic quotient
//!   generated by a fixed coset g0*N; 9 lookups + 2 child queries.
//!
//! Index conventions: every node speaks its own group's dense ids 0..|K|-1
//! (sorted order of the underlying elements). Arrays that feed a child hold
//! values in the child's input space: the child's dense ids when the child
//! is itself an extension node, the enclosing dense ids when it is a base
//! table. Outputs of a child are always the child's dense ids, which is what
//! the flip/cross/fuse axes are indexed by.

use crate::cayley::CayleyGroup;
use crate::error::{Error, Result};
use crate::quotient::quotient;
use crate::subgroup::{normality_witness, transversal, Side, Subgroup};

#[cfg_attr(test, derive(Debug))]
pub enum GroupDS {
    Base(BaseTable),
    Coset(Box<CosetNode>),
    Cyclic(Box<CyclicNode>),
}

/// |H| x |H| local products plus the input-space translation.
#[cfg_attr(test, derive(Debug))]
pub struct BaseTable {
    pub sub_order: usize,
    /// Size of the enclosing layer's id space (n for a root table).
    pub input_size: usize,
    /// enclosing dense id -> 0..sub_order-1 (u32::MAX outside the subgroup)
    pub to_local: Vec<u32>,
    /// row-major sub_order^2, cells are local indices
    pub table: Vec<u32>,
}

/// Decomposition of K along a subgroup H (index `index`).
#[cfg_attr(test, derive(Debug))]
pub struct CosetNode {
    pub group_order: usize,
    pub sub_order: usize,
    pub index: usize,
    /// g = coset_left(g) * sub_left(g), sub_left cells in child-input space
    pub sub_left: Vec<u32>,
    /// g = sub_right(g) * coset_right(g)
    pub sub_right: Vec<u32>,
    pub coset_left: Vec<u32>,
    pub coset_right: Vec<u32>,
    /// l*h = flip_sub(l,h) * flip_rep(l,h); rows l-index, cols child-output
    pub flip_sub: Vec<u32>,
    pub flip_rep: Vec<u32>,
    /// r*r' = cross_sub(r,r') * cross_rep(r,r')
    pub cross_sub: Vec<u32>,
    pub cross_rep: Vec<u32>,
    /// fuse(h, r) = h*r as K-dense ids; rows child-output, cols rep index
    pub fuse: Vec<u32>,
    pub child: GroupDS,
}

/// Decomposition of K along a normal subgroup N with cyclic quotient of
/// order k generated by the coset of g0.
#[cfg_attr(test, derive(Debug))]
pub struct CyclicNode {
    pub group_order: usize,
    pub sub_order: usize,
    pub k: usize,
    /// g = g0^exponent(g) * sub_right(g) = sub_left(g) * g0^exponent(g)
    pub exponent: Vec<u32>,
    pub sub_right: Vec<u32>,
    pub sub_left: Vec<u32>,
    /// n * g0^i = g0^i * flip(n, i); rows child-output, cols 0..k-1
    pub flip: Vec<u32>,
    /// g0^l = g0^reduce_exp(l) * reduce_sub(l) for l in 0..2k-1
    pub reduce_exp: Vec<u32>,
    pub reduce_sub: Vec<u32>,
    /// fuse(i, n) = g0^i * n as K-dense ids
    pub fuse: Vec<u32>,
    pub child: GroupDS,
}

impl GroupDS {
    pub fn group_order(&self) -> usize {
        match self {
            GroupDS::Base(b) => b.sub_order,
            GroupDS::Coset(c) => c.group_order,
            GroupDS::Cyclic(c) => c.group_order,
        }
    }

    fn is_base(&self) -> bool {
        matches!(self, GroupDS::Base(_))
    }

    /// Size of this node's input id space (what callers may pass in).
    pub(crate) fn input_bound(&self) -> usize {
        match self {
            GroupDS::Base(b) => b.input_size,
            _ => self.group_order(),
        }
    }

    /// Converts a child-input value to the child's dense output id. Used
    /// when verifying decomposition identities without multiplying.
    fn normalize_input(&self, v: u32) -> u32 {
        match self {
            GroupDS::Base(b) => b.to_local[v as usize],
            _ => v,
        }
    }

    /// Product in the node's dense id space, counting every array read.
    pub fn multiply_counted(&self, x: usize, y: usize, lookups: &mut u64) -> usize {
        match self {
            GroupDS::Base(b) => {
                *lookups += 3;
                let lx = b.to_local[x] as usize;
                let ly = b.to_local[y] as usize;
                debug_assert!(lx < b.sub_order && ly < b.sub_order);
                b.table[lx * b.sub_order + ly] as usize
            }
            GroupDS::Coset(c) => {
                let so = c.sub_order;
                *lookups += 2;
                let (sl, sr) = (c.sub_left[x] as usize, c.sub_right[y] as usize);
                let h1 = c.child.multiply_counted(sl, sr, lookups);
                *lookups += 2;
                let (cl, cr) = (c.coset_left[x] as usize, c.coset_right[y] as usize);
                *lookups += 2;
                let h2 = c.flip_sub[cl * so + h1] as usize;
                let r1 = c.flip_rep[cl * so + h1] as usize;
                *lookups += 2;
                let h3 = c.cross_sub[r1 * c.index + cr] as usize;
                let r3 = c.cross_rep[r1 * c.index + cr] as usize;
                let h4 = c.child.multiply_counted(h2, h3, lookups);
                *lookups += 1;
                c.fuse[h4 * c.index + r3] as usize
            }
            GroupDS::Cyclic(c) => {
                let k = c.k;
                *lookups += 2;
                let (sr, sl) = (c.sub_right[x] as usize, c.sub_left[y] as usize);
                let n1 = c.child.multiply_counted(sr, sl, lookups);
                *lookups += 1;
                let beta = c.exponent[y] as usize;
                *lookups += 1;
                let n2 = c.flip[n1 * k + beta] as usize;
                // the exponents are read again to form the summed index; the
                // query path stays branch-free and exactly nine lookups
                *lookups += 2;
                let ell = c.exponent[x] as usize + c.exponent[y] as usize;
                *lookups += 2;
                let gamma = c.reduce_exp[ell] as usize;
                let rho = c.reduce_sub[ell] as usize;
                let n3 = c.child.multiply_counted(rho, n2, lookups);
                *lookups += 1;
                c.fuse[gamma * c.sub_order + n3] as usize
            }
        }
    }

    pub fn multiply_dense(&self, x: usize, y: usize) -> usize {
        let mut c = 0;
        self.multiply_counted(x, y, &mut c)
    }

    /// Product of 1-based element ids, the external query surface.
    pub fn multiply(&self, a: u64, b: u64) -> Result<u64> {
        let n = self.group_order() as u64;
        for id in [a, b] {
            if id == 0 || id > n {
                return Err(Error::IdOutOfRange {
                    id,
                    order: n as usize,
                });
            }
        }
        Ok(self.multiply_dense((a - 1) as usize, (b - 1) as usize) as u64 + 1)
    }

    /// Exact worst-case lookups per query: 3 at the base, 9 + 2t per node.
    pub fn lookup_count(&self) -> u64 {
        match self {
            GroupDS::Base(_) => 3,
            GroupDS::Coset(c) => 9 + 2 * c.child.lookup_count(),
            GroupDS::Cyclic(c) => 9 + 2 * c.child.lookup_count(),
        }
    }

    /// Stored words by the per-node formulas.
    pub fn word_count(&self) -> u64 {
        match self {
            GroupDS::Base(b) => (b.sub_order * b.sub_order + b.input_size) as u64,
            GroupDS::Coset(c) => {
                let (n, h, i) = (c.group_order, c.sub_order, c.index);
                c.child.word_count() + (4 * n + 2 * i * i + 2 * i * h + h * i) as u64
            }
            GroupDS::Cyclic(c) => {
                let (n, nn, k) = (c.group_order, c.sub_order, c.k);
                c.child.word_count() + (3 * n + nn * k + 2 * (2 * k - 1) + k * nn) as u64
            }
        }
    }

    /// Stored words by counting actual array cells; must equal word_count.
    pub fn census(&self) -> u64 {
        match self {
            GroupDS::Base(b) => (b.table.len() + b.to_local.len()) as u64,
            GroupDS::Coset(c) => {
                c.child.census()
                    + (c.sub_left.len()
                        + c.sub_right.len()
                        + c.coset_left.len()
                        + c.coset_right.len()
                        + c.flip_sub.len()
                        + c.flip_rep.len()
                        + c.cross_sub.len()
                        + c.cross_rep.len()
                        + c.fuse.len()) as u64
            }
            GroupDS::Cyclic(c) => {
                c.child.census()
                    + (c.exponent.len()
                        + c.sub_right.len()
                        + c.sub_left.len()
                        + c.flip.len()
                        + c.reduce_exp.len()
                        + c.reduce_sub.len()
                        + c.fuse.len()) as u64
            }
        }
    }

    /// (kind, group order, subgroup order, index, own words) from the root
    /// down to the base.
    pub fn layer_summary(&self) -> Vec<(&'static str, usize, usize, usize, u64)> {
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                GroupDS::Base(b) => {
                    out.push((
                        "base",
                        b.sub_order,
                        b.sub_order,
                        1,
                        (b.table.len() + b.to_local.len()) as u64,
                    ));
                    return out;
                }
                GroupDS::Coset(c) => {
                    out.push((
                        "coset",
                        c.group_order,
                        c.sub_order,
                        c.index,
                        self_words_coset(c),
                    ));
                    cur = &c.child;
                }
                GroupDS::Cyclic(c) => {
                    out.push((
                        "cyclic",
                        c.group_order,
                        c.sub_order,
                        c.k,
                        self_words_cyclic(c),
                    ));
                    cur = &c.child;
                }
            }
        }
    }

    /// Re-checks a sample of decomposition identities using only stored
    /// arrays (no group needed): g = s_R(g)*c_R(g) via fuse.
    pub fn validate_sample(&self, samples: usize) -> Result<()> {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move |m: usize| {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as usize) % m
        };
        let mut cur = self;
        loop {
            match cur {
                GroupDS::Base(b) => {
                    for &v in b.to_local.iter() {
                        if v != u32::MAX && v as usize >= b.sub_order {
                            return Err(Error::Corrupt("base to_local out of range".into()));
                        }
                    }
                    return Ok(());
                }
                GroupDS::Coset(c) => {
                    for _ in 0..samples {
                        let g = next(c.group_order);
                        let h = c.child.normalize_input(c.sub_right[g]) as usize;
                        let r = c.coset_right[g] as usize;
                        if h >= c.sub_order || c.fuse[h * c.index + r] as usize != g {
                            return Err(Error::Corrupt(format!(
                                "coset decomposition identity fails at element {g}"
                            )));
                        }
                    }
                    cur = &c.child;
                }
                GroupDS::Cyclic(c) => {
                    for _ in 0..samples {
                        let g = next(c.group_order);
                        let n = c.child.normalize_input(c.sub_right[g]) as usize;
                        let e = c.exponent[g] as usize;
                        if n >= c.sub_order || c.fuse[e * c.sub_order + n] as usize != g {
                            return Err(Error::Corrupt(format!(
                                "cyclic decomposition identity fails at element {g}"
                            )));
                        }
                    }
                    cur = &c.child;
                }
            }
        }
    }
}

fn self_words_coset(c: &CosetNode) -> u64 {
    (c.sub_left.len()
        + c.sub_right.len()
        + c.coset_left.len()
        + c.coset_right.len()
        + c.flip_sub.len()
        + c.flip_rep.len()
        + c.cross_sub.len()
        + c.cross_rep.len()
        + c.fuse.len()) as u64
}

fn self_words_cyclic(c: &CyclicNode) -> u64 {
    (c.exponent.len()
        + c.sub_right.len()
        + c.sub_left.len()
        + c.flip.len()
        + c.reduce_exp.len()
        + c.reduce_sub.len()
        + c.fuse.len()) as u64
}

/// Encoding of an H-element for the child's input arrays.
fn child_input(child: &GroupDS, k_dense: usize, h_pos: usize) -> u32 {
    if child.is_base() {
        k_dense as u32
    } else {
        h_pos as u32
    }
}

/// Base table for subgroup `h` of the enclosing group `k_grp` (inputs arrive
/// as `k_grp` dense ids).
pub fn build_base(k_grp: &CayleyGroup, h: &Subgroup) -> GroupDS {
    let m = h.order();
    let mut to_local = vec![u32::MAX; k_grp.order()];
    for (i, &e) in h.elements().iter().enumerate() {
        to_local[e] = i as u32;
    }
    let mut table = vec![0u32; m * m];
    for (i, &a) in h.elements().iter().enumerate() {
        for (j, &b) in h.elements().iter().enumerate() {
            let p = to_local[k_grp.mul(a, b)];
            debug_assert_ne!(p, u32::MAX);
            table[i * m + j] = p;
        }
    }
    GroupDS::Base(BaseTable {
        sub_order: m,
        input_size: k_grp.order(),
        to_local,
        table,
    })
}

/// Wraps a child over H into a structure for the whole of `k_grp`, storing
/// the four decomposition arrays, the two flip tables, the two cross tables
/// and the fuse table.
pub fn build_coset_node(k_grp: &CayleyGroup, h: &Subgroup, child: GroupDS) -> Result<GroupDS> {
    if child.group_order() != h.order() {
        return Err(Error::ChildMismatch {
            child: child.group_order(),
            sub: h.order(),
        });
    }
    let n = k_grp.order();
    let m = h.order();
    let index = n / m;
    let right = transversal(k_grp, h, Side::Right);
    let left = transversal(k_grp, h, Side::Left);

    let mut sub_left = vec![0u32; n];
    let mut sub_right = vec![0u32; n];
    let mut coset_left = vec![0u32; n];
    let mut coset_right = vec![0u32; n];
    for g in 0..n {
        let r_idx = right.coset_of[g] as usize;
        let r = right.reps[r_idx];
        // g = s_R(g) * r
        let s_r = k_grp.mul(g, k_grp.inverse(r));
        let l_idx = left.coset_of[g] as usize;
        let l = left.reps[l_idx];
        // g = l * s_L(g)
        let s_l = k_grp.mul(k_grp.inverse(l), g);
        let (sr_pos, sl_pos) = (
            h.position_of(s_r).expect("right part lies in H"),
            h.position_of(s_l).expect("left part lies in H"),
        );
        sub_right[g] = child_input(&child, s_r, sr_pos);
        sub_left[g] = child_input(&child, s_l, sl_pos);
        coset_right[g] = r_idx as u32;
        coset_left[g] = l_idx as u32;
    }

    let mut flip_sub = vec![0u32; index * m];
    let mut flip_rep = vec![0u32; index * m];
    for (l_idx, &l) in left.reps.iter().enumerate() {
        for (h_pos, &x) in h.elements().iter().enumerate() {
            let t = k_grp.mul(l, x);
            let r_idx = right.coset_of[t] as usize;
            let s = k_grp.mul(t, k_grp.inverse(right.reps[r_idx]));
            let s_pos = h.position_of(s).expect("flip part lies in H");
            flip_sub[l_idx * m + h_pos] = child_input(&child, s, s_pos);
            flip_rep[l_idx * m + h_pos] = r_idx as u32;
        }
    }

    let mut cross_sub = vec![0u32; index * index];
    let mut cross_rep = vec![0u32; index * index];
    for (i, &r) in right.reps.iter().enumerate() {
        for (j, &r2) in right.reps.iter().enumerate() {
            let t = k_grp.mul(r, r2);
            let r_idx = right.coset_of[t] as usize;
            let s = k_grp.mul(t, k_grp.inverse(right.reps[r_idx]));
            let s_pos = h.position_of(s).expect("cross part lies in H");
            cross_sub[i * index + j] = child_input(&child, s, s_pos);
            cross_rep[i * index + j] = r_idx as u32;
        }
    }

    let mut fuse = vec![0u32; m * index];
    for (h_pos, &x) in h.elements().iter().enumerate() {
        for (r_idx, &r) in right.reps.iter().enumerate() {
            fuse[h_pos * index + r_idx] = k_grp.mul(x, r) as u32;
        }
    }

    Ok(GroupDS::Coset(Box::new(CosetNode {
        group_order: n,
        sub_order: m,
        index,
        sub_left,
        sub_right,
        coset_left,
        coset_right,
        flip_sub,
        flip_rep,
        cross_sub,
        cross_rep,
        fuse,
        child,
    })))
}

/// Wraps a child over a normal subgroup N with cyclic quotient. The coset
/// generator g0 is the smallest dense id whose coset generates K/N.
pub fn build_cyclic_node(k_grp: &CayleyGroup, n_sub: &Subgroup, child: GroupDS) -> Result<GroupDS> {
    if child.group_order() != n_sub.order() {
        return Err(Error::ChildMismatch {
            child: child.group_order(),
            sub: n_sub.order(),
        });
    }
    if let Some(w) = normality_witness(k_grp, n_sub) {
        return Err(Error::NotNormal {
            sub: n_sub.order(),
            witness: w as u64 + 1,
        });
    }
    let n = k_grp.order();
    let m = n_sub.order();
    let k = n / m;

    let q = quotient(k_grp, n_sub)?;
    let g0 = (0..n)
        .find(|&g| q.base.elem_order(q.canonical_map[g] as usize) == k)
        .ok_or(Error::QuotientNotCyclic { quotient: k })?;

    // powers of g0 and their inverses
    let mut pow = Vec::with_capacity(2 * k - 1);
    let mut acc = k_grp.identity();
    for _ in 0..(2 * k - 1).max(1) {
        pow.push(acc);
        acc = k_grp.mul(acc, g0);
    }
    let inv_pow: Vec<usize> = pow.iter().map(|&p| k_grp.inverse(p)).collect();

    let mut exponent = vec![0u32; n];
    let mut sub_right = vec![0u32; n];
    let mut sub_left = vec![0u32; n];
    for i in 0..k {
        for &x in n_sub.elements() {
            // g = g0^i * x
            let g = k_grp.mul(pow[i], x);
            exponent[g] = i as u32;
            let pos = n_sub.position_of(x).unwrap();
            sub_right[g] = child_input(&child, x, pos);
            // g = s_L(g) * g0^i
            let s_l = k_grp.mul(g, inv_pow[i]);
            let sl_pos = n_sub.position_of(s_l).expect("left part lies in N");
            sub_left[g] = child_input(&child, s_l, sl_pos);
        }
    }

    let mut flip = vec![0u32; m * k];
    for (pos, &x) in n_sub.elements().iter().enumerate() {
        for i in 0..k {
            // x * g0^i = g0^i * flip(x, i)
            let f = k_grp.mul(inv_pow[i], k_grp.mul(x, pow[i]));
            let f_pos = n_sub.position_of(f).expect("conjugate stays in N");
            flip[pos * k + i] = child_input(&child, f, f_pos);
        }
    }

    let reduce_len = 2 * k - 1;
    let mut reduce_exp = vec![0u32; reduce_len];
    let mut reduce_sub = vec![0u32; reduce_len];
    let id_pos = n_sub.position_of(k_grp.identity()).unwrap();
    for ell in 0..reduce_len {
        if ell < k {
            reduce_exp[ell] = ell as u32;
            reduce_sub[ell] = child_input(&child, k_grp.identity(), id_pos);
        } else {
            // g0^ell = g0^(ell-k) * g0^k, and g0^k lies in N
            reduce_exp[ell] = (ell - k) as u32;
            let tail = k_grp.mul(inv_pow[ell - k], pow[ell]);
            let pos = n_sub.position_of(tail).expect("g0^k lies in N");
            reduce_sub[ell] = child_input(&child, tail, pos);
        }
    }

    let mut fuse = vec![0u32; k * m];
    for i in 0..k {
        for (pos, &x) in n_sub.elements().iter().enumerate() {
            fuse[i * m + pos] = k_grp.mul(pow[i], x) as u32;
        }
    }

    Ok(GroupDS::Cyclic(Box::new(CyclicNode {
        group_order: n,
        sub_order: m,
        k,
        exponent,
        sub_right,
        sub_left,
        flip,
        reduce_exp,
        reduce_sub,
        fuse,
        child,
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::subgroup::closure;

    fn all_pairs_agree(g: &CayleyGroup, ds: &GroupDS) {
        assert_eq!(ds.group_order(), g.order());
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(
                    ds.multiply_dense(a, b),
                    g.mul(a, b),
                    "mismatch at ({a},{b})"
                );
            }
        }
    }

    #[test]
    fn coset_node_over_s3_rotations() {
        let g = gen::symmetric(3).unwrap();
        let r = (0..6).find(|&x| g.elem_order(x) == 3).unwrap();
        let h = closure(&g, &[r]);
        let base = build_base(&g, &h);
        let ds = build_coset_node(&g, &h, base).unwrap();
        all_pairs_agree(&g, &ds);
        assert_eq!(ds.lookup_count(), 15);
    }

    #[test]
    fn coset_node_with_whole_subgroup_degenerates() {
        let g = gen::symmetric(3).unwrap();
        let h = Subgroup::whole(&g);
        let base = build_base(&g, &h);
        let ds = build_coset_node(&g, &h, base).unwrap();
        all_pairs_agree(&g, &ds);
    }

    #[test]
    fn word_count_formula_on_z4_squared() {
        let g = gen::direct_product(&gen::cyclic(4).unwrap(), &gen::cyclic(4).unwrap()).unwrap();
        // an order-4 subgroup
        let x = (0..16).find(|&x| g.elem_order(x) == 4).unwrap();
        let h = closure(&g, &[x]);
        assert_eq!(h.order(), 4);
        let base = build_base(&g, &h);
        let ds = build_coset_node(&g, &h, base).unwrap();
        all_pairs_agree(&g, &ds);
        // base 16+16, arrays 4*16, cross 2*16, flip 2*16, fuse 16
        assert_eq!(ds.word_count(), 176);
        assert_eq!(ds.census(), 176);
    }

    #[test]
    fn cyclic_node_over_z6() {
        let g = gen::cyclic(6).unwrap();
        let n = closure(&g, &[2]); // order 3
        assert_eq!(n.order(), 3);
        let base = build_base(&g, &n);
        let ds = build_cyclic_node(&g, &n, base).unwrap();
        all_pairs_agree(&g, &ds);
        assert_eq!(ds.lookup_count(), 15);
    }

    #[test]
    fn cyclic_node_over_s3_rotations() {
        let g = gen::symmetric(3).unwrap();
        let r = (0..6).find(|&x| g.elem_order(x) == 3).unwrap();
        let n = closure(&g, &[r]);
        let base = build_base(&g, &n);
        let ds = build_cyclic_node(&g, &n, base).unwrap();
        all_pairs_agree(&g, &ds);
    }

    #[test]
    fn cyclic_node_whole_group_trivial_quotient() {
        let g = gen::cyclic(6).unwrap();
        let n = Subgroup::whole(&g);
        let base = build_base(&g, &n);
        let ds = build_cyclic_node(&g, &n, base).unwrap();
        all_pairs_agree(&g, &ds);
    }

    #[test]
    fn cyclic_node_rejects_non_normal() {
        let g = gen::symmetric(3).unwrap();
        let t = (0..6).find(|&x| g.elem_order(x) == 2).unwrap();
        let h = closure(&g, &[t]);
        let base = build_base(&g, &h);
        assert!(matches!(
            build_cyclic_node(&g, &h, base),
            Err(Error::NotNormal { .. })
        ));
    }

    #[test]
    fn cyclic_node_rejects_non_cyclic_quotient() {
        // (Z2 x Z2) / {e} has quotient Z2 x Z2, not cyclic
        let g = gen::direct_product(&gen::cyclic(2).unwrap(), &gen::cyclic(2).unwrap()).unwrap();
        let n = Subgroup::trivial(&g);
        let base = build_base(&g, &n);
        assert!(matches!(
            build_cyclic_node(&g, &n, base),
            Err(Error::QuotientNotCyclic { .. })
        ));
    }

    #[test]
    fn child_mismatch_rejected() {
        let g = gen::cyclic(6).unwrap();
        let n2 = closure(&g, &[3]); // order 2
        let n3 = closure(&g, &[2]); // order 3
        let base = build_base(&g, &n2);
        assert!(matches!(
            build_coset_node(&g, &n3, base),
            Err(Error::ChildMismatch { .. })
        ));
    }

    #[test]
    fn nested_nodes_multiply_correctly() {
        // S4 > D4 (order 8) > Z4 > base, mixing coset and coset layers
        let g = gen::symmetric(4).unwrap();
        let d4 = crate::sylow::sylow_subgroup(&g, 2).unwrap();
        let (d4_grp, d4_map) = crate::subgroup::subgroup_as_group(&g, &d4);
        let z4_local = {
            let x = (0..8).find(|&x| d4_grp.elem_order(x) == 4).unwrap();
            closure(&d4_grp, &[x])
        };
        let base = build_base(&d4_grp, &z4_local);
        let mid = build_coset_node(&d4_grp, &z4_local, base).unwrap();
        all_pairs_agree(&d4_grp, &mid);
        let _ = d4_map;
        let top = build_coset_node(&g, &d4, mid).unwrap();
        all_pairs_agree(&g, &top);
        assert_eq!(top.lookup_count(), 9 + 2 * 15);
        assert_eq!(top.word_count(), top.census());
    }

    #[test]
    fn identity_and_inverse_queries() {
        let g = gen::dihedral(6).unwrap();
        let r = (0..12).find(|&x| g.elem_order(x) == 6).unwrap();
        let h = closure(&g, &[r]);
        let base = build_base(&g, &h);
        let ds = build_coset_node(&g, &h, base).unwrap();
        for x in 0..12 {
            assert_eq!(ds.multiply_dense(g.identity(), x), x);
            assert_eq!(ds.multiply_dense(x, g.inverse(x)), g.identity());
        }
    }

    #[test]
    fn public_multiply_validates_range() {
        let g = gen::cyclic(6).unwrap();
        let n = closure(&g, &[2]);
        let base = build_base(&g, &n);
        let ds = build_cyclic_node(&g, &n, base).unwrap();
        assert!(ds.multiply(0, 1).is_err());
        assert!(ds.multiply(1, 7).is_err());
        assert_eq!(ds.multiply(1, 5).unwrap(), 5);
    }

    #[test]
    fn all_nine_coset_identities_hold_exhaustively() {
        let g = gen::symmetric(4).unwrap();
        let h = crate::sylow::sylow_subgroup(&g, 2).unwrap();
        let ds = build_coset_node(&g, &h, build_base(&g, &h)).unwrap();
        let GroupDS::Coset(c) = &ds else { panic!() };
        let right = crate::subgroup::transversal(&g, &h, Side::Right);
        let left = crate::subgroup::transversal(&g, &h, Side::Left);
        let n = g.order();
        let dense = |v: u32| c.child.normalize_input(v) as usize;

        for e in 0..n {
            // g = s_R(g) * c_R(g) and g = c_L(g) * s_L(g)
            let sr = h.elements()[dense(c.sub_right[e])];
            let r = right.reps[c.coset_right[e] as usize];
            assert_eq!(g.mul(sr, r), e);
            let sl = h.elements()[dense(c.sub_left[e])];
            let l = left.reps[c.coset_left[e] as usize];
            assert_eq!(g.mul(l, sl), e);
        }
        for (li, &l) in left.reps.iter().enumerate() {
            for (hp, &x) in h.elements().iter().enumerate() {
                // l*h = flip_sub * flip_rep
                let fs = h.elements()[dense(c.flip_sub[li * c.sub_order + hp])];
                let fr = right.reps[c.flip_rep[li * c.sub_order + hp] as usize];
                assert_eq!(g.mul(l, x), g.mul(fs, fr));
            }
        }
        for (i, &r) in right.reps.iter().enumerate() {
            for (j, &r2) in right.reps.iter().enumerate() {
                // r*r' = cross_sub * cross_rep
                let cs = h.elements()[dense(c.cross_sub[i * c.index + j])];
                let cr = right.reps[c.cross_rep[i * c.index + j] as usize];
                assert_eq!(g.mul(r, r2), g.mul(cs, cr));
            }
        }
        for (hp, &x) in h.elements().iter().enumerate() {
            for (ri, &r) in right.reps.iter().enumerate() {
                // fuse(h, r) = h*r
                assert_eq!(c.fuse[hp * c.index + ri] as usize, g.mul(x, r));
            }
        }
    }

    #[test]
    fn all_cyclic_identities_hold_exhaustively() {
        let g = gen::symmetric(3).unwrap();
        let r = (0..6).find(|&x| g.elem_order(x) == 3).unwrap();
        let nsub = closure(&g, &[r]);
        let ds = build_cyclic_node(&g, &nsub, build_base(&g, &nsub)).unwrap();
        let GroupDS::Cyclic(c) = &ds else { panic!() };
        let dense = |v: u32| c.child.normalize_input(v) as usize;
        let k = c.k;

        // recover g0 from fuse(1, id) = g0^1 * e
        let id_pos = nsub.position_of(g.identity()).unwrap();
        let g0 = if k > 1 {
            c.fuse[c.sub_order + id_pos] as usize
        } else {
            g.identity()
        };
        let pow = |i: usize| g.power(g0, i);

        for e in 0..g.order() {
            // g = g0^e(g) * s_R(g) = s_L(g) * g0^e(g)
            let exp = c.exponent[e] as usize;
            let sr = nsub.elements()[dense(c.sub_right[e])];
            assert_eq!(g.mul(pow(exp), sr), e);
            let sl = nsub.elements()[dense(c.sub_left[e])];
            assert_eq!(g.mul(sl, pow(exp)), e);
        }
        for (np, &x) in nsub.elements().iter().enumerate() {
            for i in 0..k {
                // n * g0^i = g0^i * flip(n, i)
                let f = nsub.elements()[dense(c.flip[np * k + i])];
                assert_eq!(g.mul(x, pow(i)), g.mul(pow(i), f));
            }
        }
        for ell in 0..(2 * k - 1) {
            // g0^ell = g0^red_e(ell) * red_N(ell), with the identity sub-part
            // below k
            let re = c.reduce_exp[ell] as usize;
            let rn = nsub.elements()[dense(c.reduce_sub[ell])];
            assert_eq!(pow(ell), g.mul(pow(re), rn));
            if ell < k {
                assert_eq!(re, ell);
                assert_eq!(rn, g.identity());
            }
        }
        for i in 0..k {
            for (np, &x) in nsub.elements().iter().enumerate() {
                assert_eq!(c.fuse[i * c.sub_order + np] as usize, g.mul(pow(i), x));
            }
        }
    }

    #[test]
    fn instrumented_count_matches_lookup_count_exactly() {
        let g = gen::symmetric(3).unwrap();
        let r = (0..6).find(|&x| g.elem_order(x) == 3).unwrap();
        let h = closure(&g, &[r]);
        for ds in [
            build_coset_node(&g, &h, build_base(&g, &h)).unwrap(),
            build_cyclic_node(&g, &h, build_base(&g, &h)).unwrap(),
        ] {
            let bound = ds.lookup_count();
            for a in 0..6 {
                for b in 0..6 {
                    let mut c = 0;
                    ds.multiply_counted(a, b, &mut c);
                    assert_eq!(c, bound);
                }
            }
        }
    }
}
