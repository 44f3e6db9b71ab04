//! A finite group stored as its full multiplication table.
//!
//! Elements are dense 0-based indices internally; the text format and every
//! CLI surface use 1-based ids, converted exactly once at the I/O boundary.

use crate::error::{Error, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Above this order a full associativity sweep is cubic and too slow; sample
/// this many random triples instead (identity/inverse checks stay exhaustive).
pub const FULL_ASSOC_LIMIT: usize = 512;
const SAMPLED_TRIPLES: usize = 1_000_000;
const ASSOC_SAMPLE_SEED: u64 = 0x5eed_a550c;

/// A finite group of order `n` backed by its `n x n` Cayley table.
#[derive(Clone)]
pub struct CayleyGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverses: Vec<u32>,
}

impl std::fmt::Debug for CayleyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CayleyGroup")
            .field("order", &self.order)
            .field("identity", &(self.identity + 1))
            .finish_non_exhaustive()
    }
}

impl CayleyGroup {
    /// Validates the group axioms on a raw row-major table of dense indices
    /// and computes the identity and inverse map.
    pub fn from_table(order: usize, table: Vec<u32>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Axiom("empty table".into()));
        }
        if table.len() != order * order {
            return Err(Error::Axiom(format!(
                "table has {} cells, expected {}",
                table.len(),
                order * order
            )));
        }
        for &c in &table {
            if c as usize >= order {
                return Err(Error::Axiom(format!(
                    "cell value {} out of range 1..={order}",
                    c as u64 + 1
                )));
            }
        }

        // Identity is detected, not assumed: input files may label arbitrarily.
        let mut identity = None;
        'outer: for e in 0..order {
            for g in 0..order {
                if table[e * order + g] as usize != g || table[g * order + e] as usize != g {
                    continue 'outer;
                }
            }
            identity = Some(e);
            break;
        }
        let identity = identity.ok_or_else(|| Error::Axiom("no identity element".into()))?;

        let mut inverses = vec![0u32; order];
        for g in 0..order {
            let row = &table[g * order..(g + 1) * order];
            let inv = row.iter().position(|&c| c as usize == identity);
            match inv {
                None => {
                    return Err(Error::Axiom(format!("no inverse for element {}", g + 1)));
                }
                Some(h) => {
                    if table[h * order + g] as usize != identity {
                        return Err(Error::Axiom(format!(
                            "left inverse law fails: {}*{} != e",
                            h + 1,
                            g + 1
                        )));
                    }
                    inverses[g] = h as u32;
                }
            }
        }

        let grp = CayleyGroup {
            order,
            table,
            identity,
            inverses,
        };
        grp.check_associativity()?;
        Ok(grp)
    }

    /// For tables that are groups by construction (subgroup extractions,
    /// coset tables of normal subgroups): detects identity and inverses but
    /// skips the associativity sweep.
    pub(crate) fn from_table_trusted(order: usize, table: Vec<u32>) -> Result<Self> {
        let mut identity = None;
        'outer: for e in 0..order {
            for g in 0..order {
                if table[e * order + g] as usize != g || table[g * order + e] as usize != g {
                    continue 'outer;
                }
            }
            identity = Some(e);
            break;
        }
        let identity = identity.ok_or_else(|| Error::Axiom("no identity element".into()))?;
        let mut inverses = vec![0u32; order];
        for g in 0..order {
            let row = &table[g * order..(g + 1) * order];
            let h = row
                .iter()
                .position(|&c| c as usize == identity)
                .ok_or_else(|| Error::Axiom(format!("no inverse for element {}", g + 1)))?;
            inverses[g] = h as u32;
        }
        Ok(CayleyGroup {
            order,
            table,
            identity,
            inverses,
        })
    }

    /// Full check up to [`FULL_ASSOC_LIMIT`], sampled triples above.
    fn check_associativity(&self) -> Result<()> {
        let n = self.order;
        let check = |a: usize, b: usize, c: usize| -> Result<()> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(Error::Axiom(format!(
                    "associativity fails at ({}, {}, {})",
                    a + 1,
                    b + 1,
                    c + 1
                )));
            }
            Ok(())
        };
        if n <= FULL_ASSOC_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SAMPLE_SEED);
            for _ in 0..SAMPLED_TRIPLES {
                check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
            }
        }
        Ok(())
    }

    /// Parses the Cayley-table text format: `#` comment lines, a line with
    /// `n`, then `n` rows of `n` whitespace-separated ids in `1..=n`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (line_no, first) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "empty file".into(),
        })?;
        let order: usize = first.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("expected group order, got {first:?}"),
        })?;
        if order == 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: "group order must be positive".into(),
            });
        }

        let mut table = Vec::with_capacity(order * order);
        for _ in 0..order {
            let (line_no, row) = lines.next().ok_or(Error::Parse {
                line: line_no,
                msg: format!("expected {order} table rows"),
            })?;
            let mut count = 0;
            for tok in row.split_whitespace() {
                let v: usize = tok.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("bad element id {tok:?}"),
                })?;
                if v == 0 || v > order {
                    return Err(Error::Parse {
                        line: line_no,
                        msg: format!("element id {v} out of range 1..={order}"),
                    });
                }
                table.push((v - 1) as u32);
                count += 1;
            }
            if count != order {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("row has {count} entries, expected {order}"),
                });
            }
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing content after table".into(),
            });
        }
        Self::from_table(order, table)
    }

    /// Emits the text format (1-based ids).
    pub fn to_table_string(&self) -> String {
        let n = self.order;
        let mut out = String::with_capacity(n * n * 3 + 16);
        out.push_str(&n.to_string());
        out.push('\n');
        for a in 0..n {
            let mut first = true;
            for b in 0..n {
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&(self.mul(a, b) + 1).to_string());
            }
            out.push('\n');
        }
        out
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    /// Converts a 1-based external id, validating range.
    pub fn elem_from_id(&self, id: u64) -> Result<usize> {
        if id == 0 || id > self.order as u64 {
            return Err(Error::IdOutOfRange {
                id,
                order: self.order,
            });
        }
        Ok((id - 1) as usize)
    }

    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inverse(g))
    }

    pub fn elem_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn power(&self, a: usize, mut k: usize) -> usize {
        let mut acc = self.identity;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        for a in 0..n {
            for b in (a + 1)..n {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// One representative per conjugacy class, ascending by smallest member.
    pub fn conjugacy_class_reps(&self) -> Vec<usize> {
        let n = self.order;
        let mut seen = vec![false; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            reps.push(x);
            for g in 0..n {
                seen[self.conjugate(g, x)] = true;
            }
        }
        reps
    }

    /// All conjugates of `x`, deduplicated, ascending.
    pub fn conjugacy_class(&self, x: usize) -> Vec<usize> {
        let mut in_class = vec![false; self.order];
        for g in 0..self.order {
            in_class[self.conjugate(g, x)] = true;
        }
        (0..self.order).filter(|&y| in_class[y]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z3_text() -> &'static str {
        "3\n1 2 3\n2 3 1\n3 1 2\n"
    }

    #[test]
    fn parses_z3() {
        let g = CayleyGroup::parse(z3_text()).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.identity(), 0);
        // inverses as 1-based ids: [1, 3, 2]
        let inv: Vec<usize> = (0..3).map(|a| g.inverse(a) + 1).collect();
        assert_eq!(inv, vec![1, 3, 2]);
    }

    #[test]
    fn rejects_missing_inverse() {
        let err = CayleyGroup::parse("2\n1 2\n2 2\n").unwrap_err();
        match err {
            Error::Axiom(msg) => assert_eq!(msg, "no inverse for element 2"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_non_associative() {
        // Latin square with two-sided identity and inverses but no associativity:
        // smallest such loop has order 5.
        let rows = [
            [1, 2, 3, 4, 5],
            [2, 1, 4, 5, 3],
            [3, 5, 1, 2, 4],
            [4, 3, 5, 1, 2],
            [5, 4, 2, 3, 1],
        ];
        let cells: Vec<u32> = rows.iter().flatten().map(|&v| v as u32 - 1).collect();
        let err = CayleyGroup::from_table(5, cells).unwrap_err();
        assert!(matches!(err, Error::Axiom(ref m) if m.starts_with("associativity")));
    }

    #[test]
    fn rejects_out_of_range_cell() {
        let err = CayleyGroup::parse("2\n1 2\n2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn comments_and_crlf_accepted() {
        let g = CayleyGroup::parse("# cyclic of order 3\r\n3\r\n1 2 3\r\n2 3 1\r\n3 1 2\r\n").unwrap();
        assert_eq!(g.order(), 3);
    }

    #[test]
    fn identity_is_detected_not_assumed() {
        // Z2 relabeled so the identity is element 2.
        let g = CayleyGroup::parse("2\n2 1\n1 2\n").unwrap();
        assert_eq!(g.identity(), 1);
    }

    #[test]
    fn element_orders_in_z6() {
        let g = crate::gen::cyclic(6).unwrap();
        let orders: Vec<usize> = (0..6).map(|a| g.elem_order(a)).collect();
        assert_eq!(orders, vec![1, 6, 3, 2, 3, 6]);
    }

    #[test]
    fn round_trip_table_text() {
        let g = crate::gen::dihedral(4).unwrap();
        let text = g.to_table_string();
        let h = CayleyGroup::parse(&text).unwrap();
        assert_eq!(h.to_table_string(), text);
    }
}
