//! Deterministic group generators for building test corpora: cyclic,
//! dihedral, symmetric, alternating, permutation-generator closures, and
//! direct products.
//!
//! Element numbering is lexicographic on the underlying permutation (or
//! exponent word), so identical recipes produce byte-identical tables and
//! the identity is always element 1.

use crate::cayley::CayleyGroup;
use crate::error::{Error, Result};

/// Generated tables above this order are refused.
pub const MAX_GEN_ORDER: u64 = 6000;

fn guard(order: u64) -> Result<()> {
    if order == 0 || order > MAX_GEN_ORDER {
        return Err(Error::SizeGuard {
            order,
            max: MAX_GEN_ORDER,
        });
    }
    Ok(())
}

/// Z_m with element k+1 representing exponent k.
pub fn cyclic(m: usize) -> Result<CayleyGroup> {
    guard(m as u64)?;
    let mut table = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            table.push(((a + b) % m) as u32);
        }
    }
    CayleyGroup::from_table(m, table)
}

/// Dihedral group of order 2m: symmetries of the m-gon. Elements are
/// numbered by the lexicographic order of their permutation of the m
/// points; products are composed on the (rotation|reflection, offset)
/// parameters so the table fill is O(1) per cell.
pub fn dihedral(m: usize) -> Result<CayleyGroup> {
    guard(2 * m as u64)?;
    if m == 1 {
        return cyclic(2);
    }
    if m == 2 {
        // the action on 2 points is not faithful; the group is Z2 x Z2
        return direct_product(&cyclic(2)?, &cyclic(2)?);
    }
    // (kind, off): kind 0 is x -> x+off, kind 1 is x -> off-x (mod m)
    let images = |kind: usize, off: usize| -> Vec<usize> {
        (0..m)
            .map(|x| if kind == 0 { (x + off) % m } else { (off + m - x) % m })
            .collect()
    };
    let mut elems: Vec<(Vec<usize>, usize, usize)> = Vec::with_capacity(2 * m);
    for kind in 0..2 {
        for off in 0..m {
            elems.push((images(kind, off), kind, off));
        }
    }
    elems.sort();
    let mut index = vec![[0u32; 2]; m]; // index[off][kind]
    for (i, &(_, kind, off)) in elems.iter().enumerate() {
        index[off][kind] = i as u32;
    }
    let n = 2 * m;
    let mut table = Vec::with_capacity(n * n);
    for &(_, ka, oa) in &elems {
        for &(_, kb, ob) in &elems {
            // composition (a*b)(x) = a(b(x))
            let (k, o) = match (ka, kb) {
                (0, 0) => (0, (oa + ob) % m),
                (0, 1) => (1, (oa + ob) % m),
                (1, 0) => (1, (oa + m - ob) % m),
                (1, 1) => (0, (oa + m - ob) % m),
                _ => unreachable!(),
            };
            table.push(index[o][k]);
        }
    }
    CayleyGroup::from_table(n, table)
}

/// S_m: all permutations in lexicographic order.
pub fn symmetric(m: usize) -> Result<CayleyGroup> {
    let order = factorial_checked(m)?;
    guard(order)?;
    let perms = all_perms(m, None);
    table_from_perms(&perms)
}

/// A_m: even permutations in lexicographic order.
pub fn alternating(m: usize) -> Result<CayleyGroup> {
    let order = if m < 2 { 1 } else { factorial_checked(m)? / 2 };
    guard(order)?;
    let perms = all_perms(m, Some(true));
    table_from_perms(&perms)
}

fn factorial_checked(m: usize) -> Result<u64> {
    let mut f: u64 = 1;
    for i in 2..=m as u64 {
        f = f.checked_mul(i).ok_or(Error::SizeGuard {
            order: u64::MAX,
            max: MAX_GEN_ORDER,
        })?;
        if f > MAX_GEN_ORDER * 2 {
            return Err(Error::SizeGuard {
                order: f,
                max: MAX_GEN_ORDER,
            });
        }
    }
    Ok(f)
}

fn all_perms(m: usize, parity: Option<bool>) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        let keep = match parity {
            None => true,
            Some(even) => perm_is_even(&cur) == even,
        };
        if keep {
            out.push(cur.clone());
        }
        // next_permutation in lex order
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

fn perm_is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

/// (p*q)(x) = p(q(x)): apply q first, then p.
fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

fn table_from_perms(perms: &[Vec<usize>]) -> Result<CayleyGroup> {
    let n = perms.len();
    let mut index = std::collections::HashMap::with_capacity(n);
    for (i, p) in perms.iter().enumerate() {
        index.insert(p.clone(), i as u32);
    }
    let mut table = Vec::with_capacity(n * n);
    for a in perms {
        for b in perms {
            let c = compose(a, b);
            table.push(*index.get(&c).expect("closed under composition"));
        }
    }
    CayleyGroup::from_table(n, table)
}

/// Closure of explicit generator permutations on `degree` points.
pub fn from_perm_gens(degree: usize, gens: &[Vec<usize>]) -> Result<CayleyGroup> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = std::collections::HashSet::new();
    let mut elems = vec![id.clone()];
    seen.insert(id);
    let mut head = 0;
    while head < elems.len() {
        let cur = elems[head].clone();
        head += 1;
        for gsi in gens {
            let next = compose(&cur, gsi);
            if seen.insert(next.clone()) {
                if elems.len() as u64 >= MAX_GEN_ORDER {
                    return Err(Error::SizeGuard {
                        order: elems.len() as u64 + 1,
                        max: MAX_GEN_ORDER,
                    });
                }
                elems.push(next);
            }
        }
    }
    elems.sort();
    table_from_perms(&elems)
}

/// Parses one generator per line in disjoint-cycle notation, e.g.
/// `(1 2 3)(4 5)`. Points are 1-based; cycles on a line must be disjoint.
pub fn parse_perm_gens(text: &str) -> Result<(usize, Vec<Vec<usize>>)> {
    let mut cycles_per_gen: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut degree = 0usize;
    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut cycles = Vec::new();
        let mut rest = line;
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                return Err(Error::PermParse {
                    line: line_no,
                    msg: format!("expected '(' at {rest:?}"),
                });
            };
            if !rest[..open].trim().is_empty() {
                return Err(Error::PermParse {
                    line: line_no,
                    msg: format!("unexpected text before cycle: {:?}", &rest[..open]),
                });
            }
            let close = rest.find(')').ok_or(Error::PermParse {
                line: line_no,
                msg: "unclosed cycle".into(),
            })?;
            let body = &rest[open + 1..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let p: usize = tok.parse().map_err(|_| Error::PermParse {
                    line: line_no,
                    msg: format!("bad point {tok:?}"),
                })?;
                if p == 0 {
                    return Err(Error::PermParse {
                        line: line_no,
                        msg: "points are 1-based".into(),
                    });
                }
                degree = degree.max(p);
                cycle.push(p - 1);
            }
            if cycle.is_empty() {
                return Err(Error::PermParse {
                    line: line_no,
                    msg: "empty cycle".into(),
                });
            }
            cycles.push(cycle);
            rest = &rest[close + 1..];
        }
        if cycles.is_empty() {
            return Err(Error::PermParse {
                line: line_no,
                msg: "no cycles on line".into(),
            });
        }
        // disjointness within one generator line
        let mut used = std::collections::HashSet::new();
        for cycle in &cycles {
            for &p in cycle {
                if !used.insert(p) {
                    return Err(Error::PermParse {
                        line: line_no,
                        msg: format!("point {} repeated; cycles must be disjoint", p + 1),
                    });
                }
            }
        }
        cycles_per_gen.push(cycles);
    }
    if cycles_per_gen.is_empty() {
        return Err(Error::PermParse {
            line: 0,
            msg: "no generators".into(),
        });
    }
    let gens = cycles_per_gen
        .into_iter()
        .map(|cycles| {
            let mut perm: Vec<usize> = (0..degree).collect();
            for cycle in cycles {
                for w in 0..cycle.len() {
                    perm[cycle[w]] = cycle[(w + 1) % cycle.len()];
                }
            }
            perm
        })
        .collect();
    Ok((degree, gens))
}

/// Closure of the generators in a perm-gens text.
pub fn from_perm_gens_text(text: &str) -> Result<CayleyGroup> {
    let (degree, gens) = parse_perm_gens(text)?;
    from_perm_gens(degree, &gens)
}

/// Direct product with numbering (a, b) -> (a-1)*n2 + b.
pub fn direct_product(a: &CayleyGroup, b: &CayleyGroup) -> Result<CayleyGroup> {
    let (n1, n2) = (a.order(), b.order());
    guard(n1 as u64 * n2 as u64)?;
    let n = n1 * n2;
    let mut table = Vec::with_capacity(n * n);
    for x in 0..n {
        let (xa, xb) = (x / n2, x % n2);
        for y in 0..n {
            let (ya, yb) = (y / n2, y % n2);
            table.push((a.mul(xa, ya) * n2 + b.mul(xb, yb)) as u32);
        }
    }
    CayleyGroup::from_table(n, table)
}

/// Quaternion generators on 8 points (regular action of i and j).
pub const Q8_GENS: &str = "(1 3 2 4)(5 8 6 7)\n(1 5 2 6)(3 7 4 8)\n";

/// PSL(2,7) on the 8 points of the projective line over F_7:
/// x -> x+1 and x -> -1/x.
pub const PSL_2_7_GENS: &str = "(1 2 3 4 5 6 7)\n(1 8)(2 7)(3 4)(5 6)\n";

/// PSL(2,8) on 9 points: x -> x+1, x -> tx (t a generator of F_8*), x -> 1/x.
pub const PSL_2_8_GENS: &str = "(1 2)(3 4)(5 6)(7 8)\n(2 3 5 4 7 8 6)\n(1 9)(3 6)(5 8)(4 7)\n";

/// PSL(2,11) on 12 points: x -> x+1 and x -> -1/x.
pub const PSL_2_11_GENS: &str =
    "(1 2 3 4 5 6 7 8 9 10 11)\n(1 12)(2 11)(3 6)(4 8)(5 9)(7 10)\n";
