//! Binary container for built structures: magic "GDS1", then a canonical
//! pre-order tree encoding with node tags {0 = base, 1 = coset, 2 = cyclic},
//! little-endian u32 cells, and length-prefixed arrays.

use crate::ds::{BaseTable, CosetNode, CyclicNode, GroupDS};
use crate::error::{Error, Result};

pub const MAGIC: &[u8; 4] = b"GDS1";
const TAG_BASE: u8 = 0;
const TAG_COSET: u8 = 1;
const TAG_CYCLIC: u8 = 2;

/// Identity samples re-checked per node when loading.
const VALIDATE_SAMPLES: usize = 1000;

pub fn serialize(ds: &GroupDS) -> Vec<u8> {
    let mut out = Vec::with_capacity(16 + ds.word_count() as usize * 4);
    out.extend_from_slice(MAGIC);
    write_node(ds, &mut out);
    out
}

fn write_arr(arr: &[u32], out: &mut Vec<u8>) {
    out.extend_from_slice(&(arr.len() as u32).to_le_bytes());
    for &v in arr {
        out.extend_from_slice(&v.to_le_bytes());
    }
}

fn write_node(ds: &GroupDS, out: &mut Vec<u8>) {
    match ds {
        GroupDS::Base(b) => {
            out.push(TAG_BASE);
            out.extend_from_slice(&(b.sub_order as u32).to_le_bytes());
            out.extend_from_slice(&(b.input_size as u32).to_le_bytes());
            write_arr(&b.table, out);
            write_arr(&b.to_local, out);
        }
        GroupDS::Coset(c) => {
            out.push(TAG_COSET);
            for v in [c.group_order, c.sub_order, c.index] {
                out.extend_from_slice(&(v as u32).to_le_bytes());
            }
            for arr in [
                &c.sub_left,
                &c.sub_right,
                &c.coset_left,
                &c.coset_right,
                &c.flip_sub,
                &c.flip_rep,
                &c.cross_sub,
                &c.cross_rep,
                &c.fuse,
            ] {
                write_arr(arr, out);
            }
            write_node(&c.child, out);
        }
        GroupDS::Cyclic(c) => {
            out.push(TAG_CYCLIC);
            for v in [c.group_order, c.sub_order, c.k] {
                out.extend_from_slice(&(v as u32).to_le_bytes());
            }
            for arr in [
                &c.exponent,
                &c.sub_right,
                &c.sub_left,
                &c.flip,
                &c.reduce_exp,
                &c.reduce_sub,
                &c.fuse,
            ] {
                write_arr(arr, out);
            }
            write_node(&c.child, out);
        }
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn u8(&mut self) -> Result<u8> {
        let v = *self
            .buf
            .get(self.pos)
            .ok_or_else(|| Error::Corrupt("truncated file".into()))?;
        self.pos += 1;
        Ok(v)
    }

    fn u32(&mut self) -> Result<u32> {
        let end = self.pos + 4;
        let bytes = self
            .buf
            .get(self.pos..end)
            .ok_or_else(|| Error::Corrupt("truncated file".into()))?;
        self.pos = end;
        Ok(u32::from_le_bytes(bytes.try_into().unwrap()))
    }

    fn arr(&mut self, expected_len: usize) -> Result<Vec<u32>> {
        let len = self.u32()? as usize;
        if len != expected_len {
            return Err(Error::Corrupt(format!(
                "array length {len}, expected {expected_len}"
            )));
        }
        let mut out = Vec::with_capacity(len);
        for _ in 0..len {
            out.push(self.u32()?);
        }
        Ok(out)
    }
}

pub fn deserialize(bytes: &[u8]) -> Result<GroupDS> {
    if bytes.len() < 4 {
        return Err(Error::Corrupt("shorter than the magic".into()));
    }
    if &bytes[..4] != MAGIC {
        return Err(Error::Version(
            String::from_utf8_lossy(&bytes[..4]).into_owned(),
        ));
    }
    let mut r = Reader { buf: bytes, pos: 4 };
    let ds = read_node(&mut r)?;
    if r.pos != bytes.len() {
        return Err(Error::Corrupt("trailing bytes after tree".into()));
    }
    ds.validate_sample(VALIDATE_SAMPLES)?;
    Ok(ds)
}

fn check_cells(arr: &[u32], bound: u32, what: &str) -> Result<()> {
    if arr.iter().any(|&v| v >= bound) {
        return Err(Error::Corrupt(format!("{what} cell out of range")));
    }
    Ok(())
}

fn read_node(r: &mut Reader) -> Result<GroupDS> {
    match r.u8()? {
        TAG_BASE => {
            let sub_order = r.u32()? as usize;
            let input_size = r.u32()? as usize;
            if sub_order == 0 || input_size < sub_order {
                return Err(Error::Corrupt("bad base dimensions".into()));
            }
            let table = r.arr(sub_order * sub_order)?;
            let to_local = r.arr(input_size)?;
            check_cells(&table, sub_order as u32, "base table")?;
            if to_local
                .iter()
                .filter(|&&v| v != u32::MAX)
                .count() != sub_order
            {
                return Err(Error::Corrupt("base to_local coverage".into()));
            }
            Ok(GroupDS::Base(BaseTable {
                sub_order,
                input_size,
                to_local,
                table,
            }))
        }
        TAG_COSET => {
            let group_order = r.u32()? as usize;
            let sub_order = r.u32()? as usize;
            let index = r.u32()? as usize;
            if sub_order == 0 || sub_order * index != group_order {
                return Err(Error::Corrupt("bad coset dimensions".into()));
            }
            let sub_left = r.arr(group_order)?;
            let sub_right = r.arr(group_order)?;
            let coset_left = r.arr(group_order)?;
            let coset_right = r.arr(group_order)?;
            let flip_sub = r.arr(index * sub_order)?;
            let flip_rep = r.arr(index * sub_order)?;
            let cross_sub = r.arr(index * index)?;
            let cross_rep = r.arr(index * index)?;
            let fuse = r.arr(sub_order * index)?;
            check_cells(&coset_left, index as u32, "coset_left")?;
            check_cells(&coset_right, index as u32, "coset_right")?;
            check_cells(&flip_rep, index as u32, "flip_rep")?;
            check_cells(&cross_rep, index as u32, "cross_rep")?;
            check_cells(&fuse, group_order as u32, "fuse")?;
            let child = read_node(r)?;
            if child.group_order() != sub_order {
                return Err(Error::Corrupt("child order mismatch".into()));
            }
            let cb = child.input_bound() as u32;
            check_cells(&sub_left, cb, "sub_left")?;
            check_cells(&sub_right, cb, "sub_right")?;
            check_cells(&flip_sub, cb, "flip_sub")?;
            check_cells(&cross_sub, cb, "cross_sub")?;
            Ok(GroupDS::Coset(Box::new(CosetNode {
                group_order,
                sub_order,
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
        TAG_CYCLIC => {
            let group_order = r.u32()? as usize;
            let sub_order = r.u32()? as usize;
            let k = r.u32()? as usize;
            if sub_order == 0 || sub_order * k != group_order {
                return Err(Error::Corrupt("bad cyclic dimensions".into()));
            }
            let exponent = r.arr(group_order)?;
            let sub_right = r.arr(group_order)?;
            let sub_left = r.arr(group_order)?;
            let flip = r.arr(sub_order * k)?;
            let reduce_exp = r.arr(2 * k - 1)?;
            let reduce_sub = r.arr(2 * k - 1)?;
            let fuse = r.arr(k * sub_order)?;
            check_cells(&exponent, k as u32, "exponent")?;
            check_cells(&reduce_exp, k as u32, "reduce_exp")?;
            check_cells(&fuse, group_order as u32, "fuse")?;
            let child = read_node(r)?;
            if child.group_order() != sub_order {
                return Err(Error::Corrupt("child order mismatch".into()));
            }
            let cb = child.input_bound() as u32;
            check_cells(&sub_right, cb, "sub_right")?;
            check_cells(&sub_left, cb, "sub_left")?;
            check_cells(&flip, cb, "flip")?;
            check_cells(&reduce_sub, cb, "reduce_sub")?;
            Ok(GroupDS::Cyclic(Box::new(CyclicNode {
                group_order,
                sub_order,
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
        tag => Err(Error::Corrupt(format!("unknown node tag {tag}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ds::{build_base, build_coset_node, build_cyclic_node};
    use crate::gen;
    use crate::subgroup::closure;

    fn z6_ds() -> (crate::cayley::CayleyGroup, GroupDS) {
        let g = gen::cyclic(6).unwrap();
        let n = closure(&g, &[2]);
        let base = build_base(&g, &n);
        let ds = build_cyclic_node(&g, &n, base).unwrap();
        (g, ds)
    }

    #[test]
    fn round_trip_is_byte_identical() {
        let (_, ds) = z6_ds();
        let bytes = serialize(&ds);
        let back = deserialize(&bytes).unwrap();
        assert_eq!(serialize(&back), bytes);
    }

    #[test]
    fn round_trip_preserves_all_products() {
        let g = gen::symmetric(4).unwrap();
        let d4 = crate::sylow::sylow_subgroup(&g, 2).unwrap();
        let ds = build_coset_node(&g, &d4, build_base(&g, &d4)).unwrap();
        let back = deserialize(&serialize(&ds)).unwrap();
        for a in 0..24 {
            for b in 0..24 {
                assert_eq!(back.multiply_dense(a, b), g.mul(a, b));
            }
        }
    }

    #[test]
    fn truncated_file_is_corrupt() {
        let (_, ds) = z6_ds();
        let bytes = serialize(&ds);
        let err = deserialize(&bytes[..bytes.len() - 5]).unwrap_err();
        assert!(matches!(err, Error::Corrupt(_)));
    }

    #[test]
    fn wrong_magic_is_version_error() {
        let (_, ds) = z6_ds();
        let mut bytes = serialize(&ds);
        bytes[3] = b'2';
        assert!(matches!(deserialize(&bytes), Err(Error::Version(_))));
    }

    #[test]
    fn flipped_fuse_cell_fails_identity_sample() {
        let (_, ds) = z6_ds();
        let mut bytes = serialize(&ds);
        // cyclic node header: magic(4) + tag(1) + 3*u32 dims; first array is
        // exponent (len 6), then sub_right, sub_left, flip, reduce_*, fuse.
        // Corrupt the last u32 of the file body before the child instead:
        // swap two fuse cells by brute force: flip a byte late in the stream
        // until deserialization fails the identity check (skipping positions
        // that fail structurally).
        let mut saw_identity_failure = false;
        for pos in (20..bytes.len()).rev() {
            let orig = bytes[pos];
            bytes[pos] ^= 1;
            match deserialize(&bytes) {
                Err(Error::Corrupt(msg)) if msg.contains("identity") => {
                    saw_identity_failure = true;
                    bytes[pos] = orig;
                    break;
                }
                _ => bytes[pos] = orig,
            }
        }
        assert!(saw_identity_failure);
    }
}
