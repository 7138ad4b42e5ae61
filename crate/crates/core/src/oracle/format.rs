//! Binary oracle file. All integers little-endian.
//!
//! | bytes          | field                                                   |
//! |----------------|---------------------------------------------------------|
//! | 8              | magic `ADSPORCL`                                        |
//! | 4 (u32)        | format version, currently 1                             |
//! | 4 (u32)        | `n`                                                     |
//! | 4 (u32)        | `ℓ`                                                     |
//! | 4 (u32)        | `t`                                                     |
//! | 4·ℓ (u32)      | centers                                                 |
//! | 16·n (u32)     | portals, four cluster indices per node; absent if ℓ = 0 |
//! | 4·n·ℓ (u32)    | tree depths, one row of ℓ per node                      |
//! | 4·n·ℓ (u32)    | spanner distances, same layout                          |
//! | 8 (u64)        | residual edge count `r`                                 |
//! | 8·r (u32, u32) | residual edges, sorted `(min, max)` pairs               |
//!
//! Distances equal to `0xFFFF_FFFF` mean infinity.

use std::io::{Read, Write};

use super::{DistanceOracle, ExactSubgraphOracle, OracleError};
use crate::graph::EdgeSet;

pub const MAGIC: &[u8; 8] = b"ADSPORCL";
pub const FORMAT_VERSION: u32 = 1;

fn put_u32<W: Write>(w: &mut W, x: u32) -> std::io::Result<()> {
    w.write_all(&x.to_le_bytes())
}

fn narrow(x: usize, what: &str) -> Result<u32, OracleError> {
    u32::try_from(x).map_err(|_| OracleError::Format(format!("{what} {x} does not fit in 32 bits")))
}

pub fn write_oracle<S, W: Write>(o: &DistanceOracle<S>, mut w: W) -> Result<(), OracleError> {
    w.write_all(MAGIC)?;
    put_u32(&mut w, FORMAT_VERSION)?;
    put_u32(&mut w, narrow(o.n, "n")?)?;
    put_u32(&mut w, narrow(o.ell(), "ell")?)?;
    put_u32(&mut w, narrow(o.t, "t")?)?;
    for &c in &o.centers {
        put_u32(&mut w, narrow(c, "center")?)?;
    }
    for p in &o.portals {
        for &x in p {
            put_u32(&mut w, x)?;
        }
    }
    for &d in o.tree_dist.iter().chain(&o.spanner_dist) {
        put_u32(&mut w, d)?;
    }
    w.write_all(&(o.residual.len() as u64).to_le_bytes())?;
    for (u, v) in o.residual.sorted() {
        put_u32(&mut w, narrow(u, "node")?)?;
        put_u32(&mut w, narrow(v, "node")?)?;
    }
    w.flush()?;
    Ok(())
}

struct Reader<R> {
    inner: R,
}

impl<R: Read> Reader<R> {
    fn u32(&mut self) -> Result<u32, OracleError> {
        let mut b = [0u8; 4];
        self.inner.read_exact(&mut b).map_err(truncated)?;
        Ok(u32::from_le_bytes(b))
    }

    fn u64(&mut self) -> Result<u64, OracleError> {
        let mut b = [0u8; 8];
        self.inner.read_exact(&mut b).map_err(truncated)?;
        Ok(u64::from_le_bytes(b))
    }

    fn u32s(&mut self, count: usize) -> Result<Vec<u32>, OracleError> {
        let mut bytes = vec![0u8; count * 4];
        self.inner.read_exact(&mut bytes).map_err(truncated)?;
        Ok(bytes.chunks_exact(4).map(|c| u32::from_le_bytes([c[0], c[1], c[2], c[3]])).collect())
    }
}

fn truncated(e: std::io::Error) -> OracleError {
    if e.kind() == std::io::ErrorKind::UnexpectedEof {
        OracleError::Format("unexpected end of file".into())
    } else {
        OracleError::Io(e)
    }
}

/// Reads an oracle and rebuilds the exact residual sub-oracle, tabulated
/// when `n <= table_threshold`.
pub fn read_oracle<R: Read>(r: R, table_threshold: usize) -> Result<DistanceOracle, OracleError> {
    let mut r = Reader { inner: r };
    let mut magic = [0u8; 8];
    r.inner.read_exact(&mut magic).map_err(truncated)?;
    if &magic != MAGIC {
        return Err(OracleError::Format("bad magic".into()));
    }
    let version = r.u32()?;
    if version != FORMAT_VERSION {
        return Err(OracleError::Format(format!("unsupported version {version}")));
    }
    let n = r.u32()? as usize;
    let ell = r.u32()? as usize;
    let t = r.u32()? as usize;
    let centers: Vec<usize> = r.u32s(ell)?.into_iter().map(|c| c as usize).collect();
    if let Some(&c) = centers.iter().find(|&&c| c >= n) {
        return Err(OracleError::Format(format!("center {c} out of range")));
    }
    let portals = if ell > 0 {
        let flat = r.u32s(4 * n)?;
        if let Some(&p) = flat.iter().find(|&&p| p as usize >= ell) {
            return Err(OracleError::Format(format!("portal index {p} out of range")));
        }
        flat.chunks_exact(4).map(|c| [c[0], c[1], c[2], c[3]]).collect()
    } else {
        Vec::new()
    };
    let tree_dist = r.u32s(n * ell)?;
    let spanner_dist = r.u32s(n * ell)?;
    let m = r.u64()? as usize;
    let flat = r.u32s(2 * m)?;
    let mut residual = EdgeSet::new();
    for e in flat.chunks_exact(2) {
        let (u, v) = (e[0] as usize, e[1] as usize);
        if u >= n || v >= n || u == v {
            return Err(OracleError::Format(format!("bad residual edge ({u}, {v})")));
        }
        residual.insert(u, v);
    }
    let mut rest = [0u8; 1];
    if r.inner.read(&mut rest)? != 0 {
        return Err(OracleError::Format("trailing bytes".into()));
    }
    let sub = ExactSubgraphOracle::with_threshold(&residual, n, table_threshold);
    Ok(DistanceOracle { n, t, centers, tree_dist, spanner_dist, portals, residual, sub })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::oracle::{build_oracle, DEFAULT_TABLE_THRESHOLD};

    fn roundtrip(g: &crate::graph::Graph) {
        let o = build_oracle(g).unwrap();
        let mut buf = Vec::new();
        write_oracle(&o, &mut buf).unwrap();
        let ell = o.ell();
        let n = o.n;
        let portal_bytes = if ell > 0 { 16 * n } else { 0 };
        assert_eq!(buf.len(), 24 + 4 * ell + portal_bytes + 8 * n * ell + 8 + 8 * o.residual.len());
        let back = read_oracle(buf.as_slice(), DEFAULT_TABLE_THRESHOLD).unwrap();
        assert_eq!(back.centers, o.centers);
        assert_eq!(back.portals, o.portals);
        assert_eq!(back.tree_dist, o.tree_dist);
        assert_eq!(back.spanner_dist, o.spanner_dist);
        assert_eq!(back.all_pairs_estimates(), o.all_pairs_estimates());
    }

    #[test]
    fn roundtrips() {
        roundtrip(&generate(&Family::Gnm { n: 90, m: 900 }, 5).unwrap());
        roundtrip(&generate(&Family::Path { n: 7 }, 0).unwrap());
    }

    #[test]
    fn header_layout() {
        let o = build_oracle(&generate(&Family::Complete { n: 9 }, 0).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_oracle(&o, &mut buf).unwrap();
        assert_eq!(&buf[..8], b"ADSPORCL");
        assert_eq!(&buf[8..12], &1u32.to_le_bytes());
        assert_eq!(&buf[12..16], &9u32.to_le_bytes());
        assert_eq!(&buf[16..20], &1u32.to_le_bytes());
        assert_eq!(&buf[20..24], &3u32.to_le_bytes());
    }

    #[test]
    fn rejects_garbage() {
        assert!(matches!(read_oracle(&b"NOTANORACLE....."[..], 16), Err(OracleError::Format(_))));
        let o = build_oracle(&generate(&Family::Star { n: 12 }, 0).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_oracle(&o, &mut buf).unwrap();
        assert!(matches!(read_oracle(&buf[..buf.len() - 3], 16), Err(OracleError::Format(_))));
        buf.push(0);
        assert!(matches!(read_oracle(buf.as_slice(), 16), Err(OracleError::Format(_))));
    }
}
