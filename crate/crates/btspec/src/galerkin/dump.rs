use super::SpectralProblem;
use crate::eig::CMatrix;
use crate::error::{Error, Result};
use crate::Cx;
use std::io::{Read, Write};

pub const DUMP_MAGIC: &[u8; 4] = b"BTSP";

/// Condition tag, outer first: e.g. "N", "D,N", "D,T".
pub fn condition_tag(problem: &SpectralProblem) -> String {
    let mut t = problem.domain.outer.tag().to_string();
    if let Some(i) = problem.domain.inner {
        t.push(',');
        t.push_str(i.tag());
    }
    t
}

/// 32-byte header (magic, u32 version = 1, u64 M, f64 h, 8-byte ASCII
/// condition tag), then A row-major as little-endian (re, im) f64 pairs.
pub fn write_matrix_dump<W: Write>(problem: &SpectralProblem, mut w: W) -> Result<()> {
    let a = problem.full_matrix();
    let mut head = Vec::with_capacity(32);
    head.extend_from_slice(DUMP_MAGIC);
    head.extend_from_slice(&1u32.to_le_bytes());
    head.extend_from_slice(&(a.rows() as u64).to_le_bytes());
    head.extend_from_slice(&problem.h.to_le_bytes());
    let mut tag = [b' '; 8];
    for (d, s) in tag.iter_mut().zip(condition_tag(problem).bytes()) {
        *d = s;
    }
    head.extend_from_slice(&tag);
    w.write_all(&head)?;
    let mut buf = Vec::with_capacity(16 * a.cols());
    for i in 0..a.rows() {
        buf.clear();
        for z in a.row(i) {
            buf.extend_from_slice(&z.re.to_le_bytes());
            buf.extend_from_slice(&z.im.to_le_bytes());
        }
        w.write_all(&buf)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads a dump back: (h, condition tag, matrix).
pub fn read_matrix_dump<R: Read>(mut r: R) -> Result<(f64, String, CMatrix)> {
    let mut head = [0u8; 32];
    r.read_exact(&mut head)?;
    if &head[0..4] != DUMP_MAGIC {
        return Err(Error::Invalid("not a matrix dump".into()));
    }
    let m = u64::from_le_bytes(head[8..16].try_into().unwrap()) as usize;
    let h = f64::from_le_bytes(head[16..24].try_into().unwrap());
    let tag = String::from_utf8_lossy(&head[24..32]).trim_end().to_string();
    let mut bytes = vec![0u8; 16 * m * m];
    r.read_exact(&mut bytes)?;
    let data = bytes
        .chunks_exact(16)
        .map(|c| Cx::new(f64::from_le_bytes(c[0..8].try_into().unwrap()), f64::from_le_bytes(c[8..16].try_into().unwrap())))
        .collect();
    Ok((h, tag, CMatrix::from_row_major(m, m, data)))
}
