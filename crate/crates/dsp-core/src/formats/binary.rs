//! Binary embedding matrix format.
//!
//! Layout: 4 magic bytes `EMB1`, u32 LE row count n, u32 LE column
//! count d, then n*d IEEE-754 binary32 LE values row-major. The header
//! must match the payload length exactly; trailing bytes are an error.
//! Values are widened to f64 on read and narrowed on write.

use crate::formats::FormatError;
use crate::types::EmbeddingSequence;

pub const MAGIC: [u8; 4] = *b"EMB1";

pub fn read_embedding_binary(bytes: &[u8]) -> Result<EmbeddingSequence, FormatError> {
    if bytes.len() < 12 {
        return Err(FormatError::HeaderTruncated { got: bytes.len() });
    }
    let found: [u8; 4] = bytes[0..4].try_into().unwrap();
    if found != MAGIC {
        return Err(FormatError::BadMagic { found });
    }
    let n = u32::from_le_bytes(bytes[4..8].try_into().unwrap());
    let d = u32::from_le_bytes(bytes[8..12].try_into().unwrap());
    if n == 0 || d == 0 {
        return Err(FormatError::EmptyMatrix { n, d });
    }
    let expected = u128::from(n) * u128::from(d) * 4;
    let payload = &bytes[12..];
    if payload.len() as u128 != expected {
        return Err(FormatError::PayloadSizeMismatch {
            n,
            d,
            expected,
            got: payload.len(),
        });
    }
    // expected == payload length, so n*d fits in usize from here on
    let (n, d) = (n as usize, d as usize);
    let mut data = Vec::with_capacity(n * d);
    for (i, chunk) in payload.chunks_exact(4).enumerate() {
        let v = f32::from_le_bytes(chunk.try_into().unwrap());
        if !v.is_finite() {
            return Err(FormatError::NonFinite {
                row: i / d,
                col: i % d,
            });
        }
        data.push(f64::from(v));
    }
    Ok(EmbeddingSequence::new(data, n, d)?)
}

/// Fails when a value narrows to infinity: the format stores binary32,
/// so magnitudes beyond `f32::MAX` are unrepresentable.
pub fn write_embedding_binary(seq: &EmbeddingSequence) -> Result<Vec<u8>, FormatError> {
    let mut out = Vec::with_capacity(12 + seq.n() * seq.d() * 4);
    out.extend_from_slice(&MAGIC);
    out.extend_from_slice(&(seq.n() as u32).to_le_bytes());
    out.extend_from_slice(&(seq.d() as u32).to_le_bytes());
    for (i, &v) in seq.data().iter().enumerate() {
        let narrowed = v as f32;
        if !narrowed.is_finite() {
            return Err(FormatError::Binary32Range {
                row: i / seq.d(),
                col: i % seq.d(),
            });
        }
        out.extend_from_slice(&narrowed.to_le_bytes());
    }
    Ok(out)
}
