//! CSV embedding matrix format: one row per frame, d decimal fields,
//! no header, no quoting. Strict: every row must have the same field
//! count and every field must parse as a finite float.

use crate::formats::FormatError;
use crate::types::EmbeddingSequence;

pub fn read_embedding_csv(text: &str) -> Result<EmbeddingSequence, FormatError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut width: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            return Err(FormatError::Csv {
                line,
                message: "blank line".to_string(),
            });
        }
        let fields: Vec<&str> = raw.split(',').collect();
        match width {
            Some(w) if fields.len() != w => {
                return Err(FormatError::Csv {
                    line,
                    message: format!("expected {w} fields, got {}", fields.len()),
                });
            }
            None => width = Some(fields.len()),
            _ => {}
        }
        let mut row = Vec::with_capacity(fields.len());
        for (col, field) in fields.iter().enumerate() {
            let value: f64 = field.trim().parse().map_err(|e| FormatError::Csv {
                line,
                message: format!("field {}: {e}", col + 1),
            })?;
            if !value.is_finite() {
                return Err(FormatError::Csv {
                    line,
                    message: format!("field {}: non-finite value", col + 1),
                });
            }
            row.push(value);
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(FormatError::Csv {
            line: 1,
            message: "no rows".to_string(),
        });
    }
    Ok(EmbeddingSequence::from_rows(&rows)?)
}

/// Writes a matrix as CSV at binary-format precision: each value is
/// narrowed to f32 and printed as its exactly-widened f64, so parsing
/// the output recovers the same matrix the binary encoding would.
/// Fails like the binary writer when a value narrows to infinity.
pub fn write_embedding_csv(seq: &EmbeddingSequence) -> Result<String, FormatError> {
    let mut out = String::new();
    for (r, row) in seq.rows().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if c > 0 {
                out.push(',');
            }
            let narrowed = *v as f32;
            if !narrowed.is_finite() {
                return Err(FormatError::Binary32Range { row: r, col: c });
            }
            out.push_str(&format!("{}", f64::from(narrowed)));
        }
        out.push('\n');
    }
    Ok(out)
}
