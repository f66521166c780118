//! On-disk frame representation.
//!
//! The canonical format is a single self-describing JSON document: a
//! key-value header (`field`, `d`, `n`, free-form `metadata`) plus the
//! nested numeric vector arrays. Numbers are written as shortest
//! round-trip decimals, so `parse(serialize(doc))` reproduces the numeric
//! payload bit for bit and identical constructions produce identical
//! bytes. A bare d x n CSV layout (complex entries as `a+bi`) is accepted
//! and emitted for interop; the canonical format is the JSON one.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::frame::Frame;
use crate::matrix::Matrix;
use crate::scalar::{Complex64, Field};

#[derive(Debug, Clone, PartialEq)]
pub struct FrameDocument {
    pub field: Field,
    pub d: usize,
    pub n: usize,
    /// `n` vectors of length `d`.
    pub vectors: Vec<Vec<Complex64>>,
    /// Provenance: construction name, parameters, tool version.
    pub metadata: BTreeMap<String, String>,
}

/// Wire form: real entries as bare numbers, complex entries as
/// `[re, im]` pairs (a pair with zero imaginary part is accepted in
/// real documents).
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Entry {
    Real(f64),
    Pair([f64; 2]),
}

#[derive(Serialize, Deserialize)]
struct Wire {
    field: Field,
    d: usize,
    n: usize,
    vectors: Vec<Vec<Entry>>,
    #[serde(default)]
    metadata: BTreeMap<String, String>,
}

impl FrameDocument {
    pub fn from_frame(frame: &Frame, metadata: BTreeMap<String, String>) -> FrameDocument {
        FrameDocument {
            field: frame.field(),
            d: frame.d(),
            n: frame.n(),
            vectors: (0..frame.n()).map(|j| frame.vector(j)).collect(),
            metadata,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.vectors.len() != self.n {
            return Err(Error::Parse(format!(
                "document declares n = {} but carries {} vectors",
                self.n,
                self.vectors.len()
            )));
        }
        for (j, v) in self.vectors.iter().enumerate() {
            if v.len() != self.d {
                return Err(Error::Parse(format!(
                    "vector {} has length {} but d = {}",
                    j,
                    v.len(),
                    self.d
                )));
            }
            for (i, z) in v.iter().enumerate() {
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::Parse(format!(
                        "non-finite entry {i} of vector {j}"
                    )));
                }
                if self.field == Field::Real && z.im != 0.0 {
                    return Err(Error::Parse(format!(
                        "real document has imaginary entry {i} of vector {j}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The d x n matrix whose columns are the document's vectors.
    pub fn to_matrix(&self) -> Result<Matrix> {
        self.validate()?;
        Matrix::from_fn(self.d, self.n, self.field, |i, j| self.vectors[j][i])
    }

    pub fn to_frame(&self) -> Result<Frame> {
        Frame::new(self.to_matrix()?)
    }

    pub fn to_json(&self) -> String {
        let wire = Wire {
            field: self.field,
            d: self.d,
            n: self.n,
            vectors: self
                .vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|z| match self.field {
                            Field::Real => Entry::Real(z.re),
                            Field::Complex => Entry::Pair([z.re, z.im]),
                        })
                        .collect()
                })
                .collect(),
            metadata: self.metadata.clone(),
        };
        let mut out = serde_json::to_string_pretty(&wire).expect("plain data serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<FrameDocument> {
        let wire: Wire =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let vectors = wire
            .vectors
            .into_iter()
            .map(|v| {
                v.into_iter()
                    .map(|e| match e {
                        Entry::Real(re) => Complex64::new(re, 0.0),
                        Entry::Pair([re, im]) => Complex64::new(re, im),
                    })
                    .collect()
            })
            .collect();
        let doc = FrameDocument {
            field: wire.field,
            d: wire.d,
            n: wire.n,
            vectors,
            metadata: wire.metadata,
        };
        doc.validate()?;
        Ok(doc)
    }

    /// d rows by n columns, one matrix row per line. Metadata is not
    /// representable in CSV and is dropped.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.d {
            let row: Vec<String> = (0..self.n)
                .map(|j| format_scalar(self.vectors[j][i], self.field))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    pub fn from_csv(text: &str) -> Result<FrameDocument> {
        let mut rows: Vec<Vec<Complex64>> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let row = line
                .split(',')
                .map(|tok| {
                    parse_scalar_token(tok.trim()).map_err(|e| {
                        Error::Parse(format!("line {}: {e}", lineno + 1))
                    })
                })
                .collect::<Result<Vec<Complex64>>>()?;
            rows.push(row);
        }
        let d = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if d == 0 || n == 0 {
            return Err(Error::Parse("empty CSV input".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Parse("CSV rows have differing lengths".into()));
        }
        let field = if rows.iter().flatten().all(|z| z.im == 0.0) {
            Field::Real
        } else {
            Field::Complex
        };
        let vectors = (0..n)
            .map(|j| (0..d).map(|i| rows[i][j]).collect())
            .collect();
        let doc = FrameDocument {
            field,
            d,
            n,
            vectors,
            metadata: BTreeMap::new(),
        };
        doc.validate()?;
        Ok(doc)
    }
}

/// Shortest round-trip decimal for one scalar; complex values as `a+bi`.
pub fn format_scalar(z: Complex64, field: Field) -> String {
    match field {
        Field::Real => format!("{}", z.re),
        Field::Complex => {
            // Branch on the sign bit so -0.0 formats as "-0", which
            // parses back instead of producing "+-0".
            if z.im.is_sign_negative() {
                format!("{}-{}i", z.re, -z.im)
            } else {
                format!("{}+{}i", z.re, z.im)
            }
        }
    }
}

/// Parse one scalar token: a real literal, `i`/`-i`/`+i`, `3i`, or a
/// full `a+bi` form (exponent notation allowed in both parts).
pub fn parse_scalar_token(token: &str) -> Result<Complex64> {
    let token = token.trim();
    if token.is_empty() {
        return Err(Error::Parse("empty scalar token".into()));
    }
    if let Some(body) = token.strip_suffix(['i', 'I']) {
        let (re_part, im_part) = split_complex_body(body);
        let re = if re_part.is_empty() {
            0.0
        } else {
            parse_f64(re_part)?
        };
        let im = match im_part {
            "" | "+" => 1.0,
            "-" => -1.0,
            other => parse_f64(other)?,
        };
        return Ok(Complex64::new(re, im));
    }
    Ok(Complex64::new(parse_f64(token)?, 0.0))
}

/// Split `a+b` / `a-b` at the last sign that is not a leading sign and
/// not part of an exponent; `b` keeps its sign.
fn split_complex_body(body: &str) -> (&str, &str) {
    let bytes = body.as_bytes();
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx];
        if (c == b'+' || c == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
            return (&body[..idx], &body[idx..]);
        }
    }
    ("", body)
}

fn parse_f64(text: &str) -> Result<f64> {
    text.parse::<f64>()
        .map_err(|_| Error::Parse(format!("invalid number: {text:?}")))
}
