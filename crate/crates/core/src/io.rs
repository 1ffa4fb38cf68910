//! The algebra file format and witness serialization.
//!
//! An algebra document is JSON with a fixed key order and no floating-point
//! content; coefficients are canonical field codes and bracket entries carry
//! 1-based indices with i < j. Emission is canonical: entries sorted by
//! (i, j), terms sorted by k, zero coefficients dropped, two-space
//! indentation, trailing newline. Re-emitting a parsed document reproduces
//! it byte for byte.

use serde::{Deserialize, Serialize};

use crate::analysis::IsoclinismWitness;
use crate::error::{Error, Result};
use crate::gfq::Field;
use crate::lie::LieAlgebra;
use crate::linalg::Matrix;

#[derive(Debug, Clone, Serialize, Deserialize)]
struct AlgebraDoc {
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    field: FieldDoc,
    dim: usize,
    brackets: Vec<BracketDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FieldDoc {
    p: u64,
    k: u32,
    /// Ascending coefficients of the monic modulus; omitted when k = 1, and
    /// optional on input when a built-in modulus exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    modulus: Option<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct BracketDoc {
    i: usize,
    j: usize,
    terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermDoc {
    k: usize,
    c: u64,
}

/// Canonical text form of an algebra.
pub fn emit(l: &LieAlgebra) -> String {
    let field = l.field();
    let mut brackets: Vec<BracketDoc> = Vec::new();
    for (i, j, k, c) in l.sparse_brackets() {
        match brackets.last_mut() {
            Some(doc) if doc.i == i && doc.j == j => doc.terms.push(TermDoc { k, c: c.code() }),
            _ => brackets.push(BracketDoc { i, j, terms: vec![TermDoc { k, c: c.code() }] }),
        }
    }
    let doc = AlgebraDoc {
        name: l.name().map(str::to_owned),
        field: FieldDoc {
            p: field.characteristic(),
            k: field.extension_degree(),
            modulus: (field.extension_degree() > 1).then(|| field.modulus().to_vec()),
        },
        dim: l.dim(),
        brackets,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

/// Parse and fully validate an algebra document.
pub fn parse(text: &str) -> Result<LieAlgebra> {
    let doc: AlgebraDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let field = Field::new(doc.field.p, doc.field.k, doc.field.modulus.as_deref())?;
    let mut entries = Vec::new();
    for b in &doc.brackets {
        for t in &b.terms {
            entries.push((b.i, b.j, t.k, field.element(t.c)?));
        }
    }
    LieAlgebra::new(&field, doc.dim, &entries, doc.name)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct WitnessDoc {
    alpha: Vec<Vec<u64>>,
    beta: Vec<Vec<u64>>,
}

/// Witness as two row-major code matrices.
pub fn emit_witness(w: &IsoclinismWitness) -> String {
    let encode = |m: &Matrix| -> Vec<Vec<u64>> {
        (0..m.rows())
            .map(|i| (0..m.cols()).map(|j| m.get(i, j).code()).collect())
            .collect()
    };
    let doc = WitnessDoc { alpha: encode(&w.alpha), beta: encode(&w.beta) };
    let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
    text.push('\n');
    text
}

/// Parse a witness over the given field.
pub fn parse_witness(field: &Field, text: &str) -> Result<IsoclinismWitness> {
    let doc: WitnessDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let decode = |rows: &[Vec<u64>]| -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::Parse("ragged witness matrix".into()));
            }
            for (j, &code) in row.iter().enumerate() {
                m.set(i, j, field.element(code)?);
            }
        }
        Ok(m)
    };
    Ok(IsoclinismWitness { alpha: decode(&doc.alpha)?, beta: decode(&doc.beta)? })
}
