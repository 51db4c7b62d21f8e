//! JSON forms of polynomials, divided-power elements, lambda elements and matrices.

use cohitlab_core::f2linalg::{BitMatrix, BitVector};
use cohitlab_core::lambda::LambdaElement;
use cohitlab_core::polyspace::{DualElement, DualMonomial, Monomial, Polynomial, WeightVector};
use cohitlab_core::Error;
use serde::Deserialize;
use serde_json::{json, Value};

pub fn monomial(m: &Monomial) -> Value {
    json!(m.exponents())
}

pub fn polynomial(f: &Polynomial) -> Value {
    let terms: Vec<Value> = f.terms().map(monomial).collect();
    json!({ "q": f.q(), "degree": f.degree(), "monomials": terms })
}

pub fn dual_element(t: &DualElement) -> Value {
    let terms: Vec<Value> = t.terms().map(|m| json!(m.exponents())).collect();
    json!({ "q": t.q(), "degree": t.degree(), "terms": terms })
}

pub fn lambda_element(e: &LambdaElement) -> Value {
    let terms: Vec<Value> = e.terms().map(|m| json!(m.indices())).collect();
    json!({ "length": e.length(), "internal_degree": e.internal_degree(), "terms": terms })
}

pub fn weight(w: &WeightVector) -> Value {
    json!(w.entries())
}

/// Bits of a row packed least significant first, as hex.
pub fn bits_hex(v: &BitVector) -> String {
    let bytes: Vec<u8> = v.words().iter().flat_map(|w| w.to_le_bytes()).take(v.len().div_ceil(8)).collect();
    hex::encode(bytes)
}

pub fn bits_from_hex(len: usize, s: &str) -> Option<BitVector> {
    let bytes = hex::decode(s).ok()?;
    if bytes.len() != len.div_ceil(8) {
        return None;
    }
    let ones = (0..len).filter(|&i| bytes[i / 8] >> (i % 8) & 1 == 1);
    Some(BitVector::from_ones(len, ones))
}

pub fn matrix(m: &BitMatrix) -> Value {
    let rows: Vec<String> = m.rows().iter().map(bits_hex).collect();
    json!({ "rows": m.nrows(), "cols": m.ncols(), "hex": rows })
}

#[derive(Deserialize)]
struct DualFile {
    q: usize,
    degree: Option<u32>,
    terms: Vec<Vec<u32>>,
}

/// Parses `{"q", "degree"?, "terms"}`. Terms must share one degree and have `q` exponents.
pub fn parse_dual_element(text: &str) -> Result<DualElement, String> {
    let file: DualFile = serde_json::from_str(text).map_err(|e| format!("bad element file: {e}"))?;
    let mut terms = Vec::with_capacity(file.terms.len());
    for t in &file.terms {
        if t.len() != file.q {
            return Err(format!("term {t:?} does not have {} exponents", file.q));
        }
        terms.push(DualMonomial::new(t).map_err(|e| e.to_string())?);
    }
    let degree = match (file.degree, terms.first()) {
        (Some(d), _) => d,
        (None, Some(t)) => t.degree(),
        (None, None) => return Err("element has no terms and no degree".into()),
    };
    DualElement::from_terms(file.q, degree, terms).map_err(|e: Error| e.to_string())
}
