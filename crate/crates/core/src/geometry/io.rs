//! Arrangement files.
//!
//! ```json
//! {"name": "CL3",
//!  "field": {"minpoly": ["0/1", "1/1"], "label": "Q"},
//!  "lines": [["1/1", "0/1", "-1/1"]],
//!  "conics": [["1/1", "1/1", "-1/1", "0/1", "0/1", "0/1"]]}
//! ```
//!
//! Rationals are strings `"num/den"` (a bare integer is also accepted). A
//! coefficient in a number field of degree `n > 1` is either such a string
//! (a rational element) or a list of `n` of them: its coordinates in the
//! power basis `1, a, ..., a^(n-1)`. Conic coefficients are ordered
//! `(x², y², z², xy, xz, yz)`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Arrangement, Component, GeometryError};
use crate::numbers::{AlgebraicElement, NumberField, Rational};

#[derive(Serialize, Deserialize)]
struct FieldFile {
    minpoly: Vec<Rational>,
    label: String,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Coeff {
    Rational(Rational),
    Coords(Vec<Rational>),
}

#[derive(Serialize, Deserialize)]
struct ArrangementFile {
    #[serde(default)]
    name: Option<String>,
    field: FieldFile,
    #[serde(default)]
    lines: Vec<Vec<Coeff>>,
    #[serde(default)]
    conics: Vec<Vec<Coeff>>,
}

fn encode(x: &AlgebraicElement) -> Coeff {
    match x.as_rational() {
        Some(r) => Coeff::Rational(r.clone()),
        None => Coeff::Coords(x.coords().to_vec()),
    }
}

fn to_file(arr: &Arrangement) -> ArrangementFile {
    let mut lines = Vec::new();
    let mut conics = Vec::new();
    for c in &arr.components {
        let row: Vec<Coeff> = c.coeffs().iter().map(encode).collect();
        match c {
            Component::Line(_) => lines.push(row),
            Component::Conic(_) => conics.push(row),
        }
    }
    ArrangementFile {
        name: arr.name.clone(),
        field: FieldFile {
            minpoly: arr.field.minpoly().to_vec(),
            label: arr.field.label().to_string(),
        },
        lines,
        conics,
    }
}

pub fn to_json_value(arr: &Arrangement) -> Value {
    serde_json::to_value(to_file(arr)).expect("serializable")
}

pub fn to_json(arr: &Arrangement) -> String {
    serde_json::to_string_pretty(&to_file(arr)).expect("serializable")
}

fn decode<const N: usize>(
    field: &std::sync::Arc<NumberField>,
    row: Vec<Coeff>,
    what: &str,
    index: usize,
) -> Result<[AlgebraicElement; N], GeometryError> {
    if row.len() != N {
        return Err(GeometryError::Parse(format!(
            "{what} {index} has {} coefficients, expected {N}",
            row.len()
        )));
    }
    let mut out = Vec::with_capacity(N);
    for c in row {
        out.push(match c {
            Coeff::Rational(r) => field.from_rational(r),
            Coeff::Coords(v) => field
                .element(v)
                .map_err(|e| GeometryError::Parse(format!("{what} {index}: {e}")))?,
        });
    }
    Ok(out.try_into().unwrap_or_else(|_| unreachable!()))
}

/// Parses an arrangement file. The result still needs
/// [`super::validate`].
pub fn from_json(text: &str) -> Result<Arrangement, GeometryError> {
    let file: ArrangementFile = serde_json::from_str(text).map_err(|e| GeometryError::Parse(e.to_string()))?;
    let field =
        NumberField::new(file.field.minpoly, file.field.label).map_err(|e| GeometryError::Parse(e.to_string()))?;
    let lines = file
        .lines
        .into_iter()
        .enumerate()
        .map(|(i, row)| decode::<3>(&field, row, "line", i))
        .collect::<Result<Vec<_>, _>>()?;
    let conics = file
        .conics
        .into_iter()
        .enumerate()
        .map(|(i, row)| decode::<6>(&field, row, "conic", i))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Arrangement::new(file.name, field, lines, conics))
}
