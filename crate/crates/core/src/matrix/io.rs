//! Text and JSON matrix formats.
//!
//! Text: one row per line, entries separated by single spaces, each entry in
//! element form (`3` in a prime field, `[3,1]` otherwise).
//! JSON: `{"p","e","modulus","nrows","ncols","entries"}` with row-major entries.

use serde::{Deserialize, Serialize};

use super::MatrixFq;
use crate::error::{Error, Result};
use crate::field::{ElementRepr, Field, FieldRepr};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub p: u64,
    pub e: u32,
    pub modulus: Vec<u64>,
    pub nrows: usize,
    pub ncols: usize,
    pub entries: Vec<ElementRepr>,
}

impl MatrixFq {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in 0..self.nrows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(field: &Field, text: &str) -> Result<Self> {
        let rows = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| l.split(' ').map(|t| field.parse_element(t)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Parse("ragged rows".into()));
        }
        Self::new(field, nrows, ncols, rows.into_iter().flatten().collect())
    }

    pub fn to_json_repr(&self) -> MatrixJson {
        let FieldRepr { p, e, modulus } = self.field.repr();
        MatrixJson {
            p,
            e,
            modulus,
            nrows: self.nrows,
            ncols: self.ncols,
            entries: self.entries.iter().map(|x| x.repr()).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_repr()).expect("matrix JSON is always serialisable")
    }

    pub fn from_json(json: &str, max_q: u64) -> Result<Self> {
        let repr: MatrixJson = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_repr(repr, max_q)
    }

    pub fn from_json_repr(repr: MatrixJson, max_q: u64) -> Result<Self> {
        let field = FieldRepr {
            p: repr.p,
            e: repr.e,
            modulus: repr.modulus,
        }
        .into_field(max_q)?;
        let entries = repr
            .entries
            .iter()
            .map(|x| field.element_from_repr(x))
            .collect::<Result<Vec<_>>>()?;
        Self::new(&field, repr.nrows, repr.ncols, entries)
    }
}

impl Serialize for MatrixFq {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_repr().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MatrixFq {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = MatrixJson::deserialize(deserializer)?;
        Self::from_json_repr(repr, u64::MAX).map_err(serde::de::Error::custom)
    }
}
