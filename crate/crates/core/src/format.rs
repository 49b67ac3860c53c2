//! JSON matrix documents.
//!
//! ```json
//! {"rows": 2, "cols": 2, "entries": ["1", "1/2+3/4i", "0", "-5i"]}
//! ```
//!
//! `entries` is row-major and every entry uses the scalar grammar
//! `[-]p[/q][(+|-)r[/s]i]` (or the pure-imaginary `[-]r[/s]i`), without
//! whitespace and with positive denominators. Output always uses the
//! canonical form produced by [`Scalar`]'s `Display`.

use std::path::Path;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::{Matrix, Scalar};
use crate::Error;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<String>,
}

impl From<&Matrix> for MatrixDoc {
    fn from(m: &Matrix) -> Self {
        MatrixDoc { rows: m.rows(), cols: m.cols(), entries: m.entries().iter().map(ToString::to_string).collect() }
    }
}

impl TryFrom<MatrixDoc> for Matrix {
    type Error = Error;

    fn try_from(doc: MatrixDoc) -> Result<Self, Error> {
        if doc.rows == 0 || doc.cols == 0 {
            return Err(Error::Format("rows and cols must be positive".into()));
        }
        let entries = doc.entries.iter().map(|s| s.parse::<Scalar>()).collect::<Result<Vec<_>, _>>()?;
        Matrix::new(doc.rows, doc.cols, entries)
    }
}

impl Serialize for Matrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        MatrixDoc::from(self).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Matrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let doc = MatrixDoc::deserialize(deserializer)?;
        Matrix::try_from(doc).map_err(de::Error::custom)
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix, Error> {
    let doc: MatrixDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Matrix::try_from(doc)
}

pub fn read_matrix_file(path: impl AsRef<Path>) -> Result<Matrix, Error> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
}

pub fn matrix_to_json(m: &Matrix) -> String {
    serde_json::to_string(m).expect("matrix serializes")
}
