//! JSON file formats. Rationals are always strings (`"p"` or `"p/q"`) and
//! basis indices in files are 1-based positions.

use homlie::build::{ExtensionData1D, InvolutiveExtensionData};
use homlie::exactlin::{format_scalar, parse_scalar, Matrix, Scalar, Vector};
use homlie::homalg::{AssocAlgebra, BilinearForm, HomAlgError, HomAlgebra, QuadraticHomAlgebra};
use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad rational {0:?}")]
    BadRational(String),
    #[error("index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket ({i}, {j}) given twice")]
    Duplicate { i: usize, j: usize },
    #[error("bracket entry ({i}, {j}) must have i < j")]
    NotIncreasing { i: usize, j: usize },
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Algebra(#[from] HomAlgError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SparseEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub dim: usize,
    pub bracket: Vec<SparseEntry>,
    pub alpha: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssocFile {
    pub dim: usize,
    pub product: Vec<SparseEntry>,
    pub alpha: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtensionDataFile {
    pub derivation: Vec<Vec<String>>,
    pub offset: Vec<String>,
    pub eigenvalue: String,
    pub e_component: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDataFile {
    pub action: Vec<Vec<Vec<String>>>,
    pub acting_form: Vec<Vec<String>>,
}

/// A parsed algebra file. The Gram matrix is kept raw so that a
/// non-symmetric form can still be reported on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Loaded {
    pub algebra: HomAlgebra,
    pub gram: Option<Matrix>,
    pub names: Vec<String>,
}

impl Loaded {
    pub fn form(&self) -> Result<Option<BilinearForm>, ParseError> {
        self.gram.clone().map(|g| BilinearForm::new(g).map_err(ParseError::from)).transpose()
    }

    pub fn quadratic(&self) -> Result<QuadraticHomAlgebra, ParseError> {
        let form = self.form()?.ok_or_else(|| ParseError::Shape("file has no form".into()))?;
        Ok(QuadraticHomAlgebra::new(self.algebra.clone(), form)?)
    }
}

pub fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|k| format!("x{k}")).collect()
}

fn scalar(s: &str) -> Result<Scalar, ParseError> {
    parse_scalar(s).map_err(|_| ParseError::BadRational(s.to_string()))
}

fn vector(v: &[String], len: usize, what: &str) -> Result<Vector, ParseError> {
    if v.len() != len {
        return Err(ParseError::Shape(format!("{what} has {} entries, expected {len}", v.len())));
    }
    v.iter().map(|s| scalar(s)).collect()
}

fn matrix(rows: &[Vec<String>], r: usize, c: usize, what: &str) -> Result<Matrix, ParseError> {
    if rows.len() != r {
        return Err(ParseError::Shape(format!("{what} has {} rows, expected {r}", rows.len())));
    }
    let rows = rows.iter().map(|row| vector(row, c, what)).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows).map_err(HomAlgError::from)?)
}

/// Converts 1-based sparse entries to 0-based triples.
fn entries(list: &[SparseEntry], dim: usize, ordered: bool) -> Result<Vec<(usize, usize, Vector)>, ParseError> {
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(list.len());
    for e in list {
        for index in [e.i, e.j] {
            if index == 0 || index > dim {
                return Err(ParseError::IndexOutOfRange { index, dim });
            }
        }
        if ordered && e.i >= e.j {
            return Err(ParseError::NotIncreasing { i: e.i, j: e.j });
        }
        if !seen.insert((e.i, e.j)) {
            return Err(ParseError::Duplicate { i: e.i, j: e.j });
        }
        out.push((e.i - 1, e.j - 1, vector(&e.coeffs, dim, "coeffs")?));
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String, ParseError> {
    std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn parse_algebra(text: &str) -> Result<Loaded, ParseError> {
    let file: AlgebraFile = serde_json::from_str(text)?;
    let dim = file.dim;
    let brackets = entries(&file.bracket, dim, true)?;
    let alpha = matrix(&file.alpha, dim, dim, "alpha")?;
    let algebra = HomAlgebra::from_brackets(dim, &brackets, alpha)?;
    let gram = file.form.as_ref().map(|f| matrix(f, dim, dim, "form")).transpose()?;
    let names = match file.basis_names {
        Some(n) if n.len() != dim => {
            return Err(ParseError::Shape(format!("{} basis names for dimension {dim}", n.len())))
        }
        Some(n) => n,
        None => default_names(dim),
    };
    Ok(Loaded { algebra, gram, names })
}

pub fn load_algebra(path: &Path) -> Result<Loaded, ParseError> {
    parse_algebra(&read(path)?)
}

pub fn parse_assoc(text: &str) -> Result<AssocAlgebra, ParseError> {
    let file: AssocFile = serde_json::from_str(text)?;
    let products = entries(&file.product, file.dim, false)?;
    let alpha = matrix(&file.alpha, file.dim, file.dim, "alpha")?;
    Ok(AssocAlgebra::from_products(file.dim, &products, alpha)?)
}

pub fn load_assoc(path: &Path) -> Result<AssocAlgebra, ParseError> {
    parse_assoc(&read(path)?)
}

/// A bare matrix file: an array of rows of rational strings.
pub fn load_matrix(path: &Path) -> Result<Matrix, ParseError> {
    let rows: Vec<Vec<String>> = serde_json::from_str(&read(path)?)?;
    let cols = rows.first().map_or(0, Vec::len);
    matrix(&rows, rows.len(), cols, "matrix")
}

pub fn load_extension_data(path: &Path, dim: usize) -> Result<ExtensionData1D, ParseError> {
    let file: ExtensionDataFile = serde_json::from_str(&read(path)?)?;
    Ok(ExtensionData1D {
        derivation: matrix(&file.derivation, dim, dim, "derivation")?,
        offset: vector(&file.offset, dim, "offset")?,
        eigenvalue: scalar(&file.eigenvalue)?,
        e_component: scalar(&file.e_component)?,
    })
}

pub fn load_action_data(path: &Path, acting_dim: usize, module_dim: usize) -> Result<InvolutiveExtensionData, ParseError> {
    let file: ActionDataFile = serde_json::from_str(&read(path)?)?;
    if file.action.len() != acting_dim {
        return Err(ParseError::Shape(format!(
            "{} action matrices, expected {acting_dim}",
            file.action.len()
        )));
    }
    let action = file
        .action
        .iter()
        .map(|m| matrix(m, module_dim, module_dim, "action"))
        .collect::<Result<Vec<_>, _>>()?;
    let acting_form = BilinearForm::new(matrix(&file.acting_form, acting_dim, acting_dim, "acting_form")?)?;
    Ok(InvolutiveExtensionData { action, acting_form })
}

fn strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

pub fn matrix_strings(m: &Matrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| strings(r)).collect()
}

fn sparse(list: Vec<(usize, usize, Vector)>) -> Vec<SparseEntry> {
    list.into_iter()
        .map(|(i, j, v)| SparseEntry {
            i: i + 1,
            j: j + 1,
            coeffs: strings(&v),
        })
        .collect()
}

pub fn algebra_file(g: &HomAlgebra, form: Option<&BilinearForm>, names: Option<&[String]>) -> AlgebraFile {
    AlgebraFile {
        dim: g.dim(),
        bracket: sparse(g.sparse_brackets()),
        alpha: matrix_strings(g.alpha()),
        form: form.map(|b| matrix_strings(b.gram())),
        basis_names: names.map(<[String]>::to_vec),
    }
}

pub fn assoc_file(a: &AssocAlgebra) -> AssocFile {
    AssocFile {
        dim: a.dim(),
        product: sparse(a.sparse_products()),
        alpha: matrix_strings(a.alpha()),
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("file types always serialize");
    s.push('\n');
    s
}

pub fn serialize_algebra(g: &HomAlgebra, form: Option<&BilinearForm>, names: Option<&[String]>) -> String {
    to_text(&algebra_file(g, form, names))
}

#[cfg(test)]
mod tests {
    use super::*;
    use homlie::catalog::{abelian, jackson_sl2};
    use homlie::exactlin::frac;

    #[test]
    fn abelian_roundtrip() {
        let text = serialize_algebra(&abelian(2), None, None);
        let loaded = parse_algebra(&text).unwrap();
        assert!(loaded.algebra.is_abelian());
        assert_eq!(loaded.names, vec!["x1", "x2"]);
    }

    #[test]
    fn jackson_text_roundtrip() {
        let g = jackson_sl2(&frac(1, 2)).unwrap();
        let text = serialize_algebra(&g, None, None);
        let back = parse_algebra(&text).unwrap();
        assert_eq!(back.algebra, g);
        assert_eq!(serialize_algebra(&back.algebra, None, None), text);
    }

    #[test]
    fn rejects_bad_input() {
        let base = |bracket: &str| {
            format!(r#"{{"dim": 2, "bracket": [{bracket}], "alpha": [["1","0"],["0","1"]]}}"#)
        };
        let cases = [
            (base(r#"{"i": 1, "j": 1, "coeffs": ["0","0"]}"#), "NotIncreasing"),
            (base(r#"{"i": 2, "j": 1, "coeffs": ["0","0"]}"#), "NotIncreasing"),
            (base(r#"{"i": 1, "j": 3, "coeffs": ["0","0"]}"#), "IndexOutOfRange"),
            (base(r#"{"i": 0, "j": 2, "coeffs": ["0","0"]}"#), "IndexOutOfRange"),
            (base(r#"{"i": 1, "j": 2, "coeffs": ["1/0","0"]}"#), "BadRational"),
            (base(r#"{"i": 1, "j": 2, "coeffs": ["0.5","0"]}"#), "BadRational"),
            (base(r#"{"i": 1, "j": 2, "coeffs": ["1/-2","0"]}"#), "BadRational"),
            (
                base(r#"{"i": 1, "j": 2, "coeffs": ["0","0"]}, {"i": 1, "j": 2, "coeffs": ["1","0"]}"#),
                "Duplicate",
            ),
            (base(r#"{"i": 1, "j": 2, "coeffs": ["0"]}"#), "Shape"),
            ("{".to_string(), "Json"),
            (r#"{"dim": 1, "bracket": [], "alpha": [[1]]}"#.to_string(), "Json"),
        ];
        for (text, kind) in cases {
            let err = parse_algebra(&text).unwrap_err();
            assert!(format!("{err:?}").starts_with(kind), "{text}: {err:?}");
        }
    }
}
