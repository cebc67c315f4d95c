//! JSON algebra files: explicit structure-constant tables or named
//! constructions, with scalars written as strings in the declared field.

use crate::algebra::AlgebraTable;
use crate::axes::AxialAlgebra;
use crate::constructions::{
    inflated_form_example, matsuo_algebra, named_algebra, Perm, TranspositionGroup,
};
use crate::error::Error;
use crate::frobenius::FrobeniusForm;
use crate::fusion::{FusionLaw, LawKind};
use crate::linalg::{zero_vector, Matrix, Vector};
use crate::scalar::Field;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::path::Path;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDesc {
    Name(String),
    Prime { prime: u64 },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ProductEntry {
    pub i: usize,
    pub j: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LawFile {
    Jordan { jordan: String },
    Monster { monster: [String; 2] },
    Explicit {
        values: Vec<String>,
        table: Vec<Vec<Vec<String>>>,
    },
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Name(String),
    Generators(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatsuoSpec {
    pub group: GroupSpec,
    pub eta: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct NamedSpec {
    pub name: String,
    pub eta: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstructionFile {
    Matsuo { matsuo: MatsuoSpec },
    Named { named: NamedSpec },
    Inflated(String),
}

/// On-disk algebra description. Exactly one of `products` (an explicit
/// table) and `construction` (a recipe) must be present.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub field: FieldDesc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub products: Option<Vec<ProductEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axes: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fusion_law: Option<LawFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<ConstructionFile>,
}

#[derive(Debug)]
pub struct LoadedAlgebra {
    pub algebra: AxialAlgebra,
    pub form: Option<FrobeniusForm>,
}

fn parse_vector(field: Field, entries: &[String], n: usize, what: &str) -> Result<Vector, Error> {
    if entries.len() != n {
        return Err(Error::FileFormat(format!(
            "{what} has {} entries, expected {n}",
            entries.len()
        )));
    }
    entries.iter().map(|s| field.parse(s)).collect()
}

fn field_of(desc: &FieldDesc) -> Result<Field, Error> {
    match desc {
        FieldDesc::Name(name) if name == "Q" => Ok(Field::Rational),
        FieldDesc::Name(name) => Err(Error::FileFormat(format!(
            "unknown field {name:?}, expected \"Q\" or {{\"prime\": p}}"
        ))),
        FieldDesc::Prime { prime } => Field::prime(*prime),
    }
}

fn law_of(file: &LawFile, field: Field) -> Result<FusionLaw, Error> {
    match file {
        LawFile::Jordan { jordan } => FusionLaw::jordan(field.parse(jordan)?),
        LawFile::Monster { monster } => {
            FusionLaw::monster(field.parse(&monster[0])?, field.parse(&monster[1])?)
        }
        LawFile::Explicit { values, table } => {
            let parsed: Vec<_> = values
                .iter()
                .map(|s| field.parse(s))
                .collect::<Result<Vec<_>, _>>()?;
            let k = parsed.len();
            if table.len() != k || table.iter().any(|row| row.len() != k) {
                return Err(Error::FileFormat(format!(
                    "fusion table must be {k} x {k} to match the values"
                )));
            }
            let mut entries: Vec<Vec<Vector>> = Vec::with_capacity(k);
            for row in table {
                let mut out = Vec::with_capacity(k);
                for cell in row {
                    out.push(
                        cell.iter()
                            .map(|s| field.parse(s))
                            .collect::<Result<Vec<_>, _>>()?,
                    );
                }
                entries.push(out);
            }
            FusionLaw::explicit(parsed, &|i, j| entries[i][j].clone())
        }
    }
}

fn build_explicit(file: &AlgebraFile, field: Field) -> Result<LoadedAlgebra, Error> {
    let n = file
        .dimension
        .ok_or_else(|| Error::FileFormat("dimension is required with products".into()))?;
    let names = match &file.basis_names {
        Some(names) => {
            if names.len() != n {
                return Err(Error::FileFormat(format!(
                    "{} basis names for dimension {n}",
                    names.len()
                )));
            }
            names.clone()
        }
        None => (0..n).map(|k| format!("b{k}")).collect(),
    };
    let mut table: HashMap<(usize, usize), Vector> = HashMap::new();
    for entry in file.products.as_ref().expect("checked by caller") {
        if entry.i > entry.j || entry.j >= n {
            return Err(Error::FileFormat(format!(
                "product entry ({}, {}) must satisfy i <= j < {n}",
                entry.i, entry.j
            )));
        }
        let key = (entry.i, entry.j);
        if table.contains_key(&key) {
            return Err(Error::FileFormat(format!(
                "duplicate product entry for ({}, {})",
                entry.i, entry.j
            )));
        }
        let what = format!("product ({}, {})", entry.i, entry.j);
        table.insert(key, parse_vector(field, &entry.coefficients, n, &what)?);
    }
    let algebra_table = AlgebraTable::new(field, names, |i, j| {
        table
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| zero_vector(field, n))
    })?;
    let law_file = file
        .fusion_law
        .as_ref()
        .ok_or_else(|| Error::FileFormat("fusion_law is required with products".into()))?;
    let law = law_of(law_file, field)?;
    let axes_file = file
        .axes
        .as_ref()
        .ok_or_else(|| Error::FileFormat("axes are required with products".into()))?;
    let mut axes = Vec::with_capacity(axes_file.len());
    for (k, entry) in axes_file.iter().enumerate() {
        axes.push(parse_vector(field, entry, n, &format!("axis {k}"))?);
    }
    let algebra = AxialAlgebra::new(algebra_table, law, axes)?;
    let form = match &file.form {
        Some(rows) => {
            let mut gram = Vec::with_capacity(rows.len());
            for (k, row) in rows.iter().enumerate() {
                gram.push(parse_vector(field, row, n, &format!("form row {k}"))?);
            }
            Some(FrobeniusForm::new(
                algebra.table(),
                Matrix::from_rows(n, gram)?,
            )?)
        }
        None => None,
    };
    Ok(LoadedAlgebra { algebra, form })
}

fn build_construction(
    construction: &ConstructionFile,
    file: &AlgebraFile,
    field: Field,
) -> Result<LoadedAlgebra, Error> {
    for (present, name) in [
        (file.dimension.is_some(), "dimension"),
        (file.basis_names.is_some(), "basis_names"),
        (file.axes.is_some(), "axes"),
        (file.fusion_law.is_some(), "fusion_law"),
    ] {
        if present {
            return Err(Error::FileFormat(format!(
                "{name} cannot be combined with a construction"
            )));
        }
    }
    match construction {
        ConstructionFile::Matsuo { matsuo } => {
            let eta = field.parse(&matsuo.eta)?;
            let group = match &matsuo.group {
                GroupSpec::Name(name) => match name.as_str() {
                    "s3" => TranspositionGroup::symmetric(3)?,
                    "s4" => TranspositionGroup::symmetric(4)?,
                    other => {
                        return Err(Error::FileFormat(format!(
                            "unknown group {other:?}, expected s3, s4 or generator lists"
                        )))
                    }
                },
                GroupSpec::Generators(lists) => {
                    let generators = lists
                        .iter()
                        .map(|images| Perm::from_images(images.clone()))
                        .collect::<Result<Vec<_>, _>>()?;
                    TranspositionGroup::new(generators)?
                }
            };
            let algebra = matsuo_algebra(&group, &eta)?;
            attach_form(algebra, file, field)
        }
        ConstructionFile::Named { named } => {
            let eta = field.parse(&named.eta)?;
            let algebra = named_algebra(&named.name, &eta)?;
            attach_form(algebra, file, field)
        }
        ConstructionFile::Inflated(tag) => {
            if tag != "inflated" {
                return Err(Error::FileFormat(format!(
                    "unknown construction {tag:?}, expected \"inflated\""
                )));
            }
            if file.form.is_some() {
                return Err(Error::FileFormat(
                    "the inflated example carries its own form".into(),
                ));
            }
            let (algebra, form) = inflated_form_example(field)?;
            Ok(LoadedAlgebra {
                algebra,
                form: Some(form),
            })
        }
    }
}

fn attach_form(
    algebra: AxialAlgebra,
    file: &AlgebraFile,
    field: Field,
) -> Result<LoadedAlgebra, Error> {
    let form = match &file.form {
        Some(rows) => {
            let n = algebra.dimension();
            let mut gram = Vec::with_capacity(rows.len());
            for (k, row) in rows.iter().enumerate() {
                gram.push(parse_vector(field, row, n, &format!("form row {k}"))?);
            }
            Some(FrobeniusForm::new(
                algebra.table(),
                Matrix::from_rows(n, gram)?,
            )?)
        }
        None => None,
    };
    Ok(LoadedAlgebra { algebra, form })
}

pub fn from_file(file: &AlgebraFile) -> Result<LoadedAlgebra, Error> {
    let field = field_of(&file.field)?;
    match (&file.products, &file.construction) {
        (Some(_), None) => build_explicit(file, field),
        (None, Some(construction)) => build_construction(construction, file, field),
        _ => Err(Error::FileFormat(
            "exactly one of products and construction must be present".into(),
        )),
    }
}

/// Explicit dump of a verified algebra: the construction recipe, if any,
/// is expanded to its structure constants.
pub fn to_file(x: &AxialAlgebra, form: Option<&FrobeniusForm>) -> AlgebraFile {
    let table = x.table();
    let n = table.dimension();
    let stringify = |v: &[crate::scalar::Scalar]| v.iter().map(|s| s.to_string()).collect();
    let mut products = Vec::new();
    for i in 0..n {
        for j in i..n {
            let p = table.basis_product(i, j);
            if !crate::linalg::vec_is_zero(p) {
                products.push(ProductEntry {
                    i,
                    j,
                    coefficients: stringify(p),
                });
            }
        }
    }
    let law = x.law();
    let fusion_law = match law.kind() {
        LawKind::Jordan => LawFile::Jordan {
            jordan: law.values()[2].to_string(),
        },
        LawKind::Monster => LawFile::Monster {
            monster: [law.values()[2].to_string(), law.values()[3].to_string()],
        },
        LawKind::Explicit => {
            let values = law.values();
            let table = (0..values.len())
                .map(|i| {
                    (0..values.len())
                        .map(|j| {
                            law.product(i, j)
                                .iter()
                                .map(|&k| values[k].to_string())
                                .collect()
                        })
                        .collect()
                })
                .collect();
            LawFile::Explicit {
                values: values.iter().map(|s| s.to_string()).collect(),
                table,
            }
        }
    };
    AlgebraFile {
        field: match table.field() {
            Field::Rational => FieldDesc::Name("Q".into()),
            Field::Prime(p) => FieldDesc::Prime { prime: p },
        },
        dimension: Some(n),
        basis_names: Some(table.basis_names().to_vec()),
        products: Some(products),
        axes: Some(x.axes().iter().map(|a| stringify(a.vector())).collect()),
        fusion_law: Some(fusion_law),
        form: form.map(|f| f.gram().rows().iter().map(|r| stringify(r)).collect()),
        construction: None,
    }
}

pub fn load(path: &Path) -> Result<LoadedAlgebra, Error> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    let file: AlgebraFile = serde_json::from_str(&text).map_err(|source| Error::Json {
        path: path.display().to_string(),
        source,
    })?;
    from_file(&file)
}

pub fn save(path: &Path, file: &AlgebraFile) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(file).expect("the schema serializes");
    text.push('\n');
    std::fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}
