//! JSON model files.
//!
//! ```json
//! { "kind": "two_negative", "gram": [[-1, 2], [2, -1]],
//!   "gen1": [1, 0], "gen2": [0, 1], "canonical": [1, 1],
//!   "q": 0, "pg": 0, "chi": 1 }
//! ```
//!
//! Scalars are bare integers or `"p/q"` strings. `iitaka_m` is present iff
//! `kind` is `"kodaira_one"`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{DivisorClass, IntersectionForm, ModelKind, SurfaceModel};
use crate::rational::{Rational, Scalar};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModelFile {
    kind: ModelKind,
    gram: [[Scalar; 2]; 2],
    gen1: [Scalar; 2],
    gen2: [Scalar; 2],
    canonical: [Scalar; 2],
    q: i64,
    pg: i64,
    chi: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    iitaka_m: Option<i64>,
}

fn class(field: &str, v: &[Scalar; 2]) -> Result<DivisorClass> {
    let x = scalar(field, &v[0])?;
    let y = scalar(field, &v[1])?;
    Ok(DivisorClass::new(x, y))
}

fn scalar(field: &str, s: &Scalar) -> Result<Rational> {
    s.to_rational()
        .map_err(|e| Error::ModelFile(format!("field `{field}`: {e}")))
}

fn encode(d: &DivisorClass) -> [Scalar; 2] {
    [Scalar::from(&d.coords[0]), Scalar::from(&d.coords[1])]
}

/// Parses a model file. Does not validate the model.
pub fn parse_model(text: &str) -> Result<SurfaceModel> {
    let file: ModelFile =
        serde_json::from_str(text).map_err(|e| Error::ModelFile(format!("{e}")))?;
    let mut gram: [[Rational; 2]; 2] = Default::default();
    for (i, row) in file.gram.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            gram[i][j] = scalar("gram", s)?;
        }
    }
    Ok(SurfaceModel {
        form: IntersectionForm::new(gram),
        canonical: class("canonical", &file.canonical)?,
        q: file.q,
        pg: file.pg,
        chi: file.chi,
        kind: file.kind,
        gen1: class("gen1", &file.gen1)?,
        gen2: class("gen2", &file.gen2)?,
        iitaka_m: file.iitaka_m,
    })
}

/// Canonical JSON encoding; every rational is written as a `"p/q"` string.
pub fn to_json(model: &SurfaceModel) -> String {
    let g = &model.form.gram;
    let file = ModelFile {
        kind: model.kind,
        gram: [
            [Scalar::from(&g[0][0]), Scalar::from(&g[0][1])],
            [Scalar::from(&g[1][0]), Scalar::from(&g[1][1])],
        ],
        gen1: encode(&model.gen1),
        gen2: encode(&model.gen2),
        canonical: encode(&model.canonical),
        q: model.q,
        pg: model.pg,
        chi: model.chi,
        iitaka_m: model.iitaka_m,
    };
    serde_json::to_string_pretty(&file).expect("model serializes")
}

pub fn to_value(model: &SurfaceModel) -> serde_json::Value {
    serde_json::from_str(&to_json(model)).expect("round trip through serde_json")
}
