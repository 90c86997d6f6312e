//! Serialization for the stable wire formats: fields, algebras,
//! subspaces, explicit graded algebras, family descriptors, polynomial
//! identities, and root data. Rationals always travel as "num/den"
//! strings in lowest terms with a positive denominator; emitters write
//! fields in a fixed order so reports are byte-stable.

use crate::families::coordinate::{matrix_algebra, poly_quotient, scalar_algebra, CoordinateAlgebra};
use crate::families::{LoopSupport, WittVariant};
use crate::fdlie::{FinDimLie, SparseVec};
use crate::field::{format_rational, parse_rational, FieldElement, FieldSpec, Rational};
use crate::graded::{Component, ExplicitGraded};
use crate::identities::NcPolynomial;
use crate::linalg::Subspace;
use crate::roots::RootDatum;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("json syntax: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("bad rational {text}: {reason}")]
    BadRational { text: String, reason: String },
    #[error("bracket entry ({i},{j}): {reason}")]
    BadBracket { i: usize, j: usize, reason: String },
    #[error("{0}")]
    BadInput(String),
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
    #[error(transparent)]
    Lie(#[from] crate::fdlie::LieError),
    #[error(transparent)]
    Graded(#[from] crate::graded::GradedError),
    #[error(transparent)]
    Family(#[from] crate::families::FamilyError),
}

fn rat_from(text: &str) -> Result<Rational, JsonError> {
    parse_rational(text).map_err(|e| JsonError::BadRational {
        text: text.to_string(),
        reason: e.to_string(),
    })
}

// ---------------------------------------------------------------------
// FieldSpec: {"kind":"rationals"} | {"kind":"extension","minpoly":[...]}

#[derive(Serialize, Deserialize)]
struct FieldDto {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    minpoly: Option<Vec<String>>,
}

pub fn field_to_value(f: &FieldSpec) -> serde_json::Value {
    let dto = match f.minpoly() {
        None => FieldDto { kind: "rationals".into(), minpoly: None },
        Some(p) => FieldDto {
            kind: "extension".into(),
            minpoly: Some(p.iter().map(format_rational).collect()),
        },
    };
    serde_json::to_value(dto).expect("field dto")
}

pub fn field_from_value(v: &serde_json::Value) -> Result<FieldSpec, JsonError> {
    let dto: FieldDto = serde_json::from_value(v.clone())?;
    match dto.kind.as_str() {
        "rationals" => Ok(FieldSpec::rationals()),
        "extension" => {
            let coeffs = dto
                .minpoly
                .ok_or_else(|| JsonError::BadInput("extension field needs a minpoly".into()))?;
            let poly = coeffs.iter().map(|s| rat_from(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(FieldSpec::extension(poly)?)
        }
        other => Err(JsonError::BadInput(format!("unknown field kind {other:?}"))),
    }
}

// ---------------------------------------------------------------------
// Field elements as coordinate lists ["num/den", ...] of length
// field degree; plain rationals are a single string.

fn element_to_strings(_f: &FieldSpec, x: &FieldElement) -> Vec<String> {
    x.coeffs.iter().map(format_rational).collect()
}

fn element_from_strings(f: &FieldSpec, coords: &[String]) -> Result<FieldElement, JsonError> {
    if coords.len() != f.degree() {
        return Err(JsonError::BadInput(format!(
            "coefficient has {} coordinates, field degree is {}",
            coords.len(),
            f.degree()
        )));
    }
    let coeffs = coords.iter().map(|s| rat_from(s)).collect::<Result<Vec<_>, _>>()?;
    Ok(FieldElement { coeffs })
}

// A sparse vector entry [index, coeff...] flattens the coefficient
// coordinates after the index, matching [[2,"1/1"],...] over the
// rationals.

fn sparse_to_value(f: &FieldSpec, v: &SparseVec) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = v
        .iter()
        .map(|(k, c)| {
            let mut row = vec![serde_json::Value::from(*k)];
            for s in element_to_strings(f, c) {
                row.push(serde_json::Value::from(s));
            }
            serde_json::Value::Array(row)
        })
        .collect();
    serde_json::Value::Array(rows)
}

fn sparse_from_value(f: &FieldSpec, v: &serde_json::Value) -> Result<SparseVec, JsonError> {
    let rows = v
        .as_array()
        .ok_or_else(|| JsonError::BadInput("bracket value must be an array".into()))?;
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        let cells = row
            .as_array()
            .ok_or_else(|| JsonError::BadInput("bracket term must be [index, coeffs...]".into()))?;
        if cells.len() < 2 {
            return Err(JsonError::BadInput("bracket term needs an index and a coefficient".into()));
        }
        let k = cells[0]
            .as_u64()
            .ok_or_else(|| JsonError::BadInput("bracket term index must be an integer".into()))?
            as usize;
        let coords = cells[1..]
            .iter()
            .map(|c| {
                c.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| JsonError::BadInput("coefficient must be a string".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        out.push((k, element_from_strings(f, &coords)?));
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Algebras: {"field":...,"dim":n,"labels":[...],
//            "brackets":[{"i":0,"j":1,"value":[[2,"1/1"]]},...]}
// listing only i<j pairs with nonzero brackets; an optional
// "unchecked":true skips Jacobi validation on parse.

pub fn algebra_to_value(g: &FinDimLie) -> serde_json::Value {
    let mut brackets = Vec::new();
    for ((i, j), v) in g.brackets() {
        brackets.push(serde_json::json!({
            "i": i,
            "j": j,
            "value": sparse_to_value(&g.field, v),
        }));
    }
    serde_json::json!({
        "field": field_to_value(&g.field),
        "dim": g.dim,
        "labels": g.labels,
        "brackets": brackets,
    })
}

pub fn algebra_to_string(g: &FinDimLie) -> String {
    serde_json::to_string(&algebra_to_value(g)).expect("algebra value")
}

pub fn algebra_from_value(v: &serde_json::Value) -> Result<FinDimLie, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::BadInput("algebra must be an object".into()))?;
    let field = field_from_value(
        obj.get("field").ok_or_else(|| JsonError::BadInput("algebra needs a field".into()))?,
    )?;
    let dim = obj
        .get("dim")
        .and_then(|d| d.as_u64())
        .ok_or_else(|| JsonError::BadInput("algebra needs an integer dim".into()))?
        as usize;
    let labels: Vec<String> = match obj.get("labels") {
        Some(l) => serde_json::from_value(l.clone())?,
        None => (0..dim).map(|k| format!("b{k}")).collect(),
    };
    if labels.len() != dim {
        return Err(JsonError::BadInput("labels length must equal dim".into()));
    }
    let mut brackets: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    if let Some(list) = obj.get("brackets") {
        let list = list
            .as_array()
            .ok_or_else(|| JsonError::BadInput("brackets must be an array".into()))?;
        for entry in list {
            let i = entry
                .get("i")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| JsonError::BadInput("bracket entry needs integer i".into()))?
                as usize;
            let j = entry
                .get("j")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| JsonError::BadInput("bracket entry needs integer j".into()))?
                as usize;
            let check = |cond: bool, reason: &str| -> Result<(), JsonError> {
                if cond {
                    Ok(())
                } else {
                    Err(JsonError::BadBracket { i, j, reason: reason.into() })
                }
            };
            check(i < j, "requires i < j")?;
            check(j < dim, "index out of range")?;
            let value = entry
                .get("value")
                .ok_or_else(|| JsonError::BadBracket { i, j, reason: "missing value".into() })?;
            let sv = sparse_from_value(&field, value)?;
            check(sv.iter().all(|(k, _)| *k < dim), "target index out of range")?;
            if brackets.insert((i, j), sv).is_some() {
                check(false, "duplicate pair")?;
            }
        }
    }
    let unchecked = obj.get("unchecked").and_then(|u| u.as_bool()).unwrap_or(false);
    if unchecked {
        Ok(FinDimLie::from_sc_unchecked(field, dim, labels, brackets)?)
    } else {
        Ok(FinDimLie::from_sc(field, dim, labels, brackets)?)
    }
}

pub fn algebra_from_str(s: &str) -> Result<FinDimLie, JsonError> {
    let v: serde_json::Value = serde_json::from_str(s)?;
    algebra_from_value(&v)
}

// ---------------------------------------------------------------------
// Subspaces travel as row lists of coordinate strings; the canonical
// basis rows make equality a plain list comparison.

pub fn subspace_to_rows(s: &Subspace) -> Vec<Vec<String>> {
    let f = &s.field;
    s.basis()
        .iter()
        .map(|row| row.iter().flat_map(|x| element_to_strings(f, x)).collect())
        .collect()
}

pub fn subspace_from_rows(
    field: &FieldSpec,
    ambient: usize,
    rows: &[Vec<String>],
) -> Result<Subspace, JsonError> {
    let deg = field.degree();
    let mut vecs = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != ambient * deg {
            return Err(JsonError::BadInput(format!(
                "subspace row has {} coordinates, ambient needs {}",
                row.len(),
                ambient * deg
            )));
        }
        let mut v = Vec::with_capacity(ambient);
        for chunk in row.chunks(deg) {
            v.push(element_from_strings(field, chunk)?);
        }
        vecs.push(v);
    }
    Ok(Subspace::span(field, ambient, vecs))
}

// ---------------------------------------------------------------------
// Explicit graded form:
// {"lattice_rank":n,
//  "components":[{"degree":[...],"dim":k,"labels":[...]}],
//  "brackets":[{"d1":[...],"i":...,"d2":[...],"j":...,"value":[...]}]}

pub fn graded_to_value(g: &ExplicitGraded) -> serde_json::Value {
    use crate::graded::GradedLie;
    let f = g.field().clone();
    let components: Vec<serde_json::Value> = g
        .components_map()
        .iter()
        .map(|(deg, c)| {
            serde_json::json!({"degree": deg, "dim": c.dim, "labels": c.labels})
        })
        .collect();
    let brackets: Vec<serde_json::Value> = g
        .brackets_map()
        .iter()
        .map(|((d1, i, d2, j), v)| {
            serde_json::json!({
                "d1": d1, "i": i, "d2": d2, "j": j,
                "value": sparse_to_value(&f, v),
            })
        })
        .collect();
    serde_json::json!({
        "field": field_to_value(g.field()),
        "lattice_rank": g.lattice_rank(),
        "components": components,
        "brackets": brackets,
    })
}

pub fn graded_from_value(v: &serde_json::Value) -> Result<ExplicitGraded, JsonError> {
    let obj = v
        .as_object()
        .ok_or_else(|| JsonError::BadInput("graded algebra must be an object".into()))?;
    let field = match obj.get("field") {
        Some(fv) => field_from_value(fv)?,
        None => FieldSpec::rationals(),
    };
    let rank = obj
        .get("lattice_rank")
        .and_then(|r| r.as_u64())
        .ok_or_else(|| JsonError::BadInput("graded algebra needs lattice_rank".into()))?
        as usize;
    let mut components: BTreeMap<Vec<i64>, Component> = BTreeMap::new();
    let comp_list = obj
        .get("components")
        .and_then(|c| c.as_array())
        .ok_or_else(|| JsonError::BadInput("graded algebra needs components".into()))?;
    for c in comp_list {
        let degree: Vec<i64> = serde_json::from_value(
            c.get("degree")
                .cloned()
                .ok_or_else(|| JsonError::BadInput("component needs a degree".into()))?,
        )?;
        let dim = c
            .get("dim")
            .and_then(|d| d.as_u64())
            .ok_or_else(|| JsonError::BadInput("component needs dim".into()))?
            as usize;
        let labels: Vec<String> = match c.get("labels") {
            Some(l) => serde_json::from_value(l.clone())?,
            None => (0..dim).map(|k| format!("c{k}")).collect(),
        };
        if labels.len() != dim {
            return Err(JsonError::BadInput("component labels must match dim".into()));
        }
        components.insert(degree, Component { dim, labels });
    }
    let mut brackets: BTreeMap<(Vec<i64>, usize, Vec<i64>, usize), SparseVec> = BTreeMap::new();
    if let Some(list) = obj.get("brackets").and_then(|b| b.as_array()) {
        for entry in list {
            let d1: Vec<i64> = serde_json::from_value(
                entry
                    .get("d1")
                    .cloned()
                    .ok_or_else(|| JsonError::BadInput("graded bracket needs d1".into()))?,
            )?;
            let d2: Vec<i64> = serde_json::from_value(
                entry
                    .get("d2")
                    .cloned()
                    .ok_or_else(|| JsonError::BadInput("graded bracket needs d2".into()))?,
            )?;
            let i = entry
                .get("i")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| JsonError::BadInput("graded bracket needs i".into()))?
                as usize;
            let j = entry
                .get("j")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| JsonError::BadInput("graded bracket needs j".into()))?
                as usize;
            let value = entry
                .get("value")
                .ok_or_else(|| JsonError::BadInput("graded bracket needs value".into()))?;
            brackets.insert((d1, i, d2, j), sparse_from_value(&field, value)?);
        }
    }
    Ok(ExplicitGraded::new(field, rank, components, brackets)?)
}

// ---------------------------------------------------------------------
// Family descriptors. The flat forms from the module contracts:
//   {"family":"witt","variant":"laurent"}
//   {"family":"kn_genus0","punctures":["0/1","1/1"]}
//   {"family":"tensor","s":{...algebra...},"a":{...coordinates...}}
//   {"family":"virasoro_hat","window":8}
// plus the loop and graded_sum extensions:
//   {"family":"loop","base":{...algebra...},"support":"laurent"}
//   {"family":"graded_sum","parts":[{...family...},{...family...}]}
// Coordinate algebras for tensor:
//   {"kind":"poly_quotient","k":3} | {"kind":"matrix","n":2} | {"kind":"scalar"}

pub enum FamilyInput {
    Witt { variant: WittVariant },
    KnGenus0 { punctures: Vec<Rational> },
    Tensor { s: FinDimLie, a: CoordinateAlgebra },
    VirasoroHat { window: i64 },
    Loop { base: FinDimLie, support: LoopSupport },
    GradedSum { parts: Vec<FamilyInput> },
}

pub fn coordinate_from_value(
    field: &FieldSpec,
    v: &serde_json::Value,
) -> Result<CoordinateAlgebra, JsonError> {
    let kind = v
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| JsonError::BadInput("coordinate algebra needs a kind".into()))?;
    match kind {
        "poly_quotient" => {
            let k = v
                .get("k")
                .and_then(|k| k.as_u64())
                .ok_or_else(|| JsonError::BadInput("poly_quotient needs integer k".into()))?
                as usize;
            Ok(poly_quotient(field, k)?)
        }
        "matrix" => {
            let n = v
                .get("n")
                .and_then(|n| n.as_u64())
                .ok_or_else(|| JsonError::BadInput("matrix coordinates need integer n".into()))?
                as usize;
            Ok(matrix_algebra(field, n)?.algebra)
        }
        "scalar" => Ok(scalar_algebra(field)),
        other => Err(JsonError::BadInput(format!("unknown coordinate algebra kind {other:?}"))),
    }
}

pub fn family_from_value(v: &serde_json::Value) -> Result<FamilyInput, JsonError> {
    let name = v
        .get("family")
        .and_then(|f| f.as_str())
        .ok_or_else(|| JsonError::BadInput("family descriptor needs a family name".into()))?;
    match name {
        "witt" => {
            let variant = match v.get("variant").and_then(|s| s.as_str()).unwrap_or("laurent") {
                "laurent" => WittVariant::Laurent,
                "polynomial" => WittVariant::Polynomial,
                "positive" => WittVariant::Positive,
                other => {
                    return Err(JsonError::BadInput(format!("unknown witt variant {other:?}")))
                }
            };
            Ok(FamilyInput::Witt { variant })
        }
        "kn_genus0" => {
            let raw: Vec<String> = serde_json::from_value(
                v.get("punctures")
                    .cloned()
                    .ok_or_else(|| JsonError::BadInput("kn_genus0 needs punctures".into()))?,
            )?;
            let punctures =
                raw.iter().map(|s| rat_from(s)).collect::<Result<Vec<_>, _>>()?;
            Ok(FamilyInput::KnGenus0 { punctures })
        }
        "tensor" => {
            let s = algebra_from_value(
                v.get("s").ok_or_else(|| JsonError::BadInput("tensor needs s".into()))?,
            )?;
            let a = coordinate_from_value(
                &s.field,
                v.get("a").ok_or_else(|| JsonError::BadInput("tensor needs a".into()))?,
            )?;
            Ok(FamilyInput::Tensor { s, a })
        }
        "virasoro_hat" => {
            let window = v
                .get("window")
                .and_then(|w| w.as_i64())
                .ok_or_else(|| JsonError::BadInput("virasoro_hat needs integer window".into()))?;
            Ok(FamilyInput::VirasoroHat { window })
        }
        "loop" => {
            let base = algebra_from_value(
                v.get("base").ok_or_else(|| JsonError::BadInput("loop needs base".into()))?,
            )?;
            let support = match v.get("support").and_then(|s| s.as_str()).unwrap_or("laurent") {
                "laurent" => LoopSupport::Laurent,
                "current" => LoopSupport::Current,
                "positive_current" => LoopSupport::PositiveCurrent,
                other => {
                    return Err(JsonError::BadInput(format!("unknown loop support {other:?}")))
                }
            };
            Ok(FamilyInput::Loop { base, support })
        }
        "graded_sum" => {
            let parts = v
                .get("parts")
                .and_then(|p| p.as_array())
                .ok_or_else(|| JsonError::BadInput("graded_sum needs parts".into()))?;
            if parts.len() < 2 {
                return Err(JsonError::BadInput("graded_sum needs at least two parts".into()));
            }
            let parsed =
                parts.iter().map(family_from_value).collect::<Result<Vec<_>, _>>()?;
            Ok(FamilyInput::GradedSum { parts: parsed })
        }
        other => Err(JsonError::BadInput(format!("unknown family {other:?}"))),
    }
}

/// Either side of the input dichotomy the front end accepts.
pub enum Input {
    Algebra(FinDimLie),
    Graded(ExplicitGraded),
    Family(FamilyInput),
}

pub fn input_from_str(s: &str) -> Result<Input, JsonError> {
    let v: serde_json::Value = serde_json::from_str(s)?;
    if v.get("family").is_some() {
        Ok(Input::Family(family_from_value(&v)?))
    } else if v.get("lattice_rank").is_some() {
        Ok(Input::Graded(graded_from_value(&v)?))
    } else if v.get("dim").is_some() {
        Ok(Input::Algebra(algebra_from_value(&v)?))
    } else {
        Err(JsonError::BadInput(
            "input must carry one of: family, lattice_rank, dim".into(),
        ))
    }
}

// ---------------------------------------------------------------------
// Identities: {"nvars":m,"terms":[{"coeff":"num/den","word":[0,1,0]},...]}

pub fn ncpoly_to_value(p: &NcPolynomial) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .map(|(w, c)| {
            serde_json::json!({
                "coeff": element_to_strings(&p.field, c),
                "word": w,
            })
        })
        .collect();
    serde_json::json!({"nvars": p.nvars, "terms": terms})
}

pub fn ncpoly_from_value(
    field: &FieldSpec,
    v: &serde_json::Value,
) -> Result<NcPolynomial, JsonError> {
    let nvars = v
        .get("nvars")
        .and_then(|n| n.as_u64())
        .ok_or_else(|| JsonError::BadInput("polynomial needs integer nvars".into()))?
        as usize;
    let mut terms = Vec::new();
    if let Some(list) = v.get("terms").and_then(|t| t.as_array()) {
        for t in list {
            let coeff = match t.get("coeff") {
                Some(serde_json::Value::String(s)) => element_from_strings(field, &[s.clone()])?,
                Some(serde_json::Value::Array(a)) => {
                    let coords = a
                        .iter()
                        .map(|c| {
                            c.as_str().map(str::to_string).ok_or_else(|| {
                                JsonError::BadInput("coefficient must be a string".into())
                            })
                        })
                        .collect::<Result<Vec<_>, _>>()?;
                    element_from_strings(field, &coords)?
                }
                _ => return Err(JsonError::BadInput("term needs a coeff".into())),
            };
            let word: Vec<usize> = serde_json::from_value(
                t.get("word")
                    .cloned()
                    .ok_or_else(|| JsonError::BadInput("term needs a word".into()))?,
            )?;
            terms.push((coeff, word));
        }
    }
    Ok(NcPolynomial::from_terms(field.clone(), nvars, terms)
        .map_err(|e| JsonError::BadInput(e.to_string()))?)
}

// ---------------------------------------------------------------------
// Root data reports:
// {"rank":r,"roots":[{"alpha":["num/den",...],"n":k,"mult":m,"real":b}],
//  "has_real_root":b}

pub fn root_datum_to_value(d: &RootDatum) -> serde_json::Value {
    let roots: Vec<serde_json::Value> = d
        .roots
        .iter()
        .map(|r| {
            serde_json::json!({
                "alpha": r.alpha.iter().map(format_rational).collect::<Vec<_>>(),
                "n": r.degree,
                "mult": r.mult,
                "real": r.real,
            })
        })
        .collect();
    serde_json::json!({
        "rank": d.rank,
        "roots": roots,
        "has_real_root": d.has_real_root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fdlie::standard::{gl, heisenberg, sl2};
    use crate::identities::central_identity_p2;

    #[test]
    fn algebra_round_trip_is_structural_identity() {
        let f = FieldSpec::rationals();
        for g in [sl2(&f), heisenberg(&f), gl(&f, 2)] {
            let text = algebra_to_string(&g);
            let back = algebra_from_str(&text).unwrap();
            assert_eq!(back.dim, g.dim);
            assert_eq!(back.labels, g.labels);
            assert_eq!(back.brackets(), g.brackets());
            assert_eq!(back.field, g.field);
            // Emission is stable: emitting the parse reproduces the text.
            assert_eq!(algebra_to_string(&back), text);
        }
    }

    #[test]
    fn extension_fields_round_trip() {
        let f = FieldSpec::extension(vec![
            crate::field::rat_int(1),
            crate::field::rat_int(0),
            crate::field::rat_int(1),
        ])
        .unwrap();
        let v = field_to_value(&f);
        assert_eq!(v["kind"], "extension");
        let back = field_from_value(&v).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn malformed_brackets_are_named() {
        let bad = r#"{"field":{"kind":"rationals"},"dim":2,"labels":["x","y"],
                      "brackets":[{"i":1,"j":0,"value":[[0,"1/1"]]}]}"#;
        let err = algebra_from_str(bad).unwrap_err();
        match err {
            JsonError::BadBracket { i: 1, j: 0, .. } => {}
            other => panic!("expected BadBracket, got {other:?}"),
        }
        let oob = r#"{"field":{"kind":"rationals"},"dim":2,
                      "brackets":[{"i":0,"j":5,"value":[[0,"1/1"]]}]}"#;
        assert!(matches!(algebra_from_str(oob), Err(JsonError::BadBracket { .. })));
    }

    #[test]
    fn jacobi_violations_surface_unless_unchecked() {
        // [x,y]=z, [x,z]=z, [y,z]=y: the Jacobi sum on (x,y,z) is y-z.
        let body = r#""dim":3,"labels":["x","y","z"],
            "brackets":[{"i":0,"j":1,"value":[[2,"1/1"]]},
                        {"i":0,"j":2,"value":[[2,"1/1"]]},
                        {"i":1,"j":2,"value":[[1,"1/1"]]}]"#;
        let checked = format!(r#"{{"field":{{"kind":"rationals"}},{body}}}"#);
        assert!(matches!(algebra_from_str(&checked), Err(JsonError::Lie(_))));
        let unchecked = format!(r#"{{"field":{{"kind":"rationals"}},"unchecked":true,{body}}}"#);
        let g = algebra_from_str(&unchecked).unwrap();
        assert_eq!(g.dim, 3);
        assert!(g.jacobi_defect().is_some());
    }

    #[test]
    fn subspace_rows_round_trip() {
        let f = FieldSpec::rationals();
        let g = sl2(&f);
        let c = g.derived_subalgebra();
        let rows = subspace_to_rows(&c);
        let back = subspace_from_rows(&f, g.dim, &rows).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn graded_explicit_round_trip() {
        let f = FieldSpec::rationals();
        let g = sl2(&f);
        let e = ExplicitGraded::from_findim(&g, &[1, 0, -1]).unwrap();
        let v = graded_to_value(&e);
        let back = graded_from_value(&v).unwrap();
        assert_eq!(graded_to_value(&back), v);
        use crate::graded::GradedLie;
        assert_eq!(back.component(&[1]).dim, 1);
        assert_eq!(back.component(&[0]).dim, 1);
    }

    #[test]
    fn family_descriptors_parse() {
        let w = family_from_value(&serde_json::json!({"family":"witt","variant":"laurent"}))
            .unwrap();
        assert!(matches!(w, FamilyInput::Witt { variant: WittVariant::Laurent }));
        let kn = family_from_value(
            &serde_json::json!({"family":"kn_genus0","punctures":["0/1","1/1"]}),
        )
        .unwrap();
        match kn {
            FamilyInput::KnGenus0 { punctures } => assert_eq!(punctures.len(), 2),
            _ => panic!("expected kn_genus0"),
        }
        let f = FieldSpec::rationals();
        let tensor = family_from_value(&serde_json::json!({
            "family":"tensor",
            "s": algebra_to_value(&sl2(&f)),
            "a": {"kind":"poly_quotient","k":3},
        }))
        .unwrap();
        match tensor {
            FamilyInput::Tensor { s, a } => {
                assert_eq!(s.dim, 3);
                assert_eq!(a.dim, 3);
            }
            _ => panic!("expected tensor"),
        }
        let v = family_from_value(&serde_json::json!({"family":"virasoro_hat","window":8}))
            .unwrap();
        assert!(matches!(v, FamilyInput::VirasoroHat { window: 8 }));
        let sum = family_from_value(&serde_json::json!({
            "family":"graded_sum",
            "parts":[{"family":"witt"},{"family":"witt","variant":"polynomial"}],
        }))
        .unwrap();
        assert!(matches!(sum, FamilyInput::GradedSum { parts } if parts.len() == 2));
        assert!(family_from_value(&serde_json::json!({"family":"nope"})).is_err());
    }

    #[test]
    fn polynomials_round_trip() {
        let f = FieldSpec::rationals();
        let p = central_identity_p2(&f);
        let v = ncpoly_to_value(&p);
        let back = ncpoly_from_value(&f, &v).unwrap();
        assert_eq!(ncpoly_to_value(&back), v);
        assert_eq!(back.term_count(), p.term_count());
    }
}
