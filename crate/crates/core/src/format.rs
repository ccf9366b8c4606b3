//! JSON encodings of complexes and dimension profiles.
//!
//! ```json
//! {
//!   "top_dim": 1,
//!   "kind": "simplicial",
//!   "cells": [
//!     [{"id": "v0", "weight": "1", "vertices": [0]}, {"id": "v1", "weight": "1", "vertices": [1]}],
//!     [{"id": "e", "weight": "3/2", "vertices": [0, 1], "boundary": [["v1", 1], ["v0", -1]]}]
//!   ]
//! }
//! ```
//!
//! Boundary faces name cells of the previous degree by id.

use std::collections::HashMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::category::DimensionProfile;
use crate::complex::{Cell, CellKind, FactorTag, WeightedCellComplex};
use crate::error::{Error, Result};
use crate::rational::{serde_rational, Rational};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    top_dim: usize,
    kind: CellKind,
    cells: Vec<Vec<CellRecord>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellRecord {
    id: String,
    #[serde(with = "serde_rational")]
    weight: Rational,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    boundary: Vec<(String, i64)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    vertices: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    factor: Option<FactorTag>,
}

pub fn complex_to_json(k: &WeightedCellComplex) -> String {
    let cells = (0..=k.top_dim())
        .map(|q| {
            k.cells(q)
                .iter()
                .enumerate()
                .map(|(j, c)| CellRecord {
                    id: c.id.clone(),
                    weight: c.weight.clone(),
                    boundary: if q == 0 {
                        Vec::new()
                    } else {
                        k.boundary_column(q, j).iter().map(|&(r, s)| (k.cells(q - 1)[r].id.clone(), s)).collect()
                    },
                    vertices: c.vertices.clone(),
                    factor: c.factor,
                })
                .collect()
        })
        .collect();
    let file = ComplexFile { top_dim: k.top_dim(), kind: k.kind(), cells };
    serde_json::to_string_pretty(&file).expect("complex serialization cannot fail")
}

pub fn complex_from_json(text: &str) -> Result<WeightedCellComplex> {
    let file: ComplexFile = serde_json::from_str(text)?;
    if file.cells.len() != file.top_dim + 1 {
        return Err(Error::Malformed(format!(
            "top_dim {} but {} degrees of cells",
            file.top_dim,
            file.cells.len()
        )));
    }
    let mut cells = Vec::with_capacity(file.cells.len());
    let mut boundary = Vec::with_capacity(file.cells.len());
    let mut previous: HashMap<String, usize> = HashMap::new();
    for (q, level) in file.cells.into_iter().enumerate() {
        let mut index = HashMap::with_capacity(level.len());
        let mut cols = Vec::with_capacity(level.len());
        let mut out = Vec::with_capacity(level.len());
        for (j, rec) in level.into_iter().enumerate() {
            if index.insert(rec.id.clone(), j).is_some() {
                return Err(Error::Malformed(format!("duplicate cell id `{}` in degree {q}", rec.id)));
            }
            if q == 0 && !rec.boundary.is_empty() {
                return Err(Error::Malformed(format!("vertex `{}` has a boundary", rec.id)));
            }
            let col = rec
                .boundary
                .iter()
                .map(|(face, s)| {
                    previous
                        .get(face)
                        .map(|&r| (r, *s))
                        .ok_or_else(|| Error::Malformed(format!("cell `{}`: unknown face `{face}`", rec.id)))
                })
                .collect::<Result<Vec<_>>>()?;
            cols.push(col);
            out.push(Cell { id: rec.id, weight: rec.weight, vertices: rec.vertices, factor: rec.factor });
        }
        cells.push(out);
        boundary.push(if q == 0 { Vec::new() } else { cols });
        previous = index;
    }
    WeightedCellComplex::new(file.kind, cells, boundary)
}

pub fn read_complex(path: &Path) -> Result<WeightedCellComplex> {
    complex_from_json(&std::fs::read_to_string(path)?)
}

pub fn write_complex(k: &WeightedCellComplex, path: &Path) -> Result<()> {
    std::fs::write(path, complex_to_json(k))?;
    Ok(())
}

pub fn profile_from_json(text: &str) -> Result<DimensionProfile> {
    let p: DimensionProfile = serde_json::from_str(text)?;
    p.validate()?;
    for f in &p.factors {
        f.validate()?;
    }
    Ok(p)
}

pub fn read_profile(path: &Path) -> Result<DimensionProfile> {
    profile_from_json(&std::fs::read_to_string(path)?)
}

pub fn profile_to_json(p: &DimensionProfile) -> String {
    serde_json::to_string_pretty(p).expect("profile serialization cannot fail")
}
