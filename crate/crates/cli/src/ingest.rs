//! JSON file ingestion with precise error locations.
//!
//! Tables live in `{"invariants": {"<degree>": "<p/q>", ...}}` (or
//! `"instantons"` for the inverse direction); degrees must be dense from 1.
//! A previously emitted report is also accepted: the table is then looked
//! up under its `results` key, so `--out` files can be fed straight back
//! in. Arcs live in
//! `{"truncation": T, "x1": [[exp, "p/q"], ...], ..., "x4": [...]}` with
//! every exponent below the truncation; `truncation` defaults to 16 when
//! absent and a `--truncation` flag overrides the file.

use std::collections::BTreeSet;
use std::path::Path;

use serde_json::Value;

use covercount::cd4::ArcMap;
use covercount::covers::{GwTable, InstantonTable};
use covercount::rational::{parse_rational, Rat};
use covercount::series::TruncatedSeries;

use crate::error::CliError;

pub const DEFAULT_TRUNCATION: u32 = 16;

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse {
        location: format!("{}:{}:{}", path.display(), e.line(), e.column()),
        message: e.to_string(),
    })
}

/// Find the table object under `key`, either at the top level or nested
/// under `results` when the file is a previously emitted report.
fn table_object<'a>(root: &'a Value, key: &str, path: &Path) -> Result<&'a Value, CliError> {
    let top = root.get(key).or_else(|| {
        root.get("results")
            .and_then(|results| results.get(key))
    });
    top.ok_or_else(|| CliError::Schema {
        location: path.display().to_string(),
        message: format!("missing key `{key}` (also looked under `results`)"),
    })
}

fn table_entries(path: &Path, key: &str) -> Result<Vec<(u64, Rat)>, CliError> {
    let root = read_json(path)?;
    let object = table_object(&root, key, path)?;
    let map = object.as_object().ok_or_else(|| CliError::Schema {
        location: format!("{}: `{key}`", path.display()),
        message: "expected an object mapping degrees to rational strings".into(),
    })?;
    let mut entries = Vec::with_capacity(map.len());
    for (degree_key, value) in map {
        let location = format!("{}: `{key}.{degree_key}`", path.display());
        let degree: u64 = degree_key.parse().map_err(|_| CliError::Parse {
            location: location.clone(),
            message: "degree keys must be positive integers".into(),
        })?;
        let text = value.as_str().ok_or_else(|| CliError::Schema {
            location: location.clone(),
            message: "values must be rational strings like \"9/8\"".into(),
        })?;
        let rational = parse_rational(text).map_err(|e| CliError::Parse {
            location,
            message: e.to_string(),
        })?;
        entries.push((degree, rational));
    }
    Ok(entries)
}

pub fn ingest_gw_table(path: &Path) -> Result<GwTable, CliError> {
    Ok(GwTable::from_entries(table_entries(path, "invariants")?)?)
}

pub fn ingest_instanton_table(path: &Path) -> Result<InstantonTable, CliError> {
    Ok(InstantonTable::from_entries(table_entries(
        path,
        "instantons",
    )?)?)
}

fn coordinate_series(
    root: &Value,
    name: &str,
    trunc: u32,
    path: &Path,
) -> Result<TruncatedSeries, CliError> {
    let array = root
        .get(name)
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Schema {
            location: format!("{}: `{name}`", path.display()),
            message: "each coordinate must be an array of [exponent, \"p/q\"] pairs".into(),
        })?;
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(array.len());
    for (index, entry) in array.iter().enumerate() {
        let location = format!("{}: `{name}[{index}]`", path.display());
        let pair = entry.as_array().filter(|p| p.len() == 2).ok_or_else(|| {
            CliError::Schema {
                location: location.clone(),
                message: "expected a two-element [exponent, \"p/q\"] pair".into(),
            }
        })?;
        let exponent = pair[0].as_u64().ok_or_else(|| CliError::Schema {
            location: location.clone(),
            message: "exponent must be a nonnegative integer".into(),
        })?;
        let exponent = u32::try_from(exponent)
            .ok()
            .filter(|&e| e < trunc)
            .ok_or_else(|| CliError::Schema {
                location: location.clone(),
                message: format!("exponent {exponent} is not below the truncation {trunc}"),
            })?;
        if !seen.insert(exponent) {
            return Err(CliError::Schema {
                location,
                message: format!("duplicate exponent {exponent}"),
            });
        }
        let text = pair[1].as_str().ok_or_else(|| CliError::Schema {
            location: location.clone(),
            message: "coefficient must be a rational string like \"-3/2\"".into(),
        })?;
        let coeff = parse_rational(text).map_err(|e| CliError::Parse {
            location,
            message: e.to_string(),
        })?;
        terms.push((exponent, coeff));
    }
    Ok(TruncatedSeries::from_terms(terms, trunc))
}

pub fn ingest_arc(path: &Path, truncation_override: Option<u32>) -> Result<ArcMap, CliError> {
    let root = read_json(path)?;
    let file_trunc = match root.get("truncation") {
        None => DEFAULT_TRUNCATION,
        Some(value) => value
            .as_u64()
            .and_then(|t| u32::try_from(t).ok())
            .filter(|&t| t >= 1)
            .ok_or_else(|| CliError::Schema {
                location: format!("{}: `truncation`", path.display()),
                message: "truncation must be a positive integer".into(),
            })?,
    };
    let trunc = truncation_override.unwrap_or(file_trunc);
    let coords: Vec<TruncatedSeries> = ["x1", "x2", "x3", "x4"]
        .iter()
        .map(|name| coordinate_series(&root, name, trunc, path))
        .collect::<Result<_, _>>()?;
    for (i, series) in coords.iter().enumerate() {
        if series.known_coeff(0).is_some_and(|c| !num_traits::Zero::is_zero(&c)) {
            return Err(CliError::Schema {
                location: format!("{}: `x{}`", path.display(), i + 1),
                message: "arc coordinates must vanish at t = 0 (no constant term)".into(),
            });
        }
    }
    let [x1, x2, x3, x4]: [TruncatedSeries; 4] = coords.try_into().expect("four coordinates");
    Ok(ArcMap::new(x1, x2, x3, x4)?)
}
