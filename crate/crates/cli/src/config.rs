//! Stratification configs.
//!
//! ```json
//! {
//!   "order": 12,
//!   "strata": [
//!     { "class": [3], "local": { "builtin": "origin", "M": 3, "N": 2, "variant": 2 }, "scale": 1 },
//!     { "class": [-2, 1, 1], "local": { "builtin": "smooth-point-surface", "M": 3 } },
//!     { "class": [0, 1], "local": { "series": [[1], [0, 1], [0, 0, 1]] }, "scale": 2 }
//!   ]
//! }
//! ```
//!
//! `class` lists the coefficients of `L^0, L^1, ...`; integers may also be
//! given as decimal strings. `scale` defaults to 1.

use std::path::Path;

use eqhilb::{GroupActionSpec, LocalSeriesRef, MotivicClass, MotivicSeries, StratificationSpec, Stratum, Variant};
use num_bigint::BigInt;
use serde::Deserialize;
use thiserror::Error;

/// Configs shipped with the binary, addressable by name.
pub const BUNDLED: &[(&str, &str)] = &[("cp2-z3", include_str!("../configs/cp2-z3.json"))];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{field}: {message}")]
    Field { field: String, message: String },
    #[error("unknown bundled config '{0}'")]
    UnknownBundled(String),
}

fn field_err(field: impl Into<String>, message: impl Into<String>) -> ConfigError {
    ConfigError::Field {
        field: field.into(),
        message: message.into(),
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    order: usize,
    strata: Vec<RawStratum>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStratum {
    class: Vec<IntLiteral>,
    local: RawLocal,
    #[serde(default = "default_scale")]
    scale: usize,
}

fn default_scale() -> usize {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLocal {
    builtin: Option<String>,
    #[serde(rename = "M")]
    m: Option<usize>,
    #[serde(rename = "N")]
    n: Option<i64>,
    variant: Option<u8>,
    series: Option<Vec<Vec<IntLiteral>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum IntLiteral {
    Int(i64),
    Text(String),
}

fn to_class(coeffs: &[IntLiteral], field: &str) -> Result<MotivicClass, ConfigError> {
    let mut values = Vec::with_capacity(coeffs.len());
    for (k, c) in coeffs.iter().enumerate() {
        let v = match c {
            IntLiteral::Int(v) => BigInt::from(*v),
            IntLiteral::Text(s) => s
                .trim()
                .parse::<BigInt>()
                .map_err(|_| field_err(format!("{field}[{k}]"), format!("'{s}' is not an integer")))?,
        };
        values.push(v);
    }
    Ok(MotivicClass::from_ascending(values))
}

fn to_local(raw: &RawLocal, field: &str) -> Result<LocalSeriesRef, ConfigError> {
    let need_m = || {
        raw.m
            .filter(|&m| m >= 1)
            .ok_or_else(|| field_err(format!("{field}.M"), "required, at least 1"))
    };
    match (&raw.builtin, &raw.series) {
        (Some(_), Some(_)) => Err(field_err(field, "give either 'builtin' or 'series', not both")),
        (None, None) => Err(field_err(field, "needs 'builtin' or 'series'")),
        (None, Some(rows)) => {
            if rows.is_empty() {
                return Err(field_err(format!("{field}.series"), "needs at least the constant term"));
            }
            let coeffs = rows
                .iter()
                .enumerate()
                .map(|(k, row)| to_class(row, &format!("{field}.series[{k}]")))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(LocalSeriesRef::Explicit(MotivicSeries::from_coeffs(coeffs)))
        }
        (Some(name), None) => match name.as_str() {
            "origin" => {
                let m = need_m()?;
                let n = raw.n.ok_or_else(|| field_err(format!("{field}.N"), "required for builtin 'origin'"))?;
                let variant = raw
                    .variant
                    .ok_or_else(|| field_err(format!("{field}.variant"), "required for builtin 'origin'"))
                    .and_then(|v| {
                        Variant::from_index(v).map_err(|e| field_err(format!("{field}.variant"), e.to_string()))
                    })?;
                let spec = GroupActionSpec::new(m, n, variant).map_err(|e| field_err(field, e.to_string()))?;
                Ok(LocalSeriesRef::Origin(spec))
            }
            "smooth-point-surface" => {
                if raw.n.is_some() || raw.variant.is_some() {
                    return Err(field_err(field, "'smooth-point-surface' takes only M"));
                }
                Ok(LocalSeriesRef::SmoothPointSurface { m: need_m()? })
            }
            other => Err(field_err(
                format!("{field}.builtin"),
                format!("unknown builtin '{other}', expected 'origin' or 'smooth-point-surface'"),
            )),
        },
    }
}

pub fn parse(text: &str) -> Result<StratificationSpec, ConfigError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| ConfigError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if raw.strata.is_empty() {
        return Err(field_err("strata", "needs at least one stratum"));
    }
    let mut strata = Vec::with_capacity(raw.strata.len());
    for (idx, s) in raw.strata.iter().enumerate() {
        let field = format!("strata[{idx}]");
        if s.scale == 0 {
            return Err(field_err(format!("{field}.scale"), "must be at least 1"));
        }
        let class = to_class(&s.class, &format!("{field}.class"))?;
        let local = to_local(&s.local, &format!("{field}.local"))?;
        strata.push(Stratum::new(class, local, s.scale).map_err(|e| field_err(&field, e.to_string()))?);
    }
    StratificationSpec::new(strata, raw.order).map_err(|e| field_err("strata", e.to_string()))
}

pub fn load(path: &Path) -> Result<StratificationSpec, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse(&text)
}

pub fn bundled(name: &str) -> Result<StratificationSpec, ConfigError> {
    let (_, text) = BUNDLED
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| ConfigError::UnknownBundled(name.to_string()))?;
    parse(text)
}
