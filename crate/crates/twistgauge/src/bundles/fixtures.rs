//! Machine-readable fixtures: the reference table of braided gauge
//! brackets and the orthogonal Lie algebra pattern, with schema-validated
//! loaders.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::expr::parse_scalar;
use crate::scalars::Scalar;

pub const BRACKET_TABLE_SCHEMA: &str = "bracket-table/v1";
pub const SO5_PATTERN_SCHEMA: &str = "so5-pattern/v1";

/// Embedded default fixtures (also shipped under `data/`).
pub const BRACKET_TABLE_JSON: &str = include_str!("../../data/bracket_table.json");
pub const SO5_PATTERN_JSON: &str = include_str!("../../data/so5_pattern.json");

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("fixture parse error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema '{found}', expected '{expected}'")]
    Schema { expected: &'static str, found: String },
    #[error("entry {entry}: {msg}")]
    Invalid { entry: usize, msg: String },
    #[error("io error reading fixture: {0}")]
    Io(#[from] std::io::Error),
}

/// One summand `coeff * w^omega * base . gen` of a bracket table entry.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BracketTerm {
    /// Scalar coefficient in the expression mini-language (e.g. "sqrt2").
    pub coeff: String,
    /// Phase exponent in units of the quarter-pi unit `w`; multiples of 4
    /// render as integer powers of `e^{i pi theta}`.
    pub omega: i64,
    /// Base coordinate name (`alpha`, `beta`, `x`, `alphac`, `betac`).
    pub base: String,
    /// Gauge generator name (`K1`, `W11`, ...).
    pub gen: String,
}

/// One bracket `[left, right] = sum(terms)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BracketEntry {
    pub left: String,
    pub right: String,
    pub terms: Vec<BracketTerm>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketTable {
    pub schema: String,
    pub entries: Vec<BracketEntry>,
}

const GAUGE_NAMES: [&str; 10] = [
    "K1", "K2", "W01", "W0m1", "W10", "Wm10", "W11", "Wm1m1", "W1m1", "Wm11",
];
const BASE_NAMES: [&str; 5] = ["alpha", "beta", "x", "alphac", "betac"];

impl BracketTable {
    /// Parses and validates the table: schema version, resolvable names,
    /// parseable coefficients.
    pub fn from_json(json: &str) -> Result<Self, FixtureError> {
        let table: BracketTable = serde_json::from_str(json)?;
        if table.schema != BRACKET_TABLE_SCHEMA {
            return Err(FixtureError::Schema {
                expected: BRACKET_TABLE_SCHEMA,
                found: table.schema,
            });
        }
        for (i, entry) in table.entries.iter().enumerate() {
            for name in [&entry.left, &entry.right] {
                if !GAUGE_NAMES.contains(&name.as_str()) {
                    return Err(FixtureError::Invalid {
                        entry: i,
                        msg: format!("unknown gauge generator '{name}'"),
                    });
                }
            }
            for term in &entry.terms {
                if !GAUGE_NAMES.contains(&term.gen.as_str()) {
                    return Err(FixtureError::Invalid {
                        entry: i,
                        msg: format!("unknown gauge generator '{}'", term.gen),
                    });
                }
                if !BASE_NAMES.contains(&term.base.as_str()) {
                    return Err(FixtureError::Invalid {
                        entry: i,
                        msg: format!("unknown base coordinate '{}'", term.base),
                    });
                }
                parse_scalar(&term.coeff).map_err(|e| FixtureError::Invalid {
                    entry: i,
                    msg: format!("bad coefficient '{}': {e}", term.coeff),
                })?;
            }
        }
        Ok(table)
    }

    pub fn embedded() -> Self {
        Self::from_json(BRACKET_TABLE_JSON).expect("embedded bracket table is valid")
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self, FixtureError> {
        let json = std::fs::read_to_string(path)?;
        Self::from_json(&json)
    }
}

impl BracketTerm {
    pub fn coefficient(&self) -> Scalar {
        parse_scalar(&self.coeff)
            .expect("validated coefficient")
            .mul_omega(self.omega)
    }
}

/// Root system pattern for the rank-2 orthogonal Lie algebra: the closure
/// rules the ten symmetry fields must satisfy.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct So5Pattern {
    pub schema: String,
    /// The eight roots.
    pub roots: Vec<[i64; 2]>,
}

impl So5Pattern {
    pub fn from_json(json: &str) -> Result<Self, FixtureError> {
        let p: So5Pattern = serde_json::from_str(json)?;
        if p.schema != SO5_PATTERN_SCHEMA {
            return Err(FixtureError::Schema {
                expected: SO5_PATTERN_SCHEMA,
                found: p.schema,
            });
        }
        Ok(p)
    }

    pub fn embedded() -> Self {
        Self::from_json(SO5_PATTERN_JSON).expect("embedded so5 pattern is valid")
    }

    pub fn from_path(path: &std::path::Path) -> Result<Self, FixtureError> {
        let json = std::fs::read_to_string(path)?;
        Self::from_json(&json)
    }

    pub fn is_root(&self, r: (i64, i64)) -> bool {
        self.roots.contains(&[r.0, r.1])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_fixtures_validate() {
        let table = BracketTable::embedded();
        assert_eq!(table.entries.len(), 25);
        let pattern = So5Pattern::embedded();
        assert_eq!(pattern.roots.len(), 8);
    }

    #[test]
    fn schema_mismatch_is_rejected() {
        let bad = r#"{"schema":"bracket-table/v0","entries":[]}"#;
        assert!(matches!(
            BracketTable::from_json(bad),
            Err(FixtureError::Schema { .. })
        ));
    }

    #[test]
    fn bad_names_are_rejected() {
        let bad = r#"{"schema":"bracket-table/v1","entries":[
            {"left":"K1","right":"K9","terms":[]}
        ]}"#;
        assert!(matches!(
            BracketTable::from_json(bad),
            Err(FixtureError::Invalid { .. })
        ));
    }
}
