//! The run configuration: one `key = value` per line, `#` starts a comment,
//! preset parameters are dotted (`algebra.q = 2`).

use std::collections::BTreeMap;
use std::path::PathBuf;

use hopfhc_core::homology::Route;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid `{key}`: {message}")]
    Validation { key: String, message: String },
}

impl ConfigError {
    fn invalid(key: &str, message: impl Into<String>) -> Self {
        ConfigError::Validation {
            key: key.to_string(),
            message: message.into(),
        }
    }

    /// The offending key for validation errors.
    pub fn key(&self) -> Option<&str> {
        match self {
            ConfigError::Validation { key, .. } => Some(key),
            ConfigError::Parse { .. } => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RunTheory {
    Check,
    Hochschild,
    Cyclic,
    UqVanishing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresetSpec {
    pub name: String,
    pub params: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub algebra: PresetSpec,
    pub coefficient: PresetSpec,
    pub max_degree: usize,
    pub theory: RunTheory,
    pub route: Route,
    /// Generators of a two-sided ideal J; `check` then also analyzes B/J.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient: Option<String>,
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

const ALGEBRAS: &[&str] = &["k", "kC2", "kS3", "kM2", "sweedler4", "uq_sl2"];
const COEFFICIENTS: &[&str] = &["trivial", "coalgebra_self", "modular_pair", "trivial_coaction"];

fn allowed_params(preset: &str) -> &'static [&'static str] {
    match preset {
        "uq_sl2" => &["q", "cap"],
        "modular_pair" => &["delta", "sigma"],
        "trivial_coaction" => &["generators"],
        _ => &[],
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut values: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once('=') else {
            return Err(ConfigError::Parse {
                line,
                message: format!("expected `key = value`, found `{content}`"),
            });
        };
        let (key, value) = (key.trim(), value.trim());
        if key.is_empty() || key.contains(char::is_whitespace) {
            return Err(ConfigError::Parse {
                line,
                message: format!("malformed key `{key}`"),
            });
        }
        if value.is_empty() {
            return Err(ConfigError::Parse {
                line,
                message: format!("missing value for `{key}`"),
            });
        }
        if values.insert(key.to_string(), (line, value.to_string())).is_some() {
            return Err(ConfigError::Parse {
                line,
                message: format!("duplicate key `{key}`"),
            });
        }
    }
    validate(values.into_iter().map(|(k, (_, v))| (k, v)).collect())
}

fn validate(mut values: BTreeMap<String, String>) -> Result<RunConfig, ConfigError> {
    let mut take = |key: &str| values.remove(key);
    let algebra_name = take("algebra").ok_or_else(|| ConfigError::invalid("algebra", "required"))?;
    if !ALGEBRAS.contains(&algebra_name.as_str()) {
        return Err(ConfigError::invalid("algebra", format!("unknown preset `{algebra_name}`")));
    }
    let coefficient_name = take("coefficient").unwrap_or_else(|| "trivial".to_string());
    if !COEFFICIENTS.contains(&coefficient_name.as_str()) {
        return Err(ConfigError::invalid("coefficient", format!("unknown preset `{coefficient_name}`")));
    }
    let theory = match take("theory").as_deref() {
        None | Some("check") => RunTheory::Check,
        Some("hochschild") => RunTheory::Hochschild,
        Some("cyclic") => RunTheory::Cyclic,
        Some("uq_vanishing") => RunTheory::UqVanishing,
        Some(other) => return Err(ConfigError::invalid("theory", format!("unknown theory `{other}`"))),
    };
    let max_degree = match take("max_degree") {
        None => 2,
        Some(v) => v
            .parse()
            .map_err(|_| ConfigError::invalid("max_degree", format!("`{v}` is not a natural number")))?,
    };
    let route = match take("route") {
        None => Route::CoinvariantQuotient,
        Some(v) => Route::parse(&v).ok_or_else(|| ConfigError::invalid("route", format!("unknown route `{v}`")))?,
    };
    let quotient = take("quotient");
    let output = take("output").map(PathBuf::from);

    let mut params = |prefix: &str, preset: &str| -> Result<BTreeMap<String, String>, ConfigError> {
        let dotted = format!("{prefix}.");
        let keys: Vec<String> = values.keys().filter(|k| k.starts_with(&dotted)).cloned().collect();
        let mut out = BTreeMap::new();
        for key in keys {
            let param = &key[dotted.len()..];
            if !allowed_params(preset).contains(&param) {
                return Err(ConfigError::invalid(&key, format!("`{preset}` takes no parameter `{param}`")));
            }
            out.insert(param.to_string(), values.remove(&key).unwrap());
        }
        Ok(out)
    };
    let algebra = PresetSpec {
        params: params("algebra", &algebra_name)?,
        name: algebra_name,
    };
    let coefficient = PresetSpec {
        params: params("coefficient", &coefficient_name)?,
        name: coefficient_name,
    };
    if let Some(key) = values.keys().next() {
        return Err(ConfigError::invalid(key, "unknown key"));
    }
    if let Some(q) = algebra.params.get("q") {
        q.parse::<exactlin::Scalar>()
            .map_err(|_| ConfigError::invalid("algebra.q", format!("`{q}` is neither a rational nor `q`")))?;
    }
    if let Some(cap) = algebra.params.get("cap") {
        cap.parse::<u32>()
            .map_err(|_| ConfigError::invalid("algebra.cap", format!("`{cap}` is not a natural number")))?;
    }
    if theory == RunTheory::UqVanishing && algebra.name != "uq_sl2" {
        return Err(ConfigError::invalid("theory", "uq_vanishing requires algebra = uq_sl2"));
    }
    Ok(RunConfig {
        algebra,
        coefficient,
        max_degree,
        theory,
        route,
        quotient,
        output,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_check_config() {
        let c = parse_config("algebra = sweedler4\ncoefficient = trivial\ntheory = check\nmax_degree = 3\n").unwrap();
        assert_eq!(c.algebra.name, "sweedler4");
        assert_eq!(c.theory, RunTheory::Check);
        assert_eq!(c.max_degree, 3);
    }

    #[test]
    fn dotted_parameters_and_comments() {
        let text = "# vanishing run\nalgebra = uq_sl2\nalgebra.q = 2   # numeric\nalgebra.cap = 3\ntheory = uq_vanishing\nmax_degree = 1\n";
        let c = parse_config(text).unwrap();
        assert_eq!(c.algebra.params["q"], "2");
        assert_eq!(c.algebra.params["cap"], "3");
        assert_eq!(c.theory, RunTheory::UqVanishing);
    }

    #[test]
    fn errors_name_the_key_or_line() {
        let e = parse_config("algebra = kC2\ntheory = frobnicate\n").unwrap_err();
        assert_eq!(e.key(), Some("theory"));
        let e = parse_config("algebra = kC2\nwhat is this\n").unwrap_err();
        assert_eq!(e, ConfigError::Parse { line: 2, message: "expected `key = value`, found `what is this`".into() });
        assert_eq!(parse_config("algebra = kC2\ncolour = red\n").unwrap_err().key(), Some("colour"));
        assert_eq!(parse_config("algebra = kC2\nalgebra.q = 2\n").unwrap_err().key(), Some("algebra.q"));
        assert_eq!(parse_config("algebra = kC2\ntheory = uq_vanishing\n").unwrap_err().key(), Some("theory"));
        assert_eq!(parse_config("algebra = kC2\nmax_degree = -1\n").unwrap_err().key(), Some("max_degree"));
        assert!(matches!(parse_config("algebra = k\nalgebra = k\n"), Err(ConfigError::Parse { line: 2, .. })));
    }
}
