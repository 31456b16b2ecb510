use std::collections::HashMap;
use std::time::Instant;

use exactlin::Scalar;
use hopfhc_core::coefficients::CoefficientModule;
use hopfhc_core::homology::{self, analyze_quotient};
use hopfhc_core::identities::Suite;
use hopfhc_core::{HopfError, HopfPreset, LedgerEntry};
use serde::Serialize;

use crate::config::{RunConfig, RunTheory};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankEntry {
    pub n: usize,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: u32,
    pub config_echo: RunConfig,
    pub ledger: Vec<LedgerEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ranks: Option<Vec<RankEntry>>,
    pub wall_time_ms: u128,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.ledger.iter().any(LedgerEntry::is_fatal_failure) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Errors that stop a run before any report exists (exit code 2).
#[derive(Debug, thiserror::Error)]
pub enum UsageError {
    #[error(transparent)]
    Config(#[from] crate::config::ConfigError),
    #[error("{0}")]
    Preset(HopfError),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

fn usage(e: HopfError) -> UsageError {
    UsageError::Preset(e)
}

/// A computation that refused its input becomes a failed fatal entry, so the
/// report still explains what happened.
fn refused(name: &str, degrees: Vec<usize>, e: HopfError) -> LedgerEntry {
    LedgerEntry::new(name, degrees, true, Some(e.to_string()))
}

pub fn build_presets(config: &RunConfig) -> Result<(HopfPreset, CoefficientModule), UsageError> {
    let a = &config.algebra;
    let q = a.params.get("q").map(|v| v.parse::<Scalar>().expect("validated"));
    let cap = a.params.get("cap").map(|v| v.parse::<u32>().expect("validated"));
    let h = HopfPreset::by_name(&a.name, q, cap).map_err(usage)?;
    let params: HashMap<String, String> = config.coefficient.params.clone().into_iter().collect();
    let y = CoefficientModule::by_name(&h, &config.coefficient.name, &params).map_err(usage)?;
    Ok((h, y))
}

pub fn run(config: &RunConfig) -> Result<Report, UsageError> {
    let start = Instant::now();
    let (h, y) = build_presets(config)?;
    let top = config.max_degree;
    let degrees: Vec<usize> = (0..=top).collect();
    let mut ledger = Vec::new();
    let mut ranks = None;
    match config.theory {
        RunTheory::Check => {
            match Suite::new(&h, &y, top).and_then(|s| s.full_ledger()) {
                Ok(entries) => ledger.extend(entries),
                Err(e) => ledger.push(refused("identity ledger", degrees.clone(), e)),
            }
            if let Some(ideal) = &config.quotient {
                let gens = ideal
                    .split(',')
                    .map(|t| h.parse_element(t.trim()))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(usage)?;
                match analyze_quotient(&h, &gens, &y, top) {
                    Ok(r) => ledger.extend(r.ledger),
                    Err(e) => ledger.push(refused("quotient module coalgebra", degrees.clone(), e)),
                }
            }
        }
        RunTheory::Hochschild | RunTheory::Cyclic => {
            let computed = homology::build_cm_complex(&h, &y, top + 1, config.route).and_then(|c| {
                let report = if config.theory == RunTheory::Hochschild {
                    homology::hochschild_cohomology(&c, top)?
                } else {
                    homology::cyclic_cohomology_bicomplex(&c, top)?
                };
                Ok((c.ledger, report))
            });
            match computed {
                Ok((built, report)) => {
                    ledger.extend(built);
                    ledger.extend(report.ledger);
                    ranks = Some(
                        report
                            .ranks
                            .iter()
                            .enumerate()
                            .map(|(n, &rank)| RankEntry { n, rank })
                            .collect(),
                    );
                }
                Err(HopfError::InvalidParameter(m)) => return Err(usage(HopfError::InvalidParameter(m))),
                Err(e) => ledger.push(refused("cohomology", degrees.clone(), e)),
            }
        }
        RunTheory::UqVanishing => match homology::uq_vanishing_ledger(&h, &y, top) {
            Ok(entries) => ledger.extend(entries),
            Err(e) => ledger.push(refused("U_q vanishing", degrees.clone(), e)),
        },
    }
    Ok(Report {
        schema: SCHEMA,
        config_echo: config.clone(),
        ledger,
        ranks,
        wall_time_ms: start.elapsed().as_millis(),
    })
}
