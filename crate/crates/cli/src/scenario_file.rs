//! JSON scenario documents.
//!
//! ```json
//! {"vms": [{"mips": 10}, {"mips": 20}],
//!  "cloudlets": [{"file_size": 12}, {"file_size": 16}],
//!  "hosts": {"count": 2, "ram_mb": 512}}
//! ```
//!
//! Numbers may be JSON numbers or strings holding a decimal or a `p/q` fraction. Optional
//! `id` fields must match the entry's position. `hosts` is optional and never affects timing.

use cloudlet_core::model::{Hosts, Scenario, ScenarioError};
use cloudlet_core::rational::{self, Rational};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ScenarioFileError {
    #[error("invalid scenario JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{field}: missing")]
    Missing { field: String },
    #[error("{field}: {reason}")]
    Invalid { field: String, reason: String },
    #[error("{field}: duplicate id {id}")]
    DuplicateId { field: String, id: u64 },
    #[error(transparent)]
    Scenario(#[from] ScenarioError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    vms: Option<Vec<VmDoc>>,
    cloudlets: Option<Vec<CloudletDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hosts: Option<HostsDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VmDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    id: Option<u64>,
    mips: Option<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CloudletDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    id: Option<u64>,
    file_size: Option<Value>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HostsDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    ram_mb: Option<u64>,
}

pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioFileError> {
    let doc: ScenarioDoc = serde_json::from_str(text)?;
    let vms = doc.vms.ok_or_else(|| missing("vms"))?;
    let cloudlets = doc.cloudlets.ok_or_else(|| missing("cloudlets"))?;

    check_ids("vms", vms.iter().map(|v| v.id))?;
    check_ids("cloudlets", cloudlets.iter().map(|c| c.id))?;

    let mips = vms
        .iter()
        .enumerate()
        .map(|(j, vm)| positive(&format!("vms[{j}].mips"), vm.mips.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;
    let sizes = cloudlets
        .iter()
        .enumerate()
        .map(|(i, c)| positive(&format!("cloudlets[{i}].file_size"), c.file_size.as_ref()))
        .collect::<Result<Vec<_>, _>>()?;

    let scenario = Scenario::new(mips, sizes)?;
    match doc.hosts {
        Some(h) => {
            for (name, value) in [("count", h.count), ("ram_mb", h.ram_mb)] {
                if value == Some(0) {
                    return Err(ScenarioFileError::Invalid {
                        field: format!("hosts.{name}"),
                        reason: "must be positive".into(),
                    });
                }
            }
            Ok(scenario.with_hosts(Hosts {
                count: h.count,
                ram_mb: h.ram_mb,
            })?)
        }
        None => Ok(scenario),
    }
}

/// Serializes `scenario` so that [`parse_scenario`] gives it back unchanged. Terminating
/// decimals become JSON numbers, anything else a `"p/q"` string.
pub fn scenario_to_json(scenario: &Scenario) -> String {
    let doc = ScenarioDoc {
        vms: Some(
            scenario
                .vms()
                .iter()
                .map(|vm| VmDoc {
                    id: None,
                    mips: Some(number(&vm.mips)),
                })
                .collect(),
        ),
        cloudlets: Some(
            scenario
                .cloudlets()
                .iter()
                .map(|c| CloudletDoc {
                    id: None,
                    file_size: Some(number(&c.file_size)),
                })
                .collect(),
        ),
        hosts: scenario.hosts().map(|h| HostsDoc {
            count: h.count,
            ram_mb: h.ram_mb,
        }),
    };
    serde_json::to_string_pretty(&doc).expect("scenario documents always serialize")
}

fn number(value: &Rational) -> Value {
    if let Some(decimal) = rational::exact_decimal(value) {
        // Only keep a JSON number when it survives the f64 round trip exactly.
        if let Ok(n) = decimal.parse::<serde_json::Number>() {
            if rational::parse(&n.to_string()).as_ref() == Ok(value) {
                return Value::Number(n);
            }
        }
    }
    Value::String(format!("{}/{}", value.numer(), value.denom()))
}

fn missing(field: &str) -> ScenarioFileError {
    ScenarioFileError::Missing {
        field: field.to_string(),
    }
}

fn check_ids(list: &str, ids: impl Iterator<Item = Option<u64>>) -> Result<(), ScenarioFileError> {
    let mut seen = std::collections::BTreeSet::new();
    for (pos, id) in ids.enumerate() {
        let Some(id) = id else { continue };
        if !seen.insert(id) {
            return Err(ScenarioFileError::DuplicateId {
                field: format!("{list}[{pos}].id"),
                id,
            });
        }
        if id != pos as u64 {
            return Err(ScenarioFileError::Invalid {
                field: format!("{list}[{pos}].id"),
                reason: format!("ids must follow declaration order starting at 0, got {id}"),
            });
        }
    }
    Ok(())
}

fn positive(field: &str, value: Option<&Value>) -> Result<Rational, ScenarioFileError> {
    let invalid = |reason: String| ScenarioFileError::Invalid {
        field: field.to_string(),
        reason,
    };
    let value = value.ok_or_else(|| missing(field))?;
    let parsed = match value {
        Value::Number(n) => rational::parse(&n.to_string()),
        Value::String(s) => rational::parse(s),
        other => return Err(invalid(format!("expected a number, got {other}"))),
    }
    .map_err(|e| invalid(e.to_string()))?;
    if parsed <= Rational::from_integer(0.into()) {
        return Err(invalid(format!("must be positive, got {value}")));
    }
    Ok(parsed)
}
