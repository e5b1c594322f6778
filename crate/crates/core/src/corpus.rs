//! Named regression cases: an input orbit and cover plus the expected
//! fragments of its report. A case passes when every expected field matches
//! the produced report JSON (subset comparison: objects may omit fields,
//! arrays match element by element).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::builder::{build, Strategy};
use crate::error::{Error, Result};
use crate::partition::{Algebra, OrbitId, Partition, VeryEvenLabel};
use crate::report::report_to_json;
use crate::topology::{cover_menu, CoverKind, CoverSpec};

/// The corpus bundled with the binary.
pub const BUNDLED_CORPUS: &str = include_str!("../data/corpus.json");

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusCase {
    pub name: String,
    pub input: CorpusInput,
    pub expected: Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusInput {
    pub algebra: Algebra,
    pub partition: String,
    #[serde(default = "default_cover")]
    pub cover: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<VeryEvenLabel>,
}

fn default_cover() -> String {
    "universal".into()
}

/// Parse the CLI/corpus cover syntax: `universal`, `cyclic:<e>` or `ycover`.
pub fn parse_cover_arg(orbit: &OrbitId, arg: &str) -> Result<CoverSpec> {
    let menu = cover_menu(orbit)?;
    match arg {
        "universal" => Ok(match orbit.algebra {
            // the universal cover of an sl orbit is the full cyclic one
            Algebra::Sl => *menu.last().expect("sl menu nonempty"),
            _ => menu[0],
        }),
        "ycover" => menu
            .iter()
            .copied()
            .find(|c| c.kind == CoverKind::YCoverSo)
            .ok_or_else(|| {
                Error::InvalidCover(format!(
                    "{orbit} has no quotient (Y) cover: the partition is not rather odd"
                ))
            }),
        other => {
            let e = other
                .strip_prefix("cyclic:")
                .and_then(|e| e.parse::<u64>().ok())
                .ok_or_else(|| {
                    Error::InvalidCover(format!(
                        "bad cover `{other}` (expected universal, cyclic:<e> or ycover)"
                    ))
                })?;
            let spec = CoverSpec::cyclic_sl(e);
            if menu.contains(&spec) {
                Ok(spec)
            } else {
                Err(Error::InvalidCover(format!(
                    "cyclic:{e} is not in the cover menu of {orbit}"
                )))
            }
        }
    }
}

impl CorpusInput {
    pub fn orbit(&self) -> Result<OrbitId> {
        let p = Partition::parse_text(&self.partition)?;
        let mut orbit = OrbitId::new(self.algebra, p);
        if let Some(label) = self.label {
            orbit = orbit.with_label(label)?;
        }
        orbit.ensure_valid()?;
        Ok(orbit)
    }
}

#[derive(Debug, Clone)]
pub struct CaseOutcome {
    pub name: String,
    pub passed: bool,
    pub diffs: Vec<String>,
}

/// Recursive subset match: every expected field must be present and equal;
/// arrays must agree in length and element-wise.
fn json_subset(expected: &Value, actual: &Value, path: &str, diffs: &mut Vec<String>) {
    match (expected, actual) {
        (Value::Object(em), Value::Object(am)) => {
            for (k, ev) in em {
                let sub = format!("{path}.{k}");
                match am.get(k) {
                    Some(av) => json_subset(ev, av, &sub, diffs),
                    None => diffs.push(format!("{sub}: missing (expected {ev})")),
                }
            }
        }
        (Value::Array(ea), Value::Array(aa)) => {
            if ea.len() != aa.len() {
                diffs.push(format!(
                    "{path}: length {} != expected {}",
                    aa.len(),
                    ea.len()
                ));
                return;
            }
            for (i, (ev, av)) in ea.iter().zip(aa.iter()).enumerate() {
                json_subset(ev, av, &format!("{path}[{i}]"), diffs);
            }
        }
        (e, a) => {
            if e != a {
                diffs.push(format!("{path}: got {a}, expected {e}"));
            }
        }
    }
}

pub fn run_case(case: &CorpusCase) -> CaseOutcome {
    let mut diffs = Vec::new();
    match case
        .input
        .orbit()
        .and_then(|orbit| {
            let cover = parse_cover_arg(&orbit, &case.input.cover)?;
            build(&orbit, &cover, &Strategy::Canonical)
        }) {
        Ok(report) => {
            let actual = report_to_json(&report);
            json_subset(&case.expected, &actual, "report", &mut diffs);
        }
        Err(e) => diffs.push(format!("build failed: {e}")),
    }
    CaseOutcome {
        name: case.name.clone(),
        passed: diffs.is_empty(),
        diffs,
    }
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusCase>> {
    serde_json::from_str(text).map_err(|e| Error::InvalidPartition(format!("bad corpus JSON: {e}")))
}

pub fn run_corpus(cases: &[CorpusCase]) -> Vec<CaseOutcome> {
    cases.iter().map(run_case).collect()
}
