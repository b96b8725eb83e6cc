//! Output records. Integers are decimal strings; maps are ordered so the
//! same inputs give the same bytes apart from `elapsed_ms`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use unidescent::dlmult::CaseTag;
use unidescent::ggp::{DescentResult, Ell0, Model, ThetaLift};
use unidescent::{CharacterTable, MultiplicityResult, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub output: Output,
    pub meta: Meta,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub engine_version: String,
    /// `Some` for multiplicity outputs: whether every reported value is
    /// pinned by a theorem.
    pub covered: Option<bool>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Output {
    Descent(DescentRecord),
    FirstOccurrence(FirstOccurrenceRecord),
    Multiplicity(MultRecord),
    Sweep(SweepRecord),
    Theta(ThetaLift),
    CharTable(TableRecord),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentRecord {
    pub model: Model,
    pub ell0: usize,
    /// `false` when `ell0` is only an upper bound.
    pub ell0_exact: bool,
    pub descent: Option<Partition>,
    pub determined: bool,
    pub verified: Option<bool>,
}

impl From<&DescentResult> for DescentRecord {
    fn from(d: &DescentResult) -> Self {
        DescentRecord {
            model: d.model,
            ell0: d.ell0.value(),
            ell0_exact: matches!(d.ell0, Ell0::Exact(_)),
            descent: d.descent.clone(),
            determined: d.determined,
            verified: d.verified,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FirstOccurrenceRecord {
    pub bessel: DescentRecord,
    pub fourier_jacobi: DescentRecord,
    pub k: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultRecord {
    pub lambda: Partition,
    pub nu: Partition,
    pub model: Model,
    pub raw: String,
    pub value: String,
    pub covered: bool,
    pub case: CaseTag,
}

impl MultRecord {
    pub fn new(lambda: &Partition, nu: &Partition, model: Model, r: &MultiplicityResult) -> Self {
        MultRecord {
            lambda: lambda.clone(),
            nu: nu.clone(),
            model,
            raw: r.raw.to_string(),
            value: r.value.to_string(),
            covered: r.covered,
            case: r.case,
        }
    }

    pub const CSV_HEADER: [&'static str; 7] =
        ["lambda", "nu", "model", "raw", "value", "covered", "case"];

    pub fn csv_row(&self) -> Vec<String> {
        let case = serde_json::to_value(self.case).expect("case serializes");
        vec![
            self.lambda.to_string(),
            self.nu.to_string(),
            self.model.to_string(),
            self.raw.clone(),
            self.value.clone(),
            self.covered.to_string(),
            case.as_str().unwrap_or_default().to_string(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub target: usize,
    pub entries: Vec<MultRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRecord {
    pub n: usize,
    /// Class labels `μ`, also the row order.
    pub labels: Vec<Partition>,
    /// `rows[i][j] = σ_{labels[i]}(w_{labels[j]})`.
    pub rows: Vec<Vec<String>>,
}

impl From<&CharacterTable> for TableRecord {
    fn from(t: &CharacterTable) -> Self {
        TableRecord {
            n: t.n(),
            labels: t.labels().to_vec(),
            rows: t
                .rows()
                .map(|(_, row)| row.iter().map(ToString::to_string).collect())
                .collect(),
        }
    }
}

impl ResultRecord {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("record serializes")
    }
}
