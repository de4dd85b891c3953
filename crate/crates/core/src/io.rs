//! JSON documents exchanged with the command-line tool, and a plain-text
//! export for computer algebra systems.
//!
//! * ideal: `{"n": 25, "t": 3, "generators": {"2": [[1, 4], ...], ...}}`
//! * spec: `{"n": 25, "t": 3, "corners": [{"k": 6, "l": 2, "a": 2}, ...]}`
//! * report: verdict, violations, per-corner audit, failure and the
//!   constructed ideal in the ideal schema.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::betti::TIdeal;
use crate::monomial::{Ambient, TMonomial};
use crate::solver::{CornerAudit, CornerSpec, Failure, SolveReport, Verdict, Violation};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub t: usize,
    /// Generators by degree. They need not be minimal; reading keeps only
    /// the minimal ones.
    pub generators: BTreeMap<usize, Vec<TMonomial>>,
}

impl IdealJson {
    pub fn from_ideal(ideal: &TIdeal) -> Self {
        let amb = ideal.ambient();
        let generators = ideal.generators().iter().map(|(&d, g)| (d, g.to_vec())).collect();
        IdealJson { n: amb.n(), t: amb.t(), generators }
    }

    pub fn to_ideal(&self) -> Result<TIdeal> {
        let amb = Ambient::new(self.n, self.t)?;
        for (&d, gens) in &self.generators {
            if let Some(bad) = gens.iter().find(|u| u.degree() != d) {
                return Err(crate::Error::DegreeMismatch { expected: d, found: bad.degree() });
            }
        }
        TIdeal::from_generators(amb, self.generators.values().flatten().cloned())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportJson<'a> {
    pub verdict: Verdict,
    pub spec: &'a CornerSpec,
    pub violations: Vec<ViolationJson<'a>>,
    pub notes: &'a [String],
    pub corners: &'a [CornerAudit],
    pub failure: &'a Option<Failure>,
    pub ideal: Option<IdealJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ViolationJson<'a> {
    #[serde(flatten)]
    pub violation: &'a Violation,
    pub message: String,
}

impl<'a> ReportJson<'a> {
    pub fn new(report: &'a SolveReport) -> Self {
        ReportJson {
            verdict: report.verdict,
            spec: &report.spec,
            violations: report
                .violations
                .iter()
                .map(|v| ViolationJson { violation: v, message: v.to_string() })
                .collect(),
            notes: &report.notes,
            corners: &report.corners,
            failure: &report.failure,
            ideal: report.ideal.as_ref().map(IdealJson::from_ideal),
        }
    }
}

/// `R = QQ[x_1..x_n];` followed by `I = ideal(x_1*x_4, ...);`.
pub fn ideal_to_m2(ideal: &TIdeal) -> String {
    let gens: Vec<String> = ideal.all_generators().map(TMonomial::to_m2).collect();
    format!("R = QQ[x_1..x_{}];\nI = ideal({});\n", ideal.ambient().n(), gens.join(", "))
}
