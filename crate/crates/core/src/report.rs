//! The JSON report shared by `classify` and the positivity checks:
//! `{"instance", "verdict", "decomposition", "witness", "difference"}`.

use serde::Serialize;

use crate::ring::SchurExpansion;
use crate::shape::Composition;
use crate::staircase::{FatSumCertificate, PositivityReport, SumOfDiffReport};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionTerm {
    pub alpha: Composition,
    pub coeff: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub instance: String,
    pub verdict: String,
    pub decomposition: Vec<DecompositionTerm>,
    pub witness: Option<String>,
    pub difference: Option<SchurExpansion>,
    /// Extra layers of the difference inequality; only set for that check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub middle: Option<SchurExpansion>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub identity: Option<SchurExpansion>,
}

fn terms(decomposition: &[(Composition, i64)]) -> Vec<DecompositionTerm> {
    decomposition
        .iter()
        .map(|(alpha, coeff)| DecompositionTerm {
            alpha: alpha.clone(),
            coeff: *coeff,
        })
        .collect()
}

fn positivity_verdict(positive: bool) -> String {
    if positive { "positive" } else { "not_positive" }.to_string()
}

impl Report {
    pub fn classification(cert: &FatSumCertificate) -> Self {
        Report {
            instance: cert.shape.to_string(),
            verdict: if cert.is_sum() { "is_sum" } else { "not_sum" }.to_string(),
            decomposition: terms(&cert.decomposition),
            witness: cert.witness.as_ref().map(|t| t.to_string()),
            difference: None,
            middle: None,
            identity: None,
        }
    }

    pub fn positivity(
        instance: String,
        report: &PositivityReport,
        decomposition: &[(Composition, i64)],
    ) -> Self {
        Report {
            instance,
            verdict: positivity_verdict(report.positive),
            decomposition: terms(decomposition),
            witness: None,
            difference: Some(report.difference.clone()),
            middle: None,
            identity: None,
        }
    }

    /// `difference` is outer minus middle.
    pub fn sum_of_diff(instance: String, report: &SumOfDiffReport) -> Self {
        Report {
            instance,
            verdict: positivity_verdict(report.holds()),
            decomposition: terms(&report.decomposition),
            witness: None,
            difference: Some(report.outer_minus_middle.clone()),
            middle: Some(report.middle.clone()),
            identity: Some(report.transposed_identity.clone()),
        }
    }

    /// `1*^^3,2,1,1 + 1*^^3,1,3`, or `0` for an empty decomposition.
    pub fn decomposition_text(&self) -> String {
        if self.decomposition.is_empty() {
            return "0".to_string();
        }
        self.decomposition
            .iter()
            .map(|t| format!("{}*^^{}", t.coeff, t.alpha))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
