use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::ring::Ring;
use crate::series::TruncatedSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    /// A mathematical counterexample was found.
    Fail,
    /// The rigorous comparison could not be decided at the available precision.
    FailPrecision,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::FailPrecision => "fail-precision",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Index of the first failure: an exponent for series checks, `n` for scans.
    pub n: u64,
    pub witness: String,
}

/// Outcome of one identity, congruence, inequality or bound check.
///
/// A counterexample is present exactly when the status is not [`Status::Pass`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    claim: String,
    status: Status,
    range: String,
    counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_ratio: Option<f64>,
    elapsed_ms: u64,
}

impl VerificationReport {
    pub fn pass(claim: impl Into<String>, range: impl Into<String>) -> Self {
        VerificationReport {
            claim: claim.into(),
            status: Status::Pass,
            range: range.into(),
            counterexample: None,
            max_ratio: None,
            elapsed_ms: 0,
        }
    }

    pub fn fail(claim: impl Into<String>, range: impl Into<String>, counterexample: Counterexample) -> Self {
        Self::failing(claim, range, Status::Fail, counterexample)
    }

    pub fn fail_precision(claim: impl Into<String>, range: impl Into<String>, counterexample: Counterexample) -> Self {
        Self::failing(claim, range, Status::FailPrecision, counterexample)
    }

    fn failing(claim: impl Into<String>, range: impl Into<String>, status: Status, ce: Counterexample) -> Self {
        VerificationReport { counterexample: Some(ce), status, ..Self::pass(claim, range) }
    }

    /// Pass when `counterexample` is `None`, fail otherwise.
    pub fn from_outcome(
        claim: impl Into<String>,
        range: impl Into<String>,
        counterexample: Option<Counterexample>,
    ) -> Self {
        match counterexample {
            None => Self::pass(claim, range),
            Some(ce) => Self::fail(claim, range, ce),
        }
    }

    /// Attaches a ratio, rounded to 12 decimal places so that the JSON form is stable.
    pub fn with_max_ratio(mut self, ratio: f64) -> Self {
        self.max_ratio = Some((ratio * 1e12).round() / 1e12);
        self
    }

    pub fn claim(&self) -> &str {
        &self.claim
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn range(&self) -> &str {
        &self.range
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }

    pub fn max_ratio(&self) -> Option<f64> {
        self.max_ratio
    }

    pub fn elapsed_ms(&self) -> u64 {
        self.elapsed_ms
    }

    /// Copy with the timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        VerificationReport { elapsed_ms: 0, ..self.clone() }
    }
}

/// Runs a check and records its wall-clock time in the report.
pub(crate) fn timed(f: impl FnOnce() -> Result<VerificationReport>) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut report = f()?;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Exact coefficient comparison; the witness names the identity and the first differing exponent.
pub(crate) fn compare<R: Ring>(
    label: &str,
    lhs: &TruncatedSeries<R>,
    rhs: &TruncatedSeries<R>,
) -> Result<Option<Counterexample>> {
    Ok(lhs.first_difference(rhs)?.map(|e| Counterexample {
        n: e as u64,
        witness: format!(
            "{label}: coefficient of x^{e} is {} on the left, {} on the right",
            lhs.coeffs()[e],
            rhs.coeffs()[e]
        ),
    }))
}

/// Runs labelled comparisons in order and keeps the first failure.
pub(crate) fn first_failure<I>(checks: I) -> Result<Option<Counterexample>>
where
    I: IntoIterator<Item = Result<Option<Counterexample>>>,
{
    for c in checks {
        if let Some(ce) = c? {
            return Ok(Some(ce));
        }
    }
    Ok(None)
}
