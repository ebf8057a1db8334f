//! Named structural checks on a candidate generic initial ideal.

use serde::{Deserialize, Serialize};

use crate::gin::{generator_count, mu_bound};
use crate::hilbert::{ci_hilbert_series, DegreeTriple};
use crate::lefschetz::{is_strong_lefschetz_x3, is_weak_lefschetz_x3};
use crate::monomial::MonomialIdeal;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl From<bool> for Status {
    fn from(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Check {
    fn new(name: &str, status: Status, detail: Option<String>) -> Self {
        Check {
            name: name.to_string(),
            status,
            detail,
        }
    }

    fn skipped(name: &str) -> Self {
        Check::new(name, Status::Skipped, Some("needs degrees".into()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<DegreeTriple>,
    pub mu: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    /// Skipped checks do not count as passing.
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn passed(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| c.status == Status::Pass)
            .count()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const ALMOST_REVLEX: &str = "almost-revlex";
pub const STRONGLY_STABLE: &str = "strongly-stable";
pub const HILBERT_MATCH: &str = "hilbert-match";
pub const STRONG_LEFSCHETZ: &str = "strong-lefschetz";
pub const GENERATOR_COUNT: &str = "generator-count";
pub const MU_BOUND: &str = "mu-bound";

/// The six checks: almost revlex, strongly stable, Hilbert function,
/// strong Lefschetz via `x3`, generator-count formula and the bound on `mu`.
pub fn verify_ideal(ideal: &MonomialIdeal, degrees: Option<&DegreeTriple>) -> VerifyReport {
    let mut checks = Vec::with_capacity(6);

    let violation = ideal.first_almost_revlex_violation();
    checks.push(Check::new(
        ALMOST_REVLEX,
        violation.is_none().into(),
        violation.map(|(u, v)| format!("generator {u} is in the ideal but the larger {v} is not")),
    ));
    checks.push(Check::new(
        STRONGLY_STABLE,
        ideal.is_strongly_stable().into(),
        None,
    ));

    match degrees {
        Some(d) => {
            let got = ideal.quotient_hilbert(d.terminal_degree());
            let want = ci_hilbert_series(d);
            let detail =
                (got != want).then(|| format!("got {:?}, want {:?}", got.values(), want.values()));
            checks.push(Check::new(HILBERT_MATCH, (got == want).into(), detail));
        }
        None => checks.push(Check::skipped(HILBERT_MATCH)),
    }

    let slp = match is_strong_lefschetz_x3(ideal) {
        Ok(None) => Check::new(STRONG_LEFSCHETZ, Status::Pass, None),
        Ok(Some((t, b))) => Check::new(
            STRONG_LEFSCHETZ,
            Status::Fail,
            Some(format!(
                "x3^{b} on degree {t} is neither injective nor surjective"
            )),
        ),
        Err(e) => Check::new(STRONG_LEFSCHETZ, Status::Fail, Some(e.to_string())),
    };
    checks.push(slp);

    match degrees {
        Some(d) => {
            let want = generator_count(d);
            let ok = want == Some(ideal.mu() as u64);
            let detail = (!ok).then(|| format!("mu = {}, formula gives {want:?}", ideal.mu()));
            checks.push(Check::new(GENERATOR_COUNT, ok.into(), detail));
            let bound = mu_bound(d);
            let ok = ideal.mu() as u64 <= bound;
            let detail = (!ok).then(|| format!("mu = {} exceeds {bound}", ideal.mu()));
            checks.push(Check::new(MU_BOUND, ok.into(), detail));
        }
        None => {
            checks.push(Check::skipped(GENERATOR_COUNT));
            checks.push(Check::skipped(MU_BOUND));
        }
    }

    VerifyReport {
        degrees: degrees.copied(),
        mu: ideal.mu(),
        checks,
    }
}

/// Weak Lefschetz property via `x3`, as a check.
pub fn weak_lefschetz_check(ideal: &MonomialIdeal) -> Check {
    match is_weak_lefschetz_x3(ideal) {
        Ok(ok) => Check::new("weak-lefschetz", ok.into(), None),
        Err(e) => Check::new("weak-lefschetz", Status::Fail, Some(e.to_string())),
    }
}
