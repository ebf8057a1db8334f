//! Hilbert functions of three-variable complete intersections.
//!
//! The product `(1 + t + ... + t^(d1-1))(1 + ... + t^(d2-1))(1 + ... + t^(d3-1))`
//! is the ground truth. The case-by-case closed formulas in [`piecewise`] are
//! transcriptions of published tables and are only ever compared against it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::monomial_count;

pub mod piecewise;

/// A sorted degree triple `2 <= d1 <= d2 <= d3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 3]", into = "[u32; 3]")]
pub struct DegreeTriple([u32; 3]);

impl DegreeTriple {
    /// Sorts the input; rejects any degree below 2.
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        let mut d = [a, b, c];
        d.sort_unstable();
        if d[0] < 2 {
            return Err(Error::InvalidDegrees([a, b, c]));
        }
        Ok(DegreeTriple(d))
    }

    pub fn d1(&self) -> u32 {
        self.0[0]
    }

    pub fn d2(&self) -> u32 {
        self.0[1]
    }

    pub fn d3(&self) -> u32 {
        self.0[2]
    }

    pub fn as_array(&self) -> [u32; 3] {
        self.0
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `d1 + d2 - d3`, possibly nonpositive.
    pub fn alpha(&self) -> i64 {
        self.d1() as i64 + self.d2() as i64 - self.d3() as i64
    }

    /// Top nonzero degree of the quotient, `d1 + d2 + d3 - 3`.
    pub fn socle_degree(&self) -> u32 {
        self.sum() - 3
    }

    /// First degree in which the initial ideal contains every monomial.
    pub fn terminal_degree(&self) -> u32 {
        self.sum() - 2
    }

    pub fn case(&self) -> CaseTag {
        classify_case(self)
    }

    /// All sorted triples with `2 <= d1 <= d2 <= d3 <= max`, in lexicographic
    /// order.
    pub fn all_up_to(max: u32) -> Vec<DegreeTriple> {
        let mut out = Vec::new();
        for a in 2..=max {
            for b in a..=max {
                for c in b..=max {
                    out.push(DegreeTriple([a, b, c]));
                }
            }
        }
        out
    }
}

impl TryFrom<[u32; 3]> for DegreeTriple {
    type Error = Error;

    fn try_from(d: [u32; 3]) -> Result<Self> {
        DegreeTriple::new(d[0], d[1], d[2])
    }
}

impl From<DegreeTriple> for [u32; 3] {
    fn from(d: DegreeTriple) -> Self {
        d.0
    }
}

impl fmt::Display for DegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Debug for DegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for DegreeTriple {
    type Err = Error;

    /// Parses `a,b,c`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "expected three degrees a,b,c, got {s:?}"
            )));
        }
        let mut d = [0u32; 3];
        for (slot, p) in d.iter_mut().zip(&parts) {
            *slot = p
                .parse()
                .map_err(|_| Error::Parse(format!("bad degree {p:?}")))?;
        }
        DegreeTriple::new(d[0], d[1], d[2])
    }
}

/// The six shapes of degree triples, each with its own generator pattern.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum CaseTag {
    /// `d1 = d2 < d3`, `d1 + d2 <= d3 + 1`
    #[serde(rename = "I.eq-lt")]
    IEqLt,
    /// `d1 < d2 < d3`, `d1 + d2 <= d3 + 1`
    #[serde(rename = "I.lt-lt")]
    ILtLt,
    /// `d1 = d2 = d3`
    #[serde(rename = "II.eq-eq")]
    IIEqEq,
    /// `d1 = d2 < d3`, `d1 + d2 > d3 + 1`
    #[serde(rename = "II.eq-lt")]
    IIEqLt,
    /// `d1 < d2 = d3`
    #[serde(rename = "II.lt-eq")]
    IILtEq,
    /// `d1 < d2 < d3`, `d1 + d2 > d3 + 1`
    #[serde(rename = "II.lt-lt")]
    IILtLt,
}

impl CaseTag {
    pub fn label(&self) -> &'static str {
        match self {
            CaseTag::IEqLt => "I.eq-lt",
            CaseTag::ILtLt => "I.lt-lt",
            CaseTag::IIEqEq => "II.eq-eq",
            CaseTag::IIEqLt => "II.eq-lt",
            CaseTag::IILtEq => "II.lt-eq",
            CaseTag::IILtLt => "II.lt-lt",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

pub fn classify_case(d: &DegreeTriple) -> CaseTag {
    let (d1, d2, d3) = (d.d1(), d.d2(), d.d3());
    if d1 + d2 <= d3 + 1 {
        // here d2 < d3 always holds
        if d1 == d2 {
            CaseTag::IEqLt
        } else {
            CaseTag::ILtLt
        }
    } else if d1 == d2 && d2 == d3 {
        CaseTag::IIEqEq
    } else if d1 == d2 {
        CaseTag::IIEqLt
    } else if d2 == d3 {
        CaseTag::IILtEq
    } else {
        CaseTag::IILtLt
    }
}

/// Values `H(k)` of a Hilbert function for `k = 0, 1, ...`; entries past the
/// end are zero.
#[derive(Clone, Debug, Eq)]
pub struct HilbertTable {
    values: Vec<u64>,
}

impl HilbertTable {
    pub fn from_values(values: Vec<u64>) -> Self {
        HilbertTable { values }
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn value(&self, k: u32) -> u64 {
        self.values.get(k as usize).copied().unwrap_or(0)
    }

    /// Last degree with a nonzero value.
    pub fn socle_degree(&self) -> Option<u32> {
        self.values.iter().rposition(|&v| v != 0).map(|k| k as u32)
    }

    pub fn total(&self) -> u64 {
        self.values.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let Some(s) = self.socle_degree() else {
            return true;
        };
        (0..=s).all(|k| self.value(k) == self.value(s - k))
    }

    /// Nondecreasing up to some peak, nonincreasing after it.
    pub fn is_unimodal(&self) -> bool {
        let v = &self.values;
        let mut i = 0;
        while i + 1 < v.len() && v[i] <= v[i + 1] {
            i += 1;
        }
        while i + 1 < v.len() && v[i] >= v[i + 1] {
            i += 1;
        }
        i + 1 >= v.len()
    }

    fn significant(&self) -> &[u64] {
        let end = self.socle_degree().map_or(0, |s| s as usize + 1);
        &self.values[..end]
    }
}

/// Two tables are equal when they describe the same function; trailing zeros
/// do not matter.
impl PartialEq for HilbertTable {
    fn eq(&self, other: &Self) -> bool {
        self.significant() == other.significant()
    }
}

/// Coefficients of the product of the three truncated geometric series.
pub fn ci_hilbert_series(degrees: &DegreeTriple) -> HilbertTable {
    let mut coeffs = vec![1u64];
    for &d in &degrees.as_array() {
        let mut next = vec![0u64; coeffs.len() + d as usize - 1];
        for (i, &c) in coeffs.iter().enumerate() {
            for slot in &mut next[i..i + d as usize] {
                *slot += c;
            }
        }
        coeffs = next;
    }
    HilbertTable::from_values(coeffs)
}

/// `|J_k| = C(k+2, 2) - H(k)` for `0 <= k <= d1 + d2 + d3 - 2`.
pub fn target_counts(degrees: &DegreeTriple) -> Vec<u64> {
    let h = ci_hilbert_series(degrees);
    (0..=degrees.terminal_degree())
        .map(|k| monomial_count(k) - h.value(k))
        .collect()
}

/// Wire form: `{"degrees":[d1,d2,d3],"H":[...],"J_counts":[...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbertReport {
    pub degrees: DegreeTriple,
    #[serde(rename = "H")]
    pub h: Vec<u64>,
    #[serde(rename = "J_counts")]
    pub j_counts: Vec<u64>,
}

impl HilbertReport {
    pub fn new(degrees: DegreeTriple) -> Self {
        HilbertReport {
            degrees,
            h: ci_hilbert_series(&degrees).values().to_vec(),
            j_counts: target_counts(&degrees),
        }
    }
}
