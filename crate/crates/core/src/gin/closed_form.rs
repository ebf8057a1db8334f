//! Closed-form generator lists, one template per case and parity.
//!
//! The templates are expanded exactly as published. Known misprints are
//! identified by [`Correction`] sites; a [`CorrectionTable`] (a committed
//! JSON fixture) decides which sites are repaired. Expanding with an empty
//! table gives the raw published lists.
//!
//! Notation: `{x1,x2}^j` is the set of all `j + 1` monomials of degree `j` in
//! `x1, x2`, listed `x1^j` first. A run `x1^a x2^b x3^c, ..., x2^e x3^c` is the
//! same set written by its endpoints; it is expanded from the first endpoint,
//! and an endpoint of the wrong degree is reported as an anomaly.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::OnceLock;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{by_degree, construct_gin_greedy, GinResult, Method};
use crate::error::{Error, Result};
use crate::hilbert::{CaseTag, DegreeTriple};
use crate::monomial::{minimalize, Monomial};

type Q = Ratio<i64>;

/// A misprint in one of the published templates or count formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Correction {
    /// `x3 x2^((3d-3)/3)` should read `x3 x2^((3d-3)/2)`.
    EqEqOddX3Exponent,
    /// Second pure power `x2^((d1+2d-4)/2)` should read `x2^((d1+2d-2)/2)`.
    LtEqEvenPurePower,
    /// Run range `1 <= j <= (d1-4)/2` should read `1 <= j <= (d1-2)/2`.
    LtEqEvenRunRange,
    /// Run end `x3^(2j+1) x2^((d1+2d-3)/2 - 3j)` should end in `- j`.
    LtEqOddRunEndpoint,
    /// Run `x3^(2j) x1^(2j-1) x2^((2d+d3-2)/2-3j), ..., x3^(2j) x2^((2d+d3-4)/2-j)`
    /// is one short in `x2`: `(2d+d3)/2` and `(2d+d3-2)/2`.
    EqLtEvenRunOffset,
    /// Generator count for `d1 < d2 = d3 = d` branches on the parity of `d`;
    /// it must branch on the parity of `d1`.
    LtEqCountParity,
}

impl Correction {
    pub const ALL: [Correction; 6] = [
        Correction::EqEqOddX3Exponent,
        Correction::EqLtEvenRunOffset,
        Correction::LtEqEvenPurePower,
        Correction::LtEqEvenRunRange,
        Correction::LtEqOddRunEndpoint,
        Correction::LtEqCountParity,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateCorrection {
    pub site: Correction,
    pub printed: String,
    pub corrected: String,
}

/// A fix to one term of a published example list, matched by its exact text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleCorrection {
    pub degrees: DegreeTriple,
    pub printed: String,
    pub corrected: String,
}

/// The typo-normalization table.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrectionTable {
    pub template_corrections: Vec<TemplateCorrection>,
    pub example_corrections: Vec<ExampleCorrection>,
}

const DEFAULT_TABLE: &str = include_str!("../../fixtures/corrections.json");

/// Environment variable naming an alternative correction table.
pub const FIXTURES_ENV: &str = "GIN3_FIXTURES";

impl CorrectionTable {
    /// No corrections: templates expand as published.
    pub fn empty() -> Self {
        CorrectionTable::default()
    }

    /// The committed table.
    pub fn builtin() -> Self {
        static TABLE: OnceLock<CorrectionTable> = OnceLock::new();
        TABLE
            .get_or_init(|| {
                serde_json::from_str(DEFAULT_TABLE).expect("builtin correction table is valid JSON")
            })
            .clone()
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))
    }

    /// The table named by `GIN3_FIXTURES`, or the builtin one.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(FIXTURES_ENV) {
            Some(p) => Self::from_path(Path::new(&p)),
            None => Ok(Self::builtin()),
        }
    }

    pub fn applies(&self, site: Correction) -> bool {
        self.template_corrections.iter().any(|c| c.site == site)
    }
}

/// Expansion of one template, with whatever went wrong along the way.
#[derive(Clone, Debug)]
pub struct ClosedFormExpansion {
    pub result: GinResult,
    pub anomalies: Vec<String>,
    pub corrections_used: Vec<Correction>,
}

struct Expander<'a> {
    table: &'a CorrectionTable,
    out: BTreeSet<Monomial>,
    anomalies: Vec<String>,
    used: BTreeSet<Correction>,
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn half(n: i64) -> Q {
    Q::new(n, 2)
}

fn exponent(v: Q) -> Option<u32> {
    (v.is_integer() && v >= q(0)).then(|| v.to_integer() as u32)
}

/// Integers `lo..=floor(hi)`.
fn span(lo: i64, hi: Q) -> std::ops::RangeInclusive<i64> {
    lo..=hi.floor().to_integer()
}

impl<'a> Expander<'a> {
    fn new(table: &'a CorrectionTable) -> Self {
        Expander {
            table,
            out: BTreeSet::new(),
            anomalies: Vec::new(),
            used: BTreeSet::new(),
        }
    }

    fn fix(&mut self, site: Correction) -> bool {
        let on = self.table.applies(site);
        if on {
            self.used.insert(site);
        }
        on
    }

    /// `x1^a x2^b x3^c {x1,x2}^j`.
    fn term(&mut self, a: Q, b: Q, c: Q, j: Q, what: &str) {
        match (exponent(a), exponent(b), exponent(c), exponent(j)) {
            (Some(a), Some(b), Some(c), Some(j)) => {
                for i in 0..=j {
                    self.out.insert(Monomial::new(a + j - i, b + i, c));
                }
            }
            _ => self.anomalies.push(format!(
                "{what}: exponents ({a}, {b}, {c}) with {{x1,x2}}^{j} are not nonnegative integers"
            )),
        }
    }

    fn mono(&mut self, a: Q, b: Q, c: Q, what: &str) {
        self.term(a, b, c, q(0), what)
    }

    /// `x1^a x2^b x3^c, ..., x2^last x3^c`.
    fn run(&mut self, a: Q, b: Q, c: Q, last: Q, what: &str) {
        if a + b != last {
            self.anomalies.push(format!(
                "{what}: run from x1^{a} x2^{b} ends at x2^{last}, expected x2^{}",
                a + b
            ));
        }
        self.term(q(0), b, c, a, what)
    }
}

/// Expands the template for `degrees` with the corrections in `table`.
pub fn expand_closed_form(degrees: &DegreeTriple, table: &CorrectionTable) -> ClosedFormExpansion {
    let mut ex = Expander::new(table);
    let (d1, d2, d3) = (
        degrees.d1() as i64,
        degrees.d2() as i64,
        degrees.d3() as i64,
    );
    match degrees.case() {
        CaseTag::IEqLt => eq_lt_small(&mut ex, d1, d3),
        CaseTag::ILtLt => lt_lt_small(&mut ex, d1, d2, d3),
        CaseTag::IIEqEq => eq_eq(&mut ex, d1),
        CaseTag::IIEqLt => eq_lt_large(&mut ex, d1, d3),
        CaseTag::IILtEq => lt_eq(&mut ex, d1, d2),
        CaseTag::IILtLt => lt_lt_large(&mut ex, d1, d2, d3),
    }
    let ideal = minimalize(ex.out).with_max_relevant_degree(degrees.terminal_degree());
    ClosedFormExpansion {
        result: GinResult {
            degrees: *degrees,
            method: Method::ClosedForm,
            new_by_degree: by_degree(&ideal),
            ideal,
        },
        anomalies: ex.anomalies,
        corrections_used: ex.used.into_iter().collect(),
    }
}

/// Closed-form Gin with the committed correction table applied.
pub fn construct_gin_closed_form(degrees: &DegreeTriple) -> GinResult {
    expand_closed_form(degrees, &CorrectionTable::builtin()).result
}

// d1 = d2 = d < d3, 2d <= d3 + 1
fn eq_lt_small(ex: &mut Expander, d: i64, d3: i64) {
    ex.mono(q(d), q(0), q(0), "x1^d");
    for j in span(0, q(d - 1)) {
        ex.mono(q(d - j - 1), q(2 * j + 1), q(0), "x1^(d-j-1) x2^(2j+1)");
    }
    for j in span(0, q(d - 2)) {
        ex.term(
            q(0),
            q(2 * d - 2 * j - 2),
            q(d3 - 2 * d + 2 * j + 2),
            q(j),
            "x2^(2d-2j-2) x3^(d3-2d+2j+2) {x1,x2}^j",
        );
    }
    for j in span(1, q(d)) {
        ex.term(
            q(0),
            q(0),
            q(d3 + 2 * j - 2),
            q(d - j),
            "x3^(d3+2j-2) {x1,x2}^(d-j)",
        );
    }
}

// d1 < d2 < d3, d1 + d2 <= d3 + 1
fn lt_lt_small(ex: &mut Expander, d1: i64, d2: i64, d3: i64) {
    ex.mono(q(d1), q(0), q(0), "x1^d1");
    for j in span(1, q(d1 - 1)) {
        ex.mono(
            q(d1 - j),
            q(d2 - d1 + 2 * j - 1),
            q(0),
            "x1^(d1-j) x2^(d2-d1+2j-1)",
        );
    }
    ex.mono(q(0), q(d1 + d2 - 1), q(0), "x2^(d1+d2-1)");
    ex.mono(
        q(0),
        q(d1 + d2 - 2),
        q(d3 - d1 - d2 + 2),
        "x2^(d1+d2-2) x3^(d3-d1-d2+2)",
    );
    for j in span(1, q(d1 - 2)) {
        ex.term(
            q(0),
            q(d1 + d2 - 2 * j - 2),
            q(d3 - d1 - d2 + 2 * j + 2),
            q(j),
            "x3^(d3-d1-d2+2j+2) x2^(d1+d2-2j-2) {x1,x2}^j",
        );
    }
    for j in span(1, q(d2 - d1)) {
        ex.term(
            q(0),
            q(d2 - d1 + 1 - j),
            q(d3 + d1 - d2 - 2 + 2 * j),
            q(d1 - 1),
            "x3^(d3+d1-d2-2+2j) x2^(d2-d1+1-j) {x1,x2}^(d1-1)",
        );
    }
    for j in span(1, q(d1)) {
        ex.term(
            q(0),
            q(0),
            q(d3 + d2 - d1 + 2 * j - 2),
            q(d1 - j),
            "x3^(d3+d2-d1+2j-2) {x1,x2}^(d1-j)",
        );
    }
}

// d1 = d2 = d3 = d
fn eq_eq(ex: &mut Expander, d: i64) {
    ex.term(q(d - 2), q(0), q(0), q(2), "x1^(d-2) {x1,x2}^2");
    if d % 2 == 1 {
        for j in span(1, half(d - 3)) {
            ex.mono(
                q(d - 2 * j - 1),
                q(3 * j + 1),
                q(0),
                "x1^(d-2j-1) x2^(3j+1)",
            );
            ex.mono(
                q(d - 2 * j - 2),
                q(3 * j + 2),
                q(0),
                "x1^(d-2j-2) x2^(3j+2)",
            );
        }
        ex.mono(q(0), half(3 * d - 1), q(0), "x2^((3d-1)/2)");
        let b = if ex.fix(Correction::EqEqOddX3Exponent) {
            half(3 * d - 3)
        } else {
            Q::new(3 * d - 3, 3)
        };
        ex.mono(q(0), b, q(1), "x3 x2^((3d-3)/3)");
        for j in span(1, half(d - 3)) {
            ex.run(
                q(2 * j),
                half(3 * d - 3) - q(3 * j),
                q(2 * j + 1),
                half(3 * d - 3) - q(j),
                "x3^(2j+1) x1^(2j) x2^((3d-3)/2-3j), ..., x3^(2j+1) x2^((3d-3)/2-j)",
            );
        }
    } else {
        for j in span(1, half(d - 4)) {
            ex.mono(
                q(d - 2 * j - 1),
                q(3 * j + 1),
                q(0),
                "x1^(d-2j-1) x2^(3j+1)",
            );
            ex.mono(
                q(d - 2 * j - 2),
                q(3 * j + 2),
                q(0),
                "x1^(d-2j-2) x2^(3j+2)",
            );
        }
        ex.mono(q(1), half(3 * d - 4), q(0), "x1 x2^((3d-4)/2)");
        ex.mono(q(0), half(3 * d - 2), q(0), "x2^((3d-2)/2)");
        for j in span(1, half(d - 2)) {
            ex.run(
                q(2 * j - 1),
                half(3 * d) - q(3 * j),
                q(2 * j),
                half(3 * d - 2) - q(j),
                "x3^(2j) x1^(2j-1) x2^(3d/2-3j), ..., x3^(2j) x2^((3d-2)/2-j)",
            );
        }
    }
    for j in span(1, q(d)) {
        ex.term(
            q(0),
            q(0),
            q(d - 2 + 2 * j),
            q(d - j),
            "x3^(d-2+2j) {x1,x2}^(d-j)",
        );
    }
}

// d1 = d2 = d < d3, 2d > d3 + 1
fn eq_lt_large(ex: &mut Expander, d: i64, d3: i64) {
    ex.mono(q(d), q(0), q(0), "x1^d");
    ex.mono(q(d - 1), q(1), q(0), "x1^(d-1) x2");
    for j in span(1, q(d3 - d - 1)) {
        ex.mono(q(d - j - 1), q(2 * j + 1), q(0), "x1^(d-j-1) x2^(2j+1)");
    }
    let pair_upper = if d3 % 2 == 0 {
        half(2 * d - d3)
    } else {
        half(2 * d - d3 - 1)
    };
    for j in span(1, pair_upper) {
        ex.mono(
            q(2 * d - d3 - 2 * j + 1),
            q(2 * d3 - 2 * d + 3 * j - 2),
            q(0),
            "x1^(2d-d3-2j+1) x2^(2d3-2d+3j-2)",
        );
        ex.mono(
            q(2 * d - d3 - 2 * j),
            q(2 * d3 - 2 * d + 3 * j - 1),
            q(0),
            "x1^(2d-d3-2j) x2^(2d3-2d+3j-1)",
        );
    }
    if d3 % 2 == 0 {
        let shift = if ex.fix(Correction::EqLtEvenRunOffset) {
            2
        } else {
            0
        };
        for j in span(1, half(2 * d - d3 - 2)) {
            ex.run(
                q(2 * j - 1),
                half(2 * d + d3 - 2 + shift) - q(3 * j),
                q(2 * j),
                half(2 * d + d3 - 4 + shift) - q(j),
                "x3^(2j) x1^(2j-1) x2^((2d+d3-2)/2-3j), ..., x3^(2j) x2^((2d+d3-4)/2-j)",
            );
        }
    } else {
        ex.mono(q(0), half(2 * d + d3 - 1), q(0), "x2^((2d+d3-1)/2)");
        ex.mono(q(0), half(2 * d + d3 - 3), q(1), "x3 x2^((2d+d3-3)/2)");
        for j in span(1, half(2 * d - d3 - 3)) {
            ex.run(
                q(2 * j),
                half(2 * d + d3 - 3) - q(3 * j),
                q(2 * j + 1),
                half(2 * d + d3 - 3) - q(j),
                "x3^(2j+1) x1^(2j) x2^((2d+d3-3)/2-3j), ..., x3^(2j+1) x2^((2d+d3-3)/2-j)",
            );
        }
    }
    for j in span(1, q(d3 - d)) {
        ex.term(
            q(0),
            q(2 * d3 - 2 * d + 2 - 2 * j),
            q(2 * d - d3 - 2 + 2 * j),
            q(2 * d - d3 + j - 2),
            "x3^(2d-d3-2+2j) x2^(2d3-2d+2-2j) {x1,x2}^(2d-d3+j-2)",
        );
    }
    for j in span(1, q(d)) {
        ex.term(
            q(0),
            q(0),
            q(d3 - 2 + 2 * j),
            q(d - j),
            "x3^(d3-2+2j) {x1,x2}^(d-j)",
        );
    }
}

// d1 < d2 = d3 = d
fn lt_eq(ex: &mut Expander, d1: i64, d: i64) {
    ex.mono(q(d1), q(0), q(0), "x1^d1");
    let pair_upper = if d1 % 2 == 0 {
        half(d1 - 2)
    } else {
        half(d1 - 1)
    };
    for j in span(1, pair_upper) {
        ex.mono(
            q(d1 - 2 * j + 1),
            q(d - d1 - 2 + 3 * j),
            q(0),
            "x1^(d1-2j+1) x2^(d-d1-2+3j)",
        );
        ex.mono(
            q(d1 - 2 * j),
            q(d - d1 - 1 + 3 * j),
            q(0),
            "x1^(d1-2j) x2^(d-d1-1+3j)",
        );
    }
    if d1 % 2 == 0 {
        ex.mono(q(1), half(d1 + 2 * d - 4), q(0), "x1 x2^((d1+2d-4)/2)");
        let b = if ex.fix(Correction::LtEqEvenPurePower) {
            half(d1 + 2 * d - 2)
        } else {
            half(d1 + 2 * d - 4)
        };
        ex.mono(q(0), b, q(0), "x2^((d1+2d-4)/2)");
        let upper = if ex.fix(Correction::LtEqEvenRunRange) {
            half(d1 - 2)
        } else {
            half(d1 - 4)
        };
        for j in span(1, upper) {
            ex.run(
                q(2 * j - 1),
                half(d1 + 2 * d) - q(3 * j),
                q(2 * j),
                half(d1 + 2 * d - 2) - q(j),
                "x3^(2j) x1^(2j-1) x2^((d1+2d)/2-3j), ..., x3^(2j) x2^((d1+2d-2)/2-j)",
            );
        }
    } else {
        ex.mono(q(0), half(d1 + 2 * d - 1), q(0), "x2^((d1+2d-1)/2)");
        ex.mono(q(0), half(d1 + 2 * d - 3), q(1), "x3 x2^((d1+2d-3)/2)");
        let fixed = ex.fix(Correction::LtEqOddRunEndpoint);
        for j in span(1, half(d1 - 3)) {
            let last = if fixed {
                half(d1 + 2 * d - 3) - q(j)
            } else {
                half(d1 + 2 * d - 3) - q(3 * j)
            };
            ex.run(
                q(2 * j),
                half(d1 + 2 * d - 3) - q(3 * j),
                q(2 * j + 1),
                last,
                "x3^(2j+1) x1^(2j) x2^((d1+2d-3)/2-3j), ..., x3^(2j+1) x2^((d1+2d-3)/2-3j)",
            );
        }
    }
    for j in span(1, q(d - d1)) {
        ex.term(
            q(0),
            q(d - d1 - j + 1),
            q(d1 - 2 + 2 * j),
            q(d1 - 1),
            "x3^(d1-2+2j) x2^(d-d1-j+1) {x1,x2}^(d1-1)",
        );
    }
    for j in span(1, q(d1)) {
        ex.term(
            q(0),
            q(0),
            q(2 * d - d1 - 2 + 2 * j),
            q(d1 - j),
            "x3^(2d-d1-2+2j) {x1,x2}^(d1-j)",
        );
    }
}

// d1 < d2 < d3, d1 + d2 > d3 + 1
fn lt_lt_large(ex: &mut Expander, d1: i64, d2: i64, d3: i64) {
    let alpha = d1 + d2 - d3;
    let s = d1 + d2 + d3;
    ex.mono(q(d1), q(0), q(0), "x1^d1");
    // x1^(d1-1) x2^(d2-d1+1), x1^(d1-2) x2^(d2-d1+3), ..., x1^alpha x2^(2d3-d1-d2-1)
    for i in span(1, q(d3 - d2)) {
        ex.mono(
            q(d1 - i),
            q(d2 - d1 + 2 * i - 1),
            q(0),
            "x1^(d1-i) x2^(d2-d1+2i-1)",
        );
    }
    let pair_upper = if alpha % 2 == 0 {
        half(alpha - 2)
    } else {
        half(alpha - 1)
    };
    for j in span(1, pair_upper) {
        ex.mono(
            q(alpha - 2 * j),
            q(2 * d3 - d1 - d2 + 3 * j - 1),
            q(0),
            "x1^(alpha-2j) x2^(2d3-d1-d2+3j-1)",
        );
        ex.mono(
            q(alpha - 2 * j + 1),
            q(2 * d3 - d1 - d2 + 3 * j - 2),
            q(0),
            "x1^(alpha-2j+1) x2^(2d3-d1-d2+3j-2)",
        );
    }
    if alpha % 2 == 0 {
        ex.mono(q(0), half(s - 2), q(0), "x2^((s-2)/2)");
        ex.mono(q(1), half(s - 4), q(0), "x1 x2^((s-4)/2)");
        for j in span(1, half(alpha - 2)) {
            ex.term(
                q(0),
                half(s) - q(3 * j),
                q(2 * j),
                q(2 * j - 1),
                "x3^(2j) x2^(s/2-3j) {x1,x2}^(2j-1)",
            );
        }
    } else {
        ex.mono(q(0), half(s - 1), q(0), "x2^((s-1)/2)");
        ex.mono(q(0), half(s - 3), q(1), "x3 x2^((s-3)/2)");
        for j in span(1, half(alpha - 3)) {
            ex.run(
                q(2 * j),
                half(s - 3) - q(3 * j),
                q(2 * j + 1),
                half(s - 3) - q(j),
                "x1^(2j) x3^(2j+1) x2^((s-3)/2-3j), ..., x3^(2j+1) x2^((s-3)/2-j)",
            );
        }
    }
    for j in span(1, q(d3 - d2)) {
        ex.run(
            q(alpha + j - 2),
            q(2 * d3 - d1 - d2 - 2 * j + 2),
            q(alpha + 2 * j - 2),
            q(d3 - j),
            "x1^(alpha+j-2) x2^(2d3-d1-d2-2j+2) x3^(alpha+2j-2), ..., x2^(d3-j) x3^(alpha+2j-2)",
        );
    }
    for j in span(1, q(d2 - d1)) {
        ex.run(
            q(d1 - 1),
            q(d2 - d1 - j + 1),
            q(d1 + d3 - d2 + 2 * j - 2),
            q(d2 - j),
            "x1^(d1-1) x3^(d1+d3-d2+2j-2) x2^(d2-d1-j+1), ..., x3^(d1+d3-d2+2j-2) x2^(d2-j)",
        );
    }
    for j in span(1, q(d1)) {
        ex.term(
            q(0),
            q(0),
            q(d2 + d3 - d1 - 2 + 2 * j),
            q(d1 - j),
            "{x1,x2}^(d1-j) x3^(d2+d3-d1-2+2j)",
        );
    }
}

/// Closed form against greedy, with and without corrections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormComparison {
    pub degrees: DegreeTriple,
    pub raw_match: bool,
    pub normalized_match: bool,
    /// Greedy generators absent from the normalized expansion.
    pub missing: Vec<Monomial>,
    /// Normalized generators absent from greedy.
    pub extra: Vec<Monomial>,
    pub raw_missing: Vec<Monomial>,
    pub raw_extra: Vec<Monomial>,
    pub raw_anomalies: Vec<String>,
    pub corrections_used: Vec<Correction>,
}

fn set_diff(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let b: BTreeSet<&Monomial> = b.iter().collect();
    a.iter().filter(|m| !b.contains(m)).copied().collect()
}

pub fn compare_closed_form(
    degrees: &DegreeTriple,
    table: &CorrectionTable,
) -> Result<ClosedFormComparison> {
    let greedy = construct_gin_greedy(degrees)?;
    let raw = expand_closed_form(degrees, &CorrectionTable::empty());
    let fixed = expand_closed_form(degrees, table);
    let g = greedy.ideal.generators();
    let r = raw.result.ideal.generators();
    let n = fixed.result.ideal.generators();
    Ok(ClosedFormComparison {
        degrees: *degrees,
        raw_match: g == r,
        normalized_match: g == n,
        missing: set_diff(g, n),
        extra: set_diff(n, g),
        raw_missing: set_diff(g, r),
        raw_extra: set_diff(r, g),
        raw_anomalies: raw.anomalies,
        corrections_used: fixed.corrections_used,
    })
}

/// Groups a comparison list by which corrections each triple needed.
pub fn corrections_histogram(rows: &[ClosedFormComparison]) -> BTreeMap<String, usize> {
    let mut out = BTreeMap::new();
    for r in rows {
        let key = if r.raw_match {
            "raw".to_string()
        } else {
            format!("{:?}", r.corrections_used)
        };
        *out.entry(key).or_insert(0) += 1;
    }
    out
}
