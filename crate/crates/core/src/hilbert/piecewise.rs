//! Case-by-case closed formulas for `H(A, k)` and `|J_k|`, transcribed as
//! published, typos included.
//!
//! Every evaluation carries the product-formula value next to it, and a
//! mismatch is a flag, not an error. A few published rows are ambiguous as
//! printed; the reading used for each is noted at the row.
//!
//! Rows are tried in order and the first row whose index range contains `k`
//! is used. Mirror rows (`H(k) = H(N - k)`) recurse into the same table only
//! when `N - k < k`.

#![allow(clippy::int_plus_one)]

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use super::{ci_hilbert_series, target_counts, CaseTag, DegreeTriple};
use crate::monomial::monomial_count;

pub type Q = Ratio<i64>;

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

fn frac(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

fn binom2(n: i64) -> i64 {
    // C(n, 2)
    n * (n - 1) / 2
}

fn sum_to(n: i64, f: impl Fn(i64) -> i64) -> i64 {
    (1..=n).map(f).sum()
}

/// Index `j` with `k = offset + j` and `0 <= j <= upper`, if any.
fn idx(k: i64, offset: Q, upper: Q) -> Option<i64> {
    if !offset.is_integer() {
        return None;
    }
    let j = k - offset.to_integer();
    (j >= 0 && q(j) <= upper).then_some(j)
}

fn floor_half(n: i64) -> i64 {
    n.div_euclid(2)
}

fn ceil_half(n: i64) -> i64 {
    -(-n).div_euclid(2)
}

/// One evaluation of a transcribed formula next to the true value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PiecewiseValue {
    pub degrees: DegreeTriple,
    pub k: u32,
    /// `None` when no row covers `k`.
    #[serde(with = "opt_ratio")]
    pub formula: Option<Q>,
    pub expected: u64,
    pub row: Option<u8>,
}

impl PiecewiseValue {
    pub fn discrepancy(&self) -> bool {
        self.formula != Some(q(self.expected as i64))
    }
}

mod opt_ratio {
    use super::Q;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<Q>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            None => s.serialize_none(),
            Some(r) if r.is_integer() => s.serialize_some(&r.to_integer().to_string()),
            Some(r) => s.serialize_some(&format!("{}/{}", r.numer(), r.denom())),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Q>, D::Error> {
        let raw: Option<String> = Option::deserialize(d)?;
        raw.map(|s| {
            let mut it = s.splitn(2, '/');
            let n: i64 = it
                .next()
                .unwrap_or("")
                .parse()
                .map_err(serde::de::Error::custom)?;
            let den: i64 = match it.next() {
                Some(x) => x.parse().map_err(serde::de::Error::custom)?,
                None => 1,
            };
            Ok(Q::new(n, den))
        })
        .transpose()
    }
}

/// The published Hilbert function formula for the case of `degrees`, at `k`.
pub fn piecewise_hilbert(degrees: &DegreeTriple, k: u32) -> PiecewiseValue {
    let found = hilbert_rows(degrees, k as i64, 0);
    PiecewiseValue {
        degrees: *degrees,
        k,
        formula: found.map(|(v, _)| v),
        expected: ci_hilbert_series(degrees).value(k),
        row: found.map(|(_, r)| r),
    }
}

fn hilbert_rows(dt: &DegreeTriple, k: i64, depth: u32) -> Option<(Q, u8)> {
    if depth > 4 {
        return None;
    }
    let (d1, d2, d3) = (dt.d1() as i64, dt.d2() as i64, dt.d3() as i64);
    let mirror = |n: i64| -> Option<(Q, u8)> {
        let target = n - k;
        if target < 0 {
            Some((q(0), 1))
        } else if target < k {
            hilbert_rows(dt, target, depth + 1)
        } else {
            None
        }
    };
    let choose = |k: i64| q(binom2(k + 2));
    match dt.case() {
        CaseTag::IEqLt => {
            let d = d1;
            if k <= d - 1 {
                return Some((choose(k), 1));
            }
            if let Some(j) = idx(k, q(d - 1), q(d - 1)) {
                return Some((q(binom2(d + 1) + sum_to(j, |i| d - i)), 2));
            }
            if 2 * d - 2 <= k && k <= d3 - 1 {
                return Some((q(d * d), 3));
            }
            if k >= d3 {
                return mirror(2 * d + d3 - 3).map(|(v, _)| (v, 4));
            }
            None
        }
        CaseTag::ILtLt => {
            if k <= d1 - 1 {
                return Some((choose(k), 1));
            }
            if let Some(j) = idx(k, q(d1 - 1), q(d2 - d1)) {
                return Some((q(binom2(d1 + 1) + j * d1), 2));
            }
            if let Some(j) = idx(k, q(d2 - 1), q(d1 - 1)) {
                return Some((
                    q(binom2(d1 + 1) + d1 * (d2 - d1) + sum_to(j, |i| d1 - i)),
                    3,
                ));
            }
            if d1 + d2 - 2 <= k && k <= d3 - 1 {
                return Some((q(d1 * d2), 4));
            }
            if k >= d3 {
                return mirror(d1 + d2 + d3 - 3).map(|(v, _)| (v, 5));
            }
            None
        }
        CaseTag::IIEqEq => {
            let d = d1;
            if k <= d - 1 {
                return Some((choose(k), 1));
            }
            if let Some(j) = idx(k, q(d - 1), q(floor_half(d - 1))) {
                return Some((choose(k) - frac(3 * j * (j + 1), 2), 2));
            }
            if k >= ceil_half(3 * d - 3) {
                return mirror(3 * d - 3).map(|(v, _)| (v, 3));
            }
            None
        }
        CaseTag::IIEqLt => {
            let d = d1;
            if k <= d - 1 {
                return Some((choose(k), 1));
            }
            if let Some(j) = idx(k, q(d - 1), q(d3 - d)) {
                return Some((q(binom2(d + 1) + sum_to(j, |i| d - i)), 2));
            }
            if let Some(j) = idx(k, q(d3 - 1), q(floor_half(2 * d - d3 - 1))) {
                return Some((
                    q(binom2(d + 1)
                        + sum_to(d3 - d, |i| d - i)
                        + sum_to(j, |i| 2 * d - d3 - 2 * i)),
                    3,
                ));
            }
            if k >= ceil_half(d3 + 2 * d - 3) {
                return mirror(d3 + 2 * d - 3).map(|(v, _)| (v, 4));
            }
            None
        }
        CaseTag::IILtEq => {
            let d = d2;
            if k <= d1 - 2 {
                return Some((choose(k), 1));
            }
            // printed offset is cut off after "d1 -"; read as d1 - 1
            if let Some(j) = idx(k, q(d1 - 1), q(d - d1)) {
                return Some((q(binom2(d1 + 1) + j * d1), 2));
            }
            if let Some(j) = idx(k, q(d - 1), q(floor_half(d1 - 1))) {
                return Some((
                    q(binom2(d1 + 1) + d1 * (d - d1) + sum_to(j, |i| d1 - 2 * i)),
                    3,
                ));
            }
            if k >= ceil_half(d1 + 2 * d - 3) {
                return mirror(d1 + 2 * d - 3).map(|(v, _)| (v, 4));
            }
            None
        }
        CaseTag::IILtLt => {
            let alpha = d1 + d2 - d3;
            if k <= d1 - 2 {
                return Some((choose(k), 1));
            }
            if let Some(j) = idx(k, q(d1 - 1), q(d2 - d1)) {
                return Some((q(binom2(d1 + 1) + j * d1), 2));
            }
            // printed range reads "0 <= k <= d3 - d2"; read as a bound on j
            if let Some(j) = idx(k, q(d2 - 1), q(d3 - d2)) {
                return Some((
                    q(binom2(d1 + 1) + d1 * (d2 - d1) + sum_to(j, |i| d1 - i)),
                    3,
                ));
            }
            if let Some(j) = idx(k, q(d3 - 1), q(floor_half(alpha - 1))) {
                // the third summand is printed as sum_{i=1}^{d3-1} (d1 - j)
                return Some((
                    q(binom2(d1 + 1)
                        + d1 * (d2 - d1)
                        + (d3 - 1) * (d1 - j)
                        + sum_to(j, |i| alpha - 2 * i)),
                    4,
                ));
            }
            if k > d3 - 1 + floor_half(alpha - 1) {
                return mirror(d1 + d2 + d3 - 3).map(|(v, _)| (v, 5));
            }
            None
        }
    }
}

/// The published `|J_k|` formula for the case of `degrees`, at `k`.
///
/// Rows written in terms of an earlier count `|J_m|` are evaluated with the
/// true value of `|J_m|`, so they test only their own increment.
pub fn piecewise_target_count(degrees: &DegreeTriple, k: u32) -> PiecewiseValue {
    let truth = target_counts(degrees);
    let true_count = |m: i64| -> Option<Q> {
        if m < 0 {
            return None;
        }
        Some(match truth.get(m as usize) {
            Some(&v) => q(v as i64),
            None => q(monomial_count(m as u32) as i64),
        })
    };
    let expected = match truth.get(k as usize) {
        Some(&v) => v,
        None => monomial_count(k),
    };
    let found = count_rows(degrees, k as i64, &true_count);
    PiecewiseValue {
        degrees: *degrees,
        k,
        formula: found.map(|(v, _)| v),
        expected,
        row: found.map(|(_, r)| r),
    }
}

fn count_rows(dt: &DegreeTriple, k: i64, prior: &dyn Fn(i64) -> Option<Q>) -> Option<(Q, u8)> {
    let (d1, d2, d3) = (dt.d1() as i64, dt.d2() as i64, dt.d3() as i64);
    let full = |k: i64| q(binom2(k + 2));
    match dt.case() {
        CaseTag::IEqLt => {
            let d = d1;
            if k <= d - 1 {
                return Some((q(0), 1));
            }
            if let Some(j) = idx(k, q(d - 1), q(d - 1)) {
                return Some((q(j * (j + 1)), 2));
            }
            if let Some(j) = idx(k, q(2 * d - 2), q(d3 + 1 - 2 * d)) {
                return Some((q(d * (d - 1) + 2 * d * j) + frac(j * (j - 1), 2), 3));
            }
            if let Some(j) = idx(k, q(d3 - 1), q(d - 1)) {
                return Some((
                    frac(d3 * (d3 + 1), 2) - q(d * d) + q(j * d3 + j * (j + 1)),
                    4,
                ));
            }
            if let Some(j) = idx(k, q(d + d3 - 2), q(d)) {
                return Some((
                    frac(d3 * (d3 - 1), 2) + q(d * (d3 - 1) + j * (d3 + 2 * d)),
                    5,
                ));
            }
            if k >= 2 * d + d3 - 2 {
                return Some((full(k), 6));
            }
            None
        }
        CaseTag::ILtLt => {
            // first row printed with an undefined d; read as d1
            if k <= d1 - 1 {
                return Some((q(0), 1));
            }
            if let Some(j) = idx(k, q(d1 - 1), q(d2 - d1)) {
                return Some((frac(j * (j + 1), 2), 2));
            }
            if let Some(j) = idx(k, q(d2 - 1), q(d1 - 1)) {
                return Some((
                    frac((d2 - d1) * (d2 - d1 - 1), 2) + q(j * (d2 - d1) + j * (j + 1)),
                    3,
                ));
            }
            if let Some(j) = idx(k, q(d1 + d2 - 2), q(d3 - d1 - d2 + 1)) {
                return Some((
                    frac(d1 * d1 + d2 * d2 - d1 - d2, 2) + q(j * (d1 + d2)) + frac(j * (j - 1), 2),
                    4,
                ));
            }
            if let Some(j) = idx(k, q(d3 - 1), q(d1 - 1)) {
                return Some((
                    frac(d3 * d3 + d3 - 2 * d1 * d2, 2) + q(j * d3 + j * (j + 1)),
                    5,
                ));
            }
            if let Some(j) = idx(k, q(d1 + d3 - 2), q(d2 - d1)) {
                return Some((
                    frac((d1 + d3) * (d1 + d3 - 1) + d1 * d1 - d1 - 2 * d1 * d2, 2)
                        + q(j * (d3 + 2 * d1))
                        + frac(j * (j - 1), 2),
                    6,
                ));
            }
            // printed as "k = d2 + d3 - 2" with a free j; read as j + d2 + d3 - 2
            if let Some(j) = idx(k, q(d2 + d3 - 2), q(d1 - 1)) {
                return Some((
                    frac((d2 + d3) * (d2 + d3 - 1) + d1 * (d1 - 1), 2) + q(j * (d1 + d2 + d3)),
                    7,
                ));
            }
            // printed as k >= 3d - 2 with an undefined d; read as the terminal degree
            if k >= d1 + d2 + d3 - 2 {
                return Some((full(k), 8));
            }
            None
        }
        CaseTag::IIEqEq => {
            let d = d1;
            if k <= d - 1 {
                return Some((q(0), 1));
            }
            if let Some(j) = idx(k, q(d - 1), q(floor_half(3 * d - 1))) {
                return Some((frac(3 * j * (j + 1), 2), 2));
            }
            if d % 2 == 0 {
                if let Some(j) = idx(k, frac(3 * d - 2, 2), frac(d - 2, 2)) {
                    return Some((
                        frac(3 * d * d + 3 * d * (4 * j + 2), 8) + frac(3 * j * (j + 1), 2),
                        3,
                    ));
                }
            } else if let Some(j) = idx(k, frac(3 * d - 3, 2), frac(d - 1, 2)) {
                return Some((
                    frac(3 * (d * d - 1) + 12 * j * d, 8) + frac(3 * j * j, 2),
                    3,
                ));
            }
            if let Some(j) = idx(k, q(2 * d - 2), q(d - 1)) {
                return Some((frac(3 * d * (d - 1), 2) + q(3 * j * d), 4));
            }
            if k >= 3 * d - 2 {
                return Some((full(k), 5));
            }
            None
        }
        CaseTag::IIEqLt => {
            let d = d1;
            if k <= d - 1 {
                return Some((q(0), 1));
            }
            if let Some(j) = idx(k, q(d - 1), q(d3 - d)) {
                return Some((q(j * (j + 1)), 2));
            }
            if let Some(j) = idx(k, q(d3 - 1), q(floor_half(2 * d - d3 - 1))) {
                return Some((
                    q(d3 * d3 + d3 - d * d - d - 2 * d * d3 + j * (2 * d3 - d))
                        + frac(3 * j * (j + 1), 2),
                    3,
                ));
            }
            if d3 % 2 == 0 {
                if let Some(j) = idx(k, frac(2 * d + d3 - 2, 2), frac(2 * d - d3 - 2, 2)) {
                    return Some((
                        frac(4 * d * d + 3 * d3 * d3 - 4 * d * d3 + 4 * d, 8)
                            + frac(j * (2 * d + d3), 2)
                            + frac(3 * j * (j + 1), 2),
                        4,
                    ));
                }
            } else if let Some(j) = idx(k, frac(2 * d + d3 - 3, 2), frac(2 * d - d3 - 1, 2)) {
                return Some((
                    frac(3 * d3 * d3 + 4 * d * d - 4 * d * d3 - 3, 2)
                        + frac(j * (2 * d + d3 - 3), 2)
                        + frac(3 * j * (j + 1), 2),
                    4,
                ));
            }
            if let Some(j) = idx(k, q(2 * d - 2), q(d3 - d)) {
                return Some((
                    q(3 * d * d - 2 * d) + frac(d3 * (d3 + 1), 2) - q(2 * d * d3)
                        + q((4 * d - d3) * j + j * (j - 1)),
                    5,
                ));
            }
            if let Some(j) = idx(k, q(d3 + d - 2), q(d - 1)) {
                return Some((
                    frac((d + d3) * (d + d3 - 1), 2) - frac(d * (d + 1), 2) + q(j * (2 * d + d3)),
                    6,
                ));
            }
            if k >= 3 * d - 2 {
                return Some((full(k), 7));
            }
            None
        }
        CaseTag::IILtEq => {
            let d = d2;
            if k <= d1 - 1 {
                return Some((q(0), 1));
            }
            if let Some(j) = idx(k, q(d1 - 1), q(d - d1)) {
                return Some((frac(j * (j + 1), 2), 2));
            }
            if let Some(j) = idx(k, q(d - 1), q(floor_half(d1 - 1))) {
                return Some((
                    frac((d - d1) * (d - d1 - 1), 2) + q(j * (d - d1)) + frac(3 * j * (j + 1), 2),
                    3,
                ));
            }
            if d1 % 2 == 0 {
                if let Some(j) = idx(k, frac(2 * d + d1 - 2, 2), frac(d1 - 2, 2)) {
                    return Some((
                        frac(3 * d1 * d1 + 2 * d1 + 4 * d * d + 4 * d - 4 * d * d1, 8)
                            + frac(j * (2 * d + d1), 2)
                            + frac(3 * j * (j + 1), 2),
                        4,
                    ));
                }
            } else if let Some(j) = idx(k, frac(2 * d + d1 - 3, 2), frac(d1 - 1, 2)) {
                return Some((
                    frac(3 * d1 * d1 + 4 * d * d - 4 * d * d1 - 3, 2)
                        + frac(j * (2 * d + d1), 2)
                        + frac(3 * j * j, 2),
                    4,
                ));
            }
            if let Some(j) = idx(k, q(d1 + d - 2), q(d - d1)) {
                return Some((
                    frac(d * (d - 1), 2)
                        + q(d1 * (d1 - 1) + j * (2 * d1 + d))
                        + frac(j * (j - 1), 2),
                    5,
                ));
            }
            if let Some(j) = idx(k, q(2 * d - 2), q(d1 - 1)) {
                return Some((
                    frac(2 * d * (2 * d - 1) - d1 * (d1 - 1), 2) + q(j * (2 * d + d1)),
                    6,
                ));
            }
            if k >= 3 * d - 2 {
                return Some((full(k), 7));
            }
            None
        }
        CaseTag::IILtLt => {
            let alpha = d1 + d2 - d3;
            let s = d1 + d2 + d3;
            if k <= d1 - 1 {
                return Some((q(0), 1));
            }
            if let Some(j) = idx(k, q(d1 - 1), q(d2 - d1)) {
                return Some((frac(j * (j + 1), 2), 2));
            }
            if let Some(j) = idx(k, q(d2 - 1), q(d3 - d2)) {
                return Some((q(d2 * (d2 - 1) + j * (d2 - d1) + j * (j + 1)), 3));
            }
            if let Some(j) = idx(k, q(d3 - 1), q(floor_half(alpha - 1))) {
                return Some((
                    prior(d3 - 1)? + q(j * (2 * d3 - d1 - d2)) + frac(3 * j * (j + 1), 2),
                    4,
                ));
            }
            if s % 2 == 0 {
                if let Some(j) = idx(k, frac(s - 2, 2), frac(alpha - 2, 2)) {
                    return Some((
                        prior((s - 4) / 2)? + frac((j + 1) * s, 2) + frac(3 * j * (j + 1), 2),
                        5,
                    ));
                }
            } else if let Some(j) = idx(k, frac(s - 3, 2), frac(alpha - 1, 2)) {
                return Some((prior((s - 3) / 2)? + frac(j * s, 2) + frac(3 * j * j, 2), 5));
            }
            // printed range "0 <= d3 - d2"; read as 0 <= j <= d3 - d2
            if let Some(j) = idx(k, q(d1 + d2 - 2), q(d3 - d2)) {
                return Some((
                    prior(d1 + d2 - 2)? + q(j * (2 * d1 + 2 * d2 - d3 - 1) + j * j),
                    6,
                ));
            }
            if let Some(j) = idx(k, q(d1 + d3 - 2), q(d2 - d1)) {
                return Some((
                    prior(d1 + d3 - 2)? + q(j * (2 * d1 + d3 - 1)) + frac(j * (j + 1), 2),
                    7,
                ));
            }
            // printed offset d1 + d3 - 2 again, anchored at |J_{d2+d3-1}|
            if let Some(j) = idx(k, q(d1 + d3 - 2), q(d1 - 1)) {
                return Some((prior(d2 + d3 - 1)? + q(j * s), 8));
            }
            if k >= 3 * d1 - 2 {
                return Some((full(k), 9));
            }
            None
        }
    }
}
