//! Closed formulas for the number of minimal generators, as published.

use num_rational::Ratio;

use super::closed_form::{Correction, CorrectionTable};
use crate::hilbert::{CaseTag, DegreeTriple};
use crate::monomial::MonomialIdeal;

/// The published generator-count formula for the case and parity of
/// `degrees`. Some branches can produce a non-integer.
pub fn generator_count_formula(degrees: &DegreeTriple) -> Ratio<i64> {
    generator_count_formula_with(degrees, &CorrectionTable::empty())
}

/// The generator-count formula with the corrections in `table`.
pub fn generator_count_formula_with(degrees: &DegreeTriple, table: &CorrectionTable) -> Ratio<i64> {
    let (d1, d2, d3) = (
        degrees.d1() as i64,
        degrees.d2() as i64,
        degrees.d3() as i64,
    );
    let q = Ratio::from_integer;
    let r = Ratio::new;
    match degrees.case() {
        CaseTag::IEqLt => q(d1 * d1 + d1 + 1),
        CaseTag::ILtLt => q(1 + d1 + d1 * d2),
        CaseTag::IIEqEq => {
            let d = d1;
            if d % 2 == 1 {
                q(1) + r(d * (d + 1), 2) + r((d + 1) * (d + 1), 4)
            } else {
                q(1) + r(d * (d + 1), 2) + r(d * (d + 2), 4)
            }
        }
        CaseTag::IIEqLt => {
            let d = d1;
            if d3 % 2 == 0 {
                q(d * (d + 1)) - r(2 * d - d3, 2).pow(2) + q(1)
            } else {
                q(d * (d + 1)) - r((2 * d - d3).pow(2) - 1, 4) + q(1)
            }
        }
        CaseTag::IILtEq => {
            let d = d2;
            let parity = if table.applies(Correction::LtEqCountParity) {
                d1
            } else {
                d
            };
            if parity % 2 == 0 {
                q(d1 * (d + 1)) - r(d1, 2).pow(2) + q(1)
            } else {
                q(d1 * (d + 1)) - r(d1 * d1 - 1, 4) + q(1)
            }
        }
        CaseTag::IILtLt => {
            let alpha = d1 + d2 - d3;
            if alpha % 2 == 0 {
                q(d1 * (d2 + 1)) - r(alpha, 2).pow(2) + q(1)
            } else {
                q(d1 * (d2 + 1)) - r(alpha * alpha - 1, 4) + q(1)
            }
        }
    }
}

/// The formula value, with the committed corrections, when it is a
/// nonnegative integer.
pub fn generator_count(degrees: &DegreeTriple) -> Option<u64> {
    let v = generator_count_formula_with(degrees, &CorrectionTable::builtin());
    (v.is_integer() && v >= Ratio::from_integer(0)).then(|| v.to_integer() as u64)
}

/// `d1 (d2 + 1) + 1`.
pub fn mu_bound(degrees: &DegreeTriple) -> u64 {
    degrees.d1() as u64 * (degrees.d2() as u64 + 1) + 1
}

pub fn mu_bound_check(degrees: &DegreeTriple, ideal: &MonomialIdeal) -> bool {
    ideal.mu() as u64 <= mu_bound(degrees)
}
