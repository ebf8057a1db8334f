//! The predicted generic initial ideal, built greedily from target counts or
//! expanded from closed-form generator lists, plus generator-count formulas.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::hilbert::{CaseTag, DegreeTriple};
use crate::monomial::{Monomial, MonomialIdeal};

pub mod closed_form;
pub mod counts;
mod greedy;

pub use closed_form::{
    compare_closed_form, construct_gin_closed_form, expand_closed_form, ClosedFormComparison,
    ClosedFormExpansion, Correction, CorrectionTable,
};
pub use counts::{
    generator_count, generator_count_formula, generator_count_formula_with, mu_bound,
    mu_bound_check,
};
pub use greedy::construct_gin_greedy;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Greedy,
    ClosedForm,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GinResult {
    pub degrees: DegreeTriple,
    pub method: Method,
    pub ideal: MonomialIdeal,
    /// Monomials added in each degree beyond the shadow of the previous
    /// slice; these are exactly the minimal generators of that degree.
    pub new_by_degree: BTreeMap<u32, Vec<Monomial>>,
}

impl GinResult {
    pub fn case(&self) -> CaseTag {
        self.degrees.case()
    }

    pub fn mu(&self) -> usize {
        self.ideal.mu()
    }

    pub fn to_json(&self) -> GinResultJson {
        GinResultJson {
            degrees: self.degrees,
            case: self.case(),
            method: self.method,
            generators: self.ideal.generators().to_vec(),
            new_by_degree: self.new_by_degree.clone(),
            mu: self.mu(),
        }
    }
}

/// Wire form of a [`GinResult`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinResultJson {
    pub degrees: DegreeTriple,
    pub case: CaseTag,
    pub method: Method,
    pub generators: Vec<Monomial>,
    pub new_by_degree: BTreeMap<u32, Vec<Monomial>>,
    pub mu: usize,
}

/// Groups minimal generators by degree.
pub(crate) fn by_degree(ideal: &MonomialIdeal) -> BTreeMap<u32, Vec<Monomial>> {
    let mut out: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();
    for g in ideal.generators() {
        out.entry(g.degree()).or_default().push(*g);
    }
    out
}
