//! Published example generator lists and their comparison with greedy.
//!
//! Each list is stored term by term as printed, in a plain text notation:
//! factors `xI` or `xI^e` joined by `*`, optionally with `{x1,x2}^j`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gin::{construct_gin_greedy, CorrectionTable};
use crate::hilbert::DegreeTriple;
use crate::monomial::{minimalize, Monomial, MonomialIdeal};

const EXAMPLES: &str = include_str!("../fixtures/reference_examples.json");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceExample {
    pub degrees: DegreeTriple,
    pub terms: Vec<String>,
}

pub fn reference_examples() -> Vec<ReferenceExample> {
    serde_json::from_str(EXAMPLES).expect("reference examples fixture is valid JSON")
}

fn parse_exponent(s: &str, term: &str) -> Result<u32> {
    if s.is_empty() {
        return Err(Error::Parse(format!("missing exponent in {term:?}")));
    }
    s.parse()
        .map_err(|_| Error::Parse(format!("bad exponent {s:?} in {term:?}")))
}

/// Expands one printed term into the monomials it stands for.
pub fn parse_term(term: &str) -> Result<Vec<Monomial>> {
    let term = term.trim();
    if term.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut base = [0u32; 3];
    let mut span = 0u32;
    for factor in term.split('*') {
        let factor = factor.trim();
        if let Some(rest) = factor.strip_prefix("{x1,x2}") {
            span += match rest.strip_prefix('^') {
                Some(e) => parse_exponent(e, term)?,
                None if rest.is_empty() => 1,
                None => return Err(Error::Parse(format!("bad factor {factor:?} in {term:?}"))),
            };
            continue;
        }
        let body = factor
            .strip_prefix('x')
            .ok_or_else(|| Error::Parse(format!("bad factor {factor:?} in {term:?}")))?;
        let (var, e) = match body.split_once('^') {
            Some((v, e)) => (v, parse_exponent(e, term)?),
            None => (body, 1),
        };
        let i = match var {
            "1" => 0,
            "2" => 1,
            "3" => 2,
            _ => return Err(Error::Parse(format!("unknown variable x{var} in {term:?}"))),
        };
        base[i] += e;
    }
    Ok((0..=span)
        .map(|i| Monomial::new(base[0] + span - i, base[1] + i, base[2]))
        .collect())
}

/// One published list read with and without the example corrections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExampleCheck {
    pub degrees: DegreeTriple,
    /// Printed terms that do not parse, with the reason.
    pub unparsed: Vec<(String, String)>,
    /// Printed terms replaced by the correction table.
    pub corrected: Vec<(String, String)>,
    /// Printed monomials that are multiples of other printed monomials.
    pub redundant: Vec<Monomial>,
    pub printed_mu: usize,
    pub greedy_mu: usize,
    pub raw_match: bool,
    pub normalized_match: bool,
    pub missing: Vec<Monomial>,
    pub extra: Vec<Monomial>,
}

fn read_terms<'a>(terms: impl Iterator<Item = &'a str>) -> (Vec<Monomial>, Vec<(String, String)>) {
    let mut monos = Vec::new();
    let mut bad = Vec::new();
    for t in terms {
        match parse_term(t) {
            Ok(ms) => monos.extend(ms),
            Err(e) => bad.push((t.to_string(), e.to_string())),
        }
    }
    (monos, bad)
}

pub fn check_example(example: &ReferenceExample, table: &CorrectionTable) -> Result<ExampleCheck> {
    let greedy = construct_gin_greedy(&example.degrees)?;
    let cap = example.degrees.terminal_degree();

    let (raw_monos, unparsed) = read_terms(example.terms.iter().map(String::as_str));
    let raw = minimalize(raw_monos.iter().copied()).with_max_relevant_degree(cap);
    let kept: BTreeSet<&Monomial> = raw.generators().iter().collect();
    let redundant: Vec<Monomial> = raw_monos
        .iter()
        .filter(|m| !kept.contains(m))
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();

    let mut corrected = Vec::new();
    let normalized_terms: Vec<&str> = example
        .terms
        .iter()
        .filter_map(|t| {
            let fix = table
                .example_corrections
                .iter()
                .find(|c| c.degrees == example.degrees && c.printed == *t);
            match fix {
                Some(c) => {
                    corrected.push((t.clone(), c.corrected.clone()));
                    (!c.corrected.is_empty()).then_some(c.corrected.as_str())
                }
                None => Some(t.as_str()),
            }
        })
        .collect();
    let (norm_monos, norm_bad) = read_terms(normalized_terms.into_iter());
    if let Some((t, e)) = norm_bad.first() {
        return Err(Error::Fixture(format!(
            "{}: term {t:?} still unreadable after corrections: {e}",
            example.degrees
        )));
    }
    let normalized = minimalize(norm_monos).with_max_relevant_degree(cap);

    let diff = |a: &MonomialIdeal, b: &MonomialIdeal| -> Vec<Monomial> {
        a.generators()
            .iter()
            .filter(|m| !b.generators().contains(m))
            .copied()
            .collect()
    };
    Ok(ExampleCheck {
        degrees: example.degrees,
        printed_mu: raw.mu(),
        greedy_mu: greedy.mu(),
        raw_match: unparsed.is_empty() && redundant.is_empty() && raw == greedy.ideal,
        normalized_match: normalized == greedy.ideal,
        missing: diff(&greedy.ideal, &normalized),
        extra: diff(&normalized, &greedy.ideal),
        unparsed,
        corrected,
        redundant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_terms() {
        assert_eq!(parse_term("x3^9*{x1,x2}^2").unwrap().len(), 3);
        assert_eq!(
            parse_term("x3^2*x1*x2^5").unwrap(),
            vec![Monomial::new(1, 5, 2)]
        );
        assert_eq!(
            parse_term("x3^11*{x1,x2}").unwrap(),
            vec![Monomial::new(1, 0, 11), Monomial::new(0, 1, 11)]
        );
        assert!(parse_term("x12^6*{x1,x2}^2").is_err());
        assert!(parse_term("x3^11*{x1,x2}^").is_err());
        assert!(parse_term("").is_err());
    }

    #[test]
    fn every_example_matches_after_normalization() {
        let table = CorrectionTable::builtin();
        for ex in reference_examples() {
            let c = check_example(&ex, &table).unwrap();
            assert!(c.normalized_match, "{c:?}");
        }
    }

    #[test]
    fn clean_examples_match_as_printed() {
        let table = CorrectionTable::builtin();
        let clean: Vec<DegreeTriple> = reference_examples()
            .iter()
            .map(|ex| check_example(ex, &table).unwrap())
            .filter(|c| c.raw_match)
            .map(|c| c.degrees)
            .collect();
        let expect: Vec<DegreeTriple> = [
            [3, 3, 9],
            [5, 5, 5],
            [4, 4, 6],
            [4, 4, 5],
            [3, 5, 6],
            [4, 5, 6],
        ]
        .iter()
        .map(|d| DegreeTriple::new(d[0], d[1], d[2]).unwrap())
        .collect();
        assert_eq!(clean, expect);
    }
}
