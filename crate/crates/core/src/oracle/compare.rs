//! Random complete intersections against the predicted generic initial ideal.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::buchberger::buchberger_initial_ideal;
use super::change::{apply_change, LinearChange};
use super::field::{check_modulus, DEFAULT_PRIME};
use super::poly::{random_homogeneous_from, SparsePolynomial};
use crate::error::{Error, Result};
use crate::gin::construct_gin_greedy;
use crate::hilbert::{ci_hilbert_series, DegreeTriple};
use crate::monomial::{Monomial, MonomialIdeal};

pub const DEFAULT_RETRIES: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub p: u32,
    /// Apply a random invertible change of coordinates before computing.
    pub coordinate_change: bool,
    /// Use `x1^d1, x2^d2, x3^d3` instead of random polynomials.
    pub monomial_input: bool,
    pub max_retries: u32,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            p: DEFAULT_PRIME,
            coordinate_change: true,
            monomial_input: false,
            max_retries: DEFAULT_RETRIES,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Gate {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleVerdict {
    pub degrees: DegreeTriple,
    pub p: u32,
    pub seed: u64,
    pub hilbert_gate: Gate,
    #[serde(rename = "match")]
    pub matches: bool,
    pub computed_generators: Vec<Monomial>,
    pub predicted_generators: Vec<Monomial>,
    pub retries: u32,
}

/// The three input polynomials for one attempt. Attempt `a` of seed `s` uses
/// stream `a` of the generator seeded with `s`.
pub fn draw_system(
    degrees: &DegreeTriple,
    seed: u64,
    attempt: u32,
    config: &OracleConfig,
) -> Vec<SparsePolynomial> {
    let p = config.p;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(attempt as u64);
    let polys: Vec<SparsePolynomial> = if config.monomial_input {
        (0..3)
            .map(|i| {
                SparsePolynomial::monomial(
                    Monomial::var(i).times_var(i, degrees.as_array()[i] - 1),
                    p,
                )
            })
            .collect()
    } else {
        degrees
            .as_array()
            .iter()
            .map(|&d| random_homogeneous_from(&mut rng, d, p))
            .collect()
    };
    if !config.coordinate_change {
        return polys;
    }
    let g = LinearChange::random(&mut rng, p);
    polys.iter().map(|f| apply_change(&g, f)).collect()
}

/// Initial ideal of one draw, if it passes the Hilbert gate.
pub fn gated_initial_ideal(
    degrees: &DegreeTriple,
    seed: u64,
    attempt: u32,
    config: &OracleConfig,
) -> Result<Option<MonomialIdeal>> {
    let polys = draw_system(degrees, seed, attempt, config);
    let cap = degrees.terminal_degree();
    match buchberger_initial_ideal(&polys, cap) {
        Ok(j) if j.quotient_hilbert(cap) == ci_hilbert_series(degrees) => Ok(Some(j)),
        Ok(_) | Err(Error::NonArtinianTruncation { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

pub fn oracle_compare_with(
    degrees: &DegreeTriple,
    seed: u64,
    config: &OracleConfig,
) -> Result<OracleVerdict> {
    check_modulus(config.p as u64)?;
    let predicted = construct_gin_greedy(degrees)?;
    for attempt in 0..=config.max_retries {
        if let Some(j) = gated_initial_ideal(degrees, seed, attempt, config)? {
            return Ok(OracleVerdict {
                degrees: *degrees,
                p: config.p,
                seed,
                hilbert_gate: Gate::Pass,
                matches: j == predicted.ideal,
                computed_generators: j.generators().to_vec(),
                predicted_generators: predicted.ideal.generators().to_vec(),
                retries: attempt,
            });
        }
    }
    Err(Error::RetriesExhausted {
        degrees: degrees.as_array(),
        attempts: config.max_retries + 1,
        failing: vec![seed],
    })
}

/// Oracle run with a random coordinate change over `F_p`.
pub fn oracle_compare(degrees: &DegreeTriple, seed: u64, p: u32) -> Result<OracleVerdict> {
    oracle_compare_with(
        degrees,
        seed,
        &OracleConfig {
            p,
            ..OracleConfig::default()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u32, b: u32, c: u32) -> DegreeTriple {
        DegreeTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn small_triples_match() {
        for d in [t(2, 2, 2), t(2, 2, 3)] {
            let v = oracle_compare(&d, 1, DEFAULT_PRIME).unwrap();
            assert!(v.matches, "{v:?}");
            assert_eq!(v.hilbert_gate, Gate::Pass);
        }
        for seed in 1..=10 {
            assert!(
                oracle_compare(&t(2, 3, 4), seed, DEFAULT_PRIME)
                    .unwrap()
                    .matches
            );
        }
    }

    #[test]
    fn monomial_input_without_change_differs() {
        let config = OracleConfig {
            coordinate_change: false,
            monomial_input: true,
            ..OracleConfig::default()
        };
        let v = oracle_compare_with(&t(2, 2, 2), 1, &config).unwrap();
        assert!(!v.matches);
        assert_eq!(v.computed_generators.len(), 3);
        assert_eq!(v.predicted_generators.len(), 6);
    }

    #[test]
    fn deterministic() {
        let a = oracle_compare(&t(2, 3, 3), 4, DEFAULT_PRIME).unwrap();
        let b = oracle_compare(&t(2, 3, 3), 4, DEFAULT_PRIME).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(matches!(
            oracle_compare(&t(2, 2, 2), 1, 32001),
            Err(Error::NotPrime(32001))
        ));
    }

    #[test]
    fn verdict_json_shape() {
        let v = oracle_compare(&t(2, 2, 2), 1, DEFAULT_PRIME).unwrap();
        let json = serde_json::to_value(&v).unwrap();
        for key in [
            "degrees",
            "p",
            "seed",
            "hilbert_gate",
            "match",
            "computed_generators",
            "predicted_generators",
            "retries",
        ] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        assert_eq!(json["hilbert_gate"], "pass");
    }
}
