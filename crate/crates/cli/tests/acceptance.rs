//! Acceptance run: one pass/fail line per criterion, nonzero exit on any failure.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use gin3_core::gin::{construct_gin_greedy, CorrectionTable};
use gin3_core::hilbert::DegreeTriple;
use gin3_core::lefschetz::{is_strong_lefschetz_x3, is_weak_lefschetz_x3};
use gin3_core::monomial::{minimalize, monomials_of_degree, shadow, DegreeSlice, Monomial};
use gin3_core::oracle::buchberger::{normal_form, s_polynomial};
use gin3_core::oracle::compare::Gate;
use gin3_core::oracle::{
    oracle_compare_with, random_homogeneous, truncated_groebner_basis, Fp, OracleConfig,
    DEFAULT_PRIME,
};
use gin3_core::reference::{parse_term, reference_examples};
use gin3_core::sweep::{
    count_discrepancies, count_table, oracle_batch, sweep_structural, CountDiscrepancy, Execution,
    GENERATOR_COUNT_CATALOGUE,
};
use gin3_core::verify;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(n: u32, name: &str, limit: Option<Duration>, f: impl FnOnce() -> Verdict) -> bool {
    let start = Instant::now();
    let result = f();
    let elapsed = start.elapsed();
    let slow = limit.is_some_and(|l| elapsed >= l);
    let bound = limit.map_or(String::new(), |l| format!(", limit {:.0?}", l));
    let (ok, detail) = match result {
        Ok(d) if !slow => (true, d),
        Ok(d) => (false, format!("{d}; too slow")),
        Err(e) => (false, e),
    };
    println!(
        "[{}] {n}. {name}: {detail} ({:.2?}{bound})",
        if ok { "PASS" } else { "FAIL" },
        elapsed
    );
    ok
}

/// The published lists with the catalogued example typos fixed.
fn corrected_example(
    degrees: &DegreeTriple,
    terms: &[String],
    table: &CorrectionTable,
) -> Result<BTreeSet<Monomial>, String> {
    let mut monos = Vec::new();
    for t in terms {
        let fix = table
            .example_corrections
            .iter()
            .find(|c| c.degrees == *degrees && c.printed == *t);
        let text = fix.map_or(t.as_str(), |c| c.corrected.as_str());
        if fix.is_some() && text.is_empty() {
            continue;
        }
        monos.extend(parse_term(text).map_err(|e| format!("{degrees}: {e}"))?);
    }
    Ok(minimalize(monos).generators().iter().copied().collect())
}

fn predicted_by_binary(d: &DegreeTriple) -> Result<BTreeSet<Monomial>, String> {
    let [a, b, c] = d.as_array();
    let out = Command::new(env!("CARGO_BIN_EXE_gin3"))
        .args([
            "predict",
            "--format",
            "json",
            "--degrees",
            &format!("{a},{b},{c}"),
        ])
        .env_remove("GIN3_FIXTURES")
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{d}: predict exited with {}", out.status));
    }
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    serde_json::from_value(v["generators"].clone()).map_err(|e| e.to_string())
}

fn published_examples() -> Verdict {
    let table = CorrectionTable::builtin();
    let examples = reference_examples();
    let stated = [([3, 3, 9], 13), ([3, 4, 9], 16), ([5, 5, 5], 25)];
    for ex in &examples {
        let expected = corrected_example(&ex.degrees, &ex.terms, &table)?;
        let got = predicted_by_binary(&ex.degrees)?;
        ensure(got == expected, || {
            format!(
                "{}: missing {:?}, extra {:?}",
                ex.degrees,
                expected.difference(&got).collect::<Vec<_>>(),
                got.difference(&expected).collect::<Vec<_>>()
            )
        })?;
        if let Some((_, mu)) = stated.iter().find(|(d, _)| *d == ex.degrees.as_array()) {
            ensure(got.len() == *mu, || {
                format!("{}: {} generators, expected {mu}", ex.degrees, got.len())
            })?;
        }
    }
    Ok(format!(
        "{}/{} lists equal as sets",
        examples.len(),
        examples.len()
    ))
}

fn generator_counts() -> Verdict {
    let rows = count_table(10, Execution::default()).map_err(|e| e.to_string())?;
    ensure(rows.len() == 165, || format!("{} triples", rows.len()))?;
    let bad: Vec<_> = rows
        .iter()
        .filter(|r| !r.normalized_match)
        .map(|r| r.degrees)
        .collect();
    ensure(bad.is_empty(), || {
        format!("normalized formula off at {bad:?}")
    })?;

    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(GENERATOR_COUNT_CATALOGUE);
    let text = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let committed: Vec<CountDiscrepancy> =
        serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let printed_off: Vec<DegreeTriple> = rows
        .iter()
        .filter(|r| !r.printed_match)
        .map(|r| r.degrees)
        .collect();
    let catalogued: Vec<DegreeTriple> = committed.iter().map(|c| c.degrees).collect();
    ensure(printed_off == catalogued, || {
        "catalogue does not list exactly the printed-formula mismatches".into()
    })?;

    let fresh = count_discrepancies(10, 1, &OracleConfig::default(), Execution::default())
        .map_err(|e| e.to_string())?;
    ensure(fresh == committed, || {
        "oracle rerun disagrees with the catalogue".into()
    })?;
    let open = fresh.iter().filter(|c| !c.adjudicated()).count();
    ensure(open == 0, || {
        format!("{open} discrepancies not confirmed by the oracle")
    })?;
    Ok(format!(
        "165/165 counts match greedy; {} printed-formula mismatches, all oracle-adjudicated",
        fresh.len()
    ))
}

fn structural_suite() -> Verdict {
    let rows = sweep_structural(10, Execution::default()).map_err(|e| e.to_string())?;
    let required = [
        verify::STRONGLY_STABLE,
        verify::ALMOST_REVLEX,
        verify::HILBERT_MATCH,
        "hilbert-symmetric",
        "total-dimension",
        verify::STRONG_LEFSCHETZ,
        verify::MU_BOUND,
    ];
    for r in &rows {
        for name in required {
            let check = r.checks.iter().find(|c| c.name == name);
            ensure(
                check.is_some_and(|c| c.status == verify::Status::Pass),
                || {
                    format!(
                        "{} fails {name}: {:?}",
                        r.degrees,
                        check.and_then(|c| c.detail.clone())
                    )
                },
            )?;
        }
    }
    ensure(rows.len() == 165, || format!("{} triples", rows.len()))?;
    Ok(format!(
        "{}/165 triples pass {} checks each",
        rows.len(),
        required.len()
    ))
}

fn oracle_equivalence() -> Verdict {
    let triples: Vec<DegreeTriple> = DegreeTriple::all_up_to(10)
        .into_iter()
        .filter(|d| d.sum() <= 12)
        .collect();
    let seeds: Vec<u64> = (1..=5).collect();
    let config = OracleConfig::default();
    let results = oracle_batch(&triples, &seeds, &config, Execution::default());
    let mut retries = 0;
    for r in &results {
        let v = r.as_ref().map_err(|e| e.to_string())?;
        ensure(v.hilbert_gate == Gate::Pass && v.p == DEFAULT_PRIME, || {
            format!("{} seed {}: gate", v.degrees, v.seed)
        })?;
        ensure(v.matches, || {
            format!(
                "{} seed {}: computed {:?}",
                v.degrees, v.seed, v.computed_generators
            )
        })?;
        retries += v.retries;
    }
    Ok(format!(
        "{} triples x {} seeds at p={DEFAULT_PRIME}: {}/{} match, {retries} gated retries",
        triples.len(),
        seeds.len(),
        results.len(),
        results.len()
    ))
}

fn negative_controls() -> Verdict {
    let parse = |s: &[&str]| minimalize(s.iter().map(|t| t.parse::<Monomial>().unwrap()));
    let j = parse(&["x1^2", "x1x2", "x2^3", "x1x3^2"]);
    ensure(j.is_strongly_stable() && !j.is_almost_revlex(), || {
        "(x1^2,x1x2,x2^3,x1x3^2) not flagged as stable but not almost revlex".into()
    })?;

    let d = DegreeTriple::new(2, 2, 2).unwrap();
    let config = OracleConfig {
        coordinate_change: false,
        monomial_input: true,
        ..OracleConfig::default()
    };
    let v = oracle_compare_with(&d, 1, &config).map_err(|e| e.to_string())?;
    let predicted = construct_gin_greedy(&d).map_err(|e| e.to_string())?.mu();
    ensure(
        !v.matches && v.computed_generators.len() == 3 && predicted == 6,
        || {
            format!(
                "monomial CI gave {} vs {predicted}",
                v.computed_generators.len()
            )
        },
    )?;

    let l = parse(&["x1", "x2^2", "x3^3"]);
    let strong = is_strong_lefschetz_x3(&l).map_err(|e| e.to_string())?;
    let weak = is_weak_lefschetz_x3(&l).map_err(|e| e.to_string())?;
    ensure(strong == Some((0, 3)) && weak, || {
        format!("(x1,x2^2,x3^3): strong {strong:?}, weak {weak}")
    })?;
    Ok("3/3 controls give the expected verdicts".into())
}

fn monomial(max: u32) -> impl Strategy<Value = Monomial> {
    (0..=max, 0..=max, 0..=max).prop_map(|(a, b, c)| Monomial::new(a, b, c))
}

fn property_suites() -> Verdict {
    const CASES: u32 = 1000;
    let config = Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    };
    let runs = std::cell::Cell::new(0u32);
    let mut report = Vec::new();
    let mut check = |name: &str, result: Result<(), String>| {
        let n = runs.replace(0);
        report.push(format!("{name} {n}"));
        result.map_err(|e| format!("{name}: {e}"))?;
        ensure(n >= CASES, || format!("{name}: only {n} cases ran"))
    };

    let slices = (0u32..9).prop_flat_map(|k| {
        prop::collection::vec(0..monomials_of_degree(k).len(), 0..12).prop_map(move |idx| {
            let all = monomials_of_degree(k);
            DegreeSlice::from_monomials(k, idx.into_iter().map(|i| all.members()[i])).unwrap()
        })
    });
    check(
        "shadow closure",
        TestRunner::new(config.clone())
            .run(&slices, |s| {
                runs.set(runs.get() + 1);
                let sh = shadow(&s);
                for m in s.iter() {
                    for i in 0..3 {
                        prop_assert!(sh.contains(&m.times_var(i, 1)));
                    }
                }
                for n in sh.iter() {
                    prop_assert!(s.iter().any(|m| m.divides(n)));
                }
                Ok(())
            })
            .map_err(|e| e.to_string()),
    )?;

    check(
        "order totality",
        TestRunner::new(config.clone())
            .run(&(monomial(8), monomial(8), monomial(8)), |(u, v, w)| {
                runs.set(runs.get() + 1);
                prop_assert_eq!(u.cmp(&v), v.cmp(&u).reverse());
                prop_assert_eq!(u == v, u.cmp(&v).is_eq());
                if u <= v && v <= w {
                    prop_assert!(u <= w);
                }
                if u.degree() != v.degree() {
                    prop_assert_eq!(u.cmp(&v), u.degree().cmp(&v.degree()));
                }
                prop_assert_eq!(u.mul(&w).cmp(&v.mul(&w)), u.cmp(&v));
                Ok(())
            })
            .map_err(|e| e.to_string()),
    )?;

    let systems = (
        prop::collection::vec((1u32..4, any::<u64>()), 1..4),
        2u32..7,
    );
    check(
        "S-pair reduction to zero",
        TestRunner::new(config.clone())
            .run(&systems, |(draws, cap)| {
                runs.set(runs.get() + 1);
                let polys: Vec<_> = draws
                    .iter()
                    .map(|&(d, s)| random_homogeneous(d, s, 101))
                    .collect();
                let basis = truncated_groebner_basis(&polys, cap).unwrap().elements;
                for f in polys.iter().filter(|f| f.degree().unwrap() <= cap) {
                    prop_assert!(normal_form(f, &basis).is_zero());
                }
                for i in 0..basis.len() {
                    for j in i + 1..basis.len() {
                        let l = basis[i]
                            .leading_monomial()
                            .unwrap()
                            .lcm(&basis[j].leading_monomial().unwrap());
                        if l.degree() <= cap {
                            prop_assert!(
                                normal_form(&s_polynomial(&basis[i], &basis[j]), &basis).is_zero()
                            );
                        }
                    }
                }
                Ok(())
            })
            .map_err(|e| e.to_string()),
    )?;

    let p = DEFAULT_PRIME;
    let element = (0..p as u64).prop_map(move |v| Fp::new(v, p));
    check(
        "field axioms",
        TestRunner::new(config)
            .run(&(element.clone(), element.clone(), element), |(a, b, c)| {
                runs.set(runs.get() + 1);
                prop_assert_eq!(a + b, b + a);
                prop_assert_eq!(a * b, b * a);
                prop_assert_eq!((a + b) + c, a + (b + c));
                prop_assert_eq!((a * b) * c, a * (b * c));
                prop_assert_eq!(a * (b + c), a * b + a * c);
                prop_assert_eq!(a + Fp::zero(p), a);
                prop_assert_eq!(a * Fp::one(p), a);
                prop_assert_eq!(a + (-a), Fp::zero(p));
                match a.inv() {
                    Some(i) => prop_assert_eq!(a * i, Fp::one(p)),
                    None => prop_assert!(a.is_zero()),
                }
                Ok(())
            })
            .map_err(|e| e.to_string()),
    )?;

    Ok(format!(
        "{} properties, at least {CASES} cases each ({})",
        report.len(),
        report.join(", ")
    ))
}

fn main() {
    let results = [
        run(
            1,
            "published examples",
            Some(Duration::from_secs(1)),
            published_examples,
        ),
        run(
            2,
            "generator-count formulas",
            Some(Duration::from_secs(10)),
            generator_counts,
        ),
        run(
            3,
            "structural suite",
            Some(Duration::from_secs(60)),
            structural_suite,
        ),
        run(
            4,
            "oracle equivalence",
            Some(Duration::from_secs(300)),
            oracle_equivalence,
        ),
        run(5, "negative controls", None, negative_controls),
        run(6, "property suites", None, property_suites),
    ];
    let passed = results.iter().filter(|ok| **ok).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
