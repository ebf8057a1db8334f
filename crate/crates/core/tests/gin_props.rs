mod common;

use gin3_core::gin::{
    compare_closed_form, construct_gin_greedy, expand_closed_form, generator_count_formula_with,
    mu_bound_check, CorrectionTable,
};
use gin3_core::hilbert::{ci_hilbert_series, target_counts, DegreeTriple};
use gin3_core::lefschetz::{
    is_strong_lefschetz_x3, is_weak_lefschetz_x3, lefschetz_report, x3_power_map_rank, Verdict,
};
use gin3_core::monomial::{minimalize, monomials_of_degree, shadow, Monomial, MonomialIdeal};
use gin3_core::verify::verify_ideal;
use proptest::prelude::*;

fn triple(max: u32) -> impl Strategy<Value = DegreeTriple> {
    (2..=max, 2..=max, 2..=max).prop_map(|(a, b, c)| DegreeTriple::new(a, b, c).unwrap())
}

/// Hilbert function of `k[x1,x2,x3]/(x1^d1, x2^d2, x3^d3)` by counting boxes.
fn box_count(d: &DegreeTriple, k: u32) -> u64 {
    let [a, b, c] = d.as_array();
    let mut n = 0;
    for i in 0..a {
        for j in 0..b {
            if i + j <= k && k - i - j < c {
                n += 1;
            }
        }
    }
    n
}

fn artinian_ideal() -> impl Strategy<Value = MonomialIdeal> {
    (
        (1u32..6, 1u32..6, 1u32..6),
        prop::collection::vec((0u32..4, 0u32..4, 0u32..4), 0..5),
    )
        .prop_map(|((a, b, c), extra)| {
            let mut gens = vec![
                Monomial::new(a, 0, 0),
                Monomial::new(0, b, 0),
                Monomial::new(0, 0, c),
            ];
            gens.extend(extra.into_iter().map(|(x, y, z)| Monomial::new(x, y, z)));
            minimalize(gens)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn complete_intersection_hilbert_function(d in triple(10)) {
        let h = ci_hilbert_series(&d);
        for k in 0..=d.terminal_degree() + 2 {
            prop_assert_eq!(h.value(k), box_count(&d, k));
        }
        prop_assert!(h.is_symmetric());
        prop_assert!(h.is_unimodal());
        prop_assert_eq!(h.total(), d.d1() as u64 * d.d2() as u64 * d.d3() as u64);
        prop_assert_eq!(h.socle_degree(), Some(d.sum() - 3));
    }

    #[test]
    fn multiplication_rank_matches_matrix_rank(j in artinian_ideal(), t in 0u32..8, b in 1u32..5) {
        let r = x3_power_map_rank(&j, t, b);
        let src: Vec<Monomial> = monomials_of_degree(t).iter().copied().filter(|m| !j.contains(m)).collect();
        let dst: Vec<Monomial> = monomials_of_degree(t + b).iter().copied().filter(|m| !j.contains(m)).collect();
        let rows: Vec<Vec<u64>> = src
            .iter()
            .map(|m| {
                let image = m.times_var(2, b);
                dst.iter().map(|n| u64::from(*n == image)).collect()
            })
            .collect();
        prop_assert_eq!(r.source_dim, src.len() as u64);
        prop_assert_eq!(r.target_dim, dst.len() as u64);
        let rank = if dst.is_empty() { 0 } else { common::rank_mod_p(rows, 101) };
        prop_assert_eq!(r.rank, rank as u64);
        let expected = match (r.rank == r.source_dim, r.rank == r.target_dim) {
            (true, true) => Verdict::Both,
            (true, false) => Verdict::Injective,
            (false, true) => Verdict::Surjective,
            (false, false) => Verdict::Neither,
        };
        prop_assert_eq!(r.verdict, expected);
    }

    #[test]
    fn strong_lefschetz_implies_weak(j in artinian_ideal()) {
        prop_assume!(!j.contains(&Monomial::ONE));
        let report = lefschetz_report(&j).unwrap();
        if report.strong {
            prop_assert!(report.weak);
        }
        prop_assert_eq!(report.strong, is_strong_lefschetz_x3(&j).unwrap().is_none());
        prop_assert_eq!(report.weak, is_weak_lefschetz_x3(&j).unwrap());
        prop_assert_eq!(report.first_failure, is_strong_lefschetz_x3(&j).unwrap());
        if let Some((t, b)) = report.first_failure {
            let r = x3_power_map_rank(&j, t, b);
            prop_assert!(r.rank < r.source_dim.min(r.target_dim));
        }
    }

    #[test]
    fn greedy_ideal_has_the_expected_shape(d in triple(10)) {
        let g = construct_gin_greedy(&d).unwrap();
        let j = &g.ideal;
        prop_assert!(j.is_strongly_stable());
        prop_assert!(j.is_almost_revlex());
        let counts = target_counts(&d);
        for k in 0..=d.terminal_degree() {
            prop_assert_eq!(j.degree_slice(k).len() as u64, counts[k as usize]);
        }
        prop_assert_eq!(j.quotient_hilbert(d.terminal_degree()), ci_hilbert_series(&d));
        // generators of each degree are what the shadow misses
        for k in 1..=d.terminal_degree() {
            let sh = shadow(&j.degree_slice(k - 1));
            let fresh: Vec<Monomial> = j.degree_slice(k).iter().copied().filter(|m| !sh.contains(m)).collect();
            let listed = g.new_by_degree.get(&k).cloned().unwrap_or_default();
            prop_assert_eq!(fresh, listed);
        }
        prop_assert!(mu_bound_check(&d, j));
        prop_assert!(verify_ideal(j, Some(&d)).all_pass());
    }
}

#[test]
fn greedy_ideals_are_strong_lefschetz() {
    for d in DegreeTriple::all_up_to(8) {
        let j = construct_gin_greedy(&d).unwrap().ideal;
        assert_eq!(is_strong_lefschetz_x3(&j).unwrap(), None, "{d:?}");
    }
}

#[test]
fn normalized_closed_form_equals_greedy() {
    let table = CorrectionTable::builtin();
    for d in DegreeTriple::all_up_to(12) {
        let c = compare_closed_form(&d, &table).unwrap();
        assert!(
            c.normalized_match,
            "{d:?}: missing {:?} extra {:?}",
            c.missing, c.extra
        );
        assert!(expand_closed_form(&d, &table).anomalies.is_empty(), "{d:?}");
    }
}

#[test]
fn every_correction_is_needed() {
    let full = CorrectionTable::builtin();
    for i in 0..full.template_corrections.len() {
        let mut table = full.clone();
        let site = table.template_corrections.remove(i).site;
        let broken = DegreeTriple::all_up_to(12).iter().any(|d| {
            let mu = construct_gin_greedy(d).unwrap().mu() as i64;
            !compare_closed_form(d, &table).unwrap().normalized_match
                || expand_closed_form(d, &table).anomalies.len()
                    > expand_closed_form(d, &full).anomalies.len()
                || generator_count_formula_with(d, &table) != mu.into()
        });
        assert!(broken, "{site:?} changes nothing");
    }
}

#[test]
fn degree_triples_are_sorted_and_checked() {
    assert_eq!(DegreeTriple::new(9, 3, 3).unwrap().as_array(), [3, 3, 9]);
    assert!(DegreeTriple::new(0, 2, 2).is_err());
    assert!(DegreeTriple::new(4, 1, 4).is_err());
    assert!(DegreeTriple::new(2, 2, 30).is_ok());
}
