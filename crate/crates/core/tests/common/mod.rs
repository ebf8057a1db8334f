//! Independent reference computations shared by the integration tests.

#![allow(dead_code)]

use gin3_core::monomial::{minimalize, monomials_of_degree, Monomial, MonomialIdeal};
use gin3_core::oracle::{Fp, SparsePolynomial};

/// Rank of a matrix over `F_p` by plain Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Fp::new(rows[rank][c], p as u32).inv().unwrap().value() as u64;
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_multiple_of(p) {
                let f = rows[r][c];
                let pivot_row = rows[rank].clone();
                for (v, a) in rows[r].iter_mut().zip(&pivot_row) {
                    *v = (*v + p * p - f * a % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Leading monomials of the degree-`k` part of the ideal generated by
/// `polys`, from the row echelon form of the matrix of all `m * f` with
/// `deg(m * f) = k`. Columns are ordered from the largest monomial down.
pub fn macaulay_leading_monomials(polys: &[SparsePolynomial], k: u32, p: u32) -> Vec<Monomial> {
    let cols = monomials_of_degree(k).members().to_vec();
    let index = |m: &Monomial| cols.iter().position(|c| c == m).unwrap();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for f in polys {
        let Some(d) = f.degree() else { continue };
        if d > k {
            continue;
        }
        for t in monomials_of_degree(k - d).iter() {
            let mut row = vec![0u64; cols.len()];
            for (m, c) in f.mul_monomial(t).terms() {
                row[index(&m)] = c.value() as u64;
            }
            rows.push(row);
        }
    }
    let p64 = p as u64;
    let mut leads = Vec::new();
    let mut r0 = 0;
    for c in 0..cols.len() {
        let Some(pivot) = (r0..rows.len()).find(|&r| rows[r][c] != 0) else {
            continue;
        };
        rows.swap(r0, pivot);
        let inv = Fp::new(rows[r0][c], p).inv().unwrap().value() as u64;
        for v in rows[r0].iter_mut() {
            *v = *v * inv % p64;
        }
        for r in r0 + 1..rows.len() {
            if rows[r][c] != 0 {
                let f = rows[r][c];
                let pivot_row = rows[r0].clone();
                for (v, a) in rows[r].iter_mut().zip(&pivot_row).skip(c) {
                    *v = (*v + p64 * p64 - f * a % p64) % p64;
                }
            }
        }
        leads.push(cols[c]);
        r0 += 1;
    }
    leads
}

/// The initial ideal in degrees `<= cap`, by linear algebra in each degree.
pub fn macaulay_initial_ideal(polys: &[SparsePolynomial], cap: u32, p: u32) -> MonomialIdeal {
    let all: Vec<Monomial> = (0..=cap)
        .flat_map(|k| macaulay_leading_monomials(polys, k, p))
        .collect();
    minimalize(all).with_max_relevant_degree(cap)
}

/// Strong stability checked on every monomial of every degree up to `k_max`.
pub fn strongly_stable_by_members(j: &MonomialIdeal, k_max: u32) -> bool {
    (0..=k_max).all(|k| {
        monomials_of_degree(k)
            .iter()
            .filter(|m| j.contains(m))
            .all(|m| {
                (0..3).all(|i| {
                    (0..i).all(|l| match m.exchange(i, l) {
                        Some(n) => j.contains(&n),
                        None => true,
                    })
                })
            })
    })
}
