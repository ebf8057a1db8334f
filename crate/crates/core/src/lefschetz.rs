//! Multiplication by powers of `x3` on `S/J` for a monomial ideal `J`.
//!
//! For monomial `J` the standard monomials outside `J` form a basis of `S/J`,
//! and `m -> m * x3^b` sends distinct basis monomials to distinct monomials,
//! each of which is either again a basis monomial or lies in `J`. So the rank
//! of the map is the number of basis monomials whose image survives.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Injective,
    Surjective,
    Both,
    Neither,
}

impl Verdict {
    pub fn is_semiregular(&self) -> bool {
        *self != Verdict::Neither
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MapRankReport {
    pub t: u32,
    pub b: u32,
    pub source_dim: u64,
    pub target_dim: u64,
    pub rank: u64,
    pub verdict: Verdict,
}

fn basis(j: &MonomialIdeal, k: u32) -> impl Iterator<Item = Monomial> + '_ {
    monomials_of_degree(k)
        .members()
        .to_vec()
        .into_iter()
        .filter(move |m| !j.contains(m))
}

/// Rank of `(S/J)_t -> (S/J)_{t+b}`, multiplication by `x3^b`.
pub fn x3_power_map_rank(j: &MonomialIdeal, t: u32, b: u32) -> MapRankReport {
    let mut source_dim = 0;
    let mut rank = 0;
    for m in basis(j, t) {
        source_dim += 1;
        if !j.contains(&m.times_var(2, b)) {
            rank += 1;
        }
    }
    let target_dim = basis(j, t + b).count() as u64;
    let verdict = match (rank == source_dim, rank == target_dim) {
        (true, true) => Verdict::Both,
        (true, false) => Verdict::Injective,
        (false, true) => Verdict::Surjective,
        (false, false) => Verdict::Neither,
    };
    MapRankReport {
        t,
        b,
        source_dim,
        target_dim,
        rank,
        verdict,
    }
}

/// Top degree in which `S/J` is nonzero.
pub fn socle_degree(j: &MonomialIdeal) -> Result<u32> {
    if !j.is_artinian() {
        return Err(Error::NotArtinian);
    }
    j.quotient_hilbert(j.max_relevant_degree())
        .socle_degree()
        .ok_or(Error::NotArtinian)
}

/// Every `(t, b)` with `b >= 1` and `t + b <= socle + 1`, in order of `b` then `t`.
pub fn lefschetz_window(socle: u32) -> impl Iterator<Item = (u32, u32)> {
    (1..=socle + 1).flat_map(move |b| (0..=socle + 1 - b).map(move |t| (t, b)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LefschetzReport {
    pub socle_degree: u32,
    pub strong: bool,
    pub weak: bool,
    /// First `(t, b)` where the map is neither injective nor surjective.
    pub first_failure: Option<(u32, u32)>,
    pub maps: Vec<MapRankReport>,
}

/// All maps in the window, with the strong and weak verdicts.
pub fn lefschetz_report(j: &MonomialIdeal) -> Result<LefschetzReport> {
    let socle = socle_degree(j)?;
    let maps: Vec<MapRankReport> = lefschetz_window(socle)
        .map(|(t, b)| x3_power_map_rank(j, t, b))
        .collect();
    let first_failure = maps
        .iter()
        .find(|r| !r.verdict.is_semiregular())
        .map(|r| (r.t, r.b));
    let weak = maps
        .iter()
        .filter(|r| r.b == 1)
        .all(|r| r.verdict.is_semiregular());
    Ok(LefschetzReport {
        socle_degree: socle,
        strong: first_failure.is_none(),
        weak,
        first_failure,
        maps,
    })
}

/// `Ok(None)` if `x3` is a strong Lefschetz element, else the first failing `(t, b)`.
pub fn is_strong_lefschetz_x3(j: &MonomialIdeal) -> Result<Option<(u32, u32)>> {
    let socle = socle_degree(j)?;
    Ok(
        lefschetz_window(socle)
            .find(|&(t, b)| !x3_power_map_rank(j, t, b).verdict.is_semiregular()),
    )
}

pub fn is_weak_lefschetz_x3(j: &MonomialIdeal) -> Result<bool> {
    let socle = socle_degree(j)?;
    Ok((0..=socle).all(|t| x3_power_map_rank(j, t, 1).verdict.is_semiregular()))
}
