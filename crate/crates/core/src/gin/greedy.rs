use std::collections::BTreeMap;

use super::{GinResult, Method};
use crate::error::{Error, Result};
use crate::hilbert::{target_counts, DegreeTriple};
use crate::monomial::{minimalize, monomials_of_degree, shadow, DegreeSlice, Monomial};

/// Builds the unique almost revlex ideal whose quotient has the Hilbert
/// function of a complete intersection of the given degrees.
///
/// Degree by degree, the slice is the shadow of the previous slice plus the
/// revlex-greatest monomials outside the shadow, as many as the target count
/// requires. An almost revlex ideal has no other choice: anything above a new
/// generator must already be in the slice. Past `d1 + d2 + d3 - 2` every
/// slice is full, so nothing new can appear.
pub fn construct_gin_greedy(degrees: &DegreeTriple) -> Result<GinResult> {
    let targets = target_counts(degrees);
    let mut previous = DegreeSlice::empty(0);
    let mut new_by_degree: BTreeMap<u32, Vec<Monomial>> = BTreeMap::new();

    for (k, &target) in targets.iter().enumerate() {
        let k = k as u32;
        let forced = if k == 0 {
            DegreeSlice::empty(0)
        } else {
            shadow(&previous)
        };
        if forced.len() as u64 > target {
            return Err(Error::ShadowExceedsTarget {
                degree: k,
                shadow: forced.len(),
                target,
            });
        }
        let need = (target - forced.len() as u64) as usize;
        let added: Vec<Monomial> = monomials_of_degree(k)
            .iter()
            .filter(|m| !forced.contains(m))
            .take(need)
            .copied()
            .collect();
        debug_assert_eq!(added.len(), need);
        let slice =
            DegreeSlice::from_monomials(k, forced.iter().copied().chain(added.iter().copied()))?;
        if !added.is_empty() {
            new_by_degree.insert(k, added);
        }
        previous = slice;
    }

    let ideal = minimalize(new_by_degree.values().flatten().copied())
        .with_max_relevant_degree(degrees.terminal_degree());
    Ok(GinResult {
        degrees: *degrees,
        method: Method::Greedy,
        ideal,
        new_by_degree,
    })
}
