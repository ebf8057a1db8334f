//! Monomials in `x1, x2, x3`, the degree reverse lexicographic order, degree
//! slices and monomial ideals.
//!
//! Everything here is hard-wired to three variables. The order is graded, with
//! `x1 > x2 > x3`, and inside a degree `u > v` exactly when the last nonzero
//! entry of `exponents(u) - exponents(v)` is negative. Since `Monomial`
//! implements `Ord` with this order, sorted containers of monomials are always
//! in revlex order.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Number of monomials of degree `k` in three variables, `C(k+2, 2)`.
pub fn monomial_count(k: u32) -> u64 {
    let k = k as u64;
    (k + 2) * (k + 1) / 2
}

/// The monomial `x1^a * x2^b * x3^c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct Monomial([u32; 3]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0, 0, 0]);

    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial([a, b, c])
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(i: usize) -> Self {
        let mut e = [0; 3];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> [u32; 3] {
        self.0
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0[0] + self.0[1] + self.0[2]
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(Monomial([
                self.0[0] - other.0[0],
                self.0[1] - other.0[1],
                self.0[2] - other.0[2],
            ]))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial([
            self.0[0].max(other.0[0]),
            self.0[1].max(other.0[1]),
            self.0[2].max(other.0[2]),
        ])
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiplies by `x_{i+1}^e`.
    pub fn times_var(&self, i: usize, e: u32) -> Monomial {
        let mut out = self.0;
        out[i] += e;
        Monomial(out)
    }

    /// Replaces one factor `x_{from+1}` by `x_{to+1}`; `None` if `x_{from+1}`
    /// does not divide.
    pub fn exchange(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.0[from] == 0 {
            return None;
        }
        let mut out = self.0;
        out[from] -= 1;
        out[to] += 1;
        Some(Monomial(out))
    }

    /// Position of this monomial among the monomials of its degree listed in
    /// decreasing revlex order (`x1^k` has rank 0, `x3^k` the last rank).
    pub fn revlex_rank(&self) -> usize {
        let k = self.degree() as usize;
        let b = self.0[1] as usize;
        let c = self.0[2] as usize;
        c * (k + 1) - c * c.saturating_sub(1) / 2 + b
    }
}

/// Degree reverse lexicographic comparison.
pub fn revlex_compare(m1: &Monomial, m2: &Monomial) -> Ordering {
    m1.degree()
        .cmp(&m2.degree())
        .then_with(|| m2.0[2].cmp(&m1.0[2]))
        .then_with(|| m2.0[1].cmp(&m1.0[1]))
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        revlex_compare(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<[u32; 3]> for Monomial {
    fn from(e: [u32; 3]) -> Self {
        Monomial(e)
    }
}

impl From<Monomial> for [u32; 3] {
    fn from(m: Monomial) -> Self {
        m.0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Monomial {
    type Err = Error;

    /// Parses `x1^a*x2^b*x3^c` (factors in any order, repeated factors
    /// multiply, `^1` optional, `*` optional) or `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::Parse(format!("not a monomial: {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" {
            return Ok(Monomial::ONE);
        }
        if t.is_empty() {
            return Err(bad());
        }
        let mut exps = [0u32; 3];
        let bytes = t.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b'*' {
                i += 1;
                continue;
            }
            if bytes[i] != b'x' || i + 1 >= bytes.len() {
                return Err(bad());
            }
            let var = match bytes[i + 1] {
                b'1' => 0,
                b'2' => 1,
                b'3' => 2,
                _ => return Err(bad()),
            };
            i += 2;
            let mut e = 1u32;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                e = t[start..i].parse().map_err(|_| bad())?;
            } else if i < bytes.len() && bytes[i].is_ascii_digit() {
                // x12 and friends are not variables here
                return Err(bad());
            }
            exps[var] += e;
        }
        Ok(Monomial(exps))
    }
}

/// The monomials of one degree, stored in strictly decreasing revlex order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DegreeSlice {
    degree: u32,
    members: Vec<Monomial>,
}

impl DegreeSlice {
    pub fn empty(degree: u32) -> Self {
        DegreeSlice {
            degree,
            members: Vec::new(),
        }
    }

    /// Builds a slice from arbitrary monomials of degree `degree`, sorting and
    /// deduplicating them.
    pub fn from_monomials(
        degree: u32,
        monomials: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self, Error> {
        let set: BTreeSet<Monomial> = monomials.into_iter().collect();
        if let Some(m) = set.iter().find(|m| m.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                monomial: *m,
            });
        }
        Ok(DegreeSlice {
            degree,
            members: set.into_iter().rev().collect(),
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn members(&self) -> &[Monomial] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.members.binary_search_by(|probe| m.cmp(probe)).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Monomial> {
        self.members.iter()
    }
}

/// All `C(k+2, 2)` monomials of degree `k`, greatest first.
pub fn monomials_of_degree(k: u32) -> DegreeSlice {
    let mut members = Vec::with_capacity(monomial_count(k) as usize);
    for c in 0..=k {
        for b in 0..=(k - c) {
            members.push(Monomial::new(k - b - c, b, c));
        }
    }
    DegreeSlice { degree: k, members }
}

/// `{x_i * u : u in slice, i = 1, 2, 3}` in degree `k + 1`.
pub fn shadow(slice: &DegreeSlice) -> DegreeSlice {
    let set: BTreeSet<Monomial> = slice
        .members
        .iter()
        .flat_map(|u| (0..3).map(move |i| u.times_var(i, 1)))
        .collect();
    DegreeSlice {
        degree: slice.degree + 1,
        members: set.into_iter().rev().collect(),
    }
}

/// A monomial ideal given by its minimal generators.
///
/// Generators are kept sorted by degree ascending, then revlex descending,
/// which is also the order of the JSON form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonomialIdeal {
    generators: Vec<Monomial>,
    max_relevant_degree: u32,
}

fn generator_order(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| b.cmp(a))
}

/// Keeps only the monomials not divisible by another member of the set.
pub fn minimalize(monomials: impl IntoIterator<Item = Monomial>) -> MonomialIdeal {
    let mut all: Vec<Monomial> = monomials.into_iter().collect();
    all.sort_by(generator_order);
    all.dedup();
    let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
    // A divisor always has degree <= its multiple, so earlier entries suffice.
    for m in all {
        if !gens.iter().any(|g| g.divides(&m)) {
            gens.push(m);
        }
    }
    let max_relevant_degree = relevant_degree_bound(&gens);
    MonomialIdeal {
        generators: gens,
        max_relevant_degree,
    }
}

/// For an artinian ideal with pure powers `x1^a, x2^b, x3^c` every monomial of
/// degree `a+b+c-2` lies in the ideal. Otherwise fall back to the largest
/// generator degree.
fn relevant_degree_bound(gens: &[Monomial]) -> u32 {
    match pure_powers(gens) {
        Some([a, b, c]) => (a + b + c).saturating_sub(2),
        None => gens.iter().map(|g| g.degree()).max().unwrap_or(0),
    }
}

fn pure_powers(gens: &[Monomial]) -> Option<[u32; 3]> {
    let mut out = [0u32; 3];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = gens
            .iter()
            .filter(|g| g.degree() == g.exponent(i))
            .map(|g| g.exponent(i))
            .min()?;
    }
    Some(out)
}

impl MonomialIdeal {
    pub fn zero() -> Self {
        MonomialIdeal {
            generators: Vec::new(),
            max_relevant_degree: 0,
        }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// Number of minimal generators, `mu(J)`.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn max_relevant_degree(&self) -> u32 {
        self.max_relevant_degree
    }

    /// Overrides the degree cap used by whole-ideal queries.
    pub fn with_max_relevant_degree(mut self, k: u32) -> Self {
        self.max_relevant_degree = k;
        self
    }

    /// True when every variable has a pure power among the generators, i.e.
    /// `S/J` is finite dimensional.
    pub fn is_artinian(&self) -> bool {
        pure_powers(&self.generators).is_some()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// The degree-`k` monomials of the ideal.
    pub fn degree_slice(&self, k: u32) -> DegreeSlice {
        let members = monomials_of_degree(k)
            .members
            .into_iter()
            .filter(|m| self.contains(m))
            .collect();
        DegreeSlice { degree: k, members }
    }

    /// Strong stability checked on minimal generators only.
    ///
    /// Checking generators suffices: if `m = w * u` for a generator `u` and
    /// `x_i | m`, either `x_i | w`, and then `x_j m / x_i = (x_j w / x_i) u`, or
    /// `x_i | u`, and then `x_j m / x_i = w (x_j u / x_i)`; both lie in `J`
    /// once the generator exchanges do.
    pub fn is_strongly_stable(&self) -> bool {
        self.generators.iter().all(|u| {
            (1..3).all(|i| {
                u.exponent(i) == 0
                    || (0..i).all(|j| {
                        let v = u.exchange(i, j).expect("x_i divides u");
                        self.contains(&v)
                    })
            })
        })
    }

    /// Every monomial of the same degree that is revlex-greater than a minimal
    /// generator is in the ideal.
    pub fn is_almost_revlex(&self) -> bool {
        self.first_almost_revlex_violation().is_none()
    }

    /// A pair `(u, v)` with `u` a generator, `v > u` of the same degree and
    /// `v` outside the ideal.
    pub fn first_almost_revlex_violation(&self) -> Option<(Monomial, Monomial)> {
        for u in &self.generators {
            let all = monomials_of_degree(u.degree());
            for v in all.members.iter().take_while(|v| *v > u) {
                if !self.contains(v) {
                    return Some((*u, *v));
                }
            }
        }
        None
    }

    /// `H(S/J, k)` for `0 <= k <= k_max`.
    pub fn quotient_hilbert(&self, k_max: u32) -> crate::hilbert::HilbertTable {
        let values = (0..=k_max)
            .map(|k| monomial_count(k) - self.degree_slice(k).len() as u64)
            .collect();
        crate::hilbert::HilbertTable::from_values(values)
    }

    pub fn to_json_value(&self) -> IdealJson {
        IdealJson {
            generators: self.generators.clone(),
        }
    }
}

/// Wire form of a monomial ideal: `{"generators": [[a,b,c], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct IdealJson {
    pub generators: Vec<Monomial>,
}

impl From<IdealJson> for MonomialIdeal {
    fn from(j: IdealJson) -> Self {
        minimalize(j.generators)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}
