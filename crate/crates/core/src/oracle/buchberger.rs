//! Buchberger's algorithm for homogeneous input, truncated at a degree cap.
//!
//! Pairs are processed in increasing degree of their lcm (the normal
//! strategy), with the inputs of degree `k` entering alongside the pairs of
//! degree `k`. Buchberger's coprime criterion discards pairs whose leading
//! monomials share no variable.
//!
//! Truncation: every polynomial the algorithm produces is homogeneous. An
//! S-polynomial of a pair with lcm of degree `D` has degree `D`, and reducing a
//! degree-`D` polynomial only uses basis elements of degree at most `D`. So
//! nothing computed in degrees `<= cap` depends on pairs of degree `> cap`, and
//! the basis obtained after finishing degree `cap` agrees in degrees `<= cap`
//! with a full Gröbner basis. In particular its leading monomials generate the
//! initial ideal in every degree `<= cap`.
//!
//! Reduction is done in a dense vector indexed by revlex rank within the
//! degree: rank 0 is the largest monomial, so a single left-to-right sweep
//! reduces fully (subtracting `c * t * g` for a reducible term at rank `r`
//! only touches ranks `>= r`).

use std::collections::BTreeMap;

use super::field::Fp;
use super::poly::SparsePolynomial;
use crate::error::{Error, Result};
use crate::monomial::{minimalize, monomial_count, monomials_of_degree, Monomial, MonomialIdeal};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Source {
    Input(usize),
    Pair(usize, usize),
}

/// A truncated Gröbner basis; every element is monic.
#[derive(Clone, Debug)]
pub struct TruncatedBasis {
    pub cap: u32,
    pub elements: Vec<SparsePolynomial>,
}

impl TruncatedBasis {
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .filter_map(SparsePolynomial::leading_monomial)
            .collect()
    }

    pub fn initial_ideal(&self) -> MonomialIdeal {
        minimalize(self.leading_monomials()).with_max_relevant_degree(self.cap)
    }
}

struct Reducer<'a> {
    p: u32,
    basis: &'a [SparsePolynomial],
    leads: &'a [Monomial],
}

impl Reducer<'_> {
    /// Fully reduces a homogeneous polynomial of degree `k`, given densely.
    fn reduce(&self, k: u32, dense: &mut [u32], members: &[Monomial]) -> Option<SparsePolynomial> {
        let p = self.p as u64;
        for r in 0..dense.len() {
            if dense[r] == 0 {
                continue;
            }
            let m = members[r];
            let Some(i) = self.leads.iter().position(|l| l.divides(&m)) else {
                continue;
            };
            let t = m.div(&self.leads[i]).expect("lead divides");
            let c = dense[r] as u64;
            for (n, a) in self.basis[i].terms() {
                let idx = n.mul(&t).revlex_rank();
                let sub = c * a.value() as u64 % p;
                dense[idx] = ((dense[idx] as u64 + p - sub) % p) as u32;
            }
            debug_assert_eq!(dense[r], 0);
        }
        let f = SparsePolynomial::from_terms(
            self.p,
            dense
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(r, c)| (members[r], *c as u64)),
        );
        debug_assert!(f.is_zero() || f.degree() == Some(k));
        (!f.is_zero()).then(|| f.monic())
    }
}

fn densify(f: &SparsePolynomial, k: u32, t: &Monomial, c: Fp, dense: &mut [u32]) {
    for (m, a) in f.terms() {
        let n = m.mul(t);
        debug_assert_eq!(n.degree(), k);
        let idx = n.revlex_rank();
        dense[idx] = (Fp::new(dense[idx] as u64, c.modulus()) + a * c).value();
    }
}

/// Truncated Gröbner basis of homogeneous `polys` under degrevlex.
pub fn truncated_groebner_basis(polys: &[SparsePolynomial], cap: u32) -> Result<TruncatedBasis> {
    let p = match polys.first() {
        Some(f) => f.modulus(),
        None => {
            return Ok(TruncatedBasis {
                cap,
                elements: Vec::new(),
            })
        }
    };
    let inputs: Vec<SparsePolynomial> = polys.iter().filter(|f| !f.is_zero()).cloned().collect();
    for f in &inputs {
        if !f.is_homogeneous() {
            return Err(Error::Parse(format!("input {f} is not homogeneous")));
        }
    }

    let mut basis: Vec<SparsePolynomial> = Vec::new();
    let mut leads: Vec<Monomial> = Vec::new();
    let mut queue: BTreeMap<u32, Vec<Source>> = BTreeMap::new();
    for (i, f) in inputs.iter().enumerate() {
        let d = f.degree().expect("nonzero");
        if d <= cap {
            queue.entry(d).or_default().push(Source::Input(i));
        }
    }

    while let Some((k, items)) = queue.pop_first() {
        let members = monomials_of_degree(k);
        let members = members.members();
        debug_assert_eq!(members.len() as u64, monomial_count(k));
        for item in items {
            let mut dense = vec![0u32; members.len()];
            match item {
                Source::Input(i) => densify(&inputs[i], k, &Monomial::ONE, Fp::one(p), &mut dense),
                Source::Pair(i, j) => {
                    let l = leads[i].lcm(&leads[j]);
                    let ti = l.div(&leads[i]).expect("lcm");
                    let tj = l.div(&leads[j]).expect("lcm");
                    densify(&basis[i], k, &ti, Fp::one(p), &mut dense);
                    densify(&basis[j], k, &tj, -Fp::one(p), &mut dense);
                }
            }
            let reducer = Reducer {
                p,
                basis: &basis,
                leads: &leads,
            };
            let Some(g) = reducer.reduce(k, &mut dense, members) else {
                continue;
            };
            let lm = g.leading_monomial().expect("nonzero");
            let new = basis.len();
            for (i, l) in leads.iter().enumerate() {
                if l.is_coprime(&lm) {
                    continue;
                }
                let d = l.lcm(&lm).degree();
                if d <= cap {
                    queue.entry(d).or_default().push(Source::Pair(i, new));
                }
            }
            basis.push(g);
            leads.push(lm);
        }
    }
    Ok(TruncatedBasis {
        cap,
        elements: basis,
    })
}

/// Minimal generators of the initial ideal in degrees `<= cap`.
///
/// Fails if the degree-`cap` slice is not full.
pub fn buchberger_initial_ideal(polys: &[SparsePolynomial], cap: u32) -> Result<MonomialIdeal> {
    let ideal = truncated_groebner_basis(polys, cap)?.initial_ideal();
    if ideal.degree_slice(cap).len() as u64 != monomial_count(cap) {
        return Err(Error::NonArtinianTruncation { degree: cap });
    }
    Ok(ideal)
}

/// Remainder of `f` on division by `basis` (sparse, for checking).
pub fn normal_form(f: &SparsePolynomial, basis: &[SparsePolynomial]) -> SparsePolynomial {
    let mut f = f.clone();
    let mut rem = SparsePolynomial::zero(f.modulus());
    while let Some(m) = f.leading_monomial() {
        let c = f.leading_coefficient().expect("nonzero");
        match basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|l| l.divides(&m)))
        {
            Some(g) => {
                let t = m
                    .div(&g.leading_monomial().expect("nonzero"))
                    .expect("divides");
                let lc = g.leading_coefficient().expect("nonzero");
                let factor = c * lc.inv().expect("nonzero");
                f = f.sub(&g.mul_monomial(&t).scale(factor));
            }
            None => {
                rem.add_term(m, c);
                f.add_term(m, -c);
            }
        }
    }
    rem
}

pub fn s_polynomial(f: &SparsePolynomial, g: &SparsePolynomial) -> SparsePolynomial {
    let (lf, lg) = (
        f.leading_monomial().expect("nonzero"),
        g.leading_monomial().expect("nonzero"),
    );
    let l = lf.lcm(&lg);
    let a = f.mul_monomial(&l.div(&lf).expect("lcm"));
    let b = g.mul_monomial(&l.div(&lg).expect("lcm"));
    a.monic().sub(&b.monic())
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 32003;

    fn mono(s: &str) -> SparsePolynomial {
        SparsePolynomial::monomial(s.parse().unwrap(), P)
    }

    #[test]
    fn monomial_input_is_its_own_initial_ideal() {
        let polys = [mono("x1^2"), mono("x2^2"), mono("x3^2")];
        let j = buchberger_initial_ideal(&polys, 4).unwrap();
        assert_eq!(j.generators().len(), 3);
        assert_eq!(
            j,
            minimalize(polys.iter().map(|f| f.leading_monomial().unwrap()))
        );
    }

    #[test]
    fn non_artinian_truncation_is_reported() {
        let polys = [mono("x1^2"), mono("x2^2")];
        assert!(matches!(
            buchberger_initial_ideal(&polys, 4),
            Err(Error::NonArtinianTruncation { degree: 4 })
        ));
    }

    #[test]
    fn small_binomial_example() {
        // (x1^2 - x2 x3, x2^2 - x1 x3): leading terms x1^2, x2^2 share no
        // variable, so nothing else appears up to the cap.
        let f = SparsePolynomial::from_terms(
            P,
            [
                ("x1^2".parse().unwrap(), 1),
                ("x2*x3".parse().unwrap(), P as u64 - 1),
            ],
        );
        let g = SparsePolynomial::from_terms(
            P,
            [
                ("x2^2".parse().unwrap(), 1),
                ("x1*x3".parse().unwrap(), P as u64 - 1),
            ],
        );
        let basis = truncated_groebner_basis(&[f.clone(), g.clone()], 6).unwrap();
        for a in &basis.elements {
            for b in &basis.elements {
                if a != b && s_polynomial(a, b).degree().unwrap_or(0) <= 6 {
                    assert!(normal_form(&s_polynomial(a, b), &basis.elements).is_zero());
                }
            }
        }
        assert!(normal_form(&f, &basis.elements).is_zero());
        assert!(normal_form(&g, &basis.elements).is_zero());
    }
}
