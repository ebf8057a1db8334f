//! Sparse polynomials over `F_p` in `x1, x2, x3`.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::field::Fp;
use crate::monomial::{monomials_of_degree, Monomial};

/// Terms are kept in the monomial order, so the leading term is the last one.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    p: u32,
    terms: BTreeMap<Monomial, u32>,
}

impl SparsePolynomial {
    pub fn zero(p: u32) -> Self {
        SparsePolynomial {
            p,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: Monomial, p: u32) -> Self {
        Self::from_terms(p, [(m, 1)])
    }

    /// Sums coefficients of repeated monomials and drops zeros.
    pub fn from_terms(p: u32, terms: impl IntoIterator<Item = (Monomial, u64)>) -> Self {
        let mut out = Self::zero(p);
        for (m, c) in terms {
            out.add_term(m, Fp::new(c, p));
        }
        out
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn add_term(&mut self, m: Monomial, c: Fp) {
        let old = self.terms.get(&m).copied().unwrap_or(0);
        let new = Fp::new(old as u64, self.p) + c;
        if new.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, new.value());
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Fp {
        Fp::new(self.terms.get(m).copied().unwrap_or(0) as u64, self.p)
    }

    /// Terms in decreasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, Fp)> + '_ {
        self.terms
            .iter()
            .rev()
            .map(|(m, c)| (*m, Fp::new(*c as u64, self.p)))
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<Fp> {
        self.terms
            .values()
            .next_back()
            .map(|c| Fp::new(*c as u64, self.p))
    }

    /// Degree of the leading term.
    pub fn degree(&self) -> Option<u32> {
        self.leading_monomial().map(|m| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn scale(&self, c: Fp) -> Self {
        let mut out = Self::zero(self.p);
        if c.is_zero() {
            return out;
        }
        for (m, a) in self.terms() {
            out.terms.insert(m, (a * c).value());
        }
        out
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(c) => self.scale(c.inv().expect("leading coefficient is nonzero")),
            None => self.clone(),
        }
    }

    pub fn mul_monomial(&self, t: &Monomial) -> Self {
        SparsePolynomial {
            p: self.p,
            terms: self.terms.iter().map(|(m, c)| (m.mul(t), *c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.p);
        for (m, a) in self.terms() {
            for (n, b) in other.terms() {
                out.add_term(m.mul(&n), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::monomial(Monomial::ONE, self.p);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m == Monomial::ONE {
                write!(f, "{c}")?;
            } else if c.value() == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.p)
    }
}

/// Every monomial of the given degree with an independent uniform coefficient.
pub fn random_homogeneous_from<R: Rng>(rng: &mut R, degree: u32, p: u32) -> SparsePolynomial {
    loop {
        let f = SparsePolynomial::from_terms(
            p,
            monomials_of_degree(degree)
                .iter()
                .map(|m| (*m, rng.gen_range(0..p) as u64))
                .collect::<Vec<_>>(),
        );
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_homogeneous(degree: u32, seed: u64, p: u32) -> SparsePolynomial {
    random_homogeneous_from(&mut ChaCha8Rng::seed_from_u64(seed), degree, p)
}
