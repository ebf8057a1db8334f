//! Linear changes of coordinates `x_i -> sum_j g[i][j] x_j`.

use rand::Rng;

use super::field::Fp;
use super::poly::SparsePolynomial;
use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearChange {
    p: u32,
    rows: [[u32; 3]; 3],
}

impl LinearChange {
    pub fn new(rows: [[u64; 3]; 3], p: u32) -> Result<Self> {
        let g = LinearChange {
            p,
            rows: rows.map(|r| r.map(|v| (v % p as u64) as u32)),
        };
        if g.determinant().is_zero() {
            return Err(Error::SingularChange);
        }
        Ok(g)
    }

    pub fn identity(p: u32) -> Self {
        LinearChange::new([[1, 0, 0], [0, 1, 0], [0, 0, 1]], p).expect("identity is invertible")
    }

    /// Uniform over invertible matrices, by rejection.
    pub fn random<R: Rng>(rng: &mut R, p: u32) -> Self {
        loop {
            let mut rows = [[0u64; 3]; 3];
            for r in rows.iter_mut() {
                for v in r.iter_mut() {
                    *v = rng.gen_range(0..p) as u64;
                }
            }
            if let Ok(g) = LinearChange::new(rows, p) {
                return g;
            }
        }
    }

    fn at(&self, i: usize, j: usize) -> Fp {
        Fp::new(self.rows[i][j] as u64, self.p)
    }

    pub fn rows(&self) -> [[u32; 3]; 3] {
        self.rows
    }

    pub fn determinant(&self) -> Fp {
        let a = |i, j| self.at(i, j);
        a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
            - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
            + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
    }

    /// Matrix inverse via the adjugate.
    pub fn inverse(&self) -> Self {
        let det_inv = self.determinant().inv().expect("change is invertible");
        let a = |i: usize, j: usize| self.at(i % 3, j % 3);
        let mut rows = [[0u64; 3]; 3];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                // cofactor of (j, i), using cyclic indices so no sign is needed
                let c = a(j + 1, i + 1) * a(j + 2, i + 2) - a(j + 1, i + 2) * a(j + 2, i + 1);
                *v = (c * det_inv).value() as u64;
            }
        }
        LinearChange::new(rows, self.p).expect("inverse is invertible")
    }

    /// Image of `x_i`.
    pub fn linear_form(&self, i: usize) -> SparsePolynomial {
        SparsePolynomial::from_terms(
            self.p,
            (0..3).map(|j| (Monomial::var(j), self.rows[i][j] as u64)),
        )
    }
}

/// Substitutes `x_i -> sum_j g[i][j] x_j` in `f`.
pub fn apply_change(g: &LinearChange, f: &SparsePolynomial) -> SparsePolynomial {
    let top = f.terms().map(|(m, _)| m.degree()).max().unwrap_or(0) as usize;
    let powers: Vec<Vec<SparsePolynomial>> = (0..3)
        .map(|i| {
            let l = g.linear_form(i);
            let mut ps = vec![SparsePolynomial::monomial(Monomial::ONE, g.p)];
            for e in 1..=top {
                let next = ps[e - 1].mul(&l);
                ps.push(next);
            }
            ps
        })
        .collect();
    let mut out = SparsePolynomial::zero(g.p);
    for (m, c) in f.terms() {
        let [a, b, e] = m.exponents();
        let image = powers[0][a as usize]
            .mul(&powers[1][b as usize])
            .mul(&powers[2][e as usize])
            .scale(c);
        out = out.add(&image);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::poly::random_homogeneous;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const P: u32 = 32003;

    #[test]
    fn identity_and_substitution() {
        let f = random_homogeneous(3, 5, P);
        assert_eq!(apply_change(&LinearChange::identity(P), &f), f);
        let g = LinearChange::new([[1, 1, 0], [0, 1, 0], [0, 0, 1]], P).unwrap();
        let x1 = SparsePolynomial::monomial(Monomial::var(0), P);
        let x1_plus_x2 =
            SparsePolynomial::from_terms(P, [(Monomial::var(0), 1), (Monomial::var(1), 1)]);
        assert_eq!(apply_change(&g, &x1), x1_plus_x2);
    }

    #[test]
    fn round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for seed in 0..10 {
            let g = LinearChange::random(&mut rng, P);
            let f = random_homogeneous(3, seed, P);
            assert_eq!(apply_change(&g, &apply_change(&g.inverse(), &f)), f);
        }
    }

    #[test]
    fn singular_rejected() {
        assert!(matches!(
            LinearChange::new([[1, 2, 3], [2, 4, 6], [0, 0, 1]], P),
            Err(Error::SingularChange)
        ));
    }
}
