//! Independent check of predictions: Gröbner bases of random complete
//! intersections over a prime field.

pub mod buchberger;
pub mod change;
pub mod compare;
pub mod field;
pub mod poly;

pub use buchberger::{buchberger_initial_ideal, truncated_groebner_basis, TruncatedBasis};
pub use change::{apply_change, LinearChange};
pub use compare::{oracle_compare, oracle_compare_with, OracleConfig, OracleVerdict};
pub use field::{check_modulus, Fp, DEFAULT_PRIME};
pub use poly::{random_homogeneous, SparsePolynomial};
