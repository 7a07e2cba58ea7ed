//! Exact integer and algebraic-number arithmetic: big-integer polynomials,
//! cyclotomic polynomials, quadratic surds, cubic root fields, integer
//! matrices with Hermite-normal-form kernels, and small number theory.

pub mod algebraic;
pub mod matrix;
pub mod numtheory;
pub mod poly;

pub use algebraic::{
    exact_linear_combination, isolate_cubic_roots, refine_root_interval, sqrt_enclosure,
    AlgebraicNumber,
};
pub use matrix::{hermite_normal_form, integer_kernel, rank, solve_in_lattice, IntMatrix};
pub use numtheory::{extended_gcd, factorize, is_perfect_square, prime_power};
pub use poly::{
    cubic_reducibility, cyclotomic, divides, double_star_cubic, poly_divmod, relation_poly,
    CubicFactorization, IntPolynomial,
};
