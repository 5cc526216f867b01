//! Exact word algebra and high-precision numerics for multitangent functions
//! and symmetric multiple zeta values.
//!
//! The crate has two layers that deliberately never mix representations:
//!
//! * **Exact layer** — indices (tuples of positive integers), binary words in
//!   the letters `x`/`y`, and linear combinations of zeta symbols with
//!   `BigRational` coefficients.  Stuffle and shuffle products, Hoffman
//!   duality, regularized zeta polynomials in `T`, and the reduction of a
//!   multitangent function into monotangents with zeta coefficients all
//!   happen here, with no floating point anywhere.
//! * **Numeric layer** — an `f64`/`Complex64` evaluation engine.  Multiple
//!   zeta values are summed through a Hölder convolution of multiple
//!   polylogarithms at 1/2 (geometric convergence), monotangents through
//!   closed-form polynomials in `1/(e^{2πiz}-1)`, and every fast path is
//!   backed by a slow direct-summation oracle that reports a rigorous tail
//!   bound.
//!
//! [`verify`] wires the two layers together: each identity is checked by
//! computing both sides through *independent* code paths and reporting the
//! residual.  The `mtz` binary in the companion crate exposes evaluation,
//! reduction, and the verification suites on the command line.

pub mod error;
pub mod index;
pub mod multitangent;
pub mod mzv;
pub mod regularize;
pub mod symbols;
pub mod symmetric;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use index::{Index, IndexSum, Rational};
pub use multitangent::{
    derivative_index_sum, eval_monotangent, eval_multitangent_direct, monotangent_w_poly,
    reduce_to_monotangents, two_pi_i_pow, MonotangentCombination, WPolynomial,
};
pub use mzv::{
    eval_combination, eval_mzv, eval_mzv_direct, eval_product_combination, eval_product_tpoly,
    eval_tpoly, eval_zeta_star, DirectValue, PrecisionConfig,
};
pub use regularize::{harmonic_regularize, shuffle_regularize, zeta_shifted};
pub use symbols::{MzvCombination, ProductCombination, ProductTPoly, TPoly};
pub use symmetric::{
    multitangent_via_symmetric, rho_apply, symmetric_t_polynomial, zeta_rs, zeta_rs_star, Flavor,
    RsRoute,
};
pub use verify::{check_kawashima, check_multitangent_formula, run_suite, z_samples, CheckReport};
pub use word::{shuffle_words, Letter, Word, WordPoly};
