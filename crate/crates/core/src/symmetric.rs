//! Symmetrized zeta polynomials, the two computational routes to the
//! renormalized symmetric value `ζ^RS`, and the bridge back to multitangent
//! functions.
//!
//! For an index `l = (l_1, ..., l_r)` and either regularization flavor, the
//! symmetrized polynomial is
//!
//! `ζ_•^S(l; T) = sum_{i=0}^{r} (-1)^{l_{i+1}+...+l_r}
//!                ζ_•(l_1,...,l_i; 0) · ζ_•(l_r,...,l_{i+1}; T)`,
//!
//! a polynomial whose coefficients are products of two zeta combinations.
//! `ζ^RS(l)` is both the harmonic-flavor polynomial at `T = πi` and the mean
//! of the shuffle-flavor polynomial over the segment `[0, 2πi]`; the two
//! routes agree for every index, and the verification suite checks that
//! agreement numerically.

use num::complex::Complex64;
use std::f64::consts::PI;

use crate::error::Result;
use crate::index::{factorial, rat, Index};
use crate::multitangent::{two_pi_i_pow, MonotangentCombination};
use crate::mzv::{eval_product_combination, eval_product_tpoly, PrecisionConfig};
use crate::regularize::{harmonic_regularize, shuffle_regularize};
use crate::symbols::{constant_times_tpoly, Coefficient, ProductTPoly, TPoly};

/// Which regularization enters the symmetrization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    Shuffle,
    Harmonic,
}

fn regularize(l: &Index, flavor: Flavor) -> TPoly {
    match flavor {
        Flavor::Shuffle => shuffle_regularize(l),
        Flavor::Harmonic => harmonic_regularize(l),
    }
}

/// The symmetrized `T`-polynomial `ζ_•^S(l; T)`.
pub fn symmetric_t_polynomial(l: &Index, flavor: Flavor) -> ProductTPoly {
    let parts = l.parts();
    let mut out = ProductTPoly::zero();
    for i in 0..=parts.len() {
        let prefix = Index::new(parts[..i].to_vec()).unwrap();
        let rev_suffix = Index::new(parts[i..].iter().rev().copied().collect()).unwrap();
        let prefix_constant = regularize(&prefix, flavor).constant_term();
        if prefix_constant.is_zero() {
            continue;
        }
        let mut term = constant_times_tpoly(&prefix_constant, &regularize(&rev_suffix, flavor));
        let suffix_weight: u32 = parts[i..].iter().sum();
        if suffix_weight % 2 == 1 {
            term.scale(&rat(-1));
        }
        out.add_assign(&term);
    }
    out
}

/// The two independent roads to `ζ^RS`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsRoute {
    /// `ζ_*^S(l; T)` evaluated at `T = πi`.
    HarmonicAtPiI,
    /// `(1/2πi) ∫_0^{2πi} ζ_sh^S(l; T) dT`, integrated termwise.
    IntegralOfShuffle,
}

/// Renormalized symmetric multiple zeta value `ζ^RS(l)` along the requested
/// route.
pub fn zeta_rs(l: &Index, route: RsRoute, cfg: &PrecisionConfig) -> Result<Complex64> {
    match route {
        RsRoute::HarmonicAtPiI => {
            let p = symmetric_t_polynomial(l, Flavor::Harmonic);
            eval_product_tpoly(&p, Complex64::new(0.0, PI), cfg)
        }
        RsRoute::IntegralOfShuffle => {
            // mean of T^i over [0, 2πi] is (2πi)^i / (i+1)
            let p = symmetric_t_polynomial(l, Flavor::Shuffle);
            let mut total = Complex64::new(0.0, 0.0);
            for (i, c) in p.coeffs().iter().enumerate() {
                total += two_pi_i_pow(i as u32) / (i as f64 + 1.0)
                    * eval_product_combination(c, cfg)?;
            }
            Ok(total)
        }
    }
}

/// Star version: the sum of `ζ^RS` over all contractions of `l` (harmonic
/// route).
pub fn zeta_rs_star(l: &Index, cfg: &PrecisionConfig) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    for m in l.contractions() {
        total += zeta_rs(&m, RsRoute::HarmonicAtPiI, cfg)?;
    }
    Ok(total)
}

/// The substitution `T^s -> s! Ψ_{s+2}`, turning a symmetrized polynomial
/// into a combination of monotangents.
pub fn rho_apply(p: &ProductTPoly) -> MonotangentCombination {
    let mut out = MonotangentCombination::zero();
    for (s, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut scaled = c.clone();
        scaled.scale(&factorial(s as u32));
        out.add_term(s as u32 + 2, scaled);
    }
    out
}

/// The multitangent `Ψ_k` expressed through symmetric values:
/// `(-1)^{wt(k)} ρ(ζ_sh^S((↓k↓)^∨; T))`.  Requires `k` multitangent-
/// admissible; evaluates to the same function as
/// [`crate::reduce_to_monotangents`] through an entirely different pipeline,
/// even though the two symbolic expansions differ term by term.
pub fn multitangent_via_symmetric(k: &Index) -> Result<MonotangentCombination> {
    let dual = k.down_both()?.hoffman_dual();
    let mut out = rho_apply(&symmetric_t_polynomial(&dual, Flavor::Shuffle));
    if k.weight() % 2 == 1 {
        out.scale(&rat(-1));
    }
    Ok(out)
}
