//! Floating-point evaluation of multiple zeta values and of the exact
//! containers built on them.
//!
//! The fast path rewrites `ζ(k)` as the iterated integral of its word and
//! splits the integration simplex at `1/2`: every piece becomes a multiple
//! polylogarithm at `1/2`, a geometrically convergent series.  A handful of
//! hundred-term sums therefore replaces the slowly convergent defining
//! series.  The slow path [`eval_mzv_direct`] sums the defining series with
//! no tricks and reports a proven tail bound, so the two paths can audit
//! each other.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num::complex::Complex64;
use num::ToPrimitive;

use crate::error::{Error, Result};
use crate::index::{Index, Rational};
use crate::symbols::{MzvCombination, ProductCombination, ProductTPoly, TPoly};
use crate::word::{index_to_word, word_to_index, Word};

/// Numeric evaluation settings.
///
/// `target_abs_error` is the accuracy the fast path is asked for (the series
/// are in fact always run to machine precision when `series_cutoff` allows,
/// so this acts as a validated lower bound on what may be requested).
/// `series_cutoff` caps the length of each polylogarithm series;
/// `oracle_cutoff` is the summation range of the direct oracles.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionConfig {
    pub target_abs_error: f64,
    pub series_cutoff: usize,
    pub oracle_cutoff: usize,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            target_abs_error: 1e-10,
            series_cutoff: 400,
            oracle_cutoff: 100_000,
        }
    }
}

impl PrecisionConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.target_abs_error >= 1e-13 && self.target_abs_error <= 1.0) {
            return Err(Error::InvalidConfig(format!(
                "target_abs_error must lie in [1e-13, 1], got {:e}",
                self.target_abs_error
            )));
        }
        if self.series_cutoff < 32 {
            return Err(Error::InvalidConfig(format!(
                "series_cutoff must be at least 32, got {}",
                self.series_cutoff
            )));
        }
        if self.oracle_cutoff < 1000 {
            return Err(Error::InvalidConfig(format!(
                "oracle_cutoff must be at least 1000, got {}",
                self.oracle_cutoff
            )));
        }
        Ok(())
    }
}

/// Result of a direct-summation oracle: the truncated value together with a
/// bound on everything the truncation discarded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectValue {
    pub value: f64,
    pub tail_bound: f64,
}

fn divergent(k: &Index) -> Error {
    Error::Divergent(format!(
        "zeta({k}) diverges; the last part must be at least 2"
    ))
}

/// Multiple polylogarithm `sum_{0<m_1<...<m_s} λ^{m_s} / prod m_i^{c_i}` at
/// `λ = 1/2`.  Returns the sum and whether the series reached machine
/// precision before `cutoff` terms.
fn polylog_half(c: &[u32], cutoff: usize) -> (f64, bool) {
    if c.is_empty() {
        return (1.0, true);
    }
    let s = c.len();
    // a[0] = 1; a[i] accumulates the weighted count of chains of length i
    // with entries <= m, exponents c[0..i]
    let mut a = vec![0.0f64; s];
    a[0] = 1.0;
    let mut lampow = 1.0f64;
    let mut total = 0.0f64;
    let mut converged = false;
    for m in 1..=cutoff {
        lampow *= 0.5;
        let mf = m as f64;
        // chains whose top entry is exactly m
        let term = lampow * a[s - 1] * mf.powi(-(c[s - 1] as i32));
        total += term;
        // update longest chains first so each level still sees entries < m
        for i in (1..s).rev() {
            a[i] += a[i - 1] * mf.powi(-(c[i - 1] as i32));
        }
        if m > 40 && term < 1e-18 * (1.0 + total) {
            converged = true;
            break;
        }
    }
    (total, converged)
}

fn polylog_word(u: &Word, cutoff: usize) -> (f64, bool) {
    if u.is_empty() {
        return (1.0, true);
    }
    let k = word_to_index(u).expect("polylog words start with y");
    polylog_half(k.parts(), cutoff)
}

/// Hölder convolution: split the iterated integral over `0<t_1<...<t_n<1`
/// by the position where the chain crosses `1/2`.  The lower piece is the
/// polylogarithm of the prefix; the upper piece maps to the polylogarithm of
/// the reversed, letter-swapped suffix under `t -> 1-t`.
fn holder_convolution(w: &Word, cutoff: usize) -> (f64, bool) {
    let mut total = 0.0;
    let mut all_converged = true;
    for j in 0..=w.len() {
        let (lo, c1) = polylog_word(&w.prefix(j), cutoff);
        let (hi, c2) = polylog_word(&w.suffix(j).reverse().swap_xy(), cutoff);
        total += lo * hi;
        all_converged &= c1 && c2;
    }
    (total, all_converged)
}

fn cache() -> &'static Mutex<HashMap<Index, f64>> {
    static CACHE: OnceLock<Mutex<HashMap<Index, f64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Multiple zeta value `ζ(k)` through the Hölder fast path.  Values that
/// converge to machine precision are cached process-wide; series truncated
/// by `series_cutoff` are returned but never cached.
pub fn eval_mzv(k: &Index, cfg: &PrecisionConfig) -> Result<f64> {
    cfg.validate()?;
    if !k.is_tail_admissible() {
        return Err(divergent(k));
    }
    if k.is_empty() {
        return Ok(1.0);
    }
    if let Some(&hit) = cache().lock().unwrap().get(k) {
        return Ok(hit);
    }
    let (value, converged) = holder_convolution(&index_to_word(k), cfg.series_cutoff);
    if converged {
        cache().lock().unwrap().insert(k.clone(), value);
    }
    Ok(value)
}

/// Direct summation of the defining series over `0 < m_1 < ... < m_r <= N`,
/// `N = oracle_cutoff`, with a proven tail bound: chains of length `r-1`
/// below `m` weigh at most `(1+ln m)^{r-1}`, so the discarded tail is at
/// most `∫_N^∞ t^{-k_r} (1+ln t)^{r-1} dt`, which integration by parts
/// evaluates to the closed form used below.
pub fn eval_mzv_direct(k: &Index, cfg: &PrecisionConfig) -> Result<DirectValue> {
    cfg.validate()?;
    if !k.is_tail_admissible() {
        return Err(divergent(k));
    }
    if k.is_empty() {
        return Ok(DirectValue {
            value: 1.0,
            tail_bound: 0.0,
        });
    }
    let c = k.parts();
    let s = c.len();
    let n_cut = cfg.oracle_cutoff;
    let mut a = vec![0.0f64; s];
    a[0] = 1.0;
    let mut value = 0.0f64;
    for m in 1..=n_cut {
        let mf = m as f64;
        value += a[s - 1] * mf.powi(-(c[s - 1] as i32));
        for i in (1..s).rev() {
            a[i] += a[i - 1] * mf.powi(-(c[i - 1] as i32));
        }
    }
    // tail bound: N^{-a}/a * sum_{i=0}^{q} q!/(q-i)! * L^{q-i} / a^i
    // with a = k_r - 1, q = r - 1, L = 1 + ln N
    let nf = n_cut as f64;
    let aa = (c[s - 1] - 1) as f64;
    let big_l = 1.0 + nf.ln();
    let q = s - 1;
    let mut falling = 1.0f64;
    let mut series = 0.0f64;
    for i in 0..=q {
        series += falling * big_l.powi((q - i) as i32) / aa.powi(i as i32);
        falling *= (q - i) as f64;
    }
    let tail_bound = nf.powf(-aa) / aa * series + 1e-13 * (1.0 + value.abs());
    Ok(DirectValue { value, tail_bound })
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Numeric value of a rational combination of zeta symbols.
pub fn eval_combination(c: &MzvCombination, cfg: &PrecisionConfig) -> Result<f64> {
    let mut total = 0.0;
    for (k, q) in c.iter() {
        total += rational_to_f64(q) * eval_mzv(k, cfg)?;
    }
    Ok(total)
}

/// Numeric value of a combination of products of two zeta symbols.
pub fn eval_product_combination(c: &ProductCombination, cfg: &PrecisionConfig) -> Result<f64> {
    let mut total = 0.0;
    for ((a, b), q) in c.iter() {
        total += rational_to_f64(q) * eval_mzv(a, cfg)? * eval_mzv(b, cfg)?;
    }
    Ok(total)
}

/// Evaluates a rank-one `T`-polynomial at a complex point.
pub fn eval_tpoly(p: &TPoly, t0: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for c in p.coeffs() {
        total += power * eval_combination(c, cfg)?;
        power *= t0;
    }
    Ok(total)
}

/// Evaluates a rank-two `T`-polynomial at a complex point.
pub fn eval_product_tpoly(p: &ProductTPoly, t0: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    let mut power = Complex64::new(1.0, 0.0);
    for c in p.coeffs() {
        total += power * eval_product_combination(c, cfg)?;
        power *= t0;
    }
    Ok(total)
}

/// Zeta star value `ζ*(k)`: the defining series with non-strict
/// inequalities, evaluated as the sum of `ζ` over all contractions of `k`.
pub fn eval_zeta_star(k: &Index, cfg: &PrecisionConfig) -> Result<f64> {
    if !k.is_tail_admissible() {
        return Err(divergent(k));
    }
    let mut total = 0.0;
    for m in k.contractions() {
        total += eval_mzv(&m, cfg)?;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idx;
    use std::f64::consts::PI;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    #[test]
    fn config_validation() {
        assert!(cfg().validate().is_ok());
        let mut c = cfg();
        c.target_abs_error = 1e-14;
        assert!(c.validate().is_err());
        let mut c = cfg();
        c.series_cutoff = 8;
        assert!(c.validate().is_err());
        let mut c = cfg();
        c.oracle_cutoff = 10;
        assert!(c.validate().is_err());
    }

    #[test]
    fn classical_single_zeta_values() {
        let z2 = eval_mzv(&idx![2], &cfg()).unwrap();
        assert!((z2 - PI * PI / 6.0).abs() < 1e-13, "zeta(2) = {z2}");
        let z3 = eval_mzv(&idx![3], &cfg()).unwrap();
        assert!((z3 - 1.2020569031595942854).abs() < 1e-13, "zeta(3) = {z3}");
        let z4 = eval_mzv(&idx![4], &cfg()).unwrap();
        assert!((z4 - PI.powi(4) / 90.0).abs() < 1e-13, "zeta(4) = {z4}");
    }

    #[test]
    fn classical_double_zeta_values() {
        let c = cfg();
        let euler = eval_mzv(&idx![1, 2], &c).unwrap();
        let z3 = eval_mzv(&idx![3], &c).unwrap();
        assert!((euler - z3).abs() < 1e-13, "zeta(1,2) = {euler} vs {z3}");
        let z13 = eval_mzv(&idx![1, 3], &c).unwrap();
        assert!((z13 - PI.powi(4) / 360.0).abs() < 1e-13);
        let z22 = eval_mzv(&idx![2, 2], &c).unwrap();
        assert!((z22 - PI.powi(4) / 120.0).abs() < 1e-13);
    }

    #[test]
    fn empty_index_and_divergence() {
        assert_eq!(eval_mzv(&Index::empty(), &cfg()).unwrap(), 1.0);
        assert!(matches!(eval_mzv(&idx![2, 1], &cfg()), Err(Error::Divergent(_))));
        assert!(matches!(eval_mzv(&idx![1], &cfg()), Err(Error::Divergent(_))));
        assert!(matches!(
            eval_mzv_direct(&idx![1], &cfg()),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn determinism_and_cache_hygiene() {
        // a starved cutoff must not poison later full-precision calls
        let mut starved = cfg();
        starved.series_cutoff = 32;
        let rough = eval_mzv(&idx![2], &starved).unwrap();
        assert!(rough < PI * PI / 6.0); // truncated positive series
        let exact = eval_mzv(&idx![2], &cfg()).unwrap();
        assert!((exact - PI * PI / 6.0).abs() < 1e-13);
        assert_eq!(
            eval_mzv(&idx![2], &cfg()).unwrap().to_bits(),
            exact.to_bits()
        );
    }

    #[test]
    fn direct_oracle_brackets_fast_path() {
        let mut c = cfg();
        c.oracle_cutoff = 10_000;
        for k in [idx![2], idx![3], idx![1, 2], idx![2, 3], idx![1, 1, 2], idx![2, 1, 2]] {
            let fast = eval_mzv(&k, &c).unwrap();
            let direct = eval_mzv_direct(&k, &c).unwrap();
            assert!(
                (fast - direct.value).abs() <= direct.tail_bound,
                "k = ({k}): fast {fast}, direct {} ± {}",
                direct.value,
                direct.tail_bound
            );
            // the truncated series must lie strictly below the full value
            assert!(direct.value < fast);
        }
    }

    #[test]
    fn direct_oracle_bound_shrinks_with_cutoff() {
        let mut lo = cfg();
        lo.oracle_cutoff = 10_000;
        let mut hi = cfg();
        hi.oracle_cutoff = 40_000;
        let a = eval_mzv_direct(&idx![1, 2], &lo).unwrap();
        let b = eval_mzv_direct(&idx![1, 2], &hi).unwrap();
        assert!(b.tail_bound < a.tail_bound / 2.0);
        assert!(a.tail_bound > 0.0);
    }

    #[test]
    fn star_value_golden() {
        // ζ*(1,2) = ζ(1,2) + ζ(3) = 2 ζ(3)
        let star = eval_zeta_star(&idx![1, 2], &cfg()).unwrap();
        let z3 = eval_mzv(&idx![3], &cfg()).unwrap();
        assert!((star - 2.0 * z3).abs() < 1e-13);
        assert!(eval_zeta_star(&idx![2, 1], &cfg()).is_err());
        assert_eq!(eval_zeta_star(&Index::empty(), &cfg()).unwrap(), 1.0);
    }

    #[test]
    fn combination_and_tpoly_evaluation() {
        let c = cfg();
        // constant terms of the two weight-3 regularizations agree
        // numerically: both equal -2 ζ(3) by Euler's identity
        let sh = crate::regularize::shuffle_regularize(&idx![2, 1]);
        let st = crate::regularize::harmonic_regularize(&idx![2, 1]);
        let z3 = eval_mzv(&idx![3], &c).unwrap();
        let sh0 = eval_combination(&sh.coeff(0), &c).unwrap();
        let st0 = eval_combination(&st.coeff(0), &c).unwrap();
        assert!((sh0 + 2.0 * z3).abs() < 1e-13);
        assert!((st0 + 2.0 * z3).abs() < 1e-13);
        // at T = 1 both regularizations of (2,1) evaluate to ζ(2) - 2 ζ(3)
        let t1 = Complex64::new(1.0, 0.0);
        let z2 = eval_mzv(&idx![2], &c).unwrap();
        let target = Complex64::new(z2 - 2.0 * z3, 0.0);
        assert!((eval_tpoly(&sh, t1, &c).unwrap() - target).norm() < 1e-13);
        assert!((eval_tpoly(&st, t1, &c).unwrap() - target).norm() < 1e-13);
    }

    #[test]
    fn product_combination_evaluation() {
        let c = cfg();
        let mut p = ProductCombination::zero();
        p.add_term(idx![2], idx![2], crate::index::rat(1));
        let got = eval_product_combination(&p, &c).unwrap();
        let z2 = eval_mzv(&idx![2], &c).unwrap();
        assert!((got - z2 * z2).abs() < 1e-13);
        // stuffle expansion of the same product agrees numerically
        let flat = crate::regularize::expand_products_stuffle(&p);
        let via_stuffle = eval_combination(&flat, &c).unwrap();
        assert!((via_stuffle - z2 * z2).abs() < 1e-13);
    }
}
