//! Orchestrated identity checks with structured pass/fail reports.
//!
//! Every check computes both sides of an identity through *independent* code
//! paths — typically one exact reduction flattened to floating point against
//! a direct series summation, or two unrelated symbolic pipelines — and
//! records the residual together with the tolerance it was held to.
//!
//! Tolerances are per-family and pinned here: checks backed by the
//! direct-series oracle use `max(1e-5, 3 × reported tail bound)` because the
//! truncation error of the oracle dominates; pure fast-path checks use a
//! flat `1e-8`; pairs of exact pipelines use `1e-9`; the finite-difference
//! derivative check uses `5e-6` relative to the exact value, the floor set
//! by fourth-order differencing at step `1e-3`.

use num::complex::Complex64;
use num::ToPrimitive;
use std::collections::HashMap;
use std::fmt;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::index::{indices_up_to_weight, Index, Rational};
use crate::multitangent::{
    derivative_index_sum, eval_multitangent_direct, reduce_to_monotangents, two_pi_i_pow,
};
use crate::mzv::{eval_mzv, eval_zeta_star, PrecisionConfig};
use crate::regularize::zeta_shifted;
use crate::symmetric::{
    multitangent_via_symmetric, rho_apply, symmetric_t_polynomial, zeta_rs, zeta_rs_star, Flavor,
    RsRoute,
};

/// Flat tolerance for checks whose two sides both run through fast paths.
pub const TOL_FAST: f64 = 1e-8;
/// Tolerance for pairs of exact pipelines differing only in rounding.
pub const TOL_TIGHT: f64 = 1e-9;
/// Relative tolerance of the finite-difference derivative check.
pub const TOL_DERIVATIVE: f64 = 5e-6;

/// Tolerance for a comparison against the direct-series oracle.
pub fn oracle_tolerance(tail_bound: f64) -> f64 {
    (3.0 * tail_bound).max(1e-5)
}

/// The fixed evaluation points used by all `z`-dependent checks: two real,
/// two complex, none close to a pole or to the half-integer symmetry points
/// (except `0.51`, kept deliberately near one).
pub fn z_samples() -> [Complex64; 4] {
    [
        Complex64::new(0.3, 0.0),
        Complex64::new(0.51, 0.0),
        Complex64::new(0.3, 0.2),
        Complex64::new(-0.7, 1.1),
    ]
}

fn fmt_z(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("z={}", z.re)
    } else if z.im < 0.0 {
        format!("z={}{}i", z.re, z.im)
    } else {
        format!("z={}+{}i", z.re, z.im)
    }
}

fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Outcome of a single identity check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub check: String,
    pub instance: String,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub elapsed_ms: f64,
}

impl CheckReport {
    pub const CSV_HEADER: &'static str =
        "check_name,instance,residual,tolerance,passed,elapsed_ms";

    fn finish(check: &str, instance: String, residual: f64, tolerance: f64, started: Instant) -> Self {
        CheckReport {
            check: check.to_string(),
            instance,
            residual,
            tolerance,
            passed: residual < tolerance,
            elapsed_ms: started.elapsed().as_secs_f64() * 1e3,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "check": self.check,
            "instance": self.instance,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<CheckReport> {
        let field = |name: &str| {
            v.get(name)
                .ok_or_else(|| Error::Parse(format!("check report missing field `{name}`")))
        };
        let num = |name: &str| -> Result<f64> {
            field(name)?
                .as_f64()
                .ok_or_else(|| Error::Parse(format!("check report field `{name}` not a number")))
        };
        let text = |name: &str| -> Result<String> {
            Ok(field(name)?
                .as_str()
                .ok_or_else(|| Error::Parse(format!("check report field `{name}` not a string")))?
                .to_string())
        };
        Ok(CheckReport {
            check: text("check")?,
            instance: text("instance")?,
            residual: num("residual")?,
            tolerance: num("tolerance")?,
            passed: field("passed")?
                .as_bool()
                .ok_or_else(|| Error::Parse("check report field `passed` not a bool".into()))?,
            elapsed_ms: num("elapsed_ms")?,
        })
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},\"{}\",{:e},{:e},{},{:.3}",
            self.check, self.instance, self.residual, self.tolerance, self.passed, self.elapsed_ms
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:<24} {:<30} residual {:.3e}  tol {:.3e}  {:.2} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.check,
            self.instance,
            self.residual,
            self.tolerance,
            self.elapsed_ms
        )
    }
}

/// Runs `body`, turning an error into a failed report (residual `f64::MAX`)
/// rather than aborting the whole suite.
fn run_instance(
    check: &str,
    instance: String,
    body: impl FnOnce() -> Result<(f64, f64)>,
) -> CheckReport {
    let started = Instant::now();
    match body() {
        Ok((residual, tolerance)) => CheckReport::finish(check, instance, residual, tolerance, started),
        Err(e) => CheckReport::finish(check, format!("{instance} [{e}]"), f64::MAX, TOL_FAST, started),
    }
}

/// Tracks the `(residual, tolerance)` pair with the worst margin across the
/// sample points of one instance.
fn worse(best: &mut Option<(f64, f64)>, residual: f64, tolerance: f64) {
    let replace = match *best {
        None => true,
        Some((r, t)) => residual * t > r * tolerance,
    };
    if replace {
        *best = Some((residual, tolerance));
    }
}

fn aggregated(best: Option<(f64, f64)>) -> (f64, f64) {
    best.unwrap_or((0.0, TOL_FAST))
}

/// `ζ̂⋆(k) = (-1)^{depth} ζ⋆(k)`, the signed star value entering the
/// classical identities.
fn zeta_star_signed(k: &Index, cfg: &PrecisionConfig) -> Result<f64> {
    let v = eval_zeta_star(k, cfg)?;
    Ok(if k.depth() % 2 == 1 { -v } else { v })
}

fn weight_pairs(indices: &[Index], total_cap: u32) -> Vec<(Index, Index)> {
    let mut out = Vec::new();
    for (i, k) in indices.iter().enumerate() {
        for l in &indices[i..] {
            if k.weight() + l.weight() <= total_cap {
                out.push((k.clone(), l.clone()));
            }
        }
    }
    out
}

/// Multitangent evaluated through symmetric values against the direct
/// bilateral series, reported at the sample with the worst margin.
pub fn check_multitangent_formula(
    k: &Index,
    zs: &[Complex64],
    cfg: &PrecisionConfig,
) -> Result<CheckReport> {
    if zs.is_empty() {
        return Err(Error::InvalidConfig("empty z sample set".into()));
    }
    if !k.is_mtgf_admissible() {
        return Err(Error::InvalidIndex(format!(
            "({k}) is not multitangent-admissible"
        )));
    }
    let started = Instant::now();
    let rhs = multitangent_via_symmetric(k)?;
    let mut best = None;
    let mut worst_z = zs[0];
    for &z in zs {
        let direct = eval_multitangent_direct(k, z, cfg)?;
        let fast = rhs.eval_at(z, cfg)?;
        let residual = (direct.value - fast).norm();
        let tolerance = oracle_tolerance(direct.tail_bound);
        let before = best;
        worse(&mut best, residual, tolerance);
        if best != before {
            worst_z = z;
        }
    }
    let (residual, tolerance) = aggregated(best);
    Ok(CheckReport::finish(
        "multitangent_formula",
        format!("k=({k}) worst {}", fmt_z(worst_z)),
        residual,
        tolerance,
        started,
    ))
}

/// The symmetric-value analogue of the Kawashima relation: the stuffle
/// expansion of `k * l`, pushed through `↓·↓` and the Hoffman dual, sums to
/// zero under `ζ^RS`.
pub fn check_kawashima(k: &Index, l: &Index, cfg: &PrecisionConfig) -> Result<CheckReport> {
    for side in [k, l] {
        if !side.is_mtgf_admissible() {
            return Err(Error::InvalidIndex(format!(
                "({side}) is not multitangent-admissible"
            )));
        }
    }
    let started = Instant::now();
    let mut total = Complex64::new(0.0, 0.0);
    for (m, c) in k.stuffle(l).iter() {
        let dual = m.down_both()?.hoffman_dual();
        total += to_f64(c) * zeta_rs(&dual, RsRoute::HarmonicAtPiI, cfg)?;
    }
    Ok(CheckReport::finish(
        "kawashima",
        format!("k=({k}) l=({l})"),
        total.norm(),
        TOL_FAST,
        started,
    ))
}

fn mtgf_indices(weight_cap: u32) -> Vec<Index> {
    indices_up_to_weight(weight_cap, Index::is_mtgf_admissible)
}

/// Both the symmetric-value formula and the monotangent reduction against
/// the direct bilateral series, one report per `(k, z)` instance.
pub fn suite_multitangent_oracle(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in mtgf_indices(weight_cap) {
        for &z in z_samples().iter() {
            let instance = format!("k=({k}) {}", fmt_z(z));
            out.push(run_instance("multitangent_formula", instance.clone(), || {
                let direct = eval_multitangent_direct(&k, z, cfg)?;
                let fast = multitangent_via_symmetric(&k)?.eval_at(z, cfg)?;
                Ok(((direct.value - fast).norm(), oracle_tolerance(direct.tail_bound)))
            }));
            out.push(run_instance("monotangent_reduction", instance, || {
                let direct = eval_multitangent_direct(&k, z, cfg)?;
                let fast = reduce_to_monotangents(&k)?.eval_at(z, cfg)?;
                Ok(((direct.value - fast).norm(), oracle_tolerance(direct.tail_bound)))
            }));
        }
    }
    out
}

/// The symmetric-value route and the partial-fraction reduction of `Ψ_k`
/// are symbolically different combinations; numerically they must agree to
/// rounding.
pub fn suite_reduction_agreement(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in mtgf_indices(weight_cap) {
        out.push(run_instance("reduction_agreement", format!("k=({k})"), || {
            let via = multitangent_via_symmetric(&k)?;
            let red = reduce_to_monotangents(&k)?;
            let mut best = None;
            for &z in z_samples().iter() {
                let a = via.eval_at(z, cfg)?;
                let b = red.eval_at(z, cfg)?;
                worse(&mut best, (a - b).norm(), TOL_TIGHT * (1.0 + a.norm()));
            }
            Ok(aggregated(best))
        }));
    }
    out
}

/// `dΨ_k/dz` from the exact index-sum rule against a fourth-order central
/// finite difference of the reduced evaluation.
pub fn suite_derivative(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in mtgf_indices(weight_cap) {
        out.push(run_instance("derivative", format!("k=({k})"), || {
            let reduced = reduce_to_monotangents(&k)?;
            let mut dparts = Vec::new();
            for (m, c) in derivative_index_sum(&k)?.iter() {
                dparts.push((to_f64(c), reduce_to_monotangents(m)?));
            }
            let mut best = None;
            let h = 1e-3;
            for &z in z_samples().iter() {
                let f = |dz: f64| reduced.eval_at(z + Complex64::new(dz, 0.0), cfg);
                let d1 = (f(h)? - f(-h)?) / (2.0 * h);
                let d2 = (f(h / 2.0)? - f(-h / 2.0)?) / h;
                let fd = (4.0 * d2 - d1) / 3.0;
                let mut exact = Complex64::new(0.0, 0.0);
                for (c, comb) in &dparts {
                    exact += *c * comb.eval_at(z, cfg)?;
                }
                worse(&mut best, (fd - exact).norm(), TOL_DERIVATIVE * (1.0 + exact.norm()));
            }
            Ok(aggregated(best))
        }));
    }
    out
}

/// `Ψ_k(-z) = (-1)^{wt k} Ψ_{reversed k}(z)`, two separate reductions.
pub fn suite_reflection(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in mtgf_indices(weight_cap) {
        out.push(run_instance("reflection", format!("k=({k})"), || {
            let red = reduce_to_monotangents(&k)?;
            let red_rev = reduce_to_monotangents(&k.reversed())?;
            let sign = if k.weight() % 2 == 0 { 1.0 } else { -1.0 };
            let mut best = None;
            for &z in z_samples().iter() {
                let a = red.eval_at(-z, cfg)?;
                let b = sign * red_rev.eval_at(z, cfg)?;
                worse(&mut best, (a - b).norm(), TOL_FAST * (1.0 + b.norm()));
            }
            Ok(aggregated(best))
        }));
    }
    out
}

/// Pointwise products of multitangents against the stuffle expansion,
/// `Ψ_k Ψ_l = Σ coeff · Ψ_m` over `m` in `k * l`.
pub fn suite_harmonic_product(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let indices = mtgf_indices(weight_cap.saturating_sub(2));
    let mut out = Vec::new();
    for (k, l) in weight_pairs(&indices, weight_cap) {
        out.push(run_instance("harmonic_product", format!("k=({k}) l=({l})"), || {
            let rk = reduce_to_monotangents(&k)?;
            let rl = reduce_to_monotangents(&l)?;
            let mut terms = Vec::new();
            for (m, c) in k.stuffle(&l).iter() {
                terms.push((to_f64(c), reduce_to_monotangents(m)?));
            }
            let mut best = None;
            for &z in z_samples().iter() {
                let lhs = rk.eval_at(z, cfg)? * rl.eval_at(z, cfg)?;
                let mut rhs = Complex64::new(0.0, 0.0);
                let mut scale = lhs.norm();
                for (c, comb) in &terms {
                    let v = *c * comb.eval_at(z, cfg)?;
                    scale += v.norm();
                    rhs += v;
                }
                worse(&mut best, (lhs - rhs).norm(), TOL_FAST * (1.0 + scale));
            }
            Ok(aggregated(best))
        }));
    }
    out
}

/// Kawashima analogue over all admissible pairs within the total weight cap.
pub fn suite_kawashima(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let indices = mtgf_indices(weight_cap.saturating_sub(2));
    let mut cache: HashMap<Index, Complex64> = HashMap::new();
    let mut out = Vec::new();
    for (k, l) in weight_pairs(&indices, weight_cap) {
        out.push(run_instance("kawashima", format!("k=({k}) l=({l})"), || {
            let mut total = Complex64::new(0.0, 0.0);
            for (m, c) in k.stuffle(&l).iter() {
                let dual = m.down_both()?.hoffman_dual();
                let v = match cache.get(&dual) {
                    Some(v) => *v,
                    None => {
                        let v = zeta_rs(&dual, RsRoute::HarmonicAtPiI, cfg)?;
                        cache.insert(dual.clone(), v);
                        v
                    }
                };
                total += to_f64(c) * v;
            }
            Ok((total.norm(), TOL_FAST))
        }));
    }
    out
}

/// Classical linear-part relation: the stuffle expansion of `k * l`, raised
/// by `↑` and dualized by `†`, sums to zero under `ζ̂⋆`.
pub fn suite_kawashima_classical(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let indices = indices_up_to_weight(weight_cap.saturating_sub(1), |_| true);
    let mut out = Vec::new();
    for (k, l) in weight_pairs(&indices, weight_cap) {
        out.push(run_instance("kawashima_classical", format!("k=({k}) l=({l})"), || {
            let mut total = 0.0;
            for (m, c) in k.stuffle(&l).iter() {
                let dual = m.up_last()?.dagger_dual()?;
                total += to_f64(c) * zeta_star_signed(&dual, cfg)?;
            }
            Ok((total.abs(), TOL_FAST))
        }));
    }
    out
}

/// The two routes to `ζ^RS` — harmonic polynomial at `πi` and the averaged
/// integral of the shuffle polynomial — agree.
pub fn suite_rs_route_agreement(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for l in indices_up_to_weight(weight_cap, |_| true) {
        out.push(run_instance("rs_route_agreement", format!("l=({l})"), || {
            let a = zeta_rs(&l, RsRoute::HarmonicAtPiI, cfg)?;
            let b = zeta_rs(&l, RsRoute::IntegralOfShuffle, cfg)?;
            Ok(((a - b).norm(), TOL_FAST))
        }));
    }
    out
}

/// `ζ^RS` is multiplicative for the stuffle product.
pub fn suite_rs_harmonic_product(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let indices = indices_up_to_weight(weight_cap.saturating_sub(1), |_| true);
    let mut cache: HashMap<Index, Complex64> = HashMap::new();
    let mut out = Vec::new();
    for (k, l) in weight_pairs(&indices, weight_cap) {
        out.push(run_instance("rs_harmonic_product", format!("k=({k}) l=({l})"), || {
            let mut rs = |m: &Index| -> Result<Complex64> {
                if let Some(v) = cache.get(m) {
                    return Ok(*v);
                }
                let v = zeta_rs(m, RsRoute::HarmonicAtPiI, cfg)?;
                cache.insert(m.clone(), v);
                Ok(v)
            };
            let mut lhs = Complex64::new(0.0, 0.0);
            for (m, c) in k.stuffle(&l).iter() {
                lhs += to_f64(c) * rs(m)?;
            }
            let rhs = rs(&k)? * rs(&l)?;
            Ok(((lhs - rhs).norm(), TOL_FAST))
        }));
    }
    out
}

/// `ζ̂⋆` is multiplicative for the stuffle product.
pub fn suite_star_harmonic_product(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let indices = indices_up_to_weight(weight_cap.saturating_sub(2), Index::is_tail_admissible);
    let mut out = Vec::new();
    for (k, l) in weight_pairs(&indices, weight_cap) {
        out.push(run_instance("star_harmonic_product", format!("k=({k}) l=({l})"), || {
            let mut lhs = 0.0;
            for (m, c) in k.stuffle(&l).iter() {
                lhs += to_f64(c) * zeta_star_signed(m, cfg)?;
            }
            let rhs = zeta_star_signed(&k, cfg)? * zeta_star_signed(&l, cfg)?;
            Ok(((lhs - rhs).abs(), TOL_FAST))
        }));
    }
    out
}

/// Summing `ζ̂⋆` over all contractions of `k` recovers `(-1)^{depth} ζ(k)`.
pub fn suite_star_sum(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in indices_up_to_weight(weight_cap, Index::is_tail_admissible) {
        out.push(run_instance("star_sum", format!("k=({k})"), || {
            let mut lhs = 0.0;
            for m in k.contractions() {
                lhs += zeta_star_signed(&m, cfg)?;
            }
            let mut rhs = eval_mzv(&k, cfg)?;
            if k.depth() % 2 == 1 {
                rhs = -rhs;
            }
            Ok(((lhs - rhs).abs(), TOL_FAST))
        }));
    }
    out
}

/// Star-sum duality: `ζ^{RS,⋆}` of the Hoffman dual is minus the conjugate.
pub fn suite_star_duality(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in indices_up_to_weight(weight_cap, |_| true) {
        out.push(run_instance("star_duality", format!("k=({k})"), || {
            let a = zeta_rs_star(&k.hoffman_dual(), cfg)?;
            let b = zeta_rs_star(&k, cfg)?;
            Ok(((a + b.conj()).norm(), TOL_FAST))
        }));
    }
    out
}

/// MZV duality `ζ(k†) = ζ(k)` through the word involution.
pub fn suite_mzv_duality(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in indices_up_to_weight(weight_cap, Index::is_tail_admissible) {
        out.push(run_instance("mzv_duality", format!("k=({k})"), || {
            let a = eval_mzv(&k.dagger_dual()?, cfg)?;
            let b = eval_mzv(&k, cfg)?;
            Ok(((a - b).abs(), TOL_TIGHT))
        }));
    }
    out
}

/// The `w¹` coefficient of the monotangent combination attached to `l`
/// equals `(2πi)² ζ^RS(l)`.
pub fn suite_w1_coefficient(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for l in indices_up_to_weight(weight_cap, |_| true) {
        out.push(run_instance("w1_coefficient", format!("l=({l})"), || {
            let mono = rho_apply(&symmetric_t_polynomial(&l, Flavor::Shuffle));
            let coeffs = mono.w_expand(cfg)?;
            let w1 = coeffs.get(1).copied().unwrap_or_default();
            let rhs = two_pi_i_pow(2) * zeta_rs(&l, RsRoute::HarmonicAtPiI, cfg)?;
            Ok(((w1 - rhs).norm(), TOL_FAST))
        }));
    }
    out
}

/// Exact cross-check of the shifted zeta values: termwise differentiation
/// of the defining series gives `(a+1) ζ_{a+1}(k) = -Σ_j k_j ζ_a(k^{(j)})`
/// with `k^{(j)}` the index with its `j`-th part raised; both sides are
/// compared after flattening to floating point.
pub fn suite_zeta_shifted_recursion(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for k in indices_up_to_weight(weight_cap, Index::is_tail_admissible) {
        for a in 0..3u32 {
            out.push(run_instance(
                "zeta_shifted_recursion",
                format!("k=({k}) a={a}"),
                || {
                    let lhs = (a as f64 + 1.0)
                        * crate::mzv::eval_combination(&zeta_shifted(a + 1, &k)?, cfg)?;
                    let mut rhs = 0.0;
                    for (j, &kj) in k.parts().iter().enumerate() {
                        let mut parts = k.parts().to_vec();
                        parts[j] += 1;
                        let raised = Index::new(parts).unwrap();
                        rhs -= kj as f64
                            * crate::mzv::eval_combination(&zeta_shifted(a, &raised)?, cfg)?;
                    }
                    Ok(((lhs - rhs).abs(), TOL_FAST))
                },
            ));
        }
    }
    out
}

/// Runs every check family at the given weight cap and returns the reports
/// in a fixed order.  Families over a single index enumerate weights up to
/// the cap; families over pairs constrain the *total* weight by the cap.
/// Individual failures are recorded in the reports, never thrown.
pub fn run_suite(weight_cap: u32, cfg: &PrecisionConfig) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.extend(suite_multitangent_oracle(weight_cap, cfg));
    out.extend(suite_reduction_agreement(weight_cap, cfg));
    out.extend(suite_derivative(weight_cap, cfg));
    out.extend(suite_reflection(weight_cap, cfg));
    out.extend(suite_harmonic_product(weight_cap, cfg));
    out.extend(suite_kawashima(weight_cap, cfg));
    out.extend(suite_kawashima_classical(weight_cap, cfg));
    out.extend(suite_rs_route_agreement(weight_cap, cfg));
    out.extend(suite_rs_harmonic_product(weight_cap, cfg));
    out.extend(suite_star_harmonic_product(weight_cap, cfg));
    out.extend(suite_star_sum(weight_cap, cfg));
    out.extend(suite_star_duality(weight_cap, cfg));
    out.extend(suite_mzv_duality(weight_cap, cfg));
    out.extend(suite_w1_coefficient(weight_cap, cfg));
    out.extend(suite_zeta_shifted_recursion(weight_cap, cfg));
    out
}
