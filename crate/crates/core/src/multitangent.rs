//! Multitangent functions `Ψ_k(z) = sum over integer chains m_1 < ... < m_d
//! of prod (z + m_i)^{-k_i}`, their closed-form monotangent building blocks,
//! and the exact reduction of any multitangent into monotangents with zeta
//! coefficients.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num::complex::Complex64;
use num::Zero;

use crate::error::{Error, Result};
use crate::index::{rat, rational_string, Index, IndexSum, Rational};
use crate::mzv::{eval_product_combination, PrecisionConfig};
use crate::regularize::zeta_shifted;
use crate::symbols::{Coefficient, ProductCombination};

/// `(2πi)^s`, with the direction handled exactly.
pub fn two_pi_i_pow(s: u32) -> Complex64 {
    let mag = (2.0 * PI).powi(s as i32);
    match s % 4 {
        0 => Complex64::new(mag, 0.0),
        1 => Complex64::new(0.0, mag),
        2 => Complex64::new(-mag, 0.0),
        _ => Complex64::new(0.0, -mag),
    }
}

fn not_admissible(k: &Index) -> Error {
    Error::Divergent(format!(
        "Psi({k}) diverges; first and last part must be at least 2"
    ))
}

/// Distance from `z` to the nearest integer; the multitangent functions have
/// poles exactly at the integers.
fn pole_distance(z: Complex64) -> f64 {
    (z - z.re.round()).norm()
}

const POLE_THRESHOLD: f64 = 1e-12;

fn pole_guard(z: Complex64) -> Result<()> {
    if pole_distance(z) < POLE_THRESHOLD {
        return Err(Error::Pole(format!("{z}")));
    }
    Ok(())
}

/// The monotangent `Ψ_s` written as `(2πi)^s` times a polynomial with
/// rational coefficients in `w = 1/(e^{2πiz} - 1)`:
/// `Ψ_s(z) = (2πi)^s sum_{j=1}^{s} coeffs[j] w^j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WPolynomial {
    s: u32,
    coeffs: Vec<Rational>,
}

impl WPolynomial {
    pub fn weight(&self) -> u32 {
        self.s
    }

    /// Coefficient of `w^power` (inside the `(2πi)^s` normalization).
    pub fn coeff(&self, power: usize) -> Rational {
        self.coeffs.get(power).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Evaluates `Ψ_s(z)` from the polynomial, including the `(2πi)^s`
    /// prefactor.
    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        pole_guard(z)?;
        let w = (Complex64::new(0.0, 2.0 * PI * 1.0) * z).exp() - 1.0;
        let w = w.inv();
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * w + rat_f64(c);
        }
        Ok(acc * two_pi_i_pow(self.s))
    }

    /// JSON form `{s, coefficients: [{power, rational, power_of_2pii}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut arr = Vec::new();
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            arr.push(serde_json::json!({
                "power": power,
                "rational": rational_string(c),
                "power_of_2pii": self.s,
            }));
        }
        serde_json::json!({ "s": self.s, "coefficients": arr })
    }
}

fn rat_f64(r: &Rational) -> f64 {
    num::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Closed form of the monotangent `Ψ_s` as a `w`-polynomial, `s >= 2`.
///
/// Built from `Ψ_2 = (2πi)² (w + w²)` by `Ψ_{m+1} = -(1/m) dΨ_m/dz` with
/// `dw/dz = -2πi (w + w²)`, i.e. the coefficient rule
/// `w^j -> (j/m)(w^j + w^{j+1})` at each step.
pub fn monotangent_w_poly(s: u32) -> Result<WPolynomial> {
    if s < 2 {
        return Err(Error::InvalidIndex(format!(
            "monotangent weight must be at least 2, got {s}"
        )));
    }
    let mut coeffs = vec![rat(0), rat(1), rat(1)]; // w + w²
    for m in 2..s {
        let mut next = vec![rat(0); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let moved = c * rat(j as i64) / rat(m as i64);
            next[j] += &moved;
            next[j + 1] += moved;
        }
        coeffs = next;
    }
    Ok(WPolynomial { s, coeffs })
}

/// Evaluates the monotangent `Ψ_s(z)` through its closed form.
pub fn eval_monotangent(s: u32, z: Complex64) -> Result<Complex64> {
    monotangent_w_poly(s)?.eval(z)
}

/// Truncated bilateral value and a tail estimate for the multitangent
/// `Ψ_k(z)`, computed by brute force.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectEval {
    pub value: Complex64,
    pub tail_bound: f64,
}

fn truncated_bilateral(k: &[u32], z: Complex64, n: i64) -> Complex64 {
    let len = (2 * n + 1) as usize;
    let inv: Vec<Complex64> = (-n..=n)
        .map(|m| (z + Complex64::new(m as f64, 0.0)).inv())
        .collect();
    // suffix[i] = sum over chains m_j < ... < m_d contained in positions
    // >= i, processed from the innermost exponent outwards
    let mut suffix = vec![Complex64::new(0.0, 0.0); len + 1];
    for (layer, &exp) in k.iter().enumerate().rev() {
        let mut next = vec![Complex64::new(0.0, 0.0); len + 1];
        let last_layer = layer + 1 == k.len();
        for i in (0..len).rev() {
            let own = inv[i].powu(exp);
            let chain = if last_layer {
                own
            } else {
                own * suffix[i + 1]
            };
            next[i] = next[i + 1] + chain;
        }
        suffix = next;
    }
    suffix[0]
}

/// Direct oracle for `Ψ_k(z)`: sums the defining series over
/// `-N <= m_1 < ... < m_d <= N` for `N = oracle_cutoff` and `2N`, then
/// applies one Richardson extrapolation step in `1/N^p` with
/// `p = min(k_1, k_d) - 1` (the decay order of the two tails).  The reported
/// bound is the size of the extrapolation correction plus a rounding guard.
pub fn eval_multitangent_direct(
    k: &Index,
    z: Complex64,
    cfg: &PrecisionConfig,
) -> Result<DirectEval> {
    cfg.validate()?;
    if !k.is_mtgf_admissible() {
        return Err(not_admissible(k));
    }
    pole_guard(z)?;
    let n = cfg.oracle_cutoff as i64;
    let v1 = truncated_bilateral(k.parts(), z, n);
    let v2 = truncated_bilateral(k.parts(), z, 2 * n);
    let p = k.parts().first().unwrap().min(k.parts().last().unwrap()) - 1;
    let gain = ((1u64 << p) - 1) as f64; // 2^p - 1
    let correction = (v2 - v1) / gain;
    let value = v2 + correction;
    let tail_bound = correction.norm() + 1e-13 * (1.0 + value.norm());
    Ok(DirectEval { value, tail_bound })
}

/// A finite combination `sum_s c_s Ψ_s` with zeta-product coefficients.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct MonotangentCombination {
    terms: BTreeMap<u32, ProductCombination>,
}

impl MonotangentCombination {
    pub fn zero() -> Self {
        MonotangentCombination::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&u32, &ProductCombination)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, s: u32) -> ProductCombination {
        self.terms.get(&s).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, s: u32, coefficient: ProductCombination) {
        assert!(s >= 2, "monotangent weight must be at least 2");
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(s).or_default();
        entry.add_assign_ref(&coefficient);
        if entry.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            c.scale(factor);
        }
    }

    /// Numeric evaluation: flattens each zeta coefficient and evaluates each
    /// monotangent through its closed form.
    pub fn eval_at(&self, z: Complex64, cfg: &PrecisionConfig) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (&s, c) in &self.terms {
            total += eval_monotangent(s, z)? * eval_product_combination(c, cfg)?;
        }
        Ok(total)
    }

    /// Expands the whole combination as a numeric polynomial in
    /// `w = 1/(e^{2πiz} - 1)`; entry `j` is the coefficient of `w^j`.
    pub fn w_expand(&self, cfg: &PrecisionConfig) -> Result<Vec<Complex64>> {
        let max_s = match self.terms.keys().next_back() {
            Some(&s) => s,
            None => return Ok(Vec::new()),
        };
        let mut out = vec![Complex64::new(0.0, 0.0); max_s as usize + 1];
        for (&s, c) in &self.terms {
            let flat = eval_product_combination(c, cfg)?;
            let poly = monotangent_w_poly(s)?;
            let scale = two_pi_i_pow(s) * flat;
            for (j, q) in poly.coeffs().iter().enumerate() {
                out[j] += scale * rat_f64(q);
            }
        }
        Ok(out)
    }

    /// JSON form: array of `{s, combination}`, ascending `s`.
    pub fn to_json(&self) -> serde_json::Value {
        let arr: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(s, c)| serde_json::json!({ "s": s, "combination": c.to_json() }))
            .collect();
        serde_json::Value::Array(arr)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("monotangent combination JSON must be an array".into()))?;
        let mut out = MonotangentCombination::zero();
        for item in arr {
            let s = item
                .get("s")
                .and_then(|v| v.as_u64())
                .ok_or_else(|| Error::Parse("monotangent term needs an `s` field".into()))?;
            if s < 2 {
                return Err(Error::InvalidIndex(format!(
                    "monotangent weight must be at least 2, got {s}"
                )));
            }
            let comb = item
                .get("combination")
                .ok_or_else(|| Error::Parse("monotangent term needs a `combination` field".into()))?;
            out.add_term(s as u32, ProductCombination::from_json(comb)?);
        }
        Ok(out)
    }
}

impl fmt::Display for MonotangentCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (s, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            let inner = c.to_string();
            if inner == "1" {
                write!(f, "Ψ_{s}")?;
            } else if c.len() > 1 {
                write!(f, "({inner})·Ψ_{s}")?;
            } else {
                write!(f, "{inner}·Ψ_{s}")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// Writes `Ψ_k` as a combination of monotangents with (products of) shifted
/// zeta values as coefficients, by expanding each factor `(z + m_j)^{-k_j}`
/// into partial fractions against the two tails of the chain:
///
/// `Ψ_k = sum_j sum_{a+s+b = k_j - 2} (-1)^{k_1+...+k_{j-1}+a}
///        ζ_a(k_{j-1},...,k_1) ζ_b(k_{j+1},...,k_d) Ψ_{s+2}`.
pub fn reduce_to_monotangents(k: &Index) -> Result<MonotangentCombination> {
    if !k.is_mtgf_admissible() {
        return Err(not_admissible(k));
    }
    let parts = k.parts();
    let mut out = MonotangentCombination::zero();
    let mut prefix_weight = 0u32;
    for (j, &kj) in parts.iter().enumerate() {
        if kj < 2 {
            // a part of size 1 leaves no room for a + s + b = k_j - 2 ≥ 0
            prefix_weight += kj;
            continue;
        }
        let rev_prefix = Index::new(parts[..j].iter().rev().copied().collect()).unwrap();
        let suffix = Index::new(parts[j + 1..].to_vec()).unwrap();
        for s in 0..=(kj - 2) {
            for a in 0..=(kj - 2 - s) {
                let b = kj - 2 - s - a;
                let za = zeta_shifted(a, &rev_prefix)?;
                let zb = zeta_shifted(b, &suffix)?;
                if za.is_zero() || zb.is_zero() {
                    continue;
                }
                let mut term = ProductCombination::product_of(&za, &zb);
                if (prefix_weight + a) % 2 == 1 {
                    term.scale(&rat(-1));
                }
                out.add_term(s + 2, term);
            }
        }
        prefix_weight += kj;
    }
    Ok(out)
}

/// Index-sum form of `dΨ_k/dz = - sum_i k_i Ψ_{k with k_i incremented}`.
pub fn derivative_index_sum(k: &Index) -> Result<IndexSum> {
    if !k.is_mtgf_admissible() {
        return Err(not_admissible(k));
    }
    let mut out = IndexSum::zero();
    for i in 0..k.depth() {
        let mut parts = k.parts().to_vec();
        parts[i] += 1;
        out.add_term(Index::new(parts).unwrap(), rat(-(k.parts()[i] as i64)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::idx;
    use crate::index::{factorial, rat};
    use crate::mzv::eval_mzv;

    fn cfg() -> PrecisionConfig {
        PrecisionConfig::default()
    }

    fn frac(n: i64, d: i64) -> Rational {
        rat(n) / rat(d)
    }

    #[test]
    fn w_polynomial_goldens() {
        // Ψ2 = (2πi)²(w + w²), Ψ3 = (2πi)³(w + 3w² + 2w³)/2,
        // Ψ4 = (2πi)⁴(w + 7w² + 12w³ + 6w⁴)/6
        assert_eq!(monotangent_w_poly(2).unwrap().coeffs(), &[rat(0), rat(1), rat(1)]);
        assert_eq!(
            monotangent_w_poly(3).unwrap().coeffs(),
            &[rat(0), frac(1, 2), frac(3, 2), rat(1)]
        );
        assert_eq!(
            monotangent_w_poly(4).unwrap().coeffs(),
            &[rat(0), frac(1, 6), frac(7, 6), rat(2), rat(1)]
        );
        assert!(monotangent_w_poly(1).is_err());
    }

    #[test]
    fn w_polynomial_structure() {
        for s in 2..=12u32 {
            let p = monotangent_w_poly(s).unwrap();
            assert_eq!(p.degree(), s as usize);
            assert!(p.coeff(0).is_zero());
            assert_eq!(p.coeff(1), rat(1) / factorial(s - 1), "w¹ coefficient, s={s}");
            assert_eq!(p.coeff(s as usize), rat(1), "leading coefficient, s={s}");
        }
    }

    #[test]
    fn w_polynomial_reflection_symmetry() {
        // z -> -z maps w to -1-w, so P_s(-1-w) = (-1)^s P_s(w) exactly
        for s in 2..=12u32 {
            let p = monotangent_w_poly(s).unwrap();
            // expand P(-1-w) by accumulating powers of (-1-w)
            let mut composed = vec![rat(0); p.coeffs().len()];
            let mut power = vec![rat(1)]; // (-1-w)^0
            for c in p.coeffs() {
                for (i, q) in power.iter().enumerate() {
                    composed[i] += c * q;
                }
                // multiply power by (-1-w)
                let mut next = vec![rat(0); power.len() + 1];
                for (i, q) in power.iter().enumerate() {
                    next[i] -= q;
                    next[i + 1] -= q;
                }
                power = next;
            }
            let sign = if s % 2 == 0 { rat(1) } else { rat(-1) };
            let expect: Vec<Rational> = p.coeffs().iter().map(|c| c * &sign).collect();
            assert_eq!(composed, expect, "s = {s}");
        }
    }

    #[test]
    fn monotangent_matches_cotangent_closed_forms() {
        // Ψ2(z) = π²/sin²(πz) and Ψ3(z) = π³ cos(πz)/sin³(πz)
        let zs = [
            Complex64::new(0.3, 0.0),
            Complex64::new(0.51, 0.0),
            Complex64::new(0.3, 0.2),
            Complex64::new(-0.7, 1.1),
        ];
        for z in zs {
            let s = (PI * z).sin();
            let want2 = (PI * PI) / (s * s);
            let got2 = eval_monotangent(2, z).unwrap();
            assert!((got2 - want2).norm() < 1e-10 * want2.norm(), "z = {z}");
            let want3 = PI.powi(3) * (PI * z).cos() / (s * s * s);
            let got3 = eval_monotangent(3, z).unwrap();
            assert!((got3 - want3).norm() < 1e-10 * want3.norm().max(1.0), "z = {z}");
        }
        // the classical spot value Ψ2(1/4) = 2π²
        let quarter = eval_monotangent(2, Complex64::new(0.25, 0.0)).unwrap();
        assert!((quarter - 2.0 * PI * PI).norm() < 1e-10);
    }

    #[test]
    fn pole_rejection() {
        for z in [
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(-3.0, 1e-13),
            Complex64::new(2.0 + 1e-13, 0.0),
        ] {
            assert!(matches!(eval_monotangent(2, z), Err(Error::Pole(_))), "z = {z}");
            assert!(matches!(
                eval_multitangent_direct(&idx![2, 3], z, &cfg()),
                Err(Error::Pole(_))
            ));
        }
    }

    #[test]
    fn reduction_golden_depth_two() {
        // Ψ_{2,3} = 3 ζ(3) Ψ2 + ζ(2) Ψ3
        let got = reduce_to_monotangents(&idx![2, 3]).unwrap();
        let mut want = MonotangentCombination::zero();
        let mut c2 = ProductCombination::zero();
        c2.add_term(Index::empty(), idx![3], rat(3));
        let mut c3 = ProductCombination::zero();
        c3.add_term(Index::empty(), idx![2], rat(1));
        want.add_term(2, c2);
        want.add_term(3, c3);
        assert_eq!(got, want);
        assert_eq!(got.to_string(), "3·ζ(3)·Ψ_2 + ζ(2)·Ψ_3");
    }

    #[test]
    fn reduction_depth_one_is_identity() {
        let got = reduce_to_monotangents(&idx![5]).unwrap();
        let mut want = MonotangentCombination::zero();
        want.add_term(5, ProductCombination::unit());
        assert_eq!(got, want);
        assert!(reduce_to_monotangents(&idx![1, 2]).is_err());
        assert!(reduce_to_monotangents(&Index::empty()).is_err());
    }

    #[test]
    fn reduction_matches_direct_oracle() {
        let mut c = cfg();
        c.oracle_cutoff = 10_000;
        let z = Complex64::new(0.3, 0.2);
        for k in [idx![2, 3], idx![3, 2], idx![2, 2], idx![4], idx![2, 1, 2]] {
            let direct = eval_multitangent_direct(&k, z, &c).unwrap();
            let reduced = reduce_to_monotangents(&k).unwrap().eval_at(z, &c).unwrap();
            let tol = (3.0 * direct.tail_bound).max(1e-5);
            assert!(
                (direct.value - reduced).norm() < tol,
                "k = ({k}): |{} - {}| vs {tol}",
                direct.value,
                reduced
            );
        }
    }

    #[test]
    fn direct_oracle_depth_one_matches_closed_form() {
        let mut c = cfg();
        c.oracle_cutoff = 10_000;
        let z = Complex64::new(0.3, 0.0);
        let direct = eval_multitangent_direct(&idx![2], z, &c).unwrap();
        let closed = eval_monotangent(2, z).unwrap();
        assert!((direct.value - closed).norm() < 3.0 * direct.tail_bound + 1e-9);
    }

    #[test]
    fn derivative_sum_golden() {
        let got = derivative_index_sum(&idx![2, 3]).unwrap();
        let mut want = IndexSum::zero();
        want.add_term(idx![3, 3], rat(-2));
        want.add_term(idx![2, 4], rat(-3));
        assert_eq!(got, want);
    }

    #[test]
    fn combination_json_roundtrip_and_eval() {
        let comb = reduce_to_monotangents(&idx![2, 2, 3]).unwrap();
        let back = MonotangentCombination::from_json(&comb.to_json()).unwrap();
        assert_eq!(back, comb);

        // numeric spot check of the golden reduction
        let c = cfg();
        let z = Complex64::new(0.3, 0.0);
        let direct = reduce_to_monotangents(&idx![2, 3]).unwrap().eval_at(z, &c).unwrap();
        let z2 = eval_mzv(&idx![2], &c).unwrap();
        let z3 = eval_mzv(&idx![3], &c).unwrap();
        let by_hand = eval_monotangent(2, z).unwrap() * 3.0 * z3
            + eval_monotangent(3, z).unwrap() * z2;
        assert!((direct - by_hand).norm() < 1e-12);
    }

    #[test]
    fn w_expand_matches_eval() {
        let comb = reduce_to_monotangents(&idx![2, 3]).unwrap();
        let c = cfg();
        let z = Complex64::new(0.3, 0.2);
        let coeffs = comb.w_expand(&c).unwrap();
        let w = (Complex64::new(0.0, 2.0 * PI) * z).exp() - 1.0;
        let w = w.inv();
        let mut horner = Complex64::new(0.0, 0.0);
        for c in coeffs.iter().rev() {
            horner = horner * w + c;
        }
        let eval = comb.eval_at(z, &c).unwrap();
        assert!((horner - eval).norm() < 1e-10);
    }
}
