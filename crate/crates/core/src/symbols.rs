//! Exact linear combinations of zeta symbols and polynomials in the
//! regularization variable `T`.
//!
//! [`MzvCombination`] is a rational linear combination of convergent zeta
//! symbols `ζ(k)`; [`ProductCombination`] allows products of two symbols per
//! term, which is what symmetrized polynomials produce.  [`Poly`] stacks
//! either coefficient type into a polynomial in `T`.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::index::{parse_rational, rational_string, Index, Rational};

/// Coefficient ring interface shared by the two combination types, so that
/// `T`-polynomials can be generic over them.
pub trait Coefficient: Clone + Default + PartialEq {
    fn is_zero(&self) -> bool;
    fn add_assign_ref(&mut self, other: &Self);
    fn scale(&mut self, factor: &Rational);
    fn to_json(&self) -> serde_json::Value;
    fn from_json(value: &serde_json::Value) -> Result<Self>;
}

/// A rational linear combination of convergent zeta symbols.  The empty
/// index stands for the constant `ζ(∅) = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MzvCombination {
    terms: BTreeMap<Index, Rational>,
}

impl MzvCombination {
    pub fn zero() -> Self {
        MzvCombination::default()
    }

    /// The combination `1` (one empty symbol).
    pub fn unit() -> Self {
        MzvCombination::symbol(Index::empty()).unwrap()
    }

    /// A single symbol `ζ(k)`; rejects indices whose series diverges.
    pub fn symbol(k: Index) -> Result<Self> {
        if !k.is_tail_admissible() {
            return Err(Error::Divergent(format!("zeta({k}) diverges")));
        }
        let mut terms = BTreeMap::new();
        terms.insert(k, Rational::one());
        Ok(MzvCombination { terms })
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

    pub fn iter(&self) -> impl Iterator<Item = (&Index, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &Index) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, k: Index, coefficient: Rational) {
        debug_assert!(k.is_tail_admissible(), "divergent symbol zeta({k})");
        if coefficient.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self.terms.entry(k.clone()).or_insert_with(Rational::zero);
            *entry += coefficient;
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&k);
        }
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        let mut out = self.clone();
        Coefficient::scale(&mut out, factor);
        out
    }
}

impl Coefficient for MzvCombination {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, c) in &self.terms {
            map.insert(k.to_string(), serde_json::Value::String(rational_string(c)));
        }
        serde_json::Value::Object(map)
    }

    fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("combination JSON must be an object".into()))?;
        let mut out = MzvCombination::zero();
        for (key, val) in obj {
            let coeff = val
                .as_str()
                .ok_or_else(|| Error::Parse(format!("coefficient of `{key}` must be a string")))?;
            let k: Index = key.parse()?;
            if !k.is_tail_admissible() {
                return Err(Error::Divergent(format!("zeta({k}) diverges")));
            }
            out.add_term(k, parse_rational(coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Display for MzvCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().map(|(k, c)| (symbol_text(k), c)))
    }
}

/// A rational linear combination of products of two zeta symbols.  Keys hold
/// the pair sorted, with the empty index acting as the unit factor.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ProductCombination {
    terms: BTreeMap<(Index, Index), Rational>,
}

impl ProductCombination {
    pub fn zero() -> Self {
        ProductCombination::default()
    }

    pub fn unit() -> Self {
        let mut out = ProductCombination::zero();
        out.add_term(Index::empty(), Index::empty(), Rational::one());
        out
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

    pub fn iter(&self) -> impl Iterator<Item = (&(Index, Index), &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, a: &Index, b: &Index) -> Rational {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        self.terms.get(&key).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, a: Index, b: Index, coefficient: Rational) {
        debug_assert!(
            a.is_tail_admissible() && b.is_tail_admissible(),
            "divergent symbol in zeta({a})·zeta({b})"
        );
        if coefficient.is_zero() {
            return;
        }
        let key = if a <= b { (a, b) } else { (b, a) };
        let now_zero = {
            let entry = self.terms.entry(key.clone()).or_insert_with(Rational::zero);
            *entry += coefficient;
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&key);
        }
    }

    /// Bilinear product of two rank-one combinations.
    pub fn product_of(a: &MzvCombination, b: &MzvCombination) -> Self {
        let mut out = ProductCombination::zero();
        for (ka, ca) in a.iter() {
            for (kb, cb) in b.iter() {
                out.add_term(ka.clone(), kb.clone(), ca * cb);
            }
        }
        out
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        let mut out = self.clone();
        Coefficient::scale(&mut out, factor);
        out
    }
}

impl From<MzvCombination> for ProductCombination {
    fn from(c: MzvCombination) -> Self {
        ProductCombination::product_of(&c, &MzvCombination::unit())
    }
}

fn pair_key_string(a: &Index, b: &Index) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => String::new(),
        (true, false) => b.to_string(),
        (false, true) => a.to_string(),
        (false, false) => format!("{a}*{b}"),
    }
}

fn parse_pair_key(key: &str) -> Result<(Index, Index)> {
    match key.split_once('*') {
        Some((a, b)) => Ok((a.parse()?, b.parse()?)),
        None => Ok((Index::empty(), key.parse()?)),
    }
}

impl Coefficient for ProductCombination {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_assign_ref(&mut self, other: &Self) {
        for ((a, b), c) in &other.terms {
            self.add_term(a.clone(), b.clone(), c.clone());
        }
    }

    fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for ((a, b), c) in &self.terms {
            map.insert(
                pair_key_string(a, b),
                serde_json::Value::String(rational_string(c)),
            );
        }
        serde_json::Value::Object(map)
    }

    fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("combination JSON must be an object".into()))?;
        let mut out = ProductCombination::zero();
        for (key, val) in obj {
            let coeff = val
                .as_str()
                .ok_or_else(|| Error::Parse(format!("coefficient of `{key}` must be a string")))?;
            let (a, b) = parse_pair_key(key)?;
            if !a.is_tail_admissible() || !b.is_tail_admissible() {
                return Err(Error::Divergent(format!("zeta({a})·zeta({b}) diverges")));
            }
            out.add_term(a, b, parse_rational(coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Display for ProductCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms.iter().map(|((a, b), c)| {
                let text = match (a.is_empty(), b.is_empty()) {
                    (true, true) => "1".to_string(),
                    (true, false) => symbol_text(b),
                    (false, true) => symbol_text(a),
                    (false, false) => format!("{}·{}", symbol_text(a), symbol_text(b)),
                };
                (text, c)
            }),
        )
    }
}

fn symbol_text(k: &Index) -> String {
    if k.is_empty() {
        "1".to_string()
    } else {
        format!("ζ({k})")
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (String, &'a Rational)>,
) -> fmt::Result {
    let mut first = true;
    for (text, c) in terms {
        if !first {
            write!(f, " + ")?;
        }
        if c.is_one() && text != "1" {
            write!(f, "{text}")?;
        } else if text == "1" {
            write!(f, "{c}")?;
        } else {
            write!(f, "{c}·{text}")?;
        }
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// A polynomial in the regularization variable `T` with combination
/// coefficients; `coeffs[i]` multiplies `T^i`, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type TPoly = Poly<MzvCombination>;
pub type ProductTPoly = Poly<ProductCombination>;

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Poly::from_coeffs(vec![c])
    }

    pub fn monomial(power: usize, c: C) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::default(); power + 1];
        coeffs[power] = c;
        Poly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Coefficient::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> C {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> C {
        self.coeff(0)
    }

    pub fn add_assign(&mut self, other: &Self) {
        if other.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), C::default());
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            self.coeffs[i].add_assign_ref(c);
        }
        while self.coeffs.last().is_some_and(Coefficient::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.coeffs.clear();
            return;
        }
        for c in &mut self.coeffs {
            c.scale(factor);
        }
    }

    /// Multiplication by `T^n`.
    pub fn mul_t_power(&self, n: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![C::default(); n];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// JSON array of `{power, combination}` objects, ascending powers, zero
    /// coefficients omitted.
    pub fn to_json(&self) -> serde_json::Value {
        let mut arr = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            arr.push(serde_json::json!({
                "power": i,
                "combination": c.to_json(),
            }));
        }
        serde_json::Value::Array(arr)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let arr = value
            .as_array()
            .ok_or_else(|| Error::Parse("T-polynomial JSON must be an array".into()))?;
        let mut out = Poly::zero();
        for item in arr {
            let power = item
                .get("power")
                .and_then(|p| p.as_u64())
                .ok_or_else(|| Error::Parse("T-polynomial term needs a `power` field".into()))?;
            let comb = item
                .get("combination")
                .ok_or_else(|| Error::Parse("T-polynomial term needs a `combination` field".into()))?;
            out.add_assign(&Poly::monomial(power as usize, C::from_json(comb)?));
        }
        Ok(out)
    }
}

/// Lifts a rank-one `T`-polynomial to rank two.
pub fn promote_tpoly(p: &TPoly) -> ProductTPoly {
    Poly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| ProductCombination::from(c.clone()))
            .collect(),
    )
}

/// Product of a constant combination with a rank-one `T`-polynomial, rank-two
/// result.
pub fn constant_times_tpoly(constant: &MzvCombination, p: &TPoly) -> ProductTPoly {
    Poly::from_coeffs(
        p.coeffs()
            .iter()
            .map(|c| ProductCombination::product_of(constant, c))
            .collect(),
    )
}

/// Product of two rank-one `T`-polynomials as a rank-two polynomial.
pub fn tpoly_product(a: &TPoly, b: &TPoly) -> ProductTPoly {
    if a.is_zero() || b.is_zero() {
        return ProductTPoly::zero();
    }
    let mut coeffs =
        vec![ProductCombination::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (i, ca) in a.coeffs().iter().enumerate() {
        for (j, cb) in b.coeffs().iter().enumerate() {
            coeffs[i + j].add_assign_ref(&ProductCombination::product_of(ca, cb));
        }
    }
    Poly::from_coeffs(coeffs)
}
