//! Indices (tuples of positive integers), the stuffle product, and the
//! index-level duality/shift operators.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Exact coefficient type used throughout the symbolic layer.
pub type Rational = BigRational;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Canonical `p/q` form with an explicit denominator, e.g. `3/1`, `-1/2`.
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for i in 2..=n.max(1) {
        acc *= i;
    }
    Rational::from_integer(acc)
}

pub fn binomial(n: u32, k: u32) -> Rational {
    Rational::from_integer(num::integer::binomial(BigInt::from(n), BigInt::from(k)))
}

/// Accepts `p/q` or a bare integer `p`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let den = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// A tuple of positive integers `(k_1, ..., k_r)`, possibly empty.
///
/// Summation indices are written innermost first: the last part governs the
/// outermost summation variable, so e.g. `(1, 2)` is the convergent series
/// `sum_{0 < m_1 < m_2} 1/(m_1 m_2^2)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Index {
    parts: Vec<u32>,
}

impl Index {
    /// Builds an index, rejecting any part equal to zero.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidIndex(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Index { parts })
    }

    pub fn empty() -> Self {
        Index::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn depth(&self) -> usize {
        self.parts.len()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// True when the zeta series converges: empty, or last part at least 2.
    pub fn is_tail_admissible(&self) -> bool {
        self.parts.last().map_or(true, |&last| last >= 2)
    }

    /// True when the multitangent series converges absolutely: nonempty with
    /// first and last part at least 2.
    pub fn is_mtgf_admissible(&self) -> bool {
        match (self.parts.first(), self.parts.last()) {
            (Some(&first), Some(&last)) => first >= 2 && last >= 2,
            _ => false,
        }
    }

    pub fn reversed(&self) -> Index {
        let mut parts = self.parts.clone();
        parts.reverse();
        Index { parts }
    }

    /// Index with one extra part appended.
    pub fn with_part(&self, part: u32) -> Index {
        debug_assert!(part >= 1);
        let mut parts = self.parts.clone();
        parts.push(part);
        Index { parts }
    }

    /// Hoffman dual: with `w` the weight, an index corresponds to the set of
    /// its proper partial sums inside `{1, ..., w-1}`; the dual index is the
    /// one whose partial sums are the complement.  It is an involution, and
    /// the depths of `k` and its dual sum to `w + 1`.
    pub fn hoffman_dual(&self) -> Index {
        let w = self.weight();
        if w == 0 {
            return Index::empty();
        }
        let mut is_sum = vec![false; w as usize]; // positions 1..w-1 used
        let mut acc = 0u32;
        for &p in &self.parts[..self.parts.len() - 1] {
            acc += p;
            is_sum[acc as usize] = true;
        }
        let mut parts = Vec::new();
        let mut prev = 0u32;
        for pos in 1..w {
            if !is_sum[pos as usize] {
                parts.push(pos - prev);
                prev = pos;
            }
        }
        parts.push(w - prev);
        Index { parts }
    }

    /// Decrements the first and the last part (the same part twice when the
    /// depth is one).  Requires the index to be multitangent-admissible; the
    /// depth-one index `(2)` maps to the empty index.
    pub fn down_both(&self) -> Result<Index> {
        if !self.is_mtgf_admissible() {
            return Err(Error::InvalidIndex(format!(
                "down_both needs first and last part >= 2, got ({self})"
            )));
        }
        let mut parts = self.parts.clone();
        if parts.len() == 1 {
            parts[0] -= 2;
            if parts[0] == 0 {
                parts.clear();
            }
        } else {
            parts[0] -= 1;
            *parts.last_mut().unwrap() -= 1;
        }
        Ok(Index { parts })
    }

    /// Increments the last part; requires a nonempty index.
    pub fn up_last(&self) -> Result<Index> {
        let mut parts = self.parts.clone();
        match parts.last_mut() {
            Some(last) => *last += 1,
            None => {
                return Err(Error::InvalidIndex(
                    "up_last needs a nonempty index".into(),
                ))
            }
        }
        Ok(Index { parts })
    }

    /// Duality on the word representation: reverse the word and swap the two
    /// letters.  Fixes the set of tail-admissible indices and preserves the
    /// zeta value.  Requires a tail-admissible index.
    pub fn dagger_dual(&self) -> Result<Index> {
        if !self.is_tail_admissible() {
            return Err(Error::InvalidIndex(format!(
                "dagger dual needs last part >= 2, got ({self})"
            )));
        }
        let w = crate::word::index_to_word(self).reverse().swap_xy();
        crate::word::word_to_index(&w)
    }

    /// Stuffle (harmonic) product.  Bilinear on series: multiplying the two
    /// nested sums and splitting the region by the interleaving of the two
    /// chains, with equalities merging parts.
    pub fn stuffle(&self, other: &Index) -> IndexSum {
        let a = &self.parts;
        let b = &other.parts;
        // dp[i][j] = stuffle of the length-i prefix of a with the length-j
        // prefix of b, built by case analysis on which chain owns the
        // outermost summation variable.
        let mut dp: Vec<Vec<IndexSum>> = vec![vec![IndexSum::zero(); b.len() + 1]; a.len() + 1];
        dp[0][0] = IndexSum::from_index(Index::empty());
        for i in 0..=a.len() {
            for j in 0..=b.len() {
                if i == 0 && j == 0 {
                    continue;
                }
                let mut sum = IndexSum::zero();
                if i > 0 {
                    sum.add_assign_appended(&dp[i - 1][j], a[i - 1]);
                }
                if j > 0 {
                    sum.add_assign_appended(&dp[i][j - 1], b[j - 1]);
                }
                if i > 0 && j > 0 {
                    sum.add_assign_appended(&dp[i - 1][j - 1], a[i - 1] + b[j - 1]);
                }
                dp[i][j] = sum;
            }
        }
        dp[a.len()][b.len()].clone()
    }

    /// The `2^(depth-1)` indices obtained by either keeping or merging each
    /// adjacent pair of parts (the expansion underlying star values).
    pub fn contractions(&self) -> Vec<Index> {
        if self.parts.len() <= 1 {
            return vec![self.clone()];
        }
        let gaps = self.parts.len() - 1;
        let mut out = Vec::with_capacity(1 << gaps);
        for mask in 0u32..(1 << gaps) {
            let mut parts = vec![self.parts[0]];
            for (gap, &p) in self.parts[1..].iter().enumerate() {
                if mask & (1 << gap) != 0 {
                    *parts.last_mut().unwrap() += p;
                } else {
                    parts.push(p);
                }
            }
            out.push(Index { parts });
        }
        out
    }
}

impl fmt::Display for Index {
    /// Canonical text form: comma-separated parts, empty string for the
    /// empty index.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Index {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Index::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let p: u32 = piece
                .parse()
                .map_err(|_| Error::Parse(format!("invalid index part `{piece}` in `{s}`")))?;
            if p == 0 {
                return Err(Error::InvalidIndex(format!("zero part in `{s}`")));
            }
            parts.push(p);
        }
        Ok(Index { parts })
    }
}

/// Constructs an [`Index`] from part literals: `idx![2, 1, 3]`, `idx![]`.
#[macro_export]
macro_rules! idx {
    ($($p:expr),* $(,)?) => {
        $crate::index::Index::new(vec![$($p),*]).expect("idx! parts must be positive")
    };
}

/// A finite formal sum of indices with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IndexSum {
    terms: BTreeMap<Index, Rational>,
}

impl IndexSum {
    pub fn zero() -> Self {
        IndexSum::default()
    }

    pub fn from_index(index: Index) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(index, Rational::one());
        IndexSum { terms }
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

    pub fn coefficient(&self, index: &Index) -> Rational {
        self.terms.get(index).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, index: Index, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        let now_zero = {
            let entry = self.terms.entry(index.clone()).or_insert_with(Rational::zero);
            *entry += coefficient;
            entry.is_zero()
        };
        if now_zero {
            self.terms.remove(&index);
        }
    }

    pub fn add_assign(&mut self, other: &IndexSum) {
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, factor: &Rational) {
        if factor.is_zero() {
            self.terms.clear();
            return;
        }
        for c in self.terms.values_mut() {
            *c *= factor;
        }
    }

    /// Adds `other` with `part` appended to every term.
    fn add_assign_appended(&mut self, other: &IndexSum, part: u32) {
        for (k, c) in &other.terms {
            self.add_term(k.with_part(part), c.clone());
        }
    }

    /// Applies an index map to each term, summing coefficients of collisions.
    pub fn map_indices(&self, f: impl Fn(&Index) -> Result<Index>) -> Result<IndexSum> {
        let mut out = IndexSum::zero();
        for (k, c) in &self.terms {
            out.add_term(f(k)?, c.clone());
        }
        Ok(out)
    }

    /// Bilinear extension of the stuffle product.
    pub fn stuffle(&self, other: &IndexSum) -> IndexSum {
        let mut out = IndexSum::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let mut prod = ka.stuffle(kb);
                prod.scale(&(ca * cb));
                out.add_assign(&prod);
            }
        }
        out
    }

    /// JSON object mapping canonical index text to `p/q` coefficient strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, c) in &self.terms {
            map.insert(k.to_string(), serde_json::Value::String(rational_string(c)));
        }
        serde_json::Value::Object(map)
    }

    pub fn from_json(value: &serde_json::Value) -> Result<IndexSum> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("index sum JSON must be an object".into()))?;
        let mut out = IndexSum::zero();
        for (key, val) in obj {
            let coeff = val
                .as_str()
                .ok_or_else(|| Error::Parse(format!("coefficient of `{key}` must be a string")))?;
            out.add_term(key.parse()?, parse_rational(coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Display for IndexSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "({k})")?;
            } else {
                write!(f, "{c}·({k})")?;
            }
            first = false;
        }
        Ok(())
    }
}

/// All indices of weight exactly `w` (the empty index for `w = 0`), in
/// lexicographic order.
pub fn compositions_of_weight(w: u32) -> Vec<Index> {
    if w == 0 {
        return vec![Index::empty()];
    }
    let mut out = Vec::with_capacity(1 << (w - 1).min(30));
    let mut stack = Vec::new();
    fn rec(remaining: u32, stack: &mut Vec<u32>, out: &mut Vec<Index>) {
        if remaining == 0 {
            out.push(Index {
                parts: stack.clone(),
            });
            return;
        }
        for first in 1..=remaining {
            stack.push(first);
            rec(remaining - first, stack, out);
            stack.pop();
        }
    }
    rec(w, &mut stack, &mut out);
    out
}

/// All nonempty indices of weight `1..=cap` satisfying `filter`, ordered by
/// weight then lexicographically.  Deterministic, used by the verification
/// suites.
pub fn indices_up_to_weight(cap: u32, filter: impl Fn(&Index) -> bool) -> Vec<Index> {
    let mut out = Vec::new();
    for w in 1..=cap {
        out.extend(compositions_of_weight(w).into_iter().filter(&filter));
    }
    out
}
