//! Binary words in the letters `x`, `y`, the shuffle product, and the
//! word/index dictionary `(k_1, ..., k_d) <-> y x^{k_1 - 1} ... y x^{k_d - 1}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::index::{Index, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    X,
    Y,
}

/// A word over `{x, y}` packed into a `u64`: bit `i` set means letter `i`
/// (counting from the left) is `y`.  Length is capped at 64, far beyond the
/// weights this crate enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn letter(&self, i: usize) -> Letter {
        debug_assert!(i < self.len());
        if self.bits >> i & 1 == 1 {
            Letter::Y
        } else {
            Letter::X
        }
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.letter(i))
    }

    pub fn push(&mut self, letter: Letter) {
        assert!(self.len < 64, "word length cap exceeded");
        if letter == Letter::Y {
            self.bits |= 1 << self.len;
        }
        self.len += 1;
    }

    pub fn appended(&self, letter: Letter) -> Word {
        let mut w = *self;
        w.push(letter);
        w
    }

    pub fn concat(&self, other: &Word) -> Word {
        assert!(self.len() + other.len() <= 64, "word length cap exceeded");
        Word {
            len: self.len + other.len,
            bits: self.bits | other.bits << self.len,
        }
    }

    fn mask(n: usize) -> u64 {
        if n >= 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    /// First `n` letters.
    pub fn prefix(&self, n: usize) -> Word {
        debug_assert!(n <= self.len());
        Word {
            len: n as u8,
            bits: self.bits & Word::mask(n),
        }
    }

    /// Everything after the first `n` letters.
    pub fn suffix(&self, n: usize) -> Word {
        debug_assert!(n <= self.len());
        Word {
            len: self.len - n as u8,
            bits: self.bits >> n,
        }
    }

    pub fn reverse(&self) -> Word {
        let mut out = Word::empty();
        for i in (0..self.len()).rev() {
            out.push(self.letter(i));
        }
        out
    }

    pub fn swap_xy(&self) -> Word {
        Word {
            len: self.len,
            bits: self.bits ^ Word::mask(self.len()),
        }
    }

    pub fn count(&self, letter: Letter) -> usize {
        let ys = (self.bits & Word::mask(self.len())).count_ones() as usize;
        match letter {
            Letter::Y => ys,
            Letter::X => self.len() - ys,
        }
    }

    pub fn trailing(&self, letter: Letter) -> usize {
        let mut n = 0;
        for i in (0..self.len()).rev() {
            if self.letter(i) == letter {
                n += 1;
            } else {
                break;
            }
        }
        n
    }

    pub fn starts_with(&self, letter: Letter) -> bool {
        self.len > 0 && self.letter(0) == letter
    }

    pub fn ends_with(&self, letter: Letter) -> bool {
        self.len > 0 && self.letter(self.len() - 1) == letter
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", if l == Letter::Y { 'y' } else { 'x' })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut w = Word::empty();
        for c in s.trim().chars() {
            match c {
                'x' => w.push(Letter::X),
                'y' => w.push(Letter::Y),
                _ => return Err(Error::Parse(format!("invalid word letter `{c}` in `{s}`"))),
            }
        }
        Ok(w)
    }
}

/// `(k_1, ..., k_d) -> y x^{k_1 - 1} y x^{k_2 - 1} ... y x^{k_d - 1}`;
/// the empty index maps to the empty word.
pub fn index_to_word(k: &Index) -> Word {
    let mut w = Word::empty();
    for &p in k.parts() {
        w.push(Letter::Y);
        for _ in 1..p {
            w.push(Letter::X);
        }
    }
    w
}

/// Inverse of [`index_to_word`]; fails unless the word is empty or starts
/// with `y`.
pub fn word_to_index(w: &Word) -> Result<Index> {
    if w.is_empty() {
        return Ok(Index::empty());
    }
    if !w.starts_with(Letter::Y) {
        return Err(Error::InvalidIndex(format!(
            "word `{w}` does not start with y"
        )));
    }
    let mut parts: Vec<u32> = Vec::new();
    for l in w.letters() {
        match l {
            Letter::Y => parts.push(1),
            Letter::X => *parts.last_mut().unwrap() += 1,
        }
    }
    Index::new(parts)
}

/// A finite formal sum of words with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordPoly {
    terms: BTreeMap<Word, Rational>,
}

impl WordPoly {
    pub fn zero() -> Self {
        WordPoly::default()
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Rational::one());
        WordPoly { terms }
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

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &Word) -> Rational {
        self.terms.get(w).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, w: Word, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(w).or_insert_with(Rational::zero);
        *entry += coefficient;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add_assign(&mut self, other: &WordPoly) {
        for (w, c) in &other.terms {
            self.add_term(*w, c.clone());
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

    fn add_assign_appended(&mut self, other: &WordPoly, letter: Letter) {
        for (w, c) in &other.terms {
            self.add_term(w.appended(letter), c.clone());
        }
    }
}

/// Shuffle product of two words, by the recursion
/// `(u a) sh (v b) = ((u sh v b)) a + ((u a sh v)) b`.
pub fn shuffle_words(u: &Word, v: &Word) -> WordPoly {
    // dp[i][j] = shuffle of the length-i prefix of u with the length-j
    // prefix of v.
    let mut dp: Vec<Vec<WordPoly>> = vec![vec![WordPoly::zero(); v.len() + 1]; u.len() + 1];
    dp[0][0] = WordPoly::from_word(Word::empty());
    for i in 0..=u.len() {
        for j in 0..=v.len() {
            if i == 0 && j == 0 {
                continue;
            }
            let mut sum = WordPoly::zero();
            if i > 0 {
                sum.add_assign_appended(&dp[i - 1][j], u.letter(i - 1));
            }
            if j > 0 {
                sum.add_assign_appended(&dp[i][j - 1], v.letter(j - 1));
            }
            dp[i][j] = sum;
        }
    }
    dp[u.len()][v.len()].clone()
}

/// Bilinear extension of the shuffle product.
pub fn shuffle_polys(a: &WordPoly, b: &WordPoly) -> WordPoly {
    let mut out = WordPoly::zero();
    for (u, cu) in a.iter() {
        for (v, cv) in b.iter() {
            let mut prod = shuffle_words(u, v);
            prod.scale(&(cu * cv));
            out.add_assign(&prod);
        }
    }
    out
}
