//! Shuffle- and harmonic-regularized zeta polynomials in `T`, and the shifted
//! zeta values appearing in the monotangent reduction.
//!
//! Both regularizations are pinned down by the same three properties: they
//! agree with `ζ(l)` on convergent indices, send `(1)` to `T`, and turn the
//! respective product (shuffle on words, stuffle on indices) into polynomial
//! multiplication.  The algorithms below peel trailing divergent letters off
//! a word (resp. trailing ones off an index) using the product with a power
//! of `y` (resp. of `(1)`), which rewrites the divergent object as `T^n`
//! times a convergent one minus strictly-less-divergent remainders.

use std::collections::HashMap;

use num::One;

use crate::error::{Error, Result};
use crate::index::{binomial, factorial, rat, Index, IndexSum, Rational};
use crate::symbols::{Coefficient, MzvCombination, ProductCombination, TPoly};
use crate::word::{index_to_word, shuffle_words, word_to_index, Letter, Word, WordPoly};

/// Shuffle-regularized zeta polynomial `ζ_sh(l; T)`.
pub fn shuffle_regularize(l: &Index) -> TPoly {
    let mut memo = HashMap::new();
    shuffle_reg_word(&index_to_word(l), &mut memo)
}

/// Linear extension of [`shuffle_regularize`] to word polynomials.  Every
/// word must be empty or start with `y`.
pub fn shuffle_regularize_poly(p: &WordPoly) -> Result<TPoly> {
    let mut memo = HashMap::new();
    let mut out = TPoly::zero();
    for (w, c) in p.iter() {
        if !w.is_empty() && !w.starts_with(Letter::Y) {
            return Err(Error::InvalidIndex(format!(
                "word `{w}` does not correspond to an index"
            )));
        }
        let mut t = shuffle_reg_word(w, &mut memo);
        t.scale(c);
        out.add_assign(&t);
    }
    Ok(out)
}

fn shuffle_reg_word(w: &Word, memo: &mut HashMap<Word, TPoly>) -> TPoly {
    debug_assert!(w.is_empty() || w.starts_with(Letter::Y));
    if let Some(hit) = memo.get(w) {
        return hit.clone();
    }
    let n = w.trailing(Letter::Y);
    let result = if n == 0 {
        // empty word or a word ending in x: already convergent
        TPoly::constant(MzvCombination::symbol(word_to_index(w).unwrap()).unwrap())
    } else {
        // w = u y^n with u convergent; from reg(u) T^n = n! reg(u sh y^n):
        // reg(w) = (1/n!) T^n reg(u) - sum over the other shuffle terms
        let u = w.prefix(w.len() - n);
        let mut ypow = Word::empty();
        for _ in 0..n {
            ypow.push(Letter::Y);
        }
        let expansion = shuffle_words(&u, &ypow);
        debug_assert!(expansion.coefficient(w).is_one());
        let mut result = shuffle_reg_word(&u, memo).mul_t_power(n);
        result.scale(&(rat(1) / factorial(n as u32)));
        for (v, c) in expansion.iter() {
            if v == w {
                continue;
            }
            let mut t = shuffle_reg_word(v, memo);
            t.scale(&(-c.clone()));
            result.add_assign(&t);
        }
        result
    };
    memo.insert(*w, result.clone());
    result
}

/// Harmonic-regularized zeta polynomial `ζ_*(l; T)`.
pub fn harmonic_regularize(l: &Index) -> TPoly {
    let mut memo = HashMap::new();
    harmonic_reg_index(l, &mut memo)
}

/// Linear extension of [`harmonic_regularize`] to index sums.
pub fn harmonic_regularize_sum(s: &IndexSum) -> TPoly {
    let mut memo = HashMap::new();
    let mut out = TPoly::zero();
    for (l, c) in s.iter() {
        let mut t = harmonic_reg_index(l, &mut memo);
        t.scale(c);
        out.add_assign(&t);
    }
    out
}

fn harmonic_reg_index(l: &Index, memo: &mut HashMap<Index, TPoly>) -> TPoly {
    if let Some(hit) = memo.get(l) {
        return hit.clone();
    }
    let result = if l.is_tail_admissible() {
        TPoly::constant(MzvCombination::symbol(l.clone()).unwrap())
    } else {
        // l = head . (1^n) with head convergent; expanding head * (1)^{*n}
        // isolates l with coefficient n!:
        // reg(l) = (1/n!) (T^n ζ(head) - sum over the other stuffle terms)
        let trailing_ones = l
            .parts()
            .iter()
            .rev()
            .take_while(|&&p| p == 1)
            .count();
        let head =
            Index::new(l.parts()[..l.depth() - trailing_ones].to_vec()).unwrap();
        let expansion = IndexSum::from_index(head.clone()).stuffle(&ones_stuffle_power(trailing_ones as u32));
        debug_assert_eq!(expansion.coefficient(l), factorial(trailing_ones as u32));
        let mut result = TPoly::constant(MzvCombination::symbol(head).unwrap()).mul_t_power(trailing_ones);
        for (m, c) in expansion.iter() {
            if m == l {
                continue;
            }
            let mut t = harmonic_reg_index(m, memo);
            t.scale(&(-c.clone()));
            result.add_assign(&t);
        }
        result.scale(&(rat(1) / factorial(trailing_ones as u32)));
        result
    };
    memo.insert(l.clone(), result.clone());
    result
}

/// The `n`-fold stuffle power of `(1)`.
pub fn ones_stuffle_power(n: u32) -> IndexSum {
    let one = Index::new(vec![1]).unwrap();
    let mut acc = IndexSum::from_index(Index::empty());
    for _ in 0..n {
        acc = acc.stuffle(&IndexSum::from_index(one.clone()));
    }
    acc
}

/// Shifted zeta value `ζ_a(k)`: the `z^a` Taylor coefficient at `z = 0` of
/// the Hurwitz deformation `sum_{0<m_1<...<m_d} prod (m_i + z)^{-k_i}`,
/// expressed as an exact combination of zeta values:
/// `(-1)^a sum_{e_1+...+e_d=a} prod C(k_j-1+e_j, e_j) ζ(k+e)`.
///
/// Requires a convergent `k`; the empty index gives `1` for `a = 0` and `0`
/// otherwise.
pub fn zeta_shifted(a: u32, k: &Index) -> Result<MzvCombination> {
    if !k.is_tail_admissible() {
        return Err(Error::Divergent(format!(
            "zeta({k}) diverges, cannot shift"
        )));
    }
    if k.is_empty() {
        return Ok(if a == 0 {
            MzvCombination::unit()
        } else {
            MzvCombination::zero()
        });
    }
    let mut out = MzvCombination::zero();
    let mut shift = vec![0u32; k.depth()];
    distribute(a, 0, &mut shift, &mut |shift| {
        let mut coeff = Rational::one();
        let mut parts = Vec::with_capacity(k.depth());
        for (&kj, &ej) in k.parts().iter().zip(shift.iter()) {
            coeff *= binomial(kj - 1 + ej, ej);
            parts.push(kj + ej);
        }
        out.add_term(Index::new(parts).unwrap(), coeff);
    });
    if a % 2 == 1 {
        Coefficient::scale(&mut out, &rat(-1));
    }
    Ok(out)
}

/// Calls `f` once per way of writing `total` as an ordered sum of
/// `shift.len() - at` nonnegative entries in `shift[at..]`.
fn distribute(total: u32, at: usize, shift: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
    if at + 1 == shift.len() {
        shift[at] = total;
        f(shift);
        return;
    }
    for e in 0..=total {
        shift[at] = e;
        distribute(total - e, at + 1, shift, f);
    }
}

/// Expands each product `ζ(a)·ζ(b)` through the stuffle product, yielding a
/// rank-one combination.  Valid because stuffle multiplication is exact on
/// convergent indices.
pub fn expand_products_stuffle(p: &ProductCombination) -> MzvCombination {
    let mut out = MzvCombination::zero();
    for ((a, b), c) in p.iter() {
        for (k, m) in a.stuffle(b).iter() {
            out.add_term(k.clone(), c * m);
        }
    }
    out
}

/// Expands each product `ζ(a)·ζ(b)` through the shuffle product on words.
pub fn expand_products_shuffle(p: &ProductCombination) -> MzvCombination {
    let mut out = MzvCombination::zero();
    for ((a, b), c) in p.iter() {
        let prod = shuffle_words(&index_to_word(a), &index_to_word(b));
        for (w, m) in prod.iter() {
            out.add_term(word_to_index(w).unwrap(), c * m);
        }
    }
    out
}
