//! Words over a letter type and the coshuffle Hopf algebra structure of the
//! tensor algebra.

use std::cmp::Ordering;
use std::fmt;

use crate::kernel::{ordered_partitions_with_empty, sign, LinComb};

/// A word `x₁⋯x_m`; the empty word is the unit `1`.
///
/// Ordered by length, then lexicographically by letters.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word<L>(pub Vec<L>);

/// An element of the tensor algebra.
pub type Tensor<L> = LinComb<Word<L>>;

impl<L> Default for Word<L> {
    fn default() -> Self {
        Word(Vec::new())
    }
}

impl<L: Ord> Ord for Word<L> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<L: Ord> PartialOrd for Word<L> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<L: fmt::Display> fmt::Display for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl<L: fmt::Display> fmt::Debug for Word<L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<L> From<Vec<L>> for Word<L> {
    fn from(v: Vec<L>) -> Self {
        Word(v)
    }
}

impl<L: Clone> Word<L> {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: L) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[L] {
        &self.0
    }

    /// Subword on the given sorted positions.
    pub fn select(&self, positions: &[usize]) -> Word<L> {
        Word(positions.iter().map(|&i| self.0[i].clone()).collect())
    }
}

pub fn concat<L: Clone>(x: &Word<L>, y: &Word<L>) -> Word<L> {
    let mut v = Vec::with_capacity(x.0.len() + y.0.len());
    v.extend_from_slice(&x.0);
    v.extend_from_slice(&y.0);
    Word(v)
}

/// Concatenation product extended bilinearly.
pub fn concat_lin<L: Clone + Ord>(a: &Tensor<L>, b: &Tensor<L>) -> Tensor<L> {
    a.bilinear(b, |x, y| LinComb::basis(concat(x, y)))
}

/// The counit: the coefficient of the empty word.
pub fn counit<L: Clone + Ord>(x: &Word<L>) -> i64 {
    i64::from(x.is_empty())
}

/// Iterated coshuffle into `k` tensor factors: one term per distribution of
/// letter positions over `k` possibly empty blocks, each block keeping the
/// relative order of its letters.
pub fn coshuffle<L: Clone + Ord>(x: &Word<L>, k: usize) -> LinComb<Vec<Word<L>>> {
    let positions: Vec<usize> = (0..x.len()).collect();
    ordered_partitions_with_empty(&positions, k)
        .into_iter()
        .map(|p| {
            let parts = p.blocks.iter().map(|b| x.select(b)).collect();
            (parts, crate::kernel::coeff(1))
        })
        .collect()
}

/// The coshuffle coproduct `Δ_⧢` (letters primitive).
pub fn coproduct<L: Clone + Ord>(x: &Word<L>) -> LinComb<(Word<L>, Word<L>)> {
    let n = x.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << n) {
        let (mut l, mut r) = (Vec::new(), Vec::new());
        for (i, letter) in x.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                l.push(letter.clone());
            } else {
                r.push(letter.clone());
            }
        }
        out.add_term((Word(l), Word(r)), crate::kernel::coeff(1));
    }
    out
}

/// The antipode of the tensor algebra: `S(x₁⋯x_m) = (-1)^m x_m⋯x₁`.
pub fn antipode_t<L: Clone + Ord>(x: &Word<L>) -> Tensor<L> {
    let mut v = x.0.clone();
    v.reverse();
    LinComb::term(Word(v), sign(x.len()))
}

/// Single-letter words from a combination of letters.
pub fn letters_as_words<L: Clone + Ord>(a: &LinComb<L>) -> Tensor<L> {
    a.map_basis(|l| Word::letter(l.clone()))
}

/// The word product `a₁ a₂ ⋯ a_k` of combinations of letters.
pub fn product_of_letters<L: Clone + Ord>(factors: &[LinComb<L>]) -> Tensor<L> {
    let mut acc = LinComb::basis(Word::unit());
    for f in factors {
        acc = acc.bilinear(f, |w: &Word<L>, l: &L| {
            let mut v = w.0.clone();
            v.push(l.clone());
            LinComb::basis(Word(v))
        });
    }
    acc
}
