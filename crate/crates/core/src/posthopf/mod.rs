//! The post-Hopf algebra `(T(V), ·, Δ_⧢, S, ⊳)` freely generated by a magma
//! `(V, ⊳)`, its sub-adjacent Hopf algebra `(T(V), *_⊳, Δ_⧢, S_⊳)` and the
//! twisted product `X ⧐ Y = (-1)^{|X|} S_⊳(X) ⊳ Y`.
//!
//! Every operation is bilinear and is defined here on words; the `*_lin`
//! variants extend to [`Tensor`]s.

mod antipode;
mod twisted;
mod word;

use std::collections::HashMap;
use std::sync::Mutex;

pub use word::{
    antipode_t, concat, concat_lin, coproduct, coshuffle, counit, letters_as_words,
    product_of_letters, Tensor, Word,
};

use crate::kernel::{coeff, ordered_partitions_with_empty, GradedBialgebra, LinComb};
use crate::magma::Magma;

type LetterMemo<L> = Mutex<HashMap<(Vec<L>, L), LinComb<L>>>;

/// The free post-Hopf algebra over a magma, with internal memo tables.
///
/// The memo tables are guarded by mutexes and never held across recursive
/// calls, so a shared `PostHopf` can be used from several threads.
pub struct PostHopf<M: Magma> {
    magma: M,
    on_letter: LetterMemo<M::Letter>,
    btr_letter: LetterMemo<M::Letter>,
}

impl<M: Magma> PostHopf<M> {
    pub fn new(magma: M) -> Self {
        PostHopf {
            magma,
            on_letter: Mutex::new(HashMap::new()),
            btr_letter: Mutex::new(HashMap::new()),
        }
    }

    pub fn magma(&self) -> &M {
        &self.magma
    }

    /// Sum of the letter gradings.
    pub fn weight(&self, x: &Word<M::Letter>) -> usize {
        x.0.iter().map(|l| self.magma.grading(l)).sum()
    }

    /// Magma product of two combinations of letters.
    pub fn letter_product(
        &self,
        a: &LinComb<M::Letter>,
        b: &LinComb<M::Letter>,
    ) -> LinComb<M::Letter> {
        a.bilinear(b, |x, y| self.magma.product(x, y))
    }

    /// `X ⊳ a` for a word `X` and a letter `a`; the result lies in `V`.
    ///
    /// `1 ⊳ a = a`, `x ⊳ a` is the magma product and
    /// `x x₁⋯x_n ⊳ a = x ⊳ (x₁⋯x_n ⊳ a) - Σ_i x₁⋯(x ⊳ x_i)⋯x_n ⊳ a`.
    pub fn word_on_letter(&self, x: &[M::Letter], a: &M::Letter) -> LinComb<M::Letter> {
        match x.len() {
            0 => return LinComb::basis(a.clone()),
            1 => return self.magma.product(&x[0], a),
            _ => {}
        }
        let key = (x.to_vec(), a.clone());
        if let Some(v) = self.on_letter.lock().expect("memo lock").get(&key) {
            return v.clone();
        }
        let head = &x[0];
        let rest = &x[1..];
        let inner = self.word_on_letter(rest, a);
        let mut out = inner.extend(|b| self.magma.product(head, b));
        for i in 0..rest.len() {
            for (z, c) in &self.magma.product(head, &rest[i]) {
                let mut w = rest.to_vec();
                w[i] = z.clone();
                out.add_scaled(&self.word_on_letter(&w, a), &-c);
            }
        }
        self.on_letter
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// The extended product `X ⊳ Y`.
    ///
    /// `X ⊳ 1 = ε(X)1` and `X ⊳ a₁⋯a_m = Σ (X₁ ⊳ a₁)⋯(X_m ⊳ a_m)` over the
    /// `m`-fold coshuffle of `X`.
    pub fn triangle(&self, x: &Word<M::Letter>, y: &Word<M::Letter>) -> Tensor<M::Letter> {
        if y.is_empty() {
            return LinComb::term(Word::unit(), coeff(counit(x)));
        }
        if x.is_empty() {
            return LinComb::basis(y.clone());
        }
        if x.len() == 1 {
            return self.letter_on_word(&x.0[0], y);
        }
        let positions: Vec<usize> = (0..x.len()).collect();
        let mut out = LinComb::zero();
        for p in ordered_partitions_with_empty(&positions, y.len()) {
            let factors: Vec<LinComb<M::Letter>> = p
                .blocks
                .iter()
                .zip(&y.0)
                .map(|(b, a)| self.word_on_letter(&x.select(b).0, a))
                .collect();
            out += &product_of_letters(&factors);
        }
        out
    }

    /// `x ⊳ a₁⋯a_m = Σ_i a₁⋯(x ⊳ a_i)⋯a_m` for a letter `x`.
    pub fn letter_on_word(&self, x: &M::Letter, y: &Word<M::Letter>) -> Tensor<M::Letter> {
        let mut out = LinComb::zero();
        for i in 0..y.len() {
            for (z, c) in &self.magma.product(x, &y.0[i]) {
                let mut w = y.0.clone();
                w[i] = z.clone();
                out.add_term(Word(w), c.clone());
            }
        }
        out
    }

    pub fn triangle_lin(&self, a: &Tensor<M::Letter>, b: &Tensor<M::Letter>) -> Tensor<M::Letter> {
        a.bilinear(b, |x, y| self.triangle(x, y))
    }

    /// The sub-adjacent product `X *_⊳ Y = Σ X₁ · (X₂ ⊳ Y)`.
    pub fn star(&self, x: &Word<M::Letter>, y: &Word<M::Letter>) -> Tensor<M::Letter> {
        let mut out = LinComb::zero();
        for ((x1, x2), c) in &coproduct(x) {
            let right = self.triangle(x2, y);
            for (w, d) in &right {
                out.add_term(concat(x1, w), c * d);
            }
        }
        out
    }

    pub fn star_lin(&self, a: &Tensor<M::Letter>, b: &Tensor<M::Letter>) -> Tensor<M::Letter> {
        a.bilinear(b, |x, y| self.star(x, y))
    }

    /// The sub-adjacent Hopf algebra as a bialgebra closure for Takeuchi.
    pub fn sub_adjacent(&self) -> SubAdjacent<'_, M> {
        SubAdjacent { post: self }
    }
}

/// `(T(V), *_⊳, Δ_⧢)` graded by letter weight.
///
/// For magmas whose product is not weight-additive (structure-constant
/// post-Lie algebras) the closure is filtered by word length instead.
pub struct SubAdjacent<'a, M: Magma> {
    post: &'a PostHopf<M>,
}

impl<M: Magma> GradedBialgebra for SubAdjacent<'_, M> {
    type Key = Word<M::Letter>;

    fn unit(&self) -> Word<M::Letter> {
        Word::unit()
    }

    fn degree(&self, key: &Word<M::Letter>) -> usize {
        if self.post.magma.is_graded() {
            self.post.weight(key)
        } else {
            key.len()
        }
    }

    fn product(&self, a: &Word<M::Letter>, b: &Word<M::Letter>) -> Tensor<M::Letter> {
        self.post.star(a, b)
    }

    fn coproduct(&self, a: &Word<M::Letter>) -> LinComb<(Word<M::Letter>, Word<M::Letter>)> {
        coproduct(a)
    }

    fn filtered(&self) -> bool {
        !self.post.magma.is_graded()
    }
}
