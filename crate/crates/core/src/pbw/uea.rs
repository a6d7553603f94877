//! `U(g)` in the PBW basis with the induced post-Hopf structure.

use std::collections::HashMap;
use std::sync::Mutex;

use super::{Basis, ValidatedPostLie, Vector};
use crate::kernel::{
    antipode_partitions, sign, takeuchi_antipode, GradedBialgebra, KernelError, LinComb,
};
use crate::posthopf::{coproduct, product_of_letters, PostHopf, Tensor, Word};

/// Which bracket the rewriting `x_j x_i → x_i x_j + [x_j, x_i]` uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketChoice {
    /// `[·,·]` of `g`, giving `U(g)`.
    Lie,
    /// `[·,·]_⊳`, giving `U(g_⊳)`.
    SubAdjacent,
}

/// Rewrites a word into sorted PBW monomials by repeatedly resolving the
/// leftmost adjacent inversion.
pub fn normal_order(
    algebra: &ValidatedPostLie,
    word: &[Basis],
    choice: BracketChoice,
) -> Tensor<Basis> {
    let Some(p) = (0..word.len().saturating_sub(1)).find(|&p| word[p] > word[p + 1]) else {
        return LinComb::basis(Word(word.to_vec()));
    };
    let mut swapped = word.to_vec();
    swapped.swap(p, p + 1);
    let mut out = normal_order(algebra, &swapped, choice);
    let bracket = match choice {
        BracketChoice::Lie => algebra.bracket(word[p], word[p + 1]).clone(),
        BracketChoice::SubAdjacent => algebra.sub_adjacent_bracket(word[p], word[p + 1]),
    };
    for (k, c) in &bracket {
        let mut shorter = word[..p].to_vec();
        shorter.push(*k);
        shorter.extend_from_slice(&word[p + 2..]);
        out.add_scaled(&normal_order(algebra, &shorter, choice), c);
    }
    out
}

type Memo = Mutex<HashMap<(Word<Basis>, Word<Basis>), Tensor<Basis>>>;

/// `U(g)` for a validated post-Lie algebra `g`, with `⊳`, `*_⊳`, `⧐` and
/// `S_⊳` computed on PBW monomials. Every result is normal-ordered.
pub struct Uea {
    algebra: ValidatedPostLie,
    tensor: PostHopf<super::StructureMagma>,
    ordered: Mutex<HashMap<Vec<Basis>, Tensor<Basis>>>,
    triangle: Memo,
}

impl Uea {
    pub fn new(algebra: ValidatedPostLie) -> Self {
        Uea {
            tensor: PostHopf::new(algebra.magma()),
            algebra,
            ordered: Mutex::new(HashMap::new()),
            triangle: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &ValidatedPostLie {
        &self.algebra
    }

    /// The free post-Hopf algebra `T(g)` over the magma `(g, ⊳)`, of which
    /// this algebra is a quotient.
    pub fn tensor_algebra(&self) -> &PostHopf<super::StructureMagma> {
        &self.tensor
    }

    pub fn normal_order(&self, word: &[Basis]) -> Tensor<Basis> {
        if let Some(v) = self.ordered.lock().expect("memo lock").get(word) {
            return v.clone();
        }
        let v = normal_order(&self.algebra, word, BracketChoice::Lie);
        self.ordered
            .lock()
            .expect("memo lock")
            .insert(word.to_vec(), v.clone());
        v
    }

    pub fn normal_order_lin(&self, a: &Tensor<Basis>) -> Tensor<Basis> {
        a.extend(|w| self.normal_order(&w.0))
    }

    /// The product of `U(g)`.
    pub fn mul(&self, a: &Tensor<Basis>, b: &Tensor<Basis>) -> Tensor<Basis> {
        a.bilinear(b, |x, y| {
            let mut w = x.0.clone();
            w.extend(y.0.iter().copied());
            self.normal_order(&w)
        })
    }

    /// `x ⊳ x₁⋯x_r = Σ x₁⋯(x ⊳ x_i)⋯x_r`, with `x ⊳ 1 = 0`.
    pub fn letter_on(&self, x: Basis, u: &Word<Basis>) -> Tensor<Basis> {
        let mut out = LinComb::zero();
        for i in 0..u.len() {
            for (z, c) in self.algebra.triangle(x, u.0[i]) {
                let mut w = u.0.clone();
                w[i] = *z;
                out.add_scaled(&self.normal_order(&w), c);
            }
        }
        out
    }

    pub fn vector_on(&self, x: &Vector, u: &Tensor<Basis>) -> Tensor<Basis> {
        x.bilinear(u, |a, w| self.letter_on(*a, w))
    }

    /// `X ⊳ u` by `1 ⊳ u = u` and
    /// `x₁X' ⊳ u = x₁ ⊳ (X' ⊳ u) - (x₁ ⊳ X') ⊳ u`.
    pub fn triangle(&self, x: &Word<Basis>, u: &Word<Basis>) -> Tensor<Basis> {
        if x.is_empty() {
            return self.normal_order(&u.0);
        }
        let key = (x.clone(), u.clone());
        if let Some(v) = self.triangle.lock().expect("memo lock").get(&key) {
            return v.clone();
        }
        let head = x.0[0];
        let rest = Word(x.0[1..].to_vec());
        let inner = self.triangle(&rest, u);
        let mut out = inner.extend(|w| self.letter_on(head, w));
        let moved = self.letter_on(head, &rest);
        for (w, c) in &moved {
            out.add_scaled(&self.triangle(w, u), &-c);
        }
        self.triangle
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    pub fn triangle_lin(&self, a: &Tensor<Basis>, b: &Tensor<Basis>) -> Tensor<Basis> {
        a.bilinear(b, |x, y| self.triangle(x, y))
    }

    /// `X *_⊳ Y = Σ X₁ (X₂ ⊳ Y)`.
    pub fn star(&self, x: &Word<Basis>, y: &Word<Basis>) -> Tensor<Basis> {
        let mut out = LinComb::zero();
        for ((x1, x2), c) in &coproduct(x) {
            let right = self.triangle(x2, y);
            out.add_scaled(&self.mul(&LinComb::basis(x1.clone()), &right), c);
        }
        out
    }

    pub fn star_lin(&self, a: &Tensor<Basis>, b: &Tensor<Basis>) -> Tensor<Basis> {
        a.bilinear(b, |x, y| self.star(x, y))
    }

    /// `X ⧐ u` for a word `X` of `T(g)` and `u ∈ U(g)`, by
    /// `x₁⋯x_m ⧐ u = x₂⋯x_m ⧐ (x₁ ⊳ u) + Σ_{i≥2} x₂⋯(x₁ ⊳ x_i)⋯x_m ⧐ u`.
    pub fn btr(&self, x: &[Basis], u: &Tensor<Basis>) -> Tensor<Basis> {
        match x.len() {
            0 => return self.normal_order_lin(u),
            1 => return self.vector_on(&Vector::basis(x[0]), u),
            _ => {}
        }
        let head = x[0];
        let rest = &x[1..];
        let mut out = self.btr(rest, &self.vector_on(&Vector::basis(head), u));
        for i in 0..rest.len() {
            for (z, c) in self.algebra.triangle(head, rest[i]) {
                let mut w = rest.to_vec();
                w[i] = *z;
                out.add_scaled(&self.btr(&w, u), c);
            }
        }
        out
    }

    /// `⧐` extended linearly in a left operand given by words of `T(g)`.
    pub fn btr_lin(&self, a: &Tensor<Basis>, u: &Tensor<Basis>) -> Tensor<Basis> {
        let mut out = LinComb::zero();
        for (x, c) in a {
            out.add_scaled(&self.btr(&x.0, u), c);
        }
        out
    }

    /// `S_⊳(x₁⋯x_m) = (-1)^m Σ_π (x_{B₁} ⧐ x_{b₁})⋯(x_{B_k} ⧐ x_{b_k})`,
    /// normal-ordered.
    pub fn sub_antipode(&self, x: &Word<Basis>) -> Tensor<Basis> {
        let m = x.len();
        let Ok(partitions) = antipode_partitions(m) else {
            return LinComb::basis(Word::unit());
        };
        let mut out = LinComb::zero();
        for p in partitions {
            let factors: Vec<Vector> = p
                .pairs()
                .map(|(block, b)| self.tensor.btr_on_letter(&x.select(block).0, &x.0[b]))
                .collect();
            out += &self.normal_order_lin(&product_of_letters(&factors));
        }
        out.scale(&sign(m))
    }

    pub fn sub_antipode_lin(&self, a: &Tensor<Basis>) -> Tensor<Basis> {
        a.extend(|w| self.sub_antipode(w))
    }

    /// The bialgebra `(U(g), *_⊳, Δ)` on PBW monomials, filtered by length.
    pub fn closure(&self) -> UeaClosure<'_> {
        UeaClosure { uea: self }
    }

    pub fn sub_antipode_takeuchi(&self, x: &Word<Basis>) -> Result<Tensor<Basis>, KernelError> {
        takeuchi_antipode(&self.closure(), &self.normal_order(&x.0))
    }

    /// `Σ S_⊳(X₁) *_⊳ X₂` and `Σ X₁ *_⊳ S_⊳(X₂)`, both of which should be
    /// `ε(X) 1`.
    pub fn antipode_axiom_sides(&self, x: &Word<Basis>) -> (Tensor<Basis>, Tensor<Basis>) {
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x1, x2), c) in &coproduct(x) {
            let one = LinComb::basis(x1.clone());
            let two = LinComb::basis(x2.clone());
            left.add_scaled(&self.star_lin(&self.sub_antipode(x1), &two), c);
            right.add_scaled(&self.star_lin(&one, &self.sub_antipode(x2)), c);
        }
        (left, right)
    }

    /// Every PBW monomial of length `1..=max_len`.
    pub fn monomials(&self, max_len: usize) -> Vec<Word<Basis>> {
        let d = self.algebra.dim();
        let mut out = Vec::new();
        let mut level: Vec<Vec<Basis>> = vec![Vec::new()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &level {
                let from = w.last().map_or(0, |b| b.0);
                for k in from..d {
                    let mut v = w.clone();
                    v.push(Basis(k));
                    next.push(v);
                }
            }
            out.extend(next.iter().cloned().map(Word));
            level = next;
        }
        out
    }

    /// Checks the antipode axiom on one monomial.
    pub fn satisfies_antipode_axiom(&self, x: &Word<Basis>) -> bool {
        let expected = if x.is_empty() {
            LinComb::basis(Word::unit())
        } else {
            LinComb::zero()
        };
        let (l, r) = self.antipode_axiom_sides(x);
        l == expected && r == expected
    }
}

/// `U(g)` with `*_⊳` and the coshuffle-induced coproduct.
pub struct UeaClosure<'a> {
    uea: &'a Uea,
}

impl GradedBialgebra for UeaClosure<'_> {
    type Key = Word<Basis>;

    fn unit(&self) -> Word<Basis> {
        Word::unit()
    }

    fn degree(&self, key: &Word<Basis>) -> usize {
        key.len()
    }

    fn product(&self, a: &Word<Basis>, b: &Word<Basis>) -> Tensor<Basis> {
        self.uea.star(a, b)
    }

    fn coproduct(&self, a: &Word<Basis>) -> LinComb<(Word<Basis>, Word<Basis>)> {
        coproduct(a)
    }

    fn filtered(&self) -> bool {
        true
    }
}
