//! The twisted product `⧐`, computed by its recursion and by the
//! permutation (slot-merge) formula.

use super::{PostHopf, Tensor, Word};
use crate::kernel::{permutations, LinComb};
use crate::magma::Magma;

impl<M: Magma> PostHopf<M> {
    /// `x ⊳ Y` for a combination of letters `x`, extended linearly in `Y`.
    fn letters_on_tensor(
        &self,
        x: &LinComb<M::Letter>,
        y: &Tensor<M::Letter>,
    ) -> Tensor<M::Letter> {
        x.bilinear(y, |a, w| self.letter_on_word(a, w))
    }

    /// `X ⧐ Y` by the recursion
    /// `x₁⋯x_m ⧐ Y = x₂⋯x_m ⧐ (x₁ ⊳ Y) + Σ_{i≥2} x₂⋯(x₁ ⊳ x_i)⋯x_m ⧐ Y`
    /// with `1 ⧐ Y = Y` and `x ⧐ Y = x ⊳ Y`.
    pub fn btr(&self, x: &Word<M::Letter>, y: &Word<M::Letter>) -> Tensor<M::Letter> {
        self.btr_tensor(&x.0, &LinComb::basis(y.clone()))
    }

    pub fn btr_lin(&self, a: &Tensor<M::Letter>, b: &Tensor<M::Letter>) -> Tensor<M::Letter> {
        let mut out = LinComb::zero();
        for (x, c) in a {
            out.add_scaled(&self.btr_tensor(&x.0, b), c);
        }
        out
    }

    fn btr_tensor(&self, x: &[M::Letter], y: &Tensor<M::Letter>) -> Tensor<M::Letter> {
        match x.len() {
            0 => return y.clone(),
            1 => return self.letters_on_tensor(&LinComb::basis(x[0].clone()), y),
            _ => {}
        }
        let head = &x[0];
        let rest = &x[1..];
        let moved = self.letters_on_tensor(&LinComb::basis(head.clone()), y);
        let mut out = self.btr_tensor(rest, &moved);
        for i in 0..rest.len() {
            for (z, c) in &self.magma.product(head, &rest[i]) {
                let mut w = rest.to_vec();
                w[i] = z.clone();
                out.add_scaled(&self.btr_tensor(&w, y), c);
            }
        }
        out
    }

    /// `X ⧐ a` for a letter `a`, memoized; the result lies in `V`.
    pub fn btr_on_letter(&self, x: &[M::Letter], a: &M::Letter) -> LinComb<M::Letter> {
        match x.len() {
            0 => return LinComb::basis(a.clone()),
            1 => return self.magma.product(&x[0], a),
            _ => {}
        }
        let key = (x.to_vec(), a.clone());
        if let Some(v) = self.btr_letter.lock().expect("memo lock").get(&key) {
            return v.clone();
        }
        let head = &x[0];
        let rest = &x[1..];
        let mut out = LinComb::zero();
        for (b, c) in &self.magma.product(head, a) {
            out.add_scaled(&self.btr_on_letter(rest, b), c);
        }
        for i in 0..rest.len() {
            for (z, c) in &self.magma.product(head, &rest[i]) {
                let mut w = rest.to_vec();
                w[i] = z.clone();
                out.add_scaled(&self.btr_on_letter(&w, a), c);
            }
        }
        self.btr_letter
            .lock()
            .expect("memo lock")
            .insert(key, out.clone());
        out
    }

    /// The nested element `[x₁,…,x_m; Y]_w` for a permutation `w` of
    /// `0..m` in one-line notation.
    ///
    /// Start from `x_{w(1)} ⋯ x_{w(m)} Y`. For `i = 1..m` in turn, the slot
    /// that currently holds `x_i` is merged into its right neighbour with
    /// `⊳`: the magma product when the neighbour is a letter, the derivation
    /// action when it is the slot holding `Y`.
    pub fn bracket_term(
        &self,
        letters: &[M::Letter],
        w: &[usize],
        y: &Word<M::Letter>,
    ) -> Tensor<M::Letter> {
        let m = letters.len();
        assert_eq!(w.len(), m, "permutation length must match the letters");

        enum Value<L: Ord> {
            Letter(LinComb<L>),
            Tail(LinComb<Word<L>>),
        }
        struct Slot<L: Ord> {
            members: Vec<usize>,
            value: Value<L>,
        }

        let mut slots: Vec<Slot<M::Letter>> = w
            .iter()
            .map(|&i| Slot {
                members: vec![i],
                value: Value::Letter(LinComb::basis(letters[i].clone())),
            })
            .collect();
        slots.push(Slot {
            members: Vec::new(),
            value: Value::Tail(LinComb::basis(y.clone())),
        });

        for i in 0..m {
            let p = slots
                .iter()
                .position(|s| s.members.contains(&i))
                .expect("every index lives in some slot");
            let left = slots.remove(p);
            let Value::Letter(a) = left.value else {
                unreachable!("the slot of an unprocessed index is never the tail");
            };
            let right = &mut slots[p];
            right.members.extend(left.members);
            right.value = match &right.value {
                Value::Letter(b) => Value::Letter(self.letter_product(&a, b)),
                Value::Tail(t) => Value::Tail(self.letters_on_tensor(&a, t)),
            };
        }
        debug_assert_eq!(slots.len(), 1);
        match slots.pop().map(|s| s.value) {
            Some(Value::Tail(t)) => t,
            _ => unreachable!("all letters merge into the tail"),
        }
    }

    /// `x₁⋯x_m ⧐ Y = Σ_{w ∈ S_m} [x₁,…,x_m; Y]_w`.
    pub fn btr_combinatorial(
        &self,
        letters: &[M::Letter],
        y: &Word<M::Letter>,
    ) -> Tensor<M::Letter> {
        let mut out = LinComb::zero();
        for w in permutations(letters.len()) {
            out += &self.bracket_term(letters, &w, y);
        }
        out
    }
}
