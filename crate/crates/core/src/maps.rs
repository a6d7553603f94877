//! The K-map `K: T(V)_⊳ → T(V)`, its inverse, and the closed inverse
//! of the Oudom-Guin isomorphism in the free case.

use crate::kernel::{max_ordered_set_partitions, permutations, sign, Coefficient, LinComb};
use crate::magma::Magma;
use crate::posthopf::{product_of_letters, PostHopf, Tensor, Word};

/// An expansion together with its term count, the sum of the absolute
/// values of its coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapResult<L: Ord + std::fmt::Display> {
    pub value: Tensor<L>,
    pub term_count: Coefficient,
}

/// Collapses a combination of single-letter words into a combination of
/// letters.
fn single_letters<L: Clone + Ord>(t: &Tensor<L>) -> LinComb<L> {
    t.iter()
        .map(|(w, c)| {
            assert_eq!(
                w.len(),
                1,
                "expected single letters, got {} letters",
                w.len()
            );
            (w.0[0].clone(), c.clone())
        })
        .collect()
}

/// `Σ_π (±) f(B₁)⋯f(B_k)` over set partitions ordered by block maximum.
fn partition_sum<L: Clone + Ord>(
    n: usize,
    signed: bool,
    mut factor: impl FnMut(&[usize]) -> LinComb<L>,
) -> Tensor<L> {
    if n == 0 {
        return LinComb::basis(Word::unit());
    }
    let mut out = LinComb::zero();
    for pi in max_ordered_set_partitions(n) {
        let factors: Vec<LinComb<L>> = pi.iter().map(|b| factor(b)).collect();
        let term = product_of_letters(&factors);
        if signed {
            out.add_scaled(&term, &sign(n - pi.len()));
        } else {
            out += &term;
        }
    }
    out
}

impl<M: Magma> PostHopf<M> {
    /// `K(x₁⋯x_n) = x₁ K(x₂⋯x_n) - Σ_{i≥2} K(x₂⋯(x₁ ⊳ x_i)⋯x_n)`.
    pub fn k_map_recursive(&self, x: &Word<M::Letter>) -> Tensor<M::Letter> {
        if x.len() <= 1 {
            return LinComb::basis(x.clone());
        }
        let head = &x.0[0];
        let rest = Word(x.0[1..].to_vec());
        let mut out = self.k_map_recursive(&rest).map_basis(|w| {
            let mut v = Vec::with_capacity(w.len() + 1);
            v.push(head.clone());
            v.extend(w.0.iter().cloned());
            Word(v)
        });
        for i in 0..rest.len() {
            for (z, c) in &self.magma().product(head, &rest.0[i]) {
                let mut w = rest.clone();
                w.0[i] = z.clone();
                out.add_scaled(&self.k_map_recursive(&w), &-c);
            }
        }
        out
    }

    /// `K(x₁⋯x_n) = Σ_π (-1)^{n-|π|} x^⧐_{B₁}⋯x^⧐_{B_k}`, with
    /// `x^⧐_I = x_{i₁}⋯x_{i_{r-1}} ⧐ x_{i_r}`.
    pub fn k_map_closed(&self, x: &Word<M::Letter>) -> Tensor<M::Letter> {
        partition_sum(x.len(), true, |b| {
            let (last, init) = b.split_last().expect("blocks are nonempty");
            self.btr_on_letter(&x.select(init).0, &x.0[*last])
        })
    }

    pub fn k_map_lin(&self, a: &Tensor<M::Letter>) -> Tensor<M::Letter> {
        a.extend(|w| self.k_map_closed(w))
    }

    /// `K⁻¹(x₁⋯x_n) = x₁ *_⊳ ⋯ *_⊳ x_n = Σ_π x^⊳_{B₁}⋯x^⊳_{B_k}`, with
    /// `x^⊳_I = x_{i₁} ⊳ (x_{i₂} ⊳ ⋯ (x_{i_{r-1}} ⊳ x_{i_r}))`.
    pub fn k_map_inverse(&self, x: &Word<M::Letter>) -> Tensor<M::Letter> {
        partition_sum(x.len(), false, |b| {
            let (last, init) = b.split_last().expect("blocks are nonempty");
            let mut acc = LinComb::basis(x.0[*last].clone());
            for &i in init.iter().rev() {
                acc = self.letter_product(&LinComb::basis(x.0[i].clone()), &acc);
            }
            acc
        })
    }

    pub fn k_map_inverse_lin(&self, a: &Tensor<M::Letter>) -> Tensor<M::Letter> {
        a.extend(|w| self.k_map_inverse(w))
    }

    /// `[x_I] = Σ_{w ∈ S_{r-1}} [x_{i₁},…,x_{i_{r-1}}; x_{i_r}]_w`.
    pub fn nested_sum(&self, letters: &[M::Letter]) -> LinComb<M::Letter> {
        let (last, init) = letters.split_last().expect("nonempty block");
        let y = Word::letter(last.clone());
        let mut out = LinComb::zero();
        for w in permutations(init.len()) {
            out += &single_letters(&self.bracket_term(init, &w, &y));
        }
        out
    }

    /// `φ⁻¹(x₁⋯x_n) = Σ_π (-1)^{n-|π|} [x_{B₁}]⋯[x_{B_k}]`.
    pub fn og_inverse(&self, x: &Word<M::Letter>) -> MapResult<M::Letter> {
        let value = partition_sum(x.len(), true, |b| self.nested_sum(&x.select(b).0));
        let term_count = value.abs_sum();
        MapResult { value, term_count }
    }
}
