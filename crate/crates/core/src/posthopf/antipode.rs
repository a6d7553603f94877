//! Three routes to the antipode `S_⊳` of the sub-adjacent Hopf algebra.

use super::{antipode_t, coshuffle, product_of_letters, PostHopf, Tensor, Word};
use crate::kernel::{
    antipode_partitions, sign, takeuchi_antipode, AntipodePartition, KernelError, LinComb,
};
use crate::magma::Magma;

impl<M: Magma> PostHopf<M> {
    /// The summands of the cancellation-free formula, signs included:
    /// `(-1)^m (x_{B₁} ⧐ x_{b₁})⋯(x_{B_k} ⧐ x_{b_k})` for every antipode
    /// partition of the letter positions.
    pub fn sub_antipode_terms(
        &self,
        x: &Word<M::Letter>,
    ) -> Vec<(AntipodePartition, Tensor<M::Letter>)> {
        let m = x.len();
        let Ok(partitions) = antipode_partitions(m) else {
            return Vec::new();
        };
        let s = sign(m);
        partitions
            .into_iter()
            .map(|p| {
                let factors: Vec<LinComb<M::Letter>> = p
                    .pairs()
                    .map(|(block, b)| self.btr_on_letter(&x.select(block).0, &x.0[b]))
                    .collect();
                let term = product_of_letters(&factors).scale(&s);
                (p, term)
            })
            .collect()
    }

    /// `S_⊳(x₁⋯x_m) = (-1)^m Σ_π (x_{B₁} ⧐ x_{b₁})⋯(x_{B_k} ⧐ x_{b_k})`,
    /// with `S_⊳(1) = 1`.
    pub fn sub_antipode(&self, x: &Word<M::Letter>) -> Tensor<M::Letter> {
        if x.is_empty() {
            return LinComb::basis(Word::unit());
        }
        let mut out = LinComb::zero();
        for (_, t) in self.sub_antipode_terms(x) {
            out += &t;
        }
        out
    }

    pub fn sub_antipode_lin(&self, a: &Tensor<M::Letter>) -> Tensor<M::Letter> {
        a.extend(|w| self.sub_antipode(w))
    }

    /// `S_⊳(X) = (⋯(S(X₁) ⊳ S(X₂)) ⊳ ⋯) ⊳ S(X_m)` over the `m`-fold
    /// coshuffle, `m` the number of letters of `X`.
    pub fn sub_antipode_iter(&self, x: &Word<M::Letter>) -> Tensor<M::Letter> {
        let m = x.len();
        if m == 0 {
            return LinComb::basis(Word::unit());
        }
        let mut out = LinComb::zero();
        for (parts, c) in &coshuffle(x, m) {
            let mut acc = antipode_t(&parts[0]);
            for p in &parts[1..] {
                if acc.is_zero() {
                    break;
                }
                acc = self.triangle_lin(&acc, &antipode_t(p));
            }
            out.add_scaled(&acc, c);
        }
        out
    }

    /// Takeuchi's series on `(T(V), *_⊳, Δ_⧢)`.
    pub fn sub_antipode_takeuchi(
        &self,
        x: &Word<M::Letter>,
    ) -> Result<Tensor<M::Letter>, KernelError> {
        takeuchi_antipode(&self.sub_adjacent(), &LinComb::basis(x.clone()))
    }
}
