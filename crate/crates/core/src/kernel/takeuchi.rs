//! Takeuchi's universal antipode for graded (or coradically filtered)
//! connected bialgebras, used throughout as an independent oracle.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{One, Signed, Zero};

use super::{Coefficient, KernelError, LinComb};

/// A connected bialgebra presented on a basis.
///
/// The degree-zero part must be spanned by [`unit`](Self::unit). The counit
/// is the coefficient of the unit.
pub trait GradedBialgebra {
    type Key: Clone + Ord + Hash + Debug;

    fn unit(&self) -> Self::Key;

    fn degree(&self, key: &Self::Key) -> usize;

    fn product(&self, a: &Self::Key, b: &Self::Key) -> LinComb<Self::Key>;

    fn coproduct(&self, a: &Self::Key) -> LinComb<(Self::Key, Self::Key)>;

    /// When true the product may lower degree (a filtered rather than graded
    /// algebra); the coproduct must still be degree-additive, which is all
    /// the Takeuchi series needs to terminate.
    fn filtered(&self) -> bool {
        false
    }

    fn counit(&self, a: &Self::Key) -> Coefficient {
        if *a == self.unit() {
            Coefficient::one()
        } else {
            Coefficient::zero()
        }
    }
}

/// Bilinear product of two elements.
pub fn multiply<C: GradedBialgebra>(
    closure: &C,
    a: &LinComb<C::Key>,
    b: &LinComb<C::Key>,
) -> LinComb<C::Key> {
    a.bilinear(b, |x, y| closure.product(x, y))
}

/// The alternating series `Σ (-1)^i p^{*i}(x)` split by `i`.
#[derive(Clone, Debug)]
pub struct TakeuchiExpansion<K: Ord> {
    /// `(-1)^i p^{*i}(x)` for `i = 0, 1, ..`.
    pub contributions: Vec<LinComb<K>>,
    pub value: LinComb<K>,
}

impl<K: Ord + Clone> TakeuchiExpansion<K> {
    pub fn stats(&self) -> ExpansionStats {
        ExpansionStats::from_parts(&self.contributions, &self.value)
    }
}

/// Bookkeeping of how an expansion collapses into its final value.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExpansionStats {
    /// Total support size over all summands before collection.
    pub generated: usize,
    /// Support size of the collected result.
    pub surviving: usize,
    /// Monomials that receive contributions of both signs.
    pub sign_mixed: usize,
}

impl ExpansionStats {
    pub fn from_parts<K: Ord + Clone>(parts: &[LinComb<K>], total: &LinComb<K>) -> Self {
        let mut signs: BTreeMap<&K, (bool, bool)> = BTreeMap::new();
        let mut generated = 0;
        for part in parts {
            generated += part.len();
            for (k, c) in part {
                let e = signs.entry(k).or_default();
                if c.is_positive() {
                    e.0 = true;
                } else {
                    e.1 = true;
                }
            }
        }
        ExpansionStats {
            generated,
            surviving: total.len(),
            sign_mixed: signs.values().filter(|(p, n)| *p && *n).count(),
        }
    }
}

type Split<K> = LinComb<(K, K)>;

struct Series<'c, C: GradedBialgebra> {
    closure: &'c C,
    unit: C::Key,
    memo: HashMap<(C::Key, usize), LinComb<C::Key>>,
}

impl<C: GradedBialgebra> Series<'_, C> {
    fn checked_product(&self, a: &C::Key, b: &C::Key) -> Result<LinComb<C::Key>, KernelError> {
        let out = self.closure.product(a, b);
        let expected = self.closure.degree(a) + self.closure.degree(b);
        for (t, _) in &out {
            let d = self.closure.degree(t);
            let ok = if self.closure.filtered() {
                d <= expected
            } else {
                d == expected
            };
            if !ok {
                return Err(KernelError::MalformedClosure(format!(
                    "product {a:?} * {b:?} has a term {t:?} of degree {d}, expected {expected}"
                )));
            }
        }
        Ok(out)
    }

    fn checked_coproduct(&self, a: &C::Key) -> Result<Split<C::Key>, KernelError> {
        let out = self.closure.coproduct(a);
        let expected = self.closure.degree(a);
        for ((l, r), _) in &out {
            if self.closure.degree(l) + self.closure.degree(r) != expected {
                return Err(KernelError::MalformedClosure(format!(
                    "coproduct of {a:?} has a term {l:?} (x) {r:?} of the wrong degree"
                )));
            }
        }
        Ok(out)
    }

    /// `p^{*i}(key)` with `p = id - u ε`.
    fn power(&mut self, key: &C::Key, i: usize) -> Result<LinComb<C::Key>, KernelError> {
        if i == 0 {
            return Ok(LinComb::term(self.unit.clone(), self.closure.counit(key)));
        }
        if *key == self.unit {
            return Ok(LinComb::zero());
        }
        if i == 1 {
            return Ok(LinComb::basis(key.clone()));
        }
        // p kills degree 0, so i factors need degree at least i
        if i > self.closure.degree(key) {
            return Ok(LinComb::zero());
        }
        if let Some(v) = self.memo.get(&(key.clone(), i)) {
            return Ok(v.clone());
        }
        let mut out = LinComb::zero();
        for ((left, right), c) in &self.checked_coproduct(key)? {
            if *left == self.unit {
                continue;
            }
            let rest = self.power(right, i - 1)?;
            for (r, d) in &rest {
                out.add_scaled(&self.checked_product(left, r)?, &(c * d));
            }
        }
        self.memo.insert((key.clone(), i), out.clone());
        Ok(out)
    }
}

/// Takeuchi's series for the antipode, with its per-order summands.
///
/// The series is truncated at the largest degree in the support of `x`,
/// beyond which every term vanishes by connectedness.
pub fn takeuchi_expansion<C: GradedBialgebra>(
    closure: &C,
    x: &LinComb<C::Key>,
) -> Result<TakeuchiExpansion<C::Key>, KernelError> {
    let mut series = Series {
        closure,
        unit: closure.unit(),
        memo: HashMap::new(),
    };
    if closure.degree(&series.unit) != 0 {
        return Err(KernelError::MalformedClosure(
            "the unit must have degree zero".into(),
        ));
    }
    let top = x.keys().map(|k| closure.degree(k)).max().unwrap_or(0);
    let mut contributions = Vec::with_capacity(top + 1);
    let mut value = LinComb::zero();
    for i in 0..=top {
        let sign = if i % 2 == 0 {
            Coefficient::one()
        } else {
            -Coefficient::one()
        };
        let mut part = LinComb::zero();
        for (k, c) in x {
            part.add_scaled(&series.power(k, i)?, &(c * &sign));
        }
        value += &part;
        contributions.push(part);
    }
    Ok(TakeuchiExpansion {
        contributions,
        value,
    })
}

/// `S(x) = Σ_{i≥0} (-1)^i p^{*i}(x)`.
pub fn takeuchi_antipode<C: GradedBialgebra>(
    closure: &C,
    x: &LinComb<C::Key>,
) -> Result<LinComb<C::Key>, KernelError> {
    takeuchi_expansion(closure, x).map(|e| e.value)
}

/// Checks `m(S ⊗ id)Δ(key) = ε(key)1 = m(id ⊗ S)Δ(key)` for a candidate
/// antipode `antipode`.
pub fn satisfies_antipode_axiom<C: GradedBialgebra>(
    closure: &C,
    key: &C::Key,
    mut antipode: impl FnMut(&C::Key) -> LinComb<C::Key>,
) -> bool {
    let expected = LinComb::term(closure.unit(), closure.counit(key));
    let mut left = LinComb::zero();
    let mut right = LinComb::zero();
    for ((a, b), c) in &closure.coproduct(key) {
        let sa = antipode(a);
        let sb = antipode(b);
        left.add_scaled(&multiply(closure, &sa, &LinComb::basis(b.clone())), c);
        right.add_scaled(&multiply(closure, &LinComb::basis(a.clone()), &sb), c);
    }
    left == expected && right == expected
}
