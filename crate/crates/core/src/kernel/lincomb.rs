//! Finitely supported linear combinations with exact rational coefficients.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact coefficient field.
pub type Coefficient = BigRational;

/// Builds an integer coefficient.
pub fn coeff(n: i64) -> Coefficient {
    BigRational::from_integer(BigInt::from(n))
}

/// Formats a coefficient as `p` or `p/q`.
pub fn format_coefficient(c: &Coefficient) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// A finitely supported map from basis elements to nonzero rationals.
///
/// Keys are kept in their `Ord` order, so iteration and printing are
/// deterministic. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coefficient>,
}

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis element `b` with coefficient one.
    pub fn basis(b: B) -> Self {
        Self::term(b, Coefficient::one())
    }

    pub fn term(b: B, c: Coefficient) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis elements in the support.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, b: &B) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_else(Coefficient::zero)
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Coefficient> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, B, Coefficient> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, b: B, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &LinComb<B>, c: &Coefficient) {
        if c.is_zero() {
            return;
        }
        for (b, x) in other.iter() {
            self.add_term(b.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(b, x)| (b.clone(), x * c)).collect(),
        }
    }

    /// Linear extension of `f` from basis elements.
    pub fn extend<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Linear extension of a basis relabelling.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in self.iter() {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Bilinear extension of `f` from pairs of basis elements.
    pub fn bilinear<A: Ord + Clone, C: Ord + Clone>(
        &self,
        other: &LinComb<A>,
        mut f: impl FnMut(&B, &A) -> LinComb<C>,
    ) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (a, x) in self.iter() {
            for (b, y) in other.iter() {
                out.add_scaled(&f(a, b), &(x * y));
            }
        }
        out
    }

    /// Sum of absolute values of the coefficients.
    pub fn abs_sum(&self) -> Coefficient {
        self.terms
            .values()
            .fold(Coefficient::zero(), |acc, c| acc + c.abs())
    }

    /// Sum of the coefficients.
    pub fn coefficient_sum(&self) -> Coefficient {
        self.terms
            .values()
            .fold(Coefficient::zero(), |acc, c| acc + c)
    }

    /// `Some(sign)` when every coefficient has the same sign.
    pub fn uniform_sign(&self) -> Option<i8> {
        let mut sign = None;
        for c in self.terms.values() {
            let s = if c.is_positive() { 1 } else { -1 };
            match sign {
                None => sign = Some(s),
                Some(t) if t != s => return None,
                _ => {}
            }
        }
        sign
    }

    pub fn into_inner(self) -> BTreeMap<B, Coefficient> {
        self.terms
    }
}

impl<B: Ord + Clone> FromIterator<(B, Coefficient)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Coefficient)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Coefficient);
    type IntoIter = btree_map::Iter<'a, B, Coefficient>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + Clone> AddAssign<&LinComb<B>> for LinComb<B> {
    fn add_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl<B: Ord + Clone> SubAssign<&LinComb<B>> for LinComb<B> {
    fn sub_assign(&mut self, rhs: &LinComb<B>) {
        for (b, c) in rhs.iter() {
            self.add_term(b.clone(), -c);
        }
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;

    fn add(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;

    fn sub(self, rhs: &LinComb<B>) -> LinComb<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Ord + Clone> Neg for &LinComb<B> {
    type Output = LinComb<B>;

    fn neg(self) -> LinComb<B> {
        LinComb {
            terms: self.terms.iter().map(|(b, c)| (b.clone(), -c)).collect(),
        }
    }
}

impl<B: Ord + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{}*", format_coefficient(&abs))?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(b, c)| (b, format_coefficient(c))))
            .finish()
    }
}
