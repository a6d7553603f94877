//! Magma algebras `(V, ⊳)`: the input data of the free post-Hopf
//! construction.

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

use crate::kernel::LinComb;
use crate::trees::{graft_left, OrderedTree};

/// A magma algebra on a basis of letters.
///
/// `grading` must be positive on letters. For the free instances the product
/// is additive in it; for structure-constant magmas it need not be.
pub trait Magma {
    type Letter: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync;

    fn product(&self, a: &Self::Letter, b: &Self::Letter) -> LinComb<Self::Letter>;

    fn grading(&self, a: &Self::Letter) -> usize;

    /// Whether the product is additive in [`grading`](Self::grading).
    fn is_graded(&self) -> bool {
        true
    }
}

/// Ordered trees under left grafting: the free magma on one generator.
#[derive(Clone, Copy, Debug, Default)]
pub struct TreeMagma;

/// `τ ⊳ ω = τ ↷ ω`.
pub fn tree_magma_product(a: &OrderedTree, b: &OrderedTree) -> LinComb<OrderedTree> {
    graft_left(a, b)
}

impl Magma for TreeMagma {
    type Letter = OrderedTree;

    fn product(&self, a: &OrderedTree, b: &OrderedTree) -> LinComb<OrderedTree> {
        tree_magma_product(a, b)
    }

    fn grading(&self, a: &OrderedTree) -> usize {
        a.node_count()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {position}: {message}")]
pub struct TermParseError {
    pub position: usize,
    pub message: String,
}

/// An element of the free magma on named generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum MagmaTerm {
    Leaf(Arc<str>),
    Node(Arc<MagmaTerm>, Arc<MagmaTerm>),
}

impl MagmaTerm {
    pub fn leaf(name: &str) -> Self {
        MagmaTerm::Leaf(name.into())
    }

    pub fn node(left: MagmaTerm, right: MagmaTerm) -> Self {
        MagmaTerm::Node(Arc::new(left), Arc::new(right))
    }

    pub fn leaves(&self) -> usize {
        match self {
            MagmaTerm::Leaf(_) => 1,
            MagmaTerm::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    fn cmp_structure(&self, other: &Self) -> Ordering {
        match (self, other) {
            (MagmaTerm::Leaf(a), MagmaTerm::Leaf(b)) => {
                a.len().cmp(&b.len()).then_with(|| a.cmp(b))
            }
            (MagmaTerm::Leaf(_), MagmaTerm::Node(..)) => Ordering::Less,
            (MagmaTerm::Node(..), MagmaTerm::Leaf(_)) => Ordering::Greater,
            (MagmaTerm::Node(a, b), MagmaTerm::Node(c, d)) => a.cmp(c).then_with(|| b.cmp(d)),
        }
    }
}

/// Ordered by number of leaves, then structurally (leaves before nodes,
/// generator names by length then bytes so that `x2 < x10`).
impl Ord for MagmaTerm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.leaves()
            .cmp(&other.leaves())
            .then_with(|| self.cmp_structure(other))
    }
}

impl PartialOrd for MagmaTerm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MagmaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MagmaTerm::Leaf(s) => f.write_str(s),
            MagmaTerm::Node(l, r) => write!(f, "({l}>{r})"),
        }
    }
}

impl fmt::Debug for MagmaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct TermParser<'a> {
    bytes: &'a [u8],
    text: &'a str,
    pos: usize,
}

impl TermParser<'_> {
    fn err(&self, message: impl Into<String>) -> TermParseError {
        TermParseError {
            position: self.pos,
            message: message.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<MagmaTerm, TermParseError> {
        self.skip_ws();
        match self.bytes.get(self.pos) {
            None => Err(self.err("expected a term")),
            Some(b'(') => {
                self.pos += 1;
                let left = self.term()?;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b'>') {
                    return Err(self.err("expected '>'"));
                }
                self.pos += 1;
                let right = self.term()?;
                self.skip_ws();
                if self.bytes.get(self.pos) != Some(&b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(MagmaTerm::node(left, right))
            }
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => {
                let start = self.pos;
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric()
                        || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Ok(MagmaTerm::leaf(&self.text[start..self.pos]))
            }
            Some(c) => Err(self.err(format!("unexpected character {:?}", *c as char))),
        }
    }
}

/// Parses `term := symbol | "(" term ">" term ")"`.
pub fn parse_term(text: &str) -> Result<MagmaTerm, TermParseError> {
    let mut p = TermParser {
        bytes: text.as_bytes(),
        text,
        pos: 0,
    };
    let t = p.term()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input after term"));
    }
    Ok(t)
}

/// Parses whitespace-separated terms; `1` or blank input is the empty word.
pub fn parse_term_word(text: &str) -> Result<Vec<MagmaTerm>, TermParseError> {
    if text.trim().is_empty() || text.trim() == "1" {
        return Ok(Vec::new());
    }
    let mut p = TermParser {
        bytes: text.as_bytes(),
        text,
        pos: 0,
    };
    let mut out = Vec::new();
    loop {
        p.skip_ws();
        if p.pos == text.len() {
            return Ok(out);
        }
        out.push(p.term()?);
    }
}

impl FromStr for MagmaTerm {
    type Err = TermParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_term(s)
    }
}

/// The free magma on named generators (letter mode).
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeMagma;

/// `a ⊳ b = (a>b)`, a single term.
pub fn free_magma_product(a: &MagmaTerm, b: &MagmaTerm) -> LinComb<MagmaTerm> {
    LinComb::basis(MagmaTerm::node(a.clone(), b.clone()))
}

impl Magma for FreeMagma {
    type Letter = MagmaTerm;

    fn product(&self, a: &MagmaTerm, b: &MagmaTerm) -> LinComb<MagmaTerm> {
        free_magma_product(a, b)
    }

    fn grading(&self, a: &MagmaTerm) -> usize {
        a.leaves()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::coeff;
    use crate::trees::{parse_tree, trees_with_nodes};
    use proptest::prelude::*;

    fn t(s: &str) -> OrderedTree {
        parse_tree(s).unwrap()
    }

    fn m(s: &str) -> MagmaTerm {
        parse_term(s).unwrap()
    }

    #[test]
    fn tree_products() {
        assert_eq!(
            TreeMagma.product(&t("()"), &t("()")),
            LinComb::basis(t("(())"))
        );
        assert_eq!(TreeMagma.product(&t("(())"), &t("(()()())")).len(), 4);
        let expected: LinComb<OrderedTree> = [(t("(()())"), coeff(1)), (t("((()))"), coeff(1))]
            .into_iter()
            .collect();
        assert_eq!(TreeMagma.product(&t("()"), &t("(())")), expected);
    }

    #[test]
    fn free_products() {
        assert_eq!(
            FreeMagma.product(&m("x1"), &m("x2")),
            LinComb::basis(m("(x1>x2)"))
        );
        assert_eq!(
            FreeMagma.product(&m("x2"), &m("(x1>x3)")),
            LinComb::basis(m("(x2>(x1>x3))"))
        );
        assert_eq!(
            FreeMagma.product(&m("(x1>x2)"), &m("x3")),
            LinComb::basis(m("((x1>x2)>x3)"))
        );
    }

    #[test]
    fn term_parse_errors() {
        assert!(matches!(
            parse_term("(x1 x2)"),
            Err(TermParseError { position: 4, .. })
        ));
        assert!(matches!(
            parse_term(""),
            Err(TermParseError { position: 0, .. })
        ));
        assert!(matches!(
            parse_term("(x1>x2"),
            Err(TermParseError { position: 6, .. })
        ));
        assert!(parse_term("x1 x2").is_err());
        assert_eq!(parse_term_word("x1 (x1>x2) x3").unwrap().len(), 3);
        assert_eq!(parse_term_word("1").unwrap(), vec![]);
    }

    #[test]
    fn term_order_is_natural() {
        let mut v = [m("x10"), m("(x1>x2)"), m("x2"), m("x1")];
        v.sort();
        let printed: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(printed, vec!["x1", "x2", "x10", "(x1>x2)"]);
    }

    #[test]
    fn tree_grading_is_additive() {
        for a in 1..=3 {
            for b in 1..=3 {
                for x in trees_with_nodes(a) {
                    for y in trees_with_nodes(b) {
                        for (z, _) in &TreeMagma.product(&x, &y) {
                            assert_eq!(TreeMagma.grading(z), a + b);
                        }
                    }
                }
            }
        }
    }

    fn arb_term() -> impl Strategy<Value = MagmaTerm> {
        let leaf =
            prop_oneof![Just("x1"), Just("x2"), Just("x3"), Just("y")].prop_map(MagmaTerm::leaf);
        leaf.prop_recursive(4, 16, 2, |inner| {
            (inner.clone(), inner).prop_map(|(l, r)| MagmaTerm::node(l, r))
        })
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(x in arb_term()) {
            prop_assert_eq!(parse_term(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn free_grading_is_additive(a in arb_term(), b in arb_term()) {
            for (z, _) in &FreeMagma.product(&a, &b) {
                prop_assert_eq!(FreeMagma.grading(z), a.leaves() + b.leaves());
            }
        }

        #[test]
        fn order_is_total_and_consistent(a in arb_term(), b in arb_term()) {
            prop_assert_eq!(a.cmp(&b) == Ordering::Equal, a == b);
            prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
        }
    }
}
