//! Ordered (planar) rooted trees and forests.
//!
//! A tree is stored as its balanced-parenthesis code: every node is an
//! opening parenthesis followed by the codes of its children, left to right,
//! and a closing parenthesis. The single node is `()`. Codes are canonical,
//! so equality and hashing are plain string operations, and a node is
//! identified with the offset of its opening parenthesis; the offsets in
//! increasing order enumerate nodes in depth-first preorder.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::kernel::LinComb;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("no node at address {0:?}")]
    InvalidAddress(Vec<usize>),
}

fn parse_error(position: usize, message: impl Into<String>) -> TreeError {
    TreeError::Parse {
        position,
        message: message.into(),
    }
}

/// A planar rooted tree.
///
/// Ordered by node count, then lexicographically on the code (`(` < `)`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OrderedTree {
    code: String,
}

impl Ord for OrderedTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code
            .len()
            .cmp(&other.code.len())
            .then_with(|| self.code.cmp(&other.code))
    }
}

impl PartialOrd for OrderedTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

impl fmt::Debug for OrderedTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.code)
    }
}

impl FromStr for OrderedTree {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_tree(s)
    }
}

/// Length of the balanced code starting at `start`, or the failing position.
fn scan_balanced(bytes: &[u8], start: usize) -> Result<usize, TreeError> {
    if bytes.get(start) != Some(&b'(') {
        return Err(parse_error(start, "expected '('"));
    }
    let mut depth = 0usize;
    for (i, &b) in bytes.iter().enumerate().skip(start) {
        match b {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i + 1 - start);
                }
            }
            _ => {
                return Err(parse_error(
                    i,
                    format!("unexpected character {:?}", b as char),
                ))
            }
        }
    }
    Err(parse_error(
        bytes.len(),
        "unbalanced parentheses: missing ')'",
    ))
}

/// Parses a single tree such as `(()(()))`.
pub fn parse_tree(text: &str) -> Result<OrderedTree, TreeError> {
    let lead = text.len() - text.trim_start().len();
    let body = text.trim();
    if body.is_empty() {
        return Err(parse_error(lead, "empty input"));
    }
    let len = scan_balanced(body.as_bytes(), 0).map_err(|e| shift(e, lead))?;
    if len != body.len() {
        return Err(parse_error(
            lead + len,
            "trailing input after the outermost pair",
        ));
    }
    Ok(OrderedTree {
        code: body.to_owned(),
    })
}

fn shift(e: TreeError, by: usize) -> TreeError {
    match e {
        TreeError::Parse { position, message } => TreeError::Parse {
            position: position + by,
            message,
        },
        other => other,
    }
}

pub fn print_tree(tree: &OrderedTree) -> String {
    tree.code.clone()
}

/// Path of child indices from the root.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct NodeAddress(pub Vec<usize>);

impl NodeAddress {
    pub fn root() -> Self {
        Self::default()
    }
}

impl OrderedTree {
    /// The single node `()`.
    pub fn leaf() -> Self {
        OrderedTree {
            code: "()".to_owned(),
        }
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn node_count(&self) -> usize {
        self.code.len() / 2
    }

    /// Subtrees hanging from the root, left to right.
    pub fn children(&self) -> Vec<OrderedTree> {
        let bytes = self.code.as_bytes();
        let mut out = Vec::new();
        let mut i = 1;
        while i + 1 < bytes.len() {
            let len = scan_balanced(bytes, i).expect("stored codes are balanced");
            out.push(OrderedTree {
                code: self.code[i..i + len].to_owned(),
            });
            i += len;
        }
        out
    }

    /// Offsets of every node's opening parenthesis, in preorder.
    pub fn node_offsets(&self) -> Vec<usize> {
        self.code
            .bytes()
            .enumerate()
            .filter(|(_, b)| *b == b'(')
            .map(|(i, _)| i)
            .collect()
    }

    fn offset_of(&self, address: &NodeAddress) -> Option<usize> {
        let bytes = self.code.as_bytes();
        let mut at = 0;
        for &child in &address.0 {
            let end = at + scan_balanced(bytes, at).ok()? - 1;
            let mut i = at + 1;
            for _ in 0..child {
                if i >= end {
                    return None;
                }
                i += scan_balanced(bytes, i).ok()?;
            }
            if i >= end {
                return None;
            }
            at = i;
        }
        Some(at)
    }

    /// Inserts `scion` as the new leftmost child of the node at `offset`.
    pub(crate) fn graft_at_offset(&self, scion: &OrderedTree, offset: usize) -> OrderedTree {
        debug_assert_eq!(self.code.as_bytes()[offset], b'(');
        let mut code = String::with_capacity(self.code.len() + scion.code.len());
        code.push_str(&self.code[..=offset]);
        code.push_str(&scion.code);
        code.push_str(&self.code[offset + 1..]);
        OrderedTree { code }
    }

    pub(crate) fn from_code_unchecked(code: String) -> OrderedTree {
        OrderedTree { code }
    }
}

/// Attaches the root of `scion` to node `s` of `rootstock`, as its new
/// leftmost child.
pub fn graft_at(
    scion: &OrderedTree,
    rootstock: &OrderedTree,
    s: &NodeAddress,
) -> Result<OrderedTree, TreeError> {
    let offset = rootstock
        .offset_of(s)
        .ok_or_else(|| TreeError::InvalidAddress(s.0.clone()))?;
    Ok(rootstock.graft_at_offset(scion, offset))
}

/// Every single grafting of `scion` onto `rootstock`, one per node, in
/// preorder of the target node.
pub fn graftings(scion: &OrderedTree, rootstock: &OrderedTree) -> Vec<OrderedTree> {
    rootstock
        .node_offsets()
        .into_iter()
        .map(|p| rootstock.graft_at_offset(scion, p))
        .collect()
}

/// Left grafting `τ ↷ ω`: the sum over all nodes `s` of `ω` of `τ ∘_s ω`.
pub fn graft_left(scion: &OrderedTree, rootstock: &OrderedTree) -> LinComb<OrderedTree> {
    graftings(scion, rootstock)
        .into_iter()
        .map(|t| (t, crate::kernel::coeff(1)))
        .collect()
}

/// An ordered sequence of trees; the empty forest is the unit `1`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Forest(pub Vec<OrderedTree>);

impl Forest {
    pub fn empty() -> Self {
        Forest(Vec::new())
    }

    pub fn trees(&self) -> &[OrderedTree] {
        &self.0
    }

    pub fn node_count(&self) -> usize {
        self.0.iter().map(OrderedTree::node_count).sum()
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&t.code)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses whitespace-separated trees; `1` or blank input is the empty forest.
pub fn parse_forest(text: &str) -> Result<Forest, TreeError> {
    if text.trim().is_empty() || text.trim() == "1" {
        return Ok(Forest::empty());
    }
    let mut trees = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let len = scan_balanced(bytes, i)?;
        trees.push(OrderedTree {
            code: text[i..i + len].to_owned(),
        });
        i += len;
        if i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            return Err(parse_error(i, "trees must be separated by spaces"));
        }
    }
    Ok(Forest(trees))
}

impl FromStr for Forest {
    type Err = TreeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_forest(s)
    }
}

/// `B⁺`: grafts the trees of `forest` on a new root, in order.
pub fn b_plus(forest: &Forest) -> OrderedTree {
    let mut code = String::with_capacity(2 * forest.node_count() + 2);
    code.push('(');
    for t in &forest.0 {
        code.push_str(&t.code);
    }
    code.push(')');
    OrderedTree { code }
}

/// `B⁻`: removes the root, keeping its subtrees in order.
pub fn b_minus(tree: &OrderedTree) -> Forest {
    Forest(tree.children())
}

/// All ordered trees with `n ≥ 1` nodes, in canonical order.
pub fn trees_with_nodes(n: usize) -> Vec<OrderedTree> {
    if n == 0 {
        return Vec::new();
    }
    let mut out: Vec<OrderedTree> = forests_with_nodes(n - 1).iter().map(b_plus).collect();
    out.sort();
    out
}

/// All ordered forests with exactly `n` nodes (the empty forest for `n = 0`).
pub fn forests_with_nodes(n: usize) -> Vec<Forest> {
    let mut table: Vec<Vec<Forest>> = vec![vec![Forest::empty()]];
    for total in 1..=n {
        let mut level = Vec::new();
        for first in 1..=total {
            let heads: Vec<OrderedTree> = table[first - 1].iter().map(b_plus).collect();
            for h in &heads {
                for rest in &table[total - first] {
                    let mut trees = Vec::with_capacity(rest.0.len() + 1);
                    trees.push(h.clone());
                    trees.extend(rest.0.iter().cloned());
                    level.push(Forest(trees));
                }
            }
        }
        level.sort();
        table.push(level);
    }
    table.swap_remove(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::coeff;

    fn t(s: &str) -> OrderedTree {
        parse_tree(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(t("()").node_count(), 1);
        assert_eq!(t("(())").children(), vec![t("()")]);
        assert_eq!(
            t("(()()(()))").children(),
            vec![t("()"), t("()"), t("(())")]
        );
        assert_eq!(print_tree(&t(" (()) ")), "(())");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert_eq!(
            parse_tree("").unwrap_err(),
            TreeError::Parse {
                position: 0,
                message: "empty input".into()
            }
        );
        assert!(matches!(
            parse_tree("(()"),
            Err(TreeError::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_tree("()()"),
            Err(TreeError::Parse { position: 2, .. })
        ));
        assert!(matches!(
            parse_tree("(x)"),
            Err(TreeError::Parse { position: 1, .. })
        ));
        assert!(matches!(
            parse_tree(")("),
            Err(TreeError::Parse { position: 0, .. })
        ));
    }

    #[test]
    fn graft_at_examples() {
        let root = NodeAddress::root();
        assert_eq!(
            graft_at(&t("(())"), &t("(()()())"), &root).unwrap(),
            t("((())()()())")
        );
        assert_eq!(graft_at(&t("()"), &t("()"), &root).unwrap(), t("(())"));
        // the leaf below the first child of ((())())
        let addr = NodeAddress(vec![0, 0]);
        assert_eq!(
            graft_at(&t("(()())"), &t("((())())"), &addr).unwrap(),
            t("((((()())))())")
        );
        assert!(graft_at(&t("()"), &t("(())"), &NodeAddress(vec![1])).is_err());
        assert!(graft_at(&t("()"), &t("(())"), &NodeAddress(vec![0, 0])).is_err());
    }

    #[test]
    fn left_grafting_displays() {
        let expected: LinComb<OrderedTree> = [
            "((())()()())",
            "(((()))()())",
            "(()((()))())",
            "(()()((())))",
        ]
        .iter()
        .map(|s| (t(s), coeff(1)))
        .collect();
        assert_eq!(graft_left(&t("(())"), &t("(()()())")), expected);

        let expected: LinComb<OrderedTree> = [
            "((()())(())())",
            "(((()())())())",
            "((((()())))())",
            "((())((()())))",
        ]
        .iter()
        .map(|s| (t(s), coeff(1)))
        .collect();
        assert_eq!(graft_left(&t("(()())"), &t("((())())")), expected);

        assert_eq!(graft_left(&t("()"), &t("()")), LinComb::basis(t("(())")));
    }

    #[test]
    fn root_operators() {
        assert_eq!(b_plus(&Forest::empty()), t("()"));
        let f = parse_forest("(()) (()())").unwrap();
        assert_eq!(b_plus(&f), t("((())(()()))"));
        assert_eq!(b_plus(&parse_forest("()").unwrap()), t("(())"));
        assert_eq!(
            b_minus(&t("(()()((())))")),
            parse_forest("() () ((()))").unwrap()
        );
        assert_eq!(b_minus(&t("()")), Forest::empty());
        assert_eq!(b_minus(&t("((())(()()))")), f);
    }

    #[test]
    fn forest_text_format() {
        assert_eq!(Forest::empty().to_string(), "1");
        assert_eq!(parse_forest("1").unwrap(), Forest::empty());
        let f = parse_forest("() (())").unwrap();
        assert_eq!(f.to_string(), "() (())");
        assert!(matches!(
            parse_forest("()(())"),
            Err(TreeError::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn enumeration_counts_are_catalan() {
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=7 {
            assert_eq!(trees_with_nodes(n).len(), catalan[n - 1]);
            assert_eq!(forests_with_nodes(n).len(), catalan[n]);
        }
        let three: Vec<String> = trees_with_nodes(3).iter().map(|t| t.to_string()).collect();
        assert_eq!(three, vec!["((()))", "(()())"]);
    }

    #[test]
    fn round_trips_on_generated_trees() {
        for n in 1..=7 {
            for tree in trees_with_nodes(n) {
                assert_eq!(parse_tree(&print_tree(&tree)).unwrap(), tree);
                assert_eq!(b_plus(&b_minus(&tree)), tree);
            }
        }
        for n in 0..=6 {
            for f in forests_with_nodes(n) {
                assert_eq!(b_minus(&b_plus(&f)), f);
                assert_eq!(parse_forest(&f.to_string()).unwrap(), f);
            }
        }
    }

    #[test]
    fn grafting_counts_and_sizes() {
        for a in 1..=3 {
            for b in 1..=4 {
                for scion in trees_with_nodes(a) {
                    for stock in trees_with_nodes(b) {
                        let g = graft_left(&scion, &stock);
                        assert_eq!(g.coefficient_sum(), coeff(stock.node_count() as i64));
                        assert!(g.keys().all(|x| x.node_count() == a + b));
                    }
                }
            }
        }
    }
}
