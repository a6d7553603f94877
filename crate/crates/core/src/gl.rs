//! The Grossman-Larson Hopf algebra `(k{O}, ∘_GL, Δ_GL, S_GL)` of ordered
//! trees.

use itertools::Itertools;

use crate::kernel::{
    antipode_partitions, coeff, sign, AntipodePartition, GradedBialgebra, LinComb,
};
use crate::magma::TreeMagma;
use crate::posthopf::{product_of_letters, PostHopf, Tensor, Word};
use crate::trees::{b_minus, b_plus, Forest, OrderedTree};

pub type GlElement = LinComb<OrderedTree>;

/// `B⁺` extended linearly from forests (words of trees) to trees.
pub fn b_plus_lin(a: &Tensor<OrderedTree>) -> GlElement {
    a.map_basis(|w| b_plus(&Forest(w.0.clone())))
}

/// `B⁻` extended linearly.
pub fn b_minus_lin(a: &GlElement) -> Tensor<OrderedTree> {
    a.map_basis(|t| Word(b_minus(t).0))
}

/// Grossman-Larson operations, computed through the post-Hopf algebra of
/// ordered forests and cached there.
pub struct GrossmanLarson {
    forests: PostHopf<TreeMagma>,
}

impl Default for GrossmanLarson {
    fn default() -> Self {
        Self::new()
    }
}

impl GrossmanLarson {
    pub fn new() -> Self {
        GrossmanLarson {
            forests: PostHopf::new(TreeMagma),
        }
    }

    /// The underlying post-Hopf algebra on forests.
    pub fn forests(&self) -> &PostHopf<TreeMagma> {
        &self.forests
    }

    /// `τ ∘_GL ω = B⁻(τ) ⊳ ω`.
    pub fn product(&self, tau: &OrderedTree, omega: &OrderedTree) -> GlElement {
        self.forests.word_on_letter(&b_minus(tau).0, omega)
    }

    pub fn product_lin(&self, a: &GlElement, b: &GlElement) -> GlElement {
        a.bilinear(b, |x, y| self.product(x, y))
    }

    /// `S_GL(τ) = (-1)^m Σ_π B⁺((τ⁻_{B₁} ⧐ τ_{b₁})⋯)` for `τ = B⁺(τ₁⋯τ_m)`.
    pub fn antipode(&self, tau: &OrderedTree) -> GlElement {
        if tau.node_count() == 1 {
            return LinComb::basis(tau.clone());
        }
        let mut out = LinComb::zero();
        for (_, t) in self.antipode_terms(tau) {
            out += &t;
        }
        out
    }

    pub fn antipode_lin(&self, a: &GlElement) -> GlElement {
        a.extend(|t| self.antipode(t))
    }

    /// The signed contribution of each antipode partition of the root's
    /// children. Empty for the unit tree.
    pub fn antipode_terms(&self, tau: &OrderedTree) -> Vec<(AntipodePartition, GlElement)> {
        let children = tau.children();
        let m = children.len();
        let Ok(partitions) = antipode_partitions(m) else {
            return Vec::new();
        };
        let s = sign(m);
        partitions
            .into_iter()
            .map(|p| {
                let factors: Vec<LinComb<OrderedTree>> = p
                    .pairs()
                    .map(|(block, b)| {
                        let scions: Vec<OrderedTree> =
                            block.iter().map(|&i| children[i].clone()).collect();
                        self.forests.btr_on_letter(&scions, &children[b])
                    })
                    .collect();
                let term = b_plus_lin(&product_of_letters(&factors)).scale(&s);
                (p, term)
            })
            .collect()
    }

    /// `S_GL` by conjugation: `B⁺ ∘ S_⊳ ∘ B⁻`.
    pub fn antipode_conjugated(&self, tau: &OrderedTree) -> GlElement {
        b_plus_lin(&self.forests.sub_antipode(&Word(b_minus(tau).0)))
    }

    /// The bialgebra `(k{O}, ∘_GL, Δ_GL)`, graded by node count minus one.
    pub fn closure(&self) -> GlClosure<'_> {
        GlClosure { gl: self }
    }
}

/// `Δ_GL(τ) = Σ_{I ⊆ [m]} τ⁺_I ⊗ τ⁺_{[m]∖I}`.
pub fn gl_coproduct(tau: &OrderedTree) -> LinComb<(OrderedTree, OrderedTree)> {
    let children = tau.children();
    let m = children.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1u64 << m) {
        let (left, right): (Vec<_>, Vec<_>) = (0..m).partition(|&i| mask & (1 << i) != 0);
        let pick =
            |ix: &[usize]| b_plus(&Forest(ix.iter().map(|&i| children[i].clone()).collect()));
        out.add_term((pick(&left), pick(&right)), coeff(1));
    }
    out
}

/// `τ ∘_GL ω` from the definition: expand `τ₁ ↷ (τ₂ ↷ ⋯ (τ_m ↷ ω))` and keep
/// the trees in which every `τ_i` hangs from a node of `ω`.
pub fn gl_product_direct(tau: &OrderedTree, omega: &OrderedTree) -> GlElement {
    // nodes of ω are written with brackets so that they stay recognisable
    let marked: String = omega
        .code()
        .chars()
        .map(|c| if c == '(' { '[' } else { ']' })
        .collect();
    let mut current: LinComb<String> = LinComb::basis(marked);
    for scion in b_minus(tau).0.iter().rev() {
        let mut next = LinComb::zero();
        for (code, c) in &current {
            for (at, _) in code.match_indices('[') {
                let mut grown = String::with_capacity(code.len() + scion.code().len());
                grown.push_str(&code[..=at]);
                grown.push_str(scion.code());
                grown.push_str(&code[at + 1..]);
                next.add_term(grown, c.clone());
            }
        }
        current = next;
    }
    current.map_basis(|code| {
        OrderedTree::from_code_unchecked(code.replace('[', "(").replace(']', ")"))
    })
}

/// Child lists of every node of a tree, nodes numbered in preorder.
fn child_lists(tree: &OrderedTree) -> Vec<Vec<usize>> {
    let mut children: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    for b in tree.code().bytes() {
        if b == b'(' {
            let id = children.len();
            children.push(Vec::new());
            if let Some(&parent) = stack.last() {
                children[parent].push(id);
            }
            stack.push(id);
        } else {
            stack.pop();
        }
    }
    children
}

/// `τ₁⋯τ_m ⧐ ω` as a sum of graftings: every scion is attached to a node of
/// `ω` or of another scion, with no cycles. At each node the attached scions
/// sit left of the original children, higher indices further left.
pub fn btr_grafting_oracle(scions: &[OrderedTree], omega: &OrderedTree) -> GlElement {
    let m = scions.len();
    // owner m is ω, owners 0..m are the scions
    let shapes: Vec<Vec<Vec<usize>>> = scions
        .iter()
        .chain(std::iter::once(omega))
        .map(child_lists)
        .collect();
    let targets: Vec<Vec<(usize, usize)>> = (0..m)
        .map(|i| {
            (0..=m)
                .filter(|&o| o != i)
                .flat_map(|o| (0..shapes[o].len()).map(move |n| (o, n)))
                .collect()
        })
        .collect();

    fn acyclic(choice: &[(usize, usize)], m: usize) -> bool {
        (0..m).all(|start| {
            let mut at = start;
            for _ in 0..=m {
                if at == m {
                    return true;
                }
                at = choice[at].0;
            }
            false
        })
    }

    fn build(
        owner: usize,
        node: usize,
        shapes: &[Vec<Vec<usize>>],
        choice: &[(usize, usize)],
        out: &mut String,
    ) {
        out.push('(');
        for s in (0..choice.len()).rev() {
            if choice[s] == (owner, node) {
                build(s, 0, shapes, choice, out);
            }
        }
        for &c in &shapes[owner][node] {
            build(owner, c, shapes, choice, out);
        }
        out.push(')');
    }

    let mut out = LinComb::zero();
    for choice in targets
        .iter()
        .map(|t| t.iter().copied())
        .multi_cartesian_product()
    {
        if !acyclic(&choice, m) {
            continue;
        }
        let mut code = String::new();
        build(m, 0, &shapes, &choice, &mut code);
        out.add_term(OrderedTree::from_code_unchecked(code), coeff(1));
    }
    if m == 0 {
        return LinComb::basis(omega.clone());
    }
    out
}

/// The Grossman-Larson bialgebra as a Takeuchi closure.
pub struct GlClosure<'a> {
    gl: &'a GrossmanLarson,
}

impl GradedBialgebra for GlClosure<'_> {
    type Key = OrderedTree;

    fn unit(&self) -> OrderedTree {
        OrderedTree::leaf()
    }

    fn degree(&self, key: &OrderedTree) -> usize {
        key.node_count() - 1
    }

    fn product(&self, a: &OrderedTree, b: &OrderedTree) -> LinComb<OrderedTree> {
        self.gl.product(a, b)
    }

    fn coproduct(&self, key: &OrderedTree) -> LinComb<(OrderedTree, OrderedTree)> {
        gl_coproduct(key)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{satisfies_antipode_axiom, takeuchi_antipode};
    use crate::trees::{graft_left, parse_forest, parse_tree, trees_with_nodes};

    fn t(s: &str) -> OrderedTree {
        parse_tree(s).unwrap()
    }

    fn trees(terms: &[(i64, &str)]) -> GlElement {
        terms.iter().map(|&(c, s)| (t(s), coeff(c))).collect()
    }

    fn pairs(terms: &[(i64, &str, &str)]) -> LinComb<(OrderedTree, OrderedTree)> {
        terms
            .iter()
            .map(|&(c, a, b)| ((t(a), t(b)), coeff(c)))
            .collect()
    }

    #[test]
    fn products() {
        let gl = GrossmanLarson::new();
        let cases = [
            ("(())", "()", trees(&[(1, "(())")])),
            (
                "(()())",
                "(())",
                trees(&[(1, "(()()())"), (2, "(()(()))"), (1, "((()()))")]),
            ),
            ("(())", "(())", trees(&[(1, "(()())"), (1, "((()))")])),
            ("()", "((()()))", trees(&[(1, "((()()))")])),
        ];
        for (a, b, expected) in cases {
            assert_eq!(gl.product(&t(a), &t(b)), expected, "{a} ∘ {b}");
            assert_eq!(gl_product_direct(&t(a), &t(b)), expected, "{a} ∘ {b}");
        }
    }

    #[test]
    fn product_forms_agree_and_associate() {
        let gl = GrossmanLarson::new();
        let all: Vec<OrderedTree> = (1..=4).flat_map(trees_with_nodes).collect();
        for a in &all {
            for b in &all {
                let ab = gl.product(a, b);
                assert_eq!(ab, gl_product_direct(a, b), "{a} ∘ {b}");
                if a.node_count() + b.node_count() <= 6 {
                    for c in trees_with_nodes(2) {
                        let left = gl.product_lin(&ab, &LinComb::basis(c.clone()));
                        let right = gl.product_lin(&LinComb::basis(a.clone()), &gl.product(b, &c));
                        assert_eq!(left, right);
                    }
                }
            }
        }
    }

    #[test]
    fn coproducts() {
        assert_eq!(gl_coproduct(&t("()")), pairs(&[(1, "()", "()")]));
        assert_eq!(
            gl_coproduct(&t("(())")),
            pairs(&[(1, "(())", "()"), (1, "()", "(())")])
        );
        assert_eq!(
            gl_coproduct(&t("(()())")),
            pairs(&[
                (1, "(()())", "()"),
                (2, "(())", "(())"),
                (1, "()", "(()())")
            ])
        );
    }

    #[test]
    fn antipode_example() {
        let gl = GrossmanLarson::new();
        let tau = t("(()()(()))");
        let expected = trees(&[
            (-1, "((())()())"),
            (-3, "(((()))())"),
            (-1, "(()((())))"),
            (-2, "((()())())"),
            (-2, "((())(()))"),
            (-4, "(((())()))"),
            (-2, "((()(())))"),
            (-6, "((((()))))"),
            (-1, "((()()()))"),
            (-3, "(((()())))"),
        ]);
        assert_eq!(gl.antipode(&tau), expected);
        assert_eq!(gl.antipode_conjugated(&tau), expected);
        assert_eq!(
            takeuchi_antipode(&gl.closure(), &LinComb::basis(tau.clone())).unwrap(),
            expected
        );

        let rows: Vec<(String, GlElement)> = gl
            .antipode_terms(&tau)
            .into_iter()
            .map(|(p, v)| (p.to_string(), -&v))
            .collect();
        let expected_rows = vec![
            ("({}, {}, {}, {3,2,1})", trees(&[(1, "((())()())")])),
            (
                "({1}, {}, {3,2})",
                trees(&[(1, "(((()))())"), (1, "((()())())")]),
            ),
            ("({}, {1}, {3,2})", trees(&[(1, "((())(()))")])),
            (
                "({2}, {}, {3,1})",
                trees(&[(1, "(((()))())"), (1, "((()())())")]),
            ),
            ("({}, {2}, {3,1})", trees(&[(1, "((())(()))")])),
            ("({3}, {}, {2,1})", trees(&[(1, "(((()))())")])),
            ("({}, {3}, {2,1})", trees(&[(1, "(()((())))")])),
            (
                "({1,2}, {3})",
                trees(&[
                    (2, "(((())()))"),
                    (2, "((()(())))"),
                    (2, "((((()))))"),
                    (1, "((()()()))"),
                    (1, "(((()())))"),
                ]),
            ),
            (
                "({1,3}, {2})",
                trees(&[(1, "(((())()))"), (2, "((((()))))"), (1, "(((()())))")]),
            ),
            (
                "({2,3}, {1})",
                trees(&[(1, "(((())()))"), (2, "((((()))))"), (1, "(((()())))")]),
            ),
        ];
        assert_eq!(rows.len(), 10);
        for (label, value) in expected_rows {
            let found = rows
                .iter()
                .find(|(l, _)| l == label)
                .unwrap_or_else(|| panic!("{label}"));
            assert_eq!(found.1, value, "{label}");
        }
    }

    #[test]
    fn antipode_small_cases() {
        let gl = GrossmanLarson::new();
        assert_eq!(gl.antipode(&t("()")), trees(&[(1, "()")]));
        assert_eq!(gl.antipode(&t("(())")), trees(&[(-1, "(())")]));
        for n in 1..=5 {
            for tau in trees_with_nodes(n) {
                let s = gl.antipode(&tau);
                assert_eq!(s, gl.antipode_conjugated(&tau), "{tau}");
                assert!(satisfies_antipode_axiom(&gl.closure(), &tau, |k| gl.antipode(k)));
                let m = tau.children().len();
                if m > 0 {
                    let expected = if m % 2 == 0 { 1 } else { -1 };
                    assert_eq!(s.uniform_sign(), Some(expected), "{tau}");
                }
                assert!(s.keys().all(|x| x.node_count() == n));
            }
        }
    }

    #[test]
    fn grafting_oracle() {
        let scions = parse_forest("() (())").unwrap().0;
        let omega = t("(())");
        let expected = trees(&[
            (1, "((())()())"),
            (1, "(((())()))"),
            (2, "(((()))())"),
            (2, "((((()))))"),
            (1, "(()((())))"),
            (1, "((())(()))"),
            (1, "((()())())"),
            (1, "(((()())))"),
        ]);
        assert_eq!(btr_grafting_oracle(&scions, &omega), expected);
        assert_eq!(btr_grafting_oracle(&[], &omega), trees(&[(1, "(())")]));
        assert_eq!(
            btr_grafting_oracle(&scions[1..], &omega),
            graft_left(&scions[1], &omega)
        );
        let gl = GrossmanLarson::new();
        for f in crate::trees::forests_with_nodes(3) {
            for omega in trees_with_nodes(2) {
                assert_eq!(
                    btr_grafting_oracle(&f.0, &omega),
                    gl.forests().btr_on_letter(&f.0, &omega),
                    "{f} onto {omega}"
                );
            }
        }
    }
}
