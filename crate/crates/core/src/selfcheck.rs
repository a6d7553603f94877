//! Bounded invariant suites. Each suite enumerates every input in its range
//! and compares independent computations of the same quantity.

use std::fmt;

use crate::gl::{btr_grafting_oracle, gl_coproduct, gl_product_direct, GlElement, GrossmanLarson};
use crate::kernel::{
    coeff, satisfies_antipode_axiom, sign, takeuchi_antipode, takeuchi_expansion, ExpansionStats,
    LinComb,
};
use crate::magma::{FreeMagma, Magma, MagmaTerm, TreeMagma};
use crate::pbw::{fixtures, parse_algebra, Uea};
use crate::posthopf::{
    antipode_t, concat, coproduct, coshuffle, counit, product_of_letters, PostHopf, Tensor, Word,
};
use crate::trees::{forests_with_nodes, trees_with_nodes, OrderedTree};

/// How far each suite enumerates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    /// Forests (tree mode) up to this many nodes in total.
    pub forest_nodes: usize,
    /// Words over two free letters up to this length.
    pub word_len: usize,
    /// Trees of the Grossman-Larson algebra up to this many nodes.
    pub gl_nodes: usize,
    /// Factors of Grossman-Larson products up to this many nodes.
    pub gl_factor_nodes: usize,
    /// PBW monomials up to this degree.
    pub pbw_degree: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            forest_nodes: 5,
            word_len: 4,
            gl_nodes: 6,
            gl_factor_nodes: 5,
            pbw_degree: 4,
        }
    }
}

impl Bounds {
    /// A fast subset of the default ranges.
    pub fn quick() -> Self {
        Bounds {
            forest_nodes: 3,
            word_len: 3,
            gl_nodes: 4,
            gl_factor_nodes: 3,
            pbw_degree: 2,
        }
    }
}

/// Pass and fail counts of one suite, with the first few failures.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    fn new(name: &str) -> Self {
        SuiteResult {
            name: name.to_owned(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < 5 {
                self.failures.push(describe());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for SuiteResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status}\t{}\t{} passed, {} failed",
            self.name, self.passed, self.failed
        )?;
        for failure in &self.failures {
            write!(f, "\n\t{failure}")?;
        }
        Ok(())
    }
}

/// Every forest with at most `n` nodes, as words of trees.
pub fn forest_words(n: usize) -> Vec<Word<OrderedTree>> {
    (0..=n)
        .flat_map(forests_with_nodes)
        .map(|f| Word(f.0))
        .collect()
}

/// Every word of length at most `n` over `x1, x2`.
pub fn letter_words(n: usize) -> Vec<Word<MagmaTerm>> {
    let gens = [MagmaTerm::leaf("x1"), MagmaTerm::leaf("x2")];
    let mut out = vec![Word::unit()];
    let mut level = vec![Word::<MagmaTerm>::unit()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &level {
            for g in &gens {
                let mut v = w.0.clone();
                v.push(g.clone());
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        level = next;
    }
    out
}

/// Every tree with at most `n` nodes.
pub fn all_trees(n: usize) -> Vec<OrderedTree> {
    (1..=n).flat_map(trees_with_nodes).collect()
}

type Pairs<L> = LinComb<(Word<L>, Word<L>)>;

fn pair_tensor<L: Clone + Ord>(a: &Tensor<L>, b: &Tensor<L>) -> Pairs<L> {
    a.bilinear(b, |u, v| LinComb::basis((u.clone(), v.clone())))
}

fn coproduct_lin<L: Clone + Ord>(a: &Tensor<L>) -> Pairs<L> {
    a.extend(coproduct)
}

/// `Σ f(a₁, b₁) ⊗ f(a₂, b₂)` for `a = Σ a₁ ⊗ a₂`, `b = Σ b₁ ⊗ b₂`.
fn pairwise<L: Clone + Ord>(
    a: &Pairs<L>,
    b: &Pairs<L>,
    mut f: impl FnMut(&Word<L>, &Word<L>) -> Tensor<L>,
) -> Pairs<L> {
    let mut out = LinComb::zero();
    for ((a1, a2), c) in a {
        for ((b1, b2), d) in b {
            out.add_scaled(&pair_tensor(&f(a1, b1), &f(a2, b2)), &(c * d));
        }
    }
    out
}

fn name<L: fmt::Display>(ws: &[&Word<L>]) -> String {
    ws.iter()
        .map(|w| format!("[{w}]"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The four routes to `S_⊳`: cancellation-free, iterated, Takeuchi and
/// `K⁻¹ S K`; also involutivity and sign purity.
fn antipode_suite<M: Magma>(
    ph: &PostHopf<M>,
    words: &[Word<M::Letter>],
    label: &str,
) -> Vec<SuiteResult> {
    let mut routes = SuiteResult::new(&format!("antipode routes agree ({label})"));
    let mut involution = SuiteResult::new(&format!("antipode is an involution ({label})"));
    let mut purity = SuiteResult::new(&format!("antipode sign purity ({label})"));
    for x in words {
        let cf = ph.sub_antipode(x);
        let iter = ph.sub_antipode_iter(x);
        let tk = ph.sub_antipode_takeuchi(x);
        let ksk = ph.k_map_inverse_lin(&ph.k_map_closed(x).extend(antipode_t));
        routes.check(iter == cf && tk.as_ref() == Ok(&cf) && ksk == cf, || {
            name(&[x])
        });
        involution.check(
            ph.sub_antipode_lin(&cf) == LinComb::basis(x.clone()),
            || name(&[x]),
        );
        let expected = if x.len() % 2 == 0 { 1 } else { -1 };
        purity.check(
            cf.uniform_sign() == Some(expected) && ksk.uniform_sign() == Some(expected),
            || name(&[x]),
        );
    }
    vec![routes, involution, purity]
}

/// `⧐` by recursion, by the permutation formula, and as `±S_⊳(X) ⊳ Y`;
/// and its compatibility with the coproduct in the right argument.
fn twisted_suite<M: Magma>(
    ph: &PostHopf<M>,
    words: &[Word<M::Letter>],
    weight: impl Fn(&Word<M::Letter>) -> usize,
    max_weight: usize,
    label: &str,
) -> Vec<SuiteResult> {
    let mut triple = SuiteResult::new(&format!("twisted product forms agree ({label})"));
    let mut coalg = SuiteResult::new(&format!("twisted product splits over letters ({label})"));
    for x in words {
        let sx = ph.sub_antipode(x).scale(&sign(x.len()));
        for y in words {
            if weight(x) + weight(y) > max_weight {
                continue;
            }
            let rec = ph.btr(x, y);
            let comb = ph.btr_combinatorial(&x.0, y);
            let via = ph.triangle_lin(&sx, &LinComb::basis(y.clone()));
            triple.check(rec == comb && rec == via, || name(&[x, y]));
            let split = if y.is_empty() {
                LinComb::term(Word::unit(), coeff(counit(x)))
            } else {
                let mut split = LinComb::zero();
                for (parts, c) in &coshuffle(x, y.len()) {
                    let factors: Vec<LinComb<M::Letter>> = parts
                        .iter()
                        .zip(&y.0)
                        .map(|(p, l)| ph.btr_on_letter(&p.0, l))
                        .collect();
                    split.add_scaled(&product_of_letters(&factors), c);
                }
                split
            };
            coalg.check(split == rec, || name(&[x, y]));
        }
    }
    vec![triple, coalg]
}

/// The post-Hopf identities, the coalgebra-map property of `⊳`, and the
/// Hopf axioms of `(T(V), *_⊳, Δ, S_⊳)`.
fn axiom_suite<M: Magma>(
    ph: &PostHopf<M>,
    words: &[Word<M::Letter>],
    weight: impl Fn(&Word<M::Letter>) -> usize,
    max_weight: usize,
    label: &str,
) -> Vec<SuiteResult> {
    let mut units = SuiteResult::new(&format!("units of the action ({label})"));
    let mut post2 = SuiteResult::new(&format!("action is multiplicative ({label})"));
    let mut post4 = SuiteResult::new(&format!("action is associative ({label})"));
    let mut post5 = SuiteResult::new(&format!("action commutes with the antipode ({label})"));
    let mut coalg = SuiteResult::new(&format!("action is a coalgebra map ({label})"));
    let mut assoc = SuiteResult::new(&format!("sub-adjacent product is associative ({label})"));
    let mut mult = SuiteResult::new(&format!("coproduct is multiplicative ({label})"));
    let mut axiom = SuiteResult::new(&format!("antipode axiom ({label})"));
    let unit = Word::unit();
    let closure = ph.sub_adjacent();
    for x in words {
        let bx = LinComb::basis(x.clone());
        units.check(
            ph.triangle(x, &unit) == LinComb::term(unit.clone(), coeff(counit(x)))
                && ph.triangle(&unit, x) == bx
                && ph.star(&unit, x) == bx
                && ph.star(x, &unit) == bx,
            || name(&[x]),
        );
        axiom.check(
            satisfies_antipode_axiom(&closure, x, |k| ph.sub_antipode(k)),
            || name(&[x]),
        );
        let dx = coproduct(x);
        for y in words {
            if weight(x) + weight(y) > max_weight {
                continue;
            }
            let xy = ph.triangle(x, y);
            post5.check(
                xy.extend(antipode_t) == ph.triangle_lin(&bx, &antipode_t(y)),
                || name(&[x, y]),
            );
            let dy = coproduct(y);
            coalg.check(
                coproduct_lin(&xy) == pairwise(&dx, &dy, |a, b| ph.triangle(a, b)),
                || name(&[x, y]),
            );
            mult.check(
                coproduct_lin(&ph.star(x, y)) == pairwise(&dx, &dy, |a, b| ph.star(a, b)),
                || name(&[x, y]),
            );
            for z in words {
                if weight(x) + weight(y) + weight(z) > max_weight {
                    continue;
                }
                let bz = LinComb::basis(z.clone());
                let mut split = LinComb::zero();
                for ((x1, x2), c) in &dx {
                    let l = ph.triangle(x1, y);
                    let r = ph.triangle(x2, z);
                    split.add_scaled(&crate::posthopf::concat_lin(&l, &r), c);
                }
                post2.check(ph.triangle(x, &concat(y, z)) == split, || name(&[x, y, z]));
                post4.check(
                    ph.triangle_lin(&bx, &ph.triangle(y, z))
                        == ph.triangle_lin(&ph.star(x, y), &bz),
                    || name(&[x, y, z]),
                );
                assoc.check(
                    ph.star_lin(&ph.star(x, y), &bz) == ph.star_lin(&bx, &ph.star(y, z)),
                    || name(&[x, y, z]),
                );
            }
        }
    }
    vec![units, post2, post4, post5, coalg, assoc, mult, axiom]
}

/// The K-map identities in a free mode.
fn k_map_suite<M: Magma>(
    ph: &PostHopf<M>,
    words: &[Word<M::Letter>],
    weight: impl Fn(&Word<M::Letter>) -> usize,
    max_weight: usize,
    label: &str,
) -> Vec<SuiteResult> {
    let mut forms = SuiteResult::new(&format!("K-map forms agree ({label})"));
    let mut inverse = SuiteResult::new(&format!("K-map inverse ({label})"));
    let mut coalg = SuiteResult::new(&format!("K-map is a coalgebra map ({label})"));
    let mut morph = SuiteResult::new(&format!("K-map is multiplicative ({label})"));
    for x in words {
        let kx = ph.k_map_closed(x);
        let bx = LinComb::basis(x.clone());
        forms.check(
            ph.k_map_recursive(x) == kx && ph.og_inverse(x).value == kx,
            || name(&[x]),
        );
        inverse.check(
            ph.k_map_inverse_lin(&kx) == bx && ph.k_map_lin(&ph.k_map_inverse(x)) == bx,
            || name(&[x]),
        );
        let mut lhs = LinComb::zero();
        for ((a, b), c) in &coproduct(x) {
            lhs.add_scaled(&pair_tensor(&ph.k_map_closed(a), &ph.k_map_closed(b)), c);
        }
        coalg.check(lhs == coproduct_lin(&kx), || name(&[x]));
        for y in words {
            if weight(x) + weight(y) > max_weight {
                continue;
            }
            morph.check(
                ph.k_map_lin(&ph.star(x, y))
                    == crate::posthopf::concat_lin(&kx, &ph.k_map_closed(y))
                    && ph.k_map_inverse(&concat(x, y))
                        == ph.star_lin(&ph.k_map_inverse(x), &ph.k_map_inverse(y)),
                || name(&[x, y]),
            );
        }
    }
    vec![forms, inverse, coalg, morph]
}

/// Tree-mode `⧐` against the grafting description.
fn grafting_suite(ph: &PostHopf<TreeMagma>, max_nodes: usize) -> SuiteResult {
    let mut suite = SuiteResult::new("twisted product equals the grafting sum (trees)");
    for x in forest_words(max_nodes) {
        let used: usize = x.0.iter().map(OrderedTree::node_count).sum();
        for omega in all_trees(max_nodes.saturating_sub(used)) {
            suite.check(
                btr_grafting_oracle(&x.0, &omega) == ph.btr_on_letter(&x.0, &omega),
                || format!("[{x}] onto {omega}"),
            );
        }
    }
    suite
}

fn gl_pairs(
    gl: &GrossmanLarson,
    a: &LinComb<(OrderedTree, OrderedTree)>,
    b: &LinComb<(OrderedTree, OrderedTree)>,
) -> LinComb<(OrderedTree, OrderedTree)> {
    let mut out = LinComb::zero();
    for ((a1, a2), c) in a {
        for ((b1, b2), d) in b {
            let l = gl.product(a1, b1);
            let r = gl.product(a2, b2);
            let p = l.bilinear(&r, |u, v| LinComb::basis((u.clone(), v.clone())));
            out.add_scaled(&p, &(c * d));
        }
    }
    out
}

/// The Grossman-Larson suites.
pub fn gl_suites(bounds: &Bounds) -> Vec<SuiteResult> {
    let gl = GrossmanLarson::new();
    let closure = gl.closure();
    let mut product = SuiteResult::new("GL product forms agree");
    let mut assoc = SuiteResult::new("GL product is associative");
    let mut mult = SuiteResult::new("GL coproduct is multiplicative");
    let mut coalg = SuiteResult::new("GL coproduct is coassociative and cocommutative");
    let mut antipode = SuiteResult::new("GL antipode routes agree");
    let mut axiom = SuiteResult::new("GL antipode axiom");
    let mut purity = SuiteResult::new("GL antipode sign purity and degree");
    let unit = OrderedTree::leaf();
    let factors = all_trees(bounds.gl_factor_nodes);
    for a in &factors {
        for b in &factors {
            let ab = gl.product(a, b);
            product.check(ab == gl_product_direct(a, b), || format!("{a} ∘ {b}"));
            if a.node_count() + b.node_count() <= bounds.gl_factor_nodes + 1 {
                mult.check(
                    ab.extend(gl_coproduct) == gl_pairs(&gl, &gl_coproduct(a), &gl_coproduct(b)),
                    || format!("{a} ∘ {b}"),
                );
            }
            for c in &factors {
                if a.node_count() + b.node_count() + c.node_count() > bounds.gl_factor_nodes + 2 {
                    continue;
                }
                let left = gl.product_lin(&ab, &LinComb::basis(c.clone()));
                let right = gl.product_lin(&LinComb::basis(a.clone()), &gl.product(b, c));
                assoc.check(left == right, || format!("{a} ∘ {b} ∘ {c}"));
            }
        }
    }
    for tau in all_trees(bounds.gl_nodes) {
        let bt = LinComb::basis(tau.clone());
        let d = gl_coproduct(&tau);
        let left: LinComb<(OrderedTree, OrderedTree, OrderedTree)> = d
            .extend(|(a, b)| gl_coproduct(a).map_basis(|(x, y)| (x.clone(), y.clone(), b.clone())));
        let right: LinComb<(OrderedTree, OrderedTree, OrderedTree)> = d
            .extend(|(a, b)| gl_coproduct(b).map_basis(|(x, y)| (a.clone(), x.clone(), y.clone())));
        let flipped = d.map_basis(|(a, b)| (b.clone(), a.clone()));
        let counit_ok = d
            .iter()
            .filter(|((a, _), _)| *a == unit)
            .map(|((_, b), c)| LinComb::term(b.clone(), c.clone()))
            .fold(LinComb::zero(), |acc: GlElement, x| &acc + &x)
            == bt;
        coalg.check(left == right && flipped == d && counit_ok, || {
            tau.to_string()
        });

        let s = gl.antipode(&tau);
        let tk = takeuchi_antipode(&closure, &bt);
        antipode.check(
            tk.as_ref() == Ok(&s) && gl.antipode_conjugated(&tau) == s,
            || tau.to_string(),
        );
        axiom.check(
            satisfies_antipode_axiom(&closure, &tau, |k| gl.antipode(k)),
            || tau.to_string(),
        );
        let m = tau.children().len();
        let expected = if m % 2 == 0 { 1 } else { -1 };
        purity.check(
            s.uniform_sign() == Some(expected)
                && s.keys().all(|t| t.node_count() == tau.node_count()),
            || tau.to_string(),
        );
    }
    vec![product, assoc, mult, coalg, antipode, axiom, purity]
}

/// Suites on `T(V)` in tree mode.
pub fn forest_suites(bounds: &Bounds) -> Vec<SuiteResult> {
    let ph = PostHopf::new(TreeMagma);
    let words = forest_words(bounds.forest_nodes);
    let n = bounds.forest_nodes;
    let w = |x: &Word<OrderedTree>| -> usize { x.0.iter().map(OrderedTree::node_count).sum() };
    let mut out = antipode_suite(&ph, &words, "forests");
    out.extend(twisted_suite(&ph, &words, w, n, "forests"));
    out.push(grafting_suite(&ph, n));
    out.extend(axiom_suite(&ph, &words, w, n, "forests"));
    out.extend(k_map_suite(&ph, &words, w, n, "forests"));
    out
}

/// Suites on `T(V)` over the free magma on two letters.
pub fn letter_suites(bounds: &Bounds) -> Vec<SuiteResult> {
    let ph = PostHopf::new(FreeMagma);
    let words = letter_words(bounds.word_len);
    let n = bounds.word_len;
    let w = |x: &Word<MagmaTerm>| x.len();
    let mut out = antipode_suite(&ph, &words, "letters");
    out.extend(twisted_suite(&ph, &words, w, n + 1, "letters"));
    out.extend(axiom_suite(&ph, &words, w, n + 1, "letters"));
    out.extend(k_map_suite(&ph, &words, w, n + 1, "letters"));

    let mut counts = SuiteResult::new("inverse Oudom-Guin term counts are factorials");
    let mut fact = 1i64;
    for k in 1..=n + 2 {
        fact *= k as i64;
        let x = Word((1..=k).map(|i| MagmaTerm::leaf(&format!("x{i}"))).collect());
        let r = ph.og_inverse(&x);
        counts.check(r.term_count == coeff(fact), || format!("n = {k}"));
    }
    out.push(counts);
    out
}

/// Suites on the enveloping algebras of the frozen fixtures.
pub fn pbw_suites(bounds: &Bounds) -> Vec<SuiteResult> {
    let mut validation = SuiteResult::new("PBW fixtures validate as expected");
    let mut antipode = SuiteResult::new("PBW antipode matches Takeuchi");
    let mut axiom = SuiteResult::new("PBW antipode axiom");
    let mut quotient = SuiteResult::new("PBW antipode is the image of the free one");
    for (label, text, valid) in [
        ("abelian", fixtures::ABELIAN, true),
        ("pre-Lie", fixtures::PRE_LIE, true),
        ("post-Lie", fixtures::POST_LIE, true),
        ("broken", fixtures::BROKEN, false),
    ] {
        let algebra = parse_algebra(text).expect("fixtures parse");
        let report = algebra.validate();
        validation.check(report.passed() == valid, || label.to_owned());
        let Ok(valid) = algebra.validated() else {
            continue;
        };
        let uea = Uea::new(valid);
        for m in uea.monomials(bounds.pbw_degree) {
            let s = uea.sub_antipode(&m);
            antipode.check(uea.sub_antipode_takeuchi(&m).as_ref() == Ok(&s), || {
                format!("{label}: {m}")
            });
            axiom.check(uea.satisfies_antipode_axiom(&m), || format!("{label}: {m}"));
            let image = uea.normal_order_lin(&uea.tensor_algebra().sub_antipode(&m));
            quotient.check(image == s, || format!("{label}: {m}"));
        }
    }
    vec![validation, antipode, axiom, quotient]
}

/// One row of the comparison between the cancellation-free formula and the
/// Takeuchi series on the same input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchmarkRow {
    pub closure: &'static str,
    pub input: String,
    pub cancellation_free: ExpansionStats,
    pub takeuchi: ExpansionStats,
}

impl fmt::Display for BenchmarkRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, t) = (&self.cancellation_free, &self.takeuchi);
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.closure,
            self.input,
            c.generated,
            c.surviving,
            t.generated,
            t.surviving,
            t.sign_mixed
        )
    }
}

/// Header matching the columns of [`BenchmarkRow`].
pub const BENCHMARK_HEADER: &str =
    "closure\tinput\tcf generated\tcf surviving\ttakeuchi generated\ttakeuchi surviving\ttakeuchi sign-mixed";

/// Generated and surviving monomials of `S_GL` on every tree with at most
/// `max_nodes` nodes and of `S_⊳` on every forest with at most `max_nodes`
/// nodes.
pub fn benchmark(max_nodes: usize) -> Vec<BenchmarkRow> {
    let gl = GrossmanLarson::new();
    let mut rows = Vec::new();
    for tau in all_trees(max_nodes) {
        let parts: Vec<GlElement> = gl
            .antipode_terms(&tau)
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        let value = gl.antipode(&tau);
        let Ok(tk) = takeuchi_expansion(&gl.closure(), &LinComb::basis(tau.clone())) else {
            continue;
        };
        rows.push(BenchmarkRow {
            closure: "gl",
            input: tau.to_string(),
            cancellation_free: ExpansionStats::from_parts(&parts, &value),
            takeuchi: tk.stats(),
        });
    }
    let ph = PostHopf::new(TreeMagma);
    let closure = ph.sub_adjacent();
    for x in forest_words(max_nodes) {
        if x.is_empty() {
            continue;
        }
        let parts: Vec<Tensor<OrderedTree>> = ph
            .sub_antipode_terms(&x)
            .into_iter()
            .map(|(_, v)| v)
            .collect();
        let value = ph.sub_antipode(&x);
        let Ok(tk) = takeuchi_expansion(&closure, &LinComb::basis(x.clone())) else {
            continue;
        };
        rows.push(BenchmarkRow {
            closure: "sub",
            input: x.to_string(),
            cancellation_free: ExpansionStats::from_parts(&parts, &value),
            takeuchi: tk.stats(),
        });
    }
    rows
}

/// Every suite.
pub fn run_all(bounds: &Bounds) -> Vec<SuiteResult> {
    let mut out = forest_suites(bounds);
    out.extend(letter_suites(bounds));
    out.extend(gl_suites(bounds));
    out.extend(pbw_suites(bounds));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suites_pass() {
        for r in run_all(&Bounds::quick()) {
            assert!(r.ok(), "{r}");
            assert!(r.passed > 0, "{r}");
        }
    }

    #[test]
    fn enumerations() {
        assert_eq!(forest_words(3).len(), 1 + 1 + 2 + 5);
        assert_eq!(letter_words(2).len(), 7);
        assert_eq!(all_trees(4).len(), 1 + 1 + 2 + 5);
    }

    #[test]
    fn benchmark_rows() {
        let rows = benchmark(3);
        assert!(rows.iter().all(|r| r.cancellation_free.sign_mixed == 0));
        let cherry = rows
            .iter()
            .find(|r| r.closure == "gl" && r.input == "(()())")
            .unwrap();
        assert_eq!(cherry.cancellation_free.surviving, 2);
        assert_eq!(cherry.takeuchi.sign_mixed, 1);
    }
}
