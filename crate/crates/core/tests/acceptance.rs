//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use posthopf::gl::{GlElement, GrossmanLarson};
use posthopf::kernel::{
    antipode_partitions, coeff, max_ordered_set_partitions, takeuchi_antipode, LinComb,
};
use posthopf::magma::{parse_term_word, FreeMagma, MagmaTerm, TreeMagma};
use posthopf::maps::MapResult;
use posthopf::posthopf::{antipode_t, letters_as_words, PostHopf, Tensor, Word};
use posthopf::selfcheck::{
    benchmark, forest_suites, gl_suites, letter_suites, pbw_suites, Bounds, SuiteResult,
    BENCHMARK_HEADER,
};
use posthopf::trees::{graft_left, parse_forest, parse_tree, OrderedTree};

fn lw(s: &str) -> Word<MagmaTerm> {
    Word(parse_term_word(s).expect("word"))
}

fn letters(terms: &[(i64, &str)]) -> Tensor<MagmaTerm> {
    terms.iter().map(|&(c, s)| (lw(s), coeff(c))).collect()
}

fn t(s: &str) -> OrderedTree {
    parse_tree(s).expect("tree")
}

fn trees(terms: &[(i64, &str)]) -> GlElement {
    terms.iter().map(|&(c, s)| (t(s), coeff(c))).collect()
}

fn fw(s: &str) -> Word<OrderedTree> {
    Word(parse_forest(s).expect("forest").0)
}

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, title: &str, ok: bool, detail: String) {
        let status = if ok { "PASS" } else { "FAIL" };
        if !ok {
            self.failures += 1;
        }
        if detail.is_empty() {
            println!("{status} {id} {title}");
        } else {
            println!("{status} {id} {title} ({detail})");
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn golden_antipode() -> bool {
    let p = PostHopf::new(FreeMagma);
    let two = letters(&[(1, "x2 x1"), (1, "(x1>x2)"), (1, "(x2>x1)")]);
    let three = letters(&[
        (-1, "x3 x2 x1"),
        (-1, "(x1>x3) x2"),
        (-1, "x3 (x1>x2)"),
        (-1, "(x2>x3) x1"),
        (-1, "x3 (x2>x1)"),
        (-1, "(x3>x2) x1"),
        (-1, "x2 (x3>x1)"),
        (-1, "((x1>x2)>x3)"),
        (-1, "(x2>(x1>x3))"),
        (-1, "((x1>x3)>x2)"),
        (-1, "(x3>(x1>x2))"),
        (-1, "((x2>x3)>x1)"),
        (-1, "(x3>(x2>x1))"),
    ]);
    three.len() == 13
        && p.sub_antipode(&lw("x1 x2")) == two
        && p.sub_antipode(&lw("x1 x2 x3")) == three
}

fn golden_grafting() -> bool {
    let sum =
        |xs: &[&str]| -> LinComb<OrderedTree> { xs.iter().map(|s| (t(s), coeff(1))).collect() };
    graft_left(&t("(())"), &t("(()()())"))
        == sum(&[
            "((())()()())",
            "(((()))()())",
            "(()((()))())",
            "(()()((())))",
        ])
        && graft_left(&t("(()())"), &t("((())())"))
            == sum(&[
                "((()())(())())",
                "(((()())())())",
                "((((()())))())",
                "((())((()())))",
            ])
}

fn golden_twisted() -> bool {
    let p = PostHopf::new(TreeMagma);
    let expected: Tensor<OrderedTree> = [
        (1, "((())()())"),
        (1, "(((())()))"),
        (2, "(((()))())"),
        (2, "((((()))))"),
        (1, "(()((())))"),
        (1, "((())(()))"),
        (1, "((()())())"),
        (1, "(((()())))"),
    ]
    .iter()
    .map(|&(c, s)| (fw(s), coeff(c)))
    .collect();
    let x = fw("() (())");
    let y = t("(())");
    p.btr(&x, &Word(vec![y.clone()])) == expected
        && letters_as_words(&p.btr_on_letter(&x.0, &y)) == expected
}

fn golden_gl_antipode() -> (bool, usize) {
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
    let contributing = gl
        .antipode_terms(&tau)
        .into_iter()
        .filter(|(_, v)| !v.is_zero())
        .count();
    let ok = gl.antipode(&tau) == expected
        && takeuchi_antipode(&gl.closure(), &LinComb::basis(tau)).as_ref() == Ok(&expected);
    (ok && contributing == 10, contributing)
}

fn golden_maps() -> bool {
    let p = PostHopf::new(FreeMagma);
    let four = letters(&[
        (1, "x1 x2 x3 x4"),
        (-1, "(x1>x2) x3 x4"),
        (-1, "x2 (x1>x3) x4"),
        (-1, "x2 x3 (x1>x4)"),
        (-1, "x1 (x2>x3) x4"),
        (-1, "x1 x3 (x2>x4)"),
        (-1, "x1 x2 (x3>x4)"),
        (1, "(x1>x2) (x3>x4)"),
        (1, "(x1>x3) (x2>x4)"),
        (1, "(x2>x3) (x1>x4)"),
        (1, "x1 ((x2>x3)>x4)"),
        (1, "x1 (x3>(x2>x4))"),
        (1, "x2 ((x1>x3)>x4)"),
        (1, "x2 (x3>(x1>x4))"),
        (1, "x3 ((x1>x2)>x4)"),
        (1, "x3 (x2>(x1>x4))"),
        (1, "((x1>x2)>x3) x4"),
        (1, "(x2>(x1>x3)) x4"),
        (-1, "(((x1>x2)>x3)>x4)"),
        (-1, "((x1>x3)>(x2>x4))"),
        (-1, "((x2>(x1>x3))>x4)"),
        (-1, "((x2>x3)>(x1>x4))"),
        (-1, "(x3>((x1>x2)>x4))"),
        (-1, "(x3>(x2>(x1>x4)))"),
    ]);
    let MapResult { value, term_count } = p.og_inverse(&lw("x1 x2 x3 x4"));
    let og_ok = four.len() == 24 && value == four && term_count == coeff(24);

    let x = lw("x1 x2 x3");
    let k3 = letters(&[
        (1, "x1 x2 x3"),
        (-1, "x1 (x2>x3)"),
        (-1, "(x1>x2) x3"),
        (-1, "x2 (x1>x3)"),
        (1, "((x1>x2)>x3)"),
        (1, "(x2>(x1>x3))"),
    ]);
    let sk = letters(&[
        (-1, "x3 x2 x1"),
        (-1, "(x2>x3) x1"),
        (-1, "x3 (x1>x2)"),
        (-1, "(x1>x3) x2"),
        (-1, "((x1>x2)>x3)"),
        (-1, "(x2>(x1>x3))"),
    ]);
    let kx = p.k_map_closed(&x);
    let s = kx.extend(antipode_t);
    let k_ok = kx == k3
        && p.k_map_recursive(&x) == k3
        && s == sk
        && p.k_map_inverse_lin(&s) == p.sub_antipode(&x);
    og_ok && k_ok
}

fn summarize(suites: &[&SuiteResult]) -> (bool, String) {
    let checks: usize = suites.iter().map(|s| s.passed + s.failed).sum();
    let bad: Vec<String> = suites
        .iter()
        .filter(|s| !s.ok())
        .map(|s| format!("{}: {}", s.name, s.failures.join("; ")))
        .collect();
    let ok = bad.is_empty() && checks > 0;
    let mut detail = format!("{} suites, {checks} checks", suites.len());
    if !bad.is_empty() {
        detail.push_str(&format!(", failing: {}", bad.join(" | ")));
    }
    (ok, detail)
}

const ORACLE_SUITES: &[&str] = &[
    "antipode routes agree (forests)",
    "antipode routes agree (letters)",
    "twisted product forms agree (forests)",
    "twisted product forms agree (letters)",
    "twisted product equals the grafting sum (trees)",
    "GL antipode routes agree",
    "GL product forms agree",
];

const COUNT_SUITES: &[&str] = &["inverse Oudom-Guin term counts are factorials"];

const SIGN_SUITES: &[&str] = &[
    "antipode sign purity (forests)",
    "antipode sign purity (letters)",
    "GL antipode sign purity and degree",
];

fn main() -> ExitCode {
    let mut report = Report { failures: 0 };
    let bounds = Bounds::default();

    let (ok, time) = timed(golden_antipode);
    report.line(
        "1a",
        "sub-adjacent antipode of x1x2 and x1x2x3 (3 and 13 terms)",
        ok && time < Duration::from_secs(1),
        format!("{:.3}s", time.as_secs_f64()),
    );
    report.line("1b", "left-grafting sums", golden_grafting(), String::new());
    report.line(
        "1c",
        "twisted product of () (()) with (()) (8 trees)",
        golden_twisted(),
        String::new(),
    );
    let (ok, contributing) = golden_gl_antipode();
    report.line(
        "1d",
        "Grossman-Larson antipode of (()()(())) (10 trees)",
        ok,
        format!("{contributing} contributing partitions"),
    );
    report.line(
        "1e",
        "inverse Oudom-Guin map of x1x2x3x4 and K-map route on x1x2x3",
        golden_maps(),
        String::new(),
    );

    let (suites, time) = timed(|| {
        let mut all = forest_suites(&bounds);
        all.extend(letter_suites(&bounds));
        all.extend(gl_suites(&bounds));
        all
    });
    let oracle: Vec<&SuiteResult> = suites
        .iter()
        .filter(|s| ORACLE_SUITES.contains(&s.name.as_str()))
        .collect();
    let (ok, detail) = summarize(&oracle);
    report.line(
        "2",
        "oracle equivalence on the bounded ranges",
        ok && oracle.len() == ORACLE_SUITES.len() && time < Duration::from_secs(300),
        format!("{detail}, {:.1}s for all suites", time.as_secs_f64()),
    );
    let axioms: Vec<&SuiteResult> = suites
        .iter()
        .filter(|s| {
            let n = s.name.as_str();
            !ORACLE_SUITES.contains(&n) && !COUNT_SUITES.contains(&n) && !SIGN_SUITES.contains(&n)
        })
        .collect();
    let (ok, detail) = summarize(&axioms);
    report.line("3", "post-Hopf and Hopf axiom suites", ok, detail);

    let counts: Vec<&SuiteResult> = suites
        .iter()
        .filter(|s| COUNT_SUITES.contains(&s.name.as_str()))
        .collect();
    let (ok, detail) = summarize(&counts);
    let partitions = antipode_partitions(3).map(|v| v.len()).unwrap_or(0);
    let ordered = (
        max_ordered_set_partitions(3).len(),
        max_ordered_set_partitions(4).len(),
    );
    let fact6 = PostHopf::new(FreeMagma)
        .og_inverse(&lw("x1 x2 x3 x4 x5 x6"))
        .term_count;
    report.line(
        "4",
        "partition and term counts",
        ok && partitions == 10 && ordered == (5, 15) && fact6 == coeff(720),
        format!(
            "{partitions} antipode partitions of 3, {} and {} max-ordered partitions, {detail}",
            ordered.0, ordered.1
        ),
    );

    let signs: Vec<&SuiteResult> = suites
        .iter()
        .filter(|s| SIGN_SUITES.contains(&s.name.as_str()))
        .collect();
    let (signs_ok, detail) = summarize(&signs);
    let rows = benchmark(bounds.forest_nodes);
    println!("{BENCHMARK_HEADER}");
    for row in rows.iter().filter(|r| r.takeuchi.sign_mixed > 0).take(12) {
        println!("{row}");
    }
    let cf_clean = rows.iter().all(|r| r.cancellation_free.sign_mixed == 0);
    let cancelling = rows
        .iter()
        .filter(|r| r.closure == "gl" && r.takeuchi.sign_mixed > 0 && t(&r.input).node_count() >= 3)
        .count();
    report.line(
        "5",
        "cancellation-free expansions against the Takeuchi series",
        signs_ok && cf_clean && cancelling > 0,
        format!(
            "{} rows, {cancelling} trees with Takeuchi cancellations, {detail}",
            rows.len()
        ),
    );

    let pbw = pbw_suites(&bounds);
    let refs: Vec<&SuiteResult> = pbw.iter().collect();
    let (ok, detail) = summarize(&refs);
    report.line("6", "PBW validation and enveloping antipode", ok, detail);

    if report.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
