//! `posthopf`: expansions in free post-Hopf algebras, the Grossman-Larson
//! algebra and enveloping algebras of post-Lie algebras.

use std::fmt::Display;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use posthopf::gl::{gl_coproduct, GrossmanLarson};
use posthopf::kernel::{format_coefficient, takeuchi_antipode, KernelError, LinComb};
use posthopf::magma::{parse_term_word, FreeMagma, Magma, MagmaTerm, TreeMagma};
use posthopf::pbw::{parse_algebra, parse_basis_word, Basis, Uea};
use posthopf::posthopf::{PostHopf, Tensor, Word};
use posthopf::selfcheck::{benchmark, run_all, Bounds, BENCHMARK_HEADER};
use posthopf::trees::{graft_left, parse_forest, parse_tree, OrderedTree};

#[derive(Parser)]
#[command(name = "posthopf", version, about)]
struct Cli {
    /// Which algebra the operands live in.
    #[arg(long, value_enum, default_value_t = Mode::Trees, global = true)]
    mode: Mode,
    /// Post-Lie algebra file for `--mode pbw`.
    #[arg(long, global = true)]
    algebra: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Refuse inputs of larger total degree.
    #[arg(long, default_value_t = 8, global = true)]
    max_degree: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// Forests of ordered trees under left grafting.
    Trees,
    /// Words in the free magma; terms are written like `(x1>x2)`.
    Letters,
    /// PBW monomials `e1 e2 ..` of the enveloping algebra of `--algebra`.
    Pbw,
}

impl Mode {
    fn name(self) -> &'static str {
        match self {
            Mode::Trees => "trees",
            Mode::Letters => "letters",
            Mode::Pbw => "pbw",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Closure {
    /// The sub-adjacent Hopf algebra of the current mode.
    Sub,
    /// The Grossman-Larson Hopf algebra.
    Gl,
}

#[derive(Subcommand)]
enum Command {
    /// Left grafting of one tree onto another.
    Graft { scion: String, rootstock: String },
    /// X ⊳ Y.
    Triangle { x: String, y: String },
    /// X *⊳ Y.
    Star { x: String, y: String },
    /// The twisted product X ⧐ Y.
    Btr { x: String, y: String },
    /// The sub-adjacent antipode, by the cancellation-free formula.
    SubAntipode { word: Vec<String> },
    /// Grossman-Larson product of two trees.
    GlProduct { tau: String, omega: String },
    /// Grossman-Larson coproduct of a tree.
    GlCoproduct { tree: String },
    /// Grossman-Larson antipode of a tree, by the cancellation-free formula.
    GlAntipode { tree: String },
    /// The K-map.
    Kmap { word: Vec<String> },
    /// The inverse K-map.
    KmapInv { word: Vec<String> },
    /// The inverse Oudom-Guin map, as a sum of nested products.
    OgInv { word: Vec<String> },
    /// The antipode by Takeuchi's series.
    Takeuchi {
        #[arg(long, value_enum, default_value_t = Closure::Sub)]
        closure: Closure,
        word: Vec<String>,
    },
    /// Checks the post-Lie identities of an algebra file.
    ValidateAlgebra { file: PathBuf },
    /// Runs the bounded invariant suites.
    Selfcheck {
        /// Smaller ranges.
        #[arg(long)]
        quick: bool,
        /// Also print generated and surviving monomial counts.
        #[arg(long)]
        benchmark: bool,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Graft { .. } => "graft",
            Command::Triangle { .. } => "triangle",
            Command::Star { .. } => "star",
            Command::Btr { .. } => "btr",
            Command::SubAntipode { .. } => "sub-antipode",
            Command::GlProduct { .. } => "gl-product",
            Command::GlCoproduct { .. } => "gl-coproduct",
            Command::GlAntipode { .. } => "gl-antipode",
            Command::Kmap { .. } => "kmap",
            Command::KmapInv { .. } => "kmap-inv",
            Command::OgInv { .. } => "og-inv",
            Command::Takeuchi { .. } => "takeuchi",
            Command::ValidateAlgebra { .. } => "validate-algebra",
            Command::Selfcheck { .. } => "selfcheck",
        }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            _ => 2,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

type Pair<L> = (Word<L>, Word<L>);

/// Something printable as one monomial of an expansion.
trait Monomial {
    fn parts(&self) -> Vec<String>;
    fn text(&self) -> String;
}

impl<L: Display> Monomial for Word<L> {
    fn parts(&self) -> Vec<String> {
        self.0.iter().map(ToString::to_string).collect()
    }

    fn text(&self) -> String {
        self.to_string()
    }
}

impl Monomial for OrderedTree {
    fn parts(&self) -> Vec<String> {
        vec![self.to_string()]
    }

    fn text(&self) -> String {
        self.to_string()
    }
}

impl Monomial for (OrderedTree, OrderedTree) {
    fn parts(&self) -> Vec<String> {
        vec![self.0.to_string(), self.1.to_string()]
    }

    fn text(&self) -> String {
        format!("{} ⊗ {}", self.0, self.1)
    }
}

#[derive(Serialize)]
struct JsonTerm {
    coeff: String,
    monomial: Vec<String>,
}

#[derive(Serialize)]
struct JsonExpansion<'a> {
    mode: &'a str,
    op: &'a str,
    terms: Vec<JsonTerm>,
}

struct Output {
    mode: Mode,
    op: &'static str,
    format: Format,
}

impl Output {
    fn expansion<K: Ord + Clone + Monomial>(&self, value: &LinComb<K>) -> Result<String> {
        match self.format {
            Format::Text => Ok(value
                .iter()
                .map(|(k, c)| format!("{}\t{}\n", format_coefficient(c), k.text()))
                .collect()),
            Format::Json => {
                let doc = JsonExpansion {
                    mode: self.mode.name(),
                    op: self.op,
                    terms: value
                        .iter()
                        .map(|(k, c)| JsonTerm {
                            coeff: format_coefficient(c),
                            monomial: k.parts(),
                        })
                        .collect(),
                };
                let mut text = serde_json::to_string_pretty(&doc)
                    .map_err(|e| CliError::Failed(e.to_string()))?;
                text.push('\n');
                Ok(text)
            }
        }
    }
}

fn guard(degree: usize, max: usize) -> Result<()> {
    if degree > max {
        return Err(CliError::Usage(format!(
            "input degree {degree} exceeds --max-degree {max}"
        )));
    }
    Ok(())
}

fn operand_error(text: &str, e: impl Display) -> CliError {
    CliError::Parse(format!("in {text:?}: {e}"))
}

fn tree(text: &str) -> Result<OrderedTree> {
    parse_tree(text).map_err(|e| operand_error(text, e))
}

fn parse_forest_word(text: &str) -> Result<Word<OrderedTree>> {
    parse_forest(text)
        .map(|f| Word(f.0))
        .map_err(|e| operand_error(text, e))
}

fn parse_letter_word(text: &str) -> Result<Word<MagmaTerm>> {
    parse_term_word(text)
        .map(Word)
        .map_err(|e| operand_error(text, e))
}

/// Binary and unary operations shared by the tree and letter modes.
fn free_op<M: Magma>(
    ph: &PostHopf<M>,
    command: &Command,
    parse: impl Fn(&str) -> Result<Word<M::Letter>>,
    max_degree: usize,
) -> Result<Tensor<M::Letter>> {
    let binary = |x: &str, y: &str| -> Result<Pair<M::Letter>> {
        let (x, y) = (parse(x)?, parse(y)?);
        guard(ph.weight(&x) + ph.weight(&y), max_degree)?;
        Ok((x, y))
    };
    let unary = |words: &[String]| -> Result<Word<M::Letter>> {
        let x = parse(&words.join(" "))?;
        guard(ph.weight(&x), max_degree)?;
        Ok(x)
    };
    Ok(match command {
        Command::Triangle { x, y } => {
            let (x, y) = binary(x, y)?;
            ph.triangle(&x, &y)
        }
        Command::Star { x, y } => {
            let (x, y) = binary(x, y)?;
            ph.star(&x, &y)
        }
        Command::Btr { x, y } => {
            let (x, y) = binary(x, y)?;
            ph.btr(&x, &y)
        }
        Command::SubAntipode { word } => ph.sub_antipode(&unary(word)?),
        Command::Kmap { word } => ph.k_map_closed(&unary(word)?),
        Command::KmapInv { word } => ph.k_map_inverse(&unary(word)?),
        Command::OgInv { word } => ph.og_inverse(&unary(word)?).value,
        Command::Takeuchi { word, .. } => ph
            .sub_antipode_takeuchi(&unary(word)?)
            .map_err(kernel_error)?,
        _ => unreachable!("dispatched elsewhere"),
    })
}

fn kernel_error(e: KernelError) -> CliError {
    CliError::Failed(e.to_string())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_uea(path: Option<&Path>) -> Result<Uea> {
    let path =
        path.ok_or_else(|| CliError::Usage("--mode pbw needs --algebra <file>".to_owned()))?;
    let algebra = parse_algebra(&read(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let valid = algebra.validated().map_err(|report| {
        CliError::Failed(format!(
            "{} is not a post-Lie algebra:\n{report}",
            path.display()
        ))
    })?;
    Ok(Uea::new(valid))
}

fn pbw_op(uea: &Uea, command: &Command, max_degree: usize) -> Result<Tensor<Basis>> {
    let dim = uea.algebra().dim();
    let parse = |text: &str| -> Result<Word<Basis>> {
        parse_basis_word(text, dim)
            .map(Word)
            .map_err(|e| operand_error(text, e))
    };
    let binary = |x: &str, y: &str| -> Result<(Tensor<Basis>, Tensor<Basis>)> {
        let (x, y) = (parse(x)?, parse(y)?);
        guard(x.len() + y.len(), max_degree)?;
        Ok((uea.normal_order(&x.0), uea.normal_order(&y.0)))
    };
    let unary = |words: &[String]| -> Result<Word<Basis>> {
        let x = parse(&words.join(" "))?;
        guard(x.len(), max_degree)?;
        Ok(x)
    };
    Ok(match command {
        Command::Triangle { x, y } => {
            let (x, y) = binary(x, y)?;
            uea.triangle_lin(&x, &y)
        }
        Command::Star { x, y } => {
            let (x, y) = binary(x, y)?;
            uea.star_lin(&x, &y)
        }
        Command::Btr { x, y } => {
            let (x, y) = binary(x, y)?;
            uea.btr_lin(&x, &y)
        }
        Command::SubAntipode { word } => uea.sub_antipode_lin(&uea.normal_order(&unary(word)?.0)),
        Command::Takeuchi { word, .. } => uea
            .sub_antipode_takeuchi(&unary(word)?)
            .map_err(kernel_error)?,
        other => {
            return Err(CliError::Usage(format!(
                "{} is not available in pbw mode",
                other.name()
            )))
        }
    })
}

fn gl_op(command: &Command, out: &Output, max_degree: usize) -> Result<String> {
    let gl = GrossmanLarson::new();
    let one = |text: &str| -> Result<OrderedTree> {
        let t = tree(text)?;
        guard(t.node_count(), max_degree)?;
        Ok(t)
    };
    match command {
        Command::GlProduct { tau, omega } => {
            let (a, b) = (tree(tau)?, tree(omega)?);
            guard(a.node_count() + b.node_count(), max_degree)?;
            out.expansion(&gl.product(&a, &b))
        }
        Command::GlCoproduct { tree } => out.expansion(&gl_coproduct(&one(tree)?)),
        Command::GlAntipode { tree } => out.expansion(&gl.antipode(&one(tree)?)),
        Command::Takeuchi { word, .. } => {
            let t = one(&word.join(" "))?;
            let value =
                takeuchi_antipode(&gl.closure(), &LinComb::basis(t)).map_err(kernel_error)?;
            out.expansion(&value)
        }
        _ => unreachable!("dispatched elsewhere"),
    }
}

fn validate(path: &Path) -> Result<String> {
    let algebra = parse_algebra(&read(path)?)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let report = algebra.validate();
    if report.passed() {
        Ok(format!("{report}\n"))
    } else {
        Err(CliError::Failed(report.to_string()))
    }
}

fn selfcheck(quick: bool, with_benchmark: bool) -> Result<String> {
    let bounds = if quick {
        Bounds::quick()
    } else {
        Bounds::default()
    };
    let results = run_all(&bounds);
    let mut text: String = results.iter().map(|r| format!("{r}\n")).collect();
    if with_benchmark {
        text.push_str(BENCHMARK_HEADER);
        text.push('\n');
        for row in benchmark(bounds.forest_nodes) {
            text.push_str(&format!("{row}\n"));
        }
    }
    let failed = results.iter().filter(|r| !r.ok()).count();
    if failed == 0 {
        text.push_str(&format!("{} suites passed\n", results.len()));
        Ok(text)
    } else {
        Err(CliError::Failed(format!(
            "{text}{failed} of {} suites failed",
            results.len()
        )))
    }
}

fn run(cli: &Cli) -> Result<String> {
    let out = Output {
        mode: cli.mode,
        op: cli.command.name(),
        format: cli.format,
    };
    let trees_only = |what: &str| -> Result<()> {
        if cli.mode == Mode::Trees {
            Ok(())
        } else {
            Err(CliError::Usage(format!("{what} needs --mode trees")))
        }
    };
    match &cli.command {
        Command::ValidateAlgebra { file } => validate(file),
        Command::Selfcheck { quick, benchmark } => selfcheck(*quick, *benchmark),
        Command::Graft { scion, rootstock } => {
            trees_only("graft")?;
            let (s, r) = (tree(scion)?, tree(rootstock)?);
            guard(s.node_count() + r.node_count(), cli.max_degree)?;
            out.expansion(&graft_left(&s, &r))
        }
        Command::GlProduct { .. } | Command::GlCoproduct { .. } | Command::GlAntipode { .. } => {
            trees_only(cli.command.name())?;
            gl_op(&cli.command, &out, cli.max_degree)
        }
        Command::Takeuchi {
            closure: Closure::Gl,
            ..
        } => {
            trees_only("takeuchi --closure gl")?;
            gl_op(&cli.command, &out, cli.max_degree)
        }
        command => match cli.mode {
            Mode::Trees => {
                let ph = PostHopf::new(TreeMagma);
                out.expansion(&free_op(&ph, command, parse_forest_word, cli.max_degree)?)
            }
            Mode::Letters => {
                let ph = PostHopf::new(FreeMagma);
                out.expansion(&free_op(&ph, command, parse_letter_word, cli.max_degree)?)
            }
            Mode::Pbw => {
                let uea = load_uea(cli.algebra.as_deref())?;
                out.expansion(&pbw_op(&uea, command, cli.max_degree)?)
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Failed(_) = e {
                let _ = writeln!(io::stdout(), "{e}");
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(e.exit_code())
        }
    }
}
