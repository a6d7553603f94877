//! Finite-dimensional post-Lie algebras given by structure constants, and
//! their universal enveloping algebras in the PBW basis.

pub mod fixtures;
mod uea;

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::kernel::{Coefficient, LinComb};
use crate::magma::Magma;

pub use uea::{normal_order, BracketChoice, Uea, UeaClosure};

/// The basis vector `e_{k+1}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Basis(pub usize);

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0 + 1)
    }
}

impl fmt::Debug for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub type Vector = LinComb<Basis>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct AlgebraParseError {
    pub line: usize,
    pub message: String,
}

/// An unreadable monomial such as `e1 e3` over a 2-dimensional algebra.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at position {position}: {message}")]
pub struct WordParseError {
    pub position: usize,
    pub message: String,
}

/// Parses a whitespace-separated word `e_{k₁} e_{k₂} ⋯` over a
/// `dim`-dimensional algebra. `1` or blank input is the empty word.
pub fn parse_basis_word(text: &str, dim: usize) -> Result<Vec<Basis>, WordParseError> {
    if text.trim() == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for token in text.split(' ') {
        let position = offset;
        offset += token.len() + 1;
        if token.is_empty() {
            continue;
        }
        let err = |message: String| WordParseError { position, message };
        let digits = token
            .strip_prefix('e')
            .ok_or_else(|| err(format!("expected a basis vector e<k>, found {token:?}")))?;
        let k: usize = digits
            .parse()
            .map_err(|_| err(format!("expected an index after 'e' in {token:?}")))?;
        if k == 0 || k > dim {
            return Err(err(format!("basis index e{k} out of range 1..={dim}")));
        }
        out.push(Basis(k - 1));
    }
    Ok(out)
}

/// A bracket `[·,·]` and a product `⊳` on `k^d`, stored as tables of
/// structure constants.
#[derive(Clone, PartialEq, Eq)]
pub struct StructurePostLie {
    dim: usize,
    bracket: Vec<Vec<Vector>>,
    triangle: Vec<Vec<Vector>>,
}

impl StructurePostLie {
    /// The zero algebra of dimension `dim`.
    pub fn zero(dim: usize) -> Self {
        StructurePostLie {
            dim,
            bracket: vec![vec![LinComb::zero(); dim]; dim],
            triangle: vec![vec![LinComb::zero(); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis(&self) -> impl Iterator<Item = Basis> {
        (0..self.dim).map(Basis)
    }

    /// Sets `[e_i, e_j]` and `[e_j, e_i]` so that the bracket stays
    /// antisymmetric.
    pub fn set_bracket(&mut self, i: Basis, j: Basis, value: Vector) {
        self.bracket[j.0][i.0] = -&value;
        self.bracket[i.0][j.0] = value;
    }

    /// Sets `[e_i, e_j]` alone.
    pub fn set_bracket_entry(&mut self, i: Basis, j: Basis, value: Vector) {
        self.bracket[i.0][j.0] = value;
    }

    pub fn set_triangle(&mut self, i: Basis, j: Basis, value: Vector) {
        self.triangle[i.0][j.0] = value;
    }

    pub fn bracket(&self, i: Basis, j: Basis) -> &Vector {
        &self.bracket[i.0][j.0]
    }

    pub fn triangle(&self, i: Basis, j: Basis) -> &Vector {
        &self.triangle[i.0][j.0]
    }

    pub fn bracket_lin(&self, a: &Vector, b: &Vector) -> Vector {
        a.bilinear(b, |x, y| self.bracket(*x, *y).clone())
    }

    pub fn triangle_lin(&self, a: &Vector, b: &Vector) -> Vector {
        a.bilinear(b, |x, y| self.triangle(*x, *y).clone())
    }

    /// Whether the bracket vanishes identically.
    pub fn is_pre_lie(&self) -> bool {
        self.bracket.iter().flatten().all(LinComb::is_zero)
    }

    /// Checks every identity on every basis pair or triple.
    pub fn validate(&self) -> ValidationReport {
        let e = |i: usize| Vector::basis(Basis(i));
        let mut report = ValidationReport::default();
        let mut check = |identity: Identity, witness: Vec<usize>, residual: Vector| {
            report.checked += 1;
            if !residual.is_zero() {
                report.failures.push(Failure {
                    identity,
                    witness: witness.into_iter().map(Basis).collect(),
                    residual,
                });
            }
        };
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let residual = self.bracket(Basis(i), Basis(j)) + self.bracket(Basis(j), Basis(i));
                check(Identity::Antisymmetry, vec![i, j], residual);
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let (x, y, z) = (e(i), e(j), e(k));
                    let b = |a: &Vector, c: &Vector| self.bracket_lin(a, c);
                    let t = |a: &Vector, c: &Vector| self.triangle_lin(a, c);

                    let mut jacobi = b(&x, &b(&y, &z));
                    jacobi += &b(&y, &b(&z, &x));
                    jacobi += &b(&z, &b(&x, &y));
                    check(Identity::Jacobi, vec![i, j, k], jacobi);

                    let mut derivation = t(&x, &b(&y, &z));
                    derivation -= &b(&t(&x, &y), &z);
                    derivation -= &b(&y, &t(&x, &z));
                    check(Identity::Derivation, vec![i, j, k], derivation);

                    let mut action = b(&x, &y);
                    action += &t(&x, &y);
                    action -= &t(&y, &x);
                    let mut action = t(&action, &z);
                    action -= &t(&x, &t(&y, &z));
                    action += &t(&y, &t(&x, &z));
                    check(Identity::Action, vec![i, j, k], action);
                }
            }
        }
        report
    }

    pub fn validated(self) -> Result<ValidatedPostLie, ValidationReport> {
        let report = self.validate();
        if report.passed() {
            Ok(ValidatedPostLie(self))
        } else {
            Err(report)
        }
    }
}

/// The identities a post-Lie algebra must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    /// `[x, y] = -[y, x]`
    Antisymmetry,
    /// `[x, [y, z]] + [y, [z, x]] + [z, [x, y]] = 0`
    Jacobi,
    /// `x ⊳ [y, z] = [x ⊳ y, z] + [y, x ⊳ z]`
    Derivation,
    /// `([x, y] + x ⊳ y - y ⊳ x) ⊳ z = x ⊳ (y ⊳ z) - y ⊳ (x ⊳ z)`
    Action,
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Identity::Antisymmetry => "antisymmetry",
            Identity::Jacobi => "jacobi",
            Identity::Derivation => "derivation",
            Identity::Action => "action",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub identity: Identity,
    pub witness: Vec<Basis>,
    pub residual: Vector,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.witness.iter().map(Basis::to_string).collect();
        write!(
            f,
            "{} fails on ({}): residual {}",
            self.identity,
            names.join(", "),
            self.residual
        )
    }
}

/// Outcome of [`StructurePostLie::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for failure in &self.failures {
            writeln!(f, "{failure}")?;
        }
        write!(f, "{} checks, {} failed", self.checked, self.failures.len())
    }
}

/// A structure-constant algebra that passed [`StructurePostLie::validate`].
#[derive(Clone, PartialEq, Eq)]
pub struct ValidatedPostLie(StructurePostLie);

impl ValidatedPostLie {
    pub fn algebra(&self) -> &StructurePostLie {
        &self.0
    }

    /// `[e_i, e_j]_⊳ = e_i ⊳ e_j - e_j ⊳ e_i + [e_i, e_j]`.
    pub fn sub_adjacent_bracket(&self, i: Basis, j: Basis) -> Vector {
        let a = &self.0;
        let mut out = a.triangle(i, j) - a.triangle(j, i);
        out += a.bracket(i, j);
        out
    }

    pub fn sub_adjacent_bracket_lin(&self, a: &Vector, b: &Vector) -> Vector {
        a.bilinear(b, |x, y| self.sub_adjacent_bracket(*x, *y))
    }

    /// The magma `(g, ⊳)`, forgetting the bracket.
    pub fn magma(&self) -> StructureMagma {
        StructureMagma(self.0.clone())
    }
}

impl std::ops::Deref for ValidatedPostLie {
    type Target = StructurePostLie;

    fn deref(&self) -> &StructurePostLie {
        &self.0
    }
}

/// `(g, ⊳)` as a magma on the basis, for building `T(g)` over it.
#[derive(Clone)]
pub struct StructureMagma(StructurePostLie);

impl Magma for StructureMagma {
    type Letter = Basis;

    fn product(&self, a: &Basis, b: &Basis) -> Vector {
        self.0.triangle(*a, *b).clone()
    }

    fn grading(&self, _: &Basis) -> usize {
        1
    }

    fn is_graded(&self) -> bool {
        false
    }
}

fn write_vector(f: &mut fmt::Formatter<'_>, v: &Vector) -> fmt::Result {
    if v.is_zero() {
        return f.write_str("0");
    }
    for (n, (b, c)) in v.iter().enumerate() {
        let text = crate::kernel::format_coefficient(c);
        let (neg, abs) = match text.strip_prefix('-') {
            Some(rest) => (true, rest.to_owned()),
            None => (false, text),
        };
        match (n, neg) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        if abs != "1" {
            write!(f, "{abs} ")?;
        }
        write!(f, "{b}")?;
    }
    Ok(())
}

/// The algebra file format; zero entries are omitted.
impl fmt::Display for StructurePostLie {
    #[allow(clippy::needless_range_loop)]
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "dimension {}", self.dim)?;
        for (name, table) in [("bracket", &self.bracket), ("triangle", &self.triangle)] {
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let v = &table[i][j];
                    if v.is_zero() || (name == "bracket" && i > j && *v == -&table[j][i]) {
                        continue;
                    }
                    write!(f, "{name} {} {} -> ", i + 1, j + 1)?;
                    write_vector(f, v)?;
                    writeln!(f)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for StructurePostLie {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_coefficient(text: &str) -> Option<Coefficient> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num: num_bigint::BigInt = num.parse().ok()?;
    let den: num_bigint::BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Coefficient::new(num, den))
}

/// Parses `c₁ e_{k₁} + c₂ e_{k₂} - ⋯` or `0`. Coefficients are optional
/// rationals `p` or `p/q`, optionally followed by `*`.
fn parse_vector(text: &str, dim: usize) -> Result<Vector, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(LinComb::zero());
    }
    if compact.is_empty() {
        return Err("missing right-hand side".into());
    }
    let bytes = compact.as_bytes();
    let mut out = LinComb::zero();
    let mut i = 0;
    while i < bytes.len() {
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(format!("expected '+' or '-' before {:?}", &compact[i..]));
        }
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let mut c = if start == i {
            crate::kernel::coeff(1)
        } else {
            parse_coefficient(&compact[start..i])
                .ok_or_else(|| format!("bad coefficient {:?}", &compact[start..i]))?
        };
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        if i >= bytes.len() || bytes[i] != b'e' {
            return Err(format!(
                "expected a basis vector e<k> at {:?}",
                &compact[i..]
            ));
        }
        i += 1;
        let start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let k: usize = compact[start..i]
            .parse()
            .map_err(|_| "expected an index after 'e'".to_owned())?;
        if k == 0 || k > dim {
            return Err(format!("basis index e{k} out of range 1..={dim}"));
        }
        if negative {
            c = -c;
        }
        out.add_term(Basis(k - 1), c);
    }
    Ok(out)
}

/// Parses the algebra file format:
///
/// ```text
/// # comment
/// dimension 2
/// bracket 1 2 -> e2
/// triangle 2 1 -> -1/2 e1 + e2
/// ```
///
/// Indices are 1-based. Unlisted entries are zero. A bracket entry whose
/// reverse is not listed is completed by antisymmetry.
pub fn parse_algebra(text: &str) -> Result<StructurePostLie, AlgebraParseError> {
    let mut algebra: Option<StructurePostLie> = None;
    let mut listed = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let err = |message: String| AlgebraParseError {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().unwrap_or("");
        match (head, algebra.as_mut()) {
            ("dimension" | "dim", None) => {
                let d: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .filter(|&d| d > 0)
                    .ok_or_else(|| err("expected a positive dimension".into()))?;
                if words.next().is_some() {
                    return Err(err("trailing input after dimension".into()));
                }
                algebra = Some(StructurePostLie::zero(d));
            }
            ("dimension" | "dim", Some(_)) => return Err(err("dimension given twice".into())),
            (_, None) => return Err(err("the first entry must be 'dimension <d>'".into())),
            ("bracket" | "triangle", Some(a)) => {
                let (lhs, rhs) = line
                    .split_once("->")
                    .ok_or_else(|| err("expected '->'".into()))?;
                let idx: Vec<&str> = lhs.split_whitespace().skip(1).collect();
                let parse_index = |s: &str| -> Result<Basis, AlgebraParseError> {
                    match s.parse::<usize>() {
                        Ok(k) if (1..=a.dim).contains(&k) => Ok(Basis(k - 1)),
                        _ => Err(err(format!("index {s:?} out of range 1..={}", a.dim))),
                    }
                };
                if idx.len() != 2 {
                    return Err(err("expected two indices".into()));
                }
                let (i, j) = (parse_index(idx[0])?, parse_index(idx[1])?);
                let value = parse_vector(rhs, a.dim).map_err(err)?;
                if head == "bracket" {
                    a.set_bracket_entry(i, j, value);
                    listed.push((i, j));
                } else {
                    a.set_triangle(i, j, value);
                }
            }
            (other, Some(_)) => return Err(err(format!("unknown entry {other:?}"))),
        }
    }
    let mut algebra = algebra.ok_or(AlgebraParseError {
        line: 0,
        message: "empty algebra description".into(),
    })?;
    for &(i, j) in &listed {
        if !listed.contains(&(j, i)) {
            let value = -algebra.bracket(i, j);
            algebra.set_bracket_entry(j, i, value);
        }
    }
    Ok(algebra)
}

impl FromStr for StructurePostLie {
    type Err = AlgebraParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_algebra(s)
    }
}
