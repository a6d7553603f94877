//! Frozen two-dimensional algebras used by the tests and the command line.
//!
//! The pre-Lie and post-Lie examples were selected from an exhaustive search
//! over structure constants in `{-1, 0, 1}`; the search is rerun by the test
//! suite.

/// Abelian bracket, zero product.
pub const ABELIAN: &str = "dimension 2\n";

/// Abelian bracket, a pre-Lie product.
pub const PRE_LIE: &str = "\
dimension 2
triangle 1 1 -> -e1 - e2
triangle 1 2 -> -e1 - e2
triangle 2 1 -> e1 + e2
triangle 2 2 -> e1 + e2
";

/// A post-Lie algebra with nonzero bracket.
pub const POST_LIE: &str = "\
dimension 2
bracket 1 2 -> e1 + e2
triangle 1 1 -> -e1 - e2
triangle 1 2 -> -e1 - e2
triangle 2 1 -> e1 + e2
triangle 2 2 -> e1 + e2
";

/// Abelian bracket with a product that is not pre-Lie: the action identity
/// fails on `(e1, e2, e1)`.
pub const BROKEN: &str = "\
dimension 2
triangle 1 2 -> e2
triangle 2 1 -> e1
";
