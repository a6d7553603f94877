//! Exact symbolic computation in the free post-Hopf algebra over a magma,
//! its sub-adjacent Hopf algebra, the K-map, and the Grossman-Larson
//! Hopf algebra of ordered trees, together with structure-constant post-Lie
//! algebras and their enveloping algebras.
//!
//! - [`kernel`]: rational linear combinations, enumerators, Takeuchi's
//!   antipode.
//! - [`trees`]: ordered trees, forests, left grafting, `B⁺`/`B⁻`.
//! - [`magma`]: the magma trait with tree and free-term instances.
//! - [`posthopf`]: `⊳`, `*_⊳`, the twisted product `⧐` and `S_⊳`.
//! - [`maps`]: the K-map, its inverse, and the inverse Oudom-Guin map.
//! - [`gl`]: the Grossman-Larson Hopf algebra and its antipode.
//! - [`pbw`]: post-Lie algebras from structure constants, PBW normal forms.
//! - [`selfcheck`]: bounded invariant suites.

pub mod gl;
pub mod kernel;
pub mod magma;
pub mod maps;
pub mod pbw;
pub mod posthopf;
pub mod selfcheck;
pub mod trees;
