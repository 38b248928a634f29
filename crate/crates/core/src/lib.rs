//! trivext-core: exact-arithmetic toolkit for trivial extension algebras.
//!
//! The pipeline, roughly in dependency order:
//!
//! * [`field`] / [`matrix`] / [`poly`] — scalars (Q and GF(p)), dense exact
//!   linear algebra, integer characteristic polynomials.
//! * [`algebra`] — finite-dimensional algebras presented by a multiplication
//!   table over a based quiver-graded skeleton: path algebras, incidence
//!   algebras, trivial extensions T(A) = A + D(A), tensor products, and the
//!   enveloping algebra A^e.
//! * [`module`] / [`resolution`] — right modules graded by vertices,
//!   projective covers, syzygies, and the orbit engine that decides whether
//!   all simples (or the regular bimodule) are syzygy-periodic.
//! * [`coxeter`] — Coxeter matrix -C^{-T}C of a finite-global-dimension
//!   algebra and its (possible) finite order, used as a cheap periodicity
//!   screen.
//! * [`poset`] / [`canon`] / [`enumerate`] — finite posets and distributive
//!   lattices, a canonical form for isomorphism classes, and exhaustive
//!   enumeration up to isomorphism.
//! * [`dynkin`] — closed-form Coxeter numbers, fractional Calabi-Yau
//!   dimensions and period formulas, kept independent of the engine so the
//!   two can be cross-checked.
//!
//! Everything is exact: no floating point anywhere.

pub mod algebra;
pub mod canon;
pub mod coxeter;
pub mod dynkin;
pub mod enumerate;
pub mod field;
pub mod matrix;
pub mod module;
pub mod poly;
pub mod poset;
pub mod resolution;
