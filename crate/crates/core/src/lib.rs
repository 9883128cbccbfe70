//! Exact construction and verification of real equiangular line sets.
//!
//! A set of `M` unit vectors `{fᵢ}` in `ℝᴺ` spans equiangular lines when
//! `|⟨fᵢ,fⱼ⟩|` is the same for every pair. This crate builds the classical
//! catalog of such sets — explicit building blocks, compositions of blocks
//! over incidence charts, and parametric families — and verifies all of their
//! claimed properties in exact arithmetic: no floating-point value ever
//! participates in a verdict.
//!
//! - [`exact`]: the number kernel, quadratic-radical arithmetic over ℚ.
//! - [`frames`]: line sets, Gram analysis, tightness, the Welch/Gerzon
//!   bounds and the odd-parity angle condition as executable checks.
//! - [`construct`]: parametric generators and the placement-plan engine
//!   that embeds building-block copies into ambient coordinates.
//! - [`catalog`]: every cataloged matrix with as-printed and corrected
//!   variants, plus the builtin placement plans.
//! - [`matrixfile`]: the exact JSON interchange format.
//!
//! Pairwise verification is data-parallel by default (the `parallel`
//! feature); disabling the feature falls back to an identical sequential
//! path.

pub mod catalog;
pub mod construct;
pub mod exact;
pub mod frames;
pub mod matrixfile;

pub use exact::{Rational, Surd};
pub use frames::{verify_equiangular, LineSet, VerificationReport};
