//! Exact positivity for torus-equivariant vector bundles, by restriction to
//! torus-invariant curves.
//!
//! Two geometries are covered, both entirely through their fixed-point and
//! invariant-curve combinatorics, in exact integer arithmetic:
//!
//! * varieties built as iterated ℙ¹-fibration towers over reduced Weyl-group
//!   words ([`bsdh`]): fixed points are bit galleries, invariant curves are
//!   fibers and section lifts, and line-bundle degrees on curves come from
//!   localization weights (computed two independent ways and cross-checked);
//! * wonderful compactifications of minimal-rank symmetric spaces
//!   ([`wonderful`]): curve classes are classified by a validated lattice
//!   involution, and restriction degrees arrive as explicit tables.
//!
//! In both cases a bundle is nef (ample) iff all split-type entries over all
//! invariant curves are ≥ 0 (> 0), and its Seshadri constant at a fixed
//! point is the minimum split-type entry over the curves through the point.
//! [`bundle`] is the split-type calculus (⊕, ⊗, Sym, dual, tables) those
//! verdicts consume; [`rootsys`] and [`weyl`] are the exact root-system and
//! Weyl-group layers underneath; [`selftest`] is the runnable invariant
//! corpus behind the CLI's `selftest` command.

pub mod bsdh;
pub mod bundle;
pub mod error;
mod linalg;
pub mod rootsys;
pub mod selftest;
pub mod weyl;
pub mod wonderful;

pub use error::{Error, Result};
