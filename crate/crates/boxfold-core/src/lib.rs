//! Core library for finding and enumerating common unfoldings of boxes.
//!
//! Everything in this crate is pure and allocation-only (`no_std` +
//! `alloc`): the surface model of an `a x b x c` box, the CNF clause
//! families over cut edges, square orientations, edge directions and
//! inter-box mappings, and the verifier that unfolds cut sets into nets,
//! classifies them, and canonicalizes them for deduplication.
//!
//! Solving, parallel orchestration, file formats, and the CLI live in the
//! companion `boxfold` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cnf;
pub mod encode;
pub mod netlab;
pub mod surface;

pub use cnf::{Cnf, Lit, VarKey, VarMap};
pub use encode::{EncodeOptions, Subproblem};
pub use netlab::{Net, NetClass, SolutionRecord, Verified};
pub use surface::{BoxDims, EdgeId, Face, SquareId, SurfaceGraph};
