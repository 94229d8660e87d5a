//! Clause families for cut edges, orientations, directions, forbidden
//! patterns, inter-box equivalence, and symmetry-broken subproblems.

use alloc::vec::Vec;

/// Encoding toggles.
#[derive(Debug, Clone)]
pub struct EncodeOptions {}

/// One symmetry-broken subproblem of a pair search.
#[derive(Debug, Clone)]
pub struct Subproblem {
    pub id: u32,
    pub unit_squares: Vec<u32>,
}
