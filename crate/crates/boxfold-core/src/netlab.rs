//! Decoding, unfolding, verification, classification, canonicalization.

/// Classification of a net.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NetClass {
    Simple,
    Touching,
    Overlapping,
}

/// Decoded model.
#[derive(Debug, Clone)]
pub struct SolutionRecord {}

/// A 2D net.
#[derive(Debug, Clone)]
pub struct Net {}

/// A verified solution.
#[derive(Debug, Clone)]
pub struct Verified {}
