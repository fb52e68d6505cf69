//! Structured verification results.

use std::fmt;

use serde::Serialize;

/// First violation found by a verifier, with points rendered as labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Violation {
    PointCount { expected: usize, found: usize },
    BlockSize { block: usize, size: usize, allowed: Vec<usize> },
    UnknownPoint { block: usize, point: String },
    RepeatedPoint { block: usize, point: String },
    /// A pair covered the wrong number of times.
    PairCount { a: String, b: String, count: usize, expected: String },
    /// Two points of one group in a common block.
    IntraGroupPair { block: usize, a: String, b: String },
    GroupPartition { detail: String },
    /// An element of `G \ H` (or `H \ {0}`) with the wrong difference count.
    Difference { element: String, count: usize, expected: usize },
    /// A base block meets the subgroup it must avoid.
    MeetsSubgroup { block: usize, element: String },
    /// An element lies in two of the sets `B_i`, `-B_j`.
    BanffOverlap { element: String },
    /// Blocks and negatives miss an element of `G \ H` (perfect mode).
    NotCovered { element: String },
    NestedInBlock { block: usize, point: String },
    Other { detail: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::PointCount { expected, found } => {
                write!(f, "expected {expected} points, found {found}")
            }
            Violation::BlockSize { block, size, allowed } => {
                write!(f, "block {block} has size {size}, allowed {allowed:?}")
            }
            Violation::UnknownPoint { block, point } => {
                write!(f, "block {block} uses unknown point {point}")
            }
            Violation::RepeatedPoint { block, point } => {
                write!(f, "block {block} repeats point {point}")
            }
            Violation::PairCount { a, b, count, expected } => {
                write!(f, "pair {{{a}, {b}}} covered {count} times, expected {expected}")
            }
            Violation::IntraGroupPair { block, a, b } => {
                write!(f, "block {block} contains {a} and {b} from the same group")
            }
            Violation::GroupPartition { detail } => write!(f, "groups: {detail}"),
            Violation::Difference { element, count, expected } => {
                write!(f, "difference {element} occurs {count} times, expected {expected}")
            }
            Violation::MeetsSubgroup { block, element } => {
                write!(f, "base block {block} contains subgroup element {element}")
            }
            Violation::BanffOverlap { element } => {
                write!(f, "element {element} lies in two of the blocks and their negatives")
            }
            Violation::NotCovered { element } => {
                write!(f, "element {element} is not covered by the blocks and their negatives")
            }
            Violation::NestedInBlock { block, point } => {
                write!(f, "nested point {point} already lies in block {block}")
            }
            Violation::Other { detail } => f.write_str(detail),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// What was checked, e.g. `(13,4,1)-BIBD`.
    pub subject: String,
    pub passed: bool,
    pub points: usize,
    pub blocks: usize,
    pub violation: Option<Violation>,
}

impl VerificationReport {
    pub fn pass(subject: impl Into<String>, points: usize, blocks: usize) -> Self {
        Self { subject: subject.into(), passed: true, points, blocks, violation: None }
    }

    pub fn fail(subject: impl Into<String>, points: usize, blocks: usize, v: Violation) -> Self {
        Self { subject: subject.into(), passed: false, points, blocks, violation: Some(v) }
    }

    /// Converts a failed report into an error.
    pub fn into_result(self) -> crate::Result<Self> {
        if self.passed {
            Ok(self)
        } else {
            Err(crate::Error::Verification(self.to_string()))
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.violation {
            None => write!(
                f,
                "PASS {} ({} points, {} blocks)",
                self.subject, self.points, self.blocks
            ),
            Some(v) => write!(f, "FAIL {}: {v}", self.subject),
        }
    }
}
