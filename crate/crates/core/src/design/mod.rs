//! Block designs, group divisible designs and PBDs over labelled point sets,
//! their development from base blocks, and exhaustive pair-count checks.

mod classic;
mod develop;
mod io;
mod verify;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use classic::{affine_plane, pbd_to_gdd, transversal_design, ResolvableDesign};
pub use develop::{elem_label, BasePoint, Developed, Development, InfinityAction, OrbitSpec, Translations};
pub use io::{BlockSizes, DesignFile, Params};
pub use verify::{pair_counts, verify_bibd, verify_gdd, verify_gdd_sizes, verify_pbd, PairCounter};

use crate::error::{Error, Result};

/// Index into [`Design::labels`].
pub type Point = usize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(i64),
    Text(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Int(n) => write!(f, "{n}"),
            Label::Text(s) => f.write_str(s),
        }
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label::Text(s.to_string())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label::Text(s)
    }
}

impl From<i64> for Label {
    fn from(n: i64) -> Self {
        Label::Int(n)
    }
}

/// A design: labelled points, a block multiset and an optional group
/// partition. Blocks are stored with their points ascending; block order is
/// the order of construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    /// Canonical descriptor of the ambient group, when the points are group
    /// elements (possibly with infinity points appended).
    pub group: Option<String>,
    pub labels: Vec<Label>,
    pub blocks: Vec<Vec<Point>>,
    pub groups: Option<Vec<Vec<Point>>>,
}

impl Design {
    pub fn new(labels: Vec<Label>, blocks: Vec<Vec<Point>>) -> Result<Self> {
        let v = labels.len();
        let mut seen = HashMap::with_capacity(v);
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l, i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate point label {l}")));
            }
        }
        let mut blocks = blocks;
        for (i, b) in blocks.iter_mut().enumerate() {
            if let Some(&p) = b.iter().find(|&&p| p >= v) {
                return Err(Error::InvalidInput(format!("block {i} uses point index {p} >= {v}")));
            }
            b.sort_unstable();
        }
        Ok(Self { group: None, labels, blocks, groups: None })
    }

    /// Points `0..v` labelled by their integer value.
    pub fn on_integers(v: usize, blocks: Vec<Vec<Point>>) -> Result<Self> {
        Self::new((0..v as i64).map(Label::Int).collect(), blocks)
    }

    pub fn with_groups(mut self, groups: Vec<Vec<Point>>) -> Result<Self> {
        let v = self.labels.len();
        let mut groups = groups;
        for g in &mut groups {
            if let Some(&p) = g.iter().find(|&&p| p >= v) {
                return Err(Error::InvalidInput(format!("group uses point index {p} >= {v}")));
            }
            g.sort_unstable();
        }
        self.groups = Some(groups);
        Ok(self)
    }

    pub fn with_group_descriptor(mut self, descriptor: impl Into<String>) -> Self {
        self.group = Some(descriptor.into());
        self
    }

    pub fn v(&self) -> usize {
        self.labels.len()
    }

    pub fn b(&self) -> usize {
        self.blocks.len()
    }

    pub fn label(&self, p: Point) -> &Label {
        &self.labels[p]
    }

    pub fn render(&self, p: Point) -> String {
        self.labels[p].to_string()
    }

    pub fn index(&self) -> HashMap<Label, Point> {
        self.labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect()
    }

    /// Sorted distinct block sizes.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks.iter().map(Vec::len).collect();
        s.sort_unstable();
        s.dedup();
        s
    }

    /// Group type in exponential notation, e.g. `8^8 5^1`, largest size first.
    pub fn group_type(&self) -> Option<String> {
        let groups = self.groups.as_ref()?;
        let mut sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < sizes.len() {
            let j = sizes[i..].iter().take_while(|&&s| s == sizes[i]).count();
            parts.push(format!("{}^{}", sizes[i], j));
            i += j;
        }
        Some(parts.join(" "))
    }

    /// Replication number of every point, by index.
    pub fn replication(&self) -> Vec<usize> {
        let mut r = vec![0; self.v()];
        for b in &self.blocks {
            for &p in b {
                r[p] += 1;
            }
        }
        r
    }
}
