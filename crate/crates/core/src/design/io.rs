//! JSON design files.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{elem_label, Design, Label, Point};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BlockSizes {
    One(usize),
    Many(Vec<usize>),
}

impl BlockSizes {
    pub fn to_vec(&self) -> Vec<usize> {
        match self {
            BlockSizes::One(k) => vec![*k],
            BlockSizes::Many(ks) => ks.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub v: usize,
    pub k: BlockSizes,
    pub lambda: usize,
}

/// On-disk form of a design. `group` is a group descriptor or `labels`.
/// With `nested: true` the last entry of every block is its nested point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignFile {
    pub group: String,
    pub points: Vec<Label>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groups: Option<Vec<Vec<Label>>>,
    pub blocks: Vec<Vec<Label>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub nested: bool,
}

impl Design {
    pub fn to_file(&self, params: Option<Params>, nested: Option<&[Point]>) -> DesignFile {
        let lab = |p: &Point| self.labels[*p].clone();
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let mut out: Vec<Label> = b.iter().map(lab).collect();
                if let Some(n) = nested {
                    out.push(lab(&n[i]));
                }
                out
            })
            .collect();
        DesignFile {
            group: self.group.clone().unwrap_or_else(|| "labels".into()),
            points: self.labels.clone(),
            groups: self.groups.as_ref().map(|gs| gs.iter().map(|g| g.iter().map(lab).collect()).collect()),
            blocks,
            params,
            nested: nested.is_some(),
        }
    }
}

impl DesignFile {
    /// Parses the file; points over a group are canonicalized to the group's
    /// element syntax, and `inf*` labels are kept as they are.
    pub fn into_design(&self) -> Result<(Design, Option<Vec<Point>>)> {
        let (labels, descriptor) = if self.group == "labels" {
            (self.points.clone(), None)
        } else {
            let g = FiniteGroup::parse(&self.group)?;
            let labels = self.points.iter().map(|l| canonical(&g, l)).collect::<Result<Vec<_>>>()?;
            (labels, Some(g.descriptor()))
        };
        let index: HashMap<Label, Point> = labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();
        let group = descriptor.as_ref().map(|d| FiniteGroup::parse(d)).transpose()?;
        let lookup = |l: &Label| -> Result<Point> {
            let l = match &group {
                None => l.clone(),
                Some(g) => canonical(g, l)?,
            };
            index.get(&l).copied().ok_or_else(|| Error::InvalidInput(format!("unknown point {l}")))
        };
        let mut blocks = Vec::with_capacity(self.blocks.len());
        let mut nested = Vec::new();
        for b in &self.blocks {
            let mut pts = b.iter().map(lookup).collect::<Result<Vec<_>>>()?;
            if self.nested {
                let n = pts.pop().ok_or_else(|| Error::InvalidInput("empty nested block".into()))?;
                nested.push(n);
            }
            blocks.push(pts);
        }
        let mut d = Design::new(labels, blocks)?;
        d.group = descriptor;
        if let Some(gs) = &self.groups {
            let groups = gs
                .iter()
                .map(|g| g.iter().map(lookup).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            d = d.with_groups(groups)?;
        }
        Ok((d, self.nested.then_some(nested)))
    }
}

fn canonical(g: &FiniteGroup, l: &Label) -> Result<Label> {
    match l {
        Label::Text(s) if s.starts_with("inf") => Ok(l.clone()),
        _ => Ok(elem_label(g, g.parse_elem(&l.to_string())?)),
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Development, OrbitSpec};
    use super::*;
    use crate::design::BasePoint;

    #[test]
    fn round_trip_nested() {
        let dev = Development::new(FiniteGroup::cyclic(13).unwrap());
        let d = dev.develop(&[OrbitSpec::of_elems(&[1, 2, 4, 10]).nested_with(BasePoint::G(0))]).unwrap();
        let params = Params { v: 13, k: BlockSizes::One(4), lambda: 1 };
        let f = d.design.to_file(Some(params), d.nested.as_deref());
        let text = serde_json::to_string(&f).unwrap();
        assert!(text.contains("\"nested\":true"));
        let back: DesignFile = serde_json::from_str(&text).unwrap();
        let (d2, n2) = back.into_design().unwrap();
        assert_eq!(d2, d.design);
        assert_eq!(n2, d.nested);
    }

    #[test]
    fn group_points_canonicalized() {
        let f: DesignFile = serde_json::from_str(
            r#"{"group":"Z2xZ2xGF(13)","points":["(0,0,0)","(0,0,1)"],"blocks":[["(0,0,14)","(0,0,0)"]]}"#,
        )
        .unwrap();
        let (d, _) = f.into_design().unwrap();
        assert_eq!(d.blocks[0], vec![0, 1]);
    }
}
