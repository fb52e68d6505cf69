//! JSON form of a difference family.

use serde::{Deserialize, Serialize};

use super::{DifferenceFamily, FamilyKind};
use crate::design::{elem_label, Label};
use crate::error::Result;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFile {
    pub group: String,
    pub subgroup: Vec<Label>,
    pub k: usize,
    pub lambda: usize,
    pub kind: FamilyKind,
    pub blocks: Vec<Vec<Label>>,
}

impl FamilyFile {
    pub fn into_family(&self) -> Result<DifferenceFamily> {
        let g = FiniteGroup::parse(&self.group)?;
        let parse = |l: &Label| g.parse_elem(&l.to_string());
        let h = self.subgroup.iter().map(parse).collect::<Result<Vec<_>>>()?;
        let h = Subgroup::new(&g, h)?;
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(parse).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let mut f = DifferenceFamily::new(g, h, self.kind, blocks);
        f.k = self.k;
        f.lambda = self.lambda;
        Ok(f)
    }
}

impl DifferenceFamily {
    pub fn to_file(&self) -> FamilyFile {
        let lab = |&e: &usize| elem_label(&self.group, e);
        FamilyFile {
            group: self.group.descriptor(),
            subgroup: self.subgroup.elements().iter().map(lab).collect(),
            k: self.k,
            lambda: self.lambda,
            kind: self.kind,
            blocks: self.blocks.iter().map(|b| b.iter().map(lab).collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_example_file() {
        let f: FamilyFile = serde_json::from_str(
            r#"{"group":"Z40","subgroup":[0,10,20,30],"k":4,"lambda":1,"kind":"weak","blocks":[[2,1,16,10],[25,18,6,29],[12,9,36,14]]}"#,
        )
        .unwrap();
        let fam = f.into_family().unwrap();
        assert_eq!(fam.blocks[0], vec![2, 1, 16, 10]);
        assert_eq!(fam.to_file(), f);
    }
}
