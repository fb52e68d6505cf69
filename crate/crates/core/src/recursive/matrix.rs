//! Difference matrices and the product of a Banff family with one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{verify_brdf, DifferenceFamily, FamilyKind};
use crate::group::{prime_power, Factor, FiniteField, FiniteGroup, Subgroup};
use crate::report::{VerificationReport, Violation};

use std::sync::Arc;

/// A `k x |G|` matrix over `G`; `homogeneous` records the claim that every
/// row is a permutation of `G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceMatrix {
    pub group: FiniteGroup,
    pub rows: Vec<Vec<usize>>,
    pub homogeneous: bool,
}

impl DifferenceMatrix {
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Checks that the difference of every two rows is a permutation of
    /// `G` and, when claimed, that every row is one.
    pub fn verify(&self) -> VerificationReport {
        let g = &self.group;
        let n = g.order();
        let subject = format!(
            "({},{},1)-{}",
            g.descriptor(),
            self.k(),
            if self.homogeneous { "HDM" } else { "DM" }
        );
        let fail = |detail: String| VerificationReport::fail(subject.clone(), n, self.k(), Violation::Other { detail });
        if let Some(r) = self.rows.iter().position(|r| r.len() != n || r.iter().any(|&e| e >= n)) {
            return fail(format!("row {r} is not a list of {n} group elements"));
        }
        let is_perm = |it: &mut dyn Iterator<Item = usize>| {
            let mut seen = vec![false; n];
            for e in it {
                if std::mem::replace(&mut seen[e], true) {
                    return false;
                }
            }
            true
        };
        for i in 0..self.k() {
            if self.homogeneous && !is_perm(&mut self.rows[i].iter().copied()) {
                return fail(format!("row {i} is not a permutation"));
            }
            for j in i + 1..self.k() {
                let mut diff = self.rows[i].iter().zip(&self.rows[j]).map(|(&a, &b)| g.sub(a, b));
                if !is_perm(&mut diff) {
                    return fail(format!("rows {i} and {j} differ in a repeated element"));
                }
            }
        }
        VerificationReport::pass(subject, n, self.k())
    }

    pub fn to_file(&self) -> MatrixFile {
        MatrixFile {
            group: self.group.descriptor(),
            homogeneous: self.homogeneous,
            rows: self.rows.iter().map(|r| r.iter().map(|&e| self.group.render(e)).collect()).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub group: String,
    pub homogeneous: bool,
    pub rows: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn into_matrix(&self) -> Result<DifferenceMatrix> {
        let group = FiniteGroup::parse(&self.group)?;
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|s| group.parse_elem(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(DifferenceMatrix { group, rows, homogeneous: self.homogeneous })
    }
}

/// Rows `c -> m·c` of the multiplication table of `F_q` for the first `k`
/// nonzero elements `m`.
pub fn hdm_from_field(q: u32, k: usize) -> Result<DifferenceMatrix> {
    if prime_power(q).is_none() {
        return Err(Error::Precondition(format!("{q} is not a prime power")));
    }
    if k == 0 || k >= q as usize {
        return Err(Error::Precondition(format!("an HDM over GF({q}) needs 1 <= k <= {}", q - 1)));
    }
    let f = Arc::new(FiniteField::with_order(q)?);
    let group = FiniteGroup::new(vec![Factor::Field(f.clone())])?;
    let rows = (1..=k as u32).map(|m| f.elements().map(|c| f.mul(m, c) as usize).collect()).collect();
    let m = DifferenceMatrix { group, rows, homogeneous: true };
    m.verify().into_result()?;
    Ok(m)
}

/// The family of blocks `{(b_i, m_ic)}` over `G1 x G2` relative to
/// `H x G2`, one per base block and column.
pub fn hdm_product(f: &DifferenceFamily, m: &DifferenceMatrix) -> Result<DifferenceFamily> {
    verify_brdf(f, false).into_result()?;
    if !m.homogeneous {
        return Err(Error::Precondition("the difference matrix is not homogeneous".into()));
    }
    m.verify().into_result()?;
    if m.k() != f.k {
        return Err(Error::Precondition(format!("matrix has {} rows, blocks have size {}", m.k(), f.k)));
    }
    let n2 = m.group.order();
    let group = f.group.product(&m.group)?;
    let h = f.subgroup.elements().iter().flat_map(|&h| (0..n2).map(move |g| h * n2 + g)).collect();
    let subgroup = Subgroup::new(&group, h)?;
    let mut blocks = Vec::with_capacity(f.blocks.len() * n2);
    for b in &f.blocks {
        for c in 0..n2 {
            blocks.push(b.iter().enumerate().map(|(i, &e)| e * n2 + m.rows[i][c]).collect());
        }
    }
    let out = DifferenceFamily::new(group, subgroup, FamilyKind::Brdf, blocks);
    verify_brdf(&out, false).into_result()?;
    Ok(out)
}
