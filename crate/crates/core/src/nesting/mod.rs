//! Nestings, augmented designs and parameter-level necessary conditions.

mod conditions;

use serde::Serialize;

pub use conditions::{bibd_nesting_conditions, gdd_nesting_conditions, BibdConditions, Condition, GddConditions};

use crate::design::{pair_counts, verify_bibd, verify_gdd, Design, Params, BlockSizes, DesignFile, Point};
use crate::error::{Error, Result};
use crate::report::{VerificationReport, Violation};

/// A design together with one nested point per block occurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nesting {
    pub design: Design,
    pub nested: Vec<Point>,
}

impl Nesting {
    pub fn new(design: Design, nested: Vec<Point>) -> Result<Self> {
        if nested.len() != design.b() {
            return Err(Error::InvalidInput(format!(
                "{} nested points for {} blocks",
                nested.len(),
                design.b()
            )));
        }
        if let Some(&p) = nested.iter().find(|&&p| p >= design.v()) {
            return Err(Error::InvalidInput(format!("nested point index {p} out of range")));
        }
        Ok(Self { design, nested })
    }

    pub fn v(&self) -> usize {
        self.design.v()
    }

    pub fn b(&self) -> usize {
        self.design.b()
    }

    /// Uniform block size of the base design.
    pub fn k(&self) -> Option<usize> {
        match self.design.block_sizes().as_slice() {
            [k] => Some(*k),
            [] => Some(0),
            _ => None,
        }
    }

    pub fn to_file(&self, lambda: usize) -> DesignFile {
        let params = self.k().map(|k| Params { v: self.v(), k: BlockSizes::One(k), lambda });
        self.design.to_file(params, Some(&self.nested))
    }

    pub fn from_file(f: &DesignFile) -> Result<Self> {
        match f.into_design()? {
            (d, Some(n)) => Self::new(d, n),
            (_, None) => Err(Error::InvalidInput("design file is not marked nested".into())),
        }
    }
}

/// Blocks `A ∪ {φ(A)}` in base order, nested point last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedDesign {
    pub base: Design,
    pub blocks: Vec<Vec<Point>>,
}

impl AugmentedDesign {
    /// The augmented blocks as a plain design (points sorted per block).
    pub fn as_design(&self) -> Design {
        let mut d = self.base.clone();
        d.blocks = self.blocks.clone();
        for b in &mut d.blocks {
            b.sort_unstable();
        }
        d
    }

    /// Multiplicity of each point in `N_φ`.
    pub fn nested_multiplicity(&self) -> Vec<usize> {
        let mut m = vec![0; self.base.v()];
        for b in &self.blocks {
            m[*b.last().expect("augmented blocks are nonempty")] += 1;
        }
        m
    }

    /// Blocks rendered with the nested point last.
    pub fn rendered(&self) -> Vec<Vec<String>> {
        self.blocks.iter().map(|b| b.iter().map(|&p| self.base.render(p)).collect()).collect()
    }
}

pub fn apply_nesting(n: &Nesting) -> Result<AugmentedDesign> {
    let mut blocks = Vec::with_capacity(n.b());
    for (i, (b, &p)) in n.design.blocks.iter().zip(&n.nested).enumerate() {
        if b.contains(&p) {
            return Err(Error::InvalidInput(format!(
                "nested point {} already lies in block {i}",
                n.design.render(p)
            )));
        }
        let mut a = b.clone();
        a.push(p);
        blocks.push(a);
    }
    Ok(AugmentedDesign { base: n.design.clone(), blocks })
}

/// Checks the base as a `(v,k,λ)`-BIBD (or `(k,λ)`-GDD when groups are
/// present) and the augmentation as a partial `(v,k+1,λ+1)` design of the
/// same kind.
pub fn verify_nesting(n: &Nesting, lambda: usize) -> VerificationReport {
    let d = &n.design;
    let gdd = d.groups.is_some();
    let Some(k) = n.k() else {
        return VerificationReport::fail(
            "nesting",
            d.v(),
            d.b(),
            Violation::Other { detail: format!("mixed block sizes {:?}", d.block_sizes()) },
        );
    };
    let base = if gdd { verify_gdd(d, k, lambda, false) } else { verify_bibd(d, d.v(), k, lambda, false) };
    if !base.passed {
        return base;
    }
    let aug = match apply_nesting(n) {
        Ok(a) => a.as_design(),
        Err(_) => {
            let i = n.design.blocks.iter().zip(&n.nested).position(|(b, p)| b.contains(p)).unwrap_or(0);
            return VerificationReport::fail(
                format!("nesting of {}", base.subject),
                d.v(),
                d.b(),
                Violation::NestedInBlock { block: i, point: d.render(n.nested[i]) },
            );
        }
    };
    let mut r = if gdd {
        verify_gdd(&aug, k + 1, lambda + 1, true)
    } else {
        verify_bibd(&aug, d.v(), k + 1, lambda + 1, true)
    };
    r.subject = format!("nesting of {} into {}", base.subject, r.subject);
    r
}

/// True iff every pair (from distinct groups) is covered exactly `λ+1`
/// times in the augmented design.
pub fn is_perfect(a: &AugmentedDesign, lambda: usize) -> bool {
    let d = a.as_design();
    let counts = pair_counts(&d);
    let group_of = d.groups.as_ref().map(|gs| {
        let mut g = vec![0; d.v()];
        for (i, grp) in gs.iter().enumerate() {
            for &p in grp {
                g[p] = i;
            }
        }
        g
    });
    let perfect = counts
        .iter()
        .filter(|&(x, y, _)| group_of.as_ref().is_none_or(|g| g[x] != g[y]))
        .all(|(_, _, c)| c == lambda + 1);
    perfect
}

/// Pair-count bound `b·C(k+1,2) <= (λ+1)·P`, where `P` is the number of
/// coverable pairs; returns both sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairBound {
    pub used: usize,
    pub capacity: usize,
}

pub fn pair_bound(n: &Nesting, lambda: usize) -> PairBound {
    let k = n.k().unwrap_or(0);
    let d = &n.design;
    let v = d.v();
    let mut pairs = v * v.saturating_sub(1) / 2;
    if let Some(gs) = &d.groups {
        pairs -= gs.iter().map(|g| g.len() * g.len().saturating_sub(1) / 2).sum::<usize>();
    }
    PairBound { used: d.b() * (k + 1) * k / 2, capacity: (lambda + 1) * pairs }
}
