//! Affine planes, transversal designs and point deletion.

use super::{verify_gdd_sizes, verify_pbd, Design, Label, Point};
use crate::error::{Error, Result};
use crate::group::{prime_power, FiniteField};
use crate::report::{VerificationReport, Violation};

/// A design with an explicit resolution into parallel classes.
#[derive(Clone, Debug)]
pub struct ResolvableDesign {
    pub design: Design,
    /// Block indices of each parallel class.
    pub classes: Vec<Vec<usize>>,
}

impl ResolvableDesign {
    /// Checks that the classes partition the blocks and that every class
    /// partitions the points.
    pub fn verify_resolution(&self) -> VerificationReport {
        let d = &self.design;
        let subject = format!("resolution into {} parallel classes", self.classes.len());
        let fail = |detail: String| {
            VerificationReport::fail(subject.clone(), d.v(), d.b(), Violation::Other { detail })
        };
        let mut used = vec![false; d.b()];
        for (ci, class) in self.classes.iter().enumerate() {
            let mut cover = vec![false; d.v()];
            for &bi in class {
                if bi >= d.b() || std::mem::replace(&mut used[bi], true) {
                    return fail(format!("block {bi} missing or in two classes"));
                }
                for &p in &d.blocks[bi] {
                    if std::mem::replace(&mut cover[p], true) {
                        return fail(format!("class {ci} covers point {} twice", d.render(p)));
                    }
                }
            }
            if let Some(p) = cover.iter().position(|&c| !c) {
                return fail(format!("class {ci} misses point {}", d.render(p)));
            }
        }
        if let Some(bi) = used.iter().position(|&u| !u) {
            return fail(format!("block {bi} is in no class"));
        }
        VerificationReport::pass(subject, d.v(), d.b())
    }
}

fn field_for(q: u32) -> Result<FiniteField> {
    if prime_power(q).is_none() {
        return Err(Error::Precondition(format!("{q} is not a prime power")));
    }
    FiniteField::with_order(q)
}

/// AG(2,q): points `(x,y)`, lines `y = ax + b` grouped by slope, then the
/// verticals `x = c` as the last class.
pub fn affine_plane(q: u32) -> Result<ResolvableDesign> {
    let f = field_for(q)?;
    let q = q as usize;
    let labels: Vec<Label> = (0..q * q)
        .map(|p| Label::Text(format!("({},{})", f.render((p / q) as u32), f.render((p % q) as u32))))
        .collect();
    let mut blocks = Vec::with_capacity(q * q + q);
    let mut classes = Vec::with_capacity(q + 1);
    for a in 0..q as u32 {
        let mut class = Vec::with_capacity(q);
        for b in 0..q as u32 {
            class.push(blocks.len());
            blocks.push((0..q as u32).map(|x| x as usize * q + f.add(f.mul(a, x), b) as usize).collect());
        }
        classes.push(class);
    }
    let mut class = Vec::with_capacity(q);
    for c in 0..q {
        class.push(blocks.len());
        blocks.push((0..q).map(|y| c * q + y).collect());
    }
    classes.push(class);
    let design = Design::new(labels, blocks)?;
    Ok(ResolvableDesign { design, classes })
}

/// TD(k,q) from the lines of AG(2,q) that are not vertical: group `i < q`
/// is the vertical line over the `i`-th field element and, when `k = q+1`,
/// the last group is the line at infinity (one point per slope).
pub fn transversal_design(k: usize, q: u32) -> Result<Design> {
    let f = field_for(q)?;
    let qs = q as usize;
    if k > qs + 1 || k < 2 {
        return Err(Error::Precondition(format!("TD({k},{q}) needs 2 <= k <= q+1")));
    }
    let labels: Vec<Label> = (0..k * qs)
        .map(|p| Label::Text(format!("({},{})", p / qs, f.render((p % qs) as u32))))
        .collect();
    let finite = k.min(qs);
    let mut blocks = Vec::with_capacity(qs * qs);
    for a in 0..q {
        for b in 0..q {
            let mut block: Vec<Point> =
                (0..finite).map(|i| i * qs + f.add(f.mul(a, i as u32), b) as usize).collect();
            if k == qs + 1 {
                block.push(qs * qs + a as usize);
            }
            blocks.push(block);
        }
    }
    let groups = (0..k).map(|i| (i * qs..(i + 1) * qs).collect()).collect();
    Design::new(labels, blocks)?.with_groups(groups)
}

/// Deletes `x` from a PBD: blocks through `x` become the groups. If the
/// input carries groups they are treated as further blocks of the PBD.
pub fn pbd_to_gdd(d: &Design, x: &Label) -> Result<Design> {
    let xi = d
        .labels
        .iter()
        .position(|l| l == x)
        .ok_or_else(|| Error::InvalidInput(format!("{x} is not a point")))?;
    let mut all: Vec<Vec<Point>> = d.blocks.clone();
    if let Some(g) = &d.groups {
        all.extend(g.iter().filter(|g| g.len() > 1).cloned());
    }
    let mut sizes: Vec<usize> = all.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let pbd = Design::new(d.labels.clone(), all.clone())?;
    verify_pbd(&pbd, pbd.v(), &sizes).into_result()?;
    let shift = |p: Point| if p > xi { p - 1 } else { p };
    let labels: Vec<Label> = d.labels.iter().enumerate().filter(|&(i, _)| i != xi).map(|(_, l)| l.clone()).collect();
    let mut blocks = Vec::new();
    let mut groups = Vec::new();
    for b in all {
        if b.contains(&xi) {
            groups.push(b.into_iter().filter(|&p| p != xi).map(shift).collect());
        } else {
            blocks.push(b.into_iter().map(shift).collect());
        }
    }
    let mut out = Design::new(labels, blocks)?.with_groups(groups)?;
    out.group = None;
    let block_sizes = out.block_sizes();
    verify_gdd_sizes_or_err(&out, &block_sizes)?;
    Ok(out)
}

fn verify_gdd_sizes_or_err(d: &Design, sizes: &[usize]) -> Result<()> {
    if sizes.is_empty() {
        return Ok(());
    }
    verify_gdd_sizes(d, sizes, 1, false).into_result().map(|_| ())
}

#[cfg(test)]
mod tests {
    use super::super::{verify_bibd, verify_gdd};
    use super::*;

    #[test]
    fn affine_planes() {
        for (q, b) in [(2u32, 6usize), (3, 12), (4, 20), (8, 72), (9, 90)] {
            let a = affine_plane(q).unwrap();
            let q = q as usize;
            assert_eq!(a.design.b(), b);
            assert_eq!(a.classes.len(), q + 1);
            assert!(verify_bibd(&a.design, q * q, q, 1, false).passed);
            assert!(a.verify_resolution().passed);
        }
        assert!(affine_plane(6).is_err());
    }

    #[test]
    fn transversal_designs() {
        for (k, q) in [(3usize, 2u32), (5, 4), (9, 8), (5, 5), (6, 7)] {
            let td = transversal_design(k, q).unwrap();
            assert_eq!(td.b(), (q * q) as usize);
            let r = verify_gdd(&td, k, 1, false);
            assert!(r.passed, "{r}");
            let groups = td.groups.as_ref().unwrap();
            for b in &td.blocks {
                for g in groups {
                    assert_eq!(b.iter().filter(|p| g.contains(p)).count(), 1);
                }
            }
        }
        assert!(transversal_design(10, 8).is_err());
    }

    #[test]
    fn delete_point() {
        let blocks = (0..13).map(|t| [1, 2, 4, 10].iter().map(|x| (x + t) % 13).collect()).collect();
        let d = Design::on_integers(13, blocks).unwrap();
        let g = pbd_to_gdd(&d, &Label::Int(0)).unwrap();
        assert_eq!(g.group_type().unwrap(), "3^4");
        let ag = affine_plane(3).unwrap().design;
        let g = pbd_to_gdd(&ag, &Label::from("(0,0)")).unwrap();
        assert_eq!(g.group_type().unwrap(), "2^4");
        assert!(pbd_to_gdd(&d, &Label::Int(13)).is_err());
        let td = transversal_design(5, 5).unwrap();
        let g = pbd_to_gdd(&td, &Label::from("(0,0)")).unwrap();
        assert_eq!(g.v(), 24);
        assert_eq!(g.group_type().unwrap(), "4^6");
    }
}
