//! Relative difference families over `(G, H)`: plain, weak Banff, Banff
//! and perfect Banff, and the nested designs they generate.

mod io;

use serde::{Deserialize, Serialize};

pub use io::FamilyFile;

use crate::design::{BasePoint, Design, Development, OrbitSpec};
use crate::error::{Error, Result};
use crate::group::{Elem, Factor, FiniteGroup, Subgroup};
use crate::nesting::{verify_nesting, Nesting};
use crate::report::{VerificationReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Rdf,
    Weak,
    Brdf,
    Perfect,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DifferenceFamily {
    pub group: FiniteGroup,
    pub subgroup: Subgroup,
    pub k: usize,
    pub lambda: usize,
    pub kind: FamilyKind,
    pub blocks: Vec<Vec<Elem>>,
}

impl DifferenceFamily {
    pub fn new(group: FiniteGroup, subgroup: Subgroup, kind: FamilyKind, blocks: Vec<Vec<Elem>>) -> Self {
        let k = blocks.first().map_or(0, Vec::len);
        Self { group, subgroup, k, lambda: 1, kind, blocks }
    }

    /// `(g,h,k,λ)` shorthand.
    pub fn parameters(&self) -> String {
        format!("({},{},{},{})", self.group.order(), self.subgroup.order(), self.k, self.lambda)
    }

    /// `∪B ∪ -B` as a multiplicity vector over `G`.
    pub fn coverage(&self) -> Vec<usize> {
        let mut cover = vec![0; self.group.order()];
        for b in &self.blocks {
            for &e in b {
                cover[e] += 1;
                cover[self.group.neg(e)] += 1;
            }
        }
        cover
    }

    fn report(&self, what: &str, v: Option<Violation>) -> VerificationReport {
        let subject = format!("({},{})-{what} {}", self.group, self.subgroup_text(), self.parameters());
        match v {
            None => VerificationReport::pass(subject, self.group.order(), self.blocks.len()),
            Some(v) => VerificationReport::fail(subject, self.group.order(), self.blocks.len(), v),
        }
    }

    fn subgroup_text(&self) -> String {
        let e: Vec<String> = self.subgroup.elements().iter().map(|&h| self.group.render(h)).collect();
        format!("{{{}}}", e.join(","))
    }
}

fn shape_violation(f: &DifferenceFamily) -> Option<Violation> {
    for (i, b) in f.blocks.iter().enumerate() {
        if b.len() != f.k {
            return Some(Violation::BlockSize { block: i, size: b.len(), allowed: vec![f.k] });
        }
        if let Some(&e) = b.iter().find(|&&e| e >= f.group.order()) {
            return Some(Violation::UnknownPoint { block: i, point: e.to_string() });
        }
        for (j, &x) in b.iter().enumerate() {
            if b[j + 1..].contains(&x) {
                return Some(Violation::RepeatedPoint { block: i, point: f.group.render(x) });
            }
        }
    }
    None
}

fn rdf_violation(f: &DifferenceFamily) -> Option<Violation> {
    if let Some(v) = shape_violation(f) {
        return Some(v);
    }
    let g = &f.group;
    let mut counts = vec![0usize; g.order()];
    for b in &f.blocks {
        for &x in b {
            for &y in b {
                if x != y {
                    counts[g.sub(x, y)] += 1;
                }
            }
        }
    }
    for e in g.elements().skip(1) {
        let expected = if f.subgroup.contains(e) { 0 } else { f.lambda };
        if counts[e] != expected {
            return Some(Violation::Difference { element: g.render(e), count: counts[e], expected });
        }
    }
    None
}

/// Pairwise disjointness of the blocks and their negatives.
fn banff_overlap(f: &DifferenceFamily) -> Option<Violation> {
    let cover = f.coverage();
    cover
        .iter()
        .position(|&c| c > 1)
        .map(|e| Violation::BanffOverlap { element: f.group.render(e) })
}

pub fn verify_rdf(f: &DifferenceFamily) -> VerificationReport {
    f.report("RDF", rdf_violation(f))
}

/// Strict Banff check; with `perfect` also requires the blocks and their
/// negatives to partition `G \ H`.
pub fn verify_brdf(f: &DifferenceFamily, perfect: bool) -> VerificationReport {
    let what = if perfect { "perfect BRDF" } else { "BRDF" };
    let v = rdf_violation(f)
        .or_else(|| {
            f.blocks.iter().enumerate().find_map(|(i, b)| {
                b.iter()
                    .find(|&&e| f.subgroup.contains(e))
                    .map(|&e| Violation::MeetsSubgroup { block: i, element: f.group.render(e) })
            })
        })
        .or_else(|| banff_overlap(f))
        .or_else(|| {
            if !perfect {
                return None;
            }
            let cover = f.coverage();
            f.group
                .elements()
                .find(|&e| !f.subgroup.contains(e) && cover[e] == 0)
                .map(|e| Violation::NotCovered { element: f.group.render(e) })
        });
    f.report(what, v)
}

/// The short-orbit subgroup `{0, v/4, v/2, 3v/4}` of `Z_v`.
pub fn quarter_subgroup(g: &FiniteGroup) -> Result<Subgroup> {
    let v = match g.factors() {
        [Factor::Cyclic(v)] if v % 4 == 0 => *v as usize,
        _ => return Err(Error::Precondition(format!("{g} is not Z_v with v ≡ 0 mod 4"))),
    };
    Subgroup::new(g, vec![0, v / 4, v / 2, 3 * v / 4])
}

/// Weak Banff check over `(Z_v, {0, v/4, v/2, 3v/4})`: blocks may contain
/// `v/4` or `3v/4` but not `0` or `v/2`.
pub fn verify_weak_brdf(f: &DifferenceFamily) -> Result<VerificationReport> {
    let h = quarter_subgroup(&f.group)?;
    if h != f.subgroup {
        return Err(Error::Precondition(format!(
            "weak families need H = {{0,v/4,v/2,3v/4}}, got {}",
            f.subgroup_text()
        )));
    }
    let half = f.group.order() / 2;
    let v = rdf_violation(f)
        .or_else(|| {
            f.blocks.iter().enumerate().find_map(|(i, b)| {
                b.iter()
                    .find(|&&e| e == 0 || e == half)
                    .map(|&e| Violation::MeetsSubgroup { block: i, element: f.group.render(e) })
            })
        })
        .or_else(|| banff_overlap(f));
    Ok(f.report("weak BRDF", v))
}

/// Verifies according to the declared kind.
pub fn verify_family(f: &DifferenceFamily) -> Result<VerificationReport> {
    match f.kind {
        FamilyKind::Rdf => Ok(verify_rdf(f)),
        FamilyKind::Weak => verify_weak_brdf(f),
        FamilyKind::Brdf => Ok(verify_brdf(f, false)),
        FamilyKind::Perfect => Ok(verify_brdf(f, true)),
    }
}

/// Cosets of `H` with their smallest element as representative.
fn coset_reps(f: &DifferenceFamily) -> Vec<Elem> {
    f.subgroup.cosets(&f.group).into_iter().map(|c| c[0]).collect()
}

/// Whether nesting `H + t` with `x + t` for every coset representative `t`
/// adds pairwise distinct pairs that avoid the pairs `{t, t + b}` added by
/// the developed blocks.
fn short_orbit_fits(f: &DifferenceFamily, cover: &[usize], x: Elem) -> bool {
    let g = &f.group;
    let h = f.subgroup.elements();
    if f.subgroup.contains(x) {
        return false;
    }
    if h.iter().any(|&e| cover[g.sub(x, e)] > 0 || cover[g.sub(e, x)] > 0) {
        return false;
    }
    let mut seen = std::collections::HashSet::with_capacity(g.order());
    for t in coset_reps(f) {
        let xt = g.add(x, t);
        for &e in h {
            let p = g.add(e, t);
            if !seen.insert((p.min(xt), p.max(xt))) {
                return false;
            }
        }
    }
    true
}

/// Every `x ∉ H` usable as the nested point of the short orbit, ascending.
pub fn suitable_points(f: &DifferenceFamily) -> Vec<Elem> {
    let cover = f.coverage();
    f.group.elements().filter(|&x| short_orbit_fits(f, &cover, x)).collect()
}

fn developed_parts(f: &DifferenceFamily) -> Result<crate::design::Developed> {
    let dev = Development::new(f.group.clone());
    let specs: Vec<OrbitSpec> = f
        .blocks
        .iter()
        .map(|b| OrbitSpec::of_elems(b).nested_with(BasePoint::G(0)))
        .collect();
    dev.develop(&specs)
}

/// Nested GDD of type `|H|^(|G|/|H|)`: every base block nested with 0 and
/// developed; the groups are the cosets of `H`.
pub fn brdf_to_nested_gdd(f: &DifferenceFamily) -> Result<Nesting> {
    verify_brdf(f, false).into_result()?;
    let d = developed_parts(f)?;
    let groups = f.subgroup.cosets(&f.group);
    let design = d.design.with_groups(groups)?;
    let n = Nesting::new(design, d.nested.expect("all blocks nested"))?;
    verify_nesting(&n, f.lambda).into_result()?;
    Ok(n)
}

/// Developed blocks nested with their translate, plus every coset `H + t`
/// nested with `x + t`; verified as a nested `(v,k,1)`-BIBD.
fn short_orbit_nesting(f: &DifferenceFamily, x: Elem) -> Result<Nesting> {
    if f.subgroup.order() != f.k {
        return Err(Error::Precondition(format!("|H| = {} differs from k = {}", f.subgroup.order(), f.k)));
    }
    if !short_orbit_fits(f, &f.coverage(), x) {
        return Err(Error::Precondition(format!("{} is not a suitable short-orbit point", f.group.render(x))));
    }
    let d = developed_parts(f)?;
    let mut blocks = d.design.blocks;
    let mut nested = d.nested.expect("all blocks nested");
    for t in coset_reps(f) {
        blocks.push(f.subgroup.elements().iter().map(|&e| f.group.add(e, t)).collect());
        nested.push(f.group.add(x, t));
    }
    let design = Design::new(d.design.labels, blocks)?.with_group_descriptor(f.group.descriptor());
    let n = Nesting::new(design, nested)?;
    verify_nesting(&n, 1).into_result()?;
    Ok(n)
}

pub fn weak_brdf_to_nested_bibd(f: &DifferenceFamily, x: Elem) -> Result<Nesting> {
    verify_weak_brdf(f)?.into_result()?;
    short_orbit_nesting(f, x)
}

/// Nested BIBD from a strict BRDF with `|H| = k`, nesting the coset
/// `H + t` with `g + t`.
pub fn brdf_short_orbit_nesting(f: &DifferenceFamily, g: Elem) -> Result<Nesting> {
    verify_brdf(f, false).into_result()?;
    short_orbit_nesting(f, g)
}

/// The smallest suitable point, if any.
pub fn first_suitable(f: &DifferenceFamily) -> Result<Elem> {
    suitable_points(f)
        .first()
        .copied()
        .ok_or_else(|| Error::NotFound("no coset of H avoids the blocks and their negatives".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{pair_counts, verify_bibd};
    use crate::nesting::apply_nesting;

    fn cyc(v: u32, h: &[usize], kind: FamilyKind, blocks: &[&[usize]]) -> DifferenceFamily {
        let g = FiniteGroup::cyclic(v).unwrap();
        let h = Subgroup::new(&g, h.to_vec()).unwrap();
        DifferenceFamily::new(g, h, kind, blocks.iter().map(|b| b.to_vec()).collect())
    }

    fn example_40() -> DifferenceFamily {
        cyc(40, &[0, 10, 20, 30], FamilyKind::Weak, &[&[2, 1, 16, 10], &[25, 18, 6, 29], &[12, 9, 36, 14]])
    }

    #[test]
    fn example_15() {
        let f = cyc(15, &[0, 5, 10], FamilyKind::Brdf, &[&[1, 2, 4, 8]]);
        assert!(verify_rdf(&f).passed);
        assert!(verify_brdf(&f, false).passed);
        let neg: Vec<usize> = f.blocks[0].iter().map(|&e| f.group.neg(e)).collect();
        let mut neg2 = neg.clone();
        neg2.sort_unstable();
        assert_eq!(neg2, vec![7, 11, 13, 14]);
        let n = brdf_to_nested_gdd(&f).unwrap();
        assert_eq!(n.design.group_type().unwrap(), "3^5");
    }

    #[test]
    fn rdf_failures() {
        let f = cyc(13, &[0], FamilyKind::Rdf, &[&[1, 2, 3, 5]]);
        let r = verify_rdf(&f);
        assert!(matches!(r.violation, Some(Violation::Difference { count: 2, .. })), "{r}");
        let f = cyc(37, &[0], FamilyKind::Rdf, &[&[1, 2, 4, 25], &[3, 10, 22, 30], &[5, 9, 14, 20]]);
        assert!(verify_rdf(&f).passed);
    }

    #[test]
    fn weak_and_strict() {
        let f = example_40();
        let strict = verify_brdf(&f, false);
        assert!(matches!(strict.violation, Some(Violation::MeetsSubgroup { .. })));
        assert!(verify_weak_brdf(&f).unwrap().passed);
        let mut bad = f.clone();
        bad.blocks[0] = vec![0, 1, 16, 10];
        assert!(!verify_weak_brdf(&bad).unwrap().passed);
        let wrong_h = cyc(40, &[0, 20], FamilyKind::Weak, &[&[2, 1, 16, 10]]);
        assert!(verify_weak_brdf(&wrong_h).is_err());
    }

    #[test]
    fn perfect_sts7() {
        let f = cyc(7, &[0], FamilyKind::Perfect, &[&[1, 2, 4]]);
        assert!(verify_brdf(&f, true).passed);
        let f = cyc(13, &[0], FamilyKind::Perfect, &[&[1, 2, 4, 10]]);
        assert!(verify_brdf(&f, false).passed);
        assert!(!verify_brdf(&f, true).passed);
    }

    #[test]
    fn suitable_point_3_and_nested_40() {
        let f = example_40();
        let s = suitable_points(&f);
        assert!(s.contains(&3));
        let n = weak_brdf_to_nested_bibd(&f, 3).unwrap();
        assert_eq!(n.b(), 40 * 39 / 12);
        assert!(verify_nesting(&n, 1).passed);
        assert!(weak_brdf_to_nested_bibd(&f, 1).is_err());
    }

    /// Brute force: `x` is suitable iff appending the augmented short orbit
    /// keeps every pair count at most 2.
    #[test]
    fn suitable_points_match_brute_force() {
        let strict40 = cyc(40, &[0, 10, 20, 30], FamilyKind::Brdf, &[&[3, 2, 17, 11], &[1, 34, 22, 5], &[12, 9, 36, 14]]);
        for f in [example_40(), strict40] {
            let d = developed_parts(&f).unwrap();
            let n = Nesting::new(d.design.clone(), d.nested.clone().unwrap()).unwrap();
            let aug = apply_nesting(&n).unwrap().as_design();
            let s = suitable_points(&f);
            for x in f.group.elements() {
                if f.subgroup.contains(x) {
                    assert!(!s.contains(&x));
                    continue;
                }
                let mut all = aug.clone();
                for t in 0..10usize {
                    all.blocks.push(vec![t, t + 10, t + 20, t + 30, (x + t) % 40]);
                }
                let ok = pair_counts(&all).iter().all(|(_, _, c)| c <= 2);
                assert_eq!(s.contains(&x), ok, "x = {x}");
            }
        }
    }

    #[test]
    fn blocked_cosets_error() {
        // a perfect family covers all of G \ H, so no x fits
        let f = cyc(7, &[0], FamilyKind::Perfect, &[&[1, 2, 4]]);
        assert!(suitable_points(&f).is_empty());
        assert!(first_suitable(&f).is_err());
    }

    #[test]
    fn nested_gdd_for_13_is_a_bibd() {
        let f = cyc(13, &[0], FamilyKind::Brdf, &[&[1, 2, 4, 10]]);
        let n = brdf_to_nested_gdd(&f).unwrap();
        let plain = Design { groups: None, ..n.design.clone() };
        assert!(verify_bibd(&plain, 13, 4, 1, false).passed);
    }
}
