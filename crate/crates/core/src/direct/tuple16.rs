//! Banff families over `F_4 x F_q` from a good 16-tuple.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{brdf_short_orbit_nesting, verify_brdf, DifferenceFamily, FamilyKind};
use crate::group::{
    coset_system_check, index6_cosets, CosetCheck, CosetMode, Elem, Factor, FiniteField, FiniteGroup,
    SixthPowerCosets,
};
use crate::nesting::Nesting;

/// 1-based index pairs `(i, j)` standing for `a_i - a_j`, per `F_4`
/// component `00, 01, 10, 11`.
const DELTA: [[(usize, usize); 6]; 4] = [
    [(1, 2), (5, 6), (10, 11), (10, 12), (11, 12), (15, 16)],
    [(1, 3), (2, 3), (5, 7), (6, 7), (14, 15), (14, 16)],
    [(1, 4), (2, 4), (5, 8), (6, 8), (13, 15), (13, 16)],
    [(3, 4), (7, 8), (9, 10), (9, 11), (9, 12), (13, 14)],
];

const UNITS: [&[usize]; 4] = [&[1, 2, 5, 6, 9], &[3, 7, 13], &[4, 8, 14], &[10, 11, 12, 15, 16]];

/// `(F_4 component, tuple index)` of the points of `B_1..B_4`; the `F_4`
/// element `(a,b)` is encoded as `2a + b`.
const BLOCKS: [[(usize, usize); 4]; 4] = [
    [(0, 1), (0, 2), (1, 3), (2, 4)],
    [(0, 5), (0, 6), (1, 7), (2, 8)],
    [(0, 9), (3, 10), (3, 11), (3, 12)],
    [(1, 13), (2, 14), (3, 15), (3, 16)],
];

#[derive(Clone, Debug, Serialize)]
pub struct Tuple16Check {
    pub passed: bool,
    /// Complete-system checks of the four difference lists.
    pub differences: Vec<CosetCheck>,
    /// Partial-system checks of the four unit lists.
    pub units: Vec<CosetCheck>,
}

impl Tuple16Check {
    pub fn witness(&self) -> Option<String> {
        let names = ["00", "01", "10", "11"];
        for (i, c) in self.differences.iter().enumerate() {
            if let Some(w) = &c.witness {
                return Some(format!("difference list {}: {w}", names[i]));
            }
        }
        for (i, c) in self.units.iter().enumerate() {
            if let Some(w) = &c.witness {
                return Some(format!("unit list {}: {w}", names[i]));
            }
        }
        None
    }
}

pub fn difference_lists(field: &FiniteField, a: &[u32; 16]) -> [[u32; 6]; 4] {
    DELTA.map(|row| row.map(|(i, j)| field.sub(a[i - 1], a[j - 1])))
}

pub fn unit_lists(a: &[u32; 16]) -> [Vec<u32>; 4] {
    UNITS.map(|row| row.iter().map(|&i| a[i - 1]).collect())
}

pub fn tuple16_conditions(field: &FiniteField, cosets: &SixthPowerCosets, a: &[u32; 16]) -> Tuple16Check {
    let differences: Vec<CosetCheck> = difference_lists(field, a)
        .iter()
        .map(|d| coset_system_check(field, d, cosets, CosetMode::Complete))
        .collect();
    let units: Vec<CosetCheck> = unit_lists(a)
        .iter()
        .map(|u| coset_system_check(field, u, cosets, CosetMode::Partial))
        .collect();
    let passed = differences.iter().chain(&units).all(|c| c.passed);
    Tuple16Check { passed, differences, units }
}

/// The eight lists as 1-based index pairs: `(i, Some(j))` stands for
/// `a_i - a_j` in the difference lists, `(i, None)` for `a_i` in the unit
/// lists.
pub fn tuple16_lists() -> Vec<Vec<(usize, Option<usize>)>> {
    let mut out: Vec<Vec<(usize, Option<usize>)>> =
        DELTA.iter().map(|row| row.iter().map(|&(i, j)| (i, Some(j))).collect()).collect();
    out.extend(UNITS.iter().map(|row| row.iter().map(|&i| (i, None)).collect()));
    out
}

#[derive(Clone, Debug)]
pub struct Tuple16Result {
    pub family: DifferenceFamily,
    pub nesting: Nesting,
    pub check: Tuple16Check,
    /// Representatives of the cosets of `{1,-1}` in `C^6`.
    pub multipliers: Vec<u32>,
    /// Last coordinate of the short-orbit nested point.
    pub short_orbit_point: u32,
}

/// The `(F_4 x F_q, F_4 x {0}, 4, 1)`-BRDF `{B_{i,s}}` (multipliers `s`
/// outer, `i` inner) and the nested `(4q,4,1)`-BIBD whose short orbit
/// `F_4 x {c}` is nested with `(0,0,x+c)`, `x` the smallest element of
/// `C^6`.
pub fn construct_16tuple_brdf(field: Arc<FiniteField>, a: &[u32; 16]) -> Result<Tuple16Result> {
    let q = field.order();
    let cosets = index6_cosets(&field)?;
    if let Some(&bad) = a.iter().find(|&&x| x == 0 || x >= q) {
        return Err(Error::InvalidInput(format!("tuple entry {bad} is not a unit of {}", field.descriptor())));
    }
    let check = tuple16_conditions(&field, &cosets, a);
    if !check.passed {
        return Err(Error::Precondition(check.witness().unwrap_or_default()));
    }
    let g = FiniteGroup::new(vec![Factor::Cyclic(2), Factor::Cyclic(2), Factor::Field(field.clone())])?;
    let h = g.factor_subgroup(&[true, true, false])?;
    let multipliers: Vec<u32> = cosets.c6.iter().copied().filter(|&s| s < field.neg(s)).collect();
    let qs = q as usize;
    let pt = |f4: usize, z: u32| -> Elem { f4 * qs + z as usize };
    let mut blocks = Vec::with_capacity(multipliers.len() * 4);
    for &s in &multipliers {
        for b in &BLOCKS {
            blocks.push(b.iter().map(|&(f4, i)| pt(f4, field.mul(s, a[i - 1]))).collect());
        }
    }
    let family = DifferenceFamily::new(g, h, FamilyKind::Brdf, blocks);
    verify_brdf(&family, false).into_result()?;
    let x = cosets.c6[0];
    let nesting = brdf_short_orbit_nesting(&family, pt(0, x))?;
    Ok(Tuple16Result { family, nesting, check, multipliers, short_orbit_point: x })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nesting::verify_nesting;

    const T13: [u32; 16] = [2, 3, 5, 7, 4, 6, 11, 3, 5, 2, 9, 6, 3, 9, 5, 10];

    #[test]
    fn lists_for_13() {
        let f = FiniteField::with_order(13).unwrap();
        let d = difference_lists(&f, &T13);
        assert_eq!(d[0], [12, 11, 6, 9, 3, 8]);
        assert_eq!(d[1], [10, 11, 6, 8, 4, 12]);
        assert_eq!(d[2], [8, 9, 1, 3, 11, 6]);
        assert_eq!(d[3], [11, 8, 3, 9, 12, 7]);
        let u = unit_lists(&T13);
        assert_eq!(u[0], vec![2, 3, 4, 6, 5]);
        assert_eq!(u[2], vec![7, 3, 9]);
    }

    #[test]
    fn example_q13() {
        let f = Arc::new(FiniteField::with_order(13).unwrap());
        let r = construct_16tuple_brdf(f, &T13).unwrap();
        assert_eq!(r.multipliers, vec![1]);
        assert_eq!(r.family.blocks.len(), 4);
        let g = &r.family.group;
        let rendered: Vec<String> = r.family.blocks[2].iter().map(|&e| g.render(e)).collect();
        assert_eq!(rendered, vec!["(0,0,5)", "(1,1,2)", "(1,1,9)", "(1,1,6)"]);
        assert_eq!(r.nesting.v(), 52);
        assert!(verify_nesting(&r.nesting, 1).passed);
        assert_eq!(r.short_orbit_point, 1);
    }

    #[test]
    fn bad_tuple_reports_witness() {
        let f = Arc::new(FiniteField::with_order(13).unwrap());
        let mut t = T13;
        t[1] = 4;
        match construct_16tuple_brdf(f, &t) {
            Err(Error::Precondition(w)) => assert!(w.contains("list"), "{w}"),
            other => panic!("{other:?}"),
        }
    }

    /// Unit lists spread over five or three cosets per `F_4` component.
    #[test]
    fn coset_spread_q37() {
        let f = Arc::new(FiniteField::with_order(37).unwrap());
        let t = [2, 3, 4, 5, 5, 8, 2, 14, 9, 2, 4, 23, 5, 3, 16, 24];
        let r = construct_16tuple_brdf(f.clone(), &t).unwrap();
        assert_eq!(r.family.blocks.len(), 12);
        let cosets = index6_cosets(&f).unwrap();
        let g = &r.family.group;
        for (comp, expect) in [(0usize, 5usize), (1, 3), (2, 3), (3, 5)] {
            let mut hit = std::collections::BTreeSet::new();
            for b in &r.family.blocks {
                for &e in b {
                    for x in [e, g.neg(e)] {
                        if x / 37 == comp {
                            hit.insert(cosets.coset_of((x % 37) as u32).unwrap());
                        }
                    }
                }
            }
            assert_eq!(hit.len(), expect);
        }
    }
}
