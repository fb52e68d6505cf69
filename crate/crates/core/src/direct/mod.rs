//! Direct constructions: the `Z_3 x R_v` Banff families, the families built
//! from a good 16-tuple over `F_4 x F_q`, and two bespoke small designs.

mod tuple16;

pub use tuple16::{
    construct_16tuple_brdf, difference_lists, tuple16_conditions, tuple16_lists, unit_lists, Tuple16Check, Tuple16Result,
};

use std::collections::HashMap;

use crate::design::{BasePoint, Development, InfinityAction, OrbitSpec, Point};
use crate::error::{Error, Result};
use crate::family::{verify_brdf, DifferenceFamily, FamilyKind};
use crate::group::{orbit_representatives, Elem, Factor, FiniteGroup, ProductRing, Subgroup};
use crate::nesting::{verify_nesting, Nesting};

/// `(Z_3 x R_v, Z_3 x {0}, 4, 1)`-BRDF with blocks
/// `{(1,s), (1,-s), (2,sx), (2,-sx)}` for `s` in the orbit representatives
/// of `<x>`, `x` the canonical fourth root of unity.
pub fn construct_3v_brdf(v: u32) -> Result<DifferenceFamily> {
    if v < 5 {
        return Err(Error::Precondition(format!("v = {v} is too small")));
    }
    let ring = ProductRing::for_order(v)?;
    let x = ring.fourth_root()?;
    let reps = orbit_representatives(&ring, x)?;
    let mut factors = vec![Factor::Cyclic(3)];
    factors.extend(ring.additive().factors().iter().cloned());
    let g = FiniteGroup::new(factors)?;
    let mut mask = vec![false; g.factors().len()];
    mask[0] = true;
    let h = g.factor_subgroup(&mask)?;
    let r = ring.order();
    let pt = |i: usize, e: Elem| i * r + e;
    let blocks = reps
        .iter()
        .map(|&s| {
            let sx = ring.mul(s, x);
            vec![pt(1, s), pt(1, ring.neg(s)), pt(2, sx), pt(2, ring.neg(sx))]
        })
        .collect();
    let f = DifferenceFamily::new(g, h, FamilyKind::Brdf, blocks);
    verify_brdf(&f, false).into_result()?;
    Ok(f)
}

/// Nested `(4,1)`-GDD of type `3^8` on `Z_21 ∪ {inf0, inf1, inf2}` with
/// `inf_i + g = inf_{(i+g) mod 3}`.
pub fn construct_nested_gdd_3_8() -> Result<Nesting> {
    let g = FiniteGroup::cyclic(21)?;
    let dev = Development::new(g.clone()).with_infinities(3, InfinityAction::Rotate(3))?;
    let e = BasePoint::G;
    let specs = [
        OrbitSpec::full(vec![e(2), e(4), e(10), e(13)]).nested_with(e(0)),
        OrbitSpec::full(vec![e(15), e(16), e(20), BasePoint::Inf(0)]).nested_with(e(0)),
    ];
    let d = dev.develop(&specs)?;
    let mut groups: Vec<Vec<Point>> = Subgroup::new(&g, vec![0, 7, 14])?.cosets(&g);
    groups.push(vec![21, 22, 23]);
    let design = d.design.with_groups(groups)?;
    let n = Nesting::new(design, d.nested.expect("nested"))?;
    verify_nesting(&n, 1).into_result()?;
    Ok(n)
}

/// The point universe of [`construct_nested_28`].
pub fn v28_development() -> Result<Development> {
    Development::new(FiniteGroup::parse("Z3xZ3xZ3")?).with_infinities(1, InfinityAction::Fixed)
}

/// Nested `(28,4,1)`-BIBD on `Z_3^3 ∪ {inf}`: two full orbits and one
/// orbit under `{0} x Z_3 x Z_3`.
pub fn construct_nested_28() -> Result<Nesting> {
    let dev = v28_development()?;
    let g = dev.group.clone();
    let p = |c: [u32; 3]| BasePoint::G(g.compose(&c));
    let t = g.factor_subgroup(&[false, true, true])?;
    let specs = [
        OrbitSpec::full(vec![p([0, 1, 0]), p([0, 2, 0]), p([1, 1, 2]), p([1, 2, 1])]).nested_with(p([0, 1, 2])),
        OrbitSpec::full(vec![p([0, 0, 1]), p([0, 0, 2]), p([1, 2, 2]), p([1, 1, 1])]).nested_with(p([2, 0, 0])),
        OrbitSpec::full(vec![p([0, 0, 0]), p([1, 0, 0]), p([2, 0, 0]), BasePoint::Inf(0)])
            .nested_with(p([0, 1, 0]))
            .over(t),
    ];
    let d = dev.develop(&specs)?;
    let n = Nesting::new(d.design, d.nested.expect("nested"))?;
    verify_nesting(&n, 1).into_result()?;
    Ok(n)
}

/// Whether translating every augmented block by `t` permutes the augmented
/// blocks (nested point included).
pub fn translation_preserves(n: &Nesting, dev: &Development, t: Elem) -> bool {
    let key = |b: &[Point], x: Point| {
        let mut b = b.to_vec();
        b.sort_unstable();
        (b, x)
    };
    let mut count: HashMap<(Vec<Point>, Point), isize> = HashMap::new();
    for (b, &x) in n.design.blocks.iter().zip(&n.nested) {
        *count.entry(key(b, x)).or_default() += 1;
        let moved: Vec<Point> = b.iter().map(|&p| dev.point(dev.translate(dev.base_point(p), t))).collect();
        let mx = dev.point(dev.translate(dev.base_point(x), t));
        *count.entry(key(&moved, mx)).or_default() -= 1;
    }
    count.values().all(|&c| c == 0)
}
