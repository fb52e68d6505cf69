//! Wilson's weight-three inflation, TD truncation, resolvable-design
//! inflation, filling groups and PBD closure.

use super::registry::IngredientRegistry;
use crate::design::{verify_bibd, verify_gdd, verify_gdd_sizes, verify_pbd, Design, Label, Point, ResolvableDesign};
use crate::error::{Error, Result};
use crate::nesting::{verify_nesting, Nesting};

/// Blocks and nested points of `ing` carried onto `target`, where the
/// `i`-th point of `order` is sent to `target[i]`.
fn embed(ing: &Nesting, order: &[Point], target: &[Point], blocks: &mut Vec<Vec<Point>>, nested: &mut Vec<Point>) {
    let mut map = vec![usize::MAX; ing.v()];
    for (&s, &t) in order.iter().zip(target) {
        map[s] = t;
    }
    for (b, &p) in ing.design.blocks.iter().zip(&ing.nested) {
        blocks.push(b.iter().map(|&x| map[x]).collect());
        nested.push(map[p]);
    }
}

/// Group-major point order of a GDD: groups by smallest point, points
/// ascending within each.
fn group_order(d: &Design) -> Vec<Point> {
    let mut groups = d.groups.clone().unwrap_or_default();
    groups.sort_unstable_by_key(|g| g.first().copied());
    groups.into_iter().flatten().collect()
}

fn finish(labels: Vec<Label>, blocks: Vec<Vec<Point>>, nested: Vec<Point>) -> Result<Nesting> {
    let n = Nesting::new(Design::new(labels, blocks)?, nested)?;
    verify_nesting(&n, 1).into_result()?;
    Ok(n)
}

/// Nested `(3|X|+1,4,1)`-BIBD from a `(K,1)`-GDD on `X`: point `p` becomes
/// `(p,0)`, `(p,1)`, `(p,2)`, one point `inf` is added, blocks are replaced
/// by nested 4-GDDs of type `3^k` and groups by nested `(3ℓ+1,4,1)`-BIBDs
/// containing `inf`.
pub fn wilson_weight3(g: &Design, reg: &IngredientRegistry) -> Result<Nesting> {
    let groups = g.groups.as_ref().ok_or_else(|| Error::Precondition("input has no groups".into()))?;
    verify_gdd_sizes(g, &g.block_sizes(), 1, false).into_result()?;
    let mut sizes: Vec<usize> = groups.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes.dedup();
    for &k in &g.block_sizes() {
        reg.nested_gdd3(k)?;
    }
    for &l in &sizes {
        reg.nested_bibd(3 * l + 1)?;
    }
    let x = g.v();
    let mut labels: Vec<Label> = Vec::with_capacity(3 * x + 1);
    for l in &g.labels {
        for i in 0..3 {
            labels.push(Label::Text(format!("({l},{i})")));
        }
    }
    labels.push(Label::Text("inf".into()));
    let inf = 3 * x;
    let (mut blocks, mut nested) = (Vec::new(), Vec::new());
    let mut expected = 0;
    for a in &g.blocks {
        let ing = reg.nested_gdd3(a.len())?;
        let target: Vec<Point> = a.iter().flat_map(|&p| [3 * p, 3 * p + 1, 3 * p + 2]).collect();
        embed(ing, &group_order(&ing.design), &target, &mut blocks, &mut nested);
        expected += ing.b();
    }
    for grp in groups {
        let ing = reg.nested_bibd(3 * grp.len() + 1)?;
        let mut target: Vec<Point> = grp.iter().flat_map(|&p| [3 * p, 3 * p + 1, 3 * p + 2]).collect();
        target.push(inf);
        let order: Vec<Point> = (0..ing.v()).collect();
        embed(ing, &order, &target, &mut blocks, &mut nested);
        expected += ing.b();
    }
    if blocks.len() != expected {
        return Err(Error::Verification(format!("{} blocks produced, {expected} expected", blocks.len())));
    }
    finish(labels, blocks, nested)
}

/// Keeps the first `t` points of the last group of a transversal design
/// and deletes the rest; `t = 0` removes the group.
pub fn truncate_td(td: &Design, t: usize) -> Result<Design> {
    let groups = td.groups.as_ref().ok_or_else(|| Error::Precondition("input has no groups".into()))?;
    let k = groups.len();
    let m = groups.first().map_or(0, Vec::len);
    if groups.iter().any(|g| g.len() != m) || td.block_sizes() != [k] {
        return Err(Error::Precondition(format!("input is not a TD({k},{m})")));
    }
    verify_gdd(td, k, 1, false).into_result()?;
    if t > m {
        return Err(Error::Precondition(format!("cannot keep {t} points of a group of size {m}")));
    }
    let last = &groups[k - 1];
    let mut keep = vec![true; td.v()];
    for &p in &last[t..] {
        keep[p] = false;
    }
    let mut index = vec![usize::MAX; td.v()];
    let mut labels = Vec::new();
    for p in 0..td.v() {
        if keep[p] {
            index[p] = labels.len();
            labels.push(td.labels[p].clone());
        }
    }
    let blocks = td.blocks.iter().map(|b| b.iter().filter(|&&p| keep[p]).map(|&p| index[p]).collect()).collect();
    let new_groups: Vec<Vec<Point>> = groups
        .iter()
        .map(|g| g.iter().filter(|&&p| keep[p]).map(|&p| index[p]).collect::<Vec<_>>())
        .filter(|g| !g.is_empty())
        .collect();
    let out = Design::new(labels, blocks)?.with_groups(new_groups)?;
    verify_gdd_sizes(&out, &[k - 1, k], 1, false).into_result()?;
    Ok(out)
}

/// Warning for a choice of `t` that cannot lead to `v ≡ 4 mod 12` through
/// the weight-three construction.
pub fn inflation_warning(t: usize) -> Option<String> {
    (t % 4 != 1 || t < 5).then(|| format!("t = {t}: a nested (v,4,1)-BIBD with v ≡ 4 mod 12 needs t ≡ 1 mod 4, t >= 5"))
}

/// `({k,k+1},1)`-GDD from a resolvable `(n,k,1)`-BIBD: the blocks of
/// classes `1..=t` get the point `inf{i}` of their class, class `t+1`
/// becomes groups and the infinite points form one more group.
pub fn rbibd_inflate(r: &ResolvableDesign, t: usize) -> Result<Design> {
    let d = &r.design;
    let [k] = d.block_sizes()[..] else {
        return Err(Error::Precondition("blocks must have one size".into()));
    };
    verify_bibd(d, d.v(), k, 1, false).into_result()?;
    r.verify_resolution().into_result().map_err(|e| Error::Precondition(format!("design not resolvable: {e}")))?;
    let c = r.classes.len();
    if t >= c {
        return Err(Error::Precondition(format!("t = {t} must be below the {c} parallel classes")));
    }
    let mut labels = d.labels.clone();
    let mut blocks = Vec::with_capacity(d.b());
    let base = d.v();
    for i in 1..=t {
        labels.push(Label::Text(format!("inf{i}")));
    }
    let mut class_of = vec![0; d.b()];
    for (ci, class) in r.classes.iter().enumerate() {
        for &bi in class {
            class_of[bi] = ci;
        }
    }
    let mut groups: Vec<Vec<Point>> = r.classes[t].iter().map(|&bi| d.blocks[bi].clone()).collect();
    for (bi, b) in d.blocks.iter().enumerate() {
        let ci = class_of[bi];
        if ci == t {
            continue;
        }
        let mut b = b.clone();
        if ci < t {
            b.push(base + ci);
        }
        blocks.push(b);
    }
    if t > 0 {
        groups.push((base..base + t).collect());
    }
    let out = Design::new(labels, blocks)?.with_groups(groups)?;
    verify_gdd_sizes(&out, &[k, k + 1], 1, false).into_result()?;
    Ok(out)
}

/// Nested BIBD from a nested GDD by filling every group of size `h > 1`
/// with the registered nested `(h,4,1)`-BIBD.
pub fn fill_groups(g: &Nesting, reg: &IngredientRegistry) -> Result<Nesting> {
    let groups = g.design.groups.as_ref().ok_or_else(|| Error::Precondition("input has no groups".into()))?;
    verify_nesting(g, 1).into_result()?;
    for grp in groups.iter().filter(|grp| grp.len() > 1) {
        reg.nested_bibd(grp.len())?;
    }
    let mut blocks = g.design.blocks.clone();
    let mut nested = g.nested.clone();
    for grp in groups.iter().filter(|grp| grp.len() > 1) {
        let ing = reg.nested_bibd(grp.len())?;
        let order: Vec<Point> = (0..ing.v()).collect();
        embed(ing, &order, grp, &mut blocks, &mut nested);
    }
    let mut n = finish(g.design.labels.clone(), blocks, nested)?;
    n.design.group = g.design.group.clone();
    Ok(n)
}

/// Replaces every block of a PBD by the registered nested BIBD on its
/// points.
pub fn pbd_closure(d: &Design, reg: &IngredientRegistry) -> Result<Nesting> {
    verify_pbd(d, d.v(), &d.block_sizes()).into_result()?;
    for &k in &d.block_sizes() {
        reg.nested_bibd(k)?;
    }
    let (mut blocks, mut nested) = (Vec::new(), Vec::new());
    for b in &d.blocks {
        let ing = reg.nested_bibd(b.len())?;
        let order: Vec<Point> = (0..ing.v()).collect();
        embed(ing, &order, b, &mut blocks, &mut nested);
    }
    finish(d.labels.clone(), blocks, nested)
}
