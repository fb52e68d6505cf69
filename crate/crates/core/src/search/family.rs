//! Banff relative difference families by backtracking.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use rand::seq::SliceRandom;
use rand_chacha::ChaCha8Rng;

use super::{order, Budget, Outcome, SearchConfig};
use crate::error::{Error, Result};
use crate::family::{quarter_subgroup, verify_family, DifferenceFamily, FamilyKind};
use crate::group::{index6_cosets, is_prime, Elem, Factor, FiniteField, FiniteGroup, Subgroup};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BrdfStrategy {
    /// Cyclotomic search first when it applies, then the generic one.
    #[default]
    Auto,
    Generic,
    Cyclotomic,
}

/// A `(G,H,k,λ)` Banff family, or a weak one when `weak` (then `G` must be
/// cyclic and `H` its subgroup of order 4). Blocks are emitted sorted, in
/// order of their smallest element.
pub fn find_brdf(
    g: &FiniteGroup,
    h: &Subgroup,
    k: usize,
    lambda: usize,
    weak: bool,
    strategy: BrdfStrategy,
    cfg: SearchConfig,
) -> Result<Outcome<DifferenceFamily>> {
    let n = g.order();
    if k < 2 || lambda == 0 {
        return Err(Error::InvalidInput("need k >= 2 and lambda >= 1".into()));
    }
    if !(lambda * (n - h.order())).is_multiple_of(k * (k - 1)) {
        return Err(Error::InvalidInput(format!(
            "lambda(|G| - |H|) = {} is not divisible by k(k-1) = {}",
            lambda * (n - h.order()),
            k * (k - 1)
        )));
    }
    if weak && quarter_subgroup(g).map(|q| q != *h).unwrap_or(true) {
        return Err(Error::InvalidInput("a weak family needs Z_v with H of order 4".into()));
    }
    let kind = if weak { FamilyKind::Weak } else { FamilyKind::Brdf };
    let mut budget = Budget::new(cfg.budget);
    let field = cyclotomic_field(g, h, k, lambda, weak);
    if strategy == BrdfStrategy::Cyclotomic && field.is_none() {
        return Err(Error::InvalidInput(
            "the cyclotomic strategy needs a field of order q ≡ 1 mod 12, H = {0}, k = 4, lambda = 1".into(),
        ));
    }
    if strategy != BrdfStrategy::Generic {
        if let Some(f) = &field {
            if let Some(blocks) = cyclotomic(f, &mut budget, cfg) {
                return finish(g, h, kind, lambda, blocks, budget.used);
            }
            if strategy == BrdfStrategy::Cyclotomic || budget.spent() {
                return Ok(Outcome::NotFound { nodes: budget.used, exhausted: !budget.spent() });
            }
        }
    }
    let mut s = Generic::new(g, h, k, lambda, weak, cfg);
    match s.run(&mut budget) {
        Some(blocks) => finish(g, h, kind, lambda, blocks, budget.used),
        None => Ok(Outcome::NotFound { nodes: budget.used, exhausted: !budget.spent() }),
    }
}

fn finish(
    g: &FiniteGroup,
    h: &Subgroup,
    kind: FamilyKind,
    lambda: usize,
    mut blocks: Vec<Vec<Elem>>,
    nodes: u64,
) -> Result<Outcome<DifferenceFamily>> {
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort_unstable();
    let mut f = DifferenceFamily::new(g.clone(), h.clone(), kind, blocks);
    f.lambda = lambda;
    verify_family(&f)?.into_result()?;
    Ok(Outcome::Found { value: f, nodes })
}

/// The field structure on `G` when the cyclotomic search applies.
fn cyclotomic_field(g: &FiniteGroup, h: &Subgroup, k: usize, lambda: usize, weak: bool) -> Option<Arc<FiniteField>> {
    if weak || k != 4 || lambda != 1 || h.order() != 1 || g.order() % 12 != 1 {
        return None;
    }
    match g.factors() {
        [Factor::Field(f)] => Some(f.clone()),
        [Factor::Cyclic(p)] if is_prime(*p) => FiniteField::with_order(*p).ok().map(Arc::new),
        _ => None,
    }
}

/// Blocks `s·B`, `s` over representatives of `C^6 / {±1}`, for a block
/// `B ∋ 1` whose elements lie in distinct cosets of `C^6` and whose six
/// differences up to sign meet every coset.
fn cyclotomic(f: &FiniteField, budget: &mut Budget, cfg: SearchConfig) -> Option<Vec<Vec<Elem>>> {
    let cosets = index6_cosets(f).ok()?;
    let q = f.order();
    let coset = |a: u32| cosets.coset_of(a);
    let mut rng = cfg.rng();
    let cand: Vec<u32> = order((2..q).collect(), &mut rng);
    let one = f.one();
    let c1 = coset(one)?;
    let mut elems_used = [false; 6];
    elems_used[c1] = true;
    let mut diffs_used = [false; 6];
    // try to extend `block` by `x`; returns the cosets marked
    let mark = |block: &[u32], x: u32, eu: &mut [bool; 6], du: &mut [bool; 6]| -> Option<(usize, Vec<usize>)> {
        let cx = coset(x)?;
        if eu[cx] {
            return None;
        }
        let mut ds = Vec::with_capacity(block.len());
        for &b in block {
            let c = coset(f.sub(x, b))?;
            if du[c] || ds.contains(&c) {
                return None;
            }
            ds.push(c);
        }
        eu[cx] = true;
        for &c in &ds {
            du[c] = true;
        }
        Some((cx, ds))
    };
    let unmark = |m: &(usize, Vec<usize>), eu: &mut [bool; 6], du: &mut [bool; 6]| {
        eu[m.0] = false;
        for &c in &m.1 {
            du[c] = false;
        }
    };
    let mut found: Option<Vec<u32>> = None;
    'outer: for (ia, &a) in cand.iter().enumerate() {
        if !budget.tick() {
            return None;
        }
        let Some(ma) = mark(&[one], a, &mut elems_used, &mut diffs_used) else { continue };
        for (ib, &b) in cand.iter().enumerate().skip(ia + 1) {
            if !budget.tick() {
                return None;
            }
            let Some(mb) = mark(&[one, a], b, &mut elems_used, &mut diffs_used) else { continue };
            for &c in cand.iter().skip(ib + 1) {
                if !budget.tick() {
                    return None;
                }
                if mark(&[one, a, b], c, &mut elems_used, &mut diffs_used).is_some() {
                    found = Some(vec![one, a, b, c]);
                    break 'outer;
                }
            }
            unmark(&mb, &mut elems_used, &mut diffs_used);
        }
        unmark(&ma, &mut elems_used, &mut diffs_used);
    }
    let base = found?;
    let reps: Vec<u32> = cosets.c6.iter().copied().filter(|&s| s < f.neg(s)).collect();
    Some(reps.iter().map(|&s| base.iter().map(|&e| f.mul(s, e) as Elem).collect()).collect())
}

/// Two-stage search. Translating a block keeps its differences, so a Banff
/// family is a relative difference family (blocks taken up to translation)
/// plus a translate of every block meeting the Banff conditions. Stage one
/// branches on the smallest difference still short of `λ`, placing it as
/// `{0, d}` in a new block; stage two picks the translates.
struct Generic<'a> {
    g: &'a FiniteGroup,
    k: usize,
    lambda: usize,
    in_h: Vec<bool>,
    allowed: Vec<bool>,
    diff: Vec<usize>,
    blocks: Vec<Vec<Elem>>,
    target: usize,
    shifts: Vec<Elem>,
    used: Vec<bool>,
    placed: Vec<Vec<Elem>>,
    rng: Option<ChaCha8Rng>,
}

/// Nodes per randomized restart of a seeded generic search.
const RESTART_NODES: u64 = 200_000;

impl<'a> Generic<'a> {
    fn new(g: &'a FiniteGroup, h: &Subgroup, k: usize, lambda: usize, weak: bool, cfg: SearchConfig) -> Self {
        let n = g.order();
        let in_h: Vec<bool> = (0..n).map(|e| h.contains(e)).collect();
        let quarter = n / 4;
        let allowed: Vec<bool> = (0..n)
            .map(|e| (!in_h[e] || (weak && (e == quarter || e == 3 * quarter))) && g.neg(e) != e)
            .collect();
        let target = lambda * (n - h.order()) / (k * (k - 1));
        let rng = cfg.rng();
        let shifts = g.elements().collect();
        Self {
            g,
            k,
            lambda,
            in_h,
            allowed,
            diff: vec![0; n],
            blocks: Vec::new(),
            target,
            shifts,
            used: vec![false; n],
            placed: Vec::new(),
            rng,
        }
    }

    fn reset(&mut self) {
        self.diff.iter_mut().for_each(|d| *d = 0);
        self.used.iter_mut().for_each(|u| *u = false);
        self.blocks.clear();
        self.placed.clear();
    }

    /// Adds `x` to the block if its differences stay within `λ` and avoid
    /// `H`.
    fn push(&mut self, block: &mut Vec<Elem>, x: Elem) -> bool {
        let g = self.g;
        let mut added = Vec::with_capacity(2 * block.len());
        for &b in block.iter() {
            for d in [g.sub(x, b), g.sub(b, x)] {
                if d == 0 || self.in_h[d] || self.diff[d] >= self.lambda {
                    for d in added {
                        self.diff[d] -= 1;
                    }
                    return false;
                }
                self.diff[d] += 1;
                added.push(d);
            }
        }
        block.push(x);
        true
    }

    fn pop(&mut self, block: &mut Vec<Elem>) {
        let g = self.g;
        let x = block.pop().expect("nonempty block");
        for &b in block.iter() {
            self.diff[g.sub(x, b)] -= 1;
            self.diff[g.sub(b, x)] -= 1;
        }
    }

    /// Unseeded: one exhaustive pass. Seeded: shuffled candidate orders
    /// with a restart every `RESTART_NODES` nodes.
    fn run(&mut self, budget: &mut Budget) -> Option<Vec<Vec<Elem>>> {
        if self.rng.is_none() {
            return self.solve(budget).then(|| self.placed.clone());
        }
        while !budget.spent() {
            self.reset();
            let mut shifts = std::mem::take(&mut self.shifts);
            shifts = order(shifts, &mut self.rng);
            self.shifts = shifts;
            let mut slice = Budget::new(RESTART_NODES.min(budget.limit - budget.used));
            let found = self.solve(&mut slice);
            budget.used += slice.used;
            if found {
                return Some(self.placed.clone());
            }
        }
        None
    }

    fn solve(&mut self, budget: &mut Budget) -> bool {
        if self.blocks.len() == self.target {
            return self.place(0, budget);
        }
        let Some(d) = (0..self.g.order()).find(|&d| !self.in_h[d] && self.diff[d] < self.lambda) else {
            return false;
        };
        if !budget.tick() {
            return false;
        }
        let mut block = vec![0];
        if self.push(&mut block, d) {
            if self.extend(&mut block, 1, budget) {
                return true;
            }
            self.pop(&mut block);
        }
        false
    }

    /// Completes the current block with points `>= from`, then recurses.
    fn extend(&mut self, block: &mut Vec<Elem>, from: Elem, budget: &mut Budget) -> bool {
        if block.len() == self.k {
            self.blocks.push(block.clone());
            if self.solve(budget) {
                return true;
            }
            self.blocks.pop();
            return false;
        }
        let mut cands: Vec<Elem> = (from..self.g.order()).collect();
        if let Some(r) = &mut self.rng {
            cands.shuffle(r);
        }
        for x in cands {
            if block.contains(&x) {
                continue;
            }
            if !budget.tick() {
                return false;
            }
            if self.push(block, x) {
                if self.extend(block, x + 1, budget) {
                    return true;
                }
                self.pop(block);
            }
            if budget.spent() {
                return false;
            }
        }
        false
    }

    /// Stage two: a translate of block `i` onwards.
    fn place(&mut self, i: usize, budget: &mut Budget) -> bool {
        if i == self.blocks.len() {
            return true;
        }
        let g = self.g;
        for si in 0..self.shifts.len() {
            let t = self.shifts[si];
            if !budget.tick() {
                return false;
            }
            let b: Vec<Elem> = self.blocks[i].iter().map(|&e| g.add(e, t)).collect();
            let cells: Vec<Elem> = b.iter().flat_map(|&e| [e, g.neg(e)]).collect();
            let mut fresh = true;
            for (ci, &c) in cells.iter().enumerate() {
                if !self.allowed[c] || self.used[c] || cells[..ci].contains(&c) {
                    fresh = false;
                    break;
                }
            }
            if !fresh {
                continue;
            }
            for &c in &cells {
                self.used[c] = true;
            }
            self.placed.push(b);
            if self.place(i + 1, budget) {
                return true;
            }
            self.placed.pop();
            for &c in &cells {
                self.used[c] = false;
            }
            if budget.spent() {
                return false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(v: u32, h: &[usize]) -> (FiniteGroup, Subgroup) {
        let g = FiniteGroup::cyclic(v).unwrap();
        let h = Subgroup::new(&g, h.to_vec()).unwrap();
        (g, h)
    }

    #[test]
    fn finds_15() {
        let (g, h) = cyc(15, &[0, 5, 10]);
        let f = find_brdf(&g, &h, 4, 1, false, BrdfStrategy::Auto, SearchConfig::new(1_000_000))
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(f.blocks.len(), 1);
    }

    #[test]
    fn finds_13_both_ways() {
        let (g, h) = cyc(13, &[0]);
        for s in [BrdfStrategy::Cyclotomic, BrdfStrategy::Generic] {
            let f = find_brdf(&g, &h, 4, 1, false, s, SearchConfig::new(1_000_000)).unwrap().found().unwrap();
            assert_eq!(f.blocks.len(), 1);
        }
    }

    #[test]
    fn sixteen_is_exhausted() {
        let (g, h) = cyc(16, &[0, 4, 8, 12]);
        let out = find_brdf(&g, &h, 4, 1, false, BrdfStrategy::Auto, SearchConfig::new(100_000_000)).unwrap();
        assert!(matches!(out, Outcome::NotFound { exhausted: true, .. }), "{out:?}");
    }

    #[test]
    fn weak_40() {
        let (g, h) = cyc(40, &[0, 10, 20, 30]);
        let out = find_brdf(&g, &h, 4, 1, true, BrdfStrategy::Auto, SearchConfig::new(10_000_000)).unwrap();
        let f = out.found().unwrap();
        assert_eq!(f.kind, FamilyKind::Weak);
        assert_eq!(f.blocks.len(), 3);
    }

    #[test]
    fn divisibility_precondition() {
        let (g, h) = cyc(14, &[0]);
        assert!(find_brdf(&g, &h, 4, 1, false, BrdfStrategy::Auto, SearchConfig::new(10)).is_err());
        let (g, h) = cyc(13, &[0]);
        assert!(find_brdf(&g, &h, 4, 1, true, BrdfStrategy::Auto, SearchConfig::new(10)).is_err());
    }

    #[test]
    fn cyclotomic_prime_powers() {
        for q in [25u32, 37, 49, 97, 109, 121, 169, 193] {
            let f = Arc::new(FiniteField::with_order(q).unwrap());
            let g = FiniteGroup::new(vec![Factor::Field(f)]).unwrap();
            let h = Subgroup::trivial();
            let out =
                find_brdf(&g, &h, 4, 1, false, BrdfStrategy::Cyclotomic, SearchConfig::new(10_000_000)).unwrap();
            let fam = out.found().unwrap_or_else(|| panic!("q = {q}"));
            assert_eq!(fam.blocks.len() as u32, (q - 1) / 12);
        }
    }

    #[test]
    fn seeded_repeat() {
        let (g, h) = cyc(37, &[0]);
        let run = || {
            find_brdf(&g, &h, 4, 1, false, BrdfStrategy::Generic, SearchConfig::seeded(10_000_000, 3))
                .unwrap()
                .found()
                .unwrap()
                .blocks
        };
        assert_eq!(run(), run());
    }
}
