//! Good 16-tuples over `F_q`, `q ≡ 1 mod 12`.

use std::sync::Arc;

use super::{order, Budget, Outcome, SearchConfig};
use crate::direct::{construct_16tuple_brdf, tuple16_lists, Tuple16Result};
use crate::error::Result;
use crate::group::{index6_cosets, FiniteField};

/// A list entry `a_i - a_j` (or the unit `a_i`) tagged with its list.
type Entry = (usize, (usize, Option<usize>));

/// Assigns `a_1..a_16` in order, checking each list entry as soon as its
/// indices are assigned: every entry is nonzero, the entries of a list lie
/// in distinct cosets of `C^6` and unit-list entries avoid `C^6` itself.
pub fn find_16tuple(field: Arc<FiniteField>, cfg: SearchConfig) -> Result<Outcome<([u32; 16], Tuple16Result)>> {
    let cosets = index6_cosets(&field)?;
    let q = field.order();
    let lists = tuple16_lists();
    // for each position, the (list, entry) pairs completed by assigning it
    let mut due: Vec<Vec<Entry>> = vec![Vec::new(); 16];
    for (li, list) in lists.iter().enumerate() {
        for &(i, j) in list {
            let last = j.map_or(i, |j| i.max(j));
            due[last - 1].push((li, (i, j)));
        }
    }
    let mut rng = cfg.rng();
    let values: Vec<Vec<u32>> = (0..16).map(|_| order((1..q).collect(), &mut rng)).collect();
    let mut budget = Budget::new(cfg.budget);
    let mut a = [0u32; 16];
    let mut occupied = vec![[false; 6]; lists.len()];
    let mut marks: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 16];
    let mut pos = [0usize; 16];
    let mut depth = 0usize;
    loop {
        if depth == 16 {
            let r = construct_16tuple_brdf(field.clone(), &a)?;
            return Ok(Outcome::Found { value: (a, r), nodes: budget.used });
        }
        let mut advanced = false;
        while pos[depth] < values[depth].len() {
            let x = values[depth][pos[depth]];
            pos[depth] += 1;
            if !budget.tick() {
                return Ok(Outcome::NotFound { nodes: budget.used, exhausted: false });
            }
            a[depth] = x;
            let mut m = Vec::new();
            let mut ok = true;
            for &(li, (i, j)) in &due[depth] {
                let val = match j {
                    Some(j) => field.sub(a[i - 1], a[j - 1]),
                    None => a[i - 1],
                };
                match cosets.coset_of(val) {
                    Some(c) if !occupied[li][c] && (j.is_some() || c != 0) => {
                        occupied[li][c] = true;
                        m.push((li, c));
                    }
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                marks[depth] = m;
                advanced = true;
                break;
            }
            for (li, c) in m {
                occupied[li][c] = false;
            }
        }
        if advanced {
            depth += 1;
            if depth < 16 {
                pos[depth] = 0;
            }
        } else {
            if depth == 0 {
                return Ok(Outcome::NotFound { nodes: budget.used, exhausted: true });
            }
            depth -= 1;
            for (li, c) in std::mem::take(&mut marks[depth]) {
                occupied[li][c] = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(q: u32) -> Arc<FiniteField> {
        Arc::new(FiniteField::with_order(q).unwrap())
    }

    #[test]
    fn finds_13_and_37() {
        for q in [13, 37] {
            let out = find_16tuple(field(q), SearchConfig::new(super::super::DEFAULT_BUDGET)).unwrap();
            let (_, r) = out.found().unwrap();
            assert!(r.check.passed);
            assert_eq!(r.nesting.v() as u32, 4 * q);
        }
    }

    #[test]
    fn zero_budget() {
        let out = find_16tuple(field(13), SearchConfig::new(0)).unwrap();
        assert!(matches!(out, Outcome::NotFound { nodes: 0, exhausted: false }));
    }

    #[test]
    fn seeded_repeat() {
        let a = find_16tuple(field(37), SearchConfig::seeded(10_000_000, 5)).unwrap().found().unwrap().0;
        let b = find_16tuple(field(37), SearchConfig::seeded(10_000_000, 5)).unwrap().found().unwrap().0;
        assert_eq!(a, b);
    }
}
