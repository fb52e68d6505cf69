//! The index-6 subgroup of sixth powers in `F_q^*` and coset-system tests.

use serde::Serialize;

use super::FiniteField;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct SixthPowerCosets {
    /// `C^6`, ascending.
    pub c6: Vec<u32>,
    /// The six cosets, each ascending, ordered by smallest element.
    /// `cosets[0]` is `C^6` itself.
    pub cosets: Vec<Vec<u32>>,
    index: Vec<Option<u8>>,
}

impl SixthPowerCosets {
    /// Position of the coset containing `a` in [`Self::cosets`].
    pub fn coset_of(&self, a: u32) -> Option<usize> {
        self.index.get(a as usize).copied().flatten().map(usize::from)
    }
}

pub fn index6_cosets(field: &FiniteField) -> Result<SixthPowerCosets> {
    let q = field.order();
    if q % 12 != 1 {
        return Err(Error::Precondition(format!("q = {q} is not 1 mod 12")));
    }
    let mut by_class: Vec<Vec<u32>> = vec![Vec::new(); 6];
    for a in 1..q {
        let l = field.log(a).expect("nonzero");
        by_class[(l % 6) as usize].push(a);
    }
    by_class.sort_by_key(|c| c[0]);
    let mut index = vec![None; q as usize];
    for (i, c) in by_class.iter().enumerate() {
        for &a in c {
            index[a as usize] = Some(i as u8);
        }
    }
    Ok(SixthPowerCosets { c6: by_class[0].clone(), cosets: by_class, index })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CosetMode {
    /// Each of the six cosets is hit exactly once.
    Complete,
    /// Cosets hit are pairwise distinct and none of them is `C^6`.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CosetCheck {
    pub passed: bool,
    /// Coset indices of the values, in input order.
    pub hits: Vec<Option<usize>>,
    pub witness: Option<String>,
}

pub fn coset_system_check(
    field: &FiniteField,
    values: &[u32],
    cosets: &SixthPowerCosets,
    mode: CosetMode,
) -> CosetCheck {
    let hits: Vec<Option<usize>> = values.iter().map(|&a| cosets.coset_of(a)).collect();
    let fail = |w: String| CosetCheck { passed: false, hits: hits.clone(), witness: Some(w) };
    if let Some(i) = hits.iter().position(Option::is_none) {
        return fail(format!("value {} is zero", field.render(values[i])));
    }
    if mode == CosetMode::Complete && values.len() != 6 {
        return fail(format!("{} values given, a complete system has 6", values.len()));
    }
    let mut seen = [None::<usize>; 6];
    for (i, h) in hits.iter().enumerate() {
        let c = h.expect("checked above");
        if mode == CosetMode::Partial && c == 0 {
            return fail(format!("value {} lies in C^6", field.render(values[i])));
        }
        if let Some(j) = seen[c] {
            return fail(format!(
                "values {} and {} lie in the same coset of C^6",
                field.render(values[j]),
                field.render(values[i])
            ));
        }
        seen[c] = Some(i);
    }
    CosetCheck { passed: true, hits, witness: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q13_cosets_are_sign_pairs() {
        let f = FiniteField::with_order(13).unwrap();
        let c = index6_cosets(&f).unwrap();
        assert_eq!(c.c6, vec![1, 12]);
        assert_eq!(
            c.cosets,
            vec![vec![1, 12], vec![2, 11], vec![3, 10], vec![4, 9], vec![5, 8], vec![6, 7]]
        );
    }

    #[test]
    fn sizes_and_partition() {
        for q in [13u32, 25, 37, 49, 61, 121, 193] {
            let f = FiniteField::with_order(q).unwrap();
            let c = index6_cosets(&f).unwrap();
            assert_eq!(c.c6.len() as u32, (q - 1) / 6);
            assert!(c.c6.contains(&f.neg(1)));
            let mut all: Vec<u32> = c.cosets.concat();
            assert!(c.cosets.iter().all(|k| k.len() == c.c6.len()));
            all.sort_unstable();
            assert_eq!(all, (1..q).collect::<Vec<_>>());
            // sixth powers by brute force
            let mut sixth: Vec<u32> = (1..q).map(|a| f.pow(a, 6)).collect();
            sixth.sort_unstable();
            sixth.dedup();
            assert_eq!(sixth, c.c6);
        }
        assert!(index6_cosets(&FiniteField::with_order(17).unwrap()).is_err());
    }

    #[test]
    fn system_checks() {
        let f = FiniteField::with_order(13).unwrap();
        let c = index6_cosets(&f).unwrap();
        assert!(coset_system_check(&f, &[12, 11, 6, 9, 3, 8], &c, CosetMode::Complete).passed);
        assert!(coset_system_check(&f, &[5, 11, 3], &c, CosetMode::Partial).passed);
        let r = coset_system_check(&f, &[1, 2], &c, CosetMode::Partial);
        assert!(!r.passed);
        assert!(r.witness.unwrap().contains("C^6"));
        assert!(!coset_system_check(&f, &[12, 1, 6, 9, 3, 8], &c, CosetMode::Complete).passed);
    }
}
