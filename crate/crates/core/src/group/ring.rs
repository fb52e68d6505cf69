//! Direct products of finite fields with componentwise multiplication.

use std::sync::Arc;

use super::{Elem, Factor, FiniteField, FiniteGroup};
use crate::error::{Error, Result};

/// `F_{q_1} x ... x F_{q_j}`; the additive group is the matching
/// [`FiniteGroup`], so ring elements share its element indexing.
#[derive(Clone, Debug)]
pub struct ProductRing {
    fields: Vec<Arc<FiniteField>>,
    additive: FiniteGroup,
}

impl ProductRing {
    pub fn new(fields: Vec<Arc<FiniteField>>) -> Result<Self> {
        let additive = FiniteGroup::new(fields.iter().cloned().map(Factor::Field).collect())?;
        Ok(Self { fields, additive })
    }

    /// The ring built from the maximal prime-power factors of `v`, in
    /// increasing order of the factor (`R_45 = F_5 x F_9`).
    pub fn for_order(v: u32) -> Result<Self> {
        if v < 2 {
            return Err(Error::InvalidInput(format!("ring order {v} < 2")));
        }
        let mut factors = super::prime_power_factors(v);
        factors.sort_unstable();
        let fields = factors
            .into_iter()
            .map(|q| FiniteField::with_order(q).map(Arc::new))
            .collect::<Result<Vec<_>>>()?;
        Self::new(fields)
    }

    pub fn fields(&self) -> &[Arc<FiniteField>] {
        &self.fields
    }

    pub fn additive(&self) -> &FiniteGroup {
        &self.additive
    }

    pub fn order(&self) -> usize {
        self.additive.order()
    }

    pub fn one(&self) -> Elem {
        self.additive.compose(&vec![1; self.fields.len()])
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.additive.add(a, b)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        self.additive.neg(a)
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        let (a, b) = (self.additive.decompose(a), self.additive.decompose(b));
        let c: Vec<u32> = self
            .fields
            .iter()
            .zip(a.iter().zip(&b))
            .map(|(f, (&x, &y))| f.mul(x, y))
            .collect();
        self.additive.compose(&c)
    }

    /// Componentwise smallest element of multiplicative order 4, so that
    /// `x^2 = -1`.
    pub fn fourth_root(&self) -> Result<Elem> {
        let mut coords = Vec::with_capacity(self.fields.len());
        for f in &self.fields {
            if f.order() % 4 != 1 {
                return Err(Error::Precondition(format!(
                    "{} has order {} which is not 1 mod 4",
                    f.descriptor(),
                    f.order()
                )));
            }
            let x = f
                .elements()
                .find(|&a| f.mult_order(a) == Some(4))
                .expect("cyclic unit group of order divisible by 4");
            coords.push(x);
        }
        Ok(self.additive.compose(&coords))
    }
}

/// Smallest element of every orbit of `U = <x>` on the nonzero ring
/// elements, in ascending order. Fails unless `U = {1, x, -1, -x}` acts
/// semiregularly.
pub fn orbit_representatives(ring: &ProductRing, x: Elem) -> Result<Vec<Elem>> {
    let one = ring.one();
    let units = [one, x, ring.neg(one), ring.neg(x)];
    if ring.mul(x, x) != ring.neg(one) {
        return Err(Error::Precondition("x^2 != -1".into()));
    }
    let mut seen = vec![false; ring.order()];
    let mut reps = Vec::new();
    for s in 1..ring.order() {
        if seen[s] {
            continue;
        }
        let mut orbit: Vec<Elem> = units.iter().map(|&u| ring.mul(s, u)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        if orbit.len() != 4 || orbit.iter().any(|&o| o == 0 || seen[o]) {
            return Err(Error::Precondition(format!(
                "U does not act semiregularly (orbit of {})",
                ring.additive().render(s)
            )));
        }
        for o in orbit {
            seen[o] = true;
        }
        reps.push(s);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourth_roots() {
        let r5 = ProductRing::for_order(5).unwrap();
        assert_eq!(r5.fourth_root().unwrap(), 2);
        let r13 = ProductRing::for_order(13).unwrap();
        assert_eq!(r13.fourth_root().unwrap(), 5);
        let r = ProductRing::for_order(45).unwrap();
        assert!(r.additive().descriptor().starts_with("GF(5)xGF(3^2;poly="));
        let x = r.fourth_root().unwrap();
        assert_eq!(r.mul(x, x), r.neg(r.one()));
        assert_eq!(r.mul(r.mul(x, x), r.mul(x, x)), r.one());
        assert!(ProductRing::for_order(21).unwrap().fourth_root().is_err());
    }

    #[test]
    fn fourth_root_brute_force_f13() {
        let f = FiniteField::with_order(13).unwrap();
        let roots: Vec<u32> = (1..13).filter(|&a| f.pow(a, 4) == 1 && f.pow(a, 2) != 1).collect();
        assert_eq!(roots, vec![5, 8]);
    }

    #[test]
    fn representatives() {
        let r5 = ProductRing::for_order(5).unwrap();
        assert_eq!(orbit_representatives(&r5, 2).unwrap(), vec![1]);
        for v in [13u32, 25, 45, 65, 81, 117] {
            let r = ProductRing::for_order(v).unwrap();
            let x = r.fourth_root().unwrap();
            let s = orbit_representatives(&r, x).unwrap();
            assert_eq!(s.len() * 4, v as usize - 1);
            let mut all: Vec<Elem> = s
                .iter()
                .flat_map(|&s| {
                    let one = r.one();
                    [one, x, r.neg(one), r.neg(x)].map(|u| r.mul(s, u))
                })
                .collect();
            all.sort_unstable();
            assert_eq!(all, (1..v as usize).collect::<Vec<_>>());
        }
    }

    #[test]
    fn bad_root_rejected() {
        let r13 = ProductRing::for_order(13).unwrap();
        assert!(orbit_representatives(&r13, 3).is_err());
    }
}
