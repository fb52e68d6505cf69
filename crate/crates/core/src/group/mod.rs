//! Finite abelian groups presented as direct products of cyclic groups and
//! additive groups of finite fields, plus the multiplicative helpers the
//! difference-family constructions rely on.

mod cosets;
mod field;
mod ring;

use std::fmt;
use std::sync::Arc;

pub use cosets::{coset_system_check, index6_cosets, CosetCheck, CosetMode, SixthPowerCosets};
pub use field::{is_irreducible, is_prime, prime_power, prime_power_factors, FiniteField};
pub use ring::{orbit_representatives, ProductRing};

use crate::error::{Error, Result};

/// Index of an element in the canonical (mixed-radix, lexicographic) order.
pub type Elem = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factor {
    Cyclic(u32),
    Field(Arc<FiniteField>),
}

impl Factor {
    pub fn order(&self) -> u32 {
        match self {
            Factor::Cyclic(n) => *n,
            Factor::Field(f) => f.order(),
        }
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Factor::Cyclic(n) => (a + b) % n,
            Factor::Field(f) => f.add(a, b),
        }
    }

    fn neg(&self, a: u32) -> u32 {
        match self {
            Factor::Cyclic(n) => (n - a) % n,
            Factor::Field(f) => f.neg(a),
        }
    }

    fn descriptor(&self) -> String {
        match self {
            Factor::Cyclic(n) => format!("Z{n}"),
            Factor::Field(f) => f.descriptor(),
        }
    }

    fn render(&self, a: u32) -> String {
        match self {
            Factor::Cyclic(_) => a.to_string(),
            Factor::Field(f) => f.render(a),
        }
    }

    fn parse(&self, s: &str) -> Result<u32> {
        match self {
            Factor::Cyclic(n) => {
                let v: i64 = s
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad element `{s}` of Z{n}")))?;
                Ok(v.rem_euclid(i64::from(*n)) as u32)
            }
            Factor::Field(f) => f.parse(s),
        }
    }
}

/// An additive abelian group `F_1 x F_2 x ... x F_m`.
///
/// Elements are addressed by their index in the mixed-radix enumeration with
/// the first factor most significant, so `Z3 x Z5` enumerates
/// `(0,0), (0,1), ..., (0,4), (1,0), ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    factors: Vec<Factor>,
    order: usize,
}

impl FiniteGroup {
    pub fn new(factors: Vec<Factor>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDescriptor("a group needs at least one factor".into()));
        }
        let mut order: usize = 1;
        for f in &factors {
            if f.order() < 2 {
                return Err(Error::InvalidDescriptor(format!(
                    "factor {} has order < 2",
                    f.descriptor()
                )));
            }
            order = order
                .checked_mul(f.order() as usize)
                .filter(|&o| o <= 1 << 24)
                .ok_or_else(|| Error::InvalidDescriptor("group order too large".into()))?;
        }
        Ok(Self { factors, order })
    }

    pub fn cyclic(n: u32) -> Result<Self> {
        Self::new(vec![Factor::Cyclic(n)])
    }

    /// Parses `Z<n>`, `GF(<p>)`, `GF(<p>^<d>[;poly=c0,c1,...])` joined by `x`.
    pub fn parse(descriptor: &str) -> Result<Self> {
        let mut factors = Vec::new();
        for part in split_factors(descriptor.trim())? {
            factors.push(parse_factor(&part)?);
        }
        Self::new(factors)
    }

    pub fn product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self::new(factors)
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_single_cyclic(&self) -> bool {
        matches!(self.factors.as_slice(), [Factor::Cyclic(_)])
    }

    pub fn descriptor(&self) -> String {
        self.factors
            .iter()
            .map(Factor::descriptor)
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn zero(&self) -> Elem {
        0
    }

    pub fn decompose(&self, mut e: Elem) -> Vec<u32> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            let n = f.order() as usize;
            *slot = (e % n) as u32;
            e /= n;
        }
        out
    }

    pub fn compose(&self, coords: &[u32]) -> Elem {
        debug_assert_eq!(coords.len(), self.factors.len());
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.order() as usize + c as usize)
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if let [f] = self.factors.as_slice() {
            return f.add(a as u32, b as u32) as Elem;
        }
        let mut acc = 0usize;
        let (mut a, mut b) = (a, b);
        let mut scale = 1usize;
        for f in self.factors.iter().rev() {
            let n = f.order() as usize;
            let s = f.add((a % n) as u32, (b % n) as u32) as usize;
            acc += s * scale;
            scale *= n;
            a /= n;
            b /= n;
        }
        acc
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if let [f] = self.factors.as_slice() {
            return f.neg(a as u32) as Elem;
        }
        let mut acc = 0usize;
        let mut a = a;
        let mut scale = 1usize;
        for f in self.factors.iter().rev() {
            let n = f.order() as usize;
            acc += f.neg((a % n) as u32) as usize * scale;
            scale *= n;
            a /= n;
        }
        acc
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    /// Additive order of an element.
    pub fn elem_order(&self, e: Elem) -> usize {
        let mut n = 1;
        let mut cur = e;
        while cur != 0 {
            cur = self.add(cur, e);
            n += 1;
        }
        n
    }

    /// Subgroup of elements whose coordinates vanish outside the selected
    /// factors, e.g. `{0} x Z3 x Z3` inside `Z3^3` for mask `[false, true, true]`.
    pub fn factor_subgroup(&self, keep: &[bool]) -> Result<Subgroup> {
        if keep.len() != self.factors.len() {
            return Err(Error::InvalidInput("factor mask length mismatch".into()));
        }
        let elements = self
            .elements()
            .filter(|&e| {
                self.decompose(e)
                    .iter()
                    .zip(keep)
                    .all(|(&c, &k)| k || c == 0)
            })
            .collect();
        Subgroup::new(self, elements)
    }

    pub fn render(&self, e: Elem) -> String {
        let coords = self.decompose(e);
        if let [f] = self.factors.as_slice() {
            return f.render(coords[0]);
        }
        let parts: Vec<String> = coords
            .iter()
            .zip(&self.factors)
            .map(|(&c, f)| f.render(c))
            .collect();
        format!("({})", parts.join(","))
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        if let [f] = self.factors.as_slice() {
            return Ok(f.parse(s)? as Elem);
        }
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidInput(format!("expected a tuple, got `{s}`")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != self.factors.len() {
            return Err(Error::InvalidInput(format!(
                "`{s}` has {} coordinates, {} expected",
                parts.len(),
                self.factors.len()
            )));
        }
        let coords = parts
            .iter()
            .zip(&self.factors)
            .map(|(p, f)| f.parse(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.compose(&coords))
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn split_factors(s: &str) -> Result<Vec<String>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == 'x' && depth == 0 {
            parts.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    parts.push(cur);
    if depth != 0 || parts.iter().any(|p| p.trim().is_empty()) {
        return Err(Error::InvalidDescriptor(format!("malformed group descriptor `{s}`")));
    }
    Ok(parts.into_iter().map(|p| p.trim().to_string()).collect())
}

fn parse_factor(s: &str) -> Result<Factor> {
    let bad = || Error::InvalidDescriptor(format!("bad factor `{s}`"));
    if let Some(n) = s.strip_prefix('Z') {
        let n: u32 = n.parse().map_err(|_| bad())?;
        if n < 2 {
            return Err(Error::InvalidDescriptor(format!("cyclic order {n} < 2")));
        }
        return Ok(Factor::Cyclic(n));
    }
    let inner = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(bad)?;
    let (size, poly) = match inner.split_once(';') {
        Some((size, opt)) => {
            let coeffs = opt.trim().strip_prefix("poly=").ok_or_else(bad)?;
            let coeffs = coeffs
                .split(',')
                .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            (size, Some(coeffs))
        }
        None => (inner, None),
    };
    let (p, d) = match size.split_once('^') {
        Some((p, d)) => (
            p.trim().parse::<u32>().map_err(|_| bad())?,
            d.trim().parse::<u32>().map_err(|_| bad())?,
        ),
        None => {
            let q: u32 = size.trim().parse().map_err(|_| bad())?;
            prime_power(q).ok_or_else(|| Error::InvalidDescriptor(format!("{q} is not a prime power")))?
        }
    };
    Ok(Factor::Field(Arc::new(FiniteField::new(p, d, poly)?)))
}

/// A subgroup, stored as its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    elements: Vec<Elem>,
}

impl Subgroup {
    pub fn new(group: &FiniteGroup, mut elements: Vec<Elem>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::InvalidInput("subgroup must contain zero".into()));
        }
        if let Some(&e) = elements.iter().find(|&&e| e >= group.order()) {
            return Err(Error::InvalidInput(format!("element {e} outside {group}")));
        }
        for &a in &elements {
            if elements.binary_search(&group.neg(a)).is_err() {
                return Err(Error::InvalidInput("subgroup not closed under negation".into()));
            }
            for &b in &elements {
                if elements.binary_search(&group.add(a, b)).is_err() {
                    return Err(Error::InvalidInput("subgroup not closed under addition".into()));
                }
            }
        }
        Ok(Self { elements })
    }

    pub fn trivial() -> Self {
        Self { elements: vec![0] }
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// Cosets `H + t`, each sorted, listed by smallest element; the first
    /// element of each coset is its canonical representative.
    pub fn cosets(&self, group: &FiniteGroup) -> Vec<Vec<Elem>> {
        let mut seen = vec![false; group.order()];
        let mut out = Vec::new();
        for t in group.elements() {
            if seen[t] {
                continue;
            }
            let mut coset: Vec<Elem> = self.elements.iter().map(|&h| group.add(h, t)).collect();
            coset.sort_unstable();
            for &c in &coset {
                seen[c] = true;
            }
            out.push(coset);
        }
        out
    }
}
