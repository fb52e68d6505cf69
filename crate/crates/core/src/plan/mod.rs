//! Recipe planning: catalog lookups, direct constructions and recursive
//! compositions for nested `(v,4,1)`-BIBDs, plus the existence spectrum.

mod execute;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

pub use execute::Executor;

use crate::catalog::{self, EntryKind, Payload};
use crate::error::{Error, Result};
use crate::family::FamilyKind;
use crate::group::{prime_power, prime_power_factors, FiniteGroup};
use crate::recursive::{IngredientRegistry, Key, Role};

/// Verified seeds for the composite orders the generic search handles.
pub const SEARCHED_BRDFS: [(u32, u64); 3] = [(85, 1), (133, 1), (145, 1)];
pub const SEARCH_BUDGET: u64 = 200_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(tag = "object", content = "order", rename_all = "kebab-case")]
pub enum Target {
    /// Nested `(v,4,1)`-BIBD.
    Bibd(usize),
    /// Nested 4-GDD of type `3^u`.
    Gdd3(usize),
}

impl Target {
    /// Blocks of the object.
    pub fn blocks(self) -> u64 {
        match self {
            Target::Bibd(v) => (v * (v - 1) / 12) as u64,
            Target::Gdd3(u) => (3 * u * (u - 1) / 4) as u64,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Bibd(v) => write!(f, "nested ({v},4,1)-BIBD"),
            Target::Gdd3(u) => write!(f, "nested 4-GDD of type 3^{u}"),
        }
    }
}

/// The GDD a weight-three inflation starts from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Master {
    /// TD(k,m) over GF(m).
    Td { k: usize, m: u32 },
    /// Registered TD(k,m).
    RegisteredTd { k: usize, m: usize },
    /// TD(9,m) with one group cut to `t` points.
    TdTrunc { m: u32, t: usize },
    RegisteredTdTrunc { m: usize, t: usize },
    /// AG(2,q) with `t` parallel classes inflated.
    Rbibd { q: u32, t: usize },
    /// Registered resolvable `(n,k,1)`-BIBD with `t` classes inflated.
    RegisteredRbibd { n: usize, k: usize, t: usize },
    /// AG(2,q) minus a point.
    PlaneMinusPoint { q: u32 },
}

impl Master {
    /// Blocks of the master GDD.
    fn blocks(&self) -> u64 {
        match *self {
            Master::Td { m, .. } | Master::TdTrunc { m, .. } => u64::from(m) * u64::from(m),
            Master::RegisteredTd { m, .. } | Master::RegisteredTdTrunc { m, .. } => (m * m) as u64,
            Master::Rbibd { q, .. } => u64::from(q) * u64::from(q),
            Master::RegisteredRbibd { n, k, .. } => ((n * (n - 1) / (k * (k - 1))) - n / k) as u64,
            Master::PlaneMinusPoint { q } => u64::from(q) * u64::from(q) - 1,
        }
    }
}

impl fmt::Display for Master {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Master::Td { k, m } => write!(f, "TD({k},{m})"),
            Master::RegisteredTd { k, m } => write!(f, "registered TD({k},{m})"),
            Master::TdTrunc { m, t } => write!(f, "TD(9,{m}) truncated to t={t}"),
            Master::RegisteredTdTrunc { m, t } => write!(f, "registered TD(9,{m}) truncated to t={t}"),
            Master::Rbibd { q, t } => write!(f, "AG(2,{q}) inflated by t={t}"),
            Master::RegisteredRbibd { n, k, t } => write!(f, "registered resolvable ({n},{k},1)-BIBD inflated by t={t}"),
            Master::PlaneMinusPoint { q } => write!(f, "AG(2,{q}) minus a point"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum Recipe {
    Registry { key: String },
    Catalog { id: String },
    /// Cyclotomic BRDF over GF(q) with `H = {0}`.
    Cyclotomic { q: u32 },
    /// Seeded generic BRDF search over `Z_v` with `H = {0}`.
    BrdfSearch { v: u32, seed: u64, budget: u64 },
    /// Good 16-tuple search over GF(q).
    TupleSearch { q: u32 },
    /// The `Z_3 x R_u` family.
    ThreeV { u: u32 },
    Wilson { master: Master, ingredients: Vec<Plan> },
    /// Catalog BRDF times the `(GF(q),4,1)`-HDM, groups filled.
    HdmFill { brdf: String, q: u32, fill: Box<Plan> },
    /// Every line of AG(2,q) replaced by a nested `(q,4,1)`-BIBD.
    Closure { q: u32, fill: Box<Plan> },
}

impl Recipe {
    /// 0 registry, 1 catalog, 2 direct, 3 composition.
    fn class(&self) -> u8 {
        match self {
            Recipe::Registry { .. } => 0,
            Recipe::Catalog { .. } => 1,
            Recipe::Cyclotomic { .. }
            | Recipe::BrdfSearch { .. }
            | Recipe::TupleSearch { .. }
            | Recipe::ThreeV { .. } => 2,
            _ => 3,
        }
    }

    fn children(&self) -> Vec<&Plan> {
        match self {
            Recipe::Wilson { ingredients, .. } => ingredients.iter().collect(),
            Recipe::HdmFill { fill, .. } | Recipe::Closure { fill, .. } => vec![fill],
            _ => Vec::new(),
        }
    }

    fn describe(&self) -> String {
        match self {
            Recipe::Registry { key } => format!("registry {key}"),
            Recipe::Catalog { id } => format!("catalog {id}"),
            Recipe::Cyclotomic { q } => format!("cyclotomic BRDF over GF({q})"),
            Recipe::BrdfSearch { v, seed, .. } => format!("BRDF search over Z{v}, seed {seed}"),
            Recipe::TupleSearch { q } => format!("16-tuple search over GF({q})"),
            Recipe::ThreeV { u } => format!("Z3 x R{u} BRDF"),
            Recipe::Wilson { master, .. } => format!("wilson weight-3 on {master}"),
            Recipe::HdmFill { brdf, q, .. } => format!("{brdf} x (GF({q}),4,1)-HDM, groups filled"),
            Recipe::Closure { q, .. } => format!("PBD closure of AG(2,{q})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Plan {
    pub target: Target,
    pub recipe: Recipe,
    /// Composition depth; leaves are 0.
    pub depth: usize,
    /// Blocks of every object built along the tree.
    pub total_blocks: u64,
}

impl Plan {
    fn leaf(target: Target, recipe: Recipe) -> Self {
        Self { target, recipe, depth: 0, total_blocks: target.blocks() }
    }

    fn composed(target: Target, recipe: Recipe, extra: u64) -> Self {
        let kids = recipe.children();
        let depth = 1 + kids.iter().map(|p| p.depth).max().unwrap_or(0);
        let total = target.blocks() + extra + kids.iter().map(|p| p.total_blocks).sum::<u64>();
        Self { target, recipe, depth, total_blocks: total }
    }

    fn rank(&self) -> (u8, usize, u64) {
        (self.recipe.class(), self.depth, self.total_blocks)
    }

    fn render(&self, indent: usize, out: &mut String) {
        out.push_str(&format!("{}{}: {}\n", "  ".repeat(indent), self.target, self.recipe.describe()));
        for c in self.recipe.children() {
            c.render(indent + 1, out);
        }
    }
}

impl fmt::Display for Plan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(0, &mut s);
        f.write_str(s.trim_end())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum PlanOutcome {
    Resolved { v: usize, plan: Plan },
    /// No route with built-ins and the registry; `missing` names the
    /// external ingredients that would complete a route.
    Unresolved { v: usize, missing: Vec<String> },
}

impl PlanOutcome {
    pub fn plan(&self) -> Option<&Plan> {
        match self {
            PlanOutcome::Resolved { plan, .. } => Some(plan),
            PlanOutcome::Unresolved { .. } => None,
        }
    }
}

impl fmt::Display for PlanOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlanOutcome::Resolved { plan, .. } => write!(f, "{plan}"),
            PlanOutcome::Unresolved { v, missing } if missing.is_empty() => {
                write!(f, "UNRESOLVED v={v}: no route from built-ins or the registry")
            }
            PlanOutcome::Unresolved { v, missing } => {
                write!(f, "UNRESOLVED v={v}: needs {}", missing.join("; or "))
            }
        }
    }
}

fn is_prime_power(n: usize) -> bool {
    u32::try_from(n).ok().and_then(prime_power).is_some()
}

fn in_spectrum(v: usize) -> bool {
    v >= 13 && (v % 12 == 1 || v % 12 == 4)
}

/// A strict, k = 4 Banff family usable in an HDM product.
struct ProductBase {
    id: String,
    n: usize,
    h: usize,
}

fn product_bases() -> Vec<ProductBase> {
    let Ok(entries) = catalog::entries() else { return Vec::new() };
    entries
        .iter()
        .filter_map(|e| match &e.payload {
            Payload::Family { family, .. }
                if e.kind == EntryKind::Brdf && family.kind == FamilyKind::Brdf && family.k == 4 =>
            {
                let n = FiniteGroup::parse(&family.group).ok()?.order();
                Some(ProductBase { id: e.id.clone(), n, h: family.subgroup.len() })
            }
            Payload::Tuple { field, .. } => {
                let q = FiniteGroup::parse(field).ok()?.order();
                Some(ProductBase { id: e.id.clone(), n: 4 * q, h: 4 })
            }
            _ => None,
        })
        .collect()
}

/// Best-first planner with memoized sub-plans.
pub struct Planner<'a> {
    reg: &'a IngredientRegistry,
    memo: HashMap<Target, Option<Plan>>,
    bases: Vec<ProductBase>,
}

impl<'a> Planner<'a> {
    pub fn new(reg: &'a IngredientRegistry) -> Self {
        Self { reg, memo: HashMap::new(), bases: product_bases() }
    }

    fn registered_td(&self, k: usize, m: usize) -> bool {
        self.reg.contains(&Key::new(Role::Td, format!("{k},{m}")))
    }

    pub fn best(&mut self, t: Target) -> Option<Plan> {
        if let Some(p) = self.memo.get(&t) {
            return p.clone();
        }
        let p = match t {
            Target::Bibd(v) => self.best_bibd(v),
            Target::Gdd3(u) => self.best_gdd3(u),
        };
        self.memo.insert(t, p.clone());
        p
    }

    fn best_gdd3(&mut self, u: usize) -> Option<Plan> {
        let t = Target::Gdd3(u);
        if self.reg.contains(&Key::nested_gdd3(u)) {
            return Some(Plan::leaf(t, Recipe::Registry { key: Key::nested_gdd3(u).to_string() }));
        }
        if let Some(e) = catalog::nested_gdd3_entry(u) {
            return Some(Plan::leaf(t, Recipe::Catalog { id: e.id.clone() }));
        }
        let three_v = u >= 5 && u32::try_from(u).is_ok_and(|u| prime_power_factors(u).iter().all(|q| q % 4 == 1));
        three_v.then(|| Plan::leaf(t, Recipe::ThreeV { u: u as u32 }))
    }

    fn direct_bibd(&self, v: usize) -> Option<Recipe> {
        let v32 = u32::try_from(v).ok()?;
        if v % 12 == 1 && is_prime_power(v) {
            return Some(Recipe::Cyclotomic { q: v32 });
        }
        if let Some(&(_, seed)) = SEARCHED_BRDFS.iter().find(|(n, _)| *n == v32) {
            return Some(Recipe::BrdfSearch { v: v32, seed, budget: SEARCH_BUDGET });
        }
        if v.is_multiple_of(4) && (v / 4) % 12 == 1 && is_prime_power(v / 4) {
            return Some(Recipe::TupleSearch { q: v32 / 4 });
        }
        None
    }

    /// Every sub-target plannable, or `None`.
    fn all(&mut self, targets: &[Target]) -> Option<Vec<Plan>> {
        let mut seen = Vec::new();
        let mut out = Vec::new();
        for &t in targets {
            if seen.contains(&t) {
                continue;
            }
            seen.push(t);
            out.push(self.best(t)?);
        }
        Some(out)
    }

    fn best_bibd(&mut self, v: usize) -> Option<Plan> {
        let t = Target::Bibd(v);
        if !in_spectrum(v) {
            return None;
        }
        if self.reg.contains(&Key::nested_bibd(v)) {
            return Some(Plan::leaf(t, Recipe::Registry { key: Key::nested_bibd(v).to_string() }));
        }
        if let Some(e) = catalog::nested_bibd_entry(v) {
            return Some(Plan::leaf(t, Recipe::Catalog { id: e.id.clone() }));
        }
        if let Some(r) = self.direct_bibd(v) {
            return Some(Plan::leaf(t, r));
        }
        let mut best: Option<Plan> = None;
        for cand in self.compositions(v) {
            if best.as_ref().is_none_or(|b| cand.rank() < b.rank()) {
                best = Some(cand);
            }
        }
        best
    }

    fn wilson(&mut self, v: usize, master: Master, targets: &[Target]) -> Option<Plan> {
        let ingredients = self.all(targets)?;
        let extra = master.blocks();
        Some(Plan::composed(Target::Bibd(v), Recipe::Wilson { master, ingredients }, extra))
    }

    fn compositions(&mut self, v: usize) -> Vec<Plan> {
        let mut out = Vec::new();
        let x = (v - 1) / 3;
        if !(v - 1).is_multiple_of(3) {
            return out;
        }
        // Resolvable designs: AG(2,q), then registered ones.
        for q in 4..=x {
            if q * q > x {
                break;
            }
            let t = x - q * q;
            if t > q || !is_prime_power(q) {
                continue;
            }
            let mut ts = vec![Target::Gdd3(q), Target::Bibd(3 * q + 1)];
            if t > 0 {
                ts.extend([Target::Gdd3(q + 1), Target::Bibd(3 * t + 1)]);
            }
            if let Some(p) = self.wilson(v, Master::Rbibd { q: q as u32, t }, &ts) {
                out.push(p);
            }
        }
        let resolvables: Vec<(usize, usize)> = self
            .reg
            .keys()
            .filter(|key| key.role == Role::ResolvableBibd)
            .filter_map(|key| {
                let (n, k) = key.param.split_once(',')?;
                Some((n.parse().ok()?, k.parse().ok()?))
            })
            .collect();
        for (n, k) in resolvables {
            let classes = (n - 1) / (k - 1);
            if x < n || x - n >= classes {
                continue;
            }
            let t = x - n;
            let mut ts = vec![Target::Gdd3(k), Target::Bibd(3 * k + 1)];
            if t > 0 {
                ts.extend([Target::Gdd3(k + 1), Target::Bibd(3 * t + 1)]);
            }
            if let Some(p) = self.wilson(v, Master::RegisteredRbibd { n, k, t }, &ts) {
                out.push(p);
            }
        }
        // Transversal designs, whole and truncated.
        for k in 4..=x.min(64) {
            if !x.is_multiple_of(k) {
                continue;
            }
            let m = x / k;
            let master = if is_prime_power(m) && k <= m + 1 {
                Master::Td { k, m: m as u32 }
            } else if self.registered_td(k, m) {
                Master::RegisteredTd { k, m }
            } else {
                continue;
            };
            if let Some(p) = self.wilson(v, master, &[Target::Gdd3(k), Target::Bibd(3 * m + 1)]) {
                out.push(p);
            }
        }
        for m in 8..x / 8 + 1 {
            if 8 * m >= x {
                break;
            }
            let t = x - 8 * m;
            if t >= m {
                continue;
            }
            let master = if is_prime_power(m) {
                Master::TdTrunc { m: m as u32, t }
            } else if self.registered_td(9, m) {
                Master::RegisteredTdTrunc { m, t }
            } else {
                continue;
            };
            let ts = [Target::Gdd3(8), Target::Gdd3(9), Target::Bibd(3 * m + 1), Target::Bibd(3 * t + 1)];
            if let Some(p) = self.wilson(v, master, &ts) {
                out.push(p);
            }
        }
        // AG(2,q) minus a point: groups of size q-1, blocks of size q.
        for q in 4..=x {
            if q * q - 1 > x {
                break;
            }
            if q * q - 1 == x && is_prime_power(q) {
                if let Some(p) =
                    self.wilson(v, Master::PlaneMinusPoint { q: q as u32 }, &[Target::Gdd3(q), Target::Bibd(3 * q - 2)])
                {
                    out.push(p);
                }
            }
        }
        // HDM products of catalog Banff families.
        let bases: Vec<(String, usize, usize)> = self.bases.iter().map(|b| (b.id.clone(), b.n, b.h)).collect();
        for (id, n, h) in bases {
            if !v.is_multiple_of(n) {
                continue;
            }
            let q = v / n;
            if q < 5 || !is_prime_power(q) {
                continue;
            }
            if let Some(fill) = self.best(Target::Bibd(h * q)) {
                let gdd_blocks = Target::Bibd(v).blocks() - (v / (h * q)) as u64 * Target::Bibd(h * q).blocks();
                let recipe = Recipe::HdmFill { brdf: id, q: q as u32, fill: Box::new(fill) };
                out.push(Plan::composed(Target::Bibd(v), recipe, gdd_blocks));
            }
        }
        // Closure of an affine plane.
        let r = (v as f64).sqrt().round() as usize;
        if r * r == v && is_prime_power(r) {
            if let Some(fill) = self.best(Target::Bibd(r)) {
                let recipe = Recipe::Closure { q: r as u32, fill: Box::new(fill) };
                out.push(Plan::composed(Target::Bibd(v), recipe, (r * r + r) as u64));
            }
        }
        out
    }

    /// External ingredients that would give a route for `v`.
    fn missing(&mut self, v: usize) -> Vec<String> {
        let mut out = Vec::new();
        if let Ok(entries) = catalog::entries() {
            for e in entries {
                if let Payload::ResolvableInflation { v: ev, resolvable, .. } = &e.payload {
                    if *ev == v {
                        out.push(format!("a resolvable ({resolvable},8,1)-BIBD ({})", e.id));
                    }
                }
            }
        }
        let x = (v - 1) / 3;
        for m in 8..x / 8 + 1 {
            if 8 * m >= x {
                break;
            }
            let t = x - 8 * m;
            if t >= m || is_prime_power(m) {
                continue;
            }
            let ts = [Target::Gdd3(8), Target::Gdd3(9), Target::Bibd(3 * m + 1), Target::Bibd(3 * t + 1)];
            if self.all(&ts).is_some() {
                out.push(format!("a TD(9,{m}) (registered as td 9,{m})"));
            }
        }
        out
    }
}

fn check_spectrum(v: usize) -> Result<()> {
    if in_spectrum(v) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("v = {v} is outside the spectrum v ≡ 1, 4 mod 12, v >= 13")))
    }
}

/// Recipe for a nested `(v,4,1)`-BIBD from the registry and built-ins, or
/// UNRESOLVED with the missing external ingredients.
pub fn plan(v: usize, reg: &IngredientRegistry) -> Result<PlanOutcome> {
    check_spectrum(v)?;
    let mut p = Planner::new(reg);
    Ok(match p.best(Target::Bibd(v)) {
        Some(plan) => PlanOutcome::Resolved { v, plan },
        None => PlanOutcome::Unresolved { v, missing: p.missing(v) },
    })
}

/// `v = 3(8m+t)+1` with `v = 192w+u`, `m = 8w`, `t = (u-1)/3`, `16 <= u <= 196`.
pub fn decomposition(v: usize) -> Option<(usize, usize)> {
    if v % 12 != 4 || v < 1924 {
        return None;
    }
    let u = 16 + (v - 16) % 192;
    let w = (v - u) / 192;
    Some((8 * w, (u - 1) / 3))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Spectrum {
    Exists {
        v: usize,
        /// Where existence comes from.
        basis: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        plan: Option<Plan>,
    },
    Impossible { v: usize, reason: String },
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spectrum::Exists { v, basis, plan } => {
                write!(f, "EXISTS v={v}: {basis}")?;
                if let Some(p) = plan {
                    write!(f, "\n{p}")?;
                }
                Ok(())
            }
            Spectrum::Impossible { v, reason } => write!(f, "IMPOSSIBLE v={v}: {reason}"),
        }
    }
}

pub fn spectrum(v: usize, reg: &IngredientRegistry) -> Result<Spectrum> {
    if v == 0 {
        return Err(Error::InvalidInput("v must be at least 1".into()));
    }
    if v % 12 != 1 && v % 12 != 4 {
        return Ok(Spectrum::Impossible {
            v,
            reason: format!("{v} ≢ 1, 4 mod 12, so no ({v},4,1)-BIBD exists"),
        });
    }
    if v < 4 {
        return Ok(Spectrum::Impossible { v, reason: format!("v = {v} < k = 4") });
    }
    if v == 4 {
        return Ok(Spectrum::Impossible {
            v,
            reason: "the (4,4,1)-BIBD is one block on every point, leaving no point to nest".into(),
        });
    }
    let outcome = plan(v, reg)?;
    let symbolic = decomposition(v).map(|(m, t)| {
        format!("{v} = 3(8·{m}+{t})+1 with a TD(9,{m}) and a nested ({},4,1)-BIBD", 3 * t + 1)
    });
    if let PlanOutcome::Resolved { plan, .. } = outcome {
        let basis = match (&plan.recipe, symbolic) {
            (_, Some(s)) => format!("{s}; built-in recipe below"),
            (Recipe::Catalog { id }, None) => format!("catalog {} ({})", id, catalog::entry(id)?.source),
            _ => "recipe".to_string(),
        };
        return Ok(Spectrum::Exists { v, basis, plan: Some(plan) });
    }
    let basis = if let Some(s) = symbolic {
        format!("{s} (ingredients external)")
    } else if v % 12 == 4 {
        let PlanOutcome::Unresolved { missing, .. } = outcome else { unreachable!() };
        format!("known to exist; construction needs external ingredients: {}", missing.join("; or "))
    } else {
        "known to exist for every v ≡ 1 mod 12; construction needs external PBDs".to_string()
    };
    Ok(Spectrum::Exists { v, basis, plan: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan_of(v: usize) -> Plan {
        match plan(v, &IngredientRegistry::new()).unwrap() {
            PlanOutcome::Resolved { plan, .. } => plan,
            other => panic!("{other}"),
        }
    }

    #[test]
    fn catalog_first() {
        assert_eq!(plan_of(61).recipe, Recipe::Catalog { id: "table1-v61".into() });
        assert_eq!(plan_of(16).recipe, Recipe::Catalog { id: "ex4.1-v16".into() });
    }

    #[test]
    fn wilson_208() {
        let p = plan_of(208);
        match &p.recipe {
            Recipe::Wilson { master: Master::Rbibd { q: 8, t: 5 }, ingredients } => {
                let targets: Vec<Target> = ingredients.iter().map(|i| i.target).collect();
                assert!(targets.contains(&Target::Bibd(25)) && targets.contains(&Target::Bibd(16)));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn outside_spectrum() {
        assert!(matches!(plan(10, &IngredientRegistry::new()), Err(Error::InvalidInput(_))));
        assert!(plan(4, &IngredientRegistry::new()).is_err());
    }

    #[test]
    fn resolvable_gap_is_named() {
        match plan(568, &IngredientRegistry::new()).unwrap() {
            PlanOutcome::Unresolved { missing, .. } => assert!(missing[0].contains("(176,8,1)"), "{missing:?}"),
            other => panic!("{other}"),
        }
    }

    #[test]
    fn decompositions() {
        assert_eq!(decomposition(1924), Some((72, 65)));
        assert_eq!(decomposition(1936), Some((80, 5)));
        assert_eq!(decomposition(1912), None);
    }

    #[test]
    fn spectrum_cases() {
        let reg = IngredientRegistry::new();
        for v in [10, 2, 3, 5, 6, 7] {
            assert!(matches!(spectrum(v, &reg).unwrap(), Spectrum::Impossible { .. }), "{v}");
        }
        assert!(matches!(spectrum(1, &reg).unwrap(), Spectrum::Impossible { .. }));
        assert!(matches!(spectrum(4, &reg).unwrap(), Spectrum::Impossible { .. }));
        match spectrum(16, &reg).unwrap() {
            Spectrum::Exists { basis, .. } => assert!(basis.contains("ex4.1-v16"), "{basis}"),
            other => panic!("{other}"),
        }
        match spectrum(1924, &reg).unwrap() {
            Spectrum::Exists { basis, .. } => assert!(basis.contains("3(8·72+65)+1"), "{basis}"),
            other => panic!("{other}"),
        }
    }
}
