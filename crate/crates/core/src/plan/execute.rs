//! Runs a plan bottom-up. Every intermediate object is re-verified when it
//! is registered for the next step.

use std::collections::HashMap;
use std::sync::Arc;

use super::{Master, Plan, Recipe, Target};
use crate::catalog;
use crate::design::{affine_plane, pbd_to_gdd, transversal_design, Design};
use crate::direct::construct_3v_brdf;
use crate::error::{Error, Result};
use crate::family::brdf_to_nested_gdd;
use crate::group::{FiniteField, FiniteGroup, Subgroup};
use crate::nesting::{verify_nesting, Nesting};
use crate::recursive::{
    fill_groups, hdm_from_field, hdm_product, pbd_closure, rbibd_inflate, truncate_td, wilson_weight3, Ingredient,
    IngredientRegistry, Key, Role,
};
use crate::search::{find_16tuple, find_brdf, BrdfStrategy, Outcome, SearchConfig, DEFAULT_BUDGET};

pub struct Executor<'a> {
    reg: &'a IngredientRegistry,
    cache: HashMap<Target, Nesting>,
}

fn found<T>(o: Outcome<T>, what: &str) -> Result<T> {
    match o {
        Outcome::Found { value, .. } => Ok(value),
        Outcome::NotFound { nodes, .. } => Err(Error::NotFound(format!("{what}: nothing found in {nodes} nodes"))),
    }
}

fn strip_unit_groups(mut n: Nesting) -> Nesting {
    if n.design.groups.as_ref().is_some_and(|gs| gs.iter().all(|g| g.len() == 1)) {
        n.design.groups = None;
    }
    n
}

impl<'a> Executor<'a> {
    pub fn new(reg: &'a IngredientRegistry) -> Self {
        Self { reg, cache: HashMap::new() }
    }

    /// Builds the plan's object and checks it with `verify_nesting`.
    pub fn run(&mut self, plan: &Plan) -> Result<Nesting> {
        if let Some(n) = self.cache.get(&plan.target) {
            return Ok(n.clone());
        }
        let n = self.build(plan)?;
        let expected = match plan.target {
            Target::Bibd(v) => v,
            Target::Gdd3(u) => 3 * u,
        };
        if n.v() != expected {
            return Err(Error::Verification(format!("{} built on {} points", plan.target, n.v())));
        }
        verify_nesting(&n, 1).into_result()?;
        self.cache.insert(plan.target, n.clone());
        Ok(n)
    }

    fn registered(&self, role: Role, param: String) -> Result<&'a Ingredient> {
        let key = Key::new(role, param);
        self.reg.get(&key).ok_or_else(|| Error::MissingIngredient(key.describe()))
    }

    fn local_registry(&mut self, plans: &[&Plan]) -> Result<IngredientRegistry> {
        let mut local = IngredientRegistry::new();
        for p in plans {
            let n = self.run(p)?;
            let role = match p.target {
                Target::Bibd(_) => Role::NestedBibd,
                Target::Gdd3(_) => Role::NestedGdd3,
            };
            local.register(role, Ingredient::Nesting(n))?;
        }
        Ok(local)
    }

    fn master(&self, m: &Master) -> Result<Design> {
        let td = |k: usize, m: usize| -> Result<Design> {
            match self.registered(Role::Td, format!("{k},{m}"))? {
                Ingredient::Design(d) => Ok(d.clone()),
                _ => Err(Error::InvalidInput(format!("td {k},{m} is not a design"))),
            }
        };
        match *m {
            Master::Td { k, m } => transversal_design(k, m),
            Master::RegisteredTd { k, m } => td(k, m),
            Master::TdTrunc { m, t } => truncate_td(&transversal_design(9, m)?, t),
            Master::RegisteredTdTrunc { m, t } => truncate_td(&td(9, m)?, t),
            Master::Rbibd { q, t } => rbibd_inflate(&affine_plane(q)?, t),
            Master::RegisteredRbibd { n, k, t } => match self.registered(Role::ResolvableBibd, format!("{n},{k}"))? {
                Ingredient::Resolvable(r) => rbibd_inflate(r, t),
                _ => Err(Error::InvalidInput(format!("resolvable-bibd {n},{k} is not resolvable"))),
            },
            Master::PlaneMinusPoint { q } => {
                let plane = affine_plane(q)?.design;
                let x = plane.labels[0].clone();
                pbd_to_gdd(&plane, &x)
            }
        }
    }

    fn build(&mut self, plan: &Plan) -> Result<Nesting> {
        match &plan.recipe {
            Recipe::Registry { .. } => match plan.target {
                Target::Bibd(v) => self.reg.nested_bibd(v).cloned(),
                Target::Gdd3(u) => self.reg.nested_gdd3(u).cloned(),
            },
            Recipe::Catalog { id } => catalog::entry(id)?
                .build()?
                .into_nesting()
                .ok_or_else(|| Error::InvalidInput(format!("{id} builds no nesting"))),
            Recipe::Cyclotomic { q } => {
                let g = FiniteGroup::parse(&format!("GF({q})"))?;
                let o = find_brdf(
                    &g,
                    &Subgroup::trivial(),
                    4,
                    1,
                    false,
                    BrdfStrategy::Cyclotomic,
                    SearchConfig::new(DEFAULT_BUDGET),
                )?;
                let f = found(o, &format!("cyclotomic BRDF over GF({q})"))?;
                Ok(strip_unit_groups(brdf_to_nested_gdd(&f)?))
            }
            Recipe::BrdfSearch { v, seed, budget } => {
                let g = FiniteGroup::cyclic(*v)?;
                let cfg = SearchConfig::seeded(*budget, *seed);
                let o = find_brdf(&g, &Subgroup::trivial(), 4, 1, false, BrdfStrategy::Generic, cfg)?;
                let f = found(o, &format!("BRDF over Z{v}"))?;
                Ok(strip_unit_groups(brdf_to_nested_gdd(&f)?))
            }
            Recipe::TupleSearch { q } => {
                let field = Arc::new(FiniteField::with_order(*q)?);
                let (_, r) = found(find_16tuple(field, SearchConfig::new(DEFAULT_BUDGET))?, "16-tuple")?;
                Ok(r.nesting)
            }
            Recipe::ThreeV { u } => brdf_to_nested_gdd(&construct_3v_brdf(*u)?),
            Recipe::Wilson { master, ingredients } => {
                let kids: Vec<&Plan> = ingredients.iter().collect();
                let local = self.local_registry(&kids)?;
                wilson_weight3(&self.master(master)?, &local)
            }
            Recipe::HdmFill { brdf, q, fill } => {
                let f = catalog::entry(brdf)?.family()?;
                let product = hdm_product(&f, &hdm_from_field(*q, f.k)?)?;
                let gdd = brdf_to_nested_gdd(&product)?;
                let local = self.local_registry(&[fill])?;
                fill_groups(&gdd, &local)
            }
            Recipe::Closure { q, fill } => {
                let local = self.local_registry(&[fill])?;
                pbd_closure(&affine_plane(*q)?.design, &local)
            }
        }
    }
}
