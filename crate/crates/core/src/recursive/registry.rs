//! Verified ingredients keyed by role and parameter, persisted as a
//! directory of design files plus an `index.json` manifest.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::matrix::{DifferenceMatrix, MatrixFile};
use crate::design::{verify_bibd, verify_gdd, verify_pbd, Design, DesignFile, ResolvableDesign};
use crate::error::{Error, Result};
use crate::family::{verify_brdf, DifferenceFamily, FamilyFile};
use crate::nesting::{verify_nesting, Nesting};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    NestedBibd,
    NestedGdd3,
    Brdf,
    Hdm,
    Td,
    ResolvableBibd,
    Pbd,
}

impl Role {
    pub const ALL: [Role; 7] =
        [Role::NestedBibd, Role::NestedGdd3, Role::Brdf, Role::Hdm, Role::Td, Role::ResolvableBibd, Role::Pbd];

    pub fn name(self) -> &'static str {
        match self {
            Role::NestedBibd => "nested-bibd",
            Role::NestedGdd3 => "nested-gdd-3",
            Role::Brdf => "brdf",
            Role::Hdm => "hdm",
            Role::Td => "td",
            Role::ResolvableBibd => "resolvable-bibd",
            Role::Pbd => "pbd",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Role {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        Role::ALL
            .into_iter()
            .find(|r| r.name() == norm || (norm == "nested-gdd-3^k" && *r == Role::NestedGdd3))
            .ok_or_else(|| {
                let names: Vec<&str> = Role::ALL.iter().map(|r| r.name()).collect();
                Error::InvalidInput(format!("unknown role {s}; expected one of {}", names.join(", ")))
            })
    }
}

/// Role plus its parameter, e.g. `nested-bibd 28` or `hdm 7,4`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Key {
    pub role: Role,
    pub param: String,
}

impl Key {
    pub fn new(role: Role, param: impl Into<String>) -> Self {
        Self { role, param: param.into() }
    }

    pub fn nested_bibd(v: usize) -> Self {
        Self::new(Role::NestedBibd, v.to_string())
    }

    pub fn nested_gdd3(u: usize) -> Self {
        Self::new(Role::NestedGdd3, u.to_string())
    }

    /// Human-readable name used in missing-ingredient errors.
    pub fn describe(&self) -> String {
        match self.role {
            Role::NestedBibd => format!("nested ({},4,1)-BIBD", self.param),
            Role::NestedGdd3 => format!("nested 4-GDD of type 3^{}", self.param),
            Role::Brdf => format!("({})-BRDF", self.param),
            Role::Hdm => format!("({},1)-HDM", self.param),
            Role::Td => format!("TD({})", self.param),
            Role::ResolvableBibd => format!("resolvable ({},1)-BIBD", self.param),
            Role::Pbd => format!("PBD on {} points", self.param),
        }
    }
}

impl fmt::Display for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.role, self.param)
    }
}

#[derive(Clone, Debug)]
pub enum Ingredient {
    Nesting(Nesting),
    Family(DifferenceFamily),
    Matrix(DifferenceMatrix),
    Design(Design),
    Resolvable(ResolvableDesign),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct ResolvableFile {
    design: DesignFile,
    classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct IndexEntry {
    role: Role,
    param: String,
    file: String,
}

/// Checks `ingredient` against `role` and returns the parameter it is
/// registered under.
pub fn validate(role: Role, ingredient: &Ingredient) -> Result<String> {
    let bad = || Error::InvalidInput(format!("this object cannot serve as a {role} ingredient"));
    match (role, ingredient) {
        (Role::NestedBibd, Ingredient::Nesting(n)) => {
            if n.design.groups.is_some() || n.k() != Some(4) {
                return Err(bad());
            }
            verify_nesting(n, 1).into_result()?;
            Ok(n.v().to_string())
        }
        (Role::NestedGdd3, Ingredient::Nesting(n)) => {
            let groups = n.design.groups.as_ref().ok_or_else(bad)?;
            if n.k() != Some(4) || groups.iter().any(|g| g.len() != 3) {
                return Err(bad());
            }
            verify_nesting(n, 1).into_result()?;
            Ok(groups.len().to_string())
        }
        (Role::Brdf, Ingredient::Family(f)) => {
            verify_brdf(f, false).into_result()?;
            Ok(format!("{},{},{},{}", f.group.order(), f.subgroup.order(), f.k, f.lambda))
        }
        (Role::Hdm, Ingredient::Matrix(m)) => {
            if !m.homogeneous {
                return Err(bad());
            }
            m.verify().into_result()?;
            Ok(format!("{},{}", m.group.order(), m.k()))
        }
        (Role::Td, Ingredient::Design(d)) => {
            let groups = d.groups.as_ref().ok_or_else(bad)?;
            let m = groups.first().map_or(0, Vec::len);
            if groups.iter().any(|g| g.len() != m) || d.block_sizes() != [groups.len()] {
                return Err(bad());
            }
            verify_gdd(d, groups.len(), 1, false).into_result()?;
            Ok(format!("{},{m}", groups.len()))
        }
        (Role::ResolvableBibd, Ingredient::Resolvable(r)) => {
            let [k] = r.design.block_sizes()[..] else { return Err(bad()) };
            verify_bibd(&r.design, r.design.v(), k, 1, false).into_result()?;
            r.verify_resolution().into_result()?;
            Ok(format!("{},{k}", r.design.v()))
        }
        (Role::Pbd, Ingredient::Design(d)) => {
            verify_pbd(d, d.v(), &d.block_sizes()).into_result()?;
            Ok(d.v().to_string())
        }
        _ => Err(bad()),
    }
}

#[derive(Clone, Debug, Default)]
pub struct IngredientRegistry {
    items: BTreeMap<Key, Ingredient>,
}

impl IngredientRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    /// Verifies and stores an ingredient, replacing any previous one under
    /// the same key.
    pub fn register(&mut self, role: Role, ingredient: Ingredient) -> Result<Key> {
        let key = Key::new(role, validate(role, &ingredient)?);
        self.items.insert(key.clone(), ingredient);
        Ok(key)
    }

    pub fn get(&self, key: &Key) -> Option<&Ingredient> {
        self.items.get(key)
    }

    pub fn contains(&self, key: &Key) -> bool {
        self.items.contains_key(key)
    }

    pub fn keys(&self) -> impl Iterator<Item = &Key> {
        self.items.keys()
    }

    pub fn nesting(&self, key: &Key) -> Result<&Nesting> {
        match self.items.get(key) {
            Some(Ingredient::Nesting(n)) => Ok(n),
            _ => Err(Error::MissingIngredient(key.describe())),
        }
    }

    pub fn nested_bibd(&self, v: usize) -> Result<&Nesting> {
        self.nesting(&Key::nested_bibd(v))
    }

    pub fn nested_gdd3(&self, u: usize) -> Result<&Nesting> {
        self.nesting(&Key::nested_gdd3(u))
    }

    /// Loads a registry directory, re-verifying every file.
    pub fn load(dir: &Path) -> Result<Self> {
        let mut reg = Self::new();
        let index = dir.join("index.json");
        if !index.exists() {
            return Ok(reg);
        }
        let entries: Vec<IndexEntry> = serde_json::from_str(&fs::read_to_string(index)?)?;
        for e in entries {
            let text = fs::read_to_string(dir.join(&e.file))?;
            let ingredient = parse_ingredient(e.role, &text)?;
            let key = reg.register(e.role, ingredient)?;
            if key.param != e.param {
                return Err(Error::Verification(format!(
                    "{} registered as {} but its content is {}",
                    e.file, e.param, key.param
                )));
            }
        }
        Ok(reg)
    }

    /// Writes every ingredient and the manifest into `dir`.
    pub fn save(&self, dir: &Path) -> Result<()> {
        fs::create_dir_all(dir)?;
        let mut entries = Vec::new();
        for (key, ing) in &self.items {
            let file = format!("{}-{}.json", key.role, key.param.replace(',', "_"));
            let text = match ing {
                Ingredient::Nesting(n) => serde_json::to_string_pretty(&n.to_file(1))?,
                Ingredient::Family(f) => serde_json::to_string_pretty(&f.to_file())?,
                Ingredient::Matrix(m) => serde_json::to_string_pretty(&m.to_file())?,
                Ingredient::Design(d) => serde_json::to_string_pretty(&d.to_file(None, None))?,
                Ingredient::Resolvable(r) => serde_json::to_string_pretty(&ResolvableFile {
                    design: r.design.to_file(None, None),
                    classes: r.classes.clone(),
                })?,
            };
            fs::write(dir.join(&file), text)?;
            entries.push(IndexEntry { role: key.role, param: key.param.clone(), file });
        }
        fs::write(dir.join("index.json"), serde_json::to_string_pretty(&entries)?)?;
        Ok(())
    }
}

/// Reads an object of the shape `role` expects from JSON text.
pub fn parse_ingredient(role: Role, text: &str) -> Result<Ingredient> {
    Ok(match role {
        Role::NestedBibd | Role::NestedGdd3 => {
            Ingredient::Nesting(Nesting::from_file(&serde_json::from_str::<DesignFile>(text)?)?)
        }
        Role::Brdf => Ingredient::Family(serde_json::from_str::<FamilyFile>(text)?.into_family()?),
        Role::Hdm => Ingredient::Matrix(serde_json::from_str::<MatrixFile>(text)?.into_matrix()?),
        Role::Td | Role::Pbd => Ingredient::Design(serde_json::from_str::<DesignFile>(text)?.into_design()?.0),
        Role::ResolvableBibd => {
            let f: ResolvableFile = serde_json::from_str(text)?;
            Ingredient::Resolvable(ResolvableDesign { design: f.design.into_design()?.0, classes: f.classes })
        }
    })
}
