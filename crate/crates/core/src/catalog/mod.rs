//! Embedded catalog of published objects. Each entry is one JSON file under
//! `catalog/`, pinned by SHA-256 and checked by the matching verifier.

mod data;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::design::{DesignFile, Label};
use crate::direct::{construct_16tuple_brdf, construct_nested_28, construct_nested_gdd_3_8, Tuple16Result};
use crate::error::{Error, Result};
use crate::family::{
    brdf_short_orbit_nesting, brdf_to_nested_gdd, verify_family, weak_brdf_to_nested_bibd, DifferenceFamily,
    FamilyFile, FamilyKind,
};
use crate::group::{FiniteField, FiniteGroup};
use crate::nesting::{verify_nesting, Nesting};
use crate::recursive::{fill_groups, hdm_from_field, hdm_product, Ingredient, IngredientRegistry, Role};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EntryKind {
    #[serde(rename = "BRDF")]
    Brdf,
    #[serde(rename = "weak-BRDF")]
    WeakBrdf,
    #[serde(rename = "nesting")]
    Nesting,
    #[serde(rename = "GDD-nesting")]
    GddNesting,
    #[serde(rename = "16-tuple")]
    Tuple16,
    #[serde(rename = "construction-recipe")]
    Recipe,
}

impl EntryKind {
    pub const ALL: [EntryKind; 6] = [
        EntryKind::Brdf,
        EntryKind::WeakBrdf,
        EntryKind::Nesting,
        EntryKind::GddNesting,
        EntryKind::Tuple16,
        EntryKind::Recipe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            EntryKind::Brdf => "BRDF",
            EntryKind::WeakBrdf => "weak-BRDF",
            EntryKind::Nesting => "nesting",
            EntryKind::GddNesting => "GDD-nesting",
            EntryKind::Tuple16 => "16-tuple",
            EntryKind::Recipe => "construction-recipe",
        }
    }
}

impl fmt::Display for EntryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EntryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        EntryKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidInput(format!("unknown entry kind `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum Payload {
    /// A difference family; with a short-orbit point it also yields a
    /// nested BIBD.
    Family {
        family: FamilyFile,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        short_orbit_point: Option<Label>,
    },
    Design { design: DesignFile },
    /// One of the built-in direct constructions (`v28`, `gdd38`).
    Builtin { construction: String },
    Tuple { field: String, tuple: Vec<String> },
    /// BRDF entry times the `(GF(q),4,1)`-HDM, groups filled with a
    /// catalog nesting.
    HdmFill { v: usize, brdf: String, q: u32, fill: String },
    /// Parameters only: a resolvable `(56m+8,8,1)`-BIBD inflated by `t`
    /// points. The resolvable design is not in the catalog.
    ResolvableInflation { v: usize, m: usize, t: usize, resolvable: usize, fill: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: EntryKind,
    pub source: String,
    pub payload: Payload,
}

/// What an entry builds into.
#[derive(Clone, Debug)]
pub enum Built {
    /// A nested BIBD or nested GDD, with the family it came from if any.
    Nesting { nesting: Nesting, family: Option<DifferenceFamily> },
    Tuple(Box<Tuple16Result>),
    /// Arithmetic checked, construction needs an external ingredient.
    Symbolic(String),
}

impl Built {
    pub fn nesting(&self) -> Option<&Nesting> {
        match self {
            Built::Nesting { nesting, .. } => Some(nesting),
            Built::Tuple(t) => Some(&t.nesting),
            Built::Symbolic(_) => None,
        }
    }

    pub fn into_nesting(self) -> Option<Nesting> {
        match self {
            Built::Nesting { nesting, .. } => Some(nesting),
            Built::Tuple(t) => Some(t.nesting),
            Built::Symbolic(_) => None,
        }
    }
}

fn sha256_hex(text: &str) -> String {
    Sha256::digest(text.as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

fn load() -> Result<Vec<CatalogEntry>> {
    data::FILES
        .iter()
        .map(|&(id, text, pin)| {
            let hash = sha256_hex(text);
            if hash != pin {
                return Err(Error::Verification(format!("catalog file {id} hashes to {hash}, pinned {pin}")));
            }
            let e: CatalogEntry = serde_json::from_str(text)?;
            if e.id != id {
                return Err(Error::InvalidInput(format!("catalog file {id} declares id {}", e.id)));
            }
            Ok(e)
        })
        .collect()
}

/// All entries in catalog order. Fails if any file drifted from its pin.
pub fn entries() -> Result<&'static [CatalogEntry]> {
    static CACHE: OnceLock<std::result::Result<Vec<CatalogEntry>, String>> = OnceLock::new();
    CACHE
        .get_or_init(|| load().map_err(|e| e.to_string()))
        .as_deref()
        .map_err(|e| Error::Verification(e.clone()))
}

pub fn entry(id: &str) -> Result<&'static CatalogEntry> {
    entries()?
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::NotFound(format!("no catalog entry `{id}`")))
}

fn strip_unit_groups(mut n: Nesting) -> Nesting {
    if n.design.groups.as_ref().is_some_and(|gs| gs.iter().all(|g| g.len() == 1)) {
        n.design.groups = None;
    }
    n
}

fn parse_tuple(field: &str, tuple: &[String]) -> Result<(Arc<FiniteField>, [u32; 16])> {
    let g = FiniteGroup::parse(field)?;
    let f = match g.factors() {
        [crate::group::Factor::Field(f)] => f.clone(),
        _ => return Err(Error::InvalidInput(format!("{field} is not a field"))),
    };
    let vals = tuple.iter().map(|s| f.parse(s)).collect::<Result<Vec<_>>>()?;
    let a: [u32; 16] = vals
        .try_into()
        .map_err(|v: Vec<u32>| Error::InvalidInput(format!("a 16-tuple has 16 entries, not {}", v.len())))?;
    Ok((f, a))
}

impl CatalogEntry {
    /// The difference family of a family entry.
    pub fn family(&self) -> Result<DifferenceFamily> {
        match &self.payload {
            Payload::Family { family, .. } => family.into_family(),
            Payload::Tuple { field, tuple } => {
                let (f, a) = parse_tuple(field, tuple)?;
                Ok(construct_16tuple_brdf(f, &a)?.family)
            }
            _ => Err(Error::InvalidInput(format!("{} holds no difference family", self.id))),
        }
    }

    /// `v` of the nested `(v,4,1)`-BIBD this entry builds, read from the
    /// payload without building it.
    pub fn nested_bibd_order(&self) -> Option<usize> {
        match &self.payload {
            Payload::Family { family, short_orbit_point } => {
                let v = FiniteGroup::parse(&family.group).ok()?.order();
                (short_orbit_point.is_some() || family.subgroup.len() == 1).then_some(v)
            }
            Payload::Design { design } => (design.groups.is_none()).then_some(design.points.len()),
            Payload::Builtin { construction } => (construction == "v28").then_some(28),
            Payload::Tuple { field, .. } => FiniteGroup::parse(field).ok().map(|g| 4 * g.order()),
            Payload::HdmFill { v, .. } => Some(*v),
            Payload::ResolvableInflation { .. } => None,
        }
    }

    /// `u` for entries that build a nested 4-GDD of type `3^u`.
    pub fn gdd3_groups(&self) -> Option<usize> {
        match &self.payload {
            Payload::Family { family, short_orbit_point: None } if family.subgroup.len() == 3 => {
                FiniteGroup::parse(&family.group).ok().map(|g| g.order() / 3)
            }
            Payload::Builtin { construction } if construction == "gdd38" => Some(8),
            _ => None,
        }
    }

    /// Builds the entry's object, running every verifier on the way.
    pub fn build(&self) -> Result<Built> {
        match &self.payload {
            Payload::Family { family, short_orbit_point } => {
                let f = family.into_family()?;
                verify_family(&f)?.into_result()?;
                let nesting = match short_orbit_point {
                    None => strip_unit_groups(brdf_to_nested_gdd(&f)?),
                    Some(x) => {
                        let x = f.group.parse_elem(&x.to_string())?;
                        match f.kind {
                            FamilyKind::Weak => weak_brdf_to_nested_bibd(&f, x)?,
                            _ => brdf_short_orbit_nesting(&f, x)?,
                        }
                    }
                };
                Ok(Built::Nesting { nesting, family: Some(f) })
            }
            Payload::Design { design } => {
                let n = Nesting::from_file(design)?;
                let lambda = design.params.as_ref().map_or(1, |p| p.lambda);
                verify_nesting(&n, lambda).into_result()?;
                Ok(Built::Nesting { nesting: n, family: None })
            }
            Payload::Builtin { construction } => {
                let n = match construction.as_str() {
                    "v28" => construct_nested_28()?,
                    "gdd38" => construct_nested_gdd_3_8()?,
                    other => return Err(Error::InvalidInput(format!("unknown construction `{other}`"))),
                };
                Ok(Built::Nesting { nesting: n, family: None })
            }
            Payload::Tuple { field, tuple } => {
                let (f, a) = parse_tuple(field, tuple)?;
                let r = construct_16tuple_brdf(f, &a)?;
                verify_nesting(&r.nesting, 1).into_result()?;
                Ok(Built::Tuple(Box::new(r)))
            }
            Payload::HdmFill { v, brdf, q, fill } => {
                let f = entry(brdf)?.family()?;
                let product = hdm_product(&f, &hdm_from_field(*q, f.k)?)?;
                let gdd = brdf_to_nested_gdd(&product)?;
                let mut reg = IngredientRegistry::new();
                let filler = entry(fill)?
                    .build()?
                    .into_nesting()
                    .ok_or_else(|| Error::InvalidInput(format!("{fill} builds no nesting")))?;
                reg.register(Role::NestedBibd, Ingredient::Nesting(filler))?;
                let n = fill_groups(&gdd, &reg)?;
                if n.v() != *v {
                    return Err(Error::Verification(format!("recipe builds v = {}, declared {v}", n.v())));
                }
                verify_nesting(&n, 1).into_result()?;
                Ok(Built::Nesting { nesting: n, family: Some(product) })
            }
            Payload::ResolvableInflation { v, m, t, resolvable, fill } => {
                let checks = [
                    (*v == 168 * m + 3 * t + 25, format!("v = 168m+3t+25 fails for v={v}, m={m}, t={t}")),
                    (*resolvable == 56 * m + 8, format!("resolvable order {resolvable} is not 56m+8")),
                    (*t <= 8 * m, format!("t = {t} exceeds 8m = {}", 8 * m)),
                    (t % 4 == 1, format!("t = {t} is not 1 mod 4")),
                    (
                        entry(fill)?.nested_bibd_order() == Some(3 * t + 1),
                        format!("{fill} is not a nested ({},4,1)-BIBD", 3 * t + 1),
                    ),
                ];
                if let Some((_, msg)) = checks.into_iter().find(|(ok, _)| !ok) {
                    return Err(Error::Verification(msg));
                }
                Ok(Built::Symbolic(format!(
                    "needs a resolvable ({resolvable},8,1)-BIBD (external); fill ({},4,1) from {fill}",
                    3 * t + 1
                )))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub kind: EntryKind,
    pub source: String,
    pub passed: bool,
    /// Verified object, e.g. a nesting report subject.
    pub subject: String,
    pub points: usize,
    pub blocks: usize,
    /// Base blocks of the family, when the entry has one.
    pub base_blocks: Option<usize>,
    pub detail: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogSummary {
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
}

impl CatalogSummary {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for CatalogSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let status = if e.passed { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<16} {:<20} {}", e.id, e.kind.name(), e.subject)?;
            if let Some(d) = &e.detail {
                write!(f, " [{d}]")?;
            }
            writeln!(f)?;
        }
        write!(f, "{} passed, {} failed", self.passed, self.failed)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Filter {
    pub id: Option<String>,
    pub kind: Option<EntryKind>,
}

impl Filter {
    fn matches(&self, e: &CatalogEntry) -> bool {
        self.id.as_ref().is_none_or(|id| *id == e.id) && self.kind.is_none_or(|k| k == e.kind)
    }
}

pub fn verify_entry(e: &CatalogEntry) -> EntryReport {
    let start = Instant::now();
    let result = e.build();
    let mut r = EntryReport {
        id: e.id.clone(),
        kind: e.kind,
        source: e.source.clone(),
        passed: false,
        subject: String::new(),
        points: 0,
        blocks: 0,
        base_blocks: None,
        detail: None,
        millis: 0,
    };
    match result {
        Ok(Built::Symbolic(s)) => {
            r.passed = true;
            r.subject = "parameters".into();
            r.detail = Some(s);
        }
        Ok(built) => {
            let n = built.nesting().expect("non-symbolic builds carry a nesting");
            let report = verify_nesting(n, 1);
            r.passed = report.passed;
            r.points = report.points;
            r.blocks = report.blocks;
            r.subject = report.subject.clone();
            if !report.passed {
                r.detail = Some(report.to_string());
            }
            r.base_blocks = match &built {
                Built::Nesting { family: Some(f), .. } => Some(f.blocks.len()),
                Built::Tuple(t) => Some(t.family.blocks.len()),
                _ => None,
            };
        }
        Err(err) => r.detail = Some(err.to_string()),
    }
    r.millis = start.elapsed().as_millis();
    r
}

/// Verifies every entry that matches, in parallel; the report keeps
/// catalog order.
pub fn catalog_verify(filter: &Filter) -> Result<CatalogSummary> {
    let selected: Vec<&CatalogEntry> = entries()?.iter().filter(|e| filter.matches(e)).collect();
    if selected.is_empty() {
        return Err(Error::NotFound(match (&filter.id, filter.kind) {
            (Some(id), _) => format!("no catalog entry `{id}`"),
            (None, Some(k)) => format!("no catalog entries of kind {k}"),
            (None, None) => "catalog is empty".into(),
        }));
    }
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(selected.len());
    let mut reports: Vec<(usize, EntryReport)> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(|| {
                    let mut out = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        let Some(e) = selected.get(i) else { break };
                        out.push((i, verify_entry(e)));
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("verifier thread panicked")).collect()
    });
    reports.sort_by_key(|(i, _)| *i);
    let entries: Vec<EntryReport> = reports.into_iter().map(|(_, r)| r).collect();
    let passed = entries.iter().filter(|r| r.passed).count();
    Ok(CatalogSummary { failed: entries.len() - passed, passed, entries })
}

/// First catalog entry that builds a nested `(v,4,1)`-BIBD.
pub fn nested_bibd_entry(v: usize) -> Option<&'static CatalogEntry> {
    entries().ok()?.iter().find(|e| e.nested_bibd_order() == Some(v))
}

/// First catalog entry that builds a nested 4-GDD of type `3^u`.
pub fn nested_gdd3_entry(u: usize) -> Option<&'static CatalogEntry> {
    entries().ok()?.iter().find(|e| e.gdd3_groups() == Some(u))
}
