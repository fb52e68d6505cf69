use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use nestkit::catalog::{self, Built, EntryKind, Filter, Payload};
use nestkit::design::{affine_plane, transversal_design, verify_bibd, verify_gdd_sizes, verify_pbd, Design, DesignFile};
use nestkit::direct::{construct_16tuple_brdf, construct_3v_brdf, construct_nested_28, construct_nested_gdd_3_8};
use nestkit::family::{
    brdf_short_orbit_nesting, brdf_to_nested_gdd, first_suitable, suitable_points, verify_family,
    weak_brdf_to_nested_bibd, DifferenceFamily, FamilyFile, FamilyKind,
};
use nestkit::group::{prime_power, FiniteField, FiniteGroup, Subgroup};
use nestkit::nesting::{apply_nesting, is_perfect, pair_bound, verify_nesting, Nesting, PairBound};
use nestkit::plan::{plan, spectrum, Executor, PlanOutcome};
use nestkit::recursive::{
    fill_groups, hdm_from_field, hdm_product, parse_ingredient, pbd_closure, rbibd_inflate, truncate_td,
    wilson_weight3, Ingredient, IngredientRegistry, Key, MatrixFile, Role,
};
use nestkit::report::VerificationReport;
use nestkit::search::{
    find_16tuple, find_base_nesting, find_brdf, BrdfStrategy, Outcome, SearchConfig, DEFAULT_BUDGET,
    DEFAULT_NESTING_BUDGET,
};
use nestkit::{Error, Result};

#[derive(Parser)]
#[command(name = "nestkit", version, about = "Construct and verify nested (v,4,1)-BIBDs, nested GDDs and Banff difference families")]
struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Ingredient registry directory.
    #[arg(long, global = true, default_value = "nestkit-registry")]
    registry: PathBuf,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify a design file as a BIBD, PBD or (with --gdd) a GDD.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        partial: bool,
        #[arg(long)]
        gdd: bool,
    },
    /// Verify a nesting file.
    VerifyNesting {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        gdd: bool,
    },
    #[command(subcommand)]
    Brdf(BrdfCmd),
    #[command(subcommand)]
    Construct(ConstructCmd),
    #[command(subcommand)]
    Compose(ComposeCmd),
    /// Recipe for a nested (v,4,1)-BIBD from the registry and built-ins.
    Plan {
        #[arg(long)]
        v: usize,
        /// Build the recipe and emit the verified nesting.
        #[arg(long)]
        execute: bool,
    },
    #[command(subcommand)]
    Search(SearchCmd),
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Existence status of nested (v,4,1)-BIBDs.
    Spectrum {
        #[arg(long)]
        v: usize,
        /// Report every v up to this value.
        #[arg(long)]
        to: Option<usize>,
    },
    #[command(subcommand)]
    Registry(RegistryCmd),
}

#[derive(Subcommand)]
enum BrdfCmd {
    /// Verify a family file according to its kind.
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
    /// Develop a family into a nesting. Weak families and strict ones given
    /// --x get the short orbit; strict ones without --x give the nested GDD.
    ToDesign {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        x: Option<String>,
    },
    /// List the points usable for the short orbit.
    SuitableX {
        #[arg(long)]
        file: PathBuf,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// (3v,3,4,1)-BRDF for v a product of prime powers ≡ 1 mod 4.
    #[command(name = "theorem3")]
    ThreeV {
        #[arg(long)]
        v: u32,
        /// Emit the family instead of its nested GDD.
        #[arg(long)]
        family: bool,
    },
    /// Nested (4q,4,1)-BIBD from a good 16-tuple over GF(q).
    Tuple16 {
        #[arg(long)]
        q: u32,
        /// Comma-separated entries; defaults to the cataloged tuple.
        #[arg(long, value_delimiter = ',')]
        tuple: Option<Vec<String>>,
    },
    /// Nested 4-GDD of type 3^8.
    Gdd38,
    /// Nested (28,4,1)-BIBD.
    V28,
}

#[derive(Subcommand)]
enum ComposeCmd {
    /// Weight-3 inflation of a (K,1)-GDD using registered ingredients.
    Wilson(MasterArgs),
    /// TD(9,m) with one group truncated to t points.
    Tdtrunc {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
    },
    /// GDD from a resolvable design with t parallel classes inflated.
    Rbibd {
        /// Affine plane of this order.
        #[arg(long, conflicts_with = "resolvable")]
        q: Option<u32>,
        /// Registered resolvable design, as `n,k`.
        #[arg(long)]
        resolvable: Option<String>,
        #[arg(long)]
        t: usize,
    },
    /// Product of a strict BRDF with a homogeneous difference matrix.
    Hdm {
        #[arg(long, conflicts_with = "catalog")]
        brdf: Option<PathBuf>,
        /// Catalog id of the family.
        #[arg(long)]
        catalog: Option<String>,
        /// Field order for the built-in matrix.
        #[arg(long, conflicts_with = "matrix")]
        q: Option<u32>,
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Fill the groups of a nested GDD with registered nested BIBDs.
    Fill {
        #[arg(long)]
        gdd: PathBuf,
    },
    /// Replace every block of a PBD with a registered nested BIBD.
    Pbd {
        #[arg(long, conflicts_with = "affine")]
        file: Option<PathBuf>,
        /// Use the affine plane of this order.
        #[arg(long)]
        affine: Option<u32>,
    },
}

#[derive(Args)]
struct MasterArgs {
    #[arg(long, conflicts_with = "td")]
    master: Option<PathBuf>,
    /// Built-in TD(k,m), as `k,m`.
    #[arg(long)]
    td: Option<String>,
}

#[derive(Args)]
struct Budgeted {
    #[arg(long)]
    budget: Option<u64>,
    /// Shuffle candidates with this seed.
    #[arg(long)]
    seed: Option<u64>,
}

impl Budgeted {
    fn config(&self, default: u64) -> SearchConfig {
        let budget = self.budget.unwrap_or(default);
        match self.seed {
            Some(s) => SearchConfig::seeded(budget, s),
            None => SearchConfig::new(budget),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Auto,
    Generic,
    Cyclotomic,
}

#[derive(Subcommand)]
enum SearchCmd {
    /// Nested points for cyclic base blocks over Z_v.
    Nesting {
        #[arg(long)]
        v: usize,
        /// Base blocks, e.g. `1,2,4,10;...`.
        #[arg(long)]
        blocks: String,
        /// The last block is the subgroup of order k, developed v/k times.
        #[arg(long)]
        short_orbit: bool,
        #[command(flatten)]
        b: Budgeted,
    },
    /// A Banff family over (G,H).
    Brdf {
        #[arg(long)]
        group: String,
        /// Subgroup elements, comma-separated; defaults to {0}.
        #[arg(long, value_delimiter = ',')]
        subgroup: Option<Vec<String>>,
        #[arg(long, default_value_t = 4)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        lambda: usize,
        #[arg(long)]
        weak: bool,
        #[arg(long, value_enum, default_value_t = Strategy::Auto)]
        strategy: Strategy,
        #[command(flatten)]
        b: Budgeted,
    },
    /// A good 16-tuple over GF(q).
    Tuple16 {
        #[arg(long)]
        q: u32,
        #[command(flatten)]
        b: Budgeted,
    },
}

#[derive(Subcommand)]
enum CatalogCmd {
    /// Run every entry's verifier.
    Verify {
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        kind: Option<String>,
    },
    List,
    /// Print an entry as stored.
    Show { id: String },
    /// Emit the object an entry builds.
    Build { id: String },
}

#[derive(Subcommand)]
enum RegistryCmd {
    /// Verify a file and store it under the given role.
    Add {
        file: PathBuf,
        #[arg(long)]
        role: String,
    },
    /// Store the nesting a catalog entry builds.
    AddCatalog { id: String },
    List,
}

struct Out {
    path: Option<PathBuf>,
    format: Format,
}

impl Out {
    fn write(&self, text: &str) -> Result<()> {
        match &self.path {
            Some(p) => fs::write(p, format!("{text}\n"))?,
            None => {
                let mut so = std::io::stdout().lock();
                writeln!(so, "{text}")?;
            }
        }
        Ok(())
    }

    /// A report-like value: its Display in text mode, JSON otherwise.
    fn report<T: Serialize + ?Sized>(&self, value: &T, text: impl FnOnce() -> String) -> Result<()> {
        match self.format {
            Format::Text => self.write(&text()),
            Format::Json => self.write(&serde_json::to_string_pretty(value)?),
        }
    }

    /// A file-format object, always JSON, with a summary on stderr.
    fn object<T: Serialize>(&self, value: &T, summary: &str) -> Result<()> {
        eprintln!("{summary}");
        self.write(&serde_json::to_string_pretty(value)?)
    }

    fn nesting(&self, n: &Nesting) -> Result<()> {
        let r = verify_nesting(n, 1).into_result()?;
        self.object(&n.to_file(1), &r.to_string())
    }
}

fn read<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn read_family(path: &Path) -> Result<DifferenceFamily> {
    read::<FamilyFile>(path)?.into_family()
}

fn read_design(path: &Path) -> Result<Design> {
    Ok(read::<DesignFile>(path)?.into_design()?.0)
}

fn pair(s: &str, what: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidInput(format!("{what} must be `a,b`, got `{s}`"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn found<T>(o: Outcome<T>) -> Result<(T, u64)> {
    match o {
        Outcome::Found { value, nodes } => Ok((value, nodes)),
        Outcome::NotFound { nodes, exhausted: true } => {
            Err(Error::NotFound(format!("search space exhausted after {nodes} nodes")))
        }
        Outcome::NotFound { nodes, .. } => Err(Error::NotFound(format!("budget of {nodes} nodes spent"))),
    }
}

#[derive(Serialize)]
struct NestingReport {
    #[serde(flatten)]
    report: VerificationReport,
    perfect: bool,
    pair_bound: PairBound,
}

fn verify_design(out: &Out, file: &Path, partial: bool, gdd: bool) -> Result<bool> {
    let f: DesignFile = read(file)?;
    let (d, _) = f.into_design()?;
    let sizes = match &f.params {
        Some(p) => p.k.to_vec(),
        None => d.block_sizes(),
    };
    let lambda = f.params.as_ref().map_or(1, |p| p.lambda);
    let v = f.params.as_ref().map_or(d.v(), |p| p.v);
    let r = if gdd {
        if d.groups.is_none() {
            return Err(Error::InvalidInput("--gdd needs a `groups` field".into()));
        }
        verify_gdd_sizes(&d, &sizes, lambda, partial)
    } else if let [k] = sizes[..] {
        verify_bibd(&d, v, k, lambda, partial)
    } else if lambda == 1 && !partial {
        verify_pbd(&d, v, &sizes)
    } else {
        return Err(Error::InvalidInput("mixed block sizes are checked as a PBD with lambda 1 only".into()));
    };
    out.report(&r, || r.to_string())?;
    Ok(r.passed)
}

fn verify_nesting_file(out: &Out, file: &Path, gdd: bool) -> Result<bool> {
    let f: DesignFile = read(file)?;
    let n = Nesting::from_file(&f)?;
    if gdd != n.design.groups.is_some() {
        return Err(Error::InvalidInput(if gdd {
            "--gdd needs a `groups` field".into()
        } else {
            "the file has groups; pass --gdd".into()
        }));
    }
    let lambda = f.params.as_ref().map_or(1, |p| p.lambda);
    let report = verify_nesting(&n, lambda);
    let perfect = report.passed && is_perfect(&apply_nesting(&n)?, lambda);
    let rep = NestingReport { report, perfect, pair_bound: pair_bound(&n, lambda) };
    out.report(&rep, || {
        let mut s = rep.report.to_string();
        if rep.report.passed {
            let b = rep.pair_bound;
            s.push_str(&format!(
                "\n{} ({} of {} pair slots used)",
                if perfect { "perfect" } else { "not perfect" },
                b.used,
                b.capacity
            ));
        }
        s
    })?;
    Ok(rep.report.passed)
}

fn brdf(out: &Out, cmd: BrdfCmd) -> Result<bool> {
    match cmd {
        BrdfCmd::Verify { file } => {
            let r = verify_family(&read_family(&file)?)?;
            out.report(&r, || r.to_string())?;
            Ok(r.passed)
        }
        BrdfCmd::ToDesign { file, x } => {
            let f = read_family(&file)?;
            let x = x.map(|s| f.group.parse_elem(&s)).transpose()?;
            let n = match (f.kind, x) {
                (FamilyKind::Weak, x) => {
                    let x = match x {
                        Some(x) => x,
                        None => first_suitable(&f)?,
                    };
                    weak_brdf_to_nested_bibd(&f, x)?
                }
                (FamilyKind::Brdf | FamilyKind::Perfect, Some(x)) => brdf_short_orbit_nesting(&f, x)?,
                (FamilyKind::Brdf | FamilyKind::Perfect, None) => brdf_to_nested_gdd(&f)?,
                (FamilyKind::Rdf, _) => {
                    return Err(Error::InvalidInput("a plain RDF does not determine a nesting".into()))
                }
            };
            out.nesting(&n)?;
            Ok(true)
        }
        BrdfCmd::SuitableX { file } => {
            let f = read_family(&file)?;
            let xs: Vec<String> = suitable_points(&f).into_iter().map(|x| f.group.render(x)).collect();
            out.report(&xs, || if xs.is_empty() { "none".into() } else { xs.join(" ") })?;
            Ok(true)
        }
    }
}

fn catalog_tuple(q: u32) -> Result<(String, Vec<String>)> {
    for e in catalog::entries()? {
        if let Payload::Tuple { field, tuple } = &e.payload {
            if FiniteGroup::parse(field)?.order() == q as usize {
                return Ok((field.clone(), tuple.clone()));
            }
        }
    }
    Err(Error::NotFound(format!("no cataloged 16-tuple over a field of order {q}")))
}

fn field_of(descriptor: &str) -> Result<Arc<FiniteField>> {
    match FiniteGroup::parse(descriptor)?.factors() {
        [nestkit::group::Factor::Field(f)] => Ok(f.clone()),
        _ => Err(Error::InvalidInput(format!("{descriptor} is not a field"))),
    }
}

fn construct(out: &Out, cmd: ConstructCmd) -> Result<bool> {
    let n = match cmd {
        ConstructCmd::ThreeV { v, family } => {
            let f = construct_3v_brdf(v)?;
            if family {
                let r = verify_family(&f)?.into_result()?;
                out.object(&f.to_file(), &format!("{r}, {} base blocks", f.blocks.len()))?;
                return Ok(true);
            }
            brdf_to_nested_gdd(&f)?
        }
        ConstructCmd::Tuple16 { q, tuple } => {
            let (field, entries) = match tuple {
                Some(t) => (field_of(&format!("GF({q})"))?, t),
                None => {
                    let (d, t) = catalog_tuple(q)?;
                    (field_of(&d)?, t)
                }
            };
            let vals = entries.iter().map(|s| field.parse(s.trim())).collect::<Result<Vec<_>>>()?;
            let a: [u32; 16] = vals
                .try_into()
                .map_err(|v: Vec<u32>| Error::InvalidInput(format!("a 16-tuple has 16 entries, not {}", v.len())))?;
            construct_16tuple_brdf(field, &a)?.nesting
        }
        ConstructCmd::Gdd38 => construct_nested_gdd_3_8()?,
        ConstructCmd::V28 => construct_nested_28()?,
    };
    out.nesting(&n)?;
    Ok(true)
}

fn td9(m: usize, reg: &IngredientRegistry) -> Result<Design> {
    if prime_power(m as u32).is_some() {
        return transversal_design(9, m as u32);
    }
    match reg.get(&Key::new(Role::Td, format!("9,{m}"))) {
        Some(Ingredient::Design(d)) => Ok(d.clone()),
        _ => Err(Error::MissingIngredient(format!("TD(9,{m}); {m} is not a prime power"))),
    }
}

fn design_summary(d: &Design) -> String {
    format!(
        "{} points, {} blocks, block sizes {:?}, group type {}",
        d.v(),
        d.b(),
        d.block_sizes(),
        d.group_type().unwrap_or_else(|| "none".into())
    )
}

fn compose(out: &Out, cmd: ComposeCmd, reg: &IngredientRegistry) -> Result<bool> {
    let n = match cmd {
        ComposeCmd::Wilson(MasterArgs { master, td }) => {
            let g = match (master, td) {
                (Some(p), _) => read_design(&p)?,
                (None, Some(s)) => {
                    let (k, m) = pair(&s, "--td")?;
                    transversal_design(k, m as u32)?
                }
                (None, None) => return Err(Error::InvalidInput("give --master or --td".into())),
            };
            wilson_weight3(&g, reg)?
        }
        ComposeCmd::Tdtrunc { m, t } => {
            let d = truncate_td(&td9(m, reg)?, t)?;
            out.object(&d.to_file(None, None), &design_summary(&d))?;
            return Ok(true);
        }
        ComposeCmd::Rbibd { q, resolvable, t } => {
            let r = match (q, resolvable) {
                (Some(q), _) => affine_plane(q)?,
                (None, Some(s)) => {
                    let (n, k) = pair(&s, "--resolvable")?;
                    match reg.get(&Key::new(Role::ResolvableBibd, format!("{n},{k}"))) {
                        Some(Ingredient::Resolvable(r)) => r.clone(),
                        _ => return Err(Error::MissingIngredient(format!("resolvable ({n},{k},1)-BIBD"))),
                    }
                }
                (None, None) => return Err(Error::InvalidInput("give --q or --resolvable".into())),
            };
            let d = rbibd_inflate(&r, t)?;
            out.object(&d.to_file(None, None), &design_summary(&d))?;
            return Ok(true);
        }
        ComposeCmd::Hdm { brdf, catalog: id, q, matrix } => {
            let f = match (brdf, id) {
                (Some(p), _) => read_family(&p)?,
                (None, Some(id)) => catalog::entry(&id)?.family()?,
                (None, None) => return Err(Error::InvalidInput("give --brdf or --catalog".into())),
            };
            let m = match (q, matrix) {
                (Some(q), _) => hdm_from_field(q, f.k)?,
                (None, Some(p)) => read::<MatrixFile>(&p)?.into_matrix()?,
                (None, None) => return Err(Error::InvalidInput("give --q or --matrix".into())),
            };
            let p = hdm_product(&f, &m)?;
            let r = verify_family(&p)?.into_result()?;
            out.object(&p.to_file(), &r.to_string())?;
            return Ok(true);
        }
        ComposeCmd::Fill { gdd } => {
            let g = Nesting::from_file(&read(&gdd)?)?;
            fill_groups(&g, reg)?
        }
        ComposeCmd::Pbd { file, affine } => {
            let d = match (file, affine) {
                (Some(p), _) => read_design(&p)?,
                (None, Some(q)) => affine_plane(q)?.design,
                (None, None) => return Err(Error::InvalidInput("give --file or --affine".into())),
            };
            pbd_closure(&d, reg)?
        }
    };
    out.nesting(&n)?;
    Ok(true)
}

fn parse_blocks(s: &str) -> Result<Vec<Vec<usize>>> {
    s.split(';')
        .filter(|b| !b.trim().is_empty())
        .map(|b| {
            b.split(',')
                .map(|x| x.trim().parse().map_err(|_| Error::InvalidInput(format!("bad block entry `{x}`"))))
                .collect()
        })
        .collect()
}

fn search(out: &Out, cmd: SearchCmd) -> Result<bool> {
    match cmd {
        SearchCmd::Nesting { v, blocks, short_orbit, b } => {
            let blocks = parse_blocks(&blocks)?;
            let (bn, nodes) = found(find_base_nesting(v, &blocks, short_orbit, b.config(DEFAULT_NESTING_BUDGET))?)?;
            let pts: Vec<String> = bn.points.iter().map(|p| p.to_string()).collect();
            out.object(&bn.nesting.to_file(1), &format!("nested points {} ({nodes} nodes)", pts.join(",")))?;
        }
        SearchCmd::Brdf { group, subgroup, k, lambda, weak, strategy, b } => {
            let g = FiniteGroup::parse(&group)?;
            let h = match subgroup {
                Some(es) => {
                    let es = es.iter().map(|e| g.parse_elem(e.trim())).collect::<Result<Vec<_>>>()?;
                    Subgroup::new(&g, es)?
                }
                None => Subgroup::trivial(),
            };
            let strategy = match strategy {
                Strategy::Auto => BrdfStrategy::Auto,
                Strategy::Generic => BrdfStrategy::Generic,
                Strategy::Cyclotomic => BrdfStrategy::Cyclotomic,
            };
            let (f, nodes) = found(find_brdf(&g, &h, k, lambda, weak, strategy, b.config(DEFAULT_BUDGET))?)?;
            let r = verify_family(&f)?;
            out.object(&f.to_file(), &format!("{r} ({nodes} nodes)"))?;
        }
        SearchCmd::Tuple16 { q, b } => {
            let field = Arc::new(FiniteField::with_order(q)?);
            let ((a, res), nodes) = found(find_16tuple(field.clone(), b.config(DEFAULT_BUDGET))?)?;
            let t: Vec<String> = a.iter().map(|&x| field.render(x)).collect();
            out.object(&res.nesting.to_file(1), &format!("tuple {} ({nodes} nodes)", t.join(",")))?;
        }
    }
    Ok(true)
}

fn catalog_cmd(out: &Out, cmd: CatalogCmd) -> Result<bool> {
    match cmd {
        CatalogCmd::Verify { id, kind } => {
            let kind = kind.map(|k| k.parse::<EntryKind>()).transpose()?;
            let s = catalog::catalog_verify(&Filter { id, kind })?;
            out.report(&s, || s.to_string())?;
            Ok(s.ok())
        }
        CatalogCmd::List => {
            let es = catalog::entries()?;
            out.report(es, || {
                es.iter().map(|e| format!("{:<20} {:<20} {}", e.id, e.kind, e.source)).collect::<Vec<_>>().join("\n")
            })?;
            Ok(true)
        }
        CatalogCmd::Show { id } => {
            out.write(&serde_json::to_string_pretty(catalog::entry(&id)?)?)?;
            Ok(true)
        }
        CatalogCmd::Build { id } => match catalog::entry(&id)?.build()? {
            Built::Nesting { nesting, .. } => {
                out.nesting(&nesting)?;
                Ok(true)
            }
            Built::Tuple(t) => {
                out.nesting(&t.nesting)?;
                Ok(true)
            }
            Built::Symbolic(s) => Err(Error::MissingIngredient(s)),
        },
    }
}

fn registry_cmd(out: &Out, cmd: RegistryCmd, dir: &Path) -> Result<bool> {
    let mut reg = IngredientRegistry::load(dir)?;
    match cmd {
        RegistryCmd::Add { file, role } => {
            let role: Role = role.parse()?;
            let text = fs::read_to_string(&file)
                .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", file.display())))?;
            let key = reg.register(role, parse_ingredient(role, &text)?)?;
            reg.save(dir)?;
            out.write(&format!("registered {key}"))?;
        }
        RegistryCmd::AddCatalog { id } => {
            let n = match catalog::entry(&id)?.build()? {
                Built::Nesting { nesting, .. } => nesting,
                Built::Tuple(t) => t.nesting,
                Built::Symbolic(s) => return Err(Error::MissingIngredient(s)),
            };
            let role = if n.design.groups.is_some() { Role::NestedGdd3 } else { Role::NestedBibd };
            let key = reg.register(role, Ingredient::Nesting(n))?;
            reg.save(dir)?;
            out.write(&format!("registered {key}"))?;
        }
        RegistryCmd::List => {
            let keys: Vec<&Key> = reg.keys().collect();
            out.report(&keys, || keys.iter().map(|k| k.to_string()).collect::<Vec<_>>().join("\n"))?;
        }
    }
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    let out = Out { path: cli.output, format: cli.format };
    let registry = || IngredientRegistry::load(&cli.registry);
    match cli.cmd {
        Cmd::Verify { file, partial, gdd } => verify_design(&out, &file, partial, gdd),
        Cmd::VerifyNesting { file, gdd } => verify_nesting_file(&out, &file, gdd),
        Cmd::Brdf(c) => brdf(&out, c),
        Cmd::Construct(c) => construct(&out, c),
        Cmd::Compose(c) => compose(&out, c, &registry()?),
        Cmd::Plan { v, execute } => {
            let reg = registry()?;
            let outcome = plan(v, &reg)?;
            let resolved = match &outcome {
                PlanOutcome::Resolved { plan, .. } => plan.clone(),
                PlanOutcome::Unresolved { .. } => {
                    out.report(&outcome, || outcome.to_string())?;
                    return Err(Error::MissingIngredient(format!("no recipe for v = {v}")));
                }
            };
            if execute {
                eprintln!("{resolved}");
                out.nesting(&Executor::new(&reg).run(&resolved)?)?;
            } else {
                out.report(&outcome, || outcome.to_string())?;
            }
            Ok(true)
        }
        Cmd::Search(c) => search(&out, c),
        Cmd::Catalog(c) => catalog_cmd(&out, c),
        Cmd::Spectrum { v, to } => {
            let reg = registry()?;
            let all = (v..=to.unwrap_or(v)).map(|v| spectrum(v, &reg)).collect::<Result<Vec<_>>>()?;
            if to.is_none() {
                out.report(&all[0], || all[0].to_string())?;
            } else {
                out.report(&all, || all.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n"))?;
            }
            Ok(true)
        }
        Cmd::Registry(c) => registry_cmd(&out, c, &cli.registry),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Verification(_) => 1,
        Error::NotFound(_) | Error::MissingIngredient(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
