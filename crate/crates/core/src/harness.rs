//! Detectability and pair suites over a catalog, with deterministic reports.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::group::{ColoredGroup, Group};
use crate::wl::{self, Version, WlConfig};
use crate::{catalog, invariants, io, products};

/// Oracle-backed subsets checked against stable element colorings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Center,
    Derived,
    SolvableRadical,
    AbelianRadical,
    PiRadical,
    Fitting,
    Splitting,
    Socle,
    MinimalNormal,
    ComponentSet,
    DerivedSeries,
    LowerCentral,
    UpperCentral,
}

impl Invariant {
    pub const ALL: [Invariant; 13] = [
        Invariant::Center,
        Invariant::Derived,
        Invariant::SolvableRadical,
        Invariant::AbelianRadical,
        Invariant::PiRadical,
        Invariant::Fitting,
        Invariant::Splitting,
        Invariant::Socle,
        Invariant::MinimalNormal,
        Invariant::ComponentSet,
        Invariant::DerivedSeries,
        Invariant::LowerCentral,
        Invariant::UpperCentral,
    ];

    /// Dimension and version at which the set is claimed detectable.
    pub fn claim(self) -> (usize, Version) {
        use Invariant::*;
        match self {
            Center | SolvableRadical => (2, Version::II),
            Derived | AbelianRadical | PiRadical | Fitting | ComponentSet => (3, Version::II),
            Socle | MinimalNormal => (4, Version::II),
            Splitting | DerivedSeries | LowerCentral | UpperCentral => (4, Version::I),
        }
    }

    pub fn name(self) -> &'static str {
        use Invariant::*;
        match self {
            Center => "center",
            Derived => "derived",
            SolvableRadical => "solvable_radical",
            AbelianRadical => "abelian_radical",
            PiRadical => "pi_radical",
            Fitting => "fitting",
            Splitting => "splitting",
            Socle => "socle",
            MinimalNormal => "minimal_normal",
            ComponentSet => "component_set",
            DerivedSeries => "derived_series",
            LowerCentral => "lower_central",
            UpperCentral => "upper_central",
        }
    }

    /// Row key of the report, e.g. `center@2-II`.
    pub fn row(self) -> String {
        let (k, v) = self.claim();
        format!("{}@{k}-{v}", self.name())
    }

    /// Oracle sets that must each be a union of stable element classes.
    pub fn oracle_sets(self, g: &Group) -> Result<Vec<ElementSet>> {
        use Invariant::*;
        Ok(match self {
            Center => vec![g.center()],
            Derived => vec![g.derived_subgroup()],
            SolvableRadical => vec![invariants::solvable_radical(g)],
            AbelianRadical => vec![invariants::abelian_radical(g)?.elements],
            PiRadical => {
                let primes = g.prime_divisors();
                (1u32..1 << primes.len())
                    .map(|mask| {
                        let pi: Vec<usize> = (0..primes.len()).filter(|i| mask >> i & 1 == 1).map(|i| primes[i]).collect();
                        invariants::pi_radical(g, &pi)
                    })
                    .collect()
            }
            Fitting => vec![invariants::fitting(g)],
            Splitting => vec![products::splitting_elements(g)?],
            Socle => vec![invariants::socle(g)?.socle],
            MinimalNormal => vec![invariants::minimal_normal_elements(g)?],
            ComponentSet => {
                if g.is_abelian() {
                    vec![]
                } else {
                    vec![products::nonabelian_components(g)?.m]
                }
            }
            DerivedSeries => invariants::derived_series(g)?.terms,
            LowerCentral => invariants::lower_central(g)?.terms,
            UpperCentral => invariants::upper_central(g)?.terms,
        })
    }
}

impl fmt::Display for Invariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Invariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Invariant::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown invariant {s:?}")))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct SuiteConfig {
    /// Directory of `.mt` / `.json` tables; scanned in path order.
    pub catalog_dir: Option<PathBuf>,
    /// Add the built-in catalog up to the largest cap.
    pub builtin: bool,
    /// Largest group order per dimension `k`.
    pub max_order: BTreeMap<usize, usize>,
    pub invariants: Vec<Invariant>,
    /// Restrict to these versions; empty means the claimed version of each row.
    pub versions: Vec<Version>,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    /// Record wall time per record; reports are then not byte-identical.
    pub record_time: bool,
    /// Largest dimension tried by the pair suite.
    pub pair_max_k: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            catalog_dir: None,
            builtin: true,
            max_order: BTreeMap::from([(2, 128), (3, 64), (4, 32), (5, 16)]),
            invariants: Invariant::ALL.to_vec(),
            versions: Vec::new(),
            output: None,
            threads: None,
            record_time: false,
            pair_max_k: 5,
        }
    }
}

impl SuiteConfig {
    pub fn cap(&self, k: usize) -> usize {
        self.max_order.get(&k).copied().unwrap_or(0)
    }

    pub fn from_json_file(path: impl AsRef<Path>) -> Result<SuiteConfig> {
        let text = std::fs::read_to_string(path)?;
        serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), col: e.column(), msg: e.to_string() })
    }

    /// Catalog groups within the largest cap: directory entries first, then built-ins.
    pub fn load_groups(&self) -> Result<Vec<Group>> {
        let top = self.max_order.values().copied().max().unwrap_or(0);
        let mut out = Vec::new();
        if let Some(dir) = &self.catalog_dir {
            for entry in io::scan_catalog(dir)? {
                if entry.order <= top {
                    let mut cg = io::parse_group(&entry.path)?;
                    cg.group.set_name(Some(entry.name));
                    out.push(cg.group);
                }
            }
        }
        if self.builtin {
            out.extend(catalog::standard_catalog(top));
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetectabilityRecord {
    pub group: String,
    pub order: usize,
    pub invariant: Invariant,
    pub k: usize,
    pub version: Version,
    pub detected: bool,
    /// Whether a detectability claim covers this `(invariant, k, version)`.
    pub claimed: bool,
    pub class_count: usize,
    pub rounds: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl DetectabilityRecord {
    pub fn failed(&self) -> bool {
        self.claimed && !self.detected
    }
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(t).build().map_err(|e| Error::Invalid(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// One record per group and invariant row within the caps.
pub fn run_detectability_suite(cfg: &SuiteConfig) -> Result<Vec<DetectabilityRecord>> {
    let groups = cfg.load_groups()?;
    detectability_records(cfg, &groups)
}

pub fn detectability_records(cfg: &SuiteConfig, groups: &[Group]) -> Result<Vec<DetectabilityRecord>> {
    let per_group: Vec<Result<Vec<DetectabilityRecord>>> =
        with_pool(cfg.threads, || groups.par_iter().map(|g| group_records(cfg, g)).collect())?;
    let mut out = Vec::new();
    for r in per_group {
        out.extend(r?);
    }
    Ok(out)
}

fn group_records(cfg: &SuiteConfig, g: &Group) -> Result<Vec<DetectabilityRecord>> {
    let cg = ColoredGroup::uniform(g.clone());
    let name = g.name().unwrap_or("?").to_string();
    let mut runs: BTreeMap<(usize, Version), Vec<Invariant>> = BTreeMap::new();
    for &inv in &cfg.invariants {
        let (k, claimed_version) = inv.claim();
        if g.order() > cfg.cap(k) {
            continue;
        }
        let versions = if cfg.versions.is_empty() { vec![claimed_version] } else { cfg.versions.clone() };
        for v in versions {
            runs.entry((k, v)).or_default().push(inv);
        }
    }
    let wl_cfg = WlConfig::default();
    let mut out = Vec::new();
    for ((k, version), invs) in runs {
        let start = Instant::now();
        let coloring = wl::stable_coloring_with(&cg, k, version, &wl_cfg)?;
        let colors = coloring.element_colors();
        for inv in invs {
            let sets = inv.oracle_sets(g)?;
            let detected = sets.iter().all(|s| wl::is_union_of_classes(&colors, s));
            // k-WL_II refines k-WL_I, and (k+1)-WL_I refines k-WL_II.
            let (ck, cv) = inv.claim();
            let claimed = match (cv, version) {
                (Version::I, _) | (Version::II, Version::II) => k >= ck,
                (Version::II, Version::I) => k > ck,
            };
            out.push(DetectabilityRecord {
                group: name.clone(),
                order: g.order(),
                invariant: inv,
                k,
                version,
                detected,
                claimed,
                class_count: coloring.class_count,
                rounds: coloring.rounds,
                wall_ms: cfg.record_time.then(|| start.elapsed().as_millis() as u64),
            });
        }
    }
    out.sort_by(|a, b| a.invariant.cmp(&b.invariant).then(a.k.cmp(&b.k)).then(a.version.cmp(&b.version)));
    Ok(out)
}

/// A same-order pair compared by composition factors and refinement.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairRecord {
    pub a: String,
    pub b: String,
    pub order: usize,
    pub factors_differ: bool,
    /// Least `k` at which Version I distinguishes the pair.
    pub min_k: Option<usize>,
    /// Largest `k` tried within the caps.
    pub max_k_tested: usize,
}

impl PairRecord {
    /// Different composition factors must be told apart once `k = 5` was tried.
    pub fn failed(&self) -> bool {
        self.factors_differ && self.min_k.is_none() && self.max_k_tested >= 5
    }
}

pub fn run_pair_suite(cfg: &SuiteConfig) -> Result<Vec<PairRecord>> {
    let groups = cfg.load_groups()?;
    pair_records(cfg, &groups)
}

pub fn pair_records(cfg: &SuiteConfig, groups: &[Group]) -> Result<Vec<PairRecord>> {
    let factors: Vec<Result<Vec<String>>> = with_pool(cfg.threads, || {
        groups.par_iter().map(|g| Ok(invariants::composition_factors(g)?.multiset())).collect()
    })?;
    let factors = factors.into_iter().collect::<Result<Vec<_>>>()?;
    let pairs = catalog::same_order_pairs(groups);
    let results: Vec<Result<PairRecord>> = with_pool(cfg.threads, || {
        pairs
            .par_iter()
            .map(|&(i, j)| {
                let (g, h) = (&groups[i], &groups[j]);
                let (cg, ch) = (ColoredGroup::uniform(g.clone()), ColoredGroup::uniform(h.clone()));
                let mut min_k = None;
                let mut max_k_tested = 0;
                let wl_cfg = WlConfig { early_exit: true, ..WlConfig::default() };
                for k in 2..=cfg.pair_max_k {
                    if g.order() > cfg.cap(k) {
                        break;
                    }
                    max_k_tested = k;
                    if !wl::joint_stable(&[&cg, &ch], k, Version::I, &wl_cfg)?.equivalent {
                        min_k = Some(k);
                        break;
                    }
                }
                Ok(PairRecord {
                    a: g.name().unwrap_or("?").into(),
                    b: h.name().unwrap_or("?").into(),
                    order: g.order(),
                    factors_differ: factors[i] != factors[j],
                    min_k,
                    max_k_tested,
                })
            })
            .collect()
    })?;
    results.into_iter().collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowSummary {
    pub pass: usize,
    pub fail: usize,
    pub unclaimed_undetected: usize,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SuiteReport {
    pub rows: BTreeMap<String, RowSummary>,
    pub failures: Vec<String>,
    /// Pair counts by least distinguishing `k`; key 0 for pairs never distinguished.
    pub min_k_histogram: BTreeMap<usize, usize>,
    pub pair_failures: Vec<String>,
    pub all_pass: bool,
    pub records: Vec<DetectabilityRecord>,
    pub pairs: Vec<PairRecord>,
}

pub fn report(records: &[DetectabilityRecord], pairs: &[PairRecord]) -> SuiteReport {
    let mut rows: BTreeMap<String, RowSummary> = BTreeMap::new();
    let mut failures = Vec::new();
    for r in records {
        let row = rows.entry(format!("{}@{}-{}", r.invariant, r.k, r.version)).or_default();
        if r.failed() {
            row.fail += 1;
            failures.push(format!("{} (order {}): {} not detected by {}-WL_{}", r.group, r.order, r.invariant, r.k, r.version));
        } else if r.detected {
            row.pass += 1;
        } else {
            row.unclaimed_undetected += 1;
        }
    }
    let mut min_k_histogram = BTreeMap::new();
    let mut pair_failures = Vec::new();
    for p in pairs {
        *min_k_histogram.entry(p.min_k.unwrap_or(0)).or_insert(0) += 1;
        if p.failed() {
            pair_failures.push(format!("{} vs {}: different composition factors, not distinguished up to k={}", p.a, p.b, p.max_k_tested));
        }
    }
    let all_pass = failures.is_empty() && pair_failures.is_empty();
    SuiteReport { rows, failures, min_k_histogram, pair_failures, all_pass, records: records.to_vec(), pairs: pairs.to_vec() }
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json())?;
        Ok(())
    }
}
