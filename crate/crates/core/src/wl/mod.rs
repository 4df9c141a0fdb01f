//! k-dimensional Weisfeiler-Leman refinement on colored groups.
//!
//! Colors live on the tuple space `G^k`, flattened row-major by
//! [`TupleIndexer`]. Two initial colorings are available:
//!
//! * [`Version::I`]: element colors, equality pattern, and all relations
//!   `g_i g_j = g_m`.
//! * [`Version::II`]: the colored isomorphism type of `<g_1, …, g_k>` with
//!   the generators in order.
//!
//! Refinement replaces a color by the old color together with the multiset
//! over `x ∈ G` of the `k`-vectors of colors of `ḡ` with coordinate `j`
//! replaced by `x`. Joint runs refine several groups over one shared color
//! space so that colors are comparable across groups.

mod engine;
pub mod keys;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::group::{ColoredGroup, Quotient};
pub use keys::TupleIndexer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Version {
    I,
    II,
}

impl fmt::Display for Version {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Version::I => "I",
            Version::II => "II",
        })
    }
}

impl FromStr for Version {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" | "1" => Ok(Version::I),
            "II" | "ii" | "2" => Ok(Version::II),
            _ => Err(Error::Invalid(format!("unknown version {s:?}"))),
        }
    }
}

/// Knobs for a refinement run.
#[derive(Clone, Debug)]
pub struct WlConfig {
    /// Maximum number of tuple cells across all groups of a run.
    pub budget: u64,
    /// Parallel chunks per round; `None` uses the rayon thread count.
    pub chunks: Option<usize>,
    /// Stop a joint run as soon as the groups are distinguished.
    pub early_exit: bool,
    pub max_rounds: Option<usize>,
    /// Compute keys once per orbit of the color-preserving automorphisms
    /// found by a bounded search. Colors are identical either way.
    pub symmetry: bool,
    /// Tuple spaces smaller than this are refined without orbit reduction.
    pub symmetry_min_cells: usize,
}

impl Default for WlConfig {
    fn default() -> Self {
        WlConfig { budget: 1 << 31, chunks: None, early_exit: false, max_rounds: None, symmetry: true, symmetry_min_cells: 1 << 14 }
    }
}

/// Runs the initial coloring and refinement for jointly refined groups.
fn run(groups: &[&ColoredGroup], k: usize, version: Version, start: Option<(Vec<u32>, usize)>, cfg: &WlConfig) -> engine::RunOutput {
    let n = groups[0].order();
    let per_block = n.pow(k as u32);
    let orbits: Vec<Option<engine::Orbits>> = groups
        .iter()
        .map(|cg| {
            (cfg.symmetry && per_block >= cfg.symmetry_min_cells).then(|| {
                let autos = crate::iso::automorphism_generators(cg, std::time::Duration::from_millis(250));
                engine::tuple_orbits(n, k, &autos)
            })
        })
        .collect();
    let items = engine::Items::new(per_block, orbits.iter().map(Option::as_ref).collect());
    let (colors, classes) = match start {
        Some(s) => s,
        None => {
            let init = engine::initial(groups, k, version, &items, cfg.chunk_count());
            (init.colors, init.classes)
        }
    };
    engine::refine_loop(colors, classes, n, k, &items, cfg)
}

impl WlConfig {
    pub(crate) fn chunk_count(&self) -> usize {
        self.chunks.unwrap_or_else(rayon::current_num_threads).max(1)
    }
}

/// Coloring of `G^k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub k: usize,
    pub version: Version,
    pub n: usize,
    pub colors: Vec<u32>,
    /// Refinement rounds that changed the partition.
    pub rounds: usize,
    pub class_count: usize,
    /// Class count after the initial coloring and after every round.
    pub history: Vec<usize>,
}

impl Coloring {
    pub fn indexer(&self) -> TupleIndexer {
        TupleIndexer::new(self.n, self.k)
    }

    pub fn color_of(&self, tuple: &[usize]) -> u32 {
        self.colors[self.indexer().index(tuple)]
    }

    /// Per-element colors `χ(g, 1, …, 1)`.
    pub fn element_colors(&self) -> Vec<u32> {
        element_coloring(self)
    }
}

/// Outcome of refining two groups jointly.
#[derive(Clone, Debug)]
pub struct JointVerdict {
    pub equivalent: bool,
    /// Stable colorings of each group in the shared color space.
    pub colorings: Vec<Coloring>,
    /// Round at which the color histograms first differed.
    pub first_distinguishing_round: Option<usize>,
    pub rounds: usize,
    pub class_count: usize,
}

fn check_dimension(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::DimensionTooSmall(k));
    }
    Ok(())
}

fn same_order(groups: &[&ColoredGroup]) -> bool {
    groups.windows(2).all(|w| w[0].order() == w[1].order())
}

fn split(colors: Vec<u32>, blocks: usize) -> Vec<Vec<u32>> {
    let per = colors.len() / blocks.max(1);
    colors.chunks(per.max(1)).map(<[u32]>::to_vec).collect()
}

pub fn initial_coloring(cg: &ColoredGroup, k: usize, version: Version) -> Result<Coloring> {
    initial_coloring_with(cg, k, version, &WlConfig::default())
}

pub fn initial_coloring_i(cg: &ColoredGroup, k: usize) -> Result<Coloring> {
    initial_coloring(cg, k, Version::I)
}

pub fn initial_coloring_ii(cg: &ColoredGroup, k: usize) -> Result<Coloring> {
    initial_coloring(cg, k, Version::II)
}

pub fn initial_coloring_with(cg: &ColoredGroup, k: usize, version: Version, cfg: &WlConfig) -> Result<Coloring> {
    check_dimension(k)?;
    engine::check_budget(1, cg.order(), k, cfg)?;
    let items = engine::Items::new(cg.order().pow(k as u32), vec![None]);
    let init = engine::initial(&[cg], k, version, &items, cfg.chunk_count());
    Ok(Coloring {
        k,
        version,
        n: cg.order(),
        colors: init.colors,
        rounds: 0,
        class_count: init.classes,
        history: vec![init.classes],
    })
}

/// Iterates refinement until the partition stops changing.
pub fn refine_to_stable(initial: &Coloring, cg: &ColoredGroup) -> Result<Coloring> {
    refine_to_stable_with(initial, cg, &WlConfig::default())
}

pub fn refine_to_stable_with(initial: &Coloring, cg: &ColoredGroup, cfg: &WlConfig) -> Result<Coloring> {
    if initial.n != cg.order() {
        return Err(Error::Invalid("coloring and group differ in order".into()));
    }
    engine::check_budget(1, initial.n, initial.k, cfg)?;
    // The supplied coloring need not be automorphism-invariant.
    let plain = WlConfig { symmetry: false, ..cfg.clone() };
    let out = run(&[cg], initial.k, initial.version, Some((initial.colors.clone(), initial.class_count)), &plain);
    Ok(Coloring {
        k: initial.k,
        version: initial.version,
        n: initial.n,
        colors: out.colors,
        rounds: out.rounds,
        class_count: out.classes,
        history: out.history,
    })
}

pub fn stable_coloring(cg: &ColoredGroup, k: usize, version: Version) -> Result<Coloring> {
    stable_coloring_with(cg, k, version, &WlConfig::default())
}

pub fn stable_coloring_with(cg: &ColoredGroup, k: usize, version: Version, cfg: &WlConfig) -> Result<Coloring> {
    let v = joint_stable(&[cg], k, version, cfg)?;
    Ok(v.colorings.into_iter().next().expect("one group"))
}

pub fn joint_compare(g: &ColoredGroup, h: &ColoredGroup, k: usize, version: Version) -> Result<JointVerdict> {
    joint_stable(&[g, h], k, version, &WlConfig::default())
}

/// Joint refinement of any number of groups; `equivalent` means all stable
/// color histograms agree.
pub fn joint_stable(groups: &[&ColoredGroup], k: usize, version: Version, cfg: &WlConfig) -> Result<JointVerdict> {
    check_dimension(k)?;
    joint_stable_any_k(groups, k, version, cfg)
}

/// As [`joint_stable`] but also accepts `k = 1` (used by the pebble game).
pub(crate) fn joint_stable_any_k(
    groups: &[&ColoredGroup],
    k: usize,
    version: Version,
    cfg: &WlConfig,
) -> Result<JointVerdict> {
    if groups.is_empty() {
        return Err(Error::Invalid("no groups".into()));
    }
    if !same_order(groups) {
        return Ok(JointVerdict {
            equivalent: false,
            colorings: Vec::new(),
            first_distinguishing_round: Some(0),
            rounds: 0,
            class_count: 0,
        });
    }
    let n = groups[0].order();
    engine::check_budget(groups.len(), n, k, cfg)?;
    let out = run(groups, k, version, None, cfg);
    let equivalent = out.first_distinguishing_round.is_none();
    let colorings = split(out.colors, groups.len())
        .into_iter()
        .map(|colors| Coloring {
            k,
            version,
            n,
            colors,
            rounds: out.rounds,
            class_count: out.classes,
            history: out.history.clone(),
        })
        .collect();
    Ok(JointVerdict {
        equivalent,
        colorings,
        first_distinguishing_round: out.first_distinguishing_round,
        rounds: out.rounds,
        class_count: out.classes,
    })
}

/// Relabels values densely, preserving their order.
fn densify(values: &[u32]) -> (Vec<u32>, usize) {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let out = values.iter().map(|v| sorted.binary_search(v).unwrap() as u32).collect();
    (out, sorted.len())
}

fn induced_raw(c: &Coloring, m: usize) -> Vec<u32> {
    assert!(m >= 1 && m <= c.k, "induced dimension {m} outside 1..={}", c.k);
    let pad = c.n.pow((c.k - m) as u32);
    (0..c.n.pow(m as u32)).map(|t| c.colors[t * pad]).collect()
}

/// `χ^{(m)}(g_1, …, g_m) = χ(g_1, …, g_m, 1, …, 1)`, re-densified.
pub fn induced_coloring(c: &Coloring, m: usize) -> Coloring {
    let (colors, class_count) = densify(&induced_raw(c, m));
    Coloring { k: m, version: c.version, n: c.n, colors, rounds: c.rounds, class_count, history: Vec::new() }
}

pub fn element_coloring(c: &Coloring) -> Vec<u32> {
    induced_coloring(c, 1).colors
}

/// Induced colorings of jointly refined groups, densified together so they
/// stay comparable.
pub fn induced_joint(cs: &[Coloring], m: usize) -> Vec<Vec<u32>> {
    let raw: Vec<Vec<u32>> = cs.iter().map(|c| induced_raw(c, m)).collect();
    let flat: Vec<u32> = raw.concat();
    let (dense, _) = densify(&flat);
    split(dense, cs.len().max(1))
}

/// Is `s` a union of classes of the element coloring?
pub fn is_union_of_classes(colors: &[u32], s: &ElementSet) -> bool {
    is_detected(colors, s, colors, s)
}

/// Cross-group detectability: no color occurs both in `S(G)` and in
/// `H ∖ S(H)`, nor in `S(H)` and `G ∖ S(G)`.
pub fn is_detected(colors_g: &[u32], sg: &ElementSet, colors_h: &[u32], sh: &ElementSet) -> bool {
    let max = colors_g.iter().chain(colors_h).copied().max().unwrap_or(0) as usize + 1;
    let mut in_g = vec![false; max];
    let mut out_g = vec![false; max];
    for (x, &c) in colors_g.iter().enumerate() {
        if sg.contains(x) {
            in_g[c as usize] = true;
        } else {
            out_g[c as usize] = true;
        }
    }
    colors_h.iter().enumerate().all(|(y, &c)| if sh.contains(y) { !out_g[c as usize] } else { !in_g[c as usize] })
}

/// The quotient `G/N` colored by `γ̄(gN) = {{γ(gn) | n ∈ N}}`.
pub fn quotient_coloring(cg: &ColoredGroup, normal: &ElementSet) -> Result<(ColoredGroup, Quotient)> {
    let q = cg.group.quotient_group(normal)?;
    let m = q.group.order();
    let mut multisets: Vec<Vec<u32>> = vec![Vec::new(); m];
    for g in 0..cg.order() {
        multisets[q.coset_of[g]].push(cg.colors[g]);
    }
    for ms in &mut multisets {
        ms.sort_unstable();
    }
    let mut distinct = multisets.clone();
    distinct.sort();
    distinct.dedup();
    let colors = multisets.iter().map(|ms| distinct.binary_search(ms).unwrap() as u32).collect();
    let qc = ColoredGroup::new(q.group.clone(), colors)?;
    Ok((qc, q))
}

#[cfg(test)]
mod tests;
