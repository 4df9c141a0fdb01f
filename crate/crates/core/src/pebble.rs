//! The bijective pebble game, solved exactly on small groups.
//!
//! A configuration assigns each of the `p` pebble pairs either ⊥ or a pair
//! `(g, h)`. Configurations are indexed as `Σ slot_i · (n² + 1)^i` with
//! `slot = 0` for ⊥ and `1 + g·n + h` otherwise.
//!
//! The set of configurations from which Spoiler wins is the least fixpoint
//! of: Spoiler wins at `c` if for some pebble `i` either the winning
//! condition holds on the other pebbles, or no bijection `f` avoids
//! Spoiler-winning successors. The latter is a perfect-matching question on
//! the bipartite graph of safe placements `(x, y)`.

use serde::Serialize;

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::group::ColoredGroup;
use crate::matching::{has_perfect_matching_bits, perfect_matching};
use crate::wl::keys::{version_i_key, version_ii_key, BfsScratch};
use crate::wl::{self, Version, WlConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Winner {
    Spoiler,
    Duplicator,
}

/// One pebble pair: off the board, or on `(g, h)`.
pub type Slot = Option<(usize, usize)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PebbleConfig {
    pub slots: Vec<Slot>,
}

impl PebbleConfig {
    pub fn empty(pebbles: usize) -> Self {
        PebbleConfig { slots: vec![None; pebbles] }
    }

    /// `[(g_1, …, g_k, ⊥, …), (h_1, …, h_k, ⊥, …)]` with `pebbles` slots.
    pub fn from_tuples(g: &[usize], h: &[usize], pebbles: usize) -> Self {
        let mut slots: Vec<Slot> = g.iter().zip(h).map(|(&a, &b)| Some((a, b))).collect();
        slots.resize(pebbles, None);
        PebbleConfig { slots }
    }
}

#[derive(Clone, Debug)]
pub struct GameOptions {
    /// Largest group order accepted.
    pub max_order: usize,
    pub max_pebbles: usize,
    /// Largest configuration space accepted.
    pub max_states: usize,
}

impl Default for GameOptions {
    fn default() -> Self {
        GameOptions { max_order: 12, max_pebbles: 3, max_states: 50_000_000 }
    }
}

/// Spoiler wins immediately after lifting a pebble if the remaining pebbles
/// have different initial colors. Version I is only checked when no
/// remaining pebble is off the board; Version II treats ⊥ as the identity,
/// which gives the same generated subgroups as the placed sub-tuple.
pub fn winning_condition(g: &ColoredGroup, h: &ColoredGroup, remaining: &[Slot], version: Version) -> bool {
    if remaining.is_empty() {
        return false;
    }
    let (mut a, mut b) = (Vec::new(), Vec::new());
    match version {
        Version::I => {
            if remaining.iter().any(Option::is_none) {
                return false;
            }
            let gs: Vec<usize> = remaining.iter().map(|s| s.unwrap().0).collect();
            let hs: Vec<usize> = remaining.iter().map(|s| s.unwrap().1).collect();
            version_i_key(g, &gs, &mut a);
            version_i_key(h, &hs, &mut b);
        }
        Version::II => {
            let gs: Vec<usize> = remaining.iter().map(|s| s.map_or(0, |p| p.0)).collect();
            let hs: Vec<usize> = remaining.iter().map(|s| s.map_or(0, |p| p.1)).collect();
            let mut scratch = BfsScratch::new(g.order().max(h.order()));
            version_ii_key(g, &gs, &mut scratch, &mut a);
            version_ii_key(h, &hs, &mut scratch, &mut b);
        }
    }
    a != b
}

/// Subgroup chains `G_1 ≥ G_2 ≥ … ≥ G_s` and `H_1 ≥ … ≥ H_s` that every
/// Duplicator bijection must respect: `f(x G_i) = f(x) H_i`.
#[derive(Clone, Debug)]
pub struct Chains {
    /// Left-coset labels per level, for G and H.
    coset_g: Vec<Vec<usize>>,
    coset_h: Vec<Vec<usize>>,
    feasible: bool,
}

impl Chains {
    pub fn new(g: &ColoredGroup, h: &ColoredGroup, chain_g: &[ElementSet], chain_h: &[ElementSet]) -> Result<Self> {
        if chain_g.len() != chain_h.len() {
            return Err(Error::Invalid("chains differ in length".into()));
        }
        let labels = |cg: &ColoredGroup, chain: &[ElementSet]| -> Result<Vec<Vec<usize>>> {
            let grp = &cg.group;
            let mut out = Vec::new();
            let mut prev = grp.all();
            for s in chain {
                if !grp.is_subgroup(s) || !s.is_subset(&prev) {
                    return Err(Error::Invalid("chain is not a descending chain of subgroups".into()));
                }
                prev = s.clone();
                let mut label = vec![usize::MAX; grp.order()];
                let mut next = 0;
                for x in 0..grp.order() {
                    if label[x] == usize::MAX {
                        for y in s.iter() {
                            label[grp.mul(x, y)] = next;
                        }
                        next += 1;
                    }
                }
                out.push(label);
            }
            Ok(out)
        };
        let feasible = chain_g.iter().zip(chain_h).all(|(a, b)| a.len() == b.len());
        Ok(Chains { coset_g: labels(g, chain_g)?, coset_h: labels(h, chain_h)?, feasible })
    }

    /// Is there a chain-respecting bijection using only allowed edges?
    fn has_bijection(&self, n: usize, allowed: &dyn Fn(usize, usize) -> bool) -> bool {
        if !self.feasible {
            return false;
        }
        let all: Vec<usize> = (0..n).collect();
        self.matchable(0, &all, &all, allowed)
    }

    fn matchable(&self, level: usize, xs: &[usize], ys: &[usize], allowed: &dyn Fn(usize, usize) -> bool) -> bool {
        if xs.len() != ys.len() {
            return false;
        }
        if level == self.coset_g.len() {
            let adj: Vec<Vec<usize>> =
                xs.iter().map(|&x| (0..ys.len()).filter(|&j| allowed(x, ys[j])).collect()).collect();
            return perfect_matching(&adj, ys.len()).is_some();
        }
        let parts = |elems: &[usize], label: &[usize]| {
            let mut keys: Vec<usize> = elems.iter().map(|&e| label[e]).collect();
            keys.sort_unstable();
            keys.dedup();
            keys.iter().map(|&k| elems.iter().copied().filter(|&e| label[e] == k).collect::<Vec<_>>()).collect::<Vec<_>>()
        };
        let pg = parts(xs, &self.coset_g[level]);
        let ph = parts(ys, &self.coset_h[level]);
        if pg.len() != ph.len() {
            return false;
        }
        let adj: Vec<Vec<usize>> = pg
            .iter()
            .map(|a| (0..ph.len()).filter(|&j| self.matchable(level + 1, a, &ph[j], allowed)).collect())
            .collect();
        perfect_matching(&adj, ph.len()).is_some()
    }
}

/// Solved game: the Spoiler-winning configurations.
#[derive(Clone, Debug)]
pub struct GameSolution {
    pub n: usize,
    pub pebbles: usize,
    pub version: Version,
    spoiler: Vec<bool>,
    /// `lost[i][c]` for `c` with pebble `i` off the board: lifting `i` wins.
    lost: Vec<Vec<bool>>,
    pub sweeps: usize,
}

impl GameSolution {
    fn base(&self) -> usize {
        self.n * self.n + 1
    }

    pub fn encode(&self, cfg: &PebbleConfig) -> usize {
        assert_eq!(cfg.slots.len(), self.pebbles, "configuration has the wrong number of pebbles");
        let base = self.base();
        cfg.slots.iter().rev().fold(0, |acc, s| acc * base + s.map_or(0, |(g, h)| 1 + g * self.n + h))
    }

    pub fn winner(&self, cfg: &PebbleConfig) -> Winner {
        if self.spoiler[self.encode(cfg)] {
            Winner::Spoiler
        } else {
            Winner::Duplicator
        }
    }

    /// A pebble Spoiler can lift to make progress, for a Spoiler win.
    pub fn spoiler_move(&self, cfg: &PebbleConfig) -> Option<usize> {
        let c = self.encode(cfg);
        let base = self.base();
        (0..self.pebbles).find(|&i| {
            let stride = base.pow(i as u32);
            let digit = c / stride % base;
            self.lost[i][c - digit * stride]
        })
    }

    pub fn states(&self) -> usize {
        self.spoiler.len()
    }

    pub fn spoiler_states(&self) -> usize {
        self.spoiler.iter().filter(|&&b| b).count()
    }

    /// Is placing pebble `i` on `(x, y)` from `c` (with `i` lifted) safe for Duplicator?
    pub fn safe_placement(&self, cfg: &PebbleConfig, i: usize, x: usize, y: usize) -> bool {
        let mut c = cfg.clone();
        c.slots[i] = Some((x, y));
        !self.spoiler[self.encode(&c)]
    }
}

pub fn solve_game(g: &ColoredGroup, h: &ColoredGroup, pebbles: usize, version: Version, opts: &GameOptions) -> Result<GameSolution> {
    solve(g, h, pebbles, version, None, opts)
}

/// Game in which every Duplicator bijection must respect the given chains.
pub fn solve_game_with_chains(
    g: &ColoredGroup,
    h: &ColoredGroup,
    pebbles: usize,
    version: Version,
    chains: &Chains,
    opts: &GameOptions,
) -> Result<GameSolution> {
    solve(g, h, pebbles, version, Some(chains), opts)
}

fn solve(
    g: &ColoredGroup,
    h: &ColoredGroup,
    p: usize,
    version: Version,
    chains: Option<&Chains>,
    opts: &GameOptions,
) -> Result<GameSolution> {
    let n = g.order();
    if h.order() != n {
        return Err(Error::Invalid("pebble game needs groups of equal order".into()));
    }
    if n > opts.max_order || n > 64 {
        return Err(Error::CapExceeded(format!("order {n} exceeds the game cap {}", opts.max_order)));
    }
    if p == 0 || p > opts.max_pebbles {
        return Err(Error::CapExceeded(format!("{p} pebbles outside 1..={}", opts.max_pebbles)));
    }
    let base = n * n + 1;
    let total = (base as u128).pow(p as u32);
    if total > opts.max_states as u128 {
        return Err(Error::CapExceeded(format!("{total} configurations exceed {}", opts.max_states)));
    }
    let total = total as usize;
    let strides: Vec<usize> = (0..p).map(|i| base.pow(i as u32)).collect();
    let decode = |c: usize| -> Vec<Slot> {
        (0..p)
            .map(|i| {
                let d = c / strides[i] % base;
                (d > 0).then(|| ((d - 1) / n, (d - 1) % n))
            })
            .collect()
    };

    // Winning condition per (lifted pebble, configuration with it lifted).
    let mut lost: Vec<Vec<bool>> = vec![vec![false; total]; p];
    for (i, li) in lost.iter_mut().enumerate() {
        for c in (0..total).filter(|c| (c / strides[i]).is_multiple_of(base)) {
            let mut slots = decode(c);
            slots.remove(i);
            li[c] = winning_condition(g, h, &slots, version);
        }
    }
    let mut spoiler = vec![false; total];
    for i in 0..p {
        for c in (0..total).filter(|c| (c / strides[i]).is_multiple_of(base)) {
            if lost[i][c] {
                for v in 0..base {
                    spoiler[c + v * strides[i]] = true;
                }
            }
        }
    }

    let mut sweeps = 0;
    let mut rows = vec![0u64; n];
    loop {
        sweeps += 1;
        let mut changed = false;
        for i in 0..p {
            let s = strides[i];
            for c in 0..total {
                if !(c / s).is_multiple_of(base) || lost[i][c] {
                    continue;
                }
                // All successors already lost means nothing to decide.
                let safe = |x: usize, y: usize| !spoiler[c + (1 + x * n + y) * s];
                let survives = match chains {
                    None => {
                        for (x, row) in rows.iter_mut().enumerate() {
                            *row = (0..n).filter(|&y| safe(x, y)).fold(0u64, |acc, y| acc | 1 << y);
                        }
                        has_perfect_matching_bits(&rows)
                    }
                    Some(ch) => ch.has_bijection(n, &safe),
                };
                if !survives {
                    lost[i][c] = true;
                    for v in 0..base {
                        let t = c + v * s;
                        if !spoiler[t] {
                            spoiler[t] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    Ok(GameSolution { n, pebbles: p, version, spoiler, lost, sweeps })
}

/// A tuple pair on which the stable coloring and the game disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub g: Vec<usize>,
    pub h: Vec<usize>,
    pub same_color: bool,
    pub duplicator_wins: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub k: usize,
    pub version: Version,
    pub pairs_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Checks that equal stable `k`-colors coincide with Duplicator winning the
/// `(k+1)`-pebble game from `[(ḡ, ⊥), (h̄, ⊥)]`, over all tuple pairs.
pub fn check_game_wl_equivalence(g: &ColoredGroup, h: &ColoredGroup, k: usize, version: Version) -> Result<EquivalenceReport> {
    let opts = GameOptions { max_pebbles: k + 1, ..Default::default() };
    let sol = solve_game(g, h, k + 1, version, &opts)?;
    let v = wl::joint_stable_any_k(&[g, h], k, version, &WlConfig::default())?;
    Ok(compare_with_game(&sol, &v.colorings[0].colors, &v.colorings[1].colors, k))
}

/// The comparison behind [`check_game_wl_equivalence`] with explicit colors,
/// so that corrupted colorings can be fed in.
pub fn compare_with_game(sol: &GameSolution, colors_g: &[u32], colors_h: &[u32], k: usize) -> EquivalenceReport {
    let n = sol.n;
    let ix = wl::TupleIndexer::new(n, k);
    let mut mismatches = Vec::new();
    let mut pairs = 0;
    for a in 0..ix.len() {
        let ga = ix.tuple(a);
        for b in 0..ix.len() {
            let hb = ix.tuple(b);
            pairs += 1;
            let same = colors_g[a] == colors_h[b];
            let dup = sol.winner(&PebbleConfig::from_tuples(&ga, &hb, sol.pebbles)) == Winner::Duplicator;
            if same != dup {
                mismatches.push(Mismatch { g: ga.clone(), h: hb, same_color: same, duplicator_wins: dup });
            }
        }
    }
    EquivalenceReport { k, version: sol.version, pairs_checked: pairs, mismatches }
}

/// Splits the domain of a bijection `f: A → B` into `m` sets, each a full
/// system of representatives modulo the equipartition `p` of `A` whose
/// image is a full system of representatives modulo the equipartition `q`
/// of `B`. Partitions are given as class labels; all classes have size `m`.
pub fn representative_decomposition(f: &[usize], p: &[usize], q: &[usize]) -> Result<Vec<Vec<usize>>> {
    let len = f.len();
    if p.len() != len || q.len() != len {
        return Err(Error::Invalid("partition labels must cover the domain and codomain".into()));
    }
    let mut seen = vec![false; len];
    for &y in f {
        if y >= len || std::mem::replace(&mut seen[y], true) {
            return Err(Error::Invalid("f is not a bijection".into()));
        }
    }
    let classes = |labels: &[usize]| -> Result<(Vec<usize>, usize)> {
        let mut keys: Vec<usize> = labels.to_vec();
        keys.sort_unstable();
        keys.dedup();
        let dense: Vec<usize> = labels.iter().map(|l| keys.binary_search(l).unwrap()).collect();
        let mut sizes = vec![0usize; keys.len()];
        for &d in &dense {
            sizes[d] += 1;
        }
        if sizes.windows(2).any(|w| w[0] != w[1]) {
            return Err(Error::Invalid("not an equipartition".into()));
        }
        Ok((dense, keys.len()))
    };
    if len == 0 {
        return Ok(Vec::new());
    }
    let (pc, t) = classes(p)?;
    let (qc, t2) = classes(q)?;
    if t != t2 {
        return Err(Error::Invalid("partitions have different class sizes".into()));
    }
    let m = len / t;
    // Edges of the class multigraph, one per domain element.
    let mut remaining: Vec<bool> = vec![true; len];
    let mut out = Vec::with_capacity(m);
    for _ in 0..m {
        let mut edge_of: Vec<Vec<usize>> = vec![Vec::new(); t];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); t];
        for a in (0..len).filter(|&a| remaining[a]) {
            let (u, v) = (pc[a], qc[f[a]]);
            if !adj[u].contains(&v) {
                adj[u].push(v);
                edge_of[u].push(a);
            }
        }
        let matching = perfect_matching(&adj, t)
            .ok_or_else(|| Error::Invalid("internal error: regular class graph without perfect matching".into()))?;
        let mut system: Vec<usize> = (0..t)
            .map(|u| {
                let j = adj[u].iter().position(|&v| v == matching[u]).unwrap();
                edge_of[u][j]
            })
            .collect();
        for &a in &system {
            remaining[a] = false;
        }
        system.sort_unstable();
        out.push(system);
    }
    Ok(out)
}
