//! Bulk-synchronous refinement over one or more tuple blocks.
//!
//! Every round computes a key per tuple in parallel chunks, interns keys
//! exactly (hash maps compare full keys on hash hits), and densifies by
//! sorting the distinct keys, so colors never depend on the chunking.

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::keys::{version_i_key, version_ii_key, BfsScratch};
use super::{Version, WlConfig};
use crate::error::{Error, Result};
use crate::group::ColoredGroup;

pub(crate) struct Interned {
    pub colors: Vec<u32>,
    pub classes: usize,
}

/// Orbits of a group of color-preserving automorphisms on one tuple block.
/// All tuples of an orbit carry the same color at every round.
pub(crate) struct Orbits {
    /// Orbit index of every tuple.
    pub rep_id: Vec<u32>,
    /// Least tuple of every orbit.
    pub reps: Vec<u32>,
}

/// Orbits of the group generated by `autos` acting coordinatewise on `G^k`.
pub(crate) fn tuple_orbits(n: usize, k: usize, autos: &[Vec<usize>]) -> Orbits {
    let total = n.pow(k as u32);
    let mut parent: Vec<u32> = (0..total as u32).collect();
    fn find(p: &mut [u32], mut x: u32) -> u32 {
        while p[x as usize] != x {
            let up = p[p[x as usize] as usize];
            p[x as usize] = up;
            x = up;
        }
        x
    }
    let mut digits = vec![0usize; k];
    for a in autos {
        digits.fill(0);
        let mut image = 0usize;
        for t in 0..total {
            if t > 0 {
                // Odometer step on the digits, recomputing the image index.
                let mut i = k - 1;
                loop {
                    digits[i] += 1;
                    if digits[i] < n {
                        break;
                    }
                    digits[i] = 0;
                    i -= 1;
                }
                image = digits.iter().fold(0, |acc, &d| acc * n + a[d]);
            }
            let (x, y) = (find(&mut parent, t as u32), find(&mut parent, image as u32));
            if x != y {
                let (lo, hi) = if x < y { (x, y) } else { (y, x) };
                parent[hi as usize] = lo;
            }
        }
    }
    let mut rep_id = vec![0u32; total];
    let mut reps = Vec::new();
    for t in 0..total {
        let r = find(&mut parent, t as u32) as usize;
        if r == t {
            rep_id[t] = reps.len() as u32;
            reps.push(t as u32);
        } else {
            rep_id[t] = rep_id[r];
        }
    }
    Orbits { rep_id, reps }
}

/// The tuples whose keys are computed: every tuple, or one per orbit.
pub(crate) struct Items<'a> {
    per_block: usize,
    orbits: Vec<Option<&'a Orbits>>,
    offsets: Vec<usize>,
}

impl<'a> Items<'a> {
    pub(crate) fn new(per_block: usize, orbits: Vec<Option<&'a Orbits>>) -> Self {
        let mut offsets = vec![0];
        for o in &orbits {
            offsets.push(offsets.last().unwrap() + o.map_or(per_block, |o| o.reps.len()));
        }
        Items { per_block, orbits, offsets }
    }

    fn count(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    #[inline]
    fn locate(&self, i: usize) -> (usize, usize) {
        let b = self.offsets.partition_point(|&o| o <= i) - 1;
        let j = i - self.offsets[b];
        (b, self.orbits[b].map_or(j, |o| o.reps[j] as usize))
    }

    /// Spreads per-item colors over all tuples.
    fn expand(&self, item_colors: Vec<u32>) -> Vec<u32> {
        if self.orbits.iter().all(Option::is_none) {
            return item_colors;
        }
        let mut out = Vec::with_capacity(self.orbits.len() * self.per_block);
        for (b, o) in self.orbits.iter().enumerate() {
            let base = &item_colors[self.offsets[b]..self.offsets[b + 1]];
            match o {
                Some(o) => out.extend(o.rep_id.iter().map(|&r| base[r as usize])),
                None => out.extend_from_slice(base),
            }
        }
        out
    }
}

/// Interns `fill(scratch, block, tuple)` for every item and spreads the
/// colors over all tuples.
pub(crate) fn intern_items<S, MK, F>(items: &Items, chunks: usize, make: MK, fill: F) -> Interned
where
    MK: Fn() -> S + Sync,
    F: Fn(&mut S, usize, usize, &mut Vec<u32>) + Sync,
{
    let out = intern_all(items.count(), chunks, make, |s, i, buf| {
        let (b, t) = items.locate(i);
        fill(s, b, t, buf)
    });
    Interned { colors: items.expand(out.colors), classes: out.classes }
}

/// Interns `fill(scratch, i)` for `i in 0..total`.
pub(crate) fn intern_all<S, MK, F>(total: usize, chunks: usize, make: MK, fill: F) -> Interned
where
    MK: Fn() -> S + Sync,
    F: Fn(&mut S, usize, &mut Vec<u32>) + Sync,
{
    let chunks = chunks.clamp(1, total.max(1));
    let size = total.div_ceil(chunks).max(1);
    let parts: Vec<(FxHashMap<Box<[u32]>, u32>, Vec<u32>)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let (start, end) = ((c * size).min(total), ((c + 1) * size).min(total));
            let mut map: FxHashMap<Box<[u32]>, u32> = FxHashMap::default();
            let mut ids = Vec::with_capacity(end - start);
            let mut scratch = make();
            let mut buf = Vec::new();
            for t in start..end {
                buf.clear();
                fill(&mut scratch, t, &mut buf);
                let id = match map.get(buf.as_slice()) {
                    Some(&id) => id,
                    None => {
                        let id = map.len() as u32;
                        map.insert(buf.as_slice().into(), id);
                        id
                    }
                };
                ids.push(id);
            }
            (map, ids)
        })
        .collect();

    let mut keyed: Vec<(Box<[u32]>, u32, u32)> = Vec::new();
    let mut remaps: Vec<Vec<u32>> = Vec::with_capacity(parts.len());
    let mut id_lists = Vec::with_capacity(parts.len());
    for (c, (map, ids)) in parts.into_iter().enumerate() {
        remaps.push(vec![0; map.len()]);
        keyed.extend(map.into_iter().map(|(k, id)| (k, c as u32, id)));
        id_lists.push(ids);
    }
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    let mut classes = 0u32;
    for i in 0..keyed.len() {
        if i > 0 && keyed[i].0 != keyed[i - 1].0 {
            classes += 1;
        }
        remaps[keyed[i].1 as usize][keyed[i].2 as usize] = classes;
    }
    let classes = if keyed.is_empty() { 0 } else { classes as usize + 1 };
    drop(keyed);
    let mut colors = Vec::with_capacity(total);
    for (ids, remap) in id_lists.iter().zip(&remaps) {
        colors.extend(ids.iter().map(|&i| remap[i as usize]));
    }
    Interned { colors, classes }
}

pub(crate) fn initial(groups: &[&ColoredGroup], k: usize, version: Version, items: &Items, chunks: usize) -> Interned {
    let n = groups[0].order();
    match version {
        Version::I => intern_items(
            items,
            chunks,
            || vec![0usize; k],
            |tuple, b, t, out| {
                fill_digits(t, n, tuple);
                version_i_key(groups[b], tuple, out);
            },
        ),
        Version::II => intern_items(
            items,
            chunks,
            || (vec![0usize; k], BfsScratch::new(n)),
            |(tuple, scratch), b, t, out| {
                fill_digits(t, n, tuple);
                version_ii_key(groups[b], tuple, scratch, out);
            },
        ),
    }
}

#[inline]
fn fill_digits(mut t: usize, n: usize, out: &mut [usize]) {
    for slot in out.iter_mut().rev() {
        *slot = t % n;
        t /= n;
    }
}

/// One refinement round; returns the new colors and class count.
pub(crate) fn refine_round(colors: &[u32], classes: usize, n: usize, k: usize, items: &Items, chunks: usize) -> Interned {
    match k {
        1 => round::<1>(colors, classes, n, items, chunks),
        2 => round::<2>(colors, classes, n, items, chunks),
        3 => round::<3>(colors, classes, n, items, chunks),
        4 => round::<4>(colors, classes, n, items, chunks),
        5 => round::<5>(colors, classes, n, items, chunks),
        6 => round::<6>(colors, classes, n, items, chunks),
        _ => unreachable!("dimension checked by caller"),
    }
}

/// Copy of a block with axis `j` moved to the fastest-varying position.
fn transpose(block: &[u32], n: usize, k: usize, j: usize) -> Vec<u32> {
    let s = n.pow((k - 1 - j) as u32);
    let hi_count = block.len() / (n * s);
    let mut out = vec![0u32; block.len()];
    for hi in 0..hi_count {
        for d in 0..n {
            let src = &block[(hi * n + d) * s..(hi * n + d + 1) * s];
            for (lo, &c) in src.iter().enumerate() {
                out[(hi * s + lo) * n + d] = c;
            }
        }
    }
    out
}

fn round<const K: usize>(colors: &[u32], classes: usize, n: usize, items: &Items, chunks: usize) -> Interned {
    let per_block = n.pow(K as u32);
    let blocks = items.orbits.len();
    let mut size = vec![0u32; classes];
    for &c in colors {
        size[c as usize] = size[c as usize].saturating_add(1);
    }
    let transposed: Vec<Vec<Vec<u32>>> = (0..blocks)
        .map(|b| {
            let blk = &colors[b * per_block..(b + 1) * per_block];
            (0..K - 1).map(|j| transpose(blk, n, K, j)).collect()
        })
        .collect();
    intern_items(
        items,
        chunks,
        || vec![[0u32; K]; n],
        |entries, b, t, out| {
            let blk = &colors[b * per_block..(b + 1) * per_block];
            let old = blk[t];
            out.push(old);
            // A class of one tuple cannot split; its old color already fixes
            // its place in the lexicographic order.
            if size[old as usize] == 1 {
                return;
            }
            let mut d = [0usize; K];
            fill_digits(t, n, &mut d);
            let mut lines: [&[u32]; K] = [&[]; K];
            for (j, line) in lines.iter_mut().enumerate().take(K - 1) {
                let mut rem = 0;
                for (i, &di) in d.iter().enumerate() {
                    if i != j {
                        rem = rem * n + di;
                    }
                }
                *line = &transposed[b][j][rem * n..rem * n + n];
            }
            let base = t - d[K - 1];
            lines[K - 1] = &blk[base..base + n];
            for (x, e) in entries.iter_mut().enumerate() {
                for j in 0..K {
                    e[j] = lines[j][x];
                }
            }
            entries.sort_unstable();
            for e in entries.iter() {
                out.extend_from_slice(e);
            }
        },
    )
}

/// Per-block color histograms equal?
pub(crate) fn histograms_equal(colors: &[u32], classes: usize, blocks: usize) -> bool {
    if blocks < 2 {
        return true;
    }
    let per = colors.len() / blocks;
    let hist = |b: usize| {
        let mut h = vec![0u32; classes];
        for &c in &colors[b * per..(b + 1) * per] {
            h[c as usize] += 1;
        }
        h
    };
    let first = hist(0);
    (1..blocks).all(|b| hist(b) == first)
}

pub(crate) struct RunOutput {
    pub colors: Vec<u32>,
    pub classes: usize,
    pub rounds: usize,
    pub history: Vec<usize>,
    pub first_distinguishing_round: Option<usize>,
}

pub(crate) fn check_budget(blocks: usize, n: usize, k: usize, cfg: &WlConfig) -> Result<()> {
    if k == 0 || k > 6 {
        return Err(Error::Invalid(format!("dimension {k} outside 1..=6")));
    }
    let cells = blocks as u128 * (n as u128).pow(k as u32);
    if cells > cfg.budget as u128 {
        return Err(Error::Budget { cells, budget: cfg.budget });
    }
    Ok(())
}

/// Refines `colors` to stability over `blocks` equal-size blocks.
pub(crate) fn refine_loop(
    mut colors: Vec<u32>,
    mut classes: usize,
    n: usize,
    k: usize,
    items: &Items,
    cfg: &WlConfig,
) -> RunOutput {
    let chunks = cfg.chunk_count();
    let blocks = items.orbits.len();
    let mut history = vec![classes];
    let mut first = (!histograms_equal(&colors, classes, blocks)).then_some(0);
    let mut rounds = 0;
    while !(cfg.early_exit && first.is_some()) {
        if cfg.max_rounds.is_some_and(|m| rounds >= m) {
            break;
        }
        let next = refine_round(&colors, classes, n, k, items, chunks);
        if next.classes == classes {
            break;
        }
        colors = next.colors;
        classes = next.classes;
        rounds += 1;
        history.push(classes);
        if first.is_none() && !histograms_equal(&colors, classes, blocks) {
            first = Some(rounds);
        }
    }
    RunOutput { colors, classes, rounds, history, first_distinguishing_round: first }
}
