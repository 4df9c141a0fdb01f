//! Initial-color keys for single tuples.

use crate::group::ColoredGroup;

/// Mixed-radix bijection between `[0, n^k)` and `k`-tuples, first coordinate
/// most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TupleIndexer {
    pub n: usize,
    pub k: usize,
}

impl TupleIndexer {
    pub fn new(n: usize, k: usize) -> Self {
        TupleIndexer { n, k }
    }

    pub fn len(&self) -> usize {
        self.n.pow(self.k as u32)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn index(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.k);
        tuple.iter().fold(0, |acc, &g| acc * self.n + g)
    }

    pub fn tuple(&self, mut t: usize) -> Vec<usize> {
        let mut out = vec![0; self.k];
        self.fill(&mut t, &mut out);
        out
    }

    pub fn fill(&self, t: &mut usize, out: &mut [usize]) {
        for slot in out.iter_mut().rev() {
            *slot = *t % self.n;
            *t /= self.n;
        }
    }
}

/// Version I key: element colors, equality pattern, product pattern.
pub fn version_i_key(cg: &ColoredGroup, tuple: &[usize], out: &mut Vec<u32>) {
    let g = &cg.group;
    let k = tuple.len();
    out.extend(tuple.iter().map(|&x| cg.colors[x]));
    let mut bits = BitPacker::new(out);
    for i in 0..k {
        for j in 0..k {
            bits.push(tuple[i] == tuple[j]);
        }
    }
    for i in 0..k {
        for j in 0..k {
            let p = g.mul(tuple[i], tuple[j]);
            for &m in tuple {
                bits.push(p == m);
            }
        }
    }
    bits.finish();
}

struct BitPacker<'a> {
    out: &'a mut Vec<u32>,
    word: u32,
    used: u32,
}

impl<'a> BitPacker<'a> {
    fn new(out: &'a mut Vec<u32>) -> Self {
        BitPacker { out, word: 0, used: 0 }
    }
    #[inline]
    fn push(&mut self, b: bool) {
        self.word |= (b as u32) << self.used;
        self.used += 1;
        if self.used == 32 {
            self.out.push(self.word);
            self.word = 0;
            self.used = 0;
        }
    }
    fn finish(self) {
        if self.used > 0 {
            self.out.push(self.word);
        }
    }
}

/// Scratch space for [`version_ii_key`].
#[derive(Clone, Debug)]
pub struct BfsScratch {
    rank: Vec<u32>,
    stamp: Vec<u32>,
    epoch: u32,
    order: Vec<usize>,
    table: Vec<u32>,
}

impl BfsScratch {
    pub fn new(n: usize) -> Self {
        BfsScratch { rank: vec![0; n], stamp: vec![0; n], epoch: 0, order: Vec::with_capacity(n), table: Vec::new() }
    }
}

/// Version II key: the colored, generator-labelled Cayley table of `<ḡ>`.
///
/// Elements are ranked by first discovery in a breadth-first search from the
/// identity that right-multiplies by `g_1, …, g_k` in order. The key is
/// `[|<ḡ>|, rank(u·g_i) for every rank u and every i, colors by rank]`.
/// The generator ranks are the row of the identity. Equal keys give the
/// isomorphism `rank_G(r) ↦ rank_H(r)` mapping `g_i ↦ h_i`, and conversely.
pub fn version_ii_key(cg: &ColoredGroup, tuple: &[usize], s: &mut BfsScratch, out: &mut Vec<u32>) {
    let g = &cg.group;
    s.epoch = s.epoch.wrapping_add(1);
    if s.epoch == 0 {
        s.stamp.fill(0);
        s.epoch = 1;
    }
    s.order.clear();
    s.table.clear();
    s.order.push(0);
    s.stamp[0] = s.epoch;
    s.rank[0] = 0;
    let mut i = 0;
    while i < s.order.len() {
        let u = s.order[i];
        for &x in tuple {
            let v = g.mul(u, x);
            if s.stamp[v] != s.epoch {
                s.stamp[v] = s.epoch;
                s.rank[v] = s.order.len() as u32;
                s.order.push(v);
            }
            s.table.push(s.rank[v]);
        }
        i += 1;
    }
    out.push(s.order.len() as u32);
    out.extend_from_slice(&s.table);
    out.extend(s.order.iter().map(|&u| cg.colors[u]));
}
