//! Bipartite matching by augmenting paths (Kuhn's algorithm).
//!
//! Left vertices are tried in increasing order and their neighbours in the
//! order given, so results are deterministic.

/// Maximum matching on a bipartite graph with `adj[u]` the right neighbours
/// of left vertex `u`. Returns `mate[u]` for every left vertex.
pub fn maximum_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    let mut m = Matcher::new(adj.len(), right);
    for u in 0..adj.len() {
        m.augment_from(u, adj);
    }
    m.left_mate()
}

/// A perfect matching as a map left → right, if one exists.
pub fn perfect_matching(adj: &[Vec<usize>], right: usize) -> Option<Vec<usize>> {
    if adj.len() != right {
        return None;
    }
    let mut m = Matcher::new(adj.len(), right);
    for u in 0..adj.len() {
        if !m.augment_from(u, adj) {
            return None;
        }
    }
    Some(m.left_mate().into_iter().map(|x| x.expect("perfect")).collect())
}

/// Reusable matcher state.
#[derive(Clone, Debug)]
pub struct Matcher {
    right_mate: Vec<usize>,
    seen: Vec<u32>,
    epoch: u32,
    left: usize,
}

const FREE: usize = usize::MAX;

impl Matcher {
    pub fn new(left: usize, right: usize) -> Self {
        Matcher { right_mate: vec![FREE; right], seen: vec![0; right], epoch: 0, left }
    }

    pub fn reset(&mut self) {
        self.right_mate.fill(FREE);
    }

    /// Tries to match left vertex `u`, rerouting earlier matches if needed.
    pub fn augment_from(&mut self, u: usize, adj: &[Vec<usize>]) -> bool {
        self.epoch = self.epoch.wrapping_add(1);
        if self.epoch == 0 {
            self.seen.fill(0);
            self.epoch = 1;
        }
        self.dfs(u, adj)
    }

    fn dfs(&mut self, u: usize, adj: &[Vec<usize>]) -> bool {
        for &v in &adj[u] {
            if self.seen[v] == self.epoch {
                continue;
            }
            self.seen[v] = self.epoch;
            if self.right_mate[v] == FREE || self.dfs(self.right_mate[v], adj) {
                self.right_mate[v] = u;
                return true;
            }
        }
        false
    }

    pub fn left_mate(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.left];
        for (v, &u) in self.right_mate.iter().enumerate() {
            if u != FREE {
                out[u] = Some(v);
            }
        }
        out
    }
}

/// Perfect-matching test on a dense graph with at most 64 right vertices,
/// rows given as bitmasks.
pub fn has_perfect_matching_bits(rows: &[u64]) -> bool {
    let n = rows.len();
    debug_assert!(n <= 64);
    let mut right_mate = [u8::MAX; 64];
    for u in 0..n {
        let mut seen = 0u64;
        if !dfs_bits(u, rows, &mut right_mate, &mut seen) {
            return false;
        }
    }
    true
}

fn dfs_bits(u: usize, rows: &[u64], right_mate: &mut [u8; 64], seen: &mut u64) -> bool {
    let mut cand = rows[u] & !*seen;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if *seen & (1 << v) != 0 {
            continue;
        }
        *seen |= 1 << v;
        if right_mate[v] == u8::MAX || dfs_bits(right_mate[v] as usize, rows, right_mate, seen) {
            right_mate[v] = u as u8;
            return true;
        }
    }
    false
}
