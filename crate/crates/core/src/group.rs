//! Finite groups given by multiplication tables.
//!
//! Elements are indices `0..n` with `0` the identity. Subgroups and other
//! subsets are [`ElementSet`]s over the parent's indices; [`Group::as_group`]
//! relabels a subgroup into a standalone table when one is needed.

use std::collections::{HashSet, VecDeque};

use crate::element_set::ElementSet;
use crate::error::{Error, Result};

/// Cap on the number of subgroups any enumeration may produce.
pub const DEFAULT_SUBGROUP_CAP: usize = 100_000;

#[derive(Clone, PartialEq, Eq)]
pub struct Group {
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    name: Option<String>,
}

impl std::fmt::Debug for Group {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Group({}, order {})", self.name.as_deref().unwrap_or("?"), self.n)
    }
}

/// A group together with an element coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGroup {
    pub group: Group,
    pub colors: Vec<u32>,
}

/// Result of [`Group::quotient_group`].
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: Group,
    /// Coset index of every parent element.
    pub coset_of: Vec<usize>,
    /// Minimal element of every coset.
    pub representatives: Vec<usize>,
}

/// A subgroup relabelled as a standalone group.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub group: Group,
    /// `embedding[i]` is the parent index of element `i`.
    pub embedding: Vec<usize>,
}

impl Subgroup {
    /// Parent set of a subset given in subgroup indices.
    pub fn lift(&self, parent_order: usize, s: &ElementSet) -> ElementSet {
        ElementSet::from_elements(parent_order, s.iter().map(|i| self.embedding[i]))
    }

    /// Subgroup indices of a parent subset (elements outside are dropped).
    pub fn restrict(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_elements(
            self.embedding.len(),
            self.embedding.iter().enumerate().filter(|(_, &p)| s.contains(p)).map(|(i, _)| i),
        )
    }
}

impl Group {
    /// Checks every group axiom and returns the group.
    pub fn validate(rows: &[Vec<usize>]) -> Result<Group> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::NotSquare { row: 0, len: 0, n: 0 });
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::NotSquare { row: i, len: r.len(), n });
            }
            if let Some(j) = r.iter().position(|&x| x >= n) {
                return Err(Error::NotClosed { row: i, col: j });
            }
        }
        if n > u32::MAX as usize {
            return Err(Error::TooLarge(format!("order {n}")));
        }
        let table: Vec<u32> = rows.iter().flat_map(|r| r.iter().map(|&x| x as u32)).collect();
        Self::validate_flat(n, table)
    }

    /// Same as [`Group::validate`] on a row-major flat table.
    pub fn validate_flat(n: usize, table: Vec<u32>) -> Result<Group> {
        if n == 0 || table.len() != n * n {
            return Err(Error::NotSquare { row: 0, len: table.len(), n });
        }
        if let Some(p) = table.iter().position(|&x| x as usize >= n) {
            return Err(Error::NotClosed { row: p / n, col: p % n });
        }
        for j in 0..n {
            if table[j] as usize != j {
                return Err(Error::NoIdentityAtZero { row: 0, col: j });
            }
            if table[j * n] as usize != j {
                return Err(Error::NoIdentityAtZero { row: j, col: 0 });
            }
        }
        // Latin square: every row and every column a permutation.
        let mut seen = vec![usize::MAX; n];
        for i in 0..n {
            for j in 0..n {
                let x = table[i * n + j] as usize;
                if seen[x] == i {
                    return Err(Error::NotClosed { row: i, col: j });
                }
                seen[x] = i;
            }
        }
        seen.fill(usize::MAX);
        for j in 0..n {
            for i in 0..n {
                let x = table[i * n + j] as usize;
                if seen[x] == j {
                    return Err(Error::NotClosed { row: i, col: j });
                }
                seen[x] = j;
            }
        }
        let mut inverse = vec![0u32; n];
        for (i, inv) in inverse.iter_mut().enumerate() {
            match (0..n).find(|&j| table[i * n + j] == 0) {
                Some(j) => *inv = j as u32,
                None => return Err(Error::MissingInverse(i)),
            }
        }
        check_associative(n, &table)?;
        Ok(Self::from_parts(n, table, inverse))
    }

    /// Builds a group from a table known to be valid (constructors, quotients).
    pub(crate) fn from_trusted(n: usize, table: Vec<u32>) -> Group {
        let inverse = (0..n)
            .map(|i| (0..n).find(|&j| table[i * n + j] == 0).expect("trusted table has inverses") as u32)
            .collect();
        Self::from_parts(n, table, inverse)
    }

    fn from_parts(n: usize, table: Vec<u32>, inverse: Vec<u32>) -> Group {
        let mut orders = vec![0u32; n];
        for g in 0..n {
            let mut x = g;
            let mut k = 1;
            while x != 0 {
                x = table[x * n + g] as usize;
                k += 1;
            }
            orders[g] = k;
        }
        Group { n, table, inverse, orders, name: None }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Row-major table.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(|r| r.iter().map(|&x| x as usize).collect()).collect()
    }

    #[inline]
    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g * self.n + h] as usize
    }

    #[inline]
    pub fn inv(&self, g: usize) -> usize {
        self.inverse[g] as usize
    }

    pub fn power(&self, g: usize, e: i64) -> usize {
        let ord = self.orders[g] as i64;
        let e = e.rem_euclid(ord);
        let mut acc = 0;
        let mut base = g;
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `|<g>|`.
    #[inline]
    pub fn element_order(&self, g: usize) -> usize {
        self.orders[g] as usize
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    /// `[g,h] = g h g⁻¹ h⁻¹`.
    #[inline]
    pub fn commutator(&self, g: usize, h: usize) -> usize {
        let gh = self.mul(g, h);
        self.mul(self.mul(gh, self.inv(g)), self.inv(h))
    }

    /// `g^h = h g h⁻¹`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    #[inline]
    pub fn commute(&self, g: usize, h: usize) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|g| (g + 1..self.n).all(|h| self.commute(g, h)))
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    pub fn trivial(&self) -> ElementSet {
        ElementSet::singleton(self.n, 0)
    }

    pub fn set(&self, elems: impl IntoIterator<Item = usize>) -> ElementSet {
        ElementSet::from_elements(self.n, elems)
    }

    /// Closure of `start ∪ gens` under right multiplication by `gens`;
    /// equals `<gens>` when `start ⊆ <gens>`.
    fn close(&self, mut set: ElementSet, gens: &[usize]) -> ElementSet {
        let mut queue: VecDeque<usize> = set.iter().collect();
        while let Some(x) = queue.pop_front() {
            for &s in gens {
                let y = self.mul(x, s);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    /// Subgroup generated by a list of elements.
    pub fn generated_by(&self, gens: &[usize]) -> ElementSet {
        let mut h = self.trivial();
        let mut eff: Vec<usize> = Vec::new();
        for &g in gens {
            if !h.contains(g) {
                eff.push(g);
                h = self.close(h, &eff);
            }
        }
        h
    }

    pub fn generated_subgroup(&self, gens: &ElementSet) -> ElementSet {
        self.generated_by(&gens.to_vec())
    }

    /// A short generating list for a subgroup (greedy, ascending indices).
    pub fn generators_of(&self, h: &ElementSet) -> Vec<usize> {
        let mut cur = self.trivial();
        let mut gens = Vec::new();
        for g in h.iter() {
            if !cur.contains(g) {
                gens.push(g);
                cur = self.close(cur, &gens);
            }
        }
        gens
    }

    /// `<H ∪ extra>` for a subgroup `H` with known generators.
    fn join_with(&self, h: &ElementSet, h_gens: &[usize], extra: &[usize]) -> (ElementSet, Vec<usize>) {
        let mut gens = h_gens.to_vec();
        let mut cur = h.clone();
        for &g in extra {
            if !cur.contains(g) {
                gens.push(g);
                cur = self.close(cur, &gens);
            }
        }
        (cur, gens)
    }

    /// All conjugates of elements of `m`.
    pub fn conjugates_of(&self, m: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.n);
        for x in m.iter() {
            for h in 0..self.n {
                out.insert(self.conjugate(x, h));
            }
        }
        out
    }

    pub fn normal_closure(&self, m: &ElementSet) -> ElementSet {
        self.generated_subgroup(&self.conjugates_of(m))
    }

    pub fn centralizer(&self, m: &ElementSet) -> ElementSet {
        let ms = m.to_vec();
        ElementSet::from_predicate(self.n, |g| ms.iter().all(|&x| self.commute(g, x)))
    }

    pub fn centralizer_of(&self, x: usize) -> ElementSet {
        ElementSet::from_predicate(self.n, |g| self.commute(g, x))
    }

    pub fn normalizer(&self, m: &ElementSet) -> ElementSet {
        let ms = m.to_vec();
        ElementSet::from_predicate(self.n, |g| ms.iter().all(|&x| m.contains(self.conjugate(x, g))))
    }

    pub fn center(&self) -> ElementSet {
        ElementSet::from_predicate(self.n, |g| (0..self.n).all(|h| self.commute(g, h)))
    }

    pub fn is_subgroup(&self, s: &ElementSet) -> bool {
        s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(self.mul(a, b))))
    }

    pub fn is_normal(&self, s: &ElementSet) -> bool {
        self.is_subgroup(s) && self.conjugates_of(s) == *s
    }

    /// `{ab | a ∈ A, b ∈ B}`.
    pub fn product_set(&self, a: &ElementSet, b: &ElementSet) -> ElementSet {
        let bs = b.to_vec();
        let mut out = ElementSet::empty(self.n);
        for x in a.iter() {
            for &y in &bs {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// `[S,T] = <[s,t] | s ∈ S, t ∈ T>`.
    pub fn commutator_subgroup(&self, s: &ElementSet, t: &ElementSet) -> ElementSet {
        let ts = t.to_vec();
        let mut c = ElementSet::empty(self.n);
        for x in s.iter() {
            for &y in &ts {
                c.insert(self.commutator(x, y));
            }
        }
        self.generated_subgroup(&c)
    }

    pub fn derived_subgroup(&self) -> ElementSet {
        let all = self.all();
        self.commutator_subgroup(&all, &all)
    }

    /// Orbits of conjugation, each sorted, ordered by least element.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if assigned[x] {
                continue;
            }
            let mut cls = ElementSet::empty(self.n);
            for h in 0..self.n {
                cls.insert(self.conjugate(x, h));
            }
            for y in cls.iter() {
                assigned[y] = true;
            }
            classes.push(cls.to_vec());
        }
        classes
    }

    pub fn normal_subgroups(&self) -> Result<Vec<ElementSet>> {
        self.normal_subgroups_capped(DEFAULT_SUBGROUP_CAP)
    }

    /// All normal subgroups, sorted by order then lexicographically.
    ///
    /// Breadth-first over joins with conjugacy classes: every normal subgroup is
    /// a union of classes, so it is reached from `{1}` one class at a time.
    pub fn normal_subgroups_capped(&self, cap: usize) -> Result<Vec<ElementSet>> {
        let classes = self.conjugacy_classes();
        let start = self.trivial();
        let mut seen: HashSet<ElementSet> = HashSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([(start, Vec::new())]);
        let mut out = Vec::new();
        while let Some((n_set, gens)) = queue.pop_front() {
            for cls in &classes {
                if n_set.contains(cls[0]) {
                    continue;
                }
                let (next, next_gens) = self.join_with(&n_set, &gens, cls);
                if !seen.contains(&next) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded(format!("more than {cap} normal subgroups")));
                    }
                    seen.insert(next.clone());
                    queue.push_back((next, next_gens));
                }
            }
            out.push(n_set);
        }
        sort_subgroups(&mut out);
        Ok(out)
    }

    pub fn all_subgroups(&self) -> Result<Vec<ElementSet>> {
        self.subgroups_where(|_| true, |_| true, DEFAULT_SUBGROUP_CAP)
    }

    /// Subgroups reachable by joining cyclic subgroups generated by elements
    /// satisfying `elem_ok`, keeping only subgroups satisfying `keep`
    /// (which must be inherited by subgroups for the enumeration to be complete).
    pub fn subgroups_where(
        &self,
        elem_ok: impl Fn(usize) -> bool,
        keep: impl Fn(&ElementSet) -> bool,
        cap: usize,
    ) -> Result<Vec<ElementSet>> {
        // One generator per cyclic subgroup.
        let mut cyclic_seen = HashSet::new();
        let mut cyc_gens = Vec::new();
        for g in 1..self.n {
            if !elem_ok(g) {
                continue;
            }
            let c = self.generated_by(&[g]);
            if cyclic_seen.insert(c) {
                cyc_gens.push(g);
            }
        }
        let start = self.trivial();
        let mut seen: HashSet<ElementSet> = HashSet::new();
        seen.insert(start.clone());
        let mut queue = VecDeque::from([(start, Vec::new())]);
        let mut out = Vec::new();
        while let Some((h, gens)) = queue.pop_front() {
            for &g in &cyc_gens {
                if h.contains(g) {
                    continue;
                }
                let (next, next_gens) = self.join_with(&h, &gens, &[g]);
                if !keep(&next) || seen.contains(&next) {
                    continue;
                }
                if seen.len() >= cap {
                    return Err(Error::CapExceeded(format!("more than {cap} subgroups")));
                }
                seen.insert(next.clone());
                queue.push_back((next, next_gens));
            }
            out.push(h);
        }
        sort_subgroups(&mut out);
        Ok(out)
    }

    pub fn quotient_group(&self, normal: &ElementSet) -> Result<Quotient> {
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let n = self.n;
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for x in normal.iter() {
                coset_of[self.mul(g, x)] = idx;
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = coset_of[self.mul(reps[i], reps[j])] as u32;
            }
        }
        Ok(Quotient { group: Group::from_trusted(m, table), coset_of, representatives: reps })
    }

    /// Full preimage of a set of cosets.
    pub fn preimage(&self, q: &Quotient, s: &ElementSet) -> ElementSet {
        ElementSet::from_predicate(self.n, |g| s.contains(q.coset_of[g]))
    }

    /// Relabels a subgroup (ascending parent indices, identity first).
    pub fn as_group(&self, h: &ElementSet) -> Result<Subgroup> {
        if !self.is_subgroup(h) {
            return Err(Error::Invalid("set is not a subgroup".into()));
        }
        let embedding = h.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &g) in embedding.iter().enumerate() {
            index[g] = i;
        }
        let m = embedding.len();
        let mut table = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = index[self.mul(embedding[i], embedding[j])] as u32;
            }
        }
        Ok(Subgroup { group: Group::from_trusted(m, table), embedding })
    }

    /// Set of primes dividing the order.
    pub fn prime_divisors(&self) -> Vec<usize> {
        prime_factors(self.n)
    }
}

fn sort_subgroups(v: &mut [ElementSet]) {
    v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
}

/// Distinct prime factors in increasing order.
pub fn prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Associativity check by Light's test over a generating set, with a full
/// scan to locate the first failing triple when the test fails.
fn check_associative(n: usize, t: &[u32]) -> Result<()> {
    let m = |a: usize, b: usize| t[a * n + b] as usize;
    // Generating set of the magma under left-normed products.
    let mut gens: Vec<usize> = Vec::new();
    let mut reach = vec![false; n];
    reach[0] = true;
    let mut count = 1;
    while count < n {
        let g = (0..n).find(|&x| !reach[x]).expect("unreached element");
        gens.push(g);
        let mut queue: VecDeque<usize> = (0..n).filter(|&x| reach[x]).collect();
        while let Some(x) = queue.pop_front() {
            for &s in &gens {
                let y = m(x, s);
                if !reach[y] {
                    reach[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
    }
    let light_ok = gens.iter().all(|&s| (0..n).all(|x| (0..n).all(|y| m(m(x, s), y) == m(x, m(s, y)))));
    if light_ok {
        return Ok(());
    }
    for a in 0..n {
        for b in 0..n {
            let ab = m(a, b);
            for c in 0..n {
                if m(ab, c) != m(a, m(b, c)) {
                    return Err(Error::NotAssociative { a, b, c });
                }
            }
        }
    }
    unreachable!("Light's test failed but no failing triple exists")
}

impl ColoredGroup {
    /// Colors must be dense: the set of used values is `0..c`.
    pub fn new(group: Group, colors: Vec<u32>) -> Result<Self> {
        if colors.len() != group.order() {
            return Err(Error::Invalid(format!(
                "{} colors for a group of order {}",
                colors.len(),
                group.order()
            )));
        }
        let max = colors.iter().copied().max().unwrap_or(0) as usize;
        let mut used = vec![false; max + 1];
        for &c in &colors {
            used[c as usize] = true;
        }
        if let Some(c) = used.iter().position(|u| !u) {
            return Err(Error::Invalid(format!("colors are not dense: {c} unused")));
        }
        Ok(ColoredGroup { group, colors })
    }

    pub fn uniform(group: Group) -> Self {
        let n = group.order();
        ColoredGroup { group, colors: vec![0; n] }
    }

    /// Colors an arbitrary labelling densely, preserving the label order.
    pub fn from_labels(group: Group, labels: &[u64]) -> Result<Self> {
        let mut sorted: Vec<u64> = labels.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let colors = labels.iter().map(|l| sorted.binary_search(l).unwrap() as u32).collect();
        Self::new(group, colors)
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn is_uniform(&self) -> bool {
        self.colors.iter().all(|&c| c == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn validation_errors() {
        assert!(Group::validate(&[vec![0]]).is_ok());
        assert!(Group::validate(&[vec![0, 1], vec![1, 0]]).is_ok());
        assert_eq!(Group::validate(&[vec![0, 1], vec![1, 1]]), Err(Error::NotClosed { row: 1, col: 1 }));
        assert!(matches!(
            Group::validate(&[vec![1, 0], vec![0, 1]]),
            Err(Error::NoIdentityAtZero { .. })
        ));
        assert!(matches!(Group::validate(&[vec![0, 1], vec![1]]), Err(Error::NotSquare { row: 1, .. })));
        // The loop of order 5 below is a Latin square with identity 0 that is not associative.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(Group::validate(&loop5), Err(Error::NotAssociative { .. })));
    }

    #[test]
    fn d4_arithmetic() {
        let d4 = dihedral(4).unwrap();
        let r = 1;
        for s in 4..8 {
            assert_eq!(d4.commutator(r, s), d4.power(r, 2));
        }
        assert_eq!(d4.center().to_vec(), vec![0, 2]);
        for g in 0..8 {
            assert_eq!(d4.power(g, d4.element_order(g) as i64), 0);
            assert_eq!(d4.mul(g, d4.inv(g)), 0);
            assert_eq!(8 % d4.element_order(g), 0);
        }
        assert_eq!(d4.element_order(0), 1);
    }

    #[test]
    fn s3_and_s4_structure() {
        let s3 = symmetric(3).unwrap();
        let three_cycle = (0..6).find(|&g| s3.element_order(g) == 3).unwrap();
        assert_eq!(s3.generated_by(&[three_cycle]).len(), 3);
        let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let a3 = s3.generated_by(&[three_cycle]);
        assert_eq!(s3.normalizer(&a3), s3.all());

        let s4 = symmetric(4).unwrap();
        let mut sizes: Vec<usize> = s4.conjugacy_classes().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        let normals: Vec<usize> = s4.normal_subgroups().unwrap().iter().map(|s| s.len()).collect();
        assert_eq!(normals, vec![1, 4, 12, 24]);
        let transposition = (0..24)
            .find(|&g| s4.element_order(g) == 2 && s4.centralizer_of(g).len() == 4)
            .unwrap();
        assert_eq!(s4.normal_closure(&s4.set([transposition])).len(), 24);
        let double = (0..24)
            .find(|&g| s4.element_order(g) == 2 && s4.centralizer_of(g).len() == 8)
            .unwrap();
        assert_eq!(s4.normal_closure(&s4.set([double])).len(), 4);
        let v4 = s4.normal_closure(&s4.set([double]));
        let q = s4.quotient_group(&v4).unwrap();
        assert_eq!(q.group.order(), 6);
        assert!(!q.group.is_abelian());
        let all: Vec<Vec<usize>> = q.group.rows();
        assert!(Group::validate(&all).is_ok());
    }

    #[test]
    fn normal_subgroups_match_naive_filter() {
        for g in [cyclic(6), dihedral(4).unwrap(), symmetric(3).unwrap(), alternating(4).unwrap(), quaternion8()] {
            let naive: Vec<ElementSet> =
                g.all_subgroups().unwrap().into_iter().filter(|h| g.conjugates_of(h) == *h).collect();
            assert_eq!(g.normal_subgroups().unwrap(), naive, "{g:?}");
        }
        assert_eq!(cyclic(6).normal_subgroups().unwrap().len(), 4);
        assert_eq!(alternating(5).unwrap().normal_subgroups().unwrap().len(), 2);
    }

    #[test]
    fn quotient_extremes() {
        let g = dihedral(3).unwrap();
        let q = g.quotient_group(&g.trivial()).unwrap();
        assert_eq!(q.group.table(), g.table());
        assert_eq!(g.quotient_group(&g.all()).unwrap().group.order(), 1);
        assert_eq!(g.quotient_group(&g.set([0, 3])).unwrap_err(), Error::NotNormal);
    }
}
