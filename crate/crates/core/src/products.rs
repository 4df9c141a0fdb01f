//! Splitting elements, non-abelian components, direct factorizations and
//! component-wise filtrations of the center.

use rayon::prelude::*;
use serde::Serialize;

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::group::{prime_factors, Group};

/// Does `x` split from the abelian group `a`, i.e. `A = ⟨x⟩ × K` for some `K`?
///
/// Tested prime by prime: the `p`-part `x^{|A|/|P|}` must have no `y` in the
/// Sylow subgroup `P` with `|x y^p| < |x|`. The identity splits.
pub fn splits_abelian(a: &Group, x: usize) -> Result<bool> {
    if !a.is_abelian() {
        return Err(Error::Invalid("splits_abelian needs an abelian group".into()));
    }
    let n = a.order();
    for p in prime_factors(a.element_order(x)) {
        let sylow: Vec<usize> = (0..n).filter(|&y| prime_factors(a.element_order(y)).iter().all(|&q| q == p)).collect();
        let xp = a.power(x, (n / sylow.len()) as i64);
        let ord = a.element_order(xp);
        if sylow.iter().any(|&y| a.element_order(a.mul(xp, a.power(y, p as i64))) < ord) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does the central element `z` split from `G`?
///
/// `z` splits iff `⟨z⟩ ∩ G' = 1` and `zG'` splits from `G/G'`. Non-central
/// elements never generate a direct factor and give `false`.
pub fn splits_general(g: &Group, z: usize) -> Result<bool> {
    if z == g.identity() {
        return Ok(true);
    }
    if !g.center().contains(z) {
        return Ok(false);
    }
    let derived = g.derived_subgroup();
    if g.generated_by(&[z]).intersection(&derived).len() > 1 {
        return Ok(false);
    }
    let q = g.quotient_group(&derived)?;
    splits_abelian(&q.group, q.coset_of[z])
}

/// A complement `H` with `G = ⟨z⟩ × H`, by scanning normal subgroups.
pub fn find_complement(g: &Group, z: usize) -> Result<Option<ElementSet>> {
    if !g.center().contains(z) {
        return Ok(None);
    }
    let cyc = g.generated_by(&[z]);
    let target = g.order() / cyc.len();
    Ok(g.normal_subgroups()?.into_iter().find(|h| h.len() == target && h.intersection(&cyc).len() == 1))
}

/// Central elements that split from `G`.
pub fn splitting_elements(g: &Group) -> Result<ElementSet> {
    let mut out = ElementSet::empty(g.order());
    for z in g.center().iter() {
        if splits_general(g, z)? {
            out.insert(z);
        }
    }
    Ok(out)
}

/// `Γ_G`: an edge between `g` and `h` iff `[g, h] ≠ 1`.
#[derive(Clone, Debug)]
pub struct NonCommutingGraph {
    pub adjacency: Vec<ElementSet>,
}

pub fn noncommuting_graph(g: &Group) -> NonCommutingGraph {
    let n = g.order();
    let adjacency = (0..n).into_par_iter().map(|x| ElementSet::from_predicate(n, |y| !g.commute(x, y))).collect();
    NonCommutingGraph { adjacency }
}

impl NonCommutingGraph {
    /// Component label of every vertex of `s`; `None` outside `s`.
    /// Components are numbered by their least element.
    pub fn components_on(&self, s: &ElementSet) -> Vec<Option<usize>> {
        let mut label = vec![None; self.adjacency.len()];
        let mut next = 0;
        for start in s.iter() {
            if label[start].is_some() {
                continue;
            }
            label[start] = Some(next);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adjacency[v].intersection(s).iter() {
                    if label[w].is_none() {
                        label[w] = Some(next);
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn components(&self, s: &ElementSet) -> Vec<ElementSet> {
        let labels = self.components_on(s);
        let count = labels.iter().flatten().max().map_or(0, |m| m + 1);
        let n = self.adjacency.len();
        (0..count).map(|c| ElementSet::from_predicate(n, |x| labels[x] == Some(c))).collect()
    }
}

/// The non-abelian components `N_i = ⟨K_i⟩` of `G`.
#[derive(Clone, Debug, Serialize)]
pub struct ComponentDecomposition {
    /// The stabilized set `M`.
    pub m: ElementSet,
    /// `M_1 ⊆ M_2 ⊆ …`.
    pub trace: Vec<ElementSet>,
    /// Connected components `K_i` of `Γ_G[M]`.
    pub components: Vec<ElementSet>,
    /// `N_i = ⟨K_i⟩`.
    pub subgroups: Vec<ElementSet>,
}

pub fn nonabelian_components(g: &Group) -> Result<ComponentDecomposition> {
    if g.is_abelian() {
        return Err(Error::AbelianInput);
    }
    let n = g.order();
    let center = g.center();
    let cent: Vec<usize> = (0..n).map(|x| g.centralizer_of(x).len()).collect();
    let mut m = ElementSet::empty(n);
    let mut generated = g.trivial();
    let mut trace = Vec::new();
    loop {
        let remaining: Vec<usize> = (0..n).filter(|&x| !generated.contains(x) && !center.contains(x)).collect();
        let Some(best) = remaining.iter().map(|&x| cent[x]).max() else { break };
        for &x in &remaining {
            if cent[x] == best {
                m.insert(x);
            }
        }
        generated = g.generated_subgroup(&m);
        trace.push(m.clone());
    }
    let components = noncommuting_graph(g).components(&m);
    let subgroups = components.iter().map(|k| g.generated_subgroup(k)).collect();
    Ok(ComponentDecomposition { m, trace, components, subgroups })
}

/// Product of pairwise commuting subgroups; the empty product is `Z(G)`.
fn product_or_center(g: &Group, parts: &[&ElementSet]) -> ElementSet {
    match parts.split_first() {
        None => g.center(),
        Some((first, rest)) => rest.iter().fold((*first).clone(), |acc, s| g.product_set(&acc, s)),
    }
}

/// `C_x = ∏_{[x, N_i] = 1} N_i` and `N_x = ∏_{[x, N_i] ≠ 1} N_i`.
pub fn cx_nx(g: &Group, dec: &ComponentDecomposition, x: usize) -> (ElementSet, ElementSet) {
    let (commuting, other): (Vec<&ElementSet>, Vec<&ElementSet>) =
        dec.subgroups.iter().partition(|ni| ni.iter().all(|y| g.commute(x, y)));
    (product_or_center(g, &commuting), product_or_center(g, &other))
}

/// Components of `dec` lying in `G_j Z(G)`, per factor of `reference`.
pub fn component_groups(g: &Group, dec: &ComponentDecomposition, reference: &DirectDecomposition) -> Vec<Vec<usize>> {
    let z = g.center();
    reference
        .factors
        .iter()
        .map(|f| {
            let fz = g.product_set(f, &z);
            (0..dec.subgroups.len()).filter(|&i| dec.subgroups[i].is_subset(&fz)).collect()
        })
        .collect()
}

/// Factors of `reference` for which `x` is full: the components not
/// commuting with `x` form exactly the union of their component groups.
/// Central elements are full for the empty collection.
pub fn is_full_with(g: &Group, dec: &ComponentDecomposition, reference: &DirectDecomposition, x: usize) -> Option<Vec<usize>> {
    let moved: Vec<usize> =
        (0..dec.subgroups.len()).filter(|&i| !dec.subgroups[i].iter().all(|y| g.commute(x, y))).collect();
    let groups = component_groups(g, dec, reference);
    let mut chosen = Vec::new();
    let mut covered = Vec::new();
    for (j, ij) in groups.iter().enumerate() {
        if ij.is_empty() {
            continue;
        }
        let hit = ij.iter().filter(|i| moved.contains(i)).count();
        if hit == ij.len() {
            chosen.push(j);
            covered.extend(ij.iter().copied());
        } else if hit > 0 {
            return None;
        }
    }
    covered.sort_unstable();
    (covered == moved).then_some(chosen)
}

pub fn is_full(g: &Group, x: usize) -> Result<Option<Vec<usize>>> {
    let dec = nonabelian_components(g)?;
    let reference = direct_factorization(g)?;
    Ok(is_full_with(g, &dec, &reference, x))
}

/// Is `G = C N` directly induced: `G = C̃ × Ñ` with `C = C̃ Z(G)`, `N = Ñ Z(G)`?
pub fn is_directly_induced(g: &Group, c: &ElementSet, n: &ElementSet) -> Result<bool> {
    let z = g.center();
    let normals = g.normal_subgroups()?;
    let in_c: Vec<&ElementSet> = normals.iter().filter(|s| s.is_subset(c) && g.product_set(s, &z) == *c).collect();
    let in_n: Vec<&ElementSet> = normals.iter().filter(|s| s.is_subset(n) && g.product_set(s, &z) == *n).collect();
    Ok(in_c
        .iter()
        .any(|a| in_n.iter().any(|b| a.len() * b.len() == g.order() && a.intersection(b).len() == 1)))
}

/// Internal direct factors of `G`.
#[derive(Clone, Debug, Serialize)]
pub struct DirectDecomposition {
    /// Sorted by order, then bitset.
    pub factors: Vec<ElementSet>,
    pub indecomposable: Vec<bool>,
    pub abelian: Vec<bool>,
    /// Product of the abelian factors: a maximal abelian direct factor.
    pub abelian_part: ElementSet,
    /// Product of the non-abelian factors.
    pub nonabelian_part: ElementSet,
}

impl DirectDecomposition {
    /// `{G_j Z(G)}` over all factors, sorted.
    pub fn factor_times_center(&self, g: &Group) -> Vec<ElementSet> {
        let z = g.center();
        let mut v: Vec<ElementSet> = self.factors.iter().map(|f| g.product_set(f, &z)).collect();
        v.sort();
        v
    }
}

/// Which complementary pair a factorization step tries first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOrder {
    /// Largest `|N1| ≤ |N2|`, lexicographically least on ties.
    Balanced,
    /// Smallest `|N1|`, lexicographically greatest on ties.
    SmallestFirst,
}

pub fn direct_factorization(g: &Group) -> Result<DirectDecomposition> {
    direct_factorization_with(g, SearchOrder::Balanced)
}

pub fn direct_factorization_with(g: &Group, order: SearchOrder) -> Result<DirectDecomposition> {
    let normals = g.normal_subgroups()?;
    let mut factors = Vec::new();
    split_factor(g.all(), &normals, order, &mut factors);
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let abelian: Vec<bool> = factors.iter().map(|f| crate::invariants::is_abelian_set(g, f)).collect();
    let mut abelian_part = g.trivial();
    let mut nonabelian_part = g.trivial();
    for (f, &ab) in factors.iter().zip(&abelian) {
        if ab {
            abelian_part = g.product_set(&abelian_part, f);
        } else {
            nonabelian_part = g.product_set(&nonabelian_part, f);
        }
    }
    let indecomposable = vec![true; factors.len()];
    Ok(DirectDecomposition { factors, indecomposable, abelian, abelian_part, nonabelian_part })
}

/// Splits `f` (normal in `G`, and a direct factor) into indecomposables.
/// Normal subgroups of `f` are exactly the normal subgroups of `G` inside it.
fn split_factor(f: ElementSet, normals: &[ElementSet], order: SearchOrder, out: &mut Vec<ElementSet>) {
    let size = f.len();
    let inside: Vec<&ElementSet> = normals.iter().filter(|s| s.len() > 1 && s.len() < size && s.is_subset(&f)).collect();
    let mut firsts: Vec<&ElementSet> = inside.iter().filter(|s| s.len() * s.len() <= size).copied().collect();
    match order {
        SearchOrder::Balanced => firsts.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b))),
        SearchOrder::SmallestFirst => firsts.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a))),
    }
    for a in firsts {
        let partner = inside.iter().filter(|b| b.len() * a.len() == size && b.intersection(a).len() == 1);
        let b = match order {
            SearchOrder::Balanced => partner.min(),
            SearchOrder::SmallestFirst => partner.max(),
        };
        if let Some(b) = b {
            let b = (*b).clone();
            split_factor(a.clone(), normals, order, out);
            split_factor(b, normals, order, out);
            return;
        }
    }
    out.push(f);
}

/// Which side of `G = L × R` a filtration step ascends in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Equal,
    Left,
    Right,
}

/// Which construction produced a filtration term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StepKind {
    V,
    W,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationStep {
    pub prime: usize,
    pub m: u32,
    pub j: u32,
    pub kind: StepKind,
}

/// `{1} = U_0 ≤ … ≤ U_r = Z(G)` ascending one side at a time.
#[derive(Clone, Debug, Serialize)]
pub struct Filtration {
    pub terms: Vec<ElementSet>,
    /// `tags[i]` describes `terms[i] ≤ terms[i + 1]`.
    pub tags: Vec<Side>,
    /// `trace[i]` produced `terms[i + 1]`.
    pub trace: Vec<FiltrationStep>,
    pub left: ElementSet,
    pub right: ElementSet,
}

impl Filtration {
    /// Terms with repeats removed.
    pub fn distinct_terms(&self) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = Vec::new();
        for t in &self.terms {
            if v.last() != Some(t) {
                v.push(t.clone());
            }
        }
        v
    }
}

/// Filtration of `Z(G)` for `G = H × A` with `A` the maximal abelian factor.
///
/// Primes increase, then `m` increases. For each `(p, m)` with `N` maximal
/// such that `p^N` divides `|Z(G)|` and `Z_p` the `p`-elements of `Z(G)`:
///
/// * `V_0 = {z ∈ Z_p : |z| < p^m}`
/// * `V_j = ⟨z^{p^{N−j}} : |z^{p^{N−j}}| ≤ p^m⟩ V_{j−1}`
/// * `W_j = ⟨z^{p^{N−j}} : |z| ≤ p^{N−j+m}, z does not split from G⟩ V_{j−1}`
///
/// and the chain grows by `U W_1, U V_1, …, U W_N, U V_N`.
pub fn build_filtration(g: &Group, dec: &DirectDecomposition) -> Result<Filtration> {
    let left = dec.nonabelian_part.clone();
    let right = dec.abelian_part.clone();
    let z = g.center();
    let splits = splitting_elements(g)?;
    let mut u = g.trivial();
    let mut terms = vec![u.clone()];
    let mut tags = Vec::new();
    let mut trace = Vec::new();
    let zn = z.len();
    for p in prime_factors(zn) {
        let mut big_n = 0u32;
        while zn.is_multiple_of(p.pow(big_n + 1)) {
            big_n += 1;
        }
        let zp: Vec<usize> = z.iter().filter(|&x| prime_factors(g.element_order(x)).iter().all(|&q| q == p)).collect();
        let max_m = zp.iter().map(|&x| exponent_of(g.element_order(x), p)).max().unwrap_or(0);
        for m in 1..=max_m {
            let pm = p.pow(m);
            let mut v_prev = g.generated_by(&zp.iter().copied().filter(|&x| g.element_order(x) < pm).collect::<Vec<_>>());
            for j in 1..=big_n {
                let e = p.pow(big_n - j) as i64;
                let w_gens: Vec<usize> = zp
                    .iter()
                    .filter(|&&x| g.element_order(x) <= p.pow(big_n - j + m) && !splits.contains(x))
                    .map(|&x| g.power(x, e))
                    .collect();
                let v_gens: Vec<usize> =
                    zp.iter().map(|&x| g.power(x, e)).filter(|&y| g.element_order(y) <= pm).collect();
                let w = g.product_set(&g.generated_by(&w_gens), &v_prev);
                let v = g.product_set(&g.generated_by(&v_gens), &v_prev);
                for (set, kind) in [(w, StepKind::W), (v.clone(), StepKind::V)] {
                    let next = g.product_set(&u, &set);
                    let tag = side(g, terms.last().unwrap(), &next, &left, &right)
                        .ok_or(Error::DecompositionMismatch { step: tags.len() })?;
                    tags.push(tag);
                    trace.push(FiltrationStep { prime: p, m, j, kind });
                    terms.push(next);
                }
                v_prev = v;
            }
            u = terms.last().unwrap().clone();
        }
    }
    if terms.last() != Some(&z) {
        return Err(Error::Invalid("filtration does not reach the center".into()));
    }
    Ok(Filtration { terms, tags, trace, left, right })
}

fn exponent_of(mut n: usize, p: usize) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

fn side(g: &Group, prev: &ElementSet, next: &ElementSet, left: &ElementSet, right: &ElementSet) -> Option<Side> {
    if !prev.is_subset(next) {
        return None;
    }
    if prev == next {
        Some(Side::Equal)
    } else if next.is_subset(&g.product_set(prev, left)) {
        Some(Side::Left)
    } else if next.is_subset(&g.product_set(prev, right)) {
        Some(Side::Right)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::constructors::*;
    use crate::iso::is_isomorphic;

    fn factor_groups(g: &Group, d: &DirectDecomposition) -> Vec<Group> {
        d.factors.iter().map(|f| g.as_group(f).unwrap().group).collect()
    }

    fn same_types(a: &[Group], b: &[Group]) -> bool {
        let mut used = vec![false; b.len()];
        a.len() == b.len()
            && a.iter().all(|x| {
                let hit = (0..b.len()).find(|&i| !used[i] && b[i].order() == x.order() && is_isomorphic(x, &b[i]).is_some());
                hit.map(|i| used[i] = true).is_some()
            })
    }

    #[test]
    fn abelian_splitting() {
        let c2c4 = abelian(&[2, 4]).unwrap();
        // Element (i, j) has index 4i + j.
        assert!(splits_abelian(&c2c4, 1).unwrap());
        assert!(!splits_abelian(&c2c4, 2).unwrap());
        assert!(splits_abelian(&c2c4, 4).unwrap());
        assert!(splits_abelian(&c2c4, 6).unwrap());
        assert!(splits_abelian(&cyclic(12), 1).unwrap());
        assert!(splits_abelian(&cyclic(12), 0).unwrap());
        assert!(!splits_abelian(&cyclic(12), 2).unwrap());
        assert!(splits_abelian(&cyclic(12), 4).unwrap());
        assert!(splits_abelian(&dihedral(3).unwrap(), 0).is_err());
    }

    #[test]
    fn general_splitting_examples() {
        let d4 = dihedral(4).unwrap();
        assert!(splits_general(&d4, 0).unwrap());
        assert!(!splits_general(&d4, 2).unwrap());
        assert!(!splits_general(&d4, 1).unwrap());
        let dp = direct_product(&d4, &cyclic(3));
        assert!(splits_general(&dp.group, dp.pair(0, 1)).unwrap());
        let c = find_complement(&dp.group, dp.pair(0, 1)).unwrap().unwrap();
        assert_eq!(c, dp.left_factor());
    }

    #[test]
    fn splitting_matches_complement_search() {
        for g in catalog::standard_catalog(32) {
            for z in g.center().iter() {
                let fast = splits_general(&g, z).unwrap();
                let slow = find_complement(&g, z).unwrap().is_some();
                assert_eq!(fast, slow, "{g:?} z={z}");
            }
        }
    }

    #[test]
    fn splitting_passes_to_subgroups() {
        for g in catalog::standard_catalog(24) {
            let subs = g.all_subgroups().unwrap();
            for x in splitting_elements(&g).unwrap().iter() {
                for u in subs.iter().filter(|u| u.contains(x)) {
                    let sub = g.as_group(u).unwrap();
                    let xi = sub.embedding.iter().position(|&e| e == x).unwrap();
                    assert!(find_complement(&sub.group, xi).unwrap().is_some(), "{g:?} x={x}");
                }
            }
        }
    }

    #[test]
    fn componentwise_splitting() {
        let pairs = [(dihedral(4).unwrap(), cyclic(4)), (quaternion8(), abelian(&[2, 4]).unwrap()), (cyclic(4), cyclic(2))];
        for (a, b) in pairs {
            let dp = direct_product(&a, &b);
            let g = &dp.group;
            for z in g.center().iter() {
                let (z1, z2) = (dp.left(z), dp.right(z));
                let ord = g.element_order(z);
                let expect = (a.element_order(z1) == ord && splits_general(&a, z1).unwrap())
                    || (b.element_order(z2) == ord && splits_general(&b, z2).unwrap());
                if prime_factors(ord).len() <= 1 {
                    assert_eq!(splits_general(g, z).unwrap(), expect, "z=({z1},{z2})");
                }
            }
        }
    }

    #[test]
    fn noncommuting_graph_components() {
        let s3 = symmetric(3).unwrap();
        let gr = noncommuting_graph(&s3);
        let noncentral = s3.center().complement();
        assert_eq!(gr.components(&noncentral).len(), 1);
        assert_eq!(gr.components(&noncentral)[0].len(), 5);
        assert!((0..6).all(|x| !gr.adjacency[x].contains(x)));
        let c6 = cyclic(6);
        assert!(noncommuting_graph(&c6).adjacency.iter().all(ElementSet::is_empty));
        let dp = direct_product(&s3, &s3);
        let g = &dp.group;
        let pure = ElementSet::from_predicate(g.order(), |x| (dp.left(x) == 0) != (dp.right(x) == 0));
        assert_eq!(noncommuting_graph(g).components(&pure).len(), 2);
    }

    #[test]
    fn components_of_examples() {
        let s3 = symmetric(3).unwrap();
        let dec = nonabelian_components(&s3).unwrap();
        assert_eq!(dec.subgroups, vec![s3.all()]);
        assert!(matches!(nonabelian_components(&cyclic(4)), Err(Error::AbelianInput)));
        let dp = direct_product(&s3, &s3);
        let dec = nonabelian_components(&dp.group).unwrap();
        let mut got = dec.subgroups.clone();
        got.sort();
        let mut want = vec![dp.left_factor(), dp.right_factor()];
        want.sort();
        assert_eq!(got, want);
    }

    fn check_components(g: &Group) {
        let dec = nonabelian_components(g).unwrap();
        let z = g.center();
        let refs: Vec<&ElementSet> = dec.subgroups.iter().collect();
        assert_eq!(product_or_center(g, &refs), g.all());
        for (i, ni) in dec.subgroups.iter().enumerate() {
            assert!(z.is_subset(ni) && !crate::invariants::is_abelian_set(g, ni));
            for nj in &dec.subgroups[i + 1..] {
                assert!(ni.iter().all(|x| nj.iter().all(|y| g.commute(x, y))));
            }
        }
        for order in [SearchOrder::Balanced, SearchOrder::SmallestFirst] {
            let fact = direct_factorization_with(g, order).unwrap();
            let groups = component_groups(g, &dec, &fact);
            let mut seen = vec![0; dec.subgroups.len()];
            for (j, ij) in groups.iter().enumerate() {
                for &i in ij {
                    seen[i] += 1;
                }
                let parts: Vec<&ElementSet> = ij.iter().map(|&i| &dec.subgroups[i]).collect();
                assert_eq!(product_or_center(g, &parts), g.product_set(&fact.factors[j], &z), "{g:?} factor {j}");
            }
            assert!(seen.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn components_respect_direct_factors() {
        let s3 = symmetric(3).unwrap();
        let d4 = dihedral(4).unwrap();
        let q8 = quaternion8();
        for g in [
            direct_product(&d4, &q8).group,
            direct_product(&s3, &s3).group,
            direct_product(&d4, &cyclic(3)).group,
            alternating(4).unwrap(),
            central_product(&d4, &d4, &d4.center(), &d4.center(), &[(0, 0), (2, 2)]).unwrap(),
        ] {
            check_components(&g);
        }
        for g in catalog::standard_catalog(32).into_iter().filter(|g| !g.is_abelian()) {
            check_components(&g);
        }
    }

    #[test]
    fn full_elements() {
        let s3 = symmetric(3).unwrap();
        let dp = direct_product(&s3, &s3);
        let g = &dp.group;
        let dec = nonabelian_components(g).unwrap();
        let fact = direct_factorization(g).unwrap();
        let s = 3;
        let x = dp.pair(s, 0);
        let (c, n) = cx_nx(g, &dec, x);
        assert_eq!(n, dp.left_factor());
        assert_eq!(c, dp.right_factor());
        let left_index = fact.factors.iter().position(|f| *f == dp.left_factor()).unwrap();
        assert_eq!(is_full_with(g, &dec, &fact, x), Some(vec![left_index]));
        let both = dp.pair(s, 1);
        assert_eq!(is_full_with(g, &dec, &fact, both).map(|v| v.len()), Some(2));
        assert_eq!(is_full_with(g, &dec, &fact, 0), Some(vec![]));
        assert_eq!(cx_nx(g, &dec, 0), (g.all(), g.center()));
        assert!(is_directly_induced(g, &c, &n).unwrap());
    }

    #[test]
    fn full_iff_directly_induced() {
        let d4 = dihedral(4).unwrap();
        for g in [
            direct_product(&d4, &quaternion8()).group,
            direct_product(&symmetric(3).unwrap(), &cyclic(4)).group,
            central_product(&d4, &d4, &d4.center(), &d4.center(), &[(0, 0), (2, 2)]).unwrap(),
            direct_product(&d4, &d4).group,
        ] {
            let dec = nonabelian_components(&g).unwrap();
            let fact = direct_factorization(&g).unwrap();
            for x in 0..g.order() {
                let (c, n) = cx_nx(&g, &dec, x);
                assert_eq!(g.product_set(&c, &n), g.all());
                let full = is_full_with(&g, &dec, &fact, x).is_some();
                assert_eq!(full, is_directly_induced(&g, &c, &n).unwrap(), "{g:?} x={x}");
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let f = direct_factorization(&cyclic(6)).unwrap();
        assert_eq!(f.factors.iter().map(ElementSet::len).collect::<Vec<_>>(), vec![2, 3]);
        let f = direct_factorization(&symmetric(4).unwrap()).unwrap();
        assert_eq!(f.factors.len(), 1);
        let d4 = dihedral(4).unwrap();
        let dp = direct_product(&d4, &cyclic(3));
        let f = direct_factorization(&dp.group).unwrap();
        assert_eq!(f.factors.len(), 2);
        assert_eq!(f.abelian_part, dp.right_factor());
        assert_eq!(f.nonabelian_part, dp.left_factor());
        let f = direct_factorization(&abelian(&[2, 4, 3]).unwrap()).unwrap();
        assert_eq!(f.factors.iter().map(ElementSet::len).collect::<Vec<_>>(), vec![2, 3, 4]);
        assert_eq!(f.abelian_part.len(), 24);
    }

    #[test]
    fn factorization_is_search_order_independent() {
        for g in catalog::standard_catalog(64) {
            let a = direct_factorization_with(&g, SearchOrder::Balanced).unwrap();
            let b = direct_factorization_with(&g, SearchOrder::SmallestFirst).unwrap();
            let prod = a.factors.iter().map(ElementSet::len).product::<usize>();
            assert_eq!(prod, g.order());
            assert!(same_types(&factor_groups(&g, &a), &factor_groups(&g, &b)), "{g:?}");
            assert_eq!(a.factor_times_center(&g), b.factor_times_center(&g), "{g:?}");
        }
    }

    fn check_filtration(g: &Group) -> Filtration {
        let dec = direct_factorization(g).unwrap();
        let f = build_filtration(g, &dec).unwrap();
        assert_eq!(f.terms.last().unwrap(), &g.center());
        for (i, w) in f.terms.windows(2).enumerate() {
            assert!(w[0].is_subset(&w[1]));
            let ok = match f.tags[i] {
                Side::Equal => w[0] == w[1],
                Side::Left => w[1].is_subset(&g.product_set(&w[0], &f.left)),
                Side::Right => w[1].is_subset(&g.product_set(&w[0], &f.right)),
            };
            assert!(ok);
            assert!(g.is_subgroup(&w[1]));
        }
        f
    }

    #[test]
    fn filtration_examples() {
        let c12 = cyclic(12);
        let f = check_filtration(&c12);
        assert!(f.tags.iter().all(|t| *t != Side::Left));
        let d4 = dihedral(4).unwrap();
        let f = check_filtration(&direct_product(&d4, &cyclic(2)).group);
        assert!(f.tags.contains(&Side::Left) && f.tags.contains(&Side::Right));
        check_filtration(&direct_product(&quaternion8(), &cyclic(4)).group);
        check_filtration(&direct_product(&d4, &abelian(&[2, 4]).unwrap()).group);
        for g in catalog::standard_catalog(64) {
            check_filtration(&g);
        }
    }
}
