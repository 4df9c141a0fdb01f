//! Exact oracles for series, radicals, socles and composition factors.
//!
//! Everything here works directly on subgroup lattices and closures; nothing
//! depends on the refinement engine.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::catalog;
use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::group::{prime_factors, Group};

/// Order, element-order spectrum, abelianization order and catalog name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GroupLabel {
    pub order: usize,
    pub abelian: bool,
    /// `(element order, count)` pairs, increasing.
    pub spectrum: Vec<(usize, usize)>,
    pub abelianization: usize,
    pub name: Option<String>,
}

impl GroupLabel {
    pub fn of(g: &Group) -> GroupLabel {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for x in 0..g.order() {
            *counts.entry(g.element_order(x)).or_default() += 1;
        }
        let mut spectrum: Vec<(usize, usize)> = counts.into_iter().collect();
        spectrum.sort_unstable();
        let name = if crate::constructors::is_prime(g.order()) {
            Some(format!("C{}", g.order()))
        } else {
            catalog::identify(g)
        };
        GroupLabel {
            order: g.order(),
            abelian: g.is_abelian(),
            spectrum,
            abelianization: g.order() / g.derived_subgroup().len(),
            name,
        }
    }

    /// Catalog name, or a spectrum description when the catalog has no match.
    pub fn key(&self) -> String {
        match &self.name {
            Some(n) => n.clone(),
            None => {
                let spec: Vec<String> = self.spectrum.iter().map(|(o, c)| format!("{o}^{c}")).collect();
                format!("G{}[{};ab{}]", self.order, spec.join(","), self.abelianization)
            }
        }
    }
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key())
    }
}

/// A series of subgroups with labels of consecutive sections.
#[derive(Clone, Debug, Serialize)]
pub struct SeriesReport {
    pub terms: Vec<ElementSet>,
    /// `labels[i]` describes the section between `terms[i]` and `terms[i + 1]`
    /// (larger over smaller).
    pub quotient_labels: Vec<GroupLabel>,
    /// Index of the last term; the recurrence yields it again.
    pub stabilized_at: usize,
}

/// Label of `upper / lower` for normal `lower ≤ upper`.
pub fn section_label(g: &Group, upper: &ElementSet, lower: &ElementSet) -> Result<GroupLabel> {
    let sub = g.as_group(upper)?;
    let q = sub.group.quotient_group(&sub.restrict(lower))?;
    Ok(GroupLabel::of(&q.group))
}

fn series(g: &Group, start: ElementSet, next: impl Fn(&ElementSet) -> ElementSet) -> Result<SeriesReport> {
    let mut terms = vec![start];
    loop {
        let t = next(terms.last().unwrap());
        if &t == terms.last().unwrap() {
            break;
        }
        terms.push(t);
    }
    let mut quotient_labels = Vec::new();
    for w in terms.windows(2) {
        let (big, small) = if w[1].is_subset(&w[0]) { (&w[0], &w[1]) } else { (&w[1], &w[0]) };
        quotient_labels.push(section_label(g, big, small)?);
    }
    Ok(SeriesReport { stabilized_at: terms.len() - 1, terms, quotient_labels })
}

/// `G = G_(0) ≥ G_(1) ≥ …` with `G_(i+1) = [G_(i), G_(i)]`.
pub fn derived_series(g: &Group) -> Result<SeriesReport> {
    series(g, g.all(), |h| g.commutator_subgroup(h, h))
}

/// `G = Z_1 ≥ Z_2 ≥ …` with `Z_{i+1} = [Z_i, G]`.
pub fn lower_central(g: &Group) -> Result<SeriesReport> {
    let all = g.all();
    series(g, g.all(), |h| g.commutator_subgroup(h, &all))
}

/// `1 = Z^0 ≤ Z^1 ≤ …` with `Z^{i+1}/Z^i = Z(G/Z^i)`.
pub fn upper_central(g: &Group) -> Result<SeriesReport> {
    series(g, g.trivial(), |h| {
        let q = g.quotient_group(h).expect("upper central terms are normal");
        g.preimage(&q, &q.group.center())
    })
}

/// Length of the lower central series down to `{1}`, if it gets there.
pub fn nilpotency_class(g: &Group) -> Result<Option<usize>> {
    let s = lower_central(g)?;
    Ok((s.terms.last().unwrap().len() == 1).then_some(s.stabilized_at))
}

pub fn is_solvable(g: &Group, h: &ElementSet) -> bool {
    let mut cur = h.clone();
    loop {
        let next = g.commutator_subgroup(&cur, &cur);
        if next.len() == 1 {
            return true;
        }
        if next == cur {
            return false;
        }
        cur = next;
    }
}

pub fn is_nilpotent(g: &Group, h: &ElementSet) -> bool {
    let mut cur = h.clone();
    loop {
        let next = g.commutator_subgroup(&cur, h);
        if next.len() == 1 {
            return true;
        }
        if next == cur {
            return false;
        }
        cur = next;
    }
}

pub fn is_abelian_set(g: &Group, h: &ElementSet) -> bool {
    let v = h.to_vec();
    v.iter().all(|&a| v.iter().all(|&b| g.commute(a, b)))
}

/// Every prime dividing `n` lies in `pi`.
pub fn is_pi_number(n: usize, pi: &[usize]) -> bool {
    prime_factors(n).iter().all(|p| pi.contains(p))
}

/// `{g | ⟨g, h⟩ is solvable for every h}`.
pub fn solvable_radical(g: &Group) -> ElementSet {
    let n = g.order();
    let mut cache: HashMap<ElementSet, bool> = HashMap::new();
    ElementSet::from_predicate(n, |x| {
        (0..n).all(|y| {
            let h = g.generated_by(&[x, y]);
            *cache.entry(h).or_insert_with_key(|h| is_solvable(g, h))
        })
    })
}

/// Elements whose normal closure satisfies `pred`.
pub fn closure_radical(g: &Group, pred: impl Fn(&ElementSet) -> bool) -> ElementSet {
    let mut cache: HashMap<ElementSet, bool> = HashMap::new();
    ElementSet::from_predicate(g.order(), |x| {
        let c = g.normal_closure(&g.set([x]));
        *cache.entry(c).or_insert_with_key(|c| pred(c))
    })
}

/// `O_π(G)`: elements whose normal closure is a π-group.
pub fn pi_radical(g: &Group, pi: &[usize]) -> ElementSet {
    closure_radical(g, |c| is_pi_number(c.len(), pi))
}

/// `Fit(G)`: elements whose normal closure is nilpotent.
pub fn fitting(g: &Group) -> ElementSet {
    closure_radical(g, |c| is_nilpotent(g, c))
}

/// Elements with abelian normal closure, and the largest normal abelian
/// subgroup when there is a unique one.
///
/// Normal abelian subgroups are not closed under products (three cyclic
/// subgroups of order 4 in `D4` generate `D4`), so the element set need not
/// be a subgroup.
#[derive(Clone, Debug, Serialize)]
pub struct AbelianRadical {
    pub elements: ElementSet,
    pub largest: Option<ElementSet>,
}

pub fn abelian_radical(g: &Group) -> Result<AbelianRadical> {
    let elements = closure_radical(g, |c| is_abelian_set(g, c));
    let largest = unique_maximal(&g.normal_subgroups()?, |s| is_abelian_set(g, s));
    Ok(AbelianRadical { elements, largest })
}

/// The inclusion-maximal member satisfying `pred`, if unique.
pub fn unique_maximal(subgroups: &[ElementSet], pred: impl Fn(&ElementSet) -> bool) -> Option<ElementSet> {
    let good: Vec<&ElementSet> = subgroups.iter().filter(|s| pred(s)).collect();
    let maximal: Vec<&ElementSet> =
        good.iter().filter(|s| !good.iter().any(|t| t.len() > s.len() && s.is_subset(t))).copied().collect();
    (maximal.len() == 1).then(|| maximal[0].clone())
}

/// Maximal π-subgroups, by inclusion.
pub fn maximal_pi_subgroups(g: &Group, pi: &[usize]) -> Result<Vec<ElementSet>> {
    let subs = g.subgroups_where(
        |x| is_pi_number(g.element_order(x), pi),
        |h| is_pi_number(h.len(), pi),
        crate::group::DEFAULT_SUBGROUP_CAP,
    )?;
    Ok(subs.iter().filter(|s| !subs.iter().any(|t| t.len() > s.len() && s.is_subset(t))).cloned().collect())
}

/// Intersection of all maximal π-subgroups containing the π-element `x`.
pub fn max_pi_intersections(g: &Group, pi: &[usize], x: usize) -> Result<ElementSet> {
    if !is_pi_number(g.element_order(x), pi) {
        return Err(Error::Invalid(format!("element {x} is not a π-element")));
    }
    let mut out = g.all();
    for m in maximal_pi_subgroups(g, pi)? {
        if m.contains(x) {
            out = out.intersection(&m);
        }
    }
    Ok(out)
}

pub fn minimal_normal_subgroups(g: &Group) -> Result<Vec<ElementSet>> {
    let normals = g.normal_subgroups()?;
    let nontrivial: Vec<&ElementSet> = normals.iter().filter(|s| s.len() > 1).collect();
    Ok(nontrivial
        .iter()
        .filter(|s| !nontrivial.iter().any(|t| t.len() < s.len() && t.is_subset(s)))
        .map(|s| (*s).clone())
        .collect())
}

/// The socle with a sub-list of minimal normal subgroups whose internal
/// direct product it is.
#[derive(Clone, Debug, Serialize)]
pub struct SocleReport {
    pub socle: ElementSet,
    pub minimal_normals: Vec<ElementSet>,
    pub direct_basis: Vec<ElementSet>,
}

pub fn socle(g: &Group) -> Result<SocleReport> {
    let minimal_normals = minimal_normal_subgroups(g)?;
    let mut product = g.trivial();
    let mut direct_basis = Vec::new();
    for m in &minimal_normals {
        if m.intersection(&product).len() == 1 {
            product = g.product_set(&product, m);
            direct_basis.push(m.clone());
        }
    }
    let mut socle = g.trivial();
    for m in &minimal_normals {
        socle = g.product_set(&socle, m);
    }
    debug_assert_eq!(socle, product);
    Ok(SocleReport { socle, minimal_normals, direct_basis })
}

/// Non-identity elements whose normal closure is a minimal normal subgroup.
pub fn minimal_normal_elements(g: &Group) -> Result<ElementSet> {
    let mins = minimal_normal_subgroups(g)?;
    Ok(closure_radical(g, |c| mins.contains(c)))
}

/// How the next term of a composition series is picked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ChoiceRule {
    /// Largest maximal normal subgroup, lexicographically least bitset on ties.
    Largest,
    /// Smallest maximal normal subgroup, lexicographically greatest on ties.
    Smallest,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompositionReport {
    pub factors: Vec<GroupLabel>,
    /// `G = series[0] > series[1] > … > {1}`, as subsets of `G`.
    pub series: Vec<ElementSet>,
}

impl CompositionReport {
    /// Sorted factor keys.
    pub fn multiset(&self) -> Vec<String> {
        let mut v: Vec<String> = self.factors.iter().map(GroupLabel::key).collect();
        v.sort();
        v
    }
}

pub fn composition_factors(g: &Group) -> Result<CompositionReport> {
    composition_factors_with(g, ChoiceRule::Largest)
}

pub fn composition_factors_with(g: &Group, rule: ChoiceRule) -> Result<CompositionReport> {
    let mut series = vec![g.all()];
    let mut factors = Vec::new();
    loop {
        let cur = series.last().unwrap().clone();
        if cur.len() == 1 {
            break;
        }
        let sub = g.as_group(&cur)?;
        let normals = sub.group.normal_subgroups()?;
        let proper: Vec<&ElementSet> = normals.iter().filter(|s| s.len() < cur.len()).collect();
        let maximal: Vec<&ElementSet> =
            proper.iter().filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t))).copied().collect();
        let pick = match rule {
            ChoiceRule::Largest => maximal.iter().max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a))),
            ChoiceRule::Smallest => maximal.iter().min_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a))),
        }
        .expect("a nontrivial group has a maximal normal subgroup");
        let q = sub.group.quotient_group(pick)?;
        if q.group.normal_subgroups()?.len() != 2 {
            return Err(Error::Invalid("composition factor is not simple".into()));
        }
        factors.push(GroupLabel::of(&q.group));
        series.push(sub.lift(g.order(), pick));
    }
    Ok(CompositionReport { factors, series })
}

#[derive(Clone, Debug, Serialize)]
pub struct SpecialFlags {
    pub simple: bool,
    pub characteristically_simple: bool,
    /// Socle is non-abelian simple with trivial centralizer.
    pub almost_simple_candidate: bool,
    /// Simple normal subgroups whose internal direct product is `G`.
    pub product_of_simples: Option<Vec<ElementSet>>,
}

pub fn classify_special(g: &Group) -> Result<SpecialFlags> {
    let normals = g.normal_subgroups()?;
    let simple = normals.len() == 2;
    let soc = socle(g)?;
    let simple_as_group = |s: &ElementSet| -> Result<bool> { Ok(g.as_group(s)?.group.normal_subgroups()?.len() == 2) };
    let mut all_simple = true;
    for m in &soc.minimal_normals {
        all_simple &= simple_as_group(m)?;
    }
    let whole = soc.socle.len() == g.order();
    let characteristically_simple = g.order() > 1
        && whole
        && all_simple
        && soc.minimal_normals.windows(2).all(|w| {
            let a = g.as_group(&w[0]).expect("subgroup");
            let b = g.as_group(&w[1]).expect("subgroup");
            crate::iso::is_isomorphic(&a.group, &b.group).is_some()
        });
    let almost_simple_candidate = soc.minimal_normals.len() == 1
        && simple_as_group(&soc.socle)?
        && !is_abelian_set(g, &soc.socle)
        && g.centralizer(&soc.socle).len() == 1;
    let product_of_simples = (whole && all_simple).then(|| soc.direct_basis.clone());
    Ok(SpecialFlags { simple, characteristically_simple, almost_simple_candidate, product_of_simples })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    fn s4() -> Group {
        symmetric(4).unwrap()
    }

    /// Largest normal subgroup with the property, by scanning.
    fn scan(g: &Group, pred: impl Fn(&ElementSet) -> bool) -> ElementSet {
        let normals = g.normal_subgroups().unwrap();
        normals.into_iter().filter(|s| pred(s)).max_by_key(|s| s.len()).unwrap()
    }

    #[test]
    fn s4_series() {
        let g = s4();
        let d = derived_series(&g).unwrap();
        let sizes: Vec<usize> = d.terms.iter().map(ElementSet::len).collect();
        assert_eq!(sizes, vec![24, 12, 4, 1]);
        let names: Vec<String> = d.quotient_labels.iter().map(GroupLabel::key).collect();
        assert_eq!(names, vec!["C2", "C3", "C2^2"]);
        assert_eq!(nilpotency_class(&g).unwrap(), None);
    }

    #[test]
    fn d4_series() {
        let g = dihedral(4).unwrap();
        let lower: Vec<usize> = lower_central(&g).unwrap().terms.iter().map(ElementSet::len).collect();
        assert_eq!(lower, vec![8, 2, 1]);
        let upper: Vec<usize> = upper_central(&g).unwrap().terms.iter().map(ElementSet::len).collect();
        assert_eq!(upper, vec![1, 2, 8]);
        assert_eq!(nilpotency_class(&g).unwrap(), Some(2));
        assert_eq!(derived_series(&cyclic(6)).unwrap().terms.len(), 2);
        assert_eq!(nilpotency_class(&cyclic(1)).unwrap(), Some(0));
    }

    #[test]
    fn radicals_of_s4() {
        let g = s4();
        let v4 = scan(&g, |s| s.len() == 4);
        assert_eq!(pi_radical(&g, &[2]), v4);
        assert_eq!(pi_radical(&g, &[3]), g.trivial());
        assert_eq!(pi_radical(&g, &[2, 3]), g.all());
        assert_eq!(fitting(&g), v4);
        assert_eq!(solvable_radical(&g), g.all());
        let a = abelian_radical(&g).unwrap();
        assert_eq!(a.elements, v4);
        assert_eq!(a.largest, Some(v4));
    }

    #[test]
    fn radicals_of_perfect_groups() {
        let a5 = alternating(5).unwrap();
        assert_eq!(solvable_radical(&a5), a5.trivial());
        let s5 = symmetric(5).unwrap();
        assert_eq!(solvable_radical(&s5), s5.trivial());
        let g = direct_product(&a5, &cyclic(2)).group;
        assert_eq!(solvable_radical(&g), g.center());
    }

    #[test]
    fn abelian_radical_of_d4_is_not_a_subgroup() {
        let g = dihedral(4).unwrap();
        let a = abelian_radical(&g).unwrap();
        assert_eq!(a.elements, g.all());
        assert_eq!(a.largest, None);
        let q8 = quaternion8();
        let a = abelian_radical(&q8).unwrap();
        assert_eq!(a.elements, q8.all());
        assert!(a.largest.is_none());
        let s3 = symmetric(3).unwrap();
        let a = abelian_radical(&s3).unwrap();
        assert_eq!(a.elements.len(), 3);
        assert_eq!(a.largest.map(|s| s.len()), Some(3));
    }

    #[test]
    fn radicals_match_normal_subgroup_scans() {
        for g in catalog::standard_catalog(40) {
            let solv = solvable_radical(&g);
            assert_eq!(solv, scan(&g, |s| is_solvable(&g, s)), "{g:?}");
            for p in g.prime_divisors() {
                let o = pi_radical(&g, &[p]);
                assert_eq!(o, scan(&g, |s| is_pi_number(s.len(), &[p])), "{g:?}");
                let mut meet = g.all();
                for m in maximal_pi_subgroups(&g, &[p]).unwrap() {
                    meet = meet.intersection(&m);
                }
                assert_eq!(meet, o, "{g:?} p={p}");
            }
            let fit = fitting(&g);
            assert_eq!(fit, scan(&g, |s| is_nilpotent(&g, s)), "{g:?}");
            let mut prod = g.trivial();
            for p in g.prime_divisors() {
                prod = g.product_set(&prod, &pi_radical(&g, &[p]));
            }
            assert_eq!(prod, fit, "{g:?}");
            let ab = abelian_radical(&g).unwrap();
            if let Some(l) = &ab.largest {
                if g.is_subgroup(&ab.elements) {
                    assert_eq!(l, &ab.elements, "{g:?}");
                }
            }
        }
    }

    #[test]
    fn pi_intersections_in_s4() {
        let g = s4();
        let sylows = maximal_pi_subgroups(&g, &[2]).unwrap();
        assert_eq!(sylows.len(), 3);
        assert!(sylows.iter().all(|s| s.len() == 8));
        let t = (0..24).find(|&x| g.element_order(x) == 2 && !pi_radical(&g, &[2]).contains(x)).unwrap();
        let meet = max_pi_intersections(&g, &[2], t).unwrap();
        let containing: Vec<&ElementSet> = sylows.iter().filter(|s| s.contains(t)).collect();
        assert_eq!(containing.len(), 1);
        assert_eq!(&meet, containing[0]);
        assert!(max_pi_intersections(&g, &[2], (0..24).find(|&x| g.element_order(x) == 3).unwrap()).is_err());
        let q8 = quaternion8();
        assert_eq!(max_pi_intersections(&q8, &[2], 3).unwrap(), q8.all());
    }

    #[test]
    fn socles() {
        let a5 = alternating(5).unwrap();
        assert_eq!(socle(&a5).unwrap().socle, a5.all());
        let g = s4();
        let s = socle(&g).unwrap();
        assert_eq!(s.minimal_normals.len(), 1);
        assert_eq!(s.socle.len(), 4);
        let c6 = cyclic(6);
        let s = socle(&c6).unwrap();
        assert_eq!(s.minimal_normals.iter().map(ElementSet::len).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(s.socle, c6.all());
        let e = elementary_abelian(2, 3).unwrap();
        let s = socle(&e).unwrap();
        assert_eq!(s.minimal_normals.len(), 7);
        assert_eq!(s.direct_basis.len(), 3);
        assert_eq!(minimal_normal_elements(&g).unwrap().len(), 3);
    }

    #[test]
    fn composition_examples() {
        assert_eq!(composition_factors(&cyclic(7)).unwrap().multiset(), vec!["C7"]);
        assert_eq!(composition_factors(&s4()).unwrap().multiset(), vec!["C2", "C2", "C2", "C3"]);
        let s5 = symmetric(5).unwrap();
        assert_eq!(composition_factors(&s5).unwrap().multiset(), vec!["A5", "C2"]);
        let r = composition_factors(&dihedral(6).unwrap()).unwrap();
        assert_eq!(r.series.len(), 4);
        assert_eq!(r.factors.iter().map(|f| f.order).product::<usize>(), 12);
    }

    #[test]
    fn jordan_holder_on_small_catalog() {
        for g in catalog::standard_catalog(24) {
            let a = composition_factors_with(&g, ChoiceRule::Largest).unwrap();
            let b = composition_factors_with(&g, ChoiceRule::Smallest).unwrap();
            assert_eq!(a.multiset(), b.multiset(), "{g:?}");
        }
    }

    #[test]
    fn special_classes() {
        let c5 = classify_special(&cyclic(5)).unwrap();
        assert!(c5.simple && c5.characteristically_simple);
        let v4 = classify_special(&elementary_abelian(2, 2).unwrap()).unwrap();
        assert!(!v4.simple && v4.characteristically_simple);
        assert_eq!(v4.product_of_simples.unwrap().len(), 2);
        let s3s3 = classify_special(&direct_product(&symmetric(3).unwrap(), &symmetric(3).unwrap()).group).unwrap();
        assert!(!s3s3.characteristically_simple && s3s3.product_of_simples.is_none());
        let c3c3 = classify_special(&elementary_abelian(3, 2).unwrap()).unwrap();
        assert!(c3c3.characteristically_simple);
        let c6 = classify_special(&cyclic(6)).unwrap();
        assert!(!c6.characteristically_simple && c6.product_of_simples.is_some());
        let s5 = classify_special(&symmetric(5).unwrap()).unwrap();
        assert!(s5.almost_simple_candidate && !s5.simple);
        let a5 = classify_special(&alternating(5).unwrap()).unwrap();
        assert!(a5.simple && a5.almost_simple_candidate && a5.characteristically_simple);
        assert!(!classify_special(&s4()).unwrap().almost_simple_candidate);
    }
}
