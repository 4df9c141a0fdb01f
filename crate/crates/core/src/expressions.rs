//! Subset selectors, group expressions and closure operations.
//!
//! A group expression `(S_1, …, S_t; R)` has as solutions the tuples
//! `(g_1, …, g_t)` with `g_i ∈ S_i` and `w(g_1, …, g_t) = 1` for all `w ∈ R`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::group::{prime_factors, ColoredGroup, Group};

/// Default bound on the number of variables of an expression.
pub const MAX_ARITY: usize = 4;

/// A word over variables `x_1, …, x_t`, stored as `(variable, inverted)`
/// literals with 0-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word {
    pub literals: Vec<(usize, bool)>,
}

impl Word {
    pub fn new(literals: Vec<(usize, bool)>) -> Self {
        Word { literals }
    }

    /// `[x_a, x_b] = x_a x_b x_a⁻¹ x_b⁻¹` (0-based).
    pub fn commutator(a: usize, b: usize) -> Self {
        Word::new(vec![(a, false), (b, false), (a, true), (b, true)])
    }

    /// Parses `x1 x2^-1 x1^3`; exponents expand to repeated literals.
    pub fn parse(s: &str) -> Result<Word> {
        let mut literals = Vec::new();
        for tok in s.split_whitespace() {
            let bad = || Error::InvalidWord(format!("bad literal {tok:?}"));
            let body = tok.strip_prefix('x').ok_or_else(bad)?;
            let (var, exp) = match body.split_once('^') {
                Some((v, e)) => (v, e.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let var: usize = var.parse().map_err(|_| bad())?;
            if var == 0 {
                return Err(Error::InvalidWord(format!("variables start at x1, found {tok:?}")));
            }
            for _ in 0..exp.unsigned_abs() {
                literals.push((var - 1, exp < 0));
            }
        }
        Ok(Word { literals })
    }

    /// One more than the largest variable index used.
    pub fn arity(&self) -> usize {
        self.literals.iter().map(|&(v, _)| v + 1).max().unwrap_or(0)
    }

    pub fn eval(&self, g: &Group, assignment: &[usize]) -> usize {
        eval_word(g, self, assignment)
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.literals.iter().map(|&(v, inv)| if inv { format!("x{}^-1", v + 1) } else { format!("x{}", v + 1) }).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn eval_word(g: &Group, w: &Word, assignment: &[usize]) -> usize {
    w.literals.iter().fold(0, |acc, &(v, inv)| {
        let x = assignment[v];
        g.mul(acc, if inv { g.inv(x) } else { x })
    })
}

type SelectorFn = Arc<dyn Fn(&ColoredGroup) -> ElementSet + Send + Sync>;

/// A map from colored groups to subsets.
#[derive(Clone)]
pub enum SubsetSelector {
    Id,
    Center,
    Derived,
    /// Elements whose order has only prime divisors in the list.
    PiElements(Vec<usize>),
    /// Elements of order exactly `d`.
    OfOrder(usize),
    /// Elements whose color is in the list.
    ColorClass(Vec<u32>),
    Complement(Box<SubsetSelector>),
    Union(Box<SubsetSelector>, Box<SubsetSelector>),
    Intersection(Box<SubsetSelector>, Box<SubsetSelector>),
    Named(String, SelectorFn),
}

impl SubsetSelector {
    pub fn named(name: impl Into<String>, f: impl Fn(&ColoredGroup) -> ElementSet + Send + Sync + 'static) -> Self {
        SubsetSelector::Named(name.into(), Arc::new(f))
    }

    pub fn complement(self) -> Self {
        SubsetSelector::Complement(Box::new(self))
    }

    pub fn union(self, other: SubsetSelector) -> Self {
        SubsetSelector::Union(Box::new(self), Box::new(other))
    }

    pub fn intersection(self, other: SubsetSelector) -> Self {
        SubsetSelector::Intersection(Box::new(self), Box::new(other))
    }

    pub fn apply(&self, cg: &ColoredGroup) -> ElementSet {
        let g = &cg.group;
        let n = g.order();
        match self {
            SubsetSelector::Id => g.all(),
            SubsetSelector::Center => g.center(),
            SubsetSelector::Derived => g.derived_subgroup(),
            SubsetSelector::PiElements(pi) => {
                ElementSet::from_predicate(n, |x| prime_factors(g.element_order(x)).iter().all(|p| pi.contains(p)))
            }
            SubsetSelector::OfOrder(d) => ElementSet::from_predicate(n, |x| g.element_order(x) == *d),
            SubsetSelector::ColorClass(cs) => ElementSet::from_predicate(n, |x| cs.contains(&cg.colors[x])),
            SubsetSelector::Complement(s) => s.apply(cg).complement(),
            SubsetSelector::Union(a, b) => a.apply(cg).union(&b.apply(cg)),
            SubsetSelector::Intersection(a, b) => a.apply(cg).intersection(&b.apply(cg)),
            SubsetSelector::Named(_, f) => f(cg),
        }
    }

    pub fn name(&self) -> String {
        match self {
            SubsetSelector::Id => "Id".into(),
            SubsetSelector::Center => "center".into(),
            SubsetSelector::Derived => "derived".into(),
            SubsetSelector::PiElements(pi) => {
                format!("pi-elements{{{}}}", pi.iter().map(usize::to_string).collect::<Vec<_>>().join(","))
            }
            SubsetSelector::OfOrder(d) => format!("order-{d}"),
            SubsetSelector::ColorClass(cs) => format!("colors{cs:?}"),
            SubsetSelector::Complement(s) => format!("not({})", s.name()),
            SubsetSelector::Union(a, b) => format!("({} or {})", a.name(), b.name()),
            SubsetSelector::Intersection(a, b) => format!("({} and {})", a.name(), b.name()),
            SubsetSelector::Named(name, _) => name.clone(),
        }
    }
}

impl fmt::Debug for SubsetSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Selectors for `x_1, …, x_t` and relator words.
#[derive(Clone, Debug)]
pub struct GroupExpression {
    pub selectors: Vec<SubsetSelector>,
    pub relators: Vec<Word>,
}

impl GroupExpression {
    pub fn new(selectors: Vec<SubsetSelector>, relators: Vec<Word>) -> Result<Self> {
        let t = selectors.len();
        if let Some(w) = relators.iter().find(|w| w.arity() > t) {
            return Err(Error::InvalidWord(format!("{w} uses a variable beyond x{t}")));
        }
        Ok(GroupExpression { selectors, relators })
    }

    /// Parses relators given as strings.
    pub fn parse(selectors: Vec<SubsetSelector>, relators: &[&str]) -> Result<Self> {
        let words = relators.iter().map(|r| Word::parse(r)).collect::<Result<Vec<_>>>()?;
        Self::new(selectors, words)
    }

    pub fn arity(&self) -> usize {
        self.selectors.len()
    }
}

/// All solutions, in lexicographic order.
pub fn solutions(e: &GroupExpression, cg: &ColoredGroup) -> Result<Vec<Vec<usize>>> {
    solutions_with(e, cg, MAX_ARITY)
}

pub fn solutions_with(e: &GroupExpression, cg: &ColoredGroup, max_arity: usize) -> Result<Vec<Vec<usize>>> {
    let t = e.arity();
    if t > max_arity {
        return Err(Error::ArityTooLarge(t, max_arity));
    }
    if t == 0 {
        let ok = e.relators.iter().all(|w| w.literals.is_empty());
        return Ok(if ok { vec![Vec::new()] } else { Vec::new() });
    }
    let g = &cg.group;
    let sets: Vec<Vec<usize>> = e.selectors.iter().map(|s| s.apply(cg).to_vec()).collect();
    // Relators grouped by the position after which they can be checked.
    let mut due: Vec<Vec<&Word>> = vec![Vec::new(); t];
    for w in &e.relators {
        due[w.arity().max(1) - 1].push(w);
    }
    let chunks: Vec<Vec<Vec<usize>>> = sets[0]
        .par_iter()
        .map(|&x0| {
            let mut out = Vec::new();
            let mut tuple = vec![0usize; t];
            tuple[0] = x0;
            extend(g, &sets, &due, &mut tuple, 0, &mut out);
            out
        })
        .collect();
    Ok(chunks.concat())
}

fn extend(g: &Group, sets: &[Vec<usize>], due: &[Vec<&Word>], tuple: &mut [usize], pos: usize, out: &mut Vec<Vec<usize>>) {
    if due[pos].iter().any(|w| eval_word(g, w, tuple) != 0) {
        return;
    }
    if pos + 1 == tuple.len() {
        out.push(tuple.to_vec());
        return;
    }
    for &x in &sets[pos + 1] {
        tuple[pos + 1] = x;
        extend(g, sets, due, tuple, pos + 1, out);
    }
}

/// `Sol^∃_j`: values of coordinate `j` (0-based) over all solutions.
pub fn sol_exists(e: &GroupExpression, cg: &ColoredGroup, j: usize) -> Result<ElementSet> {
    check_coordinate(e, j)?;
    let sols = solutions(e, cg)?;
    Ok(ElementSet::from_elements(cg.order(), sols.iter().map(|s| s[j])))
}

/// `Sol^∀_j`: elements `x` such that every choice of the other coordinates
/// from their selectors, with `x` at position `j`, is a solution.
pub fn sol_forall(e: &GroupExpression, cg: &ColoredGroup, j: usize) -> Result<ElementSet> {
    check_coordinate(e, j)?;
    let t = e.arity();
    if t > MAX_ARITY {
        return Err(Error::ArityTooLarge(t, MAX_ARITY));
    }
    let g = &cg.group;
    let n = cg.order();
    let sets: Vec<ElementSet> = e.selectors.iter().map(|s| s.apply(cg)).collect();
    let in_selector = sets[j].clone();
    let others: Vec<Vec<usize>> = (0..t).map(|i| if i == j { vec![0] } else { sets[i].to_vec() }).collect();
    let members: Vec<bool> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut tuple = vec![0usize; t];
            all_tuples(&others, &mut tuple, 0, &mut |tu| {
                tu[j] = x;
                in_selector.contains(x) && e.relators.iter().all(|w| eval_word(g, w, tu) == 0)
            })
        })
        .collect();
    Ok(ElementSet::from_predicate(n, |x| members[x]))
}

/// Runs `f` on every tuple from the product of `sets`; stops at the first `false`.
fn all_tuples(sets: &[Vec<usize>], tuple: &mut [usize], pos: usize, f: &mut impl FnMut(&mut [usize]) -> bool) -> bool {
    if pos == sets.len() {
        return f(tuple);
    }
    for &x in &sets[pos] {
        tuple[pos] = x;
        if !all_tuples(sets, tuple, pos + 1, f) {
            return false;
        }
    }
    true
}

fn check_coordinate(e: &GroupExpression, j: usize) -> Result<()> {
    if j >= e.arity() {
        return Err(Error::Invalid(format!("coordinate {j} outside an expression of arity {}", e.arity())));
    }
    Ok(())
}

/// `S^e = {s^e | s ∈ S}`.
pub fn powers(g: &Group, s: &ElementSet, e: i64) -> ElementSet {
    ElementSet::from_elements(g.order(), s.iter().map(|x| g.power(x, e)))
}

/// `S^{[e]} = {s_1 ⋯ s_e | s_i ∈ S}`; `S^{[0]} = {1}`.
pub fn product_set(g: &Group, s: &ElementSet, e: usize) -> ElementSet {
    (0..e).fold(g.trivial(), |acc, _| g.product_set(&acc, s))
}

/// `{t⁻¹ s t | s ∈ S, t ∈ T}`.
pub fn conjugate_set(g: &Group, s: &ElementSet, t: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(g.order());
    for x in s.iter() {
        for y in t.iter() {
            out.insert(g.mul(g.mul(g.inv(y), x), y));
        }
    }
    out
}

/// `[S, T] = ⟨[s, t] | s ∈ S, t ∈ T⟩`.
pub fn commutator_subgroup(g: &Group, s: &ElementSet, t: &ElementSet) -> ElementSet {
    g.commutator_subgroup(s, t)
}

/// `S ∩ C_G(T)`.
pub fn centralizer_in(g: &Group, s: &ElementSet, t: &ElementSet) -> ElementSet {
    s.intersection(&g.centralizer(t))
}

/// `{s ∈ S | s T s⁻¹ = T}`.
pub fn normalizer_in(g: &Group, s: &ElementSet, t: &ElementSet) -> ElementSet {
    ElementSet::from_predicate(g.order(), |x| s.contains(x) && t.iter().all(|y| t.contains(g.conjugate(y, x))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;
    use proptest::prelude::*;

    fn d4() -> ColoredGroup {
        ColoredGroup::uniform(dihedral(4).unwrap())
    }

    fn sel(s: &ElementSet) -> SubsetSelector {
        let s = s.clone();
        SubsetSelector::named("fixed", move |_| s.clone())
    }

    #[test]
    fn word_parsing() {
        let w = Word::parse("x1 x2^-1 x1^2").unwrap();
        assert_eq!(w.literals, vec![(0, false), (1, true), (0, false), (0, false)]);
        assert_eq!(w.to_string(), "x1 x2^-1 x1 x1");
        assert_eq!(w.arity(), 2);
        assert!(Word::parse("y1").is_err());
        assert!(Word::parse("x0").is_err());
        assert!(Word::parse("x1^a").is_err());
        assert_eq!(Word::parse("").unwrap().literals, vec![]);
    }

    #[test]
    fn word_evaluation() {
        let c4 = cyclic(4);
        assert_eq!(eval_word(&c4, &Word::default(), &[]), 0);
        assert_eq!(eval_word(&c4, &Word::parse("x1^2").unwrap(), &[1]), 2);
        assert_eq!(eval_word(&c4, &Word::commutator(0, 1), &[1, 3]), 0);
    }

    #[test]
    fn relators_beyond_arity_are_rejected() {
        assert!(GroupExpression::parse(vec![SubsetSelector::Id], &["x2"]).is_err());
        let e = GroupExpression::parse(vec![SubsetSelector::Id; 5], &[]).unwrap();
        assert!(matches!(solutions(&e, &d4()), Err(Error::ArityTooLarge(5, 4))));
    }

    #[test]
    fn commuting_pairs_count_centralizers() {
        let cg = d4();
        let e = GroupExpression::new(vec![SubsetSelector::Id; 2], vec![Word::commutator(0, 1)]).unwrap();
        let sols = solutions(&e, &cg).unwrap();
        let expect: usize = (0..8).map(|x| cg.group.centralizer_of(x).len()).sum();
        assert_eq!(sols.len(), expect);
        assert_eq!(expect, 8 * cg.group.conjugacy_classes().len());
    }

    #[test]
    fn forall_gives_the_center() {
        let cg = d4();
        let e = GroupExpression::new(vec![SubsetSelector::Id; 2], vec![Word::commutator(0, 1)]).unwrap();
        assert_eq!(sol_forall(&e, &cg, 0).unwrap(), cg.group.center());
        assert_eq!(sol_forall(&e, &cg, 0).unwrap().to_vec(), vec![0, 2]);
    }

    #[test]
    fn exists_gives_products_and_powers() {
        let cg = ColoredGroup::uniform(symmetric(4).unwrap());
        let g = &cg.group;
        let e = GroupExpression::parse(vec![SubsetSelector::Id; 3], &["x1 x2 x3^-1"]).unwrap();
        assert_eq!(sol_exists(&e, &cg, 2).unwrap(), g.all());
        let s = SubsetSelector::OfOrder(4);
        let s_set = s.apply(&cg);
        let e = GroupExpression::parse(vec![s, SubsetSelector::Id], &["x1^2 x2^-1"]).unwrap();
        assert_eq!(sol_exists(&e, &cg, 1).unwrap(), powers(g, &s_set, 2));
        let unsat = GroupExpression::parse(vec![SubsetSelector::Center.complement()], &["x1"]).unwrap();
        assert!(solutions(&unsat, &cg).unwrap().is_empty());
    }

    #[test]
    fn closure_examples() {
        let s4 = symmetric(4).unwrap();
        let a4 = alternating(4).unwrap();
        assert_eq!(commutator_subgroup(&s4, &s4.all(), &s4.all()).len(), a4.order());
        let c6 = cyclic(6);
        assert_eq!(commutator_subgroup(&c6, &c6.all(), &c6.all()), c6.trivial());
        let d4 = dihedral(4).unwrap();
        assert_eq!(conjugate_set(&d4, &d4.set([1]), &d4.all()).to_vec(), vec![1, 3]);
        assert_eq!(centralizer_in(&d4, &d4.all(), &d4.all()), d4.center());
        let rot = d4.generated_by(&[1]);
        assert_eq!(normalizer_in(&d4, &d4.all(), &rot), d4.all());
        assert_eq!(normalizer_in(&d4, &d4.all(), &d4.set([0, 4])), d4.set([0, 2, 4, 6]));
    }

    #[test]
    fn selector_combinators() {
        let cg = ColoredGroup::new(cyclic(6), vec![0, 1, 1, 2, 1, 1]).unwrap();
        assert_eq!(SubsetSelector::PiElements(vec![3]).apply(&cg).to_vec(), vec![0, 2, 4]);
        assert_eq!(SubsetSelector::ColorClass(vec![2]).apply(&cg).to_vec(), vec![3]);
        let u = SubsetSelector::OfOrder(2).union(SubsetSelector::OfOrder(3));
        assert_eq!(u.apply(&cg).to_vec(), vec![2, 3, 4]);
        let i = SubsetSelector::Id.intersection(SubsetSelector::Derived);
        assert_eq!(i.apply(&cg).to_vec(), vec![0]);
        assert_eq!(u.name(), "(order-2 or order-3)");
    }

    /// Each closure operation agrees with the group expression that defines it.
    #[test]
    fn closure_ops_match_their_expressions() {
        let cg = ColoredGroup::uniform(symmetric(4).unwrap());
        let g = &cg.group;
        let s = g.set([1, 5, 7]);
        let t = g.set([2, 9]);
        let e = GroupExpression::parse(vec![sel(&s), sel(&t), SubsetSelector::Id], &["x2^-1 x1 x2 x3^-1"]).unwrap();
        assert_eq!(sol_exists(&e, &cg, 2).unwrap(), conjugate_set(g, &s, &t));
        let e = GroupExpression::parse(vec![sel(&s), sel(&t)], &["x1 x2 x1^-1 x2^-1"]).unwrap();
        assert_eq!(sol_forall(&e, &cg, 0).unwrap(), centralizer_in(g, &s, &t));
        let mut acc = g.trivial();
        let mut power = g.trivial();
        for _ in 0..g.order() {
            let e = GroupExpression::parse(vec![sel(&power), sel(&s), SubsetSelector::Id], &["x1 x2 x3^-1"]).unwrap();
            power = sol_exists(&e, &cg, 2).unwrap();
            acc.union_with(&power);
        }
        assert_eq!(acc, g.generated_subgroup(&s));
    }

    proptest! {
        #[test]
        fn closure_laws(bits in any::<u32>(), other in any::<u32>(), idx in 0usize..6) {
            let groups = [symmetric(3).unwrap(), dihedral(4).unwrap(), quaternion8(), alternating(4).unwrap(), cyclic(12), dihedral(6).unwrap()];
            let g = &groups[idx];
            let n = g.order();
            let s = ElementSet::from_predicate(n, |x| bits >> (x % 32) & 1 == 1);
            let t = ElementSet::from_predicate(n, |x| other >> (x % 32) & 1 == 1);
            prop_assert_eq!(commutator_subgroup(g, &s, &t), commutator_subgroup(g, &t, &s));
            let mut union = g.trivial();
            for e in 0..=n {
                union.union_with(&product_set(g, &s, e));
            }
            prop_assert_eq!(union, g.generated_subgroup(&s));
            let cg = ColoredGroup::uniform(g.clone());
            let e = GroupExpression::parse(vec![sel(&s), sel(&t)], &["x1 x2 x1^-1 x2^-1"]).unwrap();
            if !s.is_empty() && !t.is_empty() {
                prop_assert!(sol_forall(&e, &cg, 0).unwrap().is_subset(&sol_exists(&e, &cg, 0).unwrap()));
            }
        }

        #[test]
        fn solutions_are_automorphism_invariant(idx in 0usize..4) {
            let groups = [symmetric(3).unwrap(), dihedral(4).unwrap(), quaternion8(), alternating(4).unwrap()];
            let cg = ColoredGroup::uniform(groups[idx].clone());
            let e = GroupExpression::parse(
                vec![SubsetSelector::Id, SubsetSelector::Center.complement(), SubsetSelector::Id],
                &["x1 x2 x1^-1 x2^-1 x3^-1"],
            ).unwrap();
            let sols: std::collections::HashSet<Vec<usize>> = solutions(&e, &cg).unwrap().into_iter().collect();
            for auto in crate::iso::automorphism_generators(&cg, std::time::Duration::from_millis(200)) {
                for s in &sols {
                    let image: Vec<usize> = s.iter().map(|&x| auto[x]).collect();
                    prop_assert!(sols.contains(&image));
                }
            }
        }
    }
}
