use std::collections::{BTreeMap, HashMap};

use proptest::prelude::*;

use super::*;
use crate::constructors::*;
use crate::group::Group;

/// Partition of indices given by a color array, as a canonical label list.
fn partition(colors: &[u32]) -> Vec<usize> {
    let mut first: HashMap<u32, usize> = HashMap::new();
    colors.iter().enumerate().map(|(i, c)| *first.entry(*c).or_insert(i)).collect()
}

/// Canonical labels from an equivalence test over all pairs.
fn partition_by(len: usize, same: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut label = vec![usize::MAX; len];
    for i in 0..len {
        if label[i] == usize::MAX {
            for j in i..len {
                if label[j] == usize::MAX && same(i, j) {
                    label[j] = i;
                }
            }
        }
    }
    label
}

fn naive_initial_i_same(cg: &ColoredGroup, a: &[usize], b: &[usize]) -> bool {
    let g = &cg.group;
    let k = a.len();
    (0..k).all(|i| cg.colors[a[i]] == cg.colors[b[i]])
        && (0..k).all(|i| (0..k).all(|j| (a[i] == a[j]) == (b[i] == b[j])))
        && (0..k).all(|i| {
            (0..k).all(|j| (0..k).all(|m| (g.mul(a[i], a[j]) == a[m]) == (g.mul(b[i], b[j]) == b[m])))
        })
}

/// Ordered colored isomorphism `<a> → <b>` exists: close the relation
/// generated by `(a_i, b_i)` under left multiplication and inverses, and
/// check it is the graph of a color-preserving bijection.
fn naive_initial_ii_same(cg: &ColoredGroup, a: &[usize], b: &[usize]) -> bool {
    let g = &cg.group;
    let mut fwd: HashMap<usize, usize> = HashMap::from([(0, 0)]);
    let mut bwd: HashMap<usize, usize> = HashMap::from([(0, 0)]);
    let mut stack = vec![(0usize, 0usize)];
    let mut gens: Vec<(usize, usize)> = a.iter().copied().zip(b.iter().copied()).collect();
    gens.extend(a.iter().zip(b).map(|(&x, &y)| (g.inv(x), g.inv(y))));
    while let Some((u, v)) = stack.pop() {
        for &(x, y) in &gens {
            let (p, q) = (g.mul(x, u), g.mul(y, v));
            match (fwd.get(&p), bwd.get(&q)) {
                (None, None) => {
                    fwd.insert(p, q);
                    bwd.insert(q, p);
                    stack.push((p, q));
                }
                (Some(&q2), Some(&p2)) if q2 == q && p2 == p => {}
                _ => return false,
            }
        }
    }
    fwd.iter().all(|(&p, &q)| cg.colors[p] == cg.colors[q])
}

/// Reference initial partition from the pairwise definitions.
fn naive_initial(cg: &ColoredGroup, k: usize, version: Version) -> Vec<u32> {
    let ix = TupleIndexer::new(cg.order(), k);
    let tuples: Vec<Vec<usize>> = (0..ix.len()).map(|t| ix.tuple(t)).collect();
    let labels = partition_by(ix.len(), |i, j| match version {
        Version::I => naive_initial_i_same(cg, &tuples[i], &tuples[j]),
        Version::II => naive_initial_ii_same(cg, &tuples[i], &tuples[j]),
    });
    let mut reps: Vec<usize> = labels.clone();
    reps.sort();
    reps.dedup();
    labels.iter().map(|l| reps.binary_search(l).unwrap() as u32).collect()
}

/// Straightforward reference refinement with ordered-map interning.
fn naive_refine(cg: &ColoredGroup, k: usize, mut colors: Vec<u32>) -> Vec<u32> {
    let n = cg.order();
    let ix = TupleIndexer::new(n, k);
    let tuples: Vec<Vec<usize>> = (0..ix.len()).map(|t| ix.tuple(t)).collect();
    loop {
        let sigs: Vec<(u32, Vec<Vec<u32>>)> = tuples
            .iter()
            .enumerate()
            .map(|(t, tup)| {
                let mut ms: Vec<Vec<u32>> = (0..n)
                    .map(|x| {
                        (0..k)
                            .map(|j| {
                                let mut s = tup.clone();
                                s[j] = x;
                                colors[ix.index(&s)]
                            })
                            .collect()
                    })
                    .collect();
                ms.sort();
                (colors[t], ms)
            })
            .collect();
        let mut dict: BTreeMap<&(u32, Vec<Vec<u32>>), u32> = BTreeMap::new();
        for s in &sigs {
            dict.insert(s, 0);
        }
        for (i, v) in dict.values_mut().enumerate() {
            *v = i as u32;
        }
        let next: Vec<u32> = sigs.iter().map(|s| dict[s]).collect();
        let before = colors.iter().max().map_or(0, |m| m + 1);
        let after = dict.len() as u32;
        if before == after {
            return colors;
        }
        colors = next;
    }
}

fn small_groups() -> Vec<Group> {
    vec![
        cyclic(1),
        cyclic(2),
        cyclic(4),
        elementary_abelian(2, 2).unwrap(),
        cyclic(6),
        symmetric(3).unwrap(),
        dihedral(4).unwrap(),
        quaternion8(),
    ]
}

#[test]
fn initial_partitions_match_reference() {
    for g in small_groups() {
        let cg = ColoredGroup::uniform(g);
        for k in [2, 3] {
            let ix = TupleIndexer::new(cg.order(), k);
            let tuples: Vec<Vec<usize>> = (0..ix.len()).map(|t| ix.tuple(t)).collect();
            let c1 = initial_coloring_i(&cg, k).unwrap();
            let r1 = partition_by(ix.len(), |i, j| naive_initial_i_same(&cg, &tuples[i], &tuples[j]));
            assert_eq!(partition(&c1.colors), r1, "{:?} k={k} I", cg.group);
            let c2 = initial_coloring_ii(&cg, k).unwrap();
            let r2 = partition_by(ix.len(), |i, j| naive_initial_ii_same(&cg, &tuples[i], &tuples[j]));
            assert_eq!(partition(&c2.colors), r2, "{:?} k={k} II", cg.group);
        }
    }
}

#[test]
fn stable_colors_match_reference_exactly() {
    for g in small_groups() {
        let cg = ColoredGroup::uniform(g);
        for version in [Version::I, Version::II] {
            for k in [2, 3] {
                if cg.order() > 6 && k == 3 {
                    continue;
                }
                let init = initial_coloring(&cg, k, version).unwrap();
                let fast = refine_to_stable(&init, &cg).unwrap();
                // Same start, same densification rule: identical arrays.
                assert_eq!(fast.colors, naive_refine(&cg, k, init.colors.clone()), "{:?} k={k} {version}", cg.group);
                // Independent start: identical partition.
                let reference = naive_refine(&cg, k, naive_initial(&cg, k, version));
                assert_eq!(partition(&fast.colors), partition(&reference));
            }
        }
    }
}

#[test]
fn c2_version_i_classes() {
    let cg = ColoredGroup::uniform(cyclic(2));
    assert_eq!(initial_coloring_i(&cg, 2).unwrap().class_count, 4);
    let triv = ColoredGroup::uniform(cyclic(1));
    assert_eq!(initial_coloring_i(&triv, 3).unwrap().class_count, 1);
    assert_eq!(initial_coloring_i(&triv, 1).unwrap_err(), Error::DimensionTooSmall(1));
}

#[test]
fn c6_generators_share_a_color() {
    let cg = ColoredGroup::uniform(cyclic(6));
    let c = initial_coloring_ii(&cg, 2).unwrap();
    assert_eq!(c.color_of(&[1, 0]), c.color_of(&[5, 0]));
    assert_ne!(c.color_of(&[1, 0]), c.color_of(&[2, 0]));
}

#[test]
fn identity_tuples_agree_across_groups() {
    let a = ColoredGroup::uniform(cyclic(8));
    let b = ColoredGroup::uniform(quaternion8());
    let v = joint_stable(&[&a, &b], 2, Version::II, &WlConfig { max_rounds: Some(0), ..Default::default() }).unwrap();
    assert_eq!(v.colorings[0].colors[0], v.colorings[1].colors[0]);
}

#[test]
fn stable_input_is_fixed_point() {
    let cg = ColoredGroup::uniform(dihedral(4).unwrap());
    let s = stable_coloring(&cg, 2, Version::I).unwrap();
    let again = refine_to_stable(&s, &cg).unwrap();
    assert_eq!(again.colors, s.colors);
    assert_eq!(again.rounds, 0);
}

#[test]
fn c4_version_ii_refinement_adds_nothing() {
    let cg = ColoredGroup::uniform(cyclic(4));
    let init = initial_coloring_ii(&cg, 2).unwrap();
    let stable = refine_to_stable(&init, &cg).unwrap();
    assert_eq!(partition(&init.colors), partition(&stable.colors));
}

#[test]
fn class_counts_never_decrease() {
    for g in small_groups() {
        let cg = ColoredGroup::uniform(g);
        let s = stable_coloring(&cg, 3, Version::I).unwrap();
        assert!(s.history.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(s.history.len(), s.rounds + 1);
    }
}

#[test]
fn chunking_does_not_change_colors() {
    let cg = ColoredGroup::uniform(symmetric(4).unwrap());
    let one = stable_coloring_with(&cg, 2, Version::II, &WlConfig { chunks: Some(1), ..Default::default() }).unwrap();
    for chunks in [2, 3, 7, 64] {
        let many = stable_coloring_with(&cg, 2, Version::II, &WlConfig { chunks: Some(chunks), ..Default::default() })
            .unwrap();
        assert_eq!(one, many);
    }
}

#[test]
fn joint_verdicts() {
    let d4 = ColoredGroup::uniform(dihedral(4).unwrap());
    let q8 = ColoredGroup::uniform(quaternion8());
    let c4 = ColoredGroup::uniform(cyclic(4));
    let v4 = ColoredGroup::uniform(elementary_abelian(2, 2).unwrap());
    let same = joint_compare(&d4, &d4, 2, Version::I).unwrap();
    assert!(same.equivalent);
    assert_eq!(same.first_distinguishing_round, None);
    let v = joint_compare(&c4, &v4, 2, Version::II).unwrap();
    assert!(!v.equivalent);
    assert_eq!(v.first_distinguishing_round, Some(0));
    let v = joint_compare(&d4, &q8, 2, Version::II).unwrap();
    assert_eq!(v.first_distinguishing_round, Some(0));
    let c3 = ColoredGroup::uniform(cyclic(3));
    assert!(!joint_compare(&c4, &c3, 2, Version::I).unwrap().equivalent);
}

#[test]
fn element_coloring_refines_centralizer_orders() {
    let cg = ColoredGroup::uniform(dihedral(4).unwrap());
    let s = stable_coloring(&cg, 2, Version::II).unwrap();
    let ec = element_coloring(&s);
    let g = &cg.group;
    for x in 0..8 {
        for y in 0..8 {
            if ec[x] == ec[y] {
                assert_eq!(g.centralizer_of(x).len(), g.centralizer_of(y).len());
            }
        }
    }
    assert!(is_union_of_classes(&ec, &g.center()));
    assert_eq!(ec.iter().filter(|&&c| c == ec[0]).count(), 1);
}

#[test]
fn induced_identity_and_trivial() {
    let cg = ColoredGroup::uniform(symmetric(3).unwrap());
    let s = stable_coloring(&cg, 2, Version::I).unwrap();
    assert_eq!(induced_coloring(&s, 2).colors, s.colors);
    let t = stable_coloring(&ColoredGroup::uniform(cyclic(1)), 2, Version::I).unwrap();
    assert_eq!(element_coloring(&t), vec![0]);
}

#[test]
fn quotient_colorings() {
    let s4 = symmetric(4).unwrap();
    let cg = ColoredGroup::uniform(s4.clone());
    let (q, _) = quotient_coloring(&cg, &s4.trivial()).unwrap();
    assert_eq!(q.colors, cg.colors);
    let ec = element_coloring(&stable_coloring(&cg, 2, Version::II).unwrap());
    let colored = ColoredGroup::new(s4.clone(), ec).unwrap();
    let v4 = s4.generated_by(&[(0..24).find(|&g| s4.element_order(g) == 2 && s4.centralizer_of(g).len() == 8).unwrap()]);
    let v4 = s4.normal_closure(&v4);
    let (qc, quo) = quotient_coloring(&colored, &v4).unwrap();
    assert_eq!(qc.order(), 6);
    let a4 = s4.derived_subgroup();
    for c in 0..6 {
        for d in 0..6 {
            let in_a4 = |i: usize| a4.contains(quo.representatives[i]);
            if in_a4(c) != in_a4(d) {
                assert_ne!(qc.colors[c], qc.colors[d]);
            }
        }
    }
    let (uq, _) = quotient_coloring(&cg, &v4).unwrap();
    assert!(uq.is_uniform());
}

#[test]
fn permutation_coherence() {
    for g in small_groups() {
        let cg = ColoredGroup::uniform(g);
        let s = stable_coloring(&cg, 3, Version::I).unwrap();
        let ix = s.indexer();
        let permuted: Vec<u32> = (0..ix.len())
            .map(|t| {
                let tup = ix.tuple(t);
                s.color_of(&[tup[2], tup[0], tup[1]])
            })
            .collect();
        assert_eq!(partition(&permuted).len(), partition(&s.colors).len());
        let classes = |c: &[u32]| {
            let mut v = c.to_vec();
            v.sort();
            v.dedup();
            v.len()
        };
        assert_eq!(classes(&permuted), s.class_count);
        // Equal tuple colors force equal coordinate colors.
        let ec = element_coloring(&s);
        for a in 0..ix.len() {
            for b in a + 1..ix.len() {
                if s.colors[a] == s.colors[b] {
                    let (ta, tb) = (ix.tuple(a), ix.tuple(b));
                    assert!((0..3).all(|i| ec[ta[i]] == ec[tb[i]]));
                }
            }
        }
    }
}

#[test]
fn budget_guard() {
    let cg = ColoredGroup::uniform(cyclic(64));
    let cfg = WlConfig { budget: 1000, ..Default::default() };
    assert!(matches!(stable_coloring_with(&cg, 2, Version::I, &cfg), Err(Error::Budget { .. })));
}

#[test]
fn orbit_reduction_keeps_colors() {
    let on = WlConfig { symmetry_min_cells: 0, ..Default::default() };
    let off = WlConfig { symmetry: false, ..Default::default() };
    for g in small_groups().into_iter().chain([dihedral(6).unwrap(), elementary_abelian(2, 3).unwrap()]) {
        let cg = ColoredGroup::uniform(g);
        for version in [Version::I, Version::II] {
            let a = stable_coloring_with(&cg, 3, version, &on).unwrap();
            let b = stable_coloring_with(&cg, 3, version, &off).unwrap();
            assert_eq!(a, b, "{:?} {version}", cg.group);
        }
    }
    let a = ColoredGroup::uniform(dihedral(4).unwrap());
    let b = ColoredGroup::uniform(quaternion8());
    let x = joint_stable(&[&a, &b], 2, Version::I, &on).unwrap();
    let y = joint_stable(&[&a, &b], 2, Version::I, &off).unwrap();
    assert_eq!(x.colorings, y.colorings);
    assert_eq!(x.first_distinguishing_round, y.first_distinguishing_round);
}

fn arb_colored() -> impl Strategy<Value = ColoredGroup> {
    (0usize..small_groups().len(), proptest::collection::vec(0u64..3, 8)).prop_map(|(i, labels)| {
        let g = small_groups().swap_remove(i);
        let mut l = labels;
        l.truncate(g.order());
        l[0] = 7;
        ColoredGroup::from_labels(g, &l).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn colored_refinement_matches_reference(cg in arb_colored(), v in prop_oneof![Just(Version::I), Just(Version::II)]) {
        let fast = stable_coloring(&cg, 2, v).unwrap();
        let reference = naive_refine(&cg, 2, naive_initial(&cg, 2, v));
        prop_assert_eq!(partition(&fast.colors), partition(&reference));
    }

    #[test]
    fn chunk_count_is_irrelevant(cg in arb_colored(), chunks in 1usize..9) {
        let a = stable_coloring_with(&cg, 2, Version::I, &WlConfig { chunks: Some(1), ..Default::default() }).unwrap();
        let b = stable_coloring_with(&cg, 2, Version::I, &WlConfig { chunks: Some(chunks), ..Default::default() }).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn orbit_reduction_on_colored_groups(cg in arb_colored()) {
        let on = WlConfig { symmetry_min_cells: 0, ..Default::default() };
        let off = WlConfig { symmetry: false, ..Default::default() };
        prop_assert_eq!(stable_coloring_with(&cg, 2, Version::II, &on).unwrap(), stable_coloring_with(&cg, 2, Version::II, &off).unwrap());
    }
}
