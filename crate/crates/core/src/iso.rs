//! Isomorphism testing by backtracking over generator images.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::group::{ColoredGroup, Group};

/// Per-element invariant preserved by every isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Profile {
    color: u32,
    order: u32,
    centralizer: u32,
    class_size: u32,
    /// Number of square roots.
    roots: u32,
}

fn profiles(g: &Group, colors: Option<&[u32]>) -> Vec<Profile> {
    let n = g.order();
    let mut roots = vec![0u32; n];
    for x in 0..n {
        roots[g.mul(x, x)] += 1;
    }
    (0..n)
        .map(|x| {
            let c = (0..n).filter(|&y| g.commute(x, y)).count() as u32;
            Profile {
                color: colors.map_or(0, |c| c[x]),
                order: g.element_order(x) as u32, centralizer: c, class_size: n as u32 / c, roots: roots[x] }
        })
        .collect()
}

/// `Some(map)` with `map[g]` the image of `g` when the groups are isomorphic.
pub fn is_isomorphic(g: &Group, h: &Group) -> Option<Vec<usize>> {
    find_isomorphism(g, h, None).expect("no time budget was set")
}

/// Isomorphism search with an optional wall-clock budget.
pub fn find_isomorphism(g: &Group, h: &Group, budget: Option<Duration>) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n != h.order() {
        return Ok(None);
    }
    let pg = profiles(g, None);
    let ph = profiles(h, None);
    let mut sg = pg.clone();
    let mut sh = ph.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return Ok(None);
    }
    let mut by_profile: HashMap<Profile, Vec<usize>> = HashMap::new();
    for (y, p) in ph.iter().enumerate() {
        by_profile.entry(*p).or_default().push(y);
    }
    let gens = choose_generators(g, &pg, &by_profile);
    let mut search = Search {
        g,
        h,
        gens: &gens,
        cands: gens.iter().map(|x| by_profile[&pg[*x]].clone()).collect(),
        pg: &pg,
        ph: &ph,
        deadline: budget.map(|b| Instant::now() + b),
        steps: 0,
    };
    search.run()
}

/// Generators chosen greedily: fewest candidate images first.
fn choose_generators(g: &Group, pg: &[Profile], by_profile: &HashMap<Profile, Vec<usize>>) -> Vec<usize> {
    let n = g.order();
    let mut gens: Vec<usize> = Vec::new();
    let mut span = g.trivial();
    while span.len() < n {
        let pick = (0..n)
            .filter(|&x| !span.contains(x))
            .min_by_key(|&x| (by_profile[&pg[x]].len(), std::cmp::Reverse(g.element_order(x)), x))
            .unwrap();
        gens.push(pick);
        span = g.generated_by(&gens);
    }
    gens
}

/// Generators of the group of color-preserving automorphisms, as element
/// permutations.
///
/// Uses the generating list `g_1, …, g_r` of `G` as a base: for every level `i`
/// (deepest first) it searches one automorphism fixing `g_1, …, g_{i-1}` and
/// sending `g_i` to each profile-compatible image not yet in the orbit of
/// `g_i` under the automorphisms found so far at levels `≥ i`. Searches that
/// exceed `per_search` are skipped, so the result may generate a subgroup;
/// every returned map is a verified automorphism.
pub fn automorphism_generators(cg: &ColoredGroup, per_search: Duration) -> Vec<Vec<usize>> {
    let g = &cg.group;
    let n = g.order();
    if n <= 2 {
        return Vec::new();
    }
    let pg = profiles(g, Some(&cg.colors));
    let mut by_profile: HashMap<Profile, Vec<usize>> = HashMap::new();
    for (y, p) in pg.iter().enumerate() {
        by_profile.entry(*p).or_default().push(y);
    }
    let gens = choose_generators(g, &pg, &by_profile);
    let mut found: Vec<(usize, Vec<usize>)> = Vec::new();
    for level in (0..gens.len()).rev() {
        let x = gens[level];
        let mut orbit = orbit_of(x, n, found.iter().map(|(_, a)| a.as_slice()));
        for &y in &by_profile[&pg[x]] {
            if orbit[y] {
                continue;
            }
            let cands: Vec<Vec<usize>> = gens
                .iter()
                .enumerate()
                .map(|(j, &gj)| match j.cmp(&level) {
                    std::cmp::Ordering::Less => vec![gj],
                    std::cmp::Ordering::Equal => vec![y],
                    std::cmp::Ordering::Greater => by_profile[&pg[gj]].clone(),
                })
                .collect();
            let mut search = Search {
                g,
                h: g,
                gens: &gens,
                cands,
                pg: &pg,
                ph: &pg,
                deadline: Some(Instant::now() + per_search),
                steps: 0,
            };
            if let Ok(Some(aut)) = search.run() {
                found.push((level, aut));
                orbit = orbit_of(x, n, found.iter().map(|(_, a)| a.as_slice()));
            }
        }
    }
    found.into_iter().map(|(_, a)| a).filter(|a| a.iter().enumerate().any(|(i, &j)| i != j)).collect()
}

fn orbit_of<'a>(x: usize, n: usize, maps: impl Iterator<Item = &'a [usize]> + Clone) -> Vec<bool> {
    let mut seen = vec![false; n];
    seen[x] = true;
    let mut stack = vec![x];
    while let Some(u) = stack.pop() {
        for m in maps.clone() {
            let v = m[u];
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    seen
}

struct Search<'a> {
    g: &'a Group,
    h: &'a Group,
    gens: &'a [usize],
    cands: Vec<Vec<usize>>,
    pg: &'a [Profile],
    ph: &'a [Profile],
    deadline: Option<Instant>,
    steps: u64,
}

impl Search<'_> {
    fn run(&mut self) -> Result<Option<Vec<usize>>> {
        let n = self.g.order();
        let mut phi = vec![usize::MAX; n];
        phi[0] = 0;
        let mut used = vec![false; n];
        used[0] = true;
        let mut known = vec![0usize];
        self.extend(0, &mut phi, &mut used, &mut known)
    }

    fn extend(
        &mut self,
        level: usize,
        phi: &mut Vec<usize>,
        used: &mut Vec<bool>,
        known: &mut Vec<usize>,
    ) -> Result<Option<Vec<usize>>> {
        if level == self.gens.len() {
            return Ok(Some(phi.clone()));
        }
        let x = self.gens[level];
        for ci in 0..self.cands[level].len() {
            let y = self.cands[level][ci];
            if used[y] {
                continue;
            }
            self.steps += 1;
            if self.steps.is_multiple_of(1024) {
                if let Some(d) = self.deadline {
                    if Instant::now() > d {
                        return Err(Error::Timeout);
                    }
                }
            }
            let mark = known.len();
            if self.close(level, x, y, phi, used, known) {
                if let Some(found) = self.extend(level + 1, phi, used, known)? {
                    return Ok(Some(found));
                }
            }
            for &z in &known[mark..] {
                used[phi[z]] = false;
                phi[z] = usize::MAX;
            }
            known.truncate(mark);
        }
        Ok(None)
    }

    /// Extends `phi` from `<gens[..level]>` to `<gens[..=level]>` with `x ↦ y`,
    /// checking that the extension stays a well-defined injective map.
    fn close(
        &self,
        level: usize,
        x: usize,
        y: usize,
        phi: &mut [usize],
        used: &mut [bool],
        known: &mut Vec<usize>,
    ) -> bool {
        let gens = &self.gens[..=level];
        let images: Vec<usize> = gens.iter().map(|&s| if s == x { y } else { phi[s] }).collect();
        // Breadth-first over all known elements times all generators.
        let mut i = 0;
        while i < known.len() {
            let u = known[i];
            for (k, &s) in gens.iter().enumerate() {
                let v = self.g.mul(u, s);
                let w = self.h.mul(phi[u], images[k]);
                if phi[v] == usize::MAX {
                    if used[w] || self.pg[v] != self.ph[w] {
                        return false;
                    }
                    phi[v] = w;
                    used[w] = true;
                    known.push(v);
                } else if phi[v] != w {
                    return false;
                }
            }
            i += 1;
        }
        true
    }
}

/// Checks that `map` is an isomorphism `g → h`.
pub fn is_isomorphism(g: &Group, h: &Group, map: &[usize]) -> bool {
    let n = g.order();
    if n != h.order() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &y in map {
        if y >= n || std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    (0..n).all(|a| (0..n).all(|b| map[g.mul(a, b)] == h.mul(map[a], map[b])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::*;

    #[test]
    fn reflexive_with_witness() {
        let g = dihedral(5).unwrap();
        let m = is_isomorphic(&g, &g).unwrap();
        assert!(is_isomorphism(&g, &g, &m));
    }

    #[test]
    fn automorphism_generators_are_automorphisms() {
        for g in [dihedral(8).unwrap(), cyclic(16), elementary_abelian(2, 4).unwrap(), quaternion8()] {
            let cg = ColoredGroup::uniform(g.clone());
            let autos = automorphism_generators(&cg, Duration::from_secs(5));
            assert!(autos.iter().all(|a| is_isomorphism(&g, &g, a)));
            // Orbits of the generated group on elements are the profile classes here.
            let elems = (0..g.order()).filter(|&x| g.element_order(x) == g.element_order(1)).count();
            let orbit = orbit_of(1, g.order(), autos.iter().map(|a| a.as_slice()));
            if g.name() != Some("D8") {
                assert_eq!(orbit.iter().filter(|&&b| b).count(), elems, "{g:?}");
            }
        }
        // |Aut(C2^4)| = |GL(4,2)| = 20160: check by closing the generated group.
        let g = elementary_abelian(2, 4).unwrap();
        let autos = automorphism_generators(&ColoredGroup::uniform(g), Duration::from_secs(5));
        let mut group: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
        let id: Vec<usize> = (0..16).collect();
        let mut stack = vec![id.clone()];
        group.insert(id);
        while let Some(p) = stack.pop() {
            for a in &autos {
                let q: Vec<usize> = p.iter().map(|&i| a[i]).collect();
                if group.insert(q.clone()) {
                    stack.push(q);
                }
            }
        }
        assert_eq!(group.len(), 20160);
    }

    #[test]
    fn colors_restrict_automorphisms() {
        let g = cyclic(5);
        let cg = ColoredGroup::new(g.clone(), vec![0, 1, 2, 2, 1]).unwrap();
        let autos = automorphism_generators(&cg, Duration::from_secs(1));
        // Only inversion preserves these colors.
        assert_eq!(autos, vec![vec![0, 4, 3, 2, 1]]);
    }

    #[test]
    fn small_verdicts() {
        assert!(is_isomorphic(&cyclic(4), &elementary_abelian(2, 2).unwrap()).is_none());
        let d6 = dihedral(6).unwrap();
        let c2s3 = direct_product(&cyclic(2), &symmetric(3).unwrap()).group;
        let m = is_isomorphic(&d6, &c2s3).unwrap();
        assert!(is_isomorphism(&d6, &c2s3, &m));
        assert!(is_isomorphic(&dihedral(4).unwrap(), &quaternion8()).is_none());
        let c6 = direct_product(&cyclic(2), &cyclic(3)).group;
        assert!(is_isomorphic(&c6, &cyclic(6)).is_some());
    }
}
