//! Standard families, direct and central products, and closure-based builders.

use std::collections::HashMap;
use std::hash::Hash;

use crate::element_set::ElementSet;
use crate::error::{Error, Result};
use crate::group::Group;

/// Largest table any constructor builds.
pub const MAX_CONSTRUCTED_ORDER: usize = 5040;

fn guard(order: usize) -> Result<()> {
    if order > MAX_CONSTRUCTED_ORDER {
        Err(Error::TooLarge(format!("order {order} exceeds {MAX_CONSTRUCTED_ORDER}")))
    } else {
        Ok(())
    }
}

pub fn cyclic(n: usize) -> Group {
    assert!(n >= 1, "cyclic group of order 0");
    let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
    Group::from_trusted(n, table).with_name(format!("C{n}"))
}

/// Dihedral group of order `2n`; element `j·n + i` is `s^j r^i`.
pub fn dihedral(n: usize) -> Result<Group> {
    if n == 0 {
        return Err(Error::Invalid("dihedral group needs n >= 1".into()));
    }
    guard(2 * n)?;
    let m = 2 * n;
    let mut table = vec![0u32; m * m];
    for a in 0..m {
        let (ja, ia) = (a / n, a % n);
        for b in 0..m {
            let (jb, ib) = (b / n, b % n);
            // s^ja r^ia s^jb r^ib = s^(ja+jb) r^(±ia + ib)
            let i = if jb == 0 { (ia + ib) % n } else { (n - ia + ib) % n };
            table[a * m + b] = (((ja + jb) % 2) * n + i) as u32;
        }
    }
    Ok(Group::from_trusted(m, table).with_name(format!("D{n}")))
}

/// `<a, b | a^m, b^n = a^s, b a b⁻¹ = a^r>` of order `mn`; element `j·m + i` is `a^i b^j`.
pub fn metacyclic(m: usize, n: usize, r: usize, s: usize) -> Result<Group> {
    if m == 0 || n == 0 {
        return Err(Error::Invalid("metacyclic parameters must be positive".into()));
    }
    let r = r % m;
    let s = s % m;
    let mut rn = 1;
    for _ in 0..n {
        rn = rn * r % m;
    }
    if rn != 1 % m || (s * r) % m != s % m || gcd(r, m) != 1 && m > 1 {
        return Err(Error::Invalid(format!("inconsistent metacyclic parameters ({m},{n},{r},{s})")));
    }
    guard(m * n)?;
    let order = m * n;
    let mut rpow = vec![1 % m; n];
    for j in 1..n {
        rpow[j] = rpow[j - 1] * r % m;
    }
    let mut table = vec![0u32; order * order];
    for x in 0..order {
        let (j, i) = (x / m, x % m);
        for y in 0..order {
            let (l, k) = (y / m, y % m);
            // a^i b^j a^k b^l = a^(i + k r^j) b^(j+l)
            let mut e = (i + k * rpow[j]) % m;
            let mut f = j + l;
            if f >= n {
                f -= n;
                e = (e + s) % m;
            }
            table[x * order + y] = (f * m + e) as u32;
        }
    }
    Ok(Group::from_trusted(order, table))
}

pub fn quaternion8() -> Group {
    metacyclic(4, 2, 3, 2).expect("Q8 parameters").with_name("Q8")
}

/// Dicyclic group of order `4n`.
pub fn dicyclic(n: usize) -> Result<Group> {
    let name = if n.is_power_of_two() && n >= 2 { format!("Q{}", 4 * n) } else { format!("Dic{n}") };
    Ok(metacyclic(2 * n, 2, 2 * n - 1, n)?.with_name(name))
}

fn permutations_lex(m: usize) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = (0..m as u8).collect();
    let mut out = vec![cur.clone()];
    loop {
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
        out.push(cur.clone());
    }
    out
}

fn is_even(p: &[u8]) -> bool {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2 == 0
}

fn permutation_group(perms: Vec<Vec<u8>>) -> Group {
    let n = perms.len();
    let index: HashMap<&[u8], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut table = vec![0u32; n * n];
    let mut buf = vec![0u8; perms.first().map_or(0, Vec::len)];
    for (a, p) in perms.iter().enumerate() {
        for (b, q) in perms.iter().enumerate() {
            // (p·q)(i) = p(q(i))
            for (i, slot) in buf.iter_mut().enumerate() {
                *slot = p[q[i] as usize];
            }
            table[a * n + b] = index[buf.as_slice()] as u32;
        }
    }
    Group::from_trusted(n, table)
}

/// Symmetric group on `m ≤ 7` points, permutations in lexicographic order.
pub fn symmetric(m: usize) -> Result<Group> {
    if m > 7 {
        return Err(Error::TooLarge(format!("S{m} table exceeds the memory guard")));
    }
    Ok(permutation_group(permutations_lex(m.max(1))).with_name(format!("S{m}")))
}

pub fn alternating(m: usize) -> Result<Group> {
    if m > 7 {
        return Err(Error::TooLarge(format!("A{m} table exceeds the memory guard")));
    }
    let perms = permutations_lex(m.max(1)).into_iter().filter(|p| is_even(p)).collect();
    Ok(permutation_group(perms).with_name(format!("A{m}")))
}

pub fn elementary_abelian(p: usize, e: u32) -> Result<Group> {
    if p < 2 || !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let order = p.checked_pow(e).ok_or_else(|| Error::TooLarge(format!("{p}^{e}")))?;
    guard(order)?;
    let table = (0..order)
        .flat_map(|a| {
            (0..order).map(move |b| {
                let (mut x, mut y, mut out, mut place) = (a, b, 0, 1);
                for _ in 0..e {
                    out += ((x % p + y % p) % p) * place;
                    x /= p;
                    y /= p;
                    place *= p;
                }
                out as u32
            })
        })
        .collect();
    Ok(Group::from_trusted(order, table).with_name(if e == 1 { format!("C{p}") } else { format!("C{p}^{e}") }))
}

/// Product of cyclic groups of the given orders.
pub fn abelian(orders: &[usize]) -> Result<Group> {
    let mut g = cyclic(1);
    for &m in orders {
        g = direct_product(&g, &cyclic(m)).group;
        guard(g.order())?;
    }
    let name = if orders.is_empty() {
        "C1".to_string()
    } else {
        orders.iter().map(|m| format!("C{m}")).collect::<Vec<_>>().join("x")
    };
    Ok(g.with_name(name))
}

/// `G × H` with its projections and embeddings.
#[derive(Clone, Debug)]
pub struct DirectProduct {
    pub group: Group,
    pub left_order: usize,
    pub right_order: usize,
}

impl DirectProduct {
    pub fn pair(&self, g: usize, h: usize) -> usize {
        g * self.right_order + h
    }
    pub fn left(&self, x: usize) -> usize {
        x / self.right_order
    }
    pub fn right(&self, x: usize) -> usize {
        x % self.right_order
    }
    /// `G × 1` as a subset.
    pub fn left_factor(&self) -> ElementSet {
        ElementSet::from_elements(self.group.order(), (0..self.left_order).map(|g| self.pair(g, 0)))
    }
    /// `1 × H` as a subset.
    pub fn right_factor(&self) -> ElementSet {
        ElementSet::from_elements(self.group.order(), (0..self.right_order).map(|h| self.pair(0, h)))
    }
}

pub fn direct_product(g: &Group, h: &Group) -> DirectProduct {
    let (a, b) = (g.order(), h.order());
    let n = a * b;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (x1, x2) = (x / b, x % b);
        for y in 0..n {
            let (y1, y2) = (y / b, y % b);
            table[x * n + y] = (g.mul(x1, y1) * b + h.mul(x2, y2)) as u32;
        }
    }
    let name = format!("{}x{}", g.name().unwrap_or("G"), h.name().unwrap_or("H"));
    DirectProduct { group: Group::from_trusted(n, table).with_name(name), left_order: a, right_order: b }
}

/// `(G × H) / {(z, φ(z⁻¹)) | z ∈ Z1}` for central `Z1 ≤ G`, `Z2 ≤ H`
/// and an isomorphism `φ: Z1 → Z2` given as `(z, φ(z))` pairs.
pub fn central_product(g: &Group, h: &Group, z1: &ElementSet, z2: &ElementSet, phi: &[(usize, usize)]) -> Result<Group> {
    let zg = g.center();
    let zh = h.center();
    if !g.is_subgroup(z1) || !h.is_subgroup(z2) || !z1.is_subset(&zg) || !z2.is_subset(&zh) {
        return Err(Error::NotCentral);
    }
    let mut map = vec![usize::MAX; g.order()];
    for &(a, b) in phi {
        if !z1.contains(a) || !z2.contains(b) || map[a] != usize::MAX {
            return Err(Error::NotIsomorphism(format!("bad pair ({a}, {b})")));
        }
        map[a] = b;
    }
    let dom = z1.to_vec();
    if dom.iter().any(|&a| map[a] == usize::MAX) {
        return Err(Error::NotIsomorphism("mapping does not cover Z1".into()));
    }
    let image = ElementSet::from_elements(h.order(), dom.iter().map(|&a| map[a]));
    if image != *z2 {
        return Err(Error::NotIsomorphism("mapping is not onto Z2".into()));
    }
    for &a in &dom {
        for &b in &dom {
            if map[g.mul(a, b)] != h.mul(map[a], map[b]) {
                return Err(Error::NotIsomorphism(format!("not multiplicative at ({a}, {b})")));
            }
        }
    }
    let dp = direct_product(g, h);
    let kernel = ElementSet::from_elements(dp.group.order(), dom.iter().map(|&a| dp.pair(a, map[g.inv(a)])));
    let q = dp.group.quotient_group(&kernel)?;
    let name = format!("{}o{}", g.name().unwrap_or("G"), h.name().unwrap_or("H"));
    Ok(q.group.with_name(name))
}

/// Group generated by `gens` under `mul`, elements in breadth-first discovery
/// order from `identity`.
pub fn from_closure<T, F>(identity: T, gens: &[T], mul: F) -> Result<Group>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut elems = vec![identity.clone()];
    let mut index: HashMap<T, usize> = HashMap::from([(identity, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for s in gens {
            let y = mul(&elems[i], s);
            if !index.contains_key(&y) {
                index.insert(y.clone(), elems.len());
                elems.push(y);
                guard(elems.len())?;
            }
        }
        i += 1;
    }
    let n = elems.len();
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&mul(&elems[a], &elems[b])] as u32;
        }
    }
    Group::validate_flat(n, table)
}

type Mat2 = [u32; 4];

fn mat_mul(p: u32) -> impl Fn(&Mat2, &Mat2) -> Mat2 {
    move |a, b| {
        [
            (a[0] * b[0] + a[1] * b[2]) % p,
            (a[0] * b[1] + a[1] * b[3]) % p,
            (a[2] * b[0] + a[3] * b[2]) % p,
            (a[2] * b[1] + a[3] * b[3]) % p,
        ]
    }
}

fn primitive_root(p: u32) -> u32 {
    (1..p)
        .find(|&g| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * g % p;
                x != 1
            })
        })
        .unwrap_or(1)
}

pub fn gl2(p: usize) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let q = p as u32;
    let g = primitive_root(q);
    let gens = [[1, 1, 0, 1], [1, 0, 1, 1], [g, 0, 0, 1]];
    Ok(from_closure([1, 0, 0, 1], &gens, mat_mul(q))?.with_name(format!("GL(2,{p})")))
}

pub fn sl2(p: usize) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let q = p as u32;
    let gens = [[1, 1, 0, 1], [1, 0, 1, 1]];
    Ok(from_closure([1, 0, 0, 1], &gens, mat_mul(q))?.with_name(format!("SL(2,{p})")))
}

/// Upper unitriangular 3×3 matrices over `F_p`.
pub fn heisenberg(p: usize) -> Result<Group> {
    if !is_prime(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let mul = move |x: &(usize, usize, usize), y: &(usize, usize, usize)| {
        ((x.0 + y.0) % p, (x.1 + y.1) % p, (x.2 + y.2 + x.0 * y.1) % p)
    };
    Ok(from_closure((0, 0, 0), &[(1, 0, 0), (0, 1, 0)], mul)?.with_name(format!("Heis({p})")))
}

/// `A ⋊ C2` with the generator of `C2` acting by inversion on abelian `A`.
pub fn generalized_dihedral(a: &Group) -> Result<Group> {
    if !a.is_abelian() {
        return Err(Error::Invalid("generalized dihedral needs an abelian group".into()));
    }
    let mut gens: Vec<(usize, u8)> = (1..a.order()).map(|x| (x, 0)).collect();
    gens.push((0, 1));
    let mul = |x: &(usize, u8), y: &(usize, u8)| {
        let b = if x.1 == 1 { a.inv(y.0) } else { y.0 };
        (a.mul(x.0, b), x.1 ^ y.1)
    };
    Ok(from_closure((0, 0), &gens, mul)?.with_name(format!("Dih({})", a.name().unwrap_or("A"))))
}

/// `N ⋊ H` with `(n1, h1)(n2, h2) = (n1 · h1(n2), h1 h2)`, where
/// `act(h, x)` is the image of `x ∈ N` under `h`. Element `(x, h)` has index
/// `h·|N| + x`. The table is validated, so a map that is not an action by
/// automorphisms is rejected.
pub fn semidirect(n: &Group, h: &Group, act: impl Fn(usize, usize) -> usize) -> Result<Group> {
    let (a, b) = (n.order(), h.order());
    let order = a * b;
    guard(order)?;
    let images: Vec<Vec<usize>> = (0..b).map(|y| (0..a).map(|x| act(y, x)).collect()).collect();
    let mut table = vec![0u32; order * order];
    for u in 0..order {
        let (x1, y1) = (u % a, u / a);
        for v in 0..order {
            let (x2, y2) = (v % a, v / a);
            table[u * order + v] = (h.mul(y1, y2) * a + n.mul(x1, images[y1][x2])) as u32;
        }
    }
    let name = format!("{}:{}", n.name().unwrap_or("N"), h.name().unwrap_or("H"));
    Ok(Group::validate_flat(order, table)?.with_name(name))
}

/// Relabels `g` by a permutation fixing `0`; `perm[old] = new`.
pub fn relabel(g: &Group, perm: &[usize]) -> Result<Group> {
    let n = g.order();
    if perm.len() != n || perm[0] != 0 {
        return Err(Error::Invalid("relabelling must fix the identity".into()));
    }
    let mut inv = vec![usize::MAX; n];
    for (old, &new) in perm.iter().enumerate() {
        if new >= n || inv[new] != usize::MAX {
            return Err(Error::Invalid("relabelling is not a permutation".into()));
        }
        inv[new] = old;
    }
    let mut table = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = perm[g.mul(inv[a], inv[b])] as u32;
        }
    }
    let mut out = Group::from_trusted(n, table);
    out.set_name(g.name().map(|s| format!("{s}'")));
    Ok(out)
}

pub fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
