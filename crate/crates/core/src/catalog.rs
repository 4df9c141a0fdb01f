//! A built-in catalog of small groups.
//!
//! Every group of order at most 31 is present (one per isomorphism type).
//! Orders 32 to 64 carry a selection covering the standard families.
//! Pairwise non-isomorphism within each order is checked in the tests.

use crate::constructors::*;
use crate::error::Result;
use crate::group::Group;

/// Orders for which the catalog lists every isomorphism type.
pub const COMPLETE_UP_TO: usize = 31;

/// Number of groups of each order `0..=31` (index 0 unused).
pub const GROUP_COUNTS: [usize; 32] =
    [0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15, 2, 2, 5, 4, 1, 4, 1];

type Builder = fn() -> Result<Group>;

fn named(g: Group, name: &str) -> Result<Group> {
    Ok(g.with_name(name))
}

fn x(a: Group, b: Group) -> Group {
    direct_product(&a, &b).group
}

fn ab(orders: &[usize]) -> Result<Group> {
    abelian(orders)
}

fn c(n: usize) -> Group {
    cyclic(n)
}

fn d(n: usize) -> Group {
    dihedral(n).expect("dihedral")
}

fn s3() -> Group {
    symmetric(3).expect("S3")
}

fn a4() -> Group {
    alternating(4).expect("A4")
}

/// `C4 ∘ D4`, `D4 ∘ D4` and friends: amalgamate the order-2 centers.
fn central_pair(a: &Group, b: &Group) -> Result<Group> {
    let za = a.center();
    let zb = b.center();
    let ia = za.iter().find(|&z| a.element_order(z) == 2).expect("central involution");
    let ib = zb.iter().find(|&z| b.element_order(z) == 2).expect("central involution");
    let (sa, sb) = (a.generated_by(&[ia]), b.generated_by(&[ib]));
    central_product(a, b, &sa, &sb, &[(0, 0), (ia, ib)])
}

/// `(C4 × C2) ⋊ C2` with `c a c = a b`, in additive coordinates `(i, j) ↦ (i, j + i)`.
fn c4c2_c2() -> Result<Group> {
    let n = ab(&[4, 2])?;
    // Index of (i, j) in C4 × C2 is 2i + j.
    semidirect(&n, &c(2), |h, v| if h == 0 { v } else { let (i, j) = (v / 2, v % 2); 2 * i + (j + i) % 2 })
}

/// `C3 ⋊ D4` with kernel the Klein four-group `{1, r², s, s r²}`.
fn c3_d4() -> Result<Group> {
    let c3 = c(3);
    let d4 = d(4);
    let kernel = d4.set([0, 2, 4, 6]);
    semidirect(&c3, &d4, |h, v| if kernel.contains(h) { v } else { c3.inv(v) })
}

/// `C3² ⋊ C4` with the generator acting as `(a, b) ↦ (−b, a)`.
fn c3sq_c4() -> Result<Group> {
    let n = ab(&[3, 3])?;
    let rot = |v: usize| {
        let (a, b) = (v / 3, v % 3);
        ((3 - b) % 3) * 3 + a
    };
    semidirect(&n, &c(4), move |h, v| (0..h).fold(v, |acc, _| rot(acc)))
}

/// Multiplication in `F_8 = F_2[t]/(t³ + t + 1)`.
fn gf8_mul(a: usize, b: usize) -> usize {
    let mut r = 0;
    for i in 0..3 {
        if b >> i & 1 == 1 {
            r ^= a << i;
        }
    }
    for i in (3..5).rev() {
        if r >> i & 1 == 1 {
            r ^= 0b1011 << (i - 3);
        }
    }
    r
}

/// `F_8 ⋊ F_8^×`, the affine group of the line over `F_8`.
fn agl1_8() -> Result<Group> {
    let n = elementary_abelian(2, 3)?;
    let mut alpha_pow = [1usize; 7];
    for i in 1..7 {
        alpha_pow[i] = gf8_mul(alpha_pow[i - 1], 2);
    }
    semidirect(&n, &c(7), move |h, v| gf8_mul(v, alpha_pow[h]))
}

fn entries() -> Vec<(usize, &'static str, Builder)> {
    vec![
        (1, "C1", || Ok(c(1))),
        (2, "C2", || Ok(c(2))),
        (3, "C3", || Ok(c(3))),
        (4, "C4", || Ok(c(4))),
        (4, "C2^2", || elementary_abelian(2, 2)),
        (5, "C5", || Ok(c(5))),
        (6, "C6", || Ok(c(6))),
        (6, "S3", || Ok(s3())),
        (7, "C7", || Ok(c(7))),
        (8, "C8", || Ok(c(8))),
        (8, "C4xC2", || ab(&[4, 2])),
        (8, "C2^3", || elementary_abelian(2, 3)),
        (8, "D4", || Ok(d(4))),
        (8, "Q8", || Ok(quaternion8())),
        (9, "C9", || Ok(c(9))),
        (9, "C3^2", || elementary_abelian(3, 2)),
        (10, "C10", || Ok(c(10))),
        (10, "D5", || Ok(d(5))),
        (11, "C11", || Ok(c(11))),
        (12, "C12", || Ok(c(12))),
        (12, "C6xC2", || ab(&[6, 2])),
        (12, "D6", || Ok(d(6))),
        (12, "A4", || Ok(a4())),
        (12, "Dic3", || dicyclic(3)),
        (13, "C13", || Ok(c(13))),
        (14, "C14", || Ok(c(14))),
        (14, "D7", || Ok(d(7))),
        (15, "C15", || Ok(c(15))),
        (16, "C16", || Ok(c(16))),
        (16, "C4xC4", || ab(&[4, 4])),
        (16, "(C4xC2):C2", c4c2_c2),
        (16, "C4:C4", || metacyclic(4, 4, 3, 0)),
        (16, "C8xC2", || ab(&[8, 2])),
        (16, "M16", || metacyclic(8, 2, 5, 0)),
        (16, "D8", || Ok(d(8))),
        (16, "SD16", || metacyclic(8, 2, 3, 0)),
        (16, "Q16", || dicyclic(4)),
        (16, "C4xC2xC2", || ab(&[4, 2, 2])),
        (16, "C2xD4", || Ok(x(c(2), d(4)))),
        (16, "C2xQ8", || Ok(x(c(2), quaternion8()))),
        (16, "C4oD4", || central_pair(&c(4), &d(4))),
        (16, "C2^4", || elementary_abelian(2, 4)),
        (17, "C17", || Ok(c(17))),
        (18, "C18", || Ok(c(18))),
        (18, "C6xC3", || ab(&[6, 3])),
        (18, "D9", || Ok(d(9))),
        (18, "C3xS3", || Ok(x(c(3), s3()))),
        (18, "C3^2:C2", || generalized_dihedral(&elementary_abelian(3, 2)?)),
        (19, "C19", || Ok(c(19))),
        (20, "C20", || Ok(c(20))),
        (20, "C10xC2", || ab(&[10, 2])),
        (20, "D10", || Ok(d(10))),
        (20, "Dic5", || dicyclic(5)),
        (20, "F20", || metacyclic(5, 4, 2, 0)),
        (21, "C21", || Ok(c(21))),
        (21, "C7:C3", || metacyclic(7, 3, 2, 0)),
        (22, "C22", || Ok(c(22))),
        (22, "D11", || Ok(d(11))),
        (23, "C23", || Ok(c(23))),
        (24, "C3:C8", || metacyclic(3, 8, 2, 0)),
        (24, "C24", || Ok(c(24))),
        (24, "SL(2,3)", || sl2(3)),
        (24, "Dic6", || dicyclic(6)),
        (24, "C4xS3", || Ok(x(c(4), s3()))),
        (24, "D12", || Ok(d(12))),
        (24, "C2xDic3", || Ok(x(c(2), dicyclic(3)?))),
        (24, "C3:D4", c3_d4),
        (24, "C12xC2", || ab(&[12, 2])),
        (24, "C3xD4", || Ok(x(c(3), d(4)))),
        (24, "C3xQ8", || Ok(x(c(3), quaternion8()))),
        (24, "S4", || symmetric(4)),
        (24, "C2xA4", || Ok(x(c(2), a4()))),
        (24, "C2xC2xS3", || Ok(x(elementary_abelian(2, 2)?, s3()))),
        (24, "C6xC2xC2", || ab(&[6, 2, 2])),
        (25, "C25", || Ok(c(25))),
        (25, "C5^2", || elementary_abelian(5, 2)),
        (26, "C26", || Ok(c(26))),
        (26, "D13", || Ok(d(13))),
        (27, "C27", || Ok(c(27))),
        (27, "C9xC3", || ab(&[9, 3])),
        (27, "C3^3", || elementary_abelian(3, 3)),
        (27, "Heis(3)", || heisenberg(3)),
        (27, "C9:C3", || metacyclic(9, 3, 4, 0)),
        (28, "C28", || Ok(c(28))),
        (28, "C14xC2", || ab(&[14, 2])),
        (28, "D14", || Ok(d(14))),
        (28, "Dic7", || dicyclic(7)),
        (29, "C29", || Ok(c(29))),
        (30, "C30", || Ok(c(30))),
        (30, "D15", || Ok(d(15))),
        (30, "C5xS3", || Ok(x(c(5), s3()))),
        (30, "C3xD5", || Ok(x(c(3), d(5)))),
        (31, "C31", || Ok(c(31))),
        (32, "C32", || Ok(c(32))),
        (32, "C16xC2", || ab(&[16, 2])),
        (32, "C8xC4", || ab(&[8, 4])),
        (32, "C8xC2xC2", || ab(&[8, 2, 2])),
        (32, "C4xC4xC2", || ab(&[4, 4, 2])),
        (32, "C2^5", || elementary_abelian(2, 5)),
        (32, "D16", || Ok(d(16))),
        (32, "SD32", || metacyclic(16, 2, 7, 0)),
        (32, "Q32", || dicyclic(8)),
        (32, "M32", || metacyclic(16, 2, 9, 0)),
        (32, "C4:C8", || metacyclic(8, 4, 3, 0)),
        (32, "C8:C4", || metacyclic(8, 4, 5, 0)),
        (32, "C2xD8", || Ok(x(c(2), d(8)))),
        (32, "C4xD4", || Ok(x(c(4), d(4)))),
        (32, "C4xQ8", || Ok(x(c(4), quaternion8()))),
        (32, "C2xC2xD4", || Ok(x(elementary_abelian(2, 2)?, d(4)))),
        (32, "C2xC2xQ8", || Ok(x(elementary_abelian(2, 2)?, quaternion8()))),
        (32, "C2xQ16", || Ok(x(c(2), dicyclic(4)?))),
        (32, "D4oD4", || central_pair(&d(4), &d(4))),
        (32, "D4oQ8", || central_pair(&d(4), &quaternion8())),
        (36, "C36", || Ok(c(36))),
        (36, "C6xC6", || ab(&[6, 6])),
        (36, "S3xS3", || Ok(x(s3(), s3()))),
        (36, "C3xA4", || Ok(x(c(3), a4()))),
        (36, "D18", || Ok(d(18))),
        (36, "C3^2:C4", c3sq_c4),
        (36, "Dic9", || dicyclic(9)),
        (40, "C40", || Ok(c(40))),
        (40, "D20", || Ok(d(20))),
        (40, "C5:C8", || metacyclic(5, 8, 2, 0)),
        (42, "C42", || Ok(c(42))),
        (42, "F42", || metacyclic(7, 6, 3, 0)),
        (42, "D21", || Ok(d(21))),
        (48, "C48", || Ok(c(48))),
        (48, "C2xS4", || Ok(x(c(2), symmetric(4)?))),
        (48, "GL(2,3)", || gl2(3)),
        (48, "C2xSL(2,3)", || Ok(x(c(2), sl2(3)?))),
        (48, "C4xA4", || Ok(x(c(4), a4()))),
        (48, "D24", || Ok(d(24))),
        (56, "C56", || Ok(c(56))),
        (56, "D28", || Ok(d(28))),
        (56, "AGL(1,8)", agl1_8),
        (60, "C60", || Ok(c(60))),
        (60, "A5", || alternating(5)),
        (60, "D30", || Ok(d(30))),
        (60, "C5xA4", || Ok(x(c(5), a4()))),
        (64, "C64", || Ok(c(64))),
        (64, "C2^6", || elementary_abelian(2, 6)),
        (64, "C4^3", || ab(&[4, 4, 4])),
        (64, "D32", || Ok(d(32))),
        (64, "D4xD4", || Ok(x(d(4), d(4)))),
        (64, "Q8xQ8", || Ok(x(quaternion8(), quaternion8()))),
    ]
}

/// All catalog groups of order at most `max_order`, ordered by order and
/// then by catalog position.
pub fn standard_catalog(max_order: usize) -> Vec<Group> {
    entries()
        .into_iter()
        .filter(|(n, _, _)| *n <= max_order)
        .map(|(n, name, build)| {
            let g = build().unwrap_or_else(|e| panic!("catalog entry {name}: {e}"));
            assert_eq!(g.order(), n, "catalog entry {name}");
            named(g, name).expect("named")
        })
        .collect()
}

/// Catalog groups of order exactly `n`.
pub fn of_order(n: usize) -> Vec<Group> {
    entries()
        .into_iter()
        .filter(|(m, _, _)| *m == n)
        .filter_map(|(_, name, build)| build().ok().map(|g| g.with_name(name)))
        .collect()
}

/// Catalog name of a group isomorphic to `g`, if the catalog has one.
pub fn identify(g: &Group) -> Option<String> {
    of_order(g.order())
        .into_iter()
        .find(|h| crate::iso::is_isomorphic(g, h).is_some())
        .and_then(|h| h.name().map(str::to_string))
}

/// Catalog group by name.
pub fn by_name(name: &str) -> Option<Group> {
    let (n, _, build) = entries().into_iter().find(|(_, nm, _)| *nm == name)?;
    let g = build().ok()?;
    debug_assert_eq!(g.order(), n);
    named(g, name).ok()
}

/// Names of all catalog entries with their orders.
pub fn names() -> Vec<(usize, &'static str)> {
    entries().into_iter().map(|(n, name, _)| (n, name)).collect()
}

/// Same-order pairs `(i, j)` with `i < j` of indices into `groups`.
pub fn same_order_pairs(groups: &[Group]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if groups[i].order() == groups[j].order() {
                out.push((i, j));
            }
        }
    }
    out
}
