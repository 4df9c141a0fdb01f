//! Solution sets of group expressions and their projections.
//!
//! ```text
//! cargo run --example group_expressions
//! ```

use wlgroups::expressions::{sol_exists, sol_forall, solutions, GroupExpression, SubsetSelector as S};
use wlgroups::{catalog, ColoredGroup};

fn main() -> wlgroups::Result<()> {
    let cg = ColoredGroup::uniform(catalog::by_name("SL(2,3)").expect("catalog"));
    let g = &cg.group;

    // Commutators [x1, x2]: the first coordinate of solutions of x3^-1 x1^-1 x2^-1 x1 x2.
    let comm = GroupExpression::parse(vec![S::Id, S::Id, S::Id], &["x3^-1 x1^-1 x2^-1 x1 x2"])?;
    let commutators = sol_exists(&comm, &cg, 2)?;
    println!("commutators: {} elements, derived subgroup has {}", commutators.len(), g.derived_subgroup().len());

    // Central elements: x1 with [x1, x2] = 1 for every x2.
    let central = GroupExpression::parse(vec![S::Id, S::Id], &["x1^-1 x2^-1 x1 x2"])?;
    let z = sol_forall(&central, &cg, 0)?;
    assert_eq!(z, g.center());
    println!("center via forall: {:?}", z);

    // Square roots of the central involution among elements of order 4.
    let roots = GroupExpression::parse(vec![S::OfOrder(4), S::Center.intersection(S::OfOrder(2))], &["x1 x1 x2^-1"])?;
    let sols = solutions(&roots, &cg)?;
    println!("{} pairs (x, z) with x^2 = z, |x| = 4, z central of order 2", sols.len());

    let threes = S::PiElements(vec![3]).complement();
    println!("{} = {} elements", threes.name(), threes.apply(&cg).len());
    Ok(())
}
