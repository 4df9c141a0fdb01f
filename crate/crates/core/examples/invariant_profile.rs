//! Characteristic subgroups and series of a catalog group.
//!
//! ```text
//! cargo run --release --example invariant_profile -- [NAME]
//! ```

use wlgroups::catalog;
use wlgroups::invariants::*;
use wlgroups::products::splitting_elements;

fn main() -> wlgroups::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "C3:D4".into());
    let g = catalog::by_name(&name).unwrap_or_else(|| panic!("no catalog group {name}"));
    println!("{name}: {}", GroupLabel::of(&g));

    println!("  |Z(G)|            {}", g.center().len());
    println!("  |G'|              {}", g.derived_subgroup().len());
    println!("  solvable radical  {}", solvable_radical(&g).len());
    println!("  Fitting           {}", fitting(&g).len());
    for p in g.prime_divisors() {
        println!("  O_{p}              {}", pi_radical(&g, &[p]).len());
    }
    let a = abelian_radical(&g)?;
    println!("  abelian closure   {} elements, largest normal abelian {:?}", a.elements.len(), a.largest.map(|s| s.len()));

    let soc = socle(&g)?;
    println!("  socle             {} ({} minimal normal)", soc.socle.len(), soc.minimal_normals.len());
    println!("  splitting elems   {}", splitting_elements(&g)?.len());

    for (what, s) in [("derived", derived_series(&g)?), ("lower central", lower_central(&g)?), ("upper central", upper_central(&g)?)] {
        let orders: Vec<usize> = s.terms.iter().map(|t| t.len()).collect();
        let labels: Vec<String> = s.quotient_labels.iter().map(|l| l.to_string()).collect();
        println!("  {what:<14} {orders:?}  sections {labels:?}");
    }
    println!("  nilpotency class  {:?}", nilpotency_class(&g)?);
    println!("  composition       {:?}", composition_factors(&g)?.multiset());
    println!("  {:?}", classify_special(&g)?);
    Ok(())
}
