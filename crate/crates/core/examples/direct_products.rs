//! Direct factors, non-abelian components and the component-wise central
//! filtration of a product of catalog groups.
//!
//! ```text
//! cargo run --release --example direct_products -- [A] [B]
//! ```

use wlgroups::catalog;
use wlgroups::constructors::direct_product;
use wlgroups::invariants::GroupLabel;
use wlgroups::products::*;

fn main() -> wlgroups::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let a = catalog::by_name(args.first().map_or("D4", String::as_str)).expect("catalog name");
    let b = catalog::by_name(args.get(1).map_or("S3", String::as_str)).expect("catalog name");
    let p = direct_product(&a, &b);
    let g = &p.group;
    println!("{} x {}: order {}", GroupLabel::of(&a), GroupLabel::of(&b), g.order());

    let dec = direct_factorization(g)?;
    for (f, ab) in dec.factors.iter().zip(&dec.abelian) {
        let sub = g.as_group(f)?;
        println!("  factor {:<12} abelian {ab}", GroupLabel::of(&sub.group).to_string());
    }

    let comps = nonabelian_components(g)?;
    println!("  |M| = {}, {} components", comps.m.len(), comps.components.len());
    for n in &comps.subgroups {
        println!("    N_i of order {}", n.len());
    }

    let f = build_filtration(g, &dec)?;
    let orders: Vec<usize> = f.distinct_terms().iter().map(|t| t.len()).collect();
    println!("  central filtration {orders:?}, sides {:?}", f.tags);

    let full: Vec<usize> = (0..g.order()).filter(|&x| is_full(g, x).ok().flatten().is_some()).collect();
    println!("  {} full elements", full.len());
    Ok(())
}
