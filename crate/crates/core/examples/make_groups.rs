//! Builds groups from the constructor families, checks the group axioms on
//! the tables, and round-trips them through `.mt` and JSON.
//!
//! ```text
//! cargo run --example make_groups -- [out_dir]
//! ```

use std::path::PathBuf;

use wlgroups::constructors::{self as c, direct_product};
use wlgroups::{io, ColoredGroup, Group};

fn main() -> wlgroups::Result<()> {
    let dir: PathBuf = std::env::args().nth(1).map_or_else(|| std::env::temp_dir().join("wlg-groups"), PathBuf::from);
    std::fs::create_dir_all(&dir)?;

    let groups: Vec<(&str, Group)> = vec![
        ("C12", c::cyclic(12)),
        ("D6", c::dihedral(6)?),
        ("Q8", c::quaternion8()),
        ("Dic3", c::dicyclic(3)?),
        ("S4", c::symmetric(4)?),
        ("A5", c::alternating(5)?),
        ("C2^4", c::elementary_abelian(2, 4)?),
        ("C2xC4", c::abelian(&[2, 4])?),
        ("Heis3", c::heisenberg(3)?),
        ("SL(2,3)", c::sl2(3)?),
        ("S3xC3", direct_product(&c::symmetric(3)?, &c::cyclic(3)).group),
    ];

    for (name, g) in groups {
        // Re-validating the raw table runs the full associativity check.
        Group::validate(&g.rows())?;
        let cg = ColoredGroup::uniform(g.clone().with_name(name));
        let mt = dir.join(format!("{}.mt", name.replace(['(', ')', ','], "_")));
        let js = mt.with_extension("json");
        io::write_group(&cg, &mt)?;
        io::write_group(&cg, &js)?;
        let back = io::parse_group(&mt)?;
        assert_eq!(back.group.table(), g.table());
        assert_eq!(io::parse_group(&js)?.group.table(), g.table());
        println!(
            "{name:>8}  order {:>3}  abelian {:<5}  |Z| {:>2}  classes {:>2}",
            g.order(),
            g.is_abelian(),
            g.center().len(),
            g.conjugacy_classes().len()
        );
    }
    println!("tables written to {}", dir.display());
    Ok(())
}
