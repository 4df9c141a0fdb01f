//! Stable k-WL coloring of one group, with per-round class counts.
//!
//! ```text
//! cargo run --release --example wl_refine -- [k] [I|II] [family] [param]
//! ```

use std::time::Instant;

use wlgroups::constructors::{abelian, dihedral, elementary_abelian, symmetric};
use wlgroups::wl::{element_coloring, stable_coloring, Version};
use wlgroups::ColoredGroup;

fn main() -> wlgroups::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let k: usize = args.first().map_or(3, |s| s.parse().expect("k"));
    let version: Version = args.get(1).map_or(Ok(Version::II), |s| s.parse())?;
    let family = args.get(2).map_or("dihedral", String::as_str);
    let param: usize = args.get(3).map_or(8, |s| s.parse().expect("parameter"));
    let group = match family {
        "dihedral" => dihedral(param)?,
        "symmetric" => symmetric(param)?,
        "elementary2" => elementary_abelian(2, param as u32)?,
        "cyclic" => abelian(&[param])?,
        other => panic!("unknown family {other}"),
    };
    let cg = ColoredGroup::uniform(group);
    let start = Instant::now();
    let c = stable_coloring(&cg, k, version)?;
    println!(
        "{:?}: {k}-WL_{version} stable after {} rounds, class counts {:?}, {:.2?}",
        cg.group,
        c.rounds,
        c.history,
        start.elapsed()
    );
    let ec = element_coloring(&c);
    let classes = ec.iter().max().map_or(0, |m| m + 1);
    println!("element classes: {classes}");
    Ok(())
}
