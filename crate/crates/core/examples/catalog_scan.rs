//! Loads a directory of group tables and names each one against the
//! built-in catalog.
//!
//! ```text
//! cargo run --release --example catalog_scan -- DIR
//! ```

use wlgroups::{catalog, io};

fn main() -> wlgroups::Result<()> {
    let Some(dir) = std::env::args().nth(1) else {
        for (n, count) in catalog::GROUP_COUNTS.iter().enumerate().skip(1) {
            println!("order {n:>2}: {count} groups, {} in catalog", catalog::of_order(n).len());
        }
        return Ok(());
    };
    for entry in io::scan_catalog(&dir)? {
        let cg = io::parse_group(&entry.path)?;
        let known = catalog::identify(&cg.group).unwrap_or_else(|| "-".into());
        println!("{:<30} order {:>3}  id {:?}  is {known}", entry.name, entry.order, entry.id);
    }
    Ok(())
}
