//! Least dimension at which k-WL separates same-order catalog groups.
//!
//! ```text
//! cargo run --release --example wl_compare -- [order] [max_k]
//! ```

use wlgroups::catalog;
use wlgroups::wl::{joint_compare, Version};
use wlgroups::ColoredGroup;

fn main() -> wlgroups::Result<()> {
    let mut args = std::env::args().skip(1);
    let order: usize = args.next().map_or(16, |s| s.parse().expect("order"));
    let max_k: usize = args.next().map_or(3, |s| s.parse().expect("max_k"));

    let groups: Vec<ColoredGroup> = catalog::of_order(order).into_iter().map(ColoredGroup::uniform).collect();
    println!("{} groups of order {order}", groups.len());
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            let (g, h) = (&groups[i], &groups[j]);
            let mut found = None;
            'k: for k in 2..=max_k {
                for v in [Version::II, Version::I] {
                    let verdict = joint_compare(g, h, k, v)?;
                    if !verdict.equivalent {
                        found = Some((k, v, verdict.first_distinguishing_round.unwrap_or(0)));
                        break 'k;
                    }
                }
            }
            let a = g.group.name().unwrap_or("?");
            let b = h.group.name().unwrap_or("?");
            match found {
                Some((k, v, r)) => println!("{a:>10} vs {b:<10} {k}-WL_{v}, round {r}"),
                None => println!("{a:>10} vs {b:<10} not separated up to k={max_k}"),
            }
        }
    }
    Ok(())
}
