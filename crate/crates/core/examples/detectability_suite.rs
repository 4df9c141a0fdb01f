//! A small run of the detectability matrix and the composition-factor pair
//! check over the built-in catalog.
//!
//! ```text
//! cargo run --release --example detectability_suite -- [max_order]
//! ```

use std::collections::BTreeMap;

use wlgroups::harness::{report, run_detectability_suite, run_pair_suite, SuiteConfig};

fn main() -> wlgroups::Result<()> {
    let top: usize = std::env::args().nth(1).map_or(16, |s| s.parse().expect("max_order"));
    let cfg = SuiteConfig {
        max_order: BTreeMap::from([(2, top), (3, top), (4, top.min(16)), (5, 8)]),
        pair_max_k: 4,
        ..SuiteConfig::default()
    };
    let records = run_detectability_suite(&cfg)?;
    let pairs = run_pair_suite(&cfg)?;
    let rep = report(&records, &pairs);
    for (row, s) in &rep.rows {
        println!("{row:<28} pass {:>4}  fail {:>2}  below claim {:>3}", s.pass, s.fail, s.unclaimed_undetected);
    }
    println!("pairs by least separating k (0 = never): {:?}", rep.min_k_histogram);
    for f in rep.failures.iter().chain(&rep.pair_failures) {
        println!("FAIL {f}");
    }
    println!("{}", if rep.all_pass { "all rows pass" } else { "failures present" });
    Ok(())
}
