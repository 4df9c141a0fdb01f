//! Solves the bijective pebble game on a pair of small groups and checks it
//! against joint k-WL refinement tuple by tuple.
//!
//! ```text
//! cargo run --release --example pebble_game -- [A] [B] [pebbles]
//! ```

use wlgroups::catalog;
use wlgroups::pebble::{check_game_wl_equivalence, solve_game, GameOptions, PebbleConfig, Winner};
use wlgroups::wl::{joint_compare, Version};
use wlgroups::ColoredGroup;

fn group(name: &str) -> ColoredGroup {
    ColoredGroup::uniform(catalog::by_name(name).unwrap_or_else(|| panic!("no catalog group {name}")))
}

fn main() -> wlgroups::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let g = group(args.first().map_or("D4", String::as_str));
    let h = group(args.get(1).map_or("Q8", String::as_str));
    let pebbles: usize = args.get(2).map_or(3, |s| s.parse().expect("pebbles"));
    let k = pebbles - 1;

    for v in [Version::I, Version::II] {
        let sol = solve_game(&g, &h, pebbles, v, &GameOptions::default())?;
        let start = PebbleConfig::empty(pebbles);
        let winner = sol.winner(&start);
        let wl = joint_compare(&g, &h, k, v)?;
        println!(
            "Version {v}: {winner:?} wins ({} of {} states lost for Duplicator, {} sweeps); {k}-WL says {}",
            sol.spoiler_states(),
            sol.states(),
            sol.sweeps,
            if wl.equivalent { "equivalent" } else { "distinguished" }
        );
        assert_eq!(winner == Winner::Duplicator, wl.equivalent);
        if let Some(x) = sol.spoiler_move(&start) {
            println!("  Spoiler opens by picking up pebble {x}");
        }
    }

    // Every k-tuple pair: same stable color iff Duplicator wins from it.
    let report = check_game_wl_equivalence(&g, &h, 2, Version::II)?;
    println!("k=2 Version II: {} tuple pairs, {} mismatches", report.pairs_checked, report.mismatches.len());
    Ok(())
}
