//! Weisfeiler-Leman refinement on finite groups given by multiplication
//! tables, with exact oracles for the group invariants it detects.

pub mod catalog;
pub mod constructors;
pub mod element_set;
pub mod error;
pub mod expressions;
pub mod group;
pub mod harness;
pub mod invariants;
pub mod io;
pub mod iso;
pub mod matching;
pub mod pebble;
pub mod products;
pub mod wl;

pub use element_set::ElementSet;
pub use error::{Error, Result};
pub use group::{ColoredGroup, Group};
