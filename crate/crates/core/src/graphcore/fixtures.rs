//! Reference level graphs shipped with the crate, as JSON documents.
//!
//! Each document may carry an `expectations` block with the frozen values the
//! command-line `verify` suite checks against.

use super::{load_level_graph, LevelStructure, Multigraph};

pub const FIG1: &str = include_str!("../../fixtures/fig1.json");
pub const FIG2: &str = include_str!("../../fixtures/fig2.json");
pub const K4: &str = include_str!("../../fixtures/k4.json");
pub const C3: &str = include_str!("../../fixtures/c3.json");
pub const LOOP1: &str = include_str!("../../fixtures/loop1.json");

/// `(name, document)` for every fixture.
pub const ALL: [(&str, &str); 5] = [
    ("FIG1", FIG1),
    ("FIG2", FIG2),
    ("K4", K4),
    ("C3", C3),
    ("LOOP1", LOOP1),
];

/// Looks a fixture up by (case-insensitive) name.
pub fn document(name: &str) -> Option<&'static str> {
    ALL.iter()
        .find(|(n, _)| n.eq_ignore_ascii_case(name))
        .map(|&(_, d)| d)
}

/// Parses a shipped fixture; panics on unknown names.
pub fn load(name: &str) -> (Multigraph, LevelStructure) {
    let doc = document(name).unwrap_or_else(|| panic!("no fixture named {name}"));
    load_level_graph(doc).expect("shipped fixtures are valid")
}
