//! Read an edge list, rewire it, write it back out.
//!
//! Run with `cargo run --example randomize_edge_list [edges.txt]`; without
//! an argument a small built-in graph is used.

use std::io::{self, Cursor};

use richclub::ensemble::{randomize, EnsembleConfig};
use richclub::graph::{read_edge_list, write_edge_list};
use richclub::{load_edge_list, LoadOptions};

const FRIENDS: &str = "\
# who knows whom
alice bob
alice carol
alice dave
alice erin
bob carol
bob frank
carol dave
dave erin
erin frank
frank grace
grace heidi
heidi alice
";

fn main() -> richclub::Result<()> {
    let opts = LoadOptions::default();
    let g = match std::env::args().nth(1) {
        Some(path) => read_edge_list(path, opts)?,
        None => load_edge_list(Cursor::new(FRIENDS), opts)?,
    };
    let cfg = EnsembleConfig { master_seed: 5, ..Default::default() };
    let rewired = randomize(&g, &cfg, 0)?;
    eprintln!("N={} M={}, degrees preserved: {}", g.node_count(), g.edge_count(), rewired.degrees() == g.degrees());
    write_edge_list(&rewired, io::stdout().lock())
}
