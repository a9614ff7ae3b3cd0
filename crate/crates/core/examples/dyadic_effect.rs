//! Dyadicity and heterophilicity of a node attribute.
//!
//! Run with `cargo run --example dyadic_effect`.

use std::io::Cursor;

use richclub::characteristic::{count_dyads, read_characteristic, Characteristic, RankMode};
use richclub::dyadic::{dyadicity, expected_dyads, heterophilicity};
use richclub::generators::preferential_attachment;
use richclub::{load_edge_list, Graph, LoadOptions};

fn report(name: &str, g: &Graph, c: &Characteristic) -> richclub::Result<()> {
    let counts = count_dyads(g, c);
    let exp = expected_dyads(g, c.n1())?;
    let d = dyadicity(&counts, &exp).map_or("undefined".into(), |v| format!("{v:.3}"));
    let h = heterophilicity(&counts, &exp).map_or("undefined".into(), |v| format!("{v:.3}"));
    println!(
        "{name:<18} n1={:<4} m11={:<4} (expected {:>7.2})  m10={:<4} (expected {:>7.2})  D={d} H={h}",
        c.n1(),
        counts.m11,
        exp.expected_m11,
        counts.m10,
        exp.expected_m10,
    );
    Ok(())
}

fn main() -> richclub::Result<()> {
    // a - b - c with a and b marked
    let path = load_edge_list(Cursor::new("a b\nb c\n"), LoadOptions::default())?;
    let marks = read_characteristic(&path, Cursor::new("a\t1\nb\t1\nc\t0\n"))?;
    report("path a-b-c", &path, &marks)?;
    let none = read_characteristic(&path, Cursor::new("a\t0\nb\t0\nc\t0\n"))?;
    report("nothing marked", &path, &none)?;

    // Hubs of a preferential-attachment graph against its periphery.
    let g = preferential_attachment(300, 2, 1);
    for n1 in [5, 20, 60] {
        let hubs = Characteristic::top_n(&g, n1, RankMode::Highest)?;
        report(&format!("top {n1} hubs"), &g, &hubs)?;
        let leaves = Characteristic::top_n(&g, n1, RankMode::Lowest)?;
        report(&format!("bottom {n1}"), &g, &leaves)?;
    }
    Ok(())
}
