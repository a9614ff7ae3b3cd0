//! How tight can a club be, given only the degree sequence?
//!
//! Compares the naive bounds on m11 and m10 with the degree-aware ones.
//! Run with `cargo run --example structural_bounds`.

use richclub::dyadic::DyadBounds;
use richclub::generators::preferential_attachment;
use richclub::DegreeSequence;

fn sweep(name: &str, ds: &DegreeSequence, sizes: impl Iterator<Item = usize>) -> richclub::Result<()> {
    println!("{name}: {} nodes, {} edges", ds.len(), ds.edge_count());
    println!("{:>5} {:>10} {:>8} {:>10} {:>8}", "n1", "m11 basic", "UBm11", "m10 basic", "UBm10");
    for n1 in sizes {
        let b = DyadBounds::from_sequence(ds, n1)?;
        println!(
            "{:>5} {:>10} {:>8} {:>10} {:>8}",
            b.n1, b.ub_m11_basic, b.ub_m11, b.ub_m10_basic, b.ub_m10
        );
    }
    println!();
    Ok(())
}

fn main() -> richclub::Result<()> {
    let star = DegreeSequence::from_degrees(vec![4, 1, 1, 1, 1]);
    sweep("star", &star, 0..=5)?;

    let g = preferential_attachment(1000, 3, 11);
    let ds = g.degree_sequence();
    sweep("preferential attachment", &ds, [2, 5, 10, 25, 50, 100, 250, 500].into_iter())?;
    Ok(())
}
