//! The five-node star, by hand and by library.
//!
//! Run with `cargo run --example star_worked_example`.

use richclub::generators::star;
use richclub::richclub::{point, profile};

fn main() -> richclub::Result<()> {
    let g = star(5);
    println!("star: N={} M={} degrees={:?}", g.node_count(), g.edge_count(), g.degrees());

    // k = 0 keeps every node: 4 edges among C(5,2) = 10 pairs, but the
    // degree sequence only allows 4 of them.
    let p = point(&g, 0);
    println!("k=0  n1={} m11={} ub_m11={}", p.n1, p.m11, p.ub_m11);
    println!("     phi={:?} phi_new={:?} delta={:?}", p.phi, p.phi_new, p.delta);

    // k = 1 keeps only the hub; every edge crosses the club boundary.
    let p = point(&g, 1);
    println!("k=1  n1={} m10={} ub_m10={} phi_bar={:?}", p.n1, p.m10, p.ub_m10, p.phi_bar);

    println!();
    println!("{:>3} {:>3} {:>8} {:>8} {:>8} {:>8}", "k", "n1", "phi", "phi_new", "phi_bar", "delta");
    let show = |c: richclub::Coefficient| c.value().map_or("-".to_string(), |v| format!("{v:.3}"));
    for p in profile(&g, None)?.points {
        println!(
            "{:>3} {:>3} {:>8} {:>8} {:>8} {:>8}",
            p.k,
            p.n1,
            show(p.phi),
            show(p.phi_new),
            show(p.phi_bar),
            show(p.delta)
        );
    }
    Ok(())
}
