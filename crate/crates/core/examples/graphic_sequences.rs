//! Which degree sequences does some simple graph realize?
//!
//! Run with `cargo run --example graphic_sequences -- 3 3 2 2 2`.

use richclub::degree::{graphic_verdict, GraphicVerdict};

fn main() {
    let given: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let samples: Vec<Vec<usize>> = if given.is_empty() {
        vec![
            vec![4, 1, 1, 1, 1],
            vec![3, 3, 3, 3],
            vec![3, 1, 1],
            vec![3, 3, 1, 1],
            vec![5, 5, 4, 3, 2, 2, 2, 1],
            vec![6, 6, 6, 6, 6, 6, 6],
            vec![7, 1, 1, 1, 1, 1, 1],
        ]
    } else {
        vec![given]
    };
    for seq in samples {
        match graphic_verdict(&seq) {
            GraphicVerdict::Graphic => println!("{seq:?}: graphic"),
            v => println!("{seq:?}: not graphic, {v}"),
        }
    }
}
