//! Rich-club ordering and dyadic-effect measures on undirected simple graphs.
//!
//! The rich club at degree threshold `k` is the set of nodes with degree
//! greater than `k`. Flagging those nodes with a binary characteristic turns
//! club statistics into dyad counts: `m11` edges inside the club, `m10`
//! feeder edges to the rest, and `m00` edges among the rest. This crate
//! computes those counts, the classic coefficient `phi(k)`, its
//! degree-sequence-aware refinements `phi_new(k)` and `phi_bar(k)`, and
//! their normalizations against a degree-preserving null ensemble.
//!
//! ```
//! use richclub::generators::star;
//! use richclub::richclub::{phi, phi_new, Coefficient};
//!
//! let g = star(5);
//! assert_eq!(phi(&g, 0), Coefficient::Value(0.4));
//! assert_eq!(phi_new(&g, 0), Coefficient::Value(1.0));
//! ```

pub mod characteristic;
pub mod cli;
pub mod degree;
pub mod dyadic;
pub mod ensemble;
pub mod error;
pub mod generators;
pub mod graph;
pub mod report;
pub mod richclub;

pub use characteristic::{count_dyads, Characteristic, DyadCounts, RankMode};
pub use degree::{is_graphic, DegreeSequence};
pub use dyadic::{DyadBounds, DyadExpectation};
pub use ensemble::{EnsembleConfig, EnsembleTable, NormalizedPoint};
pub use error::{Error, Result};
pub use graph::{load_edge_list, Graph, LoadOptions};
pub use report::AnalysisReport;
pub use richclub::{Coefficient, RichClubPoint, RichClubProfile};
