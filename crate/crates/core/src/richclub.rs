//! Rich-club coefficients over a degree threshold `k`.
//!
//! At level `k` the club is every node with degree `> k`; in dyad terms the
//! club is the set of 1-nodes, its internal edges are `m11` and the feeder
//! edges are `m10`. Coefficients that would divide by zero are reported as
//! [`Coefficient::Undefined`] with the reason, never as a fabricated zero.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::characteristic::{count_dyads, threshold_dyads, Characteristic, DyadCounts};
use crate::degree::DegreeSequence;
use crate::dyadic::{ub_m10, ub_m11};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UndefinedCause {
    /// The club (or its complement) is too small for the ratio to exist.
    DegenerateClub,
    /// The structural bound in the denominator is zero.
    ZeroBound,
    /// The ensemble average in the denominator is zero.
    ZeroEnsembleMean,
    /// Derived from another coefficient that is undefined.
    UndefinedInput,
}

impl fmt::Display for UndefinedCause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UndefinedCause::DegenerateClub => "degenerate club",
            UndefinedCause::ZeroBound => "zero upper bound",
            UndefinedCause::ZeroEnsembleMean => "zero ensemble mean",
            UndefinedCause::UndefinedInput => "undefined input",
        })
    }
}

/// A real-valued coefficient that may be undefined.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Coefficient {
    Value(f64),
    Undefined(UndefinedCause),
}

impl Coefficient {
    pub fn value(self) -> Option<f64> {
        match self {
            Coefficient::Value(v) => Some(v),
            Coefficient::Undefined(_) => None,
        }
    }

    pub fn is_defined(self) -> bool {
        matches!(self, Coefficient::Value(_))
    }

    pub fn cause(self) -> Option<UndefinedCause> {
        match self {
            Coefficient::Value(_) => None,
            Coefficient::Undefined(c) => Some(c),
        }
    }

    /// `numerator / denominator`, undefined with `cause` when the denominator is zero.
    pub fn ratio(numerator: f64, denominator: f64, cause: UndefinedCause) -> Self {
        if denominator == 0.0 {
            Coefficient::Undefined(cause)
        } else {
            Coefficient::Value(numerator / denominator)
        }
    }
}

impl Serialize for Coefficient {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.value().serialize(s)
    }
}

fn binom2(n: usize) -> u64 {
    (n as u64) * (n as u64).saturating_sub(1) / 2
}

/// Classic form `2 E / (N (N - 1))` over the `n_above` club nodes.
pub fn phi_classic(edges_within: u64, n_above: usize) -> Coefficient {
    if n_above < 2 {
        return Coefficient::Undefined(UndefinedCause::DegenerateClub);
    }
    let n = n_above as u64;
    Coefficient::Value((2 * edges_within) as f64 / (n * (n - 1)) as f64)
}

/// Dyadic form `m11 / C(n1, 2)`; identical to [`phi_classic`] bit for bit.
pub fn phi_dyadic(m11: u64, n1: usize) -> Coefficient {
    if n1 < 2 {
        return Coefficient::Undefined(UndefinedCause::DegenerateClub);
    }
    Coefficient::Value(m11 as f64 / binom2(n1) as f64)
}

fn bound_ratio(count: u64, bound: u64, degenerate: bool) -> Coefficient {
    if bound == 0 {
        let cause = if degenerate {
            UndefinedCause::DegenerateClub
        } else {
            UndefinedCause::ZeroBound
        };
        return Coefficient::Undefined(cause);
    }
    Coefficient::Value(count as f64 / bound as f64)
}

/// Relative gain `(phi_new - phi) / phi_new`; zero when both are zero.
pub fn delta(phi: Coefficient, phi_new: Coefficient) -> Coefficient {
    match (phi, phi_new) {
        (Coefficient::Value(old), Coefficient::Value(new)) => {
            if new == 0.0 {
                Coefficient::Value(0.0)
            } else {
                Coefficient::Value((new - old) / new)
            }
        }
        _ => Coefficient::Undefined(UndefinedCause::UndefinedInput),
    }
}

/// Every coefficient at one threshold `k`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RichClubPoint {
    pub k: usize,
    pub n1: usize,
    pub n0: usize,
    pub m11: u64,
    pub m10: u64,
    pub m00: u64,
    pub ub_m11: u64,
    pub ub_m10: u64,
    pub phi: Coefficient,
    pub phi_new: Coefficient,
    pub phi_bar: Coefficient,
    pub delta: Coefficient,
}

impl RichClubPoint {
    /// Assembles a point from the club sizes, dyad counts and bounds.
    pub fn from_parts(k: usize, n1: usize, n0: usize, counts: DyadCounts, ub11: u64, ub10: u64) -> Self {
        let phi = phi_dyadic(counts.m11, n1);
        let phi_new = bound_ratio(counts.m11, ub11, n1 < 2);
        RichClubPoint {
            k,
            n1,
            n0,
            m11: counts.m11,
            m10: counts.m10,
            m00: counts.m00,
            ub_m11: ub11,
            ub_m10: ub10,
            phi,
            phi_new,
            phi_bar: bound_ratio(counts.m10, ub10, n1 == 0 || n0 == 0),
            delta: delta(phi, phi_new),
        }
    }

    pub fn counts(&self) -> DyadCounts {
        DyadCounts {
            m11: self.m11,
            m10: self.m10,
            m00: self.m00,
        }
    }
}

/// Number of entries of `ds` strictly greater than `k`.
pub(crate) fn club_size(ds: &DegreeSequence, k: usize) -> usize {
    ds.as_slice().partition_point(|&d| d > k)
}

/// Evaluates one threshold directly from the graph.
pub fn point(g: &Graph, k: usize) -> RichClubPoint {
    let ds = g.degree_sequence();
    let c = Characteristic::from_threshold(g, k);
    let counts = count_dyads(g, &c);
    let (n1, n0) = (c.n1(), c.n0());
    let ub11 = ub_m11(&ds, n1).expect("n1 <= N");
    let ub10 = ub_m10(&ds, n1).expect("n1 <= N");
    RichClubPoint::from_parts(k, n1, n0, counts, ub11, ub10)
}

/// Rich-club coefficient: internal club edges over `C(n1, 2)`.
pub fn phi(g: &Graph, k: usize) -> Coefficient {
    point(g, k).phi
}

/// Internal club edges over the structural bound on `m11`.
pub fn phi_new(g: &Graph, k: usize) -> Coefficient {
    point(g, k).phi_new
}

/// Feeder edges over the structural bound on `m10`.
pub fn phi_bar(g: &Graph, k: usize) -> Coefficient {
    point(g, k).phi_bar
}

pub fn delta_k(g: &Graph, k: usize) -> Coefficient {
    point(g, k).delta
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub nodes: usize,
    pub edges: usize,
    pub max_degree: usize,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> Self {
        GraphSummary {
            nodes: g.node_count(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RichClubProfile {
    pub summary: GraphSummary,
    pub points: Vec<RichClubPoint>,
}

/// One `k` per distinct non-empty club: `0` plus every distinct degree
/// below the maximum (the club at `k = d` keeps the degrees above `d`).
pub fn default_grid(g: &Graph) -> Vec<usize> {
    let max = g.max_degree();
    let mut grid: Vec<usize> = std::iter::once(0)
        .chain(g.degrees().into_iter().filter(|&d| d < max))
        .collect();
    grid.sort_unstable();
    grid.dedup();
    if max == 0 {
        grid.clear();
    }
    grid
}

/// Checks that `grid` is strictly increasing and within `[0, max_degree]`.
pub fn validate_grid(grid: &[usize], max_degree: usize) -> Result<()> {
    if let Some(w) = grid.windows(2).find(|w| w[0] >= w[1]) {
        return Err(Error::InvalidGrid(format!(
            "values must be strictly increasing ({} then {})",
            w[0], w[1]
        )));
    }
    if let Some(&k) = grid.iter().find(|&&k| k > max_degree) {
        return Err(Error::InvalidGrid(format!(
            "k = {k} exceeds the maximum degree {max_degree}"
        )));
    }
    Ok(())
}

/// Evaluates every coefficient over `k_grid`, or over [`default_grid`].
pub fn profile(g: &Graph, k_grid: Option<&[usize]>) -> Result<RichClubProfile> {
    let grid = match k_grid {
        Some(grid) => {
            validate_grid(grid, g.max_degree())?;
            grid.to_vec()
        }
        None => default_grid(g),
    };
    let ds = g.degree_sequence();
    let counts = threshold_dyads(g, &grid);
    let points = grid
        .iter()
        .zip(counts)
        .map(|(&k, counts)| {
            let n1 = club_size(&ds, k);
            let ub11 = ub_m11(&ds, n1)?;
            let ub10 = ub_m10(&ds, n1)?;
            Ok(RichClubPoint::from_parts(k, n1, ds.len() - n1, counts, ub11, ub10))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RichClubProfile {
        summary: GraphSummary::of(g),
        points,
    })
}
