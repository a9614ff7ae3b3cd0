//! Dyadic-effect measures: expected dyad counts under random placement of
//! the characteristic, dyadicity / heterophilicity, and upper bounds on
//! `m11` and `m10`.
//!
//! The bounds come in two flavours. The basic ones only use `M`, `n1` and
//! `n0`. The structural ones also look at the degree sequence: the `n1`
//! club members can spend at most `min(d_i, n1 - 1)` stubs inside the club,
//! and at most `min(d_i, n0)` stubs across the cut.

use num_rational::Ratio;
use serde::Serialize;

use crate::characteristic::DyadCounts;
use crate::degree::DegreeSequence;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Expected `m11` and `m10` when the `n1` ones are placed uniformly at random.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DyadExpectation {
    pub expected_m11: f64,
    pub expected_m10: f64,
    exact_m11: Ratio<u128>,
    exact_m10: Ratio<u128>,
}

impl DyadExpectation {
    pub fn exact_m11(&self) -> Ratio<u128> {
        self.exact_m11
    }

    pub fn exact_m10(&self) -> Ratio<u128> {
        self.exact_m10
    }
}

fn ratio_to_f64(r: Ratio<u128>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// `C(n1,2) * density` and `n1 * n0 * density`, computed exactly.
pub fn expected_dyads(g: &Graph, n1: usize) -> Result<DyadExpectation> {
    let n = g.node_count();
    if n < 2 {
        return Err(Error::UndefinedDensity { nodes: n });
    }
    if n1 > n {
        return Err(Error::OutOfBounds { requested: n1, len: n });
    }
    let (n, n1, m) = (n as u128, n1 as u128, g.edge_count() as u128);
    let pairs = n * (n - 1);
    let exact_m11 = Ratio::new(n1 * n1.saturating_sub(1) * m, pairs);
    let exact_m10 = Ratio::new(2 * n1 * (n - n1) * m, pairs);
    Ok(DyadExpectation {
        expected_m11: ratio_to_f64(exact_m11),
        expected_m10: ratio_to_f64(exact_m10),
        exact_m11,
        exact_m10,
    })
}

fn observed_over_expected(
    observed: u64,
    expected: Ratio<u128>,
    ratio: &'static str,
) -> Result<f64> {
    if *expected.numer() == 0 {
        return Err(Error::UndefinedRatio { ratio });
    }
    Ok(ratio_to_f64(Ratio::from_integer(observed as u128) / expected))
}

/// Dyadicity `D = m11 / E[m11]`.
pub fn dyadicity(counts: &DyadCounts, exp: &DyadExpectation) -> Result<f64> {
    observed_over_expected(counts.m11, exp.exact_m11, "dyadicity")
}

/// Heterophilicity `H = m10 / E[m10]`.
pub fn heterophilicity(counts: &DyadCounts, exp: &DyadExpectation) -> Result<f64> {
    observed_over_expected(counts.m10, exp.exact_m10, "heterophilicity")
}

fn binom2(n: u64) -> u64 {
    n * n.saturating_sub(1) / 2
}

fn check_n1(n1: usize, n: usize) -> Result<()> {
    if n1 > n {
        return Err(Error::OutOfBounds { requested: n1, len: n });
    }
    Ok(())
}

/// `min(M, C(n1,2))`.
pub fn ub_m11_basic(g: &Graph, n1: usize) -> Result<u64> {
    check_n1(n1, g.node_count())?;
    Ok(basic_m11(g.edge_count() as u64, n1 as u64))
}

/// `min(M, n1 * n0)`.
pub fn ub_m10_basic(g: &Graph, n1: usize) -> Result<u64> {
    check_n1(n1, g.node_count())?;
    let n0 = (g.node_count() - n1) as u64;
    Ok(basic_m10(g.edge_count() as u64, n1 as u64, n0))
}

fn basic_m11(m: u64, n1: u64) -> u64 {
    m.min(binom2(n1))
}

fn basic_m10(m: u64, n1: u64, n0: u64) -> u64 {
    m.min(n1 * n0)
}

/// Sum of `min(d_i, cap)` over the `n` largest degrees.
fn capped_head_sum(ds: &DegreeSequence, n: usize, cap: usize) -> u64 {
    ds.as_slice()[..n].iter().map(|&d| d.min(cap) as u64).sum()
}

/// Structural bound on `m11`:
/// `min(M, C(n1,2), ceil(sum_{head(n1)} min(d_i, n1-1) / 2))`.
///
/// The ceiling is taken once over the whole half-sum, in integer arithmetic.
pub fn ub_m11(ds: &DegreeSequence, n1: usize) -> Result<u64> {
    check_n1(n1, ds.len())?;
    if n1 == 0 {
        return Ok(0);
    }
    let stubs = capped_head_sum(ds, n1, n1 - 1);
    let m = ds.edge_count() as u64;
    Ok(basic_m11(m, n1 as u64).min(stubs.div_ceil(2)))
}

/// Structural bound on `m10`:
/// `min(M, n1*n0, min(sum_{head(n1)} min(d_i, n0), sum_{head(n0)} min(d_i, n1)))`.
pub fn ub_m10(ds: &DegreeSequence, n1: usize) -> Result<u64> {
    check_n1(n1, ds.len())?;
    let n0 = ds.len() - n1;
    let from_club = capped_head_sum(ds, n1, n0);
    let from_rest = capped_head_sum(ds, n0, n1);
    let m = ds.edge_count() as u64;
    Ok(basic_m10(m, n1 as u64, n0 as u64).min(from_club.min(from_rest)))
}

/// All four bounds for one club size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DyadBounds {
    pub n1: usize,
    pub n0: usize,
    pub ub_m11_basic: u64,
    pub ub_m10_basic: u64,
    pub ub_m11: u64,
    pub ub_m10: u64,
}

impl DyadBounds {
    /// Bounds derived from a degree sequence alone (`M` = half the degree sum).
    pub fn from_sequence(ds: &DegreeSequence, n1: usize) -> Result<Self> {
        check_n1(n1, ds.len())?;
        let n0 = ds.len() - n1;
        let m = ds.edge_count() as u64;
        Ok(DyadBounds {
            n1,
            n0,
            ub_m11_basic: basic_m11(m, n1 as u64),
            ub_m10_basic: basic_m10(m, n1 as u64, n0 as u64),
            ub_m11: ub_m11(ds, n1)?,
            ub_m10: ub_m10(ds, n1)?,
        })
    }
}
