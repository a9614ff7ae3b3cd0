//! Degree-preserving null models.
//!
//! Replicates are produced by double-edge swaps: two edges `(a,b)` and
//! `(c,d)` become `(a,d)` and `(c,b)`, unless that would create a loop or a
//! multi-edge. Each replicate draws from its own ChaCha20 stream keyed by the
//! master seed and selected by the replicate index, so an ensemble is a pure
//! function of `(graph, config)` whatever the number of worker threads.
//!
//! Normalized coefficients divide an observed count by its ensemble mean.
//! Because the structural bounds depend only on the degree sequence, which
//! every replicate shares, normalizing the bounded coefficients gives the
//! same numbers as normalizing the raw counts; both routes are exposed.

use std::collections::HashSet;

use rand::{Rng, RngExt, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::characteristic::threshold_dyads;
use crate::dyadic::{ub_m10, ub_m11};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::richclub::{club_size, default_grid, validate_grid, Coefficient, UndefinedCause};

/// Resampling budget per replicate when connected replicates are required.
pub const MAX_CONNECTED_TRIES: usize = 100;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnsembleConfig {
    pub size: usize,
    pub master_seed: u64,
    /// Target number of successful swaps, per edge.
    pub swaps_per_edge: usize,
    /// Cap on proposed swaps, per edge.
    pub max_attempt_factor: usize,
    /// Redraw replicates until they are connected.
    pub strict_connected: bool,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        EnsembleConfig {
            size: 1000,
            master_seed: 0,
            swaps_per_edge: 10,
            max_attempt_factor: 100,
            strict_connected: false,
        }
    }
}

impl EnsembleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.size == 0 {
            return Err(Error::InvalidConfig("ensemble size must be at least 1".into()));
        }
        if self.swaps_per_edge == 0 {
            return Err(Error::InvalidConfig("swaps per edge must be at least 1".into()));
        }
        if self.max_attempt_factor == 0 {
            return Err(Error::InvalidConfig("max attempt factor must be at least 1".into()));
        }
        Ok(())
    }
}

/// The random stream of replicate `replicate` under `master_seed`.
pub fn replicate_rng(master_seed: u64, replicate: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(master_seed);
    rng.set_stream(replicate);
    rng
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    SelfLoop,
    DuplicateEdge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwapOutcome {
    Applied,
    Rejected(RejectReason),
}

fn key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Mutable edge set used while rewiring.
#[derive(Clone, Debug)]
pub struct WorkingGraph {
    edges: Vec<(usize, usize)>,
    present: HashSet<(usize, usize)>,
}

impl WorkingGraph {
    pub fn from_graph(g: &Graph) -> Self {
        let edges: Vec<_> = g.edges().collect();
        let present = edges.iter().copied().collect();
        WorkingGraph { edges, present }
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Rewires edges `i` and `j`. With `(a,b) = edges[i]` and `(c,d) = edges[j]`
    /// (or `(d,c)` when `flip`), the new edges are `(a,d)` and `(c,b)`.
    pub fn propose_swap(&mut self, i: usize, j: usize, flip: bool) -> SwapOutcome {
        let (a, b) = self.edges[i];
        let (c, d) = if flip {
            let (x, y) = self.edges[j];
            (y, x)
        } else {
            self.edges[j]
        };
        if a == d || c == b {
            return SwapOutcome::Rejected(RejectReason::SelfLoop);
        }
        if self.present.contains(&key(a, d)) || self.present.contains(&key(c, b)) {
            return SwapOutcome::Rejected(RejectReason::DuplicateEdge);
        }
        self.present.remove(&key(a, b));
        self.present.remove(&key(c, d));
        self.present.insert(key(a, d));
        self.present.insert(key(c, b));
        self.edges[i] = key(a, d);
        self.edges[j] = key(c, b);
        SwapOutcome::Applied
    }

    /// Picks two distinct edges and an orientation uniformly, then swaps.
    pub fn double_edge_swap<R: Rng + ?Sized>(&mut self, rng: &mut R) -> Result<SwapOutcome> {
        let m = self.edges.len();
        if m < 2 {
            return Err(Error::NotSwappable { edges: m });
        }
        let i = rng.random_range(0..m);
        let mut j = rng.random_range(0..m - 1);
        if j >= i {
            j += 1;
        }
        let flip = rng.random_bool(0.5);
        Ok(self.propose_swap(i, j, flip))
    }

    /// Materializes the edge set over the node labels of `template`.
    pub fn to_graph(&self, template: &Graph) -> Graph {
        let mut adjacency = vec![Vec::new(); template.node_count()];
        for &(u, v) in &self.edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        template.with_same_labels(adjacency)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RewireStats {
    pub attempts: usize,
    pub successes: usize,
}

/// Swaps until `swaps_per_edge * M` successes or `max_attempt_factor * M`
/// attempts, whichever comes first. Connectivity is not enforced.
pub fn rewire<R: Rng + ?Sized>(
    g: &Graph,
    swaps_per_edge: usize,
    max_attempt_factor: usize,
    rng: &mut R,
) -> Result<(Graph, RewireStats)> {
    let m = g.edge_count();
    if m < 2 {
        return Err(Error::NotSwappable { edges: m });
    }
    let mut work = WorkingGraph::from_graph(g);
    let target = swaps_per_edge * m;
    let budget = max_attempt_factor * m;
    let mut stats = RewireStats::default();
    while stats.successes < target && stats.attempts < budget {
        stats.attempts += 1;
        if work.double_edge_swap(rng)? == SwapOutcome::Applied {
            stats.successes += 1;
        }
    }
    Ok((work.to_graph(g), stats))
}

/// Replicate `replicate` of the null model of `g` under `cfg`.
pub fn randomize(g: &Graph, cfg: &EnsembleConfig, replicate: u64) -> Result<Graph> {
    let mut rng = replicate_rng(cfg.master_seed, replicate);
    let tries = if cfg.strict_connected { MAX_CONNECTED_TRIES } else { 1 };
    for _ in 0..tries {
        let (out, _) = rewire(g, cfg.swaps_per_edge, cfg.max_attempt_factor, &mut rng)?;
        if !cfg.strict_connected || out.is_connected() {
            return Ok(out);
        }
    }
    Err(Error::ConnectedNullExhausted { replicate, tries })
}

/// Per-`k` measurements of one replicate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReplicateCounts {
    pub n1: Vec<usize>,
    pub m11: Vec<u64>,
    pub m10: Vec<u64>,
    pub ub_m11: Vec<u64>,
    pub ub_m10: Vec<u64>,
}

impl ReplicateCounts {
    /// Measures `g` at every `k` of `grid`, bounds taken from its own degree sequence.
    pub fn measure(g: &Graph, grid: &[usize]) -> Result<Self> {
        let ds = g.degree_sequence();
        let counts = threshold_dyads(g, grid);
        let mut out = ReplicateCounts {
            n1: Vec::with_capacity(grid.len()),
            m11: Vec::with_capacity(grid.len()),
            m10: Vec::with_capacity(grid.len()),
            ub_m11: Vec::with_capacity(grid.len()),
            ub_m10: Vec::with_capacity(grid.len()),
        };
        for (&k, c) in grid.iter().zip(counts) {
            let n1 = club_size(&ds, k);
            out.n1.push(n1);
            out.m11.push(c.m11);
            out.m10.push(c.m10);
            out.ub_m11.push(ub_m11(&ds, n1)?);
            out.ub_m10.push(ub_m10(&ds, n1)?);
        }
        Ok(out)
    }
}

/// Measurements of every replicate, in replicate order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnsembleTable {
    pub grid: Vec<usize>,
    pub node_count: usize,
    pub replicates: Vec<ReplicateCounts>,
}

/// Mean and sample standard deviation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize)]
pub struct Summary {
    pub mean: f64,
    pub sd: f64,
}

fn summarize(values: impl Iterator<Item = u64> + Clone) -> Summary {
    let n = values.clone().count();
    if n == 0 {
        return Summary::default();
    }
    let total: u64 = values.clone().sum();
    let mean = total as f64 / n as f64;
    let sd = if n > 1 {
        let ss: f64 = values.map(|v| (v as f64 - mean).powi(2)).sum();
        (ss / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    Summary { mean, sd }
}

impl EnsembleTable {
    pub fn len(&self) -> usize {
        self.replicates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.replicates.is_empty()
    }

    pub fn position(&self, k: usize) -> Result<usize> {
        self.grid
            .binary_search(&k)
            .map_err(|_| Error::InvalidGrid(format!("k = {k} is not in the ensemble grid")))
    }

    fn column(&self, k: usize) -> Result<usize> {
        if self.replicates.is_empty() {
            return Err(Error::EmptyEnsemble);
        }
        self.position(k)
    }

    pub fn m11_summary(&self, k: usize) -> Result<Summary> {
        let at = self.column(k)?;
        Ok(summarize(self.replicates.iter().map(|r| r.m11[at])))
    }

    pub fn m10_summary(&self, k: usize) -> Result<Summary> {
        let at = self.column(k)?;
        Ok(summarize(self.replicates.iter().map(|r| r.m10[at])))
    }

    fn club(&self, at: usize) -> (usize, usize) {
        let n1 = self.replicates[0].n1[at];
        (n1, self.node_count - n1)
    }
}

/// Runs `cfg.size` replicates and measures each over `grid`.
///
/// Work is spread over the current rayon pool; results are gathered in
/// replicate order.
pub fn generate_ensemble(g: &Graph, cfg: &EnsembleConfig, grid: &[usize]) -> Result<EnsembleTable> {
    cfg.validate()?;
    validate_grid(grid, g.max_degree())?;
    if g.edge_count() < 2 {
        return Err(Error::NotSwappable { edges: g.edge_count() });
    }
    let replicates = (0..cfg.size as u64)
        .into_par_iter()
        .map(|r| ReplicateCounts::measure(&randomize(g, cfg, r)?, grid))
        .collect::<Result<Vec<_>>>()?;
    Ok(EnsembleTable {
        grid: grid.to_vec(),
        node_count: g.node_count(),
        replicates,
    })
}

fn normalized(observed: f64, mean: f64, degenerate: bool) -> Coefficient {
    if degenerate {
        return Coefficient::Undefined(UndefinedCause::DegenerateClub);
    }
    Coefficient::ratio(observed, mean, UndefinedCause::ZeroEnsembleMean)
}

/// `m11 / mean(m11 over the ensemble)`.
pub fn rho(m11_observed: u64, ensemble: &EnsembleTable, k: usize) -> Result<Coefficient> {
    let mean = ensemble.m11_summary(k)?.mean;
    let (n1, _) = ensemble.club(ensemble.position(k)?);
    Ok(normalized(m11_observed as f64, mean, n1 < 2))
}

/// `phi_new / mean(phi_new over the ensemble)`, each replicate divided by
/// the bound of its own degree sequence.
pub fn rho_via_coefficients(m11_observed: u64, ub_m11_observed: u64, ensemble: &EnsembleTable, k: usize) -> Result<Coefficient> {
    let at = ensemble.column(k)?;
    let (n1, _) = ensemble.club(at);
    if n1 < 2 {
        return Ok(Coefficient::Undefined(UndefinedCause::DegenerateClub));
    }
    coefficient_route(m11_observed, ub_m11_observed, ensemble.replicates.iter().map(|r| (r.m11[at], r.ub_m11[at])))
}

/// `phi / mean(phi over the ensemble)` with the classic `C(n1, 2)` denominator.
pub fn rho_classic(m11_observed: u64, n1_observed: usize, ensemble: &EnsembleTable, k: usize) -> Result<Coefficient> {
    let at = ensemble.column(k)?;
    if n1_observed < 2 {
        return Ok(Coefficient::Undefined(UndefinedCause::DegenerateClub));
    }
    let pairs = |n1: usize| (n1 * (n1 - 1) / 2) as u64;
    coefficient_route(
        m11_observed,
        pairs(n1_observed),
        ensemble.replicates.iter().map(|r| (r.m11[at], pairs(r.n1[at]))),
    )
}

/// `m10 / mean(m10 over the ensemble)`.
pub fn rho_bar(m10_observed: u64, ensemble: &EnsembleTable, k: usize) -> Result<Coefficient> {
    let mean = ensemble.m10_summary(k)?.mean;
    let (n1, n0) = ensemble.club(ensemble.position(k)?);
    Ok(normalized(m10_observed as f64, mean, n1 == 0 || n0 == 0))
}

/// `phi_bar / mean(phi_bar over the ensemble)`.
pub fn rho_bar_via_coefficients(m10_observed: u64, ub_m10_observed: u64, ensemble: &EnsembleTable, k: usize) -> Result<Coefficient> {
    let at = ensemble.column(k)?;
    let (n1, n0) = ensemble.club(at);
    if n1 == 0 || n0 == 0 {
        return Ok(Coefficient::Undefined(UndefinedCause::DegenerateClub));
    }
    coefficient_route(m10_observed, ub_m10_observed, ensemble.replicates.iter().map(|r| (r.m10[at], r.ub_m10[at])))
}

fn coefficient_route(
    observed: u64,
    bound: u64,
    replicates: impl Iterator<Item = (u64, u64)>,
) -> Result<Coefficient> {
    if bound == 0 {
        return Ok(Coefficient::Undefined(UndefinedCause::ZeroBound));
    }
    let mut total = 0.0;
    let mut count = 0usize;
    for (m, ub) in replicates {
        if ub == 0 {
            return Ok(Coefficient::Undefined(UndefinedCause::ZeroBound));
        }
        total += m as f64 / ub as f64;
        count += 1;
    }
    let mean = total / count as f64;
    Ok(Coefficient::ratio(
        observed as f64 / bound as f64,
        mean,
        UndefinedCause::ZeroEnsembleMean,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct NormalizedPoint {
    pub k: usize,
    pub m11_ran_mean: f64,
    pub m11_ran_sd: f64,
    pub m10_ran_mean: f64,
    pub m10_ran_sd: f64,
    pub rho: Coefficient,
    pub rho_bar: Coefficient,
}

/// Normalized coefficients of `g` at every `k` of `ensemble.grid`.
pub fn normalize(g: &Graph, ensemble: &EnsembleTable) -> Result<Vec<NormalizedPoint>> {
    let observed = ReplicateCounts::measure(g, &ensemble.grid)?;
    ensemble
        .grid
        .iter()
        .enumerate()
        .map(|(at, &k)| {
            let m11 = ensemble.m11_summary(k)?;
            let m10 = ensemble.m10_summary(k)?;
            let rho_value = rho(observed.m11[at], ensemble, k)?;
            let rho_bar_value = rho_bar(observed.m10[at], ensemble, k)?;
            debug_assert!(agree(
                rho_value,
                rho_via_coefficients(observed.m11[at], observed.ub_m11[at], ensemble, k)?
            ));
            Ok(NormalizedPoint {
                k,
                m11_ran_mean: m11.mean,
                m11_ran_sd: m11.sd,
                m10_ran_mean: m10.mean,
                m10_ran_sd: m10.sd,
                rho: rho_value,
                rho_bar: rho_bar_value,
            })
        })
        .collect()
}

/// True when both are undefined, or both defined and within `1e-12` relative.
pub fn agree(a: Coefficient, b: Coefficient) -> bool {
    match (a.value(), b.value()) {
        (None, None) => true,
        (Some(x), Some(y)) => (x - y).abs() <= 1e-12 * x.abs().max(y.abs()),
        _ => false,
    }
}

/// Generates an ensemble over the default grid and normalizes `g` against it.
pub fn normalized_profile(g: &Graph, cfg: &EnsembleConfig) -> Result<Vec<NormalizedPoint>> {
    let grid = default_grid(g);
    let ensemble = generate_ensemble(g, cfg, &grid)?;
    normalize(g, &ensemble)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, erdos_renyi, path, preferential_attachment, star};
    use proptest::prelude::*;

    fn cfg(size: usize, seed: u64) -> EnsembleConfig {
        EnsembleConfig {
            size,
            master_seed: seed,
            ..EnsembleConfig::default()
        }
    }

    fn all_proposals(g: &Graph) -> Vec<(usize, usize, bool, SwapOutcome, Graph)> {
        let m = g.edge_count();
        let mut out = Vec::new();
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                for flip in [false, true] {
                    let mut w = WorkingGraph::from_graph(g);
                    let outcome = w.propose_swap(i, j, flip);
                    out.push((i, j, flip, outcome, w.to_graph(g)));
                }
            }
        }
        out
    }

    #[test]
    fn triangle_and_path_admit_no_swap() {
        for g in [complete(3), path(3), complete(4), star(5)] {
            for (_, _, _, outcome, after) in all_proposals(&g) {
                assert!(matches!(outcome, SwapOutcome::Rejected(_)));
                assert_eq!(after, g);
            }
        }
        let mut w = WorkingGraph::from_graph(&path(3));
        // (0,1),(1,2): straight pairing makes a loop on 1, flipped duplicates (0,1)
        assert_eq!(w.propose_swap(0, 1, false), SwapOutcome::Rejected(RejectReason::SelfLoop));
        assert_eq!(w.propose_swap(0, 1, true), SwapOutcome::Rejected(RejectReason::DuplicateEdge));
    }

    #[test]
    fn four_cycle_swaps() {
        // edges in order: (0,1), (0,3), (1,2), (2,3)
        let c4 = cycle(4);
        let mut w = WorkingGraph::from_graph(&c4);
        assert_eq!(w.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        // (0,1),(2,3) -> (0,3),(2,1): both already present
        assert_eq!(w.propose_swap(0, 3, false), SwapOutcome::Rejected(RejectReason::DuplicateEdge));
        // (0,1),(3,2) -> (0,2),(3,1): the other 4-cycle 0-2-1-3-0
        assert_eq!(w.propose_swap(0, 3, true), SwapOutcome::Applied);
        let g = w.to_graph(&c4);
        assert!(g.has_edge(0, 2) && g.has_edge(1, 3) && g.has_edge(1, 2) && g.has_edge(0, 3));
        assert!(!g.has_edge(0, 1));

        // adjacent edges share a node: one pairing loops, the other duplicates
        let outcomes = all_proposals(&c4);
        let applied = outcomes.iter().filter(|o| o.3 == SwapOutcome::Applied).count();
        // only the two disjoint pairs {(0,1),(2,3)} and {(0,3),(1,2)}, each in
        // both orders, have one admissible orientation
        assert_eq!(applied, 4);
        for (_, _, _, outcome, after) in outcomes {
            assert_eq!(after.degree_sequence(), c4.degree_sequence());
            if outcome == SwapOutcome::Applied {
                assert_ne!(after, c4);
                assert_eq!(after.component_count(), 1);
            }
        }
    }

    #[test]
    fn too_few_edges() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let mut w = WorkingGraph::from_graph(&g);
        let mut rng = replicate_rng(0, 0);
        assert!(matches!(w.double_edge_swap(&mut rng), Err(Error::NotSwappable { edges: 1 })));
        assert!(matches!(randomize(&g, &cfg(1, 0), 0), Err(Error::NotSwappable { .. })));
        assert!(generate_ensemble(&g, &cfg(3, 0), &[0]).is_err());
    }

    #[test]
    fn complete_graph_is_fixed() {
        let k4 = complete(4);
        assert_eq!(randomize(&k4, &cfg(1, 3), 0).unwrap(), k4);
        let table = generate_ensemble(&k4, &cfg(20, 1), &[0]).unwrap();
        let s = table.m11_summary(0).unwrap();
        assert_eq!((s.mean, s.sd), (6.0, 0.0));
        assert_eq!(rho(6, &table, 0).unwrap(), Coefficient::Value(1.0));
        assert_eq!(
            rho_bar(0, &table, 0).unwrap(),
            Coefficient::Undefined(UndefinedCause::DegenerateClub)
        );
        let pts = normalized_profile(&k4, &cfg(10, 0)).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].rho, Coefficient::Value(1.0));
        assert!(!pts[0].rho_bar.is_defined());
        assert_eq!(pts[0].m11_ran_sd, 0.0);
    }

    #[test]
    fn star_feeders_are_fixed() {
        let s = star(5);
        let table = generate_ensemble(&s, &cfg(10, 9), &[0, 1]).unwrap();
        assert_eq!(rho_bar(4, &table, 1).unwrap(), Coefficient::Value(1.0));
        assert_eq!(rho_bar(0, &table, 1).unwrap(), Coefficient::Value(0.0));
    }

    #[test]
    fn rho_edge_cases() {
        let g = cycle(6);
        let table = generate_ensemble(&g, &cfg(30, 2), &[0, 2]).unwrap();
        assert_eq!(rho(0, &table, 0).unwrap(), Coefficient::Value(0.0));
        // no node has degree above 2 in a cycle
        assert_eq!(
            rho(0, &table, 2).unwrap(),
            Coefficient::Undefined(UndefinedCause::DegenerateClub)
        );
        assert!(matches!(rho(0, &table, 1), Err(Error::InvalidGrid(_))));

        let empty = EnsembleTable {
            grid: vec![0],
            node_count: 6,
            replicates: vec![],
        };
        assert!(matches!(rho(1, &empty, 0), Err(Error::EmptyEnsemble)));
        assert!(matches!(rho_bar(1, &empty, 0), Err(Error::EmptyEnsemble)));

        // hand-built table in which the club never has an internal edge
        let zero = EnsembleTable {
            grid: vec![1],
            node_count: 6,
            replicates: vec![ReplicateCounts {
                n1: vec![2],
                m11: vec![0],
                m10: vec![4],
                ub_m11: vec![1],
                ub_m10: vec![4],
            }],
        };
        assert_eq!(
            rho(0, &zero, 1).unwrap(),
            Coefficient::Undefined(UndefinedCause::ZeroEnsembleMean)
        );
    }

    #[test]
    fn single_replicate_matches_randomize() {
        let g = erdos_renyi(30, 0.2, 8);
        let c = cfg(1, 77);
        let grid = default_grid(&g);
        let table = generate_ensemble(&g, &c, &grid).unwrap();
        let direct = ReplicateCounts::measure(&randomize(&g, &c, 0).unwrap(), &grid).unwrap();
        assert_eq!(table.replicates, vec![direct]);
    }

    #[test]
    fn ensemble_independent_of_thread_count() {
        let g = preferential_attachment(80, 2, 5);
        let grid = default_grid(&g);
        let c = cfg(40, 123);
        let run = |threads: usize| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| generate_ensemble(&g, &c, &grid).unwrap())
        };
        let one = run(1);
        assert_eq!(one, run(4));
        assert_eq!(one, run(7));
    }

    #[test]
    fn strict_mode_gives_connected_replicates() {
        let g = cycle(12);
        let strict = EnsembleConfig {
            strict_connected: true,
            ..cfg(20, 4)
        };
        for r in 0..20 {
            assert!(randomize(&g, &strict, r).unwrap().is_connected());
        }
        // without strict mode a rewired cycle often splits into smaller cycles
        let loose = cfg(20, 4);
        let split = (0..20).filter(|&r| !randomize(&g, &loose, r).unwrap().is_connected()).count();
        assert!(split > 0);
    }

    #[test]
    fn sampled_graph_is_typical_of_its_null() {
        let g0 = preferential_attachment(150, 2, 21);
        let c = cfg(300, 5);
        let drawn = randomize(&g0, &cfg(1, 999), 0).unwrap();
        let grid = default_grid(&g0);
        let table = generate_ensemble(&g0, &c, &grid).unwrap();
        let points = normalize(&drawn, &table).unwrap();
        for p in points {
            if let Some(r) = p.rho.value() {
                let tolerance = 3.0 * p.m11_ran_sd / p.m11_ran_mean;
                assert!((r - 1.0).abs() <= tolerance, "k={} rho={r} tol={tolerance}", p.k);
            }
        }
    }

    #[test]
    fn config_validation() {
        assert!(EnsembleConfig { size: 0, ..Default::default() }.validate().is_err());
        assert!(EnsembleConfig { swaps_per_edge: 0, ..Default::default() }.validate().is_err());
        assert!(EnsembleConfig::default().validate().is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rewiring_preserves_degrees_and_simplicity(n in 4usize..40, p in 0.05f64..0.9, seed in any::<u64>(), rep in 0u64..1000) {
            let g = erdos_renyi(n, p, seed);
            prop_assume!(g.edge_count() >= 2);
            let c = EnsembleConfig { swaps_per_edge: 3, ..cfg(1, seed) };
            let out = randomize(&g, &c, rep).unwrap();
            prop_assert_eq!(out.degrees(), g.degrees());
            prop_assert_eq!(out.edge_count(), g.edge_count());
            for u in 0..n {
                let nb = out.neighbors(u);
                prop_assert!(!nb.contains(&u));
                prop_assert!(nb.windows(2).all(|w| w[0] < w[1]));
                for &v in nb {
                    prop_assert!(out.has_edge(v, u));
                }
            }
            prop_assert_eq!(randomize(&g, &c, rep).unwrap(), out);
        }

        #[test]
        fn both_routes_agree(n in 5usize..30, p in 0.1f64..0.8, seed in any::<u64>()) {
            let g = erdos_renyi(n, p, seed);
            prop_assume!(g.edge_count() >= 2);
            let grid: Vec<usize> = (0..=g.max_degree()).collect();
            let table = generate_ensemble(&g, &cfg(8, seed), &grid).unwrap();
            let obs = ReplicateCounts::measure(&g, &grid).unwrap();
            for (at, &k) in grid.iter().enumerate() {
                let direct = rho(obs.m11[at], &table, k).unwrap();
                prop_assert!(agree(direct, rho_via_coefficients(obs.m11[at], obs.ub_m11[at], &table, k).unwrap()));
                prop_assert!(agree(direct, rho_classic(obs.m11[at], obs.n1[at], &table, k).unwrap()));
                prop_assert!(agree(
                    rho_bar(obs.m10[at], &table, k).unwrap(),
                    rho_bar_via_coefficients(obs.m10[at], obs.ub_m10[at], &table, k).unwrap()
                ));
                for r in &table.replicates {
                    prop_assert_eq!(r.ub_m11[at], obs.ub_m11[at]);
                    prop_assert_eq!(r.ub_m10[at], obs.ub_m10[at]);
                }
            }
        }
    }
}
