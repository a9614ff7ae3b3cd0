//! Binary node characteristics and the dyad classes they induce.
//!
//! A characteristic flags each node 1 or 0. Every edge is then a 1-1, 1-0
//! or 0-0 dyad. With the threshold characteristic `c_i = 1 <=> d_i > k`
//! these are the rich-club, feeder and local connections at level `k`.

use std::collections::HashMap;
use std::io::BufRead;

use serde::Serialize;

use crate::degree::degree_order;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Characteristic {
    values: Vec<bool>,
    n1: usize,
}

/// Which end of the degree ranking receives the 1 flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RankMode {
    Highest,
    Lowest,
}

impl Characteristic {
    pub fn from_values(values: Vec<bool>) -> Self {
        let n1 = values.iter().filter(|&&v| v).count();
        Characteristic { values, n1 }
    }

    /// `c_i = 1` exactly for nodes with degree strictly greater than `k`.
    pub fn from_threshold(g: &Graph, k: usize) -> Self {
        Self::from_values((0..g.node_count()).map(|i| g.degree(i) > k).collect())
    }

    /// Flags the `n1` highest- (or lowest-) degree nodes; ties go to the
    /// lower node index.
    pub fn top_n(g: &Graph, n1: usize, mode: RankMode) -> Result<Self> {
        let n = g.node_count();
        if n1 > n {
            return Err(Error::OutOfBounds { requested: n1, len: n });
        }
        let order = match mode {
            RankMode::Highest => degree_order(g),
            RankMode::Lowest => {
                let mut order: Vec<usize> = (0..n).collect();
                order.sort_by_key(|&i| (g.degree(i), i));
                order
            }
        };
        let mut values = vec![false; n];
        for &i in &order[..n1] {
            values[i] = true;
        }
        Ok(Characteristic { values, n1 })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn n0(&self) -> usize {
        self.values.len() - self.n1
    }

    pub fn get(&self, node: usize) -> bool {
        self.values[node]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn complement(&self) -> Self {
        Self::from_values(self.values.iter().map(|v| !v).collect())
    }
}

/// Edge counts per dyad class.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DyadCounts {
    pub m11: u64,
    pub m10: u64,
    pub m00: u64,
}

impl DyadCounts {
    pub fn total(&self) -> u64 {
        self.m11 + self.m10 + self.m00
    }
}

/// Counts 1-1, 1-0 and 0-0 edges.
///
/// # Panics
///
/// If `c` does not cover exactly the nodes of `g`.
pub fn count_dyads(g: &Graph, c: &Characteristic) -> DyadCounts {
    assert_eq!(c.len(), g.node_count(), "characteristic must cover every node");
    let mut counts = DyadCounts::default();
    for (u, v) in g.edges() {
        match (c.get(u), c.get(v)) {
            (true, true) => counts.m11 += 1,
            (false, false) => counts.m00 += 1,
            _ => counts.m10 += 1,
        }
    }
    counts
}

/// Dyad counts of the threshold characteristic for every `k` in `grid`.
///
/// Runs in `O(M log M + |grid| log M)`; equivalent to calling
/// [`count_dyads`] with [`Characteristic::from_threshold`] for each `k`.
pub fn threshold_dyads(g: &Graph, grid: &[usize]) -> Vec<DyadCounts> {
    let mut low = Vec::with_capacity(g.edge_count());
    let mut high = Vec::with_capacity(g.edge_count());
    for (u, v) in g.edges() {
        let (du, dv) = (g.degree(u), g.degree(v));
        low.push(du.min(dv));
        high.push(du.max(dv));
    }
    low.sort_unstable();
    high.sort_unstable();
    let m = low.len() as u64;
    grid.iter()
        .map(|&k| {
            // edges whose smaller (larger) endpoint degree exceeds k
            let both = (low.len() - low.partition_point(|&d| d <= k)) as u64;
            let any = (high.len() - high.partition_point(|&d| d <= k)) as u64;
            DyadCounts {
                m11: both,
                m10: any - both,
                m00: m - any,
            }
        })
        .collect()
}

/// Reads a `label<TAB>0|1` attribute file and matches it against `g`.
///
/// Every graph node must appear exactly once and every label must belong to
/// the graph. Blank and `#` lines are skipped.
pub fn read_characteristic<R: BufRead>(g: &Graph, source: R) -> Result<Characteristic> {
    let mut assigned: HashMap<usize, bool> = HashMap::new();
    for (i, line) in source.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let (label, value) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(l), Some(v), None) => (l, v),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected '<label>\\t<0|1>', found '{trimmed}'"),
                })
            }
        };
        let flag = match value {
            "0" => false,
            "1" => true,
            other => {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("attribute of '{label}' must be 0 or 1, found '{other}'"),
                })
            }
        };
        let node = g.index_of(label).ok_or_else(|| {
            Error::Attribute(format!("node '{label}' (line {line_no}) is not in the graph"))
        })?;
        if assigned.insert(node, flag).is_some() {
            return Err(Error::Attribute(format!(
                "node '{label}' assigned twice (line {line_no})"
            )));
        }
    }
    let mut values = Vec::with_capacity(g.node_count());
    for node in 0..g.node_count() {
        match assigned.get(&node) {
            Some(&flag) => values.push(flag),
            None => {
                return Err(Error::Attribute(format!(
                    "node '{}' has no attribute",
                    g.label(node)
                )))
            }
        }
    }
    Ok(Characteristic::from_values(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, erdos_renyi, path, star};
    use proptest::prelude::*;

    #[test]
    fn threshold_characteristics() {
        let s = star(5);
        let c = Characteristic::from_threshold(&s, 1);
        assert_eq!((c.n1(), c.n0()), (1, 4));
        assert!(c.get(0));
        let k4 = complete(4);
        assert_eq!(Characteristic::from_threshold(&k4, 0).n1(), 4);
        assert_eq!(Characteristic::from_threshold(&k4, k4.max_degree()).n1(), 0);
    }

    #[test]
    fn ranked_characteristics() {
        let s = star(5);
        let hub = Characteristic::top_n(&s, 1, RankMode::Highest).unwrap();
        assert_eq!(hub.values(), &[true, false, false, false, false]);
        assert_eq!(Characteristic::top_n(&s, 5, RankMode::Highest).unwrap().n1(), 5);
        let p = path(3);
        let low = Characteristic::top_n(&p, 1, RankMode::Lowest).unwrap();
        assert_eq!(low.values(), &[true, false, false]);
        assert!(matches!(
            Characteristic::top_n(&p, 4, RankMode::Lowest),
            Err(Error::OutOfBounds { .. })
        ));
    }

    #[test]
    fn dyad_examples() {
        // path a-b-c as 0-1-2 with c = [1,1,0]
        let p = path(3);
        let c = Characteristic::from_values(vec![true, true, false]);
        assert_eq!(count_dyads(&p, &c), DyadCounts { m11: 1, m10: 1, m00: 0 });

        let g = erdos_renyi(12, 0.4, 3);
        let all = Characteristic::from_values(vec![true; 12]);
        let m = g.edge_count() as u64;
        assert_eq!(count_dyads(&g, &all), DyadCounts { m11: m, m10: 0, m00: 0 });

        let k4 = complete(4);
        let two = Characteristic::from_values(vec![true, false, true, false]);
        assert_eq!(count_dyads(&k4, &two), DyadCounts { m11: 1, m10: 4, m00: 1 });
    }

    #[test]
    fn attribute_file_parsing() {
        let p = crate::graph::load_edge_list("a b\nb c\n".as_bytes(), Default::default()).unwrap();
        let c = read_characteristic(&p, "a\t1\nb\t1\n# note\nc\t0\n".as_bytes()).unwrap();
        assert_eq!(c.values(), &[true, true, false]);

        let missing = read_characteristic(&p, "a\t1\nb\t1\n".as_bytes()).unwrap_err();
        assert!(missing.to_string().contains("'c'"), "{missing}");
        let extra = read_characteristic(&p, "a\t1\nb\t1\nc\t0\nz\t1\n".as_bytes()).unwrap_err();
        assert!(extra.to_string().contains("'z'"), "{extra}");
        let bad = read_characteristic(&p, "a\t2\n".as_bytes()).unwrap_err();
        assert!(matches!(bad, Error::Parse { line: 1, .. }));
    }

    proptest! {
        #[test]
        fn dyads_partition_edges(n in 0usize..30, p in 0.0f64..1.0, seed in any::<u64>(), mask in any::<u32>()) {
            let g = erdos_renyi(n, p, seed);
            let c = Characteristic::from_values((0..n).map(|i| mask >> i & 1 == 1).collect());
            let counts = count_dyads(&g, &c);
            prop_assert_eq!(counts.total(), g.edge_count() as u64);
            prop_assert_eq!(c.n1() + c.n0(), n);
            let flipped = count_dyads(&g, &c.complement());
            prop_assert_eq!((flipped.m11, flipped.m10, flipped.m00), (counts.m00, counts.m10, counts.m11));
        }

        #[test]
        fn threshold_dyads_match_direct_count(n in 0usize..30, p in 0.0f64..1.0, seed in any::<u64>()) {
            let g = erdos_renyi(n, p, seed);
            let grid: Vec<usize> = (0..=g.max_degree() + 1).collect();
            let fast = threshold_dyads(&g, &grid);
            let mut last_n1 = usize::MAX;
            for (&k, counts) in grid.iter().zip(&fast) {
                let c = Characteristic::from_threshold(&g, k);
                prop_assert_eq!(*counts, count_dyads(&g, &c));
                prop_assert!(c.n1() <= last_n1);
                last_n1 = c.n1();
            }
        }
    }
}
