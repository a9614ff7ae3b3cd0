//! Degree sequences, head/tail subsequences and the graphic-sequence test.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Node degrees in non-increasing order.
///
/// When built from a graph, ties are broken by ascending node index and
/// `origin()` maps each position back to its node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
    origin: Option<Vec<usize>>,
}

impl DegreeSequence {
    pub fn from_graph(g: &Graph) -> Self {
        let order = degree_order(g);
        DegreeSequence {
            degrees: order.iter().map(|&i| g.degree(i)).collect(),
            origin: Some(order),
        }
    }

    /// Sorts an arbitrary list of degrees into a sequence.
    pub fn from_degrees(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence {
            degrees,
            origin: None,
        }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// `M` implied by the handshake lemma (half the degree sum, rounded down).
    pub fn edge_count(&self) -> usize {
        self.sum() / 2
    }

    pub fn origin(&self) -> Option<&[usize]> {
        self.origin.as_deref()
    }

    /// The first `n` entries (the `n` largest degrees).
    pub fn head(&self, n: usize) -> Result<DegreeSequence> {
        self.check_len(n)?;
        Ok(DegreeSequence {
            degrees: self.degrees[..n].to_vec(),
            origin: self.origin.as_ref().map(|o| o[..n].to_vec()),
        })
    }

    /// The last `n` entries (the `n` smallest degrees).
    pub fn tail(&self, n: usize) -> Result<DegreeSequence> {
        self.check_len(n)?;
        let start = self.len() - n;
        Ok(DegreeSequence {
            degrees: self.degrees[start..].to_vec(),
            origin: self.origin.as_ref().map(|o| o[start..].to_vec()),
        })
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n > self.len() {
            return Err(Error::OutOfBounds {
                requested: n,
                len: self.len(),
            });
        }
        Ok(())
    }

    pub fn is_graphic(&self) -> bool {
        graphic_verdict(&self.degrees).is_graphic()
    }
}

/// Node indices ordered by (degree descending, index ascending).
pub fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.node_count()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    order
}

/// Outcome of the Erdős–Gallai test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphicVerdict {
    Graphic,
    OddSum { sum: usize },
    /// The prefix inequality fails at `k` (1-based) with `lhs > rhs`.
    Violation { k: usize, lhs: usize, rhs: usize },
}

impl GraphicVerdict {
    pub fn is_graphic(self) -> bool {
        self == GraphicVerdict::Graphic
    }
}

impl fmt::Display for GraphicVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphicVerdict::Graphic => write!(f, "graphic"),
            GraphicVerdict::OddSum { sum } => write!(f, "odd degree sum ({sum})"),
            GraphicVerdict::Violation { k, lhs, rhs } => write!(
                f,
                "Erdős–Gallai inequality violated at k = {k}: sum of the {k} largest degrees is {lhs} > {rhs}"
            ),
        }
    }
}

/// Erdős–Gallai test in prefix form: for every `1 <= k <= N`,
/// `d_1 + .. + d_k <= k(k-1) + sum_{i>k} min(k, d_i)`, with an even total.
///
/// The input may be in any order.
pub fn graphic_verdict(seq: &[usize]) -> GraphicVerdict {
    let mut d = seq.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let total: usize = d.iter().sum();
    if total % 2 == 1 {
        return GraphicVerdict::OddSum { sum: total };
    }
    let n = d.len();
    let mut suffix = vec![0usize; n + 1];
    for i in (0..n).rev() {
        suffix[i] = suffix[i + 1] + d[i];
    }
    let mut prefix = 0;
    for k in 1..=n {
        prefix += d[k - 1];
        // Positions holding a degree >= k form a prefix of the sorted list.
        let at_least_k = d.partition_point(|&x| x >= k);
        let capped = at_least_k.max(k);
        let rhs = k * (k - 1) + k * (capped - k) + suffix[capped];
        if prefix > rhs {
            return GraphicVerdict::Violation { k, lhs: prefix, rhs };
        }
    }
    GraphicVerdict::Graphic
}

/// Whether `seq` is the degree sequence of some simple graph.
pub fn is_graphic(seq: &[i64]) -> Result<bool> {
    let mut degrees = Vec::with_capacity(seq.len());
    for (position, &value) in seq.iter().enumerate() {
        if value < 0 {
            return Err(Error::NegativeDegree { position, value });
        }
        degrees.push(value as usize);
    }
    Ok(graphic_verdict(&degrees).is_graphic())
}
