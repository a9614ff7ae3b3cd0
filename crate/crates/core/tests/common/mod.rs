//! Brute-force oracles over tiny graphs, independent of the library's
//! counting code: graphs are bitmask adjacency rows.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use richclub::Graph;

/// Adjacency rows of a graph on `n <= 8` nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Small {
    pub n: usize,
    pub rows: Vec<u8>,
}

/// Node pairs `(i, j)`, `i < j`, in the order used by edge bitmasks.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

impl Small {
    pub fn from_mask(n: usize, mask: u64, pairs: &[(usize, usize)]) -> Self {
        let mut rows = vec![0u8; n];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        Small { n, rows }
    }

    pub fn edge_count(&self) -> u64 {
        self.rows.iter().map(|r| r.count_ones() as u64).sum::<u64>() / 2
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen: u8 = 1;
        let mut frontier: u8 = 1;
        while frontier != 0 {
            let mut next = 0u8;
            for v in 0..self.n {
                if frontier >> v & 1 == 1 {
                    next |= self.rows[v];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// `(m11, m10)` for the club given as a node bitmask.
    pub fn dyads(&self, club: u8) -> (u64, u64) {
        let mut inside = 0u64;
        let mut across = 0u64;
        for v in 0..self.n {
            if club >> v & 1 == 1 {
                inside += (self.rows[v] & club).count_ones() as u64;
                across += (self.rows[v] & !club).count_ones() as u64;
            }
        }
        (inside / 2, across)
    }

    pub fn to_graph(&self) -> Graph {
        let edges = pairs(self.n)
            .into_iter()
            .filter(|&(i, j)| self.rows[i] >> j & 1 == 1);
        Graph::from_edges(self.n, edges).unwrap()
    }

    /// Edge bitmask of the graph with nodes listed in `order`.
    fn code(&self, order: &[usize]) -> u32 {
        let mut code = 0u32;
        let mut bit = 0;
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.rows[order[i]] >> order[j] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    /// Canonical code: colour refinement, then the minimum code over all
    /// orderings that keep the refined colour classes in place.
    pub fn canonical(&self) -> u32 {
        let n = self.n;
        let mut colour: Vec<usize> = self.degrees();
        loop {
            let signatures: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nb: Vec<usize> =
                        (0..n).filter(|&u| self.rows[v] >> u & 1 == 1).map(|u| colour[u]).collect();
                    nb.sort_unstable();
                    (colour[v], nb)
                })
                .collect();
            let mut distinct = signatures.clone();
            distinct.sort();
            distinct.dedup();
            let refined: Vec<usize> = signatures
                .iter()
                .map(|s| distinct.binary_search(s).unwrap())
                .collect();
            let before = colour.iter().collect::<HashSet<_>>().len();
            colour = refined;
            if distinct.len() == before {
                break;
            }
        }
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut by_colour: Vec<usize> = (0..n).collect();
        by_colour.sort_by_key(|&v| colour[v]);
        for v in by_colour {
            match cells.last_mut() {
                Some(cell) if colour[cell[0]] == colour[v] => cell.push(v),
                _ => cells.push(vec![v]),
            }
        }
        let mut best = u32::MAX;
        let mut order = Vec::with_capacity(n);
        self.search(&mut cells, 0, &mut order, &mut best);
        best
    }

    fn search(&self, cells: &mut Vec<Vec<usize>>, at: usize, order: &mut Vec<usize>, best: &mut u32) {
        if at == cells.len() {
            *best = (*best).min(self.code(order));
            return;
        }
        let cell = cells[at].clone();
        permute(&cell, &mut |perm| {
            let len = order.len();
            order.extend_from_slice(perm);
            self.search(cells, at + 1, order, best);
            order.truncate(len);
        });
    }
}

fn permute(items: &[usize], f: &mut dyn FnMut(&[usize])) {
    fn rec(items: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == items.len() {
            f(items);
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            rec(items, k + 1, f);
            items.swap(k, i);
        }
    }
    rec(&mut items.to_vec(), 0, f);
}

/// Every labelled simple graph on `n` nodes.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Small> {
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| Small::from_mask(n, mask, &pairs))
}

/// One representative per isomorphism class, for every `n` in `0..=max_n`.
pub fn isomorphism_classes(max_n: usize) -> Vec<Vec<Small>> {
    let mut all = vec![vec![Small { n: 0, rows: vec![] }]];
    for n in 1..=max_n {
        let mut seen = HashMap::new();
        for base in &all[n - 1] {
            for nb in 0u8..(1u16 << (n - 1)) as u8 {
                let mut rows = base.rows.clone();
                rows.push(nb);
                for (v, row) in rows.iter_mut().enumerate().take(n - 1) {
                    if nb >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                let g = Small { n, rows };
                seen.entry(g.canonical()).or_insert(g);
            }
        }
        let mut reps: Vec<(u32, Small)> = seen.into_iter().collect();
        reps.sort_by_key(|(code, _)| *code);
        all.push(reps.into_iter().map(|(_, g)| g).collect());
    }
    all
}

/// Sorted (non-increasing) degree sequences realized by some graph on `n` nodes.
pub fn realizable_sequences(n: usize) -> HashSet<Vec<usize>> {
    labelled_graphs(n)
        .map(|g| {
            let mut d = g.degrees();
            d.sort_unstable_by(|a, b| b.cmp(a));
            d
        })
        .collect()
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
