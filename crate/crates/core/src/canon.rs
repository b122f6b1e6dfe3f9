//! Canonical codes for small graphs and enumeration of isomorphism classes.

use crate::graph::Graph;
use std::collections::HashSet;

/// Largest vertex count for which [`canonical_code`] is defined.
pub const CANON_LIMIT: usize = 11;

/// Colour refinement until the number of colours stops growing. Colours are
/// ranks of sorted signatures, so they are isomorphism invariant.
fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut color = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&u| adj[v] >> u & 1 == 1).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let mut sorted = sigs.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<usize> = sigs.iter().map(|s| sorted.binary_search(s).unwrap()).collect();
        let count = sorted.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

/// Canonical code of a graph given as adjacency bitmasks over `0..n`.
/// Equal codes mean isomorphic graphs. Requires `n <= CANON_LIMIT`.
pub(crate) fn canonical_code_masks(adj: &[u16]) -> u64 {
    let n = adj.len();
    assert!(n <= CANON_LIMIT);
    let cells = refine(adj);
    let mut by_color: Vec<usize> = (0..n).collect();
    by_color.sort_by_key(|&v| cells[v]);
    let mut s = SearchState {
        adj,
        cells: &cells,
        slot: by_color,
        perm: vec![0; n],
        rows: vec![0; n],
        best: None,
    };
    s.dfs(0, 0);
    let rows = s.best.unwrap_or_default();
    let mut code = 0u64;
    for (pos, &r) in rows.iter().enumerate() {
        code = code << pos | r as u64;
    }
    (n as u64) << 56 | code
}

struct SearchState<'a> {
    adj: &'a [u16],
    cells: &'a [usize],
    /// `slot[pos]` is a vertex whose colour must sit at position `pos`.
    slot: Vec<usize>,
    perm: Vec<usize>,
    rows: Vec<u16>,
    best: Option<Vec<u16>>,
}

impl SearchState<'_> {
    fn dfs(&mut self, pos: usize, used: u16) {
        let n = self.adj.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|b| self.rows > *b) {
                self.best = Some(self.rows.clone());
            }
            return;
        }
        let want = self.cells[self.slot[pos]];
        for v in 0..n {
            if used >> v & 1 == 1 || self.cells[v] != want {
                continue;
            }
            let mut row = 0u16;
            for i in 0..pos {
                row = row << 1 | (self.adj[v] >> self.perm[i] & 1);
            }
            self.rows[pos] = row;
            if let Some(b) = &self.best {
                if self.rows[..=pos] < b[..=pos] {
                    continue;
                }
            }
            self.perm[pos] = v;
            self.dfs(pos + 1, used | 1 << v);
        }
    }
}

fn masks(g: &Graph) -> Vec<u16> {
    let (r, _) = g.relabeled();
    r.vertices()
        .map(|v| r.neighbors(v).iter().fold(0u16, |m, &u| m | 1 << u))
        .collect()
}

/// Canonical code of `g`, or `None` when it has more than [`CANON_LIMIT`]
/// vertices.
pub fn canonical_code(g: &Graph) -> Option<u64> {
    (g.n() <= CANON_LIMIT).then(|| canonical_code_masks(&masks(g)))
}

/// Isomorphism test for graphs with at most [`CANON_LIMIT`] vertices.
///
/// # Panics
/// If either graph is larger than [`CANON_LIMIT`].
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    assert!(a.n() <= CANON_LIMIT && b.n() <= CANON_LIMIT, "graph too large for canonical codes");
    a.n() == b.n() && a.m() == b.m() && canonical_code(a) == canonical_code(b)
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices (ids `0..n`). Every graph on `n` vertices arises from one on
/// `n - 1` vertices by adding a vertex, which drives the enumeration.
pub fn graphs_on(n: usize) -> Vec<Graph> {
    assert!(n <= 9, "enumeration is only practical for tiny graphs");
    let mut level: Vec<Vec<u16>> = vec![vec![]];
    for k in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            for nb in 0u16..(1 << (k - 1)) {
                let mut adj = base.clone();
                for (u, a) in adj.iter_mut().enumerate() {
                    *a |= (nb >> u & 1) << (k - 1);
                }
                adj.push(nb);
                if seen.insert(canonical_code_masks(&adj)) {
                    next.push(adj);
                }
            }
        }
        level = next;
    }
    level
        .into_iter()
        .map(|adj| {
            let n = adj.len();
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| adj[u] >> v & 1 == 1)
                .collect();
            Graph::from_edges(n, edges).unwrap()
        })
        .collect()
}

/// Isomorphism class representatives on at most `n` vertices, smallest first.
pub fn graphs_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(graphs_on).collect()
}
