//! Membership tests for the ten target classes.

use crate::graph::{Graph, Vertex};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GraphClass {
    Path,
    LinearForest,
    Star,
    Tree,
    Forest,
    Clique,
    Cluster,
    Split,
    Interval,
    Chordal,
}

impl GraphClass {
    pub const ALL: [GraphClass; 10] = [
        GraphClass::Path,
        GraphClass::LinearForest,
        GraphClass::Star,
        GraphClass::Tree,
        GraphClass::Forest,
        GraphClass::Clique,
        GraphClass::Cluster,
        GraphClass::Split,
        GraphClass::Interval,
        GraphClass::Chordal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Path => "path",
            GraphClass::LinearForest => "linear-forest",
            GraphClass::Star => "star",
            GraphClass::Tree => "tree",
            GraphClass::Forest => "forest",
            GraphClass::Clique => "clique",
            GraphClass::Cluster => "cluster",
            GraphClass::Split => "split",
            GraphClass::Interval => "interval",
            GraphClass::Chordal => "chordal",
        }
    }

    /// Whether the empty graph belongs to the class.
    pub fn contains_empty(self) -> bool {
        recognize(&Graph::new(), self)
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

/// Sorted adjacency lists over `0..n`.
pub(crate) type Lists = Vec<Vec<usize>>;

pub(crate) fn lists(g: &Graph) -> (Lists, Vec<Vertex>) {
    let ids: Vec<Vertex> = g.vertices().collect();
    let adj = ids
        .iter()
        .map(|&v| g.neighbors(v).iter().map(|u| ids.binary_search(u).unwrap()).collect())
        .collect();
    (adj, ids)
}

pub fn recognize(g: &Graph, c: GraphClass) -> bool {
    recognize_lists(&lists(g).0, c)
}

fn component_sizes(adj: &Lists) -> Vec<(usize, usize)> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let (mut vs, mut deg) = (0, 0);
        while let Some(x) = stack.pop() {
            vs += 1;
            deg += adj[x].len();
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        out.push((vs, deg / 2));
    }
    out
}

pub(crate) fn recognize_lists(adj: &Lists, c: GraphClass) -> bool {
    let n = adj.len();
    let m: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    let max_deg = adj.iter().map(Vec::len).max().unwrap_or(0);
    let comps = || component_sizes(adj);
    let is_forest = || m + comps().len() == n;
    let is_tree = || n >= 1 && m + 1 == n && comps().len() == 1;
    match c {
        GraphClass::Forest => is_forest(),
        GraphClass::Tree => is_tree(),
        GraphClass::LinearForest => max_deg <= 2 && is_forest(),
        GraphClass::Path => max_deg <= 2 && is_tree(),
        GraphClass::Star => is_tree() && adj.iter().filter(|a| a.len() >= 2).count() <= 1,
        GraphClass::Clique => n >= 1 && m == n * (n - 1) / 2,
        GraphClass::Cluster => comps().iter().all(|&(v, e)| e == v * (v - 1) / 2),
        GraphClass::Split => split_size(adj).is_some(),
        GraphClass::Chordal => is_chordal(adj),
        GraphClass::Interval => is_chordal(adj) && at_free(adj),
    }
}

/// Degree-sequence test: returns the size of the clique side taken from the
/// top of the degree order when the graph is split.
fn split_size(adj: &Lists) -> Option<usize> {
    if adj.is_empty() {
        return None;
    }
    let mut d: Vec<usize> = adj.iter().map(Vec::len).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let k = (1..=d.len()).filter(|&i| d[i - 1] + 1 >= i).max().unwrap();
    let head: usize = d[..k].iter().sum();
    let tail: usize = d[k..].iter().sum();
    (head == k * (k - 1) + tail).then_some(k)
}

/// A split partition `(K, I)` with `K` a maximum clique, or `None` when the
/// graph is not split.
pub fn split_partition(g: &Graph) -> Option<(BTreeSet<Vertex>, BTreeSet<Vertex>)> {
    let (adj, ids) = lists(g);
    let k = split_size(&adj)?;
    let mut order: Vec<usize> = (0..adj.len()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].len()), v));
    let clique = order[..k].iter().map(|&i| ids[i]).collect();
    let indep = order[k..].iter().map(|&i| ids[i]).collect();
    Some((clique, indep))
}

/// Maximum cardinality search visit order.
fn mcs_order(adj: &Lists) -> Vec<usize> {
    let n = adj.len();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .unwrap();
        done[v] = true;
        order.push(v);
        for &u in &adj[v] {
            if !done[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

fn is_peo(adj: &Lists, peo: &[usize]) -> bool {
    let n = adj.len();
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<usize> = adj[v].iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        if let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) {
            if later
                .iter()
                .any(|&u| u != parent && adj[parent].binary_search(&u).is_err())
            {
                return false;
            }
        }
    }
    true
}

pub(crate) fn is_chordal(adj: &Lists) -> bool {
    let mut order = mcs_order(adj);
    order.reverse();
    is_peo(adj, &order)
}

/// A perfect elimination ordering, if the graph is chordal.
pub fn perfect_elimination_order(g: &Graph) -> Option<Vec<Vertex>> {
    let (adj, ids) = lists(g);
    let mut order = mcs_order(&adj);
    order.reverse();
    is_peo(&adj, &order).then(|| order.into_iter().map(|i| ids[i]).collect())
}

/// No asteroidal triple: for every vertex, label the components of the graph
/// minus its closed neighbourhood, then test all independent triples.
fn at_free(adj: &Lists) -> bool {
    let n = adj.len();
    const NONE: usize = usize::MAX;
    let mut mat = vec![vec![false; n]; n];
    for (v, nb) in adj.iter().enumerate() {
        for &u in nb {
            mat[v][u] = true;
        }
    }
    let labels: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            let mut lab = vec![NONE; n];
            let blocked = |v: usize| v == x || mat[x][v];
            let mut next = 0;
            for s in 0..n {
                if blocked(s) || lab[s] != NONE {
                    continue;
                }
                lab[s] = next;
                let mut stack = vec![s];
                while let Some(a) = stack.pop() {
                    for &b in &adj[a] {
                        if !blocked(b) && lab[b] == NONE {
                            lab[b] = next;
                            stack.push(b);
                        }
                    }
                }
                next += 1;
            }
            lab
        })
        .collect();
    for a in 0..n {
        for b in a + 1..n {
            if mat[a][b] || labels[a][b] == NONE {
                continue;
            }
            for c in b + 1..n {
                if mat[a][c] || mat[b][c] {
                    continue;
                }
                if labels[a][b] == labels[a][c] && labels[b][a] == labels[b][c] && labels[c][a] == labels[c][b] {
                    return false;
                }
            }
        }
    }
    true
}
