//! Exhaustive ground truth for small instances, by set-partition enumeration.

use crate::bits::{bits, Dense, Mask};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::partition::{blocks_of, visit_partitions};
use crate::recognize::{recognize_lists, GraphClass, Lists};
use crate::witness::WitnessStructure;
use std::collections::BTreeSet;

/// Environment variable overriding [`OracleBudget::max_vertices`].
pub const CAP_ENV: &str = "IDENTIKIT_ORACLE_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices: usize,
    pub max_partitions: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_vertices: 8, max_partitions: 50_000_000 }
    }
}

impl OracleBudget {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        OracleBudget { max_vertices, ..Self::default() }
    }

    /// Default budget, with the vertex cap taken from `IDENTIKIT_ORACLE_CAP`
    /// when it holds a positive integer.
    pub fn from_env() -> Self {
        let mut b = Self::default();
        if let Some(cap) = std::env::var(CAP_ENV).ok().and_then(|s| s.trim().parse().ok()) {
            if cap > 0 {
                b.max_vertices = cap;
            }
        }
        b
    }

    fn admit(&self, n: usize, cap: usize) -> Result<()> {
        if n > cap {
            return Err(Error::BudgetExceeded(format!("{n} vertices, cap is {cap}")));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMin {
    Reachable(usize),
    Unreachable,
}

impl OracleMin {
    pub fn within(self, k: usize) -> bool {
        matches!(self, OracleMin::Reachable(m) if m <= k)
    }
}

fn block_lists(d: &Dense, rgs: &[usize], blocks: usize) -> (Vec<Mask>, Lists) {
    let mut masks = vec![0 as Mask; blocks];
    for (i, &b) in rgs.iter().enumerate() {
        masks[b] |= 1 << i;
    }
    let nbr: Vec<Mask> = masks.iter().map(|&m| d.open_nbr(m)).collect();
    let adj = (0..blocks)
        .map(|a| (0..blocks).filter(|&b| b != a && nbr[a] & masks[b] != 0).collect())
        .collect();
    (masks, adj)
}

/// Visits every partition of V(g), counting against the budget.
fn enumerate<F>(g: &Graph, budget: &OracleBudget, lo: usize, hi: usize, mut f: F) -> Result<()>
where
    F: FnMut(&Dense, &[usize], usize) -> bool,
{
    budget.admit(g.n(), budget.max_vertices)?;
    let d = Dense::new(g)?;
    let mut seen = 0u64;
    let mut over = false;
    visit_partitions(d.n(), lo, hi, |rgs, b| {
        seen += 1;
        if seen > budget.max_partitions {
            over = true;
            return false;
        }
        f(&d, rgs, b)
    });
    if over {
        return Err(Error::BudgetExceeded(format!("more than {} partitions", budget.max_partitions)));
    }
    Ok(())
}

/// Fewest identifications turning `g` into a member of `c`, together with a
/// witness (bags keyed `0..`) reaching it.
pub fn oracle_min_witness(
    g: &Graph,
    c: GraphClass,
    budget: &OracleBudget,
) -> Result<Option<(usize, WitnessStructure)>> {
    let n = g.n();
    let mut best: Option<(usize, Vec<usize>, usize)> = None;
    enumerate(g, budget, 0, n, |d, rgs, b| {
        let cost = n - b;
        if best.as_ref().is_some_and(|(c0, _, _)| *c0 <= cost) {
            return true;
        }
        let (_, adj) = block_lists(d, rgs, b);
        if recognize_lists(&adj, c) {
            best = Some((cost, rgs.to_vec(), b));
        }
        true
    })?;
    let ids: Vec<Vertex> = g.vertices().collect();
    Ok(best.map(|(cost, rgs, b)| (cost, WitnessStructure::from_blocks(blocks_of(&rgs, b, &ids)))))
}

pub fn oracle_min_identifications(g: &Graph, c: GraphClass, budget: &OracleBudget) -> Result<OracleMin> {
    Ok(match oracle_min_witness(g, c, budget)? {
        Some((cost, _)) => OracleMin::Reachable(cost),
        None => OracleMin::Unreachable,
    })
}

/// First witness (in restricted-growth order, then lexicographic bijection
/// order) identifying `g` to exactly `h`.
pub fn oracle_identify_to(g: &Graph, h: &Graph, budget: &OracleBudget) -> Result<Option<WitnessStructure>> {
    let t = h.n();
    if t > g.n() {
        budget.admit(g.n(), budget.max_vertices)?;
        return Ok(None);
    }
    let hv: Vec<Vertex> = h.vertices().collect();
    let hdeg: Vec<usize> = hv.iter().map(|&x| h.degree(x)).collect();
    let hadj: Vec<Vec<bool>> = hv.iter().map(|&x| hv.iter().map(|&y| h.has_edge(x, y)).collect()).collect();
    let mut hsorted = hdeg.clone();
    hsorted.sort_unstable();
    let ids: Vec<Vertex> = g.vertices().collect();
    let mut found = None;
    enumerate(g, budget, t, t, |d, rgs, b| {
        let (masks, adj) = block_lists(d, rgs, b);
        let mut degs: Vec<usize> = adj.iter().map(Vec::len).collect();
        degs.sort_unstable();
        if degs != hsorted {
            return true;
        }
        let mut assign = vec![usize::MAX; b];
        let mut used = vec![false; t];
        if biject(0, &adj, &hdeg, &hadj, &mut assign, &mut used) {
            let bags = (0..b)
                .map(|i| (hv[assign[i]], bits(masks[i]).map(|j| ids[j]).collect::<BTreeSet<_>>()))
                .collect();
            found = Some(WitnessStructure::new(bags));
            return false;
        }
        true
    })?;
    Ok(found)
}

pub(crate) fn biject(
    i: usize,
    adj: &Lists,
    hdeg: &[usize],
    hadj: &[Vec<bool>],
    assign: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == adj.len() {
        return true;
    }
    for x in 0..hdeg.len() {
        if used[x] || hdeg[x] != adj[i].len() {
            continue;
        }
        let ok = (0..i).all(|j| hadj[x][assign[j]] == adj[i].binary_search(&j).is_ok());
        if !ok {
            continue;
        }
        assign[i] = x;
        used[x] = true;
        if biject(i + 1, adj, hdeg, hadj, assign, used) {
            return true;
        }
        used[x] = false;
    }
    false
}

/// Minimum vertex cover size by subset enumeration in order of size.
pub fn oracle_min_vertex_cover(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    budget.admit(g.n(), budget.max_vertices + 4)?;
    let d = Dense::new(g)?;
    let n = d.n();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| bits(d.adj[u]).filter(move |&v| v > u).map(move |v| (u, v)))
        .collect();
    let mut best = n;
    for set in 0u64..(1u64 << n) {
        let size = set.count_ones() as usize;
        if size < best && edges.iter().all(|&(u, v)| set >> u & 1 == 1 || set >> v & 1 == 1) {
            best = size;
        }
    }
    Ok(best)
}

/// Whether `g` identifies to a clique with at most `k` identifications using
/// only bags holding at most one vertex of `s`.
pub fn oracle_constrained_clique(
    g: &Graph,
    s: &BTreeSet<Vertex>,
    k: usize,
    budget: &OracleBudget,
) -> Result<bool> {
    let n = g.n();
    if n == 0 {
        return Ok(false);
    }
    let ids: Vec<Vertex> = g.vertices().collect();
    let smask: Vec<bool> = ids.iter().map(|v| s.contains(v)).collect();
    let mut yes = false;
    enumerate(g, budget, n.saturating_sub(k).max(1), n, |d, rgs, b| {
        let mut s_count = vec![0; b];
        for (i, &blk) in rgs.iter().enumerate() {
            if smask[i] {
                s_count[blk] += 1;
            }
        }
        if s_count.iter().any(|&c| c > 1) {
            return true;
        }
        let (_, adj) = block_lists(d, rgs, b);
        if adj.iter().all(|a| a.len() + 1 == b) {
            yes = true;
            return false;
        }
        true
    })?;
    Ok(yes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::witness::verify_witness;

    fn min(g: &Graph, c: GraphClass) -> OracleMin {
        oracle_min_identifications(g, c, &OracleBudget::default()).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert_eq!(min(&Graph::cycle(4), GraphClass::Chordal), OracleMin::Reachable(1));
        assert_eq!(min(&Graph::complete(3), GraphClass::Star), OracleMin::Reachable(1));
        assert_eq!(min(&Graph::path(4), GraphClass::Path), OracleMin::Reachable(0));
        assert_eq!(min(&Graph::new(), GraphClass::Path), OracleMin::Unreachable);
        assert_eq!(min(&Graph::new(), GraphClass::Forest), OracleMin::Reachable(0));
    }

    #[test]
    fn identify_to_examples() {
        let b = OracleBudget::default();
        let c4 = Graph::cycle(4);
        let p3 = Graph::path(3);
        let w = oracle_identify_to(&c4, &p3, &b).unwrap().unwrap();
        assert!(verify_witness(&c4, &p3, &w).unwrap());
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 4)]).unwrap();
        assert_eq!(oracle_identify_to(&g, &g, &b).unwrap(), Some(WitnessStructure::identity(&g)));
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(oracle_identify_to(&two_k2, &Graph::complete(3), &b).unwrap(), None);
    }

    #[test]
    fn vertex_cover_examples() {
        let b = OracleBudget::default();
        assert_eq!(oracle_min_vertex_cover(&Graph::complete(3), &b).unwrap(), 2);
        assert_eq!(oracle_min_vertex_cover(&Graph::cycle(4), &b).unwrap(), 2);
        assert_eq!(oracle_min_vertex_cover(&Graph::path(5), &b).unwrap(), 2);
    }

    #[test]
    fn caps_are_enforced() {
        let b = OracleBudget::with_max_vertices(3);
        assert!(matches!(
            oracle_min_identifications(&Graph::path(4), GraphClass::Path, &b),
            Err(Error::BudgetExceeded(_))
        ));
        assert!(oracle_min_vertex_cover(&Graph::path(7), &b).is_ok());
        let tight = OracleBudget { max_vertices: 8, max_partitions: 3 };
        assert!(oracle_min_identifications(&Graph::path(4), GraphClass::Clique, &tight).is_err());
    }
}
