//! Instance generators from independent set, bin packing, set cover and
//! clique identification, with brute-force solvers for the source problems.

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, Vertex};
use crate::target::linear_forest;
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub universe_size: usize,
    pub sets: Vec<BTreeSet<usize>>,
    pub budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinPackingInstance {
    pub sizes: Vec<usize>,
    pub bins: usize,
    pub capacity: usize,
}

fn next_id(g: &Graph) -> Vertex {
    g.max_id().map_or(0, |m| m + 1)
}

/// Adds a universal vertex. The budget is |V(G')| - (p + 1): the star,
/// tree and forest instances are YES iff `g` has an independent set of size
/// `p`.
pub fn gen_tree_from_independent_set(g: &Graph, p: usize) -> Result<Instance> {
    if p < 2 || p > g.n() {
        return Err(Error::PreconditionViolated(format!("need 2 <= p <= n, got p = {p}, n = {}", g.n())));
    }
    let u = next_id(g);
    let mut h = g.clone();
    h.insert_vertex(u);
    for v in g.vertices() {
        h.insert_edge(u, v);
    }
    let budget = h.n() - (p + 1);
    Ok(Instance::by_k(h, budget))
}

/// One path of length s_i per item and `bins` paths of length `capacity`.
/// Both are numbered consecutively from 0.
pub fn gen_linear_forest_from_bin_packing(bp: &BinPackingInstance) -> Result<(Graph, Graph)> {
    let total: usize = bp.sizes.iter().sum();
    let expected = bp.bins * bp.capacity;
    if total != expected {
        return Err(Error::CapacityMismatch { total, expected });
    }
    if bp.sizes.contains(&0) {
        return Err(Error::PreconditionViolated("item sizes must be positive".into()));
    }
    Ok((linear_forest(&bp.sizes), linear_forest(&vec![bp.capacity; bp.bins])))
}

/// Clique instance with budget m - 1. Ids: element u owns the block
/// `u*2m .. (u+1)*2m`, set j is `2nm + j`, the independent pad follows.
pub fn gen_clique_from_set_cover(sc: &SetCoverInstance) -> Result<Instance> {
    let (n, m, k) = (sc.universe_size, sc.sets.len(), sc.budget);
    if k < 1 || k > m {
        return Err(Error::PreconditionViolated(format!("need 1 <= k <= m, got k = {k}, m = {m}")));
    }
    if let Some(&u) = sc.sets.iter().flatten().find(|&&u| u >= n) {
        return Err(Error::PreconditionViolated(format!("element {u} outside the universe")));
    }
    let block = |u: usize| u * 2 * m..(u + 1) * 2 * m;
    let set_v = |j: usize| 2 * n * m + j;
    let pad = (0..m - k).map(|i| 2 * n * m + m + i);
    let mut edges = Vec::new();
    let universe: Vec<Vertex> = (0..2 * n * m).collect();
    for (i, &a) in universe.iter().enumerate() {
        edges.extend(universe[i + 1..].iter().map(|&b| (a, b)));
    }
    for a in 0..m {
        edges.extend((a + 1..m).map(|b| (set_v(a), set_v(b))));
    }
    for (j, s) in sc.sets.iter().enumerate() {
        for &u in s {
            edges.extend(block(u).map(|x| (x, set_v(j))));
        }
    }
    for z in pad {
        edges.extend(universe.iter().map(|&x| (x, z)));
    }
    let g = Graph::from_edges(2 * n * m + 2 * m - k, edges)?;
    Ok(Instance::by_k(g, m.saturating_sub(1)))
}

/// Adds an independent set of 2k + 2 vertices adjacent to all of V(G); the
/// budget is unchanged. Needs n >= k + 1.
pub fn gen_split_from_clique(inst: &Instance) -> Result<Instance> {
    let (g, k) = (&inst.graph, inst.budget);
    if g.n() < k + 1 {
        return Err(Error::PreconditionViolated(format!("need n >= k + 1, got n = {}, k = {k}", g.n())));
    }
    let first = next_id(g);
    let mut h = g.clone();
    for z in first..first + 2 * k + 2 {
        h.insert_vertex(z);
        for v in g.vertices() {
            h.insert_edge(z, v);
        }
    }
    Ok(Instance::by_k(h, k))
}

/// Pair (G', H): G' adds `a`, `b` adjacent to all of V(G) and `a'` pendant
/// at `a` (ids max+1, max+2, max+3); H is a clique Q on n - k vertices
/// (ids `0..n-k`) with `x_a`, `x_b` joined to all of Q and `x_a'` pendant at
/// `x_a`. Needs n >= k + 2.
pub fn gen_chordal_target_from_clique(inst: &Instance) -> Result<(Graph, Graph)> {
    let (g, k) = (&inst.graph, inst.budget);
    let n = g.n();
    if n < k + 2 {
        return Err(Error::PreconditionViolated(format!("need n >= k + 2, got n = {n}, k = {k}")));
    }
    let a = next_id(g);
    let (b, a2) = (a + 1, a + 2);
    let mut gp = g.clone();
    for z in [a, b, a2] {
        gp.insert_vertex(z);
    }
    for v in g.vertices() {
        gp.insert_edge(a, v);
        gp.insert_edge(b, v);
    }
    gp.insert_edge(a, a2);
    let q = n - k;
    let (xa, xb, xa2) = (q, q + 1, q + 2);
    let mut edges: Vec<(Vertex, Vertex)> = (0..q).flat_map(|i| (i + 1..q).map(move |j| (i, j))).collect();
    edges.extend((0..q).flat_map(|i| [(i, xa), (i, xb)]));
    edges.push((xa, xa2));
    Ok((gp, Graph::from_edges(q + 3, edges)?))
}

/// Size of a maximum independent set, by branching on a vertex of maximum
/// degree.
pub fn max_independent_set(g: &Graph) -> usize {
    let Some(v) = g.vertices().max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))) else {
        return 0;
    };
    if g.degree(v) == 0 {
        return g.n();
    }
    let without = max_independent_set(&g.without(&BTreeSet::from([v])));
    let mut closed = g.neighbors(v).clone();
    closed.insert(v);
    let with = 1 + max_independent_set(&g.without(&closed));
    without.max(with)
}

/// Whether at most `budget` sets cover the universe, by subset enumeration.
pub fn set_cover_brute(sc: &SetCoverInstance) -> bool {
    let m = sc.sets.len();
    assert!(m < 32, "too many sets for enumeration");
    (0u32..1 << m).any(|pick| {
        pick.count_ones() as usize <= sc.budget && {
            let covered: BTreeSet<usize> =
                (0..m).filter(|&j| pick >> j & 1 == 1).flat_map(|j| sc.sets[j].iter().copied()).collect();
            covered.len() == sc.universe_size
        }
    })
}

/// Whether the items fit into the bins, by assigning items (largest first)
/// to bins with residual capacity.
pub fn bin_packing_brute(bp: &BinPackingInstance) -> bool {
    fn place(items: &[usize], load: &mut [usize], cap: usize) -> bool {
        let Some((&s, rest)) = items.split_first() else {
            return true;
        };
        let mut tried = BTreeSet::new();
        for b in 0..load.len() {
            if load[b] + s <= cap && tried.insert(load[b]) {
                load[b] += s;
                if place(rest, load, cap) {
                    return true;
                }
                load[b] -= s;
            }
        }
        false
    }
    let mut items = bp.sizes.clone();
    items.sort_unstable_by(|a, b| b.cmp(a));
    place(&items, &mut vec![0; bp.bins], bp.capacity)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::solve_clique_k;
    use crate::recognize::{recognize, GraphClass};
    use crate::target::identify_to_linear_forest;

    #[test]
    fn independent_set_generator() {
        let inst = gen_tree_from_independent_set(&Graph::cycle(4), 2).unwrap();
        assert_eq!((inst.graph.n(), inst.budget), (5, 2));
        let inst = gen_tree_from_independent_set(&Graph::edgeless(2), 2).unwrap();
        assert_eq!(inst.budget, 0);
        assert!(recognize(&inst.graph, GraphClass::Star));
        assert!(gen_tree_from_independent_set(&Graph::complete(3), 1).is_err());
        assert_eq!(max_independent_set(&Graph::cycle(5)), 2);
    }

    #[test]
    fn bin_packing_generator() {
        let bp = BinPackingInstance { sizes: vec![1, 1, 2], bins: 2, capacity: 2 };
        let (g, l) = gen_linear_forest_from_bin_packing(&bp).unwrap();
        assert_eq!((g.n(), l.n()), (7, 6));
        assert!(bin_packing_brute(&bp));
        assert!(identify_to_linear_forest(&g, &[2, 2]));
        let bad = BinPackingInstance { sizes: vec![3, 1], bins: 2, capacity: 2 };
        assert!(!bin_packing_brute(&bad));
        let (g, _) = gen_linear_forest_from_bin_packing(&bad).unwrap();
        assert!(!identify_to_linear_forest(&g, &[2, 2]));
        let off = BinPackingInstance { sizes: vec![3], bins: 2, capacity: 2 };
        assert_eq!(gen_linear_forest_from_bin_packing(&off), Err(Error::CapacityMismatch { total: 3, expected: 4 }));
    }

    #[test]
    fn set_cover_generator() {
        let sc = SetCoverInstance { universe_size: 1, sets: vec![BTreeSet::from([0])], budget: 1 };
        let inst = gen_clique_from_set_cover(&sc).unwrap();
        assert_eq!(inst.graph, Graph::complete(3));
        assert_eq!(inst.budget, 0);
        let no = SetCoverInstance { universe_size: 2, sets: vec![BTreeSet::from([0]), BTreeSet::from([1])], budget: 1 };
        let inst = gen_clique_from_set_cover(&no).unwrap();
        assert_eq!(inst.graph.n(), 2 * 2 * 2 + 2 * 2 - 1);
        assert!(!set_cover_brute(&no));
        assert!(!solve_clique_k(&inst.graph, inst.budget).unwrap().is_yes());
        let yes = SetCoverInstance { universe_size: 2, sets: vec![BTreeSet::from([0, 1])], budget: 1 };
        let inst = gen_clique_from_set_cover(&yes).unwrap();
        assert!(solve_clique_k(&inst.graph, inst.budget).unwrap().is_yes());
    }

    #[test]
    fn clique_generators() {
        let src = Instance::by_k(Graph::cycle(4), 1);
        let split = gen_split_from_clique(&src).unwrap();
        assert_eq!(split.graph.n(), 8);
        let (gp, h) = gen_chordal_target_from_clique(&src).unwrap();
        assert_eq!((gp.n(), h.n()), (7, 6));
        assert!(recognize(&h, GraphClass::Split) && recognize(&h, GraphClass::Interval));
        assert!(gen_chordal_target_from_clique(&Instance::by_k(Graph::complete(2), 1)).is_err());
    }
}
