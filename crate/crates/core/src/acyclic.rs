//! Identification into paths, linear forests, stars, trees and forests.

use crate::error::Result;
use crate::graph::{Edge, Graph, Instance, Vertex};
use crate::recognize::{recognize, GraphClass};
use crate::search::min_to_class;
use crate::solve::{Certificate, SolveResult};
use std::collections::{BTreeMap, BTreeSet};

/// BFS layers of the component containing `start`.
pub(crate) fn bfs_layers(g: &Graph, start: Vertex) -> Vec<BTreeSet<Vertex>> {
    let mut layers: Vec<BTreeSet<Vertex>> = Vec::new();
    for (v, d) in g.distances(start) {
        if layers.len() <= d {
            layers.resize(d + 1, BTreeSet::new());
        }
        layers[d].insert(v);
    }
    layers
}

/// Bags of a path witness for a connected component: the BFS layers from one
/// end of a diametral pair. There are diam + 1 of them.
pub(crate) fn component_path_bags(g: &Graph, comp: &BTreeSet<Vertex>) -> Vec<BTreeSet<Vertex>> {
    let (a, _, _) = g.diametral_pair(comp);
    bfs_layers(&g.induced(comp), a)
}

/// Path witness of length exactly `len` (edges) for a group of components
/// whose diameters sum to at least `len`: layers are chained across
/// components, sharing one bag at each junction, then the tail is folded.
pub(crate) fn group_path_bags(g: &Graph, comps: &[BTreeSet<Vertex>], len: usize) -> Vec<BTreeSet<Vertex>> {
    let mut bags: Vec<BTreeSet<Vertex>> = Vec::new();
    for comp in comps {
        let layers = component_path_bags(g, comp);
        let mut it = layers.into_iter();
        match bags.last_mut() {
            Some(last) => last.extend(it.next().unwrap()),
            None => bags.push(it.next().unwrap()),
        }
        bags.extend(it);
    }
    assert!(bags.len() > len, "diameters too small for the requested path");
    let tail: BTreeSet<Vertex> = bags.drain(len..).flatten().collect();
    bags.push(tail);
    bags
}

/// g identifies to a path within k iff
/// k >= n - (sum of component diameters + 1).
pub fn solve_path(g: &Graph, k: usize) -> SolveResult {
    if g.is_empty() {
        return SolveResult::No;
    }
    let comps = g.components();
    let total: usize = comps.iter().map(|c| g.diameter(c).unwrap()).sum();
    let ell = total + 1;
    if k + ell < g.n() {
        return SolveResult::No;
    }
    SolveResult::yes_blocks(g, group_path_bags(g, &comps, total))
}

/// YES iff k >= n - sum over components of (diam + 1); each component keeps
/// its own path.
pub fn solve_linear_forest(g: &Graph, k: usize) -> SolveResult {
    let comps = g.components();
    let keep: usize = comps.iter().map(|c| g.diameter(c).unwrap() + 1).sum();
    if k + keep < g.n() {
        return SolveResult::No;
    }
    SolveResult::yes_blocks(g, comps.iter().flat_map(|c| component_path_bags(g, c)))
}

/// A vertex cover of size at most `k`, by branching on the endpoints of the
/// first uncovered edge.
pub fn vertex_cover(g: &Graph, k: usize) -> Option<BTreeSet<Vertex>> {
    let Some((u, v)) = g.edges().next() else {
        return Some(BTreeSet::new());
    };
    if k == 0 {
        return None;
    }
    // A cover of size k covers at most k * maxdeg edges.
    let max_deg = g.vertices().map(|x| g.degree(x)).max().unwrap_or(0);
    if g.m() > k * max_deg {
        return None;
    }
    for x in [u, v] {
        if let Some(mut cover) = vertex_cover(&g.without(&BTreeSet::from([x])), k - 1) {
            cover.insert(x);
            return Some(cover);
        }
    }
    None
}

/// Smallest vertex cover, growing the size bound until one exists.
pub fn min_vertex_cover(g: &Graph) -> BTreeSet<Vertex> {
    (0..=g.n()).find_map(|k| vertex_cover(g, k)).unwrap()
}

/// Star identification via vertex cover: with p isolated vertices, g reaches
/// a star within k iff it has a vertex cover of size at most k - p + 1.
pub fn solve_star(g: &Graph, k: usize) -> SolveResult {
    let n = g.n();
    if n == 0 {
        return SolveResult::No;
    }
    let isolated: BTreeSet<Vertex> = g.isolated_vertices().into_iter().collect();
    if g.m() == 0 {
        return if k + 1 >= n {
            SolveResult::yes_blocks(g, [g.vertex_set()])
        } else {
            SolveResult::No
        };
    }
    let p = isolated.len();
    if k + 1 < p {
        return SolveResult::No;
    }
    let Some(cover) = vertex_cover(g, k + 1 - p) else {
        return SolveResult::No;
    };
    let centre: BTreeSet<Vertex> = cover.union(&isolated).copied().collect();
    let mut blocks: Vec<BTreeSet<Vertex>> =
        g.vertices().filter(|v| !centre.contains(v)).map(|v| BTreeSet::from([v])).collect();
    blocks.push(centre);
    SolveResult::yes_blocks(g, blocks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelVerdict {
    Reduced(Instance),
    TrivialYes,
    TrivialNo,
}

/// Record of the forest kernel's rule applications. Ids in the trace are the
/// ids live when the rule fired.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestKernelTrace {
    pub removed_bridges: Vec<Edge>,
    pub removed_isolated: Vec<Vertex>,
    pub forced_identifications: Vec<(Vertex, Vertex)>,
    pub final_budget: i64,
    pub verdict: KernelVerdict,
}

/// Vertex bookkeeping that lets a kernel solution be pulled back to the input.
pub(crate) struct ForestLift {
    /// Original vertices behind each vertex of the reduced graph.
    pub origins: BTreeMap<Vertex, BTreeSet<Vertex>>,
    /// Original vertices behind each vertex removed as isolated.
    pub removed: Vec<BTreeSet<Vertex>>,
}

/// Size bound of the reduced forest instance.
pub fn forest_kernel_bound(k: usize) -> usize {
    2 * k + (k + 1) * (2 * k * (2 * k).saturating_sub(1) / 2)
}

pub(crate) fn forest_kernel(g: &Graph, k: usize) -> (ForestKernelTrace, ForestLift) {
    let mut g = g.clone();
    let mut budget = k as i64;
    let mut lift = ForestLift {
        origins: g.vertices().map(|v| (v, BTreeSet::from([v]))).collect(),
        removed: Vec::new(),
    };
    let mut trace = ForestKernelTrace {
        removed_bridges: Vec::new(),
        removed_isolated: Vec::new(),
        forced_identifications: Vec::new(),
        final_budget: budget,
        verdict: KernelVerdict::TrivialYes,
    };
    let verdict = loop {
        // Rule 1 to fixpoint.
        loop {
            let bridges = g.bridges();
            for &(u, v) in &bridges {
                g.delete_edge(u, v);
            }
            trace.removed_bridges.extend(bridges.iter().copied());
            let isolated = g.isolated_vertices();
            for &v in &isolated {
                g.delete_vertex(v);
                lift.removed.push(lift.origins.remove(&v).unwrap());
            }
            trace.removed_isolated.extend(isolated.iter().copied());
            if bridges.is_empty() && isolated.is_empty() {
                break;
            }
        }
        if g.is_empty() {
            break KernelVerdict::TrivialYes;
        }
        // Rule 2, smallest qualifying pair.
        let threshold = (budget + 1) as usize;
        let vs: Vec<Vertex> = g.vertices().collect();
        let pair = vs.iter().enumerate().find_map(|(i, &u)| {
            vs[i + 1..]
                .iter()
                .find(|&&v| g.neighbors(u).intersection(g.neighbors(v)).count() > threshold)
                .map(|&v| (u, v))
        });
        let Some((u, v)) = pair else {
            let bound = forest_kernel_bound(budget as usize);
            break if g.n() > bound {
                KernelVerdict::TrivialNo
            } else {
                KernelVerdict::Reduced(Instance::by_k(g.clone(), budget as usize))
            };
        };
        let (next, w) = g.identify_with_id(u, v).unwrap();
        let mut merged = lift.origins.remove(&u).unwrap();
        merged.extend(lift.origins.remove(&v).unwrap());
        lift.origins.insert(w, merged);
        g = next;
        trace.forced_identifications.push((u, v));
        budget -= 1;
        if budget < 0 {
            break KernelVerdict::TrivialNo;
        }
    };
    trace.final_budget = budget;
    trace.verdict = verdict;
    (trace, lift)
}

/// Exhaustive forest kernel: Rule 1 deletes bridges and isolated vertices,
/// Rule 2 identifies a pair with more than k + 1 common neighbours.
pub fn kernelize_forest(g: &Graph, k: usize) -> ForestKernelTrace {
    forest_kernel(g, k).0
}

/// Forest identification: kernel, then per-component exhaustive search on
/// the reduced graph (the minimum is additive over components).
pub fn solve_forest(g: &Graph, k: usize) -> Result<SolveResult> {
    let (trace, lift) = forest_kernel(g, k);
    let mut blocks: Vec<BTreeSet<Vertex>> = lift.removed.clone();
    match trace.verdict {
        KernelVerdict::TrivialNo => return Ok(SolveResult::No),
        KernelVerdict::TrivialYes => {}
        KernelVerdict::Reduced(inst) => {
            let mut left = inst.budget;
            for comp in inst.graph.components() {
                let sub = inst.graph.induced(&comp);
                let Some((cost, parts)) = min_to_class(&sub, left, GraphClass::Forest)? else {
                    return Ok(SolveResult::No);
                };
                left -= cost;
                for part in parts {
                    blocks.push(part.iter().flat_map(|v| lift.origins[v].iter().copied()).collect());
                }
            }
        }
    }
    let cert = Certificate::from_blocks(g, blocks);
    debug_assert!(recognize(&cert.target, GraphClass::Forest));
    debug_assert!(cert.identifications(g.n()) <= k);
    Ok(SolveResult::Yes(cert))
}

/// Tree identification: with s components, NO when s > k + 1, otherwise the
/// forest answer at budget k - s + 1; the forest's trees are then glued
/// through one bag each.
pub fn solve_tree(g: &Graph, k: usize) -> Result<SolveResult> {
    if g.is_empty() {
        return Ok(SolveResult::No);
    }
    let s = g.components().len();
    if s > k + 1 {
        return Ok(SolveResult::No);
    }
    let SolveResult::Yes(cert) = solve_forest(g, k + 1 - s)? else {
        return Ok(SolveResult::No);
    };
    let mut glue = BTreeSet::new();
    let mut blocks: Vec<BTreeSet<Vertex>> = Vec::new();
    for comp in cert.target.components() {
        let first = *comp.first().unwrap();
        glue.extend(cert.witness.bags[&first].iter().copied());
        blocks.extend(comp.iter().skip(1).map(|x| cert.witness.bags[x].clone()));
    }
    blocks.push(glue);
    let out = Certificate::from_blocks(g, blocks);
    debug_assert!(recognize(&out.target, GraphClass::Tree));
    debug_assert!(out.identifications(g.n()) <= k);
    Ok(SolveResult::Yes(out))
}
