//! Witness structures: partitions of V(G) into bags indexed by target vertices.

use crate::error::{Error, Result};
use crate::graph::{Graph, IdentificationSequence, Vertex};
use std::collections::{BTreeMap, BTreeSet};

/// Bags keyed by target vertex. A valid witness partitions V(G) into nonempty
/// bags whose adjacency pattern is exactly E(H).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WitnessStructure {
    pub bags: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl WitnessStructure {
    pub fn new(bags: BTreeMap<Vertex, BTreeSet<Vertex>>) -> Self {
        WitnessStructure { bags }
    }

    /// Keys `0..` assigned to blocks in order of their smallest member.
    pub fn from_blocks<I: IntoIterator<Item = BTreeSet<Vertex>>>(blocks: I) -> Self {
        let mut blocks: Vec<BTreeSet<Vertex>> = blocks.into_iter().collect();
        blocks.sort_by_key(|b| b.first().copied());
        WitnessStructure {
            bags: blocks.into_iter().enumerate().collect(),
        }
    }

    /// One singleton bag per vertex, keyed by the vertex itself.
    pub fn identity(g: &Graph) -> Self {
        WitnessStructure {
            bags: g.vertices().map(|v| (v, BTreeSet::from([v]))).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn bag(&self, x: Vertex) -> Option<&BTreeSet<Vertex>> {
        self.bags.get(&x)
    }

    /// Number of identifications the witness stands for on a graph with
    /// `n` vertices.
    pub fn identifications(&self, n: usize) -> usize {
        n.saturating_sub(self.bags.len())
    }

    /// Map from each source vertex to the key of its bag.
    pub fn owner(&self) -> BTreeMap<Vertex, Vertex> {
        self.bags
            .iter()
            .flat_map(|(&x, bag)| bag.iter().map(move |&v| (v, x)))
            .collect()
    }

    /// Same bags with keys renamed to `0..` in key order, plus the old keys.
    pub fn normalized(&self) -> (WitnessStructure, Vec<Vertex>) {
        let old: Vec<Vertex> = self.bags.keys().copied().collect();
        let bags = self.bags.values().cloned().enumerate().collect();
        (WitnessStructure { bags }, old)
    }

    /// Renames bag keys through `f`.
    pub fn rekeyed<F: Fn(Vertex) -> Vertex>(&self, f: F) -> WitnessStructure {
        WitnessStructure {
            bags: self.bags.iter().map(|(&x, b)| (f(x), b.clone())).collect(),
        }
    }

    /// Replaces every member `v` by the set `expand(v)`.
    pub fn expanded<F: Fn(Vertex) -> BTreeSet<Vertex>>(&self, expand: F) -> WitnessStructure {
        WitnessStructure {
            bags: self
                .bags
                .iter()
                .map(|(&x, b)| (x, b.iter().flat_map(|&v| expand(v)).collect()))
                .collect(),
        }
    }

    /// An identification sequence realizing the witness, folding each bag in
    /// key order, together with the final vertex id of every bag.
    pub fn to_sequence(&self, g: &Graph) -> (IdentificationSequence, BTreeMap<Vertex, Vertex>) {
        let mut next = g.max_id().map_or(0, |m| m + 1);
        let mut steps = Vec::new();
        let mut finals = BTreeMap::new();
        for (&x, bag) in &self.bags {
            let mut it = bag.iter().copied();
            let Some(mut cur) = it.next() else { continue };
            for v in it {
                steps.push((cur, v));
                cur = next;
                next += 1;
            }
            finals.insert(x, cur);
        }
        (IdentificationSequence::new(steps), finals)
    }
}

fn check_partition(g: &Graph, w: &WitnessStructure) -> std::result::Result<(), String> {
    let mut seen = BTreeSet::new();
    for (x, bag) in &w.bags {
        if bag.is_empty() {
            return Err(format!("bag {x} is empty"));
        }
        for &v in bag {
            if !seen.insert(v) {
                return Err(format!("vertex {v} appears in two bags"));
            }
        }
    }
    if seen.len() != g.n() {
        return Err("bags do not cover every vertex".into());
    }
    Ok(())
}

fn check_members(g: &Graph, w: &WitnessStructure) -> Result<()> {
    for (x, bag) in &w.bags {
        if let Some(v) = bag.iter().find(|v| !g.has_vertex(**v)) {
            return Err(Error::MalformedWitness(format!("bag {x} holds unknown vertex {v}")));
        }
    }
    Ok(())
}

/// Graph on the bag keys where two keys are adjacent iff their bags are.
pub fn quotient(g: &Graph, w: &WitnessStructure) -> Result<Graph> {
    check_members(g, w)?;
    check_partition(g, w).map_err(Error::MalformedWitness)?;
    Ok(quotient_unchecked(g, w))
}

pub(crate) fn quotient_unchecked(g: &Graph, w: &WitnessStructure) -> Graph {
    let owner = w.owner();
    let mut h = Graph::with_vertices(w.bags.keys().copied());
    for (u, v) in g.edges() {
        let (a, b) = (owner[&u], owner[&v]);
        if a != b {
            h.insert_edge(a, b);
        }
    }
    h
}

/// Checks that `w` is an `h`-witness structure of `g`.
///
/// Returns `Err(MalformedWitness)` when the keys differ from V(h) or a member
/// is not a vertex of `g`; otherwise `Ok(false)` for any other defect.
pub fn verify_witness(g: &Graph, h: &Graph, w: &WitnessStructure) -> Result<bool> {
    if !w.bags.keys().copied().eq(h.vertices()) {
        return Err(Error::MalformedWitness("bag keys differ from the target vertices".into()));
    }
    check_members(g, w)?;
    if check_partition(g, w).is_err() {
        return Ok(false);
    }
    Ok(quotient_unchecked(g, w) == *h)
}

/// Identifies each block into the vertex carrying its smallest id. Vertices
/// outside every block are untouched. Returns the graph and, for every
/// remaining vertex, the set of original vertices it stands for.
pub fn contract_blocks(
    g: &Graph,
    blocks: &[BTreeSet<Vertex>],
) -> Result<(Graph, BTreeMap<Vertex, BTreeSet<Vertex>>)> {
    let mut rep: BTreeMap<Vertex, Vertex> = g.vertices().map(|v| (v, v)).collect();
    let mut used = BTreeSet::new();
    for b in blocks {
        let Some(&r) = b.first() else { continue };
        for &v in b {
            if !g.has_vertex(v) {
                return Err(Error::UnknownVertex(v));
            }
            if !used.insert(v) {
                return Err(Error::MalformedWitness(format!("vertex {v} in two blocks")));
            }
            rep.insert(v, r);
        }
    }
    let mut origins: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
    for (&v, &r) in &rep {
        origins.entry(r).or_default().insert(v);
    }
    let mut h = Graph::with_vertices(origins.keys().copied());
    for (u, v) in g.edges() {
        let (a, b) = (rep[&u], rep[&v]);
        if a != b {
            h.insert_edge(a, b);
        }
    }
    Ok((h, origins))
}

/// Makes the bags of the given pendant target vertices singletons while
/// keeping the witness valid: the surplus of such a bag moves into the bag of
/// its unique neighbour.
///
/// `pendants` must be pairwise nonadjacent vertices of degree one in `h`.
pub fn singleton_pendant_bags(
    g: &Graph,
    h: &Graph,
    w: &WitnessStructure,
    pendants: &BTreeSet<Vertex>,
) -> Result<WitnessStructure> {
    for &y in pendants {
        if h.degree(y) != 1 {
            return Err(Error::PreconditionViolated(format!("{y} is not pendant in the target")));
        }
        if h.neighbors(y).iter().any(|z| pendants.contains(z)) {
            return Err(Error::PreconditionViolated("pendant vertices must be nonadjacent".into()));
        }
    }
    let mut out = w.clone();
    for &y in pendants {
        let z = *h.neighbors(y).first().unwrap();
        let bag_y = out.bags[&y].clone();
        if bag_y.len() < 2 {
            continue;
        }
        let bag_z = &out.bags[&z];
        let keep = *bag_y
            .iter()
            .find(|&&v| !g.neighbors(v).is_disjoint(bag_z))
            .ok_or_else(|| Error::MalformedWitness(format!("bag {y} not adjacent to bag {z}")))?;
        let rest: Vec<Vertex> = bag_y.iter().copied().filter(|&v| v != keep).collect();
        out.bags.insert(y, BTreeSet::from([keep]));
        out.bags.get_mut(&z).unwrap().extend(rest);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(bags: &[(Vertex, &[Vertex])]) -> WitnessStructure {
        WitnessStructure::new(bags.iter().map(|(x, b)| (*x, b.iter().copied().collect())).collect())
    }

    #[test]
    fn c4_onto_p3() {
        let g = Graph::cycle(4);
        let h = Graph::path(3);
        assert!(verify_witness(&g, &h, &ws(&[(0, &[0]), (1, &[1, 3]), (2, &[2])])).unwrap());
        assert!(!verify_witness(&g, &h, &ws(&[(0, &[0]), (1, &[1]), (2, &[2, 3])])).unwrap());
        assert_eq!(quotient(&g, &ws(&[(0, &[0]), (1, &[1, 3]), (2, &[2])])).unwrap(), h);
    }

    #[test]
    fn disconnected_bag_is_legal() {
        // edges ab, cd
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let h = Graph::path(3);
        assert!(verify_witness(&g, &h, &ws(&[(0, &[0]), (1, &[1, 2]), (2, &[3])])).unwrap());
    }

    #[test]
    fn malformed_versus_false() {
        let g = Graph::path(3);
        let h = Graph::path(2);
        assert!(matches!(
            verify_witness(&g, &h, &ws(&[(0, &[0]), (5, &[1, 2])])),
            Err(Error::MalformedWitness(_))
        ));
        assert!(matches!(
            verify_witness(&g, &h, &ws(&[(0, &[0]), (1, &[1, 9])])),
            Err(Error::MalformedWitness(_))
        ));
        // overlapping bags
        assert!(!verify_witness(&g, &h, &ws(&[(0, &[0, 1]), (1, &[1, 2])])).unwrap());
        // missing vertex
        assert!(!verify_witness(&g, &h, &ws(&[(0, &[0]), (1, &[1])])).unwrap());
    }

    #[test]
    fn trivial_quotients() {
        let k4 = Graph::complete(4);
        assert_eq!(quotient(&k4, &ws(&[(0, &[0, 1, 2, 3])])).unwrap().n(), 1);
        assert_eq!(quotient(&k4, &WitnessStructure::identity(&k4)).unwrap(), k4);
        assert!(quotient(&k4, &ws(&[(0, &[0, 1])])).is_err());
    }

    #[test]
    fn sequence_matches_quotient() {
        let g = Graph::cycle(5);
        let w = ws(&[(0, &[0, 2]), (1, &[1]), (2, &[3, 4])]);
        let (seq, finals) = w.to_sequence(&g);
        let folded = g.apply_sequence(&seq).unwrap();
        let q = quotient(&g, &w).unwrap();
        for (a, b) in q.edges() {
            assert!(folded.has_edge(finals[&a], finals[&b]));
        }
        assert_eq!(folded.m(), q.m());
    }

    #[test]
    fn pendant_bags_become_singletons() {
        // P5 onto P3 with fat end bags
        let g = Graph::path(5);
        let h = Graph::path(3);
        let w = ws(&[(0, &[0, 1]), (1, &[2]), (2, &[3, 4])]);
        assert!(verify_witness(&g, &h, &w).unwrap());
        let out = singleton_pendant_bags(&g, &h, &w, &BTreeSet::from([0, 2])).unwrap();
        assert!(verify_witness(&g, &h, &out).unwrap());
        assert_eq!(out.bags[&0].len(), 1);
        assert_eq!(out.bags[&2].len(), 1);
    }

    #[test]
    fn contract_blocks_keeps_min_ids() {
        let g = Graph::path(4);
        let (h, origins) = contract_blocks(&g, &[BTreeSet::from([0, 3])]).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.m(), 3);
        assert_eq!(origins[&0], BTreeSet::from([0, 3]));
    }
}
