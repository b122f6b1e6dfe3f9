//! Simple undirected graphs with stable vertex ids and the identification operation.

use crate::error::{Error, Result};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Opaque vertex label.
pub type Vertex = usize;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (Vertex, Vertex);

/// Simple, irreflexive, undirected graph. Adjacency is kept in sorted sets so
/// every iteration order is canonical.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

fn ordered(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Edgeless graph on the given vertex ids.
    pub fn with_vertices<I: IntoIterator<Item = Vertex>>(vertices: I) -> Self {
        Graph {
            adj: vertices.into_iter().map(|v| (v, BTreeSet::new())).collect(),
        }
    }

    /// Graph on vertices `0..n` with the given edges.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        Self::from_parts(0..n, edges)
    }

    /// Graph with arbitrary vertex ids. Every edge endpoint must be listed.
    pub fn from_parts<V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = Vertex>,
        E: IntoIterator<Item = Edge>,
    {
        let mut g = Self::with_vertices(vertices);
        for (u, v) in edges {
            if u == v {
                return Err(Error::SameVertex(u));
            }
            for x in [u, v] {
                if !g.has_vertex(x) {
                    return Err(Error::UnknownVertex(x));
                }
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub(crate) fn insert_vertex(&mut self, v: Vertex) {
        self.adj.entry(v).or_default();
    }

    /// Adds an edge between two existing, distinct vertices.
    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) {
        debug_assert!(u != v && self.has_vertex(u) && self.has_vertex(v));
        self.adj.get_mut(&u).unwrap().insert(v);
        self.adj.get_mut(&v).unwrap().insert(u);
    }

    pub(crate) fn delete_edge(&mut self, u: Vertex, v: Vertex) {
        if let Some(s) = self.adj.get_mut(&u) {
            s.remove(&v);
        }
        if let Some(s) = self.adj.get_mut(&v) {
            s.remove(&u);
        }
    }

    pub(crate) fn delete_vertex(&mut self, v: Vertex) {
        if let Some(nbrs) = self.adj.remove(&v) {
            for u in nbrs {
                self.adj.get_mut(&u).unwrap().remove(&v);
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> BTreeSet<Vertex> {
        self.adj.keys().copied().collect()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, nb)| nb.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(&u).is_some_and(|s| s.contains(&v))
    }

    /// Neighbours of `v`; empty if `v` is absent.
    pub fn neighbors(&self, v: Vertex) -> &BTreeSet<Vertex> {
        static EMPTY: BTreeSet<Vertex> = BTreeSet::new();
        self.adj.get(&v).unwrap_or(&EMPTY)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.neighbors(v).len()
    }

    pub fn max_id(&self) -> Option<Vertex> {
        self.adj.keys().next_back().copied()
    }

    /// Open neighbourhood of a vertex set.
    pub fn neighborhood(&self, set: &BTreeSet<Vertex>) -> BTreeSet<Vertex> {
        set.iter()
            .flat_map(|&v| self.neighbors(v).iter().copied())
            .filter(|u| !set.contains(u))
            .collect()
    }

    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Graph {
        Graph {
            adj: self
                .adj
                .iter()
                .filter(|(v, _)| keep.contains(v))
                .map(|(&v, nb)| (v, nb.intersection(keep).copied().collect()))
                .collect(),
        }
    }

    pub fn without(&self, drop: &BTreeSet<Vertex>) -> Graph {
        let keep = self.vertices().filter(|v| !drop.contains(v)).collect();
        self.induced(&keep)
    }

    /// Identifies `u` and `v` into a fresh vertex whose id is one more than the
    /// largest id present. Returns the new graph and the fresh id.
    pub fn identify_with_id(&self, u: Vertex, v: Vertex) -> Result<(Graph, Vertex)> {
        for x in [u, v] {
            if !self.has_vertex(x) {
                return Err(Error::UnknownVertex(x));
            }
        }
        if u == v {
            return Err(Error::SameVertex(u));
        }
        let w = self.max_id().unwrap() + 1;
        let mut nw: BTreeSet<Vertex> = self.neighbors(u).union(self.neighbors(v)).copied().collect();
        nw.remove(&u);
        nw.remove(&v);
        let mut g = self.clone();
        g.delete_vertex(u);
        g.delete_vertex(v);
        g.insert_vertex(w);
        for x in nw {
            g.insert_edge(w, x);
        }
        Ok((g, w))
    }

    pub fn identify(&self, u: Vertex, v: Vertex) -> Result<Graph> {
        self.identify_with_id(u, v).map(|(g, _)| g)
    }

    /// Folds [`Graph::identify`] over the steps.
    pub fn apply_sequence(&self, seq: &IdentificationSequence) -> Result<Graph> {
        let mut g = self.clone();
        for (index, &(u, v)) in seq.steps.iter().enumerate() {
            g = g.identify(u, v).map_err(|e| Error::Step {
                index,
                source: Box::new(e),
            })?;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let vs: Vec<Vertex> = self.vertices().collect();
        let mut c = Graph::with_vertices(vs.iter().copied());
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if !self.has_edge(u, v) {
                    c.insert_edge(u, v);
                }
            }
        }
        c
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(&s) {
                continue;
            }
            let comp = self.reach(s);
            seen.extend(comp.iter().copied());
            out.push(comp);
        }
        out
    }

    fn reach(&self, s: Vertex) -> BTreeSet<Vertex> {
        let mut comp = BTreeSet::from([s]);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in self.neighbors(x) {
                if comp.insert(y) {
                    stack.push(y);
                }
            }
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(s) => self.reach(s).len() == self.n(),
        }
    }

    /// BFS distances from `s`, restricted to its component.
    pub fn distances(&self, s: Vertex) -> BTreeMap<Vertex, usize> {
        let mut dist = BTreeMap::from([(s, 0)]);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for &y in self.neighbors(x) {
                if let Entry::Vacant(slot) = dist.entry(y) {
                    slot.insert(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// Eccentricity of `s` within its component together with the smallest
    /// vertex attaining it.
    pub fn eccentricity(&self, s: Vertex) -> (usize, Vertex) {
        let dist = self.distances(s);
        let mut best = (0, s);
        for (&v, &d) in &dist {
            if d > best.0 {
                best = (d, v);
            }
        }
        best
    }

    /// Diameter of the subgraph induced by a connected vertex set.
    pub fn diameter(&self, comp: &BTreeSet<Vertex>) -> Result<usize> {
        if comp.is_empty() {
            return Err(Error::EmptyComponent);
        }
        if let Some(&v) = comp.iter().find(|v| !self.has_vertex(**v)) {
            return Err(Error::UnknownVertex(v));
        }
        let sub = self.induced(comp);
        if !sub.is_connected() {
            return Err(Error::DisconnectedInput);
        }
        Ok(sub.vertices().map(|v| sub.eccentricity(v).0).max().unwrap())
    }

    /// Endpoints of a longest shortest path in the component of `comp`, the
    /// lexicographically smallest such pair.
    pub fn diametral_pair(&self, comp: &BTreeSet<Vertex>) -> (Vertex, Vertex, usize) {
        let sub = self.induced(comp);
        let mut best: Option<(usize, Vertex, Vertex)> = None;
        for u in sub.vertices() {
            let (d, v) = sub.eccentricity(u);
            if best.is_none_or(|(bd, _, _)| d > bd) {
                best = Some((d, u, v));
            }
        }
        let (d, u, v) = best.expect("nonempty component");
        (u, v, d)
    }

    /// All bridges, found with a low-link DFS.
    pub fn bridges(&self) -> BTreeSet<Edge> {
        let mut disc: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut low: BTreeMap<Vertex, usize> = BTreeMap::new();
        let mut out = BTreeSet::new();
        let mut time = 0;
        for root in self.vertices() {
            if disc.contains_key(&root) {
                continue;
            }
            // Iterative DFS: (vertex, parent, neighbour iterator position).
            let mut stack: Vec<(Vertex, Option<Vertex>, Vec<Vertex>, usize)> = Vec::new();
            disc.insert(root, time);
            low.insert(root, time);
            time += 1;
            stack.push((root, None, self.neighbors(root).iter().copied().collect(), 0));
            while let Some(top) = stack.last_mut() {
                let (v, parent) = (top.0, top.1);
                if top.3 < top.2.len() {
                    let w = top.2[top.3];
                    top.3 += 1;
                    if Some(w) == parent {
                        continue;
                    }
                    if let Some(&dw) = disc.get(&w) {
                        let lv = low[&v].min(dw);
                        low.insert(v, lv);
                    } else {
                        disc.insert(w, time);
                        low.insert(w, time);
                        time += 1;
                        stack.push((w, Some(v), self.neighbors(w).iter().copied().collect(), 0));
                    }
                } else {
                    stack.pop();
                    if let Some(p) = parent {
                        let lv = low[&v];
                        if lv > disc[&p] {
                            out.insert(ordered(p, v));
                        }
                        let lp = low[&p].min(lv);
                        low.insert(p, lp);
                    }
                }
            }
        }
        out
    }

    /// Greedy inclusion-maximal matching over edges in lexicographic order.
    pub fn maximal_matching(&self) -> Vec<Edge> {
        let mut used = BTreeSet::new();
        let mut m = Vec::new();
        for (u, v) in self.edges() {
            if !used.contains(&u) && !used.contains(&v) {
                used.insert(u);
                used.insert(v);
                m.push((u, v));
            }
        }
        m
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        self.adj.iter().filter(|(_, nb)| nb.is_empty()).map(|(&v, _)| v).collect()
    }

    pub fn is_independent(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter().all(|&v| self.neighbors(v).is_disjoint(set))
    }

    pub fn is_clique(&self, set: &BTreeSet<Vertex>) -> bool {
        set.iter().all(|&v| self.neighbors(v).intersection(set).count() + 1 == set.len())
    }

    /// Same graph with vertices renamed to `0..n` in id order, plus the map
    /// from new ids back to old ones.
    pub fn relabeled(&self) -> (Graph, Vec<Vertex>) {
        let old: Vec<Vertex> = self.vertices().collect();
        let index: BTreeMap<Vertex, Vertex> = old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let g = Graph::from_edges(old.len(), self.edges().map(|(u, v)| (index[&u], index[&v])))
            .expect("relabeling preserves validity");
        (g, old)
    }

    /// Disjoint union; vertices of each part are renamed consecutively.
    pub fn disjoint_union(parts: &[Graph]) -> Graph {
        let mut g = Graph::new();
        let mut offset = 0;
        for p in parts {
            let (r, _) = p.relabeled();
            for v in r.vertices() {
                g.insert_vertex(v + offset);
            }
            for (u, v) in r.edges() {
                g.insert_edge(u + offset, v + offset);
            }
            offset += r.n();
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| ordered(i, (i + 1) % n))).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
    }

    pub fn edgeless(n: usize) -> Graph {
        Graph::with_vertices(0..n)
    }

    /// K_{1,leaves} with centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }
}

/// How the budget of an [`Instance`] is read.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamMode {
    /// `budget` is the number of identifications allowed.
    ByK,
    /// The parameter is `p = n - budget`, the number of vertices to keep.
    ByDual,
}

/// A graph together with an identification budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub budget: usize,
    pub mode: ParamMode,
}

impl Instance {
    pub fn by_k(graph: Graph, budget: usize) -> Self {
        Instance { graph, budget, mode: ParamMode::ByK }
    }

    pub fn by_dual(graph: Graph, budget: usize) -> Self {
        Instance { graph, budget, mode: ParamMode::ByDual }
    }

    /// `n - budget`, the number of vertices that must remain.
    pub fn dual(&self) -> isize {
        self.graph.n() as isize - self.budget as isize
    }
}

/// Ordered list of identification steps; each refers to ids live at that point.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IdentificationSequence {
    pub steps: Vec<(Vertex, Vertex)>,
}

impl IdentificationSequence {
    pub fn new(steps: Vec<(Vertex, Vertex)>) -> Self {
        IdentificationSequence { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}
