//! Identification to a given tree, linear forest or forest.

use crate::acyclic::group_path_bags;
use crate::bits::{bits, full, Dense, Mask};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::recognize::{recognize, GraphClass};
use crate::witness::{contract_blocks, singleton_pendant_bags, verify_witness, WitnessStructure};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A tree with a chosen root, by default its smallest leaf.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    tree: Graph,
    root: Vertex,
    children: BTreeMap<Vertex, Vec<Vertex>>,
    /// Non-root vertices, children before parents.
    post_order: Vec<Vertex>,
}

impl RootedTree {
    pub fn new(t: &Graph) -> Result<Self> {
        let root = t
            .vertices()
            .find(|&v| t.degree(v) <= 1)
            .ok_or(Error::TargetNotTree)?;
        Self::with_root(t, root)
    }

    pub fn with_root(t: &Graph, root: Vertex) -> Result<Self> {
        if !recognize(t, GraphClass::Tree) || !t.has_vertex(root) {
            return Err(Error::TargetNotTree);
        }
        let mut children: BTreeMap<Vertex, Vec<Vertex>> = t.vertices().map(|v| (v, Vec::new())).collect();
        let mut order = vec![root];
        let mut parent = BTreeMap::from([(root, root)]);
        let mut i = 0;
        while i < order.len() {
            let x = order[i];
            for &y in t.neighbors(x) {
                if let Entry::Vacant(slot) = parent.entry(y) {
                    slot.insert(x);
                    children.get_mut(&x).unwrap().push(y);
                    order.push(y);
                }
            }
            i += 1;
        }
        let post_order = order.into_iter().skip(1).rev().collect();
        Ok(RootedTree { tree: t.clone(), root, children, post_order })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn children(&self, x: Vertex) -> &[Vertex] {
        &self.children[&x]
    }

    /// Leaves other than the root, in id order.
    pub fn leaves(&self) -> Vec<Vertex> {
        self.tree
            .vertices()
            .filter(|&v| v != self.root && self.children[&v].is_empty())
            .collect()
    }
}

struct TreeFit<'a> {
    d: &'a Dense,
    t: &'a RootedTree,
    leaves: Vec<Vertex>,
    internal: Vec<Vertex>,
    tv: Vec<Vertex>,
    choice: Vec<usize>,
}

impl TreeFit<'_> {
    /// Bags determined by the leaf guess: every internal non-root bag is the
    /// neighbourhood of its children's subtrees, the root takes the rest.
    fn bags(&self) -> Option<BTreeMap<Vertex, Mask>> {
        let mut bag: BTreeMap<Vertex, Mask> = BTreeMap::new();
        let mut sub: BTreeMap<Vertex, Mask> = BTreeMap::new();
        let mut used: Mask = 0;
        for (i, &x) in self.leaves.iter().enumerate() {
            let m = 1 << self.choice[i];
            bag.insert(x, m);
            sub.insert(x, m);
            used |= m;
        }
        for &y in &self.internal {
            let below = self.t.children(y).iter().fold(0, |m, c| m | sub[c]);
            let b = self.d.open_nbr(below);
            if b == 0 || b & used != 0 {
                return None;
            }
            used |= b;
            bag.insert(y, b);
            sub.insert(y, below | b);
        }
        let rest = full(self.d.n()) & !used;
        if rest == 0 {
            return None;
        }
        bag.insert(self.t.root, rest);
        let nbr: BTreeMap<Vertex, Mask> = bag.iter().map(|(&x, &m)| (x, self.d.open_nbr(m))).collect();
        for (i, &x) in self.tv.iter().enumerate() {
            for &y in &self.tv[i + 1..] {
                if (nbr[&x] & bag[&y] != 0) != self.t.tree.has_edge(x, y) {
                    return None;
                }
            }
        }
        Some(bag)
    }

    fn search(&mut self, i: usize, used: Mask) -> Option<BTreeMap<Vertex, Mask>> {
        if i == self.leaves.len() {
            return self.bags();
        }
        for v in 0..self.d.n() {
            if used >> v & 1 == 1 {
                continue;
            }
            // Leaves of a tree on three or more vertices are pairwise
            // nonadjacent, so their singleton bags must be too.
            if self.leaves.len() > 1 && self.d.adj[v] & used != 0 {
                continue;
            }
            self.choice[i] = v;
            if let Some(b) = self.search(i + 1, used | 1 << v) {
                return Some(b);
            }
        }
        None
    }
}

/// Whether connected `g` identifies to the rooted tree, by guessing one
/// vertex per non-root leaf; the remaining bags of a regular witness follow.
/// Leaf bags of the returned witness are singletons.
pub fn identify_to_tree(g: &Graph, t: &RootedTree) -> Result<Option<WitnessStructure>> {
    if g.n() < t.tree.n() {
        return Ok(None);
    }
    if !g.is_connected() {
        return Err(Error::DisconnectedInput);
    }
    if t.tree.n() == 1 {
        return Ok(Some(WitnessStructure::new(BTreeMap::from([(t.root, g.vertex_set())]))));
    }
    let d = Dense::new(g)?;
    let internal = t
        .post_order
        .iter()
        .copied()
        .filter(|&v| !t.children[&v].is_empty())
        .collect();
    let leaves = t.leaves();
    let mut fit = TreeFit {
        d: &d,
        t,
        choice: vec![0; leaves.len()],
        leaves,
        internal,
        tv: t.tree.vertices().collect(),
    };
    let Some(bags) = fit.search(0, 0) else {
        return Ok(None);
    };
    let w = WitnessStructure::new(bags.into_iter().map(|(x, m)| (x, d.vertices(m))).collect());
    if t.tree.n() >= 3 {
        // The root is a leaf as well; make its bag a singleton too.
        return singleton_pendant_bags(g, &t.tree, &w, &BTreeSet::from([t.root])).map(Some);
    }
    Ok(Some(w))
}

/// Assignment of components (given by diameters) to target paths (given by
/// lengths in edges) such that every path's group has diameter sum at least
/// its length and every path gets a component. Returns the target index for
/// each component.
///
/// Length-zero paths take the components of smallest diameter; the rest is a
/// table over residual demands, one component at a time.
pub fn linear_forest_assignment(diams: &[usize], lengths: &[usize]) -> Option<Vec<usize>> {
    let (s, t) = (diams.len(), lengths.len());
    if t > s {
        return None;
    }
    if t == 0 {
        return (s == 0).then(Vec::new);
    }
    let mut assign = vec![usize::MAX; s];
    let mut by_diam: Vec<usize> = (0..s).collect();
    by_diam.sort_by_key(|&i| (diams[i], i));
    let trivial: Vec<usize> = (0..t).filter(|&j| lengths[j] == 0).collect();
    for (&j, &i) in trivial.iter().zip(&by_diam) {
        assign[i] = j;
    }
    let rest: Vec<usize> = by_diam[trivial.len()..].to_vec();
    let targets: Vec<usize> = (0..t).filter(|&j| lengths[j] > 0).collect();
    if targets.is_empty() {
        for &i in &rest {
            assign[i] = trivial[0];
        }
        return Some(assign);
    }
    // Mixed-radix encoding of residual demands.
    let radix: Vec<usize> = targets.iter().map(|&j| lengths[j] + 1).collect();
    let states: usize = radix.iter().product();
    let encode = |r: &[usize]| r.iter().zip(&radix).rev().fold(0, |acc, (&x, &b)| acc * b + x);
    let decode = |mut c: usize| {
        radix
            .iter()
            .map(|&b| {
                let x = c % b;
                c /= b;
                x
            })
            .collect::<Vec<usize>>()
    };
    let start: Vec<usize> = targets.iter().map(|&j| lengths[j]).collect();
    // back[step][state] = (previous state, chosen target slot)
    let mut reach = vec![false; states];
    reach[encode(&start)] = true;
    let mut back: Vec<Vec<Option<(usize, usize)>>> = Vec::with_capacity(rest.len());
    for &i in &rest {
        let mut next = vec![false; states];
        let mut from = vec![None; states];
        for c in (0..states).filter(|&c| reach[c]) {
            let r = decode(c);
            for slot in 0..targets.len() {
                let mut r2 = r.clone();
                r2[slot] = r2[slot].saturating_sub(diams[i]);
                let c2 = encode(&r2);
                if !next[c2] {
                    next[c2] = true;
                    from[c2] = Some((c, slot));
                }
            }
        }
        reach = next;
        back.push(from);
    }
    if !reach[0] {
        return None;
    }
    let mut c = 0;
    for (step, &i) in rest.iter().enumerate().rev() {
        let (prev, slot) = back[step][c].unwrap();
        assign[i] = targets[slot];
        c = prev;
    }
    Some(assign)
}

/// The linear forest with the given path lengths (edges), paths numbered
/// consecutively from vertex 0.
pub fn linear_forest(lengths: &[usize]) -> Graph {
    Graph::disjoint_union(&lengths.iter().map(|&l| Graph::path(l + 1)).collect::<Vec<_>>())
}

/// A witness identifying `g` to [`linear_forest`]`(lengths)`, if one exists.
pub fn linear_forest_witness(g: &Graph, lengths: &[usize]) -> Option<WitnessStructure> {
    let comps = g.components();
    let diams: Vec<usize> = comps.iter().map(|c| g.diameter(c).unwrap()).collect();
    let assign = linear_forest_assignment(&diams, lengths)?;
    let mut bags = BTreeMap::new();
    let mut offset = 0;
    for (j, &len) in lengths.iter().enumerate() {
        let group: Vec<BTreeSet<Vertex>> = (0..comps.len()).filter(|&i| assign[i] == j).map(|i| comps[i].clone()).collect();
        for (t, bag) in group_path_bags(g, &group, len).into_iter().enumerate() {
            bags.insert(offset + t, bag);
        }
        offset += len + 1;
    }
    Some(WitnessStructure::new(bags))
}

/// Whether `g` identifies to the disjoint union of paths of the given
/// lengths (in edges).
pub fn identify_to_linear_forest(g: &Graph, lengths: &[usize]) -> bool {
    linear_forest_witness(g, lengths).is_some()
}

/// A maximal path of the forest between vertices of degree other than two.
struct Route {
    path: Vec<Vertex>,
}

impl Route {
    /// `None` keeps the route whole; `Some((i, j))` hands `path[i..=j]` to the
    /// linear part.
    fn options(&self) -> Vec<Option<(usize, usize)>> {
        let q = self.path.len() - 1;
        let mut out = vec![None];
        for i in 1..q {
            for j in i + 1..q {
                out.push(Some((i, j)));
            }
        }
        out
    }
}

struct ForestFit<'a> {
    g: &'a Graph,
    f: &'a Graph,
    d: Dense,
    comp_of: Vec<usize>,
    comp_masks: Vec<Mask>,
    hubs: Vec<Vertex>,
    /// Bound on |U(x)| per hub.
    hub_leaves: Vec<usize>,
    /// Earlier hub that is a leaf twin of this one; twins take increasing reps.
    twin_of: Vec<Option<usize>>,
    tree_memo: HashMap<(Graph, Graph), Option<WitnessStructure>>,
}

/// Per-choice layout of the split F = F' + L.
struct Layout {
    fprime: Graph,
    fp_comps: Vec<BTreeSet<Vertex>>,
    fp_comp_of: BTreeMap<Vertex, usize>,
    linear: Vec<Vec<Vertex>>,
    glue: Vec<(Vertex, Vertex)>,
}

struct Uf {
    p: Vec<usize>,
}

impl Uf {
    fn new(n: usize) -> Self {
        Uf { p: (0..n).collect() }
    }
    fn find(&mut self, mut x: usize) -> usize {
        while self.p[x] != x {
            self.p[x] = self.p[self.p[x]];
            x = self.p[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.p[a.max(b)] = a.min(b);
        }
    }
}

impl ForestFit<'_> {
    fn reps_in_comps(&self, comps: &BTreeSet<usize>) -> Vec<usize> {
        comps.iter().flat_map(|&c| bits(self.comp_masks[c])).collect()
    }

    /// Enumerates the representative sets U(x), one hub at a time.
    fn guess_reps(
        &mut self,
        lay: &Layout,
        h: usize,
        used: Mask,
        owner: &mut Vec<Option<usize>>,
        reps: &mut Vec<Vec<usize>>,
    ) -> Option<WitnessStructure> {
        if h == self.hubs.len() {
            return self.guess_connectors(lay, reps);
        }
        let x = self.hubs[h];
        let a = lay.fp_comp_of[&x];
        let cap = self.hub_leaves[h];
        let from = self.twin_of[h].map_or(0, |t| reps[t][0] + 1);
        let mut chosen = Vec::new();
        self.subsets(lay, h, a, cap, from, used, owner, &mut chosen, reps)
    }

    #[allow(clippy::too_many_arguments)]
    fn subsets(
        &mut self,
        lay: &Layout,
        h: usize,
        a: usize,
        cap: usize,
        from: usize,
        used: Mask,
        owner: &mut Vec<Option<usize>>,
        chosen: &mut Vec<usize>,
        reps: &mut Vec<Vec<usize>>,
    ) -> Option<WitnessStructure> {
        if !chosen.is_empty() {
            reps.push(chosen.clone());
            let r = self.guess_reps(lay, h + 1, used, owner, reps);
            reps.pop();
            if r.is_some() {
                return r;
            }
        }
        if chosen.len() == cap {
            return None;
        }
        for v in from..self.d.n() {
            if used >> v & 1 == 1 {
                continue;
            }
            let c = self.comp_of[v];
            if chosen.iter().any(|&u| self.comp_of[u] == c) {
                continue;
            }
            if owner[c].is_some_and(|o| o != a) {
                continue;
            }
            let before = owner[c];
            owner[c] = Some(a);
            chosen.push(v);
            let r = self.subsets(lay, h, a, cap, v + 1, used | 1 << v, owner, chosen, reps);
            chosen.pop();
            owner[c] = before;
            if r.is_some() {
                return r;
            }
        }
        None
    }

    fn guess_connectors(&mut self, lay: &Layout, reps: &[Vec<usize>]) -> Option<WitnessStructure> {
        let hub_index: BTreeMap<Vertex, usize> = self.hubs.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut links = Vec::new();
        self.connect(lay, reps, &hub_index, 0, &mut links)
    }

    fn connect(
        &mut self,
        lay: &Layout,
        reps: &[Vec<usize>],
        hub_index: &BTreeMap<Vertex, usize>,
        i: usize,
        links: &mut Vec<(usize, usize)>,
    ) -> Option<WitnessStructure> {
        if i == lay.glue.len() {
            return self.finish(lay, reps, links);
        }
        let (x, y) = lay.glue[i];
        let (rx, ry) = (&reps[hub_index[&x]], &reps[hub_index[&y]]);
        let mut uf = self.component_uf(reps, links);
        let cx: BTreeSet<usize> = rx.iter().map(|&v| self.comp_of[v]).collect();
        let cy: BTreeSet<usize> = ry.iter().map(|&v| self.comp_of[v]).collect();
        let joined = uf.find(*cx.first().unwrap()) == uf.find(*cy.first().unwrap());
        // No connector.
        if let Some(w) = self.connect(lay, reps, hub_index, i + 1, links) {
            return Some(w);
        }
        if joined {
            return None;
        }
        for vx in self.reps_in_comps(&cx) {
            for vy in self.reps_in_comps(&cy) {
                links.push((vx, vy));
                let r = self.connect(lay, reps, hub_index, i + 1, links);
                links.pop();
                if r.is_some() {
                    return r;
                }
            }
        }
        None
    }

    fn component_uf(&self, reps: &[Vec<usize>], links: &[(usize, usize)]) -> Uf {
        let mut uf = Uf::new(self.comp_masks.len());
        for r in reps {
            for w in r.windows(2) {
                uf.union(self.comp_of[w[0]], self.comp_of[w[1]]);
            }
        }
        for &(a, b) in links {
            uf.union(self.comp_of[a], self.comp_of[b]);
        }
        uf
    }

    fn finish(&mut self, lay: &Layout, reps: &[Vec<usize>], links: &[(usize, usize)]) -> Option<WitnessStructure> {
        let n = self.d.n();
        let mut cuf = self.component_uf(reps, links);
        // Forest part of each hub's region.
        let mut class_of_tree: BTreeMap<usize, usize> = BTreeMap::new();
        let mut tree_of_class: BTreeMap<usize, usize> = BTreeMap::new();
        for (h, &x) in self.hubs.iter().enumerate() {
            let a = lay.fp_comp_of[&x];
            let cls = cuf.find(self.comp_of[reps[h][0]]);
            if *class_of_tree.entry(a).or_insert(cls) != cls || *tree_of_class.entry(cls).or_insert(a) != a {
                return None;
            }
        }
        let used_comps: BTreeSet<usize> = reps.iter().flatten().map(|&v| self.comp_of[v]).collect();
        // Vertex merges inside the used components.
        let mut vuf = Uf::new(n);
        for r in reps {
            for w in r.windows(2) {
                vuf.union(w[0], w[1]);
            }
        }
        for &(a, b) in links {
            vuf.union(a, b);
        }
        let mut bags: BTreeMap<Vertex, BTreeSet<Vertex>> = self.f.vertices().map(|x| (x, BTreeSet::new())).collect();
        for (a, tree_vs) in lay.fp_comps.iter().enumerate() {
            let cls = class_of_tree[&a];
            let members: Mask = used_comps
                .iter()
                .filter(|&&c| cuf.find(c) == cls)
                .fold(0, |m, &c| m | self.comp_masks[c]);
            let vs = self.d.vertices(members);
            let mut groups: BTreeMap<usize, BTreeSet<Vertex>> = BTreeMap::new();
            for i in bits(members) {
                groups.entry(vuf.find(i)).or_default().insert(self.d.ids[i]);
            }
            let blocks: Vec<BTreeSet<Vertex>> = groups.into_values().filter(|b| b.len() > 1).collect();
            let (gp, origins) = contract_blocks(&self.g.induced(&vs), &blocks).ok()?;
            let tree = lay.fprime.induced(tree_vs);
            let key = (gp.clone(), tree.clone());
            let w = match self.tree_memo.get(&key) {
                Some(w) => w.clone(),
                None => {
                    let rooted = RootedTree::new(&tree).ok()?;
                    let w = identify_to_tree(&gp, &rooted).ok()?;
                    self.tree_memo.insert(key, w.clone());
                    w
                }
            }?;
            for (x, bag) in w.bags {
                bags.get_mut(&x).unwrap().extend(bag.iter().flat_map(|v| origins[v].iter().copied()));
            }
        }
        // Remaining components feed the linear part.
        let rest: Vec<usize> = (0..self.comp_masks.len()).filter(|c| !used_comps.contains(c)).collect();
        if lay.linear.is_empty() {
            let sink = bags.keys().next().copied()?;
            for &c in &rest {
                bags.get_mut(&sink).unwrap().extend(self.d.vertices(self.comp_masks[c]));
            }
        } else {
            let all: Mask = rest.iter().fold(0, |m, &c| m | self.comp_masks[c]);
            let sub = self.g.induced(&self.d.vertices(all));
            let lengths: Vec<usize> = lay.linear.iter().map(|p| p.len() - 1).collect();
            let lw = linear_forest_witness(&sub, &lengths)?;
            let mut offset = 0;
            for p in &lay.linear {
                for (t, &x) in p.iter().enumerate() {
                    bags.get_mut(&x).unwrap().extend(lw.bags[&(offset + t)].iter().copied());
                }
                offset += p.len();
            }
        }
        let w = WitnessStructure::new(bags);
        if verify_witness(self.g, self.f, &w).unwrap_or(false) {
            Some(w)
        } else {
            debug_assert!(false, "assembled forest witness failed verification");
            None
        }
    }
}

fn routes(f: &Graph) -> Vec<Route> {
    let mut out = Vec::new();
    for x in f.vertices().filter(|&v| f.degree(v) != 2) {
        for &y0 in f.neighbors(x) {
            let mut path = vec![x];
            let (mut prev, mut cur) = (x, y0);
            while f.degree(cur) == 2 {
                path.push(cur);
                let next = *f.neighbors(cur).iter().find(|&&z| z != prev).unwrap();
                prev = cur;
                cur = next;
            }
            path.push(cur);
            if x < cur {
                out.push(Route { path });
            }
        }
    }
    out
}

fn layout(f: &Graph, routes: &[Route], choice: &[Option<(usize, usize)>]) -> Layout {
    let mut fprime = f.clone();
    let mut linear = Vec::new();
    let mut glue = Vec::new();
    for (r, c) in routes.iter().zip(choice) {
        match *c {
            None => glue.push((r.path[0], *r.path.last().unwrap())),
            Some((i, j)) => {
                for t in i..j {
                    fprime.delete_edge(r.path[t], r.path[t + 1]);
                }
                for &v in &r.path[i + 1..j] {
                    fprime.delete_vertex(v);
                }
                linear.push(r.path[i..=j].to_vec());
            }
        }
    }
    let fp_comps = fprime.components();
    let fp_comp_of = fp_comps
        .iter()
        .enumerate()
        .flat_map(|(a, c)| c.iter().map(move |&v| (v, a)))
        .collect();
    Layout { fprime, fp_comps, fp_comp_of, linear, glue }
}

/// Whether `g` identifies to the forest `f`, with a witness keyed by V(f).
///
/// Every maximal path between vertices of degree other than two is either
/// kept in the forest part F' or donates an inner subpath to a linear part L.
/// Bags of the degree-≠2 vertices are seeded by guessed representatives from
/// distinct components, regions of one tree of F' are glued by optional
/// connector identifications, each tree of F' is then solved as a tree
/// instance and the leftover components are packed onto L.
pub fn identify_to_forest(g: &Graph, f: &Graph) -> Result<Option<WitnessStructure>> {
    if !recognize(f, GraphClass::Forest) {
        return Err(Error::TargetNotForest);
    }
    if f.n() > g.n() || f.m() > g.m() {
        return Ok(None);
    }
    if f.is_empty() {
        return Ok(g.is_empty().then(WitnessStructure::default));
    }
    let gcomps = g.components();
    let fcomps = f.components();
    // One preimage edge per edge of f gives an acyclic edge set of g.
    if fcomps.len() > gcomps.len() || f.m() > g.n() - gcomps.len() {
        return Ok(None);
    }
    if gcomps.len() == 1 {
        return identify_to_tree(g, &RootedTree::new(f)?);
    }
    let d = Dense::new(g)?;
    let comp_masks: Vec<Mask> = gcomps.iter().map(|c| d.mask(c)).collect();
    let mut comp_of = vec![0; d.n()];
    for (c, &m) in comp_masks.iter().enumerate() {
        for i in bits(m) {
            comp_of[i] = c;
        }
    }
    let hubs: Vec<Vertex> = f.vertices().filter(|&v| f.degree(v) != 2).collect();
    let hub_leaves = hubs
        .iter()
        .map(|&x| {
            // A leaf bag can always be trimmed to one component: the rest
            // moves into the neighbour's bag.
            if f.degree(x) <= 1 {
                return 1;
            }
            let comp = fcomps.iter().find(|c| c.contains(&x)).unwrap();
            comp.iter().filter(|&&v| f.degree(v) <= 1).count()
        })
        .collect();
    let twin_of = hubs
        .iter()
        .enumerate()
        .map(|(h, &x)| {
            let parent = |v: Vertex| (f.degree(v) == 1).then(|| *f.neighbors(v).first().unwrap());
            parent(x).and_then(|p| hubs[..h].iter().rposition(|&y| parent(y) == Some(p)))
        })
        .collect();
    let mut fit = ForestFit {
        g,
        f,
        d,
        comp_of,
        comp_masks,
        hubs,
        hub_leaves,
        twin_of,
        tree_memo: HashMap::new(),
    };
    let routes = routes(f);
    let options: Vec<Vec<Option<(usize, usize)>>> = routes.iter().map(Route::options).collect();
    let mut idx = vec![0; routes.len()];
    loop {
        let choice: Vec<Option<(usize, usize)>> = idx.iter().zip(&options).map(|(&i, o)| o[i]).collect();
        let lay = layout(f, &routes, &choice);
        let mut owner = vec![None; fit.comp_masks.len()];
        if let Some(w) = fit.guess_reps(&lay, 0, 0, &mut owner, &mut Vec::new()) {
            return Ok(Some(w));
        }
        // Odometer over route options.
        let mut t = 0;
        loop {
            if t == idx.len() {
                return Ok(None);
            }
            idx[t] += 1;
            if idx[t] < options[t].len() {
                break;
            }
            idx[t] = 0;
            t += 1;
        }
    }
}
