//! Exhaustive identification search over partitions of V(G).
//!
//! A state after some identifications is determined by the partition of the
//! original vertices into bags, so the search walks partitions level by level
//! (one merge per level). Quotients on at most eight vertices are deduplicated
//! up to isomorphism when the acceptance test is isomorphism invariant.

use crate::bits::{bits, low, Dense, Mask};
use crate::canon::canonical_code_masks;
use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::oracle::biject;
use crate::witness::WitnessStructure;
use crate::recognize::{recognize, recognize_lists, GraphClass, Lists};
use crate::solve::{Certificate, SolveResult};
use std::collections::{BTreeSet, HashSet};

const ISO_LIMIT: usize = 8;

#[derive(Hash, PartialEq, Eq)]
enum Key {
    Iso(u64),
    Blocks(Vec<Mask>),
}

pub(crate) fn quotient_lists(d: &Dense, blocks: &[Mask]) -> Lists {
    let nbr: Vec<Mask> = blocks.iter().map(|&m| d.open_nbr(m)).collect();
    (0..blocks.len())
        .map(|a| (0..blocks.len()).filter(|&b| b != a && nbr[a] & blocks[b] != 0).collect())
        .collect()
}

fn iso_code(adj: &Lists) -> u64 {
    let m: Vec<u16> = adj.iter().map(|a| a.iter().fold(0u16, |m, &b| m | 1 << b)).collect();
    canonical_code_masks(&m)
}

/// Options for [`search`].
pub(crate) struct Search<'a> {
    pub d: &'a Dense,
    /// Deduplicate small quotients up to isomorphism. Only sound when both
    /// predicates ignore vertex labels.
    pub iso: bool,
}

impl Search<'_> {
    /// Breadth-first over merge levels `0..=k`. Returns the first accepted
    /// partition at the smallest level. `prune` discards a partition and all
    /// its coarsenings.
    pub fn run<P, A>(&self, start: Vec<Mask>, k: usize, prune: P, mut accept: A) -> Option<Vec<Mask>>
    where
        P: Fn(&[Mask]) -> bool,
        A: FnMut(&[Mask], &Lists) -> bool,
    {
        let mut level = vec![start];
        for depth in 0..=k {
            for st in &level {
                let q = quotient_lists(self.d, st);
                if accept(st, &q) {
                    return Some(st.clone());
                }
            }
            if depth == k {
                break;
            }
            let mut seen = HashSet::new();
            let mut next = Vec::new();
            for st in &level {
                for i in 0..st.len() {
                    for j in i + 1..st.len() {
                        let mut merged: Vec<Mask> = Vec::with_capacity(st.len() - 1);
                        merged.extend(st.iter().enumerate().filter(|&(t, _)| t != i && t != j).map(|(_, &m)| m));
                        merged.push(st[i] | st[j]);
                        merged.sort_unstable_by_key(|&m| low(m));
                        if prune(&merged) {
                            continue;
                        }
                        let key = if self.iso && merged.len() <= ISO_LIMIT {
                            Key::Iso(iso_code(&quotient_lists(self.d, &merged)))
                        } else {
                            Key::Blocks(merged.clone())
                        };
                        if seen.insert(key) {
                            next.push(merged);
                        }
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            level = next;
        }
        None
    }
}

pub(crate) fn singletons(n: usize) -> Vec<Mask> {
    (0..n).map(|i| 1 << i).collect()
}

pub(crate) fn blocks_to_sets(d: &Dense, blocks: &[Mask]) -> Vec<BTreeSet<usize>> {
    blocks.iter().map(|&m| bits(m).map(|i| d.ids[i]).collect()).collect()
}

/// Fewest identifications (at most `k`) taking `g` into `c`, with the
/// partition that does it.
pub(crate) fn min_to_class(g: &Graph, k: usize, c: GraphClass) -> Result<Option<(usize, Vec<BTreeSet<usize>>)>> {
    let d = Dense::new(g)?;
    let s = Search { d: &d, iso: true };
    let found = s.run(singletons(d.n()), k, |_| false, |_, q| recognize_lists(q, c));
    Ok(found.map(|b| (d.n() - b.len(), blocks_to_sets(&d, &b))))
}

/// Plain exhaustive search over at most `k` identifications, recognizing the
/// class at every reached graph.
pub fn solve_xp_k(g: &Graph, k: usize, c: GraphClass) -> Result<SolveResult> {
    if g.is_empty() {
        return Ok(if recognize(g, c) {
            SolveResult::Yes(Certificate::from_blocks(g, []))
        } else {
            SolveResult::No
        });
    }
    Ok(match min_to_class(g, k, c)? {
        Some((_, blocks)) => SolveResult::yes_blocks(g, blocks),
        None => SolveResult::No,
    })
}

/// Whether `g` identifies to exactly `h`, by searching the partitions with
/// |V(h)| blocks. The witness is keyed by V(h).
pub fn identify_exact(g: &Graph, h: &Graph) -> Result<Option<WitnessStructure>> {
    let t = h.n();
    if t > g.n() {
        return Ok(None);
    }
    if t == 0 {
        return Ok(g.is_empty().then(WitnessStructure::default));
    }
    let d = Dense::new(g)?;
    let hv: Vec<Vertex> = h.vertices().collect();
    let hdeg: Vec<usize> = hv.iter().map(|&x| h.degree(x)).collect();
    let hadj: Vec<Vec<bool>> = hv.iter().map(|&x| hv.iter().map(|&y| h.has_edge(x, y)).collect()).collect();
    let mut sorted = hdeg.clone();
    sorted.sort_unstable();
    let mut assign = vec![usize::MAX; t];
    let s = Search { d: &d, iso: true };
    let found = s.run(singletons(d.n()), d.n() - t, |_| false, |blocks, q| {
        if blocks.len() != t {
            return false;
        }
        let mut degs: Vec<usize> = q.iter().map(Vec::len).collect();
        degs.sort_unstable();
        degs == sorted && biject(0, q, &hdeg, &hadj, &mut assign, &mut vec![false; t])
    });
    Ok(found.map(|blocks| {
        WitnessStructure::new(
            blocks.iter().enumerate().map(|(i, &m)| (hv[assign[i]], d.vertices(m))).collect(),
        )
    }))
}
