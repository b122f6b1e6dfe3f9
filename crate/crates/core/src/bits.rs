//! Bitmask view of a graph for the exhaustive searches.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use std::collections::BTreeSet;

pub(crate) type Mask = u128;

/// Largest vertex count the mask-based searches accept.
pub const SEARCH_LIMIT: usize = 128;

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

pub(crate) fn low(m: Mask) -> usize {
    m.trailing_zeros() as usize
}

pub(crate) fn full(n: usize) -> Mask {
    if n == 128 {
        Mask::MAX
    } else {
        (1 << n) - 1
    }
}

/// Vertices of a graph indexed `0..n` in id order with adjacency masks.
#[derive(Clone, Debug)]
pub(crate) struct Dense {
    pub ids: Vec<Vertex>,
    pub adj: Vec<Mask>,
}

impl Dense {
    pub fn new(g: &Graph) -> Result<Dense> {
        if g.n() > SEARCH_LIMIT {
            return Err(Error::TooLarge { needed: g.n(), limit: SEARCH_LIMIT });
        }
        let ids: Vec<Vertex> = g.vertices().collect();
        let adj = ids
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .map(|u| 1 << ids.binary_search(u).unwrap())
                    .fold(0, |a, b| a | b)
            })
            .collect();
        Ok(Dense { ids, adj })
    }

    pub fn n(&self) -> usize {
        self.ids.len()
    }

    pub fn index(&self, v: Vertex) -> usize {
        self.ids.binary_search(&v).expect("vertex present")
    }

    pub fn mask<'a, I: IntoIterator<Item = &'a Vertex>>(&self, vs: I) -> Mask {
        vs.into_iter().fold(0, |m, v| m | 1 << self.index(*v))
    }

    /// Closed-neighbourhood union minus the set itself.
    pub fn open_nbr(&self, set: Mask) -> Mask {
        bits(set).fold(0, |m, i| m | self.adj[i]) & !set
    }

    pub fn vertices(&self, m: Mask) -> BTreeSet<Vertex> {
        bits(m).map(|i| self.ids[i]).collect()
    }
}
