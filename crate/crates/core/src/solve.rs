//! Answers, certificates and the class/parameter dispatcher.

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::recognize::GraphClass;
use crate::witness::{quotient_unchecked, WitnessStructure};
use crate::{acyclic, dense, search};
use std::collections::BTreeSet;

/// A YES answer: the reached graph and the witness structure producing it.
/// Target vertices are numbered `0..` in order of their bags' smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub target: Graph,
    pub witness: WitnessStructure,
}

impl Certificate {
    /// Builds the certificate for a partition of V(g).
    pub fn from_blocks<I: IntoIterator<Item = BTreeSet<Vertex>>>(g: &Graph, blocks: I) -> Certificate {
        let witness = WitnessStructure::from_blocks(blocks);
        let target = quotient_unchecked(g, &witness);
        Certificate { target, witness }
    }

    pub fn from_witness(g: &Graph, w: &WitnessStructure) -> Certificate {
        Self::from_blocks(g, w.bags.values().cloned())
    }

    /// Identifications used on a graph with `n` vertices.
    pub fn identifications(&self, n: usize) -> usize {
        self.witness.identifications(n)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveResult {
    Yes(Certificate),
    No,
}

impl SolveResult {
    pub fn is_yes(&self) -> bool {
        matches!(self, SolveResult::Yes(_))
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SolveResult::Yes(c) => Some(c),
            SolveResult::No => None,
        }
    }

    pub(crate) fn yes_blocks<I: IntoIterator<Item = BTreeSet<Vertex>>>(g: &Graph, blocks: I) -> Self {
        SolveResult::Yes(Certificate::from_blocks(g, blocks))
    }
}

/// Which parameter bounds the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parameter {
    /// At most `k` identifications.
    K(usize),
    /// At least `p` vertices must remain, i.e. `k = n - p`.
    Dual(usize),
}

/// Runs the dedicated solver for `class` under the given parameter.
pub fn solve(g: &Graph, class: GraphClass, param: Parameter) -> Result<SolveResult> {
    let k = match param {
        Parameter::K(k) => k,
        Parameter::Dual(p) => return dense::solve_dual_generic(g, p, class),
    };
    match class {
        GraphClass::Path => Ok(acyclic::solve_path(g, k)),
        GraphClass::LinearForest => Ok(acyclic::solve_linear_forest(g, k)),
        GraphClass::Star => Ok(acyclic::solve_star(g, k)),
        GraphClass::Tree => acyclic::solve_tree(g, k),
        GraphClass::Forest => acyclic::solve_forest(g, k),
        GraphClass::Clique => dense::solve_clique_k(g, k),
        GraphClass::Cluster => dense::solve_cluster_k(g, k),
        GraphClass::Split => dense::solve_split_k(g, k),
        GraphClass::Interval | GraphClass::Chordal => search::solve_xp_k(g, k, class),
    }
}
