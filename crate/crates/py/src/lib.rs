//! Python bindings: a `Graph` class plus the solvers, kernels, oracle and
//! witness checks as module functions. Witnesses cross the boundary as
//! `dict[int, list[int]]` keyed by target vertex.

use identikit::acyclic::{kernelize_forest, KernelVerdict};
use identikit::io::{format_graph, parse_graph};
use identikit::oracle::{oracle_min_witness, OracleBudget};
use identikit::target::identify_to_forest as forest_target;
use identikit::{GraphClass, Parameter, SolveResult, WitnessStructure};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::collections::{BTreeMap, BTreeSet};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn class(name: &str) -> PyResult<GraphClass> {
    name.parse().map_err(err)
}

type Bags = BTreeMap<usize, Vec<usize>>;

fn bags_out(w: &WitnessStructure) -> Bags {
    w.bags.iter().map(|(&x, b)| (x, b.iter().copied().collect())).collect()
}

fn bags_in(bags: Bags) -> WitnessStructure {
    WitnessStructure::new(bags.into_iter().map(|(x, b)| (x, b.into_iter().collect::<BTreeSet<_>>())).collect())
}

/// Simple undirected graph on non-negative integer ids.
#[pyclass(name = "Graph", module = "identikit_py", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyGraph {
    inner: identikit::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph { inner: identikit::Graph::from_edges(n, edges).map_err(err)? })
    }

    /// Parses the `n m` / `u v` text format.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: parse_graph(text).map_err(err)? })
    }

    fn to_text(&self) -> String {
        format_graph(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn vertices(&self) -> Vec<usize> {
        self.inner.vertices().collect()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Identifies `u` and `v`; the merged vertex gets the next free id.
    fn identify(&self, u: usize, v: usize) -> PyResult<PyGraph> {
        Ok(PyGraph { inner: self.inner.identify(u, v).map_err(err)? })
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, edges={:?})", self.inner.n(), self.inner.edges().collect::<Vec<_>>())
    }
}

#[pyfunction]
fn recognize(g: &PyGraph, cls: &str) -> PyResult<bool> {
    Ok(identikit::recognize(&g.inner, class(cls)?))
}

/// Runs the class solver. Returns `(target, bags)` on YES and `None` on NO.
#[pyfunction]
#[pyo3(signature = (g, cls, k = None, dual_p = None))]
fn solve(g: &PyGraph, cls: &str, k: Option<usize>, dual_p: Option<usize>) -> PyResult<Option<(PyGraph, Bags)>> {
    let param = match (k, dual_p) {
        (Some(k), None) => Parameter::K(k),
        (None, Some(p)) => Parameter::Dual(p),
        _ => return Err(PyValueError::new_err("pass exactly one of k and dual_p")),
    };
    Ok(match identikit::solve(&g.inner, class(cls)?, param).map_err(err)? {
        SolveResult::Yes(c) => Some((PyGraph { inner: c.target }, bags_out(&c.witness))),
        SolveResult::No => None,
    })
}

#[pyfunction]
fn verify_witness(g: &PyGraph, h: &PyGraph, bags: Bags) -> PyResult<bool> {
    identikit::verify_witness(&g.inner, &h.inner, &bags_in(bags)).map_err(err)
}

/// Identification to exactly the forest `f`; bags keyed by V(f).
#[pyfunction]
fn identify_to_forest(g: &PyGraph, f: &PyGraph) -> PyResult<Option<Bags>> {
    Ok(forest_target(&g.inner, &f.inner).map_err(err)?.as_ref().map(bags_out))
}

/// Fewest identifications into the class, or `None` if unreachable.
#[pyfunction]
fn oracle_min(g: &PyGraph, cls: &str) -> PyResult<Option<usize>> {
    let best = oracle_min_witness(&g.inner, class(cls)?, &OracleBudget::from_env()).map_err(err)?;
    Ok(best.map(|(cost, _)| cost))
}

/// Forest kernel: `("yes", None)`, `("no", None)` or `("reduced", (graph, k))`.
#[pyfunction]
fn kernelize_forest_py(g: &PyGraph, k: usize) -> (&'static str, Option<(PyGraph, usize)>) {
    match kernelize_forest(&g.inner, k).verdict {
        KernelVerdict::TrivialYes => ("yes", None),
        KernelVerdict::TrivialNo => ("no", None),
        KernelVerdict::Reduced(inst) => ("reduced", Some((PyGraph { inner: inst.graph }, inst.budget))),
    }
}

/// Runs the command-line front end in-process: `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let out = identikit::cli::run(std::iter::once("identikit".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
pub fn identikit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    m.add_function(wrap_pyfunction!(identify_to_forest, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_min, m)?)?;
    m.add("kernelize_forest", wrap_pyfunction!(kernelize_forest_py, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("CLASSES", GraphClass::ALL.iter().map(|c| c.name()).collect::<Vec<_>>())?;
    Ok(())
}
