//! Python bindings: the coloured-graph type plus the solvers and oracles.
//!
//! Build the extension and run the smoke test from the workspace root:
//!
//! ```text
//! cargo build --release -p floodgraph-py
//! python3 python/smoke_test.py
//! ```

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use floodgraph::generate::{self, ColourChoice, Subdivisions};
use floodgraph::{
    instance, oracle, solve_fixed, solve_free, solve_linking_with_limit, ColouredGraph, Error,
    Move, Target, VertexSet, DEFAULT_K_LIMIT,
};

fn to_py_err(e: Error) -> PyErr {
    match e {
        Error::InvalidInput(_) | Error::Parse { .. } | Error::Capacity(_) => {
            PyValueError::new_err(e.to_string())
        }
        Error::Budget(_) | Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
    }
}

fn target_of(colour: Option<usize>) -> Target {
    colour.map_or(Target::Any, Target::Colour)
}

fn terminal_set(terminals: Vec<usize>) -> VertexSet {
    terminals.into_iter().collect()
}

/// A coloured board: an undirected simple graph plus a colouring.
#[pyclass(name = "Graph", skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: ColouredGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(
        vertex_count: usize,
        colour_count: usize,
        edges: Vec<(usize, usize)>,
        colours: Vec<usize>,
    ) -> PyResult<Self> {
        ColouredGraph::new(vertex_count, colour_count, &edges, colours)
            .map(|inner| PyGraph { inner })
            .map_err(to_py_err)
    }

    /// Parse the instance text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        instance::parse_instance(text).map(|inner| PyGraph { inner }).map_err(to_py_err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn colour_count(&self) -> usize {
        self.inner.colour_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    #[getter]
    fn colours(&self) -> Vec<usize> {
        self.inner.colouring().as_slice().to_vec()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    /// Serialise to the instance text format.
    fn to_text(&self) -> String {
        instance::write_instance(&self.inner)
    }

    /// Vertices of the monochromatic component containing `v`.
    fn monochromatic_component(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner
            .monochromatic_component(self.inner.colouring(), v)
            .map(|s| s.iter().collect())
            .map_err(to_py_err)
    }

    /// Play one flood move, returning the resulting board.
    fn apply_move(&self, vertex: usize, colour: usize) -> PyResult<Self> {
        let next = self
            .inner
            .apply_move(self.inner.colouring(), Move::new(vertex, colour))
            .map_err(to_py_err)?;
        self.inner
            .with_colouring(next)
            .map(|inner| PyGraph { inner })
            .map_err(to_py_err)
    }

    /// Contract monochromatic components; returns the quotient board and
    /// the vertex map.
    fn contract(&self) -> (Self, Vec<usize>) {
        let (quotient, map) = self.inner.contract_monochromatic();
        (PyGraph { inner: quotient }, map)
    }

    /// Exact free-play solve: `(per_colour, overall, subgraph_count)`.
    fn solve_free(&self) -> PyResult<(Vec<u32>, u32, usize)> {
        let res = solve_free(&self.inner).map_err(to_py_err)?;
        Ok((res.per_colour, res.overall, res.subgraph_count))
    }

    /// Exact fixed-root solve:
    /// `(per_colour, overall, overall_colour, witness, state_count)`.
    fn solve_fixed(&self, root: usize) -> PyResult<(Vec<Option<u32>>, u32, usize, Vec<usize>, usize)> {
        let res = solve_fixed(&self.inner, root).map_err(to_py_err)?;
        Ok((res.per_colour, res.overall, res.overall_colour, res.witness, res.state_count))
    }

    /// Exact linking solve.
    #[pyo3(signature = (terminals, target=None, k_limit=DEFAULT_K_LIMIT))]
    fn solve_link(&self, terminals: Vec<usize>, target: Option<usize>, k_limit: usize) -> PyResult<u32> {
        solve_linking_with_limit(&self.inner, &terminal_set(terminals), target_of(target), k_limit)
            .map_err(to_py_err)
    }

    /// Brute-force reference: `(moves, witness)` with witness as
    /// `(vertex, colour)` pairs.
    #[pyo3(signature = (target=None))]
    fn oracle_free(&self, target: Option<usize>) -> PyResult<(u32, Vec<(usize, usize)>)> {
        let out = oracle::oracle_free(&self.inner, target_of(target)).map_err(to_py_err)?;
        Ok((out.moves, out.witness.iter().map(|m| (m.vertex, m.colour)).collect()))
    }

    /// Brute-force reference: `(moves, colour_sequence)`.
    #[pyo3(signature = (root, target=None))]
    fn oracle_fixed(&self, root: usize, target: Option<usize>) -> PyResult<(u32, Vec<usize>)> {
        let out = oracle::oracle_fixed(&self.inner, root, target_of(target)).map_err(to_py_err)?;
        Ok((out.moves, out.witness))
    }

    /// Brute-force reference for linking.
    #[pyo3(signature = (terminals, target=None))]
    fn oracle_link(&self, terminals: Vec<usize>, target: Option<usize>) -> PyResult<u32> {
        oracle::oracle_link(&self.inner, &terminal_set(terminals), target_of(target))
            .map_err(to_py_err)
    }

    /// Minimum flood number over all spanning trees, for one colour.
    fn min_over_spanning_trees(&self, colour: usize) -> PyResult<u32> {
        oracle::min_over_spanning_trees(&self.inner, colour).map_err(to_py_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, colours={}, edges={})",
            self.inner.vertex_count(),
            self.inner.colour_count(),
            self.inner.edge_count()
        )
    }
}

fn colour_choice(colours: usize, colour_list: Option<Vec<usize>>) -> ColourChoice {
    match colour_list {
        Some(list) => ColourChoice::explicit(list),
        None => ColourChoice::random(colours),
    }
}

/// Deterministic instance generator; `kind` is one of `path`, `cycle`,
/// `complete`, `grid`, `subdivision`, `random`.
#[pyfunction]
#[pyo3(signature = (kind, n=None, colours=3, colour_list=None, seed=0, rows=None, cols=None,
                    base_n=4, min_sub=0, max_sub=3, edge_prob=0.5))]
#[allow(clippy::too_many_arguments)]
fn generate_graph(
    kind: &str,
    n: Option<usize>,
    colours: usize,
    colour_list: Option<Vec<usize>>,
    seed: u64,
    rows: Option<usize>,
    cols: Option<usize>,
    base_n: usize,
    min_sub: usize,
    max_sub: usize,
    edge_prob: f64,
) -> PyResult<PyGraph> {
    let choice = colour_choice(colours, colour_list);
    let need_n = || n.ok_or_else(|| PyValueError::new_err("this kind needs n"));
    let g = match kind {
        "path" => generate::path(need_n()?, choice, seed),
        "cycle" => generate::cycle(need_n()?, choice, seed),
        "complete" => generate::complete(need_n()?, choice, seed),
        "grid" => {
            let rows = rows.ok_or_else(|| PyValueError::new_err("grid needs rows"))?;
            let cols = cols.ok_or_else(|| PyValueError::new_err("grid needs cols"))?;
            generate::grid(rows, cols, choice, seed)
        }
        "subdivision" => generate::subdivision(
            base_n,
            Subdivisions::Random { min: min_sub, max: max_sub },
            choice,
            seed,
        ),
        "random" => generate::random_connected(need_n()?, edge_prob, choice, seed),
        other => return Err(PyValueError::new_err(format!("unknown kind `{other}`"))),
    };
    g.map(|inner| PyGraph { inner }).map_err(to_py_err)
}

#[pymodule]
fn floodgraph_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(generate_graph, m)?)?;
    m.add("DEFAULT_K_LIMIT", DEFAULT_K_LIMIT)?;
    Ok(())
}
