//! Deterministic instance generators.
//!
//! Every randomised choice is driven by a ChaCha stream seeded from an
//! explicit 64-bit seed, so identical parameters give byte-identical
//! instances after serialisation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{ColourId, ColouredGraph, Vertex};

/// How a generated board is coloured.
#[derive(Clone, Debug)]
pub enum ColourChoice {
    /// Uniform over `0..colour_count`.
    Random { colour_count: usize },
    /// An explicit list, one entry per vertex.
    Explicit { colour_count: usize, colours: Vec<ColourId> },
}

impl ColourChoice {
    pub fn random(colour_count: usize) -> Self {
        ColourChoice::Random { colour_count }
    }

    /// Explicit colours with the colour count inferred as `max + 1`.
    pub fn explicit(colours: Vec<ColourId>) -> Self {
        let colour_count = colours.iter().max().map_or(1, |&m| m + 1);
        ColourChoice::Explicit { colour_count, colours }
    }

    fn realise(&self, n: usize, rng: &mut ChaCha8Rng) -> Result<(usize, Vec<ColourId>)> {
        match self {
            ColourChoice::Random { colour_count } => {
                if *colour_count == 0 {
                    return Err(Error::invalid("colour count must be positive"));
                }
                let colours = (0..n).map(|_| rng.random_range(0..*colour_count)).collect();
                Ok((*colour_count, colours))
            }
            ColourChoice::Explicit { colour_count, colours } => {
                if colours.len() != n {
                    return Err(Error::invalid(format!(
                        "explicit colour list has {} entries for {n} vertices",
                        colours.len()
                    )));
                }
                Ok((*colour_count, colours.clone()))
            }
        }
    }
}

fn build(n: usize, edges: Vec<(Vertex, Vertex)>, colours: ColourChoice, seed: u64) -> Result<ColouredGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (c, list) = colours.realise(n, &mut rng)?;
    ColouredGraph::new(n, c, &edges, list)
}

pub fn path(n: usize, colours: ColourChoice, seed: u64) -> Result<ColouredGraph> {
    if n == 0 {
        return Err(Error::invalid("path needs at least one vertex"));
    }
    let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    build(n, edges, colours, seed)
}

pub fn cycle(n: usize, colours: ColourChoice, seed: u64) -> Result<ColouredGraph> {
    if n < 3 {
        return Err(Error::invalid("cycle needs at least three vertices"));
    }
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((0, n - 1));
    build(n, edges, colours, seed)
}

pub fn complete(n: usize, colours: ColourChoice, seed: u64) -> Result<ColouredGraph> {
    if n == 0 {
        return Err(Error::invalid("complete graph needs at least one vertex"));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    build(n, edges, colours, seed)
}

/// Rows × cols grid; vertex `(r, c)` has id `r * cols + c`.
pub fn grid(rows: usize, cols: usize, colours: ColourChoice, seed: u64) -> Result<ColouredGraph> {
    if rows == 0 || cols == 0 {
        return Err(Error::invalid("grid needs positive dimensions"));
    }
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    build(rows * cols, edges, colours, seed)
}

/// Per-edge subdivision counts for `subdivision`.
#[derive(Clone, Debug)]
pub enum Subdivisions {
    /// One count per base edge, in the base graph's sorted edge order.
    Explicit(Vec<usize>),
    /// Uniform in `min..=max` per edge.
    Random { min: usize, max: usize },
}

/// Subdivides every edge of the complete graph on `base_n` vertices,
/// replacing edge `uv` with a path `u - w1 - ... - wk - v`. New vertices are
/// appended after the base ids, in edge order.
pub fn subdivision(
    base_n: usize,
    counts: Subdivisions,
    colours: ColourChoice,
    seed: u64,
) -> Result<ColouredGraph> {
    if base_n < 2 {
        return Err(Error::invalid("subdivision base needs at least two vertices"));
    }
    let mut base_edges = Vec::new();
    for u in 0..base_n {
        for v in (u + 1)..base_n {
            base_edges.push((u, v));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let per_edge: Vec<usize> = match counts {
        Subdivisions::Explicit(list) => {
            if list.len() != base_edges.len() {
                return Err(Error::invalid(format!(
                    "expected {} subdivision counts, got {}",
                    base_edges.len(),
                    list.len()
                )));
            }
            list
        }
        Subdivisions::Random { min, max } => {
            if min > max {
                return Err(Error::invalid("subdivision range is empty"));
            }
            (0..base_edges.len()).map(|_| rng.random_range(min..=max)).collect()
        }
    };

    let mut next = base_n;
    let mut edges = Vec::new();
    for (&(u, v), &k) in base_edges.iter().zip(per_edge.iter()) {
        let mut prev = u;
        for _ in 0..k {
            edges.push((prev.min(next), prev.max(next)));
            prev = next;
            next += 1;
        }
        edges.push((prev.min(v), prev.max(v)));
    }

    let (c, list) = colours.realise(next, &mut rng)?;
    ColouredGraph::new(next, c, &edges, list)
}

/// Connected G(n, p): independent edges with probability `edge_prob`, then
/// any remaining components are stitched together with extra random edges.
pub fn random_connected(n: usize, edge_prob: f64, colours: ColourChoice, seed: u64) -> Result<ColouredGraph> {
    if n == 0 {
        return Err(Error::invalid("graph needs at least one vertex"));
    }
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(Error::invalid("edge probability must lie in [0, 1]"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(edge_prob) {
                edges.push((u, v));
            }
        }
    }

    // stitch components: each component's smallest vertex gets an edge to a
    // random smaller vertex, which always lies in an earlier component
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; n];
    let mut reps = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        reps.push(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    for &rep in reps.iter().skip(1) {
        let anchor = rng.random_range(0..rep);
        edges.push((anchor, rep));
    }

    let (c, list) = colours.realise(n, &mut rng)?;
    ColouredGraph::new(n, c, &edges, list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::write_instance;

    #[test]
    fn path_with_explicit_colours() {
        let g = path(3, ColourChoice::explicit(vec![1, 0, 1]), 0).unwrap();
        assert_eq!(g.colouring().as_slice(), &[1, 0, 1]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn rainbow_complete_graph() {
        let g = complete(4, ColourChoice::explicit((0..4).collect()), 0).unwrap();
        assert_eq!(g.colour_count(), 4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(crate::solver_free::solve_free(&g).unwrap().overall, 3);
    }

    #[test]
    fn grid_shape() {
        let g = grid(2, 3, ColourChoice::random(2), 7).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 7);
        assert!(g.is_connected());
    }

    #[test]
    fn subdivision_is_connected_with_expected_order() {
        let g = subdivision(4, Subdivisions::Explicit(vec![1, 2, 0, 1, 1, 3]), ColourChoice::random(3), 5).unwrap();
        assert_eq!(g.vertex_count(), 4 + 8);
        assert!(g.is_connected());
        assert_eq!(g.edge_count(), 6 + 8);
    }

    #[test]
    fn random_graphs_are_connected() {
        for seed in 0..10 {
            let g = random_connected(9, 0.15, ColourChoice::random(3), seed).unwrap();
            assert!(g.is_connected(), "seed {seed}");
        }
    }

    #[test]
    fn identical_seeds_give_identical_bytes() {
        for seed in [0u64, 1, 42] {
            let a = random_connected(8, 0.4, ColourChoice::random(3), seed).unwrap();
            let b = random_connected(8, 0.4, ColourChoice::random(3), seed).unwrap();
            assert_eq!(write_instance(&a), write_instance(&b));
            let c = subdivision(4, Subdivisions::Random { min: 0, max: 3 }, ColourChoice::random(2), seed).unwrap();
            let d = subdivision(4, Subdivisions::Random { min: 0, max: 3 }, ColourChoice::random(2), seed).unwrap();
            assert_eq!(write_instance(&c), write_instance(&d));
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(cycle(2, ColourChoice::random(2), 0).is_err());
        assert!(random_connected(4, 1.5, ColourChoice::random(2), 0).is_err());
        assert!(path(3, ColourChoice::explicit(vec![0]), 0).is_err());
        assert!(subdivision(4, Subdivisions::Explicit(vec![1]), ColourChoice::random(2), 0).is_err());
    }
}
