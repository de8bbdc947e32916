//! Coloured graphs and flood-move semantics.
//!
//! A board is an undirected simple graph together with a colouring of its
//! vertices from a dense colour set `0..colour_count`. A move picks a vertex
//! and a colour and repaints the whole monochromatic component of that vertex,
//! merging it with any adjacent components of the new colour.
//!
//! Everything here is an immutable value after construction; the operations
//! are pure functions, so graphs and colourings can be shared freely between
//! threads.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

pub type Vertex = usize;
pub type ColourId = usize;

/// Goal colour for a solve or oracle call: a specific colour, or the best
/// over all colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Any,
    Colour(ColourId),
}

/// A single flood move: repaint the monochromatic component of `vertex`
/// with `colour`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub vertex: Vertex,
    pub colour: ColourId,
}

impl Move {
    pub fn new(vertex: Vertex, colour: ColourId) -> Self {
        Move { vertex, colour }
    }
}

/// A full assignment vertex -> colour; the live game state.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Colouring {
    colours: Vec<ColourId>,
}

impl Colouring {
    pub fn new(colours: Vec<ColourId>) -> Self {
        Colouring { colours }
    }

    #[inline]
    pub fn colour(&self, v: Vertex) -> ColourId {
        self.colours[v]
    }

    pub fn len(&self) -> usize {
        self.colours.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colours.is_empty()
    }

    pub fn as_slice(&self) -> &[ColourId] {
        &self.colours
    }

    /// The single colour of the board when it is flooded, else `None`.
    pub fn monochromatic_colour(&self) -> Option<ColourId> {
        let first = *self.colours.first()?;
        self.colours.iter().all(|&c| c == first).then_some(first)
    }
}

/// An undirected simple graph with an initial colouring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouredGraph {
    neighbours: Vec<Vec<Vertex>>,
    edges: Vec<(Vertex, Vertex)>,
    colouring: Colouring,
    colour_count: usize,
}

impl ColouredGraph {
    /// Builds a graph, validating simplicity and colour ranges.
    ///
    /// Vertex ids must be dense `0..n`; colour ids dense `0..colour_count`.
    pub fn new(
        vertex_count: usize,
        colour_count: usize,
        edges: &[(Vertex, Vertex)],
        colours: Vec<ColourId>,
    ) -> Result<Self> {
        if vertex_count == 0 {
            return Err(Error::invalid("graph must have at least one vertex"));
        }
        if colour_count == 0 {
            return Err(Error::invalid("colour count must be at least one"));
        }
        if vertex_count > VertexSet::CAPACITY {
            return Err(Error::Capacity(format!(
                "vertex count {vertex_count} exceeds the supported maximum {}",
                VertexSet::CAPACITY
            )));
        }
        if colour_count > u16::MAX as usize + 1 {
            return Err(Error::Capacity(format!(
                "colour count {colour_count} exceeds the supported maximum {}",
                u16::MAX as usize + 1
            )));
        }
        if colours.len() != vertex_count {
            return Err(Error::invalid(format!(
                "expected {vertex_count} colours, got {}",
                colours.len()
            )));
        }
        if let Some((v, &c)) = colours.iter().enumerate().find(|(_, &c)| c >= colour_count) {
            return Err(Error::invalid(format!(
                "vertex {v} has colour {c}, outside 0..{colour_count}"
            )));
        }

        let mut neighbours = vec![Vec::new(); vertex_count];
        let mut canonical = Vec::with_capacity(edges.len());
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for {vertex_count} vertices"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at vertex {u}")));
            }
            let e = (u.min(v), u.max(v));
            if !seen.insert(e) {
                return Err(Error::invalid(format!("duplicate edge ({},{})", e.0, e.1)));
            }
            canonical.push(e);
            neighbours[u].push(v);
            neighbours[v].push(u);
        }
        canonical.sort_unstable();
        for list in &mut neighbours {
            list.sort_unstable();
        }

        Ok(ColouredGraph {
            neighbours,
            edges: canonical,
            colouring: Colouring::new(colours),
            colour_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.neighbours.len()
    }

    pub fn colour_count(&self) -> usize {
        self.colour_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.neighbours[v]
    }

    pub fn colouring(&self) -> &Colouring {
        &self.colouring
    }

    /// Initial colour of `v`.
    pub fn colour(&self, v: Vertex) -> ColourId {
        self.colouring.colour(v)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_induced(&self.all_vertices())
    }

    /// Same structure, different live colouring.
    pub fn with_colouring(&self, colouring: Colouring) -> Result<Self> {
        if colouring.len() != self.vertex_count() {
            return Err(Error::invalid("colouring length does not match vertex count"));
        }
        ColouredGraph::new(
            self.vertex_count(),
            self.colour_count,
            &self.edges,
            colouring.as_slice().to_vec(),
        )
    }

    /// Same vertices and colouring, restricted edge set (e.g. a spanning tree).
    pub fn with_edges(&self, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        ColouredGraph::new(
            self.vertex_count(),
            self.colour_count,
            edges,
            self.colouring.as_slice().to_vec(),
        )
    }

    /// The subgraph induced by `vertices` as a standalone graph with dense
    /// ids, plus the map new id -> old id.
    pub fn induced(&self, vertices: &VertexSet) -> Result<(Self, Vec<Vertex>)> {
        let keep: Vec<Vertex> = vertices.iter().filter(|&v| v < self.vertex_count()).collect();
        if keep.is_empty() {
            return Err(Error::invalid("induced subgraph must be non-empty"));
        }
        let mut old_to_new = vec![usize::MAX; self.vertex_count()];
        for (new, &old) in keep.iter().enumerate() {
            old_to_new[old] = new;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if vertices.contains(u) && vertices.contains(v) {
                edges.push((old_to_new[u], old_to_new[v]));
            }
        }
        let colours = keep.iter().map(|&v| self.colour(v)).collect();
        let g = ColouredGraph::new(keep.len(), self.colour_count, &edges, colours)?;
        Ok((g, keep))
    }

    /// The maximal connected set containing `v` whose vertices all share
    /// `col(v)` under the given live colouring.
    pub fn monochromatic_component(&self, col: &Colouring, v: Vertex) -> Result<VertexSet> {
        if v >= self.vertex_count() {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for {} vertices",
                self.vertex_count()
            )));
        }
        if col.len() != self.vertex_count() {
            return Err(Error::invalid("colouring length does not match vertex count"));
        }
        let target = col.colour(v);
        let mut comp = VertexSet::singleton(v);
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            for &w in self.neighbours(u) {
                if col.colour(w) == target && !comp.contains(w) {
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        Ok(comp)
    }

    /// All monochromatic components of the live colouring, in ascending
    /// order of their minimum vertex.
    pub fn monochromatic_components(&self, col: &Colouring) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut comps = Vec::new();
        for v in 0..self.vertex_count() {
            if !seen.contains(v) {
                let comp = self
                    .monochromatic_component(col, v)
                    .expect("vertex in range");
                seen = seen.union(&comp);
                comps.push(comp);
            }
        }
        comps
    }

    /// Plays one move and returns the resulting colouring; the input is
    /// untouched.
    pub fn apply_move(&self, col: &Colouring, m: Move) -> Result<Colouring> {
        if m.colour >= self.colour_count {
            return Err(Error::invalid(format!(
                "colour {} out of range for {} colours",
                m.colour, self.colour_count
            )));
        }
        let comp = self.monochromatic_component(col, m.vertex)?;
        let mut colours = col.as_slice().to_vec();
        for v in comp.iter() {
            colours[v] = m.colour;
        }
        Ok(Colouring::new(colours))
    }

    /// True iff `s` is non-empty and induces a connected subgraph.
    ///
    /// The empty set counts as not connected.
    pub fn is_connected_induced(&self, s: &VertexSet) -> bool {
        let Some(start) = s.min_vertex() else {
            return false;
        };
        if s.iter().any(|v| v >= self.vertex_count()) {
            return false;
        }
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in self.neighbours(u) {
                if s.contains(w) && !seen.contains(w) {
                    seen.insert(w);
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == s.len()
    }

    /// Quotients every monochromatic component of the initial colouring to a
    /// single vertex. Returns the properly coloured quotient graph and the
    /// map original vertex -> quotient vertex.
    ///
    /// Quotient ids follow the ascending order of component minimum vertices,
    /// so a properly coloured input contracts to an identical copy with the
    /// identity map.
    pub fn contract_monochromatic(&self) -> (Self, Vec<Vertex>) {
        let comps = self.monochromatic_components(&self.colouring);
        let mut map = vec![usize::MAX; self.vertex_count()];
        let mut colours = Vec::with_capacity(comps.len());
        for (q, comp) in comps.iter().enumerate() {
            for v in comp.iter() {
                map[v] = q;
            }
            colours.push(self.colour(comp.min_vertex().expect("non-empty component")));
        }
        let mut edges: Vec<(Vertex, Vertex)> = self
            .edges
            .iter()
            .filter_map(|&(u, v)| {
                let (a, b) = (map[u], map[v]);
                (a != b).then(|| (a.min(b), a.max(b)))
            })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let quotient = ColouredGraph::new(comps.len(), self.colour_count, &edges, colours)
            .expect("contraction of a valid graph is valid");
        (quotient, map)
    }

    /// Guard used by the solvers: they are defined on connected boards only.
    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::invalid("graph is not connected"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path(colours: &[ColourId]) -> ColouredGraph {
        let n = colours.len();
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        let c = colours.iter().max().unwrap() + 1;
        ColouredGraph::new(n, c, &edges, colours.to_vec()).unwrap()
    }

    pub(crate) fn cycle(colours: &[ColourId]) -> ColouredGraph {
        let n = colours.len();
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        let c = colours.iter().max().unwrap() + 1;
        ColouredGraph::new(n, c, &edges, colours.to_vec()).unwrap()
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn component_stops_at_colour_boundaries() {
        let g = path(&[1, 0, 1]);
        let comp = g.monochromatic_component(g.colouring(), 1).unwrap();
        assert_eq!(comp, set(&[1]));
    }

    #[test]
    fn component_spans_monochromatic_graph() {
        let g = path(&[1, 1, 1]);
        let comp = g.monochromatic_component(g.colouring(), 0).unwrap();
        assert_eq!(comp, set(&[0, 1, 2]));
    }

    #[test]
    fn component_on_cycle_boundary() {
        let g = cycle(&[0, 0, 1, 1]);
        let comp = g.monochromatic_component(g.colouring(), 0).unwrap();
        assert_eq!(comp, set(&[0, 1]));
    }

    #[test]
    fn component_rejects_out_of_range_vertex() {
        let g = path(&[1, 0, 1]);
        assert!(g.monochromatic_component(g.colouring(), 3).is_err());
    }

    #[test]
    fn move_merges_recoloured_component() {
        let g = path(&[1, 0, 1]);
        let after = g.apply_move(g.colouring(), Move::new(1, 1)).unwrap();
        assert_eq!(after.as_slice(), &[1, 1, 1]);
        // input untouched
        assert_eq!(g.colouring().as_slice(), &[1, 0, 1]);
    }

    #[test]
    fn identity_move_changes_nothing() {
        let g = cycle(&[0, 1, 0, 1]);
        let after = g.apply_move(g.colouring(), Move::new(2, 0)).unwrap();
        assert_eq!(after, *g.colouring());
    }

    #[test]
    fn move_on_cycle_recolours_single_vertex() {
        let g = cycle(&[0, 1, 0, 1]);
        let after = g.apply_move(g.colouring(), Move::new(0, 1)).unwrap();
        assert_eq!(after.as_slice(), &[1, 1, 0, 1]);
    }

    #[test]
    fn move_rejects_bad_colour() {
        let g = path(&[1, 0, 1]);
        assert!(g.apply_move(g.colouring(), Move::new(0, 7)).is_err());
    }

    #[test]
    fn contraction_merges_components() {
        let g = path(&[0, 0, 1, 1]);
        let (q, map) = g.contract_monochromatic();
        assert_eq!(q.vertex_count(), 2);
        assert_eq!(q.colouring().as_slice(), &[0, 1]);
        assert_eq!(q.edges(), &[(0, 1)]);
        assert_eq!(map, vec![0, 0, 1, 1]);
    }

    #[test]
    fn contraction_of_proper_colouring_is_identity() {
        let g = cycle(&[0, 1, 0, 1]);
        let (q, map) = g.contract_monochromatic();
        assert_eq!(q, g);
        assert_eq!(map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn contraction_of_monochromatic_graph_is_single_vertex() {
        let g = cycle(&[2, 2, 2, 2]);
        let (q, map) = g.contract_monochromatic();
        assert_eq!(q.vertex_count(), 1);
        assert_eq!(q.edge_count(), 0);
        assert_eq!(map, vec![0, 0, 0, 0]);
    }

    #[test]
    fn induced_connectivity() {
        let g = path(&[1, 0, 1]);
        assert!(!g.is_connected_induced(&set(&[0, 2])));
        assert!(g.is_connected_induced(&set(&[0, 1])));
        assert!(!g.is_connected_induced(&VertexSet::EMPTY));
    }

    #[test]
    fn construction_rejects_degenerate_inputs() {
        assert!(ColouredGraph::new(0, 1, &[], vec![]).is_err());
        assert!(ColouredGraph::new(2, 0, &[(0, 1)], vec![0, 0]).is_err());
        assert!(ColouredGraph::new(2, 1, &[(0, 0)], vec![0, 0]).is_err());
        assert!(ColouredGraph::new(2, 1, &[(0, 1), (1, 0)], vec![0, 0]).is_err());
        assert!(ColouredGraph::new(2, 1, &[(0, 2)], vec![0, 0]).is_err());
        assert!(ColouredGraph::new(2, 1, &[(0, 1)], vec![0, 1]).is_err());
        assert!(matches!(
            ColouredGraph::new(300, 1, &[], vec![0; 300]),
            Err(Error::Capacity(_))
        ));
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        prop_compose! {
            fn arb_board(max_n: usize, max_c: usize)
                (n in 1..=max_n, c in 1..=max_c)
                (n in Just(n),
                 c in Just(c),
                 colours in proptest::collection::vec(0..c, n),
                 edge_bits in proptest::collection::vec(any::<bool>(), n * (n - 1) / 2))
                -> ColouredGraph
            {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if edge_bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                ColouredGraph::new(n, c, &edges, colours).unwrap()
            }
        }

        proptest! {
            #[test]
            fn apply_move_is_idempotent(g in arb_board(7, 3), v in 0usize..7, d in 0usize..3) {
                let v = v % g.vertex_count();
                let d = d % g.colour_count();
                let m = Move::new(v, d);
                let once = g.apply_move(g.colouring(), m).unwrap();
                let twice = g.apply_move(&once, m).unwrap();
                prop_assert_eq!(once, twice);
            }

            #[test]
            fn components_partition_vertices(g in arb_board(7, 3)) {
                let comps = g.monochromatic_components(g.colouring());
                let mut seen = VertexSet::EMPTY;
                for comp in &comps {
                    prop_assert!(seen.is_disjoint(comp));
                    seen = seen.union(comp);
                }
                prop_assert_eq!(seen, g.all_vertices());
                for v in 0..g.vertex_count() {
                    let comp = g.monochromatic_component(g.colouring(), v).unwrap();
                    prop_assert!(comps.contains(&comp));
                }
            }

            #[test]
            fn moved_component_never_shrinks(g in arb_board(7, 3), v in 0usize..7, d in 0usize..3) {
                let v = v % g.vertex_count();
                let d = d % g.colour_count();
                let before = g.monochromatic_component(g.colouring(), v).unwrap();
                let after_col = g.apply_move(g.colouring(), Move::new(v, d)).unwrap();
                let after = g.monochromatic_component(&after_col, v).unwrap();
                prop_assert!(before.is_subset(&after));
            }
        }
    }
}
