//! Fixed-root solver: shortest path in the digraph of (region, colour)
//! states.
//!
//! A state pairs a connected subgraph containing the root (the root's
//! monochromatic region) with its colour. There is an edge from state i to
//! state j exactly when region_i ⊆ region_j, every vertex of
//! region_j \ region_i has initial colour colour_j, and no vertex adjacent
//! to region_j outside it has initial colour colour_j; self-loops are
//! omitted. One move at the root is one edge, so the answer for a colour d
//! is the unweighted shortest path from the initial state to (V, d).
//!
//! For a fixed source region and move colour those three conditions pin the
//! target region uniquely: it is the region grown through initially
//! d-coloured vertices until it is maximal. Edges are therefore materialised
//! per (region, colour) successor rather than by scanning node pairs, which
//! builds the same digraph.

use std::collections::HashMap;

use crate::enumeration::SubgraphIndex;
use crate::error::{Error, Result};
use crate::graph::{ColourId, ColouredGraph, Vertex};
use crate::vertex_set::VertexSet;

/// One digraph node: the root's monochromatic region and its colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StateNode {
    pub region: VertexSet,
    pub colour: ColourId,
}

/// The full state digraph for one (board, root) pair.
pub struct StateDigraph {
    nodes: Vec<StateNode>,
    /// Out-neighbours, sorted by (target region minimum vertex, colour).
    out_edges: Vec<Vec<usize>>,
    initial: usize,
    node_ids: HashMap<StateNode, usize>,
}

impl StateDigraph {
    pub fn nodes(&self) -> &[StateNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn out_edges(&self, node: usize) -> &[usize] {
        &self.out_edges[node]
    }

    pub fn node_id(&self, node: &StateNode) -> Option<usize> {
        self.node_ids.get(node).copied()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.out_edges[from].contains(&to)
    }
}

/// Builds the digraph over all (root-containing connected subgraph, colour)
/// pairs. Unreachable states are kept as dead weight.
pub fn build_state_digraph(g: &ColouredGraph, root: Vertex) -> Result<StateDigraph> {
    if root >= g.vertex_count() {
        return Err(Error::invalid(format!(
            "root {root} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    g.ensure_connected()?;
    let n = g.vertex_count();
    let c = g.colour_count();
    let index = SubgraphIndex::build_containing(g, root, n)?;
    let regions: Vec<VertexSet> = index.iter().copied().collect();
    let mut region_ids: HashMap<VertexSet, usize> = HashMap::with_capacity(regions.len());
    for (i, r) in regions.iter().enumerate() {
        region_ids.insert(*r, i);
    }

    let mut nodes = Vec::with_capacity(regions.len() * c);
    let mut node_ids = HashMap::with_capacity(regions.len() * c);
    for region in &regions {
        for colour in 0..c {
            let node = StateNode { region: *region, colour };
            node_ids.insert(node, nodes.len());
            nodes.push(node);
        }
    }

    // successor region of (region, move colour), shared by every source
    // colour of that region
    let mut successors = vec![0usize; regions.len() * c];
    for (ri, region) in regions.iter().enumerate() {
        for d in 0..c {
            let grown = grow_through_colour(g, region, d);
            successors[ri * c + d] = *region_ids
                .get(&grown)
                .ok_or_else(|| Error::internal("grown region missing from the index"))?;
        }
    }

    let mut out_edges = vec![Vec::new(); nodes.len()];
    for (i, node) in nodes.iter().enumerate() {
        let ri = region_ids[&node.region];
        let mut outs: Vec<usize> = Vec::with_capacity(c);
        for d in 0..c {
            let j = successors[ri * c + d] * c + d;
            if j != i {
                outs.push(j);
            }
        }
        outs.sort_unstable_by_key(|&j| {
            let t = &nodes[j];
            (t.region.min_vertex().unwrap_or(usize::MAX), t.colour)
        });
        out_edges[i] = outs;
    }

    let initial_region = g.monochromatic_component(g.colouring(), root)?;
    let initial = node_ids[&StateNode { region: initial_region, colour: g.colour(root) }];

    Ok(StateDigraph { nodes, out_edges, initial, node_ids })
}

/// Absorbs into `region` every vertex reachable through initially
/// `colour`-coloured vertices, yielding the maximal grown region.
fn grow_through_colour(g: &ColouredGraph, region: &VertexSet, colour: ColourId) -> VertexSet {
    let mut grown = *region;
    let mut stack: Vec<Vertex> = region.iter().collect();
    while let Some(u) = stack.pop() {
        for &w in g.neighbours(u) {
            if !grown.contains(w) && g.colour(w) == colour {
                grown.insert(w);
                stack.push(w);
            }
        }
    }
    grown
}

/// Exact fixed-root flood numbers for every colour, with a replayable
/// witness for the overall optimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSolveResult {
    /// `per_colour[d]` = moves to flood with colour `d`; `None` marks an
    /// unreachable goal, which cannot occur on a connected board.
    pub per_colour: Vec<Option<u32>>,
    pub overall: u32,
    /// Colour attaining `overall` (smallest such colour).
    pub overall_colour: ColourId,
    /// Colours to play at the root, in order, for the overall optimum.
    pub witness: Vec<ColourId>,
    /// Number of digraph states, reported for benchmarking.
    pub state_count: usize,
}

pub fn solve_fixed(g: &ColouredGraph, root: Vertex) -> Result<FixedSolveResult> {
    let digraph = build_state_digraph(g, root)?;
    let c = g.colour_count();
    let full = g.all_vertices();

    // unweighted BFS from the initial state; first-found parents make the
    // witness deterministic given the sorted out-edge order
    let mut dist: Vec<Option<u32>> = vec![None; digraph.node_count()];
    let mut parent: Vec<usize> = vec![usize::MAX; digraph.node_count()];
    let start = digraph.initial();
    dist[start] = Some(0);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(i) = queue.pop_front() {
        let d = dist[i].expect("queued nodes have distances");
        for &j in digraph.out_edges(i) {
            if dist[j].is_none() {
                dist[j] = Some(d + 1);
                parent[j] = i;
                queue.push_back(j);
            }
        }
    }

    let mut per_colour = vec![None; c];
    for d in 0..c {
        let goal = StateNode { region: full, colour: d };
        let id = digraph
            .node_id(&goal)
            .ok_or_else(|| Error::internal("flooded state missing from the digraph"))?;
        per_colour[d] = dist[id];
    }

    let (overall_colour, overall) = per_colour
        .iter()
        .enumerate()
        .filter_map(|(d, m)| m.map(|m| (d, m)))
        .min_by_key(|&(d, m)| (m, d))
        .ok_or_else(|| Error::internal("no flooded state is reachable on a connected board"))?;

    let goal_id = digraph
        .node_id(&StateNode { region: full, colour: overall_colour })
        .expect("checked above");
    let mut witness = Vec::new();
    let mut at = goal_id;
    while at != start {
        witness.push(digraph.nodes()[at].colour);
        at = parent[at];
    }
    witness.reverse();

    Ok(FixedSolveResult {
        per_colour,
        overall,
        overall_colour,
        witness,
        state_count: digraph.node_count(),
    })
}
