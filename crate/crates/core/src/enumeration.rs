//! Enumeration of connected subgraphs, splits, spanning trees and Steiner
//! subtrees.
//!
//! Connected vertex sets are produced size by size: every set of order k+1
//! is some set of order k plus one neighbouring vertex, with a global dedupe
//! per size. Splits reuse the index: the half containing the minimum vertex
//! of `h` is scanned over indexed subsets and the complement is checked for
//! connectivity, so each unordered pair comes out exactly once.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{ColouredGraph, Vertex};
use crate::vertex_set::VertexSet;

/// All connected vertex sets of a graph up to a size bound, grouped by size.
///
/// Within a size group the sets are sorted lexicographically by their
/// ascending vertex listing; iteration over groups is by increasing size.
#[derive(Clone, Debug)]
pub struct SubgraphIndex {
    by_size: Vec<Vec<VertexSet>>,
    members: HashSet<VertexSet>,
    by_min: HashMap<Vertex, Vec<VertexSet>>,
}

impl SubgraphIndex {
    /// Index of every connected subgraph with at most `max_size` vertices.
    pub fn build(g: &ColouredGraph, max_size: usize) -> Result<Self> {
        Self::build_from_seeds(g, (0..g.vertex_count()).collect(), max_size)
    }

    /// Index restricted to connected subgraphs containing `root`.
    pub fn build_containing(g: &ColouredGraph, root: Vertex, max_size: usize) -> Result<Self> {
        if root >= g.vertex_count() {
            return Err(Error::invalid(format!(
                "root {root} out of range for {} vertices",
                g.vertex_count()
            )));
        }
        Self::build_from_seeds(g, vec![root], max_size)
    }

    fn build_from_seeds(g: &ColouredGraph, seeds: Vec<Vertex>, max_size: usize) -> Result<Self> {
        if max_size == 0 || max_size > g.vertex_count() {
            return Err(Error::invalid(format!(
                "max_size {max_size} outside 1..={}",
                g.vertex_count()
            )));
        }
        let mut by_size: Vec<Vec<VertexSet>> = Vec::with_capacity(max_size);
        let mut members = HashSet::new();
        let first: Vec<VertexSet> = seeds.into_iter().map(VertexSet::singleton).collect();
        members.extend(first.iter().copied());
        by_size.push(first);

        for size in 1..max_size {
            let mut next = HashSet::new();
            for set in &by_size[size - 1] {
                for v in set.iter() {
                    for &w in g.neighbours(v) {
                        if !set.contains(w) {
                            let grown = set.with(w);
                            if !members.contains(&grown) {
                                next.insert(grown);
                            }
                        }
                    }
                }
            }
            let mut group: Vec<VertexSet> = next.into_iter().collect();
            group.sort_unstable();
            members.extend(group.iter().copied());
            by_size.push(group);
        }

        let mut by_min: HashMap<Vertex, Vec<VertexSet>> = HashMap::new();
        for group in &by_size {
            for set in group {
                by_min
                    .entry(set.min_vertex().expect("indexed sets are non-empty"))
                    .or_default()
                    .push(*set);
            }
        }

        Ok(SubgraphIndex { by_size, members, by_min })
    }

    /// Groups of sets by size; `groups()[k]` holds the sets of size `k + 1`.
    pub fn groups(&self) -> &[Vec<VertexSet>] {
        &self.by_size
    }

    pub fn sets_of_size(&self, size: usize) -> &[VertexSet] {
        self.by_size
            .get(size.wrapping_sub(1))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn contains(&self, s: &VertexSet) -> bool {
        self.members.contains(s)
    }

    /// Total number of indexed subgraphs.
    pub fn len(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All sets, smallest size first, lexicographic within a size.
    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.by_size.iter().flatten()
    }

    /// Indexed sets whose minimum vertex is `v`, sizes ascending.
    pub fn sets_with_min(&self, v: Vertex) -> &[VertexSet] {
        self.by_min.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Enumerates every connected subgraph of `g` on at most `max_size` vertices.
pub fn enumerate_connected_subgraphs(g: &ColouredGraph, max_size: usize) -> Result<SubgraphIndex> {
    SubgraphIndex::build(g, max_size)
}

/// All unordered pairs `{a, b}` of disjoint, non-empty, individually
/// connected sets with `a ∪ b = h`. The half containing `min(h)` is listed
/// first in each pair.
pub fn enumerate_splits(
    g: &ColouredGraph,
    index: &SubgraphIndex,
    h: &VertexSet,
) -> Result<Vec<(VertexSet, VertexSet)>> {
    if !index.contains(h) {
        return Err(Error::invalid(format!("{h:?} is not an indexed connected subgraph")));
    }
    if h.len() < 2 {
        return Err(Error::invalid("splits are defined for sets of size at least two"));
    }
    let min = h.min_vertex().expect("non-empty set");
    let mut pairs = Vec::new();
    for a in index.sets_with_min(min) {
        if a.len() >= h.len() {
            break; // sizes ascend within the min-vertex group
        }
        if a.is_subset(h) {
            let b = h.difference(a);
            if g.is_connected_induced(&b) {
                pairs.push((*a, b));
            }
        }
    }
    Ok(pairs)
}

/// A subtree of the host graph: its vertex set plus its edges in host ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subtree {
    pub vertices: VertexSet,
    pub edges: Vec<(Vertex, Vertex)>,
}

impl Subtree {
    /// The subtree as a standalone coloured graph with dense ids, colours
    /// inherited from the host.
    pub fn to_graph(&self, host: &ColouredGraph) -> Result<ColouredGraph> {
        let (induced, old_ids) = host.induced(&self.vertices)?;
        let mut old_to_new = HashMap::new();
        for (new, &old) in old_ids.iter().enumerate() {
            old_to_new.insert(old, new);
        }
        let edges: Vec<_> = self
            .edges
            .iter()
            .map(|&(u, v)| (old_to_new[&u], old_to_new[&v]))
            .collect();
        induced.with_edges(&edges)
    }
}

/// Calls `visit` once per spanning tree of `g`, passing the tree's edges.
///
/// Recursive include/exclude branching over the edge list with a
/// connectivity prune, so the work is proportional to the number of trees.
pub fn visit_spanning_trees<F: FnMut(&[(Vertex, Vertex)])>(g: &ColouredGraph, mut visit: F) -> Result<()> {
    g.ensure_connected()?;
    let n = g.vertex_count();
    let edges = g.edges();
    if n == 1 {
        visit(&[]);
        return Ok(());
    }
    let mut dsu = RollbackDsu::new(n);
    let mut chosen: Vec<(Vertex, Vertex)> = Vec::with_capacity(n - 1);
    branch(edges, 0, &mut dsu, &mut chosen, &mut visit);
    return Ok(());

    fn branch<F: FnMut(&[(Vertex, Vertex)])>(
        edges: &[(Vertex, Vertex)],
        next: usize,
        dsu: &mut RollbackDsu,
        chosen: &mut Vec<(Vertex, Vertex)>,
        visit: &mut F,
    ) {
        if dsu.components == 1 {
            visit(chosen);
            return;
        }
        if next == edges.len() {
            return;
        }
        let (u, v) = edges[next];
        let joins = dsu.find(u) != dsu.find(v);
        if joins {
            let mark = dsu.mark();
            dsu.union(u, v);
            chosen.push((u, v));
            branch(edges, next + 1, dsu, chosen, visit);
            chosen.pop();
            dsu.rollback(mark);
        }
        // Excluding this edge is only viable if the rest can still connect
        // everything.
        if connects_without(edges, next + 1, dsu) {
            branch(edges, next + 1, dsu, chosen, visit);
        }
    }

    fn connects_without(edges: &[(Vertex, Vertex)], from: usize, dsu: &mut RollbackDsu) -> bool {
        let mark = dsu.mark();
        for &(u, v) in &edges[from..] {
            dsu.union(u, v);
            if dsu.components == 1 {
                break;
            }
        }
        let connected = dsu.components == 1;
        dsu.rollback(mark);
        connected
    }
}

/// Every spanning tree, collected. Callers are responsible for feasible sizes.
pub fn spanning_trees(g: &ColouredGraph) -> Result<Vec<Vec<(Vertex, Vertex)>>> {
    let mut out = Vec::new();
    visit_spanning_trees(g, |t| out.push(t.to_vec()))?;
    Ok(out)
}

/// Number of spanning trees by the matrix-tree theorem (integer-exact
/// fraction-free elimination of a Laplacian minor).
pub fn spanning_tree_count(g: &ColouredGraph) -> u128 {
    let n = g.vertex_count();
    if n == 1 {
        return 1;
    }
    let m = n - 1;
    let mut lap = vec![vec![0i128; m]; m];
    for i in 0..m {
        lap[i][i] = g.neighbours(i).len() as i128;
    }
    for &(u, v) in g.edges() {
        if u < m && v < m {
            lap[u][v] -= 1;
            lap[v][u] -= 1;
        }
    }
    // Bareiss elimination; Laplacian minors are positive semidefinite, so a
    // zero pivot means a singular matrix (disconnected graph).
    let mut prev = 1i128;
    for k in 0..m {
        if lap[k][k] == 0 {
            return 0;
        }
        for i in (k + 1)..m {
            for j in (k + 1)..m {
                lap[i][j] = (lap[i][j] * lap[k][k] - lap[i][k] * lap[k][j]) / prev;
            }
            lap[i][k] = 0;
        }
        prev = lap[k][k];
    }
    lap[m - 1][m - 1] as u128
}

/// Every subtree of `g` on at most `max_size` vertices whose vertex set
/// contains all of `terminals`, each exactly once.
///
/// Realised as: every indexed connected superset of the terminals, times the
/// spanning trees of its induced subgraph. Growing supersets one vertex at a
/// time from the terminals alone would miss sets whose only removable leaves
/// are terminals, so the full index is filtered instead.
pub fn enumerate_steiner_subtrees(
    g: &ColouredGraph,
    terminals: &VertexSet,
    max_size: usize,
) -> Result<Vec<Subtree>> {
    if terminals.is_empty() {
        return Err(Error::invalid("terminal set must be non-empty"));
    }
    if terminals.iter().any(|v| v >= g.vertex_count()) {
        return Err(Error::invalid("terminal out of range"));
    }
    if terminals.len() > max_size {
        return Ok(Vec::new());
    }
    let index = SubgraphIndex::build(g, max_size)?;
    let mut out = Vec::new();
    for set in index.iter() {
        if set.len() < terminals.len() || !terminals.is_subset(set) {
            continue;
        }
        let (sub, old_ids) = g.induced(set)?;
        visit_spanning_trees(&sub, |tree| {
            let edges = tree
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (old_ids[u], old_ids[v]);
                    (a.min(b), a.max(b))
                })
                .collect();
            out.push(Subtree { vertices: *set, edges });
        })?;
    }
    Ok(out)
}

/// Union-find with union by size and an undo stack; no path compression so
/// rollbacks stay exact.
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
    trail: Vec<(usize, usize)>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        RollbackDsu {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
            trail: Vec::new(),
        }
    }

    fn find(&self, mut v: usize) -> usize {
        while self.parent[v] != v {
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, u: usize, v: usize) {
        let (mut a, mut b) = (self.find(u), self.find(v));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.trail.push((b, a));
        self.parent[b] = a;
        self.size[a] += self.size[b];
        self.components -= 1;
    }

    fn mark(&self) -> usize {
        self.trail.len()
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (child, root) = self.trail.pop().expect("trail not empty");
            self.parent[child] = child;
            self.size[root] -= self.size[child];
            self.components += 1;
        }
    }
}
