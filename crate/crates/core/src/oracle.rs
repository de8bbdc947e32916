//! Ground-truth solvers: exhaustive breadth-first search over game states,
//! plus the spanning-tree minimisation they are checked against.
//!
//! A state is a full colouring of the contracted board. Moves are generated
//! one per (monochromatic component, colour other than its current one), in
//! ascending order of component minimum vertex then colour, which makes the
//! returned witnesses deterministic. The search is exact by construction and
//! refuses to guess: exceeding the configured budget is a distinct error,
//! never a wrong answer.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{ColourId, ColouredGraph, Move, Target, Vertex};
use crate::vertex_set::VertexSet;

/// Caps on a single oracle search.
#[derive(Clone, Copy, Debug)]
pub struct OracleBudget {
    /// Maximum number of distinct states visited.
    pub max_states: usize,
    /// Optional wall-clock limit.
    pub max_duration: Option<Duration>,
}

pub const DEFAULT_MAX_STATES: usize = 5_000_000;

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_states: DEFAULT_MAX_STATES, max_duration: None }
    }
}

impl OracleBudget {
    pub fn with_states(max_states: usize) -> Self {
        OracleBudget { max_states, max_duration: None }
    }
}

/// Result of a free-play oracle run: the exact optimum and one optimal
/// move sequence on the original (uncontracted) board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeOutcome {
    pub moves: u32,
    pub witness: Vec<Move>,
}

/// Result of a fixed-root oracle run; the witness is the colour sequence
/// played at the root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedOutcome {
    pub moves: u32,
    pub witness: Vec<ColourId>,
}

/// Minimum number of moves flooding the whole board with the target colour,
/// with an optimal move sequence.
pub fn oracle_free(g: &ColouredGraph, target: Target) -> Result<FreeOutcome> {
    oracle_free_with(g, target, &OracleBudget::default())
}

pub fn oracle_free_with(g: &ColouredGraph, target: Target, budget: &OracleBudget) -> Result<FreeOutcome> {
    check_target(g, target)?;
    g.ensure_connected()?;
    let search = Search::new(g);
    let (moves, quotient_witness) = search.run(budget, MoveSource::Anywhere, |s, q| {
        monochromatic_in(s, q, target)
    })?;
    let witness = search.lift_witness(&quotient_witness);
    Ok(FreeOutcome { moves, witness })
}

/// Minimum over move sequences all played at `root`; witness is the colour
/// sequence.
pub fn oracle_fixed(g: &ColouredGraph, root: Vertex, target: Target) -> Result<FixedOutcome> {
    oracle_fixed_with(g, root, target, &OracleBudget::default())
}

pub fn oracle_fixed_with(
    g: &ColouredGraph,
    root: Vertex,
    target: Target,
    budget: &OracleBudget,
) -> Result<FixedOutcome> {
    check_target(g, target)?;
    if root >= g.vertex_count() {
        return Err(Error::invalid(format!(
            "root {root} out of range for {} vertices",
            g.vertex_count()
        )));
    }
    g.ensure_connected()?;
    let search = Search::new(g);
    let quotient_root = search.map[root];
    let (moves, quotient_witness) = search.run(budget, MoveSource::At(quotient_root), |s, q| {
        monochromatic_in(s, q, target)
    })?;
    let witness = quotient_witness.iter().map(|m| m.colour).collect();
    Ok(FixedOutcome { moves, witness })
}

/// Minimum number of moves (played anywhere) after which all terminals lie
/// in one monochromatic component of the target colour.
pub fn oracle_link(g: &ColouredGraph, terminals: &VertexSet, target: Target) -> Result<u32> {
    oracle_link_with(g, terminals, target, &OracleBudget::default())
}

pub fn oracle_link_with(
    g: &ColouredGraph,
    terminals: &VertexSet,
    target: Target,
    budget: &OracleBudget,
) -> Result<u32> {
    check_target(g, target)?;
    if terminals.is_empty() {
        return Err(Error::invalid("terminal set must be non-empty"));
    }
    if terminals.iter().any(|v| v >= g.vertex_count()) {
        return Err(Error::invalid("terminal out of range"));
    }
    g.ensure_connected()?;
    let search = Search::new(g);
    let quotient_terminals: VertexSet = terminals.iter().map(|v| search.map[v]).collect();
    let (moves, _) = search.run(budget, MoveSource::Anywhere, |s, q| {
        linked_in(s, q, &quotient_terminals, target)
    })?;
    Ok(moves)
}

/// The right-hand side of the spanning-tree characterisation: the minimum,
/// over all spanning trees with inherited colouring, of the tree's flood
/// number for `target`.
pub fn min_over_spanning_trees(g: &ColouredGraph, target: ColourId) -> Result<u32> {
    min_over_spanning_trees_with(g, target, &OracleBudget::default())
}

pub fn min_over_spanning_trees_with(
    g: &ColouredGraph,
    target: ColourId,
    budget: &OracleBudget,
) -> Result<u32> {
    g.ensure_connected()?;
    let mut best: Option<u32> = None;
    let mut first_err: Option<Error> = None;
    crate::enumeration::visit_spanning_trees(g, |edges| {
        if first_err.is_some() || best == Some(0) {
            return;
        }
        let tree = match g.with_edges(edges) {
            Ok(t) => t,
            Err(e) => {
                first_err = Some(e);
                return;
            }
        };
        // a tree costing at least the best so far cannot improve the
        // minimum, so its search may stop early
        let search = Search::new(&tree);
        match search.run_capped(budget, MoveSource::Anywhere, best, |s, q| {
            monochromatic_in(s, q, Target::Colour(target))
        }) {
            Ok(Some((moves, _))) => best = Some(best.map_or(moves, |b: u32| b.min(moves))),
            Ok(None) => {}
            Err(e) => first_err = Some(e),
        }
    })?;
    if let Some(e) = first_err {
        return Err(e);
    }
    best.ok_or_else(|| Error::internal("connected graph has no spanning tree"))
}

fn check_target(g: &ColouredGraph, target: Target) -> Result<()> {
    match target {
        Target::Colour(d) if d >= g.colour_count() => Err(Error::invalid(format!(
            "target colour {d} out of range for {} colours",
            g.colour_count()
        ))),
        _ => Ok(()),
    }
}

fn monochromatic_in(state: &[u16], _q: &ColouredGraph, target: Target) -> bool {
    let first = state[0];
    if !state.iter().all(|&c| c == first) {
        return false;
    }
    match target {
        Target::Any => true,
        Target::Colour(d) => first as usize == d,
    }
}

fn linked_in(state: &[u16], q: &ColouredGraph, terminals: &VertexSet, target: Target) -> bool {
    let first = terminals.min_vertex().expect("non-empty terminals");
    if let Target::Colour(d) = target {
        if state[first] as usize != d {
            return false;
        }
    }
    // All terminals share the colour and sit in one component of it.
    let colour = state[first];
    if terminals.iter().any(|t| state[t] != colour) {
        return false;
    }
    let mut seen = VertexSet::singleton(first);
    let mut stack = vec![first];
    while let Some(u) = stack.pop() {
        for &w in q.neighbours(u) {
            if state[w] == colour && !seen.contains(w) {
                seen.insert(w);
                stack.push(w);
            }
        }
    }
    terminals.is_subset(&seen)
}

enum MoveSource {
    Anywhere,
    At(Vertex),
}

/// BFS over colourings of the contracted board.
struct Search {
    quotient: ColouredGraph,
    /// original vertex -> quotient vertex
    map: Vec<Vertex>,
    /// quotient vertex -> smallest original vertex it came from
    reps: Vec<Vertex>,
}

impl Search {
    fn new(g: &ColouredGraph) -> Self {
        let (quotient, map) = g.contract_monochromatic();
        let mut reps = vec![usize::MAX; quotient.vertex_count()];
        for (orig, &q) in map.iter().enumerate() {
            if reps[q] == usize::MAX {
                reps[q] = orig;
            }
        }
        Search { quotient, map, reps }
    }

    /// Shortest move count from the initial colouring to a goal state, with
    /// one optimal quotient-move sequence.
    fn run<F>(&self, budget: &OracleBudget, source: MoveSource, goal: F) -> Result<(u32, Vec<Move>)>
    where
        F: Fn(&[u16], &ColouredGraph) -> bool,
    {
        self.run_capped(budget, source, None, goal)?
            .ok_or_else(|| Error::internal("search space exhausted without reaching the goal"))
    }

    /// As `run`, but gives up once the answer would reach `cap` moves,
    /// returning `None` instead of an error.
    fn run_capped<F>(
        &self,
        budget: &OracleBudget,
        source: MoveSource,
        cap: Option<u32>,
        goal: F,
    ) -> Result<Option<(u32, Vec<Move>)>>
    where
        F: Fn(&[u16], &ColouredGraph) -> bool,
    {
        let q = &self.quotient;
        let start: Box<[u16]> = q
            .colouring()
            .as_slice()
            .iter()
            .map(|&c| c as u16)
            .collect();
        if goal(&start, q) {
            return Ok(Some((0, Vec::new())));
        }

        let started = Instant::now();
        let mut states: Vec<Box<[u16]>> = vec![start.clone()];
        let mut parents: Vec<(usize, Move)> = vec![(usize::MAX, Move::new(0, 0))];
        let mut index: HashMap<Box<[u16]>, usize> = HashMap::new();
        index.insert(start, 0);
        let mut depth_of: Vec<u32> = vec![0];
        let mut cursor = 0usize;

        while cursor < states.len() {
            if let Some(limit) = budget.max_duration {
                if cursor % 1024 == 0 && started.elapsed() > limit {
                    return Err(Error::Budget(format!(
                        "oracle exceeded the wall-clock limit after {} states",
                        states.len()
                    )));
                }
            }
            let depth = depth_of[cursor];
            if let Some(cap) = cap {
                // every successor would cost depth + 1 >= cap moves
                if depth + 1 >= cap {
                    return Ok(None);
                }
            }
            let state = std::mem::take(&mut states[cursor]);

            for (vertex, comp) in self.components_of(&state, &source) {
                let current = state[vertex];
                for d in 0..q.colour_count() as u16 {
                    if d == current {
                        continue;
                    }
                    let mut next = state.clone();
                    for v in comp.iter() {
                        next[v] = d;
                    }
                    if index.contains_key(&next) {
                        continue;
                    }
                    if states.len() >= budget.max_states {
                        return Err(Error::Budget(format!(
                            "oracle exceeded the visited-state budget of {}",
                            budget.max_states
                        )));
                    }
                    let mv = Move::new(vertex, d as usize);
                    if goal(&next, q) {
                        let mut witness = vec![mv];
                        let mut at = cursor;
                        while at != 0 {
                            witness.push(parents[at].1);
                            at = parents[at].0;
                        }
                        witness.reverse();
                        return Ok(Some((depth + 1, witness)));
                    }
                    let id = states.len();
                    index.insert(next.clone(), id);
                    states.push(next);
                    parents.push((cursor, mv));
                    depth_of.push(depth + 1);
                }
            }
            states[cursor] = state;
            cursor += 1;
        }
        Ok(None)
    }

    /// Monochromatic components to move in, as (minimum vertex, members),
    /// ascending by minimum vertex; just the root's component in fixed play.
    fn components_of(&self, state: &[u16], source: &MoveSource) -> Vec<(Vertex, VertexSet)> {
        let q = &self.quotient;
        let component = |v: Vertex| {
            let colour = state[v];
            let mut comp = VertexSet::singleton(v);
            let mut stack = vec![v];
            while let Some(u) = stack.pop() {
                for &w in q.neighbours(u) {
                    if state[w] == colour && !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            comp
        };
        match source {
            MoveSource::Anywhere => {
                let mut comps = Vec::new();
                let mut seen = VertexSet::EMPTY;
                for v in 0..q.vertex_count() {
                    if !seen.contains(v) {
                        let comp = component(v);
                        seen = seen.union(&comp);
                        comps.push((v, comp));
                    }
                }
                comps
            }
            MoveSource::At(root) => vec![(*root, component(*root))],
        }
    }

    /// Rewrites quotient moves onto the original board: each quotient vertex
    /// is replayed at the smallest original vertex it came from.
    fn lift_witness(&self, witness: &[Move]) -> Vec<Move> {
        witness
            .iter()
            .map(|m| Move::new(self.reps[m.vertex], m.colour))
            .collect()
    }
}
