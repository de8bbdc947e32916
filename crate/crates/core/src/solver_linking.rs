//! k-terminal linking solver.
//!
//! `link_cost(W, d, i)` is the cheapest flood-to-`d` cost over subtrees of
//! at most `i` vertices containing all of `W`, or unreachable when no such
//! subtree exists. On a properly coloured board it satisfies:
//!
//!   i = 1:  unreachable if |W| ≥ 2, else 0/1 depending on the colour of
//!           the single terminal;
//!   i ≥ 2:  min of
//!             split_cost(W, d, i)                      (two subtrees joined
//!                                                       by one edge),
//!             1 + min over d' of split_cost(W, d', i)  (flood then repaint),
//!             link_cost(W, d, i-1).
//!
//! `split_cost` ranges over every way of partitioning W into two non-empty
//! parts, every oriented edge (x1, x2) with x1 not in the second part and x2
//! not in the first, and every composition i = j1 + j2 into positive sizes;
//! each choice prices the two parts recursively. The table is filled lazily:
//! every recursive call strictly shrinks the size budget, and only sets
//! actually reachable from the query are ever touched.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::{ColourId, ColouredGraph, Target, Vertex};
use crate::vertex_set::VertexSet;

/// Default cap on the number of terminals; the table grows like n^(k+1).
pub const DEFAULT_K_LIMIT: usize = 4;

/// One way of charging a terminal partition to two smaller subproblems:
/// the parts are `W1 ∪ {x1}` and `W2 ∪ {x2}` with budgets `j1 + j2 = i`,
/// joined by the edge `(x1, x2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionChoice {
    pub first_set: VertexSet,
    pub first_budget: usize,
    pub second_set: VertexSet,
    pub second_budget: usize,
    pub edge: (Vertex, Vertex),
}

/// All partition choices for terminal set `w` and size budget `i`.
///
/// Partitions are canonicalised so the part containing `min(w)` comes
/// first; both orientations of every edge are considered.
pub fn enumerate_poss(g: &ColouredGraph, w: &VertexSet, i: usize) -> Vec<PartitionChoice> {
    let members: Vec<Vertex> = w.iter().collect();
    let k = members.len();
    if k < 2 || i < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    // submasks containing members[0] pick W1, so each unordered partition
    // appears exactly once
    let full = 1u32 << k;
    for mask in 1..full - 1 {
        if mask & 1 == 0 {
            continue;
        }
        let mut w1 = VertexSet::EMPTY;
        let mut w2 = VertexSet::EMPTY;
        for (b, &v) in members.iter().enumerate() {
            if mask & (1 << b) != 0 {
                w1.insert(v);
            } else {
                w2.insert(v);
            }
        }
        for &(u, v) in g.edges() {
            for (x1, x2) in [(u, v), (v, u)] {
                if w2.contains(x1) || w1.contains(x2) {
                    continue;
                }
                for j1 in 1..i {
                    out.push(PartitionChoice {
                        first_set: w1.with(x1),
                        first_budget: j1,
                        second_set: w2.with(x2),
                        second_budget: i - j1,
                        edge: (x1, x2),
                    });
                }
            }
        }
    }
    out
}

/// Lazily memoised linking table over one board.
///
/// Exactness assumes the board is properly coloured; `solve_linking`
/// contracts first and is the normal entry point.
pub struct LinkDpTable<'g> {
    g: &'g ColouredGraph,
    f: HashMap<(VertexSet, ColourId, usize), Option<u32>>,
    split: HashMap<(VertexSet, ColourId, usize), Option<u32>>,
}

impl<'g> LinkDpTable<'g> {
    pub fn new(g: &'g ColouredGraph) -> Self {
        LinkDpTable { g, f: HashMap::new(), split: HashMap::new() }
    }

    /// Cheapest flood-to-`d` cost over subtrees of at most `i` vertices
    /// containing `w`; `None` when no such subtree exists.
    pub fn f_value(&mut self, w: &VertexSet, d: ColourId, i: usize) -> Result<Option<u32>> {
        if w.is_empty() {
            return Err(Error::invalid("terminal set must be non-empty"));
        }
        if i == 0 {
            return Err(Error::invalid("size budget must be at least one"));
        }
        if d >= self.g.colour_count() {
            return Err(Error::invalid(format!(
                "colour {d} out of range for {} colours",
                self.g.colour_count()
            )));
        }
        let key = (*w, d, i);
        if let Some(&v) = self.f.get(&key) {
            return Ok(v);
        }
        let value = if i == 1 {
            if w.len() >= 2 {
                None
            } else {
                let v = w.min_vertex().expect("non-empty");
                Some(u32::from(self.g.colour(v) != d))
            }
        } else {
            let same = self.split_value(w, d, i)?;
            let mut repaint: Option<u32> = None;
            for d2 in 0..self.g.colour_count() {
                repaint = min_cost(repaint, self.split_value(w, d2, i)?.map(|v| v + 1));
            }
            let shrink = self.f_value(w, d, i - 1)?;
            min_cost(min_cost(same, repaint), shrink)
        };
        self.f.insert(key, value);
        Ok(value)
    }

    /// The two-subtree branch: cheapest partition choice priced recursively.
    pub fn split_value(&mut self, w: &VertexSet, d: ColourId, i: usize) -> Result<Option<u32>> {
        let key = (*w, d, i);
        if let Some(&v) = self.split.get(&key) {
            return Ok(v);
        }
        let mut best: Option<u32> = None;
        for choice in enumerate_poss(self.g, w, i) {
            let a = self.f_value(&choice.first_set, d, choice.first_budget)?;
            let b = self.f_value(&choice.second_set, d, choice.second_budget)?;
            if let (Some(a), Some(b)) = (a, b) {
                best = min_cost(best, Some(a + b));
            }
        }
        self.split.insert(key, best);
        Ok(best)
    }
}

fn min_cost(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Minimum number of moves, played anywhere, creating one monochromatic
/// component of the target colour containing every terminal.
pub fn solve_linking(g: &ColouredGraph, terminals: &VertexSet, target: Target) -> Result<u32> {
    solve_linking_with_limit(g, terminals, target, DEFAULT_K_LIMIT)
}

pub fn solve_linking_with_limit(
    g: &ColouredGraph,
    terminals: &VertexSet,
    target: Target,
    k_limit: usize,
) -> Result<u32> {
    if terminals.is_empty() {
        return Err(Error::invalid("terminal set must be non-empty"));
    }
    if terminals.len() > k_limit {
        return Err(Error::invalid(format!(
            "{} terminals exceed the configured limit of {k_limit}",
            terminals.len()
        )));
    }
    if terminals.iter().any(|v| v >= g.vertex_count()) {
        return Err(Error::invalid("terminal out of range"));
    }
    if let Target::Colour(d) = target {
        if d >= g.colour_count() {
            return Err(Error::invalid(format!(
                "target colour {d} out of range for {} colours",
                g.colour_count()
            )));
        }
    }
    g.ensure_connected()?;

    let (quotient, map) = g.contract_monochromatic();
    let mapped: VertexSet = terminals.iter().map(|v| map[v]).collect();
    let budget = quotient.vertex_count();
    let mut table = LinkDpTable::new(&quotient);

    let colours: Vec<ColourId> = match target {
        Target::Colour(d) => vec![d],
        Target::Any => (0..quotient.colour_count()).collect(),
    };
    let mut best: Option<u32> = None;
    for d in colours {
        best = min_cost(best, table.f_value(&mapped, d, budget)?);
    }
    best.ok_or_else(|| Error::internal("linking cost unreachable on a connected board"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_link;

    fn graph(n: usize, c: usize, edges: &[(usize, usize)], colours: &[usize]) -> ColouredGraph {
        ColouredGraph::new(n, c, edges, colours.to_vec()).unwrap()
    }

    fn path(colours: &[usize], c: usize) -> ColouredGraph {
        let n = colours.len();
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        graph(n, c, &edges, colours)
    }

    fn cycle(colours: &[usize], c: usize) -> ColouredGraph {
        let n = colours.len();
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((0, n - 1));
        graph(n, c, &edges, colours)
    }

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn unit_budget_initialisation() {
        let g = path(&[1, 0, 1], 2);
        let mut table = LinkDpTable::new(&g);
        assert_eq!(table.f_value(&set(&[0, 2]), 1, 1).unwrap(), None);
        assert_eq!(table.f_value(&set(&[0]), 1, 1).unwrap(), Some(0));
        assert_eq!(table.f_value(&set(&[0]), 0, 1).unwrap(), Some(1));
        assert_eq!(table.f_value(&set(&[1]), 0, 5).unwrap(), Some(0));
    }

    #[test]
    fn full_path_is_the_only_subtree() {
        let g = path(&[1, 0, 1], 2);
        let mut table = LinkDpTable::new(&g);
        assert_eq!(table.f_value(&set(&[0, 2]), 1, 3).unwrap(), Some(1));
        // with budget 2 no subtree contains both ends
        assert_eq!(table.f_value(&set(&[0, 2]), 1, 2).unwrap(), None);
    }

    #[test]
    fn poss_expands_the_running_example() {
        let g = path(&[1, 0, 1], 2);
        let choices = enumerate_poss(&g, &set(&[0, 2]), 2);
        assert!(choices.contains(&PartitionChoice {
            first_set: set(&[0]),
            first_budget: 1,
            second_set: set(&[1, 2]),
            second_budget: 1,
            edge: (0, 1),
        }));
        // budget 2 forces the (1,1) composition
        assert!(choices.iter().all(|c| c.first_budget == 1 && c.second_budget == 1));
    }

    #[test]
    fn poss_respects_orientation_constraints() {
        let g = path(&[0, 0], 1);
        // W = {0,1}: the orientation placing x1 = 1 inside W2 = {1} is
        // excluded, so only (0,1) survives for partition ({0},{1})
        let choices = enumerate_poss(&g, &set(&[0, 1]), 2);
        assert_eq!(
            choices,
            vec![PartitionChoice {
                first_set: set(&[0]),
                first_budget: 1,
                second_set: set(&[1]),
                second_budget: 1,
                edge: (0, 1),
            }]
        );
    }

    #[test]
    fn poss_invariants_hold() {
        let g = cycle(&[0, 1, 0, 1, 0], 2);
        let w = set(&[0, 2, 4]);
        for i in 2..=5 {
            for choice in enumerate_poss(&g, &w, i) {
                let (x1, x2) = choice.edge;
                assert!(g.edges().contains(&(x1.min(x2), x1.max(x2))));
                assert!(choice.first_budget + choice.second_budget == i);
                assert!(choice.first_budget > 0 && choice.second_budget > 0);
                assert!(choice.first_set.contains(x1));
                assert!(choice.second_set.contains(x2));
                assert!(choice.first_set.is_disjoint(&choice.second_set));
                assert!(w.is_subset(&choice.first_set.union(&choice.second_set)));
                // only the designated endpoints may sit outside W
                assert!(choice.first_set.difference(&w).is_subset(&set(&[x1])));
                assert!(choice.second_set.difference(&w).is_subset(&set(&[x2])));
            }
        }
    }

    #[test]
    fn solves_the_running_examples() {
        let g = path(&[1, 0, 1], 2);
        assert_eq!(solve_linking(&g, &set(&[0]), Target::Colour(1)).unwrap(), 0);
        assert_eq!(solve_linking(&g, &set(&[0, 2]), Target::Colour(1)).unwrap(), 1);
        // already linked in colour 0
        let h = path(&[0, 0, 1], 2);
        assert_eq!(solve_linking(&h, &set(&[0, 1]), Target::Colour(0)).unwrap(), 0);
    }

    #[test]
    fn matches_oracle_on_small_boards() {
        let boards = [
            cycle(&[0, 1, 0, 1], 2),
            cycle(&[0, 1, 2, 0, 1], 3),
            graph(5, 3, &[(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)], &[0, 1, 2, 0, 1]),
            path(&[0, 0, 1, 2, 1], 3),
        ];
        for g in &boards {
            let n = g.vertex_count();
            for a in 0..n {
                for b in (a + 1)..n {
                    let terminals = set(&[a, b]);
                    for d in 0..g.colour_count() {
                        let want = oracle_link(g, &terminals, Target::Colour(d)).unwrap();
                        let got = solve_linking(g, &terminals, Target::Colour(d)).unwrap();
                        assert_eq!(got, want, "terminals {{{a},{b}}} colour {d}");
                    }
                    let want = oracle_link(g, &terminals, Target::Any).unwrap();
                    let got = solve_linking(g, &terminals, Target::Any).unwrap();
                    assert_eq!(got, want, "terminals {{{a},{b}}} any colour");
                }
            }
        }
    }

    #[test]
    fn budget_monotone_and_repaint_bounded() {
        let g = cycle(&[0, 1, 2, 0, 1], 3);
        let mut table = LinkDpTable::new(&g);
        let w = set(&[0, 3]);
        for d in 0..3 {
            for i in 1..5 {
                let now = table.f_value(&w, d, i).unwrap();
                let next = table.f_value(&w, d, i + 1).unwrap();
                match (now, next) {
                    (Some(a), Some(b)) => assert!(b <= a),
                    (Some(_), None) => panic!("value became unreachable as the budget grew"),
                    _ => {}
                }
            }
        }
        // repaint branch: f(W,d,i) ≤ 1 + split(W,d2,i) for every d2
        for d in 0..3 {
            let f = table.f_value(&w, d, 5).unwrap();
            for d2 in 0..3 {
                if let Some(s) = table.split_value(&w, d2, 5).unwrap() {
                    assert!(f.expect("finite on connected board") <= 1 + s);
                }
            }
        }
    }

    #[test]
    fn finite_on_connected_boards() {
        let g = cycle(&[0, 1, 2, 0, 1, 2], 3);
        for d in 0..3 {
            assert!(solve_linking(&g, &set(&[0, 3]), Target::Colour(d)).is_ok());
        }
    }

    #[test]
    fn terminal_count_guard() {
        let g = cycle(&[0, 1, 0, 1, 0, 1], 2);
        let five = set(&[0, 1, 2, 3, 4]);
        assert!(matches!(
            solve_linking(&g, &five, Target::Any),
            Err(Error::InvalidInput(_))
        ));
        assert!(solve_linking_with_limit(&g, &five, Target::Any, 5).is_ok());
        assert!(matches!(
            solve_linking(&g, &VertexSet::EMPTY, Target::Any),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn contraction_maps_terminals_through() {
        // vertices 0,1 share a component, so the contracted terminal set
        // shrinks to two quotient vertices
        let g = path(&[0, 0, 1, 2], 3);
        assert_eq!(solve_linking(&g, &set(&[0, 1]), Target::Colour(0)).unwrap(), 0);
        assert_eq!(
            solve_linking(&g, &set(&[0, 3]), Target::Any).unwrap(),
            oracle_link(&g, &set(&[0, 3]), Target::Any).unwrap()
        );
    }
}
