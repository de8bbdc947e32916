//! Free-play solver over the connected-subgraph table.
//!
//! After contracting monochromatic components, a table indexed by
//! (connected subgraph, colour) is filled bottom-up by size. A singleton
//! costs 0 in its own colour and 1 in any other. A larger subgraph either
//! decomposes into a split whose halves are flooded to the goal colour
//! independently, or is first flooded to some colour in both halves and then
//! recoloured with one extra move:
//!
//!   value(H, d) = min( min over splits (A,B) of value(A,d) + value(B,d),
//!                      1 + min over splits and d' of value(A,d') + value(B,d') )
//!
//! Every split half is strictly smaller than H, so filling by size always
//! finds both operands already computed.

use std::collections::HashMap;

use crate::enumeration::SubgraphIndex;
use crate::error::{Error, Result};
use crate::graph::{ColourId, ColouredGraph};
use crate::vertex_set::VertexSet;

/// Exact per-colour flood numbers of a connected board.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeSolveResult {
    /// `per_colour[d]` = minimum moves flooding the board with colour `d`.
    pub per_colour: Vec<u32>,
    /// Minimum over all colours.
    pub overall: u32,
    /// Number of connected subgraphs of the contracted board (the table
    /// dimension, reported for benchmarking).
    pub subgraph_count: usize,
}

/// The filled (subgraph, colour) table.
pub struct FreeDpTable {
    index: SubgraphIndex,
    values: HashMap<VertexSet, Vec<u32>>,
    colour_count: usize,
}

impl FreeDpTable {
    /// Fills the table for `g` as given (no contraction). Exactness of the
    /// recursion assumes a properly coloured board; `solve_free` contracts
    /// first and should be the normal entry point.
    pub fn build(g: &ColouredGraph) -> Result<Self> {
        g.ensure_connected()?;
        let n = g.vertex_count();
        let c = g.colour_count();
        let index = SubgraphIndex::build(g, n)?;
        let mut values: HashMap<VertexSet, Vec<u32>> = HashMap::with_capacity(index.len());

        for set in index.sets_of_size(1) {
            let v = set.min_vertex().expect("singleton");
            let own = g.colour(v);
            let row = (0..c).map(|d| u32::from(d != own)).collect();
            values.insert(*set, row);
        }

        for size in 2..=n {
            for h in index.sets_of_size(size) {
                let min = h.min_vertex().expect("non-empty");
                // best_same[d]: cheapest split with both halves flooded to d
                let mut best_same = vec![u32::MAX; c];
                let mut found_split = false;
                for a in index.sets_with_min(min) {
                    if a.len() >= size {
                        break;
                    }
                    if !a.is_subset(h) {
                        continue;
                    }
                    let b = h.difference(a);
                    if !g.is_connected_induced(&b) {
                        continue;
                    }
                    found_split = true;
                    let row_a = &values[a];
                    let row_b = &values[&b];
                    for d in 0..c {
                        let sum = row_a[d] + row_b[d];
                        if sum < best_same[d] {
                            best_same[d] = sum;
                        }
                    }
                }
                if !found_split {
                    return Err(Error::internal(format!(
                        "connected subgraph {h:?} admits no split"
                    )));
                }
                let cheapest_any = *best_same.iter().min().expect("colour count >= 1");
                let row = best_same
                    .iter()
                    .map(|&same| same.min(1 + cheapest_any))
                    .collect();
                values.insert(*h, row);
            }
        }

        Ok(FreeDpTable { index, values, colour_count: c })
    }

    /// Table lookup; the table is complete by construction, so a missing
    /// entry is an internal error.
    pub fn value(&self, h: &VertexSet, d: ColourId) -> Result<u32> {
        if d >= self.colour_count {
            return Err(Error::invalid(format!(
                "colour {d} out of range for {} colours",
                self.colour_count
            )));
        }
        self.values
            .get(h)
            .map(|row| row[d])
            .ok_or_else(|| Error::internal(format!("no table entry for {h:?}")))
    }

    pub fn index(&self) -> &SubgraphIndex {
        &self.index
    }

    pub fn subgraph_count(&self) -> usize {
        self.index.len()
    }
}

/// Exact flood numbers of `g` for every colour, via the subgraph table of
/// the contracted board.
pub fn solve_free(g: &ColouredGraph) -> Result<FreeSolveResult> {
    g.ensure_connected()?;
    let (quotient, _) = g.contract_monochromatic();
    let table = FreeDpTable::build(&quotient)?;
    let full = quotient.all_vertices();
    let per_colour: Vec<u32> = (0..quotient.colour_count())
        .map(|d| table.value(&full, d))
        .collect::<Result<_>>()?;
    let overall = *per_colour.iter().min().expect("colour count >= 1");
    Ok(FreeSolveResult {
        per_colour,
        overall,
        subgraph_count: table.subgraph_count(),
    })
}
