//! Small-graph corpora for verification: every connected graph up to
//! isomorphism for tiny orders, plus seeded random connected instances.

use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{ColourId, ColouredGraph, Vertex};

/// Largest order for which the exhaustive isomorphism-class corpus is
/// available (edge masks fit in a word and n! stays tiny).
pub const MAX_CLASS_ORDER: usize = 6;

/// Edge lists of all connected graphs on `n` vertices, one per isomorphism
/// class, in a fixed deterministic order.
pub fn connected_graph_classes(n: usize) -> &'static [Vec<(Vertex, Vertex)>] {
    assert!(
        (1..=MAX_CLASS_ORDER).contains(&n),
        "isomorphism classes are enumerated for 1..={MAX_CLASS_ORDER}"
    );
    static CACHE: [OnceLock<Vec<Vec<(Vertex, Vertex)>>>; MAX_CLASS_ORDER + 1] =
        [const { OnceLock::new() }; MAX_CLASS_ORDER + 1];
    CACHE[n].get_or_init(|| enumerate_classes(n))
}

fn enumerate_classes(n: usize) -> Vec<Vec<(Vertex, Vertex)>> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let bits = pairs.len();
    let mut pair_index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        pair_index[u][v] = i;
        pair_index[v][u] = i;
    }

    // bit remap table per permutation
    let mut remaps: Vec<Vec<usize>> = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    permutations(&mut perm, 0, &mut |p| {
        let remap = pairs.iter().map(|&(u, v)| pair_index[p[u]][p[v]]).collect();
        remaps.push(remap);
    });

    let mut out = Vec::new();
    for mask in 0u32..(1 << bits) {
        if !mask_connected(mask, &pairs, n) {
            continue;
        }
        let canonical = remaps
            .iter()
            .map(|remap| {
                let mut m = 0u32;
                for b in 0..bits {
                    if mask & (1 << b) != 0 {
                        m |= 1 << remap[b];
                    }
                }
                m
            })
            .min()
            .expect("at least the identity permutation");
        if canonical == mask {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << *b) != 0)
                .map(|(_, &e)| e)
                .collect();
            out.push(edges);
        }
    }
    out
}

fn permutations(items: &mut Vec<usize>, from: usize, visit: &mut impl FnMut(&[usize])) {
    if from == items.len() {
        visit(items);
        return;
    }
    for i in from..items.len() {
        items.swap(from, i);
        permutations(items, from + 1, visit);
        items.swap(from, i);
    }
}

fn mask_connected(mask: u32, pairs: &[(Vertex, Vertex)], n: usize) -> bool {
    let mut reach = 1u32;
    loop {
        let mut grown = reach;
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask & (1 << b) != 0 {
                if grown & (1 << u) != 0 {
                    grown |= 1 << v;
                }
                if grown & (1 << v) != 0 {
                    grown |= 1 << u;
                }
            }
        }
        if grown == reach {
            break;
        }
        reach = grown;
    }
    reach.count_ones() as usize == n
}

/// Uniform colouring with colours drawn from `0..colour_count`.
pub fn random_colours(rng: &mut ChaCha8Rng, n: usize, colour_count: usize) -> Vec<ColourId> {
    (0..n).map(|_| rng.random_range(0..colour_count)).collect()
}

/// Uniform colouring that uses every colour in `0..colour_count` at least
/// once (requires `colour_count <= n`).
pub fn random_surjective_colours(rng: &mut ChaCha8Rng, n: usize, colour_count: usize) -> Vec<ColourId> {
    assert!(colour_count <= n);
    loop {
        let colours = random_colours(rng, n, colour_count);
        let mut used = vec![false; colour_count];
        for &c in &colours {
            used[c] = true;
        }
        if used.into_iter().all(|u| u) {
            return colours;
        }
    }
}

/// Random connected edge set: a random spanning tree plus density-`extra`
/// independent chords.
pub fn random_connected_edges(rng: &mut ChaCha8Rng, n: usize, extra: f64) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.random_range(0..v);
        edges.push((parent, v));
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if !edges.contains(&(u, v)) && rng.random_bool(extra) {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// A seeded random connected board with `n` vertices and colours from
/// `0..colour_count`.
pub fn random_board(rng: &mut ChaCha8Rng, n: usize, colour_count: usize) -> Result<ColouredGraph> {
    let edges = random_connected_edges(rng, n, 0.3);
    let colours = random_colours(rng, n, colour_count);
    ColouredGraph::new(n, colour_count, &edges, colours)
}

/// Convenience seeded stream of random boards with orders in `2..=max_n`.
pub fn random_boards(seed: u64, count: usize, max_n: usize, colour_count: usize) -> Result<Vec<ColouredGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(2..=max_n);
            random_board(&mut rng, n, colour_count)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_the_known_sequence() {
        // connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112
        let want = [1usize, 1, 2, 6, 21, 112];
        for (i, &count) in want.iter().enumerate() {
            assert_eq!(connected_graph_classes(i + 1).len(), count, "order {}", i + 1);
        }
    }

    #[test]
    fn classes_are_connected_and_valid() {
        for n in 1..=5 {
            for edges in connected_graph_classes(n) {
                let g = ColouredGraph::new(n, 1, edges, vec![0; n]).unwrap();
                assert!(g.is_connected());
            }
        }
    }

    #[test]
    fn random_boards_are_connected_and_reproducible() {
        let a = random_boards(9, 20, 7, 3).unwrap();
        let b = random_boards(9, 20, 7, 3).unwrap();
        assert_eq!(a, b);
        for g in &a {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn surjective_colourings_use_every_colour() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let colours = random_surjective_colours(&mut rng, 6, 3);
            for c in 0..3 {
                assert!(colours.contains(&c));
            }
        }
    }
}
