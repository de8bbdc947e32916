//! End-to-end verification suites.
//!
//! Each suite replays one family of checks: the spanning-tree equality, the
//! decomposition corollaries, or a solver against the brute-force oracles.
//! Corpora are the exhaustive isomorphism classes for tiny orders plus
//! seeded random boards, so runs are reproducible.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::corpus;
use crate::enumeration::enumerate_steiner_subtrees;
use crate::error::Result;
use crate::graph::{ColouredGraph, Move, Target, Vertex};
use crate::oracle::{min_over_spanning_trees, oracle_fixed, oracle_free, oracle_link};
use crate::solver_fixed::solve_fixed;
use crate::solver_free::solve_free;
use crate::solver_linking::{solve_linking_with_limit, DEFAULT_K_LIMIT};
use crate::vertex_set::VertexSet;

/// Shared suite parameters.
#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// Largest board order; the exhaustive part is capped at
    /// `corpus::MAX_CLASS_ORDER`, random sampling uses the full range.
    pub max_n: usize,
    pub colours: usize,
    pub seed: u64,
    /// Number of random sampled configurations (0 disables the random part).
    pub samples: usize,
}

/// Outcome of one suite run.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    fn new(suite: &'static str) -> Self {
        VerifyReport { suite, checks: 0, failures: Vec::new() }
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

fn colourings_per_class() -> usize {
    3
}

/// Exhaustive tiny boards plus random boards, all connected.
fn corpus_boards(opts: &VerifyOptions) -> Result<Vec<ColouredGraph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut boards = Vec::new();
    for n in 1..=opts.max_n.min(corpus::MAX_CLASS_ORDER) {
        for edges in corpus::connected_graph_classes(n) {
            for _ in 0..colourings_per_class() {
                let colours = corpus::random_colours(&mut rng, n, opts.colours);
                boards.push(ColouredGraph::new(n, opts.colours, edges, colours)?);
            }
        }
    }
    for _ in 0..opts.samples {
        let n = rng.random_range(2..=opts.max_n.max(2));
        boards.push(corpus::random_board(&mut rng, n, opts.colours)?);
    }
    Ok(boards)
}

/// Flood number of the whole graph equals the minimum over its spanning
/// trees, for every target colour; witnesses replay; changing the final
/// colour costs at most one extra move.
pub fn spanning_tree_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("spanning-tree");
    for (gi, g) in corpus_boards(opts)?.iter().enumerate() {
        let any = oracle_free(g, Target::Any)?;
        report.check(replay_floods(g, &any.witness, None), || {
            format!("board {gi}: witness for the best colour does not flood")
        });
        for d in 0..g.colour_count() {
            let direct = oracle_free(g, Target::Colour(d))?;
            let via_trees = min_over_spanning_trees(g, d)?;
            report.check(direct.moves == via_trees, || {
                format!(
                    "board {gi} colour {d}: flood number {} != spanning-tree minimum {via_trees}",
                    direct.moves
                )
            });
            report.check(replay_floods(g, &direct.witness, Some(d)), || {
                format!("board {gi} colour {d}: witness does not flood")
            });
            report.check(direct.moves <= any.moves + 1, || {
                format!(
                    "board {gi} colour {d}: {} moves exceeds best-any {} plus one",
                    direct.moves, any.moves
                )
            });
        }
    }
    Ok(report)
}

fn replay_floods(g: &ColouredGraph, witness: &[Move], colour: Option<usize>) -> bool {
    let mut col = g.colouring().clone();
    for &m in witness {
        match g.apply_move(&col, m) {
            Ok(next) => col = next,
            Err(_) => return false,
        }
    }
    match (col.monochromatic_colour(), colour) {
        (Some(got), Some(want)) => got == want,
        (Some(_), None) => true,
        (None, _) => false,
    }
}

/// The decomposition corollaries on seeded random configurations.
pub fn corollary_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("corollaries");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for sample in 0..opts.samples.max(1) {
        let n = rng.random_range(2..=opts.max_n.max(2));
        let g = corpus::random_board(&mut rng, n, opts.colours)?;

        check_tree_splitting(&mut report, &mut rng, sample, n, opts.colours)?;
        check_disjoint_cover(&mut report, &mut rng, sample, &g)?;
        check_overlapping_cover(&mut report, &mut rng, sample, &g)?;
        check_chord_monotone(&mut report, &mut rng, sample, &g)?;
        check_subgraph_link(&mut report, &mut rng, sample, &g)?;
        check_steiner_equality(&mut report, &mut rng, sample, &g)?;
    }
    Ok(report)
}

/// Flooding a tree costs at most the sum over the halves of any split.
fn check_tree_splitting(
    report: &mut VerifyReport,
    rng: &mut ChaCha8Rng,
    sample: usize,
    n: usize,
    colours: usize,
) -> Result<()> {
    let tree_edges: Vec<(Vertex, Vertex)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    let colour_list = corpus::random_colours(rng, n, colours);
    let tree = ColouredGraph::new(n, colours, &tree_edges, colour_list)?;
    if n < 2 {
        return Ok(());
    }
    let cut = rng.random_range(0..tree_edges.len());
    let (a, b) = split_by_tree_edge(&tree, &tree_edges, cut);
    let (ga, _) = tree.induced(&a)?;
    let (gb, _) = tree.induced(&b)?;
    for d in 0..colours {
        let whole = oracle_free(&tree, Target::Colour(d))?.moves;
        let parts = oracle_free(&ga, Target::Colour(d))?.moves + oracle_free(&gb, Target::Colour(d))?.moves;
        report.check(whole <= parts, || {
            format!("sample {sample} colour {d}: tree split bound violated ({whole} > {parts})")
        });
    }
    Ok(())
}

fn split_by_tree_edge(
    g: &ColouredGraph,
    tree_edges: &[(Vertex, Vertex)],
    cut: usize,
) -> (VertexSet, VertexSet) {
    let (u, v) = tree_edges[cut];
    let mut side = VertexSet::singleton(u);
    let mut stack = vec![u];
    while let Some(x) = stack.pop() {
        for (i, &(a, b)) in tree_edges.iter().enumerate() {
            if i == cut {
                continue;
            }
            for (p, q) in [(a, b), (b, a)] {
                if p == x && !side.contains(q) {
                    side.insert(q);
                    stack.push(q);
                }
            }
        }
    }
    let other = g.all_vertices().difference(&side);
    debug_assert!(other.contains(v));
    (side, other)
}

/// A disjoint connected cover of the whole graph bounds its flood number.
fn check_disjoint_cover(
    report: &mut VerifyReport,
    rng: &mut ChaCha8Rng,
    sample: usize,
    g: &ColouredGraph,
) -> Result<()> {
    let Some((a, b)) = random_disjoint_cover(rng, g) else {
        return Ok(());
    };
    let (ga, _) = g.induced(&a)?;
    let (gb, _) = g.induced(&b)?;
    for d in 0..g.colour_count() {
        let whole = oracle_free(g, Target::Colour(d))?.moves;
        let parts = oracle_free(&ga, Target::Colour(d))?.moves + oracle_free(&gb, Target::Colour(d))?.moves;
        report.check(whole <= parts, || {
            format!("sample {sample} colour {d}: disjoint cover bound violated ({whole} > {parts})")
        });
    }
    Ok(())
}

/// As above with overlap allowed.
fn check_overlapping_cover(
    report: &mut VerifyReport,
    rng: &mut ChaCha8Rng,
    sample: usize,
    g: &ColouredGraph,
) -> Result<()> {
    let Some((a, base_b)) = random_disjoint_cover(rng, g) else {
        return Ok(());
    };
    // pad the second half with adjacent vertices from the first
    let mut b = base_b;
    for _ in 0..rng.random_range(0..=a.len()) {
        let boundary: Vec<Vertex> = a
            .iter()
            .filter(|&v| !b.contains(v) && g.neighbours(v).iter().any(|&w| b.contains(w)))
            .collect();
        if boundary.is_empty() {
            break;
        }
        b.insert(boundary[rng.random_range(0..boundary.len())]);
    }
    let (ga, _) = g.induced(&a)?;
    let (gb, _) = g.induced(&b)?;
    debug_assert!(g.is_connected_induced(&b));
    for d in 0..g.colour_count() {
        let whole = oracle_free(g, Target::Colour(d))?.moves;
        let parts = oracle_free(&ga, Target::Colour(d))?.moves + oracle_free(&gb, Target::Colour(d))?.moves;
        report.check(whole <= parts, || {
            format!("sample {sample} colour {d}: overlapping cover bound violated ({whole} > {parts})")
        });
    }
    Ok(())
}

fn random_disjoint_cover(rng: &mut ChaCha8Rng, g: &ColouredGraph) -> Option<(VertexSet, VertexSet)> {
    let n = g.vertex_count();
    if n < 2 {
        return None;
    }
    // random spanning tree by randomised edge insertion, then cut one edge
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    shuffle(rng, &mut order);
    let mut dsu: Vec<usize> = (0..n).collect();
    fn find(dsu: &mut Vec<usize>, v: usize) -> usize {
        if dsu[v] != v {
            let root = find(dsu, dsu[v]);
            dsu[v] = root;
        }
        dsu[v]
    }
    let mut tree = Vec::with_capacity(n - 1);
    for i in order {
        let (u, v) = g.edges()[i];
        let (ru, rv) = (find(&mut dsu, u), find(&mut dsu, v));
        if ru != rv {
            dsu[ru] = rv;
            tree.push((u, v));
        }
    }
    let cut = rng.random_range(0..tree.len());
    Some(split_by_tree_edge(g, &tree, cut))
}

fn shuffle(rng: &mut ChaCha8Rng, items: &mut [usize]) {
    for i in (1..items.len()).rev() {
        let j = rng.random_range(0..=i);
        items.swap(i, j);
    }
}

/// Adding a chord never increases any flood number.
fn check_chord_monotone(
    report: &mut VerifyReport,
    rng: &mut ChaCha8Rng,
    sample: usize,
    g: &ColouredGraph,
) -> Result<()> {
    let n = g.vertex_count();
    let non_edges: Vec<(Vertex, Vertex)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|e| !g.edges().contains(e))
        .collect();
    if non_edges.is_empty() {
        return Ok(());
    }
    let chord = non_edges[rng.random_range(0..non_edges.len())];
    let mut edges = g.edges().to_vec();
    edges.push(chord);
    let bigger = g.with_edges(&edges)?;
    for d in 0..g.colour_count() {
        let before = oracle_free(g, Target::Colour(d))?.moves;
        let after = oracle_free(&bigger, Target::Colour(d))?.moves;
        report.check(after <= before, || {
            format!("sample {sample} colour {d}: adding chord {chord:?} raised {before} to {after}")
        });
    }
    Ok(())
}

/// Linking the vertex set of a connected subgraph costs at most flooding
/// that subgraph in isolation.
fn check_subgraph_link(
    report: &mut VerifyReport,
    rng: &mut ChaCha8Rng,
    sample: usize,
    g: &ColouredGraph,
) -> Result<()> {
    let h = random_connected_set(rng, g);
    let (gh, _) = g.induced(&h)?;
    for d in 0..g.colour_count() {
        let link = oracle_link(g, &h, Target::Colour(d))?;
        let isolated = oracle_free(&gh, Target::Colour(d))?.moves;
        report.check(link <= isolated, || {
            format!("sample {sample} colour {d}: linking {h:?} costs {link} > isolated flood {isolated}")
        });
    }
    Ok(())
}

fn random_connected_set(rng: &mut ChaCha8Rng, g: &ColouredGraph) -> VertexSet {
    let n = g.vertex_count();
    let want = rng.random_range(1..=n);
    let start = rng.random_range(0..n);
    let mut set = VertexSet::singleton(start);
    while set.len() < want {
        let boundary: Vec<Vertex> = (0..n)
            .filter(|&v| !set.contains(v) && g.neighbours(v).iter().any(|&w| set.contains(w)))
            .collect();
        if boundary.is_empty() {
            break;
        }
        set.insert(boundary[rng.random_range(0..boundary.len())]);
    }
    set
}

/// Linking cost equals the cheapest flood over Steiner subtrees.
fn check_steiner_equality(
    report: &mut VerifyReport,
    rng: &mut ChaCha8Rng,
    sample: usize,
    g: &ColouredGraph,
) -> Result<()> {
    let n = g.vertex_count();
    let size = rng.random_range(1..=3.min(n));
    let mut terminals = VertexSet::EMPTY;
    while terminals.len() < size {
        terminals.insert(rng.random_range(0..n));
    }
    let subtrees = enumerate_steiner_subtrees(g, &terminals, n)?;
    for d in 0..g.colour_count() {
        let link = oracle_link(g, &terminals, Target::Colour(d))?;
        let mut best: Option<u32> = None;
        for subtree in &subtrees {
            let tree = subtree.to_graph(g)?;
            let cost = oracle_free(&tree, Target::Colour(d))?.moves;
            best = Some(best.map_or(cost, |b: u32| b.min(cost)));
        }
        report.check(best == Some(link), || {
            format!(
                "sample {sample} colour {d}: linking {terminals:?} costs {link}, subtree minimum {best:?}"
            )
        });
    }
    Ok(())
}

/// Free-play solver against the oracle, the spanning-tree route, and its own
/// structural invariants.
pub fn solver_free_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("solver-free");
    for (gi, g) in corpus_boards(opts)?.iter().enumerate() {
        let res = solve_free(g)?;
        for d in 0..g.colour_count() {
            let want = oracle_free(g, Target::Colour(d))?.moves;
            report.check(res.per_colour[d] == want, || {
                format!("board {gi} colour {d}: solver {} != oracle {want}", res.per_colour[d])
            });
            if g.vertex_count() <= corpus::MAX_CLASS_ORDER {
                let via_trees = min_over_spanning_trees(g, d)?;
                report.check(res.per_colour[d] == via_trees, || {
                    format!(
                        "board {gi} colour {d}: solver {} != spanning-tree minimum {via_trees}",
                        res.per_colour[d]
                    )
                });
            }
            report.check(res.per_colour[d] <= res.overall + 1, || {
                format!("board {gi} colour {d}: per-colour value exceeds overall plus one")
            });
        }
        report.check(res.overall == *res.per_colour.iter().min().expect("colours"), || {
            format!("board {gi}: overall is not the per-colour minimum")
        });
        let (quotient, _) = g.contract_monochromatic();
        let contracted = solve_free(&quotient)?;
        report.check(contracted.per_colour == res.per_colour, || {
            format!("board {gi}: contraction changed the per-colour values")
        });
    }
    Ok(report)
}

/// Fixed-root solver against the oracle for every root, with witness replay.
pub fn solver_fixed_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("solver-fixed");
    for (gi, g) in corpus_boards(opts)?.iter().enumerate() {
        for root in 0..g.vertex_count() {
            let res = solve_fixed(g, root)?;
            for d in 0..g.colour_count() {
                let want = oracle_fixed(g, root, Target::Colour(d))?.moves;
                report.check(res.per_colour[d] == Some(want), || {
                    format!(
                        "board {gi} root {root} colour {d}: solver {:?} != oracle {want}",
                        res.per_colour[d]
                    )
                });
            }
            let want_any = oracle_fixed(g, root, Target::Any)?.moves;
            report.check(res.overall == want_any, || {
                format!("board {gi} root {root}: solver overall {} != oracle {want_any}", res.overall)
            });

            // replay: regions can only grow, and the final board is flooded
            // in the overall-optimal colour
            let mut col = g.colouring().clone();
            let mut region = g.monochromatic_component(&col, root)?;
            let mut ok = res.witness.len() == res.overall as usize;
            for &d in &res.witness {
                col = g.apply_move(&col, Move::new(root, d))?;
                let next = g.monochromatic_component(&col, root)?;
                ok &= region.is_subset(&next);
                region = next;
            }
            ok &= col.monochromatic_colour() == Some(res.overall_colour);
            report.check(ok, || format!("board {gi} root {root}: witness replay failed"));
        }
    }
    Ok(report)
}

/// Linking solver against the oracle: every terminal set of size ≤ 3 on the
/// exhaustive corpus, plus random size-4 terminal sets on sampled boards.
pub fn solver_link_suite(opts: &VerifyOptions) -> Result<VerifyReport> {
    let mut report = VerifyReport::new("solver-link");
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    for n in 1..=opts.max_n.min(corpus::MAX_CLASS_ORDER) {
        for edges in corpus::connected_graph_classes(n) {
            for _ in 0..colourings_per_class() {
                let colours = corpus::random_colours(&mut rng, n, opts.colours);
                let g = ColouredGraph::new(n, opts.colours, edges, colours)?;
                for terminals in terminal_sets_up_to(n, 3) {
                    check_link_pair(&mut report, &g, &terminals)?;
                }
            }
        }
    }

    for _ in 0..opts.samples {
        let n = rng.random_range(4..=opts.max_n.max(4));
        let g = corpus::random_board(&mut rng, n, opts.colours)?;
        let mut terminals = VertexSet::EMPTY;
        while terminals.len() < 4 {
            terminals.insert(rng.random_range(0..n));
        }
        check_link_pair(&mut report, &g, &terminals)?;
    }
    Ok(report)
}

fn terminal_sets_up_to(n: usize, max_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        if (mask.count_ones() as usize) <= max_size {
            out.push((0..n).filter(|&v| mask & (1 << v) != 0).collect());
        }
    }
    out
}

fn check_link_pair(report: &mut VerifyReport, g: &ColouredGraph, terminals: &VertexSet) -> Result<()> {
    let mut targets: Vec<Target> = (0..g.colour_count()).map(Target::Colour).collect();
    targets.push(Target::Any);
    for target in targets {
        let want = oracle_link(g, terminals, target)?;
        let got = solve_linking_with_limit(g, terminals, target, DEFAULT_K_LIMIT)?;
        report.check(got == want, || {
            format!("terminals {terminals:?} target {target:?}: solver {got} != oracle {want}")
        });
    }
    Ok(())
}
