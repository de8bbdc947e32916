//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines for passing criteria too.

use std::time::Instant;

use floodgraph::corpus;
use floodgraph::enumeration::{enumerate_connected_subgraphs, spanning_tree_count, spanning_trees};
use floodgraph::generate::{self, ColourChoice};
use floodgraph::verify::{
    corollary_suite, solver_fixed_suite, solver_free_suite, solver_link_suite,
    spanning_tree_suite, VerifyOptions, VerifyReport,
};
use floodgraph::{solve_fixed, solve_free, ColouredGraph};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn conclude(number: usize, name: &str, failures: &[String], checks: usize) {
    if failures.is_empty() {
        println!("acceptance {number} ({name}): PASS - {checks} checks");
    } else {
        println!("acceptance {number} ({name}): FAIL - {} violation(s)", failures.len());
        for f in failures.iter().take(10) {
            println!("  {f}");
        }
        panic!("acceptance {number} ({name}) failed");
    }
}

fn conclude_report(number: usize, name: &str, report: &VerifyReport) {
    conclude(number, name, &report.failures, report.checks);
}

#[test]
fn acceptance_1_spanning_tree_equality() {
    // every connected graph with n <= 6 up to isomorphism, 3 seeded random
    // colourings from a 3-colour palette, every target colour
    let opts = VerifyOptions { max_n: 6, colours: 3, seed: 101, samples: 0 };
    let report = spanning_tree_suite(&opts).expect("suite runs");
    conclude_report(1, "flood number equals spanning-tree minimum", &report);
}

#[test]
fn acceptance_2_free_solver_matches_oracle() {
    // exhaustive corpus plus 200 seeded random boards with n <= 7
    let opts = VerifyOptions { max_n: 7, colours: 3, seed: 102, samples: 200 };
    let report = solver_free_suite(&opts).expect("suite runs");
    conclude_report(2, "free solver equals oracle per colour", &report);
}

#[test]
fn acceptance_3_fixed_solver_matches_oracle() {
    let opts = VerifyOptions { max_n: 7, colours: 3, seed: 103, samples: 200 };
    let report = solver_fixed_suite(&opts).expect("suite runs");
    conclude_report(3, "fixed solver equals oracle for every root", &report);
}

#[test]
fn acceptance_4_linking_solver_matches_oracle() {
    // all terminal sets of size <= 3 on the n <= 6 corpus, plus 50 random
    // size-4 terminal cases
    let opts = VerifyOptions { max_n: 6, colours: 3, seed: 104, samples: 50 };
    let report = solver_link_suite(&opts).expect("suite runs");
    conclude_report(4, "linking solver equals oracle", &report);
}

#[test]
fn acceptance_5_complete_graphs_need_colours_minus_one() {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut failures = Vec::new();
    let mut checks = 0;
    for n in 1..=6usize {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        for c in 1..=n {
            for _ in 0..3 {
                let colours = corpus::random_surjective_colours(&mut rng, n, c);
                let g = ColouredGraph::new(n, c, &edges, colours).expect("valid board");
                let want = (c - 1) as u32;

                let free = solve_free(&g).expect("solver runs");
                checks += 1;
                if free.overall != want {
                    failures.push(format!("K{n} with {c} colours: free overall {}", free.overall));
                }
                for root in 0..n {
                    let fixed = solve_fixed(&g, root).expect("solver runs");
                    checks += 1;
                    if fixed.overall != want {
                        failures.push(format!(
                            "K{n} with {c} colours root {root}: fixed overall {}",
                            fixed.overall
                        ));
                    }
                }
            }
        }
    }
    conclude(5, "complete graphs flood in colours-minus-one", &failures, checks);
}

#[test]
fn acceptance_6_decomposition_corollaries() {
    let opts = VerifyOptions { max_n: 7, colours: 3, seed: 106, samples: 500 };
    let report = corollary_suite(&opts).expect("suite runs");
    conclude_report(6, "decomposition corollaries", &report);
}

#[test]
fn acceptance_7_count_formulas() {
    let mut failures = Vec::new();
    let mut checks = 0;
    let mut expect = |ok: bool, msg: String| {
        checks += 1;
        if !ok {
            failures.push(msg);
        }
    };

    for n in 1..=8usize {
        let p = generate::path(n, ColourChoice::random(2), 0).unwrap();
        let count = enumerate_connected_subgraphs(&p, n).unwrap().len();
        expect(count == n * (n + 1) / 2, format!("P{n}: {count} subgraphs"));

        if n >= 3 {
            let c = generate::cycle(n, ColourChoice::random(2), 0).unwrap();
            let count = enumerate_connected_subgraphs(&c, n).unwrap().len();
            expect(count == n * (n - 1) + 1, format!("C{n}: {count} subgraphs"));

            let trees = spanning_trees(&c).unwrap().len();
            expect(trees == n, format!("C{n}: {trees} spanning trees"));
        }
    }
    for n in 1..=10usize {
        let k = generate::complete(n, ColourChoice::random(2), 0).unwrap();
        let count = enumerate_connected_subgraphs(&k, n).unwrap().len();
        expect(count == (1usize << n) - 1, format!("K{n}: {count} subgraphs"));
    }
    let k4 = generate::complete(4, ColourChoice::random(2), 0).unwrap();
    let listed = spanning_trees(&k4).unwrap().len();
    expect(listed == 16, format!("K4: {listed} spanning trees listed"));
    expect(spanning_tree_count(&k4) == 16, "K4: matrix-tree count".into());

    conclude(7, "subgraph and spanning-tree count formulas", &failures, checks);
}

#[test]
fn acceptance_8_performance_budgets() {
    let mut failures = Vec::new();

    // properly coloured cycles keep the full table: contraction removes
    // nothing, so these runs are the worst case for the stated sizes
    let proper = |n: usize| ColourChoice::Explicit {
        colour_count: 4,
        colours: (0..n).map(|i| i % 4).collect(),
    };

    let c50 = generate::cycle(50, proper(50), 8).unwrap();
    let started = Instant::now();
    let free = solve_free(&c50).expect("solver runs");
    let free_elapsed = started.elapsed();
    if free_elapsed.as_secs_f64() >= 10.0 {
        failures.push(format!("free solve of C50 took {free_elapsed:?} (budget 10 s)"));
    }
    assert_eq!(free.subgraph_count, 50 * 49 + 1);

    let c200 = generate::cycle(200, proper(200), 9).unwrap();
    let started = Instant::now();
    let fixed = solve_fixed(&c200, 0).expect("solver runs");
    let fixed_elapsed = started.elapsed();
    if fixed_elapsed.as_secs_f64() >= 30.0 {
        failures.push(format!("fixed solve of C200 took {fixed_elapsed:?} (budget 30 s)"));
    }
    assert!(fixed.per_colour.iter().all(Option::is_some));

    println!(
        "  free C50 (N={}) in {:.2?}; fixed C200 (|S|={}) in {:.2?}",
        free.subgraph_count, free_elapsed, fixed.state_count, fixed_elapsed
    );
    conclude(8, "performance budgets", &failures, 2);
}
