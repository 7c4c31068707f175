//! Acceptance suite: end-to-end checks of the decomposition pipeline on the
//! fixed fixtures, the generator catalog and seeded random triangulations.
//! Each criterion prints one PASS line; failures panic with the reason.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use bubbletree::bubbles::{all_bubbles, build_bubble_tree};
use bubbletree::generators;
use bubbletree::graph::{Clique3, PlanarGraph, VertexId};
use bubbletree::hierarchy::{build_forest, HierarchyForest, TieBreakPolicy};
use bubbletree::oracle;
use bubbletree::planarity_test;
use bubbletree::pmfg::{build_pmfg, WeightMatrix};
use bubbletree::BubbleTree;

fn pipeline(g: &PlanarGraph) -> (HierarchyForest, BubbleTree) {
    let h = build_forest(g, g.enumerate_3cliques(), TieBreakPolicy::SmallestMinVertexIn)
        .expect("forest construction");
    let t = build_bubble_tree(all_bubbles(&h).expect("bubbles"), &h).expect("bubble tree");
    (h, t)
}

fn run_criterion(number: u32, name: &str, budget: Duration, body: impl FnOnce()) {
    let start = Instant::now();
    body();
    let elapsed = start.elapsed();
    assert!(
        elapsed <= budget,
        "criterion {number} ({name}): exceeded budget {budget:?} (took {elapsed:?})"
    );
    println!("criterion {number} ({name}): PASS in {elapsed:?}");
}

#[test]
fn criterion_1_two_bubble_fixture() {
    run_criterion(1, "two-bubble fixture", Duration::from_secs(1), || {
        let g = generators::two_bubble_example();
        let (h, t) = pipeline(&g);

        // exactly one separating 3-clique, and it is {a,c,d}
        let separating: Vec<&Clique3> = (0..h.clique_count())
            .filter(|&i| h.is_separating(i))
            .map(|i| h.clique(i))
            .collect();
        let acd = Clique3::new(
            g.vertex_by_label("a").unwrap(),
            g.vertex_by_label("c").unwrap(),
            g.vertex_by_label("d").unwrap(),
        );
        assert_eq!(separating, vec![&acd], "unique separating clique must be {{a,c,d}}");

        // exactly two bubbles
        assert_eq!(t.bubbles.len(), 2);

        // tree: 2 nodes, 1 edge, labeled {a,c,d}
        assert_eq!(t.edge_count(), 1);
        let (_, _, label) = t.edges().next().unwrap();
        assert_eq!(h.clique(label), &acd);
    });
}

#[test]
fn criterion_2_k4_fixture() {
    run_criterion(2, "K4 fixture", Duration::from_secs(1), || {
        let g = generators::named_graph("k4").unwrap();
        let (h, t) = pipeline(&g);
        assert_eq!(h.maximal_elements().len(), 4);
        // four isolated roots
        for i in 0..h.clique_count() {
            assert_eq!(h.parent(i), None);
            assert!(h.children(i).is_empty());
        }
        // the only bubble is K4 itself
        assert_eq!(t.bubbles.len(), 1);
        assert_eq!(t.bubbles[0].vertices.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(t.edge_count(), 0);
    });
}

#[test]
fn criterion_3_apollonian_generations() {
    run_criterion(3, "Apollonian generations 1-3", Duration::from_secs(5), || {
        for (gen, n, m) in [(1u32, 4usize, 6usize), (2, 7, 15), (3, 16, 42)] {
            let g = generators::apollonian(gen).unwrap();
            assert_eq!(g.n(), n, "gen {gen} vertex count");
            assert_eq!(g.edge_count(), m, "gen {gen} edge count");
            assert_eq!(m, 3 * n - 6, "gen {gen} 3n-6");

            let (h, t) = pipeline(&g);
            assert_eq!(h.maximal_elements().len(), 4, "gen {gen} roots");
            assert_eq!(h.max_depth(), gen as usize - 1, "gen {gen} max depth");
            // the oracle re-derives depths from closure chains
            let forest_check = oracle::check_forest(&g);
            assert!(forest_check.passed(), "gen {gen}: {:?}", forest_check.violations);

            let inserted = n - 4;
            assert_eq!(t.bubbles.len(), inserted + 1, "gen {gen} bubble count");
            assert_eq!(t.edge_count(), h.separating_count(), "gen {gen} tree edges");
        }
    });
}

#[test]
fn criterion_4_structural_invariants() {
    run_criterion(4, "structural invariant suite", Duration::from_secs(60), || {
        let mut graphs: Vec<(String, PlanarGraph)> = generators::catalog();
        for n in [8usize, 10, 12] {
            for seed in 0..100u64 {
                graphs.push((
                    format!("random-{n}-{seed}"),
                    generators::random_triangulation(n, seed).unwrap(),
                ));
            }
        }
        for (name, g) in &graphs {
            for report in [
                oracle::check_poset_axioms(g),
                oracle::check_dichotomy(g),
                oracle::check_forest(g),
                oracle::check_bubble_cover(g),
            ] {
                assert!(
                    report.passed(),
                    "{name} violates {}: {:?}",
                    report.name,
                    report.violations
                );
            }
        }
    });
}

#[test]
fn criterion_5_oracle_equivalence() {
    run_criterion(5, "exhaustive bubble equivalence", Duration::from_secs(60), || {
        let mut graphs: Vec<(String, PlanarGraph)> = generators::catalog()
            .into_iter()
            .filter(|(_, g)| g.n() <= 10)
            .collect();
        assert!(graphs.iter().any(|(name, _)| name == "octahedron"));
        for n in [8usize, 10] {
            for seed in 0..100u64 {
                graphs.push((
                    format!("random-{n}-{seed}"),
                    generators::random_triangulation(n, seed).unwrap(),
                ));
            }
        }
        for (name, g) in &graphs {
            let report = oracle::check_exhaustive_bubbles(g).unwrap();
            assert!(report.passed(), "{name}: {:?}", report.violations);
        }
        // the octahedron is covered by a single bubble
        let octa = generators::named_graph("octahedron").unwrap();
        let sets = oracle::exhaustive_bubbles(&octa).unwrap();
        assert_eq!(sets, BTreeSet::from([vec![0, 1, 2, 3, 4, 5]]));
    });
}

#[test]
fn criterion_6_tiebreak_independence() {
    run_criterion(6, "tie-break independence", Duration::from_secs(30), || {
        let fixture = generators::equal_split_example();
        let report = oracle::check_tiebreak_independence(&fixture);
        assert!(report.passed(), "equal-split fixture: {:?}", report.violations);

        for seed in 0..50u64 {
            let g = generators::random_triangulation(14, seed).unwrap();
            let report = oracle::check_tiebreak_independence(&g);
            assert!(report.passed(), "random n=14 seed={seed}: {:?}", report.violations);
        }
    });
}

#[test]
fn criterion_7_pmfg() {
    run_criterion(7, "PMFG construction", Duration::from_secs(10), || {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2024);
        let random_matrix = |n: usize, rng: &mut rand_chacha::ChaCha8Rng| {
            let mut values = vec![0.0f64; n * n];
            for i in 0..n {
                for j in i + 1..n {
                    let w: f64 = rng.gen();
                    values[i * n + j] = w;
                    values[j * n + i] = w;
                }
            }
            WeightMatrix::new(n, None, values).unwrap()
        };

        // n = 4: any weights give K4
        for _ in 0..5 {
            let g = build_pmfg(&random_matrix(4, &mut rng)).unwrap();
            assert_eq!(g.edge_count(), 6);
        }

        // n up to 12: 3n-6 edges, planar, and every rejected pair breaks
        // planarity when added to the final graph
        for n in 5..=12usize {
            for _ in 0..3 {
                let m = random_matrix(n, &mut rng);
                let g = build_pmfg(&m).unwrap();
                assert_eq!(g.edge_count(), 3 * n - 6);
                assert!(g.validate_maximal_planar().accepted());
                let mut edges: Vec<(VertexId, VertexId)> = g.edges().collect();
                for i in 0..n as VertexId {
                    for j in i + 1..n as VertexId {
                        if !g.has_edge(i, j) {
                            edges.push((i, j));
                            let augmented = PlanarGraph::from_edges(n, &edges).unwrap();
                            assert!(!planarity_test(&augmented), "n={n} pair ({i},{j})");
                            edges.pop();
                        }
                    }
                }
            }
        }
    });
}
