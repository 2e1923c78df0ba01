mod common;

use common::strategy;
use htw_core::coverage::weak_coverage_run;
use htw_core::exact::exists_weak_coverage;
use htw_core::{preset, weak_coverage, CoverageAnswer, Graph, VertexSet, PRESET_NAMES};
use proptest::prelude::*;

#[test]
fn factor_two_gap_is_reachable() {
    // K4 with Z = V: one deleted vertex leaves a triangle, so no
    // (bipartite, 1)-separation covers Z, yet two deleted vertices suffice.
    let g = Graph::complete(4);
    let class = preset("bipartite").unwrap();
    let z = g.vertex_set();
    assert!(!exists_weak_coverage(&g, &z, 1, &*class).unwrap());
    assert!(exists_weak_coverage(&g, &z, 2, &*class).unwrap());
    match weak_coverage(&g, &z, 1, &*class).unwrap() {
        CoverageAnswer::Covered(sep) => {
            assert!(sep.holds(&g, &*class));
            assert!(sep.weakly_covers(&z));
            assert_eq!(sep.separator.len(), 2);
        }
        CoverageAnswer::NoCoverage => panic!("a (bipartite, 2)-separation exists"),
    }
}

#[test]
fn run_counters() {
    let g = Graph::complete(4);
    let class = preset("bipartite").unwrap();
    let run = weak_coverage_run(&g, &g.vertex_set(), 1, &*class).unwrap();
    assert_eq!(run.improvements, 1);
    assert_eq!(run.iterations, 2);
    assert_eq!(run.oracle_calls, 1);
    assert_eq!(run.oracle_budgets.into_iter().collect::<Vec<_>>(), vec![(2, 1)]);
}

#[test]
fn z_inside_a_member_component_is_covered_with_empty_separator() {
    // Two components: a C6 and a K4. Z inside the C6 needs no separator.
    let g = Graph::cycle(6).disjoint_union(&Graph::complete(4));
    let class = preset("bipartite").unwrap();
    let z = VertexSet::from([0, 2, 5]);
    match weak_coverage(&g, &z, 0, &*class).unwrap() {
        CoverageAnswer::Covered(sep) => {
            assert!(sep.separator.is_empty());
            assert_eq!(sep.component, (0..6).collect());
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn out_of_range_z_is_an_error() {
    let g = Graph::path(3);
    let class = preset("edgeless").unwrap();
    assert!(weak_coverage(&g, &VertexSet::from([3]), 1, &*class).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn answers_agree_with_exhaustive_search(
        (g, z) in strategy::graph_with_subset(7),
        k in 0usize..=2,
        which in 0usize..4,
    ) {
        prop_assume!(!z.is_empty());
        let class = preset(PRESET_NAMES[which]).unwrap();
        let run = weak_coverage_run(&g, &z, k, &*class).unwrap();
        prop_assert!(run.oracle_budgets.keys().all(|&b| b == 2 * k));
        prop_assert!(run.improvements <= g.n());
        match run.answer {
            CoverageAnswer::Covered(sep) => {
                prop_assert!(sep.component.is_disjoint(&sep.separator));
                prop_assert!(sep.separator.len() <= 2 * k);
                prop_assert!(sep.holds(&g, &*class));
                prop_assert!(sep.weakly_covers(&z));
            }
            CoverageAnswer::NoCoverage => {
                prop_assert!(!exists_weak_coverage(&g, &z, k, &*class).unwrap());
            }
        }
    }
}

/// Triangle-free class, two-vertex separator: a 10-cycle `C` on 0..=9, separator
/// vertices 10 and 11 each closing a triangle with a cycle edge, and a triangle
/// hanging off each separator vertex.
fn separation_improvement_instance() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
    edges.extend([(0, 10), (1, 10), (5, 11), (6, 11)]);
    edges.extend([(10, 12), (10, 13), (12, 13), (11, 14), (11, 15), (14, 15)]);
    Graph::new(16, edges).unwrap()
}

#[test]
fn path_endpoints_in_the_covered_side_are_redundant() {
    let g = separation_improvement_instance();
    let class = preset("triangle-free").unwrap();
    let z = VertexSet::from([1, 3, 5, 7, 9]);
    // Z is weakly (H, 2)-separable by C = 0..=9, S = {10, 11}.
    let sep = htw_core::HSeparation { component: (0..10).collect(), separator: VertexSet::from([10, 11]), bound: 2 };
    assert!(sep.holds(&g, &*class) && sep.weakly_covers(&z));

    // X hits every triangle but puts five vertices inside C.
    let x_prime = VertexSet::from([0, 2, 4, 6, 8]);
    let x = x_prime.union(&VertexSet::from([12, 14]));
    let (rest, _) = g.remove_vertices(&x).unwrap();
    assert!(class.is_member(&rest));
    match htw_core::min_vertex_separator(&g, &z, &x_prime, 4).unwrap() {
        htw_core::FlowResult::ManyPaths(paths) => assert_eq!(paths.ends(), x_prime),
        other => panic!("expected five disjoint paths, got {other:?}"),
    }
    let better = htw_core::approx::improve_deletion_set(&g, &x, &x_prime, &*class, 4).unwrap().unwrap();
    assert!(better.len() < x.len());
    let (rest, _) = g.remove_vertices(&better).unwrap();
    assert!(class.is_member(&rest));

    let run = weak_coverage_run(&g, &z, 2, &*class).unwrap();
    assert!(run.improvements >= 1);
    match run.answer {
        CoverageAnswer::Covered(found) => {
            assert!(found.holds(&g, &*class));
            assert!(found.weakly_covers(&z));
        }
        CoverageAnswer::NoCoverage => panic!("Z is weakly separable"),
    }
}
