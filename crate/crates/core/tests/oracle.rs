mod common;

use common::Oracle;
use scdom::exact::{solve, solve_with, SolveOptions};
use scdom::generate::{
    enumerate_connected_graphs, random_block_graph, random_graph, random_threshold_graph,
};
use scdom::verify::{is_scds_characterization, verify};
use scdom::{Error, Graph, Variant, VertexSet};

fn applicable(g: &Graph, variant: Variant) -> bool {
    !(variant.requires_connected() && !g.is_connected())
        && !(variant.requires_no_isolated() && g.has_isolated_vertex())
}

fn small_graphs() -> Vec<Graph> {
    (1..=5)
        .flat_map(|n| enumerate_connected_graphs(n).unwrap())
        .collect()
}

#[test]
fn verifiers_agree_with_oracle_on_every_subset() {
    for g in small_graphs() {
        let oracle = Oracle::new(&g);
        let n = g.n();
        for mask in 0u64..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let s = VertexSet::from(set.clone());
            for variant in Variant::ALL {
                assert_eq!(
                    verify(&g, &s, variant),
                    oracle.accepts_set(&set, variant),
                    "{variant} on {{{s}}}\n{}",
                    g.to_edge_list()
                );
            }
        }
    }
}

#[test]
fn exact_solver_matches_oracle_value_and_witness() {
    for g in small_graphs() {
        let oracle = Oracle::new(&g);
        for variant in Variant::ALL {
            if !applicable(&g, variant) {
                continue;
            }
            let expected = oracle.minimum(variant);
            let report = solve(&g, variant);
            match (expected, report) {
                (Some((k, set)), Ok(r)) => {
                    assert_eq!(r.value, k, "{variant}\n{}", g.to_edge_list());
                    assert_eq!(
                        r.witness.as_slice(),
                        set.as_slice(),
                        "{variant}\n{}",
                        g.to_edge_list()
                    );
                }
                (None, Err(Error::Domain(_))) => {}
                (e, r) => panic!(
                    "{variant}: oracle {e:?}, solver {r:?}\n{}",
                    g.to_edge_list()
                ),
            }
        }
    }
}

#[test]
fn pruning_never_changes_the_answer() {
    for seed in 0..40 {
        let n = 6 + (seed as usize) % 4;
        let g = random_graph(n, 0.35, seed).unwrap();
        for variant in Variant::ALL {
            if !applicable(&g, variant) {
                continue;
            }
            let pruned = solve(&g, variant).unwrap();
            let plain = solve_with(&g, variant, &SolveOptions::unpruned()).unwrap();
            assert_eq!(pruned.value, plain.value, "{variant} seed {seed}");
            assert_eq!(pruned.witness, plain.witness, "{variant} seed {seed}");
        }
    }
}

#[test]
fn oracle_values_on_class_instances() {
    for seed in 0..15 {
        for g in [random_block_graph(8, seed), random_threshold_graph(8, seed)] {
            let oracle = Oracle::new(&g);
            assert_eq!(
                Some(solve(&g, Variant::Scds).unwrap().value),
                oracle.value(Variant::Scds)
            );
        }
    }
}

#[test]
fn characterization_agrees_with_oracle() {
    for g in small_graphs() {
        let oracle = Oracle::new(&g);
        let n = g.n();
        for mask in 0u64..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            assert_eq!(
                is_scds_characterization(&g, &VertexSet::from(set.clone())),
                oracle.accepts_set(&set, Variant::Scds),
                "{set:?}\n{}",
                g.to_edge_list()
            );
        }
    }
}

#[test]
fn disconnected_and_isolated_inputs() {
    let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
    let oracle = Oracle::new(&g);
    assert_eq!(
        solve(&g, Variant::Ds).unwrap().value,
        oracle.value(Variant::Ds).unwrap()
    );
    assert_eq!(
        solve(&g, Variant::Tds).unwrap().value,
        oracle.value(Variant::Tds).unwrap()
    );
    assert!(matches!(solve(&g, Variant::Stds), Err(Error::Domain(_))));
    assert_eq!(oracle.value(Variant::Scds), None);
    assert!(matches!(solve(&g, Variant::Scds), Err(Error::Domain(_))));
    assert!(matches!(
        solve(&Graph::empty(3), Variant::Tds),
        Err(Error::Domain(_))
    ));
}

#[test]
fn characterization_on_larger_random_graphs() {
    for seed in 0..20 {
        let n = 7 + (seed as usize) % 2;
        let g = random_graph(n, 0.4, seed).unwrap();
        for mask in 0u64..1 << n {
            let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            assert_eq!(
                is_scds_characterization(&g, &s),
                scdom::verify::is_scds_definition(&g, &s).valid,
                "{{{s}}} seed {seed}"
            );
        }
    }
}

#[test]
fn whole_vertex_set_is_secure_connected_dominating() {
    for g in small_graphs() {
        let all: VertexSet = g.vertices().collect();
        assert!(verify(&g, &all, Variant::Scds));
    }
}

#[test]
fn bipartite_gadget_counterexamples_hold_under_oracle() {
    use scdom::reductions::reduce_bipartite;
    use scdom::ReductionKind;
    let p5 = Graph::from_edges(5, [(0, 2), (0, 4), (1, 2), (1, 3)]).unwrap();
    let bull = Graph::from_edges(5, [(0, 1), (0, 2), (0, 4), (1, 2), (1, 3)]).unwrap();
    for g in [p5, bull] {
        let target = reduce_bipartite(&g, 1, ReductionKind::ScdmToScdb)
            .unwrap()
            .output_graph;
        assert_eq!(Oracle::new(&g).value(Variant::Scds), Some(5));
        assert_eq!(Oracle::new(&target).value(Variant::Scds), Some(6));
    }
    let k3 = reduce_bipartite(&scdom::generate::complete(3), 1, ReductionKind::ScdmToScdb).unwrap();
    assert_eq!(Oracle::new(&k3.output_graph).value(Variant::Scds), Some(4));
}
