mod common;

use common::Oracle;
use proptest::prelude::*;
use scdom::exact::solve;
use scdom::fast::{
    block_decompose, gamma_sc_block, gamma_sc_threshold, recognize_split, recognize_threshold,
};
use scdom::generate::{
    random_block_graph, random_split_graph, random_threshold_graph, random_tree,
    threshold_graph_from_sequence,
};
use scdom::reductions::{reduce, ReductionKind, VertexRole};
use scdom::verify::{is_dominating, is_scds_definition, verify};
use scdom::{parse_edge_list, Graph, Variant, VertexSet};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=n * 2).prop_map(move |pairs| {
            let edges = pairs.into_iter().filter(|(u, v)| u != v);
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    (
        1..=max_n,
        any::<u64>(),
        proptest::collection::vec(any::<bool>(), 64),
    )
        .prop_map(|(n, seed, extra)| {
            let tree = random_tree(n, seed);
            let mut edges: Vec<(usize, usize)> = tree.edges().collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k % extra.len()] && (u + v + k) % 3 == 0 {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        let text = g.to_edge_list();
        let parsed = parse_edge_list(&text).unwrap();
        prop_assert!(parsed.warnings.is_empty());
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert_eq!(parsed.graph.to_edge_list(), text);
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted(g in arb_graph(15)) {
        let mut degree_sum = 0;
        for v in g.vertices() {
            let adj = g.adj(v);
            prop_assert!(adj.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(!adj.contains(&v));
            for &w in adj {
                prop_assert!(g.has_edge(w, v));
            }
            degree_sum += adj.len();
        }
        prop_assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(15)) {
        let labels = g.components(None);
        for (u, v) in g.edges() {
            prop_assert_eq!(labels.component_of(u), labels.component_of(v));
        }
        let mut first_seen = Vec::new();
        for v in g.vertices() {
            let c = labels.component_of(v).unwrap();
            prop_assert!(c < labels.count);
            if c == first_seen.len() {
                first_seen.push(v);
            }
            prop_assert!(c < first_seen.len());
        }
        prop_assert_eq!(first_seen.len(), labels.count);
        prop_assert_eq!(labels.count == 1, g.is_connected());
    }

    #[test]
    fn closed_neighborhood_dominates(g in arb_graph(10), mask in any::<u16>()) {
        let s: VertexSet = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        let closed = g.closed_neighborhood_of_set(&s).unwrap();
        prop_assert!(s.is_subset(&closed));
        prop_assert_eq!(closed.len() == g.n(), is_dominating(&g, &s));
    }

    #[test]
    fn secure_connected_sets_survive_single_removals(g in arb_connected(8), mask in any::<u8>()) {
        let s: VertexSet = g.vertices().filter(|&v| mask >> v & 1 == 1).collect();
        if !g.is_complete() && is_scds_definition(&g, &s).valid {
            for &v in &s {
                let mut rest = s.clone();
                rest.remove(v);
                prop_assert!(is_dominating(&g, &rest));
            }
        }
    }

    #[test]
    fn exact_values_respect_variant_order(g in arb_connected(8)) {
        let value = |v: Variant| solve(&g, v).map(|r| r.value).ok();
        let ds = value(Variant::Ds).unwrap();
        let cds = value(Variant::Cds).unwrap();
        let scds = value(Variant::Scds).unwrap();
        let sds = value(Variant::Sds).unwrap();
        prop_assert!(ds <= cds && cds <= scds);
        prop_assert!(ds <= sds && sds <= scds);
        if let (Some(tds), Some(stds)) = (value(Variant::Tds), value(Variant::Stds)) {
            prop_assert!(ds <= tds && tds <= stds);
        }
    }

    #[test]
    fn block_solver_matches_oracle(n in 1usize..=9, seed in any::<u64>()) {
        let g = random_block_graph(n, seed);
        let r = gamma_sc_block(&g).unwrap();
        prop_assert_eq!(Some(r.value), Oracle::new(&g).value(Variant::Scds));
        prop_assert!(verify(&g, &r.witness, Variant::Scds));
    }

    #[test]
    fn trees_need_every_vertex(n in 3usize..=40, seed in any::<u64>()) {
        let g = random_tree(n, seed);
        let r = gamma_sc_block(&g).unwrap();
        prop_assert_eq!(r.value, n);
        let d = block_decompose(&g).unwrap();
        prop_assert_eq!(d.r(), n - 1);
    }

    #[test]
    fn threshold_generator_is_recognized(seq in proptest::collection::vec(any::<bool>(), 1..30)) {
        let g = threshold_graph_from_sequence(&seq);
        let ordering = recognize_threshold(&g).unwrap();
        prop_assert!(ordering.partition.is_valid_for(&g));
        prop_assert!(ordering.nesting_holds(&g));
        prop_assert!(recognize_split(&g).is_ok());
    }

    #[test]
    fn threshold_solver_matches_oracle(n in 2usize..=9, seed in any::<u64>()) {
        let g = random_threshold_graph(n, seed);
        let r = gamma_sc_threshold(&g).unwrap();
        prop_assert_eq!(Some(r.value), Oracle::new(&g).value(Variant::Scds));
        prop_assert!(verify(&g, &r.witness, Variant::Scds));
    }

    #[test]
    fn split_recognition_accepts_generated_split_graphs(n in 1usize..=20, seed in any::<u64>()) {
        let (g, planted) = random_split_graph(n, seed);
        prop_assert!(planted.is_valid_for(&g));
        let found = recognize_split(&g).unwrap();
        prop_assert!(found.is_valid_for(&g));
    }

    #[test]
    fn split_rejection_is_certified(g in arb_graph(9)) {
        if let Err(rejection) = recognize_split(&g) {
            let o = rejection.obstruction.unwrap();
            let vs = &o.vertices;
            let edges = vs.iter().enumerate()
                .flat_map(|(i, &u)| vs[i + 1..].iter().map(move |&w| (u, w)))
                .filter(|&(u, w)| g.has_edge(u, w))
                .count();
            prop_assert_eq!(edges, if vs.len() == 4 && o.kind.to_string() == "2K2" { 2 } else { vs.len() });
        }
    }

    #[test]
    fn gadgets_keep_offsets_and_classes(g in arb_connected(7), param in 1usize..6) {
        for kind in ReductionKind::ALL {
            let a = match reduce(kind, &g, param, None) {
                Ok(a) => a,
                Err(_) => {
                    prop_assert!(recognize_split(&g).is_err());
                    continue;
                }
            };
            prop_assert_eq!(a.output_parameter, param + kind.offset());
            prop_assert_eq!(a.provenance.len(), a.output_graph.n());
            let mut roles = a.provenance.clone();
            roles.sort_by_key(|r| format!("{r:?}"));
            roles.dedup();
            prop_assert_eq!(roles.len(), a.output_graph.n());
            for v in g.vertices() {
                prop_assert_eq!(a.provenance[v], VertexRole::Original(v));
            }
            prop_assert!(a.output_graph.is_connected());
            match kind {
                ReductionKind::ScdmToScdb | ReductionKind::StdmToStdb => {
                    prop_assert!(a.output_graph.is_bipartite());
                    prop_assert_eq!(a.output_graph.m(), 2 * g.m() + g.n() + 2 * (g.n() + 2));
                }
                ReductionKind::DmSplitToScdmSplit | ReductionKind::DmSplitToStdmSplit => {
                    let p = a.output_partition.as_ref().unwrap();
                    prop_assert!(p.is_valid_for(&a.output_graph));
                    prop_assert!(recognize_split(&a.output_graph).is_ok());
                }
                _ => prop_assert_eq!(a.output_graph.m(), g.m() + g.n()),
            }
        }
    }

    #[test]
    fn forward_witnesses_are_secure_connected(g in arb_connected(7)) {
        let dominating = solve(&g, Variant::Ds).unwrap().witness;
        let universal = reduce(ReductionKind::DmToScdm, &g, dominating.len(), None).unwrap();
        prop_assert!(is_scds_definition(&universal.output_graph, &universal.lift_witness(&dominating)).valid);

        prop_assume!(!g.is_complete());
        let scds = solve(&g, Variant::Scds).unwrap().witness;
        let bipartite = reduce(ReductionKind::ScdmToScdb, &g, scds.len(), None).unwrap();
        prop_assert!(is_scds_definition(&bipartite.output_graph, &bipartite.lift_witness(&scds)).valid);
    }

    #[test]
    fn split_forward_witness(n in 1usize..=7, seed in any::<u64>()) {
        let (g, partition) = random_split_graph(n, seed);
        let dominating = solve(&g, Variant::Ds).unwrap().witness;
        let a = reduce(ReductionKind::DmSplitToScdmSplit, &g, dominating.len(), Some(&partition)).unwrap();
        prop_assert!(is_scds_definition(&a.output_graph, &a.lift_witness(&dominating)).valid);
    }
}

#[test]
fn bipartite_forward_witness_fails_on_complete_graphs() {
    for n in 1..=4 {
        let g = scdom::generate::complete(n);
        let a = reduce(ReductionKind::ScdmToScdb, &g, 1, None).unwrap();
        let lifted = a.lift_witness(&VertexSet::from([0]));
        assert!(!is_scds_definition(&a.output_graph, &lifted).valid, "K{n}");
        assert_eq!(
            solve(&a.output_graph, Variant::Scds).unwrap().value,
            4,
            "K{n}"
        );
    }
}
