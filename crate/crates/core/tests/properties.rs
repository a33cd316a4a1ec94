mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use splitlike::classes::verify_partition;
use splitlike::cover::ExactCoverInstance;
use splitlike::exact::{decide, solve_exact, verify_solution};
use splitlike::gadgets::{Reduction, Source};
use splitlike::graph::gen_random_split_like;
use splitlike::harness::{random_exact_cover, solver_generator, SolverKind, FUZZ_CHECKS};
use splitlike::io::{
    parse_cover_json, parse_stp, read_artifact, write_artifact, write_cover_json, write_stp,
    StpDocument,
};
use splitlike::{Error, Graph, PartitionKind, SteinerInstance, VertexSet};

/// Connected graph on up to `max_n` vertices: a random spanning tree plus
/// random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let parents = proptest::collection::vec(any::<prop::sample::Index>(), n.saturating_sub(1));
        let extra = proptest::collection::vec((0..n, 0..n), 0..=2 * n);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, p)| (p.index(i + 1), i + 1))
                .collect();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v));
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn instance(max_n: usize) -> impl Strategy<Value = SteinerInstance> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        proptest::collection::btree_set(0..n, 1..=n).prop_map(move |r| {
            SteinerInstance::new(g.clone(), r.into_iter().collect(), None).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn exact_solver_matches_counting_oracle(inst in instance(10)) {
        let sol = solve_exact(&inst).unwrap();
        prop_assert!(verify_solution(&inst, &sol));
        prop_assert_eq!(
            sol.size(),
            common::min_steiner_by_counting(inst.graph(), inst.terminals())
        );
    }

    #[test]
    fn decide_is_monotone_in_the_budget(inst in instance(9)) {
        let opt = solve_exact(&inst).unwrap().size();
        for k in 0..=inst.graph().n() {
            prop_assert_eq!(decide(&inst, k).unwrap(), k >= opt);
        }
    }

    #[test]
    fn vertex_set_matches_btreeset(
        a in proptest::collection::vec(0usize..40, 0..20),
        b in proptest::collection::vec(0usize..40, 0..20),
    ) {
        let (sa, sb): (VertexSet, VertexSet) = (a.iter().copied().collect(), b.iter().copied().collect());
        let (ma, mb): (BTreeSet<usize>, BTreeSet<usize>) = (a.into_iter().collect(), b.into_iter().collect());
        let as_vec = |s: &VertexSet| s.iter().collect::<Vec<_>>();
        prop_assert_eq!(as_vec(&sa.union(&sb)), ma.union(&mb).copied().collect::<Vec<_>>());
        prop_assert_eq!(as_vec(&sa.difference(&sb)), ma.difference(&mb).copied().collect::<Vec<_>>());
        prop_assert_eq!(sa.is_disjoint(&sb), ma.is_disjoint(&mb));
        prop_assert_eq!(sa.is_subset(&sb), ma.is_subset(&mb));
        for v in 0..40 {
            prop_assert_eq!(sa.contains(v), ma.contains(&v));
        }
    }

    #[test]
    fn random_split_like_graphs_carry_valid_certificates(
        clique in any::<bool>(),
        sizes in proptest::collection::vec(1usize..5, 1..4),
        indep in 0usize..8,
        prob in 0.0f64..1.0,
        seed in any::<u64>(),
    ) {
        let kind = if clique { PartitionKind::Clique } else { PartitionKind::Multipartite };
        let sizes = if clique { vec![sizes[0]] } else { sizes };
        let Ok((g, p)) = gen_random_split_like(kind, &sizes, indep, prob, seed) else {
            return Ok(());
        };
        prop_assert!(verify_partition(&g, &p).unwrap());
        prop_assert!(g.is_connected());
        let again = gen_random_split_like(kind, &sizes, indep, prob, seed).unwrap();
        prop_assert_eq!(again, (g, p));
    }

    #[test]
    fn stp_round_trips(inst in instance(12), budget in proptest::option::of(0usize..10)) {
        let doc = StpDocument::from_instance(&inst.with_budget(budget), None);
        let text = write_stp(&doc);
        let back = parse_stp(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(write_stp(&back), text);
    }

    #[test]
    fn stp_round_trips_with_partition(
        sizes in proptest::collection::vec(1usize..4, 2..4),
        indep in 1usize..6,
        seed in any::<u64>(),
    ) {
        let (g, p) = gen_random_split_like(PartitionKind::Multipartite, &sizes, indep, 0.5, seed).unwrap();
        let doc = StpDocument {
            graph: g,
            terminals: Some(p.independent.clone()),
            partition: Some(p),
            budget: None,
            comments: vec!["generated".into()],
        };
        prop_assert_eq!(parse_stp(&write_stp(&doc)).unwrap(), doc);
    }

    #[test]
    fn artifacts_and_sources_round_trip(seed in any::<u64>(), planted in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let src = random_exact_cover(&mut rng, 3, 9, 6, Some(3), planted);
        let json = write_cover_json(&Source::ExactCover(src.clone()));
        prop_assert_eq!(parse_cover_json(&json).unwrap(), Source::ExactCover(src.clone()));
        for reduction in Reduction::ALL {
            let art = reduction.apply(&src).unwrap();
            let (stp, sidecar) = write_artifact(&art);
            prop_assert_eq!(read_artifact(&stp, &sidecar).unwrap(), art);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn specialized_solvers_return_valid_optima(seed in any::<u64>()) {
        for (kind, _, _) in FUZZ_CHECKS {
            if kind == SolverKind::ChordalTrisplitLiteral {
                continue;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (inst, p) = solver_generator(kind, 14)(&mut rng);
            let res = kind.run(&inst, p.as_ref()).unwrap().unwrap();
            prop_assert!(verify_solution(&inst, &res.solution), "{:?}", kind);
            prop_assert_eq!(res.size(), solve_exact(&inst).unwrap().size(), "{:?}", kind);
        }
    }
}

#[test]
fn cover_json_rejects_cap_violations() {
    let text = r#"{"format":1,"kind":"exact_cover","universe":3,"set_size":3,"occurrence_cap":1,"subsets":[[0,1,2],[0,1,2]]}"#;
    assert!(matches!(
        parse_cover_json(text),
        Err(Error::InvalidCover(_))
    ));
    let ok = ExactCoverInstance::x3c3(3, vec![vec![0, 1, 2]]).unwrap();
    assert!(parse_cover_json(&write_cover_json(&Source::ExactCover(ok))).is_ok());
}
