//! Randomized invariants.

mod common;

use mopgp::census::enumerate_triangulations;
use mopgp::mop::MopCertificate;
use mopgp::solve::{Solver, SolverConfig};
use mopgp::{is_gp_characterized, is_gp_naive, recognize, DistanceMatrix, Graph};
use proptest::prelude::*;

/// Connected graph: a random spanning tree plus random extra edges.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let parents = (1..n).map(|i| 0..i).collect::<Vec<_>>();
        let extra = proptest::collection::vec(any::<bool>(), n * (n - 1) / 2);
        (Just(n), parents, extra).prop_map(|(n, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i + 1))
                .collect();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if extra[k] && !edges.contains(&(u, v)) {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::new(n, edges).unwrap()
        })
    })
}

fn graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    connected_graph(max_n).prop_flat_map(|g| {
        let n = g.order();
        (
            Just(g),
            proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 0..=n),
        )
    })
}

fn triangulation() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (4usize..=10).prop_flat_map(|n| {
        let all = enumerate_triangulations(n).unwrap();
        proptest::sample::select(all).prop_map(move |c| (n, c))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn verifiers_agree((g, s) in graph_and_subset(10)) {
        let dm = DistanceMatrix::new(&g).unwrap();
        let a = is_gp_naive(&g, &dm, &s).unwrap();
        let b = is_gp_characterized(&g, &dm, &s).unwrap();
        prop_assert_eq!(a.is_gp, b.is_gp);
        prop_assert_eq!(a.is_gp, common::is_gp_brute(&common::floyd(&g), &s));
        for check in [&a, &b] {
            if let Some((x, y, z)) = check.violation {
                prop_assert!(dm.lies_on_geodesic(x, y, z).unwrap());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn subsets_of_gp_sets_are_gp(g in connected_graph(9), drop in any::<u64>()) {
        let res = mopgp::gp_number(&g).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        let sub: Vec<usize> = res
            .witness
            .iter()
            .enumerate()
            .filter(|(i, _)| drop >> i & 1 == 0)
            .map(|(_, &v)| v)
            .collect();
        prop_assert!(is_gp_characterized(&g, &dm, &sub).unwrap().is_gp);
    }

    #[test]
    fn canonical_key_ignores_labels((n, chords) in triangulation(), perm in permutation(10)) {
        let cert = MopCertificate::polygon(n, &chords).unwrap();
        let g = cert.to_graph();
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let h = g.relabel(&perm);
        let back = recognize(&h).unwrap();
        back.validate(&h).unwrap();
        prop_assert_eq!(back.canonical_key(), cert.canonical_key());
    }

    #[test]
    fn solver_value_is_seed_independent(g in connected_graph(10), s1 in any::<u64>(), s2 in any::<u64>()) {
        let solve = |seed| Solver::new(SolverConfig { seed, ..SolverConfig::default() }).solve(&g, None).unwrap();
        let (a, b) = (solve(s1), solve(s2));
        prop_assert_eq!(a.value, b.value);
        prop_assert_eq!(&a.witness, &b.witness);
        prop_assert_eq!(a.value, common::brute_gp(&g));
    }

    #[test]
    fn relabeled_mop_has_same_gp((n, chords) in triangulation(), perm in permutation(10)) {
        let g = MopCertificate::polygon(n, &chords).unwrap().to_graph();
        let perm: Vec<usize> = perm.into_iter().filter(|&v| v < n).collect();
        let h = g.relabel(&perm);
        let cert = recognize(&h).unwrap();
        let with_cert = Solver::default().solve(&h, Some(&cert)).unwrap().value;
        prop_assert_eq!(with_cert, mopgp::gp_number(&g).unwrap().value);
    }
}
