mod common;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wreathlab::invariants::{
    szeged_rho_counts, wiener, wiener_rho, wiener_rho_path_closed, wiener_vector,
    wiener_vector_complete, wiener_vector_path_closed, wiener_wreath, wiener_wreath_bruteforce,
    zagreb, Halves, WienerMethod,
};
use wreathlab::products::wreath_product;
use wreathlab::tsp::{rho_closed_form, ClosedFamily};
use wreathlab::{Budget, Graph, RhoSolver, VertexSubset, WreathCodec};

use common::*;

fn budget() -> Budget {
    Budget::default()
}

/// Per-vertex strictly-closer count for the product edge `(u, v)`.
fn closer_count(dist: &[Vec<u32>], u: usize, v: usize) -> usize {
    (0..dist.len()).filter(|&z| dist[z][u] < dist[z][v]).count()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn closed_forms_match_dp(n in 2usize..=9, mask in any::<u64>(), path in any::<bool>()) {
        let (g, family) = if path {
            (Graph::path(n), ClosedFamily::Path)
        } else {
            (Graph::complete(n), ClosedFamily::Complete)
        };
        let a = VertexSubset::from_mask(n, (mask & ((1 << n) - 1)).max(1)).unwrap();
        let dp = RhoSolver::new(&g, &budget()).unwrap().rho_matrix(&a).unwrap();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(rho_closed_form(family, n, &a, u, v).unwrap(), dp.get(u, v));
            }
        }
    }

    #[test]
    fn path_wiener_rho_closed_form(n in 3usize..=9, mask in any::<u64>()) {
        let a = VertexSubset::from_mask(n, (mask & ((1 << n) - 1)).max(1)).unwrap();
        prop_assert_eq!(
            wiener_rho_path_closed(n, &a).unwrap(),
            wiener_rho(&Graph::path(n), &a, &budget()).unwrap()
        );
    }

    /// rho_A(u, v) = rho_{phi(A)}(phi(u), phi(v)) for a relabelling phi.
    #[test]
    fn rho_is_invariant_under_relabelling(n in 2usize..=8, p in 0.0..0.6f64, seed in any::<u64>(), mask in any::<u64>()) {
        let g = random_connected(n, p, seed);
        let mut phi: Vec<usize> = (0..n).collect();
        phi.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
        let image = g.relabel(&phi).unwrap();
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let moved: Vec<usize> = members.iter().map(|&v| phi[v]).collect();
        let before = RhoSolver::new(&g, &budget()).unwrap()
            .rho_matrix(&VertexSubset::from_vertices(n, &members).unwrap()).unwrap();
        let after = RhoSolver::new(&image, &budget()).unwrap()
            .rho_matrix(&VertexSubset::from_vertices(n, &moved).unwrap()).unwrap();
        for u in 0..n {
            for v in 0..n {
                prop_assert_eq!(before.get(u, v), after.get(phi[u], phi[v]));
            }
        }
    }

    #[test]
    fn zagreb_matches_degree_sums(n in 2usize..=9, p in 0.0..0.8f64, seed in any::<u64>()) {
        let g = random_connected(n, p, seed);
        let z = zagreb(&g).unwrap();
        let deg: Vec<u64> = (0..n).map(|u| g.neighbors(u).len() as u64).collect();
        let m1: u64 = deg.iter().map(|d| d * d).sum();
        let m2: u64 = g.edges().map(|(u, v)| deg[u] * deg[v]).sum();
        prop_assert_eq!(z.m1, BigUint::from(m1));
        prop_assert_eq!(z.m2, BigUint::from(m2));
    }
}

#[test]
fn vector_closed_forms_match_enumeration() {
    for n in 2..=7 {
        let closed = wiener_vector_complete(n).unwrap();
        assert_eq!(
            closed,
            wiener_vector(&Graph::complete(n), &budget()).unwrap(),
            "K{n}"
        );
    }
    for n in 3..=8 {
        let closed = wiener_vector_path_closed(n).unwrap();
        assert_eq!(
            closed,
            wiener_vector(&Graph::path(n), &budget()).unwrap(),
            "P{n}"
        );
    }
}

#[test]
fn p9_example_half_sum() {
    let a = VertexSubset::from_vertices(9, &[2, 4, 5]).unwrap();
    assert_eq!(
        wiener_rho(&Graph::path(9), &a, &budget()).unwrap(),
        Halves::from_integer(266u32)
    );
}

#[test]
fn wiener_vector_separates_c4_and_paw() {
    let (c4, paw) = (Graph::cycle(4), Graph::paw());
    assert_ne!(
        wiener_vector(&c4, &budget()).unwrap(),
        wiener_vector(&paw, &budget()).unwrap()
    );
    let k2 = Graph::complete(2);
    let w_c4 = wiener_wreath(&c4, &k2, WienerMethod::Vector, &budget()).unwrap();
    let w_paw = wiener_wreath(&paw, &k2, WienerMethod::Vector, &budget()).unwrap();
    assert_eq!(w_c4, wiener_wreath_bruteforce(&c4, &k2, &budget()).unwrap());
    assert_eq!(
        w_paw,
        wiener_wreath_bruteforce(&paw, &k2, &budget()).unwrap()
    );
    assert_eq!(
        w_c4,
        BigUint::from(wiener_from_distances(
            &wreath_product(&c4, &k2, &budget()).unwrap()
        ))
    );
    assert_ne!(w_c4, w_paw);
    // equal ordinary Wiener indices, so only the vector tells them apart
    assert_eq!(wiener(&c4).unwrap(), wiener(&paw).unwrap());
}

#[test]
fn type_one_counts_factor() {
    let (g, h) = (Graph::complete(2), Graph::cycle(3));
    let (n, m) = (2usize, 3usize);
    let codec = WreathCodec::new(n, m).unwrap();
    let product = wreath_product(&g, &h, &budget()).unwrap();
    let dist = bfs_matrix(&product);
    let h_dist = bfs_matrix(&h);
    let mut seen = 0;
    for (i, j) in product.edges() {
        let (u, v) = (codec.decode(i), codec.decode(j));
        if u.position != v.position {
            continue;
        }
        seen += 1;
        let k = (0..n).find(|&k| u.config[k] != v.config[k]).unwrap();
        let (a, b) = (u.config[k], v.config[k]);
        let n_a = closer_count(&h_dist, a, b);
        assert_eq!(closer_count(&dist, i, j), n * m.pow(n as u32 - 1) * n_a);
    }
    // 18 vertices, each on deg(C_3) = 2 lamp edges
    assert_eq!(seen, 18);
}

#[test]
fn type_two_counts_ignore_configuration() {
    let (g, h) = (Graph::complete(2), Graph::cycle(3));
    let codec = WreathCodec::new(2, 3).unwrap();
    let product = wreath_product(&g, &h, &budget()).unwrap();
    let dist = bfs_matrix(&product);
    for (xj, xk) in g.edges() {
        let counts: Vec<(usize, usize)> = (0..codec.config_count())
            .map(|c| {
                let (i, j) = (codec.compose(c, xj), codec.compose(c, xk));
                assert!(product.has_edge(i, j));
                (closer_count(&dist, i, j), closer_count(&dist, j, i))
            })
            .collect();
        assert!(counts.iter().all(|&c| c == counts[0]), "{counts:?}");
    }
}

#[test]
fn type_two_counts_sum_over_subsets() {
    for gname in CORPUS_BASES {
        for hname in CORPUS_LAMPS {
            let (g, h) = (named(gname), named(hname));
            if wreath_order(&g, &h) > 2500 {
                continue;
            }
            let (n, m) = (g.vertex_count(), h.vertex_count());
            let codec = WreathCodec::new(n, m).unwrap();
            let product = wreath_product(&g, &h, &budget()).unwrap();
            let dist = bfs_matrix(&product);
            for (xj, xk) in g.edges() {
                let mut expected = 0usize;
                for mask in 0..1u64 << n {
                    let a = VertexSubset::from_mask(n, mask).unwrap();
                    let (nj, _) = szeged_rho_counts(&g, &a, (xj, xk), &budget()).unwrap();
                    expected += (m - 1).pow(a.len() as u32) * nj;
                }
                for c in [0, codec.config_count() - 1, codec.config_count() / 2] {
                    let (i, j) = (codec.compose(c, xj), codec.compose(c, xk));
                    assert_eq!(
                        closer_count(&dist, i, j),
                        expected,
                        "{gname} wr {hname}, edge ({xj},{xk}), config {c}"
                    );
                }
            }
        }
    }
}
