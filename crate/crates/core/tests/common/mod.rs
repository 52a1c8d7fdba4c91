//! Test-side oracles that share no code with the library's solvers.

#![allow(dead_code)]

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wreathlab::Graph;

pub fn bfs_matrix(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.vertex_count();
    (0..n)
        .map(|s| {
            let mut dist = vec![u32::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in g.neighbors(u) {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect()
}

/// Shortest walk `u -> v` through every vertex of `set`, trying each order.
pub fn rho_by_orders(dist: &[Vec<u32>], set: &[usize], u: usize, v: usize) -> u32 {
    fn go(dist: &[Vec<u32>], rest: &mut Vec<usize>, at: usize, v: usize, acc: u32, best: &mut u32) {
        if acc >= *best {
            return;
        }
        if rest.is_empty() {
            *best = (*best).min(acc + dist[at][v]);
            return;
        }
        for i in 0..rest.len() {
            let next = rest.swap_remove(i);
            go(dist, rest, next, v, acc + dist[at][next], best);
            rest.push(next);
            let last = rest.len() - 1;
            rest.swap(i, last);
        }
    }
    let mut best = u32::MAX;
    go(dist, &mut set.to_vec(), u, v, 0, &mut best);
    best
}

pub fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().map(|(u, v)| (u.min(v), u.max(v))).collect()
}

/// Connected graph: random spanning tree plus each other pair with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut edges = BTreeSet::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        let (a, b) = (order[i], order[j]);
        edges.insert((a.min(b), a.max(b)));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Graph::from_edge_list(n, &edges, false).unwrap()
}

/// Uniform labelled tree via a Prüfer sequence.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    if n < 2 {
        return Graph::empty(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let code: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edge_list(n, &edges, false).unwrap()
}

/// Random graph on `n - 1` vertices plus one vertex adjacent to all of them.
pub fn random_with_apex(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|u| (u, n - 1)).collect();
    for u in 0..n - 1 {
        for v in u + 1..n - 1 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges, false).unwrap()
}

/// Sum over edges of products of strictly-closer counts, straight from distances.
pub fn szeged_from_distances(g: &Graph) -> u128 {
    let dist = bfs_matrix(g);
    g.edges()
        .map(|(u, v)| {
            let nu = (0..g.vertex_count())
                .filter(|&z| dist[z][u] < dist[z][v])
                .count() as u128;
            let nv = (0..g.vertex_count())
                .filter(|&z| dist[z][v] < dist[z][u])
                .count() as u128;
            nu * nv
        })
        .sum()
}

pub fn wiener_from_distances(g: &Graph) -> u128 {
    let dist = bfs_matrix(g);
    dist.iter().flatten().map(|&d| d as u128).sum::<u128>() / 2
}

pub const CORPUS_BASES: [&str; 5] = ["K2", "K3", "P3", "C3", "C4"];
pub const CORPUS_LAMPS: [&str; 5] = ["K2", "K3", "P3", "C3", "paw"];

pub fn named(name: &str) -> Graph {
    let n: usize = name[1..].parse().unwrap_or(0);
    match &name[..1] {
        "K" => Graph::complete(n),
        "P" => Graph::path(n),
        "C" => Graph::cycle(n),
        _ => Graph::paw(),
    }
}

/// `n * m^n`
pub fn wreath_order(g: &Graph, h: &Graph) -> usize {
    g.vertex_count() * h.vertex_count().pow(g.vertex_count() as u32)
}
