//! Looks for non-isomorphic connected graphs sharing a Wiener vector.
//!
//! Graphs are enumerated as labelled edge sets and reduced to one
//! representative per isomorphism class by taking the smallest edge mask over
//! all vertex permutations, so this is only practical for tiny orders.

use std::collections::BTreeMap;

use rayon::prelude::*;
use wreathlab::invariants::{wiener_vector, WienerVector};
use wreathlab::{Budget, Graph};

pub const MAX_ORDER: usize = 6;

#[derive(Debug, Clone)]
pub struct Collision {
    pub order: usize,
    pub vector: WienerVector,
    pub graphs: Vec<Graph>,
}

#[derive(Debug, Clone, Default)]
pub struct SearchSummary {
    /// `(order, connected isomorphism classes)`
    pub classes: Vec<(usize, usize)>,
    pub collisions: Vec<Collision>,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                extend(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn canonical_mask(mask: u32, n: usize, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    let mut index = vec![vec![0usize; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .fold(0u32, |acc, (_, &(u, v))| acc | 1 << index[p[u]][p[v]])
        })
        .min()
        .expect("at least one permutation")
}

fn graph_of(mask: u32, n: usize, pairs: &[(usize, usize)]) -> Graph {
    let edges: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e)
        .collect();
    Graph::from_edge_list(n, &edges, false).expect("valid edge list")
}

/// Connected graphs of order `n`, one per isomorphism class.
pub fn connected_classes(n: usize) -> Vec<Graph> {
    let pairs = pairs(n);
    let perms = permutations(n);
    let mut reps: Vec<u32> = (0..1u32 << pairs.len())
        .into_par_iter()
        .filter(|&mask| graph_of(mask, n, &pairs).is_connected())
        .map(|mask| canonical_mask(mask, n, &pairs, &perms))
        .collect();
    reps.sort_unstable();
    reps.dedup();
    reps.into_iter().map(|m| graph_of(m, n, &pairs)).collect()
}

pub fn search(min_order: usize, max_order: usize) -> SearchSummary {
    let mut summary = SearchSummary::default();
    for n in min_order.max(1)..=max_order {
        let classes = connected_classes(n);
        summary.classes.push((n, classes.len()));
        let mut groups: BTreeMap<String, (WienerVector, Vec<Graph>)> = BTreeMap::new();
        for g in classes {
            let vector = wiener_vector(&g, &Budget::default()).expect("small connected graph");
            groups
                .entry(vector.to_string())
                .or_insert_with(|| (vector, Vec::new()))
                .1
                .push(g);
        }
        summary.collisions.extend(
            groups
                .into_values()
                .filter(|(_, graphs)| graphs.len() > 1)
                .map(|(vector, graphs)| Collision {
                    order: n,
                    vector,
                    graphs,
                }),
        );
    }
    summary
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        // connected graphs on 1..=5 vertices up to isomorphism
        let counts: Vec<usize> = (1..=5).map(|n| connected_classes(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn c4_and_paw_are_separated() {
        // C_4 and the paw are the only connected 4-vertex graphs with 4 edges
        let summary = search(4, 4);
        for c in &summary.collisions {
            assert!(c.graphs.iter().filter(|g| g.edge_count() == 4).count() < 2);
        }
    }
}
