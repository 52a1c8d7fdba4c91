//! Finite undirected graphs on dense vertex ids `0..n`, optionally with loops.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Distance value standing for "no path".
pub const INFINITY: u32 = u32::MAX;

/// Undirected graph with sorted adjacency lists.
///
/// Loops are only representable when `allows_loops` is set, and then appear
/// once in the owning vertex's list. A loop adds 2 to the degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    allows_loops: bool,
}

/// Standard graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Complete,
    Cycle,
    Path,
    /// `O_n`: one loop at every vertex and nothing else.
    LoopsOnly,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "complete" | "K" => Ok(Family::Complete),
            "cycle" | "C" => Ok(Family::Cycle),
            "path" | "P" => Ok(Family::Path),
            "loops_only" | "loops" | "O" => Ok(Family::LoopsOnly),
            other => Err(Error::InvalidFamily(other.to_string())),
        }
    }
}

impl Graph {
    /// Graph on `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            allows_loops: false,
        }
    }

    pub fn from_edge_list(n: usize, edges: &[(usize, usize)], allow_loops: bool) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                if !allow_loops {
                    return Err(Error::LoopNotAllowed(u));
                }
                adjacency[u].push(u);
            } else {
                adjacency[u].push(v);
                adjacency[v].push(u);
            }
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            allows_loops: allow_loops,
        })
    }

    /// Builds a graph from adjacency lists that are already symmetric and
    /// duplicate-free; lists are sorted here.
    pub(crate) fn from_adjacency_unchecked(
        mut adjacency: Vec<Vec<usize>>,
        allows_loops: bool,
    ) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
        }
        debug_assert!(adjacency.iter().enumerate().all(|(u, l)| {
            l.windows(2).all(|w| w[0] < w[1])
                && l.iter().all(|&v| adjacency[v].binary_search(&u).is_ok())
                && (allows_loops || l.binary_search(&u).is_err())
        }));
        Graph {
            adjacency,
            allows_loops,
        }
    }

    pub fn family(kind: Family, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidFamily(format!(
                "{kind:?} needs at least one vertex"
            )));
        }
        let edges: Vec<(usize, usize)> = match kind {
            Family::Complete => (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect(),
            Family::Cycle => {
                if n < 3 {
                    return Err(Error::InvalidFamily(format!("cycle needs n >= 3, got {n}")));
                }
                (0..n).map(|u| (u, (u + 1) % n)).collect()
            }
            Family::Path => (1..n).map(|u| (u - 1, u)).collect(),
            Family::LoopsOnly => (0..n).map(|u| (u, u)).collect(),
        };
        Graph::from_edge_list(n, &edges, kind == Family::LoopsOnly)
    }

    pub fn complete(n: usize) -> Self {
        Self::family(Family::Complete, n).expect("K_n with n >= 1")
    }

    pub fn cycle(n: usize) -> Self {
        Self::family(Family::Cycle, n).expect("C_n with n >= 3")
    }

    /// `P_n` labelled `0 ~ 1 ~ ... ~ n-1`; internal vertex `i` is label `i+1`.
    pub fn path(n: usize) -> Self {
        Self::family(Family::Path, n).expect("P_n with n >= 1")
    }

    pub fn loops_only(n: usize) -> Self {
        Self::family(Family::LoopsOnly, n).expect("O_n with n >= 1")
    }

    /// The paw: a triangle `{0,1,2}` with a pendant vertex 3 attached to 2.
    pub fn paw() -> Self {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], false).expect("paw")
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edge records; a loop counts once.
    pub fn edge_count(&self) -> usize {
        let loops = self.loop_count();
        let incidences: usize = self.adjacency.iter().map(Vec::len).sum();
        (incidences - loops) / 2 + loops
    }

    pub fn loop_count(&self) -> usize {
        self.adjacency
            .iter()
            .enumerate()
            .filter(|(u, l)| l.binary_search(u).is_ok())
            .count()
    }

    pub fn allows_loops(&self) -> bool {
        self.allows_loops
    }

    /// True when no loop is present, whatever the flag says.
    pub fn is_simple(&self) -> bool {
        self.loop_count() == 0
    }

    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adjacency[u]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.has_edge(u, u)
    }

    /// Degree with the loop-counts-twice convention.
    pub fn degree(&self, u: usize) -> usize {
        self.adjacency[u].len() + usize::from(self.has_loop(u))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.vertex_count()).map(|u| self.degree(u)).collect()
    }

    /// `Some(r)` when every vertex has degree `r`.
    pub fn regular_degree(&self) -> Option<usize> {
        let mut degrees = (0..self.vertex_count()).map(|u| self.degree(u));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Edges as `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| v >= u)
                .map(move |v| (u, v))
        })
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// `G°`: the graph with a loop added at every vertex.
    pub fn add_loops(&self) -> Result<Graph> {
        if self.allows_loops || !self.is_simple() {
            return Err(Error::AlreadyLooped);
        }
        let adjacency = self
            .adjacency
            .iter()
            .enumerate()
            .map(|(u, list)| {
                let mut l = list.clone();
                l.push(u);
                l
            })
            .collect();
        Ok(Graph::from_adjacency_unchecked(adjacency, true))
    }

    /// Renames vertex `u` to `perm[u]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.vertex_count();
        if perm.len() != n {
            return Err(Error::InvalidArgument(format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                n
            )));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let mut adjacency = vec![Vec::new(); n];
        for (u, list) in self.adjacency.iter().enumerate() {
            adjacency[perm[u]] = list.iter().map(|&v| perm[v]).collect();
        }
        Ok(Graph::from_adjacency_unchecked(
            adjacency,
            self.allows_loops,
        ))
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let adjacency = vertices
            .iter()
            .map(|&v| {
                self.adjacency[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Graph::from_adjacency_unchecked(adjacency, self.allows_loops)
    }

    /// Single-source BFS distances; `INFINITY` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<u32> {
        let mut dist = vec![INFINITY; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &v in &self.adjacency[u] {
                if dist[v] == INFINITY {
                    dist[v] = next;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn all_pairs_distances(&self) -> DistanceMatrix {
        let n = self.vertex_count();
        let rows: Vec<Vec<u32>> = (0..n).into_par_iter().map(|s| self.bfs(s)).collect();
        DistanceMatrix {
            size: n,
            entries: rows.concat(),
        }
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() == 0 || self.bfs(0).iter().all(|&d| d != INFINITY)
    }

    pub fn component_count(&self) -> usize {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            count += 1;
            seen[s] = true;
            stack.push(s);
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        count
    }

    /// Per-vertex eccentricities and the diameter of a connected graph.
    pub fn eccentricity_and_diameter(&self) -> Result<(Vec<u32>, u32)> {
        self.all_pairs_distances().eccentricity_and_diameter()
    }

    /// 2-colourability; a loop makes a graph non-bipartite.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertex_count();
        let mut colour = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adjacency[u] {
                    if colour[v] == u8::MAX {
                        colour[v] = 1 - colour[u];
                        queue.push_back(v);
                    } else if colour[v] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Disjoint union with vertex blocks in argument order.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let mut adjacency = Vec::new();
        let mut offset = 0;
        for g in graphs {
            adjacency.extend(
                g.adjacency
                    .iter()
                    .map(|l| l.iter().map(|&v| v + offset).collect::<Vec<_>>()),
            );
            offset += g.vertex_count();
        }
        let allows_loops = graphs.iter().any(|g| g.allows_loops);
        Graph::from_adjacency_unchecked(adjacency, allows_loops)
    }

    /// Dense 0/1 adjacency matrix, row-major.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.vertex_count();
        let mut m = vec![vec![0u8; n]; n];
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                m[u][v] = 1;
            }
        }
        m
    }

    pub(crate) fn require_simple(&self) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::LoopyInput)
        }
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("allows_loops", &self.allows_loops)
            .field("edges", &self.edge_list())
            .finish()
    }
}

/// All-pairs distances, row-major, with `INFINITY` for disconnected pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.entries[u * self.size + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.entries[u * self.size..(u + 1) * self.size]
    }

    pub fn is_connected(&self) -> bool {
        !self.entries.contains(&INFINITY)
    }

    pub fn eccentricity_and_diameter(&self) -> Result<(Vec<u32>, u32)> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let ecc: Vec<u32> = (0..self.size)
            .map(|u| self.row(u).iter().copied().max().unwrap_or(0))
            .collect();
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        Ok((ecc, diameter))
    }

    /// Sum over ordered pairs; requires a connected graph.
    pub fn ordered_sum(&self) -> Result<u128> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.entries.iter().map(|&d| d as u128).sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paw_from_edge_list() {
        let paw = Graph::from_edge_list(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], false).unwrap();
        assert_eq!(paw, Graph::paw());
        assert_eq!(paw.degrees(), vec![2, 2, 3, 1]);
        assert_eq!(paw.edge_count(), 4);
        // d(a, d) where a = 0, d = 3
        assert_eq!(paw.all_pairs_distances().get(0, 3), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 3)], false),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)], false),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1)], false),
            Err(Error::LoopNotAllowed(1))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(1, 1), (1, 1)], true),
            Err(Error::DuplicateEdge(1, 1))
        );
    }

    #[test]
    fn single_vertex_and_triangle() {
        let g = Graph::from_edge_list(1, &[], false).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        let c3 = Graph::from_edge_list(3, &[(0, 1), (1, 2), (2, 0)], false).unwrap();
        assert_eq!(c3, Graph::cycle(3));
        assert_eq!(c3, Graph::complete(3));
        assert_eq!(c3.regular_degree(), Some(2));
    }

    #[test]
    fn families() {
        let k6 = Graph::complete(6);
        assert_eq!(k6.edge_count(), 15);
        assert_eq!(k6.regular_degree(), Some(5));
        let p9 = Graph::path(9);
        assert_eq!(p9.edge_count(), 8);
        // labels 1 and 9 are internal 0 and 8
        assert_eq!(p9.all_pairs_distances().get(0, 8), 8);
        let o2 = Graph::loops_only(2);
        assert_eq!(o2.vertex_count(), 2);
        assert_eq!(o2.edge_count(), 2);
        assert_eq!(o2.loop_count(), 2);
        assert_eq!(o2.edge_list(), vec![(0, 0), (1, 1)]);
        assert!(Graph::family(Family::Cycle, 2).is_err());
        assert!(Graph::family(Family::Complete, 0).is_err());
        assert_eq!(Graph::cycle(5).edge_count(), 5);
    }

    #[test]
    fn add_loops_cases() {
        assert_eq!(
            Graph::complete(1).add_loops().unwrap(),
            Graph::loops_only(1)
        );
        let c4o = Graph::cycle(4).add_loops().unwrap();
        assert_eq!(c4o.edge_count(), 8);
        assert_eq!(c4o.degree(0), 4);
        assert_eq!(c4o.add_loops(), Err(Error::AlreadyLooped));
    }

    #[test]
    fn distances_on_path() {
        let d = Graph::path(9).all_pairs_distances();
        assert_eq!(d.get(2, 6), 4);
        for u in 0..9 {
            assert_eq!(d.get(u, u), 0);
        }
    }

    #[test]
    fn infinity_for_disconnected() {
        let g = Graph::disjoint_union(&[Graph::complete(2), Graph::complete(1)]);
        let d = g.all_pairs_distances();
        assert_eq!(d.get(0, 2), INFINITY);
        assert!(!d.is_connected());
        assert_eq!(g.eccentricity_and_diameter(), Err(Error::Disconnected));
        assert_eq!(g.component_count(), 2);
    }

    #[test]
    fn classical_diameters() {
        for n in 2..9 {
            assert_eq!(Graph::complete(n).eccentricity_and_diameter().unwrap().1, 1);
            assert_eq!(
                Graph::path(n).eccentricity_and_diameter().unwrap().1,
                n as u32 - 1
            );
            if n >= 3 {
                assert_eq!(
                    Graph::cycle(n).eccentricity_and_diameter().unwrap().1,
                    (n / 2) as u32
                );
            }
        }
    }

    #[test]
    fn bipartite_checks() {
        assert!(Graph::cycle(4).is_bipartite());
        assert!(!Graph::cycle(3).is_bipartite());
        assert!(!Graph::loops_only(1).is_bipartite());
        assert!(Graph::empty(0).is_bipartite());
    }

    #[test]
    fn disjoint_unions() {
        let two_k2 = Graph::disjoint_union(&[Graph::complete(2), Graph::complete(2)]);
        assert_eq!(two_k2.edge_list(), vec![(0, 1), (2, 3)]);
        assert_eq!(Graph::disjoint_union(&[]).vertex_count(), 0);
        let ap9 = Graph::disjoint_union(&[Graph::complete(2), Graph::empty(7)]);
        assert_eq!(ap9.vertex_count(), 9);
        assert_eq!(ap9.edge_count(), 1);
    }

    #[test]
    fn relabel_rejects_non_permutations() {
        let g = Graph::path(3);
        assert!(g.relabel(&[0, 0, 1]).is_err());
        assert_eq!(g.relabel(&[2, 1, 0]).unwrap(), g);
        assert_eq!(
            g.relabel(&[1, 0, 2]).unwrap().edge_list(),
            vec![(0, 1), (0, 2)]
        );
    }
}
