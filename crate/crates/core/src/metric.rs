//! Distances in `G ≀ H` without building the product.
//!
//! For `u = (y, x)` and `v = (y', x')`,
//! `d(u, v) = Σ_i d_H(y_i, y'_i) + ρ_{δ(y, y')}(x, x')` where `δ(y, y')` is the
//! set of base vertices whose lamps differ.

use std::sync::OnceLock;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::products::{
    direct_product, power, wreath_codec_checked, ProductKind, WreathCodec, WreathVertex,
};
use crate::tsp::{RhoSolver, RhoTable, VertexSubset};

// Base graphs up to this size get a full ρ table; larger ones solve per query.
const TABLE_LIMIT: usize = 10;

/// Distance oracle for `G ≀ H`.
pub struct WreathMetric {
    n: usize,
    m: usize,
    h_dist: DistanceMatrix,
    solver: RhoSolver,
    table: Option<RhoTable>,
    hamiltonian: OnceLock<Result<(Vec<u32>, u32)>>,
}

impl WreathMetric {
    pub fn new(g: &Graph, h: &Graph, budget: &Budget) -> Result<Self> {
        g.require_simple()?;
        h.require_simple()?;
        let (n, m) = (g.vertex_count(), h.vertex_count());
        if n < 2 || m < 2 {
            return Err(Error::TrivialFactor);
        }
        let h_dist = h.all_pairs_distances();
        if !h_dist.is_connected() {
            return Err(Error::Disconnected);
        }
        let solver = RhoSolver::new(g, budget)?;
        let table = if n <= TABLE_LIMIT.min(budget.max_subset_vertices) {
            Some(RhoTable::new(g, budget)?)
        } else {
            None
        };
        Ok(WreathMetric {
            n,
            m,
            h_dist,
            solver,
            table,
            hamiltonian: OnceLock::new(),
        })
    }

    pub fn base_size(&self) -> usize {
        self.n
    }

    pub fn colour_count(&self) -> usize {
        self.m
    }

    fn check(&self, w: &WreathVertex) -> Result<()> {
        if w.config.len() != self.n || w.position >= self.n {
            return Err(Error::InvalidArgument(format!(
                "{w:?} is not a vertex of a wreath product over {} base vertices",
                self.n
            )));
        }
        match w.config.iter().find(|&&y| y >= self.m) {
            Some(&bad) => Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.m,
            }),
            None => Ok(()),
        }
    }

    /// `δ(y, y')`.
    pub fn delta(&self, y: &[usize], y2: &[usize]) -> VertexSubset {
        let mut s = VertexSubset::empty(self.n);
        for (i, (a, b)) in y.iter().zip(y2).enumerate() {
            if a != b {
                s.insert(i);
            }
        }
        s
    }

    pub fn distance(&self, u: &WreathVertex, v: &WreathVertex) -> Result<u32> {
        self.check(u)?;
        self.check(v)?;
        let lamps: u32 = u
            .config
            .iter()
            .zip(&v.config)
            .map(|(&a, &b)| self.h_dist.get(a, b))
            .sum();
        let delta = self.delta(&u.config, &v.config);
        let walk = match (&self.table, delta.to_mask()) {
            (Some(table), Some(mask)) => table.get(mask as usize, u.position, v.position),
            _ => self.solver.rho(&delta, u.position, v.position)?,
        };
        Ok(lamps + walk)
    }

    /// Hamiltonian eccentricities of the base graph and `diam_Ha(G)`.
    pub fn hamiltonian_profile(&self) -> Result<&(Vec<u32>, u32)> {
        self.hamiltonian
            .get_or_init(|| match &self.table {
                Some(t) => Ok(t.matrix((1 << self.n) - 1).eccentricity_and_diameter()),
                None => Ok(self.solver.d_ha()?.eccentricity_and_diameter()),
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    /// `Σ_i e_H(y_i) + e_{G,Ha}(x)`.
    pub fn eccentricity(&self, u: &WreathVertex) -> Result<u32> {
        self.check(u)?;
        let (h_ecc, _) = self.h_dist.eccentricity_and_diameter()?;
        let (g_ecc, _) = self.hamiltonian_profile()?;
        Ok(u.config.iter().map(|&y| h_ecc[y]).sum::<u32>() + g_ecc[u.position])
    }

    /// `n · diam(H) + diam_Ha(G)`.
    pub fn diameter(&self) -> Result<u32> {
        let (_, h_diam) = self.h_dist.eccentricity_and_diameter()?;
        let (_, g_diam) = self.hamiltonian_profile()?;
        Ok(self.n as u32 * h_diam + g_diam)
    }
}

impl std::fmt::Debug for WreathMetric {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("WreathMetric")
            .field("n", &self.n)
            .field("m", &self.m)
            .field("tabulated", &self.table.is_some())
            .finish()
    }
}

pub fn wreath_distance(g: &Graph, h: &Graph, u: &WreathVertex, v: &WreathVertex) -> Result<u32> {
    let budget = Budget {
        max_subset_vertices: 0,
        ..Budget::default()
    };
    WreathMetric::new(g, h, &budget)?.distance(u, v)
}

pub fn wreath_eccentricity(g: &Graph, h: &Graph, u: &WreathVertex) -> Result<u32> {
    WreathMetric::new(g, h, &Budget::default())?.eccentricity(u)
}

pub fn wreath_diameter(g: &Graph, h: &Graph) -> Result<u32> {
    WreathMetric::new(g, h, &Budget::default())?.diameter()
}

/// `A(G)`: `u ~ v` iff `d(u, v) = diam(G)`. A single vertex has no edges.
pub fn antipodal(g: &Graph) -> Result<Graph> {
    g.require_simple()?;
    let dist = g.all_pairs_distances();
    let (_, diam) = dist.eccentricity_and_diameter()?;
    let n = g.vertex_count();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| diam > 0 && dist.get(u, v) == diam)
        .collect();
    Graph::from_edge_list(n, &edges, false)
}

/// `A_Ha(G)`: `u ~ v` iff `d_Ha(u, v) = diam_Ha(G)`; loops allowed.
pub fn hamiltonian_antipodal(g: &Graph) -> Result<Graph> {
    g.require_simple()?;
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TrivialFactor);
    }
    let dha = RhoSolver::new(g, &Budget::default())?.d_ha()?;
    let (_, diam) = dha.eccentricity_and_diameter();
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u..n).map(move |v| (u, v)))
        .filter(|&(u, v)| dha.get(u, v) == diam)
        .collect();
    Graph::from_edge_list(n, &edges, true)
}

/// `A(H)^{×n} × A_Ha(G)` relabelled into [`WreathCodec`] order, together with
/// the connectivity verdict "A(H) and A_Ha(G) connected, A(H) not bipartite".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathAntipodal {
    pub graph: Graph,
    pub predicted_connected: bool,
}

pub fn antipodal_of_wreath(g: &Graph, h: &Graph, budget: &Budget) -> Result<WreathAntipodal> {
    g.require_simple()?;
    h.require_simple()?;
    let codec: WreathCodec = wreath_codec_checked(
        g,
        h,
        budget.max_product_vertices,
        "antipodal product vertices",
    )?;
    let a_h = antipodal(h)?;
    let a_g = hamiltonian_antipodal(g)?;
    let lamps = power(&a_h, codec.base_size(), ProductKind::Direct, budget)?;
    let product = direct_product(&lamps, &a_g);
    let perm: Vec<usize> = (0..codec.vertex_count())
        .map(|k| codec.from_config_major(k))
        .collect();
    let graph = product.relabel(&perm)?;
    let predicted_connected = a_h.is_connected() && a_g.is_connected() && !a_h.is_bipartite();
    Ok(WreathAntipodal {
        graph,
        predicted_connected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::wreath_product;

    fn vertex(config: &[usize], position: usize) -> WreathVertex {
        WreathVertex {
            config: config.to_vec(),
            position,
        }
    }

    #[test]
    fn k2_wreath_c3_distances() {
        let (g, h) = (Graph::complete(2), Graph::cycle(3));
        let metric = WreathMetric::new(&g, &h, &Budget::default()).unwrap();
        let u = vertex(&[0, 0], 0);
        assert_eq!(metric.distance(&u, &u).unwrap(), 0);
        assert_eq!(metric.distance(&u, &vertex(&[1, 2], 0)).unwrap(), 4);
        assert_eq!(metric.distance(&u, &vertex(&[1, 2], 1)).unwrap(), 3);
        assert_eq!(metric.diameter().unwrap(), 4);
        assert_eq!(wreath_diameter(&g, &h).unwrap(), 4);
        assert_eq!(wreath_eccentricity(&g, &h, &u).unwrap(), 4);
    }

    #[test]
    fn matches_bfs_on_small_products() {
        let pairs = [
            (Graph::complete(2), Graph::cycle(3)),
            (Graph::path(3), Graph::complete(2)),
            (Graph::complete(2), Graph::paw()),
        ];
        for (g, h) in pairs {
            let product = wreath_product(&g, &h, &Budget::default()).unwrap();
            let codec = WreathCodec::new(g.vertex_count(), h.vertex_count()).unwrap();
            let metric = WreathMetric::new(&g, &h, &Budget::default()).unwrap();
            let dist = product.all_pairs_distances();
            for i in 0..codec.vertex_count() {
                let u = codec.decode(i);
                for j in 0..codec.vertex_count() {
                    assert_eq!(
                        metric.distance(&u, &codec.decode(j)).unwrap(),
                        dist.get(i, j)
                    );
                }
            }
        }
    }

    #[test]
    fn solver_path_agrees_with_table() {
        let (g, h) = (Graph::cycle(4), Graph::path(3));
        let tabled = WreathMetric::new(&g, &h, &Budget::default()).unwrap();
        let u = vertex(&[0, 1, 2, 0], 1);
        let v = vertex(&[2, 1, 0, 1], 3);
        assert_eq!(
            tabled.distance(&u, &v).unwrap(),
            wreath_distance(&g, &h, &u, &v).unwrap()
        );
    }

    #[test]
    fn hamilton_connected_base_diameter() {
        for (n, h) in [(3, Graph::path(3)), (4, Graph::cycle(5)), (2, Graph::paw())] {
            let (_, dh) = h.eccentricity_and_diameter().unwrap();
            let d = wreath_diameter(&Graph::complete(n), &h).unwrap();
            assert_eq!(d, n as u32 * (dh + 1));
        }
        let p2 = Graph::path(2);
        let product = wreath_product(&p2, &p2, &Budget::default()).unwrap();
        assert_eq!(product.vertex_count(), 8);
        assert_eq!(wreath_diameter(&p2, &p2).unwrap(), 4);
        assert_eq!(product.eccentricity_and_diameter().unwrap().1, 4);
    }

    #[test]
    fn metric_errors() {
        let g = Graph::complete(2);
        let h = Graph::disjoint_union(&[Graph::complete(1), Graph::complete(1)]);
        assert_eq!(
            WreathMetric::new(&g, &h, &Budget::default()).unwrap_err(),
            Error::Disconnected
        );
        assert_eq!(
            WreathMetric::new(&Graph::complete(1), &g, &Budget::default()).unwrap_err(),
            Error::TrivialFactor
        );
        let metric = WreathMetric::new(&g, &g, &Budget::default()).unwrap();
        assert!(metric
            .distance(&vertex(&[0], 0), &vertex(&[0, 0], 0))
            .is_err());
        assert!(metric
            .distance(&vertex(&[0, 2], 0), &vertex(&[0, 0], 0))
            .is_err());
    }

    #[test]
    fn classical_antipodal_graphs() {
        for n in 2..8 {
            assert_eq!(antipodal(&Graph::complete(n)).unwrap(), Graph::complete(n));
            let ap = antipodal(&Graph::path(n)).unwrap();
            assert_eq!(ap.edge_list(), vec![(0, n - 1)]);
            assert_eq!(ap.component_count(), n - 1);
        }
        let c6 = antipodal(&Graph::cycle(6)).unwrap();
        assert_eq!(c6.edge_list(), vec![(0, 3), (1, 4), (2, 5)]);
        let c5 = antipodal(&Graph::cycle(5)).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert_eq!(c5.regular_degree(), Some(2));
        assert!(c5.is_connected());
        assert_eq!(antipodal(&Graph::complete(1)).unwrap().edge_count(), 0);
        assert_eq!(
            antipodal(&Graph::path(1).add_loops().unwrap()),
            Err(Error::LoopyInput)
        );
    }

    #[test]
    fn hamiltonian_antipodal_graphs() {
        for n in 2..7 {
            assert_eq!(
                hamiltonian_antipodal(&Graph::complete(n)).unwrap(),
                Graph::loops_only(n)
            );
            assert_eq!(
                hamiltonian_antipodal(&Graph::path(n)).unwrap(),
                Graph::loops_only(n)
            );
        }
        for n in [4, 5] {
            let expected = antipodal(&Graph::cycle(n)).unwrap().add_loops().unwrap();
            assert_eq!(hamiltonian_antipodal(&Graph::cycle(n)).unwrap(), expected);
        }
        let c6 = hamiltonian_antipodal(&Graph::cycle(6)).unwrap();
        assert_eq!(c6.loop_count(), 0);
        assert_eq!(
            c6.edge_list(),
            antipodal(&Graph::cycle(6)).unwrap().edge_list()
        );
        assert_eq!(
            hamiltonian_antipodal(&Graph::complete(1)),
            Err(Error::TrivialFactor)
        );
    }

    #[test]
    fn wreath_antipodal_k2_c3() {
        let (g, h) = (Graph::complete(2), Graph::cycle(3));
        let built = antipodal_of_wreath(&g, &h, &Budget::default()).unwrap();
        let brute = antipodal(&wreath_product(&g, &h, &Budget::default()).unwrap()).unwrap();
        assert_eq!(built.graph.edge_list(), brute.edge_list());
        assert_eq!(brute.component_count(), 2);
        assert!(!built.predicted_connected);
    }

    #[test]
    fn wreath_antipodal_complete_factors() {
        // A(K_n ≀ K_m) is n disjoint copies of K_m^{×n}
        let (g, h) = (Graph::complete(3), Graph::complete(2));
        let built = antipodal_of_wreath(&g, &h, &Budget::default()).unwrap();
        let brute = antipodal(&wreath_product(&g, &h, &Budget::default()).unwrap()).unwrap();
        assert_eq!(built.graph.edge_list(), brute.edge_list());
        let k2_cubed = power(&h, 3, ProductKind::Direct, &Budget::default()).unwrap();
        assert_eq!(brute.component_count(), 3 * k2_cubed.component_count());
        assert_eq!(brute.edge_count(), 3 * k2_cubed.edge_count());
    }
}
