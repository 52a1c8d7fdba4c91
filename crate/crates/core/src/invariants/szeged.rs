use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;

use crate::budget::{ensure, Budget};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};
use crate::products::{wreath_codec_checked, wreath_product};
use crate::tsp::{RhoSolver, RhoTable, VertexSubset};

use super::{is_complete, pow, wreath_factors};

// (#{w : d(w,u) < d(w,v)}, #{w : d(w,v) < d(w,u)}) for a symmetric distance-like table
fn side_counts(row_u: &[u32], row_v: &[u32]) -> (usize, usize) {
    row_u.iter().zip(row_v).fold((0, 0), |(a, b), (&du, &dv)| {
        (a + usize::from(du < dv), b + usize::from(dv < du))
    })
}

fn szeged_from_distances(
    dist: &DistanceMatrix,
    edges: impl Iterator<Item = (usize, usize)>,
) -> BigUint {
    let total: u128 = edges
        .map(|(u, v)| {
            let (a, b) = side_counts(dist.row(u), dist.row(v));
            (a * b) as u128
        })
        .sum();
    total.into()
}

/// `Σ_{uv ∈ E} n_u(e) n_v(e)`.
pub fn szeged(g: &Graph) -> Result<BigUint> {
    g.require_simple()?;
    let dist = g.all_pairs_distances();
    if !dist.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(szeged_from_distances(&dist, g.edges()))
}

/// `(n_u(e), n_v(e))` for the edge `e = {u, v}`.
pub fn edge_side_counts(g: &Graph, e: (usize, usize)) -> Result<(usize, usize)> {
    g.require_simple()?;
    if !g.has_edge(e.0, e.1) {
        return Err(Error::NotAnEdge(e.0, e.1));
    }
    let dist = g.all_pairs_distances();
    if !dist.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(side_counts(dist.row(e.0), dist.row(e.1)))
}

/// `(n_{x_j}(e, ρ_A), n_{x_k}(e, ρ_A))` for `e = {x_j, x_k}`.
pub fn szeged_rho_counts(
    g: &Graph,
    a: &VertexSubset,
    e: (usize, usize),
    budget: &Budget,
) -> Result<(usize, usize)> {
    g.require_simple()?;
    if !g.has_edge(e.0, e.1) {
        return Err(Error::NotAnEdge(e.0, e.1));
    }
    let rho = RhoSolver::new(g, budget)?.rho_matrix(a)?;
    Ok(side_counts(rho.row(e.0), rho.row(e.1)))
}

/// `Sz(G, A, B) = Σ_{e = {x_j, x_k}} n_{x_j}(e, ρ_A) n_{x_k}(e, ρ_B)` with each
/// edge oriented `j < k`.
pub fn sz_g_a_b(g: &Graph, a: &VertexSubset, b: &VertexSubset, budget: &Budget) -> Result<BigUint> {
    g.require_simple()?;
    let solver = RhoSolver::new(g, budget)?;
    let rho_a = solver.rho_matrix(a)?;
    let rho_b = solver.rho_matrix(b)?;
    let total: u128 = g
        .edges()
        .map(|(j, k)| {
            let (nj, _) = side_counts(rho_a.row(j), rho_a.row(k));
            let (_, nk) = side_counts(rho_b.row(j), rho_b.row(k));
            (nj * nk) as u128
        })
        .sum();
    Ok(total.into())
}

/// Per-edge side counts under every `ρ_A`, summed by `|A|`.
///
/// `counts(e, side)[k] = Σ_{|A| = k} n_{x}(e, ρ_A)` where `x` is the smaller
/// (`side = 0`) or larger (`side = 1`) endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SzegedProfile {
    n: usize,
    edges: Vec<(usize, usize)>,
    counts: Vec<[Vec<u64>; 2]>,
}

impl SzegedProfile {
    pub fn new(g: &Graph, budget: &Budget) -> Result<Self> {
        Self::for_edges(g, &g.edge_list(), budget)
    }

    pub fn for_edges(g: &Graph, edges: &[(usize, usize)], budget: &Budget) -> Result<Self> {
        g.require_simple()?;
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
            return Err(Error::NotAnEdge(u, v));
        }
        let n = g.vertex_count();
        let table = RhoTable::new(g, budget)?;
        let empty = || vec![[vec![0u64; n + 1], vec![0u64; n + 1]]; edges.len()];
        let counts = (0..1usize << n)
            .into_par_iter()
            .fold(empty, |mut acc, set| {
                let k = set.count_ones() as usize;
                for (slot, &(u, v)) in acc.iter_mut().zip(edges) {
                    let (a, b) = (0..n).fold((0u64, 0u64), |(a, b), w| {
                        let (du, dv) = (table.get(set, u, w), table.get(set, v, w));
                        (a + u64::from(du < dv), b + u64::from(dv < du))
                    });
                    slot[0][k] += a;
                    slot[1][k] += b;
                }
                acc
            })
            .reduce(empty, |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    for side in 0..2 {
                        x[side].iter_mut().zip(&y[side]).for_each(|(p, q)| *p += q);
                    }
                }
                a
            });
        Ok(SzegedProfile {
            n,
            edges: edges.to_vec(),
            counts,
        })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn counts(&self, edge: usize, side: usize) -> &[u64] {
        &self.counts[edge][side]
    }

    /// `Σ_A (m-1)^{|A|} n_x(e, ρ_A)`: the side count of a type II edge of
    /// `G ≀ H` lying over `e`.
    pub fn weighted(&self, edge: usize, side: usize, m: usize) -> BigUint {
        let w = BigUint::from(m - 1);
        let mut power = BigUint::from(1u32);
        let mut total = BigUint::zero();
        for &c in &self.counts[edge][side] {
            total += &power * c;
            power *= &w;
        }
        total
    }

    /// `m^n Σ_e n_u(E) n_v(E)` over the profiled edges.
    pub fn type_two_sum(&self, m: usize) -> BigUint {
        let sum: BigUint = (0..self.edges.len())
            .map(|e| self.weighted(e, 0, m) * self.weighted(e, 1, m))
            .sum();
        pow(m, self.n) * sum
    }
}

/// `Σ_{A,B} (m-1)^{|A|+|B|} Sz(G, A, B)` evaluated term by term.
pub fn szeged_subset_pair_sum(g: &Graph, m: usize, budget: &Budget) -> Result<BigUint> {
    g.require_simple()?;
    if m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()));
    }
    let n = g.vertex_count();
    ensure(
        "subset pair base size",
        n as u128,
        budget.max_subset_pair_vertices,
    )?;
    let table = RhoTable::new(g, budget)?;
    let edges = g.edge_list();
    let sets = 1usize << n;
    // per_set[S][e] = (n_{x_j}(e, ρ_S), n_{x_k}(e, ρ_S))
    let per_set: Vec<Vec<(u64, u64)>> = (0..sets)
        .map(|set| {
            let rho = table.matrix(set);
            edges
                .iter()
                .map(|&(j, k)| {
                    let (a, b) = side_counts(rho.row(j), rho.row(k));
                    (a as u64, b as u64)
                })
                .collect()
        })
        .collect();
    let weights: Vec<BigUint> = (0..=2 * n).map(|e| pow(m - 1, e)).collect();
    let total = (0..sets)
        .into_par_iter()
        .map(|a| {
            let mut partial = BigUint::zero();
            for b in 0..sets {
                let sz: u64 = per_set[a]
                    .iter()
                    .zip(&per_set[b])
                    .map(|(x, y)| x.0 * y.1)
                    .sum();
                partial += &weights[(a.count_ones() + b.count_ones()) as usize] * sz;
            }
            partial
        })
        .sum();
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SzegedMethod {
    /// Subset sums over every edge of `G`.
    General,
    /// Caller asserts `G` is edge-transitive; one edge stands for all.
    EdgeTransitive,
    /// `G ≅ K_n`, closed form.
    CompleteClosed,
}

pub fn szeged_wreath(
    g: &Graph,
    h: &Graph,
    method: SzegedMethod,
    budget: &Budget,
) -> Result<BigUint> {
    let (n, m) = wreath_factors(g, h)?;
    let type_one = pow(n, 3) * pow(m, 3 * n - 3) * szeged(h)?;
    let type_two = match method {
        SzegedMethod::General => SzegedProfile::new(g, budget)?.type_two_sum(m),
        SzegedMethod::EdgeTransitive => {
            let edge = g
                .edges()
                .next()
                .expect("connected graph on two or more vertices");
            let profile = SzegedProfile::for_edges(g, &[edge], budget)?;
            profile.type_two_sum(m) * g.edge_count()
        }
        SzegedMethod::CompleteClosed => {
            if !is_complete(g) {
                return Err(Error::MethodMismatch(
                    "complete_closed needs a complete base graph".into(),
                ));
            }
            complete_type_two(n, m)
        }
    };
    Ok(type_one + type_two)
}

// ½ m^n n(n-1) (m + m^{n-2}(m² + mn - 3m - n + 2))²
fn complete_type_two(n: usize, m: usize) -> BigUint {
    let (nn, mm) = (BigInt::from(n), BigInt::from(m));
    let inner = &mm * &mm + &mm * &nn - 3 * &mm - &nn + 2;
    let side = &mm + BigInt::from(pow(m, n - 2)) * inner;
    let total: BigInt = BigInt::from(pow(m, n)) * BigInt::from(n * (n - 1)) * &side * &side / 2;
    total.to_biguint().expect("nonnegative")
}

pub fn szeged_wreath_bruteforce(g: &Graph, h: &Graph, budget: &Budget) -> Result<BigUint> {
    wreath_factors(g, h)?;
    szeged(&wreath_product(g, h, budget)?)
}

/// Brute-force `(Sz_I, Sz_II)`: contributions of lamp-switching edges and of
/// lamplighter moves.
pub fn szeged_by_edge_type(g: &Graph, h: &Graph, budget: &Budget) -> Result<(BigUint, BigUint)> {
    wreath_factors(g, h)?;
    let codec = wreath_codec_checked(g, h, budget.max_product_vertices, "wreath product vertices")?;
    let product = wreath_product(g, h, budget)?;
    let dist = product.all_pairs_distances();
    let (switches, moves): (Vec<_>, Vec<_>) = product
        .edges()
        .partition(|&(u, v)| codec.position_of(u) == codec.position_of(v));
    Ok((
        szeged_from_distances(&dist, switches.into_iter()),
        szeged_from_distances(&dist, moves.into_iter()),
    ))
}
