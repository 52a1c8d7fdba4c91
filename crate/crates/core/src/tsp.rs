//! Shortest walks from `u` to `v` that visit a mandatory vertex set `A`.
//!
//! `ρ_A(u, v)` is the length of such a walk; vertices may repeat. Over the
//! metric closure of `G` this is a path-TSP with fixed endpoints, solved here
//! by Held-Karp over states `(visited ⊆ A, last mandatory vertex)`.
//! `d_Ha = ρ_{V_G}` is the Hamiltonian distance.
//!
//! [`RhoTable`] holds `ρ_S` for every `S ⊆ V_G` at once, using
//! `ρ_S(u, x) = min_{a ∈ S} ρ_{S \ {a}}(u, a) + d(a, x)`.

use std::fmt;

use rayon::prelude::*;

use crate::budget::{ensure, Budget};
use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph};

/// Subset of `0..n` stored as a bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSubset {
    n: usize,
    words: Vec<u64>,
}

impl VertexSubset {
    pub fn empty(n: usize) -> Self {
        VertexSubset {
            n,
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    pub fn from_vertices(n: usize, vertices: &[usize]) -> Result<Self> {
        let mut s = Self::empty(n);
        for &v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Subset whose bit `i` is bit `i` of `mask`; needs `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self> {
        if n > 64 || (n < 64 && mask >> n != 0) {
            return Err(Error::InvalidArgument(format!(
                "mask {mask:#x} out of range for n = {n}"
            )));
        }
        let mut s = Self::empty(n);
        if n > 0 {
            s.words[0] = mask;
        }
        Ok(s)
    }

    pub fn to_mask(&self) -> Option<u64> {
        match self.words.as_slice() {
            [] => Some(0),
            [w] => Some(*w),
            _ => self.words[1..]
                .iter()
                .all(|&w| w == 0)
                .then_some(self.words[0]),
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range");
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(|&v| self.contains(v))
    }

    pub fn union(&self, other: &VertexSubset) -> VertexSubset {
        assert_eq!(self.n, other.n);
        VertexSubset {
            n: self.n,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &VertexSubset) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }
}

impl fmt::Debug for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// `n × n` matrix of `ρ_A(u, v)` for one fixed `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoMatrix {
    size: usize,
    entries: Vec<u32>,
}

impl RhoMatrix {
    /// Square matrix from rows; used for values computed outside the solver.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidArgument(
                "rho matrix rows must be square".into(),
            ));
        }
        Ok(RhoMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

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

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.size).map(|u| self.row(u).to_vec()).collect()
    }

    /// Sum over all ordered pairs, diagonal included (twice `W_{ρ_A}`).
    pub fn ordered_sum(&self) -> u128 {
        self.entries.iter().map(|&x| x as u128).sum()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size).all(|u| (0..u).all(|v| self.get(u, v) == self.get(v, u)))
    }

    /// Per-row maxima and the overall maximum.
    pub fn eccentricity_and_diameter(&self) -> (Vec<u32>, u32) {
        let ecc: Vec<u32> = (0..self.size)
            .map(|u| self.row(u).iter().copied().max().unwrap_or(0))
            .collect();
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        (ecc, diameter)
    }
}

/// Held-Karp solver over the metric closure of a connected graph.
#[derive(Debug, Clone)]
pub struct RhoSolver {
    dist: DistanceMatrix,
    budget: Budget,
}

impl RhoSolver {
    pub fn new(g: &Graph, budget: &Budget) -> Result<Self> {
        let dist = g.all_pairs_distances();
        if !dist.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(RhoSolver {
            dist,
            budget: *budget,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.dist.size()
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.dist
    }

    fn check(&self, a: &VertexSubset, endpoints: &[usize]) -> Result<Vec<usize>> {
        let n = self.vertex_count();
        if a.universe() != n {
            return Err(Error::InvalidArgument(format!(
                "subset over {} vertices used with a graph on {}",
                a.universe(),
                n
            )));
        }
        for &w in endpoints {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        Ok(a.iter().collect())
    }

    /// `ρ_A(u, v)` for every `v`, from one Held-Karp run rooted at `u`.
    pub fn rho_from(&self, a: &VertexSubset, u: usize) -> Result<Vec<u32>> {
        let members = self.check(a, &[u])?;
        ensure(
            "mandatory set size",
            members.len() as u128,
            self.budget.max_rho_set,
        )?;
        Ok(self.held_karp(&members, u))
    }

    fn held_karp(&self, members: &[usize], u: usize) -> Vec<u32> {
        let n = self.vertex_count();
        let d = &self.dist;
        let k = members.len();
        if k == 0 {
            return d.row(u).to_vec();
        }
        let full = (1usize << k) - 1;
        // best[mask * k + last]: shortest walk from u covering `mask`, ending at members[last]
        let mut best = vec![u32::MAX; (full + 1) * k];
        for (i, &a) in members.iter().enumerate() {
            best[(1 << i) * k + i] = d.get(u, a);
        }
        for mask in 1..=full {
            for last in 0..k {
                let here = best[mask * k + last];
                if here == u32::MAX || mask >> last & 1 == 0 {
                    continue;
                }
                let from = members[last];
                let mut rest = full & !mask;
                while rest != 0 {
                    let next = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let slot = &mut best[(mask | 1 << next) * k + next];
                    let cand = here + d.get(from, members[next]);
                    if cand < *slot {
                        *slot = cand;
                    }
                }
            }
        }
        let ends = &best[full * k..];
        (0..n)
            .map(|v| {
                ends.iter()
                    .zip(members)
                    .map(|(&len, &a)| len + d.get(a, v))
                    .min()
                    .expect("non-empty set")
            })
            .collect()
    }

    pub fn rho(&self, a: &VertexSubset, u: usize, v: usize) -> Result<u32> {
        self.check(a, &[v])?;
        Ok(self.rho_from(a, u)?[v])
    }

    /// Minimum over all visiting orders of `A`; factorial time.
    pub fn rho_bruteforce(&self, a: &VertexSubset, u: usize, v: usize) -> Result<u32> {
        let mut members = self.check(a, &[u, v])?;
        ensure(
            "permutation oracle set size",
            members.len() as u128,
            self.budget.max_permutation_set,
        )?;
        let d = &self.dist;
        if members.is_empty() {
            return Ok(d.get(u, v));
        }
        let k = members.len();
        let mut best = u32::MAX;
        let mut counters = vec![0usize; k];
        let order_len = |order: &[usize]| {
            d.get(u, order[0])
                + order.windows(2).map(|w| d.get(w[0], w[1])).sum::<u32>()
                + d.get(order[k - 1], v)
        };
        best = best.min(order_len(&members));
        // Heap's algorithm
        let mut i = 1;
        while i < k {
            if counters[i] < i {
                if i % 2 == 0 {
                    members.swap(0, i);
                } else {
                    members.swap(counters[i], i);
                }
                best = best.min(order_len(&members));
                counters[i] += 1;
                i = 1;
            } else {
                counters[i] = 0;
                i += 1;
            }
        }
        Ok(best)
    }

    pub fn rho_matrix(&self, a: &VertexSubset) -> Result<RhoMatrix> {
        let members = self.check(a, &[])?;
        ensure(
            "mandatory set size",
            members.len() as u128,
            self.budget.max_rho_set,
        )?;
        let n = self.vertex_count();
        // keep peak memory bounded for large sets
        let rows: Vec<Vec<u32>> = if members.len() <= 16 {
            (0..n)
                .into_par_iter()
                .map(|u| self.held_karp(&members, u))
                .collect()
        } else {
            (0..n).map(|u| self.held_karp(&members, u)).collect()
        };
        Ok(RhoMatrix {
            size: n,
            entries: rows.concat(),
        })
    }

    pub fn d_ha(&self) -> Result<RhoMatrix> {
        self.rho_matrix(&VertexSubset::full(self.vertex_count()))
    }
}

pub fn rho(g: &Graph, a: &VertexSubset, u: usize, v: usize) -> Result<u32> {
    RhoSolver::new(g, &Budget::default())?.rho(a, u, v)
}

pub fn rho_bruteforce(g: &Graph, a: &VertexSubset, u: usize, v: usize) -> Result<u32> {
    RhoSolver::new(g, &Budget::default())?.rho_bruteforce(a, u, v)
}

pub fn d_ha(g: &Graph) -> Result<RhoMatrix> {
    RhoSolver::new(g, &Budget::default())?.d_ha()
}

/// Hamiltonian eccentricities `e_{G,Ha}(u)` and `diam_Ha(G)`.
pub fn hamiltonian_eccentricity_and_diameter(g: &Graph) -> Result<(Vec<u32>, u32)> {
    Ok(d_ha(g)?.eccentricity_and_diameter())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hamiltonicity {
    pub is_hamiltonian: bool,
    pub is_hamilton_connected: bool,
}

/// Reads Hamiltonicity off `d_Ha`: Hamiltonian iff `d_Ha(u,u) = n`, and
/// Hamilton-connected iff additionally `d_Ha(u,v) = n - 1` for all `u != v`.
pub fn hamiltonicity(g: &Graph) -> Result<Hamiltonicity> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(Error::TrivialFactor);
    }
    let dha = d_ha(g)?;
    classify_hamiltonicity(&dha)
}

pub fn classify_hamiltonicity(dha: &RhoMatrix) -> Result<Hamiltonicity> {
    let n = dha.size() as u32;
    let is_hamiltonian = dha.get(0, 0) == n;
    let is_hamilton_connected = (0..dha.size())
        .all(|u| (0..dha.size()).all(|v| dha.get(u, v) == if u == v { n } else { n - 1 }));
    Ok(Hamiltonicity {
        is_hamiltonian,
        is_hamilton_connected,
    })
}

/// `ρ_S(u, v)` for every `S ⊆ V_G` and every `u, v`.
#[derive(Debug, Clone)]
pub struct RhoTable {
    n: usize,
    // [u][S][x]
    data: Vec<u32>,
}

impl RhoTable {
    pub fn new(g: &Graph, budget: &Budget) -> Result<Self> {
        let n = g.vertex_count();
        ensure(
            "subset enumeration base size",
            n as u128,
            budget.max_subset_vertices,
        )?;
        let dist = g.all_pairs_distances();
        if !dist.is_connected() {
            return Err(Error::Disconnected);
        }
        let blocks: Vec<Vec<u32>> = (0..n)
            .into_par_iter()
            .map(|u| subset_block(&dist, u))
            .collect();
        Ok(RhoTable {
            n,
            data: blocks.concat(),
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// `ρ_S(u, v)` with `S` given as a bitmask.
    #[inline]
    pub fn get(&self, set: usize, u: usize, v: usize) -> u32 {
        self.data[((u << self.n) | set) * self.n + v]
    }

    pub fn matrix(&self, set: usize) -> RhoMatrix {
        let n = self.n;
        let entries = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .map(|(u, v)| self.get(set, u, v))
            .collect();
        RhoMatrix { size: n, entries }
    }
}

/// `block[S * n + x] = ρ_S(u, x)` for every bitmask `S` over `V_G`.
pub(crate) fn subset_block(dist: &DistanceMatrix, u: usize) -> Vec<u32> {
    let n = dist.size();
    let subsets = 1usize << n;
    let mut block = vec![0u32; subsets * n];
    block[..n].copy_from_slice(dist.row(u));
    let mut end_at = vec![(0usize, 0u32); n];
    for set in 1..subsets {
        let mut members = set;
        let mut count = 0;
        while members != 0 {
            let a = members.trailing_zeros() as usize;
            members &= members - 1;
            // ρ_{S \ {a}}(u, a)
            end_at[count] = (a, block[(set & !(1 << a)) * n + a]);
            count += 1;
        }
        for x in 0..n {
            block[set * n + x] = end_at[..count]
                .iter()
                .map(|&(a, len)| len + dist.get(a, x))
                .min()
                .expect("non-empty set");
        }
    }
    block
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFamily {
    Complete,
    Path,
}

/// `ρ_A(u, v)` on `K_n` or `P_n` by case analysis. Vertices are 0-based;
/// the path form works on 1-based labels internally.
pub fn rho_closed_form(
    kind: ClosedFamily,
    n: usize,
    a: &VertexSubset,
    u: usize,
    v: usize,
) -> Result<u32> {
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if a.universe() != n {
        return Err(Error::InvalidArgument(
            "subset universe differs from n".into(),
        ));
    }
    if a.is_empty() {
        return Err(Error::InvalidArgument(
            "closed forms need a non-empty set".into(),
        ));
    }
    let k = a.len() as i64;
    let value = match kind {
        ClosedFamily::Complete => match (a.contains(u), a.contains(v)) {
            (false, false) => k + 1,
            (true, false) | (false, true) => k,
            (true, true) if u != v => k - 1,
            (true, true) if k > 1 => k,
            (true, true) => 0,
        },
        ClosedFamily::Path => {
            let lo = a.iter().next().expect("non-empty") as i64 + 1;
            let hi = a.iter().last().expect("non-empty") as i64 + 1;
            let (u, v) = ((u.min(v) + 1) as i64, (u.max(v) + 1) as i64);
            if u < lo && v > hi {
                v - u
            } else if u < lo {
                2 * hi - (u + v)
            } else if v > hi {
                (u + v) - 2 * lo
            } else {
                2 * (hi - lo) - (v - u)
            }
        }
    };
    Ok(value as u32)
}

/// `d_Ha(u, v)` on `C_n`: `n - 2 + d(u, v)` off the diagonal, `n` on it.
pub fn dha_cycle_closed_form(n: usize, u: usize, v: usize) -> Result<u32> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "cycle needs n > 2, got {n}"
        )));
    }
    for w in [u, v] {
        if w >= n {
            return Err(Error::VertexOutOfRange { vertex: w, n });
        }
    }
    if u == v {
        return Ok(n as u32);
    }
    let gap = u.abs_diff(v);
    Ok((n - 2 + gap.min(n - gap)) as u32)
}
