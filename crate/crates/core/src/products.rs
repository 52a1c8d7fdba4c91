//! Cartesian, direct and wreath products, plus the Kronecker-sum form of
//! the wreath adjacency matrix.
//!
//! Pair products index vertex `(u, v)` as `u * |V_H| + v`. Wreath products
//! use [`WreathCodec`]: vertex `(y_1..y_n) x` has index
//! `x * m^n + Σ_i y_i * m^(n-1-i)`, so the position is the most significant
//! digit and the lamp at base vertex 0 is the most significant config digit.

use rayon::prelude::*;

use crate::budget::{ensure, Budget};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A configuration of lamps over `V_G` plus the lamplighter position.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WreathVertex {
    /// Entry `i` is the colour (a vertex of `H`) of the lamp at base vertex `i`.
    pub config: Vec<usize>,
    /// Vertex of `G`.
    pub position: usize,
}

/// Bijection between [`WreathVertex`] values and `0..n * m^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WreathCodec {
    base: usize,
    colours: usize,
    configs: usize,
}

impl WreathCodec {
    /// Codec for a base graph on `n` vertices and a colour graph on `m`.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        let configs = checked_pow(m, n).ok_or(Error::BudgetExceeded {
            what: "wreath configurations",
            requested: u128::MAX,
            limit: usize::MAX as u128,
        })?;
        configs.checked_mul(n).ok_or(Error::BudgetExceeded {
            what: "wreath vertices",
            requested: u128::MAX,
            limit: usize::MAX as u128,
        })?;
        Ok(WreathCodec {
            base: n,
            colours: m,
            configs,
        })
    }

    pub fn base_size(&self) -> usize {
        self.base
    }

    pub fn colour_count(&self) -> usize {
        self.colours
    }

    /// `m^n`.
    pub fn config_count(&self) -> usize {
        self.configs
    }

    /// `n * m^n`.
    pub fn vertex_count(&self) -> usize {
        self.base * self.configs
    }

    /// Weight of config digit `i`, i.e. `m^(n-1-i)`.
    #[inline]
    pub fn place(&self, i: usize) -> usize {
        self.colours.pow((self.base - 1 - i) as u32)
    }

    #[inline]
    pub fn digit(&self, config_index: usize, i: usize) -> usize {
        (config_index / self.place(i)) % self.colours
    }

    pub fn config_index(&self, config: &[usize]) -> usize {
        config.iter().fold(0, |acc, &y| acc * self.colours + y)
    }

    pub fn config_digits(&self, config_index: usize) -> Vec<usize> {
        (0..self.base)
            .map(|i| self.digit(config_index, i))
            .collect()
    }

    #[inline]
    pub fn position_of(&self, index: usize) -> usize {
        index / self.configs
    }

    #[inline]
    pub fn config_of(&self, index: usize) -> usize {
        index % self.configs
    }

    #[inline]
    pub fn compose(&self, config_index: usize, position: usize) -> usize {
        position * self.configs + config_index
    }

    pub fn encode(&self, v: &WreathVertex) -> Result<usize> {
        if v.config.len() != self.base || v.position >= self.base {
            return Err(Error::InvalidArgument(format!(
                "{v:?} does not fit the codec"
            )));
        }
        if let Some(&bad) = v.config.iter().find(|&&y| y >= self.colours) {
            return Err(Error::VertexOutOfRange {
                vertex: bad,
                n: self.colours,
            });
        }
        Ok(self.compose(self.config_index(&v.config), v.position))
    }

    pub fn decode(&self, index: usize) -> WreathVertex {
        WreathVertex {
            config: self.config_digits(self.config_of(index)),
            position: self.position_of(index),
        }
    }

    /// Maps an index in "config major, position minor" order (the order of
    /// Kronecker products and of `A(H)^{×n} × A_Ha(G)`) to the codec index.
    #[inline]
    pub fn from_config_major(&self, index: usize) -> usize {
        self.compose(index / self.base, index % self.base)
    }
}

fn checked_pow(base: usize, exp: usize) -> Option<usize> {
    base.checked_pow(u32::try_from(exp).ok()?)
}

pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    g.require_simple()?;
    h.require_simple()?;
    let m = h.vertex_count();
    let adjacency = (0..g.vertex_count())
        .flat_map(|u| (0..m).map(move |v| (u, v)))
        .map(|(u, v)| {
            let mut list: Vec<usize> = g.neighbors(u).iter().map(|&u2| u2 * m + v).collect();
            list.extend(h.neighbors(v).iter().map(|&v2| u * m + v2));
            list
        })
        .collect();
    Ok(Graph::from_adjacency_unchecked(adjacency, false))
}

/// Direct (tensor) product. Loops survive only where both factors carry a
/// loop at the paired vertices.
pub fn direct_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.vertex_count();
    let adjacency = (0..g.vertex_count())
        .flat_map(|u| (0..m).map(move |v| (u, v)))
        .map(|(u, v)| {
            g.neighbors(u)
                .iter()
                .flat_map(|&u2| h.neighbors(v).iter().map(move |&v2| u2 * m + v2))
                .collect()
        })
        .collect();
    Graph::from_adjacency_unchecked(adjacency, g.allows_loops() && h.allows_loops())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    Cartesian,
    Direct,
}

/// `g^{□n}` or `g^{×n}`, left associated, first factor most significant.
pub fn power(g: &Graph, n: usize, kind: ProductKind, budget: &Budget) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "power exponent must be at least 1".into(),
        ));
    }
    let size = (g.vertex_count() as u128)
        .checked_pow(n as u32)
        .unwrap_or(u128::MAX);
    ensure("power vertices", size, budget.max_product_vertices)?;
    let mut acc = g.clone();
    for _ in 1..n {
        acc = match kind {
            ProductKind::Cartesian => cartesian_product(&acc, g)?,
            ProductKind::Direct => direct_product(&acc, g),
        };
    }
    Ok(acc)
}

pub(crate) fn wreath_codec_checked(
    g: &Graph,
    h: &Graph,
    limit: usize,
    what: &'static str,
) -> Result<WreathCodec> {
    let (n, m) = (g.vertex_count(), h.vertex_count());
    if n < 2 || m < 2 {
        return Err(Error::TrivialFactor);
    }
    let size = (m as u128)
        .checked_pow(n as u32)
        .and_then(|c| c.checked_mul(n as u128))
        .unwrap_or(u128::MAX);
    ensure(what, size, limit)?;
    WreathCodec::new(n, m)
}

/// Materializes `G ≀ H` under [`WreathCodec`] ordering.
pub fn wreath_product(g: &Graph, h: &Graph, budget: &Budget) -> Result<Graph> {
    g.require_simple()?;
    h.require_simple()?;
    let codec = wreath_codec_checked(g, h, budget.max_product_vertices, "wreath product vertices")?;
    let adjacency = (0..codec.vertex_count())
        .into_par_iter()
        .map(|index| {
            let x = codec.position_of(index);
            let c = codec.config_of(index);
            let place = codec.place(x);
            let lamp = (c / place) % codec.colour_count();
            // type II: move the lamplighter
            let mut list: Vec<usize> = g
                .neighbors(x)
                .iter()
                .map(|&x2| codec.compose(c, x2))
                .collect();
            // type I: switch the lamp under the lamplighter
            list.extend(
                h.neighbors(lamp)
                    .iter()
                    .map(|&b| codec.compose(c - lamp * place + b * place, x)),
            );
            list
        })
        .collect();
    Ok(Graph::from_adjacency_unchecked(adjacency, false))
}

/// Dense square 0/1 (or small integer) matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<u8>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            data: vec![0; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    pub fn adjacency(g: &Graph) -> Self {
        let mut m = Self::zeros(g.vertex_count());
        for (u, v) in g.edges() {
            m.set(u, v, 1);
            m.set(v, u, 1);
        }
        m
    }

    /// Matrix with a single 1 at `(i, i)`.
    pub fn unit_diagonal(dim: usize, i: usize) -> Self {
        let mut m = Self::zeros(dim);
        m.set(i, i, 1);
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u8) {
        self.data[i * self.dim + j] = value;
    }

    pub fn kron(&self, other: &DenseMatrix) -> DenseMatrix {
        let dim = self.dim * other.dim;
        let mut out = Self::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.set(i * other.dim + k, j * other.dim + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn add_assign(&mut self, other: &DenseMatrix) {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a += b;
        }
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sums(&self) -> Vec<usize> {
        self.data
            .chunks(self.dim.max(1))
            .take(self.dim)
            .map(|r| r.iter().map(|&x| x as usize).sum())
            .collect()
    }

    /// Entry `(i, j)` of the result is entry `(σ⁻¹(i), σ⁻¹(j))` of `self`,
    /// i.e. index `k` moves to `sigma[k]`.
    pub fn permuted(&self, sigma: &[usize]) -> DenseMatrix {
        let mut out = Self::zeros(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(sigma[i], sigma[j], self.get(i, j));
            }
        }
        out
    }
}

/// `A ≀ B = I_m^{⊗n} ⊗ A + Σ_i I_m^{⊗(i-1)} ⊗ B ⊗ I_m^{⊗(n-i)} ⊗ D_i`,
/// indexed config-major, position-minor. Use
/// [`WreathCodec::from_config_major`] to align with [`wreath_product`].
pub fn wreath_adjacency_kronecker(g: &Graph, h: &Graph, budget: &Budget) -> Result<DenseMatrix> {
    g.require_simple()?;
    h.require_simple()?;
    let codec = wreath_codec_checked(g, h, budget.max_dense_dim, "dense matrix dimension")?;
    let (n, m) = (codec.base_size(), codec.colour_count());
    let a = DenseMatrix::adjacency(g);
    let b = DenseMatrix::adjacency(h);
    let id_m = DenseMatrix::identity(m);
    let id_pow = |k: usize| (0..k).fold(DenseMatrix::identity(1), |acc, _| acc.kron(&id_m));

    let mut total = id_pow(n).kron(&a);
    for i in 0..n {
        let term = id_pow(i)
            .kron(&b)
            .kron(&id_pow(n - 1 - i))
            .kron(&DenseMatrix::unit_diagonal(n, i));
        total.add_assign(&term);
    }
    Ok(total)
}
