use std::fmt;
use std::ops::Index;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::budget::{ensure, Budget};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::wreath_product;
use crate::tsp::{subset_block, RhoSolver, VertexSubset};

use super::{binomial, is_complete, is_path, pow, wreath_factors, Halves};

/// `½ Σ_{u,v} d(u, v)`.
pub fn wiener(g: &Graph) -> Result<BigUint> {
    g.require_simple()?;
    let sum = g.all_pairs_distances().ordered_sum()?;
    Ok(BigUint::from(sum / 2))
}

/// `W(H^{□n}) = n m^{2(n-1)} W(H)`.
pub fn wiener_cartesian_power(h: &Graph, n: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "power exponent must be at least 1".into(),
        ));
    }
    let w = wiener(h)?;
    Ok(w * n * pow(h.vertex_count(), 2 * (n - 1)))
}

/// `W_{ρ_A}(G) = ½ Σ_{u,v} ρ_A(u, v)`, diagonal included.
pub fn wiener_rho(g: &Graph, a: &VertexSubset, budget: &Budget) -> Result<Halves> {
    g.require_simple()?;
    let matrix = RhoSolver::new(g, budget)?.rho_matrix(a)?;
    Ok(Halves::from_doubled(matrix.ordered_sum()))
}

/// `(W_{ρ_0}, …, W_{ρ_n})` with `W_{ρ_k} = Σ_{|A| = k} W_{ρ_A}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WienerVector(Vec<Halves>);

impl WienerVector {
    pub fn from_entries(entries: Vec<Halves>) -> Self {
        WienerVector(entries)
    }

    pub fn entries(&self) -> &[Halves] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `Σ_k (m-1)^k W_{ρ_k}`, doubled.
    fn weighted_doubled(&self, m: usize) -> BigUint {
        let w = BigUint::from(m - 1);
        let mut power = BigUint::from(1u32);
        let mut total = BigUint::zero();
        for entry in &self.0 {
            total += &power * entry.doubled();
            power *= &w;
        }
        total
    }
}

impl Index<usize> for WienerVector {
    type Output = Halves;

    fn index(&self, k: usize) -> &Halves {
        &self.0[k]
    }
}

impl fmt::Display for WienerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Enumerates all `2^n` subsets; one all-subsets DP per source vertex.
pub fn wiener_vector(g: &Graph, budget: &Budget) -> Result<WienerVector> {
    g.require_simple()?;
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
    let sums = (0..n)
        .into_par_iter()
        .map(|u| {
            let block = subset_block(&dist, u);
            let mut acc = vec![0u128; n + 1];
            for (set, row) in block.chunks_exact(n).enumerate() {
                acc[set.count_ones() as usize] += row.iter().map(|&x| x as u128).sum::<u128>();
            }
            acc
        })
        .reduce(
            || vec![0u128; n + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    Ok(WienerVector(
        sums.into_iter().map(Halves::from_doubled).collect(),
    ))
}

/// Wiener vector of `K_n` in closed form.
pub fn wiener_vector_complete(n: usize) -> Result<WienerVector> {
    if n == 0 {
        return Err(Error::InvalidArgument("K_0 has no Wiener vector".into()));
    }
    let entries = (0..=n)
        .map(|k| match k {
            0 => Halves::from_doubled(BigUint::from(n * (n - 1))),
            1 => Halves::from_integer(BigUint::from(n * n * (n - 1))),
            _ => Halves::from_doubled(binomial(n, k) * (k * n * n - 2 * k * n + k + n * n)),
        })
        .collect();
    Ok(WienerVector(entries))
}

/// Wiener vector of `P_n`, `n > 2`, in closed form.
pub fn wiener_vector_path_closed(n: usize) -> Result<WienerVector> {
    if n <= 2 {
        return Err(Error::InvalidArgument(format!(
            "path closed form needs n > 2, got {n}"
        )));
    }
    let nn = BigInt::from(n);
    let entries = (0..=n)
        .map(|k| {
            let kk = BigInt::from(k);
            let k2 = &kk * &kk;
            let k3 = &k2 * &kk;
            let n2 = &nn * &nn;
            let poly: BigInt =
                5 * &k3 * &n2 + &k3 * &nn + 18 * &k2 * &n2 - 18 * &k2 * &nn - 12 * &k2
                    + 19 * &kk * &n2
                    - 25 * &kk * &nn
                    + 12 * &kk
                    + 6 * &n2
                    - 6 * &nn;
            let numerator: BigInt = BigInt::from(binomial(n + 1, k + 1)) * poly;
            let denominator = BigInt::from(6 * (k + 2) * (k + 3));
            assert!(
                (&numerator % &denominator).is_zero(),
                "path Wiener vector entry k = {k} is not integral"
            );
            let value = (numerator / denominator).to_biguint().expect("nonnegative");
            Halves::from_integer(value)
        })
        .collect();
    Ok(WienerVector(entries))
}

/// `W_{ρ_A}(P_n)` from `a = min A - 1` and `b = max A - min A + 1` (1-based).
pub fn wiener_rho_path_closed(n: usize, a: &VertexSubset) -> Result<Halves> {
    if n <= 2 {
        return Err(Error::InvalidArgument(format!(
            "path closed form needs n > 2, got {n}"
        )));
    }
    if a.universe() != n || a.is_empty() {
        return Err(Error::InvalidArgument(
            "need a non-empty subset of the path".into(),
        ));
    }
    let lo = a.iter().next().expect("non-empty") as i128;
    let hi = a.iter().last().expect("non-empty") as i128;
    let (n, shift, span) = (n as i128, lo, hi - lo + 1);
    let doubled = n * n * n - n * n + span * (2 * span - 1) * (span - 1) / 3
        - 2 * shift * (n - span - shift) * (n + span - 1);
    let doubled = BigInt::from(doubled);
    if doubled.is_negative() {
        return Err(Error::InvalidArgument(
            "closed form produced a negative value".into(),
        ));
    }
    Ok(Halves::from_doubled(
        doubled.to_biguint().expect("nonnegative"),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WienerMethod {
    /// Enumerated Wiener vector of `G`.
    Vector,
    /// `G ≅ K_n`, closed form.
    CompleteClosed,
    /// `G ≅ P_n` with `n > 2`, closed-form vector.
    PathClosed,
}

pub fn wiener_wreath(
    g: &Graph,
    h: &Graph,
    method: WienerMethod,
    budget: &Budget,
) -> Result<BigUint> {
    let (n, m) = wreath_factors(g, h)?;
    let wh = wiener(h)?;
    let lamp_part = pow(n, 3) * pow(m, 2 * (n - 1)) * &wh;
    let vector = match method {
        WienerMethod::CompleteClosed => {
            if !is_complete(g) {
                return Err(Error::MethodMismatch(
                    "complete_closed needs a complete base graph".into(),
                ));
            }
            return Ok(lamp_part + complete_walk_part(n, m));
        }
        WienerMethod::PathClosed => {
            if !is_path(g) || n <= 2 {
                return Err(Error::MethodMismatch(
                    "path_closed needs a path base graph on more than 2 vertices".into(),
                ));
            }
            wiener_vector_path_closed(n)?
        }
        WienerMethod::Vector => wiener_vector(g, budget)?,
    };
    let doubled = pow(m, n) * vector.weighted_doubled(m);
    let walk_part = Halves::from_doubled(doubled)
        .to_integer()
        .expect("wreath Wiener index is an integer");
    Ok(lamp_part + walk_part)
}

// (n m^n / 2)(n²m^n - n²m^{n-1} - m^n n + 2m^{n-1}n - m + m^n - m^{n-1})
fn complete_walk_part(n: usize, m: usize) -> BigUint {
    let nn = BigInt::from(n);
    let mm = BigInt::from(m);
    let m_n1 = BigInt::from(pow(m, n - 1));
    let m_n = &m_n1 * &mm;
    let inner: BigInt =
        &nn * &nn * &m_n - &nn * &nn * &m_n1 - &m_n * &nn + 2 * &m_n1 * &nn - &mm + &m_n - &m_n1;
    let doubled: BigInt = nn * &m_n * inner;
    assert!(!doubled.bit(0), "complete-base Wiener index is an integer");
    let half: BigInt = doubled / 2;
    half.to_biguint().expect("nonnegative")
}

pub fn wiener_wreath_bruteforce(g: &Graph, h: &Graph, budget: &Budget) -> Result<BigUint> {
    wreath_factors(g, h)?;
    wiener(&wreath_product(g, h, budget)?)
}
