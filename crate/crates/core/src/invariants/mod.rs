//! Zagreb, Wiener and Szeged indices of graphs and of wreath products.
//!
//! Every wreath-product index has a brute-force route (materialize the
//! product, then compute) and one or more formula routes that only look at
//! the factors. All values are exact big integers.

mod szeged;
mod wiener;
mod zagreb;

use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use szeged::{
    edge_side_counts, sz_g_a_b, szeged, szeged_by_edge_type, szeged_rho_counts,
    szeged_subset_pair_sum, szeged_wreath, szeged_wreath_bruteforce, SzegedMethod, SzegedProfile,
};
pub use wiener::{
    wiener, wiener_cartesian_power, wiener_rho, wiener_rho_path_closed, wiener_vector,
    wiener_vector_complete, wiener_vector_path_closed, wiener_wreath, wiener_wreath_bruteforce,
    WienerMethod, WienerVector,
};
pub use zagreb::{zagreb, zagreb_wreath_bruteforce, zagreb_wreath_formula, Zagreb};

/// Nonnegative multiple of one half, stored as twice its value.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Halves(BigUint);

impl Halves {
    pub fn from_doubled(doubled: impl Into<BigUint>) -> Self {
        Halves(doubled.into())
    }

    pub fn from_integer(value: impl Into<BigUint>) -> Self {
        Halves(value.into() << 1u32)
    }

    pub fn doubled(&self) -> &BigUint {
        &self.0
    }

    pub fn is_integer(&self) -> bool {
        !self.0.bit(0)
    }

    pub fn to_integer(&self) -> Option<BigUint> {
        self.is_integer().then(|| &self.0 >> 1u32)
    }
}

impl Add for Halves {
    type Output = Halves;

    fn add(self, rhs: Halves) -> Halves {
        Halves(self.0 + rhs.0)
    }
}

impl fmt::Display for Halves {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let whole = &self.0 >> 1u32;
        if self.is_integer() {
            write!(f, "{whole}")
        } else {
            write!(f, "{whole}.5")
        }
    }
}

impl FromStr for WienerMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vector" => Ok(WienerMethod::Vector),
            "complete_closed" | "complete-closed" => Ok(WienerMethod::CompleteClosed),
            "path_closed" | "path-closed" => Ok(WienerMethod::PathClosed),
            _ => Err(Error::InvalidArgument(format!(
                "unknown Wiener method {s:?}"
            ))),
        }
    }
}

impl FromStr for SzegedMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "general" => Ok(SzegedMethod::General),
            "edge_transitive" | "edge-transitive" => Ok(SzegedMethod::EdgeTransitive),
            "complete_closed" | "complete-closed" => Ok(SzegedMethod::CompleteClosed),
            _ => Err(Error::InvalidArgument(format!(
                "unknown Szeged method {s:?}"
            ))),
        }
    }
}

pub(crate) fn pow(base: usize, exp: usize) -> BigUint {
    num_traits::pow(BigUint::from(base), exp)
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// Isomorphic to `K_n`.
pub fn is_complete(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.is_simple() && g.edge_count() == n * (n - 1) / 2
}

/// Isomorphic to `P_n`.
pub fn is_path(g: &Graph) -> bool {
    let n = g.vertex_count();
    g.is_simple()
        && n > 0
        && g.edge_count() == n - 1
        && g.is_connected()
        && g.degrees().iter().all(|&d| d <= 2)
}

/// Shared precondition of the wreath-product formulas.
pub(crate) fn wreath_factors(g: &Graph, h: &Graph) -> Result<(usize, usize)> {
    g.require_simple()?;
    h.require_simple()?;
    let (n, m) = (g.vertex_count(), h.vertex_count());
    if n < 2 || m < 2 {
        return Err(Error::TrivialFactor);
    }
    g.require_connected()?;
    h.require_connected()?;
    Ok((n, m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn halves_display_and_arithmetic() {
        let x = Halves::from_doubled(51u32);
        assert_eq!(x.to_string(), "25.5");
        assert!(!x.is_integer());
        assert_eq!(x.to_integer(), None);
        let y = x + Halves::from_doubled(1u32);
        assert_eq!(y.to_string(), "26");
        assert_eq!(y.to_integer(), Some(BigUint::from(26u32)));
        assert_eq!(Halves::from_integer(7u32).doubled(), &BigUint::from(14u32));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(10, 3), BigUint::from(120u32));
        assert_eq!(binomial(4, 5), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial(60, 30).to_string(), "118264581564861424");
    }

    #[test]
    fn family_recognition() {
        assert!(is_complete(&Graph::complete(5)));
        assert!(!is_complete(&Graph::cycle(5)));
        assert!(is_complete(&Graph::cycle(3)));
        let shuffled = Graph::path(5).relabel(&[3, 0, 4, 1, 2]).unwrap();
        assert!(is_path(&shuffled));
        assert!(!is_path(&Graph::cycle(4)));
        assert!(!is_path(&Graph::paw()));
    }

    #[test]
    fn method_names() {
        assert_eq!(
            "vector".parse::<WienerMethod>().unwrap(),
            WienerMethod::Vector
        );
        assert_eq!(
            "path-closed".parse::<WienerMethod>().unwrap(),
            WienerMethod::PathClosed
        );
        assert_eq!(
            "general".parse::<SzegedMethod>().unwrap(),
            SzegedMethod::General
        );
        assert!("magic".parse::<SzegedMethod>().is_err());
    }
}
