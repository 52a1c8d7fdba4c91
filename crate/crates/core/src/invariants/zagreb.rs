use num_bigint::BigUint;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::products::wreath_product;

use super::{pow, wreath_factors};

/// First and second Zagreb indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Zagreb {
    /// `Σ_v deg(v)²`
    pub m1: BigUint,
    /// `Σ_{uv ∈ E} deg(u) deg(v)`
    pub m2: BigUint,
}

pub fn zagreb(g: &Graph) -> Result<Zagreb> {
    g.require_simple()?;
    let deg = g.degrees();
    let m1: u128 = deg.iter().map(|&d| (d * d) as u128).sum();
    let m2: u128 = g.edges().map(|(u, v)| (deg[u] * deg[v]) as u128).sum();
    Ok(Zagreb {
        m1: m1.into(),
        m2: m2.into(),
    })
}

/// Zagreb indices of `G ≀ H` from those of the factors and their edge counts.
pub fn zagreb_wreath_formula(g: &Graph, h: &Graph) -> Result<Zagreb> {
    let (n, m) = wreath_factors(g, h)?;
    let zg = zagreb(g)?;
    let zh = zagreb(h)?;
    let eg = BigUint::from(g.edge_count());
    let eh = BigUint::from(h.edge_count());
    let m_n2 = pow(m, n - 2);
    let m_n1 = &m_n2 * m;
    let m_n = &m_n1 * m;

    let m1 = &m_n1 * (&zg.m1 * m + &zh.m1 * n + 8u32 * &eg * &eh);
    let m2 = 3u32 * &m_n1 * &eh * &zg.m1
        + 2u32 * &eg * &m_n1 * &zh.m1
        + &m_n * &zg.m2
        + &m_n1 * n * &zh.m2
        + 4u32 * &m_n2 * &eg * &eh * &eh;
    Ok(Zagreb { m1, m2 })
}

pub fn zagreb_wreath_bruteforce(g: &Graph, h: &Graph, budget: &Budget) -> Result<Zagreb> {
    zagreb(&wreath_product(g, h, budget)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn z(m1: u32, m2: u32) -> Zagreb {
        Zagreb {
            m1: m1.into(),
            m2: m2.into(),
        }
    }

    #[test]
    fn small_graphs() {
        assert_eq!(zagreb(&Graph::complete(2)).unwrap(), z(2, 1));
        assert_eq!(zagreb(&Graph::cycle(4)).unwrap(), z(16, 16));
        assert_eq!(zagreb(&Graph::paw()).unwrap(), z(18, 19));
        assert_eq!(zagreb(&Graph::loops_only(2)), Err(Error::LoopyInput));
    }

    #[test]
    fn regular_graphs() {
        for (g, r) in [(Graph::cycle(7), 2u32), (Graph::complete(5), 4)] {
            let n = g.vertex_count() as u32;
            assert_eq!(zagreb(&g).unwrap(), z(n * r * r, n * r * r * r / 2));
        }
    }

    #[test]
    fn k2_wreath_c4() {
        let (g, h) = (Graph::complete(2), Graph::cycle(4));
        assert_eq!(zagreb_wreath_formula(&g, &h).unwrap(), z(288, 432));
        assert_eq!(
            zagreb_wreath_bruteforce(&g, &h, &Budget::default()).unwrap(),
            z(288, 432)
        );
    }

    #[test]
    fn regular_factor_reduction() {
        // both factors regular: M1 = n m^n (r_G + r_H)^2
        let (g, h) = (Graph::cycle(3), Graph::complete(3));
        let z = zagreb_wreath_formula(&g, &h).unwrap();
        assert_eq!(z.m1, BigUint::from(3u32 * 27 * 16));
    }

    #[test]
    fn nonregular_factors_match_bruteforce() {
        for g in [Graph::complete(2), Graph::path(3)] {
            for h in [Graph::paw(), Graph::path(3)] {
                assert_eq!(
                    zagreb_wreath_formula(&g, &h).unwrap(),
                    zagreb_wreath_bruteforce(&g, &h, &Budget::default()).unwrap()
                );
            }
        }
    }

    #[test]
    fn trivial_factor_rejected() {
        assert_eq!(
            zagreb_wreath_formula(&Graph::complete(3), &Graph::complete(1)),
            Err(Error::TrivialFactor)
        );
    }
}
