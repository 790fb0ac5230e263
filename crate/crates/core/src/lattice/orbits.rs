//! Orbits of rowmotion.

use num_integer::Integer;
use serde::Serialize;

use super::rowmotion::RowmotionMap;
use super::{FiniteLattice, LatticeError};

/// Cycles of a permutation of `0..n`, each starting at its smallest element,
/// listed by `(size, representative)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    orbits: Vec<Vec<usize>>,
    membership: Vec<(usize, usize)>,
}

/// JSON shape: `{orbits: [[ids]], sizes: [...], order: N}`.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    pub orbits: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    pub order: u128,
}

impl OrbitDecomposition {
    pub fn from_map(map: &RowmotionMap) -> Self {
        let n = map.len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                orbit.push(x);
                x = map.apply(x);
            }
            orbits.push(orbit);
        }
        orbits.sort_by_key(|o| (o.len(), o[0]));
        let mut membership = vec![(0, 0); n];
        for (i, orbit) in orbits.iter().enumerate() {
            for (phase, &x) in orbit.iter().enumerate() {
                membership[x] = (i, phase);
            }
        }
        OrbitDecomposition { orbits, membership }
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// `(orbit index, phase)` of an element.
    pub fn locate(&self, x: usize) -> (usize, usize) {
        self.membership[x]
    }

    /// Orbit sizes, ascending.
    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(Vec::len).collect()
    }

    /// Order of the permutation: the lcm of the orbit sizes.
    pub fn order(&self) -> u128 {
        self.orbits
            .iter()
            .fold(1u128, |acc, o| acc.lcm(&(o.len() as u128)))
    }

    /// Number of elements fixed by the `d`-th power.
    pub fn fixed_points(&self, d: u128) -> usize {
        self.orbits
            .iter()
            .filter(|o| d.is_multiple_of(o.len() as u128))
            .map(Vec::len)
            .sum()
    }

    pub fn summary(&self) -> OrbitSummary {
        OrbitSummary {
            orbits: self.orbits.clone(),
            sizes: self.sizes(),
            order: self.order(),
        }
    }
}

pub fn orbit_decomposition(l: &FiniteLattice) -> Result<OrbitDecomposition, LatticeError> {
    Ok(OrbitDecomposition::from_map(&RowmotionMap::new(l)?))
}
