//! Alt ν-Tamari lattices built from δ-rotations.

use std::cmp::Ordering;

use thiserror::Error;

use crate::lattice::{BuildOptions, FiniteLattice, LatticeError};
use crate::path::{
    enumerate_nu_paths_bounded, rotations_unchecked, IncrementVector, LatticePath, PathError,
};

/// Largest |P(ν)| built unless overridden.
pub const DEFAULT_MAX_ELEMENTS: usize = 50_000;

/// Environment variable that overrides [`DEFAULT_MAX_ELEMENTS`].
pub const MAX_ELEMENTS_ENV: &str = "TAMARI_MAX_ELEMENTS";

/// The element guard, honouring `TAMARI_MAX_ELEMENTS` when it parses.
pub fn max_elements_from_env() -> usize {
    std::env::var(MAX_ELEMENTS_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_ELEMENTS)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TamariError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("rotation of {from} produced {to}, which is not a nu-path")]
    StrayRotation { from: String, to: String },
}

#[derive(Debug, Clone, Copy)]
pub struct TamariOptions {
    pub max_elements: usize,
    pub lattice: BuildOptions,
}

impl Default for TamariOptions {
    fn default() -> Self {
        TamariOptions {
            max_elements: DEFAULT_MAX_ELEMENTS,
            lattice: BuildOptions::default(),
        }
    }
}

/// `Tam_δ(ν)` with its paths in canonical order.
#[derive(Debug, Clone)]
pub struct TamariLattice {
    nu: LatticePath,
    delta: IncrementVector,
    paths: Vec<LatticePath>,
    keys: Vec<Vec<usize>>,
    lattice: FiniteLattice,
}

impl TamariLattice {
    pub fn nu(&self) -> &LatticePath {
        &self.nu
    }

    pub fn delta(&self) -> &IncrementVector {
        &self.delta
    }

    pub fn paths(&self) -> &[LatticePath] {
        &self.paths
    }

    pub fn path(&self, id: usize) -> &LatticePath {
        &self.paths[id]
    }

    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Element id of a path, if it is a ν-path.
    pub fn index_of(&self, path: &LatticePath) -> Option<usize> {
        if path.endpoint() != self.nu.endpoint() {
            return None;
        }
        let key = path.north_positions();
        self.keys.binary_search_by(|k| cmp_keys(k, &key)).ok()
    }
}

fn cmp_keys(a: &[usize], b: &[usize]) -> Ordering {
    a.cmp(b)
}

pub fn build_alt_tamari(
    nu: &LatticePath,
    delta: &IncrementVector,
) -> Result<TamariLattice, TamariError> {
    build_alt_tamari_with(nu, delta, &TamariOptions::default())
}

pub fn build_alt_tamari_with(
    nu: &LatticePath,
    delta: &IncrementVector,
    options: &TamariOptions,
) -> Result<TamariLattice, TamariError> {
    delta.validate(&nu.run_lengths())?;
    let paths = enumerate_nu_paths_bounded(nu, options.max_elements)?;
    let keys: Vec<Vec<usize>> = paths.iter().map(LatticePath::north_positions).collect();
    let mut covers = Vec::new();
    for (i, mu) in paths.iter().enumerate() {
        for target in rotations_unchecked(delta, mu)? {
            let key = target.north_positions();
            let j = keys.binary_search_by(|k| cmp_keys(k, &key)).map_err(|_| {
                TamariError::StrayRotation {
                    from: mu.to_string(),
                    to: target.to_string(),
                }
            })?;
            covers.push((i, j));
        }
    }
    let lattice = FiniteLattice::with_options(paths.len(), &covers, options.lattice)?;
    Ok(TamariLattice {
        nu: nu.clone(),
        delta: delta.clone(),
        paths,
        keys,
        lattice,
    })
}
