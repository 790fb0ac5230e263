//! The hook family `H_{δ(k)}(a,b)` and the two-row family `T_{δ(k)}(a,b)`,
//! built through the generic constructor and labelled by the coordinates
//! read from their ν̂(k)-bracket vectors.

use std::collections::HashMap;

use thiserror::Error;

use crate::bracket::{
    bracket_vector, hook_coords, hook_delta, hook_run_lengths, nu_hat, two_row_delta, two_row_nu,
    two_row_triple, BracketError, HookCoords, TwoRowTriple,
};
use crate::lattice::{LatticeError, SwitchEmbedding};
use crate::path::{LatticePath, PathError};
use crate::tamari::{build_alt_tamari_with, TamariError, TamariLattice, TamariOptions};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error(transparent)]
    Tamari(#[from] TamariError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Path(#[from] PathError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("two elements share the coordinates {0}")]
    DuplicateCoords(String),
}

/// `H_{δ(k)}(a,b)` with `(s, t)` labels.
#[derive(Debug, Clone)]
pub struct HookLattice {
    pub a: usize,
    pub b: usize,
    /// The requested `k`.
    pub k: usize,
    /// `k` as used for the increment vector: always 0 when `a = 1`.
    pub k_eff: usize,
    pub base: LatticePath,
    pub tamari: TamariLattice,
    pub coords: Vec<HookCoords>,
    index: HashMap<HookCoords, usize>,
}

impl HookLattice {
    pub fn element_at(&self, s: usize, t: usize) -> Option<usize> {
        self.index.get(&HookCoords { s, t }).copied()
    }

    /// The join-irreducible `w(k)` at `(a, b−1−k)` whose lower cover is `(a−1, b−1−k)`.
    pub fn w(&self) -> usize {
        self.element_at(self.a, self.b - 1 - self.k_eff)
            .expect("w(k) is always present")
    }
}

pub fn hook_lattice(a: usize, b: usize, k: usize) -> Result<HookLattice, FamilyError> {
    hook_lattice_with(a, b, k, &TamariOptions::default())
}

pub fn hook_lattice_with(
    a: usize,
    b: usize,
    k: usize,
    options: &TamariOptions,
) -> Result<HookLattice, FamilyError> {
    if a == 0 || b == 0 || k >= b {
        return Err(FamilyError::OutOfRange(format!(
            "hook needs a, b >= 1 and 0 <= k < b, got ({a},{b},{k})"
        )));
    }
    let k_eff = if a == 1 { 0 } else { k };
    let rle = hook_run_lengths(a, b);
    let delta = hook_delta(a, k_eff);
    let base = nu_hat(&rle, &delta)?;
    let tamari = build_alt_tamari_with(&rle.to_path(), &delta, options)?;
    let coords = tamari
        .paths()
        .iter()
        .map(|mu| hook_coords(&bracket_vector(&base, mu)?, a, b, k_eff))
        .collect::<Result<Vec<_>, _>>()?;
    let index = index_of(&coords)?;
    Ok(HookLattice {
        a,
        b,
        k,
        k_eff,
        base,
        tamari,
        coords,
        index,
    })
}

/// `T_{δ(k)}(a,b)` with triples and a planar embedding.
///
/// The embedding puts `(a−s, u, v)` on row `a − s` at column `u` when
/// `v = 0` and at column `a + b − k + v` otherwise, so each row reads left to
/// right along its chain and the spine sits at column 0.
#[derive(Debug, Clone)]
pub struct TwoRowLattice {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub base: LatticePath,
    pub tamari: TamariLattice,
    pub triples: Vec<TwoRowTriple>,
    pub planar: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl TwoRowLattice {
    pub fn element_at(&self, x: usize, y: usize) -> Option<usize> {
        self.index.get(&(x, y)).copied()
    }

    /// The planar embedding as a switching embedding with spine height `a`.
    pub fn switch_embedding(&self) -> Result<SwitchEmbedding, LatticeError> {
        SwitchEmbedding::new(self.planar.clone(), self.a)
    }
}

pub fn two_row_planar(a: usize, b: usize, k: usize, triple: TwoRowTriple) -> (usize, usize) {
    let x = if triple.v == 0 {
        triple.u
    } else {
        a + b - k + triple.v
    };
    (x, triple.height)
}

pub fn two_row_lattice(a: usize, b: usize, k: usize) -> Result<TwoRowLattice, FamilyError> {
    two_row_lattice_with(a, b, k, &TamariOptions::default())
}

pub fn two_row_lattice_with(
    a: usize,
    b: usize,
    k: usize,
    options: &TamariOptions,
) -> Result<TwoRowLattice, FamilyError> {
    if k > b {
        return Err(FamilyError::OutOfRange(format!(
            "two-row needs 0 <= k <= b, got ({a},{b},{k})"
        )));
    }
    let nu = two_row_nu(a, b);
    let delta = two_row_delta(k);
    let base = nu_hat(&nu.run_lengths(), &delta)?;
    let tamari = build_alt_tamari_with(&nu, &delta, options)?;
    let triples = tamari
        .paths()
        .iter()
        .map(|mu| two_row_triple(&bracket_vector(&base, mu)?, a, b, k))
        .collect::<Result<Vec<_>, _>>()?;
    let planar: Vec<(usize, usize)> = triples
        .iter()
        .map(|&t| two_row_planar(a, b, k, t))
        .collect();
    let index = index_of(&planar)?;
    Ok(TwoRowLattice {
        a,
        b,
        k,
        base,
        tamari,
        triples,
        planar,
        index,
    })
}

fn index_of<K>(labels: &[K]) -> Result<HashMap<K, usize>, FamilyError>
where
    K: std::hash::Hash + Eq + Copy + std::fmt::Debug,
{
    let mut index = HashMap::with_capacity(labels.len());
    for (id, &label) in labels.iter().enumerate() {
        if index.insert(label, id).is_some() {
            return Err(FamilyError::DuplicateCoords(format!("{label:?}")));
        }
    }
    Ok(index)
}
