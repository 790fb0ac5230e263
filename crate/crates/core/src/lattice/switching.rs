//! Planar embeddings with the n-switching property and the `A * B` gluing.
//!
//! An embedding places each element at `(x, y)`. The switching conditions:
//! the spine `(0,0) ⋖ (0,1) ⋖ … ⋖ (0,n)` is present and nothing sits at
//! `(0, m)` for `m > n`; every cover moves one step up or some positive
//! distance right; and on a single row the order agrees with `x`. We also
//! require every element to sit on a row `0..=n`, so that the rightmost
//! elements `x_0, …, x_n` describe the whole right boundary.

use std::collections::HashMap;

use super::{FiniteLattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchEmbedding {
    coords: Vec<(usize, usize)>,
    rightmost: Vec<usize>,
}

impl SwitchEmbedding {
    /// Per-element coordinates, indexed by element id.
    pub fn new(coords: Vec<(usize, usize)>, n: usize) -> Result<Self, LatticeError> {
        let mut rightmost: Vec<Option<usize>> = vec![None; n + 1];
        for &(x, y) in &coords {
            if y > n {
                return Err(LatticeError::Switching(format!(
                    "element at ({x},{y}) lies above row {n}"
                )));
            }
            rightmost[y] = Some(rightmost[y].map_or(x, |r: usize| r.max(x)));
        }
        let rightmost = rightmost
            .into_iter()
            .enumerate()
            .map(|(m, r)| r.ok_or_else(|| LatticeError::Switching(format!("row {m} is empty"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SwitchEmbedding { coords, rightmost })
    }

    pub fn coords(&self) -> &[(usize, usize)] {
        &self.coords
    }

    pub fn at(&self, id: usize) -> (usize, usize) {
        self.coords[id]
    }

    /// `x_m`: x-coordinate of the rightmost element on row `m`.
    pub fn rightmost(&self) -> &[usize] {
        &self.rightmost
    }

    /// Height `n` of the spine.
    pub fn n(&self) -> usize {
        self.rightmost.len() - 1
    }

    fn lookup(&self) -> HashMap<(usize, usize), usize> {
        self.coords
            .iter()
            .enumerate()
            .map(|(id, &c)| (c, id))
            .collect()
    }
}

/// Checks the switching conditions and the staircase `x_0 ≤ … ≤ x_n`,
/// explaining the first failure.
pub fn validate_switching(
    l: &FiniteLattice,
    emb: &SwitchEmbedding,
    n: usize,
) -> Result<(), LatticeError> {
    let fail = |msg: String| Err(LatticeError::Switching(msg));
    if emb.coords.len() != l.len() {
        return fail(format!(
            "embedding has {} points for {} elements",
            emb.coords.len(),
            l.len()
        ));
    }
    if emb.n() != n {
        return fail(format!("embedding spans rows 0..={} not 0..={n}", emb.n()));
    }
    let lookup = emb.lookup();
    if lookup.len() != l.len() {
        return fail("two elements share a point".into());
    }
    if !l.is_semidistributive() {
        return fail("lattice is not semidistributive".into());
    }
    // spine
    let mut spine = Vec::with_capacity(n + 1);
    for m in 0..=n {
        match lookup.get(&(0, m)) {
            Some(&id) => spine.push(id),
            None => return fail(format!("(0,{m}) is missing")),
        }
    }
    for m in 1..=n {
        if !l.upper_covers(spine[m - 1]).contains(&spine[m]) {
            return fail(format!("(0,{}) is not covered by (0,{m})", m - 1));
        }
    }
    // cover directions
    for (lo, hi) in l.covers() {
        let (c1, d1) = emb.at(lo);
        let (c2, d2) = emb.at(hi);
        let vertical = c1 == c2 && d2 == d1 + 1;
        let horizontal = d1 == d2 && c2 > c1;
        if !vertical && !horizontal {
            return fail(format!(
                "cover ({c1},{d1}) < ({c2},{d2}) is neither up nor right"
            ));
        }
    }
    // same-row order
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (id, &(_, y)) in emb.coords.iter().enumerate() {
        rows[y].push(id);
    }
    for row in &rows {
        for &u in row {
            for &v in row {
                let by_x = emb.at(u).0 <= emb.at(v).0;
                if l.leq(u, v) != by_x {
                    return fail(format!(
                        "order of {:?} and {:?} disagrees with x",
                        emb.at(u),
                        emb.at(v)
                    ));
                }
            }
        }
    }
    if emb.rightmost.windows(2).any(|w| w[0] > w[1]) {
        return fail(format!(
            "right boundary {:?} is not a staircase",
            emb.rightmost
        ));
    }
    Ok(())
}

/// True when the embedding witnesses the n-switching property.
pub fn check_switching(l: &FiniteLattice, emb: &SwitchEmbedding, n: usize) -> bool {
    validate_switching(l, emb, n).is_ok()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    A,
    B,
}

/// `A * B` with provenance for every element.
#[derive(Debug, Clone)]
pub struct StarProduct {
    pub lattice: FiniteLattice,
    /// Which factor each element came from and its id there.
    pub provenance: Vec<(Side, usize)>,
    /// A's points as given, B's shifted right past A's boundary; this is
    /// again a switching embedding.
    pub embedding: SwitchEmbedding,
}

impl StarProduct {
    /// Element of the product coming from `(side, original id)`.
    pub fn element(&self, side: Side, id: usize) -> usize {
        let offset = self.provenance.iter().filter(|p| p.0 == Side::A).count();
        match side {
            Side::A => id,
            Side::B => offset + id,
        }
    }
}

/// Glues `A` under `B`: all covers of both, plus `(x_m, m)_A ⋖ (0, m)_B`.
///
/// Elements of `A` keep their ids; those of `B` follow.
pub fn star_compose(
    a: &FiniteLattice,
    emb_a: &SwitchEmbedding,
    b: &FiniteLattice,
    emb_b: &SwitchEmbedding,
    n: usize,
) -> Result<StarProduct, LatticeError> {
    validate_switching(a, emb_a, n)?;
    validate_switching(b, emb_b, n)?;
    let offset = a.len();
    let mut covers = a.covers();
    covers.extend(
        b.covers()
            .into_iter()
            .map(|(x, y)| (x + offset, y + offset)),
    );
    let lookup_a = emb_a.lookup();
    let lookup_b = emb_b.lookup();
    for m in 0..=n {
        let from = lookup_a[&(emb_a.rightmost[m], m)];
        let to = lookup_b[&(0, m)];
        covers.push((from, to + offset));
    }
    let lattice = FiniteLattice::from_covers(a.len() + b.len(), &covers)?;

    let shift = emb_a.rightmost.iter().copied().max().unwrap_or(0) + 1;
    let mut coords = emb_a.coords.clone();
    coords.extend(emb_b.coords.iter().map(|&(x, y)| (x + shift, y)));
    let embedding = SwitchEmbedding::new(coords, n)?;

    let mut provenance: Vec<(Side, usize)> = (0..a.len()).map(|i| (Side::A, i)).collect();
    provenance.extend((0..b.len()).map(|i| (Side::B, i)));
    Ok(StarProduct {
        lattice,
        provenance,
        embedding,
    })
}
