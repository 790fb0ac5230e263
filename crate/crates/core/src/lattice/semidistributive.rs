//! Semidistributivity test.
//!
//! A finite lattice is meet-semidistributive exactly when, for every cover
//! `p ⋖ c`, the set `{y : y ∧ c = p} = {y ≥ p : y ≱ c}` has a greatest
//! element; dually for joins. That gives one bitset pass per cover.

use fixedbitset::FixedBitSet;

use super::{FiniteLattice, LatticeError};

pub(crate) fn check(lattice: &FiniteLattice) -> Result<(), LatticeError> {
    let n = lattice.len();
    let mut bucket = FixedBitSet::with_capacity(n);
    for (p, c) in lattice.covers() {
        bucket.clone_from(lattice.above_set(p));
        bucket.difference_with(lattice.above_set(c));
        if lattice.greatest_in(&bucket).is_none() {
            return Err(LatticeError::NotSemidistributive(format!(
                "{{y : y meet {c} = {p}}} has no greatest element"
            )));
        }
        bucket.clone_from(lattice.below_set(c));
        bucket.difference_with(lattice.below_set(p));
        if lattice.least_in(&bucket).is_none() {
            return Err(LatticeError::NotSemidistributive(format!(
                "{{y : y join {p} = {c}}} has no least element"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::products;
    use super::super::tests::{m3, n5};
    use super::*;

    /// Direct definition over all triples.
    fn brute_force(l: &FiniteLattice) -> bool {
        let n = l.len();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if l.meet(x, y) == l.meet(x, z) && l.meet(x, l.join(y, z)) != l.meet(x, y) {
                        return false;
                    }
                    if l.join(x, y) == l.join(x, z) && l.join(x, l.meet(y, z)) != l.join(x, y) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn classic_small_lattices() {
        assert!(!m3().is_semidistributive());
        assert!(!brute_force(&m3()));
        assert!(n5().is_semidistributive());
        assert!(brute_force(&n5()));
        let g = products::grid(&[2, 3, 2]);
        assert!(g.is_semidistributive());
    }

    #[test]
    fn agrees_with_triple_definition() {
        let lattices = [
            // pentagon with doubled side
            FiniteLattice::from_covers(6, &[(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)])
                .unwrap(),
            // M3 with an extra element over atom 1
            FiniteLattice::from_covers(
                6,
                &[(0, 1), (0, 2), (0, 3), (1, 4), (4, 5), (2, 5), (3, 5)],
            )
            .unwrap(),
            m3(),
            n5(),
        ];
        for l in &lattices {
            assert_eq!(l.is_semidistributive(), brute_force(l));
        }
    }
}
