//! Pop-stack operators and rowmotion.

use fixedbitset::FixedBitSet;

use super::{FiniteLattice, LatticeError};

/// `x ∧ ⋀{y : y ⋖ x}`; the bottom maps to itself.
pub fn pop_down(l: &FiniteLattice, x: usize) -> usize {
    let covers = l.lower_covers(x);
    if covers.is_empty() {
        x
    } else {
        l.meet_all(covers)
    }
}

/// `x ∨ ⋁{y : y ⋗ x}`; the top maps to itself.
pub fn pop_up(l: &FiniteLattice, x: usize) -> usize {
    let covers = l.upper_covers(x);
    if covers.is_empty() {
        x
    } else {
        l.join_all(covers)
    }
}

/// The greatest `y` with `x ∧ y = Pop↓(x)`.
///
/// With `p = Pop↓(x)`, `x ∧ y = p` holds exactly when `y ≥ p` and `y` lies
/// above no atom of the interval `[p, x]`, and those atoms are the upper
/// covers of `p` below `x`.
pub fn rowmotion(l: &FiniteLattice, x: usize) -> Result<usize, LatticeError> {
    let p = pop_down(l, x);
    let mut bucket: FixedBitSet = l.above_set(p).clone();
    for &c in l.upper_covers(p) {
        if l.leq(c, x) {
            bucket.difference_with(l.above_set(c));
        }
    }
    l.greatest_in(&bucket).ok_or_else(|| {
        LatticeError::NotSemidistributive(format!(
            "{{y : {x} meet y = {p}}} has no greatest element"
        ))
    })
}

/// The least `y` with `x ∨ y = Pop↑(x)`.
pub fn rowmotion_inverse(l: &FiniteLattice, x: usize) -> Result<usize, LatticeError> {
    let q = pop_up(l, x);
    let mut bucket: FixedBitSet = l.below_set(q).clone();
    for &c in l.lower_covers(q) {
        if l.leq(x, c) {
            bucket.difference_with(l.below_set(c));
        }
    }
    l.least_in(&bucket).ok_or_else(|| {
        LatticeError::NotSemidistributive(format!("{{y : {x} join y = {q}}} has no least element"))
    })
}

/// Rowmotion tabulated on every element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowmotionMap {
    images: Vec<usize>,
}

impl RowmotionMap {
    /// Tabulates rowmotion and checks it against the inverse map.
    pub fn new(l: &FiniteLattice) -> Result<Self, LatticeError> {
        let images = (0..l.len())
            .map(|x| rowmotion(l, x))
            .collect::<Result<Vec<_>, _>>()?;
        for (x, &y) in images.iter().enumerate() {
            if rowmotion_inverse(l, y)? != x {
                return Err(LatticeError::RowmotionNotBijective);
            }
        }
        Ok(RowmotionMap { images })
    }

    /// Wraps a precomputed permutation, e.g. a closed-form prediction.
    pub fn from_images(images: Vec<usize>) -> Result<Self, LatticeError> {
        let mut seen = vec![false; images.len()];
        for &y in &images {
            if y >= images.len() || std::mem::replace(&mut seen[y], true) {
                return Err(LatticeError::RowmotionNotBijective);
            }
        }
        Ok(RowmotionMap { images })
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// `Row^d(x)`.
    pub fn power(&self, x: usize, d: usize) -> usize {
        (0..d).fold(x, |y, _| self.images[y])
    }
}

#[cfg(test)]
mod tests {
    use super::super::products;
    use super::super::tests::n5;
    use super::*;

    #[test]
    fn pop_on_extremes() {
        let l = n5();
        assert_eq!(pop_down(&l, l.bottom()), l.bottom());
        assert_eq!(pop_up(&l, l.top()), l.top());
        assert_eq!(pop_down(&l, 4), 0);
        assert_eq!(pop_up(&l, 0), 4);
    }

    #[test]
    fn rowmotion_matches_definition_by_scan() {
        let l = n5();
        for x in 0..l.len() {
            let p = pop_down(&l, x);
            let bucket: Vec<usize> = (0..l.len()).filter(|&y| l.meet(x, y) == p).collect();
            let r = rowmotion(&l, x).unwrap();
            assert!(bucket.contains(&r));
            assert!(bucket.iter().all(|&y| l.leq(y, r)));
        }
        let map = RowmotionMap::new(&l).unwrap();
        for x in 0..l.len() {
            assert_eq!(rowmotion_inverse(&l, map.apply(x)).unwrap(), x);
        }
    }

    #[test]
    fn singleton_is_fixed() {
        let l = FiniteLattice::from_covers(1, &[]).unwrap();
        assert_eq!(rowmotion(&l, 0).unwrap(), 0);
    }

    #[test]
    fn product_of_chains_decrements_coordinates() {
        for a in 1..=8 {
            for b in 1..=8 {
                let l = products::grid(&[a, b]);
                let map = RowmotionMap::new(&l).unwrap();
                for x in 0..a {
                    for y in 0..b {
                        let id = products::grid_index(&[a, b], &[x, y]);
                        let want =
                            products::grid_index(&[a, b], &[(x + a - 1) % a, (y + b - 1) % b]);
                        assert_eq!(map.apply(id), want, "C{a} x C{b} at ({x},{y})");
                    }
                }
            }
        }
    }

    #[test]
    fn from_images_rejects_non_permutations() {
        assert!(RowmotionMap::from_images(vec![1, 1]).is_err());
        assert!(RowmotionMap::from_images(vec![0, 2]).is_err());
        let m = RowmotionMap::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(m.power(0, 4), 1);
    }
}
