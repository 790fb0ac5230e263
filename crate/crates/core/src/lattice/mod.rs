//! Finite lattices given by their cover relation.
//!
//! Elements are `0..n`. Order queries go through reachability bitsets indexed
//! by position in a fixed linear extension (bottom first), so a meet is the
//! highest common position below both arguments and a join the lowest common
//! position above them.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub mod export;
pub mod orbits;
pub mod products;
pub mod rowmotion;
pub mod semidistributive;
pub mod switching;

pub use orbits::{orbit_decomposition, OrbitDecomposition};
pub use rowmotion::RowmotionMap;
pub use switching::{check_switching, star_compose, Side, StarProduct, SwitchEmbedding};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("cover ({0}, {1}) refers to an element outside 0..{2}")]
    InvalidIndex(usize, usize, usize),
    #[error("the cover relation has a cycle")]
    Cycle,
    #[error("cover {0} < {1} is implied by other covers")]
    RedundantCover(usize, usize),
    #[error("the poset is empty")]
    Empty,
    #[error("more than one minimal element ({0} and {1})")]
    NoBottom(usize, usize),
    #[error("more than one maximal element ({0} and {1})")]
    NoTop(usize, usize),
    #[error("elements {0} and {1} have no meet")]
    NoMeet(usize, usize),
    #[error("elements {0} and {1} have no join")]
    NoJoin(usize, usize),
    #[error("not semidistributive: {0}")]
    NotSemidistributive(String),
    #[error("rowmotion is not a bijection")]
    RowmotionNotBijective,
    #[error("switching property fails: {0}")]
    Switching(String),
}

/// Construction switches.
#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    /// Check that every pair has a meet (quadratic in the element count).
    pub verify_lattice: bool,
    /// Reject covers implied by transitivity.
    pub verify_covers: bool,
    /// Decide semidistributivity up front and keep the verdict.
    pub check_semidistributive: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            verify_lattice: true,
            verify_covers: true,
            check_semidistributive: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FiniteLattice {
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
    order: Vec<usize>,
    pos: Vec<usize>,
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    bottom: usize,
    top: usize,
    semidistributive: Option<bool>,
}

impl FiniteLattice {
    /// Builds a lattice with full verification.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        Self::with_options(n, covers, BuildOptions::default())
    }

    pub fn with_options(
        n: usize,
        covers: &[(usize, usize)],
        options: BuildOptions,
    ) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(x, y) in covers {
            if x >= n || y >= n {
                return Err(LatticeError::InvalidIndex(x, y, n));
            }
            if x == y {
                return Err(LatticeError::Cycle);
            }
            up[x].push(y);
            down[y].push(x);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }

        // Kahn's algorithm, smallest id first for a deterministic extension
        let mut indeg: Vec<usize> = down.iter().map(Vec::len).collect();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
        let minimal: Vec<usize> = heap.iter().map(|r| r.0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(x)) = heap.pop() {
            order.push(x);
            for &y in &up[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    heap.push(Reverse(y));
                }
            }
        }
        if order.len() != n {
            return Err(LatticeError::Cycle);
        }
        if minimal.len() > 1 {
            let mut m = minimal;
            m.sort_unstable();
            return Err(LatticeError::NoBottom(m[0], m[1]));
        }
        let maximal: Vec<usize> = (0..n).filter(|&x| up[x].is_empty()).collect();
        if maximal.len() > 1 {
            return Err(LatticeError::NoTop(maximal[0], maximal[1]));
        }

        let mut pos = vec![0; n];
        for (p, &x) in order.iter().enumerate() {
            pos[x] = p;
        }
        let mut below = vec![FixedBitSet::with_capacity(n); n];
        for &x in &order {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(pos[x]);
            for &c in &down[x] {
                set.union_with(&below[c]);
            }
            below[x] = set;
        }
        let mut above = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut set = FixedBitSet::with_capacity(n);
            set.insert(pos[x]);
            for &c in &up[x] {
                set.union_with(&above[c]);
            }
            above[x] = set;
        }

        if options.verify_covers {
            for y in 0..n {
                for &x in &down[y] {
                    for &z in &down[y] {
                        if z != x && below[z].contains(pos[x]) {
                            return Err(LatticeError::RedundantCover(x, y));
                        }
                    }
                }
            }
        }

        let mut lattice = FiniteLattice {
            bottom: order[0],
            top: order[n - 1],
            up,
            down,
            order,
            pos,
            below,
            above,
            semidistributive: None,
        };
        if options.verify_lattice {
            lattice.verify_meets()?;
        }
        if options.check_semidistributive {
            lattice.semidistributive = Some(semidistributive::check(&lattice).is_ok());
        }
        Ok(lattice)
    }

    fn verify_meets(&self) -> Result<(), LatticeError> {
        let n = self.len();
        let mut scratch = FixedBitSet::with_capacity(n);
        for x in 0..n {
            for y in x + 1..n {
                scratch.clone_from(&self.below[x]);
                scratch.intersect_with(&self.below[y]);
                let m = self.order[scratch.maximum().expect("bottom is common")];
                if !scratch.is_subset(&self.below[m]) {
                    return Err(LatticeError::NoMeet(x, y));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down[x]
    }

    /// All cover pairs `(x, y)` with `x ⋖ y`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .up
            .iter()
            .enumerate()
            .flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// The linear extension used internally, bottom first.
    pub fn linear_extension(&self) -> &[usize] {
        &self.order
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(self.pos[x])
    }

    /// Elements `≤ x`.
    pub fn down_set(&self, x: usize) -> Vec<usize> {
        self.below[x].ones().map(|p| self.order[p]).collect()
    }

    /// Elements `≥ x`.
    pub fn up_set(&self, x: usize) -> Vec<usize> {
        self.above[x].ones().map(|p| self.order[p]).collect()
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.try_meet(x, y).expect("lattice has all meets")
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.try_join(x, y).expect("lattice has all joins")
    }

    pub fn try_meet(&self, x: usize, y: usize) -> Result<usize, LatticeError> {
        let mut common = self.below[x].clone();
        common.intersect_with(&self.below[y]);
        self.greatest_in(&common).ok_or(LatticeError::NoMeet(x, y))
    }

    pub fn try_join(&self, x: usize, y: usize) -> Result<usize, LatticeError> {
        let mut common = self.above[x].clone();
        common.intersect_with(&self.above[y]);
        self.least_in(&common).ok_or(LatticeError::NoJoin(x, y))
    }

    /// Meet of a nonempty list.
    pub fn meet_all(&self, xs: &[usize]) -> usize {
        let mut common = self.below[xs[0]].clone();
        for &x in &xs[1..] {
            common.intersect_with(&self.below[x]);
        }
        self.greatest_in(&common).expect("lattice has all meets")
    }

    /// Join of a nonempty list.
    pub fn join_all(&self, xs: &[usize]) -> usize {
        let mut common = self.above[xs[0]].clone();
        for &x in &xs[1..] {
            common.intersect_with(&self.above[x]);
        }
        self.least_in(&common).expect("lattice has all joins")
    }

    /// Greatest element of a position-indexed set, if it has one.
    pub(crate) fn greatest_in(&self, set: &FixedBitSet) -> Option<usize> {
        let m = self.order[set.maximum()?];
        set.is_subset(&self.below[m]).then_some(m)
    }

    /// Least element of a position-indexed set, if it has one.
    pub(crate) fn least_in(&self, set: &FixedBitSet) -> Option<usize> {
        let m = self.order[set.minimum()?];
        set.is_subset(&self.above[m]).then_some(m)
    }

    pub(crate) fn below_set(&self, x: usize) -> &FixedBitSet {
        &self.below[x]
    }

    pub(crate) fn above_set(&self, x: usize) -> &FixedBitSet {
        &self.above[x]
    }

    /// Semidistributivity, from the construction-time verdict when present.
    pub fn is_semidistributive(&self) -> bool {
        self.semidistributive
            .unwrap_or_else(|| semidistributive::check(self).is_ok())
    }

    /// Like [`FiniteLattice::is_semidistributive`] but explains a failure.
    pub fn check_semidistributive(&self) -> Result<(), LatticeError> {
        match self.semidistributive {
            Some(true) => Ok(()),
            _ => semidistributive::check(self),
        }
    }

    /// Join-irreducible elements (exactly one lower cover).
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.down[x].len() == 1)
            .collect()
    }

    /// Meet-irreducible elements (exactly one upper cover).
    pub fn meet_irreducibles(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.up[x].len() == 1).collect()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    /// M3: bottom 0, atoms 1,2,3, top 4.
    pub(crate) fn m3() -> FiniteLattice {
        FiniteLattice::from_covers(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]).unwrap()
    }

    /// N5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
    pub(crate) fn n5() -> FiniteLattice {
        FiniteLattice::from_covers(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
    }

    #[test]
    fn basic_queries_on_n5() {
        let l = n5();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 4);
        assert!(l.leq(1, 2));
        assert!(!l.leq(3, 2));
        assert_eq!(l.meet(2, 3), 0);
        assert_eq!(l.join(1, 3), 4);
        assert_eq!(l.meet(1, 2), 1);
        assert_eq!(l.join_all(&[0, 1]), 1);
        assert_eq!(l.meet_all(&[2, 3, 4]), 0);
        assert_eq!(l.down_set(2), vec![0, 1, 2]);
    }

    #[test]
    fn rejects_non_lattices() {
        // two tops
        assert!(matches!(
            FiniteLattice::from_covers(3, &[(0, 1), (0, 2)]),
            Err(LatticeError::NoTop(1, 2))
        ));
        // bowtie: 0 < 2,3 and 1 < 2,3 with a common top and bottom
        let bowtie = [
            (0, 1),
            (0, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 5),
            (4, 5),
        ];
        assert!(matches!(
            FiniteLattice::from_covers(6, &bowtie),
            Err(LatticeError::NoMeet(..))
        ));
        assert!(matches!(
            FiniteLattice::from_covers(2, &[(0, 1), (1, 0)]),
            Err(LatticeError::Cycle)
        ));
        assert!(matches!(
            FiniteLattice::from_covers(3, &[(0, 1), (1, 2), (0, 2)]),
            Err(LatticeError::RedundantCover(0, 2))
        ));
        assert!(FiniteLattice::from_covers(0, &[]).is_err());
    }

    #[test]
    fn singleton_lattice() {
        let l = FiniteLattice::from_covers(1, &[]).unwrap();
        assert_eq!(l.bottom(), 0);
        assert_eq!(l.top(), 0);
        assert!(l.is_semidistributive());
    }

    #[test]
    fn brute_force_meet_and_join_agree() {
        let l = products::grid(&[3, 4]);
        let n = l.len();
        for x in 0..n {
            for y in 0..n {
                let lower: Vec<usize> = (0..n).filter(|&z| l.leq(z, x) && l.leq(z, y)).collect();
                let m = l.meet(x, y);
                assert!(lower.iter().all(|&z| l.leq(z, m)));
                let upper: Vec<usize> = (0..n).filter(|&z| l.leq(x, z) && l.leq(y, z)).collect();
                let j = l.join(x, y);
                assert!(upper.iter().all(|&z| l.leq(j, z)));
            }
        }
    }
}
