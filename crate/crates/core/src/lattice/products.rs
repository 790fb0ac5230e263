//! Chains and products of chains.

use super::{BuildOptions, FiniteLattice};

/// Row-major index of `coords` in the product `C_{dims[0]} × C_{dims[1]} × …`.
pub fn grid_index(dims: &[usize], coords: &[usize]) -> usize {
    dims.iter().zip(coords).fold(0, |acc, (&d, &c)| acc * d + c)
}

/// Coordinates of a row-major index.
pub fn grid_coords(dims: &[usize], mut index: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Cover pairs of the product of chains with the given lengths.
pub fn grid_covers(dims: &[usize]) -> Vec<(usize, usize)> {
    let total: usize = dims.iter().product();
    let mut covers = Vec::new();
    for id in 0..total {
        let coords = grid_coords(dims, id);
        for axis in 0..dims.len() {
            if coords[axis] + 1 < dims[axis] {
                let mut next = coords.clone();
                next[axis] += 1;
                covers.push((id, grid_index(dims, &next)));
            }
        }
    }
    covers
}

/// Product of chains `C_{d_1} × … × C_{d_r}`, elements in row-major order.
///
/// Every entry of `dims` must be positive.
pub fn grid(dims: &[usize]) -> FiniteLattice {
    let total: usize = dims.iter().product();
    // a product of chains is distributive, so the expensive checks are skipped
    let options = BuildOptions {
        verify_lattice: false,
        verify_covers: false,
        check_semidistributive: false,
    };
    FiniteLattice::with_options(total, &grid_covers(dims), options)
        .expect("products of chains are lattices")
}

/// The chain `0 < 1 < … < n-1`.
pub fn chain(n: usize) -> FiniteLattice {
    grid(&[n])
}
