//! Predicted cover graphs, on the same coordinates the family builders use.

use std::collections::BTreeSet;

use super::PredictionError;

pub type Point = (usize, usize);
pub type CoverSet = BTreeSet<(Point, Point)>;

/// `H_{δ(k)}(a,b)` on `(s, t)`: the grid `C_a × C_b` whose square between
/// columns `a−2` and `a−1` at height `b−1−k` becomes a pentagon through the
/// extra column `a`. For `k = 0` the pentagon degenerates to one extra
/// vertex `(a, b−1)` over `(a−1, b−1)`; for `a = 1` the result is a chain.
pub fn hook_hasse_prediction(a: usize, b: usize, k: usize) -> Result<CoverSet, PredictionError> {
    if a == 0 || b == 0 || k >= b {
        return Err(PredictionError::OutOfRange(format!(
            "hook needs a, b >= 1 and 0 <= k < b, got ({a},{b},{k})"
        )));
    }
    let mut covers = CoverSet::new();
    if a == 1 {
        for t in 0..b - 1 {
            covers.insert(((0, t), (0, t + 1)));
        }
        covers.insert(((0, b - 1), (1, b - 1)));
        return Ok(covers);
    }
    let pivot = b - 1 - k;
    let exists = |s: usize, t: usize| -> bool {
        t < b && (s + 2 <= a || (s + 1 == a && t <= pivot) || (s == a && t >= pivot))
    };
    for s in 0..=a {
        for t in 0..b {
            if !exists(s, t) {
                continue;
            }
            if exists(s, t + 1) {
                covers.insert(((s, t), (s, t + 1)));
            }
            if s + 2 < a {
                covers.insert(((s, t), (s + 1, t)));
            } else if s + 2 == a {
                let right = if t <= pivot { a - 1 } else { a };
                covers.insert(((s, t), (right, t)));
            }
        }
    }
    covers.insert(((a - 1, pivot), (a, pivot)));
    Ok(covers)
}

/// `T_{δ(k)}(a,b)` on the planar embedding: row `y` carries the chain
/// `0, …, y+b−k` followed by `a+b−k+1, …, a+b`, with vertical edges between
/// equal columns of consecutive rows. For `k ≥ 1` this deforms the `k`-th
/// square from the right of each row into a pentagon.
pub fn two_row_hasse_prediction(a: usize, b: usize, k: usize) -> Result<CoverSet, PredictionError> {
    if k > b {
        return Err(PredictionError::OutOfRange(format!(
            "two-row needs 0 <= k <= b, got ({a},{b},{k})"
        )));
    }
    let row = |y: usize| -> Vec<usize> {
        let mut xs: Vec<usize> = (0..=y + b - k).collect();
        xs.extend(a + b - k + 1..=a + b);
        xs
    };
    let mut covers = CoverSet::new();
    for y in 0..=a {
        let xs = row(y);
        for w in xs.windows(2) {
            covers.insert(((w[0], y), (w[1], y)));
        }
        if y < a {
            let above: BTreeSet<usize> = row(y + 1).into_iter().collect();
            for &x in &xs {
                if above.contains(&x) {
                    covers.insert(((x, y), (x, y + 1)));
                }
            }
        }
    }
    Ok(covers)
}
