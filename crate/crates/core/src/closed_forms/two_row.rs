//! Orbit census and ddeg sums for `T_{δ(k)}(a,b)`, and the explicit
//! rowmotion map of the δ = 0 member.

use serde::Serialize;

use super::PredictionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OrbitKind {
    O1,
    O2,
    O3,
    O4,
    /// `a + b < 2`: the singleton and the chains of two and three elements.
    Small,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitClass {
    pub kind: OrbitKind,
    pub count: usize,
    pub size: usize,
    pub ddeg: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoRowPrediction {
    pub a: usize,
    pub b: usize,
    /// `b = s(a+1) + r` with `0 ≤ r ≤ a`.
    pub s: usize,
    pub r: usize,
    pub classes: Vec<OrbitClass>,
}

impl TwoRowPrediction {
    /// Ascending orbit sizes.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .classes
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.size, c.count))
            .collect();
        out.sort_unstable();
        out
    }

    /// Sorted `(size, ddeg sum)` pairs, one per orbit.
    pub fn ddeg_multiset(&self) -> Vec<(usize, i64)> {
        let mut out: Vec<(usize, i64)> = self
            .classes
            .iter()
            .flat_map(|c| std::iter::repeat_n((c.size, c.ddeg), c.count))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn element_count(&self) -> usize {
        self.classes.iter().map(|c| c.count * c.size).sum()
    }
}

/// `⌈x / 2⌉` for `x ≥ −1`.
fn ceil_half(x: i64) -> usize {
    (x + 1).div_euclid(2) as usize
}

pub fn two_row_prediction(a: usize, b: usize) -> TwoRowPrediction {
    let s = b / (a + 1);
    let r = b % (a + 1);
    if a + b < 2 {
        let size = a + b + 1 + a;
        // (0,0), (0,1), (1,0) give sizes 1, 2, 3
        let size = match (a, b) {
            (0, 0) => 1,
            (0, 1) => 2,
            _ => size,
        };
        return TwoRowPrediction {
            a,
            b,
            s,
            r,
            classes: vec![OrbitClass {
                kind: OrbitKind::Small,
                count: 1,
                size,
                ddeg: size as i64 - 1,
            }],
        };
    }
    let (ai, bi, ri, si) = (a as i64, b as i64, r as i64, s as i64);
    let mut classes = Vec::new();
    let mut push = |kind, count: usize, size: i64, minus: i64| {
        if count > 0 {
            classes.push(OrbitClass {
                kind,
                count,
                size: size as usize,
                ddeg: 2 * size - minus,
            });
        }
    };
    push(
        OrbitKind::O1,
        ceil_half(ai - ri),
        ai + 2 * bi + 2 - ri,
        4 + 2 * si,
    );
    push(
        OrbitKind::O2,
        ceil_half(ri - 1),
        2 * ai + 2 * bi + 3 - ri,
        6 + 2 * si,
    );
    let a_even = a.is_multiple_of(2);
    let r_even = r.is_multiple_of(2);
    if r_even == a_even {
        // a, r both even or both odd
        push(OrbitKind::O3, 1, (ai - ri) / 2 + bi + 1, 2 + si);
    }
    if !r_even {
        push(OrbitKind::O4, 1, (3 - ri) / 2 + ai + bi, 3 + si);
    }
    TwoRowPrediction {
        a,
        b,
        s,
        r,
        classes,
    }
}

/// Rowmotion on `T_{δ(0)}(a,b)` in the coordinates `(x, y)`, `0 ≤ y ≤ a`,
/// `0 ≤ x ≤ y + b`; requires `a + b ≥ 2`.
pub fn two_row_rowmotion_formula(
    a: usize,
    b: usize,
    x: usize,
    y: usize,
) -> Result<(usize, usize), PredictionError> {
    if a + b < 2 || y > a || x > y + b {
        return Err(PredictionError::OutOfRange(format!(
            "({x},{y}) is not an element of T({a},{b}) or a + b < 2"
        )));
    }
    Ok(if x == 0 && y == 0 {
        (a + b, a)
    } else if x == 0 {
        (y + b - 1, y - 1)
    } else if y == 0 || x == y + b {
        (x - 1, a)
    } else {
        (x - 1, y - 1)
    })
}
