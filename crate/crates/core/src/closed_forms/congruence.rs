//! Solutions of `x_1 + x_2 ≡ a + b − 2 (mod a + 1)` on the representative
//! interval, as the explicit parity-cased families.
//!
//! Pairs are `(x_1, x_2)` with `x_1 ≤ x_2`. Half-integer offsets are handled
//! by working with doubled values.

use std::collections::BTreeSet;

use serde::Serialize;

use super::PredictionError;

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CongruenceSolutions {
    pub a: usize,
    pub b: usize,
    pub x1: Vec<(usize, usize)>,
    pub x2: Vec<(usize, usize)>,
    pub y1: Vec<(usize, usize)>,
    pub y2: Vec<(usize, usize)>,
    pub z1: Vec<(usize, usize)>,
    pub z2: Vec<(usize, usize)>,
}

impl CongruenceSolutions {
    /// The union selected by the parities of `a` and `b`.
    pub fn combined(&self) -> BTreeSet<(usize, usize)> {
        let (a, b) = (self.a, self.b);
        let parts: [&Vec<(usize, usize)>; 2] = if b == 0 {
            if a % 2 == 0 {
                [&self.x1, &self.x1]
            } else {
                [&self.x2, &self.x2]
            }
        } else {
            let y = if b % 2 == 1 { &self.y1 } else { &self.y2 };
            let z = if a % 2 == b % 2 { &self.z1 } else { &self.z2 };
            [y, z]
        };
        parts.iter().flat_map(|p| p.iter().copied()).collect()
    }

    /// Orbit size contributed by a pair.
    pub fn orbit_size(pair: (usize, usize)) -> usize {
        if pair.0 == pair.1 {
            pair.0 + 2
        } else {
            pair.0 + pair.1 + 4
        }
    }

    /// Ascending orbit sizes of `T_δ(a,b)` read off the solution pairs. For
    /// `b = 0` the orbit through `(a−1, a)` is not a pair and is added.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.combined().into_iter().map(Self::orbit_size).collect();
        if self.b == 0 {
            out.push(self.a + 2);
        }
        out.sort_unstable();
        out
    }
}

/// Exhaustive scan of `ε(b>0)(b−1) ≤ x_1 ≤ x_2 ≤ a+b−1`.
pub fn congruence_brute_force(a: usize, b: usize) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    if a + b == 0 {
        return out;
    }
    let lo = b.saturating_sub(1);
    let hi = a + b - 1;
    let target = (a + b) as i64 - 2;
    let modulus = a as i64 + 1;
    for x1 in lo..=hi {
        for x2 in x1..=hi {
            if ((x1 + x2) as i64 - target).rem_euclid(modulus) == 0 {
                out.insert((x1, x2));
            }
        }
    }
    out
}

/// Pairs `((c2 − 2m − o)/2, (c2 + 2m + o)/2)` for `m = 0..count`, from a
/// doubled centre `c2` and offset parity `o`.
fn family(c2: i64, odd: bool, count: i64) -> Vec<(usize, usize)> {
    let o = i64::from(odd);
    (0..count.max(0))
        .map(|m| {
            let lo = c2 - 2 * m - o;
            let hi = c2 + 2 * m + o;
            debug_assert!(lo % 2 == 0 && hi % 2 == 0 && lo >= 0);
            ((lo / 2) as usize, (hi / 2) as usize)
        })
        .collect()
}

pub fn congruence_solution_sets(
    a: usize,
    b: usize,
) -> Result<CongruenceSolutions, PredictionError> {
    if b > a {
        return Err(PredictionError::OutOfRange(format!(
            "need b <= a, got ({a},{b})"
        )));
    }
    let (ai, bi) = (a as i64, b as i64);
    let mut out = CongruenceSolutions {
        a,
        b,
        ..Default::default()
    };
    if a.is_multiple_of(2) {
        // centre a/2 − 1, m = 0..=(a−2)/2
        out.x1 = family(ai - 2, false, ai / 2);
    } else {
        // centre a/2 − 1 with half offsets, m = 0..=(a−3)/2
        out.x2 = family(ai - 2, true, (ai - 1) / 2);
    }
    if b % 2 == 1 {
        out.y1 = family(2 * ai + bi - 1, false, (bi + 1) / 2);
    } else {
        out.y2 = family(2 * ai + bi - 1, true, bi / 2);
    }
    // for b = 0 the X families take the place of Z
    if b > 0 && a % 2 == b % 2 {
        out.z1 = family(ai + bi - 2, false, (ai - bi) / 2 + 1);
    } else if b > 0 {
        out.z2 = family(ai + bi - 2, true, (ai - bi + 1) / 2);
    }
    Ok(out)
}
