//! Orbit census and statistic sums for `H_{δ(k)}(a,b)`.

use num_integer::Integer;
use serde::Serialize;

use super::PredictionError;
use crate::Rational;

/// Orbits come in `g − 1` copies of size `ℓ` and one of size `ℓ + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookPrediction {
    pub a: usize,
    pub b: usize,
    pub k: usize,
    pub g: usize,
    pub l: usize,
    /// Ascending orbit sizes.
    pub orbit_sizes: Vec<usize>,
    /// Order of rowmotion.
    pub order: u128,
    /// `(sum on an orbit of size ℓ, sum on the orbit of size ℓ + 1)`.
    pub ddeg: (i64, i64),
    pub peak: (i64, i64),
    pub val: (i64, i64),
    /// Only stated for `k = b − 1` and `k = 0`.
    pub area: Option<(i64, i64)>,
}

impl HookPrediction {
    /// Expected `(size, sum)` multiset for a statistic table entry.
    pub fn size_sum_multiset(&self, sums: (i64, i64)) -> Vec<(usize, i64)> {
        let mut out = vec![(self.l, sums.0); self.g - 1];
        out.push((self.l + 1, sums.1));
        out.sort_unstable();
        out
    }
}

fn exact(r: Rational) -> i64 {
    assert!(r.is_integer(), "orbit sum {r} is not an integer");
    r.to_integer()
}

pub fn hook_prediction(a: usize, b: usize, k: usize) -> Result<HookPrediction, PredictionError> {
    if a == 0 || b == 0 || k >= b {
        return Err(PredictionError::OutOfRange(format!(
            "hook needs a, b >= 1 and 0 <= k < b, got ({a},{b},{k})"
        )));
    }
    let g = a.gcd(&b);
    let l = a.lcm(&b);
    let mut orbit_sizes = vec![l; g - 1];
    orbit_sizes.push(l + 1);
    let order = if g > 1 {
        (l as u128) * (l as u128 + 1)
    } else {
        l as u128 + 1
    };
    let (ai, bi, gi, li) = (a as i64, b as i64, g as i64, l as i64);
    let ddeg = (2 * ai * bi - ai - bi) / gi;
    let peak = (3 * ai * bi - 2 * ai - 2 * bi) / gi;
    let half = Rational::new(ai + bi - 2, 2);
    let area = if k == b - 1 {
        let o = exact(Rational::from(li) * (half + Rational::new(1, ai)));
        Some((o, o + ai - 1))
    } else if k == 0 {
        let o = exact(Rational::from(li) * half);
        Some((o, o + ai + bi - 1))
    } else {
        None
    };
    Ok(HookPrediction {
        a,
        b,
        k,
        g,
        l,
        orbit_sizes,
        order,
        ddeg: (ddeg, ddeg + 1),
        peak: (peak, peak + 2),
        val: (ddeg, ddeg + 1),
        area,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases() {
        let p = hook_prediction(2, 2, 0).unwrap();
        assert_eq!(p.orbit_sizes, vec![2, 3]);
        assert_eq!(p.ddeg, (2, 3));
        assert_eq!(p.order, 6);
        let p = hook_prediction(2, 3, 1).unwrap();
        assert_eq!(p.orbit_sizes, vec![7]);
        assert_eq!(p.order, 7);
        let p = hook_prediction(8, 6, 2).unwrap();
        assert_eq!((p.g, p.l), (2, 24));
        assert_eq!(p.orbit_sizes, vec![24, 25]);
        assert!(p.area.is_none());
    }

    #[test]
    fn sizes_sum_to_element_count() {
        for a in 1..=9 {
            for b in 1..=9 {
                let p = hook_prediction(a, b, 0).unwrap();
                assert_eq!(p.orbit_sizes.iter().sum::<usize>(), a * b + 1);
            }
        }
    }

    #[test]
    fn rejects_bad_k() {
        assert!(hook_prediction(3, 3, 3).is_err());
        assert!(hook_prediction(0, 3, 0).is_err());
    }
}
